use std::path::PathBuf;

use pentgeom::graphs::Girth;
use pentgeom::pent::{deficiency_graph, dist3_analysis, verify, GeometryType};
use pentgeom::{develop, parse_pent_file, write_pent_file, Geometry, GeometryJson};

fn fixtures() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut out: Vec<(String, String)> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "pent"))
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p.file_name().unwrap().to_string_lossy().into_owned(), text)
        })
        .collect();
    out.sort();
    out
}

/// `(v, b)` from the `# PENT(..), v = V, b = B` comment line.
fn header_counts(text: &str) -> (usize, usize) {
    let line = text.lines().next().unwrap();
    let num = |key: &str| -> usize {
        let rest = &line[line.find(key).unwrap() + key.len()..];
        rest.chars()
            .take_while(char::is_ascii_digit)
            .collect::<String>()
            .parse()
            .unwrap()
    };
    (num("v = "), num("b = "))
}

#[test]
fn every_fixture_verifies() {
    let all = fixtures();
    assert_eq!(all.len(), 19);
    for (name, text) in all {
        let file = parse_pent_file(&text).unwrap();
        let g = develop(&file).unwrap();
        let rep = verify(&g);
        assert!(rep.is_valid(), "{name}: {:?}", rep.errors);
        assert_eq!((g.v(), g.num_lines()), header_counts(&text), "{name}");
        assert_eq!(g.num_lines(), g.params().b, "{name}");
        let expected = match (rep.deficiency.girth.at_least(5), rep.deficiency.connected) {
            (true, true) => GeometryType::A,
            (true, false) => GeometryType::B,
            (false, true) => GeometryType::C,
            (false, false) => rep.geometry_type,
        };
        assert_eq!(rep.geometry_type, expected, "{name}");
        assert!(
            rep.overlap_profile.as_ref().unwrap().forbidden.is_none(),
            "{name}"
        );
    }
}

#[test]
fn write_then_parse_is_identity() {
    for (name, text) in fixtures() {
        let file = parse_pent_file(&text).unwrap();
        let again = parse_pent_file(&write_pent_file(&file)).unwrap();
        assert_eq!(file, again, "{name}");
    }
}

#[test]
fn json_round_trip() {
    for (name, text) in fixtures().into_iter().take(6) {
        let g = develop(&parse_pent_file(&text).unwrap()).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GeometryJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Geometry::from_json(&back).unwrap(), g, "{name}");
    }
}

#[test]
fn distance_three_degree_bound() {
    for (name, text) in fixtures() {
        let g = develop(&parse_pent_file(&text).unwrap()).unwrap();
        if g.v() > 200 {
            continue;
        }
        let d = deficiency_graph(&g).unwrap();
        let a = dist3_analysis(&g, &d).unwrap();
        let p = g.params();
        let bound = p.r as i64 * (p.k as i64 - 1) - (p.w * (p.w - 1)) as i64;
        assert_eq!(a.bound, bound, "{name}");
        assert!(a.min_degree as i64 >= bound, "{name}");
        if pentgeom::graphs::girth(&d).at_least(5) {
            assert!(a.equality, "{name}");
            assert_eq!(
                (a.min_degree as i64, a.max_degree as i64),
                (bound, bound),
                "{name}"
            );
        }
    }
}

#[test]
fn girth_four_fixtures() {
    let girth4: Vec<String> = fixtures()
        .into_iter()
        .filter(|(_, text)| {
            let g = develop(&parse_pent_file(text).unwrap()).unwrap();
            verify(&g).deficiency.girth == Girth::Cycle(4)
        })
        .map(|(n, _)| n)
        .collect();
    for f in ["pent_3_25_9.pent", "pent_3_72_9.pent", "pent_7_50_49.pent"] {
        assert!(girth4.iter().any(|n| n == f), "{f} should have girth 4");
    }
}
