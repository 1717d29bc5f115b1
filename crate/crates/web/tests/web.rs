use serde_json::Value;
use wurst::sset::constructions::{boundary, standard_simplex};
use wurst_web::{mapping_spaces, q_complex, space_homology};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn q_square_is_acyclic() {
    let v = parse(q_complex(1, 1, 3));
    assert_eq!(v["nondegenerate"], serde_json::json!([4, 5, 2, 0]));
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["homology"][0]["group"], "Z");
    assert_eq!(v["homology"][1]["group"], "0");
}

#[test]
fn q_rejects_large_input() {
    assert!(parse(q_complex(4, 4, 3))["error"].is_string());
    assert!(parse(q_complex(1, 1, 0))["error"].is_string());
}

#[test]
fn circle_homology() {
    let v = parse(space_homology(&boundary(2, 3).to_json(), 2));
    let groups: Vec<&str> = v["homology"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["group"].as_str().unwrap())
        .collect();
    assert_eq!(groups, ["Z", "Z", "0"]);
}

#[test]
fn homology_errors_are_json() {
    assert!(parse(space_homology("not json", 0))["error"].is_string());
    assert!(parse(space_homology(&boundary(2, 2).to_json(), 2))["error"].is_string());
}

#[test]
fn mapping_spaces_of_an_edge_are_points() {
    let v = parse(mapping_spaces(&standard_simplex(1, 3).to_json(), 0, 1, 2));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        assert_eq!(r["nondegenerate"][0], 1, "{r}");
        assert_eq!(r["homology"][0]["group"], "Z");
    }
    // No maps backwards along the edge.
    let back = parse(mapping_spaces(&standard_simplex(1, 3).to_json(), 1, 0, 2));
    assert_eq!(back[0]["nondegenerate"][0], 0);
}

#[test]
fn page_default_input_is_an_edge() {
    let page = include_str!("../www/index.html");
    let start = page.find("JSON.stringify({").unwrap() + "JSON.stringify(".len();
    let end = start + page[start..].find(");\n").unwrap();
    let x = wurst::SimplicialSet::from_json(&page[start..end]).unwrap();
    assert!(x.is_isomorphic(&standard_simplex(1, 3)).is_some());
}
