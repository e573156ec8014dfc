use rcop_toric_web::{basis_text, check_graph, matrix_text};

const PAW: &str = include_str!("../../../data/paw.json");
const FRETS: &str = include_str!("../../../data/frets_heads.json");

#[test]
fn check_reports_verdicts() {
    let v: serde_json::Value = serde_json::from_str(&check_graph(PAW).unwrap()).unwrap();
    assert_eq!(v["rcop"], true);
    assert_eq!(v["block"], true);
    assert_eq!(v["generators"], serde_json::json!(["(1 2)"]));
    let v: serde_json::Value = serde_json::from_str(&check_graph(FRETS).unwrap()).unwrap();
    assert_eq!(v["block"], false);
}

#[test]
fn matrix_and_basis_text() {
    let m = matrix_text(PAW, "endpoint").unwrap();
    assert!(m.starts_with("         11 12 13 14 22 23 24 33 34 44\n"));
    assert!(matrix_text(PAW, "diagonal").is_err());
    let b = basis_text(PAW).unwrap();
    assert_eq!(b.lines().count(), 6);
    assert_eq!(b.lines().next(), Some("(1,1)-(2,2)"));
}

#[test]
fn errors_are_messages() {
    assert!(check_graph("{").unwrap_err().contains("syntax"));
    assert!(basis_text(FRETS).unwrap_err().contains("not a block graph"));
}
