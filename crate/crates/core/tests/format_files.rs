use subdeg::data::load_perm_group;
use subdeg::format::{parse_group_text, parse_perm_group_text, GroupFile};
use subdeg::Error;

const M11: &str = include_str!("../data/mathieu11.grp");

#[test]
fn bundled_files_match_their_order_headers() {
    for (name, order) in [("mathieu11.grp", 7920u128), ("mathieu23.grp", 10200960), ("mathieu24.grp", 244823040)] {
        assert_eq!(load_perm_group(name, None).unwrap().order(), order, "{name}");
    }
}

#[test]
fn tampered_generator_is_an_order_mismatch() {
    let tampered = M11.replace("(3 7 11 8)", "(3 7 8 11)");
    assert_ne!(tampered, M11);
    match parse_perm_group_text(&tampered) {
        Err(Error::OrderMismatch { expected: 7920, computed }) => assert_ne!(computed, 7920),
        other => panic!("expected order mismatch, got {other:?}"),
    }
}

#[test]
fn sym3_two_lines() {
    let g = parse_perm_group_text("degree 3\ngen (1 2)\ngen (1 2 3)\n").unwrap();
    assert_eq!(g.order(), 6);
}

#[test]
fn matrix_files_are_recognized() {
    let text = "field 3\ndim 2\ngen [[1,1],[0,1]]\ngen [[0,1],[2,0]]\norder 24\n";
    match parse_group_text(text).unwrap() {
        GroupFile::Mat(g) => assert_eq!(g.order(), 24),
        GroupFile::Perm(_) => panic!("wrong grammar"),
    }
}

#[test]
fn singular_generators_are_rejected() {
    assert!(parse_group_text("field 2\ndim 2\ngen [[1,1],[1,1]]\n").is_err());
}
