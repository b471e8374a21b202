use haff::affine::{
    assemble_template, diff_with_table, enumerate_generalized, extended_cartan, is_positive_semidefinite,
    published_table,
};
use haff::{GoldenInt, GroupId};

#[test]
fn published_rows_are_singular_except_four_h3_rows() {
    let mut nonsingular = Vec::new();
    for group in GroupId::NONCRYSTALLOGRAPHIC {
        for row in published_table(group).unwrap() {
            let m = assemble_template(group, &row).unwrap();
            let det = m.entries.det();
            if det != GoldenInt::ZERO {
                nonsingular.push((group, row, det));
            }
        }
    }
    assert_eq!(nonsingular.len(), 4, "{nonsingular:?}");
    for (group, _, det) in &nonsingular {
        assert_eq!(*group, GroupId::H3);
        assert_eq!(*det, GoldenInt::int(-8));
    }
}

#[test]
fn h3_enumeration_against_table() {
    let e = enumerate_generalized(GroupId::H3, 3).unwrap();
    let diff = diff_with_table(&e).unwrap();
    assert_eq!((diff.table_rows, diff.matched, diff.missing.len()), (20, 16, 4));
    assert!(diff.missing.iter().all(|m| m.det == GoldenInt::int(-8)));
    for c in &e.candidates {
        assert_eq!(c.matrix.entries.det(), GoldenInt::ZERO);
        assert_eq!(c.psd, is_positive_semidefinite(&c.matrix.entries));
    }
    let nonpositive = e.nonpositive();
    assert_eq!(nonpositive.len(), 1);
    assert_eq!(nonpositive[0].matrix, extended_cartan(GroupId::H3));
}
