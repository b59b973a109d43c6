//! Built-in example presentations used by tests, the CLI selftest, and the
//! shipped fixture files.

use crate::presentation::MonoidPresentation;

/// Braid monoid on 3 strands (Coxeter type A2): one relation s1s2s1 = s2s1s2.
pub fn b3() -> MonoidPresentation {
    MonoidPresentation::from_rows("B3", &["s1", "s2"], &[&[1, 3], &[3, 1]]).unwrap()
}

/// Braid monoid on 4 strands (Coxeter type A3).
pub fn b4() -> MonoidPresentation {
    MonoidPresentation::from_rows(
        "B4",
        &["s1", "s2", "s3"],
        &[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]],
    )
    .unwrap()
}

/// Dihedral Artin monoid I2(m): two generators with ⟨st⟩^m = ⟨ts⟩^m.
pub fn i2(m: u32) -> MonoidPresentation {
    assert!(m >= 2);
    MonoidPresentation::from_rows(&format!("I2({m})"), &["s1", "s2"], &[&[1, m], &[m, 1]]).unwrap()
}

/// Free monoid on `n` generators (all cross entries ∞).
pub fn free_monoid(n: usize) -> MonoidPresentation {
    assert!(n >= 1);
    let names: Vec<String> = (1..=n).map(|k| format!("a{k}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect();
    let row_refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
    MonoidPresentation::from_rows(
        &if n == 1 {
            "N".to_string()
        } else {
            format!("F{n}")
        },
        &name_refs,
        &row_refs,
    )
    .unwrap()
}

/// Right-angled Artin monoid on a path: a1–a2 and a2–a3 commute, a1 and a3
/// generate a free submonoid.
pub fn raam_rank3() -> MonoidPresentation {
    MonoidPresentation::from_rows(
        "RAAM-P3",
        &["a1", "a2", "a3"],
        &[&[1, 2, 0], &[2, 1, 2], &[0, 2, 1]],
    )
    .unwrap()
}

/// Affine triangle: three generators, all pairwise m = 3. Not finite type;
/// the triple of atoms has no common right multiple.
pub fn a2_tilde() -> MonoidPresentation {
    MonoidPresentation::from_rows(
        "A2~",
        &["s1", "s2", "s3"],
        &[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]],
    )
    .unwrap()
}
