//! Small concrete algebras and Rota-Baxter operator families used across the
//! test suite and the self-test battery.

use crate::algebra::LyAlgebra;
use crate::linalg::Mat;
use crate::scalar::{rat_int, Rat};
use num_traits::Zero;

/// The 2-dimensional algebra with nontrivial brackets
/// `[e1, e2] = e1` and `⟦e1, e2, e2⟧ = e1`.
pub fn two_dim() -> LyAlgebra {
    LyAlgebra::from_brackets(
        2,
        &[(0, 1, vec![rat_int(1), rat_int(0)])],
        &[(0, 1, 1, vec![rat_int(1), rat_int(0)])],
    )
    .expect("fixture is well-formed")
}

/// The Rota-Baxter family `[[0, a], [0, b]]` on [`two_dim`] (columns are
/// images of the basis: the first basis vector maps to zero).
pub fn two_dim_rb(a: &Rat, b: &Rat) -> Mat {
    let mut m = Mat::zero(2, 2);
    m.set(0, 1, a.clone());
    m.set(1, 1, b.clone());
    m
}

/// The 4-dimensional algebra with nontrivial brackets
/// `[e1, e2] = 2 e4` and `⟦e1, e2, e1⟧ = e4`.
pub fn four_dim() -> LyAlgebra {
    LyAlgebra::from_brackets(
        4,
        &[(0, 1, vec![rat_int(0), rat_int(0), rat_int(0), rat_int(2)])],
        &[(
            0,
            1,
            0,
            vec![rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
        )],
    )
    .expect("fixture is well-formed")
}

/// The Rota-Baxter pattern on [`four_dim`]:
///
/// ```text
/// [ 0   a12  0    0   ]
/// [ 0   0    0    0   ]
/// [ a31 a32  a33  a34 ]
/// [ a41 a42  a43  a44 ]
/// ```
///
/// `entries` is `[a12, a31, a32, a33, a34, a41, a42, a43, a44]`.
pub fn four_dim_rb(entries: &[Rat; 9]) -> Mat {
    let z = Rat::zero;
    Mat::from_rows(&[
        vec![z(), entries[0].clone(), z(), z()],
        vec![z(), z(), z(), z()],
        vec![
            entries[1].clone(),
            entries[2].clone(),
            entries[3].clone(),
            entries[4].clone(),
        ],
        vec![
            entries[5].clone(),
            entries[6].clone(),
            entries[7].clone(),
            entries[8].clone(),
        ],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis_vec;
    use crate::scalar::rat;

    #[test]
    fn fixture_brackets_match_their_definitions() {
        let g2 = two_dim();
        let e = |i| basis_vec(2, i);
        assert_eq!(g2.eval_binary(&e(0), &e(1)).unwrap(), e(0));
        assert_eq!(g2.eval_ternary(&e(0), &e(1), &e(1)).unwrap(), e(0));
        // Skew consequences.
        assert_eq!(
            g2.eval_binary(&e(1), &e(0)).unwrap(),
            vec![rat(-1, 1), rat_int(0)]
        );
        assert!(g2
            .eval_ternary(&e(0), &e(0), &e(1))
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));

        let g4 = four_dim();
        let f = |i| basis_vec(4, i);
        let mut two_e4 = basis_vec(4, 3);
        two_e4[3] = rat_int(2);
        assert_eq!(g4.eval_binary(&f(0), &f(1)).unwrap(), two_e4);
        assert_eq!(g4.eval_ternary(&f(0), &f(1), &f(0)).unwrap(), f(3));
    }
}
