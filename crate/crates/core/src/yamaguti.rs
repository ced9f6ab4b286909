//! The classical coboundary operator of a Lie-Yamaguti algebra with
//! coefficients in a representation, and cohomology dimensions from exact
//! ranks.
//!
//! Cochain levels: a level-1 cochain is a linear map `g → V`; a level-`(n+1)`
//! cochain (`n ≥ 1`) is a pair over `(∧²g)⊗n` and `(∧²g)⊗n ⊗ g`. In terms of
//! the graded degree of [`Cochain`], `level = degree + 1`. Cohomology groups
//! are defined for levels `≥ 2`, with the level-2 coboundary space taken as
//! the image of the level-1 cochains.

use crate::algebra::{LyAlgebra, Representation};
use crate::cochain::{multi_indices, Cochain};
use crate::error::LyError;
use crate::limits::Limits;
use crate::linalg::{rank, vaxpy, vsub_assign, vzero, Mat};
use crate::scalar::Rat;
use crate::wedge::WedgeBasis;
use num_traits::Zero;

fn check_value_cochain(alg: &LyAlgebra, rep: &Representation, f: &Cochain) -> Result<(), LyError> {
    if f.domain_dim != alg.dim || f.codomain_dim != rep.module_dim {
        return Err(LyError::SpaceMismatch(format!(
            "cochain on dim {} with values in dim {}, expected {} and {}",
            f.domain_dim, f.codomain_dim, alg.dim, rep.module_dim
        )));
    }
    Ok(())
}

/// Coordinates of `⟦x_k, y_k, ·⟧ ∘ X_l`, the wedge obtained by acting on the
/// wedge `X_l` leg by leg.
fn wedge_circle(
    alg: &LyAlgebra,
    w: &WedgeBasis,
    k_pair: (usize, usize),
    l_pair: (usize, usize),
) -> Vec<(usize, Rat)> {
    let (a, b) = k_pair;
    let (c, d) = l_pair;
    let mut out = w.decompose_vec_basis(alg.ternary_at(a, b, c), d);
    out.extend(w.decompose_basis_vec(c, alg.ternary_at(a, b, d)));
    out
}

/// The coboundary of a cochain of level `degree + 1`, with values in the
/// representation module.
pub fn coboundary(alg: &LyAlgebra, rep: &Representation, f: &Cochain) -> Result<Cochain, LyError> {
    check_value_cochain(alg, rep, f)?;
    let n_dim = alg.dim;
    let m_dim = rep.module_dim;
    let w = WedgeBasis::new(n_dim);
    let p = f.degree;
    let mut out = Cochain::zero(p + 1, n_dim, m_dim);

    if p == 0 {
        // Level 1 → level 2.
        for (idx, &(x, y)) in w.pairs.iter().enumerate() {
            // ρ(x) f(y) − ρ(y) f(x) − f([x, y])
            let mut fe = rep.rho_at(x).mul_vec(f.map0(y));
            vsub_assign(&mut fe, &rep.rho_at(y).mul_vec(f.map0(x)));
            vsub_assign(&mut fe, &f.apply0(alg.binary_at(x, y)));
            out.set_f(&[idx], &fe);
            for z in 0..n_dim {
                // D(x,y) f(z) + μ(y,z) f(x) − μ(x,z) f(y) − f(⟦x,y,z⟧)
                let mut ge = rep.d_at(x, y).mul_vec(f.map0(z));
                let mut t = rep.mu_at(y, z).mul_vec(f.map0(x));
                for (o, v) in ge.iter_mut().enumerate() {
                    *v += &t[o];
                }
                t = rep.mu_at(x, z).mul_vec(f.map0(y));
                vsub_assign(&mut ge, &t);
                vsub_assign(&mut ge, &f.apply0(alg.ternary_at(x, y, z)));
                out.set_g(&[idx], z, &ge);
            }
        }
        return Ok(out);
    }

    // Level n+1 → level n+2 for n = p ≥ 1.
    let neg_pow_n = |v: Vec<Rat>| -> Vec<Rat> {
        if p % 2 == 0 {
            v
        } else {
            v.into_iter().map(|c| -c).collect()
        }
    };

    for multi in multi_indices(w.len(), p + 1) {
        let last = multi[p];
        let (x_last, y_last) = w.pair(last);
        let head = &multi[..p];

        // I-component.
        let mut fe = {
            // ρ(x_{n+1}) g(head, y_{n+1}) − ρ(y_{n+1}) g(head, x_{n+1})
            //   − g(head, [x_{n+1}, y_{n+1}])
            let mut v = rep.rho_at(x_last).mul_vec(f.g_at(head, y_last));
            vsub_assign(&mut v, &rep.rho_at(y_last).mul_vec(f.g_at(head, x_last)));
            let mut br = vzero(m_dim);
            for (k, c) in alg.binary_at(x_last, y_last).iter().enumerate() {
                if !c.is_zero() {
                    vaxpy(&mut br, c, f.g_at(head, k));
                }
            }
            vsub_assign(&mut v, &br);
            neg_pow_n(v)
        };
        // Σ_k (−1)^{k+1} D(X_k) f(multi minus slot k)
        for k in 0..p {
            let mut rest: Vec<usize> = Vec::with_capacity(p);
            rest.extend_from_slice(&multi[..k]);
            rest.extend_from_slice(&multi[k + 1..]);
            let (a, b) = w.pair(multi[k]);
            let val = rep.d_at(a, b).mul_vec(f.f_at(&rest));
            let sign = if k % 2 == 0 {
                Rat::from_integer(1.into())
            } else {
                Rat::from_integer((-1).into())
            };
            vaxpy(&mut fe, &sign, &val);
        }
        // Σ_{k<l} (−1)^{k+1·…} f(…, X_k ∘ X_l at slot l, …) with slot k removed.
        for k in 0..p + 1 {
            for l in k + 1..p + 1 {
                let circ = wedge_circle(alg, &w, w.pair(multi[k]), w.pair(multi[l]));
                // Slots: multi without k, with slot l carrying the dense wedge.
                let mut slots: Vec<crate::cochain::WSlot> = Vec::with_capacity(p);
                for (t, &mi) in multi.iter().enumerate() {
                    if t == k {
                        continue;
                    }
                    if t == l {
                        slots.push(crate::cochain::WSlot::D(&circ));
                    } else {
                        slots.push(crate::cochain::WSlot::B(mi));
                    }
                }
                let val = f.eval_f(&slots);
                // Paper's k is 1-based: sign (−1)^k = (−1)^{k0+1}.
                let sign = if k % 2 == 0 {
                    Rat::from_integer((-1).into())
                } else {
                    Rat::from_integer(1.into())
                };
                vaxpy(&mut fe, &sign, &val);
            }
        }
        out.set_f(&multi, &fe);

        // II-component.
        for z in 0..n_dim {
            let mut ge = {
                // μ(y_{n+1}, z) g(head, x_{n+1}) − μ(x_{n+1}, z) g(head, y_{n+1})
                let mut v = rep.mu_at(y_last, z).mul_vec(f.g_at(head, x_last));
                vsub_assign(&mut v, &rep.mu_at(x_last, z).mul_vec(f.g_at(head, y_last)));
                neg_pow_n(v)
            };
            // Σ_{k=1}^{n+1} (−1)^{k+1} D(X_k) g(multi minus k, z)
            for k in 0..p + 1 {
                let mut rest: Vec<usize> = Vec::with_capacity(p);
                rest.extend_from_slice(&multi[..k]);
                rest.extend_from_slice(&multi[k + 1..]);
                let (a, b) = w.pair(multi[k]);
                let val = rep.d_at(a, b).mul_vec(f.g_at(&rest, z));
                let sign = if k % 2 == 0 {
                    Rat::from_integer(1.into())
                } else {
                    Rat::from_integer((-1).into())
                };
                vaxpy(&mut ge, &sign, &val);
            }
            // Σ_{k<l} (−1)^k g(…, X_k ∘ X_l, …, z)
            for k in 0..p + 1 {
                for l in k + 1..p + 1 {
                    let circ = wedge_circle(alg, &w, w.pair(multi[k]), w.pair(multi[l]));
                    let mut slots: Vec<crate::cochain::WSlot> = Vec::with_capacity(p);
                    for (t, &mi) in multi.iter().enumerate() {
                        if t == k {
                            continue;
                        }
                        if t == l {
                            slots.push(crate::cochain::WSlot::D(&circ));
                        } else {
                            slots.push(crate::cochain::WSlot::B(mi));
                        }
                    }
                    let val = f.eval_g(&slots, &crate::cochain::VSlot::B(z));
                    let sign = if k % 2 == 0 {
                        Rat::from_integer((-1).into())
                    } else {
                        Rat::from_integer(1.into())
                    };
                    vaxpy(&mut ge, &sign, &val);
                }
            }
            // Σ_{k=1}^{n+1} (−1)^k g(multi minus k, ⟦x_k, y_k, z⟧)
            for k in 0..p + 1 {
                let mut rest: Vec<usize> = Vec::with_capacity(p);
                rest.extend_from_slice(&multi[..k]);
                rest.extend_from_slice(&multi[k + 1..]);
                let (a, b) = w.pair(multi[k]);
                let slots: Vec<crate::cochain::WSlot> =
                    rest.iter().map(|&t| crate::cochain::WSlot::B(t)).collect();
                let val = f.eval_g(&slots, &crate::cochain::VSlot::D(alg.ternary_at(a, b, z)));
                let sign = if k % 2 == 0 {
                    Rat::from_integer((-1).into())
                } else {
                    Rat::from_integer(1.into())
                };
                vaxpy(&mut ge, &sign, &val);
            }
            out.set_g(&multi, z, &ge);
        }
    }
    Ok(out)
}

/// Dimension of the space of level-`level` cochains.
pub fn cochain_space_dim(alg_dim: usize, module_dim: usize, level: usize) -> usize {
    assert!(level >= 1);
    if level == 1 {
        return alg_dim * module_dim;
    }
    let wp = Cochain::wedge_power(alg_dim, level - 1);
    wp * module_dim + wp * alg_dim * module_dim
}

/// The `idx`-th canonical basis cochain of the given level.
pub fn basis_cochain(alg_dim: usize, module_dim: usize, level: usize, idx: usize) -> Cochain {
    let mut c = Cochain::zero(level - 1, alg_dim, module_dim);
    let flen = c.f.len();
    if idx < flen {
        c.f[idx] = num_traits::One::one();
    } else {
        c.g[idx - flen] = num_traits::One::one();
    }
    c
}

/// Flattens a cochain into the canonical coordinate order (I-part then
/// II-part).
pub fn flatten_cochain(c: &Cochain) -> Vec<Rat> {
    let mut v = Vec::with_capacity(c.f.len() + c.g.len());
    v.extend(c.f.iter().cloned());
    v.extend(c.g.iter().cloned());
    v
}

/// The matrix of the coboundary map from level `level` to `level + 1` in the
/// canonical bases.
pub fn coboundary_matrix(
    alg: &LyAlgebra,
    rep: &Representation,
    level: usize,
    limits: &Limits,
) -> Result<Mat, LyError> {
    let dom = cochain_space_dim(alg.dim, rep.module_dim, level);
    let cod = cochain_space_dim(alg.dim, rep.module_dim, level + 1);
    limits.check_entries(dom.max(1) * cod.max(1), "coboundary matrix")?;
    let mut m = Mat::zero(cod, dom);
    for j in 0..dom {
        let b = basis_cochain(alg.dim, rep.module_dim, level, j);
        let db = coboundary(alg, rep, &b)?;
        for (i, v) in flatten_cochain(&db).into_iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    Ok(m)
}

/// `(dim Z, dim B, dim H)` at the given level (`≥ 2`); the coboundary space
/// at level 2 is the image of the level-1 cochains.
pub fn cohomology_dims(
    alg: &LyAlgebra,
    rep: &Representation,
    level: usize,
    limits: &Limits,
) -> Result<(usize, usize, usize), LyError> {
    if level < 2 {
        return Err(LyError::Level {
            level,
            reason: "cohomology groups are defined for levels >= 2".into(),
        });
    }
    limits.check_level(level)?;
    let out_rank = rank(&coboundary_matrix(alg, rep, level, limits)?);
    let z = cochain_space_dim(alg.dim, rep.module_dim, level) - out_rank;
    let b = rank(&coboundary_matrix(alg, rep, level - 1, limits)?);
    Ok((z, b, z - b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjoint_representation;
    use crate::fixtures;
    use crate::sampling;

    #[test]
    fn coboundary_of_zero_is_zero() {
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        for p in 0..=2 {
            let z = Cochain::zero(p, 2, 2);
            assert!(coboundary(&alg, &adj, &z).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_squares_to_zero_for_general_representations() {
        // Adjoint on both fixtures, the zero representation, and the induced
        // module of the semidirect construction all satisfy δ∘δ = 0.
        let mut r = sampling::rng(6);
        let cases = [
            (fixtures::two_dim(), None),
            (fixtures::four_dim(), None),
            (fixtures::two_dim(), Some(3usize)),
        ];
        for (alg, zero_dim) in cases {
            let rep = match zero_dim {
                None => adjoint_representation(&alg),
                Some(m) => Representation::zero(&alg, m),
            };
            for p in 0..=1usize {
                let f = sampling::cochain(&mut r, p, alg.dim, rep.module_dim);
                let df = coboundary(&alg, &rep, &f).unwrap();
                let ddf = coboundary(&alg, &rep, &df).unwrap();
                assert!(ddf.is_zero(), "dim {} degree {p}", alg.dim);
            }
        }
    }

    #[test]
    fn abelian_zero_rep_has_full_cohomology() {
        let alg = LyAlgebra::abelian(3);
        let rep = Representation::zero(&alg, 2);
        let limits = Limits::default();
        for level in 2..=3 {
            let (z, b, h) = cohomology_dims(&alg, &rep, level, &limits).unwrap();
            let c = cochain_space_dim(3, 2, level);
            assert_eq!((z, b, h), (c, 0, c));
        }
    }

    #[test]
    fn rank_nullity_holds_at_every_level() {
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        let limits = Limits::default();
        for level in 1..=3 {
            let m = coboundary_matrix(&alg, &adj, level, &limits).unwrap();
            let c = cochain_space_dim(2, 2, level);
            assert_eq!(m.cols, c);
            let z = c - rank(&m);
            assert_eq!(z + rank(&m), c);
        }
    }

    #[test]
    fn level_and_cap_errors() {
        let alg = fixtures::two_dim();
        let adj = adjoint_representation(&alg);
        assert!(matches!(
            cohomology_dims(&alg, &adj, 1, &Limits::default()),
            Err(LyError::Level { .. })
        ));
        let tight = Limits {
            max_level: 2,
            max_tensor_entries: 10,
        };
        assert!(matches!(
            cohomology_dims(&alg, &adj, 3, &tight),
            Err(LyError::ResourceCap(_))
        ));
        let tiny = Limits {
            max_level: 3,
            max_tensor_entries: 4,
        };
        assert!(matches!(
            cohomology_dims(&alg, &adj, 2, &tiny),
            Err(LyError::ResourceCap(_))
        ));
    }
}
