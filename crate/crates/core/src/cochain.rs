//! The graded cochain space of an algebra and its circle product.
//!
//! A cochain of graded degree `p ≥ 1` on a space of dimension `d` with values
//! in a space of dimension `c` is a pair of multilinear maps: an I-component
//! on `(∧²)⊗p` and a II-component on `(∧²)⊗p ⊗ (·)`. A degree-0 cochain is a
//! single linear map. When domain and codomain coincide, the circle product
//! of two cochains is the shuffle sum below, and the graded commutator
//! `[P, Q] = P∘Q − (−1)^{pq} Q∘P` makes the graded space a graded Lie
//! algebra. A degree-1 element built from the structure constants of an
//! algebra squares to zero under this bracket precisely when the two
//! derivation axioms hold; its bracket action reproduces the classical
//! coboundary of the adjoint representation up to the sign `(−1)^degree`.

use crate::algebra::LyAlgebra;
use crate::error::LyError;
use crate::linalg::{vaxpy, vzero};
use crate::scalar::Rat;
use crate::wedge::{shuffles, WedgeBasis};
use num_traits::{One, Zero};

/// Wedge-slot argument: a basis wedge index or a sparse combination.
#[derive(Debug, Clone)]
pub enum WSlot<'a> {
    B(usize),
    D(&'a [(usize, Rat)]),
}

/// Vector-slot argument: a basis index or a dense vector.
#[derive(Debug, Clone)]
pub enum VSlot<'a> {
    B(usize),
    D(&'a [Rat]),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cochain {
    pub degree: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    /// I-component, `W^p × codomain` entries in row-major layout; empty for
    /// degree 0.
    pub f: Vec<Rat>,
    /// II-component, `W^p × domain × codomain`; for degree 0 this is the
    /// sole component of shape `domain × codomain`.
    pub g: Vec<Rat>,
}

impl Cochain {
    pub fn zero(degree: usize, domain_dim: usize, codomain_dim: usize) -> Self {
        let wp = Self::wedge_power(domain_dim, degree);
        if degree == 0 {
            Cochain {
                degree,
                domain_dim,
                codomain_dim,
                f: Vec::new(),
                g: vzero(domain_dim * codomain_dim),
            }
        } else {
            Cochain {
                degree,
                domain_dim,
                codomain_dim,
                f: vzero(wp * codomain_dim),
                g: vzero(wp * domain_dim * codomain_dim),
            }
        }
    }

    pub fn wedge_power(domain_dim: usize, degree: usize) -> usize {
        crate::wedge::wedge_dim(domain_dim)
            .checked_pow(degree as u32)
            .expect("tensor shape overflow")
    }

    /// Total number of rational entries a cochain of this shape holds.
    pub fn entry_count(degree: usize, domain_dim: usize, codomain_dim: usize) -> usize {
        if degree == 0 {
            domain_dim * codomain_dim
        } else {
            let wp = Self::wedge_power(domain_dim, degree);
            wp * codomain_dim + wp * domain_dim * codomain_dim
        }
    }

    pub fn wedge_dim(&self) -> usize {
        crate::wedge::wedge_dim(self.domain_dim)
    }

    fn flat(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.degree);
        let w = self.wedge_dim();
        let mut idx = 0usize;
        for &m in multi {
            idx = idx * w + m;
        }
        idx
    }

    pub fn f_at(&self, multi: &[usize]) -> &[Rat] {
        let c = self.codomain_dim;
        let base = self.flat(multi) * c;
        &self.f[base..base + c]
    }

    pub fn g_at(&self, multi: &[usize], v: usize) -> &[Rat] {
        let c = self.codomain_dim;
        let base = (self.flat(multi) * self.domain_dim + v) * c;
        &self.g[base..base + c]
    }

    fn f_at_mut(&mut self, multi: &[usize]) -> &mut [Rat] {
        let c = self.codomain_dim;
        let base = self.flat(multi) * c;
        &mut self.f[base..base + c]
    }

    fn g_at_mut(&mut self, multi: &[usize], v: usize) -> &mut [Rat] {
        let c = self.codomain_dim;
        let base = (self.flat(multi) * self.domain_dim + v) * c;
        &mut self.g[base..base + c]
    }

    pub(crate) fn set_f(&mut self, multi: &[usize], val: &[Rat]) {
        self.f_at_mut(multi).clone_from_slice(val);
    }

    pub(crate) fn set_g(&mut self, multi: &[usize], v: usize, val: &[Rat]) {
        self.g_at_mut(multi, v).clone_from_slice(val);
    }

    /// The linear map of a degree-0 cochain on basis vector `v`.
    pub fn map0(&self, v: usize) -> &[Rat] {
        debug_assert_eq!(self.degree, 0);
        &self.g[v * self.codomain_dim..(v + 1) * self.codomain_dim]
    }

    /// Applies a degree-0 cochain to a dense vector.
    pub fn apply0(&self, x: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(self.degree, 0);
        let mut out = vzero(self.codomain_dim);
        for (v, coef) in x.iter().enumerate() {
            if !coef.is_zero() {
                vaxpy(&mut out, coef, self.map0(v));
            }
        }
        out
    }

    /// I-component evaluated on wedge slots, at most a few of them dense.
    pub fn eval_f(&self, slots: &[WSlot]) -> Vec<Rat> {
        let mut multi = vec![0usize; slots.len()];
        let mut out = vzero(self.codomain_dim);
        self.eval_rec(slots, None, 0, &mut multi, &Rat::one(), &mut out);
        out
    }

    /// II-component evaluated on wedge slots plus the final vector slot.
    pub fn eval_g(&self, slots: &[WSlot], last: &VSlot) -> Vec<Rat> {
        let mut multi = vec![0usize; slots.len()];
        let mut out = vzero(self.codomain_dim);
        self.eval_rec(slots, Some(last), 0, &mut multi, &Rat::one(), &mut out);
        out
    }

    fn eval_rec(
        &self,
        slots: &[WSlot],
        last: Option<&VSlot>,
        i: usize,
        multi: &mut Vec<usize>,
        coeff: &Rat,
        out: &mut [Rat],
    ) {
        if i == slots.len() {
            match last {
                None => vaxpy(out, coeff, self.f_at(multi)),
                Some(VSlot::B(v)) => vaxpy(out, coeff, self.g_at(multi, *v)),
                Some(VSlot::D(x)) => {
                    for (v, c) in x.iter().enumerate() {
                        if !c.is_zero() {
                            vaxpy(out, &(coeff * c), self.g_at(multi, v));
                        }
                    }
                }
            }
            return;
        }
        match &slots[i] {
            WSlot::B(k) => {
                multi[i] = *k;
                self.eval_rec(slots, last, i + 1, multi, coeff, out);
            }
            WSlot::D(sparse) => {
                for (k, c) in sparse.iter() {
                    if !c.is_zero() {
                        multi[i] = *k;
                        self.eval_rec(slots, last, i + 1, multi, &(coeff * c), out);
                    }
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().all(Zero::is_zero) && self.g.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.shape(), other.shape(), "cochain shape");
        Cochain {
            degree: self.degree,
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            f: self.f.iter().zip(&other.f).map(|(a, b)| a + b).collect(),
            g: self.g.iter().zip(&other.g).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.shape(), other.shape(), "cochain shape");
        Cochain {
            degree: self.degree,
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            f: self.f.iter().zip(&other.f).map(|(a, b)| a - b).collect(),
            g: self.g.iter().zip(&other.g).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Cochain {
        Cochain {
            degree: self.degree,
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            f: self.f.iter().map(|a| k * a).collect(),
            g: self.g.iter().map(|a| k * a).collect(),
        }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.degree, self.domain_dim, self.codomain_dim)
    }
}

/// Iterates all multi-indices of length `len` over `0..w` in row-major
/// order; yields nothing when `w == 0` and `len > 0`.
pub(crate) fn multi_indices(w: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if len == 0 {
        1
    } else if w == 0 {
        0
    } else {
        w.checked_pow(len as u32).expect("index overflow")
    };
    (0..total).map(move |mut t| {
        let mut multi = vec![0usize; len];
        for slot in (0..len).rev() {
            multi[slot] = t % w.max(1);
            t /= w.max(1);
        }
        multi
    })
}

fn check_composable(a: &Cochain, b: &Cochain) -> Result<(), LyError> {
    if a.domain_dim != a.codomain_dim || b.domain_dim != b.codomain_dim {
        return Err(LyError::SpaceMismatch(
            "circle product requires cochains with equal domain and codomain".into(),
        ));
    }
    if a.domain_dim != b.domain_dim {
        return Err(LyError::SpaceMismatch(format!(
            "cochains live on spaces of dimension {} and {}",
            a.domain_dim, b.domain_dim
        )));
    }
    Ok(())
}

/// I-component of `a ∘ b` at a basis multi-index. Requires `a.degree ≥ 1`
/// or `b.degree ≥ 1`.
pub(crate) fn circle_f_entry(
    a: &Cochain,
    b: &Cochain,
    w: &WedgeBasis,
    multi: &[usize],
) -> Vec<Rat> {
    let (p, q) = (a.degree, b.degree);
    let c = a.codomain_dim;
    let mut out = vzero(c);

    if p == 0 {
        // Post-composition with a linear map.
        vaxpy(&mut out, &Rat::one(), &a.apply0(b.f_at(multi)));
        return out;
    }
    if q == 0 {
        // Insert b into each wedge slot of the I-component.
        for k in 0..p {
            let (xa, ya) = w.pair(multi[k]);
            let w1 = w.decompose_basis_vec(xa, b.map0(ya));
            let w2 = w.decompose_vec_basis(b.map0(xa), ya);
            let mut slots: Vec<WSlot> = multi.iter().map(|&t| WSlot::B(t)).collect();
            slots[k] = WSlot::D(&w1);
            vaxpy(&mut out, &Rat::one(), &a.eval_f(&slots));
            slots[k] = WSlot::D(&w2);
            vaxpy(&mut out, &Rat::one(), &a.eval_f(&slots));
        }
        return out;
    }

    let sign_pq = if (p * q) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };

    // Block sum: the II-component of a eats the I-component of b, the
    // shuffle constrained to keep the last argument in the b block.
    for sh in shuffles(p, p + q) {
        if *sh.second.last().expect("q >= 1") != p + q - 1 {
            continue;
        }
        let q_multi: Vec<usize> = sh.second.iter().map(|&t| multi[t]).collect();
        let val = b.f_at(&q_multi);
        let slots: Vec<WSlot> = sh.first.iter().map(|&t| WSlot::B(multi[t])).collect();
        let term = a.eval_g(&slots, &VSlot::D(val));
        let k = &sign_pq * Rat::from_integer(sh.sign.into());
        vaxpy(&mut out, &k, &term);
    }

    // Insertion sums: the II-component of b replaces one leg of a wedge
    // argument of a.
    for k in 1..=p {
        let outer = if ((k - 1) * q) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        for sh in shuffles(k - 1, k - 1 + q) {
            let s_slots: Vec<WSlot> = sh.first.iter().map(|&t| WSlot::B(multi[t])).collect();
            let q_multi: Vec<usize> = sh.second.iter().map(|&t| multi[t]).collect();
            let (xa, ya) = w.pair(multi[k + q - 1]);
            let v1 = b.g_at(&q_multi, ya);
            let w1 = w.decompose_basis_vec(xa, v1);
            let v2 = b.g_at(&q_multi, xa);
            let w2 = w.decompose_vec_basis(v2, ya);
            let trailing: Vec<WSlot> = multi[k + q..].iter().map(|&t| WSlot::B(t)).collect();
            let sign = &outer * Rat::from_integer(sh.sign.into());
            for dense in [&w1, &w2] {
                let mut slots = s_slots.clone();
                slots.push(WSlot::D(dense));
                slots.extend(trailing.iter().cloned());
                vaxpy(&mut out, &sign, &a.eval_f(&slots));
            }
        }
    }
    out
}

/// II-component of `a ∘ b` at a basis multi-index and final vector index.
pub(crate) fn circle_g_entry(
    a: &Cochain,
    b: &Cochain,
    w: &WedgeBasis,
    multi: &[usize],
    z: usize,
) -> Vec<Rat> {
    let (p, q) = (a.degree, b.degree);
    let c = a.codomain_dim;
    let mut out = vzero(c);

    if p == 0 {
        vaxpy(&mut out, &Rat::one(), &a.apply0(b.g_at(multi, z)));
        return out;
    }
    if q == 0 {
        for k in 0..p {
            let (xa, ya) = w.pair(multi[k]);
            let w1 = w.decompose_basis_vec(xa, b.map0(ya));
            let w2 = w.decompose_vec_basis(b.map0(xa), ya);
            let mut slots: Vec<WSlot> = multi.iter().map(|&t| WSlot::B(t)).collect();
            slots[k] = WSlot::D(&w1);
            vaxpy(&mut out, &Rat::one(), &a.eval_g(&slots, &VSlot::B(z)));
            slots[k] = WSlot::D(&w2);
            vaxpy(&mut out, &Rat::one(), &a.eval_g(&slots, &VSlot::B(z)));
        }
        let slots: Vec<WSlot> = multi.iter().map(|&t| WSlot::B(t)).collect();
        vaxpy(
            &mut out,
            &Rat::one(),
            &a.eval_g(&slots, &VSlot::D(b.map0(z))),
        );
        return out;
    }

    let sign_pq = if (p * q) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };

    // Block sum, unconstrained shuffles: the II-component of b feeds the
    // vector slot of the II-component of a.
    for sh in shuffles(p, p + q) {
        let q_multi: Vec<usize> = sh.second.iter().map(|&t| multi[t]).collect();
        let val = b.g_at(&q_multi, z);
        let slots: Vec<WSlot> = sh.first.iter().map(|&t| WSlot::B(multi[t])).collect();
        let term = a.eval_g(&slots, &VSlot::D(val));
        let k = &sign_pq * Rat::from_integer(sh.sign.into());
        vaxpy(&mut out, &k, &term);
    }

    for k in 1..=p {
        let outer = if ((k - 1) * q) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        for sh in shuffles(k - 1, k - 1 + q) {
            let s_slots: Vec<WSlot> = sh.first.iter().map(|&t| WSlot::B(multi[t])).collect();
            let q_multi: Vec<usize> = sh.second.iter().map(|&t| multi[t]).collect();
            let (xa, ya) = w.pair(multi[k + q - 1]);
            let v1 = b.g_at(&q_multi, ya);
            let w1 = w.decompose_basis_vec(xa, v1);
            let v2 = b.g_at(&q_multi, xa);
            let w2 = w.decompose_vec_basis(v2, ya);
            let trailing: Vec<WSlot> = multi[k + q..].iter().map(|&t| WSlot::B(t)).collect();
            let sign = &outer * Rat::from_integer(sh.sign.into());
            for dense in [&w1, &w2] {
                let mut slots = s_slots.clone();
                slots.push(WSlot::D(dense));
                slots.extend(trailing.iter().cloned());
                vaxpy(&mut out, &sign, &a.eval_g(&slots, &VSlot::B(z)));
            }
        }
    }
    out
}

/// The circle product `a ∘ b`, a cochain of degree `a.degree + b.degree`.
pub fn circle(a: &Cochain, b: &Cochain) -> Result<Cochain, LyError> {
    check_composable(a, b)?;
    let d = a.domain_dim;
    let (p, q) = (a.degree, b.degree);
    if p == 0 && q == 0 {
        // Plain composition of linear maps.
        let mut out = Cochain::zero(0, d, d);
        for v in 0..d {
            let val = a.apply0(b.map0(v));
            out.g[v * d..(v + 1) * d].clone_from_slice(&val);
        }
        return Ok(out);
    }
    let w = WedgeBasis::new(d);
    let mut out = Cochain::zero(p + q, d, d);
    for multi in multi_indices(w.len(), p + q) {
        let fe = circle_f_entry(a, b, &w, &multi);
        out.f_at_mut(&multi).clone_from_slice(&fe);
        for z in 0..d {
            let ge = circle_g_entry(a, b, &w, &multi, z);
            out.g_at_mut(&multi, z).clone_from_slice(&ge);
        }
    }
    Ok(out)
}

/// The graded commutator `[a, b] = a∘b − (−1)^{pq} b∘a`.
pub fn graded_bracket(a: &Cochain, b: &Cochain) -> Result<Cochain, LyError> {
    let ab = circle(a, b)?;
    let ba = circle(b, a)?;
    Ok(if (a.degree * b.degree) % 2 == 0 {
        ab.sub(&ba)
    } else {
        ab.add(&ba)
    })
}

/// The degree-1 cochain holding the structure constants of an algebra: the
/// I-component is the binary bracket, the II-component the ternary bracket.
pub fn structure_cochain(alg: &LyAlgebra) -> Cochain {
    let n = alg.dim;
    let w = WedgeBasis::new(n);
    let mut out = Cochain::zero(1, n, n);
    for (idx, &(i, j)) in w.pairs.iter().enumerate() {
        out.f_at_mut(&[idx]).clone_from_slice(alg.binary_at(i, j));
        for k in 0..n {
            out.g_at_mut(&[idx], k)
                .clone_from_slice(alg.ternary_at(i, j, k));
        }
    }
    out
}

/// Residual of the binary-derivation identity of a degree-1 cochain at basis
/// indices `(x, y, z, t)`:
/// `ω(x,y,π(z,t)) − π(ω(x,y,z),t) − π(z,ω(x,y,t))`.
pub fn binary_derivation_residual(
    pi: &Cochain,
    w: &WedgeBasis,
    x: usize,
    y: usize,
    z: usize,
    t: usize,
) -> Vec<Rat> {
    assert_eq!(pi.degree, 1);
    let d = pi.domain_dim;
    let pi_of = |i: usize, j: usize| -> Vec<Rat> {
        let mut v = vzero(d);
        if i < j {
            v.clone_from_slice(pi.f_at(&[w.index_of(i, j)]));
        } else if j < i {
            for (o, c) in pi.f_at(&[w.index_of(j, i)]).iter().enumerate() {
                v[o] = -c.clone();
            }
        }
        v
    };
    let om_vec = |i: usize, j: usize, vvec: &[Rat]| -> Vec<Rat> {
        let mut out = vzero(d);
        for (k, c) in vvec.iter().enumerate() {
            if !c.is_zero() {
                let val = om_basis(pi, w, i, j, k);
                vaxpy(&mut out, c, &val);
            }
        }
        out
    };
    let mut res = om_vec(x, y, &pi_of(z, t));
    // π(ω(x,y,z), t): expand the dense first argument of π.
    let om_xyz = om_basis(pi, w, x, y, z);
    for (k, c) in om_xyz.iter().enumerate() {
        if !c.is_zero() {
            let v = pi_of(k, t);
            vaxpy(&mut res, &(-c.clone()), &v);
        }
    }
    let om_xyt = om_basis(pi, w, x, y, t);
    for (k, c) in om_xyt.iter().enumerate() {
        if !c.is_zero() {
            let v = pi_of(z, k);
            vaxpy(&mut res, &(-c.clone()), &v);
        }
    }
    res
}

/// Residual of the ternary-derivation identity of a degree-1 cochain at
/// `(x, y, z, t, s)`:
/// `ω(x,y,ω(z,t,s)) − ω(ω(x,y,z),t,s) − ω(z,ω(x,y,t),s) − ω(z,t,ω(x,y,s))`.
pub fn ternary_derivation_residual(
    pi: &Cochain,
    w: &WedgeBasis,
    x: usize,
    y: usize,
    z: usize,
    t: usize,
    s: usize,
) -> Vec<Rat> {
    assert_eq!(pi.degree, 1);
    let d = pi.domain_dim;
    let om_dense_last = |i: usize, j: usize, vvec: &[Rat]| -> Vec<Rat> {
        let mut out = vzero(d);
        for (k, c) in vvec.iter().enumerate() {
            if !c.is_zero() {
                vaxpy(&mut out, c, &om_basis(pi, w, i, j, k));
            }
        }
        out
    };
    let om_dense_first = |vvec: &[Rat], j: usize, k: usize| -> Vec<Rat> {
        let mut out = vzero(d);
        for (i, c) in vvec.iter().enumerate() {
            if !c.is_zero() {
                vaxpy(&mut out, c, &om_basis(pi, w, i, j, k));
            }
        }
        out
    };
    let om_dense_second = |i: usize, vvec: &[Rat], k: usize| -> Vec<Rat> {
        let mut out = vzero(d);
        for (j, c) in vvec.iter().enumerate() {
            if !c.is_zero() {
                vaxpy(&mut out, c, &om_basis(pi, w, i, j, k));
            }
        }
        out
    };
    let mut res = om_dense_last(x, y, &om_basis(pi, w, z, t, s));
    let a = om_dense_first(&om_basis(pi, w, x, y, z), t, s);
    let b = om_dense_second(z, &om_basis(pi, w, x, y, t), s);
    let c = om_dense_last(z, t, &om_basis(pi, w, x, y, s));
    for (o, v) in res.iter_mut().enumerate() {
        *v -= &a[o] + &b[o] + &c[o];
    }
    res
}

/// II-component of a degree-1 cochain at basis triple `(i, j, k)`, with the
/// skew extension to arbitrary `(i, j)`.
fn om_basis(pi: &Cochain, w: &WedgeBasis, i: usize, j: usize, k: usize) -> Vec<Rat> {
    let d = pi.domain_dim;
    if i < j {
        pi.g_at(&[w.index_of(i, j)], k).to_vec()
    } else if j < i {
        pi.g_at(&[w.index_of(j, i)], k)
            .iter()
            .map(|c| -c.clone())
            .collect()
    } else {
        vzero(d)
    }
}

/// Reports whether `[Π, Π] = 0`. This certifies exactly the two derivation
/// axioms of an algebra structure — not the two cyclic axioms — so a passing
/// report does not by itself make `Π` an algebra.
pub fn maurer_cartan_report(pi: &Cochain) -> Result<crate::report::Report, LyError> {
    if pi.degree != 1 {
        return Err(LyError::SpaceMismatch(
            "Maurer-Cartan check needs a degree-1 cochain".into(),
        ));
    }
    let sq = graded_bracket(pi, pi)?;
    let mut check = crate::report::CheckBuilder::new("maurer_cartan_square_zero");
    check.note(
        "certifies the binary/ternary derivation axioms only; \
         the two cyclic axioms are not implied",
    );
    let w = WedgeBasis::new(pi.domain_dim);
    for multi in multi_indices(w.len(), 2) {
        check.observe(&multi, sq.f_at(&multi));
        for z in 0..pi.domain_dim {
            let mut tuple = multi.clone();
            tuple.push(z);
            check.observe(&tuple, sq.g_at(&multi, z));
        }
    }
    let mut report = crate::report::Report::new();
    report.push(check.finish());
    Ok(report)
}

pub fn is_maurer_cartan(pi: &Cochain) -> Result<bool, LyError> {
    Ok(graded_bracket(pi, pi)?.is_zero())
}

/// The differential `[Π, ·]` of a Maurer-Cartan element.
pub fn differential(pi: &Cochain, f: &Cochain) -> Result<Cochain, LyError> {
    if !is_maurer_cartan(pi)? {
        return Err(LyError::NotMaurerCartan);
    }
    graded_bracket(pi, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sampling;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn degree_zero_circle_is_composition() {
        let mut r = sampling::rng(1);
        let a = sampling::cochain(&mut r, 0, 3, 3);
        let b = sampling::cochain(&mut r, 0, 3, 3);
        let ab = circle(&a, &b).unwrap();
        for v in 0..3 {
            assert_eq!(ab.map0(v), a.apply0(b.map0(v)));
        }
        // Degree-0 bracket of a cochain with itself vanishes.
        assert!(graded_bracket(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn circle_with_zero_is_zero_and_odd_self_bracket_doubles() {
        let mut r = sampling::rng(2);
        for (p, q) in [(1usize, 1usize), (2, 1), (1, 0), (0, 2)] {
            let a = sampling::cochain(&mut r, p, 2, 2);
            let z = Cochain::zero(q, 2, 2);
            assert!(circle(&a, &z).unwrap().is_zero());
            assert!(circle(&z, &a).unwrap().is_zero());
        }
        let p = sampling::cochain(&mut r, 1, 3, 3);
        let self_bracket = graded_bracket(&p, &p).unwrap();
        let doubled = circle(&p, &p).unwrap().scale(&rat(2, 1));
        assert_eq!(self_bracket, doubled);
    }

    #[test]
    fn structure_cochain_of_fixture() {
        let pi = structure_cochain(&fixtures::two_dim());
        // I-component at e1∧e2 is e1; II-component at (e1∧e2, e2) is e1.
        assert_eq!(pi.f_at(&[0]), &[rat_int(1), rat_int(0)]);
        assert_eq!(pi.g_at(&[0], 1), &[rat_int(1), rat_int(0)]);
        assert_eq!(pi.g_at(&[0], 0), &[rat_int(0), rat_int(0)]);
        assert!(structure_cochain(&crate::algebra::LyAlgebra::abelian(4)).is_zero());
    }

    /// Pins the sign convention of the circle product: for degree-1 Π the
    /// two components of Π∘Π are the negated residuals of the two
    /// derivation axioms.
    #[test]
    fn self_circle_matches_derivation_residuals() {
        let mut r = sampling::rng(3);
        let w = crate::wedge::WedgeBasis::new(3);
        for _ in 0..10 {
            let pi = sampling::cochain(&mut r, 1, 3, 3);
            let sq = circle(&pi, &pi).unwrap();
            for (ki, &(x, y)) in w.pairs.iter().enumerate() {
                for (kj, &(z, t)) in w.pairs.iter().enumerate() {
                    let res = binary_derivation_residual(&pi, &w, x, y, z, t);
                    let neg: Vec<Rat> = res.iter().map(|c| -c).collect();
                    assert_eq!(sq.f_at(&[ki, kj]), &neg[..]);
                    for s in 0..3 {
                        let res = ternary_derivation_residual(&pi, &w, x, y, z, t, s);
                        let neg: Vec<Rat> = res.iter().map(|c| -c).collect();
                        assert_eq!(sq.g_at(&[ki, kj], s), &neg[..]);
                    }
                }
            }
        }
    }

    #[test]
    fn fixture_structure_cochains_are_maurer_cartan() {
        for alg in [
            fixtures::two_dim(),
            fixtures::four_dim(),
            crate::algebra::LyAlgebra::abelian(3),
        ] {
            let pi = structure_cochain(&alg);
            let rep = maurer_cartan_report(&pi).unwrap();
            assert!(rep.passed(), "{}", rep.render_text());
        }
    }

    /// A Maurer-Cartan element need not be an algebra: on dimension 2 the
    /// two cyclic axioms are automatic (verified by brute force), so the
    /// smallest separating example lives in dimension 3.
    #[test]
    fn maurer_cartan_does_not_imply_algebra() {
        // Brute force over a small grid of skew 2-dim structures: every
        // Maurer-Cartan element is a full algebra there.
        let vals: Vec<Rat> = vec![rat_int(-1), rat_int(0), rat_int(1)];
        for b1 in &vals {
            for b2 in &vals {
                for t1 in &vals {
                    for t2 in &vals {
                        let alg = crate::algebra::LyAlgebra::from_brackets(
                            2,
                            &[(0, 1, vec![b1.clone(), b2.clone()])],
                            &[(0, 1, 1, vec![t1.clone(), t2.clone()])],
                        )
                        .unwrap();
                        let pi = structure_cochain(&alg);
                        if is_maurer_cartan(&pi).unwrap() {
                            assert!(alg.verify().unwrap().passed());
                        }
                    }
                }
            }
        }

        // Dimension 3: π = 0 and ⟦e1,e2,e3⟧ = e3 satisfies both derivation
        // axioms but not the first cyclic axiom.
        let alg = crate::algebra::LyAlgebra::from_brackets(
            3,
            &[],
            &[(0, 1, 2, vec![rat_int(0), rat_int(0), rat_int(1)])],
        )
        .unwrap();
        let pi = structure_cochain(&alg);
        assert!(is_maurer_cartan(&pi).unwrap());
        let verify = alg.verify().unwrap();
        assert!(!verify.passed());
        assert!(!verify.check("axiom1_cyclic_sum").unwrap().passed);
    }

    #[test]
    fn differential_requires_maurer_cartan_and_squares_to_zero() {
        let mut r = sampling::rng(4);
        let alg = fixtures::two_dim();
        let pi = structure_cochain(&alg);
        // d(Π) = [Π, Π] = 0.
        assert!(differential(&pi, &pi).unwrap().is_zero());
        for p in 0..=2usize {
            let f = sampling::cochain(&mut r, p, 2, 2);
            let df = differential(&pi, &f).unwrap();
            let ddf = differential(&pi, &df).unwrap();
            assert!(ddf.is_zero(), "d∘d at degree {p}");
        }
        // A non Maurer-Cartan element is rejected.
        let bad = crate::algebra::LyAlgebra::from_brackets(
            3,
            &[],
            &[(0, 1, 2, vec![rat_int(1), rat_int(0), rat_int(0)])],
        )
        .unwrap();
        let bad_pi = structure_cochain(&bad);
        assert!(!is_maurer_cartan(&bad_pi).unwrap());
        let f = sampling::cochain(&mut r, 0, 3, 3);
        assert!(matches!(
            differential(&bad_pi, &f),
            Err(LyError::NotMaurerCartan)
        ));
    }

    #[test]
    fn space_mismatch_is_rejected() {
        let a = Cochain::zero(1, 2, 2);
        let b = Cochain::zero(1, 3, 3);
        assert!(matches!(circle(&a, &b), Err(LyError::SpaceMismatch(_))));
        let c = Cochain::zero(1, 2, 3);
        assert!(matches!(circle(&c, &c), Err(LyError::SpaceMismatch(_))));
    }
}
