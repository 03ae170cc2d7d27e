//! The extended affine Weyl group, its length function, reduced words,
//! Bruhat order, and admissible sets.
//!
//! Elements are stored in the normal form `t^lambda * w` with `lambda` an
//! ambient coweight and `w` a finite Weyl permutation. The group law and
//! inverse follow from `w t^lambda = t^{w lambda} w`. The length function is
//! the Iwahori one: summing over positive roots `a`,
//!
//! ```text
//! length(t^lambda w) = sum_{w^{-1}a > 0} |<lambda, a>|
//!                    + sum_{w^{-1}a < 0} |<lambda, a> - 1|
//! ```
//!
//! Length-zero elements form the subgroup Omega, an infinite cyclic group
//! here (both kinds), generated by `omega_generator` and graded by
//! `omega_degree`.

use crate::root_data::{Coweight, Perm, Root, RootDatum};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An element `t^translation * finite` of the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    pub translation: Coweight,
    pub finite: Perm,
}

impl AffineWeylElement {
    pub fn identity(ambient: usize) -> Self {
        AffineWeylElement {
            translation: Coweight::zero(ambient),
            finite: Perm::identity(ambient),
        }
    }

    pub fn from_translation(cw: Coweight) -> Self {
        let n = cw.len();
        AffineWeylElement {
            translation: cw,
            finite: Perm::identity(n),
        }
    }

    pub fn from_finite(w: Perm) -> Self {
        let n = w.0.len();
        AffineWeylElement {
            translation: Coweight::zero(n),
            finite: w,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.finite.is_identity()
    }

    /// Group law: `(t^a u)(t^b v) = t^{a + u b} uv`.
    pub fn multiply(&self, other: &AffineWeylElement) -> AffineWeylElement {
        AffineWeylElement {
            translation: self.translation.add(&self.finite.act(&other.translation)),
            finite: self.finite.compose(&other.finite),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let w_inv = self.finite.inverse();
        AffineWeylElement {
            translation: w_inv.act(&self.translation).neg(),
            finite: w_inv,
        }
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.finite.is_identity() {
            write!(f, "t{}", self.translation)
        } else if self.translation.is_zero() {
            write!(f, "{:?}", self.finite)
        } else {
            write!(f, "t{}{:?}", self.translation, self.finite)
        }
    }
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Validated constructor for a translation element.
pub fn translation(rd: &RootDatum, cw: &Coweight) -> Result<AffineWeylElement> {
    rd.validate_coweight(cw)?;
    Ok(AffineWeylElement::from_translation(cw.clone()))
}

/// The Iwahori length.
pub fn length(rd: &RootDatum, x: &AffineWeylElement) -> i64 {
    let w_inv = x.finite.inverse();
    let mut total = 0i64;
    for r in &rd.positive_roots {
        let pairing = rd.pairing(&x.translation, r);
        let pre = Root {
            i: w_inv.apply(r.i),
            j: w_inv.apply(r.j),
        };
        if rd.pair_is_positive(pre.i, pre.j) {
            total += pairing.abs();
        } else {
            total += (pairing - 1).abs();
        }
    }
    total
}

/// The simple affine reflections `[s_0, s_1, .., s_rank]`. Index 0 is the
/// affine one, `t^{theta_vee} s_theta` for the highest root `theta`; the
/// rest are the finite Coxeter generators in their usual order. GL(1) has
/// none at all.
pub fn simple_affine_reflections(rd: &RootDatum) -> Vec<AffineWeylElement> {
    if rd.rank() == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(rd.rank() + 1);
    // The highest root maximizes the pairing with any regular dominant
    // coweight; for both families it is the pair (0, ambient-1).
    let theta = Root {
        i: 0,
        j: rd.ambient - 1,
    };
    let mut theta_vee = vec![0i64; rd.ambient];
    theta_vee[theta.i] = 1;
    theta_vee[theta.j] = -1;
    out.push(AffineWeylElement {
        translation: Coweight(theta_vee),
        finite: Perm::transposition(rd.ambient, theta.i, theta.j),
    });
    for g in &rd.weyl_generators {
        out.push(AffineWeylElement::from_finite(g.clone()));
    }
    out
}

/// The generator of Omega with degree 1.
pub fn omega_generator(rd: &RootDatum) -> AffineWeylElement {
    match rd.kind {
        crate::root_data::GroupKind::Gl => {
            let mut e0 = vec![0i64; rd.ambient];
            e0[0] = 1;
            let images: Vec<usize> = (0..rd.ambient).map(|i| (i + 1) % rd.ambient).collect();
            AffineWeylElement {
                translation: Coweight(e0),
                finite: Perm(images),
            }
        }
        crate::root_data::GroupKind::Gsp => {
            let d = rd.d;
            let mut lam = vec![0i64; rd.ambient];
            for item in lam.iter_mut().take(d) {
                *item = 1;
            }
            let images: Vec<usize> = (0..rd.ambient).map(|i| (i + d) % rd.ambient).collect();
            AffineWeylElement {
                translation: Coweight(lam),
                finite: Perm(images),
            }
        }
    }
}

/// The degree of the Omega component of `x` (coordinate sum for GL,
/// similitude constant for GSp). Constant on cosets of the plain affine
/// Weyl group.
pub fn omega_degree(rd: &RootDatum, x: &AffineWeylElement) -> i64 {
    rd.central_charge(&x.translation)
}

pub fn omega_power(rd: &RootDatum, k: i64) -> AffineWeylElement {
    let gen = if k >= 0 {
        omega_generator(rd)
    } else {
        omega_generator(rd).inverse()
    };
    let mut out = AffineWeylElement::identity(rd.ambient);
    for _ in 0..k.unsigned_abs() {
        out = out.multiply(&gen);
    }
    out
}

/// The smallest index `i` with `length(s_i x) < length(x)`, if any. Only
/// length-zero elements have none.
pub fn left_descent(rd: &RootDatum, x: &AffineWeylElement) -> Option<usize> {
    let len = length(rd, x);
    simple_affine_reflections(rd)
        .iter()
        .position(|s| length(rd, &s.multiply(x)) < len)
}

/// Reduced word in the lexicographically least form, plus the Omega power:
/// `x = s_{w[0]} s_{w[1]} .. * omega^k`. Peeling the smallest left descent
/// at each step yields exactly the lex-least reduced word.
pub fn reduced_word(rd: &RootDatum, x: &AffineWeylElement) -> (Vec<usize>, i64) {
    let simples = simple_affine_reflections(rd);
    let mut word = Vec::new();
    let mut cur = x.clone();
    let mut len = length(rd, &cur);
    while len > 0 {
        let mut found = false;
        for (i, s) in simples.iter().enumerate() {
            let next = s.multiply(&cur);
            let next_len = length(rd, &next);
            if next_len < len {
                word.push(i);
                cur = next;
                len = next_len;
                found = true;
                break;
            }
        }
        debug_assert!(found, "positive-length element without a descent");
        if !found {
            break;
        }
    }
    (word, omega_degree(rd, &cur))
}

/// Rebuilds an element from a word in simple reflection indices and an
/// Omega power.
pub fn element_from_word(rd: &RootDatum, word: &[usize], omega_k: i64) -> Result<AffineWeylElement> {
    let simples = simple_affine_reflections(rd);
    let mut out = AffineWeylElement::identity(rd.ambient);
    for &i in word {
        let s = simples
            .get(i)
            .ok_or(Error::NoSuchReflection(i))?;
        out = out.multiply(s);
    }
    Ok(out.multiply(&omega_power(rd, omega_k)))
}

/// Bruhat order on the extended group: components of Omega compare only
/// within the same degree, and inside one component the lifting property
/// recurses on any left descent of the larger element.
pub fn bruhat_leq(rd: &RootDatum, x: &AffineWeylElement, y: &AffineWeylElement) -> bool {
    if omega_degree(rd, x) != omega_degree(rd, y) {
        return false;
    }
    let simples = simple_affine_reflections(rd);
    fn step(
        rd: &RootDatum,
        simples: &[AffineWeylElement],
        x: &AffineWeylElement,
        lx: i64,
        y: &AffineWeylElement,
        ly: i64,
    ) -> bool {
        if lx > ly {
            return false;
        }
        if ly == 0 {
            return x == y;
        }
        for s in simples {
            let sy = s.multiply(y);
            let lsy = length(rd, &sy);
            if lsy < ly {
                let sx = s.multiply(x);
                let lsx = length(rd, &sx);
                if lsx < lx {
                    return step(rd, simples, &sx, lsx, &sy, lsy);
                }
                return step(rd, simples, x, lx, &sy, lsy);
            }
        }
        false
    }
    step(rd, &simples, x, length(rd, x), y, length(rd, y))
}

/// The lower Bruhat interval of one element: everything `<= y`, by a subword
/// sweep along one reduced word of `y`.
fn lower_interval(rd: &RootDatum, y: &AffineWeylElement) -> BTreeSet<AffineWeylElement> {
    let (word, k) = reduced_word(rd, y);
    let simples = simple_affine_reflections(rd);
    let mut set: BTreeSet<AffineWeylElement> = BTreeSet::new();
    set.insert(AffineWeylElement::identity(rd.ambient));
    for &i in &word {
        let mut next = set.clone();
        for x in &set {
            next.insert(x.multiply(&simples[i]));
        }
        set = next;
    }
    let tail = omega_power(rd, k);
    set.into_iter().map(|x| x.multiply(&tail)).collect()
}

/// The admissible set of a dominant coweight: all elements below some
/// translation by a Weyl conjugate of `mu`. Sorted by length, then by the
/// element order, so output is deterministic.
pub fn admissible_set(rd: &RootDatum, mu: &Coweight) -> Result<Vec<AffineWeylElement>> {
    if !rd.is_dominant(mu)? {
        return Err(Error::NonDominant(mu.0.clone()));
    }
    let mut set = BTreeSet::new();
    for nu in rd.weyl_orbit(mu)? {
        set.extend(lower_interval(rd, &AffineWeylElement::from_translation(nu)));
    }
    let mut out: Vec<AffineWeylElement> = set.into_iter().collect();
    out.sort_by_key(|x| (length(rd, x), x.clone()));
    Ok(out)
}

/// The double coset `W_0 t^mu W_0` as a set of elements, sorted like
/// `admissible_set`. Its size is always `|W_0 mu| * |W_0|`.
pub fn double_coset(rd: &RootDatum, mu: &Coweight) -> Result<Vec<AffineWeylElement>> {
    if !rd.is_dominant(mu)? {
        return Err(Error::NonDominant(mu.0.clone()));
    }
    let mut set = BTreeSet::new();
    let finite: Vec<Perm> = rd.weyl_elements();
    for nu in rd.weyl_orbit(mu)? {
        for w in &finite {
            set.insert(AffineWeylElement {
                translation: nu.clone(),
                finite: w.clone(),
            });
        }
    }
    let mut out: Vec<AffineWeylElement> = set.into_iter().collect();
    out.sort_by_key(|x| (length(rd, x), x.clone()));
    Ok(out)
}

/// An integer group-algebra element of the extended affine Weyl group. This
/// is the specialization target for Hecke elements at v = 1, kept separate
/// so the two routes stay independent.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebraElement {
    pub coeffs: BTreeMap<AffineWeylElement, i64>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(x: AffineWeylElement) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(x, 1);
        GroupAlgebraElement { coeffs }
    }

    pub fn add_term(&mut self, x: AffineWeylElement, c: i64) {
        if c == 0 {
            return;
        }
        match self.coeffs.entry(x) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add_term(x.clone(), *c);
        }
        out
    }

    pub fn multiply(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero();
        for (x, a) in &self.coeffs {
            for (y, b) in &other.coeffs {
                out.add_term(x.multiply(y), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_datum, GroupKind};

    fn gl(d: usize) -> RootDatum {
        build_root_datum(GroupKind::Gl, d).unwrap()
    }

    fn gsp(d: usize) -> RootDatum {
        build_root_datum(GroupKind::Gsp, d).unwrap()
    }

    fn t(v: &[i64]) -> AffineWeylElement {
        AffineWeylElement::from_translation(Coweight(v.to_vec()))
    }

    /// Every reduced word of `x`, by following all descents. Test oracle for
    /// the lex-least claim of `reduced_word`.
    fn all_reduced_words(rd: &RootDatum, x: &AffineWeylElement) -> Vec<Vec<usize>> {
        let len = length(rd, x);
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, s) in simple_affine_reflections(rd).iter().enumerate() {
            let next = s.multiply(x);
            if length(rd, &next) < len {
                for mut tail in all_reduced_words(rd, &next) {
                    tail.insert(0, i);
                    out.push(tail);
                }
            }
        }
        out
    }

    #[test]
    fn group_law_and_inverse() {
        for rd in [gl(3), gsp(2)] {
            let simples = simple_affine_reflections(&rd);
            let om = omega_generator(&rd);
            let mut sample = vec![om.clone(), om.inverse()];
            for s in &simples {
                sample.push(s.clone());
                sample.push(s.multiply(&om));
            }
            let mut x = AffineWeylElement::identity(rd.ambient);
            for s in &simples {
                x = x.multiply(s);
                sample.push(x.clone());
            }
            for a in &sample {
                assert!(a.multiply(&a.inverse()).is_identity());
                assert!(a.inverse().multiply(a).is_identity());
                for b in &sample {
                    for c in &sample {
                        assert_eq!(
                            a.multiply(b).multiply(c),
                            a.multiply(&b.multiply(c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn simple_reflections_are_involutions_of_length_one() {
        for rd in [gl(2), gl(4), gsp(2), gsp(3)] {
            let simples = simple_affine_reflections(&rd);
            assert_eq!(simples.len(), rd.rank() + 1);
            for s in &simples {
                assert_eq!(length(&rd, s), 1);
                assert!(s.multiply(s).is_identity());
            }
        }
        assert!(simple_affine_reflections(&gl(1)).is_empty());
    }

    #[test]
    fn translation_length_is_rho_pairing_for_dominant() {
        for rd in [gl(2), gl(3), gsp(2)] {
            for lam in rd.lambda_set(-2, 2).unwrap() {
                let expect = rd.rho_pairing_twice(&lam).unwrap();
                assert_eq!(length(&rd, &t(&lam.0)), expect);
                // and the length is Weyl-invariant on translations
                for w in rd.weyl_elements() {
                    let nu = w.act(&lam);
                    assert_eq!(length(&rd, &t(&nu.0)), expect);
                }
            }
        }
    }

    #[test]
    fn omega_has_length_zero_and_degree_one() {
        for rd in [gl(2), gl(3), gl(4), gsp(2), gsp(3)] {
            let om = omega_generator(&rd);
            assert_eq!(length(&rd, &om), 0);
            assert_eq!(omega_degree(&rd, &om), 1);
            for k in -3..=3 {
                let p = omega_power(&rd, k);
                assert_eq!(length(&rd, &p), 0);
                assert_eq!(omega_degree(&rd, &p), k);
            }
        }
    }

    #[test]
    fn gl_omega_power_d_is_central_translation() {
        for d in 2..=4 {
            let rd = gl(d);
            let p = omega_power(&rd, d as i64);
            assert_eq!(p, t(&vec![1; d]));
        }
        let rd = gsp(2);
        assert_eq!(omega_power(&rd, 2), t(&[1, 1, 1, 1]));
    }

    #[test]
    fn length_is_subadditive_and_exact_on_descents() {
        for rd in [gl(3), gsp(2)] {
            let simples = simple_affine_reflections(&rd);
            let mut sample = vec![omega_generator(&rd)];
            for lam in rd.lambda_set(-1, 1).unwrap() {
                for w in rd.weyl_elements() {
                    sample.push(AffineWeylElement {
                        translation: w.act(&lam),
                        finite: w.clone(),
                    });
                }
            }
            for x in &sample {
                let lx = length(&rd, x);
                for s in &simples {
                    let sx = s.multiply(x);
                    let diff = length(&rd, &sx) - lx;
                    assert!(diff == 1 || diff == -1, "simple step must change length by 1");
                }
                for y in &sample {
                    let lxy = length(&rd, &x.multiply(y));
                    assert!(lxy <= lx + length(&rd, y));
                }
            }
        }
    }

    #[test]
    fn reduced_word_roundtrip() {
        for rd in [gl(2), gl(3), gsp(2)] {
            for lam in rd.lambda_set(-1, 2).unwrap() {
                for w in rd.weyl_elements() {
                    let x = AffineWeylElement {
                        translation: w.act(&lam),
                        finite: w,
                    };
                    let (word, k) = reduced_word(&rd, &x);
                    assert_eq!(word.len() as i64, length(&rd, &x));
                    assert_eq!(element_from_word(&rd, &word, k).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn reduced_word_is_lex_least() {
        let rd = gl(3);
        for lam in rd.lambda_set(-1, 1).unwrap() {
            for w in rd.weyl_elements() {
                let x = AffineWeylElement {
                    translation: w.act(&lam),
                    finite: w,
                };
                let all = all_reduced_words(&rd, &x);
                let best = all.iter().min().unwrap();
                assert_eq!(reduced_word(&rd, &x).0, *best);
            }
        }
    }

    #[test]
    fn gl1_is_pure_omega() {
        let rd = gl(1);
        let x = t(&[5]);
        assert_eq!(length(&rd, &x), 0);
        let (word, k) = reduced_word(&rd, &x);
        assert!(word.is_empty());
        assert_eq!(k, 5);
        assert_eq!(element_from_word(&rd, &[], 5).unwrap(), x);
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for rd in [gl(3), gsp(2)] {
            let mu = if rd.ambient == 3 {
                Coweight(vec![1, 1, 0])
            } else {
                Coweight(vec![1, 1, 0, 0])
            };
            let adm = admissible_set(&rd, &mu).unwrap();
            for y in &adm {
                let interval = lower_interval(&rd, y);
                for x in &adm {
                    assert_eq!(bruhat_leq(&rd, x, y), interval.contains(x));
                }
            }
        }
    }

    #[test]
    fn bruhat_respects_omega_components() {
        let rd = gl(2);
        let om = omega_generator(&rd);
        assert!(!bruhat_leq(&rd, &om, &t(&[1, 1])));
        assert!(bruhat_leq(&rd, &om, &om));
        assert!(bruhat_leq(&rd, &om, &t(&[2, -1])));
    }

    #[test]
    fn admissible_set_gl2() {
        let rd = gl(2);
        let adm = admissible_set(&rd, &Coweight(vec![1, 0])).unwrap();
        assert_eq!(adm.len(), 3);
        assert_eq!(adm[0], omega_generator(&rd));
        assert_eq!(length(&rd, &adm[1]), 1);
        assert_eq!(length(&rd, &adm[2]), 1);
        assert!(adm.contains(&t(&[1, 0])));
        assert!(adm.contains(&t(&[0, 1])));
    }

    #[test]
    fn admissible_set_gl4_minuscule_has_33_elements() {
        let rd = gl(4);
        let adm = admissible_set(&rd, &Coweight(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(adm.len(), 33);
        // the maximal elements are exactly the six translation conjugates
        let tops: Vec<_> = adm
            .iter()
            .filter(|x| length(&rd, x) == 4)
            .cloned()
            .collect();
        assert_eq!(tops.len(), 6);
        assert!(tops.iter().all(|x| x.is_translation()));
    }

    #[test]
    fn admissible_set_gsp4_minuscule_has_13_elements() {
        let rd = gsp(2);
        let adm = admissible_set(&rd, &Coweight(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(adm.len(), 13);
        for x in &adm {
            assert_eq!(omega_degree(&rd, x), 1);
        }
    }

    #[test]
    fn admissible_set_rejects_non_dominant() {
        let rd = gl(2);
        assert!(admissible_set(&rd, &Coweight(vec![0, 1])).is_err());
    }

    #[test]
    fn admissible_elements_are_bruhat_below_a_conjugate() {
        let rd = gsp(2);
        let mu = Coweight(vec![1, 1, 0, 0]);
        let adm = admissible_set(&rd, &mu).unwrap();
        for x in &adm {
            let ok = rd
                .weyl_orbit(&mu)
                .unwrap()
                .iter()
                .any(|nu| bruhat_leq(&rd, x, &t(&nu.0)));
            assert!(ok);
        }
    }

    #[test]
    fn double_coset_sizes() {
        let rd = gl(2);
        assert_eq!(double_coset(&rd, &Coweight(vec![1, 0])).unwrap().len(), 4);
        let rd = gl(3);
        assert_eq!(
            double_coset(&rd, &Coweight(vec![1, 1, 0])).unwrap().len(),
            18
        );
        let rd = gsp(2);
        let dc = double_coset(&rd, &Coweight(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(dc.len(), 4 * 8);
        // admissible translations sit inside the double coset
        for x in admissible_set(&rd, &Coweight(vec![1, 1, 0, 0])).unwrap() {
            if x.is_translation() {
                assert!(dc.contains(&x));
            }
        }
    }

    #[test]
    fn group_algebra_ring_axioms() {
        let rd = gl(2);
        let a = GroupAlgebraElement::basis(omega_generator(&rd));
        let b = GroupAlgebraElement::basis(t(&[1, 0]));
        let c = GroupAlgebraElement::basis(simple_affine_reflections(&rd)[1].clone());
        let ab_c = a.multiply(&b).multiply(&c);
        let a_bc = a.multiply(&b.multiply(&c));
        assert_eq!(ab_c, a_bc);
        let sum = a.add(&b).multiply(&c);
        assert_eq!(sum, a.multiply(&c).add(&b.multiply(&c)));
        // cancellation drops entries entirely
        let mut z = GroupAlgebraElement::zero();
        z.add_term(t(&[1, 0]), 1);
        z.add_term(t(&[1, 0]), -1);
        assert!(z.coeffs.is_empty());
    }
}
