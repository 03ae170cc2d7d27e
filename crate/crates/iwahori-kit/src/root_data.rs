//! Root data for GL(d) and GSp(2d) cocharacter lattices.
//!
//! Both groups are handled in one ambient picture: a coweight is an integer
//! vector, of length d for GL(d) and of length 2d for GSp(2d) subject to the
//! similitude constraint `lambda_i + lambda_{2d+1-i} = c` (constant c). Every
//! root is the functional `lambda_i - lambda_j` for an ambient index pair
//! (i, j), and the finite Weyl group acts by coordinate permutations, so the
//! two cases share all downstream code.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Gl,
    Gsp,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Gl => "GL",
            GroupKind::Gsp => "GSp",
        }
    }

    pub fn parse(s: &str) -> Result<GroupKind> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupKind::Gl),
            "gsp" => Ok(GroupKind::Gsp),
            _ => Err(Error::InvalidInput(format!("unknown group kind: {s}"))),
        }
    }
}

/// A cocharacter, written out in ambient coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| k * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation of ambient coordinates, stored as the image list:
/// `apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Transposition of two coordinates.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm(images)
    }

    /// self after other: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Coordinate action on coweights: `(w . lambda)_{w(i)} = lambda_i`.
    pub fn act(&self, cw: &Coweight) -> Coweight {
        let mut out = vec![0; cw.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x] = cw.0[i];
        }
        Coweight(out)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// A root, recorded as the ambient index pair of the functional
/// `lambda_i - lambda_j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

/// The root datum of GL(d) or GSp(2d) in ambient coordinates.
pub struct RootDatum {
    pub kind: GroupKind,
    /// The size parameter: GL(d) or GSp(2d).
    pub d: usize,
    /// Length of ambient coweight vectors (d for GL, 2d for GSp).
    pub ambient: usize,
    /// Positive roots, one canonical index pair per root.
    pub positive_roots: Vec<Root>,
    /// Simple roots, in Coxeter order s_1 .. s_rank.
    pub simple_roots: Vec<Root>,
    /// Coroots of the positive roots, as ambient vectors (same order).
    pub positive_coroots: Vec<Coweight>,
    /// Coroots of the simple roots (same order as `simple_roots`).
    pub simple_coroots: Vec<Coweight>,
    /// Generators of the finite Weyl group (one per simple root).
    pub weyl_generators: Vec<Perm>,
    /// Coefficient vector of the functional `2<rho, .>` (sum over positive
    /// root pairings).
    rho_twice_vec: Vec<i64>,
    /// Sum of all positive coroots (twice the dual rho).
    rho_hat_twice: Coweight,
    /// A fixed regular dominant coweight; a root pair is positive exactly
    /// when its functional is positive here.
    regular: Vec<i64>,
}

/// Builds the root datum. `d >= 1` for both kinds; GSp(2d) means rank-d
/// similitude symplectic data on length-2d vectors.
pub fn build_root_datum(kind: GroupKind, d: usize) -> Result<RootDatum> {
    if d == 0 {
        return Err(Error::InvalidRank("d must be at least 1".into()));
    }
    match kind {
        GroupKind::Gl => {
            let ambient = d;
            let mut positive_roots = Vec::new();
            for i in 0..d {
                for j in (i + 1)..d {
                    positive_roots.push(Root { i, j });
                }
            }
            let simple_roots: Vec<Root> =
                (0..d.saturating_sub(1)).map(|i| Root { i, j: i + 1 }).collect();
            let coroot = |r: &Root| {
                let mut v = vec![0i64; ambient];
                v[r.i] = 1;
                v[r.j] = -1;
                Coweight(v)
            };
            let positive_coroots: Vec<Coweight> = positive_roots.iter().map(coroot).collect();
            let simple_coroots: Vec<Coweight> = simple_roots.iter().map(coroot).collect();
            let weyl_generators: Vec<Perm> = simple_roots
                .iter()
                .map(|r| Perm::transposition(ambient, r.i, r.j))
                .collect();
            let regular: Vec<i64> = (0..d).map(|i| (d - i) as i64).collect();
            Ok(finish_datum(
                kind,
                d,
                ambient,
                positive_roots,
                simple_roots,
                positive_coroots,
                simple_coroots,
                weyl_generators,
                regular,
            ))
        }
        GroupKind::Gsp => {
            let ambient = 2 * d;
            // Canonical positive pairs: i < j, i < d, i + j <= 2d - 1
            // (0-based). This lists each restricted root exactly once:
            // lambda_i - lambda_j for i < j < d, lambda_i + lambda_j - c for
            // i < j < d (as the pair (i, 2d-1-j)), and 2 lambda_i - c (as the
            // pair (i, 2d-1-i)).
            let mut positive_roots = Vec::new();
            for i in 0..d {
                for j in (i + 1)..ambient {
                    if i + j <= 2 * d - 1 {
                        positive_roots.push(Root { i, j });
                    }
                }
            }
            debug_assert_eq!(positive_roots.len(), d * d);
            let mut simple_roots: Vec<Root> =
                (0..d.saturating_sub(1)).map(|i| Root { i, j: i + 1 }).collect();
            simple_roots.push(Root { i: d - 1, j: d });
            let coroot = |r: &Root| {
                let mut v = vec![0i64; ambient];
                if r.i + r.j == 2 * d - 1 {
                    v[r.i] = 1;
                    v[r.j] = -1;
                } else {
                    v[r.i] = 1;
                    v[r.j] = -1;
                    v[2 * d - 1 - r.i] = -1;
                    v[2 * d - 1 - r.j] += 1;
                }
                Coweight(v)
            };
            let positive_coroots: Vec<Coweight> = positive_roots.iter().map(coroot).collect();
            let simple_coroots: Vec<Coweight> = simple_roots.iter().map(coroot).collect();
            // Generators: s_i (i < d-1) swaps coordinates (i, i+1) and the
            // mirror pair; s_{d-1} swaps the middle pair (d-1, d).
            let mut weyl_generators = Vec::new();
            for i in 0..d.saturating_sub(1) {
                let mut images: Vec<usize> = (0..ambient).collect();
                images.swap(i, i + 1);
                images.swap(2 * d - 2 - i, 2 * d - 1 - i);
                weyl_generators.push(Perm(images));
            }
            weyl_generators.push(Perm::transposition(ambient, d - 1, d));
            let mut regular: Vec<i64> = vec![0; ambient];
            for i in 0..d {
                regular[i] = (2 * d - i) as i64;
                regular[2 * d - 1 - i] = -((2 * d - i) as i64);
            }
            Ok(finish_datum(
                kind,
                d,
                ambient,
                positive_roots,
                simple_roots,
                positive_coroots,
                simple_coroots,
                weyl_generators,
                regular,
            ))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish_datum(
    kind: GroupKind,
    d: usize,
    ambient: usize,
    positive_roots: Vec<Root>,
    simple_roots: Vec<Root>,
    positive_coroots: Vec<Coweight>,
    simple_coroots: Vec<Coweight>,
    weyl_generators: Vec<Perm>,
    regular: Vec<i64>,
) -> RootDatum {
    let mut rho_twice_vec = vec![0i64; ambient];
    for r in &positive_roots {
        rho_twice_vec[r.i] += 1;
        rho_twice_vec[r.j] -= 1;
    }
    let mut rho_hat_twice = Coweight::zero(ambient);
    for cr in &positive_coroots {
        rho_hat_twice = rho_hat_twice.add(cr);
    }
    RootDatum {
        kind,
        d,
        ambient,
        positive_roots,
        simple_roots,
        positive_coroots,
        simple_coroots,
        weyl_generators,
        rho_twice_vec,
        rho_hat_twice,
        regular,
    }
}

impl RootDatum {
    /// Coxeter rank: number of simple roots (d-1 for GL(d), d for GSp(2d)).
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Checks that a vector is a legal coweight for this datum (right length,
    /// and for GSp a constant anti-diagonal pair sum).
    pub fn validate_coweight(&self, cw: &Coweight) -> Result<()> {
        if cw.len() != self.ambient {
            return Err(Error::DatumMismatch {
                got: cw.0.clone(),
                reason: format!("expected length {}, got {}", self.ambient, cw.len()),
            });
        }
        if self.kind == GroupKind::Gsp {
            let c = cw.0[0] + cw.0[self.ambient - 1];
            for i in 0..self.d {
                if cw.0[i] + cw.0[self.ambient - 1 - i] != c {
                    return Err(Error::DatumMismatch {
                        got: cw.0.clone(),
                        reason: "anti-diagonal pair sums are not constant".into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The central coordinate that dominance comparisons must preserve:
    /// coordinate sum for GL, similitude constant for GSp.
    pub fn central_charge(&self, cw: &Coweight) -> i64 {
        match self.kind {
            GroupKind::Gl => cw.sum(),
            GroupKind::Gsp => cw.0[0] + cw.0[self.ambient - 1],
        }
    }

    /// Completes a length-d half coweight for GSp to the full length-2d
    /// vector with similitude constant `c`. For GL this is the identity.
    pub fn complete_coweight(&self, half: &[i64], c: i64) -> Coweight {
        match self.kind {
            GroupKind::Gl => Coweight(half.to_vec()),
            GroupKind::Gsp => {
                let mut v = half.to_vec();
                for i in (0..half.len()).rev() {
                    v.push(c - half[i]);
                }
                Coweight(v)
            }
        }
    }

    /// Pairing of a coweight with the root `lambda_i - lambda_j`.
    pub fn pairing(&self, cw: &Coweight, root: &Root) -> i64 {
        cw.0[root.i] - cw.0[root.j]
    }

    /// Whether the functional `lambda_a - lambda_b` is a positive root
    /// direction (decided on a fixed regular dominant coweight).
    pub fn pair_is_positive(&self, a: usize, b: usize) -> bool {
        self.regular[a] > self.regular[b]
    }

    /// Sum of pairings with all positive roots: `2<rho, lambda>`, the length
    /// of the translation by `lambda` when `lambda` is dominant.
    pub fn rho_pairing_twice(&self, cw: &Coweight) -> Result<i64> {
        self.validate_coweight(cw)?;
        Ok(cw
            .0
            .iter()
            .zip(&self.rho_twice_vec)
            .map(|(a, u)| a * u)
            .sum())
    }

    /// Sum of all positive coroots (an ambient vector, used by character
    /// computations).
    pub fn rho_hat_twice(&self) -> &Coweight {
        &self.rho_hat_twice
    }

    pub fn is_dominant(&self, cw: &Coweight) -> Result<bool> {
        self.validate_coweight(cw)?;
        Ok(self
            .simple_roots
            .iter()
            .all(|r| self.pairing(cw, r) >= 0))
    }

    /// Coefficients of `delta` on the simple coroot basis, provided `delta`
    /// lies in the non-negative integer span; `None` otherwise. Both simple
    /// coroot systems here are triangular, so the coefficients are forced:
    /// they are prefix sums of `delta` (GL) or of its first half (GSp).
    pub fn coroot_coefficients(&self, delta: &Coweight) -> Option<Vec<i64>> {
        match self.kind {
            GroupKind::Gl => {
                if delta.sum() != 0 {
                    return None;
                }
                let mut coeffs = Vec::with_capacity(self.rank());
                let mut acc = 0i64;
                for k in 0..self.ambient - 1 {
                    acc += delta.0[k];
                    if acc < 0 {
                        return None;
                    }
                    coeffs.push(acc);
                }
                Some(coeffs)
            }
            GroupKind::Gsp => {
                let c = delta.0[0] + delta.0[self.ambient - 1];
                if c != 0 {
                    return None;
                }
                for i in 0..self.d {
                    if delta.0[i] + delta.0[self.ambient - 1 - i] != 0 {
                        return None;
                    }
                }
                let mut coeffs = Vec::with_capacity(self.d);
                let mut acc = 0i64;
                for k in 0..self.d {
                    acc += delta.0[k];
                    if acc < 0 {
                        return None;
                    }
                    coeffs.push(acc);
                }
                Some(coeffs)
            }
        }
    }

    /// Dominance order on dominant coweights: `a <= b` iff `b - a` is a
    /// non-negative integer combination of positive coroots.
    pub fn dominance_leq(&self, a: &Coweight, b: &Coweight) -> Result<bool> {
        if !self.is_dominant(a)? {
            return Err(Error::NonDominant(a.0.clone()));
        }
        if !self.is_dominant(b)? {
            return Err(Error::NonDominant(b.0.clone()));
        }
        Ok(self.coroot_coefficients(&b.sub(a)).is_some())
    }

    /// Height of `b - a` in the simple coroot basis (only meaningful when
    /// `a <= b`).
    pub fn dominance_height(&self, a: &Coweight, b: &Coweight) -> Option<i64> {
        self.coroot_coefficients(&b.sub(a))
            .map(|cs| cs.iter().sum())
    }

    /// The full Weyl orbit of a coweight.
    pub fn weyl_orbit(&self, cw: &Coweight) -> Result<BTreeSet<Coweight>> {
        self.validate_coweight(cw)?;
        let mut orbit = BTreeSet::new();
        let mut queue = vec![cw.clone()];
        orbit.insert(cw.clone());
        while let Some(x) = queue.pop() {
            for g in &self.weyl_generators {
                let y = g.act(&x);
                if orbit.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        Ok(orbit)
    }

    /// The dominant representative of the Weyl orbit.
    pub fn dominant_conjugate(&self, cw: &Coweight) -> Coweight {
        match self.kind {
            GroupKind::Gl => {
                let mut v = cw.0.clone();
                v.sort_unstable_by(|a, b| b.cmp(a));
                Coweight(v)
            }
            GroupKind::Gsp => {
                let c = cw.0[0] + cw.0[self.ambient - 1];
                // The hyperoctahedral group acts as signed permutations of
                // xi_i = 2 lambda_i - c; dominant means xi weakly decreasing
                // and non-negative.
                let mut xi: Vec<i64> = (0..self.d).map(|i| (2 * cw.0[i] - c).abs()).collect();
                xi.sort_unstable_by(|a, b| b.cmp(a));
                let half: Vec<i64> = xi.iter().map(|x| (x + c) / 2).collect();
                self.complete_coweight(&half, c)
            }
        }
    }

    /// All elements of the finite Weyl group, as permutations.
    pub fn weyl_elements(&self) -> Vec<Perm> {
        let mut seen = BTreeSet::new();
        let id = Perm::identity(self.ambient);
        let mut queue = vec![id.clone()];
        seen.insert(id);
        while let Some(w) = queue.pop() {
            for g in &self.weyl_generators {
                let x = g.compose(&w);
                if seen.insert(x.clone()) {
                    queue.push(x);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Coxeter length of a finite Weyl element: the number of positive roots
    /// it sends to negative ones.
    pub fn finite_length(&self, w: &Perm) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| !self.pair_is_positive(w.apply(r.i), w.apply(r.j)))
            .count()
    }

    /// The sign character `(-1)^{length(w)}`.
    pub fn weyl_sign(&self, w: &Perm) -> i64 {
        if self.finite_length(w) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The coweights `Lambda(n_-, n_+)`: dominant windows with entries bound
    /// by `n_+` above and by `n_-` (GL) or the similitude midpoint (GSp)
    /// below. Sorted descending so larger coweights come first.
    pub fn lambda_set(&self, n_minus: i64, n_plus: i64) -> Result<Vec<Coweight>> {
        if !(n_minus <= 0 && 0 < n_plus) {
            return Err(Error::InvalidWindow { n_minus, n_plus });
        }
        let (lo, c) = match self.kind {
            GroupKind::Gl => (n_minus, 0),
            GroupKind::Gsp => {
                let c = n_plus + n_minus;
                // smallest integer >= c/2
                (if c >= 0 { (c + 1) / 2 } else { c / 2 }, c)
            }
        };
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.d);
        self.descending_windows(n_plus, lo, &mut prefix, &mut out, c);
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    }

    fn descending_windows(
        &self,
        hi: i64,
        lo: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Coweight>,
        c: i64,
    ) {
        if prefix.len() == self.d {
            out.push(self.complete_coweight(prefix, c));
            return;
        }
        let top = prefix.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            prefix.push(v);
            self.descending_windows(hi, lo, prefix, out, c);
            prefix.pop();
        }
    }

    /// Dimension of the highest-weight module `V_lambda` of the dual group,
    /// by the Weyl dimension formula over positive roots; exact integer
    /// arithmetic on doubled vectors.
    pub fn weyl_dimension(&self, cw: &Coweight) -> Result<i128> {
        if !self.is_dominant(cw)? {
            return Err(Error::NonDominant(cw.0.clone()));
        }
        let shifted = cw.scale(2).add(&self.rho_hat_twice);
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for r in &self.positive_roots {
            num *= self.pairing(&shifted, r) as i128;
            den *= self.pairing(&self.rho_hat_twice, r) as i128;
        }
        debug_assert!(den != 0 && num % den == 0);
        Ok(num / den)
    }

    /// Splits an arbitrary coweight as `lambda1 - lambda2` with both parts
    /// dominant, by adding fundamental-type completions for each violated
    /// simple root.
    pub fn dominant_decomposition(&self, cw: &Coweight) -> Result<(Coweight, Coweight)> {
        self.validate_coweight(cw)?;
        let mut lambda2 = Coweight::zero(self.ambient);
        for (idx, r) in self.simple_roots.iter().enumerate() {
            let deficit = -self.pairing(cw, r);
            if deficit > 0 {
                lambda2 = lambda2.add(&self.fundamental_like(idx).scale(deficit));
            }
        }
        let lambda1 = cw.add(&lambda2);
        debug_assert!(self.is_dominant(&lambda1).unwrap());
        debug_assert!(self.is_dominant(&lambda2).unwrap());
        Ok((lambda1, lambda2))
    }

    /// A dominant coweight pairing to 1 (GL) or at least 1 (GSp long root)
    /// with simple root `idx` and 0 with the others.
    fn fundamental_like(&self, idx: usize) -> Coweight {
        match self.kind {
            GroupKind::Gl => {
                let mut v = vec![0i64; self.ambient];
                for item in v.iter_mut().take(idx + 1) {
                    *item = 1;
                }
                Coweight(v)
            }
            GroupKind::Gsp => {
                let mut half = vec![0i64; self.d];
                for item in half.iter_mut().take(idx + 1) {
                    *item = 1;
                }
                self.complete_coweight(&half, 0)
            }
        }
    }

    /// True when every root pairing of `lambda` lies in {-1, 0, 1}, i.e. the
    /// weights of `V_lambda` form a single Weyl orbit.
    pub fn is_minuscule(&self, cw: &Coweight) -> Result<bool> {
        self.validate_coweight(cw)?;
        Ok(self
            .positive_roots
            .iter()
            .all(|r| self.pairing(cw, r).abs() <= 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(d: usize) -> RootDatum {
        build_root_datum(GroupKind::Gl, d).unwrap()
    }

    fn gsp(d: usize) -> RootDatum {
        build_root_datum(GroupKind::Gsp, d).unwrap()
    }

    #[test]
    fn gl2_counts() {
        let rd = gl(2);
        assert_eq!(rd.positive_roots.len(), 1);
        assert_eq!(rd.weyl_elements().len(), 2);
    }

    #[test]
    fn gsp4_counts_and_rho() {
        let rd = gsp(2);
        assert_eq!(rd.positive_roots.len(), 4);
        assert_eq!(rd.weyl_elements().len(), 8);
        let mu = Coweight(vec![1, 1, 0, 0]);
        assert_eq!(rd.rho_pairing_twice(&mu).unwrap(), 3);
    }

    #[test]
    fn gsp6_weyl_order() {
        let rd = gsp(3);
        assert_eq!(rd.positive_roots.len(), 9);
        assert_eq!(rd.weyl_elements().len(), 48);
    }

    #[test]
    fn gl4_rho_pairing() {
        let rd = gl(4);
        let mu = Coweight(vec![1, 1, 0, 0]);
        assert_eq!(rd.rho_pairing_twice(&mu).unwrap(), 4);
    }

    #[test]
    fn simple_coroots_pair_to_two() {
        for rd in [gl(2), gl(3), gl(4), gsp(1), gsp(2), gsp(3)] {
            for (r, cr) in rd.simple_roots.iter().zip(&rd.simple_coroots) {
                assert_eq!(rd.pairing(cr, r), 2);
            }
            // rho pairs to 1 with every simple coroot
            for cr in &rd.simple_coroots {
                assert_eq!(rd.rho_pairing_twice(cr).unwrap(), 2);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rd = gl(3);
        let a = Coweight(vec![1, 1, 0]);
        let b = Coweight(vec![2, 0, 0]);
        assert!(rd.dominance_leq(&a, &b).unwrap());
        assert!(!rd.dominance_leq(&b, &a).unwrap());
        // different coordinate sums are incomparable
        let c = Coweight(vec![1, 0, 0]);
        assert!(!rd.dominance_leq(&c, &b).unwrap());
    }

    #[test]
    fn dominance_rejects_non_dominant() {
        let rd = gl(2);
        let bad = Coweight(vec![0, 1]);
        let good = Coweight(vec![1, 0]);
        assert!(rd.dominance_leq(&bad, &good).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order_on_small_window() {
        for rd in [gl(3), gsp(2)] {
            let set = rd.lambda_set(-1, 1).unwrap();
            for a in &set {
                assert!(rd.dominance_leq(a, a).unwrap());
                for b in &set {
                    let ab = rd.dominance_leq(a, b).unwrap();
                    let ba = rd.dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    for c in &set {
                        if ab && rd.dominance_leq(b, c).unwrap() {
                            assert!(rd.dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let rd = gsp(2);
        let mu = Coweight(vec![1, 1, 0, 0]);
        let orbit = rd.weyl_orbit(&mu).unwrap();
        assert_eq!(orbit.len(), 4);
        for x in &orbit {
            assert_eq!(rd.dominant_conjugate(x), mu);
            assert_eq!(rd.central_charge(x), 1);
        }

        let rd = gl(4);
        let mu = Coweight(vec![1, 1, 0, 0]);
        assert_eq!(rd.weyl_orbit(&mu).unwrap().len(), 6);
    }

    #[test]
    fn orbit_has_unique_dominant_element() {
        for rd in [gl(3), gsp(2)] {
            for lam in rd.lambda_set(-1, 2).unwrap() {
                let orbit = rd.weyl_orbit(&lam).unwrap();
                let dominants: Vec<_> = orbit
                    .iter()
                    .filter(|x| rd.is_dominant(x).unwrap())
                    .collect();
                assert_eq!(dominants.len(), 1);
                assert_eq!(*dominants[0], lam);
            }
        }
    }

    #[test]
    fn lambda_set_examples() {
        let rd = gl(2);
        let set = rd.lambda_set(0, 1).unwrap();
        assert_eq!(
            set,
            vec![
                Coweight(vec![1, 1]),
                Coweight(vec![1, 0]),
                Coweight(vec![0, 0])
            ]
        );

        let rd = gsp(2);
        let set = rd.lambda_set(0, 1).unwrap();
        assert_eq!(set, vec![Coweight(vec![1, 1, 0, 0])]);

        for d in 1..=4 {
            let rd = gl(d);
            assert_eq!(rd.lambda_set(0, 1).unwrap().len(), d + 1);
        }

        assert!(rd.lambda_set(1, 2).is_err());
    }

    #[test]
    fn lambda_set_elements_are_dominant_and_ordered() {
        for rd in [gl(3), gsp(2), gsp(3)] {
            for (nm, np) in [(0, 1), (-1, 1), (0, 2), (-2, 2)] {
                let set = rd.lambda_set(nm, np).unwrap();
                for lam in &set {
                    assert!(rd.is_dominant(lam).unwrap());
                }
                let mut sorted = set.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                assert_eq!(set, sorted);
            }
        }
    }

    #[test]
    fn every_small_dominant_coweight_is_in_some_window() {
        // GL(3): every dominant coweight with entries in [-2, 2] appears in a
        // lambda_set for some feasible window.
        let rd = gl(3);
        for a in -2..=2i64 {
            for b in -2..=a {
                for c in -2..=b {
                    let lam = Coweight(vec![a, b, c]);
                    let found = (-2..=0).any(|nm| {
                        (1..=3).any(|np| {
                            rd.lambda_set(nm, np)
                                .map(|s| s.contains(&lam))
                                .unwrap_or(false)
                        })
                    });
                    assert!(found, "{lam} missing from all windows");
                }
            }
        }
        // GSp(4): same for halves in [-2, 2] and similitude in [-2, 2].
        let rd = gsp(2);
        for c in -2..=2i64 {
            for a in -2..=2i64 {
                for b in -2..=a {
                    let lam = rd.complete_coweight(&[a, b], c);
                    if !rd.is_dominant(&lam).unwrap() {
                        continue;
                    }
                    let found = (-6..=0).any(|nm| {
                        (1..=4).any(|np| {
                            rd.lambda_set(nm, np)
                                .map(|s| s.contains(&lam))
                                .unwrap_or(false)
                        })
                    });
                    assert!(found, "{lam} missing from all windows");
                }
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let rd = gl(2);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![1, 0])).unwrap(), 2);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![2, 0])).unwrap(), 3);
        let rd = gl(3);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![1, 0, 0])).unwrap(), 3);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![1, 1, 0])).unwrap(), 3);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![2, 1, 0])).unwrap(), 8);
        let rd = gsp(2);
        assert_eq!(rd.weyl_dimension(&Coweight(vec![1, 1, 0, 0])).unwrap(), 4);
    }

    #[test]
    fn minuscule_examples() {
        let rd = gl(2);
        assert!(rd.is_minuscule(&Coweight(vec![1, 0])).unwrap());
        assert!(!rd.is_minuscule(&Coweight(vec![2, 0])).unwrap());
        let rd = gsp(2);
        assert!(rd.is_minuscule(&Coweight(vec![1, 1, 0, 0])).unwrap());
        let rd = gsp(3);
        assert!(rd
            .is_minuscule(&Coweight(vec![1, 1, 1, 0, 0, 0]))
            .unwrap());
    }

    #[test]
    fn dominant_decomposition_is_dominant_and_exact() {
        for rd in [gl(2), gl(3), gsp(2)] {
            for lam in rd.lambda_set(-2, 2).unwrap() {
                for w in rd.weyl_elements() {
                    let nu = w.act(&lam);
                    let (l1, l2) = rd.dominant_decomposition(&nu).unwrap();
                    assert!(rd.is_dominant(&l1).unwrap());
                    assert!(rd.is_dominant(&l2).unwrap());
                    assert_eq!(l1.sub(&l2), nu);
                }
            }
        }
    }

    #[test]
    fn finite_length_and_sign() {
        let rd = gl(3);
        let mut by_len = std::collections::BTreeMap::new();
        for w in rd.weyl_elements() {
            *by_len.entry(rd.finite_length(&w)).or_insert(0) += 1;
        }
        // S_3 length generating function: 1 + 2q + 2q^2 + q^3
        assert_eq!(by_len, [(0, 1), (1, 2), (2, 2), (3, 1)].into());
        let rd = gsp(2);
        let total: usize = rd.weyl_elements().len();
        assert_eq!(total, 8);
        let max_len = rd
            .weyl_elements()
            .iter()
            .map(|w| rd.finite_length(w))
            .max()
            .unwrap();
        assert_eq!(max_len, rd.positive_roots.len());
    }

    #[test]
    fn gsp_validation() {
        let rd = gsp(2);
        assert!(rd.validate_coweight(&Coweight(vec![1, 1, 0, 0])).is_ok());
        assert!(rd.validate_coweight(&Coweight(vec![1, 0, 0, 0])).is_err());
        assert!(rd.validate_coweight(&Coweight(vec![1, 1, 0])).is_err());
    }
}
