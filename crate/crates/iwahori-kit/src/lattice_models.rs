//! Brute-force point enumeration and orbit stratification for finite lattice
//! models over F_q[t], at sizes where exhaustive search is the honest check.
//!
//! Fix a window `n_- <= 0 < n_+` of t-powers, write `N = n_+ - n_-`, and
//! truncate every lattice to the finite module `W = t^{n_-} k[t]^m / t^{n_+}
//! k[t]^m`, a vector space of dimension `m * N` over `F_q` on which
//! multiplication by t acts nilpotently. Points of the three supported
//! models are tuples of subspaces of such windows:
//!
//! * `M` (GL only): tuples `(L_0, ..., L_{d-1})` of subspaces of W of
//!   dimension `n_+ d - r` with `alpha(L_i) <= L_{i+1}` read cyclically,
//!   where `alpha` is the shift `(x_1, ..., x_d) -> (x_2, ..., x_d, t x_1)`
//!   and `alpha^d = t`. Membership of t L_i in L_i is then automatic.
//! * `Grass`: a single t-stable subspace, the image of a tuple under
//!   forgetting everything but `L_0`; for GSp the subspace must in addition
//!   be autodual for the alternating form, which for a t-stable subspace of
//!   half dimension reduces to an isotropy check. Orbits of the full
//!   automorphism group of the window are indexed by the dominant coweights
//!   that fit in the window, and the index is computable directly from the
//!   module type of the quotient W/L.
//! * `N`: the same point set as `M`, presented as a growing chain
//!   `LL_0 <= LL_1 <= ... <= LL_d = t^{-1} LL_0` inside the window enlarged
//!   by one lower t-layer. Enumerating the chain presentation independently
//!   and comparing with the converted `M` points cross-checks both routes.
//!
//! For GSp(2d) the ambient module has 2d coordinates carrying the
//! alternating form with Gram matrix `(0 J; -J 0)`, points of `M` and `N`
//! are chains `LL_0 <= ... <= LL_d` whose two endpoints are autodual (for
//! the plain and the t-twisted form respectively), and the set of points
//! carries a duality involution, implemented by `chain_dual`, that the
//! enumeration must respect.
//!
//! Stratification acts with the finite automorphism group of the chain (the
//! reduction of the Iwahori group: matrices over `F_q[t]/t^{N+1}` that are
//! upper triangular mod t, intersected with the similitude group for GSp)
//! or of the bare window (all of `GL_d(F_q[t]/t^N)`, respectively its
//! similitude analogue). Orbit sizes are compared against `q^{length(w)}`
//! over a caller-supplied candidate set of affine Weyl elements; the
//! expected candidate sets are unions of admissible sets over the window
//! coweights, see `candidate_elements`.

use crate::affine_weyl::{self, AffineWeylElement};
use crate::root_data::{Coweight, GroupKind, RootDatum};
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::{BTreeSet, HashMap};

/// Arithmetic tables for F_2, F_3 and F_4. Elements are `u8` indices below
/// q. For F_4 the index `a + 2b` stands for `a + b x` with `x^2 = x + 1`
/// over F_2, so addition is XOR.
#[derive(Clone, Debug)]
pub struct Field {
    q: u64,
    add_t: [[u8; 4]; 4],
    mul_t: [[u8; 4]; 4],
    neg_t: [u8; 4],
    inv_t: [u8; 4],
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        if !matches!(q, 2 | 3 | 4) {
            return Err(Error::UnsupportedField(q));
        }
        let n = q as usize;
        let mut add_t = [[0u8; 4]; 4];
        let mut mul_t = [[0u8; 4]; 4];
        for a in 0..n {
            for b in 0..n {
                if q == 4 {
                    add_t[a][b] = (a ^ b) as u8;
                    mul_t[a][b] = gf4_mul(a as u8, b as u8);
                } else {
                    add_t[a][b] = ((a + b) % n) as u8;
                    mul_t[a][b] = ((a * b) % n) as u8;
                }
            }
        }
        let mut neg_t = [0u8; 4];
        let mut inv_t = [0u8; 4];
        for a in 0..n {
            for b in 0..n {
                if add_t[a][b] == 0 {
                    neg_t[a] = b as u8;
                }
                if mul_t[a][b] == 1 {
                    inv_t[a] = b as u8;
                }
            }
        }
        Ok(Field {
            q,
            add_t,
            mul_t,
            neg_t,
            inv_t,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add_t[a as usize][b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_t[a as usize][b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv_t[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    let mut out = 0u8;
    if b & 1 != 0 {
        out ^= a;
    }
    if b & 2 != 0 {
        // multiply a by x, using x^2 = x + 1
        let ax = ((a & 1) << 1) ^ if a & 2 != 0 { 0b11 } else { 0 };
        out ^= ax;
    }
    out
}

/// A subspace of F_q^n held in canonical reduced row echelon form, rows
/// ordered by pivot. Equal values are equal subspaces, so the derived
/// ordering and hash are valid dictionary keys and deterministic sort keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    /// Canonicalize an arbitrary spanning set.
    pub fn from_rows(fq: &Field, ambient: usize, rows: Vec<Vec<u8>>) -> Subspace {
        let mut rows = rows;
        rref(fq, ambient, &mut rows);
        Subspace { ambient, rows }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn contains_vector(&self, fq: &Field, v: &[u8]) -> bool {
        let mut v = v.to_vec();
        reduce_vector(fq, &self.rows, &mut v);
        v.iter().all(|&c| c == 0)
    }

    pub fn contains(&self, fq: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains_vector(fq, r))
    }

    pub fn sum(&self, fq: &Field, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::from_rows(fq, self.ambient, rows)
    }

    /// Image under a linear map given column-sparse on basis vectors.
    pub fn image(&self, fq: &Field, map: &SparseMap) -> Subspace {
        let rows = self.rows.iter().map(|r| map.apply(fq, r)).collect();
        Subspace::from_rows(fq, map.dst, rows)
    }
}

/// A linear map F_q^src -> F_q^dst stored column-sparse: `cols[j]` lists the
/// image of basis vector j as (index, coefficient) pairs.
#[derive(Clone, Debug)]
pub struct SparseMap {
    pub src: usize,
    pub dst: usize,
    pub cols: Vec<Vec<(usize, u8)>>,
}

impl SparseMap {
    pub fn apply(&self, fq: &Field, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.dst];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for &(i, a) in &self.cols[j] {
                    out[i] = fq.add(out[i], fq.mul(a, c));
                }
            }
        }
        out
    }
}

fn rref(fq: &Field, ambient: usize, rows: &mut Vec<Vec<u8>>) {
    let mut pivot_row = 0;
    for col in 0..ambient {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let scale = fq.inv(rows[pivot_row][col]);
        if scale != 1 {
            for c in col..ambient {
                rows[pivot_row][c] = fq.mul(rows[pivot_row][c], scale);
            }
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && rows[r2][col] != 0 {
                let f = rows[r2][col];
                for c in col..ambient {
                    let s = fq.mul(f, rows[pivot_row][c]);
                    rows[r2][c] = fq.sub(rows[r2][c], s);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

fn reduce_vector(fq: &Field, rows: &[Vec<u8>], v: &mut [u8]) {
    for row in rows {
        let p = row
            .iter()
            .position(|&c| c != 0)
            .expect("canonical rows are nonzero");
        if v[p] != 0 {
            let f = v[p];
            for c in p..v.len() {
                let s = fq.mul(f, row[c]);
                v[c] = fq.sub(v[c], s);
            }
        }
    }
}

/// Visit every subspace S with `bottom <= S <= top` and `dim S = k`, in a
/// deterministic order. The work is one reduced echelon matrix per subspace
/// of the quotient top/bottom, so the number of visits is the Gaussian
/// binomial `[dim(top/bottom) choose k - dim(bottom)]_q`.
pub fn for_each_subspace_between(
    fq: &Field,
    bottom: &Subspace,
    top: &Subspace,
    k: usize,
    f: &mut impl FnMut(Subspace),
) {
    debug_assert_eq!(bottom.ambient(), top.ambient());
    let ambient = top.ambient();
    if k < bottom.dim() || k > top.dim() || !top.contains(fq, bottom) {
        return;
    }
    let m = top.dim() - bottom.dim();
    let r = k - bottom.dim();
    let comp = complement_basis(fq, bottom, top);
    for_each_echelon_matrix(fq, m, r, &mut |mat| {
        let mut rows = bottom.rows().to_vec();
        for qrow in mat {
            let mut v = vec![0u8; ambient];
            for (j, &c) in qrow.iter().enumerate() {
                if c != 0 {
                    for (vc, bc) in v.iter_mut().zip(&comp[j]) {
                        *vc = fq.add(*vc, fq.mul(c, *bc));
                    }
                }
            }
            rows.push(v);
        }
        f(Subspace::from_rows(fq, ambient, rows));
    });
}

pub fn subspaces_between(fq: &Field, bottom: &Subspace, top: &Subspace, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for_each_subspace_between(fq, bottom, top, k, &mut |s| out.push(s));
    out.sort();
    out
}

/// A basis of `top` modulo `bottom`, greedily extracted from the rows of
/// `top`.
fn complement_basis(fq: &Field, bottom: &Subspace, top: &Subspace) -> Vec<Vec<u8>> {
    let mut cur = bottom.clone();
    let mut comp = Vec::new();
    for row in top.rows() {
        if !cur.contains_vector(fq, row) {
            comp.push(row.clone());
            let mut rows = cur.rows().to_vec();
            rows.push(row.clone());
            cur = Subspace::from_rows(fq, bottom.ambient(), rows);
        }
    }
    comp
}

/// Visit every reduced echelon r x m matrix over F_q.
fn for_each_echelon_matrix(fq: &Field, m: usize, r: usize, f: &mut impl FnMut(&[Vec<u8>])) {
    if r == 0 {
        f(&[]);
        return;
    }
    if r > m {
        return;
    }
    for pivots in (0..m).combinations(r) {
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..m {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut mat = vec![vec![0u8; m]; r];
        for (i, &p) in pivots.iter().enumerate() {
            mat[i][p] = 1;
        }
        let mut digits = vec![0u8; free.len()];
        loop {
            for (d, &(i, j)) in digits.iter().zip(&free) {
                mat[i][j] = *d;
            }
            f(&mat);
            // odometer increment in base q
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                digits[pos] += 1;
                if (digits[pos] as u64) < fq.q() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
}

/// The Gaussian binomial `[n choose k]_q`, saturating at `u128::MAX` instead
/// of overflowing.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut g: u128 = 1;
    for i in 1..=k {
        let num = match (q as u128).checked_pow((n - k + i) as u32) {
            Some(p) => p - 1,
            None => return u128::MAX,
        };
        let den = (q as u128).pow(i as u32) - 1;
        g = match g.checked_mul(num) {
            Some(p) => p / den,
            None => return u128::MAX,
        };
    }
    g
}

/// Which of the three finite models to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    M,
    Grass,
    N,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::M => "M",
            ModelKind::Grass => "Grass",
            ModelKind::N => "N",
        }
    }

    pub fn parse(s: &str) -> Result<ModelKind> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(ModelKind::M),
            "grass" => Ok(ModelKind::Grass),
            "n" => Ok(ModelKind::N),
            _ => Err(Error::InvalidInput(format!("unknown model kind: {s}"))),
        }
    }
}

/// Parameters of one finite lattice model.
#[derive(Clone, Debug)]
pub struct LatticeModelParams {
    pub kind: GroupKind,
    pub d: usize,
    /// Target corank of each member: GL modules have dimension
    /// `n_+ d - r`. GL only; the GSp rank is forced by autoduality.
    pub r: Option<i64>,
    pub n_minus: i64,
    pub n_plus: i64,
    pub q: u64,
    pub model: ModelKind,
}

impl LatticeModelParams {
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidModelParams("d must be positive".into()));
        }
        if !(self.n_minus <= 0 && 0 < self.n_plus) {
            return Err(Error::InvalidWindow {
                n_minus: self.n_minus,
                n_plus: self.n_plus,
            });
        }
        Field::new(self.q)?;
        match self.kind {
            GroupKind::Gl => {
                let r = self.r.ok_or_else(|| {
                    Error::InvalidModelParams("GL models need the corank r".into())
                })?;
                let d = self.d as i64;
                if r < d * self.n_minus || r > d * self.n_plus {
                    return Err(Error::InvalidModelParams(format!(
                        "corank r={r} outside [{}, {}]",
                        d * self.n_minus,
                        d * self.n_plus
                    )));
                }
            }
            GroupKind::Gsp => {
                if self.r.is_some() {
                    return Err(Error::InvalidModelParams(
                        "GSp ranks are forced by autoduality; drop r".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The number N of retained t-layers of the basic window.
    pub fn window_width(&self) -> usize {
        (self.n_plus - self.n_minus) as usize
    }

    /// Ambient coordinates: d for GL, 2d for GSp.
    pub fn coords(&self) -> usize {
        match self.kind {
            GroupKind::Gl => self.d,
            GroupKind::Gsp => 2 * self.d,
        }
    }

    /// The common dimension of `L_0` in window coordinates.
    pub fn member_rank(&self) -> usize {
        match self.kind {
            GroupKind::Gl => (self.n_plus * self.d as i64 - self.r.unwrap_or(0)) as usize,
            GroupKind::Gsp => self.d * self.window_width(),
        }
    }

    fn grass_layout(&self) -> Layout {
        Layout {
            layers: self.window_width(),
            coords: self.coords(),
        }
    }

    fn chain_layout(&self) -> Layout {
        Layout {
            layers: self.window_width() + 1,
            coords: self.coords(),
        }
    }
}

/// Flat coordinates for a window of t-layers: index = layer * coords +
/// coordinate, with layer 0 the lowest retained power of t.
#[derive(Clone, Copy, Debug)]
struct Layout {
    layers: usize,
    coords: usize,
}

impl Layout {
    fn dim(&self) -> usize {
        self.layers * self.coords
    }

    fn idx(&self, p: usize, j: usize) -> usize {
        p * self.coords + j
    }

    /// Multiplication by t: raises the layer, kills the top one.
    fn t_map(&self) -> SparseMap {
        let mut cols = Vec::with_capacity(self.dim());
        for p in 0..self.layers {
            for j in 0..self.coords {
                if p + 1 < self.layers {
                    cols.push(vec![(self.idx(p + 1, j), 1)]);
                } else {
                    cols.push(Vec::new());
                }
            }
        }
        SparseMap {
            src: self.dim(),
            dst: self.dim(),
            cols,
        }
    }

    /// The cyclic shift with `alpha^{coords} = t`: coordinate j moves to
    /// j - 1, and coordinate 0 moves to the last place gaining one t.
    fn alpha_map(&self) -> SparseMap {
        let mut cols = Vec::with_capacity(self.dim());
        for p in 0..self.layers {
            for j in 0..self.coords {
                if j > 0 {
                    cols.push(vec![(self.idx(p, j - 1), 1)]);
                } else if p + 1 < self.layers {
                    cols.push(vec![(self.idx(p + 1, self.coords - 1), 1)]);
                } else {
                    cols.push(Vec::new());
                }
            }
        }
        SparseMap {
            src: self.dim(),
            dst: self.dim(),
            cols,
        }
    }

    /// The subspace spanned by the flat basis vectors selected by `keep`.
    fn coordinate_subspace(&self, fq: &Field, keep: impl Fn(usize, usize) -> bool) -> Subspace {
        let mut rows = Vec::new();
        for p in 0..self.layers {
            for j in 0..self.coords {
                if keep(p, j) {
                    let mut v = vec![0u8; self.dim()];
                    v[self.idx(p, j)] = 1;
                    rows.push(v);
                }
            }
        }
        Subspace::from_rows(fq, self.dim(), rows)
    }

    fn full(&self, fq: &Field) -> Subspace {
        self.coordinate_subspace(fq, |_, _| true)
    }

    fn is_t_stable(&self, fq: &Field, s: &Subspace) -> bool {
        for row in s.rows() {
            let mut shifted = vec![0u8; self.dim()];
            for p in 0..self.layers.saturating_sub(1) {
                for j in 0..self.coords {
                    shifted[self.idx(p + 1, j)] = row[self.idx(p, j)];
                }
            }
            if !s.contains_vector(fq, &shifted) {
                return false;
            }
        }
        true
    }
}

/// One point of a model: the list of member subspaces, in canonical form.
/// GL model `M` stores `(L_0, ..., L_{d-1})` in the N-layer window; chain
/// models store `(LL_0, ..., LL_{d-1})` (GL `N`) or `(LL_0, ..., LL_d)`
/// (GSp) in the (N+1)-layer window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticeChain {
    pub modules: Vec<Subspace>,
}

pub const DEFAULT_ENUMERATION_BUDGET: u128 = 50_000_000;

/// A monotone upper estimate of the enumeration work: the dominant cost is
/// the echelon sweep for the first member, repeated along the chain.
pub fn estimate_cost(params: &LatticeModelParams) -> Result<u128> {
    params.validate()?;
    let n = match params.kind {
        GroupKind::Gl => params.d * params.window_width(),
        GroupKind::Gsp => 2 * params.d * params.window_width(),
    } as u64;
    let k = params.member_rank() as u64;
    let sweep = gaussian_binomial(n, k, params.q);
    Ok(sweep.saturating_mul(params.d as u128 + 1))
}

/// Enumerate all points of the model, sorted. Refuses with
/// `Error::BudgetExceeded` if the estimated sweep size exceeds `budget`.
pub fn enumerate_points(params: &LatticeModelParams, budget: u128) -> Result<Vec<LatticeChain>> {
    let estimate = estimate_cost(params)?;
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let fq = Field::new(params.q)?;
    let mut points = match (params.kind, params.model) {
        (GroupKind::Gl, ModelKind::M) => enumerate_gl_tuples(params, &fq),
        (GroupKind::Gl, ModelKind::Grass) => enumerate_gl_grass(params, &fq),
        (GroupKind::Gl, ModelKind::N) => enumerate_gl_chains(params, &fq),
        (GroupKind::Gsp, ModelKind::Grass) => enumerate_gsp_grass(params, &fq),
        (GroupKind::Gsp, ModelKind::M) | (GroupKind::Gsp, ModelKind::N) => {
            enumerate_gsp_chains(params, &fq)
        }
    };
    points.sort();
    Ok(points)
}

fn enumerate_gl_tuples(params: &LatticeModelParams, fq: &Field) -> Vec<LatticeChain> {
    let layout = params.grass_layout();
    let k = params.member_rank();
    let alpha = layout.alpha_map();
    let full = layout.full(fq);
    let zero = Subspace::zero(layout.dim());
    let mut points = Vec::new();
    for_each_subspace_between(fq, &zero, &full, k, &mut |l0| {
        if !layout.is_t_stable(fq, &l0) {
            return;
        }
        let mut chain = vec![l0];
        extend_gl_tuple(params, fq, &layout, &alpha, &full, k, &mut chain, &mut points);
    });
    points
}

fn extend_gl_tuple(
    params: &LatticeModelParams,
    fq: &Field,
    layout: &Layout,
    alpha: &SparseMap,
    full: &Subspace,
    k: usize,
    chain: &mut Vec<Subspace>,
    points: &mut Vec<LatticeChain>,
) {
    if chain.len() == params.d {
        let wrap = chain.last().unwrap().image(fq, alpha);
        if chain[0].contains(fq, &wrap) {
            points.push(LatticeChain {
                modules: chain.clone(),
            });
        }
        return;
    }
    let bottom = chain.last().unwrap().image(fq, alpha);
    for_each_subspace_between(fq, &bottom, full, k, &mut |next| {
        if !layout.is_t_stable(fq, &next) {
            return;
        }
        chain.push(next);
        extend_gl_tuple(params, fq, layout, alpha, full, k, chain, points);
        chain.pop();
    });
}

fn enumerate_gl_grass(params: &LatticeModelParams, fq: &Field) -> Vec<LatticeChain> {
    let layout = params.grass_layout();
    let k = params.member_rank();
    let full = layout.full(fq);
    let zero = Subspace::zero(layout.dim());
    let mut points = Vec::new();
    for_each_subspace_between(fq, &zero, &full, k, &mut |l| {
        if layout.is_t_stable(fq, &l) {
            points.push(LatticeChain { modules: vec![l] });
        }
    });
    points
}

/// Chain coordinates: member i sits between `chain_bottom`, spanned by the
/// forced top-layer basis vectors at the first i coordinates, and
/// `chain_top`, which additionally opens the lowest layer at those
/// coordinates.
fn chain_bottom(layout: &Layout, fq: &Field, i: usize) -> Subspace {
    layout.coordinate_subspace(fq, |p, j| p + 1 == layout.layers && j < i)
}

fn chain_top(layout: &Layout, fq: &Field, i: usize) -> Subspace {
    layout.coordinate_subspace(fq, |p, j| p >= 1 || j < i)
}

fn enumerate_gl_chains(params: &LatticeModelParams, fq: &Field) -> Vec<LatticeChain> {
    let layout = params.chain_layout();
    let k0 = params.member_rank();
    let t = layout.t_map();
    let zero = Subspace::zero(layout.dim());
    let top0 = chain_top(&layout, fq, 0);
    let mut points = Vec::new();
    for_each_subspace_between(fq, &zero, &top0, k0, &mut |l0| {
        if !layout.is_t_stable(fq, &l0) {
            return;
        }
        let mut chain = vec![l0];
        extend_chain(
            fq,
            &layout,
            k0,
            &mut chain,
            &mut |chain| {
                // closing condition: t LL_{d-1} <= LL_0
                chain[0].contains(fq, &chain[chain.len() - 1].image(fq, &t))
            },
            params.d - 1,
            &mut points,
        );
    });
    points
}

/// Depth-first extension of a chain by one member per step, with per-step
/// window bounds and a final acceptance predicate.
fn extend_chain(
    fq: &Field,
    layout: &Layout,
    k0: usize,
    chain: &mut Vec<Subspace>,
    accept: &mut dyn FnMut(&[Subspace]) -> bool,
    extra_members: usize,
    points: &mut Vec<LatticeChain>,
) {
    if chain.len() == extra_members + 1 {
        if accept(chain) {
            points.push(LatticeChain {
                modules: chain.clone(),
            });
        }
        return;
    }
    let i = chain.len();
    let bottom = chain.last().unwrap().sum(fq, &chain_bottom(layout, fq, i));
    let top = chain_top(layout, fq, i);
    for_each_subspace_between(fq, &bottom, &top, k0 + i, &mut |next| {
        if !layout.is_t_stable(fq, &next) {
            return;
        }
        chain.push(next);
        extend_chain(fq, layout, k0, chain, accept, extra_members, points);
        chain.pop();
    });
}

/// Gram matrix entry of the alternating form `(0 J; -J 0)`: coordinates j
/// and 2d-1-j pair to +1 for j in the first half and -1 for the second.
fn gram_u8(fq: &Field, coords: usize, j: usize, jp: usize) -> u8 {
    if jp != coords - 1 - j {
        0
    } else if j < coords / 2 {
        1
    } else {
        fq.neg(1)
    }
}

/// Check that all pairs of rows pair to zero in every t-degree up to and
/// including `max_s` (degrees counted in flat layers: a pair of rows in
/// layers p, p' contributes to degree p + p').
fn rows_isotropic(fq: &Field, layout: &Layout, rows: &[Vec<u8>], max_s: usize) -> bool {
    let coords = layout.coords;
    for (a, ra) in rows.iter().enumerate() {
        for rb in rows.iter().skip(a + 1) {
            for s in 0..=max_s {
                let mut acc = 0u8;
                for p in 0..layout.layers.min(s + 1) {
                    let pp = s - p;
                    if pp >= layout.layers {
                        continue;
                    }
                    for j in 0..coords {
                        let x = ra[layout.idx(p, j)];
                        if x == 0 {
                            continue;
                        }
                        let jp = coords - 1 - j;
                        let g = gram_u8(fq, coords, j, jp);
                        let y = rb[layout.idx(pp, jp)];
                        if y != 0 {
                            acc = fq.add(acc, fq.mul(fq.mul(x, y), g));
                        }
                    }
                }
                if acc != 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn enumerate_gsp_chains(params: &LatticeModelParams, fq: &Field) -> Vec<LatticeChain> {
    let layout = params.chain_layout();
    let k0 = params.member_rank();
    let nw = params.window_width();
    let zero = Subspace::zero(layout.dim());
    let top0 = chain_top(&layout, fq, 0);
    let mut points = Vec::new();
    for_each_subspace_between(fq, &zero, &top0, k0, &mut |l0| {
        // LL_0 must be autodual: for a t-stable subspace of half dimension
        // this is exactly isotropy of the plain form, i.e. vanishing of all
        // pairings in t-degrees up to N + 1 in flat layers.
        if !layout.is_t_stable(fq, &l0) || !rows_isotropic(fq, &layout, l0.rows(), nw + 1) {
            return;
        }
        let mut chain = vec![l0];
        extend_chain(
            fq,
            &layout,
            k0,
            &mut chain,
            &mut |chain| {
                // LL_d must be autodual for the t-twisted form: one degree
                // fewer than the plain form.
                rows_isotropic(fq, &layout, chain[chain.len() - 1].rows(), nw)
            },
            params.d,
            &mut points,
        );
    });
    points
}

fn enumerate_gsp_grass(params: &LatticeModelParams, fq: &Field) -> Vec<LatticeChain> {
    let layout = params.grass_layout();
    let k = params.member_rank();
    let nw = params.window_width();
    let full = layout.full(fq);
    let zero = Subspace::zero(layout.dim());
    let mut points = Vec::new();
    for_each_subspace_between(fq, &zero, &full, k, &mut |l| {
        if layout.is_t_stable(fq, &l) && rows_isotropic(fq, &layout, l.rows(), nw.saturating_sub(1))
        {
            points.push(LatticeChain { modules: vec![l] });
        }
    });
    points
}

/// Rewrite a GL model-M tuple in chain coordinates: member i becomes
/// `alpha^{-i}` of the lifted L_i together with the forced top-layer tail,
/// inside the window enlarged by one lower layer. This is the bijection
/// between the cyclic-tuple and growing-chain presentations.
pub fn tuple_as_chain(params: &LatticeModelParams, point: &LatticeChain) -> Result<LatticeChain> {
    if params.kind != GroupKind::Gl || params.model != ModelKind::M {
        return Err(Error::InvalidModelParams(
            "tuple coordinates only exist for the GL model M".into(),
        ));
    }
    let fq = Field::new(params.q)?;
    let w = params.grass_layout();
    let v = params.chain_layout();
    let d = params.d;
    let mut modules = Vec::with_capacity(d);
    for (i, li) in point.modules.iter().enumerate() {
        let mut rows = Vec::new();
        for row in li.rows() {
            // lift (p, j) -> (p + 1, j), then apply alpha^{-i}:
            // (p, j) -> (p, j + i) without wrap, (p - 1, j + i - d) with.
            let mut out = vec![0u8; v.dim()];
            for p in 0..w.layers {
                for j in 0..w.coords {
                    let c = row[w.idx(p, j)];
                    if c == 0 {
                        continue;
                    }
                    let (tp, tj) = if j + i < d {
                        (p + 1, j + i)
                    } else {
                        (p, j + i - d)
                    };
                    out[v.idx(tp, tj)] = fq.add(out[v.idx(tp, tj)], c);
                }
            }
            rows.push(out);
        }
        for jj in 0..i {
            let mut tail = vec![0u8; v.dim()];
            tail[v.idx(v.layers - 1, jj)] = 1;
            rows.push(tail);
        }
        modules.push(Subspace::from_rows(&fq, v.dim(), rows));
    }
    Ok(LatticeChain { modules })
}

/// Generators of the stratifying group, as flat matrices acting on the
/// layout of the points of the given model.
fn group_generators(params: &LatticeModelParams, fq: &Field) -> Vec<SparseMap> {
    match (params.kind, params.model) {
        (GroupKind::Gl, ModelKind::Grass) => {
            gl_generators(fq, params.d, params.window_width(), false)
        }
        (GroupKind::Gl, _) => gl_generators(fq, params.d, params.window_width() + 1, true),
        (GroupKind::Gsp, ModelKind::Grass) => {
            gsp_generators(fq, params.d, params.window_width(), false)
        }
        (GroupKind::Gsp, _) => gsp_generators(fq, params.d, params.window_width() + 1, true),
    }
}

/// A polynomial matrix over F_q[t]/t^layers: entry[i][j] is a coefficient
/// vector of length `layers`.
type PolyMatrix = Vec<Vec<Vec<u8>>>;

fn poly_identity(n: usize, layers: usize) -> PolyMatrix {
    let mut m = vec![vec![vec![0u8; layers]; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i][0] = 1;
    }
    m
}

fn flat_map_from_poly(layers: usize, pm: &PolyMatrix) -> SparseMap {
    let n = pm.len();
    let layout = Layout { layers, coords: n };
    let mut cols = vec![Vec::new(); layout.dim()];
    for p in 0..layers {
        for j in 0..n {
            let col = &mut cols[layout.idx(p, j)];
            for (i, row) in pm.iter().enumerate() {
                for (s, &c) in row[j].iter().enumerate() {
                    if c != 0 && p + s < layers {
                        col.push((layout.idx(p + s, i), c));
                    }
                }
            }
        }
    }
    SparseMap {
        src: layout.dim(),
        dst: layout.dim(),
        cols,
    }
}

/// Generators of the chain automorphism group of GL(d) windows. With
/// `iwahori` set, lower-triangular one-parameter subgroups only enter at
/// t-level one and above, cutting the group down to the matrices that are
/// upper triangular mod t; otherwise the full GL(d, F_q[t]/t^layers) acts.
fn gl_generators(fq: &Field, d: usize, layers: usize, iwahori: bool) -> Vec<SparseMap> {
    let mut pms: Vec<PolyMatrix> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let lo = if iwahori && i > j { 1 } else { 0 };
            for m in lo..layers {
                for c in fq.nonzero() {
                    let mut pm = poly_identity(d, layers);
                    pm[i][j][m] = c;
                    pms.push(pm);
                }
            }
        }
    }
    for i in 0..d {
        for u in fq.nonzero() {
            if u == 1 {
                continue;
            }
            let mut pm = poly_identity(d, layers);
            pm[i][i][0] = u;
            pms.push(pm);
        }
        for m in 1..layers {
            for b in fq.nonzero() {
                let mut pm = poly_identity(d, layers);
                pm[i][i][m] = b;
                pms.push(pm);
            }
        }
    }
    pms.iter().map(|pm| flat_map_from_poly(layers, pm)).collect()
}

/// Positive root directions of the similitude group, each given by the
/// entry pattern of its one-parameter subgroup `Id + c t^m X`.
fn gsp_root_patterns(d: usize) -> Vec<Vec<(usize, usize, i8)>> {
    let coords = 2 * d;
    let mirror = |j: usize| coords - 1 - j;
    let mut pats = Vec::new();
    for i in 0..d {
        pats.push(vec![(i, mirror(i), 1)]);
    }
    for i in 0..d {
        for j in i + 1..d {
            pats.push(vec![(i, j, 1), (mirror(j), mirror(i), -1)]);
        }
    }
    for i in 0..d {
        for j in d..coords {
            if j != mirror(i) && i + j < coords - 1 {
                pats.push(vec![(i, j, 1), (mirror(j), mirror(i), 1)]);
            }
        }
    }
    pats
}

/// Generators of the chain automorphism group of GSp(2d) windows: the
/// one-parameter subgroups of all root directions (lower ones from t-level
/// one up when `iwahori` is set), the mirrored coordinate torus, and the
/// similitude scalings, including t-dependent units.
fn gsp_generators(fq: &Field, d: usize, layers: usize, iwahori: bool) -> Vec<SparseMap> {
    let coords = 2 * d;
    let mirror = |j: usize| coords - 1 - j;
    let mut pms: Vec<PolyMatrix> = Vec::new();
    let signed = |fq: &Field, c: u8, sign: i8| if sign > 0 { c } else { fq.neg(c) };
    for pat in gsp_root_patterns(d) {
        for (transpose, lo) in [(false, 0), (true, if iwahori { 1 } else { 0 })] {
            for m in lo..layers {
                for c in fq.nonzero() {
                    let mut pm = poly_identity(coords, layers);
                    for &(i, j, sign) in &pat {
                        let (i, j) = if transpose { (j, i) } else { (i, j) };
                        pm[i][j][m] = signed(fq, c, sign);
                    }
                    pms.push(pm);
                }
            }
        }
    }
    // mirrored torus: u at coordinate i, u^{-1} at the mirror
    for i in 0..d {
        for u in fq.nonzero() {
            if u == 1 {
                continue;
            }
            let mut pm = poly_identity(coords, layers);
            pm[i][i][0] = u;
            pm[mirror(i)][mirror(i)][0] = fq.inv(u);
            pms.push(pm);
        }
        for m in 1..layers {
            for b in fq.nonzero() {
                let mut pm = poly_identity(coords, layers);
                pm[i][i][m] = b;
                // inverse of the unit series 1 + b t^m, truncated
                let inv = unit_series_inverse(fq, b, m, layers);
                pm[mirror(i)][mirror(i)] = inv;
                pms.push(pm);
            }
        }
    }
    // similitude scalings on the second half of the coordinates
    for u in fq.nonzero() {
        if u == 1 {
            continue;
        }
        let mut pm = poly_identity(coords, layers);
        for j in d..coords {
            pm[j][j][0] = u;
        }
        pms.push(pm);
    }
    for m in 1..layers {
        for b in fq.nonzero() {
            let mut pm = poly_identity(coords, layers);
            for j in d..coords {
                pm[j][j][m] = b;
            }
            pms.push(pm);
        }
    }
    pms.iter().map(|pm| flat_map_from_poly(layers, pm)).collect()
}

/// Coefficients of `(1 + b t^m)^{-1}` modulo `t^layers`.
fn unit_series_inverse(fq: &Field, b: u8, m: usize, layers: usize) -> Vec<u8> {
    let mut out = vec![0u8; layers];
    out[0] = 1;
    let mut term = 1u8;
    let mut deg = 0;
    loop {
        deg += m;
        if deg >= layers {
            break;
        }
        term = fq.neg(fq.mul(term, b));
        out[deg] = term;
    }
    out
}

/// Partition the points into orbits of the stratifying group. Orbits come
/// back sorted by their smallest member, each orbit listing its points in
/// increasing order. GL model-M points are moved to chain coordinates
/// internally, since the chain group is what acts.
pub fn stratify(
    params: &LatticeModelParams,
    points: &[LatticeChain],
) -> Result<Vec<Vec<LatticeChain>>> {
    params.validate()?;
    let fq = Field::new(params.q)?;
    let keys: Vec<LatticeChain> = if params.kind == GroupKind::Gl && params.model == ModelKind::M {
        points
            .iter()
            .map(|p| tuple_as_chain(params, p))
            .collect::<Result<_>>()?
    } else {
        points.to_vec()
    };
    let gens = group_generators(params, &fq);
    let mut index: HashMap<&LatticeChain, usize> = HashMap::with_capacity(keys.len());
    for (i, k) in keys.iter().enumerate() {
        index.insert(k, i);
    }
    let mut seen = vec![false; keys.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..keys.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut frontier = vec![start];
        while let Some(cur) = frontier.pop() {
            for g in &gens {
                let moved = LatticeChain {
                    modules: keys[cur]
                        .modules
                        .iter()
                        .map(|s| s.image(&fq, g))
                        .collect(),
                };
                let &i = index.get(&moved).ok_or_else(|| {
                    Error::VerificationFailed(
                        "group action left the enumerated point set".into(),
                    )
                })?;
                if !seen[i] {
                    seen[i] = true;
                    orbit.push(i);
                    frontier.push(i);
                }
            }
        }
        orbit.sort();
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| o[0]);
    Ok(orbits
        .into_iter()
        .map(|o| o.into_iter().map(|i| points[i].clone()).collect())
        .collect())
}

/// The dominant coweight indexing the window-group orbit through the first
/// member of the point: the module type of W/L_0, written back in ambient
/// coordinates. For GSp this returns the full 2d-entry coweight.
pub fn stratum_coweight(params: &LatticeModelParams, point: &LatticeChain) -> Result<Coweight> {
    params.validate()?;
    let fq = Field::new(params.q)?;
    let w = params.grass_layout();
    let first = match (params.kind, params.model) {
        (GroupKind::Gl, ModelKind::M) | (_, ModelKind::Grass) => point.modules[0].clone(),
        _ => {
            // chain members live one layer lower; shift LL_0 back into the
            // basic window (its rows avoid the extra layer)
            let v = params.chain_layout();
            let mut rows = Vec::new();
            for row in point.modules[0].rows() {
                for j in 0..v.coords {
                    if row[v.idx(0, j)] != 0 {
                        return Err(Error::VerificationFailed(
                            "chain member protrudes below the basic window".into(),
                        ));
                    }
                }
                let mut out = vec![0u8; w.dim()];
                for p in 1..v.layers {
                    for j in 0..v.coords {
                        out[w.idx(p - 1, j)] = row[v.idx(p, j)];
                    }
                }
                rows.push(out);
            }
            Subspace::from_rows(&fq, w.dim(), rows)
        }
    };
    // d_p = dim t^p (W / L); the drops e_p = d_p - d_{p+1} count the parts
    // of the module type exceeding p, so conjugating recovers the parts.
    let mut dims = Vec::with_capacity(w.layers + 1);
    for p in 0..=w.layers {
        let tp = w.coordinate_subspace(&fq, |layer, _| layer >= p);
        dims.push(first.sum(&fq, &tp).dim() - first.dim());
    }
    let parts: Vec<usize> = (1..=w.coords)
        .map(|j| (0..w.layers).filter(|&p| dims[p] - dims[p + 1] >= j).count())
        .collect();
    Ok(Coweight(
        parts.iter().map(|&m| m as i64 + params.n_minus).collect(),
    ))
}

/// The expected stratification index set: the union of the admissible sets
/// of the window coweights, restricted for GL to total degree r.
pub fn candidate_elements(
    rd: &RootDatum,
    params: &LatticeModelParams,
) -> Result<Vec<AffineWeylElement>> {
    params.validate()?;
    let mut set = BTreeSet::new();
    for lam in rd.lambda_set(params.n_minus, params.n_plus)? {
        if params.kind == GroupKind::Gl && Some(lam.sum()) != params.r {
            continue;
        }
        for w in affine_weyl::admissible_set(rd, &lam)? {
            set.insert(w);
        }
    }
    Ok(set.into_iter().collect())
}

/// Sum of `q^{length(w)}` over a set of affine Weyl elements: the point
/// count predicted by a length-graded stratification.
pub fn predicted_count(rd: &RootDatum, elements: &[AffineWeylElement], q: u64) -> u128 {
    elements
        .iter()
        .map(|w| (q as u128).pow(affine_weyl::length(rd, w) as u32))
        .sum()
}

/// The outcome of comparing enumerated orbits with a candidate set.
#[derive(Clone, Debug)]
pub struct MatchReport {
    pub total_points: u64,
    /// Orbit sizes, descending.
    pub orbit_sizes: Vec<u64>,
    /// `q^{length(w)}` per candidate element, descending.
    pub predicted_sizes: Vec<u64>,
    /// Whether the two multisets agree.
    pub matches: bool,
}

/// Stratify the points and compare the orbit size multiset with the length
/// predictions of the candidate elements.
pub fn match_strata(
    params: &LatticeModelParams,
    points: &[LatticeChain],
    rd: &RootDatum,
    candidate: &[AffineWeylElement],
) -> Result<MatchReport> {
    if rd.kind != params.kind || rd.d != params.d {
        return Err(Error::InvalidModelParams(
            "root datum does not match the model parameters".into(),
        ));
    }
    let orbits = stratify(params, points)?;
    let mut orbit_sizes: Vec<u64> = orbits.iter().map(|o| o.len() as u64).collect();
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut predicted_sizes: Vec<u64> = candidate
        .iter()
        .map(|w| (params.q as u128).pow(affine_weyl::length(rd, w) as u32) as u64)
        .collect();
    predicted_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(MatchReport {
        total_points: points.len() as u64,
        matches: orbit_sizes == predicted_sizes,
        orbit_sizes,
        predicted_sizes,
    })
}

/// The duality involution on GSp chains: member i of the dual is the
/// twisted annihilator of member d - i, shifted back into the window by
/// `t^{n_- + n_+ - 1} alpha^d`. Fixes the enumerated point set as a whole
/// and squares to the identity.
pub fn chain_dual(params: &LatticeModelParams, point: &LatticeChain) -> Result<LatticeChain> {
    params.validate()?;
    if params.kind != GroupKind::Gsp || params.model == ModelKind::Grass {
        return Err(Error::InvalidModelParams(
            "the chain duality involution needs a GSp chain model".into(),
        ));
    }
    let fq = Field::new(params.q)?;
    let v = params.chain_layout();
    let d = params.d;
    let coords = v.coords;
    let nw = params.window_width();
    // one extra top layer so that applying alpha^d to lifted rows loses
    // nothing that still carries pairing conditions
    let ext = Layout {
        layers: v.layers + 1,
        coords,
    };
    let mut modules = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let src = &point.modules[d - i];
        // alpha^d of the lifted rows, in the extended window
        let mut wrows = Vec::with_capacity(src.dim());
        for row in src.rows() {
            let mut out = vec![0u8; ext.dim()];
            for p in 0..v.layers {
                for j in 0..coords {
                    let c = row[v.idx(p, j)];
                    if c == 0 {
                        continue;
                    }
                    if j < d {
                        out[ext.idx(p + 1, j + d)] = fq.add(out[ext.idx(p + 1, j + d)], c);
                    } else {
                        out[ext.idx(p, j - d)] = fq.add(out[ext.idx(p, j - d)], c);
                    }
                }
            }
            wrows.push(out);
        }
        // basis of the window of member i
        let mut ybasis = Vec::new();
        for p in 0..v.layers {
            for j in 0..coords {
                if p >= 1 || j < i {
                    ybasis.push((p, j));
                }
            }
        }
        // pairing conditions: flat degrees 0 ..= N + 1 against every row
        let mut constraints = Vec::new();
        for wr in &wrows {
            for s in 0..=nw + 1 {
                let mut cond = vec![0u8; ybasis.len()];
                for (col, &(p, j)) in ybasis.iter().enumerate() {
                    if s < p {
                        continue;
                    }
                    let pp = s - p;
                    if pp >= ext.layers {
                        continue;
                    }
                    let jp = coords - 1 - j;
                    let g = gram_u8(&fq, coords, j, jp);
                    if g != 0 {
                        cond[col] = fq.mul(g, wr[ext.idx(pp, jp)]);
                    }
                }
                if cond.iter().any(|&c| c != 0) {
                    constraints.push(cond);
                }
            }
        }
        let null = nullspace(&fq, ybasis.len(), constraints);
        let rows = null
            .into_iter()
            .map(|nv| {
                let mut out = vec![0u8; v.dim()];
                for (col, &(p, j)) in ybasis.iter().enumerate() {
                    out[v.idx(p, j)] = nv[col];
                }
                out
            })
            .collect();
        let dual = Subspace::from_rows(&fq, v.dim(), rows);
        if dual.dim() != params.member_rank() + i {
            return Err(Error::VerificationFailed(format!(
                "chain dual member {i} has dimension {} instead of {}",
                dual.dim(),
                params.member_rank() + i
            )));
        }
        modules.push(dual);
    }
    Ok(LatticeChain { modules })
}

/// The twisted annihilator of a single GSp Grassmannian member inside its
/// own window; an involution on t-stable subspaces, fixing the autodual
/// ones pointwise.
pub fn window_dual(params: &LatticeModelParams, sub: &Subspace) -> Result<Subspace> {
    params.validate()?;
    if params.kind != GroupKind::Gsp {
        return Err(Error::InvalidModelParams(
            "window duals are only defined for GSp".into(),
        ));
    }
    let fq = Field::new(params.q)?;
    let w = params.grass_layout();
    let max_s = params.window_width() - 1;
    let mut constraints = Vec::new();
    for row in sub.rows() {
        for s in 0..=max_s {
            let mut cond = vec![0u8; w.dim()];
            for p in 0..w.layers.min(s + 1) {
                let pp = s - p;
                if pp >= w.layers {
                    continue;
                }
                for j in 0..w.coords {
                    let jp = w.coords - 1 - j;
                    let g = gram_u8(&fq, w.coords, j, jp);
                    if g != 0 {
                        cond[w.idx(p, j)] = fq.mul(g, row[w.idx(pp, jp)]);
                    }
                }
            }
            if cond.iter().any(|&c| c != 0) {
                constraints.push(cond);
            }
        }
    }
    let rows = nullspace(&fq, w.dim(), constraints);
    Ok(Subspace::from_rows(&fq, w.dim(), rows))
}

/// A basis of the common kernel of a list of functionals on F_q^n.
fn nullspace(fq: &Field, n: usize, mut constraints: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    rref(fq, n, &mut constraints);
    let pivots: Vec<usize> = constraints
        .iter()
        .map(|row| row.iter().position(|&c| c != 0).unwrap())
        .collect();
    let mut basis = Vec::new();
    for freecol in 0..n {
        if pivots.contains(&freecol) {
            continue;
        }
        let mut v = vec![0u8; n];
        v[freecol] = 1;
        for (row, &p) in constraints.iter().zip(&pivots) {
            // row reads: x_p + sum_{c > p} row[c] x_c = 0
            v[p] = fq.neg(row[freecol]);
        }
        basis.push(v);
    }
    basis
}
