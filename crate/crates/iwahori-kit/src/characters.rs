//! Characters of highest-weight modules of the dual group: weight sets,
//! exact multiplicities, tensor product decomposition, and the q-analog of
//! weight multiplicity built from the graded partition function.
//!
//! The dual group's roots are our coroots, so all sums below run over
//! positive coroots, and the invariant bilinear form is the ambient
//! Euclidean one (the finite Weyl group acts by coordinate permutations in
//! both families). Integrality is kept exact by working with doubled
//! vectors `2 nu + 2 rho_hat` throughout.

use crate::laurent::LaurentScalar;
use crate::root_data::{Coweight, RootDatum};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

fn dot(a: &Coweight, b: &Coweight) -> i64 {
    a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum()
}

/// All weights of the highest-weight module `V_lambda`: the vectors whose
/// dominant conjugate lies below `lambda`. Found by walking down simple
/// coroot steps from the top.
pub fn weights_of(rd: &RootDatum, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
    if !rd.is_dominant(lambda)? {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::new();
    set.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(x) = queue.pop_front() {
        for cr in &rd.simple_coroots {
            let y = x.sub(cr);
            if set.contains(&y) {
                continue;
            }
            let dom = rd.dominant_conjugate(&y);
            if rd.dominance_leq(&dom, lambda)? {
                set.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(set)
}

/// The exact character: every weight of `V_lambda` with its multiplicity,
/// computed by the standard recursion on dominant weights ordered by depth
/// below `lambda`, then spread over Weyl orbits.
pub fn character(rd: &RootDatum, lambda: &Coweight) -> Result<BTreeMap<Coweight, i64>> {
    let weights = weights_of(rd, lambda)?;
    let mut dominants: Vec<Coweight> = weights
        .iter()
        .filter(|x| rd.is_dominant(x).unwrap_or(false))
        .cloned()
        .collect();
    dominants.sort_by_key(|mu| {
        rd.dominance_height(mu, lambda)
            .expect("weight below lambda must be comparable")
    });

    let shifted = |nu: &Coweight| nu.scale(2).add(rd.rho_hat_twice());
    let top_norm = dot(&shifted(lambda), &shifted(lambda));

    let mut table: BTreeMap<Coweight, i64> = BTreeMap::new();
    for mu in &dominants {
        if mu == lambda {
            table.insert(mu.clone(), 1);
            continue;
        }
        let mut numerator: i64 = 0;
        for cr in &rd.positive_coroots {
            let cr2 = cr.scale(2);
            let mut x = mu.clone();
            loop {
                x = x.add(cr);
                if !weights.contains(&x) {
                    break;
                }
                let m = table[&rd.dominant_conjugate(&x)];
                numerator += m * dot(&x.scale(2), &cr2);
            }
        }
        let denominator = top_norm - dot(&shifted(mu), &shifted(mu));
        debug_assert!(denominator > 0 && (2 * numerator) % denominator == 0);
        table.insert(mu.clone(), 2 * numerator / denominator);
    }

    let mut out = BTreeMap::new();
    for (mu, m) in &table {
        for nu in rd.weyl_orbit(mu)? {
            out.insert(nu, *m);
        }
    }
    Ok(out)
}

/// The multiplicity of the weight `mu` in `V_lambda` (zero when `mu` is not
/// a weight, including any central-charge mismatch).
pub fn weight_multiplicity(rd: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<i64> {
    rd.validate_coweight(mu)?;
    Ok(character(rd, lambda)?.get(mu).copied().unwrap_or(0))
}

/// The dominant weights of `V_lambda` and their multiplicities, sorted with
/// `lambda` first and deeper weights later.
pub fn dominant_weight_multiplicities(
    rd: &RootDatum,
    lambda: &Coweight,
) -> Result<Vec<(Coweight, i64)>> {
    let table = character(rd, lambda)?;
    let mut out: Vec<(Coweight, i64)> = table
        .into_iter()
        .filter(|(mu, _)| rd.is_dominant(mu).unwrap_or(false))
        .collect();
    out.sort_by_key(|(mu, _)| {
        (
            rd.dominance_height(mu, lambda).expect("comparable"),
            mu.clone(),
        )
    });
    Ok(out)
}

/// Decomposes the tensor product `V_a (x) V_b` into irreducibles, by
/// convolving the two characters and then stripping highest weights: the
/// remaining support always attains its maximum of `<2 rho, .>` at a
/// dominant weight, whose coefficient is the multiplicity of that summand.
pub fn decompose_product(
    rd: &RootDatum,
    a: &Coweight,
    b: &Coweight,
) -> Result<BTreeMap<Coweight, i64>> {
    let ca = character(rd, a)?;
    let cb = character(rd, b)?;
    let mut prod: BTreeMap<Coweight, i64> = BTreeMap::new();
    for (x, m) in &ca {
        for (y, n) in &cb {
            *prod.entry(x.add(y)).or_insert(0) += m * n;
        }
    }
    let mut out = BTreeMap::new();
    while let Some(top) = prod
        .keys()
        .max_by_key(|nu| (rd.rho_pairing_twice(nu).expect("valid weight"), (*nu).clone()))
        .cloned()
    {
        let mult = prod[&top];
        debug_assert!(rd.is_dominant(&top).unwrap() && mult > 0);
        for (nu, m) in character(rd, &top)? {
            *prod.entry(nu).or_insert(0) -= mult * m;
        }
        prod.retain(|_, m| *m != 0);
        out.insert(top, mult);
    }
    Ok(out)
}

/// The graded partition function: ways of writing `beta` as a sum of
/// positive coroots, counted by total number of parts in the exponent of q.
/// Memoized over (remaining vector, coroot index); branches are pruned by
/// the forced simple-coroot coordinates.
struct PartitionTable<'a> {
    rd: &'a RootDatum,
    memo: HashMap<(Coweight, usize), LaurentScalar>,
}

impl<'a> PartitionTable<'a> {
    fn new(rd: &'a RootDatum) -> Self {
        PartitionTable {
            rd,
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, beta: &Coweight, idx: usize) -> LaurentScalar {
        if beta.is_zero() {
            return LaurentScalar::one();
        }
        let coeffs = match self.rd.coroot_coefficients(beta) {
            Some(c) => c,
            None => return LaurentScalar::zero(),
        };
        if idx >= self.rd.positive_coroots.len() {
            return LaurentScalar::zero();
        }
        let key = (beta.clone(), idx);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let cr = self.rd.positive_coroots[idx].clone();
        // an upper bound for how many copies of this coroot can fit
        let height: i64 = coeffs.iter().sum();
        let cr_height: i64 = self
            .rd
            .coroot_coefficients(&cr)
            .expect("positive coroot lies in the positive span")
            .iter()
            .sum();
        let mut total = LaurentScalar::zero();
        let mut rest = beta.clone();
        for n in 0..=(height / cr_height) {
            if self.rd.coroot_coefficients(&rest).is_some() {
                total = total + self.count(&rest, idx + 1) * LaurentScalar::q_power(n as i32);
            }
            rest = rest.sub(&cr);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// The q-analog of the weight multiplicity of `mu` in `V_lambda`: the
/// alternating sum over the finite Weyl group of graded partition counts of
/// `w(lambda + rho_hat) - (mu + rho_hat)`. Specializing q to 1 recovers
/// `weight_multiplicity`.
pub fn q_weight_multiplicity(
    rd: &RootDatum,
    lambda: &Coweight,
    mu: &Coweight,
) -> Result<LaurentScalar> {
    if !rd.is_dominant(lambda)? {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    rd.validate_coweight(mu)?;
    let lam2 = lambda.scale(2).add(rd.rho_hat_twice());
    let mu2 = mu.scale(2).add(rd.rho_hat_twice());
    let mut table = PartitionTable::new(rd);
    let mut total = LaurentScalar::zero();
    for w in rd.weyl_elements() {
        let doubled = w.act(&lam2).sub(&mu2);
        if doubled.0.iter().any(|x| x % 2 != 0) {
            continue;
        }
        let beta = Coweight(doubled.0.iter().map(|x| x / 2).collect());
        if rd.coroot_coefficients(&beta).is_none() {
            continue;
        }
        let part = table.count(&beta, 0);
        if rd.weyl_sign(&w) == 1 {
            total = total + part;
        } else {
            total = total - part;
        }
    }
    Ok(total)
}
