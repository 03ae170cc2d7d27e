//! Shared helpers for the integration tests: independent oracles that
//! recompute key quantities by a different route than the library, plus a
//! tiny deterministic random number generator.

use iwahori_kit::affine_weyl::{AffineWeylElement, GroupAlgebraElement};
use iwahori_kit::root_data::{Coweight, RootDatum};

/// Counts semistandard tableaux of the given shape and content by chaining
/// horizontal strips, which is the classical combinatorial definition of
/// the Kostka number. Entirely independent of the library's alternating
/// sum over the Weyl group.
pub fn kostka(shape: &[i64], content: &[i64]) -> i64 {
    if shape.iter().any(|&x| x < 0) || content.iter().any(|&x| x < 0) {
        // shift both by the same constant before calling
        panic!("kostka expects partitions with nonnegative parts");
    }
    if shape.iter().sum::<i64>() != content.iter().sum::<i64>() {
        return 0;
    }
    let start = vec![0i64; shape.len()];
    count_strip_chains(&start, shape, content, 0)
}

/// Number of ways to grow `current` to `target` through horizontal strips
/// with sizes prescribed by `content[step..]`.
fn count_strip_chains(current: &[i64], target: &[i64], content: &[i64], step: usize) -> i64 {
    if step == content.len() {
        return if current == target { 1 } else { 0 };
    }
    let mut total = 0;
    for next in horizontal_extensions(current, target, content[step]) {
        total += count_strip_chains(&next, target, content, step + 1);
    }
    total
}

/// All partitions `next` with `current <= next <= target` rowwise,
/// `next/current` a horizontal strip (next[i+1] <= current[i]) of the
/// given size.
fn horizontal_extensions(current: &[i64], target: &[i64], size: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut next = current.to_vec();
    fn rec(
        i: usize,
        remaining: i64,
        current: &[i64],
        target: &[i64],
        next: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == current.len() {
            if remaining == 0 {
                out.push(next.clone());
            }
            return;
        }
        let lo = current[i];
        let mut hi = target[i].min(lo + remaining);
        if i > 0 {
            hi = hi.min(current[i - 1]);
        }
        for v in lo..=hi {
            next[i] = v;
            rec(i + 1, remaining - (v - lo), current, target, next, out);
        }
        next[i] = current[i];
    }
    rec(0, size, current, target, &mut next, &mut out);
    out
}

/// The dimension product formula evaluated root by root,
/// `prod (<lambda + rho_hat, alpha>) / (<rho_hat, alpha>)`,
/// without calling the library's own dimension method. Numerator and
/// denominator stay doubled throughout, which cancels factor by factor.
pub fn product_formula_dimension(rd: &RootDatum, lambda: &Coweight) -> i64 {
    let rho_hat2 = rd.rho_hat_twice();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for alpha in &rd.positive_roots {
        num *= (2 * rd.pairing(lambda, alpha) + rd.pairing(rho_hat2, alpha)) as i128;
        den *= rd.pairing(rho_hat2, alpha) as i128;
    }
    (num / den) as i64
}

/// Splitmix generator: tiny, seedable, and good enough for test sampling.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// The formal sum of a list of group elements with unit coefficients.
pub fn group_sum(elements: &[AffineWeylElement]) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero();
    for x in elements {
        out.add_term(x.clone(), 1);
    }
    out
}
