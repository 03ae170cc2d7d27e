//! The Iwahori Hecke algebra on the extended affine Weyl group, over
//! Laurent polynomials in `v` with `q = v^2`.
//!
//! Elements are sparse sums of standard basis vectors `T_x`. The defining
//! relations are the braid relations together with
//!
//! ```text
//! T_x T_s = T_{xs}                    when length(xs) > length(x)
//! T_x T_s = q T_{xs} + (q-1) T_x      when length(xs) < length(x)
//! T_x T_omega^k = T_{x omega^k}       always
//! ```
//!
//! Every product reduces to folds along reduced words, so `multiply` costs
//! one simple-reflection step per letter of the right factor, term by term.
//! Inverses of basis vectors are likewise folded letterwise from
//! `T_s^{-1} = v^{-2} T_s + (v^{-2} - 1) T_e`, which keeps products like
//! `T_x (T_y)^{-1}` cheap even when `T_y^{-1}` itself has huge support.

use crate::affine_weyl::{
    self, AffineWeylElement, GroupAlgebraElement,
};
use crate::laurent::LaurentScalar;
use crate::root_data::{build_root_datum, GroupKind, RootDatum};
use crate::{Error, Result};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A sparse Hecke algebra element: a finite sum of `coeff * T_x`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    coeffs: BTreeMap<AffineWeylElement, LaurentScalar>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn basis(x: AffineWeylElement) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(x, LaurentScalar::one());
        HeckeElement { coeffs }
    }

    pub fn term(x: AffineWeylElement, c: LaurentScalar) -> Self {
        let mut out = HeckeElement::zero();
        out.add_term(x, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, x: &AffineWeylElement) -> LaurentScalar {
        self.coeffs.get(x).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineWeylElement, &LaurentScalar)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, x: AffineWeylElement, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(x) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add_term(x.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> HeckeElement {
        let mut out = HeckeElement::zero();
        if s.is_zero() {
            return out;
        }
        for (x, c) in &self.coeffs {
            out.add_term(x.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Specialization v -> 1, landing in the integral group algebra.
    pub fn specialize_v1(&self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero();
        for (x, c) in &self.coeffs {
            out.add_term(x.clone(), c.eval_at_one());
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (x, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})T[{x}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shared context: the root datum, the affine generators, and a memo for
/// reduced words (the inner loop of every product).
pub struct HeckeCtx {
    datum: RootDatum,
    simples: Vec<AffineWeylElement>,
    word_memo: RefCell<HashMap<AffineWeylElement, (Vec<usize>, i64)>>,
}

impl HeckeCtx {
    pub fn new(kind: GroupKind, d: usize) -> Result<HeckeCtx> {
        let datum = build_root_datum(kind, d)?;
        let simples = affine_weyl::simple_affine_reflections(&datum);
        Ok(HeckeCtx {
            datum,
            simples,
            word_memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn simple_reflections(&self) -> &[AffineWeylElement] {
        &self.simples
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(AffineWeylElement::identity(self.datum.ambient))
    }

    /// Memoized lex-least reduced word plus Omega power.
    pub fn word(&self, x: &AffineWeylElement) -> (Vec<usize>, i64) {
        if let Some(w) = self.word_memo.borrow().get(x) {
            return w.clone();
        }
        let w = affine_weyl::reduced_word(&self.datum, x);
        self.word_memo.borrow_mut().insert(x.clone(), w.clone());
        w
    }

    /// Right multiplication by one standard generator.
    pub fn mul_simple(&self, a: &HeckeElement, i: usize) -> HeckeElement {
        let s = &self.simples[i];
        let mut out = HeckeElement::zero();
        for (x, c) in a.iter() {
            let xs = x.multiply(s);
            if affine_weyl::length(&self.datum, &xs) > affine_weyl::length(&self.datum, x) {
                out.add_term(xs, c.clone());
            } else {
                out.add_term(xs, c.clone() * LaurentScalar::q_power(1));
                out.add_term(x.clone(), c.clone() * LaurentScalar::q_minus_one());
            }
        }
        out
    }

    /// Right multiplication by the inverse of one standard generator.
    pub fn mul_simple_inverse(&self, a: &HeckeElement, i: usize) -> HeckeElement {
        // T_s^{-1} = v^{-2} T_s + (v^{-2} - 1) T_e
        let vm2 = LaurentScalar::q_power(-1);
        let tail = LaurentScalar::q_power(-1) - LaurentScalar::one();
        self.mul_simple(a, i)
            .scale(&vm2)
            .add(&a.scale(&tail))
    }

    /// Right multiplication by `T_{omega^k}` (an algebra automorphism of the
    /// basis: it permutes basis vectors without any coefficients).
    pub fn mul_omega_power(&self, a: &HeckeElement, k: i64) -> HeckeElement {
        let om = affine_weyl::omega_power(&self.datum, k);
        let mut out = HeckeElement::zero();
        for (x, c) in a.iter() {
            out.add_term(x.multiply(&om), c.clone());
        }
        out
    }

    /// `a * T_y`: fold along the reduced word of `y`.
    pub fn mul_t(&self, a: &HeckeElement, y: &AffineWeylElement) -> HeckeElement {
        let (word, k) = self.word(y);
        let mut cur = a.clone();
        for &i in &word {
            cur = self.mul_simple(&cur, i);
        }
        self.mul_omega_power(&cur, k)
    }

    /// `a * (T_y)^{-1}`: fold along the reversed word of `y` with inverse
    /// letters, never materializing `(T_y)^{-1}` itself.
    pub fn mul_t_inverse(&self, a: &HeckeElement, y: &AffineWeylElement) -> HeckeElement {
        let (word, k) = self.word(y);
        let mut cur = self.mul_omega_power(a, -k);
        for &i in word.iter().rev() {
            cur = self.mul_simple_inverse(&cur, i);
        }
        cur
    }

    /// `(T_y)^{-1}` as an element.
    pub fn invert_t(&self, y: &AffineWeylElement) -> HeckeElement {
        self.mul_t_inverse(&self.one(), y)
    }

    /// The full product, bilinear in both arguments.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (y, c) in b.iter() {
            out = out.add(&self.mul_t(&a.scale(c), y));
        }
        out
    }

    /// Whether `a` commutes with the whole algebra (checked on the
    /// generators `T_s` and `T_omega`, which generate).
    pub fn is_central(&self, a: &HeckeElement) -> bool {
        for i in 0..self.simples.len() {
            let s = HeckeElement::basis(self.simples[i].clone());
            if self.mul_simple(a, i) != self.multiply(&s, a) {
                return false;
            }
        }
        let om = HeckeElement::basis(affine_weyl::omega_power(&self.datum, 1));
        self.mul_omega_power(a, 1) == self.multiply(&om, a)
    }

    /// Canonical JSON for an element: a list of terms, each carrying the
    /// reduced word, the Omega power, and the coefficient as sorted
    /// `[exponent, coefficient]` pairs in `v`.
    pub fn element_to_json(&self, a: &HeckeElement) -> serde_json::Value {
        let mut terms = Vec::new();
        for (x, c) in a.iter() {
            let (word, k) = self.word(x);
            let coeff: Vec<serde_json::Value> = c
                .iter()
                .map(|(e, n)| serde_json::json!([e, n]))
                .collect();
            terms.push(serde_json::json!({
                "word": word,
                "omega": k,
                "coeff": coeff,
            }));
        }
        serde_json::Value::Array(terms)
    }

    /// Parses the output of `element_to_json`.
    pub fn element_from_json(&self, value: &serde_json::Value) -> Result<HeckeElement> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::InvalidInput("element JSON must be an array".into()))?;
        let mut out = HeckeElement::zero();
        for term in arr {
            let word: Vec<usize> = term["word"]
                .as_array()
                .ok_or_else(|| Error::InvalidInput("term needs a word array".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| Error::InvalidInput("bad word letter".into()))
                })
                .collect::<Result<_>>()?;
            let omega = term["omega"]
                .as_i64()
                .ok_or_else(|| Error::InvalidInput("term needs an omega power".into()))?;
            let x = affine_weyl::element_from_word(&self.datum, &word, omega)?;
            let mut c = LaurentScalar::zero();
            for pair in term["coeff"]
                .as_array()
                .ok_or_else(|| Error::InvalidInput("term needs a coeff array".into()))?
            {
                let e = pair[0]
                    .as_i64()
                    .ok_or_else(|| Error::InvalidInput("bad exponent".into()))?;
                let n = pair[1]
                    .as_i64()
                    .ok_or_else(|| Error::InvalidInput("bad coefficient".into()))?;
                c.set_coeff(e as i32, n);
            }
            out.add_term(x, c);
        }
        Ok(out)
    }

    /// Snapshot of the reduced-word memo as a sorted JSON list of
    /// `[[letters...], omega]` entries, suitable for reuse by a later
    /// process working with the same group and rank.
    pub fn memo_to_json(&self) -> serde_json::Value {
        let memo = self.word_memo.borrow();
        let mut entries: Vec<(Vec<usize>, i64)> = memo.values().cloned().collect();
        entries.sort();
        entries.dedup();
        let list: Vec<serde_json::Value> = entries
            .iter()
            .map(|(word, k)| serde_json::json!([word, k]))
            .collect();
        serde_json::Value::Array(list)
    }

    /// Re-seeds the reduced-word memo from `memo_to_json` output and returns
    /// how many entries were accepted. Every entry is replayed through the
    /// group law and kept only if its word length matches the element it
    /// reaches, so a stale or foreign snapshot degrades to a no-op instead
    /// of changing any result.
    pub fn memo_from_json(&self, value: &serde_json::Value) -> usize {
        let Some(list) = value.as_array() else {
            return 0;
        };
        let mut loaded = 0;
        for entry in list {
            let Some(word) = entry[0].as_array() else {
                continue;
            };
            let word: Vec<usize> = match word
                .iter()
                .map(|v| v.as_u64().map(|u| u as usize))
                .collect::<Option<Vec<usize>>>()
            {
                Some(w) if w.iter().all(|&i| i < self.simples.len()) => w,
                _ => continue,
            };
            let Some(k) = entry[1].as_i64() else {
                continue;
            };
            let Ok(x) = affine_weyl::element_from_word(&self.datum, &word, k) else {
                continue;
            };
            if affine_weyl::length(&self.datum, &x) != word.len() as i64 {
                continue;
            }
            self.word_memo.borrow_mut().insert(x, (word, k));
            loaded += 1;
        }
        loaded
    }
}
