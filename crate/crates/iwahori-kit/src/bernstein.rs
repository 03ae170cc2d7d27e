//! The Bernstein presentation: commuting basis elements indexed by
//! coweights, the central elements attached to Weyl orbits, and the weighted
//! central sums attached to full characters.
//!
//! For a dominant coweight the basis element is a rescaled standard basis
//! vector, `Theta_lambda = v^{-length(t^lambda)} T_{t^lambda}`; in general
//! `lambda` is split as a difference of dominant coweights and the second
//! factor enters by its inverse:
//!
//! ```text
//! Theta_lambda = v^{length(t^b) - length(t^a)} T_{t^a} (T_{t^b})^{-1},
//! lambda = a - b.
//! ```
//!
//! The result does not depend on the splitting, the Theta commute with each
//! other, and the orbit sums `z_lambda` span the center of the algebra.

use crate::affine_weyl::AffineWeylElement;
use crate::characters::dominant_weight_multiplicities;
use crate::hecke::{HeckeCtx, HeckeElement};
use crate::laurent::LaurentScalar;
use crate::root_data::Coweight;
use crate::{Error, Result};

/// `Theta` for an explicit dominant pair `lambda = a - b`. Exposed so the
/// independence of the splitting can be exercised directly.
pub fn theta_from_pair(ctx: &HeckeCtx, a: &Coweight, b: &Coweight) -> Result<HeckeElement> {
    let rd = ctx.datum();
    if !rd.is_dominant(a)? {
        return Err(Error::NonDominant(a.0.clone()));
    }
    if !rd.is_dominant(b)? {
        return Err(Error::NonDominant(b.0.clone()));
    }
    let ta = AffineWeylElement::from_translation(a.clone());
    let tb = AffineWeylElement::from_translation(b.clone());
    let exponent = rd.rho_pairing_twice(b)? - rd.rho_pairing_twice(a)?;
    let front = HeckeElement::basis(ta).scale(&LaurentScalar::v_power(exponent as i32));
    Ok(ctx.mul_t_inverse(&front, &tb))
}

/// The Bernstein basis element of an arbitrary coweight.
pub fn theta(ctx: &HeckeCtx, lambda: &Coweight) -> Result<HeckeElement> {
    let (a, b) = ctx.datum().dominant_decomposition(lambda)?;
    theta_from_pair(ctx, &a, &b)
}

/// The central element of a dominant coweight: the sum of `Theta` over the
/// full Weyl orbit.
pub fn bernstein_z(ctx: &HeckeCtx, lambda: &Coweight) -> Result<HeckeElement> {
    let rd = ctx.datum();
    if !rd.is_dominant(lambda)? {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    let mut out = HeckeElement::zero();
    for mu in rd.weyl_orbit(lambda)? {
        out = out.add(&theta(ctx, &mu)?);
    }
    Ok(out)
}

/// The central sum weighted by the character of `V_lambda`: the combination
/// `sum over dominant mu <= lambda of m_lambda(mu) z_mu`.
pub fn bern_of_character(ctx: &HeckeCtx, lambda: &Coweight) -> Result<HeckeElement> {
    let mut out = HeckeElement::zero();
    for (mu, m) in dominant_weight_multiplicities(ctx.datum(), lambda)? {
        let z = bernstein_z(ctx, &mu)?;
        out = out.add(&z.scale(&LaurentScalar::from_int(m)));
    }
    Ok(out)
}

/// The right-hand side of the main identity: the signed character-weighted
/// central sum `(-1)^{length(t^lambda)} sum m_lambda(mu) z_mu`.
pub fn nearby_cycles_function(ctx: &HeckeCtx, lambda: &Coweight) -> Result<HeckeElement> {
    let len = ctx.datum().rho_pairing_twice(lambda)?;
    let body = bern_of_character(ctx, lambda)?;
    if len % 2 == 0 {
        Ok(body)
    } else {
        Ok(body.scale(&LaurentScalar::from_int(-1)))
    }
}
