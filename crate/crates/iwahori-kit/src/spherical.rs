//! The spherical side: averaging over the finite Weyl group, characteristic
//! functions of spherical double cosets, the minuscule identity, and the
//! exact transition matrix between the central basis and the double-coset
//! basis.
//!
//! Multiplying on the right by `e_K = sum of T_w over the finite Weyl
//! group` projects onto the spherical module. A central element lands in
//! the span of the double-coset characteristic functions, and because the
//! double cosets partition the group, the change of basis can be read off
//! one translation coefficient at a time; any nonzero remainder after the
//! elimination is a hard error rather than a silent truncation.

use crate::affine_weyl::{self, AffineWeylElement};
use crate::bernstein::bernstein_z;
use crate::hecke::{HeckeCtx, HeckeElement};
use crate::laurent::LaurentScalar;
use crate::root_data::Coweight;
use crate::{Error, Result};

/// The unnormalized spherical idempotent: the sum of all finite standard
/// basis vectors.
pub fn e_k(ctx: &HeckeCtx) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for w in ctx.datum().weyl_elements() {
        out.add_term(AffineWeylElement::from_finite(w), LaurentScalar::one());
    }
    out
}

/// Projection of an element into the spherical module: `f * e_K`.
pub fn star_ik(ctx: &HeckeCtx, f: &HeckeElement) -> HeckeElement {
    ctx.multiply(f, &e_k(ctx))
}

/// The Poincare polynomial of the finite Weyl group, as a polynomial in q.
pub fn poincare_w0(ctx: &HeckeCtx) -> LaurentScalar {
    let rd = ctx.datum();
    let mut out = LaurentScalar::zero();
    for w in rd.weyl_elements() {
        out = out + LaurentScalar::q_power(rd.finite_length(&w) as i32);
    }
    out
}

/// The characteristic function of the spherical double coset of `t^mu`:
/// the sum of `T_x` over `W_0 t^mu W_0`.
pub fn double_coset_char(ctx: &HeckeCtx, mu: &Coweight) -> Result<HeckeElement> {
    let mut out = HeckeElement::zero();
    for x in affine_weyl::double_coset(ctx.datum(), mu)? {
        out.add_term(x, LaurentScalar::one());
    }
    Ok(out)
}

/// Checks the minuscule identity: for minuscule dominant `mu`,
///
/// ```text
/// v^{length(t^mu)} z_mu e_K = characteristic function of W_0 t^mu W_0.
/// ```
pub fn verify_minuscule_identity(ctx: &HeckeCtx, mu: &Coweight) -> Result<()> {
    let rd = ctx.datum();
    if !rd.is_dominant(mu)? {
        return Err(Error::NonDominant(mu.0.clone()));
    }
    if !rd.is_minuscule(mu)? {
        return Err(Error::NotMinuscule(mu.0.clone()));
    }
    let len = rd.rho_pairing_twice(mu)?;
    let lhs = star_ik(ctx, &bernstein_z(ctx, mu)?).scale(&LaurentScalar::v_power(len as i32));
    let rhs = double_coset_char(ctx, mu)?;
    if lhs == rhs {
        Ok(())
    } else {
        let diff = lhs.sub(&rhs);
        Err(Error::VerificationFailed(format!(
            "minuscule identity failed for {mu}: difference {diff}"
        )))
    }
}

/// The exact change of basis on the spherical module: the matrix `C` with
///
/// ```text
/// (sum over mu' of m_mu(mu') z_mu') e_K
///     = sum over nu of C[mu][nu] * char(W_0 t^nu W_0)
/// ```
///
/// over all dominant `nu <= mu <= lambda_max`. Labels are sorted downward
/// from `lambda_max`, so the matrix is upper triangular, with diagonal
/// `v^{-length(t^mu)}`; at v = 1 it degenerates to the weight multiplicity
/// table itself.
pub struct TriangleMatrix {
    pub labels: Vec<Coweight>,
    pub entries: Vec<Vec<LaurentScalar>>,
}

pub fn triangle_matrix(ctx: &HeckeCtx, lambda_max: &Coweight) -> Result<TriangleMatrix> {
    let rd = ctx.datum();
    if !rd.is_dominant(lambda_max)? {
        return Err(Error::NonDominant(lambda_max.0.clone()));
    }
    let mut labels: Vec<Coweight> = crate::characters::weights_of(rd, lambda_max)?
        .into_iter()
        .filter(|x| rd.is_dominant(x).unwrap_or(false))
        .collect();
    labels.sort_by_key(|mu| {
        (
            -rd.rho_pairing_twice(mu).expect("validated"),
            mu.clone(),
        )
    });

    let mut entries = Vec::with_capacity(labels.len());
    for mu in &labels {
        let mut residue = star_ik(ctx, &crate::bernstein::bern_of_character(ctx, mu)?);
        let mut row = Vec::with_capacity(labels.len());
        for nu in &labels {
            // each double coset holds exactly one dominant translation, so
            // the coefficient at T_{t^nu} determines the full coset weight
            let c = residue.coeff(&AffineWeylElement::from_translation(nu.clone()));
            if !c.is_zero() {
                residue = residue.sub(&double_coset_char(ctx, nu)?.scale(&c));
            }
            row.push(c);
        }
        if !residue.is_zero() {
            return Err(Error::TriangleResidual(format!(
                "row {mu} leaves {residue}"
            )));
        }
        entries.push(row);
    }
    Ok(TriangleMatrix { labels, entries })
}

/// The number of points over the field with `q` elements of the orbit
/// attached to `lambda` in the quotient space of lattices: the length
/// generating function of the double coset divided by the Poincare
/// polynomial of the finite Weyl group.
pub fn orbit_point_count(ctx: &HeckeCtx, lambda: &Coweight, q: i64) -> Result<i64> {
    let rd = ctx.datum();
    let mut total: i64 = 0;
    for x in affine_weyl::double_coset(rd, lambda)? {
        let len = affine_weyl::length(rd, &x) as u32;
        total += q.pow(len);
    }
    let denom = poincare_w0(ctx)
        .eval_q(q)
        .expect("Poincare polynomial is a polynomial in q");
    debug_assert_eq!(total % denom, 0);
    Ok(total / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::GroupKind;

    fn ctx_gl(d: usize) -> HeckeCtx {
        HeckeCtx::new(GroupKind::Gl, d).unwrap()
    }

    fn ctx_gsp(d: usize) -> HeckeCtx {
        HeckeCtx::new(GroupKind::Gsp, d).unwrap()
    }

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn e_k_is_a_scaled_idempotent() {
        for ctx in [ctx_gl(2), ctx_gl(3), ctx_gsp(2)] {
            let ek = e_k(&ctx);
            let square = ctx.multiply(&ek, &ek);
            assert_eq!(square, ek.scale(&poincare_w0(&ctx)));
        }
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(
            poincare_w0(&ctx_gl(2)),
            LaurentScalar::one() + LaurentScalar::q_power(1)
        );
        // S_3: 1 + 2q + 2q^2 + q^3, which is (1+q)(1+q+q^2)
        let p = poincare_w0(&ctx_gl(3));
        assert_eq!(p.eval_q(2), Some(21));
        assert_eq!(p.eval_q(1), Some(6));
        // hyperoctahedral rank 2: (1+q)(1+q+q^2+q^3)
        let p = poincare_w0(&ctx_gsp(2));
        assert_eq!(p.eval_q(2), Some(45));
        assert_eq!(p.eval_q(1), Some(8));
    }

    #[test]
    fn minuscule_identity_gl2() {
        let ctx = ctx_gl(2);
        verify_minuscule_identity(&ctx, &cw(&[1, 0])).unwrap();
        verify_minuscule_identity(&ctx, &cw(&[1, 1])).unwrap();
    }

    #[test]
    fn minuscule_identity_gl3_gl4() {
        let ctx = ctx_gl(3);
        verify_minuscule_identity(&ctx, &cw(&[1, 0, 0])).unwrap();
        verify_minuscule_identity(&ctx, &cw(&[1, 1, 0])).unwrap();
        let ctx = ctx_gl(4);
        verify_minuscule_identity(&ctx, &cw(&[1, 1, 0, 0])).unwrap();
    }

    #[test]
    fn minuscule_identity_gsp4() {
        let ctx = ctx_gsp(2);
        verify_minuscule_identity(&ctx, &cw(&[1, 1, 0, 0])).unwrap();
    }

    #[test]
    fn minuscule_identity_rejects_non_minuscule() {
        let ctx = ctx_gl(2);
        assert!(matches!(
            verify_minuscule_identity(&ctx, &cw(&[2, 0])),
            Err(Error::NotMinuscule(_))
        ));
    }

    #[test]
    fn triangle_gl2_up_to_two() {
        let ctx = ctx_gl(2);
        let tri = triangle_matrix(&ctx, &cw(&[2, 0])).unwrap();
        assert_eq!(tri.labels, vec![cw(&[2, 0]), cw(&[1, 1])]);
        assert_eq!(tri.entries[0][0], LaurentScalar::v_power(-2));
        assert_eq!(tri.entries[1][0], LaurentScalar::zero());
        assert_eq!(tri.entries[1][1], LaurentScalar::one());
        // the single off-diagonal entry, worked out by hand
        assert_eq!(tri.entries[0][1], LaurentScalar::v_power(-2));
    }

    #[test]
    fn triangle_diagonal_and_specialization() {
        let cases: Vec<(HeckeCtx, Coweight)> = vec![
            (ctx_gl(2), cw(&[2, 0])),
            (ctx_gl(3), cw(&[2, 1, 0])),
            (ctx_gsp(2), cw(&[2, 1, 1, 0])),
        ];
        for (ctx, lam) in cases {
            let rd = ctx.datum();
            let tri = triangle_matrix(&ctx, &lam).unwrap();
            let n = tri.labels.len();
            for i in 0..n {
                let li = rd.rho_pairing_twice(&tri.labels[i]).unwrap();
                assert_eq!(tri.entries[i][i], LaurentScalar::v_power(-(li as i32)));
                for j in 0..n {
                    if j < i {
                        assert!(tri.entries[i][j].is_zero(), "not triangular");
                    }
                    // at v = 1 the matrix is the weight multiplicity table
                    let m = crate::characters::weight_multiplicity(
                        rd,
                        &tri.labels[i],
                        &tri.labels[j],
                    )
                    .unwrap();
                    assert_eq!(tri.entries[i][j].eval_at_one(), m, "entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn orbit_point_counts_gl2() {
        let ctx = ctx_gl(2);
        // the orbit of the standard coweight is a projective line
        for q in [2, 3, 4] {
            assert_eq!(orbit_point_count(&ctx, &cw(&[1, 0]), q).unwrap(), q + 1);
            assert_eq!(orbit_point_count(&ctx, &cw(&[1, 1]), q).unwrap(), 1);
        }
    }

    #[test]
    fn orbit_point_counts_gsp4() {
        let ctx = ctx_gsp(2);
        // the minuscule orbit for the similitude group is a 3-dimensional
        // quadric: (q+1)(q^2+1)
        for q in [2, 3] {
            assert_eq!(
                orbit_point_count(&ctx, &cw(&[1, 1, 0, 0]), q).unwrap(),
                (q + 1) * (q * q + 1)
            );
        }
    }
}
