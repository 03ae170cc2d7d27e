//! Prints the exact change of basis between Bernstein character sums and
//! double coset sums on the spherical module, then compares its entries
//! against q-analog weight multiplicities under a candidate normalization.
//!
//! The triangle matrix `C` is defined by
//!
//! ```text
//! (sum over mu' of m_mu(mu') z_mu') e_K
//!     = sum over dominant nu of C[mu][nu] * char(W_0 t^nu W_0)
//! ```
//!
//! It is upper triangular in dominance order with diagonal
//! `v^{-length(t^mu)}`, and collapses to the classical weight multiplicity
//! table at v = 1. A natural guess is that the normalized entry
//! `v^{length(t^nu)} C[mu][nu]` is the q-analog multiplicity of `nu` in
//! `V_mu` up to inverting q. The comparison below is printed for
//! inspection only; nothing here depends on it.

use iwahori_kit::characters::q_weight_multiplicity;
use iwahori_kit::hecke::HeckeCtx;
use iwahori_kit::root_data::{Coweight, GroupKind};
use iwahori_kit::spherical::triangle_matrix;
use iwahori_kit::LaurentScalar;

/// Substitutes q -> 1/q, which is the same as negating every v exponent.
fn invert_q(c: &LaurentScalar) -> LaurentScalar {
    let mut out = LaurentScalar::zero();
    for (e, n) in c.iter() {
        out.set_coeff(-e, *n);
    }
    out
}

fn survey(ctx: &HeckeCtx, lambda_max: &Coweight) {
    let rd = ctx.datum();
    println!(
        "{} triangle below {lambda_max}:",
        rd.kind.name()
    );
    let tri = triangle_matrix(ctx, lambda_max).expect("dominant input");

    let mut hits_direct = 0usize;
    let mut hits_inverted = 0usize;
    let mut pairs = 0usize;
    for (i, mu) in tri.labels.iter().enumerate() {
        for (j, nu) in tri.labels.iter().enumerate() {
            let c = &tri.entries[i][j];
            if c.is_zero() {
                continue;
            }
            pairs += 1;
            let len_nu = rd.rho_pairing_twice(nu).unwrap();
            let normalized = c.clone() * LaurentScalar::v_power(len_nu as i32);
            let kostka = q_weight_multiplicity(rd, mu, nu).unwrap();
            let direct = normalized == kostka;
            let inverted = normalized == invert_q(&kostka);
            hits_direct += direct as usize;
            hits_inverted += inverted as usize;
            println!(
                "  C[{mu}][{nu}] = {c}   v^{len_nu} C = {normalized}   K(q) = {kostka}   \
                 match: q {}  1/q {}",
                mark(direct),
                mark(inverted)
            );
        }
    }
    println!(
        "  {pairs} nonzero entries: {hits_direct} match K(q), {hits_inverted} match K(1/q)\n"
    );
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn main() {
    let gl2 = HeckeCtx::new(GroupKind::Gl, 2).unwrap();
    let gl3 = HeckeCtx::new(GroupKind::Gl, 3).unwrap();
    let gsp4 = HeckeCtx::new(GroupKind::Gsp, 2).unwrap();

    survey(&gl2, &Coweight(vec![2, 0]));
    survey(&gl2, &Coweight(vec![3, 0]));
    survey(&gl3, &Coweight(vec![2, 1, 0]));
    survey(&gsp4, &Coweight(vec![2, 1, 1, 0]));
}
