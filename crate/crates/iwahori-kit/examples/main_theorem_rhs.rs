//! Evaluates the central function that describes nearby cycles on a local
//! model: the signed, multiplicity-weighted sum of Bernstein elements.
//!
//! For a dominant coweight `lambda`, the function is
//!
//! ```text
//! (-1)^{length(t^lambda)} sum over dominant lambda' of
//!     m_lambda(lambda') z_lambda'
//! ```
//!
//! where `m_lambda(lambda')` is the weight multiplicity of `lambda'` in the
//! highest weight representation of `lambda`. The example prints the
//! decomposition for several inputs, highlighting the first case where a
//! multiplicity exceeds one, and confirms the result is central.

use iwahori_kit::bernstein::nearby_cycles_function;
use iwahori_kit::characters::dominant_weight_multiplicities;
use iwahori_kit::hecke::HeckeCtx;
use iwahori_kit::root_data::{Coweight, GroupKind};

fn report(ctx: &HeckeCtx, lambda: &Coweight) {
    let rd = ctx.datum();
    let len = rd.rho_pairing_twice(lambda).unwrap();
    let sign = if len % 2 == 0 { "+" } else { "-" };
    let mults = dominant_weight_multiplicities(rd, lambda).unwrap();

    print!("{} lambda = {lambda}:  {sign}[ ", rd.kind.name());
    for (mu, m) in &mults {
        if *m == 1 {
            print!("z_{mu} ");
        } else {
            print!("{m} z_{mu} ");
        }
    }
    println!("]");

    let f = nearby_cycles_function(ctx, lambda).unwrap();
    println!(
        "  support {} basis elements, central: {}",
        f.support_len(),
        ctx.is_central(&f)
    );
}

fn main() {
    let gl2 = HeckeCtx::new(GroupKind::Gl, 2).unwrap();
    let gl3 = HeckeCtx::new(GroupKind::Gl, 3).unwrap();
    let gsp4 = HeckeCtx::new(GroupKind::Gsp, 2).unwrap();

    report(&gl2, &Coweight(vec![0, 0]));
    report(&gl2, &Coweight(vec![1, 0]));
    report(&gl2, &Coweight(vec![2, 0]));
    report(&gl3, &Coweight(vec![1, 1, 0]));

    // the adjoint-type weight (2,1,0) is the smallest GL(3) case with an
    // interior multiplicity: the zero-sum weight space has dimension 2
    report(&gl3, &Coweight(vec![2, 1, 0]));

    report(&gsp4, &Coweight(vec![1, 1, 0, 0]));
    report(&gsp4, &Coweight(vec![2, 1, 1, 0]));
}
