//! Checks the minuscule coset identity across every minuscule dominant
//! coweight at small rank.
//!
//! When `mu` is minuscule (every weight of `V_mu` lies in one Weyl orbit),
//! the central element `z_mu` interacts with the spherical projector in the
//! simplest possible way:
//!
//! ```text
//! v^{length(t^mu)} z_mu e_K = characteristic function of W_0 t^mu W_0.
//! ```
//!
//! The library verifies the identity by expanding both sides in the
//! standard basis. This example runs the check for the fundamental
//! coweights of GL(2), GL(3), GL(4) and the minuscule coweights of GSp(4)
//! and GSp(6), plus central shifts, and shows what the verifier reports
//! when handed a non minuscule input.

use iwahori_kit::root_data::{Coweight, GroupKind};
use iwahori_kit::spherical::verify_minuscule_identity;
use iwahori_kit::HeckeCtx;

fn check(ctx: &HeckeCtx, mu: Coweight) {
    match verify_minuscule_identity(ctx, &mu) {
        Ok(()) => println!("  {} mu = {mu}: identity holds", ctx.datum().kind.name()),
        Err(e) => println!("  {} mu = {mu}: {e}", ctx.datum().kind.name()),
    }
}

fn main() {
    println!("GL fundamental coweights (1^r, 0^(d-r)):");
    for d in 2..=4 {
        let ctx = HeckeCtx::new(GroupKind::Gl, d).unwrap();
        for r in 1..d {
            let mut v = vec![1; r];
            v.extend(vec![0; d - r]);
            check(&ctx, Coweight(v));
        }
        // the determinant direction is a length zero translation
        check(&ctx, Coweight(vec![1; d]));
    }

    println!("GSp minuscule coweights:");
    let gsp4 = HeckeCtx::new(GroupKind::Gsp, 2).unwrap();
    check(&gsp4, Coweight(vec![1, 1, 0, 0]));
    check(&gsp4, Coweight(vec![1, 1, 1, 1]));
    let gsp6 = HeckeCtx::new(GroupKind::Gsp, 3).unwrap();
    check(&gsp6, Coweight(vec![1, 1, 1, 0, 0, 0]));

    println!("inputs the verifier must refuse:");
    check(&HeckeCtx::new(GroupKind::Gl, 2).unwrap(), Coweight(vec![2, 0]));
    check(&gsp4, Coweight(vec![1, 0, 1, 0]));
}
