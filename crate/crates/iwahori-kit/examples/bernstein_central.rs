//! Builds Bernstein central elements and checks their defining properties
//! at small rank.
//!
//! For a dominant coweight `lambda`, the element `z_lambda` is the sum of
//! the basis elements `theta_x` over the Weyl orbit of `lambda`. It lies in
//! the center of the Hecke algebra, and the assignment `lambda -> z_lambda`
//! turns coweight addition into multiplication up to a change of basis on
//! characters. This example prints support sizes, confirms centrality by
//! brute commutation against every generator, and multiplies two central
//! elements to show the product expanding back into the z basis.

use iwahori_kit::bernstein::{bern_of_character, bernstein_z};
use iwahori_kit::characters::decompose_product;
use iwahori_kit::hecke::HeckeCtx;
use iwahori_kit::root_data::{Coweight, GroupKind};

fn survey(ctx: &HeckeCtx, lambda: &Coweight) {
    let z = bernstein_z(ctx, lambda).expect("dominant input");
    println!(
        "  z_{lambda}: support {} basis elements, central: {}",
        z.support_len(),
        ctx.is_central(&z)
    );
}

fn main() {
    let gl3 = HeckeCtx::new(GroupKind::Gl, 3).unwrap();
    let gsp4 = HeckeCtx::new(GroupKind::Gsp, 2).unwrap();

    println!("GL(3) central elements:");
    for lam in [
        Coweight(vec![0, 0, 0]),
        Coweight(vec![1, 0, 0]),
        Coweight(vec![1, 1, 0]),
        Coweight(vec![2, 1, 0]),
    ] {
        survey(&gl3, &lam);
    }

    println!("GSp(4) central elements:");
    for lam in [Coweight(vec![1, 1, 0, 0]), Coweight(vec![1, 0, 0, -1])] {
        survey(&gsp4, &lam);
    }

    // a product of character sums expands exactly along the tensor product
    // decomposition of the characters themselves
    let a = Coweight(vec![1, 0, 0]);
    let b = Coweight(vec![1, 1, 0]);
    let lhs = gl3.multiply(
        &bern_of_character(&gl3, &a).unwrap(),
        &bern_of_character(&gl3, &b).unwrap(),
    );
    let mut rhs = gl3.one().sub(&gl3.one());
    print!("\nchi_{a} * chi_{b} = ");
    for (nu, c) in decompose_product(gl3.datum(), &a, &b).unwrap() {
        print!("{c} chi_{nu}  ");
        rhs = rhs.add(&bern_of_character(&gl3, &nu).unwrap().scale(
            &iwahori_kit::LaurentScalar::from_int(c),
        ));
    }
    println!();
    println!("product identity holds in the Hecke algebra: {}", lhs == rhs);
}
