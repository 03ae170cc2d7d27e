//! Computes characters of highest weight representations: weight
//! multiplicities, their q-analogs, dimensions, and tensor product
//! decompositions.
//!
//! Multiplicities come from an alternating sum over the finite Weyl group
//! of lattice point counts (partitions into positive coroots), so every
//! number printed here is exact. Dimensions are cross-checked against the
//! product formula over positive roots.

use iwahori_kit::characters::{
    decompose_product, dominant_weight_multiplicities, q_weight_multiplicity,
};
use iwahori_kit::root_data::{build_root_datum, Coweight, GroupKind, RootDatum};

fn character_table(rd: &RootDatum, lambda: &Coweight) {
    let mults = dominant_weight_multiplicities(rd, lambda).unwrap();
    let dim: i64 = mults
        .iter()
        .map(|(mu, m)| m * rd.weyl_orbit(mu).unwrap().len() as i64)
        .sum();
    println!(
        "{} V_{lambda}  (dimension {dim}, Weyl formula {}):",
        rd.kind.name(),
        rd.weyl_dimension(lambda).unwrap()
    );
    for (mu, m) in &mults {
        let orbit = rd.weyl_orbit(mu).unwrap().len();
        let q_analog = q_weight_multiplicity(rd, lambda, mu).unwrap();
        println!("  {mu}  x{m}  (orbit {orbit})  q-analog {q_analog}");
    }
    println!();
}

fn tensor_square(rd: &RootDatum, lambda: &Coweight) {
    print!("{} V_{lambda} (x) V_{lambda} = ", rd.kind.name());
    for (nu, c) in decompose_product(rd, lambda, lambda).unwrap() {
        if c == 1 {
            print!("V_{nu} + ");
        } else {
            print!("{c} V_{nu} + ");
        }
    }
    println!("(nothing else)");
}

fn main() {
    let gl3 = build_root_datum(GroupKind::Gl, 3).unwrap();
    let gsp4 = build_root_datum(GroupKind::Gsp, 2).unwrap();

    character_table(&gl3, &Coweight(vec![1, 0, 0]));
    character_table(&gl3, &Coweight(vec![2, 1, 0]));
    character_table(&gl3, &Coweight(vec![2, 2, 0]));
    character_table(&gsp4, &Coweight(vec![1, 1, 0, 0]));
    character_table(&gsp4, &Coweight(vec![2, 1, 1, 0]));

    tensor_square(&gl3, &Coweight(vec![1, 0, 0]));
    tensor_square(&gl3, &Coweight(vec![1, 1, 0]));
    tensor_square(&gsp4, &Coweight(vec![1, 1, 0, 0]));
}
