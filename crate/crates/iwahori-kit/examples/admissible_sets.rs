//! Walks the admissible sets of a few dominant coweights and prints their
//! sizes, length histograms, and extreme elements.
//!
//! The admissible set of a dominant coweight `mu` is the union of the lower
//! Bruhat intervals below the translations `t^{mu'}` over the Weyl orbit of
//! `mu`. Its elements index the strata of the special fiber of the local
//! model attached to `mu`, so the sizes printed here are also stratum
//! counts.

use iwahori_kit::affine_weyl::{self, AffineWeylElement};
use iwahori_kit::root_data::{build_root_datum, Coweight, GroupKind, RootDatum};

fn describe(rd: &RootDatum, mu: &Coweight) {
    let adm = affine_weyl::admissible_set(rd, mu).expect("dominant input");
    let lengths: Vec<i64> = adm.iter().map(|x| affine_weyl::length(rd, x)).collect();
    let max_len = *lengths.iter().max().unwrap();

    println!(
        "{}({}) mu = {mu}: {} admissible elements",
        rd.kind.name(),
        if rd.kind == GroupKind::Gsp { 2 * rd.d } else { rd.d },
        adm.len()
    );

    print!("  lengths ");
    for l in 0..=max_len {
        let n = lengths.iter().filter(|&&x| x == l).count();
        print!("{l}:{n} ");
    }
    println!();

    // the maximal elements are exactly the orbit translations
    let top: Vec<&AffineWeylElement> = adm
        .iter()
        .filter(|x| affine_weyl::length(rd, x) == max_len)
        .collect();
    print!("  maximal: ");
    for x in &top {
        let (word, omega) = affine_weyl::reduced_word(rd, x);
        print!(
            "t^{} (word {:?}, omega {omega})  ",
            x.translation, word
        );
    }
    println!();

    let orbit = rd.weyl_orbit(mu).expect("dominant input");
    assert_eq!(top.len(), orbit.len());
    println!("  ({} = size of the Weyl orbit of mu)", orbit.len());
    println!();
}

fn main() {
    let gl2 = build_root_datum(GroupKind::Gl, 2).unwrap();
    let gl4 = build_root_datum(GroupKind::Gl, 4).unwrap();
    let gsp4 = build_root_datum(GroupKind::Gsp, 2).unwrap();

    describe(&gl2, &Coweight(vec![1, 0]));
    describe(&gl2, &Coweight(vec![2, 1]));
    describe(&gl4, &Coweight(vec![1, 0, 0, 0]));
    describe(&gl4, &Coweight(vec![1, 1, 0, 0]));
    describe(&gsp4, &Coweight(vec![1, 1, 0, 0]));
    describe(&gsp4, &Coweight(vec![2, 1, 1, 0]));
}
