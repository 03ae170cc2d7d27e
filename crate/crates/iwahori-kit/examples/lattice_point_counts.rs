//! Enumerates small lattice models over finite fields, stratifies them
//! under the symmetry group, and compares everything with the point counts
//! predicted by admissible sets.
//!
//! A model is a finite window approximation to a space of lattice chains:
//! periodic tuples for M, a single stable subspace for Grass, growing
//! chains for N. Under the chain stabilizer the points over the field with
//! q elements decompose into orbits, one per admissible element, of size
//! q^length. The example runs the full pipeline on a handful of
//! configurations and prints the match between enumerated and predicted
//! orbit size multisets; for the Grassmannian models it prints the coweight
//! label and the closed point count of each big-group orbit instead.

use iwahori_kit::lattice_models::{
    candidate_elements, enumerate_points, match_strata, stratify, stratum_coweight,
    LatticeModelParams, ModelKind, DEFAULT_ENUMERATION_BUDGET,
};
use iwahori_kit::root_data::{build_root_datum, Coweight, GroupKind};
use iwahori_kit::spherical::orbit_point_count;
use iwahori_kit::HeckeCtx;

fn survey(params: &LatticeModelParams) {
    let rd = build_root_datum(params.kind, params.d).unwrap();
    let points = enumerate_points(params, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let candidates = candidate_elements(&rd, params).unwrap();
    let report = match_strata(params, &points, &rd, &candidates).unwrap();

    let r_note = match params.r {
        Some(r) => format!(" r={r}"),
        None => String::new(),
    };
    println!(
        "{}  d={}{}  window [{}, {}]  q={}  model {}:",
        params.kind.name(),
        params.d,
        r_note,
        params.n_minus,
        params.n_plus,
        params.q,
        params.model.name()
    );
    println!(
        "  {} points, {} orbits vs {} candidates: {}",
        report.total_points,
        report.orbit_sizes.len(),
        candidates.len(),
        if report.matches { "match" } else { "MISMATCH" }
    );
    println!("  orbit sizes   {:?}", report.orbit_sizes);
    println!("  predicted     {:?}", report.predicted_sizes);
}

/// The Grassmannian orbits carry coweight labels (the elementary divisor
/// profile of the subspace relative to the window), and their sizes are the
/// closed point counts of the corresponding spherical orbits.
fn grass_survey(params: &LatticeModelParams) {
    let ctx = HeckeCtx::new(params.kind, params.d).unwrap();
    let points = enumerate_points(params, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let orbits = stratify(params, &points).unwrap();
    println!(
        "{} Grassmannian window [{}, {}], q={}: {} points, {} orbits",
        params.kind.name(),
        params.n_minus,
        params.n_plus,
        params.q,
        points.len(),
        orbits.len()
    );
    for orbit in &orbits {
        let label: Coweight = stratum_coweight(params, &orbit[0]).unwrap();
        let predicted = orbit_point_count(&ctx, &label, params.q as i64).unwrap();
        println!(
            "  orbit of size {:>3} labeled {label}, spherical count {predicted}",
            orbit.len()
        );
    }
    println!();
}

fn main() {
    let configs = [
        (GroupKind::Gl, 2, Some(1), 0, 1, 2, ModelKind::M),
        (GroupKind::Gl, 2, Some(1), 0, 1, 3, ModelKind::M),
        (GroupKind::Gl, 2, Some(1), -1, 1, 2, ModelKind::N),
        (GroupKind::Gl, 3, Some(2), 0, 1, 2, ModelKind::M),
        (GroupKind::Gsp, 2, None, 0, 1, 2, ModelKind::M),
        (GroupKind::Gsp, 2, None, 0, 1, 3, ModelKind::N),
        (GroupKind::Gsp, 3, None, 0, 1, 2, ModelKind::M),
    ];
    for (kind, d, r, n_minus, n_plus, q, model) in configs {
        survey(&LatticeModelParams {
            kind,
            d,
            r,
            n_minus,
            n_plus,
            q,
            model,
        });
    }
    println!();

    grass_survey(&LatticeModelParams {
        kind: GroupKind::Gl,
        d: 2,
        r: Some(0),
        n_minus: -1,
        n_plus: 1,
        q: 2,
        model: ModelKind::Grass,
    });
    grass_survey(&LatticeModelParams {
        kind: GroupKind::Gsp,
        d: 2,
        r: None,
        n_minus: 0,
        n_plus: 1,
        q: 2,
        model: ModelKind::Grass,
    });
}
