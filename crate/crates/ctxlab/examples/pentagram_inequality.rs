//! Derive Boole-Bell style inequalities for the pentagon by exact facet
//! enumeration of its correlation polytope in pair-product coordinates.
//! Over all eleven states the pentagram bound sum >= -3 appears; dropping
//! the middle state adds the complementary bound sum <= 1.
//!
//!     cargo run --example pentagram_inequality

use ctxlab::catalog::pentagon;
use ctxlab::polytope::{evaluate_coordinates, facet_enumeration, CoordinateSpec, LinearInequality};
use ctxlab::state::enumerate_states;

fn show(q: &LinearInequality) -> String {
    let terms: Vec<String> = q
        .normal
        .iter()
        .enumerate()
        .filter(|(_, a)| !num_traits::Zero::is_zero(*a))
        .map(|(i, a)| format!("{a}*x{i}"))
        .collect();
    format!("{} >= {}", terms.join(" + "), q.bound)
}

fn main() {
    let bundle = pentagon();
    let h = &bundle.hypergraph;
    let states = enumerate_states(h).unwrap();
    let spec = CoordinateSpec::pair_product(
        h,
        &[("1", "3"), ("3", "5"), ("5", "7"), ("7", "9"), ("9", "1")],
    )
    .unwrap();

    let eval = evaluate_coordinates(&states, &spec);
    let hrep = facet_enumeration(&eval.points).unwrap();
    println!("all {} states, affine dimension {}:", states.len(), hrep.dimension);
    for f in &hrep.facets {
        println!("  {}", show(f));
    }

    // reduced set: drop the state valuing 1 on every non-intertwiner
    let cycle = bundle.cycle.as_ref().unwrap();
    let middle: Vec<bool> = h.vertices().map(|v| !cycle.contains(&v)).collect();
    let reduced: Vec<_> = states.into_iter().filter(|s| s.values != middle).collect();
    let eval = evaluate_coordinates(&reduced, &spec);
    let hrep = facet_enumeration(&eval.points).unwrap();
    println!("without the middle state ({} left):", reduced.len());
    for f in &hrep.facets {
        println!("  {}", show(f));
    }
}
