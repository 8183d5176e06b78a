//! Verify the orthogonal realization of the Yu-Oh logic with exact
//! rational arithmetic: every context must be a set of mutually
//! orthogonal rays spanning the ambient dimension.
//!
//!     cargo run --example verify_rays

use ctxlab::catalog::catalog;
use ctxlab::realization::verify_realization;

fn main() {
    let bundle = catalog("yu-oh").unwrap();
    let h = &bundle.hypergraph;
    let r = bundle.realization.as_ref().unwrap();

    println!("dimension: {}", r.dimension);
    for v in h.vertices() {
        let ray = r.ray(v).unwrap();
        let coords: Vec<String> = ray.coords().iter().map(|c| c.to_string()).collect();
        println!("  {} = ({})", h.name(v), coords.join(", "));
    }

    // checking faithfulness too: orthogonal pairs must be exactly the
    // co-contextual ones
    let report = verify_realization(h, r, true).unwrap();
    println!("contexts ok: {}", report.contexts_ok);
    println!("faithful: {:?}", report.faithful);
    for violation in &report.violations {
        println!("  violation: {violation:?}");
    }
}
