//! Certify the chromatic number of the Yu-Oh logic.
//!
//!     cargo run --example chromatic_certificate

use ctxlab::catalog::catalog;
use ctxlab::coloring::{check_coloring, chromatic_number, SearchConfig};

fn main() {
    let bundle = catalog("yu-oh").unwrap();
    let h = &bundle.hypergraph;
    let cert = chromatic_number(h, 6, SearchConfig::default()).unwrap();

    println!("logic: {} ({} vertices, {} contexts)", bundle.name, h.vertex_count(), h.context_count());
    println!("chromatic number: {}", cert.chromatic_number);
    for k in &cert.exhausted {
        println!("exhaustive search proved: no exclusive {k}-coloring exists");
    }

    let report = check_coloring(h, &cert.witness).unwrap();
    assert!(report.exclusive);
    println!("witness coloring (exclusive = {}):", report.exclusive);
    for v in h.vertices() {
        print!("  {}={}", h.name(v), cert.witness.color(v));
    }
    println!();

    // uniformity is 3, so a chromatic number of 4 means no admissible
    // coloring exists: the logic is chromatically contextual
    let n = h.uniformity().unwrap();
    println!(
        "admissible coloring exists: {}",
        cert.chromatic_number == n
    );
}
