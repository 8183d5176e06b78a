//! Enumerate the two-valued states of the pentagon logic and check that
//! they separate every pair of vertices.
//!
//!     cargo run --example two_valued_states

use ctxlab::catalog::pentagon;
use ctxlab::state::{enumerate_states, separating_report};

fn main() {
    let h = pentagon().hypergraph;
    let states = enumerate_states(&h).unwrap();
    println!("two-valued states: {}", states.len());
    for s in &states {
        let mut ones: Vec<&str> = s.support().iter().map(|&v| h.name(v)).collect();
        ones.sort();
        println!("  1 at {{{}}}", ones.join(", "));
    }

    let report = separating_report(&h, &states);
    println!("separating: {}", report.separating);
}
