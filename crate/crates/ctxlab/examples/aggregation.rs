//! Which two-valued states arise by aggregating a color class of an
//! admissible coloring? On the pentagon all but one do: the "middle"
//! state (1 exactly on the non-intertwining vertices) is blocked by a
//! parity argument.
//!
//!     cargo run --example aggregation

use ctxlab::catalog::pentagon;
use ctxlab::coloring::SearchConfig;
use ctxlab::state::aggregability_report;

fn main() {
    let h = pentagon().hypergraph;
    let report = aggregability_report(&h, SearchConfig::default()).unwrap();

    for entry in &report.entries {
        let mut ones: Vec<&str> = entry.state.support().iter().map(|&v| h.name(v)).collect();
        ones.sort();
        match &entry.witness {
            Some((coloring, color)) => {
                println!(
                    "1 at {{{}}}: aggregable (color {color} of a {}-coloring)",
                    ones.join(", "),
                    coloring.k
                );
            }
            None => println!("1 at {{{}}}: NOT aggregable", ones.join(", ")),
        }
    }

    let blocked = report.entries.iter().filter(|e| e.witness.is_none()).count();
    println!("non-aggregable states: {blocked}");
}
