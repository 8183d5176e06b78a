//! Define a logic in the text format, analyze it, and write it back out
//! canonically.
//!
//!     cargo run --example custom_logic

use ctxlab::coloring::{chromatic_number, SearchConfig};
use ctxlab::dsl::{parse_logic, serialize_logic};
use ctxlab::state::enumerate_states;

const SPECKER_BUG: &str = "
# two triangles of contexts glued along a path: a 2-uniform cycle of
# odd length has no two-valued state at all
context a b
context b c
context c d
context d e
context e a
";

fn main() {
    let bundle = parse_logic(SPECKER_BUG, false).unwrap();
    let h = &bundle.hypergraph;

    let cert = chromatic_number(h, 5, SearchConfig::default()).unwrap();
    println!("chromatic number: {}", cert.chromatic_number);

    let states = enumerate_states(h).unwrap();
    println!("two-valued states: {}", states.len());

    println!("canonical form:");
    print!("{}", serialize_logic(&bundle));
}
