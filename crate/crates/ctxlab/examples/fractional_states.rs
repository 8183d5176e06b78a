//! Fractional states from color value maps, and the reachability question:
//! the pentagon's omega_0 (1/2 on the intertwiners, 0 elsewhere) is a
//! perfectly valid rational state, but no admissible coloring reaches it
//! by identifying colors with rational values.
//!
//!     cargo run --example fractional_states

use num_rational::BigRational;
use num_traits::Zero;

use ctxlab::catalog::pentagon;
use ctxlab::coloring::{find_coloring, SearchConfig};
use ctxlab::state::{
    check_rational_state, fractional_reachable, fractional_state, ColorValueMap, RationalState,
};

fn main() {
    let bundle = pentagon();
    let h = &bundle.hypergraph;
    let cfg = SearchConfig::default();

    // a fractional state built from a coloring: weight 1/3 on each color
    let coloring = find_coloring(h, 3, true, cfg).unwrap().unwrap();
    let third = BigRational::new(1.into(), 3.into());
    let map = ColorValueMap::new(vec![third.clone(), third.clone(), third]).unwrap();
    let s = fractional_state(h, &coloring, &map).unwrap();
    println!("uniform fractional state:");
    for v in h.vertices() {
        println!("  {} = {}", h.name(v), s.value(v));
    }

    // omega_0: 1/2 on the cycle vertices
    let cycle = bundle.cycle.as_ref().unwrap();
    let half = BigRational::new(1.into(), 2.into());
    let omega0 = RationalState {
        values: h
            .vertices()
            .map(|v| if cycle.contains(&v) { half.clone() } else { BigRational::zero() })
            .collect(),
    };
    println!("omega0 valid: {}", check_rational_state(h, &omega0).unwrap());
    let reachable = fractional_reachable(h, &omega0, 3, cfg).unwrap();
    println!("omega0 reachable by color identification: {}", reachable.is_some());
}
