//! Command-line front end: batch analysis of quantum-logic hypergraphs.
//!
//! Exit codes: 0 success, 1 failed `--assert` checks, 2 usage/parse errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ctxlab::catalog::{catalog, LogicBundle, CATALOG_NAMES};
use ctxlab::coloring::{self, chromatic_number, enumerate_colorings, SearchConfig};
use ctxlab::dsl::{parse_logic, serialize_logic};
use ctxlab::export::{self, export_json, rational_str};
use ctxlab::hypergraph::Hypergraph;
use ctxlab::polytope::{evaluate_coordinates, facet_enumeration, CoordinateSpec};
use ctxlab::realization::verify_realization;
use ctxlab::state::{
    aggregability_report, aggregate, check_rational_state, enumerate_states, fractional_reachable,
    fractional_state, separating_report, subset_value_profile, ColorValueMap, RationalState,
};

#[derive(Parser)]
#[command(name = "ctxlab", version, about = "Exact analysis of quantum-logic hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Logic file in the ctxlab text format, or '-' for standard input
    #[arg(value_name = "FILE", conflicts_with = "catalog")]
    file: Option<String>,
    /// Built-in logic by name (pentagon, yu-oh, g32, triangle-demo)
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Reject implicitly declared vertices when parsing files
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structure and uniformity report
    Validate(InputArgs),
    /// Chromatic number with exhausted-search certificate and witness
    Chroma {
        #[command(flatten)]
        input: InputArgs,
        /// Upper bound of the color scan (default: uniformity + 3)
        #[arg(long, value_name = "K")]
        max_k: Option<usize>,
        /// Also enumerate the exclusive colorings at the chromatic number,
        /// up to relabeling
        #[arg(long)]
        enumerate: bool,
        /// Fail (exit 1) unless an admissible coloring exists, i.e. the
        /// chromatic number equals the uniformity
        #[arg(long)]
        require_admissible: bool,
    },
    /// Enumerate the two-valued states
    States {
        #[command(flatten)]
        input: InputArgs,
        /// Also report whether the states separate every vertex pair
        #[arg(long)]
        separating: bool,
        /// Report the maximum number of these vertices simultaneously 1
        #[arg(long, value_name = "V1,V2,...")]
        at_most_one: Option<String>,
        /// Exit 1 if a requested check fails (separating, or the
        /// at-most-one profile exceeding 1)
        #[arg(long)]
        assert: bool,
    },
    /// Aggregate admissible colorings into two-valued states
    Aggregate {
        #[command(flatten)]
        input: InputArgs,
        /// Classify every two-valued state as aggregable or not
        #[arg(long)]
        report: bool,
    },
    /// Fractional states from color value maps
    Fractional {
        #[command(flatten)]
        input: InputArgs,
        /// Value map entries color=val (val integer or p/q), e.g.
        /// 0=1/2,1=1/2,2=0
        #[arg(long, value_name = "COLOR=VAL,...", conflicts_with = "target")]
        values: Option<String>,
        /// Target state file (lines "vertex value"); searches for a
        /// coloring and value map reaching it
        #[arg(long, value_name = "FILE")]
        target: Option<String>,
        /// Exit 1 when the target is unreachable
        #[arg(long)]
        assert: bool,
    },
    /// Verify the orthogonal realization carried by the logic
    VerifyRealization {
        #[command(flatten)]
        input: InputArgs,
        /// Also scan non-co-contextual pairs for extra orthogonalities
        #[arg(long)]
        faithful: bool,
        /// Exit 1 on any context violation
        #[arg(long)]
        assert: bool,
    },
    /// Facet enumeration of a correlation polytope over the two-valued
    /// states
    Hull {
        #[command(flatten)]
        input: InputArgs,
        /// Coordinates: "pairs:(u,v),(x,y),..." or "probs:v1,v2,..."
        #[arg(long, value_name = "SPEC")]
        coords: String,
        /// State filter: all | aggregable | exclude:ID[,ID...] where ID is
        /// a canonical state index or "middle"
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// List or show the built-in logics
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn search_config() -> SearchConfig {
    let mut config = SearchConfig::default();
    if let Ok(raw) = std::env::var("CTXLAB_BUDGET") {
        if let Ok(budget) = raw.parse::<u64>() {
            config.node_budget = budget;
        }
    }
    config
}

fn load_bundle(input: &InputArgs) -> Result<LogicBundle, String> {
    match (&input.file, &input.catalog) {
        (None, Some(name)) => catalog(name).map_err(|e| e.to_string()),
        (Some(path), None) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| e.to_string())?;
                buf
            } else {
                fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
            };
            parse_logic(&text, input.strict).map_err(|e| e.to_string())
        }
        (None, None) => Err("no input: give a FILE, '-', or --catalog NAME".into()),
        (Some(_), Some(_)) => Err("give either a FILE or --catalog, not both".into()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let config = search_config();
    match cli.command {
        Command::Validate(input) => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            if input.json {
                println!("{}", export_json(&export::json_hypergraph(h)));
            } else {
                println!("vertices: {}", h.vertex_count());
                println!("contexts: {}", h.context_count());
                match h.uniformity() {
                    Ok(n) => println!("uniformity: {n}"),
                    Err(e) => println!("uniformity: none ({e})"),
                }
                let profile = h.incidence_profile();
                let names: Vec<&str> =
                    profile.intertwiners.iter().map(|&v| h.name(v)).collect();
                println!("intertwiners: {}", names.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chroma {
            input,
            max_k,
            enumerate,
            require_admissible,
        } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            let n = h.uniformity().map_err(|e| e.to_string())?;
            let k_max = max_k.unwrap_or(n + 3);
            let cert = chromatic_number(h, k_max, config).map_err(|e| e.to_string())?;
            let mut value = export::json_chromatic(h, &cert);
            if enumerate {
                let all = enumerate_colorings(h, cert.chromatic_number, true, config)
                    .map_err(|e| e.to_string())?;
                value["colorings_up_to_relabeling"] = json!(all.len());
                if input.json {
                    value["colorings"] = json!(all
                        .iter()
                        .map(|c| export::json_coloring(h, c))
                        .collect::<Vec<_>>());
                }
            }
            if input.json {
                println!("{}", export_json(&value));
            } else {
                println!("chromatic number: {}", cert.chromatic_number);
                if !cert.exhausted.is_empty() {
                    let ks: Vec<String> =
                        cert.exhausted.iter().map(|k| k.to_string()).collect();
                    println!("exhausted (no exclusive coloring): k = {}", ks.join(", "));
                }
                let witness: Vec<String> = h
                    .vertices()
                    .map(|v| format!("{}={}", h.name(v), cert.witness.color(v)))
                    .collect();
                println!("witness: {}", witness.join(" "));
                if enumerate {
                    println!(
                        "colorings up to relabeling: {}",
                        value["colorings_up_to_relabeling"]
                    );
                }
            }
            if require_admissible && cert.chromatic_number != n {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::States {
            input,
            separating,
            at_most_one,
            assert,
        } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            let states = enumerate_states(h).map_err(|e| e.to_string())?;
            let mut failed = false;
            let mut value = json!({
                "count": states.len(),
                "states": export::json_states(h, &states),
            });
            if separating {
                let report = separating_report(h, &states);
                if !report.separating {
                    failed = true;
                }
                value["separating"] = export::json_separating(h, &report);
            }
            if let Some(list) = &at_most_one {
                let subset = list
                    .split(',')
                    .map(|name| h.require_vertex(name.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                let max = subset_value_profile(&states, &subset);
                if max > 1 {
                    failed = true;
                }
                value["subset_max_ones"] = json!(max);
            }
            if input.json {
                println!("{}", export_json(&value));
            } else {
                println!("two-valued states: {}", states.len());
                for s in &states {
                    let mut ones: Vec<&str> =
                        s.support().iter().map(|&v| h.name(v)).collect();
                    ones.sort();
                    println!("  1 at {{{}}}", ones.join(", "));
                }
                if separating {
                    println!("separating: {}", value["separating"]["separating"]);
                }
                if at_most_one.is_some() {
                    println!("subset max simultaneous 1s: {}", value["subset_max_ones"]);
                }
            }
            if assert && failed {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Aggregate { input, report } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            if report {
                let agg = aggregability_report(h, config).map_err(|e| e.to_string())?;
                if input.json {
                    println!("{}", export_json(&export::json_aggregability(h, &agg)));
                } else {
                    for e in &agg.entries {
                        let mut ones: Vec<&str> =
                            e.state.support().iter().map(|&v| h.name(v)).collect();
                        ones.sort();
                        let tag = if e.witness.is_some() {
                            "aggregable"
                        } else {
                            "NOT aggregable"
                        };
                        println!("1 at {{{}}}: {tag}", ones.join(", "));
                    }
                }
            } else {
                let n = h.uniformity().map_err(|e| e.to_string())?;
                let witness = coloring::find_coloring(h, n, true, config)
                    .map_err(|e| e.to_string())?
                    .ok_or("no admissible coloring exists")?;
                let mut states = Vec::new();
                for color in 0..n {
                    states.push(aggregate(h, &witness, color).map_err(|e| e.to_string())?);
                }
                if input.json {
                    let value = json!({
                        "coloring": export::json_coloring(h, &witness),
                        "aggregated_states": export::json_states(h, &states),
                    });
                    println!("{}", export_json(&value));
                } else {
                    for (color, s) in states.iter().enumerate() {
                        let mut ones: Vec<&str> =
                            s.support().iter().map(|&v| h.name(v)).collect();
                        ones.sort();
                        println!("color {color} -> 1 at {{{}}}", ones.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fractional {
            input,
            values,
            target,
            assert,
        } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            let n = h.uniformity().map_err(|e| e.to_string())?;
            match (values, target) {
                (Some(spec), None) => {
                    let map = parse_value_map(&spec, n)?;
                    let witness = coloring::find_coloring(h, n, true, config)
                        .map_err(|e| e.to_string())?
                        .ok_or("no admissible coloring exists")?;
                    let s =
                        fractional_state(h, &witness, &map).map_err(|e| e.to_string())?;
                    if input.json {
                        let value = json!({
                            "coloring": export::json_coloring(h, &witness),
                            "value_map": export::json_color_value_map(&map),
                            "state": export::json_rational_state(h, &s),
                        });
                        println!("{}", export_json(&value));
                    } else {
                        for v in h.vertices() {
                            println!("{} = {}", h.name(v), rational_str(s.value(v)));
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                (None, Some(path)) => {
                    let target = read_target_state(h, &path)?;
                    if !check_rational_state(h, &target).map_err(|e| e.to_string())? {
                        return Err("target is not a valid rational state".into());
                    }
                    let found = fractional_reachable(h, &target, n, config)
                        .map_err(|e| e.to_string())?;
                    if input.json {
                        let value = match &found {
                            Some((c, m)) => json!({
                                "reachable": true,
                                "coloring": export::json_coloring(h, c),
                                "value_map": export::json_color_value_map(m),
                            }),
                            None => json!({ "reachable": false }),
                        };
                        println!("{}", export_json(&value));
                    } else {
                        match &found {
                            Some((c, m)) => {
                                println!("reachable");
                                let coloring: Vec<String> = h
                                    .vertices()
                                    .map(|v| format!("{}={}", h.name(v), c.color(v)))
                                    .collect();
                                println!("coloring: {}", coloring.join(" "));
                                let map: Vec<String> =
                                    m.values.iter().map(rational_str).collect();
                                println!("value map: [{}]", map.join(", "));
                            }
                            None => println!("not reachable"),
                        }
                    }
                    if assert && found.is_none() {
                        return Ok(ExitCode::FAILURE);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err("give exactly one of --values or --target".into()),
            }
        }
        Command::VerifyRealization {
            input,
            faithful,
            assert,
        } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            let r = bundle
                .realization
                .as_ref()
                .ok_or("logic carries no realization")?;
            let report = verify_realization(h, r, faithful).map_err(|e| e.to_string())?;
            if input.json {
                println!(
                    "{}",
                    export_json(&export::json_realization_report(h, &report))
                );
            } else {
                println!(
                    "contexts: {}",
                    if report.contexts_ok { "ok" } else { "VIOLATED" }
                );
                if let Some(f) = report.faithful {
                    println!("faithful: {f}");
                }
                for v in &report.violations {
                    println!("  {v:?}");
                }
            }
            if assert && !report.contexts_ok {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hull {
            input,
            coords,
            filter,
        } => {
            let bundle = load_bundle(&input)?;
            let h = &bundle.hypergraph;
            let spec = parse_coords(h, &coords)?;
            let states = enumerate_states(h).map_err(|e| e.to_string())?;
            let kept = apply_filter(&bundle, &states, &filter, config)?;
            let eval = evaluate_coordinates(&kept, &spec);
            let hrep = facet_enumeration(&eval.points).map_err(|e| e.to_string())?;
            if input.json {
                let value = json!({
                    "states_used": kept.len(),
                    "points": export::json_points(&eval),
                    "hull": export::json_hrep(&hrep),
                });
                println!("{}", export_json(&value));
            } else {
                println!(
                    "states: {}  points: {}  affine dimension: {}",
                    kept.len(),
                    eval.points.len(),
                    hrep.dimension
                );
                for eq in &hrep.equalities {
                    println!("equality: {}", show_inequality(eq));
                }
                for f in &hrep.facets {
                    println!("facet: {}", show_inequality(f));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in CATALOG_NAMES {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Show { name, json } => {
                let bundle = catalog(&name).map_err(|e| e.to_string())?;
                if json {
                    println!(
                        "{}",
                        export_json(&export::json_hypergraph(&bundle.hypergraph))
                    );
                } else {
                    print!("{}", serialize_logic(&bundle));
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn show_inequality(q: &ctxlab::polytope::LinearInequality) -> String {
    let mut terms = Vec::new();
    for (i, a) in q.normal.iter().enumerate() {
        if a != &num_bigint::BigInt::from(0) {
            terms.push(format!("{a}*x{i}"));
        }
    }
    format!("{} >= {}", terms.join(" + "), q.bound)
}

fn parse_value_map(spec: &str, k: usize) -> Result<ColorValueMap, String> {
    let mut values = vec![None; k];
    for entry in spec.split(',') {
        let (color, val) = entry
            .split_once('=')
            .ok_or_else(|| format!("bad value-map entry {entry:?}, expected color=val"))?;
        let color: usize = color
            .trim()
            .parse()
            .map_err(|_| format!("bad color index {color:?}"))?;
        if color >= k {
            return Err(format!("color {color} out of range for k={k}"));
        }
        values[color] = Some(parse_rat(val.trim())?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(format!("missing value for color {i}")))
        .collect::<Result<Vec<_>, _>>()?;
    ColorValueMap::new(values).map_err(|e| e.to_string())
}

fn parse_rat(token: &str) -> Result<num_rational::BigRational, String> {
    let bad = || format!("bad rational {token:?}");
    match token.split_once('/') {
        None => token
            .parse::<num_bigint::BigInt>()
            .map(num_rational::BigRational::from)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
            let q = q.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
            if q == num_bigint::BigInt::from(0) {
                return Err(bad());
            }
            Ok(num_rational::BigRational::new(p, q))
        }
    }
}

fn read_target_state(h: &Hypergraph, path: &str) -> Result<RationalState, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut values = vec![None; h.vertex_count()];
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(name), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("{path}:{}: expected \"vertex value\"", li + 1));
        };
        let v = h
            .vertex(name)
            .ok_or_else(|| format!("{path}:{}: unknown vertex {name:?}", li + 1))?;
        values[v.0] = Some(parse_rat(val)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| format!("missing value for vertex {:?}", h.name(ctxlab::VertexId(i))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalState { values })
}

fn parse_coords(h: &Hypergraph, spec: &str) -> Result<CoordinateSpec, String> {
    if let Some(rest) = spec.strip_prefix("probs:") {
        let names: Vec<&str> = rest.split(',').map(str::trim).collect();
        return CoordinateSpec::probability(h, &names).map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("pairs:") {
        let mut pairs = Vec::new();
        for chunk in rest.split("),") {
            let chunk = chunk.trim().trim_start_matches('(').trim_end_matches(')');
            let (a, b) = chunk
                .split_once(',')
                .ok_or_else(|| format!("bad pair {chunk:?}"))?;
            pairs.push((a.trim(), b.trim()));
        }
        return CoordinateSpec::pair_product(h, &pairs).map_err(|e| e.to_string());
    }
    Err("coords must start with \"pairs:\" or \"probs:\"".into())
}

fn apply_filter(
    bundle: &LogicBundle,
    states: &[ctxlab::state::TwoValuedState],
    filter: &str,
    config: SearchConfig,
) -> Result<Vec<ctxlab::state::TwoValuedState>, String> {
    let h = &bundle.hypergraph;
    match filter {
        "all" => Ok(states.to_vec()),
        "aggregable" => {
            let report = aggregability_report(h, config).map_err(|e| e.to_string())?;
            Ok(report
                .entries
                .iter()
                .filter(|e| e.witness.is_some())
                .map(|e| e.state.clone())
                .collect())
        }
        other => {
            let ids = other
                .strip_prefix("exclude:")
                .ok_or("filter must be all, aggregable, or exclude:ID[,ID...]")?;
            let mut excluded = Vec::new();
            for id in ids.split(',') {
                let id = id.trim();
                if id == "middle" {
                    excluded.push(middle_state_index(bundle, states)?);
                } else {
                    let idx: usize =
                        id.parse().map_err(|_| format!("bad state id {id:?}"))?;
                    if idx >= states.len() {
                        return Err(format!("state index {idx} out of range"));
                    }
                    excluded.push(idx);
                }
            }
            Ok(states
                .iter()
                .enumerate()
                .filter(|(i, _)| !excluded.contains(i))
                .map(|(_, s)| s.clone())
                .collect())
        }
    }
}

/// For cycle logics: the state valuing 1 exactly on the non-intertwining
/// "middle" vertices.
fn middle_state_index(
    bundle: &LogicBundle,
    states: &[ctxlab::state::TwoValuedState],
) -> Result<usize, String> {
    let cycle = bundle
        .cycle
        .as_ref()
        .ok_or("\"middle\" only applies to logics with cycle metadata")?;
    let h = &bundle.hypergraph;
    let target: Vec<bool> = h.vertices().map(|v| !cycle.contains(&v)).collect();
    states
        .iter()
        .position(|s| s.values == target)
        .ok_or("the all-middles assignment is not a valid state of this logic".into())
}
