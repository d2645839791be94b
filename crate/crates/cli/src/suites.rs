//! Invariant suites behind `verify --n 3`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use cubeslides::bijection::{
    phi_forward, phi_forward_with, phi_inverse, section_of_upright, upright_of_section, Section,
    SignedSection, SlideOrder,
};
use cubeslides::laurent::{tree_weight_sum, weighted_count_product};
use cubeslides::slide_graph::{build, components};
use cubeslides::slides::{
    all_slides, edge_path, find_slidable_on_path, flipped_edges, is_consecutive_pair, is_slidable,
    normalize_downward, retract, retract_i, reversed_edge, slidable_edges, slide, slide_class,
    Vertical,
};
use cubeslides::tree::{enumerate_spanning_trees, random_spanning_tree};
use cubeslides::{CubeEdge, SpanningTree, Vertex};

use crate::Suite;

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn(&[SpanningTree]) -> Result<String, String>;

const CHECKS: &[(Suite, &str, &str, Check)] = &[
    (
        Suite::Weights,
        "weights",
        "edgewise_equals_oriented",
        edgewise_equals_oriented,
    ),
    (
        Suite::Weights,
        "weights",
        "exponent_bounds",
        exponent_bounds,
    ),
    (
        Suite::Weights,
        "weights",
        "weighted_identity",
        weighted_identity,
    ),
    (
        Suite::Weights,
        "weights",
        "sampled_q4_q5_monomials",
        sampled_monomials,
    ),
    (Suite::Slides, "slides", "slide_counts", slide_counts),
    (
        Suite::Slides,
        "slides",
        "cut_test_matches_definition",
        cut_test_matches_definition,
    ),
    (
        Suite::Slides,
        "slides",
        "unique_slidable_on_paths",
        unique_on_paths,
    ),
    (
        Suite::Slides,
        "slides",
        "orientation_reversal",
        orientation_reversal,
    ),
    (
        Suite::Slides,
        "slides",
        "independent_classes",
        independent_classes,
    ),
    (
        Suite::Retraction,
        "retraction",
        "retraction_fibres",
        retraction_fibres,
    ),
    (
        Suite::Retraction,
        "retraction",
        "downward_normalization",
        downward_normalization,
    ),
    (
        Suite::Retraction,
        "retraction",
        "upright_sections",
        upright_sections,
    ),
    (
        Suite::Bijection,
        "bijection",
        "bijective_and_weighted",
        bijective_and_weighted,
    ),
    (
        Suite::Bijection,
        "bijection",
        "inverse_round_trip",
        inverse_round_trip,
    ),
    (Suite::Bijection, "bijection", "fibre_signs", fibre_signs),
    (
        Suite::Bijection,
        "bijection",
        "slide_order_independent",
        slide_order_independent,
    ),
    (Suite::Graph, "graph", "graph_shape", graph_shape),
    (Suite::Graph, "graph", "component_census", component_census),
];

pub fn run(suite: Suite) -> Vec<CheckResult> {
    let trees = enumerate_spanning_trees(3).expect("Q_3 is at desk scale");
    CHECKS
        .iter()
        .filter(|(s, ..)| suite == Suite::All || *s == suite)
        .map(|&(_, name, check, f)| {
            let start = Instant::now();
            let outcome = f(&trees);
            let millis = start.elapsed().as_millis();
            let (pass, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                suite: name,
                check,
                pass,
                detail,
                millis,
            }
        })
        .collect()
}

pub fn print_table(results: &[CheckResult]) {
    eprintln!(
        "{:<11} {:<30} {:<6} {:>8}  detail",
        "suite", "check", "result", "ms"
    );
    for r in results {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        eprintln!(
            "{:<11} {:<30} {:<6} {:>8}  {}",
            r.suite, r.check, verdict, r.millis, r.detail
        );
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sampled() -> Vec<SpanningTree> {
    (0..100u64)
        .flat_map(|s| [random_spanning_tree(4, s), random_spanning_tree(5, s)])
        .map(|t| t.expect("valid dimension"))
        .collect()
}

fn edgewise_equals_oriented(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        ensure(t.dd_monomial_edgewise() == t.dd_monomial_oriented(), || {
            format!("mismatch on {t:?}")
        })?;
    }
    Ok(format!("{} trees", trees.len()))
}

fn exponent_bounds(trees: &[SpanningTree]) -> Result<String, String> {
    let extra = sampled();
    for t in trees.iter().chain(&extra) {
        let w = t.weight();
        for (&k, &x) in w.q_exp.iter().zip(&w.x_exp) {
            let k = k as i32;
            ensure(k >= 1 && x.abs() < k && (x + k) % 2 != 0, || {
                format!("k = {k}, x = {x} on {t:?}")
            })?;
        }
    }
    Ok(format!("{} trees", trees.len() + extra.len()))
}

fn weighted_identity(trees: &[SpanningTree]) -> Result<String, String> {
    let lhs = tree_weight_sum(trees);
    let rhs = weighted_count_product(3);
    ensure(lhs == rhs, || {
        "sum over trees differs from the product".into()
    })?;
    Ok(format!("{} monomials", lhs.len()))
}

fn sampled_monomials(_: &[SpanningTree]) -> Result<String, String> {
    let extra = sampled();
    for t in &extra {
        ensure(t.dd_monomial_edgewise() == t.dd_monomial_oriented(), || {
            format!("mismatch on {t:?}")
        })?;
    }
    Ok(format!("{} sampled trees", extra.len()))
}

fn slide_counts(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        let rooted = t.rooted();
        let sig = t.signature();
        for i in 1..=3 {
            let moves = slidable_edges(t, i).map_err(|e| e.to_string())?;
            let ups = t
                .edges_in_direction(i)
                .filter(|&e| rooted.mu(e) == 1)
                .count();
            let down_moves = moves
                .iter()
                .filter(|m| m.vertical == Vertical::Down)
                .count();
            ensure(
                moves.len() == sig[i - 1] - 1
                    && down_moves == ups
                    && moves.len() - down_moves == sig[i - 1] - ups - 1,
                || format!("direction {i} of {t:?}"),
            )?;
        }
        ensure(all_slides(t).len() == 4, || format!("{t:?}"))?;
    }
    Ok("every tree has k_i - 1 moves per direction, 4 in total".into())
}

fn cut_test_matches_definition(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        for i in 1..=3 {
            let fast: Vec<CubeEdge> = slidable_edges(t, i)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|m| m.edge)
                .collect();
            let direct: Vec<CubeEdge> = t
                .edges()
                .filter(|&e| e.dir != i && is_slidable(t, e, i).unwrap_or(false))
                .collect();
            ensure(fast == direct, || format!("direction {i} of {t:?}"))?;
        }
    }
    Ok(format!("{} trees, 3 directions", trees.len()))
}

/// Path edges that are `i`-slidable.
fn slidable_on(t: &SpanningTree, path: &[Vertex], i: usize) -> Vec<CubeEdge> {
    path.windows(2)
        .filter_map(|w| CubeEdge::between(w[0], w[1]))
        .filter(|&e| e.dir != i && is_slidable(t, e, i).unwrap_or(false))
        .collect()
}

fn unique_on_paths(trees: &[SpanningTree]) -> Result<String, String> {
    let mut pairs = 0;
    for t in trees {
        for i in 1..=3 {
            let edges: Vec<CubeEdge> = t.edges_in_direction(i).collect();
            for (a, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[a + 1..] {
                    if !is_consecutive_pair(t, e1, e2, i) {
                        continue;
                    }
                    let path = edge_path(t, e1, e2);
                    pairs += 1;
                    let on_path = slidable_on(t, &path, i);
                    let found = find_slidable_on_path(t, e1, e2, i).map_err(|e| e.to_string())?;
                    ensure(on_path == vec![found], || {
                        format!("{on_path:?} vs {found} on {t:?}")
                    })?;
                    let after = slide(t, found, i).map_err(|e| e.to_string())?;
                    let new_path = edge_path(&after, e1, e2);
                    ensure(
                        slidable_on(&after, &new_path, i) == vec![found.reflected(i)],
                        || format!("after sliding {found} on {t:?}"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{pairs} consecutive pairs"))
}

/// `C ∩ T_+`: edges of the cycle closed by `sigma_i(e)` lying beyond `e`.
fn predicted_flips(t: &SpanningTree, e: CubeEdge, i: usize) -> Vec<CubeEdge> {
    let rooted = t.rooted();
    let target = e.reflected(i);
    let child = rooted.child_end(e);
    let beyond = |v: Vertex| rooted.is_ancestor(child, v);
    let mut flips: Vec<CubeEdge> = rooted
        .path_edges(target.lower, target.upper())
        .into_iter()
        .filter(|f| beyond(f.lower) && beyond(f.upper()))
        .collect();
    flips.sort();
    flips
}

fn orientation_reversal(trees: &[SpanningTree]) -> Result<String, String> {
    let mut slides = 0;
    for t in trees {
        for m in all_slides(t) {
            slides += 1;
            let i = m.slide_dir;
            let mut flipped = flipped_edges(t, m.edge, i).map_err(|e| e.to_string())?;
            flipped.sort();
            ensure(flipped == predicted_flips(t, m.edge, i), || {
                format!("{m} on {t:?}")
            })?;
            reversed_edge(t, m.edge, i).map_err(|e| e.to_string())?;
        }
    }
    Ok(format!("{slides} slides"))
}

fn independent_classes(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        for i in 1..=3 {
            let class = slide_class(t, i).map_err(|e| e.to_string())?;
            ensure(class.len() == 1 << (t.signature()[i - 1] - 1), || {
                format!("class size in direction {i} of {t:?}")
            })?;
            let members: BTreeSet<_> = class.members.iter().collect();
            ensure(members.len() == class.len(), || {
                format!("repeated member for {t:?}")
            })?;
        }
    }
    Ok("all classes have 2^(k_i - 1) distinct trees".into())
}

fn retraction_fibres(trees: &[SpanningTree]) -> Result<String, String> {
    let mut fibres: BTreeMap<SpanningTree, usize> = BTreeMap::new();
    for t in trees {
        for i in 1..=3 {
            let r = retract_i(t, i).map_err(|e| e.to_string())?;
            ensure(retract_i(&r, i).as_ref() == Ok(&r), || {
                format!("pi_{i} on {t:?}")
            })?;
        }
        let u = retract(t).map_err(|e| e.to_string())?;
        ensure(u.is_upright() && retract(&u).as_ref() == Ok(&u), || {
            format!("{t:?}")
        })?;
        *fibres.entry(u).or_default() += 1;
    }
    ensure(
        fibres.len() == 24 && fibres.values().all(|&s| s == 16),
        || format!("{} fibres", fibres.len()),
    )?;
    Ok("24 upright images, each with 16 preimages".into())
}

fn downward_normalization(trees: &[SpanningTree]) -> Result<String, String> {
    let upright_sum: u32 = (1u32..8).map(|s| 2 * s.count_ones() - 1).sum();
    for t in trees {
        let done = normalize_downward(t).map_err(|e| e.to_string())?;
        ensure(
            done.tree.is_upright()
                && done.tree.signature() == t.signature()
                && done.steps.len() as u32 == (t.cardinality_sum() - upright_sum) / 2,
            || format!("{t:?}"),
        )?;
    }
    Ok(format!("{} trees", trees.len()))
}

fn upright_sections(trees: &[SpanningTree]) -> Result<String, String> {
    let upright: Vec<&SpanningTree> = trees.iter().filter(|t| t.is_upright()).collect();
    ensure(upright.len() == 24, || {
        format!("{} upright trees", upright.len())
    })?;
    for t in &upright {
        let s = section_of_upright(t).map_err(|e| e.to_string())?;
        ensure(upright_of_section(&s).as_ref() == Ok(*t), || {
            format!("{t:?}")
        })?;
    }
    let sections = Section::all(3).map_err(|e| e.to_string())?;
    ensure(sections.len() == 24, || {
        format!("{} sections", sections.len())
    })?;
    Ok("24 upright trees, 24 sections".into())
}

fn bijective_and_weighted(trees: &[SpanningTree]) -> Result<String, String> {
    let images = trees
        .par_iter()
        .map(|t| {
            let ss = phi_forward(t).map_err(|e| e.to_string())?;
            ensure(ss.weight() == t.weight(), || format!("weight of {t:?}"))?;
            Ok(ss)
        })
        .collect::<Result<BTreeSet<SignedSection>, String>>()?;
    ensure(images.len() == 384, || {
        format!("{} distinct images", images.len())
    })?;
    Ok("384 distinct signed sections, weights preserved".into())
}

fn inverse_round_trip(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        let ss = phi_forward(t).map_err(|e| e.to_string())?;
        ensure(phi_inverse(&ss).as_ref() == Ok(t), || format!("{t:?}"))?;
    }
    for ss in SignedSection::all(3).map_err(|e| e.to_string())? {
        let t = phi_inverse(&ss).map_err(|e| e.to_string())?;
        ensure(phi_forward(&t).as_ref() == Ok(&ss), || format!("{ss:?}"))?;
    }
    Ok("both compositions are the identity".into())
}

fn fibre_signs(trees: &[SpanningTree]) -> Result<String, String> {
    let mut fibres: BTreeMap<SpanningTree, BTreeSet<Vec<i8>>> = BTreeMap::new();
    for t in trees {
        let ss = phi_forward(t).map_err(|e| e.to_string())?;
        let u = retract(t).map_err(|e| e.to_string())?;
        ensure(Ok(ss.section()) == section_of_upright(&u), || {
            format!("{t:?}")
        })?;
        fibres
            .entry(u)
            .or_default()
            .insert(ss.choices().iter().map(|c| c.sign).collect());
    }
    ensure(fibres.values().all(|s| s.len() == 16), || {
        "a fibre misses a sign vector".into()
    })?;
    Ok(format!("{} fibres with all 16 sign vectors", fibres.len()))
}

fn slide_order_independent(trees: &[SpanningTree]) -> Result<String, String> {
    for t in trees {
        let base = phi_forward(t).map_err(|e| e.to_string())?;
        for order in [
            SlideOrder::Reverse,
            SlideOrder::Shuffled(1),
            SlideOrder::Shuffled(2),
        ] {
            ensure(phi_forward_with(t, order).as_ref() == Ok(&base), || {
                format!("{order:?} on {t:?}")
            })?;
        }
    }
    Ok("same signs under reversed and shuffled slide orders".into())
}

fn graph_shape(_: &[SpanningTree]) -> Result<String, String> {
    let g = build(3).map_err(|e| e.to_string())?;
    ensure(
        g.node_count() == 384 && (0..384).all(|k| g.degree(k) == 4) && g.edge_count() == 768,
        || "graph is not 4-regular on 384 nodes".into(),
    )?;
    Ok("384 nodes, 768 edges, 4-regular".into())
}

fn component_census(_: &[SpanningTree]) -> Result<String, String> {
    let g = build(3).map_err(|e| e.to_string())?;
    let comps = components(&g);
    let small: Vec<_> = comps.iter().filter(|c| c.size == 16).collect();
    let large: Vec<_> = comps.iter().filter(|c| c.size == 64).collect();
    ensure(
        small.len() == 12 && large.len() == 3 && comps.len() == 15,
        || format!("{} components", comps.len()),
    )?;
    ensure(small.iter().all(|c| c.q4_certified), || {
        "uncertified component".into()
    })?;
    ensure(large.iter().all(|c| c.upright_count == 4), || {
        "upright count".into()
    })?;
    Ok("12 certified 4-cubes and 3 components of 64".into())
}
