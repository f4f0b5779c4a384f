use super::hpoly::{HCache, Multigraph};
use crate::diagram::ops::{A_PAIRING, B_PAIRING};
use crate::diagram::{Diagram, Node};
use crate::laurent::LaurentPoly;

/// Underlying abstract graph of a crossing-free resolution: original
/// vertices, remaining crossings as 4-valent vertices, circles as loops.
pub fn underlying_graph(d: &Diagram) -> Multigraph {
    let nodes: Vec<Node> = d.nodes().collect();
    let index = |n: Node| nodes.iter().position(|&m| m == n).unwrap();
    let mut edges: Vec<(usize, usize)> = d
        .arc_ports()
        .into_values()
        .map(|ends| (index(ends[0].node), index(ends[1].node)))
        .collect();
    edges.sort_unstable();
    let base = nodes.len();
    for k in 0..d.free_loops() {
        edges.push((base + k, base + k));
    }
    Multigraph::new(base + d.free_loops(), edges)
}

/// Literal three-way state sum over all `3^c` resolutions, each state graph
/// evaluated by deletion-contraction. Exponential; meant for small diagrams.
pub fn state_sum(d: &Diagram) -> LaurentPoly {
    let c = d.crossing_count();
    let mut cache = HCache::new();
    let mut total = LaurentPoly::zero();
    let mut choice = vec![0u8; c];
    loop {
        let mut plans = Vec::new();
        let mut exponent = 0;
        for (i, &s) in choice.iter().enumerate() {
            match s {
                0 => {
                    plans.push((i, A_PAIRING));
                    exponent += 1;
                }
                1 => {
                    plans.push((i, B_PAIRING));
                    exponent -= 1;
                }
                _ => {}
            }
        }
        let state = d.resolve(&plans);
        total += &cache.h(&underlying_graph(&state)).shift(exponent);
        // Odometer over {A, B, vertex}^c.
        let mut i = 0;
        while i < c && choice[i] == 2 {
            choice[i] = 0;
            i += 1;
        }
        if i == c {
            break;
        }
        choice[i] += 1;
    }
    total
}
