//! Transfer-matrix evaluation of the three-way state sum.
//!
//! The graph polynomial is expanded as a sum over spanning subgraphs,
//! `h(G) = sum_S (-1)^k(S) y^null(S)` with `y = -(sigma + 1)`, so that every
//! arc is either kept or dropped. Nodes are absorbed one at a time; a state
//! records which connected piece each dangling arc end belongs to.

use std::collections::{HashMap, HashSet};

use crate::diagram::{ArcId, Diagram, Node, Port};
use crate::laurent::LaurentPoly;

type Labels = Vec<u8>;

fn absorb_order(d: &Diagram, ports: &HashMap<ArcId, Vec<Port>>) -> Vec<Node> {
    let mut left: Vec<Node> = d.nodes().collect();
    let mut open: HashSet<ArcId> = HashSet::new();
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let score = |n: Node| {
            let arcs: Vec<ArcId> = (0..Diagram::node_degree(n))
                .map(|slot| d.arc_at(Port { node: n, slot }))
                .collect();
            let closing = arcs.iter().filter(|a| open.contains(a)).count() as i64;
            (closing * 2 - arcs.len() as i64, std::cmp::Reverse(n))
        };
        let (pos, _) = left.iter().enumerate().max_by_key(|(_, &n)| score(n)).unwrap();
        let node = left.remove(pos);
        for slot in 0..Diagram::node_degree(node) {
            let arc = d.arc_at(Port { node, slot });
            let here = ports[&arc].iter().filter(|p| p.node == node).count();
            if here == 2 {
                continue;
            }
            if !open.remove(&arc) {
                open.insert(arc);
            }
        }
        order.push(node);
    }
    order
}

#[derive(Clone)]
struct Branch {
    parent: Vec<usize>,
    sign: i32,
    sigma_exp: u32,
}

impl Branch {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Closes an arc whose two ends lie in pieces `x` and `y`.
fn close_arc(branches: Vec<Branch>, x: usize, y: usize) -> Vec<Branch> {
    let mut out = Vec::with_capacity(branches.len() * 2);
    for mut b in branches {
        let (rx, ry) = (b.find(x), b.find(y));
        if rx == ry {
            // Dropped (1) or kept (y = -sigma - 1): together -sigma.
            b.sign = -b.sign;
            b.sigma_exp += 1;
            out.push(b);
        } else {
            let mut kept = b.clone();
            kept.parent[rx] = ry;
            kept.sign = -kept.sign;
            out.push(b);
            out.push(kept);
        }
    }
    out
}

fn canonical(raw: &[usize]) -> Labels {
    let mut seen: Vec<usize> = Vec::new();
    raw.iter()
        .map(|r| match seen.iter().position(|s| s == r) {
            Some(i) => i as u8,
            None => {
                seen.push(*r);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

/// Raw Yamada value of `d` (no simplification), computed node by node.
pub fn frontier_sum(d: &Diagram) -> LaurentPoly {
    let ports = d.arc_ports();
    let order = absorb_order(d, &ports);
    let sigma = LaurentPoly::sigma();
    let mut sigma_pows = vec![LaurentPoly::one()];

    let mut frontier: Vec<ArcId> = Vec::new();
    let mut states: HashMap<Labels, LaurentPoly> = HashMap::from([(Vec::new(), LaurentPoly::one())]);

    for node in order {
        let arcs: Vec<ArcId> = (0..Diagram::node_degree(node))
            .map(|slot| d.arc_at(Port { node, slot }))
            .collect();
        let options: Vec<(LaurentPoly, &[usize])> = match node {
            Node::Vertex(_) => vec![(LaurentPoly::constant(-1), &[0, 0, 0][..])],
            Node::Crossing(_) => vec![
                (LaurentPoly::var_pow(1), &[0, 0, 1, 1][..]),
                (LaurentPoly::var_pow(-1), &[0, 1, 1, 0][..]),
                (LaurentPoly::constant(-1), &[0, 0, 0, 0][..]),
            ],
        };
        let mut next_frontier: Vec<ArcId> = frontier.iter().copied().filter(|a| !arcs.contains(a)).collect();
        for &a in &arcs {
            let local = ports[&a].iter().filter(|p| p.node == node).count();
            if local == 1 && !frontier.contains(&a) && !next_frontier.contains(&a) {
                next_frontier.push(a);
            }
        }
        next_frontier.sort_unstable();

        let mut next: HashMap<Labels, LaurentPoly> = HashMap::new();
        for (labels, value) in &states {
            let base = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
            for (weight, groups) in &options {
                let group_count = groups.iter().max().unwrap() + 1;
                let mut branches = vec![Branch {
                    parent: (0..base + group_count).collect(),
                    sign: 1,
                    sigma_exp: 0,
                }];
                let mut pending: HashMap<ArcId, usize> = HashMap::new();
                for (slot, &a) in arcs.iter().enumerate() {
                    let piece = base + groups[slot];
                    if let Some(i) = frontier.iter().position(|&f| f == a) {
                        branches = close_arc(branches, labels[i] as usize, piece);
                    } else if let Some(other) = pending.remove(&a) {
                        branches = close_arc(branches, other, piece);
                    } else {
                        pending.insert(a, piece);
                    }
                }
                let mut local: Vec<(Labels, i32, u32)> = Vec::new();
                for mut b in branches {
                    let raw: Vec<usize> = next_frontier
                        .iter()
                        .map(|a| match frontier.iter().position(|f| f == a) {
                            Some(i) => b.find(labels[i] as usize),
                            None => b.find(pending[a]),
                        })
                        .collect();
                    local.push((canonical(&raw), b.sign, b.sigma_exp));
                }
                let mut factors: HashMap<Labels, LaurentPoly> = HashMap::new();
                for (key, sign, exp) in local {
                    while sigma_pows.len() <= exp as usize {
                        let last = sigma_pows.last().unwrap() * &sigma;
                        sigma_pows.push(last);
                    }
                    let term = sigma_pows[exp as usize].scale(&sign.into());
                    *factors.entry(key).or_default() += &term;
                }
                for (key, f) in factors {
                    if f.is_zero() {
                        continue;
                    }
                    let contribution = &(value * weight) * &f;
                    *next.entry(key).or_default() += &contribution;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
        frontier = next_frontier;
    }
    let value = states.remove(&Vec::new()).unwrap_or_default();
    &value * &sigma.pow(d.free_loops() as u32)
}
