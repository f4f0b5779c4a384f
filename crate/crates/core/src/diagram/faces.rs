use std::collections::{HashMap, HashSet};

use super::{Diagram, Node, Port};

/// A face of the planar rotation system, as the cyclic list of ports whose
/// arcs bound it. Consecutive darts `p`, `q` satisfy: the arc leaving `p`
/// arrives at the port just before `q` in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Port>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

pub fn faces(d: &Diagram) -> Vec<Face> {
    let ports = d.arc_ports();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for node in d.nodes() {
        for slot in 0..Diagram::node_degree(node) {
            let start = Port { node, slot };
            if seen.contains(&start) {
                continue;
            }
            let mut darts = Vec::new();
            let mut p = start;
            while seen.insert(p) {
                darts.push(p);
                let q = Diagram::opposite(&ports, d.arc_at(p), p);
                p = Port {
                    node: q.node,
                    slot: (q.slot + 1) % Diagram::node_degree(q.node),
                };
            }
            out.push(Face { darts });
        }
    }
    out
}

fn component_count(d: &Diagram) -> usize {
    let nodes: Vec<Node> = d.nodes().collect();
    let index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for ends in d.arc_ports().values() {
        let a = find(&mut parent, index[&ends[0].node]);
        let b = find(&mut parent, index[&ends[1].node]);
        parent[a] = b;
    }
    (0..nodes.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Euler check `V - E + F = 2C` over the connected pieces of the rotation system.
/// Assumes every arc label occurs exactly twice.
pub fn is_planar(d: &Diagram) -> bool {
    let v = 2 + d.crossing_count() as i64;
    let e = d.arcs().len() as i64;
    let f = faces(d).len() as i64;
    v - e + f == 2 * component_count(d) as i64
}
