//! Combinatorial θ-curve diagrams.
//!
//! A diagram is a planar rotation system: two trivalent vertices and a list of
//! crossings, each listing its incident arc labels counterclockwise. Every arc
//! label occurs exactly twice. In a crossing record `X a b c d` the strand
//! `a-c` passes under `b-d`; in an oriented diagram `a` is the incoming
//! under-arc and the stored sign fixes the direction of the over-strand
//! (positive when it runs from `d` to `b`).
//!
//! Vertex 0 is always the source. Smoothings may produce circle components,
//! and crossing-free circles are kept as a bare count.

mod catalog;
mod code;
mod faces;
pub(crate) mod ops;
mod simplify;

use std::collections::{BTreeMap, HashMap, HashSet};

pub use catalog::{catalog, catalog_names, twist_theta};
pub use faces::{faces, is_planar, Face};
pub use ops::{apply_nsign, connected_sum, mirror, switch_crossing};
pub use simplify::{simplify, Move};

use crate::error::{Error, Result};

pub type ArcId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    /// +1 or -1; meaningful only while the diagram is oriented.
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Vertex(u8),
    Crossing(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub node: Node,
    pub slot: u8,
}

/// Which closed or vertex-to-vertex strand an arc lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Edge(u8),
    Circle(u16),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingKind {
    SelfCrossing,
    NonSelfCrossing,
}

/// One entry of an n-sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignEntry {
    Pos,
    Neg,
    Zero,
    Inf,
}

impl SignEntry {
    pub fn symbol(self) -> &'static str {
        match self {
            SignEntry::Pos => "+",
            SignEntry::Neg => "-",
            SignEntry::Zero => "0",
            SignEntry::Inf => "inf",
        }
    }
}

pub type NSign = Vec<SignEntry>;

/// A step of a strand traversal: the arc walked and the port it arrives at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub arc: ArcId,
    pub arrive: Port,
}

/// Traversals of an oriented diagram: the three edges from the source and the circles.
#[derive(Clone, Debug)]
pub struct Strands {
    pub edges: [Vec<Step>; 3],
    pub circles: Vec<Vec<Step>>,
    pub component: HashMap<ArcId, Component>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    name: String,
    vertices: [[ArcId; 3]; 2],
    crossings: Vec<Crossing>,
    /// Source arcs that begin E1, E2, E3.
    edge_starts: [ArcId; 3],
    free_loops: usize,
    oriented: bool,
}

impl Diagram {
    /// Builds an oriented θ-curve diagram from raw records, orienting every
    /// edge away from `vertices[0]`. Crossing records are rotated so the
    /// incoming under-arc comes first and their signs are computed.
    /// `edge_starts` names the source arcs of E1, E2, E3.
    pub fn from_records(
        name: impl Into<String>,
        vertices: [[ArcId; 3]; 2],
        crossings: Vec<[ArcId; 4]>,
        edge_starts: [ArcId; 3],
    ) -> Result<Self> {
        let mut d = Diagram {
            name: name.into(),
            vertices,
            crossings: crossings.into_iter().map(|arcs| Crossing { arcs, sign: 1 }).collect(),
            edge_starts,
            free_loops: 0,
            oriented: false,
        };
        d.check_structure()?;
        let mut starts = edge_starts;
        starts.sort_unstable();
        let mut at_source = vertices[0];
        at_source.sort_unstable();
        if starts != at_source {
            return Err(Error::Validation(
                "edges E1, E2, E3 must start at the three distinct source arcs".into(),
            ));
        }
        d.orient_by_tracing()?;
        d.oriented = true;
        d.check_orientation()?;
        Ok(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[[ArcId; 3]; 2] {
        &self.vertices
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_starts(&self) -> [ArcId; 3] {
        self.edge_starts
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    /// All arc labels in increasing order.
    pub fn arcs(&self) -> Vec<ArcId> {
        let set: std::collections::BTreeSet<ArcId> = self
            .vertices
            .iter()
            .flatten()
            .chain(self.crossings.iter().flat_map(|c| c.arcs.iter()))
            .copied()
            .collect();
        set.into_iter().collect()
    }

    pub(crate) fn max_arc(&self) -> ArcId {
        self.arcs().last().copied().unwrap_or(0)
    }

    pub fn node_degree(node: Node) -> u8 {
        match node {
            Node::Vertex(_) => 3,
            Node::Crossing(_) => 4,
        }
    }

    pub fn arc_at(&self, port: Port) -> ArcId {
        match port.node {
            Node::Vertex(v) => self.vertices[v as usize][port.slot as usize],
            Node::Crossing(c) => self.crossings[c as usize].arcs[port.slot as usize],
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..2u8)
            .map(Node::Vertex)
            .chain((0..self.crossings.len() as u32).map(Node::Crossing))
    }

    /// The two ports of every arc.
    pub fn arc_ports(&self) -> HashMap<ArcId, Vec<Port>> {
        let mut map: HashMap<ArcId, Vec<Port>> = HashMap::new();
        for node in self.nodes() {
            for slot in 0..Self::node_degree(node) {
                let port = Port { node, slot };
                map.entry(self.arc_at(port)).or_default().push(port);
            }
        }
        map
    }

    /// The port at the other end of the arc leaving through `port`.
    pub(crate) fn opposite(ports: &HashMap<ArcId, Vec<Port>>, arc: ArcId, port: Port) -> Port {
        let ends = &ports[&arc];
        if ends[0] == port {
            ends[1]
        } else {
            ends[0]
        }
    }

    /// Whether an oriented arc ends (rather than starts) at `port`.
    pub fn port_is_head(&self, port: Port) -> bool {
        match port.node {
            Node::Vertex(v) => v == 1,
            Node::Crossing(c) => {
                let sign = self.crossings[c as usize].sign;
                match port.slot {
                    0 => true,
                    2 => false,
                    1 => sign < 0,
                    _ => sign > 0,
                }
            }
        }
    }

    /// Arc multiplicities and planarity of the rotation system.
    pub fn check_structure(&self) -> Result<()> {
        let mut counts: BTreeMap<ArcId, usize> = BTreeMap::new();
        for node in self.nodes() {
            for slot in 0..Self::node_degree(node) {
                *counts.entry(self.arc_at(Port { node, slot })).or_default() += 1;
            }
        }
        if let Some((arc, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::Validation(format!(
                "arc {arc} appears {n} times; every arc must appear exactly twice"
            )));
        }
        if counts.keys().any(|&a| a == 0) {
            return Err(Error::Validation("arc labels must be positive integers".into()));
        }
        if !is_planar(self) {
            return Err(Error::Validation(
                "rotation system is not planar (Euler characteristic check failed)".into(),
            ));
        }
        Ok(())
    }

    /// Each arc must have one head and one tail, and the source arcs must start the three edges.
    pub fn check_orientation(&self) -> Result<()> {
        let ports = self.arc_ports();
        for (arc, ends) in &ports {
            let heads = ends.iter().filter(|&&p| self.port_is_head(p)).count();
            if heads != 1 {
                return Err(Error::Validation(format!(
                    "arc {arc} is not coherently oriented ({heads} heads)"
                )));
            }
        }
        if let Some(c) = self.crossings.iter().position(|c| c.sign != 1 && c.sign != -1) {
            return Err(Error::Validation(format!("crossing {c} has no sign")));
        }
        Ok(())
    }

    /// Walks each edge from the source, rotates records so the incoming
    /// under-arc comes first, and derives crossing signs.
    fn orient_by_tracing(&mut self) -> Result<()> {
        let ports = self.arc_ports();
        let n = self.crossings.len();
        let mut under_in: Vec<Option<u8>> = vec![None; n];
        let mut over_in: Vec<Option<u8>> = vec![None; n];
        for slot in 0..3u8 {
            let mut port = Port { node: Node::Vertex(0), slot };
            loop {
                let arc = self.arc_at(port);
                let arrive = Self::opposite(&ports, arc, port);
                match arrive.node {
                    Node::Vertex(0) => {
                        return Err(Error::Validation(format!(
                            "edge through arc {arc} returns to the source vertex"
                        )))
                    }
                    Node::Vertex(_) => break,
                    Node::Crossing(c) => {
                        let c = c as usize;
                        let seen = if arrive.slot.is_multiple_of(2) { &mut under_in[c] } else { &mut over_in[c] };
                        if seen.is_some() {
                            return Err(Error::Validation(format!(
                                "crossing {c} is traversed twice along the same strand"
                            )));
                        }
                        *seen = Some(arrive.slot);
                        port = Port { node: arrive.node, slot: (arrive.slot + 2) % 4 };
                    }
                }
            }
        }
        for c in 0..n {
            let (Some(u), Some(o)) = (under_in[c], over_in[c]) else {
                return Err(Error::Validation(format!(
                    "crossing {c} is not met by the θ-curve edges; input diagrams carry no extra circles"
                )));
            };
            let rec = &mut self.crossings[c];
            let o = if u == 2 {
                rec.arcs.rotate_left(2);
                (o + 2) % 4
            } else {
                o
            };
            rec.sign = if o == 3 { 1 } else { -1 };
        }
        Ok(())
    }

    /// Traverses the three edges from the source, then the circles starting
    /// from their smallest arc labels. Requires an oriented diagram.
    pub fn strands(&self) -> Result<Strands> {
        self.require_oriented()?;
        let ports = self.arc_ports();
        let mut component = HashMap::new();
        let walk = |start: Port, component: &mut HashMap<ArcId, Component>, tag: Component| {
            let mut steps = Vec::new();
            let mut port = start;
            loop {
                let arc = self.arc_at(port);
                component.insert(arc, tag);
                let arrive = Self::opposite(&ports, arc, port);
                steps.push(Step { arc, arrive });
                match arrive.node {
                    Node::Vertex(_) => break,
                    Node::Crossing(_) => {
                        let next = Port { node: arrive.node, slot: (arrive.slot + 2) % 4 };
                        if next == start {
                            break;
                        }
                        port = next;
                    }
                }
            }
            steps
        };
        let mut edges: [Vec<Step>; 3] = Default::default();
        for (i, &start_arc) in self.edge_starts.iter().enumerate() {
            let slot = self.vertices[0].iter().position(|&a| a == start_arc).unwrap() as u8;
            edges[i] = walk(Port { node: Node::Vertex(0), slot }, &mut component, Component::Edge(i as u8));
        }
        let mut circles = Vec::new();
        for arc in self.arcs() {
            if component.contains_key(&arc) {
                continue;
            }
            let tail = ports[&arc].iter().copied().find(|&p| !self.port_is_head(p)).unwrap();
            let tag = Component::Circle(circles.len() as u16);
            circles.push(walk(tail, &mut component, tag));
        }
        Ok(Strands { edges, circles, component })
    }

    pub(crate) fn require_oriented(&self) -> Result<()> {
        if self.oriented {
            Ok(())
        } else {
            Err(Error::InvalidSign(format!(
                "diagram `{}` carries no coherent orientation (it contains an incoherent smoothing)",
                self.name
            )))
        }
    }

    /// Whether the diagram is a θ-curve with no extra circle components.
    pub fn is_theta(&self) -> bool {
        self.oriented
            && self.free_loops == 0
            && self.strands().map(|s| s.circles.is_empty()).unwrap_or(false)
    }

    pub fn crossing_sign(&self, c: usize) -> Result<i8> {
        self.require_oriented()?;
        self.crossings
            .get(c)
            .map(|x| x.sign)
            .ok_or_else(|| Error::Validation(format!("no crossing {c}")))
    }

    pub fn classify_crossing(&self, c: usize) -> Result<CrossingKind> {
        let strands = self.strands()?;
        let rec = self
            .crossings
            .get(c)
            .ok_or_else(|| Error::Validation(format!("no crossing {c}")))?;
        let under = strands.component[&rec.arcs[0]];
        let over = strands.component[&rec.arcs[1]];
        Ok(if under == over {
            CrossingKind::SelfCrossing
        } else {
            CrossingKind::NonSelfCrossing
        })
    }

    /// `(s, n)`: sign sums over self-crossings and non-self-crossings.
    pub fn writhe_sums(&self) -> Result<(i32, i32)> {
        let strands = self.strands()?;
        let (mut s, mut n) = (0, 0);
        for rec in &self.crossings {
            if strands.component[&rec.arcs[0]] == strands.component[&rec.arcs[1]] {
                s += rec.sign as i32;
            } else {
                n += rec.sign as i32;
            }
        }
        Ok((s, n))
    }

    /// Swaps the roles of source and sink, reversing every arc.
    pub fn reversed(&self) -> Result<Diagram> {
        self.require_oriented()?;
        let mut d = self.clone();
        d.vertices.swap(0, 1);
        for rec in &mut d.crossings {
            // Reversal turns the under-arc at slot 2 into the incoming one;
            // the over-strand reverses too, so the sign is unchanged.
            rec.arcs.rotate_left(2);
        }
        // Edge identity follows the old sink arcs along the same edge.
        let strands = self.strands()?;
        for (i, steps) in strands.edges.iter().enumerate() {
            d.edge_starts[i] = steps.last().unwrap().arc;
        }
        d.check_orientation()?;
        Ok(d)
    }

    /// Relabels arcs in traversal order; isomorphic relabelings of the same
    /// oriented diagram produce the same key.
    pub fn canonical_key(&self) -> Vec<i64> {
        let mut relabel: HashMap<ArcId, i64> = HashMap::new();
        let mut order: Vec<u32> = Vec::new();
        let mut seen_crossing = HashSet::new();
        if let Ok(strands) = self.strands() {
            for steps in strands.edges.iter().chain(strands.circles.iter()) {
                for step in steps {
                    let next = relabel.len() as i64 + 1;
                    relabel.entry(step.arc).or_insert(next);
                    if let Node::Crossing(c) = step.arrive.node {
                        if seen_crossing.insert(c) {
                            order.push(c);
                        }
                    }
                }
            }
        } else {
            for arc in self.arcs() {
                let next = relabel.len() as i64 + 1;
                relabel.insert(arc, next);
            }
            order = (0..self.crossings.len() as u32).collect();
        }
        let mut key = vec![self.oriented as i64, self.free_loops as i64];
        for v in &self.vertices {
            let mut labels: Vec<i64> = v.iter().map(|a| relabel[a]).collect();
            let start = (0..3).min_by_key(|&i| labels[i]).unwrap();
            labels.rotate_left(start);
            key.extend(labels);
        }
        key.extend(self.edge_starts.iter().map(|a| relabel.get(a).copied().unwrap_or(0)));
        for c in order {
            let rec = &self.crossings[c as usize];
            key.extend(rec.arcs.iter().map(|a| relabel[a]));
            key.push(if self.oriented { rec.sign as i64 } else { 0 });
        }
        key
    }
}
