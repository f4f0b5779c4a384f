use super::ops::STRAIGHT;
use super::{faces, Diagram, Node};

/// A removal performed by [`simplify`]. Signs refer to the removed crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// A curl on a single strand.
    Kink { sign: i8 },
    /// Two crossings where one strand passes over the other twice.
    Bigon,
    /// A crossing between two strands leaving the same vertex.
    VertexTwist { sign: i8 },
    /// A crossing-free circle split off the diagram.
    SplitCircle,
}

/// Sign of a crossing read from the slot pairing `pairs` when that pairing is
/// the one whose smoothing removes the twist: `+1` for the A-pairing.
fn pairing_sign(pairs: [(usize, usize); 2]) -> i8 {
    let set = |p: [(usize, usize); 2]| {
        let mut v: Vec<(usize, usize)> = p.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        v.sort_unstable();
        v
    };
    if set(pairs) == set(super::ops::A_PAIRING) {
        1
    } else {
        -1
    }
}

fn find_kink(d: &Diagram) -> Option<(usize, Move, [(usize, usize); 2])> {
    for (c, rec) in d.crossings.iter().enumerate() {
        for i in 0..4 {
            if rec.arcs[i] == rec.arcs[(i + 1) % 4] {
                let loop_pairs = [(i, (i + 1) % 4), ((i + 2) % 4, (i + 3) % 4)];
                let keep = [((i + 1) % 4, (i + 2) % 4), ((i + 3) % 4, i)];
                return Some((c, Move::Kink { sign: pairing_sign(loop_pairs) }, keep));
            }
        }
    }
    None
}

type Plan = (Move, Vec<(usize, [(usize, usize); 2])>);

fn find_two_gon(d: &Diagram) -> Option<Plan> {
    let mut twist = None;
    for face in faces(d) {
        if face.len() != 2 {
            continue;
        }
        let (p, q) = (face.darts[0], face.darts[1]);
        if p.node == q.node {
            continue;
        }
        let (n1, s1) = (p.node, p.slot as usize);
        let (n2, t) = (q.node, (q.slot as usize + 3) % 4);
        match (n1, n2) {
            (Node::Crossing(a), Node::Crossing(b)) => {
                // The arc leaving p sits at slot s1 of `a` and slot t of `b`.
                if s1 % 2 == t % 2 {
                    return Some((Move::Bigon, vec![(a as usize, STRAIGHT), (b as usize, STRAIGHT)]));
                }
            }
            (Node::Vertex(_), Node::Crossing(c)) | (Node::Crossing(c), Node::Vertex(_)) if twist.is_none() => {
                // Lower of the two consecutive slots the face uses at the crossing.
                let i = if let Node::Crossing(_) = n1 { (s1 + 3) % 4 } else { t };
                let straight = [(i, (i + 3) % 4), ((i + 1) % 4, (i + 2) % 4)];
                twist = Some((
                    Move::VertexTwist { sign: pairing_sign(straight) },
                    vec![(c as usize, straight)],
                ));
            }
            _ => {}
        }
    }
    twist
}

/// Greedily removes kinks, bigons and vertex twists, then splits off free
/// circles. Returns the reduced diagram and the moves in the order applied.
pub fn simplify(d: &Diagram) -> (Diagram, Vec<Move>) {
    let mut cur = d.clone();
    let mut log = Vec::new();
    loop {
        if let Some((c, mv, keep)) = find_kink(&cur) {
            cur = cur.resolve(&[(c, keep)]);
            log.push(mv);
            continue;
        }
        if let Some((mv, mut plans)) = find_two_gon(&cur) {
            plans.sort_unstable();
            cur = cur.resolve(&plans);
            log.push(mv);
            continue;
        }
        break;
    }
    for _ in 0..cur.free_loops {
        log.push(Move::SplitCircle);
    }
    cur.free_loops = 0;
    (cur, log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::kinked;

    #[test]
    fn kink_sign_matches_orientation() {
        for positive in [true, false] {
            let d = kinked(positive);
            let (s, log) = simplify(&d);
            assert_eq!(s.crossing_count(), 0);
            assert_eq!(log, vec![Move::Kink { sign: if positive { 1 } else { -1 } }]);
            assert!(s.is_theta());
        }
    }
}
