use std::collections::HashSet;

use super::{ArcId, Diagram, SignEntry};
use crate::error::{Error, Result};

/// Slot pairings of the two smoothings of a crossing record.
pub(crate) const A_PAIRING: [(usize, usize); 2] = [(0, 1), (2, 3)];
pub(crate) const B_PAIRING: [(usize, usize); 2] = [(0, 3), (1, 2)];
pub(crate) const STRAIGHT: [(usize, usize); 2] = [(0, 2), (1, 3)];

impl Diagram {
    pub(crate) fn rename(&mut self, from: ArcId, to: ArcId) {
        let fix = |a: &mut ArcId| {
            if *a == from {
                *a = to;
            }
        };
        self.vertices.iter_mut().flatten().for_each(fix);
        self.crossings.iter_mut().flat_map(|c| c.arcs.iter_mut()).for_each(fix);
        self.edge_starts.iter_mut().for_each(fix);
    }

    /// Replaces crossings by the given slot pairings, joining the paired arcs.
    /// Arcs that close up on themselves become free loops.
    pub(crate) fn resolve(&self, plans: &[(usize, [(usize, usize); 2])]) -> Diagram {
        let mut out = self.clone();
        let mut removed = vec![false; out.crossings.len()];
        for &(c, pairs) in plans {
            removed[c] = true;
            for (s1, s2) in pairs {
                let x = out.crossings[c].arcs[s1];
                let y = out.crossings[c].arcs[s2];
                if x == y {
                    out.free_loops += 1;
                } else {
                    out.rename(y, x);
                }
            }
        }
        let mut idx = 0;
        out.crossings.retain(|_| {
            idx += 1;
            !removed[idx - 1]
        });
        out
    }

    /// Pairing of the orientation-coherent smoothing at crossing `c`.
    pub(crate) fn coherent_pairing(&self, c: usize) -> [(usize, usize); 2] {
        if self.crossings[c].sign > 0 {
            A_PAIRING
        } else {
            B_PAIRING
        }
    }

    pub(crate) fn incoherent_pairing(&self, c: usize) -> [(usize, usize); 2] {
        if self.crossings[c].sign > 0 {
            B_PAIRING
        } else {
            A_PAIRING
        }
    }
}

/// Exchanges over and under at crossing `c`.
pub fn switch_crossing(d: &Diagram, c: usize) -> Result<Diagram> {
    if c >= d.crossings.len() {
        return Err(Error::Validation(format!("no crossing {c}")));
    }
    let mut out = d.clone();
    flip(&mut out, c);
    Ok(out)
}

fn flip(d: &mut Diagram, c: usize) {
    let rec = &mut d.crossings[c];
    // Keep the incoming under-arc in slot 0 when the diagram is oriented.
    if rec.sign > 0 || !d.oriented {
        rec.arcs.rotate_right(1);
    } else {
        rec.arcs.rotate_left(1);
    }
    rec.sign = -rec.sign;
}

/// Sets crossings `crossings[k]` according to `eps[k]`: `+`/`-` force the
/// sign, `0` takes the coherent smoothing and `inf` the incoherent one.
pub fn apply_nsign(d: &Diagram, crossings: &[usize], eps: &[SignEntry]) -> Result<Diagram> {
    if crossings.len() != eps.len() {
        return Err(Error::InvalidSign(format!(
            "{} crossings but {} sign entries",
            crossings.len(),
            eps.len()
        )));
    }
    let mut distinct = HashSet::new();
    for &c in crossings {
        if c >= d.crossings.len() {
            return Err(Error::InvalidSign(format!("no crossing {c} in `{}`", d.name)));
        }
        if !distinct.insert(c) {
            return Err(Error::InvalidSign(format!("crossing {c} listed twice")));
        }
    }
    if !d.oriented && eps.iter().any(|&e| e != SignEntry::Inf) {
        d.require_oriented()?;
    }
    let mut out = d.clone();
    let mut plans = Vec::new();
    for (&c, &e) in crossings.iter().zip(eps) {
        match e {
            SignEntry::Pos if out.crossings[c].sign < 0 => flip(&mut out, c),
            SignEntry::Neg if out.crossings[c].sign > 0 => flip(&mut out, c),
            SignEntry::Zero => plans.push((c, out.coherent_pairing(c))),
            SignEntry::Inf => plans.push((c, out.incoherent_pairing(c))),
            _ => {}
        }
    }
    plans.sort_unstable();
    let incoherent = eps.contains(&SignEntry::Inf);
    let mut out = out.resolve(&plans);
    out.oriented = out.oriented && !incoherent;
    Ok(out)
}

/// Switches every crossing.
pub fn mirror(d: &Diagram) -> Diagram {
    let mut out = d.clone();
    for c in 0..out.crossings.len() {
        flip(&mut out, c);
    }
    out.name = format!("mirror({})", d.name);
    out
}

/// Vertex connected sum: the sink of `a` is glued to the source of `b`,
/// E1 meeting E1 and the other two strands following the rotation.
pub fn connected_sum(a: &Diagram, b: &Diagram) -> Result<Diagram> {
    for d in [a, b] {
        if !d.is_theta() {
            return Err(Error::Validation(format!(
                "connected sum needs oriented θ-curves without extra circles; `{}` is not one",
                d.name
            )));
        }
    }
    let offset = a.max_arc();
    let mut b = b.clone();
    for v in b.vertices.iter_mut() {
        v.iter_mut().for_each(|x| *x += offset);
    }
    for c in b.crossings.iter_mut() {
        c.arcs.iter_mut().for_each(|x| *x += offset);
    }
    b.edge_starts.iter_mut().for_each(|x| *x += offset);

    let p = a.vertices[1];
    let q = b.vertices[0];
    let a_e1 = a.strands()?.edges[0].last().unwrap().arc;
    let i = p.iter().position(|&x| x == a_e1).unwrap();
    let j = q.iter().position(|&x| x == b.edge_starts[0]).unwrap();
    for k in 0..3 {
        b.rename(q[(j + 3 - k) % 3], p[(i + k) % 3]);
    }
    let mut crossings = a.crossings.clone();
    crossings.extend(b.crossings.iter().copied());
    let out = Diagram {
        name: format!("{}#{}", a.name, b.name),
        vertices: [a.vertices[0], b.vertices[1]],
        crossings,
        edge_starts: a.edge_starts,
        free_loops: 0,
        oriented: true,
    };
    out.check_structure()?;
    out.check_orientation()?;
    Ok(out)
}
