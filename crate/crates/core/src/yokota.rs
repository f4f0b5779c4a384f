//! Yokota's bracket for oriented θ-curve diagrams, in the variable `t`.
//!
//! The recursion walks E1, E2, E3 from the source and then every circle,
//! and resolves the first crossing met on its under-strand with the skein
//! relation `t<D+> - t^-1<D-> = (t^3 - t^-3)<D0>`. Once no such crossing is
//! left the diagram is descending: the θ-part lies above the circles, which
//! are stacked and unknotted, so its value is read off from the writhes.

use std::collections::HashMap;

use crate::diagram::{apply_nsign, simplify, switch_crossing, Component, Diagram, Move, Node, SignEntry};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YokotaValue {
    pub bracket: LaurentPoly,
    pub p: LaurentPoly,
    pub pz: LaurentPoly,
}

/// Which under-first crossing the recursion resolves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pick {
    First,
    Last,
}

/// Traversal choices; the bracket does not depend on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub edge_order: [u8; 3],
    pub pick: Pick,
}

impl Default for Traversal {
    fn default() -> Self {
        Self { edge_order: [0, 1, 2], pick: Pick::First }
    }
}

/// `t^6 + 1 + t^-6`, the value of a split unknot.
pub fn circle_value() -> LaurentPoly {
    LaurentPoly::from_terms([(6, 1), (0, 1), (-6, 1)])
}

/// `(-t^4)^k`.
fn neg_t4(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, 4 * k)
}

pub fn move_factor(mv: Move) -> LaurentPoly {
    match mv {
        Move::Kink { sign } => LaurentPoly::var_pow(8 * sign as i32),
        Move::Bigon => LaurentPoly::one(),
        Move::VertexTwist { sign } => LaurentPoly::monomial(-1, -4 * sign as i32),
        Move::SplitCircle => circle_value(),
    }
}

pub struct Bracket {
    traversal: Traversal,
    memo: HashMap<Vec<i64>, LaurentPoly>,
}

impl Bracket {
    pub fn new(traversal: Traversal) -> Self {
        Self { traversal, memo: HashMap::new() }
    }

    pub fn eval(&mut self, d: &Diagram) -> Result<LaurentPoly> {
        d.require_oriented()?;
        let key = d.canonical_key();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let (reduced, log) = simplify(d);
        let factor = log
            .into_iter()
            .fold(LaurentPoly::one(), |acc, mv| &acc * &move_factor(mv));
        let (bad, descending) = self.scan(&reduced)?;
        let core = match bad {
            None => descending,
            Some(c) => {
                let switched = self.eval(&switch_crossing(&reduced, c)?)?;
                let smoothed = self.eval(&apply_nsign(&reduced, &[c], &[SignEntry::Zero])?)?;
                if reduced.crossings()[c].sign > 0 {
                    // <D+> = t^-2 <D-> + (t^2 - t^-4) <D0>
                    &switched.shift(-2) + &(&LaurentPoly::from_terms([(2, 1), (-4, -1)]) * &smoothed)
                } else {
                    // <D-> = t^2 <D+> - (t^4 - t^-2) <D0>
                    &switched.shift(2) - &(&LaurentPoly::from_terms([(4, 1), (-2, -1)]) * &smoothed)
                }
            }
        };
        let value = &factor * &core;
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    /// Finds the crossing to resolve, or the value of the descending diagram.
    fn scan(&self, d: &Diagram) -> Result<(Option<usize>, LaurentPoly)> {
        let strands = d.strands()?;
        let mut first_under: Vec<Option<bool>> = vec![None; d.crossing_count()];
        let mut bad = Vec::new();
        let walks = self
            .traversal
            .edge_order
            .iter()
            .map(|&e| &strands.edges[e as usize])
            .chain(strands.circles.iter());
        for steps in walks {
            for step in steps {
                if let Node::Crossing(c) = step.arrive.node {
                    let c = c as usize;
                    if first_under[c].is_none() {
                        let under = step.arrive.slot % 2 == 0;
                        first_under[c] = Some(under);
                        if under {
                            bad.push(c);
                        }
                    }
                }
            }
        }
        let pick = match self.traversal.pick {
            Pick::First => bad.first(),
            Pick::Last => bad.last(),
        };
        if let Some(&c) = pick {
            return Ok((Some(c), LaurentPoly::zero()));
        }
        let (mut s, mut n) = (0, 0);
        let mut circle_writhe = vec![0i32; strands.circles.len()];
        for rec in d.crossings() {
            let a = strands.component[&rec.arcs[0]];
            let b = strands.component[&rec.arcs[1]];
            match (a, b) {
                (Component::Edge(x), Component::Edge(y)) if x == y => s += rec.sign as i32,
                (Component::Edge(_), Component::Edge(_)) => n += rec.sign as i32,
                (Component::Circle(x), Component::Circle(y)) if x == y => {
                    circle_writhe[x as usize] += rec.sign as i32
                }
                _ => {}
            }
        }
        let mut value = neg_t4(2 * s - n);
        for w in circle_writhe {
            value = &value * &circle_value().shift(8 * w);
        }
        value = &value * &circle_value().pow(d.free_loops() as u32);
        Ok((None, value))
    }
}

pub fn yokota_bracket(d: &Diagram) -> Result<LaurentPoly> {
    Bracket::new(Traversal::default()).eval(d)
}

/// `P = (-t^4)^(n - 2s) <D>` and `P_z`, obtained from `P` by `t^3 -> z`.
pub fn yokota_normalized(d: &Diagram) -> Result<YokotaValue> {
    if !d.is_theta() {
        return Err(Error::Validation(format!(
            "`{}` is not a θ-curve diagram without extra circles",
            d.name()
        )));
    }
    let bracket = yokota_bracket(d)?;
    let (s, n) = d.writhe_sums()?;
    let p = &bracket * &neg_t4(n - 2 * s);
    let mut pz = LaurentPoly::zero();
    for (k, c) in p.terms() {
        if k % 3 != 0 {
            return Err(Error::NonCubicExponent(k));
        }
        pz.add_term(k / 3, c.clone());
    }
    Ok(YokotaValue { bracket, p, pz })
}
