use std::collections::HashMap;

use crate::laurent::LaurentPoly;

/// Abstract multigraph; loops are `(v, v)` and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(
            edges.iter().all(|&(u, v)| u < vertices && v < vertices),
            "edge endpoint out of range"
        );
        Self { vertices, edges }
    }

    fn components(&self) -> Vec<Multigraph> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut local = vec![0; self.vertices];
        let mut out: Vec<Multigraph> = Vec::new();
        for v in 0..self.vertices {
            let r = find(&mut parent, v);
            let c = *index.entry(r).or_insert_with(|| {
                out.push(Multigraph { vertices: 0, edges: vec![] });
                out.len() - 1
            });
            local[v] = out[c].vertices;
            out[c].vertices += 1;
        }
        for &(u, v) in &self.edges {
            let c = index[&find(&mut parent, u)];
            out[c].edges.push((local[u], local[v]));
        }
        out
    }

    fn multiplicities(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.vertices]; self.vertices];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }
}

fn refine(m: &[Vec<u32>], mut colors: Vec<u64>) -> Vec<u64> {
    let n = m.len();
    loop {
        let before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let sigs: Vec<(u64, Vec<(u64, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u64, u32)> =
                    (0..n).filter(|&u| m[v][u] > 0).map(|u| (colors[u], m[v][u])).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colors = sigs.iter().map(|s| uniq.binary_search(s).unwrap() as u64).collect();
        if uniq.len() == before {
            return colors;
        }
    }
}

fn search(m: &[Vec<u32>], colors: Vec<u64>, best: &mut Option<Vec<u32>>) {
    let n = m.len();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    match (0..n).find(|&c| size[c] > 1) {
        None => {
            let mut order = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c as usize] = v;
            }
            let mut code = Vec::with_capacity(n * (n + 1) / 2);
            for i in 0..n {
                for j in i..n {
                    code.push(m[order[i]][order[j]]);
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell as u64) {
                let split = colors
                    .iter()
                    .enumerate()
                    .map(|(w, &c)| 2 * c + (w != v) as u64)
                    .collect();
                search(m, refine(m, split), best);
            }
        }
    }
}

/// Canonical code of a multigraph: isomorphic graphs, and only they, get equal codes.
pub fn canonical_code(g: &Multigraph) -> Vec<u32> {
    let m = g.multiplicities();
    let mut best = None;
    search(&m, refine(&m, vec![0; g.vertices]), &mut best);
    let mut code = vec![g.vertices as u32];
    code.extend(best.unwrap_or_default());
    code
}

/// Memo table for [`h_poly`], keyed by canonical code of connected loopless graphs.
#[derive(Default)]
pub struct HCache {
    memo: HashMap<Vec<u32>, LaurentPoly>,
}

impl HCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn h(&mut self, g: &Multigraph) -> LaurentPoly {
        let loops = g.edges.iter().filter(|&&(u, v)| u == v).count();
        let stripped = Multigraph {
            vertices: g.vertices,
            edges: g.edges.iter().copied().filter(|&(u, v)| u != v).collect(),
        };
        let mut value = (-LaurentPoly::sigma()).pow(loops as u32);
        for comp in stripped.components() {
            value = &value * &self.connected(&comp);
            if value.is_zero() {
                break;
            }
        }
        value
    }

    fn connected(&mut self, g: &Multigraph) -> LaurentPoly {
        if g.edges.is_empty() {
            return LaurentPoly::constant(-1);
        }
        let key = canonical_code(g);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (u, v) = g.edges[0];
        let deleted = Multigraph {
            vertices: g.vertices,
            edges: g.edges[1..].to_vec(),
        };
        // Contract v into u, then close the index gap left by v.
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let contracted = Multigraph {
            vertices: g.vertices - 1,
            edges: g.edges[1..].iter().map(|&(a, b)| (relabel(a), relabel(b))).collect(),
        };
        let value = &self.h(&deleted) + &self.h(&contracted);
        self.memo.insert(key, value.clone());
        value
    }
}

/// Graph polynomial with `h(empty) = 1`, `h(point) = -1`, `h(G + loop) = -sigma h(G)`,
/// multiplicative over disjoint unions and `h(G) = h(G - e) + h(G / e)` for non-loop `e`.
pub fn h_poly(g: &Multigraph) -> LaurentPoly {
    HCache::new().h(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(h_poly(&Multigraph::new(0, vec![])), LaurentPoly::one());
        assert_eq!(h_poly(&Multigraph::new(1, vec![])), LaurentPoly::constant(-1));
        assert_eq!(h_poly(&Multigraph::new(1, vec![(0, 0)])), LaurentPoly::sigma());
        let theta = Multigraph::new(2, vec![(0, 1), (0, 1), (1, 0)]);
        assert_eq!(h_poly(&theta), LaurentPoly::theta_value());
        let handcuff = Multigraph::new(2, vec![(0, 0), (0, 1), (1, 1)]);
        assert!(h_poly(&handcuff).is_zero());
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let a = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)]);
        let b = Multigraph::new(4, vec![(3, 2), (2, 1), (1, 0), (0, 3), (1, 3), (3, 1)]);
        let c = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&c));
    }
}
