use num_traits::Zero;

use super::{alt_sum, CoeffFunctional, FtReport, Invariant};
use crate::diagram::{catalog, connected_sum, mirror, twist_theta, Diagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    /// `v_r(X^r # mirror(T(4n+1)) | C_2n)`, `C_2n` the first `2n` twist crossings.
    pub main: FtReport,
    /// Same sum over the last `2n` twist crossings.
    pub alternate: FtReport,
    /// `v_-r(mirror(X)^r # T(4n+1) | C_2n)`.
    pub mirrored: FtReport,
}

impl TheoremReport {
    pub fn nonzero(&self) -> bool {
        !self.main.value.is_zero() && !self.mirrored.value.is_zero()
    }

    pub fn selection_independent(&self) -> bool {
        self.main.value == self.alternate.value
    }
}

fn power_sum(base: &Diagram, r: u32, tail: &Diagram) -> Result<Diagram> {
    let mut acc: Option<Diagram> = None;
    for _ in 0..r {
        acc = Some(match acc {
            None => base.clone(),
            Some(a) => connected_sum(&a, base)?,
        });
    }
    match acc {
        None => Ok(tail.clone()),
        Some(a) => connected_sum(&a, tail),
    }
}

fn run(x: &Diagram, r: u32, n: u32, budget: usize, invariant: Invariant, degree_step: i32) -> Result<TheoremReport> {
    if n == 0 {
        return Err(Error::BadParameter("n must be positive".into()));
    }
    let k = 4 * n as i64 + 1;
    let twist = twist_theta(k)?;
    let total = r as usize * x.crossing_count() + twist.crossing_count();
    if total > budget {
        return Err(Error::BudgetExceeded { crossings: total, budget });
    }
    let main_d = power_sum(x, r, &mirror(&twist))?;
    let mirror_d = power_sum(&mirror(x), r, &twist)?;
    let offset = r as usize * x.crossing_count();
    let width = 2 * n as usize;
    let first: Vec<usize> = (offset..offset + width).collect();
    let last: Vec<usize> = (offset + twist.crossing_count() - width..offset + twist.crossing_count()).collect();
    let degree = degree_step * r as i32;
    let v = CoeffFunctional::Poly { invariant, degree };
    let v_bar = CoeffFunctional::Poly { invariant, degree: -degree };
    Ok(TheoremReport {
        main: alt_sum(&main_d, &first, &v)?,
        alternate: alt_sum(&main_d, &last, &v)?,
        mirrored: alt_sum(&mirror_d, &first, &v_bar)?,
    })
}

/// The Yamada experiment with `G = mirror(T(5)) # theta_5_1` and coefficient `A^r`.
pub fn theorem1_experiment(r: u32, n: u32, budget: usize) -> Result<TheoremReport> {
    let g = connected_sum(&mirror(&twist_theta(5)?), &catalog("theta_5_1")?)?.with_name("G");
    run(&g, r, n, budget, Invariant::Yamada, 1)
}

/// The Yokota experiment with `theta_3_1` in place of `G` and coefficient `z^(2r)`.
pub fn theorem2_experiment(r: u32, n: u32, budget: usize) -> Result<TheoremReport> {
    run(&catalog("theta_3_1")?, r, n, budget, Invariant::Yokota, 2)
}
