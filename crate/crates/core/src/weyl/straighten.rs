use std::collections::BTreeMap;

use serde::Serialize;

use crate::coeffs::{Ring, Scalar};
use crate::error::{Error, Result};
use crate::powers::{expand, SymLowerElement};
use crate::tableaux::{count_row_semistandard, OrderVerdict, Tableau};

use super::relations::{dual_snake, SnakeLabel};

/// `input = Σ coords·rsym(s) − Σ γ_k·snake_k`, with `s` semistandard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StraighteningCertificate {
    pub input: SymLowerElement,
    pub coords: SymLowerElement,
    pub gamma: Vec<(SnakeLabel, Scalar)>,
}

impl StraighteningCertificate {
    /// Re-checks the identity as tensors, and that `coords` is supported on
    /// semistandard labels.
    pub fn verify(&self) -> Result<bool> {
        let ring = self.input.ring();
        let mut rhs = expand(&self.coords);
        for (label, c) in &self.gamma {
            let snake = dual_snake(&label.tableau, label.i, label.j, label.j2)?.element.change_ring(ring)?;
            rhs.add_scaled(&expand(&snake), &-c)?;
        }
        Ok(rhs == expand(&self.input) && self.coords.labels().all(Tableau::is_semistandard))
    }
}

fn row_max<'a>(labels: impl Iterator<Item = &'a Tableau>) -> Option<&'a Tableau> {
    labels.fold(None, |best, t| match best {
        Some(b) if t.compare_rows(b).ok() != Some(OrderVerdict::Greater) => Some(b),
        _ => Some(t),
    })
}

/// The snake used to rewrite the row-semistandard, non-semistandard `t`:
/// first box `(i, j0)` in reading order with `t(i+1, j0) ≤ t(i, j0)`, then
/// `j` and `j'` the ends of the runs through column `j0` in rows `i`, `i+1`.
pub fn pivot_snake(t: &Tableau) -> Option<(usize, usize, usize)> {
    let shape = t.shape();
    for i in 1..shape.num_rows() {
        for j0 in 1..=shape.part(i + 1) {
            let (upper, lower) = (t.get(i, j0), t.get(i + 1, j0));
            if lower <= upper {
                let mut j = j0;
                while j > 1 && t.get(i, j - 1) == upper {
                    j -= 1;
                }
                let mut j2 = j0;
                while j2 < shape.part(i + 1) && t.get(i + 1, j2 + 1) == lower {
                    j2 += 1;
                }
                return Some((i, j, j2));
            }
        }
    }
    None
}

/// Rewrites `x` modulo dual snake relations into the semistandard basis.
/// Each step removes the `<_r`-largest offending label with one snake whose
/// coefficient on that label is 1.
pub fn straighten(x: &SymLowerElement) -> Result<StraighteningCertificate> {
    let ring: Ring = x.ring();
    let mut work = x.clone();
    let mut gamma: BTreeMap<SnakeLabel, Scalar> = BTreeMap::new();
    let m = x.labels().map(Tableau::max_entry).max().unwrap_or(0);
    let cap = x.labels().next().map(|t| count_row_semistandard(t.shape(), m).saturating_pow(2)).unwrap_or(0);
    let mut steps: u128 = 0;
    while let Some(t) = row_max(work.labels().filter(|t| !t.is_semistandard())).cloned() {
        steps += 1;
        if steps > cap {
            return Err(Error::StepCap(cap as usize));
        }
        let c = work.coeff(&t);
        let (i, j, j2) = pivot_snake(&t).expect("row semistandard and not semistandard");
        let rel = dual_snake(&t, i, j, j2)?;
        let snake = rel.element.change_ring(ring)?;
        debug_assert!(snake.coeff(&t).is_one(), "leading coefficient of {t} in its snake");
        work.add_scaled(&snake, &-&c)?;
        let label = rel.snake.expect("snake label");
        let g = gamma.remove(&label).unwrap_or_else(|| ring.zero()) - c;
        if !g.is_zero() {
            gamma.insert(label, g);
        }
    }
    Ok(StraighteningCertificate { input: x.clone(), coords: work, gamma: gamma.into_iter().collect() })
}
