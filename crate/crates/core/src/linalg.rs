//! Exact rank, elementary divisors and linear solving for spans of
//! [`LinComb`]s. No floating point: ranks over ℚ use fraction-free integer
//! elimination, ranks over ℤ/p use residue arithmetic.

#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeffs::{LinComb, Ring, Scalar};
use crate::error::{Error, Result};

type IntRow = Vec<(usize, BigInt)>;
type ModRow = Vec<(usize, u64)>;

fn column_index<L: Ord + Clone>(rows: &[LinComb<L>]) -> BTreeMap<L, usize> {
    let labels: BTreeSet<L> = rows.iter().flat_map(|r| r.labels().cloned()).collect();
    labels.into_iter().enumerate().map(|(k, l)| (l, k)).collect()
}

/// Integer row with denominators cleared.
fn to_int_row<L: Ord + Clone>(r: &LinComb<L>, cols: &BTreeMap<L, usize>) -> IntRow {
    let entries: Vec<(usize, BigRational)> = r
        .iter()
        .map(|(l, c)| {
            let q = match c {
                Scalar::Int(k) => BigRational::from_integer(k.clone()),
                Scalar::Rat(q) => q.clone(),
                Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
            };
            (cols[l], q)
        })
        .collect();
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut row: IntRow = entries
        .into_iter()
        .map(|(k, q)| (k, (q * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

fn content_normalize(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·x − b·y` on sorted sparse rows.
fn int_axpy(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (k, v) = if take_x {
            i += 1;
            (x[i - 1].0, a * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        // a zero multiplier from the gcd step must not leave explicit zeros
        if !v.is_zero() {
            out.push((k, v));
        }
    }
    out
}

/// Incremental echelon basis over ℚ with integer rows.
#[derive(Default)]
struct IntEchelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl IntEchelon {
    fn insert(&mut self, mut row: IntRow) -> bool {
        content_normalize(&mut row);
        loop {
            let Some((lead, lv)) = row.first().cloned() else { return false };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return true;
            };
            let pv = &p[0].1;
            let g = pv.gcd(&lv);
            row = int_axpy(&(pv / &g), &row, &(&lv / &g), p);
            content_normalize(&mut row);
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    e.x.rem_euclid(p as i128) as u64
}

#[derive(Default)]
struct ModEchelon {
    p: u64,
    pivots: BTreeMap<usize, ModRow>,
}

impl ModEchelon {
    fn insert(&mut self, mut row: ModRow) -> bool {
        let p = self.p;
        loop {
            let Some(&(lead, lv)) = row.first() else { return false };
            let Some(piv) = self.pivots.get(&lead) else {
                let inv = mod_inv(lv, p);
                for e in row.iter_mut() {
                    e.1 = (e.1 as u128 * inv as u128 % p as u128) as u64;
                }
                self.pivots.insert(lead, row);
                return true;
            };
            // pivot rows are monic
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                let take_r = j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0);
                let take_p = i >= row.len() || (j < piv.len() && piv[j].0 < row[i].0);
                if take_r {
                    out.push(row[i]);
                    i += 1;
                } else if take_p {
                    out.push((piv[j].0, (p - (lv as u128 * piv[j].1 as u128 % p as u128) as u64) % p));
                    j += 1;
                } else {
                    let sub = (lv as u128 * piv[j].1 as u128 % p as u128) as u64;
                    let v = (row[i].1 + p - sub) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
    }
}

fn to_mod_row<L: Ord + Clone>(r: &LinComb<L>, cols: &BTreeMap<L, usize>, p: u64) -> ModRow {
    let mut row: ModRow = r
        .iter()
        .filter_map(|(l, c)| {
            let v = match c {
                Scalar::Mod { value, .. } => *value,
                Scalar::Int(k) => k.mod_floor(&BigInt::from(p)).to_u64().expect("residue"),
                Scalar::Rat(_) => unreachable!("rational row in characteristic p"),
            };
            (v != 0).then(|| (cols[l], v))
        })
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

fn check_rows<L: Ord + Clone>(rows: &[LinComb<L>], ring: Ring) -> Result<()> {
    if rows.iter().any(|r| r.ring() != ring && r.ring() != Ring::Integers) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Rank of the span of `rows` over `ring`. Rows may be given over `ring` or
/// over ℤ. Over ℤ itself the rank is the ℚ-rank.
pub fn rank<L: Ord + Clone>(rows: &[LinComb<L>], ring: Ring) -> Result<usize> {
    check_rows(rows, ring)?;
    let cols = column_index(rows);
    match ring {
        Ring::Integers | Ring::Rationals => {
            let mut ech = IntEchelon::default();
            Ok(rows.iter().filter(|r| ech.insert(to_int_row(r, &cols))).count())
        }
        Ring::IntegersMod(p) if ring.is_field() => {
            let mut ech = ModEchelon { p, pivots: BTreeMap::new() };
            Ok(rows.iter().filter(|r| ech.insert(to_mod_row(r, &cols, p))).count())
        }
        _ => Err(Error::NotAField(ring.to_string())),
    }
}

/// Nonzero elementary divisors (invariant factors) of the integer matrix
/// whose rows are `rows`, in divisibility order.
pub fn elementary_divisors<L: Ord + Clone>(rows: &[LinComb<L>]) -> Result<Vec<BigInt>> {
    if rows.iter().any(|r| r.ring() != Ring::Integers) {
        return Err(Error::NotIntegral);
    }
    let cols = column_index(rows);
    let ncols = cols.len();
    // unimodular reduction to a basis of the row lattice, then Smith form
    let mut basis: BTreeMap<usize, IntRow> = BTreeMap::new();
    for r in rows {
        let mut row = to_int_row(r, &cols);
        while let Some((lead, b)) = row.first().cloned() {
            let Some(p) = basis.remove(&lead) else {
                basis.insert(lead, row);
                break;
            };
            let a = p[0].1.clone();
            let e = a.extended_gcd(&b);
            let pivot = int_axpy(&e.x, &p, &-e.y, &row);
            row = int_axpy(&(&a / &e.gcd), &row, &(&b / &e.gcd), &p);
            basis.insert(lead, pivot);
        }
    }
    let dense: Vec<Vec<BigInt>> = basis
        .into_values()
        .map(|row| {
            let mut d = vec![BigInt::zero(); ncols];
            for (k, v) in row {
                d[k] = v;
            }
            d
        })
        .collect();
    Ok(smith_diagonal(dense, ncols))
}

fn smith_diagonal(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let mut out = Vec::new();
    let mut k = 0;
    while k < nrows.min(ncols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, v) in row.iter().enumerate().skip(k) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let mut dirty = false;
        for i in k + 1..nrows {
            if !a[k][k].is_zero() && !a[i][k].is_zero() {
                let q = a[i][k].div_floor(&a[k][k]);
                for j in k..ncols {
                    let t = &q * &a[k][j];
                    a[i][j] -= t;
                }
                dirty |= !a[i][k].is_zero();
            }
        }
        for j in k + 1..ncols {
            if !a[k][j].is_zero() {
                let q = a[k][j].div_floor(&a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] -= t;
                }
                dirty |= !a[k][j].is_zero();
            }
        }
        if dirty {
            continue;
        }
        // pivot must divide the rest of the block
        let piv = a[k][k].clone();
        let offender = (k + 1..nrows).find(|&i| (k + 1..ncols).any(|j| !(&a[i][j] % &piv).is_zero()));
        if let Some(i) = offender {
            for j in k..ncols {
                let v = a[i][j].clone();
                a[k][j] += v;
            }
            continue;
        }
        out.push(piv.abs());
        k += 1;
    }
    out
}

/// Coefficients `c` with `Σ c_k · basis[k] = target` over ℚ, if any.
/// Inputs may be over ℤ or ℚ; the result is over ℚ.
pub fn solve_rational<L: Ord + Clone>(basis: &[LinComb<L>], target: &LinComb<L>) -> Option<Vec<Scalar>> {
    let mut all = basis.to_vec();
    all.push(target.clone());
    let cols = column_index(&all);
    let to_q = |c: &Scalar| match c {
        Scalar::Int(k) => BigRational::from_integer(k.clone()),
        Scalar::Rat(q) => q.clone(),
        Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
    };
    // augmented system: columns are basis vectors, rows are labels
    let n = basis.len();
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; cols.len()];
    for (k, b) in basis.iter().enumerate() {
        for (l, c) in b.iter() {
            m[cols[l]][k] = to_q(c);
        }
    }
    for (l, c) in target.iter() {
        m[cols[l]][n] = to_q(c);
    }
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::Rat(BigRational::zero()); n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = Scalar::Rat(m[i][n].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(ring: Ring, data: &[&[i64]]) -> Vec<LinComb<usize>> {
        data.iter()
            .map(|r| LinComb::from_terms(ring, r.iter().enumerate().map(|(k, &v)| (k, ring.from_int(v)))))
            .collect()
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let z = Ring::Integers;
        let m = rows(z, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, -1]]);
        assert_eq!(rank(&m, Ring::Rationals).unwrap(), 2);
        let m2 = rows(z, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(rank(&m2, Ring::Rationals).unwrap(), 3);
        assert_eq!(rank(&m2, Ring::IntegersMod(2)).unwrap(), 2);
        assert_eq!(rank(&rows(z, &[&[3, 6]]), Ring::IntegersMod(3)).unwrap(), 0);
        assert!(matches!(rank(&m2, Ring::IntegersMod(4)), Err(Error::NotAField(_))));
    }

    #[test]
    fn rank_matches_dense_elimination_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (r, c) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let data: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-2..3)).collect()).collect();
            let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
            let m = rows(Ring::Integers, &refs);
            // dense rational elimination as the reference
            let mut d: Vec<Vec<BigRational>> =
                data.iter().map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
            let mut rk = 0;
            for col in 0..c {
                if let Some(p) = (rk..r).find(|&i| !d[i][col].is_zero()) {
                    d.swap(rk, p);
                    for i in rk + 1..r {
                        let f = &d[i][col] / &d[rk][col];
                        for j in 0..c {
                            let t = &f * &d[rk][j];
                            d[i][j] -= t;
                        }
                    }
                    rk += 1;
                }
            }
            assert_eq!(rank(&m, Ring::Rationals).unwrap(), rk);
            let divisors = elementary_divisors(&m).unwrap();
            assert_eq!(divisors.len(), rk);
            for w in divisors.windows(2) {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn smith_form_examples() {
        let z = Ring::Integers;
        let d = elementary_divisors(&rows(z, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).unwrap();
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = elementary_divisors(&rows(z, &[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(2)]);
        assert!(elementary_divisors(&rows(Ring::Rationals, &[&[1]])).is_err());
    }

    #[test]
    fn smith_form_survives_zero_gcd_multipliers() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (r, c) = (rng.gen_range(2..9), rng.gen_range(2..9));
            let data: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-4..5) * rng.gen_range(0..2)).collect()).collect();
            let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
            let m = rows(Ring::Integers, &refs);
            assert_eq!(elementary_divisors(&m).unwrap().len(), rank(&m, Ring::Rationals).unwrap());
        }
    }

    #[test]
    fn rational_solve() {
        let z = Ring::Integers;
        let b = rows(z, &[&[1, 1, 0], &[0, 2, 1]]);
        let target = rows(z, &[&[2, 0, -1]]).pop().unwrap();
        let x = solve_rational(&b, &target).unwrap();
        assert_eq!(x, vec![Ring::Rationals.from_int(2), Ring::Rationals.from_int(-1)]);
        let off = rows(z, &[&[0, 0, 1]]).pop().unwrap();
        assert!(solve_rational(&b[..1], &off).is_none());
    }
}
