//! Polytabloids, Garnir relations and the exact sequence
//! `0 → GR^λ → Λ^{λ'} → ∇^λ → 0`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::coeffs::{LinComb, Ring};
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::{act, check_col_pair, next_permutation, permutation_sign, shuffle_representatives, Cell, CellSet};
use crate::powers::{ColumnTabloidElement, RowTabloidElement};
use crate::report::{Check, InstanceReport};
use crate::tableaux::{enumerate, Partition, Tableau, TableauClass};

/// `G_{(t,A,B)}` with its label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurRelation {
    pub tableau: Tableau,
    pub a: CellSet,
    pub b: CellSet,
    pub element: ColumnTabloidElement,
}

/// Every signed permutation of `0..n`.
fn signed_permutations(n: usize) -> Vec<(i64, Vec<usize>)> {
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    loop {
        let images: Vec<usize> = order.iter().map(|&k| k as usize).collect();
        out.push((permutation_sign(&images), images));
        if !next_permutation(&mut order) {
            return out;
        }
    }
}

/// `e(t) = Σ_{σ ∈ CPP(λ)} sign(σ) ⌊tσ⌋` over ℤ.
pub fn polytabloid(t: &Tableau) -> RowTabloidElement {
    let ring = Ring::Integers;
    let mut out = RowTabloidElement::zero(ring);
    if t.has_repeated_column_entry() {
        return out;
    }
    let shape = t.shape();
    let mut fillings: Vec<(i64, Tableau)> = vec![(1, t.clone())];
    for j in 1..=shape.num_cols() {
        let cells: Vec<usize> = (1..=shape.col_len(j)).map(|i| shape.index_of(i, j)).collect();
        let perms = signed_permutations(cells.len());
        fillings = fillings
            .iter()
            .flat_map(|(s, u)| {
                let cells = &cells;
                perms.iter().map(move |(sign, p)| {
                    let mut v = u.clone();
                    for (k, &pk) in p.iter().enumerate() {
                        v.entries_mut()[cells[pk]] = u.entries()[cells[k]];
                    }
                    (s * sign, v)
                })
            })
            .collect();
    }
    for (sign, u) in fillings {
        out.add_tableau(&u, ring.from_int(sign));
    }
    out
}

/// The polytabloid map `e : Λ^{λ'} → Sym^λ`, `|t| ↦ e(t)`.
pub fn polytabloid_map(x: &ColumnTabloidElement) -> RowTabloidElement {
    x.map(polytabloid)
}

/// `Σ_τ sign(τ)|tτ|` over coset representatives of `S_A × S_B` in
/// `S_{A⊔B}`, for `A` in column `j`, `B` in a later column, `|A|+|B| > λ'_j`.
pub fn garnir(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<SchurRelation> {
    let shape = t.shape();
    let (j, _) = check_col_pair(shape, a, b)?
        .ok_or_else(|| Error::InvalidBoxSet("A and B must both be nonempty".into()))?;
    if a.len() + b.len() <= shape.col_len(j) {
        return Err(Error::InvalidBoxSet(format!(
            "|A| + |B| = {} must exceed the length {} of column {j}",
            a.len() + b.len(),
            shape.col_len(j)
        )));
    }
    let ring = Ring::Integers;
    let mut element = ColumnTabloidElement::zero(ring);
    for tau in shuffle_representatives(shape, a, b)? {
        element.add_tableau(&act(t, &tau)?, ring.from_int(tau.sign()));
    }
    Ok(SchurRelation { tableau: t.clone(), a: a.clone(), b: b.clone(), element })
}

fn subsets(cells: &[Cell]) -> impl Iterator<Item = CellSet> + '_ {
    (1u32..1 << cells.len()).map(move |mask| CellSet::new(cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, c)| *c)))
}

/// Every valid `(A, B)` for `garnir` on `shape`.
pub fn garnir_labels(shape: &Partition) -> Vec<(CellSet, CellSet)> {
    let column = |j: usize| -> Vec<Cell> { (1..=shape.col_len(j)).map(|i| Cell::new(i, j)).collect() };
    let mut out = Vec::new();
    for j in 1..=shape.num_cols() {
        let cj = column(j);
        for j2 in j + 1..=shape.num_cols() {
            let cj2 = column(j2);
            for a in subsets(&cj) {
                for b in subsets(&cj2) {
                    if a.len() + b.len() > shape.col_len(j) {
                        out.push((a.clone(), b));
                    }
                }
            }
        }
    }
    out
}

/// Garnir relations for every tableau of `shape` with entries at most `m`
/// and every valid label, in deterministic order.
pub fn all_garnir_relations(shape: &Partition, m: u32) -> Vec<SchurRelation> {
    let labels = garnir_labels(shape);
    enumerate(shape, m, TableauClass::All)
        .par_iter()
        .flat_map_iter(|t| labels.iter().map(move |(a, b)| garnir(t, a, b).expect("valid label")))
        .collect()
}

fn field_or_integers(ring: Ring) -> Result<()> {
    match ring {
        Ring::Integers | Ring::Rationals => Ok(()),
        _ if ring.is_field() => Ok(()),
        _ => Err(Error::NotAField(ring.to_string())),
    }
}

/// Checks `GR ⊆ ker e`, `rank(im e) = |SSYT|` and
/// `rank GR + rank(im e) = dim Λ^{λ'}`. Over ℤ the ranks are taken over ℚ
/// and the elementary divisors of the Garnir generators are reported.
pub fn verify_schur_ses(shape: &Partition, m: u32, ring: Ring) -> Result<InstanceReport> {
    field_or_integers(ring)?;
    let mut report = InstanceReport::new(shape, m, ring);
    let csyt = enumerate(shape, m, TableauClass::ColumnStandard);
    let ssyt = enumerate(shape, m, TableauClass::Semistandard);
    report.dims.insert("csyt".into(), csyt.len() as u64);
    report.dims.insert("ssyt".into(), ssyt.len() as u64);

    let relations = all_garnir_relations(shape, m);
    report.dims.insert("garnir_labels".into(), relations.len() as u64);
    let generators: Vec<LinComb<Tableau>> =
        relations.iter().filter(|r| !r.element.is_zero()).map(|r| r.element.as_lincomb().clone()).collect();

    let offender = relations.par_iter().find_first(|r| {
        let image = polytabloid_map(&r.element.change_ring(ring).expect("integral"));
        !image.is_zero()
    });
    report.push(Check::from_search(
        "garnir_in_kernel_of_e",
        offender.map(|r| json!({ "relation": r, "image": polytabloid_map(&r.element) })),
    ));

    let images: Vec<LinComb<Tableau>> = csyt.par_iter().map(|u| polytabloid(u).into_lincomb()).collect();
    let rank_e = linalg::rank(&images, ring)?;
    let rank_gr = linalg::rank(&generators, ring)?;
    report.ranks.insert("im_e".into(), rank_e as u64);
    report.ranks.insert("garnir".into(), rank_gr as u64);
    report.push(Check::expect(
        "im_e_rank_equals_ssyt",
        rank_e == ssyt.len(),
        format!("rank(im e) = {rank_e}, |SSYT| = {}", ssyt.len()),
    ));
    report.push(Check::expect(
        "garnir_equals_kernel_of_e",
        rank_gr + rank_e == csyt.len(),
        format!("rank GR + rank(im e) = {rank_gr} + {rank_e}, dim = {}", csyt.len()),
    ));
    if ring == Ring::Integers {
        let divisors = linalg::elementary_divisors(&generators)?;
        let unit = divisors.iter().all(|d| *d == 1.into());
        report.elementary_divisors = Some(divisors.iter().map(|d| d.to_string()).collect());
        report.push(Check::expect("garnir_lattice_saturated", unit, format!("{} elementary divisors", divisors.len())));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::places::PlacePermutation;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn polytabloid_of_a_hook() {
        let e = polytabloid(&t(&[&[1, 2], &[2]]));
        let z = Ring::Integers;
        let mut expected = RowTabloidElement::zero(z);
        expected.add_tableau(&t(&[&[1, 2], &[2]]), z.one());
        expected.add_tableau(&t(&[&[2, 2], &[1]]), z.from_int(-1));
        assert_eq!(e, expected);
        assert!(polytabloid(&t(&[&[1, 2], &[1]])).is_zero());
    }

    #[test]
    fn polytabloid_is_alternating_in_columns() {
        let shape = Partition::new(vec![3, 2, 1]).unwrap();
        let x = t(&[&[1, 4, 2], &[3, 1], &[2]]);
        let swaps = [((1, 1), (2, 1)), ((1, 1), (3, 1)), ((1, 2), (2, 2))];
        for (p, q) in swaps {
            let s = PlacePermutation::transposition(&shape, Cell::new(p.0, p.1), Cell::new(q.0, q.1)).unwrap();
            assert_eq!(polytabloid(&act(&x, &s).unwrap()), polytabloid(&x).scale_int(-1));
        }
    }

    #[test]
    fn garnir_example_has_three_terms_in_kernel() {
        let x = t(&[&[1, 2], &[3, 4]]);
        let r = garnir(&x, &CellSet::from_pairs(&[(1, 1), (2, 1)]), &CellSet::from_pairs(&[(1, 2)])).unwrap();
        assert_eq!(r.element.len(), 3);
        assert!(polytabloid_map(&r.element).is_zero());
        // constant filling: every term has a repeated column entry
        let ones = t(&[&[1, 1], &[1, 1]]);
        let r = garnir(&ones, &CellSet::from_pairs(&[(1, 1), (2, 1)]), &CellSet::from_pairs(&[(1, 2)])).unwrap();
        assert!(r.element.is_zero());
    }

    #[test]
    fn garnir_rejects_bad_labels() {
        let x = t(&[&[1, 2], &[3, 4]]);
        let a = CellSet::from_pairs(&[(1, 1)]);
        let b = CellSet::from_pairs(&[(1, 2)]);
        assert!(garnir(&x, &a, &b).is_err());
        assert!(garnir(&x, &b, &a).is_err());
        assert!(garnir(&x, &CellSet::from_pairs(&[(1, 1), (1, 2)]), &b).is_err());
    }

    #[test]
    fn garnir_relations_vanish_under_e() {
        for lam in Partition::all_up_to(4) {
            for r in all_garnir_relations(&lam, 3) {
                assert!(polytabloid_map(&r.element).is_zero(), "{r:?}");
            }
        }
    }

    #[test]
    fn small_sequences() {
        let r = verify_schur_ses(&Partition::new(vec![2, 1]).unwrap(), 2, Ring::Rationals).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.ranks["im_e"], 2);
        let r = verify_schur_ses(&Partition::new(vec![1]).unwrap(), 3, Ring::Integers).unwrap();
        assert!(r.ok);
        assert_eq!(r.dims["garnir_labels"], 0);
        assert_eq!(r.ranks["im_e"], 3);
        let r = verify_schur_ses(&Partition::new(vec![2, 2]).unwrap(), 2, Ring::IntegersMod(2)).unwrap();
        assert!(r.ok);
        assert!(verify_schur_ses(&Partition::new(vec![2]).unwrap(), 2, Ring::IntegersMod(6)).is_err());
    }
}
