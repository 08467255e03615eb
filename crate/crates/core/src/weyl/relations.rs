use std::fmt;

use serde::Serialize;

use crate::coeffs::Ring;
use crate::error::{Error, Result};
use crate::places::{
    act, check_row_pair, oracle, row_stabilizer_order, sab_cosets_star, sab_orbit_row_classes, shuffle_representatives,
    Cell, CellSet, PlacePermutation,
};
use crate::powers::SymLowerElement;
use crate::tableaux::{Partition, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    DualGarnir,
    DualSnake,
    StarVariant,
    StarStarVariant,
}

/// The two unweighted sums that look like dual Garnir relations but are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// One term per left coset of `S_A × S_B`, no weights.
    Star,
    /// The full `RPP` sum over each coset representative.
    StarStar,
}

/// `(t, i, (j, j'))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SnakeLabel {
    pub tableau: Tableau,
    pub i: usize,
    pub j: usize,
    #[serde(rename = "j'")]
    pub j2: usize,
}

impl fmt::Display for SnakeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {}, {})", self.tableau.short(), self.i, self.j, self.j2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylRelation {
    pub kind: RelationKind,
    pub tableau: Tableau,
    pub a: CellSet,
    pub b: CellSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snake: Option<SnakeLabel>,
    pub element: SymLowerElement,
}

/// Checks the label and returns the row of `A`.
fn check_label(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<usize> {
    let shape = t.shape();
    let (i, _) = check_row_pair(shape, a, b)?
        .ok_or_else(|| Error::InvalidBoxSet("A and B must both be nonempty".into()))?;
    if a.len() + b.len() <= shape.part(i) {
        return Err(Error::InvalidBoxSet(format!(
            "|A| + |B| = {} must exceed the length {} of row {i}",
            a.len() + b.len(),
            shape.part(i)
        )));
    }
    Ok(i)
}

/// `Σ_{u ∈ 𝒯/~_r} |Rstab(u) : Rstab(u) ∩ (S_{A⊔B} × S_Z)| rsym(u)`, over ℤ.
pub fn dual_garnir(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<WeylRelation> {
    check_label(t, a, b)?;
    let ring = Ring::Integers;
    let mut element = SymLowerElement::zero(ring);
    for class in sab_orbit_row_classes(t, a, b)? {
        element.add_tableau(&class.representative, ring.from_int(class.index));
    }
    Ok(WeylRelation { kind: RelationKind::DualGarnir, tableau: t.clone(), a: a.clone(), b: b.clone(), snake: None, element })
}

fn product_group(shape: &Partition, a: &CellSet, b: &CellSet) -> Result<Vec<PlacePermutation>> {
    let sa = oracle::symmetric_group_on(shape, a)?;
    let sb = oracle::symmetric_group_on(shape, b)?;
    Ok(sa.iter().flat_map(|x| sb.iter().map(move |y| x.then(y))).collect())
}

/// The double cosets `(stab(t) ∩ S_{A⊔B}) \ S_{A⊔B} / (S_A × S_B)`, each
/// with its representative first. Brute force; refused when `|A⊔B| > 6`.
pub fn double_coset_classes(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<Vec<Vec<PlacePermutation>>> {
    check_label(t, a, b)?;
    let shape = t.shape();
    let group = oracle::symmetric_group_on(shape, &a.union(b))?;
    let left = oracle::stabilizer(t, &group);
    let right = product_group(shape, a, b)?;
    Ok(oracle::double_cosets(&left, &group, &right))
}

/// The dual Garnir relation summed over double coset representatives, with
/// every index counted inside the row group. Oracle path only.
pub fn dual_garnir_dc(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<WeylRelation> {
    let classes = double_coset_classes(t, a, b)?;
    let c = a.union(b);
    let row_group = oracle::row_group(t.shape())?;
    let ring = Ring::Integers;
    let mut element = SymLowerElement::zero(ring);
    for class in classes {
        let u = act(t, &class[0])?;
        element.add_tableau(&u, ring.from_int(oracle::restricted_row_index(&u, &c, &row_group)));
    }
    Ok(WeylRelation { kind: RelationKind::DualGarnir, tableau: t.clone(), a: a.clone(), b: b.clone(), snake: None, element })
}

pub fn variant_relation(t: &Tableau, a: &CellSet, b: &CellSet, variant: Variant) -> Result<WeylRelation> {
    check_label(t, a, b)?;
    let ring = Ring::Integers;
    let mut element = SymLowerElement::zero(ring);
    let kind = match variant {
        Variant::Star => {
            for (u, mult) in sab_cosets_star(t, a, b)? {
                element.add_tableau(&u, ring.from_int(mult));
            }
            RelationKind::StarVariant
        }
        Variant::StarStar => {
            for tau in shuffle_representatives(t.shape(), a, b)? {
                let u = act(t, &tau)?;
                element.add_tableau(&u, ring.from_int(row_stabilizer_order(&u)));
            }
            RelationKind::StarStarVariant
        }
    };
    Ok(WeylRelation { kind, tableau: t.clone(), a: a.clone(), b: b.clone(), snake: None, element })
}

/// The dual Garnir relation with `A` the end of row `i` from column `j` and
/// `B` the start of row `i+1` up to column `j'`.
pub fn dual_snake(t: &Tableau, i: usize, j: usize, j2: usize) -> Result<WeylRelation> {
    let shape = t.shape();
    if i == 0 || i >= shape.num_rows() {
        return Err(Error::InvalidLabel(format!("row {i} needs a row below it in {shape}")));
    }
    if j == 0 || j > j2 || j > shape.part(i) {
        return Err(Error::InvalidLabel(format!("need 1 ≤ j ≤ j' and j ≤ {}, got j = {j}, j' = {j2}", shape.part(i))));
    }
    if j2 > shape.part(i + 1) {
        return Err(Error::InvalidLabel(format!("row {} has length {} < j' = {j2}", i + 1, shape.part(i + 1))));
    }
    let a = CellSet::new((j..=shape.part(i)).map(|r| Cell::new(i, r)));
    let b = CellSet::new((1..=j2).map(|r| Cell::new(i + 1, r)));
    let mut rel = dual_garnir(t, &a, &b)?;
    rel.kind = RelationKind::DualSnake;
    rel.snake = Some(SnakeLabel { tableau: t.clone(), i, j, j2 });
    Ok(rel)
}

/// Every valid `(i, j, j')` on `shape`.
pub fn snake_labels(shape: &Partition) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..shape.num_rows() {
        for j2 in 1..=shape.part(i + 1) {
            for j in 1..=j2 {
                out.push((i, j, j2));
            }
        }
    }
    out
}

fn nonempty_subsets(cells: &[Cell]) -> Vec<CellSet> {
    (1u32..1 << cells.len())
        .map(|mask| CellSet::new(cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, c)| *c)))
        .collect()
}

/// Every valid `(A, B)` for [`dual_garnir`] on `shape`.
pub fn dual_garnir_labels(shape: &Partition) -> Vec<(CellSet, CellSet)> {
    let row = |i: usize| -> Vec<Cell> { (1..=shape.part(i)).map(|j| Cell::new(i, j)).collect() };
    let mut out = Vec::new();
    for i in 1..=shape.num_rows() {
        let upper = nonempty_subsets(&row(i));
        for i2 in i + 1..=shape.num_rows() {
            let lower = nonempty_subsets(&row(i2));
            for a in &upper {
                for b in &lower {
                    if a.len() + b.len() > shape.part(i) {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::tests::t;
    use super::super::lambda_map;
    use super::*;
    use crate::powers::{expand, rsym, ColumnTabloidElement};
    use crate::tableaux::{enumerate, TableauClass};

    fn example() -> (Tableau, CellSet, CellSet) {
        (t(&[&[1, 1], &[2, 2]]), CellSet::from_pairs(&[(1, 1), (1, 2)]), CellSet::from_pairs(&[(2, 1)]))
    }

    fn sym(terms: &[(i64, &Tableau)]) -> SymLowerElement {
        let z = Ring::Integers;
        let mut x = SymLowerElement::zero(z);
        for (c, u) in terms {
            x.add_tableau(u, z.from_int(*c));
        }
        x
    }

    #[test]
    fn example_relation() {
        let (t0, a, b) = example();
        let rel = dual_garnir(&t0, &a, &b).unwrap();
        let expected = sym(&[(2, &t(&[&[1, 1], &[2, 2]])), (1, &t(&[&[2, 1], &[1, 2]]))]);
        assert_eq!(rel.element, expected);
        assert_eq!(expand(&rel.element).len(), 5);
        assert!(lambda_map(&rel.element).is_zero());
        assert_eq!(dual_garnir_dc(&t0, &a, &b).unwrap().element, expected);
    }

    #[test]
    fn example_double_cosets() {
        let (t0, a, b) = example();
        let classes = double_coset_classes(&t0, &a, &b).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        let reps: Vec<Tableau> = classes.iter().map(|c| act(&t0, &c[0]).unwrap().sort_rows()).collect();
        assert!(reps.contains(&t0));
        assert!(reps.contains(&t(&[&[1, 2], &[1, 2]])));
    }

    #[test]
    fn constant_tableau_has_a_single_double_coset() {
        let (_, a, b) = example();
        let ones = t(&[&[1, 1], &[1, 1]]);
        assert_eq!(double_coset_classes(&ones, &a, &b).unwrap().len(), 1);
        assert_eq!(dual_garnir_dc(&ones, &a, &b).unwrap(), dual_garnir(&ones, &a, &b).unwrap());
    }

    #[test]
    fn variants_of_the_example() {
        let (t0, a, b) = example();
        let z = Ring::Integers;
        let base = t(&[&[1, 1], &[2, 2]]);
        let star = variant_relation(&t0, &a, &b, Variant::Star).unwrap();
        assert_eq!(star.element, sym(&[(1, &base), (2, &t(&[&[2, 1], &[1, 2]]))]));
        let image = lambda_map(&star.element);
        assert_eq!(image, ColumnTabloidElement::basis(z, &base).scale_int(-3));
        assert!(image.change_ring(Ring::IntegersMod(3)).unwrap().is_zero());
        let star2 = variant_relation(&t0, &a, &b, Variant::StarStar).unwrap();
        assert_eq!(star2.element, dual_garnir(&t0, &a, &b).unwrap().element.scale_int(2));
    }

    #[test]
    fn distinct_entries_have_unit_coefficients() {
        let x = t(&[&[1, 2, 3], &[4, 5]]);
        for (a, b) in dual_garnir_labels(x.shape()) {
            let rel = dual_garnir(&x, &a, &b).unwrap();
            assert!(rel.element.iter().all(|(_, c)| c.is_one()));
            assert!(lambda_map(&rel.element).is_zero());
        }
        for u in [t(&[&[1, 2, 3], &[4, 5]]), t(&[&[5, 1, 3], &[2, 4]])] {
            assert_eq!(rsym(&u).len(), 12);
        }
    }

    #[test]
    fn snakes() {
        let (t0, a, b) = example();
        let s = dual_snake(&t0, 1, 1, 1).unwrap();
        assert_eq!((&s.a, &s.b), (&a, &b));
        assert_eq!(s.element, dual_garnir(&t0, &a, &b).unwrap().element);
        assert!(dual_snake(&t0, 1, 2, 2).is_ok());
        assert!(dual_snake(&t0, 1, 2, 1).is_err());
        assert!(dual_snake(&t0, 2, 1, 1).is_err());
        assert!(dual_snake(&t(&[&[1, 1], &[2]]), 1, 1, 2).is_err());
        assert_eq!(snake_labels(t0.shape()).len(), 3);
    }

    #[test]
    fn relations_vanish_under_lambda() {
        for lam in Partition::all_up_to(4) {
            let labels = dual_garnir_labels(&lam);
            for x in enumerate(&lam, 3, TableauClass::All) {
                for (a, b) in &labels {
                    let rel = dual_garnir(&x, a, b).unwrap();
                    assert!(lambda_map(&rel.element).is_zero(), "{rel:?}");
                    assert_eq!(rel.element, dual_garnir_dc(&x, a, b).unwrap().element);
                }
            }
        }
    }
}
