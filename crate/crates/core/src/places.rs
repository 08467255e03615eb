//! Place permutations acting on tableaux, and the orbit computations that
//! stand in for the coset and double-coset sums over Young subgroups.
//!
//! Nothing here lists the elements of `RPP(λ)`: row orbits are enumerated as
//! distinct rearrangements of each row's multiset and stabilizer orders come
//! from the closed form `Π (multiplicity)!`. The [`oracle`] submodule does
//! enumerate groups, for cross-checking on small box sets only.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableaux::{Partition, Tableau};

/// A box `(row, col)` of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Cell {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A set of boxes within one shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> CellSet {
        CellSet(cells.into_iter().collect())
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> CellSet {
        CellSet::new(pairs.iter().map(|&(r, c)| Cell::new(r, c)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.0.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.0.iter()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.union(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// The single row containing every box, if there is one.
    pub fn common_row(&self) -> Option<usize> {
        let r = self.0.first()?.row;
        self.0.iter().all(|c| c.row == r).then_some(r)
    }

    pub fn common_col(&self) -> Option<usize> {
        let c = self.0.first()?.col;
        self.0.iter().all(|b| b.col == c).then_some(c)
    }

    pub fn check_in(&self, shape: &Partition) -> Result<()> {
        match self.0.iter().find(|c| !shape.contains(c.row, c.col)) {
            Some(c) => Err(Error::InvalidBoxSet(format!("box {c} is outside shape {shape}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Cell::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Parses `(1,1),(1,2)` or the JSON form `{"boxes":[[1,1],[1,2]]}`.
impl FromStr for CellSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<CellSet> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidBoxSet(e.to_string()));
        }
        let digits: Vec<usize> = s
            .split(|ch: char| !ch.is_ascii_digit())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| Error::InvalidBoxSet(s.to_string())))
            .collect::<Result<_>>()?;
        if !digits.len().is_multiple_of(2) {
            return Err(Error::InvalidBoxSet(format!("odd number of coordinates in {s:?}")));
        }
        Ok(CellSet::new(digits.chunks(2).map(|p| Cell::new(p[0], p[1]))))
    }
}

#[derive(Serialize, Deserialize)]
struct CellSetRepr {
    boxes: Vec<[usize; 2]>,
}

impl Serialize for CellSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CellSetRepr { boxes: self.0.iter().map(|c| [c.row, c.col]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CellSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CellSetRepr::deserialize(d)?;
        Ok(CellSet::new(r.boxes.into_iter().map(|[a, b]| Cell::new(a, b))))
    }
}

/// A bijection of the boxes of one shape, written on the right: `b ↦ bσ`.
/// `images[k]` is the row-major index of the image of box `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlacePermutation {
    shape: Partition,
    images: Vec<usize>,
}

impl PlacePermutation {
    pub fn identity(shape: &Partition) -> PlacePermutation {
        PlacePermutation { shape: shape.clone(), images: (0..shape.size()).collect() }
    }

    pub fn from_images(shape: &Partition, images: Vec<usize>) -> Result<PlacePermutation> {
        let n = shape.size();
        let mut seen = vec![false; n];
        if images.len() != n {
            return Err(Error::InvalidPermutation(format!("{} images for {n} boxes", images.len())));
        }
        for &k in &images {
            if k >= n || seen[k] {
                return Err(Error::InvalidPermutation("not a bijection of the boxes".into()));
            }
            seen[k] = true;
        }
        Ok(PlacePermutation { shape: shape.clone(), images })
    }

    /// Builds `σ` from an explicit box map; unmentioned boxes are fixed.
    pub fn from_cell_map(shape: &Partition, map: &[(Cell, Cell)]) -> Result<PlacePermutation> {
        let mut images: Vec<usize> = (0..shape.size()).collect();
        for (from, to) in map {
            for c in [from, to] {
                if !shape.contains(c.row, c.col) {
                    return Err(Error::InvalidPermutation(format!("box {c} is outside shape {shape}")));
                }
            }
            images[shape.index_of(from.row, from.col)] = shape.index_of(to.row, to.col);
        }
        PlacePermutation::from_images(shape, images)
    }

    pub fn transposition(shape: &Partition, a: Cell, b: Cell) -> Result<PlacePermutation> {
        PlacePermutation::from_cell_map(shape, &[(a, b), (b, a)])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `στ`: first `self`, then `other`.
    pub fn then(&self, other: &PlacePermutation) -> PlacePermutation {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        PlacePermutation {
            shape: self.shape.clone(),
            images: self.images.iter().map(|&k| other.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> PlacePermutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        PlacePermutation { shape: self.shape.clone(), images: inv }
    }

    pub fn sign(&self) -> i64 {
        permutation_sign(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }
}

pub(crate) fn permutation_sign(images: &[usize]) -> i64 {
    let mut seen = vec![false; images.len()];
    let mut sign = 1;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = images[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// `(t·σ)(b) = t(bσ⁻¹)`: the entry in box `b` moves to box `bσ`.
pub fn act(t: &Tableau, sigma: &PlacePermutation) -> Result<Tableau> {
    if t.shape() != sigma.shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut out = t.clone();
    for (k, &v) in t.entries().iter().enumerate() {
        out.entries_mut()[sigma.images[k]] = v;
    }
    Ok(out)
}

/// Steps `v` to the next lexicographic arrangement of its multiset.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn arrangements(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = values.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multiplicity_factorials<I: IntoIterator<Item = u32>>(values: I) -> u64 {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    counts.values().map(|&c| factorial(c)).product()
}

/// `|Rstab(t)| = Π_rows Π_values (multiplicity)!`.
pub fn row_stabilizer_order(t: &Tableau) -> u64 {
    (1..=t.shape().num_rows()).map(|i| multiplicity_factorials(t.row(i).iter().copied())).product()
}

/// `|RPP(λ)| = Π λ_i!`.
pub fn row_group_order(shape: &Partition) -> u64 {
    shape.parts().iter().map(|&p| factorial(p)).product()
}

/// The distinct tableaux `t·τ` for `τ ∈ RPP(λ)`, sorted.
pub fn row_orbit(t: &Tableau) -> Vec<Tableau> {
    let mut words: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 1..=t.shape().num_rows() {
        let options = arrangements(t.row(i));
        words = words
            .iter()
            .flat_map(|w| {
                options.iter().map(move |r| {
                    let mut w = w.clone();
                    w.extend_from_slice(r);
                    w
                })
            })
            .collect();
    }
    let mut out: Vec<Tableau> = words
        .into_iter()
        .map(|w| Tableau::from_entries_unchecked(t.shape().clone(), w))
        .collect();
    out.sort();
    out
}

/// Checks that `a` lies in one row, `b` in a strictly lower row, and both
/// inside the shape. Returns the two rows when both sets are nonempty.
pub fn check_row_pair(shape: &Partition, a: &CellSet, b: &CellSet) -> Result<Option<(usize, usize)>> {
    a.check_in(shape)?;
    b.check_in(shape)?;
    if !a.is_disjoint(b) {
        return Err(Error::InvalidBoxSet("A and B overlap".into()));
    }
    let ra = if a.is_empty() { None } else { Some(a.common_row().ok_or_else(|| Error::InvalidBoxSet(format!("A = {a} is not within one row")))?) };
    let rb = if b.is_empty() { None } else { Some(b.common_row().ok_or_else(|| Error::InvalidBoxSet(format!("B = {b} is not within one row")))?) };
    match (ra, rb) {
        (Some(i), Some(k)) if i >= k => Err(Error::InvalidBoxSet(format!("row of A ({i}) must be above row of B ({k})"))),
        (Some(i), Some(k)) => Ok(Some((i, k))),
        _ => Ok(None),
    }
}

/// Same as [`check_row_pair`] with columns in place of rows.
pub fn check_col_pair(shape: &Partition, a: &CellSet, b: &CellSet) -> Result<Option<(usize, usize)>> {
    a.check_in(shape)?;
    b.check_in(shape)?;
    if !a.is_disjoint(b) {
        return Err(Error::InvalidBoxSet("A and B overlap".into()));
    }
    let ca = if a.is_empty() { None } else { Some(a.common_col().ok_or_else(|| Error::InvalidBoxSet(format!("A = {a} is not within one column")))?) };
    let cb = if b.is_empty() { None } else { Some(b.common_col().ok_or_else(|| Error::InvalidBoxSet(format!("B = {b} is not within one column")))?) };
    match (ca, cb) {
        (Some(j), Some(k)) if j >= k => Err(Error::InvalidBoxSet(format!("column of A ({j}) must be left of column of B ({k})"))),
        (Some(j), Some(k)) => Ok(Some((j, k))),
        _ => Ok(None),
    }
}

/// A row-equivalence class of `𝒯 = {t·τ : τ ∈ S_{A⊔B}}` with its weight
/// `|Rstab(u) : Rstab(u) ∩ (S_{A⊔B} × S_Z)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowClass {
    pub representative: Tableau,
    pub index: u64,
}

/// Which member of each class of `𝒯/~_r` to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representative {
    First,
    Last,
}

pub fn sab_orbit_row_classes(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<Vec<RowClass>> {
    sab_orbit_row_classes_with(t, a, b, Representative::First)
}

/// Classes sorted by their row-sorted form; representatives are members of
/// `𝒯`, picked first or last in reading-word order.
pub fn sab_orbit_row_classes_with(
    t: &Tableau,
    a: &CellSet,
    b: &CellSet,
    pick: Representative,
) -> Result<Vec<RowClass>> {
    let shape = t.shape();
    check_row_pair(shape, a, b)?;
    let c = a.union(b);
    let idx: Vec<usize> = c.iter().map(|x| shape.index_of(x.row, x.col)).collect();
    let values: Vec<u32> = idx.iter().map(|&k| t.entries()[k]).collect();

    let mut classes: BTreeMap<Tableau, Tableau> = BTreeMap::new();
    for arr in arrangements(&values) {
        let mut u = t.clone();
        for (&k, &v) in idx.iter().zip(&arr) {
            u.entries_mut()[k] = v;
        }
        let key = u.sort_rows();
        match pick {
            Representative::First => {
                classes.entry(key).or_insert(u);
            }
            Representative::Last => {
                classes.insert(key, u);
            }
        }
    }

    Ok(classes
        .into_values()
        .map(|u| {
            let index = restricted_row_index(&u, &c);
            RowClass { representative: u, index }
        })
        .collect())
}

/// `|Rstab(u) : Rstab(u) ∩ (S_C × S_Z)|` in closed form: per row and value,
/// the binomial splitting its copies between `C` and the rest of the row.
pub fn restricted_row_index(u: &Tableau, c: &CellSet) -> u64 {
    let shape = u.shape();
    let mut index = 1u64;
    for i in 1..=shape.num_rows() {
        let row = u.row(i);
        let in_c = (1..=shape.part(i)).filter(|&j| c.contains(&Cell::new(i, j))).map(|j| row[j - 1]);
        let in_z = (1..=shape.part(i)).filter(|&j| !c.contains(&Cell::new(i, j))).map(|j| row[j - 1]);
        let full = multiplicity_factorials(row.iter().copied());
        index *= full / (multiplicity_factorials(in_c) * multiplicity_factorials(in_z));
    }
    index
}

/// Left coset representatives of `S_A × S_B` in `S_{A⊔B}`: one per choice of
/// the `|A|` boxes whose entries are sent into `A`, moved order-preservingly.
pub fn shuffle_representatives(shape: &Partition, a: &CellSet, b: &CellSet) -> Result<Vec<PlacePermutation>> {
    a.check_in(shape)?;
    b.check_in(shape)?;
    let c: Vec<Cell> = a.union(b).iter().copied().collect();
    let a_cells: Vec<Cell> = a.iter().copied().collect();
    let b_cells: Vec<Cell> = b.iter().copied().collect();
    let mut out = Vec::new();
    for chosen in subsets_of_size(c.len(), a_cells.len()) {
        let mut map = Vec::with_capacity(c.len());
        let (mut ai, mut bi) = (0, 0);
        for (k, &cell) in c.iter().enumerate() {
            if chosen.contains(&k) {
                map.push((cell, a_cells[ai]));
                ai += 1;
            } else {
                map.push((cell, b_cells[bi]));
                bi += 1;
            }
        }
        out.push(PlacePermutation::from_cell_map(shape, &map)?);
    }
    Ok(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The multiset `{t·τ : τ ∈ S_{A⊔B}/(S_A × S_B)}` for the representatives of
/// [`shuffle_representatives`], as (tableau, multiplicity) sorted by tableau.
pub fn sab_cosets_star(t: &Tableau, a: &CellSet, b: &CellSet) -> Result<Vec<(Tableau, u64)>> {
    check_row_pair(t.shape(), a, b)?;
    let mut counts: BTreeMap<Tableau, u64> = BTreeMap::new();
    for tau in shuffle_representatives(t.shape(), a, b)? {
        *counts.entry(act(t, &tau)?).or_default() += 1;
    }
    Ok(counts.into_iter().collect())
}

/// Brute-force group enumeration, used only to validate the orbit code.
pub mod oracle {
    use std::collections::HashSet;

    use super::*;

    pub const MAX_BOXES: usize = 6;

    /// Every permutation of `cells` (fixing all other boxes).
    pub fn symmetric_group_on(shape: &Partition, cells: &CellSet) -> Result<Vec<PlacePermutation>> {
        if cells.len() > MAX_BOXES {
            return Err(Error::OracleRefused(format!("|C| = {} > {MAX_BOXES}", cells.len())));
        }
        cells.check_in(shape)?;
        let idx: Vec<usize> = cells.iter().map(|c| shape.index_of(c.row, c.col)).collect();
        let mut order: Vec<u32> = (0..idx.len() as u32).collect();
        let mut out = Vec::new();
        loop {
            let mut images: Vec<usize> = (0..shape.size()).collect();
            for (k, &o) in order.iter().enumerate() {
                images[idx[k]] = idx[o as usize];
            }
            out.push(PlacePermutation { shape: shape.clone(), images });
            if !next_permutation(&mut order) {
                break;
            }
        }
        Ok(out)
    }

    /// All of `RPP(λ)`; refused when it would exceed 720 elements.
    pub fn row_group(shape: &Partition) -> Result<Vec<PlacePermutation>> {
        if row_group_order(shape) > 720 {
            return Err(Error::OracleRefused(format!("|RPP{shape}| too large")));
        }
        let mut group = vec![PlacePermutation::identity(shape)];
        for i in 1..=shape.num_rows() {
            let row = CellSet::new((1..=shape.part(i)).map(|j| Cell::new(i, j)));
            let factor = symmetric_group_on(shape, &row)?;
            group = group.iter().flat_map(|g| factor.iter().map(move |h| g.then(h))).collect();
        }
        Ok(group)
    }

    pub fn stabilizer(t: &Tableau, group: &[PlacePermutation]) -> Vec<PlacePermutation> {
        group.iter().filter(|g| act(t, g).as_ref() == Ok(t)).cloned().collect()
    }

    pub fn orbit(t: &Tableau, group: &[PlacePermutation]) -> Vec<Tableau> {
        let set: BTreeSet<Tableau> = group.iter().map(|g| act(t, g).expect("same shape")).collect();
        set.into_iter().collect()
    }

    /// Partition of `group` into double cosets `H τ K`, each listed with its
    /// first element (in `group` order) as representative.
    pub fn double_cosets(
        left: &[PlacePermutation],
        group: &[PlacePermutation],
        right: &[PlacePermutation],
    ) -> Vec<Vec<PlacePermutation>> {
        let mut seen: HashSet<PlacePermutation> = HashSet::new();
        let mut out = Vec::new();
        for tau in group {
            if seen.contains(tau) {
                continue;
            }
            let mut class: Vec<PlacePermutation> = Vec::new();
            let mut local: HashSet<PlacePermutation> = HashSet::new();
            for h in left {
                let ht = h.then(tau);
                for k in right {
                    let x = ht.then(k);
                    if local.insert(x.clone()) {
                        class.push(x);
                    }
                }
            }
            class.sort();
            class.retain(|x| x != tau);
            class.insert(0, tau.clone());
            seen.extend(class.iter().cloned());
            out.push(class);
        }
        out
    }

    /// `|Rstab(u) : Rstab(u) ∩ (S_C × S_Z)|` by counting group elements.
    pub fn restricted_row_index(u: &Tableau, c: &CellSet, row_group: &[PlacePermutation]) -> u64 {
        let shape = u.shape();
        let in_c: Vec<bool> = shape.boxes().map(|(i, j)| c.contains(&Cell::new(i, j))).collect();
        let stab = stabilizer(u, row_group);
        let preserving = stab
            .iter()
            .filter(|g| g.images().iter().enumerate().all(|(k, &v)| in_c[k] == in_c[v]))
            .count() as u64;
        stab.len() as u64 / preserving
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> (Tableau, CellSet, CellSet) {
        (t(&[&[1, 1], &[2, 2]]), CellSet::from_pairs(&[(1, 1), (1, 2)]), CellSet::from_pairs(&[(2, 1)]))
    }

    #[test]
    fn transposition_of_first_column() {
        let (t0, _, _) = example();
        let tau = PlacePermutation::transposition(t0.shape(), Cell::new(1, 1), Cell::new(2, 1)).unwrap();
        assert_eq!(act(&t0, &tau).unwrap(), t(&[&[2, 1], &[1, 2]]));
        assert_eq!(act(&t0, &PlacePermutation::identity(t0.shape())).unwrap(), t0);
        assert_eq!(tau.sign(), -1);
    }

    #[test]
    fn act_is_a_right_action() {
        for lam in Partition::all_up_to(4) {
            let all: Vec<PlacePermutation> = {
                let every = CellSet::new(lam.boxes().map(|(i, j)| Cell::new(i, j)));
                oracle::symmetric_group_on(&lam, &every).unwrap()
            };
            let word: Vec<u32> = (1..=lam.size() as u32).collect();
            let t0 = Tableau::from_entries(lam.clone(), word).unwrap();
            for s in &all {
                assert_eq!(act(&act(&t0, s).unwrap(), &s.inverse()).unwrap(), t0);
                for u in &all {
                    let lhs = act(&act(&t0, s).unwrap(), u).unwrap();
                    assert_eq!(lhs, act(&t0, &s.then(u)).unwrap());
                    assert_eq!(s.then(u).sign(), s.sign() * u.sign());
                }
            }
        }
    }

    #[test]
    fn row_orbits() {
        assert_eq!(row_orbit(&t(&[&[1, 1], &[2, 2]])), vec![t(&[&[1, 1], &[2, 2]])]);
        let orbit = row_orbit(&t(&[&[2, 1], &[1, 2]]));
        let mut expected = vec![t(&[&[2, 1], &[1, 2]]), t(&[&[1, 2], &[1, 2]]), t(&[&[2, 1], &[2, 1]]), t(&[&[1, 2], &[2, 1]])];
        expected.sort();
        assert_eq!(orbit, expected);
        assert_eq!(row_orbit(&t(&[&[3, 3, 3]])), vec![t(&[&[3, 3, 3]])]);
    }

    #[test]
    fn orbit_stabilizer_and_oracle_agree() {
        for lam in Partition::all_up_to(5) {
            let group = oracle::row_group(&lam).unwrap();
            for x in crate::tableaux::enumerate(&lam, 3, crate::tableaux::TableauClass::All).iter().step_by(7) {
                let orbit = row_orbit(x);
                assert_eq!(orbit.len() as u64 * row_stabilizer_order(x), row_group_order(&lam));
                assert_eq!(orbit, oracle::orbit(x, &group));
                assert_eq!(oracle::stabilizer(x, &group).len() as u64, row_stabilizer_order(x));
            }
        }
    }

    #[test]
    fn example_row_classes() {
        let (t0, a, b) = example();
        let classes = sab_orbit_row_classes(&t0, &a, &b).unwrap();
        assert_eq!(
            classes,
            vec![
                RowClass { representative: t(&[&[1, 1], &[2, 2]]), index: 2 },
                RowClass { representative: t(&[&[1, 2], &[1, 2]]), index: 1 },
            ]
        );
    }

    #[test]
    fn constant_tableau_has_one_class() {
        let (_, a, b) = example();
        let ones = t(&[&[1, 1], &[1, 1]]);
        let classes = sab_orbit_row_classes(&ones, &a, &b).unwrap();
        // Rstab has order 4, its intersection with S_{A⊔B} × S_Z order 2
        assert_eq!(classes, vec![RowClass { representative: ones.clone(), index: 2 }]);
        // brute force over all six elements of S_{A⊔B}
        let c = a.union(&b);
        let sc = oracle::symmetric_group_on(ones.shape(), &c).unwrap();
        assert_eq!(sc.len(), 6);
        assert_eq!(oracle::orbit(&ones, &sc), vec![ones.clone()]);
        let rg = oracle::row_group(ones.shape()).unwrap();
        assert_eq!(oracle::restricted_row_index(&ones, &c, &rg), 2);
    }

    #[test]
    fn distinct_entries_give_unit_indices() {
        let x = t(&[&[1, 2, 3], &[4, 5]]);
        let a = CellSet::from_pairs(&[(1, 2), (1, 3)]);
        let b = CellSet::from_pairs(&[(2, 1), (2, 2)]);
        let classes = sab_orbit_row_classes(&x, &a, &b).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.index == 1));
    }

    #[test]
    fn representative_choice_does_not_change_indices() {
        let (t0, a, b) = example();
        let first = sab_orbit_row_classes_with(&t0, &a, &b, Representative::First).unwrap();
        let last = sab_orbit_row_classes_with(&t0, &a, &b, Representative::Last).unwrap();
        assert_eq!(first[1].representative, t(&[&[1, 2], &[1, 2]]));
        assert_eq!(last[1].representative, t(&[&[2, 1], &[1, 2]]));
        for (f, l) in first.iter().zip(&last) {
            assert_eq!(f.index, l.index);
            assert_eq!(f.representative.sort_rows(), l.representative.sort_rows());
        }
    }

    #[test]
    fn bad_box_sets_are_rejected() {
        let (t0, a, _) = example();
        let two_rows = CellSet::from_pairs(&[(1, 1), (2, 2)]);
        assert!(sab_orbit_row_classes(&t0, &two_rows, &a).is_err());
        assert!(sab_orbit_row_classes(&t0, &a, &a).is_err());
        let outside = CellSet::from_pairs(&[(3, 1)]);
        assert!(sab_orbit_row_classes(&t0, &a, &outside).is_err());
        let below = CellSet::from_pairs(&[(2, 1)]);
        assert!(sab_orbit_row_classes(&t0, &below, &CellSet::from_pairs(&[(1, 1)])).is_err());
    }

    #[test]
    fn star_cosets_of_the_example() {
        let (t0, a, b) = example();
        // one representative lands on t, the other two on the row class of 21/12
        let star = sab_cosets_star(&t0, &a, &b).unwrap();
        assert_eq!(star, vec![(t(&[&[1, 1], &[2, 2]]), 1), (t(&[&[1, 2], &[1, 2]]), 2)]);
        assert_eq!(sab_cosets_star(&t0, &a, &CellSet::default()).unwrap(), vec![(t0.clone(), 1)]);
    }

    #[test]
    fn star_cosets_match_brute_force_cosets() {
        let x = t(&[&[1, 2, 3], &[4, 5]]);
        let a = CellSet::from_pairs(&[(1, 2), (1, 3)]);
        let b = CellSet::from_pairs(&[(2, 1), (2, 2)]);
        let star = sab_cosets_star(&x, &a, &b).unwrap();
        assert_eq!(star.len(), 6);
        assert!(star.iter().all(|(_, m)| *m == 1));
        // every coset τ(S_A × S_B) meets exactly one representative
        let sc = oracle::symmetric_group_on(x.shape(), &a.union(&b)).unwrap();
        let sa = oracle::symmetric_group_on(x.shape(), &a).unwrap();
        let sb = oracle::symmetric_group_on(x.shape(), &b).unwrap();
        let sab: Vec<_> = sa.iter().flat_map(|p| sb.iter().map(move |q| p.then(q))).collect();
        let reps = shuffle_representatives(x.shape(), &a, &b).unwrap();
        let id = [PlacePermutation::identity(x.shape())];
        let cosets = oracle::double_cosets(&id, &sc, &sab);
        assert_eq!(cosets.len(), reps.len());
        for coset in cosets {
            assert_eq!(reps.iter().filter(|r| coset.contains(r)).count(), 1);
        }
    }

    #[test]
    fn closed_form_index_matches_group_count() {
        let lam = Partition::new(vec![3, 2]).unwrap();
        let rg = oracle::row_group(&lam).unwrap();
        let a = CellSet::from_pairs(&[(1, 2), (1, 3)]);
        let b = CellSet::from_pairs(&[(2, 1), (2, 2)]);
        let c = a.union(&b);
        for x in crate::tableaux::enumerate(&lam, 2, crate::tableaux::TableauClass::All) {
            assert_eq!(restricted_row_index(&x, &c), oracle::restricted_row_index(&x, &c, &rg));
        }
    }

    #[test]
    fn cell_set_parsing() {
        let a: CellSet = "(1,1),(1,2)".parse().unwrap();
        assert_eq!(a, CellSet::from_pairs(&[(1, 1), (1, 2)]));
        let j: CellSet = r#"{"boxes":[[1,1],[1,2]]}"#.parse().unwrap();
        assert_eq!(j, a);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"boxes":[[1,1],[1,2]]}"#);
        assert!("(1,1),(2".parse::<CellSet>().is_err());
    }
}
