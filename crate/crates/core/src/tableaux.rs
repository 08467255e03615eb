//! Partitions, Young diagrams and tableaux with entries in `{1, …, m}`.
//!
//! Boxes and rows/columns are 1-based throughout, matching the usual
//! `(row, column)` convention for Young diagrams drawn in English notation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows, `λ'_1`.
    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Number of columns, `λ_1`.
    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `λ_i` (1-based); zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ'_j`, the length of column `j` (1-based).
    pub fn col_len(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p >= j && j >= 1).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition((1..=self.num_cols()).map(|j| self.col_len(j)).collect())
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Boxes `(i, j)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Row-major position of box `(i, j)`.
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        debug_assert!(self.contains(i, j));
        self.0[..i - 1].iter().sum::<usize>() + (j - 1)
    }

    /// All partitions of `n`, parts in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions with `1 ≤ |λ| ≤ n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (1..=n).flat_map(Partition::all_of).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Partition::new(vec![]);
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Outcome of comparing two tableaux under the column or row ordering.
/// `Less` means the first argument is the smaller one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderVerdict {
    Less,
    Greater,
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableauClass {
    All,
    RowSemistandard,
    ColumnStandard,
    Semistandard,
}

impl FromStr for TableauClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TableauClass::All),
            "rssyt" | "row-semistandard" => Ok(TableauClass::RowSemistandard),
            "csyt" | "column-standard" => Ok(TableauClass::ColumnStandard),
            "ssyt" | "semistandard" => Ok(TableauClass::Semistandard),
            _ => Err(Error::Parse(format!("unknown tableau class {s:?}"))),
        }
    }
}

/// A filling of a Young diagram with positive integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<u32>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Tableau> {
        if rows.len() != shape.num_rows() || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p) {
            return Err(Error::InvalidTableau(format!("rows {rows:?} do not fit shape {shape}")));
        }
        let entries: Vec<u32> = rows.into_iter().flatten().collect();
        Tableau::from_entries(shape, entries)
    }

    /// Builds a tableau whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        Tableau::new(shape, rows)
    }

    /// Row-major entry list.
    pub fn from_entries(shape: Partition, entries: Vec<u32>) -> Result<Tableau> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidTableau(format!("{} entries for shape {shape}", entries.len())));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { shape, entries })
    }

    pub(crate) fn from_entries_unchecked(shape: Partition, entries: Vec<u32>) -> Tableau {
        Tableau { shape, entries }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Row-major reading word.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.entries
    }

    /// Entry in box `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[self.shape.index_of(i, j)]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let start = self.shape.0[..i - 1].iter().sum::<usize>();
        &self.entries[start..start + self.shape.part(i)]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (1..=self.shape.col_len(j)).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (1..=self.shape.num_rows()).map(|i| self.row(i).to_vec()).collect()
    }

    fn columns(&self) -> Vec<Vec<u32>> {
        (1..=self.shape.num_cols()).map(|j| self.column(j)).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn is_row_semistandard(&self) -> bool {
        (1..=self.shape.num_rows()).all(|i| self.row(i).windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.shape
            .boxes()
            .all(|(i, j)| i == 1 || self.get(i - 1, j) < self.get(i, j))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_row_semistandard() && self.is_column_standard()
    }

    pub fn is_class(&self, class: TableauClass) -> bool {
        match class {
            TableauClass::All => true,
            TableauClass::RowSemistandard => self.is_row_semistandard(),
            TableauClass::ColumnStandard => self.is_column_standard(),
            TableauClass::Semistandard => self.is_semistandard(),
        }
    }

    pub fn has_repeated_column_entry(&self) -> bool {
        self.columns().iter().any(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c.windows(2).any(|w| w[0] == w[1])
        })
    }

    pub fn has_distinct_entries(&self) -> bool {
        let mut e = self.entries.clone();
        e.sort_unstable();
        e.windows(2).all(|w| w[0] != w[1])
    }

    /// Canonical representative of the row tabloid: every row sorted ascending.
    pub fn sort_rows(&self) -> Tableau {
        let mut out = self.clone();
        let mut start = 0;
        for &len in self.shape.parts() {
            out.entries[start..start + len].sort_unstable();
            start += len;
        }
        out
    }

    /// Sorts every column ascending. Returns `None` when some column repeats an
    /// entry; otherwise the sign of the column permutation and the result.
    pub fn sort_columns(&self) -> Option<(i64, Tableau)> {
        let mut out = self.clone();
        let mut sign = 1i64;
        for j in 1..=self.shape.num_cols() {
            let mut col = self.column(j);
            let mut inversions = 0usize;
            for a in 0..col.len() {
                for b in a + 1..col.len() {
                    match col[a].cmp(&col[b]) {
                        Ordering::Equal => return None,
                        Ordering::Greater => inversions += 1,
                        Ordering::Less => {}
                    }
                }
            }
            if inversions % 2 == 1 {
                sign = -sign;
            }
            col.sort_unstable();
            for (k, v) in col.into_iter().enumerate() {
                let idx = self.shape.index_of(k + 1, j);
                out.entries[idx] = v;
            }
        }
        Some((sign, out))
    }

    /// The column ordering `<_c`.
    pub fn compare_columns(&self, other: &Tableau) -> Result<OrderVerdict> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(compare_lines(&self.columns(), &other.columns()))
    }

    /// The row ordering `<_r`.
    pub fn compare_rows(&self, other: &Tableau) -> Result<OrderVerdict> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(compare_lines(&self.rows(), &other.rows()))
    }

    /// Compact notation such as `12/22`; entries are comma-separated when any
    /// exceeds 9.
    pub fn short(&self) -> String {
        let wide = self.max_entry() > 9;
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        rows.join("/")
    }
}

/// Finds the largest value whose multiplicity differs in some line, then the
/// first such line; the tableau holding more copies there is the greater.
fn compare_lines(t: &[Vec<u32>], u: &[Vec<u32>]) -> OrderVerdict {
    let max = t.iter().chain(u).flatten().copied().max().unwrap_or(0);
    let count = |line: &[u32], v: u32| line.iter().filter(|&&x| x == v).count();
    for v in (1..=max).rev() {
        for (a, b) in t.iter().zip(u) {
            let (ca, cb) = (count(a, v), count(b, v));
            if ca != cb {
                return if ca > cb { OrderVerdict::Greater } else { OrderVerdict::Less };
            }
        }
    }
    OrderVerdict::Incomparable
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries).then_with(|| self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr { shape: self.shape.clone(), rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableauRepr::deserialize(d)?;
        Tableau::new(r.shape, r.rows).map_err(serde::de::Error::custom)
    }
}

/// All tableaux of shape `shape` with entries in `{1, …, m}` belonging to
/// `class`, sorted by reading word.
pub fn enumerate(shape: &Partition, m: u32, class: TableauClass) -> Vec<Tableau> {
    let n = shape.size();
    let boxes: Vec<(usize, usize)> = shape.boxes().collect();
    let row_ss = matches!(class, TableauClass::RowSemistandard | TableauClass::Semistandard);
    let col_st = matches!(class, TableauClass::ColumnStandard | TableauClass::Semistandard);
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];

    fn go(
        k: usize,
        cur: &mut Vec<u32>,
        boxes: &[(usize, usize)],
        shape: &Partition,
        m: u32,
        (row_ss, col_st): (bool, bool),
        out: &mut Vec<Tableau>,
    ) {
        if k == boxes.len() {
            out.push(Tableau::from_entries_unchecked(shape.clone(), cur.clone()));
            return;
        }
        let (i, j) = boxes[k];
        let mut lo = 1;
        if row_ss && j > 1 {
            lo = lo.max(cur[k - 1]);
        }
        if col_st && i > 1 {
            lo = lo.max(cur[shape.index_of(i - 1, j)] + 1);
        }
        for v in lo..=m {
            cur[k] = v;
            go(k + 1, cur, boxes, shape, m, (row_ss, col_st), out);
        }
    }

    go(0, &mut cur, &boxes, shape, m, (row_ss, col_st), &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `|RSSYT(λ, m)| = Π_i C(λ_i + m − 1, λ_i)`.
pub fn count_row_semistandard(shape: &Partition, m: u32) -> u128 {
    if m == 0 {
        return if shape.size() == 0 { 1 } else { 0 };
    }
    shape.parts().iter().map(|&p| binomial(p as u64 + m as u64 - 1, p as u64)).product()
}

/// `|CSYT(λ, m)| = Π_j C(m, λ'_j)`.
pub fn count_column_standard(shape: &Partition, m: u32) -> u128 {
    shape
        .conjugate()
        .parts()
        .iter()
        .map(|&c| if c as u64 > m as u64 { 0 } else { binomial(m as u64, c as u64) })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        for n in 0..=8 {
            for lam in Partition::all_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("2,2".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!(p(&[2, 1]).part(3), 0);
    }

    fn brute(shape: &Partition, m: u32, class: TableauClass) -> Vec<Tableau> {
        let n = shape.size() as u32;
        let mut out = Vec::new();
        for code in 0..m.pow(n) {
            let mut e = Vec::new();
            let mut c = code;
            for _ in 0..n {
                e.push(c % m + 1);
                c /= m;
            }
            e.reverse();
            let tab = Tableau::from_entries(shape.clone(), e).unwrap();
            if tab.is_class(class) {
                out.push(tab);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(&p(&[2, 2]), 2, TableauClass::Semistandard), vec![t(&[&[1, 1], &[2, 2]])]);
        assert_eq!(
            enumerate(&p(&[2, 1]), 2, TableauClass::Semistandard),
            vec![t(&[&[1, 1], &[2]]), t(&[&[1, 2], &[2]])]
        );
        assert!(enumerate(&p(&[1, 1, 1]), 2, TableauClass::ColumnStandard).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        use TableauClass::*;
        for lam in Partition::all_up_to(4) {
            for m in 1..=3 {
                for class in [All, RowSemistandard, ColumnStandard, Semistandard] {
                    let got = enumerate(&lam, m, class);
                    assert_eq!(got, brute(&lam, m, class), "{lam} m={m} {class:?}");
                }
                assert_eq!(enumerate(&lam, m, RowSemistandard).len() as u128, count_row_semistandard(&lam, m));
                assert_eq!(enumerate(&lam, m, ColumnStandard).len() as u128, count_column_standard(&lam, m));
            }
        }
    }

    #[test]
    fn column_order_examples() {
        let a = t(&[&[1, 1], &[2, 2]]);
        let b = t(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.compare_columns(&a).unwrap(), OrderVerdict::Incomparable);
        assert_eq!(a.compare_columns(&b).unwrap(), OrderVerdict::Incomparable);
        assert_eq!(t(&[&[1, 2]]).compare_columns(&t(&[&[2, 1]])).unwrap(), OrderVerdict::Less);
        assert_eq!(a.compare_columns(&t(&[&[1, 2]])), Err(Error::ShapeMismatch));
    }

    #[test]
    fn row_order_examples() {
        let a = t(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.compare_rows(&a).unwrap(), OrderVerdict::Incomparable);
        assert_eq!(a.compare_rows(&t(&[&[1, 2], &[1, 2]])).unwrap(), OrderVerdict::Incomparable);
        assert_eq!(t(&[&[2], &[1]]).compare_rows(&t(&[&[1], &[2]])).unwrap(), OrderVerdict::Greater);
    }

    #[test]
    fn orders_are_trichotomous_and_antisymmetric() {
        for lam in Partition::all_up_to(4) {
            let all = enumerate(&lam, 3, TableauClass::All);
            for a in all.iter().step_by(5) {
                for b in &all {
                    let c = a.compare_columns(b).unwrap();
                    let c_rev = b.compare_columns(a).unwrap();
                    let flipped = match c {
                        OrderVerdict::Less => OrderVerdict::Greater,
                        OrderVerdict::Greater => OrderVerdict::Less,
                        OrderVerdict::Incomparable => OrderVerdict::Incomparable,
                    };
                    assert_eq!(c_rev, flipped);
                    let same_cols = (1..=lam.num_cols()).all(|j| {
                        let (mut x, mut y) = (a.column(j), b.column(j));
                        x.sort();
                        y.sort();
                        x == y
                    });
                    assert_eq!(c == OrderVerdict::Incomparable, same_cols);
                    let r = a.compare_rows(b).unwrap();
                    assert_eq!(r == OrderVerdict::Incomparable, a.sort_rows() == b.sort_rows());
                }
            }
        }
    }

    #[test]
    fn sorting_rows() {
        assert_eq!(t(&[&[2, 1], &[1, 2]]).sort_rows(), t(&[&[1, 2], &[1, 2]]));
        let ss = t(&[&[1, 2, 2], &[3, 3]]);
        assert_eq!(ss.sort_rows(), ss);
        let col = t(&[&[3], &[1], &[2]]);
        assert_eq!(col.sort_rows(), col);
    }

    #[test]
    fn sorting_columns() {
        // col 1 = (2,1) needs one swap, col 2 = (1,2) is already sorted
        assert_eq!(t(&[&[2, 1], &[1, 2]]).sort_columns(), Some((-1, t(&[&[1, 1], &[2, 2]]))));
        assert_eq!(t(&[&[1, 2], &[1, 3]]).sort_columns(), None);
        let cs = t(&[&[1, 1], &[2, 3]]);
        assert_eq!(cs.sort_columns(), Some((1, cs.clone())));
        assert_eq!(t(&[&[3], &[2], &[1]]).sort_columns(), Some((-1, t(&[&[1], &[2], &[3]]))));
    }

    #[test]
    fn tableau_json_matches_figure_layout() {
        let x = t(&[&[1, 2, 2], &[3, 3]]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"shape":[3,2],"rows":[[1,2,2],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[2],"rows":[[1]]}"#).is_err());
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[1],"rows":[[0]]}"#).is_err());
    }
}
