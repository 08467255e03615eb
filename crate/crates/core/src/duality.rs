//! The action of `GL(V)` through entries, equivariance of `Λ` and `e`, and the
//! duality between semistandard polytabloids and copolytabloids.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::coeffs::{LinComb, Ring, Scalar};
use crate::error::{Error, Result};
use crate::linalg;
use crate::powers::{
    expand, sym_lower_coords, ColumnTabloidElement, Element, RowTabloid, Space, SymLower,
    SymLowerElement, Tensor, TensorElement, Wedge,
};
use crate::schur::{polytabloid, polytabloid_map};
use crate::tableaux::{enumerate, Partition, Tableau, TableauClass};
use crate::weyl::{copolytabloid, lambda_map};

/// An invertible `m × m` matrix; column `b` is the image of basis vector `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryMatrix {
    #[serde(serialize_with = "ser_ring")]
    ring: Ring,
    rows: Vec<Vec<Scalar>>,
}

fn ser_ring<S: serde::Serializer>(r: &Ring, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl EntryMatrix {
    pub fn new(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<EntryMatrix> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix("matrix must be square and nonempty".into()));
        }
        if rows.iter().flatten().any(|c| c.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let g = EntryMatrix { ring, rows };
        if g.determinant().inverse().is_none() {
            return Err(Error::InvalidMatrix(format!("determinant {} is not a unit in {ring}", g.determinant())));
        }
        Ok(g)
    }

    pub fn from_ints(ring: Ring, rows: &[Vec<i64>]) -> Result<EntryMatrix> {
        EntryMatrix::new(ring, rows.iter().map(|r| r.iter().map(|&v| ring.from_int(v)).collect()).collect())
    }

    pub fn identity(ring: Ring, m: usize) -> EntryMatrix {
        EntryMatrix::permutation(ring, &(0..m).collect::<Vec<_>>())
    }

    /// The matrix sending basis vector `b` to `perm[b]` (0-based).
    pub fn permutation(ring: Ring, perm: &[usize]) -> EntryMatrix {
        let m = perm.len();
        let mut rows = vec![vec![ring.zero(); m]; m];
        for (b, &a) in perm.iter().enumerate() {
            rows[a][b] = ring.one();
        }
        EntryMatrix { ring, rows }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `g[a][b]`, 1-based.
    pub fn get(&self, a: u32, b: u32) -> &Scalar {
        &self.rows[a as usize - 1][b as usize - 1]
    }

    /// Expansion by minors over column subsets; valid in any commutative ring.
    pub fn determinant(&self) -> Scalar {
        let m = self.size();
        let mut d = vec![self.ring.zero(); 1 << m];
        d[0] = self.ring.one();
        for mask in 1usize..1 << m {
            let k = mask.count_ones() as usize - 1;
            let mut acc = self.ring.zero();
            for j in (0..m).filter(|j| mask >> j & 1 == 1) {
                let above = (mask >> (j + 1)).count_ones();
                let term = &self.rows[k][j] * &d[mask & !(1 << j)];
                acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            d[mask] = acc;
        }
        d[(1 << m) - 1].clone()
    }

    /// `self · other`, which acts as `self` after `other`.
    pub fn mul(&self, other: &EntryMatrix) -> EntryMatrix {
        let m = self.size();
        let rows = (0..m)
            .map(|a| {
                (0..m).fold(vec![self.ring.zero(); m], |mut row, k| {
                    for (b, slot) in row.iter_mut().enumerate() {
                        *slot = &*slot + &(&self.rows[a][k] * &other.rows[k][b]);
                    }
                    row
                })
            })
            .collect();
        EntryMatrix { ring: self.ring, rows }
    }
}

impl fmt::Display for EntryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Every permutation matrix of size `m`.
pub fn permutation_matrices(ring: Ring, m: usize) -> Vec<EntryMatrix> {
    let mut perm: Vec<u32> = (0..m as u32).collect();
    let mut out = Vec::new();
    loop {
        out.push(EntryMatrix::permutation(ring, &perm.iter().map(|&k| k as usize).collect::<Vec<_>>()));
        if !crate::places::next_permutation(&mut perm) {
            return out;
        }
    }
}

/// A random integer matrix of determinant ±1: a product of `steps`
/// elementary shears with a random permutation and sign pattern.
pub fn random_unimodular<R: Rng>(ring: Ring, m: usize, steps: usize, rng: &mut R) -> EntryMatrix {
    let mut g: Vec<Vec<i64>> = (0..m).map(|a| (0..m).map(|b| i64::from(a == b)).collect()).collect();
    for _ in 0..steps {
        if m < 2 {
            break;
        }
        let a = rng.gen_range(0..m);
        let b = (a + rng.gen_range(1..m)) % m;
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        let src = g[b].clone();
        for (x, y) in g[a].iter_mut().zip(src) {
            *x += k * y;
        }
    }
    for row in g.iter_mut() {
        if rng.gen_bool(0.5) {
            row.iter_mut().for_each(|v| *v = -*v);
        }
    }
    let mut perm: Vec<usize> = (0..m).collect();
    for k in (1..m).rev() {
        perm.swap(k, rng.gen_range(0..=k));
    }
    let rows = perm.iter().map(|&p| g[p].clone()).collect::<Vec<_>>();
    EntryMatrix::from_ints(ring, &rows).expect("unimodular by construction")
}

/// `g · t` as a tensor: each entry `b` becomes `Σ_a g[a][b] a`, expanded.
pub fn act_on_tableau(t: &Tableau, g: &EntryMatrix) -> Result<TensorElement> {
    let m = g.size() as u32;
    if t.max_entry() > m {
        return Err(Error::InvalidMatrix(format!("{t} has entries above the matrix size {m}")));
    }
    let ring = g.ring();
    let columns: Vec<Vec<(u32, Scalar)>> = (1..=m)
        .map(|b| (1..=m).filter(|&a| !g.get(a, b).is_zero()).map(|a| (a, g.get(a, b).clone())).collect())
        .collect();
    let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::with_capacity(t.entries().len()), ring.one())];
    for &b in t.entries() {
        partial = partial
            .into_iter()
            .flat_map(|(w, c)| {
                columns[b as usize - 1].iter().map(move |(a, x)| {
                    let mut w = w.clone();
                    w.push(*a);
                    (w, &c * x)
                })
            })
            .collect();
    }
    let mut out = TensorElement::zero(ring);
    for (w, c) in partial {
        out.add_tableau(&Tableau::from_entries(t.shape().clone(), w)?, c);
    }
    Ok(out)
}

fn lift<S: Space>(x: &Element<S>, g: &EntryMatrix) -> Result<Element<S>> {
    if x.ring() == g.ring() {
        Ok(x.clone())
    } else {
        x.change_ring(g.ring()).map_err(|_| Error::RingMismatch)
    }
}

/// Elements on which the entrywise action is defined.
pub trait EntryAction: Sized {
    fn entry_action(&self, g: &EntryMatrix) -> Result<Self>;
}

fn act_canonical<S: Space>(x: &Element<S>, g: &EntryMatrix) -> Result<Element<S>> {
    let x = lift(x, g)?;
    let mut out = Element::<S>::zero(g.ring());
    for (t, c) in x.iter() {
        for (u, d) in act_on_tableau(t, g)?.iter() {
            out.add_tableau(u, c * d);
        }
    }
    Ok(out)
}

impl EntryAction for Element<Tensor> {
    fn entry_action(&self, g: &EntryMatrix) -> Result<Self> {
        act_canonical(self, g)
    }
}

impl EntryAction for Element<RowTabloid> {
    fn entry_action(&self, g: &EntryMatrix) -> Result<Self> {
        act_canonical(self, g)
    }
}

impl EntryAction for Element<Wedge> {
    fn entry_action(&self, g: &EntryMatrix) -> Result<Self> {
        act_canonical(self, g)
    }
}

impl EntryAction for Element<SymLower> {
    fn entry_action(&self, g: &EntryMatrix) -> Result<Self> {
        sym_lower_coords(&expand(&lift(self, g)?).entry_action(g)?)
    }
}

pub fn entry_action<X: EntryAction>(x: &X, g: &EntryMatrix) -> Result<X> {
    x.entry_action(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    LambdaMap,
    PolytabloidMap,
}

/// The first basis label of the domain on which `map ∘ g ≠ g ∘ map`.
pub fn equivariance_counterexample(shape: &Partition, m: u32, g: &EntryMatrix, which: Which) -> Result<Option<Tableau>> {
    if g.size() != m as usize {
        return Err(Error::InvalidMatrix(format!("matrix has size {}, expected {m}", g.size())));
    }
    let ring = g.ring();
    match which {
        Which::LambdaMap => {
            for t in enumerate(shape, m, TableauClass::RowSemistandard) {
                let x = SymLowerElement::basis(ring, &t);
                if lambda_map(&x.entry_action(g)?) != lambda_map(&x).entry_action(g)? {
                    return Ok(Some(t));
                }
            }
        }
        Which::PolytabloidMap => {
            for u in enumerate(shape, m, TableauClass::ColumnStandard) {
                let x = ColumnTabloidElement::basis(ring, &u);
                if polytabloid_map(&x.entry_action(g)?) != polytabloid_map(&x).entry_action(g)? {
                    return Ok(Some(u));
                }
            }
        }
    }
    Ok(None)
}

pub fn equivariance_check(shape: &Partition, m: u32, g: &EntryMatrix, which: Which) -> Result<bool> {
    Ok(equivariance_counterexample(shape, m, g, which)?.is_none())
}

/// `ψ(e^∨(⌊t⌋^∨))`: pair the functional dual to `⌊t⌋` with `e(u)` for every
/// column-standard `u` and collect `Σ ⟨⌊t⌋^∨, e(u)⟩ |u|`.
pub fn pairing_image(t: &Tableau, m: u32) -> ColumnTabloidElement {
    let key = t.sort_rows();
    let ring = Ring::Integers;
    let mut out = ColumnTabloidElement::zero(ring);
    for u in enumerate(t.shape(), m, TableauClass::ColumnStandard) {
        let c = polytabloid(&u).coeff(&key);
        if !c.is_zero() {
            out.add_tableau(&u, c);
        }
    }
    out
}

/// A semistandard `s` where the functional dual to `e(s)` in the
/// semistandard polytabloid basis does not map to `ə(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualBasisWitness {
    pub shape: Partition,
    pub entries: u32,
    pub tableau: Tableau,
    pub dual_of_polytabloid: ColumnTabloidElement,
    pub copolytabloid: ColumnTabloidElement,
}

/// `ψ(e^∨(e(s)^∨)) = Σ_u c_s(u)|u|` where `e(u) = Σ_s c_s(u) e(s)` over ℚ.
pub fn dual_of_polytabloid(shape: &Partition, m: u32) -> Vec<(Tableau, ColumnTabloidElement)> {
    let ssyt = enumerate(shape, m, TableauClass::Semistandard);
    let basis: Vec<LinComb<Tableau>> = ssyt.iter().map(|s| polytabloid(s).into_lincomb()).collect();
    let mut images: Vec<ColumnTabloidElement> = vec![ColumnTabloidElement::zero(Ring::Rationals); ssyt.len()];
    for u in enumerate(shape, m, TableauClass::ColumnStandard) {
        let coords = linalg::solve_rational(&basis, &polytabloid(&u).into_lincomb()).expect("e(u) lies in the span");
        for (k, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                images[k].add_tableau(&u, c);
            }
        }
    }
    ssyt.into_iter().zip(images).collect()
}

/// Searches the given instances for a [`DualBasisWitness`].
pub fn find_dual_basis_witness(instances: &[(Partition, u32)]) -> Option<DualBasisWitness> {
    instances.iter().find_map(|(shape, m)| {
        dual_of_polytabloid(shape, *m).into_iter().find_map(|(s, dual)| {
            let co = copolytabloid(&s).change_ring(Ring::Rationals).expect("integral");
            (dual != co).then(|| DualBasisWitness {
                shape: shape.clone(),
                entries: *m,
                tableau: s,
                dual_of_polytabloid: dual,
                copolytabloid: co,
            })
        })
    })
}
