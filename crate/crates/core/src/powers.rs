//! The tensor power and the three spaces built on it: row tabloids
//! (`Sym^λ`), row-symmetrised tensors (`Sym_λ`) and column tabloids
//! (`Λ^{λ'}`).
//!
//! Each space is a [`LinComb`] of tableaux whose labels are kept in the
//! space's canonical form: row-sorted for `Sym^λ` and `Sym_λ`, column-sorted
//! (with the sign absorbed) for `Λ^{λ'}`, arbitrary for the tensor power. A
//! `Sym_λ` element with coordinates `a_t` stands for `Σ a_t · rsym(t)`.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::{LinComb, Ring, Scalar};
use crate::error::{Error, Result};
use crate::places::row_orbit;
use crate::tableaux::Tableau;

pub trait Space: Clone + Copy + fmt::Debug + Default + PartialEq + Eq + Send + Sync + 'static {
    /// JSON tag.
    const TAG: &'static str;

    /// Canonical label for `t` together with a sign, or `None` if `t`
    /// represents zero in this space.
    fn canonical(t: &Tableau) -> Option<(i64, Tableau)>;
}

/// `V^{⊗n}`, with tableaux as pure tensors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tensor;

/// `Sym^λ V`, labelled by row-sorted representatives `⌊t⌋`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RowTabloid;

/// `Sym_λ V` in the basis `rsym(t)`, `t` row semistandard.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymLower;

/// `Λ^{λ'} V`, labelled by column-standard `|t|`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Wedge;

impl Space for Tensor {
    const TAG: &'static str = "tensor";
    fn canonical(t: &Tableau) -> Option<(i64, Tableau)> {
        Some((1, t.clone()))
    }
}

impl Space for RowTabloid {
    const TAG: &'static str = "sym_upper";
    fn canonical(t: &Tableau) -> Option<(i64, Tableau)> {
        Some((1, t.sort_rows()))
    }
}

impl Space for SymLower {
    const TAG: &'static str = "sym_lower";
    fn canonical(t: &Tableau) -> Option<(i64, Tableau)> {
        Some((1, t.sort_rows()))
    }
}

impl Space for Wedge {
    const TAG: &'static str = "wedge";
    fn canonical(t: &Tableau) -> Option<(i64, Tableau)> {
        t.sort_columns()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<S: Space> {
    value: LinComb<Tableau>,
    space: PhantomData<S>,
}

pub type TensorElement = Element<Tensor>;
pub type RowTabloidElement = Element<RowTabloid>;
pub type SymLowerElement = Element<SymLower>;
pub type ColumnTabloidElement = Element<Wedge>;

impl<S: Space> Element<S> {
    pub(crate) fn wrap(value: LinComb<Tableau>) -> Self {
        Element { value, space: PhantomData }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::wrap(LinComb::zero(ring))
    }

    /// The basis element labelled by `t`, canonicalized (so it may come back
    /// negated, or as zero).
    pub fn basis(ring: Ring, t: &Tableau) -> Self {
        let mut x = Self::zero(ring);
        x.add_tableau(t, ring.one());
        x
    }

    /// Adds `c · [t]`, canonicalizing `t` first.
    pub fn add_tableau(&mut self, t: &Tableau, c: Scalar) {
        if let Some((sign, label)) = S::canonical(t) {
            let c = if sign < 0 { -c } else { c };
            self.value.add_term(label, c);
        }
    }

    /// Rewrites every label into canonical form.
    pub fn canonicalize(value: &LinComb<Tableau>) -> Self {
        Self::wrap(value.map_signed(|t| S::canonical(t)))
    }

    /// Wraps `value`, rejecting labels that are not canonical for `S`.
    pub fn from_lincomb(value: LinComb<Tableau>) -> Result<Self> {
        let mut shape = None;
        for t in value.labels() {
            if *shape.get_or_insert(t.shape()) != t.shape() {
                return Err(Error::ShapeMismatch);
            }
            match S::canonical(t) {
                Some((1, ref c)) if c == t => {}
                _ => return Err(Error::NonCanonicalLabel { space: S::TAG, label: t.short() }),
            }
        }
        Ok(Self::wrap(value))
    }

    pub fn ring(&self) -> Ring {
        self.value.ring()
    }

    pub fn as_lincomb(&self) -> &LinComb<Tableau> {
        &self.value
    }

    pub fn into_lincomb(self) -> LinComb<Tableau> {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, &Scalar)> {
        self.value.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Tableau> {
        self.value.labels()
    }

    pub fn coeff(&self, t: &Tableau) -> Scalar {
        self.value.coeff(t)
    }

    pub fn change_ring(&self, target: Ring) -> Result<Self> {
        Ok(Self::wrap(self.value.change_ring(target)?))
    }

    pub fn combine(a: &Self, b: &Self, ca: &Scalar, cb: &Scalar) -> Result<Self> {
        Ok(Self::wrap(LinComb::combine(&a.value, &b.value, ca, cb)?))
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
        self.value.add_scaled(&other.value, c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::wrap(self.value.scale(c))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::wrap(self.value.scale_int(k))
    }

    /// Linear extension of a per-label map into another space.
    pub fn map<T: Space, F: FnMut(&Tableau) -> Element<T>>(&self, mut f: F) -> Element<T> {
        Element::wrap(self.value.map(|t| f(t).value))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("elements always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl<S: Space> Add for &Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: &Element<S>) -> Element<S> {
        Element::wrap(&self.value + &rhs.value)
    }
}

impl<S: Space> Sub for &Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: &Element<S>) -> Element<S> {
        Element::wrap(&self.value - &rhs.value)
    }
}

impl<S: Space> Neg for &Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        Element::wrap(-&self.value)
    }
}

#[derive(Serialize)]
struct ElementOut<'a> {
    space: &'static str,
    #[serde(flatten)]
    value: &'a LinComb<Tableau>,
}

#[derive(Deserialize)]
struct ElementIn {
    space: String,
    #[serde(flatten)]
    value: LinComb<Tableau>,
}

impl<S: Space> Serialize for Element<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        ElementOut { space: S::TAG, value: &self.value }.serialize(s)
    }
}

impl<'de, S: Space> Deserialize<'de> for Element<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let e = ElementIn::deserialize(d)?;
        if e.space != S::TAG {
            return Err(D::Error::custom(format!("expected space {:?}, found {:?}", S::TAG, e.space)));
        }
        Element::from_lincomb(e.value).map_err(D::Error::custom)
    }
}

/// `rsym(t)`: every distinct row rearrangement of `t` once, over ℤ.
pub fn rsym(t: &Tableau) -> TensorElement {
    let ring = Ring::Integers;
    Element::wrap(LinComb::from_terms(ring, row_orbit(t).into_iter().map(|u| (u, ring.one()))))
}

/// The quotient `V^{⊗n} → Sym^λ V`.
pub fn to_row_tabloid(x: &TensorElement) -> RowTabloidElement {
    RowTabloidElement::canonicalize(&x.value)
}

/// The projection `V^{⊗n} → Λ^{λ'} V`.
pub fn wedge_project(x: &TensorElement) -> ColumnTabloidElement {
    ColumnTabloidElement::canonicalize(&x.value)
}

/// Coordinates of `x ∈ Sym_λ` in the `rsym` basis: the coefficient of each
/// row-semistandard label of `x`, with a residual check for membership.
pub fn sym_lower_coords(x: &TensorElement) -> Result<SymLowerElement> {
    let coords = LinComb::from_terms(
        x.ring(),
        x.iter().filter(|(t, _)| t.is_row_semistandard()).map(|(t, c)| (t.clone(), c.clone())),
    );
    let coords = SymLowerElement::wrap(coords);
    if &expand(&coords) != x {
        return Err(Error::NotInSymLower);
    }
    Ok(coords)
}

/// `Σ a_t · rsym(t)` as a tensor.
pub fn expand(x: &SymLowerElement) -> TensorElement {
    x.map(rsym)
}

impl<S: Space> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn tensor(terms: &[(&[&[u32]], i64)]) -> TensorElement {
        let z = Ring::Integers;
        let mut x = TensorElement::zero(z);
        for (rows, c) in terms {
            x.add_tableau(&t(rows), z.from_int(*c));
        }
        x
    }

    #[test]
    fn rsym_examples() {
        assert_eq!(rsym(&t(&[&[1, 1], &[2, 2]])), tensor(&[(&[&[1, 1], &[2, 2]], 1)]));
        assert_eq!(
            rsym(&t(&[&[2, 1], &[1, 2]])),
            tensor(&[
                (&[&[2, 1], &[1, 2]], 1),
                (&[&[1, 2], &[1, 2]], 1),
                (&[&[2, 1], &[2, 1]], 1),
                (&[&[1, 2], &[2, 1]], 1),
            ])
        );
        assert_eq!(rsym(&t(&[&[1, 2], &[3]])), tensor(&[(&[&[1, 2], &[3]], 1), (&[&[2, 1], &[3]], 1)]));
    }

    #[test]
    fn row_tabloid_projection() {
        let z = Ring::Integers;
        let x = to_row_tabloid(&rsym(&t(&[&[2, 1], &[1, 2]])));
        assert_eq!(x.as_lincomb(), &LinComb::term(z, t(&[&[1, 2], &[1, 2]]), z.from_int(4)));
        let s = t(&[&[1, 2], &[3]]);
        assert_eq!(to_row_tabloid(&TensorElement::basis(z, &s)), RowTabloidElement::basis(z, &s));
        let y = rsym(&s);
        assert!(to_row_tabloid(&(&y - &y)).is_zero());
    }

    #[test]
    fn wedge_projection() {
        let z = Ring::Integers;
        assert!(wedge_project(&TensorElement::basis(z, &t(&[&[1, 2], &[1, 3]]))).is_zero());
        let w = wedge_project(&TensorElement::basis(z, &t(&[&[2, 1], &[1, 2]])));
        assert_eq!(w.as_lincomb(), &LinComb::term(z, t(&[&[1, 1], &[2, 2]]), z.from_int(-1)));
        let cs = t(&[&[1, 1], &[2, 3]]);
        assert_eq!(wedge_project(&TensorElement::basis(z, &cs)).as_lincomb(), &LinComb::basis(z, cs));
    }

    #[test]
    fn sym_lower_coordinates() {
        let z = Ring::Integers;
        let s = t(&[&[1, 2], &[1, 3]]);
        assert_eq!(sym_lower_coords(&rsym(&s)).unwrap(), SymLowerElement::basis(z, &s));
        let rel = &rsym(&t(&[&[1, 1], &[2, 2]])).scale_int(2) + &rsym(&t(&[&[2, 1], &[1, 2]]));
        let coords = sym_lower_coords(&rel).unwrap();
        let expected = LinComb::from_terms(
            z,
            [(t(&[&[1, 1], &[2, 2]]), z.from_int(2)), (t(&[&[1, 2], &[1, 2]]), z.one())],
        );
        assert_eq!(coords.as_lincomb(), &expected);
        let bare = TensorElement::basis(z, &t(&[&[1, 2], &[1, 2]]));
        assert_eq!(sym_lower_coords(&bare), Err(Error::NotInSymLower));
    }

    #[test]
    fn rsym_is_constant_on_row_classes() {
        use crate::tableaux::{enumerate, Partition, TableauClass};
        for lam in Partition::all_up_to(5) {
            for x in enumerate(&lam, 3, TableauClass::All) {
                assert_eq!(rsym(&x), rsym(&x.sort_rows()));
            }
        }
    }

    #[test]
    fn sym_lower_canonicalizes_bare_labels() {
        let z = Ring::Integers;
        let x = SymLowerElement::basis(z, &t(&[&[2, 1], &[1, 2]]));
        assert_eq!(x.labels().next().unwrap(), &t(&[&[1, 2], &[1, 2]]));
        let raw = LinComb::basis(z, t(&[&[2, 1], &[1, 2]]));
        assert!(matches!(SymLowerElement::from_lincomb(raw), Err(Error::NonCanonicalLabel { .. })));
    }

    #[test]
    fn element_json_carries_space_tag() {
        let z = Ring::Integers;
        let x = ColumnTabloidElement::basis(z, &t(&[&[2, 1], &[1, 2]]));
        let s = x.to_json();
        assert_eq!(
            s,
            r#"{"space":"wedge","ring":"z","terms":[{"coeff":"-1","label":{"shape":[2,2],"rows":[[1,1],[2,2]]}}]}"#
        );
        assert_eq!(ColumnTabloidElement::from_json(&s).unwrap(), x);
        assert!(TensorElement::from_json(&s).is_err());
    }
}
