//! Exact coefficient rings and canonical sparse linear combinations.
//!
//! Three rings are supported: the integers (arbitrary precision), the
//! rationals (always reduced, positive denominator) and `ℤ/n` for `n ≥ 2`
//! (canonical residues in `[0, n)`). Every element of every module in this
//! crate is a [`LinComb`] over some label type.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl Ring {
    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("zmod:{n} needs n >= 2")));
        }
        Ok(Ring::IntegersMod(n))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// The canonical ring map ℤ → R.
    pub fn from_int<I: Into<BigInt>>(&self, k: I) -> Scalar {
        let k: BigInt = k.into();
        match *self {
            Ring::Integers => Scalar::Int(k),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(k)),
            Ring::IntegersMod(n) => {
                let r = k.mod_floor(&BigInt::from(n));
                Scalar::Mod { value: r.to_u64().expect("residue fits u64"), modulus: n }
            }
        }
    }

    /// Parse a coefficient string: a decimal integer, or `p/q` over ℚ.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad coefficient {s:?} for ring {self}"));
        match *self {
            Ring::Rationals => {
                if let Some((num, den)) = s.split_once('/') {
                    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                    if den.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(num, den)))
                } else {
                    let k: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(self.from_int(k))
                }
            }
            _ => {
                let k: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_int(k))
            }
        }
    }

    /// ℚ, or ℤ/p with p prime.
    pub fn is_field(&self) -> bool {
        match *self {
            Ring::Integers => false,
            Ring::Rationals => true,
            Ring::IntegersMod(n) => is_prime(n),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Ring::Integers | Ring::Rationals => 0,
            Ring::IntegersMod(n) => n,
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "z"),
            Ring::Rationals => write!(f, "q"),
            Ring::IntegersMod(n) => write!(f, "zmod:{n}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        match s.trim() {
            "z" | "Z" => Ok(Ring::Integers),
            "q" | "Q" => Ok(Ring::Rationals),
            other => {
                let n = other
                    .strip_prefix("zmod:")
                    .ok_or_else(|| Error::InvalidRing(other.to_string()))?
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidRing(other.to_string()))?;
                Ring::integers_mod(n)
            }
        }
    }
}

/// A ring element. Always in canonical form for its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Integers,
            Scalar::Rat(_) => Ring::Rationals,
            Scalar::Mod { modulus, .. } => Ring::IntegersMod(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(k) => k.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(k) => k.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// The integer this element equals, when it lies in ℤ itself (for ℤ/n the
    /// canonical residue).
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(k) => Some(k.clone()),
            Scalar::Rat(q) => q.is_integer().then(|| q.to_integer()),
            Scalar::Mod { value, .. } => Some(BigInt::from(*value)),
        }
    }

    /// True when the element is in the image of the canonical map ℤ → R.
    pub fn is_integral(&self) -> bool {
        self.to_integer().is_some()
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Int(k) => (k.abs().is_one()).then(|| Scalar::Int(k.clone())),
            Scalar::Rat(q) => (!q.is_zero()).then(|| Scalar::Rat(q.recip())),
            Scalar::Mod { value, modulus } => {
                let e = (*value as i128).extended_gcd(&(*modulus as i128));
                if e.gcd != 1 {
                    return None;
                }
                let inv = e.x.rem_euclid(*modulus as i128) as u64;
                Some(Scalar::Mod { value: inv, modulus: *modulus })
            }
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(self.ring(), other.ring(), "ring mismatch");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(k) => write!(f, "{k}"),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// A finite formal sum `Σ c_L · L` with nonzero coefficients, stored in label
/// order so that equal elements serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<L: Ord> {
    ring: Ring,
    terms: BTreeMap<L, Scalar>,
}

impl<L: Ord + Clone> LinComb<L> {
    pub fn zero(ring: Ring) -> Self {
        LinComb { ring, terms: BTreeMap::new() }
    }

    pub fn term(ring: Ring, label: L, coeff: Scalar) -> Self {
        let mut x = Self::zero(ring);
        x.add_term(label, coeff);
        x
    }

    /// `1 · label`.
    pub fn basis(ring: Ring, label: L) -> Self {
        Self::term(ring, label, ring.one())
    }

    pub fn from_terms<I: IntoIterator<Item = (L, Scalar)>>(ring: Ring, terms: I) -> Self {
        let mut x = Self::zero(ring);
        for (l, c) in terms {
            x.add_term(l, c);
        }
        x
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn coeff(&self, label: &L) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn contains(&self, label: &L) -> bool {
        self.terms.contains_key(label)
    }

    /// Adds `coeff · label` in place. `coeff` must belong to this ring.
    pub fn add_term(&mut self, label: L, coeff: Scalar) {
        assert_eq!(coeff.ring(), self.ring, "ring mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds an integer multiple of `label`, pushed through ℤ → R.
    pub fn add_int(&mut self, label: L, k: i64) {
        let c = self.ring.from_int(k);
        self.add_term(label, c);
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
        if other.ring != self.ring || c.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if c.is_zero() {
            return Ok(());
        }
        for (l, a) in &other.terms {
            self.add_term(l.clone(), a * c);
        }
        Ok(())
    }

    /// `ca · a + cb · b`.
    pub fn combine(a: &Self, b: &Self, ca: &Scalar, cb: &Scalar) -> Result<Self> {
        if a.ring != b.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(a.ring);
        out.add_scaled(a, ca)?;
        out.add_scaled(b, cb)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.ring);
        out.add_scaled(self, c).expect("ring mismatch");
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&self.ring.from_int(k))
    }

    /// Linear extension of a basis map. Images may live in this ring or in ℤ
    /// (in which case they are pushed through the canonical map).
    pub fn map<M: Ord + Clone, F: FnMut(&L) -> LinComb<M>>(&self, mut f: F) -> LinComb<M> {
        let mut out = LinComb::zero(self.ring);
        for (l, c) in &self.terms {
            let image = f(l);
            let image = if image.ring == self.ring {
                image
            } else {
                image.change_ring(self.ring).expect("map image must be integral or in the source ring")
            };
            out.add_scaled(&image, c).expect("ring checked");
        }
        out
    }

    /// Sends each label to `±label'` or to zero.
    pub fn map_signed<M: Ord + Clone, F: FnMut(&L) -> Option<(i64, M)>>(&self, mut f: F) -> LinComb<M> {
        let mut out = LinComb::zero(self.ring);
        for (l, c) in &self.terms {
            if let Some((sign, m)) = f(l) {
                let c = if sign < 0 { -c } else { c.clone() };
                out.add_term(m, c);
            }
        }
        out
    }

    /// Pushes integral coefficients through ℤ → `target`.
    pub fn change_ring(&self, target: Ring) -> Result<Self> {
        if self.ring == target {
            return Ok(self.clone());
        }
        if self.ring != Ring::Integers {
            return Err(Error::NotIntegral);
        }
        let mut out = Self::zero(target);
        for (l, c) in &self.terms {
            let Scalar::Int(k) = c else { unreachable!() };
            out.add_term(l.clone(), target.from_int(k.clone()));
        }
        Ok(out)
    }

    pub fn into_terms(self) -> BTreeMap<L, Scalar> {
        self.terms
    }
}

impl<L: Ord + Clone> Add for &LinComb<L> {
    type Output = LinComb<L>;
    fn add(self, rhs: &LinComb<L>) -> LinComb<L> {
        let one = self.ring.one();
        LinComb::combine(self, rhs, &one, &one).expect("ring mismatch")
    }
}

impl<L: Ord + Clone> Sub for &LinComb<L> {
    type Output = LinComb<L>;
    fn sub(self, rhs: &LinComb<L>) -> LinComb<L> {
        let one = self.ring.one();
        LinComb::combine(self, rhs, &one, &-&one).expect("ring mismatch")
    }
}

impl<L: Ord + Clone> Neg for &LinComb<L> {
    type Output = LinComb<L>;
    fn neg(self) -> LinComb<L> {
        self.scale_int(-1)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<L> {
    coeff: String,
    label: L,
}

#[derive(Serialize, Deserialize)]
struct LinCombRepr<L> {
    ring: String,
    terms: Vec<TermRepr<L>>,
}

impl<L: Ord + Clone + Serialize> Serialize for LinComb<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LinCombRepr {
            ring: self.ring.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermRepr { coeff: c.to_string(), label: l })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, L: Ord + Clone + DeserializeOwned> Deserialize<'de> for LinComb<L> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = LinCombRepr::<L>::deserialize(d)?;
        let ring: Ring = repr.ring.parse().map_err(D::Error::custom)?;
        let mut out = LinComb::zero(ring);
        for t in repr.terms {
            let c = ring.parse_scalar(&t.coeff).map_err(D::Error::custom)?;
            out.add_term(t.label, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(ring: Ring) -> LinComb<u32> {
        LinComb::from_terms(ring, [(1, ring.from_int(2)), (5, ring.from_int(-1))])
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = Ring::Integers;
        let y = LinComb::combine(&x(r), &x(r), &r.one(), &r.from_int(-1)).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn zero_operand() {
        let r = Ring::Rationals;
        let c = r.parse_scalar("3/2").unwrap();
        let y = LinComb::combine(&x(r), &LinComb::zero(r), &c, &c).unwrap();
        assert_eq!(y, x(r).scale(&c));
    }

    #[test]
    fn two_plus_one_vanishes_mod_three() {
        let r = Ring::IntegersMod(3);
        let y = LinComb::combine(&x(r), &x(r), &r.from_int(2), &r.one()).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let e = LinComb::combine(&x(Ring::Integers), &x(Ring::Rationals), &Ring::Integers.one(), &Ring::Integers.one());
        assert_eq!(e.unwrap_err().to_string(), "ring mismatch");
    }

    #[test]
    fn map_collapses_colliding_labels() {
        let r = Ring::Integers;
        let uv = LinComb::from_terms(r, [(1u32, r.one()), (2, r.one())]);
        let w = uv.map(|_| LinComb::basis(Ring::Integers, 'w'));
        assert_eq!(w, LinComb::term(r, 'w', r.from_int(2)));
        assert!(LinComb::<u32>::zero(r).map(|&l| LinComb::basis(r, l)).is_zero());
        assert_eq!(x(r).map(|&l| LinComb::basis(r, l)), x(r));
    }

    #[test]
    fn change_ring_examples() {
        let z = Ring::Integers;
        let three_w = LinComb::term(z, 'w', z.from_int(3));
        assert!(three_w.change_ring(Ring::IntegersMod(3)).unwrap().is_zero());
        let two_w = LinComb::term(z, 'w', z.from_int(2));
        assert_eq!(
            two_w.change_ring(Ring::Rationals).unwrap(),
            LinComb::term(Ring::Rationals, 'w', Ring::Rationals.from_int(2))
        );
        let m3 = LinComb::term(z, 'w', z.from_int(-3));
        let z2 = Ring::IntegersMod(2);
        assert_eq!(m3.change_ring(z2).unwrap(), LinComb::basis(z2, 'w'));
        let err = two_w.change_ring(Ring::Rationals).unwrap().change_ring(z2).unwrap_err();
        assert_eq!(err.to_string(), "only integral elements can change ring");
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Ring::Rationals;
        assert_eq!(q.parse_scalar("4/-6").unwrap().to_string(), "-2/3");
        assert_eq!(q.parse_scalar("6/3").unwrap().to_string(), "2");
        assert!(q.parse_scalar("1/0").is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let r = Ring::IntegersMod(5);
        assert_eq!(r.from_int(-1), Scalar::Mod { value: 4, modulus: 5 });
        assert_eq!(r.from_int(2).inverse(), Some(r.from_int(3)));
        assert_eq!(Ring::IntegersMod(4).from_int(2).inverse(), None);
        assert!(Ring::integers_mod(1).is_err());
    }

    #[test]
    fn ring_strings_round_trip() {
        for r in [Ring::Integers, Ring::Rationals, Ring::IntegersMod(7)] {
            assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
        }
        assert!("zmod:x".parse::<Ring>().is_err());
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let r = Ring::Rationals;
        let y = LinComb::from_terms(r, [(9u32, r.parse_scalar("1/2").unwrap()), (3, r.one())]);
        let s = serde_json::to_string(&y).unwrap();
        assert_eq!(s, r#"{"ring":"q","terms":[{"coeff":"1","label":3},{"coeff":"1/2","label":9}]}"#);
        let back: LinComb<u32> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, y);
    }
}
