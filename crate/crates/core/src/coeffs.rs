//! Exact coefficient rings: `Z`, `Z[t]` and `Z[q, q^-1]` where `q` stands for `exp(t)`.
//!
//! All arithmetic is on [`BigInt`] coefficients, so nothing can overflow. Sparse
//! polynomials never store a zero coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// Exponent type of a sparse univariate polynomial. The variable name is tied to
/// the exponent type: nonnegative exponents are powers of `t`, signed ones of `q`.
pub trait Exponent: Copy + Ord + Hash + fmt::Debug + fmt::Display {
    const VAR: &'static str;
    fn zero() -> Self;
    fn checked_add(self, other: Self) -> Option<Self>;
    fn from_i64(e: i64) -> Option<Self>;
    fn to_i64(self) -> i64;
}

impl Exponent for u32 {
    const VAR: &'static str = "t";
    fn zero() -> Self {
        0
    }
    fn checked_add(self, other: Self) -> Option<Self> {
        u32::checked_add(self, other)
    }
    fn from_i64(e: i64) -> Option<Self> {
        u32::try_from(e).ok()
    }
    fn to_i64(self) -> i64 {
        self as i64
    }
}

impl Exponent for i32 {
    const VAR: &'static str = "q";
    fn zero() -> Self {
        0
    }
    fn checked_add(self, other: Self) -> Option<Self> {
        i32::checked_add(self, other)
    }
    fn from_i64(e: i64) -> Option<Self> {
        i32::try_from(e).ok()
    }
    fn to_i64(self) -> i64 {
        self as i64
    }
}

/// Sparse univariate polynomial with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

/// Polynomials in `t`, the coefficient ring of S-equivariant homology.
pub type IntPoly = Poly<u32>;

/// Laurent polynomials in `q = exp(t)`, the coefficient ring of S-equivariant K-homology.
pub type LaurentPoly = Poly<i32>;

impl<E: Exponent> Poly<E> {
    pub fn new() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(coef: impl Into<BigInt>, exp: E) -> Self {
        let mut p = Self::new();
        p.add_term(exp, coef.into());
        p
    }

    pub fn constant(coef: impl Into<BigInt>) -> Self {
        Self::monomial(coef, E::zero())
    }

    /// The variable itself.
    pub fn var() -> Self {
        let one = E::from_i64(1).expect("1 is a valid exponent");
        Self::monomial(1, one)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: E, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (E, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: E) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<E> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<E> {
        self.terms.keys().next_back().copied()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(E::zero())
    }

    /// Sum of all coefficients, i.e. the value at `var = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!([e.to_i64(), integer_to_json(c)]))
            .collect();
        json!({ "var": E::VAR, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let var = v
            .get("var")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("polynomial needs a \"var\" field".into()))?;
        if var != E::VAR {
            return Err(Error::Parse(format!(
                "expected variable {}, found {var}",
                E::VAR
            )));
        }
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("polynomial needs a \"terms\" array".into()))?;
        let mut p = Self::new();
        for t in terms {
            let pair = t
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad term {t}")))?;
            let e = pair[0]
                .as_i64()
                .and_then(E::from_i64)
                .ok_or_else(|| Error::Parse(format!("bad exponent {}", pair[0])))?;
            p.add_term(e, integer_from_json(&pair[1])?);
        }
        Ok(p)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, power: impl Fn(i64) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let e = e.to_i64();
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", power(e))?;
            } else {
                write!(f, "{abs}{}", power(e))?;
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn t() -> Self {
        Self::var()
    }

    /// Value at `t = 0`.
    pub fn at_t_zero(&self) -> BigInt {
        self.constant_term()
    }
}

impl LaurentPoly {
    pub fn q() -> Self {
        Self::var()
    }

    /// `1 - q`, the K-theoretic weight of an equivariant tile.
    pub fn one_minus_q() -> Self {
        Self::from_terms([(0, 1), (1, -1)])
    }

    /// Value at `q = 1`.
    pub fn at_q_one(&self) -> BigInt {
        self.at_one()
    }

    /// Substitute `q = 1 - t` and expand. Only defined without negative powers of `q`.
    pub fn at_q_one_minus_t(&self) -> Result<IntPoly> {
        if let Some(e) = self.min_exponent().filter(|e| *e < 0) {
            return Err(Error::Substitution(format!(
                "q^{e} has no polynomial image under q = 1 - t"
            )));
        }
        let base = IntPoly::from_terms([(0u32, 1), (1u32, -1)]);
        let mut out = IntPoly::new();
        for (e, c) in self.terms() {
            out = out + base.pow(e as u32) * IntPoly::constant(c.clone());
        }
        Ok(out)
    }
}

impl<E: Exponent> fmt::Debug for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: Exponent> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, |e| {
            if e == 1 {
                E::VAR.to_string()
            } else {
                format!("{}^{e}", E::VAR)
            }
        })
    }
}

impl<E: Exponent> Zero for Poly<E> {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent> One for Poly<E> {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl<E: Exponent> Add<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<E: Exponent> Add for Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: Poly<E>) -> Poly<E> {
        &self + &rhs
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<E: Exponent> Neg for Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        -&self
    }
}

impl<E: Exponent> Sub<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: &Poly<E>) -> Poly<E> {
        self + &(-rhs)
    }
}

impl<E: Exponent> Sub for Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: Poly<E>) -> Poly<E> {
        &self - &rhs
    }
}

impl<E: Exponent> Mul<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = Poly::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.checked_add(*e2).expect("exponent overflow");
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Mul for Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: Poly<E>) -> Poly<E> {
        &self * &rhs
    }
}

/// Integer coefficients of the non-equivariant K-homology ring, obtained from the
/// `K^S` ring at `q = 1`. Kept distinct from plain [`Integer`] so that products are
/// taken with the K-theoretic rule rather than the homological one.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KInteger(pub BigInt);

impl fmt::Debug for KInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for KInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for KInteger {
    type Output = KInteger;
    fn add(self, rhs: KInteger) -> KInteger {
        KInteger(self.0 + rhs.0)
    }
}

impl Sub for KInteger {
    type Output = KInteger;
    fn sub(self, rhs: KInteger) -> KInteger {
        KInteger(self.0 - rhs.0)
    }
}

impl Mul for KInteger {
    type Output = KInteger;
    fn mul(self, rhs: KInteger) -> KInteger {
        KInteger(self.0 * rhs.0)
    }
}

impl Neg for KInteger {
    type Output = KInteger;
    fn neg(self) -> KInteger {
        KInteger(-self.0)
    }
}

impl Zero for KInteger {
    fn zero() -> Self {
        KInteger(BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for KInteger {
    fn one() -> Self {
        KInteger(BigInt::one())
    }
}

/// Integers go out as JSON numbers when they fit in an `i64`, otherwise as decimal strings.
pub fn integer_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn integer_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")));
    }
    Err(Error::Parse(format!("expected an integer, found {v}")))
}

/// A coefficient ring the engine can produce expansions over.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Short name of the ring of Schubert classes this coefficient type belongs to.
    const RING: &'static str;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    fn to_latex(&self) -> String;

    /// True when the value prints as a single (possibly signed) term.
    fn is_single_term(&self) -> bool;
}

impl Coefficient for BigInt {
    const RING: &'static str = "H";

    fn to_json(&self) -> Value {
        integer_to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        integer_from_json(v)
    }
    fn to_latex(&self) -> String {
        self.to_string()
    }
    fn is_single_term(&self) -> bool {
        true
    }
}

impl Coefficient for KInteger {
    const RING: &'static str = "K";

    fn to_json(&self) -> Value {
        integer_to_json(&self.0)
    }
    fn from_json(v: &Value) -> Result<Self> {
        integer_from_json(v).map(KInteger)
    }
    fn to_latex(&self) -> String {
        self.0.to_string()
    }
    fn is_single_term(&self) -> bool {
        true
    }
}

impl Coefficient for IntPoly {
    const RING: &'static str = "HS";

    fn to_json(&self) -> Value {
        Poly::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        Poly::from_json(v)
    }
    fn to_latex(&self) -> String {
        latex_poly(self, |e| {
            if e == 1 {
                "t".into()
            } else {
                format!("t^{{{e}}}")
            }
        })
    }
    fn is_single_term(&self) -> bool {
        self.num_terms() <= 1
    }
}

impl Coefficient for LaurentPoly {
    const RING: &'static str = "KS";

    fn to_json(&self) -> Value {
        Poly::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        Poly::from_json(v)
    }
    fn to_latex(&self) -> String {
        latex_poly(self, |e| match e {
            1 => "\\exp(t)".into(),
            -1 => "\\exp(-t)".into(),
            _ => format!("\\exp({e}t)"),
        })
    }
    fn is_single_term(&self) -> bool {
        self.num_terms() <= 1
    }
}

struct Latex<'a, E: Exponent, F: Fn(i64) -> String>(&'a Poly<E>, F);

impl<E: Exponent, F: Fn(i64) -> String> fmt::Display for Latex<'_, E, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, &self.1)
    }
}

fn latex_poly<E: Exponent>(p: &Poly<E>, power: impl Fn(i64) -> String) -> String {
    Latex(p, power).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn ip(terms: &[(u32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn negation_and_products() {
        let one_minus_q = LaurentPoly::one_minus_q();
        assert_eq!(&one_minus_q * &lp(&[(0, -1)]), lp(&[(0, -1), (1, 1)]));
        assert_eq!(&one_minus_q * &LaurentPoly::q(), lp(&[(1, 1), (2, -1)]));
        assert_eq!(ip(&[(2, 1)]) + IntPoly::zero(), ip(&[(2, 1)]));
    }

    #[test]
    fn zero_terms_are_never_stored() {
        let p = lp(&[(0, 1), (1, -1)]) + lp(&[(1, 1)]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p, LaurentPoly::one());
        assert!((ip(&[(3, 2)]) - ip(&[(3, 2)])).is_zero());
        assert_eq!(LaurentPoly::from_terms([(4, 0)]).num_terms(), 0);
    }

    #[test]
    fn substitutions() {
        assert_eq!(LaurentPoly::one_minus_q().at_q_one(), BigInt::zero());
        assert_eq!(lp(&[(0, 1), (1, -1), (2, 1)]).at_q_one(), BigInt::one());
        assert_eq!(
            LaurentPoly::one_minus_q().at_q_one_minus_t().unwrap(),
            IntPoly::t()
        );
        // q^2 -> (1-t)^2 = 1 - 2t + t^2
        assert_eq!(
            lp(&[(2, 1)]).at_q_one_minus_t().unwrap(),
            ip(&[(0, 1), (1, -2), (2, 1)])
        );
        assert!(lp(&[(-1, 1)]).at_q_one_minus_t().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(lp(&[(0, 1), (1, -1), (2, 1)]).to_string(), "1 - q + q^2");
        assert_eq!(lp(&[(1, -1)]).to_string(), "-q");
        assert_eq!(ip(&[(0, 2), (3, -4)]).to_string(), "2 - 4t^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(
            Coefficient::to_latex(&lp(&[(0, 1), (1, -1), (2, 1)])),
            "1 - \\exp(t) + \\exp(2t)"
        );
    }

    #[test]
    fn json_roundtrip_and_shape() {
        let p = lp(&[(0, 1), (1, -1), (2, 1)]);
        let v = Coefficient::to_json(&p);
        assert_eq!(v, json!({"var": "q", "terms": [[0, 1], [1, -1], [2, 1]]}));
        assert_eq!(<LaurentPoly as Coefficient>::from_json(&v).unwrap(), p);
        assert!(<IntPoly as Coefficient>::from_json(&v).is_err());

        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            integer_to_json(&big),
            json!("123456789012345678901234567890")
        );
        assert_eq!(integer_from_json(&json!("-7")).unwrap(), BigInt::from(-7));
        assert_eq!(integer_from_json(&json!(12)).unwrap(), BigInt::from(12));
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i32..4, -5i64..6), 0..4).prop_map(LaurentPoly::from_terms)
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec((0u32..4, -5i64..6), 0..4).prop_map(IntPoly::from_terms)
    }

    fn small_nonneg_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((0i32..4, -5i64..6), 0..4).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn laurent_ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn int_poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn substitutions_are_homomorphisms(a in small_nonneg_laurent(), b in small_nonneg_laurent()) {
            prop_assert_eq!((&a * &b).at_q_one(), a.at_q_one() * b.at_q_one());
            prop_assert_eq!((&a + &b).at_q_one(), a.at_q_one() + b.at_q_one());
            let lhs = (&a * &b).at_q_one_minus_t().unwrap();
            let rhs = a.at_q_one_minus_t().unwrap() * b.at_q_one_minus_t().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn json_roundtrip(a in small_laurent()) {
            let v = Coefficient::to_json(&a);
            prop_assert_eq!(<LaurentPoly as Coefficient>::from_json(&v).unwrap(), a);
        }
    }
}
