//! Linear combinations of Schubert classes over all boxes, multiplied through DS pipe dreams.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeffs::{Coefficient, IntPoly, KInteger, LaurentPoly};
use crate::enumerate::{expand, DreamWeight, Mode};
use crate::error::{Error, Result};
use crate::partitions::BoxedPartition;

/// A finite sum `Σ c_ν [X^ν]`, where the ν may live in different boxes.
#[derive(Clone, PartialEq, Debug)]
pub struct RingElement<C: Coefficient> {
    terms: BTreeMap<BoxedPartition, C>,
}

impl<C: Coefficient> Default for RingElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> RingElement<C> {
    pub fn zero() -> Self {
        RingElement {
            terms: BTreeMap::new(),
        }
    }

    /// The Schubert class `[X^p]`.
    pub fn schubert(p: &BoxedPartition) -> Self {
        Self::monomial(p.clone(), C::one())
    }

    pub fn monomial(p: BoxedPartition, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(p, c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BoxedPartition, C)>) -> Self {
        let mut x = Self::zero();
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    /// Adds `c [X^p]`, dropping the term if it cancels.
    pub fn add_term(&mut self, p: BoxedPartition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&p) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(p, sum);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<BoxedPartition, C> {
        &self.terms
    }

    pub fn coeff(&self, p: &BoxedPartition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
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

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(p, x)| (p.clone(), x.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> RingElement<D> {
        RingElement::from_terms(self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Whether all terms share one box.
    pub fn is_homogeneous(&self) -> bool {
        let mut boxes = self.terms.keys().map(|p| (p.rows(), p.cols()));
        match boxes.next() {
            Some(first) => boxes.all(|b| b == first),
            None => true,
        }
    }

    pub fn terms_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(nu, c)| json!({"nu": nu.to_json(), "coeff": c.to_json()}))
                .collect(),
        )
    }

    pub fn from_terms_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("terms must be an array".into()))?;
        let mut x = Self::zero();
        for t in arr {
            let nu = t
                .get("nu")
                .ok_or_else(|| Error::Parse("term without \"nu\"".into()))
                .and_then(BoxedPartition::from_json)?;
            let c = t
                .get("coeff")
                .ok_or_else(|| Error::Parse("term without \"coeff\"".into()))
                .and_then(C::from_json)?;
            x.add_term(nu, c);
        }
        Ok(x)
    }

    pub fn to_json(&self) -> Value {
        json!({"ring": C::RING, "terms": self.terms_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = v.get("ring").and_then(Value::as_str).unwrap_or_default();
        if ring != C::RING {
            return Err(Error::RingMismatch(format!(
                "expected ring {}, found {ring:?}",
                C::RING
            )));
        }
        Self::from_terms_json(v.get("terms").unwrap_or(&Value::Null))
    }

    fn format(
        &self,
        coeff: impl Fn(&C) -> String,
        class: impl Fn(&BoxedPartition) -> String,
    ) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let text = coeff(c);
            let (negative, body) = if c.is_one() {
                (false, class(p))
            } else if (-c.clone()).is_one() {
                (true, class(p))
            } else if c.is_single_term() {
                match text.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}{}", class(p))),
                    None => (false, format!("{text}{}", class(p))),
                }
            } else {
                (false, format!("({text}){}", class(p)))
            };
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }

    /// LaTeX with `q` written as `\exp(t)`, e.g. `[X^{(2,1,0,0)}] + (1 - \exp(t))[X^{(2,1,1,0)}]`.
    pub fn to_latex(&self) -> String {
        let boxed = !self.is_homogeneous();
        self.format(C::to_latex, |p| {
            let parts = parts_with_zeros(p);
            if boxed {
                format!("[X^{{({parts})}}_{{{}\\times {}}}]", p.rows(), p.cols())
            } else {
                format!("[X^{{({parts})}}]")
            }
        })
    }
}

fn parts_with_zeros(p: &BoxedPartition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl<C: Coefficient> fmt::Display for RingElement<C> {
    /// `[X^(2,1,0,0)] + (1 - q)[X^(2,1,1,0)]`; a box suffix is added when boxes differ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let boxed = !self.is_homogeneous();
        let text = self.format(
            |c| c.to_string(),
            |p| {
                let parts = parts_with_zeros(p);
                if boxed {
                    format!("[X^({parts})_{}x{}]", p.rows(), p.cols())
                } else {
                    format!("[X^({parts})]")
                }
            },
        );
        f.write_str(&text)
    }
}

impl<C: Coefficient> Add for &RingElement<C> {
    type Output = RingElement<C>;

    fn add(self, rhs: Self) -> RingElement<C> {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &RingElement<C> {
    type Output = RingElement<C>;

    fn neg(self) -> RingElement<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coefficient> Sub for &RingElement<C> {
    type Output = RingElement<C>;

    fn sub(self, rhs: Self) -> RingElement<C> {
        self + &(-rhs)
    }
}

/// The product of two elements: on basis pairs `[λ]·[μ]` the left class plays
/// λ and the right class μ in the dream region.
pub fn multiply<C: DreamWeight>(x: &RingElement<C>, y: &RingElement<C>) -> Result<RingElement<C>> {
    let mut out = RingElement::zero();
    for (l, cl) in &x.terms {
        for (m, cm) in &y.terms {
            let e = expand::<C>(l, m)?;
            let scale = cl.clone() * cm.clone();
            for (nu, c) in e.terms() {
                out.add_term(nu.clone(), c.clone() * scale.clone());
            }
        }
    }
    Ok(out)
}

/// `t = 0`: equivariant homology to ordinary homology.
pub fn specialize_hs_t0(x: &RingElement<IntPoly>) -> RingElement<BigInt> {
    x.map_coeffs(IntPoly::at_t_zero)
}

/// `q = 1`: equivariant K-homology to ordinary K-homology.
pub fn specialize_ks_q1(x: &RingElement<LaurentPoly>) -> RingElement<KInteger> {
    x.map_coeffs(|c| KInteger(c.at_q_one()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    HsT0,
    KsQ1,
}

/// An element of one of the three rings, chosen at run time.
#[derive(Clone, PartialEq, Debug)]
pub enum Element {
    H(RingElement<BigInt>),
    HS(RingElement<IntPoly>),
    KS(RingElement<LaurentPoly>),
    /// Non-equivariant K-homology, reached only by specialization.
    K(RingElement<KInteger>),
}

impl Element {
    pub fn schubert(p: &BoxedPartition, mode: Mode) -> Element {
        match mode {
            Mode::H => Element::H(RingElement::schubert(p)),
            Mode::HS => Element::HS(RingElement::schubert(p)),
            Mode::KS => Element::KS(RingElement::schubert(p)),
        }
    }

    pub fn ring(&self) -> &'static str {
        match self {
            Element::H(_) => BigInt::RING,
            Element::HS(_) => IntPoly::RING,
            Element::KS(_) => LaurentPoly::RING,
            Element::K(_) => KInteger::RING,
        }
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::H(x), Element::H(y)) => multiply(x, y).map(Element::H),
            (Element::HS(x), Element::HS(y)) => multiply(x, y).map(Element::HS),
            (Element::KS(x), Element::KS(y)) => multiply(x, y).map(Element::KS),
            (Element::K(x), Element::K(y)) => multiply(x, y).map(Element::K),
            _ => Err(Error::RingMismatch(format!(
                "cannot multiply an element of {} by an element of {}",
                self.ring(),
                other.ring()
            ))),
        }
    }

    pub fn specialize(&self, target: Specialization) -> Result<Element> {
        match (self, target) {
            (Element::HS(x), Specialization::HsT0) => Ok(Element::H(specialize_hs_t0(x))),
            (Element::KS(x), Specialization::KsQ1) => Ok(Element::K(specialize_ks_q1(x))),
            _ => Err(Error::RingMismatch(format!(
                "no {target:?} specialization from {}",
                self.ring()
            ))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Element::H(x) => x.to_json(),
            Element::HS(x) => x.to_json(),
            Element::KS(x) => x.to_json(),
            Element::K(x) => x.to_json(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Element::H(x) => x.to_latex(),
            Element::HS(x) => x.to_latex(),
            Element::KS(x) => x.to_latex(),
            Element::K(x) => x.to_latex(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::H(x) => x.fmt(f),
            Element::HS(x) => x.fmt(f),
            Element::KS(x) => x.fmt(f),
            Element::K(x) => x.fmt(f),
        }
    }
}
