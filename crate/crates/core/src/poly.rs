//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Text format: terms `c*x^e` joined by `+`/`-`, with `x` meaning exponent 1
//! and a missing coefficient meaning 1 (`x^2+x`, `3*x^3+1`). Integer
//! coefficients are reduced into the field; extension-field coefficients are
//! written in parentheses, `(t+1)*x^2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{FieldElem, FieldError, FieldSpec};
use crate::text::{self, Coeff};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    /// Index = degree; never ends in a zero. The zero polynomial is empty.
    coeffs: Vec<FieldElem>,
}

impl Poly {
    /// Builds a polynomial from coefficients, low degree first.
    pub fn new(field: &FieldSpec, coeffs: Vec<FieldElem>) -> Result<Self, PolyError> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(FieldError::FieldMismatch.into());
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Convenience constructor from integer coefficients, low degree first.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i128]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Poly::new(field, coeffs).expect("coefficients built in the same field")
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        let field = c.field().clone();
        Poly::new(&field, vec![c]).expect("same field")
    }

    /// The monomial `x`.
    pub fn x(field: &FieldSpec) -> Self {
        Poly::from_ints(field, &[0, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` standing for the `-inf` degree of the zero
    /// polynomial (so `None < Some(0)` orders correctly).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^nu`, zero beyond the degree.
    pub fn coefficient(&self, nu: usize) -> FieldElem {
        self.coeffs.get(nu).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coefficient(&self) -> Result<FieldElem, PolyError> {
        self.coeffs.last().cloned().ok_or(PolyError::ZeroPolynomial)
    }

    fn check(&self, other: &Poly) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch.into())
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElem) -> Result<Poly, PolyError> {
        if c.field() != &self.field {
            return Err(FieldError::FieldMismatch.into());
        }
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(FieldElem::neg).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::constant(self.field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem, PolyError> {
        if x.field() != &self.field {
            return Err(FieldError::FieldMismatch.into());
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c))
    }

    /// Every root in the field, by exhaustive evaluation, in canonical order.
    pub fn roots_in_field(&self) -> Result<Vec<FieldElem>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self
            .field
            .elements()
            .into_iter()
            .filter(|x| self.eval(x).expect("same field").is_zero())
            .collect())
    }

    /// Parses the polynomial text format in variable `x`.
    pub fn parse(field: &FieldSpec, input: &str) -> Result<Poly, PolyError> {
        let terms = text::parse_terms(input, 'x').map_err(|reason| FieldError::Parse {
            what: "polynomial",
            input: input.to_string(),
            reason,
        })?;
        let mut coeffs: Vec<FieldElem> = Vec::new();
        for term in terms {
            let mut c = match term.coeff {
                Coeff::Int(v) => field.from_int(v),
                Coeff::Group(s) => field.parse_element(&s)?,
            };
            if term.negative {
                c = -c;
            }
            let e = usize::try_from(term.exponent).map_err(|_| FieldError::Parse {
                what: "polynomial",
                input: input.to_string(),
                reason: "exponent too large".into(),
            })?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, field.zero());
            }
            coeffs[e] = &coeffs[e] + &c;
        }
        Poly::new(field, coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| text::render_term(&c.to_string(), 'x', e))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
