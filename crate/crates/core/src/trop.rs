//! Piecewise-linear shadows of positive rational functions.
//!
//! `tropicalize` sends a positive Laurent polynomial `sum a_mu c^mu` to
//! `max_mu(-<mu, x>)` and a quotient to the difference, so that evaluating the
//! result at an integer cocharacter `x` computes `v(f . xi_x)` where
//! `v(g) = deg g(s^{-1})`. `min_plus` is the valuation counterpart
//! (`min_mu <mu, x>`), used for coordinate actions where the identity map must
//! stay the identity.

use crate::laurent::{Exponents, LaurentError, RationalFunction, Var};
use num::rational::BigRational;
use num::Zero;
use std::collections::BTreeMap;

/// Expression tree with affine-form leaves and `max`/`plus`/`minus` nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropExpr {
    /// Linear form `sum coeff_v * x_v` plus a constant offset.
    Affine { coeffs: BTreeMap<Var, i64>, offset: i64 },
    Max(Vec<TropExpr>),
    Plus(Box<TropExpr>, Box<TropExpr>),
    Minus(Box<TropExpr>, Box<TropExpr>),
}

impl TropExpr {
    pub fn constant(c: i64) -> Self {
        TropExpr::Affine { coeffs: BTreeMap::new(), offset: c }
    }

    pub fn var(v: Var) -> Self {
        TropExpr::Affine { coeffs: BTreeMap::from([(v, 1)]), offset: 0 }
    }

    pub fn plus(a: TropExpr, b: TropExpr) -> Self {
        TropExpr::Plus(Box::new(a), Box::new(b))
    }

    pub fn minus(a: TropExpr, b: TropExpr) -> Self {
        TropExpr::Minus(Box::new(a), Box::new(b))
    }

    /// `min(a, b, ...) = -max(-a, -b, ...)`, expressed with the node set above.
    pub fn min_of(items: Vec<TropExpr>) -> Self {
        let negated = items
            .into_iter()
            .map(|e| TropExpr::minus(TropExpr::constant(0), e))
            .collect();
        TropExpr::minus(TropExpr::constant(0), TropExpr::Max(negated))
    }

    /// Evaluate at an integer point; missing variables default to 0.
    pub fn eval(&self, x: &BTreeMap<Var, i64>) -> i64 {
        match self {
            TropExpr::Affine { coeffs, offset } => {
                offset
                    + coeffs
                        .iter()
                        .map(|(v, c)| c * x.get(v).copied().unwrap_or(0))
                        .sum::<i64>()
            }
            TropExpr::Max(items) => items.iter().map(|e| e.eval(x)).max().expect("empty max"),
            TropExpr::Plus(a, b) => a.eval(x) + b.eval(x),
            TropExpr::Minus(a, b) => a.eval(x) - b.eval(x),
        }
    }
}

fn affine_from_exponents(e: &Exponents, negate: bool) -> TropExpr {
    let coeffs = e
        .iter()
        .map(|(v, k)| (*v, if negate { -k } else { *k }))
        .collect();
    TropExpr::Affine { coeffs, offset: 0 }
}

fn trop_poly(p: &crate::laurent::LaurentPoly, negate: bool) -> Result<TropExpr, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::NotPositive);
    }
    let leaves: Vec<TropExpr> = p
        .terms()
        .keys()
        .map(|e| affine_from_exponents(e, negate))
        .collect();
    if negate {
        Ok(TropExpr::Max(leaves))
    } else {
        Ok(TropExpr::min_of(leaves))
    }
}

/// Tropicalization with the degree-of-inverse convention: a positive Laurent
/// polynomial maps to `max` of the negated exponent forms, a quotient to the
/// difference. Errors on non-positive input.
pub fn tropicalize(f: &RationalFunction) -> Result<TropExpr, LaurentError> {
    if !f.is_positive_flagged() {
        return Err(LaurentError::NotPositive);
    }
    let n = trop_poly(f.numerator(), true)?;
    if f.denominator().is_one() {
        return Ok(n);
    }
    let d = trop_poly(f.denominator(), true)?;
    Ok(TropExpr::minus(n, d))
}

/// Min-plus valuation: a positive Laurent polynomial maps to `min` of the
/// exponent forms. Satisfies `min_plus(c_j) = x_j`, so identity coordinate
/// maps stay the identity.
pub fn min_plus(f: &RationalFunction) -> Result<TropExpr, LaurentError> {
    if !f.is_positive_flagged() {
        return Err(LaurentError::NotPositive);
    }
    let n = trop_poly(f.numerator(), false)?;
    if f.denominator().is_one() {
        return Ok(n);
    }
    let d = trop_poly(f.denominator(), false)?;
    Ok(TropExpr::minus(n, d))
}

/// Independent oracle for `v(f . xi_x)`: specialize every variable `v` to
/// `s^{x_v}` and read `deg` of the resulting one-variable function at `s^{-1}`,
/// i.e. `min-exponent(den) - min-exponent(num)`.
pub fn v_oracle(f: &RationalFunction, x: &BTreeMap<Var, i64>) -> Result<i64, LaurentError> {
    let num = specialize_min_exp(f.numerator(), x)?;
    let den = specialize_min_exp(f.denominator(), x)?;
    Ok(den - num)
}

fn specialize_min_exp(
    p: &crate::laurent::LaurentPoly,
    x: &BTreeMap<Var, i64>,
) -> Result<i64, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::DivisionByZero);
    }
    // one-variable coefficients: exponent of s -> coefficient
    let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
    for (e, c) in p.terms() {
        let deg: i64 = e.iter().map(|(v, k)| k * x.get(v).copied().unwrap_or(0)).sum();
        let entry = coeffs.entry(deg).or_insert_with(BigRational::zero);
        *entry += c;
    }
    coeffs.retain(|_, c| !c.is_zero());
    coeffs
        .keys()
        .next()
        .copied()
        .ok_or(LaurentError::DivisionByZero)
}
