//! Exact Laurent-polynomial and rational-function arithmetic in the doubly
//! indexed variables `c[i,m]` and torus variables `t[j]`.
//!
//! Rational functions carry a constructive positivity flag: it is set only
//! for values assembled from positive constants, variables, `+`, `*` and `/`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Variable kind: `C` variables carry a node and a time index, `T` variables
/// only a node index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    C,
    T,
}

/// A symbolic variable. Canonical order is lexicographic on (kind, node, time).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub node: u32,
    pub time: i32,
}

impl Var {
    pub fn c(node: u32, time: i32) -> Self {
        Var { kind: VarKind::C, node, time }
    }

    pub fn t(node: u32) -> Self {
        Var { kind: VarKind::T, node, time: 0 }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::C => write!(f, "c[{},{}]", self.node, self.time),
            VarKind::T => write!(f, "t[{}]", self.node),
        }
    }
}

/// Exponent vector of a Laurent monomial; zero exponents are never stored.
pub type Exponents = BTreeMap<Var, i64>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("tropicalization of a non-positive rational function")]
    NotPositive,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exact division failed")]
    InexactDivision,
}

/// A Laurent polynomial: finite map from exponent vectors to nonzero exact
/// rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

fn mono_mul(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = a.clone();
    for (v, e) in b {
        let entry = out.entry(*v).or_insert(0);
        *entry += e;
        if *entry == 0 {
            out.remove(v);
        }
    }
    out
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(), c);
        }
        LaurentPoly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(&[(v, 1)], BigRational::one())
    }

    pub fn monomial(exps: &[(Var, i64)], coeff: BigRational) -> Self {
        let mut e = Exponents::new();
        for (v, k) in exps {
            if *k != 0 {
                *e.entry(*v).or_insert(0) += k;
            }
        }
        e.retain(|_, k| *k != 0);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: BTreeMap<Exponents, BigRational>) -> Self {
        let mut t = terms;
        t.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: t }
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponents::new())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// True when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// All coefficients strictly positive.
    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = out.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = mono_mul(ea, eb);
                let entry = out.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by a single Laurent monomial (exponent shift).
    pub fn mul_monomial(&self, exps: &Exponents, coeff: &BigRational) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (mono_mul(e, exps), c * coeff))
                .collect(),
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|e| e.keys().copied())
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Graded-lexicographic leading term (total degree first, then explicit
    /// lexicographic comparison over the union of variables). This order is
    /// compatible with monomial multiplication, which exact division needs.
    fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().max_by(|(ea, _), (eb, _)| grlex_cmp(ea, eb))
    }

    /// Exact division: returns `self / d` when the division has no remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if let Some((de, dc)) = d.as_monomial() {
            let inv: Exponents = de.iter().map(|(v, k)| (*v, -k)).collect();
            return Ok(self.mul_monomial(&inv, &(BigRational::one() / dc)));
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let (dlead_e, dlead_c) = d.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            let mut qe = rlead_e.clone();
            for (v, k) in &dlead_e {
                let entry = qe.entry(*v).or_insert(0);
                *entry -= k;
                if *entry == 0 {
                    qe.remove(v);
                }
            }
            let qc = rlead_c / &dlead_c;
            let qterm = LaurentPoly::from_terms(BTreeMap::from([(qe, qc)]));
            let next = rem.sub(&qterm.mul(d));
            // leading term must strictly drop, otherwise division is inexact
            if let (Some((ne, _)), Some((oe, _))) = (next.leading_term(), rem.leading_term()) {
                if grlex_cmp(ne, oe) != std::cmp::Ordering::Less {
                    return Err(LaurentError::InexactDivision);
                }
            }
            quot = quot.add(&qterm);
            rem = next;
        }
        Ok(quot)
    }

    /// Evaluate at a rational point. Every variable of the polynomial must be
    /// assigned a nonzero value.
    pub fn eval(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational, LaurentError> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, k) in e {
                let val = point
                    .get(v)
                    .ok_or_else(|| LaurentError::Parse(format!("unassigned variable {v}")))?;
                if val.is_zero() {
                    return Err(LaurentError::DivisionByZero);
                }
                term *= rational_pow(val, *k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitute rational functions for variables.
    pub fn subst(
        &self,
        map: &BTreeMap<Var, RationalFunction>,
    ) -> Result<RationalFunction, LaurentError> {
        let mut total = RationalFunction::zero();
        for (e, c) in &self.terms {
            let mut term = RationalFunction::constant(c.clone());
            for (v, k) in e {
                let val = match map.get(v) {
                    Some(f) => f.clone(),
                    None => RationalFunction::var(*v),
                };
                term = term.mul(&val.pow(*k)?)?;
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }
}

fn grlex_cmp(a: &Exponents, b: &Exponents) -> std::cmp::Ordering {
    let da: i64 = a.values().sum();
    let db: i64 = b.values().sum();
    da.cmp(&db).then_with(|| {
        let mut vars: Vec<Var> = a.keys().chain(b.keys()).copied().collect();
        vars.sort();
        vars.dedup();
        for v in vars {
            let ea = a.get(&v).copied().unwrap_or(0);
            let eb = b.get(&v).copied().unwrap_or(0);
            match ea.cmp(&eb) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    })
}

pub fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut out = BigRational::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        out *= &b;
    }
    out
}

/// An exact rational function `num/den` with a constructive positivity flag.
///
/// The representation is normalized: common monomial content is folded into
/// the numerator, integer content is reduced, and the denominator's leading
/// coefficient is positive under the canonical term order. Equality is
/// decided by cross-multiplication, so no polynomial gcd is needed.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
    positive: bool,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one(), positive: false }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let positive = c.is_positive();
        RationalFunction { num: LaurentPoly::constant(c), den: LaurentPoly::one(), positive }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        RationalFunction { num: LaurentPoly::var(v), den: LaurentPoly::one(), positive: true }
    }

    /// Build from a polynomial; positive when every coefficient is positive
    /// (such a value is a sum of positive monomials, hence constructively
    /// positive).
    pub fn from_poly(p: LaurentPoly) -> Self {
        let positive = !p.is_zero() && p.all_coeffs_positive();
        RationalFunction { num: p, den: LaurentPoly::one(), positive }.normalized()
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let positive = !num.is_zero()
            && num.all_coeffs_positive()
            && den.all_coeffs_positive();
        Ok(RationalFunction { num, den, positive }.normalized())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_positive_flagged(&self) -> bool {
        self.positive
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the value is a Laurent polynomial (trivial denominator).
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalized(self) -> Self {
        let RationalFunction { num, den, positive } = self;
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPoly::one(), positive: false };
        }
        // detect equal numerator and denominator early (covers f / f)
        if num == den {
            return RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one(), positive };
        }
        // fold a monomial denominator into the numerator; otherwise strip the
        // denominator's monomial content so both sides share no monomial factor
        let (mut num, mut den) = if let Some((e, c)) = den.as_monomial() {
            let inv: Exponents = e.iter().map(|(v, k)| (*v, -k)).collect();
            (num.mul_monomial(&inv, &(BigRational::one() / c)), LaurentPoly::one())
        } else {
            let vars = den.vars();
            let mut mins: BTreeMap<Var, i64> = BTreeMap::new();
            for e in den.terms.keys() {
                for v in &vars {
                    let k = e.get(v).copied().unwrap_or(0);
                    mins.entry(*v).and_modify(|m| *m = (*m).min(k)).or_insert(k);
                }
            }
            mins.retain(|_, m| *m != 0);
            if mins.is_empty() {
                (num, den)
            } else {
                let shift: Exponents = mins.iter().map(|(v, m)| (*v, -m)).collect();
                (
                    num.mul_monomial(&shift, &BigRational::one()),
                    den.mul_monomial(&shift, &BigRational::one()),
                )
            }
        };
        // integer content: make all coefficients integral with joint gcd 1,
        // and the denominator's leading coefficient positive
        let mut denom_lcm = BigInt::one();
        for c in num.terms.values().chain(den.terms.values()) {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut gcd = BigInt::zero();
        for c in num.terms.values().chain(den.terms.values()) {
            let scaled = c * BigRational::from_integer(denom_lcm.clone());
            gcd = num::integer::gcd(gcd, scaled.to_integer());
        }
        let mut factor = BigRational::new(denom_lcm, gcd);
        let lead_negative = den
            .leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_negative {
            factor = -factor;
        }
        num = num.scale(&factor);
        den = den.scale(&factor);
        if num == den {
            return RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one(), positive };
        }
        RationalFunction { num, den, positive }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        let positive = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.positive,
            (_, true) => self.positive,
            _ => self.positive && other.positive,
        };
        Ok(RationalFunction { num, den, positive }.normalized())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Ok(RationalFunction { num, den, positive: false }.normalized())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone(), positive: false }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        let positive = self.positive && other.positive;
        Ok(RationalFunction { num, den, positive }.normalized())
    }

    pub fn div(&self, other: &Self) -> Result<Self, LaurentError> {
        if other.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let num = self.num.mul(&other.den);
        let den = self.den.mul(&other.num);
        let positive = self.positive && other.positive;
        Ok(RationalFunction { num, den, positive }.normalized())
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::one().div(self)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, LaurentError> {
        if exp == 0 {
            return Ok(Self::one());
        }
        let base = if exp > 0 { self.clone() } else { self.inv()? };
        let mut out = Self::one();
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational, LaurentError> {
        let n = self.num.eval(point)?;
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(n / d)
    }

    pub fn subst(
        &self,
        map: &BTreeMap<Var, RationalFunction>,
    ) -> Result<RationalFunction, LaurentError> {
        let n = self.num.subst(map)?;
        let d = self.den.subst(map)?;
        n.div(&d)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn num_terms(&self) -> usize {
        self.num.num_terms()
    }
}

/// Equality holds iff `a.num * b.den == b.num * a.den`.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

fn fmt_coeff_mono(e: &Exponents, c: &BigRational, out: &mut String) {
    let pos: Vec<(Var, i64)> = e.iter().filter(|(_, k)| **k > 0).map(|(v, k)| (*v, *k)).collect();
    let neg: Vec<(Var, i64)> = e.iter().filter(|(_, k)| **k < 0).map(|(v, k)| (*v, -*k)).collect();
    let c = c.abs();
    let mut head: Vec<String> = Vec::new();
    if !c.is_one() || pos.is_empty() {
        head.push(c.to_string());
    }
    for (v, k) in &pos {
        if *k == 1 {
            head.push(v.to_string());
        } else {
            head.push(format!("{v}^{k}"));
        }
    }
    out.push_str(&head.join("*"));
    for (v, k) in &neg {
        if *k == 1 {
            out.push_str(&format!("/{v}"));
        } else {
            out.push_str(&format!("/{v}^{k}"));
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    s.push_str("-");
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            fmt_coeff_mono(e, c, &mut s);
        }
        write!(f, "{s}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), LaurentError> {
        match self.bump() {
            Some(x) if x == c => Ok(()),
            other => Err(LaurentError::Parse(format!(
                "expected '{}', found {:?}",
                c as char,
                other.map(|b| b as char)
            ))),
        }
    }

    fn integer(&mut self) -> Result<i64, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(LaurentError::Parse("expected integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| LaurentError::Parse(format!("{e}")))
    }

    fn atom(&mut self) -> Result<RationalFunction, LaurentError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(b')')?;
                self.maybe_pow(e)
            }
            Some(b'c') | Some(b't') => {
                let kind = self.bump().unwrap();
                self.expect(b'[')?;
                let node = self.integer()?;
                let v = if kind == b'c' {
                    self.expect(b',')?;
                    let time = self.integer()?;
                    Var::c(node as u32, time as i32)
                } else {
                    Var::t(node as u32)
                };
                self.expect(b']')?;
                self.maybe_pow(RationalFunction::var(v))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                self.maybe_pow(RationalFunction::from_i64(n))
            }
            other => Err(LaurentError::Parse(format!("unexpected {:?}", other.map(|b| b as char)))),
        }
    }

    fn maybe_pow(&mut self, base: RationalFunction) -> Result<RationalFunction, LaurentError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            base.pow(e)
        } else {
            Ok(base)
        }
    }

    fn term(&mut self) -> Result<RationalFunction, LaurentError> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc.mul(&self.atom()?)?;
                }
                Some(b'/') => {
                    self.bump();
                    acc = acc.div(&self.atom()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, LaurentError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }
}

/// Parse the textual serialization, e.g. `"c[1,1] + c[2,1]/c[1,2]"`.
pub fn parse(s: &str) -> Result<RationalFunction, LaurentError> {
    let mut p = Parser::new(s);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(LaurentError::Parse(format!("trailing input at byte {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(i: u32, m: i32) -> RationalFunction {
        RationalFunction::var(Var::c(i, m))
    }

    #[test]
    fn exact_laurent_division_by_monomial() {
        // (c[1,1] + c[2,1]) / c[1,1] = 1 + c[2,1]/c[1,1]
        let f = c(1, 1).add(&c(2, 1)).unwrap();
        let q = f.div(&c(1, 1)).unwrap();
        let expected = parse("1 + c[2,1]/c[1,1]").unwrap();
        assert_eq!(q, expected);
        assert!(q.as_poly().is_some());
    }

    #[test]
    fn self_division_is_one() {
        let f = c(1, 1).add(&c(2, 2)).unwrap().div(&c(1, 2).add(&RationalFunction::one()).unwrap()).unwrap();
        let q = f.div(&f).unwrap();
        assert!(q.is_one());
        assert_eq!(q.to_string(), "1");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = c(1, 1);
        assert_eq!(f.div(&RationalFunction::zero()), Err(LaurentError::DivisionByZero));
    }

    #[test]
    fn positivity_propagates() {
        let f = c(1, 1).add(&c(2, 1)).unwrap();
        let g = f.div(&c(1, 2)).unwrap();
        assert!(g.is_positive_flagged());
        let h = g.sub(&c(2, 2)).unwrap();
        assert!(!h.is_positive_flagged());
    }

    #[test]
    fn canonical_print_matches_spec_example() {
        let f = parse("c[1,1] + c[2,1]/c[1,2]").unwrap();
        assert_eq!(f.to_string(), "c[1,1] + c[2,1]/c[1,2]");
        let g = parse("c[1,1] + c[2,1]/c[1,2] + c[1,2]/c[2,2]").unwrap();
        assert_eq!(g.to_string(), "c[1,1] + c[2,1]/c[1,2] + c[1,2]/c[2,2]");
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn addition_matches_numeric_evaluation() {
        // (a/b)+(c/d) cross-checked against evaluation at 50 random points
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a = parse("c[1,1] + 2*c[2,1]").unwrap();
        let b = parse("c[1,2] + c[2,1]*c[1,1]").unwrap();
        let f = a.div(&b).unwrap();
        let g = parse("c[2,1] - c[1,2]^2").unwrap().div(&parse("c[1,1]^2 + 1").unwrap()).unwrap();
        let s = f.add(&g).unwrap();
        for _ in 0..50 {
            let mut pt = BTreeMap::new();
            for v in [Var::c(1, 1), Var::c(2, 1), Var::c(1, 2)] {
                pt.insert(v, rat(rng.gen_range(1..40), rng.gen_range(1..40)));
            }
            let lhs = s.eval(&pt).unwrap();
            let rhs = f.eval(&pt).unwrap() + g.eval(&pt).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_poly_division() {
        let a = parse("c[1,1] + c[2,1]").unwrap();
        let b = parse("c[1,1] - c[2,1]").unwrap();
        let prod = a.mul(&b).unwrap();
        let q = prod
            .as_poly()
            .unwrap()
            .exact_div(a.as_poly().unwrap())
            .unwrap();
        assert_eq!(q, b.as_poly().unwrap().clone());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec((0u32..3, -2i32..3, -3i64..4), 0..3),
                -6i64..7,
            ),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (vars, coeff) in terms {
                let exps: Vec<(Var, i64)> = vars
                    .into_iter()
                    .map(|(n, t, e)| (Var::c(n + 1, t), e))
                    .collect();
                p = p.add(&LaurentPoly::monomial(
                    &exps,
                    BigRational::from_integer(BigInt::from(coeff)),
                ));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(600))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn normalization_is_idempotent(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let f = RationalFunction::from_ratio(a.clone(), b.clone()).unwrap();
            let g = RationalFunction::from_ratio(f.numerator().clone(), f.denominator().clone()).unwrap();
            prop_assert_eq!(f.numerator(), g.numerator());
            prop_assert_eq!(f.denominator(), g.denominator());
        }

        #[test]
        fn cross_multiplication_equivalence(a in arb_poly(), b in arb_poly(), m in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assume!(!m.is_zero());
            let f = RationalFunction::from_ratio(a.clone(), b.clone()).unwrap();
            let g = RationalFunction::from_ratio(a.mul(&m), b.mul(&m)).unwrap();
            prop_assert_eq!(&f, &g);
            prop_assert_eq!(&g, &f);
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let f = RationalFunction::from_ratio(a, b).unwrap();
            let s = f.to_string();
            let g = parse(&s).unwrap();
            prop_assert_eq!(f, g);
        }
    }
}
