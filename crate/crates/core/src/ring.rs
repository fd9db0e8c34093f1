//! Exact coefficient arithmetic.
//!
//! Scalars are [`Rational`] (a canonical big rational) and the coefficient
//! ring everywhere else is [`ParamPoly`], a sparse polynomial over ℚ in a
//! fixed ordered list of named parameters. The default list is
//! `["s", "l1", "l2"]`, standing for s, λ₁ and λ₂.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::sync::LazyLock;
use thiserror::Error;

/// Canonical big rational: reduced, positive denominator, zero as `0/1`.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter lists differ: {0} vs {1}")]
    ParameterMismatch(String, String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// Builds the rational `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Applies `op` to `a` and `b` (`b` is ignored for `Neg`).
pub fn rational_arith(a: &Rational, b: &Rational, op: RationalOp) -> Result<Rational, RingError> {
    Ok(match op {
        RationalOp::Add => a + b,
        RationalOp::Sub => a - b,
        RationalOp::Mul => a * b,
        RationalOp::Div => {
            if b.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            a / b
        }
        RationalOp::Neg => -a,
    })
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, RingError> {
    let text = text.trim();
    let bad = || RingError::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// The integer value of `r`, if it is an integer that fits in `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// An ordered list of parameter names shared by many polynomials.
#[derive(Debug, Clone)]
pub struct Params(Arc<[String]>);

static STANDARD: LazyLock<Params> =
    LazyLock::new(|| Params(["s", "l1", "l2"].iter().map(|s| s.to_string()).collect()));

impl Params {
    pub fn new(names: &[&str]) -> Self {
        Params(names.iter().map(|s| s.to_string()).collect())
    }

    /// The list `["s", "l1", "l2"]`.
    pub fn standard() -> Self {
        STANDARD.clone()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Params {}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// Sparse polynomial over ℚ in named parameters, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoly {
    params: Params,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl Default for ParamPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::zero_in(Params::standard())
    }

    pub fn zero_in(params: Params) -> Self {
        ParamPoly {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::constant_in(Params::standard(), c)
    }

    pub fn constant_in(params: Params, c: Rational) -> Self {
        let mut p = Self::zero_in(params);
        if !c.is_zero() {
            let n = p.params.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The parameter `name` from the standard list.
    pub fn variable(name: &str) -> Result<Self, RingError> {
        Self::variable_in(Params::standard(), name)
    }

    pub fn variable_in(params: Params, name: &str) -> Result<Self, RingError> {
        let i = params
            .index(name)
            .ok_or_else(|| RingError::UnknownParameter(name.to_string()))?;
        let mut exps = vec![0; params.len()];
        exps[i] = 1;
        let mut p = Self::zero_in(params);
        p.terms.insert(exps, Rational::one());
        Ok(p)
    }

    pub fn s() -> Self {
        Self::variable("s").expect("standard parameter")
    }

    pub fn l1() -> Self {
        Self::variable("l1").expect("standard parameter")
    }

    pub fn l2() -> Self {
        Self::variable("l2").expect("standard parameter")
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Terms as (exponent vector, coefficient), no zero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(RingError::ParameterMismatch(
                self.params.to_string(),
                other.params.to_string(),
            ))
        }
    }

    fn add_term(&mut self, exps: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = Self::zero_in(self.params.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.params.clone());
        }
        ParamPoly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant_in(self.params.clone(), Rational::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitutes the assigned parameters; the rest stay symbolic.
    pub fn eval(&self, assignment: &[(&str, Rational)]) -> Result<Self, RingError> {
        let mut slots = Vec::with_capacity(assignment.len());
        for (name, value) in assignment {
            let i = self
                .params
                .index(name)
                .ok_or_else(|| RingError::UnknownParameter(name.to_string()))?;
            slots.push((i, value));
        }
        let mut out = Self::zero_in(self.params.clone());
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let mut c = c.clone();
            for &(i, value) in &slots {
                let k = std::mem::take(&mut e[i]);
                if k > 0 {
                    c *= num_traits::pow(value.clone(), usize::from(k));
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Replaces the parameter `name` by the polynomial `value`.
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self, RingError> {
        self.check(value)?;
        let i = self
            .params
            .index(name)
            .ok_or_else(|| RingError::UnknownParameter(name.to_string()))?;
        let mut powers = vec![Self::constant_in(self.params.clone(), Rational::one())];
        let mut out = Self::zero_in(self.params.clone());
        for (e, c) in &self.terms {
            let k = usize::from(e[i]);
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mut mono = Self::zero_in(self.params.clone());
            mono.terms.insert(rest, c.clone());
            out += &(&mono * &powers[k]);
        }
        Ok(out)
    }

    /// Terms in degree-lexicographic order, highest first.
    fn sorted_terms(&self) -> Vec<(&Vec<u16>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| u32::from(x)).sum();
            let db: u32 = b.iter().map(|&x| u32::from(x)).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    /// LaTeX rendering; `l1`, `l2` print as `\lambda_1`, `\lambda_2`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = latex_name(&self.params.names()[i]);
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{{{k}}}")
                    }
                })
                .collect();
            push_signed(&mut out, idx == 0, c, &mono.join(" "), latex_rational, " ");
        }
        out
    }
}

fn latex_name(name: &str) -> String {
    match name.strip_prefix('l') {
        Some(idx) if !idx.is_empty() && idx.chars().all(|c| c.is_ascii_digit()) => {
            format!("\\lambda_{{{idx}}}")
        }
        _ => name.to_string(),
    }
}

/// `\frac{p}{q}` or `p`, for a nonnegative rational.
pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn plain_rational(r: &Rational) -> String {
    r.to_string()
}

/// Appends `c·mono` with sign handling shared by the text and LaTeX renderers.
pub(crate) fn push_signed(
    out: &mut String,
    first: bool,
    c: &Rational,
    mono: &str,
    fmt_abs: fn(&Rational) -> String,
    joiner: &str,
) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&fmt_abs(&abs));
    } else if abs.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&fmt_abs(&abs));
        out.push_str(joiner);
        out.push_str(mono);
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = &self.params.names()[i];
                    if k == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            push_signed(&mut out, idx == 0, c, &mono.join("*"), plain_rational, "*");
        }
        f.write_str(&out)
    }
}

impl FromStr for ParamPoly {
    type Err = RingError;

    /// Parses expressions such as `1/2*s^2 - (l1 + 1)*l2` over the standard list.
    fn from_str(text: &str) -> Result<Self, RingError> {
        ParamPoly::parse_in(Params::standard(), text)
    }
}

impl ParamPoly {
    pub fn parse_in(params: Params, text: &str) -> Result<Self, RingError> {
        let mut parser = Parser {
            src: text,
            pos: 0,
            params,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(RingError::Parse(text.to_string()));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    params: Params,
}

impl Parser<'_> {
    fn err(&self) -> RingError {
        RingError::Parse(self.src.to_string())
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamPoly, RingError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamPoly, RingError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?.as_constant().ok_or_else(|| self.err())?;
                if d.is_zero() {
                    return Err(RingError::DivisionByZero);
                }
                acc = acc.scale(&d.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamPoly, RingError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ParamPoly, RingError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let n: u32 = digits.parse().map_err(|_| self.err())?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<ParamPoly, RingError> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.err());
            }
            return Ok(inner);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n = BigInt::from_str(digits).map_err(|_| self.err())?;
                Ok(ParamPoly::constant_in(
                    self.params.clone(),
                    Rational::from_integer(n),
                ))
            }
            Some(c) if c.is_alphabetic() => {
                let name = self
                    .take_while(|c| c.is_alphanumeric() || c == '_')
                    .to_string();
                ParamPoly::variable_in(self.params.clone(), &name)
            }
            _ => Err(self.err()),
        }
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        ParamPoly::from_int(n)
    }
}

// Operator impls panic on mismatched parameter lists; use the `checked_*`
// methods when mixing lists.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &ParamPoly) -> ParamPoly {
                self.$checked(rhs).expect("parameter lists differ")
            }
        }
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        self.check(rhs).expect("parameter lists differ");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        self.check(rhs).expect("parameter lists differ");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(mut self) -> ParamPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -self.clone()
    }
}

/// Polynomial in one variable `t` with [`ParamPoly`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<ParamPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<ParamPoly>) -> Self {
        while coeffs.last().is_some_and(ParamPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![ParamPoly::one()])
    }

    /// Coefficient of `t^m` (zero past the degree).
    pub fn coeff(&self, m: usize) -> ParamPoly {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| if m % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![ParamPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|m| self.coeff(m) + other.coeff(m)).collect())
    }

    /// Evaluates every coefficient under a parameter assignment.
    pub fn eval_params(&self, assignment: &[(&str, Rational)]) -> Result<Self, RingError> {
        Ok(Self::new(
            self.coeffs
                .iter()
                .map(|c| c.eval(assignment))
                .collect::<Result<_, _>>()?,
        ))
    }
}

impl UniPoly {
    /// LaTeX rendering in the variable `t`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match m {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{{{m}}}"),
            };
            let coeff = c.to_latex();
            parts.push(match (t.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => t,
                (false, "-1") => format!("-{t}"),
                (false, _) if c.num_terms() > 1 => format!("\\left({coeff}\\right) {t}"),
                (false, _) => format!("{coeff} {t}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match m {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{m}"),
            };
            let coeff = if c.num_terms() > 1 {
                format!("({c})")
            } else {
                c.to_string()
            };
            parts.push(match (t.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => t,
                (false, "-1") => format!("-{t}"),
                (false, _) => format!("{coeff}*{t}"),
            });
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}
