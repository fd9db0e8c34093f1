//! The Weyl algebra in `n` variables over [`ParamPoly`].
//!
//! Elements are stored in normal order: every term is
//! `x^mono ∂^deriv` with all multiplications left of all derivatives.
//! Each element carries a [`Space`] tag telling whether its variables are
//! the coordinates `x` or the dual coordinates `ζ`; the Fourier transform
//! maps one space to the other. Variable indices are 0-based in the API
//! and 1-based in rendered output.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{int, ParamPoly, Rational, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    X,
    Zeta,
}

impl Space {
    pub fn dual(self) -> Space {
        match self {
            Space::X => Space::Zeta,
            Space::Zeta => Space::X,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::X => "x",
            Space::Zeta => "zeta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: Space, found: Space },
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("operand is not a polynomial")]
    NotAPolynomial,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// A normal-ordered monomial `x^mono ∂^deriv`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMono {
    pub mono: Vec<u32>,
    pub deriv: Vec<u32>,
}

impl WeylMono {
    pub fn unit(n: usize) -> Self {
        WeylMono {
            mono: vec![0; n],
            deriv: vec![0; n],
        }
    }

    pub fn order(&self) -> u32 {
        self.deriv.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.mono.iter().sum()
    }
}

/// `b^{↓j}` as a rational.
fn falling(b: u32, j: u32) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| acc * int(i64::from(b - i)))
}

fn binomial(a: u32, j: u32) -> Rational {
    falling(a, j) / falling(j, j)
}

/// Normal-orders `(x^a ∂^b)(x^c ∂^d)` using, per variable,
/// `∂^b x^c = Σ_j C(b,j) c^{↓j} x^{c-j} ∂^{b-j}`.
fn mul_monos(left: &WeylMono, right: &WeylMono) -> Vec<(WeylMono, Rational)> {
    let n = left.mono.len();
    let mut acc = vec![(
        WeylMono {
            mono: left.mono.clone(),
            deriv: right.deriv.clone(),
        },
        Rational::one(),
    )];
    for i in 0..n {
        let (b, c) = (left.deriv[i], right.mono[i]);
        if b == 0 || c == 0 {
            for (m, _) in acc.iter_mut() {
                m.mono[i] += c;
                m.deriv[i] += b;
            }
            continue;
        }
        let factors: Vec<Rational> = (0..=b.min(c))
            .map(|j| binomial(b, j) * falling(c, j))
            .collect();
        let mut next = Vec::with_capacity(acc.len() * factors.len());
        for (m, r) in &acc {
            for (j, f) in factors.iter().enumerate() {
                let j = j as u32;
                let mut m = m.clone();
                m.mono[i] += c - j;
                m.deriv[i] += b - j;
                next.push((m, r * f));
            }
        }
        acc = next;
    }
    acc
}

/// A normal-ordered element of the Weyl algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    space: Space,
    terms: BTreeMap<WeylMono, ParamPoly>,
}

impl WeylElement {
    pub fn zero(n: usize, space: Space) -> Self {
        WeylElement {
            n,
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, space: Space) -> Self {
        Self::constant(n, space, ParamPoly::one())
    }

    pub fn constant(n: usize, space: Space, c: ParamPoly) -> Self {
        Self::term(n, space, WeylMono::unit(n), c)
    }

    /// The single term `c·x^mono ∂^deriv`.
    pub fn term(n: usize, space: Space, m: WeylMono, c: ParamPoly) -> Self {
        assert_eq!(m.mono.len(), n, "mono length");
        assert_eq!(m.deriv.len(), n, "deriv length");
        let mut e = Self::zero(n, space);
        e.add_term(m, c);
        e
    }

    /// The polynomial `c·x^mono`.
    pub fn monomial(n: usize, space: Space, mono: &[u32], c: ParamPoly) -> Self {
        Self::term(
            n,
            space,
            WeylMono {
                mono: mono.to_vec(),
                deriv: vec![0; n],
            },
            c,
        )
    }

    /// The coordinate `x_i` (or `ζ_i`).
    pub fn var(n: usize, space: Space, i: usize) -> Self {
        let mut m = WeylMono::unit(n);
        m.mono[i] = 1;
        Self::term(n, space, m, ParamPoly::one())
    }

    /// The derivative `∂/∂x_i` (or `∂/∂ζ_i`).
    pub fn der(n: usize, space: Space, i: usize) -> Self {
        let mut m = WeylMono::unit(n);
        m.deriv[i] = 1;
        Self::term(n, space, m, ParamPoly::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMono, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &WeylMono) -> ParamPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.order() == 0)
    }

    /// Highest total derivative order, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(WeylMono::order).max()
    }

    fn add_term(&mut self, m: WeylMono, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), WeylError> {
        if self.n != other.n {
            return Err(WeylError::ArityMismatch(self.n, other.n));
        }
        if self.space != other.space {
            return Err(WeylError::SpaceMismatch {
                expected: self.space,
                found: other.space,
            });
        }
        Ok(())
    }

    fn expect_space(&self, space: Space) -> Result<(), WeylError> {
        if self.space == space {
            Ok(())
        } else {
            Err(WeylError::SpaceMismatch {
                expected: space,
                found: self.space,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, WeylError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&ParamPoly::from_int(-1))
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero(self.n, self.space);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n, self.space);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.scale(c));
        }
        out
    }

    /// Normal-ordered product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self, WeylError> {
        self.compatible(other)?;
        let mut out = Self::zero(self.n, self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, r) in mul_monos(ma, mb) {
                    out.add_term(m, c.scale(&r));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, WeylError> {
        let mut out = Self::one(self.n, self.space);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The action `self • p` on a polynomial `p`.
    pub fn act(&self, p: &Self) -> Result<Self, WeylError> {
        self.compatible(p)?;
        if !p.is_polynomial() {
            return Err(WeylError::NotAPolynomial);
        }
        let mut out = Self::zero(self.n, self.space);
        for (dm, dc) in &self.terms {
            for (pm, pc) in &p.terms {
                if dm.deriv.iter().zip(&pm.mono).any(|(d, m)| d > m) {
                    continue;
                }
                let mut r = Rational::one();
                let mut mono = dm.mono.clone();
                for ((m, &pe), &de) in mono.iter_mut().zip(&pm.mono).zip(&dm.deriv) {
                    r *= falling(pe, de);
                    *m += pe - de;
                }
                let m = WeylMono {
                    mono,
                    deriv: vec![0; self.n],
                };
                out.add_term(m, (dc * pc).scale(&r));
            }
        }
        Ok(out)
    }

    /// The algebraic Fourier transform `∂_{x_i} ↦ -ζ_i`, `x_i ↦ ∂_{ζ_i}`.
    pub fn fourier_hat(&self) -> Result<Self, WeylError> {
        self.expect_space(Space::X)?;
        Ok(self.transform(|m| (m.order() % 2 == 1, m.mono.clone(), m.deriv.clone())))
    }

    /// Inverse of [`fourier_hat`](Self::fourier_hat):
    /// `ζ_i ↦ -∂_{x_i}`, `∂_{ζ_i} ↦ x_i`.
    pub fn fourier_hat_inverse(&self) -> Result<Self, WeylError> {
        self.expect_space(Space::Zeta)?;
        Ok(self.transform(|m| (m.degree() % 2 == 1, m.mono.clone(), m.deriv.clone())))
    }

    /// Maps each term `c·z^a ∂^b` to `±c·∂'^a z'^b` in the dual space,
    /// where `split` returns the sign and `(a, b)`.
    fn transform(&self, split: impl Fn(&WeylMono) -> (bool, Vec<u32>, Vec<u32>)) -> Self {
        let mut out = Self::zero(self.n, self.space.dual());
        for (m, c) in &self.terms {
            let (negate, a, b) = split(m);
            let left = WeylMono {
                mono: vec![0; self.n],
                deriv: a,
            };
            let right = WeylMono {
                mono: b,
                deriv: vec![0; self.n],
            };
            let c = if negate { -c } else { c.clone() };
            for (m, r) in mul_monos(&left, &right) {
                out.add_term(m, c.scale(&r));
            }
        }
        out
    }

    /// Constant-coefficient part.
    pub fn trun0(&self) -> Self {
        WeylElement {
            n: self.n,
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Truncated symbol: `∂^b ↦ ζ^b` applied to the constant-coefficient part.
    pub fn symb0(&self) -> Result<Self, WeylError> {
        self.expect_space(Space::X)?;
        let mut out = Self::zero(self.n, Space::Zeta);
        for (m, c) in self.trun0().terms {
            out.add_term(
                WeylMono {
                    mono: m.deriv,
                    deriv: vec![0; self.n],
                },
                c,
            );
        }
        Ok(out)
    }

    /// Applies a parameter assignment to every coefficient.
    pub fn eval_params(&self, assignment: &[(&str, Rational)]) -> Result<Self, WeylError> {
        let mut out = Self::zero(self.n, self.space);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.eval(assignment)?);
        }
        Ok(out)
    }

    /// Terms in display order: higher derivative order first.
    fn display_terms(&self) -> Vec<(&WeylMono, &ParamPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            b.order()
                .cmp(&a.order())
                .then_with(|| b.deriv.cmp(&a.deriv))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| b.mono.cmp(&a.mono))
        });
        v
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let var = match self.space {
            Space::X => "x",
            Space::Zeta => "\\zeta",
        };
        let power = |name: String, k: u32| {
            if k == 1 {
                name
            } else {
                format!("{name}^{{{k}}}")
            }
        };
        let mut out = String::new();
        for (idx, (m, c)) in self.display_terms().into_iter().enumerate() {
            let mut body: Vec<String> = m
                .mono
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| power(format!("{var}_{}", i + 1), k))
                .collect();
            if m.order() > 0 {
                let denom: Vec<String> = m
                    .deriv
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| power(format!("\\partial {var}_{}", i + 1), k))
                    .collect();
                let num = power("\\partial".to_string(), m.order());
                body.push(format!("\\frac{{{num}}}{{{}}}", denom.join(" ")));
            }
            let body = body.join(" ");
            if c.num_terms() > 1 {
                if idx > 0 {
                    out.push_str(" + ");
                }
                out.push_str(&format!("\\left({}\\right)", c.to_latex()));
                if !body.is_empty() {
                    out.push(' ');
                    out.push_str(&body);
                }
            } else {
                let r = c.as_constant();
                let (r, body) = match r {
                    Some(r) => (r, body),
                    None => {
                        let (_, r) = c.terms().next().expect("nonzero");
                        let mono_tex = c.scale(&r.recip()).to_latex();
                        (r.clone(), format!("{mono_tex} {body}").trim().to_string())
                    }
                };
                crate::ring::push_signed(
                    &mut out,
                    idx == 0,
                    &r,
                    &body,
                    crate::ring::latex_rational,
                    " ",
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WeylJson::from(self)).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, WeylError> {
        let raw: WeylJson =
            serde_json::from_value(value.clone()).map_err(|e| WeylError::Json(e.to_string()))?;
        let mut out = Self::zero(raw.n, raw.space);
        for t in raw.terms {
            if t.mono.len() != raw.n || t.deriv.len() != raw.n {
                return Err(WeylError::Json(
                    "exponent vector length differs from n".into(),
                ));
            }
            out.add_term(
                WeylMono {
                    mono: t.mono,
                    deriv: t.deriv,
                },
                t.coeff.parse()?,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for WeylElement {
    /// Plain text, e.g. `d1 + 1/2*x2*d3` (`z1`, `dz1` in the dual space).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (var, der) = match self.space {
            Space::X => ("x", "d"),
            Space::Zeta => ("z", "dz"),
        };
        let factor = |name: String, k: u32| {
            if k == 1 {
                name
            } else {
                format!("{name}^{k}")
            }
        };
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.display_terms() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in m.mono.iter().enumerate().filter(|(_, &k)| k > 0) {
                factors.push(factor(format!("{var}{}", i + 1), k));
            }
            for (i, &k) in m.deriv.iter().enumerate().filter(|(_, &k)| k > 0) {
                factors.push(factor(format!("{der}{}", i + 1), k));
            }
            let body = factors.join("*");
            let coeff = if c.num_terms() > 1 {
                format!("({c})")
            } else {
                c.to_string()
            };
            parts.push(match (body.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => body,
                (false, "-1") => format!("-{body}"),
                (false, _) => format!("{coeff}*{body}"),
            });
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        f.write_str(&out)
    }
}

#[derive(Serialize, Deserialize)]
struct WeylJson {
    space: Space,
    n: usize,
    terms: Vec<WeylTermJson>,
}

#[derive(Serialize, Deserialize)]
struct WeylTermJson {
    coeff: String,
    mono: Vec<u32>,
    deriv: Vec<u32>,
}

impl From<&WeylElement> for WeylJson {
    fn from(e: &WeylElement) -> Self {
        WeylJson {
            space: e.space,
            n: e.n,
            terms: e
                .terms
                .iter()
                .map(|(m, c)| WeylTermJson {
                    coeff: c.to_string(),
                    mono: m.mono.clone(),
                    deriv: m.deriv.clone(),
                })
                .collect(),
        }
    }
}

/// Convenience: `x^mono ∂^deriv` with coefficient `c`, 3 variables.
pub fn term3(space: Space, mono: [u32; 3], deriv: [u32; 3], c: Rational) -> WeylElement {
    WeylElement::term(
        3,
        space,
        WeylMono {
            mono: mono.to_vec(),
            deriv: deriv.to_vec(),
        },
        ParamPoly::constant(c),
    )
}

/// Sums an iterator of elements that share `n` and `space`.
pub fn sum(
    n: usize,
    space: Space,
    items: impl IntoIterator<Item = WeylElement>,
) -> Result<WeylElement, WeylError> {
    items
        .into_iter()
        .try_fold(WeylElement::zero(n, space), |acc, e| acc.add(&e))
}
