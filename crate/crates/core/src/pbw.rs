//! The universal enveloping algebra of sl(3) in PBW normal form.
//!
//! Basis order: `N1-, N2-, N3-, H1, H2, N1+, N2+, N3+`, i.e. the matrix
//! units `E21, E32, E31, E11-E22, E22-E33, E12, E23, E13`. Structure
//! constants are computed from 3×3 matrix commutators on first use.
//!
//! Products are normal-ordered by right multiplication with single
//! generators, memoized per thread. The module also provides the
//! symmetrization map, the realizations `dR` and `d̂L` of the nilradical
//! `n-`, the Fourier isomorphism `F_c` with its inverse, and the action on
//! Verma modules.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::sync::LazyLock;
use thiserror::Error;

use crate::fmethod::MChar;
use crate::ring::{rat, ParamPoly, Rational, RingError};
use crate::weyl::{Space, WeylElement, WeylError, WeylMono};

/// Default cap on the total degree accepted by [`symmetrize`].
pub const DEFAULT_DEGREE_CAP: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("commutator is not in the span of the basis")]
    BasisDecompositionFailure,
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeLimitExceeded { degree: u32, cap: u32 },
    #[error("element is not supported on the nilradical n-")]
    NotInNilradical,
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    N1m,
    N2m,
    N3m,
    H1,
    H2,
    N1p,
    N2p,
    N3p,
}

pub type Matrix3 = [[i64; 3]; 3];

impl Gen {
    pub const ALL: [Gen; 8] = [
        Gen::N1m,
        Gen::N2m,
        Gen::N3m,
        Gen::H1,
        Gen::H2,
        Gen::N1p,
        Gen::N2p,
        Gen::N3p,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn matrix(self) -> Matrix3 {
        let mut m = [[0; 3]; 3];
        match self {
            Gen::N1m => m[1][0] = 1,
            Gen::N2m => m[2][1] = 1,
            Gen::N3m => m[2][0] = 1,
            Gen::H1 => {
                m[0][0] = 1;
                m[1][1] = -1;
            }
            Gen::H2 => {
                m[1][1] = 1;
                m[2][2] = -1;
            }
            Gen::N1p => m[0][1] = 1,
            Gen::N2p => m[1][2] = 1,
            Gen::N3p => m[0][2] = 1,
        }
        m
    }

    pub fn name(self) -> &'static str {
        ["N1-", "N2-", "N3-", "H1", "H2", "N1+", "N2+", "N3+"][self.index()]
    }

    pub fn latex(self) -> &'static str {
        [
            "N_1^-", "N_2^-", "N_3^-", "H_1", "H_2", "N_1^+", "N_2^+", "N_3^+",
        ][self.index()]
    }
}

fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn commutator(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = ab[i][j] - ba[i][j];
        }
    }
    c
}

/// Coordinates of a traceless matrix in the basis.
pub fn decompose(m: &Matrix3) -> Result<[i64; 8], PbwError> {
    let mut out = [0; 8];
    for g in Gen::ALL {
        let u = g.matrix();
        if let Some((i, j)) = (0..9)
            .map(|k| (k / 3, k % 3))
            .find(|&(i, j)| i != j && u[i][j] != 0)
        {
            out[g.index()] = m[i][j];
        }
    }
    let (h1, h2) = (m[0][0], -m[2][2]);
    if m[1][1] != h2 - h1 {
        return Err(PbwError::BasisDecompositionFailure);
    }
    out[Gen::H1.index()] = h1;
    out[Gen::H2.index()] = h2;
    Ok(out)
}

static STRUCTURE: LazyLock<[[[i64; 8]; 8]; 8]> = LazyLock::new(|| {
    let mut table = [[[0; 8]; 8]; 8];
    for a in Gen::ALL {
        for b in Gen::ALL {
            table[a.index()][b.index()] = decompose(&commutator(&a.matrix(), &b.matrix()))
                .expect("sl(3) is closed under brackets");
        }
    }
    table
});

/// `[a, b]` as coordinates in the basis.
pub fn bracket(a: Gen, b: Gen) -> [i64; 8] {
    STRUCTURE[a.index()][b.index()]
}

/// Sign of `Ad(m) g` for a diagonal ±1 matrix `m`.
pub fn adjoint_sign(g: Gen, diag: [i64; 3]) -> i64 {
    let mut m = [[0; 3]; 3];
    for i in 0..3 {
        m[i][i] = diag[i];
    }
    let image = decompose(&mat_mul(&mat_mul(&m, &g.matrix()), &m)).expect("basis element");
    let coords: Vec<i64> = image.iter().copied().filter(|&c| c != 0).collect();
    assert!(
        coords.len() == 1 && image[g.index()] != 0,
        "Ad(m) preserves root spaces"
    );
    image[g.index()]
}

/// PBW exponents in basis order.
pub type Exps = [u8; 8];

type Expansion = Rc<Vec<(Exps, i128)>>;

thread_local! {
    static GEN_CACHE: RefCell<HashMap<(Exps, u8), Expansion>> = RefCell::new(HashMap::new());
    static MONO_CACHE: RefCell<HashMap<(Exps, Exps), Expansion>> = RefCell::new(HashMap::new());
    static SYM_CACHE: RefCell<HashMap<(u32, u32, u32), UEnv>> = RefCell::new(HashMap::new());
}

fn accumulate(acc: &mut HashMap<Exps, i128>, e: Exps, c: i128) {
    let slot = acc.entry(e).or_insert(0);
    *slot = slot.checked_add(c).expect("PBW coefficient overflow");
}

fn finish(acc: HashMap<Exps, i128>) -> Expansion {
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort();
    Rc::new(v)
}

/// `x^m · g_j` in PBW form.
fn times_gen(m: Exps, j: usize) -> Expansion {
    let key = (m, j as u8);
    if let Some(hit) = GEN_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let out = match (0..8).rev().find(|&p| m[p] > 0) {
        Some(p) if p > j => {
            // x^m g_j = x^{m'} g_p g_j = (x^{m'} g_j) g_p + x^{m'} [g_p, g_j]
            let mut rest = m;
            rest[p] -= 1;
            let mut acc = HashMap::new();
            for &(t, c) in times_gen(rest, j).iter() {
                for &(u, d) in times_gen(t, p).iter() {
                    accumulate(
                        &mut acc,
                        u,
                        c.checked_mul(d).expect("PBW coefficient overflow"),
                    );
                }
            }
            for (k, &b) in STRUCTURE[p][j].iter().enumerate() {
                if b != 0 {
                    for &(u, d) in times_gen(rest, k).iter() {
                        accumulate(&mut acc, u, d * i128::from(b));
                    }
                }
            }
            finish(acc)
        }
        _ => {
            let mut e = m;
            e[j] = e[j].checked_add(1).expect("exponent overflow");
            Rc::new(vec![(e, 1)])
        }
    };
    GEN_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// `x^a · x^b` in PBW form.
fn mono_mul(a: Exps, b: Exps) -> Expansion {
    if b == [0; 8] {
        return Rc::new(vec![(a, 1)]);
    }
    if let Some(hit) = MONO_CACHE.with(|c| c.borrow().get(&(a, b)).cloned()) {
        return hit;
    }
    let mut cur: HashMap<Exps, i128> = HashMap::from([(a, 1)]);
    for (j, &k) in b.iter().enumerate() {
        for _ in 0..k {
            let mut next = HashMap::new();
            for (t, c) in cur {
                for &(u, d) in times_gen(t, j).iter() {
                    accumulate(
                        &mut next,
                        u,
                        c.checked_mul(d).expect("PBW coefficient overflow"),
                    );
                }
            }
            cur = next;
        }
    }
    let out = finish(cur);
    MONO_CACHE.with(|c| c.borrow_mut().insert((a, b), out.clone()));
    out
}

fn big(c: i128) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

/// An element of U(sl3) in PBW normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UEnv {
    terms: BTreeMap<Exps, ParamPoly>,
}

impl UEnv {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term([0; 8], ParamPoly::one())
    }

    pub fn term(e: Exps, c: ParamPoly) -> Self {
        let mut u = Self::zero();
        u.add_term(e, c);
        u
    }

    pub fn gen(g: Gen) -> Self {
        let mut e = [0; 8];
        e[g.index()] = 1;
        Self::term(e, ParamPoly::one())
    }

    /// `(N1-)^a (N2-)^b (N3-)^c`.
    pub fn nminus(a: u8, b: u8, c: u8) -> Self {
        Self::term([a, b, c, 0, 0, 0, 0, 0], ParamPoly::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exps) -> ParamPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term lies in U(n-).
    pub fn is_nminus_only(&self) -> bool {
        self.terms.keys().all(|e| e[3..].iter().all(|&x| x == 0))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
    }

    fn add_term(&mut self, e: Exps, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_rational(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x.scale(c));
        }
        out
    }

    /// The PBW product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for &(e, r) in mono_mul(*a, *b).iter() {
                    out.add_term(e, c.scale(&big(r)));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Adds `delta` to the coefficient of `e`.
    pub fn bump(&self, e: Exps, delta: &ParamPoly) -> Self {
        let mut out = self.clone();
        out.add_term(e, delta.clone());
        out
    }

    pub fn eval_params(&self, assignment: &[(&str, Rational)]) -> Result<Self, RingError> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.eval(assignment)?);
        }
        Ok(out)
    }

    fn display_terms(&self) -> Vec<(&Exps, &ParamPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| u32::from(x)).sum();
            let db: u32 = b.iter().map(|&x| u32::from(x)).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    fn render(&self, factor: impl Fn(Gen, u8) -> String, joiner: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.display_terms().into_iter().enumerate() {
            let body: Vec<String> = Gen::ALL
                .iter()
                .filter(|g| e[g.index()] > 0)
                .map(|&g| factor(g, e[g.index()]))
                .collect();
            let body = body.join(joiner);
            match c.as_constant() {
                Some(r) => {
                    let fmt_abs = if latex {
                        crate::ring::latex_rational
                    } else {
                        |r: &Rational| r.to_string()
                    };
                    crate::ring::push_signed(&mut out, idx == 0, &r, &body, fmt_abs, joiner);
                }
                None => {
                    if idx > 0 {
                        out.push_str(" + ");
                    }
                    let c = if latex {
                        format!("\\left({}\\right)", c.to_latex())
                    } else {
                        format!("({c})")
                    };
                    out.push_str(&c);
                    if !body.is_empty() {
                        out.push_str(joiner);
                        out.push_str(&body);
                    }
                }
            }
        }
        out
    }

    /// LaTeX rendering with factors `(N_j^\pm)^{k}` and `H_j^{k}`.
    pub fn to_latex(&self) -> String {
        self.render(
            |g, k| match (g, k) {
                (Gen::H1 | Gen::H2, 1) => g.latex().to_string(),
                (Gen::H1 | Gen::H2, _) => format!("{}^{{{k}}}", g.latex()),
                (_, 1) => format!("({})", g.latex()),
                _ => format!("({})^{{{k}}}", g.latex()),
            },
            " ",
            true,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<UEnvTermJson> = self
            .terms
            .iter()
            .map(|(e, c)| UEnvTermJson {
                coeff: c.to_string(),
                exps: *e,
            })
            .collect();
        serde_json::to_value(UEnvJson { terms }).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PbwError> {
        let raw: UEnvJson =
            serde_json::from_value(value.clone()).map_err(|e| PbwError::Json(e.to_string()))?;
        let mut out = Self::zero();
        for t in raw.terms {
            out.add_term(t.exps, t.coeff.parse()?);
        }
        Ok(out)
    }
}

impl fmt::Display for UEnv {
    /// Plain text, e.g. `N1-^2*N2- + 1/2*N3-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(
            |g, k| {
                if k == 1 {
                    g.name().to_string()
                } else {
                    format!("{}^{k}", g.name())
                }
            },
            "*",
            false,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct UEnvJson {
    terms: Vec<UEnvTermJson>,
}

#[derive(Serialize, Deserialize)]
struct UEnvTermJson {
    coeff: String,
    exps: Exps,
}

/// The symmetrization cap: `FMETHOD_DEGREE_CAP` if set, else 14.
pub fn degree_cap() -> u32 {
    std::env::var("FMETHOD_DEGREE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// `s((N1-)^a (N2-)^b (N3-)^c)`: the average over all orderings of the
/// multiset, multiplied out in U(n-).
///
/// Orderings are grouped by their first letter `Y`, so
/// `s(m) = Σ_Y (count_Y / |m|) · Y · s(m - Y)`, memoized on the triple.
pub fn symmetrize(a: u32, b: u32, c: u32) -> Result<UEnv, PbwError> {
    let degree = a + b + c;
    let cap = degree_cap();
    if degree > cap {
        return Err(PbwError::DegreeLimitExceeded { degree, cap });
    }
    Ok(symmetrize_memo(a, b, c))
}

fn symmetrize_memo(a: u32, b: u32, c: u32) -> UEnv {
    if let Some(hit) = SYM_CACHE.with(|m| m.borrow().get(&(a, b, c)).cloned()) {
        return hit;
    }
    let total = a + b + c;
    let out = if total == 0 {
        UEnv::one()
    } else {
        let counts = [a, b, c];
        let mut acc = UEnv::zero();
        for (i, gen) in [Gen::N1m, Gen::N2m, Gen::N3m].into_iter().enumerate() {
            if counts[i] == 0 {
                continue;
            }
            let mut rest = counts;
            rest[i] -= 1;
            let tail = symmetrize_memo(rest[0], rest[1], rest[2]);
            let weight = rat(i64::from(counts[i]), i64::from(total));
            acc = acc.add(&UEnv::gen(gen).mul(&tail).scale_rational(&weight));
        }
        acc
    };
    SYM_CACHE.with(|m| m.borrow_mut().insert((a, b, c), out.clone()));
    out
}

fn weyl3(space: Space, terms: &[([u32; 3], [u32; 3], Rational)]) -> WeylElement {
    let mut out = WeylElement::zero(3, space);
    for (mono, deriv, c) in terms {
        let t = WeylElement::term(
            3,
            space,
            WeylMono {
                mono: mono.to_vec(),
                deriv: deriv.to_vec(),
            },
            ParamPoly::constant(c.clone()),
        );
        out = out.add(&t).expect("same space");
    }
    out
}

/// `dR(N1-) = ∂1 + (x2/2)∂3`, `dR(N2-) = ∂2 - (x1/2)∂3`, `dR(N3-) = ∂3`.
pub fn dr_generators() -> [WeylElement; 3] {
    let one = Rational::one();
    [
        weyl3(
            Space::X,
            &[
                ([0, 0, 0], [1, 0, 0], one.clone()),
                ([0, 1, 0], [0, 0, 1], rat(1, 2)),
            ],
        ),
        weyl3(
            Space::X,
            &[
                ([0, 0, 0], [0, 1, 0], one.clone()),
                ([1, 0, 0], [0, 0, 1], rat(-1, 2)),
            ],
        ),
        weyl3(Space::X, &[([0, 0, 0], [0, 0, 1], one)]),
    ]
}

/// `d̂L(N1-) = ζ1 - (ζ3/2)∂ζ2`, `d̂L(N2-) = ζ2 + (ζ3/2)∂ζ1`, `d̂L(N3-) = ζ3`.
pub fn dlhat_generators() -> [WeylElement; 3] {
    let one = Rational::one();
    [
        weyl3(
            Space::Zeta,
            &[
                ([1, 0, 0], [0, 0, 0], one.clone()),
                ([0, 0, 1], [0, 1, 0], rat(-1, 2)),
            ],
        ),
        weyl3(
            Space::Zeta,
            &[
                ([0, 1, 0], [0, 0, 0], one.clone()),
                ([0, 0, 1], [1, 0, 0], rat(1, 2)),
            ],
        ),
        weyl3(Space::Zeta, &[([0, 0, 1], [0, 0, 0], one)]),
    ]
}

/// Extends generator images multiplicatively over the PBW terms of `u`.
fn realize(u: &UEnv, gens: &[WeylElement; 3], space: Space) -> Result<WeylElement, PbwError> {
    if !u.is_nminus_only() {
        return Err(PbwError::NotInNilradical);
    }
    let mut powers: [Vec<WeylElement>; 3] = Default::default();
    for (i, p) in powers.iter_mut().enumerate() {
        let top = u.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        p.push(WeylElement::one(3, space));
        for k in 0..top as usize {
            let next = p[k].mul(&gens[i])?;
            p.push(next);
        }
    }
    let mut out = WeylElement::zero(3, space);
    for (e, c) in &u.terms {
        let t = powers[0][e[0] as usize]
            .mul(&powers[1][e[1] as usize])?
            .mul(&powers[2][e[2] as usize])?;
        out = out.add(&t.scale(c))?;
    }
    Ok(out)
}

/// The algebra homomorphism `dR: U(n-) → D(x)`.
pub fn dr_realize(u: &UEnv) -> Result<WeylElement, PbwError> {
    realize(u, &dr_generators(), Space::X)
}

/// The algebra homomorphism `d̂L: U(n-) → D(ζ)`.
pub fn dlhat_realize(u: &UEnv) -> Result<WeylElement, PbwError> {
    realize(u, &dlhat_generators(), Space::Zeta)
}

/// `F_c(u) = d̂L(u) • 1`.
pub fn fc_forward(u: &UEnv) -> Result<WeylElement, PbwError> {
    Ok(dlhat_realize(u)?.act(&WeylElement::one(3, Space::Zeta))?)
}

/// `F_c⁻¹`: `ζ^r ↦ s(N^r)`, extended linearly.
pub fn fc_inverse(p: &WeylElement) -> Result<UEnv, PbwError> {
    if p.space() != Space::Zeta {
        return Err(WeylError::SpaceMismatch {
            expected: Space::Zeta,
            found: p.space(),
        }
        .into());
    }
    if p.n() != 3 {
        return Err(WeylError::ArityMismatch(3, p.n()).into());
    }
    if !p.is_polynomial() {
        return Err(WeylError::NotAPolynomial.into());
    }
    let mut out = UEnv::zero();
    for (m, c) in p.terms() {
        out = out.add(&symmetrize(m.mono[0], m.mono[1], m.mono[2])?.scale(c));
    }
    Ok(out)
}

/// A vector `body ⊗ 1` of the Verma module with highest weight values
/// `hw = (μ(H1), μ(H2))` and character `mchar`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaVector {
    pub body: UEnv,
    pub hw: (ParamPoly, ParamPoly),
    pub mchar: MChar,
}

impl VermaVector {
    pub fn new(body: UEnv, hw: (ParamPoly, ParamPoly), mchar: MChar) -> Result<Self, PbwError> {
        if !body.is_nminus_only() {
            return Err(PbwError::NotInNilradical);
        }
        Ok(VermaVector { body, hw, mchar })
    }
}

/// `x · v`: multiply, drop terms containing `n+`, and replace `H_i` by `μ(H_i)`.
pub fn verma_act(x: &UEnv, v: &VermaVector) -> VermaVector {
    let product = x.mul(&v.body);
    let mut body = UEnv::zero();
    for (e, c) in product.terms() {
        if e[5..].iter().any(|&k| k > 0) {
            continue;
        }
        let weight = v.hw.0.pow(u32::from(e[3])) * v.hw.1.pow(u32::from(e[4]));
        body.add_term([e[0], e[1], e[2], 0, 0, 0, 0, 0], c * &weight);
    }
    VermaVector {
        body,
        hw: v.hw.clone(),
        mchar: v.mchar,
    }
}

/// True iff `N1+` and `N2+` both annihilate `v`.
pub fn is_singular(v: &VermaVector) -> bool {
    verma_act(&UEnv::gen(Gen::N1p), v).body.is_zero()
        && verma_act(&UEnv::gen(Gen::N2p), v).body.is_zero()
}
