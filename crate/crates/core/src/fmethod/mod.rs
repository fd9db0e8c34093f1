//! The SL(3,R)/B pipeline.
//!
//! Parameters `(ε; λ)` index the induced representation `I(λ1,λ2)^(ε1,ε2)`
//! and, dually, the Verma module `M(-λ1,-λ2)^(ε1,ε2)`. A differential
//! intertwining operator `I(λ)^ε → I(ν)^δ` corresponds to a Verma
//! homomorphism `M(-ν)^δ → M(-λ)^ε`; [`classify`] decides which family, if
//! any, realizes a given quadruple.

mod factor;
mod families;
mod fsystem;
mod tsat;
mod weights;

use std::fmt;
use std::str::FromStr;

use serde_json::json;
use thiserror::Error;

use crate::pbw::PbwError;
use crate::ring::{int, rat, to_i64, ParamPoly, Rational, RingError};
use crate::weyl::WeylError;

pub use factor::{verify_factorization, FactorCase, FactorReport, IdentityCheck};
pub use families::{
    build_operator, build_verma_hom, compose_homs, hom_at, sol_generator, VermaHom,
};
pub use fsystem::{
    am_recurrence, fsystem_annihilates, fsystem_solve, fsystem_verify, krawtchouk_form1,
    krawtchouk_form2, p_family, p_family_jacobi, p_minus, p_plus, pc, FsystemSolution,
};
pub use tsat::{
    apply, closed_form_matrix, dpi_star, dpi_star_hat, fsystem_operator, t_saturate, tsat_matrix,
    Matrix,
};
pub use weights::{
    hom_word, lambda_of_weight, link_check, mu_lambda, reflect, reflect_word, Root, Weight3,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FmethodError {
    #[error("parameters must be rational constants")]
    NonRationalInput,
    #[error("invalid family parameters: {0}")]
    InvalidTag(String),
    #[error("{tag} is not defined at lambda = ({l1}, {l2})")]
    TagMismatch { tag: String, l1: String, l2: String },
    #[error("image of t^{m} leaves Pol({k},{l})")]
    ImageOutsidePol { k: u32, l: u32, m: u32 },
    #[error("(k,l) = ({k},{l}) is outside the regime of case {case}")]
    RegimeMismatch { case: u8, k: u32, l: u32 },
    #[error("inner target {inner} differs from outer source {outer}")]
    ParameterChainMismatch { inner: String, outer: String },
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `(-1)^n` as a sign.
pub fn parity(n: i64) -> i8 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A character `(ε1, ε2)` of `M = {diag(±1, ±1, ±1)}`, `χ(diag(b)) = |b1|_ε1 |b3|_ε2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MChar(i8, i8);

/// The elements `m0, m1, m2, m3` of `M`.
pub const M_ELEMENTS: [[i64; 3]; 4] = [[1, 1, 1], [-1, 1, -1], [1, -1, -1], [-1, -1, 1]];

impl MChar {
    pub const PLUS_PLUS: MChar = MChar(1, 1);

    /// # Panics
    /// Panics unless both signs are ±1.
    pub fn new(e1: i8, e2: i8) -> Self {
        assert!(e1.abs() == 1 && e2.abs() == 1, "signs must be ±1");
        MChar(e1, e2)
    }

    pub fn signs(self) -> (i8, i8) {
        (self.0, self.1)
    }

    pub fn eval(self, diag: [i64; 3]) -> i64 {
        let part = |b: i64, e: i8| if e > 0 { b.abs() } else { b };
        part(diag[0], self.0) * part(diag[2], self.1)
    }

    /// Values on `m0..m3`.
    pub fn table_row(self) -> [i64; 4] {
        M_ELEMENTS.map(|m| self.eval(m))
    }

    /// `(ε1·(-)^a, ε2·(-)^b)`.
    pub fn twist(self, a: i64, b: i64) -> MChar {
        MChar(self.0 * parity(a), self.1 * parity(b))
    }
}

/// Componentwise product.
impl std::ops::Mul for MChar {
    type Output = MChar;

    fn mul(self, other: MChar) -> MChar {
        MChar(self.0 * other.0, self.1 * other.1)
    }
}

impl fmt::Display for MChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |e: i8| if e > 0 { '+' } else { '-' };
        write!(f, "({},{})", s(self.0), s(self.1))
    }
}

impl FromStr for MChar {
    type Err = String;

    /// Parses `+,-` (parentheses optional).
    fn from_str(text: &str) -> Result<Self, String> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let sign = |t: &str| match t.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(format!("bad sign `{other}`")),
        };
        match inner.split(',').collect::<Vec<_>>().as_slice() {
            [a, b] => Ok(MChar(sign(a)?, sign(b)?)),
            _ => Err(format!("expected two signs, got `{text}`")),
        }
    }
}

/// `(ε; λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedParams {
    pub eps: MChar,
    pub lam: (ParamPoly, ParamPoly),
}

impl fmt::Display for InducedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; ({}, {})", self.eps, self.lam.0, self.lam.1)
    }
}

/// An operator family, or the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTag {
    Identity,
    A1 { k: u32 },
    A2 { k: u32 },
    Bplus { k: u32, l: u32 },
    Bminus { k: u32, l: u32 },
    C { k: u32, s: ParamPoly },
}

fn positive(name: &str, k: u32) -> Result<(), FmethodError> {
    if k == 0 {
        Err(FmethodError::InvalidTag(format!(
            "{name} must be a positive integer"
        )))
    } else {
        Ok(())
    }
}

fn pp(n: i64) -> ParamPoly {
    ParamPoly::from_int(n)
}

impl FamilyTag {
    pub fn a1(k: u32) -> Result<Self, FmethodError> {
        positive("k", k)?;
        Ok(FamilyTag::A1 { k })
    }

    pub fn a2(k: u32) -> Result<Self, FmethodError> {
        positive("k", k)?;
        Ok(FamilyTag::A2 { k })
    }

    pub fn bplus(k: u32, l: u32) -> Result<Self, FmethodError> {
        positive("k", k)?;
        positive("l", l)?;
        Ok(FamilyTag::Bplus { k, l })
    }

    pub fn bminus(k: u32, l: u32) -> Result<Self, FmethodError> {
        positive("k", k)?;
        positive("l", l)?;
        Ok(FamilyTag::Bminus { k, l })
    }

    /// The C family at `λ = ((2-k-s)/2, (2-k+s)/2)`; `s` may be symbolic.
    pub fn c(k: u32, s: ParamPoly) -> Result<Self, FmethodError> {
        positive("k", k)?;
        Ok(FamilyTag::C { k, s })
    }

    /// Degrees `(k, l)` of `Pol(k,l)` containing the generator.
    pub fn degrees(&self) -> (u32, u32) {
        match *self {
            FamilyTag::Identity => (0, 0),
            FamilyTag::A1 { k } => (k, 0),
            FamilyTag::A2 { k } => (0, k),
            FamilyTag::Bplus { k, l } | FamilyTag::Bminus { k, l } => (k, l),
            FamilyTag::C { k, .. } => (k, k),
        }
    }

    /// `λ` at which the family lives. Components the family leaves free are
    /// the symbols `l1`, `l2`.
    pub fn target_lambda(&self) -> (ParamPoly, ParamPoly) {
        let i = |n: u32| i64::from(n);
        match self {
            FamilyTag::Identity => (ParamPoly::l1(), ParamPoly::l2()),
            FamilyTag::A1 { k } => (pp(1 - i(*k)), ParamPoly::l2()),
            FamilyTag::A2 { k } => (ParamPoly::l1(), pp(1 - i(*k))),
            FamilyTag::Bplus { k, l } => (pp(1 - i(*k)), pp(1 - i(*l) + i(*k))),
            FamilyTag::Bminus { k, l } => (pp(1 - i(*k) + i(*l)), pp(1 - i(*l))),
            FamilyTag::C { k, s } => {
                let base = pp(2 - i(*k));
                let half = rat(1, 2);
                ((&base - s).scale(&half), (&base + s).scale(&half))
            }
        }
    }

    /// Which components of [`target_lambda`](Self::target_lambda) are free.
    fn free_components(&self) -> (bool, bool) {
        match self {
            FamilyTag::Identity => (true, true),
            FamilyTag::A1 { .. } => (false, true),
            FamilyTag::A2 { .. } => (true, false),
            _ => (false, false),
        }
    }

    /// The tag's `λ` merged with `lam`; errors if a fixed component differs.
    pub fn lambda_at(
        &self,
        lam: &(ParamPoly, ParamPoly),
    ) -> Result<(ParamPoly, ParamPoly), FmethodError> {
        let own = self.target_lambda();
        let (f1, f2) = self.free_components();
        let ok1 = f1 || own.0 == lam.0;
        let ok2 = f2 || own.1 == lam.1;
        if ok1 && ok2 {
            Ok(lam.clone())
        } else {
            Err(FmethodError::TagMismatch {
                tag: self.to_string(),
                l1: lam.0.to_string(),
                l2: lam.1.to_string(),
            })
        }
    }

    /// Source parameters `(δ; ν)` of the family at target `(ε; λ)`.
    pub fn source(&self, target: &InducedParams) -> InducedParams {
        let (l1, l2) = &target.lam;
        let (k, l) = self.degrees();
        let (k, l) = (i64::from(k), i64::from(l));
        let nu = match self {
            FamilyTag::Identity => (l1.clone(), l2.clone()),
            FamilyTag::A1 { .. } => (pp(2) - l1, l1 + l2 - pp(1)),
            FamilyTag::A2 { .. } => (l1 + l2 - pp(1), pp(2) - l2),
            FamilyTag::Bplus { .. } => (l2.clone(), pp(3) - l1 - l2),
            FamilyTag::Bminus { .. } => (pp(3) - l1 - l2, l1.clone()),
            FamilyTag::C { .. } => (pp(2) - l2, pp(2) - l1),
        };
        InducedParams {
            eps: target.eps.twist(l, k),
            lam: nu,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FamilyTag::Identity => json!({"tag": "Identity"}),
            FamilyTag::A1 { k } => json!({"tag": "A1", "k": k}),
            FamilyTag::A2 { k } => json!({"tag": "A2", "k": k}),
            FamilyTag::Bplus { k, l } => json!({"tag": "Bplus", "k": k, "l": l}),
            FamilyTag::Bminus { k, l } => json!({"tag": "Bminus", "k": k, "l": l}),
            FamilyTag::C { k, s } => json!({"tag": "C", "k": k, "s": s.to_string()}),
        }
    }

    /// Name of the corresponding Verma homomorphism, e.g. `phi_+ (1,2)`.
    pub fn hom_name(&self) -> String {
        match self {
            FamilyTag::Identity => "id".into(),
            FamilyTag::A1 { k } => format!("phi_1({k})"),
            FamilyTag::A2 { k } => format!("phi_2({k})"),
            FamilyTag::Bplus { k, l } => format!("phi_+ ({k},{l})"),
            FamilyTag::Bminus { k, l } => format!("phi_- ({k},{l})"),
            FamilyTag::C { k, s } => format!("phi_c ({s};{k})"),
        }
    }

    /// Name of the corresponding differential operator, e.g. `D_+ (1,2)`.
    pub fn operator_name(&self) -> String {
        match self {
            FamilyTag::Identity => "id".into(),
            FamilyTag::A1 { k } => format!("D_1^{k}"),
            FamilyTag::A2 { k } => format!("D_2^{k}"),
            FamilyTag::Bplus { k, l } => format!("D_+ ({k},{l})"),
            FamilyTag::Bminus { k, l } => format!("D_- ({k},{l})"),
            FamilyTag::C { k, s } => format!("D_c ({s};{k})"),
        }
    }

    fn sort_key(&self) -> (u8, u32, u32, String) {
        match self {
            FamilyTag::Identity => (0, 0, 0, String::new()),
            FamilyTag::A1 { k } => (1, *k, 0, String::new()),
            FamilyTag::A2 { k } => (2, *k, 0, String::new()),
            FamilyTag::Bplus { k, l } => (3, *k, *l, String::new()),
            FamilyTag::Bminus { k, l } => (4, *k, *l, String::new()),
            FamilyTag::C { k, s } => (5, *k, 0, s.to_string()),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Identity => write!(f, "Identity"),
            FamilyTag::A1 { k } => write!(f, "A1(k={k})"),
            FamilyTag::A2 { k } => write!(f, "A2(k={k})"),
            FamilyTag::Bplus { k, l } => write!(f, "Bplus(k={k},l={l})"),
            FamilyTag::Bminus { k, l } => write!(f, "Bminus(k={k},l={l})"),
            FamilyTag::C { k, s } => write!(f, "C(k={k},s={s})"),
        }
    }
}

fn constant_pair(p: &(ParamPoly, ParamPoly)) -> Result<(Rational, Rational), FmethodError> {
    match (p.0.as_constant(), p.1.as_constant()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(FmethodError::NonRationalInput),
    }
}

/// `n` as a positive integer, when it is one.
fn positive_int(n: &Rational) -> Option<u32> {
    to_i64(n)
        .filter(|&v| v >= 1)
        .and_then(|v| u32::try_from(v).ok())
}

fn parity_of(n: &Rational) -> i64 {
    to_i64(n).expect("integral by construction")
}

/// Every family realizing `I(λ)^ε → I(ν)^δ`, in a fixed order.
///
/// Rational inputs only; the continuous C family with symbolic `s` is
/// reached through [`FamilyTag::c`] instead.
pub fn classify(
    eps: MChar,
    delta: MChar,
    lam: &(ParamPoly, ParamPoly),
    nu: &(ParamPoly, ParamPoly),
) -> Result<Vec<FamilyTag>, FmethodError> {
    let (l1, l2) = constant_pair(lam)?;
    let (n1, n2) = constant_pair(nu)?;
    let one = || int(1);
    let two = || int(2);
    let three = || int(3);
    let mut out = Vec::new();

    if delta == eps && n1 == l1 && n2 == l2 {
        out.push(FamilyTag::Identity);
    }
    // L1
    if let Some(k) = positive_int(&(one() - &l1)) {
        let nu_ok = n1 == two() - &l1 && n2 == &l1 + &l2 - one();
        if nu_ok && delta == eps.twist(0, i64::from(k)) {
            out.push(FamilyTag::A1 { k });
        }
    }
    // L2
    if let Some(k) = positive_int(&(one() - &l2)) {
        let nu_ok = n1 == &l1 + &l2 - one() && n2 == two() - &l2;
        if nu_ok && delta == eps.twist(i64::from(k), 0) {
            out.push(FamilyTag::A2 { k });
        }
    }
    let total = two() - &l1 - &l2;
    // L3+
    if let (Some(k), Some(l)) = (positive_int(&(one() - &l1)), positive_int(&total)) {
        let nu_ok = n1 == l2 && n2 == three() - &l1 - &l2;
        if nu_ok && delta == eps.twist(i64::from(l), i64::from(k)) {
            out.push(FamilyTag::Bplus { k, l });
        }
    }
    // L3-
    if let (Some(k), Some(l)) = (positive_int(&total), positive_int(&(one() - &l2))) {
        let nu_ok = n1 == three() - &l1 - &l2 && n2 == l1;
        if nu_ok && delta == eps.twist(i64::from(l), i64::from(k)) {
            out.push(FamilyTag::Bminus { k, l });
        }
    }
    // L4
    if let Some(k) = positive_int(&total) {
        let nu_ok = n1 == two() - &l2 && n2 == two() - &l1;
        let t = parity_of(&total);
        if nu_ok && delta == eps.twist(t, t) {
            out.push(FamilyTag::C {
                k,
                s: ParamPoly::constant(&l2 - &l1),
            });
        }
    }
    out.sort_by_key(FamilyTag::sort_key);
    out.dedup();
    Ok(out)
}

/// The `(k, l)` with `ν - λ = (2k - l, 2l - k)` and
/// `(ε1δ1, ε2δ2) = ((-)^l, (-)^k)`, if any.
pub fn ma_match(
    eps: MChar,
    delta: MChar,
    lam: &(Rational, Rational),
    nu: &(Rational, Rational),
) -> Vec<(u32, u32)> {
    let d1 = &nu.0 - &lam.0;
    let d2 = &nu.1 - &lam.1;
    let three = int(3);
    let k = (&d1 * int(2) + &d2) / &three;
    let l = (&d1 + &d2 * int(2)) / &three;
    let (Some(k), Some(l)) = (to_i64(&k), to_i64(&l)) else {
        return Vec::new();
    };
    if k < 0 || l < 0 {
        return Vec::new();
    }
    let product = MChar(eps.0 * delta.0, eps.1 * delta.1);
    if product != MChar(parity(l), parity(k)) {
        return Vec::new();
    }
    vec![(k as u32, l as u32)]
}
