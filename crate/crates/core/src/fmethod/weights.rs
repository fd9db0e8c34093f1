//! Weights in `a* = {v ∈ C^3 : v1 + v2 + v3 = 0}`, reflections, and linkage.

use std::fmt;

use super::FamilyTag;
use crate::ring::{rat, to_i64, ParamPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight3([ParamPoly; 3]);

impl Weight3 {
    /// `None` unless the coordinates sum to zero.
    pub fn new(v: [ParamPoly; 3]) -> Option<Self> {
        (&(&v[0] + &v[1]) + &v[2]).is_zero().then_some(Weight3(v))
    }

    pub fn from_ints(v: [i64; 3]) -> Option<Self> {
        Self::new(v.map(ParamPoly::from_int))
    }

    pub fn coords(&self) -> &[ParamPoly; 3] {
        &self.0
    }

    /// `ρ = (1, 0, -1)`.
    pub fn rho() -> Self {
        Weight3([1, 0, -1].map(ParamPoly::from_int))
    }

    pub fn neg(&self) -> Self {
        Weight3(self.0.clone().map(|c| -c))
    }

    /// `⟨v, r^∨⟩`; roots have length √2, so this is the dot product.
    pub fn pairing(&self, root: Root) -> ParamPoly {
        let (i, j) = root.indices();
        &self.0[i] - &self.0[j]
    }
}

impl fmt::Display for Weight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// The positive roots `α = (1,-1,0)`, `β = (0,1,-1)`, `γ = α + β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Alpha,
    Beta,
    Gamma,
}

impl Root {
    pub const ALL: [Root; 3] = [Root::Alpha, Root::Beta, Root::Gamma];

    fn indices(self) -> (usize, usize) {
        match self {
            Root::Alpha => (0, 1),
            Root::Beta => (1, 2),
            Root::Gamma => (0, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::Alpha => "alpha",
            Root::Beta => "beta",
            Root::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `μ_λ = -(λ1 ϖ1 + λ2 ϖ2) + ρ`.
pub fn mu_lambda(lam: &(ParamPoly, ParamPoly)) -> Weight3 {
    let (l1, l2) = lam;
    let third = rat(1, 3);
    let three = ParamPoly::from_int(3);
    Weight3([
        (&three - &(&l1.scale(&rat(2, 1)) + l2)).scale(&third),
        (l1 - l2).scale(&third),
        (&(l1 + &l2.scale(&rat(2, 1))) - &three).scale(&third),
    ])
}

/// Inverse of [`mu_lambda`]: `λ1 = 1 - ⟨v, α⟩`, `λ2 = 1 - ⟨v, β⟩`.
pub fn lambda_of_weight(w: &Weight3) -> (ParamPoly, ParamPoly) {
    let one = ParamPoly::one();
    (
        &one - &w.pairing(Root::Alpha),
        &one - &w.pairing(Root::Beta),
    )
}

/// `s_r(v)`: swaps the two coordinates touched by `r`.
pub fn reflect(w: &Weight3, root: Root) -> Weight3 {
    let (i, j) = root.indices();
    let mut v = w.0.clone();
    v.swap(i, j);
    Weight3(v)
}

/// Applies reflections right to left: `[r1, r2]` means `s_r1 s_r2 w`.
pub fn reflect_word(w: &Weight3, word: &[Root]) -> Weight3 {
    word.iter()
        .rev()
        .fold(w.clone(), |acc, &r| reflect(&acc, r))
}

/// The Weyl group element carrying `μ_λ` to the source weight of `tag`,
/// as a word applied right to left.
pub fn hom_word(tag: &FamilyTag) -> Vec<Root> {
    match tag {
        FamilyTag::Identity => vec![],
        FamilyTag::A1 { .. } => vec![Root::Alpha],
        FamilyTag::A2 { .. } => vec![Root::Beta],
        FamilyTag::Bplus { .. } => vec![Root::Beta, Root::Alpha],
        FamilyTag::Bminus { .. } => vec![Root::Alpha, Root::Beta],
        FamilyTag::C { .. } => vec![Root::Gamma],
    }
}

fn nonneg_int(p: &ParamPoly) -> bool {
    p.as_constant()
        .and_then(|c| to_i64(&c))
        .is_some_and(|n| n >= 0)
}

/// The first sequence of positive roots, in lexicographic order, linking
/// `from` to `to`: each step reflects the current weight in a root whose
/// pairing with it is a nonnegative integer.
pub fn link_check(from: &Weight3, to: &Weight3, max_len: usize) -> Option<Vec<Root>> {
    fn search(cur: &Weight3, to: &Weight3, left: usize, path: &mut Vec<Root>) -> bool {
        if cur == to {
            return true;
        }
        if left == 0 {
            return false;
        }
        for r in Root::ALL {
            if !nonneg_int(&cur.pairing(r)) {
                continue;
            }
            path.push(r);
            if search(&reflect(cur, r), to, left - 1, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    search(from, to, max_len, &mut path).then_some(path)
}
