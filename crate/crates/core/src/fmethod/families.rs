//! Generators, operators and Verma homomorphisms of the five families.

use std::fmt;

use super::fsystem::p_family;
use super::tsat::t_saturate;
use super::{FamilyTag, FmethodError, InducedParams, MChar};
use crate::pbw::{dr_realize, fc_inverse, VermaVector};
use crate::ring::ParamPoly;
use crate::weyl::{Space, WeylElement};

/// The F-system solution attached to `tag`, as a polynomial in `ζ`.
pub fn sol_generator(tag: &FamilyTag) -> Result<WeylElement, FmethodError> {
    let one = ParamPoly::one();
    Ok(match tag {
        FamilyTag::Identity => WeylElement::one(3, Space::Zeta),
        FamilyTag::A1 { k } => WeylElement::monomial(3, Space::Zeta, &[*k, 0, 0], one),
        FamilyTag::A2 { k } => WeylElement::monomial(3, Space::Zeta, &[0, *k, 0], one),
        _ => {
            let (k, l) = tag.degrees();
            t_saturate(k, l, &p_family(tag))?
        }
    })
}

/// The differential operator `dR(F_c⁻¹(generator))`.
pub fn build_operator(tag: &FamilyTag) -> Result<WeylElement, FmethodError> {
    Ok(dr_realize(&fc_inverse(&sol_generator(tag)?)?)?)
}

/// A Verma module homomorphism `M(-ν)^δ → M(-λ)^ε`, stored as the image of
/// the generating vector. `source` is `(δ; ν)`, `target` is `(ε; λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaHom {
    pub name: String,
    pub operator_name: String,
    pub source: InducedParams,
    pub target: InducedParams,
    pub vector: VermaVector,
}

impl fmt::Display for VermaHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: M(-nu)^delta -> M(-lambda)^eps, [{}] -> [{}], vector {}",
            self.name, self.source, self.target, self.vector.body
        )
    }
}

/// The homomorphism of `tag` at its own `λ` (free components symbolic).
pub fn build_verma_hom(tag: &FamilyTag, eps: MChar) -> Result<VermaHom, FmethodError> {
    hom_at(tag, eps, &tag.target_lambda())
}

/// The homomorphism of `tag` into `M(-λ)^ε`; fixed components of `lam` must
/// agree with the tag.
pub fn hom_at(
    tag: &FamilyTag,
    eps: MChar,
    lam: &(ParamPoly, ParamPoly),
) -> Result<VermaHom, FmethodError> {
    let lam = tag.lambda_at(lam)?;
    let target = InducedParams { eps, lam };
    let source = tag.source(&target);
    let body = fc_inverse(&sol_generator(tag)?)?;
    let hw = (-&target.lam.0, -&target.lam.1);
    Ok(VermaHom {
        name: tag.hom_name(),
        operator_name: tag.operator_name(),
        vector: VermaVector::new(body, hw, eps)?,
        source,
        target,
    })
}

/// `outer ∘ inner`; the image of the generator is `u_inner · u_outer`.
pub fn compose_homs(outer: &VermaHom, inner: &VermaHom) -> Result<VermaHom, FmethodError> {
    if inner.target != outer.source {
        return Err(FmethodError::ParameterChainMismatch {
            inner: inner.target.to_string(),
            outer: outer.source.to_string(),
        });
    }
    let body = inner.vector.body.mul(&outer.vector.body);
    Ok(VermaHom {
        name: format!("{} o {}", outer.name, inner.name),
        operator_name: format!("{} * {}", inner.operator_name, outer.operator_name),
        source: inner.source.clone(),
        target: outer.target.clone(),
        vector: VermaVector::new(body, outer.vector.hw.clone(), outer.vector.mchar)?,
    })
}
