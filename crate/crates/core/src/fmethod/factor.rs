//! Factorization identities between compositions of Verma homomorphisms
//! and, dually, between products of differential operators.

use std::fmt;

use serde_json::json;

use super::families::{build_operator, compose_homs, hom_at, VermaHom};
use super::weights::{hom_word, link_check, mu_lambda, reflect_word};
use super::{FamilyTag, FmethodError, InducedParams, MChar};
use crate::ring::ParamPoly;
use crate::weyl::WeylElement;

/// The six factorization patterns, distinguished by how `k` compares to `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorCase {
    One,
    Two,
    Three,
    Four,
    Five,
    Six,
}

impl FactorCase {
    pub const ALL: [FactorCase; 6] = [
        FactorCase::One,
        FactorCase::Two,
        FactorCase::Three,
        FactorCase::Four,
        FactorCase::Five,
        FactorCase::Six,
    ];

    pub fn number(self) -> u8 {
        match self {
            FactorCase::One => 1,
            FactorCase::Two => 2,
            FactorCase::Three => 3,
            FactorCase::Four => 4,
            FactorCase::Five => 5,
            FactorCase::Six => 6,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }

    /// Whether `(k, l)` lies in the case's regime (`k, l ≥ 1`).
    pub fn admits(self, k: u32, l: u32) -> bool {
        if k == 0 || l == 0 {
            return false;
        }
        match self {
            FactorCase::One | FactorCase::Four => k < l,
            FactorCase::Two | FactorCase::Three => k > l,
            FactorCase::Five | FactorCase::Six => k == l,
        }
    }
}

impl fmt::Display for FactorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// One checked equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl IdentityCheck {
    fn new(lhs: String, rhs: String, result: Result<(), String>) -> Self {
        let (passed, detail) = match result {
            Ok(()) => (true, None),
            Err(d) => (false, Some(d)),
        };
        IdentityCheck {
            lhs,
            rhs,
            passed,
            detail,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": if self.passed { "pass" } else { "fail" },
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub case: FactorCase,
    pub k: u32,
    pub l: u32,
    pub identities: Vec<IdentityCheck>,
}

impl FactorReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "case": self.case.number(),
            "k": self.k,
            "l": self.l,
            "identities": self.identities.iter().map(IdentityCheck::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Homomorphisms into `M(-λ)` that must agree, each written outer to inner.
struct Group {
    lam: (ParamPoly, ParamPoly),
    chains: Vec<Vec<FamilyTag>>,
}

fn pp(n: i64) -> ParamPoly {
    ParamPoly::from_int(n)
}

fn groups(case: FactorCase, k: u32, l: u32) -> Vec<Group> {
    use FamilyTag::{Bminus, Bplus, A1, A2, C};
    let (ki, li) = (i64::from(k), i64::from(l));
    let c = |k: u32, s: i64| C { k, s: pp(s) };
    match case {
        FactorCase::One => vec![
            Group {
                lam: (pp(1 - ki), pp(1 - li + ki)),
                chains: vec![vec![Bplus { k, l }], vec![A1 { k }, A2 { k: l }]],
            },
            Group {
                lam: (pp(1 + ki), pp(1 - li)),
                chains: vec![
                    vec![Bminus { k: l - k, l }],
                    vec![A2 { k: l }, A1 { k: l - k }],
                ],
            },
            Group {
                lam: (pp(1 - ki), pp(1 - li + ki)),
                chains: vec![
                    vec![c(l, 2 * ki - li)],
                    vec![Bplus { k, l }, A1 { k: l - k }],
                    vec![A1 { k }, Bminus { k: l - k, l }],
                    vec![A1 { k }, A2 { k: l }, A1 { k: l - k }],
                ],
            },
        ],
        FactorCase::Two => vec![Group {
            lam: (pp(1 - ki), pp(1 - li + ki)),
            chains: vec![
                vec![c(l, 2 * ki - li), A1 { k: k - l }],
                vec![Bplus { k, l }],
                vec![A1 { k }, A2 { k: l }],
            ],
        }],
        FactorCase::Three => vec![
            Group {
                lam: (pp(1 - ki), pp(1 + li)),
                chains: vec![vec![Bplus { k, l: k - l }], vec![A1 { k }, A2 { k: k - l }]],
            },
            Group {
                lam: (pp(1 - ki + li), pp(1 - li)),
                chains: vec![vec![Bminus { k, l }], vec![A2 { k: l }, A1 { k }]],
            },
            Group {
                lam: (pp(1 - ki + li), pp(1 - li)),
                chains: vec![
                    vec![c(k, ki - 2 * li)],
                    vec![A2 { k: l }, Bplus { k, l: k - l }],
                    vec![Bminus { k, l }, A2 { k: k - l }],
                    vec![A2 { k: l }, A1 { k }, A2 { k: k - l }],
                ],
            },
        ],
        FactorCase::Four => vec![Group {
            lam: (pp(1 - ki + li), pp(1 - li)),
            chains: vec![
                vec![c(k, ki - 2 * li), A2 { k: l - k }],
                vec![Bminus { k, l }],
                vec![A2 { k: l }, A1 { k }],
            ],
        }],
        FactorCase::Five => vec![Group {
            lam: (pp(1 - ki), pp(1)),
            chains: vec![
                vec![c(k, ki)],
                vec![Bplus { k, l: k }],
                vec![A1 { k }, A2 { k }],
            ],
        }],
        FactorCase::Six => vec![Group {
            lam: (pp(1), pp(1 - ki)),
            chains: vec![
                vec![c(k, -ki)],
                vec![Bminus { k, l: k }],
                vec![A2 { k }, A1 { k }],
            ],
        }],
    }
}

/// Walks `chain` from the outer target inward, returning each factor at its
/// own parameters.
fn chain_homs(
    chain: &[FamilyTag],
    eps: MChar,
    lam: &(ParamPoly, ParamPoly),
) -> Result<Vec<VermaHom>, FmethodError> {
    let mut out: Vec<VermaHom> = Vec::with_capacity(chain.len());
    let mut target = InducedParams {
        eps,
        lam: lam.clone(),
    };
    for tag in chain {
        let hom = hom_at(tag, target.eps, &target.lam)?;
        target = hom.source.clone();
        out.push(hom);
    }
    Ok(out)
}

fn compose_chain(homs: &[VermaHom]) -> Result<VermaHom, FmethodError> {
    let (first, rest) = homs.split_first().expect("chains are nonempty");
    rest.iter()
        .try_fold(first.clone(), |acc, inner| compose_homs(&acc, inner))
}

/// `D_inner · … · D_outer`.
fn chain_operator(chain: &[FamilyTag]) -> Result<WeylElement, FmethodError> {
    let mut ops = chain.iter().rev().map(build_operator);
    let first = ops.next().expect("chains are nonempty")?;
    ops.try_fold(first, |acc, d| Ok(acc.mul(&d?)?))
}

fn chain_name(chain: &[FamilyTag]) -> String {
    chain
        .iter()
        .map(FamilyTag::hom_name)
        .collect::<Vec<_>>()
        .join(" o ")
}

fn operator_chain_name(chain: &[FamilyTag]) -> String {
    chain
        .iter()
        .rev()
        .map(FamilyTag::operator_name)
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Sources of each factor for every target character; must match between
/// chains of one group.
fn character_chain(
    chain: &[FamilyTag],
    lam: &(ParamPoly, ParamPoly),
) -> Vec<Result<InducedParams, String>> {
    let chars = [
        MChar::new(1, 1),
        MChar::new(1, -1),
        MChar::new(-1, 1),
        MChar::new(-1, -1),
    ];
    chars
        .iter()
        .map(|&eps| {
            let mut target = InducedParams {
                eps,
                lam: lam.clone(),
            };
            for tag in chain {
                tag.lambda_at(&target.lam).map_err(|e| e.to_string())?;
                target = tag.source(&target);
            }
            Ok(target)
        })
        .collect()
}

/// Each step must be a BGG link realized by the family's Weyl group element.
fn weight_chain(chain: &[FamilyTag], lam: &(ParamPoly, ParamPoly)) -> Result<(), String> {
    let mut target = InducedParams {
        eps: MChar::PLUS_PLUS,
        lam: lam.clone(),
    };
    for tag in chain {
        let source = tag.source(&target);
        let from = mu_lambda(&target.lam);
        let to = mu_lambda(&source.lam);
        if reflect_word(&from, &hom_word(tag)) != to {
            return Err(format!("{} does not map {from} to {to}", tag.hom_name()));
        }
        if link_check(&from, &to, 3).is_none() {
            return Err(format!("no link from {from} to {to}"));
        }
        target = source;
    }
    Ok(())
}

fn compare<T: PartialEq + fmt::Display>(a: &T, b: &T) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{a} != {b}"))
    }
}

/// Checks every identity of `case` at `(k, l)`.
///
/// For each group of chains into the same `M(-λ)`: the composed singular
/// vectors and their source parameters agree; the products of the
/// corresponding operators agree in the Weyl algebra; the source
/// characters agree for every target character; and every step is a
/// weight link.
pub fn verify_factorization(
    case: FactorCase,
    k: u32,
    l: u32,
) -> Result<FactorReport, FmethodError> {
    if !case.admits(k, l) {
        return Err(FmethodError::RegimeMismatch {
            case: case.number(),
            k,
            l,
        });
    }
    let mut identities = Vec::new();
    for group in groups(case, k, l) {
        let built: Vec<_> = group
            .chains
            .iter()
            .map(|ch| chain_homs(ch, MChar::PLUS_PLUS, &group.lam).and_then(|h| compose_chain(&h)))
            .collect();
        let ops: Vec<_> = group.chains.iter().map(|ch| chain_operator(ch)).collect();
        let (head, rest) = group.chains.split_first().expect("groups are nonempty");
        for (i, chain) in rest.iter().enumerate() {
            let i = i + 1;
            let hom = match (&built[0], &built[i]) {
                (Ok(a), Ok(b)) => compare(&a.vector.body, &b.vector.body)
                    .and_then(|()| compare(&a.source, &b.source)),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            };
            identities.push(IdentityCheck::new(chain_name(head), chain_name(chain), hom));

            let op = match (&ops[0], &ops[i]) {
                (Ok(a), Ok(b)) => compare(a, b),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            };
            identities.push(IdentityCheck::new(
                operator_chain_name(head),
                operator_chain_name(chain),
                op,
            ));

            let ca = character_chain(head, &group.lam);
            let cb = character_chain(chain, &group.lam);
            let chars = ca.iter().zip(&cb).try_for_each(|(a, b)| match (a, b) {
                (Ok(a), Ok(b)) => compare(a, b),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            });
            identities.push(IdentityCheck::new(
                format!("chars[{}]", chain_name(head)),
                format!("chars[{}]", chain_name(chain)),
                chars,
            ));
        }
        for chain in &group.chains {
            identities.push(IdentityCheck::new(
                format!("weights[{}]", chain_name(chain)),
                "linked".into(),
                weight_chain(chain, &group.lam),
            ));
        }
    }
    Ok(FactorReport {
        case,
        k,
        l,
        identities,
    })
}
