//! Polynomial solutions of the T-saturated F-system.

use num_traits::{One, Zero};

use super::tsat::{apply, tsat_matrix};
use super::{FamilyTag, FmethodError};
use crate::ring::{int, rat, ParamPoly, Rational, UniPoly};
use crate::special::{binom_int, cayley, factorial, falling, jacobi_at0, krawtchouk, CayleyMode};

fn half_pow(m: u32) -> Rational {
    num_traits::pow(rat(1, 2), m as usize)
}

fn pm_family(k: u32, l: u32, sign: i64) -> UniPoly {
    let coeffs = (0..=k.min(l))
        .map(|m| {
            let c = half_pow(m) * factorial(m) * binom_int(k, m) * binom_int(l, m);
            let c = if m % 2 == 1 { c * int(sign) } else { c };
            ParamPoly::constant(c)
        })
        .collect();
    UniPoly::new(coeffs)
}

/// `p_+^{(k,l)}(t) = Σ m! C(k,m) C(l,m) t^m / 2^m`.
pub fn p_plus(k: u32, l: u32) -> UniPoly {
    pm_family(k, l, 1)
}

/// `p_-^{(k,l)}(t) = p_+^{(k,l)}(-t)`.
pub fn p_minus(k: u32, l: u32) -> UniPoly {
    pm_family(k, l, -1)
}

/// `p_c^{(s;k)}(t) = Σ C(k,m) Cay_m(s;k) t^m / 2^m`.
pub fn pc(k: u32, s: &ParamPoly) -> UniPoly {
    let kk = ParamPoly::from_int(i64::from(k));
    let coeffs = (0..=k)
        .map(|m| cayley(m, s, &kk, CayleyMode::Recurrence).scale(&(half_pow(m) * binom_int(k, m))))
        .collect();
    UniPoly::new(coeffs)
}

/// The one-variable generator attached to a family; `1` for the identity
/// and the `A` families.
pub fn p_family(tag: &FamilyTag) -> UniPoly {
    match tag {
        FamilyTag::Identity | FamilyTag::A1 { .. } | FamilyTag::A2 { .. } => UniPoly::one(),
        FamilyTag::Bplus { k, l } => p_plus(*k, *l),
        FamilyTag::Bminus { k, l } => p_minus(*k, *l),
        FamilyTag::C { k, s } => pc(*k, s),
    }
}

fn pp(n: i64) -> ParamPoly {
    ParamPoly::from_int(n)
}

/// The same generators written through Jacobi polynomials at zero,
/// `Σ r^{↓m} P_m^{(α_m, β_m)}(0) t^m`.
pub fn p_family_jacobi(tag: &FamilyTag) -> UniPoly {
    let (k, l) = tag.degrees();
    let (ki, li) = (i64::from(k), i64::from(l));
    let series = |top: i64, n: u32, ab: &dyn Fn(i64) -> (ParamPoly, ParamPoly)| {
        UniPoly::new(
            (0..=n)
                .map(|m| {
                    let (a, b) = ab(i64::from(m));
                    falling(&pp(top), m) * jacobi_at0(m, &a, &b)
                })
                .collect(),
        )
    };
    match tag {
        FamilyTag::Identity | FamilyTag::A1 { .. } | FamilyTag::A2 { .. } => UniPoly::one(),
        FamilyTag::Bplus { .. } if k >= l => series(ki, l, &|m| (pp(li - m), pp(-m))),
        FamilyTag::Bplus { .. } => series(li, k, &|m| (pp(ki - m), pp(-m))),
        FamilyTag::Bminus { .. } if k >= l => series(ki, l, &|m| (pp(-m), pp(li - m))),
        FamilyTag::Bminus { .. } => series(li, k, &|m| (pp(-m), pp(ki - m))),
        FamilyTag::C { s, .. } => series(ki, k, &|m| {
            let half = rat(1, 2);
            (
                (pp(ki - 2 * m) + s).scale(&half),
                (pp(ki - 2 * m) - s).scale(&half),
            )
        }),
    }
}

/// `Σ k^{↓m} K_m(l;k) t^m / 2^m`, which equals `p_c^{(k-2l;k)}`.
pub fn krawtchouk_form1(k: u32, l: u32) -> UniPoly {
    UniPoly::new(
        (0..=k)
            .map(|m| {
                (falling(&pp(i64::from(k)), m)
                    * krawtchouk(m, &pp(i64::from(l)), &pp(i64::from(k))))
                .scale(&half_pow(m))
            })
            .collect(),
    )
}

/// `Σ (-1)^m l^{↓m} K_m(k;l) t^m / 2^m`, which equals `p_c^{(2k-l;l)}`.
pub fn krawtchouk_form2(k: u32, l: u32) -> UniPoly {
    krawtchouk_form1(l, k).reflect()
}

/// Coefficients of `p_c^{(s;k)}` from the two-step recurrence
/// `a_m = -(k-m+1)/(4m) · ((k-m+2)^2 a_{m-2} - 2s a_{m-1})`, `a_0 = 1`.
pub fn am_recurrence(k: u32, s: &ParamPoly) -> UniPoly {
    let k = i64::from(k);
    let mut a: Vec<ParamPoly> = vec![ParamPoly::one()];
    for m in 1..=k {
        let prev2 = if m >= 2 {
            a[(m - 2) as usize].scale(&int((k - m + 2).pow(2)))
        } else {
            ParamPoly::zero()
        };
        let prev1 = (s * &a[(m - 1) as usize]).scale(&int(2));
        a.push((prev2 - prev1).scale(&rat(-(k - m + 1), 4 * m)));
    }
    UniPoly::new(a)
}

/// Whether both T-saturated operators kill `p` (exactly, symbolic allowed).
pub fn fsystem_annihilates(
    k: u32,
    l: u32,
    lam: &(ParamPoly, ParamPoly),
    p: &UniPoly,
) -> Result<bool, FmethodError> {
    let n = k.min(l) as usize + 1;
    if p.degree().is_some_and(|d| d >= n) {
        return Ok(false);
    }
    let v: Vec<ParamPoly> = (0..n).map(|m| p.coeff(m)).collect();
    for j in [1, 2] {
        let image = apply(&tsat_matrix(k, l, j, lam)?, &v);
        if image.iter().any(|c| !c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `p_c^{(s;k)}` solves the F-system on `Pol(k,k)` along the whole
/// line `λ = ((2-k-s)/2, (2-k+s)/2)` with `s` symbolic.
pub fn fsystem_verify(k: u32) -> Result<bool, FmethodError> {
    let s = ParamPoly::s();
    let tag = FamilyTag::c(k, s.clone())?;
    fsystem_annihilates(k, k, &tag.target_lambda(), &pc(k, &s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsystemSolution {
    pub dim: usize,
    /// A spanning solution when `dim == 1`, normalized to constant term 1
    /// (or leading coefficient 1 if the constant term vanishes).
    pub generator: Option<UniPoly>,
}

/// Basis of `{v : A v = 0}` over ℚ by reduction to row echelon form.
pub(crate) fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][free].clone();
            }
            v
        })
        .collect()
}

/// Solves the F-system on `Pol(k,l)` at a rational `λ`.
pub fn fsystem_solve(
    k: u32,
    l: u32,
    lam: &(Rational, Rational),
) -> Result<FsystemSolution, FmethodError> {
    let lam_p = (
        ParamPoly::constant(lam.0.clone()),
        ParamPoly::constant(lam.1.clone()),
    );
    let n = k.min(l) as usize + 1;
    let mut rows = Vec::with_capacity(2 * n);
    for j in [1, 2] {
        for row in tsat_matrix(k, l, j, &lam_p)? {
            let row = row
                .iter()
                .map(|c| c.as_constant().ok_or(FmethodError::NonRationalInput))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
    }
    let basis = nullspace(&rows, n);
    let generator = match basis.as_slice() {
        [v] => {
            let lead = v
                .iter()
                .find(|c| !c.is_zero())
                .expect("basis vectors are nonzero")
                .clone();
            let scale = if v[0].is_zero() { lead } else { v[0].clone() }.recip();
            Some(UniPoly::new(
                v.iter().map(|c| ParamPoly::constant(c * &scale)).collect(),
            ))
        }
        _ => None,
    };
    Ok(FsystemSolution {
        dim: basis.len(),
        generator,
    })
}
