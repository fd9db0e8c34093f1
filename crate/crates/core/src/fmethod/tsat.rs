//! The operators `dπ*(N_j+)`, their Fourier transforms, and T-saturation.
//!
//! `Pol(k,l)` is spanned by `ζ1^{k-m} ζ2^{l-m} ζ3^m`, `0 ≤ m ≤ min(k,l)`,
//! which `T_{k,l}` identifies with `t^m`. The F-system operators
//! `-ζ_j · d̂π(N_j+)` preserve `Pol(k,l)`, so they become square matrices
//! on `{t^m}`.

use num_traits::One;

use super::FmethodError;
use crate::ring::{rat, ParamPoly, Rational, UniPoly};
use crate::weyl::{Space, WeylElement, WeylMono};

/// Square matrix of coefficients; entry `[i][m]` is the `t^i` coefficient
/// of the image of `t^m`.
pub type Matrix = Vec<Vec<ParamPoly>>;

fn x_term(mono: [u32; 3], deriv: [u32; 3], c: ParamPoly) -> WeylElement {
    WeylElement::term(
        3,
        Space::X,
        WeylMono {
            mono: mono.to_vec(),
            deriv: deriv.to_vec(),
        },
        c,
    )
}

fn check_j(j: u8) -> Result<(), FmethodError> {
    if j == 1 || j == 2 {
        Ok(())
    } else {
        Err(FmethodError::InvalidTag(format!(
            "j must be 1 or 2, got {j}"
        )))
    }
}

/// `dπ*(N_j+)` with symbolic or numeric `λ`.
pub fn dpi_star(j: u8, lam: &(ParamPoly, ParamPoly)) -> Result<WeylElement, FmethodError> {
    check_j(j)?;
    let c = |r: Rational| ParamPoly::constant(r);
    let two = ParamPoly::from_int(2);
    let terms = if j == 1 {
        vec![
            x_term([1, 0, 0], [0, 0, 0], &two - &lam.0),
            x_term([2, 0, 0], [1, 0, 0], c(Rational::one())),
            x_term([1, 1, 0], [0, 1, 0], c(rat(-1, 2))),
            x_term([0, 0, 1], [0, 1, 0], c(Rational::one())),
            x_term([2, 1, 0], [0, 0, 1], c(rat(1, 4))),
            x_term([1, 0, 1], [0, 0, 1], c(rat(1, 2))),
        ]
    } else {
        vec![
            x_term([0, 1, 0], [0, 0, 0], &two - &lam.1),
            x_term([1, 1, 0], [1, 0, 0], c(rat(-1, 2))),
            x_term([0, 0, 1], [1, 0, 0], c(rat(-1, 1))),
            x_term([0, 2, 0], [0, 1, 0], c(Rational::one())),
            x_term([1, 2, 0], [0, 0, 1], c(rat(-1, 4))),
            x_term([0, 1, 1], [0, 0, 1], c(rat(1, 2))),
        ]
    };
    Ok(crate::weyl::sum(3, Space::X, terms)?)
}

/// `d̂π(N_j+)`: the Fourier transform of [`dpi_star`].
pub fn dpi_star_hat(j: u8, lam: &(ParamPoly, ParamPoly)) -> Result<WeylElement, FmethodError> {
    Ok(dpi_star(j, lam)?.fourier_hat()?)
}

/// `-ζ_j · d̂π(N_j+)`.
pub fn fsystem_operator(j: u8, lam: &(ParamPoly, ParamPoly)) -> Result<WeylElement, FmethodError> {
    let zeta = WeylElement::var(3, Space::Zeta, usize::from(j) - 1).neg();
    Ok(zeta.mul(&dpi_star_hat(j, lam)?)?)
}

/// `T_{k,l}(p) = Σ a_m ζ1^{k-m} ζ2^{l-m} ζ3^m`.
pub fn t_saturate(k: u32, l: u32, p: &UniPoly) -> Result<WeylElement, FmethodError> {
    if p.degree().is_some_and(|d| d > k.min(l) as usize) {
        return Err(FmethodError::InvalidTag(format!(
            "deg p exceeds min({k},{l})"
        )));
    }
    let mut out = WeylElement::zero(3, Space::Zeta);
    for (m, a) in p.coeffs().iter().enumerate() {
        let m = m as u32;
        let t = WeylElement::monomial(3, Space::Zeta, &[k - m, l - m, m], a.clone());
        out = out.add(&t)?;
    }
    Ok(out)
}

/// Matrix of `T♯(-ζ_j · d̂π(N_j+))` on `{t^m : m ≤ min(k,l)}`, computed by
/// acting on `T_{k,l}(t^m)` and reading the image back.
pub fn tsat_matrix(
    k: u32,
    l: u32,
    j: u8,
    lam: &(ParamPoly, ParamPoly),
) -> Result<Matrix, FmethodError> {
    let op = fsystem_operator(j, lam)?;
    let n = k.min(l) as usize + 1;
    let mut out = vec![vec![ParamPoly::zero(); n]; n];
    for m in 0..n as u32 {
        let basis = WeylElement::monomial(3, Space::Zeta, &[k - m, l - m, m], ParamPoly::one());
        for (mono, c) in op.act(&basis)?.terms() {
            let i = mono.mono[2];
            if i as usize >= n || mono.mono[0] + i != k || mono.mono[1] + i != l {
                return Err(FmethodError::ImageOutsidePol { k, l, m });
            }
            out[i as usize][m as usize] = c.clone();
        }
    }
    Ok(out)
}

/// The same matrix from the closed forms `D^{(k,l)}(λ1; t)` (j = 1) and
/// `D^{(l,k)}(λ2; -t)` (j = 2), where
/// `D^{(a,b)}(μ;t) = d/dt + (μ + a - b/2 - 1)(a - ϑ) + ¼ t (a-1-ϑ)(a-ϑ)(b-ϑ)`.
pub fn closed_form_matrix(
    k: u32,
    l: u32,
    j: u8,
    lam: &(ParamPoly, ParamPoly),
) -> Result<Matrix, FmethodError> {
    check_j(j)?;
    let (a, b, mu, sign) = if j == 1 {
        (i64::from(k), i64::from(l), &lam.0, 1)
    } else {
        (i64::from(l), i64::from(k), &lam.1, -1)
    };
    let n = k.min(l) as usize + 1;
    let mut out = vec![vec![ParamPoly::zero(); n]; n];
    let shift = mu + &ParamPoly::constant(rat(2 * a - b - 2, 2));
    for m in 0..n {
        let mi = m as i64;
        if m > 0 {
            out[m - 1][m] = ParamPoly::from_int(sign * mi);
        }
        out[m][m] = shift.scale(&rat(a - mi, 1));
        if m + 1 < n {
            out[m + 1][m] = ParamPoly::constant(rat(sign * (a - 1 - mi) * (a - mi) * (b - mi), 4));
        }
    }
    Ok(out)
}

/// `M · v` for a coefficient vector `v`.
pub fn apply(matrix: &Matrix, v: &[ParamPoly]) -> Vec<ParamPoly> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ParamPoly::zero(), |acc, (a, x)| acc + a * x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> (ParamPoly, ParamPoly) {
        (ParamPoly::l1(), ParamPoly::l2())
    }

    #[test]
    fn dpi_star_examples() {
        let d1 = dpi_star(1, &sym()).unwrap();
        assert_eq!(
            d1.to_string(),
            "x1^2*d1 + x3*d2 - 1/2*x1*x2*d2 + 1/2*x1*x3*d3 + 1/4*x1^2*x2*d3 + (-l1 + 2)*x1"
        );
        let at2 = dpi_star(1, &(ParamPoly::from_int(2), ParamPoly::l2())).unwrap();
        assert!(at2.terms().all(|(m, _)| m.order() > 0));
        assert!(dpi_star(3, &sym()).is_err());
    }

    #[test]
    fn fsystem_operator_kills_constants() {
        let one = WeylElement::one(3, Space::Zeta);
        for j in [1, 2] {
            assert!(fsystem_operator(j, &sym())
                .unwrap()
                .act(&one)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn zero_degree_matrices_vanish() {
        for j in [1, 2] {
            let m = tsat_matrix(0, 0, j, &sym()).unwrap();
            assert_eq!(m, vec![vec![ParamPoly::zero()]]);
        }
    }

    #[test]
    fn tsat_matches_closed_form_small() {
        for (k, l) in [(1, 2), (2, 2), (3, 1)] {
            for j in [1, 2] {
                assert_eq!(
                    tsat_matrix(k, l, j, &sym()).unwrap(),
                    closed_form_matrix(k, l, j, &sym()).unwrap(),
                    "k={k} l={l} j={j}"
                );
            }
        }
    }
}
