//! Cayley continuants, binary Krawtchouk polynomials, Jacobi polynomials at
//! zero, and generalized factorials and binomials, all over [`ParamPoly`].
//!
//! Binomials with a symbolic top argument are the polynomials
//! `C(r, m) = r^{↓m} / m!` for `m ≥ 0`.

use std::collections::HashMap;

use num_traits::One;

use crate::ring::{int, rat, ParamPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialKind {
    Falling,
    Rising,
    Binom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyMode {
    Det,
    Recurrence,
    Closed,
}

pub fn factorial(m: u32) -> Rational {
    (1..=i64::from(m)).fold(Rational::one(), |acc, i| acc * int(i))
}

/// `r^{↓m}`, `r^{↑m}` or `C(r, m)`.
pub fn factorial_binom(r: &ParamPoly, m: u32, kind: FactorialKind) -> ParamPoly {
    let step = |i: u32| ParamPoly::from_int(i64::from(i));
    let mut acc = ParamPoly::constant_in(r.params().clone(), Rational::one());
    for i in 0..m {
        let factor = match kind {
            FactorialKind::Rising => r + step(i),
            FactorialKind::Falling | FactorialKind::Binom => r - step(i),
        };
        acc = &acc * &factor;
    }
    match kind {
        FactorialKind::Binom => acc.scale(&factorial(m).recip()),
        _ => acc,
    }
}

pub fn falling(r: &ParamPoly, m: u32) -> ParamPoly {
    factorial_binom(r, m, FactorialKind::Falling)
}

pub fn rising(r: &ParamPoly, m: u32) -> ParamPoly {
    factorial_binom(r, m, FactorialKind::Rising)
}

pub fn binom(r: &ParamPoly, m: u32) -> ParamPoly {
    factorial_binom(r, m, FactorialKind::Binom)
}

/// The integer binomial `C(n, m)` as a rational (zero for `m > n`).
pub fn binom_int(n: u32, m: u32) -> Rational {
    if m > n {
        return int(0);
    }
    factorial(n) / (factorial(m) * factorial(n - m))
}

/// The tridiagonal matrix defining `Cay_m(x; y)`.
pub fn cayley_matrix(m: usize, x: &ParamPoly, y: &ParamPoly) -> Vec<Vec<ParamPoly>> {
    let mut a = vec![vec![ParamPoly::zero(); m]; m];
    for i in 0..m {
        a[i][i] = x.clone();
        if i + 1 < m {
            a[i][i + 1] = ParamPoly::from_int(i as i64 + 1);
            a[i + 1][i] = y - ParamPoly::from_int(i as i64);
        }
    }
    a
}

/// Determinant by Laplace expansion along the last remaining row, skipping
/// zero entries and memoizing minors on their column set.
pub fn determinant(a: &[Vec<ParamPoly>]) -> ParamPoly {
    let n = a.len();
    assert!(n < 64, "matrix too large for column bitmasks");
    let mut memo = HashMap::new();
    minor(a, (1u64 << n) - 1, &mut memo)
}

fn minor(a: &[Vec<ParamPoly>], cols: u64, memo: &mut HashMap<u64, ParamPoly>) -> ParamPoly {
    let r = cols.count_ones() as usize;
    if r == 0 {
        return ParamPoly::one();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let row = &a[r - 1];
    let mut acc = ParamPoly::zero();
    let mut pos = 0;
    for (c, entry) in row.iter().enumerate() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !entry.is_zero() {
            let sub = entry * &minor(a, cols & !(1 << c), memo);
            if (r - 1 + pos).is_multiple_of(2) {
                acc += &sub;
            } else {
                acc -= &sub;
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `Cay_m(x; y)` computed by the requested method.
pub fn cayley(m: u32, x: &ParamPoly, y: &ParamPoly, mode: CayleyMode) -> ParamPoly {
    match mode {
        CayleyMode::Det => determinant(&cayley_matrix(m as usize, x, y)),
        CayleyMode::Recurrence => {
            let mut prev = ParamPoly::one();
            let mut cur = x.clone();
            if m == 0 {
                return prev;
            }
            for j in 2..=i64::from(m) {
                let next = x * &cur - (y - ParamPoly::from_int(j - 2)).scale(&int(j - 1)) * &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        CayleyMode::Closed => {
            let half = rat(1, 2);
            let u = (x + y).scale(&half);
            let v = (x - y).scale(&half);
            (0..=m).fold(ParamPoly::zero(), |acc, j| {
                acc + (falling(&u, j) * rising(&v, m - j)).scale(&binom_int(m, j))
            })
        }
    }
}

/// `K_m(x; y) = Σ_j (-1)^j C(x, j) C(y - x, m - j)`.
pub fn krawtchouk(m: u32, x: &ParamPoly, y: &ParamPoly) -> ParamPoly {
    let yx = y - x;
    (0..=m).fold(ParamPoly::zero(), |acc, j| {
        let t = binom(x, j) * binom(&yx, m - j);
        if j % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// `P_m^{(α,β)}(0) = Σ_j C(m+α, m-j) C(m+β, j) (-1/2)^j (1/2)^{m-j}`.
pub fn jacobi_at0(m: u32, alpha: &ParamPoly, beta: &ParamPoly) -> ParamPoly {
    let mm = ParamPoly::from_int(i64::from(m));
    let (a, b) = (&mm + alpha, &mm + beta);
    let scale = num_traits::pow(rat(1, 2), m as usize);
    (0..=m)
        .fold(ParamPoly::zero(), |acc, j| {
            let t = binom(&a, m - j) * binom(&b, j);
            if j % 2 == 0 {
                acc + t
            } else {
                acc - t
            }
        })
        .scale(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> ParamPoly {
        text.parse().unwrap()
    }

    #[test]
    fn small_cayley() {
        let (x, y) = (p("s"), p("l1"));
        for mode in [CayleyMode::Det, CayleyMode::Recurrence, CayleyMode::Closed] {
            assert_eq!(cayley(0, &x, &y, mode), ParamPoly::one());
            assert_eq!(cayley(1, &x, &y, mode), x);
            assert_eq!(cayley(2, &x, &y, mode), p("s^2 - l1"));
            assert_eq!(cayley(2, &p("0"), &p("2"), mode), p("-2"));
        }
    }

    #[test]
    fn krawtchouk_small() {
        let (x, y) = (p("s"), p("l1"));
        assert_eq!(krawtchouk(0, &x, &y), ParamPoly::one());
        assert_eq!(krawtchouk(1, &x, &y), p("l1 - 2*s"));
        for m in 0..5 {
            assert_eq!(krawtchouk(m, &p("0"), &y), binom(&y, m));
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(falling(&p("s"), 2), p("s^2 - s"));
        assert_eq!(rising(&p("s"), 2), p("s^2 + s"));
        assert_eq!(binom(&p("5"), 2), p("10"));
        assert_eq!(binom(&p("-2"), 3), p("-4"));
        assert_eq!(binom_int(3, 5), int(0));
    }

    #[test]
    fn jacobi_small() {
        assert_eq!(jacobi_at0(0, &p("s"), &p("l1")), ParamPoly::one());
        for l in 0..=8i64 {
            for m in 0..=8u32 {
                let a = ParamPoly::from_int(l - i64::from(m));
                let b = ParamPoly::from_int(-i64::from(m));
                let lhs = jacobi_at0(m, &a, &b).scale(&num_traits::pow(int(2), m as usize));
                assert_eq!(lhs, binom(&ParamPoly::from_int(l), m), "l={l} m={m}");
            }
        }
    }

    #[test]
    fn determinant_generic() {
        let a = vec![
            vec![p("1"), p("2"), p("0")],
            vec![p("3"), p("s"), p("1")],
            vec![p("0"), p("4"), p("5")],
        ];
        // 1*(5s-4) - 2*(15-0) = 5s - 34
        assert_eq!(determinant(&a), p("5*s - 34"));
    }
}
