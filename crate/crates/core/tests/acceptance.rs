//! Acceptance criteria, one line each. Expected values are computed here
//! from independent formulas wherever the library would otherwise be
//! checked against itself.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fmethod_core::fmethod::{
    am_recurrence, build_operator, build_verma_hom, fsystem_annihilates, fsystem_solve,
    fsystem_verify, hom_at, krawtchouk_form1, krawtchouk_form2, link_check, mu_lambda, p_family,
    p_family_jacobi, pc, tsat_matrix, verify_factorization, FactorCase, FamilyTag, MChar, Root,
    Weight3,
};
use fmethod_core::pbw::{dr_realize, fc_forward, is_singular, symmetrize, UEnv};
use fmethod_core::ring::{int, rat, ParamPoly, Rational, UniPoly};
use fmethod_core::special::{binom, cayley, factorial, jacobi_at0, krawtchouk, CayleyMode};
use fmethod_core::weyl::{term3, Space, WeylElement};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Display>(got: &T, want: &T, ctx: &str) -> Outcome {
    ensure(got == want, || format!("{ctx}: got {got}, want {want}"))
}

fn pp(n: i64) -> ParamPoly {
    ParamPoly::from_int(n)
}

fn cst(r: Rational) -> ParamPoly {
    ParamPoly::constant(r)
}

fn x(mono: [u32; 3], deriv: [u32; 3], c: Rational) -> WeylElement {
    term3(Space::X, mono, deriv, c)
}

fn zeta(mono: [u32; 3], c: Rational) -> WeylElement {
    term3(Space::Zeta, mono, [0; 3], c)
}

fn total(space: Space, parts: impl IntoIterator<Item = WeylElement>) -> WeylElement {
    parts
        .into_iter()
        .fold(WeylElement::zero(3, space), |acc, t| acc.add(&t).unwrap())
}

/// `D1 = ∂1 + ½ x2 ∂3`, `D2 = ∂2 - ½ x1 ∂3`.
fn d1_d2() -> (WeylElement, WeylElement) {
    let d1 = total(
        Space::X,
        [
            x([0; 3], [1, 0, 0], int(1)),
            x([0, 1, 0], [0, 0, 1], rat(1, 2)),
        ],
    );
    let d2 = total(
        Space::X,
        [
            x([0; 3], [0, 1, 0], int(1)),
            x([1, 0, 0], [0, 0, 1], rat(-1, 2)),
        ],
    );
    (d1, d2)
}

fn choose(n: i64, m: i64) -> i64 {
    if m < 0 || m > n {
        return 0;
    }
    (0..m).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn uni(coeffs: Vec<Rational>) -> UniPoly {
    UniPoly::new(coeffs.into_iter().map(cst).collect())
}

/// `Σ m! C(k,m) C(l,m) (±t/2)^m`.
fn own_ppm(k: i64, l: i64, sign: i64) -> UniPoly {
    uni((0..=k.min(l))
        .map(|m| {
            let fact: i64 = (1..=m).product();
            rat(
                fact * choose(k, m) * choose(l, m) * sign.pow(m as u32),
                1 << m,
            )
        })
        .collect())
}

/// `Cay_0..=Cay_n` at `(x; y)` from the three-term recurrence.
fn own_cayley<T>(n: usize, x: &T, y: &T, from_int: impl Fn(i64) -> T) -> Vec<T>
where
    T: Clone,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T>,
{
    let mut out = vec![from_int(1), x.clone()];
    for j in 2..=n as i64 {
        let a = x * &out[j as usize - 1];
        let b = &(y - &from_int(j - 2)) * &from_int(j - 1);
        let b = &b * &out[j as usize - 2];
        out.push(&a - &b);
    }
    out.truncate(n + 1);
    out
}

/// `Σ C(k,m) Cay_m(s;k) t^m / 2^m` at a rational `s`.
fn own_pc(k: i64, s: &Rational) -> UniPoly {
    let cay = own_cayley(k as usize, s, &int(k), int);
    uni((0..=k)
        .map(|m| &cay[m as usize] * rat(choose(k, m), 1 << m))
        .collect())
}

fn all_tags(max_k: u32, max_l: u32) -> Vec<FamilyTag> {
    let mut tags = vec![FamilyTag::Identity];
    for k in 1..=max_k {
        tags.push(FamilyTag::A1 { k });
        tags.push(FamilyTag::A2 { k });
        tags.push(FamilyTag::C {
            k,
            s: ParamPoly::s(),
        });
        for l in 1..=max_l {
            tags.push(FamilyTag::Bplus { k, l });
            tags.push(FamilyTag::Bminus { k, l });
        }
    }
    tags
}

fn symbol_product() -> Outcome {
    let (d1, d2) = d1_d2();
    let product = d2.mul(&d1.mul(&d1).unwrap()).unwrap();
    let want = total(
        Space::X,
        [
            x([0, 0, 0], [2, 1, 0], int(1)),
            x([0, 0, 0], [1, 0, 1], int(1)),
            x([0, 1, 0], [0, 0, 2], rat(1, 2)),
            x([0, 1, 0], [1, 1, 1], int(1)),
            x([0, 2, 0], [0, 1, 2], rat(1, 4)),
            x([1, 0, 0], [2, 0, 1], rat(-1, 2)),
            x([1, 1, 0], [1, 0, 2], rat(-1, 2)),
            x([1, 2, 0], [0, 0, 3], rat(-1, 8)),
        ],
    );
    same(&product, &want, "D2 D1^2")?;
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let f = x([a, b, c], [0; 3], int(1));
                let nested = d2.act(&d1.act(&d1.act(&f).unwrap()).unwrap()).unwrap();
                same(&product.act(&f).unwrap(), &nested, "action on a monomial")?;
            }
        }
    }
    let symbol = total(
        Space::Zeta,
        [zeta([2, 1, 0], int(1)), zeta([1, 0, 1], int(1))],
    );
    same(&product.symb0().unwrap(), &symbol, "truncated symbol")
}

fn fourier_bridge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    for i in 0..200 {
        let mut u = UEnv::zero();
        for _ in 0..rng.gen_range(1..=6) {
            let d = rng.gen_range(0..=5u8);
            let a = rng.gen_range(0..=d);
            let b = rng.gen_range(0..=d - a);
            let mut n = rng.gen_range(-9..=9i64);
            if n == 0 {
                n = 1;
            }
            let q = rat(n, rng.gen_range(1..=4));
            u = u.add(&UEnv::nminus(a, b, d - a - b).scale_rational(&q));
        }
        let lhs = fc_forward(&u).map_err(|e| e.to_string())?;
        let rhs = dr_realize(&u).unwrap().symb0().unwrap();
        same(&lhs, &rhs, &format!("sample {i}"))?;
    }
    Ok(())
}

fn fsystem_dimensions() -> Outcome {
    let seventh = rat(1, 7);
    let one = || Some(UniPoly::one());
    for k in 0..=5i64 {
        for l in 0..=5i64 {
            let mut points: Vec<((Rational, Rational), Option<UniPoly>)> = Vec::new();
            let off = |p: &(Rational, Rational), coords: &[usize], points: &mut Vec<_>| {
                for &i in coords {
                    for d in [seventh.clone(), -seventh.clone()] {
                        let mut q = p.clone();
                        if i == 0 {
                            q.0 += d;
                        } else {
                            q.1 += d;
                        }
                        points.push((q, None));
                    }
                }
            };
            if k == 0 && l == 0 {
                for p in [
                    (int(0), int(0)),
                    (rat(2, 3), int(-4)),
                    (seventh.clone(), rat(9, 2)),
                ] {
                    points.push((p, one()));
                }
            } else if l == 0 || k == 0 {
                for free in [int(0), rat(7, 3), rat(-1, 2)] {
                    let p = if l == 0 {
                        (int(1 - k), free)
                    } else {
                        (free, int(1 - l))
                    };
                    off(&p, &[usize::from(l != 0)], &mut points);
                    points.push((p, one()));
                }
            } else if k != l {
                let plus = (int(1 - k), int(1 - l + k));
                let minus = (int(1 - k + l), int(1 - l));
                off(&plus, &[0, 1], &mut points);
                off(&minus, &[0, 1], &mut points);
                points.push((plus, Some(own_ppm(k, l, 1))));
                points.push((minus, Some(own_ppm(k, l, -1))));
            } else {
                for s in [int(0), int(k), int(-k), rat(1, 3), int(k + 1)] {
                    let half = rat(1, 2);
                    let p = ((int(2 - k) - &s) * &half, (int(2 - k) + &s) * &half);
                    off(&p, &[0], &mut points);
                    points.push((p, Some(own_pc(k, &s))));
                }
            }
            for (lam, want) in points {
                let sol = fsystem_solve(k as u32, l as u32, &lam).map_err(|e| e.to_string())?;
                let ctx = format!("(k,l)=({k},{l}) lambda=({}, {})", lam.0, lam.1);
                let dim = usize::from(want.is_some());
                ensure(sol.dim == dim, || {
                    format!("{ctx}: dim {} != {dim}", sol.dim)
                })?;
                ensure(sol.generator == want, || {
                    format!("{ctx}: generator {:?}", sol.generator)
                })?;
            }
        }
    }
    Ok(())
}

fn symbolic_cayley_family() -> Outcome {
    let s = ParamPoly::s();
    for k in 1..=6i64 {
        ensure(fsystem_verify(k as u32).map_err(|e| e.to_string())?, || {
            format!("k={k}")
        })?;
        let cay = own_cayley(k as usize, &s, &pp(k), pp);
        let want = UniPoly::new(
            (0..=k)
                .map(|m| cay[m as usize].scale(&rat(choose(k, m), 1 << m)))
                .collect(),
        );
        same(
            &am_recurrence(k as u32, &s),
            &want,
            &format!("recurrence k={k}"),
        )?;
        same(&pc(k as u32, &s), &want, &format!("closed form k={k}"))?;
    }
    Ok(())
}

fn singular_vectors() -> Outcome {
    for tag in all_tags(4, 4) {
        let hom = build_verma_hom(&tag, MChar::PLUS_PLUS).map_err(|e| e.to_string())?;
        ensure(is_singular(&hom.vector), || {
            format!("{tag} is not singular")
        })?;
    }
    Ok(())
}

fn factorizations() -> Outcome {
    let mut checked = 0;
    for case in FactorCase::ALL {
        for k in 0..=5 {
            for l in 0..=5 {
                if !case.admits(k, l) {
                    continue;
                }
                let report = verify_factorization(case, k, l).map_err(|e| e.to_string())?;
                ensure(report.all_passed(), || report.to_json().to_string())?;
                checked += 1;
            }
        }
    }
    ensure(checked >= 6, || format!("only {checked} admissible cases"))?;

    let n = |a, b, c| UEnv::nminus(a, b, c);
    let sym = |a, b, c| symmetrize(a, b, c).unwrap();
    let c_vec = sym(2, 2, 0).sub(&n(0, 0, 2).scale_rational(&rat(1, 2)));
    let left = n(1, 0, 0).mul(&n(0, 2, 0)).mul(&n(1, 0, 0));
    let right = n(0, 1, 0).mul(&n(2, 0, 0)).mul(&n(0, 1, 0));
    same(&c_vec, &left, "first worked example")?;
    same(&c_vec, &right, "first worked example, second chain")?;
    // N1 multiplies both terms; the N3 term alone has the wrong weight
    let bp = n(1, 0, 0).mul(&sym(1, 1, 0).add(&n(0, 0, 1).scale_rational(&rat(3, 2))));
    let sym_form = sym(2, 1, 0).add(&sym(1, 0, 1));
    same(&bp, &sym_form, "second worked example")?;
    same(
        &bp,
        &n(0, 1, 0).mul(&n(2, 0, 0)),
        "second worked example, chain",
    )?;

    let (d1, d2) = d1_d2();
    let op = |tag: FamilyTag| build_operator(&tag).unwrap();
    let d1d2d2d1 = d1.mul(&d2.pow(2).unwrap()).unwrap().mul(&d1).unwrap();
    let d2d1d1d2 = d2.mul(&d1.pow(2).unwrap()).unwrap().mul(&d2).unwrap();
    same(
        &op(FamilyTag::C { k: 2, s: pp(0) }),
        &d1d2d2d1,
        "dual of the first example",
    )?;
    same(&d1d2d2d1, &d2d1d1d2, "dual chains")?;
    let d2d1d1 = d2.mul(&d1.pow(2).unwrap()).unwrap();
    same(
        &op(FamilyTag::Bplus { k: 2, l: 1 }),
        &d2d1d1,
        "dual of the second example",
    )
}

fn special_identities() -> Outcome {
    let (s, y) = (ParamPoly::s(), ParamPoly::l1());
    for m in 0..=12 {
        let det = cayley(m, &s, &y, CayleyMode::Det);
        same(
            &cayley(m, &s, &y, CayleyMode::Recurrence),
            &det,
            &format!("Cay_{m} recurrence"),
        )?;
        same(
            &cayley(m, &s, &y, CayleyMode::Closed),
            &det,
            &format!("Cay_{m} closed"),
        )?;
        let own = own_cayley(m as usize, &s, &y, pp);
        same(&own[m as usize], &det, &format!("Cay_{m} oracle"))?;
    }
    let two = |m: u32| pp(1 << m);
    for k in 0..=10i64 {
        for m in 0..=10u32 {
            let mi = i64::from(m);
            let a = (&pp(k - 2 * mi) + &s).scale(&rat(1, 2));
            let b = (&pp(k - 2 * mi) - &s).scale(&rat(1, 2));
            let rhs = (jacobi_at0(m, &a, &b) * two(m)).scale(&factorial(m));
            same(
                &cayley(m, &s, &pp(k), CayleyMode::Det),
                &rhs,
                &format!("Cay/Jacobi k={k} m={m}"),
            )?;
        }
    }
    for m in 0..=8u32 {
        let mi = i64::from(m);
        for k in 0..=8 {
            for l in 0..=8 {
                let rhs = jacobi_at0(m, &pp(k - l - mi), &pp(l - mi)) * two(m);
                same(
                    &krawtchouk(m, &pp(l), &pp(k)),
                    &rhs,
                    &format!("K/Jacobi m={m} k={k} l={l}"),
                )?;
            }
        }
    }
    let (a, b) = (ParamPoly::l1(), ParamPoly::l2());
    for m in 0..=8u32 {
        let sum = (0..=m).fold(ParamPoly::zero(), |acc, r| {
            acc + binom(&(&a - &b), m - r) * krawtchouk(r, &a, &b)
        });
        let sum = if m % 2 == 0 { sum } else { -sum };
        same(&binom(&a, m), &sum, &format!("binomial/Krawtchouk m={m}"))?;
        let flip = jacobi_at0(m, &b, &a);
        let flip = if m % 2 == 0 { flip } else { -flip };
        same(
            &jacobi_at0(m, &a, &b),
            &flip,
            &format!("Jacobi symmetry m={m}"),
        )?;
    }
    for al in 0..=6i64 {
        for be in 0..=6i64 {
            for m in 0..=al + be {
                let want: i64 = (0..=m)
                    .map(|j| choose(al, m - j) * choose(be, j) * (-1i64).pow(j as u32))
                    .sum();
                let got = jacobi_at0(m as u32, &pp(al - m), &pp(be - m)) * two(m as u32);
                same(
                    &got,
                    &pp(want),
                    &format!("generating function a={al} b={be} m={m}"),
                )?;
            }
        }
    }
    for k in 1..=6u32 {
        let ki = i64::from(k);
        same(
            &pc(k, &pp(ki)),
            &own_ppm(ki, ki, 1),
            &format!("p_c(k;k) k={k}"),
        )?;
        same(
            &pc(k, &pp(-ki)),
            &own_ppm(ki, ki, -1),
            &format!("p_c(-k;k) k={k}"),
        )?;
    }
    for tag in all_tags(6, 6) {
        same(
            &p_family_jacobi(&tag),
            &p_family(&tag),
            &format!("Jacobi form of {tag}"),
        )?;
    }
    for k in 0..=7u32 {
        for l in 0..=7u32 {
            let (ki, li) = (i64::from(k), i64::from(l));
            same(
                &krawtchouk_form1(k, l),
                &own_pc(ki, &int(ki - 2 * li)),
                &format!("first form ({k},{l})"),
            )?;
            same(
                &krawtchouk_form2(k, l),
                &own_pc(li, &int(2 * ki - li)),
                &format!("second form ({k},{l})"),
            )?;
        }
    }
    Ok(())
}

/// `D^{(a,b)}(μ; σt)` on `{t^m : m ≤ min(a,b)}`.
fn own_closed_form(a: i64, b: i64, mu: &ParamPoly, sigma: i64) -> Vec<Vec<ParamPoly>> {
    let n = a.min(b) as usize + 1;
    let mut out = vec![vec![ParamPoly::zero(); n]; n];
    for m in 0..n as i64 {
        let col = m as usize;
        if m > 0 {
            out[col - 1][col] = pp(sigma * m);
        }
        out[col][col] = (mu + &cst(rat(2 * a - b - 2, 2))).scale(&int(a - m));
        if col + 1 < n {
            out[col + 1][col] = cst(rat(sigma * (a - 1 - m) * (a - m) * (b - m), 4));
        }
    }
    out
}

fn tsat_cross_check() -> Outcome {
    let lam = (ParamPoly::l1(), ParamPoly::l2());
    for k in 0..=5u32 {
        for l in 0..=5u32 {
            let (ki, li) = (i64::from(k), i64::from(l));
            let m1 = tsat_matrix(k, l, 1, &lam).map_err(|e| e.to_string())?;
            let m2 = tsat_matrix(k, l, 2, &lam).map_err(|e| e.to_string())?;
            ensure(m1 == own_closed_form(ki, li, &lam.0, 1), || {
                format!("j=1 ({k},{l})")
            })?;
            ensure(m2 == own_closed_form(li, ki, &lam.1, -1), || {
                format!("j=2 ({k},{l})")
            })?;
        }
    }
    let mut pairs = Vec::new();
    for k in 1..=5 {
        for l in 1..=5 {
            pairs.push((FamilyTag::Bplus { k, l }, FamilyTag::Bminus { k: l, l: k }));
            pairs.push((FamilyTag::Bminus { k, l }, FamilyTag::Bplus { k: l, l: k }));
        }
        pairs.push((
            FamilyTag::C {
                k,
                s: ParamPoly::s(),
            },
            FamilyTag::C {
                k,
                s: -ParamPoly::s(),
            },
        ));
    }
    for (tag, dual) in pairs {
        let (k, l) = tag.degrees();
        let lam = tag.target_lambda();
        let swapped = (lam.1.clone(), lam.0.clone());
        let p = p_family(&tag);
        let ann = |k, l, lam: &(ParamPoly, ParamPoly), p: &UniPoly| {
            fsystem_annihilates(k, l, lam, p).map_err(|e| e.to_string())
        };
        ensure(ann(k, l, &lam, &p)?, || format!("{tag} is not a solution"))?;
        ensure(ann(l, k, &swapped, &p.reflect())?, || {
            format!("dual of {tag} is not a solution")
        })?;
        ensure(dual.target_lambda() == swapped, || {
            format!("{dual} does not sit at the swapped lambda")
        })?;
        same(&p.reflect(), &p_family(&dual), &format!("p(-t) for {tag}"))?;
    }
    Ok(())
}

fn own_mu(lam: &(ParamPoly, ParamPoly)) -> [ParamPoly; 3] {
    let (a, b) = lam;
    let third = rat(1, 3);
    [
        (pp(3) - a.scale(&int(2)) - b.clone()).scale(&third),
        (a - b).scale(&third),
        (a + &b.scale(&int(2)) - pp(3)).scale(&third),
    ]
}

fn own_reflect(v: &[ParamPoly; 3], r: Root) -> [ParamPoly; 3] {
    let (i, j) = match r {
        Root::Alpha => (0, 1),
        Root::Beta => (1, 2),
        Root::Gamma => (0, 2),
    };
    let mut w = v.clone();
    w.swap(i, j);
    w
}

fn own_word(v: &[ParamPoly; 3], word: &[Root]) -> [ParamPoly; 3] {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, &r| own_reflect(&acc, r))
}

fn valid_link(from: &[ParamPoly; 3], to: &[ParamPoly; 3], chain: &[Root]) -> bool {
    let mut cur = from.clone();
    for &r in chain {
        let (i, j) = match r {
            Root::Alpha => (0, 1),
            Root::Beta => (1, 2),
            Root::Gamma => (0, 2),
        };
        let pairing = (&cur[i] - &cur[j]).as_constant();
        let ok = pairing.is_some_and(|p| p.is_integer() && p >= Rational::zero());
        if !ok {
            return false;
        }
        cur = own_reflect(&cur, r);
    }
    &cur == to
}

fn linkage() -> Outcome {
    use Root::{Alpha as A, Beta as B, Gamma as G};
    for tag in all_tags(4, 4) {
        let word: Vec<Root> = match tag {
            FamilyTag::Identity => vec![],
            FamilyTag::A1 { .. } => vec![A],
            FamilyTag::A2 { .. } => vec![B],
            FamilyTag::Bplus { .. } => vec![B, A],
            FamilyTag::Bminus { .. } => vec![A, B],
            FamilyTag::C { .. } => vec![G],
        };
        let hom = build_verma_hom(&tag, MChar::PLUS_PLUS).map_err(|e| e.to_string())?;
        let from = own_mu(&hom.target.lam);
        let to = own_mu(&hom.source.lam);
        ensure(mu_lambda(&hom.target.lam).coords() == &from, || {
            format!("mu for {tag}")
        })?;
        ensure(own_word(&from, &word) == to, || {
            format!("{tag} is not s_w mu_lambda")
        })?;
        let (wf, wt) = (
            Weight3::new(from.clone()).unwrap(),
            Weight3::new(to.clone()).unwrap(),
        );
        let chain = link_check(&wf, &wt, 3).ok_or_else(|| format!("no link for {tag}"))?;
        ensure(valid_link(&from, &to, &chain), || {
            format!("invalid link {chain:?} for {tag}")
        })?;
    }

    let c = |s: i64, k: u32| FamilyTag::C { k, s: pp(s) };
    let arrows: [(&[Root], &[Root], FamilyTag); 13] = [
        (&[A], &[], FamilyTag::A1 { k: 1 }),
        (&[B], &[], FamilyTag::A2 { k: 1 }),
        (&[B, A], &[A], FamilyTag::A2 { k: 2 }),
        (&[A, B], &[B], FamilyTag::A1 { k: 2 }),
        (&[B, A], &[B], c(3, 1)),
        (&[A, B], &[A], c(-3, 1)),
        (&[G], &[B, A], FamilyTag::A1 { k: 1 }),
        (&[G], &[A, B], FamilyTag::A2 { k: 1 }),
        (&[G], &[], c(0, 2)),
        (&[B, A], &[], FamilyTag::Bplus { k: 1, l: 2 }),
        (&[A, B], &[], FamilyTag::Bminus { k: 2, l: 1 }),
        (&[G], &[A], FamilyTag::Bminus { k: 1, l: 2 }),
        (&[G], &[B], FamilyTag::Bplus { k: 2, l: 1 }),
    ];
    let rho = [pp(1), pp(0), pp(-1)];
    for (src, tgt, tag) in arrows {
        let (source, target) = (own_word(&rho, src), own_word(&rho, tgt));
        let lam = (
            &pp(1) - &(&target[0] - &target[1]),
            &pp(1) - &(&target[1] - &target[2]),
        );
        let hom = hom_at(&tag, MChar::PLUS_PLUS, &lam).map_err(|e| format!("{tag}: {e}"))?;
        ensure(own_mu(&hom.source.lam) == source, || {
            format!("{tag}: wrong source")
        })?;
        ensure(is_singular(&hom.vector), || format!("{tag}: not singular"))?;
        let (wf, wt) = (
            Weight3::new(target.clone()).unwrap(),
            Weight3::new(source.clone()).unwrap(),
        );
        let chain = link_check(&wf, &wt, 3).ok_or_else(|| format!("{tag}: no link"))?;
        ensure(valid_link(&target, &source, &chain), || {
            format!("{tag}: invalid link")
        })?;
    }
    Ok(())
}

struct Criterion {
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            title: "D2*D1^2 expansion and its truncated symbol",
            limit: secs(1),
            run: symbol_product,
        },
        Criterion {
            title: "Fourier bridge on 200 random n- elements",
            limit: secs(10),
            run: fourier_bridge,
        },
        Criterion {
            title: "F-system dimensions and generators, k,l <= 5",
            limit: secs(30),
            run: fsystem_dimensions,
        },
        Criterion {
            title: "symbolic Cayley family, k <= 6",
            limit: secs(30),
            run: symbolic_cayley_family,
        },
        Criterion {
            title: "singular vectors by PBW reduction, k,l <= 4",
            limit: secs(60),
            run: singular_vectors,
        },
        Criterion {
            title: "factorization identities, k,l <= 5",
            limit: secs(120),
            run: factorizations,
        },
        Criterion {
            title: "special-polynomial identities",
            limit: secs(30),
            run: special_identities,
        },
        Criterion {
            title: "T-saturation closed forms and duality",
            limit: secs(10),
            run: tsat_cross_check,
        },
        Criterion {
            title: "linkage and Weyl-element correspondence",
            limit: secs(10),
            run: linkage,
        },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(|()| ensure(elapsed <= c.limit, || format!("exceeded {:?}", c.limit)));
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(()) => println!("[PASS] {}. {} ({secs:.2}s)", i + 1, c.title),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {}. {} ({secs:.2}s): {e}", i + 1, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
