//! Batch verification suites over `(k, l)` grids.
//!
//! Each suite is split into independent jobs; [`run`] maps them through an
//! [`Exec`] and returns checks in a fixed order regardless of scheduling.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::exec::Exec;
use crate::fmethod::{
    am_recurrence, build_operator, build_verma_hom, closed_form_matrix, fsystem_operator,
    fsystem_solve, fsystem_verify, hom_at, hom_word, krawtchouk_form1, krawtchouk_form2,
    lambda_of_weight, link_check, mu_lambda, p_family, p_family_jacobi, p_minus, p_plus, pc,
    reflect_word, sol_generator, tsat_matrix, verify_factorization, FactorCase, FamilyTag, MChar,
    Root, Weight3,
};
use crate::pbw::{dr_realize, fc_forward, fc_inverse, is_singular, symmetrize, UEnv, VermaVector};
use crate::ring::{int, rat, ParamPoly, Rational, UniPoly};
use crate::special::{binom, cayley, factorial, jacobi_at0, krawtchouk, CayleyMode};
use crate::weyl::{term3, Space, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Symbols,
    Fsystem,
    Singular,
    Factorizations,
    Special,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Symbols,
        Suite::Fsystem,
        Suite::Singular,
        Suite::Factorizations,
        Suite::Special,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symbols => "symbols",
            Suite::Fsystem => "fsystem",
            Suite::Singular => "singular",
            Suite::Factorizations => "factorizations",
            Suite::Special => "special",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Grid bounds for the `(k, l)` loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: u32,
    pub max_l: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_k: 5, max_l: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "suite": self.suite.name(),
            "name": self.name,
            "status": if self.passed { "pass" } else { "fail" },
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "[{status}] {}: {}", self.suite, self.name)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// Report object for a list of checks.
pub fn report_json(checks: &[Check]) -> serde_json::Value {
    let failed = checks.iter().filter(|c| !c.passed).count();
    json!({
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    })
}

type Outcome = Result<(), String>;
type Job = Box<dyn Fn() -> Vec<(String, Outcome)> + Send + Sync>;

fn job(f: impl Fn() -> Vec<(String, Outcome)> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn single(name: impl Into<String>, f: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
    let name = name.into();
    Box::new(move || vec![(name.clone(), f())])
}

fn eq<T: PartialEq + fmt::Display>(a: &T, b: &T) -> Outcome {
    if a == b {
        Ok(())
    } else {
        Err(format!("{a} != {b}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs one suite.
pub fn run(suite: Suite, bounds: Bounds, exec: Exec) -> Vec<Check> {
    let jobs = match suite {
        Suite::Symbols => symbols_jobs(bounds),
        Suite::Fsystem => fsystem_jobs(bounds),
        Suite::Singular => singular_jobs(bounds),
        Suite::Factorizations => factorization_jobs(bounds),
        Suite::Special => special_jobs(bounds),
    };
    exec.map(&jobs, |j| j())
        .into_iter()
        .flatten()
        .map(|(name, outcome)| Check {
            suite,
            name,
            passed: outcome.is_ok(),
            detail: outcome.err(),
        })
        .collect()
}

/// Runs several suites in order.
pub fn run_many(suites: &[Suite], bounds: Bounds, exec: Exec) -> Vec<Check> {
    suites.iter().flat_map(|&s| run(s, bounds, exec)).collect()
}

/// Every family tag with `k ≤ max_k`, `l ≤ max_l`; the C family keeps `s`
/// symbolic.
pub fn tags_up_to(max_k: u32, max_l: u32) -> Vec<FamilyTag> {
    let mut out = vec![FamilyTag::Identity];
    out.extend((1..=max_k).map(|k| FamilyTag::A1 { k }));
    out.extend((1..=max_l).map(|k| FamilyTag::A2 { k }));
    for k in 1..=max_k {
        for l in 1..=max_l {
            out.push(FamilyTag::Bplus { k, l });
            out.push(FamilyTag::Bminus { k, l });
        }
    }
    out.extend((1..=max_k).map(|k| FamilyTag::C {
        k,
        s: ParamPoly::s(),
    }));
    out
}

/// `D2 · D1^2` and the eight terms it expands to.
pub fn d2_d1_squared() -> (WeylElement, WeylElement) {
    let [d1, d2, _] = crate::pbw::dr_generators();
    let product = d2.mul(&d1.pow(2).expect("same space")).expect("same space");
    let x = |mono: [u32; 3], deriv: [u32; 3], c: Rational| term3(Space::X, mono, deriv, c);
    let expected = [
        x([0, 0, 0], [2, 1, 0], int(1)),
        x([0, 0, 0], [1, 0, 1], int(1)),
        x([0, 1, 0], [0, 0, 2], rat(1, 2)),
        x([0, 1, 0], [1, 1, 1], int(1)),
        x([0, 2, 0], [0, 1, 2], rat(1, 4)),
        x([1, 0, 0], [2, 0, 1], rat(-1, 2)),
        x([1, 1, 0], [1, 0, 2], rat(-1, 2)),
        x([1, 2, 0], [0, 0, 3], rat(-1, 8)),
    ];
    let expected = crate::weyl::sum(3, Space::X, expected).expect("same space");
    (product, expected)
}

fn zeta(mono: [u32; 3], c: Rational) -> WeylElement {
    term3(Space::Zeta, mono, [0, 0, 0], c)
}

fn nminus_monomials(max_deg: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                out.push([a, b, d - a - b]);
            }
        }
    }
    out
}

fn symbols_jobs(bounds: Bounds) -> Vec<Job> {
    let mut jobs = vec![
        single("D2*D1^2 expands to the 8-term operator", || {
            let (product, expected) = d2_d1_squared();
            eq(&product, &expected)
        }),
        single("Symb0(D2*D1^2) = z1^2 z2 + z1 z3", || {
            let (product, _) = d2_d1_squared();
            let want = zeta([2, 1, 0], int(1))
                .add(&zeta([1, 0, 1], int(1)))
                .map_err(err)?;
            eq(&product.symb0().map_err(err)?, &want)
        }),
        single("F_c(N2- (N1-)^2) = z1^2 z2 + z1 z3 and back", || {
            let u = UEnv::nminus(0, 1, 0).mul(&UEnv::nminus(2, 0, 0));
            let p = zeta([2, 1, 0], int(1))
                .add(&zeta([1, 0, 1], int(1)))
                .map_err(err)?;
            eq(&fc_forward(&u).map_err(err)?, &p)?;
            let sym = symmetrize(2, 1, 0)
                .map_err(err)?
                .add(&symmetrize(1, 0, 1).map_err(err)?);
            eq(&fc_inverse(&p).map_err(err)?, &sym)?;
            eq(&sym, &u)
        }),
    ];
    for d in 0..=6 {
        jobs.push(single(
            format!("trun0(dR(s(N^r))) = d^r, |r| = {d}"),
            move || {
                for r in nminus_monomials(d)
                    .into_iter()
                    .filter(|r| r.iter().sum::<u32>() == d)
                {
                    let lhs = dr_realize(&symmetrize(r[0], r[1], r[2]).map_err(err)?)
                        .map_err(err)?
                        .trun0();
                    eq(&lhs, &term3(Space::X, [0, 0, 0], r, int(1)))?;
                }
                Ok(())
            },
        ));
    }
    for d in 0..=5 {
        jobs.push(single(
            format!("F_c(u) = Symb0(dR(u)), PBW monomials of degree {d}"),
            move || {
                for r in nminus_monomials(d)
                    .into_iter()
                    .filter(|r| r.iter().sum::<u32>() == d)
                {
                    let u = UEnv::nminus(r[0] as u8, r[1] as u8, r[2] as u8);
                    let lhs = fc_forward(&u).map_err(err)?;
                    let rhs = dr_realize(&u).map_err(err)?.symb0().map_err(err)?;
                    eq(&lhs, &rhs)?;
                }
                Ok(())
            },
        ));
    }
    for d in 0..=8 {
        jobs.push(single(format!("F_c round trips, degree {d}"), move || {
            for r in nminus_monomials(d)
                .into_iter()
                .filter(|r| r.iter().sum::<u32>() == d)
            {
                let u = UEnv::nminus(r[0] as u8, r[1] as u8, r[2] as u8);
                eq(&fc_inverse(&fc_forward(&u).map_err(err)?).map_err(err)?, &u)?;
                let z = zeta(r, int(1));
                eq(&fc_forward(&fc_inverse(&z).map_err(err)?).map_err(err)?, &z)?;
            }
            Ok(())
        }));
    }
    for tag in tags_up_to(bounds.max_k.min(4), bounds.max_l.min(4)) {
        jobs.push(job(move || {
            let name = |what: &str| format!("{what}: {tag}");
            let gen = match sol_generator(&tag) {
                Ok(g) => g,
                Err(e) => return vec![(name("generator"), Err(e.to_string()))],
            };
            let op = build_operator(&tag);
            let symb = op
                .as_ref()
                .map_err(err)
                .and_then(|d| d.symb0().map_err(err))
                .and_then(|s| eq(&s, &gen));
            let verma = build_verma_hom(&tag, MChar::PLUS_PLUS)
                .map_err(err)
                .and_then(|h| fc_forward(&h.vector.body).map_err(err))
                .and_then(|p| eq(&p, &gen));
            let order = op.as_ref().map_err(err).and_then(|d| {
                let target = tag.target_lambda();
                let source = tag.source(&crate::fmethod::InducedParams {
                    eps: MChar::PLUS_PLUS,
                    lam: target.clone(),
                });
                let want = &(&source.lam.0 + &source.lam.1) - &(&target.0 + &target.1);
                let got = ParamPoly::from_int(i64::from(d.order().unwrap_or(0)));
                eq(&got, &want)
            });
            vec![
                (name("Symb0(operator) = generator"), symb),
                (name("F_c(singular vector) = generator"), verma),
                (name("operator order = |nu| - |lambda|"), order),
            ]
        }));
    }
    jobs
}

/// Parameter points for `fsystem_solve` on `Pol(k,l)` with the expected
/// generator (`None` where the solution space must vanish).
pub fn branch_points(k: u32, l: u32) -> Vec<((Rational, Rational), Option<UniPoly>)> {
    let (ki, li) = (i64::from(k), i64::from(l));
    let seventh = rat(1, 7);
    let bump = |p: &(Rational, Rational), i: usize, sign: i64| {
        let mut q = p.clone();
        let d = &seventh * int(sign);
        if i == 0 {
            q.0 += d;
        } else {
            q.1 += d;
        }
        q
    };
    let mut out = Vec::new();
    match (k, l) {
        (0, 0) => {
            for p in [
                (int(0), int(0)),
                (rat(1, 3), rat(-2, 5)),
                (seventh.clone(), int(3)),
            ] {
                out.push((p, Some(UniPoly::one())));
            }
        }
        (_, 0) | (0, _) => {
            let fixed = if l == 0 { 0 } else { 1 };
            for free in [int(0), rat(7, 3), rat(-1, 2)] {
                let p = if l == 0 {
                    (int(1 - ki), free)
                } else {
                    (free, int(1 - li))
                };
                for sign in [1, -1] {
                    out.push((bump(&p, fixed, sign), None));
                }
                out.push((p, Some(UniPoly::one())));
            }
        }
        _ if k != l => {
            let plus = (int(1 - ki), int(1 - li + ki));
            let minus = (int(1 - ki + li), int(1 - li));
            for (p, g) in [(plus, p_plus(k, l)), (minus, p_minus(k, l))] {
                for i in 0..2 {
                    for sign in [1, -1] {
                        out.push((bump(&p, i, sign), None));
                    }
                }
                out.push((p, Some(g)));
            }
        }
        _ => {
            for s in [int(0), int(ki), int(-ki), rat(1, 3), int(ki + 1)] {
                let p = (
                    (int(2 - ki) - &s) * rat(1, 2),
                    (int(2 - ki) + &s) * rat(1, 2),
                );
                for sign in [1, -1] {
                    out.push((bump(&p, 0, sign), None));
                }
                out.push((p, Some(pc(k, &ParamPoly::constant(s)))));
            }
        }
    }
    out
}

fn fsystem_jobs(bounds: Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in 0..=bounds.max_k {
        for l in 0..=bounds.max_l {
            jobs.push(single(
                format!("Sol({k},{l}) dimensions and generators"),
                move || {
                    for (lam, want) in branch_points(k, l) {
                        let sol = fsystem_solve(k, l, &lam).map_err(err)?;
                        let at = format!("lambda=({}, {})", lam.0, lam.1);
                        ensure(sol.generator == want, || {
                            format!(
                                "{at}: got dim {} {:?}",
                                sol.dim,
                                sol.generator.as_ref().map(|g| g.to_string())
                            )
                        })?;
                        if let Some(g) = &sol.generator {
                            let dual = fsystem_solve(l, k, &(lam.1.clone(), lam.0.clone()))
                                .map_err(err)?;
                            ensure(dual.generator.as_ref() == Some(&g.reflect()), || {
                                format!("{at}: duality fails for {g}")
                            })?;
                        }
                    }
                    Ok(())
                },
            ));
            jobs.push(single(
                format!("T-saturation = closed form on Pol({k},{l})"),
                move || {
                    let lam = (ParamPoly::l1(), ParamPoly::l2());
                    for j in [1, 2] {
                        let a = tsat_matrix(k, l, j, &lam).map_err(err)?;
                        let b = closed_form_matrix(k, l, j, &lam).map_err(err)?;
                        ensure(a == b, || format!("j={j}"))?;
                    }
                    Ok(())
                },
            ));
            jobs.push(single(
                format!("Euler operators under T on Pol({k},{l})"),
                move || {
                    for m in 0..=k.min(l) {
                        let b = zeta([k - m, l - m, m], int(1));
                        for (i, eig) in [(0, k - m), (1, l - m), (2, m)] {
                            let euler = WeylElement::var(3, Space::Zeta, i)
                                .mul(&WeylElement::der(3, Space::Zeta, i))
                                .map_err(err)?;
                            let got = euler.act(&b).map_err(err)?;
                            eq(&got, &b.scale_rational(&int(i64::from(eig))))?;
                        }
                    }
                    Ok(())
                },
            ));
        }
    }
    let top = bounds.max_k.max(bounds.max_l).max(6);
    for k in 1..=top {
        jobs.push(single(
            format!("p_c^(s;{k}) solves the F-system with s symbolic"),
            move || {
                ensure(fsystem_verify(k).map_err(err)?, || {
                    "nonzero residual".into()
                })
            },
        ));
        jobs.push(single(
            format!("coefficient recurrence reproduces p_c^(s;{k})"),
            move || {
                let s = ParamPoly::s();
                eq(&am_recurrence(k, &s), &pc(k, &s))
            },
        ));
    }
    jobs.push(single("F-system operators kill constants", || {
        let one = WeylElement::one(3, Space::Zeta);
        let lam = (ParamPoly::l1(), ParamPoly::l2());
        for j in [1, 2] {
            let image = fsystem_operator(j, &lam)
                .map_err(err)?
                .act(&one)
                .map_err(err)?;
            ensure(image.is_zero(), || format!("j={j}: {image}"))?;
        }
        Ok(())
    }));
    jobs
}

fn flips_break_singularity(v: &VermaVector) -> Outcome {
    if v.body.num_terms() < 2 {
        return Ok(());
    }
    for (e, _) in v.body.terms() {
        let mut w = v.clone();
        w.body = v.body.bump(*e, &ParamPoly::one());
        ensure(!is_singular(&w), || {
            format!("still singular after bumping {e:?}")
        })?;
    }
    Ok(())
}

/// Arrows `(source word, target word, family)` of the two diagrams at
/// `λ = (0,0)`; words act on `ρ` right to left.
pub fn diagram_arrows() -> Vec<(Vec<Root>, Vec<Root>, FamilyTag)> {
    use Root::{Alpha as A, Beta as B, Gamma as G};
    let c = |s: i64, k: u32| FamilyTag::C {
        k,
        s: ParamPoly::from_int(s),
    };
    vec![
        (vec![B, A], vec![A], FamilyTag::A2 { k: 2 }),
        (vec![B, A], vec![B], c(3, 1)),
        (vec![A], vec![], FamilyTag::A1 { k: 1 }),
        (vec![G], vec![B, A], FamilyTag::A1 { k: 1 }),
        (vec![G], vec![A, B], FamilyTag::A2 { k: 1 }),
        (vec![G], vec![], c(0, 2)),
        (vec![A, B], vec![B], FamilyTag::A1 { k: 2 }),
        (vec![A, B], vec![A], c(-3, 1)),
        (vec![B], vec![], FamilyTag::A2 { k: 1 }),
        (vec![B, A], vec![], FamilyTag::Bplus { k: 1, l: 2 }),
        (vec![G], vec![A], FamilyTag::Bminus { k: 1, l: 2 }),
        (vec![G], vec![B], FamilyTag::Bplus { k: 2, l: 1 }),
        (vec![A, B], vec![], FamilyTag::Bminus { k: 2, l: 1 }),
    ]
}

fn word_name(word: &[Root]) -> String {
    let mut s: String = word
        .iter()
        .map(|r| match r {
            Root::Alpha => "s_a ",
            Root::Beta => "s_b ",
            Root::Gamma => "s_g ",
        })
        .collect();
    s.push_str("rho");
    s
}

fn singular_jobs(bounds: Bounds) -> Vec<Job> {
    let mut jobs = Vec::new();
    for tag in tags_up_to(bounds.max_k.min(4), bounds.max_l.min(4)) {
        jobs.push(job(move || {
            let hom = match build_verma_hom(&tag, MChar::PLUS_PLUS) {
                Ok(h) => h,
                Err(e) => return vec![(format!("singular: {tag}"), Err(e.to_string()))],
            };
            let singular = ensure(is_singular(&hom.vector), || "not annihilated by N+".into());
            let flips = flips_break_singularity(&hom.vector);
            let from = mu_lambda(&hom.target.lam);
            let to = mu_lambda(&hom.source.lam);
            let link = ensure(link_check(&from, &to, 3).is_some(), || {
                format!("{from} -/-> {to}")
            })
            .and_then(|()| eq(&reflect_word(&from, &hom_word(&tag)), &to));
            vec![
                (format!("singular: {tag}"), singular),
                (format!("coefficient bumps break singularity: {tag}"), flips),
                (format!("linked by its Weyl element: {tag}"), link),
            ]
        }));
    }
    for (src, tgt, tag) in diagram_arrows() {
        let name = format!(
            "diagram arrow {} : N({}) -> N({})",
            tag.hom_name(),
            word_name(&src),
            word_name(&tgt)
        );
        jobs.push(single(name, move || {
            let rho = Weight3::rho();
            let target = reflect_word(&rho, &tgt);
            let source = reflect_word(&rho, &src);
            let hom = hom_at(&tag, MChar::PLUS_PLUS, &lambda_of_weight(&target)).map_err(err)?;
            eq(&mu_lambda(&hom.source.lam), &source)?;
            ensure(is_singular(&hom.vector), || "not singular".into())?;
            ensure(link_check(&target, &source, 3).is_some(), || {
                "not linked".into()
            })
        }));
    }
    jobs
}

fn factorization_jobs(bounds: Bounds) -> Vec<Job> {
    let mut jobs = vec![
        single(
            "worked example: C(2,0) singular vector at lambda=(0,0)",
            || {
                let n1 = UEnv::nminus(1, 0, 0);
                let n2 = UEnv::nminus(0, 1, 0);
                let want = symmetrize(2, 2, 0)
                    .map_err(err)?
                    .sub(&UEnv::nminus(0, 0, 2).scale_rational(&rat(1, 2)));
                let hom = build_verma_hom(
                    &FamilyTag::C {
                        k: 2,
                        s: ParamPoly::zero(),
                    },
                    MChar::PLUS_PLUS,
                )
                .map_err(err)?;
                eq(&hom.vector.body, &want)?;
                eq(&n1.mul(&n2.pow(2)).mul(&n1), &want)?;
                eq(&n2.mul(&n1.pow(2)).mul(&n2), &want)
            },
        ),
        single(
            "worked example: phi_+ (2,1) singular vector at lambda=(-1,2)",
            || {
                let n1 = UEnv::nminus(1, 0, 0);
                let n2 = UEnv::nminus(0, 1, 0);
                let lhs = n1.mul(
                    &symmetrize(1, 1, 0)
                        .map_err(err)?
                        .add(&UEnv::nminus(0, 0, 1).scale_rational(&rat(3, 2))),
                );
                let mid = symmetrize(2, 1, 0)
                    .map_err(err)?
                    .add(&symmetrize(1, 0, 1).map_err(err)?);
                let rhs = n2.mul(&n1.pow(2));
                eq(&lhs, &mid)?;
                eq(&mid, &rhs)?;
                let lam = (ParamPoly::from_int(-1), ParamPoly::from_int(2));
                let hom = hom_at(&FamilyTag::Bplus { k: 2, l: 1 }, MChar::PLUS_PLUS, &lam)
                    .map_err(err)?;
                eq(&hom.vector.body, &rhs)
            },
        ),
    ];
    for case in FactorCase::ALL {
        for k in 1..=bounds.max_k {
            for l in 1..=bounds.max_l {
                if !case.admits(k, l) {
                    continue;
                }
                jobs.push(job(move || match verify_factorization(case, k, l) {
                    Ok(report) => report
                        .identities
                        .into_iter()
                        .map(|id| {
                            let name = format!("case {case} ({k},{l}): {} = {}", id.lhs, id.rhs);
                            let outcome = if id.passed {
                                Ok(())
                            } else {
                                Err(id.detail.unwrap_or_default())
                            };
                            (name, outcome)
                        })
                        .collect(),
                    Err(e) => vec![(format!("case {case} ({k},{l})"), Err(e.to_string()))],
                }));
            }
        }
    }
    jobs
}

/// Coefficient of `t^m` in `(1+t)^a (1-t)^b`.
fn gen_coeff(a: u32, b: u32, m: u32) -> Rational {
    use crate::special::binom_int;
    (0..=m)
        .map(|j| {
            let c = binom_int(a, j) * binom_int(b, m - j);
            if (m - j) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .sum()
}

fn special_jobs(bounds: Bounds) -> Vec<Job> {
    let p = |n: i64| ParamPoly::from_int(n);
    let mut jobs = Vec::new();
    for m in 0..=12 {
        jobs.push(single(
            format!("Cayley det = recurrence = closed form, m = {m}"),
            move || {
                let (x, y) = (ParamPoly::s(), ParamPoly::l1());
                let det = cayley(m, &x, &y, CayleyMode::Det);
                eq(&det, &cayley(m, &x, &y, CayleyMode::Recurrence))?;
                eq(&det, &cayley(m, &x, &y, CayleyMode::Closed))
            },
        ));
    }
    jobs.push(single(
        "Cay_m(s;k) = m! 2^m P_m^((k+s-2m)/2,(k-s-2m)/2)(0)",
        move || {
            let s = ParamPoly::s();
            let half = rat(1, 2);
            for k in 0..=10i64 {
                for m in 0..=10u32 {
                    let mi = i64::from(m);
                    let a = (p(k - 2 * mi) + &s).scale(&half);
                    let b = (p(k - 2 * mi) - &s).scale(&half);
                    let rhs = jacobi_at0(m, &a, &b)
                        .scale(&(factorial(m) * num_traits::pow(int(2), m as usize)));
                    eq(&cayley(m, &s, &p(k), CayleyMode::Recurrence), &rhs)
                        .map_err(|e| format!("k={k} m={m}: {e}"))?;
                }
            }
            Ok(())
        },
    ));
    jobs.push(single("K_m(l;k) = 2^m P_m^(k-l-m, l-m)(0)", move || {
        for m in 0..=8u32 {
            let mi = i64::from(m);
            for k in 0..=8 {
                for l in 0..=8 {
                    let rhs = jacobi_at0(m, &p(k - l - mi), &p(l - mi))
                        .scale(&num_traits::pow(int(2), m as usize));
                    eq(&krawtchouk(m, &p(l), &p(k)), &rhs)
                        .map_err(|e| format!("m={m} k={k} l={l}: {e}"))?;
                }
            }
        }
        Ok(())
    }));
    jobs.push(single("C(x,m) = (-1)^m sum_r C(x-y, m-r) K_r(x;y)", || {
        let (x, y) = (ParamPoly::s(), ParamPoly::l1());
        for m in 0..=8u32 {
            let sum = (0..=m).fold(ParamPoly::zero(), |acc, r| {
                acc + binom(&(&x - &y), m - r) * krawtchouk(r, &x, &y)
            });
            let sum = if m % 2 == 1 { -sum } else { sum };
            eq(&binom(&x, m), &sum).map_err(|e| format!("m={m}: {e}"))?;
        }
        Ok(())
    }));
    jobs.push(single("P_m^(a,b)(0) = (-1)^m P_m^(b,a)(0)", || {
        let (a, b) = (ParamPoly::s(), ParamPoly::l1());
        for m in 0..=8u32 {
            let rhs = jacobi_at0(m, &b, &a);
            let rhs = if m % 2 == 1 { -rhs } else { rhs };
            eq(&jacobi_at0(m, &a, &b), &rhs).map_err(|e| format!("m={m}: {e}"))?;
        }
        Ok(())
    }));
    jobs.push(single("C(l,m) = 2^m P_m^(l-m,-m)(0)", move || {
        for l in 0..=8i64 {
            for m in 0..=8u32 {
                let mi = i64::from(m);
                let rhs =
                    jacobi_at0(m, &p(l - mi), &p(-mi)).scale(&num_traits::pow(int(2), m as usize));
                eq(&binom(&p(l), m), &rhs).map_err(|e| format!("l={l} m={m}: {e}"))?;
            }
        }
        Ok(())
    }));
    jobs.push(single("(1+t)^a (1-t)^b generating function", move || {
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for m in 0..=(a + b) {
                    let mi = i64::from(m);
                    let rhs = jacobi_at0(m, &p(i64::from(a) - mi), &p(i64::from(b) - mi))
                        .scale(&num_traits::pow(int(2), m as usize));
                    eq(&ParamPoly::constant(gen_coeff(a, b, m)), &rhs)
                        .map_err(|e| format!("a={a} b={b} m={m}: {e}"))?;
                }
            }
        }
        Ok(())
    }));
    let top = bounds.max_k.max(bounds.max_l);
    for k in 1..=top {
        jobs.push(single(
            format!("p_c^(+-{k};{k}) = p_+-^({k},{k})"),
            move || {
                let ki = i64::from(k);
                eq(&pc(k, &p(ki)), &p_plus(k, k))?;
                eq(&pc(k, &p(-ki)), &p_minus(k, k))?;
                eq(
                    &sol_generator(&FamilyTag::Bplus { k, l: k }).map_err(err)?,
                    &sol_generator(&FamilyTag::C { k, s: p(ki) }).map_err(err)?,
                )?;
                eq(
                    &sol_generator(&FamilyTag::Bminus { k, l: k }).map_err(err)?,
                    &sol_generator(&FamilyTag::C { k, s: p(-ki) }).map_err(err)?,
                )
            },
        ));
    }
    for tag in tags_up_to(bounds.max_k, bounds.max_l) {
        jobs.push(single(
            format!("Jacobi form of the generator: {tag}"),
            move || eq(&p_family(&tag), &p_family_jacobi(&tag)),
        ));
    }
    jobs.push(single("Krawtchouk forms of p_c", move || {
        for k in 0..=bounds.max_k {
            for l in 0..=bounds.max_l {
                let (ki, li) = (i64::from(k), i64::from(l));
                eq(&pc(k, &p(ki - 2 * li)), &krawtchouk_form1(k, l))
                    .map_err(|e| format!("first form, k={k} l={l}: {e}"))?;
                eq(&pc(l, &p(2 * ki - li)), &krawtchouk_form2(k, l))
                    .map_err(|e| format!("second form, k={k} l={l}: {e}"))?;
            }
        }
        Ok(())
    }));
    jobs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn branch_points_cover_both_outcomes() {
        let pts = branch_points(1, 2);
        assert!(pts.iter().any(|(_, g)| g.is_some()));
        assert!(pts.iter().any(|(_, g)| g.is_none()));
    }

    #[test]
    fn small_special_suite_passes() {
        let checks = run(
            Suite::Special,
            Bounds { max_k: 2, max_l: 2 },
            Exec::Sequential,
        );
        for c in &checks {
            assert!(c.passed, "{c}");
        }
    }
}
