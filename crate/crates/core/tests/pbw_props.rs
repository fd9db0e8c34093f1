mod common;

use common::{nminus, uenv};
use fmethod_core::fmethod::{MChar, M_ELEMENTS};
use fmethod_core::pbw::{
    adjoint_sign, bracket, dlhat_realize, dr_realize, fc_forward, fc_inverse, is_singular,
    symmetrize, verma_act, Gen, PbwError, UEnv, VermaVector,
};
use fmethod_core::ring::{int, rat, ParamPoly};
use fmethod_core::weyl::{term3, Space, WeylElement};
use proptest::prelude::*;

fn monomials(max_deg: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=max_deg {
        for b in 0..=max_deg - a {
            for c in 0..=max_deg - a - b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn nm(r: [u32; 3]) -> UEnv {
    UEnv::nminus(r[0] as u8, r[1] as u8, r[2] as u8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pbw_mul_is_associative(a in uenv(5), b in uenv(5), c in uenv(5)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn nminus_is_closed(a in nminus(4), b in nminus(4)) {
        prop_assert!(a.mul(&b).is_nminus_only());
    }

    #[test]
    fn realizations_are_homomorphisms(a in nminus(3), b in nminus(3)) {
        let ab = a.mul(&b);
        prop_assert_eq!(
            dr_realize(&ab).unwrap(),
            dr_realize(&a).unwrap().mul(&dr_realize(&b).unwrap()).unwrap()
        );
        prop_assert_eq!(
            dlhat_realize(&ab).unwrap(),
            dlhat_realize(&a).unwrap().mul(&dlhat_realize(&b).unwrap()).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fourier_side_matches_truncated_symbol(u in nminus(5)) {
        let lhs = fc_forward(&u).unwrap();
        let rhs = dr_realize(&u).unwrap().symb0().unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn pinned_brackets() {
    let only = |g: Gen, c: i64| {
        let mut v = [0i64; 8];
        v[g.index()] = c;
        v
    };
    assert_eq!(bracket(Gen::N1m, Gen::N2m), only(Gen::N3m, -1));
    assert_eq!(bracket(Gen::N1p, Gen::N2p), only(Gen::N3p, 1));
    assert_eq!(bracket(Gen::N1p, Gen::N1m), only(Gen::H1, 1));
    assert_eq!(bracket(Gen::N2p, Gen::N2m), only(Gen::H2, 1));
    assert_eq!(bracket(Gen::H1, Gen::N1m), only(Gen::N1m, -2));
    for a in Gen::ALL {
        for b in Gen::ALL {
            let ab = bracket(a, b);
            let ba = bracket(b, a);
            assert!(ab.iter().zip(&ba).all(|(x, y)| x == &-y), "{a:?} {b:?}");
        }
    }
}

#[test]
fn truncated_realization_of_symmetrized_monomials() {
    for r in monomials(6) {
        let lhs = dr_realize(&symmetrize(r[0], r[1], r[2]).unwrap())
            .unwrap()
            .trun0();
        assert_eq!(lhs, term3(Space::X, [0; 3], r, int(1)), "r={r:?}");
    }
}

#[test]
fn fourier_isomorphism_round_trips() {
    for r in monomials(8) {
        let u = nm(r);
        assert_eq!(fc_inverse(&fc_forward(&u).unwrap()).unwrap(), u, "r={r:?}");
        let p = term3(Space::Zeta, r, [0; 3], int(1));
        assert_eq!(fc_forward(&fc_inverse(&p).unwrap()).unwrap(), p, "r={r:?}");
        assert_eq!(
            fc_forward(&symmetrize(r[0], r[1], r[2]).unwrap()).unwrap(),
            p
        );
    }
    assert_eq!(
        fc_forward(&UEnv::one()).unwrap(),
        WeylElement::one(3, Space::Zeta)
    );
}

#[test]
fn characters_of_nilradical_monomials() {
    for r in monomials(4) {
        let chi = MChar::new(
            if (r[1] + r[2]) % 2 == 0 { 1 } else { -1 },
            if (r[0] + r[2]) % 2 == 0 { 1 } else { -1 },
        );
        for m in M_ELEMENTS {
            let sign: i64 = [Gen::N1m, Gen::N2m, Gen::N3m]
                .iter()
                .zip(r)
                .map(|(&g, e)| adjoint_sign(g, m).pow(e))
                .product();
            assert_eq!(sign, chi.eval(m), "r={r:?} m={m:?}");
        }
    }
}

#[test]
fn product_examples() {
    let n = |g| UEnv::gen(g);
    assert_eq!(
        n(Gen::N2m).mul(&n(Gen::N1m)),
        UEnv::nminus(1, 1, 0).add(&UEnv::nminus(0, 0, 1))
    );
    assert_eq!(
        UEnv::nminus(3, 0, 0).mul(&UEnv::nminus(2, 0, 0)),
        UEnv::nminus(5, 0, 0)
    );
    let mut e = [0u8; 8];
    e[0] = 1;
    e[5] = 1;
    let want = UEnv::term(e, ParamPoly::one()).add(&n(Gen::H1));
    assert_eq!(n(Gen::N1p).mul(&n(Gen::N1m)), want);
}

#[test]
fn symmetrization_examples() {
    let want = UEnv::nminus(1, 1, 0).add(&UEnv::nminus(0, 0, 1).scale_rational(&rat(1, 2)));
    assert_eq!(symmetrize(1, 1, 0).unwrap(), want);
    assert_eq!(symmetrize(4, 0, 0).unwrap(), UEnv::nminus(4, 0, 0));
    assert!(matches!(
        symmetrize(10, 5, 0),
        Err(PbwError::DegreeLimitExceeded { .. })
    ));
}

#[test]
fn verma_examples() {
    let mu = (ParamPoly::l1(), ParamPoly::l2());
    let hw = VermaVector::new(UEnv::one(), mu.clone(), MChar::PLUS_PLUS).unwrap();
    assert!(verma_act(&UEnv::gen(Gen::N1p), &hw).body.is_zero());
    assert!(is_singular(&hw));
    let v = VermaVector::new(UEnv::nminus(1, 0, 0), mu.clone(), MChar::PLUS_PLUS).unwrap();
    let got = verma_act(&UEnv::gen(Gen::H1), &v).body;
    assert_eq!(
        got,
        UEnv::nminus(1, 0, 0).scale(&(ParamPoly::l1() - ParamPoly::from_int(2)))
    );
    for k in 1..=5u8 {
        let v = VermaVector::new(UEnv::nminus(k, 0, 0), mu.clone(), MChar::PLUS_PLUS).unwrap();
        let ki = i64::from(k);
        let coeff = (ParamPoly::l1() - ParamPoly::from_int(ki - 1)).scale(&int(ki));
        let want = UEnv::nminus(k - 1, 0, 0).scale(&coeff);
        assert_eq!(verma_act(&UEnv::gen(Gen::N1p), &v).body, want);
        let at = (ParamPoly::from_int(ki - 1), ParamPoly::l2());
        let sing = VermaVector::new(UEnv::nminus(k, 0, 0), at, MChar::PLUS_PLUS).unwrap();
        assert!(is_singular(&sing));
        let generic = (ParamPoly::constant(rat(1, 3)), ParamPoly::l2());
        let not = VermaVector::new(UEnv::nminus(k, 0, 0), generic, MChar::PLUS_PLUS).unwrap();
        assert!(!is_singular(&not));
    }
    assert!(VermaVector::new(UEnv::gen(Gen::H1), mu, MChar::PLUS_PLUS).is_err());
}
