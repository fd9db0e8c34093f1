mod common;

use common::param_poly;
use fmethod_core::ring::{parse_rational, rat, rational_arith, ParamPoly, RationalOp, RingError};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_axioms(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ParamPoly::one(), a.clone());
    }

    #[test]
    fn eval_is_a_ring_homomorphism(
        a in param_poly(),
        b in param_poly(),
        x in (-5i64..=5, 1i64..=3),
        y in (-5i64..=5, 1i64..=3),
    ) {
        let assign = [("s", rat(x.0, x.1)), ("l2", rat(y.0, y.1))];
        let ev = |p: &ParamPoly| p.eval(&assign).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }

    #[test]
    fn display_parses_back(a in param_poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<ParamPoly>().unwrap(), a);
    }
}

#[test]
fn rational_examples() {
    let add = rational_arith(&rat(1, 2), &rat(1, 3), RationalOp::Add).unwrap();
    assert_eq!(add, rat(5, 6));
    assert_eq!(rat(2, 4), rat(1, 2));
    assert_eq!(rat(-1, -2), rat(1, 2));
    assert_eq!(
        rational_arith(&rat(1, 2), &rat(0, 1), RationalOp::Div),
        Err(RingError::DivisionByZero)
    );
    assert_eq!(parse_rational("-3/6").unwrap().to_string(), "-1/2");
}

#[test]
fn polynomial_examples() {
    let p = |t: &str| t.parse::<ParamPoly>().unwrap();
    assert_eq!(&p("s + 1") * &p("s - 1"), p("s^2 - 1"));
    assert!((p("s^2 - 1") - p("s^2 - 1")).is_zero());
    let half_s = p("s").scale(&rat(1, 2));
    assert_eq!(&half_s * &half_s, p("1/4*s^2"));
    assert_eq!(p("s^2 - 2").eval(&[("s", rat(3, 1))]).unwrap(), p("7"));
    assert!(p("s*l1").eval(&[("s", rat(0, 1))]).unwrap().is_zero());
    assert_eq!(
        p("s + l1").eval(&[("l1", rat(1, 2))]).unwrap(),
        p("s + 1/2")
    );
    assert!(matches!(
        p("s").eval(&[("q", rat(1, 1))]),
        Err(RingError::UnknownParameter(_))
    ));
}
