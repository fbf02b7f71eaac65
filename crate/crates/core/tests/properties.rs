use lorentz_core::poly::ExponentVector;
use lorentz_core::schubert::demazure_pi;
use lorentz_core::{Polynomial, Rational};
use proptest::prelude::*;

fn poly(arity: usize, max_degree: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_degree, arity), -6i64..=6, 1i64..=4),
        0..6,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(arity);
        for (e, n, d) in terms {
            let e: Vec<u32> = e;
            let m = Polynomial::monomial(ExponentVector::new(e), Rational::new(n.into(), d.into()));
            p = &p + &m;
        }
        p
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn derivative_of_shifted_normalization(f in poly(3, 3), mu in prop::collection::vec(0u32..=3, 3)) {
        let mu = ExponentVector::new(mu);
        let lhs = f.mul_monomial(&mu).unwrap().normalize().partial_derivative_multi(&mu).unwrap();
        prop_assert_eq!(lhs, f.normalize());
    }

    #[test]
    fn normalize_is_linear(p in poly(3, 4), q in poly(3, 4), a in rational(), b in rational()) {
        let combo = &p.scale(&a) + &q.scale(&b);
        prop_assert_eq!(combo.normalize(), &p.normalize().scale(&a) + &q.normalize().scale(&b));
    }

    #[test]
    fn dualize_is_an_involution(p in poly(3, 3), extra in prop::collection::vec(0u32..=2, 3)) {
        let mu: Vec<u32> = (0..3).map(|i| p.degree_in(i) + extra[i]).collect();
        let mu = ExponentVector::new(mu);
        let once = p.dualize(&mu).unwrap();
        prop_assert_eq!(once.dualize(&mu).unwrap(), p);
    }

    #[test]
    fn components_sum_to_the_whole(p in poly(3, 5)) {
        let top = p.total_degree().unwrap_or(0);
        let mut sum = Polynomial::zero(3);
        for k in 0..=top {
            sum = &sum + &p.homogeneous_component(k);
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn isobaric_operator_is_idempotent(p in poly(3, 3), i in 0usize..2) {
        let once = demazure_pi(&p, i).unwrap();
        prop_assert_eq!(demazure_pi(&once, i).unwrap(), once);
    }

    #[test]
    fn print_parse_round_trip(p in poly(4, 4)) {
        let text = lorentz_core::poly::text::format_file(&p);
        prop_assert_eq!(lorentz_core::poly::text::parse_polynomial(&text).unwrap(), p);
    }

    #[test]
    fn multiplication_commutes_and_distributes(p in poly(2, 3), q in poly(2, 3), r in poly(2, 3)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }
}
