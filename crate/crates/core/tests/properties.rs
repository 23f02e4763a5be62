use num_rational::BigRational;
use proptest::prelude::*;
use unproj_core::lattice::{elementary_transformation, hirzebruch, unprojection_chain};
use unproj_core::monomial::monomials_of_degree;
use unproj_core::unprojection::check_normalization;
use unproj_core::*;

fn small_ring() -> RingRef {
    Ring::new(
        [("x", 1), ("y", 1), ("T", 2)],
        MonomialOrder::WeightedGrevlex,
        Field::Rational,
    )
    .unwrap()
}

fn poly_strategy(ring: RingRef) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (-5i64..=5, 1i64..=3, prop::collection::vec(0u32..3, n)),
        0..5,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms.into_iter().filter(|t| t.0 != 0).map(|(num, den, e)| {
                (
                    Scalar::Rational(BigRational::new(num.into(), den.into())),
                    Monomial::new(e),
                )
            }),
        )
    })
}

fn homogeneous_strategy(ring: RingRef, d: u64) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(&ring.weights(), d);
    prop::collection::vec(-4i64..=4, monos.len()).prop_map(move |cs| {
        Polynomial::from_terms(
            &ring,
            cs.into_iter()
                .zip(&monos)
                .filter(|(c, _)| *c != 0)
                .map(|(c, w)| (ring.field().from_i64(c), w.clone())),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly_strategy(small_ring()), q in poly_strategy(small_ring()), r in poly_strategy(small_ring())) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &p), &Polynomial::zero(&small_ring()));
    }

    #[test]
    fn print_parse_round_trip(p in poly_strategy(small_ring())) {
        let text = p.to_string();
        let back = parse_polynomial(&small_ring(), &text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn degree_is_additive(p in homogeneous_strategy(small_ring(), 2), q in homogeneous_strategy(small_ring(), 3)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).homogeneous_degree().unwrap(), 5);
    }

    #[test]
    fn g_is_a_homomorphism(
        a in homogeneous_strategy(build_scroll(1, 2).unwrap().ring().clone(), 2),
        b in homogeneous_strategy(build_scroll(1, 2).unwrap().ring().clone(), 1),
    ) {
        let s = build_scroll(1, 2).unwrap();
        let g = s.g_map().unwrap();
        let (a, b) = (a.reinterpret(s.ring()).unwrap(), b.reinterpret(s.ring()).unwrap());
        prop_assert_eq!(g.apply(&(&a * &b)).unwrap(), &g.apply(&a).unwrap() * &g.apply(&b).unwrap());
        prop_assert_eq!(g.apply(&(&a + &a)).unwrap(), &g.apply(&a).unwrap() + &g.apply(&a).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        p in homogeneous_strategy(build_scroll(2, 2).unwrap().ring().clone(), 2),
        q in homogeneous_strategy(build_scroll(2, 2).unwrap().ring().clone(), 2),
    ) {
        let s = build_scroll(2, 2).unwrap();
        let p = p.reinterpret(s.ring()).unwrap();
        let q = q.reinterpret(s.ring()).unwrap();
        let nf = s.q().normal_form(&p).unwrap();
        prop_assert_eq!(s.q().normal_form(&nf).unwrap(), nf.clone());
        let sum = s.q().normal_form(&(&p + &q)).unwrap();
        prop_assert_eq!(sum, &nf + &s.q().normal_form(&q).unwrap());
        prop_assert!(s.q().contains(&(&p - &nf)).unwrap());
    }

    #[test]
    fn groebner_is_order_independent(a in homogeneous_strategy(small_ring(), 2), b in homogeneous_strategy(small_ring(), 2)) {
        let ring = small_ring();
        let ideal = Ideal::new(&ring, [a, b]).unwrap();
        let lex = ideal.groebner_with(MonomialOrder::Lex, &Budget::default()).unwrap();
        let back = Ideal::new(&ring, lex.basis().iter().map(|g| g.reinterpret(&ring).unwrap())).unwrap();
        prop_assert!(back.equals(&ideal).unwrap());
    }

    #[test]
    fn elimination_spot_check(a in homogeneous_strategy(small_ring(), 2), b in homogeneous_strategy(small_ring(), 2)) {
        let ring = small_ring();
        let ideal = Ideal::new(&ring, [a, b]).unwrap();
        let e = ideal.eliminate_names(&["x"]).unwrap();
        prop_assert!(e.ring().var_index("x").is_none());
        for g in e.generators() {
            prop_assert!(ideal.contains(&g.embed(&ring).unwrap()).unwrap());
        }
    }

    #[test]
    fn rewriting_stays_in_q1(exps in prop::collection::vec(0u32..3, 7)) {
        let s = build_scroll(2, 3).unwrap();
        let w = Monomial::new(exps);
        let q1 = s.q1().unwrap();
        let one = s.field().one();
        let wp = Polynomial::monomial(s.ring(), one.clone(), w.clone());
        match s.b_normal_form(&w) {
            None => prop_assert!(q1.contains(&wp).unwrap()),
            Some(out) => {
                prop_assert!(s.in_b(&out));
                let diff = &wp - &Polynomial::monomial(s.ring(), one, out);
                prop_assert!(q1.contains(&diff).unwrap());
            }
        }
    }

    #[test]
    fn normalization_invariance(c in prop::collection::vec(-3i64..=3, 3), i in prop::collection::vec(-3i64..=3, 3)) {
        let s = build_scroll(1, 2).unwrap();
        let fp = format!("({})*x01^2 + ({})*x01*x12 + ({})*x12^2", c[0], c[1], 1 + c[2].abs());
        let ip = format!("({})*x00*x12 + ({})*x10*x11 + ({})*x11^2", i[0], i[1], i[2]);
        let f = parse_polynomial(s.ring(), &format!("{fp} + {ip}")).unwrap();
        prop_assert!(check_normalization(&s, &f).unwrap());
    }

    #[test]
    fn classification_is_total(a in -4i64..=4, b in -4i64..=4) {
        prop_assume!(a != 0 || b != 0);
        let s = build_scroll(1, 2).unwrap();
        let c = classify_elementary(&s, &BigRational::from_integer(a.into()), &BigRational::from_integer(b.into())).unwrap();
        prop_assert!(c.verified());
        prop_assert_eq!(c.unprojection.hilbert_table(0).unwrap().values(), vec![1]);
    }

    #[test]
    fn intersection_is_symmetric_bilinear(d in 0i64..5, a in prop::collection::vec(-5i64..5, 4), b in prop::collection::vec(-5i64..5, 4), c in prop::collection::vec(-5i64..5, 4)) {
        let mut model = hirzebruch(d).unwrap();
        model.blow_up(None, "E1").unwrap();
        model.blow_up(Some(0), "E2").unwrap();
        let (a, b, c) = (DivClass(a), DivClass(b), DivClass(c));
        prop_assert_eq!(model.intersect(&a, &b).unwrap(), model.intersect(&b, &a).unwrap());
        prop_assert_eq!(
            model.intersect(&a.add(&b.scale(3)), &c).unwrap(),
            model.intersect(&a, &c).unwrap() + 3 * model.intersect(&b, &c).unwrap()
        );
    }

    #[test]
    fn elementary_round_trip(d in 1i64..8) {
        let up = elementary_transformation(d, true).unwrap().d_prime;
        prop_assert_eq!(up, d + 1);
        prop_assert_eq!(elementary_transformation(up, false).unwrap().d_prime, d);
    }

    #[test]
    fn chain_counts(ks in prop::collection::vec(1u32..4, 1..4)) {
        let pts: Vec<ChainPoint> = ks.iter().map(|&k| ChainPoint { multiplicity: k, on_delta0: false }).collect();
        let r = unprojection_chain(&hirzebruch(1).unwrap(), &pts).unwrap();
        let k: u32 = ks.iter().sum();
        prop_assert_eq!(r.gamma_hat_sq, -(k as i64));
        prop_assert_eq!(r.blow_ups as u32, k);
        let a_type = r.singularities.iter().filter(|s| matches!(s.kind, SingularityKind::DuValA(_))).count();
        prop_assert_eq!(a_type, ks.iter().filter(|&&k| k >= 2).count());
        prop_assert!(r.configuration_ok);
    }
}
