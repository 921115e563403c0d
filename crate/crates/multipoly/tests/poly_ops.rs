use arith::{ExtField, Field, GaussianRationals, PrimeField};
use multipoly::cubics::{
    build_fp, mu3_weights, mu6_weights, p5_ring, shift_by, sigma, spanning_cubics, tau_cubed,
    uniform_weight,
};
use multipoly::{parse_poly, substitute, LinearAction, Polynomial, Ring};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn parse_the_spanning_cubics() {
    let ring = p5_ring(ExtField::gf9());
    let [f0, _, _, f3] = spanning_cubics(&ring);
    assert_eq!(parse_poly("x0^3+x2^3+x4^3", &ring).unwrap(), f0);
    assert_eq!(f0.num_terms(), 3);
    assert_eq!(parse_poly("x0*x2*x4", &ring).unwrap(), f3);
    assert_eq!(f3.num_terms(), 1);
    assert!(parse_poly("0", &ring).unwrap().is_zero());
}

#[test]
fn parse_error_positions() {
    let ring = p5_ring(PrimeField::new(3).unwrap());
    let err = parse_poly("x0 + z3", &ring).unwrap_err();
    assert_eq!(err.pos, 5);
    assert!(err.msg.contains("z3"));
    assert!(parse_poly("x0 + ", &ring).is_err());
    // 1/3 is not a constant of GF(3)
    assert!(parse_poly("1/3*x0", &ring).is_err());
}

#[test]
fn sigma_shifts_the_triple_product() {
    let ring = p5_ring(ExtField::gf9());
    let [_, _, _, f3] = spanning_cubics(&ring);
    let shifted = substitute(&f3, &sigma(&ring));
    assert_eq!(shifted, parse_poly("x1*x3*x5", &ring).unwrap());
}

#[test]
fn identity_action_fixes_everything() {
    let ring = p5_ring(ExtField::gf9());
    for f in spanning_cubics(&ring) {
        assert_eq!(substitute(&f, &LinearAction::identity(&ring)), f);
    }
}

#[test]
fn tau_cubed_fixes_even_index_cubic() {
    let ring = p5_ring(ExtField::gf9());
    let [f0, ..] = spanning_cubics(&ring);
    assert_eq!(substitute(&f0, &tau_cubed(&ring)), f0);
}

#[test]
fn cubics_invariant_under_shift_square_and_weights() {
    let ring = p5_ring(ExtField::gf9());
    let s2 = shift_by(&ring, 2);
    for f in spanning_cubics(&ring) {
        assert_eq!(substitute(&f, &s2), f);
        assert_eq!(substitute(&f, &tau_cubed(&ring)), f);
        assert_eq!(uniform_weight(&f, &mu3_weights(), 3), Some(0));
        assert_eq!(uniform_weight(&f, &mu6_weights(), 6), Some(0));
    }
}

#[test]
fn pluecker_relation_gf9_and_qi() {
    fn check<F: Field>(field: F) {
        let ring = p5_ring(field);
        let [f0, f1, f2, f3] = spanning_cubics(&ring);
        let s = sigma(&ring);
        let sf: Vec<Polynomial<F>> = [&f0, &f1, &f2, &f3]
            .iter()
            .map(|f| substitute(f, &s))
            .collect();
        let lhs = f0
            .mul(&sf[3])
            .sub(&f3.mul(&sf[0]))
            .sub(&f2.mul(&sf[1]))
            .add(&f1.mul(&sf[2]));
        assert!(lhs.is_zero(), "relation must vanish identically");
    }
    check(ExtField::gf9());
    check(GaussianRationals::new());
}

#[test]
fn build_fp_examples() {
    let f9 = ExtField::gf9();
    let ring = p5_ring(f9.clone());
    let a = f9.generator().unwrap();
    // p = (1, a+1, -a, -a): contributions 3 + 3 + 3 + 1 monomials, no overlap
    let p = [
        f9.one(),
        f9.add(&a, &f9.one()),
        f9.neg(&a),
        f9.neg(&a),
    ];
    let (fp, sfp) = build_fp(&ring, &p).unwrap();
    assert_eq!(fp.num_terms(), 10);
    assert!(fp.is_homogeneous());
    assert_eq!(fp.total_degree(), Some(3));
    assert_eq!(sfp.total_degree(), Some(3));

    // p = (1,0,0,0) gives back f0
    let p0 = [f9.one(), f9.zero(), f9.zero(), f9.zero()];
    let (fp0, _) = build_fp(&ring, &p0).unwrap();
    assert_eq!(fp0, spanning_cubics(&ring)[0]);

    let zero = [f9.zero(), f9.zero(), f9.zero(), f9.zero()];
    assert!(build_fp(&ring, &zero).is_err());

    // characteristic-zero parameter point
    let qi = GaussianRationals::new();
    let ring0 = p5_ring(qi);
    let i = GaussianRationals::new().i();
    let one = GaussianRationals::new().one();
    let omi = GaussianRationals::new().sub(&one, &i);
    let (fp, _) = build_fp(&ring0, &[one, i, omi.clone(), omi]).unwrap();
    assert_eq!(fp.num_terms(), 10);
}

#[test]
fn coefficient_extraction() {
    let ring = Ring::standard(PrimeField::new(3).unwrap(), &["x0", "y0", "z0"]);
    let cubic = parse_poly("y0^2*z0-x0^3-x0^2*z0-2z0^3", &ring).unwrap();
    let square = cubic.mul(&cubic);
    let target = multipoly::Monomial::from_exponents(&[2, 2, 2]);
    assert_eq!(square.coefficient_of(&target), 1);
    let zero = Polynomial::<PrimeField>::zero(&ring);
    assert_eq!(zero.coefficient_of(&target), 0);
}

fn random_poly<F: Field>(
    ring: &multipoly::RingRef<F>,
    rng: &mut StdRng,
    max_terms: usize,
    max_exp: u16,
) -> Polynomial<F> {
    let n = ring.nvars();
    let nterms = rng.gen_range(0..=max_terms);
    let mut terms = vec![];
    for _ in 0..nterms {
        let mono = multipoly::Monomial(
            (0..n).map(|_| rng.gen_range(0..=max_exp)).collect(),
        );
        let c = ring.field.from_i64(rng.gen_range(-40..40));
        terms.push((mono, c));
    }
    Polynomial::from_terms(ring, terms)
}

#[test]
fn print_parse_round_trip_is_identity() {
    let mut rng = StdRng::seed_from_u64(7);
    let gf9_ring = p5_ring(ExtField::gf9());
    let qi_ring = p5_ring(GaussianRationals::new());
    for case in 0..150 {
        if case % 2 == 0 {
            let f = random_poly(&gf9_ring, &mut rng, 8, 4);
            // also mix in generator coefficients
            let a = ExtField::gf9().generator().unwrap();
            let f = f.add(&random_poly(&gf9_ring, &mut rng, 4, 3).scale(&a));
            let text = f.to_string();
            let back = parse_poly(&text, &gf9_ring).unwrap();
            assert_eq!(back, f, "round trip failed for `{}`", text);
        } else {
            let f = random_poly(&qi_ring, &mut rng, 8, 4);
            let i = GaussianRationals::new().i();
            let f = f.add(&random_poly(&qi_ring, &mut rng, 4, 3).scale(&i));
            let text = f.to_string();
            let back = parse_poly(&text, &qi_ring).unwrap();
            assert_eq!(back, f, "round trip failed for `{}`", text);
        }
    }
}

#[test]
fn action_composition_matches_matrix_product() {
    let f9 = ExtField::gf9();
    let ring = p5_ring(f9.clone());
    let mut rng = StdRng::seed_from_u64(11);
    let mut random_action = |rng: &mut StdRng| loop {
        let n = ring.nvars();
        let matrix: Vec<Vec<_>> = (0..n)
            .map(|_| (0..n).map(|_| f9.from_i64(rng.gen_range(0..9))).collect())
            .collect();
        if let Ok(act) = LinearAction::new(&ring, matrix, None) {
            return act;
        }
    };
    for _ in 0..25 {
        let g = random_action(&mut rng);
        let h = random_action(&mut rng);
        let f = random_poly(&ring, &mut rng, 5, 2);
        assert_eq!(
            substitute(&substitute(&f, &g), &h),
            substitute(&f, &g.then(&h))
        );
    }
}

#[test]
fn multiplication_algebra_laws() {
    let mut rng = StdRng::seed_from_u64(23);
    let ring = p5_ring(ExtField::gf9());
    for _ in 0..100 {
        let f = random_poly(&ring, &mut rng, 5, 3);
        let g = random_poly(&ring, &mut rng, 5, 3);
        let h = random_poly(&ring, &mut rng, 5, 3);
        assert_eq!(f.mul(&g), g.mul(&f));
        assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }
}

#[test]
fn grading_is_additive_on_homogeneous_inputs() {
    let ring = p5_ring(GaussianRationals::new());
    let [f0, f1, ..] = spanning_cubics(&ring);
    let prod = f0.mul(&f1);
    assert_eq!(prod.multidegree(), Some(multipoly::multideg(&[6])));
}

#[test]
fn derivative_drops_cube_terms_in_char_3() {
    let ring = p5_ring(PrimeField::new(3).unwrap());
    let f = parse_poly("x0^3+x0*x1", &ring).unwrap();
    assert_eq!(f.derivative(0), parse_poly("x1", &ring).unwrap());
}
