use arith::{ExtField, Field, PrimeField};
use groebner::{
    eliminate, hilbert, hilbert_function, saturate, saturate_poly, Ideal, MonomialOrder,
};
use multipoly::cubics::{build_fp, p5_ring};
use multipoly::{parse_poly, Monomial, Polynomial, Ring, RingRef};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn gf3xy() -> RingRef<PrimeField> {
    Ring::standard(PrimeField::new(3).unwrap(), &["x0", "x1"])
}

fn ideal_from<F: Field>(ring: &RingRef<F>, texts: &[&str]) -> Ideal<F> {
    let gens = texts.iter().map(|t| parse_poly(t, ring).unwrap()).collect();
    Ideal::new(ring, gens)
}

#[test]
fn already_reduced_pair_is_its_own_basis() {
    let ring = gf3xy();
    let ideal = ideal_from(&ring, &["x0^2", "x0*x1"]);
    let gb = ideal.gb_grevlex();
    let lts: Vec<String> = gb
        .elements()
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(lts, vec!["x0*x1", "x0^2"]);
    assert!(gb.verify_buchberger_criterion());
}

#[test]
fn unit_ideal_basis_is_one() {
    let ring = gf3xy();
    let ideal = ideal_from(&ring, &["2"]);
    let gb = ideal.gb_grevlex();
    assert!(gb.is_unit());
    assert_eq!(gb.elements()[0], Polynomial::one(&ring));
}

#[test]
fn zero_ideal_has_empty_basis() {
    let ring = gf3xy();
    let ideal = Ideal::new(&ring, vec![]);
    assert!(ideal.gb_grevlex().is_empty());
}

#[test]
fn linear_plus_square_stays_put() {
    let ring = gf3xy();
    let ideal = ideal_from(&ring, &["x0+x1", "x1^2"]);
    let gb = ideal.gb_grevlex();
    assert_eq!(gb.elements().len(), 2);
    assert!(gb.contains(&parse_poly("x0+x1", &ring).unwrap()));
    assert!(gb.contains(&parse_poly("x1^2", &ring).unwrap()));
    assert!(gb.verify_buchberger_criterion());
    // x1^3 = x1 * x1^2 reduces to zero
    assert!(gb.contains(&parse_poly("x1^3", &ring).unwrap()));
}

#[test]
fn normal_form_examples() {
    let ring = gf3xy();
    let ideal = ideal_from(&ring, &["x0^2-x1"]);
    let nf = ideal.normal_form(&parse_poly("x0^2", &ring).unwrap());
    assert_eq!(nf, parse_poly("x1", &ring).unwrap());
    for g in ideal.gens() {
        assert!(ideal.normal_form(g).is_zero());
    }
    let principal = ideal_from(&ring, &["x0"]);
    let y = parse_poly("x1", &ring).unwrap();
    assert_eq!(principal.normal_form(&y), y);
}

#[test]
fn saturation_examples() {
    let ring = gf3xy();
    // (x*y) : x^infinity = (y), homogeneous route
    let i = ideal_from(&ring, &["x0*x1"]);
    let x = parse_poly("x0", &ring).unwrap();
    let s = saturate_poly(&i, &x);
    assert!(s.ideal_eq(&ideal_from(&ring, &["x1"])));
    // saturation contains the ideal and is idempotent
    assert!(s.contains_ideal(&i));
    assert!(saturate_poly(&s, &x).ideal_eq(&s));
    // unit multiplier: I : 1^infinity = I
    assert!(saturate_poly(&i, &Polynomial::one(&ring)).ideal_eq(&i));

    // non-homogeneous route through the t*g - 1 trick
    let j = ideal_from(&ring, &["x0*x1-x0"]); // x*(y-1)
    let s2 = saturate_poly(&j, &x);
    assert!(s2.ideal_eq(&ideal_from(&ring, &["x1-1"])));

    // saturation by the irrelevant ideal strips the embedded point:
    // (x^2, xy) : (x,y)^infinity = (x)
    let emb = ideal_from(&ring, &["x0^2", "x0*x1"]);
    let irr = ideal_from(&ring, &["x0", "x1"]);
    let s3 = saturate(&emb, &irr);
    assert!(s3.ideal_eq(&ideal_from(&ring, &["x0"])));
}

#[test]
fn saturation_by_ideal_needs_intersection() {
    // (xy) : (x, y)^inf = (xy) even though the componentwise saturations
    // are (y) and (x); this exercises the intersection fallback.
    let ring = gf3xy();
    let i = ideal_from(&ring, &["x0*x1"]);
    let irr = ideal_from(&ring, &["x0", "x1"]);
    assert!(saturate(&i, &irr).ideal_eq(&i));
}

#[test]
fn elimination_examples() {
    let ring = gf3xy();
    // eliminate y from (y - x^2, y - 1): substitute y = 1
    let i = ideal_from(&ring, &["x1-x0^2", "x1-1"]);
    let e = eliminate(&i, &[1]);
    assert_eq!(e.ring().nvars(), 1);
    let sub = e.ring().clone();
    assert!(e.ideal_eq(&ideal_from(&sub, &["x0^2-1"])));
    // eliminating nothing returns the same ideal
    let e0 = eliminate(&i, &[]);
    assert!(e0.ideal_eq(&i));
}

#[test]
fn complete_intersection_of_two_cubics() {
    let f9 = ExtField::gf9();
    let ring = p5_ring(f9.clone());
    let a = f9.generator().unwrap();
    let p = [f9.one(), f9.add(&a, &f9.one()), f9.neg(&a), f9.neg(&a)];
    let (fp, sfp) = build_fp(&ring, &p).unwrap();
    let iy = Ideal::new(&ring, vec![fp, sfp]);
    let h = hilbert(&iy).unwrap();
    assert_eq!(h.dimension, 3, "two cubics cut P^5 down to a threefold");
    assert_eq!(h.degree, 9, "Bezout: 3*3");
    assert_eq!(hilbert_function(&iy, 1), 6);
    assert_eq!(hilbert_function(&iy, 3), 54);
}

// --- randomized property suites ---

fn random_monomial(rng: &mut StdRng, nvars: usize, max_exp: u16) -> Monomial {
    Monomial((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

fn random_poly<F: Field>(
    ring: &RingRef<F>,
    rng: &mut StdRng,
    terms: usize,
    max_exp: u16,
) -> Polynomial<F> {
    let t = (0..terms)
        .map(|_| {
            (
                random_monomial(rng, ring.nvars(), max_exp),
                ring.field.from_i64(rng.gen_range(-10..10)),
            )
        })
        .collect();
    Polynomial::from_terms(ring, t)
}

#[test]
fn gb_contract_on_random_ideals() {
    let ring3 = Ring::standard(PrimeField::new(3).unwrap(), &["x0", "x1", "x2"]);
    let ring9 = Ring::standard(ExtField::gf9(), &["x0", "x1", "x2"]);
    let mut rng = StdRng::seed_from_u64(2024);
    for case in 0..120 {
        if case % 2 == 0 {
            let gens: Vec<_> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let t = rng.gen_range(1..4);
                    random_poly(&ring3, &mut rng, t, 3)
                })
                .collect();
            let ideal = Ideal::new(&ring3, gens);
            let gb = ideal.gb_grevlex();
            assert!(gb.verify_buchberger_criterion());
            for g in ideal.gens() {
                assert!(gb.contains(g));
            }
            let f = random_poly(&ring3, &mut rng, 4, 3);
            let g = random_poly(&ring3, &mut rng, 4, 3);
            let nf = gb.normal_form(&f);
            assert_eq!(gb.normal_form(&nf), nf, "normal form is idempotent");
            assert_eq!(
                gb.normal_form(&f.add(&g)),
                gb.normal_form(&gb.normal_form(&f).add(&gb.normal_form(&g)))
            );
        } else {
            let gens: Vec<_> = (0..rng.gen_range(1..3))
                .map(|_| {
                    let t = rng.gen_range(1..4);
                    random_poly(&ring9, &mut rng, t, 3)
                })
                .collect();
            let ideal = Ideal::new(&ring9, gens);
            let gb = ideal.gb_grevlex();
            assert!(gb.verify_buchberger_criterion());
            let f = random_poly(&ring9, &mut rng, 4, 3);
            let nf = gb.normal_form(&f);
            assert_eq!(gb.normal_form(&nf), nf);
        }
    }
}

#[test]
fn hilbert_function_matches_enumeration_oracle() {
    // independent oracle: enumerate all monomials of degree d and count the
    // ones no generator divides
    fn count_standard(gens: &[Monomial], nvars: usize, d: u32) -> u64 {
        fn rec(gens: &[Monomial], m: &mut Vec<u16>, var: usize, left: u32, n: usize, acc: &mut u64) {
            if var == n - 1 {
                m[var] = left as u16;
                let mono = Monomial::from_exponents(m);
                if !gens.iter().any(|g| g.divides(&mono)) {
                    *acc += 1;
                }
                m[var] = 0;
                return;
            }
            for e in 0..=left {
                m[var] = e as u16;
                rec(gens, m, var + 1, left - e, n, acc);
            }
            m[var] = 0;
        }
        let mut acc = 0;
        rec(gens, &mut vec![0; nvars], 0, d, nvars, &mut acc);
        acc
    }

    let ring = Ring::standard(PrimeField::new(3).unwrap(), &["x0", "x1", "x2", "x3"]);
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..120 {
        let gens: Vec<Monomial> = (0..rng.gen_range(1..5))
            .map(|_| random_monomial(&mut rng, 4, 3))
            .filter(|m| !m.is_one())
            .collect();
        let polys: Vec<Polynomial<PrimeField>> = gens
            .iter()
            .map(|m| Polynomial::from_term(&ring, m.clone(), 1))
            .collect();
        let ideal = Ideal::new(&ring, polys);
        for d in 0..6 {
            assert_eq!(
                hilbert_function(&ideal, d),
                count_standard(&gens, 4, d),
                "gens {:?} degree {}",
                gens,
                d
            );
        }
    }
}

#[test]
fn hilbert_data_invariant_under_coordinate_change() {
    let f9 = ExtField::gf9();
    let ring = Ring::standard(f9.clone(), &["x0", "x1", "x2"]);
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let gens: Vec<Polynomial<ExtField>> = (0..rng.gen_range(1..3))
            .map(|_| {
                // random homogeneous polynomial of small degree
                let d = rng.gen_range(1..4);
                let mut terms = vec![];
                for _ in 0..rng.gen_range(1..5) {
                    let mut exps = vec![0u16; 3];
                    for _ in 0..d {
                        exps[rng.gen_range(0..3)] += 1;
                    }
                    terms.push((
                        Monomial::from_exponents(&exps),
                        f9.from_i64(rng.gen_range(-4..5)),
                    ));
                }
                Polynomial::from_terms(&ring, terms)
            })
            .filter(|p: &Polynomial<ExtField>| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(&ring, gens.clone());
        let h1 = hilbert(&ideal).unwrap();
        // random invertible change of coordinates
        let action = loop {
            let m: Vec<Vec<_>> = (0..3)
                .map(|_| (0..3).map(|_| f9.from_i64(rng.gen_range(0..9))).collect())
                .collect();
            if let Ok(a) = multipoly::LinearAction::new(&ring, m, None) {
                break a;
            }
        };
        let moved: Vec<Polynomial<ExtField>> = gens
            .iter()
            .map(|g| multipoly::substitute(g, &action))
            .collect();
        let h2 = hilbert(&Ideal::new(&ring, moved)).unwrap();
        assert_eq!(h1.dimension, h2.dimension);
        assert_eq!(h1.degree, h2.degree);
        assert_eq!(h1.hilbert_polynomial, h2.hilbert_polynomial);
    }
}

#[test]
fn elimination_order_respects_blocks() {
    // GB under Elim{1} of an ideal where t must be eliminated
    let ring = Ring::standard(PrimeField::new(3).unwrap(), &["t0", "x0", "x1"]);
    let i = ideal_from(&ring, &["t0*x0-1", "x0*x1"]);
    let gb = i.gb(MonomialOrder::Elim { front: 1 });
    // x1 = (t x) * x1 * x ... in the localization x is invertible so x1 is in the ideal
    let t_free: Vec<_> = gb
        .elements()
        .iter()
        .filter(|e| e.avoids_vars(&[0]))
        .collect();
    assert!(!t_free.is_empty());
    assert!(t_free
        .iter()
        .any(|e| **e == parse_poly("x1", &ring).unwrap()));
}
