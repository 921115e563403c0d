use arith::{ExtField, Field, GaussianRationals};
use groebner::{hilbert, Ideal};
use multipoly::cubics::{build_fp, p5_ring, sigma, spanning_cubics};
use multipoly::{substitute, Polynomial};
use std::time::Instant;

#[test]
#[ignore]
fn probe_z_gf9() {
    let f9 = ExtField::gf9();
    let ring = p5_ring(f9.clone());
    let a = f9.generator().unwrap();
    let p = [f9.one(), f9.add(&a, &f9.one()), f9.neg(&a), f9.neg(&a)];
    let (fp, sfp) = build_fp(&ring, &p).unwrap();
    // jacobian 2x6: partials of fp, sfp
    let mut jac: Vec<Vec<Polynomial<ExtField>>> = vec![vec![], vec![]];
    for v in 0..6 {
        jac[0].push(fp.derivative(v));
        jac[1].push(sfp.derivative(v));
    }
    let mut gens = vec![fp.clone(), sfp.clone()];
    for i in 0..6 {
        for j in (i + 1)..6 {
            let m = jac[0][i].mul(&jac[1][j]).sub(&jac[0][j].mul(&jac[1][i]));
            gens.push(m);
        }
    }
    let t = Instant::now();
    let iz = Ideal::new(&ring, gens);
    let h = hilbert(&iz).unwrap();
    println!("Z over GF(9): dim {} length {} in {:?}", h.dimension, h.degree, t.elapsed());
}

#[test]
#[ignore]
fn probe_z_qi() {
    let qi = GaussianRationals::new();
    let ring = p5_ring(qi.clone());
    let i = qi.i();
    let one = qi.one();
    let omi = qi.sub(&one, &i);
    let p = [one.clone(), i.clone(), omi.clone(), omi.clone()];
    let (fp, sfp) = build_fp(&ring, &p).unwrap();
    let mut jac: Vec<Vec<Polynomial<GaussianRationals>>> = vec![vec![], vec![]];
    for v in 0..6 {
        jac[0].push(fp.derivative(v));
        jac[1].push(sfp.derivative(v));
    }
    let mut gens = vec![fp.clone(), sfp.clone()];
    for a in 0..6 {
        for b in (a + 1)..6 {
            let m = jac[0][a].mul(&jac[1][b]).sub(&jac[0][b].mul(&jac[1][a]));
            gens.push(m);
        }
    }
    let t = Instant::now();
    let iz = Ideal::new(&ring, gens);
    let h = hilbert(&iz).unwrap();
    println!("Z over Q(i): dim {} length {} in {:?}", h.dimension, h.degree, t.elapsed());
}

#[test]
#[ignore]
fn probe_sigma_unused() {
    let ring = p5_ring(ExtField::gf9());
    let [f0, ..] = spanning_cubics(&ring);
    let _ = substitute(&f0, &sigma(&ring));
}
