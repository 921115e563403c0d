//! Ideals with cached reduced bases, and the calculus the geometry layer
//! consumes: sums, products, saturation, elimination.

use crate::engine::{buchberger, GroebnerBasis};
use crate::order::MonomialOrder;
use arith::Field;
use multipoly::{multideg, Polynomial, RingRef};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Self {
        let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Groebner basis under `order`, computed once and cached.
    pub fn gb(&self, order: MonomialOrder) -> Arc<GroebnerBasis<F>> {
        let mut cache = self.cache.lock().unwrap();
        if let Some(b) = cache.get(&order) {
            return b.clone();
        }
        let b = Arc::new(buchberger(&self.ring, &self.gens, order));
        cache.insert(order, b.clone());
        b
    }

    /// Install an externally computed basis (e.g. loaded from a disk
    /// checkpoint). The basis must be the reduced basis of this ideal.
    pub fn install_gb(&self, basis: GroebnerBasis<F>) {
        let mut cache = self.cache.lock().unwrap();
        cache.entry(basis.order()).or_insert_with(|| Arc::new(basis));
    }

    pub fn gb_grevlex(&self) -> Arc<GroebnerBasis<F>> {
        self.gb(MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        self.gb_grevlex().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Ideal equality via the canonical reduced bases.
    pub fn ideal_eq(&self, other: &Ideal<F>) -> bool {
        self.gb_grevlex().elements() == other.gb_grevlex().elements()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gb_grevlex().is_unit()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        assert!(multipoly::ring::same_ring(&self.ring, &other.ring));
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_gens(&self, extra: &[Polynomial<F>]) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = vec![];
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Replace the generators by the reduced grevlex basis (useful before
    /// serializing or passing to expensive downstream steps).
    pub fn with_gb_gens(&self) -> Ideal<F> {
        let gb = self.gb_grevlex();
        let out = Ideal::new(&self.ring, gb.elements().to_vec());
        out.install_gb((*gb).clone());
        out
    }
}

fn fresh_var<F: Field>(ring: &RingRef<F>, base: char) -> String {
    let mut k = 0usize;
    loop {
        let name = format!("{}{}", base, k);
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// I : g^infinity for a single nonzero polynomial g.
///
/// Homogeneous inputs use the reverse-lex trick: append a new cheapest
/// variable z with deg z = deg g, adjoin z - g, take a grevlex basis, and
/// strip z powers (for homogeneous ideals, grevlex sees z-divisibility on
/// leading terms). General inputs fall back to the t*g - 1 method in an
/// elimination order.
pub fn saturate_poly<F: Field>(ideal: &Ideal<F>, g: &Polynomial<F>) -> Ideal<F> {
    assert!(!g.is_zero(), "saturation by the zero polynomial");
    let ring = ideal.ring().clone();
    if g.total_degree() == Some(0) {
        return ideal.clone(); // unit multiplier changes nothing
    }
    let homogeneous = ideal.is_homogeneous() && g.is_homogeneous();
    if homogeneous {
        let zname = fresh_var(&ring, 'z');
        let zdeg = g.multidegree().unwrap();
        let ring_z = ring.append_var(&zname, zdeg);
        let z_idx = ring_z.nvars() - 1;
        let mut gens: Vec<Polynomial<F>> =
            ideal.gens().iter().map(|f| f.transport(&ring_z)).collect();
        gens.push(Polynomial::var(&ring_z, z_idx).sub(&g.transport(&ring_z)));
        let gb = buchberger(&ring_z, &gens, MonomialOrder::Grevlex);
        // images: existing variables map to themselves, z maps to g
        let mut images: Vec<Polynomial<F>> = (0..ring.nvars())
            .map(|i| Polynomial::var(&ring, i))
            .collect();
        images.push(g.clone());
        let mut out = vec![];
        for e in gb.elements() {
            let k = e.terms().iter().map(|(m, _)| m.0[z_idx]).min().unwrap();
            let stripped = if k == 0 {
                e.clone()
            } else {
                let terms = e
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut m2 = m.clone();
                        m2.0[z_idx] -= k;
                        (m2, c.clone())
                    })
                    .collect();
                Polynomial::from_sorted_terms(&ring_z, terms)
            };
            out.push(stripped.substitute_vars(&ring, &images));
        }
        return Ideal::new(&ring, out);
    }
    // general: eliminate t from I + (t*g - 1)
    let tname = fresh_var(&ring, 't');
    let ring_t = ring.prepend_var(&tname, multideg(&vec![0; ring.grading_rank()]));
    let mut gens: Vec<Polynomial<F>> = ideal.gens().iter().map(|f| f.transport(&ring_t)).collect();
    let t = Polynomial::var(&ring_t, 0);
    gens.push(t.mul(&g.transport(&ring_t)).sub(&Polynomial::one(&ring_t)));
    let gb = buchberger(&ring_t, &gens, MonomialOrder::Elim { front: 1 });
    let out: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.avoids_vars(&[0]))
        .map(|e| e.transport(&ring))
        .collect();
    Ideal::new(&ring, out)
}

/// I : J^infinity = intersection over generators g of I : g^infinity.
/// When the per-generator saturations agree, the intersection step is
/// skipped.
pub fn saturate<F: Field>(ideal: &Ideal<F>, j: &Ideal<F>) -> Ideal<F> {
    let gens: Vec<&Polynomial<F>> = j
        .gens()
        .iter()
        .filter(|g| g.total_degree().map(|d| d > 0).unwrap_or(false))
        .collect();
    if gens.is_empty() {
        return ideal.clone();
    }
    let sats: Vec<Ideal<F>> = gens.iter().map(|g| saturate_poly(ideal, g)).collect();
    let mut acc = sats[0].clone();
    for s in &sats[1..] {
        if acc.ideal_eq(s) {
            continue;
        }
        acc = intersect(&acc, s);
    }
    acc
}

/// Ideal intersection via the graded t-trick: eliminate t from
/// t*I + (1-t)*K, where t carries degree zero so homogeneity is preserved.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Ideal<F> {
    let ring = a.ring().clone();
    assert!(multipoly::ring::same_ring(&ring, b.ring()));
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(&ring, vec![]);
    }
    let tname = fresh_var(&ring, 't');
    let ring_t = ring.prepend_var(&tname, multideg(&vec![0; ring.grading_rank()]));
    let t = Polynomial::var(&ring_t, 0);
    let one_minus_t = Polynomial::one(&ring_t).sub(&t);
    let mut gens = vec![];
    for f in a.gens() {
        gens.push(t.mul(&f.transport(&ring_t)));
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.transport(&ring_t)));
    }
    let gb = buchberger(&ring_t, &gens, MonomialOrder::Elim { front: 1 });
    let out: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.avoids_vars(&[0]))
        .map(|e| e.transport(&ring))
        .collect();
    Ideal::new(&ring, out)
}

/// Generators of I intersected with the subring omitting `vars`, via a
/// block elimination order. Returns an ideal over the subring.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, vars: &[usize]) -> Ideal<F> {
    let ring = ideal.ring().clone();
    let mut front: Vec<usize> = vars.to_vec();
    front.sort_unstable();
    front.dedup();
    let back: Vec<usize> = (0..ring.nvars()).filter(|i| !front.contains(i)).collect();
    if front.is_empty() {
        return ideal.clone();
    }
    let mut perm = front.clone();
    perm.extend(back.iter().copied());
    let ring_p = ring.permuted(&perm);
    let gens: Vec<Polynomial<F>> = ideal.gens().iter().map(|f| f.transport(&ring_p)).collect();
    let gb = buchberger(&ring_p, &gens, MonomialOrder::Elim { front: front.len() });
    let sub = ring.subring(&back);
    let front_idx: Vec<usize> = (0..front.len()).collect();
    let out: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.avoids_vars(&front_idx))
        .map(|e| e.transport(&sub))
        .collect();
    Ideal::new(&sub, out)
}
