//! Buchberger's algorithm with the sugar selection strategy and
//! Gebauer-Moeller pair elimination, over any exact field. No modular or
//! tracing shortcuts anywhere; exactness is the product.

use crate::order::MonomialOrder;
use arith::Field;
use multipoly::{Monomial, Polynomial, RingRef};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

/// Terms sorted descending under the active order.
pub(crate) type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

fn support_mask(m: &Monomial) -> u16 {
    let mut mask = 0u16;
    for (i, &e) in m.0.iter().enumerate() {
        if e != 0 {
            mask |= 1 << (i & 15);
        }
    }
    mask
}

pub(crate) fn order_terms<F: Field>(f: &Polynomial<F>, order: MonomialOrder) -> Terms<F> {
    let mut t: Terms<F> = f.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

pub(crate) fn terms_to_poly<F: Field>(
    ring: &RingRef<F>,
    mut terms: Terms<F>,
    order: MonomialOrder,
) -> Polynomial<F> {
    if order != MonomialOrder::Grevlex {
        terms.sort_by(|a, b| multipoly::grevlex(&b.0, &a.0));
    }
    Polynomial::from_sorted_terms(ring, terms)
}

/// a*x^sa*f - b*x^sb*g as a single ordered merge. `a` may be None for 1;
/// the shifts may be None for no shift.
pub(crate) fn linear_combine<F: Field>(
    field: &F,
    order: MonomialOrder,
    a: Option<&F::Elem>,
    sa: Option<&Monomial>,
    f: &[(Monomial, F::Elem)],
    b: &F::Elem,
    sb: Option<&Monomial>,
    g: &[(Monomial, F::Elem)],
) -> Terms<F> {
    let mut out: Terms<F> = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0usize, 0usize);
    let shift = |m: &Monomial, s: Option<&Monomial>| match s {
        Some(s) => m.mul(s),
        None => m.clone(),
    };
    let scale_a = |c: &F::Elem| match a {
        Some(a) => field.mul(a, c),
        None => c.clone(),
    };
    while i < f.len() || j < g.len() {
        let take_f = if i == f.len() {
            false
        } else if j == g.len() {
            true
        } else {
            let mf = shift(&f[i].0, sa);
            let mg = shift(&g[j].0, sb);
            match order.cmp(&mf, &mg) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let c = field.sub(&scale_a(&f[i].1), &field.mul(b, &g[j].1));
                    if !field.is_zero(&c) {
                        out.push((mf, c));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
            }
        };
        if take_f {
            let c = scale_a(&f[i].1);
            if !field.is_zero(&c) {
                out.push((shift(&f[i].0, sa), c));
            }
            i += 1;
        } else {
            let c = field.neg(&field.mul(b, &g[j].1));
            if !field.is_zero(&c) {
                out.push((shift(&g[j].0, sb), c));
            }
            j += 1;
        }
    }
    out
}

struct BasisElem<F: Field> {
    terms: Terms<F>,
    lt: Monomial,
    mask: u16,
    deg: u32,
    sugar: u32,
}

/// Working basis: supports divisor lookup in ascending leading-term order
/// (so reduction always picks the first eligible reducer) and full normal
/// forms.
struct Basis<F: Field> {
    elems: Vec<BasisElem<F>>,
    sorted: Vec<usize>,
    order: MonomialOrder,
}

impl<F: Field> Basis<F> {
    fn new(order: MonomialOrder) -> Self {
        Basis {
            elems: vec![],
            sorted: vec![],
            order,
        }
    }

    fn insert(&mut self, terms: Terms<F>, sugar: u32) -> usize {
        let lt = terms[0].0.clone();
        let elem = BasisElem {
            mask: support_mask(&lt),
            deg: lt.degree(),
            sugar,
            lt,
            terms,
        };
        let idx = self.elems.len();
        let pos = self
            .sorted
            .partition_point(|&k| self.order.cmp(&self.elems[k].lt, &elem.lt) != Ordering::Greater);
        self.elems.push(elem);
        self.sorted.insert(pos, idx);
        idx
    }

    fn find_divisor(&self, m: &Monomial, mask: u16, deg: u32, skip: Option<usize>) -> Option<usize> {
        for &k in &self.sorted {
            if Some(k) == skip {
                continue;
            }
            let e = &self.elems[k];
            if e.deg <= deg && (e.mask & !mask) == 0 && e.lt.divides(m) {
                return Some(k);
            }
        }
        None
    }

    /// Full normal form of `work`. Returns (remainder, scale, sugar); the
    /// honest normal form is remainder / scale. `skip` excludes one basis
    /// element (used when inter-reducing the basis itself).
    fn reduce_full(
        &self,
        field: &F,
        work: Terms<F>,
        sugar0: u32,
        skip: Option<usize>,
    ) -> (Terms<F>, F::Elem, u32) {
        let mut remainder: Terms<F> = vec![];
        let mut scale = field.one();
        let mut sugar = sugar0;
        let mut work = work;
        let mut start = 0usize;
        let mut steps = 0usize;
        while start < work.len() {
            let (lm, lc) = work[start].clone();
            let mask = support_mask(&lm);
            let deg = lm.degree();
            match self.find_divisor(&lm, mask, deg, skip) {
                None => {
                    remainder.push((lm, lc));
                    start += 1;
                }
                Some(k) => {
                    let g = &self.elems[k];
                    let m = lm.try_div(&g.lt).expect("divisor found");
                    sugar = sugar.max(g.sugar + m.degree());
                    // a*work - b*m*g with a*lc = b*lc(g)
                    let (a, b) = field.reduction_pair(&lc, &g.terms[0].1);
                    let a_is_one = a == field.one();
                    let a_opt = if a_is_one { None } else { Some(&a) };
                    work = linear_combine(
                        field,
                        self.order,
                        a_opt,
                        None,
                        &work[start..],
                        &b,
                        Some(&m),
                        &g.terms,
                    );
                    start = 0;
                    if !a_is_one {
                        scale = field.mul(&scale, &a);
                        for (_, c) in remainder.iter_mut() {
                            *c = field.mul(c, &a);
                        }
                        steps += 1;
                        if steps % 4 == 0 {
                            self.renormalize(field, &mut remainder, &mut work, &mut scale);
                        }
                    }
                }
            }
        }
        (remainder, scale, sugar)
    }

    fn renormalize(
        &self,
        field: &F,
        remainder: &mut Terms<F>,
        work: &mut Terms<F>,
        scale: &mut F::Elem,
    ) {
        let mut all: Vec<F::Elem> = remainder
            .iter()
            .map(|(_, c)| c.clone())
            .chain(work.iter().map(|(_, c)| c.clone()))
            .collect();
        let probe = match all.iter().position(|c| !field.is_zero(c)) {
            Some(p) => p,
            None => return,
        };
        let before = all[probe].clone();
        field.normalize_unit(&mut all);
        if all[probe] == before {
            return;
        }
        let unit = field.div(&all[probe], &before);
        *scale = field.mul(scale, &unit);
        for (t, c) in remainder.iter_mut().zip(all.iter()) {
            t.1 = c.clone();
        }
        for (t, c) in work.iter_mut().zip(all[remainder.len()..].iter()) {
            t.1 = c.clone();
        }
    }
}

pub(crate) fn normalize_terms<F: Field>(field: &F, terms: &mut Terms<F>) {
    let mut coeffs: Vec<F::Elem> = terms.iter().map(|(_, c)| c.clone()).collect();
    field.normalize_unit(&mut coeffs);
    for (t, c) in terms.iter_mut().zip(coeffs.into_iter()) {
        t.1 = c;
    }
}

fn make_monic<F: Field>(field: &F, terms: &mut Terms<F>) {
    if terms.is_empty() || terms[0].1 == field.one() {
        return;
    }
    let inv = field.inv(&terms[0].1);
    for (_, c) in terms.iter_mut() {
        *c = field.mul(c, &inv);
    }
}

type PairKey = (u32, SmallVec<[u16; 12]>, u32, u32);

fn order_key(m: &Monomial, order: MonomialOrder) -> SmallVec<[u16; 12]> {
    let mut key: SmallVec<[u16; 12]> = SmallVec::new();
    if let MonomialOrder::Elim { front } = order {
        let fd: u32 = m.0[..front].iter().map(|&e| e as u32).sum();
        key.push(fd as u16);
    }
    key.push(m.degree() as u16);
    for &e in m.0.iter().rev() {
        key.push(u16::MAX - e);
    }
    key
}

/// Pair queue with Gebauer-Moeller elimination, selecting by (sugar, lcm).
struct PairQueue {
    pairs: BTreeSet<PairKey>,
    lcms: HashMap<(u32, u32), Monomial>,
    order: MonomialOrder,
}

impl PairQueue {
    fn new(order: MonomialOrder) -> Self {
        PairQueue {
            pairs: BTreeSet::new(),
            lcms: HashMap::new(),
            order,
        }
    }

    fn update<F: Field>(&mut self, basis: &Basis<F>, t_idx: usize) {
        let lt = &basis.elems[t_idx].lt;
        let cand: Vec<(u32, Monomial)> = (0..t_idx as u32)
            .map(|i| (i, basis.elems[i as usize].lt.lcm(lt)))
            .collect();
        let mut keep = vec![true; cand.len()];
        // M: drop a new pair when another new lcm properly divides its lcm
        for x in 0..cand.len() {
            for y in 0..cand.len() {
                if x != y && keep[x] && keep[y] && cand[y].1.divides(&cand[x].1) && cand[y].1 != cand[x].1 {
                    keep[x] = false;
                }
            }
        }
        // F: among equal lcms keep only the first
        for x in 0..cand.len() {
            if !keep[x] {
                continue;
            }
            for y in (x + 1)..cand.len() {
                if keep[y] && cand[x].1 == cand[y].1 {
                    keep[y] = false;
                }
            }
        }
        // B: coprime leading terms reduce to zero
        for (x, (i, _)) in cand.iter().enumerate() {
            if keep[x] && basis.elems[*i as usize].lt.coprime_with(lt) {
                keep[x] = false;
            }
        }
        // chain criterion on the already queued pairs
        let stale: Vec<PairKey> = self
            .pairs
            .iter()
            .filter(|key| {
                let (i, j) = (key.2, key.3);
                let lcm_ij = &self.lcms[&(i, j)];
                lt.divides(lcm_ij)
                    && basis.elems[i as usize].lt.lcm(lt) != *lcm_ij
                    && basis.elems[j as usize].lt.lcm(lt) != *lcm_ij
            })
            .cloned()
            .collect();
        for key in stale {
            self.lcms.remove(&(key.2, key.3));
            self.pairs.remove(&key);
        }
        let t = &basis.elems[t_idx];
        for (x, (i, lcm)) in cand.into_iter().enumerate() {
            if !keep[x] {
                continue;
            }
            let gi = &basis.elems[i as usize];
            let s = (gi.sugar + (lcm.degree() - gi.deg)).max(t.sugar + (lcm.degree() - t.deg));
            self.pairs.insert((s, order_key(&lcm, self.order), i, t_idx as u32));
            self.lcms.insert((i, t_idx as u32), lcm);
        }
    }

    fn pop(&mut self) -> Option<(u32, u32, u32, Monomial)> {
        let key = self.pairs.iter().next().cloned()?;
        self.pairs.remove(&key);
        let (sugar, _, i, j) = key;
        let lcm = self.lcms.remove(&(i, j)).expect("lcm recorded");
        Some((sugar, i, j, lcm))
    }
}

/// Compute the reduced Groebner basis of the given generators.
pub fn buchberger<F: Field>(
    ring: &RingRef<F>,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
) -> GroebnerBasis<F> {
    let field = ring.field.clone();
    let mut basis: Basis<F> = Basis::new(order);
    let mut queue = PairQueue::new(order);

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut terms = order_terms(g, order);
        normalize_terms(&field, &mut terms);
        let sugar = terms.iter().map(|(m, _)| m.degree()).max().unwrap();
        let idx = basis.insert(terms, sugar);
        queue.update(&basis, idx);
    }

    while let Some((sugar, i, j, lcm)) = queue.pop() {
        let (fi, fj) = (&basis.elems[i as usize], &basis.elems[j as usize]);
        let mi = lcm.try_div(&fi.lt).unwrap();
        let mj = lcm.try_div(&fj.lt).unwrap();
        // S-poly: a * x^mi * f_i - b * x^mj * f_j with a*lc_i = b*lc_j
        let (a, b) = field.reduction_pair(&fi.terms[0].1, &fj.terms[0].1);
        let spoly = linear_combine(
            &field,
            order,
            Some(&a),
            Some(&mi),
            &fi.terms,
            &b,
            Some(&mj),
            &fj.terms,
        );
        if spoly.is_empty() {
            continue;
        }
        let (mut nf, _, nf_sugar) = basis.reduce_full(&field, spoly, sugar, None);
        if nf.is_empty() {
            continue;
        }
        normalize_terms(&field, &mut nf);
        let idx = basis.insert(nf, nf_sugar);
        queue.update(&basis, idx);
    }

    // Minimalize: keep only elements whose leading terms are not divisible
    // by another kept leading term.
    let mut minimal: Basis<F> = Basis::new(order);
    for &k in &basis.sorted {
        let e = &basis.elems[k];
        if minimal
            .find_divisor(&e.lt, e.mask, e.deg, None)
            .is_none()
        {
            minimal.insert(e.terms.clone(), e.sugar);
        }
    }
    // Tail-reduce each element against the others.
    let mut out_terms: Vec<Terms<F>> = vec![];
    for k in 0..minimal.elems.len() {
        let full = minimal.elems[k].terms.clone();
        let (mut nf, _, _) = minimal.reduce_full(&field, full, 0, Some(k));
        debug_assert!(!nf.is_empty(), "basis element reduced to zero after minimalization");
        make_monic(&field, &mut nf);
        out_terms.push(nf);
    }
    out_terms.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    finish_basis(ring, order, out_terms)
}

fn finish_basis<F: Field>(
    ring: &RingRef<F>,
    order: MonomialOrder,
    out_terms: Vec<Terms<F>>,
) -> GroebnerBasis<F> {
    let elems: Vec<Polynomial<F>> = out_terms
        .iter()
        .map(|t| terms_to_poly(ring, t.clone(), order))
        .collect();
    let lts: Vec<Monomial> = out_terms.iter().map(|t| t[0].0.clone()).collect();
    GroebnerBasis {
        ring: ring.clone(),
        order,
        elems,
        lts,
    }
}

/// A computed reduced Groebner basis: monic, inter-reduced, sorted by
/// ascending leading term, so it is a canonical function of (ideal, order).
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    order: MonomialOrder,
    elems: Vec<Polynomial<F>>,
    lts: Vec<Monomial>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elems
    }

    pub fn leading_terms(&self) -> &[Monomial] {
        &self.lts
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// True when the basis is {1}, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.lts[0].is_one()
    }

    fn as_basis(&self) -> Basis<F> {
        let mut b = Basis::new(self.order);
        for e in &self.elems {
            b.insert(order_terms(e, self.order), 0);
        }
        b
    }

    /// The unique normal form: no term of the result is divisible by any
    /// basis leading term, and f - result lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let field = &self.ring.field;
        if self.elems.is_empty() || f.is_zero() {
            return f.clone();
        }
        let work = order_terms(f, self.order);
        let (mut rem, scale, _) = self.as_basis().reduce_full(field, work, 0, None);
        if scale != field.one() {
            let inv = field.inv(&scale);
            for (_, c) in rem.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
        terms_to_poly(&self.ring, rem, self.order)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Check the defining property directly: every S-polynomial of basis
    /// pairs reduces to zero. Quadratic; meant for tests.
    pub fn verify_buchberger_criterion(&self) -> bool {
        let field = &self.ring.field;
        let b = self.as_basis();
        for i in 0..b.elems.len() {
            for j in (i + 1)..b.elems.len() {
                let (fi, fj) = (&b.elems[i], &b.elems[j]);
                let lcm = fi.lt.lcm(&fj.lt);
                let mi = lcm.try_div(&fi.lt).unwrap();
                let mj = lcm.try_div(&fj.lt).unwrap();
                let s = linear_combine(
                    field,
                    self.order,
                    Some(&fj.terms[0].1),
                    Some(&mi),
                    &fi.terms,
                    &fi.terms[0].1,
                    Some(&mj),
                    &fj.terms,
                );
                if s.is_empty() {
                    continue;
                }
                let (nf, _, _) = b.reduce_full(field, s, 0, None);
                if !nf.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
