//! Sparse multivariate polynomials in canonical form: terms sorted
//! grevlex-descending, no zero coefficients. Two polynomials over the same
//! ring are equal iff their term lists are identical.

use crate::monomial::{grevlex, Monomial};
use crate::ring::{same_ring, Multidegree, RingRef};
use arith::Field;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![],
        }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i, 1), ring.field.one())],
        }
    }

    pub fn from_term(ring: &RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        assert_eq!(m.nvars(), ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Build from terms already in canonical form (grevlex-descending,
    /// distinct monomials, no zero coefficients).
    pub fn from_sorted_terms(ring: &RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| grevlex(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field.is_zero(c)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; merges duplicates
    /// and sorts into canonical form.
    pub fn from_terms(ring: &RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = &ring.field;
        let mut map: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if field.is_zero(&s) {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !field.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> = map.into_iter().collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> F::Elem {
        match self
            .terms
            .binary_search_by(|(t, _)| grevlex(m, t).then(Ordering::Equal))
        {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    /// Total degree (max over terms), None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common multidegree if homogeneous, None otherwise. The zero
    /// polynomial is homogeneous of every degree; it reports None.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let first = self.terms.first()?;
        let d = self.ring.mono_degree(&first.0);
        for (m, _) in &self.terms[1..] {
            if self.ring.mono_degree(m) != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(same_ring(&self.ring, &other.ring));
        let field = &self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match grevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term c*m. Preserves canonical order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_ring(&self.ring, &other.ring));
        let field = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut map: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(small.terms.len() * large.terms.len() / 2);
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                let prod = field.mul(cs, cl);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &prod);
                        if field.is_zero(&s) {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !field.is_zero(&prod) {
                            e.insert(prod);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> = map.into_iter().collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative; characteristic-aware because exponents are
    /// mapped into the field (in characteristic 3 the derivative of x^3
    /// vanishes termwise).
    pub fn derivative(&self, var: usize) -> Self {
        let field = self.ring.field.clone();
        let mut terms = vec![];
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let k = field.mul(c, &field.from_i64(e as i64));
            if field.is_zero(&k) {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] = e - 1;
            terms.push((m2, k));
        }
        Self::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism determined by variable images. `images[i]` is the
    /// image of variable i in the target ring.
    pub fn substitute_vars(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Polynomial<F> {
        assert_eq!(images.len(), self.ring.nvars());
        let field = target.field.clone();
        // lazily extended power tables per variable
        let mut powers: Vec<Vec<Polynomial<F>>> =
            images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul(&images[i]);
                    table.push(next);
                }
                term = term.mul(&table[e as usize]);
            }
            acc = acc.add(&term);
        }
        let _ = field;
        acc
    }

    /// Transport into a ring that contains the same variables (by name),
    /// e.g. a ring extended by an auxiliary variable or a subring after
    /// elimination. Panics if a variable with a nonzero exponent is missing
    /// from the target.
    pub fn transport(&self, target: &RingRef<F>) -> Polynomial<F> {
        let map: Vec<Option<usize>> = (0..self.ring.nvars())
            .map(|i| target.var_index(self.ring.var_name(i)))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut m2 = Monomial::one(target.nvars());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => m2.0[j] = e,
                    None => panic!(
                        "variable {} missing from target ring",
                        self.ring.var_name(i)
                    ),
                }
            }
            terms.push((m2, c.clone()));
        }
        Polynomial::from_terms(target, terms)
    }

    /// True if no term involves any of the given variables.
    pub fn avoids_vars(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| vars.iter().all(|&v| m.0[v] == 0))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = field.fmt_elem(c);
            let (neg, cs) = match cs.strip_prefix('-') {
                // only treat as a sign when the rest has no further +/- at
                // top level (e.g. "-a" but not "-2+3i")
                Some(rest) if !rest.contains('+') && !rest.contains('-') => {
                    (true, rest.to_string())
                }
                _ => (false, cs),
            };
            let compound = cs.contains('+') || cs.contains('-');
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mono = fmt_monomial(&self.ring, m);
            match (mono.is_empty(), compound, cs.as_str()) {
                (true, _, _) => write!(f, "{}", if compound { format!("({})", cs) } else { cs })?,
                (false, true, _) => write!(f, "({})*{}", cs, mono)?,
                (false, false, "1") => write!(f, "{}", mono)?,
                (false, false, _) => write!(f, "{}*{}", cs, mono)?,
            }
        }
        Ok(())
    }
}

fn fmt_monomial<F: Field>(ring: &RingRef<F>, m: &Monomial) -> String {
    let mut parts = vec![];
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}
