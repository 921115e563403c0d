//! Polynomial ring descriptors: variable names, a single- or bigraded
//! degree vector per variable, and the base field. Rings are shared behind
//! `Arc` and never mutated.

use crate::monomial::Monomial;
use arith::Field;
use smallvec::SmallVec;
use std::sync::Arc;

/// A multidegree: one component per grading (1 for P^n, 2 for P^5 x P^1).
/// Signed so twists of free modules can reuse the type.
pub type Multidegree = SmallVec<[i64; 2]>;

pub fn multideg(components: &[i64]) -> Multidegree {
    SmallVec::from_slice(components)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring<F: Field> {
    pub field: F,
    vars: Vec<String>,
    degrees: Vec<Multidegree>,
    grading_rank: usize,
}

pub type RingRef<F> = Arc<Ring<F>>;

impl<F: Field> Ring<F> {
    /// Standard grading: every variable has degree 1.
    pub fn standard(field: F, vars: &[&str]) -> RingRef<F> {
        let degrees = vec![multideg(&[1]); vars.len()];
        Ring::with_degrees(field, vars, degrees)
    }

    pub fn with_degrees(field: F, vars: &[&str], degrees: Vec<Multidegree>) -> RingRef<F> {
        assert_eq!(vars.len(), degrees.len());
        let rank = degrees.first().map(|d| d.len()).unwrap_or(1);
        assert!(degrees.iter().all(|d| d.len() == rank));
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        assert!(
            names.iter().all(|n| is_valid_var(n)),
            "variable names must be a letter followed by digits"
        );
        Arc::new(Ring {
            field,
            vars: names,
            degrees,
            grading_rank: rank,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn grading_rank(&self) -> usize {
        self.grading_rank
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_degree(&self, i: usize) -> &Multidegree {
        &self.degrees[i]
    }

    pub fn mono_degree(&self, m: &Monomial) -> Multidegree {
        let mut out = multideg(&vec![0i64; self.grading_rank]);
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                for (o, d) in out.iter_mut().zip(self.degrees[i].iter()) {
                    *o += d * e as i64;
                }
            }
        }
        out
    }

    /// New ring with one extra variable in front (used by elimination
    /// tricks). The new variable gets the supplied multidegree.
    pub fn prepend_var(&self, name: &str, degree: Multidegree) -> RingRef<F> {
        assert_eq!(degree.len(), self.grading_rank);
        assert!(self.var_index(name).is_none(), "variable already present");
        let mut vars: Vec<&str> = vec![name];
        vars.extend(self.vars.iter().map(|s| s.as_str()));
        let mut degrees = vec![degree];
        degrees.extend(self.degrees.iter().cloned());
        Ring::with_degrees(self.field.clone(), &vars, degrees)
    }

    /// New ring with one extra variable at the back.
    pub fn append_var(&self, name: &str, degree: Multidegree) -> RingRef<F> {
        assert_eq!(degree.len(), self.grading_rank);
        assert!(self.var_index(name).is_none(), "variable already present");
        let mut vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        vars.push(name);
        let mut degrees = self.degrees.clone();
        degrees.push(degree);
        Ring::with_degrees(self.field.clone(), &vars, degrees)
    }

    /// New ring that keeps exactly the variables at `keep` (in order).
    pub fn subring(&self, keep: &[usize]) -> RingRef<F> {
        let vars: Vec<&str> = keep.iter().map(|&i| self.vars[i].as_str()).collect();
        let degrees: Vec<Multidegree> = keep.iter().map(|&i| self.degrees[i].clone()).collect();
        Ring::with_degrees(self.field.clone(), &vars, degrees)
    }

    /// New ring with the same variables re-ordered by `perm` (new index ->
    /// old index).
    pub fn permuted(&self, perm: &[usize]) -> RingRef<F> {
        assert_eq!(perm.len(), self.nvars());
        self.subring(perm)
    }
}

fn is_valid_var(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_digit()),
        _ => false,
    }
}

pub fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
