//! Linear changes of variables. `substitute(f, g)` composes f with the
//! substitution x_i -> sum_j g[i][j] x_j, so a coordinate shift such as
//! sigma acts on polynomials by x_i -> x_{i+1 mod 6}.

use crate::poly::Polynomial;
use crate::ring::{same_ring, RingRef};
use arith::Field;

#[derive(Clone, Debug)]
pub struct LinearAction<F: Field> {
    ring: RingRef<F>,
    /// Row i is the image of variable i as a vector of coefficients.
    matrix: Vec<Vec<F::Elem>>,
    label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    DimensionMismatch { expected: usize, got: usize },
    Singular,
}

impl std::fmt::Display for ActionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ActionError::DimensionMismatch { expected, got } => {
                write!(f, "matrix is {}-dimensional, ring has {} variables", got, expected)
            }
            ActionError::Singular => write!(f, "matrix is not invertible"),
        }
    }
}

impl std::error::Error for ActionError {}

impl<F: Field> LinearAction<F> {
    pub fn new(
        ring: &RingRef<F>,
        matrix: Vec<Vec<F::Elem>>,
        label: Option<&str>,
    ) -> Result<Self, ActionError> {
        let n = ring.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(ActionError::DimensionMismatch {
                expected: n,
                got: matrix.len(),
            });
        }
        if invert(&ring.field, &matrix).is_none() {
            return Err(ActionError::Singular);
        }
        Ok(LinearAction {
            ring: ring.clone(),
            matrix,
            label: label.map(|s| s.to_string()),
        })
    }

    pub fn identity(ring: &RingRef<F>) -> Self {
        let n = ring.nvars();
        let field = &ring.field;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearAction {
            ring: ring.clone(),
            matrix,
            label: Some("id".to_string()),
        }
    }

    /// Permutation action x_i -> x_{perm(i)}.
    pub fn permutation(ring: &RingRef<F>, perm: &[usize], label: Option<&str>) -> Self {
        let n = ring.nvars();
        assert_eq!(perm.len(), n);
        let field = &ring.field;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if perm[i] == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearAction {
            ring: ring.clone(),
            matrix,
            label: label.map(|s| s.to_string()),
        }
    }

    /// Diagonal action x_i -> scalars[i] * x_i.
    pub fn diagonal(ring: &RingRef<F>, scalars: &[F::Elem], label: Option<&str>) -> Self {
        let n = ring.nvars();
        assert_eq!(scalars.len(), n);
        let field = &ring.field;
        assert!(
            scalars.iter().all(|s| !field.is_zero(s)),
            "diagonal action must be invertible"
        );
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { scalars[i].clone() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearAction {
            ring: ring.clone(),
            matrix,
            label: label.map(|s| s.to_string()),
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn matrix(&self) -> &[Vec<F::Elem>] {
        &self.matrix
    }

    /// Matrix product self * other; satisfies
    /// `substitute(substitute(f, g), h) == substitute(f, g.then(h))`.
    pub fn then(&self, other: &Self) -> Self {
        assert!(same_ring(&self.ring, &other.ring));
        let n = self.ring.nvars();
        let field = &self.ring.field;
        let mut matrix = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    acc = field.add(&acc, &field.mul(&self.matrix[i][k], &other.matrix[k][j]));
                }
                matrix[i][j] = acc;
            }
        }
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{}*{}", a, b)),
            _ => None,
        };
        LinearAction {
            ring: self.ring.clone(),
            matrix,
            label,
        }
    }

    pub fn inverse(&self) -> Self {
        let matrix = invert(&self.ring.field, &self.matrix).expect("invertible by invariant");
        let label = self.label.as_ref().map(|l| format!("{}^-1", l));
        LinearAction {
            ring: self.ring.clone(),
            matrix,
            label,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(&self.ring);
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc.label = self.label.as_ref().map(|l| format!("{}^{}", l, k));
        acc
    }

    /// True if every variable maps to a scalar multiple of a single
    /// variable, which admits a fast substitution path.
    fn is_monomial_map(&self) -> Option<Vec<(usize, F::Elem)>> {
        let field = &self.ring.field;
        let mut out = vec![];
        for row in &self.matrix {
            let nz: Vec<usize> = (0..row.len()).filter(|&j| !field.is_zero(&row[j])).collect();
            if nz.len() != 1 {
                return None;
            }
            out.push((nz[0], row[nz[0]].clone()));
        }
        Some(out)
    }
}

/// Compose a polynomial with a linear change of variables.
pub fn substitute<F: Field>(f: &Polynomial<F>, g: &LinearAction<F>) -> Polynomial<F> {
    assert!(same_ring(f.ring(), g.ring()));
    let ring = f.ring().clone();
    let field = ring.field.clone();
    if let Some(map) = g.is_monomial_map() {
        let mut terms = vec![];
        for (m, c) in f.terms() {
            let mut m2 = crate::monomial::Monomial::one(ring.nvars());
            let mut coef = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (j, s) = &map[i];
                m2.0[*j] += e;
                if !field.is_zero(s) {
                    let mut powed = field.one();
                    for _ in 0..e {
                        powed = field.mul(&powed, s);
                    }
                    coef = field.mul(&coef, &powed);
                }
            }
            terms.push((m2, coef));
        }
        return Polynomial::from_terms(&ring, terms);
    }
    let images: Vec<Polynomial<F>> = g
        .matrix
        .iter()
        .map(|row| {
            let mut form = Polynomial::zero(&ring);
            for (j, c) in row.iter().enumerate() {
                if !field.is_zero(c) {
                    form = form.add(&Polynomial::var(&ring, j).scale(c));
                }
            }
            form
        })
        .collect();
    f.substitute_vars(&ring, &images)
}

/// Exact inverse by Gauss-Jordan; None when singular.
fn invert<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut inv: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = field.inv(&a[col][col]);
        for j in 0..n {
            a[col][j] = field.mul(&a[col][j], &s);
            inv[col][j] = field.mul(&inv[col][j], &s);
        }
        for r in 0..n {
            if r == col || field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = field.mul(&factor, &a[col][j]);
                a[r][j] = field.sub(&a[r][j], &t);
                let t = field.mul(&factor, &inv[col][j]);
                inv[r][j] = field.sub(&inv[r][j], &t);
            }
        }
    }
    Some(inv)
}
