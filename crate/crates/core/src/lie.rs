//! |1|-graded semisimple Lie algebras with exact structure constants.
//!
//! Elements are coordinate vectors over a fixed basis of matrices in the
//! defining representation. Two constructors are provided: `projective(n)`
//! builds sl(n+1) graded by the stabilizer of a ray, and `grassmannian(q)`
//! builds sl(2+q) graded by the stabilizer of a two-plane.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat, ratio, Rational};
use crate::linalg::QMatrix;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("projective construction needs n >= 2, got {0}")]
    ProjectiveRange(usize),
    #[error("grassmannian construction needs q > 2, got {0}")]
    GrassmannRange(usize),
}

#[derive(Debug)]
pub struct GradedLieAlgebra {
    name: String,
    rep_size: usize,
    dim: usize,
    basis: Vec<QMatrix>,
    labels: Vec<String>,
    degree: Vec<i8>,
    /// Indices of the g_{-1} basis (the tangent directions), in pairing order.
    neg: Vec<usize>,
    /// Indices of the g_{+1} basis, dual-paired with `neg` entry by entry.
    pos: Vec<usize>,
    grading_element: Vec<Rational>,
    /// ad(b_i) in basis coordinates; column j holds [b_i, b_j].
    ad: Vec<QMatrix>,
    /// Vectorized basis matrix, for expressing rep matrices in coordinates.
    vect: QMatrix,
}

impl GradedLieAlgebra {
    /// sl(n+1) with the |1|-grading of projective geometry:
    /// g_{-1} = R^n sits in the lower-left column block, g_1 = (R^n)^* in the
    /// upper-right row block. The tangent basis is X_c = E_{c,0}; the cotangent
    /// basis is Z^a = -E_{0,a}, the sign fixed so that the displayed projective
    /// Kostant differentials come out on the nose.
    pub fn projective(n: usize) -> Result<Self, LieError> {
        if n < 2 {
            return Err(LieError::ProjectiveRange(n));
        }
        let sz = n + 1;
        let e = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(sz, sz);
            m[(i, j)] = Rational::one();
            m
        };

        let mut basis = Vec::new();
        let mut labels = Vec::new();
        let mut degree = Vec::new();

        let mut neg = Vec::new();
        for c in 1..=n {
            neg.push(basis.len());
            basis.push(e(c, 0));
            labels.push(format!("X_{c}"));
            degree.push(-1i8);
        }
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                basis.push(e(a, b));
                labels.push(format!("E_{a}{b}"));
                degree.push(0);
            }
        }
        for a in 1..=n {
            basis.push(e(a, a).sub(&e(0, 0)));
            labels.push(format!("H_{a}"));
            degree.push(0);
        }
        let mut pos = Vec::new();
        for a in 1..=n {
            pos.push(basis.len());
            basis.push(e(0, a).scale(&rat(-1)));
            labels.push(format!("Z^{a}"));
            degree.push(1);
        }

        let mut grading = QMatrix::zeros(sz, sz);
        grading[(0, 0)] = ratio(n as i64, (n + 1) as i64);
        for a in 1..=n {
            grading[(a, a)] = ratio(-1, (n + 1) as i64);
        }

        Self::assemble(
            format!("projective({n})"),
            sz,
            basis,
            labels,
            degree,
            neg,
            pos,
            grading,
        )
    }

    /// sl(2+q) with the |1|-grading of (2,q) Grassmannian geometry. Rows and
    /// columns 0..2 carry the rank-2 block, 2..2+q the rank-q block; the
    /// tangent directions X_(c,c') = E_{2+c',c} map the 2-block into the
    /// q-block, and the paired cotangent basis is Z^(c,c') = +E_{c,2+c'}. With
    /// these signs the displayed Grassmannian codifferentials and Laplacians
    /// are reproduced exactly.
    pub fn grassmannian(q: usize) -> Result<Self, LieError> {
        if q <= 2 {
            return Err(LieError::GrassmannRange(q));
        }
        let sz = 2 + q;
        let e = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(sz, sz);
            m[(i, j)] = Rational::one();
            m
        };

        let mut basis = Vec::new();
        let mut labels = Vec::new();
        let mut degree = Vec::new();

        let mut neg = Vec::new();
        for c in 0..2 {
            for cp in 0..q {
                neg.push(basis.len());
                basis.push(e(2 + cp, c));
                labels.push(format!("X^{{{cp}'}}_{{{c}}}"));
                degree.push(-1i8);
            }
        }
        for a in 0..2 {
            for b in 0..2 {
                if a != b {
                    basis.push(e(a, b));
                    labels.push(format!("E_{a}{b}"));
                    degree.push(0);
                }
            }
        }
        for a in 0..q {
            for b in 0..q {
                if a != b {
                    basis.push(e(2 + a, 2 + b));
                    labels.push(format!("E'_{a}{b}"));
                    degree.push(0);
                }
            }
        }
        for k in 0..(sz - 1) {
            basis.push(e(k, k).sub(&e(k + 1, k + 1)));
            labels.push(format!("H_{k}"));
            degree.push(0);
        }
        let mut pos = Vec::new();
        for c in 0..2 {
            for cp in 0..q {
                pos.push(basis.len());
                basis.push(e(c, 2 + cp));
                labels.push(format!("Z^{{{c}}}_{{{cp}'}}"));
                degree.push(1);
            }
        }

        let mut grading = QMatrix::zeros(sz, sz);
        for c in 0..2 {
            grading[(c, c)] = ratio(q as i64, (q + 2) as i64);
        }
        for cp in 0..q {
            grading[(2 + cp, 2 + cp)] = ratio(-2, (q + 2) as i64);
        }

        Self::assemble(
            format!("grassmannian({q})"),
            sz,
            basis,
            labels,
            degree,
            neg,
            pos,
            grading,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        name: String,
        rep_size: usize,
        basis: Vec<QMatrix>,
        labels: Vec<String>,
        degree: Vec<i8>,
        neg: Vec<usize>,
        pos: Vec<usize>,
        grading_matrix: QMatrix,
    ) -> Result<Self, LieError> {
        let dim = basis.len();
        let vect = QMatrix::from_columns(
            &basis
                .iter()
                .map(|m| vectorize(m))
                .collect::<Vec<_>>(),
        );
        let mut alg = GradedLieAlgebra {
            name,
            rep_size,
            dim,
            basis,
            labels,
            degree,
            neg,
            pos,
            grading_element: Vec::new(),
            ad: Vec::new(),
            vect,
        };
        alg.grading_element = alg
            .coords_of(&grading_matrix)
            .expect("grading element lies in the algebra");
        alg.ad = (0..dim)
            .map(|i| {
                QMatrix::from_columns(
                    &(0..dim)
                        .map(|j| {
                            let m = alg.basis[i].mul(&alg.basis[j]).sub(&alg.basis[j].mul(&alg.basis[i]));
                            alg.coords_of(&m).expect("bracket closes in the algebra")
                        })
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        alg.validate();
        Ok(alg)
    }

    /// Construction-time invariants: degree additivity, the grading element
    /// acting by the degree, abelian g_{+-1}, the Jacobi identity on all basis
    /// triples, and nondegeneracy of the Killing pairing g_{-1} x g_{+1}.
    fn validate(&self) {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let br = self.bracket_basis(i, j);
                let target = self.degree[i] + self.degree[j];
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        assert!(
                            self.degree[k] as i16 == target as i16 && target.abs() <= 1,
                            "degree additivity violated at [{}, {}]",
                            self.labels[i],
                            self.labels[j]
                        );
                    }
                }
                if self.degree[i] != 0 && self.degree[i] == self.degree[j] {
                    assert!(
                        br.iter().all(|c| c.is_zero()),
                        "g_{{+-1}} must be abelian"
                    );
                }
            }
        }
        for j in 0..self.dim {
            let br = self.bracket(&self.grading_element, &basis_vector(self.dim, j));
            let expect: Vec<Rational> = (0..self.dim)
                .map(|k| {
                    if k == j {
                        rat(self.degree[j] as i64)
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            assert_eq!(br, expect, "[E, {}] != deg * {}", self.labels[j], self.labels[j]);
        }
        // Jacobi on all basis triples.
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in (j + 1)..self.dim {
                    let bjk = self.bracket_basis(j, k);
                    let bik = self.bracket_basis(i, k);
                    let mut acc = self.bracket(&bij, &basis_vector(self.dim, k));
                    let t2 = self.bracket(&bjk, &basis_vector(self.dim, i));
                    let t3 = self.bracket(&bik, &basis_vector(self.dim, j));
                    for m in 0..self.dim {
                        acc[m] = &acc[m] + &t2[m] - &t3[m];
                    }
                    assert!(
                        acc.iter().all(|c| c.is_zero()),
                        "Jacobi fails on triple ({}, {}, {})",
                        self.labels[i],
                        self.labels[j],
                        self.labels[k]
                    );
                }
            }
        }
        // Killing pairing on g_{-1} x g_{+1}.
        let k = QMatrix::from_fn(self.neg.len(), self.pos.len(), |i, j| {
            let a = &self.ad[self.neg[i]];
            let b = &self.ad[self.pos[j]];
            let prod = a.mul(b);
            (0..self.dim).map(|t| prod[(t, t)].clone()).fold(Rational::zero(), |x, y| x + y)
        });
        assert_eq!(k.rank(), self.neg.len(), "degenerate Killing pairing");
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rep_size(&self) -> usize {
        self.rep_size
    }

    pub fn degree(&self, i: usize) -> i8 {
        self.degree[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_matrix(&self, i: usize) -> &QMatrix {
        &self.basis[i]
    }

    /// Number of tangent directions (the dimension of g_{-1}).
    pub fn n_neg(&self) -> usize {
        self.neg.len()
    }

    /// Basis index of the t-th tangent direction.
    pub fn neg_index(&self, t: usize) -> usize {
        self.neg[t]
    }

    /// Basis index of the t-th cotangent direction (paired with `neg_index(t)`).
    pub fn pos_index(&self, t: usize) -> usize {
        self.pos[t]
    }

    pub fn grading_element(&self) -> &[Rational] {
        &self.grading_element
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.ad[i].column(j)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let col = self.ad[i].mul_vec(y);
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    out[k] += xi * v;
                }
            }
        }
        out
    }

    /// The defining-representation matrix of a coordinate vector.
    pub fn matrix_of(&self, x: &[Rational]) -> QMatrix {
        assert_eq!(x.len(), self.dim);
        let mut m = QMatrix::zeros(self.rep_size, self.rep_size);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.basis[i].scale(xi));
            }
        }
        m
    }

    /// Coordinates of a representation matrix; `None` when it is not in the span.
    pub fn coords_of(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        let v = vectorize(m);
        let x = self.vect.solve(&v)?;
        // solve() gives some preimage; confirm it reproduces m exactly.
        if self.vect.mul_vec(&x) == v {
            Some(x)
        } else {
            None
        }
    }
}

impl fmt::Display for GradedLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)
    }
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

fn vectorize(m: &QMatrix) -> Vec<Rational> {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            v.push(m[(i, j)].clone());
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_dimensions() {
        let g = GradedLieAlgebra::projective(3).unwrap();
        assert_eq!(g.dim(), 15);
        assert_eq!(g.n_neg(), 3);
        let by_deg = |d: i8| (0..g.dim()).filter(|&i| g.degree(i) == d).count();
        assert_eq!((by_deg(-1), by_deg(0), by_deg(1)), (3, 9, 3));
    }

    #[test]
    fn grassmann_dimensions() {
        let g = GradedLieAlgebra::grassmannian(3).unwrap();
        assert_eq!(g.dim(), 24);
        assert_eq!(g.n_neg(), 6);
    }

    #[test]
    fn range_checks() {
        assert!(GradedLieAlgebra::projective(1).is_err());
        assert!(GradedLieAlgebra::grassmannian(2).is_err());
    }

    #[test]
    fn bracket_of_tangent_and_cotangent_is_grading_zero() {
        let g = GradedLieAlgebra::projective(3).unwrap();
        let x = basis_vector(g.dim(), g.neg_index(0));
        let z = basis_vector(g.dim(), g.pos_index(1));
        let br = g.bracket(&x, &z);
        for (k, c) in br.iter().enumerate() {
            if !c.is_zero() {
                assert_eq!(g.degree(k), 0);
            }
        }
    }

    #[test]
    fn grading_element_acts_by_degree() {
        let g = GradedLieAlgebra::grassmannian(3).unwrap();
        let e = g.grading_element().to_vec();
        let z = basis_vector(g.dim(), g.pos_index(2));
        assert_eq!(g.bracket(&e, &z), z);
        let x = basis_vector(g.dim(), g.neg_index(4));
        let minus_x: Vec<Rational> = x.iter().map(|c| -c.clone()).collect();
        assert_eq!(g.bracket(&e, &x), minus_x);
    }

    #[test]
    fn bracket_matches_matrix_commutator() {
        // Oracle: the bracket in coordinates equals AB - BA in the defining
        // representation, on pseudo-random pairs.
        use rand::{Rng, SeedableRng};
        let g = GradedLieAlgebra::projective(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let x: Vec<Rational> = (0..g.dim()).map(|_| rat(rng.gen_range(-3..=3))).collect();
            let y: Vec<Rational> = (0..g.dim()).map(|_| rat(rng.gen_range(-3..=3))).collect();
            let br = g.bracket(&x, &y);
            let (mx, my) = (g.matrix_of(&x), g.matrix_of(&y));
            let comm = mx.mul(&my).sub(&my.mul(&mx));
            assert_eq!(g.matrix_of(&br), comm);
        }
    }

    #[test]
    fn bracket_with_self_vanishes() {
        let g = GradedLieAlgebra::projective(2).unwrap();
        let x: Vec<Rational> = (0..g.dim()).map(|i| rat(i as i64 - 3)).collect();
        assert!(g.bracket(&x, &x).iter().all(|c| c.is_zero()));
    }
}
