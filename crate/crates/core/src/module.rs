//! Representations of a |1|-graded Lie algebra with the shifted grading by
//! integer slots 0..r, plus the induced bigradings on End V.

use std::sync::Arc;

use num_traits::Zero;

use crate::exact::{rat, Rational};
use crate::lie::GradedLieAlgebra;
use crate::linalg::QMatrix;

#[derive(Debug)]
pub struct GModule {
    algebra: Arc<GradedLieAlgebra>,
    dim: usize,
    /// Action matrix of each algebra basis element.
    action: Vec<QMatrix>,
    /// Shifted grading: the slot of each module basis vector, in 0..=r.
    slot: Vec<u8>,
    r: u8,
    labels: Vec<String>,
    name: String,
}

impl GModule {
    /// The defining representation.
    pub fn standard(algebra: Arc<GradedLieAlgebra>) -> Arc<GModule> {
        let dim = algebra.rep_size();
        let action: Vec<QMatrix> = (0..algebra.dim())
            .map(|i| algebra.basis_matrix(i).clone())
            .collect();
        let labels = (0..dim).map(|k| format!("e_{k}")).collect();
        Self::assemble(algebra, dim, action, labels, "standard".into())
    }

    pub fn dual(v: &GModule) -> Arc<GModule> {
        let action = v
            .action
            .iter()
            .map(|a| a.transpose().scale(&rat(-1)))
            .collect();
        let labels = v.labels.iter().map(|l| format!("{l}*")).collect();
        Self::assemble(
            v.algebra.clone(),
            v.dim,
            action,
            labels,
            format!("dual({})", v.name),
        )
    }

    /// Symmetric square, on the monomial basis v_i v_j with i <= j.
    pub fn sym2(v: &GModule) -> Arc<GModule> {
        let d = v.dim;
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i..d).map(move |j| (i, j)))
            .collect();
        let index = |a: usize, b: usize| {
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            pairs.iter().position(|&p| p == (i, j)).unwrap()
        };
        let dim = pairs.len();
        let action = v
            .action
            .iter()
            .map(|a| {
                let mut m = QMatrix::zeros(dim, dim);
                for (src, &(i, j)) in pairs.iter().enumerate() {
                    for k in 0..d {
                        // x.(v_i v_j) = (x v_i) v_j + v_i (x v_j)
                        if !a[(k, i)].is_zero() {
                            let dst = index(k, j);
                            m[(dst, src)] += &a[(k, i)];
                        }
                        if !a[(k, j)].is_zero() {
                            let dst = index(i, k);
                            m[(dst, src)] += &a[(k, j)];
                        }
                    }
                }
                m
            })
            .collect();
        let labels = pairs
            .iter()
            .map(|&(i, j)| format!("{}.{}", v.labels[i], v.labels[j]))
            .collect();
        Self::assemble(
            v.algebra.clone(),
            dim,
            action,
            labels,
            format!("sym2({})", v.name),
        )
    }

    /// Alternating square, on the basis v_i ^ v_j with i < j.
    pub fn lambda2(v: &GModule) -> Arc<GModule> {
        let d = v.dim;
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .collect();
        let dim = pairs.len();
        let locate = |a: usize, b: usize| -> Option<(usize, bool)> {
            use std::cmp::Ordering::*;
            match a.cmp(&b) {
                Equal => None,
                Less => Some((pairs.iter().position(|&p| p == (a, b)).unwrap(), false)),
                Greater => Some((pairs.iter().position(|&p| p == (b, a)).unwrap(), true)),
            }
        };
        let action = v
            .action
            .iter()
            .map(|a| {
                let mut m = QMatrix::zeros(dim, dim);
                for (src, &(i, j)) in pairs.iter().enumerate() {
                    for k in 0..d {
                        if !a[(k, i)].is_zero() {
                            if let Some((dst, flip)) = locate(k, j) {
                                let c = if flip {
                                    -a[(k, i)].clone()
                                } else {
                                    a[(k, i)].clone()
                                };
                                m[(dst, src)] += c;
                            }
                        }
                        if !a[(k, j)].is_zero() {
                            if let Some((dst, flip)) = locate(i, k) {
                                let c = if flip {
                                    -a[(k, j)].clone()
                                } else {
                                    a[(k, j)].clone()
                                };
                                m[(dst, src)] += c;
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let labels = pairs
            .iter()
            .map(|&(i, j)| format!("{}^{}", v.labels[i], v.labels[j]))
            .collect();
        Self::assemble(
            v.algebra.clone(),
            dim,
            action,
            labels,
            format!("lambda2({})", v.name),
        )
    }

    /// The adjoint representation on the algebra itself.
    pub fn adjoint(algebra: Arc<GradedLieAlgebra>) -> Arc<GModule> {
        let dim = algebra.dim();
        let action: Vec<QMatrix> = (0..dim)
            .map(|i| {
                QMatrix::from_columns(
                    &(0..dim)
                        .map(|j| algebra.bracket_basis(i, j))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let labels = (0..dim).map(|i| algebra.label(i).to_string()).collect();
        Self::assemble(algebra, dim, action, labels, "adjoint".into())
    }

    /// Re-expresses the module in a new basis. `transform` holds the new basis
    /// vectors as columns in old coordinates; each must be a slot vector.
    pub fn with_basis(&self, transform: &QMatrix, labels: Vec<String>, name: String) -> Arc<GModule> {
        assert_eq!(transform.nrows(), self.dim);
        assert_eq!(transform.ncols(), self.dim);
        let inv = transform.inverse().expect("basis transform must be invertible");
        let action = self
            .action
            .iter()
            .map(|a| inv.mul(&a.mul(transform)))
            .collect();
        Self::assemble(self.algebra.clone(), self.dim, action, labels, name)
    }

    fn assemble(
        algebra: Arc<GradedLieAlgebra>,
        dim: usize,
        action: Vec<QMatrix>,
        labels: Vec<String>,
        name: String,
    ) -> Arc<GModule> {
        // Slots come from the eigenvalues of the grading element, shifted so
        // the smallest is zero.
        let e_mat = {
            let mut m = QMatrix::zeros(dim, dim);
            for (i, c) in algebra.grading_element().iter().enumerate() {
                if !c.is_zero() {
                    m = m.add(&action[i].scale(c));
                }
            }
            m
        };
        let mut eigen: Vec<Rational> = Vec::with_capacity(dim);
        for k in 0..dim {
            let col = e_mat.column(k);
            for (i, c) in col.iter().enumerate() {
                assert!(
                    i == k || c.is_zero(),
                    "module basis vector {k} is not a grading eigenvector"
                );
            }
            eigen.push(col[k].clone());
        }
        let min = eigen.iter().min().cloned().expect("nonempty module");
        let slot: Vec<u8> = eigen
            .iter()
            .map(|ev| {
                let s = ev - &min;
                assert!(s.is_integer(), "non-integer slot spacing");
                let v = s.to_integer();
                u8::try_from(v).expect("slot fits in u8")
            })
            .collect();
        let r = slot.iter().copied().max().unwrap_or(0);

        let module = GModule {
            algebra,
            dim,
            action,
            slot,
            r,
            labels,
            name,
        };
        module.validate();
        Arc::new(module)
    }

    /// Homomorphism property on all basis pairs and slot compatibility of
    /// every action matrix.
    fn validate(&self) {
        let g = &self.algebra;
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let lhs = {
                    let br = g.bracket_basis(i, j);
                    let mut m = QMatrix::zeros(self.dim, self.dim);
                    for (k, c) in br.iter().enumerate() {
                        if !c.is_zero() {
                            m = m.add(&self.action[k].scale(c));
                        }
                    }
                    m
                };
                let rhs = self.action[i]
                    .mul(&self.action[j])
                    .sub(&self.action[j].mul(&self.action[i]));
                assert_eq!(lhs, rhs, "action is not a homomorphism at pair ({i}, {j})");
            }
        }
        for i in 0..g.dim() {
            let d = g.degree(i) as i16;
            for out in 0..self.dim {
                for inp in 0..self.dim {
                    if !self.action[i][(out, inp)].is_zero() {
                        assert_eq!(
                            self.slot[out] as i16,
                            self.slot[inp] as i16 + d,
                            "action of degree {d} breaks the slot grading"
                        );
                    }
                }
            }
        }
        assert!(self.slot.iter().any(|&s| s == 0), "minimum slot must be 0");
        assert!(self.slot.iter().any(|&s| s == self.r), "top slot must be r");
    }

    pub fn algebra(&self) -> &Arc<GradedLieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn slot(&self, k: usize) -> u8 {
        self.slot[k]
    }

    pub fn slots(&self) -> &[u8] {
        &self.slot
    }

    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn action_matrix(&self, algebra_index: usize) -> &QMatrix {
        &self.action[algebra_index]
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, x: &[Rational]) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.action_of(x).mul_vec(v)
    }

    /// Dimension of each slot, indexed by slot degree.
    pub fn slot_dims(&self) -> Vec<usize> {
        let mut dims = vec![0usize; self.r as usize + 1];
        for &s in &self.slot {
            dims[s as usize] += 1;
        }
        dims
    }

    pub fn end_grading(self: &Arc<Self>) -> EndGrading {
        EndGrading {
            module: self.clone(),
        }
    }
}

/// The bigradings on End V = V (x) V^*: the vertical degree of a component is
/// the slot of its output leg, the horizontal degree is minus the slot of its
/// input leg, and the diagonal degree is their sum.
#[derive(Debug, Clone)]
pub struct EndGrading {
    module: Arc<GModule>,
}

impl EndGrading {
    pub fn vertical(&self, out: usize) -> i16 {
        self.module.slot(out) as i16
    }

    pub fn horizontal(&self, inp: usize) -> i16 {
        -(self.module.slot(inp) as i16)
    }

    pub fn diagonal(&self, out: usize, inp: usize) -> i16 {
        self.vertical(out) + self.horizontal(inp)
    }

    /// The component of an endomorphism matrix with diagonal degree exactly l.
    pub fn diagonal_part(&self, m: &QMatrix, l: i16) -> QMatrix {
        QMatrix::from_fn(m.nrows(), m.ncols(), |out, inp| {
            if self.diagonal(out, inp) == l {
                m[(out, inp)].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn vertical_part(&self, m: &QMatrix, v: i16) -> QMatrix {
        QMatrix::from_fn(m.nrows(), m.ncols(), |out, inp| {
            if self.vertical(out) == v {
                m[(out, inp)].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Whether the matrix lies in the diagonal filtration level >= l.
    pub fn in_diagonal_filtration(&self, m: &QMatrix, l: i16) -> bool {
        for out in 0..m.nrows() {
            for inp in 0..m.ncols() {
                if !m[(out, inp)].is_zero() && self.diagonal(out, inp) < l {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::basis_vector;

    fn proj(n: usize) -> Arc<GradedLieAlgebra> {
        Arc::new(GradedLieAlgebra::projective(n).unwrap())
    }

    #[test]
    fn sym2_projective_slots() {
        // Sym^2 of the standard sl(4)-module: dim 10, slot dims (6, 3, 1)
        // for slots (0, 1, 2) — the (sigma, mu, rho) decomposition.
        let g = proj(3);
        let v = GModule::standard(g);
        let s = GModule::sym2(&v);
        assert_eq!(s.dim(), 10);
        assert_eq!(s.r(), 2);
        assert_eq!(s.slot_dims(), vec![6, 3, 1]);
    }

    #[test]
    fn lambda2_grassmann_slots() {
        let g = Arc::new(GradedLieAlgebra::grassmannian(3).unwrap());
        let v = GModule::standard(g);
        let l = GModule::lambda2(&v);
        assert_eq!(l.dim(), 10);
        assert_eq!(l.r(), 2);
        // slots: Lambda^2 R^3 (dim 3) at 0, R^2 (x) R^3 (dim 6) at 1,
        // Lambda^2 R^2 (dim 1) at 2.
        assert_eq!(l.slot_dims(), vec![3, 6, 1]);
    }

    #[test]
    fn adjoint_slots_shift_degree() {
        let g = proj(2);
        let a = GModule::adjoint(g.clone());
        assert_eq!(a.r(), 2);
        for i in 0..g.dim() {
            assert_eq!(a.slot(i) as i16, g.degree(i) as i16 + 1);
        }
    }

    #[test]
    fn negative_direction_lowers_slot() {
        let g = proj(3);
        let v = GModule::standard(g.clone());
        let s = GModule::sym2(&v);
        let x = g.neg_index(0);
        let a = s.action_matrix(x);
        for out in 0..s.dim() {
            for inp in 0..s.dim() {
                if !a[(out, inp)].is_zero() {
                    assert_eq!(s.slot(out) + 1, s.slot(inp));
                }
            }
        }
    }

    #[test]
    fn grading_element_acts_by_slot_after_shift() {
        let g = proj(2);
        let v = GModule::standard(g.clone());
        let s = GModule::sym2(&v);
        // act(E) + shift = slot on each basis vector
        let e = s.action_of(g.grading_element());
        let min = (0..s.dim())
            .map(|k| e[(k, k)].clone())
            .min()
            .unwrap();
        for k in 0..s.dim() {
            let shifted = &e[(k, k)] - &min;
            assert_eq!(shifted, rat(s.slot(k) as i64));
        }
    }

    #[test]
    fn sym2_action_is_symmetrized_leibniz() {
        // Oracle: on decomposable elements, the sym2 action agrees with the
        // Leibniz rule computed in the standard module.
        use rand::{Rng, SeedableRng};
        let g = proj(3);
        let v = GModule::standard(g.clone());
        let s = GModule::sym2(&v);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let d = v.dim();
        let mono = |i: usize, j: usize| -> usize {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            (0..d)
                .flat_map(|a| (a..d).map(move |b| (a, b)))
                .position(|p| p == (i, j))
                .unwrap()
        };
        for _ in 0..20 {
            let x: Vec<Rational> = (0..g.dim()).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let a: Vec<Rational> = (0..d).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let b: Vec<Rational> = (0..d).map(|_| rat(rng.gen_range(-2..=2))).collect();
            // a.b as a sym2 vector
            let mut ab = vec![Rational::zero(); s.dim()];
            for i in 0..d {
                for j in 0..d {
                    ab[mono(i, j)] += &a[i] * &b[j];
                }
            }
            let lhs = s.act(&x, &ab);
            // (xa).b + a.(xb)
            let xa = v.act(&x, &a);
            let xb = v.act(&x, &b);
            let mut rhs = vec![Rational::zero(); s.dim()];
            for i in 0..d {
                for j in 0..d {
                    rhs[mono(i, j)] += &xa[i] * &b[j];
                    rhs[mono(i, j)] += &a[i] * &xb[j];
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn end_grading_consistency() {
        let g = proj(2);
        let v = GModule::standard(g);
        let s = GModule::sym2(&v);
        let grading = s.end_grading();
        let m = QMatrix::from_fn(s.dim(), s.dim(), |_, _| rat(1));
        // The diagonal parts must reassemble the matrix.
        let mut sum = QMatrix::zeros(s.dim(), s.dim());
        for l in -(s.r() as i16)..=(s.r() as i16) {
            sum = sum.add(&grading.diagonal_part(&m, l));
        }
        assert_eq!(sum, m);
        for out in 0..s.dim() {
            for inp in 0..s.dim() {
                assert_eq!(
                    grading.diagonal(out, inp),
                    grading.vertical(out) + grading.horizontal(inp)
                );
            }
        }
        assert!(grading.in_diagonal_filtration(&grading.diagonal_part(&m, 1), 1));
        // Act of E on a dual pair: vertical filtration is nested/exhaustive.
        let x = basis_vector(s.dim(), 0);
        assert_eq!(x.len(), s.dim());
    }
}
