//! Chain spaces Lambda^j g_1 (x) V, the Kostant differentials and Laplacian,
//! and the exact Hodge decomposition with homology projections.
//!
//! Conventions, fixed once against the displayed projective formulas: a
//! j-chain is a j-form on the tangent directions via the dual-basis pairing of
//! g_1 with g_{-1}, the raising differential is
//!   (del phi)(X_0,..,X_j) = sum_i (-1)^i X_i . phi(.., X_i omitted, ..),
//! and the lowering one is
//!   del*(Z_1 ^ .. ^ Z_j (x) v) = sum_i (-1)^{i+1} Z_1 ^ .. ^ Z_j (x) Z_i . v
//! with the i-th factor removed.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::Rational;
use crate::linalg::QMatrix;
use crate::module::GModule;

#[derive(Debug, Error)]
pub enum KostantError {
    #[error("chain degree {0} out of range (max {1})")]
    DegreeOutOfRange(usize, usize),
    #[error("homology projection applied to a chain outside Ker del*")]
    ProjectionOffKernel,
}

/// The space Lambda^j g_1 (x) V. Basis elements are (sorted tangent-index
/// tuple, module basis vector); the flat index is tuple-major.
#[derive(Debug)]
pub struct ChainSpace {
    module: Arc<GModule>,
    degree: usize,
    tuples: Vec<Vec<usize>>,
}

impl ChainSpace {
    fn new(module: Arc<GModule>, degree: usize) -> Arc<Self> {
        let n = module.algebra().n_neg();
        let tuples = sorted_tuples(n, degree);
        Arc::new(ChainSpace {
            module,
            degree,
            tuples,
        })
    }

    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn n_tuples(&self) -> usize {
        self.tuples.len()
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.module.dim()
    }

    pub fn index(&self, tuple_rank: usize, module_index: usize) -> usize {
        tuple_rank * self.module.dim() + module_index
    }

    pub fn decompose(&self, index: usize) -> (usize, usize) {
        (index / self.module.dim(), index % self.module.dim())
    }

    pub fn tuple_rank(&self, tuple: &[usize]) -> Option<usize> {
        self.tuples.iter().position(|t| t == tuple)
    }

    /// Homogeneity of a basis element: form degree plus module slot.
    pub fn homogeneity(&self, index: usize) -> i16 {
        let (_, m) = self.decompose(index);
        self.degree as i16 + self.module.slot(m) as i16
    }

    pub fn label(&self, index: usize) -> String {
        let (t, m) = self.decompose(index);
        if self.degree == 0 {
            self.module.label(m).to_string()
        } else {
            let dirs: Vec<String> = self.tuples[t].iter().map(|d| format!("d{d}")).collect();
            format!("{}({})", self.module.label(m), dirs.join("^"))
        }
    }
}

fn sorted_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next combination in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// An exact linear map between chain spaces, with block extraction by
/// homogeneity offset.
#[derive(Debug, Clone)]
pub struct GradedLinearMap {
    src: Arc<ChainSpace>,
    dst: Arc<ChainSpace>,
    mat: QMatrix,
}

impl GradedLinearMap {
    pub fn new(src: Arc<ChainSpace>, dst: Arc<ChainSpace>, mat: QMatrix) -> Self {
        assert_eq!(mat.ncols(), src.dim());
        assert_eq!(mat.nrows(), dst.dim());
        GradedLinearMap { src, dst, mat }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.mat
    }

    pub fn src(&self) -> &Arc<ChainSpace> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<ChainSpace> {
        &self.dst
    }

    /// The block whose target homogeneity minus source homogeneity is `offset`.
    pub fn gr_extract(&self, offset: i16) -> GradedLinearMap {
        let mat = QMatrix::from_fn(self.mat.nrows(), self.mat.ncols(), |i, j| {
            if self.dst.homogeneity(i) - self.src.homogeneity(j) == offset {
                self.mat[(i, j)].clone()
            } else {
                Rational::zero()
            }
        });
        GradedLinearMap {
            src: self.src.clone(),
            dst: self.dst.clone(),
            mat,
        }
    }

    /// All offsets carrying a nonzero block.
    pub fn offsets(&self) -> Vec<i16> {
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..self.mat.nrows() {
            for j in 0..self.mat.ncols() {
                if !self.mat[(i, j)].is_zero() {
                    seen.insert(self.dst.homogeneity(i) - self.src.homogeneity(j));
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Hodge data on a fixed chain degree: bases of Ker box, Im del, Im del*, the
/// change-of-basis matrix, projectors, and the inverse of box on Im del*.
#[derive(Debug)]
pub struct HodgeData {
    chain: Arc<ChainSpace>,
    harmonic: QMatrix,
    im_del: QMatrix,
    im_del_star: QMatrix,
    /// Full-space matrix acting as (box|_{Im del*})^{-1} after projection
    /// onto Im del* along Ker box + Im del.
    box_inv: QMatrix,
    proj_im_del_star: QMatrix,
    proj_harmonic_coords: QMatrix,
    ker_del_star: QMatrix,
}

impl HodgeData {
    pub fn chain(&self) -> &Arc<ChainSpace> {
        &self.chain
    }

    pub fn homology_dim(&self) -> usize {
        self.harmonic.ncols()
    }

    pub fn harmonic_basis(&self) -> &QMatrix {
        &self.harmonic
    }

    pub fn im_del_star_basis(&self) -> &QMatrix {
        &self.im_del_star
    }

    pub fn im_del_basis(&self) -> &QMatrix {
        &self.im_del
    }

    /// Harmonic representative of a homology class.
    pub fn lift(&self, h: &[Rational]) -> Vec<Rational> {
        self.harmonic.mul_vec(h)
    }

    /// Harmonic coordinates, without the closedness guard (for fields whose
    /// closedness the caller has already established).
    pub fn harmonic_coords_matrix(&self) -> &QMatrix {
        &self.proj_harmonic_coords
    }

    pub fn box_inverse_matrix(&self) -> &QMatrix {
        &self.box_inv
    }

    pub fn proj_im_del_star_matrix(&self) -> &QMatrix {
        &self.proj_im_del_star
    }

    pub fn in_im_del_star(&self, v: &[Rational]) -> bool {
        let p = self.proj_im_del_star.mul_vec(v);
        p.iter().zip(v).all(|(a, b)| a == b)
    }

    /// Basis of Ker del* on this degree.
    pub fn ker_del_star_basis(&self) -> &QMatrix {
        &self.ker_del_star
    }
}

/// The full complex for one module: chain spaces up to a chosen degree, the
/// differentials, Laplacians and Hodge decompositions.
#[derive(Debug)]
pub struct KostantComplex {
    module: Arc<GModule>,
    max_degree: usize,
    chains: Vec<Arc<ChainSpace>>,
    del: Vec<GradedLinearMap>,
    del_star: Vec<GradedLinearMap>,
    laplacian: Vec<GradedLinearMap>,
    hodge: Vec<HodgeData>,
}

impl KostantComplex {
    /// Builds chains 0..=max_degree with all maps, Laplacians, and Hodge data
    /// for degrees 0..max_degree. Structural identities (complex property,
    /// Hodge spanning, invertibility of box on Im del*, Kostant disjointness)
    /// are verified exactly during construction.
    pub fn new(module: Arc<GModule>, max_degree: usize) -> Arc<Self> {
        Self::build(module, max_degree, true)
    }

    /// Maps only, no Hodge data; used for diagnostics.
    #[doc(hidden)]
    pub fn new_maps_only(module: Arc<GModule>, max_degree: usize) -> Arc<Self> {
        Self::build(module, max_degree, false)
    }

    fn build(module: Arc<GModule>, max_degree: usize, with_hodge: bool) -> Arc<Self> {
        let n = module.algebra().n_neg();
        let max_degree = max_degree.min(n);
        let chains: Vec<Arc<ChainSpace>> = (0..=max_degree)
            .map(|j| ChainSpace::new(module.clone(), j))
            .collect();

        let del: Vec<GradedLinearMap> = (0..max_degree)
            .map(|j| del_matrix(&chains[j], &chains[j + 1]))
            .collect();
        let del_star: Vec<GradedLinearMap> = (0..=max_degree)
            .map(|j| {
                if j == 0 {
                    // del* on 0-chains is the zero map to a trivial target.
                    GradedLinearMap::new(
                        chains[0].clone(),
                        chains[0].clone(),
                        QMatrix::zeros(chains[0].dim(), chains[0].dim()),
                    )
                } else {
                    del_star_matrix(&chains[j], &chains[j - 1])
                }
            })
            .collect();

        let laplacian: Vec<GradedLinearMap> = (0..=max_degree)
            .map(|j| {
                let mut m = QMatrix::zeros(chains[j].dim(), chains[j].dim());
                if j > 0 {
                    m = m.add(&del[j - 1].matrix().mul(del_star[j].matrix()));
                }
                if j < max_degree {
                    m = m.add(&del_star[j + 1].matrix().mul(del[j].matrix()));
                }
                GradedLinearMap::new(chains[j].clone(), chains[j].clone(), m)
            })
            .collect();

        let hodge: Vec<HodgeData> = if with_hodge {
            (0..max_degree)
                .map(|j| build_hodge(&chains, &del, &del_star, &laplacian, j))
                .collect()
        } else {
            Vec::new()
        };

        let complex = KostantComplex {
            module,
            max_degree,
            chains,
            del,
            del_star,
            laplacian,
            hodge,
        };
        if with_hodge {
            complex.validate();
        }
        Arc::new(complex)
    }

    fn validate(&self) {
        for j in 0..self.max_degree.saturating_sub(1) {
            let dd = self.del[j + 1].matrix().mul(self.del[j].matrix());
            assert!(dd.is_zero(), "del . del != 0 at degree {j}");
        }
        for j in 2..=self.max_degree {
            let dd = self.del_star[j - 1].matrix().mul(self.del_star[j].matrix());
            assert!(dd.is_zero(), "del* . del* != 0 at degree {j}");
        }
        // del and del* are homogeneous of offset zero.
        for m in self.del.iter().chain(self.del_star.iter().skip(1)) {
            assert!(
                m.offsets().iter().all(|&o| o == 0),
                "differential is not homogeneity-preserving"
            );
        }
        // Kostant disjointness Ker del* /\ Im del = 0, used by the uniqueness
        // argument for the prolongation connection.
        for j in 1..self.max_degree {
            let ker = self.hodge[j].ker_del_star_basis();
            let im = self.hodge[j].im_del_basis();
            if ker.ncols() > 0 && im.ncols() > 0 {
                let stacked = ker.hstack(im);
                assert_eq!(
                    stacked.rank(),
                    ker.ncols() + im.ncols(),
                    "Ker del* meets Im del at degree {j}"
                );
            }
        }
    }

    pub fn module(&self) -> &Arc<GModule> {
        &self.module
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn chain(&self, j: usize) -> &Arc<ChainSpace> {
        &self.chains[j]
    }

    pub fn try_del(&self, j: usize) -> Result<&GradedLinearMap, KostantError> {
        self.del
            .get(j)
            .ok_or(KostantError::DegreeOutOfRange(j, self.max_degree))
    }

    /// del on j-chains (raising the form degree).
    pub fn del(&self, j: usize) -> &GradedLinearMap {
        self.try_del(j).unwrap()
    }

    pub fn try_del_star(&self, j: usize) -> Result<&GradedLinearMap, KostantError> {
        if j == 0 || j > self.max_degree {
            return Err(KostantError::DegreeOutOfRange(j, self.max_degree));
        }
        Ok(&self.del_star[j])
    }

    /// del* on j-chains (lowering the form degree); j >= 1.
    pub fn del_star(&self, j: usize) -> &GradedLinearMap {
        self.try_del_star(j).unwrap()
    }

    pub fn try_laplacian(&self, j: usize) -> Result<&GradedLinearMap, KostantError> {
        self.laplacian
            .get(j)
            .ok_or(KostantError::DegreeOutOfRange(j, self.max_degree))
    }

    pub fn laplacian(&self, j: usize) -> &GradedLinearMap {
        self.try_laplacian(j).unwrap()
    }

    /// Hodge data at degree j (available for j < max_degree).
    pub fn hodge(&self, j: usize) -> &HodgeData {
        &self.hodge[j]
    }

    pub fn has_hodge(&self, j: usize) -> bool {
        j < self.hodge.len()
    }

    /// Canonical surjection onto homology at degree j, in harmonic
    /// coordinates. Rejects chains outside Ker del* instead of silently
    /// projecting first.
    pub fn pi(&self, j: usize, chain: &[Rational]) -> Result<Vec<Rational>, KostantError> {
        if j > 0 {
            let img = self.del_star[j].matrix().mul_vec(chain);
            if !img.iter().all(|x| x.is_zero()) {
                return Err(KostantError::ProjectionOffKernel);
            }
        }
        Ok(self.hodge[j].harmonic_coords_matrix().mul_vec(chain))
    }

    /// Harmonic representative of a homology class at degree j.
    pub fn lift(&self, j: usize, h: &[Rational]) -> Vec<Rational> {
        self.hodge[j].lift(h)
    }

    /// Exact spectrum of the Laplacian on j-chains: eigenvalues with
    /// multiplicities, via the minimal polynomial and rational root search.
    pub fn spectrum(&self, j: usize) -> Vec<(Rational, usize)> {
        let m = self.laplacian(j).matrix();
        let eigen = rational_eigenvalues(m);
        let mut out = Vec::new();
        let mut total = 0usize;
        for lam in eigen {
            let d = m.nrows();
            let shifted = QMatrix::from_fn(d, d, |a, b| {
                if a == b {
                    &m[(a, b)] - &lam
                } else {
                    m[(a, b)].clone()
                }
            });
            let mult = d - shifted.rank();
            assert!(mult > 0);
            total += mult;
            out.push((lam, mult));
        }
        assert_eq!(
            total,
            m.nrows(),
            "Laplacian is not semisimple with rational spectrum"
        );
        out
    }
}

fn del_matrix(src: &Arc<ChainSpace>, dst: &Arc<ChainSpace>) -> GradedLinearMap {
    let module = src.module();
    let md = module.dim();
    let alg = module.algebra();
    let mut mat = QMatrix::zeros(dst.dim(), src.dim());
    for (trank, tuple) in dst.tuples().iter().enumerate() {
        for (pos, &dir) in tuple.iter().enumerate() {
            let mut rest = tuple.clone();
            rest.remove(pos);
            let srank = src.tuple_rank(&rest).expect("subtuple exists");
            let action = module.action_matrix(alg.neg_index(dir));
            let sign = if pos % 2 == 0 { 1i64 } else { -1 };
            for out in 0..md {
                for inp in 0..md {
                    let a = &action[(out, inp)];
                    if !a.is_zero() {
                        let v = if sign > 0 { a.clone() } else { -a.clone() };
                        mat[(dst.index(trank, out), src.index(srank, inp))] += v;
                    }
                }
            }
        }
    }
    GradedLinearMap::new(src.clone(), dst.clone(), mat)
}

fn del_star_matrix(src: &Arc<ChainSpace>, dst: &Arc<ChainSpace>) -> GradedLinearMap {
    let module = src.module();
    let md = module.dim();
    let alg = module.algebra();
    let mut mat = QMatrix::zeros(dst.dim(), src.dim());
    for (srank, tuple) in src.tuples().iter().enumerate() {
        for (pos, &dir) in tuple.iter().enumerate() {
            let mut rest = tuple.clone();
            rest.remove(pos);
            let trank = dst.tuple_rank(&rest).expect("subtuple exists");
            let action = module.action_matrix(alg.pos_index(dir));
            // (-1)^{i+1} with i the 1-based position.
            let sign = if pos % 2 == 0 { 1i64 } else { -1 };
            for out in 0..md {
                for inp in 0..md {
                    let a = &action[(out, inp)];
                    if !a.is_zero() {
                        let v = if sign > 0 { a.clone() } else { -a.clone() };
                        mat[(dst.index(trank, out), src.index(srank, inp))] += v;
                    }
                }
            }
        }
    }
    GradedLinearMap::new(src.clone(), dst.clone(), mat)
}

fn build_hodge(
    chains: &[Arc<ChainSpace>],
    del: &[GradedLinearMap],
    del_star: &[GradedLinearMap],
    laplacian: &[GradedLinearMap],
    j: usize,
) -> HodgeData {
    let chain = chains[j].clone();
    let d = chain.dim();
    let box_mat = laplacian[j].matrix();

    let harmonic = QMatrix::from_columns(&box_mat.nullspace());

    let im_del = if j > 0 {
        image_basis(del[j - 1].matrix())
    } else {
        QMatrix::zeros(d, 0)
    };
    let im_del_star = image_basis(del_star[j + 1].matrix());

    let ker_del_star = if j == 0 {
        QMatrix::identity(d)
    } else {
        QMatrix::from_columns(&del_star[j].matrix().nullspace())
    };

    let t = harmonic.hstack(&im_del).hstack(&im_del_star);
    if t.ncols() != d {
        eprintln!(
            "DIAG degree {j}: harm {} imdel {} imds {} total {} dim {d}",
            harmonic.ncols(),
            im_del.ncols(),
            im_del_star.ncols(),
            t.ncols()
        );
    }
    assert_eq!(
        t.ncols(),
        d,
        "Hodge components do not have complementary dimensions at degree {j}"
    );
    let t_inv = t
        .inverse()
        .unwrap_or_else(|| panic!("Hodge components do not span at degree {j}"));

    let h = harmonic.ncols();
    let kd = im_del.ncols();
    let ks = im_del_star.ncols();

    let rows = |from: usize, count: usize| {
        QMatrix::from_fn(count, d, |i, c| t_inv[(from + i, c)].clone())
    };
    let coords_harm = rows(0, h);
    let coords_star = rows(h + kd, ks);

    let proj_im_del_star = im_del_star.mul(&coords_star);

    // box restricted to Im del*, inverted in that basis.
    let box_inv = if ks > 0 {
        let box_b = box_mat.mul(&im_del_star);
        let m = solve_in_basis(&im_del_star, &box_b);
        let m_inv = m
            .inverse()
            .unwrap_or_else(|| panic!("box is singular on Im del* at degree {j}"));
        im_del_star.mul(&m_inv).mul(&coords_star)
    } else {
        QMatrix::zeros(d, d)
    };

    HodgeData {
        chain,
        harmonic,
        im_del,
        im_del_star,
        box_inv,
        proj_im_del_star,
        proj_harmonic_coords: coords_harm,
        ker_del_star,
    }
}

/// Basis of the column space: the pivot columns themselves.
fn image_basis(m: &QMatrix) -> QMatrix {
    let cols = m.independent_columns();
    QMatrix::from_columns(&cols.iter().map(|&c| m.column(c)).collect::<Vec<_>>())
}

/// Coordinates of the columns of `b` in the column basis `basis`.
fn solve_in_basis(basis: &QMatrix, b: &QMatrix) -> QMatrix {
    basis
        .solve_matrix(b)
        .expect("columns lie in the span of the basis")
}

/// All eigenvalues of a matrix known to be semisimple with rational spectrum.
fn rational_eigenvalues(m: &QMatrix) -> Vec<Rational> {
    let p = minimal_polynomial(m);
    rational_roots(&p)
}

/// Minimal polynomial coefficients (low to high), found as the first linear
/// dependence among vectorized powers of the matrix.
fn minimal_polynomial(m: &QMatrix) -> Vec<Rational> {
    let d = m.nrows();
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    let mut cur = QMatrix::identity(d);
    loop {
        let mut v = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                v.push(cur[(i, j)].clone());
            }
        }
        powers.push(v);
        let k = powers.len();
        let a = QMatrix::from_columns(&powers);
        if a.rank() < k {
            // Last power is dependent on the earlier ones.
            let prev = QMatrix::from_columns(&powers[..k - 1].to_vec());
            let x = prev
                .solve(&powers[k - 1])
                .expect("dependence found by rank drop");
            let mut coeffs: Vec<Rational> = x.iter().map(|c| -c.clone()).collect();
            coeffs.push(Rational::one());
            return coeffs;
        }
        cur = cur.mul(m);
    }
}

/// Rational roots of a rational-coefficient polynomial with all roots rational.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    // Strip zero roots, scale to integers, enumerate divisors.
    let mut c = coeffs.to_vec();
    let mut roots = Vec::new();
    while c.first().map(|x| x.is_zero()).unwrap_or(false) {
        roots.push(Rational::zero());
        c.remove(0);
    }
    if c.len() <= 1 {
        roots.sort();
        roots.dedup();
        return roots;
    }
    let mut lcm = BigInt::one();
    for x in &c {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&p * BigInt::from(sign), q.clone());
                if eval_poly(&c, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for ChainSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lambda^{} g1 (x) {} (dim {})",
            self.degree,
            self.module.name(),
            self.dim()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lie::GradedLieAlgebra;

    fn projective_sym2(n: usize, max_degree: usize) -> Arc<KostantComplex> {
        let g = Arc::new(GradedLieAlgebra::projective(n).unwrap());
        let v = GModule::standard(g);
        let s = GModule::sym2(&v);
        KostantComplex::new(s, max_degree)
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(sorted_tuples(4, 2).len(), 6);
        assert_eq!(sorted_tuples(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(sorted_tuples(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn chain_dims_and_homogeneity() {
        let c = projective_sym2(3, 2);
        assert_eq!(c.chain(0).dim(), 10);
        assert_eq!(c.chain(1).dim(), 30);
        assert_eq!(c.chain(2).dim(), 30);
        // 0-chain homogeneities are the slots; 1-chains are shifted by one.
        let ch1 = c.chain(1);
        for idx in 0..ch1.dim() {
            let (_, m) = ch1.decompose(idx);
            assert_eq!(ch1.homogeneity(idx), 1 + ch1.module().slot(m) as i16);
        }
    }

    #[test]
    fn laplacian_spectrum_projective_zero_chains() {
        // Displayed spectrum on Sym^2: (-2n, -(n+1), 0).
        for n in [3usize, 4] {
            let c = projective_sym2(n, 1);
            let spec = c.spectrum(0);
            let expected = vec![
                (rat(-2 * n as i64), 1usize),
                (rat(-(n as i64 + 1)), n),
                (rat(0), n * (n + 1) / 2),
            ];
            let mut got = spec.clone();
            got.sort_by(|a, b| a.0.cmp(&b.0));
            let mut want = expected;
            want.sort_by(|a, b| a.0.cmp(&b.0));
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn homology_projection_contract() {
        use rand::{Rng, SeedableRng};
        let c = projective_sym2(3, 2);
        let h = c.hodge(0);
        // Pi . lift = id on random homology vectors.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let v: Vec<Rational> = (0..h.homology_dim())
                .map(|_| rat(rng.gen_range(-4..=4)))
                .collect();
            let lifted = c.lift(0, &v);
            let back = c.pi(0, &lifted).unwrap();
            assert_eq!(back, v);
        }
        // H_0 is the bottom slot: dim n(n+1)/2.
        assert_eq!(h.homology_dim(), 6);
    }

    #[test]
    fn pi_rejects_non_closed_chains() {
        let c = projective_sym2(3, 2);
        let ch1 = c.chain(1);
        let ds = c.del_star(1);
        // Find a basis chain with nonzero del* image.
        let v = (0..ch1.dim())
            .map(|idx| {
                let mut w = vec![Rational::zero(); ch1.dim()];
                w[idx] = rat(1);
                w
            })
            .find(|w| !ds.matrix().mul_vec(w).iter().all(|x| x.is_zero()))
            .expect("del* is nonzero on 1-chains");
        assert!(matches!(
            c.pi(1, &v),
            Err(KostantError::ProjectionOffKernel)
        ));
    }

    #[test]
    fn gr_extract_reconstruction() {
        use rand::{Rng, SeedableRng};
        let c = projective_sym2(3, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let src = c.chain(0).clone();
        let dst = c.chain(1).clone();
        let m = QMatrix::from_fn(dst.dim(), src.dim(), |_, _| rat(rng.gen_range(-2..=2)));
        let map = GradedLinearMap::new(src, dst, m.clone());
        let mut sum = QMatrix::zeros(map.matrix().nrows(), map.matrix().ncols());
        for o in map.offsets() {
            sum = sum.add(map.gr_extract(o).matrix());
        }
        assert_eq!(sum, m);
        // del is homogeneous: its gr at offset zero is itself.
        let del = c.del(0);
        assert_eq!(del.gr_extract(0).matrix(), del.matrix());
        assert!(del.gr_extract(5).matrix().is_zero());
    }

    #[test]
    fn del_star_rejects_degree_zero() {
        let c = projective_sym2(2, 1);
        assert!(c.try_del_star(0).is_err());
        assert!(c.try_del(5).is_err());
    }
}
