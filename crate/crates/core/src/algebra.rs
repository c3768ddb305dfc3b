//! Exact rational matrices and finite-dimensional commutative ℚ-algebras
//! presented by structure constants.

use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::traits::{One, Zero};
use num::BigInt;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A dense matrix over exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| rat(v))).collect();
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self[(i, j)].is_zero() && !v[j].is_zero())
                    .map(|j| &self[(i, j)] * &v[j])
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= p.clone();
                inv[(col, j)] /= p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let d = &factor * &a[(col, j)];
                    a[(r, j)] -= d;
                    let d = &factor * &inv[(col, j)];
                    inv[(r, j)] -= d;
                }
            }
        }
        Some(inv)
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> RatMatrix {
        let n = perm.len();
        let mut m = RatMatrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = Rat::one();
        }
        m
    }
}

/// A finite-dimensional commutative, associative, unital algebra over ℚ,
/// given by structure constants `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// The optional grading assigns an integer degree to each basis vector; the
/// product must then be degree-additive. No sign conventions are applied.
#[derive(Clone, PartialEq)]
pub struct QAlgebra {
    label: String,
    dim: usize,
    /// Flattened `dim^3` tensor, index `(i*dim + j)*dim + k`.
    structure: Vec<Rat>,
    unit: Vec<Rat>,
    grading: Option<Vec<i64>>,
}

impl fmt::Debug for QAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QAlgebra({}, dim {})", self.label, self.dim)
    }
}

impl QAlgebra {
    pub fn new(
        label: impl Into<String>,
        dim: usize,
        structure: Vec<Rat>,
        unit: Vec<Rat>,
        grading: Option<Vec<i64>>,
    ) -> Result<Arc<Self>> {
        if structure.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::InvalidInput(
                "structure tensor or unit vector has wrong dimensions".into(),
            ));
        }
        if let Some(g) = &grading {
            if g.len() != dim {
                return Err(Error::InvalidInput("grading length mismatch".into()));
            }
        }
        let alg = QAlgebra { label: label.into(), dim, structure, unit, grading };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        // commutativity
        for i in 0..d {
            for j in 0..i {
                for k in 0..d {
                    if self.sc(i, j, k) != self.sc(j, i, k) {
                        return Err(Error::InvalidInput(format!(
                            "{}: product not commutative at ({i},{j})",
                            self.label
                        )));
                    }
                }
            }
        }
        // unitality: unit * e_i = e_i
        for i in 0..d {
            let ei = self.basis_vector(i);
            if self.mul_vec(&self.unit, &ei) != ei {
                return Err(Error::InvalidInput(format!(
                    "{}: unit fails at basis vector {i}",
                    self.label
                )));
            }
        }
        // associativity on basis triples
        for i in 0..d {
            for j in 0..d {
                let eij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul_vec(&eij, &self.basis_vector(k));
                    let right = self.mul_vec(&self.basis_vector(i), &self.mul_basis(j, k));
                    if left != right {
                        return Err(Error::InvalidInput(format!(
                            "{}: product not associative at ({i},{j},{k})",
                            self.label
                        )));
                    }
                }
            }
        }
        // grading: c[i][j][k] != 0 forces deg_k = deg_i + deg_j
        if let Some(g) = &self.grading {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        if !self.sc(i, j, k).is_zero() && g[k] != g[i] + g[j] {
                            return Err(Error::InvalidInput(format!(
                                "{}: product does not respect grading at ({i},{j},{k})",
                                self.label
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn sc(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn structure_constants(&self) -> &[Rat] {
        &self.structure
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim).map(|k| self.sc(i, j, k).clone()).collect()
    }

    pub fn mul_vec(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        let mut out = vec![Rat::zero(); d];
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                let coeff = &a[i] * &b[j];
                for k in 0..d {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        out[k] += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// The rationals as a one-dimensional algebra.
    pub fn rationals() -> Arc<Self> {
        QAlgebra::new("Q", 1, vec![Rat::one()], vec![Rat::one()], None).unwrap()
    }

    /// Functions on an `n`-point set with pointwise product; the unit is the
    /// all-ones vector.
    pub fn functions(label: impl Into<String>, n: usize) -> Arc<Self> {
        let mut structure = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            structure[(i * n + i) * n + i] = Rat::one();
        }
        QAlgebra::new(label, n, structure, vec![Rat::one(); n], None).unwrap()
    }

    /// Tensor product, with basis `(i, j) -> i * dim(b) + j`.
    pub fn tensor(a: &Arc<QAlgebra>, b: &Arc<QAlgebra>) -> Arc<Self> {
        let (da, db) = (a.dim, b.dim);
        let d = da * db;
        let mut structure = vec![Rat::zero(); d * d * d];
        for i1 in 0..da {
            for j1 in 0..da {
                for k1 in 0..da {
                    let ca = a.sc(i1, j1, k1);
                    if ca.is_zero() {
                        continue;
                    }
                    for i2 in 0..db {
                        for j2 in 0..db {
                            for k2 in 0..db {
                                let cb = b.sc(i2, j2, k2);
                                if cb.is_zero() {
                                    continue;
                                }
                                let i = i1 * db + i2;
                                let j = j1 * db + j2;
                                let k = k1 * db + k2;
                                structure[(i * d + j) * d + k] = ca * cb;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![Rat::zero(); d];
        for i in 0..da {
            for j in 0..db {
                unit[i * db + j] = &a.unit[i] * &b.unit[j];
            }
        }
        let grading = match (&a.grading, &b.grading) {
            (Some(ga), Some(gb)) => {
                let mut g = vec![0i64; d];
                for i in 0..da {
                    for j in 0..db {
                        g[i * db + j] = ga[i] + gb[j];
                    }
                }
                Some(g)
            }
            _ => None,
        };
        QAlgebra::new(format!("{}(x){}", a.label, b.label), d, structure, unit, grading)
            .expect("tensor of valid algebras is valid")
    }

    /// Tensor of a list of factors in the given order; the empty tensor is ℚ.
    pub fn tensor_all(factors: &[Arc<QAlgebra>]) -> Arc<Self> {
        match factors {
            [] => QAlgebra::rationals(),
            [one] => one.clone(),
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for f in rest {
                    acc = QAlgebra::tensor(&acc, f);
                }
                acc
            }
        }
    }
}

/// Monomials of total degree at most `max_deg` in `n_gens` variables, in
/// graded lexicographic order. The degree-0 monomial (the unit) is index 0.
fn truncated_monomials(n_gens: usize, max_deg: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; n_gens]];
    for deg in 1..=max_deg {
        let mut stack = vec![(vec![0usize; n_gens], 0usize, deg)];
        while let Some((expo, pos, remaining)) = stack.pop() {
            if pos == n_gens {
                if remaining == 0 {
                    out.push(expo);
                }
                continue;
            }
            // iterate in reverse so pops come out in lexicographic order
            for take in (0..=remaining).rev() {
                let mut next = expo.clone();
                next[pos] = take;
                stack.push((next, pos + 1, remaining - take));
            }
        }
    }
    out
}

/// A polynomial algebra on a finite generator set, truncated above total
/// degree `max_deg` (products landing past the cutoff are zero). Truncation
/// preserves algebra maps induced by generator substitution, which is all
/// this crate needs from polynomial values.
#[derive(Clone, Debug)]
pub struct TruncatedPolynomial {
    pub algebra: Arc<QAlgebra>,
    pub n_gens: usize,
    pub max_deg: usize,
    monomials: Vec<Vec<usize>>,
}

impl TruncatedPolynomial {
    pub fn new(label: impl Into<String>, n_gens: usize, max_deg: usize) -> Self {
        let monomials = truncated_monomials(n_gens, max_deg);
        let d = monomials.len();
        let index: std::collections::HashMap<&Vec<usize>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut structure = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let sum: Vec<usize> =
                    monomials[i].iter().zip(&monomials[j]).map(|(a, b)| a + b).collect();
                if sum.iter().sum::<usize>() <= max_deg {
                    let k = index[&sum];
                    structure[(i * d + j) * d + k] = Rat::one();
                }
            }
        }
        let mut unit = vec![Rat::zero(); d];
        unit[0] = Rat::one();
        let grading: Vec<i64> =
            monomials.iter().map(|m| m.iter().sum::<usize>() as i64).collect();
        let algebra = QAlgebra::new(label, d, structure, unit, Some(grading))
            .expect("truncated polynomial algebra is valid");
        TruncatedPolynomial { algebra, n_gens, max_deg, monomials }
    }

    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    pub fn monomial_index(&self, expo: &[usize]) -> Option<usize> {
        self.monomials.iter().position(|m| m == expo)
    }

    /// Basis index of the generator `x_i`.
    pub fn generator_index(&self, i: usize) -> usize {
        let mut expo = vec![0usize; self.n_gens];
        expo[i] = 1;
        self.monomial_index(&expo).expect("generator monomial exists for max_deg >= 1")
    }

    /// The algebra map induced by sending generator `i` of `self` to
    /// generator `gen_images[i]` of `target`.
    pub fn substitution_map(
        &self,
        target: &TruncatedPolynomial,
        gen_images: &[usize],
    ) -> AlgebraMap {
        assert_eq!(gen_images.len(), self.n_gens);
        assert_eq!(self.max_deg, target.max_deg);
        let mut matrix = RatMatrix::zeros(target.algebra.dim(), self.algebra.dim());
        for (j, mono) in self.monomials.iter().enumerate() {
            let mut image = vec![0usize; target.n_gens];
            for (g, &e) in mono.iter().enumerate() {
                image[gen_images[g]] += e;
            }
            let i = target
                .monomial_index(&image)
                .expect("degree is preserved by substitution");
            matrix[(i, j)] = Rat::one();
        }
        AlgebraMap::new(&self.algebra, &target.algebra, matrix)
            .expect("substitution is an algebra map")
    }

    /// The automorphism scaling generator `gen` by `factor` (nonzero).
    pub fn scale_generator(&self, gen: usize, factor: &Rat) -> AlgebraMap {
        assert!(!factor.is_zero());
        let d = self.algebra.dim();
        let mut matrix = RatMatrix::zeros(d, d);
        for (j, mono) in self.monomials.iter().enumerate() {
            let mut coeff = Rat::one();
            for _ in 0..mono[gen] {
                coeff *= factor;
            }
            matrix[(j, j)] = coeff;
        }
        AlgebraMap::new(&self.algebra, &self.algebra, matrix)
            .expect("generator scaling is an algebra map")
    }
}

/// A unital algebra homomorphism, stored as a matrix acting on coordinate
/// columns (target_dim x source_dim).
#[derive(Clone, PartialEq)]
pub struct AlgebraMap {
    pub source: Arc<QAlgebra>,
    pub target: Arc<QAlgebra>,
    pub matrix: RatMatrix,
}

impl fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraMap({} -> {})", self.source.label(), self.target.label())
    }
}

impl AlgebraMap {
    pub fn new(source: &Arc<QAlgebra>, target: &Arc<QAlgebra>, matrix: RatMatrix) -> Result<Self> {
        let map = AlgebraMap { source: source.clone(), target: target.clone(), matrix };
        map.validate()?;
        Ok(map)
    }

    /// Builds without homomorphism validation; used for negative controls in
    /// functor checking, where invalid maps must be representable.
    pub fn new_unvalidated(
        source: &Arc<QAlgebra>,
        target: &Arc<QAlgebra>,
        matrix: RatMatrix,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidInput("algebra map matrix has wrong shape".into()));
        }
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn validate(&self) -> Result<()> {
        if self.matrix.rows() != self.target.dim() || self.matrix.cols() != self.source.dim() {
            return Err(Error::InvalidInput("algebra map matrix has wrong shape".into()));
        }
        if self.matrix.apply(self.source.unit()) != self.target.unit() {
            return Err(Error::InvalidInput(format!(
                "map {} -> {} is not unital",
                self.source.label(),
                self.target.label()
            )));
        }
        for i in 0..self.source.dim() {
            let fi = self.matrix.apply(&self.source.basis_vector(i));
            for j in 0..self.source.dim() {
                let fj = self.matrix.apply(&self.source.basis_vector(j));
                let lhs = self.matrix.apply(&self.source.mul_basis(i, j));
                let rhs = self.target.mul_vec(&fi, &fj);
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!(
                        "map {} -> {} is not multiplicative at basis pair ({i},{j})",
                        self.source.label(),
                        self.target.label()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_homomorphism(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn identity(algebra: &Arc<QAlgebra>) -> Self {
        AlgebraMap {
            source: algebra.clone(),
            target: algebra.clone(),
            matrix: RatMatrix::identity(algebra.dim()),
        }
    }

    pub fn compose(after: &AlgebraMap, before: &AlgebraMap) -> Result<AlgebraMap> {
        if after.source != before.target {
            return Err(Error::InvalidInput(
                "algebra maps are not composable: middle objects differ".into(),
            ));
        }
        Ok(AlgebraMap {
            source: before.source.clone(),
            target: after.target.clone(),
            matrix: after.matrix.mul(&before.matrix),
        })
    }

    pub fn is_identity_matrix(&self) -> bool {
        self.matrix.rows() == self.matrix.cols()
            && self.matrix == RatMatrix::identity(self.matrix.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_inverse_roundtrip() {
        let m = RatMatrix::from_int_rows(&[vec![2, 0], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.mul(&m), RatMatrix::identity(2));
        assert_eq!(inv[(0, 0)], rat_frac(1, 2));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn inverse_of_random_triangular() {
        // lower-triangular with nonzero diagonal is always invertible
        let m = RatMatrix::from_int_rows(&[
            vec![3, 0, 0, 0],
            vec![1, 1, 0, 0],
            vec![7, 2, 2, 0],
            vec![5, 0, 1, 6],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(4));
    }

    #[test]
    fn function_algebra_is_valid_and_pointwise() {
        let a = QAlgebra::functions("F3", 3);
        let x = vec![rat(1), rat(2), rat(0)];
        let y = vec![rat(5), rat(1), rat(7)];
        assert_eq!(a.mul_vec(&x, &y), vec![rat(5), rat(2), rat(0)]);
    }

    #[test]
    fn non_commutative_structure_rejected() {
        // e1*e1 = e0 but only on one side of the symmetry
        let mut structure = vec![Rat::zero(); 8];
        structure[(1 * 2 + 0) * 2 + 1] = Rat::one(); // e1 e0 = e1
        structure[(0 * 2 + 1) * 2 + 1] = Rat::one(); // e0 e1 = e1
        structure[(0 * 2 + 0) * 2 + 0] = Rat::one(); // e0 e0 = e0
        structure[(1 * 2 + 1) * 2 + 0] = Rat::one(); // e1 e1 = e0
        let ok = QAlgebra::new("ok", 2, structure.clone(), vec![rat(1), rat(0)], None);
        assert!(ok.is_ok());
        structure[(1 * 2 + 0) * 2 + 1] = rat(2);
        let bad = QAlgebra::new("bad", 2, structure, vec![rat(1), rat(0)], None);
        assert!(bad.is_err());
    }

    #[test]
    fn truncated_polynomial_products() {
        let p = TruncatedPolynomial::new("P", 2, 2);
        // monomials: 1, y, x ... in graded lex: degree 1: (0,1)? order check
        assert_eq!(p.algebra.dim(), 6); // 1 + 2 + 3
        let x = p.generator_index(0);
        let a = p.algebra.basis_vector(x);
        let x2 = p.algebra.mul_vec(&a, &a);
        // x * x = x^2, lands at the monomial (2,0)
        let idx = p.monomial_index(&[2, 0]).unwrap();
        assert_eq!(x2[idx], Rat::one());
        // degree-2 times degree-1 truncates to zero
        let prod = p.algebra.mul_vec(&x2, &a);
        assert!(prod.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn substitution_maps_are_homomorphisms() {
        let p = TruncatedPolynomial::new("P", 2, 2);
        let q = TruncatedPolynomial::new("Q", 3, 2);
        let f = p.substitution_map(&q, &[2, 0]);
        assert!(f.is_homomorphism());
        // collapsing both generators to one
        let r = TruncatedPolynomial::new("R", 1, 2);
        let g = p.substitution_map(&r, &[0, 0]);
        assert!(g.is_homomorphism());
    }

    #[test]
    fn generator_scaling_is_automorphism() {
        let p = TruncatedPolynomial::new("P", 2, 2);
        let f = p.scale_generator(1, &rat(2));
        assert!(f.is_homomorphism());
        assert!(f.matrix.inverse().is_some());
        assert!(!f.is_identity_matrix());
    }

    #[test]
    fn non_unital_map_rejected() {
        let a = QAlgebra::rationals();
        let m = RatMatrix::from_int_rows(&[vec![0]]);
        assert!(AlgebraMap::new(&a, &a, m.clone()).is_err());
        assert!(AlgebraMap::new_unvalidated(&a, &a, m).is_ok());
    }

    #[test]
    fn tensor_dims_and_units() {
        let a = QAlgebra::functions("A", 2);
        let b = QAlgebra::functions("B", 3);
        let t = QAlgebra::tensor(&a, &b);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.unit(), vec![Rat::one(); 6]);
        let empty = QAlgebra::tensor_all(&[]);
        assert_eq!(empty.dim(), 1);
    }

    #[test]
    fn grading_violation_rejected() {
        let p = TruncatedPolynomial::new("P", 1, 2);
        let mut structure = p.algebra.structure_constants().to_vec();
        let d = p.algebra.dim();
        // force x*x = 1: violates the grading
        let x = p.generator_index(0);
        structure[(x * d + x) * d + 0] = Rat::one();
        structure[(x * d + x) * d + p.monomial_index(&[2]).unwrap()] = Rat::zero();
        let res = QAlgebra::new(
            "bad",
            d,
            structure,
            p.algebra.unit().to_vec(),
            p.algebra.grading().map(|g| g.to_vec()),
        );
        assert!(res.is_err());
    }
}
