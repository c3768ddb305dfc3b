//! The Burnside ring of a finite group, its table of marks, and the
//! rational idempotent basis obtained by inverting the marks matrix.

use std::fmt;
use std::sync::Arc;

use num::traits::{One, Zero};
use num::BigInt;

use crate::algebra::{rat, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::group::{double_cosets, weyl_group, FiniteGroup, Subgroup, SubgroupClasses};

/// The table of marks of a finite group: rows indexed by orbit types `G/K`,
/// columns by subgroup classes `H`, entry `m[K][H] = |(G/K)^H|`. With
/// classes ordered by subgroup order the matrix is lower-triangular, the
/// diagonal entry at `K` is the Weyl group order `|N_G(K)/K|`, and the
/// matrix is invertible over the rationals.
pub struct TableOfMarks {
    group: Arc<FiniteGroup>,
    classes: SubgroupClasses,
    matrix: Vec<Vec<i64>>,
}

impl fmt::Debug for TableOfMarks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableOfMarks({}, {} classes)", self.group.label(), self.classes.len())
    }
}

impl TableOfMarks {
    pub fn compute(group: &Arc<FiniteGroup>) -> Result<Self> {
        let classes = SubgroupClasses::compute(group);
        let n = classes.len();
        let mut matrix = vec![vec![0i64; n]; n];
        for (ki, kc) in classes.classes().iter().enumerate() {
            let k = &kc.representative;
            for (hi, hc) in classes.classes().iter().enumerate() {
                let h = &hc.representative;
                matrix[ki][hi] = fixed_coset_count(group, k, h);
            }
        }
        let tom = TableOfMarks { group: group.clone(), classes, matrix };
        tom.assert_shape()?;
        Ok(tom)
    }

    fn assert_shape(&self) -> Result<()> {
        let n = self.classes.len();
        for k in 0..n {
            for h in (k + 1)..n {
                if self.matrix[k][h] != 0 {
                    return Err(Error::InvalidInput(format!(
                        "table of marks not lower-triangular at ({k},{h})"
                    )));
                }
            }
            let weyl = weyl_group(&self.group, &self.classes.classes()[k].representative)?;
            if self.matrix[k][k] != weyl.group.order() as i64 {
                return Err(Error::InvalidInput(format!(
                    "diagonal mark at class {k} is not the Weyl group order"
                )));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClasses {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn entry(&self, k: usize, h: usize) -> i64 {
        self.matrix[k][h]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn as_rat_matrix(&self) -> RatMatrix {
        RatMatrix::from_int_rows(&self.matrix)
    }

    /// Inverse of the marks matrix over exact rationals.
    pub fn inverse(&self) -> RatMatrix {
        self.as_rat_matrix()
            .inverse()
            .expect("table of marks is invertible: triangular with nonzero diagonal")
    }

    /// The basis element `[G/K_class]`.
    pub fn basis_element(&self, class: usize) -> BurnsideElement<'_> {
        let mut coefficients = vec![Rat::zero(); self.len()];
        coefficients[class] = Rat::one();
        BurnsideElement { table: self, coefficients }
    }

    pub fn zero(&self) -> BurnsideElement<'_> {
        BurnsideElement { table: self, coefficients: vec![Rat::zero(); self.len()] }
    }

    pub fn element(&self, coefficients: Vec<Rat>) -> Result<BurnsideElement<'_>> {
        if coefficients.len() != self.len() {
            return Err(Error::InvalidInput("coefficient vector length mismatch".into()));
        }
        Ok(BurnsideElement { table: self, coefficients })
    }

    /// The class of `[G/G]`, the multiplicative unit.
    pub fn unit(&self) -> BurnsideElement<'_> {
        self.basis_element(self.len() - 1)
    }

    /// Rational idempotents `e_H`: `marks(e_H)` is the indicator vector of
    /// the class `H`. Obtained by solving against the transposed marks
    /// matrix; denominators only involve primes dividing the group order.
    pub fn rational_idempotents(&self) -> Vec<BurnsideElement<'_>> {
        let n = self.len();
        let inv = self.inverse();
        // e_H = sum_K inv[H][K]... we need c with c^T M = delta_H, i.e.
        // M^T c = delta_H, so c is column H of (M^T)^{-1} = row H of M^{-1}.
        (0..n)
            .map(|h| BurnsideElement {
                table: self,
                coefficients: inv.row(h).to_vec(),
            })
            .collect()
    }
}

/// `|(G/K)^H|`: the number of cosets `gK` with `g^{-1} H g ⊆ K`.
fn fixed_coset_count(g: &Arc<FiniteGroup>, k: &Subgroup, h: &Subgroup) -> i64 {
    let mut seen = vec![false; g.order()];
    let mut count = 0i64;
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        for &kk in k.elements() {
            seen[g.mul(x, kk)] = true;
        }
        let xinv = g.inv(x);
        if h.elements().iter().all(|&hh| k.contains(g.mul(g.mul(xinv, hh), x))) {
            count += 1;
        }
    }
    count
}

/// An element of the rational Burnside algebra `A(G) ⊗ ℚ` in the orbit
/// basis `[G/H]`, coefficients indexed by subgroup classes.
pub struct BurnsideElement<'t> {
    table: &'t TableOfMarks,
    coefficients: Vec<Rat>,
}

impl fmt::Debug for BurnsideElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement({:?})", self.coefficients)
    }
}

impl Clone for BurnsideElement<'_> {
    fn clone(&self) -> Self {
        BurnsideElement { table: self.table, coefficients: self.coefficients.clone() }
    }
}

impl PartialEq for BurnsideElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.table, other.table) && self.coefficients == other.coefficients
    }
}

impl BurnsideElement<'_> {
    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    /// The marks vector: the linear extension of the table rows. This is a
    /// ring homomorphism onto pointwise-multiplied vectors.
    pub fn marks(&self) -> Vec<Rat> {
        let n = self.table.len();
        let mut out = vec![Rat::zero(); n];
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for h in 0..n {
                let m = self.table.matrix[k][h];
                if m != 0 {
                    out[h] += c * rat(m);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !std::ptr::eq(self.table, other.table) {
            return Err(Error::GroupMismatch);
        }
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BurnsideElement { table: self.table, coefficients })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BurnsideElement {
            table: self.table,
            coefficients: self.coefficients.iter().map(|x| x * c).collect(),
        }
    }

    /// The bilinear product with `[G/H]·[G/K] = Σ_{HgK} [G/(H ∩ gKg^{-1})]`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if !std::ptr::eq(self.table, other.table) {
            return Err(Error::GroupMismatch);
        }
        let table = self.table;
        let n = table.len();
        let mut out = vec![Rat::zero(); n];
        for (a, ca) in self.coefficients.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coefficients.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let coeff = ca * cb;
                for (class, mult) in basis_product(table, a, b)? {
                    out[class] += &coeff * rat(mult);
                }
            }
        }
        Ok(BurnsideElement { table, coefficients: out })
    }
}

/// Expands `[G/H_a]·[G/H_b]` into basis classes with multiplicities, via
/// double cosets.
fn basis_product(table: &TableOfMarks, a: usize, b: usize) -> Result<Vec<(usize, i64)>> {
    let g = &table.group;
    let h = &table.classes.classes()[a].representative;
    let k = &table.classes.classes()[b].representative;
    let mut out: Vec<(usize, i64)> = Vec::new();
    for dc in double_cosets(g, h, k)? {
        let conj = k.conjugate_by(dc.representative);
        let stab = h.intersection(&conj)?;
        let class = table
            .classes
            .class_index_of(&stab)
            .expect("intersection of subgroups is a subgroup");
        match out.iter_mut().find(|(c, _)| *c == class) {
            Some((_, m)) => *m += 1,
            None => out.push((class, 1)),
        }
    }
    Ok(out)
}

/// Brute-force oracle: decomposes the product G-set `G/H x G/K` into orbits
/// and classifies the stabilizers. Used to cross-check `product`.
pub fn product_oracle(table: &TableOfMarks, a: usize, b: usize) -> Vec<(usize, i64)> {
    let g = &table.group;
    let h = &table.classes.classes()[a].representative;
    let k = &table.classes.classes()[b].representative;
    // cosets as sorted element sets
    let cosets = |s: &Subgroup| -> Vec<Vec<usize>> {
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            let mut coset: Vec<usize> = s.elements().iter().map(|&e| g.mul(x, e)).collect();
            coset.sort_unstable();
            for &y in &coset {
                seen[y] = true;
            }
            out.push(coset);
        }
        out
    };
    let hc = cosets(h);
    let kc = cosets(k);
    let coset_index = |list: &[Vec<usize>], x: usize, s_first: usize| -> usize {
        // the coset containing x * (first element of the listed coset basis)
        let _ = s_first;
        list.iter().position(|c| c.binary_search(&x).is_ok()).unwrap()
    };
    // points of G/H x G/K
    let mut assigned = vec![vec![false; kc.len()]; hc.len()];
    let mut out: Vec<(usize, i64)> = Vec::new();
    for i0 in 0..hc.len() {
        for j0 in 0..kc.len() {
            if assigned[i0][j0] {
                continue;
            }
            // orbit of (i0, j0) under the diagonal action
            let mut orbit = Vec::new();
            for x in g.elements() {
                let i = coset_index(&hc, g.mul(x, hc[i0][0]), 0);
                let j = coset_index(&kc, g.mul(x, kc[j0][0]), 0);
                if !assigned[i][j] {
                    assigned[i][j] = true;
                    orbit.push((i, j));
                }
            }
            // stabilizer of the representative point
            let stab_elems: Vec<usize> = g
                .elements()
                .filter(|&x| {
                    coset_index(&hc, g.mul(x, hc[i0][0]), 0) == i0
                        && coset_index(&kc, g.mul(x, kc[j0][0]), 0) == j0
                })
                .collect();
            let stab = Subgroup::new(g, stab_elems).expect("orbit stabilizer is a subgroup");
            let class = table.classes.class_index_of(&stab).unwrap();
            match out.iter_mut().find(|(c, _)| *c == class) {
                Some((_, m)) => *m += 1,
                None => out.push((class, 1)),
            }
        }
    }
    out.sort_unstable();
    out
}

/// Checks that every denominator in the matrix only involves primes
/// dividing `order`; this is the assertable form of the marks map becoming
/// an isomorphism after inverting the group order.
pub fn denominators_divide_order_power(m: &RatMatrix, order: usize) -> bool {
    let order = BigInt::from(order);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let mut den = m[(i, j)].denom().clone();
            if den == BigInt::from(1) {
                continue;
            }
            // strip every common factor with the group order repeatedly
            loop {
                let g = num::integer::gcd(den.clone(), order.clone());
                if g == BigInt::from(1) {
                    break;
                }
                den /= g;
            }
            if den != BigInt::from(1) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;

    fn tom(spec: &str) -> TableOfMarks {
        TableOfMarks::compute(&FiniteGroup::from_preset(spec).unwrap()).unwrap()
    }

    #[test]
    fn marks_of_trivial_group() {
        let t = tom("C1");
        assert_eq!(t.rows(), &[vec![1]]);
    }

    #[test]
    fn marks_of_c2() {
        let t = tom("C2");
        assert_eq!(t.rows(), &[vec![2, 0], vec![1, 1]]);
    }

    #[test]
    fn marks_of_s3() {
        let t = tom("S3");
        assert_eq!(t.len(), 4);
        let diag: Vec<i64> = (0..4).map(|i| t.entry(i, i)).collect();
        assert_eq!(diag, vec![6, 1, 2, 1]);
        // first column is |G/K|
        let col0: Vec<i64> = (0..4).map(|i| t.entry(i, 0)).collect();
        assert_eq!(col0, vec![6, 3, 2, 1]);
    }

    #[test]
    fn marks_vector_examples() {
        let t = tom("C2");
        // [G/G] has all marks 1
        assert_eq!(t.unit().marks(), vec![rat(1), rat(1)]);
        // [G/1] has marks (2, 0)
        assert_eq!(t.basis_element(0).marks(), vec![rat(2), rat(0)]);
        // zero
        assert_eq!(t.zero().marks(), vec![rat(0), rat(0)]);
    }

    #[test]
    fn unit_law_and_free_square() {
        let t = tom("C2");
        let free = t.basis_element(0);
        let unit = t.unit();
        assert_eq!(unit.product(&free).unwrap(), free);
        // [G/1]^2 = 2 [G/1]
        let sq = free.product(&free).unwrap();
        assert_eq!(sq.coefficients(), &[rat(2), rat(0)]);
    }

    #[test]
    fn s3_transitive_square() {
        let t = tom("S3");
        // class order: 1, C2, C3, S3
        let gc2 = t.basis_element(1);
        let sq = gc2.product(&gc2).unwrap();
        // [G/C2]^2 = [G/C2] + [G/1]
        assert_eq!(sq.coefficients(), &[rat(1), rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn product_matches_orbit_decomposition_oracle() {
        for spec in ["C2", "C4", "C2xC2", "S3", "C6", "D8", "C12", "D12"] {
            let t = tom(spec);
            for a in 0..t.len() {
                for b in 0..t.len() {
                    let via_cosets = {
                        let ea = t.basis_element(a);
                        let eb = t.basis_element(b);
                        ea.product(&eb).unwrap()
                    };
                    let mut expect = vec![Rat::zero(); t.len()];
                    for (class, mult) in product_oracle(&t, a, b) {
                        expect[class] = rat(mult);
                    }
                    assert_eq!(via_cosets.coefficients(), &expect[..], "{spec} [{a}]*[{b}]");
                }
            }
        }
    }

    #[test]
    fn marks_is_ring_homomorphism() {
        for spec in ["C4", "S3", "D8", "C2xC2"] {
            let t = tom(spec);
            // a couple of dense elements with mixed coefficients
            let x = t
                .element((0..t.len()).map(|i| rat_frac(i as i64 + 1, 3)).collect())
                .unwrap();
            let y = t
                .element((0..t.len()).map(|i| rat(2 * i as i64 - 3)).collect())
                .unwrap();
            let lhs = x.product(&y).unwrap().marks();
            let rhs: Vec<Rat> = x
                .marks()
                .iter()
                .zip(y.marks().iter())
                .map(|(a, b)| a * b)
                .collect();
            assert_eq!(lhs, rhs, "{spec}");
        }
    }

    #[test]
    fn idempotents_for_trivial_and_c2() {
        let t = tom("C1");
        let es = t.rational_idempotents();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].coefficients(), &[rat(1)]);

        let t = tom("C2");
        let es = t.rational_idempotents();
        // e_1 = 1/2 [G/1], e_{C2} = [G/G] - 1/2 [G/1]
        assert_eq!(es[0].coefficients(), &[rat_frac(1, 2), rat(0)]);
        assert_eq!(es[1].coefficients(), &[rat_frac(-1, 2), rat(1)]);
    }

    #[test]
    fn idempotent_system_properties() {
        for spec in ["C2", "C4", "S3", "D8", "C2xC2", "C6"] {
            let t = tom(spec);
            let es = t.rational_idempotents();
            // marks(e_H) is the indicator of H
            for (h, e) in es.iter().enumerate() {
                let marks = e.marks();
                for (i, m) in marks.iter().enumerate() {
                    let want = if i == h { rat(1) } else { rat(0) };
                    assert_eq!(*m, want, "{spec} idempotent {h} mark {i}");
                }
            }
            // sum is the unit
            let mut sum = t.zero();
            for e in &es {
                sum = sum.add(e).unwrap();
            }
            assert_eq!(sum, t.unit(), "{spec} idempotents sum to [G/G]");
            // orthogonality
            for (i, a) in es.iter().enumerate() {
                for (j, b) in es.iter().enumerate() {
                    let p = a.product(b).unwrap();
                    let want = if i == j { a.clone() } else { t.zero() };
                    assert_eq!(p, want, "{spec} e_{i} e_{j}");
                }
            }
        }
    }

    #[test]
    fn inverse_denominators_divide_group_order_powers() {
        for spec in ["C2", "C4", "S3", "D8", "C12", "C2xC2xC2"] {
            let t = tom(spec);
            let inv = t.inverse();
            assert!(
                denominators_divide_order_power(&inv, t.group().order()),
                "{spec}: inverse marks denominators must divide a power of |G|"
            );
        }
    }

    #[test]
    fn group_mismatch_is_rejected() {
        let t1 = tom("C2");
        let t2 = tom("C2");
        let a = t1.unit();
        let b = t2.unit();
        assert!(matches!(a.product(&b), Err(Error::GroupMismatch)));
    }
}
