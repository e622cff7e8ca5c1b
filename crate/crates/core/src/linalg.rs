//! Dense exact linear algebra over a [`Field`]: matrices, reduced echelon
//! forms, kernels, and canonical subspaces.

use std::cmp::Ordering;

use crate::error::Result;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { field: field.clone(), rows: r, cols, data }
    }

    pub fn from_i64(field: &F, cols: usize, rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.mul_add(&out.data[idx], a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.mul_add(&acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        let mut out = Matrix::zeros(&self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&self.field, &mut m.data, m.rows, m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let (r, pivots) = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> F::Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(&m[r * n + c])) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = m[c * n + c].clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(&m[r * n + c], &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                let nf = f.neg(&factor);
                for j in c..n {
                    let v = f.mul_add(&m[r * n + j], &nf, &m[c * n + j]);
                    m[r * n + j] = v;
                }
            }
        }
        det
    }

    /// Entrywise change of field, e.g. reduction of a rational matrix mod p.
    pub fn convert<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { field: target.clone(), rows: self.rows, cols: self.cols, data })
    }
}

/// In-place reduced row echelon form on a row-major buffer; returns pivots.
fn rref_in_place<F: Field>(f: &F, m: &mut [F::Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&m[r * cols + c]).expect("nonzero pivot");
        if !f.is_one(&inv) {
            for j in c..cols {
                m[r * cols + j] = f.mul(&m[r * cols + j], &inv);
            }
        }
        for i in 0..rows {
            if i == r || f.is_zero(&m[i * cols + c]) {
                continue;
            }
            let factor = f.neg(&m[i * cols + c]);
            for j in c..cols {
                if f.is_zero(&m[r * cols + j]) {
                    continue;
                }
                let v = f.mul_add(&m[i * cols + j], &factor, &m[r * cols + j]);
                m[i * cols + j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if !f.is_zero(x) && !f.is_zero(y) {
            acc = f.mul_add(&acc, x, y);
        }
    }
    acc
}

pub fn unit_vector<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// A subspace of `F^n` held in reduced row echelon form, so two subspaces are
/// equal exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.basis.len(), &self.pivots, &self.basis).cmp(&(
            other.ambient,
            other.basis.len(),
            &other.pivots,
            &other.basis,
        ))
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(field, ambient, i)).collect();
        Subspace { field: field.clone(), ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span<I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut data = Vec::new();
        let mut rows = 0;
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
            data.extend(v);
            rows += 1;
        }
        let pivots = rref_in_place(field, &mut data, rows, ambient);
        let basis = (0..pivots.len()).map(|i| data[i * ambient..(i + 1) * ambient].to_vec()).collect();
        Subspace { field: field.clone(), ambient, basis, pivots }
    }

    /// Build directly from rows already in reduced echelon form.
    pub fn from_rref_rows(field: &F, ambient: usize, basis: Vec<Vec<F::Elem>>) -> Self {
        let s = Self::span(field, ambient, basis.clone());
        debug_assert_eq!(s.basis, basis);
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(&self.field, self.ambient, &self.basis)
    }

    /// Coordinates not carrying a pivot; they index a basis of the quotient.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the subspace; zero on pivot coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&out[p]) {
                continue;
            }
            let c = f.neg(&out[p]);
            for (o, r) in out.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *o = f.mul_add(o, &c, r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of `v` in the echelon basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        Subspace::span(&self.field, self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Linear map `F^n -> F^(n - dim)` sending `v` to its reduced free coordinates.
    pub fn residual_matrix(&self) -> Matrix<F> {
        let f = &self.field;
        let free = self.free_coordinates();
        let mut m = Matrix::zeros(f, free.len(), self.ambient);
        for (r, &c) in free.iter().enumerate() {
            m.set(r, c, f.one());
        }
        // v_c - sum_rows v_{pivot} * row[c]
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            for (r, &c) in free.iter().enumerate() {
                if !f.is_zero(&row[c]) {
                    let cur = m.get(r, p).clone();
                    m.set(r, p, f.sub(&cur, &row[c]));
                }
            }
        }
        m
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(&self.field, self.ambient);
        }
        let b = self.basis_matrix();
        let k = other.residual_matrix().mul(&b).kernel();
        Subspace::span(&self.field, self.ambient, k.iter().map(|c| b.mul_vec(c)))
    }

    /// `{v : map v in target}` for `map: F^n -> F^m` and `target` in `F^m`.
    pub fn preimage(map: &Matrix<F>, target: &Subspace<F>) -> Subspace<F> {
        assert_eq!(map.rows(), target.ambient);
        let k = target.residual_matrix().mul(map).kernel();
        Subspace::span(map.field(), map.cols(), k)
    }

    pub fn image(map: &Matrix<F>, source: &Subspace<F>) -> Subspace<F> {
        assert_eq!(map.cols(), source.ambient);
        Subspace::span(map.field(), map.rows(), source.basis.iter().map(|b| map.mul_vec(b)))
    }

    pub fn column_space(map: &Matrix<F>) -> Subspace<F> {
        Subspace::span(map.field(), map.rows(), map.columns())
    }

    pub fn convert<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<Subspace<G>> {
        let rows = self
            .basis
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(target, self.ambient, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q() -> Rationals {
        Rationals
    }

    #[test]
    fn rref_and_kernel() {
        let m = Matrix::from_i64(&q(), 3, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| *x == q().zero()));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&q(), 2, &[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det(), q().from_i64(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&q(), 2));
        let s = Matrix::from_i64(&q(), 2, &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.det(), q().zero());
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(&q(), 2, &[vec![1, 1], vec![1, 1]]);
        let b = vec![q().from_i64(1), q().from_i64(2)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn subspace_ops() {
        let f = q();
        let u = Subspace::span(&f, 3, vec![vec![f.from_i64(1), f.from_i64(1), f.zero()]]);
        let w = Subspace::span(
            &f,
            3,
            vec![vec![f.zero(), f.one(), f.zero()], vec![f.one(), f.zero(), f.zero()]],
        );
        assert!(u.is_subspace_of(&w));
        assert_eq!(u.intersect(&w), u);
        assert_eq!(w.sum(&u), w);
        assert_eq!(w.free_coordinates(), vec![2]);
        let proj = Matrix::from_i64(&f, 3, &[vec![0, 0, 1]]);
        assert_eq!(Subspace::preimage(&proj, &Subspace::zero(&f, 1)), w);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let f = q();
            let cols = rows[0].len();
            let m = Matrix::from_i64(&f, cols, &rows);
            prop_assert_eq!(m.rank() + m.kernel().len(), cols);
            for k in m.kernel() {
                prop_assert!(m.mul_vec(&k).iter().all(|x| f.is_zero(x)));
            }
        }

        #[test]
        fn span_is_canonical(rows in small_matrix(), perm in 0usize..6) {
            let f = PrimeField::new(5).unwrap();
            let cols = rows[0].len();
            let vecs: Vec<Vec<u64>> =
                rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let mut shuffled = vecs.clone();
            shuffled.rotate_left(perm % vecs.len());
            let a = Subspace::span(&f, cols, vecs.clone());
            let b = Subspace::span(&f, cols, shuffled);
            prop_assert_eq!(&a, &b);
            for v in &vecs {
                prop_assert!(a.contains(v));
            }
        }

        #[test]
        fn intersection_dimension_formula(a in small_matrix(), b in small_matrix()) {
            let f = q();
            let n = 4;
            let pad = |r: &Vec<i64>| -> Vec<_> {
                (0..n).map(|i| f.from_i64(*r.get(i).unwrap_or(&0))).collect()
            };
            let u = Subspace::span(&f, n, a.iter().map(pad));
            let w = Subspace::span(&f, n, b.iter().map(pad));
            prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        }
    }
}
