//! Dense matrices and subspaces over an exact field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rng;

#[derive(Clone)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Mat { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<F::Elem>> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn column_vector(field: &F, v: &[F::Elem]) -> Self {
        Mat { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let idx = i * self.cols + j;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| self.field.neg(x)).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| self.field.mul(x, c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "product shape mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * out.cols + j;
                        out.data[idx] = f.mul_add(&out.data[idx], a, b);
                    }
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

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_skew(&self) -> bool {
        let f = &self.field;
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == f.neg(self.get(j, i))))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// In-place reduced row-echelon form; returns pivot columns.
    /// Pivot choice is the first nonzero entry at or below the current row.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let idx = r * cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            let pivot_row: Vec<F::Elem> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let nf = f.neg(&factor);
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        let idx = i * cols + c + off;
                        self.data[idx] = f.mul_add(&self.data[idx], &nf, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Right kernel {v : M v = 0}.
    pub fn kernel(&self) -> Subspace<F> {
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
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, &basis)
    }

    /// Span of the rows.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    /// Span of the columns (the image of the map v -> M v).
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    /// Some x with M x = b.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let bm = Mat::column_vector(&self.field, b);
        self.solve_matrix(&bm).map(|x| x.column(0))
    }

    /// Some X with M X = B, free variables set to zero.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let f = &self.field;
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let id = Mat::identity(&self.field, self.rows);
        let aug = self.hstack(&id);
        let (r, pivots) = aug.rref();
        if pivots.len() < self.rows || pivots[self.rows - 1] >= self.cols {
            return None;
        }
        let idx: Vec<usize> = (self.cols..2 * self.cols).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        Some(r.select(&rows, &idx))
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                let nf = f.neg(&factor);
                for j in c..n {
                    let v = f.mul_add(m.get(i, j), &nf, m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// A random matrix on the stream keyed by `seed`.
pub fn sample_matrix<F: Field>(rows: usize, cols: usize, field: &F, seed: u64) -> Mat<F> {
    let mut s = rng::stream(seed, rng::task_id("sample_matrix", 0));
    Mat::from_fn(field, rows, cols, |_, _| field.random(&mut s))
}

/// A linear subspace of k^ambient, stored as the nonzero rows of an RREF
/// basis matrix. Equal subspaces have identical bases.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Row span of `m`.
    pub fn from_matrix(m: &Mat<F>) -> Self {
        let (r, pivots) = m.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..m.cols()).collect();
        Subspace { ambient: m.cols(), basis: r.select(&keep, &all), pivots }
    }

    pub fn from_vectors(field: &F, ambient: usize, vs: &[Vec<F::Elem>]) -> Self {
        Self::from_matrix(&Mat::from_rows(field, ambient, vs))
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }
    pub fn vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    /// Pivot columns of the RREF basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.field();
        let c: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // reconstruct and compare
        let mut w = vec![f.zero(); self.ambient];
        for (i, ci) in c.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                w[j] = f.mul_add(&w[j], ci, b);
            }
        }
        (w == v).then_some(c)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// {w in dual : w(v) = 0 for all v in self}, as a subspace of k^ambient.
    pub fn annihilator(&self) -> Self {
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, self.ambient));
        }
        let eqs = self.annihilator().basis.vstack(&other.annihilator().basis);
        Ok(eqs.kernel())
    }

    /// Matrix of a linear map restricted to this subspace: columns are the
    /// images of the basis vectors under `m`.
    pub fn image_under(&self, m: &Mat<F>) -> Mat<F> {
        m.mul(&self.basis.transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use proptest::prelude::*;

    fn fp() -> Fp {
        Fp::default_field()
    }

    #[test]
    fn trivial_ranks() {
        let f = fp();
        assert_eq!(Mat::zeros(&f, 4, 4).rank(), 0);
        assert_eq!(Mat::identity(&f, 6).rank(), 6);
        assert_eq!(Mat::zeros(&f, 0, 5).rank(), 0);
        assert!(Mat::identity(&f, 5).kernel().is_zero());
        assert_eq!(Mat::zeros(&f, 3, 7).kernel().dim(), 7);
    }

    #[test]
    fn sampled_matrix_is_repeatable_and_full_rank() {
        let f3 = Fp::new(3);
        assert_eq!(sample_matrix(2, 2, &f3, 0), sample_matrix(2, 2, &f3, 0));
        // pinned: the shipped seed gives an invertible 20x20 matrix
        assert_eq!(sample_matrix(20, 20, &fp(), 1).rank(), 20);
        assert_eq!(sample_matrix(0, 5, &fp(), 9).rank(), 0);
    }

    #[test]
    fn rational_inverse_and_det() {
        let q = Rationals;
        let m = Mat::from_i64(&q, &[&[2, 1], &[7, 4]]);
        assert_eq!(q.format(&m.det()), "1");
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(&q, 2));
        let s = Mat::from_i64(&q, &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(q.format(&s.det()), "0");
    }

    #[test]
    fn coordinate_subspaces_meet_in_zero() {
        let f = fp();
        let a = Subspace::from_vectors(&f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let b = Subspace::from_vectors(&f, 4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.intersect(&a).unwrap(), a);
        let c = Subspace::zero(&f, 3);
        assert!(a.intersect(&c).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let f = fp();
        let a = Subspace::from_vectors(&f, 3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(&f, 3, &[vec![1, 3, 4], vec![2, 5, 7]]);
        assert_eq!(a, b);
    }

    fn arb_mat(max: usize) -> impl Strategy<Value = (usize, usize, Vec<u64>)> {
        (0..=max, 0..=max).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u64..5, r * c)))
    }

    fn build(f: &Fp, r: usize, c: usize, d: &[u64]) -> Mat<Fp> {
        Mat::from_fn(f, r, c, |i, j| d[i * c + j])
    }

    proptest! {
        #[test]
        fn rank_of_transpose((r, c, d) in arb_mat(7)) {
            let f = Fp::new(5);
            let m = build(&f, r, c, &d);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity((r, c, d) in arb_mat(7)) {
            let f = Fp::new(5);
            let m = build(&f, r, c, &d);
            let k = m.kernel();
            prop_assert_eq!(k.dim() + m.rank(), c);
            for v in k.vectors() {
                prop_assert!(m.mul_vec(&v).iter().all(|x| *x == 0));
            }
        }

        #[test]
        fn intersection_laws(da in proptest::collection::vec(0u64..3, 18),
                             db in proptest::collection::vec(0u64..3, 18),
                             dc in proptest::collection::vec(0u64..3, 12)) {
            let f = Fp::new(3);
            let a = build(&f, 3, 6, &da).row_space();
            let b = build(&f, 3, 6, &db).row_space();
            let c = build(&f, 2, 6, &dc).row_space();
            let ab = a.intersect(&b).unwrap();
            prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
            prop_assert_eq!(ab.intersect(&c).unwrap(), a.intersect(&b.intersect(&c).unwrap()).unwrap());
            prop_assert!(ab.dim() + 6 >= a.dim() + b.dim());
            prop_assert!(ab.is_subspace_of(&a) && ab.is_subspace_of(&b));
            // monotone: a∩b ⊆ (a+c)∩b
            let ac = a.sum(&c).unwrap();
            prop_assert!(ab.is_subspace_of(&ac.intersect(&b).unwrap()));
        }

        #[test]
        fn solve_is_consistent((r, c, d) in arb_mat(6), seed in 0u64..1000) {
            let f = Fp::new(5);
            let m = build(&f, r, c, &d);
            let x = sample_matrix(c, 1, &f, seed);
            let b = m.mul(&x).column(0);
            let y = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }
}
