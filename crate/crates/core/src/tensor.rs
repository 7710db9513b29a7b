//! Tensors in S^2 H* ⊗ Λ^2 V* and their flattenings H⊗V -> H*⊗V*.
//!
//! Conventions used throughout the crate:
//! - V has basis e0..e3, V* the dual basis x0..x3.
//! - Λ^2 V* has basis x_k∧x_l (k<l) in lex order: 01 02 03 12 13 23. Λ^2 V
//!   uses the same order and ⟨x_i∧x_j, e_k∧e_l⟩ = δ_ik δ_jl − δ_il δ_jk.
//! - S^2 H* has basis e_i*·e_j* (i<=j) in lex order; S^d of anything uses
//!   lex monomial order (see [`crate::poly::Monomials`]).
//! - H⊗V and H*⊗V* are indexed by (a,k) ↦ 4a+k.
//! - ω_ij is stored once for i<=j and read symmetrically; the flattening
//!   copies coefficients without any factor 2.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::{Mat, Subspace};

pub const DIM_V: usize = 4;
pub const WEDGE_DIM: usize = 6;
/// Index pairs of the Λ^2 basis.
pub const WEDGE: [(usize, usize); WEDGE_DIM] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn wedge_index(k: usize, l: usize) -> usize {
    let (k, l) = if k < l { (k, l) } else { (l, k) };
    WEDGE.iter().position(|&p| p == (k, l)).expect("k != l, both < 4")
}

/// Index of e_i*·e_j* in S^2 H* (any order of i, j).
pub fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // rows before i contribute n, n-1, ..., n-i+1 entries
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

pub fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i..n {
            v.push((i, j));
        }
    }
    v
}

/// An element of Λ^2 V* (or Λ^2 V) in the WEDGE basis.
pub type Wedge<E> = [E; WEDGE_DIM];

/// 4x4 skew matrix of a 2-form: entry (k,l) is the coefficient of x_k∧x_l.
pub fn wedge_matrix<F: Field>(f: &F, w: &Wedge<F::Elem>) -> Mat<F> {
    let mut m = Mat::zeros(f, 4, 4);
    for (idx, &(k, l)) in WEDGE.iter().enumerate() {
        m.set(k, l, w[idx].clone());
        m.set(l, k, f.neg(&w[idx]));
    }
    m
}

/// Pfaffian w01 w23 − w02 w13 + w03 w12; a 2-form is indecomposable iff
/// this is nonzero, and a bivector is decomposable iff it vanishes.
pub fn pfaffian<F: Field>(f: &F, w: &Wedge<F::Elem>) -> F::Elem {
    let a = f.mul(&w[0], &w[5]);
    let b = f.mul(&w[1], &w[4]);
    let c = f.mul(&w[2], &w[3]);
    f.add(&f.sub(&a, &b), &c)
}

/// Polarization of the Pfaffian.
pub fn pfaffian_pairing<F: Field>(f: &F, u: &Wedge<F::Elem>, w: &Wedge<F::Elem>) -> F::Elem {
    let t = |i: usize, j: usize| f.add(&f.mul(&u[i], &w[j]), &f.mul(&u[j], &w[i]));
    f.add(&f.sub(&t(0, 5), &t(1, 4)), &t(2, 3))
}

/// u∧w for u, w in a 4-dimensional space.
pub fn wedge_vectors<F: Field>(f: &F, u: &[F::Elem], w: &[F::Elem]) -> Wedge<F::Elem> {
    std::array::from_fn(|idx| {
        let (k, l) = WEDGE[idx];
        f.sub(&f.mul(&u[k], &w[l]), &f.mul(&u[l], &w[k]))
    })
}

/// ⟨α, λ⟩ for α in Λ^2 V*, λ in Λ^2 V.
pub fn pair_wedge<F: Field>(f: &F, alpha: &Wedge<F::Elem>, lambda: &Wedge<F::Elem>) -> F::Elem {
    alpha.iter().zip(lambda).fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b))
}

pub fn zero_wedge<F: Field>(f: &F) -> Wedge<F::Elem> {
    std::array::from_fn(|_| f.zero())
}

/// ω ∈ S^2 H_n* ⊗ Λ^2 V*.
#[derive(Clone, Debug)]
pub struct OmegaTensor<F: Field> {
    field: F,
    n: usize,
    /// coefficient of e_i*e_j* ⊗ x_k∧x_l at `sym_index(i,j) * 6 + wedge_index(k,l)`
    coeffs: Vec<F::Elem>,
}

impl<F: Field> PartialEq for OmegaTensor<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coeffs == other.coeffs
    }
}

impl<F: Field> OmegaTensor<F> {
    pub fn zero(field: &F, n: usize) -> Self {
        OmegaTensor { field: field.clone(), n, coeffs: vec![field.zero(); n * (n + 1) / 2 * WEDGE_DIM] }
    }

    /// Build from the symmetric n×n array of 2-forms; only i<=j is read.
    pub fn from_forms(field: &F, forms: &[Vec<Wedge<F::Elem>>]) -> Self {
        let n = forms.len();
        let mut w = Self::zero(field, n);
        for (i, j) in sym_pairs(n) {
            w.set_form(i, j, forms[i][j].clone());
        }
        w
    }

    /// Build from integer forms, convenient for transcribed examples.
    pub fn from_i64_forms(field: &F, forms: &[Vec<[i64; 6]>]) -> Self {
        let conv: Vec<Vec<Wedge<F::Elem>>> = forms
            .iter()
            .map(|row| row.iter().map(|w| std::array::from_fn(|i| field.from_i64(w[i]))).collect())
            .collect();
        Self::from_forms(field, &conv)
    }

    /// n = 1 tensor given by a single 2-form.
    pub fn from_form(field: &F, eta: Wedge<F::Elem>) -> Self {
        Self::from_forms(field, &[vec![eta]])
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim_space(n: usize) -> usize {
        n * (n + 1) / 2 * WEDGE_DIM
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn from_coeffs(field: &F, n: usize, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.len() != Self::dim_space(n) {
            return Err(Error::Dimension(format!("{} coefficients for n = {n}", coeffs.len())));
        }
        Ok(OmegaTensor { field: field.clone(), n, coeffs })
    }

    pub fn form(&self, i: usize, j: usize) -> Wedge<F::Elem> {
        let base = sym_index(self.n, i, j) * WEDGE_DIM;
        std::array::from_fn(|t| self.coeffs[base + t].clone())
    }

    pub fn set_form(&mut self, i: usize, j: usize, w: Wedge<F::Elem>) {
        let base = sym_index(self.n, i, j) * WEDGE_DIM;
        for (t, c) in w.into_iter().enumerate() {
            self.coeffs[base + t] = c;
        }
    }

    /// Coefficient of x_k∧x_l in ω_ab, with the sign for k > l.
    pub fn entry(&self, a: usize, b: usize, k: usize, l: usize) -> F::Elem {
        if k == l {
            return self.field.zero();
        }
        let c = &self.coeffs[sym_index(self.n, a, b) * WEDGE_DIM + wedge_index(k, l)];
        if k < l {
            c.clone()
        } else {
            self.field.neg(c)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let f = &self.field;
        OmegaTensor { field: f.clone(), n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.add(a, b)).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        OmegaTensor { field: f.clone(), n: self.n, coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect() }
    }

    /// The 4n×4n skew matrix M[(a,k),(b,l)] = coefficient of x_k∧x_l in ω_ab.
    pub fn flatten(&self) -> Mat<F> {
        let n = self.n;
        Mat::from_fn(&self.field, 4 * n, 4 * n, |r, c| self.entry(r / 4, c / 4, r % 4, c % 4))
    }

    pub fn rank(&self) -> usize {
        self.flatten().rank()
    }

    /// ω(h⊗v) ∈ H*⊗V*.
    pub fn apply(&self, h: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let hv = tensor_vec(f, h, v);
        self.flatten().mul_vec(&hv)
    }

    /// N = Im(ω) ⊂ H*⊗V*.
    pub fn image_n(&self) -> Subspace<F> {
        self.flatten().column_space()
    }

    /// The quadric ω(λ) ∈ S^2 H* for λ ∈ Λ^2 V, as a symmetric matrix.
    pub fn contract_line(&self, lambda: &Wedge<F::Elem>) -> Mat<F> {
        let n = self.n;
        let f = &self.field;
        let mut q = Mat::zeros(f, n, n);
        for (i, j) in sym_pairs(n) {
            let v = pair_wedge(f, &self.form(i, j), lambda);
            q.set(i, j, v.clone());
            q.set(j, i, v);
        }
        q
    }

    /// (g*⊗id)∘ω∘(g⊗id) for an n×m matrix g : H_m -> H_n.
    pub fn pullback(&self, g: &Mat<F>) -> Self {
        assert_eq!(g.rows(), self.n, "pullback shape");
        let f = &self.field;
        let m = g.cols();
        let mut out = Self::zero(f, m);
        for (i, j) in sym_pairs(m) {
            let mut acc = zero_wedge(f);
            for a in 0..self.n {
                let gai = g.get(a, i);
                if f.is_zero(gai) {
                    continue;
                }
                for b in 0..self.n {
                    let c = f.mul(gai, g.get(b, j));
                    if f.is_zero(&c) {
                        continue;
                    }
                    let w = self.form(a, b);
                    for t in 0..WEDGE_DIM {
                        acc[t] = f.mul_add(&acc[t], &c, &w[t]);
                    }
                }
            }
            out.set_form(i, j, acc);
        }
        out
    }

    /// Conjugation by an invertible g ∈ GL(H).
    pub fn conjugate(&self, g: &Mat<F>) -> Result<Self> {
        if g.rows() != self.n || g.cols() != self.n || g.inverse().is_none() {
            return Err(Error::Input("conjugating matrix must be invertible n×n".into()));
        }
        Ok(self.pullback(g))
    }

    /// Restriction to ker ξ ⊂ H. Returns ω̄ and the basis j : ker ξ -> H
    /// (columns), taken from the RREF kernel of the 1×n system ξ.
    pub fn restrict_xi(&self, xi: &[F::Elem]) -> Result<(Self, Mat<F>)> {
        let j = kernel_basis_of_form(&self.field, xi)?;
        Ok((self.pullback(&j), j))
    }

    pub fn block_sum(&self, other: &Self) -> Result<Self> {
        if self.field.spec() != other.field.spec() {
            return Err(Error::Input("block sum of tensors over different fields".into()));
        }
        let (n1, n2) = (self.n, other.n);
        let f = &self.field;
        let mut out = Self::zero(f, n1 + n2);
        for (i, j) in sym_pairs(n1) {
            out.set_form(i, j, self.form(i, j));
        }
        for (i, j) in sym_pairs(n2) {
            out.set_form(n1 + i, n1 + j, other.form(i, j));
        }
        Ok(out)
    }

    /// Inverse of flatten on its image: reads ω off a skew matrix that is
    /// symmetric in H, failing otherwise.
    pub fn fold(field: &F, m: &Mat<F>) -> Result<Self> {
        if m.rows() != m.cols() || m.rows() % 4 != 0 {
            return Err(Error::Dimension("fold needs a 4n×4n matrix".into()));
        }
        let n = m.rows() / 4;
        let mut out = Self::zero(field, n);
        for (a, b) in sym_pairs(n) {
            let w = std::array::from_fn(|t| {
                let (k, l) = WEDGE[t];
                m.get(4 * a + k, 4 * b + l).clone()
            });
            out.set_form(a, b, w);
        }
        if &out.flatten() != m {
            return Err(Error::Input("matrix is not in S^2 H* ⊗ Λ^2 V*".into()));
        }
        Ok(out)
    }

    /// Stable content hash of the tensor file form.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(&self.to_file()).expect("serializable");
        hex::encode(Sha256::digest(json.as_bytes()))
    }

    pub fn to_file(&self) -> TensorFile {
        let f = &self.field;
        let mut entries = Vec::new();
        for (i, j) in sym_pairs(self.n) {
            let w = self.form(i, j);
            for (t, &(k, l)) in WEDGE.iter().enumerate() {
                if !f.is_zero(&w[t]) {
                    entries.push(TensorEntry { i, j, k, l, c: f.format(&w[t]) });
                }
            }
        }
        TensorFile { n: self.n, field: f.spec().to_string(), entries }
    }

    pub fn from_file(field: &F, file: &TensorFile) -> Result<Self> {
        let spec: FieldSpec = file.field.parse()?;
        if spec != field.spec() {
            return Err(Error::Parse(format!("tensor is over {spec}, expected {}", field.spec())));
        }
        let n = file.n;
        let mut out = Self::zero(field, n);
        let mut seen = BTreeSet::new();
        for e in &file.entries {
            if !(e.i <= e.j && e.j < n && e.k < e.l && e.l < DIM_V) {
                return Err(Error::Parse(format!("bad index ({},{},{},{})", e.i, e.j, e.k, e.l)));
            }
            if !seen.insert((e.i, e.j, e.k, e.l)) {
                return Err(Error::Parse(format!("duplicate entry ({},{},{},{})", e.i, e.j, e.k, e.l)));
            }
            let c = field.parse(&e.c)?;
            out.coeffs[sym_index(n, e.i, e.j) * WEDGE_DIM + wedge_index(e.k, e.l)] = c;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(field: &F, s: &str) -> Result<Self> {
        let file: TensorFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(field, &file)
    }
}

/// Kernel of the linear form ξ on k^n, as an n×(n−1) matrix of columns.
pub fn kernel_basis_of_form<F: Field>(f: &F, xi: &[F::Elem]) -> Result<Mat<F>> {
    if xi.iter().all(|x| f.is_zero(x)) {
        return Err(Error::Input("ξ must be nonzero".into()));
    }
    let row = Mat::from_rows(f, xi.len(), &[xi.to_vec()]);
    Ok(row.kernel().basis().transpose())
}

/// h⊗v in the (a,k) ordering.
pub fn tensor_vec<F: Field>(f: &F, h: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(h.len() * v.len());
    for a in h {
        for b in v {
            out.push(f.mul(a, b));
        }
    }
    out
}

/// The Λ^2 H* ⊗ S^2 V* component of a skew form on H⊗V. Coordinates are the
/// matrix entries A[(a,k),(b,l)] for a<b, k<=l (lex in (a,b) then (k,l)).
#[derive(Clone, Debug, PartialEq)]
pub struct SkewHPart<F: Field> {
    pub n: usize,
    pub coords: Vec<F::Elem>,
}

/// Split a skew form on H⊗V into its S^2H*⊗Λ^2V* and Λ^2H*⊗S^2V* parts.
/// Needs characteristic ≠ 2.
pub fn decompose<F: Field>(field: &F, s: &Mat<F>) -> Result<(OmegaTensor<F>, SkewHPart<F>)> {
    if !s.is_skew() || s.rows() % 4 != 0 {
        return Err(Error::Input("decompose needs a skew 4n×4n matrix".into()));
    }
    let half = field.inv(&field.from_i64(2)).ok_or_else(|| Error::Input("characteristic 2".into()))?;
    let n = s.rows() / 4;
    let ix = |a: usize, k: usize| 4 * a + k;
    let mut sym = OmegaTensor::zero(field, n);
    for (a, b) in sym_pairs(n) {
        let w = std::array::from_fn(|t| {
            let (k, l) = WEDGE[t];
            let v = field.add(s.get(ix(a, k), ix(b, l)), s.get(ix(b, k), ix(a, l)));
            field.mul(&v, &half)
        });
        sym.set_form(a, b, w);
    }
    let mut coords = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for k in 0..4 {
                for l in k..4 {
                    let v = field.sub(s.get(ix(a, k), ix(b, l)), s.get(ix(b, k), ix(a, l)));
                    coords.push(field.mul(&v, &half));
                }
            }
        }
    }
    Ok((sym, SkewHPart { n, coords }))
}

/// Skew matrix of a Λ^2H*⊗S^2V* element given in [`SkewHPart`] coordinates.
pub fn flatten_skew_h<F: Field>(field: &F, part: &SkewHPart<F>) -> Mat<F> {
    let n = part.n;
    let mut m = Mat::zeros(field, 4 * n, 4 * n);
    let mut it = part.coords.iter();
    for a in 0..n {
        for b in a + 1..n {
            for k in 0..4 {
                for l in k..4 {
                    let c = it.next().expect("coordinate count");
                    let nc = field.neg(c);
                    m.set(4 * a + k, 4 * b + l, c.clone());
                    m.set(4 * a + l, 4 * b + k, c.clone());
                    m.set(4 * b + l, 4 * a + k, nc.clone());
                    m.set(4 * b + k, 4 * a + l, nc);
                }
            }
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub c: String,
}

/// On-disk tensor format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFile {
    pub n: usize,
    pub field: String,
    pub entries: Vec<TensorEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::rng;
    use proptest::prelude::*;

    fn random_tensor(f: &Fp, n: usize, seed: u64) -> OmegaTensor<Fp> {
        let mut s = rng::stream(seed, 0);
        let c = (0..OmegaTensor::<Fp>::dim_space(n)).map(|_| f.random(&mut s)).collect();
        OmegaTensor::from_coeffs(f, n, c).unwrap()
    }

    #[test]
    fn sym_index_is_lex() {
        for n in 1..6 {
            for (t, (i, j)) in sym_pairs(n).into_iter().enumerate() {
                assert_eq!(sym_index(n, i, j), t);
                assert_eq!(sym_index(n, j, i), t);
            }
        }
    }

    #[test]
    fn flatten_small_cases() {
        let f = Fp::default_field();
        assert!(OmegaTensor::zero(&f, 2).flatten().is_zero());
        let e01 = OmegaTensor::from_i64_forms(&f, &[vec![[1, 0, 0, 0, 0, 0]]]);
        let m = e01.flatten();
        assert_eq!(*m.get(0, 1), 1);
        assert_eq!(*m.get(1, 0), f.neg(&1));
        assert_eq!(m.rank(), 2);
        let eta = OmegaTensor::from_i64_forms(&f, &[vec![[1, 0, 0, 0, 0, 1]]]);
        assert_eq!(eta.rank(), 4);
        assert_eq!(eta.image_n().dim(), 4);
    }

    #[test]
    fn contraction_with_bivectors() {
        let f = Fp::default_field();
        let eta = OmegaTensor::from_i64_forms(&f, &[vec![[1, 0, 0, 0, 0, 1]]]);
        let l01 = [1, 0, 0, 0, 0, 0];
        let l02 = [0, 1, 0, 0, 0, 0];
        assert_eq!(*eta.contract_line(&l01).get(0, 0), 1);
        assert_eq!(*eta.contract_line(&l02).get(0, 0), 0);
        assert!(OmegaTensor::zero(&f, 3).contract_line(&l01).is_zero());
    }

    #[test]
    fn block_projection() {
        let f = Fp::default_field();
        let e1 = OmegaTensor::from_i64_forms(&f, &[vec![[1, 0, 0, 0, 0, 1]]]);
        let e2 = OmegaTensor::from_i64_forms(&f, &[vec![[0, 1, 0, 0, 1, 0]]]);
        let d = e1.block_sum(&e2).unwrap();
        let (r, _) = d.restrict_xi(&[1, 0]).unwrap();
        assert_eq!(r, e2);
        assert!(d.restrict_xi(&[0, 0]).is_err());
        let z = OmegaTensor::zero(&f, 2);
        assert_eq!(d.block_sum(&z).unwrap().rank(), d.rank());
    }

    #[test]
    fn conjugation_by_signs() {
        let f = Fp::default_field();
        let w = random_tensor(&f, 3, 5);
        assert_eq!(w.conjugate(&Mat::identity(&f, 3)).unwrap(), w);
        assert_eq!(w.conjugate(&Mat::identity(&f, 3).neg()).unwrap(), w);
        assert!(w.conjugate(&Mat::zeros(&f, 3, 3)).is_err());
    }

    #[test]
    fn decomposition_dimensions() {
        let f = Fp::default_field();
        let mut s = rng::stream(11, 0);
        let mut m = Mat::zeros(&f, 8, 8);
        for i in 0..8 {
            for j in i + 1..8 {
                let x = f.random(&mut s);
                m.set(i, j, x);
                m.set(j, i, f.neg(&x));
            }
        }
        let (sym, skew) = decompose(&f, &m).unwrap();
        assert_eq!(sym.coeffs().len() + skew.coords.len(), 28);
        assert_eq!(sym.coeffs().len(), 18);
        let back = sym.flatten().add(&flatten_skew_h(&f, &skew));
        assert_eq!(back, m);
        // a pure Λ^2H*⊗S^2V* element has no symmetric part
        let (sym2, skew2) = decompose(&f, &flatten_skew_h(&f, &skew)).unwrap();
        assert!(sym2.is_zero());
        assert_eq!(skew2, skew);
        assert!(decompose(&f, &Mat::identity(&f, 8)).is_err());
    }

    #[test]
    fn fold_rejects_skew_h_part() {
        let f = Fp::default_field();
        let part = SkewHPart::<Fp> { n: 2, coords: (1..=10).collect() };
        assert!(OmegaTensor::fold(&f, &flatten_skew_h(&f, &part)).is_err());
    }

    #[test]
    fn json_round_trip_rational() {
        let q = Rationals;
        let mut w = OmegaTensor::zero(&q, 2);
        w.set_form(0, 1, std::array::from_fn(|t| q.parse(["1/3", "0", "-7", "22/7", "0", "5"][t]).unwrap()));
        let text = w.to_json();
        let back = OmegaTensor::from_json(&q, &text).unwrap();
        assert_eq!(back, w);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn json_rejects_bad_input() {
        let f = Fp::default_field();
        assert!(OmegaTensor::from_json(&f, "{").is_err());
        let bad = r#"{"n":1,"field":"fp:32003","entries":[{"i":0,"j":0,"k":2,"l":1,"c":"1"}]}"#;
        assert!(OmegaTensor::from_json(&f, bad).is_err());
        let wrong_field = r#"{"n":1,"field":"rational","entries":[]}"#;
        assert!(OmegaTensor::from_json(&f, wrong_field).is_err());
    }

    proptest! {
        #[test]
        fn flatten_is_skew_even_rank(n in 1usize..4, seed in any::<u64>()) {
            let f = Fp::default_field();
            let w = random_tensor(&f, n, seed);
            let m = w.flatten();
            prop_assert!(m.is_skew());
            prop_assert_eq!(m.rank() % 2, 0);
            prop_assert_eq!(OmegaTensor::fold(&f, &m).unwrap(), w.clone());
            let (sym, skew) = decompose(&f, &m).unwrap();
            prop_assert_eq!(sym, w);
            prop_assert!(skew.coords.iter().all(|c| *c == 0));
        }

        #[test]
        fn restriction_lowers_rank(n in 2usize..4, seed in any::<u64>()) {
            let f = Fp::default_field();
            let w = random_tensor(&f, n, seed);
            let mut s = rng::stream(seed, 1);
            let xi: Vec<u64> = (0..n).map(|_| f.random_nonzero(&mut s)).collect();
            let (r, j) = w.restrict_xi(&xi).unwrap();
            prop_assert!(r.rank() <= w.rank());
            prop_assert_eq!(j.cols(), n - 1);
        }

        #[test]
        fn contraction_symmetric_and_linear(seed in any::<u64>()) {
            let f = Fp::default_field();
            let w = random_tensor(&f, 3, seed);
            let mut s = rng::stream(seed, 2);
            let l1: Wedge<u64> = std::array::from_fn(|_| f.random(&mut s));
            let l2: Wedge<u64> = std::array::from_fn(|_| f.random(&mut s));
            let sum: Wedge<u64> = std::array::from_fn(|t| f.add(&l1[t], &l2[t]));
            let q1 = w.contract_line(&l1);
            prop_assert!(q1.is_symmetric());
            prop_assert_eq!(w.contract_line(&sum), q1.add(&w.contract_line(&l2)));
        }

        #[test]
        fn conjugation_preserves_rank(seed in any::<u64>()) {
            let f = Fp::default_field();
            let w = random_tensor(&f, 3, seed);
            let g = crate::matrix::sample_matrix(3, 3, &f, seed ^ 0xabc);
            prop_assume!(g.inverse().is_some());
            prop_assert_eq!(w.conjugate(&g).unwrap().rank(), w.rank());
        }
    }
}
