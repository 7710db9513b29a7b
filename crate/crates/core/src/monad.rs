//! The monad H⊗O(−1) → N⊗O → H*⊗O(1) of ω, its cohomology tables, the
//! S^2 complex and the dual kernel spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Mat, Subspace};
use crate::poly::{binomial, Monomials};
use crate::tensor::{kernel_basis_of_form, sym_pairs, OmegaTensor};

/// Monad data. `alpha0` is the map N → H*⊗V* (4n × dim N) and `phi` the
/// skew form on N* with ω̃ = alpha0 · phi · alpha0ᵀ. For monads built from ω
/// directly `alpha0` is the inclusion u; for restricted monads it is the
/// composite N → H*⊗V* → H̄*⊗V*, which may fail to be injective.
#[derive(Clone, Debug)]
pub struct MonadData<F: Field> {
    field: F,
    n: usize,
    n_space: Subspace<F>,
    alpha0: Mat<F>,
    phi: Mat<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohRow {
    pub d: i64,
    pub h0: usize,
    pub h1: usize,
    /// dim ker β_d; zero for monads of bundles
    pub defect: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Coh {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohTable {
    pub n: usize,
    pub r: usize,
    pub dim_n: usize,
    pub dim_q: usize,
    pub rows: Vec<CohRow>,
    pub s2: Option<S2Coh>,
}

impl CohTable {
    pub fn row(&self, d: i64) -> Option<&CohRow> {
        self.rows.iter().find(|r| r.d == d)
    }

    /// Rows violating h0 − h1 = r·C(d+3,3) − n(d+2).
    pub fn euler_failures(&self) -> Vec<i64> {
        self.rows
            .iter()
            .filter(|row| row.h0 as i64 - row.h1 as i64 != euler_char(self.n, self.r, row.d))
            .map(|row| row.d)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("d,h0,h1\n");
        for row in &self.rows {
            s.push_str(&format!("{},{},{}\n", row.d, row.h0, row.h1));
        }
        s
    }
}

/// χE(d) for an (n, r) instanton.
pub fn euler_char(n: usize, r: usize, d: i64) -> i64 {
    r as i64 * binomial(d + 3, 3) - n as i64 * (d + 2)
}

/// Half rank of ω and the number r with rk = 2n + r.
pub fn rank_split(n: usize, rank: usize) -> Result<usize> {
    if rank % 2 != 0 || rank < 2 * n + 2 || rank > 4 * n {
        return Err(Error::Input(format!("rank {rank} is not admissible for n = {n} (need 2n+2 <= rk <= 4n)")));
    }
    Ok(rank - 2 * n)
}

/// Build the monad of ω. The rank must satisfy 2n+2 ≤ rk ≤ 4n.
pub fn build_monad<F: Field>(omega: &OmegaTensor<F>) -> Result<MonadData<F>> {
    let f = omega.field();
    let n = omega.n();
    let m = omega.flatten();
    let space = m.column_space();
    rank_split(n, space.dim())?;
    let u = space.basis().transpose();
    // u's rows at the pivot columns form the identity, so selecting those
    // rows of M is a left inverse applied on both sides
    let piv = space.pivots().to_vec();
    let phi = m.select(&piv, &piv);
    let monad = MonadData { field: f.clone(), n, n_space: space, alpha0: u, phi };
    monad.check_reproduces(&m)?;
    if monad.phi.inverse().is_none() || !monad.phi.is_skew() {
        return Err(Error::Invariant("φ is not a skew isomorphism".into()));
    }
    Ok(monad)
}

/// Monad of the restriction Ē along ξ: middle term N = Im ω, right map
/// N → H̄*⊗V* obtained by composing with the projection.
pub fn restricted_monad<F: Field>(omega: &OmegaTensor<F>, xi: &[F::Elem]) -> Result<MonadData<F>> {
    let base = build_monad(omega)?;
    let f = omega.field();
    let j = kernel_basis_of_form(f, xi)?;
    let proj = kron_id4(f, &j.transpose());
    let alpha0 = proj.mul(&base.alpha0);
    Ok(MonadData { field: f.clone(), n: omega.n() - 1, n_space: base.n_space, alpha0, phi: base.phi })
}

/// g ⊗ id_V for a matrix g on H.
pub fn kron_id4<F: Field>(f: &F, g: &Mat<F>) -> Mat<F> {
    let mut out = Mat::zeros(f, 4 * g.rows(), 4 * g.cols());
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            for k in 0..4 {
                out.set(4 * i + k, 4 * j + k, g.get(i, j).clone());
            }
        }
    }
    out
}

impl<F: Field> MonadData<F> {
    pub fn field(&self) -> &F {
        &self.field
    }
    /// dim H of the outer terms
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim_n(&self) -> usize {
        self.alpha0.cols()
    }
    /// rank of the bundle: dim N − 2n
    pub fn r(&self) -> usize {
        self.dim_n() - 2 * self.n
    }
    /// N as a subspace of H*⊗V* of the original ω
    pub fn n_space(&self) -> &Subspace<F> {
        &self.n_space
    }
    pub fn u(&self) -> &Mat<F> {
        &self.alpha0
    }
    pub fn phi(&self) -> &Mat<F> {
        &self.phi
    }
    pub fn is_injective(&self) -> bool {
        self.alpha0.rank() == self.dim_n()
    }
    /// dim Q = 4n − dim N, for monads whose right map is injective
    pub fn dim_q(&self) -> usize {
        4 * self.n - self.alpha0.rank()
    }

    /// The flattening α0 φ α0ᵀ, which is ω̃ (or ω̄̃ for restricted monads).
    pub fn omega_flat(&self) -> Mat<F> {
        self.alpha0.mul(&self.phi).mul(&self.alpha0.transpose())
    }

    fn check_reproduces(&self, m: &Mat<F>) -> Result<()> {
        if &self.omega_flat() != m {
            return Err(Error::Invariant("u φ uᵀ does not reproduce ω".into()));
        }
        Ok(())
    }

    /// φ α0ᵀ : H⊗V → N.
    fn beta0(&self) -> Mat<F> {
        self.phi.mul(&self.alpha0.transpose())
    }

    /// α_d : N⊗S^dV* → H*⊗S^{d+1}V*, columns indexed (i, monomial).
    pub fn alpha_d(&self, d: i64) -> Mat<F> {
        graded_right_map(&self.field, &self.alpha0, self.n, &monomials_v(d), &monomials_v(d + 1))
    }

    /// β_d : H⊗S^{d−1}V* → N⊗S^dV*.
    pub fn beta_d(&self, d: i64) -> Mat<F> {
        graded_left_map(&self.field, &self.beta0(), self.n, &monomials_v(d - 1), &monomials_v(d))
    }

    /// (h0, h1, defect) of E(d), valid for d ≥ −2.
    pub fn h_e(&self, d: i64) -> Result<CohRow> {
        if d < -2 {
            return Err(Error::Input(format!("twist {d} is outside the window d >= -2")));
        }
        let a = self.alpha_d(d);
        let b = self.beta_d(d);
        let ra = a.rank();
        let rb = b.rank();
        let ker_a = a.cols() - ra;
        Ok(CohRow { d, h0: ker_a - rb, h1: a.rows() - ra, defect: b.cols() - rb })
    }

    /// Check α_d ∘ β_d = 0.
    pub fn check_complex(&self, d: i64) -> Result<()> {
        if !self.alpha_d(d).mul(&self.beta_d(d)).is_zero() {
            return Err(Error::Invariant(format!("α_{d} ∘ β_{d} ≠ 0")));
        }
        Ok(())
    }

    pub fn coh_table(&self, d_max: i64) -> Result<CohTable> {
        let rows = (-2..=d_max).map(|d| self.h_e(d)).collect::<Result<Vec<_>>>()?;
        Ok(CohTable { n: self.n, r: self.r(), dim_n: self.dim_n(), dim_q: self.dim_q(), rows, s2: None })
    }

    /// h^i(S^2 E) from the global sections of the S^2 of the monad:
    /// S^2N ⊕ H⊗H* → N⊗H*⊗V* → Λ^2H*⊗S^2V*.
    pub fn s2_table(&self) -> Result<S2Coh> {
        let (d0, d1) = self.s2_differentials();
        if !d1.mul(&d0).is_zero() {
            return Err(Error::Invariant("S^2 complex: d1 ∘ d0 ≠ 0".into()));
        }
        let r0 = d0.rank();
        let r1 = d1.rank();
        Ok(S2Coh { h0: d0.cols() - r0, h1: d1.cols() - r1 - r0, h2: d1.rows() - r1 })
    }

    fn s2_differentials(&self) -> (Mat<F>, Mat<F>) {
        let f = &self.field;
        let n = self.n;
        let dn = self.dim_n();
        let u = &self.alpha0;
        let b0 = self.beta0();
        let c1 = dn * n * 4;
        let idx1 = |i: usize, a: usize, k: usize| (i * n + a) * 4 + k;
        let npairs: Vec<(usize, usize)> = sym_pairs(dn);
        let c0 = npairs.len() + n * n;
        let mut d0 = Mat::zeros(f, c1, c0);
        for (col, &(i, j)) in npairs.iter().enumerate() {
            for a in 0..n {
                for k in 0..4 {
                    let r = 4 * a + k;
                    d0.add_at(idx1(i, a, k), col, u.get(r, j));
                    d0.add_at(idx1(j, a, k), col, u.get(r, i));
                }
            }
        }
        for b in 0..n {
            for c in 0..n {
                let col = npairs.len() + b * n + c;
                for i in 0..dn {
                    for k in 0..4 {
                        d0.add_at(idx1(i, c, k), col, b0.get(i, 4 * b + k));
                    }
                }
            }
        }
        let s2v = Monomials::new(4, 2);
        let hpairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |c| (a, c))).collect();
        let hpair_index = |a: usize, c: usize| hpairs.iter().position(|&p| p == (a, c)).unwrap();
        let mut d1 = Mat::zeros(f, hpairs.len() * s2v.len(), c1);
        for i in 0..dn {
            for c in 0..n {
                for k in 0..4 {
                    let col = idx1(i, c, k);
                    for a in 0..n {
                        if a == c {
                            continue;
                        }
                        for l in 0..4 {
                            let x = u.get(4 * a + l, i);
                            if f.is_zero(x) {
                                continue;
                            }
                            let mut e = [0u8; 4];
                            e[l] += 1;
                            e[k] += 1;
                            let mono = s2v.index_of(&e).unwrap();
                            let (row, val) = if a < c {
                                (hpair_index(a, c), x.clone())
                            } else {
                                (hpair_index(c, a), f.neg(x))
                            };
                            d1.add_at(row * s2v.len() + mono, col, &val);
                        }
                    }
                }
            }
        }
        (d0, d1)
    }
}

pub fn monomials_v(d: i64) -> Monomials {
    Monomials::new(4, d)
}

/// Matrix of N⊗S^d → H*⊗S^{d+1}: n_i⊗m ↦ Σ_{a,k} A[(a,k),i] e_a*⊗x_k·m,
/// where the linear forms x_k are given by `lin` (one row of length
/// `src.nvars()` per k, or the identity when None).
fn graded_right_map<F: Field>(f: &F, a0: &Mat<F>, n: usize, src: &Monomials, dst: &Monomials) -> Mat<F> {
    graded_right_map_lin(f, a0, n, src, dst, None)
}

pub(crate) fn graded_right_map_lin<F: Field>(
    f: &F,
    a0: &Mat<F>,
    n: usize,
    src: &Monomials,
    dst: &Monomials,
    lin: Option<&Mat<F>>,
) -> Mat<F> {
    let dn = a0.cols();
    let mut m = Mat::zeros(f, n * dst.len(), dn * src.len());
    for i in 0..dn {
        for a in 0..n {
            for k in 0..4 {
                let c = a0.get(4 * a + k, i);
                if f.is_zero(c) {
                    continue;
                }
                for mono in 0..src.len() {
                    let col = i * src.len() + mono;
                    add_times_linear(f, &mut m, col, a * dst.len(), c, k, mono, src, dst, lin);
                }
            }
        }
    }
    m
}

/// Matrix of H⊗S^{d−1} → N⊗S^d: h_b⊗m ↦ Σ_{i,k} B[i,(b,k)] n_i⊗x_k·m.
fn graded_left_map<F: Field>(f: &F, b0: &Mat<F>, n: usize, src: &Monomials, dst: &Monomials) -> Mat<F> {
    graded_left_map_lin(f, b0, n, src, dst, None)
}

pub(crate) fn graded_left_map_lin<F: Field>(
    f: &F,
    b0: &Mat<F>,
    n: usize,
    src: &Monomials,
    dst: &Monomials,
    lin: Option<&Mat<F>>,
) -> Mat<F> {
    let dn = b0.rows();
    let mut m = Mat::zeros(f, dn * dst.len(), n * src.len());
    for b in 0..n {
        for i in 0..dn {
            for k in 0..4 {
                let c = b0.get(i, 4 * b + k);
                if f.is_zero(c) {
                    continue;
                }
                for mono in 0..src.len() {
                    let col = b * src.len() + mono;
                    add_times_linear(f, &mut m, col, i * dst.len(), c, k, mono, src, dst, lin);
                }
            }
        }
    }
    m
}

#[allow(clippy::too_many_arguments)]
fn add_times_linear<F: Field>(
    f: &F,
    m: &mut Mat<F>,
    col: usize,
    row_base: usize,
    c: &F::Elem,
    k: usize,
    mono: usize,
    src: &Monomials,
    dst: &Monomials,
    lin: Option<&Mat<F>>,
) {
    match lin {
        None => {
            let row = row_base + src.times_var(mono, k, dst);
            m.add_at(row, col, c);
        }
        Some(l) => {
            for v in 0..src.nvars() {
                let lv = l.get(k, v);
                if f.is_zero(lv) {
                    continue;
                }
                let row = row_base + src.times_var(mono, v, dst);
                m.add_at(row, col, &f.mul(c, lv));
            }
        }
    }
}

/// Cohomology table of ω for d in [−2, d_max], with the S^2 part.
pub fn coh_table<F: Field>(omega: &OmegaTensor<F>, d_max: i64) -> Result<CohTable> {
    let m = build_monad(omega)?;
    let mut t = m.coh_table(d_max)?;
    t.s2 = Some(m.s2_table()?);
    Ok(t)
}

pub fn s2_table<F: Field>(omega: &OmegaTensor<F>) -> Result<S2Coh> {
    build_monad(omega)?.s2_table()
}

/// ι_{x_m}(e_k e_l) in the monomial basis of S^2V, as (index in V, coefficient).
fn contract_s2(m: usize, k: usize, l: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    if m == k {
        out.push((l, 1));
    }
    if m == l {
        out.push((k, 1));
    }
    out
}

fn s2_pairs() -> Vec<(usize, usize)> {
    sym_pairs(4)
}

/// {σ ∈ Λ^2H⊗S^2V : σ∘u = 0}; coordinates (a<b) lex then (k<=l) lex.
pub fn sigma_kernel<F: Field>(omega: &OmegaTensor<F>) -> Subspace<F> {
    let f = omega.field();
    let n = omega.n();
    let space = omega.image_n();
    let u = space.basis().transpose();
    let hpairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let vpairs = s2_pairs();
    let ncols = hpairs.len() * vpairs.len();
    let dn = u.cols();
    // rows: (i, h, v)
    let mut m = Mat::zeros(f, dn * n * 4, ncols);
    for (hp, &(a, b)) in hpairs.iter().enumerate() {
        for (vp, &(k, l)) in vpairs.iter().enumerate() {
            let col = hp * vpairs.len() + vp;
            for i in 0..dn {
                for c in 0..n {
                    // ι_{e_c*}(e_a∧e_b) = δ_ca e_b − δ_cb e_a
                    let hterms: Vec<(usize, i64)> = match (c == a, c == b) {
                        (true, _) => vec![(b, 1)],
                        (_, true) => vec![(a, -1)],
                        _ => vec![],
                    };
                    if hterms.is_empty() {
                        continue;
                    }
                    for mm in 0..4 {
                        let x = u.get(4 * c + mm, i);
                        if f.is_zero(x) {
                            continue;
                        }
                        for &(hv, hs) in &hterms {
                            for (vv, vs) in contract_s2(mm, k, l) {
                                let row = (i * n + hv) * 4 + vv;
                                m.add_at(row, col, &f.mul(x, &f.from_i64(hs * vs)));
                            }
                        }
                    }
                }
            }
        }
    }
    m.kernel()
}

/// Matrix of γ ↦ γ∘u for γ ∈ H⊗S^2V, rows (i, v).
fn gamma_map<F: Field>(f: &F, u: &Mat<F>, n: usize) -> Mat<F> {
    let vpairs = s2_pairs();
    let dn = u.cols();
    let mut m = Mat::zeros(f, dn * 4, n * vpairs.len());
    for b in 0..n {
        for (vp, &(k, l)) in vpairs.iter().enumerate() {
            let col = b * vpairs.len() + vp;
            for i in 0..dn {
                for mm in 0..4 {
                    let x = u.get(4 * b + mm, i);
                    if f.is_zero(x) {
                        continue;
                    }
                    for (vv, vs) in contract_s2(mm, k, l) {
                        m.add_at(i * 4 + vv, col, &f.mul(x, &f.from_i64(vs)));
                    }
                }
            }
        }
    }
    m
}

/// {γ ∈ H⊗S^2V : γ∘u = 0}; coordinates b then (k<=l) lex.
pub fn gamma_kernel<F: Field>(omega: &OmegaTensor<F>) -> Subspace<F> {
    let space = omega.image_n();
    gamma_map(omega.field(), &space.basis().transpose(), omega.n()).kernel()
}

/// γ-kernel with the extra condition Im γ ⊂ W for a 3-dimensional W ⊂ V,
/// given by three spanning vectors. Returned inside H⊗S^2V.
pub fn gamma_kernel_plane<F: Field>(omega: &OmegaTensor<F>, w: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
    let f = omega.field();
    let wspace = Subspace::from_vectors(f, 4, w);
    if wspace.dim() != 3 {
        return Err(Error::Input(format!("plane needs a 3-dimensional W, got {}", wspace.dim())));
    }
    let n = omega.n();
    let wb = wspace.vectors();
    let vpairs = s2_pairs();
    let wpairs = sym_pairs(3);
    // embedding S^2W → S^2V in monomial coordinates
    let mut emb = Mat::zeros(f, vpairs.len(), wpairs.len());
    for (col, &(p, q)) in wpairs.iter().enumerate() {
        for (row, &(k, l)) in vpairs.iter().enumerate() {
            let v = if k == l {
                f.mul(&wb[p][k], &wb[q][k])
            } else {
                f.add(&f.mul(&wb[p][k], &wb[q][l]), &f.mul(&wb[p][l], &wb[q][k]))
            };
            emb.set(row, col, v);
        }
    }
    let mut big = Mat::zeros(f, n * vpairs.len(), n * wpairs.len());
    for b in 0..n {
        for r in 0..vpairs.len() {
            for c in 0..wpairs.len() {
                big.set(b * vpairs.len() + r, b * wpairs.len() + c, emb.get(r, c).clone());
            }
        }
    }
    let u = omega.image_n().basis().transpose();
    let ker = gamma_map(f, &u, n).mul(&big).kernel();
    let imgs: Vec<Vec<F::Elem>> = ker.vectors().iter().map(|v| big.mul_vec(v)).collect();
    Ok(Subspace::from_vectors(f, n * vpairs.len(), &imgs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Ambient {
    FullSkew,
    SymLambda,
}

/// dim{τ in the ambient : τ vanishes on ker ω̃ × ker ω̃}.
pub fn tangent_dim<F: Field>(omega: &OmegaTensor<F>, ambient: Ambient) -> usize {
    let f = omega.field();
    let n = omega.n();
    let kernel = omega.flatten().kernel().vectors();
    let s = kernel.len();
    let pairs: Vec<(usize, usize)> = (0..s).flat_map(|p| (p + 1..s).map(move |q| (p, q))).collect();
    match ambient {
        Ambient::FullSkew => {
            let dim = 4 * n;
            let coords: Vec<(usize, usize)> = (0..dim).flat_map(|r| (r + 1..dim).map(move |c| (r, c))).collect();
            let m = Mat::from_fn(f, pairs.len(), coords.len(), |row, col| {
                let (p, q) = pairs[row];
                let (r, c) = coords[col];
                f.sub(&f.mul(&kernel[p][r], &kernel[q][c]), &f.mul(&kernel[p][c], &kernel[q][r]))
            });
            coords.len() - m.rank()
        }
        Ambient::SymLambda => {
            let nb = OmegaTensor::<F>::dim_space(n);
            let mut m = Mat::zeros(f, pairs.len(), nb);
            for t in 0..nb {
                let mut c = vec![f.zero(); nb];
                c[t] = f.one();
                let e = OmegaTensor::from_coeffs(f, n, c).unwrap().flatten();
                for (row, &(p, q)) in pairs.iter().enumerate() {
                    let ek = e.mul_vec(&kernel[q]);
                    let v = kernel[p].iter().zip(&ek).fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b));
                    m.set(row, t, v);
                }
            }
            nb - m.rank()
        }
    }
}

/// 5n − 5n² + 8mn − 2m² − m for rank 2m.
pub fn expected_dim_sym(n: usize, m: usize) -> i64 {
    let (n, m) = (n as i64, m as i64);
    5 * n - 5 * n * n + 8 * m * n - 2 * m * m - m
}

/// C(4n,2) − C(4n−2m,2).
pub fn expected_dim_full(n: usize, m: usize) -> i64 {
    binomial(4 * n as i64, 2) - binomial(4 * n as i64 - 2 * m as i64, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::tensor::Wedge;

    fn nc<F: Field>(f: &F) -> OmegaTensor<F> {
        OmegaTensor::from_i64_forms(f, &[vec![[1, 0, 0, 0, 0, 1]]])
    }

    #[test]
    fn nc_monad_is_full() {
        let f = Fp::default_field();
        let m = build_monad(&nc(&f)).unwrap();
        assert_eq!(m.dim_n(), 4);
        assert_eq!(m.dim_q(), 0);
        assert!(m.phi().is_skew());
        for d in -2..=3 {
            m.check_complex(d).unwrap();
        }
    }

    #[test]
    fn nc_cohomology_rows() {
        let f = Fp::default_field();
        let t = coh_table(&nc(&f), 3).unwrap();
        let got: Vec<(i64, usize, usize)> = t.rows.iter().map(|r| (r.d, r.h0, r.h1)).collect();
        assert_eq!(&got[..4], &[(-2, 0, 0), (-1, 0, 1), (0, 0, 0), (1, 5, 0)]);
        assert!(t.euler_failures().is_empty());
        assert_eq!(t.s2, Some(S2Coh { h0: 0, h1: 5, h2: 0 }));
        assert!(t.rows.iter().all(|r| r.defect == 0));
    }

    #[test]
    fn nc_cohomology_over_rationals() {
        let q = Rationals;
        let t = coh_table(&nc(&q), 2).unwrap();
        assert_eq!(t.row(1).map(|r| (r.h0, r.h1)), Some((5, 0)));
    }

    #[test]
    fn twist_window() {
        let f = Fp::default_field();
        let m = build_monad(&nc(&f)).unwrap();
        assert!(m.h_e(-3).is_err());
    }

    #[test]
    fn inadmissible_rank() {
        let f = Fp::default_field();
        let eta = nc(&f);
        let z = OmegaTensor::zero(&f, 1);
        assert!(build_monad(&eta.block_sum(&z).unwrap()).is_err());
        assert!(build_monad(&z).is_err());
    }

    #[test]
    fn nc_kernels() {
        let f = Fp::default_field();
        assert_eq!(sigma_kernel(&nc(&f)).ambient(), 0);
        assert!(gamma_kernel(&nc(&f)).is_zero());
        let w = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]];
        assert!(gamma_kernel_plane(&nc(&f), &w).unwrap().is_zero());
        assert_eq!(gamma_kernel_plane(&OmegaTensor::zero(&f, 1), &w).unwrap().dim(), 6);
        assert!(gamma_kernel_plane(&nc(&f), &w[..2]).is_err());
    }

    #[test]
    fn restricted_block_drop() {
        let f = Fp::default_field();
        let other: Wedge<u64> = [0, 1, 0, 0, f.neg(&1), 0];
        let d = nc(&f).block_sum(&OmegaTensor::from_form(&f, other)).unwrap();
        let r = restricted_monad(&d, &[1, 0]).unwrap();
        assert_eq!(r.h_e(0).unwrap().h0, 4);
        // restricting along e1* keeps block 0 only: same drop
        let r1 = restricted_monad(&d, &[0, 1]).unwrap();
        assert_eq!(r1.h_e(0).unwrap().h0, 4);
    }

    #[test]
    fn tangent_of_full_rank_is_ambient() {
        let f = Fp::default_field();
        let t = nc(&f);
        assert_eq!(tangent_dim(&t, Ambient::FullSkew), 6);
        assert_eq!(tangent_dim(&t, Ambient::SymLambda), 6);
        assert_eq!(expected_dim_sym(5, 6), 62);
        assert_eq!(expected_dim_sym(2, 3), 17);
        assert_eq!(expected_dim_sym(3, 5), 35);
        assert_eq!(expected_dim_sym(4, 6), 54);
    }
}
