//! Named tensors and samplers, including the induction chain
//! (n−1, r+2) ⇝ (n, r).

use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Mat, Subspace};
use crate::monad::{build_monad, rank_split};
use crate::nondeg::{classify, NondegBudget};
use crate::poly::{eval, interpolate};
use crate::rng;
use crate::tensor::{wedge_index, OmegaTensor, Wedge, WEDGE_DIM};

/// Rejection budget per sampling stage.
pub const RETRIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedExampleId {
    Rank6Degenerate,
    ThooftNet(usize),
    /// nc tensor of x0∧x1 + x2∧x3, or of the given form
    Nc(Option<[i64; 6]>),
    TwoInstantonSum,
    OmegaBarT(i64, i64),
    ThreeNc,
}

impl fmt::Display for NamedExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedExampleId::Rank6Degenerate => write!(f, "prop51"),
            NamedExampleId::ThooftNet(n) => write!(f, "thooft_net({n})"),
            NamedExampleId::Nc(None) => write!(f, "nc"),
            NamedExampleId::Nc(Some(c)) => {
                write!(f, "nc({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
            NamedExampleId::TwoInstantonSum => write!(f, "two_instanton_sum"),
            NamedExampleId::OmegaBarT(a, b) => write!(f, "omega_bar_t({a},{b})"),
            NamedExampleId::ThreeNc => write!(f, "three_nc"),
        }
    }
}

impl FromStr for NamedExampleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(Error::Parse(format!("unbalanced example id {s:?}"))),
            None => (s, None),
        };
        let ints = |a: &str| -> Result<Vec<i64>> {
            a.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{x:?}: {e}")))).collect()
        };
        let bad = || Error::Parse(format!("bad arguments in example id {s:?}"));
        match (name, args) {
            ("prop51", None) | ("rank6_degenerate", None) => Ok(NamedExampleId::Rank6Degenerate),
            ("nc", None) => Ok(NamedExampleId::Nc(None)),
            ("nc", Some(a)) => {
                let v = ints(a)?;
                Ok(NamedExampleId::Nc(Some(v.try_into().map_err(|_| bad())?)))
            }
            ("thooft_net", Some(a)) | ("thooft", Some(a)) => match ints(a)?.as_slice() {
                [n] if (2..=5).contains(n) => Ok(NamedExampleId::ThooftNet(*n as usize)),
                _ => Err(bad()),
            },
            ("two_instanton_sum", None) => Ok(NamedExampleId::TwoInstantonSum),
            ("omega_bar_t", Some(a)) => match ints(a)?.as_slice() {
                [t0, t1] => Ok(NamedExampleId::OmegaBarT(*t0, *t1)),
                _ => Err(bad()),
            },
            ("three_nc", None) => Ok(NamedExampleId::ThreeNc),
            _ => Err(Error::Input(format!("unknown example id {s:?}"))),
        }
    }
}

/// The right monad map N → H*⊗V* of a 'tHooft net, as a 4n × dim N matrix.
#[derive(Clone, Debug)]
pub struct NetMatrix<F: Field> {
    pub n: usize,
    pub u: Mat<F>,
}

impl<F: Field> NetMatrix<F> {
    pub fn image(&self) -> Subspace<F> {
        self.u.column_space()
    }
}

#[derive(Clone, Debug)]
pub enum NamedExample<F: Field> {
    Tensor(OmegaTensor<F>),
    Net(NetMatrix<F>),
}

impl<F: Field> NamedExample<F> {
    pub fn tensor(self) -> Result<OmegaTensor<F>> {
        match self {
            NamedExample::Tensor(t) => Ok(t),
            NamedExample::Net(_) => Err(Error::Input("this example is a net matrix, not a tensor".into())),
        }
    }
}

pub fn rank6_degenerate<F: Field>(f: &F) -> OmegaTensor<F> {
    // [[x1∧x2, x1∧x3], [x1∧x3, x0∧x1 + x2∧x3]]
    OmegaTensor::from_i64_forms(f, &[vec![[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]], vec![[0, 0, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1]]])
}

pub fn nc<F: Field>(f: &F) -> OmegaTensor<F> {
    OmegaTensor::from_i64_forms(f, &[vec![[1, 0, 0, 0, 0, 1]]])
}

pub fn nc_of<F: Field>(f: &F, eta: &Wedge<F::Elem>) -> Result<OmegaTensor<F>> {
    let t = OmegaTensor::from_form(f, eta.clone());
    if t.rank() != 4 {
        return Err(Error::Input("an nc tensor needs an indecomposable 2-form".into()));
    }
    Ok(t)
}

/// Diagonal tensor of forms η_1, …, η_k.
pub fn diagonal<F: Field>(f: &F, etas: &[Wedge<F::Elem>]) -> OmegaTensor<F> {
    let mut w = OmegaTensor::zero(f, etas.len());
    for (i, e) in etas.iter().enumerate() {
        w.set_form(i, i, e.clone());
    }
    w
}

/// Three fixed indecomposable forms used for `three_nc`.
pub fn three_nc_forms<F: Field>(f: &F) -> [Wedge<F::Elem>; 3] {
    let c = |v: [i64; 6]| -> Wedge<F::Elem> { std::array::from_fn(|i| f.from_i64(v[i])) };
    [c([1, 0, 0, 0, 0, 1]), c([0, 1, 0, 0, -1, 0]), c([0, 0, 1, 1, 0, 0])]
}

/// 'tHooft net: row a carries z0..z3 in columns 2a..2a+3.
pub fn thooft_net<F: Field>(f: &F, n: usize) -> NetMatrix<F> {
    let dn = 2 * n + 2;
    let mut u = Mat::zeros(f, 4 * n, dn);
    for a in 0..n {
        for k in 0..4 {
            u.set(4 * a + k, 2 * a + k, f.one());
        }
    }
    NetMatrix { n, u }
}

fn random_combination<F: Field, R: RngCore>(f: &F, basis: &[Vec<F::Elem>], len: usize, rng: &mut R) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); len];
    for b in basis {
        let c = f.random(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x = f.mul_add(x, &c, y);
        }
    }
    v
}

fn random_tensor<F: Field, R: RngCore>(f: &F, n: usize, rng: &mut R) -> OmegaTensor<F> {
    let c = (0..OmegaTensor::<F>::dim_space(n)).map(|_| f.random(rng)).collect();
    OmegaTensor::from_coeffs(f, n, c).expect("length matches")
}

/// The linear space {ω : Im flatten(ω) ⊆ N}, as coefficient vectors.
pub fn tensors_with_image_in<F: Field>(f: &F, n: usize, nspace: &Subspace<F>) -> Subspace<F> {
    let dim = OmegaTensor::<F>::dim_space(n);
    let ann = nspace.annihilator();
    let cols: Vec<Vec<F::Elem>> = (0..dim)
        .map(|c| {
            let mut coeffs = vec![f.zero(); dim];
            coeffs[c] = f.one();
            let m = OmegaTensor::from_coeffs(f, n, coeffs).unwrap().flatten();
            let prod = ann.basis().mul(&m);
            (0..prod.rows() * prod.cols()).map(|i| prod.get(i / prod.cols(), i % prod.cols()).clone()).collect()
        })
        .collect();
    let rows = cols.first().map_or(0, |c| c.len());
    Mat::from_fn(f, rows, dim, |r, c| cols[c][r].clone()).kernel()
}

/// A rank-(2n+2) tensor whose image is the 'tHooft net's N, with h⁰E(1) = 2.
pub fn thooft_omega<F: Field>(f: &F, n: usize, seed: u64) -> Result<OmegaTensor<F>> {
    let net = thooft_net(f, n);
    let space = tensors_with_image_in(f, n, &net.image());
    let mut s = rng::stream(seed, rng::task_id("thooft", n as u64));
    let basis = space.vectors();
    for _ in 0..RETRIES {
        let w = OmegaTensor::from_coeffs(f, n, random_combination(f, &basis, space.ambient(), &mut s))?;
        if w.rank() == 2 * n + 2 {
            let h0 = build_monad(&w)?.h_e(1)?.h0;
            if h0 != 2 {
                return Err(Error::Invariant(format!("'tHooft tensor for n = {n} has h0 E(1) = {h0}")));
            }
            return Ok(w);
        }
    }
    Err(Error::Budget(format!("no rank-{} tensor with image N found for n = {n} (space of dim {}, seed {seed})", 2 * n + 2, space.dim())))
}

/// Random member of M(n, 2n): full rank, hence non-degenerate.
pub fn sample_full<F: Field>(f: &F, n: usize, seed: u64) -> Result<OmegaTensor<F>> {
    let mut s = rng::stream(seed, rng::task_id("full", n as u64));
    for _ in 0..RETRIES {
        let w = random_tensor(f, n, &mut s);
        if w.rank() == 4 * n && !classify(&w, &NondegBudget::default()).is_degenerate() {
            return Ok(w);
        }
    }
    Err(Error::Budget(format!("sample_full: stage full-rank, n = {n}, seed {seed}")))
}

/// Random member of M(n, 2n−2). Over finite fields the rank drop is found
/// on a random pencil ω0 + tω1 by scanning t; over ℚ the tensor is drawn
/// from those killing a random vector of H⊗V.
pub fn sample_corank2<F: Field>(f: &F, n: usize, seed: u64) -> Result<OmegaTensor<F>> {
    if n < 2 {
        return Err(Error::Input("corank-2 sampling needs n >= 2".into()));
    }
    let mut s = rng::stream(seed, rng::task_id("corank2", n as u64));
    let target = 4 * n - 2;
    let budget = NondegBudget::default();
    for _ in 0..RETRIES {
        let candidate = match f.elements() {
            Some(all) => {
                let w0 = random_tensor(f, n, &mut s);
                let w1 = random_tensor(f, n, &mut s);
                let (m0, m1) = (w0.flatten(), w1.flatten());
                let xs: Vec<F::Elem> = (0..=4 * n as i64).map(|t| f.from_i64(t)).collect();
                let ys: Vec<F::Elem> = xs.iter().map(|t| m0.add(&m1.scale(t)).det()).collect();
                let det = interpolate(f, &xs, &ys);
                let Some(t) = all.iter().find(|t| f.is_zero(&eval(f, &det, t))) else { continue };
                w0.add(&w1.scale(t))
            }
            None => {
                let k: Vec<F::Elem> = (0..4 * n).map(|_| f.random(&mut s)).collect();
                let space = tensors_killing(f, n, &k);
                OmegaTensor::from_coeffs(f, n, random_combination(f, &space.vectors(), space.ambient(), &mut s))?
            }
        };
        if candidate.rank() == target && !classify(&candidate, &budget).is_degenerate() {
            return Ok(candidate);
        }
    }
    Err(Error::Budget(format!("sample_corank2: no rank-{target} point, n = {n}, seed {seed}")))
}

fn tensors_killing<F: Field>(f: &F, n: usize, k: &[F::Elem]) -> Subspace<F> {
    let dim = OmegaTensor::<F>::dim_space(n);
    let cols: Vec<Vec<F::Elem>> = (0..dim)
        .map(|c| {
            let mut coeffs = vec![f.zero(); dim];
            coeffs[c] = f.one();
            OmegaTensor::from_coeffs(f, n, coeffs).unwrap().flatten().mul_vec(k)
        })
        .collect();
    Mat::from_fn(f, 4 * n, dim, |r, c| cols[c][r].clone()).kernel()
}

/// Linear system for u1 : N → V* making u1 φ ūᵀ skew in V blockwise.
/// Returns the monad of ω̄ and the solution space (u1 flattened row-major,
/// 4 × dim N).
fn fiber_system<F: Field>(base: &OmegaTensor<F>) -> Result<(crate::monad::MonadData<F>, Subspace<F>)> {
    let f = base.field();
    let m = build_monad(base)?;
    let nb = base.n();
    let dn = m.dim_n();
    // P = φ ūᵀ : dim N × 4n̄, and u1·P block b must be skew
    let p = m.phi().mul(&m.u().transpose());
    let mut rows = Vec::new();
    for b in 0..nb {
        for k in 0..4 {
            for l in k..4 {
                // (u1 P)[k, 4b+l] + (u1 P)[l, 4b+k] = 0
                let mut row = vec![f.zero(); 4 * dn];
                for i in 0..dn {
                    row[k * dn + i] = f.add(&row[k * dn + i], p.get(i, 4 * b + l));
                    row[l * dn + i] = f.add(&row[l * dn + i], p.get(i, 4 * b + k));
                }
                rows.push(row);
            }
        }
    }
    let space = Mat::from_rows(f, 4 * dn, &rows).kernel();
    Ok((m, space))
}

/// dim of the fibre of res over ω̄.
pub fn fiber_solution_dim<F: Field>(base: &OmegaTensor<F>) -> Result<usize> {
    Ok(fiber_system(base)?.1.dim())
}

/// ω over H_1 ⊕ H̄ from u1 (4 × dim N) per the block formula.
pub fn assemble_fiber<F: Field>(m: &crate::monad::MonadData<F>, u1: &Mat<F>) -> Result<OmegaTensor<F>> {
    let f = m.field();
    let u = Mat::from_fn(f, 4, u1.cols(), |r, c| u1.get(r, c).clone()).vstack(m.u());
    let flat = u.mul(m.phi()).mul(&u.transpose());
    OmegaTensor::fold(f, &flat)
}

/// One step of the induction: a random non-degenerate ω over H_n with
/// res_{e0*} ω = ω̄ and rk ω = rk ω̄.
pub fn extend_fiber<F: Field>(base: &OmegaTensor<F>, seed: u64) -> Result<OmegaTensor<F>> {
    let f = base.field();
    let (m, space) = fiber_system(base)?;
    let dn = m.dim_n();
    let basis = space.vectors();
    let mut s = rng::stream(seed, rng::task_id("fiber", base.n() as u64));
    let budget = NondegBudget::default();
    for _ in 0..RETRIES {
        let v = random_combination(f, &basis, 4 * dn, &mut s);
        let u1 = Mat::from_fn(f, 4, dn, |k, i| v[k * dn + i].clone());
        let w = assemble_fiber(&m, &u1)?;
        if !classify(&w, &budget).is_degenerate() {
            return Ok(w);
        }
    }
    Err(Error::Budget(format!(
        "extend_fiber: no non-degenerate point in a fibre of dim {} over n = {}, seed {seed}",
        space.dim(),
        base.n()
    )))
}

/// 4 × 4n̄ matrix α̃ whose b-th block is the skew matrix of α_b.
fn alpha_tilde<F: Field>(f: &F, alpha: &[Wedge<F::Elem>]) -> Mat<F> {
    let mut m = Mat::zeros(f, 4, 4 * alpha.len());
    for (b, a) in alpha.iter().enumerate() {
        for k in 0..4 {
            for l in 0..4 {
                if k != l {
                    let c = &a[wedge_index(k, l)];
                    m.set(k, 4 * b + l, if k < l { c.clone() } else { f.neg(c) });
                }
            }
        }
    }
    m
}

/// The (1,1) block −α̃ ω̄̃⁻¹ α̃ᵀ and the assembled ω for a full-rank ω̄.
pub fn extend_affine<F: Field>(base: &OmegaTensor<F>, alpha: &[Wedge<F::Elem>]) -> Result<OmegaTensor<F>> {
    let f = base.field();
    let nb = base.n();
    if alpha.len() != nb {
        return Err(Error::Dimension(format!("α needs {nb} forms, got {}", alpha.len())));
    }
    let d = base.flatten();
    let dinv = d.inverse().ok_or_else(|| Error::Input("extend_affine needs a full-rank base".into()))?;
    let b = alpha_tilde(f, alpha);
    let top = b.mul(&dinv).mul(&b.transpose()).neg();
    if !top.is_skew() {
        return Err(Error::Invariant("top-left block is not skew in V".into()));
    }
    let upper = top.hstack(&b);
    let lower = b.transpose().neg().hstack(&d);
    OmegaTensor::fold(f, &upper.vstack(&lower))
}

/// Number of free parameters of extend_affine's fibre: the rank of α ↦ α̃.
pub fn affine_fibre_dim<F: Field>(f: &F, nb: usize) -> usize {
    let cols: Vec<Vec<F::Elem>> = (0..nb * WEDGE_DIM)
        .map(|c| {
            let alpha: Vec<Wedge<F::Elem>> =
                (0..nb).map(|b| std::array::from_fn(|t| if b * WEDGE_DIM + t == c { f.one() } else { f.zero() })).collect();
            let m = alpha_tilde(f, &alpha);
            (0..4 * 4 * nb).map(|i| m.get(i / (4 * nb), i % (4 * nb)).clone()).collect()
        })
        .collect();
    Mat::from_fn(f, 16 * nb, nb * WEDGE_DIM, |r, c| cols[c][r].clone()).rank()
}

pub fn random_alpha<F: Field>(f: &F, nb: usize, seed: u64) -> Vec<Wedge<F::Elem>> {
    let mut s = rng::stream(seed, rng::task_id("alpha", nb as u64));
    (0..nb).map(|_| std::array::from_fn(|_| f.random(&mut s))).collect()
}

/// A member of M(n, r) reached by the induction chain.
pub fn sample_instanton<F: Field>(f: &F, n: usize, r: usize, seed: u64) -> Result<OmegaTensor<F>> {
    if n == 0 || n > 5 || r % 2 != 0 || r < 2 || r > 2 * n {
        return Err(Error::Input(format!("(n, r) = ({n}, {r}) is not reachable")));
    }
    if r == 2 * n {
        return sample_full(f, n, seed);
    }
    if r == 2 * n - 2 {
        return sample_corank2(f, n, seed);
    }
    let base = sample_instanton(f, n - 1, r + 2, seed)?;
    let w = extend_fiber(&base, seed)?;
    rank_split(n, w.rank())?;
    Ok(w)
}

/// Two-instanton data for ω̄_t: ω', ω'' in M(2,2) with rk ω'_{11} = rk ω''_{11} = 4
/// and Im η'_{00} + Im η''_{00} = V*, where η_{00} = ω_{00} − ω_{01} ω_{11}⁻¹ ω_{01}.
#[derive(Clone, Debug)]
pub struct OmegaBarT<F: Field> {
    pub omega1: OmegaTensor<F>,
    pub omega2: OmegaTensor<F>,
}

fn form_matrix<F: Field>(w: &OmegaTensor<F>, a: usize, b: usize) -> Mat<F> {
    crate::tensor::wedge_matrix(w.field(), &w.form(a, b))
}

/// Schur complement η_{00} of a 2-instanton with invertible ω_{11}.
pub fn eta00<F: Field>(w: &OmegaTensor<F>) -> Option<Mat<F>> {
    let w11inv = form_matrix(w, 1, 1).inverse()?;
    let w01 = form_matrix(w, 0, 1);
    Some(form_matrix(w, 0, 0).sub(&w01.mul(&w11inv).mul(&w01)))
}

impl<F: Field> OmegaBarT<F> {
    pub fn search(f: &F, seed: u64) -> Result<Self> {
        for attempt in 0..RETRIES as u64 {
            let s = rng::task_id("omega_bar_t", attempt) ^ seed;
            let (Ok(a), Ok(b)) = (sample_corank2(f, 2, s), sample_corank2(f, 2, s.wrapping_add(1))) else { continue };
            let (Some(ea), Some(eb)) = (eta00(&a), eta00(&b)) else { continue };
            if ea.rank() == 2 && eb.rank() == 2 && ea.hstack(&eb).rank() == 4 {
                return Ok(OmegaBarT { omega1: a, omega2: b });
            }
        }
        Err(Error::Budget(format!("omega_bar_t: no admissible 2-instanton pair, seed {seed}")))
    }

    /// The 4×3 map f_t : H3 → H4.
    pub fn f_t(f: &F, t0: &F::Elem, t1: &F::Elem) -> Mat<F> {
        let mut m = Mat::zeros(f, 4, 3);
        m.set(0, 0, t0.clone());
        m.set(2, 0, t1.clone());
        m.set(1, 1, f.one());
        m.set(3, 2, f.one());
        m
    }

    /// ξ_t = (−t1, 0, t0, 0), which kills the image of f_t.
    pub fn xi_t(f: &F, t0: &F::Elem, t1: &F::Elem) -> Vec<F::Elem> {
        vec![f.neg(t1), f.zero(), t0.clone(), f.zero()]
    }

    pub fn omega(&self) -> OmegaTensor<F> {
        self.omega1.block_sum(&self.omega2).expect("same field")
    }

    pub fn at(&self, t0: &F::Elem, t1: &F::Elem) -> OmegaTensor<F> {
        let f = self.omega1.field();
        self.omega().pullback(&Self::f_t(f, t0, t1))
    }
}

/// Resolve a named example. Samplers inside (two_instanton_sum,
/// omega_bar_t) use `seed`.
pub fn named_example<F: Field>(f: &F, id: &NamedExampleId, seed: u64) -> Result<NamedExample<F>> {
    Ok(match id {
        NamedExampleId::Rank6Degenerate => NamedExample::Tensor(rank6_degenerate(f)),
        NamedExampleId::ThooftNet(n) => NamedExample::Net(thooft_net(f, *n)),
        NamedExampleId::Nc(None) => NamedExample::Tensor(nc(f)),
        NamedExampleId::Nc(Some(c)) => NamedExample::Tensor(nc_of(f, &std::array::from_fn(|i| f.from_i64(c[i])))?),
        NamedExampleId::TwoInstantonSum => {
            let a = sample_corank2(f, 2, seed)?;
            let b = sample_corank2(f, 2, seed.wrapping_add(1))?;
            NamedExample::Tensor(a.block_sum(&b)?)
        }
        NamedExampleId::OmegaBarT(t0, t1) => {
            let fam = OmegaBarT::search(f, seed)?;
            NamedExample::Tensor(fam.at(&f.from_i64(*t0), &f.from_i64(*t1)))
        }
        NamedExampleId::ThreeNc => NamedExample::Tensor(diagonal(f, &three_nc_forms(f))),
    })
}

/// Conjugate by a random element of GL(H).
pub fn random_conjugate<F: Field>(w: &OmegaTensor<F>, seed: u64) -> Result<OmegaTensor<F>> {
    let f = w.field();
    let mut s = rng::stream(seed, rng::task_id("conjugate", w.n() as u64));
    for _ in 0..RETRIES {
        let g = Mat::from_fn(f, w.n(), w.n(), |_, _| f.random(&mut s));
        if g.inverse().is_some() {
            return w.conjugate(&g);
        }
    }
    Err(Error::Budget("no invertible matrix drawn".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::monad::{gamma_kernel, sigma_kernel};
    use crate::nondeg::NondegVerdict;

    #[test]
    fn ids_roundtrip() {
        for s in ["prop51", "thooft_net(4)", "nc", "nc(1,0,0,0,0,1)", "two_instanton_sum", "omega_bar_t(1,0)", "three_nc"] {
            let id: NamedExampleId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("thooft_net(9)".parse::<NamedExampleId>().is_err());
        assert!("banana".parse::<NamedExampleId>().is_err());
    }

    #[test]
    fn rank6_degenerate_and_three_nc() {
        let f = Fp::default_field();
        assert_eq!(rank6_degenerate(&f).rank(), 6);
        let t = named_example(&f, &NamedExampleId::ThreeNc, 0).unwrap().tensor().unwrap();
        assert_eq!(t.rank(), 12);
        assert!(NamedExample::Net(thooft_net(&f, 3)).tensor().is_err());
    }

    #[test]
    fn full_samples() {
        let f = Fp::default_field();
        let a = sample_full(&f, 3, 5).unwrap();
        assert_eq!(a.rank(), 12);
        assert_eq!(a.coeffs(), sample_full(&f, 3, 5).unwrap().coeffs());
        assert_eq!(sample_full(&f, 1, 0).unwrap().rank(), 4);
    }

    #[test]
    fn corank2_samples() {
        let f = Fp::default_field();
        for n in [2, 3] {
            let w = sample_corank2(&f, n, 1).unwrap();
            assert_eq!(w.rank(), 4 * n - 2);
        }
        let q = Rationals;
        assert_eq!(sample_corank2(&q, 2, 1).unwrap().rank(), 6);
    }

    #[test]
    fn fibre_of_two_nc() {
        let f = Fp::default_field();
        let base = nc(&f).block_sum(&nc(&f)).unwrap();
        assert_eq!(fiber_solution_dim(&base).unwrap(), 12);
        assert_eq!(build_monad(&base).unwrap().h_e(1).unwrap().h0, 10);
    }

    #[test]
    fn zero_u1_is_degenerate() {
        let f = Fp::default_field();
        let base = sample_full(&f, 2, 3).unwrap();
        let m = build_monad(&base).unwrap();
        let w = assemble_fiber(&m, &Mat::zeros(&f, 4, m.dim_n())).unwrap();
        assert_eq!(w.rank(), 8);
        assert!(classify(&w, &NondegBudget::default()).is_degenerate());
    }

    #[test]
    fn extend_fiber_restricts_back() {
        let f = Fp::default_field();
        let base = sample_full(&f, 2, 9).unwrap();
        let w = extend_fiber(&base, 9).unwrap();
        assert_eq!(w.n(), 3);
        assert_eq!(w.rank(), 8);
        let (back, _) = w.restrict_xi(&[1, 0, 0]).unwrap();
        assert_eq!(back.coeffs(), base.coeffs());
    }

    #[test]
    fn affine_roundtrip() {
        let f = Fp::default_field();
        let base = sample_full(&f, 3, 2).unwrap();
        assert_eq!(affine_fibre_dim(&f, 3), 18);
        let w = extend_affine(&base, &random_alpha(&f, 3, 1)).unwrap();
        assert_eq!(w.rank(), 12);
        assert_eq!(w.restrict_xi(&[1, 0, 0, 0]).unwrap().0.coeffs(), base.coeffs());
        let z = extend_affine(&base, &random_alpha(&f, 3, 1).iter().map(|_| crate::tensor::zero_wedge(&f)).collect::<Vec<_>>()).unwrap();
        assert!(classify(&z, &NondegBudget::default()).is_degenerate());
    }

    #[test]
    fn thooft_tensors() {
        let f = Fp::default_field();
        for n in 2..=5 {
            let w = thooft_omega(&f, n, 0).unwrap();
            assert_eq!(w.rank(), 2 * n + 2);
            assert!(w.image_n().is_subspace_of(&thooft_net(&f, n).image()));
        }
        let w4 = thooft_omega(&f, 4, 0).unwrap();
        let (r4, _) = w4.restrict_xi(&[0, 1, 0, 0]).unwrap();
        assert_eq!(r4.rank(), 10);
        assert_eq!(gamma_kernel(&r4).dim(), 0);
        let w5 = thooft_omega(&f, 5, 0).unwrap();
        let (r5, _) = w5.restrict_xi(&[0, 0, 1, 0, 0]).unwrap();
        assert_eq!(r5.rank(), 12);
        assert_eq!(gamma_kernel(&r5).dim(), 0);
    }

    #[test]
    fn omega_bar_t_ranks() {
        let f = Fp::new(31);
        let fam = OmegaBarT::search(&f, 0).unwrap();
        assert_eq!(fam.at(&1, &1).rank(), 12);
        let edge = fam.at(&1, &0);
        assert_eq!(edge.rank(), 10);
        assert_eq!(gamma_kernel(&edge).dim(), 0);
    }

    #[test]
    fn instanton_chain_small() {
        let f = Fp::default_field();
        let w = sample_instanton(&f, 4, 2, 3).unwrap();
        assert_eq!(w.rank(), 10);
        assert!(matches!(classify(&w, &NondegBudget::default()), NondegVerdict::CertifiedNondegenerate { .. }));
        assert_eq!(sigma_kernel(&w).dim(), 0);
        assert!(sample_instanton(&f, 3, 8, 0).is_err());
    }
}
