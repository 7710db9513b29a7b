//! Induction checks and smoothness certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::fiber_solution_dim;
use crate::field::{Field, FieldSpec};
use crate::geometry::k_intersection;
use crate::matrix::{Mat, Subspace};
use crate::monad::{
    build_monad, coh_table, expected_dim_full, expected_dim_sym, gamma_kernel, rank_split, restricted_monad, sigma_kernel,
    tangent_dim, Ambient, CohTable,
};
use crate::nondeg::{classify, NondegBudget, NondegVerdict};
use crate::rng;
use crate::tensor::{OmegaTensor, TensorFile};

pub const SCHEMA_VERSION: u32 = 1;

/// The four conditions on (ω, ξ) that must coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RklCheck {
    /// rk res_ξ ω = rk ω
    pub rank_preserved: bool,
    /// Im ω ∩ (ξ⊗V*) = 0
    pub trivial_intersection: bool,
    /// ξ⊗V* → Q injective
    pub injective_to_q: bool,
    /// h⁰Ē = 0 from the restricted monad
    pub h0_bar_zero: bool,
}

impl RklCheck {
    pub fn agree(&self) -> bool {
        let v = self.rank_preserved;
        self.trivial_intersection == v && self.injective_to_q == v && self.h0_bar_zero == v
    }
    pub fn all(&self) -> bool {
        self.agree() && self.rank_preserved
    }
}

fn xi_tensor_v<F: Field>(f: &F, xi: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let n = xi.len();
    (0..4)
        .map(|k| {
            let mut v = vec![f.zero(); 4 * n];
            for a in 0..n {
                v[4 * a + k] = xi[a].clone();
            }
            v
        })
        .collect()
}

pub fn rkl_check<F: Field>(omega: &OmegaTensor<F>, xi: &[F::Elem]) -> Result<RklCheck> {
    let f = omega.field();
    let (bar, _) = omega.restrict_xi(xi)?;
    let rank_preserved = bar.rank() == omega.rank();
    let nsp = omega.image_n();
    let xv = Subspace::from_vectors(f, 4 * omega.n(), &xi_tensor_v(f, xi));
    let trivial_intersection = nsp.intersect(&xv)?.is_zero();
    // images of ξ⊗x_k in Q = (H*⊗V*)/N, read through the annihilator of N
    let ann = nsp.annihilator();
    let imgs = Mat::from_rows(f, 4 * omega.n(), &xi_tensor_v(f, xi));
    let injective_to_q = ann.basis().mul(&imgs.transpose()).rank() == 4;
    let h0_bar_zero = restricted_monad(omega, xi)?.h_e(0)?.h0 == 0;
    Ok(RklCheck { rank_preserved, trivial_intersection, injective_to_q, h0_bar_zero })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiTrial {
    pub xi: Vec<String>,
    pub rank_preserved: bool,
    pub h1_bar_1: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiSearch {
    pub xi: Vec<String>,
    pub h1_bar_1: usize,
    pub trial_index: usize,
    pub log: Vec<XiTrial>,
}

impl XiSearch {
    pub fn success(&self) -> bool {
        self.h1_bar_1 <= 1
    }
}

fn random_vector<F: Field>(f: &F, len: usize, s: &mut rng::Stream) -> Vec<F::Elem> {
    loop {
        let v: Vec<F::Elem> = (0..len).map(|_| f.random(s)).collect();
        if v.iter().any(|c| !f.is_zero(c)) {
            return v;
        }
    }
}

/// Random ξ, kept when rank-preserving; returns the minimizer of
/// h¹Ē(1) = dim gamma_kernel(res_ξ ω), lowest trial index on ties.
pub fn find_xi<F: Field>(omega: &OmegaTensor<F>, trials: usize, seed: u64) -> Result<XiSearch> {
    let f = omega.field();
    if omega.n() != 5 || rank_split(5, omega.rank()).ok() != Some(2) {
        return Err(Error::Input("find_xi expects a member of M(5,2)".into()));
    }
    let mut s = rng::stream(seed, rng::task_id("find_xi", 0));
    let mut log = Vec::new();
    let mut best: Option<(usize, usize, Vec<F::Elem>)> = None;
    for t in 0..trials {
        let xi = random_vector(f, omega.n(), &mut s);
        let (bar, _) = omega.restrict_xi(&xi)?;
        let preserved = bar.rank() == omega.rank();
        let h1 = preserved.then(|| gamma_kernel(&bar).dim());
        log.push(XiTrial { xi: xi.iter().map(|c| f.format(c)).collect(), rank_preserved: preserved, h1_bar_1: h1 });
        if let Some(h) = h1 {
            if best.as_ref().is_none_or(|b| h < b.0) {
                best = Some((h, t, xi));
            }
            if h == 0 {
                break;
            }
        }
    }
    let (h1, idx, xi) = best.ok_or_else(|| Error::Budget(format!("no rank-preserving ξ in {trials} trials")))?;
    Ok(XiSearch { xi: xi.iter().map(|c| f.format(c)).collect(), h1_bar_1: h1, trial_index: idx, log })
}

/// A 2-dim U ⊂ H* with N ∩ (U⊗V*) = 0, and the number of trials used.
pub fn find_pair<F: Field>(omega: &OmegaTensor<F>, trials: usize, seed: u64) -> Result<(Subspace<F>, usize)> {
    let f = omega.field();
    let n = omega.n();
    if n < 5 {
        return Err(Error::Input(format!("find_pair needs n >= 5, got {n}")));
    }
    let mut s = rng::stream(seed, rng::task_id("find_pair", 0));
    for t in 1..=trials {
        let u = Subspace::from_vectors(f, n, &[random_vector(f, n, &mut s), random_vector(f, n, &mut s)]);
        if u.dim() == 2 && k_intersection(omega, &u)?.space.is_zero() {
            return Ok((u, t));
        }
    }
    Err(Error::Budget(format!("no 2-dim U with trivial intersection in {trials} trials")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    pub hash: String,
    pub n: usize,
    pub r: Option<usize>,
    pub field: FieldSpec,
    pub seed: Option<u64>,
    pub tensor: TensorFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentDims {
    pub full_skew: i64,
    pub sym_lambda: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionWitness {
    pub xi: Vec<String>,
    pub rank_preserved: bool,
    pub h1_bar_1: usize,
    pub h2_s2_bar: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub nondegeneracy: NondegVerdict,
    pub rank: usize,
    pub sigma_kernel_dim: usize,
    pub gamma_kernel_dim: usize,
    pub tangent_dims: TangentDims,
    pub expected_dims: TangentDims,
    pub coh_table: Option<CohTable>,
    pub induction_witness: Option<InductionWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub subject: Subject,
    pub verdicts: Verdicts,
    /// non-degenerate of admissible rank
    pub modular: bool,
    /// smooth point of the expected dimension
    pub smooth: bool,
    /// violated consistency checks; empty for a sound certificate
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
    pub fn is_consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Twists tabulated in certificates.
pub const CERT_DMAX: i64 = 3;

pub fn smoothness_certificate<F: Field>(
    omega: &OmegaTensor<F>,
    seed: Option<u64>,
    xi: Option<&[F::Elem]>,
) -> Result<Certificate> {
    let f = omega.field();
    let n = omega.n();
    let rank = omega.rank();
    let m = rank / 2;
    let r = rank_split(n, rank).ok();
    let nondegeneracy = classify(omega, &NondegBudget::default());
    let sigma = sigma_kernel(omega).dim();
    let gamma = gamma_kernel(omega).dim();
    let tangent_dims = TangentDims {
        full_skew: tangent_dim(omega, Ambient::FullSkew) as i64,
        sym_lambda: tangent_dim(omega, Ambient::SymLambda) as i64,
    };
    let expected_dims = TangentDims { full_skew: expected_dim_full(n, m), sym_lambda: expected_dim_sym(n, m) };
    let mut failures = Vec::new();
    // the monad of a degenerate tensor is not a bundle, so no table
    let coh_table = match r {
        Some(_) if !nondegeneracy.is_degenerate() => Some(coh_table(omega, CERT_DMAX)?),
        _ => None,
    };
    if tangent_dims.full_skew != expected_dims.full_skew {
        failures.push(format!("full-skew tangent {} != {}", tangent_dims.full_skew, expected_dims.full_skew));
    }
    if let Some(t) = &coh_table {
        let s2 = t.s2.expect("filled above");
        if s2.h2 != sigma {
            failures.push(format!("h2 S2E = {} but sigma kernel has dim {sigma}", s2.h2));
        }
        if t.row(1).map(|row| row.h1) != Some(gamma) {
            failures.push(format!("h1 E(1) differs from gamma kernel dim {gamma}"));
        }
        let e = t.euler_failures();
        if !e.is_empty() {
            failures.push(format!("Euler identity fails at d = {e:?}"));
        }
        if t.rows.iter().any(|row| row.defect != 0) {
            failures.push("monad has a left-exactness defect".into());
        }
    }
    let smooth_by_sigma = sigma == 0;
    let smooth_by_tangent = tangent_dims.sym_lambda == expected_dims.sym_lambda;
    if smooth_by_sigma != smooth_by_tangent {
        failures.push(format!("sigma kernel dim {sigma} disagrees with tangent {} vs expected {}", tangent_dims.sym_lambda, expected_dims.sym_lambda));
    }
    let modular = r.is_some() && !nondegeneracy.is_degenerate();
    let induction_witness = match xi {
        Some(xi) => {
            let (bar, _) = omega.restrict_xi(xi)?;
            let preserved = bar.rank() == rank;
            let h2_bar = if preserved { build_monad(&bar)?.s2_table()?.h2 } else { 0 };
            Some(InductionWitness {
                xi: xi.iter().map(|c| f.format(c)).collect(),
                rank_preserved: preserved,
                h1_bar_1: gamma_kernel(&bar).dim(),
                h2_s2_bar: h2_bar,
            })
        }
        None => None,
    };
    Ok(Certificate {
        schema_version: SCHEMA_VERSION,
        subject: Subject { hash: omega.hash(), n, r, field: f.spec(), seed, tensor: omega.to_file() },
        verdicts: Verdicts {
            nondegeneracy,
            rank,
            sigma_kernel_dim: sigma,
            gamma_kernel_dim: gamma,
            tangent_dims,
            expected_dims,
            coh_table,
            induction_witness,
        },
        modular,
        smooth: modular && smooth_by_sigma && smooth_by_tangent,
        failures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Propagation {
    pub h2_s2: usize,
    pub h2_s2_bar: usize,
    pub h1_bar_1: usize,
    /// (h²S²Ē = 0 ∧ h¹Ē(1) = 0) ⇒ h²S²E = 0
    pub implication_holds: bool,
    /// h²S²E ≤ h¹Ē(1) when h²S²Ē = 0
    pub inequality_holds: bool,
}

pub fn propagation_check<F: Field>(omega: &OmegaTensor<F>, xi: &[F::Elem]) -> Result<Propagation> {
    let (bar, _) = omega.restrict_xi(xi)?;
    if bar.rank() != omega.rank() {
        return Err(Error::Input("propagation needs a rank-preserving ξ".into()));
    }
    let h2_s2 = build_monad(omega)?.s2_table()?.h2;
    let h2_s2_bar = build_monad(&bar)?.s2_table()?.h2;
    let h1_bar_1 = gamma_kernel(&bar).dim();
    Ok(Propagation {
        h2_s2,
        h2_s2_bar,
        h1_bar_1,
        implication_holds: !(h2_s2_bar == 0 && h1_bar_1 == 0) || h2_s2 == 0,
        inequality_holds: h2_s2_bar != 0 || h2_s2 <= h1_bar_1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDims {
    pub solution_dim: usize,
    pub predicted: usize,
}

impl FiberDims {
    pub fn equal(&self) -> bool {
        self.solution_dim == self.predicted
    }
}

/// Fibre dimension over ω̄ by linear solving against n̄ + h⁰E_ω̄(1).
pub fn fiber_dim_check<F: Field>(base: &OmegaTensor<F>) -> Result<FiberDims> {
    let solution_dim = fiber_solution_dim(base)?;
    let h0 = build_monad(base)?.h_e(1)?.h0;
    Ok(FiberDims { solution_dim, predicted: base.n() + h0 })
}
