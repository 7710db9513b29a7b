//! Non-degeneracy of ω: does ω(h⊗v) vanish for some nonzero h, v?

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, FieldSpec, Fp, Fq};
use crate::matrix::Mat;
use crate::poly::Monomials;
use crate::tensor::OmegaTensor;

/// A zero of ω(h⊗v) over some field, elements written in that field's
/// text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub field: FieldSpec,
    pub h: Vec<String>,
    pub v: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondegBudget {
    /// cap on |P(H)(F_{q^j})| per scanned field
    pub max_points: u64,
    /// extension degrees j = 1..k scanned over the working prime field
    pub max_ext_degree: u32,
    /// auxiliary reductions use primes up to this bound
    pub aux_prime_bound: u64,
    /// auxiliary reductions only for tensors whose lifts have |c| at most this
    pub aux_height: u64,
    /// points tried by the bounded probe when a full scan is over budget
    pub probe_points: u64,
    /// largest bidegree tried by the spanning certificate
    pub cert_max: (usize, usize),
}

impl Default for NondegBudget {
    fn default() -> Self {
        NondegBudget { max_points: 200_000, max_ext_degree: 2, aux_prime_bound: 311, aux_height: 1000, probe_points: 2000, cert_max: (4, 4) }
    }
}

impl NondegBudget {
    pub fn tiny() -> Self {
        NondegBudget { max_points: 0, max_ext_degree: 1, aux_prime_bound: 0, aux_height: 0, probe_points: 0, cert_max: (1, 1) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateReason {
    /// rk ω < 2n+2, which forces degeneracy
    Rank,
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NondegVerdict {
    Degenerate { reason: DegenerateReason, witness: Option<Witness> },
    CertifiedNondegenerate { d: usize, e: usize },
    Unknown { budget: NondegBudget },
}

impl NondegVerdict {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, NondegVerdict::Degenerate { .. })
    }
    pub fn is_certified(&self) -> bool {
        matches!(self, NondegVerdict::CertifiedNondegenerate { .. })
    }
}

/// Number of points of P^{n−1}(F_q), saturating.
fn projective_count(q: u64, n: usize) -> u64 {
    let mut total: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..n {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(q);
    }
    total
}

/// Scan P(H)(G) in a fixed order (leading coordinate 1, remaining
/// coordinates in counter order); for each h solve ω(h⊗·) = 0 for v.
fn scan<G: Field>(g: &G, m: &Mat<G>, n: usize) -> Option<(Vec<G::Elem>, Vec<G::Elem>)> {
    let elems = g.elements().expect("finite field");
    scan_limited(g, m, n, &elems, u64::MAX)
}

/// As `scan`, with coordinates drawn from `elems` and at most `limit` points.
fn scan_limited<G: Field>(g: &G, m: &Mat<G>, n: usize, elems: &[G::Elem], limit: u64) -> Option<(Vec<G::Elem>, Vec<G::Elem>)> {
    let q = elems.len();
    let mut visited: u64 = 0;
    for lead in 0..n {
        let free = n - 1 - lead;
        let mut counter = vec![0usize; free];
        loop {
            let mut h = vec![g.zero(); n];
            h[lead] = g.one();
            for (t, &c) in counter.iter().enumerate() {
                h[lead + 1 + t] = elems[c].clone();
            }
            visited += 1;
            if visited > limit {
                return None;
            }
            let a = Mat::from_fn(g, 4 * n, 4, |r, l| {
                (0..n).fold(g.zero(), |acc, b| g.mul_add(&acc, m.get(r, 4 * b + l), &h[b]))
            });
            let ker = a.kernel();
            if !ker.is_zero() {
                return Some((h, ker.vectors()[0].clone()));
            }
            // advance the counter
            let mut pos = 0;
            loop {
                if pos == free {
                    break;
                }
                counter[pos] += 1;
                if counter[pos] < q {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            if pos == free {
                break;
            }
        }
    }
    None
}

fn reduce_flat<F: Field, G: Field>(omega: &OmegaTensor<F>, g: &G) -> Option<Mat<G>> {
    let m = omega.flatten();
    let f = omega.field();
    let mut vals = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            vals.push(g.from_rational(&f.lift(m.get(r, c))?)?);
        }
    }
    Some(Mat::from_fn(g, m.rows(), m.cols(), |r, c| vals[r * m.cols() + c].clone()))
}

fn to_witness<G: Field>(g: &G, h: &[G::Elem], v: &[G::Elem]) -> Witness {
    Witness { field: g.spec(), h: h.iter().map(|x| g.format(x)).collect(), v: v.iter().map(|x| g.format(x)).collect() }
}

/// Witness in the working field from a candidate h given by small integers.
fn verify_lifted<F: Field>(omega: &OmegaTensor<F>, h_int: &[i64]) -> Option<Witness> {
    let f = omega.field();
    let h: Vec<F::Elem> = h_int.iter().map(|&x| f.from_i64(x)).collect();
    if h.iter().all(|x| f.is_zero(x)) {
        return None;
    }
    let m = omega.flatten();
    let n = omega.n();
    let a = Mat::from_fn(f, 4 * n, 4, |r, l| (0..n).fold(f.zero(), |acc, b| f.mul_add(&acc, m.get(r, 4 * b + l), &h[b])));
    let ker = a.kernel();
    (!ker.is_zero()).then(|| to_witness(f, &h, &ker.vectors()[0]))
}

/// Exhaustive witness scan over the working finite field F_q and, for
/// prime q, its extensions F_{q^j}, j ≤ k.
pub fn witness_search<F: Field>(omega: &OmegaTensor<F>, max_ext_degree: u32, max_points: u64) -> Result<Option<Witness>> {
    let f = omega.field();
    let n = omega.n();
    let Some(q) = f.order() else {
        return Err(Error::Input("witness search needs a finite field".into()));
    };
    for j in 1..=max_ext_degree.max(1) {
        let size = q.checked_pow(j).unwrap_or(u64::MAX);
        if projective_count(size, n) > max_points {
            return Err(Error::Budget(format!("P^{}(F_{size}) exceeds {max_points} points", n - 1)));
        }
        if j == 1 {
            let m = omega.flatten();
            if let Some((h, v)) = scan(f, &m, n) {
                return Ok(Some(to_witness(f, &h, &v)));
            }
            continue;
        }
        let FieldSpec::Prime(p) = f.spec() else { break };
        let g = Fq::new(p, j)?;
        let m = reduce_flat(omega, &g).expect("prime field embeds in its extensions");
        if let Some((h, v)) = scan(&g, &m, n) {
            return Ok(Some(to_witness(&g, &h, &v)));
        }
    }
    Ok(None)
}

/// The first `max_points` points of the enumeration; over ℚ the
/// coordinates run through 0, ±1, ±2.
pub fn witness_probe<F: Field>(omega: &OmegaTensor<F>, max_points: u64) -> Option<Witness> {
    let f = omega.field();
    let elems = f.elements().unwrap_or_else(|| [0, 1, -1, 2, -2].iter().map(|&x| f.from_i64(x)).collect());
    let m = omega.flatten();
    scan_limited(f, &m, omega.n(), &elems, max_points).map(|(h, v)| to_witness(f, &h, &v))
}

/// Reduce modulo small auxiliary primes, scan there, and keep a candidate
/// only if it is an exact witness in the working field.
fn auxiliary_search<F: Field>(omega: &OmegaTensor<F>, budget: &NondegBudget) -> Option<Witness> {
    let f = omega.field();
    let n = omega.n();
    let m = omega.flatten();
    let mut height: u64 = 0;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let l = f.lift(m.get(r, c))?;
            let num = num_traits::ToPrimitive::to_i64(l.numer())?;
            let den = num_traits::ToPrimitive::to_i64(l.denom())?;
            height = height.max(num.unsigned_abs()).max(den.unsigned_abs());
        }
    }
    if height > budget.aux_height {
        return None;
    }
    for p in (3..=budget.aux_prime_bound).filter(|&p| is_prime(p) && p != f.characteristic()) {
        if projective_count(p, n) > budget.max_points {
            break;
        }
        let g = Fp::new(p);
        let Some(mp) = reduce_flat(omega, &g) else { continue };
        if let Some((h, _)) = scan(&g, &mp, n) {
            let h_int: Vec<i64> = h.iter().map(|&x| g.signed(x)).collect();
            if let Some(w) = verify_lifted(omega, &h_int) {
                return Some(w);
            }
        }
    }
    None
}

/// True iff the bidegree-(d,e) part of the ideal generated by the
/// coordinates of ω(h⊗v) is all of S^dH*⊗S^eV*. A true answer certifies
/// that ω has no witness over the algebraic closure.
pub fn spanning_certificate<F: Field>(omega: &OmegaTensor<F>, d: usize, e: usize) -> bool {
    assert!(d >= 1 && e >= 1, "bidegrees start at (1,1)");
    let f = omega.field();
    let n = omega.n();
    // the generators span the row space of the flattening
    let gens = omega.flatten().row_space();
    let mh = Monomials::new(n, d as i64 - 1);
    let mv = Monomials::new(4, e as i64 - 1);
    let th = Monomials::new(n, d as i64);
    let tv = Monomials::new(4, e as i64);
    let width = th.len() * tv.len();
    let mut elim = Eliminator::new(f, width);
    for g in gens.vectors() {
        for ih in 0..mh.len() {
            for iv in 0..mv.len() {
                let mut row = vec![f.zero(); width];
                for (idx, c) in g.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let (b, l) = (idx / 4, idx % 4);
                    let col = mh.times_var(ih, b, &th) * tv.len() + mv.times_var(iv, l, &tv);
                    row[col] = f.add(&row[col], c);
                }
                elim.push(row);
                if elim.rank() == width {
                    return true;
                }
            }
        }
    }
    false
}

/// Incremental row reduction with early exit.
struct Eliminator<F: Field> {
    field: F,
    width: usize,
    /// reduced rows, each normalized at its pivot
    rows: Vec<(usize, Vec<F::Elem>)>,
    pivot_of_col: Vec<Option<usize>>,
}

impl<F: Field> Eliminator<F> {
    fn new(f: &F, width: usize) -> Self {
        Eliminator { field: f.clone(), width, rows: Vec::new(), pivot_of_col: vec![None; width] }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn push(&mut self, mut row: Vec<F::Elem>) {
        let f = self.field.clone();
        for c in 0..self.width {
            if f.is_zero(&row[c]) {
                continue;
            }
            match self.pivot_of_col[c] {
                Some(ri) => {
                    let factor = f.neg(&row[c]);
                    let prow = &self.rows[ri].1;
                    for t in c..self.width {
                        if !f.is_zero(&prow[t]) {
                            row[t] = f.mul_add(&row[t], &factor, &prow[t]);
                        }
                    }
                }
                None => {
                    let inv = f.inv(&row[c]).unwrap();
                    for x in row.iter_mut().skip(c) {
                        *x = f.mul(x, &inv);
                    }
                    self.pivot_of_col[c] = Some(self.rows.len());
                    self.rows.push((c, row));
                    return;
                }
            }
        }
    }
}

/// Bidegrees tried by `classify`, by total degree then d.
pub fn certificate_degrees(max: (usize, usize)) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..=max.0).flat_map(|d| (1..=max.1).map(move |e| (d, e))).collect();
    v.sort_by_key(|&(d, e)| (d + e, d));
    v
}

/// Rank test, the cheapest certificate, witness scans, then the remaining
/// certificate degrees.
pub fn classify<F: Field>(omega: &OmegaTensor<F>, budget: &NondegBudget) -> NondegVerdict {
    let n = omega.n();
    let degrees = certificate_degrees(budget.cert_max);
    if omega.rank() >= 2 * n + 2 {
        if let Some(&(d, e)) = degrees.first() {
            if spanning_certificate(omega, d, e) {
                return NondegVerdict::CertifiedNondegenerate { d, e };
            }
        }
    }
    let direct = if omega.field().order().is_some() {
        witness_search(omega, budget.max_ext_degree, budget.max_points).ok().flatten()
    } else {
        None
    };
    let direct = direct.or_else(|| auxiliary_search(omega, budget)).or_else(|| witness_probe(omega, budget.probe_points));
    if omega.rank() < 2 * n + 2 {
        return NondegVerdict::Degenerate { reason: DegenerateReason::Rank, witness: direct };
    }
    if let Some(w) = direct {
        return NondegVerdict::Degenerate { reason: DegenerateReason::Witness, witness: Some(w) };
    }
    for &(d, e) in degrees.iter().skip(1) {
        if spanning_certificate(omega, d, e) {
            return NondegVerdict::CertifiedNondegenerate { d, e };
        }
    }
    NondegVerdict::Unknown { budget: *budget }
}

/// Check a witness over the working field exactly.
pub fn verify_witness<F: Field>(omega: &OmegaTensor<F>, w: &Witness) -> Result<bool> {
    let f = omega.field();
    if w.field != f.spec() {
        return Err(Error::Input(format!("witness lives over {}, not {}", w.field, f.spec())));
    }
    let h: Vec<F::Elem> = w.h.iter().map(|s| f.parse(s)).collect::<Result<_>>()?;
    let v: Vec<F::Elem> = w.v.iter().map(|s| f.parse(s)).collect::<Result<_>>()?;
    let nonzero = |x: &[F::Elem]| x.iter().any(|c| !f.is_zero(c));
    Ok(nonzero(&h) && nonzero(&v) && omega.apply(&h, &v).iter().all(|c| f.is_zero(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rng;

    fn rank6_degenerate<F: Field>(f: &F) -> OmegaTensor<F> {
        // [[x1∧x2, x1∧x3], [x1∧x3, x0∧x1 + x2∧x3]]
        OmegaTensor::from_i64_forms(
            f,
            &[vec![[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]], vec![[0, 0, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1]]],
        )
    }

    fn nc<F: Field>(f: &F) -> OmegaTensor<F> {
        OmegaTensor::from_i64_forms(f, &[vec![[1, 0, 0, 0, 0, 1]]])
    }

    #[test]
    fn rank6_degenerate_witness() {
        let f = Fp::default_field();
        let w = rank6_degenerate(&f);
        assert_eq!(w.rank(), 6);
        let found = witness_search(&w, 1, 200_000).unwrap().unwrap();
        assert_eq!(found.h, vec!["1", "0"]);
        assert_eq!(found.v, vec!["1", "0", "0", "0"]);
        assert!(verify_witness(&w, &found).unwrap());
        for (d, e) in certificate_degrees((3, 3)) {
            assert!(!spanning_certificate(&w, d, e));
        }
        assert!(classify(&w, &NondegBudget::default()).is_degenerate());
    }

    #[test]
    fn rank6_degenerate_over_rationals_uses_auxiliary_primes() {
        let q = Rationals;
        let v = classify(&rank6_degenerate(&q), &NondegBudget::default());
        match v {
            NondegVerdict::Degenerate { reason: DegenerateReason::Witness, witness: Some(w) } => {
                assert_eq!(w.field, FieldSpec::Rational);
                assert!(verify_witness(&rank6_degenerate(&q), &w).unwrap());
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn nc_is_nondegenerate() {
        let f = Fp::default_field();
        assert!(witness_search(&nc(&f), 1, 10).unwrap().is_none());
        // pinned: the certificate closes at (1,1) over F_p and over Q
        assert_eq!(classify(&nc(&f), &NondegBudget::default()), NondegVerdict::CertifiedNondegenerate { d: 1, e: 1 });
        assert_eq!(classify(&nc(&Rationals), &NondegBudget::default()), NondegVerdict::CertifiedNondegenerate { d: 1, e: 1 });
        let small = Fp::new(7);
        assert!(witness_search(&nc(&small), 2, 100).unwrap().is_none());
    }

    #[test]
    fn zero_tensor_witness() {
        let f = Fp::new(5);
        let z = OmegaTensor::zero(&f, 2);
        let w = witness_search(&z, 1, 1000).unwrap().unwrap();
        assert_eq!(w.h, vec!["1", "0"]);
        assert_eq!(w.v, vec!["1", "0", "0", "0"]);
    }

    #[test]
    fn low_rank_is_degenerate() {
        let f = Fp::default_field();
        let d = nc(&f).block_sum(&OmegaTensor::zero(&f, 1)).unwrap();
        assert!(matches!(classify(&d, &NondegBudget::default()), NondegVerdict::Degenerate { reason: DegenerateReason::Rank, .. }));
    }

    #[test]
    fn tiny_budget_is_unknown() {
        let f = Fp::default_field();
        assert!(matches!(classify(&rank6_degenerate(&f), &NondegBudget::tiny()), NondegVerdict::Unknown { .. }));
        let mut s = rng::stream(4, 0);
        let c = (0..OmegaTensor::<Fp>::dim_space(3)).map(|_| f.random(&mut s)).collect();
        let w = OmegaTensor::from_coeffs(&f, 3, c).unwrap();
        assert!(witness_search(&w, 1, 1000).is_err());
    }

    #[test]
    fn maximal_rank_certifies_at_once() {
        let f = Fp::new(31);
        for seed in 0..20u64 {
            let mut s = rng::stream(seed, 7);
            let c = (0..OmegaTensor::<Fp>::dim_space(2)).map(|_| f.random(&mut s)).collect();
            let w = OmegaTensor::from_coeffs(&f, 2, c).unwrap();
            if w.rank() == 8 {
                assert!(spanning_certificate(&w, 1, 1));
                assert!(witness_search(&w, 2, 10_000).unwrap().is_none());
            }
        }
    }

    #[test]
    fn conjugates_of_rank6_degenerate_keep_a_witness() {
        let f = Fp::new(31);
        for seed in 0..10u64 {
            let g = crate::matrix::sample_matrix(2, 2, &f, seed);
            let Ok(w) = rank6_degenerate(&f).conjugate(&g) else { continue };
            let wit = witness_search(&w, 1, 10_000).unwrap().expect("witness survives GL(H)");
            assert!(verify_witness(&w, &wit).unwrap());
            for (d, e) in certificate_degrees((3, 3)) {
                assert!(!spanning_certificate(&w, d, e));
            }
        }
    }
}
