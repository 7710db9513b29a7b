//! Restriction of E to planes and lines: sections, splitting orders,
//! jumping-line pencils, K-subspace intersections and the quadric ideals
//! cut out by homomorphisms of null-correlation bundles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Fq};
use crate::matrix::{Mat, Subspace};
use crate::monad::{build_monad, graded_left_map_lin, graded_right_map_lin, rank_split, MonadData};
use crate::poly::{eval, interpolate, trim, Monomials, UniPoly};
use crate::tensor::{pfaffian, pfaffian_pairing, wedge_matrix, wedge_vectors, OmegaTensor, Wedge};

/// A line L = P(ann W) ⊂ P(V), kept both as its equations W ⊂ V* and as
/// the points spanning it.
#[derive(Clone, Debug)]
pub struct LineSpec<F: Field> {
    w: Subspace<F>,
    points: [Vec<F::Elem>; 2],
    lambda: Wedge<F::Elem>,
}

impl<F: Field> LineSpec<F> {
    /// The line through two points of P(V).
    pub fn through(f: &F, p: &[F::Elem], q: &[F::Elem]) -> Result<Self> {
        if p.len() != 4 || q.len() != 4 {
            return Err(Error::Dimension("points of P(V) have 4 coordinates".into()));
        }
        let span = Subspace::from_vectors(f, 4, &[p.to_vec(), q.to_vec()]);
        if span.dim() != 2 {
            return Err(Error::Input("a line needs two distinct points".into()));
        }
        let w = span.annihilator();
        let lambda = wedge_vectors(f, p, q);
        Ok(LineSpec { w, points: [p.to_vec(), q.to_vec()], lambda })
    }

    /// The line with equations spanning W ⊂ V*.
    pub fn from_equations(w: &Subspace<F>) -> Result<Self> {
        if w.ambient() != 4 || w.dim() != 2 {
            return Err(Error::Dimension("a line is cut out by a 2-dim subspace of V*".into()));
        }
        let pts = w.annihilator().vectors();
        Self::through(w.field(), &pts[0], &pts[1])
    }

    pub fn equations(&self) -> &Subspace<F> {
        &self.w
    }
    pub fn points(&self) -> &[Vec<F::Elem>; 2] {
        &self.points
    }
    /// Plücker vector in Λ²V.
    pub fn lambda(&self) -> &Wedge<F::Elem> {
        &self.lambda
    }

    /// λ is decomposable and each equation contracts it to zero.
    pub fn is_consistent(&self) -> bool {
        let f = self.w.field();
        if !f.is_zero(&pfaffian(f, &self.lambda)) {
            return false;
        }
        let [p, q] = &self.points;
        self.w.vectors().iter().all(|z| {
            let dot = |v: &[F::Elem]| z.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b));
            f.is_zero(&dot(p)) && f.is_zero(&dot(q))
        })
    }

    /// 4×2 matrix restricting linear forms to L in the coordinates (s, t)
    /// of the point s·p + t·q.
    fn restriction(&self) -> Mat<F> {
        let f = self.w.field();
        Mat::from_fn(f, 4, 2, |k, v| self.points[v][k].clone())
    }
}

/// A plane P = P(ker z) ⊂ P(V).
#[derive(Clone, Debug)]
pub struct PlaneSpec<F: Field> {
    z: Vec<F::Elem>,
}

impl<F: Field> PlaneSpec<F> {
    pub fn new(f: &F, z: Vec<F::Elem>) -> Result<Self> {
        if z.len() != 4 || z.iter().all(|c| f.is_zero(c)) {
            return Err(Error::Input("a plane needs a nonzero z in V*".into()));
        }
        Ok(PlaneSpec { z })
    }
    pub fn z(&self) -> &[F::Elem] {
        &self.z
    }
}

/// H*⊗S for a subspace S ⊂ V*, inside H*⊗V*.
fn h_dual_tensor<F: Field>(f: &F, n: usize, s: &[Vec<F::Elem>]) -> Subspace<F> {
    let mut vs = Vec::new();
    for a in 0..n {
        for z in s {
            let mut v = vec![f.zero(); 4 * n];
            v[4 * a..4 * a + 4].clone_from_slice(z);
            vs.push(v);
        }
    }
    Subspace::from_vectors(f, 4 * n, &vs)
}

fn admissible_monad<F: Field>(omega: &OmegaTensor<F>) -> Result<MonadData<F>> {
    rank_split(omega.n(), omega.rank()).map_err(|e| Error::Input(format!("degenerate input: {e}")))?;
    build_monad(omega)
}

/// h⁰E_P = dim N ∩ (H*⊗z).
pub fn h0_plane<F: Field>(omega: &OmegaTensor<F>, p: &PlaneSpec<F>) -> Result<usize> {
    let m = admissible_monad(omega)?;
    let s = h_dual_tensor(omega.field(), omega.n(), &[p.z.clone()]);
    Ok(m.n_space().intersect(&s)?.dim())
}

/// h⁰E_L = dim N ∩ (H*⊗W).
pub fn h0_line<F: Field>(omega: &OmegaTensor<F>, l: &LineSpec<F>) -> Result<usize> {
    let m = admissible_monad(omega)?;
    let s = h_dual_tensor(omega.field(), omega.n(), &l.w.vectors());
    Ok(m.n_space().intersect(&s)?.dim())
}

/// dim H⁰E_L(d) for d = 0..=d_max, from the monad restricted to L.
pub fn line_sections<F: Field>(omega: &OmegaTensor<F>, l: &LineSpec<F>, d_max: usize) -> Result<Vec<usize>> {
    let m = admissible_monad(omega)?;
    let lm = LineMonad::new(&m, l);
    Ok((0..=d_max as i64).map(|d| lm.sections(d)).collect())
}

struct LineMonad<'a, F: Field> {
    m: &'a MonadData<F>,
    lin: Mat<F>,
    beta0: Mat<F>,
}

impl<'a, F: Field> LineMonad<'a, F> {
    fn new(m: &'a MonadData<F>, l: &LineSpec<F>) -> Self {
        let beta0 = m.phi().mul(&m.u().transpose());
        LineMonad { m, lin: l.restriction(), beta0 }
    }

    fn alpha(&self, d: i64) -> Mat<F> {
        let f = self.m.field();
        graded_right_map_lin(f, self.m.u(), self.m.n(), &Monomials::new(2, d), &Monomials::new(2, d + 1), Some(&self.lin))
    }

    fn beta(&self, d: i64) -> Mat<F> {
        let f = self.m.field();
        graded_left_map_lin(f, &self.beta0, self.m.n(), &Monomials::new(2, d - 1), &Monomials::new(2, d), Some(&self.lin))
    }

    fn sections(&self, d: i64) -> usize {
        let a = self.alpha(d);
        a.cols() - a.rank() - self.beta(d).rank()
    }

    /// Whether S¹·M_{d−1} → M_d fails to be onto.
    fn new_generators(&self, d: i64) -> bool {
        let f = self.m.field();
        let kd = self.alpha(d).kernel();
        let prev = self.alpha(d - 1).kernel();
        let src = Monomials::new(2, d - 1);
        let dst = Monomials::new(2, d);
        let mut vs: Vec<Vec<F::Elem>> = self.beta(d).column_space().vectors();
        for v in prev.vectors() {
            for var in 0..2 {
                let mut w = vec![f.zero(); kd.ambient()];
                for (idx, c) in v.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let (i, mono) = (idx / src.len(), idx % src.len());
                    w[i * dst.len() + src.times_var(mono, var, &dst)] = c.clone();
                }
                vs.push(w);
            }
        }
        Subspace::from_vectors(f, kd.ambient(), &vs).dim() < kd.dim()
    }
}

/// Order a of L for a rank-2 bundle, E_L = O(a)⊕O(−a): the top degree of
/// a minimal generator of the section module ⊕_d H⁰E_L(d).
pub fn splitting_order<F: Field>(omega: &OmegaTensor<F>, l: &LineSpec<F>) -> Result<usize> {
    let m = admissible_monad(omega)?;
    if m.r() != 2 {
        return Err(Error::Input(format!("splitting order needs r = 2, got r = {}", m.r())));
    }
    let lm = LineMonad::new(&m, l);
    Ok((1..=m.n() as i64).rev().find(|&d| lm.new_generators(d)).unwrap_or(0) as usize)
}

/// det Q_λ ≠ 0 means L is not a jumping line.
pub fn line_det<F: Field>(omega: &OmegaTensor<F>, l: &LineSpec<F>) -> F::Elem {
    omega.contract_line(&l.lambda).det()
}

/// The pencil of lines through p inside the plane spanned by p, q0, q1:
/// λ(t) = p∧q0 + t·p∧q1.
pub fn point_plane_pencil<F: Field>(f: &F, p: &[F::Elem], q0: &[F::Elem], q1: &[F::Elem]) -> Result<(Wedge<F::Elem>, Wedge<F::Elem>)> {
    if Subspace::from_vectors(f, 4, &[p.to_vec(), q0.to_vec(), q1.to_vec()]).dim() != 3 {
        return Err(Error::Input("pencil needs three independent points".into()));
    }
    Ok((wedge_vectors(f, p, q0), wedge_vectors(f, p, q1)))
}

/// det contract_line(ω, λ0 + tλ1) as a polynomial in t.
pub fn pencil_jump_poly<F: Field>(omega: &OmegaTensor<F>, l0: &Wedge<F::Elem>, l1: &Wedge<F::Elem>) -> Result<UniPoly<F::Elem>> {
    let f = omega.field();
    let grass = [pfaffian(f, l0), pfaffian(f, l1), pfaffian_pairing(f, l0, l1)];
    if grass.iter().any(|c| !f.is_zero(c)) {
        return Err(Error::Input("pencil leaves the Grassmannian (Plücker quadric)".into()));
    }
    let n = omega.n();
    if let Some(q) = f.order() {
        if q <= n as u64 {
            return Err(Error::Input(format!("field of order {q} has too few interpolation nodes")));
        }
    }
    let xs: Vec<F::Elem> = (0..=n as i64).map(|t| f.from_i64(t)).collect();
    let ys: Vec<F::Elem> = xs
        .iter()
        .map(|t| {
            let lam: Wedge<F::Elem> = std::array::from_fn(|i| f.mul_add(&l0[i], t, &l1[i]));
            omega.contract_line(&lam).det()
        })
        .collect();
    Ok(interpolate(f, &xs, &ys))
}

/// Roots found in the field itself, with multiplicity, and the factor left
/// over after dividing them out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport<E> {
    pub roots: Vec<(E, usize)>,
    pub residual: UniPoly<E>,
}

fn divide_linear<F: Field>(f: &F, p: &UniPoly<F::Elem>, r: &F::Elem) -> (UniPoly<F::Elem>, F::Elem) {
    let mut q = vec![f.zero(); p.coeffs.len().saturating_sub(1)];
    let mut acc = f.zero();
    for i in (0..p.coeffs.len()).rev() {
        acc = f.mul_add(&p.coeffs[i], &acc, r);
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    (trim(f, q), acc)
}

/// Roots of a nonzero polynomial: exhaustive scan over a finite field,
/// rational-root candidates over ℚ.
pub fn pencil_roots<F: Field>(f: &F, p: &UniPoly<F::Elem>) -> Result<RootReport<F::Elem>> {
    if p.degree().is_none() {
        return Err(Error::Input("the zero polynomial has every t as a root".into()));
    }
    let candidates: Vec<F::Elem> = match f.elements() {
        Some(all) => all,
        None => rational_candidates(f, p)?,
    };
    let mut residual = p.clone();
    let mut roots = Vec::new();
    for c in candidates {
        let mut mult = 0;
        while residual.degree().unwrap_or(0) > 0 && f.is_zero(&eval(f, &residual, &c)) {
            residual = divide_linear(f, &residual, &c).0;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    Ok(RootReport { roots, residual })
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(m: &BigInt) -> Result<Vec<u64>> {
    let m = m.abs().to_u64().filter(|&x| x <= DIVISOR_LIMIT).ok_or_else(|| Error::Budget("coefficient too large for rational-root search".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d * d != m {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Ok(out)
}

fn rational_candidates<F: Field>(f: &F, p: &UniPoly<F::Elem>) -> Result<Vec<F::Elem>> {
    let qs: Vec<BigRational> = p.coeffs.iter().map(|c| f.lift(c).ok_or_else(|| Error::Input("coefficient has no rational lift".into()))).collect::<Result<_>>()?;
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        out.push(BigRational::zero());
    }
    let lead = ints.last().unwrap();
    if low + 1 < ints.len() {
        for a in divisors(&ints[low])? {
            for b in divisors(lead)? {
                let r = BigRational::new(BigInt::from(a), BigInt::from(b));
                out.push(-r.clone());
                out.push(r);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out.iter().filter_map(|q| f.from_rational(q)).collect())
}

/// Whether N ∩ (K⊗V*) contains a nonzero ξ⊗z.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Decomposable {
    /// the intersection is zero
    Empty,
    Found { field: FieldSpec, xi: Vec<String>, z: Vec<String> },
    /// nothing over F_q, F_{q^2}; not a proof over the closure
    NotFound { ext_degree: u32 },
    /// no scan was possible (characteristic zero)
    Unknown,
}

#[derive(Clone, Debug)]
pub struct KIntersection<F: Field> {
    pub space: Subspace<F>,
    pub decomposable: Decomposable,
}

/// N ∩ (K⊗V*) for K ⊂ H*.
pub fn k_intersection<F: Field>(omega: &OmegaTensor<F>, k: &Subspace<F>) -> Result<KIntersection<F>> {
    let f = omega.field();
    let n = omega.n();
    if k.ambient() != n {
        return Err(Error::Dimension(format!("K must live in H* of dim {n}")));
    }
    let nsp = omega.image_n();
    let mut kv = Vec::new();
    for xi in k.vectors() {
        for c in 0..4 {
            let mut v = vec![f.zero(); 4 * n];
            for a in 0..n {
                v[4 * a + c] = xi[a].clone();
            }
            kv.push(v);
        }
    }
    let space = nsp.intersect(&Subspace::from_vectors(f, 4 * n, &kv))?;
    if space.is_zero() {
        return Ok(KIntersection { space, decomposable: Decomposable::Empty });
    }
    let ann = nsp.annihilator().basis().clone();
    let kb = k.basis().clone();
    let decomposable = match (f.order(), f.spec()) {
        (None, _) => Decomposable::Unknown,
        (Some(_), FieldSpec::Prime(p)) => {
            let found = find_rank_one(f, &ann, &kb).or_else(|| {
                let g = Fq::new(p, 2).ok()?;
                let conv = |m: &Mat<F>| -> Option<Mat<Fq>> {
                    let vals: Vec<_> = (0..m.rows() * m.cols()).map(|i| g.from_rational(&f.lift(m.get(i / m.cols(), i % m.cols()))?)).collect::<Option<_>>()?;
                    Some(Mat::from_fn(&g, m.rows(), m.cols(), |r, c| vals[r * m.cols() + c]))
                };
                find_rank_one(&g, &conv(&ann)?, &conv(&kb)?)
            });
            found.unwrap_or(Decomposable::NotFound { ext_degree: 2 })
        }
        (Some(_), _) => find_rank_one(f, &ann, &kb).unwrap_or(Decomposable::NotFound { ext_degree: 1 }),
    };
    Ok(KIntersection { space, decomposable })
}

/// Scan ξ ∈ P(K)(G) for a z with ann(N)·(ξ⊗z) = 0.
fn find_rank_one<G: Field>(g: &G, ann: &Mat<G>, kb: &Mat<G>) -> Option<Decomposable> {
    let elems = g.elements()?;
    let m = kb.rows();
    let n = kb.cols();
    if (elems.len() as f64).powi(m as i32 - 1) > 2.0e5 {
        return None;
    }
    let mut coords = vec![0usize; m];
    for lead in 0..m {
        coords.iter_mut().for_each(|c| *c = 0);
        loop {
            let mut c = vec![g.zero(); m];
            c[lead] = g.one();
            for t in lead + 1..m {
                c[t] = elems[coords[t]].clone();
            }
            let xi: Vec<G::Elem> = (0..n).map(|a| (0..m).fold(g.zero(), |acc, i| g.mul_add(&acc, &c[i], kb.get(i, a)))).collect();
            let a = Mat::from_fn(g, ann.rows(), 4, |r, k| (0..n).fold(g.zero(), |acc, b| g.mul_add(&acc, ann.get(r, 4 * b + k), &xi[b])));
            let ker = a.kernel();
            if !ker.is_zero() {
                let z = &ker.vectors()[0];
                return Some(Decomposable::Found { field: g.spec(), xi: xi.iter().map(|x| g.format(x)).collect(), z: z.iter().map(|x| g.format(x)).collect() });
            }
            let mut pos = lead + 1;
            while pos < m {
                coords[pos] += 1;
                if coords[pos] < elems.len() {
                    break;
                }
                coords[pos] = 0;
                pos += 1;
            }
            if pos >= m {
                break;
            }
        }
    }
    None
}

/// Coefficients of the quadric with matrix C in the monomial basis of S²V*.
fn quadric_coords<F: Field>(f: &F, c: &Mat<F>) -> Vec<F::Elem> {
    let s2 = Monomials::new(4, 2);
    let mut out = vec![f.zero(); s2.len()];
    for j in 0..4 {
        for l in 0..4 {
            let mut e = [0u8; 4];
            e[j] += 1;
            e[l] += 1;
            let idx = s2.index_of(&e).unwrap();
            out[idx] = f.add(&out[idx], c.get(j, l));
        }
    }
    out
}

/// H⁰I_g(2) ⊂ S²V* for the homomorphism σ(α): E_η → O(1): the image of
/// β ↦ Σ B_kl (α̃η̃⁻¹x_k)·x_l over β ∈ Λ²V*.
pub fn nc_quadric_ideal<F: Field>(f: &F, eta: &Wedge<F::Elem>, alpha: &Wedge<F::Elem>) -> Result<Subspace<F>> {
    if f.is_zero(&pfaffian(f, eta)) {
        return Err(Error::Input("η must be indecomposable".into()));
    }
    if Mat::from_rows(f, 6, &[eta.to_vec(), alpha.to_vec()]).rank() < 2 {
        return Err(Error::Input("α is proportional to η, so σ(α) = 0".into()));
    }
    let e = wedge_matrix(f, eta);
    let t = wedge_matrix(f, alpha).mul(&e.inverse().expect("indecomposable η"));
    let mut vs = Vec::new();
    for idx in 0..6 {
        let mut beta = crate::tensor::zero_wedge(f);
        beta[idx] = f.one();
        vs.push(quadric_coords(f, &t.mul(&wedge_matrix(f, &beta))));
    }
    Ok(Subspace::from_vectors(f, 10, &vs))
}

/// True iff the three ideals span all of S²V*.
pub fn triple_span<F: Field>(f: &F, pairs: &[(Wedge<F::Elem>, Wedge<F::Elem>); 3]) -> Result<bool> {
    let mut acc = Subspace::zero(f, 10);
    for (eta, alpha) in pairs {
        acc = acc.sum(&nc_quadric_ideal(f, eta, alpha)?)?;
    }
    Ok(acc.dim() == 10)
}

/// Quadrics (in S²V* coordinates) containing every listed line, each
/// line given by two spanning points.
pub fn quadrics_through_lines<F: Field>(f: &F, lines: &[[Vec<F::Elem>; 2]]) -> Subspace<F> {
    let s2 = Monomials::new(4, 2);
    let mut rows = Vec::new();
    for [p, q] in lines {
        for (u, v) in [(p, p), (p, q), (q, q)] {
            // polarization of the quadric at (u, v)
            let row: Vec<F::Elem> = (0..s2.len())
                .map(|m| {
                    let e = s2.exponents(m);
                    let vars: Vec<usize> = (0..4).flat_map(|i| std::iter::repeat(i).take(e[i] as usize)).collect();
                    let (a, b) = (vars[0], vars[1]);
                    f.add(&f.mul(&u[a], &v[b]), &f.mul(&u[b], &v[a]))
                })
                .collect();
            rows.push(row);
        }
    }
    Mat::from_rows(f, s2.len(), &rows).kernel()
}

/// One row of a line scan report.
#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub plucker: Vec<String>,
    pub order: usize,
    pub h0: usize,
    pub det: String,
}

pub fn line_report<F: Field>(omega: &OmegaTensor<F>, l: &LineSpec<F>) -> Result<LineReport> {
    let f = omega.field();
    Ok(LineReport {
        plucker: l.lambda.iter().map(|c| f.format(c)).collect(),
        order: splitting_order(omega, l)?,
        h0: h0_line(omega, l)?,
        det: f.format(&line_det(omega, l)),
    })
}

pub fn line_reports_csv(rows: &[LineReport]) -> String {
    let mut s = String::from("plucker,order,h0,det\n");
    for r in rows {
        s.push_str(&format!("{},{},{},{}\n", r.plucker.join(" "), r.order, r.h0, r.det));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::rng;

    fn nc<F: Field>(f: &F) -> OmegaTensor<F> {
        OmegaTensor::from_i64_forms(f, &[vec![[1, 0, 0, 0, 0, 1]]])
    }

    fn basis_vec<F: Field>(f: &F, i: usize) -> Vec<F::Elem> {
        (0..4).map(|k| if k == i { f.one() } else { f.zero() }).collect()
    }

    fn w6(f: &Fp, v: [i64; 6]) -> Wedge<u64> {
        std::array::from_fn(|i| f.from_i64(v[i]))
    }

    fn monomial_span(f: &Fp, monos: &[&[(usize, usize, i64)]]) -> Subspace<Fp> {
        let s2 = Monomials::new(4, 2);
        let vs: Vec<Vec<u64>> = monos
            .iter()
            .map(|terms| {
                let mut v = vec![0u64; 10];
                for &(a, b, c) in terms.iter() {
                    let mut e = [0u8; 4];
                    e[a] += 1;
                    e[b] += 1;
                    v[s2.index_of(&e).unwrap()] = f.from_i64(c);
                }
                v
            })
            .collect();
        Subspace::from_vectors(f, 10, &vs)
    }

    #[test]
    fn nc_lines() {
        let f = Fp::default_field();
        let w = nc(&f);
        let e = |i| basis_vec(&f, i);
        let l01 = LineSpec::through(&f, &e(0), &e(1)).unwrap();
        let l02 = LineSpec::through(&f, &e(0), &e(2)).unwrap();
        assert!(l01.is_consistent() && l02.is_consistent());
        assert_eq!(w.contract_line(l01.lambda()).get(0, 0), &1);
        assert_eq!(w.contract_line(l02.lambda()).get(0, 0), &0);
        assert_eq!(splitting_order(&w, &l01).unwrap(), 0);
        assert_eq!(splitting_order(&w, &l02).unwrap(), 1);
        assert_eq!(h0_line(&w, &l01).unwrap(), 2);
        assert_eq!(h0_line(&w, &l02).unwrap(), 2);
        // O ⊕ O and O(1) ⊕ O(−1) have the same Hilbert function
        assert_eq!(line_sections(&w, &l01, 2).unwrap(), vec![2, 4, 6]);
        assert_eq!(line_sections(&w, &l02, 2).unwrap(), vec![2, 4, 6]);
    }

    #[test]
    fn nc_planes() {
        let f = Fp::default_field();
        let p = PlaneSpec::new(&f, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(h0_plane(&nc(&f), &p).unwrap(), 1);
        assert!(h0_plane(&OmegaTensor::zero(&f, 1), &p).is_err());
        assert!(PlaneSpec::new(&f, vec![0; 4]).is_err());
    }

    #[test]
    fn line_from_equations_matches_points() {
        let f = Fp::default_field();
        let l = LineSpec::through(&f, &[1, 2, 0, 5], &[0, 1, 7, 1]).unwrap();
        let m = LineSpec::from_equations(l.equations()).unwrap();
        assert!(m.is_consistent());
        // same Plücker point up to scale
        let a = Mat::from_rows(&f, 6, &[l.lambda().to_vec(), m.lambda().to_vec()]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn nc_pencil_has_one_isotropic_line() {
        let f = Fp::default_field();
        let mut s = rng::stream(3, 0);
        for _ in 0..10 {
            let pts: Vec<Vec<u64>> = (0..3).map(|_| (0..4).map(|_| f.random(&mut s)).collect()).collect();
            let Ok((l0, l1)) = point_plane_pencil(&f, &pts[0], &pts[1], &pts[2]) else { continue };
            let poly = pencil_jump_poly(&nc(&f), &l0, &l1).unwrap();
            if poly.degree() != Some(1) {
                continue;
            }
            let rep = pencil_roots(&f, &poly).unwrap();
            assert_eq!(rep.roots.len(), 1);
            let t = rep.roots[0].0;
            let q: Vec<u64> = (0..4).map(|k| f.mul_add(&pts[1][k], &t, &pts[2][k])).collect();
            let l = LineSpec::through(&f, &pts[0], &q).unwrap();
            assert_eq!(splitting_order(&nc(&f), &l).unwrap(), 1);
        }
    }

    #[test]
    fn pencil_checks_grassmannian() {
        let f = Fp::default_field();
        let w = nc(&f);
        let a = w6(&f, [1, 0, 0, 0, 0, 0]);
        let b = w6(&f, [0, 0, 0, 0, 0, 1]);
        assert!(pencil_jump_poly(&w, &a, &b).is_err());
        let z = OmegaTensor::zero(&f, 2);
        let b = w6(&f, [0, 1, 0, 0, 0, 0]);
        assert_eq!(pencil_jump_poly(&z, &a, &b).unwrap().degree(), None);
    }

    #[test]
    fn rational_roots() {
        let q = Rationals;
        // (2t − 1)(t + 3) t (t² + 1)
        let c = |x: i64| BigRational::from_integer(x.into());
        let p = UniPoly { coeffs: vec![c(0), c(-3), c(5), c(-1), c(5), c(2)] };
        let rep = pencil_roots(&q, &p).unwrap();
        let roots: Vec<_> = rep.roots.iter().map(|(r, m)| (r.to_string(), *m)).collect();
        assert_eq!(roots, vec![("-3".to_string(), 1), ("0".to_string(), 1), ("1/2".to_string(), 1)]);
        assert_eq!(rep.residual.degree(), Some(2));
    }

    #[test]
    fn quadric_ideal_cases() {
        let f = Fp::default_field();
        let eta = w6(&f, [1, 0, 0, 0, 0, 1]);
        let a = nc_quadric_ideal(&f, &eta, &w6(&f, [2, 0, 0, 0, 0, 5])).unwrap();
        assert_eq!(a, monomial_span(&f, &[&[(0, 2, 1)], &[(0, 3, 1)], &[(1, 2, 1)], &[(1, 3, 1)]]));
        let b = nc_quadric_ideal(&f, &eta, &w6(&f, [0, 0, 0, 0, 1, 0])).unwrap();
        assert_eq!(b, monomial_span(&f, &[&[(1, 1, 1)], &[(1, 3, 1)], &[(3, 3, 1)], &[(0, 1, 1), (2, 3, 1)]]));
        assert!(nc_quadric_ideal(&f, &eta, &w6(&f, [2, 0, 0, 0, 0, 2])).is_err());
        assert!(!triple_span(&f, &[(eta, w6(&f, [0, 0, 0, 0, 1, 0])); 3]).unwrap());
    }

    #[test]
    fn quadric_ideal_dim_is_four() {
        let f = Fp::default_field();
        let mut s = rng::stream(11, 0);
        for _ in 0..100 {
            let eta: Wedge<u64> = std::array::from_fn(|_| f.random(&mut s));
            let alpha: Wedge<u64> = std::array::from_fn(|_| f.random(&mut s));
            match nc_quadric_ideal(&f, &eta, &alpha) {
                Ok(i) => assert_eq!(i.dim(), 4),
                Err(_) => assert!(f.is_zero(&pfaffian(&f, &eta))),
            }
        }
    }

    #[test]
    fn case_a_ideal_is_the_two_lines() {
        let f = Fp::default_field();
        let e = |i| basis_vec(&f, i);
        let lines = [[e(0), e(1)], [e(2), e(3)]];
        let through = quadrics_through_lines(&f, &lines);
        let eta = w6(&f, [1, 0, 0, 0, 0, 1]);
        assert_eq!(through, nc_quadric_ideal(&f, &eta, &w6(&f, [1, 0, 0, 0, 0, 3])).unwrap());
    }
}
