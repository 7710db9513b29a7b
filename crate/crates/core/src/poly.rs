//! Monomial bases and small polynomial helpers.

use std::collections::HashMap;

use crate::field::Field;

/// Monomials of degree `deg` in `nvars` variables, in lexicographic order
/// (x0^d first). For degree 2 this is the (i <= j) lex order of pairs.
#[derive(Clone, Debug)]
pub struct Monomials {
    nvars: usize,
    deg: usize,
    exps: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl Monomials {
    pub fn new(nvars: usize, deg: i64) -> Self {
        let mut exps = Vec::new();
        if deg >= 0 {
            let deg = deg as usize;
            if nvars == 0 {
                if deg == 0 {
                    exps.push(vec![]);
                }
            } else {
                let mut cur = vec![0u8; nvars];
                fill(&mut exps, &mut cur, 0, deg);
            }
        }
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Monomials { nvars, deg: deg.max(0) as usize, exps, index }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn degree(&self) -> usize {
        self.deg
    }
    pub fn exponents(&self, i: usize) -> &[u8] {
        &self.exps[i]
    }
    pub fn index_of(&self, e: &[u8]) -> Option<usize> {
        self.index.get(e).copied()
    }
    pub fn iter(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.exps.iter()
    }

    /// Index, in `target` (degree + 1), of monomial `i` times variable `v`.
    pub fn times_var(&self, i: usize, v: usize, target: &Monomials) -> usize {
        let mut e = self.exps[i].clone();
        e[v] += 1;
        target.index_of(&e).expect("target has degree + 1")
    }

    /// Index, in `target`, of the product of monomial `i` (here) and `j` in `other`.
    pub fn times(&self, i: usize, other: &Monomials, j: usize, target: &Monomials) -> usize {
        let e: Vec<u8> = self.exps[i].iter().zip(other.exponents(j)).map(|(a, b)| a + b).collect();
        target.index_of(&e).expect("target has the sum degree")
    }
}

fn fill(out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>, var: usize, left: usize) {
    if var + 1 == cur.len() {
        cur[var] = left as u8;
        out.push(cur.clone());
        cur[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e as u8;
        fill(out, cur, var + 1, left - e);
    }
    cur[var] = 0;
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of S^d of a space of dimension m (zero for d < 0).
pub fn sym_dim(m: usize, d: i64) -> usize {
    if d < 0 {
        0
    } else {
        binomial(m as i64 + d - 1, d) as usize
    }
}

/// Dense univariate polynomial, low degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> UniPoly<E> {
    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

pub fn trim<F: Field>(f: &F, mut c: Vec<F::Elem>) -> UniPoly<F::Elem> {
    while c.last().is_some_and(|x| f.is_zero(x)) {
        c.pop();
    }
    UniPoly { coeffs: c }
}

pub fn eval<F: Field>(f: &F, p: &UniPoly<F::Elem>, t: &F::Elem) -> F::Elem {
    p.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, t), c))
}

/// Lagrange interpolation through (x_i, y_i) with distinct x_i.
pub fn interpolate<F: Field>(f: &F, xs: &[F::Elem], ys: &[F::Elem]) -> UniPoly<F::Elem> {
    let n = xs.len();
    let mut out = vec![f.zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![f.one()];
        let mut denom = f.one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut next = vec![f.zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] = f.add(&next[d + 1], b);
                next[d] = f.sub(&next[d], &f.mul(b, &xs[j]));
            }
            basis = next;
            denom = f.mul(&denom, &f.sub(&xs[i], &xs[j]));
        }
        let scale = f.div(&ys[i], &denom).expect("distinct nodes");
        for (d, b) in basis.iter().enumerate() {
            out[d] = f.mul_add(&out[d], b, &scale);
        }
    }
    trim(f, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn quadratic_monomials_follow_pair_order() {
        let m = Monomials::new(4, 2);
        assert_eq!(m.len(), 10);
        let mut k = 0;
        for i in 0..4 {
            for j in i..4 {
                let mut e = vec![0u8; 4];
                e[i] += 1;
                e[j] += 1;
                assert_eq!(m.index_of(&e), Some(k));
                k += 1;
            }
        }
    }

    #[test]
    fn dims() {
        assert_eq!(Monomials::new(5, 4).len(), 70);
        assert_eq!(Monomials::new(4, 0).len(), 1);
        assert_eq!(Monomials::new(4, -1).len(), 0);
        assert_eq!(Monomials::new(0, 0).len(), 1);
        assert_eq!(sym_dim(4, 3), 20);
        assert_eq!(binomial(8, 2), 28);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = Fp::new(101);
        let p = UniPoly { coeffs: vec![3u64, 0, 5, 7] };
        let xs: Vec<u64> = (0..4).collect();
        let ys: Vec<u64> = xs.iter().map(|x| eval(&f, &p, x)).collect();
        assert_eq!(interpolate(&f, &xs, &ys), p);
    }
}
