//! Dimension and degree of monomial ideals via independent sets and the
//! Hilbert-series numerator (staircase recursion).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Monomial;

/// Minimal generating set: drops generators divisible by another.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Krull dimension of R/M for the monomial ideal M: the largest variable
/// subset S such that no generator is supported inside S.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> usize {
    assert!(nvars <= 24, "dimension enumeration limited to small rings");
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        panic!("unit monomial ideal has no dimension");
    }
    let supports: Vec<u32> = gens
        .iter()
        .map(|g| g.support().iter().fold(0u32, |acc, &i| acc | (1 << i)))
        .collect();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/M,
/// as coefficients indexed by degree. The empty vector encodes 0.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let gens = minimalize(gens);
    numerator_rec(gens)
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    if pairwise_coprime(&gens) {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let mut factor = vec![BigInt::zero(); g.total_degree() as usize + 1];
            factor[0] = BigInt::one();
            factor[g.total_degree() as usize] -= BigInt::one();
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // pivot: variable occurring most often
    let nvars = gens[0].exps().len();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| counts[i]).unwrap();

    // M + <x_pivot>
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(pivot, nvars));

    // M : x_pivot
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exps().to_vec();
            if exps[pivot] > 0 {
                exps[pivot] -= 1;
            }
            Monomial::new(exps)
        })
        .collect();

    let a = numerator_rec(minimalize(&plus));
    let b = numerator_rec(minimalize(&colon));
    poly_sub(&a, &poly_shift(&b, 1))
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let si = gens[i].support();
            let sj = gens[j].support();
            if si.iter().any(|v| sj.contains(v)) {
                return false;
            }
        }
    }
    true
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn poly_shift(a: &[BigInt], k: usize) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + k];
    for (i, ai) in a.iter().enumerate() {
        out[i + k] = ai.clone();
    }
    out
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Divides by (1-t) exactly; panics if not divisible.
fn divide_one_minus_t(n: &[BigInt]) -> Vec<BigInt> {
    // N = (1-t) Q  =>  q_k = sum_{i<=k} n_i ; exact iff N(1) = 0
    let mut q = Vec::with_capacity(n.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for (k, nk) in n.iter().enumerate() {
        acc += nk;
        if k + 1 < n.len() {
            q.push(acc.clone());
        } else {
            assert!(acc.is_zero(), "numerator not divisible by (1-t)");
        }
    }
    trim(q)
}

/// (dimension, degree) of R/M per the standard staircase computation:
/// degree = [N(t)/(1-t)^codim] evaluated at t = 1.
pub fn dimension_and_degree(gens: &[Monomial], nvars: usize) -> (usize, BigInt) {
    let dim = monomial_dimension(gens, nvars);
    let mut n = hilbert_numerator(gens);
    for _ in 0..(nvars - dim) {
        n = divide_one_minus_t(&n);
    }
    let degree: BigInt = n.iter().sum();
    (dim, degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn zero_dimensional_count() {
        // <y1^2, y2> in 2 vars: standard monomials {1, y1}
        let (dim, deg) = dimension_and_degree(&[m(&[2, 0]), m(&[0, 1])], 2);
        assert_eq!(dim, 0);
        assert_eq!(deg, BigInt::from(2));
    }

    #[test]
    fn curve_degree() {
        // <y1^2, e> in (y1, y2, e): dimension 1, degree 2
        let (dim, deg) = dimension_and_degree(&[m(&[2, 0, 0]), m(&[0, 0, 1])], 3);
        assert_eq!(dim, 1);
        assert_eq!(deg, BigInt::from(2));
    }

    #[test]
    fn whole_ring() {
        let (dim, deg) = dimension_and_degree(&[], 3);
        assert_eq!(dim, 3);
        assert_eq!(deg, BigInt::from(1));
    }

    #[test]
    fn non_coprime_recursion() {
        // <x*y, x*z> in 3 vars: variety = {x=0} union {y=z=0}: dim 2, degree 1
        let (dim, deg) = dimension_and_degree(&[m(&[1, 1, 0]), m(&[1, 0, 1])], 3);
        assert_eq!(dim, 2);
        assert_eq!(deg, BigInt::from(1));
    }

    #[test]
    fn minimalize_removes_multiples() {
        let g = minimalize(&[m(&[1, 0]), m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(g, vec![m(&[1, 0])]);
    }

    #[test]
    fn products_of_pure_powers() {
        // <x^2, y^3> zero-dimensional with 6 standard monomials
        let (dim, deg) = dimension_and_degree(&[m(&[2, 0]), m(&[0, 3])], 2);
        assert_eq!(dim, 0);
        assert_eq!(deg, BigInt::from(6));
    }
}
