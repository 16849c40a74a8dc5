//! Buchberger's algorithm over the rationals, run on integer-scaled
//! primitive polynomials to control coefficient growth.
//!
//! Pair selection follows the normal strategy (smallest lcm under the active
//! order); the product and chain criteria discard pairs at selection time.
//! The returned basis is reduced: pairwise non-divisible leading terms,
//! fully tail-reduced, each element integer-primitive with positive leading
//! coefficient, sorted by ascending leading monomial.

use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Guard, Result};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::ring::{TermOrder, VarSet};

/// Integer-coefficient polynomial, terms sorted descending under the
/// engine's order, content 1, positive leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }
}

/// Lexicographic sort key equivalent to comparing monomials under `order`.
fn sort_key(m: &Monomial, order: &TermOrder) -> Vec<u32> {
    match order {
        TermOrder::GrevLex => {
            let mut k = Vec::with_capacity(m.exps().len() + 1);
            k.push(m.total_degree());
            k.extend(m.exps().iter().rev().map(|&e| u32::MAX - e));
            k
        }
        TermOrder::Lex => m.exps().to_vec(),
        TermOrder::Block { front } => {
            let n = m.exps().len();
            let mut k = Vec::with_capacity(n + 2);
            let fd: u32 = front.iter().map(|&i| m.exp(i)).sum();
            k.push(fd);
            k.extend(front.iter().rev().map(|&i| u32::MAX - m.exp(i)));
            let rest: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
            let rd: u32 = rest.iter().map(|&i| m.exp(i)).sum();
            k.push(rd);
            k.extend(rest.iter().rev().map(|&i| u32::MAX - m.exp(i)));
            k
        }
    }
}

fn make_primitive(mut terms: Vec<(Monomial, BigInt)>) -> IPoly {
    if terms.is_empty() {
        return IPoly { terms };
    }
    let mut content = BigInt::zero();
    for (_, c) in &terms {
        content = content.gcd(c);
        if content.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, c) in &mut terms {
            *c = &*c / &content;
        }
    }
    IPoly { terms }
}

pub(crate) struct Engine<'a> {
    pub order: &'a TermOrder,
    pub guard: &'a Guard,
}

impl<'a> Engine<'a> {
    pub fn new(order: &'a TermOrder, guard: &'a Guard) -> Self {
        Engine { order, guard }
    }

    pub fn from_polynomial(&self, p: &Polynomial) -> IPoly {
        let mut den_lcm = BigInt::one();
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den_lcm / c.denom())))
            .collect();
        terms.sort_unstable_by(|(a, _), (b, _)| self.order.cmp(b, a));
        make_primitive(terms)
    }

    pub fn to_polynomial(&self, p: &IPoly, ring: &VarSet) -> Polynomial {
        let terms =
            p.terms.iter().map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()))).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// `a * p_tail - b * (m * g)`, merged in descending order.
    fn merge_sub(
        &self,
        p_tail: &[(Monomial, BigInt)],
        a: &BigInt,
        g: &[(Monomial, BigInt)],
        b: &BigInt,
        m: &Monomial,
    ) -> Vec<(Monomial, BigInt)> {
        let mut out = Vec::with_capacity(p_tail.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < p_tail.len() && j < g.len() {
            let gm = g[j].0.mul(m);
            match self.order.cmp(&p_tail[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push((p_tail[i].0.clone(), &p_tail[i].1 * a));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, -(&g[j].1 * b)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &p_tail[i].1 * a - &g[j].1 * b;
                    if !c.is_zero() {
                        out.push((gm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < p_tail.len() {
            out.push((p_tail[i].0.clone(), &p_tail[i].1 * a));
            i += 1;
        }
        while j < g.len() {
            out.push((g[j].0.mul(m), -(&g[j].1 * b)));
            j += 1;
        }
        out
    }

    /// Full reduction of `p` modulo `basis` (optionally skipping one index).
    /// The result equals the rational normal form up to a positive scalar,
    /// returned primitive.
    pub fn reduce_full(
        &self,
        p: IPoly,
        basis: &[IPoly],
        skip: Option<usize>,
    ) -> Result<IPoly> {
        let mut work = p.terms;
        let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
        let mut pos = 0usize;
        let mut steps = 0u64;
        while pos < work.len() {
            steps += 1;
            if steps % 256 == 0 {
                self.guard.check_clock()?;
            }
            let lm = &work[pos].0;
            let reducer = basis.iter().enumerate().find(|(gi, g)| {
                Some(*gi) != skip && !g.is_zero() && g.lm().divides(lm)
            });
            match reducer {
                None => {
                    rem.push(work[pos].clone());
                    pos += 1;
                }
                Some((_, g)) => {
                    let lc = &work[pos].1;
                    let d = lc.gcd(g.lc());
                    let a = g.lc() / &d;
                    let b = lc / &d;
                    let qm = g.lm().try_div(lm).expect("divisibility checked");
                    debug_assert!(a.is_positive());
                    let merged = self.merge_sub(&work[pos + 1..], &a, &g.terms[1..], &b, &qm);
                    work = merged;
                    pos = 0;
                    if !a.is_one() {
                        for (_, c) in &mut rem {
                            *c = &*c * &a;
                        }
                    }
                    // keep coefficients small: joint content strip
                    if steps % 8 == 0 {
                        strip_joint_content(&mut work, &mut rem);
                    }
                }
            }
        }
        Ok(make_primitive(rem))
    }

    fn s_poly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let l = f.lm().lcm(g.lm());
        let mf = f.lm().try_div(&l).unwrap();
        let mg = g.lm().try_div(&l).unwrap();
        let d = f.lc().gcd(g.lc());
        let a = g.lc() / &d;
        let b = f.lc() / &d;
        // a * mf * f - b * mg * g; leading terms cancel
        let shifted: Vec<(Monomial, BigInt)> =
            f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c * &a)).collect();
        let terms = self.merge_sub(&shifted, &BigInt::one(), &g.terms[1..], &b, &mg);
        make_primitive(terms)
    }

    /// Buchberger loop; returns the reduced basis.
    pub fn buchberger(&self, input: Vec<IPoly>) -> Result<Vec<IPoly>> {
        let mut basis: Vec<IPoly> = Vec::new();
        for p in input {
            if !p.is_zero() {
                basis.push(p);
            }
        }
        let mut heap: BinaryHeap<std::cmp::Reverse<(Vec<u32>, usize, usize)>> = BinaryHeap::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 1..basis.len() {
            for i in 0..j {
                let l = basis[i].lm().lcm(basis[j].lm());
                heap.push(std::cmp::Reverse((sort_key(&l, self.order), i, j)));
                pending.insert((i, j));
            }
        }
        while let Some(std::cmp::Reverse((_, i, j))) = heap.pop() {
            if !pending.remove(&(i, j)) {
                continue;
            }
            self.guard.check_clock()?;
            let (fi, fj) = (&basis[i], &basis[j]);
            let l = fi.lm().lcm(fj.lm());
            // product criterion: disjoint leading supports
            if l.total_degree() == fi.lm().total_degree() + fj.lm().total_degree() {
                continue;
            }
            // chain criterion: some k with lm_k | lcm and both companion pairs done
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lm().divides(&l)
                    && !pending.contains(&pair_id(i, k))
                    && !pending.contains(&pair_id(j, k))
            });
            if chained {
                continue;
            }
            let s = self.s_poly(fi, fj);
            let r = self.reduce_full(s, &basis, None)?;
            if r.is_zero() {
                continue;
            }
            self.guard.check_degree(r.max_total_degree())?;
            self.guard.check_basis(basis.len() + 1)?;
            let t = basis.len();
            for i in 0..t {
                let l = basis[i].lm().lcm(r.lm());
                heap.push(std::cmp::Reverse((sort_key(&l, self.order), i, t)));
                pending.insert((i, t));
            }
            basis.push(r);
        }
        self.reduce_basis(basis)
    }

    /// Removes redundant elements and tail-reduces, yielding the unique
    /// reduced basis (sorted ascending by leading monomial).
    fn reduce_basis(&self, basis: Vec<IPoly>) -> Result<Vec<IPoly>> {
        let mut idx: Vec<usize> = (0..basis.len()).collect();
        idx.sort_by(|&a, &b| {
            self.order.cmp(basis[a].lm(), basis[b].lm()).then(a.cmp(&b))
        });
        let mut kept: Vec<IPoly> = Vec::new();
        for &i in &idx {
            if kept.iter().any(|g| g.lm().divides(basis[i].lm())) {
                continue;
            }
            kept.push(basis[i].clone());
        }
        let snapshot = kept.clone();
        for (i, g) in kept.iter_mut().enumerate() {
            *g = self.reduce_full(g.clone(), &snapshot, Some(i))?;
        }
        kept.retain(|g| !g.is_zero());
        kept.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
        Ok(kept)
    }
}

fn pair_id(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn strip_joint_content(work: &mut [(Monomial, BigInt)], rem: &mut [(Monomial, BigInt)]) {
    let mut content = BigInt::zero();
    for (_, c) in work.iter().chain(rem.iter()) {
        content = content.gcd(c);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, c) in work.iter_mut().chain(rem.iter_mut()) {
        *c = &*c / &content;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn gb_strings(gens: &[&str], vars: &[&str], order: TermOrder) -> Vec<String> {
        let ring = VarSet::new(vars).unwrap();
        let guard = Guard::default();
        let eng = Engine::new(&order, &guard);
        let input: Vec<IPoly> = gens
            .iter()
            .map(|s| eng.from_polynomial(&parse_polynomial(s, &ring).unwrap()))
            .collect();
        let out = eng.buchberger(input).unwrap();
        out.iter().map(|p| eng.to_polynomial(p, &ring).to_string()).collect()
    }

    #[test]
    fn simple_lex_basis_collapses() {
        let gb = gb_strings(&["x^2-1", "x-1"], &["x"], TermOrder::Lex);
        assert_eq!(gb, vec!["x-1"]);
    }

    #[test]
    fn empty_input_gives_empty_basis() {
        let gb = gb_strings(&[], &["x"], TermOrder::GrevLex);
        assert!(gb.is_empty());
    }

    #[test]
    fn katsura_like_system_reduces() {
        // intersection of a circle and a line
        let gb = gb_strings(&["x^2+y^2-1", "x-y"], &["x", "y"], TermOrder::Lex);
        assert_eq!(gb, vec!["2*y^2-1", "x-y"]);
    }

    #[test]
    fn unit_ideal_detected() {
        let gb = gb_strings(&["x", "x+1"], &["x", "y"], TermOrder::GrevLex);
        assert_eq!(gb, vec!["1"]);
    }
}
