//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted in descending graded-reverse-lexicographic order, with
//! no explicit zero coefficients stored. The grevlex order doubles as the
//! intrinsic `Ord` of [`Monomial`]; other term orders are applied explicitly
//! through [`crate::ring::TermOrder`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{TermOrder, VarSet};

pub type Rat = BigRational;

/// Exponent vector of fixed length (the ring's variable count).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(i: usize, nvars: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::new(exps)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        TermOrder::GrevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in a fixed ring context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: VarSet,
    /// Sorted descending by grevlex; coefficients nonzero.
    terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn zero(ring: &VarSet) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &VarSet) -> Polynomial {
        Polynomial::constant(ring, Rat::one())
    }

    pub fn constant(ring: &VarSet, c: Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.len()), c)] }
    }

    pub fn from_int(ring: &VarSet, n: i64) -> Polynomial {
        Polynomial::constant(ring, Rat::from_integer(BigInt::from(n)))
    }

    pub fn var(ring: &VarSet, i: usize) -> Polynomial {
        assert!(i < ring.len(), "variable index out of range");
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(i, ring.len()), Rat::one())] }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(ring: &VarSet, terms: Vec<(Monomial, Rat)>) -> Polynomial {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exps().len(), ring.len(), "monomial arity mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let terms: Vec<(Monomial, Rat)> = map.into_iter().rev().collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Internal constructor: `terms` already sorted descending, zero-free.
    pub(crate) fn from_sorted(ring: &VarSet, terms: Vec<(Monomial, Rat)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    /// Leading term under grevlex; panics on zero.
    pub fn leading(&self) -> (&Monomial, &Rat) {
        let (m, c) = &self.terms[0];
        (m, c)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.len()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..self.ring.len()).filter(|&i| seen[i]).collect()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "mismatched rings: {:?} vs {:?}",
            self.ring.names(),
            other.ring.names()
        );
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match map.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: map.into_iter().rev().collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect();
        // multiplying every monomial by a fixed monomial preserves the order
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.len()), c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.len(), "variable index out of range");
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            terms.push((Monomial::new(exps), c * Rat::from_integer(BigInt::from(e))));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes exact values for a subset of variables; the rest stay symbolic.
    pub fn evaluate(&self, assignment: &BTreeMap<usize, Rat>) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exps().to_vec();
            for (&v, val) in assignment {
                let e = exps[v];
                if e > 0 {
                    coeff *= pow_rat(val, e);
                    exps[v] = 0;
                }
            }
            terms.push((Monomial::new(exps), coeff));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Full evaluation at a point, one value per ring variable.
    pub fn eval_point(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.len());
        let assignment: BTreeMap<usize, Rat> =
            point.iter().cloned().enumerate().collect();
        self.evaluate(&assignment).as_constant().expect("full evaluation left variables")
    }

    /// Exact quotient `self / q`, or `None` when not divisible.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Option<Polynomial>> {
        self.assert_same_ring(q);
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (qm, qc) = (q.terms[0].0.clone(), q.terms[0].1.clone());
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while !rem.is_zero() {
            let (m, c) = rem.leading();
            let Some(md) = qm.try_div(m) else {
                return Ok(None);
            };
            let cd = c / &qc;
            quot_terms.push((md.clone(), cd.clone()));
            rem = rem.sub(&q.mul_term(&md, &cd));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot_terms)))
    }

    /// Integer content of the coefficient list, with the common denominator
    /// cleared: the positive rational `c` such that `self / c` is primitive
    /// with integer coefficients.
    pub fn rational_content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Canonical scalar normalization: integer coefficients, content 1,
    /// positive leading coefficient under grevlex.
    pub fn canonicalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = self.rational_content();
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        self.scale(&content.recip())
    }

    /// Reinterprets the polynomial in `target`, matching variables by name.
    /// Fails if a used variable is missing from the target ring.
    pub fn lift_to(&self, target: &VarSet) -> Result<Polynomial> {
        let mut index_map = Vec::with_capacity(self.ring.len());
        for name in self.ring.names() {
            match target.index_of(name) {
                Some(j) => index_map.push(j),
                None => {
                    if self.support_vars().iter().any(|&i| self.ring.name(i) == name) {
                        return Err(Error::UnknownVariable(name.clone()));
                    }
                    index_map.push(usize::MAX);
                }
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    exps[index_map[i]] = e;
                }
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Restriction to a subring: every used variable must exist in `target`.
    pub fn restrict_to(&self, target: &VarSet) -> Result<Polynomial> {
        for i in self.support_vars() {
            if target.index_of(self.ring.name(i)).is_none() {
                return Err(Error::UnknownVariable(self.ring.name(i).to_string()));
            }
        }
        self.lift_to(target)
    }
}

fn pow_rat(base: &Rat, mut e: u32) -> Rat {
    let mut b = base.clone();
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> VarSet {
        VarSet::new(&["x", "y"]).unwrap()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn product_of_conjugates() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let one = Polynomial::one(&r);
        let p = (&x + &one).mul(&x.sub(&one));
        let expect = x.mul(&x).sub(&one);
        assert_eq!(p, expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let r = ring2();
        let p = Polynomial::var(&r, 0).add(&Polynomial::from_int(&r, 3));
        assert_eq!(p.add(&Polynomial::zero(&r)), p);
    }

    #[test]
    fn square_of_sum_of_squares() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = x.pow(2).add(&y.pow(2));
        let sq = s.pow(2);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.total_degree(), 4);
        assert_eq!(sq.degree_in(0), 4);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let r = ring2();
        assert!(Polynomial::from_int(&r, 5).derivative(0).is_zero());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let num = x.pow(2).sub(&y.pow(2));
        let den = x.sub(&y);
        let q = num.exact_div(&den).unwrap().unwrap();
        assert_eq!(q, x.add(&y));
        let not = x.pow(2).add(&y.pow(2));
        assert!(not.exact_div(&x).unwrap().is_none());
        assert!(matches!(num.exact_div(&Polynomial::zero(&r)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonicalization_strips_content_and_sign() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let p = x.pow(2).scale(&Rat::new(BigInt::from(-4), BigInt::from(6)));
        let canon = p.canonicalized();
        assert_eq!(canon, x.pow(2));
    }

    #[test]
    fn evaluate_partial_keeps_symbols() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.mul(&y).add(&y.pow(2));
        let mut a = BTreeMap::new();
        a.insert(1usize, rat(2));
        let q = p.evaluate(&a);
        assert_eq!(q, x.scale(&rat(2)).add(&Polynomial::from_int(&r, 4)));
        let only_x = Polynomial::var(&r, 0);
        let mut b = BTreeMap::new();
        b.insert(1usize, rat(1));
        assert_eq!(only_x.evaluate(&b), only_x);
    }

    #[test]
    #[should_panic(expected = "mismatched rings")]
    fn mismatched_rings_panic() {
        let r1 = ring2();
        let r2 = VarSet::new(&["a", "b"]).unwrap();
        let _ = Polynomial::var(&r1, 0).add(&Polynomial::var(&r2, 0));
    }
}
