//! Multivariate GCD over the rationals and squarefree parts.
//!
//! Recursive content/primitive-part scheme: the GCD of the contents is
//! combined with a primitive pseudo-remainder sequence in a main variable.
//! Adequate for desk-scale inputs.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::ring::VarSet;

/// A greatest common divisor, canonically normalized (integer primitive,
/// positive leading coefficient). `gcd(p, 0) = normalized p`; `gcd(0, 0) = 0`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert!(p.ring() == q.ring(), "mismatched rings");
    gcd_inner(p, q).canonicalized()
}

fn gcd_inner(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let ring = p.ring();
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(ring);
    }
    // main variable: last index occurring in either operand
    let v = *p
        .support_vars()
        .iter()
        .chain(q.support_vars().iter())
        .max()
        .expect("nonconstant operands");
    let (dp, dq) = (p.degree_in(v), q.degree_in(v));
    if dp == 0 {
        // v occurs only in q: gcd divides p, hence is free of v
        return gcd_inner(p, &content_in(q, v));
    }
    if dq == 0 {
        return gcd_inner(&content_in(p, v), q);
    }
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let pp = divide_free_coeff(p, &cp, v);
    let qq = divide_free_coeff(q, &cq, v);
    let cg = gcd_inner(&cp, &cq);
    let (mut a, mut b) = if dp >= dq { (pp, qq) } else { (qq, pp) };
    // primitive pseudo-remainder sequence in v
    loop {
        if b.is_zero() {
            break;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { divide_free_coeff(&r, &content_in(&r, v), v) };
    }
    let g = if a.degree_in(v) == 0 {
        // primitive parts are coprime in v
        Polynomial::one(ring)
    } else {
        divide_free_coeff(&a, &content_in(&a, v), v)
    };
    cg.mul(&g)
}

/// Content of `p` when viewed as a univariate polynomial in `v`:
/// the GCD of its coefficient polynomials (which are free of `v`).
fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let coeffs = coefficients_in(p, v);
    let mut acc = Polynomial::zero(p.ring());
    for c in coeffs.into_iter().flatten() {
        acc = gcd_inner(&acc, &c);
        if acc.is_constant() && !acc.is_zero() {
            return Polynomial::one(p.ring());
        }
    }
    acc.canonicalized()
}

/// Coefficient polynomials of v^0, v^1, ... (entries free of `v`).
pub(crate) fn coefficients_in(p: &Polynomial, v: usize) -> Vec<Option<Polynomial>> {
    let d = p.degree_in(v) as usize;
    let ring = p.ring().clone();
    let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); d + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        let mut exps = m.exps().to_vec();
        exps[v] = 0;
        buckets[e].push((Monomial::new(exps), c.clone()));
    }
    buckets
        .into_iter()
        .map(|b| {
            if b.is_empty() {
                None
            } else {
                Some(Polynomial::from_terms(&ring, b))
            }
        })
        .collect()
}

/// Divides every v-coefficient of `p` by the v-free polynomial `d` (exact).
fn divide_free_coeff(p: &Polynomial, d: &Polynomial, _v: usize) -> Polynomial {
    if d.is_constant() {
        let c = d.as_constant().expect("constant divisor");
        assert!(!c.is_zero(), "zero divisor");
        return p.scale(&c.recip());
    }
    p.exact_div(d)
        .expect("nonzero divisor")
        .expect("content division must be exact")
}

/// Pseudo-remainder of `a` by `b` in the variable `v`:
/// lc_v(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    debug_assert!(db >= 1);
    let lcb = v_leading_coeff(b, v);
    let mut r = a.clone();
    let mut steps = a.degree_in(v) as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = v_leading_coeff(&r, v);
        // r <- lcb * r - lcr * v^(dr-db) * b
        let shift = Monomial::var(v, r.ring().len()).pow_mono(dr - db);
        let t = b.mul(&lcr).mul_term(&shift, &Rat::from_integer(1.into()));
        r = r.mul(&lcb).sub(&t);
        steps -= 1;
    }
    // pad remaining multiplications so the result is the true pseudo-remainder
    while steps > 0 {
        r = r.mul(&lcb);
        steps -= 1;
    }
    r
}

fn v_leading_coeff(p: &Polynomial, v: usize) -> Polynomial {
    let d = p.degree_in(v);
    let ring = p.ring().clone();
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        if m.exp(v) == d {
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            terms.push((Monomial::new(exps), c.clone()));
        }
    }
    Polynomial::from_terms(&ring, terms)
}

impl Monomial {
    pub(crate) fn pow_mono(&self, e: u32) -> Monomial {
        let exps = self.exps().iter().map(|&x| x * e).collect();
        Monomial::new(exps)
    }
}

/// Product of the distinct irreducible factors of `p` (unit content removed).
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(squarefree_inner(p).canonicalized())
}

fn squarefree_inner(p: &Polynomial) -> Polynomial {
    let ring: VarSet = p.ring().clone();
    if p.is_constant() {
        return Polynomial::one(&ring);
    }
    let v = *p.support_vars().last().expect("nonconstant");
    let cont = content_in(p, v);
    let pp = divide_free_coeff(p, &cont, v);
    let dp = pp.derivative(v);
    let g = gcd(&pp, &dp);
    let sf_main = pp
        .exact_div(&g)
        .expect("gcd nonzero")
        .expect("gcd divides");
    squarefree_inner(&cont).mul(&sf_main)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring2() -> VarSet {
        VarSet::new(&["y_1", "y_2"]).unwrap()
    }

    fn p(ring: &VarSet, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn gcd_pulls_out_common_monomial_factor() {
        let r = ring2();
        let axes = p(&r, "y_1*y_2");
        let g = p(&r, "y_1^2+y_2^2+1");
        let prod = axes.mul(&g);
        assert_eq!(gcd(&prod, &axes), axes);
    }

    #[test]
    fn gcd_is_idempotent() {
        let r = ring2();
        let q = p(&r, "3*y_1^2-6*y_2");
        assert_eq!(gcd(&q, &q), q.canonicalized());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let r = ring2();
        let q = p(&r, "2*y_1-2");
        let z = Polynomial::zero(&r);
        assert_eq!(gcd(&q, &z), p(&r, "y_1-1"));
        assert!(gcd(&z, &z).is_zero());
    }

    #[test]
    fn squarefree_of_a_cube() {
        let r = ring2();
        let lin = p(&r, "y_1-1");
        let cube = lin.pow(3);
        assert_eq!(squarefree_part(&cube).unwrap(), lin);
    }

    #[test]
    fn squarefree_keeps_irreducible_quadric() {
        let r = ring2();
        let q = p(&r, "y_1^2+y_2^2");
        assert_eq!(squarefree_part(&q).unwrap(), q);
    }

    #[test]
    fn squarefree_is_idempotent_on_mixed_product() {
        let r = ring2();
        let f = p(&r, "y_1-1").pow(2).mul(&p(&r, "y_1+y_2")).mul(&p(&r, "y_2").pow(3));
        let sf = squarefree_part(&f).unwrap();
        assert_eq!(sf, p(&r, "(y_1-1)*(y_1+y_2)*y_2").canonicalized());
        assert_eq!(squarefree_part(&sf).unwrap(), sf);
    }

    #[test]
    fn squarefree_rejects_zero() {
        let r = ring2();
        assert!(squarefree_part(&Polynomial::zero(&r)).is_err());
    }
}
