//! Variable sets (ring contexts) and monomial term orders.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// An ordered set of variable names fixing a polynomial ring context.
#[derive(Debug, Clone, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl std::hash::Hash for VarSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarSet> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for n in &names {
            if !valid_name(n) {
                return Err(Error::InvalidVariables(format!("bad variable name `{n}`")));
            }
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarSet { names: Arc::new(names) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// New ring with `extra` variables appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<VarSet> {
        let mut names: Vec<String> = self.names.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        let all: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        VarSet::new(&all)
    }

    /// New ring with the variables at `drop` (indices) removed, order preserved.
    pub fn without(&self, drop: &[usize]) -> VarSet {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        VarSet { names: Arc::new(names) }
    }

    /// A name not present in the ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        for k in 0.. {
            let candidate = format!("{base}_{k}");
            if self.index_of(&candidate).is_none() {
                return candidate;
            }
        }
        unreachable!()
    }
}

/// A monomial order: graded reverse lexicographic, lexicographic, or a
/// block elimination order (grevlex on the front block, then grevlex on the rest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    GrevLex,
    Lex,
    /// Eliminates the variables whose indices are listed in `front` (sorted).
    Block { front: Vec<usize> },
}

impl TermOrder {
    pub fn block(mut front: Vec<usize>) -> TermOrder {
        front.sort_unstable();
        front.dedup();
        TermOrder::Block { front }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GrevLex => grevlex(a.exps(), b.exps(), a.total_degree(), b.total_degree()),
            TermOrder::Lex => lex(a.exps(), b.exps()),
            TermOrder::Block { front } => {
                let (fa, fb) = (block_degree(a, front), block_degree(b, front));
                let front_cmp = grevlex_subset(a.exps(), b.exps(), front, fa, fb);
                if front_cmp != Ordering::Equal {
                    return front_cmp;
                }
                let rest: Vec<usize> =
                    (0..a.exps().len()).filter(|i| !front.contains(i)).collect();
                let (ra, rb) = (block_degree(a, &rest), block_degree(b, &rest));
                grevlex_subset(a.exps(), b.exps(), &rest, ra, rb)
            }
        }
    }
}

fn block_degree(m: &Monomial, idx: &[usize]) -> u32 {
    idx.iter().map(|&i| m.exp(i)).sum()
}

fn grevlex(a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing position wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn grevlex_subset(a: &[u32], b: &[u32], idx: &[usize], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &i in idx.iter().rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn grevlex_orders_by_degree_first() {
        let o = TermOrder::GrevLex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_front() {
        // any monomial containing a front variable beats any without
        let o = TermOrder::block(vec![0]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = VarSet::new(&["x", "u"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t");
        assert_ne!(r.fresh_name("u"), "u");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(VarSet::new(&["1x"]).is_err());
        assert!(VarSet::new(&["x", "x"]).is_err());
    }
}
