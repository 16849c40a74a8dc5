//! Matrices of polynomials: Jacobians, Sylvester matrices, minors, determinants.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::VarSet;

/// Rectangular matrix with entries in a shared ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: VarSet,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &VarSet, rows: usize, cols: usize, entries: Vec<Polynomial>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        for e in &entries {
            assert!(e.ring() == ring, "matrix entry in wrong ring");
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zero(ring: &VarSet, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        assert!(p.ring() == &self.ring);
        self.entries[r * self.cols + c] = p;
    }

    /// Submatrix selected by row and column indices (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix::new(&self.ring, rows.len(), cols.len(), entries)
    }

    /// Exact determinant. Direct expansion up to 5x5, fraction-free Bareiss
    /// elimination (with exact divisions) from 6x6 on.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if n <= 5 {
            return Ok(self.det_laplace(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>()));
        }
        self.det_bareiss()
    }

    fn det_laplace(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        if n == 1 {
            return self.at(rows[0], cols[0]).clone();
        }
        if n == 2 {
            let a = self.at(rows[0], cols[0]).mul(self.at(rows[1], cols[1]));
            let b = self.at(rows[0], cols[1]).mul(self.at(rows[1], cols[0]));
            return a.sub(&b);
        }
        // expand along the first listed row
        let mut acc = Polynomial::zero(&self.ring);
        let sub_rows = &rows[1..];
        for (j, &c) in cols.iter().enumerate() {
            let e = self.at(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> =
                cols.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &cc)| cc).collect();
            let minor = self.det_laplace(sub_rows, &sub_cols);
            let signed = if j % 2 == 0 { e.mul(&minor) } else { e.mul(&minor).neg() };
            acc = acc.add(&signed);
        }
        acc
    }

    fn det_bareiss(&self) -> Result<Polynomial> {
        let n = self.rows;
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev_pivot = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(Polynomial::zero(&self.ring));
                };
                m.swap(k, swap);
                sign_flip = !sign_flip;
            }
            let pivot = m[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&pivot).sub(&m[i][k].mul(&m[k][j]));
                    let q = num
                        .exact_div(&prev_pivot)?
                        .expect("Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][k] = Polynomial::zero(&self.ring);
            }
            prev_pivot = pivot;
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign_flip { det.neg() } else { det })
    }

    /// All k-by-k minor determinants, rows and columns enumerated in
    /// lexicographic index order (row combinations outer). Zero minors
    /// are omitted.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorSizeOutOfRange { k, rows: self.rows, cols: self.cols });
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                let d = self.submatrix(rs, cs).determinant()?;
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }
}

/// Jacobian with the paper's orientation: rows indexed by `vars`,
/// columns by `gens`; entry (i, j) = d gens[j] / d vars[i].
pub fn jacobian(gens: &[Polynomial], vars: &[usize], ring: &VarSet) -> PolyMatrix {
    let mut entries = Vec::with_capacity(vars.len() * gens.len());
    for &v in vars {
        for g in gens {
            entries.push(g.derivative(v));
        }
    }
    PolyMatrix::new(ring, vars.len(), gens.len(), entries)
}

/// All k-element subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring4() -> VarSet {
        VarSet::new(&["a", "b", "c", "d"]).unwrap()
    }

    fn pm(ring: &VarSet, rows: usize, cols: usize, texts: &[&str]) -> PolyMatrix {
        let entries = texts.iter().map(|t| parse_polynomial(t, ring).unwrap()).collect();
        PolyMatrix::new(ring, rows, cols, entries)
    }

    #[test]
    fn two_by_two_determinant() {
        let r = ring4();
        let m = pm(&r, 2, 2, &["a", "b", "c", "d"]);
        let det = m.determinant().unwrap();
        assert_eq!(det, parse_polynomial("a*d-b*c", &r).unwrap());
    }

    #[test]
    fn identity_determinant_is_one() {
        let r = ring4();
        let mut m = PolyMatrix::zero(&r, 3, 3);
        for i in 0..3 {
            m.set(i, i, Polynomial::one(&r));
        }
        assert_eq!(m.determinant().unwrap(), Polynomial::one(&r));
    }

    #[test]
    fn non_square_rejected() {
        let r = ring4();
        let m = PolyMatrix::zero(&r, 2, 3);
        assert!(matches!(m.determinant(), Err(Error::NonSquareMatrix { .. })));
    }

    #[test]
    fn minors_of_identity() {
        let r = ring4();
        let mut m = PolyMatrix::zero(&r, 2, 2);
        m.set(0, 0, Polynomial::one(&r));
        m.set(1, 1, Polynomial::one(&r));
        let ms = m.minors(2).unwrap();
        assert_eq!(ms, vec![Polynomial::one(&r)]);
        let ones = m.minors(1).unwrap();
        assert_eq!(ones.len(), 2);
        assert!(matches!(m.minors(3), Err(Error::MinorSizeOutOfRange { .. })));
    }

    #[test]
    fn jacobian_of_conic() {
        let r = VarSet::new(&["x_1", "x_2"]).unwrap();
        let f = parse_polynomial("4*x_1^2+x_2^2-4", &r).unwrap();
        let j = jacobian(&[f], &[0, 1], &r);
        assert_eq!(j.rows(), 2);
        assert_eq!(j.cols(), 1);
        assert_eq!(j.at(0, 0), &parse_polynomial("8*x_1", &r).unwrap());
        assert_eq!(j.at(1, 0), &parse_polynomial("2*x_2", &r).unwrap());
    }

    #[test]
    fn jacobian_of_empty_generator_list() {
        let r = ring4();
        let j = jacobian(&[], &[0, 1], &r);
        assert_eq!(j.cols(), 0);
        assert_eq!(j.rows(), 2);
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        assert_eq!(combinations(4, 2), vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3]
        ]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn bareiss_matches_laplace_on_six_by_six() {
        let r = VarSet::new(&["x"]).unwrap();
        // integer matrix embedded as constants; det computed both ways
        let vals: Vec<i64> = vec![
            2, 1, 0, 3, 1, 4, 0, 2, 1, 1, 0, 1, 3, 0, 2, 1, 1, 0, 1, 1, 0, 2, 3, 1, 0, 1, 1, 0,
            2, 2, 1, 0, 1, 1, 0, 2,
        ];
        let entries: Vec<Polynomial> =
            vals.iter().map(|&v| Polynomial::from_int(&r, v)).collect();
        let m = PolyMatrix::new(&r, 6, 6, entries);
        let det = m.determinant().unwrap();
        // Laplace path via the 5x5-and-under recursion on the full index sets
        let rows: Vec<usize> = (0..6).collect();
        let lap = m.det_laplace(&rows, &rows);
        assert_eq!(det, lap);
    }
}
