//! Matrices of polynomials with labelled row and column bases.

use crate::error::PolyError;
use crate::poly::MPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
    row_basis: Vec<String>,
    col_basis: Vec<String>,
}

impl PolyMatrix {
    /// Builds a matrix from row-major entries. Empty bases are replaced by
    /// positional labels.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<MPoly>,
        row_basis: Vec<String>,
        col_basis: Vec<String>,
    ) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let row_basis = if row_basis.is_empty() {
            (0..rows).map(|i| format!("r{i}")).collect()
        } else {
            row_basis
        };
        let col_basis = if col_basis.is_empty() {
            (0..cols).map(|j| format!("c{j}")).collect()
        } else {
            col_basis
        };
        if row_basis.len() != rows || col_basis.len() != cols {
            return Err(PolyError::Dimension("basis length mismatch".into()));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
            row_basis,
            col_basis,
        })
    }

    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect(), vec![], vec![])
    }

    /// Builds a matrix from columns, labelling them with `col_basis`.
    pub fn from_columns(
        columns: Vec<Vec<MPoly>>,
        row_basis: Vec<String>,
        col_basis: Vec<String>,
    ) -> Result<Self, PolyError> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, |c| c.len());
        if columns.iter().any(|c| c.len() != rows) {
            return Err(PolyError::Dimension("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in &columns {
                entries.push(c[i].clone());
            }
        }
        Self::new(rows, cols, entries, row_basis, col_basis)
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    MPoly::one()
                } else {
                    MPoly::zero()
                }
            })
            .collect();
        Self::new(n, n, entries, vec![], vec![]).unwrap()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[MPoly] {
        &self.entries
    }

    pub fn row_basis(&self) -> &[String] {
        &self.row_basis
    }

    pub fn col_basis(&self) -> &[String] {
        &self.col_basis
    }

    pub fn column(&self, j: usize) -> Vec<MPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Applies `f` to every entry, keeping the bases.
    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> PolyMatrix {
        PolyMatrix {
            entries: self.entries.iter().map(f).collect(),
            ..self.clone()
        }
    }

    /// Drops row `i`.
    pub fn without_row(&self, i: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in (0..self.rows).filter(|&r| r != i) {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
        }
        let mut row_basis = self.row_basis.clone();
        row_basis.remove(i);
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
            row_basis,
            col_basis: self.col_basis.clone(),
        }
    }

    fn square_rows(&self) -> Result<Vec<Vec<MPoly>>, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(self
            .entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|r| r.to_vec())
            .collect())
    }

    /// Exact determinant: cofactor expansion up to 4x4, fraction-free
    /// Bareiss elimination beyond.
    pub fn determinant(&self) -> Result<MPoly, PolyError> {
        let rows = self.square_rows()?;
        if self.rows <= 4 {
            Ok(cofactor_det(&rows))
        } else {
            bareiss_det(rows)
        }
    }

    pub fn determinant_cofactor(&self) -> Result<MPoly, PolyError> {
        Ok(cofactor_det(&self.square_rows()?))
    }

    pub fn determinant_bareiss(&self) -> Result<MPoly, PolyError> {
        bareiss_det(self.square_rows()?)
    }

    /// Rank over the rationals. Every entry must be a constant.
    pub fn rank(&self) -> Result<usize, PolyError> {
        let mut m: Vec<Vec<Rational>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let c = self
                    .get(i, j)
                    .constant_value()
                    .ok_or_else(|| PolyError::Unsupported("rank needs constant entries".into()))?;
                row.push(c);
            }
            m.push(row);
        }
        Ok(rational_rank(m))
    }
}

/// Sylvester matrix of two binary forms given by their coefficient lists
/// in descending powers of the first variable: `n` shifted rows of `p`
/// (order `m`) over `m` shifted rows of `q` (order `n`).
pub fn sylvester_matrix(p: &[MPoly], q: &[MPoly]) -> PolyMatrix {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut entries = vec![MPoly::zero(); size * size];
    for r in 0..n {
        for (k, c) in p.iter().enumerate() {
            entries[r * size + r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.iter().enumerate() {
            entries[(n + r) * size + r + k] = c.clone();
        }
    }
    PolyMatrix::new(size, size, entries, vec![], vec![]).unwrap()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip().unwrap();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..cols {
                let t = &f * &m[rank][c];
                m[r][c] -= &t;
            }
        }
        rank += 1;
    }
    rank
}

fn cofactor_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    match n {
        0 => MPoly::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = MPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor_det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> Result<MPoly, PolyError> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // prefer the sparsest usable pivot
            let swap = (k + 1..n)
                .filter(|&r| !m[r][k].is_zero())
                .min_by_key(|&r| m[r][k].num_terms());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn identity_has_unit_determinant() {
        for n in 0..7 {
            assert_eq!(PolyMatrix::identity(n).determinant().unwrap(), MPoly::one());
        }
    }

    #[test]
    fn two_by_two() {
        let m =
            PolyMatrix::from_rows(vec![vec![p("a0"), p("a1")], vec![p("a1"), p("a2")]]).unwrap();
        assert_eq!(m.determinant().unwrap(), p("a0*a2 - a1^2"));
    }

    #[test]
    fn common_root_sylvester_vanishes() {
        // (x-1)(x-2) = x^2 - 3x + 2, (x-1)(x-3) = x^2 - 4x + 3
        let rows = vec![
            vec![p("1"), p("-3"), p("2"), p("0")],
            vec![p("0"), p("1"), p("-3"), p("2")],
            vec![p("1"), p("-4"), p("3"), p("0")],
            vec![p("0"), p("1"), p("-4"), p("3")],
        ];
        let m = PolyMatrix::from_rows(rows).unwrap();
        assert!(m.determinant().unwrap().is_zero());
        assert!(m.determinant_bareiss().unwrap().is_zero());
    }

    #[test]
    fn bareiss_with_pivoting() {
        let rows = vec![
            vec![p("0"), p("a0"), p("1")],
            vec![p("a1"), p("0"), p("a2")],
            vec![p("1"), p("a3"), p("0")],
        ];
        let m = PolyMatrix::from_rows(rows).unwrap();
        assert_eq!(
            m.determinant_bareiss().unwrap(),
            m.determinant_cofactor().unwrap()
        );
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::from_rows(vec![vec![p("1"), p("2")]]).unwrap();
        assert!(matches!(m.determinant(), Err(PolyError::Dimension(_))));
    }

    #[test]
    fn rank_over_rationals() {
        let m = PolyMatrix::from_rows(vec![
            vec![p("1"), p("2"), p("3")],
            vec![p("2"), p("4"), p("6")],
            vec![p("0"), p("1"), p("(1/2)")],
        ])
        .unwrap();
        assert_eq!(m.rank().unwrap(), 2);
    }
}
