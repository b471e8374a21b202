//! Small dense matrices over `Z[tau]`.

use std::fmt;
use std::ops::Mul;

use crate::goldenring::GoldenInt;

/// Row-major square matrix with `Z[tau]` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoldenMatrix {
    n: usize,
    data: Vec<GoldenInt>,
}

impl GoldenMatrix {
    pub fn zeros(n: usize) -> Self {
        GoldenMatrix {
            n,
            data: vec![GoldenInt::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = GoldenInt::ONE;
        }
        m
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<GoldenInt>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        GoldenMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[GoldenInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<GoldenInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn apply(&self, v: &[GoldenInt]) -> Vec<GoldenInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(&m, &x)| m * x).sum())
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    /// The submatrix on the given row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        let mut m = Self::zeros(k);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)];
            }
        }
        m
    }

    /// Exact determinant by Laplace expansion along the first row.
    pub fn det(&self) -> GoldenInt {
        let idx: Vec<usize> = (0..self.n).collect();
        self.det_on(&idx, &idx)
    }

    fn det_on(&self, rows: &[usize], cols: &[usize]) -> GoldenInt {
        match rows.len() {
            0 => GoldenInt::ONE,
            1 => self[(rows[0], cols[0])],
            2 => {
                self[(rows[0], cols[0])] * self[(rows[1], cols[1])]
                    - self[(rows[0], cols[1])] * self[(rows[1], cols[0])]
            }
            _ => {
                let mut acc = GoldenInt::ZERO;
                let mut sub = Vec::with_capacity(cols.len() - 1);
                for (j, &c) in cols.iter().enumerate() {
                    let entry = self[(rows[0], c)];
                    if entry.is_zero() {
                        continue;
                    }
                    sub.clear();
                    sub.extend(cols.iter().copied().filter(|&x| x != c));
                    let minor = self.det_on(&rows[1..], &sub);
                    if j % 2 == 0 {
                        acc += entry * minor;
                    } else {
                        acc -= entry * minor;
                    }
                }
                acc
            }
        }
    }

    /// Classical adjugate, `adj(M) M = det(M) I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let mut adj = Self::zeros(n);
        if n == 1 {
            adj[(0, 0)] = GoldenInt::ONE;
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.det_on(&rows, &cols);
                adj[(i, j)] = if (i + j) % 2 == 0 { minor } else { -minor };
            }
        }
        adj
    }
}

impl std::ops::Index<(usize, usize)> for GoldenMatrix {
    type Output = GoldenInt;
    fn index(&self, (i, j): (usize, usize)) -> &GoldenInt {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GoldenMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GoldenInt {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &GoldenMatrix {
    type Output = GoldenMatrix;
    fn mul(self, rhs: &GoldenMatrix) -> GoldenMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = GoldenMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for GoldenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
