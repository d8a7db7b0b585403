use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Dense row-major matrix over a table ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl RingMatrix {
    pub fn zeros(ring: Arc<Ring>, rows: usize, cols: usize) -> RingMatrix {
        RingMatrix {
            ring,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ring: Arc<Ring>, n: usize) -> RingMatrix {
        let mut m = RingMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(ring: Arc<Ring>, rows: &[Vec<Elem>]) -> Result<RingMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            for &e in r {
                ring.check_index(e as usize)?;
            }
            data.extend_from_slice(r);
        }
        Ok(RingMatrix {
            ring,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        self.data[r * self.cols + c] = e;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = RingMatrix::zeros(self.ring.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn check_same_ring(&self, other: &RingMatrix) -> Result<()> {
        if self.ring.kind() != other.ring.kind() {
            return Err(Error::RingMismatch {
                left: self.ring.kind().to_string(),
                right: other.ring.kind().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::LengthMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.ring.add(a, b))
            .collect();
        Ok(RingMatrix { data, ..self.clone() })
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let r = &self.ring;
        let mut out = RingMatrix::zeros(r.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, r.add(cur, r.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_ring(other)?;
        if self.rows != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: other.rows,
            });
        }
        let rows: Vec<Vec<Elem>> = (0..self.rows)
            .map(|r| [self.row(r), other.row(r)].concat())
            .collect();
        RingMatrix::from_rows(self.ring.clone(), &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix {}x{} over {}", self.rows, self.cols, self.ring.kind())?;
        for r in 0..self.rows {
            writeln!(f, "  [{}]", self.ring.format_vector(self.row(r)))?;
        }
        Ok(())
    }
}
