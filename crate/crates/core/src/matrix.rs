//! Dense square matrices over a cyclotomic field.
//!
//! Ranks here are tiny (at most the square of a modular datum's rank), so
//! everything is schoolbook. All entries of a matrix share one field order.

use crate::cyclo::{CycloNum, RootOfUnity};
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct CMat {
    order: u64,
    n: usize,
    entries: Vec<CycloNum>,
}

impl CMat {
    pub fn from_entries(order: u64, n: usize, entries: Vec<CycloNum>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::OrderMismatch(order, e.order()));
        }
        Ok(CMat { order, n, entries })
    }

    pub fn identity(order: u64, n: usize) -> Self {
        let mut entries = vec![CycloNum::zero(order); n * n];
        for i in 0..n {
            entries[i * n + i] = CycloNum::one(order);
        }
        CMat { order, n, entries }
    }

    /// Permutation matrix P with P[i][perm[i]] = 1.
    pub fn permutation(order: u64, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut entries = vec![CycloNum::zero(order); n * n];
        for (i, &j) in perm.iter().enumerate() {
            entries[i * n + j] = CycloNum::one(order);
        }
        CMat { order, n, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn at(&self, i: usize, j: usize) -> &CycloNum {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNum) {
        assert_eq!(v.order(), self.order);
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        assert_eq!(self.order, rhs.order, "order mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycloNum::zero(self.order);
                for k in 0..n {
                    let a = self.at(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        CMat { order: self.order, n, entries }
    }

    pub fn scale(&self, c: &CycloNum) -> CMat {
        CMat {
            order: self.order,
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn scale_root(&self, r: &RootOfUnity) -> Result<CMat> {
        let e = r.exponent_in(self.order)?;
        Ok(CMat {
            order: self.order,
            n: self.n,
            entries: self.entries.iter().map(|x| x.mul_root_exp(e)).collect(),
        })
    }

    /// Left-multiplication by diag(roots): scales row i by roots[i].
    pub fn scale_rows(&self, roots: &[RootOfUnity]) -> Result<CMat> {
        assert_eq!(roots.len(), self.n);
        let mut out = self.clone();
        for i in 0..self.n {
            let e = roots[i].exponent_in(self.order)?;
            for j in 0..self.n {
                let v = out.at(i, j).mul_root_exp(e);
                out.entries[i * self.n + j] = v;
            }
        }
        Ok(out)
    }

    /// Right-multiplication by diag(roots): scales column j by roots[j].
    pub fn scale_cols(&self, roots: &[RootOfUnity]) -> Result<CMat> {
        assert_eq!(roots.len(), self.n);
        let mut out = self.clone();
        for j in 0..self.n {
            let e = roots[j].exponent_in(self.order)?;
            for i in 0..self.n {
                let v = out.at(i, j).mul_root_exp(e);
                out.entries[i * self.n + j] = v;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> CMat {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.at(j, i).clone());
            }
        }
        CMat { order: self.order, n, entries }
    }

    pub fn conj(&self) -> CMat {
        self.map(|e| e.conj())
    }

    pub fn galois(&self, a: i64) -> Result<CMat> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.galois(a)?);
        }
        Ok(CMat { order: self.order, n: self.n, entries })
    }

    pub fn map<F: Fn(&CycloNum) -> CycloNum>(&self, f: F) -> CMat {
        CMat {
            order: self.order,
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn promote(&self, m2: u64) -> Result<CMat> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.promote(m2)?);
        }
        Ok(CMat { order: m2, n: self.n, entries })
    }

    pub fn is_identity(&self) -> bool {
        *self == CMat::identity(self.order, self.n)
    }

    pub fn pow(&self, k: u32) -> CMat {
        let mut acc = CMat::identity(self.order, self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Interpret the matrix as a 0/1 permutation matrix, returning the
    /// permutation i -> j with self[i][j] = 1.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut perm = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                let e = self.at(i, j);
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || perm[i] != usize::MAX || seen[j] {
                    return None;
                }
                perm[i] = j;
                seen[j] = true;
            }
            if perm[i] == usize::MAX {
                return None;
            }
        }
        Some(perm)
    }
}

impl fmt::Debug for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMat(Q_{}, {}x{}):", self.order, self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
