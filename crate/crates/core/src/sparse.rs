// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Square sparse integer matrices and Kronecker index arithmetic.
//!
//! Storage is compressed-row with strictly ascending column indices in every
//! row and no explicitly stored zeros. Matrix indices are 0-based; the
//! Kronecker index maps ([`idx_split`], [`idx_join`], [`IndexMap`]) use the
//! 1-based global numbering of product vertices.

use crate::error::{Error, Result};

/// Square sparse matrix with non-negative integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<u64>,
}

impl SparseMatrix {
    /// The all-zero matrix `O_n`.
    pub fn zeros(n: usize) -> Self {
        SparseMatrix {
            n,
            row_ptr: vec![0; n + 1],
            cols: Vec::new(),
            vals: Vec::new(),
        }
    }

    /// The identity `I_n`.
    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            n,
            row_ptr: (0..=n).collect(),
            cols: (0..n).collect(),
            vals: vec![1; n],
        }
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        let mut cols = Vec::with_capacity(n * n);
        for _ in 0..n {
            cols.extend(0..n);
        }
        SparseMatrix {
            n,
            row_ptr: (0..=n).map(|i| i * n).collect(),
            cols,
            vals: vec![1; n * n],
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Duplicate positions
    /// are summed and zero values are dropped.
    pub fn from_triplets<I>(n: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut entries: Vec<(usize, usize, u64)> = Vec::new();
        for (r, c, v) in triplets {
            if r >= n || c >= n {
                return Err(Error::Domain(format!("entry ({r}, {c}) outside a {n}x{n} matrix")));
            }
            if v != 0 {
                entries.push((r, c, v));
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut merged: Vec<(usize, usize, u64)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => {
                    last.2 = last.2.checked_add(v).ok_or(Error::Overflow("from_triplets"))?;
                }
                _ => merged.push((r, c, v)),
            }
        }
        Ok(Self::from_sorted_unique(n, merged))
    }

    /// Builds a boolean matrix from `(row, col)` positions; duplicates collapse.
    pub fn from_pattern<I>(n: usize, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for (r, c) in positions {
            if r >= n || c >= n {
                return Err(Error::Domain(format!("entry ({r}, {c}) outside a {n}x{n} matrix")));
            }
            entries.push((r, c));
        }
        entries.sort_unstable();
        entries.dedup();
        Ok(Self::from_sorted_unique(n, entries.into_iter().map(|(r, c)| (r, c, 1))))
    }

    fn from_sorted_unique<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut row_ptr = vec![0usize; n + 1];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for (r, c, v) in entries {
            row_ptr[r + 1] += 1;
            cols.push(c);
            vals.push(v);
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        SparseMatrix { n, row_ptr, cols, vals }
    }

    /// Assembles a matrix from per-row `(col, value)` lists that are already
    /// sorted by column, duplicate-free and zero-free.
    fn from_rows(n: usize, rows: Vec<Vec<(usize, u64)>>) -> Self {
        debug_assert_eq!(rows.len(), n);
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let total = rows.iter().map(Vec::len).sum();
        let mut cols = Vec::with_capacity(total);
        let mut vals = Vec::with_capacity(total);
        for row in rows {
            for (c, v) in row {
                cols.push(c);
                vals.push(v);
            }
            row_ptr.push(cols.len());
        }
        SparseMatrix { n, row_ptr, cols, vals }
    }

    /// Same sparsity as `self` with new values (zeros are dropped).
    pub(crate) fn with_values(&self, vals: Vec<u64>) -> Self {
        debug_assert_eq!(vals.len(), self.vals.len());
        let rows = (0..self.n)
            .map(|i| {
                let (lo, hi) = (self.row_ptr[i], self.row_ptr[i + 1]);
                (lo..hi)
                    .filter(|&e| vals[e] != 0)
                    .map(|e| (self.cols[e], vals[e]))
                    .collect()
            })
            .collect();
        Self::from_rows(self.n, rows)
    }

    /// Dimension (number of rows, equal to the number of columns).
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of stored (non-zero) entries.
    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    pub fn row_cols(&self, row: usize) -> &[usize] {
        &self.cols[self.row_ptr[row]..self.row_ptr[row + 1]]
    }

    pub fn row_values(&self, row: usize) -> &[u64] {
        &self.vals[self.row_ptr[row]..self.row_ptr[row + 1]]
    }

    /// `(col, value)` pairs of one row in ascending column order.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.row_cols(row)
            .iter()
            .copied()
            .zip(self.row_values(row).iter().copied())
    }

    /// All entries in row-major, ascending-column order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    /// Offset of `(row, col)` in the value array, if stored.
    pub fn position(&self, row: usize, col: usize) -> Option<usize> {
        if row >= self.n {
            return None;
        }
        let lo = self.row_ptr[row];
        self.row_cols(row).binary_search(&col).ok().map(|off| lo + off)
    }

    /// Entry value; zero when not stored or out of range.
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.position(row, col).map_or(0, |e| self.vals[e])
    }

    pub fn values(&self) -> &[u64] {
        &self.vals
    }

    pub fn is_boolean(&self) -> bool {
        self.vals.iter().all(|&v| v == 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(r, c, v)| self.get(c, r) == v)
    }

    pub fn transpose(&self) -> Self {
        let mut counts = vec![0usize; self.n + 1];
        for &c in &self.cols {
            counts[c + 1] += 1;
        }
        for i in 0..self.n {
            counts[i + 1] += counts[i];
        }
        let row_ptr = counts.clone();
        let mut next = counts;
        let mut cols = vec![0usize; self.nnz()];
        let mut vals = vec![0u64; self.nnz()];
        for (r, c, v) in self.iter() {
            let slot = next[c];
            cols[slot] = r;
            vals[slot] = v;
            next[c] += 1;
        }
        SparseMatrix {
            n: self.n,
            row_ptr,
            cols,
            vals,
        }
    }

    /// Diagonal entries as a vector, `diag(X) = (I ∘ X) 1`.
    pub fn diag(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// `X 1`.
    pub fn row_sums(&self) -> Result<Vec<u64>> {
        (0..self.n)
            .map(|i| {
                self.row_values(i)
                    .iter()
                    .try_fold(0u64, |acc, &v| acc.checked_add(v))
                    .ok_or(Error::Overflow("row_sums"))
            })
            .collect()
    }

    /// `Xᵀ 1`.
    pub fn col_sums(&self) -> Result<Vec<u64>> {
        let mut sums = vec![0u64; self.n];
        for (_, c, v) in self.iter() {
            sums[c] = sums[c].checked_add(v).ok_or(Error::Overflow("col_sums"))?;
        }
        Ok(sums)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Integer matrix product.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut acc = vec![0u64; n];
        let mut touched = vec![false; n];
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut hits: Vec<usize> = Vec::new();
            for (k, a) in self.row(i) {
                for (j, b) in other.row(k) {
                    let prod = a.checked_mul(b).ok_or(Error::Overflow("mat_mul"))?;
                    acc[j] = acc[j].checked_add(prod).ok_or(Error::Overflow("mat_mul"))?;
                    if !touched[j] {
                        touched[j] = true;
                        hits.push(j);
                    }
                }
            }
            hits.sort_unstable();
            let mut row = Vec::with_capacity(hits.len());
            for j in hits {
                if acc[j] != 0 {
                    row.push((j, acc[j]));
                }
                acc[j] = 0;
                touched[j] = false;
            }
            rows.push(row);
        }
        Ok(Self::from_rows(n, rows))
    }

    /// Entrywise (Hadamard) product `X ∘ Y`.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.merge(other, |a, b| a.checked_mul(b), true)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.merge(other, |a, b| a.checked_add(b), false)
    }

    /// `X − Y`; fails if any entry would become negative.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::new();
            let mut y = other.row(i).peekable();
            for (c, a) in self.row(i) {
                if let Some(&(yc, _)) = y.peek() {
                    if yc < c {
                        return Err(Error::Negative { row: i, col: yc });
                    }
                }
                let b = match y.peek() {
                    Some(&(yc, b)) if yc == c => {
                        y.next();
                        b
                    }
                    _ => 0,
                };
                let d = a.checked_sub(b).ok_or(Error::Negative { row: i, col: c })?;
                if d != 0 {
                    row.push((c, d));
                }
            }
            if let Some((yc, _)) = y.next() {
                return Err(Error::Negative { row: i, col: yc });
            }
            rows.push(row);
        }
        Ok(Self::from_rows(self.n, rows))
    }

    fn merge<F>(&self, other: &Self, op: F, intersect: bool) -> Result<Self>
    where
        F: Fn(u64, u64) -> Option<u64>,
    {
        self.check_dim(other)?;
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let (xc, xv) = (self.row_cols(i), self.row_values(i));
            let (yc, yv) = (other.row_cols(i), other.row_values(i));
            let (mut a, mut b) = (0, 0);
            let mut row = Vec::new();
            while a < xc.len() || b < yc.len() {
                let (c, x, y) = if b >= yc.len() || (a < xc.len() && xc[a] < yc[b]) {
                    a += 1;
                    (xc[a - 1], xv[a - 1], 0)
                } else if a >= xc.len() || yc[b] < xc[a] {
                    b += 1;
                    (yc[b - 1], 0, yv[b - 1])
                } else {
                    a += 1;
                    b += 1;
                    (xc[a - 1], xv[a - 1], yv[b - 1])
                };
                if intersect && (x == 0 || y == 0) {
                    continue;
                }
                let v = op(x, y).ok_or(Error::Overflow("entrywise operation"))?;
                if v != 0 {
                    row.push((c, v));
                }
            }
            rows.push(row);
        }
        Ok(Self::from_rows(self.n, rows))
    }

    /// Multiplies every entry by `k`.
    pub fn scale(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::zeros(self.n));
        }
        let vals = self
            .vals
            .iter()
            .map(|&v| v.checked_mul(k).ok_or(Error::Overflow("scale")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { vals, ..self.clone() })
    }

    /// Keeps the entries for which `keep(row, col)` holds.
    pub fn filter<F>(&self, keep: F) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        let rows = (0..self.n)
            .map(|i| self.row(i).filter(|&(c, _)| keep(i, c)).collect())
            .collect();
        Self::from_rows(self.n, rows)
    }

    /// Splits `X` into its hollow part `X − I∘X` and its diagonal.
    pub fn strip_loops(&self) -> (Self, Vec<u64>) {
        (self.filter(|r, c| r != c), self.diag())
    }

    /// Materializes `X ⊗ Y` with `(X⊗Y)[idx_join(i,k), idx_join(j,l)] = X[i,j]·Y[k,l]`.
    pub fn kron(&self, other: &Self, guard: &MaterializeGuard) -> Result<Self> {
        let n = self.n.checked_mul(other.n).ok_or(Error::Overflow("kron dimension"))?;
        let entries = (self.nnz() as u128) * (other.nnz() as u128);
        guard.check(n as u128, entries)?;
        let nb = other.n;
        let mut rows = Vec::with_capacity(n);
        for i in 0..self.n {
            for k in 0..nb {
                let mut row = Vec::with_capacity(self.row_cols(i).len() * other.row_cols(k).len());
                for (j, a) in self.row(i) {
                    for (l, b) in other.row(k) {
                        let v = a.checked_mul(b).ok_or(Error::Overflow("kron"))?;
                        row.push((j * nb + l, v));
                    }
                }
                rows.push(row);
            }
        }
        Ok(Self::from_rows(n, rows))
    }

    /// `mask ∘ (X Y)`, evaluated only on the stored entries of `mask`.
    pub fn masked_product(mask: &Self, x: &Self, y: &Self) -> Result<Self> {
        mask.check_dim(x)?;
        x.check_dim(y)?;
        let yt = y.transpose();
        let mut vals = Vec::with_capacity(mask.nnz());
        for (i, j, m) in mask.iter() {
            let dot = sparse_dot(x.row_cols(i), x.row_values(i), yt.row_cols(j), yt.row_values(j))?;
            vals.push(dot.checked_mul(m).ok_or(Error::Overflow("masked_product"))?);
        }
        Ok(mask.with_values(vals))
    }

    /// `diag(X Y)` without forming the product.
    pub fn diag_of_product(x: &Self, y: &Self) -> Result<Vec<u64>> {
        x.check_dim(y)?;
        let yt = y.transpose();
        (0..x.n)
            .map(|i| sparse_dot(x.row_cols(i), x.row_values(i), yt.row_cols(i), yt.row_values(i)))
            .collect()
    }

    /// `diag(X Y Z)`, computed as the column sums of `Xᵀ ∘ (Y Z)`.
    pub fn diag_of_triple(x: &Self, y: &Self, z: &Self) -> Result<Vec<u64>> {
        let masked = Self::masked_product(&x.transpose(), y, z)?;
        masked.col_sums()
    }
}

fn sparse_dot(ac: &[usize], av: &[u64], bc: &[usize], bv: &[u64]) -> Result<u64> {
    let (mut a, mut b) = (0, 0);
    let mut acc = 0u64;
    while a < ac.len() && b < bc.len() {
        match ac[a].cmp(&bc[b]) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                let p = av[a].checked_mul(bv[b]).ok_or(Error::Overflow("dot"))?;
                acc = acc.checked_add(p).ok_or(Error::Overflow("dot"))?;
                a += 1;
                b += 1;
            }
        }
    }
    Ok(acc)
}

/// Size limits that keep explicit products from being built at scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaterializeGuard {
    pub max_dim: u128,
    pub max_entries: u128,
    pub allow_oversize: bool,
}

impl MaterializeGuard {
    pub const DEFAULT_MAX_DIM: u128 = 1_000_000;
    pub const DEFAULT_MAX_ENTRIES: u128 = 100_000_000;

    pub fn unlimited() -> Self {
        MaterializeGuard {
            allow_oversize: true,
            ..Self::default()
        }
    }

    pub fn check(&self, dim: u128, entries: u128) -> Result<()> {
        if self.allow_oversize {
            return Ok(());
        }
        if dim > self.max_dim {
            return Err(Error::TooLarge(format!(
                "product dimension {dim} exceeds {} (stream the product instead)",
                self.max_dim
            )));
        }
        if entries > self.max_entries {
            return Err(Error::TooLarge(format!(
                "predicted {entries} stored entries exceed {} (stream the product instead)",
                self.max_entries
            )));
        }
        Ok(())
    }
}

impl Default for MaterializeGuard {
    fn default() -> Self {
        MaterializeGuard {
            max_dim: Self::DEFAULT_MAX_DIM,
            max_entries: Self::DEFAULT_MAX_ENTRIES,
            allow_oversize: false,
        }
    }
}

/// Splits a 1-based global index into its 1-based `(block, intra)` pair.
pub fn idx_split(p: u64, n: u64) -> Result<(u64, u64)> {
    if p < 1 || n < 1 {
        return Err(Error::Domain(format!(
            "idx_split needs p >= 1 and n >= 1, got p={p}, n={n}"
        )));
    }
    Ok(((p - 1) / n + 1, (p - 1) % n + 1))
}

/// Inverse of [`idx_split`]: `(block − 1)·n + intra`.
pub fn idx_join(block: u64, intra: u64, n: u64) -> Result<u64> {
    if block < 1 || intra < 1 || intra > n {
        return Err(Error::Domain(format!(
            "idx_join needs block >= 1 and 1 <= intra <= n, got block={block}, intra={intra}, n={n}"
        )));
    }
    (block - 1)
        .checked_mul(n)
        .and_then(|x| x.checked_add(intra))
        .ok_or(Error::Overflow("idx_join"))
}

/// Block-structured index map with a fixed block size `n_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexMap {
    block_size: u64,
}

impl IndexMap {
    pub fn new(block_size: u64) -> Result<Self> {
        if block_size < 1 {
            return Err(Error::Domain("block size must be positive".into()));
        }
        Ok(IndexMap { block_size })
    }

    pub fn block_size(&self) -> u64 {
        self.block_size
    }

    pub fn split(&self, p: u64) -> Result<(u64, u64)> {
        idx_split(p, self.block_size)
    }

    pub fn join(&self, block: u64, intra: u64) -> Result<u64> {
        idx_join(block, intra, self.block_size)
    }

    /// 0-based factor indices of a 1-based product vertex.
    pub(crate) fn split0(&self, p: u64) -> Result<(usize, usize)> {
        let (i, k) = self.split(p)?;
        Ok(((i - 1) as usize, (k - 1) as usize))
    }

    /// 1-based product vertex of 0-based factor indices.
    pub(crate) fn join0(&self, i: usize, k: usize) -> u64 {
        i as u64 * self.block_size + k as u64 + 1
    }
}
