//! Exact integer linear algebra on dense matrices.
//!
//! Rank and determinants use fraction-free (Bareiss) elimination. Minor
//! computations in the inner loops of the total-unimodularity search and
//! the circuit enumeration run on `i128` with overflow checks and fall back
//! to arbitrary precision when a value leaves that range.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::var::VarId;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector {
    entries: Vec<BigInt>,
}

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector { entries }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVector::new(vec![BigInt::zero(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = IntVector::zeros(len);
        v.entries[i] = BigInt::one();
        v
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.entries[i].is_zero()).collect()
    }

    pub fn gcd(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd().is_one()
    }

    /// Divides by the gcd of the entries and makes the first nonzero entry
    /// positive. The zero vector is returned unchanged.
    pub fn normalized(&self) -> IntVector {
        let g = self.gcd();
        if g.is_zero() {
            return self.clone();
        }
        let first_negative = self
            .entries
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        let g = if first_negative { -g } else { g };
        IntVector::new(self.entries.iter().map(|x| x / &g).collect())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: &BigInt) -> IntVector {
        IntVector::new(self.entries.iter().map(|a| a * k).collect())
    }

    /// Entries as `i64`, `None` when one does not fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|x| x.to_i64()).collect()
    }

    fn l1(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).sum()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    column_names: Option<Vec<VarId>>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        IntMatrix {
            rows,
            cols,
            entries,
            column_names: None,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(r, c, entries)
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[IntVector]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m.set(i, j, col.entries[i].clone());
            }
        }
        m
    }

    /// Attaches column names; panics on a length mismatch or duplicates.
    pub fn with_column_names(mut self, names: Vec<VarId>) -> Self {
        assert_eq!(names.len(), self.cols);
        let distinct: BTreeSet<&VarId> = names.iter().collect();
        assert_eq!(distinct.len(), names.len(), "duplicate column names");
        self.column_names = Some(names);
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column_names(&self) -> Option<&[VarId]> {
        self.column_names.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector::new(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(rows.len(), cols.len(), entries)
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        assert_eq!(v.len(), self.cols);
        IntVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j) * &v.entries[j])
                        .sum()
                })
                .collect(),
        )
    }

    fn rows_as_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    fn small_rows(&self) -> Option<Vec<Vec<i128>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_i128())
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows_as_vecs())
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        determinant_big(self.rows_as_vecs())
    }

    /// Exact total-unimodularity test.
    ///
    /// Entries outside `{-1,0,1}` are immediate 1x1 witnesses. Rows and
    /// columns with at most one nonzero entry are then peeled off (a square
    /// submatrix through such a line expands to a smaller minor or vanishes),
    /// and the remaining core is searched exhaustively by ascending minor
    /// size, skipping submatrices that contain a line with fewer than two
    /// nonzero entries.
    pub fn is_totally_unimodular(&self) -> TuReport {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x.abs() > BigInt::one() {
                    return TuReport::violated(vec![i], vec![j], x.clone());
                }
            }
        }
        let small: Vec<Vec<i8>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i8().unwrap()).collect())
            .collect();
        let (rows, cols) = peel_sparse_lines(&small, self.rows, self.cols);
        let max_k = rows.len().min(cols.len());
        for k in 2..=max_k {
            if let Some(w) = search_minors(&small, &rows, &cols, k) {
                return w;
            }
        }
        TuReport {
            totally_unimodular: true,
            witness: None,
        }
    }

    /// Basis of the integer kernel lattice `{u : M u = 0}`.
    ///
    /// Unimodular row reduction of `[M^T | I]` leaves the kernel basis in
    /// the identity block of the rows whose left part vanishes; the basis is
    /// then size-reduced pairwise and each vector sign-normalized.
    pub fn kernel_lattice_basis(&self) -> Vec<IntVector> {
        let n = self.cols;
        let mut work: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..n)
            .map(|j| {
                let left = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
                (left, IntVector::unit(n, j).entries)
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..self.rows {
            if pivot_row == n {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (pivot_row..n)
                    .filter(|&r| !work[r].0[col].is_zero())
                    .collect();
                if nonzero.is_empty() {
                    break;
                }
                let best = *nonzero
                    .iter()
                    .min_by_key(|&&r| work[r].0[col].abs())
                    .unwrap();
                work.swap(pivot_row, best);
                let mut done = true;
                for r in pivot_row + 1..n {
                    if work[r].0[col].is_zero() {
                        continue;
                    }
                    let q = work[r].0[col].div_floor(&work[pivot_row].0[col]);
                    let (pivot, target) = pair_mut(&mut work, pivot_row, r);
                    sub_scaled(&mut target.0, &pivot.0, &q);
                    sub_scaled(&mut target.1, &pivot.1, &q);
                    if !target.0[col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    pivot_row += 1;
                    break;
                }
            }
        }
        let mut basis: Vec<IntVector> = work[pivot_row..]
            .iter()
            .map(|(_, right)| IntVector::new(right.clone()))
            .collect();
        size_reduce(&mut basis);
        let mut basis: Vec<IntVector> = basis.iter().map(|v| v.normalized()).collect();
        basis.sort_by(|a, b| a.support().cmp(&b.support()).then_with(|| b.cmp(a)));
        basis
    }

    /// Primitive kernel vectors of minimal support, one per sign class,
    /// first nonzero entry positive, sorted by support size and then by
    /// support indices.
    ///
    /// A kernel vector `K y` has minimal support exactly when the kernel-basis
    /// rows indexed by its zero set have rank `d - 1` (with `d` the kernel
    /// dimension), so the circuits are enumerated as the generalized cross
    /// products of all `(d - 1)`-subsets of kernel-basis rows.
    pub fn matrix_circuits(&self) -> Vec<IntVector> {
        let basis = self.kernel_lattice_basis();
        let d = basis.len();
        if d == 0 {
            return Vec::new();
        }
        let n = self.cols;
        let kernel = IntMatrix::from_columns(n, &basis);
        let rows_big = kernel.rows_as_vecs();
        let rows_small = kernel.small_rows();
        let mut found: BTreeSet<IntVector> = BTreeSet::new();
        for_each_subset(n, d - 1, &mut |subset| {
            let coeffs = match &rows_small {
                Some(rs) => cross_product_small(rs, subset, d)
                    .map(|c| c.into_iter().map(BigInt::from).collect())
                    .unwrap_or_else(|| cross_product_big(&rows_big, subset, d)),
                None => cross_product_big(&rows_big, subset, d),
            };
            if coeffs.iter().all(|c: &BigInt| c.is_zero()) {
                return;
            }
            let x = kernel.mul_vec(&IntVector::new(coeffs));
            found.insert(x.normalized());
        });
        let mut out: Vec<IntVector> = found.into_iter().collect();
        out.sort_by(|a, b| {
            let (sa, sb) = (a.support(), b.support());
            sa.len().cmp(&sb.len()).then_with(|| sa.cmp(&sb)).then_with(|| a.cmp(b))
        });
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A square submatrix, by row and column indices, and its determinant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuReport {
    pub totally_unimodular: bool,
    pub witness: Option<Minor>,
}

impl TuReport {
    fn violated(rows: Vec<usize>, cols: Vec<usize>, det: BigInt) -> Self {
        TuReport {
            totally_unimodular: false,
            witness: Some(Minor {
                rows,
                cols,
                determinant: det.to_string(),
            }),
        }
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &mut T) {
    assert!(a < b);
    let (lo, hi) = v.split_at_mut(b);
    (&mut lo[a], &mut hi[0])
}

fn sub_scaled(target: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t -= s * q;
    }
}

/// Pairwise reduction: replace `v_i` by `v_i - k v_j` while the l1 norm
/// strictly drops.
fn size_reduce(basis: &mut [IntVector]) {
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for k in [BigInt::one(), -BigInt::one()] {
                    let cand = basis[i].add(&basis[j].scaled(&k));
                    if cand.l1() < basis[i].l1() {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn determinant_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Bareiss determinant on `i128`; `None` on overflow.
fn determinant_small(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[k][k].checked_mul(a[i][j])?;
                let y = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

/// Signed maximal minors of the `(d-1) x d` matrix formed by `subset`.
fn cross_product_small(rows: &[Vec<i128>], subset: &[usize], d: usize) -> Option<Vec<i128>> {
    (0..d)
        .map(|skip| {
            let m: Vec<Vec<i128>> = subset
                .iter()
                .map(|&r| (0..d).filter(|&c| c != skip).map(|c| rows[r][c]).collect())
                .collect();
            let det = determinant_small(m)?;
            Some(if skip % 2 == 0 { det } else { -det })
        })
        .collect()
}

fn cross_product_big(rows: &[Vec<BigInt>], subset: &[usize], d: usize) -> Vec<BigInt> {
    (0..d)
        .map(|skip| {
            let m: Vec<Vec<BigInt>> = subset
                .iter()
                .map(|&r| (0..d).filter(|&c| c != skip).map(|c| rows[r][c].clone()).collect())
                .collect();
            let det = determinant_big(m);
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

/// Calls `f` on every `k`-subset of `0..n`, in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn peel_sparse_lines(a: &[Vec<i8>], rows: usize, cols: usize) -> (Vec<usize>, Vec<usize>) {
    let mut live_r = vec![true; rows];
    let mut live_c = vec![true; cols];
    loop {
        let mut changed = false;
        for i in 0..rows {
            if live_r[i] && (0..cols).filter(|&j| live_c[j] && a[i][j] != 0).count() <= 1 {
                live_r[i] = false;
                changed = true;
            }
        }
        for j in 0..cols {
            if live_c[j] && (0..rows).filter(|&i| live_r[i] && a[i][j] != 0).count() <= 1 {
                live_c[j] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (
        (0..rows).filter(|&i| live_r[i]).collect(),
        (0..cols).filter(|&j| live_c[j]).collect(),
    )
}

fn search_minors(a: &[Vec<i8>], rows: &[usize], cols: &[usize], k: usize) -> Option<TuReport> {
    let mut witness = None;
    for_each_subset(rows.len(), k, &mut |rsub| {
        if witness.is_some() {
            return;
        }
        let rsel: Vec<usize> = rsub.iter().map(|&i| rows[i]).collect();
        // columns with at least two nonzeros inside the selected rows
        let usable: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&j| rsel.iter().filter(|&&i| a[i][j] != 0).count() >= 2)
            .collect();
        for_each_subset(usable.len(), k, &mut |csub| {
            if witness.is_some() {
                return;
            }
            let csel: Vec<usize> = csub.iter().map(|&j| usable[j]).collect();
            if rsel
                .iter()
                .any(|&i| csel.iter().filter(|&&j| a[i][j] != 0).count() < 2)
            {
                return;
            }
            let m: Vec<Vec<i128>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| a[i][j] as i128).collect())
                .collect();
            let det = match determinant_small(m) {
                Some(d) => BigInt::from(d),
                None => determinant_big(
                    rsel.iter()
                        .map(|&i| csel.iter().map(|&j| BigInt::from(a[i][j])).collect())
                        .collect(),
                ),
            };
            if det.abs() > BigInt::one() {
                witness = Some(TuReport::violated(rsel.clone(), csel, det));
            }
        });
    });
    witness
}

/// Unpruned oracle: scan every column subset, keep the minimally
/// dependent ones and solve their one-dimensional kernel by Cramer
/// minors on an independent row selection.
pub fn brute_force_circuits(m: &IntMatrix) -> BTreeSet<IntVector> {
    let n = m.cols();
    assert!(n <= 16, "brute-force oracle is limited to 16 columns");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
        let all_rows: Vec<usize> = (0..m.rows()).collect();
        let sub = m.submatrix(&all_rows, &s);
        if sub.rank() != s.len() - 1 {
            continue;
        }
        let minimal = (0..s.len()).all(|drop| {
            let t: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, &j)| j).collect();
            m.submatrix(&all_rows, &t).rank() == t.len()
        });
        if !minimal {
            continue;
        }
        // greedy independent row selection
        let mut chosen: Vec<usize> = Vec::new();
        for r in 0..m.rows() {
            let mut trial = chosen.clone();
            trial.push(r);
            if m.submatrix(&trial, &s).rank() == trial.len() {
                chosen = trial;
            }
        }
        let mut x = IntVector::zeros(n);
        for (pos, &j) in s.iter().enumerate() {
            let others: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, &c)| c).collect();
            let det = m.submatrix(&chosen, &others).determinant();
            x.entries[j] = if pos % 2 == 0 { det } else { -det };
        }
        out.insert(x.normalized());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        assert_eq!(IntMatrix::from_rows(&[vec![2, 4], vec![1, 2]]).rank(), 1);
        assert_eq!(IntMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn determinant_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        assert_eq!(m.determinant(), BigInt::from(0));
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }

    #[test]
    fn tu_two_by_two_witness() {
        let r = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).is_totally_unimodular();
        assert!(!r.totally_unimodular);
        assert_eq!(r.witness.unwrap().determinant, "-2");
        let r = IntMatrix::from_rows(&[vec![3]]).is_totally_unimodular();
        assert_eq!(r.witness.unwrap().determinant, "3");
        assert!(IntMatrix::identity(4).is_totally_unimodular().totally_unimodular);
    }

    #[test]
    fn tu_odd_cycle_incidence() {
        // incidence matrix of a 5-cycle: determinant 2
        let m = IntMatrix::from_rows(&[
            vec![1, 0, 0, 0, 1],
            vec![1, 1, 0, 0, 0],
            vec![0, 1, 1, 0, 0],
            vec![0, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1],
        ]);
        let r = m.is_totally_unimodular();
        assert!(!r.totally_unimodular);
        let w = r.witness.unwrap();
        assert_eq!(w.rows.len(), 5);
        assert_eq!(w.determinant.trim_start_matches('-'), "2");
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        assert!(IntMatrix::identity(3).kernel_lattice_basis().is_empty());
        assert!(IntMatrix::identity(3).matrix_circuits().is_empty());
    }

    #[test]
    fn kernel_lattice_is_saturated() {
        // kernel of (2 4) is spanned by (2,-1) over Z
        let m = IntMatrix::from_rows(&[vec![2, 4]]);
        let k = m.kernel_lattice_basis();
        assert_eq!(k, vec![IntVector::from_i64(&[2, -1])]);
    }

    #[test]
    fn subsets_enumeration() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], [0, 1]);
        assert_eq!(seen[5], [2, 3]);
        let mut count = 0;
        for_each_subset(3, 0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..4, 1usize..8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-2i64..=2, r * c).prop_map(move |v| {
                IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_basis_has_right_size(m in small_matrix()) {
            let k = m.kernel_lattice_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
                prop_assert!(v.is_primitive());
            }
            if !k.is_empty() {
                prop_assert_eq!(IntMatrix::from_columns(m.cols(), &k).rank(), k.len());
            }
        }

        #[test]
        fn circuits_match_brute_force(m in small_matrix()) {
            let fast: BTreeSet<IntVector> = m.matrix_circuits().into_iter().collect();
            prop_assert_eq!(fast, brute_force_circuits(&m));
        }
    }
}
