//! Exact linear algebra over a prime field `F_p`.
//!
//! Matrices are dense, row-major, with entries kept reduced into `[0, p)`.
//! Subspaces are canonicalized as reduced row echelon bases, so two
//! subspaces are equal iff their basis grids are identical. Quotient spaces
//! pick the non-pivot coordinates of the relation basis as a section.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

/// A prime modulus, checked at construction. Kept small so every product of
/// two reduced values fits comfortably in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prime(u64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside supported range 2..=97")]
    OutOfRange(u64),
}

impl Prime {
    pub const MAX: u64 = 97;

    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if !(2..=Self::MAX).contains(&p) {
            return Err(PrimeError::OutOfRange(p));
        }
        if (2..p)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
        {
            return Err(PrimeError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b % self.0) % self.0
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        let a = a % self.0;
        assert!(a != 0, "zero has no inverse");
        self.pow(a, self.0 - 2)
    }

    /// Sums `coeff * value` pairs, reduced.
    pub fn dot(self, xs: &[u64], ys: &[u64]) -> u64 {
        assert_eq!(xs.len(), ys.len());
        xs.iter()
            .zip(ys)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    pub fn vec_add(self, xs: &[u64], ys: &[u64]) -> Vec<u64> {
        assert_eq!(xs.len(), ys.len());
        xs.iter().zip(ys).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_sub(self, xs: &[u64], ys: &[u64]) -> Vec<u64> {
        assert_eq!(xs.len(), ys.len());
        xs.iter().zip(ys).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn vec_scale(self, c: u64, xs: &[u64]) -> Vec<u64> {
        xs.iter().map(|&x| self.mul(c, x)).collect()
    }
}

/// Dense matrix over `F_p`, row-major, entries reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors, reducing every entry mod `p`.
    pub fn from_rows(p: Prime, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&x| p.reduce(x)));
        }
        FpMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(p: Prime, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, p.reduce(f(i, j)));
            }
        }
        m
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.p.reduce(v);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mat_mul(&self, rhs: &FpMatrix) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = self.p.add(out.get(i, j), self.p.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|i| self.p.dot(self.row(i), v)).collect()
    }

    pub fn vstack(&self, other: &FpMatrix) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &FpMatrix) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.p, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(a, j);
            let v = self.get(b, j);
            self.set(a, j, v);
            self.set(b, j, t);
        }
    }

    fn scale_row(&mut self, r: usize, c: u64) {
        for j in 0..self.cols {
            let v = self.p.mul(self.get(r, j), c);
            self.set(r, j, v);
        }
    }

    /// `row[dst] -= c * row[src]`
    fn sub_scaled_row(&mut self, dst: usize, src: usize, c: u64) {
        if c == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = self
                .p
                .sub(self.get(dst, j), self.p.mul(c, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// Unique reduced row echelon form; zero rows are dropped, pivots are 1
    /// and alone in their column. Row space is preserved.
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.p.inv(m.get(pivot_row, col));
            m.scale_row(pivot_row, inv);
            for other in 0..m.rows {
                if other != pivot_row {
                    let c = m.get(other, col);
                    m.sub_scaled_row(other, pivot_row, c);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        m.data.truncate(pivot_row * m.cols);
        m.rows = pivot_row;
        m
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Null space of the matrix, canonical.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let pivots: Vec<usize> = (0..r.rows)
            .map(|i| {
                r.row(i)
                    .iter()
                    .position(|&x| x != 0)
                    .expect("no zero rows in rref")
            })
            .collect();
        let mut gens = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = self.p.neg(r.get(row, free));
            }
            gens.push(v);
        }
        Subspace::from_generators(self.p, self.cols, &gens)
    }

    /// One solution of `self * x = rhs` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let rhs_col = FpMatrix::from_fn(self.p, self.rows, 1, |i, _| rhs[i]);
        let aug = self.hstack(&rhs_col).rref();
        let mut x = vec![0; self.cols];
        for i in 0..aug.rows {
            let lead = aug.row(i).iter().position(|&v| v != 0).expect("rref row");
            if lead == self.cols {
                return None; // row reads 0 = 1
            }
            x[lead] = aug.get(i, self.cols);
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&FpMatrix::identity(self.p, n)).rref();
        if aug.rows < n {
            return None;
        }
        // left block must have come out as the identity
        for i in 0..n {
            for j in 0..n {
                if aug.get(i, j) != u64::from(i == j) {
                    return None;
                }
            }
        }
        Some(Self::from_fn(self.p, n, n, |i, j| aug.get(i, j + n)))
    }
}

impl core::fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A linear subspace of `F_p^n`, stored as its unique RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: FpMatrix,
}

impl Subspace {
    pub fn from_matrix(m: &FpMatrix) -> Self {
        Subspace {
            ambient_dim: m.cols(),
            basis: m.rref(),
        }
    }

    pub fn from_generators(p: Prime, ambient_dim: usize, gens: &[Vec<u64>]) -> Self {
        Self::from_matrix(&FpMatrix::from_rows(p, ambient_dim, gens))
    }

    pub fn zero(p: Prime, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FpMatrix::zeros(p, 0, ambient_dim),
        }
    }

    pub fn full(p: Prime, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: FpMatrix::identity(p, ambient_dim),
        }
    }

    pub fn p(&self) -> Prime {
        self.basis.p()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    /// Leading column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.basis.rows())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|&x| x != 0)
                    .expect("no zero rows in canonical basis")
            })
            .collect()
    }

    /// Reduces `v` modulo the subspace: the result has zeros in every pivot
    /// column, and is zero iff `v` is a member.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient_dim);
        let p = self.p();
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots().iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                for (j, slot) in v.iter_mut().enumerate() {
                    *slot = p.sub(*slot, p.mul(c, self.basis.get(row, j)));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a member vector in the canonical basis, read off the
    /// pivot columns. `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&c| v[c]).collect())
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Self::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Intersection via the Zassenhaus block trick: row-reduce
    /// `[[A A], [B 0]]` and keep the right halves of rows whose left half
    /// vanished.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let p = self.p();
        let n = self.ambient_dim;
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&FpMatrix::zeros(p, other.dim(), n));
        let reduced = top.vstack(&bottom).rref();
        let mut gens = Vec::new();
        for i in 0..reduced.rows() {
            let row = reduced.row(i);
            if row[..n].iter().all(|&x| x == 0) {
                gens.push(row[n..].to_vec());
            }
        }
        Subspace::from_generators(p, n, &gens)
    }
}

/// All `p^n` vectors of `F_p^n` in lexicographic order. Only sensible for
/// the small spaces exhaustive checks run over.
pub fn enumerate_vectors(p: Prime, n: usize) -> Vec<Vec<u64>> {
    let total = (p.get() as u128).pow(n as u32);
    assert!(total <= 1 << 20, "space too large to enumerate");
    let mut out = Vec::with_capacity(total as usize);
    let mut v = vec![0u64; n];
    loop {
        out.push(v.clone());
        let mut idx = n;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            v[idx] += 1;
            if v[idx] < p.get() {
                break;
            }
            v[idx] = 0;
        }
    }
}

/// `F_p^n` modulo a relation subspace, with the non-pivot coordinates of the
/// relations chosen as the section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    section: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let pivots = relations.pivots();
        let section = (0..relations.ambient_dim())
            .filter(|i| !pivots.contains(i))
            .collect();
        QuotientSpace { relations, section }
    }

    pub fn p(&self) -> Prime {
        self.relations.p()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Class of an ambient vector in quotient coordinates.
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let r = self.relations.reduce(v);
        self.section.iter().map(|&i| r[i]).collect()
    }

    /// Canonical ambient representative of a quotient class.
    pub fn lift(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.section.len());
        let mut v = vec![0; self.ambient_dim()];
        for (k, &i) in self.section.iter().enumerate() {
            v[i] = self.p().reduce(coords[k]);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn f3() -> Prime {
        Prime::new(3).unwrap()
    }

    /// Brute-force kernel oracle: every vector of F_p^cols mapped to zero.
    fn kernel_by_enumeration(m: &FpMatrix) -> Vec<Vec<u64>> {
        let p = m.p().get();
        let n = m.cols();
        let total = (p as u128).pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut v = vec![0u64; n];
            let mut c = code;
            for slot in v.iter_mut() {
                *slot = (c % p as u128) as u64;
                c /= p as u128;
            }
            if m.apply(&v).iter().all(|&x| x == 0) {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn prime_rejects_composites_and_range() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert_eq!(Prime::new(4), Err(PrimeError::NotPrime(4)));
        assert_eq!(Prime::new(91), Err(PrimeError::NotPrime(91))); // 7 * 13
        assert_eq!(Prime::new(1), Err(PrimeError::OutOfRange(1)));
        assert_eq!(Prime::new(101), Err(PrimeError::OutOfRange(101)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.add(3, 4), 2);
        assert_eq!(p.sub(1, 3), 3);
        assert_eq!(p.mul(3, 4), 2);
        assert_eq!(p.neg(0), 0);
        for a in 1..5 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = FpMatrix::identity(f2(), 2);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_collapses_duplicate_rows() {
        let m = FpMatrix::from_rows(f2(), 2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rref(), FpMatrix::from_rows(f2(), 2, &[vec![1, 1]]));
    }

    #[test]
    fn rref_over_f3() {
        // second row is 2x the first mod 3
        let m = FpMatrix::from_rows(f3(), 2, &[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.rref(), FpMatrix::from_rows(f3(), 2, &[vec![1, 2]]));
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = FpMatrix::zeros(f2(), 1, 2);
        assert_eq!(m.kernel(), Subspace::full(f2(), 2));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = FpMatrix::identity(f2(), 2);
        assert_eq!(m.kernel(), Subspace::zero(f2(), 2));
        assert_eq!(m.rank() + m.kernel().dim(), 2);
    }

    #[test]
    fn kernel_matches_enumeration_oracle() {
        let m = FpMatrix::from_rows(f2(), 2, &[vec![1, 1]]);
        let k = m.kernel();
        assert_eq!(k, Subspace::from_generators(f2(), 2, &[vec![1, 1]]));
        for v in kernel_by_enumeration(&m) {
            assert!(k.contains(&v));
        }
        assert_eq!(kernel_by_enumeration(&m).len(), 2); // zero and [1,1]
        assert_eq!(m.rank() + k.dim(), m.cols());
    }

    #[test]
    fn solve_identity() {
        let m = FpMatrix::identity(f2(), 2);
        assert_eq!(m.solve(&[1, 0]), Some(vec![1, 0]));
    }

    #[test]
    fn solve_prefers_zero_free_variables() {
        let m = FpMatrix::from_rows(f2(), 2, &[vec![1, 1]]);
        // both [1,0] and [0,1] solve; the free variable is set to zero
        assert_eq!(m.solve(&[1]), Some(vec![1, 0]));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = FpMatrix::zeros(f2(), 1, 1);
        assert_eq!(m.solve(&[1]), None);
    }

    #[test]
    fn quotient_kills_relation_coordinate() {
        let rel = Subspace::from_generators(f2(), 2, &[vec![0, 1]]);
        let q = QuotientSpace::new(rel);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&[1, 1]), vec![1]);
    }

    #[test]
    fn quotient_by_zero_is_reindexing() {
        let q = QuotientSpace::new(Subspace::zero(f2(), 2));
        assert_eq!(q.project(&[1, 0]), vec![1, 0]);
        assert_eq!(q.project(&[0, 1]), vec![0, 1]);
        assert_eq!(q.lift(&[1, 1]), vec![1, 1]);
    }

    #[test]
    fn quotient_identifies_vectors_differing_by_relation() {
        let rel = Subspace::from_generators(f2(), 3, &[vec![1, 1, 0]]);
        let q = QuotientSpace::new(rel);
        assert_eq!(q.project(&[1, 0, 0]), q.project(&[0, 1, 0]));
    }

    #[test]
    fn project_lift_roundtrip() {
        let rel = Subspace::from_generators(f3(), 3, &[vec![1, 2, 0]]);
        let q = QuotientSpace::new(rel);
        for a in 0..3 {
            for b in 0..3 {
                let coords = vec![a, b];
                assert_eq!(q.project(&q.lift(&coords)), coords);
            }
        }
    }

    #[test]
    fn lattice_trivial_cases() {
        let a = Subspace::from_generators(f2(), 2, &[vec![1, 0]]);
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.sum(&a), a);

        let b = Subspace::from_generators(f2(), 2, &[vec![0, 1]]);
        assert_eq!(a.intersect(&b), Subspace::zero(f2(), 2));
        assert_eq!(a.sum(&b), Subspace::full(f2(), 2));
    }

    #[test]
    fn intersect_matches_membership_oracle() {
        let a = Subspace::from_generators(f2(), 3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let b = Subspace::from_generators(f2(), 3, &[vec![1, 1, 1]]);
        let cap = a.intersect(&b);
        assert_eq!(cap, Subspace::from_generators(f2(), 3, &[vec![1, 1, 1]]));
        // oracle: all eight vectors of F_2^3
        for code in 0..8u64 {
            let v = vec![code & 1, (code >> 1) & 1, (code >> 2) & 1];
            assert_eq!(cap.contains(&v), a.contains(&v) && b.contains(&v));
        }
        assert_eq!(
            a.sum(&b).dim() + cap.dim(),
            a.dim() + b.dim(),
            "modular law on dimensions"
        );
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let m = FpMatrix::from_rows(f2(), 2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.inverse(), None);
        let id = FpMatrix::identity(f3(), 3);
        assert_eq!(id.inverse(), Some(id));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = FpMatrix::from_rows(f3(), 2, &[vec![1, 2], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mat_mul(&inv), FpMatrix::identity(f3(), 2));
        assert_eq!(inv.mat_mul(&m), FpMatrix::identity(f3(), 2));
    }
}
