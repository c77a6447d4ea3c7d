//! Finite-dimensional commutative associative `F_p`-algebras presented by
//! structure constants on an explicit basis.
//!
//! Every construction here is linear algebra plus closure loops: ideals are
//! multiplicatively closed subspaces, quotients ride on [`QuotientSpace`],
//! the multiplier algebra is the solution space of a linear constraint
//! system, and morphism search is an exhaustive column-by-column enumeration
//! with partial-constraint pruning.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::linalg::{FpMatrix, Prime, QuotientSpace, Subspace};

/// Default cap on exhaustive morphism searches: 2^24 candidates.
pub const DEFAULT_MAX_SEARCH: u64 = 1 << 24;

/// An exhaustive search was refused because the candidate space exceeds the
/// configured budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search space of {required} candidates exceeds budget {budget}")]
pub struct SearchTooLarge {
    pub required: u128,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis products e{i}*e{j} and e{j}*e{i} disagree")]
    NotCommutative { i: usize, j: usize },
    #[error("(e{i}*e{j})*e{l} differs from e{i}*(e{j}*e{l})")]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("claimed unit does not fix basis element e{i}")]
    BadUnit { i: usize },
    #[error("map is not multiplicative on basis pair (e{i}, e{j})")]
    NotMultiplicative { i: usize, j: usize },
    #[error("subspace is not multiplicatively closed: e{i} * (basis row {row}) escapes")]
    NotIdeal { i: usize, row: usize },
    #[error("multiplier algebra needs Ann(R) = 0 or R^2 = R")]
    HypothesisViolated,
    #[error("multiplier composition is not commutative on basis pair ({a}, {b})")]
    NotCommutativeMultipliers { a: usize, b: usize },
    #[error(transparent)]
    Search(#[from] SearchTooLarge),
}

/// Commutative associative algebra over `F_p`, given by the products of its
/// basis vectors. The label is cosmetic and ignored by equality.
#[derive(Debug, Clone)]
pub struct Algebra {
    p: Prime,
    dim: usize,
    /// Flattened structure constants: entry `((i*dim)+j)*dim+k` is the
    /// `e_k`-coefficient of `e_i * e_j`.
    mul: Vec<u64>,
    unit: Option<Vec<u64>>,
    label: String,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.dim == other.dim
            && self.mul == other.mul
            && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validates structure constants and builds the algebra. Checks
    /// commutativity and associativity on all basis pairs/triples, which is
    /// enough by bilinearity, and the unit law if a unit is supplied.
    pub fn new(
        p: Prime,
        dim: usize,
        mul: Vec<u64>,
        unit: Option<Vec<u64>>,
        label: impl Into<String>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(mul.len(), dim * dim * dim, "structure constant shape");
        if let Some(u) = &unit {
            assert_eq!(u.len(), dim, "unit length");
        }
        let mul: Vec<u64> = mul.into_iter().map(|x| p.reduce(x)).collect();
        let unit = unit.map(|u| u.into_iter().map(|x| p.reduce(x)).collect::<Vec<_>>());
        let alg = Algebra {
            p,
            dim,
            mul,
            unit,
            label: label.into(),
        };
        for i in 0..dim {
            for j in i..dim {
                if alg.basis_product(i, j) != alg.basis_product(j, i) {
                    return Err(AlgebraError::NotCommutative { i, j });
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    // (e_i e_j) e_l vs e_i (e_j e_l), expanded bilinearly
                    let left = alg.mul_elems(alg.basis_product(i, j), &alg.basis_vec(l));
                    let right = alg.mul_elems(&alg.basis_vec(i), alg.basis_product(j, l));
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, l });
                    }
                }
            }
        }
        if let Some(u) = alg.unit.clone() {
            for i in 0..dim {
                if alg.mul_elems(&u, &alg.basis_vec(i)) != alg.basis_vec(i) {
                    return Err(AlgebraError::BadUnit { i });
                }
            }
        }
        Ok(alg)
    }

    /// The prime field itself as a one-dimensional unital algebra.
    pub fn field(p: Prime) -> Self {
        Algebra::new(p, 1, vec![1], Some(vec![1]), format!("F{}", p.get())).expect("field axioms")
    }

    /// Truncated polynomial algebra `F_p[x]/(x^n)` on the basis
    /// `1, x, ..., x^(n-1)`.
    pub fn truncated_poly(p: Prime, n: usize) -> Self {
        assert!(n >= 1);
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mul[(i * n + j) * n + (i + j)] = 1;
                }
            }
        }
        let mut unit = vec![0; n];
        unit[0] = 1;
        Algebra::new(p, n, mul, Some(unit), format!("F{}[x]/(x^{})", p.get(), n))
            .expect("truncation axioms")
    }

    /// Algebra with identically zero multiplication (a bare module). The
    /// zero-dimensional case counts as unital.
    pub fn zero_mult(p: Prime, dim: usize, label: impl Into<String>) -> Self {
        Algebra::new(p, dim, vec![0; dim * dim * dim], None, label)
            .expect("zero multiplication")
            .with_detected_unit()
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn unit(&self) -> Option<&[u64]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn structure_constants(&self) -> &[u64] {
        &self.mul
    }

    /// The vector `e_i * e_j` in basis coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let n = self.dim;
        &self.mul[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero_elem(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    /// Bilinear product of two coordinate vectors.
    pub fn mul_elems(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![0; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = self.p.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = self.p.add(*o, self.p.mul(c, self.basis_product(i, j)[k]));
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `x`, columns indexed by the basis.
    pub fn left_mul_matrix(&self, x: &[u64]) -> FpMatrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.mul_elems(x, &self.basis_vec(j)))
            .collect();
        FpMatrix::from_fn(self.p, self.dim, self.dim, |k, j| cols[j][k])
    }

    /// Attaches a unit found by [`Self::detect_unit`], when one exists.
    pub fn with_detected_unit(mut self) -> Self {
        if self.unit.is_none() {
            self.unit = self.detect_unit();
            if let Some(u) = &self.unit {
                debug_assert!((0..self.dim)
                    .all(|i| self.mul_elems(u, &self.basis_vec(i)) == self.basis_vec(i)));
            }
        }
        self
    }

    /// Solves the unit equations `u * e_i = e_i`; `None` when no unit exists.
    pub fn detect_unit(&self) -> Option<Vec<u64>> {
        let n = self.dim;
        // rows (a, k): sum_j c[j][a][k] u_j = delta(a == k)
        let m = FpMatrix::from_fn(self.p, n * n, n, |row, j| {
            let (a, k) = (row / n, row % n);
            self.basis_product(j, a)[k]
        });
        let rhs: Vec<u64> = (0..n * n)
            .map(|row| u64::from(row / n == row % n))
            .collect();
        m.solve(&rhs)
    }

    /// Direct product with componentwise multiplication.
    pub fn product(a: &Algebra, b: &Algebra) -> AlgebraProduct {
        assert_eq!(a.p, b.p, "modulus mismatch");
        let p = a.p;
        let (na, nb) = (a.dim, b.dim);
        let n = na + nb;
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let dst = &mut mul[(i * n + j) * n..(i * n + j + 1) * n];
                if i < na && j < na {
                    dst[..na].copy_from_slice(a.basis_product(i, j));
                } else if i >= na && j >= na {
                    dst[na..].copy_from_slice(b.basis_product(i - na, j - na));
                }
            }
        }
        let unit = match (&a.unit, &b.unit) {
            (Some(ua), Some(ub)) => {
                let mut u = ua.clone();
                u.extend_from_slice(ub);
                Some(u)
            }
            _ => None,
        };
        let algebra = Algebra::new(p, n, mul, unit, format!("{} x {}", a.label, b.label))
            .expect("componentwise axioms");
        let inj_left = AlgebraMorphism::new(
            a.clone(),
            algebra.clone(),
            FpMatrix::from_fn(p, n, na, |i, j| u64::from(i == j)),
        )
        .expect("left injection");
        let inj_right = AlgebraMorphism::new(
            b.clone(),
            algebra.clone(),
            FpMatrix::from_fn(p, n, nb, |i, j| u64::from(i == j + na)),
        )
        .expect("right injection");
        let proj_left = AlgebraMorphism::new(
            algebra.clone(),
            a.clone(),
            FpMatrix::from_fn(p, na, n, |i, j| u64::from(i == j)),
        )
        .expect("left projection");
        let proj_right = AlgebraMorphism::new(
            algebra.clone(),
            b.clone(),
            FpMatrix::from_fn(p, nb, n, |i, j| u64::from(i + na == j)),
        )
        .expect("right projection");
        AlgebraProduct {
            algebra,
            inj_left,
            inj_right,
            proj_left,
            proj_right,
        }
    }

    /// Quotient by an ideal, with the projection morphism and the underlying
    /// quotient space. The kernel of the projection is exactly the ideal.
    pub fn quotient(&self, ideal: &Ideal) -> Result<AlgebraQuotient, AlgebraError> {
        assert_eq!(ideal.parent(), self, "ideal of a different algebra");
        let space = QuotientSpace::new(ideal.space().clone());
        let qdim = space.dim();
        let mut mul = vec![0; qdim * qdim * qdim];
        for a in 0..qdim {
            for b in 0..qdim {
                let ea = space.lift(&unit_vec(qdim, a));
                let eb = space.lift(&unit_vec(qdim, b));
                let prod = space.project(&self.mul_elems(&ea, &eb));
                mul[(a * qdim + b) * qdim..(a * qdim + b + 1) * qdim].copy_from_slice(&prod);
            }
        }
        let unit = self.unit.as_ref().map(|u| space.project(u));
        let algebra = Algebra::new(
            self.p,
            qdim,
            mul,
            unit,
            format!("{} / (dim {})", self.label, ideal.dim()),
        )?;
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| space.project(&self.basis_vec(j)))
            .collect();
        let projection = AlgebraMorphism::new(
            self.clone(),
            algebra.clone(),
            FpMatrix::from_fn(self.p, qdim, self.dim, |i, j| cols[j][i]),
        )?;
        Ok(AlgebraQuotient {
            algebra,
            projection,
            space,
        })
    }

    /// The annihilator `{x : x * e_i = 0 for all i}`, as an ideal.
    pub fn annihilator(&self) -> Ideal {
        let n = self.dim;
        // stack the right-multiplication-by-e_i matrices and take the kernel
        let m = FpMatrix::from_fn(self.p, n * n, n, |row, j| {
            let (i, k) = (row / n, row % n);
            self.basis_product(j, i)[k]
        });
        Ideal::new(self.clone(), m.kernel()).expect("annihilator is an ideal")
    }

    /// Element-level cross-check of commutativity and associativity, run
    /// only when the algebra has at most `max_elements` elements. Returns
    /// the number of (pair, triple) checks performed, zero when skipped.
    /// Basis-level validation already implies this by bilinearity.
    pub fn exhaustive_bilinearity_check(
        &self,
        max_elements: u64,
    ) -> Result<(u64, u64), AlgebraError> {
        let count = (self.p.get() as u128).pow(self.dim as u32);
        if count > max_elements as u128 {
            return Ok((0, 0));
        }
        let elements = crate::linalg::enumerate_vectors(self.p, self.dim);
        let mut pairs = 0;
        for x in &elements {
            for y in &elements {
                if self.mul_elems(x, y) != self.mul_elems(y, x) {
                    return Err(AlgebraError::NotCommutative { i: 0, j: 0 });
                }
                pairs += 1;
            }
        }
        let mut triples = 0;
        for x in &elements {
            for y in &elements {
                let xy = self.mul_elems(x, y);
                for z in &elements {
                    if self.mul_elems(&xy, z) != self.mul_elems(x, &self.mul_elems(y, z)) {
                        return Err(AlgebraError::NotAssociative { i: 0, j: 0, l: 0 });
                    }
                    triples += 1;
                }
            }
        }
        Ok((pairs, triples))
    }

    /// The ideal spanned by all products of basis elements.
    pub fn square_ideal(&self) -> Ideal {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                gens.push(self.basis_product(i, j).to_vec());
            }
        }
        let space = Subspace::from_generators(self.p, self.dim, &gens);
        Ideal::new(self.clone(), space).expect("square is an ideal")
    }
}

fn unit_vec(len: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Quotient algebra bundle: the algebra, the projection morphism, and the
/// coordinate machinery for lifting classes back to the parent.
#[derive(Debug, Clone)]
pub struct AlgebraQuotient {
    pub algebra: Algebra,
    pub projection: AlgebraMorphism,
    pub space: QuotientSpace,
}

#[derive(Debug, Clone)]
pub struct AlgebraProduct {
    pub algebra: Algebra,
    pub inj_left: AlgebraMorphism,
    pub inj_right: AlgebraMorphism,
    pub proj_left: AlgebraMorphism,
    pub proj_right: AlgebraMorphism,
}

/// Linear map between algebras that respects multiplication on every basis
/// pair (which suffices, by bilinearity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Algebra,
    target: Algebra,
    matrix: FpMatrix,
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, matrix: FpMatrix) -> Result<Self, AlgebraError> {
        assert_eq!(matrix.rows(), target.dim(), "matrix rows");
        assert_eq!(matrix.cols(), source.dim(), "matrix cols");
        assert_eq!(source.p(), target.p(), "modulus mismatch");
        let m = AlgebraMorphism {
            source,
            target,
            matrix,
        };
        for i in 0..m.source.dim() {
            for j in i..m.source.dim() {
                let lhs = m.apply(m.source.basis_product(i, j));
                let rhs = m.target.mul_elems(&m.matrix.col(i), &m.matrix.col(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotMultiplicative { i, j });
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Algebra, target: Algebra, matrix: FpMatrix) -> Self {
        debug_assert!(Self::new(source.clone(), target.clone(), matrix.clone()).is_ok());
        AlgebraMorphism {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(alg: &Algebra) -> Self {
        AlgebraMorphism {
            source: alg.clone(),
            target: alg.clone(),
            matrix: FpMatrix::identity(alg.p(), alg.dim()),
        }
    }

    pub fn zero(source: &Algebra, target: &Algebra) -> Self {
        AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: FpMatrix::zeros(source.p(), target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.matrix.apply(v)
    }

    /// `other` after `self`.
    pub fn then(&self, other: &AlgebraMorphism) -> AlgebraMorphism {
        assert_eq!(&self.target, &other.source, "composition mismatch");
        AlgebraMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mat_mul(&self.matrix),
        }
    }

    /// Kernel of the underlying map, returned as an ideal of the source.
    pub fn kernel_ideal(&self) -> Ideal {
        Ideal::new(self.source.clone(), self.matrix.kernel()).expect("morphism kernel is an ideal")
    }

    /// Image of the underlying map, as a subspace of the target. Whether it
    /// is an ideal depends on the map; crossed-module boundaries assert that
    /// separately.
    pub fn image_space(&self) -> Subspace {
        Subspace::from_matrix(&self.matrix.transpose())
    }

    pub fn is_surjective(&self) -> bool {
        self.image_space().dim() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.kernel().dim() == 0
    }

    pub fn inverse(&self) -> Option<AlgebraMorphism> {
        let inv = self.matrix.inverse()?;
        Some(AlgebraMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: inv,
        })
    }
}

/// Multiplicatively closed subspace of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    parent: Algebra,
    space: Subspace,
}

impl Ideal {
    /// Wraps a subspace after verifying closure under multiplication by
    /// every basis element.
    pub fn new(parent: Algebra, space: Subspace) -> Result<Self, AlgebraError> {
        assert_eq!(space.ambient_dim(), parent.dim(), "ambient mismatch");
        for row in 0..space.dim() {
            for i in 0..parent.dim() {
                let prod = parent.mul_elems(&parent.basis_vec(i), space.basis().row(row));
                if !space.contains(&prod) {
                    return Err(AlgebraError::NotIdeal { i, row });
                }
            }
        }
        Ok(Ideal { parent, space })
    }

    /// Smallest ideal containing the generators: alternate spanning and
    /// multiplying by basis elements until the dimension stabilizes.
    pub fn closure(parent: &Algebra, generators: &[Vec<u64>]) -> Ideal {
        let mut gens: Vec<Vec<u64>> = generators.to_vec();
        let mut space = Subspace::from_generators(parent.p(), parent.dim(), &gens);
        loop {
            let before = space.dim();
            let mut new_gens = Vec::new();
            for row in 0..space.dim() {
                for i in 0..parent.dim() {
                    let prod = parent.mul_elems(&parent.basis_vec(i), space.basis().row(row));
                    if !space.contains(&prod) {
                        new_gens.push(prod);
                    }
                }
            }
            if new_gens.is_empty() {
                break;
            }
            gens.extend(new_gens);
            space = Subspace::from_generators(parent.p(), parent.dim(), &gens);
            debug_assert!(space.dim() > before);
        }
        Ideal {
            parent: parent.clone(),
            space,
        }
    }

    pub fn zero(parent: &Algebra) -> Ideal {
        Ideal {
            parent: parent.clone(),
            space: Subspace::zero(parent.p(), parent.dim()),
        }
    }

    pub fn whole(parent: &Algebra) -> Ideal {
        Ideal {
            parent: parent.clone(),
            space: Subspace::full(parent.p(), parent.dim()),
        }
    }

    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.space.contains(v)
    }

    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        self.space.is_contained_in(&other.space)
    }

    /// The ideal as a standalone algebra on its canonical basis, with the
    /// inclusion morphism back into the parent. A unit is attached when one
    /// exists inside the ideal.
    pub fn as_algebra(&self) -> (Algebra, AlgebraMorphism) {
        let p = self.parent.p();
        let k = self.dim();
        let mut mul = vec![0; k * k * k];
        for a in 0..k {
            for b in 0..k {
                let prod = self
                    .parent
                    .mul_elems(self.space.basis().row(a), self.space.basis().row(b));
                let coords = self
                    .space
                    .coordinates(&prod)
                    .expect("ideal closed under products");
                mul[(a * k + b) * k..(a * k + b + 1) * k].copy_from_slice(&coords);
            }
        }
        let alg = Algebra::new(
            p,
            k,
            mul,
            None,
            format!("ideal(dim {}) of {}", k, self.parent.label()),
        )
        .expect("restricted constants stay commutative and associative")
        .with_detected_unit();
        let cols = self.space.basis();
        let inclusion = AlgebraMorphism::new(
            alg.clone(),
            self.parent.clone(),
            FpMatrix::from_fn(p, self.parent.dim(), k, |i, j| cols.get(j, i)),
        )
        .expect("inclusion is multiplicative");
        (alg, inclusion)
    }
}

/// Multiplier algebra `M(R)` together with the canonical morphism
/// `mu: R -> M(R)` and the solution-space basis as concrete matrices.
#[derive(Debug, Clone)]
pub struct MultiplierAlgebra {
    pub algebra: Algebra,
    pub mu: AlgebraMorphism,
    pub basis: Vec<FpMatrix>,
}

/// Computes `M(R)`: all linear self-maps `d` with `d(ab) = d(a)b`, under
/// composition. Requires the classical hypothesis `Ann(R) = 0` or
/// `R^2 = R`, which also makes composition commutative.
pub fn multiplier_algebra(r: &Algebra) -> Result<MultiplierAlgebra, AlgebraError> {
    let n = r.dim();
    let p = r.p();
    let ann_zero = r.annihilator().dim() == 0;
    let square_full = r.square_ideal().dim() == n;
    if !ann_zero && !square_full {
        return Err(AlgebraError::HypothesisViolated);
    }
    // Unknowns: the n x n matrix D, flattened row-major. For every (i, j, k):
    //   sum_l c[i][j]_l D[k][l]  =  sum_m c[m][j]_k D[m][i]
    let system = FpMatrix::from_fn(p, n * n * n, n * n, |row, unk| {
        let k = row % n;
        let j = (row / n) % n;
        let i = row / (n * n);
        let (dr, dc) = (unk / n, unk % n);
        let mut coeff = 0;
        if dr == k {
            coeff = r.basis_product(i, j)[dc];
        }
        if dc == i {
            coeff = p.sub(coeff, r.basis_product(dr, j)[k]);
        }
        coeff
    });
    let solutions = system.kernel();
    let m = solutions.dim();
    let basis: Vec<FpMatrix> = (0..m)
        .map(|a| {
            let flat = solutions.basis().row(a);
            FpMatrix::from_fn(p, n, n, |i, j| flat[i * n + j])
        })
        .collect();
    let coords_of = |mat: &FpMatrix| -> Vec<u64> {
        solutions
            .coordinates(mat.entries())
            .expect("composite of multipliers is a multiplier")
    };
    let mut mul = vec![0; m * m * m];
    for a in 0..m {
        for b in 0..m {
            let comp = basis[a].mat_mul(&basis[b]);
            let coords = coords_of(&comp);
            mul[(a * m + b) * m..(a * m + b + 1) * m].copy_from_slice(&coords);
        }
    }
    for a in 0..m {
        for b in a..m {
            if mul[(a * m + b) * m..(a * m + b + 1) * m]
                != mul[(b * m + a) * m..(b * m + a + 1) * m]
            {
                return Err(AlgebraError::NotCommutativeMultipliers { a, b });
            }
        }
    }
    let unit = coords_of(&FpMatrix::identity(p, n));
    let algebra = Algebra::new(p, m, mul, Some(unit), format!("M({})", r.label()))?;
    let mu_cols: Vec<Vec<u64>> = (0..n)
        .map(|i| coords_of(&r.left_mul_matrix(&r.basis_vec(i))))
        .collect();
    let mu = AlgebraMorphism::new(
        r.clone(),
        algebra.clone(),
        FpMatrix::from_fn(p, m, n, |row, i| mu_cols[i][row]),
    )?;
    Ok(MultiplierAlgebra { algebra, mu, basis })
}

/// Point constraint for morphism search: the image of `element` must be
/// `image`.
pub type PointConstraint = (Vec<u64>, Vec<u64>);

/// All algebra morphisms `source -> target` satisfying the point
/// constraints, in lexicographic order of their flattened matrices.
///
/// The nominal search space is `p^(source.dim * target.dim)`; the search is
/// refused outright when that exceeds the budget. Inside the budget, columns
/// are assigned left to right and every multiplicativity or point constraint
/// is checked as soon as all the columns it mentions are fixed.
pub fn enumerate_morphisms(
    source: &Algebra,
    target: &Algebra,
    constraints: &[PointConstraint],
    budget: u64,
) -> Result<Vec<AlgebraMorphism>, AlgebraError> {
    assert_eq!(source.p(), target.p(), "modulus mismatch");
    let p = source.p();
    let (ns, nt) = (source.dim(), target.dim());
    let required = (p.get() as u128)
        .checked_pow((ns * nt) as u32)
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(SearchTooLarge { required, budget }.into());
    }
    for (v, w) in constraints {
        assert_eq!(v.len(), ns, "constraint element length");
        assert_eq!(w.len(), nt, "constraint image length");
    }
    // constraints whose support is empty must demand the zero image
    for (v, w) in constraints {
        if v.iter().all(|&x| x == 0) && w.iter().any(|&x| x != 0) {
            return Ok(Vec::new());
        }
    }

    let max_support = |v: &[u64]| v.iter().rposition(|&x| x != 0);
    let mut results: Vec<FpMatrix> = Vec::new();
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(ns);

    fn check_partial(
        source: &Algebra,
        target: &Algebra,
        cols: &[Vec<u64>],
        constraints: &[PointConstraint],
        max_support: &impl Fn(&[u64]) -> Option<usize>,
    ) -> bool {
        let j = cols.len() - 1;
        let p = source.p();
        for a in 0..=j {
            for b in a..=j {
                let prod = source.basis_product(a, b);
                let deciding = max_support(prod).map_or(a.max(b), |s| s.max(a).max(b));
                if deciding != j {
                    continue;
                }
                let mut lhs = vec![0; target.dim()];
                for (k, &c) in prod.iter().enumerate() {
                    if c != 0 {
                        for (t, l) in lhs.iter_mut().enumerate() {
                            *l = p.add(*l, p.mul(c, cols[k][t]));
                        }
                    }
                }
                if lhs != target.mul_elems(&cols[a], &cols[b]) {
                    return false;
                }
            }
        }
        for (v, w) in constraints {
            if max_support(v) != Some(j) {
                continue;
            }
            let mut img = vec![0; target.dim()];
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    for (t, o) in img.iter_mut().enumerate() {
                        *o = p.add(*o, p.mul(c, cols[k][t]));
                    }
                }
            }
            if &img != w {
                return false;
            }
        }
        true
    }

    fn descend(
        source: &Algebra,
        target: &Algebra,
        constraints: &[PointConstraint],
        cols: &mut Vec<Vec<u64>>,
        results: &mut Vec<FpMatrix>,
        max_support: &impl Fn(&[u64]) -> Option<usize>,
    ) {
        let ns = source.dim();
        let nt = target.dim();
        if cols.len() == ns {
            let m = FpMatrix::from_fn(source.p(), nt, ns, |i, j| cols[j][i]);
            results.push(m);
            return;
        }
        let p = source.p().get();
        let mut value = vec![0u64; nt];
        loop {
            cols.push(value.clone());
            if check_partial(source, target, cols, constraints, max_support) {
                descend(source, target, constraints, cols, results, max_support);
            }
            cols.pop();
            // lexicographic counter over the column entries
            let mut idx = nt;
            loop {
                if idx == 0 {
                    return;
                }
                idx -= 1;
                value[idx] += 1;
                if value[idx] < p {
                    break;
                }
                value[idx] = 0;
            }
        }
    }

    if ns == 0 {
        // the empty matrix is the unique candidate
        results.push(FpMatrix::zeros(p, nt, 0));
    } else if nt == 0 {
        let m = FpMatrix::zeros(p, 0, ns);
        // all constraints have zero-dimensional images, already handled
        results.push(m);
    } else {
        descend(
            source,
            target,
            constraints,
            &mut cols,
            &mut results,
            &max_support,
        );
    }

    let mut morphisms: Vec<AlgebraMorphism> = results
        .into_iter()
        .map(|m| AlgebraMorphism::new_unchecked(source.clone(), target.clone(), m))
        .collect();
    morphisms.sort_by(|a, b| a.matrix().entries().cmp(b.matrix().entries()));
    Ok(morphisms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn t3() -> Algebra {
        Algebra::truncated_poly(f2(), 3)
    }

    /// The maximal ideal of T3 as a standalone non-unital algebra:
    /// basis {x, x^2} with x*x = x^2 and everything else zero.
    fn nilpotent2() -> Algebra {
        let mut mul = vec![0; 8];
        mul[1] = 1; // e0*e0 = e1
        Algebra::new(f2(), 2, mul, None, "N").unwrap()
    }

    #[test]
    fn field_is_valid() {
        let f = Algebra::field(f2());
        assert_eq!(f.dim(), 1);
        assert!(f.is_unital());
        assert_eq!(f.mul_elems(&[1], &[1]), vec![1]);
    }

    #[test]
    fn truncated_poly_matches_hand_expansion() {
        let a = t3();
        // oracle: products of monomials mod x^3, expanded by hand
        assert_eq!(a.mul_elems(&a.basis_vec(0), &a.basis_vec(1)), vec![0, 1, 0]);
        assert_eq!(a.mul_elems(&a.basis_vec(1), &a.basis_vec(1)), vec![0, 0, 1]);
        assert_eq!(a.mul_elems(&a.basis_vec(1), &a.basis_vec(2)), vec![0, 0, 0]);
        assert_eq!(a.mul_elems(&a.basis_vec(2), &a.basis_vec(2)), vec![0, 0, 0]);
        // (1 + x)^2 = 1 + 2x + x^2 = 1 + x^2 over F_2
        assert_eq!(a.mul_elems(&[1, 1, 0], &[1, 1, 0]), vec![1, 0, 1]);
    }

    /// Structure constants from the grid of basis products.
    fn constants(products: &[&[u64]]) -> Vec<u64> {
        products
            .iter()
            .flat_map(|row| row.iter().copied())
            .collect()
    }

    #[test]
    fn noncommutative_constants_are_rejected() {
        // e0*e1 = e0 but e1*e0 = 0
        let mul = constants(&[&[0, 0], &[1, 0], &[0, 0], &[0, 0]]);
        assert_eq!(
            Algebra::new(f2(), 2, mul, None, "bad"),
            Err(AlgebraError::NotCommutative { i: 0, j: 1 })
        );
    }

    #[test]
    fn nonassociative_constants_are_rejected() {
        // commutative but not associative: e0*e0 = e1, e0*e1 = e1*e0 = e0
        let mul = constants(&[&[0, 1], &[1, 0], &[1, 0], &[0, 0]]);
        let err = Algebra::new(f2(), 2, mul, None, "bad").unwrap_err();
        assert!(matches!(err, AlgebraError::NotAssociative { .. }));
    }

    #[test]
    fn bad_unit_is_rejected() {
        let mut mul = vec![0; 8];
        mul[1] = 1;
        let err = Algebra::new(f2(), 2, mul, Some(vec![1, 0]), "bad").unwrap_err();
        assert!(matches!(err, AlgebraError::BadUnit { .. }));
    }

    #[test]
    fn ideal_closure_of_x_in_t3() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 1, 0]]);
        assert_eq!(i.dim(), 2);
        assert!(i.contains(&[0, 1, 0]));
        assert!(i.contains(&[0, 0, 1]));
        assert!(!i.contains(&[1, 0, 0]));
    }

    #[test]
    fn ideal_closure_trivial_cases() {
        let a = t3();
        assert_eq!(Ideal::closure(&a, &[]).dim(), 0);
        assert_eq!(Ideal::closure(&a, &[vec![1, 0, 0]]).dim(), 3);
    }

    #[test]
    fn ideal_closure_is_minimal() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 1, 0]]);
        // dropping any basis row breaks closure or generator membership
        for drop in 0..i.dim() {
            let rows: Vec<Vec<u64>> = (0..i.dim())
                .filter(|&r| r != drop)
                .map(|r| i.space().basis().row(r).to_vec())
                .collect();
            let smaller = Subspace::from_generators(f2(), 3, &rows);
            let still_ideal = Ideal::new(a.clone(), smaller.clone()).is_ok();
            let has_generator = smaller.contains(&[0, 1, 0]);
            assert!(!(still_ideal && has_generator));
        }
    }

    #[test]
    fn quotient_t3_by_x_is_the_field() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 1, 0]]);
        let q = a.quotient(&i).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(q.algebra.is_unital());
        assert_eq!(q.projection.apply(&[1, 0, 0]), vec![1]);
        assert_eq!(q.projection.apply(&[0, 1, 0]), vec![0]);
        assert_eq!(q.projection.kernel_ideal(), i);
    }

    #[test]
    fn quotient_by_zero_is_identity_like() {
        let a = t3();
        let q = a.quotient(&Ideal::zero(&a)).unwrap();
        assert_eq!(q.algebra.dim(), 3);
        assert_eq!(q.projection.matrix(), &FpMatrix::identity(f2(), 3));
    }

    #[test]
    fn quotient_t3_by_x2() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 0, 1]]);
        let q = a.quotient(&i).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        // residue of x squares to zero
        let xbar = q.projection.apply(&[0, 1, 0]);
        assert_eq!(q.algebra.mul_elems(&xbar, &xbar), vec![0, 0]);
    }

    #[test]
    fn product_algebra_componentwise() {
        let f = Algebra::field(f2());
        let prod = Algebra::product(&f, &f);
        assert_eq!(prod.algebra.dim(), 2);
        assert_eq!(prod.algebra.mul_elems(&[1, 0], &[0, 1]), vec![0, 0]);
        assert_eq!(prod.algebra.unit(), Some(&[1, 1][..]));

        let with_zero = Algebra::product(&t3(), &Algebra::zero_mult(f2(), 0, "0"));
        assert_eq!(with_zero.algebra.dim(), 3);
        assert!(with_zero.algebra.is_unital());

        let t3f2 = Algebra::product(&t3(), &f);
        assert_eq!(t3f2.algebra.unit(), Some(&[1, 0, 0, 1][..]));
    }

    #[test]
    fn kernel_and_image_of_projection() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 1, 0]]);
        let q = a.quotient(&i).unwrap();
        assert_eq!(q.projection.kernel_ideal().dim(), 2);
        assert!(q.projection.is_surjective());

        let id = AlgebraMorphism::identity(&a);
        assert_eq!(id.kernel_ideal().dim(), 0);
        assert_eq!(id.image_space().dim(), 3);

        let z = AlgebraMorphism::zero(&a, &a);
        assert_eq!(z.kernel_ideal().dim(), 3);
        assert_eq!(z.image_space().dim(), 0);
    }

    #[test]
    fn annihilator_cases() {
        assert_eq!(t3().annihilator().dim(), 0);
        let n = nilpotent2();
        let ann = n.annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&[0, 1]));
        let z = Algebra::zero_mult(f2(), 2, "Z");
        assert_eq!(z.annihilator().dim(), 2);
    }

    #[test]
    fn multiplier_of_field() {
        let f = Algebra::field(f2());
        let m = multiplier_algebra(&f).unwrap();
        assert_eq!(m.algebra.dim(), 1);
        assert!(m.mu.is_injective() && m.mu.is_surjective());
    }

    #[test]
    fn multiplier_of_unital_algebra_is_the_algebra() {
        // d(r) = d(1*r) = d(1)r pins every multiplier to left multiplication
        let a = t3();
        let m = multiplier_algebra(&a).unwrap();
        assert_eq!(m.algebra.dim(), 3);
        assert!(m.mu.is_injective() && m.mu.is_surjective());
        // mu is an isomorphism onto M(R); its inverse is multiplicative too
        let inv = m.mu.inverse().unwrap();
        assert!(AlgebraMorphism::new(m.algebra.clone(), a.clone(), inv.matrix().clone()).is_ok());
    }

    #[test]
    fn multiplier_hypothesis_violation() {
        let n = nilpotent2();
        assert!(n.annihilator().dim() > 0);
        assert!(n.square_ideal().dim() < n.dim());
        assert!(matches!(
            multiplier_algebra(&n),
            Err(AlgebraError::HypothesisViolated)
        ));
    }

    #[test]
    fn enumerate_endomorphisms_of_field() {
        let f = Algebra::field(f2());
        let all = enumerate_morphisms(&f, &f, &[], DEFAULT_MAX_SEARCH).unwrap();
        // exactly the zero map and the identity
        assert_eq!(all.len(), 2);
        assert!(all[0].matrix().is_zero());
        assert_eq!(all[1].matrix(), &FpMatrix::identity(f2(), 1));
    }

    #[test]
    fn enumerate_with_pinned_generator_contains_identity() {
        let a = t3();
        let constraints = vec![
            (vec![1, 0, 0], vec![1, 0, 0]),
            (vec![0, 1, 0], vec![0, 1, 0]),
        ];
        let all = enumerate_morphisms(&a, &a, &constraints, DEFAULT_MAX_SEARCH).unwrap();
        assert!(all
            .iter()
            .any(|m| m.matrix() == &FpMatrix::identity(f2(), 3)));
        // pinning 1 and x forces x^2 = x*x, so the identity is the only one
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn enumerate_budget_is_enforced() {
        let big = Algebra::zero_mult(f2(), 6, "big");
        let err = enumerate_morphisms(&big, &big, &[], DEFAULT_MAX_SEARCH).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::Search(SearchTooLarge {
                required: 1 << 36,
                budget: DEFAULT_MAX_SEARCH
            })
        );
    }

    #[test]
    fn enumerate_matches_brute_force_on_small_case() {
        // brute force over all 2^4 matrices F_2^2 -> F_2^2 for N
        let n = nilpotent2();
        let fast = enumerate_morphisms(&n, &n, &[], DEFAULT_MAX_SEARCH).unwrap();
        let mut slow = Vec::new();
        for code in 0..16u64 {
            let m = FpMatrix::from_fn(f2(), 2, 2, |i, j| (code >> (i * 2 + j)) & 1);
            if let Ok(mor) = AlgebraMorphism::new(n.clone(), n.clone(), m) {
                slow.push(mor);
            }
        }
        assert_eq!(fast.len(), slow.len());
        for m in &fast {
            assert!(slow.iter().any(|s| s.matrix() == m.matrix()));
        }
    }

    #[test]
    fn bilinearity_cross_check_on_small_algebras() {
        let (pairs, triples) = t3().exhaustive_bilinearity_check(512).unwrap();
        assert_eq!(pairs, 64);
        assert_eq!(triples, 512);
        // skipped above the element budget
        let big = Algebra::truncated_poly(Prime::new(5).unwrap(), 4);
        assert_eq!(big.exhaustive_bilinearity_check(512).unwrap(), (0, 0));
    }

    #[test]
    fn ideal_as_algebra_restricts_constants() {
        let a = t3();
        let i = Ideal::closure(&a, &[vec![0, 1, 0]]);
        let (sub, incl) = i.as_algebra();
        assert_eq!(sub.dim(), 2);
        // x * x = x^2 in the restricted basis
        assert_eq!(sub.mul_elems(&[1, 0], &[1, 0]), vec![0, 1]);
        assert_eq!(incl.apply(&[1, 0]), vec![0, 1, 0]);
        assert_eq!(incl.apply(&[0, 1]), vec![0, 0, 1]);
        assert!(!sub.is_unital());

        // the whole algebra as an ideal keeps its unit
        let (whole, _) = Ideal::whole(&a).as_algebra();
        assert!(whole.is_unital());
    }
}
