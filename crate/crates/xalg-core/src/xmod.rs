//! Crossed modules of commutative algebras: a base algebra acting on a top
//! algebra, with an equivariant boundary morphism satisfying the Peiffer
//! identity `boundary(c) . c' = c c'`.
//!
//! Validation is exhaustive over basis tuples, which settles the general
//! case by bilinearity; failures carry the witnessing basis indices so that
//! hand-entered tables can be debugged.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::algebra::{
    enumerate_morphisms, multiplier_algebra, Algebra, AlgebraError, AlgebraMorphism,
    AlgebraQuotient, Ideal, SearchTooLarge,
};
use crate::linalg::{enumerate_vectors, FpMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XModError {
    #[error("action is not associative over the base on (e{i}, e{j}, c{p})")]
    ActionNotAssociative { i: usize, j: usize, p: usize },
    #[error("action does not distribute over top multiplication on (e{i}, c{p}, c{q})")]
    ActionNotMultiplicative { i: usize, p: usize, q: usize },
    #[error("boundary is not equivariant on (e{i}, c{p})")]
    NotEquivariant { i: usize, p: usize },
    #[error("Peiffer identity fails on (c{p}, c{q})")]
    PeifferFails { p: usize, q: usize },
    #[error("square of morphisms does not commute")]
    SquareDoesNotCommute,
    #[error("morphism does not preserve the action on (e{i}, c{p})")]
    ActionNotPreserved { i: usize, p: usize },
    #[error("boundary image fails trivial action on kernel at (c{p}, kernel row {row})")]
    KernelActionNotTrivial { p: usize, row: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Search(#[from] SearchTooLarge),
}

/// Bilinear action of a base algebra on a top algebra, stored as the images
/// of basis pairs. Validated for associativity over the base and
/// compatibility with the top multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraAction {
    base: Algebra,
    top: Algebra,
    /// Flattened: entry `((i*topdim)+p)*topdim+k` is the `c_k`-coefficient
    /// of `e_i . c_p`.
    table: Vec<u64>,
    unital: bool,
}

impl AlgebraAction {
    pub fn new(base: Algebra, top: Algebra, table: Vec<u64>) -> Result<Self, XModError> {
        assert_eq!(base.p(), top.p(), "modulus mismatch");
        let (nb, nt) = (base.dim(), top.dim());
        assert_eq!(table.len(), nb * nt * nt, "action table shape");
        let p = base.p();
        let table: Vec<u64> = table.into_iter().map(|x| p.reduce(x)).collect();
        let mut action = AlgebraAction {
            base,
            top,
            table,
            unital: false,
        };
        for i in 0..nb {
            for j in 0..nb {
                for pp in 0..nt {
                    // (e_i e_j) . c_p  vs  e_i . (e_j . c_p)
                    let left =
                        action.act(action.base.basis_product(i, j), &action.top.basis_vec(pp));
                    let right = action.act(&action.base.basis_vec(i), action.act_basis(j, pp));
                    if left != right {
                        return Err(XModError::ActionNotAssociative { i, j, p: pp });
                    }
                }
            }
        }
        for i in 0..nb {
            for pp in 0..nt {
                for q in 0..nt {
                    // e_i . (c_p c_q)  vs  (e_i . c_p) c_q
                    let left =
                        action.act(&action.base.basis_vec(i), action.top.basis_product(pp, q));
                    let right = action
                        .top
                        .mul_elems(action.act_basis(i, pp), &action.top.basis_vec(q));
                    if left != right {
                        return Err(XModError::ActionNotMultiplicative { i, p: pp, q });
                    }
                }
            }
        }
        // a unital action is recorded, not required
        if let Some(u) = action.base.unit().map(<[u64]>::to_vec) {
            action.unital = (0..nt)
                .all(|pp| action.act(&u, &action.top.basis_vec(pp)) == action.top.basis_vec(pp));
        }
        Ok(action)
    }

    /// A base algebra acting on itself by multiplication.
    pub fn multiplication(base: &Algebra) -> Self {
        let n = base.dim();
        let mut table = vec![0; n * n * n];
        for i in 0..n {
            for pp in 0..n {
                table[(i * n + pp) * n..(i * n + pp + 1) * n]
                    .copy_from_slice(base.basis_product(i, pp));
            }
        }
        AlgebraAction::new(base.clone(), base.clone(), table).expect("multiplication action")
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn top(&self) -> &Algebra {
        &self.top
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// Whether the base unit (when present) acts as the identity.
    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// The vector `e_i . c_p`.
    pub fn act_basis(&self, i: usize, p: usize) -> &[u64] {
        let nt = self.top.dim();
        &self.table[(i * nt + p) * nt..(i * nt + p + 1) * nt]
    }

    /// Bilinear extension of the basis table.
    pub fn act(&self, r: &[u64], c: &[u64]) -> Vec<u64> {
        assert_eq!(r.len(), self.base.dim());
        assert_eq!(c.len(), self.top.dim());
        let p = self.base.p();
        let mut out = vec![0; self.top.dim()];
        for (i, &ri) in r.iter().enumerate() {
            if ri == 0 {
                continue;
            }
            for (pp, &cp) in c.iter().enumerate() {
                if cp == 0 {
                    continue;
                }
                let coeff = p.mul(ri, cp);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = p.add(*o, p.mul(coeff, self.act_basis(i, pp)[k]));
                }
            }
        }
        out
    }
}

/// A validated crossed module: top and base algebras, an action, and an
/// equivariant boundary satisfying the Peiffer identity. The label is
/// cosmetic and ignored by equality.
#[derive(Debug, Clone)]
pub struct CrossedModule {
    label: String,
    boundary: AlgebraMorphism,
    action: AlgebraAction,
}

impl PartialEq for CrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.boundary == other.boundary && self.action == other.action
    }
}

impl Eq for CrossedModule {}

impl CrossedModule {
    pub fn new(
        label: impl Into<String>,
        boundary: AlgebraMorphism,
        action: AlgebraAction,
    ) -> Result<Self, XModError> {
        assert_eq!(boundary.source(), action.top(), "top mismatch");
        assert_eq!(boundary.target(), action.base(), "base mismatch");
        let xm = CrossedModule {
            label: label.into(),
            boundary,
            action,
        };
        let (nb, nt) = (xm.base().dim(), xm.top().dim());
        for i in 0..nb {
            for pp in 0..nt {
                // boundary(e_i . c_p) = e_i * boundary(c_p), the base acting
                // on itself by multiplication
                let lhs = xm.boundary.apply(xm.action.act_basis(i, pp));
                let rhs = xm
                    .base()
                    .mul_elems(&xm.base().basis_vec(i), &xm.boundary.matrix().col(pp));
                if lhs != rhs {
                    return Err(XModError::NotEquivariant { i, p: pp });
                }
            }
        }
        for pp in 0..nt {
            for q in 0..nt {
                // Peiffer: boundary(c_p) . c_q = c_p c_q
                let lhs = xm
                    .action
                    .act(&xm.boundary.matrix().col(pp), &xm.top().basis_vec(q));
                if lhs != xm.top().basis_product(pp, q) {
                    return Err(XModError::PeifferFails { p: pp, q });
                }
            }
        }
        Ok(xm)
    }

    /// The zero crossed module over a base: trivial top, zero boundary.
    pub fn zero(base: &Algebra) -> Self {
        let top = Algebra::zero_mult(base.p(), 0, "0");
        let boundary = AlgebraMorphism::zero(&top, base);
        let action = AlgebraAction::new(base.clone(), top, vec![]).expect("empty action");
        CrossedModule::new(format!("0 -> {}", base.label()), boundary, action)
            .expect("zero crossed module")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn top(&self) -> &Algebra {
        self.boundary.source()
    }

    pub fn base(&self) -> &Algebra {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &AlgebraMorphism {
        &self.boundary
    }

    pub fn action(&self) -> &AlgebraAction {
        &self.action
    }
}

/// An ideal inclusion as a crossed module: the ideal becomes the top algebra
/// under the multiplication action, the boundary is the inclusion.
pub fn inclusion_xmod(r: &Algebra, ideal: &Ideal) -> Result<CrossedModule, XModError> {
    assert_eq!(ideal.parent(), r, "ideal of a different algebra");
    let (top, inclusion) = ideal.as_algebra();
    let k = top.dim();
    let mut table = vec![0; r.dim() * k * k];
    for i in 0..r.dim() {
        for a in 0..k {
            let prod = r.mul_elems(&r.basis_vec(i), ideal.space().basis().row(a));
            let coords = ideal
                .space()
                .coordinates(&prod)
                .expect("ideal closed under base multiplication");
            table[(i * k + a) * k..(i * k + a + 1) * k].copy_from_slice(&coords);
        }
    }
    let action = AlgebraAction::new(r.clone(), top, table)?;
    CrossedModule::new(
        format!("({}-dim ideal) -> {}", k, r.label()),
        inclusion,
        action,
    )
}

/// A module presented by an action table becomes a crossed module with zero
/// top multiplication and zero boundary.
pub fn zero_module_xmod(
    r: &Algebra,
    module_dim: usize,
    table: Vec<u64>,
    label: impl Into<String>,
) -> Result<CrossedModule, XModError> {
    let top = Algebra::zero_mult(r.p(), module_dim, label);
    let action = AlgebraAction::new(r.clone(), top.clone(), table)?;
    let boundary = AlgebraMorphism::zero(&top, r);
    CrossedModule::new(
        format!("{} -0-> {}", top.label(), r.label()),
        boundary,
        action,
    )
}

/// The multiplication crossed module `(R, M(R), mu)`: `R` over its
/// multiplier algebra, a multiplier acting by evaluation.
pub fn multiplication_xmod(r: &Algebra) -> Result<CrossedModule, XModError> {
    let m = multiplier_algebra(r)?;
    let n = r.dim();
    let k = m.algebra.dim();
    let mut table = vec![0; k * n * n];
    for (a, delta) in m.basis.iter().enumerate() {
        for j in 0..n {
            let image = delta.col(j);
            table[(a * n + j) * n..(a * n + j + 1) * n].copy_from_slice(&image);
        }
    }
    let action = AlgebraAction::new(m.algebra.clone(), r.clone(), table)?;
    CrossedModule::new(format!("{} -mu-> M", r.label()), m.mu, action)
}

/// The image of the boundary, verified to be an ideal of the base.
pub fn boundary_image_ideal(xm: &CrossedModule) -> Result<Ideal, XModError> {
    Ok(Ideal::new(xm.base().clone(), xm.boundary().image_space())?)
}

/// Kernel of the boundary with its inherited structure: an ideal of the top
/// on which the boundary image acts trivially, hence a module over the base
/// modulo that image.
#[derive(Debug, Clone)]
pub struct KernelModule {
    /// `ker(boundary)` as an ideal of the top algebra.
    pub kernel: Ideal,
    /// Base modulo the boundary image.
    pub base_quotient: AlgebraQuotient,
    /// The kernel as a zero crossed module over the quotient base.
    pub module: CrossedModule,
}

pub fn kernel_module(xm: &CrossedModule) -> Result<KernelModule, XModError> {
    let kernel_space = xm.boundary().matrix().kernel();
    let kernel = Ideal::new(xm.top().clone(), kernel_space.clone())?;
    // boundary image acts trivially on the kernel
    for pp in 0..xm.top().dim() {
        for row in 0..kernel_space.dim() {
            let acted = xm.action().act(
                &xm.boundary().matrix().col(pp),
                kernel_space.basis().row(row),
            );
            if acted.iter().any(|&x| x != 0) {
                return Err(XModError::KernelActionNotTrivial { p: pp, row });
            }
        }
    }
    let image = boundary_image_ideal(xm)?;
    let base_quotient = xm.base().quotient(&image)?;
    let kd = kernel_space.dim();
    let qd = base_quotient.algebra.dim();
    let mut table = vec![0; qd * kd * kd];
    for a in 0..qd {
        let mut coords = vec![0; qd];
        coords[a] = 1;
        let rep = base_quotient.space.lift(&coords);
        for b in 0..kd {
            let acted = xm.action().act(&rep, kernel_space.basis().row(b));
            let in_kernel = kernel_space
                .coordinates(&acted)
                .expect("kernel is stable under the action");
            table[(a * kd + b) * kd..(a * kd + b + 1) * kd].copy_from_slice(&in_kernel);
        }
    }
    let module = zero_module_xmod(
        &base_quotient.algebra,
        kd,
        table,
        format!("ker of {}", xm.label()),
    )?;
    Ok(KernelModule {
        kernel,
        base_quotient,
        module,
    })
}

/// Morphism of crossed modules: compatible maps of tops and bases making
/// the boundary square commute and preserving the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModMorphism {
    source: CrossedModule,
    target: CrossedModule,
    f: AlgebraMorphism,
    phi: AlgebraMorphism,
}

impl XModMorphism {
    pub fn new(
        source: &CrossedModule,
        target: &CrossedModule,
        f: AlgebraMorphism,
        phi: AlgebraMorphism,
    ) -> Result<Self, XModError> {
        assert_eq!(f.source(), source.top(), "top source mismatch");
        assert_eq!(f.target(), target.top(), "top target mismatch");
        assert_eq!(phi.source(), source.base(), "base source mismatch");
        assert_eq!(phi.target(), target.base(), "base target mismatch");
        // boundary' . f = phi . boundary
        let left = target.boundary().matrix().mat_mul(f.matrix());
        let right = phi.matrix().mat_mul(source.boundary().matrix());
        if left != right {
            return Err(XModError::SquareDoesNotCommute);
        }
        for i in 0..source.base().dim() {
            for pp in 0..source.top().dim() {
                // f(e_i . c_p) = phi(e_i) . f(c_p)
                let lhs = f.apply(source.action().act_basis(i, pp));
                let rhs = target
                    .action()
                    .act(&phi.matrix().col(i), &f.matrix().col(pp));
                if lhs != rhs {
                    return Err(XModError::ActionNotPreserved { i, p: pp });
                }
            }
        }
        Ok(XModMorphism {
            source: source.clone(),
            target: target.clone(),
            f,
            phi,
        })
    }

    pub fn identity(xm: &CrossedModule) -> Self {
        XModMorphism {
            source: xm.clone(),
            target: xm.clone(),
            f: AlgebraMorphism::identity(xm.top()),
            phi: AlgebraMorphism::identity(xm.base()),
        }
    }

    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    pub fn f(&self) -> &AlgebraMorphism {
        &self.f
    }

    pub fn phi(&self) -> &AlgebraMorphism {
        &self.phi
    }

    /// `other` after `self`; stays a crossed-module morphism.
    pub fn then(&self, other: &XModMorphism) -> XModMorphism {
        assert_eq!(&self.target, &other.source, "composition mismatch");
        XModMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            f: self.f.then(&other.f),
            phi: self.phi.then(&other.phi),
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.f.matrix().inverse().is_some() && self.phi.matrix().inverse().is_some()
    }

    /// Whether the base component is the identity map.
    pub fn has_identity_base(&self) -> bool {
        self.phi.source() == self.phi.target()
            && self.phi.matrix()
                == &FpMatrix::identity(self.phi.source().p(), self.phi.source().dim())
    }
}

/// All top maps completing a fixed base map to a crossed-module morphism.
///
/// The commuting square and action compatibility are linear in the unknown
/// top matrix, so they are solved exactly; only the residual affine space is
/// enumerated (against the budget) and filtered for multiplicativity.
pub fn tops_for_base(
    source: &CrossedModule,
    target: &CrossedModule,
    phi: &AlgebraMorphism,
    budget: u64,
) -> Result<Vec<AlgebraMorphism>, XModError> {
    assert_eq!(phi.source(), source.base());
    assert_eq!(phi.target(), target.base());
    let p = source.top().p();
    let ns = source.top().dim();
    let nt = target.top().dim();
    let nb = source.base().dim();
    let nr = target.base().dim();
    let unknowns = nt * ns; // f[k][q] at index k*ns + q

    let square_rows = ns * nr;
    let action_rows = nb * ns * nt;
    let mut system = FpMatrix::zeros(p, square_rows + action_rows, unknowns);
    let mut rhs = vec![0; square_rows + action_rows];

    // boundary' . f = phi . boundary, one equation per (p, r)
    let phi_d = phi.matrix().mat_mul(source.boundary().matrix());
    for pp in 0..ns {
        for r in 0..nr {
            let row = pp * nr + r;
            for q in 0..nt {
                system.set(row, q * ns + pp, target.boundary().matrix().get(r, q));
            }
            rhs[row] = phi_d.get(r, pp);
        }
    }
    // f(e_i . c_p) = phi(e_i) . f(c_p), one equation per (i, p, k)
    for i in 0..nb {
        // W[k][q] = (phi(e_i) . c_q)_k in the target
        let w = phi.matrix().col(i);
        let w_cols: Vec<Vec<u64>> = (0..nt)
            .map(|q| target.action().act(&w, &target.top().basis_vec(q)))
            .collect();
        for pp in 0..ns {
            let acted = source.action().act_basis(i, pp);
            for k in 0..nt {
                let row = square_rows + (i * ns + pp) * nt + k;
                for (q, &aq) in acted.iter().enumerate() {
                    system.set(row, k * ns + q, aq);
                }
                for (q, w_col) in w_cols.iter().enumerate() {
                    let cur = system.get(row, q * ns + pp);
                    system.set(row, q * ns + pp, p.sub(cur, w_col[k]));
                }
                rhs[row] = 0;
            }
        }
    }

    let Some(particular) = system.solve(&rhs) else {
        return Ok(Vec::new());
    };
    let kernel = system.kernel();
    let freedom = kernel.dim();
    let required = (p.get() as u128)
        .checked_pow(freedom as u32)
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(SearchTooLarge { required, budget }.into());
    }

    let mut out = Vec::new();
    for coeffs in enumerate_vectors(p, freedom) {
        let mut flat = particular.clone();
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (slot, &kv) in flat.iter_mut().zip(kernel.basis().row(t)) {
                    *slot = p.add(*slot, p.mul(c, kv));
                }
            }
        }
        let matrix = FpMatrix::from_fn(p, nt, ns, |k, q| flat[k * ns + q]);
        if let Ok(morphism) =
            AlgebraMorphism::new(source.top().clone(), target.top().clone(), matrix)
        {
            out.push(morphism);
        }
    }
    out.sort_by(|a, b| a.matrix().entries().cmp(b.matrix().entries()));
    Ok(out)
}

/// All crossed-module morphisms between two crossed modules, with the base
/// map either fixed or itself enumerated. Deterministic order.
pub fn enumerate_xmod_morphisms(
    source: &CrossedModule,
    target: &CrossedModule,
    fixed_base: Option<&AlgebraMorphism>,
    budget: u64,
) -> Result<Vec<XModMorphism>, XModError> {
    let bases = match fixed_base {
        Some(phi) => vec![phi.clone()],
        None => enumerate_morphisms(source.base(), target.base(), &[], budget)?,
    };
    let mut out = Vec::new();
    for phi in bases {
        for f in tops_for_base(source, target, &phi, budget)? {
            let m = XModMorphism::new(source, target, f, phi.clone())
                .expect("solved constraints define a morphism");
            out.push(m);
        }
    }
    out.sort_by(|a, b| {
        (a.phi.matrix().entries(), a.f.matrix().entries())
            .cmp(&(b.phi.matrix().entries(), b.f.matrix().entries()))
    });
    Ok(out)
}

/// Element-level cross-check of the two crossed-module axioms, run only when
/// the element counts stay within `limit` pairs. Basis-level validation
/// already implies these by bilinearity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExhaustiveCheck {
    pub equivariance_pairs: u64,
    pub peiffer_pairs: u64,
}

pub fn exhaustive_axiom_check(
    xm: &CrossedModule,
    limit: u64,
) -> Result<ExhaustiveCheck, XModError> {
    let p = xm.top().p();
    let top_count = (p.get() as u128).pow(xm.top().dim() as u32);
    let base_count = (p.get() as u128).pow(xm.base().dim() as u32);
    let mut report = ExhaustiveCheck::default();
    if top_count * base_count <= limit as u128 {
        let tops = enumerate_vectors(p, xm.top().dim());
        let bases = enumerate_vectors(p, xm.base().dim());
        for r in &bases {
            for c in &tops {
                let lhs = xm.boundary().apply(&xm.action().act(r, c));
                let rhs = xm.base().mul_elems(r, &xm.boundary().apply(c));
                if lhs != rhs {
                    return Err(XModError::NotEquivariant { i: 0, p: 0 });
                }
                report.equivariance_pairs += 1;
            }
        }
    }
    if top_count * top_count <= limit as u128 {
        let tops = enumerate_vectors(p, xm.top().dim());
        for c in &tops {
            for c2 in &tops {
                let lhs = xm.action().act(&xm.boundary().apply(c), c2);
                if lhs != xm.top().mul_elems(c, c2) {
                    return Err(XModError::PeifferFails { p: 0, q: 0 });
                }
                report.peiffer_pairs += 1;
            }
        }
    }
    Ok(report)
}
