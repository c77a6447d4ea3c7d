//! The bundled worked-example family over `F_2`: the truncated polynomial
//! algebra `T3 = F2[x]/(x^3)`, its ideals, the quotient maps, and the
//! crossed modules built from them. Everything the catalog and the
//! acceptance suite exercise comes from here.

use xalg_core::algebra::{Algebra, AlgebraMorphism, AlgebraQuotient, Ideal};
use xalg_core::linalg::{FpMatrix, Prime};
use xalg_core::xmod::{
    inclusion_xmod, multiplication_xmod, zero_module_xmod, AlgebraAction, CrossedModule,
};

pub fn p2() -> Prime {
    Prime::new(2).expect("2 is prime")
}

pub fn t3() -> Algebra {
    Algebra::truncated_poly(p2(), 3)
}

pub fn f2() -> Algebra {
    Algebra::field(p2())
}

/// The maximal ideal `(x)` of `T3`.
pub fn ideal_x() -> Ideal {
    Ideal::closure(&t3(), &[vec![0, 1, 0]])
}

/// The socle `(x^2)` of `T3`.
pub fn ideal_x2() -> Ideal {
    Ideal::closure(&t3(), &[vec![0, 0, 1]])
}

/// `(x)` as a standalone non-unital algebra; also the hypothesis-violating
/// example for the multiplier construction.
pub fn nilpotent() -> Algebra {
    let mut n = ideal_x().as_algebra().0;
    n.set_label("N");
    n
}

pub fn quotient_mod_x() -> AlgebraQuotient {
    t3().quotient(&ideal_x()).expect("quotient by (x)")
}

pub fn quotient_mod_x2() -> AlgebraQuotient {
    t3().quotient(&ideal_x2()).expect("quotient by (x^2)")
}

/// Projection `T3 -> T3/(x)`, a copy of `F2`.
pub fn projection_mod_x() -> AlgebraMorphism {
    quotient_mod_x().projection
}

/// Projection `T3 -> T3/(x^2)`, the dual numbers over `F2`.
pub fn projection_mod_x2() -> AlgebraMorphism {
    quotient_mod_x2().projection
}

/// Unital inclusion `F2 -> T3`.
pub fn unital_inclusion_f2_t3() -> AlgebraMorphism {
    AlgebraMorphism::new(
        f2(),
        t3(),
        FpMatrix::from_rows(p2(), 1, &[vec![1], vec![0], vec![0]]),
    )
    .expect("unital inclusion")
}

pub fn inclusion_x() -> CrossedModule {
    let mut xm = inclusion_xmod(&t3(), &ideal_x()).expect("(x) inclusion");
    xm.set_label("t3-ideal-xmod");
    xm
}

pub fn inclusion_x2() -> CrossedModule {
    let mut xm = inclusion_xmod(&t3(), &ideal_x2()).expect("(x^2) inclusion");
    xm.set_label("t3-ideal-x2-xmod");
    xm
}

/// `(R, R, id)` with the multiplication action.
pub fn identity_xmod(r: &Algebra) -> CrossedModule {
    CrossedModule::new(
        format!("identity over {}", r.label()),
        AlgebraMorphism::identity(r),
        AlgebraAction::multiplication(r),
    )
    .expect("identity crossed module")
}

/// One-dimensional `T3`-module where the unit acts as identity and the
/// nilpotents act as zero, as a zero crossed module.
pub fn point_module_t3() -> CrossedModule {
    let mut xm = zero_module_xmod(&t3(), 1, vec![1, 0, 0], "M").expect("point module");
    xm.set_label("m-zero-module");
    xm
}

/// One-dimensional module over the residue field.
pub fn point_module_f2() -> CrossedModule {
    zero_module_xmod(&f2(), 1, vec![1], "M'").expect("point module over F2")
}

/// `I/I^2` with its induced `T3/(x)`-action, as a zero crossed module.
pub fn i_mod_i2_module() -> CrossedModule {
    // I = (x): I^2 = (x^2), so I/I^2 is spanned by the class of x and the
    // residue field acts through the unit
    zero_module_xmod(&quotient_mod_x().algebra, 1, vec![1], "I/I^2").expect("I/I^2 module")
}

/// The composite boundary `(x) -> T3/(x^2)` over the dual numbers.
pub fn composite_xmod() -> CrossedModule {
    let q = quotient_mod_x2();
    let ideal = ideal_x();
    let (top, incl) = ideal.as_algebra();
    let boundary = incl.then(&q.projection);
    let k = top.dim();
    let nb = q.algebra.dim();
    let mut table = vec![0; nb * k * k];
    for i in 0..nb {
        let rep = q.space.lift(&q.algebra.basis_vec(i));
        for b in 0..k {
            let acted = t3().mul_elems(&rep, ideal.space().basis().row(b));
            let coords = ideal.space().coordinates(&acted).expect("(x) is an ideal");
            table[(i * k + b) * k..(i * k + b + 1) * k].copy_from_slice(&coords);
        }
    }
    let action = AlgebraAction::new(q.algebra.clone(), top, table).expect("residue action");
    CrossedModule::new("composite (x) -> T3/(x^2)", boundary, action).expect("composite xmod")
}

/// `M x ker(phi)` as a crossed module over the source of `phi`: the
/// comparison object for pulling a zero-boundary module back. Boundary is
/// the kernel inclusion; the action goes through `phi` on the module factor
/// and by multiplication on the kernel factor.
pub fn product_with_kernel(phi: &AlgebraMorphism, m_xm: &CrossedModule) -> CrossedModule {
    let s = phi.source().clone();
    let p = s.p();
    let kernel = phi.kernel_ideal();
    let (k_alg, k_incl) = kernel.as_algebra();
    let m_top = m_xm.top().clone();
    let prod = Algebra::product(&m_top, &k_alg);
    let (nm, nk) = (m_top.dim(), k_alg.dim());
    let n = nm + nk;
    let boundary = AlgebraMorphism::new(
        prod.algebra.clone(),
        s.clone(),
        FpMatrix::from_fn(p, s.dim(), n, |i, j| {
            if j < nm {
                0
            } else {
                k_incl.matrix().get(i, j - nm)
            }
        }),
    )
    .expect("kernel inclusion boundary");
    let mut table = vec![0; s.dim() * n * n];
    for i in 0..s.dim() {
        let phi_i = phi.matrix().col(i);
        for b in 0..n {
            let mut out = vec![0; n];
            if b < nm {
                let acted = m_xm.action().act(&phi_i, &m_top.basis_vec(b));
                out[..nm].copy_from_slice(&acted);
            } else {
                let in_s = k_incl.apply(&k_alg.basis_vec(b - nm));
                let prod_s = s.mul_elems(&s.basis_vec(i), &in_s);
                let coords = kernel
                    .space()
                    .coordinates(&prod_s)
                    .expect("kernel is an ideal");
                out[nm..].copy_from_slice(&coords);
            }
            table[(i * n + b) * n..(i * n + b + 1) * n].copy_from_slice(&out);
        }
    }
    let action = AlgebraAction::new(s, prod.algebra.clone(), table).expect("product action");
    CrossedModule::new("M x ker", boundary, action).expect("product crossed module")
}

pub fn multiplication_f2() -> CrossedModule {
    multiplication_xmod(&f2()).expect("multiplication xmod of the field")
}

pub fn multiplication_t3() -> CrossedModule {
    multiplication_xmod(&t3()).expect("multiplication xmod of T3")
}

/// Every crossed module the suite treats as bundled, with stable names.
pub fn bundled_xmods() -> Vec<(String, CrossedModule)> {
    vec![
        ("t3-ideal-xmod".into(), inclusion_x()),
        ("t3-ideal-x2-xmod".into(), inclusion_x2()),
        ("m-zero-module".into(), point_module_t3()),
        ("m-prime-over-f2".into(), point_module_f2()),
        ("i-mod-i2".into(), i_mod_i2_module()),
        ("composite-x-over-dual".into(), composite_xmod()),
        ("multiplication-f2".into(), multiplication_f2()),
        ("multiplication-t3".into(), multiplication_t3()),
        ("identity-t3".into(), identity_xmod(&t3())),
        ("zero-over-t3".into(), CrossedModule::zero(&t3())),
        ("zero-into-f2".into(), CrossedModule::zero(&f2())),
    ]
}

/// The bundled definition file, compiled in so that the catalog runs
/// without touching the filesystem.
pub const T3_DEFINITIONS: &str = include_str!("../catalog/t3.xalg");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_family_is_consistent() {
        for (name, xm) in bundled_xmods() {
            assert!(!name.is_empty());
            assert_eq!(xm.top().p(), p2());
        }
    }

    #[test]
    fn embedded_definitions_match_fixtures() {
        let defs = crate::defs::parse_str(T3_DEFINITIONS).expect("bundled file parses");
        assert_eq!(defs.algebras["T3"], t3());
        assert_eq!(defs.algebras["F2"], f2());
        assert_eq!(defs.ideals["ix"], ideal_x());
        assert_eq!(defs.ideals["ix2"], ideal_x2());
        assert_eq!(defs.morphisms["via-projection"], projection_mod_x());
        assert_eq!(defs.morphisms["via-projection-x2"], projection_mod_x2());
        assert_eq!(defs.xmods["t3-ideal-xmod"], inclusion_x());
        assert_eq!(defs.xmods["m-zero-module"], point_module_t3());
        assert_eq!(defs.xmods["zero-into-F2"], CrossedModule::zero(&f2()));
    }
}
