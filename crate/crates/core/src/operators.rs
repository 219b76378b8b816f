//! O-operators, Rota-Baxter operators, symplectic forms, trace functions, and
//! the algebra structures they induce.

use crate::algebras::{
    check_3hompre, check_square, cyclic_bracket, HomLie, ThreeHomLDend, ThreeHomLie,
    ThreeHomPreLie, Twisted,
};
use crate::error::{require, Error, Result};
use crate::linalg::{add_vec, basis_vec, sub_vec, Matrix, Vector};
use crate::report::{for_each_tuple, Checker, Report};
use crate::representations::{
    ad_tensor, adjoint_rep, check_lie_rep, check_prelie_rep, prelie_adjoint, right_mult_tensor,
    LieRep, PreLieRep,
};
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, TriTensor};

/// Candidate O-operator `T: V → A` for a 3-Hom-Lie representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieOOperator<S> {
    pub t: Matrix<S>,
    pub rep: LieRep<S>,
}

/// Candidate O-operator `T: V → A` for a 3-Hom-pre-Lie representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieOOperator<S> {
    pub t: Matrix<S>,
    pub rep: PreLieRep<S>,
}

fn check_shape<S: Scalar>(t: &Matrix<S>, algdim: usize, moddim: usize) -> Result<()> {
    if t.rows() == algdim && t.cols() == moddim {
        Ok(())
    } else {
        Err(Error::DimMismatch(format!(
            "operator is {}x{}, expected {algdim}x{moddim}",
            t.rows(),
            t.cols()
        )))
    }
}

impl<S: Scalar> LieOOperator<S> {
    pub fn new(t: Matrix<S>, rep: LieRep<S>) -> Result<Self> {
        check_shape(&t, rep.alg.bracket.dim(), rep.moddim())?;
        Ok(Self { t, rep })
    }

    /// Rota-Baxter candidate: the adjoint representation as context.
    pub fn rota_baxter(a: &ThreeHomLie<S>, r: &Matrix<S>) -> Result<Self> {
        Self::new(r.clone(), adjoint_rep(a))
    }
}

impl<S: Scalar> PreLieOOperator<S> {
    pub fn new(t: Matrix<S>, rep: PreLieRep<S>) -> Result<Self> {
        check_shape(&t, rep.alg.prod.dim(), rep.moddim())?;
        Ok(Self { t, rep })
    }

    /// Rota-Baxter candidate: the adjoint representation `(L, R, α)`.
    pub fn rota_baxter(a: &ThreeHomPreLie<S>, r: &Matrix<S>) -> Result<Self> {
        Self::new(r.clone(), prelie_adjoint(a))
    }
}

fn check_intertwines<S: Scalar>(c: &mut Checker, t: &Matrix<S>, phi: &Matrix<S>, alpha: &Matrix<S>) {
    c.mat_eq("T-phi", &[], &t.mul(phi), &alpha.mul(t));
}

/// `Tφ = αT` and `[Tu,Tv,Tw] = T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)`,
/// without checking the representation.
pub fn lie_o_identities<S: Scalar>(c: &LieOOperator<S>) -> Report {
    let mut ch = Checker::new("o_operator");
    let (t, rho, b) = (&c.t, &c.rep.rho, &c.rep.alg.bracket);
    check_intertwines(&mut ch, t, &c.rep.phi, &c.rep.alg.alpha);
    let tc = Twisted::new(t);
    for_each_tuple(c.rep.moddim(), 3, |x| {
        if ch.failed("O") {
            return;
        }
        ch.count_tuple();
        let (u, v, w) = (x[0], x[1], x[2]);
        let lhs = b.eval(tc.at(u), tc.at(v), tc.at(w));
        let inner = add_vec(
            &add_vec(
                &rho.eval(tc.at(u), tc.at(v)).column(w),
                &rho.eval(tc.at(v), tc.at(w)).column(u),
            ),
            &rho.eval(tc.at(w), tc.at(u)).column(v),
        );
        ch.vec_eq("O", x, &lhs, &t.apply(&inner));
    });
    ch.finish()
}

/// O-operator check; `BadRep` when the context is not a representation.
pub fn check_o_operator<S: Scalar>(c: &LieOOperator<S>) -> Result<Report> {
    require(check_lie_rep(&c.rep)?, Error::BadRep)?;
    Ok(lie_o_identities(c))
}

/// `Tφ = αT` and `{Tu,Tv,Tw} = T(l(Tu,Tv)w - r(Tu,Tw)v + r(Tv,Tw)u)`,
/// without checking the representation.
pub fn prelie_o_identities<S: Scalar>(c: &PreLieOOperator<S>) -> Report {
    let mut ch = Checker::new("o_operator");
    let (t, p) = (&c.t, &c.rep.alg.prod);
    let (l, r) = (&c.rep.l, &c.rep.r);
    check_intertwines(&mut ch, t, &c.rep.phi, &c.rep.alg.alpha);
    let tc = Twisted::new(t);
    for_each_tuple(c.rep.moddim(), 3, |x| {
        if ch.failed("O") {
            return;
        }
        ch.count_tuple();
        let (u, v, w) = (x[0], x[1], x[2]);
        let lhs = p.eval(tc.at(u), tc.at(v), tc.at(w));
        let inner = add_vec(
            &sub_vec(
                &l.eval(tc.at(u), tc.at(v)).column(w),
                &r.eval(tc.at(u), tc.at(w)).column(v),
            ),
            &r.eval(tc.at(v), tc.at(w)).column(u),
        );
        ch.vec_eq("O", x, &lhs, &t.apply(&inner));
    });
    ch.finish()
}

pub fn check_prelie_o_operator<S: Scalar>(c: &PreLieOOperator<S>) -> Result<Report> {
    require(check_prelie_rep(&c.rep)?, Error::BadRep)?;
    Ok(prelie_o_identities(c))
}

fn require_lie_o<S: Scalar>(c: &LieOOperator<S>) -> Result<()> {
    require(check_o_operator(c)?, Error::NotAnOOperator)
}

fn require_prelie_o<S: Scalar>(c: &PreLieOOperator<S>) -> Result<()> {
    require(check_prelie_o_operator(c)?, Error::NotAnOOperator)
}

/// `f∘pᵢ = qᵢ(f·, f·, f·)` for every product pair and `f∘α = β∘f`.
pub fn check_morphism<S: Scalar>(
    f: &Matrix<S>,
    src: &[&TriTensor<S>],
    src_alpha: &Matrix<S>,
    dst: &[&TriTensor<S>],
    dst_alpha: &Matrix<S>,
) -> Report {
    let mut c = Checker::new("morphism");
    c.mat_eq("alpha", &[], &f.mul(src_alpha), &dst_alpha.mul(f));
    let fc = Twisted::new(f);
    for (n, (p, q)) in src.iter().zip(dst).enumerate() {
        let id = format!("product{n}");
        for_each_tuple(p.dim(), 3, |t| {
            if c.failed(&id) {
                return;
            }
            c.count_tuple();
            let lhs = f.apply(p.row(t[0], t[1], t[2]));
            let rhs = q.eval(fc.at(t[0]), fc.at(t[1]), fc.at(t[2]));
            c.vec_eq(&id, t, &lhs, &rhs);
        });
    }
    c.finish()
}

/// `{u,v,w} = ρ(Tu,Tv)w` on the module, with twist `φ`.
pub fn prelie_from_o<S: Scalar>(c: &LieOOperator<S>) -> Result<ThreeHomPreLie<S>> {
    require_lie_o(c)?;
    let tc = Twisted::new(&c.t);
    let m = c.rep.moddim();
    Ok(ThreeHomPreLie {
        prod: TriTensor::from_fn(m, |u, v, w| c.rep.rho.eval(tc.at(u), tc.at(v)).column(w)),
        alpha: c.rep.phi.clone(),
    })
}

/// `nw(u,v,w) = l(Tu,Tv)w`, `ne(u,v,w) = r(Tv,Tw)u` on the module, twist `φ`.
pub fn ldend_from_o<S: Scalar>(c: &PreLieOOperator<S>) -> Result<ThreeHomLDend<S>> {
    require_prelie_o(c)?;
    let tc = Twisted::new(&c.t);
    let m = c.rep.moddim();
    Ok(ThreeHomLDend {
        nw: TriTensor::from_fn(m, |u, v, w| c.rep.l.eval(tc.at(u), tc.at(v)).column(w)),
        ne: TriTensor::from_fn(m, |u, v, w| c.rep.r.eval(tc.at(v), tc.at(w)).column(u)),
        alpha: c.rep.phi.clone(),
    })
}

fn rb_ldend_unchecked<S: Scalar>(a: &ThreeHomPreLie<S>, rb: &Matrix<S>) -> ThreeHomLDend<S> {
    let rc = Twisted::new(rb);
    let d = a.prod.dim();
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    ThreeHomLDend {
        nw: TriTensor::from_fn(d, |x, y, z| a.prod.eval(rc.at(x), rc.at(y), &e[z])),
        ne: TriTensor::from_fn(d, |x, y, z| a.prod.eval(&e[x], rc.at(y), rc.at(z))),
        alpha: a.alpha.clone(),
    }
}

/// `nw(x,y,z) = {Rx,Ry,z}`, `ne(x,y,z) = {x,Ry,Rz}` for a weight-zero
/// Rota-Baxter operator `R`.
pub fn ldend_from_rb<S: Scalar>(a: &ThreeHomPreLie<S>, rb: &Matrix<S>) -> Result<ThreeHomLDend<S>> {
    require_prelie_o(&PreLieOOperator::rota_baxter(a, rb)?)?;
    Ok(rb_ldend_unchecked(a, rb))
}

/// The representation `(L_nw, R_ne, α)` of the horizontal pre-Lie algebra,
/// `L_nw(x,y)z = nw(x,y,z)` and `R_ne(x,y)z = ne(z,x,y)`. The identity map
/// is an O-operator for it.
pub fn ldend_regular_rep<S: Scalar>(a: &ThreeHomLDend<S>) -> PreLieRep<S> {
    PreLieRep {
        alg: ThreeHomPreLie {
            prod: a.horizontal(),
            alpha: a.alpha.clone(),
        },
        l: ad_tensor(&a.nw),
        r: right_mult_tensor(&a.ne),
        phi: a.alpha.clone(),
    }
}

/// Transports the module structure along an invertible O-operator:
/// `nw(x,y,z) = T(l(x,y)T⁻¹z)`, `ne(x,y,z) = T(r(y,z)T⁻¹x)`.
pub fn compatible_ldend<S: Scalar>(c: &PreLieOOperator<S>) -> Result<ThreeHomLDend<S>> {
    let t_inv = c.t.invert()?;
    require_prelie_o(c)?;
    let d = c.t.rows();
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    let ti = Twisted::new(&t_inv);
    Ok(ThreeHomLDend {
        nw: TriTensor::from_fn(d, |x, y, z| c.t.apply(&c.rep.l.eval(&e[x], &e[y]).apply(ti.at(z)))),
        ne: TriTensor::from_fn(d, |x, y, z| c.t.apply(&c.rep.r.eval(&e[y], &e[z]).apply(ti.at(x)))),
        alpha: c.rep.alg.alpha.clone(),
    })
}

/// `nw + ne - ne∘swap₁₂ = prod` as tensors.
pub fn compatibility_report<S: Scalar>(a: &ThreeHomLDend<S>, prod: &TriTensor<S>) -> Report {
    let mut c = Checker::new("compatibility");
    let h = a.horizontal();
    for_each_tuple(h.dim(), 3, |t| {
        c.count_tuple();
        c.vec_eq("compat", t, h.row(t[0], t[1], t[2]), prod.row(t[0], t[1], t[2]));
    });
    c.finish()
}

/// Skew bilinear form on a 3-Hom-pre-Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm<S> {
    pub alg: ThreeHomPreLie<S>,
    pub form: BilinearForm<S>,
}

impl<S: Scalar> SymplecticForm<S> {
    pub fn new(alg: ThreeHomPreLie<S>, form: BilinearForm<S>) -> Result<Self> {
        check_square("form", &form.b, alg.prod.dim())?;
        Ok(Self { alg, form })
    }
}

/// Skew-symmetry, nondegeneracy, and closedness
/// `B({αx,αy,αz},α²w) - B(αz,[x,y,w]^C) - B(αy,{w,x,z}) + B(αx,{w,y,z}) = 0`.
pub fn symplectic_identities<S: Scalar>(s: &SymplecticForm<S>) -> Report {
    let mut c = Checker::new("symplectic");
    let b = &s.form;
    let p = &s.alg.prod;
    let d = p.dim();
    for_each_tuple(d, 2, |t| {
        c.count_tuple();
        c.scalar_eq("skew", t, &b.b[(t[0], t[1])], &-b.b[(t[1], t[0])].clone());
    });
    let det = b.b.determinant();
    c.holds("nondegenerate", &[], !det.is_zero(), &det.render(), "nonzero");
    let cb = p.cyclic_sum();
    let al = Twisted::new(&s.alg.alpha);
    let al2 = Twisted::new(&s.alg.alpha.pow(2));
    for_each_tuple(d, 4, |t| {
        if c.failed("closed") {
            return;
        }
        c.count_tuple();
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let total = b.eval(&p.eval(al.at(x), al.at(y), al.at(z)), al2.at(w))
            - b.eval(al.at(z), cb.row(x, y, w))
            - b.eval(al.at(y), p.row(w, x, z))
            + b.eval(al.at(x), p.row(w, y, z));
        c.scalar_eq("closed", t, &total, &S::zero());
    });
    c.finish()
}

/// Symplectic check; `BadBase` when the algebra is not 3-Hom-pre-Lie.
pub fn check_symplectic<S: Scalar>(s: &SymplecticForm<S>) -> Result<Report> {
    require(check_3hompre(&s.alg), Error::BadBase)?;
    Ok(symplectic_identities(s))
}

/// Shared setup of the form-induced constructions: the validated form,
/// `α⁻¹`, and `G⁻¹` where `G = (bα²)ᵀ`.
struct FormSolver<S: Scalar> {
    bt: Matrix<S>,
    alpha_inv: Twisted<S>,
    g_inv: Matrix<S>,
}

impl<S: Scalar> FormSolver<S> {
    fn new(s: &SymplecticForm<S>) -> Result<Self> {
        let report = check_symplectic(s)?;
        if !report.passed() {
            return Err(Error::Degenerate(report.to_string()));
        }
        let alpha = &s.alg.alpha;
        let alpha_inv = alpha.invert()?;
        let b = &s.form.b;
        if alpha.transpose().mul(b).mul(alpha) != *b {
            return Err(Error::Degenerate(
                "form is not preserved by the twist map".to_string(),
            ));
        }
        let g = b.mul(&alpha.pow(2)).transpose();
        Ok(Self {
            bt: b.transpose(),
            alpha_inv: Twisted::new(&alpha_inv),
            g_inv: g.invert()?,
        })
    }

    /// The vector `v` with `B(v, α²w) = B(u, m w)` for all `w`.
    fn solve(&self, m: &Matrix<S>, u: &[S]) -> Vector<S> {
        self.g_inv.apply(&m.transpose().apply(&self.bt.apply(u)))
    }
}

/// The dendriform structure determined by
/// `B(nw(αx,αy,z), α²w) = B(z, [x,y,w]^C)` and
/// `B(ne(x,αy,αz), α²w) = -B(x, {w,y,z})`.
/// Requires an invertible twist map preserving the form.
pub fn ldend_from_symplectic<S: Scalar>(s: &SymplecticForm<S>) -> Result<ThreeHomLDend<S>> {
    let f = FormSolver::new(s)?;
    let d = s.alg.prod.dim();
    let ad_c = ad_tensor(&s.alg.prod.cyclic_sum());
    let right = right_mult_tensor(&s.alg.prod);
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    let ai = &f.alpha_inv;
    Ok(ThreeHomLDend {
        nw: TriTensor::from_fn(d, |x, y, z| f.solve(&ad_c.eval(ai.at(x), ai.at(y)), &e[z])),
        ne: TriTensor::from_fn(d, |x, y, z| {
            f.solve(&right.eval(ai.at(y), ai.at(z)).neg(), &e[x])
        }),
        alpha: s.alg.alpha.clone(),
    })
}

/// `T` with `T⁻¹x = B(x, ·)` on the dual of the adjoint representation.
/// Closedness of the form alone does not make this an O-operator.
pub fn symplectic_o_operator<S: Scalar>(s: &SymplecticForm<S>) -> Result<PreLieOOperator<S>> {
    let t = s.form.b.transpose().invert()?;
    let rep = crate::representations::dual_prelie_rep(&prelie_adjoint(&s.alg))?;
    PreLieOOperator::new(t, rep)
}

/// Checks the two pairing identities defining `ldend_from_symplectic`.
pub fn symplectic_pairing_report<S: Scalar>(s: &SymplecticForm<S>, a: &ThreeHomLDend<S>) -> Report {
    let mut c = Checker::new("symplectic_pairing");
    let b = &s.form;
    let p = &s.alg.prod;
    let cb = p.cyclic_sum();
    let al = Twisted::new(&s.alg.alpha);
    let al2 = Twisted::new(&s.alg.alpha.pow(2));
    let d = p.dim();
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    for_each_tuple(d, 4, |t| {
        c.count_tuple();
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let lhs = b.eval(&a.nw.eval(al.at(x), al.at(y), &e[z]), al2.at(w));
        c.scalar_eq("pair-nw", t, &lhs, &b.eval(&e[z], cb.row(x, y, w)));
        let lhs = b.eval(&a.ne.eval(&e[x], al.at(y), al.at(z)), al2.at(w));
        c.scalar_eq("pair-ne", t, &lhs, &-b.eval(&e[x], p.row(w, y, z)));
    });
    c.finish()
}

/// The product determined by
/// `B({αx,αy,αz}', α²w) = B(αz, [x,y,w]^C) - B(αz, {w,x,y}) + B(αz, {w,y,x})`.
pub fn prelie_prime_from_symplectic<S: Scalar>(s: &SymplecticForm<S>) -> Result<ThreeHomPreLie<S>> {
    let f = FormSolver::new(s)?;
    let d = s.alg.prod.dim();
    let ad_c = ad_tensor(&s.alg.prod.cyclic_sum());
    let right = right_mult_tensor(&s.alg.prod);
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    let ai = &f.alpha_inv;
    Ok(ThreeHomPreLie {
        prod: TriTensor::from_fn(d, |x, y, z| {
            let (ax, ay) = (ai.at(x), ai.at(y));
            let m = ad_c
                .eval(ax, ay)
                .sub(&right.eval(ax, ay))
                .add(&right.eval(ay, ax));
            f.solve(&m, &e[z])
        }),
        alpha: s.alg.alpha.clone(),
    })
}

pub fn prime_pairing_report<S: Scalar>(s: &SymplecticForm<S>, q: &ThreeHomPreLie<S>) -> Report {
    let mut c = Checker::new("prime_pairing");
    let b = &s.form;
    let p = &s.alg.prod;
    let cb = p.cyclic_sum();
    let al = Twisted::new(&s.alg.alpha);
    let al2 = Twisted::new(&s.alg.alpha.pow(2));
    for_each_tuple(p.dim(), 4, |t| {
        c.count_tuple();
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let lhs = b.eval(&q.prod.eval(al.at(x), al.at(y), al.at(z)), al2.at(w));
        let rhs = b.eval(al.at(z), cb.row(x, y, w)) - b.eval(al.at(z), p.row(w, x, y))
            + b.eval(al.at(z), p.row(w, y, x));
        c.scalar_eq("pair", t, &lhs, &rhs);
    });
    c.finish()
}

fn require_commuting_rb<S: Scalar>(a: &ThreeHomLie<S>, r1: &Matrix<S>, r2: &Matrix<S>) -> Result<()> {
    require_lie_o(&LieOOperator::rota_baxter(a, r1)?)?;
    require_lie_o(&LieOOperator::rota_baxter(a, r2)?)?;
    if r1.mul(r2) != r2.mul(r1) {
        return Err(Error::NotCommuting);
    }
    Ok(())
}

/// `{x,y,z} = [R₁x, R₁y, z]`, the pre-Lie structure of a Rota-Baxter operator.
pub fn rb_prelie<S: Scalar>(a: &ThreeHomLie<S>, r1: &Matrix<S>) -> Result<ThreeHomPreLie<S>> {
    prelie_from_o(&LieOOperator::rota_baxter(a, r1)?)
}

/// Whether `R₂` is a weight-zero Rota-Baxter operator on `[R₁x, R₁y, z]`.
pub fn commuting_rb_intermediate<S: Scalar>(
    a: &ThreeHomLie<S>,
    r1: &Matrix<S>,
    r2: &Matrix<S>,
) -> Result<Report> {
    require_commuting_rb(a, r1, r2)?;
    let pre = rb_prelie(a, r1)?;
    check_prelie_o_operator(&PreLieOOperator::rota_baxter(&pre, r2)?)
}

/// `nw(x,y,z) = [R₁R₂x, R₁R₂y, z]`, `ne(x,y,z) = [R₁x, R₁R₂y, R₂z]`.
pub fn ldend_from_commuting_rb<S: Scalar>(
    a: &ThreeHomLie<S>,
    r1: &Matrix<S>,
    r2: &Matrix<S>,
) -> Result<ThreeHomLDend<S>> {
    require_commuting_rb(a, r1, r2)?;
    let r12 = r1.mul(r2);
    let d = a.bracket.dim();
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    let (c1, c2, c12) = (Twisted::new(r1), Twisted::new(r2), Twisted::new(&r12));
    let b = &a.bracket;
    Ok(ThreeHomLDend {
        nw: TriTensor::from_fn(d, |x, y, z| b.eval(c12.at(x), c12.at(y), &e[z])),
        ne: TriTensor::from_fn(d, |x, y, z| b.eval(c1.at(x), c12.at(y), c2.at(z))),
        alpha: a.alpha.clone(),
    })
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn check_trace<S: Scalar>(h: &HomLie<S>, tau: &[S]) -> Result<()> {
    let d = h.dim();
    if tau.len() != d {
        return Err(Error::DimMismatch(format!(
            "trace has length {}, expected {d}",
            tau.len()
        )));
    }
    for i in 0..d {
        for j in 0..d {
            if !dot(tau, h.bracket.row(i, j)).is_zero() {
                return Err(Error::NotATrace(format!(
                    "tau([e{i}, e{j}]) is nonzero"
                )));
            }
        }
        if dot(tau, &h.alpha.column(i)) != tau[i] {
            return Err(Error::NotATrace(format!(
                "tau(alpha e{i}) differs from tau(e{i})"
            )));
        }
    }
    Ok(())
}

/// `[x,y,z]_τ = τ(x)[y,z] + τ(y)[z,x] + τ(z)[x,y]` with the same twist map.
pub fn trace_3homlie<S: Scalar>(h: &HomLie<S>, tau: &[S]) -> Result<ThreeHomLie<S>> {
    check_trace(h, tau)?;
    let d = h.dim();
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    Ok(ThreeHomLie {
        bracket: TriTensor::from_fn(d, |i, j, k| ternary_trace(h, tau, &e[i], &e[j], &e[k])),
        alpha: h.alpha.clone(),
    })
}

fn ternary_trace<S: Scalar>(h: &HomLie<S>, tau: &[S], x: &[S], y: &[S], z: &[S]) -> Vector<S> {
    let b = &h.bracket;
    let mut out = crate::linalg::scale_vec(&dot(tau, x), &b.eval(y, z));
    crate::linalg::axpy(&mut out, &dot(tau, y), &b.eval(z, x));
    crate::linalg::axpy(&mut out, &dot(tau, z), &b.eval(x, y));
    out
}

/// The dendriform structure of a commuting Rota-Baxter pair on the trace
/// bracket, evaluated directly through the binary bracket and `τ`.
pub fn trace_rb_ldend<S: Scalar>(
    h: &HomLie<S>,
    tau: &[S],
    r1: &Matrix<S>,
    r2: &Matrix<S>,
) -> Result<ThreeHomLDend<S>> {
    let a = trace_3homlie(h, tau)?;
    require_commuting_rb(&a, r1, r2)?;
    let d = h.dim();
    let r12 = r1.mul(r2);
    let e: Vec<Vector<S>> = (0..d).map(|i| basis_vec(d, i)).collect();
    let (c1, c2, c12) = (Twisted::new(r1), Twisted::new(r2), Twisted::new(&r12));
    Ok(ThreeHomLDend {
        nw: TriTensor::from_fn(d, |x, y, z| ternary_trace(h, tau, c12.at(x), c12.at(y), &e[z])),
        ne: TriTensor::from_fn(d, |x, y, z| ternary_trace(h, tau, c1.at(x), c12.at(y), c2.at(z))),
        alpha: h.alpha.clone(),
    })
}

/// `T[u,v,w]^C = [Tu,Tv,Tw]` for the pre-Lie structure induced by an
/// O-operator.
pub fn o_morphism_report<S: Scalar>(c: &LieOOperator<S>, induced: &ThreeHomPreLie<S>) -> Report {
    let sub = cyclic_bracket(induced);
    check_morphism(
        &c.t,
        &[&sub.bracket],
        &sub.alpha,
        &[&c.rep.alg.bracket],
        &c.rep.alg.alpha,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::check_3homlie;
    use crate::scalar::Rational;

    fn q(p: i64) -> Rational {
        Rational::from_i64(p)
    }

    fn derived() -> ThreeHomLie<Rational> {
        ThreeHomLie::new(
            TriTensor::skew_from(3, &[([0, 1, 2], basis_vec(3, 0))]),
            Matrix::identity(3),
        )
        .unwrap()
    }

    #[test]
    fn zero_operator_passes() {
        let c = LieOOperator::rota_baxter(&derived(), &Matrix::zeros(3, 3)).unwrap();
        assert!(check_o_operator(&c).unwrap().passed());
    }

    #[test]
    fn rank_one_operator_passes() {
        let r = Matrix::diag(vec![q(0), q(1), q(0)]);
        let c = LieOOperator::rota_baxter(&derived(), &r).unwrap();
        assert!(check_o_operator(&c).unwrap().passed());
        assert!(prelie_from_o(&c).unwrap().prod.is_zero());
    }

    #[test]
    fn identity_is_not_rota_baxter_on_nonabelian() {
        let c = LieOOperator::rota_baxter(&derived(), &Matrix::identity(3)).unwrap();
        let r = check_o_operator(&c).unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_violation().unwrap().tuple, vec![0, 1, 2]);
    }

    #[test]
    fn trace_bracket_of_small_hom_lie() {
        let mut b = crate::tensor::BiTensor::zeros(3);
        b.set(0, 1, 1, q(1));
        b.set(1, 0, 1, q(-1));
        let h = HomLie::new(b, Matrix::identity(3)).unwrap();
        let t = trace_3homlie(&h, &[q(0), q(0), q(1)]).unwrap();
        assert!(check_3homlie(&t).passed());
        assert_eq!(t.bracket.row(0, 1, 2), &[q(0), q(1), q(0)]);
        assert!(matches!(
            trace_3homlie(&h, &[q(0), q(1), q(0)]),
            Err(Error::NotATrace(_))
        ));
    }
}
