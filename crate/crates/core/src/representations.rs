//! Representations of 3-Hom-Lie and 3-Hom-pre-Lie algebras, semidirect
//! products, and twisted duals.

use crate::algebras::{
    check_3homlie, check_3hompre, check_square, cyclic_bracket, ThreeHomLie, ThreeHomPreLie,
    Twisted,
};
use crate::error::{require, Error, Result};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::report::{for_each_tuple, Checker, Report};
use crate::scalar::Scalar;
use crate::tensor::{RepTensor, TriTensor};

/// Representation `ρ` of a 3-Hom-Lie algebra on a module with twist `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRep<S> {
    pub alg: ThreeHomLie<S>,
    pub rho: RepTensor<S>,
    pub phi: Matrix<S>,
}

/// Representation `(l, r, φ)` of a 3-Hom-pre-Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieRep<S> {
    pub alg: ThreeHomPreLie<S>,
    pub l: RepTensor<S>,
    pub r: RepTensor<S>,
    pub phi: Matrix<S>,
}

fn check_rep_shape<S: Scalar>(what: &str, rho: &RepTensor<S>, algdim: usize, moddim: usize) -> Result<()> {
    if rho.algdim() == algdim && rho.moddim() == moddim {
        Ok(())
    } else {
        Err(Error::DimMismatch(format!(
            "{what} acts as {}x{} operators indexed by dimension {}, expected {moddim}x{moddim} indexed by {algdim}",
            rho.moddim(),
            rho.moddim(),
            rho.algdim()
        )))
    }
}

impl<S: Scalar> LieRep<S> {
    pub fn new(alg: ThreeHomLie<S>, rho: RepTensor<S>, phi: Matrix<S>) -> Result<Self> {
        let n = alg.bracket.dim();
        check_rep_shape("representation", &rho, n, phi.rows())?;
        check_square("module twist", &phi, rho.moddim())?;
        Ok(Self { alg, rho, phi })
    }

    pub fn moddim(&self) -> usize {
        self.phi.rows()
    }
}

impl<S: Scalar> PreLieRep<S> {
    pub fn new(alg: ThreeHomPreLie<S>, l: RepTensor<S>, r: RepTensor<S>, phi: Matrix<S>) -> Result<Self> {
        let n = alg.prod.dim();
        check_rep_shape("left action", &l, n, phi.rows())?;
        check_rep_shape("right action", &r, n, phi.rows())?;
        check_square("module twist", &phi, l.moddim())?;
        Ok(Self { alg, l, r, phi })
    }

    pub fn moddim(&self) -> usize {
        self.phi.rows()
    }
}

/// `ad(x, y) z = [x, y, z]`, as operators indexed by basis pairs.
pub fn ad_tensor<S: Scalar>(t: &TriTensor<S>) -> RepTensor<S> {
    let d = t.dim();
    RepTensor::from_fn(d, d, true, |i, j| {
        Matrix::from_columns(d, &(0..d).map(|k| t.row(i, j, k).to_vec()).collect::<Vec<_>>())
    })
}

/// `R(x, y) z = p(z, x, y)`.
pub fn right_mult_tensor<S: Scalar>(t: &TriTensor<S>) -> RepTensor<S> {
    let d = t.dim();
    RepTensor::from_fn(d, d, false, |i, j| {
        Matrix::from_columns(d, &(0..d).map(|k| t.row(k, i, j).to_vec()).collect::<Vec<_>>())
    })
}

/// The adjoint representation `(A, ad, α)`.
pub fn adjoint_rep<S: Scalar>(a: &ThreeHomLie<S>) -> LieRep<S> {
    LieRep {
        alg: a.clone(),
        rho: ad_tensor(&a.bracket),
        phi: a.alpha.clone(),
    }
}

/// The adjoint representation `(A, L, R, α)` of a 3-Hom-pre-Lie algebra.
pub fn prelie_adjoint<S: Scalar>(a: &ThreeHomPreLie<S>) -> PreLieRep<S> {
    PreLieRep {
        alg: a.clone(),
        l: ad_tensor(&a.prod),
        r: right_mult_tensor(&a.prod),
        phi: a.alpha.clone(),
    }
}

/// `ρ(αe_i, αe_j)`, cached over basis pairs.
fn twisted_pairs<S: Scalar>(rho: &RepTensor<S>, al: &Twisted<S>) -> Vec<Matrix<S>> {
    let n = rho.algdim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(rho.eval(al.at(i), al.at(j)));
        }
    }
    out
}

/// Representation identities without the base-algebra precondition:
/// skew-symmetry of `ρ`, `φρ(x,y) = ρ(αx,αy)φ`, and the two defining
/// operator identities.
pub fn lie_rep_identities<S: Scalar>(r: &LieRep<S>) -> Report {
    let mut c = Checker::new("lie_rep");
    let n = r.alg.bracket.dim();
    let b = &r.alg.bracket;
    let rho = &r.rho;
    let phi = &r.phi;
    let al = Twisted::new(&r.alg.alpha);
    let ra = twisted_pairs(rho, &al);
    let rat = |i: usize, j: usize| &ra[i * n + j];
    for_each_tuple(n, 2, |t| {
        c.count_tuple();
        c.mat_eq("rep-skew", t, rho.get(t[0], t[1]), &rho.get(t[1], t[0]).neg());
        c.mat_eq("rep-phi", t, &phi.mul(rho.get(t[0], t[1])), &rat(t[0], t[1]).mul(phi));
    });
    for_each_tuple(n, 4, |t| {
        c.count_tuple();
        let [x1, x2, x3, x4] = [t[0], t[1], t[2], t[3]];
        let r123_4 = rho.eval(b.row(x1, x2, x3), al.at(x4)).mul(phi);
        if !c.failed("Rep1") {
            let lhs = rat(x1, x2).mul(rho.get(x3, x4)).sub(&rat(x3, x4).mul(rho.get(x1, x2)));
            let rhs = r123_4.sub(&rho.eval(b.row(x1, x2, x4), al.at(x3)).mul(phi));
            c.mat_eq("Rep1", t, &lhs, &rhs);
        }
        if !c.failed("Rep2") {
            let rhs = rat(x1, x2)
                .mul(rho.get(x3, x4))
                .add(&rat(x2, x3).mul(rho.get(x1, x4)))
                .add(&rat(x3, x1).mul(rho.get(x2, x4)));
            c.mat_eq("Rep2", t, &r123_4, &rhs);
        }
    });
    c.finish()
}

/// Full representation check. Fails with `BadBase` when the algebra itself
/// is not a 3-Hom-Lie algebra.
pub fn check_lie_rep<S: Scalar>(r: &LieRep<S>) -> Result<Report> {
    require(check_3homlie(&r.alg), Error::BadBase)?;
    Ok(lie_rep_identities(r))
}

/// The two identities every representation satisfies: the alternating sum
/// `(ρ([123],α4) - ρ([124],α3) + ρ([134],α2) - ρ([234],α1))φ = 0` and the
/// six-term quadratic identity.
pub fn rep_derived_identities<S: Scalar>(r: &LieRep<S>) -> Result<Report> {
    require(check_lie_rep(r)?, Error::BadRep)?;
    let mut c = Checker::new("lie_rep_derived");
    let n = r.alg.bracket.dim();
    let m = r.moddim();
    let b = &r.alg.bracket;
    let rho = &r.rho;
    let al = Twisted::new(&r.alg.alpha);
    let ra = twisted_pairs(rho, &al);
    let rat = |i: usize, j: usize| &ra[i * n + j];
    let zero = Matrix::zeros(m, m);
    for_each_tuple(n, 4, |t| {
        c.count_tuple();
        let [x1, x2, x3, x4] = [t[0], t[1], t[2], t[3]];
        let alt = rho
            .eval(b.row(x1, x2, x3), al.at(x4))
            .sub(&rho.eval(b.row(x1, x2, x4), al.at(x3)))
            .add(&rho.eval(b.row(x1, x3, x4), al.at(x2)))
            .sub(&rho.eval(b.row(x2, x3, x4), al.at(x1)))
            .mul(&r.phi);
        c.mat_eq("D1", t, &alt, &zero);
        let six = rat(x1, x2)
            .mul(rho.get(x3, x4))
            .add(&rat(x2, x3).mul(rho.get(x1, x4)))
            .add(&rat(x3, x1).mul(rho.get(x2, x4)))
            .add(&rat(x3, x4).mul(rho.get(x1, x2)))
            .add(&rat(x1, x4).mul(rho.get(x2, x3)))
            .add(&rat(x2, x4).mul(rho.get(x3, x1)));
        c.mat_eq("D2", t, &six, &zero);
    });
    Ok(c.finish())
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            out[(n + i, n + j)] = b[(i, j)].clone();
        }
    }
    out
}

fn embed_alg<S: Scalar>(v: &[S], m: usize) -> Vector<S> {
    let mut out = v.to_vec();
    out.extend(zero_vec::<S>(m));
    out
}

fn embed_mod<S: Scalar>(n: usize, v: Vector<S>) -> Vector<S> {
    let mut out = zero_vec::<S>(n);
    out.extend(v);
    out
}

/// Which summand a basis index of `A ⊕ V` belongs to.
enum Part {
    Alg(usize),
    Mod(usize),
}

fn part(n: usize, i: usize) -> Part {
    if i < n {
        Part::Alg(i)
    } else {
        Part::Mod(i - n)
    }
}

/// `[x1+v1, x2+v2, x3+v3] = [x1,x2,x3] + ρ(x1,x2)v3 + ρ(x3,x1)v2 + ρ(x2,x3)v1`
/// with twist `α ⊕ φ`, built without checking the representation.
pub fn semidirect_lie<S: Scalar>(r: &LieRep<S>) -> ThreeHomLie<S> {
    let n = r.alg.bracket.dim();
    let m = r.moddim();
    let b = &r.alg.bracket;
    let rho = &r.rho;
    let bracket = TriTensor::from_fn(n + m, |i, j, k| match (part(n, i), part(n, j), part(n, k)) {
        (Part::Alg(i), Part::Alg(j), Part::Alg(k)) => embed_alg(b.row(i, j, k), m),
        (Part::Alg(i), Part::Alg(j), Part::Mod(k)) => embed_mod(n, rho.get(i, j).column(k)),
        (Part::Alg(i), Part::Mod(j), Part::Alg(k)) => embed_mod(n, rho.get(k, i).column(j)),
        (Part::Mod(i), Part::Alg(j), Part::Alg(k)) => embed_mod(n, rho.get(j, k).column(i)),
        _ => zero_vec(n + m),
    });
    ThreeHomLie {
        bracket,
        alpha: direct_sum(&r.alg.alpha, &r.phi),
    }
}

/// `-(ρ(α⁻¹e_i, α⁻¹e_j) φ⁻²)ᵀ` on the dual basis.
fn star<S: Scalar>(rho: &RepTensor<S>, alpha_inv: &Matrix<S>, phi_inv2: &Matrix<S>, skew: bool) -> RepTensor<S> {
    let n = rho.algdim();
    let ai = Twisted::new(alpha_inv);
    RepTensor::from_fn(n, rho.moddim(), skew, |i, j| {
        rho.eval(ai.at(i), ai.at(j)).mul(phi_inv2).transpose().neg()
    })
}

/// Dual representation on the dual module with twist `(φ⁻¹)ᵀ`.
pub fn dual_lie_rep<S: Scalar>(r: &LieRep<S>) -> Result<LieRep<S>> {
    let phi_inv = r.phi.invert()?;
    let alpha_inv = r.alg.alpha.invert()?;
    let phi_inv2 = phi_inv.mul(&phi_inv);
    Ok(LieRep {
        alg: r.alg.clone(),
        rho: star(&r.rho, &alpha_inv, &phi_inv2, true),
        phi: phi_inv.transpose(),
    })
}

/// Dual of the adjoint representation, with twist `(α⁻¹)ᵀ`.
pub fn coadjoint_rep<S: Scalar>(a: &ThreeHomLie<S>) -> Result<LieRep<S>> {
    dual_lie_rep(&adjoint_rep(a))
}

/// `μ(x, y) = l(x, y) + r(x, y) - r(y, x)`.
pub fn mu_tensor<S: Scalar>(l: &RepTensor<S>, r: &RepTensor<S>) -> RepTensor<S> {
    let mut m = l.add(r).add(&r.swapped().neg());
    m.skew = true;
    m
}

/// Identities of a pre-Lie representation without the base precondition.
pub fn prelie_rep_identities<S: Scalar>(p: &PreLieRep<S>) -> Report {
    let mut c = Checker::new("prelie_rep");
    let sub = LieRep {
        alg: cyclic_bracket(&p.alg),
        rho: p.l.clone(),
        phi: p.phi.clone(),
    };
    c.include("l", &lie_rep_identities(&sub));
    let n = p.alg.prod.dim();
    let prod = &p.alg.prod;
    let (l, r, phi) = (&p.l, &p.r, &p.phi);
    let mu = mu_tensor(l, r);
    let al = Twisted::new(&p.alg.alpha);
    let la = twisted_pairs(l, &al);
    let ra = twisted_pairs(r, &al);
    let lat = |i: usize, j: usize| &la[i * n + j];
    let rat = |i: usize, j: usize| &ra[i * n + j];
    for_each_tuple(n, 2, |t| {
        c.count_tuple();
        c.mat_eq("r-phi", t, &phi.mul(r.get(t[0], t[1])), &rat(t[0], t[1]).mul(phi));
    });
    let cyc = |i: usize, j: usize, k: usize| {
        let mut v = prod.row(i, j, k).to_vec();
        crate::linalg::axpy(&mut v, &S::one(), prod.row(j, k, i));
        crate::linalg::axpy(&mut v, &S::one(), prod.row(k, i, j));
        v
    };
    for_each_tuple(n, 4, |t| {
        c.count_tuple();
        let [x1, x2, x3, x4] = [t[0], t[1], t[2], t[3]];
        let l12_r34 = lat(x1, x2).mul(r.get(x3, x4));
        let r34_mu12 = rat(x3, x4).mul(mu.get(x1, x2));
        let rc123_4 = r.eval(&cyc(x1, x2, x3), al.at(x4)).mul(phi);
        let r1_p234 = r.eval(al.at(x1), prod.row(x2, x3, x4)).mul(phi);
        let l23_r14 = lat(x2, x3).mul(r.get(x1, x4));
        if !c.failed("rep1") {
            let rhs = r34_mu12
                .add(&rc123_4)
                .add(&r.eval(al.at(x3), prod.row(x1, x2, x4)).mul(phi));
            c.mat_eq("rep1", t, &l12_r34, &rhs);
        }
        if !c.failed("rep2") {
            let rhs = l12_r34.add(&l23_r14).add(&lat(x3, x1).mul(r.get(x2, x4)));
            c.mat_eq("rep2", t, &rc123_4, &rhs);
        }
        if !c.failed("rep3") {
            let rhs = r34_mu12.sub(&rat(x2, x4).mul(mu.get(x1, x3))).add(&l23_r14);
            c.mat_eq("rep3", t, &r1_p234, &rhs);
        }
        if !c.failed("rep4") {
            let rhs = l12_r34
                .sub(&r.eval(al.at(x2), prod.row(x1, x3, x4)).mul(phi))
                .add(&r1_p234);
            c.mat_eq("rep4", t, &r34_mu12, &rhs);
        }
    });
    c.finish()
}

/// Full pre-Lie representation check; `BadBase` when the algebra fails.
pub fn check_prelie_rep<S: Scalar>(p: &PreLieRep<S>) -> Result<Report> {
    require(check_3hompre(&p.alg), Error::BadBase)?;
    Ok(prelie_rep_identities(p))
}

/// `{x1+u1, x2+u2, x3+u3} = {x1,x2,x3} + l(x1,x2)u3 - r(x1,x3)u2 + r(x2,x3)u1`
/// with twist `α ⊕ φ`, built without checking the representation.
pub fn semidirect_prelie<S: Scalar>(p: &PreLieRep<S>) -> ThreeHomPreLie<S> {
    let n = p.alg.prod.dim();
    let m = p.moddim();
    let prod = &p.alg.prod;
    let out = TriTensor::from_fn(n + m, |i, j, k| match (part(n, i), part(n, j), part(n, k)) {
        (Part::Alg(i), Part::Alg(j), Part::Alg(k)) => embed_alg(prod.row(i, j, k), m),
        (Part::Alg(i), Part::Alg(j), Part::Mod(k)) => embed_mod(n, p.l.get(i, j).column(k)),
        (Part::Alg(i), Part::Mod(j), Part::Alg(k)) => {
            embed_mod(n, p.r.get(i, k).column(j).into_iter().map(|x| -x).collect())
        }
        (Part::Mod(i), Part::Alg(j), Part::Alg(k)) => embed_mod(n, p.r.get(j, k).column(i)),
        _ => zero_vec(n + m),
    });
    ThreeHomPreLie {
        prod: out,
        alpha: direct_sum(&p.alg.alpha, &p.phi),
    }
}

/// `μ` as a representation of the sub-adjacent 3-Hom-Lie algebra.
pub fn mu_rep<S: Scalar>(p: &PreLieRep<S>) -> Result<LieRep<S>> {
    require(check_prelie_rep(p)?, Error::BadRep)?;
    Ok(LieRep {
        alg: cyclic_bracket(&p.alg),
        rho: mu_tensor(&p.l, &p.r),
        phi: p.phi.clone(),
    })
}

/// Dual representation `(μ⋆, -r⋆)` with twist `(φ⁻¹)ᵀ`.
pub fn dual_prelie_rep<S: Scalar>(p: &PreLieRep<S>) -> Result<PreLieRep<S>> {
    let phi_inv = p.phi.invert()?;
    let alpha_inv = p.alg.alpha.invert()?;
    let phi_inv2 = phi_inv.mul(&phi_inv);
    let l_star = star(&p.l, &alpha_inv, &phi_inv2, true);
    let r_star = star(&p.r, &alpha_inv, &phi_inv2, false);
    Ok(PreLieRep {
        alg: p.alg.clone(),
        l: mu_tensor(&l_star, &r_star),
        r: r_star.neg(),
        phi: phi_inv.transpose(),
    })
}

/// Twists a representation of an untwisted algebra by an algebra morphism
/// `α` and a module map `φ` intertwining both actions: the result acts by
/// `φ∘l`, `φ∘r` on the algebra with product `α∘{·,·,·}` and twist `α`.
pub fn twist_rep<S: Scalar>(p: &PreLieRep<S>, alpha: &Matrix<S>, phi: &Matrix<S>) -> Result<PreLieRep<S>> {
    let n = p.alg.prod.dim();
    check_square("algebra morphism", alpha, n)?;
    check_square("module map", phi, p.moddim())?;
    require(check_prelie_rep(p)?, Error::BadRep)?;
    let mut c = Checker::new("twist_rep");
    let al = Twisted::new(alpha);
    for_each_tuple(n, 3, |t| {
        c.count_tuple();
        let lhs = alpha.apply(p.alg.prod.row(t[0], t[1], t[2]));
        let rhs = p.alg.prod.eval(al.at(t[0]), al.at(t[1]), al.at(t[2]));
        c.vec_eq("morphism", t, &lhs, &rhs);
    });
    for_each_tuple(n, 2, |t| {
        c.count_tuple();
        let (i, j) = (t[0], t[1]);
        c.mat_eq("phi-l", t, &phi.mul(p.l.get(i, j)), &p.l.eval(al.at(i), al.at(j)).mul(phi));
        c.mat_eq("phi-r", t, &phi.mul(p.r.get(i, j)), &p.r.eval(al.at(i), al.at(j)).mul(phi));
    });
    require(c.finish(), Error::BadRep)?;
    Ok(PreLieRep {
        alg: ThreeHomPreLie {
            prod: p.alg.prod.post(alpha),
            alpha: alpha.clone(),
        },
        l: p.l.map_mats(true, |m| phi.mul(m)),
        r: p.r.map_mats(false, |m| phi.mul(m)),
        phi: phi.clone(),
    })
}
