//! Deformation families, Nijenhuis operators and the deformations they
//! generate.

use crate::algebras::{
    check_3homldend, check_multiplicative, commutator_lie, horizontal_prelie, vertical_prelie,
    DendAxioms, TernaryAlgebra, ThreeHomLDend, ThreeHomPreLie, DEND_AXIOMS,
};
use crate::error::{require, Error, Result};
use crate::linalg::{add_vec, Matrix};
use crate::operators::ldend_from_rb;
use crate::report::{for_each_tuple, Checker, Report};
use crate::scalar::Scalar;
use crate::tensor::{tri_twist, TriTensor};

/// A map `N` together with the algebra it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisCandidate<S, A> {
    pub n: Matrix<S>,
    pub target: A,
}

impl<S: Scalar, A: TernaryAlgebra<S>> NijenhuisCandidate<S, A> {
    pub fn new(n: Matrix<S>, target: A) -> Result<Self> {
        crate::algebras::check_square("operator", &n, target.dim())?;
        Ok(Self { n, target })
    }
}

/// `p(x,y,z) + λω¹(x,y,z) + λ²ω²(x,y,z)` for both dendriform products, with
/// the base twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFamily<S> {
    pub base: ThreeHomLDend<S>,
    pub omega1_nw: TriTensor<S>,
    pub omega1_ne: TriTensor<S>,
    pub omega2_nw: TriTensor<S>,
    pub omega2_ne: TriTensor<S>,
    pub order: usize,
}

impl<S: Scalar> DeformationFamily<S> {
    /// Coefficient of `λᵏ` for `(nw, ne)`.
    fn coefficient(&self, k: usize) -> (&TriTensor<S>, &TriTensor<S>) {
        match k {
            0 => (&self.base.nw, &self.base.ne),
            1 => (&self.omega1_nw, &self.omega1_ne),
            _ => (&self.omega2_nw, &self.omega2_ne),
        }
    }
}

/// Expands every dendriform axiom of the family in `λ` and checks that the
/// coefficients of `λ⁰ … λ^order` vanish. Identity names carry the degree,
/// as in `LD2@1`.
pub fn check_deformation<S: Scalar>(d: &DeformationFamily<S>) -> Result<Report> {
    if d.order > 2 {
        return Err(Error::OrderTooHigh(d.order));
    }
    require(check_3homldend(&d.base), Error::BadBase)?;
    let dim = d.base.dim();
    for (what, t) in [
        ("first-order nw", &d.omega1_nw),
        ("first-order ne", &d.omega1_ne),
        ("second-order nw", &d.omega2_nw),
        ("second-order ne", &d.omega2_ne),
    ] {
        crate::algebras::check_tensor(what, t, dim)?;
    }
    let alpha = &d.base.alpha;
    let mut c = Checker::new("deformation");
    for k in 0..=d.order {
        let (nw, ne) = d.coefficient(k);
        let ld0 = format!("LD0@{k}");
        for_each_tuple(dim, 3, |t| {
            c.count_tuple();
            let swapped: Vec<S> = nw.row(t[1], t[0], t[2]).iter().map(|x| -x.clone()).collect();
            c.vec_eq(&ld0, t, nw.row(t[0], t[1], t[2]), &swapped);
        });
        let mult = format!("mult@{k}");
        check_multiplicative(&mut c, &mult, nw, alpha);
        check_multiplicative(&mut c, &mult, ne, alpha);
        let terms: Vec<DendAxioms<S>> = (0..=k)
            .map(|a| DendAxioms::new(d.coefficient(a), d.coefficient(k - a), alpha))
            .collect();
        let ids: Vec<String> = DEND_AXIOMS.iter().map(|id| format!("{id}@{k}")).collect();
        for_each_tuple(dim, 5, |t| {
            c.count_tuple();
            if ids.iter().all(|id| c.failed(id)) {
                return;
            }
            let mut sums = terms[0].eval(t);
            for term in &terms[1..] {
                for (acc, (l, r)) in sums.iter_mut().zip(term.eval(t)) {
                    acc.0 = add_vec(&acc.0, &l);
                    acc.1 = add_vec(&acc.1, &r);
                }
            }
            for (id, (lhs, rhs)) in ids.iter().zip(sums) {
                c.vec_eq(id, t, &lhs, &rhs);
            }
        });
    }
    Ok(c.finish())
}

/// `p(Nx,y,z) + p(x,Ny,z) + p(x,y,Nz)`.
pub(crate) fn one_slot<S: Scalar>(p: &TriTensor<S>, n: &Matrix<S>) -> TriTensor<S> {
    slot_sum(p, n, &[[true, false, false], [false, true, false], [false, false, true]])
}

/// `p(Nx,Ny,z) + p(Nx,y,Nz) + p(x,Ny,Nz)`.
pub(crate) fn two_slots<S: Scalar>(p: &TriTensor<S>, n: &Matrix<S>) -> TriTensor<S> {
    slot_sum(p, n, &[[true, true, false], [true, false, true], [false, true, true]])
}

fn slot_sum<S: Scalar>(p: &TriTensor<S>, n: &Matrix<S>, patterns: &[[bool; 3]]) -> TriTensor<S> {
    patterns.iter().fold(TriTensor::zeros(p.dim()), |acc, &slots| {
        acc.add(&tri_twist(p, n, slots, None).expect("operator matches algebra"))
    })
}

/// First- and second-order deformed products
/// `ω¹ = Σp(N··) - N∘p` and `ω² = Σp(NN·) - N∘ω¹`.
fn deformed<S: Scalar>(p: &TriTensor<S>, n: &Matrix<S>) -> (TriTensor<S>, TriTensor<S>) {
    let w1 = one_slot(p, n).sub(&p.post(n));
    let w2 = two_slots(p, n).sub(&w1.post(n));
    (w1, w2)
}

fn check_commutes_with_twist<S: Scalar>(c: &mut Checker, n: &Matrix<S>, alpha: &Matrix<S>) {
    c.mat_eq("N-alpha", &[], &alpha.mul(n), &n.mul(alpha));
}

/// `αN = Nα` and, for each product,
/// `p(Nx,Ny,Nz) = N(Σp(NN·) - NΣp(N··) + N²p)` on all basis triples. Does not
/// check the target.
pub fn nijenhuis_identities<S: Scalar, A: TernaryAlgebra<S>>(n: &Matrix<S>, target: &A) -> Report {
    let mut c = Checker::new("nijenhuis");
    check_commutes_with_twist(&mut c, n, target.alpha());
    for (name, p) in target.products() {
        let lhs = tri_twist(p, n, [true; 3], None).expect("operator matches algebra");
        let (_, w2) = deformed(p, n);
        let rhs = w2.post(n);
        compare_tensors(&mut c, &format!("nijenhuis-{name}"), &lhs, &rhs);
    }
    c.finish()
}

pub(crate) fn compare_tensors<S: Scalar>(c: &mut Checker, id: &str, lhs: &TriTensor<S>, rhs: &TriTensor<S>) {
    for_each_tuple(lhs.dim(), 3, |t| {
        if c.failed(id) {
            return;
        }
        c.count_tuple();
        c.vec_eq(id, t, lhs.row(t[0], t[1], t[2]), rhs.row(t[0], t[1], t[2]));
    });
}

/// Nijenhuis check; `BadBase` when the target fails its own axioms.
pub fn check_nijenhuis<S: Scalar, A: TernaryAlgebra<S>>(c: &NijenhuisCandidate<S, A>) -> Result<Report> {
    require(c.target.check(), Error::BadBase)?;
    Ok(nijenhuis_identities(&c.n, &c.target))
}

fn require_nijenhuis<S: Scalar, A: TernaryAlgebra<S>>(c: &NijenhuisCandidate<S, A>) -> Result<()> {
    require(check_nijenhuis(c)?, Error::NotNijenhuis)
}

/// The algebra with the first-order products `Σp(N··) - N∘p`, for any kind.
pub fn first_order<S: Scalar, A: TernaryAlgebra<S>>(c: &NijenhuisCandidate<S, A>) -> Result<A> {
    require_nijenhuis(c)?;
    let ps = c.target.products().into_iter().map(|(_, p)| deformed(p, &c.n).0).collect();
    Ok(c.target.rebuild(ps, c.target.alpha().clone()))
}

/// The first-order deformed algebra and the order-2 family generated by `N`.
pub fn nijenhuis_deform<S: Scalar>(
    c: &NijenhuisCandidate<S, ThreeHomLDend<S>>,
) -> Result<(ThreeHomLDend<S>, DeformationFamily<S>)> {
    require_nijenhuis(c)?;
    let a = &c.target;
    let (nw1, nw2) = deformed(&a.nw, &c.n);
    let (ne1, ne2) = deformed(&a.ne, &c.n);
    let first = ThreeHomLDend {
        nw: nw1.clone(),
        ne: ne1.clone(),
        alpha: a.alpha.clone(),
    };
    let family = DeformationFamily {
        base: a.clone(),
        omega1_nw: nw1,
        omega1_ne: ne1,
        omega2_nw: nw2,
        omega2_ne: ne2,
        order: 2,
    };
    Ok((first, family))
}

/// The algebra with the second-order products `Σp(NN·) - N∘ω¹`. The
/// Nijenhuis identity states that `N` maps it onto the base.
pub fn second_order<S: Scalar, A: TernaryAlgebra<S>>(c: &NijenhuisCandidate<S, A>) -> Result<A> {
    require_nijenhuis(c)?;
    let ps = c.target.products().into_iter().map(|(_, p)| deformed(p, &c.n).1).collect();
    Ok(c.target.rebuild(ps, c.target.alpha().clone()))
}

/// The equations making `id + λN` a morphism from the deformed family to the
/// base: `ω¹ + N∘p = Σp(N··)`, `ω² + N∘ω¹ = Σp(NN·)`, `N∘ω² = p(N,N,N)`
/// for both products, and `αN = Nα`.
pub fn check_trivial_deformation<S: Scalar>(c: &NijenhuisCandidate<S, ThreeHomLDend<S>>) -> Result<Report> {
    let (_, f) = nijenhuis_deform(c)?;
    let n = &c.n;
    let mut ch = Checker::new("trivial_deformation");
    check_commutes_with_twist(&mut ch, n, &c.target.alpha);
    let parts = [
        ("nw", &c.target.nw, &f.omega1_nw, &f.omega2_nw),
        ("ne", &c.target.ne, &f.omega1_ne, &f.omega2_ne),
    ];
    for (name, p, w1, w2) in parts {
        compare_tensors(&mut ch, &format!("order1-{name}"), &w1.add(&p.post(n)), &one_slot(p, n));
        compare_tensors(&mut ch, &format!("order2-{name}"), &w2.add(&w1.post(n)), &two_slots(p, n));
        let top = tri_twist(p, n, [true; 3], None)?;
        compare_tensors(&mut ch, &format!("order3-{name}"), &w2.post(n), &top);
    }
    Ok(ch.finish())
}

/// `N∘q = p(N,N,N)` for each pair of corresponding products.
pub fn morphism_report<S: Scalar, A: TernaryAlgebra<S>>(n: &Matrix<S>, src: &A, dst: &A) -> Report {
    let mut c = Checker::new("morphism");
    c.mat_eq("alpha", &[], &n.mul(src.alpha()), &dst.alpha().mul(n));
    for ((name, q), (_, p)) in src.products().into_iter().zip(dst.products()) {
        let rhs = tri_twist(p, n, [true; 3], None).expect("operator matches algebra");
        compare_tensors(&mut c, name, &q.post(n), &rhs);
    }
    c.finish()
}

/// Whether `N` stays Nijenhuis on the horizontal, vertical and commutator
/// algebras.
pub fn nijenhuis_descends<S: Scalar>(c: &NijenhuisCandidate<S, ThreeHomLDend<S>>) -> Result<Report> {
    require_nijenhuis(c)?;
    let mut ch = Checker::new("nijenhuis_descends");
    let h = NijenhuisCandidate::new(c.n.clone(), horizontal_prelie(&c.target)?)?;
    ch.include("horizontal", &check_nijenhuis(&h)?);
    let v = NijenhuisCandidate::new(c.n.clone(), vertical_prelie(&c.target)?)?;
    ch.include("vertical", &check_nijenhuis(&v)?);
    let l = NijenhuisCandidate::new(c.n.clone(), commutator_lie(&c.target)?)?;
    ch.include("commutator", &check_nijenhuis(&l)?);
    Ok(ch.finish())
}

/// `N∘p = p(N··) + p(·N·) + p(··N)` for each product and `αN = Nα`.
pub fn derivation_report<S: Scalar, A: TernaryAlgebra<S>>(n: &Matrix<S>, target: &A) -> Report {
    let mut c = Checker::new("derivation");
    check_commutes_with_twist(&mut c, n, target.alpha());
    for (name, p) in target.products() {
        compare_tensors(&mut c, &format!("derivation-{name}"), &p.post(n), &one_slot(p, n));
    }
    c.finish()
}

/// The weight-zero Rota-Baxter identity `p(Nx,Ny,Nz) = N Σp(NN·)` for each
/// product.
pub fn rota_baxter_report<S: Scalar, A: TernaryAlgebra<S>>(n: &Matrix<S>, target: &A) -> Report {
    let mut c = Checker::new("rota_baxter");
    for (name, p) in target.products() {
        let lhs = tri_twist(p, n, [true; 3], None).expect("operator matches algebra");
        compare_tensors(&mut c, &format!("rb-{name}"), &lhs, &two_slots(p, n).post(n));
    }
    c.finish()
}

/// For a derivation `N`, asserts that the Nijenhuis verdict equals the
/// Rota-Baxter verdict.
pub fn derivation_rb_bridge<S: Scalar>(a: &ThreeHomLDend<S>, n: &Matrix<S>) -> Result<Report> {
    crate::algebras::check_square("operator", n, a.dim())?;
    require(derivation_report(n, a), Error::NotADerivation)?;
    let nij = nijenhuis_identities(n, a).passed();
    let rb = rota_baxter_report(n, a).passed();
    let mut c = Checker::new("derivation_bridge");
    c.holds(
        "verdicts-agree",
        &[],
        nij == rb,
        &format!("nijenhuis {}", verdict(nij)),
        &format!("rota-baxter {}", verdict(rb)),
    );
    Ok(c.finish())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Checks `N` on the dendriform algebra built from `rb`, after confirming
/// that `N` is Nijenhuis on the pre-Lie algebra and commutes with `rb`.
pub fn check_nijenhuis_prelie_compat<S: Scalar>(
    a: &ThreeHomPreLie<S>,
    n: &Matrix<S>,
    rb: &Matrix<S>,
) -> Result<Report> {
    require_nijenhuis(&NijenhuisCandidate::new(n.clone(), a.clone())?)?;
    let ld = ldend_from_rb(a, rb)?;
    if n.mul(rb) != rb.mul(n) {
        return Err(Error::NotCommuting);
    }
    check_nijenhuis(&NijenhuisCandidate::new(n.clone(), ld)?)
}
