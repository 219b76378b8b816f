//! Product structures (`E² = id`) and complex structures (`J² = -id`) on
//! 3-Hom-L-dendriform algebras.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::algebras::{check_3homldend, check_square, TernaryAlgebra, ThreeHomLDend};
use crate::error::{require, Error, Result};
use crate::linalg::{conj_vec, in_span, scale_vec, Matrix, Vector};
use crate::nijenhuis::{compare_tensors, one_slot, two_slots};
use crate::report::{for_each_tuple, Checker, Report};
use crate::scalar::{GaussRational, Rational, Scalar};
use crate::tensor::{tri_twist, TriTensor};

/// Candidate product structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCandidate<S> {
    pub e: Matrix<S>,
    pub target: ThreeHomLDend<S>,
}

/// Candidate complex structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCandidate<S> {
    pub j: Matrix<S>,
    pub target: ThreeHomLDend<S>,
}

impl<S: Scalar> ProductCandidate<S> {
    pub fn new(e: Matrix<S>, target: ThreeHomLDend<S>) -> Result<Self> {
        check_square("product structure", &e, target.dim())?;
        Ok(Self { e, target })
    }
}

impl<S: Scalar> ComplexCandidate<S> {
    pub fn new(j: Matrix<S>, target: ThreeHomLDend<S>) -> Result<Self> {
        check_square("complex structure", &j, target.dim())?;
        Ok(Self { j, target })
    }
}

/// Two complementary subspaces given by spanning coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<S> {
    pub basis_plus: Vec<Vector<S>>,
    pub basis_minus: Vec<Vector<S>>,
}

impl<S: Scalar> Decomposition<S> {
    /// Columns `basis_plus ++ basis_minus`.
    fn change_of_basis(&self, dim: usize) -> Matrix<S> {
        let cols: Vec<Vector<S>> = self.basis_plus.iter().chain(&self.basis_minus).cloned().collect();
        Matrix::from_columns(dim, &cols)
    }

    /// The map acting by `plus` on the first part and `minus` on the second.
    fn diagonal_map(&self, dim: usize, plus: S, minus: S) -> Result<Matrix<S>> {
        let p = self.change_of_basis(dim);
        let mut d = vec![plus; self.basis_plus.len()];
        d.extend(vec![minus; self.basis_minus.len()]);
        Ok(p.mul(&Matrix::diag(d)).mul(&p.invert()?))
    }
}

/// The four special regimes of product and complex structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecialType {
    Strict,
    Abelian,
    Strong,
    Perfect,
}

impl SpecialType {
    pub const ALL: [SpecialType; 4] = [Self::Strict, Self::Abelian, Self::Strong, Self::Perfect];

    pub fn name(self) -> &'static str {
        match self {
            Self::Strict => "strict",
            Self::Abelian => "abelian",
            Self::Strong => "strong",
            Self::Perfect => "perfect",
        }
    }
}

impl fmt::Display for SpecialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Labels found by a classifier, with the report behind each verdict.
#[derive(Clone, Debug)]
pub struct Classification {
    pub labels: BTreeSet<SpecialType>,
    pub reports: Vec<(SpecialType, Report)>,
}

impl Classification {
    fn from_reports(reports: Vec<(SpecialType, Report)>) -> Self {
        let labels = reports.iter().filter(|(_, r)| r.passed()).map(|(k, _)| *k).collect();
        Self { labels, reports }
    }

    pub fn has(&self, kind: SpecialType) -> bool {
        self.labels.contains(&kind)
    }

    /// Strict structures are perfect.
    pub fn is_consistent(&self) -> bool {
        !self.has(SpecialType::Strict) || self.has(SpecialType::Perfect)
    }
}

fn at<S: Scalar>(p: &TriTensor<S>, m: &Matrix<S>, slots: [bool; 3]) -> TriTensor<S> {
    tri_twist(p, m, slots, None).expect("map matches algebra")
}

const FIRST: [bool; 3] = [true, false, false];
const SECOND: [bool; 3] = [false, true, false];
const THIRD: [bool; 3] = [false, false, true];
const ALL: [bool; 3] = [true; 3];

fn products<S: Scalar>(a: &ThreeHomLDend<S>) -> [(&'static str, &TriTensor<S>); 2] {
    [("nw", &a.nw), ("ne", &a.ne)]
}

/// `m² = sign·id` and `mα = αm`.
fn almost_identities<S: Scalar>(c: &mut Checker, id: &str, m: &Matrix<S>, sign: i64, alpha: &Matrix<S>) {
    let n = m.rows();
    c.mat_eq(id, &[], &m.mul(m), &Matrix::scalar(n, S::from_i64(sign)));
    c.mat_eq("commutes-alpha", &[], &m.mul(alpha), &alpha.mul(m));
}

/// `E² = id`, `Eα = αE` and, for both products,
/// `Ep = p(Ex,Ey,Ez) + Σp(E··) - EΣp(EE·)`. Does not check the target.
pub fn product_identities<S: Scalar>(c: &ProductCandidate<S>) -> Report {
    let mut ch = Checker::new("product");
    let e = &c.e;
    almost_identities(&mut ch, "E2", e, 1, &c.target.alpha);
    for (name, p) in products(&c.target) {
        let rhs = at(p, e, ALL).add(&one_slot(p, e)).sub(&two_slots(p, e).post(e));
        compare_tensors(&mut ch, &format!("integrable-{name}"), &p.post(e), &rhs);
    }
    ch.finish()
}

/// Product structure check; `BadBase` when the target is not dendriform.
pub fn check_product<S: Scalar>(c: &ProductCandidate<S>) -> Result<Report> {
    require(check_3homldend(&c.target), Error::BadBase)?;
    Ok(product_identities(c))
}

/// `J² = -id`, `Jα = αJ` and, for both products,
/// `Jp = -p(Jx,Jy,Jz) + Σp(J··) + JΣp(JJ·)`. Does not check the target.
pub fn complex_identities<S: Scalar>(c: &ComplexCandidate<S>) -> Report {
    let mut ch = Checker::new("complex");
    let j = &c.j;
    almost_identities(&mut ch, "J2", j, -1, &c.target.alpha);
    for (name, p) in products(&c.target) {
        let rhs = one_slot(p, j).sub(&at(p, j, ALL)).add(&two_slots(p, j).post(j));
        compare_tensors(&mut ch, &format!("integrable-{name}"), &p.post(j), &rhs);
    }
    ch.finish()
}

/// Complex structure check; `BadBase` when the target is not dendriform.
pub fn check_complex<S: Scalar>(c: &ComplexCandidate<S>) -> Result<Report> {
    require(check_3homldend(&c.target), Error::BadBase)?;
    Ok(complex_identities(c))
}

/// Direct sum, stability under `α`, and closure of each part under both
/// products.
pub fn check_decomposition<S: Scalar>(a: &ThreeHomLDend<S>, d: &Decomposition<S>) -> Report {
    let mut c = Checker::new("decomposition");
    let dim = a.dim();
    let total = d.basis_plus.len() + d.basis_minus.len();
    let lengths_ok = d.basis_plus.iter().chain(&d.basis_minus).all(|v| v.len() == dim);
    let rank = if lengths_ok { d.change_of_basis(dim).rank() } else { 0 };
    let ok = lengths_ok && total == dim && rank == dim;
    c.holds(
        "direct-sum",
        &[],
        ok,
        &format!("{total} vectors of rank {rank}"),
        &format!("{dim} independent vectors"),
    );
    if !ok {
        return c.finish();
    }
    for (part, basis) in [("plus", &d.basis_plus), ("minus", &d.basis_minus)] {
        let stable = format!("alpha-{part}");
        for (i, v) in basis.iter().enumerate() {
            let image = a.alpha.apply(v);
            let inside = in_span(basis, &image);
            c.holds(&stable, &[i], inside, &crate::linalg::render_vec(&image), "in the part");
        }
        let closed = format!("closed-{part}");
        for_each_tuple(basis.len(), 3, |t| {
            if c.failed(&closed) {
                return;
            }
            c.count_tuple();
            for (_, p) in products(a) {
                let v = p.eval(&basis[t[0]], &basis[t[1]], &basis[t[2]]);
                let inside = in_span(basis, &v);
                c.holds(&closed, t, inside, &crate::linalg::render_vec(&v), "in the part");
            }
        });
    }
    c.finish()
}

fn require_decomposition<S: Scalar>(a: &ThreeHomLDend<S>, d: &Decomposition<S>) -> Result<()> {
    let r = check_decomposition(a, d);
    match r.first_violation() {
        None => Ok(()),
        Some(v) => Err(Error::NotADecomposition(format!(
            "{} fails at {:?}: {}",
            v.identity, v.tuple, v.lhs
        ))),
    }
}

/// The `±1` eigenspaces of a product structure, verified as subalgebras.
pub fn product_decompose<S: Scalar>(c: &ProductCandidate<S>) -> Result<Decomposition<S>> {
    require(check_product(c)?, Error::NotAProduct)?;
    let n = c.e.rows();
    let id = Matrix::identity(n);
    let d = Decomposition {
        basis_plus: c.e.sub(&id).kernel(),
        basis_minus: c.e.add(&id).kernel(),
    };
    require_decomposition(&c.target, &d)?;
    Ok(d)
}

/// `E(x + a) = x - a` for `x` in the first part and `a` in the second.
pub fn product_from_decomposition<S: Scalar>(
    a: &ThreeHomLDend<S>,
    d: &Decomposition<S>,
) -> Result<ProductCandidate<S>> {
    require_decomposition(a, d)?;
    let e = d.diagonal_map(a.dim(), S::one(), -S::one())?;
    ProductCandidate::new(e, a.clone())
}

/// Reports for the four special identity families, with `m` acting and
/// `sign = 1` for product structures, `-1` for complex ones.
fn special_reports<S: Scalar>(
    suite: &str,
    m: &Matrix<S>,
    sign: i64,
    a: &ThreeHomLDend<S>,
) -> Vec<(SpecialType, Report)> {
    let s = S::from_i64(sign);
    let mut out = Vec::new();

    let mut c = Checker::new(&format!("{suite}-strict"));
    for (name, p) in products(a) {
        let mp = p.post(m);
        compare_tensors(&mut c, &format!("first-{name}"), &mp, &at(p, m, FIRST));
        if name == "ne" {
            compare_tensors(&mut c, &format!("second-{name}"), &mp, &at(p, m, SECOND));
        }
        compare_tensors(&mut c, &format!("third-{name}"), &mp, &at(p, m, THIRD));
    }
    out.push((SpecialType::Strict, c.finish()));

    // product: p = -Σp(·EE); complex: p = Σp(·JJ)
    let mut c = Checker::new(&format!("{suite}-abelian"));
    for (name, p) in products(a) {
        let rhs = two_slots(p, m).scale(&-s.clone());
        compare_tensors(&mut c, &format!("abelian-{name}"), p, &rhs);
    }
    out.push((SpecialType::Abelian, c.finish()));

    // product: p = EΣp(E··); complex: p = -JΣp(J··)
    let mut c = Checker::new(&format!("{suite}-strong"));
    for (name, p) in products(a) {
        let rhs = one_slot(p, m).post(m).scale(&s);
        compare_tensors(&mut c, &format!("strong-{name}"), p, &rhs);
    }
    out.push((SpecialType::Strong, c.finish()));

    // product: Ep = p(E,E,E); complex: Jp = -p(J,J,J)
    let mut c = Checker::new(&format!("{suite}-perfect"));
    for (name, p) in products(a) {
        let rhs = at(p, m, ALL).scale(&s);
        compare_tensors(&mut c, &format!("perfect-{name}"), &p.post(m), &rhs);
    }
    out.push((SpecialType::Perfect, c.finish()));
    out
}

/// Classifies a product structure. With `almost`, only `E² = id` and
/// `Eα = αE` are required up front.
pub fn classify_product<S: Scalar>(c: &ProductCandidate<S>, almost: bool) -> Result<Classification> {
    require(check_3homldend(&c.target), Error::BadBase)?;
    let pre = product_identities(c);
    let blocking = pre
        .violations
        .iter()
        .any(|v| !almost || !v.identity.starts_with("integrable"));
    if blocking {
        return Err(Error::NotAProduct(Box::new(pre)));
    }
    Ok(Classification::from_reports(special_reports("product", &c.e, 1, &c.target)))
}

/// Classifies a complex structure. With `almost`, only `J² = -id` and
/// `Jα = αJ` are required up front.
pub fn classify_complex<S: Scalar>(c: &ComplexCandidate<S>, almost: bool) -> Result<Classification> {
    require(check_3homldend(&c.target), Error::BadBase)?;
    let pre = complex_identities(c);
    let blocking = pre
        .violations
        .iter()
        .any(|v| !almost || !v.identity.starts_with("integrable"));
    if blocking {
        return Err(Error::NotAComplexStructure(Box::new(pre)));
    }
    Ok(Classification::from_reports(special_reports("complex", &c.j, -1, &c.target)))
}

fn require_real<S: Scalar>(what: &str) -> Result<()> {
    if S::COMPLEX {
        Err(Error::ModeError(format!("{what} needs a real algebra")))
    } else {
        Ok(())
    }
}

fn to_gauss<S: Scalar>(x: &S) -> GaussRational {
    GaussRational::new(x.re(), x.im())
}

/// Reinterprets a real matrix over the Gaussian rationals.
pub fn complexify_map<S: Scalar>(m: &Matrix<S>) -> Matrix<GaussRational> {
    m.map(to_gauss)
}

/// The same structure constants over the Gaussian rationals.
pub fn complexify<S: Scalar>(a: &ThreeHomLDend<S>) -> Result<ThreeHomLDend<GaussRational>> {
    require_real::<S>("complexification")?;
    Ok(ThreeHomLDend {
        nw: a.nw.map(to_gauss),
        ne: a.ne.map(to_gauss),
        alpha: complexify_map(&a.alpha),
    })
}

/// Conjugation commutes with both products and the twist map, tested on
/// inputs drawn from `e_k` and `i·e_k`.
pub fn conjugation_report(a: &ThreeHomLDend<GaussRational>) -> Report {
    let mut c = Checker::new("conjugation");
    let d = a.dim();
    let i = GaussRational::imag_unit().expect("complex field");
    let inputs: Vec<Vector<GaussRational>> = (0..2 * d)
        .map(|k| {
            let e = crate::linalg::basis_vec(d, k % d);
            if k < d {
                e
            } else {
                scale_vec(&i, &e)
            }
        })
        .collect();
    for (k, v) in inputs.iter().enumerate() {
        let lhs = conj_vec(&a.alpha.apply(v));
        let rhs = a.alpha.apply(&conj_vec(v));
        c.vec_eq("alpha", &[k], &lhs, &rhs);
    }
    for (name, p) in products(a) {
        for_each_tuple(2 * d, 3, |t| {
            c.count_tuple();
            let (x, y, z) = (&inputs[t[0]], &inputs[t[1]], &inputs[t[2]]);
            let lhs = conj_vec(&p.eval(x, y, z));
            let rhs = p.eval(&conj_vec(x), &conj_vec(y), &conj_vec(z));
            c.vec_eq(name, t, &lhs, &rhs);
        });
    }
    c.finish()
}

/// `𝔮 = span{e_k - iJe_k}` and its conjugate, verified as a decomposition of
/// the complexification into subalgebras.
pub fn complex_decompose<S: Scalar>(c: &ComplexCandidate<S>) -> Result<Decomposition<GaussRational>> {
    require_real::<S>("complex decomposition")?;
    require(check_complex(c)?, Error::NotAComplexStructure)?;
    let n = c.j.rows();
    let i = GaussRational::imag_unit().expect("complex field");
    let jc = complexify_map(&c.j);
    let vs: Vec<Vector<GaussRational>> = (0..n)
        .map(|k| {
            let e = crate::linalg::basis_vec(n, k);
            crate::linalg::sub_vec(&e, &scale_vec(&i, &jc.apply(&e)))
        })
        .collect();
    let q = crate::linalg::span_basis(n, &vs);
    let d = Decomposition {
        basis_minus: q.iter().map(|v| conj_vec(v)).collect(),
        basis_plus: q,
    };
    require_decomposition(&complexify(&c.target)?, &d)?;
    Ok(d)
}

/// `J_ℂ(X + Ȳ) = iX - iȲ` for `X, Y ∈ 𝔮`, restricted to the real form.
/// The algebra must have real structure constants.
pub fn complex_from_subalgebra(
    a_c: &ThreeHomLDend<GaussRational>,
    q: &[Vector<GaussRational>],
) -> Result<ComplexCandidate<Rational>> {
    let real_form = real_part(a_c)?;
    let d = Decomposition {
        basis_plus: q.to_vec(),
        basis_minus: q.iter().map(|v| conj_vec(v)).collect(),
    };
    require_decomposition(a_c, &d)?;
    let i = GaussRational::imag_unit().expect("complex field");
    let jc = d.diagonal_map(a_c.dim(), i.clone(), -i)?;
    if let Some((r, c)) = first_nonreal(&jc) {
        return Err(Error::NotRealizable(format!(
            "entry ({r}, {c}) is {}",
            jc[(r, c)].render()
        )));
    }
    ComplexCandidate::new(jc.map(|x| x.re.clone()), real_form)
}

fn first_nonreal(m: &Matrix<GaussRational>) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| !m[(r, c)].im.is_zero())
}

/// The real algebra whose complexification is `a_c`.
pub fn real_part(a_c: &ThreeHomLDend<GaussRational>) -> Result<ThreeHomLDend<Rational>> {
    let real = a_c.products().iter().all(|(_, p)| p.entries().all(|(_, x)| x.im.is_zero()))
        && first_nonreal(&a_c.alpha).is_none();
    if !real {
        return Err(Error::NotRealizable(
            "structure constants are not real".to_string(),
        ));
    }
    Ok(ThreeHomLDend {
        nw: a_c.nw.map(|x| x.re.clone()),
        ne: a_c.ne.map(|x| x.re.clone()),
        alpha: a_c.alpha.map(|x| x.re.clone()),
    })
}

/// `p_J(x,y,z) = ¼(p - p(x,Jy,Jz) - p(Jx,y,Jz) - p(Jx,Jy,z))` for both
/// products.
pub fn j_twisted_products<S: Scalar>(c: &ComplexCandidate<S>) -> Result<ThreeHomLDend<S>> {
    require(check_complex(c)?, Error::NotAComplexStructure)?;
    let quarter = S::ratio(1, 4);
    let twist = |p: &TriTensor<S>| p.sub(&two_slots(p, &c.j)).scale(&quarter);
    Ok(ThreeHomLDend {
        nw: twist(&c.target.nw),
        ne: twist(&c.target.ne),
        alpha: c.target.alpha.clone(),
    })
}

/// `φ(x) = ½(x - iJx)` as a map into the complexification.
pub fn intertwiner<S: Scalar>(j: &Matrix<S>) -> Matrix<GaussRational> {
    let n = j.rows();
    let i = GaussRational::imag_unit().expect("complex field");
    let half = GaussRational::ratio(1, 2);
    Matrix::identity(n).sub(&complexify_map(j).scale(&i)).scale(&half)
}

/// `p(φx, φy, φz) = φ(p_J(x,y,z))` for both products, and `φα = αφ`.
pub fn intertwiner_report<S: Scalar>(c: &ComplexCandidate<S>) -> Result<Report> {
    require_real::<S>("the intertwiner")?;
    let twisted = complexify(&j_twisted_products(c)?)?;
    let base = complexify(&c.target)?;
    let phi = intertwiner(&c.j);
    let mut ch = Checker::new("intertwiner");
    ch.mat_eq("alpha", &[], &phi.mul(&base.alpha), &base.alpha.mul(&phi));
    for ((name, p), (_, pj)) in products(&base).into_iter().zip(products(&twisted)) {
        compare_tensors(&mut ch, name, &at(p, &phi, ALL), &pj.post(&phi));
    }
    Ok(ch.finish())
}

/// For a complex-mode algebra, asserts that `E` is a product structure
/// exactly when `iE` is a complex structure.
pub fn product_complex_correspondence<S: Scalar>(a: &ThreeHomLDend<S>, e: &Matrix<S>) -> Result<Report> {
    let i = S::imag_unit()
        .ok_or_else(|| Error::ModeError("the correspondence needs a complex algebra".to_string()))?;
    let product = check_product(&ProductCandidate::new(e.clone(), a.clone())?)?.passed();
    let complex = check_complex(&ComplexCandidate::new(e.scale(&i), a.clone())?)?.passed();
    let mut c = Checker::new("product_complex");
    let v = |ok: bool| if ok { "pass" } else { "fail" };
    c.holds(
        "verdicts-agree",
        &[],
        product == complex,
        &format!("product {}", v(product)),
        &format!("complex {}", v(complex)),
    );
    Ok(c.finish())
}
