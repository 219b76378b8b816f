//! The three ternary Hom-algebra kinds, their axiom checkers, and the bracket
//! constructions linking them.

use crate::error::{require, Error, Result};
use crate::linalg::{add_vec, sub_vec, sum_vecs, Matrix, Vector};
use crate::report::{for_each_tuple, Checker, Report};
use crate::scalar::Scalar;
use crate::tensor::{pullback, BiTensor, TriTensor};

pub(crate) fn check_square<S: Scalar>(what: &str, m: &Matrix<S>, dim: usize) -> Result<()> {
    if m.rows() == dim && m.cols() == dim {
        Ok(())
    } else {
        Err(Error::DimMismatch(format!(
            "{what} is {}x{}, expected {dim}x{dim}",
            m.rows(),
            m.cols()
        )))
    }
}

pub(crate) fn check_tensor<S: Scalar>(what: &str, t: &TriTensor<S>, dim: usize) -> Result<()> {
    if t.dim() == dim {
        Ok(())
    } else {
        Err(Error::DimMismatch(format!(
            "{what} has dimension {}, expected {dim}",
            t.dim()
        )))
    }
}

/// Common view of the ternary algebra kinds.
pub trait TernaryAlgebra<S: Scalar>: Clone {
    /// Stable kind name, also used by the document format.
    const KIND: &'static str;

    fn dim(&self) -> usize;
    fn alpha(&self) -> &Matrix<S>;
    /// Named products in a fixed order.
    fn products(&self) -> Vec<(&'static str, &TriTensor<S>)>;
    /// Same kind with replaced products (in `products` order) and twist.
    fn rebuild(&self, products: Vec<TriTensor<S>>, alpha: Matrix<S>) -> Self;
    /// Runs the full axiom suite.
    fn check(&self) -> Report;

    /// `p(tx, ty, tz)` for every product, with `t` as the new twist map.
    fn yau_twist(&self, t: &Matrix<S>) -> Result<Self> {
        check_square("twist map", t, self.dim())?;
        let ps = self.products().into_iter().map(|(_, p)| pullback(p, t)).collect();
        Ok(self.rebuild(ps, t.clone()))
    }

    /// Equality of twist maps and all products.
    fn products_equal(&self, other: &Self) -> bool {
        self.alpha() == other.alpha()
            && self
                .products()
                .iter()
                .zip(other.products())
                .all(|((_, a), (_, b))| *a == b)
    }
}

/// Skew ternary bracket with twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeHomLie<S> {
    pub bracket: TriTensor<S>,
    pub alpha: Matrix<S>,
}

/// Ternary product skew in its first two slots, with twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeHomPreLie<S> {
    pub prod: TriTensor<S>,
    pub alpha: Matrix<S>,
}

/// Pair of ternary products (north-west and north-east) with twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeHomLDend<S> {
    pub nw: TriTensor<S>,
    pub ne: TriTensor<S>,
    pub alpha: Matrix<S>,
}

/// Binary skew bracket with twist map, the input of the trace construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLie<S> {
    pub bracket: BiTensor<S>,
    pub alpha: Matrix<S>,
}

impl<S: Scalar> ThreeHomLie<S> {
    pub fn new(bracket: TriTensor<S>, alpha: Matrix<S>) -> Result<Self> {
        check_square("twist map", &alpha, bracket.dim())?;
        Ok(Self { bracket, alpha })
    }

    /// Zero bracket with identity twist.
    pub fn abelian(dim: usize) -> Self {
        Self {
            bracket: TriTensor::zeros(dim),
            alpha: Matrix::identity(dim),
        }
    }

    /// The same bracket read as a 3-Hom-pre-Lie product.
    pub fn as_prelie(&self) -> ThreeHomPreLie<S> {
        ThreeHomPreLie {
            prod: self.bracket.clone(),
            alpha: self.alpha.clone(),
        }
    }
}

impl<S: Scalar> ThreeHomPreLie<S> {
    pub fn new(prod: TriTensor<S>, alpha: Matrix<S>) -> Result<Self> {
        check_square("twist map", &alpha, prod.dim())?;
        Ok(Self { prod, alpha })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            prod: TriTensor::zeros(dim),
            alpha: Matrix::identity(dim),
        }
    }
}

impl<S: Scalar> ThreeHomLDend<S> {
    pub fn new(nw: TriTensor<S>, ne: TriTensor<S>, alpha: Matrix<S>) -> Result<Self> {
        check_tensor("north-east product", &ne, nw.dim())?;
        check_square("twist map", &alpha, nw.dim())?;
        Ok(Self { nw, ne, alpha })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            nw: TriTensor::zeros(dim),
            ne: TriTensor::zeros(dim),
            alpha: Matrix::identity(dim),
        }
    }

    /// `{x,y,z}^h = nw(x,y,z) + ne(x,y,z) - ne(y,x,z)`.
    pub fn horizontal(&self) -> TriTensor<S> {
        horizontal_tensor(&self.nw, &self.ne)
    }

    /// `{x,y,z}^v = nw(x,y,z) + ne(z,x,y) - ne(z,y,x)`.
    pub fn vertical(&self) -> TriTensor<S> {
        vertical_tensor(&self.nw, &self.ne)
    }
}

pub(crate) fn horizontal_tensor<S: Scalar>(nw: &TriTensor<S>, ne: &TriTensor<S>) -> TriTensor<S> {
    nw.add(ne).sub(&ne.permute([1, 0, 2]))
}

pub(crate) fn vertical_tensor<S: Scalar>(nw: &TriTensor<S>, ne: &TriTensor<S>) -> TriTensor<S> {
    nw.add(&ne.permute([2, 0, 1])).sub(&ne.permute([2, 1, 0]))
}

impl<S: Scalar> HomLie<S> {
    pub fn new(bracket: BiTensor<S>, alpha: Matrix<S>) -> Result<Self> {
        check_square("twist map", &alpha, bracket.dim())?;
        Ok(Self { bracket, alpha })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    /// Skew-symmetry of the binary bracket; the Hom-Jacobi identity is not
    /// part of this check.
    pub fn check_skew(&self) -> Report {
        let mut c = Checker::new("hom_lie");
        let d = self.dim();
        for_each_tuple(d, 2, |t| {
            c.count_tuple();
            let lhs = self.bracket.row(t[0], t[1]);
            let rhs: Vector<S> = self.bracket.row(t[1], t[0]).iter().map(|x| -x.clone()).collect();
            c.vec_eq("skew", t, lhs, &rhs);
        });
        c.finish()
    }
}

impl<S: Scalar> TernaryAlgebra<S> for ThreeHomLie<S> {
    const KIND: &'static str = "3hom_lie";

    fn dim(&self) -> usize {
        self.bracket.dim()
    }

    fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    fn products(&self) -> Vec<(&'static str, &TriTensor<S>)> {
        vec![("bracket", &self.bracket)]
    }

    fn rebuild(&self, mut products: Vec<TriTensor<S>>, alpha: Matrix<S>) -> Self {
        Self {
            bracket: products.remove(0),
            alpha,
        }
    }

    fn check(&self) -> Report {
        check_3homlie(self)
    }
}

impl<S: Scalar> TernaryAlgebra<S> for ThreeHomPreLie<S> {
    const KIND: &'static str = "3hom_prelie";

    fn dim(&self) -> usize {
        self.prod.dim()
    }

    fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    fn products(&self) -> Vec<(&'static str, &TriTensor<S>)> {
        vec![("product", &self.prod)]
    }

    fn rebuild(&self, mut products: Vec<TriTensor<S>>, alpha: Matrix<S>) -> Self {
        Self {
            prod: products.remove(0),
            alpha,
        }
    }

    fn check(&self) -> Report {
        check_3hompre(self)
    }
}

impl<S: Scalar> TernaryAlgebra<S> for ThreeHomLDend<S> {
    const KIND: &'static str = "3hom_ldend";

    fn dim(&self) -> usize {
        self.nw.dim()
    }

    fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    fn products(&self) -> Vec<(&'static str, &TriTensor<S>)> {
        vec![("nw", &self.nw), ("ne", &self.ne)]
    }

    fn rebuild(&self, mut products: Vec<TriTensor<S>>, alpha: Matrix<S>) -> Self {
        let ne = products.remove(1);
        Self {
            nw: products.remove(0),
            ne,
            alpha,
        }
    }

    fn check(&self) -> Report {
        check_3homldend(self)
    }
}

/// Images of the basis under the twist map, cached for tuple enumeration.
pub(crate) struct Twisted<S> {
    pub cols: Vec<Vector<S>>,
}

impl<S: Scalar> Twisted<S> {
    pub fn new(alpha: &Matrix<S>) -> Self {
        Self {
            cols: (0..alpha.cols()).map(|j| alpha.column(j)).collect(),
        }
    }

    pub fn at(&self, i: usize) -> &[S] {
        &self.cols[i]
    }
}

/// `alpha(p(e_i,e_j,e_k)) = p(alpha e_i, alpha e_j, alpha e_k)` on all triples.
pub(crate) fn check_multiplicative<S: Scalar>(
    c: &mut Checker,
    id: &str,
    p: &TriTensor<S>,
    alpha: &Matrix<S>,
) {
    let a = Twisted::new(alpha);
    for_each_tuple(p.dim(), 3, |t| {
        if c.failed(id) {
            return;
        }
        c.count_tuple();
        let lhs = alpha.apply(p.row(t[0], t[1], t[2]));
        let rhs = p.eval(a.at(t[0]), a.at(t[1]), a.at(t[2]));
        c.vec_eq(id, t, &lhs, &rhs);
    });
}

/// `p(e_i,e_j,e_k) = -p(e_σ...)` for the transposition given by `sigma`.
fn check_skew<S: Scalar>(c: &mut Checker, id: &str, p: &TriTensor<S>, sigma: [usize; 3]) {
    for_each_tuple(p.dim(), 3, |t| {
        if c.failed(id) {
            return;
        }
        c.count_tuple();
        let lhs = p.row(t[0], t[1], t[2]);
        let rhs: Vector<S> = p
            .row(t[sigma[0]], t[sigma[1]], t[sigma[2]])
            .iter()
            .map(|x| -x.clone())
            .collect();
        c.vec_eq(id, t, lhs, &rhs);
    });
}

/// Skew-symmetry, multiplicativity and the fundamental identity
/// `[αx1, αx2, [x3,x4,x5]] = [[x1,x2,x3],αx4,αx5] + [αx3,[x1,x2,x4],αx5] + [αx3,αx4,[x1,x2,x5]]`.
pub fn check_3homlie<S: Scalar>(a: &ThreeHomLie<S>) -> Report {
    let mut c = Checker::new("3hom_lie");
    let b = &a.bracket;
    check_skew(&mut c, "skew12", b, [1, 0, 2]);
    check_skew(&mut c, "skew23", b, [0, 2, 1]);
    check_multiplicative(&mut c, "mult", b, &a.alpha);
    let al = Twisted::new(&a.alpha);
    for_each_tuple(b.dim(), 5, |t| {
        c.count_tuple();
        if c.failed("FI") {
            return;
        }
        let [x1, x2, x3, x4, x5] = [t[0], t[1], t[2], t[3], t[4]];
        let lhs = b.eval(al.at(x1), al.at(x2), b.row(x3, x4, x5));
        let r1 = b.eval(b.row(x1, x2, x3), al.at(x4), al.at(x5));
        let r2 = b.eval(al.at(x3), b.row(x1, x2, x4), al.at(x5));
        let r3 = b.eval(al.at(x3), al.at(x4), b.row(x1, x2, x5));
        c.vec_eq("FI", t, &lhs, &sum_vecs(b.dim(), [&r1, &r2, &r3]));
    });
    c.finish()
}

/// Cyclic sum `p(x,y,z) + p(y,z,x) + p(z,x,y)` on basis indices.
fn cyc<S: Scalar>(p: &TriTensor<S>, i: usize, j: usize, k: usize) -> Vector<S> {
    let s = add_vec(p.row(i, j, k), p.row(j, k, i));
    add_vec(&s, p.row(k, i, j))
}

/// Left skew-symmetry, multiplicativity and the two defining identities;
/// the cyclic bracket is expanded inline.
pub fn check_3hompre<S: Scalar>(a: &ThreeHomPreLie<S>) -> Report {
    let mut c = Checker::new("3hom_prelie");
    let p = &a.prod;
    let d = p.dim();
    check_skew(&mut c, "PL0", p, [1, 0, 2]);
    check_multiplicative(&mut c, "mult", p, &a.alpha);
    let al = Twisted::new(&a.alpha);
    for_each_tuple(d, 5, |t| {
        c.count_tuple();
        let [x1, x2, x3, x4, x5] = [t[0], t[1], t[2], t[3], t[4]];
        let c123 = cyc(p, x1, x2, x3);
        let outer12 = p.eval(al.at(x1), al.at(x2), p.row(x3, x4, x5));
        let c_first = p.eval(&c123, al.at(x4), al.at(x5));
        if !c.failed("PL1") {
            let c124 = cyc(p, x1, x2, x4);
            let r1 = p.eval(al.at(x3), &c124, al.at(x5));
            let r2 = p.eval(al.at(x3), al.at(x4), p.row(x1, x2, x5));
            c.vec_eq("PL1", t, &outer12, &sum_vecs(d, [&c_first, &r1, &r2]));
        }
        if !c.failed("PL2") {
            let r1 = p.eval(al.at(x2), al.at(x3), p.row(x1, x4, x5));
            let r2 = p.eval(al.at(x3), al.at(x1), p.row(x2, x4, x5));
            c.vec_eq("PL2", t, &c_first, &sum_vecs(d, [&outer12, &r1, &r2]));
        }
    });
    c.finish()
}

/// The dendriform axioms with every term split as an outer product applied to
/// an inner one. Both sides are bilinear in (outer, inner), which lets the
/// deformation checker expand them in a formal parameter.
pub(crate) struct DendAxioms<'a, S> {
    nw: &'a TriTensor<S>,
    ne: &'a TriTensor<S>,
    inner_nw: &'a TriTensor<S>,
    inner_ne: &'a TriTensor<S>,
    h: TriTensor<S>,
    v: TriTensor<S>,
    al: Twisted<S>,
}

/// Names of the non-linear dendriform axioms, in evaluation order.
pub(crate) const DEND_AXIOMS: [&str; 6] = ["LD1", "LD2", "LD3", "LD4", "LD5", "LD6"];

impl<'a, S: Scalar> DendAxioms<'a, S> {
    pub(crate) fn new(
        outer: (&'a TriTensor<S>, &'a TriTensor<S>),
        inner: (&'a TriTensor<S>, &'a TriTensor<S>),
        alpha: &Matrix<S>,
    ) -> Self {
        let (nw, ne) = inner;
        Self {
            nw: outer.0,
            ne: outer.1,
            inner_nw: nw,
            inner_ne: ne,
            h: horizontal_tensor(nw, ne),
            v: vertical_tensor(nw, ne),
            al: Twisted::new(alpha),
        }
    }

    /// `(lhs, rhs)` of LD1..LD6 at the index tuple `t`.
    pub(crate) fn eval(&self, t: &[usize]) -> [(Vector<S>, Vector<S>); 6] {
        let (nw, ne, al) = (self.nw, self.ne, &self.al);
        let (inw, ine) = (self.inner_nw, self.inner_ne);
        let d = nw.dim();
        let [x1, x2, x3, x4, x5] = [t[0], t[1], t[2], t[3], t[4]];
        let c123 = cyc(&self.h, x1, x2, x3);
        let nw12_ne534 = nw.eval(al.at(x1), al.at(x2), ine.row(x5, x3, x4));
        let ne_v125 = ne.eval(self.v.row(x1, x2, x5), al.at(x3), al.at(x4));
        let ne5_1_h234 = ne.eval(al.at(x5), al.at(x1), self.h.row(x2, x3, x4));
        let nw12_nw345 = nw.eval(al.at(x1), al.at(x2), inw.row(x3, x4, x5));
        let nw_c123 = nw.eval(&c123, al.at(x4), al.at(x5));
        let ne5_c123 = ne.eval(al.at(x5), &c123, al.at(x4));
        let ld1 = (
            sub_vec(&nw12_nw345, &nw.eval(al.at(x3), al.at(x4), inw.row(x1, x2, x5))),
            sub_vec(&nw_c123, &nw.eval(&cyc(&self.h, x1, x2, x4), al.at(x3), al.at(x5))),
        );
        let ld2 = (
            sub_vec(&nw12_ne534, &ne.eval(al.at(x5), al.at(x3), self.h.row(x1, x2, x4))),
            add_vec(&ne5_c123, &ne_v125),
        );
        let ld3 = (
            sub_vec(&ne5_1_h234, &nw.eval(al.at(x2), al.at(x3), ine.row(x5, x1, x4))),
            sub_vec(&ne_v125, &ne.eval(self.v.row(x1, x3, x5), al.at(x2), al.at(x4))),
        );
        let ld4 = {
            let r2 = nw.eval(al.at(x2), al.at(x3), inw.row(x1, x4, x5));
            let r3 = nw.eval(al.at(x3), al.at(x1), inw.row(x2, x4, x5));
            (nw_c123.clone(), sum_vecs(d, [&nw12_nw345, &r2, &r3]))
        };
        let ld5 = {
            let r2 = nw.eval(al.at(x2), al.at(x3), ine.row(x5, x1, x4));
            let r3 = nw.eval(al.at(x3), al.at(x1), ine.row(x5, x2, x4));
            (ne5_c123.clone(), sum_vecs(d, [&nw12_ne534, &r2, &r3]))
        };
        let ld6 = (
            add_vec(&nw12_ne534, &ne5_1_h234),
            add_vec(&ne.eval(al.at(x5), al.at(x2), self.h.row(x1, x3, x4)), &ne_v125),
        );
        [ld1, ld2, ld3, ld4, ld5, ld6]
    }
}

/// The seven dendriform axioms plus multiplicativity of both products.
pub fn check_3homldend<S: Scalar>(a: &ThreeHomLDend<S>) -> Report {
    let mut c = Checker::new("3hom_ldend");
    check_skew(&mut c, "LD0", &a.nw, [1, 0, 2]);
    check_multiplicative(&mut c, "mult", &a.nw, &a.alpha);
    check_multiplicative(&mut c, "mult", &a.ne, &a.alpha);
    let ax = DendAxioms::new((&a.nw, &a.ne), (&a.nw, &a.ne), &a.alpha);
    for_each_tuple(a.dim(), 5, |t| {
        c.count_tuple();
        if DEND_AXIOMS.iter().all(|id| c.failed(id)) {
            return;
        }
        for (id, (lhs, rhs)) in DEND_AXIOMS.iter().zip(ax.eval(t)) {
            c.vec_eq(id, t, &lhs, &rhs);
        }
    });
    c.finish()
}

/// Cyclic-sum bracket of a ternary product, without checking any axiom.
pub fn cyclic_bracket<S: Scalar>(a: &ThreeHomPreLie<S>) -> ThreeHomLie<S> {
    ThreeHomLie {
        bracket: a.prod.cyclic_sum(),
        alpha: a.alpha.clone(),
    }
}

/// Sub-adjacent 3-Hom-Lie algebra of a 3-Hom-pre-Lie algebra.
pub fn subadjacent_lie<S: Scalar>(a: &ThreeHomPreLie<S>) -> Result<ThreeHomLie<S>> {
    require(check_3hompre(a), Error::NotAPreLie)?;
    Ok(cyclic_bracket(a))
}

pub fn horizontal_prelie<S: Scalar>(a: &ThreeHomLDend<S>) -> Result<ThreeHomPreLie<S>> {
    require(check_3homldend(a), Error::NotALDend)?;
    Ok(ThreeHomPreLie {
        prod: a.horizontal(),
        alpha: a.alpha.clone(),
    })
}

pub fn vertical_prelie<S: Scalar>(a: &ThreeHomLDend<S>) -> Result<ThreeHomPreLie<S>> {
    require(check_3homldend(a), Error::NotALDend)?;
    Ok(ThreeHomPreLie {
        prod: a.vertical(),
        alpha: a.alpha.clone(),
    })
}

/// Cyclic sum of the horizontal product. The cyclic sum of the vertical
/// product must agree; a mismatch is reported as a failing axiom suite.
pub fn commutator_lie<S: Scalar>(a: &ThreeHomLDend<S>) -> Result<ThreeHomLie<S>> {
    let mut report = check_3homldend(a);
    let ch = a.horizontal().cyclic_sum();
    let cv = a.vertical().cyclic_sum();
    if report.passed() && ch != cv {
        let mut c = Checker::new("3hom_ldend");
        c.include("", &report);
        c.holds("crochet", &[], false, "cyclic horizontal", "cyclic vertical");
        report = c.finish();
    }
    require(report, Error::NotALDend)?;
    Ok(ThreeHomLie {
        bracket: ch,
        alpha: a.alpha.clone(),
    })
}
