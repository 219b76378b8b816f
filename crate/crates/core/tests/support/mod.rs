//! Instances and brute-force oracles shared by the integration tests.
//!
//! The oracles evaluate each identity directly on basis vectors from the raw
//! structure constants. They use only `TriTensor::get`, matrix indexing and
//! vector arithmetic written here, so they do not share code paths with the
//! library checkers.

#![allow(dead_code)]

use trihom::operators::{ldend_from_rb, prelie_from_o};
use trihom::representations::adjoint_rep;
use trihom::{
    GaussRational, LieOOperator, LieRep, Matrix, PreLieRep, Rational, RepTensor, Scalar, ThreeHomLDend,
    ThreeHomLie, ThreeHomPreLie, TriTensor,
};

pub type Q = Rational;
pub type V<S> = Vec<S>;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::ratio(n, d)
}

pub fn mat(rows: &[&[i64]]) -> Matrix<Q> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
}

pub fn diag(d: &[Q]) -> Matrix<Q> {
    Matrix::diag(d.to_vec())
}

pub fn id(n: usize) -> Matrix<Q> {
    Matrix::identity(n)
}

// ---------------------------------------------------------------- vectors

pub fn basis<S: Scalar>(d: usize) -> Vec<V<S>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> V<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> V<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn neg<S: Scalar>(a: &[S]) -> V<S> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn smul<S: Scalar>(c: &S, a: &[S]) -> V<S> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn app<S: Scalar>(m: &Matrix<S>, v: &[S]) -> V<S> {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(S::zero(), |acc, c| acc + m[(r, c)].clone() * v[c].clone()))
        .collect()
}

/// Direct trilinear expansion over the structure constants.
pub fn ev<S: Scalar>(t: &TriTensor<S>, x: &[S], y: &[S], z: &[S]) -> V<S> {
    let d = t.dim();
    let mut out = vec![S::zero(); d];
    for i in 0..d {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if y[j].is_zero() {
                continue;
            }
            for k in 0..d {
                if z[k].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone() * z[k].clone();
                for (l, o) in out.iter_mut().enumerate() {
                    *o = o.clone() + c.clone() * t.get(i, j, k, l).clone();
                }
            }
        }
    }
    out
}

/// Visits every `k`-tuple of basis indices; stops at the first `false`.
pub fn all_tuples(d: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let total = d.pow(k as u32);
    let mut t = vec![0; k];
    for mut n in 0..total {
        for slot in (0..k).rev() {
            t[slot] = n % d;
            n /= d;
        }
        if !f(&t) {
            return false;
        }
    }
    true
}

/// Every `T(x,y,z)` with `x,y,z` basis vectors agrees under both closures.
pub fn same_op<S: Scalar>(
    d: usize,
    f: impl Fn(&[S], &[S], &[S]) -> V<S>,
    g: impl Fn(&[S], &[S], &[S]) -> V<S>,
) -> bool {
    let e = basis::<S>(d);
    all_tuples(d, 3, |t| f(&e[t[0]], &e[t[1]], &e[t[2]]) == g(&e[t[0]], &e[t[1]], &e[t[2]]))
}

// ---------------------------------------------------------------- oracles

fn multiplicative<S: Scalar>(p: &TriTensor<S>, alpha: &Matrix<S>) -> bool {
    same_op(
        p.dim(),
        |x, y, z| app(alpha, &ev(p, x, y, z)),
        |x, y, z| ev(p, &app(alpha, x), &app(alpha, y), &app(alpha, z)),
    )
}

pub fn lie_holds<S: Scalar>(b: &TriTensor<S>, alpha: &Matrix<S>) -> bool {
    let d = b.dim();
    let e = basis::<S>(d);
    let br = |x: &[S], y: &[S], z: &[S]| ev(b, x, y, z);
    let a = |x: &[S]| app(alpha, x);
    let skew = all_tuples(d, 3, |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let v = br(x, y, z);
        v == neg(&br(y, x, z)) && v == neg(&br(x, z, y))
    });
    skew && multiplicative(b, alpha)
        && all_tuples(d, 5, |t| {
            let x: Vec<&V<S>> = t.iter().map(|&i| &e[i]).collect();
            let lhs = br(&a(x[0]), &a(x[1]), &br(x[2], x[3], x[4]));
            let r1 = br(&br(x[0], x[1], x[2]), &a(x[3]), &a(x[4]));
            let r2 = br(&a(x[2]), &br(x[0], x[1], x[3]), &a(x[4]));
            let r3 = br(&a(x[2]), &a(x[3]), &br(x[0], x[1], x[4]));
            lhs == add(&add(&r1, &r2), &r3)
        })
}

fn cyc<S: Scalar>(p: &TriTensor<S>, x: &[S], y: &[S], z: &[S]) -> V<S> {
    add(&add(&ev(p, x, y, z), &ev(p, y, z, x)), &ev(p, z, x, y))
}

pub fn prelie_holds<S: Scalar>(p: &TriTensor<S>, alpha: &Matrix<S>) -> bool {
    let d = p.dim();
    let e = basis::<S>(d);
    let pr = |x: &[S], y: &[S], z: &[S]| ev(p, x, y, z);
    let c = |x: &[S], y: &[S], z: &[S]| cyc(p, x, y, z);
    let a = |x: &[S]| app(alpha, x);
    let skew = all_tuples(d, 3, |t| {
        pr(&e[t[0]], &e[t[1]], &e[t[2]]) == neg(&pr(&e[t[1]], &e[t[0]], &e[t[2]]))
    });
    skew && multiplicative(p, alpha)
        && all_tuples(d, 5, |t| {
            let x: Vec<&V<S>> = t.iter().map(|&i| &e[i]).collect();
            let lhs1 = pr(&a(x[0]), &a(x[1]), &pr(x[2], x[3], x[4]));
            let rhs1 = add(
                &add(
                    &pr(&c(x[0], x[1], x[2]), &a(x[3]), &a(x[4])),
                    &pr(&a(x[2]), &c(x[0], x[1], x[3]), &a(x[4])),
                ),
                &pr(&a(x[2]), &a(x[3]), &pr(x[0], x[1], x[4])),
            );
            let lhs2 = pr(&c(x[0], x[1], x[2]), &a(x[3]), &a(x[4]));
            let rhs2 = add(
                &add(
                    &pr(&a(x[0]), &a(x[1]), &pr(x[2], x[3], x[4])),
                    &pr(&a(x[1]), &a(x[2]), &pr(x[0], x[3], x[4])),
                ),
                &pr(&a(x[2]), &a(x[0]), &pr(x[1], x[3], x[4])),
            );
            lhs1 == rhs1 && lhs2 == rhs2
        })
}

pub fn ldend_holds<S: Scalar>(nw: &TriTensor<S>, ne: &TriTensor<S>, alpha: &Matrix<S>) -> bool {
    let d = nw.dim();
    let e = basis::<S>(d);
    let w = |x: &[S], y: &[S], z: &[S]| ev(nw, x, y, z);
    let n = |x: &[S], y: &[S], z: &[S]| ev(ne, x, y, z);
    let h = |x: &[S], y: &[S], z: &[S]| sub(&add(&w(x, y, z), &n(x, y, z)), &n(y, x, z));
    let v = |x: &[S], y: &[S], z: &[S]| sub(&add(&w(x, y, z), &n(z, x, y)), &n(z, y, x));
    let ch = |x: &[S], y: &[S], z: &[S]| add(&add(&h(x, y, z), &h(y, z, x)), &h(z, x, y));
    let cv = |x: &[S], y: &[S], z: &[S]| add(&add(&v(x, y, z), &v(y, z, x)), &v(z, x, y));
    let a = |x: &[S]| app(alpha, x);
    let base = all_tuples(d, 3, |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        w(x, y, z) == neg(&w(y, x, z)) && ch(x, y, z) == cv(x, y, z)
    });
    base && multiplicative(nw, alpha)
        && multiplicative(ne, alpha)
        && all_tuples(d, 5, |t| {
            let x: Vec<&V<S>> = t.iter().map(|&i| &e[i]).collect();
            let (x1, x2, x3, x4, x5) = (x[0], x[1], x[2], x[3], x[4]);
            let ld1 = sub(&w(&a(x1), &a(x2), &w(x3, x4, x5)), &w(&a(x3), &a(x4), &w(x1, x2, x5)))
                == sub(&w(&ch(x1, x2, x3), &a(x4), &a(x5)), &w(&ch(x1, x2, x4), &a(x3), &a(x5)));
            let ld2 = sub(&w(&a(x1), &a(x2), &n(x5, x3, x4)), &n(&a(x5), &a(x3), &h(x1, x2, x4)))
                == add(&n(&a(x5), &ch(x1, x2, x3), &a(x4)), &n(&v(x1, x2, x5), &a(x3), &a(x4)));
            let ld3 = sub(&n(&a(x5), &a(x1), &h(x2, x3, x4)), &w(&a(x2), &a(x3), &n(x5, x1, x4)))
                == sub(&n(&v(x1, x2, x5), &a(x3), &a(x4)), &n(&v(x1, x3, x5), &a(x2), &a(x4)));
            let cyc3 = |f: &dyn Fn(&[S], &[S], &[S]) -> V<S>| {
                add(&add(&f(x1, x2, x3), &f(x2, x3, x1)), &f(x3, x1, x2))
            };
            let ld4 = w(&ch(x1, x2, x3), &a(x4), &a(x5))
                == cyc3(&|p, q, r| w(&a(p), &a(q), &w(r, x4, x5)));
            let ld5 = n(&a(x5), &ch(x1, x2, x3), &a(x4))
                == cyc3(&|p, q, r| w(&a(p), &a(q), &n(x5, r, x4)));
            let ld6 = add(&w(&a(x1), &a(x2), &n(x5, x3, x4)), &n(&a(x5), &a(x1), &h(x2, x3, x4)))
                == add(&n(&a(x5), &a(x2), &h(x1, x3, x4)), &n(&v(x1, x2, x5), &a(x3), &a(x4)));
            ld1 && ld2 && ld3 && ld4 && ld5 && ld6
        })
}

/// Bracket of `A ⊕ V`: `[x+u, y+v, z+w] = [x,y,z] + ρ(x,y)w + ρ(y,z)u + ρ(z,x)v`.
pub fn semidirect_oracle<S: Scalar>(
    b: &TriTensor<S>,
    rho: &RepTensor<S>,
    alpha: &Matrix<S>,
    phi: &Matrix<S>,
) -> (TriTensor<S>, Matrix<S>) {
    let n = b.dim();
    let m = phi.rows();
    let d = n + m;
    let split = |v: &[S]| (v[..n].to_vec(), v[n..].to_vec());
    let act = |x: &[S], y: &[S], u: &[S]| app(&rho.eval(x, y), u);
    let e = basis::<S>(d);
    let t = TriTensor::from_fn(d, |i, j, k| {
        let (x, u) = split(&e[i]);
        let (y, v) = split(&e[j]);
        let (z, w) = split(&e[k]);
        let mut out = ev(b, &x, &y, &z);
        let module = add(&add(&act(&x, &y, &w), &act(&y, &z, &u)), &act(&z, &x, &v));
        out.extend(module);
        out
    });
    let mut tw = Matrix::zeros(d, d);
    for r in 0..n {
        for c in 0..n {
            tw[(r, c)] = alpha[(r, c)].clone();
        }
    }
    for r in 0..m {
        for c in 0..m {
            tw[(n + r, n + c)] = phi[(r, c)].clone();
        }
    }
    (t, tw)
}

/// A representation of a 3-Hom-Lie algebra is exactly a module whose
/// semidirect sum is 3-Hom-Lie.
pub fn lie_rep_holds<S: Scalar>(r: &LieRep<S>) -> bool {
    let (t, tw) = semidirect_oracle(&r.alg.bracket, &r.rho, &r.alg.alpha, &r.phi);
    lie_holds(&t, &tw)
}

/// `{x+u, y+v, z+w} = {x,y,z} + l(x,y)w - r(x,z)v + r(y,z)u`.
pub fn semidirect_prelie_oracle<S: Scalar>(p: &PreLieRep<S>) -> (TriTensor<S>, Matrix<S>) {
    let n = p.alg.prod.dim();
    let m = p.phi.rows();
    let split = |v: &[S]| (v[..n].to_vec(), v[n..].to_vec());
    let e = basis::<S>(n + m);
    let t = TriTensor::from_fn(n + m, |i, j, k| {
        let (x, u) = split(&e[i]);
        let (y, v) = split(&e[j]);
        let (z, w) = split(&e[k]);
        let mut out = ev(&p.alg.prod, &x, &y, &z);
        let l = app(&p.l.eval(&x, &y), &w);
        let r1 = app(&p.r.eval(&x, &z), &v);
        let r2 = app(&p.r.eval(&y, &z), &u);
        out.extend(add(&sub(&l, &r1), &r2));
        out
    });
    let (_, tw) = semidirect_oracle(&TriTensor::zeros(n), &RepTensor::zeros(n, m, true), &p.alg.alpha, &p.phi);
    (t, tw)
}

/// A pre-Lie representation is exactly a module whose semidirect sum is
/// 3-Hom-pre-Lie.
pub fn prelie_rep_holds<S: Scalar>(p: &PreLieRep<S>) -> bool {
    let (t, tw) = semidirect_prelie_oracle(p);
    prelie_holds(&t, &tw)
}

/// `p(Nx,Ny,Nz) = N(Σp(NN·) - NΣp(N··) + N²p)` for each product, and `αN = Nα`.
pub fn nijenhuis_holds<S: Scalar>(n: &Matrix<S>, alpha: &Matrix<S>, products: &[&TriTensor<S>]) -> bool {
    if n.mul(alpha) != alpha.mul(n) {
        return false;
    }
    products.iter().all(|p| {
        let nn = |x: &[S]| app(n, x);
        same_op(
            p.dim(),
            |x, y, z| ev(p, &nn(x), &nn(y), &nn(z)),
            |x, y, z| {
                let two = add(
                    &add(&ev(p, &nn(x), &nn(y), z), &ev(p, &nn(x), y, &nn(z))),
                    &ev(p, x, &nn(y), &nn(z)),
                );
                let one = add(
                    &add(&ev(p, &nn(x), y, z), &ev(p, x, &nn(y), z)),
                    &ev(p, x, y, &nn(z)),
                );
                let zero = ev(p, x, y, z);
                let inner = add(&sub(&two, &nn(&one)), &nn(&nn(&zero)));
                nn(&inner)
            },
        )
    })
}

/// Closure of a span under a product, decided by exact rank comparison.
pub fn span_closed<S: Scalar>(p: &TriTensor<S>, span: &[V<S>]) -> bool {
    let d = p.dim();
    let rank = |vs: &[V<S>]| {
        if vs.is_empty() {
            0
        } else {
            Matrix::from_columns(d, vs).rank()
        }
    };
    let r0 = rank(span);
    let k = span.len();
    k == 0
        || all_tuples(k, 3, |t| {
            let mut vs = span.to_vec();
            vs.push(ev(p, &span[t[0]], &span[t[1]], &span[t[2]]));
            rank(&vs) == r0
        })
}

// ---------------------------------------------------------------- instances

/// `[e0,e1,e2] = e0` extended skew-symmetrically.
pub fn derived_bracket() -> TriTensor<Q> {
    TriTensor::skew_from(3, &[([0, 1, 2], vec![q(1), q(0), q(0)])])
}

pub fn derived_lie() -> ThreeHomLie<Q> {
    ThreeHomLie::new(derived_bracket(), id(3)).unwrap()
}

/// `R(e1) = e1`, zero elsewhere.
pub fn rank_one_rb() -> Matrix<Q> {
    diag(&[q(0), q(1), q(0)])
}

/// `R = diag(0,1,1)`, a Rota-Baxter operator on the derived algebra whose
/// induced products are nonzero.
pub fn rank_two_rb() -> Matrix<Q> {
    diag(&[q(0), q(1), q(1)])
}

/// `{x,y,z} = [Rx,Ry,z]` with `R = diag(0,1,1)`.
pub fn derived_prelie() -> ThreeHomPreLie<Q> {
    let c = LieOOperator::new(rank_two_rb(), adjoint_rep(&derived_lie())).unwrap();
    prelie_from_o(&c).unwrap()
}

/// Dendriform splitting of [`derived_prelie`] along the same operator.
pub fn derived_ldend() -> ThreeHomLDend<Q> {
    ldend_from_rb(&derived_prelie(), &rank_two_rb()).unwrap()
}

/// `t` is a bracket morphism of the derived algebra exactly when `bc = 1`.
pub fn twist_diag() -> Matrix<Q> {
    diag(&[q(1), q(2), qr(1, 2)])
}

/// The derived bracket with twist `diag(1,2,1/2)`, obtained by Yau twisting.
pub fn twisted_lie() -> ThreeHomLie<Q> {
    use trihom::TernaryAlgebra;
    derived_lie().yau_twist(&twist_diag()).unwrap()
}

/// Real form of a complex ternary map on the plane with basis `1, i`.
pub fn plane_op(f: impl Fn(GaussRational, GaussRational, GaussRational) -> GaussRational) -> TriTensor<Q> {
    let unit = |k: usize| {
        if k == 0 {
            GaussRational::from_i64(1)
        } else {
            GaussRational::imag_unit().unwrap()
        }
    };
    TriTensor::from_fn(2, |i, j, k| {
        let v = f(unit(i), unit(j), unit(k));
        vec![v.re(), v.im()]
    })
}

/// Multiplication by `i` on the plane.
pub fn rotation() -> Matrix<Q> {
    mat(&[&[0, -1], &[1, 0]])
}

pub fn plane_ldend(ne: TriTensor<Q>) -> ThreeHomLDend<Q> {
    ThreeHomLDend::new(TriTensor::zeros(2), ne, id(2)).unwrap()
}

/// `↗ = xyz`: a complex-trilinear product, on which the rotation is strict.
pub fn plane_strict() -> ThreeHomLDend<Q> {
    plane_ldend(plane_op(|x, y, z| x * y * z))
}

/// `↗ = xyz + xyz̄ + xȳz + x̄yz`: integrable for the rotation, no special type.
pub fn plane_generic() -> ThreeHomLDend<Q> {
    plane_ldend(plane_op(|x, y, z| {
        x.clone() * y.clone() * z.clone()
            + x.clone() * y.clone() * z.conj()
            + x.clone() * y.conj() * z.clone()
            + x.conj() * y * z
    }))
}

/// `↗ = xyz̄ + xȳz + x̄yz`: abelian and strong for the rotation.
pub fn plane_abelian() -> ThreeHomLDend<Q> {
    plane_ldend(plane_op(|x, y, z| {
        x.clone() * y.clone() * z.conj() + x.clone() * y.conj() * z.clone() + x.conj() * y * z
    }))
}

/// `↗ = conj(xyz)`: a valid algebra on which the rotation is not integrable.
pub fn plane_antilinear() -> ThreeHomLDend<Q> {
    plane_ldend(plane_op(|x, y, z| (x * y * z).conj()))
}

/// Block rotation on `dim = 2k`.
pub fn block_rotation(k: usize) -> Matrix<Q> {
    let mut j = Matrix::zeros(2 * k, 2 * k);
    for b in 0..k {
        j[(2 * b, 2 * b + 1)] = q(-1);
        j[(2 * b + 1, 2 * b)] = q(1);
    }
    j
}

/// `{e0,e1,e0} = e0` on the plane, skew in the first two slots.
pub fn small_prelie() -> ThreeHomPreLie<Q> {
    let mut p = TriTensor::<Q>::zeros(2);
    p.set(0, 1, 0, 0, q(1));
    p.set(1, 0, 0, 0, q(-1));
    ThreeHomPreLie::new(p, id(2)).unwrap()
}
