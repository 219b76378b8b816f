mod support;

use support::*;
use trihom::algebras::{check_3homldend, check_3homlie, check_3hompre, horizontal_prelie, vertical_prelie};
use trihom::operators::{
    check_morphism, check_o_operator, check_prelie_o_operator, check_symplectic,
    commuting_rb_intermediate, compatibility_report, compatible_ldend, ldend_from_commuting_rb,
    ldend_from_o, ldend_from_rb, ldend_from_symplectic, ldend_regular_rep, o_morphism_report,
    prelie_from_o, prelie_prime_from_symplectic, prime_pairing_report, rb_prelie,
    symplectic_o_operator, symplectic_pairing_report, trace_3homlie, trace_rb_ldend,
};
use trihom::representations::{adjoint_rep, coadjoint_rep};
use trihom::{
    BiTensor, BilinearForm, Error, HomLie, LieOOperator, Matrix, PreLieOOperator, SymplecticForm,
    ThreeHomLDend, ThreeHomLie, ThreeHomPreLie, TriTensor,
};

/// `T` is an O-operator exactly when its graph `{Tu + u}` is a subalgebra of
/// the semidirect sum stable under the twist.
fn graph_closed(sum: &TriTensor<Q>, twist: &Matrix<Q>, t: &Matrix<Q>) -> bool {
    let n = t.rows();
    let graph: Vec<V<Q>> = (0..t.cols())
        .map(|u| {
            let mut v = t.column(u);
            v.extend(basis::<Q>(t.cols())[u].clone());
            v
        })
        .collect();
    let stable = graph.iter().all(|g| {
        let image = app(twist, g);
        let (a, m) = (image[..n].to_vec(), image[n..].to_vec());
        app(t, &m) == a
    });
    stable && span_closed(sum, &graph)
}

fn lie_o_oracle(c: &LieOOperator<Q>) -> bool {
    let r = &c.rep;
    let (sum, tw) = semidirect_oracle(&r.alg.bracket, &r.rho, &r.alg.alpha, &r.phi);
    graph_closed(&sum, &tw, &c.t)
}

fn prelie_o_oracle(c: &PreLieOOperator<Q>) -> bool {
    let (sum, tw) = semidirect_prelie_oracle(&c.rep);
    graph_closed(&sum, &tw, &c.t)
}

fn plane_form() -> BilinearForm<Q> {
    BilinearForm::new(mat(&[&[0, 1], &[-1, 0]]))
}

/// `{e0,e1,e0} = (a,b)`, `{e0,e1,e1} = (c,d)`, skew in the first two slots.
fn plane_prelie(a: i64, b: i64, c: i64, d: i64) -> ThreeHomPreLie<Q> {
    let mut p = TriTensor::<Q>::zeros(2);
    for (k, l, v) in [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)] {
        p.set(0, 1, k, l, q(v));
        p.set(1, 0, k, l, q(-v));
    }
    ThreeHomPreLie::new(p, id(2)).unwrap()
}

// ------------------------------------------------------------ O-operators

#[test]
fn zero_and_rank_one_operators_pass() {
    let a = derived_lie();
    for r in [Matrix::zeros(3, 3), rank_one_rb(), rank_two_rb()] {
        let c = LieOOperator::rota_baxter(&a, &r).unwrap();
        assert!(check_o_operator(&c).unwrap().passed());
        assert!(lie_o_oracle(&c));
    }
}

#[test]
fn identity_is_not_rota_baxter_on_the_derived_algebra() {
    let c = LieOOperator::rota_baxter(&derived_lie(), &id(3)).unwrap();
    let r = check_o_operator(&c).unwrap();
    assert!(!lie_o_oracle(&c));
    let v = r.violations.iter().find(|v| v.identity == "O").unwrap();
    assert_eq!(v.tuple, vec![0, 1, 2]);
}

#[test]
fn o_operator_verdicts_agree_with_graph_closure() {
    let a = derived_lie();
    let maps = [
        diag(&[q(1), q(0), q(0)]),
        diag(&[q(0), q(0), q(1)]),
        diag(&[q(1), q(1), q(0)]),
        diag(&[q(0), q(2), q(-1)]),
        mat(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]),
        mat(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 1]]),
    ];
    let mut seen = (false, false);
    for m in maps {
        let c = LieOOperator::rota_baxter(&a, &m).unwrap();
        let verdict = check_o_operator(&c).unwrap().passed();
        assert_eq!(verdict, lie_o_oracle(&c), "{m}");
        if verdict {
            seen.0 = true;
        } else {
            seen.1 = true;
        }
    }
    assert!(seen.0 && seen.1);
}

#[test]
fn o_operator_on_a_bad_context_is_an_error() {
    let mut rep = adjoint_rep(&derived_lie());
    rep.rho = rep.rho.add(&rep.rho);
    let c = LieOOperator::new(Matrix::zeros(3, 3), rep).unwrap();
    assert!(matches!(check_o_operator(&c), Err(Error::BadRep(_))));
}

#[test]
fn prelie_from_o_examples() {
    let a = derived_lie();
    let zero = prelie_from_o(&LieOOperator::rota_baxter(&a, &Matrix::zeros(3, 3)).unwrap()).unwrap();
    assert!(zero.prod.is_zero());

    for r in [rank_one_rb(), rank_two_rb()] {
        let c = LieOOperator::rota_baxter(&a, &r).unwrap();
        let p = prelie_from_o(&c).unwrap();
        assert!(same_op(3, |x, y, z| ev(&p.prod, x, y, z), |x, y, z| ev(&a.bracket, &app(&r, x), &app(&r, y), z)));
        assert!(check_3hompre(&p).passed());
        assert!(prelie_holds(&p.prod, &p.alpha));
        assert!(o_morphism_report(&c, &p).passed());
    }

    let bad = LieOOperator::rota_baxter(&a, &id(3)).unwrap();
    assert!(matches!(prelie_from_o(&bad), Err(Error::NotAnOOperator(_))));
}

#[test]
fn prelie_from_o_on_the_coadjoint_context() {
    let a = derived_lie();
    let c = LieOOperator::new(Matrix::zeros(3, 3), coadjoint_rep(&a).unwrap()).unwrap();
    let p = prelie_from_o(&c).unwrap();
    assert!(p.prod.is_zero());
    assert_eq!(p.alpha, id(3));
}

#[test]
fn ldend_from_o_examples() {
    let pre = derived_prelie();
    let zero = ldend_from_o(&PreLieOOperator::rota_baxter(&pre, &Matrix::zeros(3, 3)).unwrap()).unwrap();
    assert!(zero.nw.is_zero() && zero.ne.is_zero());

    let c = PreLieOOperator::rota_baxter(&pre, &rank_two_rb()).unwrap();
    assert!(check_prelie_o_operator(&c).unwrap().passed());
    assert!(prelie_o_oracle(&c));
    let via_o = ldend_from_o(&c).unwrap();
    assert_eq!(via_o, ldend_from_rb(&pre, &rank_two_rb()).unwrap());
    assert!(check_3homldend(&via_o).passed());
}

#[test]
fn prelie_o_verdicts_agree_with_graph_closure() {
    let pre = derived_prelie();
    let small = small_prelie();
    let cases = [
        PreLieOOperator::rota_baxter(&pre, &rank_one_rb()).unwrap(),
        PreLieOOperator::rota_baxter(&pre, &rank_two_rb()).unwrap(),
        PreLieOOperator::rota_baxter(&pre, &id(3)).unwrap(),
        PreLieOOperator::rota_baxter(&small, &id(2)).unwrap(),
        PreLieOOperator::rota_baxter(&small, &diag(&[q(0), q(1)])).unwrap(),
        PreLieOOperator::rota_baxter(&small, &diag(&[q(1), q(0)])).unwrap(),
        PreLieOOperator::new(id(3), ldend_regular_rep(&derived_ldend())).unwrap(),
    ];
    for c in &cases {
        assert_eq!(check_prelie_o_operator(c).unwrap().passed(), prelie_o_oracle(c));
    }
}

#[test]
fn ldend_from_rb_examples() {
    let pre = derived_prelie();
    let z = ldend_from_rb(&pre, &Matrix::zeros(3, 3)).unwrap();
    assert!(z.nw.is_zero() && z.ne.is_zero());

    for r in [rank_one_rb(), rank_two_rb()] {
        let a = ldend_from_rb(&pre, &r).unwrap();
        assert!(same_op(3, |x, y, z| ev(&a.nw, x, y, z), |x, y, z| ev(&pre.prod, &app(&r, x), &app(&r, y), z)));
        assert!(same_op(3, |x, y, z| ev(&a.ne, x, y, z), |x, y, z| ev(&pre.prod, x, &app(&r, y), &app(&r, z))));
        assert!(check_3homldend(&a).passed());
        assert!(ldend_holds(&a.nw, &a.ne, &a.alpha));
        // R maps the horizontal product onto the base product
        let h = a.horizontal();
        assert!(check_morphism(&r, &[&h], &a.alpha, &[&pre.prod], &pre.alpha).passed());
    }
}

#[test]
fn ldend_from_rb_on_the_small_algebra() {
    let small = small_prelie();
    for r in [diag(&[q(0), q(1)]), diag(&[q(1), q(0)]), id(2)] {
        let c = PreLieOOperator::rota_baxter(&small, &r).unwrap();
        match ldend_from_rb(&small, &r) {
            Ok(a) => {
                assert!(prelie_o_oracle(&c));
                assert_eq!(check_3homldend(&a).passed(), ldend_holds(&a.nw, &a.ne, &a.alpha));
                assert!(check_3homldend(&a).passed());
            }
            Err(Error::NotAnOOperator(_)) => assert!(!prelie_o_oracle(&c)),
            Err(e) => panic!("{e}"),
        }
    }
}

// ------------------------------------------------------------ compatibility

#[test]
fn identity_on_the_regular_context_reproduces_the_splitting() {
    for a in [derived_ldend(), ThreeHomLDend::abelian(3)] {
        let rep = ldend_regular_rep(&a);
        let c = PreLieOOperator::new(id(3), rep).unwrap();
        let out = compatible_ldend(&c).unwrap();
        assert_eq!(out, a);
        let h = horizontal_prelie(&a).unwrap();
        assert!(compatibility_report(&out, &h.prod).passed());
        // nw + ne - ne∘swap = {}, recomputed from the raw constants
        assert!(same_op(
            3,
            |x, y, z| sub(&add(&ev(&out.nw, x, y, z), &ev(&out.ne, x, y, z)), &ev(&out.ne, y, x, z)),
            |x, y, z| ev(&h.prod, x, y, z),
        ));
    }
}

#[test]
fn identity_on_the_adjoint_context_is_not_an_o_operator() {
    let c = PreLieOOperator::rota_baxter(&derived_prelie(), &id(3)).unwrap();
    assert!(!prelie_o_oracle(&c));
    assert!(matches!(compatible_ldend(&c), Err(Error::NotAnOOperator(_))));
}

#[test]
fn compatible_ldend_needs_an_invertible_operator() {
    let c = PreLieOOperator::rota_baxter(&derived_prelie(), &rank_two_rb()).unwrap();
    assert!(matches!(compatible_ldend(&c), Err(Error::SingularMap)));
}

// ------------------------------------------------------------ symplectic

#[test]
fn symplectic_checker_examples() {
    let zero_form = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(2), BilinearForm::new(Matrix::zeros(2, 2))).unwrap();
    let r = check_symplectic(&zero_form).unwrap();
    assert!(r.violates("nondegenerate"));

    let s = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(2), plane_form()).unwrap();
    assert!(check_symplectic(&s).unwrap().passed());

    let b4 = mat(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 2], &[0, 0, -2, 0]]);
    let s = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(4), BilinearForm::new(b4)).unwrap();
    assert!(check_symplectic(&s).unwrap().passed());

    let sym = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(2), BilinearForm::new(id(2))).unwrap();
    assert!(check_symplectic(&sym).unwrap().violates("skew"));
}

#[test]
fn abelian_symplectic_instance_induces_zero_products() {
    let s = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(2), plane_form()).unwrap();
    let a = ldend_from_symplectic(&s).unwrap();
    assert!(a.nw.is_zero() && a.ne.is_zero());
    assert!(symplectic_pairing_report(&s, &a).passed());
    let p = prelie_prime_from_symplectic(&s).unwrap();
    assert!(p.prod.is_zero());
    assert!(prime_pairing_report(&s, &p).passed());
}

#[test]
fn degenerate_forms_are_refused() {
    let s = SymplecticForm::new(ThreeHomPreLie::<Q>::abelian(2), BilinearForm::new(Matrix::zeros(2, 2))).unwrap();
    assert!(matches!(ldend_from_symplectic(&s), Err(Error::Degenerate(_))));
}

#[test]
fn closed_form_whose_induced_structure_is_not_dendriform() {
    let s = SymplecticForm::new(small_prelie(), plane_form()).unwrap();
    assert!(check_symplectic(&s).unwrap().passed());
    let a = ldend_from_symplectic(&s).unwrap();
    assert!(symplectic_pairing_report(&s, &a).passed());
    assert!(compatibility_report(&a, &s.alg.prod).passed());
    assert_eq!(a.horizontal(), s.alg.prod);

    let r = check_3homldend(&a);
    assert!(!ldend_holds(&a.nw, &a.ne, &a.alpha));
    let v = r.violations.iter().find(|v| v.identity == "LD3").unwrap();
    assert_eq!(v.tuple, vec![0, 0, 1, 0, 1]);

    let t = symplectic_o_operator(&s).unwrap();
    let r = check_prelie_o_operator(&t).unwrap();
    assert!(!r.passed());
    assert!(!prelie_o_oracle(&t));
}

#[test]
fn plane_symplectic_census() {
    let (mut closed, mut o_op, mut dend) = (0, 0, 0);
    let mut total = 0;
    let vals = [-1, 0, 1];
    for a in vals {
        for b in vals {
            for c in vals {
                for d in vals {
                    if (a, b, c, d) == (0, 0, 0, 0) {
                        continue;
                    }
                    total += 1;
                    let pre = plane_prelie(a, b, c, d);
                    assert!(check_3hompre(&pre).passed());
                    let s = SymplecticForm::new(pre, plane_form()).unwrap();
                    if !check_symplectic(&s).unwrap().passed() {
                        continue;
                    }
                    closed += 1;
                    let t = symplectic_o_operator(&s).unwrap();
                    if check_prelie_o_operator(&t).unwrap().passed() {
                        o_op += 1;
                    }
                    let ld = ldend_from_symplectic(&s).unwrap();
                    assert!(symplectic_pairing_report(&s, &ld).passed());
                    assert!(compatibility_report(&ld, &s.alg.prod).passed());
                    let prime = prelie_prime_from_symplectic(&s).unwrap();
                    assert!(prime_pairing_report(&s, &prime).passed());
                    assert_eq!(prime.prod, ld.vertical());
                    if check_3homldend(&ld).passed() {
                        dend += 1;
                    }
                }
            }
        }
    }
    assert_eq!((total, closed, o_op, dend), (80, 80, 0, 8));
}

#[test]
fn symplectic_instances_that_split() {
    for (a, b, c, d) in [(1, 1, -1, -1), (1, -1, 1, -1)] {
        let s = SymplecticForm::new(plane_prelie(a, b, c, d), plane_form()).unwrap();
        let ld = ldend_from_symplectic(&s).unwrap();
        assert!(check_3homldend(&ld).passed());
        assert!(ldend_holds(&ld.nw, &ld.ne, &ld.alpha));
        let h = horizontal_prelie(&ld).unwrap();
        assert_eq!(h.prod, s.alg.prod);
        let v = vertical_prelie(&ld).unwrap();
        assert!(check_3hompre(&v).passed());
    }
}

#[test]
fn twist_must_preserve_the_form() {
    let alg = ThreeHomPreLie::new(TriTensor::zeros(2), diag(&[q(1), q(2)])).unwrap();
    let s = SymplecticForm::new(alg, plane_form()).unwrap();
    assert!(check_symplectic(&s).unwrap().passed());
    assert!(matches!(ldend_from_symplectic(&s), Err(Error::Degenerate(_))));

    let alg = ThreeHomPreLie::new(TriTensor::zeros(2), diag(&[q(2), qr(1, 2)])).unwrap();
    let s = SymplecticForm::new(alg, plane_form()).unwrap();
    let a = ldend_from_symplectic(&s).unwrap();
    assert!(a.nw.is_zero() && a.ne.is_zero());
}

// ------------------------------------------------------------ Rota-Baxter pairs

#[test]
fn commuting_rota_baxter_examples() {
    let a = derived_lie();
    let z = Matrix::zeros(3, 3);
    let out = ldend_from_commuting_rb(&a, &z, &z).unwrap();
    assert!(out.nw.is_zero() && out.ne.is_zero());

    for r in [rank_one_rb(), rank_two_rb()] {
        let out = ldend_from_commuting_rb(&a, &r, &r).unwrap();
        assert!(check_3homldend(&out).passed());
        assert!(ldend_holds(&out.nw, &out.ne, &out.alpha));
        assert!(commuting_rb_intermediate(&a, &r, &r).unwrap().passed());
        let r12 = r.mul(&r);
        assert!(same_op(3, |x, y, z| ev(&out.nw, x, y, z), |x, y, z| ev(&a.bracket, &app(&r12, x), &app(&r12, y), z)));
        assert!(same_op(
            3,
            |x, y, z| ev(&out.ne, x, y, z),
            |x, y, z| ev(&a.bracket, &app(&r, x), &app(&r12, y), &app(&r, z)),
        ));
        assert_eq!(out, ldend_from_rb(&rb_prelie(&a, &r).unwrap(), &r).unwrap());
    }

    let mixed = ldend_from_commuting_rb(&a, &rank_two_rb(), &rank_one_rb()).unwrap();
    assert!(check_3homldend(&mixed).passed());
}

#[test]
fn non_commuting_pair_is_refused() {
    let a = ThreeHomLie::<Q>::abelian(2);
    let r1 = mat(&[&[0, 1], &[0, 0]]);
    let r2 = mat(&[&[0, 0], &[1, 0]]);
    assert!(matches!(ldend_from_commuting_rb(&a, &r1, &r2), Err(Error::NotCommuting)));
    assert!(matches!(ldend_from_commuting_rb(&derived_lie(), &id(3), &id(3)), Err(Error::NotAnOOperator(_))));
}

// ------------------------------------------------------------ trace functions

/// `[e0, e1] = e1` with identity twist.
fn binary() -> HomLie<Q> {
    let mut b = BiTensor::zeros(3);
    b.set(0, 1, 1, q(1));
    b.set(1, 0, 1, q(-1));
    HomLie::new(b, id(3)).unwrap()
}

fn e2_coordinate() -> Vec<Q> {
    vec![q(0), q(0), q(1)]
}

#[test]
fn trace_examples() {
    let h = binary();
    assert!(trace_3homlie(&h, &[q(0), q(0), q(0)]).unwrap().bracket.is_zero());

    let t = trace_3homlie(&h, &e2_coordinate()).unwrap();
    let tau = |x: &[Q]| x[2].clone();
    let oracle = |x: &[Q], y: &[Q], z: &[Q]| {
        let b = |u: &[Q], v: &[Q]| h.bracket.eval(u, v);
        add(&add(&smul(&tau(x), &b(y, z)), &smul(&tau(y), &b(z, x))), &smul(&tau(z), &b(x, y)))
    };
    assert!(same_op(3, |x, y, z| ev(&t.bracket, x, y, z), oracle));
    assert!(check_3homlie(&t).passed());
    assert!(lie_holds(&t.bracket, &t.alpha));

    assert!(matches!(trace_3homlie(&h, &[q(0), q(1), q(0)]), Err(Error::NotATrace(_))));
}

#[test]
fn trace_must_be_fixed_by_the_twist() {
    let mut h = binary();
    h.alpha = diag(&[q(1), q(1), q(2)]);
    assert!(matches!(trace_3homlie(&h, &e2_coordinate()), Err(Error::NotATrace(_))));
}

#[test]
fn trace_rota_baxter_examples() {
    let h = binary();
    let tau = e2_coordinate();
    let z = Matrix::zeros(3, 3);
    let out = trace_rb_ldend(&h, &tau, &z, &z).unwrap();
    assert!(out.nw.is_zero() && out.ne.is_zero());

    let a = trace_3homlie(&h, &tau).unwrap();
    let r = diag(&[q(1), q(0), q(1)]);
    for (r1, r2) in [(r.clone(), r.clone()), (r.clone(), diag(&[q(0), q(0), q(1)]))] {
        let out = trace_rb_ldend(&h, &tau, &r1, &r2).unwrap();
        assert_eq!(out, ldend_from_commuting_rb(&a, &r1, &r2).unwrap());
        assert!(check_3homldend(&out).passed());
    }
    assert!(!trace_rb_ldend(&h, &tau, &r, &r).unwrap().nw.is_zero());
}
