use std::sync::Arc;

use super::*;
use crate::calculus::{Calculus, GroupFunction};
use crate::dirac::{tau, tautological_gammas};
use crate::group::{cyclic, symmetric3, AdSet, Representation};
use crate::linalg::Matrix;
use crate::rational::{int, ratio, Rational};
use crate::riemannian::{
    killing_form, lift, projection_matrix, Coframing, Connection, LiftFlavor,
};

fn s3() -> Calculus {
    Calculus::new(AdSet::from_class_index(Arc::new(symmetric3()), 0).unwrap())
}

fn z3() -> Calculus {
    let g = Arc::new(cyclic(3));
    let members = [g.element("g").unwrap(), g.element("g^2").unwrap()];
    Calculus::new(AdSet::new(g, &members).unwrap())
}

fn levi_civita(calc: &Calculus) -> Connection {
    let n = calc.n();
    Connection::constant(
        calc,
        &Matrix::from_fn(n, n, |a, b| if a == b { ratio(2, 3) } else { ratio(-1, 3) }),
    )
}

fn wiggly(calc: &Calculus) -> Connection {
    let n = calc.n();
    let order = calc.order();
    Connection::new(
        n,
        (0..n * n)
            .map(|k| GroupFunction::from_fn(order, |x| ratio(((k * 5 + x * 3) % 7) as i64 - 3, 2)))
            .collect(),
    )
}

fn s3_rep(calc: &Calculus) -> Representation {
    let g = calc.group();
    let (u, v) = (g.element("u").unwrap(), g.element("v").unwrap());
    Representation::new(
        g.clone(),
        2,
        &[
            (u, Matrix::from_i64(&[&[0, 1], &[1, 0]])),
            (v, Matrix::from_i64(&[&[1, 0], &[-1, -1]])),
        ],
    )
    .unwrap()
}

#[test]
fn fibration_checks() {
    let cayley = from_group(&s3(), None);
    assert_eq!(cayley.calc.edges().len(), 18);
    assert!(validate_fibration(&cayley.calc, 3));
    let uneven = EdgeCalculus::new(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
    assert!(!validate_fibration(&uneven, 1));
    let complete: Vec<(usize, usize)> = (0..4)
        .flat_map(|x| (0..4).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    assert!(validate_fibration(&EdgeCalculus::new(4, &complete).unwrap(), 3));
    assert_eq!(
        EdgeCalculus::new(2, &[(1, 1)]),
        Err(FinsetError::DiagonalEdge(1))
    );
}

#[test]
fn local_vbeins() {
    let calc = EdgeCalculus::new(2, &[(0, 1), (1, 0)]).unwrap();
    let v = local_vbein(&calc, &[vec![1], vec![0]]).unwrap();
    assert!(v.check_inverse());
    assert_eq!(v.e(&calc, 0, 0, 1), int(1));
    assert_eq!(
        local_vbein(&calc, &[vec![0], vec![0]]).unwrap_err(),
        FinsetError::NotBijective(0)
    );
    let tri: Vec<(usize, usize)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let calc3 = EdgeCalculus::new(3, &tri).unwrap();
    let twisted: Vec<Vec<usize>> = (0..3)
        .map(|x| {
            let mut f = calc3.fiber(x).to_vec();
            if x == 1 {
                f.reverse();
            }
            f
        })
        .collect();
    assert!(local_vbein(&calc3, &twisted).unwrap().check_inverse());
}

#[test]
fn z2_has_no_two_forms() {
    let g = Arc::new(cyclic(2));
    let c = Calculus::new(AdSet::from_class_index(g, 0).unwrap());
    let emb = from_group(&c, None);
    assert_eq!(emb.calc.edges().len(), 2);
    assert!(emb.omega2_vanishes());
}

#[test]
fn cartan_operators_reduce_to_translation() {
    let c = s3();
    let emb = from_group(&c, None);
    let order = c.order();
    for x in 0..order {
        let f: Vec<Rational> = GroupFunction::delta(order, x).values().to_vec();
        for a in 0..3 {
            for b in 0..3 {
                let r = rho(&emb.calc, &emb.vbein, a, b, &f);
                let expect: Vec<Rational> = if a == b {
                    c.push_right_at(a, &GroupFunction::new(f.clone())).values().to_vec()
                } else {
                    vec![int(0); order]
                };
                assert_eq!(r, expect);
            }
        }
    }
    for th in theta_components(&emb.calc, &emb.vbein) {
        assert_eq!(th, vec![int(1); 3]);
    }
}

#[test]
fn zero_connection_gives_bare_difference() {
    let c = s3();
    let emb = from_group(&c, None);
    let zero = vec![EdgeForm::zero(&emb.calc); 3];
    let comps = vec![vec![int(2), int(-1), int(5)]; 6];
    let alpha = from_components(&emb.calc, &emb.vbein, &comps);
    assert!(nabla_tensor(&emb.calc, &emb.vbein, &zero, &emb.tau, &alpha).is_zero());
    let t = torsion_tensor(&emb.calc, &emb.vbein, &emb.wedge, &zero, &emb.tau);
    for a in 0..3 {
        let de = d_one_form(&emb.calc, &emb.wedge, &frame_form(&emb.calc, &emb.vbein, a));
        assert_eq!(t[a], de);
    }
}

#[test]
fn abelian_torsion_is_d_of_frame() {
    let c = z3();
    let emb = from_group(&c, None);
    assert!(emb.tau.iter().all(Matrix::is_zero));
    let a = emb.connection(&c, &wiggly(&c));
    let t = torsion_tensor(&emb.calc, &emb.vbein, &emb.wedge, &a, &emb.tau);
    for (k, tk) in t.iter().enumerate() {
        assert_eq!(*tk, d_one_form(&emb.calc, &emb.wedge, &frame_form(&emb.calc, &emb.vbein, k)));
    }
}

#[test]
fn engines_agree_on_s3() {
    let c = s3();
    let cof = Coframing::killing(&c).unwrap();
    let rho = s3_rep(&c);
    let gammas = tautological_gammas(&killing_form(c.set()), &rho, c.set()).unwrap();
    let tau_w = tau(&rho, c.set());
    for flavor in [LiftFlavor::Projection, LiftFlavor::Woronowicz] {
        let l = lift(&c, flavor);
        let emb = from_group(&c, Some(&l));
        assert_eq!(emb.wedge.lift_is_section(), Some(flavor == LiftFlavor::Projection));
        assert!(emb.wedge.satisfies_zero_sum(&emb.calc));
        for conn in [
            Connection::zero(&c),
            Connection::maurer_cartan(&c),
            levi_civita(&c),
            wiggly(&c),
        ] {
            let report = check_equivalence(&c, &emb, &conn, &l, &cof, Some((&gammas, &tau_w)));
            assert!(report.all_pass(), "{:?}", report.checks);
        }
    }
}

#[test]
fn engines_agree_on_z3() {
    let c = z3();
    let cof = Coframing::constant(&Matrix::identity(2), 3).unwrap();
    let l = lift(&c, LiftFlavor::Projection);
    let emb = from_group(&c, Some(&l));
    for conn in [Connection::zero(&c), Connection::maurer_cartan(&c), wiggly(&c)] {
        let report = check_equivalence(&c, &emb, &conn, &l, &cof, None);
        assert!(report.all_pass(), "{:?}", report.checks);
    }
}

#[test]
fn levi_civita_geometry_on_the_embedding() {
    let c = s3();
    let l = lift(&c, LiftFlavor::Projection);
    let emb = from_group(&c, Some(&l));
    let a = emb.connection(&c, &levi_civita(&c));
    let (calc, vb, wf) = (&emb.calc, &emb.vbein, &emb.wedge);
    assert!(torsion_tensor(calc, vb, wf, &a, &emb.tau).iter().all(PairForm::is_zero));
    let cof = Coframing::killing(&c).unwrap();
    let frames = coframe(calc, vb, &emb.upper_metric(&c, &cof));
    assert!(cotorsion_tensor(calc, wf, &a, &emb.tau, &frames).iter().all(PairForm::is_zero));
    let curv = curvature_tensor(calc, wf, &a, c.group(), &emb.labels);
    assert!(curv.is_regular);
    for (k, f) in curv.forms.iter().enumerate() {
        assert_eq!(*f, d_one_form(calc, wf, &frame_form(calc, vb, k)));
    }
    // Ricci = (2/3)(θ⊗θ − g) with the Killing metric g = 3 E_a⊗E_a
    let ric = ricci_tensor(calc, vb, wf, &curv.forms, &emb.tau).unwrap();
    let comps = path_components(calc, vb, &ric);
    let expect = Matrix::from_fn(3, 3, |a, b| if a == b { ratio(-4, 3) } else { ratio(2, 3) });
    assert!(comps.iter().all(|m| *m == expect));
    let mc = emb.connection(&c, &Connection::maurer_cartan(&c));
    let flat = curvature_tensor(calc, wf, &mc, c.group(), &emb.labels);
    assert!(flat.forms.iter().all(PairForm::is_zero));
    let bare = EdgeCalculus::new(calc.points(), calc.edges()).unwrap();
    let no_lift = WedgeFamily {
        p: wf.p.clone(),
        lift: None,
    };
    assert_eq!(
        ricci_tensor(&bare, vb, &no_lift, &curv.forms, &emb.tau),
        Err(FinsetError::MissingLift)
    );
}

#[test]
fn projector_family_matches_constant_projector() {
    let c = s3();
    let l = lift(&c, LiftFlavor::Projection);
    let emb = from_group(&c, Some(&l));
    let pi = projection_matrix(&c);
    assert_eq!(verify_projector(&emb.calc, &emb.vbein, &emb.wedge, &pi), Ok(true));
    let w = lift(&c, LiftFlavor::Woronowicz);
    let emb_w = from_group(&c, Some(&w));
    assert_eq!(verify_projector(&emb_w.calc, &emb_w.vbein, &emb_w.wedge, &pi), Ok(false));
    let pi_w = &w.matrix * c.omega2().wedge_matrix();
    assert_eq!(verify_projector(&emb_w.calc, &emb_w.vbein, &emb_w.wedge, &pi_w), Ok(true));
}

#[test]
fn engine_moduli_match_group_moduli() {
    let c = s3();
    let emb = from_group(&c, None);
    let tf = solve_torsion_free(&emb.calc, &emb.vbein, &emb.wedge, &emb.tau);
    assert_eq!(tf.dimension(), Some(12));
    let cof = Coframing::killing(&c).unwrap();
    let frames = coframe(&emb.calc, &emb.vbein, &emb.upper_metric(&c, &cof));
    let ctf = solve_cotorsion_free(&emb.calc, &emb.wedge, &emb.tau, &frames);
    assert_eq!(ctf.dimension(), Some(12));
    assert_eq!(tf.intersect(&ctf).dimension(), Some(4));
}
