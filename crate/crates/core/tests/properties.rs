//! Randomized identities for the group calculus and the finite-set engine.

use std::sync::Arc;

use proptest::prelude::*;

use qgeom::calculus::{Calculus, GroupFunction};
use qgeom::dirac::{action_trace_d2, char_poly, dirac_matrix, tautological_gammas};
use qgeom::finset::{self, d_function, d_one_form, EdgeCalculus, VBein, WedgeFamily};
use qgeom::group::{cyclic, dihedral, symmetric3, symmetric4, AdSet, GroupTable, Representation};
use qgeom::linalg::Matrix;
use qgeom::rational::{int, Rational};
use qgeom::riemannian::{
    curvature, intersect_moduli, killing_form, lift, riemann, solve_cotorsion_free,
    solve_torsion_free, Coframing, Connection, LiftFlavor,
};

fn groups() -> Vec<Arc<GroupTable>> {
    vec![
        Arc::new(cyclic(2)),
        Arc::new(cyclic(5)),
        Arc::new(cyclic(6)),
        Arc::new(symmetric3()),
        Arc::new(dihedral(4)),
        Arc::new(dihedral(5)),
        Arc::new(symmetric4()),
    ]
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn function(order: usize) -> impl Strategy<Value = GroupFunction> {
    prop::collection::vec(small_rational(), order).prop_map(GroupFunction::new)
}

/// A group, one of its nontrivial classes as `C`, and a seed.
fn group_and_class() -> impl Strategy<Value = (Arc<GroupTable>, usize)> {
    (0..groups().len()).prop_flat_map(|i| {
        let g = groups()[i].clone();
        let classes = g.conjugacy_classes().len() - 1;
        (Just(g), 0..classes)
    })
}

fn random_connection(calc: &Calculus) -> impl Strategy<Value = Connection> {
    let n = calc.n();
    let order = calc.order();
    prop::collection::vec(function(order), n * n).prop_map(move |c| Connection::new(n, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partial_derivatives_obey_leibniz_and_composition(
        (g, m, n, f, a, b) in (0..groups().len()).prop_flat_map(|i| {
            let g = groups()[i].clone();
            let order = g.order();
            (Just(g), function(order), function(order), function(order), 0..order, 0..order)
        })
    ) {
        let partial = |a: usize, f: &GroupFunction| &f.translate(&g, a) - f;
        let lhs = partial(a, &(&m * &n));
        let rhs = &(&m * &partial(a, &n)) + &(&partial(a, &m) * &n.translate(&g, a));
        prop_assert_eq!(lhs, rhs);
        let ab = g.mul(a, b);
        let twice = partial(a, &partial(b, &f));
        prop_assert_eq!(&twice, &(&(&partial(ab, &f) - &partial(a, &f)) - &partial(b, &f)));
        let moved = g.mul(g.mul(g.inv(b), a), b);
        prop_assert_eq!(
            &twice - &partial(b, &partial(moved, &f)),
            &partial(moved, &f) - &partial(a, &f)
        );
    }

    #[test]
    fn d_squares_to_zero((g, class) in group_and_class(), seed in any::<u64>()) {
        let calc = Calculus::new(AdSet::from_class_index(g, class).unwrap());
        let order = calc.order();
        let f = GroupFunction::from_fn(order, |x| int(((seed >> (x % 60)) % 7) as i64 - 3));
        prop_assert!(calc.d_one_form(&calc.differential(&f)).is_zero());
    }

    #[test]
    fn killing_form_is_symmetric_and_ad_invariant((g, class) in group_and_class()) {
        let set = AdSet::from_class_index(g.clone(), class).unwrap();
        let eta = killing_form(&set).eta;
        prop_assert_eq!(&eta, &eta.transpose());
        for h in g.elements() {
            for a in 0..set.len() {
                for b in 0..set.len() {
                    let (ha, hb) = (set.conj_by_element(h, a), set.conj_by_element(h, b));
                    prop_assert_eq!(&eta[(ha, hb)], &eta[(a, b)]);
                }
            }
        }
    }

    #[test]
    fn projection_lift_is_a_section((g, class) in group_and_class()) {
        let calc = Calculus::new(AdSet::from_class_index(g, class).unwrap());
        let l = lift(&calc, LiftFlavor::Projection);
        prop_assert_eq!(
            calc.omega2().wedge_matrix() * &l.matrix,
            Matrix::identity(calc.omega2().dim())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_riemann_operator_vanishes(
        (calc, conn) in (2usize..=7, any::<u32>()).prop_flat_map(|(n, mask)| {
            let g = Arc::new(cyclic(n));
            let mut members: Vec<usize> = (1..n).filter(|k| mask & (1 << k) != 0).collect();
            if members.is_empty() {
                members.push(1);
            }
            let calc = Calculus::new(AdSet::new(g, &members).unwrap());
            let conn = random_connection(&calc);
            (Just(calc), conn)
        })
    ) {
        let forms = curvature(&calc, &conn).forms;
        for a in 0..calc.n() {
            prop_assert!(riemann(&calc, &forms, &calc.basis_form(a)).is_zero());
        }
    }

    /// Circulant graph `x → x + s` on `Z_points`: every fiber has `|shifts|`
    /// elements.
    #[test]
    fn finset_partial_obeys_twisted_leibniz(
        (calc, frames, m, n) in (3usize..=6).prop_flat_map(|points| {
            (Just(points), prop::collection::btree_set(1..points, 1..points))
        }).prop_flat_map(|(points, shifts)| {
            let edges: Vec<(usize, usize)> = (0..points)
                .flat_map(|x| shifts.iter().map(move |s| (x, (x + s) % points)))
                .collect();
            let calc = EdgeCalculus::new(points, &edges).unwrap();
            let k = shifts.len();
            let frame = prop::collection::vec(small_rational(), k * k)
                .prop_map(move |v| Matrix::from_fn(k, k, |i, j| v[i * k + j].clone()));
            (
                Just(calc),
                prop::collection::vec(frame, points),
                prop::collection::vec(small_rational(), points),
                prop::collection::vec(small_rational(), points),
            )
        })
    ) {
        let vbein = VBein::new(&calc, frames);
        prop_assume!(vbein.is_ok());
        let vbein = vbein.unwrap();
        let mn: Vec<Rational> = m.iter().zip(&n).map(|(a, b)| a * b).collect();
        for a in 0..vbein.dim() {
            let lhs = finset::partial(&calc, &vbein, a, &mn);
            let dn = finset::partial(&calc, &vbein, a, &n);
            let mut rhs: Vec<Rational> = m.iter().zip(&dn).map(|(x, y)| x * y).collect();
            for b in 0..vbein.dim() {
                let dm = finset::partial(&calc, &vbein, b, &m);
                let twisted = finset::rho(&calc, &vbein, b, a, &n);
                for (r, (p, q)) in rhs.iter_mut().zip(dm.iter().zip(&twisted)) {
                    *r += p * q;
                }
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// Any surjection family whose rows sum to zero off the edges gives
    /// `d² = 0` on functions.
    #[test]
    fn finset_d_squares_to_zero(
        (calc, raw, f) in (3usize..=5, any::<u64>()).prop_flat_map(|(points, mask)| {
            let mut edges = Vec::new();
            for x in 0..points {
                for y in 0..points {
                    if x != y && (mask >> (x * points + y)) & 1 == 1 {
                        edges.push((x, y));
                    }
                }
            }
            let calc = EdgeCalculus::new(points, &edges).unwrap();
            let sizes: Vec<usize> = (0..calc.pairs().len()).map(|k| calc.middles(k).len()).collect();
            let raw = sizes
                .into_iter()
                .map(|s| prop::collection::vec(prop::collection::vec(small_rational(), s), 1..=s.max(1)))
                .collect::<Vec<_>>();
            (Just(calc), raw, prop::collection::vec(small_rational(), points))
        })
    ) {
        let p = calc
            .pairs()
            .iter()
            .zip(raw)
            .map(|(&(x, z), rows)| {
                let cols = rows[0].len();
                let zero_sum = x != z && calc.edge(x, z).is_none();
                let rows = rows
                    .into_iter()
                    .map(|mut r| {
                        if zero_sum && cols > 0 {
                            let total = r.iter().fold(Rational::from_integer(0.into()), |acc, v| acc + v);
                            r[0] -= total;
                        }
                        r
                    })
                    .collect();
                Matrix::from_rows(rows, cols)
            })
            .collect();
        let wf = WedgeFamily { p, lift: None };
        prop_assert!(wf.satisfies_zero_sum(&calc));
        prop_assert!(d_one_form(&calc, &wf, &d_function(&calc, &f)).is_zero());
    }
}

fn s3_data(perm: &[usize]) -> (Calculus, Representation) {
    let base = symmetric3();
    let g = Arc::new(base.relabeled(perm));
    let transpositions: Vec<usize> = ["u", "v", "uvu"].iter().map(|l| g.element(l).unwrap()).collect();
    let calc = Calculus::new(AdSet::new(g.clone(), &transpositions).unwrap());
    (calc, Representation::regular(g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Moduli dimensions and Dirac invariants do not depend on how the group
    /// elements are numbered.
    #[test]
    fn relabeling_preserves_invariants(tail in Just((1..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = std::iter::once(0).chain(tail).collect();
        let identity: Vec<usize> = (0..6).collect();
        let invariants = |perm: &[usize]| {
            let (calc, rho) = s3_data(perm);
            let cof = Coframing::killing(&calc).unwrap();
            let tf = solve_torsion_free(&calc);
            let ctf = solve_cotorsion_free(&calc, &cof);
            let both = intersect_moduli(&tf, &ctf).dimension();
            let gammas = tautological_gammas(&killing_form(calc.set()), &rho, calc.set()).unwrap();
            let d = dirac_matrix(&calc, &Connection::maurer_cartan(&calc), &gammas, &rho);
            (tf.dimension(), ctf.dimension(), both, char_poly(&d.matrix), action_trace_d2(&d))
        };
        prop_assert_eq!(invariants(&perm), invariants(&identity));
    }
}
