use std::sync::Arc;

use super::*;
use crate::calculus::Calculus;
use crate::group::{cyclic, symmetric3, AdSet, Representation};
use crate::linalg::Matrix;
use crate::rational::{int, ratio, Rational};
use crate::riemannian::{killing_form, Connection};

fn s3() -> (Calculus, Representation) {
    let g = Arc::new(symmetric3());
    let (u, v) = (g.element("u").unwrap(), g.element("v").unwrap());
    let rho = Representation::new(
        g.clone(),
        2,
        &[
            (u, Matrix::from_i64(&[&[0, 1], &[1, 0]])),
            (v, Matrix::from_i64(&[&[1, 0], &[-1, -1]])),
        ],
    )
    .unwrap();
    (Calculus::new(AdSet::from_class_index(g, 0).unwrap()), rho)
}

fn third(m: &[&[i64]]) -> Matrix {
    Matrix::from_i64(m).scale(&ratio(1, 3))
}

#[test]
fn s3_gammas() {
    let (c, rho) = s3();
    let k = killing_form(c.set());
    let g = tautological_gammas(&k, &rho, c.set()).unwrap();
    assert_eq!(g.gammas[0], third(&[&[-1, 1], &[1, -1]]));
    assert_eq!(g.gammas[1], third(&[&[0, 0], &[-1, -2]]));
    assert_eq!(g.gammas[2], third(&[&[-2, -1], &[0, 0]]));
    assert_eq!(g.sum(), Matrix::scalar(2, int(-1)));
    assert!(g.is_equivariant(c.set(), &rho));
    let trivial = Representation::trivial(c.group().clone(), 3);
    let t = tautological_gammas(&k, &trivial, c.set()).unwrap();
    assert!(t.gammas.iter().all(Matrix::is_zero));
}

#[test]
fn s3_casimir() {
    let (c, rho) = s3();
    let k = killing_form(c.set());
    let cas = braided_casimir(&k, c.set()).unwrap();
    let mut expect = vec![int(0); 6];
    expect[0] = int(2);
    for l in ["u", "v", "uvu"] {
        expect[c.group().element(l).unwrap()] = ratio(-2, 3);
    }
    assert_eq!(cas.coeffs, expect);
    assert_eq!(cas.evaluate(&rho), Matrix::scalar(2, int(2)));
    let g = tautological_gammas(&k, &rho, c.set()).unwrap();
    let mut norm = Matrix::zeros(2, 2);
    for a in 0..3 {
        for b in 0..3 {
            norm = &norm + &(&g.gammas[a] * &g.gammas[b]).scale(&k.eta[(a, b)]);
        }
    }
    assert_eq!(norm, cas.evaluate(&rho));
    let degenerate = killing_form(&AdSet::from_class_index(c.group().clone(), 1).unwrap());
    assert_eq!(
        braided_casimir(&degenerate, c.set()),
        Err(DiracError::DegenerateKilling)
    );
}

#[test]
fn levi_civita_dirac() {
    let (c, rho) = s3();
    let k = killing_form(c.set());
    let g = tautological_gammas(&k, &rho, c.set()).unwrap();
    let lc = Connection::constant(
        &c,
        &Matrix::from_fn(3, 3, |a, b| if a == b { ratio(2, 3) } else { ratio(-1, 3) }),
    );
    let d = dirac_matrix(&c, &lc, &g, &rho);
    let zero = dirac_matrix(&c, &Connection::zero(&c), &g, &rho);
    assert_eq!(d.matrix, &zero.matrix - &Matrix::identity(12));
    let tr = action_trace_d2(&d);
    assert_eq!(tr, action_trace_d2(&d));
    assert!(tr > Rational::from_integer(0.into()));
}

#[test]
fn connes_checks() {
    let (c, rho) = s3();
    let k = killing_form(c.set());
    let g = tautological_gammas(&k, &rho, c.set()).unwrap();
    let report = connes_necessary_check(&g, c.set());
    assert!(!report.passes());
    assert_eq!(report.failures().count(), 4);
    let z2 = AdSet::new(Arc::new(cyclic(2)), &[1]).unwrap();
    let nil = GammaFamily {
        gammas: vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])],
    };
    assert!(connes_necessary_check(&nil, &z2).passes());
    let zero = GammaFamily {
        gammas: vec![Matrix::zeros(2, 2); 3],
    };
    assert!(connes_necessary_check(&zero, c.set()).passes());
}

#[test]
fn spectra_of_simple_matrices() {
    let s = spectrum_of(&Matrix::zeros(4, 4), DEFAULT_DIGITS);
    assert_eq!(s.char_poly.to_string(), "x^4");
    assert_eq!(s.roots.len(), 1);
    assert_eq!(s.roots[0].multiplicity, 4);
    let diag = Matrix::from_fn(3, 3, |i, j| if i == j { ratio(i as i64 + 1, 2) } else { int(0) });
    let s = spectrum_of(&diag, 10);
    assert_eq!(s.char_poly.to_string(), "x^3 - 3x^2 + 11/4x - 3/4");
    let shown: Vec<String> = s.roots.iter().map(|r| s.format_root(r)).collect();
    assert_eq!(shown, ["0.5000000000", "1.0000000000", "1.5000000000"]);
    assert!(s.reconstruction_within(8));
    let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    let s = spectrum_of(&rot, 5);
    let shown: Vec<String> = s.roots.iter().map(|r| s.format_root(r)).collect();
    assert_eq!(shown, ["0.00000-1.00000i", "0.00000+1.00000i"]);
    assert!(s.symmetric);
}
