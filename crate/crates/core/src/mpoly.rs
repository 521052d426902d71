//! Multivariate polynomials over `Q` and a small Buchberger implementation
//! in lexicographic order, enough to find the rational points of a
//! zero-dimensional system in a handful of variables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::Rational;
use crate::roots::{aberth_roots, Fixed};

/// Exponent vector; `Vec` ordering is lexicographic with `x0 > x1 > …`.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            let mm: Monomial = m1.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(mm, c1 * c);
        }
        out
    }

    fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Substitutes `x_last = value` and drops the last variable.
    pub fn substitute_last(&self, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let e = *m.last().unwrap() as usize;
            out.add_term(m[..self.nvars - 1].to_vec(), c * num_traits::pow(value.clone(), e));
        }
        out
    }

    /// When the polynomial only involves the last variable, returns it as a
    /// univariate polynomial.
    pub fn as_univariate_in_last(&self) -> Option<Poly> {
        let n = self.nvars;
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m[..n - 1].iter().any(|&e| e != 0) {
                return None;
            }
            let e = m[n - 1] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(Poly::new(coeffs))
    }

    fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0)
    }
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full normal form of `p` modulo `basis`.
fn reduce(p: &MPoly, basis: &[MPoly]) -> MPoly {
    let mut rem = MPoly::zero(p.nvars);
    let mut work = p.clone();
    while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis
            .iter()
            .find(|g| g.leading().is_some_and(|(gm, _)| divides(gm, &lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                let factor = &lc / gc;
                work = work.sub(&g.mul_term(&quotient(&lm, gm), &factor));
            }
            None => {
                rem.add_term(lm.clone(), lc);
                work.terms.remove(&lm);
            }
        }
    }
    rem
}

/// Reduced lexicographic Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[MPoly]) -> Vec<MPoly> {
    let mut basis: Vec<MPoly> = gens.iter().filter(|g| !g.is_zero()).map(MPoly::monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading().unwrap();
        let (mj, _) = basis[j].leading().unwrap();
        // coprime leading monomials reduce to zero
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm(mi, mj);
        let s = basis[i]
            .mul_term(&quotient(&l, mi), &Rational::one())
            .sub(&basis[j].mul_term(&quotient(&l, mj), &Rational::one()));
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalize
    let mut minimal: Vec<MPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gm = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading().unwrap().0;
            j != i && divides(hm, gm) && (hm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    // interreduce
    let reduced: Vec<MPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[i];
            let (lm, lc) = g.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let mut tail = g.clone();
            tail.terms.remove(&lm);
            let mut out = reduce(&tail, &others);
            out.add_term(lm, lc);
            out.monic()
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// Rational roots of a nonzero univariate polynomial, ascending, without
/// multiplicity.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    for (factor, _) in p.square_free_decomposition() {
        let ints = factor.primitive_integer();
        let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
        let size_bits: u64 = ints.iter().map(|c| c.bits()).max().unwrap_or(1);
        let ctx = Fixed {
            bits: (2 * size_bits + 96) as u32,
        };
        let Some(approx) = aberth_roots(&factor, ctx) else {
            continue;
        };
        for z in approx {
            // p/q in lowest terms has q | lead, so lead·root is an integer.
            let scaled = (&z.re * &lead) >> (ctx.bits - 1);
            let rounded: BigInt = (scaled + 1) >> 1;
            let candidate = Rational::new(rounded, lead.clone());
            if factor.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                roots.push(candidate);
            }
        }
    }
    roots.sort();
    roots
}

/// Outcome of [`rational_points`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSet {
    /// All rational solutions; `has_irrational` records whether the
    /// finite solution set also contains points outside `Q^n`.
    Finite {
        points: Vec<Vec<Rational>>,
        has_irrational: bool,
    },
    /// The solution set has positive dimension.
    PositiveDimensional,
}

/// Rational common zeros of `polys` in `nvars` variables.
pub fn rational_points(polys: &[MPoly], nvars: usize) -> PointSet {
    let gb = groebner_basis(polys);
    if gb.iter().any(MPoly::is_nonzero_constant) {
        return PointSet::Finite {
            points: Vec::new(),
            has_irrational: false,
        };
    }
    if nvars == 0 {
        return PointSet::Finite {
            points: vec![Vec::new()],
            has_irrational: false,
        };
    }
    let univariate: Vec<Poly> = gb.iter().filter_map(MPoly::as_univariate_in_last).collect();
    let Some(h) = univariate.into_iter().reduce(|a, b| a.gcd(&b)) else {
        return PointSet::PositiveDimensional;
    };
    let roots = rational_roots(&h);
    let sf_degree: usize = h.square_free_decomposition().iter().map(|(s, _)| s.degree()).sum();
    let mut has_irrational = sf_degree > roots.len();
    let mut points = Vec::new();
    for r in roots {
        let reduced: Vec<MPoly> = gb.iter().map(|g| g.substitute_last(&r)).collect();
        match rational_points(&reduced, nvars - 1) {
            PointSet::PositiveDimensional => return PointSet::PositiveDimensional,
            PointSet::Finite {
                points: sub,
                has_irrational: irr,
            } => {
                has_irrational |= irr;
                for mut p in sub {
                    p.push(r.clone());
                    points.push(p);
                }
            }
        }
    }
    points.sort();
    PointSet::Finite {
        points,
        has_irrational,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn x(i: usize) -> MPoly {
        MPoly::var(2, i)
    }

    fn c(q: Rational) -> MPoly {
        MPoly::constant(2, q)
    }

    #[test]
    fn line_meets_parabola() {
        // y = x^2 and y = 2x - 1 touch only at (1, 1)
        let f1 = x(1).sub(&x(0).mul(&x(0)));
        let f2 = x(1).sub(&x(0).scale(&int(2))).add(&c(int(1)));
        match rational_points(&[f1, f2], 2) {
            PointSet::Finite { points, has_irrational } => {
                assert_eq!(points, vec![vec![int(1), int(1)]]);
                assert!(!has_irrational);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn irrational_and_rational_mix() {
        // x^2 = 2 or x = 1/3, y = x
        let f1 = x(0).mul(&x(0)).sub(&c(int(2))).mul(&x(0).sub(&c(ratio(1, 3))));
        let f2 = x(1).sub(&x(0));
        match rational_points(&[f1, f2], 2) {
            PointSet::Finite { points, has_irrational } => {
                assert_eq!(points, vec![vec![ratio(1, 3), ratio(1, 3)]]);
                assert!(has_irrational);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn positive_dimensional_detected() {
        let f = x(0).sub(&x(1));
        assert_eq!(rational_points(&[f], 2), PointSet::PositiveDimensional);
    }

    #[test]
    fn inconsistent_system() {
        let f1 = x(0).mul(&x(1)).sub(&c(int(1)));
        let f2 = x(0);
        assert_eq!(
            rational_points(&[f1, f2], 2),
            PointSet::Finite {
                points: vec![],
                has_irrational: false
            }
        );
    }

    #[test]
    fn rational_root_recovery() {
        let p = Poly::linear(ratio(-7, 12)).mul(&Poly::linear(ratio(5, 3))).mul(&Poly::new(vec![
            int(1),
            int(0),
            int(1),
        ]));
        assert_eq!(rational_roots(&p), vec![ratio(-7, 12), ratio(5, 3)]);
    }
}
