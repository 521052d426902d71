//! Text formatting and JSON encoding of module outputs.

use num_traits::{One, Zero};
use serde_json::Value;

use qgeom::calculus::{Calculus, Cotensor, GroupFunction, TwoForm};
use qgeom::io;
use qgeom::linalg::Matrix;
use qgeom::rational::{self, Rational};
use qgeom::riemannian::Connection;

pub fn q(r: &Rational) -> String {
    rational::fmt(r)
}

/// A constant prints as its value, anything else as the list of values
/// over the group elements.
pub fn function(f: &GroupFunction) -> String {
    if f.is_constant() {
        return f.values().first().map_or_else(|| "0".into(), q);
    }
    let vals: Vec<String> = f.values().iter().map(q).collect();
    format!("[{}]", vals.join(", "))
}

pub fn matrix(m: &Matrix, indent: &str) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(q).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("{indent}[{}]", padded.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// `s·I` when `m` is scalar.
pub fn scalar_of(m: &Matrix) -> Option<Rational> {
    let s = m[(0, 0)].clone();
    (*m == Matrix::scalar(m.rows(), s.clone())).then_some(s)
}

/// `p·I + r·J` decomposition of a matrix, if it has that shape.
pub fn identity_plus_all_ones(m: &Matrix) -> Option<(Rational, Rational)> {
    let n = m.rows();
    let r = if n > 1 { m[(0, 1)].clone() } else { Rational::zero() };
    let p = &m[(0, 0)] - &r;
    let rebuilt = Matrix::from_fn(n, n, |a, b| if a == b { &p + &r } else { r.clone() });
    (rebuilt == *m).then_some((p, r))
}

fn term(coeff: &Rational, symbol: &str, first: bool) -> String {
    let neg = coeff < &Rational::zero();
    let mag = if neg { -coeff.clone() } else { coeff.clone() };
    let num = if mag.numer().is_one() {
        String::new()
    } else {
        mag.numer().to_string()
    };
    let body = if mag.is_integer() {
        format!("{num}{symbol}")
    } else {
        format!("{num}{symbol}/{}", mag.denom())
    };
    match (first, neg) {
        (true, true) => format!("−{body}"),
        (true, false) => body,
        (false, true) => format!(" − {body}"),
        (false, false) => format!(" + {body}"),
    }
}

/// Describes a connection, using `A_a = pE_a + rθ` when it has that form.
pub fn connection(conn: &Connection, labels: &[String]) -> String {
    if let Some(m) = conn.constant_matrix() {
        if let Some((p, r)) = identity_plus_all_ones(&m) {
            if p.is_zero() && r.is_zero() {
                return "A_a = 0".into();
            }
            let mut s = "A_a = ".to_string();
            if !p.is_zero() {
                s += &term(&p, "E_a", true);
            }
            if !r.is_zero() {
                s += &term(&r, "θ", p.is_zero());
            }
            return s;
        }
        return format!("constant A_a^b:\n{}", matrix(&m, "    "));
    }
    let n = conn.n();
    let mut lines = vec!["A_a^b:".to_string()];
    for a in 0..n {
        for b in 0..n {
            lines.push(format!("    A_{}^{} = {}", labels[a], labels[b], function(conn.comp(a, b))));
        }
    }
    lines.join("\n")
}

pub fn basis_labels(calc: &Calculus, labels: &[String]) -> Vec<String> {
    calc.omega2()
        .basis()
        .iter()
        .map(|&(a, b)| format!("E_{}∧E_{}", labels[a], labels[b]))
        .collect()
}

pub fn two_form(f: &TwoForm, basis: &[String]) -> String {
    let mut out = String::new();
    for (c, b) in f.comps.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        if c.is_constant() {
            out += &term(&c.values()[0], b, first);
        } else {
            if !first {
                out += " + ";
            }
            out += &format!("{}·{b}", function(c));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn element_labels(calc: &Calculus) -> Vec<String> {
    calc.group().labels().to_vec()
}

/// Labelled coefficients `(component, x)` of a list of group functions.
fn functions_json(names: &[String], comps: &[GroupFunction], calc: &Calculus) -> Value {
    let elems = element_labels(calc);
    let mut labels = Vec::new();
    let mut coeffs = Vec::new();
    for (name, f) in names.iter().zip(comps) {
        for (x, v) in f.values().iter().enumerate() {
            labels.push(format!("{name}@{}", elems[x]));
            coeffs.push(v.clone());
        }
    }
    io::tensor_json(&labels, &coeffs)
}

pub fn two_form_json(calc: &Calculus, f: &TwoForm, basis: &[String]) -> Value {
    functions_json(basis, &f.comps, calc)
}

pub fn cotensor_json(calc: &Calculus, t: &Cotensor, labels: &[String]) -> Value {
    let names: Vec<String> = (0..t.comps.len())
        .map(|k| {
            t.unflatten(k)
                .iter()
                .map(|&i| format!("E_{}", labels[i]))
                .collect::<Vec<_>>()
                .join("⊗")
        })
        .collect();
    functions_json(&names, &t.comps, calc)
}

/// Unknown labels `A_a^b(x)` in moduli order.
pub fn connection_labels(calc: &Calculus, labels: &[String]) -> Vec<String> {
    let elems = element_labels(calc);
    let n = labels.len();
    (0..n * n * calc.order())
        .map(|k| {
            let (ab, x) = (k / calc.order(), k % calc.order());
            format!("A_{}^{}({})", labels[ab / n], labels[ab % n], elems[x])
        })
        .collect()
}

pub fn connection_json(calc: &Calculus, conn: &Connection, labels: &[String]) -> Value {
    io::tensor_json(&connection_labels(calc, labels), &conn.to_vector())
}

pub fn matrices_json(labels: &[String], ms: &[Matrix]) -> Value {
    let mut map = serde_json::Map::new();
    for (l, m) in labels.iter().zip(ms) {
        map.insert(l.clone(), io::matrix_json(m));
    }
    Value::Object(map)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn rational_json(r: &Rational) -> Value {
    rational::to_json(r)
}

pub fn moduli_dim(d: Option<usize>) -> String {
    d.map_or_else(|| "empty".into(), |d| d.to_string())
}
