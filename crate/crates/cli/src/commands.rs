//! The subcommands. Each returns a text report and a JSON artifact.

use anyhow::Result;
use num_traits::Zero;
use serde_json::{json, Value};

use qgeom::calculus::{Cotensor, GroupFunction};
use qgeom::dirac::{action_trace_d2, connes_necessary_check, dirac_from_parts, spectrum_of};
use qgeom::finset::{check_equivalence, from_group, validate_fibration};
use qgeom::io;
use qgeom::rational::Rational;
use qgeom::riemannian::{
    curvature, killing_form, metric_tensor, nabla_on_metric, ricci, scalar_curvature,
    skew_compatibility, Connection,
};

use crate::job::Job;
use crate::report::{self as fmt, q};

pub struct Output {
    pub text: String,
    pub json: Value,
    pub artifact: &'static str,
}

pub fn info(job: &Job) -> Result<Output> {
    let calc = &job.calc;
    let group = job.group();
    let labels = job.set_labels();
    let mut t = Vec::new();
    t.push(format!("group order: {}", group.order()));
    t.push("conjugacy classes (nontrivial):".into());
    let classes: Vec<Vec<String>> = group
        .conjugacy_classes()
        .iter()
        .skip(1)
        .map(|c| c.iter().map(|&g| group.label(g).to_string()).collect())
        .collect();
    for (i, c) in classes.iter().enumerate() {
        t.push(format!("  {i}: {{{}}}", c.join(", ")));
    }
    t.push(format!("C = {{{}}}", labels.join(", ")));
    t.push(format!("dim Ω¹ = {}", calc.n()));
    let omega = calc.omega2();
    t.push(format!("dim Ω² = {}", omega.dim()));
    let basis = fmt::basis_labels(calc, &labels);
    if !basis.is_empty() {
        t.push(format!("Ω² basis: {}", basis.join(", ")));
    }
    let mut pg = serde_json::Map::new();
    t.push("P_g dimensions:".into());
    for sub in omega.invariant_subspaces() {
        t.push(format!("  P_{} : {}", group.label(sub.g), sub.basis.len()));
        pg.insert(group.label(sub.g).to_string(), json!(sub.basis.len()));
    }
    let eta = killing_form(calc.set());
    match fmt::scalar_of(&eta.eta) {
        Some(s) => t.push(format!("η = {}·I", q(&s))),
        None => t.push(format!("η =\n{}", fmt::matrix(&eta.eta, "  "))),
    }
    t.push(format!("semisimple: {}", fmt::yes_no(eta.is_semisimple())));
    let relations: Vec<Value> = omega
        .relations(calc.set())
        .iter()
        .map(|r| io::rationals_json(r))
        .collect();
    let json = json!({
        "order": group.order(),
        "elements": group.labels(),
        "classes": classes,
        "set": labels,
        "dim_omega1": calc.n(),
        "dim_omega2": omega.dim(),
        "omega2_basis": basis,
        "p_g_dimensions": pg,
        "relations": relations,
        "killing_form": io::matrix_json(&eta.eta),
        "semisimple": eta.is_semisimple(),
    });
    Ok(Output {
        text: t.join("\n"),
        json,
        artifact: "info.json",
    })
}

pub fn solve(job: &Job) -> Result<Output> {
    let calc = &job.calc;
    let labels = job.set_labels();
    let (cof, metric_note) = job.coframing()?;
    let (tf, ctf, both) = job.moduli(&cof);
    let unknowns = fmt::connection_labels(calc, &labels);
    let mut t = vec![format!("coframing: {metric_note}")];
    let (regular_text, regular_json) = match job.regular_points(&both) {
        Ok(reg) => {
            let described: Vec<String> = reg.connections.iter().map(|c| fmt::connection(c, &labels)).collect();
            let mut s = format!("regular points: {}", reg.connections.len());
            if !described.is_empty() {
                s += &format!(" ({})", described.join("; "));
            }
            if reg.has_irrational {
                s += " plus irrational points";
            }
            let conns: Vec<Value> = reg
                .connections
                .iter()
                .map(|c| fmt::connection_json(calc, c, &labels))
                .collect();
            (s, json!({ "connections": conns, "has_irrational": reg.has_irrational }))
        }
        Err(e) => {
            (format!("regular points: not enumerated ({e})"), json!({ "error": e.to_string() }))
        }
    };
    t.push(format!(
        "torsion-free: {}, cotorsion-free: {}, both: {}, {regular_text}",
        fmt::moduli_dim(tf.dimension()),
        fmt::moduli_dim(ctf.dimension()),
        fmt::moduli_dim(both.dimension()),
    ));
    let json = json!({
        "coframing": metric_note,
        "torsion_free": io::moduli_json(&tf, &unknowns),
        "cotorsion_free": io::moduli_json(&ctf, &unknowns),
        "both": io::moduli_json(&both, &unknowns),
        "regular": regular_json,
    });
    Ok(Output {
        text: t.join("\n"),
        json,
        artifact: "moduli.json",
    })
}

/// `μ` with `t = μ(θ⊗θ − g)` for a constant metric `g`, if it exists.
fn ricci_multiple(t: &Cotensor, g: &Cotensor) -> Option<Rational> {
    let n = (t.comps.len() as f64).sqrt() as usize;
    let target: Vec<GroupFunction> = (0..n * n)
        .map(|k| {
            let one = GroupFunction::one(t.comps[k].len());
            &one - &g.comps[k]
        })
        .collect();
    let (k0, base) = target.iter().enumerate().find(|(_, f)| !f.is_zero())?;
    let x0 = base.values().iter().position(|v| !v.is_zero())?;
    let mu = t.comps[k0].at(x0) / base.at(x0);
    target
        .iter()
        .zip(&t.comps)
        .all(|(b, c)| b.scale(&mu) == *c)
        .then_some(mu)
}

pub fn geometry(job: &Job) -> Result<Output> {
    let calc = &job.calc;
    let labels = job.set_labels();
    let basis = fmt::basis_labels(calc, &labels);
    let (conn, conn_note) = job.connection()?;
    let (cof, metric_note) = job.coframing()?;
    let lift = job.lift();
    let mut t = vec![
        format!("connection: {conn_note}: {}", fmt::connection(&conn, &labels)),
        format!("coframing: {metric_note}"),
    ];
    let curv = curvature(calc, &conn);
    if !curv.is_regular {
        t.push("warning: connection is not regular; curvature does not descend".into());
        for (qel, r) in &curv.residuals {
            if !r.is_zero() {
                t.push(format!("  residual at {}: {}", calc.group().label(*qel), fmt::two_form(r, &basis)));
            }
        }
    }
    if curv.is_flat() {
        t.push("flat: all F_a = 0".into());
    } else {
        for (a, f) in curv.forms.iter().enumerate() {
            let is_de = *f == calc.d_basis(a);
            let suffix = if is_de { format!("  (= dE_{})", labels[a]) } else { String::new() };
            t.push(format!("F_{} = {}{suffix}", labels[a], fmt::two_form(f, &basis)));
        }
    }
    let ric = ricci(calc, &curv.forms, &lift);
    let g = metric_tensor(calc, &cof);
    t.push(format!("lift: {}", lift.flavor.name()));
    match ricci_multiple(&ric, &g) {
        Some(mu) if mu.is_zero() => t.push("Ricci = 0".into()),
        Some(mu) => t.push(format!("Ricci = μ(−g + θ⊗θ) with μ = {}", q(&mu))),
        None => t.push("Ricci components:".into()),
    }
    let n = calc.n();
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| fmt::function(&ric.comps[a * n + b])).collect();
        t.push(format!("  [{}]", row.join(", ")));
    }
    let scalar = scalar_curvature(&ric, &g);
    match &scalar {
        Some(s) => t.push(format!("scalar curvature g_{{ab}} Ricci^{{ab}} = {}", fmt::function(s))),
        None => t.push("scalar curvature: metric not invertible".into()),
    }
    let nabla_g = nabla_on_metric(calc, &conn, &g);
    let skew = skew_compatibility(calc, &conn, &g);
    t.push(format!(
        "(∇∧id − id∧∇)g = 0: {}",
        fmt::yes_no(skew.comps.iter().all(GroupFunction::is_zero))
    ));
    let nonzero = nabla_g.comps.iter().filter(|f| !f.is_zero()).count();
    t.push(format!("∇g: {nonzero} nonzero components of {}", nabla_g.comps.len()));
    let forms: Vec<Value> = curv.forms.iter().map(|f| fmt::two_form_json(calc, f, &basis)).collect();
    let residuals: Vec<Value> = curv
        .residuals
        .iter()
        .map(|(qel, r)| json!({ "q": calc.group().label(*qel), "form": fmt::two_form_json(calc, r, &basis) }))
        .collect();
    let json = json!({
        "connection": fmt::connection_json(calc, &conn, &labels),
        "coframing": metric_note,
        "regular": curv.is_regular,
        "residuals": residuals,
        "curvature": forms,
        "flat": curv.is_flat(),
        "lift": lift.flavor.name(),
        "ricci": fmt::cotensor_json(calc, &ric, &labels),
        "ricci_multiple": ricci_multiple(&ric, &g).map(|m| fmt::rational_json(&m)),
        "scalar_curvature": scalar.map(|s| io::rationals_json(s.values())),
        "nabla_metric": fmt::cotensor_json(calc, &nabla_g, &labels),
        "skew_compatibility_zero": skew.comps.iter().all(GroupFunction::is_zero),
    });
    Ok(Output {
        text: t.join("\n"),
        json,
        artifact: "geometry.json",
    })
}

pub fn dirac(job: &Job) -> Result<Output> {
    let calc = &job.calc;
    let labels = job.set_labels();
    let (rho, rep_note) = job.representation()?;
    let (gammas, gamma_note) = job.gammas(&rho)?;
    let (conn, conn_note) = job.connection()?;
    let tau_w = job.tau_w(&rho);
    let d = dirac_from_parts(calc, &conn, &gammas, &tau_w);
    let d0 = dirac_from_parts(calc, &Connection::zero(calc), &gammas, &tau_w);
    let mut t = vec![
        format!("representation: {rep_note} (dim {})", rho.dim()),
        format!("gammas: {gamma_note}"),
    ];
    for (a, g) in gammas.gammas.iter().enumerate() {
        t.push(format!("γ_{} =\n{}", labels[a], fmt::matrix(g, "  ")));
    }
    t.push(format!("connection: {conn_note}: {}", fmt::connection(&conn, &labels)));
    let spin_part = &d.matrix - &d0.matrix;
    match fmt::scalar_of(&spin_part) {
        Some(s) if s.is_zero() => t.push("D̸ = ∂^aγ_a".into()),
        Some(s) => {
            let sign = if s < Rational::zero() { "−" } else { "+" };
            let mag = if s < Rational::zero() { -s.clone() } else { s.clone() };
            t.push(format!("D̸ = ∂^aγ_a {sign} {}", q(&mag)));
        }
        None => t.push("D̸ = ∂^aγ_a − A_b^aγ_aτ^b".into()),
    }
    t.push(format!("D̸ ({0}×{0}, element index outer):\n{1}", d.size(), fmt::matrix(&d.matrix, "  ")));
    let spectrum = spectrum_of(&d.matrix, job.args.precision);
    t.push(format!("characteristic polynomial: {}", spectrum.char_poly));
    t.push("spectrum:".into());
    for r in &spectrum.roots {
        t.push(format!("  {}  (multiplicity {})", spectrum.format_root(r), r.multiplicity));
    }
    t.push(format!(
        "root reconstruction error: {}",
        spectrum.reconstruction_error_string()
    ));
    t.push(format!(
        "spectrum symmetric about zero: {} (observed, not asserted)",
        fmt::yes_no(spectrum.symmetric)
    ));
    let trace = action_trace_d2(&d);
    t.push(format!("Tr D̸² = {}", q(&trace)));
    let connes = connes_necessary_check(&gammas, calc.set());
    t.push(format!("Connes check: {}", fmt::pass_fail(connes.passes())));
    for c in connes.failures() {
        t.push(format!("  fails: {}", c.statement));
    }
    let conditions: Vec<Value> = connes
        .conditions
        .iter()
        .map(|c| json!({ "statement": c.statement, "holds": c.holds, "value": io::matrix_json(&c.value) }))
        .collect();
    let json = json!({
        "representation": rep_note,
        "gammas": fmt::matrices_json(&labels, &gammas.gammas),
        "connection": fmt::connection_json(calc, &conn, &labels),
        "operator": io::matrix_json(&d.matrix),
        "spectrum": io::spectrum_json(&spectrum),
        "symmetric_spectrum": spectrum.symmetric,
        "trace_d2": fmt::rational_json(&trace),
        "connes": { "passes": connes.passes(), "conditions": conditions },
    });
    Ok(Output {
        text: t.join("\n"),
        json,
        artifact: "dirac.json",
    })
}

pub fn finset_check(job: &Job) -> Result<Output> {
    let calc = &job.calc;
    let lift = job.lift();
    let (cof, metric_note) = job.coframing()?;
    let emb = from_group(calc, Some(&lift));
    let mut t = vec![
        format!(
            "embedding: {} points, {} edges, fibred: {}",
            emb.calc.points(),
            emb.calc.edges().len(),
            fmt::yes_no(validate_fibration(&emb.calc, calc.n()))
        ),
        format!("coframing: {metric_note}"),
    ];
    let spin = match job.representation().and_then(|(rho, _)| {
        let (g, _) = job.gammas(&rho)?;
        Ok((g, job.tau_w(&rho)))
    }) {
        Ok(s) => Some(s),
        Err(e) => {
            t.push(format!("dirac comparison skipped: {e}"));
            None
        }
    };
    let mut conns = vec![
        ("zero".to_string(), Connection::zero(calc)),
        ("maurer-cartan".to_string(), Connection::maurer_cartan(calc)),
    ];
    match job.connection() {
        Ok((c, note)) if !conns.iter().any(|(_, k)| *k == c) => conns.push((note, c)),
        Ok(_) => {}
        Err(e) => t.push(format!("selected connection unavailable: {e}")),
    }
    let mut all = true;
    let mut runs = Vec::new();
    for (name, conn) in &conns {
        let report = check_equivalence(
            calc,
            &emb,
            conn,
            &lift,
            &cof,
            spin.as_ref().map(|(g, tw)| (g, tw.as_slice())),
        );
        all &= report.all_pass();
        let line: Vec<String> = report
            .checks
            .iter()
            .map(|(k, ok)| format!("{k} {}", fmt::pass_fail(*ok)))
            .collect();
        t.push(format!("{name}: {}", line.join(", ")));
        let checks: serde_json::Map<String, Value> =
            report.checks.iter().map(|(k, ok)| (k.clone(), json!(ok))).collect();
        runs.push(json!({ "connection": name, "checks": checks }));
    }
    t.push(format!("engine equivalence: {}", fmt::pass_fail(all)));
    let json = json!({ "points": emb.calc.points(), "edges": emb.calc.edges(), "runs": runs, "passes": all });
    if !all {
        anyhow::bail!("{}\nengine equivalence failed", t.join("\n"));
    }
    Ok(Output {
        text: t.join("\n"),
        json,
        artifact: "finset.json",
    })
}
