//! Resolution of command-line options into module inputs.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::Value;

use qgeom::calculus::{Calculus, GroupFunction};
use qgeom::dirac::{tau, tautological_gammas, GammaFamily, DEFAULT_DIGITS};
use qgeom::group::{builtin, AdSet, GroupTable, Representation};
use qgeom::io;
use qgeom::linalg::Matrix;
use qgeom::rational;
use qgeom::riemannian::{
    find_regular, intersect_moduli, killing_form, lift, solve_cotorsion_free, solve_torsion_free,
    AffineModuli, Coframing, Connection, Lift, LiftFlavor, RegularError, RegularPoints, DEFAULT_REGULAR_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LiftArg {
    Woronowicz,
    Projection,
}

impl From<LiftArg> for LiftFlavor {
    fn from(l: LiftArg) -> Self {
        match l {
            LiftArg::Woronowicz => LiftFlavor::Woronowicz,
            LiftArg::Projection => LiftFlavor::Projection,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct JobArgs {
    /// Builtin group (s3, s4, z_n, dihedral_n) or a JSON group file.
    #[arg(long, default_value = "s3")]
    pub group: String,
    /// Index of a nontrivial conjugacy class, or comma-separated element
    /// labels of an Ad-stable subset.
    #[arg(long, default_value = "0")]
    pub class: String,
    /// Representation file for the spinor space W.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    /// solve, levi-civita, maurer-cartan, zero, or a connection JSON file.
    #[arg(long, default_value = "levi-civita")]
    pub connection: String,
    #[arg(long, value_enum, default_value = "projection")]
    pub lift: LiftArg,
    /// killing, or a JSON file {"upper": matrix} with constant g^{ab}.
    #[arg(long, default_value = "killing")]
    pub metric: String,
    /// Gamma matrices file {"gammas": {"<label>": matrix}}; defaults to the
    /// tautological gammas.
    #[arg(long)]
    pub gammas: Option<PathBuf>,
    /// Directory for JSON artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimal digits for spectra.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub precision: usize,
    /// Largest moduli dimension handed to the exact regular-point solver.
    #[arg(long, default_value_t = DEFAULT_REGULAR_BOUND)]
    pub regular_bound: usize,
}

pub struct Job {
    pub args: JobArgs,
    pub calc: Calculus,
    builtin_name: Option<String>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn class_list(group: &GroupTable) -> String {
    group
        .conjugacy_classes()
        .iter()
        .skip(1)
        .enumerate()
        .map(|(i, c)| {
            let labels: Vec<&str> = c.iter().map(|&g| group.label(g)).collect();
            format!("  {i}: {{{}}}", labels.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

impl Job {
    pub fn resolve(args: JobArgs) -> Result<Self> {
        let path = Path::new(&args.group);
        let (group, builtin_name) = if path.extension().is_some_and(|e| e == "json") || path.is_file() {
            (io::parse_group(&read(path)?)?, None)
        } else {
            (builtin(&args.group)?, Some(args.group.to_lowercase()))
        };
        let group = Arc::new(group);
        let set = if let Ok(index) = args.class.trim().parse::<usize>() {
            AdSet::from_class_index(group.clone(), index).ok_or_else(|| {
                anyhow!(
                    "class index {index} out of range; available classes:\n{}",
                    class_list(&group)
                )
            })?
        } else {
            let members = args
                .class
                .split(',')
                .map(|l| group.element(l.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            AdSet::new(group.clone(), &members)?
        };
        Ok(Self {
            calc: Calculus::new(set),
            args,
            builtin_name,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.calc.group()
    }

    pub fn set_labels(&self) -> Vec<String> {
        self.calc.set().labels().into_iter().map(str::to_string).collect()
    }

    pub fn lift(&self) -> Lift {
        lift(&self.calc, self.args.lift.into())
    }

    /// The metric's coframing and a note on where it came from.
    pub fn coframing(&self) -> Result<(Coframing, String)> {
        if self.args.metric == "killing" {
            return Ok(match Coframing::killing(&self.calc) {
                Ok(cof) => (cof, "braided-Killing metric η (default)".to_string()),
                Err(_) => (
                    Coframing::constant(&Matrix::identity(self.calc.n()), self.calc.order())?,
                    "braided-Killing form is degenerate; using g^{ab} = δ^{ab}".to_string(),
                ),
            });
        }
        let v: Value = serde_json::from_str(&read(Path::new(&self.args.metric))?)?;
        let upper = v
            .get("upper")
            .ok_or_else(|| anyhow!("metric file needs \"upper\""))?;
        let m = io::parse_matrix(upper)?;
        if m.rows() != self.calc.n() || m.cols() != self.calc.n() {
            bail!("metric must be {n}×{n}", n = self.calc.n());
        }
        Ok((
            Coframing::constant(&m, self.calc.order())?,
            format!("metric from {}", self.args.metric),
        ))
    }

    pub fn moduli(&self, cof: &Coframing) -> (AffineModuli, AffineModuli, AffineModuli) {
        let tf = solve_torsion_free(&self.calc);
        let ctf = solve_cotorsion_free(&self.calc, cof);
        let both = intersect_moduli(&tf, &ctf);
        (tf, ctf, both)
    }

    pub fn regular_points(&self, both: &AffineModuli) -> Result<RegularPoints, RegularError> {
        find_regular(&self.calc, both, self.args.regular_bound)
    }

    /// The connection named by `--connection`, with a description.
    pub fn connection(&self) -> Result<(Connection, String)> {
        let calc = &self.calc;
        match self.args.connection.as_str() {
            "zero" => Ok((Connection::zero(calc), "zero connection".into())),
            "maurer-cartan" => Ok((Connection::maurer_cartan(calc), "Maurer-Cartan A_a = E_a".into())),
            "solve" | "levi-civita" => {
                let (cof, _) = self.coframing()?;
                let (_, _, both) = self.moduli(&cof);
                let reg = self.regular_points(&both)?;
                let first = reg
                    .connections
                    .first()
                    .cloned()
                    .ok_or_else(|| anyhow!("no regular torsion- and cotorsion-free connection exists"))?;
                let note = if reg.connections.len() > 1 {
                    format!("first of {} regular Levi-Civita points", reg.connections.len())
                } else {
                    "unique regular Levi-Civita point".to_string()
                };
                Ok((first, note))
            }
            file => {
                let v: Value = serde_json::from_str(&read(Path::new(file))?)?;
                Ok((parse_connection(calc, &v)?, format!("connection from {file}")))
            }
        }
    }

    /// `--rep`, else the two-dimensional representation for builtin `s3`,
    /// else the regular representation.
    pub fn representation(&self) -> Result<(Representation, String)> {
        let group = self.group().clone();
        if let Some(path) = &self.args.rep {
            return Ok((io::parse_representation(group, &read(path)?)?, path.display().to_string()));
        }
        if self.builtin_name.as_deref() == Some("s3") {
            let (u, v) = (group.element("u")?, group.element("v")?);
            let rho = Representation::new(
                group,
                2,
                &[
                    (u, Matrix::from_i64(&[&[0, 1], &[1, 0]])),
                    (v, Matrix::from_i64(&[&[1, 0], &[-1, -1]])),
                ],
            )?;
            return Ok((rho, "two-dimensional representation of S3".into()));
        }
        Ok((Representation::regular(group), "regular representation".into()))
    }

    /// Gamma matrices from `--gammas`, else tautological.
    pub fn gammas(&self, rho: &Representation) -> Result<(GammaFamily, String)> {
        let set = self.calc.set();
        if let Some(path) = &self.args.gammas {
            let gammas = io::parse_gammas(self.group(), set.members(), &read(path)?)?;
            if gammas.iter().any(|g| g.rows() != rho.dim() || g.cols() != rho.dim()) {
                bail!("gamma matrices must be {d}×{d} to match the representation", d = rho.dim());
            }
            return Ok((GammaFamily { gammas }, format!("gammas from {}", path.display())));
        }
        let eta = killing_form(set);
        let g = tautological_gammas(&eta, rho, set)?;
        Ok((g, "tautological gammas γ_a = η⁻¹_{ab} ρ(b − e)".into()))
    }

    pub fn tau_w(&self, rho: &Representation) -> Vec<Matrix> {
        tau(rho, self.calc.set())
    }

    pub fn write_artifact(&self, name: &str, v: &Value) -> Result<Option<PathBuf>> {
        let Some(dir) = &self.args.out else {
            return Ok(None);
        };
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        fs::write(&path, io::to_pretty(v)).with_context(|| format!("writing {}", path.display()))?;
        Ok(Some(path))
    }
}

/// `{"constant": n×n matrix}` or `{"components": [[values over G] for each (a, b)]}`
/// in row-major `(a, b)` order.
fn parse_connection(calc: &Calculus, v: &Value) -> Result<Connection> {
    let n = calc.n();
    if let Some(m) = v.get("constant") {
        let m = io::parse_matrix(m)?;
        if m.rows() != n || m.cols() != n {
            bail!("constant connection must be {n}×{n}");
        }
        return Ok(Connection::constant(calc, &m));
    }
    let comps = v
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("connection file needs \"constant\" or \"components\""))?;
    if comps.len() != n * n {
        bail!("expected {} component functions, found {}", n * n, comps.len());
    }
    let funcs = comps
        .iter()
        .map(|f| {
            let vals = f
                .as_array()
                .filter(|a| a.len() == calc.order())
                .ok_or_else(|| anyhow!("each component needs {} values", calc.order()))?;
            vals.iter()
                .map(|x| rational::from_json(x).ok_or_else(|| anyhow!("bad rational {x}")))
                .collect::<Result<Vec<_>>>()
                .map(GroupFunction::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Connection::new(n, funcs))
}
