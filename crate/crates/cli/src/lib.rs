//! The `lyrb` command line: model files in, reports out.

pub mod fixtures;
pub mod model;
pub mod report;

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use lyrb_core::complex::{cohomology_dims, ComplexContext};
use lyrb_core::deformation::{
    extend_deformation, linear_deformation_check, nijenhuis_element_check, obstruction,
    order_n_check, ConditionOutcome, TruncatedDeformation,
};
use lyrb_core::linalg::rank_kernel;
use lyrb_core::rbo::{
    check_rbo, induced_rep_on_g, induced_structure_check, lift_consistency_check, RelRbo, Wedge2,
};
use lyrb_core::rbo_cohomology::{rbo_cocycle_basis, rbo_cohomology_dims, RboComplex};
use lyrb_core::structures::{check_lya, check_representation, semidirect, LyAlgebra, Representation};
use serde_json::{json, Map, Value};

use model::{load_model, ModelError, ModelFile};
use report::{emit_report, matrix, vector, witnesses, Format, Report, Status};

/// Highest cohomology degree computed without `--force`.
pub const DEGREE_CAP: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "lyrb", about = "Lie-Yamaguti algebras, relative Rota-Baxter operators and their deformations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Lie-Yamaguti identities.
    CheckAlgebra { file: String },
    /// Check the representation identities.
    CheckRep { file: String },
    /// Check the relative Rota-Baxter operator identities.
    CheckRbo { file: String },
    /// Cohomology dimensions of the Yamaguti complex, or of the operator with --rbo.
    Cohomology {
        file: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        rbo: bool,
        /// Also print a basis of the cocycles.
        #[arg(long)]
        kernel_dump: bool,
        /// Allow degrees above the cap.
        #[arg(long)]
        force: bool,
    },
    /// Check Nijenhuis elements of the operator.
    Nijenhuis {
        file: String,
        #[arg(long, conflicts_with = "all_basis", required_unless_present = "all_basis")]
        element: Option<String>,
        #[arg(long)]
        all_basis: bool,
    },
    /// Deformations of the operator.
    Deform {
        #[command(subcommand)]
        action: DeformCommand,
    },
    /// Bundled model files.
    Examples {
        #[command(subcommand)]
        action: ExamplesCommand,
    },
}

#[derive(Debug, Subcommand)]
enum DeformCommand {
    /// Check the deformation block as an order-n deformation.
    Check { file: String },
    /// Obstruction class of extending the deformation by one order.
    Obstruction { file: String },
    /// Extend the deformation order by order while the obstruction vanishes.
    Extend {
        file: String,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum ExamplesCommand {
    List,
    Show { name: String },
}

/// Everything a run produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Runs the command line `argv` (without the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("lyrb".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), exit_code: 0 }
            } else {
                Outcome { stdout: String::new(), stderr: text, exit_code: 2 }
            };
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let echo = argv
        .iter()
        .filter(|a| !a.starts_with("--format") && !matches!(a.as_str(), "text" | "json"))
        .cloned()
        .collect::<Vec<_>>()
        .join(" ");
    if let Command::Examples { action: ExamplesCommand::Show { name } } = &cli.command {
        if format == Format::Text {
            return match fixtures::get(name) {
                Some(f) => Outcome { stdout: f.source.to_string(), stderr: String::new(), exit_code: 0 },
                None => Outcome {
                    stdout: String::new(),
                    stderr: format!("unknown example {name:?}; try `lyrb examples list`\n"),
                    exit_code: 2,
                },
            };
        }
    }
    if let Command::Cohomology { degree, force: false, .. } = &cli.command {
        if *degree > DEGREE_CAP {
            return Outcome {
                stdout: String::new(),
                stderr: format!("degree {degree} is above the cap {DEGREE_CAP}; pass --force to compute it\n"),
                exit_code: 2,
            };
        }
    }
    let report = execute(&echo, cli.command);
    Outcome {
        stdout: emit_report(&report, format),
        stderr: String::new(),
        exit_code: report.exit_code,
    }
}

fn execute(echo: &str, command: Command) -> Report {
    let result = match command {
        Command::CheckAlgebra { file } => check_algebra(echo, &file),
        Command::CheckRep { file } => check_rep(echo, &file),
        Command::CheckRbo { file } => check_rbo_cmd(echo, &file),
        Command::Cohomology { file, degree, rbo, kernel_dump, .. } => cohomology(echo, &file, degree, rbo, kernel_dump),
        Command::Nijenhuis { file, element, .. } => nijenhuis(echo, &file, element.as_deref()),
        Command::Deform { action } => match action {
            DeformCommand::Check { file } => deform_check(echo, &file),
            DeformCommand::Obstruction { file } => deform_obstruction(echo, &file),
            DeformCommand::Extend { file, max_order } => deform_extend(echo, &file, max_order),
        },
        Command::Examples { action } => Ok(examples(echo, action)),
    };
    result.unwrap_or_else(|e| failure_report(echo, e))
}

/// Core failures that certify a violated identity become `violated` reports
/// with witnesses; everything else is an error.
fn failure_report(echo: &str, e: Failure) -> Report {
    let (err, g, v) = match e {
        Failure::Model(err) => return Report::error(echo, err.to_string()),
        Failure::Core { err, g_names, v_names } => (err, g_names, v_names),
    };
    use lyrb_core::Error as E;
    match &err {
        E::InvalidAlgebra(r) => Report::new(echo, Status::Violated, json!({ "algebra": { "valid": false, "witnesses": witnesses(r, &g) } })),
        E::InvalidRepresentation(r) => Report::new(
            echo,
            Status::Violated,
            json!({ "representation": { "valid": false, "witnesses": witnesses(r, &g) } }),
        ),
        E::NotRelativeRotaBaxter(r) => Report::new(echo, Status::Violated, json!({ "operator": { "valid": false, "witnesses": witnesses(r, &v) } })),
        E::NotOrderN(r) => Report::new(echo, Status::Violated, json!({ "deformation": { "valid": false, "witnesses": witnesses(r, &v) } })),
        _ => Report::error(echo, err.to_string()),
    }
}

enum Failure {
    Model(ModelError),
    Core {
        err: lyrb_core::Error,
        g_names: Vec<String>,
        v_names: Vec<String>,
    },
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Core(err) => Failure::Core { err, g_names: Vec::new(), v_names: Vec::new() },
            other => Failure::Model(other),
        }
    }
}

impl From<lyrb_core::Error> for Failure {
    fn from(err: lyrb_core::Error) -> Self {
        Failure::Core { err, g_names: Vec::new(), v_names: Vec::new() }
    }
}

type CmdResult = Result<Report, Failure>;

fn with_names<'a>(g: &'a [String], v: &'a [String]) -> impl Fn(lyrb_core::Error) -> Failure + 'a {
    move |err| Failure::Core { err, g_names: g.to_vec(), v_names: v.to_vec() }
}

/// Loads and validates the algebra; an invalid algebra ends the command.
fn valid_algebra(model: &ModelFile) -> Result<Arc<LyAlgebra>, Failure> {
    let a = model.algebra()?;
    let report = check_lya(&a);
    if !report.valid() {
        return Err(Failure::Core {
            err: lyrb_core::Error::InvalidAlgebra(Box::new(report)),
            g_names: a.names().to_vec(),
            v_names: Vec::new(),
        });
    }
    Ok(Arc::new(a))
}

fn valid_rep(model: &ModelFile) -> Result<Representation, Failure> {
    let a = valid_algebra(model)?;
    let names = a.names().to_vec();
    let rep = model.representation(a).map_err(|e| match e {
        ModelError::Core(err) => Failure::Core { err, g_names: names.clone(), v_names: Vec::new() },
        other => Failure::Model(other),
    })?;
    let report = check_representation(&rep);
    if !report.valid() {
        return Err(Failure::Core {
            err: lyrb_core::Error::InvalidRepresentation(Box::new(report)),
            g_names: names,
            v_names: rep.names().to_vec(),
        });
    }
    Ok(rep)
}

fn valid_operator(model: &ModelFile) -> Result<RelRbo, Failure> {
    let rep = valid_rep(model)?;
    let (g, v) = (rep.algebra().names().to_vec(), rep.names().to_vec());
    let t = model.operator_matrix(&rep)?;
    RelRbo::new(rep, t).map_err(with_names(&g, &v))
}

fn check_algebra(echo: &str, file: &str) -> CmdResult {
    let model = load_model(file)?;
    let a = model.algebra()?;
    let report = check_lya(&a);
    let status = if report.valid() { Status::Ok } else { Status::Violated };
    Ok(Report::new(
        echo,
        status,
        json!({
            "algebra": {
                "basis": a.names(),
                "dim": a.dim(),
                "valid": report.valid(),
                "witnesses": witnesses(&report, a.names()),
            }
        }),
    ))
}

fn check_rep(echo: &str, file: &str) -> CmdResult {
    let model = load_model(file)?;
    let a = valid_algebra(&model)?;
    let names = a.names().to_vec();
    let rep = model.representation(a).map_err(|e| match e {
        ModelError::Core(err) => Failure::Core { err, g_names: names.clone(), v_names: Vec::new() },
        other => Failure::Model(other),
    })?;
    let report = check_representation(&rep);
    let semidirect_valid = check_lya(&semidirect(&rep)).valid();
    let status = if report.valid() { Status::Ok } else { Status::Violated };
    Ok(Report::new(
        echo,
        status,
        json!({
            "algebra": { "valid": true },
            "representation": {
                "basis": rep.names(),
                "dim": rep.dim_v(),
                "semidirect_product_valid": semidirect_valid,
                "valid": report.valid(),
                "witnesses": witnesses(&report, &names),
            }
        }),
    ))
}

fn check_rbo_cmd(echo: &str, file: &str) -> CmdResult {
    let model = load_model(file)?;
    let rep = valid_rep(&model)?;
    let (g, v) = (rep.algebra().names().to_vec(), rep.names().to_vec());
    let t = model.operator_matrix(&rep)?;
    let report = check_rbo(&rep, &t).map_err(with_names(&g, &v))?;
    let mut operator = Map::new();
    operator.insert("matrix".into(), matrix(&t));
    operator.insert("valid".into(), json!(report.valid()));
    operator.insert("witnesses".into(), witnesses(&report, &v));
    if report.valid() {
        let o = RelRbo::new(rep, t).map_err(with_names(&g, &v))?;
        let induced = induced_structure_check(&o).map_err(with_names(&g, &v))?;
        let lift = lift_consistency_check(&o).map_err(with_names(&g, &v))?;
        let on_g = induced_rep_on_g(&o).map_err(with_names(&g, &v))?;
        let rho: Map<String, Value> = (0..on_g.algebra().dim())
            .map(|k| (v[k].clone(), matrix(on_g.rho(k))))
            .collect();
        operator.insert(
            "induced".into(),
            json!({
                "identities_hold": induced.valid(),
                "nijenhuis_lift_consistent": lift.valid(),
                "rho_on_g": rho,
            }),
        );
    }
    let status = if report.valid() { Status::Ok } else { Status::Violated };
    Ok(Report::new(echo, status, json!({ "operator": operator })))
}

fn cohomology(echo: &str, file: &str, degree: usize, rbo: bool, kernel_dump: bool) -> CmdResult {
    let model = load_model(file)?;
    let (summary, kernel, complex) = if rbo {
        let o = valid_operator(&model)?;
        let c = RboComplex::new(o)?;
        let s = rbo_cohomology_dims(&c, degree)?;
        let k = if kernel_dump { Some(rbo_cocycle_basis(&c, degree)?) } else { None };
        (s, k, "relative Rota-Baxter")
    } else {
        let rep = valid_rep(&model)?;
        let ctx = ComplexContext::new(rep)?;
        let s = cohomology_dims(&ctx, degree, true)?;
        let k = if kernel_dump { Some(rank_kernel(&ctx.coboundary_matrix(degree)?).1) } else { None };
        (s, k, "Yamaguti")
    };
    let mut details = json!({
        "complex": complex,
        "degree": summary.degree,
        "dim_coboundaries": summary.dim_coboundaries,
        "dim_cochains": summary.dim_cochains,
        "dim_cocycles": summary.dim_cocycles,
        "dim_h": summary.dim_h,
    });
    if let Some(k) = kernel {
        details["cocycle_basis"] = Value::Array(k.iter().map(|z| vector(z)).collect());
    }
    Ok(Report::new(echo, Status::Ok, details))
}

fn condition_json(c: &ConditionOutcome, names: &[String]) -> Value {
    let first = c.report.violations.first().map(|w| report::witness(w, names));
    json!({ "condition": c.label, "passed": c.passed(), "witness": first })
}

fn nijenhuis(echo: &str, file: &str, element: Option<&str>) -> CmdResult {
    let model = load_model(file)?;
    let o = valid_operator(&model)?;
    let g = o.algebra().names().to_vec();
    let v = o.rep().names().to_vec();
    let m = o.algebra().dim();
    let elements: Vec<(String, Wedge2)> = match element {
        Some(name) => vec![(name.to_string(), model.element(name)?)],
        None => {
            let mut out = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    out.push((format!("{}∧{}", g[i], g[j]), Wedge2::basis(m, i, j)?));
                }
            }
            out
        }
    };
    let mut all = true;
    let mut items = Vec::new();
    for (name, x) in elements {
        let r = nijenhuis_element_check(&o, &x)?;
        all &= r.is_nijenhuis();
        let conditions: Vec<Value> = r
            .conditions
            .iter()
            .map(|c| {
                let names = if c.label == lyrb_core::deformation::NIJ_CLOSING { &v } else { &g };
                condition_json(c, names)
            })
            .collect();
        items.push(json!({
            "conditions": conditions,
            "element": x.display_with(&g),
            "name": name,
            "nijenhuis": r.is_nijenhuis(),
            "reduced_verdict": r.reduced,
            "rho_condition": condition_json(&r.rho_condition, &g),
        }));
    }
    let status = if all { Status::Ok } else { Status::Violated };
    Ok(Report::new(echo, status, json!({ "elements": items })))
}

fn deformation_of(model: &ModelFile) -> Result<(RelRbo, TruncatedDeformation), Failure> {
    let o = valid_operator(model)?;
    let terms = model.deformation_terms(o.rep())?;
    let d = TruncatedDeformation::new(terms)?;
    Ok((o, d))
}

fn deform_check(echo: &str, file: &str) -> CmdResult {
    let model = load_model(file)?;
    let (o, d) = deformation_of(&model)?;
    let v = o.rep().names().to_vec();
    let report = order_n_check(&o, &d)?;
    let mut details = json!({
        "order": d.order(),
        "valid": report.valid(),
        "witnesses": witnesses(&report, &v),
    });
    if d.order() == 1 {
        let lin = linear_deformation_check(&o, d.infinitesimal().expect("order 1"))?;
        details["linear_deformation"] = json!({ "valid": lin.valid(), "witnesses": witnesses(&lin, &v) });
    }
    let status = if report.valid() { Status::Ok } else { Status::Violated };
    Ok(Report::new(echo, status, details))
}

fn deform_obstruction(echo: &str, file: &str) -> CmdResult {
    let model = load_model(file)?;
    let (o, d) = deformation_of(&model)?;
    let v = o.rep().names().to_vec();
    let res = obstruction(&o, &d).map_err(with_names(&[], &v))?;
    let c = RboComplex::new(o)?;
    let h2 = rbo_cohomology_dims(&c, 2)?;
    let nonzero: Vec<Value> = res
        .class_residual
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| json!({ "coordinate": i, "value": report::rational(q) }))
        .collect();
    let status = if res.trivial { Status::Ok } else { Status::Violated };
    Ok(Report::new(
        echo,
        status,
        json!({
            "class_nonzero_coordinates": nonzero,
            "dim_h2": h2.dim_h,
            "is_cocycle": res.is_cocycle,
            "ob": vector(res.ob.data()),
            "order": d.order(),
            "trivial": res.trivial,
            "witness": res.witness.as_ref().map(matrix),
        }),
    ))
}

fn deform_extend(echo: &str, file: &str, max_order: Option<usize>) -> CmdResult {
    let model = load_model(file)?;
    let (o, mut d) = deformation_of(&model)?;
    let v = o.rep().names().to_vec();
    let start = d.order();
    let target = max_order.unwrap_or(start + 1);
    let mut obstructed_at = None;
    while d.order() < target {
        match extend_deformation(&o, &d).map_err(with_names(&[], &v))? {
            Some(next) => d = next,
            None => {
                obstructed_at = Some(d.order());
                break;
            }
        }
    }
    let status = if d.order() >= target { Status::Ok } else { Status::Violated };
    Ok(Report::new(
        echo,
        status,
        json!({
            "obstructed_at_order": obstructed_at,
            "reached_order": d.order(),
            "start_order": start,
            "target_order": target,
            "terms": d.terms().iter().map(matrix).collect::<Vec<_>>(),
        }),
    ))
}

fn examples(echo: &str, action: ExamplesCommand) -> Report {
    match action {
        ExamplesCommand::List => {
            let list: Vec<Value> = fixtures::FIXTURES
                .iter()
                .map(|f| json!({ "description": f.description, "name": f.name }))
                .collect();
            Report::new(echo, Status::Ok, json!({ "examples": list }))
        }
        ExamplesCommand::Show { name } => match fixtures::get(&name) {
            Some(f) => Report::new(echo, Status::Ok, json!({ "name": f.name, "source": f.source })),
            None => Report::error(echo, format!("unknown example {name:?}")),
        },
    }
}
