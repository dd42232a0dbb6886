use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ayrep::cells::{descent_cell, Cell, Functional};
use ayrep::groups::Permutation;
use ayrep::linalg::format_rational;
use ayrep::reps::{
    self, bn_classical, build_on_cell, build_parabolic, build_skew, character, class_table,
    extend_to_bn, float_character, induce, induced_character, is_irreducible, verify_coxeter,
    Matrices, Normalization, Report, Representation,
};
use ayrep::sweep;
use ayrep::tableaux::{enumerate_standard, SkewShape, Tableau};
use ayrep::tops::top_elements;
use ayrep::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "ayrep", version, about = "Abstract Young cells and representations of S_n and B_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Seminormal,
    Orthogonal,
}

impl From<Form> for Normalization {
    fn from(f: Form) -> Self {
        match f {
            Form::Seminormal => Normalization::Seminormal,
            Form::Orthogonal => Normalization::Orthogonal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Extension,
    Classical,
}

#[derive(Args)]
struct Output {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CellArgs {
    #[arg(long)]
    n: usize,
    /// Functional coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    /// Base permutation of the class (default: identity).
    #[arg(long)]
    w: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Descent class of a functional, with interior and boundary reflections.
    Cell {
        #[command(flatten)]
        cell: CellArgs,
        #[command(flatten)]
        out: Output,
        /// Graphviz Hasse diagram with the (a, b) coefficients on the edges.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Standard Young tableaux of a (skew) shape such as `3,3,1/3,1`.
    Syt {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        out: Output,
    },
    /// Representation matrices from a functional or a shape.
    Rep {
        #[arg(long, required_unless_present = "shape")]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "shape", requires = "n")]
        f: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value = "seminormal")]
        form: Form,
        #[command(flatten)]
        out: Output,
    },
    /// Induce the representation of a parabolic subgroup up to S_n.
    Induce {
        #[arg(long)]
        n: usize,
        /// Generators of the parabolic subgroup, e.g. `1,3` (may be empty).
        #[arg(long, default_value = "")]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        out: Output,
    },
    /// Irreducible representation of B_n indexed by a pair of partitions.
    Bn {
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value = "extension")]
        model: Model,
        #[arg(long, value_enum, default_value = "seminormal")]
        form: Form,
        #[command(flatten)]
        out: Output,
    },
    /// Top elements of S_n against the oracle.
    Tops {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run verification sweeps.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated suite names.
        #[arg(long, default_value = "coxeter,axiomB,flat,specht")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// Successful run: what to print, and whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad list entry {x:?}"))))
        .collect()
}

fn functional(n: usize, f: &str) -> Result<Functional, Error> {
    let f: Functional = f.parse()?;
    if f.n() != n {
        return Err(Error::SizeMismatch(format!("--f has {} coordinates but --n is {n}", f.n())));
    }
    Ok(f)
}

fn base(n: usize, w: Option<&str>) -> Result<Permutation, Error> {
    match w {
        Some(w) => {
            let w: Permutation = w.parse()?;
            if w.n() != n {
                return Err(Error::SizeMismatch(format!("--w has {} letters but --n is {n}", w.n())));
            }
            Ok(w)
        }
        None => Ok(Permutation::identity(n)),
    }
}

fn cell_of(args: &CellArgs) -> Result<(Functional, Cell), Error> {
    let f = functional(args.n, &args.f)?;
    let w = base(args.n, args.w.as_deref())?;
    let cell = descent_cell(&f, &w)?;
    Ok((f, cell))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn matrices_json(rep: &Representation) -> Value {
    let rows: Vec<Value> = match &rep.matrices {
        Matrices::Exact(ms) => ms
            .iter()
            .map(|m| json!(m.to_rows().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>()))
            .collect(),
        Matrices::Float(ms) => ms.iter().map(|m| json!(m.to_rows())).collect(),
    };
    json!(rep
        .generators
        .iter()
        .zip(rows)
        .map(|(s, m)| json!({ "generator": s, "matrix": m }))
        .collect::<Vec<_>>())
}

fn matrices_text(rep: &Representation) -> String {
    let mut out = String::new();
    for (k, s) in rep.generators.iter().enumerate() {
        out.push_str(&format!("rho(s{s}):\n"));
        match &rep.matrices {
            Matrices::Exact(ms) => {
                for row in ms[k].to_rows() {
                    out.push_str(&format!("  [{}]\n", join(row.iter().map(format_rational), ", ")));
                }
            }
            Matrices::Float(ms) => {
                for row in ms[k].to_rows() {
                    out.push_str(&format!("  [{}]\n", join(row.iter().map(|x| format!("{x:.6}")), ", ")));
                }
            }
        }
    }
    out
}

fn character_json(rep: &Representation) -> Result<Value, Error> {
    let table = class_table(rep.group, rep.n, &rep.generators)?;
    let values: Vec<Value> = match rep.matrices {
        Matrices::Exact(_) => character(rep)?.iter().map(|x| json!(format_rational(x))).collect(),
        Matrices::Float(_) => float_character(rep)?.into_iter().map(|x| json!(x)).collect(),
    };
    Ok(json!(table
        .classes
        .iter()
        .zip(values)
        .map(|(c, v)| json!({
            "representative": c.representative.to_string(),
            "size": c.size,
            "value": v,
        }))
        .collect::<Vec<_>>()))
}

fn report_json(report: &Report) -> Value {
    json!({ "checks": report.checks, "failures": report.failures, "ok": report.ok() })
}

fn rep_outcome(kind: &str, rep: &Representation) -> Result<Outcome, Error> {
    let coxeter = verify_coxeter(rep);
    let irreducible = match rep.matrices {
        Matrices::Exact(_) => Some(is_irreducible(rep)?),
        Matrices::Float(_) => None,
    };
    let mut text = format!(
        "{kind}: group {}{}, dimension {}\nbasis: {}\n{}",
        rep.group,
        rep.n,
        rep.dim(),
        join(&rep.basis, " ; "),
        matrices_text(rep)
    );
    text.push_str(&format!("coxeter: {}\n", if coxeter.ok() { "ok" } else { "FAILED" }));
    for f in &coxeter.failures {
        text.push_str(&format!("  {f}\n"));
    }
    if let Some(irr) = irreducible {
        text.push_str(&format!("irreducible: {irr}\n"));
    }
    let json = json!({
        "group": rep.group.to_string(),
        "n": rep.n,
        "normalization": rep.normalization(),
        "dimension": rep.dim(),
        "basis": rep.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "matrices": matrices_json(rep),
        "character": character_json(rep)?,
        "coxeter": report_json(&coxeter),
        "irreducible": irreducible,
    });
    Ok(Outcome {
        text,
        json,
        passed: coxeter.ok(),
    })
}

fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Cell { cell, dot, .. } => {
            let (f, cell) = cell_of(cell)?;
            if *dot {
                let rep = build_on_cell(&f, &cell, Normalization::Seminormal)?;
                return Ok(Outcome {
                    text: reps::hasse_dot(&rep, &cell),
                    json: Value::Null,
                    passed: true,
                });
            }
            let text = format!(
                "members ({}): {}\ninterior T_K: {}\nboundary T_dK: {}\n",
                cell.len(),
                join(cell.members(), " / "),
                join(cell.interior(), " "),
                join(cell.boundary(), " ")
            );
            let json = json!({
                "functional": f.coords(),
                "members": cell.members().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "interior": cell.interior().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "boundary": cell.boundary().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "convex": cell.is_convex(),
            });
            Ok(Outcome { text, json, passed: true })
        }
        Command::Syt { shape, .. } => {
            let shape: SkewShape = shape.parse()?;
            let all = enumerate_standard(&shape)?;
            let mut text = format!("{shape}: {} standard tableaux\n", all.len());
            for t in &all {
                text.push_str(&format!("{}\n\n", t.to_text()));
            }
            let json = json!({
                "shape": shape.to_string(),
                "count": all.len(),
                "tableaux": all.iter().map(Tableau::to_text).collect::<Vec<_>>(),
            });
            Ok(Outcome { text, json, passed: true })
        }
        Command::Rep { n, f, w, shape, form, .. } => {
            let rep = match (shape, f) {
                (Some(shape), _) => build_skew(&shape.parse()?, (*form).into())?,
                (None, Some(f)) => {
                    let n = n.expect("clap requires --n with --f");
                    let f = functional(n, f)?;
                    let cell = descent_cell(&f, &base(n, w.as_deref())?)?;
                    build_on_cell(&f, &cell, (*form).into())?
                }
                (None, None) => return Err(Error::Parse("give --f or --shape".into())),
            };
            rep_outcome("representation", &rep)
        }
        Command::Induce { n, j, f, .. } => {
            let labels: Vec<usize> = parse_list(j)?;
            let f = functional(*n, f)?;
            let psi = build_parabolic(&f, &labels, Normalization::Seminormal)?;
            let up = induce(&psi)?;
            let ours = character(&up)?;
            let classical = induced_character(&psi)?;
            let mut outcome = rep_outcome("induced", &up)?;
            let agree = ours == classical;
            outcome.text.push_str(&format!(
                "subgroup dimension {}; classical induced character: {}\nagrees: {agree}\n",
                psi.dim(),
                join(classical.iter().map(format_rational), " ")
            ));
            outcome.json["subgroup_dimension"] = json!(psi.dim());
            outcome.json["classical_character"] =
                json!(classical.iter().map(format_rational).collect::<Vec<_>>());
            outcome.json["characters_agree"] = json!(agree);
            outcome.passed &= agree;
            Ok(outcome)
        }
        Command::Bn { lambda, mu, model, form, .. } => {
            let lambda: Vec<usize> = parse_list(lambda)?;
            let mu: Vec<usize> = parse_list(mu)?;
            let rep = match model {
                Model::Classical => bn_classical(&lambda, &mu, (*form).into())?,
                Model::Extension => {
                    let row = |p: &[usize]| -> Result<Option<Tableau>, Error> {
                        if p.is_empty() {
                            return Ok(None);
                        }
                        Ok(Some(Tableau::row_tableau(&SkewShape::straight(p.to_vec())?)))
                    };
                    extend_to_bn(row(&lambda)?.as_ref(), row(&mu)?.as_ref(), (*form).into())?
                }
            };
            let mut outcome = rep_outcome("B_n representation", &rep)?;
            if let Some(irr) = outcome.json["irreducible"].as_bool() {
                outcome.passed &= irr;
            }
            Ok(outcome)
        }
        Command::Tops { n, .. } => {
            let top = top_elements(*n)?;
            let mut text = format!(
                "top elements of S_{n}: oracle certifies {}, p({n}) = {}\n{:<14} {:<14} {:>8} {:>11} {:>13}\n",
                top.oracle.len(),
                top.partition_count,
                "shape",
                "sigma",
                "interval",
                "irreducible",
                "oracle-agrees"
            );
            for row in &top.rows {
                text.push_str(&format!(
                    "{:<14} {:<14} {:>8} {:>11} {:>13}\n",
                    join(&row.shape, ","),
                    row.sigma_down.to_string(),
                    row.interval_size,
                    row.irreducible,
                    row.down_certified
                ));
            }
            for d in &top.discrepancies {
                text.push_str(&format!("note: {d}\n"));
            }
            let passed = top.down_matches_oracle && top.rows.iter().all(|r| r.irreducible);
            let json = json!({
                "n": n,
                "oracle": top.oracle.iter().map(|(p, w)| json!({
                    "element": p.to_string(),
                    "sigma": w.sigma.to_string(),
                    "tableau": w.tableau.to_text(),
                })).collect::<Vec<_>>(),
                "rows": top.rows.iter().map(|r| json!({
                    "shape": r.shape,
                    "sigma": r.sigma_down.to_string(),
                    "sigma_bottom_to_top": r.sigma_up.to_string(),
                    "interval_size": r.interval_size,
                    "irreducible": r.irreducible,
                    "oracle_agrees": r.down_certified,
                })).collect::<Vec<_>>(),
                "partition_count": top.partition_count,
                "distinct_elements": top.distinct_down,
                "discrepancies": top.discrepancies,
            });
            Ok(Outcome { text, json, passed })
        }
        Command::Verify { n, suite, seed, .. } => {
            let mut text = String::new();
            let mut suites = serde_json::Map::new();
            let mut passed = true;
            for name in suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let report = sweep::run_suite(name, *n, *seed)?;
                passed &= report.ok();
                text.push_str(&format!(
                    "{} {name} (n = {n}, {} checks)\n",
                    if report.ok() { "PASS" } else { "FAIL" },
                    report.checks
                ));
                for f in &report.failures {
                    text.push_str(&format!("  {f}\n"));
                }
                suites.insert(name.to_string(), report_json(&report));
            }
            let json = json!({ "n": n, "seed": seed, "suites": suites, "ok": passed });
            Ok(Outcome { text, json, passed })
        }
    }
}

fn wants_json(command: &Command) -> bool {
    match command {
        Command::Cell { out, .. }
        | Command::Syt { out, .. }
        | Command::Rep { out, .. }
        | Command::Induce { out, .. }
        | Command::Bn { out, .. }
        | Command::Tops { out, .. }
        | Command::Verify { out, .. } => out.json,
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Cell { .. } => "cell",
        Command::Syt { .. } => "syt",
        Command::Rep { .. } => "rep",
        Command::Induce { .. } => "induce",
        Command::Bn { .. } => "bn",
        Command::Tops { .. } => "tops",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            if wants_json(&cli.command) {
                let mut doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name(&cli.command),
                    "passed": outcome.passed,
                });
                if let (Value::Object(doc), Value::Object(body)) = (&mut doc, outcome.json) {
                    doc.extend(body);
                }
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                let _ = write!(std::io::stdout(), "{}", outcome.text);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list::<usize>("1, 3").unwrap(), vec![1, 3]);
        assert!(parse_list::<usize>("").unwrap().is_empty());
        assert!(parse_list::<usize>("x").is_err());
        assert!(functional(3, "0,1").is_err());
    }
}
