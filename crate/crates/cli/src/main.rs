use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thetapoly::diagram::{catalog, catalog_names, Diagram, SignEntry};
use thetapoly::finitetype::{
    alt_sum, echain_witness, order_certificate, theorem1_experiment, theorem2_experiment, CoeffFunctional,
    FtReport, Invariant, TheoremReport,
};
use thetapoly::laurent::{exp_substitute, format_rational};
use thetapoly::{Error, Result};

#[derive(Parser)]
#[command(name = "thetapoly", version, about = "Yamada and Yokota polynomials of θ-curve diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output layout.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Largest crossing count any evaluated diagram may have.
    #[arg(long, default_value_t = 18, global = true)]
    budget: usize,
    /// Seed for subset sampling.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    JsonLines,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantArg {
    Yamada,
    Yokota,
    Both,
}

impl InvariantArg {
    fn single(self) -> Result<Invariant> {
        match self {
            InvariantArg::Yamada => Ok(Invariant::Yamada),
            InvariantArg::Yokota => Ok(Invariant::Yokota),
            InvariantArg::Both => Err(Error::BadParameter("this command takes a single invariant".into())),
        }
    }
}

#[derive(Args)]
struct Selection {
    /// Zero-based crossing indices, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    crossings: Vec<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized invariants of a diagram.
    Eval {
        input: String,
        #[arg(long, value_enum, default_value_t = InvariantArg::Both)]
        invariant: InvariantArg,
    },
    /// Print the first coefficients of the invariant at `e^x`.
    Series {
        input: String,
        #[arg(long, value_enum, default_value_t = InvariantArg::Yamada)]
        invariant: InvariantArg,
        #[arg(long, default_value_t = 16)]
        trunc: usize,
    },
    /// Alternating sum of a coefficient over crossing changes.
    Ftsum {
        input: String,
        #[arg(long, value_enum, default_value_t = InvariantArg::Yamada)]
        invariant: InvariantArg,
        /// `A^r`, `z^r` or `x^n`.
        #[arg(long, default_value = "A^0", allow_hyphen_values = true)]
        coeff: String,
        #[arg(long, default_value_t = 16)]
        trunc: usize,
        #[command(flatten)]
        selection: Selection,
    },
    /// Check the closed-form expansion of the Yamada alternating sum.
    Witness {
        input: String,
        #[command(flatten)]
        selection: Selection,
    },
    /// Check that low-order series coefficients of alternating sums vanish.
    Certify {
        inputs: Vec<String>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = InvariantArg::Yamada)]
        invariant: InvariantArg,
        #[arg(long, default_value_t = 16)]
        trunc: usize,
    },
    /// Non-finite-type witness for coefficients of the Yamada polynomial.
    Thm1 {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
    },
    /// Non-finite-type witness for coefficients of the Yokota polynomial.
    Thm2 {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
    },
    /// List catalog names, or print one catalog diagram as a diagram file.
    Catalog { name: Option<String> },
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: &[&'static str]) -> Self {
        Self { headers: headers.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Table => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.headers.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            Format::JsonLines => {
                for row in &self.rows {
                    let obj: serde_json::Map<String, serde_json::Value> = self
                        .headers
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Object(obj))?;
                }
            }
        }
        Ok(())
    }
}

fn load(input: &str, budget: usize) -> Result<Diagram> {
    let d = match input.strip_prefix("catalog:") {
        Some(name) => catalog(name)?,
        None => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::Parse(format!("cannot read `{input}`: {e}")))?;
            Diagram::parse(&text)?
        }
    };
    check_budget(&d, budget)?;
    Ok(d)
}

fn check_budget(d: &Diagram, budget: usize) -> Result<()> {
    if d.crossing_count() > budget {
        return Err(Error::BudgetExceeded { crossings: d.crossing_count(), budget });
    }
    Ok(())
}

fn eps_text(eps: &[SignEntry]) -> String {
    if eps.is_empty() {
        return "()".into();
    }
    eps.iter().map(|e| e.symbol()).collect::<Vec<_>>().join(" ")
}

fn crossings_text(c: &[usize]) -> String {
    c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn ft_table(report: &FtReport) -> Table {
    let var = report.functional.invariant().var();
    let mut t = Table::new(&["eps", "plus", "invariant", "value"]);
    for row in &report.rows {
        t.push(vec![
            eps_text(&row.eps),
            row.plus.to_string(),
            row.invariant.display(var).to_string(),
            format_rational(&row.value),
        ]);
    }
    t.push(vec!["sum".into(), String::new(), String::new(), format_rational(&report.value)]);
    t
}

fn theorem_table(report: &TheoremReport) -> Table {
    let mut t = Table::new(&["case", "diagram", "crossings", "coefficient", "value"]);
    for (case, r) in [("main", &report.main), ("alternate", &report.alternate), ("mirror", &report.mirrored)] {
        t.push(vec![
            case.into(),
            r.diagram.clone(),
            crossings_text(&r.crossings),
            r.functional.to_string(),
            format_rational(&r.value),
        ]);
    }
    t
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(format!("output error: {e}"));
    match cli.command {
        Command::Eval { input, invariant } => {
            let d = load(&input, cli.budget)?;
            let mut t = Table::new(&["diagram", "invariant", "polynomial"]);
            if invariant != InvariantArg::Yokota {
                let p = Invariant::Yamada.eval(&d)?;
                t.push(vec![d.name().into(), "yamada".into(), p.display("A").to_string()]);
            }
            if invariant != InvariantArg::Yamada {
                let p = Invariant::Yokota.eval(&d)?;
                t.push(vec![d.name().into(), "yokota".into(), p.display("z").to_string()]);
            }
            t.write(cli.format, out).map_err(io)
        }
        Command::Series { input, invariant, trunc } => {
            let inv = invariant.single()?;
            let d = load(&input, cli.budget)?;
            let series = exp_substitute(&inv.eval(&d)?, trunc);
            let mut t = Table::new(&["diagram", "index", "coefficient"]);
            for (i, c) in series.coeffs().iter().enumerate() {
                t.push(vec![d.name().into(), i.to_string(), format_rational(c)]);
            }
            t.write(cli.format, out).map_err(io)
        }
        Command::Ftsum { input, invariant, coeff, trunc, selection } => {
            let functional = CoeffFunctional::parse(&coeff, invariant.single()?, trunc)?;
            let d = load(&input, cli.budget)?;
            let report = alt_sum(&d, &selection.crossings, &functional)?;
            ft_table(&report).write(cli.format, out).map_err(io)
        }
        Command::Witness { input, selection } => {
            let d = load(&input, cli.budget)?;
            let w = echain_witness(&d, &selection.crossings)?;
            let mut t = Table::new(&["side", "polynomial"]);
            t.push(vec!["left".into(), w.left.to_string()]);
            t.push(vec!["right".into(), w.right.to_string()]);
            t.push(vec!["status".into(), "equal".into()]);
            t.write(cli.format, out).map_err(io)
        }
        Command::Certify { inputs, order, invariant, trunc } => {
            let inv = invariant.single()?;
            if inputs.is_empty() {
                return Err(Error::BadParameter("certify needs at least one diagram".into()));
            }
            let diagrams = inputs.iter().map(|i| load(i, cli.budget)).collect::<Result<Vec<_>>>()?;
            let report = order_certificate(&diagrams, order, trunc, inv, cli.seed)?;
            let mut t = Table::new(&["diagram", "crossings", "index", "coefficient"]);
            for v in &report.violations {
                t.push(vec![
                    v.diagram.clone(),
                    crossings_text(&v.crossings),
                    v.index.to_string(),
                    format_rational(&v.coefficient),
                ]);
            }
            t.push(vec![
                "checked".into(),
                report.checked.to_string(),
                order.to_string(),
                if report.passed() { "pass" } else { "fail" }.into(),
            ]);
            t.write(cli.format, out).map_err(io)?;
            if !report.passed() {
                return Err(Error::CertificateViolation(format!(
                    "{} nonzero coefficients of order <= {order}",
                    report.violations.len()
                )));
            }
            Ok(())
        }
        Command::Thm1 { r, n } | Command::Thm2 { r, n } => {
            let report = if matches!(cli.command, Command::Thm1 { .. }) {
                theorem1_experiment(r, n, cli.budget)?
            } else {
                theorem2_experiment(r, n, cli.budget)?
            };
            theorem_table(&report).write(cli.format, out).map_err(io)?;
            if !report.nonzero() {
                return Err(Error::WitnessMismatch("alternating sum vanished".into()));
            }
            if !report.selection_independent() {
                return Err(Error::WitnessMismatch("value depends on the chosen crossings".into()));
            }
            Ok(())
        }
        Command::Catalog { name } => {
            match name {
                None => {
                    for n in catalog_names() {
                        writeln!(out, "{n}").map_err(io)?;
                    }
                }
                Some(n) => write!(out, "{}", catalog(n.strip_prefix("catalog:").unwrap_or(&n))?.render()).map_err(io)?,
            }
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::WitnessMismatch(_) | Error::CertificateViolation(_) | Error::NotDivisible | Error::NonCubicExponent(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
