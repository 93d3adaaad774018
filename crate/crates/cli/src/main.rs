//! `sqk`: command-line front end to the kernel, oracles and prover.
//!
//! Exit status: 0 on success, 1 on a negative verdict (not provable, not a
//! tautology, countermodel found, proof rejected), 2 on usage or parse
//! errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sqk_core::evidence::{normalize, parse_term, CHECK_FUEL};
use sqk_core::kernel::{check_proof, print_proof, proof_parse};
use sqk_core::oracle::{
    falsifying_valuation, finite_countermodel, inhabitation_search, kripke_refutes, EvidenceModel,
};
use sqk_core::prover::{
    classical_pipeline, explore, g4ip_prove, run_report, Connective, CorpusSpec, ProverError, Verdict,
};
use sqk_core::syntax::{free_vars, parse_formula, print_full, Formula, ParseError};
use sqk_core::translate::{erase_squash, godel, kolmogorov, kuroda, squash_subformulas, squash_top};

const FORMULA_GRAMMAR: &str = "\
formula grammar (loosest first):
  A => B          implication, right associative
  A \\/ B          disjunction, left associative
  A /\\ B          conjunction, left associative
  ~A  {A}         negation (A => False), squash
  forall x. A     quantifiers; the body extends as far right as possible
  exists x. A
  P  Q(x)  True  False  (A)
terms: lam(x.t) ap(t; t) pair(t; t) fst(t) snd(t) inl(t) inr(t)
       case(t; x.t; y.t) star any(t), and f(a) for application";

#[derive(Parser)]
#[command(name = "sqk", version, about = "Squash-modality proof kernel and toolchain", after_help = FORMULA_GRAMMAR)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormulaArg {
    /// Formula text.
    formula: Option<String>,
    /// Read the formula from a file instead.
    #[arg(long, conflicts_with = "formula")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and show its structure.
    Parse(FormulaArg),
    /// Print a formula in canonical form.
    Fmt(FormulaArg),
    /// Apply a translation.
    Translate {
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Semantic oracles.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
    /// Search for a proof.
    Prove {
        #[arg(long, value_enum, default_value = "ipc")]
        logic: Logic,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Check a proof file and print its realizer.
    Check { proof: PathBuf },
    /// Normalise a term.
    Eval {
        term: String,
        /// Reduction steps allowed [default: $SQK_FUEL or 10000].
        #[arg(long)]
        fuel: Option<usize>,
    },
    /// Sweep a generated corpus through prover and oracles.
    Report {
        #[arg(long)]
        atoms: usize,
        #[arg(long)]
        depth: usize,
        /// Comma-separated subset of and,or,imp,false,true.
        #[arg(long, value_delimiter = ',')]
        connectives: Option<Vec<Connective>>,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run mixed squashed/plain formulas through bounded search.
    Explore {
        /// Formulas to explore [default: the four mixed-mode questions].
        formulas: Vec<String>,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Truth-table validity.
    Taut(FormulaArg),
    /// Validity over finite first-order models.
    Fol {
        #[arg(long, default_value_t = 3)]
        max_domain: usize,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Search for evidence under an assignment of types to atoms.
    Inhabit {
        /// e.g. P=Unit,Q=Void,R=Unit+Unit
        #[arg(long)]
        model: String,
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Search for a Kripke countermodel.
    Kripke {
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[command(flatten)]
        input: FormulaArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Kolmogorov,
    Godel,
    Kuroda,
    SquashTop,
    SquashSub,
    Erase,
}

#[derive(Clone, Copy, ValueEnum)]
enum Logic {
    Ipc,
    Classical,
}

/// What a command prints, in both renderings, and its exit status.
struct Output {
    code: u8,
    text: String,
    json: Value,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Output {
        Output {
            code: 0,
            text: text.into(),
            json,
        }
    }

    fn negative(text: impl Into<String>, json: Value) -> Output {
        Output {
            code: 1,
            text: text.into(),
            json,
        }
    }
}

/// A usage, input or internal error (exit 2).
struct Failure(String);

fn show_parse_error(src: &str, e: &ParseError) -> Failure {
    let line_start = src[..e.offset.min(src.len())].rfind('\n').map_or(0, |i| i + 1);
    let line_end = src[line_start..].find('\n').map_or(src.len(), |i| line_start + i);
    let col = src[line_start..e.offset.min(src.len())].chars().count();
    Failure(format!(
        "{e}\n  {}\n  {}^",
        &src[line_start..line_end],
        " ".repeat(col)
    ))
}

fn read_formula(arg: &FormulaArg) -> Result<Formula, Failure> {
    let text = match (&arg.formula, &arg.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(Failure("a formula or --file is required".into())),
    };
    parse_formula(text.trim()).map_err(|e| show_parse_error(text.trim(), &e))
}

fn usage_err(e: impl std::fmt::Display) -> Failure {
    Failure(e.to_string())
}

fn default_fuel() -> Result<usize, Failure> {
    match std::env::var("SQK_FUEL") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure(format!("SQK_FUEL must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(CHECK_FUEL),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Parse(input) => {
            let f = read_formula(input)?;
            let fv: Vec<String> = free_vars(&f).into_iter().collect();
            Ok(Output::ok(
                format!(
                    "{}\nsize {}, depth {}, free variables {{{}}}",
                    print_full(&f),
                    f.size(),
                    f.depth(),
                    fv.join(", ")
                ),
                json!({
                    "formula": f.to_string(),
                    "full": print_full(&f),
                    "size": f.size(),
                    "depth": f.depth(),
                    "free_vars": fv,
                }),
            ))
        }
        Command::Fmt(input) => {
            let f = read_formula(input)?;
            Ok(Output::ok(f.to_string(), json!({ "formula": f.to_string() })))
        }
        Command::Translate { mode, input } => {
            let f = read_formula(input)?;
            let t = match mode {
                Mode::Kolmogorov => kolmogorov(&f),
                Mode::Godel => godel(&f),
                Mode::Kuroda => kuroda(&f),
                Mode::SquashTop => Ok(squash_top(&f)),
                Mode::SquashSub => squash_subformulas(&f),
                Mode::Erase => Ok(erase_squash(&f)),
            }
            .map_err(usage_err)?;
            Ok(Output::ok(t.to_string(), json!({ "formula": t.to_string() })))
        }
        Command::Oracle { oracle } => run_oracle(oracle),
        Command::Prove { logic, input } => {
            let f = read_formula(input)?;
            let proof = match logic {
                Logic::Ipc => g4ip_prove(&f).map_err(usage_err)?,
                Logic::Classical => match classical_pipeline(&f) {
                    Ok(p) => Some(p),
                    Err(ProverError::NotATautology(_)) => {
                        let v = falsifying_valuation(&f).map_err(usage_err)?;
                        let v = v.map(|v| v.to_string()).unwrap_or_default();
                        return Ok(Output::negative(
                            format!("not a tautology: {v}"),
                            json!({ "verdict": "not_a_tautology", "valuation": v }),
                        ));
                    }
                    Err(e) => return Err(usage_err(e)),
                },
            };
            let Some(p) = proof else {
                return Ok(Output::negative(
                    "not provable",
                    json!({ "verdict": "not_provable" }),
                ));
            };
            let r = check_proof(&p).map_err(|e| Failure(format!("internal error: kernel rejected {e}")))?;
            Ok(Output::ok(
                format!("{}\nrealizer: {r}", print_proof(&p)),
                json!({
                    "verdict": "proved",
                    "goal": p.goal.to_string(),
                    "proof": print_proof(&p),
                    "realizer": r.to_string(),
                }),
            ))
        }
        Command::Check { proof } => {
            let text = fs::read_to_string(proof)
                .map_err(|e| Failure(format!("cannot read {}: {e}", proof.display())))?;
            let p = proof_parse(&text).map_err(|e| show_parse_error(&text, &e))?;
            match check_proof(&p) {
                Ok(r) => Ok(Output::ok(
                    format!("accepted: {}\nrealizer: {r}", p.goal),
                    json!({ "accepted": true, "goal": p.goal.to_string(), "realizer": r.to_string() }),
                )),
                Err(e) => Ok(Output::negative(
                    format!("rejected: {e}"),
                    json!({
                        "accepted": false,
                        "path": e.path,
                        "rule": e.rule.name(),
                        "reason": e.kind.to_string(),
                    }),
                )),
            }
        }
        Command::Eval { term, fuel } => {
            let t = parse_term(term).map_err(|e| show_parse_error(term, &e))?;
            let fuel = match fuel {
                Some(f) => *f,
                None => default_fuel()?,
            };
            match normalize(&t, fuel) {
                Ok(nf) => Ok(Output::ok(nf.to_string(), json!({ "normal_form": nf.to_string() }))),
                Err(e) => Ok(Output::negative(e.to_string(), json!({ "normal_form": null, "fuel": fuel }))),
            }
        }
        Command::Report {
            atoms,
            depth,
            connectives,
            out,
        } => {
            let spec = match connectives {
                Some(c) => CorpusSpec::new(*atoms, *depth, c),
                None => CorpusSpec::full(*atoms, *depth),
            }
            .map_err(Failure)?;
            let report = match run_report(&spec) {
                Ok(r) => r,
                Err(e @ ProverError::Violation { .. }) => {
                    return Ok(Output::negative(e.to_string(), json!({ "violation": e.to_string() })))
                }
                Err(e) => return Err(usage_err(e)),
            };
            let value = serde_json::to_value(&report).map_err(usage_err)?;
            if let Some(path) = out {
                let pretty = serde_json::to_string_pretty(&value).map_err(usage_err)?;
                fs::write(path, pretty + "\n")
                    .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            }
            let a = &report.aggregates;
            let text = format!(
                "formulas            {}\n\
                 classical_valid     {}\n\
                 ipc_provable        {}\n\
                 not_not_provable    {}\n\
                 squash_provable     {}\n\
                 countermodel_found  {}\n\
                 classical_only      {}\n\
                 no violations ({} ms)",
                a.formulas,
                a.classical_valid,
                a.ipc_provable,
                a.not_not_provable,
                a.squash_provable,
                a.countermodel_found,
                a.classical_only,
                report.elapsed_ms
            );
            Ok(Output::ok(text, value))
        }
        Command::Explore { formulas, depth } => {
            let defaults = [
                "(P => Q) => {P => Q}",
                "({P} => {Q}) => {P => Q}",
                "{P /\\ Q} => {P} /\\ {Q}",
                "{P} /\\ {Q} => {P /\\ Q}",
            ];
            let inputs: Vec<String> = if formulas.is_empty() {
                defaults.iter().map(|s| s.to_string()).collect()
            } else {
                formulas.clone()
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for s in &inputs {
                let f = parse_formula(s).map_err(|e| show_parse_error(s, &e))?;
                let v = explore(&f, *depth).map_err(usage_err)?;
                lines.push(format!("{:<8} {f}", v.label()));
                let proof = match &v {
                    Verdict::Proved(p) => Value::String(print_proof(p)),
                    _ => Value::Null,
                };
                rows.push(json!({ "formula": f.to_string(), "verdict": v.label(), "proof": proof }));
            }
            Ok(Output::ok(lines.join("\n"), json!({ "depth": depth, "results": rows })))
        }
    }
}

fn run_oracle(oracle: &OracleCommand) -> Result<Output, Failure> {
    match oracle {
        OracleCommand::Taut(input) => {
            let f = read_formula(input)?;
            match falsifying_valuation(&f).map_err(usage_err)? {
                None => Ok(Output::ok("valid", json!({ "valid": true }))),
                Some(v) => Ok(Output::negative(
                    format!("invalid: {v}"),
                    json!({ "valid": false, "valuation": v.0 }),
                )),
            }
        }
        OracleCommand::Fol { max_domain, input } => {
            let f = read_formula(input)?;
            match finite_countermodel(&f, *max_domain).map_err(usage_err)? {
                None => Ok(Output::ok(
                    format!("valid in all models of size 1 to {max_domain}"),
                    json!({ "valid": true, "max_domain": max_domain }),
                )),
                Some(m) => Ok(Output::negative(
                    format!("invalid: {m}"),
                    json!({ "valid": false, "countermodel": m.to_string() }),
                )),
            }
        }
        OracleCommand::Inhabit { model, depth, input } => {
            let f = read_formula(input)?;
            let m: EvidenceModel = model.parse().map_err(usage_err)?;
            let depth = depth.unwrap_or(f.depth() + 2);
            match inhabitation_search(&f, &m, depth).map_err(usage_err)? {
                Some(t) => Ok(Output::ok(t.to_string(), json!({ "inhabited": true, "term": t.to_string() }))),
                None => Ok(Output::negative(
                    "uninhabited",
                    json!({ "inhabited": false, "term": null }),
                )),
            }
        }
        OracleCommand::Kripke { max_worlds, input } => {
            let f = read_formula(input)?;
            match kripke_refutes(&f, *max_worlds).map_err(usage_err)? {
                None => Ok(Output::ok(
                    format!("no countermodel with at most {max_worlds} worlds"),
                    json!({ "countermodel": null }),
                )),
                Some(m) => Ok(Output::negative(
                    format!("countermodel: {m}"),
                    json!({ "countermodel": m.to_string() }),
                )),
            }
        }
    }
}

/// Prints a line, ignoring a closed pipe (e.g. `sqk report ... | head`).
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&out.json).expect("JSON values serialise"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            if cli.json {
                emit(&json!({ "error": msg }).to_string());
            }
            ExitCode::from(2)
        }
    }
}
