use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sympow_cli::repro::{self, CASES};
use sympow_cli::{envelope, execute, exit, parse_scenario, Field, Fields, InputError};
use sympow_core::{Error, Guards};

#[derive(Parser, Debug)]
#[command(name = "sympow", version, about = "Ordinary and symbolic powers of polynomial ideals")]
struct Cli {
    /// Write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Largest total degree a Gröbner basis computation may reach.
    #[arg(long, global = true, value_name = "N")]
    guard_degree: Option<u32>,
    /// Soft time budget per Gröbner basis computation, in seconds.
    #[arg(long, global = true, value_name = "S")]
    guard_seconds: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Ring header, e.g. `QQ[x,y,z]` or `Fp(32003)[a,b]`.
    #[arg(long)]
    ring: String,
    /// Comma-separated generators.
    #[arg(long)]
    ideal: String,
}

#[derive(Args, Debug)]
struct StrategyArgs {
    /// saturation-at-irrelevant, minimal-prime-intersection or
    /// user-element-saturation:<poly>.
    #[arg(long)]
    strategy: String,
    /// dim1-radical, locally-ci, unique-minimal-prime-dim1-homogeneous or
    /// user-override:<reason>.
    #[arg(long)]
    justification: Option<String>,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long)]
    ring: String,
    /// Forms of the map, comma-separated.
    #[arg(long)]
    forms: String,
    /// Forms of the candidate inverse.
    #[arg(long)]
    inverse: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, height, generators, depth and Betti table.
    Profile(IdealArgs),
    /// Minimal graded free resolution.
    Resolve(IdealArgs),
    /// Compare I^n with I^(n).
    Compare {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Compare I^n with I^(n) for n = 1..n_max.
    Scan {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Graph class of a height-two square-free monomial ideal in four variables.
    Classify(IdealArgs),
    /// Birational maps given by forms.
    Cremona {
        #[command(subcommand)]
        action: CremonaCommand,
    },
    /// Run a built-in reproduction case, or `all`.
    Repro {
        id: String,
    },
    /// Run a scenario file.
    Run {
        path: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CremonaCommand {
    /// Check that the inverse composes with the map to D times the identity.
    Verify(MapArgs),
    /// Compare powers of the base ideal up to the inverse degree.
    Probe {
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long)]
        check_up_to: Option<u32>,
    },
}

fn fields_for(command: &Command) -> Option<Fields> {
    let mut f = Fields::default();
    let mut put = |k: &str, v: &str| f.insert(k, Field::cli(v));
    match command {
        Command::Profile(a) | Command::Resolve(a) | Command::Classify(a) => {
            let task = match command {
                Command::Profile(_) => "profile",
                Command::Resolve(_) => "resolve",
                _ => "classify",
            };
            put("task", task);
            put("ring", &a.ring);
            put("ideal", &a.ideal);
        }
        Command::Compare { ideal, n, strategy } | Command::Scan { ideal, n_max: n, strategy } => {
            let (task, key) = if matches!(command, Command::Compare { .. }) { ("compare", "n") } else { ("scan", "n_max") };
            put("task", task);
            put("ring", &ideal.ring);
            put("ideal", &ideal.ideal);
            put(key, &n.to_string());
            put("strategy", &strategy.strategy);
            if let Some(j) = &strategy.justification {
                put("justification", j);
            }
        }
        Command::Cremona { action } => {
            let map = match action {
                CremonaCommand::Verify(m) => {
                    put("task", "cremona-verify");
                    m
                }
                CremonaCommand::Probe { map, strategy, check_up_to } => {
                    put("task", "cremona-probe");
                    put("strategy", &strategy.strategy);
                    if let Some(j) = &strategy.justification {
                        put("justification", j);
                    }
                    if let Some(c) = check_up_to {
                        put("check_up_to", &c.to_string());
                    }
                    map
                }
            };
            put("ring", &map.ring);
            put("forms", &map.forms);
            put("inverse", &map.inverse);
        }
        Command::Repro { .. } | Command::Run { .. } => return None,
    }
    Some(f)
}

/// Command-line guard flags override scenario values.
fn apply_guard_flags(cli: &Cli, fields: &mut Fields) {
    if let Some(d) = cli.guard_degree {
        fields.insert("guard_degree", Field::cli(d.to_string()));
    }
    if let Some(s) = cli.guard_seconds {
        fields.insert("guard_seconds", Field::cli(s.to_string()));
    }
}

fn write_json(path: &Path, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("json value serializes");
    std::fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))
}

struct Finished {
    code: u8,
    json: Value,
}

fn run_fields(command: &str, fields: &Fields) -> Finished {
    let task = match fields.task() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Finished { code: exit::INPUT, json: error_json(command, "input-error", &e.to_string()) };
        }
    };
    match execute(&task) {
        Ok(out) => {
            print!("{}", out.text);
            if out.guard_abort {
                eprintln!("guard abort: partial results above");
                Finished { code: exit::GUARD, json: envelope(task.name(), "guard-abort", out.json) }
            } else {
                Finished { code: exit::OK, json: envelope(task.name(), "ok", out.json) }
            }
        }
        Err(e) => core_failure(task.name(), &e),
    }
}

fn error_json(command: &str, status: &str, message: &str) -> Value {
    let mut v = envelope(command, status, Value::Null);
    v["error"] = json!(message);
    v
}

fn core_failure(command: &str, e: &Error) -> Finished {
    eprintln!("error: {e}");
    if e.is_guard_abort() {
        Finished { code: exit::GUARD, json: error_json(command, "guard-abort", &e.to_string()) }
    } else {
        Finished { code: exit::INPUT, json: error_json(command, "input-error", &e.to_string()) }
    }
}

fn run_repro(id: &str, guards: Guards) -> Finished {
    let ids: Vec<&str> = if id == "all" { CASES.iter().map(|(c, _)| *c).collect() } else { vec![id] };
    if id != "all" && !CASES.iter().any(|(c, _)| *c == id) {
        let known: Vec<&str> = CASES.iter().map(|(c, _)| *c).collect();
        let msg = format!("unknown case `{id}`; known: all, {}", known.join(", "));
        eprintln!("error: {msg}");
        return Finished { code: exit::INPUT, json: error_json("repro", "input-error", &msg) };
    }
    let mut results = Vec::new();
    let mut code = exit::OK;
    for case in ids {
        match repro::run_case(case, guards) {
            Ok(r) => {
                print!("{}", repro::render(&r));
                if !r.pass {
                    code = code.max(exit::INPUT);
                }
                results.push(serde_json::to_value(&r).expect("result serializes"));
            }
            Err(e) => {
                eprintln!("{case}: {e}");
                code = if e.is_guard_abort() { exit::GUARD } else { code.max(exit::INPUT) };
                results.push(json!({ "id": case, "pass": false, "error": e.to_string() }));
            }
        }
    }
    let passed = results.iter().filter(|r| r["pass"] == json!(true)).count();
    println!("{passed}/{} cases passed", results.len());
    let status = if code == exit::OK { "ok" } else if code == exit::GUARD { "guard-abort" } else { "failed" };
    Finished { code, json: envelope("repro", status, json!(results)) }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    let finished = match &cli.command {
        Command::Repro { id } => {
            let mut f = Fields::default();
            apply_guard_flags(&cli, &mut f);
            match f.guards() {
                Ok(g) => run_repro(id, g),
                Err(e) => {
                    eprintln!("error: {e}");
                    Finished { code: exit::INPUT, json: error_json("repro", "input-error", &e.to_string()) }
                }
            }
        }
        Command::Run { path } => {
            let json_default = path.with_extension("report.json");
            let outcome = std::fs::read_to_string(path)
                .map_err(|e| InputError::plain(format!("cannot read {}: {e}", path.display())))
                .and_then(|text| parse_scenario(&text));
            let finished = match outcome {
                Ok(mut fields) => {
                    apply_guard_flags(&cli, &mut fields);
                    run_fields("run", &fields)
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    Finished { code: exit::INPUT, json: error_json("run", "input-error", &e.to_string()) }
                }
            };
            let target = cli.json.clone().unwrap_or(json_default);
            if let Err(e) = write_json(&target, &finished.json) {
                eprintln!("error: {e}");
                return ExitCode::from(exit::INPUT);
            }
            return ExitCode::from(finished.code);
        }
        other => {
            let mut fields = fields_for(other).expect("subcommand maps to fields");
            apply_guard_flags(&cli, &mut fields);
            run_fields(fields.get("task").map(|t| t.value.as_str()).unwrap_or("unknown"), &fields)
        }
    };
    if let Some(path) = &cli.json {
        if let Err(e) = write_json(path, &finished.json) {
            eprintln!("error: {e}");
            return ExitCode::from(exit::INPUT);
        }
    }
    ExitCode::from(finished.code)
}
