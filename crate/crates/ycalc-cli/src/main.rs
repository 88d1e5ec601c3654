// ycalc - Rust library for the Y-calculus and the ZX-calculus:
//         open-graph diagrams, tensor semantics, rewrite rules,
//         translations and nonstandard interpretations
// Copyright (C) 2026 - the ycalc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end: evaluate diagrams, run the verification
//! suites, translate between the calculi, and simplify.
//!
//! Exit codes: 0 pass, 1 suite or check failure, 2 usage/parse error,
//! 3 resource guard.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ycalc::dsl;
use ycalc::error::SemanticsError;
use ycalc::rules::SimplifyStrategy;
use ycalc::semantics::{interpret, interpret_exact};
use ycalc::translate::{y_to_zx, y_to_zxr, zx_to_y, zxr_to_y};
use ycalc::verify;

#[derive(Parser)]
#[command(
    name = "ycalc",
    version,
    about = "Y-calculus and ZX-calculus diagram tool"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Float,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Rules,
    Lemmas,
    Translations,
    Minimality,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    /// Y(pi/2) into the real stabiliser ZX-calculus.
    Zxr,
    /// ZX_r back into Y(pi/2).
    Y,
    /// Y into the full ZX-calculus.
    Zx,
    /// ZX into Y with a control wire (the rebit encoding).
    Rebit,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    FuseFirst,
    SizeGreedy,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram file to its tensor.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "float")]
        backend: BackendArg,
        /// Write the structured tensor dump here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites deterministically under a seed.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here as well.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Translate a diagram between the calculi.
    Translate {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: TargetArg,
        /// Also check semantic preservation (or the block law).
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simplify a diagram with the terminating rule subset.
    Simplify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "fuse-first")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_doc(path: &PathBuf) -> Result<dsl::DiagramDoc, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    dsl::parse(&text).map_err(|e| e.to_string())
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { file, backend, out } => {
            let doc = read_doc(&file)?;
            let dump = match backend {
                BackendArg::Float => match interpret(&doc.diagram) {
                    Ok(t) => t.dump_structured_rounded("float"),
                    Err(SemanticsError::Resource(m)) => {
                        eprintln!("resource guard: {m}");
                        return Ok(ExitCode::from(3));
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Ok(ExitCode::from(1));
                    }
                },
                BackendArg::Exact => match interpret_exact(&doc.diagram) {
                    Ok(t) => t.dump_structured("exact"),
                    Err(SemanticsError::Resource(m)) => {
                        eprintln!("resource guard: {m}");
                        return Ok(ExitCode::from(3));
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Ok(ExitCode::from(1));
                    }
                },
            };
            write_or_print(&out, &dump)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            report,
        } => {
            let reports = match suite {
                SuiteArg::Rules => vec![verify::run_rules_suite(samples, seed)],
                SuiteArg::Lemmas => vec![verify::run_lemmas_suite(samples, seed)],
                SuiteArg::Translations => vec![verify::run_translations_suite(samples, seed)],
                SuiteArg::Minimality => {
                    vec![verify::run_minimality_suite(samples.min(12), seed)]
                }
                SuiteArg::All => verify::run_all(samples, seed),
            };
            let text: String = reports.iter().map(|r| r.render()).collect();
            print!("{text}");
            if let Some(p) = report {
                std::fs::write(&p, &text).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Translate {
            file,
            to,
            check,
            out,
        } => {
            let doc = read_doc(&file)?;
            let d = &doc.diagram;
            let (result, check_dev) = match to {
                TargetArg::Zxr => {
                    let img = y_to_zxr(d).map_err(|e| e.to_string())?;
                    let dev = if check {
                        preservation_dev(d, &img)?
                    } else {
                        0.0
                    };
                    (img, dev)
                }
                TargetArg::Y => {
                    let img = zxr_to_y(d).map_err(|e| e.to_string())?;
                    let dev = if check {
                        preservation_dev(d, &img)?
                    } else {
                        0.0
                    };
                    (img, dev)
                }
                TargetArg::Zx => {
                    let img = y_to_zx(d).map_err(|e| e.to_string())?;
                    let dev = if check {
                        preservation_dev(d, &img)?
                    } else {
                        0.0
                    };
                    (img, dev)
                }
                TargetArg::Rebit => {
                    let cf = zx_to_y(d).map_err(|e| e.to_string())?;
                    let dev = if check {
                        let source = interpret(d).map_err(|e| e.to_string())?;
                        cf.block_law_against(&source).map_err(|e| e.to_string())?
                    } else {
                        0.0
                    };
                    (cf.diagram, dev)
                }
            };
            if check {
                println!("# check deviation: {check_dev:.3e}");
                if check_dev > 1e-9 {
                    eprintln!("semantic check failed: deviation {check_dev:.3e}");
                    return Ok(ExitCode::from(1));
                }
            }
            write_or_print(&out, &dsl::print_diagram(&result))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Simplify {
            file,
            strategy,
            max_steps,
            out,
        } => {
            let doc = read_doc(&file)?;
            let strategy = match strategy {
                StrategyArg::FuseFirst => SimplifyStrategy::FuseFirst,
                StrategyArg::SizeGreedy => SimplifyStrategy::SizeGreedy,
            };
            let (result, trace) = ycalc::rules::simplify(&doc.diagram, strategy, max_steps);
            for step in &trace {
                println!("# {} at {:?}", step.rule, step.nodes);
            }
            write_or_print(&out, &dsl::print_diagram(&result))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn preservation_dev(src: &ycalc::Diagram, img: &ycalc::Diagram) -> Result<f64, String> {
    let a = interpret(src).map_err(|e| e.to_string())?;
    let b = interpret(img).map_err(|e| e.to_string())?;
    Ok(a.max_diff(&b))
}
