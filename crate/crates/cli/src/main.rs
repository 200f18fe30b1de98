//! `aleshin`: command-line access to automata files, derivations, tree
//! actions, orbits and the freeness verifier.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aleshin_core::aleshin::words::{chi, GroupWord};
use aleshin_core::lemmas::LemmaRegistry;
use aleshin_core::moore;
use aleshin_core::registry::{BuiltinRegistry, DerivationRegistry};
use aleshin_core::verifier::{self, format_letters, TrivialityCertificate};
use aleshin_core::{Automaton, OrbitMode};

#[derive(Parser)]
#[command(
    name = "aleshin",
    version,
    about = "Mealy automata and the Aleshin freeness verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an automaton and print its canonical form.
    Parse {
        /// File path or builtin:<name>.
        automaton: String,
    },
    /// Build the inverse, reverse or dual automaton.
    Derive {
        #[arg(long)]
        op: String,
        automaton: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Disjoint union of two automata over the same alphabet.
    Union {
        first: String,
        second: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one initial automaton on a word.
    Act {
        automaton: String,
        #[arg(long)]
        state: String,
        #[arg(long)]
        input: String,
    },
    /// Apply a word of states, leftmost state first.
    ActWord {
        automaton: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        input: String,
    },
    /// Sign character of a word over a, b, c and their inverses.
    Chi {
        #[arg(long)]
        word: String,
    },
    /// Decide whether a word of states acts as the identity.
    IsIdentity {
        #[arg(long)]
        word: String,
        /// Defaults to the Aleshin automaton with its inverse.
        #[arg(long)]
        automaton: Option<String>,
    },
    /// First tree level on which a word of states acts nontrivially.
    MinLevel {
        #[arg(long)]
        word: String,
        #[arg(long)]
        automaton: Option<String>,
    },
    /// Orbit of a word under a set of states.
    Orbit {
        #[arg(long)]
        automaton: String,
        /// Comma-separated state names.
        #[arg(long)]
        states: String,
        #[arg(long)]
        word: String,
        /// Include the inverse transformations.
        #[arg(long)]
        group: bool,
    },
    /// Check every freely reduced word up to a length.
    VerifyFreeness {
        #[arg(long)]
        max_len: usize,
        /// Worker threads; 0 uses the available parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the per-word TSV report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the named property checks.
    VerifyLemmas {
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        /// Run only these checks (repeatable).
        #[arg(long)]
        only: Vec<String>,
        /// List check names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// A failure that ends the run with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<ExitCode, Usage>;

fn load(source: &str) -> Result<Automaton, Usage> {
    let builtins = BuiltinRegistry::builtin();
    if let Some(name) = source.strip_prefix(BuiltinRegistry::PREFIX) {
        return builtins.resolve(source).ok_or_else(|| {
            Usage(format!(
                "unknown builtin `{name}` (known: {})",
                builtins.names().join(", ")
            ))
        });
    }
    let text = fs::read_to_string(source).map_err(|e| Usage(format!("{source}: {e}")))?;
    moore::parse(&text).map_err(|e| Usage(format!("{source}: {e}")))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Usage> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Splits `text` into symbols named in `names`. Commas and whitespace
/// separate tokens; a single unseparated token is read one character at a
/// time when every name is one character long.
fn parse_symbols(text: &str, names: &[String], kind: &str) -> Result<Vec<u8>, Usage> {
    let text = text.trim();
    if text.is_empty() || text == "ε" {
        return Ok(Vec::new());
    }
    let tokens: Vec<String> =
        if !text.contains([',', ' ', '\t']) && names.iter().all(|n| n.chars().count() == 1) {
            text.chars().map(String::from).collect()
        } else {
            text.split([',', ' ', '\t'])
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect()
        };
    tokens
        .iter()
        .map(|t| {
            names
                .iter()
                .position(|n| n == t)
                .map(|i| i as u8)
                .ok_or_else(|| Usage(format!("unknown {kind} `{t}`")))
        })
        .collect()
}

fn certificate(
    word: &str,
    automaton: Option<&str>,
) -> Result<(Automaton, TrivialityCertificate), Usage> {
    match automaton {
        None => {
            let xi: GroupWord = word.parse().map_err(|e| Usage(format!("--word: {e}")))?;
            Ok((
                aleshin_core::aleshin::family().b.clone(),
                verifier::is_identity(&xi),
            ))
        }
        Some(source) => {
            let a = load(source)?;
            let xi = parse_symbols(word, a.state_names(), "state")?;
            let cert = verifier::is_identity_in(&a, &xi)?;
            Ok((a, cert))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Parse { automaton } => {
            print!("{}", moore::serialize(&load(&automaton)?));
        }
        Command::Derive {
            op,
            automaton,
            output,
        } => {
            let registry = DerivationRegistry::builtin();
            let derivation = registry.get(&op).ok_or_else(|| {
                Usage(format!(
                    "--op: unknown `{op}` (known: {})",
                    registry.names().join(", ")
                ))
            })?;
            let derived = derivation.apply(&load(&automaton)?)?;
            emit(&moore::serialize(&derived), output.as_deref())?;
        }
        Command::Union {
            first,
            second,
            output,
        } => {
            let joined = load(&first)?.disjoint_union(&load(&second)?)?;
            emit(&moore::serialize(&joined), output.as_deref())?;
        }
        Command::Act {
            automaton,
            state,
            input,
        } => {
            let a = load(&automaton)?;
            let q = a
                .state_index(&state)
                .ok_or_else(|| Usage(format!("--state: unknown state `{state}`")))?;
            let w = parse_symbols(&input, a.alphabet_names(), "letter")?;
            println!(
                "{}",
                format_letters(a.alphabet_names(), &a.transduce(q, &w)?)
            );
        }
        Command::ActWord {
            automaton,
            word,
            input,
        } => {
            let a = load(&automaton)?;
            let xi = parse_symbols(&word, a.state_names(), "state")?;
            let w = parse_symbols(&input, a.alphabet_names(), "letter")?;
            println!(
                "{}",
                format_letters(a.alphabet_names(), &a.act_word(&xi, &w)?)
            );
        }
        Command::Chi { word } => {
            let xi: GroupWord = word.parse().map_err(|e| Usage(format!("--word: {e}")))?;
            println!("{:+}", chi(&xi));
        }
        Command::IsIdentity { word, automaton } => {
            let (a, cert) = certificate(&word, automaton.as_deref())?;
            println!("{}", cert.render(&a));
            println!("explored={}", cert.orbit_explored);
        }
        Command::MinLevel { word, automaton } => {
            let (_, cert) = certificate(&word, automaton.as_deref())?;
            match cert.min_level() {
                Some(level) => println!("{level}"),
                None => println!("identity"),
            }
        }
        Command::Orbit {
            automaton,
            states,
            word,
            group,
        } => {
            let a = load(&automaton)?;
            let gens = parse_symbols(&states, a.state_names(), "state")?;
            let w = parse_symbols(&word, a.alphabet_names(), "letter")?;
            let mode = if group {
                OrbitMode::Group
            } else {
                OrbitMode::Semigroup
            };
            for member in a.tree_orbit(&gens, &w, mode)? {
                println!("{}", format_letters(a.alphabet_names(), &member));
            }
        }
        Command::VerifyFreeness {
            max_len,
            jobs,
            report,
        } => {
            let sweep = verifier::verify_freeness(max_len, jobs);
            if let Some(path) = report {
                fs::write(&path, sweep.to_tsv())
                    .map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            }
            println!("{}", sweep.summary_line());
            if !sweep.all_nontrivial {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyLemmas {
            max_len,
            only,
            list,
        } => {
            let registry = LemmaRegistry::builtin();
            if list {
                for name in registry.names() {
                    println!("{name}\t{}", registry.get(name).expect("listed").summary());
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = if only.is_empty() {
                registry.run_all(max_len)
            } else {
                only.iter()
                    .map(|name| {
                        registry
                            .run_one(name, max_len)
                            .ok_or_else(|| Usage(format!("--only: unknown check `{name}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            let failed = reports.iter().filter(|r| !r.outcome.passed()).count();
            for r in &reports {
                println!("{r}");
            }
            if failed == 0 {
                println!("{} checks, all passed", reports.len());
            } else {
                println!("{} checks, {failed} failed", reports.len());
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
