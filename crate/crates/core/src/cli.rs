//! Command-line front end. `run` is what the `chromcurl` binary calls; it
//! returns the process exit code and writes only to the given streams.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chroma::{chi_minus, chi_plus, chromatic_number, ChromaticCurlingResult};
use crate::curling::curling_number;
use crate::families::{generate, Family, FamilySpec};
use crate::graph::Graph;
use crate::oracle::{oracle_chromatic, DEFAULT_VERTEX_BUDGET};
use crate::verify::{
    has_engine_oracle_mismatch, render_claims_csv, render_csv, render_json_lines, render_table, sweep,
    SweepConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "chromcurl", version, about = "Chromatic curling numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a family member (or a seeded random connected graph) as JSON or DOT.
    Gen {
        /// Family name, e.g. `wheel`, `closed-sunflower`, or `random`.
        family: String,
        n: usize,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra-edge probability for `random`.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
    /// Curling number and compound curling number of the degree sequence.
    Curl(GraphInput),
    /// Chromatic number.
    Chi(GraphInput),
    /// Chi-minus colouring and chromatic curling numbers.
    Chromcurl {
        #[command(flatten)]
        input: GraphInput,
        /// Include the witness colouring.
        #[arg(long)]
        witness: bool,
        /// Report the chi-plus relabelling instead.
        #[arg(long)]
        plus: bool,
    },
    /// Brute-force chromatic number and lexicographically maximal class sizes.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Compare published closed forms with the engine and the oracle.
    Verify {
        /// Comma-separated family names; all families when omitted.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        #[arg(long, conflicts_with_all = ["csv", "emit_claims"])]
        json: bool,
        #[arg(long, conflicts_with = "emit_claims")]
        csv: bool,
        /// Print the claims table as CSV and exit without computing anything.
        #[arg(long)]
        emit_claims: bool,
    },
}

/// Where a graph comes from: a JSON file, `-` for standard input, or a
/// family member.
#[derive(Debug, Args)]
struct GraphInput {
    /// Graph JSON file, or `-` for standard input.
    graph: Option<PathBuf>,
    #[arg(long, requires = "n")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
}

enum Failure {
    Usage(String),
    Operational(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Operational(e.to_string())
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok((text, code)) => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Operational(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse().map_err(|e: crate::families::FamilyError| Failure::Usage(e.to_string()))
}

fn family_spec(name: &str, n: usize) -> Result<FamilySpec, Failure> {
    FamilySpec::new(parse_family(name)?, n).map_err(|e| Failure::Usage(e.to_string()))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("outputs serialize");
    s.push('\n');
    s
}

impl GraphInput {
    fn load(&self, stdin: &mut dyn Read) -> Result<Graph, Failure> {
        match (&self.graph, &self.family, self.n) {
            (Some(_), Some(_), _) => Err(Failure::Usage(
                "give either a graph file or --family/--n, not both".into(),
            )),
            (None, None, _) => Err(Failure::Usage(
                "no input: give a graph file, `-`, or --family and --n".into(),
            )),
            (None, Some(name), Some(n)) => Ok(generate(family_spec(name, n)?)?),
            (None, Some(_), None) => Err(Failure::Usage("--family needs --n".into())),
            (Some(path), None, _) => {
                let text = if path.as_os_str() == "-" {
                    let mut buf = String::new();
                    stdin.read_to_string(&mut buf)?;
                    buf
                } else {
                    fs::read_to_string(path).map_err(|e| Failure::Operational(format!("{}: {e}", path.display())))?
                };
                Ok(Graph::from_json(&text)?)
            }
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ChromcurlOutput<'a> {
    chi: usize,
    theta: &'a [usize],
    cn_chi: usize,
    cnc_chi: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a [u32]>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CurlOutput {
    n: usize,
    runs: Vec<[usize; 2]>,
    cn: usize,
    cn_compound: u128,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OracleOutput<'a> {
    chi: usize,
    lex_max_theta: &'a [usize],
    cn_chi: usize,
    cnc_chi: u128,
    count: u64,
}

fn chromcurl_json(r: &ChromaticCurlingResult, witness: bool) -> String {
    json_line(&ChromcurlOutput {
        chi: r.chi,
        theta: r.theta.as_slice(),
        cn_chi: r.cn_chi,
        cnc_chi: r.cnc_chi,
        witness: witness.then(|| r.witness.colours()),
    })
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<(String, i32), Failure> {
    let text = match command {
        Command::Gen {
            family,
            n,
            dot,
            json: _,
            seed,
            density,
        } => {
            let g = if family.eq_ignore_ascii_case("random") {
                if n == 0 {
                    return Err(Failure::Usage("random graphs need n >= 1".into()));
                }
                if !(0.0..=1.0).contains(&density) {
                    return Err(Failure::Usage("--density must lie in [0, 1]".into()));
                }
                Graph::random_connected(n, density, &mut ChaCha8Rng::seed_from_u64(seed))
            } else {
                generate(family_spec(&family, n)?)?
            };
            if dot {
                g.to_dot()
            } else {
                g.to_json() + "\n"
            }
        }
        Command::Curl(input) => {
            let g = input.load(stdin)?;
            let r = curling_number(&g);
            json_line(&CurlOutput {
                n: g.vertex_count(),
                runs: r.runs.runs.iter().map(|run| [run.degree, run.count]).collect(),
                cn: r.cn,
                cn_compound: r.cn_compound,
            })
        }
        Command::Chi(input) => {
            let g = input.load(stdin)?;
            json_line(&serde_json::json!({ "chi": chromatic_number(&g)? }))
        }
        Command::Chromcurl { input, witness, plus } => {
            let g = input.load(stdin)?;
            let mut r = chi_minus(&g)?;
            if plus {
                r = chi_plus(&r);
            }
            chromcurl_json(&r, witness)
        }
        Command::Oracle { input, budget } => {
            let g = input.load(stdin)?;
            let r = oracle_chromatic(&g, budget)?;
            json_line(&OracleOutput {
                chi: r.chi,
                lex_max_theta: r.lex_max_theta.as_slice(),
                cn_chi: r.cn_chi(),
                cnc_chi: r.cnc_chi(),
                count: r.count,
            })
        }
        Command::Verify {
            families,
            n_min,
            n_max,
            budget,
            json,
            csv,
            emit_claims,
        } => {
            let families = match families {
                Some(names) => names.iter().map(|s| parse_family(s.trim())).collect::<Result<_, _>>()?,
                None => Family::ALL.to_vec(),
            };
            if let (Some(lo), Some(hi)) = (n_min, n_max) {
                if lo > hi {
                    return Err(Failure::Usage(format!("--n-min {lo} exceeds --n-max {hi}")));
                }
            }
            let config = SweepConfig {
                families,
                n_min,
                n_max,
                vertex_budget: budget,
            };
            if emit_claims {
                return Ok((render_claims_csv(&config), EXIT_OK));
            }
            let records = sweep(&config)?;
            let report = if json {
                render_json_lines(&records)
            } else if csv {
                render_csv(&records)
            } else {
                render_table(&records)
            };
            let code = if has_engine_oracle_mismatch(&records) {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            };
            return Ok((report, code));
        }
    };
    Ok((text, EXIT_OK))
}
