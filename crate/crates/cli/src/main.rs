//! Command-line front end: parse code/channel/spec files, run validation,
//! trellis construction, decoding, marginals, enumerators, and seeded
//! Monte Carlo decoding simulations.
//!
//! Exit codes: 0 on success, 1 for file/parse problems (diagnostic names
//! the file and line), 2 for domain errors such as non-commuting
//! generators. Results go to stdout, diagnostics and timings to stderr.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stabtrellis::{
    algorithms, build_wolf_trellis, io as formats, memory, min_sum, oracle, sum_product,
    trellis_oriented_form, weight_enumerator, PauliChannel, StabilizerCode, Syndrome,
};

#[derive(Parser)]
#[command(name = "stabtrellis", version, about = "Trellis tools for stabilizer codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a code file holds commuting, independent generators.
    Validate {
        #[arg(long)]
        code: PathBuf,
    },
    /// Rewrite the stabilizer set into trellis-oriented form.
    Tof {
        #[arg(long)]
        code: PathBuf,
    },
    /// Build the syndrome trellis and print it as DOT or a profile.
    Trellis {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        syndrome: String,
        #[arg(long, value_enum, default_value_t = Format::Profile)]
        format: Format,
    },
    /// Most likely error for a syndrome under a channel.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        channel: ChannelOpt,
        #[arg(long)]
        syndrome: String,
    },
    /// Per-qubit conditional error marginals for a syndrome.
    Marginals {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        channel: ChannelOpt,
        #[arg(long)]
        syndrome: String,
    },
    /// Weight enumerator polynomial of the code's normalizer group.
    Enumerator {
        #[arg(long)]
        code: PathBuf,
    },
    /// Memory of the stabilizer set.
    Memory {
        #[arg(long)]
        code: PathBuf,
    },
    /// Unroll a convolutional specification to an n-qubit code file.
    Unroll {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Seeded Monte Carlo decoding simulation.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        channel: ChannelOpt,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force fixtures (reference values for tests).
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    Mle {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        channel: ChannelOpt,
        #[arg(long)]
        syndrome: String,
    },
    Marginals {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        channel: ChannelOpt,
        #[arg(long)]
        syndrome: String,
    },
    Enumerator {
        #[arg(long)]
        code: PathBuf,
    },
    Coset {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        syndrome: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChannelOpt {
    /// Channel file: `depolarizing p` or n lines of four probabilities.
    #[arg(long)]
    channel: Option<PathBuf>,
    /// Depolarizing channel with the given error probability.
    #[arg(long)]
    depolarizing: Option<f64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Profile,
    Text,
}

enum CliError {
    /// File unreadable or malformed; exit code 1.
    File(String),
    /// Well-formed input that violates a domain invariant; exit code 2.
    Domain(stabtrellis::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::File(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<stabtrellis::Error> for CliError {
    fn from(e: stabtrellis::Error) -> Self {
        CliError::Domain(e)
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<StabilizerCode, CliError> {
    let text = read_file(path)?;
    formats::parse_code(&text)
        .map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn load_channel(opt: &ChannelOpt, n: usize) -> Result<PauliChannel, CliError> {
    match (&opt.channel, opt.depolarizing) {
        (Some(path), None) => {
            let text = read_file(path)?;
            formats::parse_channel(&text, n)
                .map_err(|e| CliError::File(format!("{}: {e}", path.display())))
        }
        (None, Some(p)) => Ok(PauliChannel::depolarizing(n, p)?),
        _ => unreachable!("clap group enforces exactly one"),
    }
}

fn parse_syndrome(s: &str, expected: usize) -> Result<Syndrome, CliError> {
    let syn: Syndrome = s
        .parse()
        .map_err(|e| CliError::File(format!("syndrome `{s}`: {e}")))?;
    if syn.len() != expected {
        return Err(CliError::File(format!(
            "syndrome `{s}` has {} bits, expected {expected}",
            syn.len()
        )));
    }
    Ok(syn)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::File(_) => ExitCode::from(1),
                CliError::Domain(_) => ExitCode::from(2),
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Validate { code } => {
            let c = load_code(&code)?;
            c.validate()?;
            println!("ok: ({},{}) code, {} generators", c.n(), c.k(), c.num_generators());
        }
        Cmd::Tof { code } => {
            let c = load_code(&code)?;
            c.validate()?;
            print!("{}", formats::format_code(&trellis_oriented_form(&c)?));
        }
        Cmd::Trellis { code, syndrome, format } => {
            let c = load_code(&code)?;
            c.validate()?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            let t = build_wolf_trellis(&c, &s)?;
            match format {
                Format::Dot => print!("{}", t.export_dot()),
                Format::Profile | Format::Text => {
                    let sizes: Vec<String> = t
                        .state_profile()?
                        .sizes()
                        .iter()
                        .map(usize::to_string)
                        .collect();
                    println!("{}", sizes.join(","));
                }
            }
        }
        Cmd::Decode { code, channel, syndrome } => {
            let c = load_code(&code)?;
            c.validate()?;
            let ch = load_channel(&channel, c.n())?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            let t = build_wolf_trellis(&c, &s)?;
            let r = min_sum(&t, &ch)?;
            debug_assert_eq!(c.syndrome(&r.error)?, s);
            println!("{} {:.12}", r.error, r.weight);
        }
        Cmd::Marginals { code, channel, syndrome } => {
            let c = load_code(&code)?;
            c.validate()?;
            let ch = load_channel(&channel, c.n())?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            let t = build_wolf_trellis(&c, &s)?;
            print!("{}", sum_product(&t, &ch)?);
        }
        Cmd::Enumerator { code } => {
            let c = load_code(&code)?;
            c.validate()?;
            let t = build_wolf_trellis(&c, &Syndrome::zero(c.num_generators()))?;
            let a = weight_enumerator(&t)?;
            println!("{a}");
            print!("{}", a.table());
        }
        Cmd::Memory { code } => {
            let c = load_code(&code)?;
            c.validate()?;
            println!("{}", memory(&c));
        }
        Cmd::Unroll { spec, n } => {
            let text = read_file(&spec)?;
            let conv = formats::parse_conv_spec(&text)
                .map_err(|e| CliError::File(format!("{}: {e}", spec.display())))?;
            let code = conv.unroll(n)?;
            print!("{}", formats::format_code(&code));
        }
        Cmd::Simulate { code, channel, trials, seed } => {
            let c = load_code(&code)?;
            c.validate()?;
            let ch = load_channel(&channel, c.n())?;
            let report = simulate(&c, &ch, trials, seed)?;
            print!("{report}");
        }
        Cmd::Oracle { cmd } => run_oracle(cmd)?,
    }
    Ok(())
}

fn run_oracle(cmd: OracleCmd) -> Result<(), CliError> {
    match cmd {
        OracleCmd::Mle { code, channel, syndrome } => {
            let c = load_code(&code)?;
            c.validate()?;
            let ch = load_channel(&channel, c.n())?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            let r = oracle::brute_mle(&c, &s, &ch)?;
            println!("{} {:.12}", r.error, r.weight);
        }
        OracleCmd::Marginals { code, channel, syndrome } => {
            let c = load_code(&code)?;
            c.validate()?;
            let ch = load_channel(&channel, c.n())?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            print!("{}", oracle::brute_marginals(&c, &s, &ch)?);
        }
        OracleCmd::Enumerator { code } => {
            let c = load_code(&code)?;
            c.validate()?;
            let a = oracle::brute_enumerator(&c)?;
            println!("{a}");
            print!("{}", a.table());
        }
        OracleCmd::Coset { code, syndrome } => {
            let c = load_code(&code)?;
            c.validate()?;
            let s = parse_syndrome(&syndrome, c.num_generators())?;
            for e in oracle::enumerate_coset(&c, &s)?.elements() {
                println!("{e}");
            }
        }
    }
    Ok(())
}

/// Outcome of a Monte Carlo decoding run. Decoding counts as a success
/// when the residual (estimate + actual error) lies in the stabilizer
/// group itself.
struct SimReport {
    trials: u64,
    decode_failures: u64,
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.trials as f64;
        let rate = if self.trials == 0 { 0.0 } else { self.decode_failures as f64 / n };
        // 95% normal-approximation binomial interval, clamped to [0, 1]
        let half = if self.trials == 0 { 0.0 } else { 1.96 * (rate * (1.0 - rate) / n).sqrt() };
        writeln!(f, "trials {}", self.trials)?;
        writeln!(f, "decode_failures {}", self.decode_failures)?;
        writeln!(
            f,
            "failure_rate {:.6} ci95 [{:.6}, {:.6}]",
            rate,
            (rate - half).max(0.0),
            (rate + half).min(1.0)
        )
    }
}

/// splitmix64, used to derive independent per-trial sampling seeds so the
/// report is a function of (seed, trials) alone, whatever the execution
/// order.
fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed.wrapping_add(trial.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn simulate(
    code: &StabilizerCode,
    ch: &PauliChannel,
    trials: u64,
    seed: u64,
) -> Result<SimReport, CliError> {
    let start = Instant::now();
    let mut cache: std::collections::HashMap<u64, stabtrellis::Trellis> =
        std::collections::HashMap::new();
    let mut decode_failures = 0;
    for trial in 0..trials {
        let e = ch.sample_error(trial_seed(seed, trial));
        let s = code.syndrome(&e)?;
        let t = match cache.entry(s.to_word()) {
            std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(build_wolf_trellis(code, &s)?)
            }
        };
        let estimate = algorithms::min_sum(t, ch)?;
        debug_assert_eq!(code.syndrome(&estimate.error)?, s);
        let residual = estimate.error.add(&e)?;
        if !code.contains_stabilizer(&residual)? {
            decode_failures += 1;
        }
    }
    eprintln!("wall_time_s {:.3}", start.elapsed().as_secs_f64());
    Ok(SimReport { trials, decode_failures })
}
