//! Argument parsing and dispatch for the `ambc-cells` binary.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use ambc_core::ambc::{canonical_channels, channel_numbering, find_channels, greene_kleitman, rivers, Stream};
use ambc_core::group::{
    compose, inverse, left_star, omega_left, omega_left_inverse, omega_right, omega_right_inverse, right_star, rotate_r,
};
use ambc_core::rotations::{diamond_complete, ipr, is_proper_ipr, is_proper_pr, pr, DiamondMove};
use ambc_core::sign::{blasiak_convention, sign_insert, sign_trace};
use ambc_core::tableaux::{r_matrix, rsk, rsk_inverse, theta, upsilon_classes};
use ambc_core::{phi, psi, AmbcTriple, Composition, Error, Partition, Tabloid, Window};
use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use crate::enumerate::EnumerationSpec;
use crate::suites::run_suite;
use crate::HarnessError;

#[derive(Debug, Parser)]
#[command(
    name = "ambc-cells",
    version,
    about = "Cells of affine symmetric groups: AMBC, sign insertion, partial rotations"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The triple (P, Q, ρ) of a window.
    Phi { window: Window },
    /// The window of a triple given as JSON {"p": .., "q": .., "rho": ..}; `-` reads stdin.
    Psi { triple: PathBuf },
    /// The Greene-Kleitman partition of the Shi poset.
    Gk { window: Window },
    /// All channels, plus the canonical channel sequence.
    Channels { window: Window },
    /// Channels grouped into rivers.
    Rivers { window: Window },
    /// The numbering of a channel, given by index into `channels` output or as a stream.
    Numbering {
        window: Window,
        #[arg(long)]
        channel: String,
    },
    /// Right or left star operation at index i.
    #[command(group(ArgGroup::new("side").required(true).args(["right", "left"])))]
    Star {
        window: Window,
        #[arg(long, value_name = "I")]
        right: Option<usize>,
        #[arg(long, value_name = "I")]
        left: Option<usize>,
    },
    /// Multiplication by the shift element.
    #[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
    Omega {
        window: Window,
        #[arg(long)]
        left: bool,
        #[arg(long)]
        right: bool,
        #[arg(long)]
        inverse: bool,
    },
    /// Rotation of the ball diagram by 180 degrees.
    #[command(name = "rotate-180")]
    Rotate180 { window: Window },
    /// Group inverse.
    Inverse { window: Window },
    /// The product u·v.
    Compose { u: Window, v: Window },
    /// Partial rotation of the window along a stream.
    Rotate {
        window: Window,
        #[arg(long)]
        stream: Window,
        #[arg(long)]
        inverse: bool,
        /// Fail unless the rotation is proper.
        #[arg(long)]
        check_proper: bool,
    },
    /// Completes the square of a star (or shift) move and a proper rotation.
    Diamond {
        window: Window,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        inverse: bool,
        /// Use right multiplication by the shift instead of the star move.
        #[arg(long)]
        omega: bool,
    },
    /// Sign insertion.
    Sign {
        window: Window,
        #[arg(long)]
        trace: bool,
        /// Translate the window to the other common convention first.
        #[arg(long)]
        blasiak_convention: bool,
    },
    /// RSK of a tabloid through its two-row array.
    Rsk { tabloid: Tabloid },
    /// Inverse RSK; the tabloid gets `--rows` rows (default: largest entry of Q).
    RskInverse {
        p: Tabloid,
        q: Tabloid,
        #[arg(long)]
        rows: Option<usize>,
    },
    /// The combinatorial R-matrix swapping rows i and i+1.
    Rmatrix {
        tabloid: Tabloid,
        #[arg(long)]
        i: usize,
    },
    /// Standardization of a semistandard tableau to a dominated content.
    Theta {
        ssyt: Tabloid,
        #[arg(long, value_parser = parse_composition)]
        target: Composition,
    },
    /// The classes of tabloids of size n sharing a sign recording word.
    Upsilon {
        #[arg(long)]
        n: usize,
    },
    /// Runs a verification suite over a bounded enumeration.
    Verify {
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep each enumerated triple with this probability.
        #[arg(long)]
        sample: Option<f64>,
        #[arg(long)]
        force: bool,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Composition::new)
}

/// The result of one command: text and JSON renderings, and whether a
/// verification passed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub verified: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Outcome { text: text.into(), json, verified: true }
    }

    fn window(w: &Window) -> Self {
        Outcome::new(w.to_string(), json!(w))
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize")
        } else {
            self.text.clone()
        }
    }
}

fn streams_text(streams: &[Stream]) -> String {
    streams.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn select_channel(w: &Window, channel: &str) -> Result<Window, HarnessError> {
    if channel.trim_start().starts_with('[') {
        return Ok(channel.parse()?);
    }
    let k: usize = channel.parse().map_err(|_| HarnessError::Usage(format!("bad channel {channel:?}")))?;
    let all = find_channels(w);
    all.get(k.wrapping_sub(1))
        .map(|c| c.window().clone())
        .ok_or_else(|| HarnessError::Usage(format!("channel index {k} out of 1..={}", all.len())))
}

fn read_triple(path: &PathBuf) -> Result<AmbcTriple, HarnessError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    let t: AmbcTriple = serde_json::from_str(&text)?;
    t.validate()?;
    Ok(t)
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, HarnessError> {
    Ok(match &cli.command {
        Command::Phi { window } => {
            let t = phi(window)?;
            Outcome::new(t.to_string(), json!(t))
        }
        Command::Psi { triple } => Outcome::window(&psi(&read_triple(triple)?)?),
        Command::Gk { window } => {
            let lambda = greene_kleitman(window);
            Outcome::new(lambda.to_string(), json!(lambda))
        }
        Command::Channels { window } => {
            let all = find_channels(window);
            let seq = canonical_channels(window);
            let text = format!(
                "{}\ncanonical: {}\nriver breaks: {:?}",
                streams_text(&all),
                seq.channels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                seq.river_breaks
            );
            Outcome::new(text, json!({ "channels": all, "canonical": seq.channels, "river_breaks": seq.river_breaks }))
        }
        Command::Rivers { window } => {
            let rs = rivers(window);
            let text = rs
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(text, json!(rs))
        }
        Command::Numbering { window, channel } => {
            let c = select_channel(window, channel)?;
            let d = channel_numbering(window, &c)?;
            let labels: Vec<Option<i64>> = d.labels().to_vec();
            let text =
                labels.iter().map(|l| l.map_or("_".to_string(), |v| v.to_string())).collect::<Vec<_>>().join(" ");
            Outcome::new(text, json!({ "labels": labels, "increment": d.increment() }))
        }
        Command::Star { window, right, left } => match (right, left) {
            (Some(i), _) => Outcome::window(&right_star(window, *i)?),
            (None, Some(i)) => Outcome::window(&left_star(window, *i)?),
            (None, None) => return Err(HarnessError::Usage("pass --right or --left".into())),
        },
        Command::Omega { window, left, inverse, .. } => Outcome::window(&match (left, inverse) {
            (true, false) => omega_left(window)?,
            (true, true) => omega_left_inverse(window)?,
            (false, false) => omega_right(window)?,
            (false, true) => omega_right_inverse(window)?,
        }),
        Command::Rotate180 { window } => Outcome::window(&rotate_r(window)),
        Command::Inverse { window } => Outcome::window(&inverse(window)?),
        Command::Compose { u, v } => Outcome::window(&compose(u, v)?),
        Command::Rotate { window, stream, inverse, check_proper } => {
            let proper = if *inverse { is_proper_ipr(window, stream) } else { is_proper_pr(window, stream) };
            if *check_proper && !proper {
                return Err(Error::NotProper.into());
            }
            let out = if *inverse { ipr(window, stream)? } else { pr(window, stream)? };
            Outcome::new(format!("{out}\nproper: {proper}"), json!({ "window": out, "proper": proper }))
        }
        Command::Diamond { window, p, q, inverse, omega } => {
            let mv = if *omega { DiamondMove::Omega } else { DiamondMove::Star };
            let d = diamond_complete(window, *p, *q, *inverse, mv)?;
            let text =
                format!("w*: {}\nw~: {}\nw~*: {}\nclosing channel: {}", d.w_star, d.w_tilde, d.w_tilde_star, d.s_star);
            Outcome::new(text, json!(d))
        }
        Command::Sign { window, trace, blasiak_convention: convert } => {
            let w = if *convert { blasiak_convention(window)? } else { window.clone() };
            if *trace {
                let states = sign_trace(&w)?;
                let text = states.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
                Outcome::new(text, json!(states))
            } else {
                let (p, q) = sign_insert(&w)?;
                Outcome::new(format!("P: {p:?}\nQ: {q:?}"), json!({ "p": p, "q": q }))
            }
        }
        Command::Rsk { tabloid } => {
            let (p, q) = rsk(tabloid);
            Outcome::new(format!("P: {p}\nQ: {q}"), json!({ "p": p, "q": q }))
        }
        Command::RskInverse { p, q, rows } => {
            let rows = rows.unwrap_or_else(|| q.rows().iter().flatten().copied().max().unwrap_or(0));
            let t = rsk_inverse(p, q, rows)?;
            Outcome::new(t.to_string(), json!(t))
        }
        Command::Rmatrix { tabloid, i } => {
            let t = r_matrix(tabloid, *i)?;
            Outcome::new(t.to_string(), json!(t))
        }
        Command::Theta { ssyt, target } => {
            let t = theta(ssyt, target)?;
            Outcome::new(t.to_string(), json!(t))
        }
        Command::Upsilon { n } => {
            let classes = upsilon_classes(*n)?;
            let mut text = String::new();
            for (word, class) in &classes {
                let members: Vec<String> = class.iter().map(ToString::to_string).collect();
                let word: Vec<String> = word.iter().map(ToString::to_string).collect();
                writeln!(text, "{} | {}", word.join(" "), members.join(" ; ")).expect("string write");
            }
            let rows: Vec<Value> = classes.iter().map(|(k, v)| json!({ "sign_q": k, "class": v })).collect();
            Outcome::new(text.trim_end(), json!(rows))
        }
        Command::Verify { suite, n, bound, lambda, jobs, seed, sample, force } => {
            let spec = EnumerationSpec {
                n: *n,
                lambda_filter: lambda.clone(),
                rho_bound: *bound,
                seed: *seed,
                jobs: *jobs,
                force: *force,
                sample: *sample,
            };
            let report = run_suite(suite, &spec)?;
            Outcome { text: report.to_string().trim_end().to_string(), json: json!(report), verified: report.passed() }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("ambc-cells").chain(args.iter().copied())).unwrap();
        execute(&cli).unwrap()
    }

    #[test]
    fn parses_and_runs() {
        assert_eq!(run(&["phi", "[2,1]"]).json["rho"], json!([0, 0]));
        assert_eq!(run(&["star", "[6,1,18,3,19,24,12,15,17,10]", "--right", "6"]).text, "[6,1,18,3,19,12,24,15,17,10]");
        assert_eq!(run(&["theta", "((1,3,3),(2))", "--target", "2,0,1,1"]).text, "((1,1,4),(3))");
        assert!(run(&["verify", "golden", "--n", "1", "--bound", "0"]).verified);
        assert!(Cli::try_parse_from(["ambc-cells", "star", "[1,2,3]"]).is_err());
    }
}
