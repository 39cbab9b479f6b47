use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use conic_bundles::bounds::{castelnuovo_bound, gp_bound};
use conic_bundles::cases::{
    enumerate_cone_case, enumerate_cubic_scroll, enumerate_elliptic_cone, enumerate_endgame,
    enumerate_p5_span, enumerate_quartic_scroll, enumerate_veronese, CandidateSolution, CaseId,
    ClassData, ConeBranch, Enumeration, CERTIFIED_DELTA_MAX, CERTIFIED_DELTA_MIN,
    P5_SPAN_DELTA_MAX,
};
use conic_bundles::certify::{
    run_verification, serialize_certificate, Format, VerificationOptions,
};
use conic_bundles::degree_bound::global_bounds;

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "conic-bundles",
    version,
    about = "Verify the degree bound for conic bundles in P^4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full case analysis and print the certificate.
    Verify {
        /// Emit JSON instead of the text report.
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the delta bound used by the enumerations (experiments only).
        #[arg(long, hide = true)]
        delta_max: Option<i64>,
        /// Drop a leaf before summarizing (experiments only).
        #[arg(long = "omit-leaf", hide = true)]
        omit_leaves: Vec<String>,
    },
    /// Print the survivors of one enumeration.
    Enumerate {
        /// One of: cone, cubic-scroll, quartic-scroll, veronese, elliptic-cone,
        /// p5-span, endgame.
        #[arg(value_parser = parse_case)]
        case: CaseId,
        /// Upper end of the delta range (default 31, or 11 for p5-span).
        #[arg(long)]
        delta_max: Option<i64>,
    },
    /// Print a genus or degree bound exactly.
    Bounds {
        #[command(subcommand)]
        which: BoundCommand,
    },
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Castelnuovo's bound for a nondegenerate curve in P^R.
    Castelnuovo {
        /// Curve degree.
        #[arg(long)]
        degree: i64,
        /// Dimension R of the ambient space.
        #[arg(long)]
        ambient: i64,
    },
    /// Gruson-Peskine bound on pi - 1 for a space curve off surfaces of degree < S.
    Gp {
        /// Curve degree.
        #[arg(long)]
        degree: i64,
        /// Surface degree S, one of 4, 5, 6.
        #[arg(long)]
        surface: i64,
    },
    /// The global bounds on d and delta.
    DegreeMax,
}

fn parse_case(s: &str) -> Result<CaseId, String> {
    s.parse().map_err(|e: conic_bundles::Error| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn describe_class(c: &CandidateSolution) -> String {
    match c.class_data {
        Some(ClassData::Scroll(class)) => class.to_string(),
        Some(ClassData::Veronese { a }) => format!("a={a}"),
        Some(ClassData::EllipticCone {
            alpha,
            through_vertex,
        }) => format!(
            "alpha={alpha}{}",
            if through_vertex { " (vertex)" } else { "" }
        ),
        Some(ClassData::Cone { branch }) => match branch {
            ConeBranch::TwiceDelta => "d = 2 delta".to_string(),
            ConeBranch::TwiceDeltaPlusOne => "d = 2 delta + 1".to_string(),
        },
        None => "-".to_string(),
    }
}

fn print_table(title: &str, e: &Enumeration) {
    println!(
        "{title}: {} examined, {} survivor(s)",
        e.examined,
        e.survivors.len()
    );
    if !e.survivors.is_empty() {
        println!("{:>4} {:>6} {:>5} {:>5}  class", "d", "delta", "g", "pi");
        for c in &e.survivors {
            println!(
                "{:>4} {:>6} {:>5} {:>5}  {}{}",
                c.d,
                c.delta,
                c.g,
                c.pi,
                describe_class(c),
                if c.outside_certified_region() {
                    "  [outside certified region]"
                } else {
                    ""
                }
            );
        }
    }
    for (filter, n) in &e.rejected {
        println!("  rejected by {filter}: {n}");
    }
}

fn enumerate(case: CaseId, delta_max: Option<i64>) -> ExitCode {
    let max = delta_max.unwrap_or(match case {
        CaseId::P5Span => P5_SPAN_DELTA_MAX,
        _ => CERTIFIED_DELTA_MAX,
    });
    let result = match case {
        CaseId::Cone => enumerate_cone_case(max).map(|r| {
            print_table("cone, d = 2 delta", &r.survivors_even);
            print_table("cone, d = 2 delta + 1", &r.survivors_odd);
        }),
        CaseId::CubicScroll => enumerate_cubic_scroll(CERTIFIED_DELTA_MIN, max)
            .map(|e| print_table("cubic-scroll", &e)),
        CaseId::QuarticScroll => enumerate_quartic_scroll(CERTIFIED_DELTA_MIN, max)
            .map(|e| print_table("quartic-scroll", &e)),
        CaseId::Veronese => enumerate_veronese(max).map(|e| print_table("veronese", &e)),
        CaseId::EllipticCone => {
            enumerate_elliptic_cone(max).map(|e| print_table("elliptic-cone", &e))
        }
        CaseId::P5Span => enumerate_p5_span(max).map(|e| print_table("p5-span", &e)),
        CaseId::Endgame => {
            if delta_max.is_some() {
                return usage("the endgame enumeration takes no --delta-max");
            }
            enumerate_endgame().map(|e| print_table("endgame", &e))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            json,
            out,
            delta_max,
            omit_leaves,
        } => {
            let opts = VerificationOptions {
                delta_max,
                omit_leaves,
            };
            let cert = match run_verification(&opts) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            };
            let format = if json { Format::Json } else { Format::Text };
            let bytes = serialize_certificate(&cert, format);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &bytes) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => {
                    use std::io::Write;
                    let _ = std::io::stdout().write_all(&bytes);
                }
            }
            if cert.summary.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Enumerate { case, delta_max } => enumerate(case, delta_max),
        Command::Bounds { which } => match which {
            BoundCommand::Castelnuovo { degree, ambient } => {
                match castelnuovo_bound(degree, ambient) {
                    Ok(v) => {
                        println!("{v}");
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage(e),
                }
            }
            BoundCommand::Gp { degree, surface } => match gp_bound(degree, surface) {
                Ok(v) => {
                    println!("{v}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            },
            BoundCommand::DegreeMax => {
                let b = global_bounds();
                println!("d_max {}", b.d_max);
                println!("delta_max {}", b.delta_max);
                ExitCode::SUCCESS
            }
        },
    }
}
