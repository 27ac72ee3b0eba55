use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tipcount::cli::{
    cmd_bounds, cmd_count, cmd_enumerate, cmd_paper, exit_code, BoundsInput, BranchData,
    CommandOutput, ENUMERATION_LIMIT_ENV, EXIT_FAILURE, EXIT_INVALID,
};
use tipcount::counting::CountKind;
use tipcount::treegen::DEFAULT_ENUMERATION_LIMIT;

#[derive(Parser)]
#[command(
    name = "tipcount",
    version,
    about = "Series-reduced trees by tips, and cusp bounds for plane curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    /// One canonical code per line.
    Lines,
    /// A single JSON document.
    Doc,
}

#[derive(Subcommand)]
enum Command {
    /// Count trees of one kind with n tips.
    Count {
        /// rooted, vertex-pointed, edge-pair or unrooted-exact
        kind: CountKind,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the T/P/Q tables and the total for trees with at most max-tips tips.
    Paper {
        #[arg(long, default_value_t = 17)]
        max_tips: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List canonical codes of all trees with n tips.
    Enumerate {
        n: usize,
        /// Enumerate rooted trees with n leaves instead.
        #[arg(long)]
        rooted: bool,
        #[arg(long, value_enum, default_value_t = EnumFormat::Lines)]
        format: EnumFormat,
        /// Largest n accepted.
        #[arg(long, env = ENUMERATION_LIMIT_ENV, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Upper bounds on cusps and singular points from curve topology.
    Bounds {
        /// JSON document with keys b1, b2, g, branches, b0_aff, b1_aff, p ("-" for stdin).
        #[arg(long, conflicts_with_all = ["b1", "b2", "g", "b0_aff", "b1_aff", "p", "branches"])]
        input: Option<String>,
        #[arg(long)]
        b1: Option<u64>,
        #[arg(long)]
        b2: Option<u64>,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        b0_aff: Option<u64>,
        #[arg(long)]
        b1_aff: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        /// Component of each local branch, e.g. "0,1;0" (points separated by ';').
        #[arg(long, value_parser = BranchData::parse_assignments)]
        branches: Option<BranchData>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn read_input(path: &str) -> Result<BoundsInput, String> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| e.to_string())?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))
}

fn emit(out: CommandOutput, json: bool) -> io::Result<()> {
    let text = if json {
        out.document.to_json()
    } else {
        out.text
    };
    let mut stdout = io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    stdout.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, json) = match cli.command {
        Command::Count { kind, n, format } => (cmd_count(kind, n), matches!(format, Format::Json)),
        Command::Paper { max_tips, format } => {
            (cmd_paper(max_tips), matches!(format, Format::Json))
        }
        Command::Enumerate {
            n,
            rooted,
            format,
            limit,
        } => (
            cmd_enumerate(n, rooted, limit),
            matches!(format, EnumFormat::Doc),
        ),
        Command::Bounds {
            input,
            b1,
            b2,
            g,
            b0_aff,
            b1_aff,
            p,
            branches,
            format,
        } => {
            let doc = match input {
                Some(path) => match read_input(&path) {
                    Ok(doc) => doc,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_INVALID as u8);
                    }
                },
                None => BoundsInput {
                    b1,
                    b2,
                    g,
                    branches,
                    b0_aff,
                    b1_aff,
                    p,
                },
            };
            (cmd_bounds(&doc), matches!(format, Format::Json))
        }
    };
    match result {
        Ok(out) => match emit(out, json) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_FAILURE as u8)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
