use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;

use gjms_verify::{list_suites, run_suite, GridSpec, SuiteConfig};

/// Run named verification suites over parameter grids and write
/// deterministic reports and CSV tables.
#[derive(Parser, Debug)]
#[command(name = "gjms-verify", version, about)]
struct Cli {
    /// Suite name, or `all`
    #[arg(long, default_value = "all")]
    suite: String,

    /// Dimensions to run, comma-separated (e.g. 3,4,5)
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u32>>,

    /// γ grid as start:stop:count:scale, scale ∈ {linear, geometric}
    #[arg(long, value_parser = parse_grid)]
    gamma: Option<GridSpec>,

    /// λ grid as start:stop:count:scale
    #[arg(long, value_parser = parse_grid)]
    lambda: Option<GridSpec>,

    /// Relative tolerance override for identity suites
    #[arg(long)]
    tol_rel: Option<f64>,

    /// Margin floor override for inequality suites
    #[arg(long)]
    tol_margin: Option<f64>,

    /// Report output directory (default: $GJMS_VERIFY_OUT if set)
    #[arg(long)]
    out: Option<PathBuf>,

    /// CSV output directory
    #[arg(long)]
    csv: Option<PathBuf>,

    /// Worker threads (0 = library default)
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// List registered suites and exit
    #[arg(long)]
    list: bool,
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.list {
        for (name, what) in list_suites() {
            println!("{name}: {what}");
        }
        return ExitCode::SUCCESS;
    }

    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("failed to configure {} worker threads: {e}", cli.jobs);
            return ExitCode::from(2);
        }
    }

    let names: Vec<String> = if cli.suite == "all" {
        list_suites().iter().map(|(n, _)| n.to_string()).collect()
    } else {
        if !list_suites().iter().any(|(n, _)| *n == cli.suite) {
            eprintln!("unknown suite `{}`; use --list to see the registry", cli.suite);
            return ExitCode::from(2);
        }
        vec![cli.suite.clone()]
    };

    let out_dir = cli.out.clone().or_else(|| std::env::var_os("GJMS_VERIFY_OUT").map(PathBuf::from));
    for dir in [&out_dir, &cli.csv].into_iter().flatten() {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("cannot create output directory {}: {e}", dir.display());
            return ExitCode::from(2);
        }
    }

    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_else(|_| "0".into());

    let mut failing_suites = 0u32;
    for name in &names {
        let cfg = SuiteConfig {
            suite_name: name.clone(),
            dimension_list: cli.n.clone(),
            gamma_grid: cli.gamma,
            lambda_grid: cli.lambda,
            tol_rel: cli.tol_rel,
            tol_margin: cli.tol_margin,
        };
        let report = match run_suite(&cfg) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        };
        let s = &report.summary;
        println!(
            "{name}: {}/{} passed, max|residual|={:.3e}, min margin={:.3e} ({:.2}s)",
            s.passed, s.total, s.max_abs_residual, s.min_margin, s.wall_time_seconds
        );
        if !report.all_passed() {
            failing_suites += 1;
        }
        if let Some(dir) = &out_dir {
            let path = dir.join(format!("{name}.report.txt"));
            let contents = format!("{}{}", report.header(&timestamp), report.body());
            if let Err(e) = std::fs::write(&path, contents) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        if let Some(dir) = &cli.csv {
            let path = dir.join(format!("{name}.csv"));
            if let Err(e) = std::fs::write(&path, report.csv()) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }

    if failing_suites == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(failing_suites.min(255) as u8)
    }
}
