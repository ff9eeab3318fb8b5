//! Command-line front end for the ensemble library.
//!
//! Exit codes: 0 success, 2 invalid parameter or infeasible request,
//! 3 I/O failure, 4 malformed network file. Argument parsing errors
//! from clap also exit 2.

mod config;
mod fmt;
mod sweep;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nensemble::{equilibrate, gamma_from_nu, nu_from_gamma, solve_maxent, weights_from_gamma};

use crate::fmt::sig12;

#[derive(Parser)]
#[command(
    name = "nensemble",
    version,
    about = "Occupation ensembles for electron-sharing molecular domains",
    long_about = "Computes the least-biased three-state occupation ensemble of a molecular \
                  domain under a charge-transfer bias, inverts the bias/charge relation, fits \
                  general occupation ladders, and equilibrates a shared charge across several \
                  domains."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the bias range and write the weight and charge curves as CSV
    ///
    /// The default range of -5 to 5 with 201 points is a presentation
    /// choice: for q = 1 it saturates both tails of every curve. Narrow
    /// or widen it freely; rows are evenly spaced and include both
    /// endpoints.
    Sweep {
        /// Transfer capacity of the domain (electrons moved per step)
        #[arg(long, default_value_t = 1)]
        q: u32,
        /// Lower end of the bias range
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        gamma_min: f64,
        /// Upper end of the bias range
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        gamma_max: f64,
        /// Number of evenly spaced samples, endpoints included
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// CSV output path
        #[arg(long)]
        out_csv: PathBuf,
        /// Optional SVG plot of the same rows
        #[arg(long)]
        out_svg: Option<PathBuf>,
    },
    /// Evaluate weights, net charge, entropy, and response sign at one bias
    Eval {
        /// Transfer capacity of the domain
        #[arg(long, default_value_t = 1)]
        q: u32,
        /// Bias to evaluate at
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
    },
    /// Find the bias that produces a given net charge
    Invert {
        /// Transfer capacity of the domain
        #[arg(long, default_value_t = 1)]
        q: u32,
        /// Net charge to invert; must lie strictly inside (-q, q)
        #[arg(long, allow_negative_numbers = true)]
        nu: f64,
    },
    /// Fit the least-biased ensemble on an occupation ladder to a target mean
    Solve {
        /// Comma-separated occupation numbers, strictly increasing
        #[arg(long)]
        states: String,
        /// Target mean occupation; must lie strictly inside the ladder's range
        #[arg(long, allow_negative_numbers = true)]
        target: f64,
    },
    /// Distribute a total charge across several domains through one shared bias
    Network {
        /// JSON file: {"domains": [{"label": ..., "N": ..., "q": ...}, ...]}
        #[arg(long)]
        domains_path: PathBuf,
        /// Total charge to distribute
        #[arg(long, allow_negative_numbers = true)]
        total_charge: f64,
    },
}

enum Failure {
    Param(String),
    Io(String),
    Config(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Param(m) | Failure::Io(m) | Failure::Config(m) => m,
        }
    }

    fn code(&self) -> ExitCode {
        match self {
            Failure::Param(_) => ExitCode::from(2),
            Failure::Io(_) => ExitCode::from(3),
            Failure::Config(_) => ExitCode::from(4),
        }
    }
}

impl From<nensemble::Error> for Failure {
    fn from(e: nensemble::Error) -> Self {
        Failure::Param(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sweep { q, gamma_min, gamma_max, steps, out_csv, out_svg } => {
            cmd_sweep(q, gamma_min, gamma_max, steps, &out_csv, out_svg.as_deref())
        }
        Command::Eval { q, gamma } => cmd_eval(q, gamma),
        Command::Invert { q, nu } => cmd_invert(q, nu),
        Command::Solve { states, target } => cmd_solve(&states, target),
        Command::Network { domains_path, total_charge } => {
            cmd_network(&domains_path, total_charge)
        }
    }
}

fn write_file(path: &std::path::Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn cmd_sweep(
    q: u32,
    gamma_min: f64,
    gamma_max: f64,
    steps: usize,
    out_csv: &std::path::Path,
    out_svg: Option<&std::path::Path>,
) -> Result<(), Failure> {
    if gamma_min.partial_cmp(&gamma_max) != Some(std::cmp::Ordering::Less) {
        return Err(Failure::Param(format!(
            "gamma-min ({gamma_min}) must be strictly below gamma-max ({gamma_max})"
        )));
    }
    if steps < 2 {
        return Err(Failure::Param(format!(
            "steps ({steps}) must be at least 2 to include both endpoints"
        )));
    }
    let rows = sweep::sweep_rows(q, gamma_min, gamma_max, steps)?;
    write_file(out_csv, &sweep::to_csv(&rows))?;
    if let Some(svg) = out_svg {
        write_file(svg, &sweep::to_svg(&rows, q))?;
    }
    Ok(())
}

fn cmd_eval(q: u32, gamma: f64) -> Result<(), Failure> {
    let w = weights_from_gamma(q, gamma)?;
    let nu: f64 = nu_from_gamma(q, gamma)?;
    println!("w_minus    {}", sig12(w.minus()));
    println!("w_center   {}", sig12(w.center()));
    println!("w_plus     {}", sig12(w.plus()));
    println!("nu         {}", sig12(nu));
    println!("nu_over_q  {}", sig12(w.charge_fraction()));
    println!("entropy    {}", sig12(w.entropy()));
    println!("chi        {}", sig12(-gamma));
    Ok(())
}

fn cmd_invert(q: u32, nu: f64) -> Result<(), Failure> {
    let gamma: f64 = gamma_from_nu(q, nu)?;
    println!("{}", sig12(gamma));
    Ok(())
}

fn cmd_solve(states_text: &str, target: f64) -> Result<(), Failure> {
    let states = parse_states(states_text)?;
    let sol = solve_maxent(&states, target)?;
    println!("gamma    {}", sig12(sol.gamma));
    for (state, weight) in states.iter().zip(sol.ensemble.weights()) {
        println!("w[{state}]     {}", sig12(*weight));
    }
    println!("entropy  {}", sig12(sol.ensemble.entropy()));
    Ok(())
}

fn parse_states(text: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| {
                Failure::Param(format!(
                    "states must be comma-separated occupation numbers; could not parse {:?}",
                    t.trim()
                ))
            })
        })
        .collect()
}

fn cmd_network(path: &std::path::Path, total_charge: f64) -> Result<(), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let domains = config::parse_domains(&text)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    let sol = equilibrate(&domains, total_charge)?;

    let rows: Vec<(String, String, String)> = sol
        .per_domain
        .iter()
        .map(|d| (d.label.clone(), sig12(d.nu), sig12(d.population)))
        .collect();
    let label_width = rows
        .iter()
        .map(|(l, _, _)| l.len())
        .chain(["residual".len()])
        .max()
        .unwrap_or(0);
    let nu_width = rows.iter().map(|(_, n, _)| n.len()).chain(["nu".len()]).max().unwrap_or(0);

    println!("gamma_star  {}", sig12(sol.gamma_star));
    println!("{:<label_width$}  {:<nu_width$}  population", "label", "nu");
    for (label, nu, population) in &rows {
        println!("{label:<label_width$}  {nu:<nu_width$}  {population}");
    }
    let total: f64 = sol.per_domain.iter().map(|d| d.nu).sum();
    println!("{:<label_width$}  {}", "total", sig12(total));
    println!("{:<label_width$}  {}", "residual", sig12(sol.residual));
    Ok(())
}
