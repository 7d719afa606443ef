//! `ellcomb`: compute point-count and combinatorial polynomial families,
//! run the identity sweep, and query the brute-force curve oracle.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad arguments.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ellcomb::curve_oracle::{
    count_points, endo_kernel_count, hasse_bound_holds, predict_nk, Curve,
};
use ellcomb::cyclotomic::{euler_phi, CycTable};
use ellcomb::matrix_cheb::chebyshev_t;
use ellcomb::point_counts::{e_k_recurrence, h_k, n_k_recurrence, p_ik};
use ellcomb::qt_combinatorics::{
    fib_qt, fib_twisted, lucas_qt, lucas_twisted, wheel_poly_enum, MAX_WHEEL_N,
};
use ellcomb::verify::{self, Suite};
use ellcomb::{BivarPoly, Error, UnivarPoly};

#[derive(Parser)]
#[command(
    name = "ellcomb",
    version,
    about = "Exact point-count polynomials of elliptic curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial of a family.
    Poly {
        family: Family,
        /// Indices: one for most families, two (`i k` or `i d`) for pik and qid.
        #[arg(required = true, num_args = 1..=2)]
        index: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Name printed for the second variable.
        #[arg(long, value_enum, default_value_t = VarName::V)]
        var: VarName,
    },
    /// Run the cross-identity sweep.
    Verify {
        /// `all` or one of point-counts, combinatorics, matrix, cyclotomic, oracle.
        suite: String,
        #[arg(long, default_value_t = 12)]
        max_k: u32,
    },
    /// Compare brute-force curve counts with the polynomial predictions.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Print a whole row of a family.
    Table {
        family: TableFamily,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = VarName::V)]
        var: VarName,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// `#C(F_{p^k})` against `N_k(p, N_1)`.
    Check {
        /// Curve `y^2 = x^3 + ax + b` over `F_p`, written `p,a,b`.
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
    },
    /// `#Ker Cyc_d(pi)` against `ECyc_d(p, N_1)`.
    Kernel {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 2)]
        max_d: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Nk,
    Hk,
    Ek,
    Pik,
    Lucas,
    LucasTwisted,
    Fib,
    FibTwisted,
    Wheel,
    Cyc,
    Ecyc,
    Wcyc,
    Qid,
    Cheb,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Nk => "nk",
            Family::Hk => "hk",
            Family::Ek => "ek",
            Family::Pik => "pik",
            Family::Lucas => "lucas",
            Family::LucasTwisted => "lucas-twisted",
            Family::Fib => "fib",
            Family::FibTwisted => "fib-twisted",
            Family::Wheel => "wheel",
            Family::Cyc => "cyc",
            Family::Ecyc => "ecyc",
            Family::Wcyc => "wcyc",
            Family::Qid => "qid",
            Family::Cheb => "cheb",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Pik | Family::Qid => 2,
            _ => 1,
        }
    }

    /// Name of the single variable of a univariate family.
    fn univariate_var(self) -> Option<&'static str> {
        match self {
            Family::Pik | Family::Qid => Some("q"),
            Family::Cyc | Family::Cheb => Some("x"),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Pik,
    Nk,
    Ek,
    Qid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarName {
    #[value(name = "v")]
    V,
    #[value(name = "N1")]
    N1,
    #[value(name = "t")]
    T,
}

impl VarName {
    fn as_str(self) -> &'static str {
        match self {
            VarName::V => "v",
            VarName::N1 => "N1",
            VarName::T => "t",
        }
    }
}

/// Failure that maps to an exit code.
enum Failure {
    Usage(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(name)) => {
            eprintln!("verification failed: {name}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor usage, run `ellcomb --help`.");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Poly {
            family,
            index,
            format,
            var,
        } => {
            if index.len() != family.arity() {
                return Err(Failure::Usage(format!(
                    "family {} takes {} index argument(s), got {}",
                    family.name(),
                    family.arity(),
                    index.len()
                )));
            }
            let poly = compute(family, &index)?;
            print_poly(family, &index, &poly, format, var);
            Ok(())
        }
        Command::Verify { suite, max_k } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(&suite)
                    .ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?]
            };
            let report = verify::run(&suites, max_k);
            println!("{report}");
            match report.first_failure() {
                Some(check) => Err(Failure::Identity(check.name.clone())),
                None => Ok(()),
            }
        }
        Command::Oracle { action } => match action {
            OracleAction::Check { curve, max_k } => oracle_check(&curve, max_k),
            OracleAction::Kernel { curve, max_d } => oracle_kernel(&curve, max_d),
        },
        Command::Table { family, k, var } => table(family, k, var),
    }
}

fn need_positive(n: u32, what: &str) -> Result<(), Failure> {
    if n == 0 {
        Err(Failure::Usage(format!("{what} needs a positive index")))
    } else {
        Ok(())
    }
}

fn compute(family: Family, index: &[u32]) -> Result<BivarPoly, Failure> {
    let n = index[0];
    let poly = match family {
        Family::Nk => {
            need_positive(n, "nk")?;
            n_k_recurrence(n)
        }
        Family::Hk => h_k(n),
        Family::Ek => e_k_recurrence(n),
        Family::Pik => p_ik(index[0], index[1])?.to_bivar_q(),
        Family::Lucas => lucas_qt(n)?,
        Family::LucasTwisted => lucas_twisted(n)?,
        Family::Fib => fib_qt(n)?,
        Family::FibTwisted => fib_twisted(n)?,
        Family::Wheel => {
            need_positive(n, "wheel")?;
            if n > MAX_WHEEL_N {
                return Err(Failure::Usage(format!(
                    "wheel enumeration is limited to n <= {MAX_WHEEL_N}"
                )));
            }
            wheel_poly_enum(n)?
        }
        Family::Cyc => {
            need_positive(n, "cyc")?;
            CycTable::new().cyc(n).to_bivar_q()
        }
        Family::Ecyc => CycTable::new().ecyc(n)?.clone(),
        Family::Wcyc => CycTable::new().wcyc(n)?,
        Family::Qid => CycTable::new().q_id(index[0], index[1])?.to_bivar_q(),
        Family::Cheb => chebyshev_t(n).to_bivar_q(),
    };
    Ok(poly)
}

fn render(family: Family, poly: &BivarPoly, var: VarName) -> String {
    match family.univariate_var() {
        Some(x) => poly.render_with(x, var.as_str()),
        None => poly.render_with("q", var.as_str()),
    }
}

fn print_poly(family: Family, index: &[u32], poly: &BivarPoly, format: Format, var: VarName) {
    match format {
        Format::Text => println!("{}", render(family, poly, var)),
        Format::Json => {
            let doc = json!({
                "family": family.name(),
                "index": index,
                "terms": poly.to_json_terms(),
            });
            println!("{doc}");
        }
    }
}

fn oracle_check(curve_arg: &str, max_k: u32) -> Result<(), Failure> {
    let curve = Curve::parse(curve_arg)?;
    let q = curve.q();
    let n1 = count_points(&curve, 1)?;
    println!("{curve}");
    let hasse = hasse_bound_holds(q, n1);
    println!(
        "Hasse bound |1 + q - N1| <= 2 sqrt(q): {}",
        if hasse { "OK" } else { "VIOLATED" }
    );
    let mut failed = (!hasse).then(|| format!("Hasse bound for {curve}"));
    for k in 1..=max_k.max(1) {
        let counted = count_points(&curve, k as usize)?;
        let predicted = predict_nk(q, n1, k);
        let ok = predicted == counted.into();
        println!(
            "N{k}={counted} predicted={predicted} {}",
            if ok { "MATCH" } else { "MISMATCH" }
        );
        if !ok && failed.is_none() {
            failed = Some(format!("N_{k} of {curve}"));
        }
    }
    failed.map_or(Ok(()), |f| Err(Failure::Identity(f)))
}

fn oracle_kernel(curve_arg: &str, max_d: u32) -> Result<(), Failure> {
    let curve = Curve::parse(curve_arg)?;
    let q = curve.q();
    let n1 = count_points(&curve, 1)?;
    let mut table = CycTable::new();
    println!("{curve}");
    let mut failed = None;
    for d in 1..=max_d.max(1) {
        let kernel = endo_kernel_count(&curve, d as usize)?;
        let predicted = table.ecyc(d)?.eval_i64(q as i64, n1 as i64);
        let ok = predicted == kernel.into();
        println!(
            "|Ker Cyc_{d}(pi)|={kernel} ECyc_{d}={predicted} {}",
            if ok { "MATCH" } else { "MISMATCH" }
        );
        if !ok && failed.is_none() {
            failed = Some(format!("kernel of Cyc_{d}(pi) on {curve}"));
        }
    }
    failed.map_or(Ok(()), |f| Err(Failure::Identity(f)))
}

fn table(family: TableFamily, k: u32, var: VarName) -> Result<(), Failure> {
    need_positive(k, "table")?;
    let v = var.as_str();
    match family {
        TableFamily::Pik => {
            for i in 1..=k {
                println!("P_{{{i},{k}}} = {}", p_ik(i, k)?.render_in("q"));
            }
        }
        TableFamily::Nk => {
            for j in 1..=k {
                println!("N_{j} = {}", n_k_recurrence(j).render_with("q", v));
            }
        }
        TableFamily::Ek => {
            for j in 1..=k {
                println!("E_{j} = {}", e_k_recurrence(j).render_with("q", v));
            }
        }
        TableFamily::Qid => {
            let mut t = CycTable::new();
            for i in 1..=euler_phi(k as u64) as u32 {
                let q: UnivarPoly = t.q_id(i, k)?;
                println!("Q_{{{i},{k}}} = {}", q.render_in("q"));
            }
        }
    }
    Ok(())
}
