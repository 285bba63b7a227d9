//! padic-hg: p-adic special functions, hypergeometric functions of
//! logarithmic type, and unit-root checks by point counting.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use padic_hg::curves::{
    conjecture_lhs, nonvanishing, verify_dwork_unit_root, verify_hg_unit_roots, Family, HGCurveSpec,
};
use padic_hg::hypergeo::eval::{dwork_level, logtype_level};
use padic_hg::hypergeo::{
    congruence_report, dwork_congruence_report, dwork_eval, gauss_mod_p, logtype_eval, HGParams, Twist,
};
use padic_hg::padic::{teichmuller, RationalParam};
use padic_hg::special::euler::gamma_level;
use padic_hg::special::kubota::auxiliary_ns;
use padic_hg::special::polygamma::psi_tilde_level;
use padic_hg::special::polylog::polylog_level;
use padic_hg::special::{digamma, euler_gamma, kubota_leopoldt, polygamma, polylog, PolygammaArg};
use padic_hg::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Environment variable overriding the number of worker threads.
const WORKERS_ENV: &str = "PADIC_HG_WORKERS";

#[derive(Parser)]
#[command(name = "padic-hg", version, about)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Args, Clone, Copy)]
struct Prime {
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// Output precision K (digits mod p^K).
    #[arg(long, default_value_t = 6)]
    prec: u32,
}

#[derive(Subcommand)]
enum Command {
    /// p-adic polylogarithm ln_r(z) for a unit z != 1 mod p.
    Polylog {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        z: RationalParam,
    },
    /// psi_p(z) = -gamma_p + psi~(z).
    Digamma {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true)]
        z: RationalParam,
    },
    /// psi_p^(r)(z).
    Polygamma {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        z: RationalParam,
    },
    /// The p-adic Euler constant gamma_p.
    Eulergamma {
        #[command(flatten)]
        prime: Prime,
    },
    /// Kubota-Leopoldt value L_p(r, omega^(1-r)).
    Lp {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Dwork's F^Dw_a(t) = F_a(t)/F_a'(t^p) at t.
    Dwork {
        #[command(flatten)]
        prime: Prime,
        /// Parameters, comma separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        a: Vec<RationalParam>,
        #[arg(long, allow_hyphen_values = true)]
        at: RationalParam,
        /// Evaluate at the Teichmuller lift of t instead of t.
        #[arg(long)]
        teichmuller: bool,
    },
    /// The logarithmic-type function G_a(t)/F_a(t) for sigma(t) = c t^p.
    Logtype {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        a: Vec<RationalParam>,
        /// Twist c: a rational = 1 mod p, or "x^{1-p}".
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        c: Twist,
        #[arg(long, allow_hyphen_values = true)]
        at: RationalParam,
    },
    /// Coefficientwise check of the truncation congruences.
    Congruence {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        a: Vec<RationalParam>,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        c: Twist,
        #[arg(long)]
        n: u32,
        /// Highest degree checked; at least p^n.
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Kind::Both)]
        kind: Kind,
    },
    /// [F_{a,b}(1)]_{<p} mod p against (a0+b0)!/(a0! b0!).
    Gauss1 {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', num_args = 1.., required = true)]
        a: Vec<RationalParam>,
    },
    /// Unit root of y^2 = x(1-x)(1-ax) against Dwork's formula; all a when omitted.
    UnitrootLegendre {
        #[command(flatten)]
        prime: Prime,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        a: Vec<i64>,
    },
    /// Unit roots of (1-x^N)(1-y^M) = t0 against the series values.
    UnitrootHg {
        #[command(flatten)]
        prime: Prime,
        #[arg(long = "N")]
        big_n: u64,
        #[arg(long = "M")]
        big_m: u64,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        t0: Vec<i64>,
        /// Also count over F_(p^(g+1)) to confirm the zeta numerator.
        #[arg(long)]
        confirm: bool,
    },
    /// (1 - p/alpha) F^(sigma)(t) for an elliptic or Fermat family.
    ConjectureLhs {
        #[command(flatten)]
        prime: Prime,
        #[arg(long)]
        family: Family,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        a: RationalParam,
    },
    /// G_{i/N,j/M}(1)_{<p^n} mod p^n for n <= --n.
    Nonvanishing {
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        big_n: u64,
        #[arg(long = "M")]
        big_m: u64,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        j: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Logtype,
    Dwork,
    Both,
}

fn rationals(a: &[RationalParam]) -> Vec<String> {
    a.iter().map(|r| r.to_string()).collect()
}

/// Runs a command; returns the echoed parameters and the result or error.
fn run(command: &Command) -> (&'static str, Value, Result<Value, Error>) {
    match command {
        Command::Polylog { prime, r, z } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "r": r, "z": z.to_string(),
                                 "level": polylog_level(prime.p, prime.prec) });
            let res = z.embed(prime.p, prime.prec).and_then(|x| polylog(*r, &x)).map(|v| output::zp(&v));
            ("polylog", params, res)
        }
        Command::Digamma { prime, z } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "z": z.to_string(),
                                 "level": psi_tilde_level(prime.p, prime.prec),
                                 "gamma_level": gamma_level(prime.p, prime.prec) });
            let res = digamma(&PolygammaArg::Rational(*z), prime.p, prime.prec).map(|v| output::qp(&v));
            ("digamma", params, res)
        }
        Command::Polygamma { prime, r, z } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "r": r, "z": z.to_string(),
                                 "level": psi_tilde_level(prime.p, prime.prec) });
            let res = polygamma(*r, &PolygammaArg::Rational(*z), prime.p, prime.prec).map(|v| output::qp(&v));
            ("polygamma", params, res)
        }
        Command::Eulergamma { prime } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "level": gamma_level(prime.p, prime.prec) });
            ("eulergamma", params, euler_gamma(prime.p, prime.prec).map(|v| output::zp(&v)))
        }
        Command::Lp { prime, r } => {
            let aux = auxiliary_ns(*r, prime.p).ok().and_then(|ns| ns.first().copied());
            let params = json!({ "p": prime.p, "prec": prime.prec, "r": r,
                                 "auxiliary_n": aux.map(|(n, v)| json!({ "n": n, "valuation": v })) });
            ("lp", params, kubota_leopoldt(*r, prime.p, prime.prec).map(|v| output::qp(&v)))
        }
        Command::Dwork { prime, a, at, teichmuller: lift } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "a": rationals(a), "at": at.to_string(),
                                 "teichmuller": lift, "level": dwork_level(prime.p, prime.prec) });
            let res = at
                .embed(prime.p, prime.prec)
                .and_then(|t| if *lift { teichmuller(&t) } else { Ok(t) })
                .and_then(|t| dwork_eval(a, &t, prime.prec))
                .map(|v| output::zp(&v));
            ("dwork", params, res)
        }
        Command::Logtype { prime, a, c, at } => {
            let hg = HGParams::new(a.clone(), prime.p, *c);
            let mut params = json!({ "p": prime.p, "prec": prime.prec, "a": rationals(a), "c": c.to_string(),
                                     "at": at.to_string() });
            if let Ok(hg) = &hg {
                params["weak"] = json!(hg.weak());
                params["level"] = json!(logtype_level(hg, prime.prec));
            }
            let res = hg
                .and_then(|hg| logtype_eval(&hg, &at.embed(prime.p, prime.prec)?, prime.prec))
                .map(|v| output::zp(&v));
            ("logtype", params, res)
        }
        Command::Congruence { p, a, c, n, degree, kind } => {
            let params = json!({ "p": p, "a": rationals(a), "c": c.to_string(), "n": n, "degree": degree });
            let res = (|| {
                let mut out = serde_json::Map::new();
                if matches!(kind, Kind::Logtype | Kind::Both) {
                    let hg = HGParams::new(a.clone(), *p, *c)?;
                    out.insert("logtype".into(), output::record(&congruence_report(&hg, *n, *degree)?));
                }
                if matches!(kind, Kind::Dwork | Kind::Both) {
                    out.insert("dwork".into(), output::record(&dwork_congruence_report(a, *p, *n, *degree)?));
                }
                Ok(Value::Object(out))
            })();
            ("congruence", params, res)
        }
        Command::Gauss1 { p, a } => {
            let params = json!({ "p": p, "a": rationals(a) });
            let res = match a.as_slice() {
                [x, y] => gauss_mod_p(*x, *y, *p).map(|r| output::record(&r)),
                _ => Err(Error::InvalidParameter("gauss1 takes exactly two parameters".into())),
            };
            ("gauss1", params, res)
        }
        Command::UnitrootLegendre { prime, a } => {
            let grid: Vec<i64> = if a.is_empty() { (2..prime.p as i64).collect() } else { a.clone() };
            let params = json!({ "p": prime.p, "prec": prime.prec, "a": grid });
            let res = if a.len() == 1 {
                verify_dwork_unit_root(prime.p, a[0], prime.prec).map(|r| output::record(&r))
            } else {
                let rows: Vec<Value> = grid
                    .par_iter()
                    .map(|&x| match verify_dwork_unit_root(prime.p, x, prime.prec) {
                        Ok(r) => output::record(&r),
                        Err(e) => json!({ "a": x, "error": e.to_string() }),
                    })
                    .collect();
                Ok(Value::Array(rows))
            };
            ("unitroot-legendre", params, res)
        }
        Command::UnitrootHg { prime, big_n, big_m, t0, confirm } => {
            let mut ts = t0.clone();
            ts.sort_unstable();
            ts.dedup();
            let params = json!({ "p": prime.p, "prec": prime.prec, "N": big_n, "M": big_m, "t0": ts,
                                 "confirm": confirm });
            let one = |t: i64| {
                let spec = HGCurveSpec::new(*big_n, *big_m, prime.p, t)?;
                verify_hg_unit_roots(&spec, prime.prec, *confirm).map(|r| output::record(&r))
            };
            let res = if ts.len() == 1 {
                one(ts[0])
            } else {
                Ok(Value::Array(
                    ts.par_iter()
                        .map(|&t| one(t).unwrap_or_else(|e| json!({ "t0": t, "error": e.to_string() })))
                        .collect(),
                ))
            };
            ("unitroot-hg", params, res)
        }
        Command::ConjectureLhs { prime, family, a } => {
            let params = json!({ "p": prime.p, "prec": prime.prec, "family": family.name(), "a": a.to_string() });
            ("conjecture-lhs", params, conjecture_lhs(*family, *a, prime.p, prime.prec).map(|r| output::record(&r)))
        }
        Command::Nonvanishing { p, big_n, big_m, n, i, j } => {
            let params = json!({ "p": p, "N": big_n, "M": big_m, "n": n, "i": i, "j": j });
            let res = nonvanishing(*big_n, *big_m, *p, *n).map(|mut rep| {
                rep.entries.retain(|e| i.map_or(true, |i| e.i == i) && j.map_or(true, |j| e.j == j));
                rep.flagged.retain(|&(ei, ej)| i.map_or(true, |i| ei == i) && j.map_or(true, |j| ej == j));
                output::record(&rep)
            });
            ("nonvanishing", params, res)
        }
    }
}

fn configure_workers() {
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        // Only fails if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn print(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Plain => print!("{}", output::plain(v)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers();
    let (name, params, res) = run(&cli.command);
    match res {
        Ok(v) => {
            print(cli.format, &output::envelope(name, params, v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Format::Json = cli.format {
                print(cli.format, &output::error_envelope(name, params, &e.to_string()));
            }
            ExitCode::from(1)
        }
    }
}

