use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extremal_lie::chevalley::{
    extremal_spanning_set, long_root_extremality_check, mingen_report, radicals_report,
    short_root_decomposition_check, ChevalleyAlgebra, FLEET,
};
use extremal_lie::liealg::extremal_form;
use extremal_lie::nilquot::{
    assoc_dims_via_embedding, sandwich_algebra, EXPECTED_LR, EXPECTED_R3_LENGTHS,
    EXPECTED_R4_LENGTHS, EXPECTED_RR,
};
use extremal_lie::rootdata::{parse_type, CartanType};
use extremal_lie::rootgroups::rootgroups_report;
use extremal_lie::smallgen::{threegen_report, TriangleParams};
use extremal_lie::{with_field, Error, Report, Scalar};
use rayon::prelude::*;
use serde::Serialize;

mod cache;

#[derive(Parser)]
#[command(
    name = "extremal-lie",
    version,
    about = "Exact checks on Lie algebras generated by extremal elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent algebras.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include the wall-clock time (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension tables of the sandwich algebras and their associative companions.
    Tables {
        #[arg(value_enum)]
        which: Table,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
        /// Number of generators for `rr-lengths`.
        #[arg(long, default_value_t = 4)]
        r: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Minimal extremal generating sets and lower bounds.
    Mingen(AlgebraArgs),
    /// The chain of radicals.
    Radicals(AlgebraArgs),
    /// Lie algebras generated by three extremal elements.
    Threegen {
        /// Edge labels f(x,y), f(x,z), f(y,z), comma separated.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        edges: Vec<String>,
        /// The central label f(x,[y,z]).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        central: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Root group identities as exact matrices.
    Rootgroups(AlgebraArgs),
    /// Extremality of root elements and properties of the extremal form.
    ExtremalCheck(AlgebraArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Lr,
    Rr,
    RrLengths,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Cartan type such as G2 or B; all default algebras when omitted.
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Allow E8.
    #[arg(long)]
    heavy: bool,
}

#[derive(Serialize)]
struct Output {
    command: String,
    parameters: BTreeMap<String, String>,
    pass: bool,
    checks: Vec<extremal_lie::report::Check>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    data: serde_json::Value,
    runtime_ms: Option<u128>,
}

enum Failure {
    Usage(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRank(..)
            | Error::UnsupportedType(_)
            | Error::Parse(_)
            | Error::NotPrime(_)
            | Error::UnsupportedCharacteristic(..)
            | Error::CharacteristicTwoUnsupported => Failure::Usage(e.to_string()),
            e => Failure::Error(e),
        }
    }
}

type Outcome = Result<(Report, serde_json::Value), Failure>;

fn algebras(
    args: &AlgebraArgs,
    default: &[(CartanType, usize)],
) -> Result<Vec<(CartanType, usize)>, Failure> {
    let list = match &args.ty {
        Some(t) => vec![parse_type(t, args.rank)?],
        None => default.to_vec(),
    };
    if !args.heavy && list.contains(&(CartanType::E, 8)) {
        return Err(Failure::Usage(
            "E8 is expensive; pass --heavy to run it".into(),
        ));
    }
    Ok(list)
}

/// Run `f` on each algebra (in parallel) and merge the reports in order.
fn per_algebra<S, F>(list: &[(CartanType, usize)], title: &str, f: F) -> Outcome
where
    S: Scalar,
    F: Fn(&ChevalleyAlgebra<S>) -> Result<(Report, serde_json::Value), Error> + Sync,
{
    let results: Vec<Result<(Report, serde_json::Value), Error>> = list
        .par_iter()
        .map(|&(ty, n)| f(&cache::chevalley::<S>(ty, n)?))
        .collect();
    let mut report = Report::new(title);
    let mut data = Vec::new();
    for ((ty, n), res) in list.iter().zip(results) {
        let (r, d) = res?;
        report.absorb(&format!("{ty}{n}"), r);
        data.push(d);
    }
    Ok((report, serde_json::Value::Array(data)))
}

fn tables(which: Table, max_r: usize, r: usize, p: u64) -> Outcome {
    let out = with_field!(p, S => tables_over::<S>(which, max_r, r))?;
    out
}

fn tables_over<S: Scalar>(which: Table, max_r: usize, r: usize) -> Outcome {
    let exact = S::CHARACTERISTIC == 0;
    let mut rep = Report::new(format!("tables over {}", S::field()));
    let mut data = serde_json::Map::new();
    match which {
        Table::Lr => {
            if max_r > EXPECTED_LR.len() {
                return Err(Failure::Usage(format!(
                    "--max-r is at most {}",
                    EXPECTED_LR.len()
                )));
            }
            for r in 1..=max_r {
                let q = sandwich_algebra::<S>(r)?;
                let (expected, actual) = (EXPECTED_LR[r - 1], q.total_dim());
                if exact {
                    rep.expect(format!("dim L_{r}"), expected, actual);
                } else {
                    let note = if expected == actual {
                        "matches char 0"
                    } else {
                        "differs from char 0"
                    };
                    rep.push(
                        format!("dim L_{r}"),
                        expected.to_string(),
                        format!("{actual} ({note})"),
                        true,
                    );
                }
                data.insert(format!("L{r}"), serde_json::json!(q.dims_by_degree()));
            }
        }
        Table::Rr => {
            if max_r > EXPECTED_RR.len() {
                return Err(Failure::Usage(format!(
                    "--max-r is at most {}",
                    EXPECTED_RR.len()
                )));
            }
            for r in 1..=max_r {
                let a = assoc_dims_via_embedding::<S>(r)?;
                if exact {
                    rep.expect(format!("dim R_{r}"), EXPECTED_RR[r - 1], a.total_dim);
                } else {
                    rep.push(
                        format!("dim R_{r}"),
                        EXPECTED_RR[r - 1].to_string(),
                        a.total_dim.to_string(),
                        true,
                    );
                }
                data.insert(
                    format!("R{r}"),
                    serde_json::to_value(&a).expect("serializable"),
                );
            }
        }
        Table::RrLengths => {
            if !(1..=EXPECTED_RR.len()).contains(&r) {
                return Err(Failure::Usage(format!(
                    "--r must lie in 1..={}",
                    EXPECTED_RR.len()
                )));
            }
            let a = assoc_dims_via_embedding::<S>(r)?;
            let expected: Option<&[usize]> = match r {
                3 => Some(&EXPECTED_R3_LENGTHS),
                4 => Some(&EXPECTED_R4_LENGTHS),
                _ => None,
            };
            let show = |v: &[usize]| format!("{v:?}");
            match expected {
                Some(e) if exact => {
                    rep.push(
                        format!("R_{r} length profile"),
                        show(e),
                        show(&a.dims_by_length),
                        e == a.dims_by_length,
                    );
                }
                _ => rep.push(
                    format!("R_{r} length profile"),
                    "",
                    show(&a.dims_by_length),
                    true,
                ),
            }
            rep.push(
                "palindromic (recorded)",
                "",
                a.palindromic.to_string(),
                true,
            );
            data.insert(
                format!("R{r}"),
                serde_json::to_value(&a).expect("serializable"),
            );
        }
    }
    Ok((rep, serde_json::Value::Object(data)))
}

fn mingen(args: &AlgebraArgs) -> Outcome {
    let list = algebras(args, &FLEET)?;
    let out = with_field!(args.characteristic, S => per_algebra::<S, _>(&list, "mingen", |c| {
        let (row, r) = mingen_report(c)?;
        Ok((r, serde_json::to_value(row).expect("serializable")))
    }))?;
    out
}

fn radicals(args: &AlgebraArgs) -> Outcome {
    let list = algebras(args, &FLEET)?;
    let out = with_field!(args.characteristic, S => per_algebra::<S, _>(&list, "radicals", |c| {
        let (r, chain) = radicals_report(c)?;
        let dims = serde_json::json!({
            "algebra": c.name(),
            "sanrad": chain.sanrad.dim(),
            "nilrad": chain.nilrad.as_ref().map(|s| s.dim()),
            "rad": chain.rad.dim(),
            "rad_f": chain.rad_f.dim(),
            "rad_kappa": chain.rad_kappa.dim(),
        });
        Ok((r, dims))
    }))?;
    out
}

fn rootgroups(args: &AlgebraArgs, seed: u64) -> Outcome {
    let default = [(CartanType::A, 2), (CartanType::A, 3), (CartanType::D, 4)];
    let list = algebras(args, &default)?;
    let out = with_field!(args.characteristic, S => per_algebra::<S, _>(&list, "rootgroups", |c| {
        let (r, rows) = rootgroups_report(c, seed)?;
        Ok((r, serde_json::to_value(rows).expect("serializable")))
    }))?;
    out
}

fn extremal_check_one<S: Scalar>(
    c: &ChevalleyAlgebra<S>,
) -> Result<(Report, serde_json::Value), Error> {
    let mut r = long_root_extremality_check(c);
    let (ty, n) = (c.roots.ty, c.roots.rank);
    if (ty == CartanType::B && n == 2) || ty == CartanType::G {
        r.absorb("decomposition", short_root_decomposition_check::<S>(ty)?);
    }
    let l = &c.algebra;
    let f = extremal_form(l, &extremal_spanning_set(c))?;
    r.assert("extremal form symmetric", f.is_symmetric());
    r.assert("extremal form associative", f.is_associative(l));
    Ok((r, serde_json::Value::Null))
}

fn extremal_check(args: &AlgebraArgs) -> Outcome {
    let list = algebras(args, &FLEET)?;
    let out = with_field!(args.characteristic, S => per_algebra::<S, _>(&list, "extremal-check", extremal_check_one::<S>))?;
    out.map(|(r, _)| (r, serde_json::Value::Null))
}

fn threegen(edges: &[String], central: &str, p: u64) -> Outcome {
    if edges.len() != 3 {
        return Err(
            Error::Parse(format!("expected three edge labels, got {}", edges.len())).into(),
        );
    }
    let out = with_field!(p, S => {
        let parse = |s: &str| S::from_repr(s);
        let params = TriangleParams::new(parse(&edges[0])?, parse(&edges[1])?, parse(&edges[2])?, parse(central)?);
        threegen_report(&params).map(|r| (r, serde_json::Value::Null)).map_err(Failure::from)
    })?;
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .expect("thread pool");
    }
    let start = Instant::now();
    let mut params = BTreeMap::new();
    let (name, outcome) = match &cli.command {
        Command::Tables {
            which,
            max_r,
            r,
            characteristic,
        } => {
            let w = which
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            params.insert("table".into(), w);
            params.insert("max_r".into(), max_r.to_string());
            params.insert("r".into(), r.to_string());
            params.insert("char".into(), characteristic.to_string());
            ("tables", tables(*which, *max_r, *r, *characteristic))
        }
        Command::Threegen {
            edges,
            central,
            characteristic,
        } => {
            params.insert("edges".into(), edges.join(","));
            params.insert("central".into(), central.clone());
            params.insert("char".into(), characteristic.to_string());
            ("threegen", threegen(edges, central, *characteristic))
        }
        Command::Mingen(a)
        | Command::Radicals(a)
        | Command::Rootgroups(a)
        | Command::ExtremalCheck(a) => {
            params.insert(
                "type".into(),
                a.ty.clone().unwrap_or_else(|| "default set".into()),
            );
            if let Some(n) = a.rank {
                params.insert("rank".into(), n.to_string());
            }
            params.insert("char".into(), a.characteristic.to_string());
            match &cli.command {
                Command::Mingen(_) => ("mingen", mingen(a)),
                Command::Radicals(_) => ("radicals", radicals(a)),
                Command::Rootgroups(_) => {
                    params.insert("seed".into(), cli.seed.to_string());
                    ("rootgroups", rootgroups(a, cli.seed))
                }
                _ => ("extremal-check", extremal_check(a)),
            }
        }
    };
    let (report, data) = match outcome {
        Ok(v) => v,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let pass = report.pass();
    let runtime_ms = cli.timing.then(|| start.elapsed().as_millis());
    if cli.json {
        let out = Output {
            command: name.into(),
            parameters: params,
            pass,
            checks: report.checks,
            data,
            runtime_ms,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        print!("{report}");
        println!("{}", if pass { "PASS" } else { "FAIL" });
        if let Some(ms) = runtime_ms {
            println!("runtime: {ms} ms");
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
