//! Acceptance runner: one line per criterion, nonzero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use extremal_lie::chevalley::{
    chevalley_algebra, extremal_spanning_set, long_root_extremality_check, mingen_report,
    radicals_report, short_root_decomposition_check, t_claimed, FLEET,
};
use extremal_lie::liealg::{
    extremal_form, extremal_spanning_closure, fourth_power_check, killing_form, phi_spectrum_check,
    sl2,
};
use extremal_lie::nilquot::{assoc_dims_via_embedding, sandwich_algebra, spanning_set_check_4gen};
use extremal_lie::rootdata::{neg, CartanType};
use extremal_lie::rootgroups::rootgroups_report;
use extremal_lie::smallgen::{
    build_m, monomial_matrices, sl3_example, threegen_report, triangle_params_of, TriangleParams,
};
use extremal_lie::{Gf3, Gf5, Gf7, LieAlgebra, Report, Scalar, Q};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn passed(r: &Report) -> Result<(), String> {
    match r.failures().first() {
        None => Ok(()),
        Some(c) => Err(format!(
            "{}: {} (expected {}, got {})",
            r.title, c.name, c.expected, c.actual
        )),
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn c1_sandwich_dims() -> Outcome {
    let expected = [1, 3, 8, 28, 537];
    let got: Vec<usize> = (1..=5)
        .map(|r| sandwich_algebra::<Q>(r).map(|q| q.total_dim()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    if got != expected {
        return Err(format!("dim L_r = {got:?}, expected {expected:?}"));
    }
    Ok(format!("dim L_1..L_5 = {got:?}"))
}

fn c2_assoc_dims() -> Outcome {
    let expected = [2, 5, 19, 193];
    let mut totals = Vec::new();
    for r in 1..=4 {
        let a = assoc_dims_via_embedding::<Q>(r).map_err(err)?;
        totals.push(a.total_dim);
        let profile: &[usize] = match r {
            3 => &[1, 3, 6, 6, 3],
            4 => &[1, 4, 12, 24, 36, 40, 36, 24, 12, 4],
            _ => continue,
        };
        if a.dims_by_length != profile {
            return Err(format!(
                "R_{r} profile {:?}, expected {profile:?}",
                a.dims_by_length
            ));
        }
    }
    if totals != expected {
        return Err(format!("dim R_r = {totals:?}, expected {expected:?}"));
    }
    Ok(format!(
        "dim R_1..R_4 = {totals:?}, R_3 and R_4 profiles match"
    ))
}

fn c3_four_generator_basis() -> Outcome {
    let l4 = sandwich_algebra::<Q>(4).map_err(err)?;
    passed(&spanning_set_check_4gen(&l4).map_err(err)?)?;
    let l4 = sandwich_algebra::<Gf5>(4).map_err(err)?;
    passed(&spanning_set_check_4gen(&l4).map_err(err)?)?;
    Ok("28 monomials span L_4 and the nine identities vanish over Q and GF(5)".into())
}

fn mingen_fleet<S: Scalar>(fleet: &[(CartanType, usize)]) -> Result<(), String> {
    fleet.par_iter().try_for_each(|&(ty, n)| {
        let c = chevalley_algebra::<S>(ty, n).map_err(err)?;
        let (row, rep) = mingen_report(&c).map_err(err)?;
        passed(&rep)?;
        let t = t_claimed(ty, n);
        if !row.generation_ok || row.lower_bound != t {
            return Err(format!("{}: t = {t}, row {row:?}", c.name()));
        }
        Ok(())
    })
}

fn c4_mingen() -> Outcome {
    let mut fleet = FLEET.to_vec();
    fleet.push((CartanType::E, 8));
    mingen_fleet::<Q>(&fleet)?;
    mingen_fleet::<Gf5>(&fleet)?;
    Ok(format!(
        "{} types including E8 over Q and GF(5) certified",
        fleet.len()
    ))
}

fn c5_long_roots() -> Outcome {
    FLEET.par_iter().try_for_each(|&(ty, n)| {
        let c = chevalley_algebra::<Q>(ty, n).map_err(err)?;
        passed(&long_root_extremality_check(&c))
    })?;
    for ty in [CartanType::B, CartanType::G] {
        passed(&short_root_decomposition_check::<Q>(ty).map_err(err)?)?;
    }
    Ok("long root elements extremal, short ones not, B2/G2 decompositions hold".into())
}

fn c6_extremal_form() -> Outcome {
    let labels = ["x", "y", "z", "xy", "xz", "yz", "xyz", "yxz"]
        .map(String::from)
        .to_vec();
    let l =
        LieAlgebra::from_matrices(labels, &monomial_matrices(&sl3_example::<Q>())).map_err(err)?;
    let gens: Vec<Vec<Q>> = (0..3).map(|i| l.basis_vector(i)).collect();
    let p = triangle_params_of(&l, &gens[0], &gens[1], &gens[2]).map_err(err)?;
    if p != TriangleParams::from_i64(-2, -2, -2, 0) {
        return Err(format!("sl3 example labels {p}"));
    }
    let f = extremal_form(&l, &extremal_spanning_closure(&l, &gens)).map_err(err)?;
    if !f.is_symmetric() || !f.is_associative(&l) {
        return Err("sl3 example form not symmetric and associative".into());
    }
    FLEET.par_iter().try_for_each(|&(ty, n)| {
        let c = chevalley_algebra::<Q>(ty, n).map_err(err)?;
        let f = extremal_form(&c.algebra, &extremal_spanning_set(&c)).map_err(err)?;
        if f.is_symmetric() && f.is_associative(&c.algebra) {
            Ok(())
        } else {
            Err(format!("{}: form not symmetric and associative", c.name()))
        }
    })?;
    Ok("sl3 example labels (-2,-2,-2; 0); forms symmetric and associative on the fleet".into())
}

fn radicals_fleet<S: Scalar>() -> Result<(), String> {
    FLEET.par_iter().try_for_each(|&(ty, n)| {
        let c = chevalley_algebra::<S>(ty, n).map_err(err)?;
        passed(&radicals_report(&c).map_err(err)?.0)
    })
}

fn c7_radicals() -> Outcome {
    let a2 = chevalley_algebra::<Q>(CartanType::A, 2).map_err(err)?;
    let alpha = a2.roots.simple_root(0);
    let x = a2.root_element(&alpha).map_err(err)?;
    let y = a2.root_element(&neg(&alpha)).map_err(err)?;
    let kappa = killing_form(&a2.algebra).eval(&x, &y);
    if kappa != Q::from_i64(6) {
        return Err(format!("kappa(x_a, x_-a) = {kappa} in sl3 over Q"));
    }
    let a2_3 = chevalley_algebra::<Gf3>(CartanType::A, 2).map_err(err)?;
    if !killing_form(&a2_3.algebra).is_zero() {
        return Err("Killing form of sl3 over GF(3) is nonzero".into());
    }

    let s2 = sl2::<Q>();
    passed(&phi_spectrum_check(&s2, &s2.basis_vector(0), &s2.basis_vector(2)).map_err(err)?)?;
    let beta = a2.roots.simple_root(1);
    let z = a2.root_element(&beta).map_err(err)?;
    passed(&phi_spectrum_check(&a2.algebra, &x, &y).map_err(err)?)?;
    passed(&phi_spectrum_check(&a2.algebra, &x, &z).map_err(err)?)?;

    radicals_fleet::<Q>()?;
    radicals_fleet::<Gf5>()?;

    let g2 = chevalley_algebra::<Gf3>(CartanType::G, 2).map_err(err)?;
    let (rep, chain) = radicals_report(&g2).map_err(err)?;
    passed(&rep)?;
    if (chain.rad.dim(), chain.rad_f.dim()) != (0, 7) {
        return Err(format!(
            "G2 over GF(3): dim Rad(L) = {}, dim Rad(f) = {}",
            chain.rad.dim(),
            chain.rad_f.dim()
        ));
    }
    if !rep
        .checks
        .iter()
        .any(|c| c.name.starts_with("(ad_[x,y])^4"))
    {
        return Err("G2 over GF(3): fourth power check did not run".into());
    }

    let m = build_m(&TriangleParams::<Q>::from_i64(-2, -2, 0, 0)).map_err(err)?;
    let l = &m.algebra;
    let gens: Vec<Vec<Q>> = (0..3).map(|i| l.basis_vector(i)).collect();
    let f = extremal_form(l, &extremal_spanning_closure(l, &gens)).map_err(err)?;
    let rad_f = f.radical();
    if rad_f.dim() == 0 || rad_f.dim() == l.dim() {
        return Err(format!("case 2 algebra: dim Rad(f) = {}", rad_f.dim()));
    }
    for y in rad_f.basis() {
        passed(&fourth_power_check(l, &f, &gens[0], y).map_err(err)?)?;
    }
    Ok("Killing values, phi spectra, radical chains over Q and GF(5), G2/GF(3) radicals (0, 7), fourth powers".into())
}

fn c8_threegen() -> Outcome {
    for (a, b, c) in [(0, 0, 0), (-2, 0, 0), (-2, -2, 0), (-2, -2, -2)] {
        passed(&threegen_report(&TriangleParams::<Q>::from_i64(a, b, c, 0)).map_err(err)?)?;
        passed(&threegen_report(&TriangleParams::<Gf7>::from_i64(a, b, c, 0)).map_err(err)?)?;
    }
    Ok("all four cases built and verified over Q and GF(7)".into())
}

fn rootgroups_on<S: Scalar>(seed: u64) -> Result<(), String> {
    [(CartanType::A, 2), (CartanType::A, 3), (CartanType::D, 4)]
        .par_iter()
        .try_for_each(|&(ty, n)| {
            let c = chevalley_algebra::<S>(ty, n).map_err(err)?;
            passed(&rootgroups_report(&c, seed).map_err(err)?.0)
        })
}

fn c9_rootgroups() -> Outcome {
    rootgroups_on::<Gf5>(1)?;
    rootgroups_on::<Gf7>(1)?;
    rootgroups_on::<Q>(1)?;
    Ok("A2, A3, D4 over GF(5), GF(7) and Q".into())
}

fn c10_properties() -> Outcome {
    for r in 1..=3 {
        for d in 1..=7 {
            witt_check(r, d)?;
        }
    }
    for (k, l) in validator_algebras().iter().enumerate() {
        for seed in 0..8 {
            validator_check(l, 100 * k as u64 + seed)?;
        }
    }
    for seed in 0..4 {
        for (ty, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2)] {
            cor_bracket_extremal_check::<Q>(ty, n, seed)?;
            cor_bracket_extremal_check::<Gf7>(ty, n, seed)?;
        }
        for r in 2..=4 {
            cor_sandwich_check::<Q>(r, seed)?;
            cor_sandwich_check::<Gf5>(r, seed)?;
        }
        for (ty, n) in [(CartanType::A, 2), (CartanType::C, 3), (CartanType::D, 4)] {
            form_preservation_check::<Q>(ty, n, seed)?;
            form_preservation_check::<Gf5>(ty, n, seed)?;
        }
    }
    Ok("validators, Witt dimensions, bracket and sandwich corollaries, form preservation".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("sandwich algebra dimensions", c1_sandwich_dims),
        ("associative companion dimensions", c2_assoc_dims),
        ("four-generator monomial basis", c3_four_generator_basis),
        ("minimal extremal generation", c4_mingen),
        ("long root extremality", c5_long_roots),
        ("extremal form", c6_extremal_form),
        ("Killing form and radicals", c7_radicals),
        ("three extremal generators", c8_threegen),
        ("abstract root groups", c9_rootgroups),
        ("property suites", c10_properties),
    ];
    let results: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, run)| {
            let start = Instant::now();
            let out =
                catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
            (out, start.elapsed().as_secs_f64())
        })
        .collect();
    let mut failures = 0;
    for (i, ((name, _), (out, secs))) in criteria.iter().zip(&results).enumerate() {
        let (status, detail) = match out {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {status} {name} ({secs:.1}s): {detail}",
            i + 1
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
