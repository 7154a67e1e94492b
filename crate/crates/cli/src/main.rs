//! Command-line reports for the torus action on the deformation space of
//! LeBrun twistor spaces over nCP^2.
//!
//! Subcommands: `rep` (the weight decomposition of H^1(Theta_Z)), `alpha`
//! (the symmetry-algebra image and its cokernel), `audit` (the dimension
//! ledger), `cycle` (the invariant curve cycle), `subgroups` (the U(1)
//! scan), `verify` (the full invariant suite over a range of n).
//!
//! Exit codes: 0 success, 1 invariant failure, 2 invalid arguments.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use twistor_deform::cycle::{
    build_cycle, classify_on, isotropy_weight, pointwise_stabilizer, CycleModel,
};
use twistor_deform::deformation::{
    alpha_image, assemble, closed_form_rep, cokernel_rep, dimension_audit, gamma_vectors,
    Configuration,
};
use twistor_deform::exact::Rational;
use twistor_deform::moduli::{
    default_height, fixed_dimension, moduli_dimension, scan, torus_invariant_dimension,
    SubgroupReport,
};
use twistor_deform::report::{CycleRowJson, NReport, SubgroupJson};
use twistor_deform::weights::{SubgroupDirection, WeightRep};

#[derive(Parser)]
#[command(name = "twistor-deform", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ConfigArgs {
    /// Number of projective-plane summands.
    #[arg(long)]
    n: usize,
    /// Parameters a_1 < ... < a_n as rationals, e.g. `1/2,1,3/2`.
    /// Defaults to a_i = i.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    a: Option<Vec<Rational>>,
}

impl ConfigArgs {
    fn configuration(&self) -> Result<Configuration, twistor_deform::Error> {
        match &self.a {
            None => Configuration::default_for(self.n),
            Some(a) => {
                if a.len() != self.n {
                    return Err(twistor_deform::Error::InvalidConfiguration(format!(
                        "--a lists {} values but --n is {}",
                        a.len(),
                        self.n
                    )));
                }
                Configuration::new(a.clone())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight decomposition of H^1(Theta_Z) with dimensions and
    /// the closed-form comparison verdict.
    Rep {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the gamma vectors, the image rank, and the per-weight cokernel
    /// dimensions; optionally re-check the rank over random configurations.
    Alpha {
        #[command(flatten)]
        config: ConfigArgs,
        /// Repeat over this many random valid configurations.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the random configurations.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the dimension ledger for one n.
    Audit {
        #[arg(long)]
        n: usize,
    },
    /// Print the invariant cycle of 2n+4 rational curves; with --subgroup,
    /// also the isotropy weights and the classification.
    Cycle {
        #[arg(long)]
        n: usize,
        /// A subgroup direction `p,q`.
        #[arg(long, value_parser = parse_direction)]
        subgroup: Option<SubgroupDirection>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan primitive subgroup directions up to a height bound.
    Subgroups {
        #[arg(long)]
        n: usize,
        /// Height bound max(|p|,|q|); defaults to n+5.
        #[arg(long)]
        height: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full invariant suite over a range of n; exit code 0 iff all
    /// checks pass. Emits one JSON report per n on stdout.
    Verify {
        #[arg(long, default_value_t = 3)]
        n_from: usize,
        #[arg(long, default_value_t = 12)]
        n_to: usize,
        /// Seed for the random configurations.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s).map_err(|e| e.to_string())
}

fn parse_direction(s: &str) -> Result<SubgroupDirection, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `p,q`, got `{s}`"))?;
    let p: i64 = p.trim().parse().map_err(|_| format!("bad integer `{p}`"))?;
    let q: i64 = q.trim().parse().map_err(|_| format!("bad integer `{q}`"))?;
    SubgroupDirection::new(p, q).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, twistor_deform::Error> {
    match cli.command {
        Command::Rep { config, format } => cmd_rep(&config, format),
        Command::Alpha {
            config,
            samples,
            seed,
        } => cmd_alpha(&config, samples, seed),
        Command::Audit { n } => cmd_audit(n),
        Command::Cycle {
            n,
            subgroup,
            format,
        } => cmd_cycle(n, subgroup, format),
        Command::Subgroups { n, height, format } => {
            cmd_subgroups(n, height.unwrap_or_else(|| default_height(n)), format)
        }
        Command::Verify { n_from, n_to, seed } => cmd_verify(n_from, n_to, seed),
    }
}

fn rep_line(name: &str, rep: &WeightRep) -> String {
    format!("{name}: {rep}   (dim {})", rep.dimension())
}

fn cmd_rep(config: &ConfigArgs, format: Format) -> Result<ExitCode, twistor_deform::Error> {
    let cfg = config.configuration()?;
    let built = assemble(&cfg)?;
    let closed = closed_form_rep(cfg.n())?;
    let matches = built == closed;

    match format {
        Format::Text => {
            println!("{cfg}");
            println!("{}", rep_line("rep1 (H1(Theta_Y))       ", &built.rep1));
            println!("{}", rep_line("rep2 (H1(N_C0/Z))        ", &built.rep2));
            println!("{}", rep_line("rep3 (H1(N_C0bar/Z))     ", &built.rep3));
            println!("{}", rep_line("total (H1(Theta_Z))      ", &built.total()));
            println!(
                "closed-form check: {}",
                if matches { "match" } else { "MISMATCH" }
            );
        }
        Format::Json => {
            let mut value = serde_json::to_value(NReport::new(cfg.n(), &built, &[]))
                .expect("report serializes");
            value["closed_form_match"] = serde_json::Value::Bool(matches);
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Format::Csv => {
            println!("block,weight,multiplicity");
            for (name, rep) in [
                ("rep1", &built.rep1),
                ("rep2", &built.rep2),
                ("rep3", &built.rep3),
            ] {
                for (w, mult) in rep.entries() {
                    println!("{name},\"{w}\",{mult}");
                }
            }
        }
    }
    Ok(if matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Random strictly increasing positive rationals for one configuration.
fn random_configuration(n: usize, rng: &mut StdRng) -> Configuration {
    let mut value = Rational::zero();
    let a = (0..n)
        .map(|_| {
            let num = rng.gen_range(1..=20i64);
            let den = rng.gen_range(1..=20i64);
            value = &value + &Rational::new(num, den).expect("nonzero denominator");
            value.clone()
        })
        .collect();
    Configuration::new(a).expect("increasing positive parameters")
}

fn cmd_alpha(
    config: &ConfigArgs,
    samples: Option<usize>,
    seed: u64,
) -> Result<ExitCode, twistor_deform::Error> {
    let cfg = config.configuration()?;
    let gammas = gamma_vectors(&cfg);
    let n = cfg.n();

    println!("{cfg}");
    println!("gamma vectors (blocks nu | u*nu | u^2*nu):");
    for (idx, g) in gammas.iter().enumerate() {
        let mut line = String::new();
        for (b, block) in [
            twistor_deform::deformation::CoordinateBlock::Nu,
            twistor_deform::deformation::CoordinateBlock::UNu,
            twistor_deform::deformation::CoordinateBlock::U2Nu,
        ]
        .into_iter()
        .enumerate()
        {
            if b > 0 {
                line.push_str(" | ");
            }
            let parts: Vec<String> = g.block(block).iter().map(|x| x.to_string()).collect();
            write!(line, "{}", parts.join(", ")).expect("string write");
        }
        println!("  gamma{}: [{line}]", idx + 1);
    }

    let basis = alpha_image(&cfg)?;
    println!("image rank: {}", basis.rows());
    let rep = cokernel_rep(&cfg)?;
    println!("cokernel weights: {rep}   (dim {})", rep.dimension());

    if let Some(samples) = samples {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut stable = true;
        for i in 0..samples {
            let sample = random_configuration(n, &mut rng);
            let rank = alpha_image(&sample)?.rows();
            if rank != 5 {
                stable = false;
                println!("sample {i}: RANK {rank} for {sample}");
            }
        }
        println!(
            "rank stability over {samples} random configurations: {}",
            if stable {
                "rank 5 throughout"
            } else {
                "UNSTABLE"
            }
        );
        if !stable {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_audit(n: usize) -> Result<ExitCode, twistor_deform::Error> {
    let checks = dimension_audit(n)?;
    let mut all_pass = true;
    println!("dimension audit for n = {n}:");
    for check in &checks {
        all_pass &= check.passed;
        println!("  {check}");
    }
    println!(
        "{}",
        if all_pass {
            "all checks pass"
        } else {
            "FAILURES"
        }
    );
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cycle_rows(model: &CycleModel, subgroup: Option<SubgroupDirection>) -> Vec<CycleRowJson> {
    model
        .curves
        .iter()
        .map(|c| CycleRowJson::new(model, c, subgroup.map(|k| isotropy_weight(c, k))))
        .collect()
}

fn cmd_cycle(
    n: usize,
    subgroup: Option<SubgroupDirection>,
    format: Format,
) -> Result<ExitCode, twistor_deform::Error> {
    let model = build_cycle(n)?;
    let rows = cycle_rows(&model, subgroup);

    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&rows).expect("json"));
        }
        _ => {
            println!(
                "invariant cycle for n = {n} ({} curves):",
                model.curves.len()
            );
            println!(
                "  {:<8} {:<14} {:<10} {:<12} {}",
                "curve",
                "coordinate",
                "tangent",
                "stabilizer",
                if subgroup.is_some() { "isotropy" } else { "" }
            );
            for row in &rows {
                println!(
                    "  {:<8} {:<14} {:<10} {:<12} {}",
                    row.label,
                    row.coordinate_name,
                    row.tangent_character,
                    row.stabilizer,
                    row.isotropy.map(|w| w.to_string()).unwrap_or_default()
                );
            }
            if let Some(k) = subgroup {
                let classification = classify_on(&model, k);
                println!("subgroup {k}: {classification}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn subgroup_csv_row(s: &SubgroupJson) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        s.p,
        s.q,
        s.k_label.as_deref().unwrap_or(""),
        s.fixed_dim,
        s.excess,
        s.moduli_dim.map(|d| d.to_string()).unwrap_or_default(),
        s.semifree,
        s.lebrun
    )
}

fn cmd_subgroups(
    n: usize,
    height: usize,
    format: Format,
) -> Result<ExitCode, twistor_deform::Error> {
    let result = scan(n, height)?;
    let rep = closed_form_rep(n)?;

    match format {
        Format::Json => {
            let report = NReport::from_scan(&rep, &result);
            println!("{}", serde_json::to_string_pretty(&report).expect("json"));
        }
        Format::Csv => {
            println!("p,q,k_label,fixed_dim,excess,moduli_dim,semifree,lebrun");
            for r in &result.reports {
                println!("{}", subgroup_csv_row(&SubgroupJson::from(r)));
            }
        }
        Format::Text => {
            println!(
                "subgroup scan for n = {n}, height {height} ({} directions, torus-invariant dim {}):",
                result.reports.len(),
                result.torus_invariant_dim
            );
            println!(
                "  {:<10} {:<8} {:<10} {:<7} {:<11} classification",
                "direction", "label", "fixed_dim", "excess", "moduli_dim"
            );
            for r in result.reports.iter().filter(|r| r.is_excess) {
                print_subgroup_row(r);
            }
            for r in result.reports.iter().filter(|r| !r.is_excess) {
                print_subgroup_row(r);
            }
            println!(
                "excess subgroups: {}",
                result
                    .excess_set
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_subgroup_row(r: &SubgroupReport) {
    println!(
        "  {:<10} {:<8} {:<10} {:<7} {:<11} {}",
        r.direction.to_string(),
        r.k_label.as_deref().unwrap_or("-"),
        r.fixed_dim,
        r.is_excess,
        r.moduli_dim
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".to_string()),
        r.classification
    );
}

struct VerifyState {
    failures: usize,
}

impl VerifyState {
    fn check(&mut self, n: usize, name: &str, ok: bool) {
        if ok {
            eprintln!("ok   n={n} {name}");
        } else {
            self.failures += 1;
            eprintln!("FAIL n={n} {name}");
        }
    }
}

fn verify_one(
    n: usize,
    seed: u64,
    state: &mut VerifyState,
) -> Result<NReport, twistor_deform::Error> {
    let closed = closed_form_rep(n)?;
    let mut rng = StdRng::seed_from_u64(seed ^ n as u64);

    // Linear-algebra route agrees with the closed form, for the default and
    // random configurations.
    let default_cfg = Configuration::default_for(n)?;
    let mut all_match = assemble(&default_cfg)? == closed;
    for _ in 0..5 {
        let cfg = random_configuration(n, &mut rng);
        all_match &= assemble(&cfg)? == closed;
    }
    state.check(n, "assembled representation matches closed form", all_match);

    let dims_ok = closed.rep1.dimension() == 3 * n - 5
        && closed.rep2.dimension() == 2 * n - 4
        && closed.rep3.dimension() == 2 * n - 4
        && closed.dimension() == 7 * n - 13;
    state.check(n, "dimensions 3n-5 / 2n-4 / 2n-4 / 7n-13", dims_ok);

    let total = closed.total();
    state.check(
        n,
        "conjugation symmetry of the total weight multiset",
        total.negated() == total && closed.rep3 == closed.rep2.negated(),
    );
    state.check(
        n,
        "torus-invariant part has dimension n-1",
        torus_invariant_dimension(n)? == n - 1,
    );

    let expected_excess: Vec<SubgroupDirection> = std::iter::once(SubgroupDirection::k0())
        .chain((1..=n as i64 - 1).map(SubgroupDirection::k))
        .collect();
    let excess = twistor_deform::moduli::excess_subgroups(n, 10 * n)?;
    state.check(
        n,
        "excess subgroups are K0..K(n-1)",
        excess == expected_excess,
    );

    let mut moduli_ok = moduli_dimension(n, SubgroupDirection::k0())? == Some(3 * n - 6);
    for i in 1..=n as i64 - 1 {
        let expected = if i == 1 || i == n as i64 - 1 {
            n
        } else {
            n + 2
        };
        moduli_ok &= moduli_dimension(n, SubgroupDirection::k(i))? == Some(expected);
    }
    state.check(n, "moduli dimensions 3n-6 / n / n+2", moduli_ok);

    let cycle = build_cycle(n)?;
    let mut cycle_ok = cycle.curves.len() == 2 * n + 4;
    for (curve, expected) in cycle.curves.iter().filter_map(|c| {
        use twistor_deform::cycle::CurveLabel;
        match c.label {
            CurveLabel::C0 => Some((c, SubgroupDirection::k0())),
            CurveLabel::E(j) => Some((c, SubgroupDirection::k(j as i64))),
            _ => None,
        }
    }) {
        cycle_ok &= pointwise_stabilizer(curve)? == expected;
    }
    let b0 = cycle.curve(twistor_deform::cycle::CurveLabel::B0).unwrap();
    let bn = cycle.curve(twistor_deform::cycle::CurveLabel::Bn).unwrap();
    for i in 1..=n as i64 - 1 {
        let ki = SubgroupDirection::k(i);
        cycle_ok &= isotropy_weight(b0, ki) == i && isotropy_weight(bn, ki) == n as i64 - i;
        let cls = classify_on(&cycle, ki);
        cycle_ok &= !cls.semifree && !cls.lebrun_compatible;
    }
    let k0_cls = classify_on(&cycle, SubgroupDirection::k0());
    cycle_ok &= k0_cls.semifree && k0_cls.lebrun_compatible;
    state.check(n, "cycle stabilizers, isotropy, classification", cycle_ok);

    let audit_ok = dimension_audit(n)?.iter().all(|c| c.passed);
    state.check(n, "dimension audit", audit_ok);

    // Fixed dimensions through both pipelines on a few random directions.
    let assembled_total = assemble(&default_cfg)?.total();
    let mut pipelines_agree = true;
    for _ in 0..10 {
        let p = rng.gen_range(-50i64..=50);
        let q = rng.gen_range(-50i64..=50);
        let Ok(dir) = SubgroupDirection::new(p, q) else {
            continue;
        };
        pipelines_agree &=
            assembled_total.fixed_subrep(dir).dimension() == fixed_dimension(n, dir)?;
    }
    state.check(
        n,
        "fixed dimensions agree across pipelines",
        pipelines_agree,
    );

    // The emitted report carries the excess subgroups.
    let reports: Vec<SubgroupReport> = excess
        .iter()
        .map(|&k| twistor_deform::moduli::report_for(n, k))
        .collect::<Result<_, _>>()?;
    Ok(NReport::new(n, &closed, &reports))
}

fn cmd_verify(n_from: usize, n_to: usize, seed: u64) -> Result<ExitCode, twistor_deform::Error> {
    if n_from < 3 || n_to < n_from {
        return Err(twistor_deform::Error::InvalidConfiguration(format!(
            "need 3 <= n-from <= n-to, got {n_from}..{n_to}"
        )));
    }
    let mut state = VerifyState { failures: 0 };
    let mut reports = Vec::new();
    for n in n_from..=n_to {
        reports.push(verify_one(n, seed, &mut state)?);
    }
    println!("{}", serde_json::to_string_pretty(&reports).expect("json"));
    if state.failures == 0 {
        eprintln!("verify: all checks pass for n = {n_from}..{n_to}");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("verify: {} failures", state.failures);
        Ok(ExitCode::from(1))
    }
}
