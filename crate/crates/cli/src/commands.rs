use std::fs;
use std::path::Path;
use std::process::ExitCode;

use num_bigint::BigInt;
use real_enum_core::cache::{Cache, CacheKey};
use real_enum_core::checks::{check_monotonicity, check_table, Report, Status};
use real_enum_core::floors::{relative_real_counts_f2, toric_counts};
use real_enum_core::lattice::{DivisorClass, SurfaceModel};
use real_enum_core::mod2homology::{
    builtin_model, quotient_dimension, verify_claimed_basis, RealHomologyModel, BUILTIN_MODELS,
};
use real_enum_core::sumformula::{
    ellipsoid_identity, quadric_identity_complex, quadric_identity_real, welschinger_ellipsoid_with,
    CALIBRATED_GAMMA,
};
use real_enum_core::table::{Flags, InvariantTable, TableEntry, TableMeta, CONVENTION_F_MASS, F_STANDARD};
use serde::{Deserialize, Serialize};

use crate::error::{input, CliError};
use crate::{CacheCommand, Check, ClassArgs, Cli, Command, Compute, Format, QuadricArgs};

const SOURCE: &str = concat!("real-enum ", env!("CARGO_PKG_VERSION"), " floor diagrams");

pub fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Compute(c) => compute(cli, c),
        Command::Check(c) => check(cli, c),
        Command::Ingest { file } => ingest(cli, file),
        Command::Cache(c) => cache_command(cli, c),
    }
}

fn cache(cli: &Cli) -> Result<Option<Cache>, CliError> {
    if cli.no_cache {
        return Ok(None);
    }
    let dir = match &cli.cache_dir {
        Some(dir) => dir.clone(),
        None => Cache::default_dir()?,
    };
    Ok(Some(Cache::new(dir)))
}

fn print_table(cli: &Cli, table: &InvariantTable) {
    match cli.format {
        Format::Json => println!("{}", table.to_json()),
        Format::Csv => print!("{}", table.to_csv()),
        Format::Text => print!("{}", table.to_text()),
    }
}

fn print_report(cli: &Cli, report: &Report) -> ExitCode {
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

// --- compute ---------------------------------------------------------------

fn resolve_class(args: &ClassArgs) -> Result<(SurfaceModel, DivisorClass), CliError> {
    let surface = SurfaceModel::builtin(&args.surface)?;
    let coords = match (&args.class, args.degree) {
        (Some(c), _) => c.clone(),
        (None, Some(d)) if surface.rank() == 1 => vec![d],
        (None, Some(d)) if surface.name().starts_with("cp2_") => {
            let mut c = vec![0; surface.rank()];
            c[0] = d;
            c
        }
        (None, Some(_)) => {
            return Err(input(format!("--degree needs a plane; give --class for {}", surface.name())))
        }
        (None, None) => return Err(input("give --degree or --class")),
    };
    let class = surface.class(coords)?;
    Ok((surface, class))
}

fn meta(surface: &str, real_structure: &str, l: &str, kind: &str) -> TableMeta {
    TableMeta {
        surface: surface.into(),
        real_structure: real_structure.into(),
        l: l.into(),
        f: F_STANDARD.into(),
        flags: Flags::default(),
        convention: Some(CONVENTION_F_MASS.into()),
        kind: Some(kind.into()),
        source: Some(SOURCE.into()),
    }
}

fn standard_real_part(surface: &str) -> (&'static str, &'static str) {
    match surface {
        "cp2" => ("standard", "RP2"),
        "f0" => ("hyperboloid", "T2"),
        _ => ("standard", "RX"),
    }
}

/// Looks the key up in the cache, or computes and stores the table.
fn cached(
    cli: &Cli,
    key: CacheKey,
    compute: impl FnOnce() -> Result<InvariantTable, CliError>,
) -> Result<InvariantTable, CliError> {
    let cache = cache(cli)?;
    if let Some(c) = &cache {
        if let Some(table) = c.get(&key)? {
            return Ok(table);
        }
    }
    let table = compute()?;
    if let Some(c) = &cache {
        c.put(&key, &table)?;
    }
    Ok(table)
}

fn compute(cli: &Cli, c: &Compute) -> Result<ExitCode, CliError> {
    let exec = cli.execution();
    let table = match c {
        Compute::Gw(args) | Compute::Welschinger(args) => {
            let (surface, class) = resolve_class(args)?;
            let kind = if matches!(c, Compute::Gw(_)) { "gw" } else { "welschinger" };
            let key = CacheKey::new(surface.name(), class.coords(), kind);
            cached(cli, key, || {
                let counts = toric_counts(&surface, &class, exec)?;
                let value = if kind == "gw" { BigInt::from(counts.complex) } else { counts.real };
                let (real, l) = standard_real_part(surface.name());
                let mut t = InvariantTable::new(meta(surface.name(), real, l, kind));
                t.entries.push(TableEntry { class: class.coords().to_vec(), s: 0, value });
                Ok(t)
            })?
        }
        Compute::Ellipsoid { degree } => {
            let d = u32::try_from(*degree)
                .ok()
                .filter(|d| *d > 0)
                .ok_or_else(|| input(format!("degree {degree} must be positive")))?;
            let class = [i64::from(d), i64::from(d)];
            let key = CacheKey::new("f0", &class, "ellipsoid");
            cached(cli, key, || {
                let value = welschinger_ellipsoid_with(d, exec)?;
                let mut t = InvariantTable::new(meta("f0", "ellipsoid", "S2", "welschinger"));
                t.entries.push(TableEntry { class: class.to_vec(), s: 0, value });
                Ok(t)
            })?
        }
        Compute::Strata { class, k_max } => {
            let f2 = SurfaceModel::f2();
            let d = f2.class(class.clone())?;
            let operation = match k_max {
                Some(k) => format!("strata:k_max={k}"),
                None => "strata".to_string(),
            };
            let key = CacheKey::new("f2", d.coords(), operation);
            cached(cli, key, || {
                let strata = relative_real_counts_f2(&d, *k_max, exec)?;
                let e = f2.distinguished("E")?;
                let mut t = InvariantTable::new(meta("f2", "standard", "RX", "relative-welschinger"));
                for (key, value) in strata.entries {
                    let shifted = d.sub_multiple(i64::from(key.k), &e)?;
                    t.entries.push(TableEntry { class: shifted.coords().to_vec(), s: 0, value });
                }
                Ok(t)
            })?
        }
    };
    print_table(cli, &table);
    Ok(ExitCode::SUCCESS)
}

// --- check -----------------------------------------------------------------

fn quadric_classes(args: &QuadricArgs) -> Result<Vec<(i64, i64)>, CliError> {
    if let Some(c) = &args.class {
        return match c.as_slice() {
            &[a, b] if a >= 0 && b >= 0 && a + b > 0 => Ok(vec![(a, b)]),
            _ => Err(input(format!("bidegree {c:?} must be two nonnegative integers, not both 0"))),
        };
    }
    if args.max_total < 1 {
        return Err(input("--max-total must be at least 1"));
    }
    let n = args.max_total;
    Ok((0..=n).flat_map(|a| (0..=n - a).map(move |b| (a, b))).filter(|&(a, b)| a + b > 0).collect())
}

fn identity_line(report: &mut Report, entry: String, check: &str, lhs: &BigInt, rhs: &BigInt) {
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    report.push(entry, check, status, format!("{lhs} {} {rhs}", if lhs == rhs { "==" } else { "!=" }));
}

#[derive(Debug, Deserialize)]
struct SeriesPoint {
    chi: i64,
    #[serde(deserialize_with = "integer_or_string")]
    value: BigInt,
}

fn integer_or_string<'de, D: serde::Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    use serde::de::Error;
    match serde_json::Value::deserialize(d)? {
        serde_json::Value::String(s) => s.parse().map_err(|_| D::Error::custom(format!("`{s}` is not an integer"))),
        serde_json::Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| D::Error::custom(format!("`{n}` is not an integer"))),
        other => Err(D::Error::custom(format!("expected an integer, got {other}"))),
    }
}

fn check(cli: &Cli, c: &Check) -> Result<ExitCode, CliError> {
    let exec = cli.execution();
    let f0 = SurfaceModel::f0();
    let mut report = Report::default();
    match c {
        Check::AbvComplex(args) => {
            for (a, b) in quadric_classes(args)? {
                let r = quadric_identity_complex(&f0.class(vec![a, b])?, exec)?;
                identity_line(&mut report, format!("f0({a},{b})"), "abv-complex", &r.lhs, &r.rhs);
            }
        }
        Check::AbvReal { classes, gamma } => {
            let gamma = gamma.unwrap_or(CALIBRATED_GAMMA);
            for (a, b) in quadric_classes(classes)? {
                let r = quadric_identity_real(&f0.class(vec![a, b])?, gamma, exec)?;
                identity_line(&mut report, format!("f0({a},{b})"), "abv-real", &r.lhs, &r.rhs);
            }
        }
        Check::ClassTrop { max_degree } => {
            if *max_degree == 0 {
                return Err(input("--max-degree must be at least 1"));
            }
            for d in 1..=*max_degree {
                let r = ellipsoid_identity(d, CALIBRATED_GAMMA, exec)?;
                let entry = format!("ellipsoid d={d}");
                identity_line(&mut report, entry.clone(), "class-trop", &r.direct, &r.combined);
                let status = if r.higher_strata_vanish { Status::Pass } else { Status::Fail };
                report.push(entry, "class-trop", status, "strata with k >= 1 contribute 0");
            }
        }
        Check::Table { files } => {
            for file in files {
                let table = InvariantTable::from_json(&read(file)?)?;
                report.extend(check_table(&table)?);
            }
        }
        Check::Monotonicity { file } => {
            let series: Vec<SeriesPoint> = serde_json::from_str(&read(file)?)
                .map_err(|e| input(format!("{}: {e}", file.display())))?;
            let series: Vec<(i64, BigInt)> = series.into_iter().map(|p| (p.chi, p.value)).collect();
            report = check_monotonicity(&series);
        }
        Check::Homology { model, model_file } => {
            let models = match (model, model_file) {
                (Some(name), _) => vec![builtin_model(name)?],
                (None, Some(path)) => vec![RealHomologyModel::from_json(&read(path)?)?],
                (None, None) => {
                    let mut names: Vec<String> = (1..=5).map(|n| format!("conic_bundle({n})")).collect();
                    names.extend(BUILTIN_MODELS[1..].iter().map(|s| s.to_string()));
                    names.iter().map(|n| builtin_model(n)).collect::<Result<_, _>>()?
                }
            };
            for m in models {
                let dim = quotient_dimension(&m)?;
                let ok = verify_claimed_basis(&m)?;
                report.push(
                    m.name.clone(),
                    "homology",
                    if ok { Status::Pass } else { Status::Fail },
                    format!(
                        "dimension {dim}, claimed basis of {} {}",
                        m.claimed_basis.len(),
                        if ok { "verified" } else { "rejected" }
                    ),
                );
            }
        }
    }
    Ok(print_report(cli, &report))
}

// --- ingest and cache --------------------------------------------------------

#[derive(Debug, Serialize)]
struct Listing {
    file: String,
    surface: String,
    kind: Option<String>,
    source: Option<String>,
    entries: usize,
}

fn ingest(cli: &Cli, file: &Path) -> Result<ExitCode, CliError> {
    let table = InvariantTable::from_json(&read(file)?)?;
    table.validate_for_ingest()?;
    let cache = cache(cli)?.ok_or_else(|| input("ingest needs a cache; drop --no-cache"))?;
    let path = cache.put_table(&table)?;
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({ "stored": path.display().to_string(), "entries": table.entries.len() })
        ),
        Format::Csv => println!("stored,entries\n{},{}", path.display(), table.entries.len()),
        Format::Text => println!("stored {} entries in {}", table.entries.len(), path.display()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cache_command(cli: &Cli, c: &CacheCommand) -> Result<ExitCode, CliError> {
    let cache = cache(cli)?.ok_or_else(|| input("cache commands need a cache; drop --no-cache"))?;
    match c {
        CacheCommand::Ls => {
            let listing: Vec<Listing> = cache
                .list()?
                .into_iter()
                .map(|(path, t)| Listing {
                    file: path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
                    surface: t.meta.surface,
                    kind: t.meta.kind,
                    source: t.meta.source,
                    entries: t.entries.len(),
                })
                .collect();
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&listing).expect("listing serializes")),
                Format::Csv => {
                    println!("file,surface,kind,entries");
                    for l in &listing {
                        println!("{},{},{},{}", l.file, l.surface, l.kind.as_deref().unwrap_or(""), l.entries);
                    }
                }
                Format::Text => {
                    for l in &listing {
                        println!(
                            "{}  {} {} ({} entries)",
                            l.file,
                            l.surface,
                            l.kind.as_deref().unwrap_or("-"),
                            l.entries
                        );
                    }
                }
            }
        }
        CacheCommand::Clear => {
            let n = cache.clear()?;
            match cli.format {
                Format::Json => println!("{}", serde_json::json!({ "removed": n })),
                Format::Csv => println!("removed\n{n}"),
                Format::Text => println!("removed {n} cached tables from {}", cache.dir().display()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
