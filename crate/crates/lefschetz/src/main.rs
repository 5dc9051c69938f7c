//! Command-line front end: scriptable, deterministic reports over the
//! library pipeline.  Exit code 0 means the requested computation (and
//! any verification it encodes) completed successfully.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use lefschetz::error::Error;
use lefschetz::intlinalg::{cokernel, smith_normal_form, IntMatrix};
use lefschetz::pipeline::{
    genus_search, min_section_degree, sections_with_degree,
    sections_with_degree_in_box, zeta_of_endomorphism, SectionClass, ZetaFunction,
};
use lefschetz::surface::{
    apply_h, classify_region, stretch_factor_certificate, x0, CubicFieldElt,
    PointAY, RegionId,
};
use lefschetz::unipoly::largest_real_root_interval;
use lefschetz::words::{FreeEndomorphism, WordIdentitySet};

#[derive(Parser)]
#[command(
    name = "lefschetz",
    about = "Multivariable Lefschetz zeta functions of mapping tori: \
             section classes, stretch factors, and exact surface dynamics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form and cokernel of an integer matrix file
    Snf {
        /// Matrix file: one row per line, space-separated integers
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Zeta function of a free-group endomorphism file
    Zeta {
        /// Endomorphism file: generator list, then `g -> w1 w2 ...` lines
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Section-class enumeration and divisibility searches
    Sections(SectionsArgs),
    /// Exact verifications on the Arnoux-Yoccoz surface
    Ay(AyArgs),
    /// Verify the equations of a word-identity dataset
    VerifyWords {
        /// Dataset file with `gens`, `def`, and `check` directives
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct SectionsArgs {
    /// Endomorphism file
    file: String,
    /// Enumerate section classes with this Euler characteristic
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["min_degree", "genus_search"])]
    euler: Option<i64>,
    /// Report the minimum section degree and a witness class
    #[arg(long, conflicts_with = "genus_search")]
    min_degree: bool,
    /// Divisibility search over a genus range, e.g. 4..10
    #[arg(long, value_name = "LO..HI")]
    genus_search: Option<String>,
    /// Override the |a| search bound
    #[arg(long)]
    bound: Option<i64>,
    /// Width of root-isolating intervals, as `p/q` or an integer
    #[arg(long, default_value = "1/1000000000")]
    tol: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct AyArgs {
    /// Verify the period-two orbit of the base point (or of --point)
    #[arg(long, conflicts_with = "stretch")]
    verify_orbit: bool,
    /// Report the stretch factor certificate and its largest real root
    #[arg(long)]
    stretch: bool,
    /// Point to iterate, as `(c0,c1,c2),(c0,c1,c2)` rational triples
    #[arg(long, requires = "verify_orbit")]
    point: Option<String>,
    /// Width of root-isolating intervals, as `p/q` or an integer
    #[arg(long, default_value = "1/1000000000")]
    tol: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Snf { file, format } => cmd_snf(&file, format),
        Command::Zeta { file, format } => cmd_zeta(&file, format),
        Command::Sections(args) => cmd_sections(&args),
        Command::Ay(args) => cmd_ay(&args),
        Command::VerifyWords { file, format } => cmd_verify_words(&file, format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))
}

fn parse_tol(s: &str) -> Result<BigRational, Error> {
    let tol = parse_rational(s)?;
    if !tol.is_positive() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    Ok(tol)
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = |_| Error::Invalid(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(bad)?;
            let d: BigInt = d.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::Invalid(format!("invalid rational `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(bad)?;
            Ok(BigRational::from(n))
        }
    }
}

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn json_int_list(xs: &[BigInt]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn diag(m: &IntMatrix) -> Vec<BigInt> {
    (0..m.rows().min(m.cols())).map(|i| m.get(i, i).clone()).collect()
}

fn row(m: &IntMatrix, i: usize) -> Vec<BigInt> {
    (0..m.cols()).map(|j| m.get(i, j).clone()).collect()
}

fn cmd_snf(file: &str, format: Format) -> Result<ExitCode, Error> {
    let m = IntMatrix::parse(&read(file)?)?;
    let snf = smith_normal_form(&m);
    let coker = cokernel(&m);
    let projection_rows: Vec<Vec<BigInt>> =
        (0..coker.projection.rows()).map(|i| row(&coker.projection, i)).collect();
    match format {
        Format::Text => {
            println!("diagonal: {}", json_int_list(&diag(&snf.d)));
            println!("torsion: {}", json_int_list(&coker.torsion_invariants));
            println!("free rank: {}", coker.free_rank);
            for r in &projection_rows {
                println!("projection: {}", json_int_list(r));
            }
        }
        Format::Structured => {
            let rows: Vec<String> = projection_rows.iter().map(|r| json_int_list(r)).collect();
            println!(
                "{{\"diagonal\":{},\"torsion\":{},\"free_rank\":{},\"projection\":[{}]}}",
                json_int_list(&diag(&snf.d)),
                json_int_list(&coker.torsion_invariants),
                coker.free_rank,
                rows.join(",")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_zeta(file: &str) -> Result<(lefschetz::pipeline::Model, ZetaFunction), Error> {
    let phi = FreeEndomorphism::parse(&read(file)?)?;
    zeta_of_endomorphism(&phi)
}

fn cmd_zeta(file: &str, format: Format) -> Result<ExitCode, Error> {
    let (model, z) = load_zeta(file)?;
    let psi_rows: Vec<Vec<BigInt>> =
        (0..model.psi.rows()).map(|i| row(&model.psi, i)).collect();
    let deck_names = lefschetz::laurent::deck_var_names(z.num_deck_vars);
    let deck_refs: Vec<&str> = deck_names.iter().map(|s| s.as_str()).collect();
    let reduced = z.reduced.as_ref().map(|p| z.render(p));
    match format {
        Format::Text => {
            for r in &psi_rows {
                println!("projection: {}", json_int_list(r));
            }
            println!("edge action:");
            print!("{}", model.f1.render(&deck_refs));
            println!("numerator: {}", z.render(&z.numerator));
            println!("denominator: {}", z.render(&z.denominator));
            match &reduced {
                Some(p) => println!("reduced: {p}"),
                None => println!("reduced: not reducible"),
            }
        }
        Format::Structured => {
            let rows: Vec<String> = psi_rows.iter().map(|r| json_int_list(r)).collect();
            let reduced_json = match &reduced {
                Some(p) => format!("\"{}\"", json_escape(p)),
                None => "null".to_string(),
            };
            println!(
                "{{\"projection\":[{}],\"numerator\":\"{}\",\"denominator\":\"{}\",\"reduced\":{}}}",
                rows.join(","),
                json_escape(&z.render(&z.numerator)),
                json_escape(&z.render(&z.denominator)),
                reduced_json
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn root_decimal(s: &SectionClass) -> String {
    match &s.leading_root {
        Some((lo, hi)) => {
            let mid = (lo + hi) / BigRational::from(BigInt::from(2));
            format!("{:.9}", mid.to_f64().unwrap_or(f64::NAN))
        }
        None => "none".to_string(),
    }
}

fn section_line(s: &SectionClass) -> String {
    format!(
        "(a,b)=({},{})  degree {}  poly {}  leading root {}",
        s.class.a[0],
        s.class.b,
        s.degree,
        s.poly,
        root_decimal(s)
    )
}

fn section_json(s: &SectionClass, extra: &str) -> String {
    format!(
        "{{\"a\":{},\"b\":{},\"degree\":{},\"poly\":\"{}\",\"leading_root\":\"{}\"{extra}}}",
        s.class.a[0],
        s.class.b,
        s.degree,
        json_escape(&s.poly.to_string()),
        root_decimal(s)
    )
}

fn cmd_sections(args: &SectionsArgs) -> Result<ExitCode, Error> {
    parse_tol(&args.tol)?;
    let (_, z) = load_zeta(&args.file)?;
    if let Some(chi) = args.euler {
        if chi >= 0 {
            return Err(Error::Invalid(
                "Euler characteristic of a section is negative".into(),
            ));
        }
        let d = (-chi) as usize;
        let found = match args.bound {
            Some(b) => sections_with_degree_in_box(&z, d, b)?,
            None => sections_with_degree(&z, d)?,
        };
        match args.format {
            Format::Text => {
                if found.is_empty() {
                    println!("no sections with Euler characteristic {chi}; exclusion verified");
                } else {
                    for s in &found {
                        println!("{}", section_line(s));
                    }
                }
            }
            Format::Structured => {
                let items: Vec<String> =
                    found.iter().map(|s| section_json(s, "")).collect();
                println!(
                    "{{\"euler\":{chi},\"sections\":[{}]}}",
                    items.join(",")
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    if args.min_degree {
        let d = min_section_degree(&z)?;
        let witnesses = sections_with_degree(&z, d)?;
        let w = &witnesses[0];
        match args.format {
            Format::Text => {
                println!("minimum degree: {d} at (a,b)=({},{})", w.class.a[0], w.class.b);
            }
            Format::Structured => {
                println!(
                    "{{\"min_degree\":{d},\"witness\":{}}}",
                    section_json(w, "")
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(range) = &args.genus_search {
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| Error::Invalid(format!("invalid range `{range}`, expected LO..HI")))?;
        let lo: usize = lo.trim().parse().map_err(|_| Error::Invalid("invalid range".into()))?;
        let hi: usize = hi.trim().parse().map_err(|_| Error::Invalid("invalid range".into()))?;
        let reports = genus_search(&z, lo, hi)?;
        match args.format {
            Format::Text => {
                for r in &reports {
                    println!("genus {}: modulus {}", r.genus, r.modulus.render("x"));
                    for (s, verdict) in &r.entries {
                        println!("  {}  divides: {verdict}", section_line(s));
                    }
                }
            }
            Format::Structured => {
                let mut out = String::from("{\"genus_search\":[");
                for (i, r) in reports.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let items: Vec<String> = r
                        .entries
                        .iter()
                        .map(|(s, v)| section_json(s, &format!(",\"divides\":{v}")))
                        .collect();
                    write!(
                        out,
                        "{{\"genus\":{},\"modulus\":\"{}\",\"classes\":[{}]}}",
                        r.genus,
                        json_escape(&r.modulus.render("x")),
                        items.join(",")
                    )
                    .unwrap();
                }
                out.push_str("]}");
                println!("{out}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    Err(Error::Invalid(
        "choose one of --euler, --min-degree, --genus-search".into(),
    ))
}

fn parse_triple(s: &str) -> Result<CubicFieldElt, Error> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Invalid(format!("invalid triple `{s}`")))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Invalid(format!("invalid triple `{s}`")));
    }
    Ok(CubicFieldElt::new(
        parse_rational(parts[0])?,
        parse_rational(parts[1])?,
        parse_rational(parts[2])?,
    ))
}

fn parse_point(s: &str) -> Result<PointAY, Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let split = s
        .find("),(")
        .ok_or_else(|| Error::Invalid(format!("invalid point `{s}`")))?;
    let x = parse_triple(&s[..split + 1])?;
    let y = parse_triple(&s[split + 2..])?;
    Ok(PointAY::new(x, y))
}

fn region_name(r: RegionId) -> &'static str {
    match r {
        RegionId::R1 => "R1",
        RegionId::R2 => "R2",
        RegionId::R3 => "R3",
        RegionId::R4 => "R4",
        RegionId::Boundary => "boundary",
    }
}

fn cmd_ay(args: &AyArgs) -> Result<ExitCode, Error> {
    let tol = parse_tol(&args.tol)?;
    if args.stretch {
        let p = stretch_factor_certificate()?;
        let (lo, hi) = largest_real_root_interval(&p, &tol)?;
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        let approx = mid.to_f64().unwrap_or(f64::NAN);
        match args.format {
            Format::Text => {
                println!("stretch factor: largest root of {}", p.render("x"));
                println!("approximation: {approx:.9}");
                println!("vanishes exactly at 1/alpha in Q(alpha): confirmed");
            }
            Format::Structured => {
                println!(
                    "{{\"minimal_polynomial\":\"{}\",\"approximation\":\"{approx:.9}\",\"vanishes_at_inverse_alpha\":true}}",
                    json_escape(&p.render("x"))
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    if args.verify_orbit {
        let p0 = match &args.point {
            Some(s) => parse_point(s)?,
            None => x0(),
        };
        let r0 = classify_region(&p0)?;
        let p1 = apply_h(&p0)?;
        let moved = p1 != p0;
        let r1 = classify_region(&p1).ok();
        let p2 = r1.and_then(|r| {
            if r == RegionId::Boundary {
                None
            } else {
                apply_h(&p1).ok()
            }
        });
        let period_two = p2.as_ref() == Some(&p0);
        match args.format {
            Format::Text => {
                println!("point: {}  region {}", p0.render(), region_name(r0));
                println!(
                    "h(point): {}  ({:.6}, {:.6})  moved: {moved}",
                    p1.render(),
                    p1.x.to_f64(),
                    p1.y.to_f64()
                );
                match &p2 {
                    Some(q) => println!("h^2(point): {}  returns: {period_two}", q.render()),
                    None => println!("h^2(point): not defined (image left the domain)"),
                }
                if args.point.is_none() {
                    if !moved || !period_two {
                        return Err(Error::Invalid("period-two verification failed".into()));
                    }
                    println!("h^2(x0) = x0 confirmed; h(x0) != x0 confirmed");
                }
            }
            Format::Structured => {
                let h2 = match &p2 {
                    Some(q) => format!("\"{}\"", json_escape(&q.render())),
                    None => "null".to_string(),
                };
                println!(
                    "{{\"point\":\"{}\",\"region\":\"{}\",\"image\":\"{}\",\"moved\":{moved},\"second_image\":{h2},\"period_two\":{period_two}}}",
                    json_escape(&p0.render()),
                    region_name(r0),
                    json_escape(&p1.render())
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    Err(Error::Invalid("choose one of --verify-orbit, --stretch".into()))
}

fn cmd_verify_words(file: &str, format: Format) -> Result<ExitCode, Error> {
    let set = WordIdentitySet::parse(&read(file)?)?;
    let results = set.verify_all();
    let all_ok = results.iter().all(|(_, _, ok)| *ok);
    match format {
        Format::Text => {
            for (lhs, rhs, ok) in &results {
                println!(
                    "{}: {} == {}",
                    if *ok { "verified" } else { "FAILED" },
                    lhs,
                    rhs
                );
            }
            println!(
                "{} of {} identities verified",
                results.iter().filter(|(_, _, ok)| *ok).count(),
                results.len()
            );
        }
        Format::Structured => {
            let items: Vec<String> = results
                .iter()
                .map(|(l, r, ok)| {
                    format!(
                        "{{\"lhs\":\"{}\",\"rhs\":\"{}\",\"verified\":{ok}}}",
                        json_escape(l),
                        json_escape(r)
                    )
                })
                .collect();
            println!("{{\"checks\":[{}],\"all_verified\":{all_ok}}}", items.join(","));
        }
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
