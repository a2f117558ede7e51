//! `qhilb` — command-line front end for the exact-arithmetic toolkit.
//!
//! Exit codes: 0 on success, 1 when a `--check` comparison fails, 2 on
//! usage or input errors.

use clap::{Args, Parser, Subcommand};
use qhilb_core::field::{Field, PrimeField, Rationals};
use qhilb_core::matrix::Mat;
use qhilb_core::ncalgebra::AlgebraSpec;
use qhilb_core::quiver::{QuiverRep, QuiverRep0};
use qhilb_core::series::LaurentPoly;
use qhilb_core::{appendix, betti, castelnuovo, ktheory, moduli, quiver, series};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qhilb",
    version,
    about = "Castelnuovo polynomials, Hilbert series and moduli of rank-one modules over cubic AS-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Castelnuovo polynomials: enumeration, validation, Hilbert series.
    Castelnuovo {
        #[command(subcommand)]
        cmd: CastelnuovoCmd,
    },
    /// Expand a characteristic polynomial into its Hilbert series.
    Hilbert(HilbertArgs),
    /// Grothendieck-group arithmetic.
    Ktheory {
        #[command(subcommand)]
        cmd: KtheoryCmd,
    },
    /// Betti tables of length-one resolutions.
    Betti {
        #[command(subcommand)]
        cmd: BettiCmd,
    },
    /// Quiver representations: relation checks, induction, membership,
    /// stability.
    Quiver {
        #[command(subcommand)]
        cmd: QuiverCmd,
    },
    /// Matrix varieties: membership, search, counting, tangent spaces.
    Moduli {
        #[command(subcommand)]
        cmd: ModuliCmd,
    },
    /// Regenerate the reference table for invariants up to (3,3).
    Appendix {
        /// Compare byte-for-byte against the checked-in reference and exit
        /// nonzero on any mismatch.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum CastelnuovoCmd {
    /// List all Castelnuovo polynomials of the given weights.
    Enumerate {
        #[arg(long)]
        ne: u64,
        #[arg(long)]
        no: u64,
        /// JSON output (the default).
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        /// Tab-separated output instead of JSON.
        #[arg(long)]
        tsv: bool,
        /// Render the column diagrams ('#' even columns, '·' odd).
        #[arg(long)]
        diagram: bool,
    },
    /// Check the staircase-then-nonincreasing shape.
    Validate {
        /// Comma-separated coefficients, e.g. "1,2,1".
        coeffs: String,
        #[arg(long)]
        diagram: bool,
    },
    /// Hilbert series of the polynomial's normalized module.
    Hilbert {
        coeffs: String,
        #[arg(long)]
        order: i64,
    },
}

#[derive(Args)]
struct HilbertArgs {
    /// Characteristic polynomial, e.g. "2t^2-t^4" or JSON {"2":"2","4":"-1"}.
    #[arg(long)]
    q: String,
    #[arg(long)]
    order: i64,
}

#[derive(Subcommand)]
enum KtheoryCmd {
    /// Class of a resolution (Betti-table JSON file) in the basis
    /// `[O], [S], [Q], [P]`.
    Class {
        #[arg(long = "from-resolution")]
        from_resolution: std::path::PathBuf,
    },
    /// Invariants of a normalized class "r,a,b,c" (normalizing first).
    Invariants { cls: String },
    /// Euler form of two classes.
    Chi { cls1: String, cls2: String },
}

#[derive(Subcommand)]
enum BettiCmd {
    /// All admissible tables with the given characteristic polynomial.
    Enumerate {
        #[arg(long)]
        q: String,
        #[arg(long)]
        bound: Option<i64>,
        /// JSON output (the default).
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// The unique resolution at a boundary point of the invariant range.
    Extremal {
        #[arg(long)]
        ne: u64,
        #[arg(long)]
        no: u64,
    },
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Verify the quiver relations for a representation file.
    Check {
        #[arg(long)]
        rep: std::path::PathBuf,
        #[arg(long, default_value = "hc")]
        algebra: String,
    },
    /// Induce a subquiver representation up to the full quiver.
    Ind {
        #[arg(long)]
        rep: std::path::PathBuf,
        #[arg(long, default_value = "hc")]
        algebra: String,
    },
    /// Membership test: the 4-vertex description for full-quiver files,
    /// the 3-vertex description for subquiver files (enveloping algebra),
    /// or the type-A rank condition with --algebra typea:a,b,c.
    Membership {
        #[arg(long)]
        rep: std::path::PathBuf,
        #[arg(long, default_value = "hc")]
        algebra: String,
    },
    /// Exhaustive theta-stability classification over a small prime field.
    Stability {
        #[arg(long)]
        rep: std::path::PathBuf,
        /// Prime field order (<= 5); must match the file's field tag.
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum ModuliCmd {
    /// Sample members over a prime field.
    Search {
        #[arg(long)]
        ne: usize,
        #[arg(long)]
        no: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "100000")]
        budget: u64,
        #[arg(long = "max-points", default_value = "10")]
        max_points: usize,
    },
    /// Tangent-space dimension at a member (JSON point file).
    Tangent { point: std::path::PathBuf },
    /// Exact number of members over F_p by full enumeration.
    Count {
        #[arg(long)]
        ne: usize,
        #[arg(long)]
        no: usize,
        #[arg(long)]
        p: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Castelnuovo { cmd } => castelnuovo_cmd(cmd),
        Command::Hilbert(args) => hilbert_cmd(args),
        Command::Ktheory { cmd } => ktheory_cmd(cmd),
        Command::Betti { cmd } => betti_cmd(cmd),
        Command::Quiver { cmd } => quiver_cmd(cmd),
        Command::Moduli { cmd } => moduli_cmd(cmd),
        Command::Appendix { check } => appendix_cmd(check),
    }
}

fn parse_coeffs(s: &str) -> Result<Vec<u64>, String> {
    let t = s.trim();
    if t.is_empty() || t == "0" {
        return Ok(Vec::new());
    }
    t.split([',', ' '])
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad coefficient {p:?}: {e}"))
        })
        .collect()
}

fn castelnuovo_cmd(cmd: CastelnuovoCmd) -> Result<ExitCode, String> {
    match cmd {
        CastelnuovoCmd::Enumerate {
            ne,
            no,
            json: _,
            tsv,
            diagram,
        } => {
            let polys = castelnuovo::enumerate(ne, no);
            if tsv {
                for p in &polys {
                    let coeffs: Vec<String> = p.coeffs().iter().map(u64::to_string).collect();
                    println!("{}\t{}\t{}", ne, no, coeffs.join(","));
                }
            } else {
                let items: Vec<serde_json::Value> = polys
                    .iter()
                    .map(|p| {
                        let mut obj = json!({
                            "coeffs": p.coeffs(),
                            "sigma": p.sigma(),
                        });
                        if diagram {
                            obj["diagram"] = json!(p.render_diagram());
                        }
                        obj
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "ne": ne, "no": no, "count": polys.len(), "polynomials": items
                    }))
                    .unwrap()
                );
            }
            if diagram && tsv {
                for p in &polys {
                    println!("{}", p.render_diagram());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        CastelnuovoCmd::Validate { coeffs, diagram } => {
            let coeffs = parse_coeffs(&coeffs)?;
            match castelnuovo::CastelnuovoPoly::validate(&coeffs) {
                Ok(p) => {
                    let w = p.weights();
                    let mut obj = json!({
                        "valid": true,
                        "sigma": p.sigma(),
                        "ne": w.n_e,
                        "no": w.n_o,
                    });
                    if diagram {
                        obj["diagram"] = json!(p.render_diagram());
                    }
                    println!("{}", serde_json::to_string_pretty(&obj).unwrap());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "valid": false, "reason": e.to_string()
                        }))
                        .unwrap()
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        CastelnuovoCmd::Hilbert { coeffs, order } => {
            let coeffs = parse_coeffs(&coeffs)?;
            let p = castelnuovo::CastelnuovoPoly::validate(&coeffs).map_err(|e| e.to_string())?;
            let h = p.to_hilbert(order);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "start": h.start(),
                    "order": h.order(),
                    "coeffs": h.coeff_strings(),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn hilbert_cmd(args: HilbertArgs) -> Result<ExitCode, String> {
    let q = LaurentPoly::parse(&args.q).map_err(|e| e.to_string())?;
    let h = series::expand_over_ha(&q, args.order).map_err(|e| e.to_string())?;
    let rank = series::rank(&q);
    let gk = series::gk_dim_and_multiplicity(&q).ok();
    let mut obj = json!({
        "q": q.to_json(),
        "start": h.start(),
        "order": h.order(),
        "coeffs": h.coeff_strings(),
        "rank": rank.to_string(),
    });
    if let Some((dim, mult)) = gk {
        obj["gk_dim"] = json!(dim);
        obj["multiplicity"] = json!(mult.to_string());
    }
    println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn parse_class(s: &str) -> Result<ktheory::K0Class, String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad class entry {p:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    if parts.len() != 4 {
        return Err(format!(
            "a class needs 4 entries r,a,b,c, got {}",
            parts.len()
        ));
    }
    Ok(ktheory::K0Class::new(
        parts[0], parts[1], parts[2], parts[3],
    ))
}

fn ktheory_cmd(cmd: KtheoryCmd) -> Result<ExitCode, String> {
    match cmd {
        KtheoryCmd::Class { from_resolution } => {
            let text = std::fs::read_to_string(&from_resolution)
                .map_err(|e| format!("{}: {e}", from_resolution.display()))?;
            let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let table = betti::BettiTable::from_json(&v)?;
            let cls = ktheory::from_char_poly(&table.char_poly()).map_err(|e| e.to_string())?;
            let mut obj = json!({
                "class": {"r": cls.r, "a": cls.a, "b": cls.b, "c": cls.c},
                "char_poly": table.char_poly().to_json(),
            });
            if cls.r == 1 {
                let (d, normalized) = ktheory::normalize(&cls).map_err(|e| e.to_string())?;
                let (ne, no) = ktheory::invariants(&normalized).map_err(|e| e.to_string())?;
                obj["normalizing_shift"] = json!(d);
                obj["invariants"] = json!([ne, no]);
            }
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        KtheoryCmd::Invariants { cls } => {
            let cls = parse_class(&cls)?;
            let (d, normalized) = ktheory::normalize(&cls).map_err(|e| e.to_string())?;
            let (ne, no) = ktheory::invariants(&normalized).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "normalizing_shift": d,
                    "normalized": {"r": normalized.r, "a": normalized.a,
                                   "b": normalized.b, "c": normalized.c},
                    "invariants": [ne, no],
                    "ext1_selfdim": ktheory::ext1_selfdim(ne, no),
                    "restriction_degree": ktheory::restriction_data(&normalized).1,
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        KtheoryCmd::Chi { cls1, cls2 } => {
            let x = parse_class(&cls1)?;
            let y = parse_class(&cls2)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "chi": ktheory::euler_chi(&x, &y),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn betti_cmd(cmd: BettiCmd) -> Result<ExitCode, String> {
    match cmd {
        BettiCmd::Enumerate {
            q,
            bound,
            json: _,
            tsv,
        } => {
            let q = LaurentPoly::parse(&q).map_err(|e| e.to_string())?;
            let tables = betti::enumerate_for(&q, bound);
            if tsv {
                for t in &tables {
                    println!("{}", t.render());
                }
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "q": q.to_json(),
                        "count": tables.len(),
                        "tables": tables.iter().map(betti::BettiTable::to_json).collect::<Vec<_>>(),
                        "rendered": tables.iter().map(betti::BettiTable::render).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        BettiCmd::Extremal { ne, no } => {
            let t = betti::extremal_resolution(ne, no).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "table": t.to_json(),
                    "rendered": t.render(),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_algebra(s: &str) -> Result<AlgebraSpec, String> {
    if s == "hc" {
        return Ok(AlgebraSpec::enveloping_hc());
    }
    if let Some(params) = s.strip_prefix("typea:") {
        let q = Rationals;
        let parts: Vec<&str> = params.split(',').collect();
        if parts.len() != 3 {
            return Err("type-A algebras need three parameters a,b,c".into());
        }
        let a = q.parse(parts[0]).map_err(|e| e.to_string())?;
        let b = q.parse(parts[1]).map_err(|e| e.to_string())?;
        let c = q.parse(parts[2]).map_err(|e| e.to_string())?;
        return AlgebraSpec::type_a(a, b, c).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown algebra {s:?}; use \"hc\" or \"typea:a,b,c\""
    ))
}

#[derive(serde::Deserialize)]
struct RepFile {
    field: String,
    dims: Vec<usize>,
    x: Vec<Vec<Vec<String>>>,
    y: Vec<Vec<Vec<String>>>,
}

enum AnyField {
    Q(Rationals),
    Fp(PrimeField),
}

fn parse_field(tag: &str) -> Result<AnyField, String> {
    if tag == "q" {
        return Ok(AnyField::Q(Rationals));
    }
    if let Some(p) = tag.strip_prefix("fp:") {
        let p: u64 = p.parse().map_err(|e| format!("bad modulus {p:?}: {e}"))?;
        return Ok(AnyField::Fp(PrimeField::new(p).map_err(|e| e.to_string())?));
    }
    Err(format!(
        "unknown field tag {tag:?}; use \"q\" or \"fp:<p>\""
    ))
}

fn load_rep_file(path: &std::path::Path) -> Result<RepFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn matrices_from<F: Field>(
    f: &F,
    raw: &[Vec<Vec<String>>],
    dims: &[usize],
) -> Result<Vec<Mat<F>>, String> {
    raw.iter()
        .enumerate()
        .map(|(lvl, rows)| {
            if rows.is_empty() {
                // Zero-row matrices serialize as empty lists.
                return Ok(Mat::zero(f, dims[lvl + 1], dims[lvl]));
            }
            Mat::parse(f, rows).map_err(|e| e.to_string())
        })
        .collect()
}

fn rep_to_json<F: Field>(f: &F, tag: &str, rep: &QuiverRep<F>) -> serde_json::Value {
    json!({
        "field": tag,
        "dims": rep.dims(),
        "x": [rep.x(0).render(f), rep.x(1).render(f), rep.x(2).render(f)],
        "y": [rep.y(0).render(f), rep.y(1).render(f), rep.y(2).render(f)],
    })
}

fn build_rep<F: Field>(f: &F, file: &RepFile) -> Result<QuiverRep<F>, String> {
    let dims: [usize; 4] = file
        .dims
        .clone()
        .try_into()
        .map_err(|_| "full-quiver files need 4 dimensions".to_string())?;
    let x = matrices_from(f, &file.x, &file.dims)?;
    let y = matrices_from(f, &file.y, &file.dims)?;
    QuiverRep::new(
        f,
        dims,
        x.try_into().map_err(|_| "need 3 x-matrices".to_string())?,
        y.try_into().map_err(|_| "need 3 y-matrices".to_string())?,
    )
    .map_err(|e| e.to_string())
}

fn build_rep0<F: Field>(f: &F, file: &RepFile) -> Result<QuiverRep0<F>, String> {
    let dims: [usize; 3] = file
        .dims
        .clone()
        .try_into()
        .map_err(|_| "subquiver files need 3 dimensions".to_string())?;
    let x = matrices_from(f, &file.x, &file.dims)?;
    let y = matrices_from(f, &file.y, &file.dims)?;
    QuiverRep0::new(
        f,
        dims,
        x.try_into().map_err(|_| "need 2 x-matrices".to_string())?,
        y.try_into().map_err(|_| "need 2 y-matrices".to_string())?,
    )
    .map_err(|e| e.to_string())
}

fn quiver_cmd(cmd: QuiverCmd) -> Result<ExitCode, String> {
    match cmd {
        QuiverCmd::Check { rep, algebra } => {
            let spec = parse_algebra(&algebra)?;
            let file = load_rep_file(&rep)?;
            let holds = match parse_field(&file.field)? {
                AnyField::Q(f) => quiver::check_relations(&build_rep(&f, &file)?, &spec, &f)
                    .map_err(|e| e.to_string())?,
                AnyField::Fp(f) => quiver::check_relations(&build_rep(&f, &file)?, &spec, &f)
                    .map_err(|e| e.to_string())?,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"relations_hold": holds})).unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        QuiverCmd::Ind { rep, algebra } => {
            let spec = parse_algebra(&algebra)?;
            let file = load_rep_file(&rep)?;
            let out = match parse_field(&file.field)? {
                AnyField::Q(f) => {
                    let r0 = build_rep0(&f, &file)?;
                    let m = quiver::ind(&f, &r0, &spec).map_err(|e| e.to_string())?;
                    rep_to_json(&f, &file.field, &m)
                }
                AnyField::Fp(f) => {
                    let r0 = build_rep0(&f, &file)?;
                    let m = quiver::ind(&f, &r0, &spec).map_err(|e| e.to_string())?;
                    rep_to_json(&f, &file.field, &m)
                }
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        QuiverCmd::Membership { rep, algebra } => {
            let spec = parse_algebra(&algebra)?;
            let file = load_rep_file(&rep)?;
            let result = match parse_field(&file.field)? {
                AnyField::Q(f) => membership_dispatch(&f, &file, &spec)?,
                AnyField::Fp(f) => membership_dispatch(&f, &file, &spec)?,
            };
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        QuiverCmd::Stability { rep, p } => {
            let file = load_rep_file(&rep)?;
            let f = PrimeField::new(p).map_err(|e| e.to_string())?;
            if file.field != format!("fp:{p}") {
                return Err(format!(
                    "stability runs over the file's field; file says {:?}, flag says fp:{p}",
                    file.field
                ));
            }
            let r0 = build_rep0(&f, &file)?;
            let verdict = quiver::theta_stable_bruteforce(&f, &r0).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "theta": [-1, 0, 1],
                    "classification": format!("{verdict:?}").to_lowercase(),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn membership_dispatch<F: Field>(
    f: &F,
    file: &RepFile,
    spec: &AlgebraSpec,
) -> Result<serde_json::Value, String> {
    match file.dims.len() {
        4 => {
            if !spec.is_enveloping() {
                return Err("the full-quiver membership test is specific to hc".into());
            }
            let rep = build_rep(f, file)?;
            let ok = quiver::membership_c_hc(f, &rep).map_err(|e| e.to_string())?;
            Ok(json!({"description": "C", "member": ok}))
        }
        3 => {
            let rep0 = build_rep0(f, file)?;
            if spec.is_enveloping() {
                let ok = quiver::membership_d_hc(f, &rep0).map_err(|e| e.to_string())?;
                Ok(json!({"description": "D", "member": ok}))
            } else {
                let ok =
                    quiver::rank_condition_type_a(f, &rep0, spec).map_err(|e| e.to_string())?;
                Ok(json!({"description": "type-A rank condition", "holds": ok}))
            }
        }
        n => Err(format!(
            "representation files need 3 or 4 dimensions, got {n}"
        )),
    }
}

#[derive(serde::Deserialize)]
struct PointFile {
    field: String,
    x: Vec<Vec<String>>,
    y: Vec<Vec<String>>,
    xp: Vec<Vec<String>>,
    yp: Vec<Vec<String>>,
}

fn point_to_json(
    f: &PrimeField,
    tag: &str,
    pt: &moduli::ModuliPoint<PrimeField>,
) -> serde_json::Value {
    json!({
        "field": tag,
        "x": pt.x.render(f),
        "y": pt.y.render(f),
        "xp": pt.xp.render(f),
        "yp": pt.yp.render(f),
    })
}

fn moduli_cmd(cmd: ModuliCmd) -> Result<ExitCode, String> {
    match cmd {
        ModuliCmd::Search {
            ne,
            no,
            p,
            seed,
            budget,
            max_points,
        } => {
            let f = PrimeField::new(p).map_err(|e| e.to_string())?;
            let pts =
                moduli::search(&f, ne, no, seed, budget, max_points).map_err(|e| e.to_string())?;
            let tag = format!("fp:{p}");
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "ne": ne, "no": no, "p": p, "seed": seed,
                    "found": pts.len(),
                    "points": pts.iter().map(|pt| point_to_json(&f, &tag, pt)).collect::<Vec<_>>(),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        ModuliCmd::Tangent { point } => {
            let text =
                std::fs::read_to_string(&point).map_err(|e| format!("{}: {e}", point.display()))?;
            let file: PointFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let result = match parse_field(&file.field)? {
                AnyField::Q(f) => {
                    let pt = moduli::ModuliPoint {
                        x: Mat::parse(&f, &file.x).map_err(|e| e.to_string())?,
                        y: Mat::parse(&f, &file.y).map_err(|e| e.to_string())?,
                        xp: Mat::parse(&f, &file.xp).map_err(|e| e.to_string())?,
                        yp: Mat::parse(&f, &file.yp).map_err(|e| e.to_string())?,
                    };
                    let dim = moduli::tangent_dim(&f, &pt).map_err(|e| e.to_string())?;
                    (dim, pt.n_e(), pt.n_o())
                }
                AnyField::Fp(f) => {
                    let pt = moduli::ModuliPoint {
                        x: Mat::parse(&f, &file.x).map_err(|e| e.to_string())?,
                        y: Mat::parse(&f, &file.y).map_err(|e| e.to_string())?,
                        xp: Mat::parse(&f, &file.xp).map_err(|e| e.to_string())?,
                        yp: Mat::parse(&f, &file.yp).map_err(|e| e.to_string())?,
                    };
                    let dim = moduli::tangent_dim(&f, &pt).map_err(|e| e.to_string())?;
                    (dim, pt.n_e(), pt.n_o())
                }
            };
            let (dim, ne, no) = result;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "tangent_dim": dim,
                    "expected": moduli::expected_tangent_dim(ne as i64, no as i64),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        ModuliCmd::Count { ne, no, p } => {
            let count = moduli::count_exhaustive(ne, no, p).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "ne": ne, "no": no, "p": p, "count": count,
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn appendix_cmd(check: bool) -> Result<ExitCode, String> {
    if check {
        match appendix::check_against_golden() {
            Ok(()) => {
                println!(
                    "appendix table matches the reference ({} rows)",
                    appendix::regenerate().rows.len()
                );
                Ok(ExitCode::SUCCESS)
            }
            Err(diff) => {
                eprintln!("{diff}");
                Ok(ExitCode::from(1))
            }
        }
    } else {
        print!("{}", appendix::canonical_json(&appendix::regenerate()));
        Ok(ExitCode::SUCCESS)
    }
}
