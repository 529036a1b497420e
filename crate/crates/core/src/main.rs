use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use subdeg::analysis::{
    check_subgroups, coprime_pairs, max_coprime_set, mu, real_classes_check, subdegrees, Extension, DEFAULT_REAL_CAP,
};
use subdeg::constructions::{classical, Family, Variant};
use subdeg::format::{parse_group_file, write_perm_group, GroupFile};
use subdeg::gf::MatGroup;
use subdeg::perm::{coset_action, CosetLookup, OrbitOptions, PermGroup, DEFAULT_INDEX_CAP};
use subdeg::verify::{self, cases, overall_status, report_lines, CaseStatus, Scale, VerifyOptions, DEFAULT_SEED};
use subdeg::{Error, Result};

#[derive(Parser)]
#[command(name = "subdeg", version, about = "Orbits, subdegrees and coprime factorizations of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtArg {
    None,
    Tau,
    Conformal,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit of a point (permutation group) or vector (matrix group).
    Orbits {
        file: PathBuf,
        /// 1-based point.
        #[arg(long, default_value_t = 1)]
        point: usize,
        /// Comma-separated field elements, for matrix groups.
        #[arg(long)]
        vector: Option<String>,
    },
    /// Subdegrees at a base point.
    Subdegrees {
        file: PathBuf,
        /// 1-based base point.
        #[arg(long, default_value_t = 1)]
        base: usize,
        /// Include coprime pairs and whether their products occur.
        #[arg(long)]
        coprime: bool,
        /// Flag suborbits on which the stabilizer acts faithfully.
        #[arg(long)]
        faithful: bool,
    },
    /// Coprime subdegrees, or coprime orbit lengths of a matrix group on vectors.
    Coprime {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        base: usize,
    },
    /// The largest set of pairwise coprime subgroup indices.
    Mu { file: PathBuf },
    /// Check whether G = AB.
    Factor {
        group: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Reality of conjugacy classes in a classical group.
    RealClasses {
        family: Family,
        n: usize,
        q: u32,
        #[arg(long, value_enum, default_value_t = ExtArg::None)]
        ext: ExtArg,
        /// Orthogonal form type in even dimension.
        #[arg(long, value_enum)]
        form: Option<FormArg>,
    },
    /// Permutation action on the cosets of a subgroup.
    CosetAction {
        group: PathBuf,
        #[arg(long)]
        sub: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_INDEX_CAP)]
        cap: usize,
    },
    /// Run registered verification cases and stream JSON-lines reports.
    Verify {
        case: Option<String>,
        /// Run every case except extended ones.
        #[arg(long, conflicts_with = "case")]
        all: bool,
        /// Directory searched first for data files.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List registered verification cases.
    ListCases,
}

fn perm_file(path: &Path) -> Result<PermGroup> {
    match parse_group_file(path)? {
        GroupFile::Perm(g) => Ok(g),
        GroupFile::Mat(_) => Err(Error::InvalidArgument(format!("{} is a matrix group", path.display()))),
    }
}

fn base_point(group: &PermGroup, p: usize) -> Result<u32> {
    if p == 0 || p > group.degree() {
        return Err(Error::PointOutOfRange { point: p, degree: group.degree() });
    }
    Ok(p as u32 - 1)
}

fn parse_vector(group: &MatGroup, text: &str) -> Result<Vec<u32>> {
    let v = text
        .split(',')
        .map(|e| group.field().parse(e.trim()).map_err(Error::InvalidArgument))
        .collect::<Result<Vec<u32>>>()?;
    if v.len() != group.dim() {
        return Err(Error::DegreeMismatch { expected: group.dim(), found: v.len() });
    }
    Ok(v)
}

fn module_orbit_lengths(group: &MatGroup) -> Result<Vec<u64>> {
    let space = group.space_action().ok_or(Error::CapExceeded {
        what: "vector space",
        size: group.space_size() as u128,
        cap: subdeg::gf::DEFAULT_SPACE_CAP as u128,
    })?;
    let mut lengths: Vec<u64> = space.orbits().iter().map(|o| o.len() as u64).collect();
    lengths.sort_unstable();
    Ok(lengths)
}

fn emit(v: &Value) {
    println!("{v}");
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Orbits { file, point, vector } => match parse_group_file(&file)? {
            GroupFile::Perm(g) => {
                let p = base_point(&g, point)?;
                let orbit: Vec<u32> = g.orbit(p).into_iter().map(|x| x + 1).collect();
                let stab = g.point_stabilizer(p).order();
                emit(&json!({ "point": point, "length": orbit.len(), "stabilizer_order": stab, "orbit": orbit }));
            }
            GroupFile::Mat(g) => {
                let text = vector.ok_or_else(|| Error::InvalidArgument("matrix groups need --vector".into()))?;
                let v = parse_vector(&g, &text)?;
                let rec = g.vec_orbit(&v, OrbitOptions::length_only())?;
                emit(&json!({
                    "vector": v, "length": rec.length, "stabilizer_order": g.vec_stabilizer_order(&v)?,
                }));
            }
        },
        Command::Subdegrees { file, base, coprime, faithful } => {
            let g = perm_file(&file)?;
            let r = subdegrees(&g, base_point(&g, base)?, faithful)?;
            let mut out = json!({
                "degree": r.degree, "base": base, "stabilizer_order": r.stabilizer_order, "subdegrees": r.subdegrees,
            });
            if coprime {
                out["coprime_pairs"] = json!(r.coprime_pairs);
                out["product_present"] = json!(r.product_present);
                out["max_coprime_set"] = json!(r.max_coprime_set);
            }
            if faithful {
                out["faithful_subdegrees"] = json!(r.faithful_subdegrees());
            }
            emit(&out);
        }
        Command::Coprime { file, base } => {
            let values = match parse_group_file(&file)? {
                GroupFile::Perm(g) => subdegrees(&g, base_point(&g, base)?, false)?.subdegrees,
                GroupFile::Mat(g) => module_orbit_lengths(&g)?,
            };
            let pairs = coprime_pairs(&values);
            let present: Vec<bool> = pairs.iter().map(|&(m, n)| values.contains(&(m * n))).collect();
            emit(&json!({
                "values": values, "coprime_pairs": pairs, "product_present": present,
                "max_coprime_set": max_coprime_set(&values),
            }));
        }
        Command::Mu { file } => emit(&json!(mu(&perm_file(&file)?, None)?)),
        Command::Factor { group, a, b } => {
            let g = perm_file(&group)?;
            let a = perm_file(&a)?;
            let b = perm_file(&b)?;
            let r = check_subgroups(&g, &a, &b)?;
            emit(&json!(r));
            return Ok(if r.holds { 0 } else { 1 });
        }
        Command::RealClasses { family, n, q, ext, form } => {
            let variant = match (ext, form) {
                (ExtArg::Conformal, _) => Variant::Plain,
                (_, Some(FormArg::Plus)) => Variant::Plus,
                (_, Some(FormArg::Minus)) => Variant::Minus,
                _ => Variant::Plain,
            };
            let base = classical(family, n, q, variant)?.group;
            let extension = match ext {
                ExtArg::None => Extension::None,
                ExtArg::Tau => Extension::Tau,
                ExtArg::Conformal => Extension::Overgroup(classical(family, n, q, Variant::Conformal)?.group),
            };
            let r = real_classes_check(&base, &extension, DEFAULT_REAL_CAP)?;
            emit(&json!(r));
            return Ok(if r.passed { 0 } else { 1 });
        }
        Command::CosetAction { group, sub, out, cap } => {
            let g = perm_file(&group)?;
            let h = perm_file(&sub)?;
            let action = coset_action(&g, h.generators(), CosetLookup::Hash, cap)?;
            std::fs::write(&out, write_perm_group(&action.image, true))?;
            emit(&json!({ "index": action.index, "output": out.display().to_string() }));
        }
        Command::Verify { case, all, data, seed, jobs } => {
            let ids: Vec<&str> = match (&case, all) {
                (Some(id), _) => {
                    if verify::case_info(id).is_none() {
                        return Err(Error::InvalidArgument(format!("unknown case id '{id}'")));
                    }
                    vec![id.as_str()]
                }
                (None, true) => cases().iter().filter(|c| c.scale != Scale::Extended).map(|c| c.id).collect(),
                (None, false) => return Err(Error::InvalidArgument("give a case id or --all".into())),
            };
            let opts = VerifyOptions::new(seed, data);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let mut reports = pool.install(|| {
                ids.par_iter()
                    .map(|id| {
                        eprintln!("running {id}");
                        let r = verify::run_case(id, &opts);
                        if let Ok(r) = &r {
                            eprintln!("{id}: {:?} in {} ms", r.status, r.millis);
                        }
                        r
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            reports.sort_by(|a, b| a.case.cmp(&b.case));
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for line in report_lines(&reports, seed) {
                writeln!(lock, "{line}")?;
            }
            return Ok(overall_status(&reports).exit_code());
        }
        Command::ListCases => {
            for c in cases() {
                emit(&json!(c));
            }
        }
    }
    Ok(CaseStatus::Pass.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::MissingData(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
