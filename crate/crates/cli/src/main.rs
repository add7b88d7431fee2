use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use semirep::cells::{apex, cell_decomposition, cell_semimodule, reduced_cell_semimodule};
use semirep::classify::{classify_extreme, quotients_up_to_iso, verify_suite, EnumConfig, Kind, MonoidClass};
use semirep::dot::{cells_dot, default_generators, export_dot};
use semirep::io::{self, CellReport, DocKind};
use semirep::semimodule::{are_isomorphic, homs, same_semiring, DEFAULT_BOUND};
use semirep::semiring::semirings_isomorphic;
use semirep::{presets, Error, Semimodule, Semiring};

#[derive(Parser)]
#[command(name = "semirep", version, about = "Finite semimodules over finitely generated semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Monoids {
    All,
    Semilattice,
}

#[derive(Subcommand)]
enum Command {
    /// Write a preset semiring as JSON.
    Build {
        #[arg(long)]
        preset: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the axioms of a semiring or semimodule file.
    Validate { path: PathBuf },
    /// Left, right and two-sided cells of a based semiring.
    Cells {
        semiring: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Build the cell semimodule of a left cell.
    CellModule {
        semiring: PathBuf,
        /// A basis element of the cell, or the comma-separated cell itself.
        #[arg(long)]
        left_cell: String,
        #[arg(long)]
        reduced: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the classification flags of a semimodule.
    Check { semiring: PathBuf, module: PathBuf },
    /// Enumerate extreme semimodules up to isomorphism.
    Classify {
        semiring: PathBuf,
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_delimiter = ',', default_value = "minimal,elementary,simple")]
        kinds: Vec<String>,
        #[arg(long)]
        proper: bool,
        #[arg(long, value_enum, default_value = "all")]
        monoids: Monoids,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Quotients of a semimodule up to isomorphism.
    Quotients {
        module: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Decide isomorphism of two semimodules, or of two semirings with `--semiring`.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        semiring: bool,
    },
    /// All homomorphisms between two semimodules.
    Homs {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Run a regression suite against its reference catalog.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Hasse diagram of a semilattice semimodule in DOT.
    ExportDot {
        module: PathBuf,
        /// Comma-separated action names to draw.
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
}

fn read(path: &Path) -> semirep::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> semirep::Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_pair(r: &Path, m: &Path) -> semirep::Result<(Arc<Semiring>, Semimodule)> {
    let semiring = io::load_semiring(r)?;
    let module = io::load_semimodule(m)?;
    if !same_semiring(&Arc::new(semiring.clone()), module.semiring()) {
        return Err(Error::SemiringMismatch);
    }
    Ok((module.semiring().clone(), module))
}

fn resolve_left_cell(r: &Semiring, repr: &str) -> semirep::Result<Vec<usize>> {
    let b = r.as_based().ok_or(Error::NotBased)?;
    let names: Vec<&str> = repr.split(',').map(str::trim).collect();
    let idx = names
        .iter()
        .map(|n| {
            b.index_of(n)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown basis element `{n}`")))
        })
        .collect::<semirep::Result<Vec<usize>>>()?;
    let d = cell_decomposition(b);
    let cell = d.left_cells[d.left_cell_of(idx[0])].clone();
    if idx.len() > 1 {
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        if sorted != cell {
            return Err(Error::NotALeftCell(sorted));
        }
    }
    Ok(cell)
}

/// Returns `Ok(true)` for success, `Ok(false)` for a negative answer.
fn run(command: Command) -> semirep::Result<bool> {
    match command {
        Command::Build { preset, output } => {
            let r = presets::preset(&preset)?;
            emit(output.as_deref(), &io::semiring_to_json(&r))?;
            Ok(true)
        }
        Command::Validate { path } => {
            let text = read(&path)?;
            let (valid, report) = match io::detect_kind(&text)? {
                DocKind::Semiring => {
                    let r = io::semiring_from_json(&text)?.validate();
                    (r.is_valid(), r.to_string())
                }
                DocKind::Semimodule => {
                    let r = io::load_semimodule(&path)?.validate();
                    (r.is_valid(), r.to_string())
                }
                DocKind::Congruence => {
                    return Err(Error::InvalidParameter(
                        "congruences are validated against a semimodule".into(),
                    ))
                }
            };
            println!("{}", report.trim_end());
            if valid {
                Ok(true)
            } else {
                Err(Error::Precondition("validation failed".into()))
            }
        }
        Command::Cells { semiring, dot } => {
            let r = io::load_semiring(&semiring)?;
            let b = r.as_based().ok_or(Error::NotBased)?;
            let d = cell_decomposition(b);
            if dot {
                print!("{}", cells_dot(b, &d));
            } else {
                print!("{}", io::to_json(&CellReport::new(b, &d)));
            }
            Ok(true)
        }
        Command::CellModule {
            semiring,
            left_cell,
            reduced,
            output,
        } => {
            let r = Arc::new(io::load_semiring(&semiring)?);
            let cell = resolve_left_cell(&r, &left_cell)?;
            let m = if reduced {
                reduced_cell_semimodule(&r, &cell)?
            } else {
                cell_semimodule(&r, &cell)?
            };
            emit(output.as_deref(), &io::semimodule_to_json(&m))?;
            Ok(true)
        }
        Command::Check { semiring, module } => {
            let (r, m) = load_pair(&semiring, &module)?;
            let valid = m.validate().is_valid();
            let apex = match (valid, r.as_based()) {
                (true, Some(b)) if m.is_proper() && m.is_minimal() => apex(&m).ok().map(|j| {
                    let d = cell_decomposition(b);
                    d.two_sided_cells[j]
                        .members
                        .iter()
                        .map(|&i| b.name(i).to_string())
                        .collect::<Vec<_>>()
                }),
                _ => None,
            };
            let out = json!({
                "valid": valid,
                "proper": m.is_proper(),
                "minimal": m.is_minimal(),
                "elementary": m.is_elementary(),
                "simple": m.is_simple(),
                "apex": apex,
            });
            print!("{}", io::to_json(&out));
            Ok(valid)
        }
        Command::Classify {
            semiring,
            max_size,
            kinds,
            proper,
            monoids,
            output,
        } => {
            let r = Arc::new(io::load_semiring(&semiring)?);
            let kinds = kinds
                .iter()
                .map(|k| k.parse())
                .collect::<semirep::Result<Vec<Kind>>>()?;
            let cfg = EnumConfig {
                max_carrier_size: max_size,
                monoid_class: match monoids {
                    Monoids::All => MonoidClass::AllCommutative,
                    Monoids::Semilattice => MonoidClass::Semilattice,
                },
                require_proper: proper,
                kinds,
                extra_group_orders: Vec::new(),
            };
            let report = classify_extreme(&r, &cfg)?;
            let mut summary = serde_json::Map::new();
            for (kind, cat) in &report.catalogs {
                summary.insert(
                    kind.to_string(),
                    cat.entries.iter().map(|e| e.hex()).collect::<Vec<_>>().into(),
                );
                if let Some(dir) = &output {
                    let sub = dir.join(kind.as_str());
                    fs::create_dir_all(&sub).map_err(|e| Error::Io(e.to_string()))?;
                    for (i, e) in cat.entries.iter().enumerate() {
                        emit(
                            Some(&sub.join(format!("{:03}.json", i + 1))),
                            &io::semimodule_to_json(&e.module),
                        )?;
                    }
                }
            }
            let text = io::to_json(&json!({
                "bound": max_size,
                "proper": proper,
                "classes": summary,
                "notes": report.notes,
            }));
            if let Some(dir) = &output {
                fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
                emit(Some(&dir.join("summary.json")), &text)?;
            }
            print!("{text}");
            Ok(true)
        }
        Command::Quotients { module, bound } => {
            let m = io::load_semimodule(&module)?;
            let classes = quotients_up_to_iso(&m, bound)?;
            let out: Vec<_> = classes
                .iter()
                .map(|q| {
                    json!({
                        "size": q.entry.module.size(),
                        "canonical": q.entry.hex(),
                        "nontrivial": q.is_nontrivial(m.size()),
                        "congruences": q.congruences.iter().map(|c| &c.blocks).collect::<Vec<_>>(),
                    })
                })
                .collect();
            print!("{}", io::to_json(&out));
            Ok(true)
        }
        Command::Iso {
            first,
            second,
            semiring,
        } => {
            let iso = if semiring {
                let a = io::load_semiring(&first)?;
                let b = io::load_semiring(&second)?;
                semirings_isomorphic(&a, &b)
            } else {
                let a = io::load_semimodule(&first)?;
                let b = io::load_semimodule(&second)?;
                are_isomorphic(&a, &b, u8::MAX as usize)?
            };
            println!("{}", if iso { "isomorphic" } else { "not isomorphic" });
            Ok(iso)
        }
        Command::Homs {
            source,
            target,
            bound,
        } => {
            let a = io::load_semimodule(&source)?;
            let b = io::load_semimodule(&target)?;
            let hs = homs(&a, &b, bound)?;
            let maps: Vec<&Vec<usize>> = hs.iter().map(|h| &h.map).collect();
            print!("{}", io::to_json(&json!({ "count": hs.len(), "homs": maps })));
            Ok(true)
        }
        Command::Verify { suite } => {
            let report = verify_suite(&suite)?;
            print!("{}", io::to_json(&report));
            Ok(report.pass)
        }
        Command::ExportDot { module, generators } => {
            let m = io::load_semimodule(&module)?;
            let gens = if generators.is_empty() {
                default_generators(&m)
            } else {
                generators
                    .iter()
                    .map(|g| {
                        m.semiring().action_index(g).ok_or_else(|| {
                            Error::InvalidParameter(format!("unknown action `{g}`"))
                        })
                    })
                    .collect::<semirep::Result<Vec<_>>>()?
            };
            print!("{}", export_dot(&m, &gens)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
