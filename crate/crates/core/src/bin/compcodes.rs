use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compcodes::bincodes::{classify_enumerator, parse_bits, BinaryCode, Family, Word};
use compcodes::composite::Layout;
use compcodes::construct::{
    build_pure_generator, check_selfdual_condition, extend_code, search_random, ExtensionSpec, RingCode,
    SearchFilter,
};
use compcodes::gray;
use compcodes::group::{FiniteGroup, GroupKind};
use compcodes::group_ring::GroupRingElement;
use compcodes::repro::{self, ReproTarget};
use compcodes::ring::{Ring, RingKind};
use compcodes::Result;

#[derive(Parser)]
#[command(name = "compcodes", version, about = "Composite group-ring codes, Gray maps and neighbours")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct ElementArgs {
    /// Group kind (c<n>, d<n>, q8, c2c2, c4c2, c<n>alt); defaults to the layout's group.
    #[arg(long)]
    group: Option<GroupKind>,
    #[arg(long, default_value = "f2")]
    ring: RingKind,
    /// Preset name, spec file, or sigma:<group>.
    #[arg(long)]
    spec: Option<String>,
    /// Coefficients of v in group listing order, comma separated.
    #[arg(long)]
    v: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build ⟨Ω(v)⟩, or [I | Ω(v)] with --pure, and write it as a code file.
    Build {
        #[command(flatten)]
        elem: ElementArgs,
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether [I | Ω(v)] is self-dual (Ω(v)Ω(v)ᵀ = −I).
    Selfdual {
        #[command(flatten)]
        elem: ElementArgs,
    },
    /// Gray image of a vector (--ring/--v) or of a ring code file.
    Gray {
        file: Option<PathBuf>,
        #[arg(long)]
        ring: Option<RingKind>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long, value_enum, default_value_t = GrayMap::Binary)]
        map: GrayMap,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance, low-weight counts and enumerator class of a code file.
    Measure {
        file: PathBuf,
        #[arg(long, default_value_t = 14)]
        upto: usize,
    },
    /// Two-column extension of a self-dual ring code.
    Extend {
        file: PathBuf,
        #[arg(long)]
        c: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// ⟨⟨x⟩⊥ ∩ C, x⟩ for a binary code file; short x fills the last coordinates.
    Neighbor {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sequential neighbours N_(1), N_(2), … with enumerator classes.
    Chain {
        file: PathBuf,
        #[arg(long = "x", required = true)]
        xs: Vec<String>,
    },
    /// Recompute a published example and compare against the embedded values.
    Reproduce {
        /// Target name, or "all".
        target: String,
    },
    /// Seeded random search for self-dual [I | Ω(v)] codes.
    Search {
        #[arg(long)]
        group: Option<GroupKind>,
        #[arg(long, default_value = "f2")]
        ring: RingKind,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        min_d: Option<usize>,
        #[arg(long)]
        target_family: Option<Family>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GrayMap {
    /// The ring's standard binary image.
    Binary,
    /// ψ: F4+uF4 → (F2+uF2)².
    Psi,
}

/// Result of a command that ran to completion.
enum Outcome {
    Ok,
    Mismatch,
}

fn layout_for(group: Option<&GroupKind>, spec: Option<&str>) -> Result<Layout> {
    let layout = match (spec, group) {
        (Some(s), _) => Layout::resolve(s)?,
        (None, Some(g)) => Layout::Sigma(g.clone()),
        (None, None) => {
            return Err(compcodes::Error::Parse {
                what: "layout",
                token: "need --spec or --group".into(),
                position: None,
            })
        }
    };
    if let Some(g) = group {
        if g != layout.group() {
            return Err(compcodes::Error::GroupMismatch {
                left: g.to_string(),
                right: layout.group().to_string(),
            });
        }
    }
    Ok(layout)
}

fn element(args: &ElementArgs) -> Result<(GroupRingElement, Layout)> {
    let layout = layout_for(args.group.as_ref(), args.spec.as_deref())?;
    let v = GroupRingElement::parse(
        FiniteGroup::shared(layout.group())?,
        Ring::shared(args.ring)?,
        &args.v,
    )?;
    Ok((v, layout))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

enum CodeFile {
    Binary(BinaryCode),
    Ring(RingCode),
}

fn read_code(path: &Path) -> Result<CodeFile> {
    let text = fs::read_to_string(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with("ring")) {
        Ok(CodeFile::Ring(RingCode::parse(&text)?))
    } else {
        Ok(CodeFile::Binary(BinaryCode::parse(&text)?))
    }
}

fn read_binary(path: &Path) -> Result<BinaryCode> {
    match read_code(path)? {
        CodeFile::Binary(c) => Ok(c),
        CodeFile::Ring(c) => c.binary_image(),
    }
}

fn read_ring(path: &Path) -> Result<RingCode> {
    match read_code(path)? {
        CodeFile::Ring(c) => Ok(c),
        CodeFile::Binary(c) => {
            let f2 = Ring::shared(RingKind::F2)?;
            let rows = c.rows().iter().map(|&r| (0..c.len()).map(|i| (r >> i & 1) as u8).collect()).collect();
            RingCode::new(f2, c.len(), rows)
        }
    }
}

fn describe(code: &BinaryCode) -> Result<String> {
    let d = code.min_distance()?.map_or("-".to_string(), |d| d.to_string());
    Ok(format!("[{},{},{}] self-dual={}", code.len(), code.dim(), d, code.is_self_dual()))
}

/// Places a short vector in the last coordinates, as the published tables do.
fn neighbor_word(bits: &str, n: usize) -> Result<Word> {
    let (len, w) = parse_bits(bits)?;
    if len > n {
        return Err(compcodes::Error::LengthMismatch { expected: n, got: len });
    }
    Ok(w << (n - len))
}

fn class_line(code: &BinaryCode) -> Result<String> {
    let p = code.weight_counts(14.min(code.len()))?;
    Ok(classify_enumerator(code.len(), &p).to_string())
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Build { elem, pure, out } => {
            let (v, layout) = element(&elem)?;
            let code = if pure {
                build_pure_generator(&v, &layout)?
            } else {
                RingCode::from_matrix(&layout.pattern()?.matrix(&v)?)
            };
            if code.ring().kind() == RingKind::F2 {
                let b = code.binary_image()?;
                eprintln!("{}", describe(&b)?);
                emit(&b.to_text(), out.as_deref())?;
            } else {
                let s = code.size();
                eprintln!(
                    "ring {} n={} log2|C|={} self-dual={}",
                    code.ring().kind(),
                    code.len(),
                    s.log2,
                    code.is_self_dual()
                );
                emit(&code.to_text(), out.as_deref())?;
            }
        }
        Cmd::Selfdual { elem } => {
            let (v, layout) = element(&elem)?;
            let ok = check_selfdual_condition(&v, &layout)?;
            println!("Omega(v)Omega(v)^T = -I: {ok}");
            if !ok {
                return Ok(Outcome::Mismatch);
            }
        }
        Cmd::Gray { file, ring, v, map, out } => match (file, ring, v) {
            (None, Some(kind), Some(tokens)) => {
                let r = Ring::new(kind)?;
                let x = r.parse_vector(&tokens)?;
                match map {
                    GrayMap::Binary => println!("{}", gray::format_bit_vec(&gray::binary_image(&r, &x)?)),
                    GrayMap::Psi => {
                        let f2u = Ring::new(RingKind::F2u)?;
                        println!("{}", f2u.format_vector(&gray::psi_f4u(&r, &x)?));
                    }
                }
            }
            (Some(path), None, None) => {
                let code = read_ring(&path)?;
                match map {
                    GrayMap::Binary => {
                        let b = code.binary_image()?;
                        eprintln!("{}", describe(&b)?);
                        emit(&b.to_text(), out.as_deref())?;
                    }
                    GrayMap::Psi => emit(&code.psi_image()?.to_text(), out.as_deref())?,
                }
            }
            _ => {
                return Err(compcodes::Error::Parse {
                    what: "gray input",
                    token: "give either a code file or --ring with --v".into(),
                    position: None,
                })
            }
        },
        Cmd::Measure { file, upto } => {
            let code = read_binary(&file)?;
            let upto = upto.min(code.len());
            let p = code.weight_counts(upto)?;
            let d = match p.min_nonzero_weight() {
                Some(d) => Some(d),
                None => code.min_distance()?,
            };
            let d = d.map_or("-".to_string(), |d| d.to_string());
            println!("[{},{},{}] self-dual={}", code.len(), code.dim(), d, code.is_self_dual());
            for (w, a) in p.counts.iter().enumerate().filter(|&(_, &a)| a > 0) {
                println!("A{w} {a}");
            }
            if matches!(code.len(), 64 | 68) && upto >= 14 {
                println!("{}", classify_enumerator(code.len(), &p));
            }
        }
        Cmd::Extend { file, c, x, out } => {
            let code = read_ring(&file)?;
            let r = code.ring().clone();
            let ext = ExtensionSpec {
                c: r.parse_elem(&c)?,
                x: r.parse_vector(&x)?,
            };
            let d = extend_code(&code, &ext)?;
            eprintln!("ring {} n={} self-dual={}", r.kind(), d.len(), d.is_self_dual());
            emit(&d.to_text(), out.as_deref())?;
        }
        Cmd::Neighbor { file, x, out } => {
            let code = read_binary(&file)?;
            let d = code.neighbor(neighbor_word(&x, code.len())?)?;
            eprintln!("{} {}", describe(&d)?, class_line(&d)?);
            emit(&d.to_text(), out.as_deref())?;
        }
        Cmd::Chain { file, xs } => {
            let code = read_binary(&file)?;
            let words = xs.iter().map(|x| neighbor_word(x, code.len())).collect::<Result<Vec<_>>>()?;
            for (i, c) in code.neighbor_chain(&words)?.iter().enumerate() {
                println!("N({}) {} {}", i + 1, describe(c)?, class_line(c)?);
            }
        }
        Cmd::Reproduce { target } => {
            let targets = if target == "all" {
                ReproTarget::ALL.to_vec()
            } else {
                vec![target.parse()?]
            };
            let mut all_ok = true;
            for t in targets {
                let report = repro::run(t)?;
                for c in &report.checks {
                    println!("{t}: {c}");
                }
                all_ok &= report.ok();
            }
            if !all_ok {
                return Ok(Outcome::Mismatch);
            }
        }
        Cmd::Search {
            group,
            ring,
            spec,
            trials,
            seed,
            min_d,
            target_family,
        } => {
            let layout = layout_for(group.as_ref(), spec.as_deref())?;
            let r = Ring::shared(ring)?;
            let filter = SearchFilter {
                min_d,
                family: target_family,
            };
            let found = search_random(&r, &layout, trials, seed, &filter)?;
            println!("{} distinct weight profiles", found.len());
            for f in &found {
                let low: Vec<String> = f
                    .profile
                    .iter()
                    .enumerate()
                    .filter(|&(w, &a)| w > 0 && a > 0)
                    .map(|(w, a)| format!("A{w}={a}"))
                    .collect();
                println!(
                    "v={} [{},{},{}] {} {}",
                    r.format_vector(&f.v),
                    f.code.len(),
                    f.code.dim(),
                    f.d,
                    f.class,
                    low.join(" ")
                );
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
