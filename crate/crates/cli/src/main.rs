use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ordmotif::covering::{coverage_csv, ratio_csv};
use ordmotif::enumeration::{
    motif_stats, size_histogram, stats_table, EnumerationConfig, MotifInventory,
};
use ordmotif::{
    build_basis, explain_covering, family_ratios, greedy_cover, parse_context, scaling_witness,
    serialize_context, ClarificationMap, ContextFormat, FormalContext, HeuristicKind, LabelMap,
    Motif, ScaleFamily, ScaleSpec,
};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "ordmotif",
    version,
    about = "Ordinal motifs of standard scale in formal contexts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) the extents of a context.
    Concepts {
        #[command(flatten)]
        input: Input,
        /// Print every extent as a set of object labels.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate local full scale-measures per family.
    Motifs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        motifs: MotifArgs,
        /// Print every motif, not only the summary table.
        #[arg(long)]
        list: bool,
    },
    /// Greedy covering of the extents by motifs.
    Cover {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        motifs: MotifArgs,
        #[command(flatten)]
        cover: CoverArgs,
        /// Write per-step coverage as CSV.
        #[arg(long, value_name = "PATH")]
        coverage_csv: Option<PathBuf>,
        /// Write per-step family ratios as CSV.
        #[arg(long, value_name = "PATH")]
        ratio_csv: Option<PathBuf>,
    },
    /// Numbered textual explanations of the greedy covering.
    Explain {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        motifs: MotifArgs,
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// Ordinal motif basis of a complete covering, as a context file.
    Basis {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        motifs: MotifArgs,
        #[command(flatten)]
        cover: CoverArgs,
        /// Output file; the extension picks the format. Defaults to `.cxt` on stdout.
        #[arg(long, short, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Least number of scales whose semi-product admits a full scale-measure.
    ScalingDim {
        #[command(flatten)]
        input: Input,
        /// Scale family, e.g. `ordinal:1..3`; repeat or comma-separate.
        #[arg(long, required = true, value_delimiter = ',')]
        scales: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
    },
}

#[derive(Args)]
struct Input {
    /// Context file (`.cxt` Burmeister or `.csv`).
    path: PathBuf,
    /// Swap objects and attributes after reading.
    #[arg(long)]
    transpose: bool,
    /// Merge objects with identical rows.
    #[arg(long)]
    clarify: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MotifArgs {
    /// Families to use, comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "nominal,ordinal,interordinal,contranominal,crown"
    )]
    families: Vec<ScaleFamily>,
    /// `N` for every family or `family=N`; repeatable.
    #[arg(long, value_delimiter = ',')]
    min_size: Vec<String>,
    /// `N` for every family or `family=N`; repeatable.
    #[arg(long, value_delimiter = ',')]
    max_size: Vec<String>,
    #[arg(long, default_value_t = 8)]
    crown_cap: usize,
    /// Restrict to motifs with no proper superset in their family.
    #[arg(long, conflicts_with = "all_motifs")]
    maximal_only: bool,
    /// Use every motif (default).
    #[arg(long)]
    all_motifs: bool,
}

#[derive(Args)]
struct CoverArgs {
    /// Number of greedy steps; 0 means run until nothing new is covered.
    #[arg(long, default_value_t = 10)]
    k: usize,
    #[arg(long, default_value = "standard")]
    heuristic: HeuristicKind,
}

struct Loaded {
    context: FormalContext,
    labels: LabelMap,
}

impl Input {
    fn load(&self) -> Result<Loaded> {
        let bytes =
            fs::read(&self.path).with_context(|| format!("reading {}", self.path.display()))?;
        let mut context = parse_context(&bytes, ContextFormat::from_path(&self.path))
            .with_context(|| format!("parsing {}", self.path.display()))?;
        if self.transpose {
            context = context.transpose();
        }
        let mut clarification: Option<ClarificationMap> = None;
        if self.clarify {
            let (clarified, map) = context.clarify_objects();
            context = clarified;
            clarification = Some(map);
        }
        let labels = LabelMap::from_context(&context, clarification.as_ref());
        Ok(Loaded { context, labels })
    }
}

enum Bound {
    Min,
    Max,
}

fn apply_sizes(cfg: &mut EnumerationConfig, specs: &[String], bound: Bound) -> Result<()> {
    for spec in specs {
        let (families, n) = match spec.split_once('=') {
            Some((family, n)) => (vec![family.parse::<ScaleFamily>()?], n),
            None => (ScaleFamily::ALL.to_vec(), spec.as_str()),
        };
        let n: usize = n
            .trim()
            .parse()
            .with_context(|| format!("size in {spec:?}"))?;
        let global = families.len() > 1;
        for family in families {
            match bound {
                Bound::Min if global => cfg.set_min(family, n.max(family.min_size())),
                Bound::Min => cfg.set_min(family, n),
                // A global cap below a family's smallest scale leaves that family out.
                Bound::Max if global && n < family.min_size() => {
                    cfg.families.retain(|&f| f != family)
                }
                Bound::Max => cfg.set_max(family, n),
            }
        }
    }
    Ok(())
}

impl MotifArgs {
    fn config(&self) -> Result<EnumerationConfig> {
        let mut cfg = EnumerationConfig::with_families(&self.families);
        cfg.crown_size_cap = self.crown_cap;
        cfg.maximal_only = self.maximal_only;
        apply_sizes(&mut cfg, &self.min_size, Bound::Min)?;
        apply_sizes(&mut cfg, &self.max_size, Bound::Max)?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn pool(&self, k: &FormalContext) -> Result<(MotifInventory, Vec<Motif>)> {
        let inventory = MotifInventory::build(k, &self.config()?)?;
        let pool = inventory.pool(self.maximal_only);
        Ok((inventory, pool))
    }
}

impl CoverArgs {
    fn steps(&self) -> usize {
        if self.k == 0 {
            usize::MAX
        } else {
            self.k
        }
    }
}

#[derive(Serialize)]
struct MotifOut<'a> {
    family: ScaleFamily,
    domain: &'a [usize],
    labels: Vec<&'a str>,
}

fn motif_out<'a>(m: &'a Motif, labels: &'a LabelMap) -> Result<MotifOut<'a>> {
    Ok(MotifOut {
        family: m.family,
        domain: &m.domain,
        labels: m
            .domain
            .iter()
            .map(|&g| labels.name(g))
            .collect::<ordmotif::Result<_>>()?,
    })
}

fn print_json(value: serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(())
}

fn set_labels(set: &ordmotif::ObjectSet, labels: &LabelMap) -> Result<Vec<String>> {
    set.iter()
        .map(|g| Ok(labels.name(g)?.to_string()))
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Concepts { input, list } => {
            let Loaded { context, labels } = input.load()?;
            let extents = context.extents();
            if input.json {
                let listed = extents
                    .iter()
                    .map(|e| set_labels(e, &labels))
                    .collect::<Result<Vec<_>>>()?;
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "concepts",
                    "objects": context.num_objects(),
                    "attributes": context.num_attributes(),
                    "extent_count": extents.len(),
                    "extents": listed,
                }))?;
            } else {
                println!("extents: {}", extents.len());
                if list {
                    for e in &extents {
                        println!("{{{}}}", set_labels(e, &labels)?.join(", "));
                    }
                }
            }
        }
        Command::Motifs {
            input,
            motifs,
            list,
        } => {
            let Loaded { context, labels } = input.load()?;
            let (inventory, _) = motifs.pool(&context)?;
            let stats = motif_stats(&inventory);
            if input.json {
                let mut per_family = serde_json::Map::new();
                for f in &inventory.families {
                    let chosen = if motifs.maximal_only {
                        &f.maximal
                    } else {
                        &f.all
                    };
                    let out = chosen
                        .iter()
                        .map(|m| motif_out(m, &labels))
                        .collect::<Result<Vec<_>>>()?;
                    per_family.insert(f.family.name().to_string(), serde_json::to_value(out)?);
                }
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "motifs",
                    "stats": stats,
                    "histogram": size_histogram(&inventory)
                        .into_iter()
                        .map(|(f, h)| (f.name().to_string(), h))
                        .collect::<std::collections::BTreeMap<_, _>>(),
                    "motifs": per_family,
                }))?;
            } else {
                print!("{}", stats_table(&stats));
                if list {
                    for f in &inventory.families {
                        let chosen = if motifs.maximal_only {
                            &f.maximal
                        } else {
                            &f.all
                        };
                        for m in chosen {
                            let names = motif_out(m, &labels)?.labels;
                            println!("{}\t{}", m.family, names.join(", "));
                        }
                    }
                }
            }
        }
        Command::Cover {
            input,
            motifs,
            cover,
            coverage_csv: cov_path,
            ratio_csv: ratio_path,
        } => {
            let Loaded { context, labels } = input.load()?;
            let (_, pool) = motifs.pool(&context)?;
            let total = context.extents().len();
            let steps = greedy_cover(&context, &pool, cover.steps(), cover.heuristic);
            if let Some(path) = cov_path {
                write_file(&path, &coverage_csv(&steps, total))?;
            }
            if let Some(path) = ratio_path {
                write_file(&path, &ratio_csv(&steps))?;
            }
            if input.json {
                let rows = steps
                    .iter()
                    .map(|s| {
                        Ok(json!({
                            "motif": motif_out(&s.motif, &labels)?,
                            "families": s.families(),
                            "new_extents": s.new_extents,
                            "cumulative": s.cumulative,
                        }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "cover",
                    "heuristic": cover.heuristic,
                    "total_extents": total,
                    "steps": rows,
                    "ratios": family_ratios(&steps, steps.len())
                        .into_iter()
                        .map(|(f, r)| (f.name().to_string(), r))
                        .collect::<std::collections::BTreeMap<_, _>>(),
                }))?;
            } else {
                println!("step\tfamilies\tnew\tcumulative\telements");
                for (i, s) in steps.iter().enumerate() {
                    let fams: Vec<&str> = s.families().iter().map(|f| f.name()).collect();
                    println!(
                        "{}\t{}\t{}\t{}\t{}",
                        i + 1,
                        fams.join("+"),
                        s.new_extents,
                        s.cumulative,
                        motif_out(&s.motif, &labels)?.labels.join(", ")
                    );
                }
                let last = steps.last().map_or(0, |s| s.cumulative);
                println!("covered {last} of {total} extents");
            }
        }
        Command::Explain {
            input,
            motifs,
            cover,
        } => {
            let Loaded { context, labels } = input.load()?;
            let (_, pool) = motifs.pool(&context)?;
            let steps = greedy_cover(&context, &pool, cover.steps(), cover.heuristic);
            let doc = explain_covering(&steps, &labels)?;
            if input.json {
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "explain",
                    "entries": doc.entries,
                }))?;
            } else {
                print!("{}", doc.to_text());
            }
        }
        Command::Basis {
            input,
            motifs,
            cover,
            output,
        } => {
            let Loaded { context, .. } = input.load()?;
            let (_, pool) = motifs.pool(&context)?;
            let steps = greedy_cover(&context, &pool, cover.steps(), cover.heuristic);
            let covering: Vec<Motif> = steps.into_iter().map(|s| s.motif).collect();
            let basis = build_basis(&context, &covering)?;
            match output {
                Some(path) => write_file(
                    &path,
                    &serialize_context(&basis, ContextFormat::from_path(&path)),
                )?,
                None => print!("{}", serialize_context(&basis, ContextFormat::Burmeister)),
            }
        }
        Command::ScalingDim {
            input,
            scales,
            max_d,
        } => {
            let Loaded { context, .. } = input.load()?;
            let mut family = Vec::new();
            for spec in &scales {
                family.extend(spec.parse::<ScaleSpec>()?.build()?);
            }
            if family.is_empty() {
                bail!("no scales given");
            }
            let witness = scaling_witness(&context, &family, max_d)?;
            if input.json {
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "scaling-dim",
                    "max_d": max_d,
                    "dimension": witness.as_ref().map(Vec::len),
                }))?;
            } else {
                match witness {
                    Some(w) => println!("{}", w.len()),
                    None => println!("unknown (none with d <= {max_d})"),
                }
            }
        }
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
