//! Greedy ordinal motif covering of the extent set.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::{IndexSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::Error;
use crate::recognition::{recognize_list, Motif};
use crate::scales::{build_scale, expected_extent_count, ScaleFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HeuristicKind {
    /// Number of newly covered extents.
    Standard,
    /// Newly covered extents divided by the motif's own extent count.
    Normalized,
}

impl FromStr for HeuristicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "standard" => Ok(HeuristicKind::Standard),
            "normalized" | "normalised" => Ok(HeuristicKind::Normalized),
            _ => Err(Error::InvalidScaleSpec(format!("unknown heuristic {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringStep {
    pub motif: Motif,
    /// One witness per family the domain realizes, in family order. Always
    /// contains `motif`.
    pub realizations: Vec<Motif>,
    pub new_extents: usize,
    pub cumulative: usize,
}

impl CoveringStep {
    pub fn families(&self) -> Vec<ScaleFamily> {
        self.realizations.iter().map(|m| m.family).collect()
    }
}

/// Extents of standard scales, built once per (family, size).
#[derive(Default)]
pub struct ScaleExtentCache {
    cache: HashMap<(ScaleFamily, usize), Vec<ObjectSet>>,
}

impl ScaleExtentCache {
    pub fn get(&mut self, family: ScaleFamily, n: usize) -> &[ObjectSet] {
        self.cache.entry((family, n)).or_insert_with(|| {
            build_scale(family, n)
                .expect("motif size within family bounds")
                .extents()
        })
    }
}

fn covered_with(k: &FormalContext, motif: &Motif, cache: &mut ScaleExtentCache) -> Vec<ObjectSet> {
    let n = k.num_objects();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in cache.get(motif.family, motif.size()) {
        let pre = IndexSet::from_indices(n, a.iter().map(|i| motif.domain[i]));
        let closed = k.object_closure(&pre);
        if seen.insert(closed.clone()) {
            out.push(closed);
        }
    }
    out
}

/// `{φ_K(σ⁻¹(A)) : A ∈ Ext(S)}` for the motif's scale `S`.
pub fn covered_extents(k: &FormalContext, motif: &Motif) -> Vec<ObjectSet> {
    covered_with(k, motif, &mut ScaleExtentCache::default())
}

/// Families among `families` that the domain of `motif` realizes.
pub fn realizations(
    k: &FormalContext,
    motif: &Motif,
    families: &BTreeSet<ScaleFamily>,
) -> Vec<Motif> {
    let domain = motif.sorted_domain();
    let mut out: Vec<Motif> = families
        .iter()
        .filter(|&&f| f != motif.family)
        .filter_map(|&f| recognize_list(k, domain.clone(), f).ok().flatten())
        .collect();
    out.push(motif.clone());
    out.sort_by_key(|m| m.family);
    out
}

struct Candidate {
    motif: Motif,
    cover: IndexSet,
    weight: usize,
}

/// Greedy selection of up to `steps` motifs.
///
/// Each step takes the candidate with the largest gain; ties go to the
/// smaller family rank, then the lexicographically smallest sorted domain.
/// Selection stops early once no candidate covers anything new.
pub fn greedy_cover(
    k: &FormalContext,
    motifs: &[Motif],
    steps: usize,
    heuristic: HeuristicKind,
) -> Vec<CoveringStep> {
    let extents = k.extents();
    let index: HashMap<&ObjectSet, usize> =
        extents.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let total = extents.len();
    let mut cache = ScaleExtentCache::default();
    let mut pool: Vec<Candidate> = motifs
        .iter()
        .map(|m| {
            let cover = IndexSet::from_indices(
                total,
                covered_with(k, m, &mut cache).iter().map(|e| index[e]),
            );
            Candidate {
                motif: m.clone(),
                cover,
                weight: expected_extent_count(m.family, m.size()),
            }
        })
        .collect();
    pool.sort_by_key(|c| c.motif.key());
    let families: BTreeSet<ScaleFamily> = motifs.iter().map(|m| m.family).collect();

    let mut covered = IndexSet::empty(total);
    let mut out = Vec::new();
    while out.len() < steps {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, c) in pool.iter().enumerate() {
            let gain = c.cover.difference_len(&covered);
            if gain == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((_, g, w)) => match heuristic {
                    HeuristicKind::Standard => gain > g,
                    // gain / weight > g / w without floating point.
                    HeuristicKind::Normalized => gain * w > g * c.weight,
                },
            };
            if better {
                best = Some((i, gain, c.weight));
            }
        }
        let Some((i, gain, _)) = best else { break };
        let chosen = pool.remove(i);
        covered.union_with(&chosen.cover);
        out.push(CoveringStep {
            realizations: realizations(k, &chosen.motif, &families),
            motif: chosen.motif,
            new_extents: gain,
            cumulative: covered.len(),
        });
    }
    out
}

/// Share of each family among the first `up_to` selections. A selection
/// realizing `q` families adds `1/q` to each of them.
pub fn family_ratios(steps: &[CoveringStep], up_to: usize) -> BTreeMap<ScaleFamily, f64> {
    let up_to = up_to.min(steps.len());
    let mut out = BTreeMap::new();
    if up_to == 0 {
        return out;
    }
    for step in &steps[..up_to] {
        let q = step.realizations.len() as f64;
        for f in step.families() {
            *out.entry(f).or_insert(0.0) += 1.0 / q;
        }
    }
    for v in out.values_mut() {
        *v /= up_to as f64;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub step: usize,
    pub new_extents: usize,
    pub cumulative: usize,
}

pub fn coverage_curve(steps: &[CoveringStep]) -> Vec<CoverageRow> {
    steps
        .iter()
        .enumerate()
        .map(|(i, s)| CoverageRow {
            step: i + 1,
            new_extents: s.new_extents,
            cumulative: s.cumulative,
        })
        .collect()
}

pub fn coverage_csv(steps: &[CoveringStep], total_extents: usize) -> String {
    let mut out = String::from("step,family,size,new_extents,cumulative,total_extents\n");
    for (row, s) in coverage_curve(steps).iter().zip(steps) {
        let families: Vec<&str> = s.families().iter().map(|f| f.name()).collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.step,
            families.join("+"),
            s.motif.size(),
            row.new_extents,
            row.cumulative,
            total_extents
        );
    }
    out
}

pub fn ratio_csv(steps: &[CoveringStep]) -> String {
    let mut out = String::from("step");
    for f in ScaleFamily::ALL {
        let _ = write!(out, ",{f}");
    }
    out.push('\n');
    for i in 1..=steps.len() {
        let ratios = family_ratios(steps, i);
        let _ = write!(out, "{i}");
        for f in ScaleFamily::ALL {
            let _ = write!(out, ",{:.6}", ratios.get(&f).copied().unwrap_or(0.0));
        }
        out.push('\n');
    }
    out
}
