//! Enumeration of all local full scale-measures into standard scales.
//!
//! Nominal, ordinal, interordinal and contranominal motifs are hereditary:
//! restricting a witness to a subdomain yields a witness of the smaller
//! scale. They are found level by level, testing a candidate only when the
//! subdomains heredity demands are motifs themselves. Crowns are not
//! hereditary and are found as cycles of the object-overlap graph.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::{IndexSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::recognition::{recognize_list, Motif};
use crate::scales::ScaleFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeBounds {
    pub min: usize,
    pub max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub families: Vec<ScaleFamily>,
    bounds: [SizeBounds; 5],
    pub crown_size_cap: usize,
    pub maximal_only: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        let mut bounds = [SizeBounds {
            min: 2,
            max: usize::MAX,
        }; 5];
        bounds[ScaleFamily::Crown.rank()].min = 3;
        EnumerationConfig {
            families: ScaleFamily::ALL.to_vec(),
            bounds,
            crown_size_cap: 8,
            maximal_only: false,
        }
    }
}

impl EnumerationConfig {
    pub fn with_families(families: &[ScaleFamily]) -> Self {
        EnumerationConfig {
            families: families.to_vec(),
            ..Default::default()
        }
    }

    pub fn bounds(&self, family: ScaleFamily) -> SizeBounds {
        self.bounds[family.rank()]
    }

    pub fn set_min(&mut self, family: ScaleFamily, min: usize) {
        self.bounds[family.rank()].min = min;
    }

    pub fn set_max(&mut self, family: ScaleFamily, max: usize) {
        self.bounds[family.rank()].max = max;
    }

    /// Effective inclusive size range for `family`, after the family's own
    /// minimum and the crown cap.
    pub fn size_range(&self, family: ScaleFamily) -> (usize, usize) {
        let b = self.bounds(family);
        let mut max = b.max;
        if family == ScaleFamily::Crown {
            max = max.min(self.crown_size_cap);
        }
        (b.min.max(family.min_size()), max)
    }

    pub fn validate(&self) -> Result<()> {
        for family in ScaleFamily::ALL {
            let b = self.bounds(family);
            if b.min > b.max {
                return Err(Error::BoundExceeded {
                    what: "minimum motif size",
                    value: b.min,
                    bound: b.max,
                });
            }
        }
        let crown = self.bounds(ScaleFamily::Crown).min;
        if crown < 3 {
            return Err(Error::SizeBelowMinimum {
                family: ScaleFamily::Crown,
                size: crown,
                min: 3,
            });
        }
        Ok(())
    }
}

fn is_motif(k: &FormalContext, domain: &[usize], family: ScaleFamily) -> Option<Motif> {
    // Domains with repeated rows never carry a standard scale of size ≥ 2.
    recognize_list(k, domain.to_vec(), family).ok().flatten()
}

/// Smallest size from which every subdomain of a motif is again a motif.
fn heredity_floor(family: ScaleFamily) -> usize {
    match family {
        ScaleFamily::Contranominal | ScaleFamily::Ordinal => 1,
        _ => 2,
    }
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for g in start..n {
            cur.push(g);
            go(g + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::with_capacity(size), &mut out);
    out
}

/// Level-wise enumeration for the hereditary families.
///
/// Ordinal motifs need an object holding every attribute (otherwise `∅` is
/// an extent of `K[H, M]`), and heredity only holds for subdomains that
/// keep that object, so ordinal candidates grow from any member and only
/// the subdomains keeping the full row are required.
pub fn enumerate_hereditary(
    k: &FormalContext,
    family: ScaleFamily,
    cfg: &EnumerationConfig,
) -> Vec<Motif> {
    assert!(family != ScaleFamily::Crown, "crowns are not hereditary");
    let (min, max) = cfg.size_range(family);
    let n = k.num_objects();
    let mut out = Vec::new();
    if min > max {
        return out;
    }
    let floor = heredity_floor(family);
    for size in min..floor.min(max.saturating_add(1)) {
        for c in combinations(n, size) {
            out.extend(is_motif(k, &c, family));
        }
    }
    if floor > max {
        return out;
    }
    let full_row: Vec<bool> = (0..n)
        .map(|g| k.intent(g).len() == k.num_attributes())
        .collect();
    let mut level: Vec<Motif> = combinations(n, floor)
        .into_iter()
        .filter_map(|c| is_motif(k, &c, family))
        .collect();
    let mut size = floor;
    loop {
        if size >= min {
            out.extend(level.iter().cloned());
        }
        if size >= max || level.is_empty() {
            break;
        }
        let known: HashSet<Vec<usize>> = level.iter().map(Motif::sorted_domain).collect();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for motif in &level {
            let base = motif.sorted_domain();
            let last = *base.last().expect("levels are nonempty");
            for g in 0..n {
                let grows = if family == ScaleFamily::Ordinal {
                    !base.contains(&g)
                } else {
                    g > last
                };
                if !grows {
                    continue;
                }
                let mut cand = base.clone();
                cand.push(g);
                cand.sort_unstable();
                if !seen.insert(cand.clone()) {
                    continue;
                }
                let required = cand.iter().enumerate().all(|(i, &x)| {
                    if family == ScaleFamily::Ordinal && full_row[x] {
                        return true;
                    }
                    let mut sub = cand.clone();
                    sub.remove(i);
                    known.contains(&sub)
                });
                if required {
                    next.extend(is_motif(k, &cand, family));
                }
            }
        }
        level = next;
        size += 1;
    }
    normalize(&mut out);
    out
}

fn normalize(motifs: &mut Vec<Motif>) {
    motifs.sort_by_key(Motif::key);
    motifs.dedup_by(|a, b| a.key() == b.key());
}

/// Pairwise object closures in the whole context, for the crown search.
struct PairClosures {
    single: Vec<ObjectSet>,
    pair: HashMap<(usize, usize), ObjectSet>,
}

impl PairClosures {
    fn new(k: &FormalContext) -> Self {
        let n = k.num_objects();
        let single = (0..n)
            .map(|g| k.object_closure(&IndexSet::from_indices(n, [g])))
            .collect();
        PairClosures {
            single,
            pair: HashMap::new(),
        }
    }

    fn pair(&mut self, k: &FormalContext, a: usize, b: usize) -> &ObjectSet {
        let key = (a.min(b), a.max(b));
        self.pair
            .entry(key)
            .or_insert_with(|| k.object_closure(&IndexSet::from_indices(k.num_objects(), [a, b])))
    }
}

/// Necessary conditions for `path` (in cycle order) to lie on a crown whose
/// domain contains the path. With `closing`, the first and last vertex are
/// neighbours; otherwise their relation is still open.
fn path_ok(k: &FormalContext, pc: &mut PairClosures, path: &[usize], closing: bool) -> bool {
    let n = k.num_objects();
    let set = IndexSet::from_indices(n, path.iter().copied());
    let len = path.len();
    for &v in path {
        if pc.single[v].intersection(&set).len() != 1 {
            return false;
        }
    }
    for i in 0..len {
        for j in i + 1..len {
            let ends = i == 0 && j == len - 1 && len >= 3;
            let adjacent = j == i + 1 || (ends && closing);
            if ends && !closing {
                continue;
            }
            let closure = pc.pair(k, path[i], path[j]);
            let ok = if adjacent {
                closure.intersection(&set).len() == 2
            } else {
                set.is_subset(closure)
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// All crown motifs up to the configured size cap.
///
/// Each cycle is explored once: it starts at its smallest object and its
/// second vertex is smaller than its last.
pub fn enumerate_crowns(k: &FormalContext, cfg: &EnumerationConfig) -> Vec<Motif> {
    let (min, max) = cfg.size_range(ScaleFamily::Crown);
    let n = k.num_objects();
    let mut pc = PairClosures::new(k);
    let mut found: Vec<Motif> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    if min > max {
        return found;
    }
    fn extend(
        k: &FormalContext,
        pc: &mut PairClosures,
        path: &mut Vec<usize>,
        range: (usize, usize),
        found: &mut Vec<Motif>,
        seen: &mut HashSet<Vec<usize>>,
    ) {
        let len = path.len();
        if len >= range.0.max(3) && path[1] < path[len - 1] && path_ok(k, pc, path, true) {
            let mut domain = path.clone();
            domain.sort_unstable();
            if !seen.contains(&domain) {
                if let Some(m) = is_motif(k, &domain, ScaleFamily::Crown) {
                    seen.insert(domain);
                    found.push(m);
                }
            }
        }
        if len >= range.1 {
            return;
        }
        for w in path[0] + 1..k.num_objects() {
            if path.contains(&w) {
                continue;
            }
            path.push(w);
            if path_ok(k, pc, path, false) {
                extend(k, pc, path, range, found, seen);
            }
            path.pop();
        }
    }
    for start in 0..n {
        let mut path = vec![start];
        extend(k, &mut pc, &mut path, (min, max), &mut found, &mut seen);
    }
    normalize(&mut found);
    found
}

pub fn enumerate_family(
    k: &FormalContext,
    family: ScaleFamily,
    cfg: &EnumerationConfig,
) -> Vec<Motif> {
    match family {
        ScaleFamily::Crown => enumerate_crowns(k, cfg),
        _ => enumerate_hereditary(k, family, cfg),
    }
}

/// Motifs of one family whose domain has no proper superset among `motifs`.
pub fn maximal_filter(motifs: &[Motif]) -> Vec<Motif> {
    let universe = motifs
        .iter()
        .flat_map(|m| m.domain.iter().copied())
        .max()
        .map_or(0, |g| g + 1);
    let sets: Vec<ObjectSet> = motifs.iter().map(|m| m.domain_set(universe)).collect();
    motifs
        .iter()
        .enumerate()
        .filter(|(i, m)| {
            !motifs
                .iter()
                .enumerate()
                .any(|(j, o)| o.size() > m.size() && sets[*i].is_subset(&sets[j]))
        })
        .map(|(_, m)| m.clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInventory {
    pub family: ScaleFamily,
    pub all: Vec<Motif>,
    pub maximal: Vec<Motif>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MotifInventory {
    pub families: Vec<FamilyInventory>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub family: ScaleFamily,
    pub total: usize,
    pub maximal: usize,
    pub largest: usize,
}

impl MotifInventory {
    pub fn build(k: &FormalContext, cfg: &EnumerationConfig) -> Result<Self> {
        cfg.validate()?;
        let mut families: Vec<ScaleFamily> = cfg.families.clone();
        families.sort();
        families.dedup();
        let families = families
            .into_iter()
            .map(|family| {
                let all = enumerate_family(k, family, cfg);
                let maximal = maximal_filter(&all);
                FamilyInventory {
                    family,
                    all,
                    maximal,
                }
            })
            .collect();
        Ok(MotifInventory { families })
    }

    pub fn family(&self, family: ScaleFamily) -> Option<&FamilyInventory> {
        self.families.iter().find(|f| f.family == family)
    }

    /// Candidate pool for covering, in family-then-domain order.
    pub fn pool(&self, maximal_only: bool) -> Vec<Motif> {
        self.families
            .iter()
            .flat_map(|f| if maximal_only { &f.maximal } else { &f.all })
            .cloned()
            .collect()
    }
}

pub fn motif_stats(inventory: &MotifInventory) -> Vec<FamilyStats> {
    inventory
        .families
        .iter()
        .map(|f| FamilyStats {
            family: f.family,
            total: f.all.len(),
            maximal: f.maximal.len(),
            largest: f.all.iter().map(Motif::size).max().unwrap_or(0),
        })
        .collect()
}

type StatRow = (&'static str, fn(&FamilyStats) -> usize);

/// Text table with one column per family and rows for the total, maximal
/// and largest counts.
pub fn stats_table(stats: &[FamilyStats]) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<15}", "");
    for s in stats {
        let _ = write!(out, "{:>14}", s.family.name());
    }
    out.push('\n');
    let rows: [StatRow; 3] = [
        ("local full sm", |s| s.total),
        ("maximal lf-sm", |s| s.maximal),
        ("largest lf-sm", |s| s.largest),
    ];
    for (label, get) in rows {
        let _ = write!(out, "{label:<15}");
        for s in stats {
            let _ = write!(out, "{:>14}", get(s));
        }
        out.push('\n');
    }
    out
}

/// Size histogram per family, handy for calibrating size conventions.
pub fn size_histogram(inventory: &MotifInventory) -> BTreeMap<ScaleFamily, BTreeMap<usize, usize>> {
    inventory
        .families
        .iter()
        .map(|f| {
            let mut hist = BTreeMap::new();
            for m in &f.all {
                *hist.entry(m.size()).or_insert(0) += 1;
            }
            (f.family, hist)
        })
        .collect()
}
