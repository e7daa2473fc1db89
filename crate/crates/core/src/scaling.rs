//! Scaling dimension of small contexts by exhaustive search.

use std::collections::HashMap;

use crate::bitset::IndexSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};

pub const MAX_OBJECTS: usize = 8;
pub const MAX_DIMENSION: usize = 4;
/// Upper bound on `|G_S|^|G|` for a single scale.
pub const MAX_MAPS_PER_SCALE: usize = 1 << 25;

/// One scale-measure used in a witness: `sigma` maps objects of `K` into
/// `scales[scale]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure {
    pub scale: usize,
    pub sigma: Vec<usize>,
}

/// Least `d ≤ max_d` such that `K` has a full scale-measure into a
/// semi-product of `d` scales drawn (with repetition) from `scales`.
pub fn scaling_dimension(
    k: &FormalContext,
    scales: &[FormalContext],
    max_d: usize,
) -> Result<Option<usize>> {
    Ok(scaling_witness(k, scales, max_d)?.map(|w| w.len()))
}

/// Like [`scaling_dimension`] but returns the measures realizing it.
///
/// Uses that `Ext(K)` is generated by the pulled-back extents iff every
/// meet-irreducible extent of `K` is itself a preimage of some attribute
/// extent, which turns the search into a small set cover.
pub fn scaling_witness(
    k: &FormalContext,
    scales: &[FormalContext],
    max_d: usize,
) -> Result<Option<Vec<Measure>>> {
    let n = k.num_objects();
    if n > MAX_OBJECTS {
        return Err(Error::BoundExceeded {
            what: "object count",
            value: n,
            bound: MAX_OBJECTS,
        });
    }
    if max_d > MAX_DIMENSION {
        return Err(Error::BoundExceeded {
            what: "max_d",
            value: max_d,
            bound: MAX_DIMENSION,
        });
    }
    for s in scales {
        let maps = s.num_objects().checked_pow(n as u32).unwrap_or(usize::MAX);
        if maps > MAX_MAPS_PER_SCALE {
            return Err(Error::BoundExceeded {
                what: "maps per scale",
                value: maps,
                bound: MAX_MAPS_PER_SCALE,
            });
        }
    }

    let closed = closed_table(k);
    let irreducible = meet_irreducibles(&closed, n);
    let target_index: HashMap<u32, usize> = irreducible
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    // Distinct sets of irreducibles a single measure can supply.
    let mut options: Vec<(IndexSet, Measure)> = Vec::new();
    let mut seen = HashMap::new();
    for (idx, s) in scales.iter().enumerate() {
        let attr: Vec<Vec<usize>> = s.attribute_extents().iter().map(IndexSet::to_vec).collect();
        for_each_map(n, s.num_objects(), |sigma| {
            let mut hit = IndexSet::empty(irreducible.len());
            let mut part = vec![0u32; s.num_objects()];
            for (g, &t) in sigma.iter().enumerate() {
                part[t] |= 1 << g;
            }
            for ext in &attr {
                let pre = ext.iter().fold(0u32, |acc, &t| acc | part[t]);
                if !closed[pre as usize] {
                    return;
                }
                if let Some(&i) = target_index.get(&pre) {
                    hit.insert(i);
                }
            }
            seen.entry(hit.clone()).or_insert_with(|| {
                options.push((
                    hit,
                    Measure {
                        scale: idx,
                        sigma: sigma.to_vec(),
                    },
                ));
            });
        });
    }
    if options.is_empty() {
        return Ok(None);
    }
    let options = undominated(options);

    let full = IndexSet::full(irreducible.len());
    for d in 1..=max_d {
        let mut chosen = Vec::new();
        if cover(
            &options,
            &IndexSet::empty(irreducible.len()),
            &full,
            d,
            &mut chosen,
        ) {
            return Ok(Some(
                chosen.into_iter().map(|i| options[i].1.clone()).collect(),
            ));
        }
    }
    Ok(None)
}

fn closed_table(k: &FormalContext) -> Vec<bool> {
    let n = k.num_objects();
    (0u32..1 << n)
        .map(|mask| {
            let set = IndexSet::from_indices(n, (0..n).filter(|g| mask >> g & 1 == 1));
            k.is_extent(&set)
        })
        .collect()
}

/// Extents other than `G` that are not the meet of the extents strictly
/// above them.
fn meet_irreducibles(closed: &[bool], n: usize) -> Vec<u32> {
    let full = (1u32 << n) - 1;
    let extents: Vec<u32> = (0..=full).filter(|&m| closed[m as usize]).collect();
    extents
        .iter()
        .copied()
        .filter(|&e| {
            e != full
                && extents
                    .iter()
                    .filter(|&&f| f != e && f & e == e)
                    .fold(full, |acc, &f| acc & f)
                    != e
        })
        .collect()
}

fn for_each_map(n: usize, targets: usize, mut f: impl FnMut(&[usize])) {
    if targets == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut sigma = vec![0usize; n];
    loop {
        f(&sigma);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            sigma[i] += 1;
            if sigma[i] < targets {
                break;
            }
            sigma[i] = 0;
        }
    }
}

fn undominated<T>(mut options: Vec<(IndexSet, T)>) -> Vec<(IndexSet, T)> {
    options.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
    let mut kept: Vec<(IndexSet, T)> = Vec::new();
    for (set, w) in options {
        if !kept.iter().any(|(k, _)| set.is_subset(k)) {
            kept.push((set, w));
        }
    }
    kept
}

/// Branch on the options containing the first irreducible still missing.
fn cover(
    options: &[(IndexSet, Measure)],
    have: &IndexSet,
    full: &IndexSet,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(missing) = full.iter().find(|&i| !have.contains(i)) else {
        if chosen.is_empty() {
            // Nothing to cover: any single measure will do.
            chosen.push(0);
        }
        return true;
    };
    if budget == 0 {
        return false;
    }
    for (i, (set, _)) in options.iter().enumerate() {
        if set.contains(missing) {
            let mut next = have.clone();
            next.union_with(set);
            chosen.push(i);
            if cover(options, &next, full, budget - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
