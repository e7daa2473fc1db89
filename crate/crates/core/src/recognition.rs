//! Scale-measure verification and per-family recognition of local full
//! scale-measures into standard scales.

use serde::Serialize;

use crate::bitset::{IndexSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::scales::{build_scale, ScaleFamily};

/// One local full scale-measure into a standard scale.
///
/// `domain[i]` is the object of the source context mapped onto object `i`
/// of `build_scale(family, domain.len())`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Motif {
    pub family: ScaleFamily,
    pub domain: Vec<usize>,
}

impl Motif {
    pub fn new(family: ScaleFamily, domain: Vec<usize>) -> Self {
        Motif { family, domain }
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn sorted_domain(&self) -> Vec<usize> {
        let mut d = self.domain.clone();
        d.sort_unstable();
        d
    }

    pub fn domain_set(&self, universe: usize) -> ObjectSet {
        IndexSet::from_indices(universe, self.domain.iter().copied())
    }

    /// Identity used for deduplication and tie-breaking: family rank, then
    /// the sorted domain.
    pub fn key(&self) -> (ScaleFamily, Vec<usize>) {
        (self.family, self.sorted_domain())
    }

    pub fn scale(&self) -> FormalContext {
        build_scale(self.family, self.size()).expect("motif size within family bounds")
    }
}

fn preimage(sigma: &[usize], targets: &IndexSet, universe: usize) -> ObjectSet {
    IndexSet::from_indices(
        universe,
        sigma
            .iter()
            .enumerate()
            .filter(|(_, &t)| targets.contains(t))
            .map(|(g, _)| g),
    )
}

fn well_formed(k: &FormalContext, sigma: &[usize], s: &FormalContext) -> bool {
    sigma.len() == k.num_objects() && sigma.iter().all(|&t| t < s.num_objects())
}

/// `sigma` maps object `g` of `k` to object `sigma[g]` of `s`. It is a
/// scale-measure iff every attribute extent of `s` pulls back to an extent
/// of `k`; preimages commute with intersections, so that covers all of
/// `Ext(s)`.
pub fn verify_scale_measure(k: &FormalContext, sigma: &[usize], s: &FormalContext) -> bool {
    well_formed(k, sigma, s)
        && s.attribute_extents()
            .iter()
            .all(|a| k.is_extent(&preimage(sigma, a, k.num_objects())))
}

/// Full iff `Ext(k) = σ⁻¹(Ext(s))`: a scale-measure whose preimage system
/// also contains every attribute extent of `k`.
pub fn verify_full(k: &FormalContext, sigma: &[usize], s: &FormalContext) -> bool {
    if !verify_scale_measure(k, sigma, s) {
        return false;
    }
    k.attribute_extents().iter().all(|a| {
        let image = IndexSet::from_indices(s.num_objects(), a.iter().map(|g| sigma[g]));
        preimage(sigma, &s.object_closure(&image), k.num_objects()) == *a
    })
}

/// Object subset `H` of a context, with closures taken in `K[H, M]`.
pub(crate) struct Domain<'a> {
    k: &'a FormalContext,
    pub(crate) set: ObjectSet,
    pub(crate) list: Vec<usize>,
}

impl<'a> Domain<'a> {
    pub(crate) fn new(k: &'a FormalContext, list: Vec<usize>) -> Self {
        let set = IndexSet::from_indices(k.num_objects(), list.iter().copied());
        Domain { k, set, list }
    }

    pub(crate) fn closure(&self, objects: &ObjectSet) -> ObjectSet {
        self.k.closure_within(&self.set, objects)
    }

    fn closure_of(&self, objects: &[usize]) -> ObjectSet {
        self.closure(&IndexSet::from_indices(
            self.k.num_objects(),
            objects.iter().copied(),
        ))
    }

    fn is_closed(&self, objects: &[usize]) -> bool {
        self.closure_of(objects).len() == objects.len()
    }
}

/// [`verify_full`] for the bijection `domain[i] ↦ i` from `K[H, M]` onto
/// `s`, without materialising the subcontext.
pub fn verify_local_full(k: &FormalContext, domain: &[usize], s: &FormalContext) -> bool {
    if domain.len() != s.num_objects() {
        return false;
    }
    let d = Domain::new(k, domain.to_vec());
    if d.set.len() != domain.len() {
        return false;
    }
    let mut position = vec![usize::MAX; k.num_objects()];
    for (i, &g) in domain.iter().enumerate() {
        position[g] = i;
    }
    let pulls_back = s.attribute_extents().iter().all(|a| {
        let pre: Vec<usize> = a.iter().map(|i| domain[i]).collect();
        d.is_closed(&pre)
    });
    pulls_back
        && k.attribute_extents().iter().all(|a| {
            let image = IndexSet::from_indices(
                s.num_objects(),
                a.intersection(&d.set).iter().map(|g| position[g]),
            );
            s.is_extent(&image)
        })
}

/// Decides whether `h` carries a local full scale-measure onto the
/// standard scale of `family` and size `|h|`, returning a witness.
///
/// Sizes below the family minimum yield `None`. Objects of `h` must have
/// pairwise distinct rows.
pub fn recognize(k: &FormalContext, h: &ObjectSet, family: ScaleFamily) -> Result<Option<Motif>> {
    recognize_list(k, h.to_vec(), family)
}

pub(crate) fn recognize_list(
    k: &FormalContext,
    list: Vec<usize>,
    family: ScaleFamily,
) -> Result<Option<Motif>> {
    if list.len() < family.min_size() {
        return Ok(None);
    }
    if let Some((first, second)) = k.duplicate_rows_in(&list) {
        return Err(Error::UnclarifiedDomain { first, second });
    }
    let d = Domain::new(k, list);
    let witness = match family {
        ScaleFamily::Nominal => nominal(&d),
        ScaleFamily::Ordinal => ordinal(&d),
        ScaleFamily::Interordinal => interordinal(&d),
        ScaleFamily::Contranominal => contranominal(&d),
        ScaleFamily::Crown => crown(&d),
    };
    Ok(witness.map(|domain| Motif::new(family, domain)))
}

fn contranominal(d: &Domain) -> Option<Vec<usize>> {
    let all_co_singletons_closed = d.list.iter().all(|&g| {
        let mut rest = d.set.clone();
        rest.remove(g);
        d.closure(&rest) == rest
    });
    all_co_singletons_closed.then(|| d.list.clone())
}

fn nominal(d: &Domain) -> Option<Vec<usize>> {
    let n = d.list.len();
    let empty_closed = d.is_closed(&[]);
    if n == 1 {
        return (!empty_closed).then(|| d.list.clone());
    }
    if !empty_closed || !d.list.iter().all(|&g| d.is_closed(&[g])) {
        return None;
    }
    for (i, &g) in d.list.iter().enumerate() {
        for &h in &d.list[i + 1..] {
            if d.closure_of(&[g, h]) != d.set {
                return None;
            }
        }
    }
    Some(d.list.clone())
}

fn ordinal(d: &Domain) -> Option<Vec<usize>> {
    let n = d.list.len();
    if d.is_closed(&[]) {
        return None;
    }
    let mut by_size: Vec<(usize, usize)> = d
        .list
        .iter()
        .map(|&g| (d.closure_of(&[g]).len(), g))
        .collect();
    by_size.sort_unstable();
    if by_size
        .iter()
        .enumerate()
        .any(|(i, &(size, _))| size != i + 1)
    {
        return None;
    }
    let sigma: Vec<usize> = by_size.into_iter().map(|(_, g)| g).collect();
    verify_local_full(d.k, &sigma, &build_scale(ScaleFamily::Ordinal, n).ok()?).then_some(sigma)
}

/// Adjacency lists over positions in `d.list` for pairs accepted by `edge`.
fn pair_graph(d: &Domain, edge: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let n = d.list.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if edge(d.list[i], d.list[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Follows a path or cycle from `start`, taking the smaller-indexed
/// neighbour first. Returns positions in visiting order.
fn walk(adj: &[Vec<usize>], start: usize, list: &[usize]) -> Vec<usize> {
    let mut order = vec![start];
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut current = start;
    while let Some(&next) = adj[current]
        .iter()
        .filter(|&&v| !seen[v])
        .min_by_key(|&&v| list[v])
    {
        seen[next] = true;
        order.push(next);
        current = next;
    }
    order
}

fn interordinal(d: &Domain) -> Option<Vec<usize>> {
    let n = d.list.len();
    let scale = build_scale(ScaleFamily::Interordinal, n).ok()?;
    if n == 1 {
        return verify_local_full(d.k, &d.list, &scale).then(|| d.list.clone());
    }
    // Extents of cardinality two must chain the domain into a simple path.
    let adj = pair_graph(d, |g, h| d.is_closed(&[g, h]));
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != n - 1 || adj.iter().any(|a| a.is_empty() || a.len() > 2) {
        return None;
    }
    let start = (0..n)
        .filter(|&i| adj[i].len() == 1)
        .min_by_key(|&i| d.list[i])?;
    let order = walk(&adj, start, &d.list);
    if order.len() != n {
        return None;
    }
    let forward: Vec<usize> = order.iter().map(|&i| d.list[i]).collect();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    [forward, backward]
        .into_iter()
        .find(|sigma| verify_local_full(d.k, sigma, &scale))
}

fn crown(d: &Domain) -> Option<Vec<usize>> {
    let n = d.list.len();
    // Neighbours in a crown share properties beyond those common to the
    // whole domain, i.e. their pair closure is not the domain.
    let adj = pair_graph(d, |g, h| d.closure_of(&[g, h]) != d.set);
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let start = (0..n).min_by_key(|&i| d.list[i])?;
    let order = walk(&adj, start, &d.list);
    if order.len() != n {
        return None;
    }
    let sigma: Vec<usize> = order.iter().map(|&i| d.list[i]).collect();
    verify_local_full(d.k, &sigma, &build_scale(ScaleFamily::Crown, n).ok()?).then_some(sigma)
}
