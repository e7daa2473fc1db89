//! Formal contexts, derivation operators and the extent closure system.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::bitset::{AttributeSet, IndexSet, ObjectSet};
use crate::error::{Error, Result};

/// A formal context `(G, M, I)` with labelled objects and attributes.
///
/// Rows (object intents) and columns (attribute extents) are both kept so
/// that derivations in either direction are plain intersections.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<AttributeSet>,
    cols: Vec<ObjectSet>,
}

/// Which side of the context a set lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Objects,
    Attributes,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concept {
    pub extent: ObjectSet,
    pub intent: AttributeSet,
}

/// Result of merging objects with identical rows.
///
/// `groups[i]` lists the original object indices represented by object `i`
/// of the clarified context, in original file order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClarificationMap {
    pub groups: Vec<Vec<usize>>,
    pub original_labels: Vec<String>,
}

impl ClarificationMap {
    pub fn identity(labels: &[String]) -> Self {
        ClarificationMap {
            groups: (0..labels.len()).map(|i| vec![i]).collect(),
            original_labels: labels.to_vec(),
        }
    }

    /// Original labels merged into clarified object `i`.
    pub fn labels_of(&self, i: usize) -> Option<Vec<&str>> {
        self.groups.get(i).map(|group| {
            group
                .iter()
                .map(|&g| self.original_labels[g].as_str())
                .collect()
        })
    }

    pub fn is_identity(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }
}

fn check_unique(labels: &[String], kind: &'static str) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for label in labels {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel {
                kind,
                label: label.clone(),
            });
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from labels and a row-major incidence matrix.
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        incidence: Vec<Vec<bool>>,
    ) -> Result<Self> {
        check_unique(&objects, "object")?;
        check_unique(&attributes, "attribute")?;
        let bad_row = incidence.iter().find(|r| r.len() != attributes.len());
        if incidence.len() != objects.len() || bad_row.is_some() {
            return Err(Error::DimensionMismatch {
                rows: incidence.len(),
                cols: bad_row.map_or(attributes.len(), |r| r.len()),
                objects: objects.len(),
                attributes: attributes.len(),
            });
        }
        let rows = incidence
            .iter()
            .map(|r| {
                IndexSet::from_indices(
                    attributes.len(),
                    r.iter().enumerate().filter(|(_, &b)| b).map(|(m, _)| m),
                )
            })
            .collect();
        Ok(Self::from_rows(objects, attributes, rows))
    }

    /// Builds a context whose incidence is given by a predicate.
    /// Labels must already be distinct.
    pub fn from_fn<F>(objects: Vec<String>, attributes: Vec<String>, incident: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let incidence = (0..objects.len())
            .map(|g| (0..attributes.len()).map(|m| incident(g, m)).collect())
            .collect();
        Self::new(objects, attributes, incidence)
    }

    fn from_rows(objects: Vec<String>, attributes: Vec<String>, rows: Vec<AttributeSet>) -> Self {
        let mut cols = vec![IndexSet::empty(objects.len()); attributes.len()];
        for (g, row) in rows.iter().enumerate() {
            for m in row.iter() {
                cols[m].insert(g);
            }
        }
        FormalContext {
            objects,
            attributes,
            rows,
            cols,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// Object intent `{g}'`.
    pub fn intent(&self, g: usize) -> &AttributeSet {
        &self.rows[g]
    }

    /// Attribute extent `{m}'`.
    pub fn attribute_extent(&self, m: usize) -> &ObjectSet {
        &self.cols[m]
    }

    pub fn attribute_extents(&self) -> &[ObjectSet] {
        &self.cols
    }

    pub fn all_objects(&self) -> ObjectSet {
        IndexSet::full(self.num_objects())
    }

    pub fn all_attributes(&self) -> AttributeSet {
        IndexSet::full(self.num_attributes())
    }

    pub fn transpose(&self) -> FormalContext {
        Self::from_rows(
            self.attributes.clone(),
            self.objects.clone(),
            self.cols.clone(),
        )
    }

    /// `A'` for an object set: the attributes shared by all of `A`.
    pub fn derive_objects(&self, objects: &ObjectSet) -> AttributeSet {
        let mut out = self.all_attributes();
        for g in objects.iter() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `B'` for an attribute set: the objects having all of `B`.
    pub fn derive_attributes(&self, attributes: &AttributeSet) -> ObjectSet {
        let mut out = self.all_objects();
        for m in attributes.iter() {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    pub fn derive(&self, side: Side, set: &IndexSet) -> IndexSet {
        match side {
            Side::Objects => self.derive_objects(set),
            Side::Attributes => self.derive_attributes(set),
        }
    }

    /// The object closure `A''`.
    pub fn object_closure(&self, objects: &ObjectSet) -> ObjectSet {
        self.derive_attributes(&self.derive_objects(objects))
    }

    /// Closure of `A ⊆ H` inside the induced subcontext `K[H, M]`, which is
    /// `H ∩ A''`.
    pub fn closure_within(&self, domain: &ObjectSet, objects: &ObjectSet) -> ObjectSet {
        let mut out = self.object_closure(objects);
        out.intersect_with(domain);
        out
    }

    pub fn is_extent(&self, objects: &ObjectSet) -> bool {
        self.object_closure(objects) == *objects
    }

    /// `K[H, N]`, keeping the labels of `H` and `N` in their original order.
    pub fn induced_subcontext(&self, objects: &ObjectSet, attributes: &AttributeSet) -> Self {
        let obj_idx = objects.to_vec();
        let att_idx = attributes.to_vec();
        let rows = obj_idx
            .iter()
            .map(|&g| {
                IndexSet::from_indices(
                    att_idx.len(),
                    att_idx
                        .iter()
                        .enumerate()
                        .filter(|(_, &m)| self.incident(g, m))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        Self::from_rows(
            obj_idx.iter().map(|&g| self.objects[g].clone()).collect(),
            att_idx
                .iter()
                .map(|&m| self.attributes[m].clone())
                .collect(),
            rows,
        )
    }

    /// Merges objects with identical rows. The first object of each group
    /// (in file order) is the representative and keeps its label.
    pub fn clarify_objects(&self) -> (FormalContext, ClarificationMap) {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut by_row: HashMap<&AttributeSet, usize> = HashMap::new();
        for (g, row) in self.rows.iter().enumerate() {
            match by_row.get(row) {
                Some(&i) => groups[i].push(g),
                None => {
                    by_row.insert(row, groups.len());
                    groups.push(vec![g]);
                }
            }
        }
        let objects = groups
            .iter()
            .map(|gr| self.objects[gr[0]].clone())
            .collect();
        let rows = groups.iter().map(|gr| self.rows[gr[0]].clone()).collect();
        let clarified = Self::from_rows(objects, self.attributes.clone(), rows);
        let map = ClarificationMap {
            groups,
            original_labels: self.objects.clone(),
        };
        (clarified, map)
    }

    /// First pair of objects in `domain` with identical rows, if any.
    pub fn duplicate_rows_in(&self, domain: &[usize]) -> Option<(usize, usize)> {
        let mut seen: HashMap<&AttributeSet, usize> = HashMap::new();
        for &g in domain {
            if let Some(&h) = seen.get(&self.rows[g]) {
                return Some((h, g));
            }
            seen.insert(&self.rows[g], g);
        }
        None
    }

    /// All extents, each once, in lectic order (NextClosure over objects).
    pub fn extents(&self) -> Vec<ObjectSet> {
        let n = self.num_objects();
        let mut current = self.object_closure(&IndexSet::empty(n));
        let mut out = vec![current.clone()];
        'outer: loop {
            for i in (0..n).rev() {
                if current.contains(i) {
                    current.remove(i);
                    continue;
                }
                let mut candidate = current.clone();
                candidate.insert(i);
                let closed = self.object_closure(&candidate);
                if closed.prefix(i) == current {
                    current = closed;
                    out.push(current.clone());
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    pub fn concepts(&self) -> Vec<Concept> {
        self.extents()
            .into_iter()
            .map(|extent| {
                let intent = self.derive_objects(&extent);
                Concept { extent, intent }
            })
            .collect()
    }
}

impl std::fmt::Debug for FormalContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "FormalContext {:?} x {:?}",
            self.objects, self.attributes
        )?;
        for row in &self.rows {
            let line: String = (0..self.num_attributes())
                .map(|m| if row.contains(m) { 'X' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Labels `"1".."n"`.
pub(crate) fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}
