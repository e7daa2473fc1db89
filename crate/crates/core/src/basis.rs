//! The ordinal motif basis: an apposition of motif scales pulled back to `K`.

use std::collections::HashSet;

use crate::bitset::{IndexSet, ObjectSet};
use crate::context::FormalContext;
use crate::covering::covered_extents;
use crate::error::{Error, Result};
use crate::recognition::Motif;

/// Number of extents of `k` not produced by any motif of `covering`.
pub fn uncovered_count(k: &FormalContext, covering: &[Motif]) -> (usize, usize) {
    let extents = k.extents();
    let covered: HashSet<ObjectSet> = covering
        .iter()
        .flat_map(|m| covered_extents(k, m))
        .collect();
    let uncovered = extents.iter().filter(|e| !covered.contains(*e)).count();
    (uncovered, extents.len())
}

/// Basis context on the objects of `k`. Attribute `i:m` (with `i` counted
/// from 1 in covering order) holds for `g` iff `g` lies in the closure of
/// the preimage of `m`'s extent in the `i`-th motif scale.
///
/// Closures do not commute with intersections, so a scale extent `A` whose
/// closed preimage is not the meet of its attribute columns gets an extra
/// column `i:(a,b,..)` named after the scale objects in `A`.
pub fn build_basis(k: &FormalContext, covering: &[Motif]) -> Result<FormalContext> {
    let (uncovered, total) = uncovered_count(k, covering);
    if uncovered > 0 {
        return Err(Error::IncompleteCovering { uncovered, total });
    }
    let n = k.num_objects();
    let pull = |motif: &Motif, a: &ObjectSet| {
        k.object_closure(&IndexSet::from_indices(
            n,
            a.iter().map(|j| motif.domain[j]),
        ))
    };
    let mut attributes = Vec::new();
    let mut columns: Vec<ObjectSet> = Vec::new();
    for (i, motif) in covering.iter().enumerate() {
        let scale = motif.scale();
        let own: Vec<ObjectSet> = scale
            .attribute_extents()
            .iter()
            .map(|a| pull(motif, a))
            .collect();
        for (name, col) in scale.attributes().iter().zip(&own) {
            columns.push(col.clone());
            attributes.push(format!("{}:{name}", i + 1));
        }
        for a in scale.extents() {
            let closed = pull(motif, &a);
            let meet = scale
                .derive_objects(&a)
                .iter()
                .fold(IndexSet::full(n), |acc, m| acc.intersection(&own[m]));
            if closed != meet {
                let names: Vec<&str> = a.iter().map(|j| scale.objects()[j].as_str()).collect();
                columns.push(closed);
                attributes.push(format!("{}:({})", i + 1, names.join(",")));
            }
        }
    }
    FormalContext::from_fn(k.objects().to_vec(), attributes, |g, a| {
        columns[a].contains(g)
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use proptest::prelude::*;

    use super::*;
    use crate::context::tests::{arb_context, from_matrix};
    use crate::covering::{greedy_cover, HeuristicKind};
    use crate::enumeration::{EnumerationConfig, MotifInventory};
    use crate::recognition::{verify_full, verify_local_full};
    use crate::scales::{build_scale, ScaleFamily};

    fn ext_set(k: &FormalContext) -> BTreeSet<Vec<usize>> {
        k.extents().iter().map(IndexSet::to_vec).collect()
    }

    #[test]
    fn boolean_basis() {
        let b3 = build_scale(ScaleFamily::Contranominal, 3).unwrap();
        let basis = build_basis(
            &b3,
            &[Motif::new(ScaleFamily::Contranominal, vec![0, 1, 2])],
        )
        .unwrap();
        assert_eq!(basis.extents().len(), 8);
        assert_eq!(ext_set(&basis), ext_set(&b3));
        assert_eq!(basis.attributes(), &["1:1", "1:2", "1:3"]);
        let id: Vec<usize> = (0..3).collect();
        assert!(verify_full(&b3, &id, &basis));
    }

    #[test]
    fn lost_top_extent_gets_a_column() {
        let k = from_matrix(&["X..", "X.X", ".XX"]);
        let covering = [
            Motif::new(ScaleFamily::Nominal, vec![0, 2]),
            Motif::new(ScaleFamily::Nominal, vec![1, 2]),
        ];
        let basis = build_basis(&k, &covering).unwrap();
        assert_eq!(ext_set(&basis), ext_set(&k));
        assert!(basis.attributes().iter().any(|a| a == "2:(1,2)"));
        assert_eq!(basis.num_attributes(), 5);
    }

    #[test]
    fn incomplete_covering_is_rejected() {
        let b3 = build_scale(ScaleFamily::Contranominal, 3).unwrap();
        let err = build_basis(&b3, &[Motif::new(ScaleFamily::Nominal, vec![0, 1])]).unwrap_err();
        // ∅, {0}, {1} and {0,1} are covered out of eight.
        assert_eq!(
            err,
            Error::IncompleteCovering {
                uncovered: 4,
                total: 8
            }
        );
        assert_eq!(
            build_basis(&b3, &[]).unwrap_err(),
            Error::IncompleteCovering {
                uncovered: 8,
                total: 8
            }
        );
    }

    proptest! {
        #[test]
        fn basis_preserves_extents(k in arb_context(6, 6), picks in prop::collection::vec(0usize..64, 1..4)) {
            let (k, _) = k.clarify_objects();
            let pool = MotifInventory::build(&k, &EnumerationConfig::default()).unwrap().pool(false);
            let steps = greedy_cover(&k, &pool, usize::MAX, HeuristicKind::Standard);
            let covering: Vec<Motif> = steps.into_iter().map(|s| s.motif).collect();
            match build_basis(&k, &covering) {
                Ok(basis) => {
                    prop_assert_eq!(ext_set(&basis), ext_set(&k));
                    let id: Vec<usize> = (0..k.num_objects()).collect();
                    prop_assert!(verify_full(&k, &id, &basis));
                    let n = k.num_objects();
                    for (p, &mask) in picks.iter().enumerate() {
                        let domain: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                        if domain.is_empty() {
                            continue;
                        }
                        let family = ScaleFamily::ALL[p % 4];
                        let s = build_scale(family, domain.len()).unwrap();
                        prop_assert_eq!(
                            verify_local_full(&k, &domain, &s),
                            verify_local_full(&basis, &domain, &s)
                        );
                    }
                }
                Err(Error::IncompleteCovering { uncovered, total }) => {
                    prop_assert!(uncovered > 0 && uncovered <= total);
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
