//! The five standard scale families and context composition.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::context::{numbered, FormalContext};
use crate::error::{Error, Result};

/// Standard scale families, declared in tie-breaking rank order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScaleFamily {
    Nominal,
    Ordinal,
    Interordinal,
    Contranominal,
    Crown,
}

impl ScaleFamily {
    pub const ALL: [ScaleFamily; 5] = [
        ScaleFamily::Nominal,
        ScaleFamily::Ordinal,
        ScaleFamily::Interordinal,
        ScaleFamily::Contranominal,
        ScaleFamily::Crown,
    ];

    pub fn min_size(self) -> usize {
        match self {
            ScaleFamily::Crown => 3,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScaleFamily::Nominal => "nominal",
            ScaleFamily::Ordinal => "ordinal",
            ScaleFamily::Interordinal => "interordinal",
            ScaleFamily::Contranominal => "contranominal",
            ScaleFamily::Crown => "crown",
        }
    }

    pub fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ScaleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScaleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScaleFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidScaleSpec(s.to_string()))
    }
}

fn check_size(family: ScaleFamily, n: usize) -> Result<()> {
    if n < family.min_size() {
        return Err(Error::SizeBelowMinimum {
            family,
            size: n,
            min: family.min_size(),
        });
    }
    Ok(())
}

/// Builds the standard scale of the given family over objects `1..=n`.
pub fn build_scale(family: ScaleFamily, n: usize) -> Result<FormalContext> {
    check_size(family, n)?;
    let objects = numbered(n);
    match family {
        ScaleFamily::Nominal => FormalContext::from_fn(objects, numbered(n), |g, m| g == m),
        ScaleFamily::Ordinal => FormalContext::from_fn(objects, numbered(n), |g, m| g <= m),
        ScaleFamily::Contranominal => FormalContext::from_fn(objects, numbered(n), |g, m| g != m),
        ScaleFamily::Crown => {
            FormalContext::from_fn(objects, numbered(n), |g, m| m == g || m == (g + 1) % n)
        }
        ScaleFamily::Interordinal => {
            let attributes = (1..=n)
                .map(|k| format!("≤{k}"))
                .chain((1..=n).map(|k| format!("≥{k}")))
                .collect();
            FormalContext::from_fn(
                objects,
                attributes,
                |g, m| {
                    if m < n {
                        g <= m
                    } else {
                        g >= m - n
                    }
                },
            )
        }
    }
}

/// Number of extents of `build_scale(family, n)`.
pub fn expected_extent_count(family: ScaleFamily, n: usize) -> usize {
    match (family, n) {
        (_, 0) => 0,
        (ScaleFamily::Contranominal, _) => 1 << n,
        // Single-object scales other than B_1 have only the top extent.
        (_, 1) => 1,
        (ScaleFamily::Nominal, _) => n + 2,
        (ScaleFamily::Ordinal, _) => n,
        (ScaleFamily::Interordinal, _) => n * (n + 1) / 2 + 1,
        (ScaleFamily::Crown, 3) => 8,
        (ScaleFamily::Crown, _) => 2 * n + 2,
    }
}

/// Scale given as `family:n` or `family:a..b` (inclusive range).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleSpec {
    pub family: ScaleFamily,
    pub sizes: std::ops::RangeInclusive<usize>,
}

impl FromStr for ScaleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScaleSpec(s.to_string());
        let (family, size) = s.split_once(':').ok_or_else(bad)?;
        let family: ScaleFamily = family.parse().map_err(|_| bad())?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let sizes = match size.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => {
                let n = num(size)?;
                n..=n
            }
        };
        if sizes.is_empty() {
            return Err(bad());
        }
        Ok(ScaleSpec { family, sizes })
    }
}

impl ScaleSpec {
    pub fn build(&self) -> Result<Vec<FormalContext>> {
        self.sizes
            .clone()
            .map(|n| build_scale(self.family, n))
            .collect()
    }
}

/// Side-by-side composition of two contexts on the same objects.
/// Attributes are tagged `1:` and `2:` to keep them apart.
pub fn apposition(left: &FormalContext, right: &FormalContext) -> Result<FormalContext> {
    if left.objects() != right.objects() {
        return Err(Error::ObjectMismatch);
    }
    let split = left.num_attributes();
    let attributes = left
        .attributes()
        .iter()
        .map(|a| format!("1:{a}"))
        .chain(right.attributes().iter().map(|a| format!("2:{a}")))
        .collect();
    FormalContext::from_fn(left.objects().to_vec(), attributes, |g, m| {
        if m < split {
            left.incident(g, m)
        } else {
            right.incident(g, m - split)
        }
    })
}

/// Semi-product: objects are tuples of operand objects, attributes the
/// tagged disjoint union, and a tuple has `(j, m)` iff its `j`-th component
/// has `m` in operand `j`.
///
/// Tuples are enumerated with the last component varying fastest.
pub fn semiproduct(scales: &[FormalContext]) -> FormalContext {
    let dims: Vec<usize> = scales.iter().map(FormalContext::num_objects).collect();
    let total: usize = dims.iter().product();
    let tuples: Vec<Vec<usize>> = (0..total).map(|i| tuple_of(i, &dims)).collect();
    let objects = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(scales)
                .map(|(&g, s)| s.objects()[g].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut attr_owner = Vec::new();
    let mut attributes = Vec::new();
    for (j, s) in scales.iter().enumerate() {
        for (m, name) in s.attributes().iter().enumerate() {
            attr_owner.push((j, m));
            attributes.push(format!("{}:{name}", j + 1));
        }
    }
    FormalContext::from_fn(objects, attributes, |g, a| {
        let (j, m) = attr_owner[a];
        scales[j].incident(tuples[g][j], m)
    })
    .expect("tuple and tagged labels are distinct")
}

/// Object index of a tuple in `semiproduct`.
pub fn semiproduct_index(tuple: &[usize], dims: &[usize]) -> usize {
    tuple.iter().zip(dims).fold(0, |acc, (&t, &d)| acc * d + t)
}

fn tuple_of(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = i % d;
        i /= d;
    }
    out
}
