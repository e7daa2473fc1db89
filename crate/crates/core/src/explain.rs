//! Textual explanations of motifs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::context::{ClarificationMap, FormalContext};
use crate::covering::CoveringStep;
use crate::error::{Error, Result};
use crate::recognition::Motif;
use crate::scales::ScaleFamily;

/// Display name per object index. Objects merged by clarification show all
/// their original labels joined by `/`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    names: Vec<String>,
}

impl LabelMap {
    pub fn new(names: Vec<String>) -> Self {
        LabelMap { names }
    }

    pub fn from_context(k: &FormalContext, clarification: Option<&ClarificationMap>) -> Self {
        let names = (0..k.num_objects())
            .map(|i| match clarification.and_then(|c| c.labels_of(i)) {
                Some(group) => group.join("/"),
                None => k.objects()[i].clone(),
            })
            .collect();
        LabelMap { names }
    }

    pub fn name(&self, g: usize) -> Result<&str> {
        self.names
            .get(g)
            .map(String::as_str)
            .ok_or(Error::UnresolvableLabel(g))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// `a`, `a and b`, `a, b and c`.
pub fn join_names<S: AsRef<str>>(names: &[S]) -> String {
    match names {
        [] => String::new(),
        [only] => only.as_ref().to_string(),
        [init @ .., last] => {
            let init: Vec<&str> = init.iter().map(AsRef::as_ref).collect();
            format!("{} and {}", init.join(", "), last.as_ref())
        }
    }
}

/// One sentence group for a single-family motif, naming elements in
/// domain order.
pub fn render_motif(motif: &Motif, labels: &LabelMap) -> Result<String> {
    let names = motif
        .domain
        .iter()
        .map(|&g| labels.name(g))
        .collect::<Result<Vec<&str>>>()?;
    let list = join_names(&names);
    Ok(match motif.family {
        ScaleFamily::Nominal => format!(
            "The elements {list} are incomparable, i.e., all elements have at least one property that the other elements do not have."
        ),
        ScaleFamily::Ordinal => format!(
            "There is a ranking of elements {list} such that an element has all the properties its successors has."
        ),
        ScaleFamily::Interordinal => format!(
            "The elements {list} are ordered in such a way that each interval of elements has a unique set of properties they have in common."
        ),
        ScaleFamily::Contranominal => format!(
            "Each combination of the elements {list} has a unique set of properties they have in common."
        ),
        ScaleFamily::Crown => {
            let first = names.first().copied().unwrap_or_default();
            format!(
                "The elements {list} are incomparable. Furthermore, there is a closed cycle from {first} over {} back to {first} by pairwise shared properties.",
                join_names(&names[1..])
            )
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplanationEntry {
    /// One paragraph per realized family, separated by newlines.
    pub text: String,
    pub motif: Motif,
    pub families_rendered: Vec<ScaleFamily>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExplanationDoc {
    pub entries: Vec<ExplanationEntry>,
}

impl ExplanationDoc {
    /// Numbered list; continuation paragraphs are indented under the number.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, entry) in self.entries.iter().enumerate() {
            let prefix = format!("{}. ", i + 1);
            let pad = " ".repeat(prefix.len());
            for (j, para) in entry.text.lines().enumerate() {
                let lead = if j == 0 {
                    prefix.as_str()
                } else {
                    pad.as_str()
                };
                let _ = writeln!(out, "{lead}{para}");
            }
        }
        out
    }
}

pub fn render_step(step: &CoveringStep, labels: &LabelMap) -> Result<ExplanationEntry> {
    let witnesses: Vec<&Motif> = if step.realizations.is_empty() {
        vec![&step.motif]
    } else {
        step.realizations.iter().collect()
    };
    let paragraphs = witnesses
        .iter()
        .map(|m| render_motif(m, labels))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExplanationEntry {
        text: paragraphs.join("\n"),
        motif: step.motif.clone(),
        families_rendered: witnesses.iter().map(|m| m.family).collect(),
    })
}

/// One entry per covering step, in selection order.
pub fn explain_covering(steps: &[CoveringStep], labels: &LabelMap) -> Result<ExplanationDoc> {
    let entries = steps
        .iter()
        .map(|s| render_step(s, labels))
        .collect::<Result<_>>()?;
    Ok(ExplanationDoc { entries })
}
