//! Reading and writing contexts in Burmeister (`.cxt`) and CSV form.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::context::FormalContext;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContextFormat {
    Burmeister,
    Csv,
}

impl ContextFormat {
    /// Guesses from the file extension: `.csv` is CSV, everything else
    /// Burmeister.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => ContextFormat::Csv,
            _ => ContextFormat::Burmeister,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_context(bytes: &[u8], format: ContextFormat) -> Result<FormalContext> {
    match format {
        ContextFormat::Burmeister => parse_burmeister(bytes),
        ContextFormat::Csv => parse_csv(bytes),
    }
}

/// `step` is 1 when labels sit on consecutive lines and 0 when they share one.
fn check_labels(labels: &[String], first_line: usize, step: usize, kind: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for (i, l) in labels.iter().enumerate() {
        if !seen.insert(l) {
            return Err(parse_err(
                first_line + i * step,
                format!("duplicate {kind} label {l:?}"),
            ));
        }
    }
    Ok(())
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    /// 1-based number of the line `peek` would return.
    fn number(&self) -> usize {
        self.pos + 1
    }

    fn next(&mut self, what: &str) -> Result<&'a str> {
        let line = self.peek().ok_or_else(|| {
            parse_err(
                self.number(),
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn count(&mut self, what: &str) -> Result<usize> {
        let n = self.number();
        let line = self.next(what)?;
        line.trim()
            .parse()
            .map_err(|_| parse_err(n, format!("expected {what}, found {line:?}")))
    }
}

fn is_count(line: Option<&str>) -> bool {
    line.is_some_and(|l| l.trim().parse::<usize>().is_ok())
}

fn parse_burmeister(bytes: &[u8]) -> Result<FormalContext> {
    let text =
        std::str::from_utf8(bytes).map_err(|e| parse_err(1, format!("invalid UTF-8: {e}")))?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = Lines {
        lines: text.lines().map(|l| l.trim_end_matches('\r')).collect(),
        pos: 0,
    };
    let header = lines.next("header `B`")?;
    if header.trim() != "B" {
        return Err(parse_err(
            1,
            format!("expected header `B`, found {header:?}"),
        ));
    }
    // The name line is optional; a run of three numeric lines means the
    // first of them is a (numeric) name.
    let numeric_name = is_count(lines.lines.get(1).copied())
        && is_count(lines.lines.get(2).copied())
        && is_count(lines.lines.get(3).copied());
    if !is_count(lines.peek()) || numeric_name {
        lines.pos += 1;
    }
    let n_obj = lines.count("object count")?;
    let n_att = lines.count("attribute count")?;
    if lines.peek().is_some_and(|l| l.trim().is_empty()) {
        lines.pos += 1;
    }
    let obj_start = lines.number();
    let objects: Vec<String> = (0..n_obj)
        .map(|_| lines.next("object name").map(str::to_string))
        .collect::<Result<_>>()?;
    check_labels(&objects, obj_start, 1, "object")?;
    let att_start = lines.number();
    let attributes: Vec<String> = (0..n_att)
        .map(|_| lines.next("attribute name").map(str::to_string))
        .collect::<Result<_>>()?;
    check_labels(&attributes, att_start, 1, "attribute")?;
    let mut incidence = Vec::with_capacity(n_obj);
    for _ in 0..n_obj {
        let n = lines.number();
        let row = lines.next("incidence row")?.trim_end();
        let cells: Vec<bool> = row
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(true),
                '.' => Ok(false),
                other => Err(parse_err(
                    n,
                    format!("invalid incidence character {other:?}"),
                )),
            })
            .collect::<Result<_>>()?;
        if cells.len() != n_att {
            return Err(parse_err(
                n,
                format!("row has width {}, expected {n_att}", cells.len()),
            ));
        }
        incidence.push(cells);
    }
    while let Some(rest) = lines.peek() {
        if !rest.trim().is_empty() {
            return Err(parse_err(
                lines.number(),
                "trailing content after incidence rows",
            ));
        }
        lines.pos += 1;
    }
    FormalContext::new(objects, attributes, incidence)
}

/// CSV: the header row holds attribute names, optionally preceded by a
/// corner cell; each further row is an object name followed by 0/1 cells.
fn parse_csv(bytes: &[u8]) -> Result<FormalContext> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(bytes);
    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_err(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        records.push((line, rec));
    }
    let Some((header_line, header)) = records.first() else {
        return Err(parse_err(1, "missing header row"));
    };
    let header: Vec<String> = header.iter().map(|s| s.trim().to_string()).collect();
    let width = records.get(1).map(|(_, r)| r.len());
    let attributes: Vec<String> = match width {
        Some(w) if w == header.len() + 1 => header,
        _ => header.into_iter().skip(1).collect(),
    };
    check_labels(&attributes, *header_line, 0, "attribute")?;
    let mut objects = Vec::new();
    let mut incidence = Vec::new();
    for (line, rec) in &records[1..] {
        if rec.len() != attributes.len() + 1 {
            return Err(parse_err(
                *line,
                format!(
                    "row has {} cells, expected {}",
                    rec.len(),
                    attributes.len() + 1
                ),
            ));
        }
        objects.push(rec[0].trim().to_string());
        let row = rec
            .iter()
            .skip(1)
            .map(|cell| match cell.trim() {
                "1" => Ok(true),
                "0" => Ok(false),
                other => Err(parse_err(
                    *line,
                    format!("invalid cell {other:?}, expected 0 or 1"),
                )),
            })
            .collect::<Result<Vec<bool>>>()?;
        incidence.push(row);
    }
    let mut seen = HashSet::new();
    for (i, o) in objects.iter().enumerate() {
        if !seen.insert(o) {
            return Err(parse_err(
                records[i + 1].0,
                format!("duplicate object label {o:?}"),
            ));
        }
    }
    FormalContext::new(objects, attributes, incidence)
}

pub fn to_burmeister(k: &FormalContext) -> String {
    let mut out = String::new();
    let _ = write!(out, "B\n\n{}\n{}\n\n", k.num_objects(), k.num_attributes());
    for label in k.objects().iter().chain(k.attributes()) {
        out.push_str(label);
        out.push('\n');
    }
    for g in 0..k.num_objects() {
        for m in 0..k.num_attributes() {
            out.push(if k.incident(g, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn to_csv(k: &FormalContext) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("").chain(k.attributes().iter().map(String::as_str));
    // Writing into a Vec cannot fail.
    writer.write_record(header).expect("in-memory write");
    for (g, name) in k.objects().iter().enumerate() {
        let cells = (0..k.num_attributes()).map(|m| if k.incident(g, m) { "1" } else { "0" });
        writer
            .write_record(std::iter::once(name.as_str()).chain(cells))
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 labels")
}

pub fn serialize_context(k: &FormalContext, format: ContextFormat) -> String {
    match format {
        ContextFormat::Burmeister => to_burmeister(k),
        ContextFormat::Csv => to_csv(k),
    }
}
