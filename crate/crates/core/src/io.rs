//! Grid files and renderers.
//!
//! Text grids list rows north first, `#` for a house and `.` for an empty
//! lot. Whitespace inside a line and blank lines are ignored. An optional
//! first line `rows cols [boundary]` fixes the size and border mode. JSON
//! grids look like
//! `{"rows": 2, "cols": 2, "boundary": "free", "cells": [[1, 0], [0, 1]]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{BoundaryMode, Configuration, Dims};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenderStyle {
    #[default]
    AsciiPlain,
    AsciiUnicode,
    Svg,
}

impl FromStr for RenderStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" | "plain" | "ascii-plain" => Ok(RenderStyle::AsciiPlain),
            "unicode" | "ascii-unicode" => Ok(RenderStyle::AsciiUnicode),
            "svg" => Ok(RenderStyle::Svg),
            other => Err(Error::InvalidArgument(format!(
                "unknown render style `{other}` (expected ascii, unicode or svg)"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    rows: usize,
    cols: usize,
    #[serde(default)]
    boundary: BoundaryMode,
    cells: Vec<Vec<u8>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Reads a grid in the text or JSON format.
pub fn parse_grid(text: &str) -> Result<Configuration> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Configuration> {
    let g: GridJson = serde_json::from_str(text)
        .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    let dims = Dims::new(g.rows, g.cols, g.boundary)?;
    if g.cells.len() != g.rows {
        return Err(parse_err(
            1,
            1,
            format!("{} cell rows, header says {}", g.cells.len(), g.rows),
        ));
    }
    for (i, row) in g.cells.iter().enumerate() {
        if row.len() != g.cols {
            return Err(parse_err(
                1,
                1,
                format!("cell row {} has {} entries, expected {}", i + 1, row.len(), g.cols),
            ));
        }
        if let Some(v) = row.iter().find(|&&v| v > 1) {
            return Err(parse_err(1, 1, format!("cell value {v} is not 0 or 1")));
        }
    }
    Ok(Configuration::from_fn(dims, |at| g.cells[at.i - 1][at.j - 1] == 1))
}

fn parse_header(line: &str, number: usize) -> Result<(usize, usize, BoundaryMode)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() < 2 || fields.len() > 3 {
        return Err(parse_err(number, 1, "header must be `rows cols [boundary]`"));
    }
    let num = |k: usize| {
        fields[k]
            .parse::<usize>()
            .map_err(|_| parse_err(number, 1, format!("`{}` is not a size", fields[k])))
    };
    let boundary = match fields.get(2) {
        Some(b) => b
            .parse()
            .map_err(|_| parse_err(number, 1, format!("unknown boundary `{b}`")))?,
        None => BoundaryMode::Free,
    };
    Ok((num(0)?, num(1)?, boundary))
}

fn parse_text(text: &str) -> Result<Configuration> {
    let mut header = None;
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        last_line = number;
        if raw.trim().is_empty() {
            continue;
        }
        if rows.is_empty()
            && header.is_none()
            && raw.trim_start().starts_with(|c: char| c.is_ascii_digit())
        {
            header = Some(parse_header(raw, number)?);
            continue;
        }
        let mut row = Vec::new();
        for (col, ch) in raw.chars().enumerate() {
            match ch {
                '#' => row.push(true),
                '.' => row.push(false),
                c if c.is_whitespace() => {}
                c => {
                    return Err(parse_err(
                        number,
                        col + 1,
                        format!("unexpected character `{c}`"),
                    ))
                }
            }
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_err(
                    number,
                    1,
                    format!("row has {} lots, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(last_line.max(1), 1, "no grid rows"));
    }
    let (m, n) = (rows.len(), rows[0].len());
    let boundary = match header {
        Some((hm, hn, b)) => {
            if (hm, hn) != (m, n) {
                return Err(parse_err(
                    1,
                    1,
                    format!("header says {hm}x{hn}, grid is {m}x{n}"),
                ));
            }
            b
        }
        None => BoundaryMode::Free,
    };
    let dims = Dims::new(m, n, boundary)?;
    Ok(Configuration::from_fn(dims, |at| rows[at.i - 1][at.j - 1]))
}

fn ascii(config: &Configuration, house: char, empty: char) -> String {
    let mut out = String::new();
    for i in 1..=config.rows() {
        let row = config.row_profile(i);
        out.extend((0..config.cols()).map(|c| if row.contains(c) { house } else { empty }));
        out.push('\n');
    }
    out
}

const CELL: usize = 20;
const MARGIN: usize = 30;

fn svg(config: &Configuration) -> String {
    let (m, n) = (config.rows(), config.cols());
    let width = n * CELL + 2 * MARGIN;
    let height = m * CELL + 2 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    );
    for i in 1..=m {
        let row = config.row_profile(i);
        for c in 0..n {
            let fill = if row.contains(c) { "#808080" } else { "#ffffff" };
            let _ = writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#000000"/>"##,
                MARGIN + c * CELL,
                MARGIN + (i - 1) * CELL
            );
        }
    }
    // north arrow above the tract, pointing up
    let x = width - MARGIN / 2;
    let _ = writeln!(
        out,
        r##"<path d="M {x} 4 L {} 16 L {} 16 Z" fill="#000000"/>"##,
        x - 5,
        x + 5
    );
    let _ = writeln!(
        out,
        r##"<text x="{x}" y="27" font-size="10" text-anchor="middle">N</text>"##
    );
    out.push_str("</svg>\n");
    out
}

/// Deterministic rendering. ASCII styles print row 1 first, each row ending
/// in a newline.
pub fn render(config: &Configuration, style: RenderStyle) -> String {
    match style {
        RenderStyle::AsciiPlain => ascii(config, '#', '.'),
        RenderStyle::AsciiUnicode => ascii(config, '\u{2588}', '\u{00b7}'),
        RenderStyle::Svg => svg(config),
    }
}

/// A text grid with a `rows cols boundary` header line.
pub fn to_grid_file(config: &Configuration) -> String {
    format!(
        "{} {} {}\n{}",
        config.rows(),
        config.cols(),
        config.boundary(),
        render(config, RenderStyle::AsciiPlain)
    )
}

pub fn to_json_value(config: &Configuration) -> serde_json::Value {
    let g = GridJson {
        rows: config.rows(),
        cols: config.cols(),
        boundary: config.boundary(),
        cells: (1..=config.rows())
            .map(|i| {
                let row = config.row_profile(i);
                (0..config.cols()).map(|c| u8::from(row.contains(c))).collect()
            })
            .collect(),
    };
    serde_json::to_value(g).expect("grid serializes")
}

pub fn to_json(config: &Configuration) -> String {
    to_json_value(config).to_string()
}
