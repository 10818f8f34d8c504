//! The two on-disk formats, with every failure reported by line number.
//!
//! Code file: a header line `n=<int>`, then one word per line as exactly
//! `n` characters of `0`/`1`. Packing file: a header line `v=<int> k=<int>`,
//! then one block per line as `k` strictly increasing 1-based points
//! separated by single spaces. In both formats a line starting with `#` is
//! a comment and blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt;

use twodist::word::MAX_LEN;
use twodist::{Code, Codeword, Packing};

/// A parse failure, tied to the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Content lines: 1-based line numbers, comments and blanks dropped,
/// trailing `\r` stripped so CRLF files parse.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty())
}

/// Reads a code file.
pub fn parse_code(text: &str) -> Result<Code, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line `n=<int>`"))?;
    let n: u32 = header
        .strip_prefix("n=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| {
            err(
                header_line,
                format!("expected header `n=<int>`, got `{header}`"),
            )
        })?;
    if n == 0 || n > MAX_LEN {
        return Err(err(
            header_line,
            format!("length {n} outside 1..={MAX_LEN}"),
        ));
    }

    let mut words = Vec::new();
    let mut first_seen: BTreeMap<Codeword, usize> = BTreeMap::new();
    for (line, row) in lines {
        if row.len() != n as usize {
            return Err(err(
                line,
                format!("expected {n} characters of 0/1, got {}", row.len()),
            ));
        }
        let mut support = Vec::new();
        for (i, c) in row.char_indices() {
            match c {
                '0' => {}
                '1' => support.push(i as u32),
                _ => {
                    return Err(err(
                        line,
                        format!("invalid character `{c}`; rows are 0/1 only"),
                    ))
                }
            }
        }
        let word = Codeword::from_support(n, &support);
        if let Some(first) = first_seen.insert(word, line) {
            return Err(err(line, format!("word `{row}` repeats line {first}")));
        }
        words.push(word);
    }
    Ok(Code::new(n, words).expect("lengths and duplicates were checked per line"))
}

/// Renders a code file; `comments` become leading `#` lines.
pub fn write_code(code: &Code, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("n={}\n", code.len()));
    for w in code.words() {
        out.push_str(&format!("{w}\n"));
    }
    out
}

/// Reads a packing file.
pub fn parse_packing(text: &str) -> Result<Packing, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line `v=<int> k=<int>`"))?;
    let bad_header = || {
        err(
            header_line,
            format!("expected header `v=<int> k=<int>`, got `{header}`"),
        )
    };
    let (v_part, k_part) = header.split_once(' ').ok_or_else(bad_header)?;
    let v: u32 = v_part
        .strip_prefix("v=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(bad_header)?;
    let k: u32 = k_part
        .strip_prefix("k=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(bad_header)?;
    if k == 0 || k > v {
        return Err(err(
            header_line,
            format!("need 1 <= k <= v, got v={v} k={k}"),
        ));
    }

    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut first_seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (line, row) in lines {
        let mut block: Vec<u32> = Vec::with_capacity(k as usize);
        for tok in row.split(' ') {
            let p: u32 = tok.parse().map_err(|_| {
                err(
                    line,
                    format!("expected {k} space-separated points, got token `{tok}`"),
                )
            })?;
            block.push(p);
        }
        if block.len() != k as usize {
            return Err(err(
                line,
                format!("expected {k} points, got {}", block.len()),
            ));
        }
        if let Some(w) = block.windows(2).find(|w| w[0] >= w[1]) {
            return Err(err(
                line,
                format!("points must strictly increase, got {} then {}", w[0], w[1]),
            ));
        }
        if let Some(&p) = block.iter().find(|&&p| p < 1 || p > v) {
            return Err(err(line, format!("point {p} outside 1..={v}")));
        }
        if let Some(first) = first_seen.insert(block.clone(), line) {
            return Err(err(line, format!("block `{row}` repeats line {first}")));
        }
        blocks.push(block);
    }
    Ok(Packing::new(v, k, blocks).expect("shape was checked per line"))
}

/// Renders a packing file; `comments` become leading `#` lines.
pub fn write_packing(p: &Packing, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("v={} k={}\n", p.v(), p.k()));
    for b in p.blocks() {
        out.push_str(&block_row(b));
        out.push('\n');
    }
    out
}

/// One block as its file row: points separated by single spaces.
pub fn block_row(block: &[u32]) -> String {
    block
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
