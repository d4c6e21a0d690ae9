//! Text file formats consumed by the CLI: stabilizer codes, channels, and
//! convolutional specifications. `#` starts a comment anywhere; blank
//! lines are ignored.

use std::fmt;

use crate::channel::PauliChannel;
use crate::code::StabilizerCode;
use crate::convolutional::ConvolutionalSpec;
use crate::pauli::PauliString;

/// A parse failure with the 1-based line it occurred on.
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

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Content lines with their original line numbers, comments stripped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((idx + 1, line))
        })
        .collect()
}

/// Parses the code file format: `n k` on the first content line, then n-k
/// generator words over {I, X, Y, Z}.
pub fn parse_code(text: &str) -> Result<StabilizerCode, ParseError> {
    let lines = content_lines(text);
    let Some(&(lineno, header)) = lines.first() else {
        return err(1, "empty code file; expected `n k` header");
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return err(lineno, format!("expected `n k`, got `{header}`"));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| ParseError { line: lineno, message: format!("invalid n `{}`", fields[0]) })?;
    let k: usize = fields[1]
        .parse()
        .map_err(|_| ParseError { line: lineno, message: format!("invalid k `{}`", fields[1]) })?;
    if k >= n {
        return err(lineno, format!("need 0 <= k < n, got n={n} k={k}"));
    }
    let gen_lines = &lines[1..];
    if gen_lines.len() != n - k {
        return err(
            lineno,
            format!("expected {} generator lines, found {}", n - k, gen_lines.len()),
        );
    }
    let mut generators = Vec::with_capacity(n - k);
    for &(gl, word) in gen_lines {
        let g: PauliString = word
            .parse()
            .map_err(|e| ParseError { line: gl, message: e })?;
        if g.len() != n {
            return err(gl, format!("generator has length {}, expected {n}", g.len()));
        }
        generators.push(g);
    }
    StabilizerCode::new(n, generators)
        .map_err(|e| ParseError { line: lineno, message: e.to_string() })
}

/// Renders a code in the same format `parse_code` reads.
pub fn format_code(code: &StabilizerCode) -> String {
    let mut out = format!("{} {}\n", code.n(), code.k());
    for g in code.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parses the channel file format: either a single `depolarizing p` line
/// or n lines of four probabilities `pI pX pY pZ`.
pub fn parse_channel(text: &str, n: usize) -> Result<PauliChannel, ParseError> {
    let lines = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return err(1, "empty channel file");
    };
    if let Some(rest) = first.strip_prefix("depolarizing") {
        if lines.len() > 1 {
            return err(lines[1].0, "unexpected content after `depolarizing p`");
        }
        let p: f64 = rest
            .trim()
            .parse()
            .map_err(|_| ParseError {
                line: first_no,
                message: format!("invalid probability `{}`", rest.trim()),
            })?;
        return PauliChannel::depolarizing(n, p)
            .map_err(|e| ParseError { line: first_no, message: e.to_string() });
    }
    if lines.len() != n {
        return err(
            first_no,
            format!("expected {n} distribution lines, found {}", lines.len()),
        );
    }
    let mut dists = Vec::with_capacity(n);
    for &(lineno, line) in &lines {
        let vals: Vec<f64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError {
                line: lineno,
                message: format!("invalid probability in `{line}`"),
            })?;
        if vals.len() != 4 {
            return err(lineno, format!("expected 4 probabilities, found {}", vals.len()));
        }
        dists.push([vals[0], vals[1], vals[2], vals[3]]);
    }
    PauliChannel::new(dists).map_err(|e| ParseError { line: first_no, message: e.to_string() })
}

/// Parses the convolutional spec format: `eta kappa`, then eta-kappa
/// pattern lines, then optional `HEAD` / `TAIL` sections listing boundary
/// generators.
pub fn parse_conv_spec(text: &str) -> Result<ConvolutionalSpec, ParseError> {
    let lines = content_lines(text);
    let Some(&(lineno, header)) = lines.first() else {
        return err(1, "empty spec file; expected `eta kappa` header");
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return err(lineno, format!("expected `eta kappa`, got `{header}`"));
    }
    let eta: usize = fields[0]
        .parse()
        .map_err(|_| ParseError { line: lineno, message: format!("invalid eta `{}`", fields[0]) })?;
    let kappa: usize = fields[1]
        .parse()
        .map_err(|_| ParseError { line: lineno, message: format!("invalid kappa `{}`", fields[1]) })?;
    if eta == 0 || kappa >= eta {
        return err(lineno, format!("need eta >= 1 and kappa < eta, got eta={eta} kappa={kappa}"));
    }
    let block_rows = eta - kappa;
    let mut block = Vec::with_capacity(block_rows);
    let mut head = Vec::new();
    let mut tail = Vec::new();
    let mut section: Option<&str> = None;
    for &(gl, line) in &lines[1..] {
        match line {
            "HEAD" => {
                section = Some("HEAD");
                continue;
            }
            "TAIL" => {
                section = Some("TAIL");
                continue;
            }
            _ => {}
        }
        let g: PauliString = line.parse().map_err(|e| ParseError { line: gl, message: e })?;
        match section {
            None => {
                if block.len() == block_rows {
                    return err(gl, format!("more than {block_rows} block pattern lines"));
                }
                block.push(g);
            }
            Some("HEAD") => head.push(g),
            Some(_) => tail.push(g),
        }
    }
    if block.len() != block_rows {
        return err(
            lineno,
            format!("expected {block_rows} block pattern lines, found {}", block.len()),
        );
    }
    ConvolutionalSpec::new(eta, kappa, block)
        .map(|s| s.with_boundaries(head, tail))
        .map_err(|e| ParseError { line: lineno, message: e.to_string() })
}
