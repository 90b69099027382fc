//! Plain-text persistence.
//!
//! `QREP a b c` is followed by blocks `F0..F3` (b rows of a rationals) and
//! `G0..G3` (c rows of b rationals). `MONAD n` is followed by blocks
//! `A0..A3` ((2n+2) rows of n rationals) and `B0..B3` (n rows of 2n+2
//! rationals). Tokens are integers or `p/q`; `#` starts a comment; blank
//! lines are ignored. A matrix with zero rows or zero columns has no row
//! lines, so its block is the bare header.
//!
//! Writers emit the canonical form (reduced fractions, single spaces), and
//! `parse(write(x)) == x` holds exactly.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::monad::Monad;
use crate::pencil::LinearPencil;
use crate::quiver::{DimVector, QuiverRep};

/// Either kind of file, as recognized by its header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Rep(QuiverRep),
    Monad(Monad),
}

/// Parses `p/q` or an integer. Decimal notation is rejected.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let ok = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(p) || !ok(q) {
        return None;
    }
    let (p, q) = (BigInt::from_str(p).ok()?, BigInt::from_str(q).ok()?);
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

struct Lines<'a> {
    inner: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let inner = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                last_line = i + 1;
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then_some((i + 1, l))
            })
            .collect();
        Self {
            inner,
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let item = self.inner.get(self.pos).copied().ok_or(Error::Parse {
            line: self.last_line + 1,
            message: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(item)
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.get(self.pos) {
            None => Ok(()),
            Some(&(line, _)) => Err(Error::Parse {
                line,
                message: "trailing content after the last block".into(),
            }),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn header_numbers(lines: &mut Lines<'_>, keyword: &str, count: usize) -> Result<Vec<usize>> {
    let (line, text) = lines.next()?;
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line, format!("expected header `{keyword}`")));
    }
    let nums: Vec<usize> = tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad size `{t}`")))
        })
        .collect::<Result<_>>()?;
    if nums.len() != count {
        return Err(parse_err(line, format!("`{keyword}` takes {count} sizes")));
    }
    Ok(nums)
}

fn read_block(
    lines: &mut Lines<'_>,
    name: &str,
    rows: usize,
    cols: usize,
) -> Result<RationalMatrix> {
    let (line, text) = lines.next()?;
    if text != name {
        return Err(parse_err(
            line,
            format!("expected block `{name}`, found `{text}`"),
        ));
    }
    if cols == 0 {
        return Ok(RationalMatrix::zeros(rows, 0));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, text) = lines.next()?;
        let row: Vec<Rational> = text
            .split_whitespace()
            .map(|t| {
                parse_rational(t).ok_or_else(|| parse_err(line, format!("bad rational `{t}`")))
            })
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(parse_err(
                line,
                format!(
                    "block `{name}` row has {} entries, expected {cols}",
                    row.len()
                ),
            ));
        }
        data.extend(row);
    }
    RationalMatrix::new(rows, cols, data)
}

fn read_four(
    lines: &mut Lines<'_>,
    prefix: char,
    rows: usize,
    cols: usize,
) -> Result<[RationalMatrix; 4]> {
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        out.push(read_block(lines, &format!("{prefix}{i}"), rows, cols)?);
    }
    Ok(out.try_into().expect("four blocks"))
}

fn write_block(out: &mut String, name: &str, m: &RationalMatrix) {
    out.push_str(name);
    out.push('\n');
    if m.cols() == 0 {
        return;
    }
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

pub fn parse_qrep(text: &str) -> Result<QuiverRep> {
    let mut lines = Lines::new(text);
    let r = read_qrep_body(&mut lines)?;
    lines.finish()?;
    Ok(r)
}

fn read_qrep_body(lines: &mut Lines<'_>) -> Result<QuiverRep> {
    let d = header_numbers(lines, "QREP", 3)?;
    let dim = DimVector::new(d[0], d[1], d[2]);
    let f = read_four(lines, 'F', dim.s0, dim.s_minus1)?;
    let g = read_four(lines, 'G', dim.s1, dim.s0)?;
    QuiverRep::new(dim, f, g)
}

pub fn write_qrep(r: &QuiverRep) -> String {
    let d = r.dim();
    let mut out = String::new();
    writeln!(out, "QREP {} {} {}", d.s_minus1, d.s0, d.s1).expect("string write");
    for (i, m) in r.f().iter().enumerate() {
        write_block(&mut out, &format!("F{i}"), m);
    }
    for (i, m) in r.g().iter().enumerate() {
        write_block(&mut out, &format!("G{i}"), m);
    }
    out
}

pub fn parse_monad(text: &str) -> Result<Monad> {
    let mut lines = Lines::new(text);
    let m = read_monad_body(&mut lines)?;
    lines.finish()?;
    Ok(m)
}

fn read_monad_body(lines: &mut Lines<'_>) -> Result<Monad> {
    let n = header_numbers(lines, "MONAD", 1)?[0];
    if n == 0 {
        return Err(parse_err(lines.inner[0].0, "monad charge must be positive"));
    }
    let alpha = read_four(lines, 'A', 2 * n + 2, n)?;
    let beta = read_four(lines, 'B', n, 2 * n + 2)?;
    Monad::new(LinearPencil::new(alpha)?, LinearPencil::new(beta)?)
}

pub fn write_monad(m: &Monad) -> String {
    let mut out = String::new();
    writeln!(out, "MONAD {}", m.charge()).expect("string write");
    for (i, a) in m.alpha().coeff().iter().enumerate() {
        write_block(&mut out, &format!("A{i}"), a);
    }
    for (i, b) in m.beta().coeff().iter().enumerate() {
        write_block(&mut out, &format!("B{i}"), b);
    }
    out
}

/// Dispatches on the header keyword.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let keyword = match lines.inner.first() {
        None => return Err(parse_err(1, "empty input")),
        Some(&(_, first)) => first.split_whitespace().next().unwrap_or(""),
    };
    let doc = match keyword {
        "QREP" => Document::Rep(read_qrep_body(&mut lines)?),
        "MONAD" => Document::Monad(read_monad_body(&mut lines)?),
        other => {
            return Err(parse_err(
                lines.inner[0].0,
                format!("unknown header `{other}`, expected QREP or MONAD"),
            ))
        }
    };
    lines.finish()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charge_one::Charge1Family;
    use crate::linalg::rat;
    use crate::sample::Sampler;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(parse_rational("1/"), None);
        assert_eq!(parse_rational("--1"), None);
    }

    #[test]
    fn qrep_layout() {
        let r = Charge1Family::GloballySurjectiveRank2.representative();
        let text = write_qrep(&r);
        let expected = "QREP 1 4 1\nF0\n0\n1\n0\n0\nF1\n-1\n0\n0\n0\n";
        assert!(text.starts_with(expected), "{text}");
        assert!(text.contains("G3\n0 0 0 1\n"));
        assert_eq!(parse_qrep(&text).unwrap(), r);
    }

    #[test]
    fn roundtrip_random() {
        let mut s = Sampler::new(3);
        for fam in Charge1Family::ALL {
            let r = fam.sample(&mut s);
            let text = write_qrep(&r);
            assert_eq!(parse_qrep(&text).unwrap(), r);
            assert_eq!(write_qrep(&parse_qrep(&text).unwrap()), text);
            let m = Monad::from_rep(&r).unwrap();
            let mt = write_monad(&m);
            assert_eq!(parse_monad(&mt).unwrap(), m);
            assert_eq!(parse_document(&mt).unwrap(), Document::Monad(m));
        }
    }

    #[test]
    fn zero_width_blocks() {
        let r = QuiverRep::zero(DimVector::new(0, 3, 1));
        let text = write_qrep(&r);
        assert!(text.starts_with("QREP 0 3 1\nF0\nF1\nF2\nF3\nG0\n0 0 0\n"));
        assert_eq!(parse_qrep(&text).unwrap(), r);
    }

    #[test]
    fn comments_and_blanks() {
        let r = Charge1Family::LocallyFree.representative();
        let noisy: String = write_qrep(&r)
            .lines()
            .flat_map(|l| [format!("{l}   # note"), String::new(), "# comment".into()])
            .collect::<Vec<_>>()
            .join("\n");
        assert_eq!(parse_qrep(&noisy).unwrap(), r);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = write_qrep(&Charge1Family::LocallyFree.representative());
        let truncated: String = text.lines().take(7).map(|l| format!("{l}\n")).collect();
        assert_eq!(
            parse_qrep(&truncated),
            Err(Error::Parse {
                line: 8,
                message: "unexpected end of input".into()
            })
        );
        let bad = text.replacen("F1\n-1", "F1\n-1.0", 1);
        assert!(matches!(
            parse_qrep(&bad),
            Err(Error::Parse { line: 8, .. })
        ));
        let wide = text.replacen("F1\n-1", "F1\n-1 2", 1);
        assert!(matches!(
            parse_qrep(&wide),
            Err(Error::Parse { line: 8, .. })
        ));
        assert!(matches!(
            parse_document("HELLO 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_qrep(&format!("{text}0\n")),
            Err(Error::Parse { .. })
        ));
    }
}
