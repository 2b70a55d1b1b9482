//! Plain-text file formats.
//!
//! In every format blank lines and lines starting with `#` are ignored.
//!
//! - Poset: `n <count>` then one `x < y` per line (closure applied on load),
//!   or JSON `{"n": 3, "pairs": [[0, 1]]}`. The writer emits Hasse pairs.
//! - Ideal family: `n <count>` then one member per line, elements
//!   comma-separated in ascending order, `-` for the empty set.
//! - StOp table: `stop n=<n> base=<base>` then `S -> T` per line using the
//!   member syntax. `<base>` is either a path or an inline relation such as
//!   `{0<1,1<2}` (`{}` for the discrete order).
//! - Weights / total extension: one integer per line, line `i` is the value
//!   of element `i`.
//! - Graph: `n <count>` then one edge `u v` per line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal_lattice::IdealFamily;
use crate::mwi::WeightVector;
use crate::poset::{Poset, TotalExtension};
use crate::stop::{Graph, StOpMap};
use crate::subset::Subset;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.trim()
        .parse()
        .map_err(|_| err(line, format!("expected an integer, found `{}`", tok.trim())))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (line, head) = lines
        .next()
        .ok_or_else(|| err(0, "missing `n <count>` header"))?;
    let rest = head
        .strip_prefix('n')
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| err(line, "expected `n <count>` header"))?;
    parse_num(line, rest)
}

fn locate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => err(line, other.to_string()),
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    if text.trim_start().starts_with('{') {
        let json: PosetJson =
            serde_json::from_str(text).map_err(|e| err(e.line(), e.to_string()))?;
        return Poset::new(json.n, &json.pairs);
    }
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let (x, y) = l
            .split_once('<')
            .ok_or_else(|| err(line, format!("expected `x < y`, found `{l}`")))?;
        pairs.push((parse_num(line, x)?, parse_num(line, y)?));
    }
    Poset::new(n, &pairs)
}

pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("n {}\n", p.len());
    for (x, y) in p.hasse() {
        out.push_str(&format!("{x} < {y}\n"));
    }
    out
}

pub fn write_poset_json(p: &Poset) -> String {
    let json = PosetJson {
        n: p.len(),
        pairs: p.hasse(),
    };
    serde_json::to_string(&json).expect("plain struct serializes")
}

/// Posets separated by blank lines, as written by `npo --stream`.
pub fn parse_poset_stream(text: &str) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for l in text.lines().chain(std::iter::once("")) {
        if l.trim().is_empty() {
            if !block.trim().is_empty() {
                out.push(parse_poset(&block)?);
            }
            block.clear();
        } else {
            block.push_str(l);
            block.push('\n');
        }
    }
    Ok(out)
}

/// Parses `-` or `0,2,5`.
pub fn parse_member(tok: &str, n: usize, line: usize) -> Result<Subset> {
    let tok = tok.trim();
    if tok == "-" {
        return Ok(Subset::EMPTY);
    }
    let mut s = Subset::EMPTY;
    for part in tok.split(',') {
        let x: usize = parse_num(line, part)?;
        if x >= n {
            return Err(err(line, format!("element {x} out of range for n = {n}")));
        }
        s.insert(x);
    }
    Ok(s)
}

pub fn format_member(s: Subset) -> String {
    if s.is_empty() {
        return "-".into();
    }
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_family(text: &str) -> Result<IdealFamily> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    if n > crate::MAX_ELEMENTS {
        return Err(Error::TooLarge(n));
    }
    let members = lines
        .map(|(line, l)| parse_member(l, n, line))
        .collect::<Result<Vec<_>>>()?;
    IdealFamily::new(n, members)
}

pub fn write_family(f: &IdealFamily) -> String {
    let mut out = format!("n {}\n", f.ground_size());
    for &s in f.members() {
        out.push_str(&format_member(s));
        out.push('\n');
    }
    out
}

/// Where a StOp file says its base poset comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseRef {
    Inline(Poset),
    Path(String),
}

fn parse_inline_relation(n: usize, spec: &str, line: usize) -> Result<Poset> {
    let inner = spec
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| err(line, "inline base must be wrapped in braces"))?;
    let mut pairs = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (x, y) = part
            .split_once('<')
            .ok_or_else(|| err(line, format!("expected `x<y`, found `{part}`")))?;
        pairs.push((parse_num(line, x)?, parse_num(line, y)?));
    }
    Poset::new(n, &pairs).map_err(|e| locate(e, line))
}

/// Reads the `stop n=<n> base=<base>` header.
pub fn parse_stop_header(text: &str) -> Result<(usize, BaseRef)> {
    let (line, head) = content_lines(text)
        .next()
        .ok_or_else(|| err(0, "missing `stop` header"))?;
    let mut words = head.split_whitespace();
    if words.next() != Some("stop") {
        return Err(err(line, "expected `stop n=<n> base=<base>` header"));
    }
    let mut n = None;
    let mut base = None;
    for w in words {
        if let Some(v) = w.strip_prefix("n=") {
            n = Some(parse_num::<usize>(line, v)?);
        } else if let Some(v) = w.strip_prefix("base=") {
            base = Some(v.to_string());
        } else {
            return Err(err(line, format!("unknown header field `{w}`")));
        }
    }
    let n = n.ok_or_else(|| err(line, "header lacks n=<n>"))?;
    let base = base.ok_or_else(|| err(line, "header lacks base=<base>"))?;
    let base = if base.starts_with('{') {
        BaseRef::Inline(parse_inline_relation(n, &base, line)?)
    } else {
        BaseRef::Path(base)
    };
    Ok((n, base))
}

/// Parses a StOp table over `base`. The header's size must match, and an
/// inline header base must equal `base`.
pub fn parse_stop(text: &str, base: &Poset) -> Result<StOpMap> {
    let (n, base_ref) = parse_stop_header(text)?;
    if n != base.len() {
        return Err(Error::SizeMismatch {
            left: n,
            right: base.len(),
        });
    }
    if let BaseRef::Inline(p) = &base_ref {
        if p != base {
            return Err(Error::BaseMismatch);
        }
    }
    let mut entries = Vec::new();
    for (line, l) in content_lines(text).skip(1) {
        let (s, t) = l
            .split_once("->")
            .ok_or_else(|| err(line, format!("expected `S -> T`, found `{l}`")))?;
        entries.push((parse_member(s, n, line)?, parse_member(t, n, line)?));
    }
    StOpMap::from_entries(base, &entries)
}

/// Emits the table with the base inlined.
pub fn write_stop(map: &StOpMap) -> String {
    let base = map.base();
    let rel = base
        .hasse()
        .iter()
        .map(|(x, y)| format!("{x}<{y}"))
        .collect::<Vec<_>>()
        .join(",");
    let mut out = format!("stop n={} base={{{rel}}}\n", base.len());
    for (s, t) in map.entries() {
        out.push_str(&format!("{} -> {}\n", format_member(s), format_member(t)));
    }
    out
}

fn parse_integers(text: &str) -> Result<Vec<i64>> {
    content_lines(text)
        .map(|(line, l)| parse_num(line, l))
        .collect()
}

pub fn parse_weights(text: &str) -> Result<WeightVector> {
    parse_integers(text).map(WeightVector::new)
}

pub fn write_weights(w: &WeightVector) -> String {
    w.as_slice().iter().map(|v| format!("{v}\n")).collect()
}

/// Reads `τ(i)` per line and validates it against `poset`.
pub fn parse_tau(text: &str, poset: &Poset) -> Result<TotalExtension> {
    let values = content_lines(text)
        .map(|(line, l)| parse_num::<usize>(line, l))
        .collect::<Result<Vec<_>>>()?;
    TotalExtension::new(values, poset)
}

pub fn write_tau(tau: &TotalExtension) -> String {
    tau.as_slice().iter().map(|v| format!("{v}\n")).collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l
            .split(|c: char| c.is_whitespace() || c == '-')
            .filter(|t| !t.is_empty())
            .collect();
        let [u, v] = toks[..] else {
            return Err(err(line, format!("expected `u v`, found `{l}`")));
        };
        edges.push((parse_num(line, u)?, parse_num(line, v)?));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.len());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
