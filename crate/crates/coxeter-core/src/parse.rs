//! The `coxdef` text format.
//!
//! ```text
//! rank 3
//! names a b c
//! m 1 2 3     # i < j, 1-based
//! m 2 3 inf
//! ```
//! Pairs that are never mentioned default to `inf`.

use std::collections::BTreeMap;

use crate::error::ParseError;
use crate::system::{CoxeterSystem, Label};

#[derive(Clone, Debug)]
pub struct ParsedSystem {
    pub system: CoxeterSystem,
    /// 0-based pairs that fell back to `inf`.
    pub defaulted: Vec<(usize, usize)>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_index(tok: (usize, &str), line: usize) -> Result<usize, ParseError> {
    tok.1
        .parse::<usize>()
        .map_err(|_| err(line, tok.0, format!("expected a generator index, found `{}`", tok.1)))
}

pub fn parse_system(text: &str) -> Result<ParsedSystem, ParseError> {
    let mut rank: Option<(usize, usize)> = None;
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut entries: BTreeMap<(usize, usize), (Label, usize, usize)> = BTreeMap::new();

    for (lno, raw) in text.lines().enumerate() {
        let lno = lno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, head)) = toks.first() else { continue };
        match head {
            "rank" => {
                if rank.is_some() {
                    return Err(err(lno, col, "duplicate `rank` line"));
                }
                if toks.len() != 2 {
                    return Err(err(lno, col, "expected `rank <n>`"));
                }
                let n = parse_index(toks[1], lno)?;
                if n == 0 {
                    return Err(err(lno, toks[1].0, "rank must be positive"));
                }
                if n > crate::system::MAX_RANK {
                    return Err(err(lno, toks[1].0, "rank exceeds 64"));
                }
                rank = Some((n, lno));
            }
            "names" => {
                if names.is_some() {
                    return Err(err(lno, col, "duplicate `names` line"));
                }
                names = Some((lno, toks[1..].iter().map(|t| t.1.to_string()).collect()));
            }
            "m" => {
                let Some((n, _)) = rank else {
                    return Err(err(lno, col, "`m` line before `rank`"));
                };
                if toks.len() != 4 {
                    return Err(err(lno, col, "expected `m <i> <j> <label>`"));
                }
                let i = parse_index(toks[1], lno)?;
                let j = parse_index(toks[2], lno)?;
                for (t, v) in [(toks[1], i), (toks[2], j)] {
                    if v == 0 || v > n {
                        return Err(err(lno, t.0, format!("index {v} outside 1..={n} (rank mismatch)")));
                    }
                }
                let lt = toks[3];
                let label = if lt.1 == "inf" || lt.1 == "∞" {
                    Label::Infinite
                } else {
                    let m = lt
                        .1
                        .parse::<u32>()
                        .map_err(|_| err(lno, lt.0, format!("bad label `{}`", lt.1)))?;
                    Label::Finite(m)
                };
                if i == j {
                    if label != Label::Finite(1) {
                        return Err(err(lno, lt.0, format!("diagonal m({i},{i}) must be 1")));
                    }
                    continue;
                }
                if let Label::Finite(m) = label {
                    if m < 2 {
                        return Err(err(lno, lt.0, format!("off-diagonal label {m} is below 2")));
                    }
                }
                let key = (i.min(j) - 1, i.max(j) - 1);
                if let Some(&(prev, pl, pc)) = entries.get(&key) {
                    if prev != label {
                        return Err(err(
                            lno,
                            lt.0,
                            format!(
                                "asymmetric matrix: m({i},{j}) = {label} conflicts with {prev} at line {pl}, column {pc}"
                            ),
                        ));
                    }
                }
                entries.insert(key, (label, lno, lt.0));
            }
            other => return Err(err(lno, col, format!("unknown directive `{other}`"))),
        }
    }

    let Some((n, _)) = rank else {
        return Err(err(1, 1, "missing `rank` line"));
    };
    let names = match names {
        Some((lno, v)) => {
            if v.len() != n {
                return Err(err(lno, 1, format!("rank mismatch: {} names for rank {n}", v.len())));
            }
            Some(v)
        }
        None => None,
    };
    let mut m = vec![vec![Label::Infinite; n]; n];
    let mut defaulted = Vec::new();
    for i in 0..n {
        m[i][i] = Label::Finite(1);
        for j in i + 1..n {
            match entries.get(&(i, j)) {
                Some(&(l, _, _)) => {
                    m[i][j] = l;
                    m[j][i] = l;
                }
                None => defaulted.push((i, j)),
            }
        }
    }
    let system = CoxeterSystem::new(m, names).map_err(|e| err(1, 1, e.to_string()))?;
    Ok(ParsedSystem { system, defaulted })
}

/// Serializes a system back to `coxdef`, listing every off-diagonal pair.
pub fn to_coxdef(system: &CoxeterSystem) -> String {
    let mut out = format!("rank {}\n", system.rank());
    if let Some(n) = system.names() {
        out.push_str(&format!("names {}\n", n.join(" ")));
    }
    for (i, j) in system.pairs() {
        out.push_str(&format!("m {} {} {}\n", i + 1, j + 1, system.label(i, j)));
    }
    out
}
