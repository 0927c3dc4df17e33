//! Text format for pc presentations.
//!
//! ```text
//! # comments run to end of line
//! p=3
//! ngens=3
//! pow 1 = g3
//! comm 2 1 = g3^1
//! ```
//!
//! Words are space-separated factors `g<k>` or `g<k>^<e>` with strictly
//! increasing `k` and `0 < e < p`; an empty word or `1` is the identity.
//! Relations that are not listed are trivial.

use super::PcPresentation;
use crate::error::{Error, Result};

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

/// Tokens of one line with their byte offsets in the whole text.
fn tokens(line: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        let sep = c.is_whitespace() || c == '=';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((base + s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
        if c == '=' {
            out.push((base + i, "="));
        }
    }
    if let Some(s) = start {
        out.push((base + s, &line[s..]));
    }
    out
}

fn number(pos: usize, s: &str) -> Result<u64> {
    s.parse::<u64>().or_else(|_| err(pos, format!("expected a number, found `{s}`")))
}

fn header(toks: &[(usize, &str)], key: &str) -> Result<u64> {
    match toks {
        [(_, k), (_, "="), (pos, v)] if *k == key => number(*pos, v),
        [(pos, _), ..] => err(*pos, format!("expected `{key}=<number>`")),
        [] => unreachable!(),
    }
}

fn parse_word(toks: &[(usize, &str)], p: u32, n: usize) -> Result<Vec<(usize, u32)>> {
    if let [(_, "1")] = toks {
        return Ok(Vec::new());
    }
    let mut out: Vec<(usize, u32)> = Vec::new();
    for &(pos, t) in toks {
        let Some(rest) = t.strip_prefix('g') else {
            return err(pos, format!("expected a factor `g<k>^<e>`, found `{t}`"));
        };
        let (k, e) = match rest.split_once('^') {
            Some((k, e)) => (number(pos, k)?, number(pos, e)?),
            None => (number(pos, rest)?, 1),
        };
        if k == 0 || k as usize > n {
            return err(pos, format!("generator g{k} out of range 1..{n}"));
        }
        if e == 0 || e >= p as u64 {
            return err(pos, format!("exponent {e} not in 1..{}", p - 1));
        }
        if out.last().is_some_and(|&(last, _)| last >= k as usize) {
            return err(pos, "factors must have strictly increasing generators");
        }
        out.push((k as usize, e as u32));
    }
    Ok(out)
}

/// Parse a presentation in the text format above.
pub fn parse_presentation(text: &str) -> Result<PcPresentation> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body, offset);
        if !toks.is_empty() {
            lines.push(toks);
        }
        offset += raw.len();
    }
    let mut it = lines.into_iter();
    let Some(ptoks) = it.next() else {
        return err(0, "missing `p=<prime>` header");
    };
    let p = header(&ptoks, "p")?;
    if p < 2 || p > u32::MAX as u64 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return err(ptoks[2].0, format!("{p} is not prime"));
    }
    let p = p as u32;
    let Some(ntoks) = it.next() else {
        return err(offset, "missing `ngens=<n>` header");
    };
    let n = header(&ntoks, "ngens")? as usize;
    let mut pres = PcPresentation::new(p, n);
    let mut seen = std::collections::HashSet::new();
    for toks in it {
        let (pos, kw) = toks[0];
        let (lhs, rest): (Vec<usize>, &[(usize, &str)]) = match kw {
            "pow" | "comm" => {
                let arity = if kw == "pow" { 1 } else { 2 };
                let eq = toks.iter().position(|&(_, t)| t == "=");
                let Some(eq) = eq else {
                    return err(pos, "missing `=`");
                };
                if eq != arity + 1 {
                    return err(pos, format!("`{kw}` takes {arity} index(es)"));
                }
                let mut idx = Vec::new();
                for &(ip, t) in &toks[1..eq] {
                    let v = number(ip, t)? as usize;
                    if v == 0 || v > n {
                        return err(ip, format!("index {v} out of range 1..{n}"));
                    }
                    idx.push(v);
                }
                (idx, &toks[eq + 1..])
            }
            _ => return err(pos, format!("unknown relation `{kw}`")),
        };
        if !seen.insert((kw, lhs.clone())) {
            return err(pos, "relation given twice");
        }
        let word = parse_word(rest, p, n)?;
        let bound = *lhs.iter().max().unwrap();
        if let Some(&(g, _)) = word.first() {
            if g <= bound {
                return err(rest[0].0, format!("word must only involve generators after g{bound}"));
            }
        }
        if kw == "pow" {
            pres.set_power(lhs[0], &word);
        } else {
            let (j, i) = (lhs[0], lhs[1]);
            if j <= i {
                return err(pos, "commutator relations are stated as `comm j i` with j > i");
            }
            pres.set_comm(j, i, &word);
        }
    }
    Ok(pres)
}

/// Render a presentation in the text format accepted by [`parse_presentation`].
pub fn format_presentation(pres: &PcPresentation) -> String {
    let word = |w: &[u32]| {
        let f: Vec<String> = w
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| if e == 1 { format!("g{}", k + 1) } else { format!("g{}^{e}", k + 1) })
            .collect();
        if f.is_empty() { "1".to_string() } else { f.join(" ") }
    };
    let mut s = format!("p={}\nngens={}\n", pres.prime, pres.ngens);
    for (i, w) in pres.power.iter().enumerate() {
        if w.iter().any(|&e| e != 0) {
            s += &format!("pow {} = {}\n", i + 1, word(w));
        }
    }
    for (j, row) in pres.comm.iter().enumerate() {
        for (i, w) in row.iter().enumerate() {
            if w.iter().any(|&e| e != 0) {
                s += &format!("comm {} {} = {}\n", j + 1, i + 1, word(w));
            }
        }
    }
    s
}
