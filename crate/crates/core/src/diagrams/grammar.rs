//! Text form of diagrams.
//!
//! ```text
//! diagram   := indicator? tailpart? body
//! indicator := ("(+)" | "(-)" | "[+]" | "[-]") " "
//! tailpart  := ("x" INT?)? (">" | "<")? ";"
//! body      := (" " ("o" | "x" | ">" | "<"))*
//! ```
//!
//! The body starts at the first vertex right of the tail. GL diagrams have
//! no tail and start with an anchor `@INT` naming the first listed vertex.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{cell_char, first_body_pos, Pos, Sign, Symbol, Tail, WeightDiagram};
use crate::error::{Error, Result};
use crate::lattice::{Family, SupergroupKind};

pub(super) fn render(d: &WeightDiagram) -> String {
    let mut out = String::new();
    let body = d.body();
    let Some(start) = first_body_pos(d.kind()) else {
        let lo = body.keys().next().copied().unwrap_or(Pos(0));
        let hi = body.keys().next_back().copied().unwrap_or(lo);
        let _ = write!(out, "@{}", lo.0 / 2);
        let mut p = lo;
        while p <= hi {
            let _ = write!(out, " {}", cell_char(body.get(&p).copied()));
            p = p.next();
        }
        return out;
    };
    if let Some(s) = d.sign() {
        let (l, r) = if d.kind().family == Family::OspEven {
            ('[', ']')
        } else {
            ('(', ')')
        };
        let _ = write!(out, "{l}{}{r} ", s.as_char());
    }
    let tail = d.tail();
    if tail.crosses > 0 {
        let _ = write!(out, "x{}", tail.crosses);
    }
    if let Some(c) = tail.core {
        out.push(c.as_char());
    }
    out.push(';');
    if let Some(hi) = body.keys().next_back() {
        let mut p = start;
        while p <= *hi {
            let _ = write!(out, " {}", cell_char(body.get(&p).copied()));
            p = p.next();
        }
    }
    out
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.i..].starts_with(lit.as_bytes()) {
            self.i += lit.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<i64> {
        let start = self.i;
        if self.peek() == Some(b'-') {
            self.i += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).ok()?;
        match txt.parse() {
            Ok(v) => Some(v),
            Err(_) => {
                self.i = start;
                None
            }
        }
    }
}

/// Parsed pieces before validation; the sign may be missing.
struct Raw {
    tail: Tail,
    body: BTreeMap<Pos, Symbol>,
    sign: Option<Sign>,
}

fn parse_raw(kind: SupergroupKind, text: &str) -> Result<Raw> {
    let mut c = Cursor {
        s: text.as_bytes(),
        i: 0,
    };
    c.skip_ws();
    let mut body = BTreeMap::new();
    let mut pos = match first_body_pos(kind) {
        Some(p) => p,
        None => {
            if !c.eat("@") {
                return Err(Error::parse(c.i, "GL diagrams start with an anchor `@INT`"));
            }
            let at = c.i;
            let v = c
                .int()
                .ok_or_else(|| Error::parse(at, "expected an integer anchor"))?;
            Pos(v.checked_mul(2).ok_or(Error::Overflow)?)
        }
    };
    let mut sign = None;
    let mut tail = Tail::empty();
    if kind.is_osp() {
        let at = c.i;
        for (lit, s, fam) in [
            ("(+)", Sign::Plus, Family::OspOdd),
            ("(-)", Sign::Minus, Family::OspOdd),
            ("[+]", Sign::Plus, Family::OspEven),
            ("[-]", Sign::Minus, Family::OspEven),
        ] {
            if c.eat(lit) {
                if fam != kind.family {
                    let want = if kind.family == Family::OspOdd {
                        "(+) or (-)"
                    } else {
                        "[+] or [-]"
                    };
                    return Err(Error::parse(at, format!("{kind} uses {want} indicators")));
                }
                sign = Some(s);
                break;
            }
        }
        c.skip_ws();
        if text[c.i..].contains(';') {
            if c.eat("x") {
                let at = c.i;
                tail.crosses = if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                    let v = c.int().ok_or_else(|| Error::parse(at, "bad cross count"))?;
                    u32::try_from(v).map_err(|_| Error::parse(at, "bad cross count"))?
                } else {
                    1
                };
            }
            if c.eat(">") {
                tail.core = Some(Symbol::Gt);
            } else if c.eat("<") {
                tail.core = Some(Symbol::Lt);
            }
            c.skip_ws();
            if !c.eat(";") {
                return Err(Error::parse(c.i, "expected `;` closing the tail"));
            }
        }
    }
    loop {
        c.skip_ws();
        let Some(ch) = c.peek() else { break };
        let sym = match ch {
            b'o' => None,
            b'x' => Some(Symbol::Cross),
            b'>' => Some(Symbol::Gt),
            b'<' => Some(Symbol::Lt),
            _ => return Err(Error::parse(c.i, format!("unexpected `{}`", ch as char))),
        };
        c.i += 1;
        if c.peek().is_some_and(|ch| !ch.is_ascii_whitespace()) {
            return Err(Error::parse(c.i, "symbols must be separated by spaces"));
        }
        if let Some(s) = sym {
            body.insert(pos, s);
        }
        pos = pos.next();
    }
    Ok(Raw { tail, body, sign })
}

impl WeightDiagram {
    pub fn parse(kind: SupergroupKind, text: &str) -> Result<WeightDiagram> {
        let raw = parse_raw(kind, text)?;
        WeightDiagram::new(kind, raw.tail, raw.body, raw.sign)
    }
}

/// Like [`WeightDiagram::parse`], but a missing `(+)`/`(-)` on an all-cross
/// odd tail yields both readings.
pub fn parse_candidates(kind: SupergroupKind, text: &str) -> Result<Vec<WeightDiagram>> {
    let raw = parse_raw(kind, text)?;
    let ambiguous = kind.family == Family::OspOdd
        && raw.sign.is_none()
        && raw.tail.crosses > 0
        && raw.tail.core.is_none();
    if ambiguous {
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .map(|s| WeightDiagram::new(kind, raw.tail, raw.body.clone(), Some(s)))
            .collect()
    } else {
        Ok(vec![WeightDiagram::new(
            kind, raw.tail, raw.body, raw.sign,
        )?])
    }
}
