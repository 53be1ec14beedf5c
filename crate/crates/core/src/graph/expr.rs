//! Small expression language for named graph families.
//!
//! ```text
//! expr  := atom | kcopies | call
//! atom  := "K" N | "K" S "," T | "P" N | "C" N | "E" N | "star" N
//!        | "H" S0 S1 S2 | "petersen"
//! kcopies := K "K" N              e.g. 2K2, 3K1
//!          | K "(" expr ")"       e.g. 2(P3)
//! call  := ("join" | "union" | "cp" | "co") "(" expr ("," expr)* ")"
//! ```
//!
//! `K3,3` is read as a complete bipartite graph only when the digit follows
//! the comma immediately; `join(K3, 3K1)` is a join of two arguments.

use super::{Graph, HFamilyParams};
use crate::error::{Error, Result};

pub fn parse_family(text: &str) -> Result<Graph> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::FamilyParse(format!("{msg} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("number out of range"))
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn args(&mut self) -> Result<Vec<Graph>> {
        if !self.eat(b'(') {
            return Err(self.err("expected '('"));
        }
        let mut out = vec![self.expr()?];
        while self.eat(b',') {
            out.push(self.expr()?);
        }
        if !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.number()?;
            let inner = if self.peek() == Some(b'(') {
                let mut a = self.args()?;
                if a.len() != 1 {
                    return Err(self.err("copies take exactly one argument"));
                }
                a.pop().unwrap()
            } else {
                self.expr()?
            };
            return inner.copies(k);
        }
        let w = self.word();
        // single-letter families are glued to their size: K6, P5, C6, E4
        match w.as_str() {
            "K" => {
                let s = self.number()?;
                if self.peek() == Some(b',') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let t = self.number()?;
                    return Graph::complete_bipartite(s, t);
                }
                Graph::complete(s)
            }
            "P" => Graph::path(self.number()?),
            "C" => Graph::cycle(self.number()?),
            "E" => Graph::empty(self.number()?),
            "star" => Graph::star(self.number()?),
            "H" => {
                let s0 = self.number()?;
                let s1 = self.number()?;
                let s2 = self.number()?;
                Graph::h_graph(HFamilyParams::new(s0, s1, s2))
            }
            "petersen" => Ok(Graph::petersen()),
            "join" | "union" | "cp" => {
                let args = self.args()?;
                let mut it = args.into_iter();
                let mut acc = it.next().unwrap();
                for g in it {
                    acc = match w.as_str() {
                        "join" => acc.join(&g)?,
                        "union" => acc.disjoint_union(&g)?,
                        _ => acc.cartesian_product(&g)?,
                    };
                }
                Ok(acc)
            }
            "co" => {
                let args = self.args()?;
                if args.len() != 1 {
                    return Err(self.err("co takes exactly one argument"));
                }
                Ok(args[0].complement())
            }
            "" => Err(self.err("expected a family name")),
            other => Err(self.err(&format!("unknown family {other:?}"))),
        }
    }
}
