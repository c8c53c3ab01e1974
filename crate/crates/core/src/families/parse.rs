//! Text syntax for graphs named by family descriptors, appendix labels and
//! disjoint unions of them: `S(3,5)`, `Kp(2,1;2)`, `K_{1,5} + K_3`,
//! `5.18 ∪ 2K_1`, `G(r=2,k=3,t=1,p=4,q=1)`.

use std::fmt;
use std::str::FromStr;

use super::FamilyDescriptor;
use crate::appendix::appendix_row;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    Family(FamilyDescriptor),
    Appendix(&'static str),
}

impl Atom {
    fn graph(&self) -> Result<Graph> {
        match self {
            Atom::Family(d) => d.build(),
            Atom::Appendix(label) => Ok(appendix_row(label).expect("label checked when parsed").graph()),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Family(d) => d.fmt(f),
            Atom::Appendix(label) => f.write_str(label),
        }
    }
}

/// A disjoint union of atoms, each with a multiplicity of at least one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphExpr {
    terms: Vec<(usize, Atom)>,
}

impl GraphExpr {
    pub fn terms(&self) -> &[(usize, Atom)] {
        &self.terms
    }

    /// The descriptor when the expression is a single family atom.
    pub fn single_family(&self) -> Option<FamilyDescriptor> {
        match self.terms.as_slice() {
            [(1, Atom::Family(d))] => Some(*d),
            _ => None,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for (count, atom) in &self.terms {
            let part = atom.graph()?;
            for _ in 0..*count {
                g = g.disjoint_union(&part)?;
            }
        }
        Ok(g)
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (count, atom)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            if *count > 1 {
                write!(f, "{count}")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl FromStr for GraphExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphExpr> {
        Parser { chars: s.chars().collect(), pos: 0 }.expr()
    }
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyDescriptor> {
        let expr: GraphExpr = s.parse()?;
        expr.single_family().ok_or_else(|| Error::DescriptorParse {
            pos: 0,
            msg: format!("{s:?} is not a single family descriptor"),
        })
    }
}

/// Reads a graph given either as graph6 or as a descriptor expression.
/// Descriptor syntax always contains a character outside the graph6
/// alphabet, so the two never collide.
pub fn parse_graph_input(s: &str) -> Result<Graph> {
    let s = s.trim();
    if !s.is_empty() && s.bytes().all(|b| (63..=126).contains(&b)) {
        if let Ok(g) = Graph::from_graph6(s) {
            return Ok(g);
        }
    }
    s.parse::<GraphExpr>()?.to_graph()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::DescriptorParse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        match self.digits() {
            Some(d) => d.parse().or_else(|_| self.err("number too large")),
            None => self.err("expected a number"),
        }
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+' | '∪') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(c) => return self.err(format!("unexpected '{c}'")),
            }
        }
        Ok(GraphExpr { terms })
    }

    fn term(&mut self) -> Result<(usize, Atom)> {
        self.skip_ws();
        let start = self.pos;
        let Some(lead) = self.digits() else {
            return Ok((1, self.atom()?));
        };
        if self.peek() == Some('.') {
            self.pos += 1;
            let tail = self.digits().ok_or(()).or_else(|_| self.err("expected an appendix row number"))?;
            let label = format!("{lead}.{tail}");
            return match appendix_row(&label) {
                Some(row) => Ok((1, Atom::Appendix(row.label))),
                None => {
                    self.pos = start;
                    self.err(format!("no appendix row {label}"))
                }
            };
        }
        let count: usize = lead.parse().or_else(|_| self.err("multiplicity too large"))?;
        if count == 0 {
            self.pos = start;
            return self.err("multiplicity must be positive");
        }
        self.skip_ws();
        let (inner, atom) = self.term()?;
        Ok((count * inner, atom))
    }

    /// Comma- or semicolon-separated numbers inside parentheses.
    fn args(&mut self) -> Result<Vec<usize>> {
        self.expect('(')?;
        let mut out = vec![self.number()?];
        while self.eat(',') || self.eat(';') {
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn arity<const N: usize>(&mut self, name: &str) -> Result<[usize; N]> {
        let at = self.pos;
        let args = self.args()?;
        args.try_into().or_else(|_| {
            self.pos = at;
            self.err(format!("{name} takes {N} parameters"))
        })
    }

    /// Named (`r=2,k=3`) or positional parameters, in the order of `names`.
    fn named_args<const N: usize>(&mut self, names: [&str; N]) -> Result<[usize; N]> {
        self.expect('(')?;
        let mut values = [None; N];
        for i in 0..N {
            if i > 0 && !(self.eat(',') || self.eat(';')) {
                return self.err("expected ','");
            }
            self.skip_ws();
            let slot = match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == 'ℓ' => {
                    let name = if c == 'ℓ' { "l".to_string() } else { c.to_string() };
                    let Some(slot) = names.iter().position(|n| *n == name) else {
                        return self.err(format!("unknown parameter {name:?}"));
                    };
                    self.pos += 1;
                    self.expect('=')?;
                    slot
                }
                _ => i,
            };
            if values[slot].is_some() {
                return self.err(format!("parameter {} given twice", names[slot]));
            }
            values[slot] = Some(self.number()?);
        }
        self.expect(')')?;
        Ok(values.map(|v| v.expect("each of N slots filled once")))
    }

    fn atom(&mut self) -> Result<Atom> {
        use FamilyDescriptor as D;
        self.skip_ws();
        let start = self.pos;
        let d = match self.peek() {
            Some('K') => {
                self.pos += 1;
                match self.peek() {
                    Some('_') => {
                        self.pos += 1;
                        if self.eat('{') {
                            let a = self.number()?;
                            let d = if self.eat(',') {
                                let b = self.number()?;
                                D::CompleteBipartite { r: a.min(b), s: a.max(b) }
                            } else {
                                D::Complete { n: a }
                            };
                            self.expect('}')?;
                            d
                        } else {
                            D::Complete { n: self.number()? }
                        }
                    }
                    Some(c) if c.is_ascii_digit() => D::Complete { n: self.number()? },
                    Some('\'' | '′' | 'p') => {
                        self.pos += 1;
                        let [k, t, l] = self.arity("K'")?;
                        D::KPrime { k, t, l }
                    }
                    _ => {
                        let [k, t, l] = self.arity("K")?;
                        D::K { k, t, l }
                    }
                }
            }
            Some('S') => {
                if self.eat_word("Star") {
                    let [k] = self.arity("Star")?;
                    D::Star { k }
                } else {
                    self.pos += 1;
                    if matches!(self.peek(), Some('\'' | '′' | 'p')) {
                        self.pos += 1;
                        let [t] = self.arity("S'")?;
                        D::KPrime { k: 1, t, l: 1 }
                    } else {
                        let at = self.pos;
                        match *self.args()?.as_slice() {
                            [t] => D::K { k: 1, t, l: 1 },
                            [r, s] => D::S { r, s },
                            _ => {
                                self.pos = at;
                                return self.err("S takes 1 or 2 parameters");
                            }
                        }
                    }
                }
            }
            Some('T') => {
                self.pos += 1;
                let [r, k] = self.arity("T")?;
                D::T { r, k }
            }
            Some('L') => {
                self.pos += 1;
                let [t, l] = self.arity("L")?;
                D::L { t, l }
            }
            Some('F') => {
                self.pos += 1;
                let [n] = self.arity("F")?;
                D::Friendship { n }
            }
            Some('G') => {
                self.pos += 1;
                let [r, k, t, p, q] = self.named_args(["r", "k", "t", "p", "q"])?;
                D::GSet { r, k, t, p, q }
            }
            Some('H') => {
                self.pos += 1;
                let [r, s, t, p, q, l] = self.named_args(["r", "s", "t", "p", "q", "l"])?;
                D::HSet { r, s, t, p, q, l }
            }
            Some(c) => return self.err(format!("unexpected '{c}'")),
            None => return self.err("expected a graph"),
        };
        if let Err(e) = d.validate() {
            self.pos = start;
            return match e {
                Error::InvalidFamily { .. } | Error::TooManyVertices(_) => self.err(e.to_string()),
                other => Err(other),
            };
        }
        Ok(Atom::Family(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyDescriptor as D;

    fn fam(s: &str) -> FamilyDescriptor {
        s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn descriptor_syntax() {
        assert_eq!(fam("S(3,5)"), D::S { r: 3, s: 5 });
        assert_eq!(fam("K(2,1;1)"), D::K { k: 2, t: 1, l: 1 });
        assert_eq!(fam("Kp(2,1;2)"), D::KPrime { k: 2, t: 1, l: 2 });
        assert_eq!(fam("K′(2,1;2)"), D::KPrime { k: 2, t: 1, l: 2 });
        assert_eq!(fam("K'(5,0;0)"), D::KPrime { k: 5, t: 0, l: 0 });
        assert_eq!(fam("L(1,2)"), D::L { t: 1, l: 2 });
        assert_eq!(fam("T(2,3)"), D::T { r: 2, k: 3 });
        assert_eq!(fam("F(4)"), D::Friendship { n: 4 });
        assert_eq!(fam("S(3)"), D::K { k: 1, t: 3, l: 1 });
        assert_eq!(fam("S'(2)"), D::KPrime { k: 1, t: 2, l: 1 });
        assert_eq!(fam("Star(4)"), D::Star { k: 4 });
        assert_eq!(fam("K5"), D::Complete { n: 5 });
        assert_eq!(fam("K_{12}"), D::Complete { n: 12 });
        assert_eq!(fam("K_{3,2}"), D::CompleteBipartite { r: 2, s: 3 });
        assert_eq!(fam("G(r=2,k=3,t=1,p=4,q=1)"), D::GSet { r: 2, k: 3, t: 1, p: 4, q: 1 });
        assert_eq!(fam("G(q=1, p=4, t=1, k=3, r=2)"), D::GSet { r: 2, k: 3, t: 1, p: 4, q: 1 });
        assert_eq!(fam("H(r=0,s=1,t=2,p=2,q=0,l=2)"), D::HSet { r: 0, s: 1, t: 2, p: 2, q: 0, l: 2 });
        assert_eq!(fam("H(0,1,2,2,0,2)"), D::HSet { r: 0, s: 1, t: 2, p: 2, q: 0, l: 2 });
    }

    #[test]
    fn display_round_trips() {
        for s in ["S(3,5)", "K(2,1;1)", "K'(2,1;2)", "L(1,2)", "T(2,3)", "F(4)", "K_5", "K_{1,5}", "Star(3)"] {
            assert_eq!(fam(s).to_string(), s);
            assert_eq!(fam(&fam(s).to_string()), fam(s));
        }
        let h = D::HSet { r: 0, s: 1, t: 2, p: 2, q: 0, l: 2 };
        assert_eq!(fam(&h.to_string()), h);
    }

    #[test]
    fn unions() {
        let e: GraphExpr = "K_{1,5} + K_3".parse().unwrap();
        let g = e.to_graph().unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 8));
        let e: GraphExpr = "5.18 ∪ 2K_1".parse().unwrap();
        assert_eq!(e.to_string(), "5.18 ∪ 2K_1");
        assert_eq!(e.to_graph().unwrap().order(), 7);
        let e: GraphExpr = "2K_2 + 3 K_1".parse().unwrap();
        assert_eq!(e.to_graph().unwrap().edge_count(), 2);
        assert!(e.single_family().is_none());
    }

    #[test]
    fn errors_carry_positions() {
        let bad = |s: &str| match s.parse::<GraphExpr>() {
            Err(Error::DescriptorParse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(bad("S(2,5)"), 0);
        assert_eq!(bad("K_3 + Q"), 6);
        assert_eq!(bad("9.1"), 0);
        assert_eq!(bad("L(1,4)"), 0);
        assert!(bad("T(1)") > 0);
        assert!("G(r=2,k=3,t=1,p=4,q=1)".parse::<GraphExpr>().unwrap().to_graph().is_err());
        assert!("5.18".parse::<FamilyDescriptor>().is_err());
    }
}
