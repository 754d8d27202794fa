//! Text and JSON input for representations.
//!
//! Expression grammar:
//!
//! ```text
//! expr  := regular(G) | trivial(G) | perm(G) | zero(G)
//!        | sign(G) | sign(G, i)           kernel: first index-two subgroup, or subgroup i
//!        | sum(expr, ...) | tensor(expr, ...)
//!        | multiple(n, expr)
//!        | external(expr, expr)           representation of the product group
//! ```
//!
//! JSON form, for a representation of `Π × G` given on generators:
//! `{"dim": d, "structureGenerators": [M, ...], "groupGenerators": [M, ...]}`
//! where each `M` is a list of rows and each entry is `[num, den]` or an
//! integer.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;

use super::fiber::ProductRep;
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::group::{builtin, FiniteGroup, SubgroupTable};
use crate::matrix::Matrix;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Word(String),
    Open,
    Close,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            ',' => out.push(Token::Comma),
            c if c.is_whitespace() => {}
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Word(word));
                continue;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in representation"))),
        }
        chars.next();
    }
    Ok(out)
}

#[derive(Debug)]
enum Node {
    Atom(String),
    Call(String, Vec<Node>),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn node(&mut self) -> Result<Node> {
        let Some(Token::Word(name)) = self.next() else {
            return Err(Error::Parse("expected a name in representation".into()));
        };
        if self.tokens.get(self.pos) != Some(&Token::Open) {
            return Ok(Node::Atom(name));
        }
        self.pos += 1;
        let mut args = vec![self.node()?];
        loop {
            match self.next() {
                Some(Token::Comma) => args.push(self.node()?),
                Some(Token::Close) => return Ok(Node::Call(name, args)),
                _ => return Err(Error::Parse(format!("expected `,` or `)` in arguments of {name}"))),
            }
        }
    }
}

fn atom(node: &Node) -> Result<&str> {
    match node {
        Node::Atom(s) => Ok(s),
        Node::Call(name, _) => Err(Error::Parse(format!("expected a name or number, found {name}(...)"))),
    }
}

fn number(node: &Node) -> Result<usize> {
    let s = atom(node)?;
    s.parse().map_err(|_| Error::Parse(format!("expected a number, found `{s}`")))
}

fn group(node: &Node) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(builtin::named(atom(node)?)?))
}

fn arity(name: &str, args: &[Node], allowed: std::ops::RangeInclusive<usize>) -> Result<()> {
    if allowed.contains(&args.len()) {
        Ok(())
    } else {
        Err(Error::Parse(format!("{name} takes {allowed:?} arguments, got {}", args.len())))
    }
}

fn eval(node: &Node) -> Result<Rep<Rational>> {
    let Node::Call(name, args) = node else {
        return Err(Error::Parse(format!("expected a representation, found `{}`", atom(node)?)));
    };
    match name.as_str() {
        "regular" | "trivial" | "perm" | "zero" => {
            arity(name, args, 1..=1)?;
            let g = group(&args[0])?;
            Ok(match name.as_str() {
                "regular" => Rep::regular(g),
                "trivial" => Rep::trivial(g),
                "perm" => Rep::permutation(g),
                _ => Rep::zero(g),
            })
        }
        "sign" => {
            arity(name, args, 1..=2)?;
            let g = group(&args[0])?;
            let table = SubgroupTable::new(g.clone())?;
            let h = match args.get(1) {
                Some(i) => {
                    let i = number(i)?;
                    if i >= table.len() {
                        return Err(Error::NotASubgroup(format!("no subgroup with index {i}")));
                    }
                    i
                }
                None => *table.index_two_subgroups(table.whole()).first().ok_or(Error::NotIndexTwo)?,
            };
            Rep::sign(g, table.subgroup(h))
        }
        "sum" | "tensor" => {
            arity(name, args, 1..=usize::MAX)?;
            let mut acc = eval(&args[0])?;
            for a in &args[1..] {
                let next = eval(a)?;
                acc = if name == "sum" { acc.direct_sum(&next)? } else { acc.tensor(&next)? };
            }
            Ok(acc)
        }
        "multiple" => {
            arity(name, args, 2..=2)?;
            Ok(eval(&args[1])?.multiple(number(&args[0])?))
        }
        "external" => {
            arity(name, args, 2..=2)?;
            Ok(eval(&args[0])?.external(&eval(&args[1])?))
        }
        other => Err(Error::Parse(format!("unknown representation constructor `{other}`"))),
    }
}

/// Parses a representation expression.
pub fn parse_rep(expr: &str) -> Result<Rep<Rational>> {
    let mut p = Parser {
        tokens: tokenize(expr)?,
        pos: 0,
    };
    let node = p.node()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse("trailing input after representation".into()));
    }
    eval(&node)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Integer(i64),
    Fraction([i64; 2]),
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RepJson {
    dim: usize,
    structure_generators: Vec<Vec<Vec<Entry>>>,
    group_generators: Vec<Vec<Vec<Entry>>>,
}

fn to_matrix(dim: usize, rows: &[Vec<Entry>]) -> Result<Matrix<Rational>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidRepresentation(format!("generator matrix is not {dim}x{dim}")));
    }
    let entry = |e: &Entry| match *e {
        Entry::Integer(n) => Ok(Rational::from_integer(BigInt::from(n))),
        Entry::Fraction([_, 0]) => Err(Error::InvalidRepresentation("zero denominator".into())),
        Entry::Fraction([n, d]) => Ok(Rational::new(BigInt::from(n), BigInt::from(d))),
    };
    let rows = rows
        .iter()
        .map(|r| r.iter().map(entry).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) })
}

/// Reads a representation of `structure × group` from its JSON form.
pub fn parse_product_rep_json(text: &str, structure: Arc<FiniteGroup>, group: Arc<FiniteGroup>) -> Result<ProductRep> {
    let spec: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let matrices = spec
        .structure_generators
        .iter()
        .chain(&spec.group_generators)
        .map(|m| to_matrix(spec.dim, m))
        .collect::<Result<Vec<_>>>()?;
    if spec.structure_generators.len() != structure.generators().len()
        || spec.group_generators.len() != group.generators().len()
    {
        return Err(Error::InvalidRepresentation(format!(
            "expected {} structure and {} group generator matrices",
            structure.generators().len(),
            group.generators().len()
        )));
    }
    let product = Arc::new(FiniteGroup::direct_product(&structure, &group));
    let rep = Rep::from_generators(product, spec.dim, matrices)?;
    ProductRep::new(structure, group, rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::Character;

    #[test]
    fn expressions() {
        let r = parse_rep("external(sign(Sigma2), regular(C2))").unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.group().order(), 4);
        let r = parse_rep("tensor(regular(C2), regular(C2))").unwrap();
        let two = parse_rep("multiple(2, regular(C2))").unwrap();
        assert_eq!(Character::of(&r), Character::of(&two));
        let s = parse_rep("sum(trivial(S3), sign(S3))").unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn expression_errors() {
        assert!(matches!(parse_rep("regular(C2"), Err(Error::Parse(_))));
        assert!(matches!(parse_rep("frobnicate(C2)"), Err(Error::Parse(_))));
        assert!(matches!(parse_rep("regular(Z9)"), Err(Error::UnknownGroup(_))));
        assert_eq!(parse_rep("sign(C3)").unwrap_err(), Error::NotIndexTwo);
        assert_eq!(parse_rep("sign(S3, 1)").unwrap_err(), Error::NotIndexTwo);
        assert!(parse_rep("sum(regular(C2), regular(C3))").is_err());
    }

    #[test]
    fn json_input() {
        let pi = Arc::new(builtin::named("Sigma2").unwrap());
        let g = Arc::new(builtin::named("C2").unwrap());
        let text = r#"{"dim": 2,
            "structureGenerators": [[[[-1,1],0],[0,[-1,1]]]],
            "groupGenerators": [[[0,1],[1,0]]]}"#;
        let v = parse_product_rep_json(text, pi.clone(), g.clone()).unwrap();
        assert_eq!(v.rep().dim(), 2);
        let bad = r#"{"dim": 1, "structureGenerators": [[[2]]], "groupGenerators": [[[1]]]}"#;
        assert!(matches!(parse_product_rep_json(bad, pi, g), Err(Error::InvalidRepresentation(_))));
    }
}
