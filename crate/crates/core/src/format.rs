//! Line-oriented text formats for heaps and Coxeter graphs.
//!
//! Heap files:
//!
//! ```text
//! # comment
//! pieces 1 2 3
//! edge 1 2
//! edge 2 3
//! word 1 3 2 1 3
//! ```
//!
//! or, instead of `word`, explicit `elem <eid> <piece>` lines followed by
//! `rel <eid> <eid>` generating relations.
//!
//! Coxeter files hold either `coxeter <FAMILY> <n>` or `gen <id>` lines
//! with `bond <id> <id> <m|inf>` lines.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::alphabet::PieceAlphabet;
use crate::coxeter::{Bond, CoxeterGraph, Family};
use crate::error::{Error, Result};
use crate::heap::Heap;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, as `(line number, tokens)`.
fn tokenized(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeapBody {
    Word(Vec<String>),
    Explicit {
        elements: Vec<(String, String)>,
        relations: Vec<(String, String)>,
    },
}

/// A parsed heap file. The alphabet is optional so a heap can borrow the
/// alphabet of a Coxeter graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeapFile {
    pub alphabet: Option<PieceAlphabet>,
    pub body: HeapBody,
}

impl HeapFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut pieces: Option<Vec<String>> = None;
        let mut edges: Vec<(usize, String, String)> = Vec::new();
        let mut word: Option<Vec<String>> = None;
        let mut elements = Vec::new();
        let mut relations = Vec::new();
        for (line, tokens) in tokenized(text) {
            let args = &tokens[1..];
            match tokens[0] {
                "pieces" => {
                    if pieces.is_some() {
                        return Err(parse_err(line, "duplicate `pieces` line"));
                    }
                    pieces = Some(args.iter().map(|s| s.to_string()).collect());
                }
                "edge" => match args {
                    [a, b] => edges.push((line, a.to_string(), b.to_string())),
                    _ => return Err(parse_err(line, "`edge` takes two pieces")),
                },
                "word" => {
                    if word.is_some() {
                        return Err(parse_err(line, "duplicate `word` line"));
                    }
                    word = Some(args.iter().map(|s| s.to_string()).collect());
                }
                "elem" => match args {
                    [e, p] => elements.push((e.to_string(), p.to_string())),
                    _ => return Err(parse_err(line, "`elem` takes an element and a piece")),
                },
                "rel" => match args {
                    [a, b] => relations.push((a.to_string(), b.to_string())),
                    _ => return Err(parse_err(line, "`rel` takes two elements")),
                },
                other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
            }
        }
        let alphabet = match pieces {
            Some(names) => {
                let mut alphabet =
                    PieceAlphabet::new(names).map_err(|e| parse_err(0, e.to_string()))?;
                for (line, a, b) in &edges {
                    alphabet
                        .add_edge(a, b)
                        .map_err(|e| parse_err(*line, e.to_string()))?;
                }
                Some(alphabet)
            }
            None if !edges.is_empty() => {
                return Err(parse_err(edges[0].0, "`edge` before any `pieces` line"));
            }
            None => None,
        };
        let explicit = !elements.is_empty() || !relations.is_empty();
        let body = match (word, explicit) {
            (Some(_), true) => {
                return Err(parse_err(
                    0,
                    "a heap file holds either `word` or `elem`/`rel` lines",
                ))
            }
            (Some(w), false) => HeapBody::Word(w),
            (None, true) => HeapBody::Explicit {
                elements,
                relations,
            },
            (None, false) => return Err(parse_err(0, "missing `word` or `elem` lines")),
        };
        Ok(Self { alphabet, body })
    }

    /// Builds the heap. `fallback` supplies the alphabet when the file has
    /// no `pieces` line; when both exist they must agree.
    pub fn build(&self, fallback: Option<Arc<PieceAlphabet>>) -> Result<Heap> {
        let alphabet = match (&self.alphabet, fallback) {
            (Some(own), Some(other)) => {
                if *own != *other {
                    return Err(Error::AlphabetMismatch);
                }
                other
            }
            (Some(own), None) => Arc::new(own.clone()),
            (None, Some(other)) => other,
            (None, None) => return Err(parse_err(0, "missing `pieces` line")),
        };
        match &self.body {
            HeapBody::Word(w) => Heap::from_word(alphabet, w),
            HeapBody::Explicit {
                elements,
                relations,
            } => Heap::from_relations(alphabet, elements, relations),
        }
    }
}

pub fn parse_heap(text: &str) -> Result<Heap> {
    HeapFile::parse(text)?.build(None)
}

/// Serializes `heap` as a heap file with its canonical word.
pub fn write_heap(heap: &Heap) -> String {
    let alphabet = heap.alphabet();
    let mut out = format!("pieces {}\n", alphabet.names().join(" "));
    for (a, b) in alphabet.edges() {
        writeln!(out, "edge {} {}", alphabet.name(a), alphabet.name(b))
            .expect("writing to a String");
    }
    out.push_str(&word_line(heap));
    out.push('\n');
    out
}

/// `word` followed by the canonical word.
pub fn word_line(heap: &Heap) -> String {
    let mut out = String::from("word");
    for name in heap.canonical_names() {
        out.push(' ');
        out.push_str(name);
    }
    out
}

fn parse_bond(line: usize, s: &str) -> Result<Bond> {
    if s == "inf" {
        return Ok(Bond::Infinite);
    }
    s.parse::<u32>()
        .map(Bond::Finite)
        .map_err(|_| parse_err(line, format!("bad bond `{s}`")))
}

pub fn parse_coxeter(text: &str) -> Result<CoxeterGraph> {
    let mut family: Option<CoxeterGraph> = None;
    let mut gens: Vec<String> = Vec::new();
    let mut bonds: Vec<(usize, String, String, Bond)> = Vec::new();
    for (line, tokens) in tokenized(text) {
        match tokens.as_slice() {
            ["coxeter", name, n] => {
                if family.is_some() {
                    return Err(parse_err(line, "duplicate `coxeter` line"));
                }
                let fam = Family::parse(name)
                    .ok_or_else(|| parse_err(line, format!("unknown family `{name}`")))?;
                let n: u32 = n
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad parameter `{n}`")))?;
                family = Some(
                    CoxeterGraph::from_family(fam, n)
                        .map_err(|e| parse_err(line, e.to_string()))?,
                );
            }
            ["gen", ids @ ..] if !ids.is_empty() => gens.extend(ids.iter().map(|s| s.to_string())),
            ["bond", a, b, m] => {
                bonds.push((line, a.to_string(), b.to_string(), parse_bond(line, m)?))
            }
            [other, ..] => return Err(parse_err(line, format!("malformed `{other}` line"))),
            [] => unreachable!("tokenized skips blank lines"),
        }
    }
    match family {
        Some(g) if gens.is_empty() && bonds.is_empty() => Ok(g),
        Some(_) => Err(parse_err(
            0,
            "`coxeter` cannot be combined with `gen`/`bond`",
        )),
        None => {
            let mut g = CoxeterGraph::new(gens).map_err(|e| parse_err(0, e.to_string()))?;
            for (line, a, b, bond) in bonds {
                g.add_bond(&a, &b, bond)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            Ok(g)
        }
    }
}
