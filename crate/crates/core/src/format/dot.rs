//! A small DOT subset: `graph { a; a -- b; }` and `digraph { a -> b; }`.
//!
//! Statements are vertex declarations and edge chains, separated by `;` or
//! newlines. Identifiers are bare words or double-quoted strings. Vertices
//! are indexed in order of first appearance, and every vertex is declared on
//! output so isolated ones survive. Attribute lists and subgraphs are not
//! supported.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    Undirected,
    Directed,
    Open,
    Close,
    End,
}

fn is_bare(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\n' => {
                out.push((line, Tok::End));
                line += 1;
            }
            c if c.is_whitespace() => {}
            '{' => out.push((line, Tok::Open)),
            '}' => out.push((line, Tok::Close)),
            ';' => out.push((line, Tok::End)),
            '/' if chars.peek() == Some(&'/') => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            '-' => match chars.next() {
                Some('-') => out.push((line, Tok::Undirected)),
                Some('>') => out.push((line, Tok::Directed)),
                _ => return Err(Error::parse(line, "expected `--` or `->`")),
            },
            '"' => {
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => return Err(Error::parse(line, "unterminated string")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(Error::parse(line, "bad escape in string")),
                        },
                        Some('\n') => return Err(Error::parse(line, "newline in string")),
                        Some(c) => s.push(c),
                    }
                }
                out.push((line, Tok::Id(s)));
            }
            c if is_bare(c) => {
                let mut s = String::from(c);
                while let Some(&d) = chars.peek().filter(|&&d| is_bare(d)) {
                    s.push(d);
                    chars.next();
                }
                out.push((line, Tok::Id(s)));
            }
            other => {
                return Err(Error::parse(
                    line,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    Ok(out)
}

struct Parsed {
    names: Vec<String>,
    links: Vec<(usize, usize, usize)>,
}

fn parse_body(text: &str, directed: bool) -> Result<Parsed> {
    let toks = tokenize(text)?;
    let keyword = if directed { "digraph" } else { "graph" };
    let (link, wrong) = if directed {
        (Tok::Directed, Tok::Undirected)
    } else {
        (Tok::Undirected, Tok::Directed)
    };
    let mut it = toks.into_iter().filter(|(_, t)| *t != Tok::End).peekable();
    let eof_line = text.lines().count().max(1);

    match it.next() {
        Some((_, Tok::Id(k))) if k == keyword => {}
        Some((l, _)) => return Err(Error::parse(l, format!("expected `{keyword}`"))),
        None => return Err(Error::parse(1, format!("expected `{keyword}`"))),
    }
    if let Some((_, Tok::Id(_))) = it.peek() {
        it.next();
    }
    match it.next() {
        Some((_, Tok::Open)) => {}
        Some((l, _)) => return Err(Error::parse(l, "expected `{`")),
        None => return Err(Error::parse(eof_line, "expected `{`")),
    }

    // Statement boundaries matter, so re-tokenize the body with End kept.
    let toks = tokenize(text)?;
    let start = toks
        .iter()
        .position(|(_, t)| *t == Tok::Open)
        .expect("seen above")
        + 1;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut links = Vec::new();
    let mut intern = |s: String| -> usize {
        *index.entry(s.clone()).or_insert_with(|| {
            names.push(s);
            names.len() - 1
        })
    };

    let mut pos = start;
    let mut closed = false;
    while pos < toks.len() {
        let (l, t) = &toks[pos];
        match t {
            Tok::End => pos += 1,
            Tok::Close => {
                closed = true;
                pos += 1;
                break;
            }
            Tok::Id(first) => {
                let mut prev = intern(first.clone());
                pos += 1;
                while pos < toks.len() && (toks[pos].1 == link || toks[pos].1 == wrong) {
                    let (ll, op) = &toks[pos];
                    if *op == wrong {
                        return Err(Error::parse(
                            *ll,
                            format!("wrong edge operator in a {keyword}"),
                        ));
                    }
                    match toks.get(pos + 1) {
                        Some((_, Tok::Id(next))) => {
                            let next = intern(next.clone());
                            links.push((*ll, prev, next));
                            prev = next;
                            pos += 2;
                        }
                        _ => return Err(Error::parse(*ll, "edge operator without a target")),
                    }
                }
                match toks.get(pos) {
                    None | Some((_, Tok::End)) | Some((_, Tok::Close)) => {}
                    Some((ll, _)) => return Err(Error::parse(*ll, "expected `;` or newline")),
                }
            }
            _ => return Err(Error::parse(*l, "expected a vertex or `}`")),
        }
    }
    if !closed {
        return Err(Error::parse(eof_line, "missing `}`"));
    }
    if let Some((l, _)) = toks[pos..].iter().find(|(_, t)| *t != Tok::End) {
        return Err(Error::parse(*l, "content after the closing `}`"));
    }
    Ok(Parsed { names, links })
}

fn labels_of(names: Vec<String>) -> Option<Vec<String>> {
    let plain = names.iter().enumerate().all(|(i, s)| *s == i.to_string());
    (!plain).then_some(names)
}

fn relabel(e: Error) -> Error {
    match e {
        Error::BadLabels(m) | Error::BadShape(m) => Error::parse(1, m),
        other => other,
    }
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let p = parse_body(text, false)?;
    let n = p.names.len();
    for &(line, x, y) in &p.links {
        if x == y {
            return Err(Error::parse(line, "self-loops are not allowed"));
        }
    }
    SimpleGraph::new(n, p.links.iter().map(|&(_, x, y)| (x, y)))
        .and_then(|g| g.with_labels(labels_of(p.names)))
        .map_err(relabel)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let p = parse_body(text, true)?;
    let n = p.names.len();
    for &(line, x, y) in &p.links {
        if x == y {
            return Err(Error::parse(line, "self-arcs are not allowed"));
        }
    }
    Digraph::new(n, p.links.iter().map(|&(_, x, y)| (x, y)))
        .and_then(|g| g.with_labels(labels_of(p.names)))
        .map_err(relabel)
}

fn quote(s: &str) -> String {
    if !s.is_empty() && s.chars().all(is_bare) {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

fn emit(
    keyword: &str,
    op: &str,
    order: usize,
    label: impl Fn(usize) -> String,
    links: Vec<(usize, usize)>,
) -> String {
    let mut out = format!("{keyword} {{\n");
    for x in 0..order {
        out.push_str(&format!("  {};\n", quote(&label(x))));
    }
    for (x, y) in links {
        out.push_str(&format!(
            "  {} {op} {};\n",
            quote(&label(x)),
            quote(&label(y))
        ));
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &SimpleGraph) -> String {
    emit(
        "graph",
        "--",
        g.order(),
        |x| g.label(x),
        g.edges().collect(),
    )
}

pub fn digraph_to_dot(d: &Digraph) -> String {
    emit(
        "digraph",
        "->",
        d.order(),
        |x| d.label(x),
        d.arcs().collect(),
    )
}
