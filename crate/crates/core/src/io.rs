//! Text formats.
//!
//! Hypergraphs: header `hg <r> <n> <m>` (or `ohg` when vertex order is
//! meaningful) followed by `m` lines of `r` strictly increasing 0-based ids,
//! serialized in lexicographic edge order. Labelings: `lab <N> <n>` followed
//! by one `a b c` line per pair, `a < b`, lexicographic. Partite bundles:
//! `bundle <k> <n>`, `k` `class ...` lines, then `g`/`h` edge sections.
//! `#` starts a comment line anywhere; serializers emit provenance comments
//! first so identical inputs produce identical bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, OrderedHypergraph};
use crate::labeling::EdgeLabeling;
use crate::partite::PartiteSystem;

#[derive(Debug)]
pub enum ParsedFile {
    Plain(Hypergraph),
    Ordered(OrderedHypergraph),
    Labeling(EdgeLabeling),
    Bundle(PartiteSystem),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next significant line (skipping comments and blanks) with 1-based number.
    fn next_sig(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t));
        }
        None
    }
}

fn parse_fields(line: &str, lineno: usize) -> Result<Vec<u64>> {
    line.split_ascii_whitespace()
        .map(|f| {
            f.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected integer, got `{f}`"),
            })
        })
        .collect()
}

pub fn parse(text: &str) -> Result<ParsedFile> {
    let mut lines = Lines::new(text);
    let (lineno, header) = lines
        .next_sig()
        .ok_or_else(|| Error::Parse { line: 0, msg: "empty file".into() })?;
    let mut parts = header.split_ascii_whitespace();
    let tag = parts.next().unwrap_or("");
    match tag {
        "hg" | "ohg" => {
            let h = parse_hypergraph_body(header, lineno, &mut lines)?;
            if tag == "ohg" {
                Ok(ParsedFile::Ordered(OrderedHypergraph::new(h)))
            } else {
                Ok(ParsedFile::Plain(h))
            }
        }
        "lab" => Ok(ParsedFile::Labeling(parse_labeling_body(
            header, lineno, &mut lines,
        )?)),
        "bundle" => Ok(ParsedFile::Bundle(parse_bundle_body(
            header, lineno, &mut lines,
        )?)),
        other => Err(Error::Parse {
            line: lineno,
            msg: format!("unknown header `{other}` (expected hg, ohg, lab or bundle)"),
        }),
    }
}

fn parse_hypergraph_body(header: &str, lineno: usize, lines: &mut Lines) -> Result<Hypergraph> {
    let fields = parse_fields(header.split_once(' ').map_or("", |x| x.1), lineno)?;
    if fields.len() != 3 {
        return Err(Error::Parse {
            line: lineno,
            msg: "hypergraph header needs `<r> <n> <m>`".into(),
        });
    }
    let (r, n, m) = (fields[0] as u32, fields[1] as u32, fields[2]);
    let mut h = Hypergraph::empty(r, n).map_err(|e| Error::Parse {
        line: lineno,
        msg: e.to_string(),
    })?;
    for _ in 0..m {
        let (ln, line) = lines.next_sig().ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected {m} edge lines"),
        })?;
        let vs = parse_fields(line, ln)?;
        if vs.len() != r as usize {
            return Err(Error::Parse {
                line: ln,
                msg: format!("edge has {} vertices, expected {r}", vs.len()),
            });
        }
        let verts: Vec<u32> = vs.iter().map(|&v| v as u32).collect();
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line: ln,
                msg: "edge vertices must be strictly increasing".into(),
            });
        }
        h.add_edge(&verts).map_err(|e| Error::Parse {
            line: ln,
            msg: e.to_string(),
        })?;
    }
    if let Some((ln, _)) = lines.next_sig() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing content after declared edge count".into(),
        });
    }
    if h.edge_count() != m {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("duplicate edges: declared {m}, distinct {}", h.edge_count()),
        });
    }
    Ok(h)
}

fn parse_labeling_body(header: &str, lineno: usize, lines: &mut Lines) -> Result<EdgeLabeling> {
    let fields = parse_fields(header.split_once(' ').map_or("", |x| x.1), lineno)?;
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            msg: "labeling header needs `lab <N> <n>`".into(),
        });
    }
    let (domain, colors) = (fields[0] as u32, fields[1] as u32);
    let mut lab = EdgeLabeling::constant(domain, colors, 0).map_err(|e| Error::Parse {
        line: lineno,
        msg: e.to_string(),
    })?;
    let total = domain as u64 * (domain as u64 - 1) / 2;
    let mut seen = vec![false; total as usize];
    for _ in 0..total {
        let (ln, line) = lines.next_sig().ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected {total} labeled pairs"),
        })?;
        let vs = parse_fields(line, ln)?;
        if vs.len() != 3 {
            return Err(Error::Parse {
                line: ln,
                msg: "labeling line needs `a b c`".into(),
            });
        }
        let (a, b, c) = (vs[0] as u32, vs[1] as u32, vs[2] as u32);
        if a >= b {
            return Err(Error::Parse {
                line: ln,
                msg: "pair must satisfy a < b".into(),
            });
        }
        if b >= domain || c >= colors {
            return Err(Error::Parse {
                line: ln,
                msg: "pair or color out of range".into(),
            });
        }
        let idx = EdgeLabeling::pair_index(domain, a, b);
        if seen[idx] {
            return Err(Error::Parse {
                line: ln,
                msg: format!("pair ({a},{b}) labeled twice"),
            });
        }
        seen[idx] = true;
        lab.set(a, b, c);
    }
    if let Some((ln, _)) = lines.next_sig() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing content after labeling".into(),
        });
    }
    Ok(lab)
}

fn parse_bundle_body(header: &str, lineno: usize, lines: &mut Lines) -> Result<PartiteSystem> {
    let fields = parse_fields(header.split_once(' ').map_or("", |x| x.1), lineno)?;
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            msg: "bundle header needs `bundle <k> <n>`".into(),
        });
    }
    let (k, _n) = (fields[0] as usize, fields[1] as u32);
    let mut classes = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, line) = lines.next_sig().ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected {k} class lines"),
        })?;
        let rest = line.strip_prefix("class").ok_or_else(|| Error::Parse {
            line: ln,
            msg: "expected `class <v1> <v2> ...`".into(),
        })?;
        let vs = parse_fields(rest, ln)?;
        classes.push(vs.iter().map(|&v| v as u32).collect::<Vec<u32>>());
    }
    let (ln_g, g_header) = lines.next_sig().ok_or_else(|| Error::Parse {
        line: lineno,
        msg: "missing `g <m>` section".into(),
    })?;
    let gf = parse_fields(g_header.strip_prefix('g').unwrap_or("x"), ln_g)?;
    if !g_header.starts_with('g') || gf.len() != 1 {
        return Err(Error::Parse {
            line: ln_g,
            msg: "expected `g <m>`".into(),
        });
    }
    let mut g_edges = Vec::with_capacity(gf[0] as usize);
    for _ in 0..gf[0] {
        let (ln, line) = lines.next_sig().ok_or_else(|| Error::Parse {
            line: ln_g,
            msg: "missing graph edge lines".into(),
        })?;
        let vs = parse_fields(line, ln)?;
        if vs.len() != 2 || vs[0] >= vs[1] {
            return Err(Error::Parse {
                line: ln,
                msg: "graph edge needs `a b` with a < b".into(),
            });
        }
        g_edges.push((vs[0] as u32, vs[1] as u32));
    }
    let (ln_h, h_header) = lines.next_sig().ok_or_else(|| Error::Parse {
        line: lineno,
        msg: "missing `h <m>` section".into(),
    })?;
    let hf = parse_fields(h_header.strip_prefix('h').unwrap_or("x"), ln_h)?;
    if !h_header.starts_with('h') || hf.len() != 1 {
        return Err(Error::Parse {
            line: ln_h,
            msg: "expected `h <m>`".into(),
        });
    }
    let mut h_edges = Vec::with_capacity(hf[0] as usize);
    for _ in 0..hf[0] {
        let (ln, line) = lines.next_sig().ok_or_else(|| Error::Parse {
            line: ln_h,
            msg: "missing 3-edge lines".into(),
        })?;
        let vs = parse_fields(line, ln)?;
        if vs.len() != 3 || vs[0] >= vs[1] || vs[1] >= vs[2] {
            return Err(Error::Parse {
                line: ln,
                msg: "3-edge needs `a b c` strictly increasing".into(),
            });
        }
        h_edges.push([vs[0] as u32, vs[1] as u32, vs[2] as u32]);
    }
    if let Some((ln, _)) = lines.next_sig() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing content after bundle".into(),
        });
    }
    PartiteSystem::from_edges(classes, g_edges, h_edges).map_err(|e| Error::Parse {
        line: lineno,
        msg: e.to_string(),
    })
}

fn write_comments(out: &mut String, comments: &[String]) {
    for c in comments {
        out.push('#');
        if !c.is_empty() {
            out.push(' ');
            out.push_str(c);
        }
        out.push('\n');
    }
}

pub fn serialize_hypergraph(h: &Hypergraph, comments: &[String]) -> String {
    serialize_hypergraph_tagged(h, "hg", comments)
}

pub fn serialize_ordered(h: &OrderedHypergraph, comments: &[String]) -> String {
    serialize_hypergraph_tagged(&h.base, "ohg", comments)
}

fn serialize_hypergraph_tagged(h: &Hypergraph, tag: &str, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    let _ = writeln!(out, "{tag} {} {} {}", h.r(), h.n(), h.edge_count());
    for e in h.sorted_edges() {
        let mut first = true;
        for v in e.iter() {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
            first = false;
        }
        out.push('\n');
    }
    out
}

pub fn serialize_labeling(lab: &EdgeLabeling, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    let _ = writeln!(out, "lab {} {}", lab.domain(), lab.colors());
    for a in 0..lab.domain() {
        for b in a + 1..lab.domain() {
            let _ = writeln!(out, "{a} {b} {}", lab.get(a, b));
        }
    }
    out
}

pub fn serialize_bundle(sys: &PartiteSystem, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    let _ = writeln!(out, "bundle {} {}", sys.k(), sys.n());
    for class in sys.classes() {
        out.push_str("class");
        for v in class {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    let mut g_edges = Vec::new();
    for u in 0..sys.n() {
        for v in u + 1..sys.n() {
            if sys.g_has(u, v) {
                g_edges.push((u, v));
            }
        }
    }
    let _ = writeln!(out, "g {}", g_edges.len());
    for (u, v) in g_edges {
        let _ = writeln!(out, "{u} {v}");
    }
    let mut h_edges = Vec::new();
    for a in 0..sys.n() {
        for b in a + 1..sys.n() {
            for c in b + 1..sys.n() {
                if sys.h3_has(a, b, c) {
                    h_edges.push([a, b, c]);
                }
            }
        }
    }
    let _ = writeln!(out, "h {}", h_edges.len());
    for [a, b, c] in h_edges {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

/// Re-serialize any parsed file in canonical form, without comments.
pub fn canonicalize(file: &ParsedFile) -> String {
    match file {
        ParsedFile::Plain(h) => serialize_hypergraph(h, &[]),
        ParsedFile::Ordered(h) => serialize_ordered(h, &[]),
        ParsedFile::Labeling(l) => serialize_labeling(l, &[]),
        ParsedFile::Bundle(b) => serialize_bundle(b, &[]),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse(text)? {
        ParsedFile::Plain(h) => Ok(h),
        ParsedFile::Ordered(o) => Ok(o.base),
        _ => Err(Error::input("expected a hypergraph file")),
    }
}

pub fn parse_labeling(text: &str) -> Result<EdgeLabeling> {
    match parse(text)? {
        ParsedFile::Labeling(l) => Ok(l),
        _ => Err(Error::input("expected a labeling file")),
    }
}

pub fn parse_bundle(text: &str) -> Result<PartiteSystem> {
    match parse(text)? {
        ParsedFile::Bundle(b) => Ok(b),
        _ => Err(Error::input("expected a bundle file")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_round_trip() {
        let mut h = Hypergraph::empty(3, 5).unwrap();
        h.add_edge(&[2, 4, 0]).unwrap();
        h.add_edge(&[0, 1, 2]).unwrap();
        let text = serialize_hypergraph(&h, &["made for a test".into()]);
        assert!(text.starts_with("# made for a test\nhg 3 5 2\n0 1 2\n0 2 4\n"));
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("zzz 1 2 3").is_err());
        assert!(parse("hg 3 5 1\n0 0 1\n").is_err());
        assert!(parse("hg 3 5 1\n2 1 0\n").is_err());
        assert!(parse("hg 3 5 2\n0 1 2\n").is_err());
        assert!(parse("hg 3 5 1\n0 1 2\n0 1 3\n").is_err());
        assert!(parse("hg 3 5 2\n0 1 2\n0 1 2\n").is_err());
    }

    #[test]
    fn ordered_tag_round_trips() {
        let h = Hypergraph::complete(3, 4).unwrap();
        let o = OrderedHypergraph::new(h);
        let text = serialize_ordered(&o, &[]);
        assert!(text.starts_with("ohg 3 4 4\n"));
        match parse(&text).unwrap() {
            ParsedFile::Ordered(back) => assert_eq!(back.base, o.base),
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn bundle_round_trip() {
        let sys = crate::gen::complete_system_minus_exact(
            3,
            3,
            &crate::rational::rat(1, 3),
            2,
        )
        .unwrap();
        let text = serialize_bundle(&sys, &[]);
        let back = parse_bundle(&text).unwrap();
        assert_eq!(serialize_bundle(&back, &[]), text);
    }
}
