//! Text file formats.
//!
//! Instance files (UTF-8, one record per line, `#` starts a comment line):
//!
//! ```text
//! p recolour <n> <m> <k> <ell>   # header, first non-comment line
//! e <u> <v>                      # edge, 1-based endpoints, exactly m lines
//! a <v> <colour>                 # start colour, one line per vertex
//! b <v> <colour>                 # target colour, one line per vertex
//! ```
//!
//! Witness files hold one `r <v> <colour>` line per step. Hitting Set
//! files hold a `h <n> <m> <p>` header followed by `m` lines
//! `f <e1> <e2> ...`. Role maps hold `role <v> <label>` lines. Vertices
//! and elements are 1-based in every format.

use std::collections::BTreeSet;
use std::path::Path;

use thiserror::Error;

use crate::colouring::{Colour, Colouring, InstanceError, ReconfigInstance, RecolouringSequence};
use crate::graph::Graph;
use crate::hardness::{GadgetInstance, HardnessError, HittingSetInstance};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("instance rejected: {0}")]
    Instance(#[from] InstanceError),
    #[error("hitting set rejected: {0}")]
    HittingSet(#[from] HardnessError),
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Line {
        line,
        message: message.into(),
    })
}

fn field<T: std::str::FromStr>(
    tokens: &[&str],
    index: usize,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    let raw = tokens
        .get(index)
        .ok_or_else(|| ParseError::Line {
            line,
            message: format!("missing {what}"),
        })?;
    raw.parse().map_err(|_| ParseError::Line {
        line,
        message: format!("cannot parse {what} from {raw:?}"),
    })
}

/// Lines worth parsing: (1-based number, whitespace-split tokens).
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split_whitespace().collect()))
        }
    })
}

fn parse_vertex(tokens: &[&str], index: usize, line: usize, n: usize) -> Result<usize, ParseError> {
    let v: usize = field(tokens, index, line, "vertex")?;
    if v == 0 || v > n {
        return fail(line, format!("vertex {v} out of range 1..={n}"));
    }
    Ok(v - 1)
}

pub fn parse_instance(text: &str) -> Result<ReconfigInstance, ParseError> {
    let mut header: Option<(usize, usize, Colour, u64, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut alpha: Vec<Option<Colour>> = Vec::new();
    let mut beta: Vec<Option<Colour>> = Vec::new();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return fail(line, "duplicate header");
                }
                if tokens.get(1) != Some(&"recolour") {
                    return fail(line, "header must read `p recolour <n> <m> <k> <ell>`");
                }
                let n: usize = field(&tokens, 2, line, "vertex count")?;
                let m: usize = field(&tokens, 3, line, "edge count")?;
                let k: u64 = field(&tokens, 4, line, "palette size")?;
                if k == 0 || k > Colour::MAX as u64 {
                    return fail(line, format!("palette size {k} out of range 1..=255"));
                }
                let ell: u64 = field(&tokens, 5, line, "step budget")?;
                alpha = vec![None; n];
                beta = vec![None; n];
                header = Some((n, m, k as Colour, ell, line));
            }
            "e" => {
                let (n, ..) = header.ok_or_else(|| ParseError::Line {
                    line,
                    message: "edge before header".into(),
                })?;
                let u = parse_vertex(&tokens, 1, line, n)?;
                let v = parse_vertex(&tokens, 2, line, n)?;
                if u == v {
                    return fail(line, format!("self-loop at vertex {}", u + 1));
                }
                edges.push((u, v));
            }
            "a" | "b" => {
                let (n, _, k, ..) = header.ok_or_else(|| ParseError::Line {
                    line,
                    message: "assignment before header".into(),
                })?;
                let v = parse_vertex(&tokens, 1, line, n)?;
                let colour: Colour = field(&tokens, 2, line, "colour")?;
                if colour == 0 || colour > k {
                    return fail(line, format!("colour {colour} out of range 1..={k}"));
                }
                let store = if tokens[0] == "a" { &mut alpha } else { &mut beta };
                if store[v].is_some() {
                    return fail(line, format!("duplicate assignment for vertex {}", v + 1));
                }
                store[v] = Some(colour);
            }
            other => return fail(line, format!("unknown record {other:?}")),
        }
    }
    let (n, m, k, ell, header_line) = match header {
        Some(h) => h,
        None => return fail(0, "missing header"),
    };
    if edges.len() != m {
        return fail(
            header_line,
            format!("header declares {m} edges, file has {}", edges.len()),
        );
    }
    let unwrap_all = |store: &[Option<Colour>], name: &str| -> Result<Vec<Colour>, ParseError> {
        store
            .iter()
            .enumerate()
            .map(|(v, c)| {
                c.ok_or_else(|| ParseError::Line {
                    line: header_line,
                    message: format!("missing {name} assignment for vertex {}", v + 1),
                })
            })
            .collect()
    };
    let alpha = unwrap_all(&alpha, "start")?;
    let beta = unwrap_all(&beta, "target")?;
    let graph = Graph::new(n, &edges).expect("endpoints validated per line");
    let alpha = Colouring::new(k, alpha).expect("colours validated per line");
    let beta = Colouring::new(k, beta).expect("colours validated per line");
    Ok(ReconfigInstance::new(graph, k, alpha, beta, ell)?)
}

pub fn write_instance(inst: &ReconfigInstance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    out.push_str(&format!(
        "p recolour {} {} {} {}\n",
        g.n(),
        g.m(),
        inst.k,
        inst.ell
    ));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    for v in 0..g.n() {
        out.push_str(&format!("a {} {}\n", v + 1, inst.alpha.colour(v)));
    }
    for v in 0..g.n() {
        out.push_str(&format!("b {} {}\n", v + 1, inst.beta.colour(v)));
    }
    out
}

/// Parse a witness file. Vertices are converted to 0-based; range checks
/// against a specific instance happen during verification.
pub fn parse_witness(text: &str) -> Result<RecolouringSequence, ParseError> {
    let mut steps = Vec::new();
    for (line, tokens) in records(text) {
        if tokens[0] != "r" {
            return fail(line, format!("unknown record {:?}", tokens[0]));
        }
        let vertex: usize = field(&tokens, 1, line, "vertex")?;
        if vertex == 0 {
            return fail(line, "vertices are 1-based");
        }
        let colour: Colour = field(&tokens, 2, line, "colour")?;
        steps.push((vertex - 1, colour));
    }
    Ok(steps.into_iter().collect())
}

pub fn write_witness(seq: &RecolouringSequence) -> String {
    let mut out = String::new();
    for step in seq.steps() {
        out.push_str(&format!("r {} {}\n", step.vertex + 1, step.colour));
    }
    out
}

pub fn parse_hitting_set(text: &str) -> Result<HittingSetInstance, ParseError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut family: Vec<BTreeSet<usize>> = Vec::new();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "h" => {
                if header.is_some() {
                    return fail(line, "duplicate header");
                }
                let n: usize = field(&tokens, 1, line, "universe size")?;
                let m: usize = field(&tokens, 2, line, "set count")?;
                let p: usize = field(&tokens, 3, line, "budget")?;
                header = Some((n, m, p, line));
            }
            "f" => {
                let (n, ..) = header.ok_or_else(|| ParseError::Line {
                    line,
                    message: "set before header".into(),
                })?;
                if tokens.len() == 1 {
                    return fail(line, "empty set");
                }
                let mut set = BTreeSet::new();
                for raw in &tokens[1..] {
                    let element: usize = raw.parse().map_err(|_| ParseError::Line {
                        line,
                        message: format!("cannot parse element from {raw:?}"),
                    })?;
                    if element == 0 || element > n {
                        return fail(line, format!("element {element} out of range 1..={n}"));
                    }
                    set.insert(element);
                }
                family.push(set);
            }
            other => return fail(line, format!("unknown record {other:?}")),
        }
    }
    let (n, m, p, header_line) = match header {
        Some(h) => h,
        None => return fail(0, "missing header"),
    };
    if family.len() != m {
        return fail(
            header_line,
            format!("header declares {m} sets, file has {}", family.len()),
        );
    }
    Ok(HittingSetInstance::new(n, family, p)?)
}

pub fn write_hitting_set(hs: &HittingSetInstance) -> String {
    let mut out = format!(
        "h {} {} {}\n",
        hs.universe_size(),
        hs.family().len(),
        hs.budget()
    );
    for set in hs.family() {
        out.push('f');
        for element in set {
            out.push_str(&format!(" {element}"));
        }
        out.push('\n');
    }
    out
}

/// Sidecar describing which construction role each generated vertex plays.
pub fn write_roles(gi: &GadgetInstance) -> String {
    let mut out = String::new();
    for (v, role) in gi.roles.iter().enumerate() {
        out.push_str(&format!("role {} {}\n", v + 1, role));
    }
    out
}

pub fn parse_roles(text: &str) -> Result<Vec<(usize, String)>, ParseError> {
    let mut roles = Vec::new();
    for (line, tokens) in records(text) {
        if tokens[0] != "role" {
            return fail(line, format!("unknown record {:?}", tokens[0]));
        }
        let vertex: usize = field(&tokens, 1, line, "vertex")?;
        if vertex == 0 {
            return fail(line, "vertices are 1-based");
        }
        let label = tokens
            .get(2)
            .ok_or_else(|| ParseError::Line {
                line,
                message: "missing label".into(),
            })?
            .to_string();
        roles.push((vertex - 1, label));
    }
    Ok(roles)
}

pub fn read_instance(path: &Path) -> Result<ReconfigInstance, FileError> {
    parse_instance(&read(path)?).map_err(|source| FileError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_witness(path: &Path) -> Result<RecolouringSequence, FileError> {
    parse_witness(&read(path)?).map_err(|source| FileError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_hitting_set(path: &Path) -> Result<HittingSetInstance, FileError> {
    parse_hitting_set(&read(path)?).map_err(|source| FileError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_file(path: &Path, content: &str) -> Result<(), FileError> {
    std::fs::write(path, content).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}
