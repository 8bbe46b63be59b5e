//! Line-based instance files.
//!
//! ```text
//! n r K            K = G (colored complete graph) or T (colored tournament)
//! i j c [d]        one line per pair, i < j, c in 1..=r, d in {+, -} for K = T
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Serialization is
//! canonical: pairs in lexicographic order, LF endings, no comments unless
//! passed explicitly to [`serialize_with_comments`].

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::model::{pair_count, pair_index, pairs, ColoredCompleteGraph, ColoredTournament, MAX_COLORS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(ColoredCompleteGraph),
    Tournament(ColoredTournament),
}

impl Instance {
    pub fn graph(&self) -> &ColoredCompleteGraph {
        match self {
            Instance::Graph(g) => g,
            Instance::Tournament(t) => t.base(),
        }
    }

    /// The tournament, or the transitive orientation of a plain colored graph.
    pub fn to_tournament(&self) -> ColoredTournament {
        match self {
            Instance::Graph(g) => ColoredTournament::transitive(g.clone()),
            Instance::Tournament(t) => t.clone(),
        }
    }
}

impl From<ColoredCompleteGraph> for Instance {
    fn from(g: ColoredCompleteGraph) -> Self {
        Instance::Graph(g)
    }
}

impl From<ColoredTournament> for Instance {
    fn from(t: ColoredTournament) -> Self {
        Instance::Tournament(t)
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(text.lines().count().max(1), ParseErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, r, kind] = fields[..] else {
        return Err(err(header_line, ParseErrorKind::MalformedHeader));
    };
    let n: usize = n
        .parse()
        .map_err(|_| err(header_line, ParseErrorKind::MalformedHeader))?;
    let r: u8 = r
        .parse()
        .map_err(|_| err(header_line, ParseErrorKind::MalformedHeader))?;
    let tournament = match kind {
        "G" => false,
        "T" => true,
        _ => return Err(err(header_line, ParseErrorKind::MalformedHeader)),
    };
    if n == 0 || r == 0 || r > MAX_COLORS {
        return Err(err(
            header_line,
            ParseErrorKind::InvalidParameters(format!("need n >= 1 and 1 <= r <= {MAX_COLORS}")),
        ));
    }

    let mut colors = vec![0u8; pair_count(n)];
    let mut forward = vec![true; pair_count(n)];
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        let expected = if tournament { 4 } else { 3 };
        if fields.len() != expected {
            let kind = if !tournament && fields.len() == 4 {
                ParseErrorKind::UnexpectedDirection
            } else {
                ParseErrorKind::MalformedEdge
            };
            return Err(err(line, kind));
        }
        let i: usize = fields[0].parse().map_err(|_| err(line, ParseErrorKind::MalformedEdge))?;
        let j: usize = fields[1].parse().map_err(|_| err(line, ParseErrorKind::MalformedEdge))?;
        let c: u64 = fields[2].parse().map_err(|_| err(line, ParseErrorKind::MalformedEdge))?;
        for v in [i, j] {
            if v >= n {
                return Err(err(line, ParseErrorKind::VertexOutOfRange(v)));
            }
        }
        if i >= j {
            return Err(err(line, ParseErrorKind::UnorderedPair(i, j)));
        }
        if c == 0 || c > r as u64 {
            return Err(err(line, ParseErrorKind::ColorOutOfRange(c, r)));
        }
        let k = pair_index(n, i, j);
        if colors[k] != 0 {
            return Err(err(line, ParseErrorKind::DuplicatePair(i, j)));
        }
        colors[k] = c as u8;
        if tournament {
            forward[k] = match fields[3] {
                "+" => true,
                "-" => false,
                other => return Err(err(line, ParseErrorKind::BadDirection(other.to_string()))),
            };
        }
    }
    if let Some(((i, j), _)) = pairs(n).zip(&colors).find(|(_, &c)| c == 0) {
        return Err(err(last_line, ParseErrorKind::MissingPair(i, j)));
    }

    let invalid = |e: crate::error::Error| err(header_line, ParseErrorKind::InvalidParameters(e.to_string()));
    let g = ColoredCompleteGraph::new(n, r, colors).map_err(invalid)?;
    Ok(if tournament {
        Instance::Tournament(ColoredTournament::new(g, forward).map_err(invalid)?)
    } else {
        Instance::Graph(g)
    })
}

pub fn serialize(instance: &Instance) -> String {
    serialize_with_comments(instance, &[])
}

/// Canonical serialization with `# ...` comment lines placed after the header.
pub fn serialize_with_comments(instance: &Instance, comments: &[String]) -> String {
    let g = instance.graph();
    let n = g.n();
    let kind = match instance {
        Instance::Graph(_) => 'G',
        Instance::Tournament(_) => 'T',
    };
    let mut out = String::with_capacity(16 + pair_count(n) * 10);
    let _ = writeln!(out, "{} {} {}", n, g.r(), kind);
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    match instance {
        Instance::Graph(g) => {
            for ((i, j), c) in pairs(n).zip(g.pair_colors()) {
                let _ = writeln!(out, "{i} {j} {c}");
            }
        }
        Instance::Tournament(t) => {
            for (((i, j), c), &f) in pairs(n).zip(g.pair_colors()).zip(t.forward_flags()) {
                let _ = writeln!(out, "{i} {j} {c} {}", if f { '+' } else { '-' });
            }
        }
    }
    out
}
