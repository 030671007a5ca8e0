//! Text formats for instances and solution reports.
//!
//! Colored instances:
//! ```text
//! cisl <n> <gamma>
//! v <start> <end> <weight> <color,color,...>     (n lines, colors in 1..=gamma)
//! ```
//!
//! Two-graph instances:
//! ```text
//! 2union <n> <k>
//! g1 <start> <end>                               (n lines)
//! g2 <start> <end>                               (n lines, same vertex order)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Serialization
//! normalizes: colored instances come out compact, sorted by start and with
//! densely renumbered colors; two-graph instances keep their vertex order
//! with compact endpoint values. Parsing what was serialized and
//! serializing again reproduces the bytes.

use jisolve_core::{ColoredIntervalGraph, Interval, TwoUnionInstance, VertexMap};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub enum ParsedInstance {
    /// Normalized graph plus the map from file vertex order to graph order.
    Cisl {
        graph: ColoredIntervalGraph,
        map: VertexMap,
    },
    TwoUnion(TwoUnionInstance),
}

impl ParsedInstance {
    pub fn n(&self) -> usize {
        match self {
            ParsedInstance::Cisl { graph, .. } => graph.n(),
            ParsedInstance::TwoUnion(t) => t.n(),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based numbers, comments and blanks dropped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, ParseError> {
    let lines = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(err(1, "empty instance file"));
    };
    let fields: Vec<&str> = first.split_whitespace().collect();
    match fields[0] {
        "cisl" => parse_cisl(first_no, &fields, &lines[1..]),
        "2union" => parse_two_union(first_no, &fields, &lines[1..]),
        other => Err(err(first_no, format!("unknown header `{other}`"))),
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("invalid {what} `{s}`")))
}

fn parse_cisl(
    header_line: usize,
    header: &[&str],
    body: &[(usize, &str)],
) -> Result<ParsedInstance, ParseError> {
    if header.len() != 3 {
        return Err(err(header_line, "expected `cisl <n> <gamma>`"));
    }
    let n: usize = parse_num(header_line, "vertex count", header[1])?;
    let gamma: u32 = parse_num(header_line, "color count", header[2])?;
    if body.len() != n {
        return Err(err(
            body.last().map_or(header_line, |&(l, _)| l),
            format!("expected {n} vertex lines, found {}", body.len()),
        ));
    }
    let mut intervals = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &(line_no, line) in body {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 5 || f[0] != "v" {
            return Err(err(line_no, "expected `v <start> <end> <weight> <colors>`"));
        }
        let start: u32 = parse_num(line_no, "start", f[1])?;
        let end: u32 = parse_num(line_no, "end", f[2])?;
        if start < 1 || start > end {
            return Err(err(line_no, format!("invalid interval [{start},{end}]")));
        }
        let weight: u64 = parse_num(line_no, "weight", f[3])?;
        let mut list = Vec::new();
        for part in f[4].split(',') {
            let color: u32 = parse_num(line_no, "color", part)?;
            if color < 1 || color > gamma {
                return Err(err(line_no, format!("color {color} outside 1..={gamma}")));
            }
            list.push(color);
        }
        intervals.push(Interval::new(start, end));
        colors.push(list);
        weights.push(weight);
    }
    if n == 0 {
        return Ok(ParsedInstance::Cisl {
            graph: ColoredIntervalGraph::empty(),
            map: VertexMap {
                to_sorted: Vec::new(),
                to_input: Vec::new(),
                color_to_input: Vec::new(),
            },
        });
    }
    let (graph, map) = ColoredIntervalGraph::new(intervals, colors, weights)
        .map_err(|e| err(header_line, e.to_string()))?;
    Ok(ParsedInstance::Cisl { graph, map })
}

fn parse_two_union(
    header_line: usize,
    header: &[&str],
    body: &[(usize, &str)],
) -> Result<ParsedInstance, ParseError> {
    if header.len() != 3 {
        return Err(err(header_line, "expected `2union <n> <k>`"));
    }
    let n: usize = parse_num(header_line, "vertex count", header[1])?;
    let k: u64 = parse_num(header_line, "target k", header[2])?;
    if body.len() != 2 * n {
        return Err(err(
            body.last().map_or(header_line, |&(l, _)| l),
            format!("expected {} interval lines, found {}", 2 * n, body.len()),
        ));
    }
    let parse_block = |rows: &[(usize, &str)], tag: &str| -> Result<Vec<Interval>, ParseError> {
        let mut out = Vec::with_capacity(n);
        for &(line_no, line) in rows {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 || f[0] != tag {
                return Err(err(line_no, format!("expected `{tag} <start> <end>`")));
            }
            let start: u32 = parse_num(line_no, "start", f[1])?;
            let end: u32 = parse_num(line_no, "end", f[2])?;
            if start < 1 || start > end {
                return Err(err(line_no, format!("invalid interval [{start},{end}]")));
            }
            out.push(Interval::new(start, end));
        }
        Ok(out)
    };
    let ivs1 = parse_block(&body[..n], "g1")?;
    let ivs2 = parse_block(&body[n..], "g2")?;
    let t = TwoUnionInstance::new(ivs1, ivs2, k).map_err(|e| err(header_line, e.to_string()))?;
    Ok(ParsedInstance::TwoUnion(t))
}

pub fn serialize_cisl(g: &ColoredIntervalGraph) -> String {
    let mut out = format!("cisl {} {}\n", g.n(), g.gamma());
    for v in 0..g.n() {
        let iv = g.interval(v);
        let colors: Vec<String> = g
            .color_list(v)
            .iter()
            .map(|c| (c + 1).to_string())
            .collect();
        out.push_str(&format!(
            "v {} {} {} {}\n",
            iv.start(),
            iv.end(),
            g.weight(v),
            colors.join(",")
        ));
    }
    out
}

pub fn serialize_two_union(t: &TwoUnionInstance) -> String {
    let t = t.compactified();
    let mut out = format!("2union {} {}\n", t.n(), t.k());
    for v in 0..t.n() {
        let iv = t.interval1(v);
        out.push_str(&format!("g1 {} {}\n", iv.start(), iv.end()));
    }
    for v in 0..t.n() {
        let iv = t.interval2(v);
        out.push_str(&format!("g2 {} {}\n", iv.start(), iv.end()));
    }
    out
}

/// A solver report: the claimed value and the picked file-order vertex
/// indices. `yes`/`no` lines are ignored so solver output verifies as is.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct SolutionFile {
    pub value: Option<u64>,
    pub picks: Vec<usize>,
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut out = SolutionFile::default();
    for (line_no, line) in content_lines(text) {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "value" => {
                if f.len() != 2 {
                    return Err(err(line_no, "expected `value <v>`"));
                }
                out.value = Some(parse_num(line_no, "value", f[1])?);
            }
            "pick" => {
                for part in &f[1..] {
                    out.picks.push(parse_num(line_no, "vertex index", part)?);
                }
            }
            "yes" | "no" => {}
            other => return Err(err(line_no, format!("unknown report line `{other}`"))),
        }
    }
    Ok(out)
}
