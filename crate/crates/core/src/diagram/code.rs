//! Plain-text diagram codes.
//!
//! ```text
//! theta trivial
//! V 1 2 3
//! V 3 2 1
//! edge 1 E1
//! edge 2 E2
//! edge 3 E3
//! source 1
//! ```
//!
//! `X a b c d` lines add crossings. Edge lines may name any arc of the edge;
//! unnamed edges take the remaining labels in rotation order at the source.

use std::fmt;
use std::str::FromStr;

use super::{ArcId, Diagram};
use crate::error::{Error, Result};

fn parse_arc(tok: &str, line: usize) -> Result<ArcId> {
    tok.parse::<ArcId>()
        .map_err(|_| Error::Parse(format!("line {line}: `{tok}` is not an arc label")))
}

fn parse_arcs<const N: usize>(toks: &[&str], line: usize) -> Result<[ArcId; N]> {
    if toks.len() != N {
        return Err(Error::Parse(format!("line {line}: expected {N} arc labels, found {}", toks.len())));
    }
    let mut out = [0; N];
    for (o, t) in out.iter_mut().zip(toks) {
        *o = parse_arc(t, line)?;
    }
    Ok(out)
}

/// A `#` starts a comment at the beginning of a line or after whitespace.
fn strip_comment(line: &str) -> &str {
    let mut prev = ' ';
    for (i, ch) in line.char_indices() {
        if ch == '#' && prev.is_whitespace() {
            return &line[..i];
        }
        prev = ch;
    }
    line
}

impl Diagram {
    pub fn parse(text: &str) -> Result<Diagram> {
        let mut name = None;
        let mut vertices = Vec::new();
        let mut crossings = Vec::new();
        let mut edge_marks: Vec<(ArcId, usize)> = Vec::new();
        let mut source = 1;
        let mut loops = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks[0] {
                "theta" => {
                    if toks.len() < 2 {
                        return Err(Error::Parse(format!("line {line}: missing diagram name")));
                    }
                    name = Some(toks[1..].join(" "));
                }
                "V" => vertices.push(parse_arcs::<3>(&toks[1..], line)?),
                "X" => crossings.push(parse_arcs::<4>(&toks[1..], line)?),
                "edge" => {
                    if toks.len() != 3 {
                        return Err(Error::Parse(format!("line {line}: expected `edge <arc> <E1|E2|E3>`")));
                    }
                    let arc = parse_arc(toks[1], line)?;
                    let e = match toks[2] {
                        "E1" => 0,
                        "E2" => 1,
                        "E3" => 2,
                        other => return Err(Error::Parse(format!("line {line}: unknown edge `{other}`"))),
                    };
                    edge_marks.push((arc, e));
                }
                "source" => {
                    source = match toks.get(1).copied() {
                        Some("1") if toks.len() == 2 => 1,
                        Some("2") if toks.len() == 2 => 2,
                        _ => return Err(Error::Parse(format!("line {line}: expected `source 1` or `source 2`"))),
                    }
                }
                "loops" => {
                    loops = toks
                        .get(1)
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|_| toks.len() == 2)
                        .ok_or_else(|| Error::Parse(format!("line {line}: expected `loops <count>`")))?;
                }
                other => return Err(Error::Parse(format!("line {line}: unknown record `{other}`"))),
            }
        }
        let name = name.ok_or_else(|| Error::Parse("missing `theta <name>` header".into()))?;
        if vertices.len() != 2 {
            return Err(Error::Parse(format!("expected 2 vertex records, found {}", vertices.len())));
        }
        if source == 2 {
            vertices.swap(0, 1);
        }
        let verts = [vertices[0], vertices[1]];
        let provisional = Diagram::from_records(name.clone(), verts, crossings.clone(), verts[0])?;
        let strands = provisional.strands()?;
        let mut starts: [Option<ArcId>; 3] = [None; 3];
        for &(arc, e) in &edge_marks {
            let Some(&super::Component::Edge(k)) = strands.component.get(&arc) else {
                return Err(Error::Validation(format!("edge mark names unknown arc {arc}")));
            };
            let start = verts[0][k as usize];
            match starts[e] {
                Some(s) if s != start => {
                    return Err(Error::Validation(format!("edge E{} marked on two different edges", e + 1)))
                }
                _ => starts[e] = Some(start),
            }
        }
        let mut used: Vec<ArcId> = starts.iter().flatten().copied().collect();
        used.sort_unstable();
        if used.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation("one edge carries two different edge names".into()));
        }
        let mut rest = verts[0].iter().copied().filter(|a| !used.contains(a));
        let edge_starts = starts.map(|s| s.unwrap_or_else(|| rest.next().unwrap()));
        let mut d = Diagram::from_records(name, verts, crossings, edge_starts)?;
        d.free_loops = loops;
        Ok(d)
    }

    /// Deterministic text code; [`Diagram::parse`] reads it back to an equal diagram.
    pub fn render(&self) -> String {
        let mut out = format!("theta {}\n", self.name);
        for v in &self.vertices {
            out += &format!("V {} {} {}\n", v[0], v[1], v[2]);
        }
        for c in &self.crossings {
            let a = c.arcs;
            out += &format!("X {} {} {} {}\n", a[0], a[1], a[2], a[3]);
        }
        for (i, arc) in self.edge_starts.iter().enumerate() {
            out += &format!("edge {} E{}\n", arc, i + 1);
        }
        if self.free_loops > 0 {
            out += &format!("loops {}\n", self.free_loops);
        }
        out += "source 1\n";
        out
    }
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Diagram::parse(s)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_trivial() {
        let text = "theta trivial\nV 1 2 3\nV 3 2 1\nedge 1 E1\nedge 2 E2\nedge 3 E3\nsource 1\n";
        let d = Diagram::parse(text).unwrap();
        assert_eq!(d.render(), text);
    }

    #[test]
    fn source_two_and_comments() {
        let text = "# comment\ntheta t\nV 3 2 1\nV 1 2 3  # the source\nedge 2 E1\nsource 2\n";
        let d = Diagram::parse(text).unwrap();
        assert_eq!(d.vertices()[0], [1, 2, 3]);
        assert_eq!(d.edge_starts(), [2, 1, 3]);
        assert_eq!(Diagram::parse(&d.render()).unwrap(), d);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(Diagram::parse("V 1 2 3"), Err(Error::Parse(_))));
        assert!(matches!(Diagram::parse("theta t\nV 1 2\nV 1 2 3"), Err(Error::Parse(_))));
        assert!(matches!(Diagram::parse("theta t\nV 1 2 3\nV 3 2 1\nY 1"), Err(Error::Parse(_))));
        assert!(matches!(
            Diagram::parse("theta t\nV 1 2 3\nV 3 2 1\nedge 1 E4"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Diagram::parse("theta t\nV 1 2 3\nV 3 2 1\nedge 1 E1\nedge 2 E1"),
            Err(Error::Validation(_))
        ));
    }
}
