// ycalc - Rust library for the Y-calculus and the ZX-calculus:
//         open-graph diagrams, tensor semantics, rewrite rules,
//         translations and nonstandard interpretations
// Copyright (C) 2026 - the ycalc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! A line-oriented text format for diagrams.
//!
//! One statement per line:
//!
//! ```text
//! calculus y|zx|zxr
//! name <free text>           # optional metadata
//! fragment <text>            # optional declared fragment
//! input <id>
//! output <id>
//! gspider <id> [angle]       # also rspider, ybox, yboxflip,
//! hbox <id>                  # hnode<k>, pidot-g, pidot-r
//! wire <id>[:port] <id>[:port]
//! ```
//!
//! Angles read as rational multiples of pi ("3pi/2", "-pi", "0") or as
//! decimal radians. Comments start with `#`. Wires attach to ported nodes
//! through the next free port unless an explicit `:port` is given; the
//! printer always writes ports explicitly, so print-parse round trips are
//! lossless including node ids.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::rational::Rational64;

use crate::angle::Angle;
use crate::diagram::{Calculus, Diagram, End, NodeId, NodeKind};
use crate::error::ParseError;

/// A parsed document: header metadata plus the diagram.
#[derive(Debug, Clone)]
pub struct DiagramDoc {
    pub calculus: Calculus,
    pub name: Option<String>,
    pub fragment: Option<String>,
    pub diagram: Diagram,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parse an angle literal: `[k]pi[/d]`, `-pi/2`, `0`, or decimal radians.
pub fn parse_angle(s: &str, line: usize) -> Result<Angle, ParseError> {
    let t = s.trim();
    if let Some(idx) = t.find("pi") {
        let (head, tail) = (&t[..idx], &t[idx + 2..]);
        let num: i64 = match head {
            "" => 1,
            "-" => -1,
            h => h
                .parse()
                .map_err(|_| syntax(line, format!("bad angle numerator {h:?}")))?,
        };
        let den: i64 = match tail {
            "" => 1,
            d => d
                .strip_prefix('/')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| syntax(line, format!("bad angle denominator {d:?}")))?,
        };
        Ok(Angle::Rational(Rational64::new(num, den)))
    } else if t == "0" {
        Ok(Angle::zero())
    } else {
        t.parse::<f64>()
            .map(Angle::free)
            .map_err(|_| syntax(line, format!("bad angle {t:?}")))
    }
}

pub fn print_angle(a: &Angle) -> String {
    match a {
        Angle::Rational(r) => {
            if r.numer() == &0 {
                "0".to_string()
            } else if r.denom() == &1 {
                format!("{}pi", r.numer())
            } else {
                format!("{}pi/{}", r.numer(), r.denom())
            }
        }
        Angle::Free(x) => format!("{x:?}"),
    }
}

fn parse_end(
    token: &str,
    names: &BTreeMap<String, NodeId>,
    auto_port: &mut BTreeMap<NodeId, u8>,
    d: &Diagram,
    line: usize,
) -> Result<End, ParseError> {
    let (name, port) = match token.split_once(':') {
        Some((n, p)) => (
            n,
            Some(
                p.parse::<u8>()
                    .map_err(|_| syntax(line, format!("bad port {p:?}")))?,
            ),
        ),
        None => (token, None),
    };
    let id = *names
        .get(name)
        .ok_or_else(|| syntax(line, format!("unknown node {name:?}")))?;
    let ported = d.kind(id).map(|k| k.has_ports()).unwrap_or(false);
    let port = if ported {
        Some(port.unwrap_or_else(|| {
            let p = auto_port.entry(id).or_insert(0);
            let cur = *p;
            *p += 1;
            cur
        }))
    } else {
        if port.is_some() {
            return Err(syntax(line, format!("node {name:?} takes no port")));
        }
        None
    };
    Ok(End { node: id, port })
}

fn declare(
    d: &mut Diagram,
    names: &mut BTreeMap<String, NodeId>,
    name: &str,
    kind: NodeKind,
    line: usize,
) -> Result<NodeId, ParseError> {
    if names.contains_key(name) {
        return Err(syntax(line, format!("duplicate node id {name:?}")));
    }
    let id = if let Some(k) = name.strip_prefix('n').and_then(|x| x.parse::<u32>().ok()) {
        let id = NodeId(k);
        if d.kind(id).is_some() {
            return Err(syntax(line, format!("node id {name:?} already used")));
        }
        d.add_node_with_id(id, kind);
        id
    } else {
        d.add_node(kind)
    };
    names.insert(name.to_string(), id);
    Ok(id)
}

/// Parse a document. The diagram is validated; violations are errors.
pub fn parse(text: &str) -> Result<DiagramDoc, ParseError> {
    let mut calculus: Option<Calculus> = None;
    let mut name: Option<String> = None;
    let mut fragment: Option<String> = None;
    let mut d = Diagram::empty(Calculus::Y);
    let mut names: BTreeMap<String, NodeId> = BTreeMap::new();
    let mut auto_port: BTreeMap<NodeId, u8> = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let stmt = raw.split('#').next().unwrap_or("").trim();
        if stmt.is_empty() {
            continue;
        }
        let mut parts = stmt.split_whitespace();
        let head = parts.next().unwrap();
        let rest: Vec<&str> = parts.collect();
        match head {
            "calculus" => {
                let c = match rest.first().copied() {
                    Some("y") => Calculus::Y,
                    Some("zx") => Calculus::Zx,
                    Some("zxr") => Calculus::ZxReal,
                    other => return Err(syntax(line, format!("bad calculus {other:?}"))),
                };
                calculus = Some(c);
                let mut fresh = Diagram::empty(c);
                std::mem::swap(&mut d, &mut fresh);
            }
            "name" => name = Some(rest.join(" ")),
            "fragment" => fragment = Some(rest.join(" ")),
            "input" | "output" => {
                let id_name = rest
                    .first()
                    .ok_or_else(|| syntax(line, "missing boundary id"))?;
                let role = if head == "input" {
                    crate::diagram::BoundaryRole::Input
                } else {
                    crate::diagram::BoundaryRole::Output
                };
                let id = declare(&mut d, &mut names, id_name, NodeKind::Boundary(role), line)?;
                if head == "input" {
                    d.push_input(id);
                } else {
                    d.push_output(id);
                }
            }
            "wire" => {
                if rest.len() != 2 {
                    return Err(syntax(line, "wire takes two endpoints"));
                }
                let a = parse_end(rest[0], &names, &mut auto_port, &d, line)?;
                let b = parse_end(rest[1], &names, &mut auto_port, &d, line)?;
                d.add_edge(a, b);
            }
            kind_token => {
                let id_name = rest
                    .first()
                    .ok_or_else(|| syntax(line, "missing node id"))?;
                let angle = match rest.get(1) {
                    Some(a) => parse_angle(a, line)?,
                    None => Angle::zero(),
                };
                let kind = match kind_token {
                    "gspider" => NodeKind::ZSpider(angle),
                    "rspider" => NodeKind::XSpider(angle),
                    "ybox" => NodeKind::ybox(angle),
                    "yboxflip" => NodeKind::ybox_flipped(angle),
                    "hbox" => NodeKind::HBox,
                    "pidot-g" => NodeKind::PiDotG,
                    "pidot-r" => NodeKind::PiDotR,
                    other => match other.strip_prefix("hnode").and_then(|k| k.parse().ok()) {
                        Some(k) => NodeKind::HNode(k),
                        None => return Err(syntax(line, format!("unknown statement {other:?}"))),
                    },
                };
                declare(&mut d, &mut names, id_name, kind, line)?;
            }
        }
    }
    if calculus.is_none() {
        return Err(syntax(0, "missing calculus header"));
    }
    let violations = d.validate();
    if !violations.is_empty() {
        return Err(ParseError::Invalid(
            violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    Ok(DiagramDoc {
        calculus: calculus.unwrap(),
        name,
        fragment,
        diagram: d,
    })
}

fn kind_stmt(id: NodeId, k: &NodeKind) -> Option<String> {
    let body = match k {
        NodeKind::ZSpider(a) => format!("gspider {id} {}", print_angle(a)),
        NodeKind::XSpider(a) => format!("rspider {id} {}", print_angle(a)),
        NodeKind::YBox {
            angle,
            flipped: false,
        } => format!("ybox {id} {}", print_angle(angle)),
        NodeKind::YBox {
            angle,
            flipped: true,
        } => {
            format!("yboxflip {id} {}", print_angle(angle))
        }
        NodeKind::HBox => format!("hbox {id}"),
        NodeKind::HNode(n) => format!("hnode{n} {id}"),
        NodeKind::PiDotG => format!("pidot-g {id}"),
        NodeKind::PiDotR => format!("pidot-r {id}"),
        NodeKind::Boundary(_) => return None,
    };
    Some(body)
}

fn end_token(e: &End) -> String {
    match e.port {
        Some(p) => format!("{}:{p}", e.node),
        None => format!("{}", e.node),
    }
}

/// Serialize a document; parse(print(doc)) reproduces it bit-exactly.
pub fn print(doc: &DiagramDoc) -> String {
    let d = &doc.diagram;
    let mut s = String::new();
    writeln!(s, "calculus {}", d.calculus()).unwrap();
    if let Some(n) = &doc.name {
        writeln!(s, "name {n}").unwrap();
    }
    if let Some(f) = &doc.fragment {
        writeln!(s, "fragment {f}").unwrap();
    }
    for i in d.inputs() {
        writeln!(s, "input {i}").unwrap();
    }
    for o in d.outputs() {
        writeln!(s, "output {o}").unwrap();
    }
    for (id, k) in d.nodes() {
        if let Some(stmt) = kind_stmt(id, k) {
            writeln!(s, "{stmt}").unwrap();
        }
    }
    for e in d.edges() {
        writeln!(s, "wire {} {}", end_token(&e.0), end_token(&e.1)).unwrap();
    }
    s
}

/// Convenience wrapper building a doc from a plain diagram.
pub fn print_diagram(d: &Diagram) -> String {
    print(&DiagramDoc {
        calculus: d.calculus(),
        name: None,
        fragment: None,
        diagram: d.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ybox_example() {
        let text = "calculus y\ninput in0\noutput out0\nybox a 1pi/2\nwire in0 a\nwire a out0\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.calculus, Calculus::Y);
        let kinds: Vec<_> = doc.diagram.interior_nodes().map(|(_, k)| *k).collect();
        assert_eq!(kinds, vec![NodeKind::ybox(Angle::pi_over(2))]);
    }

    #[test]
    fn unbalanced_boundary_is_an_error() {
        let text = "calculus y\ninput in0\nybox a 1pi/2\nwire in0 a\n";
        assert!(parse(text).is_err());
    }

    #[test]
    fn angles() {
        assert_eq!(parse_angle("3pi/2", 0).unwrap(), Angle::rational(3, 2));
        assert_eq!(parse_angle("-pi", 0).unwrap(), Angle::rational(-1, 1));
        assert_eq!(parse_angle("0", 0).unwrap(), Angle::zero());
        assert!(matches!(parse_angle("2.5", 0).unwrap(), Angle::Free(_)));
        assert!(parse_angle("pie", 0).is_err());
    }

    #[test]
    fn print_parse_roundtrip_is_stable() {
        let mut b = crate::diagram::GraphBuilder::new(Calculus::Y);
        let i = b.input();
        let o = b.output();
        let s = b.gspider();
        let bx = b.ybox_flipped(Angle::rational(3, 4));
        b.wire(i, s);
        b.wire(s, bx);
        b.wire(bx, o);
        b.wire(s, s); // self-loop survives the round trip
        let d = b.finish();
        let text = print_diagram(&d);
        let doc = parse(&text).unwrap();
        assert_eq!(doc.diagram, d);
        assert_eq!(print(&doc), text);
    }
}
