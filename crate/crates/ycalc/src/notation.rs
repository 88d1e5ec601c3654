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

//! Derived notations of the Y-calculus and their expansions.
//!
//! The pi-dots, the 2-ary Hadamard box and the generalized Hadamard node are
//! first-class node kinds with fixed defining gadgets over the primitive
//! generators. Their semantic contracts pin the gadgets:
//!
//!   - green pi-dot  = diag(1, -1)
//!   - red pi-dot    = the X matrix
//!   - HBox          = the Hadamard matrix
//!   - HNode(n)      = the complete graph state on n vertices, times
//!     (n-2)(n-1)/2 copies of the sqrt2 scalar
//!
//! `expand_hnode` replaces every derived node by its gadget; tests check the
//! expansion against the direct tensors.
//!
//! This module also hosts the small closed scalar gadgets the rewrite rules
//! use to keep both sides exactly equal.

use std::collections::BTreeMap;

use crate::angle::Angle;
use crate::diagram::{Calculus, Diagram, End, GraphBuilder, NodeId, NodeKind};
use crate::error::DiagramError;

/// Append a 1 -> 1 gadget for a derived degree-2 node onto `d`, returning
/// the (entry end, exit end) to wire into the host graph.
fn splice_wire_gadget(d: &mut Diagram, kind: &NodeKind) -> (End, End) {
    match kind {
        NodeKind::PiDotG | NodeKind::PiDotR => {
            // spider with a hanging branch: box(pi) into a dot of the same
            // colour; green realizes diag(1,-1), red realizes X
            let (spider, dot, flipped) = match kind {
                NodeKind::PiDotG => (NodeKind::zspider0(), NodeKind::zspider0(), false),
                _ => (NodeKind::xspider0(), NodeKind::xspider0(), true),
            };
            let s = d.add_node(spider);
            let b = d.add_node(NodeKind::YBox {
                angle: Angle::pi(),
                flipped,
            });
            let t = d.add_node(dot);
            d.add_edge(End::new(s), End::ported(b, 0));
            d.add_edge(End::ported(b, 1), End::new(t));
            (End::new(s), End::new(s))
        }
        NodeKind::HBox => {
            // H = R_Y(pi/2) after a green pi-dot
            let (entry, mid) = splice_wire_gadget(d, &NodeKind::PiDotG);
            let b = d.add_node(NodeKind::ybox(Angle::pi_over(2)));
            d.add_edge(mid, End::ported(b, 0));
            (entry, End::ported(b, 1))
        }
        _ => unreachable!("not a wire gadget"),
    }
}

/// Replace every HNode, HBox and pi-dot of a Y-diagram by its defining
/// gadget over primitive generators.
pub fn expand_hnode(d: &Diagram) -> Result<Diagram, DiagramError> {
    if d.calculus() != Calculus::Y {
        return Err(DiagramError::WrongCalculus {
            expected: Calculus::Y,
            got: d.calculus(),
        });
    }
    let mut out = d.clone();
    let targets: Vec<(NodeId, NodeKind)> = out
        .nodes()
        .filter(|(_, k)| {
            matches!(
                k,
                NodeKind::HNode(_) | NodeKind::HBox | NodeKind::PiDotG | NodeKind::PiDotR
            )
        })
        .map(|(id, k)| (id, *k))
        .collect();

    for (id, kind) in targets {
        // neighbours of the node, in port order
        let mut slots: Vec<(u8, usize, End)> = Vec::new();
        for (i, e) in out.edges().iter().enumerate() {
            if e.0.node == id {
                slots.push((e.0.port.unwrap_or(0), i, e.1));
            }
            if e.1.node == id {
                slots.push((e.1.port.unwrap_or(0), i, e.0));
            }
        }
        slots.sort_by_key(|(p, i, _)| (*p, *i));
        let neighbours: Vec<End> = slots.iter().map(|(_, _, other)| *other).collect();
        out.remove_node(id);

        match kind {
            NodeKind::HNode(n) => {
                debug_assert_eq!(neighbours.len(), n);
                // complete graph state: one green spider per leg, an HBox
                // gadget per pair, and (n-2)(n-1)/2 sqrt2 scalars
                let verts: Vec<NodeId> =
                    (0..n).map(|_| out.add_node(NodeKind::zspider0())).collect();
                for (v, nb) in verts.iter().zip(neighbours.iter()) {
                    out.add_edge(End::new(*v), *nb);
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        let (entry, exit) = splice_wire_gadget(&mut out, &NodeKind::HBox);
                        out.add_edge(End::new(verts[i]), entry);
                        out.add_edge(exit, End::new(verts[j]));
                    }
                }
                let scalars = (n.saturating_sub(2)) * (n.saturating_sub(1)) / 2;
                for _ in 0..scalars {
                    append_scalar(&mut out, ScalarGadget::Sqrt2);
                }
            }
            _ => {
                let (entry, exit) = splice_wire_gadget(&mut out, &kind);
                out.add_edge(neighbours[0], entry);
                if neighbours.len() > 1 {
                    out.add_edge(exit, neighbours[1]);
                } else {
                    // degree-2 node on a self-loop: close the gadget
                    out.add_edge(exit, neighbours[0]);
                }
            }
        }
    }
    Ok(out)
}

/// Closed 0 -> 0 scalar gadgets with their exact values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarGadget {
    /// Green and red dot joined by one wire: sqrt2.
    Sqrt2,
    /// Green and red 3-legged spiders joined by three wires: 1/sqrt2.
    InvSqrt2,
    /// Lone green dot: 2.
    Two,
    /// Green dot, box(gamma), red dot in a chain: 2 cos(gamma/2 + pi/4).
    ChainGR(Angle),
    /// Green dot, box(gamma), green dot in a chain: 2 cos(gamma/2).
    ChainGG(Angle),
    /// Green dot, box(pi), green dot: the zero scalar.
    Zero,
}

impl ScalarGadget {
    pub fn value(&self) -> f64 {
        match self {
            ScalarGadget::Sqrt2 => 2f64.sqrt(),
            ScalarGadget::InvSqrt2 => 1.0 / 2f64.sqrt(),
            ScalarGadget::Two => 2.0,
            ScalarGadget::ChainGR(g) => {
                2.0 * (g.radians() / 2.0 + std::f64::consts::FRAC_PI_4).cos()
            }
            ScalarGadget::ChainGG(g) => 2.0 * (g.radians() / 2.0).cos(),
            ScalarGadget::Zero => 0.0,
        }
    }
}

/// Add a scalar gadget as a fresh closed component.
pub fn append_scalar(d: &mut Diagram, g: ScalarGadget) {
    match g {
        ScalarGadget::Sqrt2 => {
            let a = d.add_node(NodeKind::zspider0());
            let b = d.add_node(NodeKind::xspider0());
            d.add_edge(End::new(a), End::new(b));
        }
        ScalarGadget::InvSqrt2 => {
            let a = d.add_node(NodeKind::zspider0());
            let b = d.add_node(NodeKind::xspider0());
            for _ in 0..3 {
                d.add_edge(End::new(a), End::new(b));
            }
        }
        ScalarGadget::Two => {
            d.add_node(NodeKind::zspider0());
        }
        ScalarGadget::ChainGR(gamma) => {
            let a = d.add_node(NodeKind::zspider0());
            let b = d.add_node(NodeKind::ybox(gamma));
            let c = d.add_node(NodeKind::xspider0());
            d.add_edge(End::new(a), End::ported(b, 0));
            d.add_edge(End::ported(b, 1), End::new(c));
        }
        ScalarGadget::ChainGG(gamma) => {
            let a = d.add_node(NodeKind::zspider0());
            let b = d.add_node(NodeKind::ybox(gamma));
            let c = d.add_node(NodeKind::zspider0());
            d.add_edge(End::new(a), End::ported(b, 0));
            d.add_edge(End::ported(b, 1), End::new(c));
        }
        ScalarGadget::Zero => {
            let a = d.add_node(NodeKind::zspider0());
            let b = d.add_node(NodeKind::ybox(Angle::pi()));
            let c = d.add_node(NodeKind::zspider0());
            d.add_edge(End::new(a), End::ported(b, 0));
            d.add_edge(End::ported(b, 1), End::new(c));
        }
    }
}

/// A scalar gadget as a standalone 0 -> 0 diagram.
pub fn scalar_diagram(g: ScalarGadget) -> Diagram {
    let mut d = Diagram::empty(Calculus::Y);
    append_scalar(&mut d, g);
    d
}

/// The -1 scalar: ChainGG(2 pi) with two 1/sqrt2 gadgets.
pub fn append_minus_one(d: &mut Diagram) {
    append_scalar(d, ScalarGadget::ChainGG(Angle::rational(2, 1)));
    append_scalar(d, ScalarGadget::InvSqrt2);
    append_scalar(d, ScalarGadget::InvSqrt2);
}

/// ZX global-phase gadget `e^(i theta)`: a red pi-dot against a green
/// theta-dot, times 1/sqrt2.
pub fn append_zx_phase(d: &mut Diagram, theta: Angle) {
    let g = d.add_node(NodeKind::ZSpider(theta));
    let r = d.add_node(NodeKind::XSpider(Angle::pi()));
    d.add_edge(End::new(g), End::new(r));
    let a = d.add_node(NodeKind::zspider0());
    let b = d.add_node(NodeKind::xspider0());
    for _ in 0..3 {
        d.add_edge(End::new(a), End::new(b));
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, Default)]
pub struct SimpleGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut norm: Vec<(usize, usize)> =
            edges.iter().map(|(a, b)| (*a.min(b), *a.max(b))).collect();
        norm.sort();
        norm.dedup();
        assert!(
            norm.iter().all(|(a, b)| a != b && *b < vertices),
            "simple graph"
        );
        SimpleGraph {
            vertices,
            edges: norm,
        }
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        SimpleGraph::new(n, &edges)
    }
}

/// Graph state |G>: one green spider per vertex (with its output leg), one
/// HBox per edge. A 0 -> |V| Y-diagram in the derived notations.
pub fn graph_state(g: &SimpleGraph) -> Diagram {
    let mut b = GraphBuilder::new(Calculus::Y);
    let mut verts: Vec<NodeId> = Vec::with_capacity(g.vertices);
    let mut outs: Vec<NodeId> = Vec::with_capacity(g.vertices);
    for _ in 0..g.vertices {
        outs.push(b.output());
    }
    for out in outs.iter().take(g.vertices) {
        let s = b.gspider();
        b.wire(s, *out);
        verts.push(s);
    }
    for (u, v) in &g.edges {
        let h = b.hbox();
        b.wire(verts[*u], h);
        b.wire(h, verts[*v]);
    }
    b.finish()
}

/// Relabel node ids compactly; useful after many splices. Preserves
/// boundary order and ports.
pub fn compact_ids(d: &Diagram) -> Diagram {
    let mut out = Diagram::empty(d.calculus());
    let mut map: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    for (id, kind) in d.nodes() {
        if kind.is_boundary() {
            continue;
        }
        let new = out.add_node(*kind);
        map.insert(id, new);
    }
    for &i in d.inputs() {
        let new = out.add_input();
        map.insert(i, new);
    }
    for &o in d.outputs() {
        let new = out.add_output();
        map.insert(o, new);
    }
    for e in d.edges() {
        out.add_edge(
            End {
                node: map[&e.0.node],
                port: e.0.port,
            },
            End {
                node: map[&e.1.node],
                port: e.1.port,
            },
        );
    }
    out
}
