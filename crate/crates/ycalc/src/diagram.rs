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

//! Open-graph diagrams for the Y-, ZX- and real-stabiliser ZX-calculi.
//!
//! A diagram is an undirected multigraph with an ordered boundary: typed
//! interior nodes, a multiset of edges (self-loops and parallel edges
//! allowed), and ordered lists of degree-1 boundary nodes. Only topology
//! matters for the semantics; the rewrite engine works on the stored graph.
//!
//! Diagrams are immutable values after construction. Every operation here is
//! a pure function returning a new diagram.

use std::collections::BTreeMap;
use std::fmt;

use crate::angle::{Angle, Fragment};
use crate::error::{DiagramError, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Calculus {
    Y,
    Zx,
    ZxReal,
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Calculus::Y => write!(f, "y"),
            Calculus::Zx => write!(f, "zx"),
            Calculus::ZxReal => write!(f, "zxr"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryRole {
    Input,
    Output,
}

/// The node alphabet. Which kinds are admissible depends on the calculus
/// tag; see [`Diagram::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NodeKind {
    /// Green spider. Phase must be zero in Y-diagrams, in {0, pi} in ZX_r.
    ZSpider(Angle),
    /// Red spider, same phase discipline as `ZSpider`.
    XSpider(Angle),
    /// Real rotation box, degree exactly 2. `flipped` is the upside-down
    /// form; it denotes the transpose, i.e. the rotation by `-angle`.
    YBox { angle: Angle, flipped: bool },
    /// Degree-2 Hadamard. Primitive in ZX and ZX_r, derived notation in Y.
    HBox,
    /// Generalized Hadamard node of the given arity (Y-diagrams only).
    HNode(usize),
    /// Green pi-dot notation on a wire: diag(1, -1). Y-diagrams only.
    PiDotG,
    /// Red pi-dot notation on a wire: the X matrix. Y-diagrams only.
    PiDotR,
    /// Degree-1 boundary node; position is its index in the boundary lists.
    Boundary(BoundaryRole),
}

impl NodeKind {
    pub fn zspider0() -> NodeKind {
        NodeKind::ZSpider(Angle::zero())
    }

    pub fn xspider0() -> NodeKind {
        NodeKind::XSpider(Angle::zero())
    }

    pub fn ybox(angle: Angle) -> NodeKind {
        NodeKind::YBox {
            angle,
            flipped: false,
        }
    }

    pub fn ybox_flipped(angle: Angle) -> NodeKind {
        NodeKind::YBox {
            angle,
            flipped: true,
        }
    }

    /// Fixed arity for kinds with degree constraints; `None` for spiders.
    pub fn fixed_degree(&self) -> Option<usize> {
        match self {
            NodeKind::ZSpider(_) | NodeKind::XSpider(_) => None,
            NodeKind::YBox { .. } | NodeKind::HBox | NodeKind::PiDotG | NodeKind::PiDotR => Some(2),
            NodeKind::HNode(n) => Some(*n),
            NodeKind::Boundary(_) => Some(1),
        }
    }

    pub fn is_spider(&self) -> bool {
        matches!(self, NodeKind::ZSpider(_) | NodeKind::XSpider(_))
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, NodeKind::Boundary(_))
    }

    /// Kinds whose legs are ordered ports rather than interchangeable.
    pub fn has_ports(&self) -> bool {
        matches!(
            self,
            NodeKind::YBox { .. } | NodeKind::HBox | NodeKind::PiDotG | NodeKind::PiDotR
        )
    }

    pub fn angle(&self) -> Option<Angle> {
        match self {
            NodeKind::ZSpider(a) | NodeKind::XSpider(a) => Some(*a),
            NodeKind::YBox { angle, .. } => Some(*angle),
            _ => None,
        }
    }
}

/// One endpoint of an edge: a node and, for ported kinds, a port index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct End {
    pub node: NodeId,
    pub port: Option<u8>,
}

impl End {
    pub fn new(node: NodeId) -> End {
        End { node, port: None }
    }

    pub fn ported(node: NodeId, port: u8) -> End {
        End {
            node,
            port: Some(port),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge(pub End, pub End);

impl Edge {
    pub fn touches(&self, n: NodeId) -> bool {
        self.0.node == n || self.1.node == n
    }

    pub fn other(&self, n: NodeId) -> Option<End> {
        if self.0.node == n {
            Some(self.1)
        } else if self.1.node == n {
            Some(self.0)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    calculus: Calculus,
    nodes: BTreeMap<NodeId, NodeKind>,
    edges: Vec<Edge>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    next_id: u32,
}

impl Diagram {
    pub fn empty(calculus: Calculus) -> Diagram {
        Diagram {
            calculus,
            nodes: BTreeMap::new(),
            edges: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            next_id: 0,
        }
    }

    pub fn calculus(&self) -> Calculus {
        self.calculus
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &NodeKind)> {
        self.nodes.iter().map(|(id, k)| (*id, k))
    }

    pub fn kind(&self, n: NodeId) -> Option<&NodeKind> {
        self.nodes.get(&n)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn interior_nodes(&self) -> impl Iterator<Item = (NodeId, &NodeKind)> {
        self.nodes
            .iter()
            .filter(|(_, k)| !k.is_boundary())
            .map(|(id, k)| (*id, k))
    }

    pub fn num_interior_nodes(&self) -> usize {
        self.interior_nodes().count()
    }

    pub fn degree(&self, n: NodeId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.0.node == n) as usize + (e.1.node == n) as usize)
            .sum()
    }

    pub fn incident_edges(&self, n: NodeId) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.touches(n))
            .map(|(i, _)| i)
            .collect()
    }

    /// Fresh node id, never previously used in this diagram value.
    pub fn fresh_id(&mut self) -> NodeId {
        let id = NodeId(self.next_id);
        self.next_id += 1;
        id
    }

    pub fn add_node(&mut self, kind: NodeKind) -> NodeId {
        let id = self.fresh_id();
        self.nodes.insert(id, kind);
        id
    }

    pub fn add_node_with_id(&mut self, id: NodeId, kind: NodeKind) {
        assert!(!self.nodes.contains_key(&id), "duplicate node id");
        self.nodes.insert(id, kind);
        self.next_id = self.next_id.max(id.0 + 1);
    }

    pub fn add_edge(&mut self, a: End, b: End) {
        self.edges.push(Edge(a, b));
    }

    pub fn add_input(&mut self) -> NodeId {
        let id = self.add_node(NodeKind::Boundary(BoundaryRole::Input));
        self.inputs.push(id);
        id
    }

    pub fn add_output(&mut self) -> NodeId {
        let id = self.add_node(NodeKind::Boundary(BoundaryRole::Output));
        self.outputs.push(id);
        id
    }

    /// Register an existing boundary node at the end of the input list.
    pub fn push_input(&mut self, id: NodeId) {
        self.inputs.push(id);
    }

    /// Register an existing boundary node at the end of the output list.
    pub fn push_output(&mut self, id: NodeId) {
        self.outputs.push(id);
    }

    /// Bend an output boundary node into an input (appended last). By
    /// topology this is the partial transpose onto that wire.
    pub fn rebend_output_to_input(&mut self, id: NodeId) {
        assert!(self.outputs.contains(&id), "not an output boundary");
        self.outputs.retain(|x| *x != id);
        self.nodes
            .insert(id, NodeKind::Boundary(BoundaryRole::Input));
        self.inputs.push(id);
    }

    pub fn remove_node(&mut self, n: NodeId) {
        self.nodes.remove(&n);
        self.edges.retain(|e| !e.touches(n));
        self.inputs.retain(|x| *x != n);
        self.outputs.retain(|x| *x != n);
    }

    /// Swap the kind of an existing node; degrees must stay compatible.
    pub fn replace_kind(&mut self, n: NodeId, kind: NodeKind) {
        assert!(self.nodes.contains_key(&n), "unknown node");
        self.nodes.insert(n, kind);
    }

    /// Replace the whole edge list (rewrite machinery).
    pub fn set_edges(&mut self, edges: Vec<Edge>) {
        self.edges = edges;
    }

    /// The overall angle fragment of the diagram.
    pub fn fragment(&self) -> Fragment {
        let mut frag = Fragment::Pi2N(1);
        for (_, k) in self.nodes() {
            if let Some(a) = k.angle() {
                if !a.is_zero() {
                    frag = frag.join(a.fragment());
                }
            }
        }
        frag
    }

    /// A content hash, used to detect stale match sites.
    pub fn content_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.calculus as u64);
        for (id, k) in &self.nodes {
            eat(id.0 as u64);
            eat(kind_tag(k));
        }
        let mut sorted_edges: Vec<(End, End)> = self
            .edges
            .iter()
            .map(|e| if e.0 <= e.1 { (e.0, e.1) } else { (e.1, e.0) })
            .collect();
        sorted_edges.sort();
        for (a, b) in sorted_edges {
            eat(a.node.0 as u64);
            eat(a.port.map(|p| p as u64 + 1).unwrap_or(0));
            eat(b.node.0 as u64);
            eat(b.port.map(|p| p as u64 + 1).unwrap_or(0));
        }
        for n in self.inputs.iter().chain(self.outputs.iter()) {
            eat(n.0 as u64);
        }
        h
    }

    // ---- wiring-only diagrams ----

    pub fn identity(calculus: Calculus, wires: usize) -> Diagram {
        let mut d = Diagram::empty(calculus);
        for _ in 0..wires {
            let i = d.add_input();
            let o = d.add_output();
            d.add_edge(End::new(i), End::new(o));
        }
        d
    }

    pub fn swap(calculus: Calculus) -> Diagram {
        let mut d = Diagram::empty(calculus);
        let i0 = d.add_input();
        let i1 = d.add_input();
        let o0 = d.add_output();
        let o1 = d.add_output();
        d.add_edge(End::new(i0), End::new(o1));
        d.add_edge(End::new(i1), End::new(o0));
        d
    }

    /// `epsilon : 2 -> 0`, the bent wire joining two inputs.
    pub fn cup(calculus: Calculus) -> Diagram {
        let mut d = Diagram::empty(calculus);
        let i0 = d.add_input();
        let i1 = d.add_input();
        d.add_edge(End::new(i0), End::new(i1));
        d
    }

    /// `eta : 0 -> 2`, the bent wire joining two outputs.
    pub fn cap(calculus: Calculus) -> Diagram {
        let mut d = Diagram::empty(calculus);
        let o0 = d.add_output();
        let o1 = d.add_output();
        d.add_edge(End::new(o0), End::new(o1));
        d
    }

    /// A closed circle of wire (value 2), stored as a phaseless green
    /// spider with a self-loop.
    pub fn circle(calculus: Calculus) -> Diagram {
        let mut d = Diagram::empty(calculus);
        let s = d.add_node(NodeKind::zspider0());
        d.add_edge(End::new(s), End::new(s));
        d
    }

    // ---- the two compositions ----

    /// Disjoint union; inputs and outputs concatenated, `other`'s after
    /// `self`'s.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.calculus != other.calculus {
            return Err(DiagramError::CalculusMismatch(
                self.calculus,
                other.calculus,
            ));
        }
        let mut d = self.clone();
        let offset = d.next_id;
        let remap = |n: NodeId| NodeId(n.0 + offset);
        for (id, k) in &other.nodes {
            d.nodes.insert(remap(*id), *k);
        }
        for e in &other.edges {
            d.edges.push(Edge(
                End {
                    node: remap(e.0.node),
                    port: e.0.port,
                },
                End {
                    node: remap(e.1.node),
                    port: e.1.port,
                },
            ));
        }
        d.inputs.extend(other.inputs.iter().map(|n| remap(*n)));
        d.outputs.extend(other.outputs.iter().map(|n| remap(*n)));
        d.next_id = offset + other.next_id;
        Ok(d)
    }

    /// Sequential composition `after o before`: the outputs of `before` are
    /// fused pairwise, in order, with the inputs of `after`.
    pub fn compose(after: &Diagram, before: &Diagram) -> Result<Diagram, DiagramError> {
        if after.calculus != before.calculus {
            return Err(DiagramError::CalculusMismatch(
                before.calculus,
                after.calculus,
            ));
        }
        if before.outputs.len() != after.inputs.len() {
            return Err(DiagramError::CompositionArity {
                outputs: before.outputs.len(),
                inputs: after.inputs.len(),
            });
        }
        let mut d = before.clone();
        let offset = d.next_id;
        let remap = |n: NodeId| NodeId(n.0 + offset);
        for (id, k) in &after.nodes {
            d.nodes.insert(remap(*id), *k);
        }
        for e in &after.edges {
            d.edges.push(Edge(
                End {
                    node: remap(e.0.node),
                    port: e.0.port,
                },
                End {
                    node: remap(e.1.node),
                    port: e.1.port,
                },
            ));
        }
        d.next_id = offset + after.next_id;

        // fuse each (before-output, after-input) pair and smooth the
        // resulting degree-2 junction away
        let pairs: Vec<(NodeId, NodeId)> = before
            .outputs
            .iter()
            .cloned()
            .zip(after.inputs.iter().map(|n| remap(*n)))
            .collect();
        d.outputs = after.outputs.iter().map(|n| remap(*n)).collect();
        let mut junctions: Vec<NodeId> = Vec::new();
        for (b_out, a_in) in pairs {
            // relabel a_in's edge end onto b_out, making b_out a junction
            for e in d.edges.iter_mut() {
                if e.0.node == a_in {
                    e.0.node = b_out;
                }
                if e.1.node == a_in {
                    e.1.node = b_out;
                }
            }
            d.nodes.remove(&a_in);
            junctions.push(b_out);
        }
        for j in junctions {
            d.smooth_junction(j);
        }
        Ok(d)
    }

    /// Remove a degree-2 pass-through node, splicing its two edges. A pure
    /// circle left behind is materialized via [`Diagram::circle`]'s spider.
    fn smooth_junction(&mut self, j: NodeId) {
        let incident: Vec<usize> = self.incident_edges(j);
        match incident.len() {
            1 => {
                let e = self.edges[incident[0]];
                if e.0.node == j && e.1.node == j {
                    // circle with no other node
                    self.edges.swap_remove(incident[0]);
                    self.nodes.remove(&j);
                    let s = self.add_node(NodeKind::zspider0());
                    self.add_edge(End::new(s), End::new(s));
                } else {
                    // degree-1 junction cannot arise from composition
                    unreachable!("junction of degree 1");
                }
            }
            2 => {
                let e1 = self.edges[incident[0]];
                let e2 = self.edges[incident[1]];
                let a = e1.other(j).expect("incident");
                let b = e2.other(j).expect("incident");
                let (hi, lo) = (incident[1], incident[0]);
                self.edges.swap_remove(hi);
                self.edges.swap_remove(lo);
                self.nodes.remove(&j);
                self.add_edge(a, b);
            }
            _ => unreachable!("boundary junction with degree != 1 edge slots"),
        }
    }

    // ---- variant symmetries ----

    /// Exchange inputs and outputs and toggle every box; the semantics is
    /// the transpose. Ports of 2-legged nodes swap so that port 0 keeps
    /// facing the input side of the flipped drawing.
    pub fn flip_vertical(&self) -> Diagram {
        let mut d = self.clone();
        std::mem::swap(&mut d.inputs, &mut d.outputs);
        for (id, k) in d.nodes.clone() {
            match k {
                NodeKind::YBox { angle, flipped } => {
                    d.nodes.insert(
                        id,
                        NodeKind::YBox {
                            angle,
                            flipped: !flipped,
                        },
                    );
                }
                NodeKind::Boundary(role) => {
                    let role = match role {
                        BoundaryRole::Input => BoundaryRole::Output,
                        BoundaryRole::Output => BoundaryRole::Input,
                    };
                    d.nodes.insert(id, NodeKind::Boundary(role));
                }
                _ => {}
            }
        }
        let two_ported: std::collections::BTreeSet<NodeId> = d
            .nodes
            .iter()
            .filter(|(_, k)| k.has_ports() && k.fixed_degree() == Some(2))
            .map(|(id, _)| *id)
            .collect();
        for e in d.edges.iter_mut() {
            for end in [&mut e.0, &mut e.1] {
                if two_ported.contains(&end.node) {
                    end.port = end.port.map(|p| 1 - p);
                }
            }
        }
        d
    }

    /// Swap spider colours and toggle every box; everything else unchanged.
    pub fn colour_swap(&self) -> Diagram {
        let mut d = self.clone();
        for (id, k) in d.nodes.clone() {
            let k = match k {
                NodeKind::ZSpider(a) => NodeKind::XSpider(a),
                NodeKind::XSpider(a) => NodeKind::ZSpider(a),
                NodeKind::YBox { angle, flipped } => NodeKind::YBox {
                    angle,
                    flipped: !flipped,
                },
                NodeKind::PiDotG => NodeKind::PiDotR,
                NodeKind::PiDotR => NodeKind::PiDotG,
                other => other,
            };
            d.nodes.insert(id, k);
        }
        d
    }

    // ---- validation ----

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut degree: BTreeMap<NodeId, usize> = BTreeMap::new();
        let mut used_ports: BTreeMap<(NodeId, u8), usize> = BTreeMap::new();

        for e in &self.edges {
            for end in [e.0, e.1] {
                match self.nodes.get(&end.node) {
                    None => out.push(Violation {
                        nodes: vec![end.node],
                        message: "edge endpoint references a missing node".into(),
                    }),
                    Some(k) => {
                        *degree.entry(end.node).or_insert(0) += 1;
                        match (k.has_ports(), end.port) {
                            (true, Some(p)) => {
                                let arity = k.fixed_degree().unwrap_or(0) as u8;
                                if p >= arity {
                                    out.push(Violation {
                                        nodes: vec![end.node],
                                        message: format!("port {p} out of range"),
                                    });
                                }
                                *used_ports.entry((end.node, p)).or_insert(0) += 1;
                            }
                            (true, None) => out.push(Violation {
                                nodes: vec![end.node],
                                message: "ported node wired without a port".into(),
                            }),
                            (false, Some(_)) => out.push(Violation {
                                nodes: vec![end.node],
                                message: "port given on an unported node".into(),
                            }),
                            (false, None) => {}
                        }
                    }
                }
            }
        }
        for ((n, p), count) in used_ports {
            if count > 1 {
                out.push(Violation {
                    nodes: vec![n],
                    message: format!("port {p} used {count} times"),
                });
            }
        }

        for (id, k) in &self.nodes {
            let deg = degree.get(id).copied().unwrap_or(0);
            if let Some(want) = k.fixed_degree() {
                if deg != want {
                    out.push(Violation {
                        nodes: vec![*id],
                        message: format!("{k:?} has degree {deg}, expected {want}"),
                    });
                }
            }
            match k {
                NodeKind::HNode(n) if *n < 2 => out.push(Violation {
                    nodes: vec![*id],
                    message: "HNode arity must be at least 2".into(),
                }),
                NodeKind::ZSpider(a) | NodeKind::XSpider(a) => match self.calculus {
                    Calculus::Y => {
                        if !a.is_zero() {
                            out.push(Violation {
                                nodes: vec![*id],
                                message: "Y-calculus spiders are phaseless".into(),
                            });
                        }
                    }
                    Calculus::ZxReal => {
                        let r = a.reduced_mod_pi(2);
                        if !(r.is_zero() || r.equiv_mod_pi(&Angle::pi(), 2)) {
                            out.push(Violation {
                                nodes: vec![*id],
                                message: format!("ZX_r phase {a} not in {{0, pi}}"),
                            });
                        }
                    }
                    Calculus::Zx => {}
                },
                NodeKind::YBox { .. }
                | NodeKind::HNode(_)
                | NodeKind::PiDotG
                | NodeKind::PiDotR
                    if self.calculus != Calculus::Y =>
                {
                    out.push(Violation {
                        nodes: vec![*id],
                        message: format!("{k:?} is only legal in Y-diagrams"),
                    });
                }
                _ => {}
            }
        }

        for (role, list) in [
            (BoundaryRole::Input, &self.inputs),
            (BoundaryRole::Output, &self.outputs),
        ] {
            for id in list {
                match self.nodes.get(id) {
                    Some(NodeKind::Boundary(r)) if *r == role => {}
                    _ => out.push(Violation {
                        nodes: vec![*id],
                        message: format!(
                            "boundary list entry {id} is not a {role:?} boundary node"
                        ),
                    }),
                }
            }
        }
        let listed: usize = self.inputs.len() + self.outputs.len();
        let actual = self.nodes.values().filter(|k| k.is_boundary()).count();
        if listed != actual {
            out.push(Violation {
                nodes: vec![],
                message: format!("{actual} boundary nodes but {listed} listed"),
            });
        }
        out
    }

    pub fn validated(self) -> Result<Diagram, DiagramError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(DiagramError::Invalid(v))
        }
    }

    /// Connected components as node sets (boundary nodes included).
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut parent: BTreeMap<NodeId, NodeId> = self.nodes.keys().map(|n| (*n, *n)).collect();
        fn find(parent: &mut BTreeMap<NodeId, NodeId>, mut x: NodeId) -> NodeId {
            while parent[&x] != x {
                let p = parent[&x];
                let pp = parent[&p];
                parent.insert(x, pp);
                x = pp;
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, e.0.node);
            let b = find(&mut parent, e.1.node);
            if a != b {
                parent.insert(a, b);
            }
        }
        let mut groups: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for n in self.nodes.keys() {
            let r = find(&mut parent, *n);
            groups.entry(r).or_default().push(*n);
        }
        groups.into_values().collect()
    }

    /// Extract the subdiagram induced by `nodes` as a closed (0 -> 0)
    /// component, assuming no edges leave the set.
    pub fn component_subdiagram(&self, nodes: &[NodeId]) -> Diagram {
        let set: std::collections::BTreeSet<NodeId> = nodes.iter().cloned().collect();
        let mut d = Diagram::empty(self.calculus);
        d.next_id = self.next_id;
        for n in &set {
            if let Some(k) = self.nodes.get(n) {
                d.nodes.insert(*n, *k);
                match k {
                    NodeKind::Boundary(BoundaryRole::Input) => d.inputs.push(*n),
                    NodeKind::Boundary(BoundaryRole::Output) => d.outputs.push(*n),
                    _ => {}
                }
            }
        }
        for e in &self.edges {
            if set.contains(&e.0.node) && set.contains(&e.1.node) {
                d.edges.push(*e);
            }
        }
        d
    }
}

fn kind_tag(k: &NodeKind) -> u64 {
    fn angle_tag(a: &Angle) -> u64 {
        match a {
            Angle::Rational(r) => {
                (*r.numer() as u64).wrapping_mul(0x9e3779b97f4a7c15) ^ (*r.denom() as u64)
            }
            Angle::Free(x) => x.to_bits(),
        }
    }
    match k {
        NodeKind::ZSpider(a) => 1 ^ angle_tag(a).rotate_left(8),
        NodeKind::XSpider(a) => 2 ^ angle_tag(a).rotate_left(8),
        NodeKind::YBox { angle, flipped } => {
            (3 + *flipped as u64) ^ angle_tag(angle).rotate_left(8)
        }
        NodeKind::HBox => 5,
        NodeKind::HNode(n) => 6 ^ ((*n as u64) << 8),
        NodeKind::PiDotG => 7,
        NodeKind::PiDotR => 8,
        NodeKind::Boundary(BoundaryRole::Input) => 9,
        NodeKind::Boundary(BoundaryRole::Output) => 10,
    }
}

/// Single-node generator with `n` inputs and `m` outputs.
pub fn generator(kind: NodeKind, n: usize, m: usize) -> Result<Diagram, DiagramError> {
    let calculus = match kind {
        NodeKind::YBox { .. } | NodeKind::HNode(_) | NodeKind::PiDotG | NodeKind::PiDotR => {
            Calculus::Y
        }
        _ => Calculus::Y,
    };
    generator_in(calculus, kind, n, m)
}

/// Single-node generator in an explicit calculus.
pub fn generator_in(
    calculus: Calculus,
    kind: NodeKind,
    n: usize,
    m: usize,
) -> Result<Diagram, DiagramError> {
    if kind.is_boundary() {
        return Err(DiagramError::IllegalArity(
            "boundary is not a generator".into(),
        ));
    }
    if let Some(want) = kind.fixed_degree() {
        if n + m != want {
            return Err(DiagramError::IllegalArity(format!(
                "{kind:?} needs degree {want}, got {n}+{m}"
            )));
        }
    }
    let mut d = Diagram::empty(calculus);
    let v = d.add_node(kind);
    let mut port: u8 = 0;
    for _ in 0..n {
        let i = d.add_input();
        let end = if kind.has_ports() {
            let e = End::ported(v, port);
            port += 1;
            e
        } else {
            End::new(v)
        };
        d.add_edge(End::new(i), end);
    }
    for _ in 0..m {
        let o = d.add_output();
        let end = if kind.has_ports() {
            let e = End::ported(v, port);
            port += 1;
            e
        } else {
            End::new(v)
        };
        d.add_edge(end, End::new(o));
    }
    d.validated()
}

/// Incremental construction of diagram graphs; wires ported nodes through
/// their next free port in call order.
pub struct GraphBuilder {
    d: Diagram,
    next_port: BTreeMap<NodeId, u8>,
}

impl GraphBuilder {
    pub fn new(calculus: Calculus) -> GraphBuilder {
        GraphBuilder {
            d: Diagram::empty(calculus),
            next_port: BTreeMap::new(),
        }
    }

    pub fn input(&mut self) -> NodeId {
        self.d.add_input()
    }

    pub fn output(&mut self) -> NodeId {
        self.d.add_output()
    }

    pub fn node(&mut self, kind: NodeKind) -> NodeId {
        self.d.add_node(kind)
    }

    pub fn gspider(&mut self) -> NodeId {
        self.node(NodeKind::zspider0())
    }

    pub fn rspider(&mut self) -> NodeId {
        self.node(NodeKind::xspider0())
    }

    pub fn gspider_phase(&mut self, a: Angle) -> NodeId {
        self.node(NodeKind::ZSpider(a))
    }

    pub fn rspider_phase(&mut self, a: Angle) -> NodeId {
        self.node(NodeKind::XSpider(a))
    }

    pub fn ybox(&mut self, a: Angle) -> NodeId {
        self.node(NodeKind::ybox(a))
    }

    pub fn ybox_flipped(&mut self, a: Angle) -> NodeId {
        self.node(NodeKind::ybox_flipped(a))
    }

    pub fn hbox(&mut self) -> NodeId {
        self.node(NodeKind::HBox)
    }

    fn end_for(&mut self, n: NodeId) -> End {
        let ported = self.d.kind(n).map(|k| k.has_ports()).unwrap_or(false);
        if ported {
            let p = self.next_port.entry(n).or_insert(0);
            let end = End::ported(n, *p);
            *p += 1;
            end
        } else {
            End::new(n)
        }
    }

    pub fn wire(&mut self, a: NodeId, b: NodeId) {
        let ea = self.end_for(a);
        let eb = self.end_for(b);
        self.d.add_edge(ea, eb);
    }

    /// Wire a chain of nodes left to right.
    pub fn chain(&mut self, nodes: &[NodeId]) {
        for w in nodes.windows(2) {
            self.wire(w[0], w[1]);
        }
    }

    pub fn finish(self) -> Diagram {
        debug_assert!(self.d.validate().is_empty(), "{:?}", self.d.validate());
        self.d
    }

    pub fn finish_validated(self) -> Result<Diagram, DiagramError> {
        self.d.validated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_arity_checks() {
        // a 1 -> 2 green spider has one interior node of degree 3
        let d = generator_in(Calculus::Y, NodeKind::zspider0(), 1, 2).unwrap();
        assert_eq!(d.num_interior_nodes(), 1);
        let (v, _) = d.interior_nodes().next().unwrap();
        assert_eq!(d.degree(v), 3);

        let b = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi()), 1, 1).unwrap();
        assert_eq!(b.num_inputs(), 1);
        assert_eq!(b.num_outputs(), 1);

        // arity violation
        assert!(generator_in(Calculus::Y, NodeKind::ybox(Angle::zero()), 2, 1).is_err());
    }

    #[test]
    fn tensor_concatenates_boundaries() {
        let id = Diagram::identity(Calculus::Y, 1);
        let two = id.tensor(&id).unwrap();
        assert_eq!(two.num_inputs(), 2);
        assert_eq!(two.num_outputs(), 2);
        let e = Diagram::empty(Calculus::Y);
        let same = e.tensor(&id).unwrap();
        assert_eq!(same.num_inputs(), 1);
    }

    #[test]
    fn compose_fuses_boundaries() {
        let id = Diagram::identity(Calculus::Y, 1);
        let d = Diagram::compose(&id, &id).unwrap();
        assert_eq!(d.num_inputs(), 1);
        assert_eq!(d.num_outputs(), 1);
        assert!(d.validate().is_empty());
        // identity chain stays a single bare wire
        assert_eq!(d.num_interior_nodes(), 0);
        assert_eq!(d.edges().len(), 1);
    }

    #[test]
    fn compose_cup_cap_gives_circle() {
        let trace =
            Diagram::compose(&Diagram::cup(Calculus::Y), &Diagram::cap(Calculus::Y)).unwrap();
        assert_eq!(trace.num_inputs(), 0);
        assert_eq!(trace.num_outputs(), 0);
        assert!(trace.validate().is_empty());
        assert_eq!(trace.num_interior_nodes(), 1);
    }

    #[test]
    fn flip_and_colour_swap_are_involutions() {
        let mut b = GraphBuilder::new(Calculus::Y);
        let i = b.input();
        let o = b.output();
        let v = b.ybox(Angle::pi_over(2));
        b.wire(i, v);
        b.wire(v, o);
        let d = b.finish();
        assert_eq!(d.flip_vertical().flip_vertical(), d);
        assert_eq!(d.colour_swap().colour_swap(), d);
    }

    #[test]
    fn validation_reports_violations() {
        let mut d = Diagram::empty(Calculus::Y);
        let i = d.add_input();
        let o = d.add_output();
        let v = d.add_node(NodeKind::ybox(Angle::zero()));
        // ybox wired on only one port, boundary o dangling
        d.add_edge(End::new(i), End::ported(v, 0));
        let violations = d.validate();
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.message.contains("degree")));
        let _ = o;
    }

    #[test]
    fn zxr_phase_discipline() {
        let mut d = Diagram::empty(Calculus::ZxReal);
        let v = d.add_node(NodeKind::ZSpider(Angle::pi_over(2)));
        let i = d.add_input();
        d.add_edge(End::new(i), End::new(v));
        assert!(d.validate().iter().any(|x| x.message.contains("ZX_r")));
    }
}
