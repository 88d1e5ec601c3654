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

//! Standard interpretation of diagrams as dense tensors.
//!
//! Every node carries a small tensor over its legs; the diagram's semantics
//! is the contraction of the resulting network, with the open legs ordered
//! by the boundary lists. Evaluation quotients over wire homeomorphism by
//! construction: bent wires are just contractions with the cup/cap deltas,
//! so only topology matters.
//!
//! Derived notations (HBox, HNode, pi-dots inside Y-diagrams) carry their
//! defining tensors directly; `expand_hnode` agreeing with them is checked
//! by tests rather than assumed.

use num::complex::Complex64;

use crate::angle::Angle;
use crate::diagram::{Diagram, NodeId, NodeKind};
use crate::error::SemanticsError;
use crate::scalar::{Coeff, Exact};
use crate::tensor::{Tensor, TensorE, TensorF};

/// Default guard on the total number of boundary wires.
pub const DEFAULT_WIRE_LIMIT: usize = 12;

/// Extra legs allowed on intermediate contraction results.
const INTERIOR_SLACK: usize = 10;

/// Evaluation backends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Float,
    Exact,
}

/// Per-generator tensor entries for a backend.
pub trait GenCoeff: Coeff {
    /// `cos(a/2)` and `sin(a/2)` of a box angle.
    fn half_angle(a: &Angle) -> Result<(Self, Self), SemanticsError>;
    /// `e^(i a)` of a spider phase.
    fn phase(a: &Angle) -> Result<Self, SemanticsError>;
    fn inv_sqrt2() -> Self;
}

impl GenCoeff for Complex64 {
    fn half_angle(a: &Angle) -> Result<(Self, Self), SemanticsError> {
        let h = a.radians() / 2.0;
        Ok((Complex64::new(h.cos(), 0.0), Complex64::new(h.sin(), 0.0)))
    }
    fn phase(a: &Angle) -> Result<Self, SemanticsError> {
        Ok(Complex64::new(0.0, a.radians()).exp())
    }
    fn inv_sqrt2() -> Self {
        Complex64::new(1.0 / 2f64.sqrt(), 0.0)
    }
}

impl GenCoeff for Exact {
    fn half_angle(a: &Angle) -> Result<(Self, Self), SemanticsError> {
        Exact::half_angle_cos_sin(a)
    }
    fn phase(a: &Angle) -> Result<Self, SemanticsError> {
        Exact::phase(a)
    }
    fn inv_sqrt2() -> Self {
        Exact::inv_sqrt2()
    }
}

/// A tensor in leg form: `legs[i]` names the wire carried by the i-th index
/// (most significant first); `data` is dense over all leg assignments.
#[derive(Debug, Clone)]
pub struct LegTensor<C> {
    pub legs: Vec<u32>,
    pub data: Vec<C>,
}

impl<C: Coeff> LegTensor<C> {
    pub fn scalar(v: C) -> LegTensor<C> {
        LegTensor {
            legs: vec![],
            data: vec![v],
        }
    }

    fn rank(&self) -> usize {
        self.legs.len()
    }

    /// Contract all shared legs between `self` and `other`; legs unique to
    /// either side survive, self's first.
    pub fn contract(&self, other: &LegTensor<C>) -> LegTensor<C> {
        let shared: Vec<u32> = self
            .legs
            .iter()
            .filter(|l| other.legs.contains(l))
            .cloned()
            .collect();
        let keep_a: Vec<usize> = (0..self.legs.len())
            .filter(|i| !shared.contains(&self.legs[*i]))
            .collect();
        let keep_b: Vec<usize> = (0..other.legs.len())
            .filter(|i| !shared.contains(&other.legs[*i]))
            .collect();
        let pos_a: Vec<usize> = shared
            .iter()
            .map(|l| self.legs.iter().position(|x| x == l).unwrap())
            .collect();
        let pos_b: Vec<usize> = shared
            .iter()
            .map(|l| other.legs.iter().position(|x| x == l).unwrap())
            .collect();

        let out_legs: Vec<u32> = keep_a
            .iter()
            .map(|i| self.legs[*i])
            .chain(keep_b.iter().map(|i| other.legs[*i]))
            .collect();
        let n_out = out_legs.len();
        let mut data = vec![C::zero(); 1 << n_out];

        let na = self.legs.len();
        let nb = other.legs.len();
        for bits_a in 0..(1usize << na) {
            let va = &self.data[bits_a];
            if va.is_zero() {
                continue;
            }
            let mut out_a = 0usize;
            for i in &keep_a {
                out_a = (out_a << 1) | ((bits_a >> (na - 1 - i)) & 1);
            }
            // bits of side b are the shared values (fixed by a) plus free bits
            let mut base_b = 0usize;
            for (p_a, p_b) in pos_a.iter().zip(pos_b.iter()) {
                base_b |= ((bits_a >> (na - 1 - p_a)) & 1) << (nb - 1 - p_b);
            }
            for free in 0..(1usize << keep_b.len()) {
                let mut bits_b = base_b;
                for (j, i) in keep_b.iter().enumerate() {
                    bits_b |= ((free >> (keep_b.len() - 1 - j)) & 1) << (nb - 1 - i);
                }
                let vb = &other.data[bits_b];
                if vb.is_zero() {
                    continue;
                }
                let out_bits = (out_a << keep_b.len()) | free;
                data[out_bits] = data[out_bits].add(&va.mul(vb));
            }
        }
        LegTensor {
            legs: out_legs,
            data,
        }
    }

    /// Trace out a pair of identical-edge legs (self-loop).
    pub fn trace_pair(&self, leg: u32) -> LegTensor<C> {
        let positions: Vec<usize> = self
            .legs
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == leg)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(positions.len(), 2, "trace needs exactly two occurrences");
        let (p, q) = (positions[0], positions[1]);
        let keep: Vec<usize> = (0..self.legs.len())
            .filter(|i| *i != p && *i != q)
            .collect();
        let out_legs: Vec<u32> = keep.iter().map(|i| self.legs[*i]).collect();
        let n = self.legs.len();
        let mut data = vec![C::zero(); 1 << out_legs.len()];
        for bits in 0..(1usize << n) {
            if (bits >> (n - 1 - p)) & 1 != (bits >> (n - 1 - q)) & 1 {
                continue;
            }
            let v = &self.data[bits];
            if v.is_zero() {
                continue;
            }
            let mut out_bits = 0usize;
            for i in &keep {
                out_bits = (out_bits << 1) | ((bits >> (n - 1 - i)) & 1);
            }
            data[out_bits] = data[out_bits].add(v);
        }
        LegTensor {
            legs: out_legs,
            data,
        }
    }
}

/// The tensor of a single node over its incident legs.
///
/// `leg_ends` gives, for each leg in order, the edge id it carries. For
/// ported kinds the order is port order; for spiders it is edge-id order.
pub fn node_tensor<C: GenCoeff>(
    kind: &NodeKind,
    legs: &[u32],
) -> Result<LegTensor<C>, SemanticsError> {
    let d = legs.len();
    let data: Vec<C> = match kind {
        NodeKind::ZSpider(phase) => {
            let ph = C::phase(phase)?;
            let mut v = vec![C::zero(); 1 << d];
            v[0] = C::one();
            let last = (1 << d) - 1;
            v[last] = if d == 0 { v[0].add(&ph) } else { ph };
            v
        }
        NodeKind::XSpider(phase) => {
            // (1/sqrt2)^d * (1 + e^{i phase} (-1)^{sum of legs})
            let ph = C::phase(phase)?;
            let mut scale = C::one();
            for _ in 0..d {
                scale = scale.mul(&C::inv_sqrt2());
            }
            (0..(1usize << d))
                .map(|bits| {
                    let parity = (bits.count_ones() % 2) as i32;
                    let signed = if parity == 0 { ph.clone() } else { ph.neg() };
                    C::one().add(&signed).mul(&scale)
                })
                .collect()
        }
        NodeKind::YBox { angle, flipped } => {
            let (c, s) = C::half_angle(angle)?;
            let (c, s) = if *flipped { (c, s.neg()) } else { (c, s) };
            // legs (port0, port1); entry = R[port1, port0]
            // R = [[cos, -sin], [sin, cos]] on (port0 -> port1)
            vec![c.clone(), s.clone(), s.neg(), c]
        }
        NodeKind::HBox => {
            let h = C::inv_sqrt2();
            vec![h.clone(), h.clone(), h.clone(), h.neg()]
        }
        NodeKind::HNode(_) => {
            // (1/sqrt2)^(n-1) * (-1)^(number of 1-pairs)
            let mut scale = C::one();
            for _ in 0..d.saturating_sub(1) {
                scale = scale.mul(&C::inv_sqrt2());
            }
            (0..(1usize << d))
                .map(|bits| {
                    let ones = bits.count_ones() as usize;
                    let pairs = ones * ones.saturating_sub(1) / 2;
                    if pairs.is_multiple_of(2) {
                        scale.clone()
                    } else {
                        scale.neg()
                    }
                })
                .collect()
        }
        NodeKind::PiDotG => {
            let one = C::one();
            vec![one.clone(), C::zero(), C::zero(), one.neg()]
        }
        NodeKind::PiDotR => {
            let one = C::one();
            vec![C::zero(), one.clone(), one, C::zero()]
        }
        NodeKind::Boundary(_) => {
            return Err(SemanticsError::Resource(
                "boundary nodes have no tensor".into(),
            ))
        }
    };
    Ok(LegTensor {
        legs: legs.to_vec(),
        data,
    })
}

/// Evaluation options.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Maximum total boundary wires; also bounds intermediate ranks (with
    /// slack). Overridable via the `YCALC_MAX_WIRES` environment variable.
    pub wire_limit: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        let wire_limit = std::env::var("YCALC_MAX_WIRES")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_WIRE_LIMIT);
        EvalOptions { wire_limit }
    }
}

/// Legs of a node in tensor order (ports for ported kinds, edge order for
/// spiders), as edge indices.
fn node_leg_edges(d: &Diagram, n: NodeId) -> Vec<u32> {
    let kind = d.kind(n).expect("node exists");
    let mut slots: Vec<(u8, u32)> = Vec::new();
    for (i, e) in d.edges().iter().enumerate() {
        for end in [e.0, e.1] {
            if end.node == n {
                slots.push((end.port.unwrap_or(0), i as u32));
            }
        }
    }
    if kind.has_ports() {
        slots.sort_by_key(|(p, _)| *p);
    } else {
        slots.sort_by_key(|(_, e)| *e);
    }
    slots.into_iter().map(|(_, e)| e).collect()
}

/// Greedy elimination order over interior nodes: start from the node of
/// minimal degree, then repeatedly absorb the node minimizing the open rank
/// of the intermediate tensor. Deterministic; ties break on node id.
pub fn contract_plan(d: &Diagram) -> Vec<NodeId> {
    let mut remaining: Vec<NodeId> = d.interior_nodes().map(|(id, _)| id).collect();
    let legs_of: std::collections::BTreeMap<NodeId, Vec<u32>> = remaining
        .iter()
        .map(|&n| (n, node_leg_edges(d, n)))
        .collect();
    let mut plan = Vec::with_capacity(remaining.len());
    let mut open: std::collections::BTreeSet<u32> = std::collections::BTreeSet::new();
    while !remaining.is_empty() {
        let mut best: Option<(usize, usize, NodeId)> = None;
        for &n in &remaining {
            let legs = &legs_of[&n];
            let shared = legs.iter().filter(|l| open.contains(l)).count();
            let rank_after = open.len() + legs.len() - 2 * shared;
            let connects = if shared > 0 || open.is_empty() { 0 } else { 1 };
            let key = (connects, rank_after, n);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, _, n) = best.unwrap();
        for l in &legs_of[&n] {
            if !open.remove(l) {
                open.insert(*l);
            }
        }
        remaining.retain(|x| *x != n);
        plan.push(n);
    }
    plan
}

/// Contract the diagram along `plan`, returning the final leg tensor and
/// the peak intermediate rank.
fn evaluate_network<C: GenCoeff>(
    d: &Diagram,
    plan: &[NodeId],
    opts: &EvalOptions,
) -> Result<(LegTensor<C>, usize), SemanticsError> {
    let wires = d.num_inputs() + d.num_outputs();
    if wires > opts.wire_limit {
        return Err(SemanticsError::Resource(format!(
            "{wires} boundary wires exceed the limit of {}",
            opts.wire_limit
        )));
    }
    let cap = opts.wire_limit + INTERIOR_SLACK;

    let mut acc = LegTensor::scalar(C::one());
    let mut peak = 0usize;

    // wires running directly between boundary nodes are identity tensors
    for (i, e) in d.edges().iter().enumerate() {
        let b0 = d.kind(e.0.node).map(|k| k.is_boundary()).unwrap_or(false);
        let b1 = d.kind(e.1.node).map(|k| k.is_boundary()).unwrap_or(false);
        if b0 && b1 {
            // both endpoints open: the edge is its own open leg on each side;
            // model as a 2-leg delta linking two synthetic leg names
            let t = LegTensor {
                legs: vec![boundary_leg(i as u32, 0), boundary_leg(i as u32, 1)],
                data: vec![C::one(), C::zero(), C::zero(), C::one()],
            };
            acc = acc.contract(&t);
        }
    }

    for &n in plan {
        let legs = node_leg_edges(d, n);
        let mut t: LegTensor<C> = node_tensor(d.kind(n).unwrap(), &legs)?;
        // trace self-loops within the node
        let mut seen: Vec<u32> = Vec::new();
        for l in t.legs.clone() {
            if seen.contains(&l) {
                t = t.trace_pair(l);
            } else {
                seen.push(l);
            }
        }
        // legs shared with a boundary node must survive as open legs:
        // rename them so they never contract with other interior tensors
        let mut renamed = t;
        for (i, leg) in renamed.legs.clone().into_iter().enumerate() {
            let e = d.edges()[leg as usize];
            let other = if e.0.node == n { e.1 } else { e.0 };
            let self_and_other_same = e.0.node == e.1.node;
            if !self_and_other_same && d.kind(other.node).map(|k| k.is_boundary()).unwrap_or(false)
            {
                renamed.legs[i] = boundary_leg(leg, 0);
            }
        }
        acc = acc.contract(&renamed);
        peak = peak.max(acc.rank());
        if acc.rank() > cap {
            return Err(SemanticsError::Resource(format!(
                "intermediate rank {} exceeds cap {cap}",
                acc.rank()
            )));
        }
    }
    Ok((acc, peak))
}

fn boundary_leg(edge: u32, side: u32) -> u32 {
    // boundary legs live in a disjoint id space above edge ids
    0x4000_0000 + edge * 2 + side
}

/// Final reordering of the contracted network onto (outputs, inputs).
fn extract_tensor<C: GenCoeff>(
    d: &Diagram,
    acc: LegTensor<C>,
) -> Result<Tensor<C>, SemanticsError> {
    let mut want: Vec<u32> = Vec::new();
    for &b in d.outputs().iter().chain(d.inputs().iter()) {
        let inc = d.incident_edges(b);
        debug_assert_eq!(inc.len(), 1, "boundary degree 1");
        let e = inc[0] as u32;
        let edge = d.edges()[e as usize];
        let both_boundary = d
            .kind(edge.0.node)
            .map(|k| k.is_boundary())
            .unwrap_or(false)
            && d.kind(edge.1.node)
                .map(|k| k.is_boundary())
                .unwrap_or(false);
        let leg = if both_boundary {
            // side 0 belongs to edge.0's boundary node
            if edge.0.node == b {
                boundary_leg(e, 0)
            } else {
                boundary_leg(e, 1)
            }
        } else {
            boundary_leg(e, 0)
        };
        want.push(leg);
    }
    let n = acc.legs.len();
    if n != want.len() {
        return Err(SemanticsError::Resource(format!(
            "dangling legs after contraction: have {n}, want {}",
            want.len()
        )));
    }
    let perm: Vec<usize> = want
        .iter()
        .map(|l| {
            acc.legs
                .iter()
                .position(|x| x == l)
                .expect("boundary leg present")
        })
        .collect();
    let mut data = vec![C::zero(); 1 << n];
    for bits in 0..(1usize << n) {
        // bits indexes acc legs; compute target index per `want` order
        let mut out = 0usize;
        for p in &perm {
            out = (out << 1) | ((bits >> (n - 1 - p)) & 1);
        }
        data[out] = acc.data[bits].clone();
    }
    Ok(Tensor::new(d.num_outputs(), d.num_inputs(), data))
}

/// Interpret with an explicit coefficient type.
pub fn interpret_with<C: GenCoeff>(
    d: &Diagram,
    opts: &EvalOptions,
) -> Result<Tensor<C>, SemanticsError> {
    let plan = contract_plan(d);
    let (acc, _) = evaluate_network::<C>(d, &plan, opts)?;
    extract_tensor(d, acc)
}

/// Interpret along a caller-provided elimination order (must cover every
/// interior node exactly once). The result is plan-independent.
pub fn interpret_with_plan<C: GenCoeff>(
    d: &Diagram,
    plan: &[NodeId],
    opts: &EvalOptions,
) -> Result<(Tensor<C>, usize), SemanticsError> {
    let (acc, peak) = evaluate_network::<C>(d, plan, opts)?;
    Ok((extract_tensor(d, acc)?, peak))
}

/// Standard float interpretation.
pub fn interpret(d: &Diagram) -> Result<TensorF, SemanticsError> {
    interpret_with::<Complex64>(d, &EvalOptions::default())
}

/// Exact interpretation; fails outside the pi/2 fragment.
pub fn interpret_exact(d: &Diagram) -> Result<TensorE, SemanticsError> {
    interpret_with::<Exact>(d, &EvalOptions::default())
}

/// Default float tolerance for semantic equality.
pub const EQ_TOL: f64 = 1e-9;

/// Decide semantic equality at the given float tolerance.
pub fn equal_semantics(d1: &Diagram, d2: &Diagram, tol: f64) -> Result<bool, SemanticsError> {
    if d1.num_inputs() != d2.num_inputs() {
        return Err(SemanticsError::ArityMismatch(
            d1.num_inputs(),
            d2.num_inputs(),
        ));
    }
    if d1.num_outputs() != d2.num_outputs() {
        return Err(SemanticsError::ArityMismatch(
            d1.num_outputs(),
            d2.num_outputs(),
        ));
    }
    let t1 = interpret(d1)?;
    let t2 = interpret(d2)?;
    Ok(t1.max_diff(&t2) <= tol)
}

/// Exact-backend equality; on the pi/2 fragment this coincides with
/// derivability, so it doubles as the completeness-backed decision.
pub fn equal_semantics_exact(d1: &Diagram, d2: &Diagram) -> Result<bool, SemanticsError> {
    if d1.num_inputs() != d2.num_inputs() || d1.num_outputs() != d2.num_outputs() {
        return Err(SemanticsError::ArityMismatch(
            d1.num_inputs() + d1.num_outputs(),
            d2.num_inputs() + d2.num_outputs(),
        ));
    }
    let t1 = interpret_exact(d1)?;
    let t2 = interpret_exact(d2)?;
    Ok(t1 == t2)
}

/// Real/imaginary split of a float tensor.
pub fn re_im_split(t: &TensorF) -> (TensorF, TensorF) {
    t.re_im_split()
}

/// Functorial evaluation under a nonstandard model; the dispatch point for
/// [`crate::models`].
pub fn interpret_model(
    d: &Diagram,
    model: &crate::models::Model,
) -> Result<TensorF, crate::error::ModelError> {
    crate::models::interpret_model(d, model)
}
