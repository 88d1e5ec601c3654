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

//! The four interpretation functors between the calculi.
//!
//!   - `y_to_zxr`: pi/2-fragment Y-diagrams into the real stabiliser
//!     ZX-calculus (boxes become pi-dot/Hadamard chains);
//!   - `zxr_to_y`: real stabiliser diagrams back into pi/2-fragment
//!     Y-diagrams (pi phases and Hadamards become box gadgets);
//!   - `y_to_zx`: arbitrary Y-diagrams into the ZX-calculus (a box
//!     Euler-decomposes through complex rotations with a global phase);
//!   - `zx_to_y`: arbitrary ZX-diagrams into Y-diagrams with one extra
//!     control wire carrying the real/imaginary block structure
//!     A (x) I + B (x) J, with J = [[0,1],[-1,0]].
//!
//! All four preserve the semantics; `zx_to_y` satisfies the block law,
//! from which real/imaginary part extraction and the universality
//! construction follow. Generator images are pinned by the contract table
//! in `assets/translation_images.txt`; a verification pass checks the
//! table and the builders against each other before the first translation
//! runs, and refuses to proceed on any mismatch.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::complex::Complex64;

use crate::angle::Angle;
use crate::diagram::{Calculus, Diagram, End, NodeId, NodeKind};
use crate::error::TranslateError;
use crate::notation::{append_scalar, append_zx_phase, expand_hnode, ScalarGadget};
use crate::semantics::interpret;
use crate::tensor::{Tensor, TensorF};

/// The four functors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationKind {
    Y2Zxr,
    Zxr2Y,
    Y2Zx,
    Zx2Y,
}

/// Which composite realizes the real/imaginary extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReImRoute {
    /// Cap the control wire of `zx_to_y` directly.
    Direct,
    /// Push the controlled form through `y_to_zx` first, then cap.
    ViaZx,
}

/// Incremental graph rebuild: each source node contributes an image
/// subgraph with one attachment end per incident leg, in slot order.
struct Rebuild {
    out: Diagram,
    attach: BTreeMap<u32, Vec<End>>,
}

impl Rebuild {
    fn new(calculus: Calculus) -> Rebuild {
        Rebuild {
            out: Diagram::empty(calculus),
            attach: BTreeMap::new(),
        }
    }

    fn offer(&mut self, edge: u32, end: End) {
        self.attach.entry(edge).or_default().push(end);
    }

    fn connect(mut self) -> Diagram {
        for (_, ends) in self.attach {
            debug_assert_eq!(ends.len(), 2, "each edge joins two legs");
            self.out.add_edge(ends[0], ends[1]);
        }
        self.out
    }
}

/// Legs of a node in slot order (ports first for ported kinds).
fn leg_slots(d: &Diagram, n: NodeId) -> Vec<u32> {
    let kind = d.kind(n).expect("node");
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

fn copy_boundaries(src: &Diagram, rb: &mut Rebuild) {
    for &i in src.inputs() {
        let id = rb.out.add_input();
        rb.offer(leg_slots(src, i)[0], End::new(id));
    }
    for &o in src.outputs() {
        let id = rb.out.add_output();
        rb.offer(leg_slots(src, o)[0], End::new(id));
    }
}

/// The number of pi/2 steps of a box, upside-down boxes negating,
/// reduced into [0, 8).
fn box_steps(angle: &Angle, flipped: bool) -> Result<i64, TranslateError> {
    let k = angle
        .as_half_pi_steps()
        .ok_or_else(|| TranslateError::Fragment(angle.to_string()))?;
    let k = if flipped { -k } else { k };
    Ok(k.rem_euclid(8))
}

/// Y pi/2-fragment into ZX_r: every box of k pi/2 quarter-turns becomes k
/// repetitions of a pi dot followed by a Hadamard; spiders and wiring map
/// to themselves. Derived notations are expanded first.
pub fn y_to_zxr(d: &Diagram) -> Result<Diagram, TranslateError> {
    verify_image_table()?;
    y_to_zxr_impl(d)
}

fn y_to_zxr_impl(d: &Diagram) -> Result<Diagram, TranslateError> {
    if d.calculus() != Calculus::Y {
        return Err(TranslateError::Fragment("expected a Y-diagram".into()));
    }
    let src = expand_hnode(d)?;
    let mut rb = Rebuild::new(Calculus::ZxReal);
    copy_boundaries(&src, &mut rb);
    for (id, kind) in src.interior_nodes() {
        let slots = leg_slots(&src, id);
        match kind {
            NodeKind::ZSpider(_) | NodeKind::XSpider(_) => {
                let s = rb.out.add_node(same_colour_phaseless(kind));
                for e in slots {
                    rb.offer(e, End::new(s));
                }
            }
            NodeKind::YBox { angle, flipped } => {
                let k = box_steps(angle, *flipped)?;
                let (entry, exit) = quarter_turn_chain(&mut rb.out, k);
                rb.offer(slots[0], entry);
                rb.offer(slots[1], exit);
            }
            other => {
                return Err(TranslateError::Fragment(format!(
                    "unexpected node after expansion: {other:?}"
                )))
            }
        }
    }
    Ok(rb.connect())
}

fn same_colour_phaseless(k: &NodeKind) -> NodeKind {
    match k {
        NodeKind::ZSpider(_) => NodeKind::zspider0(),
        NodeKind::XSpider(_) => NodeKind::xspider0(),
        _ => unreachable!(),
    }
}

/// A chain of k quarter turns (Z(pi) then H each) in ZX_r; k = 0 yields a
/// pass-through spider.
fn quarter_turn_chain(out: &mut Diagram, k: i64) -> (End, End) {
    if k == 0 {
        let s = out.add_node(NodeKind::zspider0());
        return (End::new(s), End::new(s));
    }
    let mut entry: Option<End> = None;
    let mut prev: Option<End> = None;
    for _ in 0..k {
        let z = out.add_node(NodeKind::ZSpider(Angle::pi()));
        let h = out.add_node(NodeKind::HBox);
        if let Some(p) = prev {
            out.add_edge(p, End::new(z));
        } else {
            entry = Some(End::new(z));
        }
        out.add_edge(End::new(z), End::ported(h, 0));
        prev = Some(End::ported(h, 1));
    }
    (entry.unwrap(), prev.unwrap())
}

/// ZX_r into pi/2-fragment Y: pi phases become hanging pi-box branches,
/// the Hadamard becomes a pi-dot gadget followed by a pi/2 box.
pub fn zxr_to_y(d: &Diagram) -> Result<Diagram, TranslateError> {
    verify_image_table()?;
    zxr_to_y_impl(d)
}

fn zxr_to_y_impl(d: &Diagram) -> Result<Diagram, TranslateError> {
    if d.calculus() != Calculus::ZxReal {
        return Err(TranslateError::Fragment("expected a ZX_r diagram".into()));
    }
    let mut rb = Rebuild::new(Calculus::Y);
    copy_boundaries(d, &mut rb);
    for (id, kind) in d.interior_nodes() {
        let slots = leg_slots(d, id);
        match kind {
            NodeKind::ZSpider(a) | NodeKind::XSpider(a) => {
                let green = matches!(kind, NodeKind::ZSpider(_));
                let s = rb.out.add_node(same_colour_phaseless(kind));
                for e in slots {
                    rb.offer(e, End::new(s));
                }
                let r = a.reduced_mod_pi(2);
                if r.equiv_mod_pi(&Angle::pi(), 2) {
                    attach_pi_branch(&mut rb.out, s, green);
                } else if !r.is_zero() {
                    return Err(TranslateError::NotRealStabPhase(a.to_string()));
                }
            }
            NodeKind::HBox => {
                let (entry, exit) = hadamard_gadget(&mut rb.out);
                rb.offer(slots[0], entry);
                rb.offer(slots[1], exit);
            }
            other => {
                return Err(TranslateError::Fragment(format!(
                    "not a ZX_r generator: {other:?}"
                )))
            }
        }
    }
    Ok(rb.connect())
}

/// Hang the defining pi branch on a spider: box(pi) into a dot of the
/// same colour (flipped on red, realizing the X matrix exactly).
fn attach_pi_branch(out: &mut Diagram, spider: NodeId, green: bool) {
    let bx = out.add_node(if green {
        NodeKind::ybox(Angle::pi())
    } else {
        NodeKind::ybox_flipped(Angle::pi())
    });
    let dot = out.add_node(if green {
        NodeKind::zspider0()
    } else {
        NodeKind::xspider0()
    });
    out.add_edge(End::new(spider), End::ported(bx, 0));
    out.add_edge(End::ported(bx, 1), End::new(dot));
}

/// The primitive Y gadget for a Hadamard box: a green pi-dot gadget
/// followed by a pi/2 box. Returns (entry, exit).
fn hadamard_gadget(out: &mut Diagram) -> (End, End) {
    let s = out.add_node(NodeKind::zspider0());
    attach_pi_branch(out, s, true);
    let bx = out.add_node(NodeKind::ybox(Angle::pi_over(2)));
    out.add_edge(End::new(s), End::ported(bx, 0));
    (End::new(s), End::ported(bx, 1))
}

/// Y into ZX at any angle: boxes Euler-decompose as
/// Z(pi/2) . X(alpha) . Z(3pi/2) with the global phase e^{-i alpha/2};
/// everything else is the identity. Derived notations expand first.
pub fn y_to_zx(d: &Diagram) -> Result<Diagram, TranslateError> {
    verify_image_table()?;
    y_to_zx_impl(d)
}

fn y_to_zx_impl(d: &Diagram) -> Result<Diagram, TranslateError> {
    if d.calculus() != Calculus::Y {
        return Err(TranslateError::Fragment("expected a Y-diagram".into()));
    }
    let src = expand_hnode(d)?;
    let mut rb = Rebuild::new(Calculus::Zx);
    copy_boundaries(&src, &mut rb);
    for (id, kind) in src.interior_nodes() {
        let slots = leg_slots(&src, id);
        match kind {
            NodeKind::ZSpider(_) | NodeKind::XSpider(_) => {
                let s = rb.out.add_node(same_colour_phaseless(kind));
                for e in slots {
                    rb.offer(e, End::new(s));
                }
            }
            NodeKind::YBox { angle, flipped } => {
                let alpha = if *flipped { -*angle } else { *angle };
                // applied first: Z(3pi/2), then X(alpha), then Z(pi/2)
                let z1 = rb.out.add_node(NodeKind::ZSpider(Angle::rational(3, 2)));
                let x = rb.out.add_node(NodeKind::XSpider(alpha));
                let z2 = rb.out.add_node(NodeKind::ZSpider(Angle::pi_over(2)));
                rb.out.add_edge(End::new(z1), End::new(x));
                rb.out.add_edge(End::new(x), End::new(z2));
                rb.offer(slots[0], End::new(z1));
                rb.offer(slots[1], End::new(z2));
                append_zx_phase(&mut rb.out, -alpha.half());
            }
            other => {
                return Err(TranslateError::Fragment(format!(
                    "unexpected node after expansion: {other:?}"
                )))
            }
        }
    }
    Ok(rb.connect())
}

/// A Y-diagram with a distinguished last wire (the control wire) whose
/// semantics has the block structure A (x) I + B (x) J.
#[derive(Debug, Clone)]
pub struct ControlledForm {
    pub diagram: Diagram,
}

fn j_matrix() -> TensorF {
    TensorF::from_real_rows(1, 1, &[&[0.0, 1.0], &[-1.0, 0.0]])
}

impl ControlledForm {
    /// Project the control wire to recover (A, B):
    /// A = <0|_c T |0>_c and B = <0|_c T |1>_c.
    pub fn block_parts(&self) -> Result<(TensorF, TensorF), TranslateError> {
        let t = interpret(&self.diagram)?;
        let outs = t.outs() - 1;
        let ins = t.ins() - 1;
        let mut a = Tensor::zeros(outs, ins);
        let mut b = Tensor::zeros(outs, ins);
        for r in 0..(1usize << outs) {
            for c in 0..(1usize << ins) {
                *a.at_mut(r, c) = *t.at(r << 1, c << 1);
                *b.at_mut(r, c) = *t.at(r << 1, (c << 1) | 1);
            }
        }
        Ok((a, b))
    }

    /// Max deviation of the semantics from Re(S) (x) I + Im(S) (x) J for
    /// the given source tensor.
    pub fn block_law_against(&self, source: &TensorF) -> Result<f64, TranslateError> {
        let t = interpret(&self.diagram)?;
        let (re, im) = source.re_im_split();
        let want = re.kron(&TensorF::identity(1)).add(&im.kron(&j_matrix()));
        Ok(t.max_diff(&want))
    }

    /// Max deviation from the law using the form's own projections.
    pub fn block_law_deviation(&self) -> Result<f64, TranslateError> {
        let t = interpret(&self.diagram)?;
        let (a, b) = self.block_parts()?;
        let want = a.kron(&TensorF::identity(1)).add(&b.kron(&j_matrix()));
        Ok(t.max_diff(&want))
    }
}

/// ZX into Y with a control wire: each generator's gadget taps the control
/// line. Phased spiders contribute a conditional rotation built from two
/// red crossings holding a pair of opposite boxes; red spiders conjugate
/// by Hadamard gadgets on their own legs; wiring passes the control wire
/// untouched. Gadgets thread along the control wire in node order; they
/// commute on it, so the order does not matter semantically.
pub fn zx_to_y(d: &Diagram) -> Result<ControlledForm, TranslateError> {
    verify_image_table()?;
    zx_to_y_impl(d)
}

fn zx_to_y_impl(d: &Diagram) -> Result<ControlledForm, TranslateError> {
    if d.calculus() == Calculus::Y {
        return Err(TranslateError::Fragment("expected a ZX diagram".into()));
    }
    let mut rb = Rebuild::new(Calculus::Y);
    copy_boundaries(d, &mut rb);

    let ctrl_in = rb.out.add_input();
    let mut ctrl: End = End::new(ctrl_in);

    for (id, kind) in d.interior_nodes() {
        let slots = leg_slots(d, id);
        match kind {
            NodeKind::ZSpider(a) => {
                let s = rb.out.add_node(NodeKind::zspider0());
                for e in slots {
                    rb.offer(e, End::new(s));
                }
                if !a.is_zero() {
                    ctrl = attach_control_tap(&mut rb.out, s, *a, ctrl);
                }
            }
            NodeKind::XSpider(a) => {
                // Hadamard-conjugate of the green image: H on every leg
                let s = rb.out.add_node(NodeKind::zspider0());
                for e in slots {
                    let h = rb.out.add_node(NodeKind::HBox);
                    rb.out.add_edge(End::ported(h, 1), End::new(s));
                    rb.offer(e, End::ported(h, 0));
                }
                if !a.is_zero() {
                    ctrl = attach_control_tap(&mut rb.out, s, *a, ctrl);
                }
            }
            NodeKind::HBox => {
                let h = rb.out.add_node(NodeKind::HBox);
                rb.offer(slots[0], End::ported(h, 0));
                rb.offer(slots[1], End::ported(h, 1));
            }
            other => {
                return Err(TranslateError::Fragment(format!(
                    "not a ZX generator: {other:?}"
                )))
            }
        }
    }
    let ctrl_out = rb.out.add_output();
    rb.out.add_edge(ctrl, End::new(ctrl_out));
    Ok(ControlledForm {
        diagram: rb.connect(),
    })
}

/// The conditional rotation tap: along the control line, a red crossing,
/// box(alpha), another crossing and box(-alpha), both crossings tied to
/// the spider; a lone dot balances the two crossings. For spider value x
/// the control wire sees the rotation by -2 alpha x.
fn attach_control_tap(out: &mut Diagram, spider: NodeId, alpha: Angle, ctrl: End) -> End {
    let r1 = out.add_node(NodeKind::xspider0());
    let b1 = out.add_node(NodeKind::ybox(alpha));
    let r2 = out.add_node(NodeKind::xspider0());
    let b2 = out.add_node(NodeKind::ybox(-alpha));
    out.add_edge(End::new(spider), End::new(r1));
    out.add_edge(End::new(spider), End::new(r2));
    out.add_edge(ctrl, End::new(r1));
    out.add_edge(End::new(r1), End::ported(b1, 0));
    out.add_edge(End::ported(b1, 1), End::new(r2));
    out.add_edge(End::new(r2), End::ported(b2, 0));
    append_scalar(out, ScalarGadget::Two);
    End::ported(b2, 1)
}

/// |0> on a wire: a red dot with its 1/sqrt2 scalar.
fn zero_state(c: Calculus) -> Diagram {
    let mut d = Diagram::empty(c);
    let dot = d.add_node(NodeKind::xspider0());
    let o = d.add_output();
    d.add_edge(End::new(dot), End::new(o));
    append_scalar(&mut d, ScalarGadget::InvSqrt2);
    d
}

/// |1>: a red dot through a pi box (Y) or a pi-phased red dot (ZX).
fn one_state(c: Calculus) -> Diagram {
    let mut d = Diagram::empty(c);
    let o = d.add_output();
    match c {
        Calculus::Y => {
            let dot = d.add_node(NodeKind::xspider0());
            let bx = d.add_node(NodeKind::ybox(Angle::pi()));
            d.add_edge(End::new(dot), End::ported(bx, 0));
            d.add_edge(End::ported(bx, 1), End::new(o));
        }
        _ => {
            let dot = d.add_node(NodeKind::XSpider(Angle::pi()));
            d.add_edge(End::new(dot), End::new(o));
        }
    }
    append_scalar(&mut d, ScalarGadget::InvSqrt2);
    d
}

/// Cap the control wire (last on both sides) with effect <0| below and
/// the given state above.
fn cap_control(ctrl: &Diagram, state: &Diagram) -> Result<Diagram, TranslateError> {
    let n = ctrl.num_inputs() - 1;
    let m = ctrl.num_outputs() - 1;
    let c = ctrl.calculus();
    let bottom = Diagram::identity(c, m).tensor(&zero_state(c).flip_vertical())?;
    let top = Diagram::identity(c, n).tensor(state)?;
    let mid = Diagram::compose(ctrl, &top)?;
    Ok(Diagram::compose(&bottom, &mid)?)
}

/// Re(D): cap the control wire with <0| and |0>; the semantics is the
/// real part of the source tensor.
pub fn re_part(d: &Diagram, route: ReImRoute) -> Result<Diagram, TranslateError> {
    let cf = zx_to_y(d)?;
    match route {
        ReImRoute::Direct => cap_control(&cf.diagram, &zero_state(Calculus::Y)),
        ReImRoute::ViaZx => {
            let zx = y_to_zx(&cf.diagram)?;
            cap_control(&zx, &zero_state(Calculus::Zx))
        }
    }
}

/// Im(D): cap the control wire with <0| and |1>.
pub fn im_part(d: &Diagram, route: ReImRoute) -> Result<Diagram, TranslateError> {
    let cf = zx_to_y(d)?;
    match route {
        ReImRoute::Direct => cap_control(&cf.diagram, &one_state(Calculus::Y)),
        ReImRoute::ViaZx => {
            let zx = y_to_zx(&cf.diagram)?;
            cap_control(&zx, &one_state(Calculus::Zx))
        }
    }
}

// ---- universality ----

/// The exact CNOT between two wires of a k-wire identity layer, built
/// from a green-red pair with its sqrt2 correction.
fn cnot_layer(k: usize, control: usize, target: usize) -> Diagram {
    let mut d = Diagram::empty(Calculus::Y);
    let mut ins = Vec::new();
    for _ in 0..k {
        ins.push(d.add_input());
    }
    let mut outs = Vec::new();
    for _ in 0..k {
        outs.push(d.add_output());
    }
    let g = d.add_node(NodeKind::zspider0());
    let r = d.add_node(NodeKind::xspider0());
    d.add_edge(End::new(g), End::new(r));
    for w in 0..k {
        if w == control {
            d.add_edge(End::new(ins[w]), End::new(g));
            d.add_edge(End::new(g), End::new(outs[w]));
        } else if w == target {
            d.add_edge(End::new(ins[w]), End::new(r));
            d.add_edge(End::new(r), End::new(outs[w]));
        } else {
            d.add_edge(End::new(ins[w]), End::new(outs[w]));
        }
    }
    append_scalar(&mut d, ScalarGadget::Sqrt2);
    d
}

/// A single box on one wire of a k-wire identity layer.
fn box_layer(k: usize, wire: usize, angle: Angle) -> Diagram {
    let mut d = Diagram::empty(Calculus::Y);
    for w in 0..k {
        let i = d.add_input();
        let o = d.add_output();
        if w == wire {
            let b = d.add_node(NodeKind::ybox(angle));
            d.add_edge(End::new(i), End::ported(b, 0));
            d.add_edge(End::ported(b, 1), End::new(o));
        } else {
            d.add_edge(End::new(i), End::new(o));
        }
    }
    d
}

/// Uniformly controlled rotation on `target` with controls
/// `base..base+j`, angles indexed by control bits (most significant =
/// the outermost control). Recursive halving into boxes and CNOTs.
fn ucry(
    k: usize,
    j: usize,
    target: usize,
    angles: &[f64],
    base: usize,
) -> Result<Diagram, TranslateError> {
    debug_assert_eq!(angles.len(), 1 << j);
    if j == 0 {
        return Ok(box_layer(k, target, Angle::free(angles[0])));
    }
    let half = angles.len() / 2;
    let plus: Vec<f64> = (0..half)
        .map(|i| (angles[i] + angles[i + half]) / 2.0)
        .collect();
    let minus: Vec<f64> = (0..half)
        .map(|i| (angles[i] - angles[i + half]) / 2.0)
        .collect();
    let cx = cnot_layer(k, base, target);
    let lower = ucry(k, j - 1, target, &plus, base + 1)?;
    let upper = ucry(k, j - 1, target, &minus, base + 1)?;
    // rightmost first: plus-half, CX, minus-half, CX
    let s1 = Diagram::compose(&cx, &lower)?;
    let s2 = Diagram::compose(&upper, &s1)?;
    Ok(Diagram::compose(&cx, &s2)?)
}

/// A positive scalar as a closed gadget: a cosine chain times a power of
/// two.
fn positive_scalar_gadget(d: &mut Diagram, c: f64) {
    debug_assert!(c > 0.0);
    let q = c.log2().ceil() as i32;
    let r = c / (2f64).powi(q); // in (1/2, 1]
    let gamma = 2.0 * r.acos();
    append_scalar(d, ScalarGadget::ChainGG(Angle::free(gamma)));
    // the chain contributes 2r; adjust by 2^(q-1)
    let p = q - 1;
    if p >= 0 {
        for _ in 0..p {
            append_scalar(d, ScalarGadget::Two);
        }
    } else {
        for _ in 0..(2 * (-p)) {
            append_scalar(d, ScalarGadget::InvSqrt2);
        }
    }
}

fn all_zero_state(k: usize) -> Diagram {
    let mut d = Diagram::empty(Calculus::Y);
    for _ in 0..k {
        let dot = d.add_node(NodeKind::xspider0());
        let o = d.add_output();
        d.add_edge(End::new(dot), End::new(o));
        append_scalar(&mut d, ScalarGadget::InvSqrt2);
    }
    d
}

/// Prepare the real state with the given 2^k amplitudes (not necessarily
/// normalized) as a 0 -> k Y-diagram, via a ladder of uniformly
/// controlled rotations.
fn prepare_real_state(k: usize, amps: &[f64]) -> Result<Diagram, TranslateError> {
    debug_assert_eq!(amps.len(), 1 << k);
    let norm = amps.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm == 0.0 {
        let mut d = all_zero_state(k);
        append_scalar(&mut d, ScalarGadget::Zero);
        return Ok(d);
    }
    let mut theta_per_level: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut weights: Vec<f64> = amps.to_vec();
    for level in (0..k).rev() {
        let mut thetas = Vec::with_capacity(1 << level);
        let mut up = Vec::with_capacity(1 << level);
        for p in 0..(1usize << level) {
            let a0 = weights[2 * p];
            let a1 = weights[2 * p + 1];
            thetas.push(2.0 * a1.atan2(a0));
            up.push((a0 * a0 + a1 * a1).sqrt());
        }
        theta_per_level.push(thetas);
        weights = up;
    }
    theta_per_level.reverse();

    let mut circuit = all_zero_state(k);
    for (j, thetas) in theta_per_level.iter().enumerate() {
        let layer = ucry(k, j, j, thetas, 0)?;
        circuit = Diagram::compose(&layer, &circuit)?;
    }
    positive_scalar_gadget(&mut circuit, norm);
    if k == 0 && amps[0] < 0.0 {
        // the rotation ladder is empty, so the global sign lives here
        crate::notation::append_minus_one(&mut circuit);
    }
    Ok(circuit)
}

/// Universality: build a Y-diagram whose semantics is the given real
/// matrix (2^m x 2^n), by preparing the bent matrix state, pushing it
/// through the ZX-calculus and extracting the real part.
pub fn universal_embed(rows: &[Vec<f64>]) -> Result<Diagram, TranslateError> {
    let m2 = rows.len();
    let n2 = rows.first().map(|r| r.len()).unwrap_or(0);
    if !m2.is_power_of_two() || !n2.is_power_of_two() {
        return Err(TranslateError::BadShape { rows: m2, cols: n2 });
    }
    if rows
        .iter()
        .any(|r| r.len() != n2 || r.iter().any(|x| !x.is_finite()))
    {
        return Err(TranslateError::BadShape { rows: m2, cols: n2 });
    }
    let m = m2.trailing_zeros() as usize;
    let n = n2.trailing_zeros() as usize;
    let k = m + n;

    let mut amps = vec![0.0; 1 << k];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            amps[(r << n) | c] = *v;
        }
    }
    let state = prepare_real_state(k, &amps)?;

    // bend the last n wires into inputs
    let mut bent = state;
    let outs: Vec<NodeId> = bent.outputs().to_vec();
    for &o in outs.iter().skip(m) {
        bent.rebend_output_to_input(o);
    }

    let zx = y_to_zx(&bent)?;
    re_part(&zx, ReImRoute::Direct)
}

// ---- the generator-image contract table ----

static IMAGE_TABLE: OnceLock<Result<(), TranslateError>> = OnceLock::new();

/// Verify the contract table shipped with the crate, and the builders in
/// this module against it. Runs once; translations refuse on failure.
pub fn verify_image_table() -> Result<(), TranslateError> {
    IMAGE_TABLE
        .get_or_init(|| {
            let text = include_str!("../assets/translation_images.txt");
            run_image_table(text)
        })
        .clone()
}

fn run_image_table(text: &str) -> Result<(), TranslateError> {
    let mut lines = text.lines().peekable();
    while let Some(raw) = lines.next() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut head = line.split_whitespace();
        if head.next() != Some("entry") {
            return Err(TranslateError::ImageContract(format!(
                "unrecognized table line: {line}"
            )));
        }
        let name = head.next().unwrap_or("?").to_string();
        let mut dsl = String::new();
        let mut expect_dims: Option<(usize, usize)> = None;
        for raw in lines.by_ref() {
            let l = raw.trim();
            if let Some(rest) = l.strip_prefix("expect ") {
                let dims: Vec<usize> = rest
                    .split_whitespace()
                    .filter_map(|x| x.parse().ok())
                    .collect();
                expect_dims = Some((dims[0], dims[1]));
                break;
            }
            dsl.push_str(l);
            dsl.push('\n');
        }
        let (outs, ins) = expect_dims
            .ok_or_else(|| TranslateError::ImageContract(format!("{name}: missing expect")))?;
        let mut data: Vec<Complex64> = Vec::new();
        while data.len() < (1 << (outs + ins)) {
            let raw = lines.next().ok_or_else(|| {
                TranslateError::ImageContract(format!("{name}: truncated matrix"))
            })?;
            for tok in raw.split_whitespace() {
                data.push(parse_complex(tok).ok_or_else(|| {
                    TranslateError::ImageContract(format!("{name}: bad entry {tok}"))
                })?);
            }
        }
        let expected = Tensor::new(outs, ins, data);
        let doc = crate::dsl::parse(&dsl)
            .map_err(|e| TranslateError::ImageContract(format!("{name}: {e}")))?;
        let got = interpret(&doc.diagram)
            .map_err(|e| TranslateError::ImageContract(format!("{name}: {e}")))?;
        let dev = got.max_diff(&expected);
        if dev > 1e-9 {
            return Err(TranslateError::ImageContract(format!(
                "{name}: table gadget deviates by {dev:.3e}"
            )));
        }
        builder_cross_check(&name, &expected)?;
    }
    Ok(())
}

fn parse_complex(tok: &str) -> Option<Complex64> {
    if let Some((re, im)) = tok.split_once(':') {
        Some(Complex64::new(re.parse().ok()?, im.parse().ok()?))
    } else {
        Some(Complex64::new(tok.parse().ok()?, 0.0))
    }
}

/// Check this module's builders against a table contract.
fn builder_cross_check(name: &str, expected: &TensorF) -> Result<(), TranslateError> {
    use crate::diagram::generator_in;
    let built: Option<Diagram> = match name {
        "y2zxr.box_quarter" => {
            let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(2)), 1, 1)?;
            Some(y_to_zxr_impl(&d)?)
        }
        "zxr2y.hadamard" => {
            let d = generator_in(Calculus::ZxReal, NodeKind::HBox, 1, 1)?;
            Some(zxr_to_y_impl(&d)?)
        }
        "zxr2y.green_pi" => {
            let d = generator_in(Calculus::ZxReal, NodeKind::ZSpider(Angle::pi()), 1, 1)?;
            Some(zxr_to_y_impl(&d)?)
        }
        "zxr2y.red_pi" => {
            let d = generator_in(Calculus::ZxReal, NodeKind::XSpider(Angle::pi()), 1, 1)?;
            Some(zxr_to_y_impl(&d)?)
        }
        "y2zx.box_quarter" => {
            let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(2)), 1, 1)?;
            Some(y_to_zx_impl(&d)?)
        }
        "zx2y.green_half_pi" => {
            let d = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi_over(2)), 1, 1)?;
            Some(zx_to_y_impl(&d)?.diagram)
        }
        "zx2y.hadamard" => {
            let d = generator_in(Calculus::Zx, NodeKind::HBox, 1, 1)?;
            Some(zx_to_y_impl(&d)?.diagram)
        }
        _ => None,
    };
    if let Some(b) = built {
        let got = interpret(&b)
            .map_err(|e| TranslateError::ImageContract(format!("{name} builder: {e}")))?;
        let dev = got.max_diff(expected);
        if dev > 1e-9 {
            return Err(TranslateError::ImageContract(format!(
                "{name}: builder deviates from the table by {dev:.3e}"
            )));
        }
    }
    Ok(())
}
