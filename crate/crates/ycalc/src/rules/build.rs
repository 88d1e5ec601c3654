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

//! Construction of rule sides for every catalogued rewrite.
//!
//! Each builder returns the two sides as open diagrams over matching
//! boundaries. Scalar subdiagrams keep both sides exactly equal; the
//! soundness suite is the arbiter for every closed form used here.

use num::rational::Rational64;
use rand::Rng;

use crate::angle::{Angle, Fragment};
use crate::diagram::{Calculus, Diagram, GraphBuilder, NodeId, NodeKind};
use crate::error::DiagramError;
use crate::notation::{append_scalar, append_zx_phase, ScalarGadget};

use super::{Binding, Lemma, RuleKind};

fn spider(green: bool, phase: Angle) -> NodeKind {
    if green {
        NodeKind::ZSpider(phase)
    } else {
        NodeKind::XSpider(phase)
    }
}

/// `pi/(2n)`-fragment angle with a random small numerator.
fn frag_angle(rng: &mut impl Rng, n: i64) -> Angle {
    let k = rng.gen_range(-(4 * n)..=(4 * n));
    Angle::Rational(Rational64::new(k, 2 * n))
}

fn any_angle(rng: &mut impl Rng) -> Angle {
    if rng.gen_bool(0.5) {
        Angle::free(rng.gen_range(-2.0 * std::f64::consts::PI..2.0 * std::f64::consts::PI))
    } else {
        let den = *[1i64, 2, 3, 4, 6].get(rng.gen_range(0..5)).unwrap();
        Angle::Rational(Rational64::new(rng.gen_range(-8..8), den))
    }
}

fn sample_angle(rng: &mut impl Rng, frag: Option<Fragment>) -> Angle {
    match frag {
        None => any_angle(rng),
        Some(Fragment::Pi2N(n)) => frag_angle(rng, n),
        Some(Fragment::Free) => any_angle(rng),
    }
}

fn zxr_phase(rng: &mut impl Rng) -> Angle {
    if rng.gen_bool(0.5) {
        Angle::zero()
    } else {
        Angle::pi()
    }
}

fn phase_for(calculus: Calculus, rng: &mut impl Rng, frag: Option<Fragment>) -> Angle {
    match calculus {
        Calculus::Y => Angle::zero(),
        Calculus::ZxReal => zxr_phase(rng),
        Calculus::Zx => sample_angle(rng, frag),
    }
}

pub(super) fn sample_binding(
    calculus: Calculus,
    kind: RuleKind,
    rng: &mut impl Rng,
    frag: Option<Fragment>,
) -> Binding {
    match kind {
        RuleKind::SpiderFusion => {
            let a = rng.gen_range(0..=2usize);
            let b = rng.gen_range(0..=(4 - a).min(2));
            let j = rng.gen_range(1..=3usize);
            Binding {
                angles: vec![
                    phase_for(calculus, rng, frag),
                    phase_for(calculus, rng, frag),
                ],
                nums: vec![a, b, j],
            }
        }
        RuleKind::IdentitySpider
        | RuleKind::CupSpider
        | RuleKind::InverseScalars
        | RuleKind::Copy
        | RuleKind::Bialgebra
        | RuleKind::EmptyPi4
        | RuleKind::Euler => Binding::none(),
        RuleKind::BoxFusion => Binding {
            angles: vec![sample_angle(rng, frag), sample_angle(rng, frag)],
            nums: vec![],
        },
        RuleKind::BubbleDisconnect => Binding::angle(sample_angle(rng, frag)),
        RuleKind::BoxHadamard => {
            let n = rng.gen_range(0..=2usize);
            let m = rng.gen_range((n == 0) as usize..=2usize);
            Binding {
                angles: vec![],
                nums: vec![n, m],
            }
        }
        RuleKind::ZeroAbsorb => Binding {
            angles: vec![sample_angle(rng, frag)],
            nums: vec![rng.gen_range(0..6usize)],
        },
        RuleKind::Supplementarity(_) => Binding::angle(sample_angle(rng, frag)),
        RuleKind::HLoop => Binding::angle(phase_for(calculus, rng, frag)),
        RuleKind::HConjugation => {
            let n = rng.gen_range(0..=2usize);
            let m = rng.gen_range((n == 0) as usize..=2usize);
            Binding {
                angles: vec![phase_for(calculus, rng, frag)],
                nums: vec![n, m],
            }
        }
        RuleKind::ZxZeroAbsorb => Binding {
            angles: vec![],
            nums: vec![rng.gen_range(0..3usize)],
        },
        RuleKind::PiCommutation => Binding::angle(sample_angle(rng, frag)),
        RuleKind::ZxSupplementarity(_) => Binding::angle(sample_angle(rng, frag)),
        RuleKind::Lemma(l) => sample_lemma_binding(l, rng, frag),
    }
}

fn sample_lemma_binding(l: Lemma, rng: &mut impl Rng, frag: Option<Fragment>) -> Binding {
    use Lemma::*;
    match l {
        UdBox | PiCrossing | Exclusion | Exclusion2 | ExclusionHada | Rs2Rewritten => {
            Binding::angle(sample_angle(rng, frag))
        }
        BoxFusionUpright => Binding {
            angles: vec![sample_angle(rng, frag), sample_angle(rng, frag)],
            nums: vec![],
        },
        GenBialgebra => {
            let pairs = [(2usize, 2usize), (2, 3), (3, 2), (3, 3)];
            let (n, m) = pairs[rng.gen_range(0..pairs.len())];
            Binding {
                angles: vec![],
                nums: vec![n, m],
            }
        }
        SupFlipped(_) => Binding::angle(sample_angle(rng, frag)),
        ZxMultGlobPhases => Binding {
            angles: vec![sample_angle(rng, frag), sample_angle(rng, frag)],
            nums: vec![],
        },
        ZxBicolorAlpha0 | ZxK1 => Binding::angle(sample_angle(rng, frag)),
        ZxrZeroAbsorb => Binding {
            angles: vec![],
            nums: vec![rng.gen_range(0..3usize)],
        },
        _ => Binding::none(),
    }
}

/// Whether `angles[0]` of the rule's binding ranges over arbitrary angles
/// (as opposed to a constrained phase alphabet), so probing specific values
/// is admissible.
pub(super) fn has_free_angle(calculus: Calculus, kind: RuleKind) -> bool {
    use Lemma::*;
    match kind {
        RuleKind::BoxFusion
        | RuleKind::BubbleDisconnect
        | RuleKind::ZeroAbsorb
        | RuleKind::Supplementarity(_) => true,
        RuleKind::PiCommutation | RuleKind::ZxSupplementarity(_) => true,
        RuleKind::SpiderFusion | RuleKind::HConjugation | RuleKind::HLoop => {
            calculus == Calculus::Zx
        }
        RuleKind::Lemma(l) => matches!(
            l,
            UdBox
                | BoxFusionUpright
                | PiCrossing
                | Exclusion
                | Exclusion2
                | ExclusionHada
                | Rs2Rewritten
                | SupFlipped(_)
                | ZxMultGlobPhases
                | ZxBicolorAlpha0
                | ZxK1
        ),
        _ => false,
    }
}

pub(super) fn enumerate_bindings(calculus: Calculus, kind: RuleKind) -> Option<Vec<Binding>> {
    match kind {
        RuleKind::IdentitySpider
        | RuleKind::CupSpider
        | RuleKind::InverseScalars
        | RuleKind::Copy
        | RuleKind::Bialgebra
        | RuleKind::EmptyPi4
        | RuleKind::Euler => Some(vec![Binding::none()]),
        RuleKind::SpiderFusion if calculus != Calculus::Zx => {
            // arity probes x the finite phase alphabet
            let phases: Vec<Angle> = match calculus {
                Calculus::Y => vec![Angle::zero()],
                _ => vec![Angle::zero(), Angle::pi()],
            };
            let arities = [
                (1usize, 1usize, 1usize),
                (0, 2, 1),
                (2, 1, 2),
                (2, 2, 1),
                (0, 0, 3),
            ];
            let mut out = Vec::new();
            for p1 in &phases {
                for p2 in &phases {
                    for (a, b, j) in arities {
                        out.push(Binding {
                            angles: vec![*p1, *p2],
                            nums: vec![a, b, j],
                        });
                    }
                }
            }
            Some(out)
        }
        RuleKind::HLoop => Some(vec![
            Binding::angle(Angle::zero()),
            Binding::angle(Angle::pi()),
        ]),
        RuleKind::HConjugation if calculus == Calculus::ZxReal => {
            let mut out = Vec::new();
            for p in [Angle::zero(), Angle::pi()] {
                for (n, m) in [(0usize, 1usize), (1, 1), (1, 2), (2, 1), (2, 2)] {
                    out.push(Binding {
                        angles: vec![p],
                        nums: vec![n, m],
                    });
                }
            }
            Some(out)
        }
        RuleKind::Lemma(
            Lemma::BoxZero
            | Lemma::TwoScalars
            | Lemma::Hopf
            | Lemma::PiCommute
            | Lemma::PiExclusion
            | Lemma::RedStatePi
            | Lemma::PiInvolution
            | Lemma::Pi2Loop
            | Lemma::TwoPiBox
            | Lemma::MinusOneSquared
            | Lemma::PiDistribution
            | Lemma::PiBoxDecomp
            | Lemma::HadaInvolution
            | Lemma::ZxInverseEuScalar
            | Lemma::ZxHopf
            | Lemma::ZxrK2Pi,
        ) => Some(vec![Binding::none()]),
        _ => None,
    }
}

pub(super) fn build_sides(
    calculus: Calculus,
    kind: RuleKind,
    b: &Binding,
) -> Result<(Diagram, Diagram), DiagramError> {
    let sides = match kind {
        RuleKind::SpiderFusion => spider_fusion(calculus, b, true),
        RuleKind::IdentitySpider => identity_spider(calculus, true),
        RuleKind::CupSpider => cup_spider(calculus),
        RuleKind::InverseScalars => inverse_scalars(calculus),
        RuleKind::Copy => copy_rule(calculus),
        RuleKind::Bialgebra => gen_bialgebra(calculus, 2, 2),
        RuleKind::BoxFusion => box_fusion(b, false),
        RuleKind::BubbleDisconnect => bubble_disconnect(b),
        RuleKind::BoxHadamard => box_hadamard(b),
        RuleKind::ZeroAbsorb => zero_absorb(b),
        RuleKind::Supplementarity(n) => supplementarity(n, b, false),
        RuleKind::HLoop => h_loop(calculus, b),
        RuleKind::HConjugation => h_conjugation(calculus, b),
        RuleKind::ZxZeroAbsorb => zx_zero_absorb(calculus, b),
        RuleKind::EmptyPi4 => empty_pi4(),
        RuleKind::Euler => euler(),
        RuleKind::PiCommutation => pi_commutation(b),
        RuleKind::ZxSupplementarity(n) => zx_supplementarity(n, b),
        RuleKind::Lemma(l) => build_lemma(calculus, l, b),
    };
    let (l, r) = sides?;
    debug_assert!(
        l.validate().is_empty(),
        "{:?} lhs: {:?}",
        kind,
        l.validate()
    );
    debug_assert!(
        r.validate().is_empty(),
        "{:?} rhs: {:?}",
        kind,
        r.validate()
    );
    Ok((l, r))
}

type Sides = Result<(Diagram, Diagram), DiagramError>;

/// (S1) Two connected same-colour spiders fuse; phases add.
fn spider_fusion(c: Calculus, b: &Binding, green: bool) -> Sides {
    let (p1, p2) = (b.angles[0], b.angles[1]);
    let (a, bb, j) = (b.nums[0], b.nums[1], b.nums[2]);
    let mut lhs = GraphBuilder::new(c);
    let u = lhs.node(spider(green, p1));
    let v = lhs.node(spider(green, p2));
    for _ in 0..a {
        let i = lhs.input();
        lhs.wire(i, u);
    }
    for _ in 0..bb {
        let o = lhs.output();
        lhs.wire(v, o);
    }
    for _ in 0..j {
        lhs.wire(u, v);
    }
    let mut rhs = GraphBuilder::new(c);
    let w = rhs.node(spider(green, (p1 + p2).reduced_mod_pi(2)));
    for _ in 0..a {
        let i = rhs.input();
        rhs.wire(i, w);
    }
    for _ in 0..bb {
        let o = rhs.output();
        rhs.wire(w, o);
    }
    Ok((lhs.finish(), rhs.finish()))
}

/// (S2) The phaseless 2-legged spider is a wire.
fn identity_spider(c: Calculus, green: bool) -> Sides {
    let mut lhs = GraphBuilder::new(c);
    let i = lhs.input();
    let o = lhs.output();
    let s = lhs.node(spider(green, Angle::zero()));
    lhs.wire(i, s);
    lhs.wire(s, o);
    Ok((lhs.finish(), Diagram::identity(c, 1)))
}

/// (S3) The 2 -> 0 spider is the cup.
fn cup_spider(c: Calculus) -> Sides {
    let mut lhs = GraphBuilder::new(c);
    let i0 = lhs.input();
    let i1 = lhs.input();
    let s = lhs.gspider();
    lhs.wire(i0, s);
    lhs.wire(i1, s);
    Ok((lhs.finish(), Diagram::cup(c)))
}

/// (IV) The sqrt2 and 1/sqrt2 scalars cancel to the empty diagram.
fn inverse_scalars(c: Calculus) -> Sides {
    let mut lhs = Diagram::empty(c);
    append_scalar(&mut lhs, ScalarGadget::Sqrt2);
    append_scalar(&mut lhs, ScalarGadget::InvSqrt2);
    Ok((lhs, Diagram::empty(c)))
}

/// (B1) The green spider copies the red state, with a 1/sqrt2 scalar.
fn copy_rule(c: Calculus) -> Sides {
    let mut lhs = GraphBuilder::new(c);
    let o0 = lhs.output();
    let o1 = lhs.output();
    let s = lhs.gspider();
    let r = lhs.rspider();
    lhs.wire(r, s);
    lhs.wire(s, o0);
    lhs.wire(s, o1);
    let mut rhs = GraphBuilder::new(c);
    let p0 = rhs.output();
    let p1 = rhs.output();
    let r0 = rhs.rspider();
    let r1 = rhs.rspider();
    rhs.wire(r0, p0);
    rhs.wire(r1, p1);
    let mut rhs = rhs.finish();
    append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
    Ok((lhs.finish(), rhs))
}

/// (B2) and its generalized form: the green multiply followed by
/// the red copy equals the complete bipartite graph of copies, with
/// (n-1)(m-1) sqrt2 scalars on the bipartite side.
fn gen_bialgebra(c: Calculus, n: usize, m: usize) -> Sides {
    let mut lhs = GraphBuilder::new(c);
    let g = lhs.gspider();
    let r = lhs.rspider();
    lhs.wire(g, r);
    for _ in 0..n {
        let i = lhs.input();
        lhs.wire(i, g);
    }
    for _ in 0..m {
        let o = lhs.output();
        lhs.wire(r, o);
    }
    let mut rhs = GraphBuilder::new(c);
    let reds: Vec<NodeId> = (0..n).map(|_| rhs.rspider()).collect();
    let greens: Vec<NodeId> = (0..m).map(|_| rhs.gspider()).collect();
    for r_i in &reds {
        let i = rhs.input();
        rhs.wire(i, *r_i);
        for g_j in &greens {
            rhs.wire(*r_i, *g_j);
        }
    }
    for g_j in &greens {
        let o = rhs.output();
        rhs.wire(*g_j, o);
    }
    let mut rhs = rhs.finish();
    for _ in 0..(n - 1) * (m - 1) {
        append_scalar(&mut rhs, ScalarGadget::Sqrt2);
    }
    Ok((lhs.finish(), rhs))
}

/// (RS1) Boxes on a wire fuse; angles add.
fn box_fusion(b: &Binding, flipped: bool) -> Sides {
    let (alpha, beta) = (b.angles[0], b.angles[1]);
    let mk = |angle: Angle| {
        if flipped {
            NodeKind::ybox_flipped(angle)
        } else {
            NodeKind::ybox(angle)
        }
    };
    let mut lhs = GraphBuilder::new(Calculus::Y);
    let i = lhs.input();
    let o = lhs.output();
    let b1 = lhs.node(mk(alpha));
    let b2 = lhs.node(mk(beta));
    lhs.chain(&[i, b1, b2, o]);
    let mut rhs = GraphBuilder::new(Calculus::Y);
    let i = rhs.input();
    let o = rhs.output();
    let s = rhs.node(mk(alpha + beta));
    rhs.chain(&[i, s, o]);
    Ok((lhs.finish(), rhs.finish()))
}

/// (RS2) A bubble holding a box and its upside-down copy disconnects:
/// the wire splits into a green effect and a red state, with the closed
/// cos(alpha) chain as the surviving scalar.
fn bubble_disconnect(b: &Binding) -> Sides {
    let alpha = b.angles[0];
    let mut lhs = GraphBuilder::new(Calculus::Y);
    let i = lhs.input();
    let o = lhs.output();
    let g = lhs.gspider();
    let r = lhs.rspider();
    let up = lhs.ybox(alpha);
    let down = lhs.ybox_flipped(alpha);
    lhs.wire(i, g);
    lhs.wire(g, up);
    lhs.wire(up, r);
    lhs.wire(g, down);
    lhs.wire(down, r);
    lhs.wire(r, o);
    let mut rhs = GraphBuilder::new(Calculus::Y);
    let i = rhs.input();
    let o = rhs.output();
    let gd = rhs.gspider();
    let rd = rhs.rspider();
    rhs.wire(i, gd);
    rhs.wire(rd, o);
    let mut rhs = rhs.finish();
    append_scalar(&mut rhs, ScalarGadget::ChainGG(alpha.scale(2)));
    for _ in 0..4 {
        append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
    }
    Ok((lhs.finish(), rhs))
}

/// (RH) pi/2 arrows on every leg of a green spider turn it red: upright
/// pi/2 boxes on the inputs, upside-down pi/2 boxes on the outputs.
fn box_hadamard(b: &Binding) -> Sides {
    let (n, m) = (b.nums[0], b.nums[1]);
    let mut lhs = GraphBuilder::new(Calculus::Y);
    let s = lhs.gspider();
    for _ in 0..n {
        let i = lhs.input();
        let bx = lhs.ybox(Angle::pi_over(2));
        lhs.wire(i, bx);
        lhs.wire(bx, s);
    }
    for _ in 0..m {
        let o = lhs.output();
        let bx = lhs.ybox_flipped(Angle::pi_over(2));
        lhs.wire(s, bx);
        lhs.wire(bx, o);
    }
    let mut rhs = GraphBuilder::new(Calculus::Y);
    let s = rhs.rspider();
    for _ in 0..n {
        let i = rhs.input();
        rhs.wire(i, s);
    }
    for _ in 0..m {
        let o = rhs.output();
        rhs.wire(s, o);
    }
    Ok((lhs.finish(), rhs.finish()))
}

fn pick_scalar(pick: usize, gamma: Angle) -> ScalarGadget {
    match pick {
        0 => ScalarGadget::Two,
        1 => ScalarGadget::Sqrt2,
        2 => ScalarGadget::InvSqrt2,
        3 => ScalarGadget::ChainGR(gamma),
        4 => ScalarGadget::ChainGG(gamma),
        _ => ScalarGadget::Zero,
    }
}

/// (RZO) The zero scalar absorbs any closed scalar subdiagram.
fn zero_absorb(b: &Binding) -> Sides {
    let gamma = b.angles[0];
    let pick = b.nums[0];
    let mut lhs = Diagram::empty(Calculus::Y);
    append_scalar(&mut lhs, ScalarGadget::Zero);
    append_scalar(&mut lhs, pick_scalar(pick, gamma));
    let mut rhs = Diagram::empty(Calculus::Y);
    append_scalar(&mut rhs, ScalarGadget::Zero);
    Ok((lhs, rhs))
}

/// (RSUP_n) n hanging box branches at angles alpha + 2k pi/n merge into a
/// single branch, with closed scalars depending on n mod 4.
fn supplementarity(n: u32, b: &Binding, boxes_flipped: bool) -> Sides {
    let n = n as i64;
    let alpha = b.angles[0];
    let mk = |angle: Angle| {
        if boxes_flipped {
            NodeKind::ybox_flipped(angle)
        } else {
            NodeKind::ybox(angle)
        }
    };

    let mut lhs = GraphBuilder::new(Calculus::Y);
    let i = lhs.input();
    let o = lhs.output();
    let hub = lhs.gspider();
    lhs.wire(i, hub);
    lhs.wire(hub, o);
    for k in 0..n {
        let bx = lhs.node(mk(alpha + Angle::rational(2 * k, n)));
        let dot = lhs.rspider();
        lhs.wire(hub, bx);
        lhs.wire(bx, dot);
    }

    // the upright right-hand side at base angle `base`
    let base = if boxes_flipped {
        // flipped branches carry the multiset {-alpha - 2k pi/n}
        -alpha - Angle::rational(2 * (n - 1), n)
    } else {
        alpha
    };

    let mut rhs = GraphBuilder::new(Calculus::Y);
    let i = rhs.input();
    let o = rhs.output();
    let hub = rhs.gspider();
    rhs.wire(i, hub);
    rhs.wire(hub, o);
    let gamma = base.scale(n);
    match n.rem_euclid(4) {
        1 | 3 => {
            // a single red-terminated box branch at +-(n alpha + (n-1) pi)
            let beta = gamma + Angle::rational(n - 1, 1);
            let beta = if n.rem_euclid(4) == 1 { beta } else { -beta };
            let bx = rhs.ybox(beta);
            let dot = rhs.rspider();
            rhs.wire(hub, bx);
            rhs.wire(bx, dot);
        }
        2 => {
            // the pi branch (green dot behind a pi box): diag(1, -1)
            let bx = rhs.ybox(Angle::pi());
            let dot = rhs.gspider();
            rhs.wire(hub, bx);
            rhs.wire(bx, dot);
        }
        _ => {
            // the bare green dot branch: (1, 1)
            let dot = rhs.gspider();
            rhs.wire(hub, dot);
        }
    }
    let mut rhs = rhs.finish();
    match n.rem_euclid(4) {
        1 | 3 => {
            for _ in 0..(n - 1) {
                append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            }
        }
        2 => {
            append_scalar(&mut rhs, ScalarGadget::ChainGG(gamma + Angle::pi()));
            for _ in 0..n {
                append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            }
        }
        _ => {
            append_scalar(&mut rhs, ScalarGadget::ChainGG(gamma - Angle::pi()));
            for _ in 0..n {
                append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            }
        }
    }
    Ok((lhs.finish(), rhs))
}

/// (HL) A Hadamard self-loop adds pi to the spider and costs 1/sqrt2.
fn h_loop(c: Calculus, b: &Binding) -> Sides {
    let phase = b.angles[0];
    let mut lhs = GraphBuilder::new(c);
    let i = lhs.input();
    let o = lhs.output();
    let s = lhs.node(spider(true, phase));
    let h = lhs.hbox();
    lhs.wire(i, s);
    lhs.wire(s, o);
    lhs.wire(s, h);
    lhs.wire(h, s);
    let mut rhs = GraphBuilder::new(c);
    let i = rhs.input();
    let o = rhs.output();
    let s = rhs.node(spider(true, (phase + Angle::pi()).reduced_mod_pi(2)));
    rhs.wire(i, s);
    rhs.wire(s, o);
    let mut rhs = rhs.finish();
    append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
    Ok((lhs.finish(), rhs))
}

/// (H) Hadamard boxes on every leg swap the spider colour.
fn h_conjugation(c: Calculus, b: &Binding) -> Sides {
    let phase = b.angles[0];
    let (n, m) = (b.nums[0], b.nums[1]);
    let mut lhs = GraphBuilder::new(c);
    let s = lhs.node(spider(true, phase));
    for _ in 0..n {
        let i = lhs.input();
        let h = lhs.hbox();
        lhs.wire(i, h);
        lhs.wire(h, s);
    }
    for _ in 0..m {
        let o = lhs.output();
        let h = lhs.hbox();
        lhs.wire(s, h);
        lhs.wire(h, o);
    }
    let mut rhs = GraphBuilder::new(c);
    let s = rhs.node(spider(false, phase));
    for _ in 0..n {
        let i = rhs.input();
        rhs.wire(i, s);
    }
    for _ in 0..m {
        let o = rhs.output();
        rhs.wire(s, o);
    }
    Ok((lhs.finish(), rhs.finish()))
}

/// (ZO) The 0-ary pi dot is the zero scalar and absorbs closed diagrams.
fn zx_zero_absorb(c: Calculus, b: &Binding) -> Sides {
    let pick = b.nums[0];
    let mut lhs = Diagram::empty(c);
    lhs.add_node(NodeKind::ZSpider(Angle::pi()));
    append_scalar(&mut lhs, pick_scalar(pick.min(2), Angle::zero()));
    let mut rhs = Diagram::empty(c);
    rhs.add_node(NodeKind::ZSpider(Angle::pi()));
    Ok((lhs, rhs))
}

/// (E) The pi/4 bicolor scalar pair is the empty diagram.
fn empty_pi4() -> Sides {
    let mut lhs = GraphBuilder::new(Calculus::Zx);
    let g = lhs.gspider_phase(Angle::pi_over(4));
    let r = lhs.rspider_phase(Angle::rational(-1, 4));
    lhs.wire(g, r);
    Ok((lhs.finish(), Diagram::empty(Calculus::Zx)))
}

/// (EU) The Hadamard box Euler-decomposes into three pi/2 spiders with a
/// global phase of -pi/4.
fn euler() -> Sides {
    let lhs = crate::diagram::generator_in(Calculus::Zx, NodeKind::HBox, 1, 1)?;
    let mut rhs = GraphBuilder::new(Calculus::Zx);
    let i = rhs.input();
    let o = rhs.output();
    let z1 = rhs.gspider_phase(Angle::pi_over(2));
    let x = rhs.rspider_phase(Angle::pi_over(2));
    let z2 = rhs.gspider_phase(Angle::pi_over(2));
    rhs.chain(&[i, z1, x, z2, o]);
    let mut rhs = rhs.finish();
    append_zx_phase(&mut rhs, Angle::rational(-1, 4));
    Ok((lhs, rhs))
}

/// (K2) The pi X commutes through a phased Z spider, negating the phase
/// and emitting the global phase e^(i alpha).
fn pi_commutation(b: &Binding) -> Sides {
    let alpha = b.angles[0];
    let mut lhs = GraphBuilder::new(Calculus::Zx);
    let i = lhs.input();
    let o = lhs.output();
    let z = lhs.gspider_phase(alpha);
    let x = lhs.rspider_phase(Angle::pi());
    lhs.chain(&[i, z, x, o]);
    let mut rhs = GraphBuilder::new(Calculus::Zx);
    let i = rhs.input();
    let o = rhs.output();
    let x = rhs.rspider_phase(Angle::pi());
    let z = rhs.gspider_phase(-alpha);
    rhs.chain(&[i, x, z, o]);
    let mut rhs = rhs.finish();
    append_zx_phase(&mut rhs, alpha);
    Ok((lhs.finish(), rhs))
}

/// (SUP_n) Cyclotomic supplementarity: n single-wired dots at angles
/// alpha + 2k pi/n merge into one dot at n alpha + (n-1) pi connected by n
/// parallel wires. Exact, no scalar.
fn zx_supplementarity(n: u32, b: &Binding) -> Sides {
    let n = n as i64;
    let alpha = b.angles[0];
    let mut lhs = GraphBuilder::new(Calculus::Zx);
    let i = lhs.input();
    let o = lhs.output();
    let hub = lhs.gspider();
    lhs.wire(i, hub);
    lhs.wire(hub, o);
    for k in 0..n {
        let dot = lhs.gspider_phase(alpha + Angle::rational(2 * k, n));
        lhs.wire(hub, dot);
    }
    let mut rhs = GraphBuilder::new(Calculus::Zx);
    let i = rhs.input();
    let o = rhs.output();
    let hub = rhs.gspider();
    rhs.wire(i, hub);
    rhs.wire(hub, o);
    let dot = rhs.gspider_phase(alpha.scale(n) + Angle::rational(n - 1, 1));
    for _ in 0..n {
        rhs.wire(hub, dot);
    }
    Ok((lhs.finish(), rhs.finish()))
}

fn build_lemma(c: Calculus, l: Lemma, b: &Binding) -> Sides {
    use Lemma::*;
    match l {
        BoxZero => {
            let lhs =
                crate::diagram::generator_in(Calculus::Y, NodeKind::ybox(Angle::zero()), 1, 1)?;
            Ok((lhs, Diagram::identity(Calculus::Y, 1)))
        }
        TwoScalars => {
            let mut lhs = Diagram::empty(Calculus::Y);
            append_scalar(&mut lhs, ScalarGadget::Two);
            let mut rhs = Diagram::empty(Calculus::Y);
            append_scalar(&mut rhs, ScalarGadget::Sqrt2);
            append_scalar(&mut rhs, ScalarGadget::Sqrt2);
            Ok((lhs, rhs))
        }
        Hopf => hopf(c),
        GenBialgebra => gen_bialgebra(Calculus::Y, b.nums[0], b.nums[1]),
        UdBox => {
            let alpha = b.angles[0];
            let lhs =
                crate::diagram::generator_in(Calculus::Y, NodeKind::ybox_flipped(alpha), 1, 1)?;
            let rhs = crate::diagram::generator_in(Calculus::Y, NodeKind::ybox(-alpha), 1, 1)?;
            Ok((lhs, rhs))
        }
        BoxFusionUpright => box_fusion(b, false),
        PiCommute => {
            let lhs = wire_chain(&[NodeKind::PiDotG, NodeKind::PiDotR]);
            let mut rhs = wire_chain(&[NodeKind::PiDotR, NodeKind::PiDotG]);
            crate::notation::append_minus_one(&mut rhs);
            Ok((lhs, rhs))
        }
        PiExclusion => {
            let lhs = wire_chain(&[NodeKind::PiDotG]);
            let rhs = wire_chain(&[
                NodeKind::ybox(Angle::pi_over(2)),
                NodeKind::PiDotR,
                NodeKind::ybox(Angle::rational(-1, 2)),
            ]);
            Ok((lhs, rhs))
        }
        PiCrossing => {
            let alpha = b.angles[0];
            let lhs = wire_chain(&[NodeKind::ybox(alpha), NodeKind::PiDotG]);
            let rhs = wire_chain(&[NodeKind::PiDotG, NodeKind::ybox(-alpha)]);
            Ok((lhs, rhs))
        }
        RedStatePi => {
            let mut lhs = GraphBuilder::new(Calculus::Y);
            let o = lhs.output();
            let r = lhs.rspider();
            let p = lhs.node(NodeKind::PiDotG);
            lhs.wire(r, p);
            lhs.wire(p, o);
            let mut rhs = GraphBuilder::new(Calculus::Y);
            let o = rhs.output();
            let r = rhs.rspider();
            rhs.wire(r, o);
            Ok((lhs.finish(), rhs.finish()))
        }
        PiInvolution => {
            let lhs = wire_chain(&[NodeKind::PiDotG, NodeKind::PiDotG]);
            Ok((lhs, Diagram::identity(Calculus::Y, 1)))
        }
        Exclusion => exclusion(b.angles[0], true),
        Pi2Loop => {
            let mut lhs = GraphBuilder::new(Calculus::Y);
            let i = lhs.input();
            let o = lhs.output();
            let s = lhs.gspider();
            let bx = lhs.ybox(Angle::pi_over(2));
            lhs.wire(i, s);
            lhs.wire(s, o);
            lhs.wire(s, bx);
            lhs.wire(bx, s);
            let mut rhs = Diagram::identity(Calculus::Y, 1);
            append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            Ok((lhs.finish(), rhs))
        }
        Exclusion2 => exclusion(b.angles[0], false),
        TwoPiBox => {
            let lhs = crate::diagram::generator_in(
                Calculus::Y,
                NodeKind::ybox(Angle::rational(2, 1)),
                1,
                1,
            )?;
            let mut rhs = Diagram::identity(Calculus::Y, 1);
            crate::notation::append_minus_one(&mut rhs);
            Ok((lhs, rhs))
        }
        MinusOneSquared => {
            let mut lhs = Diagram::empty(Calculus::Y);
            crate::notation::append_minus_one(&mut lhs);
            crate::notation::append_minus_one(&mut lhs);
            Ok((lhs, Diagram::empty(Calculus::Y)))
        }
        SupFlipped(n) => supplementarity(n, b, true),
        PiDistribution => {
            let mut lhs = GraphBuilder::new(Calculus::Y);
            let i = lhs.input();
            let o0 = lhs.output();
            let o1 = lhs.output();
            let p = lhs.node(NodeKind::PiDotR);
            let s = lhs.gspider();
            lhs.wire(i, p);
            lhs.wire(p, s);
            lhs.wire(s, o0);
            lhs.wire(s, o1);
            let mut rhs = GraphBuilder::new(Calculus::Y);
            let i = rhs.input();
            let o0 = rhs.output();
            let o1 = rhs.output();
            let s = rhs.gspider();
            let p0 = rhs.node(NodeKind::PiDotR);
            let p1 = rhs.node(NodeKind::PiDotR);
            rhs.wire(i, s);
            rhs.wire(s, p0);
            rhs.wire(p0, o0);
            rhs.wire(s, p1);
            rhs.wire(p1, o1);
            Ok((lhs.finish(), rhs.finish()))
        }
        ExclusionHada => {
            let beta = b.angles[0];
            let mut lhs = GraphBuilder::new(Calculus::Y);
            let i = lhs.input();
            let o = lhs.output();
            let g = lhs.gspider();
            let r = lhs.rspider();
            let h = lhs.hbox();
            let bx = lhs.ybox(beta);
            lhs.wire(i, g);
            lhs.wire(g, h);
            lhs.wire(h, r);
            lhs.wire(g, bx);
            lhs.wire(bx, r);
            lhs.wire(r, o);
            let mut rhs = GraphBuilder::new(Calculus::Y);
            let i = rhs.input();
            let o = rhs.output();
            let bx = rhs.ybox(Angle::pi_over(2));
            rhs.chain(&[i, bx, o]);
            let mut rhs = rhs.finish();
            append_scalar(&mut rhs, ScalarGadget::ChainGG(Angle::pi_over(2) - beta));
            append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            Ok((lhs.finish(), rhs))
        }
        PiBoxDecomp => {
            let lhs = crate::diagram::generator_in(Calculus::Y, NodeKind::ybox(Angle::pi()), 1, 1)?;
            let rhs = wire_chain(&[NodeKind::PiDotG, NodeKind::PiDotR]);
            Ok((lhs, rhs))
        }
        Rs2Rewritten => {
            let beta = b.angles[0];
            let mut lhs = GraphBuilder::new(Calculus::Y);
            let i = lhs.input();
            let o = lhs.output();
            let g1 = lhs.gspider();
            let g2 = lhs.gspider();
            let h1 = lhs.hbox();
            let bx = lhs.ybox(beta);
            let h2 = lhs.hbox();
            lhs.wire(i, g1);
            lhs.wire(g1, h1);
            lhs.wire(h1, bx);
            lhs.wire(bx, h2);
            lhs.wire(h2, g2);
            lhs.wire(g1, g2);
            lhs.wire(g2, o);
            let mut rhs = Diagram::identity(Calculus::Y, 1);
            append_scalar(&mut rhs, ScalarGadget::ChainGG(beta));
            append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
            Ok((lhs.finish(), rhs))
        }
        HadaInvolution => {
            let lhs = wire_chain(&[NodeKind::HBox, NodeKind::HBox]);
            Ok((lhs, Diagram::identity(Calculus::Y, 1)))
        }
        ZxMultGlobPhases => {
            let (a, bb) = (b.angles[0], b.angles[1]);
            let mut lhs = Diagram::empty(Calculus::Zx);
            append_zx_phase(&mut lhs, a);
            append_zx_phase(&mut lhs, bb);
            let mut rhs = Diagram::empty(Calculus::Zx);
            append_zx_phase(&mut rhs, a + bb);
            Ok((lhs, rhs))
        }
        ZxInverseEuScalar => {
            let mut lhs = Diagram::empty(Calculus::Zx);
            append_zx_phase(&mut lhs, Angle::rational(-1, 4));
            append_zx_phase(&mut lhs, Angle::pi_over(4));
            Ok((lhs, Diagram::empty(Calculus::Zx)))
        }
        ZxBicolorAlpha0 => {
            let alpha = b.angles[0];
            let mut lhs = GraphBuilder::new(Calculus::Zx);
            let g = lhs.gspider_phase(alpha);
            let r = lhs.rspider();
            lhs.wire(g, r);
            let mut rhs = GraphBuilder::new(Calculus::Zx);
            let g = rhs.gspider();
            let r = rhs.rspider();
            rhs.wire(g, r);
            Ok((lhs.finish(), rhs.finish()))
        }
        ZxHopf => hopf(Calculus::Zx),
        ZxK1 => {
            let alpha = b.angles[0];
            let mut lhs = GraphBuilder::new(Calculus::Zx);
            let i = lhs.input();
            let o0 = lhs.output();
            let o1 = lhs.output();
            let x = lhs.rspider_phase(Angle::pi());
            let s = lhs.gspider_phase(alpha);
            lhs.wire(i, x);
            lhs.wire(x, s);
            lhs.wire(s, o0);
            lhs.wire(s, o1);
            let mut rhs = GraphBuilder::new(Calculus::Zx);
            let i = rhs.input();
            let o0 = rhs.output();
            let o1 = rhs.output();
            let s = rhs.gspider_phase(-alpha);
            let x0 = rhs.rspider_phase(Angle::pi());
            let x1 = rhs.rspider_phase(Angle::pi());
            rhs.wire(i, s);
            rhs.wire(s, x0);
            rhs.wire(x0, o0);
            rhs.wire(s, x1);
            rhs.wire(x1, o1);
            let mut rhs = rhs.finish();
            append_zx_phase(&mut rhs, alpha);
            Ok((lhs.finish(), rhs))
        }
        ZxrK2Pi => {
            let mut lhs = GraphBuilder::new(Calculus::ZxReal);
            let i = lhs.input();
            let o = lhs.output();
            let z = lhs.gspider_phase(Angle::pi());
            let x = lhs.rspider_phase(Angle::pi());
            lhs.chain(&[i, z, x, o]);
            let mut rhs = GraphBuilder::new(Calculus::ZxReal);
            let i = rhs.input();
            let o = rhs.output();
            let x = rhs.rspider_phase(Angle::pi());
            let z = rhs.gspider_phase(Angle::pi());
            rhs.chain(&[i, x, z, o]);
            let mut rhs = rhs.finish();
            append_zx_phase(&mut rhs, Angle::pi());
            Ok((lhs.finish(), rhs))
        }
        ZxrZeroAbsorb => zx_zero_absorb(Calculus::ZxReal, b),
    }
}

/// A 1 -> 1 chain of degree-2 nodes, first element applied first.
fn wire_chain(kinds: &[NodeKind]) -> Diagram {
    let mut g = GraphBuilder::new(Calculus::Y);
    let i = g.input();
    let o = g.output();
    let nodes: Vec<NodeId> = kinds.iter().map(|k| g.node(*k)).collect();
    let mut chain = vec![i];
    chain.extend(&nodes);
    chain.push(o);
    g.chain(&chain);
    g.finish()
}

/// The Hopf law: a double edge between opposite-colour spiders
/// disconnects; the lone dot scalar balances the books on the left.
fn hopf(c: Calculus) -> Sides {
    let mut lhs = GraphBuilder::new(c);
    let i = lhs.input();
    let o = lhs.output();
    let g = lhs.gspider();
    let r = lhs.rspider();
    lhs.wire(i, g);
    lhs.wire(g, r);
    lhs.wire(g, r);
    lhs.wire(r, o);
    let mut lhs = lhs.finish();
    append_scalar(&mut lhs, ScalarGadget::Two);
    let mut rhs = GraphBuilder::new(c);
    let i = rhs.input();
    let o = rhs.output();
    let g = rhs.gspider();
    let r = rhs.rspider();
    rhs.wire(i, g);
    rhs.wire(r, o);
    Ok((lhs, rhs.finish()))
}

/// The exclusion lemmas: a box separates onto a bubble branch. The bubble
/// holds an upside-down pi/2 box against box(beta), with a pi/2 box on
/// the main wire (after the bubble in the first form, before it in the
/// second),
/// is a bare wire times the cos(beta/2 + pi/4) chain.
fn exclusion(beta: Angle, box_after: bool) -> Sides {
    let mut lhs = GraphBuilder::new(Calculus::Y);
    let i = lhs.input();
    let o = lhs.output();
    let g = lhs.gspider();
    let r = lhs.rspider();
    let arrow = lhs.ybox_flipped(Angle::pi_over(2));
    let bx = lhs.ybox(beta);
    let post = lhs.ybox(Angle::pi_over(2));
    if box_after {
        lhs.wire(i, g);
        lhs.wire(r, post);
        lhs.wire(post, o);
    } else {
        lhs.wire(i, post);
        lhs.wire(post, g);
        lhs.wire(r, o);
    }
    lhs.wire(g, arrow);
    lhs.wire(arrow, r);
    lhs.wire(g, bx);
    lhs.wire(bx, r);
    let mut rhs = Diagram::identity(Calculus::Y, 1);
    append_scalar(&mut rhs, ScalarGadget::ChainGR(beta));
    append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
    append_scalar(&mut rhs, ScalarGadget::InvSqrt2);
    Ok((lhs.finish(), rhs))
}
