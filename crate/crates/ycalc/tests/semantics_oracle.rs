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

//! Frozen generator matrices and independently computed expected values for
//! the standard interpretation. The brute-force oracles here are written
//! against the definitions, not against the evaluator.

use num::complex::Complex64;
use ycalc::angle::Angle;
use ycalc::diagram::{generator_in, Calculus, Diagram, GraphBuilder, NodeKind};
use ycalc::notation::{expand_hnode, graph_state, SimpleGraph};
use ycalc::semantics::{
    contract_plan, interpret, interpret_exact, interpret_with_plan, EvalOptions,
};
use ycalc::tensor::TensorF;

const SQ2: f64 = std::f64::consts::SQRT_2;

fn assert_close(t: &TensorF, rows: &[&[f64]], tol: f64) {
    let want = TensorF::from_real_rows(t.outs(), t.ins(), rows);
    let d = t.max_diff(&want);
    assert!(d <= tol, "max deviation {d}\ngot:\n{t}\nwant:\n{want}");
}

#[test]
fn ybox_pi_matrix() {
    let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi()), 1, 1).unwrap();
    let t = interpret(&d).unwrap();
    assert_close(&t, &[&[0.0, -1.0], &[1.0, 0.0]], 1e-12);
}

#[test]
fn ybox_general_rotation() {
    for a in [0.3, 1.2, -2.5] {
        let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(a)), 1, 1).unwrap();
        let t = interpret(&d).unwrap();
        let (c, s) = ((a / 2.0).cos(), (a / 2.0).sin());
        assert_close(&t, &[&[c, -s], &[s, c]], 1e-12);
    }
}

#[test]
fn phaseless_dots_and_states() {
    // lone green dot evaluates to (2)
    let dot = generator_in(Calculus::Y, NodeKind::zspider0(), 0, 0).unwrap();
    assert_close(&interpret(&dot).unwrap(), &[&[2.0]], 1e-12);

    // lone red dot also evaluates to (2)
    let rdot = generator_in(Calculus::Y, NodeKind::xspider0(), 0, 0).unwrap();
    assert_close(&interpret(&rdot).unwrap(), &[&[2.0]], 1e-12);

    // green state (1,1); red state sqrt2 (1,0)
    let gs = generator_in(Calculus::Y, NodeKind::zspider0(), 0, 1).unwrap();
    assert_close(&interpret(&gs).unwrap(), &[&[1.0], &[1.0]], 1e-12);
    let rs = generator_in(Calculus::Y, NodeKind::xspider0(), 0, 1).unwrap();
    assert_close(&interpret(&rs).unwrap(), &[&[SQ2], &[0.0]], 1e-12);
}

#[test]
fn red_copy_matrix() {
    let d = generator_in(Calculus::Y, NodeKind::xspider0(), 2, 1).unwrap();
    let t = interpret(&d).unwrap();
    let h = 1.0 / SQ2;
    assert_close(&t, &[&[h, 0.0, 0.0, h], &[0.0, h, h, 0.0]], 1e-12);
}

#[test]
fn wiring_generators() {
    let id = Diagram::identity(Calculus::Y, 1);
    assert_close(&interpret(&id).unwrap(), &[&[1.0, 0.0], &[0.0, 1.0]], 1e-12);

    let sw = Diagram::swap(Calculus::Y);
    assert_close(
        &interpret(&sw).unwrap(),
        &[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
        ],
        1e-12,
    );

    let cup = Diagram::cup(Calculus::Y);
    assert_close(&interpret(&cup).unwrap(), &[&[1.0, 0.0, 0.0, 1.0]], 1e-12);

    let cap = Diagram::cap(Calculus::Y);
    assert_close(
        &interpret(&cap).unwrap(),
        &[&[1.0], &[0.0], &[0.0], &[1.0]],
        1e-12,
    );

    let empty = Diagram::empty(Calculus::Y);
    assert_close(&interpret(&empty).unwrap(), &[&[1.0]], 1e-12);
}

#[test]
fn snake_is_identity() {
    // (id (x) cup) o (cap (x) id), both bends
    let id = Diagram::identity(Calculus::Y, 1);
    let top = Diagram::cap(Calculus::Y).tensor(&id).unwrap();
    let bot = id.tensor(&Diagram::cup(Calculus::Y)).unwrap();
    let snake = Diagram::compose(&bot, &top).unwrap();
    assert_close(
        &interpret(&snake).unwrap(),
        &[&[1.0, 0.0], &[0.0, 1.0]],
        1e-12,
    );

    let top2 = id.tensor(&Diagram::cap(Calculus::Y)).unwrap();
    let bot2 = Diagram::cup(Calculus::Y).tensor(&id).unwrap();
    let snake2 = Diagram::compose(&bot2, &top2).unwrap();
    assert_close(
        &interpret(&snake2).unwrap(),
        &[&[1.0, 0.0], &[0.0, 1.0]],
        1e-12,
    );
}

#[test]
fn bending_every_generator() {
    // bending a wire of a generator and bending it back is the identity
    for kind in [
        NodeKind::zspider0(),
        NodeKind::xspider0(),
        NodeKind::ybox(Angle::pi_over(3)),
    ] {
        let g = generator_in(Calculus::Y, kind, 1, 1).unwrap();
        let id = Diagram::identity(Calculus::Y, 1);
        // bend the input up: g' : 0 -> 2 = (g (x) id) o cap
        let bent = Diagram::compose(&g.tensor(&id).unwrap(), &Diagram::cap(Calculus::Y)).unwrap();
        // bend it back down: (id (x) cup) o (bent (x) id)
        let back = Diagram::compose(
            &id.tensor(&Diagram::cup(Calculus::Y)).unwrap(),
            &bent.tensor(&id).unwrap(),
        )
        .unwrap();
        let a = interpret(&g).unwrap();
        let b = interpret(&back).unwrap();
        assert!(a.max_diff(&b) < 1e-12, "bend roundtrip for {kind:?}");
    }
}

#[test]
fn tensor_of_states() {
    // green state (x) red state = (1,1)^T (x) sqrt2 (1,0)^T
    let gs = generator_in(Calculus::Y, NodeKind::zspider0(), 0, 1).unwrap();
    let rs = generator_in(Calculus::Y, NodeKind::xspider0(), 0, 1).unwrap();
    let t = interpret(&gs.tensor(&rs).unwrap()).unwrap();
    assert_close(&t, &[&[SQ2], &[0.0], &[SQ2], &[0.0]], 1e-12);
}

#[test]
fn compose_boxes_adds_angles() {
    let a = Angle::free(0.7);
    let b = Angle::free(1.1);
    let da = generator_in(Calculus::Y, NodeKind::ybox(a), 1, 1).unwrap();
    let db = generator_in(Calculus::Y, NodeKind::ybox(b), 1, 1).unwrap();
    let dc = Diagram::compose(&da, &db).unwrap();
    let dsum = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(1.8)), 1, 1).unwrap();
    assert!(interpret(&dc).unwrap().max_diff(&interpret(&dsum).unwrap()) < 1e-12);
}

#[test]
fn flip_is_transpose_and_colour_swap_is_h_conjugation() {
    let mut g = GraphBuilder::new(Calculus::Y);
    let i = g.input();
    let o1 = g.output();
    let o2 = g.output();
    let s = g.gspider();
    let bx = g.ybox(Angle::free(0.9));
    g.wire(i, s);
    g.wire(s, bx);
    g.wire(bx, o1);
    g.wire(s, o2);
    let d = g.finish();

    let t = interpret(&d).unwrap();
    let tf = interpret(&d.flip_vertical()).unwrap();
    assert!(t.transpose().max_diff(&tf) < 1e-12);

    // colour swap = conjugating every boundary wire by H
    let h = TensorF::from_real_rows(1, 1, &[&[1.0 / SQ2, 1.0 / SQ2], &[1.0 / SQ2, -1.0 / SQ2]]);
    let hs = h.kron(&h);
    let want = hs.matmul(&t).matmul(&h);
    let got = interpret(&d.colour_swap()).unwrap();
    assert!(want.max_diff(&got) < 1e-12);
}

#[test]
fn four_pi_periodicity() {
    for k in 0..25 {
        let a = -6.0 + k as f64; // sweep of free angles
        let d1 = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(a)), 1, 1).unwrap();
        let d2 = generator_in(
            Calculus::Y,
            NodeKind::ybox(Angle::free(a + 4.0 * std::f64::consts::PI)),
            1,
            1,
        )
        .unwrap();
        let diff = interpret(&d1).unwrap().max_diff(&interpret(&d2).unwrap());
        assert!(diff < 1e-12, "4pi periodicity at {a}: {diff}");
    }
}

#[test]
fn zx_phased_spiders() {
    let d = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi()), 1, 1).unwrap();
    assert_close(&interpret(&d).unwrap(), &[&[1.0, 0.0], &[0.0, -1.0]], 1e-12);

    let d = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi_over(2)), 1, 1).unwrap();
    let t = interpret(&d).unwrap();
    assert!((t.at(1, 1) - Complex64::new(0.0, 1.0)).norm() < 1e-12);

    // 0-ary dot with phase: 1 + e^{i a}
    let d = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi()), 0, 0).unwrap();
    assert_close(&interpret(&d).unwrap(), &[&[0.0]], 1e-12);

    let h = generator_in(Calculus::Zx, NodeKind::HBox, 1, 1).unwrap();
    assert_close(
        &interpret(&h).unwrap(),
        &[&[1.0 / SQ2, 1.0 / SQ2], &[1.0 / SQ2, -1.0 / SQ2]],
        1e-12,
    );
}

#[test]
fn exact_matches_float_on_pi2_fragment() {
    let mut g = GraphBuilder::new(Calculus::Y);
    let i = g.input();
    let o = g.output();
    let s = g.gspider();
    let b1 = g.ybox(Angle::pi_over(2));
    let b2 = g.ybox_flipped(Angle::rational(3, 2));
    let r = g.rspider();
    g.wire(i, b1);
    g.wire(b1, s);
    g.wire(s, b2);
    g.wire(b2, r);
    g.wire(s, r);
    g.wire(r, o);
    let d = g.finish();
    let tf = interpret(&d).unwrap();
    let te = interpret_exact(&d).unwrap();
    assert!(tf.max_diff(&te.to_float()) < 1e-12);

    // outside the fragment the exact backend refuses
    let bad = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(4)), 1, 1).unwrap();
    assert!(interpret_exact(&bad).is_err());
}

/// Brute-force graph-state amplitudes: (1/sqrt2)^|E| * (-1)^{edges on}.
fn graph_state_oracle(g: &SimpleGraph) -> Vec<f64> {
    let n = g.vertices;
    let scale = (1.0 / SQ2).powi(g.edges.len() as i32);
    (0..(1usize << n))
        .map(|bits| {
            let mut sign = 1.0;
            for (u, v) in &g.edges {
                // most significant bit = leftmost wire = vertex 0
                let bu = (bits >> (n - 1 - u)) & 1;
                let bv = (bits >> (n - 1 - v)) & 1;
                if bu == 1 && bv == 1 {
                    sign = -sign;
                }
            }
            scale * sign
        })
        .collect()
}

#[test]
fn graph_states_match_oracle() {
    let cases = [
        SimpleGraph::new(1, &[]),
        SimpleGraph::new(2, &[(0, 1)]),
        SimpleGraph::new(3, &[(0, 1), (1, 2)]),
        SimpleGraph::complete(3),
        SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ];
    for g in &cases {
        let d = graph_state(g);
        let t = interpret(&d).unwrap();
        let want = graph_state_oracle(g);
        for (i, w) in want.iter().enumerate() {
            let got = t.at(i, 0);
            assert!(
                (got.re - w).abs() < 1e-12 && got.im.abs() < 1e-12,
                "graph state {:?} amplitude {i}: got {got}, want {w}",
                g.edges
            );
        }
    }
}

#[test]
fn hnode_tensors_and_expansion() {
    // HNode(2) is the Hadamard box
    let h2 = generator_in(Calculus::Y, NodeKind::HNode(2), 1, 1).unwrap();
    assert_close(
        &interpret(&h2).unwrap(),
        &[&[1.0 / SQ2, 1.0 / SQ2], &[1.0 / SQ2, -1.0 / SQ2]],
        1e-12,
    );
    let expanded = expand_hnode(&h2).unwrap();
    assert!(
        interpret(&expanded)
            .unwrap()
            .max_diff(&interpret(&h2).unwrap())
            < 1e-12
    );

    // HNode(n) agrees with its expansion for n = 3, 4
    for n in [3usize, 4] {
        let d = generator_in(Calculus::Y, NodeKind::HNode(n), 0, n).unwrap();
        let e = expand_hnode(&d).unwrap();
        let td = interpret(&d).unwrap();
        let te = interpret(&e).unwrap();
        assert!(td.max_diff(&te) < 1e-12, "HNode({n}) expansion");
    }

    // HNode(3) against the complete-graph-state formula with the declared
    // sqrt2 multiplicity
    let k3 = generator_in(Calculus::Y, NodeKind::HNode(3), 0, 3).unwrap();
    let t = interpret(&k3).unwrap();
    let base = graph_state_oracle(&SimpleGraph::complete(3));
    for (i, b) in base.iter().enumerate() {
        let want = b * SQ2; // (3-2)(3-1)/2 = 1 sqrt2 scalar
        assert!((t.at(i, 0).re - want).abs() < 1e-12);
    }

    // expansion is a no-op on a primitive diagram
    let plain = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi()), 1, 1).unwrap();
    let same = expand_hnode(&plain).unwrap();
    assert_eq!(plain, same);
}

#[test]
fn hnode_leg_permutation_invariance() {
    // swapping legs of the Hadamard node leaves the semantics unchanged
    let d = generator_in(Calculus::Y, NodeKind::HNode(3), 1, 2).unwrap();
    let swapped = Diagram::compose(&Diagram::swap(Calculus::Y), &d).unwrap();
    let t1 = interpret(&d).unwrap();
    let t2 = interpret(&swapped).unwrap();
    // a permutation of output legs permutes rows; for the complete graph
    // state the tensor is symmetric, so nothing changes
    assert!(t1.max_diff(&t2) < 1e-12);
}

#[test]
fn pidot_tensors() {
    let g = generator_in(Calculus::Y, NodeKind::PiDotG, 1, 1).unwrap();
    assert_close(&interpret(&g).unwrap(), &[&[1.0, 0.0], &[0.0, -1.0]], 1e-12);
    let r = generator_in(Calculus::Y, NodeKind::PiDotR, 1, 1).unwrap();
    assert_close(&interpret(&r).unwrap(), &[&[0.0, 1.0], &[1.0, 0.0]], 1e-12);

    for k in [NodeKind::PiDotG, NodeKind::PiDotR, NodeKind::HBox] {
        let d = generator_in(Calculus::Y, k, 1, 1).unwrap();
        let e = expand_hnode(&d).unwrap();
        assert!(
            interpret(&d).unwrap().max_diff(&interpret(&e).unwrap()) < 1e-12,
            "{k:?} expansion"
        );
    }
}

#[test]
fn functoriality_spot_checks() {
    let a = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(0.4)), 1, 1).unwrap();
    let b = generator_in(Calculus::Y, NodeKind::zspider0(), 1, 2).unwrap();
    let ta = interpret(&a).unwrap();
    let tb = interpret(&b).unwrap();
    // spatial
    let t_tensor = interpret(&a.tensor(&b).unwrap()).unwrap();
    assert!(t_tensor.max_diff(&ta.kron(&tb)) < 1e-12);
    // sequential
    let t_comp = interpret(&Diagram::compose(&b, &a).unwrap()).unwrap();
    assert!(t_comp.max_diff(&tb.matmul(&ta)) < 1e-12);
}

#[test]
fn contraction_plans_agree_and_bound_rank() {
    // 10-box chain
    let mut g = GraphBuilder::new(Calculus::Y);
    let i = g.input();
    let o = g.output();
    let boxes: Vec<_> = (0..10)
        .map(|k| g.ybox(Angle::free(0.1 * (k as f64 + 1.0))))
        .collect();
    g.wire(i, boxes[0]);
    for w in boxes.windows(2) {
        g.wire(w[0], w[1]);
    }
    g.wire(boxes[9], o);
    let d = g.finish();

    let plan = contract_plan(&d);
    let opts = EvalOptions::default();
    let (t1, peak) = interpret_with_plan::<Complex64>(&d, &plan, &opts).unwrap();
    assert!(peak <= 3, "chain peak rank {peak}");

    // a deliberately bad plan must still give the same tensor
    let mut rev = plan.clone();
    rev.reverse();
    let (t2, _) = interpret_with_plan::<Complex64>(&d, &rev, &opts).unwrap();
    assert!(t1.max_diff(&t2) < 1e-12);
}

#[test]
fn wire_limit_guard() {
    let wide = Diagram::identity(Calculus::Y, 7); // 14 boundary wires
    assert!(interpret(&wide).is_err());
}
