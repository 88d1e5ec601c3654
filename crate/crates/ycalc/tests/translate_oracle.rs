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

//! Pinned expected values for the translation functors.

use ycalc::angle::Angle;
use ycalc::diagram::{generator_in, Calculus, Diagram, NodeKind};
use ycalc::semantics::interpret;
use ycalc::tensor::TensorF;
use ycalc::translate::{
    im_part, re_part, universal_embed, verify_image_table, y_to_zx, y_to_zxr, zx_to_y, zxr_to_y,
    ReImRoute,
};

const SQ2: f64 = std::f64::consts::SQRT_2;

#[test]
fn image_table_verifies() {
    verify_image_table().expect("contract table holds");
}

#[test]
fn y2zxr_preserves_box_semantics() {
    for k in 0..8i64 {
        let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::rational(k, 2)), 1, 1).unwrap();
        let t = y_to_zxr(&d).unwrap();
        assert_eq!(t.calculus(), Calculus::ZxReal);
        assert!(t.validate().is_empty());
        let dev = interpret(&d).unwrap().max_diff(&interpret(&t).unwrap());
        assert!(dev < 1e-12, "k={k}: {dev}");
    }
    // spiders map to themselves
    let s = generator_in(Calculus::Y, NodeKind::zspider0(), 2, 1).unwrap();
    let t = y_to_zxr(&s).unwrap();
    assert_eq!(t.num_interior_nodes(), 1);
    // out-of-fragment boxes are refused
    let bad = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(4)), 1, 1).unwrap();
    assert!(y_to_zxr(&bad).is_err());
}

#[test]
fn zxr2y_pinned_images() {
    let h = generator_in(Calculus::ZxReal, NodeKind::HBox, 1, 1).unwrap();
    let t = interpret(&zxr_to_y(&h).unwrap()).unwrap();
    let want = TensorF::from_real_rows(1, 1, &[&[1.0 / SQ2, 1.0 / SQ2], &[1.0 / SQ2, -1.0 / SQ2]]);
    assert!(t.max_diff(&want) < 1e-12);

    let zpi = generator_in(Calculus::ZxReal, NodeKind::ZSpider(Angle::pi()), 1, 1).unwrap();
    let t = interpret(&zxr_to_y(&zpi).unwrap()).unwrap();
    assert!(t.max_diff(&TensorF::from_real_rows(1, 1, &[&[1.0, 0.0], &[0.0, -1.0]])) < 1e-12);

    // non-stabiliser phases are refused (the diagram itself is not ZX_r)
    let mut bad = Diagram::empty(Calculus::ZxReal);
    bad.add_node(NodeKind::ZSpider(Angle::pi_over(2)));
    assert!(zxr_to_y(&bad).is_err());
}

#[test]
fn roundtrip_preserves_semantics() {
    // zxr_to_y(y_to_zxr(D)) has the semantics of D
    let mut b = ycalc::diagram::GraphBuilder::new(Calculus::Y);
    let i = b.input();
    let o1 = b.output();
    let o2 = b.output();
    let s = b.gspider();
    let bx = b.ybox(Angle::rational(3, 2));
    let r = b.rspider();
    b.wire(i, bx);
    b.wire(bx, s);
    b.wire(s, r);
    b.wire(s, o1);
    b.wire(r, o2);
    let d = b.finish();
    let there = y_to_zxr(&d).unwrap();
    let back = zxr_to_y(&there).unwrap();
    let dev = interpret(&d).unwrap().max_diff(&interpret(&back).unwrap());
    assert!(dev < 1e-12, "round trip deviation {dev}");
}

#[test]
fn y2zx_box_matrix_at_sample_angles() {
    for a in [std::f64::consts::FRAC_PI_3, 1.0, 2.5] {
        let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(a)), 1, 1).unwrap();
        let img = y_to_zx(&d).unwrap();
        assert_eq!(img.calculus(), Calculus::Zx);
        let t = interpret(&img).unwrap();
        let (c, s) = ((a / 2.0).cos(), (a / 2.0).sin());
        let want = TensorF::from_real_rows(1, 1, &[&[c, -s], &[s, c]]);
        assert!(t.max_diff(&want) < 1e-12, "alpha = {a}");
        assert!(t.is_real(1e-12), "the image evaluates real");
    }
    // spider-only diagrams map to themselves
    let s = generator_in(Calculus::Y, NodeKind::xspider0(), 1, 2).unwrap();
    let img = y_to_zx(&s).unwrap();
    assert_eq!(img.num_interior_nodes(), 1);
}

#[test]
fn zx2y_block_form_examples() {
    // H: control untouched; projecting the control to <0|..|0> yields H
    let h = generator_in(Calculus::Zx, NodeKind::HBox, 1, 1).unwrap();
    let cf = zx_to_y(&h).unwrap();
    assert_eq!(cf.diagram.num_inputs(), 2);
    assert_eq!(cf.diagram.num_outputs(), 2);
    let (a, b) = cf.block_parts().unwrap();
    let want_h =
        TensorF::from_real_rows(1, 1, &[&[1.0 / SQ2, 1.0 / SQ2], &[1.0 / SQ2, -1.0 / SQ2]]);
    assert!(a.max_diff(&want_h) < 1e-12);
    assert!(b.max_abs() < 1e-12);

    // green pi/2 spider: A = diag(1,0), B = diag(0,1)
    let z = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi_over(2)), 1, 1).unwrap();
    let cf = zx_to_y(&z).unwrap();
    let (a, b) = cf.block_parts().unwrap();
    assert!(a.max_diff(&TensorF::from_real_rows(1, 1, &[&[1.0, 0.0], &[0.0, 0.0]])) < 1e-12);
    assert!(b.max_diff(&TensorF::from_real_rows(1, 1, &[&[0.0, 0.0], &[0.0, 1.0]])) < 1e-12);

    // the block law against the source tensor
    let dev = cf.block_law_against(&interpret(&z).unwrap()).unwrap();
    assert!(dev < 1e-12, "block law deviation {dev}");

    // a nullary diagram yields a 1 -> 1 controlled scalar
    let dot = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi_over(2)), 0, 0).unwrap();
    let cf = zx_to_y(&dot).unwrap();
    assert_eq!(cf.diagram.num_inputs(), 1);
    assert_eq!(cf.diagram.num_outputs(), 1);
    let dev = cf.block_law_against(&interpret(&dot).unwrap()).unwrap();
    assert!(dev < 1e-12);
}

#[test]
fn tensor_unit_law_for_control() {
    // e (x) D and D (x) e translate with the same semantics as D
    let d = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::free(0.8)), 1, 1).unwrap();
    let e = Diagram::empty(Calculus::Zx);
    let lhs = e.tensor(&d).unwrap();
    let rhs = d.tensor(&e).unwrap();
    let td = interpret(&zx_to_y(&d).unwrap().diagram).unwrap();
    let tl = interpret(&zx_to_y(&lhs).unwrap().diagram).unwrap();
    let tr = interpret(&zx_to_y(&rhs).unwrap().diagram).unwrap();
    assert!(td.max_diff(&tl) < 1e-12);
    assert!(td.max_diff(&tr) < 1e-12);
}

#[test]
fn control_gadgets_commute() {
    // two generator gadgets on disjoint wires commute along the control
    let a = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::free(0.4)), 1, 1).unwrap();
    let b = generator_in(Calculus::Zx, NodeKind::XSpider(Angle::free(1.1)), 1, 1).unwrap();
    let ab = a.tensor(&b).unwrap();
    let ba = b.tensor(&a).unwrap();
    let t_ab = interpret(&zx_to_y(&ab).unwrap().diagram).unwrap();
    let t_ba = interpret(&zx_to_y(&ba).unwrap().diagram).unwrap();
    // ba differs from ab by the wire swap on both sides; undo it
    let sw = interpret(&Diagram::swap(Calculus::Y)).unwrap();
    let eye = TensorF::identity(1);
    let swc = sw.kron(&eye);
    let undone = swc.matmul(&t_ba).matmul(&swc);
    assert!(t_ab.max_diff(&undone) < 1e-12);
}

#[test]
fn re_im_parts_match_matrix_parts() {
    let z = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::pi_over(2)), 1, 1).unwrap();
    // Im diag(1, i) = diag(0, 1)
    let im = im_part(&z, ReImRoute::Direct).unwrap();
    let t = interpret(&im).unwrap();
    assert!(t.max_diff(&TensorF::from_real_rows(1, 1, &[&[0.0, 0.0], &[0.0, 1.0]])) < 1e-12);

    // a real-valued diagram has Re = itself, on both routes
    let h = generator_in(Calculus::Zx, NodeKind::HBox, 1, 1).unwrap();
    for route in [ReImRoute::Direct, ReImRoute::ViaZx] {
        let re = re_part(&h, route).unwrap();
        let dev = interpret(&re).unwrap().max_diff(&interpret(&h).unwrap());
        assert!(dev < 1e-11, "route {route:?}: {dev}");
    }
}

#[test]
fn universal_embed_small_matrices() {
    let eye = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
    let d = universal_embed(&eye).unwrap();
    let t = interpret(&d).unwrap();
    assert!(t.max_diff(&TensorF::identity(1)) < 1e-6);

    let rot = vec![vec![0.0, -1.0], vec![1.0, 0.0]];
    let d = universal_embed(&rot).unwrap();
    let t = interpret(&d).unwrap();
    let want = TensorF::from_real_rows(1, 1, &[&[0.0, -1.0], &[1.0, 0.0]]);
    assert!(t.max_diff(&want) < 1e-6);

    // non-square shape: 2 x 4
    let wide = vec![vec![0.5, -1.0, 2.0, 0.25], vec![1.5, 0.5, -0.75, 1.0]];
    let d = universal_embed(&wide).unwrap();
    let t = interpret(&d).unwrap();
    for (r, row) in wide.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            assert!((t.at(r, c).re - v).abs() < 1e-6, "entry {r},{c}");
        }
    }

    // bad shape is refused
    assert!(universal_embed(&[vec![1.0, 2.0, 3.0]]).is_err());
}
