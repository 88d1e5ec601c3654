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

//! Cross-module invariants: semantic equality decisions, the symmetry
//! operations against the two compositions, and model functoriality.

use num::complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ycalc::angle::Angle;
use ycalc::diagram::{generator_in, Calculus, Diagram, NodeKind};
use ycalc::random::{random_diagram, RandomCfg};
use ycalc::rules::rule_by_name;
use ycalc::semantics::{equal_semantics, interpret, re_im_split};
use ycalc::tensor::TensorF;

#[test]
fn equal_semantics_examples() {
    let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(2)), 1, 1).unwrap();
    assert!(equal_semantics(&d, &d, 1e-9).unwrap());

    // the Hopf law's two sides
    let hopf = rule_by_name("Y.L:hopf").unwrap();
    let (lhs, rhs) = hopf.build_sides(&ycalc::rules::Binding::none()).unwrap();
    assert!(equal_semantics(&lhs, &rhs, 1e-9).unwrap());

    // opposite quarter rotations differ
    let up = generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(2)), 1, 1).unwrap();
    let down = generator_in(Calculus::Y, NodeKind::ybox(-Angle::pi_over(2)), 1, 1).unwrap();
    assert!(!equal_semantics(&up, &down, 1e-9).unwrap());

    // arity mismatch is an error, not `false`
    let two = Diagram::identity(Calculus::Y, 2);
    let one = Diagram::identity(Calculus::Y, 1);
    assert!(equal_semantics(&two, &one, 1e-9).is_err());
}

#[test]
fn re_im_split_examples() {
    let t = TensorF::from_rows(
        1,
        1,
        &[
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            &[Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
        ],
    );
    let (re, im) = re_im_split(&t);
    assert!(re.max_diff(&TensorF::from_real_rows(1, 1, &[&[1., 0.], &[0., 0.]])) < 1e-15);
    assert!(im.max_diff(&TensorF::from_real_rows(1, 1, &[&[0., 0.], &[0., 1.]])) < 1e-15);

    // a real tensor splits into itself and zero
    let r = TensorF::from_real_rows(1, 1, &[&[0.25, -1.0], &[0.5, 2.0]]);
    let (re, im) = re_im_split(&r);
    assert!(re.max_diff(&r) < 1e-15);
    assert!(im.max_abs() < 1e-15);
}

#[test]
fn symmetries_commute_with_compositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let cfg = RandomCfg::new(Calculus::Y).wires(2).nodes(6);
    for _ in 0..40 {
        let a = random_diagram(&cfg, &mut rng);
        let b = random_diagram(&cfg, &mut rng);

        // colour_swap distributes over tensor
        let cs_tensor = a.tensor(&b).unwrap().colour_swap();
        let tensor_cs = a.colour_swap().tensor(&b.colour_swap()).unwrap();
        assert!(
            interpret(&cs_tensor)
                .unwrap()
                .max_diff(&interpret(&tensor_cs).unwrap())
                < 1e-12
        );

        // flip distributes over tensor
        let fl_tensor = a.tensor(&b).unwrap().flip_vertical();
        let tensor_fl = a.flip_vertical().tensor(&b.flip_vertical()).unwrap();
        assert!(
            interpret(&fl_tensor)
                .unwrap()
                .max_diff(&interpret(&tensor_fl).unwrap())
                < 1e-12
        );

        // flip reverses sequential composition (contravariance)
        if a.num_inputs() == b.num_outputs() {
            let comp = Diagram::compose(&a, &b).unwrap();
            let lhs = comp.flip_vertical();
            let rhs = Diagram::compose(&b.flip_vertical(), &a.flip_vertical()).unwrap();
            assert!(interpret(&lhs).unwrap().max_diff(&interpret(&rhs).unwrap()) < 1e-12);
        }
    }
}

#[test]
fn model_functoriality_on_100_composites() {
    let report = ycalc::verify::run_model_functoriality(100, 17);
    println!("{}", report.render());
    assert!(report.passed);
}

#[test]
fn translation_invariants_at_200_samples() {
    let report = ycalc::verify::run_translations_suite(200, 23);
    println!("{}", report.render());
    assert!(report.passed);
}

#[test]
fn on_demand_supplementarity_instances_are_sound() {
    for n in [4u32, 6, 11] {
        let rule = ycalc::rules::supplementarity_rule(Calculus::Y, n).unwrap();
        let r = ycalc::rules::check_soundness(&rule, 10, 5);
        assert!(r.pass, "{}", r.line());
        let zx = ycalc::rules::supplementarity_rule(Calculus::Zx, n).unwrap();
        let r = ycalc::rules::check_soundness(&zx, 10, 5);
        assert!(r.pass, "{}", r.line());
    }
}

#[test]
fn compose_with_identity_is_the_same_diagram_up_to_renaming() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cfg = RandomCfg::new(Calculus::Y).wires(2).nodes(6);
    for _ in 0..20 {
        let d = random_diagram(&cfg, &mut rng);
        let id = Diagram::identity(Calculus::Y, d.num_outputs());
        let composed = Diagram::compose(&id, &d).unwrap();
        assert_eq!(composed.num_interior_nodes(), d.num_interior_nodes());
        assert!(equal_semantics(&d, &composed, 1e-12).unwrap());
    }
}

#[test]
fn hundred_node_pi2_diagram_roundtrips() {
    use ycalc::angle::Fragment;
    use ycalc::translate::{y_to_zxr, zxr_to_y};
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let cfg = RandomCfg::new(Calculus::Y)
        .wires(2)
        .nodes(120)
        .fragment(Fragment::Pi2N(1));
    let d = std::iter::repeat_with(|| random_diagram(&cfg, &mut rng))
        .find(|d| d.num_interior_nodes() >= 100)
        .unwrap();
    let img = y_to_zxr(&d).unwrap();
    let back = zxr_to_y(&img).unwrap();
    let td = interpret(&d).unwrap();
    assert!(td.max_diff(&interpret(&img).unwrap()) < 1e-9);
    assert!(td.max_diff(&interpret(&back).unwrap()) < 1e-9);
}

#[test]
fn validate_reports_specific_violations() {
    use ycalc::diagram::End;
    // a boundary node with degree 2
    let mut d = Diagram::empty(Calculus::Y);
    let i = d.add_input();
    let s = d.add_node(NodeKind::zspider0());
    d.add_edge(End::new(i), End::new(s));
    d.add_edge(End::new(i), End::new(s));
    assert!(d.validate().iter().any(|v| v.message.contains("degree")));

    // a box with degree 3 cannot even be wired through legal ports
    let mut d = Diagram::empty(Calculus::Y);
    let b = d.add_node(NodeKind::ybox(Angle::pi()));
    let s = d.add_node(NodeKind::zspider0());
    d.add_edge(End::new(s), End::ported(b, 0));
    d.add_edge(End::new(s), End::ported(b, 1));
    d.add_edge(End::new(s), End::ported(b, 0));
    let v = d.validate();
    assert!(v.iter().any(|x| x.message.contains("degree") || x.message.contains("port")));
}

#[test]
fn expand_hnode_refuses_zx_diagrams() {
    let d = ycalc::diagram::generator_in(Calculus::Zx, NodeKind::HBox, 1, 1).unwrap();
    assert!(ycalc::notation::expand_hnode(&d).is_err());
}

#[test]
fn composition_error_paths() {
    use ycalc::error::DiagramError;
    let y = Diagram::identity(Calculus::Y, 1);
    let zx = Diagram::identity(Calculus::Zx, 1);
    assert!(matches!(
        y.tensor(&zx),
        Err(DiagramError::CalculusMismatch(_, _))
    ));
    let two = Diagram::identity(Calculus::Y, 2);
    assert!(matches!(
        Diagram::compose(&two, &y),
        Err(DiagramError::CompositionArity { .. })
    ));
}

#[test]
fn model_error_paths() {
    use ycalc::models::{bundle_model, interpret_model};
    // uncovered generator: the Hadamard box has no bundle image
    let h = ycalc::diagram::generator_in(Calculus::Y, NodeKind::HBox, 1, 1).unwrap();
    assert!(interpret_model(&h, &bundle_model(3)).is_err());
    // out-of-fragment angle
    let b = ycalc::diagram::generator_in(Calculus::Y, NodeKind::ybox(Angle::pi_over(4)), 1, 1)
        .unwrap();
    assert!(interpret_model(&b, &bundle_model(3)).is_err());
}

#[test]
fn standard_model_certifies_nothing() {
    use ycalc::models::{preservation_matrix, standard_model};
    let rules = ycalc::rules::rule_catalog(Calculus::Y);
    let report = preservation_matrix(&standard_model(), &rules, 6, 3);
    assert!(report.certified().is_empty());
    assert!(report
        .cells
        .iter()
        .all(|c| c.verdict == ycalc::models::Verdict::Preserved));
}

#[test]
fn hnode_invariant_under_leg_permutations() {
    // the generalized Hadamard node is symmetric in all of its legs
    let n = 4;
    let base = ycalc::diagram::generator_in(Calculus::Y, NodeKind::HNode(n), 0, n).unwrap();
    let t0 = interpret(&base).unwrap();
    let e0 = interpret(&ycalc::notation::expand_hnode(&base).unwrap()).unwrap();
    assert!(t0.max_diff(&e0) < 1e-12);
    // permute output wires by composing with swap layers
    let id = Diagram::identity(Calculus::Y, 1);
    let sw = Diagram::swap(Calculus::Y);
    let perms = [
        sw.tensor(&id).unwrap().tensor(&id).unwrap(),
        id.tensor(&sw).unwrap().tensor(&id).unwrap(),
        id.tensor(&id).unwrap().tensor(&sw).unwrap(),
    ];
    for p in &perms {
        let permuted = Diagram::compose(p, &base).unwrap();
        let tp = interpret(&permuted).unwrap();
        assert!(tp.max_diff(&t0) < 1e-12);
        let ep = interpret(&ycalc::notation::expand_hnode(&permuted).unwrap()).unwrap();
        assert!(ep.max_diff(&t0) < 1e-12);
    }
}

#[test]
fn hnode_fusion_commutes_with_expansion() {
    // joining two Hadamard nodes through a 2-Hadamard and expanding gives
    // the expansion of the merged node
    for (n1, n2) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let merged = n1 + n2 - 2;
        let mut lhs = Diagram::empty(Calculus::Y);
        let a = lhs.add_node(NodeKind::HNode(n1));
        let b = lhs.add_node(NodeKind::HNode(n2));
        let h = lhs.add_node(NodeKind::HBox);
        lhs.add_edge(ycalc::diagram::End::new(a), ycalc::diagram::End::ported(h, 0));
        lhs.add_edge(ycalc::diagram::End::ported(h, 1), ycalc::diagram::End::new(b));
        for _ in 0..(n1 - 1) {
            let o = lhs.add_output();
            lhs.add_edge(ycalc::diagram::End::new(a), ycalc::diagram::End::new(o));
        }
        for _ in 0..(n2 - 1) {
            let o = lhs.add_output();
            lhs.add_edge(ycalc::diagram::End::new(b), ycalc::diagram::End::new(o));
        }
        let rhs = ycalc::diagram::generator_in(Calculus::Y, NodeKind::HNode(merged), 0, merged)
            .unwrap();
        let el = ycalc::notation::expand_hnode(&lhs).unwrap();
        let er = ycalc::notation::expand_hnode(&rhs).unwrap();
        assert!(el.validate().is_empty());
        let dev = interpret(&el).unwrap().max_diff(&interpret(&er).unwrap());
        assert!(dev < 1e-9, "expanded fusion {n1}+{n2}: {dev:.3e}");
    }
}
