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

//! Matching, application and simplification behavior on worked examples.

use ycalc::angle::Angle;
use ycalc::diagram::{generator_in, Calculus, Diagram, GraphBuilder, NodeKind};
use ycalc::rules::{apply, find_matches, rule_by_name, simplify, SimplifyStrategy};
use ycalc::semantics::{equal_semantics, interpret};

fn box_chain(angles: &[Angle]) -> Diagram {
    let mut b = GraphBuilder::new(Calculus::Y);
    let i = b.input();
    let o = b.output();
    let boxes: Vec<_> = angles.iter().map(|a| b.ybox(*a)).collect();
    let mut chain = vec![i];
    chain.extend(&boxes);
    chain.push(o);
    b.chain(&chain);
    b.finish()
}

#[test]
fn fusion_on_two_spider_chain_has_one_match() {
    let mut b = GraphBuilder::new(Calculus::Y);
    let i = b.input();
    let o = b.output();
    let s1 = b.gspider();
    let s2 = b.gspider();
    b.chain(&[i, s1, s2, o]);
    let d = b.finish();
    let rule = rule_by_name("Y.S1").unwrap();
    let sites = find_matches(&d, &rule);
    assert_eq!(sites.len(), 1);
    let after = apply(&d, &sites[0]).unwrap();
    assert_eq!(after.num_interior_nodes(), 1);
    assert!(equal_semantics(&d, &after, 1e-9).unwrap());
}

#[test]
fn identity_rule_has_no_match_on_bare_wire() {
    let d = Diagram::identity(Calculus::Y, 1);
    let rule = rule_by_name("Y.S2").unwrap();
    assert!(find_matches(&d, &rule).is_empty());
}

#[test]
fn bialgebra_matches_its_own_left_side() {
    let rule = rule_by_name("Y.B2").unwrap();
    let (lhs, _) = rule.build_sides(&ycalc::rules::Binding::none()).unwrap();
    let sites = find_matches(&lhs, &rule);
    assert!(!sites.is_empty());
    let after = apply(&lhs, &sites[0]).unwrap();
    assert!(equal_semantics(&lhs, &after, 1e-9).unwrap());
}

#[test]
fn rs1_apply_fuses_quarter_boxes() {
    let d = box_chain(&[Angle::pi_over(4), Angle::pi_over(4)]);
    let rule = rule_by_name("Y.RS1").unwrap();
    let sites = find_matches(&d, &rule);
    assert_eq!(sites.len(), 1);
    let after = apply(&d, &sites[0]).unwrap();
    let kinds: Vec<_> = after.interior_nodes().map(|(_, k)| *k).collect();
    assert_eq!(kinds, vec![NodeKind::ybox(Angle::pi_over(2))]);
    assert!(equal_semantics(&d, &after, 1e-9).unwrap());
}

#[test]
fn apply_on_changed_diagram_is_stale() {
    let d = box_chain(&[Angle::pi_over(4), Angle::pi_over(4)]);
    let rule = rule_by_name("Y.RS1").unwrap();
    let sites = find_matches(&d, &rule);
    let changed = box_chain(&[Angle::pi_over(2), Angle::pi_over(4)]);
    assert!(apply(&changed, &sites[0]).is_err());
}

#[test]
fn s2_apply_drops_a_node() {
    let mut b = GraphBuilder::new(Calculus::Y);
    let i = b.input();
    let o = b.output();
    let s = b.gspider();
    let bx = b.ybox(Angle::pi());
    b.chain(&[i, s, bx, o]);
    let d = b.finish();
    let rule = rule_by_name("Y.S2").unwrap();
    let sites = find_matches(&d, &rule);
    assert_eq!(sites.len(), 1);
    let after = apply(&d, &sites[0]).unwrap();
    assert_eq!(after.num_interior_nodes(), d.num_interior_nodes() - 1);
    assert!(equal_semantics(&d, &after, 1e-9).unwrap());
}

#[test]
fn simplify_five_quarter_boxes_to_one() {
    let d = box_chain(&[Angle::pi_over(2); 5]);
    let (result, trace) = simplify(&d, SimplifyStrategy::FuseFirst, 100);
    assert!(!trace.is_empty());
    let kinds: Vec<_> = result.interior_nodes().map(|(_, k)| *k).collect();
    // 5 pi/2 = 5pi/2, normalized into [0, 4pi)
    assert_eq!(kinds, vec![NodeKind::ybox(Angle::rational(5, 2))]);
    assert!(equal_semantics(&d, &result, 1e-9).unwrap());
    // against the direct matrix product
    let want =
        interpret(&generator_in(Calculus::Y, NodeKind::ybox(Angle::rational(5, 2)), 1, 1).unwrap())
            .unwrap();
    assert!(interpret(&result).unwrap().max_diff(&want) < 1e-12);
}

#[test]
fn simplify_minimal_spider_is_fixpoint() {
    let d = generator_in(Calculus::Y, NodeKind::zspider0(), 1, 2).unwrap();
    let (result, trace) = simplify(&d, SimplifyStrategy::FuseFirst, 100);
    assert!(trace.is_empty());
    assert_eq!(result, d);
}

#[test]
fn simplify_cancels_inverse_scalars() {
    let mut d = Diagram::identity(Calculus::Y, 1);
    ycalc::notation::append_scalar(&mut d, ycalc::notation::ScalarGadget::Sqrt2);
    ycalc::notation::append_scalar(&mut d, ycalc::notation::ScalarGadget::InvSqrt2);
    let (result, trace) = simplify(&d, SimplifyStrategy::FuseFirst, 100);
    assert_eq!(result.num_interior_nodes(), 0);
    assert!(trace.iter().any(|t| t.rule == "Y.IV"));
}

#[test]
fn simplify_hopf_under_size_greedy() {
    // a double edge between opposite spiders with outside legs
    let mut b = GraphBuilder::new(Calculus::Y);
    let i = b.input();
    let o = b.output();
    let g = b.gspider();
    let r = b.rspider();
    b.wire(i, g);
    b.wire(g, r);
    b.wire(g, r);
    b.wire(r, o);
    let d = b.finish();
    let (result, trace) = simplify(&d, SimplifyStrategy::SizeGreedy, 100);
    assert!(trace.iter().any(|t| t.rule.contains("hopf")));
    assert!(equal_semantics(&d, &result, 1e-9).unwrap());
    // the pair is disconnected afterwards
    assert!(ycalc::rules::find_matches(&result, &rule_by_name("Y.L:hopf").unwrap()).is_empty());
}

#[test]
fn fuse_first_never_grows_the_interior() {
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let cfg = ycalc::random::RandomCfg::new(Calculus::Y)
        .wires(2)
        .nodes(10);
    for _ in 0..40 {
        let d = ycalc::random::random_diagram(&cfg, &mut rng);
        let before = d.num_interior_nodes();
        let (result, _) = simplify(&d, SimplifyStrategy::FuseFirst, 400);
        assert!(result.num_interior_nodes() <= before);
    }
}
