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

//! Soundness of every catalogued rule and lemma: both sides of every
//! sampled instantiation (and every variant) interpret to the same tensor.

use ycalc::diagram::Calculus;
use ycalc::rules::{check_soundness, lemma_catalog, rule_catalog};

fn check_catalog(rules: Vec<ycalc::rules::RewriteRule>) {
    let mut failures = Vec::new();
    for rule in &rules {
        let report = check_soundness(rule, 25, 0xABCDu64);
        println!("{}", report.line());
        if !report.pass {
            failures.push(report);
        }
    }
    assert!(
        failures.is_empty(),
        "unsound rules:\n{}",
        failures
            .iter()
            .map(|r| r.line())
            .collect::<Vec<_>>()
            .join("\n")
    );
}

#[test]
fn y_axioms_sound() {
    check_catalog(rule_catalog(Calculus::Y));
}

#[test]
fn zxr_axioms_sound() {
    check_catalog(rule_catalog(Calculus::ZxReal));
}

#[test]
fn zx_axioms_sound() {
    check_catalog(rule_catalog(Calculus::Zx));
}

#[test]
fn lemma_suite_sound() {
    check_catalog(lemma_catalog());
}

#[test]
fn corrupted_rule_detected() {
    // negative control: giving RS1 the wrong fused angle must show up as a
    // nonzero deviation
    use ycalc::angle::Angle;
    use ycalc::diagram::{generator_in, NodeKind};
    use ycalc::semantics::interpret;
    let a = Angle::free(0.7);
    let b = Angle::free(0.9);
    let lhs = {
        let left = generator_in(Calculus::Y, NodeKind::ybox(a), 1, 1).unwrap();
        let right = generator_in(Calculus::Y, NodeKind::ybox(b), 1, 1).unwrap();
        ycalc::diagram::Diagram::compose(&right, &left).unwrap()
    };
    // corrupted: angles multiply instead of add
    let bad = generator_in(Calculus::Y, NodeKind::ybox(Angle::free(0.7 * 0.9)), 1, 1).unwrap();
    let dev = interpret(&lhs).unwrap().max_diff(&interpret(&bad).unwrap());
    assert!(dev > 1e-6, "corruption must be visible, got {dev}");
}
