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

//! Deterministic verification suites over the whole artifact: rule and
//! lemma soundness, the translation functors, and the minimality
//! certificates. The command-line front end drives these; the acceptance
//! tests run them too. Identical seeds give byte-identical reports.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angle::Fragment;
use crate::diagram::Calculus;
use crate::models::{bundle_model, flip_model, preservation_matrix, prime_model, Verdict};
use crate::random::{random_diagram, random_real_matrix, RandomCfg};
use crate::rules::{check_soundness, lemma_catalog, rule_catalog};
use crate::semantics::{equal_semantics_exact, interpret};
use crate::translate::{
    im_part, re_part, universal_embed, y_to_zx, y_to_zxr, zx_to_y, zxr_to_y, ReImRoute,
};

/// One verification suite's outcome: a deterministic textual report and an
/// overall pass flag.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub lines: Vec<String>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn render(&self) -> String {
        let mut s = format!("== suite {} ==\n", self.name);
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(&format!(
            "== suite {}: {} ==\n",
            self.name,
            if self.passed { "pass" } else { "FAIL" }
        ));
        s
    }
}

/// Soundness of every axiom of the three calculi.
pub fn run_rules_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut lines = Vec::new();
    let mut passed = true;
    for c in [Calculus::Y, Calculus::ZxReal, Calculus::Zx] {
        for rule in rule_catalog(c) {
            let r = check_soundness(&rule, samples, seed);
            passed &= r.pass;
            lines.push(r.line());
        }
    }
    SuiteReport {
        name: "rules".into(),
        lines,
        passed,
    }
}

/// Soundness of the derived lemma suite.
pub fn run_lemmas_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut lines = Vec::new();
    let mut passed = true;
    for rule in lemma_catalog() {
        let r = check_soundness(&rule, samples, seed);
        passed &= r.pass;
        lines.push(r.line());
    }
    SuiteReport {
        name: "lemmas".into(),
        lines,
        passed,
    }
}

fn check_line(lines: &mut Vec<String>, passed: &mut bool, name: &str, dev: f64, tol: f64) {
    let ok = dev < tol;
    *passed &= ok;
    lines.push(format!(
        "{name}\t{dev:.3e}\t{}",
        if ok { "pass" } else { "FAIL" }
    ));
}

/// The translation suite: semantic preservation, round trips, the block
/// law, real/imaginary extraction, rule transport, fragment stability,
/// the norm-contraction inequality and universality.
pub fn run_translations_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut lines = Vec::new();
    let mut passed = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // completeness pipeline: pi/2 Y-diagrams through ZX_r and back
    let cfg = RandomCfg::new(Calculus::Y)
        .wires(2)
        .nodes(12)
        .fragment(Fragment::Pi2N(1));
    let mut max_fwd: f64 = 0.0;
    let mut max_round: f64 = 0.0;
    let mut exact_decisions = 0usize;
    for _ in 0..samples {
        let d = random_diagram(&cfg, &mut rng);
        let td = interpret(&d).expect("evaluates");
        let img = y_to_zxr(&d).expect("in fragment");
        let t_img = interpret(&img).expect("evaluates");
        max_fwd = max_fwd.max(td.max_diff(&t_img));
        let back = zxr_to_y(&img).expect("translates back");
        let t_back = interpret(&back).expect("evaluates");
        max_round = max_round.max(td.max_diff(&t_back));
        // the exact backend decides the completeness-backed equality
        if equal_semantics_exact(&d, &back).unwrap_or(false) {
            exact_decisions += 1;
        }
    }
    check_line(&mut lines, &mut passed, "y2zxr.preserves", max_fwd, 1e-9);
    check_line(&mut lines, &mut passed, "y2zxr.roundtrip", max_round, 1e-9);
    let all_exact = exact_decisions == samples;
    passed &= all_exact;
    lines.push(format!(
        "y2zxr.exact-decision\t{exact_decisions}/{samples}\t{}",
        if all_exact { "pass" } else { "FAIL" }
    ));

    // y -> zx on arbitrary-angle diagrams
    let cfg = RandomCfg::new(Calculus::Y).wires(2).nodes(10);
    let mut max_dev: f64 = 0.0;
    for _ in 0..samples {
        let d = random_diagram(&cfg, &mut rng);
        let img = y_to_zx(&d).expect("translates");
        max_dev = max_dev.max(
            interpret(&d)
                .expect("evaluates")
                .max_diff(&interpret(&img).expect("evaluates")),
        );
    }
    check_line(&mut lines, &mut passed, "y2zx.preserves", max_dev, 1e-9);

    // the block law on random ZX diagrams
    let cfg = RandomCfg::new(Calculus::Zx).wires(2).nodes(8);
    let mut max_block: f64 = 0.0;
    let mut max_re: f64 = 0.0;
    let mut max_im: f64 = 0.0;
    let mut frag_ok = true;
    for i in 0..samples {
        let d = random_diagram(&cfg, &mut rng);
        let source = interpret(&d).expect("evaluates");
        let cf = zx_to_y(&d).expect("translates");
        max_block = max_block.max(cf.block_law_against(&source).expect("evaluates"));
        // fragment stability: images stay inside the source fragment
        // joined with pi/2
        let want = d.fragment().join(Fragment::Pi2N(1));
        frag_ok &= cf.diagram.fragment().within(want);
        // real/imaginary extraction on a sub-sample (the via-zx route is
        // larger, keep it occasional)
        if i % 5 == 0 {
            let (re_want, im_want) = source.re_im_split();
            let re = re_part(&d, ReImRoute::Direct).expect("re");
            max_re = max_re.max(interpret(&re).expect("evaluates").max_diff(&re_want));
            let im = im_part(&d, ReImRoute::Direct).expect("im");
            max_im = max_im.max(interpret(&im).expect("evaluates").max_diff(&im_want));
            let re2 = re_part(&d, ReImRoute::ViaZx).expect("re via zx");
            max_re = max_re.max(interpret(&re2).expect("evaluates").max_diff(&re_want));
        }
    }
    check_line(&mut lines, &mut passed, "zx2y.block-law", max_block, 1e-9);
    check_line(&mut lines, &mut passed, "zx2y.re-part", max_re, 1e-9);
    check_line(&mut lines, &mut passed, "zx2y.im-part", max_im, 1e-9);
    passed &= frag_ok;
    lines.push(format!(
        "zx2y.fragment-stable\t{}",
        if frag_ok { "pass" } else { "FAIL" }
    ));

    // rule transport: images of rule instances stay semantic identities
    let mut max_transport: f64 = 0.0;
    for rule in rule_catalog(Calculus::Y) {
        for _ in 0..3 {
            let b = rule.sample_binding(&mut rng, None);
            let Ok((l, r)) = rule.build_sides(&b) else {
                continue;
            };
            let (Ok(li), Ok(ri)) = (y_to_zx(&l), y_to_zx(&r)) else {
                continue;
            };
            let dev = interpret(&li)
                .expect("evaluates")
                .max_diff(&interpret(&ri).expect("evaluates"));
            max_transport = max_transport.max(dev);
        }
    }
    check_line(
        &mut lines,
        &mut passed,
        "y2zx.rule-transport",
        max_transport,
        1e-9,
    );

    let mut max_transport: f64 = 0.0;
    for rule in rule_catalog(Calculus::Zx) {
        for _ in 0..3 {
            let b = rule.sample_binding(&mut rng, None);
            let Ok((l, r)) = rule.build_sides(&b) else {
                continue;
            };
            let (Ok(li), Ok(ri)) = (zx_to_y(&l), zx_to_y(&r)) else {
                continue;
            };
            let dev = interpret(&li.diagram)
                .expect("evaluates")
                .max_diff(&interpret(&ri.diagram).expect("evaluates"));
            max_transport = max_transport.max(dev);
        }
    }
    check_line(
        &mut lines,
        &mut passed,
        "zx2y.rule-transport",
        max_transport,
        1e-9,
    );

    // norm contraction: |Re(T) - Re(M)| <= |T - M| entrywise max norm
    let mut contraction_ok = true;
    for _ in 0..samples {
        let d = random_diagram(&RandomCfg::new(Calculus::Zx).wires(1).nodes(6), &mut rng);
        let t = interpret(&d).expect("evaluates");
        let m = interpret(&random_diagram(
            &RandomCfg::new(Calculus::Zx).wires(1).nodes(6),
            &mut rng,
        ));
        let Ok(m) = m else { continue };
        if m.outs() != t.outs() || m.ins() != t.ins() {
            continue;
        }
        let diff = t.max_diff(&m);
        let (re_t, _) = t.re_im_split();
        let (re_m, _) = m.re_im_split();
        if re_t.max_diff(&re_m) > diff + 1e-12 {
            contraction_ok = false;
        }
    }
    passed &= contraction_ok;
    lines.push(format!(
        "re.norm-contraction\t{}",
        if contraction_ok { "pass" } else { "FAIL" }
    ));

    // universality on a few random matrices
    let mut max_embed: f64 = 0.0;
    for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
        let rows = random_real_matrix(m, n, &mut rng);
        let d = universal_embed(&rows).expect("embeds");
        let t = interpret(&d).expect("evaluates");
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let z = t.at(r, c);
                max_embed = max_embed.max(((z.re - v).powi(2) + z.im.powi(2)).sqrt());
            }
        }
    }
    check_line(&mut lines, &mut passed, "universal-embed", max_embed, 1e-6);

    SuiteReport {
        name: "translations".into(),
        lines,
        passed,
    }
}

/// The minimality suite: the three nonstandard models must certify
/// exactly (RS2), (RSUP_3) and (RH).
pub fn run_minimality_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut lines = Vec::new();
    let mut passed = true;
    let rules = rule_catalog(Calculus::Y);
    let expected = [
        (bundle_model(3), "Y.RS2"),
        (prime_model(3).expect("3 is an odd prime"), "Y.RSUP_3"),
        (flip_model(), "Y.RH"),
    ];
    let mut reports = Vec::new();
    for (model, want) in expected {
        let report = preservation_matrix(&model, &rules, samples, seed);
        let inconclusive = report
            .cells
            .iter()
            .filter(|c| c.verdict == Verdict::Inconclusive)
            .count();
        let certified = report.certified();
        let ok = certified == vec![want.to_string()] && inconclusive == 0;
        passed &= ok;
        lines.push(format!(
            "{}\tcertifies\t{:?}\t{}",
            report.model,
            certified,
            if ok { "pass" } else { "FAIL" }
        ));
        reports.push(report);
    }
    for row in crate::models::render_matrix(&reports).lines() {
        lines.push(row.to_string());
    }
    SuiteReport {
        name: "minimality".into(),
        lines,
        passed,
    }
}

/// Functoriality of the nonstandard models on random composites.
pub fn run_model_functoriality(samples: usize, seed: u64) -> SuiteReport {
    use crate::models::interpret_model;
    let mut lines = Vec::new();
    let mut passed = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for model in [
        bundle_model(3),
        prime_model(3).expect("prime"),
        flip_model(),
    ] {
        let frag = model.fragment;
        let mut cfg = RandomCfg::new(Calculus::Y).wires(1).nodes(5).plain();
        if let Some(f) = frag {
            cfg = cfg.fragment(f);
        }
        let mut max_dev: f64 = 0.0;
        let mut count = 0;
        while count < samples {
            let a = random_diagram(&cfg, &mut rng);
            let b = random_diagram(&cfg, &mut rng);
            if a.num_inputs() != b.num_outputs() {
                continue;
            }
            count += 1;
            let Ok(c) = crate::diagram::Diagram::compose(&a, &b) else {
                continue;
            };
            let (Ok(ta), Ok(tb), Ok(tc)) = (
                interpret_model(&a, &model),
                interpret_model(&b, &model),
                interpret_model(&c, &model),
            ) else {
                continue;
            };
            max_dev = max_dev.max(ta.matmul(&tb).max_diff(&tc));
        }
        check_line(
            &mut lines,
            &mut passed,
            &format!("functorial.{}", model.name),
            max_dev,
            1e-9,
        );
    }
    SuiteReport {
        name: "model-functoriality".into(),
        lines,
        passed,
    }
}

/// Every suite, in order.
pub fn run_all(samples: usize, seed: u64) -> Vec<SuiteReport> {
    vec![
        run_rules_suite(samples, seed),
        run_lemmas_suite(samples, seed),
        run_translations_suite(samples, seed),
        run_minimality_suite(samples.min(12), seed),
        run_model_functoriality(samples.min(25), seed),
    ]
}
