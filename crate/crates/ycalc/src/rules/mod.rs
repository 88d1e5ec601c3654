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

//! The rewrite-rule sets of the three calculi, with machine-checked
//! soundness.
//!
//! Every rule knows how to build both of its sides as open diagrams for any
//! admissible parameter binding; `check_soundness` compares the two tensors
//! over sampled bindings (and exactly, on the pi/2 fragment). The flipped
//! and colour-swapped variants are generated from the base rule rather
//! than stored.

mod build;
mod matching;
mod simplify;

pub use matching::{apply, find_matches, MatchSite};
pub use simplify::{simplify, SimplifyStrategy, TraceStep};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angle::{Angle, Fragment};
use crate::diagram::{Calculus, Diagram};
use crate::error::DiagramError;
use crate::semantics::{interpret, interpret_exact};

/// Where a rewrite comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Axiom,
    DerivedLemma,
}

/// The variant closure of a rule: every rule also holds flipped
/// upside-down and with the colours swapped (boxes flipped).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Base,
    Flipped,
    Colour,
    FlippedColour,
}

pub const ALL_VARIANTS: [Variant; 4] = [
    Variant::Base,
    Variant::Flipped,
    Variant::Colour,
    Variant::FlippedColour,
];

pub fn apply_variant(d: &Diagram, v: Variant) -> Diagram {
    match v {
        Variant::Base => d.clone(),
        Variant::Flipped => d.flip_vertical(),
        Variant::Colour => d.colour_swap(),
        Variant::FlippedColour => d.flip_vertical().colour_swap(),
    }
}

/// A parameter binding: angle metavariables then arity metavariables, in
/// rule-specific order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Binding {
    pub angles: Vec<Angle>,
    pub nums: Vec<usize>,
}

impl Binding {
    pub fn none() -> Binding {
        Binding::default()
    }

    pub fn angle(a: Angle) -> Binding {
        Binding {
            angles: vec![a],
            nums: vec![],
        }
    }

    pub fn fragment(&self) -> Fragment {
        self.angles
            .iter()
            .fold(Fragment::Pi2N(1), |f, a| f.join(a.fragment()))
    }
}

/// Identifier enum driving side construction, sampling and matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    // shared spider-group shapes (AxS* used by all three calculi)
    SpiderFusion,
    IdentitySpider,
    CupSpider,
    InverseScalars,
    Copy,
    Bialgebra,
    // Y axioms
    BoxFusion,
    BubbleDisconnect,
    BoxHadamard,
    ZeroAbsorb,
    Supplementarity(u32),
    // ZX_r axioms
    HLoop,
    HConjugation,
    ZxZeroAbsorb,
    // ZX axioms
    EmptyPi4,
    Euler,
    PiCommutation,
    ZxSupplementarity(u32),
    // lemmas
    Lemma(Lemma),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    BoxZero,
    TwoScalars,
    Hopf,
    GenBialgebra,
    UdBox,
    BoxFusionUpright,
    PiCommute,
    PiExclusion,
    PiCrossing,
    RedStatePi,
    PiInvolution,
    Exclusion,
    Pi2Loop,
    Exclusion2,
    TwoPiBox,
    MinusOneSquared,
    SupFlipped(u32),
    PiDistribution,
    ExclusionHada,
    PiBoxDecomp,
    Rs2Rewritten,
    HadaInvolution,
    ZxMultGlobPhases,
    ZxInverseEuScalar,
    ZxBicolorAlpha0,
    ZxHopf,
    ZxK1,
    ZxrK2Pi,
    ZxrZeroAbsorb,
}

/// A named, directed, variant-closed rewrite.
#[derive(Debug, Clone)]
pub struct RewriteRule {
    pub name: String,
    /// Alternative names the text uses for the same rule.
    pub aliases: Vec<&'static str>,
    pub calculus: Calculus,
    pub provenance: Provenance,
    pub kind: RuleKind,
}

impl RewriteRule {
    fn new(name: &str, calculus: Calculus, provenance: Provenance, kind: RuleKind) -> RewriteRule {
        RewriteRule {
            name: name.to_string(),
            aliases: Vec::new(),
            calculus,
            provenance,
            kind,
        }
    }

    fn with_aliases(mut self, aliases: &[&'static str]) -> RewriteRule {
        self.aliases = aliases.to_vec();
        self
    }

    /// Build (lhs, rhs) for a binding, in the base variant.
    pub fn build_sides(&self, b: &Binding) -> Result<(Diagram, Diagram), DiagramError> {
        build::build_sides(self.calculus, self.kind, b)
    }

    /// Build (lhs, rhs) under a variant transform.
    pub fn build_variant(
        &self,
        b: &Binding,
        v: Variant,
    ) -> Result<(Diagram, Diagram), DiagramError> {
        let (l, r) = self.build_sides(b)?;
        Ok((apply_variant(&l, v), apply_variant(&r, v)))
    }

    /// Sample an admissible binding, optionally restricted to a fragment.
    pub fn sample_binding(&self, rng: &mut impl Rng, frag: Option<Fragment>) -> Binding {
        build::sample_binding(self.calculus, self.kind, rng, frag)
    }

    /// All bindings, when the parameter space is finite (e.g. ZX_r phases).
    pub fn enumerate_bindings(&self) -> Option<Vec<Binding>> {
        build::enumerate_bindings(self.calculus, self.kind)
    }

    /// Whether `angles[0]` ranges over arbitrary angles, so a specific
    /// value may be probed.
    pub fn has_free_angle(&self) -> bool {
        build::has_free_angle(self.calculus, self.kind)
    }
}

/// The complete axiom set of a calculus, in presentation order. The
/// supplementarity family is instantiated at n in {2, 3, 5, 7}.
pub fn rule_catalog(calculus: Calculus) -> Vec<RewriteRule> {
    use Provenance::Axiom;
    use RuleKind as K;
    let mut rules = Vec::new();
    match calculus {
        Calculus::Y => {
            rules.push(RewriteRule::new("Y.S1", calculus, Axiom, K::SpiderFusion));
            rules.push(RewriteRule::new("Y.S2", calculus, Axiom, K::IdentitySpider));
            rules.push(RewriteRule::new("Y.S3", calculus, Axiom, K::CupSpider));
            rules.push(RewriteRule::new("Y.IV", calculus, Axiom, K::InverseScalars));
            rules.push(RewriteRule::new("Y.B1", calculus, Axiom, K::Copy));
            rules.push(RewriteRule::new("Y.B2", calculus, Axiom, K::Bialgebra));
            rules.push(RewriteRule::new("Y.RS1", calculus, Axiom, K::BoxFusion));
            rules.push(
                RewriteRule::new("Y.RS2", calculus, Axiom, K::BubbleDisconnect)
                    .with_aliases(&["RS3"]),
            );
            rules.push(RewriteRule::new("Y.RH", calculus, Axiom, K::BoxHadamard));
            rules.push(RewriteRule::new("Y.RZO", calculus, Axiom, K::ZeroAbsorb));
            for n in [2u32, 3, 5, 7] {
                rules.push(
                    RewriteRule::new(
                        &format!("Y.RSUP_{n}"),
                        calculus,
                        Axiom,
                        K::Supplementarity(n),
                    )
                    .with_aliases(&["RS_n"]),
                );
            }
        }
        Calculus::ZxReal => {
            rules.push(RewriteRule::new("ZXr.S1", calculus, Axiom, K::SpiderFusion));
            rules.push(RewriteRule::new(
                "ZXr.S2",
                calculus,
                Axiom,
                K::IdentitySpider,
            ));
            rules.push(RewriteRule::new("ZXr.S3", calculus, Axiom, K::CupSpider));
            rules.push(RewriteRule::new(
                "ZXr.IV",
                calculus,
                Axiom,
                K::InverseScalars,
            ));
            rules.push(RewriteRule::new("ZXr.B1", calculus, Axiom, K::Copy));
            rules.push(RewriteRule::new("ZXr.B2", calculus, Axiom, K::Bialgebra));
            rules.push(RewriteRule::new("ZXr.HL", calculus, Axiom, K::HLoop));
            rules.push(RewriteRule::new("ZXr.H", calculus, Axiom, K::HConjugation));
            rules.push(RewriteRule::new("ZXr.ZO", calculus, Axiom, K::ZxZeroAbsorb));
        }
        Calculus::Zx => {
            rules.push(RewriteRule::new("ZX.S1", calculus, Axiom, K::SpiderFusion));
            rules.push(RewriteRule::new(
                "ZX.S2",
                calculus,
                Axiom,
                K::IdentitySpider,
            ));
            rules.push(RewriteRule::new("ZX.S3", calculus, Axiom, K::CupSpider));
            rules.push(RewriteRule::new("ZX.E", calculus, Axiom, K::EmptyPi4));
            rules.push(RewriteRule::new("ZX.B1", calculus, Axiom, K::Copy));
            rules.push(RewriteRule::new("ZX.B2", calculus, Axiom, K::Bialgebra));
            rules.push(RewriteRule::new("ZX.EU", calculus, Axiom, K::Euler));
            rules.push(RewriteRule::new("ZX.H", calculus, Axiom, K::HConjugation));
            rules.push(RewriteRule::new("ZX.K2", calculus, Axiom, K::PiCommutation));
            for n in [2u32, 3, 5, 7] {
                rules.push(RewriteRule::new(
                    &format!("ZX.SUP_{n}"),
                    calculus,
                    Axiom,
                    K::ZxSupplementarity(n),
                ));
            }
        }
    }
    rules
}

/// The derived lemma suite as verified rewrites.
pub fn lemma_catalog() -> Vec<RewriteRule> {
    use Lemma as L;
    use Provenance::DerivedLemma;
    let y = Calculus::Y;
    let zx = Calculus::Zx;
    let zxr = Calculus::ZxReal;
    let mut out = vec![
        RewriteRule::new("Y.L:box-zero", y, DerivedLemma, RuleKind::Lemma(L::BoxZero)),
        RewriteRule::new(
            "Y.L:two-scalars",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::TwoScalars),
        ),
        RewriteRule::new("Y.L:hopf", y, DerivedLemma, RuleKind::Lemma(L::Hopf)),
        RewriteRule::new(
            "Y.L:gen-bialgebra",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::GenBialgebra),
        ),
        RewriteRule::new("Y.L:ud-box", y, DerivedLemma, RuleKind::Lemma(L::UdBox)),
        RewriteRule::new(
            "Y.L:box-fusion-upright",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::BoxFusionUpright),
        ),
        RewriteRule::new(
            "Y.L:pi-commute",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiCommute),
        ),
        RewriteRule::new(
            "Y.L:pi-exclusion",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiExclusion),
        ),
        RewriteRule::new(
            "Y.L:pi-crossing",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiCrossing),
        ),
        RewriteRule::new(
            "Y.L:red-state-pi",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::RedStatePi),
        ),
        RewriteRule::new(
            "Y.L:pi-involution",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiInvolution),
        ),
        RewriteRule::new(
            "Y.L:exclusion",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::Exclusion),
        ),
        RewriteRule::new("Y.L:pi2-loop", y, DerivedLemma, RuleKind::Lemma(L::Pi2Loop)),
        RewriteRule::new(
            "Y.L:exclusion-2",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::Exclusion2),
        ),
        RewriteRule::new("Y.L:2pi-box", y, DerivedLemma, RuleKind::Lemma(L::TwoPiBox)),
        RewriteRule::new(
            "Y.L:minus-one-squared",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::MinusOneSquared),
        ),
        RewriteRule::new(
            "Y.L:pi-distribution",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiDistribution),
        ),
        RewriteRule::new(
            "Y.L:exclusion-hada",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::ExclusionHada),
        ),
        RewriteRule::new(
            "Y.L:pi-box-decomp",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::PiBoxDecomp),
        ),
        RewriteRule::new(
            "Y.L:rs2-rewritten",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::Rs2Rewritten),
        ),
        RewriteRule::new(
            "Y.L:hada-involution",
            y,
            DerivedLemma,
            RuleKind::Lemma(L::HadaInvolution),
        ),
    ];
    for n in [2u32, 3, 5] {
        out.push(RewriteRule::new(
            &format!("Y.L:sup-flipped-{n}"),
            y,
            DerivedLemma,
            RuleKind::Lemma(L::SupFlipped(n)),
        ));
    }
    out.extend([
        RewriteRule::new(
            "ZX.L:mult-glob-phases",
            zx,
            DerivedLemma,
            RuleKind::Lemma(L::ZxMultGlobPhases),
        ),
        RewriteRule::new(
            "ZX.L:inverse-eu-scalar",
            zx,
            DerivedLemma,
            RuleKind::Lemma(L::ZxInverseEuScalar),
        ),
        RewriteRule::new(
            "ZX.L:bicolor-alpha-0",
            zx,
            DerivedLemma,
            RuleKind::Lemma(L::ZxBicolorAlpha0),
        ),
        RewriteRule::new("ZX.L:hopf", zx, DerivedLemma, RuleKind::Lemma(L::ZxHopf)),
        RewriteRule::new("ZX.L:k1", zx, DerivedLemma, RuleKind::Lemma(L::ZxK1)),
        RewriteRule::new(
            "ZXr.L:k2-pi",
            zxr,
            DerivedLemma,
            RuleKind::Lemma(L::ZxrK2Pi),
        ),
        RewriteRule::new(
            "ZXr.L:zero-absorb",
            zxr,
            DerivedLemma,
            RuleKind::Lemma(L::ZxrZeroAbsorb),
        ),
    ]);
    out
}

/// A supplementarity rule at an arbitrary index, on demand; the catalogs
/// instantiate n in {2, 3, 5, 7}.
pub fn supplementarity_rule(calculus: Calculus, n: u32) -> Option<RewriteRule> {
    if n < 2 {
        return None;
    }
    match calculus {
        Calculus::Y => Some(
            RewriteRule::new(
                &format!("Y.RSUP_{n}"),
                calculus,
                Provenance::Axiom,
                RuleKind::Supplementarity(n),
            )
            .with_aliases(&["RS_n"]),
        ),
        Calculus::Zx => Some(RewriteRule::new(
            &format!("ZX.SUP_{n}"),
            calculus,
            Provenance::Axiom,
            RuleKind::ZxSupplementarity(n),
        )),
        Calculus::ZxReal => None,
    }
}

/// Look a rule up by name across all catalogs.
pub fn rule_by_name(name: &str) -> Option<RewriteRule> {
    for c in [Calculus::Y, Calculus::ZxReal, Calculus::Zx] {
        for r in rule_catalog(c) {
            if r.name == name {
                return Some(r);
            }
        }
    }
    lemma_catalog().into_iter().find(|r| r.name == name)
}

/// Result of a soundness run over one rule.
#[derive(Debug, Clone)]
pub struct SoundnessReport {
    pub rule: String,
    pub samples: usize,
    pub max_deviation: f64,
    /// Number of instantiations additionally checked on the exact backend.
    pub exact_checks: usize,
    pub exact_ok: bool,
    pub pass: bool,
}

impl SoundnessReport {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{:.3e}\t{}\t{}",
            self.rule,
            self.samples,
            self.max_deviation,
            self.exact_checks,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Float soundness tolerance.
pub const SOUND_TOL: f64 = 1e-9;

/// Compare both sides of every variant over `samples` random admissible
/// instantiations; when the parameter space is finite, check all of it.
/// On pi/2-fragment bindings the exact backend must agree exactly.
pub fn check_soundness(rule: &RewriteRule, samples: usize, seed: u64) -> SoundnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ name_hash(&rule.name));
    let bindings: Vec<Binding> = match rule.enumerate_bindings() {
        Some(all) => all,
        None => {
            let mut v: Vec<Binding> = (0..samples)
                .map(|_| rule.sample_binding(&mut rng, None))
                .collect();
            // always probe the pi/2 fragment so the exact path runs
            for _ in 0..4 {
                v.push(rule.sample_binding(&mut rng, Some(Fragment::Pi2N(1))));
            }
            v
        }
    };

    let mut max_dev: f64 = 0.0;
    let mut exact_checks = 0usize;
    let mut exact_ok = true;
    let mut count = 0usize;
    for b in &bindings {
        for v in ALL_VARIANTS {
            let (lhs, rhs) = match rule.build_variant(b, v) {
                Ok(x) => x,
                Err(e) => panic!("rule {} failed to build: {e}", rule.name),
            };
            let tl = interpret(&lhs).expect("lhs evaluates");
            let tr = interpret(&rhs).expect("rhs evaluates");
            max_dev = max_dev.max(tl.max_diff(&tr));
            count += 1;
            if b.fragment().within(Fragment::Pi2N(1)) {
                if let (Ok(el), Ok(er)) = (interpret_exact(&lhs), interpret_exact(&rhs)) {
                    exact_checks += 1;
                    if el != er {
                        exact_ok = false;
                    }
                }
            }
        }
    }
    SoundnessReport {
        rule: rule.name.clone(),
        samples: count,
        max_deviation: max_dev,
        exact_checks,
        exact_ok,
        pass: max_dev < SOUND_TOL && exact_ok,
    }
}

fn name_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100000001b3)
    })
}

/// Reduce every box angle into [0, 4 pi), rewrite flipped boxes upright
/// with negated angle, and reduce ZX phases into [0, 2 pi).
pub fn normalize_angles(d: &Diagram) -> Diagram {
    use crate::diagram::NodeKind;
    let mut out = d.clone();
    let updates: Vec<(crate::diagram::NodeId, NodeKind)> = out
        .nodes()
        .filter_map(|(id, k)| match k {
            NodeKind::YBox { angle, flipped } => {
                let a = if *flipped { -*angle } else { *angle };
                Some((id, NodeKind::ybox(a.reduced_mod_pi(4))))
            }
            NodeKind::ZSpider(a) => Some((id, NodeKind::ZSpider(a.reduced_mod_pi(2)))),
            NodeKind::XSpider(a) => Some((id, NodeKind::XSpider(a.reduced_mod_pi(2)))),
            _ => None,
        })
        .collect();
    for (id, k) in updates {
        out.replace_kind(id, k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogs_have_the_named_rules() {
        let y: Vec<String> = rule_catalog(Calculus::Y)
            .iter()
            .map(|r| r.name.clone())
            .collect();
        for want in [
            "Y.S1", "Y.IV", "Y.RS1", "Y.RS2", "Y.RH", "Y.RZO", "Y.RSUP_2",
        ] {
            assert!(y.contains(&want.to_string()), "missing {want}");
        }
        let zxr: Vec<String> = rule_catalog(Calculus::ZxReal)
            .iter()
            .map(|r| r.name.clone())
            .collect();
        assert!(zxr.contains(&"ZXr.HL".to_string()));
        let zx: Vec<String> = rule_catalog(Calculus::Zx)
            .iter()
            .map(|r| r.name.clone())
            .collect();
        for want in ["ZX.E", "ZX.EU", "ZX.K2", "ZX.SUP_3"] {
            assert!(zx.contains(&want.to_string()), "missing {want}");
        }
        // aliases recorded
        let rs2 = rule_by_name("Y.RS2").unwrap();
        assert!(rs2.aliases.contains(&"RS3"));
    }

    #[test]
    fn normalize_reduces_boxes_mod_4pi() {
        use crate::diagram::{generator_in, NodeKind};
        let d = generator_in(Calculus::Y, NodeKind::ybox(Angle::rational(9, 2)), 1, 1).unwrap();
        let n = normalize_angles(&d);
        let kinds: Vec<_> = n.interior_nodes().map(|(_, k)| *k).collect();
        assert_eq!(kinds, vec![NodeKind::ybox(Angle::pi_over(2))]);

        // flipped pi with negative angle: rewritten upright, then reduced
        let d2 = generator_in(
            Calculus::Y,
            NodeKind::ybox_flipped(Angle::rational(-1, 1)),
            1,
            1,
        )
        .unwrap();
        let n2 = normalize_angles(&d2);
        let kinds2: Vec<_> = n2.interior_nodes().map(|(_, k)| *k).collect();
        assert_eq!(kinds2, vec![NodeKind::ybox(Angle::pi())]);
        // transpose contract: semantics unchanged
        assert!(
            crate::semantics::interpret(&d2)
                .unwrap()
                .max_diff(&crate::semantics::interpret(&n2).unwrap())
                < 1e-12
        );

        let z = generator_in(Calculus::Zx, NodeKind::ZSpider(Angle::rational(2, 1)), 1, 1).unwrap();
        let nz = normalize_angles(&z);
        let kz: Vec<_> = nz.interior_nodes().map(|(_, k)| *k).collect();
        assert_eq!(kz, vec![NodeKind::ZSpider(Angle::zero())]);
    }
}
