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

//! A terminating simplification strategy over the size-reducing rule
//! subset: spider fusion, box fusion with angle normalization, identity
//! removal, scalar cancellation, and (under the size-greedy strategy)
//! Hopf parallel-edge elimination.

use crate::diagram::{Calculus, Diagram, NodeId, NodeKind};
use crate::scalar::Exact;
use crate::semantics::{interpret_with, EvalOptions};

use super::{apply, find_matches, normalize_angles, rule_by_name, Binding, MatchSite};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplifyStrategy {
    /// Fusions before anything else; never grows the interior node count.
    FuseFirst,
    /// Adds Hopf parallel-edge elimination, accepting transient scalar
    /// debris that later cancellation may remove.
    SizeGreedy,
}

/// One recorded rewrite in a simplification run.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub rule: String,
    pub nodes: Vec<NodeId>,
    pub binding: Binding,
}

impl From<&MatchSite> for TraceStep {
    fn from(s: &MatchSite) -> TraceStep {
        TraceStep {
            rule: s.rule.clone(),
            nodes: s.nodes.clone(),
            binding: s.binding.clone(),
        }
    }
}

fn rule_names(c: Calculus, strategy: SimplifyStrategy) -> Vec<&'static str> {
    let mut names: Vec<&'static str> = match c {
        Calculus::Y => vec!["Y.S1", "Y.RS1", "Y.S2"],
        Calculus::ZxReal => vec!["ZXr.S1", "ZXr.S2"],
        Calculus::Zx => vec!["ZX.S1", "ZX.S2"],
    };
    if strategy == SimplifyStrategy::SizeGreedy {
        names.push(match c {
            Calculus::Y => "Y.L:hopf",
            _ => "ZX.L:hopf",
        });
    }
    names
}

/// Repeatedly apply the terminating subset until fixpoint or the step
/// budget runs out. Every applied site lands in the trace.
pub fn simplify(
    d: &Diagram,
    strategy: SimplifyStrategy,
    max_steps: usize,
) -> (Diagram, Vec<TraceStep>) {
    let mut cur = d.clone();
    let mut trace = Vec::new();
    let rules: Vec<_> = rule_names(cur.calculus(), strategy)
        .into_iter()
        .filter_map(rule_by_name)
        .collect();
    while trace.len() < max_steps {
        let mut advanced = false;
        for rule in &rules {
            let sites = find_matches(&cur, rule);
            if let Some(site) = sites.first() {
                if let Ok(next) = apply(&cur, site) {
                    trace.push(TraceStep::from(site));
                    cur = next;
                    advanced = true;
                    break;
                }
            }
        }
        if advanced {
            continue;
        }
        // explicit post-fusion normalization: boxes mod 4 pi, upside-down
        // boxes rewritten upright, ZX phases mod 2 pi
        if let Some(step) = normalize_step(&cur) {
            cur = normalize_angles(&cur);
            trace.push(step);
            continue;
        }
        if let Some((next, step)) = cancel_scalars(&cur) {
            cur = next;
            trace.push(step);
            continue;
        }
        break;
    }
    (cur, trace)
}

fn normalize_step(d: &Diagram) -> Option<TraceStep> {
    let needs: Vec<NodeId> = d
        .nodes()
        .filter(|(_, k)| match k {
            NodeKind::YBox { angle, flipped } => {
                *flipped
                    || !angle.equiv_mod_pi(&angle.reduced_mod_pi(4), 4)
                    || *angle != angle.reduced_mod_pi(4)
            }
            NodeKind::ZSpider(a) | NodeKind::XSpider(a) => *a != a.reduced_mod_pi(2),
            _ => false,
        })
        .map(|(id, _)| id)
        .collect();
    if needs.is_empty() {
        None
    } else {
        Some(TraceStep {
            rule: "normalize-angles".into(),
            nodes: needs,
            binding: Binding::none(),
        })
    }
}

/// Delete closed scalar components whose exact values multiply to one:
/// single value-1 components, and inverse pairs (the (IV) shape and the
/// minus-one pair among them).
fn cancel_scalars(d: &Diagram) -> Option<(Diagram, TraceStep)> {
    let comps = d.components();
    let opts = EvalOptions::default();
    let mut scalars: Vec<(Vec<NodeId>, Exact)> = Vec::new();
    for c in &comps {
        let sub = d.component_subdiagram(c);
        if sub.num_inputs() + sub.num_outputs() > 0 {
            continue;
        }
        if let Ok(t) = interpret_with::<Exact>(&sub, &opts) {
            scalars.push((c.clone(), t.data()[0]));
        }
    }
    let one = Exact::one();
    for (c, v) in &scalars {
        if *v == one {
            let mut out = d.clone();
            for n in c {
                out.remove_node(*n);
            }
            return Some((
                out,
                TraceStep {
                    rule: "scalar-one".into(),
                    nodes: c.clone(),
                    binding: Binding::none(),
                },
            ));
        }
    }
    for (i, (c1, v1)) in scalars.iter().enumerate() {
        for (c2, v2) in scalars.iter().skip(i + 1) {
            if v1.mul(v2) == one {
                let mut out = d.clone();
                for n in c1.iter().chain(c2.iter()) {
                    out.remove_node(*n);
                }
                let rule = if *v1 == Exact::from_int(-1) {
                    "Y.L:minus-one-squared"
                } else {
                    "Y.IV"
                };
                let mut nodes = c1.clone();
                nodes.extend(c2.iter().cloned());
                return Some((
                    out,
                    TraceStep {
                        rule: rule.into(),
                        nodes,
                        binding: Binding::none(),
                    },
                ));
            }
        }
    }
    None
}
