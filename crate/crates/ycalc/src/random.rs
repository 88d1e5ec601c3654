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

//! Seeded random diagram generation for the verification suites.
//!
//! Diagrams grow along a frontier of open wire ends, so every draw is a
//! valid open graph; cups, caps (as 2-legged spiders), parallel edges and
//! the occasional self-loop all occur.

use num::rational::Rational64;
use rand::Rng;

use crate::angle::{Angle, Fragment};
use crate::diagram::{Calculus, Diagram, End, NodeKind};

#[derive(Debug, Clone)]
pub struct RandomCfg {
    pub calculus: Calculus,
    /// Upper bound on inputs and on outputs separately.
    pub max_side_wires: usize,
    /// Interior node budget.
    pub max_nodes: usize,
    /// Angle restriction; `None` samples free and rational angles.
    pub fragment: Option<Fragment>,
    /// Allow HBox (and in Y-diagrams the pi-dots) as nodes.
    pub notations: bool,
}

impl RandomCfg {
    pub fn new(calculus: Calculus) -> RandomCfg {
        RandomCfg {
            calculus,
            max_side_wires: 3,
            max_nodes: 8,
            fragment: None,
            notations: true,
        }
    }

    pub fn wires(mut self, w: usize) -> RandomCfg {
        self.max_side_wires = w;
        self
    }

    pub fn nodes(mut self, n: usize) -> RandomCfg {
        self.max_nodes = n;
        self
    }

    pub fn fragment(mut self, f: Fragment) -> RandomCfg {
        self.fragment = Some(f);
        self
    }

    pub fn plain(mut self) -> RandomCfg {
        self.notations = false;
        self
    }
}

fn random_angle(cfg: &RandomCfg, rng: &mut impl Rng) -> Angle {
    match (cfg.calculus, cfg.fragment) {
        (Calculus::ZxReal, _) => {
            if rng.gen_bool(0.5) {
                Angle::zero()
            } else {
                Angle::pi()
            }
        }
        (_, Some(Fragment::Pi2N(n))) => {
            Angle::Rational(Rational64::new(rng.gen_range(-(4 * n)..=4 * n), 2 * n))
        }
        _ => {
            if rng.gen_bool(0.5) {
                Angle::free(rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI) * 2.0)
            } else {
                let den = [1i64, 2, 3, 4][rng.gen_range(0..4)];
                Angle::Rational(Rational64::new(rng.gen_range(-8..8), den))
            }
        }
    }
}

/// Draw a random valid diagram.
pub fn random_diagram(cfg: &RandomCfg, rng: &mut impl Rng) -> Diagram {
    let mut d = Diagram::empty(cfg.calculus);
    let n_in = rng.gen_range(0..=cfg.max_side_wires);
    let mut frontier: Vec<End> = (0..n_in).map(|_| End::new(d.add_input())).collect();

    let budget = rng.gen_range(1..=cfg.max_nodes);
    for _ in 0..budget {
        let op = rng.gen_range(0..100);
        match op {
            // spider with a..b frontier legs and fresh legs
            0..=44 => {
                let take = rng.gen_range(0..=frontier.len().min(2));
                let grow = rng.gen_range((take == 0) as usize..=2);
                let phase = match cfg.calculus {
                    Calculus::Y => Angle::zero(),
                    _ => random_angle(cfg, rng),
                };
                let kind = if rng.gen_bool(0.5) {
                    NodeKind::ZSpider(phase)
                } else {
                    NodeKind::XSpider(phase)
                };
                let s = d.add_node(kind);
                for _ in 0..take {
                    let idx = rng.gen_range(0..frontier.len());
                    let end = frontier.swap_remove(idx);
                    d.add_edge(end, End::new(s));
                }
                for _ in 0..grow {
                    frontier.push(End::new(s));
                }
            }
            // box on a wire (Y only)
            45..=69 if cfg.calculus == Calculus::Y => {
                if frontier.is_empty() {
                    continue;
                }
                let idx = rng.gen_range(0..frontier.len());
                let end = frontier.swap_remove(idx);
                let kind = if rng.gen_bool(0.8) {
                    NodeKind::ybox(random_angle(cfg, rng))
                } else {
                    NodeKind::ybox_flipped(random_angle(cfg, rng))
                };
                let b = d.add_node(kind);
                d.add_edge(end, End::ported(b, 0));
                frontier.push(End::ported(b, 1));
            }
            // Hadamard box on a wire
            45..=79 if cfg.notations || cfg.calculus != Calculus::Y => {
                if frontier.is_empty() {
                    continue;
                }
                let idx = rng.gen_range(0..frontier.len());
                let end = frontier.swap_remove(idx);
                let h = d.add_node(NodeKind::HBox);
                d.add_edge(end, End::ported(h, 0));
                frontier.push(End::ported(h, 1));
            }
            // pi-dot on a wire (Y notation)
            80..=84 if cfg.calculus == Calculus::Y && cfg.notations => {
                if frontier.is_empty() {
                    continue;
                }
                let idx = rng.gen_range(0..frontier.len());
                let end = frontier.swap_remove(idx);
                let k = if rng.gen_bool(0.5) {
                    NodeKind::PiDotG
                } else {
                    NodeKind::PiDotR
                };
                let p = d.add_node(k);
                d.add_edge(end, End::ported(p, 0));
                frontier.push(End::ported(p, 1));
            }
            // cup: join two frontier ends
            85..=92 => {
                if frontier.len() >= 2 {
                    let i = rng.gen_range(0..frontier.len());
                    let a = frontier.swap_remove(i);
                    let j = rng.gen_range(0..frontier.len());
                    let b = frontier.swap_remove(j);
                    d.add_edge(a, b);
                }
            }
            // cap: a bent wire, as a 2-legged phaseless spider
            _ => {
                if frontier.len() + 2 <= 2 * cfg.max_side_wires {
                    let s = d.add_node(NodeKind::zspider0());
                    frontier.push(End::new(s));
                    frontier.push(End::new(s));
                }
            }
        }
    }

    // close the frontier with outputs, within the wire budget
    while frontier.len() > cfg.max_side_wires {
        let i = rng.gen_range(0..frontier.len());
        let a = frontier.swap_remove(i);
        if frontier.is_empty() {
            // terminate on a dot instead
            let s = d.add_node(NodeKind::zspider0());
            d.add_edge(a, End::new(s));
            break;
        }
        let j = rng.gen_range(0..frontier.len());
        let b = frontier.swap_remove(j);
        d.add_edge(a, b);
    }
    for end in frontier {
        let o = d.add_output();
        d.add_edge(end, End::new(o));
    }
    debug_assert!(d.validate().is_empty(), "{:?}", d.validate());
    d
}

/// A random real matrix with entries in [-1, 1], shape 2^m x 2^n.
pub fn random_real_matrix(m: usize, n: usize, rng: &mut impl Rng) -> Vec<Vec<f64>> {
    (0..(1 << m))
        .map(|_| (0..(1 << n)).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect()
}
