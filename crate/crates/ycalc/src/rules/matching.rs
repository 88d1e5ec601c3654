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

//! Structural matching and in-place application of rewrites.
//!
//! The matchers cover the structural rules the simplifier and the worked
//! examples use (fusions, identity removal, copy, bialgebra, Hopf, the
//! inverse-scalar pair, Hadamard loops). Family rules indexed by a
//! parameter and the scalar-absorption rules are applied by instantiation
//! through [`super::RewriteRule::build_sides`] instead; for those
//! `find_matches` returns no sites.

use crate::angle::Angle;
use crate::diagram::{Diagram, End, NodeId, NodeKind};
use crate::error::RuleError;
use crate::notation::{append_scalar, ScalarGadget};

use super::{Binding, Lemma, RewriteRule, RuleKind, Variant};

/// An embedding of a rule pattern into a host diagram.
#[derive(Debug, Clone)]
pub struct MatchSite {
    pub rule: String,
    pub variant: Variant,
    /// Matched interior nodes, pattern order.
    pub nodes: Vec<NodeId>,
    pub binding: Binding,
    pub(crate) host_hash: u64,
}

fn site(rule: &RewriteRule, nodes: Vec<NodeId>, binding: Binding, d: &Diagram) -> MatchSite {
    MatchSite {
        rule: rule.name.clone(),
        variant: Variant::Base,
        nodes,
        binding,
        host_hash: d.content_hash(),
    }
}

fn is_spider(k: &NodeKind) -> Option<(bool, Angle)> {
    match k {
        NodeKind::ZSpider(a) => Some((true, *a)),
        NodeKind::XSpider(a) => Some((false, *a)),
        _ => None,
    }
}

/// Number of edges joining `u` and `v` (self-loops not counted).
fn edges_between(d: &Diagram, u: NodeId, v: NodeId) -> usize {
    d.edges()
        .iter()
        .filter(|e| (e.0.node == u && e.1.node == v) || (e.0.node == v && e.1.node == u))
        .filter(|e| e.0.node != e.1.node)
        .count()
}

fn self_loops(d: &Diagram, u: NodeId) -> usize {
    d.edges()
        .iter()
        .filter(|e| e.0.node == u && e.1.node == u)
        .count()
}

/// All injective embeddings of the rule's pattern, sorted by node ids.
pub fn find_matches(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    if rule.calculus != d.calculus() {
        return Vec::new();
    }
    let mut out = match rule.kind {
        RuleKind::SpiderFusion => fusion_sites(d, rule),
        RuleKind::IdentitySpider | RuleKind::CupSpider => identity_sites(d, rule),
        RuleKind::BoxFusion | RuleKind::Lemma(Lemma::BoxFusionUpright) => box_fusion_sites(d, rule),
        RuleKind::Copy => copy_sites(d, rule),
        RuleKind::Bialgebra => bialgebra_sites(d, rule),
        RuleKind::InverseScalars => inverse_scalar_sites(d, rule),
        RuleKind::HLoop => h_loop_sites(d, rule),
        RuleKind::Lemma(Lemma::Hopf) | RuleKind::Lemma(Lemma::ZxHopf) => hopf_sites(d, rule),
        _ => Vec::new(),
    };
    out.sort_by(|a, b| a.nodes.cmp(&b.nodes));
    out
}

/// Apply a previously found site. Fails when the diagram changed since.
pub fn apply(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    if s.host_hash != d.content_hash() {
        return Err(RuleError::StaleSite);
    }
    let rule = super::rule_by_name(&s.rule).ok_or_else(|| RuleError::NoMatcher(s.rule.clone()))?;
    let out = match rule.kind {
        RuleKind::SpiderFusion => apply_fusion(d, s),
        RuleKind::IdentitySpider | RuleKind::CupSpider => apply_identity(d, s),
        RuleKind::BoxFusion | RuleKind::Lemma(Lemma::BoxFusionUpright) => apply_box_fusion(d, s),
        RuleKind::Copy => apply_copy(d, s),
        RuleKind::Bialgebra => apply_bialgebra(d, s),
        RuleKind::InverseScalars => apply_delete_components(d, s),
        RuleKind::HLoop => apply_h_loop(d, s),
        RuleKind::Lemma(Lemma::Hopf) | RuleKind::Lemma(Lemma::ZxHopf) => apply_hopf(d, s),
        _ => return Err(RuleError::NoMatcher(s.rule.clone())),
    }?;
    debug_assert!(out.validate().is_empty(), "{:?}", out.validate());
    Ok(out)
}

// ---- spider fusion ----

fn fusion_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    let spiders: Vec<(NodeId, bool, Angle)> = d
        .interior_nodes()
        .filter_map(|(id, k)| is_spider(k).map(|(g, a)| (id, g, a)))
        .collect();
    for (i, (u, gu, pu)) in spiders.iter().enumerate() {
        for (v, gv, pv) in spiders.iter().skip(i + 1) {
            if gu == gv && edges_between(d, *u, *v) >= 1 {
                out.push(site(
                    rule,
                    vec![*u, *v],
                    Binding {
                        angles: vec![*pu, *pv],
                        nums: vec![],
                    },
                    d,
                ));
            }
        }
    }
    out
}

fn apply_fusion(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (u, v) = (s.nodes[0], s.nodes[1]);
    let mut out = d.clone();
    let (green, pu) = is_spider(d.kind(u).unwrap()).unwrap();
    let (_, pv) = is_spider(d.kind(v).unwrap()).unwrap();
    // drop the connecting wires, then pull v's remaining legs onto u
    let mut edges: Vec<_> = out.edges().to_vec();
    edges.retain(|e| !((e.0.node == u && e.1.node == v) || (e.0.node == v && e.1.node == u)));
    for e in edges.iter_mut() {
        if e.0.node == v {
            e.0.node = u;
        }
        if e.1.node == v {
            e.1.node = u;
        }
    }
    out.set_edges(edges);
    out.remove_node(v);
    let phase = (pu + pv).reduced_mod_pi(2);
    out.replace_kind(
        u,
        if green {
            NodeKind::ZSpider(phase)
        } else {
            NodeKind::XSpider(phase)
        },
    );
    Ok(out)
}

// ---- identity spider removal ----

fn identity_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    for (id, k) in d.interior_nodes() {
        if let Some((_, phase)) = is_spider(k) {
            if phase.is_zero() && d.degree(id) == 2 && self_loops(d, id) == 0 {
                out.push(site(rule, vec![id], Binding::none(), d));
            }
        }
    }
    out
}

fn apply_identity(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let n = s.nodes[0];
    let mut out = d.clone();
    let inc = out.incident_edges(n);
    debug_assert_eq!(inc.len(), 2);
    let (e1, e2) = (out.edges()[inc[0]], out.edges()[inc[1]]);
    let a = e1.other(n).expect("incident");
    let b = e2.other(n).expect("incident");
    out.remove_node(n);
    out.add_edge(a, b);
    Ok(out)
}

// ---- box fusion ----

/// Effective upright angle of a box when traversed entering at `enter`.
fn traversal_angle(k: &NodeKind, enter: u8) -> Angle {
    match k {
        NodeKind::YBox { angle, flipped } => {
            let a = if *flipped { -*angle } else { *angle };
            if enter == 0 {
                a
            } else {
                -a
            }
        }
        _ => unreachable!("box expected"),
    }
}

fn box_fusion_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    let boxes: Vec<NodeId> = d
        .interior_nodes()
        .filter(|(_, k)| matches!(k, NodeKind::YBox { .. }))
        .map(|(id, _)| id)
        .collect();
    for (i, u) in boxes.iter().enumerate() {
        for v in boxes.iter().skip(i + 1) {
            if edges_between(d, *u, *v) >= 1 {
                let au = d.kind(*u).unwrap().angle().unwrap();
                let av = d.kind(*v).unwrap().angle().unwrap();
                out.push(site(
                    rule,
                    vec![*u, *v],
                    Binding {
                        angles: vec![au, av],
                        nums: vec![],
                    },
                    d,
                ));
            }
        }
    }
    out
}

fn apply_box_fusion(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (u, v) = (s.nodes[0], s.nodes[1]);
    let mut out = d.clone();
    // the connecting edge, and each box's outside end
    let conn = out
        .edges()
        .iter()
        .position(|e| (e.0.node == u && e.1.node == v) || (e.0.node == v && e.1.node == u))
        .expect("connected boxes");
    let e = out.edges()[conn];
    let (end_u, end_v) = if e.0.node == u {
        (e.0, e.1)
    } else {
        (e.1, e.0)
    };
    // traverse from u's outside through u, then through v to v's outside
    let exit_u = end_u.port.unwrap();
    let enter_v = end_v.port.unwrap();
    let ang = traversal_angle(d.kind(u).unwrap(), 1 - exit_u)
        + traversal_angle(d.kind(v).unwrap(), enter_v);

    let out_u: Vec<(usize, End)> = outside_slots(&out, u, conn);
    let out_v: Vec<(usize, End)> = outside_slots(&out, v, conn);
    let merged = NodeKind::ybox(ang);
    let mut edges: Vec<_> = out.edges().to_vec();
    edges.remove(conn);
    out.set_edges(edges);
    out.remove_node(u);
    out.remove_node(v);
    let nb = out.add_node(merged);
    match (out_u.first(), out_v.first()) {
        (Some((_, eu)), Some((_, ev))) => {
            out.add_edge(*eu, End::ported(nb, 0));
            out.add_edge(End::ported(nb, 1), *ev);
        }
        (None, None) => {
            // both boxes were joined on both sides: the merged box closes
            // into a loop
            out.add_edge(End::ported(nb, 0), End::ported(nb, 1));
        }
        _ => unreachable!("boxes have degree 2"),
    }
    Ok(out)
}

/// The slots of box `n` not using edge `skip`: (edge index, far end).
fn outside_slots(d: &Diagram, n: NodeId, skip: usize) -> Vec<(usize, End)> {
    let mut out = Vec::new();
    for (i, e) in d.edges().iter().enumerate() {
        if i == skip {
            continue;
        }
        if e.0.node == n {
            out.push((i, e.1));
        } else if e.1.node == n {
            out.push((i, e.0));
        }
    }
    out
}

// ---- copy (B1) ----

fn copy_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    for (dot, kd) in d.interior_nodes() {
        let Some((dot_green, p)) = is_spider(kd) else {
            continue;
        };
        if !p.is_zero() || d.degree(dot) != 1 {
            continue;
        }
        for (sp, ks) in d.interior_nodes() {
            let Some((sp_green, q)) = is_spider(ks) else {
                continue;
            };
            if sp_green == dot_green || !q.is_zero() {
                continue;
            }
            if d.degree(sp) == 3 && edges_between(d, dot, sp) == 1 {
                out.push(site(rule, vec![dot, sp], Binding::none(), d));
            }
        }
    }
    out
}

fn apply_copy(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (dot, sp) = (s.nodes[0], s.nodes[1]);
    let dot_kind = *d.kind(dot).unwrap();
    let mut out = d.clone();
    let legs: Vec<End> = out
        .edges()
        .iter()
        .filter(|e| e.touches(sp) && !e.touches(dot))
        .map(|e| e.other(sp).unwrap())
        .collect();
    out.remove_node(dot);
    out.remove_node(sp);
    for leg in legs {
        let nd = out.add_node(dot_kind);
        out.add_edge(End::new(nd), leg);
    }
    append_scalar(&mut out, ScalarGadget::InvSqrt2);
    Ok(out)
}

// ---- bialgebra (B2) ----

fn bialgebra_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    for (g, kg) in d.interior_nodes() {
        let Some((true, pg)) = is_spider(kg) else {
            continue;
        };
        if !pg.is_zero() || d.degree(g) != 3 {
            continue;
        }
        for (r, kr) in d.interior_nodes() {
            let Some((false, pr)) = is_spider(kr) else {
                continue;
            };
            if !pr.is_zero() || d.degree(r) != 3 {
                continue;
            }
            if edges_between(d, g, r) == 1 {
                out.push(site(rule, vec![g, r], Binding::none(), d));
            }
        }
    }
    out
}

fn apply_bialgebra(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (g, r) = (s.nodes[0], s.nodes[1]);
    let mut out = d.clone();
    let g_legs: Vec<End> = out
        .edges()
        .iter()
        .filter(|e| e.touches(g) && !e.touches(r))
        .map(|e| e.other(g).unwrap())
        .collect();
    let r_legs: Vec<End> = out
        .edges()
        .iter()
        .filter(|e| e.touches(r) && !e.touches(g))
        .map(|e| e.other(r).unwrap())
        .collect();
    out.remove_node(g);
    out.remove_node(r);
    let reds: Vec<NodeId> = g_legs
        .iter()
        .map(|leg| {
            let n = out.add_node(NodeKind::xspider0());
            out.add_edge(End::new(n), *leg);
            n
        })
        .collect();
    let greens: Vec<NodeId> = r_legs
        .iter()
        .map(|leg| {
            let n = out.add_node(NodeKind::zspider0());
            out.add_edge(End::new(n), *leg);
            n
        })
        .collect();
    for ri in &reds {
        for gj in &greens {
            out.add_edge(End::new(*ri), End::new(*gj));
        }
    }
    append_scalar(&mut out, ScalarGadget::Sqrt2);
    Ok(out)
}

// ---- inverse scalars (IV) ----

/// Recognize a closed component as the sqrt2 or 1/sqrt2 gadget.
fn scalar_shape(d: &Diagram, comp: &[NodeId]) -> Option<ScalarGadget> {
    if comp.len() != 2 {
        return None;
    }
    let (a, b) = (comp[0], comp[1]);
    let (ka, kb) = (d.kind(a)?, d.kind(b)?);
    let green_red = matches!(
        (is_spider(ka), is_spider(kb)),
        (Some((true, _)), Some((false, _))) | (Some((false, _)), Some((true, _)))
    );
    let phases_zero = ka.angle().map(|x| x.is_zero()).unwrap_or(false)
        && kb.angle().map(|x| x.is_zero()).unwrap_or(false);
    if !green_red || !phases_zero {
        return None;
    }
    match edges_between(d, a, b) {
        1 if d.degree(a) == 1 && d.degree(b) == 1 => Some(ScalarGadget::Sqrt2),
        3 if d.degree(a) == 3 && d.degree(b) == 3 => Some(ScalarGadget::InvSqrt2),
        _ => None,
    }
}

fn inverse_scalar_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let comps = d.components();
    let mut sqrt2s = Vec::new();
    let mut invs = Vec::new();
    for c in &comps {
        match scalar_shape(d, c) {
            Some(ScalarGadget::Sqrt2) => sqrt2s.push(c.clone()),
            Some(ScalarGadget::InvSqrt2) => invs.push(c.clone()),
            _ => {}
        }
    }
    let mut out = Vec::new();
    for s2 in &sqrt2s {
        for inv in &invs {
            let mut nodes = s2.clone();
            nodes.extend(inv.iter().cloned());
            out.push(site(rule, nodes, Binding::none(), d));
        }
    }
    out
}

fn apply_delete_components(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let mut out = d.clone();
    for n in &s.nodes {
        out.remove_node(*n);
    }
    Ok(out)
}

// ---- Hadamard loop (HL) ----

fn h_loop_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    for (h, kh) in d.interior_nodes() {
        if !matches!(kh, NodeKind::HBox) {
            continue;
        }
        let inc = d.incident_edges(h);
        if inc.len() != 2 {
            continue;
        }
        let n0 = d.edges()[inc[0]].other(h).unwrap().node;
        let n1 = d.edges()[inc[1]].other(h).unwrap().node;
        if n0 != n1 {
            continue;
        }
        if let Some((_, phase)) = d.kind(n0).and_then(is_spider) {
            out.push(site(
                rule,
                vec![n0, h],
                Binding {
                    angles: vec![phase],
                    nums: vec![],
                },
                d,
            ));
        }
    }
    out
}

fn apply_h_loop(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (sp, h) = (s.nodes[0], s.nodes[1]);
    let mut out = d.clone();
    let (green, phase) = is_spider(d.kind(sp).unwrap()).unwrap();
    out.remove_node(h);
    let phase = (phase + Angle::pi()).reduced_mod_pi(2);
    out.replace_kind(
        sp,
        if green {
            NodeKind::ZSpider(phase)
        } else {
            NodeKind::XSpider(phase)
        },
    );
    append_scalar(&mut out, ScalarGadget::InvSqrt2);
    Ok(out)
}

// ---- Hopf (parallel edge pair elimination) ----

fn hopf_sites(d: &Diagram, rule: &RewriteRule) -> Vec<MatchSite> {
    let mut out = Vec::new();
    let spiders: Vec<(NodeId, bool)> = d
        .interior_nodes()
        .filter_map(|(id, k)| is_spider(k).map(|(g, a)| (id, g, a)))
        .filter(|(_, _, a)| a.is_zero())
        .map(|(id, g, _)| (id, g))
        .collect();
    for (i, (u, gu)) in spiders.iter().enumerate() {
        for (v, gv) in spiders.iter().skip(i + 1) {
            if gu == gv {
                continue;
            }
            let k = edges_between(d, *u, *v);
            // skip pure scalar gadgets so the rewrite terminates
            if k >= 2 && (d.degree(*u) > k || d.degree(*v) > k) {
                out.push(site(rule, vec![*u, *v], Binding::none(), d));
            }
        }
    }
    out
}

fn apply_hopf(d: &Diagram, s: &MatchSite) -> Result<Diagram, RuleError> {
    let (u, v) = (s.nodes[0], s.nodes[1]);
    let mut out = d.clone();
    let mut removed = 0;
    let mut edges: Vec<_> = out.edges().to_vec();
    edges.retain(|e| {
        let conn = (e.0.node == u && e.1.node == v) || (e.0.node == v && e.1.node == u);
        if conn && removed < 2 {
            removed += 1;
            false
        } else {
            true
        }
    });
    out.set_edges(edges);
    append_scalar(&mut out, ScalarGadget::InvSqrt2);
    append_scalar(&mut out, ScalarGadget::InvSqrt2);
    Ok(out)
}
