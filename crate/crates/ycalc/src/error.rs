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

use thiserror::Error;

use crate::diagram::{Calculus, NodeId};

/// Errors raised while constructing or combining diagrams.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagramError {
    #[error("illegal arity for generator: {0}")]
    IllegalArity(String),
    #[error("calculus mismatch: {0:?} vs {1:?}")]
    CalculusMismatch(Calculus, Calculus),
    #[error("composition arity mismatch: {outputs} outputs vs {inputs} inputs")]
    CompositionArity { outputs: usize, inputs: usize },
    #[error("diagram fails validation: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("operation requires a {expected:?} diagram, got {got:?}")]
    WrongCalculus { expected: Calculus, got: Calculus },
}

/// A single validation failure, with the offending nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub nodes: Vec<NodeId>,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (nodes {:?})", self.message, self.nodes)
    }
}

/// Errors raised by tensor evaluation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SemanticsError {
    #[error("exact backend cannot represent angle {0}")]
    Fragment(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("boundary arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Errors raised by nonstandard model evaluation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("model {model} does not cover generator: {generator}")]
    Uncovered { model: String, generator: String },
    #[error("angle {angle} outside the {model} fragment")]
    OutOfFragment { model: String, angle: String },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Errors raised by rewrite-rule machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum RuleError {
    #[error("stale match site: diagram changed since the site was found")]
    StaleSite,
    #[error("rule {0} has no matcher for this diagram")]
    NoMatcher(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Errors raised by the translation functors.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TranslateError {
    #[error("angle {0} outside the translation fragment")]
    Fragment(String),
    #[error("phase {0} is not in {{0, pi}}")]
    NotRealStabPhase(String),
    #[error("generator image table failed its contract: {0}")]
    ImageContract(String),
    #[error("matrix shape {rows}x{cols} is not a power of two")]
    BadShape { rows: usize, cols: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Errors raised by the text-format parser.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("parsed diagram fails validation: {0}")]
    Invalid(String),
}
