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

//! The Y-calculus and the ZX-calculus as executable diagram languages.
//!
//! Diagrams are open graphs with ordered boundaries; evaluation gives dense
//! tensors over a float or an exact sqrt2-ring backend. The crate carries
//! the full rewrite-rule sets of both calculi with machine-checked
//! soundness, the four translation functors between them, and the
//! nonstandard interpretations that certify which rules are underivable
//! from the rest.

pub mod angle;
pub mod diagram;
pub mod dsl;
pub mod error;
pub mod models;
pub mod notation;
pub mod random;
pub mod rules;
pub mod scalar;
pub mod semantics;
pub mod tensor;
pub mod translate;
pub mod verify;

pub use angle::{Angle, Fragment};
pub use diagram::{Calculus, Diagram, GraphBuilder, NodeId, NodeKind};
pub use scalar::Exact;
pub use semantics::{equal_semantics, interpret, interpret_exact};
pub use tensor::{Tensor, TensorE, TensorF};
