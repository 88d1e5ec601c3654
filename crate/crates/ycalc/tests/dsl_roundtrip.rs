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

//! Serialization round trips on random diagrams.

use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ycalc::diagram::Calculus;
use ycalc::dsl::{parse, print, print_diagram};
use ycalc::random::{random_diagram, RandomCfg};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// parse . print is the identity on diagrams, node ids included.
    #[test]
    fn parse_print_roundtrip(seed in any::<u64>(), which in 0..3usize) {
        let calculus = [Calculus::Y, Calculus::Zx, Calculus::ZxReal][which];
        let cfg = RandomCfg::new(calculus).wires(3).nodes(10);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&cfg, &mut rng);
        let text = print_diagram(&d);
        let doc = parse(&text).unwrap();
        prop_assert_eq!(&doc.diagram, &d);
        // and printing again is byte-identical
        prop_assert_eq!(print(&doc), text);
    }

    /// Serialization preserves the semantics, not just the structure.
    #[test]
    fn roundtrip_preserves_semantics(seed in any::<u64>()) {
        let cfg = RandomCfg::new(Calculus::Y).wires(2).nodes(8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&cfg, &mut rng);
        let doc = parse(&print_diagram(&d)).unwrap();
        let a = ycalc::semantics::interpret(&d).unwrap();
        let b = ycalc::semantics::interpret(&doc.diagram).unwrap();
        prop_assert!(a.max_diff(&b) < 1e-12);
    }
}
