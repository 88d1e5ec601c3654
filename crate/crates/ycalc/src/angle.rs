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

//! Angles parametrising boxes and spider phases.
//!
//! An [`Angle`] is either an exact rational multiple of pi, kept in lowest
//! terms, or a free real number of radians. The rational form is what the
//! exact scalar backend and the fragment machinery operate on; the free form
//! is an escape hatch for angles like `1.0` rad that are not rational
//! multiples of pi.

use std::f64::consts::PI;
use std::fmt;

use num::rational::Rational64;
use num::{One, Signed, Zero};

/// An angle: an exact rational multiple of pi, or a free real in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum Angle {
    /// `Rational(r)` stands for the angle `r * pi`.
    Rational(Rational64),
    /// Radians, used only when the angle is not a rational multiple of pi.
    Free(f64),
}

/// The smallest angle fragment containing a given angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fragment {
    /// Multiples of `pi / (2n)`. `Pi2N(1)` is the pi/2 fragment, `Pi2N(2)`
    /// the pi/4 fragment, and so on.
    Pi2N(i64),
    /// Not a rational multiple of pi.
    Free,
}

impl Fragment {
    /// True when every angle of `self` belongs to `other`.
    pub fn within(self, other: Fragment) -> bool {
        match (self, other) {
            (_, Fragment::Free) => true,
            (Fragment::Free, _) => false,
            // multiples of pi/(2a) all lie in pi/(2b) iff a divides b
            (Fragment::Pi2N(a), Fragment::Pi2N(b)) => b % a == 0,
        }
    }

    /// Least fragment containing both.
    pub fn join(self, other: Fragment) -> Fragment {
        match (self, other) {
            (Fragment::Free, _) | (_, Fragment::Free) => Fragment::Free,
            (Fragment::Pi2N(a), Fragment::Pi2N(b)) => Fragment::Pi2N(num::integer::lcm(a, b)),
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fragment::Pi2N(n) => write!(f, "pi/{}", 2 * n),
            Fragment::Free => write!(f, "free"),
        }
    }
}

impl Angle {
    pub fn zero() -> Angle {
        Angle::Rational(Rational64::zero())
    }

    pub fn pi() -> Angle {
        Angle::Rational(Rational64::one())
    }

    /// `pi / d`.
    pub fn pi_over(d: i64) -> Angle {
        Angle::Rational(Rational64::new(1, d))
    }

    /// `(n/d) * pi`.
    pub fn rational(n: i64, d: i64) -> Angle {
        Angle::Rational(Rational64::new(n, d))
    }

    pub fn free(radians: f64) -> Angle {
        Angle::Free(radians)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Angle::Rational(r) => r.is_zero(),
            Angle::Free(x) => *x == 0.0,
        }
    }

    /// The angle in radians.
    pub fn radians(&self) -> f64 {
        match self {
            Angle::Rational(r) => PI * (*r.numer() as f64) / (*r.denom() as f64),
            Angle::Free(x) => *x,
        }
    }

    /// The rational part, when the angle is an exact multiple of pi.
    pub fn as_rational(&self) -> Option<Rational64> {
        match self {
            Angle::Rational(r) => Some(*r),
            Angle::Free(_) => None,
        }
    }

    /// When the angle is an exact multiple of pi/2, the integer `k` with
    /// `self = k * pi/2` (not reduced modulo anything).
    pub fn as_half_pi_steps(&self) -> Option<i64> {
        match self {
            Angle::Rational(r) => {
                let doubled = r * Rational64::from_integer(2);
                if doubled.denom().is_one() {
                    Some(*doubled.numer())
                } else {
                    None
                }
            }
            Angle::Free(_) => None,
        }
    }

    /// Smallest pi/(2n) fragment containing the angle, or `Free`.
    pub fn fragment(&self) -> Fragment {
        match self {
            Angle::Rational(r) => {
                let q = *r.denom();
                if q % 2 == 0 {
                    Fragment::Pi2N(q / 2)
                } else {
                    Fragment::Pi2N(q)
                }
            }
            Angle::Free(_) => Fragment::Free,
        }
    }

    /// Reduce into `[0, m*pi)`. Boxes are reduced modulo 4 pi (`m = 4`),
    /// ZX phases modulo 2 pi (`m = 2`).
    pub fn reduced_mod_pi(&self, m: i64) -> Angle {
        match self {
            Angle::Rational(r) => {
                let m = Rational64::from_integer(m);
                let mut x = *r % m;
                if x.is_negative() {
                    x += m;
                }
                Angle::Rational(x)
            }
            Angle::Free(x) => {
                let m = m as f64 * PI;
                Angle::Free(x.rem_euclid(m))
            }
        }
    }

    /// Structural equality after reduction modulo `m * pi`.
    pub fn equiv_mod_pi(&self, other: &Angle, m: i64) -> bool {
        match (self.reduced_mod_pi(m), other.reduced_mod_pi(m)) {
            (Angle::Rational(a), Angle::Rational(b)) => a == b,
            (a, b) => (a.radians() - b.radians()).abs() < 1e-12,
        }
    }

    pub fn scale(&self, k: i64) -> Angle {
        match self {
            Angle::Rational(r) => Angle::Rational(r * Rational64::from_integer(k)),
            Angle::Free(x) => Angle::Free(x * k as f64),
        }
    }

    pub fn half(&self) -> Angle {
        match self {
            Angle::Rational(r) => Angle::Rational(r / Rational64::from_integer(2)),
            Angle::Free(x) => Angle::Free(x / 2.0),
        }
    }
}

impl std::ops::Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        match (self, rhs) {
            (Angle::Rational(a), Angle::Rational(b)) => Angle::Rational(a + b),
            (a, b) => Angle::Free(a.radians() + b.radians()),
        }
    }
}

impl std::ops::Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        self + (-rhs)
    }
}

impl std::ops::Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        match self {
            Angle::Rational(r) => Angle::Rational(-r),
            Angle::Free(x) => Angle::Free(-x),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Rational(r) => {
                if r.is_zero() {
                    write!(f, "0")
                } else if r.denom().is_one() {
                    write!(f, "{}pi", r.numer())
                } else {
                    write!(f, "{}pi/{}", r.numer(), r.denom())
                }
            }
            Angle::Free(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_fragment() {
        let a = Angle::rational(2, 4);
        assert_eq!(a, Angle::pi_over(2));
        assert_eq!(a.fragment(), Fragment::Pi2N(1));
        assert_eq!(Angle::rational(1, 3).fragment(), Fragment::Pi2N(3));
        assert_eq!(Angle::rational(3, 4).fragment(), Fragment::Pi2N(2));
        assert_eq!(Angle::pi().fragment(), Fragment::Pi2N(1));
        assert_eq!(Angle::free(1.0).fragment(), Fragment::Free);
    }

    #[test]
    fn reduction() {
        let a = Angle::rational(9, 2); // 9 pi/2
        assert_eq!(a.reduced_mod_pi(4), Angle::pi_over(2));
        let b = Angle::rational(-1, 1);
        assert_eq!(b.reduced_mod_pi(4), Angle::rational(3, 1));
        assert_eq!(Angle::rational(2, 1).reduced_mod_pi(2), Angle::zero());
    }

    #[test]
    fn half_pi_steps() {
        assert_eq!(Angle::rational(3, 2).as_half_pi_steps(), Some(3));
        assert_eq!(Angle::pi().as_half_pi_steps(), Some(2));
        assert_eq!(Angle::pi_over(4).as_half_pi_steps(), None);
    }

    #[test]
    fn fragment_lattice() {
        // the pi/2 fragment sits inside the pi/4 fragment, not the reverse
        assert!(Fragment::Pi2N(1).within(Fragment::Pi2N(2)));
        assert!(!Fragment::Pi2N(2).within(Fragment::Pi2N(1)));
        assert!(Fragment::Pi2N(3).within(Fragment::Free));
        assert_eq!(Fragment::Pi2N(2).join(Fragment::Pi2N(3)), Fragment::Pi2N(6));
    }
}
