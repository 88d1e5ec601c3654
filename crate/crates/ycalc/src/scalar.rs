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

//! Scalar backends for tensor entries.
//!
//! The float backend is a complex `f64` pair. The exact backend is the ring
//! of numbers `(a + b sqrt2 + (c + d sqrt2) i) / 2^k` with integer
//! coefficients, normalized so that `k` is minimal. Real-stabiliser and
//! pi/2-fragment diagrams evaluate exactly in this ring; the imaginary part
//! stays zero on Y-diagrams.

use std::f64::consts::SQRT_2;
use std::fmt;

use num::complex::Complex64;

use crate::angle::Angle;
use crate::error::SemanticsError;

/// Exact ring element `(a + b sqrt2 + (c + d sqrt2) i) / 2^k`, `k` minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exact {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
    k: u32,
}

impl Exact {
    fn make(a: i128, b: i128, c: i128, d: i128, k: u32) -> Exact {
        let mut s = Exact { a, b, c, d, k };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.k > 0 && self.a % 2 == 0 && self.b % 2 == 0 && self.c % 2 == 0 && self.d % 2 == 0
        {
            self.a /= 2;
            self.b /= 2;
            self.c /= 2;
            self.d /= 2;
            self.k -= 1;
        }
        if self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0 {
            self.k = 0;
        }
    }

    pub fn zero() -> Exact {
        Exact::make(0, 0, 0, 0, 0)
    }

    pub fn one() -> Exact {
        Exact::make(1, 0, 0, 0, 0)
    }

    pub fn from_int(n: i64) -> Exact {
        Exact::make(n as i128, 0, 0, 0, 0)
    }

    pub fn sqrt2() -> Exact {
        Exact::make(0, 1, 0, 0, 0)
    }

    /// `1 / sqrt2 = sqrt2 / 2`.
    pub fn inv_sqrt2() -> Exact {
        Exact::make(0, 1, 0, 0, 1)
    }

    pub fn i() -> Exact {
        Exact::make(0, 0, 1, 0, 0)
    }

    /// `sqrt2 ^ p` for any integer power, positive or negative.
    pub fn sqrt2_pow(p: i32) -> Exact {
        let mut s = Exact::one();
        let step = if p >= 0 {
            Exact::sqrt2()
        } else {
            Exact::inv_sqrt2()
        };
        for _ in 0..p.unsigned_abs() {
            s = s.mul(&step);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    pub fn is_real(&self) -> bool {
        self.c == 0 && self.d == 0
    }

    pub fn add(&self, o: &Exact) -> Exact {
        let k = self.k.max(o.k);
        let ls = 1i128 << (k - self.k);
        let rs = 1i128 << (k - o.k);
        Exact::make(
            self.a * ls + o.a * rs,
            self.b * ls + o.b * rs,
            self.c * ls + o.c * rs,
            self.d * ls + o.d * rs,
            k,
        )
    }

    pub fn neg(&self) -> Exact {
        Exact::make(-self.a, -self.b, -self.c, -self.d, self.k)
    }

    pub fn mul(&self, o: &Exact) -> Exact {
        // (x1 + i y1)(x2 + i y2) with x = a + b sqrt2, y = c + d sqrt2
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (o.a, o.b, o.c, o.d);
        let re_a = a1 * a2 + 2 * b1 * b2 - (c1 * c2 + 2 * d1 * d2);
        let re_b = a1 * b2 + b1 * a2 - (c1 * d2 + d1 * c2);
        let im_c = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
        let im_d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
        Exact::make(re_a, re_b, im_c, im_d, self.k + o.k)
    }

    pub fn conj(&self) -> Exact {
        Exact::make(self.a, self.b, -self.c, -self.d, self.k)
    }

    pub fn re(&self) -> Exact {
        Exact::make(self.a, self.b, 0, 0, self.k)
    }

    pub fn im(&self) -> Exact {
        Exact::make(self.c, self.d, 0, 0, self.k)
    }

    pub fn to_complex(&self) -> Complex64 {
        let p = (2f64).powi(-(self.k as i32));
        Complex64::new(
            (self.a as f64 + self.b as f64 * SQRT_2) * p,
            (self.c as f64 + self.d as f64 * SQRT_2) * p,
        )
    }

    /// `cos(k pi/4)` as an exact element; defined for all integers.
    pub fn cos_quarter_pi(steps: i64) -> Exact {
        match steps.rem_euclid(8) {
            0 => Exact::one(),
            1 | 7 => Exact::inv_sqrt2(),
            2 | 6 => Exact::zero(),
            3 | 5 => Exact::inv_sqrt2().neg(),
            4 => Exact::one().neg(),
            _ => unreachable!(),
        }
    }

    /// `sin(k pi/4)` as an exact element.
    pub fn sin_quarter_pi(steps: i64) -> Exact {
        Exact::cos_quarter_pi(steps - 2)
    }

    /// `e^(i a)` for `a` an exact multiple of pi/2.
    pub fn phase(angle: &Angle) -> Result<Exact, SemanticsError> {
        let k = angle
            .as_half_pi_steps()
            .ok_or_else(|| SemanticsError::Fragment(angle.to_string()))?;
        Ok(match k.rem_euclid(4) {
            0 => Exact::one(),
            1 => Exact::i(),
            2 => Exact::one().neg(),
            3 => Exact::i().neg(),
            _ => unreachable!(),
        })
    }

    /// Rotation entries `cos(a/2)`, `sin(a/2)` for `a` a multiple of pi/2.
    pub fn half_angle_cos_sin(angle: &Angle) -> Result<(Exact, Exact), SemanticsError> {
        let k = angle
            .as_half_pi_steps()
            .ok_or_else(|| SemanticsError::Fragment(angle.to_string()))?;
        Ok((Exact::cos_quarter_pi(k), Exact::sin_quarter_pi(k)))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.a != 0 {
            parts.push(format!("{}", self.a));
        }
        if self.b != 0 {
            parts.push(format!("{}√2", self.b));
        }
        if self.c != 0 {
            parts.push(format!("{}i", self.c));
        }
        if self.d != 0 {
            parts.push(format!("{}√2i", self.d));
        }
        let joined = parts.join("+").replace("+-", "-");
        if self.k == 0 {
            write!(f, "{joined}")
        } else {
            write!(f, "{joined} / 2^{}", self.k)
        }
    }
}

/// Entry type usable by the dense tensor evaluator.
pub trait Coeff: Clone + PartialEq + fmt::Debug + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn approx(&self) -> Complex64;
    fn magnitude(&self) -> f64 {
        self.approx().norm()
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn approx(&self) -> Complex64 {
        *self
    }
}

impl Coeff for Exact {
    fn zero() -> Self {
        Exact::zero()
    }
    fn one() -> Self {
        Exact::one()
    }
    fn add(&self, o: &Self) -> Self {
        Exact::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Exact::mul(self, o)
    }
    fn neg(&self) -> Self {
        Exact::neg(self)
    }
    fn is_zero(&self) -> bool {
        Exact::is_zero(self)
    }
    fn approx(&self) -> Complex64 {
        self.to_complex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        let r2 = Exact::sqrt2();
        assert_eq!(r2.mul(&r2), Exact::from_int(2));
        assert_eq!(Exact::inv_sqrt2().mul(&r2), Exact::one());
        assert_eq!(Exact::i().mul(&Exact::i()), Exact::from_int(-1));
        let x = Exact::make(3, -1, 0, 2, 2);
        let y = Exact::make(-5, 7, 1, 0, 3);
        let lhs = x.mul(&y).to_complex();
        let rhs = x.to_complex() * y.to_complex();
        assert!((lhs - rhs).norm() < 1e-12);
        let s = x.add(&y).to_complex();
        assert!((s - (x.to_complex() + y.to_complex())).norm() < 1e-12);
    }

    #[test]
    fn normalization_is_canonical() {
        let a = Exact::make(2, 4, 0, 0, 1);
        let b = Exact::make(1, 2, 0, 0, 0);
        assert_eq!(a, b);
        assert_eq!(Exact::make(0, 0, 0, 0, 7), Exact::zero());
    }

    #[test]
    fn quarter_pi_table() {
        for k in -9..9i64 {
            let c = Exact::cos_quarter_pi(k).to_complex().re;
            let s = Exact::sin_quarter_pi(k).to_complex().re;
            let theta = k as f64 * std::f64::consts::FRAC_PI_4;
            assert!((c - theta.cos()).abs() < 1e-12, "cos at k={k}");
            assert!((s - theta.sin()).abs() < 1e-12, "sin at k={k}");
        }
    }

    #[test]
    fn phases() {
        assert_eq!(Exact::phase(&Angle::pi_over(2)).unwrap(), Exact::i());
        assert_eq!(Exact::phase(&Angle::pi()).unwrap(), Exact::from_int(-1));
        assert!(Exact::phase(&Angle::pi_over(4)).is_err());
    }

    #[test]
    fn display_shape() {
        let s = Exact::make(1, 1, 0, 0, 1);
        assert_eq!(format!("{s}"), "1+1√2 / 2^1");
    }
}
