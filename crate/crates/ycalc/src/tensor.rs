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

//! Dense multilinear maps over 2-dimensional wire indices.
//!
//! A `Tensor` with `m` output wires and `n` input wires is stored as the
//! `2^m x 2^n` matrix of its entries, row-major. Outputs index rows, inputs
//! index columns, and the most significant bit is the leftmost wire.

use std::fmt;

use num::complex::Complex64;

use crate::scalar::{Coeff, Exact};

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<C> {
    outs: usize,
    ins: usize,
    data: Vec<C>,
}

pub type TensorF = Tensor<Complex64>;
pub type TensorE = Tensor<Exact>;

impl<C: Coeff> Tensor<C> {
    pub fn new(outs: usize, ins: usize, data: Vec<C>) -> Tensor<C> {
        assert_eq!(data.len(), 1 << (outs + ins), "entry count mismatch");
        Tensor { outs, ins, data }
    }

    pub fn zeros(outs: usize, ins: usize) -> Tensor<C> {
        Tensor {
            outs,
            ins,
            data: vec![C::zero(); 1 << (outs + ins)],
        }
    }

    pub fn scalar(value: C) -> Tensor<C> {
        Tensor {
            outs: 0,
            ins: 0,
            data: vec![value],
        }
    }

    pub fn identity(wires: usize) -> Tensor<C> {
        let mut t = Tensor::zeros(wires, wires);
        for i in 0..(1 << wires) {
            *t.at_mut(i, i) = C::one();
        }
        t
    }

    pub fn outs(&self) -> usize {
        self.outs
    }

    pub fn ins(&self) -> usize {
        self.ins
    }

    pub fn data(&self) -> &[C] {
        &self.data
    }

    pub fn at(&self, row: usize, col: usize) -> &C {
        &self.data[row * (1 << self.ins) + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut C {
        &mut self.data[row * (1 << self.ins) + col]
    }

    /// Kronecker product: `self` on the left (most significant wires).
    pub fn kron(&self, other: &Tensor<C>) -> Tensor<C> {
        let outs = self.outs + other.outs;
        let ins = self.ins + other.ins;
        let mut t = Tensor::zeros(outs, ins);
        let (ro, co) = (1 << other.outs, 1 << other.ins);
        for r1 in 0..(1 << self.outs) {
            for c1 in 0..(1 << self.ins) {
                for r2 in 0..ro {
                    for c2 in 0..co {
                        *t.at_mut(r1 * ro + r2, c1 * co + c2) =
                            self.at(r1, c1).mul(other.at(r2, c2));
                    }
                }
            }
        }
        t
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn matmul(&self, other: &Tensor<C>) -> Tensor<C> {
        assert_eq!(self.ins, other.outs, "composition arity mismatch");
        let mut t = Tensor::zeros(self.outs, other.ins);
        for r in 0..(1 << self.outs) {
            for c in 0..(1 << other.ins) {
                let mut acc = C::zero();
                for k in 0..(1 << self.ins) {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                *t.at_mut(r, c) = acc;
            }
        }
        t
    }

    pub fn transpose(&self) -> Tensor<C> {
        let mut t = Tensor::zeros(self.ins, self.outs);
        for r in 0..(1 << self.outs) {
            for c in 0..(1 << self.ins) {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &C) -> Tensor<C> {
        Tensor {
            outs: self.outs,
            ins: self.ins,
            data: self.data.iter().map(|x| x.mul(s)).collect(),
        }
    }

    /// Entrywise sum of same-shaped tensors.
    pub fn add(&self, other: &Tensor<C>) -> Tensor<C> {
        assert_eq!(self.outs, other.outs);
        assert_eq!(self.ins, other.ins);
        Tensor {
            outs: self.outs,
            ins: self.ins,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Max-norm of the entrywise difference.
    pub fn max_diff(&self, other: &Tensor<C>) -> f64 {
        assert_eq!(self.outs, other.outs);
        assert_eq!(self.ins, other.ins);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a.approx() - b.approx()).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.magnitude()).fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> TensorF {
        TensorF {
            outs: self.outs,
            ins: self.ins,
            data: self.data.iter().map(|x| x.approx()).collect(),
        }
    }

    /// Plain matrix dump: one row per line, entries space-separated.
    pub fn dump_plain(&self) -> String
    where
        C: fmt::Display,
    {
        let mut s = String::new();
        for r in 0..(1 << self.outs) {
            let row: Vec<String> = (0..(1 << self.ins))
                .map(|c| format!("{}", self.at(r, c)))
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Structured dump with shape metadata header.
    pub fn dump_structured(&self, backend: &str) -> String
    where
        C: fmt::Display,
    {
        format!(
            "tensor {} {} {}\n{}",
            self.outs,
            self.ins,
            backend,
            self.dump_plain()
        )
    }
}

fn fmt_f64(x: f64) -> String {
    let r = (x * 1e12).round() / 1e12;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r}")
}

impl TensorF {
    /// Matrix dump with float noise below 1e-12 rounded away.
    pub fn dump_plain_rounded(&self) -> String {
        let mut s = String::new();
        for r in 0..(1 << self.outs) {
            let row: Vec<String> = (0..(1 << self.ins))
                .map(|c| {
                    let z = self.at(r, c);
                    if z.im.abs() < 5e-13 {
                        fmt_f64(z.re)
                    } else {
                        format!(
                            "{}{}{}i",
                            fmt_f64(z.re),
                            if z.im >= 0.0 { "+" } else { "-" },
                            fmt_f64(z.im.abs())
                        )
                    }
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Structured rounded dump with shape metadata.
    pub fn dump_structured_rounded(&self, backend: &str) -> String {
        format!(
            "tensor {} {} {}\n{}",
            self.outs,
            self.ins,
            backend,
            self.dump_plain_rounded()
        )
    }

    pub fn from_rows(outs: usize, ins: usize, rows: &[&[Complex64]]) -> TensorF {
        let mut data = Vec::with_capacity(1 << (outs + ins));
        for row in rows {
            assert_eq!(row.len(), 1 << ins);
            data.extend_from_slice(row);
        }
        Tensor::new(outs, ins, data)
    }

    pub fn from_real_rows(outs: usize, ins: usize, rows: &[&[f64]]) -> TensorF {
        let mut data = Vec::with_capacity(1 << (outs + ins));
        for row in rows {
            assert_eq!(row.len(), 1 << ins);
            data.extend(row.iter().map(|x| Complex64::new(*x, 0.0)));
        }
        Tensor::new(outs, ins, data)
    }

    /// Real and imaginary parts, both real-backed.
    pub fn re_im_split(&self) -> (TensorF, TensorF) {
        let re = TensorF {
            outs: self.outs,
            ins: self.ins,
            data: self
                .data
                .iter()
                .map(|z| Complex64::new(z.re, 0.0))
                .collect(),
        };
        let im = TensorF {
            outs: self.outs,
            ins: self.ins,
            data: self
                .data
                .iter()
                .map(|z| Complex64::new(z.im, 0.0))
                .collect(),
        };
        (re, im)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol)
    }
}

impl fmt::Display for TensorF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..(1 << self.outs) {
            let row: Vec<String> = (0..(1 << self.ins))
                .map(|c| {
                    let z = self.at(r, c);
                    if z.im.abs() < 1e-12 {
                        format!("{:.6}", z.re)
                    } else {
                        format!("{:.6}{:+.6}i", z.re, z.im)
                    }
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
