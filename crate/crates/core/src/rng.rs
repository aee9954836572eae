//! Seeded deterministic generation of small-integer test data. The stream is
//! pinned to ChaCha8 so that identical (seed, samples) configurations produce
//! byte-identical reports on every platform.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::form::Form;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::polyform::{PolyForm, PolyVectorForm};
use crate::scalar::Scalar;

/// Generator name recorded in reports.
pub const RNG_ID: &str = "chacha8-int9/v1";

pub struct SmallRng {
    rng: ChaCha8Rng,
}

impl SmallRng {
    pub fn new(seed: u64) -> Self {
        SmallRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform-ish integer in [-9, 9].
    pub fn int(&mut self) -> i64 {
        (self.rng.next_u32() % 19) as i64 - 9
    }

    pub fn nonzero_int(&mut self) -> i64 {
        loop {
            let v = self.int();
            if v != 0 {
                return v;
            }
        }
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u32;
        (self.rng.next_u32() % span) as i64 + lo
    }

    pub fn scalar(&mut self) -> Scalar {
        Scalar::from_int(self.int())
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Scalar> {
        loop {
            let v = self.vector(n);
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    pub fn nonzero_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        loop {
            let m = self.matrix(rows, cols);
            if !m.is_zero() {
                return m;
            }
        }
    }

    pub fn form(&mut self, n: u8, k: u8) -> Form {
        let mut f = Form::zero(n, k);
        let len = f.coeffs().len();
        let table = crate::basis::basis(n, k);
        for r in 0..len {
            f.set_coeff(table.tuple(r), self.scalar());
        }
        f
    }

    /// Invertible integer matrix with determinant ±1, built from shears and
    /// signed swaps.
    pub fn unimodular(&mut self, n: usize, steps: usize) -> Matrix {
        let mut m = Matrix::identity(n);
        for _ in 0..steps {
            let i = self.int_in(0, n as i64 - 1) as usize;
            let mut j = self.int_in(0, n as i64 - 1) as usize;
            if i == j {
                j = (j + 1) % n;
            }
            let c = Scalar::from_int(self.int_in(-2, 2));
            for col in 0..n {
                let v = m.get(i, col) + &(&c * m.get(j, col));
                m.set(i, col, v);
            }
        }
        m
    }

    /// Polynomial in n variables with total degree ≤ max_deg and small
    /// integer coefficients (a few random monomials).
    pub fn poly(&mut self, n: u8, max_deg: u8) -> Poly {
        let mut p = Poly::zero(n);
        let monomials = self.int_in(1, 3);
        for _ in 0..monomials {
            let mut exps = vec![0u8; n as usize];
            let mut budget = max_deg;
            for e in exps.iter_mut() {
                let d = self.int_in(0, budget as i64) as u8;
                *e = d;
                budget -= d;
            }
            p.add_term(&exps, self.scalar());
        }
        p
    }

    pub fn polyform(&mut self, n: u8, k: u8, max_deg: u8) -> PolyForm {
        let mut f = PolyForm::zero(n, k);
        let table = crate::basis::basis(n, k);
        for r in 0..table.len() {
            f.set_coeff(table.tuple(r), self.poly(n, max_deg));
        }
        f
    }

    pub fn poly_vector_form(&mut self, n: u8, k: u8, max_deg: u8) -> PolyVectorForm {
        let comps = (0..n).map(|_| self.polyform(n, k, max_deg)).collect();
        PolyVectorForm::from_components(comps).expect("shape")
    }
}
