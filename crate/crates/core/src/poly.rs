//! Multivariate polynomials over [`Scalar`], the coefficient ring for local
//! differential forms. Canonical: zero coefficients are never stored.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    n: u8,
    terms: BTreeMap<Vec<u8>, Scalar>,
}

impl Poly {
    pub fn zero(n: u8) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u8, c: Scalar) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(&vec![0; n as usize], c);
        p
    }

    pub fn one(n: u8) -> Self {
        Poly::constant(n, Scalar::one())
    }

    /// The coordinate function x^i (0-based).
    pub fn var(n: u8, i: u8) -> Self {
        let mut e = vec![0u8; n as usize];
        e[i as usize] = 1;
        let mut p = Poly::zero(n);
        p.add_term(&e, Scalar::one());
        p
    }

    pub fn monomial(n: u8, exponents: &[u8], c: Scalar) -> Self {
        assert_eq!(exponents.len(), n as usize, "exponent vector length");
        let mut p = Poly::zero(n);
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> u8 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: &[u8], c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(exponents.to_vec())
            .or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(exponents);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&e, ca * cb);
            }
        }
        out
    }

    /// ∂/∂x^i.
    pub fn partial(&self, i: u8) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            let p = e[i as usize];
            if p == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i as usize] -= 1;
            out.add_term(&e2, c * &Scalar::from_int(p as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.n as usize, "evaluation point length");
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e) {
                for _ in 0..p {
                    term *= x;
                }
            }
            acc += &term;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops_and_canonical_form() {
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        let p = x.mul(&y).add(&Poly::one(3)); // xy + 1
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.terms.len(), 0);
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn partial_derivative() {
        // d/dx (x^2 y) = 2xy
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).mul(&y);
        let expect = x.mul(&y).scale(&Scalar::from_int(2));
        assert_eq!(p.partial(0), expect);
        assert!(p.partial(0).partial(1).partial(1).is_zero());
    }

    #[test]
    fn eval_exact() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).add(&y.scale(&Scalar::ratio(1, 2)));
        let v = p.eval(&[Scalar::from_int(3), Scalar::from_int(4)]);
        assert_eq!(v, Scalar::from_int(11));
    }
}
