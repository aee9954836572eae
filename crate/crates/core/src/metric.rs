//! Inner products: symmetric positive definite bilinear forms, musical
//! isomorphisms, and the induced inner products on exterior powers.

use crate::basis::basis;
use crate::error::{Error, Result};
use crate::form::Form;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// An SPD metric on ℝⁿ together with an orientation sign. The orientation
/// `+1` declares the standard frame positively oriented.
#[derive(Clone, Debug)]
pub struct Metric {
    n: u8,
    g: Matrix,
    inv: Matrix,
    det: Scalar,
    orientation: i8,
}

impl Metric {
    pub fn identity(n: u8) -> Self {
        Metric {
            n,
            g: Matrix::identity(n as usize),
            inv: Matrix::identity(n as usize),
            det: Scalar::one(),
            orientation: 1,
        }
    }

    /// Builds a metric from a symmetric matrix, checking positive
    /// definiteness through leading principal minors.
    pub fn new(g: Matrix) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::MetricNotPositive);
        }
        let minors = g.leading_principal_minors()?;
        if minors.iter().any(|m| !m.is_positive()) {
            return Err(Error::MetricNotPositive);
        }
        let det = minors.last().cloned().unwrap_or_else(Scalar::one);
        let inv = g.inverse()?;
        Ok(Metric {
            n: g.rows() as u8,
            g,
            inv,
            det,
            orientation: 1,
        })
    }

    pub fn from_diag(entries: &[Scalar]) -> Result<Self> {
        Metric::new(Matrix::diag(entries))
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inv
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn is_identity(&self) -> bool {
        self.g == Matrix::identity(self.n as usize)
    }

    pub fn to_float(&self) -> Metric {
        Metric {
            n: self.n,
            g: self.g.to_float(),
            inv: self.inv.to_float(),
            det: self.det.to_float(),
            orientation: self.orientation,
        }
    }

    /// √det g; exact when rational, an error in exact mode otherwise.
    pub fn sqrt_det(&self) -> Result<Scalar> {
        match &self.det {
            Scalar::Rational(_) => self
                .det
                .sqrt_exact()
                .ok_or_else(|| Error::ExactHodgeUnsupported(self.det.repr())),
            Scalar::Float(f) => Ok(Scalar::float(f.sqrt())),
        }
    }

    pub fn inner_vec(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let gx = self.g.matvec(x)?;
        if y.len() != gx.len() {
            return Err(Error::DimensionMismatch("inner_vec".into()));
        }
        let mut acc = Scalar::zero();
        for (a, b) in gx.iter().zip(y) {
            acc += &(a * b);
        }
        Ok(acc)
    }

    /// v ↦ v♭ = g(v, ·).
    pub fn flat(&self, v: &[Scalar]) -> Result<Form> {
        let coeffs = self.g.matvec(v)?;
        let mut f = Form::zero(self.n, 1);
        for (i, c) in coeffs.into_iter().enumerate() {
            f.set_coeff(&[i as u8], c);
        }
        Ok(f)
    }

    /// α ↦ α♯ for a 1-form.
    pub fn sharp(&self, a: &Form) -> Result<Vec<Scalar>> {
        if a.degree() != 1 || a.dim() != self.n {
            return Err(Error::DimensionMismatch("sharp expects a 1-form".into()));
        }
        let coeffs: Vec<Scalar> = (0..self.n).map(|i| a.coeff(&[i]).clone()).collect();
        self.inv.matvec(&coeffs)
    }

    /// Induced inner product on Λ^k: Gram minors of the inverse metric.
    pub fn inner_form(&self, a: &Form, b: &Form) -> Result<Scalar> {
        if a.dim() != b.dim() || a.degree() != b.degree() || a.dim() != self.n {
            return Err(Error::DimensionMismatch("inner_form".into()));
        }
        if self.is_identity() {
            return Ok(a.inner_id(b));
        }
        let k = a.degree() as usize;
        let mut acc = Scalar::zero();
        for (ti, ci) in a.iter_nonzero() {
            for (tj, cj) in b.iter_nonzero() {
                let minor = Matrix::from_fn(k, k, |r, c| {
                    self.inv.get(ti[r] as usize, tj[c] as usize).clone()
                })
                .det()?;
                acc += &(&(ci * cj) * &minor);
            }
        }
        Ok(acc)
    }

    /// Riemannian volume form √det(g) · e^{0…n−1} (orientation-signed).
    pub fn volume_form(&self) -> Result<Form> {
        let sd = self.sqrt_det()?;
        let table = basis(self.n, self.n);
        let mut f = Form::zero(self.n, self.n);
        let full = table.tuple(0).to_vec();
        let signed = if self.orientation >= 0 { sd } else { -sd };
        f.set_coeff(&full, signed);
        Ok(f)
    }
}
