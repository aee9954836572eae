//! Tangent-valued forms K = Σ_j β_j ⊗ e_j and the δ_g correspondence
//! sending a (k+1)-form to the tangent-valued k-form (ι_{e_i} α) ⊗ (e^i)♯.

use crate::error::{Error, Result};
use crate::form::Form;
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct VectorForm {
    n: u8,
    k: u8,
    components: Vec<Form>,
}

impl VectorForm {
    pub fn zero(n: u8, k: u8) -> Self {
        VectorForm {
            n,
            k,
            components: (0..n).map(|_| Form::zero(n, k)).collect(),
        }
    }

    pub fn from_components(components: Vec<Form>) -> Result<Self> {
        let n = components.len() as u8;
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidInput("empty vector form".into()))?;
        let (dim, k) = (first.dim(), first.degree());
        if dim != n {
            return Err(Error::DimensionMismatch(format!(
                "{} components in dim {dim}",
                components.len()
            )));
        }
        if components.iter().any(|f| f.dim() != dim || f.degree() != k) {
            return Err(Error::DimensionMismatch(
                "vector form components disagree in shape".into(),
            ));
        }
        Ok(VectorForm { n, k, components })
    }

    /// κ ⊗ X for a decomposable tangent-valued form.
    pub fn decomposable(kappa: &Form, x: &[Scalar]) -> Result<Self> {
        if x.len() != kappa.dim() as usize {
            return Err(Error::DimensionMismatch("decomposable".into()));
        }
        let mut out = VectorForm::zero(kappa.dim(), kappa.degree());
        for (j, xj) in x.iter().enumerate() {
            out.components[j] = kappa.scale(xj);
        }
        Ok(out)
    }

    /// The identity endomorphism Σ_i e^i ⊗ e_i as a vector-valued 1-form.
    pub fn identity_endo(n: u8) -> Self {
        let components = (0..n).map(|i| Form::basis_elem(n, &[i])).collect();
        VectorForm { n, k: 1, components }
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn component(&self, j: usize) -> &Form {
        &self.components[j]
    }

    pub fn components(&self) -> &[Form] {
        &self.components
    }

    pub fn add(&self, other: &VectorForm) -> Result<VectorForm> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch("vector form add".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VectorForm {
            n: self.n,
            k: self.k,
            components,
        })
    }

    pub fn sub(&self, other: &VectorForm) -> Result<VectorForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> VectorForm {
        VectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(Form::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> VectorForm {
        VectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(|f| f.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Form::is_zero)
    }

    pub fn to_float(&self) -> VectorForm {
        VectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(Form::to_float).collect(),
        }
    }

    /// Contraction ι_K α = Σ_j β_j ∧ (ι_{e_j} α); a degree K.k + α.k − 1
    /// form, zero when α is a 0-form.
    pub fn contract(&self, a: &Form) -> Result<Form> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch("contract".into()));
        }
        if a.degree() == 0 {
            return Ok(Form::zero(self.n, self.k.saturating_sub(1)));
        }
        let out_k = self.k as usize + a.degree() as usize - 1;
        let mut out = Form::zero(self.n, out_k as u8);
        for (j, beta) in self.components.iter().enumerate() {
            if beta.is_zero() {
                continue;
            }
            let part = beta.wedge(&a.interior_basis(j as u8))?;
            out = out.add(&part)?;
        }
        Ok(out)
    }
}

/// δ_g(α) = (ι_{e_i} α) ⊗ (e^i)♯, computed in the standard frame.
pub fn delta_g(a: &Form, g: &Metric) -> Result<VectorForm> {
    if a.degree() == 0 {
        return Err(Error::DimensionMismatch(
            "delta_g needs a form of degree ≥ 1".into(),
        ));
    }
    if a.dim() != g.dim() {
        return Err(Error::DimensionMismatch("delta_g metric dim".into()));
    }
    let n = a.dim();
    let inv = g.inverse_matrix();
    let mut out = VectorForm::zero(n, a.degree() - 1);
    for i in 0..n as usize {
        let contracted = a.interior_basis(i as u8);
        if contracted.is_zero() {
            continue;
        }
        // (e^i)♯ = Σ_m g^{im} e_m
        for m in 0..n as usize {
            let w = inv.get(i, m);
            if w.is_zero() {
                continue;
            }
            out.components[m] = out.components[m].add(&contracted.scale(w))?;
        }
    }
    Ok(out)
}

/// δ_g computed in an arbitrary frame (columns of `frame` are the basis
/// vectors). The result is expressed in the standard frame and must agree
/// with [`delta_g`] for any invertible frame.
pub fn delta_g_in_frame(a: &Form, g: &Metric, frame: &Matrix) -> Result<VectorForm> {
    let n = a.dim();
    if frame.rows() != n as usize || frame.cols() != n as usize {
        return Err(Error::DimensionMismatch("frame shape".into()));
    }
    let dual = frame.inverse()?; // rows are the dual basis 1-forms
    let mut out = VectorForm::zero(n, a.degree() - 1);
    for idx in 0..n as usize {
        let f_i: Vec<Scalar> = (0..n as usize)
            .map(|r| frame.get(r, idx).clone())
            .collect();
        let contracted = a.interior_vec(&f_i)?;
        if contracted.is_zero() {
            continue;
        }
        let sharp = g.inverse_matrix().matvec(dual.row(idx))?;
        for (m, w) in sharp.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            out.components[m] = out.components[m].add(&contracted.scale(w))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(idx1: &[u8]) -> Form {
        let shifted: Vec<u8> = idx1.iter().map(|i| i - 1).collect();
        Form::basis_elem(7, &shifted)
    }

    #[test]
    fn delta_of_two_form() {
        let g = Metric::identity(7);
        let d = delta_g(&e(&[1, 2]), &g).unwrap();
        assert_eq!(d.component(0), &e(&[2]));
        assert_eq!(d.component(1), &e(&[1]).neg());
        assert!(d.components()[2..].iter().all(Form::is_zero));
    }

    #[test]
    fn delta_with_scaled_metric() {
        let mut entries = vec![Scalar::from_int(1); 7];
        entries[0] = Scalar::from_int(4);
        let g = Metric::from_diag(&entries).unwrap();
        let d = delta_g(&e(&[1, 2]), &g).unwrap();
        assert_eq!(d.component(0), &e(&[2]).scale(&Scalar::ratio(1, 4)));
        assert_eq!(d.component(1), &e(&[1]).neg());
    }

    #[test]
    fn contract_degree_zero_vector_part() {
        // (1 ⊗ e_1) contracts like ι_{e_1}
        let one = Form::constant(7, Scalar::one());
        let mut x = vec![Scalar::zero(); 7];
        x[0] = Scalar::one();
        let k = VectorForm::decomposable(&one, &x).unwrap();
        let a = e(&[1, 2, 3]);
        assert_eq!(k.contract(&a).unwrap(), e(&[2, 3]));
    }

    #[test]
    fn contract_identity_endo_multiplies_by_degree() {
        let idt = VectorForm::identity_endo(7);
        let a = e(&[2, 4, 6]);
        assert_eq!(idt.contract(&a).unwrap(), a.scale(&Scalar::from_int(3)));
    }

    #[test]
    fn contract_decomposable() {
        // (e^1 ⊗ e_2) ι on e^{23} gives e^{13}
        let mut x = vec![Scalar::zero(); 7];
        x[1] = Scalar::one();
        let k = VectorForm::decomposable(&e(&[1]), &x).unwrap();
        assert_eq!(k.contract(&e(&[2, 3])).unwrap(), e(&[1, 3]));
    }
}
