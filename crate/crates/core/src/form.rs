//! Alternating forms on ℝⁿ with dense coefficients over the lexicographic
//! basis of strictly increasing index tuples.

use crate::basis::{basis, binomial, complement, merge_sign, BasisTable};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::scalar::Scalar;

/// A k-form. Degrees above n are permitted and identically zero (the wedge
/// convention), stored with an empty coefficient array.
#[derive(Clone, Debug, PartialEq)]
pub struct Form {
    n: u8,
    k: u8,
    coeffs: Vec<Scalar>,
}

impl Form {
    pub fn zero(n: u8, k: u8) -> Self {
        Form {
            n,
            k,
            coeffs: vec![Scalar::zero(); binomial(n as usize, k as usize)],
        }
    }

    /// e^{i_1…i_k} for a strictly increasing 0-based tuple.
    pub fn basis_elem(n: u8, indices: &[u8]) -> Self {
        let mut f = Form::zero(n, indices.len() as u8);
        f.set_coeff(indices, Scalar::one());
        f
    }

    pub fn from_terms(n: u8, k: u8, terms: &[(&[u8], Scalar)]) -> Self {
        let mut f = Form::zero(n, k);
        for (idx, c) in terms {
            f.add_coeff(idx, c.clone());
        }
        f
    }

    /// A 0-form holding one scalar.
    pub fn constant(n: u8, s: Scalar) -> Self {
        let mut f = Form::zero(n, 0);
        f.coeffs[0] = s;
        f
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    fn table(&self) -> &'static BasisTable {
        basis(self.n, self.k)
    }

    pub fn coeff(&self, indices: &[u8]) -> &Scalar {
        static ZERO: std::sync::OnceLock<Scalar> = std::sync::OnceLock::new();
        match self.table().rank(indices) {
            Some(r) => &self.coeffs[r],
            None => ZERO.get_or_init(Scalar::zero),
        }
    }

    pub fn set_coeff(&mut self, indices: &[u8], v: Scalar) {
        let r = self
            .table()
            .rank(indices)
            .expect("indices must be a strictly increasing basis tuple");
        self.coeffs[r] = v;
    }

    pub fn add_coeff(&mut self, indices: &[u8], v: Scalar) {
        let r = self
            .table()
            .rank(indices)
            .expect("indices must be a strictly increasing basis tuple");
        self.coeffs[r] += &v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (&'static [u8], &Scalar)> {
        let table = self.table();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(r, c)| (table.tuple(r), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn shape_check(&self, other: &Form) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch(format!(
                "form ({},{}) vs ({},{})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.shape_check(other)?;
        let mut out = self.clone();
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c += o;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.shape_check(other)?;
        let mut out = self.clone();
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c -= o;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Form {
        self.map(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        self.map(|c| c * s)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Form {
        Form {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_float(&self) -> Form {
        self.map(|c| c.to_float())
    }

    /// Exterior product. Degrees exceeding n give the zero form.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "wedge in dim {} vs {}",
                self.n, other.n
            )));
        }
        let k = self.k as usize + other.k as usize;
        let mut out = Form::zero(self.n, k.min(255) as u8);
        if k > self.n as usize {
            return Ok(out);
        }
        let table = basis(self.n, k as u8);
        for (ia, ca) in self.iter_nonzero() {
            for (ib, cb) in other.iter_nonzero() {
                if let Some((merged, sign)) = merge_sign(ia, ib) {
                    let r = table.rank(&merged).expect("merged tuple in range");
                    let prod = ca * cb;
                    out.coeffs[r] += &(if sign < 0 { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// ι with a single frame vector e_i.
    pub fn interior_basis(&self, i: u8) -> Form {
        if self.k == 0 {
            return Form::zero(self.n, 0);
        }
        let mut out = Form::zero(self.n, self.k - 1);
        for (tuple, c) in self.iter_nonzero() {
            if let Some(pos) = tuple.iter().position(|&v| v == i) {
                let mut rest: Vec<u8> = tuple.to_vec();
                rest.remove(pos);
                let signed = if pos % 2 == 1 { -c } else { c.clone() };
                out.add_coeff(&rest, signed);
            }
        }
        out
    }

    /// Interior product ι_v: contraction of the first slot with `v`.
    pub fn interior_vec(&self, v: &[Scalar]) -> Result<Form> {
        if v.len() != self.n as usize {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against dim {}",
                v.len(),
                self.n
            )));
        }
        if self.k == 0 {
            return Ok(Form::zero(self.n, 0));
        }
        let mut out = Form::zero(self.n, self.k - 1);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let part = self.interior_basis(i as u8);
            for (c, p) in out.coeffs.iter_mut().zip(&part.coeffs) {
                *c += &(p * vi);
            }
        }
        Ok(out)
    }

    /// Orthonormal-basis inner product Σ_I a_I b_I.
    pub fn inner_id(&self, other: &Form) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            acc += &(a * b);
        }
        acc
    }

    pub fn norm_sq_id(&self) -> Scalar {
        self.inner_id(self)
    }

    /// Hodge star determined by α ∧ ∗β = ⟨α, β⟩_g vol_g.
    pub fn hodge(&self, g: &Metric) -> Result<Form> {
        if g.dim() != self.n {
            return Err(Error::DimensionMismatch("hodge metric dim".into()));
        }
        let mut out = Form::zero(self.n, self.n - self.k);
        if g.is_identity() {
            for (tuple, c) in self.iter_nonzero() {
                let comp = complement(self.n, tuple);
                let (_, sign) = merge_sign(tuple, &comp).expect("disjoint");
                out.add_coeff(&comp, if sign < 0 { -c } else { c.clone() });
            }
            if g.orientation() < 0 {
                out = out.neg();
            }
            return Ok(out);
        }
        let sd = g.sqrt_det()?;
        let table = basis(self.n, self.k);
        for (rank, _) in (0..table.len()).zip(0..) {
            let tuple = table.tuple(rank);
            let e_i = Form::basis_elem(self.n, tuple);
            let ip = g.inner_form(&e_i, self)?;
            if ip.is_zero() {
                continue;
            }
            let comp = complement(self.n, tuple);
            let (_, sign) = merge_sign(tuple, &comp).expect("disjoint");
            let mut v = &ip * &sd;
            if sign < 0 {
                v = -v;
            }
            if g.orientation() < 0 {
                v = -v;
            }
            out.add_coeff(&comp, v);
        }
        Ok(out)
    }

    /// Coefficient along the volume element e^{0…n−1} of a top-degree form.
    pub fn top_coeff(&self) -> Result<Scalar> {
        if self.k != self.n {
            return Err(Error::DimensionMismatch(format!(
                "top_coeff of a {}-form in dim {}",
                self.k, self.n
            )));
        }
        Ok(self.coeffs[0].clone())
    }

    /// Pullback along the linear map x ↦ P x (columns act on vectors).
    pub fn pullback(&self, p: &Matrix) -> Result<Form> {
        if p.rows() != self.n as usize || p.cols() != self.n as usize {
            return Err(Error::DimensionMismatch("pullback matrix shape".into()));
        }
        let k = self.k as usize;
        let table = basis(self.n, self.k);
        let mut out = Form::zero(self.n, self.k);
        for (rj, _) in (0..table.len()).zip(0..) {
            let j_tuple = table.tuple(rj);
            let mut acc = Scalar::zero();
            for (i_tuple, c) in self.iter_nonzero() {
                let minor = Matrix::from_fn(k, k, |r, c2| {
                    p.get(i_tuple[r] as usize, j_tuple[c2] as usize).clone()
                })
                .det()?;
                acc += &(c * &minor);
            }
            out.coeffs[rj] = acc;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7(idx: &[u8]) -> Form {
        // 1-based labels for readability in tests
        let shifted: Vec<u8> = idx.iter().map(|i| i - 1).collect();
        Form::basis_elem(7, &shifted)
    }

    #[test]
    fn wedge_basis_products() {
        let e1 = f7(&[1]);
        let e2 = f7(&[2]);
        let e12 = f7(&[1, 2]);
        assert_eq!(e1.wedge(&e2).unwrap(), e12);
        assert_eq!(e2.wedge(&e1).unwrap(), e12.neg());
        assert!(e12.wedge(&e12).unwrap().is_zero());
    }

    #[test]
    fn wedge_above_top_degree_is_zero() {
        let a = Form::basis_elem(7, &[0, 1, 2, 3]);
        let b = Form::basis_elem(7, &[4, 5, 6]);
        let c = a.wedge(&b).unwrap(); // 7-form, fine
        assert!(!c.is_zero());
        let d = c.wedge(&Form::basis_elem(7, &[0])).unwrap(); // degree 8 > 7
        assert_eq!(d.degree(), 8);
        assert!(d.is_zero());
    }

    #[test]
    fn wedge_dimension_mismatch() {
        let a = Form::basis_elem(7, &[0]);
        let b = Form::basis_elem(8, &[0]);
        assert!(matches!(a.wedge(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn interior_first_slot_and_sign() {
        let e123 = f7(&[1, 2, 3]);
        let mut v = vec![Scalar::zero(); 7];
        v[0] = Scalar::one();
        assert_eq!(e123.interior_vec(&v).unwrap(), f7(&[2, 3]));
        let mut w = vec![Scalar::zero(); 7];
        w[1] = Scalar::one();
        assert_eq!(e123.interior_vec(&w).unwrap(), f7(&[1, 3]).neg());
    }

    #[test]
    fn interior_on_scalar_is_zero() {
        let c = Form::constant(7, Scalar::from_int(5));
        let v = vec![Scalar::one(); 7];
        assert!(c.interior_vec(&v).unwrap().is_zero());
    }

    #[test]
    fn hodge_complement() {
        let g = Metric::identity(7);
        assert_eq!(f7(&[1, 2, 3]).hodge(&g).unwrap(), f7(&[4, 5, 6, 7]));
    }

    #[test]
    fn hodge_exact_requires_square_det() {
        let mut d = vec![Scalar::from_int(1); 7];
        d[0] = Scalar::from_int(2); // det = 2, not a rational square
        let g = Metric::from_diag(&d).unwrap();
        assert!(matches!(
            f7(&[1]).hodge(&g),
            Err(Error::ExactHodgeUnsupported(_))
        ));
        // same metric in float mode works
        let gf = g.to_float();
        let got = f7(&[1]).to_float().hodge(&gf).unwrap();
        assert!((got.coeff(&[1, 2, 3, 4, 5, 6]).to_f64() - 1.0 / 2.0 * 2.0f64.sqrt()).abs() < 1e-12);
    }
}
