//! The standard G2 model on ℝ⁷: the 3-form φ, its Hodge dual, cross
//! products, irreducible projectors on Λ², Λ³ and Λ⁵, torsion synthesis and
//! extraction, the endomorphism decomposition, and the randomized identity
//! suite for the structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::form::Form;
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::report::IdentityReport;
use crate::rng::SmallRng;
use crate::scalar::Scalar;

/// Signed index tuples (1-based labels) of the model 3-form.
const PHI_TERMS: [(i64, [u8; 3]); 7] = [
    (1, [1, 2, 3]),
    (1, [1, 4, 5]),
    (1, [1, 6, 7]),
    (1, [2, 4, 6]),
    (-1, [2, 5, 7]),
    (-1, [3, 4, 7]),
    (-1, [3, 5, 6]),
];

/// The model G2 structure: φ, ∗φ, the identity metric and the volume form,
/// plus the pairing constants derived from them at construction time.
#[derive(Clone, Debug)]
pub struct G2Model {
    pub metric: Metric,
    pub phi: Form,
    pub star_phi: Form,
    pub vol: Form,
    /// ⟨ι_v φ, ι_w φ⟩ = c ⟨v, w⟩; c = 3 for the model form.
    gram_lambda2: Scalar,
    /// ⟨ι_v ∗φ, ι_w ∗φ⟩ = c ⟨v, w⟩; c = 4.
    gram_lambda3: Scalar,
    /// |φ|² = 7.
    phi_norm_sq: Scalar,
    /// (ι_{e_i} φ) ∧ (∗φ ∧ e^j) = c δ_ij vol; c = 3.
    pair_lambda5: Scalar,
}

impl G2Model {
    pub fn new() -> Self {
        let mut phi = Form::zero(7, 3);
        for (sign, idx) in PHI_TERMS {
            let shifted: Vec<u8> = idx.iter().map(|i| i - 1).collect();
            phi.set_coeff(&shifted, Scalar::from_int(sign));
        }
        let metric = Metric::identity(7);
        let star_phi = phi.hodge(&metric).expect("hodge of the model form");
        let vol = Form::basis_elem(7, &[0, 1, 2, 3, 4, 5, 6]);

        let gram_lambda2 = gram_constant(&phi);
        let gram_lambda3 = gram_constant(&star_phi);
        let phi_norm_sq = phi.norm_sq_id();
        let pair_lambda5 = lambda5_pairing_constant(&phi, &star_phi, &metric);

        let model = G2Model {
            metric,
            phi,
            star_phi,
            vol,
            gram_lambda2,
            gram_lambda3,
            phi_norm_sq,
            pair_lambda5,
        };
        // |φ|² vol = φ ∧ ∗φ must hold for the orientation fixed here.
        let pairing = model.phi.wedge(&model.star_phi).expect("phi ∧ ∗φ");
        assert_eq!(
            pairing,
            model.vol.scale(&model.phi_norm_sq),
            "model form does not pair to |φ|² vol"
        );
        model
    }

    pub fn gram_lambda2(&self) -> &Scalar {
        &self.gram_lambda2
    }

    pub fn gram_lambda3(&self) -> &Scalar {
        &self.gram_lambda3
    }

    pub fn phi_norm_sq(&self) -> &Scalar {
        &self.phi_norm_sq
    }

    pub fn pair_lambda5(&self) -> &Scalar {
        &self.pair_lambda5
    }

    /// 2-fold cross product: g(Cr(x,y), z) = φ(x,y,z).
    pub fn cross(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let one_form = self.phi.interior_vec(x)?.interior_vec(y)?;
        self.metric.sharp(&one_form)
    }

    /// 3-fold cross product: g(χ(x,y,z), w) = ∗φ(x,y,z,w).
    pub fn chi(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        let one_form = self
            .star_phi
            .interior_vec(x)?
            .interior_vec(y)?
            .interior_vec(z)?;
        self.metric.sharp(&one_form)
    }

    /// Splits a 2-form into its 7- and 14-dimensional parts using the
    /// eigenvalues 2 and −1 of α ↦ ∗(α ∧ φ).
    pub fn project_lambda2(&self, a: &Form) -> Result<(Form, Form)> {
        expect_shape(a, 7, 2)?;
        let star_a_phi = a.wedge(&self.phi)?.hodge(&self.metric)?;
        let third = Scalar::ratio(1, 3);
        let p7 = a.add(&star_a_phi)?.scale(&third);
        let p14 = a.scale(&Scalar::from_int(2)).sub(&star_a_phi)?.scale(&third);
        Ok((p7, p14))
    }

    /// Splits a 3-form as c·φ + ι_v ∗φ + (27-dimensional remainder).
    pub fn project_lambda3(&self, a: &Form) -> Result<(Scalar, Vec<Scalar>, Form)> {
        expect_shape(a, 7, 3)?;
        let c = &a.inner_id(&self.phi) / &self.phi_norm_sq;
        let v: Vec<Scalar> = (0..7)
            .map(|i| &a.inner_id(&self.star_phi.interior_basis(i)) / &self.gram_lambda3)
            .collect();
        let p27 = a
            .sub(&self.phi.scale(&c))?
            .sub(&self.star_phi.interior_vec(&v)?)?;
        Ok((c, v, p27))
    }

    /// Splits a 5-form into its ∗φ ∧ v♭ part and the 14-dimensional rest.
    pub fn project_lambda5(&self, a: &Form) -> Result<(Form, Form)> {
        expect_shape(a, 7, 5)?;
        let mut p7 = Form::zero(7, 5);
        for i in 0..7u8 {
            let c = &self
                .phi
                .interior_basis(i)
                .wedge(a)?
                .top_coeff()?
                / &self.pair_lambda5;
            if c.is_zero() {
                continue;
            }
            let basis5 = self.star_phi.wedge(&Form::basis_elem(7, &[i]))?;
            p7 = p7.add(&basis5.scale(&c))?;
        }
        let p14 = a.sub(&p7)?;
        Ok((p7, p14))
    }

    /// ∇_v φ = ι_{T(v)} ∗φ and ∇_v ∗φ = −(T(v))♭ ∧ φ for each frame vector.
    pub fn nabla_from_torsion(&self, t: &G2Torsion) -> Result<(Vec<Form>, Vec<Form>)> {
        let mut nabla_phi = Vec::with_capacity(7);
        let mut nabla_star = Vec::with_capacity(7);
        for i in 0..7 {
            let tv = t.image_of_basis(i);
            nabla_phi.push(self.star_phi.interior_vec(&tv)?);
            let flat = self.metric.flat(&tv)?;
            nabla_star.push(flat.wedge(&self.phi)?.neg());
        }
        Ok((nabla_phi, nabla_star))
    }

    /// Recovers the torsion from ∇φ, requiring each directional derivative to
    /// lie in the vector-type component of Λ³.
    pub fn torsion_from_nabla(&self, nabla_phi: &[Form]) -> Result<G2Torsion> {
        if nabla_phi.len() != 7 {
            return Err(Error::DimensionMismatch("expected 7 directions".into()));
        }
        let mut t = Matrix::zeros(7, 7);
        for (v, np) in nabla_phi.iter().enumerate() {
            expect_shape(np, 7, 3)?;
            // w_i from e^i ∧ ∇_vφ ∧ φ = gram · w_i vol
            let mut w = Vec::with_capacity(7);
            for i in 0..7u8 {
                let c = Form::basis_elem(7, &[i])
                    .wedge(np)?
                    .wedge(&self.phi)?
                    .top_coeff()?;
                w.push(&c / &self.gram_lambda3);
            }
            let residual = np.sub(&self.star_phi.interior_vec(&w)?)?;
            if !residual.is_zero() {
                return Err(Error::NablaNotInV7Component {
                    direction: v,
                    residual: residual.norm_sq_id().repr(),
                });
            }
            for (i, wi) in w.into_iter().enumerate() {
                t.set(v, i, wi);
            }
        }
        G2Torsion::new(t)
    }

    /// dφ = Σ_i (T⊤ e_i)♭ ∧ (ι_{e_i} ∗φ) and d∗φ = −τ ∧ φ.
    pub fn exterior_derivatives_from_torsion(&self, t: &G2Torsion) -> Result<(Form, Form)> {
        let mut dphi = Form::zero(7, 4);
        for i in 0..7 {
            // T⊤(e_i) = Σ_j t_{ji} e_j
            let col: Vec<Scalar> = (0..7).map(|j| t.matrix().get(j, i).clone()).collect();
            let flat = self.metric.flat(&col)?;
            dphi = dphi.add(&flat.wedge(&self.star_phi.interior_basis(i as u8))?)?;
        }
        let tau = t.tau();
        let dstar = tau.wedge(&self.phi)?.neg();
        Ok((dphi, dstar))
    }

    /// Decomposes a 7×7 endomorphism into trace, two skew pieces, and the
    /// traceless symmetric piece.
    pub fn decompose_endo(&self, a: &Matrix) -> Result<EndoDecomposition> {
        if a.rows() != 7 || a.cols() != 7 {
            return Err(Error::DimensionMismatch("expected a 7x7 matrix".into()));
        }
        let c1 = a.trace()?;
        let sym = a.add(&a.transpose())?.scale(&Scalar::ratio(1, 2));
        let s27 = sym.sub(&Matrix::identity(7).scale(&(&c1 / &Scalar::from_int(7))))?;
        let sigma = two_form_of_endo(a);
        let (p7, a14) = self.project_lambda2(&sigma)?;
        let v7: Vec<Scalar> = (0..7)
            .map(|i| &p7.inner_id(&self.phi.interior_basis(i)) / &self.gram_lambda2)
            .collect();
        Ok(EndoDecomposition { c1, v7, a14, s27 })
    }

    /// Reassembles an endomorphism from its decomposition.
    pub fn recompose_endo(&self, d: &EndoDecomposition) -> Result<Matrix> {
        let skew_form = self.phi.interior_vec(&d.v7)?.add(&d.a14)?;
        let skew = matrix_from_2form(&skew_form)?.scale(&Scalar::ratio(1, 2));
        Matrix::identity(7)
            .scale(&(&d.c1 / &Scalar::from_int(7)))
            .add(&skew)?
            .add(&d.s27)
    }

    /// Runs `samples` seeded random tuples through the full identity list.
    /// `tol` switches to float evaluation with absolute tolerance.
    pub fn verify_identities(&self, samples: u64, seed: u64, tol: Option<f64>) -> IdentityReport {
        let mut report = IdentityReport::new("g2", samples);
        let mut rng = SmallRng::new(seed);
        let ids = g2_identity_ids();
        let mut pass = vec![0u64; ids.len()];
        for _ in 0..samples {
            let mut vecs: Vec<Vec<Scalar>> = (0..4).map(|_| rng.vector(7)).collect();
            if tol.is_some() {
                for v in vecs.iter_mut() {
                    for c in v.iter_mut() {
                        *c = c.to_float();
                    }
                }
            }
            for (which, id) in ids.iter().enumerate() {
                let (lhs, rhs) = self
                    .identity_sides(id, &vecs)
                    .expect("identity evaluation is total");
                if forms_equal(&lhs, &rhs, tol) {
                    pass[which] += 1;
                } else {
                    let mut witness = BTreeMap::new();
                    for (name, v) in ["u", "v", "w", "r"].iter().zip(&vecs) {
                        witness.insert(
                            name.to_string(),
                            format!(
                                "[{}]",
                                v.iter().map(Scalar::repr).collect::<Vec<_>>().join(",")
                            ),
                        );
                    }
                    report.fail(id, witness);
                }
            }
        }
        for (which, id) in ids.iter().enumerate() {
            report.record(id, pass[which]);
        }
        report
    }

    /// Left and right side of one structure identity on the given vectors.
    pub fn identity_sides(&self, id: &str, vecs: &[Vec<Scalar>]) -> Result<(Form, Form)> {
        let (u, v, w, r) = (&vecs[0], &vecs[1], &vecs[2], &vecs[3]);
        let m = &self.metric;
        let phi = &self.phi;
        let sp = &self.star_phi;
        let dot = |a: &[Scalar], b: &[Scalar]| -> Scalar {
            let mut acc = Scalar::zero();
            for (x, y) in a.iter().zip(b) {
                acc += &(x * y);
            }
            acc
        };
        let vol_times = |c: Scalar| self.vol.scale(&c);
        let iphi = |x: &[Scalar]| phi.interior_vec(x);
        let istar = |x: &[Scalar]| sp.interior_vec(x);
        let flat = |x: &[Scalar]| m.flat(x);
        let two = Scalar::from_int(2);

        let pair4 = |s: i64| -> Result<Form> {
            // 2(⟨v,w⟩⟨u,r⟩ − ⟨u,w⟩⟨v,r⟩) vol + s · u♭∧v♭∧w♭∧r♭∧φ
            let scalar_part =
                &two * &(&(&dot(v, w) * &dot(u, r)) - &(&dot(u, w) * &dot(v, r)));
            let wedge_part = flat(u)?
                .wedge(&flat(v)?)?
                .wedge(&flat(w)?)?
                .wedge(&flat(r)?)?
                .wedge(phi)?
                .scale(&Scalar::from_int(s));
            vol_times(scalar_part).add(&wedge_part)
        };

        Ok(match id {
            "form-0" => (
                flat(u)?.wedge(&iphi(v)?)?.wedge(sp)?,
                vol_times(&Scalar::from_int(3) * &dot(u, v)),
            ),
            "form-11" => (
                flat(u)?.wedge(&istar(v)?)?.wedge(phi)?,
                vol_times(&Scalar::from_int(4) * &dot(u, v)),
            ),
            "form-1" => (
                iphi(u)?.wedge(&iphi(v)?)?.wedge(phi)?,
                vol_times(&Scalar::from_int(6) * &dot(u, v)),
            ),
            "form-2" => (
                flat(u)?.wedge(&iphi(v)?)?.wedge(&iphi(w)?)?.wedge(&iphi(r)?)?,
                vol_times(
                    &two * &(&(&(&dot(v, w) * &dot(u, r)) + &(&dot(u, v) * &dot(w, r)))
                        + &(&dot(u, w) * &dot(v, r))),
                ),
            ),
            "form-7" => (
                istar(v)?.interior_vec(u)?.wedge(&flat(w)?)?.wedge(sp)?,
                flat(u)?
                    .wedge(&flat(v)?)?
                    .wedge(&flat(w)?)?
                    .wedge(sp)?
                    .scale(&Scalar::from_int(-2)),
            ),
            "form-3" => (
                iphi(v)?
                    .interior_vec(u)?
                    .wedge(&flat(w)?)?
                    .wedge(&iphi(r)?)?
                    .wedge(phi)?,
                pair4(-2)?,
            ),
            "form-4" => (
                istar(v)?
                    .interior_vec(u)?
                    .wedge(&istar(w)?)?
                    .wedge(&iphi(r)?)?,
                pair4(1)?,
            ),
            "form-5" => (
                flat(u)?
                    .wedge(&flat(v)?)?
                    .wedge(&istar(w)?)?
                    .wedge(&iphi(r)?)?,
                pair4(1)?,
            ),
            "form-6" => (
                flat(u)?
                    .wedge(&flat(v)?)?
                    .wedge(&istar(r)?.interior_vec(w)?)?
                    .wedge(phi)?,
                pair4(-1)?,
            ),
            "form13" => (
                istar(u)?.wedge(&iphi(v)?)?,
                flat(u)?
                    .wedge(&flat(v)?)?
                    .hodge(m)?
                    .scale(&Scalar::from_int(-2))
                    .add(&flat(u)?.wedge(&flat(v)?)?.wedge(phi)?)?,
            ),
            "form14" => (
                phi.wedge(&iphi(u)?)?,
                flat(u)?.wedge(sp)?.scale(&two),
            ),
            "formulas2" => {
                let mut lhs = Form::zero(7, 4);
                for i in 0..7u8 {
                    let c = phi.interior_basis(i);
                    lhs = lhs.add(&c.wedge(&c)?)?;
                }
                (lhs, sp.scale(&Scalar::from_int(6)))
            }
            "formulas-3" => {
                let mut lhs = Form::zero(7, 4);
                for i in 0..7u8 {
                    let a = sp.interior_basis(i).interior_vec(u)?;
                    let b = sp.interior_basis(i).interior_vec(v)?;
                    lhs = lhs.add(&a.wedge(&b)?)?;
                }
                (lhs, iphi(u)?.wedge(&iphi(v)?)?.scale(&two))
            }
            "formulas-4" => {
                let mut lhs = Form::zero(7, 4);
                for i in 0..7u8 {
                    let a = sp.interior_basis(i).interior_vec(u)?;
                    lhs = lhs.add(&a.wedge(&phi.interior_basis(i))?)?;
                }
                (lhs, flat(u)?.wedge(phi)?.scale(&Scalar::from_int(3)))
            }
            _ => return Err(Error::InvalidInput(format!("unknown identity {id}"))),
        })
    }
}

impl Default for G2Model {
    fn default() -> Self {
        Self::new()
    }
}

/// Identity tags in the order they are reported.
pub fn g2_identity_ids() -> Vec<&'static str> {
    vec![
        "form-0",
        "form-11",
        "form-1",
        "form-2",
        "form-7",
        "form-3",
        "form-4",
        "form-5",
        "form-6",
        "form13",
        "form14",
        "formulas2",
        "formulas-3",
        "formulas-4",
    ]
}

/// The torsion endomorphism: t_ij = ⟨T(e_i), e_j⟩ as a 7×7 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Torsion {
    t: Matrix,
}

impl G2Torsion {
    pub fn new(t: Matrix) -> Result<Self> {
        if t.rows() != 7 || t.cols() != 7 {
            return Err(Error::DimensionMismatch("torsion must be 7x7".into()));
        }
        Ok(G2Torsion { t })
    }

    pub fn zero() -> Self {
        G2Torsion {
            t: Matrix::zeros(7, 7),
        }
    }

    pub fn identity() -> Self {
        G2Torsion {
            t: Matrix::identity(7),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    /// T(e_i) in frame coordinates.
    pub fn image_of_basis(&self, i: usize) -> Vec<Scalar> {
        self.t.row(i).to_vec()
    }

    /// τ = t_ij e^{ij}, the skew pairing 2-form.
    pub fn tau(&self) -> Form {
        let mut tau = Form::zero(7, 2);
        for i in 0..7u8 {
            for j in (i + 1)..7u8 {
                let c = self.t.get(i as usize, j as usize)
                    - self.t.get(j as usize, i as usize);
                tau.set_coeff(&[i, j], c);
            }
        }
        tau
    }
}

/// Components of an endomorphism under the four-summand decomposition:
/// trace part, vector-type and 14-dimensional skew parts, traceless
/// symmetric part.
#[derive(Clone, Debug)]
pub struct EndoDecomposition {
    pub c1: Scalar,
    pub v7: Vec<Scalar>,
    pub a14: Form,
    pub s27: Matrix,
}

/// σ_A = a_ij e^{ij}: the skew part of an endomorphism as a 2-form.
pub fn two_form_of_endo(a: &Matrix) -> Form {
    let mut sigma = Form::zero(7, 2);
    for i in 0..7u8 {
        for j in (i + 1)..7u8 {
            let c = a.get(i as usize, j as usize) - a.get(j as usize, i as usize);
            sigma.set_coeff(&[i, j], c);
        }
    }
    sigma
}

/// The skew matrix with β(e_i, e_j) entries.
pub fn matrix_from_2form(beta: &Form) -> Result<Matrix> {
    expect_shape(beta, beta.dim(), 2)?;
    let n = beta.dim() as usize;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let c = beta.coeff(&[i as u8, j as u8]).clone();
            m.set(i, j, c.clone());
            m.set(j, i, -c);
        }
    }
    Ok(m)
}

/// The metric induced by a definite 3-form, normalized so the model form
/// maps to the identity. Falls back to float mode when the determinant
/// normalization leaves the rationals.
pub fn metric_from_phi(phi: &Form) -> Result<Metric> {
    expect_shape(phi, 7, 3)?;
    let mut b = Matrix::zeros(7, 7);
    for i in 0..7 {
        let phi_i = phi.interior_basis(i as u8);
        for j in i..7 {
            let c = phi_i
                .wedge(&phi.interior_basis(j as u8))?
                .wedge(phi)?
                .top_coeff()?;
            b.set(i, j, c.clone());
            if i != j {
                b.set(j, i, c);
            }
        }
    }
    let minors = b.leading_principal_minors()?;
    let positive = minors.iter().all(Scalar::is_positive);
    let negative = minors
        .iter()
        .enumerate()
        .all(|(k, m)| if k % 2 == 0 { m.is_negative() } else { m.is_positive() });
    if !positive && !negative {
        return Err(Error::NotAG2Form);
    }
    let det_b = minors.last().expect("7 minors").clone();
    let ratio = &det_b / &Scalar::from_int(6i64.pow(7));
    let six = Scalar::from_int(6);
    match ratio.nth_root_exact(9) {
        Some(root) => Metric::new(b.scale(&(&Scalar::one() / &(&six * &root)))),
        None => {
            let rf = ratio.to_f64();
            let root = rf.signum() * rf.abs().powf(1.0 / 9.0);
            Metric::new(b.to_float().scale(&Scalar::float(1.0 / (6.0 * root))))
        }
    }
}

/// Checks ⟨ι_{e_i} ψ, ι_{e_j} ψ⟩ = c δ_ij and returns c.
fn gram_constant(psi: &Form) -> Scalar {
    let contractions: Vec<Form> = (0..7).map(|i| psi.interior_basis(i)).collect();
    let c = contractions[0].norm_sq_id();
    for (i, a) in contractions.iter().enumerate() {
        for (j, b) in contractions.iter().enumerate() {
            let expect = if i == j { c.clone() } else { Scalar::zero() };
            assert_eq!(a.inner_id(b), expect, "contraction Gram matrix not c·I");
        }
    }
    c
}

/// Checks (ι_{e_i} φ) ∧ (∗φ ∧ e^j) = c δ_ij vol and returns c.
fn lambda5_pairing_constant(phi: &Form, star_phi: &Form, _g: &Metric) -> Scalar {
    let mut c = Scalar::zero();
    for i in 0..7u8 {
        for j in 0..7u8 {
            let w = phi
                .interior_basis(i)
                .wedge(&star_phi.wedge(&Form::basis_elem(7, &[j])).unwrap())
                .unwrap()
                .top_coeff()
                .unwrap();
            if i == j {
                if i == 0 {
                    c = w.clone();
                }
                assert_eq!(w, c, "pairing is not a multiple of the identity");
            } else {
                assert!(w.is_zero(), "pairing has off-diagonal entries");
            }
        }
    }
    c
}

pub(crate) fn expect_shape(f: &Form, n: u8, k: u8) -> Result<()> {
    if f.dim() != n || f.degree() != k {
        return Err(Error::DimensionMismatch(format!(
            "expected a ({n},{k}) form, got ({},{})",
            f.dim(),
            f.degree()
        )));
    }
    Ok(())
}

pub(crate) fn forms_equal(a: &Form, b: &Form, tol: Option<f64>) -> bool {
    match tol {
        None => a == b,
        Some(eps) => {
            a.dim() == b.dim()
                && a.degree() == b.degree()
                && a.coeffs()
                    .iter()
                    .zip(b.coeffs())
                    .all(|(x, y)| (x.to_f64() - y.to_f64()).abs() <= eps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7(idx: &[u8]) -> Form {
        let shifted: Vec<u8> = idx.iter().map(|i| i - 1).collect();
        Form::basis_elem(7, &shifted)
    }

    fn basis_vec(i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 7];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn model_constants() {
        let m = G2Model::new();
        assert_eq!(m.phi.coeff(&[0, 1, 2]), &Scalar::one());
        assert_eq!(m.phi.coeff(&[1, 4, 6]), &Scalar::from_int(-1)); // e^{257}
        // the dual form, term by term
        let mut expected = Form::zero(7, 4);
        for (sign, idx) in [
            (1i64, [4u8, 5, 6, 7]),
            (1, [2, 3, 6, 7]),
            (1, [2, 3, 4, 5]),
            (1, [1, 3, 5, 7]),
            (-1, [1, 3, 4, 6]),
            (-1, [1, 2, 5, 6]),
            (-1, [1, 2, 4, 7]),
        ] {
            let shifted: Vec<u8> = idx.iter().map(|i| i - 1).collect();
            expected.set_coeff(&shifted, Scalar::from_int(sign));
        }
        assert_eq!(m.star_phi, expected);
        assert_eq!(m.gram_lambda2, Scalar::from_int(3));
        assert_eq!(m.gram_lambda3, Scalar::from_int(4));
        assert_eq!(m.phi_norm_sq, Scalar::from_int(7));
        assert_eq!(m.pair_lambda5, Scalar::from_int(3));
    }

    #[test]
    fn cross_products_on_basis() {
        let m = G2Model::new();
        let cr = m.cross(&basis_vec(0), &basis_vec(1)).unwrap();
        assert_eq!(cr, basis_vec(2)); // e1 × e2 = e3
        let chi = m.chi(&basis_vec(3), &basis_vec(4), &basis_vec(5)).unwrap();
        assert_eq!(chi, basis_vec(6)); // χ(e4,e5,e6) = e7
        let chi0 = m.chi(&basis_vec(0), &basis_vec(1), &basis_vec(2)).unwrap();
        assert!(chi0.iter().all(Scalar::is_zero));
    }

    #[test]
    fn lambda2_projection_examples() {
        let m = G2Model::new();
        let iv = m.phi.interior_basis(2); // ι_{e3}φ
        let (p7, p14) = m.project_lambda2(&iv).unwrap();
        assert_eq!(p7, iv);
        assert!(p14.is_zero());

        let (p7b, p14b) = m.project_lambda2(&f7(&[1, 2])).unwrap();
        assert_eq!(p7b, iv.scale(&Scalar::ratio(1, 3)));
        assert_eq!(p7b.add(&p14b).unwrap(), f7(&[1, 2]));
        // the 14-part pairs to zero with ∗φ
        assert!(m.star_phi.wedge(&p14b).unwrap().is_zero());
    }

    #[test]
    fn lambda2_eigenvalue_equations() {
        // ∗(p7 ∧ φ) = 2 p7 and ∗(p14 ∧ φ) = −p14 on random 2-forms
        let m = G2Model::new();
        let mut rng = SmallRng::new(27);
        for _ in 0..20 {
            let a = rng.form(7, 2);
            let (p7, p14) = m.project_lambda2(&a).unwrap();
            let star = |f: &Form| f.wedge(&m.phi).unwrap().hodge(&m.metric).unwrap();
            assert_eq!(star(&p7), p7.scale(&Scalar::from_int(2)));
            assert_eq!(star(&p14), p14.neg());
            assert_eq!(p7.add(&p14).unwrap(), a);
        }
    }

    #[test]
    fn lambda3_projection_examples() {
        let m = G2Model::new();
        let (c, v, p27) = m.project_lambda3(&m.phi).unwrap();
        assert_eq!(c, Scalar::one());
        assert!(v.iter().all(Scalar::is_zero));
        assert!(p27.is_zero());

        let iv = m.star_phi.interior_basis(0);
        let (c2, v2, p27b) = m.project_lambda3(&iv).unwrap();
        assert!(c2.is_zero());
        assert_eq!(v2, basis_vec(0));
        assert!(p27b.is_zero());
        assert_eq!(iv.norm_sq_id(), Scalar::from_int(4));
    }

    #[test]
    fn torsion_round_trip_and_residual() {
        let m = G2Model::new();
        let mut rng = SmallRng::new(11);
        for _ in 0..50 {
            let t = G2Torsion::new(rng.matrix(7, 7)).unwrap();
            let (nphi, _) = m.nabla_from_torsion(&t).unwrap();
            let back = m.torsion_from_nabla(&nphi).unwrap();
            assert_eq!(back, t);
        }
        // a pure φ-component input must be rejected
        let mut bad = vec![Form::zero(7, 3); 7];
        bad[0] = m.phi.clone();
        match m.torsion_from_nabla(&bad) {
            Err(Error::NablaNotInV7Component { direction, .. }) => assert_eq!(direction, 0),
            other => panic!("expected rejection, got {other:?}"),
        }
        // extraction normalization
        let mut one_dir = vec![Form::zero(7, 3); 7];
        one_dir[0] = m.star_phi.interior_basis(0);
        let t = m.torsion_from_nabla(&one_dir).unwrap();
        assert_eq!(t.matrix().get(0, 0), &Scalar::one());
    }

    #[test]
    fn exterior_derivative_shapes() {
        let m = G2Model::new();
        let zero = G2Torsion::zero();
        let (dphi, dstar) = m.exterior_derivatives_from_torsion(&zero).unwrap();
        assert!(dphi.is_zero() && dstar.is_zero());

        // T = Id: dφ = Σ e^i ∧ ι_{e_i}∗φ = 4 ∗φ
        let (dphi, dstar) = m
            .exterior_derivatives_from_torsion(&G2Torsion::identity())
            .unwrap();
        assert_eq!(dphi, m.star_phi.scale(&Scalar::from_int(4)));
        assert!(dstar.is_zero()); // identity is symmetric

        let mut rng = SmallRng::new(5);
        let a = rng.matrix(7, 7);
        let sym = a.add(&a.transpose()).unwrap();
        let (_, dstar) = m
            .exterior_derivatives_from_torsion(&G2Torsion::new(sym).unwrap())
            .unwrap();
        assert!(dstar.is_zero());
    }

    #[test]
    fn nabla_from_identity_torsion() {
        let m = G2Model::new();
        let (nphi, nstar) = m.nabla_from_torsion(&G2Torsion::identity()).unwrap();
        assert_eq!(nphi[0], m.star_phi.interior_basis(0));
        assert_eq!(nstar[0], f7(&[1]).wedge(&m.phi).unwrap().neg());
    }

    #[test]
    fn endo_decomposition_examples() {
        let m = G2Model::new();
        let d = m.decompose_endo(&Matrix::identity(7)).unwrap();
        assert_eq!(d.c1, Scalar::from_int(7));
        assert!(d.v7.iter().all(Scalar::is_zero));
        assert!(d.a14.is_zero());
        assert!(d.s27.is_zero());

        // skew matrix with σ_A = ι_{e3}φ: only the vector part survives
        let beta = m.phi.interior_basis(2);
        let a = matrix_from_2form(&beta).unwrap(); // σ_A = 2β
        let d = m.decompose_endo(&a).unwrap();
        assert!(d.c1.is_zero() && d.a14.is_zero() && d.s27.is_zero());
        assert_eq!(d.v7[2], Scalar::from_int(2));

        let mut rng = SmallRng::new(3);
        for _ in 0..10 {
            let a = rng.matrix(7, 7);
            let d = m.decompose_endo(&a).unwrap();
            assert_eq!(m.recompose_endo(&d).unwrap(), a);
        }
    }

    #[test]
    fn identity_suite_all_pass() {
        let m = G2Model::new();
        let report = m.verify_identities(5, 99, None);
        assert!(report.ok());
        assert!(report.identities.iter().all(|c| c.pass == 5));
        assert_eq!(report.identities.len(), 14);
    }

    #[test]
    fn identity_spot_checks() {
        let m = G2Model::new();
        let e1 = basis_vec(0);
        // u = v = e1 pairing with ∗φ gives 3 vol
        let (lhs, rhs) = m
            .identity_sides("form-0", &[e1.clone(), e1.clone(), e1.clone(), e1.clone()])
            .unwrap();
        assert_eq!(lhs, m.vol.scale(&Scalar::from_int(3)));
        assert_eq!(lhs, rhs);
        // u = v = w = r = e1 in the quartic identity gives 6 vol
        let (lhs, _) = m
            .identity_sides("form-2", &[e1.clone(), e1.clone(), e1.clone(), e1])
            .unwrap();
        assert_eq!(lhs, m.vol.scale(&Scalar::from_int(6)));
        // Σ_i (ι_{e_i}φ)² = 6 ∗φ
        let zero = vec![Scalar::zero(); 7];
        let (lhs, rhs) = m
            .identity_sides("formulas2", &[zero.clone(), zero.clone(), zero.clone(), zero])
            .unwrap();
        assert_eq!(lhs, m.star_phi.scale(&Scalar::from_int(6)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn metric_from_model_form_is_identity() {
        let m = G2Model::new();
        let g = metric_from_phi(&m.phi).unwrap();
        assert!(g.is_identity());
    }

    #[test]
    fn metric_from_scaled_pullback() {
        let m = G2Model::new();
        // pullback by s·Id multiplies the metric by s²
        let s = Scalar::from_int(3);
        let p = Matrix::identity(7).scale(&s);
        let phi_s = m.phi.pullback(&p).unwrap();
        let g = metric_from_phi(&phi_s).unwrap();
        assert_eq!(
            g.matrix(),
            &Matrix::identity(7).scale(&(&s * &s))
        );
    }

    #[test]
    fn metric_rejects_degenerate_form() {
        assert!(matches!(
            metric_from_phi(&f7(&[1, 2, 3])),
            Err(Error::NotAG2Form)
        ));
    }

    #[test]
    fn metric_equivariance_for_general_invertible_maps() {
        // with the determinant normalization used here, a pullback by any
        // invertible P sends the model metric to P⊤P; for integer P the
        // ninth root stays rational and the result is exact
        let mut rng = SmallRng::new(61);
        let mut done = 0;
        while done < 5 {
            let mut p = rng.unimodular(7, 6);
            // make it properly non-unimodular
            let s = Scalar::from_int(rng.int_in(2, 3));
            for c in 0..7 {
                p.set(0, c, &*p.get(0, c) * &s);
            }
            let d = p.det().unwrap();
            if d.is_zero() {
                continue;
            }
            let pulled = m_phi().pullback(&p).unwrap();
            let g = metric_from_phi(&pulled).unwrap();
            assert_eq!(g.matrix(), &p.transpose().mul(&p).unwrap());
            done += 1;
        }
    }

    fn m_phi() -> Form {
        G2Model::new().phi
    }
}
