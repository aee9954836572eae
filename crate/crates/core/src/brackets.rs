//! The pointwise Frölicher–Nijenhuis bracket of contractions of parallel-at-
//! a-point structure forms, the brackets of the cross products built from
//! torsion data, their vector-type projections, and the closed-form torsion
//! maps they induce.

use crate::error::{Error, Result};
use crate::form::Form;
use crate::g2::{G2Model, G2Torsion};
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::scalar::Scalar;
use crate::spin7::{w7_basis, Spin7Model, Spin7Torsion};
use crate::vform::VectorForm;

/// First-order data of two forms at a point: the forms and their directional
/// covariant derivatives along the standard frame.
#[derive(Clone, Debug)]
pub struct PointwiseJet {
    pub psi1: Form,
    pub psi2: Form,
    pub nabla1: Vec<Form>,
    pub nabla2: Vec<Form>,
}

impl PointwiseJet {
    pub fn new(psi1: Form, psi2: Form, nabla1: Vec<Form>, nabla2: Vec<Form>) -> Result<Self> {
        let n = psi1.dim();
        if psi2.dim() != n {
            return Err(Error::DimensionMismatch("jet dimensions".into()));
        }
        if psi1.degree() == 0 || psi2.degree() == 0 {
            return Err(Error::DimensionMismatch(
                "jet forms must have degree ≥ 1".into(),
            ));
        }
        if nabla1.len() != n as usize || nabla2.len() != n as usize {
            return Err(Error::DimensionMismatch(
                "one directional derivative per frame vector".into(),
            ));
        }
        for f in &nabla1 {
            f.shape_check(&psi1)?;
        }
        for f in &nabla2 {
            f.shape_check(&psi2)?;
        }
        Ok(PointwiseJet {
            psi1,
            psi2,
            nabla1,
            nabla2,
        })
    }
}

/// The bracket [δ_g Ψ₁, δ_g Ψ₂] at a point, evaluated over an arbitrary
/// basis (columns of `frame`) with its dual basis; the result is expressed in
/// the standard frame and is basis-independent.
///
/// For a non-orthonormal frame the repeated contraction index pairs through
/// the metric: the ι-slot carries the frame vector f_i and the matching
/// ∇-slot its sharped dual (f^i)♯, exactly as in the δ_g expansion of the
/// bracket operands.
pub fn fn_pointwise(jet: &PointwiseJet, g: &Metric, frame: Option<&Matrix>) -> Result<VectorForm> {
    let n = jet.psi1.dim() as usize;
    let k1 = jet.psi1.degree() - 1;
    let k_out = (k1 as usize) + (jet.psi2.degree() as usize - 1);
    if k_out > n {
        return Ok(VectorForm::zero(n as u8, k_out.min(255) as u8));
    }

    let identity_frame;
    let f = match frame {
        Some(f) => {
            if f.rows() != n || f.cols() != n {
                return Err(Error::DimensionMismatch("frame shape".into()));
            }
            f
        }
        None => {
            identity_frame = Matrix::identity(n);
            &identity_frame
        }
    };
    let dual_mat = f.inverse()?;
    // f_i, f^k, and (f^j)♯
    let fvecs: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|r| f.get(r, i).clone()).collect())
        .collect();
    let duals: Vec<Form> = (0..n)
        .map(|k| {
            let mut d = Form::zero(n as u8, 1);
            for m in 0..n {
                d.set_coeff(&[m as u8], dual_mat.get(k, m).clone());
            }
            d
        })
        .collect();
    let sharps: Vec<Vec<Scalar>> = (0..n)
        .map(|j| g.inverse_matrix().matvec(dual_mat.row(j)))
        .collect::<Result<_>>()?;

    let along = |nabla: &[Form], dirs: &[Vec<Scalar>]| -> Result<Vec<Form>> {
        dirs.iter()
            .map(|dir| {
                let mut acc = Form::zero(nabla[0].dim(), nabla[0].degree());
                for (mu, nf) in nabla.iter().enumerate() {
                    if dir[mu].is_zero() {
                        continue;
                    }
                    acc = acc.add(&nf.scale(&dir[mu]))?;
                }
                Ok(acc)
            })
            .collect()
    };
    // ∇ along the frame vectors (for the d-expansion sums) and along the
    // sharped duals (for the metric-paired index).
    let n1_frame = along(&jet.nabla1, &fvecs)?;
    let n2_frame = along(&jet.nabla2, &fvecs)?;
    let n1_sharp = along(&jet.nabla1, &sharps)?;
    let n2_sharp = along(&jet.nabla2, &sharps)?;

    // Contraction caches.
    let i_p1: Vec<Form> = fvecs
        .iter()
        .map(|v| jet.psi1.interior_vec(v))
        .collect::<Result<_>>()?;
    let i_p2: Vec<Form> = fvecs
        .iter()
        .map(|v| jet.psi2.interior_vec(v))
        .collect::<Result<_>>()?;
    // ι_{f_j} ι_{(f^i)♯} Ψ_l
    let mixed = |psi: &Form| -> Result<Vec<Vec<Form>>> {
        sharps
            .iter()
            .map(|s| {
                let first = psi.interior_vec(s)?;
                fvecs
                    .iter()
                    .map(|v| first.interior_vec(v))
                    .collect::<Result<_>>()
            })
            .collect()
    };
    let ii_p1 = mixed(&jet.psi1)?;
    let ii_p2 = mixed(&jet.psi2)?;
    // ι_{f_j} ∇_{(f^i)♯} Ψ_l
    let contract_each = |forms: &[Form]| -> Result<Vec<Vec<Form>>> {
        forms
            .iter()
            .map(|nf| fvecs.iter().map(|v| nf.interior_vec(v)).collect::<Result<_>>())
            .collect()
    };
    let jn1 = contract_each(&n1_sharp)?;
    let jn2 = contract_each(&n2_sharp)?;
    // S_l[i] = Σ_k f^k ∧ (ι_{f_i} ∇_{f_k} Ψ_l)
    let sum_wedge = |n_frame: &[Form], deg: u8| -> Result<Vec<Form>> {
        (0..n)
            .map(|i| {
                let mut acc = Form::zero(n as u8, deg);
                for k in 0..n {
                    acc = acc.add(&duals[k].wedge(&n_frame[k].interior_vec(&fvecs[i])?)?)?;
                }
                Ok(acc)
            })
            .collect()
    };
    let s1 = sum_wedge(&n1_frame, jet.psi1.degree())?;
    let s2 = sum_wedge(&n2_frame, jet.psi2.degree())?;

    let flip = k1.is_multiple_of(2); // the (−1)^{k1}-weighted terms enter with −(−1)^{k1}
    let mut acc_components: Vec<Form> = (0..n)
        .map(|_| Form::zero(n as u8, k_out as u8))
        .collect();
    for j in 0..n {
        let mut beta = Form::zero(n as u8, k_out as u8);
        for i in 0..n {
            // (ι_{f_i}Ψ₁) ∧ (ι_{f_j}∇_{(f^i)♯}Ψ₂)
            beta = beta.add(&i_p1[i].wedge(&jn2[i][j])?)?;
            // −(ι_{f_j}∇_{(f^i)♯}Ψ₁) ∧ (ι_{f_i}Ψ₂)
            beta = beta.sub(&jn1[i][j].wedge(&i_p2[i])?)?;
            // −(−1)^{k1} (ι_{f_j}ι_{(f^i)♯}Ψ₁) ∧ S₂[i]
            let t2 = ii_p1[i][j].wedge(&s2[i])?;
            // −(−1)^{k1} S₁[i] ∧ (ι_{f_j}ι_{(f^i)♯}Ψ₂)
            let t4 = s1[i].wedge(&ii_p2[i][j])?;
            if flip {
                beta = beta.sub(&t2)?.sub(&t4)?;
            } else {
                beta = beta.add(&t2)?.add(&t4)?;
            }
        }
        if beta.is_zero() {
            continue;
        }
        for (m, w) in sharps[j].iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            acc_components[m] = acc_components[m].add(&beta.scale(w))?;
        }
    }
    VectorForm::from_components(acc_components)
}

/// [Cr, χ] from torsion data: the bracket of δφ with δ∗φ carries one sign
/// from χ = −δ∗φ.
pub fn bracket_cr_chi(model: &G2Model, t: &G2Torsion) -> Result<VectorForm> {
    let (nphi, nstar) = model.nabla_from_torsion(t)?;
    let jet = PointwiseJet::new(model.phi.clone(), model.star_phi.clone(), nphi, nstar)?;
    Ok(fn_pointwise(&jet, &model.metric, None)?.neg())
}

/// Pairing coefficients b_ij = ∗((ι_{e_i}φ) ∧ β_j) of the negated bracket
/// −[Cr, χ] = β_j ⊗ e_j, as derived in the proof of the vector-type formula.
pub fn cr_chi_b_matrix(model: &G2Model, t: &G2Torsion) -> Result<Matrix> {
    let bracket = bracket_cr_chi(model, t)?.neg();
    let mut b = Matrix::zeros(7, 7);
    for i in 0..7 {
        let iphi = model.phi.interior_basis(i as u8);
        for j in 0..7 {
            b.set(i, j, iphi.wedge(bracket.component(j))?.top_coeff()?);
        }
    }
    Ok(b)
}

/// The endomorphism identified with the vector-type part of a tangent-valued
/// 5-form: (∗φ ∧ v♭) ⊗ w ↦ v♭ ⊗ w. Kills the 14-dimensional part.
pub fn pi7_lambda5_endo(model: &G2Model, b: &VectorForm) -> Result<Matrix> {
    if b.dim() != 7 || b.degree() != 5 {
        return Err(Error::DimensionMismatch("expected a (7,5) vector form".into()));
    }
    let mut m = Matrix::zeros(7, 7);
    for i in 0..7 {
        let iphi = model.phi.interior_basis(i as u8);
        for j in 0..7 {
            let c = iphi.wedge(b.component(j))?.top_coeff()?;
            m.set(i, j, &c / model.pair_lambda5());
        }
    }
    Ok(m)
}

/// The vector-type projection itself: Σ_j (∗φ ∧ v_j♭) ⊗ e_j.
pub fn pi7_lambda5_vform(model: &G2Model, b: &VectorForm) -> Result<VectorForm> {
    let endo = pi7_lambda5_endo(model, b)?;
    let mut comps = Vec::with_capacity(7);
    for j in 0..7 {
        let v: Vec<Scalar> = (0..7).map(|i| endo.get(i, j).clone()).collect();
        let flat = model.metric.flat(&v)?;
        comps.push(model.star_phi.wedge(&flat)?);
    }
    VectorForm::from_components(comps)
}

/// [χ, χ] from torsion data; the two χ = −δ∗φ signs cancel.
pub fn bracket_chi_chi(model: &G2Model, t: &G2Torsion) -> Result<VectorForm> {
    let (_, nstar) = model.nabla_from_torsion(t)?;
    let jet = PointwiseJet::new(
        model.star_phi.clone(),
        model.star_phi.clone(),
        nstar.clone(),
        nstar,
    )?;
    fn_pointwise(&jet, &model.metric, None)
}

/// The endomorphism identified with a tangent-valued 6-form via
/// (∗v♭) ⊗ w ↦ v♭ ⊗ w: entries c_ij = ∗(e^i ∧ γ_j).
pub fn l_endo_of(_model: &G2Model, b: &VectorForm) -> Result<Matrix> {
    if b.dim() != 7 || b.degree() != 6 {
        return Err(Error::DimensionMismatch("expected a (7,6) vector form".into()));
    }
    let mut m = Matrix::zeros(7, 7);
    for i in 0..7u8 {
        let ei = Form::basis_elem(7, &[i]);
        for j in 0..7 {
            m.set(i as usize, j, ei.wedge(b.component(j))?.top_coeff()?);
        }
    }
    Ok(m)
}

/// Closed form of [χ, χ]: −4 ∗((T + T⊤)e_i)♭ ⊗ e_i + 6 e^i ∧ τ ∧ φ ⊗ e_i.
pub fn chi_chi_closed_form(model: &G2Model, t: &G2Torsion) -> Result<VectorForm> {
    let sym = t.matrix().add(&t.matrix().transpose())?;
    let tau = t.tau();
    let mut comps = Vec::with_capacity(7);
    for i in 0..7 {
        let row: Vec<Scalar> = sym.row(i).to_vec();
        let first = model
            .metric
            .flat(&row)?
            .hodge(&model.metric)?
            .scale(&Scalar::from_int(-4));
        let second = Form::basis_elem(7, &[i as u8])
            .wedge(&tau)?
            .wedge(&model.phi)?
            .scale(&Scalar::from_int(6));
        comps.push(first.add(&second)?);
    }
    VectorForm::from_components(comps)
}

/// τ₁(T) = 2(T − 2T⊤ − tr(T)·Id), the torsion map realized by the
/// vector-type part of [Cr, χ].
pub fn tau1(t: &G2Torsion) -> Matrix {
    let m = t.matrix();
    let tr = m.trace().expect("square");
    let two = Scalar::from_int(2);
    m.sub(&m.transpose().scale(&two))
        .and_then(|x| x.sub(&Matrix::identity(7).scale(&tr)))
        .map(|x| x.scale(&two))
        .expect("7x7 arithmetic")
}

/// τ₂(T) = −4(T + T⊤) + 6 ∗(e^{ij} ∧ σ_T ∧ φ) entries, the torsion map
/// realized by [χ, χ].
pub fn tau2(model: &G2Model, t: &G2Torsion) -> Result<Matrix> {
    let sym = t.matrix().add(&t.matrix().transpose())?.scale(&Scalar::from_int(-4));
    let tau = t.tau();
    let mut second = Matrix::zeros(7, 7);
    for i in 0..7u8 {
        for j in 0..7u8 {
            if i == j {
                continue;
            }
            let eij = Form::basis_elem(7, &[i]).wedge(&Form::basis_elem(7, &[j]))?;
            let c = eij.wedge(&tau)?.wedge(&model.phi)?.top_coeff()?;
            second.set(i as usize, j as usize, &c * &Scalar::from_int(6));
        }
    }
    sym.add(&second)
}

/// [P, P] from torsion data; the two P = −δΦ signs cancel.
pub fn bracket_pp(model: &Spin7Model, t: &Spin7Torsion) -> Result<VectorForm> {
    let nabla = model.nabla_from_torsion(t)?;
    let jet = PointwiseJet::new(model.phi4.clone(), model.phi4.clone(), nabla.clone(), nabla)?;
    fn_pointwise(&jet, &model.metric, None)
}

/// The 8×7 map identified with the vector-type part of a tangent-valued
/// 6-form on ℝ⁸ via Φ ∧ λ²(a) ⊗ v ↦ v♭ ⊗ a.
pub fn h_endo_of(model: &Spin7Model, b: &VectorForm) -> Result<Matrix> {
    if b.dim() != 8 || b.degree() != 6 {
        return Err(Error::DimensionMismatch("expected an (8,6) vector form".into()));
    }
    let mut m = Matrix::zeros(8, 7);
    for i in 1..8u8 {
        let l2 = model.lambda2(&w7_basis(i))?;
        for mu in 0..8 {
            let c = b.component(mu).wedge(&l2)?.top_coeff()?;
            m.set(mu, i as usize - 1, &c / model.pair_lambda6());
        }
    }
    Ok(m)
}

/// The vector-type projection Σ_μ Φ ∧ λ²(v_μ) ⊗ e_μ of a tangent-valued
/// 6-form on ℝ⁸.
pub fn pp_pi7_vform(model: &Spin7Model, b: &VectorForm) -> Result<VectorForm> {
    let endo = h_endo_of(model, b)?;
    let mut comps = Vec::with_capacity(8);
    for mu in 0..8 {
        let mut v = vec![Scalar::zero(); 8];
        for i in 0..7 {
            v[i + 1] = endo.get(mu, i).clone();
        }
        comps.push(model.phi4.wedge(&model.lambda2(&v)?)?);
    }
    VectorForm::from_components(comps)
}

/// Closed form of the vector-type part of [P, P]:
/// −(2/3) Φ ∧ λ²((4T + φ_σ(T))(e_μ)) ⊗ e_μ.
pub fn pp_pi7_closed_form(model: &Spin7Model, t: &Spin7Torsion) -> Result<VectorForm> {
    let combo = t
        .matrix()
        .scale(&Scalar::from_int(4))
        .add(&model.phi_sigma_apply(t.matrix())?)?;
    let factor = Scalar::ratio(-2, 3);
    let mut comps = Vec::with_capacity(8);
    for mu in 0..8 {
        let mut v = vec![Scalar::zero(); 8];
        for i in 0..7 {
            v[i + 1] = combo.get(mu, i).clone();
        }
        comps.push(model.phi4.wedge(&model.lambda2(&v)?)?.scale(&factor));
    }
    VectorForm::from_components(comps)
}

/// τ₃(T) = −(2/3)(4T + φ_σ(T)), the torsion map realized by the vector-type
/// part of [P, P].
pub fn tau3(model: &Spin7Model, t: &Spin7Torsion) -> Result<Matrix> {
    let combo = t
        .matrix()
        .scale(&Scalar::from_int(4))
        .add(&model.phi_sigma_apply(t.matrix())?)?;
    Ok(combo.scale(&Scalar::ratio(-2, 3)))
}
