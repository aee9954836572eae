//! Torsion classification: which irreducible components of an endomorphism
//! vanish. Sixteen classes on the 7-dimensional side (four components), four
//! classes on the 8-dimensional side (two components), plus the independent
//! equivalence checks between torsion and bracket vanishing.

use std::collections::BTreeMap;

use crate::brackets::{
    bracket_chi_chi, bracket_cr_chi, bracket_pp, h_endo_of, l_endo_of, pi7_lambda5_endo,
};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::g2::{matrix_from_2form, G2Model, G2Torsion};
use crate::matrix::Matrix;
use crate::report::{G2TheoremReport, Spin7TheoremReport};
use crate::scalar::Scalar;
use crate::spin7::{basis_vec8, Spin7Model, Spin7Torsion};

pub const G2_COMPONENTS: [&str; 4] = ["V1", "V7", "V14", "V27"];
pub const SPIN7_COMPONENTS: [&str; 2] = ["W8", "W48"];

/// The set of nonvanishing irreducible components of an endomorphism, with
/// the squared magnitude of each component.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassLabel {
    pub family: String,
    pub components: Vec<String>,
    /// Squared Frobenius norms, keyed by component name.
    pub norms: BTreeMap<String, Scalar>,
}

impl ClassLabel {
    fn from_parts(family: &str, parts: Vec<(&str, Matrix)>, tol: Option<f64>) -> Self {
        let total: Scalar = parts
            .iter()
            .fold(Scalar::zero(), |acc, (_, m)| &acc + &m.frobenius_sq());
        let mut components = Vec::new();
        let mut norms = BTreeMap::new();
        for (name, m) in parts {
            let sq = m.frobenius_sq();
            let vanishes = match tol {
                None => sq.is_zero(),
                Some(t) => sq.to_f64() <= t * t * total.to_f64(),
            };
            if !vanishes {
                components.push(name.to_string());
            }
            norms.insert(name.to_string(), sq);
        }
        ClassLabel {
            family: family.to_string(),
            components,
            norms,
        }
    }
}

/// Component matrices of a 7×7 endomorphism: trace part, the two skew
/// pieces, and the traceless symmetric piece.
pub fn g2_component_matrices(model: &G2Model, a: &Matrix) -> Result<[Matrix; 4]> {
    let d = model.decompose_endo(a)?;
    let half = Scalar::ratio(1, 2);
    let m1 = Matrix::identity(7).scale(&(&d.c1 / &Scalar::from_int(7)));
    let m7 = matrix_from_2form(&model.phi.interior_vec(&d.v7)?)?.scale(&half);
    let m14 = matrix_from_2form(&d.a14)?.scale(&half);
    Ok([m1, m7, m14, d.s27])
}

/// Classifies a 7×7 endomorphism. Exact mode (`tol = None`) decides
/// vanishing literally; float mode compares against `tol`·‖A‖.
pub fn classify_g2(model: &G2Model, a: &Matrix, tol: Option<f64>) -> Result<ClassLabel> {
    let [m1, m7, m14, m27] = g2_component_matrices(model, a)?;
    Ok(ClassLabel::from_parts(
        "g2",
        vec![
            (G2_COMPONENTS[0], m1),
            (G2_COMPONENTS[1], m7),
            (G2_COMPONENTS[2], m14),
            (G2_COMPONENTS[3], m27),
        ],
        tol,
    ))
}

/// Classifies an 8×7 map by its two eigenprojections.
pub fn classify_spin7(model: &Spin7Model, a: &Matrix, tol: Option<f64>) -> Result<ClassLabel> {
    let (a8, a48) = model.pr8_pr48(a)?;
    Ok(ClassLabel::from_parts(
        "spin7",
        vec![(SPIN7_COMPONENTS[0], a8), (SPIN7_COMPONENTS[1], a48)],
        tol,
    ))
}

/// Evaluates the five equivalent vanishing conditions independently and
/// checks class consistency across the torsion and both bracket
/// endomorphisms.
pub fn check_theorem_g2(model: &G2Model, t: &G2Torsion) -> Result<G2TheoremReport> {
    let (nphi, _) = model.nabla_from_torsion(t)?;
    let nabla_zero = nphi.iter().all(Form::is_zero);
    let cr_chi = bracket_cr_chi(model, t)?;
    let k_endo = pi7_lambda5_endo(model, &cr_chi)?;
    let chi_chi = bracket_chi_chi(model, t)?;
    let l_endo = l_endo_of(model, &chi_chi)?;
    let class_t = classify_g2(model, t.matrix(), None)?;
    let class_k = classify_g2(model, &k_endo, None)?;
    let class_l = classify_g2(model, &l_endo, None)?;
    let classes_consistent =
        class_t.components == class_k.components && class_t.components == class_l.components;
    Ok(G2TheoremReport {
        torsion_zero: t.is_zero(),
        nabla_zero,
        pi7_cr_chi_zero: k_endo.is_zero(),
        cr_chi_zero: cr_chi.is_zero(),
        chi_chi_zero: chi_chi.is_zero(),
        classes_consistent,
        class_torsion: class_t.components,
        class_k_endo: class_k.components,
        class_l_endo: class_l.components,
    })
}

/// Evaluates the four equivalent vanishing conditions on the 8-dimensional
/// side, plus class consistency between torsion and bracket endomorphism.
pub fn check_theorem_spin7(model: &Spin7Model, t: &Spin7Torsion) -> Result<Spin7TheoremReport> {
    let nabla = model.nabla_from_torsion(t)?;
    let nabla_zero = nabla.iter().all(Form::is_zero);
    let pp = bracket_pp(model, t)?;
    let h_endo = h_endo_of(model, &pp)?;
    let class_t = classify_spin7(model, t.matrix(), None)?;
    let class_h = classify_spin7(model, &h_endo, None)?;
    Ok(Spin7TheoremReport {
        torsion_zero: t.is_zero(),
        nabla_zero,
        pi7_pp_zero: h_endo.is_zero(),
        pp_zero: pp.is_zero(),
        classes_consistent: class_t.components == class_h.components,
        class_torsion: class_t.components,
        class_h_endo: class_h.components,
    })
}

/// Deterministic torsion generators, one per irreducible component. Each
/// lies purely in its component.
pub fn g2_generators(model: &G2Model) -> Result<Vec<(&'static str, Matrix)>> {
    // trace part: the identity
    let g1 = Matrix::identity(7);
    // vector-type skew part: σ_A proportional to ι_{e3}φ
    let g7 = matrix_from_2form(&model.phi.interior_basis(2))?;
    // 14-type skew part: σ_A proportional to the 14-part of e^{12}
    let e01 = Form::basis_elem(7, &[0, 1]);
    let (_, p14) = model.project_lambda2(&e01)?;
    let g14 = matrix_from_2form(&p14.scale(&Scalar::from_int(3)))?;
    // traceless symmetric part
    let mut g27 = Matrix::zeros(7, 7);
    g27.set(0, 0, Scalar::one());
    g27.set(1, 1, Scalar::from_int(-1));
    Ok(vec![
        ("V1", g1),
        ("V7", g7),
        ("V14", g14),
        ("V27", g27),
    ])
}

/// All sixteen class witnesses: for every subset of components, the sum of
/// its generators.
pub fn g2_witnesses(model: &G2Model) -> Result<Vec<(Vec<String>, G2Torsion)>> {
    let gens = g2_generators(model)?;
    let mut out = Vec::with_capacity(16);
    for mask in 0u32..16 {
        let mut names = Vec::new();
        let mut m = Matrix::zeros(7, 7);
        for (bit, (name, gen)) in gens.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                names.push((*name).to_string());
                m = m.add(gen)?;
            }
        }
        out.push((names, G2Torsion::new(m)?));
    }
    Ok(out)
}

/// Deterministic generators of the two components on the 8-dimensional
/// side.
pub fn spin7_generators(model: &Spin7Model) -> Result<Vec<(&'static str, Matrix)>> {
    let g8 = model.a_map(&basis_vec8(0))?;
    let mut seed = Matrix::zeros(8, 7);
    seed.set(0, 0, Scalar::one());
    let (_, pr48) = model.pr8_pr48(&seed)?;
    let g48 = pr48.scale(&Scalar::from_int(14)); // integer entries
    if g48.is_zero() {
        return Err(Error::InvalidInput("degenerate rank-48 generator".into()));
    }
    Ok(vec![("W8", g8), ("W48", g48)])
}

/// All four class witnesses on the 8-dimensional side.
pub fn spin7_witnesses(model: &Spin7Model) -> Result<Vec<(Vec<String>, Spin7Torsion)>> {
    let gens = spin7_generators(model)?;
    let mut out = Vec::with_capacity(4);
    for mask in 0u32..4 {
        let mut names = Vec::new();
        let mut m = Matrix::zeros(8, 7);
        for (bit, (name, gen)) in gens.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                names.push((*name).to_string());
                m = m.add(gen)?;
            }
        }
        out.push((names, Spin7Torsion::new(m)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SmallRng;

    #[test]
    fn classify_identity_and_zero() {
        let m = G2Model::new();
        let label = classify_g2(&m, &Matrix::identity(7), None).unwrap();
        assert_eq!(label.components, vec!["V1"]);
        assert_eq!(label.norms.get("V1").unwrap(), &Scalar::from_int(7));
        let label = classify_g2(&m, &Matrix::zeros(7, 7), None).unwrap();
        assert!(label.components.is_empty());
    }

    #[test]
    fn generators_are_pure() {
        let m = G2Model::new();
        for (name, gen) in g2_generators(&m).unwrap() {
            let label = classify_g2(&m, &gen, None).unwrap();
            assert_eq!(label.components, vec![name.to_string()], "generator {name}");
        }
        let s7 = Spin7Model::new();
        for (name, gen) in spin7_generators(&s7).unwrap() {
            let label = classify_spin7(&s7, &gen, None).unwrap();
            assert_eq!(label.components, vec![name.to_string()], "generator {name}");
        }
    }

    #[test]
    fn generic_matrix_hits_every_component() {
        let m = G2Model::new();
        let mut rng = SmallRng::new(19);
        let label = classify_g2(&m, &rng.nonzero_matrix(7, 7), None).unwrap();
        assert_eq!(label.components, vec!["V1", "V7", "V14", "V27"]);
        let s7 = Spin7Model::new();
        let label = classify_spin7(&s7, &rng.nonzero_matrix(8, 7), None).unwrap();
        assert_eq!(label.components, vec!["W8", "W48"]);
    }

    #[test]
    fn float_tolerance_thresholds() {
        let m = G2Model::new();
        let mut a = Matrix::identity(7).to_float();
        a.set(0, 1, Scalar::float(1e-13));
        let strict = classify_g2(&m, &a, Some(1e-15)).unwrap();
        assert!(strict.components.len() > 1);
        let relaxed = classify_g2(&m, &a, Some(1e-9)).unwrap();
        assert_eq!(relaxed.components, vec!["V1"]);
    }

    #[test]
    fn theorem_reports_at_zero_torsion() {
        let m = G2Model::new();
        let rep = check_theorem_g2(&m, &G2Torsion::zero()).unwrap();
        assert!(rep.torsion_zero && rep.nabla_zero && rep.pi7_cr_chi_zero);
        assert!(rep.cr_chi_zero && rep.chi_chi_zero && rep.classes_consistent);
        assert!(rep.all_equivalent());

        let s7 = Spin7Model::new();
        let rep = check_theorem_spin7(&s7, &Spin7Torsion::zero()).unwrap();
        assert!(rep.torsion_zero && rep.nabla_zero && rep.pi7_pp_zero && rep.pp_zero);
        assert!(rep.classes_consistent && rep.all_equivalent());
    }

    #[test]
    fn theorem_reports_at_generic_torsion() {
        let m = G2Model::new();
        let mut rng = SmallRng::new(4);
        let t = G2Torsion::new(rng.nonzero_matrix(7, 7)).unwrap();
        let rep = check_theorem_g2(&m, &t).unwrap();
        assert!(!rep.torsion_zero && !rep.nabla_zero && !rep.pi7_cr_chi_zero);
        assert!(!rep.cr_chi_zero && !rep.chi_chi_zero);
        assert!(rep.all_equivalent());
        assert!(rep.classes_consistent);
    }

    #[test]
    fn witness_classes_round_trip() {
        let m = G2Model::new();
        for (names, t) in g2_witnesses(&m).unwrap() {
            let label = classify_g2(&m, t.matrix(), None).unwrap();
            assert_eq!(label.components, names);
        }
        let s7 = Spin7Model::new();
        for (names, t) in spin7_witnesses(&s7).unwrap() {
            let label = classify_spin7(&s7, t.matrix(), None).unwrap();
            assert_eq!(label.components, names);
        }
    }
}
