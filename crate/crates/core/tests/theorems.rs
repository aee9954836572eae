//! Cross-module consistency of the bracket machinery and exact rank
//! certificates for the irreducible projectors.

use g2fn::basis::basis;
use g2fn::brackets::{fn_pointwise, tau1, PointwiseJet};
use g2fn::form::Form;
use g2fn::g2::G2Model;
use g2fn::matrix::Matrix;
use g2fn::metric::Metric;
use g2fn::polyform::{PolyForm, PolyVectorForm};
use g2fn::rng::SmallRng;
use g2fn::scalar::Scalar;
use g2fn::spin7::{basis_vec8, Spin7Model};
use g2fn::vform::VectorForm;

/// Extends a constant form to the linear polynomial family with the given
/// directional derivatives.
fn linear_family(value: &Form, derivs: &[Form]) -> PolyForm {
    let n = value.dim();
    let mut out = PolyForm::from_form(value);
    for (m, d) in derivs.iter().enumerate() {
        let x_m = g2fn::poly::Poly::var(n, m as u8);
        for (tuple, c) in d.iter_nonzero() {
            out.add_coeff(tuple, &x_m.scale(c));
        }
    }
    out
}

fn random_jet(rng: &mut SmallRng, n: u8, k1: u8, k2: u8) -> PointwiseJet {
    let psi1 = rng.form(n, k1 + 1);
    let psi2 = rng.form(n, k2 + 1);
    let nabla1: Vec<Form> = (0..n).map(|_| rng.form(n, k1 + 1)).collect();
    let nabla2: Vec<Form> = (0..n).map(|_| rng.form(n, k2 + 1)).collect();
    PointwiseJet::new(psi1, psi2, nabla1, nabla2).unwrap()
}

/// The pointwise bracket of a jet must agree with the polynomial bracket of
/// the linearly extended families, evaluated at the origin.
#[test]
fn pointwise_bracket_agrees_with_polynomial_bracket() {
    let mut rng = SmallRng::new(71);
    let g = Metric::identity(4);
    let degree_pairs = [(1u8, 1u8), (1, 2), (2, 1), (2, 2)];
    for trial in 0..8 {
        let (k1, k2) = degree_pairs[trial % degree_pairs.len()];
        let jet = random_jet(&mut rng, 4, k1, k2);
        let pointwise = fn_pointwise(&jet, &g, None).unwrap();

        let family1 = linear_family(&jet.psi1, &jet.nabla1);
        let family2 = linear_family(&jet.psi2, &jet.nabla2);
        let kf1 = PolyVectorForm::delta(&family1).unwrap();
        let kf2 = PolyVectorForm::delta(&family2).unwrap();
        let origin = vec![Scalar::zero(); 4];
        let poly = kf1.fn_bracket(&kf2).unwrap().eval(&origin).unwrap();
        assert_eq!(pointwise, poly, "degrees ({k1},{k2}), trial {trial}");
    }
}

/// For equal odd-degree operands the bracket doubles the two surviving
/// terms; check the generic evaluation against that special form.
#[test]
fn equal_odd_degree_bracket_doubles() {
    let m = G2Model::new();
    let mut rng = SmallRng::new(72);
    let t = g2fn::g2::G2Torsion::new(rng.matrix(7, 7)).unwrap();
    let (_, nstar) = m.nabla_from_torsion(&t).unwrap();
    let jet = PointwiseJet::new(
        m.star_phi.clone(),
        m.star_phi.clone(),
        nstar.clone(),
        nstar.clone(),
    )
    .unwrap();
    let generic = fn_pointwise(&jet, &m.metric, None).unwrap();

    let psi = &m.star_phi;
    let mut comps = Vec::with_capacity(7);
    for j in 0..7u8 {
        let mut beta = Form::zero(7, 6);
        for i in 0..7u8 {
            let t1 = psi
                .interior_basis(i)
                .wedge(&nstar[i as usize].interior_basis(j))
                .unwrap();
            let mut t2 = Form::zero(7, 6);
            for k in 0..7u8 {
                let inner = Form::basis_elem(7, &[k])
                    .wedge(&nstar[k as usize].interior_basis(i))
                    .unwrap();
                t2 = t2
                    .add(&psi.interior_basis(i).interior_basis(j).wedge(&inner).unwrap())
                    .unwrap();
            }
            beta = beta.add(&t1).unwrap().add(&t2).unwrap();
        }
        comps.push(beta.scale(&Scalar::from_int(2)));
    }
    let special = VectorForm::from_components(comps).unwrap();
    assert_eq!(generic, special);
}

fn projector_matrix(dim: usize, mut apply: impl FnMut(usize) -> Form) -> Matrix {
    let mut m = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let image = apply(col);
        for (row, c) in image.coeffs().iter().enumerate() {
            m.set(row, col, c.clone());
        }
    }
    m
}

fn check_projector_family(projs: Vec<(Matrix, usize)>) {
    let dim = projs[0].0.rows();
    let mut sum = Matrix::zeros(dim, dim);
    for (p, rank) in &projs {
        assert_eq!(p.mul(p).unwrap(), *p, "idempotent");
        assert_eq!(p.rank(), *rank, "rank");
        sum = sum.add(p).unwrap();
    }
    assert_eq!(sum, Matrix::identity(dim), "resolution of the identity");
    for (i, (p, _)) in projs.iter().enumerate() {
        for (j, (q, _)) in projs.iter().enumerate() {
            if i != j {
                assert!(p.mul(q).unwrap().is_zero(), "mutual annihilation");
            }
        }
    }
}

#[test]
fn lambda2_projector_ranks_7_and_14() {
    let m = G2Model::new();
    let table = basis(7, 2);
    let p7 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(7, table.tuple(col));
        m.project_lambda2(&alpha).unwrap().0
    });
    let p14 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(7, table.tuple(col));
        m.project_lambda2(&alpha).unwrap().1
    });
    check_projector_family(vec![(p7, 7), (p14, 14)]);
}

#[test]
fn lambda3_projector_ranks_1_7_27() {
    let m = G2Model::new();
    let table = basis(7, 3);
    let split = |col: usize| {
        let alpha = Form::basis_elem(7, table.tuple(col));
        let (c, v, p27) = m.project_lambda3(&alpha).unwrap();
        let p1 = m.phi.scale(&c);
        let p7 = m.star_phi.interior_vec(&v).unwrap();
        (p1, p7, p27)
    };
    let p1 = projector_matrix(table.len(), |col| split(col).0);
    let p7 = projector_matrix(table.len(), |col| split(col).1);
    let p27 = projector_matrix(table.len(), |col| split(col).2);
    check_projector_family(vec![(p1, 1), (p7, 7), (p27, 27)]);
}

#[test]
fn lambda5_projector_ranks_7_and_14() {
    let m = G2Model::new();
    let table = basis(7, 5);
    let p7 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(7, table.tuple(col));
        m.project_lambda5(&alpha).unwrap().0
    });
    let p14 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(7, table.tuple(col));
        m.project_lambda5(&alpha).unwrap().1
    });
    check_projector_family(vec![(p7, 7), (p14, 14)]);
}

#[test]
fn spin_lambda2_projector_ranks_7_and_21() {
    let m = Spin7Model::new();
    let table = basis(8, 2);
    let p7 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(8, table.tuple(col));
        m.project_lambda2(&alpha).unwrap().0
    });
    let p21 = projector_matrix(table.len(), |col| {
        let alpha = Form::basis_elem(8, table.tuple(col));
        m.project_lambda2(&alpha).unwrap().1
    });
    check_projector_family(vec![(p7, 7), (p21, 21)]);
}

#[test]
fn spin_lambda4_projector_ranks_1_7_27_35() {
    let m = Spin7Model::new();
    let table = basis(8, 4);
    let split = |col: usize| {
        let alpha = Form::basis_elem(8, table.tuple(col));
        let s = m.project_lambda4(&alpha).unwrap();
        let p1 = m.phi4.scale(&s.c1);
        let p7 = m.lambda4(&s.v7).unwrap();
        (p1, p7, s.w27, s.w35)
    };
    let p1 = projector_matrix(table.len(), |col| split(col).0);
    let p7 = projector_matrix(table.len(), |col| split(col).1);
    let p27 = projector_matrix(table.len(), |col| split(col).2);
    let p35 = projector_matrix(table.len(), |col| split(col).3);
    check_projector_family(vec![(p1, 1), (p7, 7), (p27, 27), (p35, 35)]);
}

/// The 27-dimensional summand contains the span of λ²(v) ∧ λ²(w) for
/// orthogonal v, w, once the trace and vector parts are removed.
#[test]
fn spin_lambda4_27_part_agrees_with_wedge_span() {
    let m = Spin7Model::new();
    let mut rng = SmallRng::new(55);
    for _ in 0..10 {
        let mut v = rng.vector(8);
        v[0] = Scalar::zero();
        // pick w orthogonal to v among basis combinations
        let mut w = rng.vector(8);
        w[0] = Scalar::zero();
        let dot: Scalar = v
            .iter()
            .zip(&w)
            .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
        let vnorm: Scalar = v
            .iter()
            .fold(Scalar::zero(), |acc, a| &acc + &(a * a));
        if vnorm.is_zero() {
            continue;
        }
        // Gram-Schmidt: w ← w − (⟨v,w⟩/|v|²) v
        let coef = &dot / &vnorm;
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi = &*wi - &(&coef * vi);
        }
        let wedge = m
            .lambda2(&v)
            .unwrap()
            .wedge(&m.lambda2(&w).unwrap())
            .unwrap();
        let s = m.project_lambda4(&wedge).unwrap();
        assert!(s.c1.is_zero(), "no trace part");
        assert!(s.v7.iter().all(Scalar::is_zero), "no vector part");
        assert!(s.w35.is_zero(), "self-dual");
    }
}

/// The orthogonal-pair wedges λ²(v) ∧ λ²(w) span the full 27-dimensional
/// summand of the 4-forms.
#[test]
fn spin_lambda4_27_span_has_rank_27() {
    let m = Spin7Model::new();
    let mut rng = SmallRng::new(56);
    let mut samples = Matrix::zeros(70, 40);
    let mut col = 0;
    while col < 40 {
        let mut v = rng.vector(8);
        v[0] = Scalar::zero();
        let mut w = rng.vector(8);
        w[0] = Scalar::zero();
        let vnorm = v
            .iter()
            .fold(Scalar::zero(), |acc, a| &acc + &(a * a));
        if vnorm.is_zero() {
            continue;
        }
        let dot = v
            .iter()
            .zip(&w)
            .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
        let coef = &dot / &vnorm;
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi = &*wi - &(&coef * vi);
        }
        let wedge = m
            .lambda2(&v)
            .unwrap()
            .wedge(&m.lambda2(&w).unwrap())
            .unwrap();
        let s = m.project_lambda4(&wedge).unwrap();
        // purity checked in the companion test; collect the 27-part
        for (row, c) in s.w27.coeffs().iter().enumerate() {
            samples.set(row, col, c.clone());
        }
        col += 1;
    }
    assert_eq!(samples.rank(), 27);
}

/// The rank-8 summand of maps ℝ⁸ → W₇ is exactly the span of the A_a family.
#[test]
fn pr8_image_is_the_a_map_span() {
    let m = Spin7Model::new();
    // flatten the eight A_{e_μ} into a 56×8 matrix: rank 8
    let mut span = Matrix::zeros(56, 8);
    for mu in 0..8 {
        let a = m.a_map(&basis_vec8(mu)).unwrap();
        for r in 0..8 {
            for c in 0..7 {
                span.set(r * 7 + c, mu, a.get(r, c).clone());
            }
        }
    }
    assert_eq!(span.rank(), 8);
    // pr₈ fixes each A_a
    for mu in 0..8 {
        let a = m.a_map(&basis_vec8(mu)).unwrap();
        let (a8, a48) = m.pr8_pr48(&a).unwrap();
        assert_eq!(a8, a);
        assert!(a48.is_zero());
    }
    // and a random pr₈ image stays inside the span: appending it keeps rank 8
    let mut rng = SmallRng::new(66);
    let (proj, _) = m.pr8_pr48(&rng.matrix(8, 7)).unwrap();
    let mut augmented = Matrix::zeros(56, 9);
    for mu in 0..8 {
        let a = m.a_map(&basis_vec8(mu)).unwrap();
        for r in 0..8 {
            for c in 0..7 {
                augmented.set(r * 7 + c, mu, a.get(r, c).clone());
            }
        }
    }
    for r in 0..8 {
        for c in 0..7 {
            augmented.set(r * 7 + c, 8, proj.get(r, c).clone());
        }
    }
    assert_eq!(augmented.rank(), 8);
}

/// The first torsion map has trivial kernel: as a linear operator on 7×7
/// matrices it has full rank 49.
#[test]
fn tau1_kernel_is_trivial() {
    let mut op = Matrix::zeros(49, 49);
    for col in 0..49 {
        let mut basis_mat = Matrix::zeros(7, 7);
        basis_mat.set(col / 7, col % 7, Scalar::one());
        let image = tau1(&g2fn::g2::G2Torsion::new(basis_mat).unwrap());
        for r in 0..7 {
            for c in 0..7 {
                op.set(r * 7 + c, col, image.get(r, c).clone());
            }
        }
    }
    assert_eq!(op.rank(), 49);
}

/// The third torsion map is a linear isomorphism: 4·id plus the σ operator
/// has no kernel because neither eigenvalue equals −4.
#[test]
fn tau3_is_invertible() {
    let m = Spin7Model::new();
    let shifted = m
        .phi_sigma_matrix()
        .add(&Matrix::identity(56).scale(&Scalar::from_int(4)))
        .unwrap();
    assert_eq!(shifted.rank(), 56);
}

/// Cross products are orthogonal to their arguments and fully antisymmetric.
#[test]
fn cross_product_orthogonality() {
    let m = G2Model::new();
    let s7 = Spin7Model::new();
    let mut rng = SmallRng::new(12);
    let dot = |a: &[Scalar], b: &[Scalar]| {
        a.iter()
            .zip(b)
            .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
    };
    for _ in 0..20 {
        let x = rng.vector(7);
        let y = rng.vector(7);
        let z = rng.vector(7);
        let cr = m.cross(&x, &y).unwrap();
        assert!(dot(&cr, &x).is_zero());
        assert!(dot(&cr, &y).is_zero());
        let swapped = m.cross(&y, &x).unwrap();
        assert_eq!(
            swapped,
            cr.iter().map(|c| -c).collect::<Vec<_>>(),
            "antisymmetry"
        );
        let chi = m.chi(&x, &y, &z).unwrap();
        for arg in [&x, &y, &z] {
            assert!(dot(&chi, arg).is_zero());
        }
        let chi_swap = m.chi(&y, &x, &z).unwrap();
        assert_eq!(chi_swap, chi.iter().map(|c| -c).collect::<Vec<_>>());
        // pairing ⟨χ(x,y,z), w⟩ is antisymmetric in the last two slots too
        let w = rng.vector(7);
        let chi_w = m.chi(&x, &y, &w).unwrap();
        assert_eq!(dot(&chi, &w), -&dot(&chi_w, &z));

        let a = rng.vector(8);
        let b = rng.vector(8);
        let c = rng.vector(8);
        let p = s7.p_cross(&a, &b, &c).unwrap();
        for arg in [&a, &b, &c] {
            assert!(dot(&p, arg).is_zero());
        }
    }
}

/// Norm identities of the contractions against random vectors.
#[test]
fn contraction_norms_scale_with_the_vector() {
    let m = G2Model::new();
    let mut rng = SmallRng::new(13);
    for _ in 0..20 {
        let v = rng.vector(7);
        let norm: Scalar = v
            .iter()
            .fold(Scalar::zero(), |acc, c| &acc + &(c * c));
        let iphi = m.phi.interior_vec(&v).unwrap();
        assert_eq!(iphi.norm_sq_id(), &Scalar::from_int(3) * &norm);
        let istar = m.star_phi.interior_vec(&v).unwrap();
        assert_eq!(istar.norm_sq_id(), &Scalar::from_int(4) * &norm);
    }
}
