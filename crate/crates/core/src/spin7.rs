//! The standard Spin(7) model on ℝ⁸: the self-dual 4-form, the 3-fold cross
//! product, the equivariant embeddings λ² / λ⁴ / λ⁶ of the 7-dimensional
//! factor, the σ tensor with its 56×56 operator, the rank-8/rank-48
//! projectors on torsion space, and the identity suite with exact constant
//! fitting.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::form::Form;
use crate::g2::{expect_shape, forms_equal, G2Model};
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::report::IdentityReport;
use crate::rng::SmallRng;
use crate::scalar::Scalar;

/// The model Spin(7) structure. The 7-dimensional factor is realized as the
/// orthogonal complement of e0, carrying the embedded G2 model.
#[derive(Clone, Debug)]
pub struct Spin7Model {
    pub metric: Metric,
    /// The structure 4-form Φ.
    pub phi4: Form,
    pub vol: Form,
    /// The G2 3-form on span(e1..e7), as a form on ℝ⁸.
    pub g2_phi: Form,
    /// Its 7-dimensional Hodge dual, as a form on ℝ⁸.
    pub g2_star7: Form,
    /// ⟨λ⁴(u), λ⁴(v)⟩ = c ⟨u, v⟩; c = 8.
    gram_lambda4: Scalar,
    /// Φ ∧ λ²(u) ∧ λ²(v) = c ⟨u, v⟩ vol; c = 12.
    pair_lambda6: Scalar,
    /// |Φ|² = 14.
    phi_norm_sq: Scalar,
    sigma_matrix: OnceLock<Matrix>,
}

/// Embeds a form on ℝ⁷ into ℝ⁸ along span(e1..e7).
fn embed7(f: &Form) -> Form {
    let mut out = Form::zero(8, f.degree());
    for (tuple, c) in f.iter_nonzero() {
        let shifted: Vec<u8> = tuple.iter().map(|i| i + 1).collect();
        out.set_coeff(&shifted, c.clone());
    }
    out
}

/// A W7 vector: an ℝ⁸ vector with vanishing e0-component.
fn check_w7(v: &[Scalar]) -> Result<()> {
    if v.len() != 8 {
        return Err(Error::DimensionMismatch("expected an ℝ⁸ vector".into()));
    }
    if !v[0].is_zero() {
        return Err(Error::NotInW7);
    }
    Ok(())
}

impl Spin7Model {
    pub fn new() -> Self {
        let g2 = G2Model::new();
        let g2_phi = embed7(&g2.phi);
        let g2_star7 = embed7(&g2.star_phi);
        let metric = Metric::identity(8);
        let e0 = Form::basis_elem(8, &[0]);
        let phi4 = e0
            .wedge(&g2_phi)
            .and_then(|f| f.add(&g2_star7))
            .expect("model 4-form");
        let vol = Form::basis_elem(8, &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(
            phi4.hodge(&metric).expect("hodge"),
            phi4,
            "model 4-form must be self-dual"
        );
        let phi_norm_sq = phi4.norm_sq_id();
        assert_eq!(
            phi4.wedge(&phi4).expect("Φ ∧ Φ"),
            vol.scale(&phi_norm_sq)
        );

        let mut model = Spin7Model {
            metric,
            phi4,
            vol,
            g2_phi,
            g2_star7,
            gram_lambda4: Scalar::zero(),
            pair_lambda6: Scalar::zero(),
            phi_norm_sq,
            sigma_matrix: OnceLock::new(),
        };
        model.gram_lambda4 = model.derive_gram_lambda4();
        model.pair_lambda6 = model.derive_pair_lambda6();
        model
    }

    fn derive_gram_lambda4(&self) -> Scalar {
        let lambdas: Vec<Form> = (1..8)
            .map(|i| self.lambda4(&w7_basis(i)).expect("basis is in W7"))
            .collect();
        let c = lambdas[0].norm_sq_id();
        for (i, a) in lambdas.iter().enumerate() {
            for (j, b) in lambdas.iter().enumerate() {
                let expect = if i == j { c.clone() } else { Scalar::zero() };
                assert_eq!(a.inner_id(b), expect, "λ⁴ Gram matrix not c·I");
            }
        }
        c
    }

    fn derive_pair_lambda6(&self) -> Scalar {
        let mut c = Scalar::zero();
        for i in 1..8u8 {
            for j in 1..8u8 {
                let w = self
                    .phi4
                    .wedge(&self.lambda2(&w7_basis(i)).unwrap())
                    .unwrap()
                    .wedge(&self.lambda2(&w7_basis(j)).unwrap())
                    .unwrap()
                    .top_coeff()
                    .unwrap();
                if i == j {
                    if i == 1 {
                        c = w.clone();
                    }
                    assert_eq!(w, c, "λ² pairing is not a multiple of the identity");
                } else {
                    assert!(w.is_zero(), "λ² pairing has off-diagonal entries");
                }
            }
        }
        c
    }

    pub fn gram_lambda4(&self) -> &Scalar {
        &self.gram_lambda4
    }

    pub fn pair_lambda6(&self) -> &Scalar {
        &self.pair_lambda6
    }

    pub fn phi_norm_sq(&self) -> &Scalar {
        &self.phi_norm_sq
    }

    /// 3-fold cross product: g(P(x,y,z), w) = Φ(x,y,z,w).
    pub fn p_cross(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        let one_form = self
            .phi4
            .interior_vec(x)?
            .interior_vec(y)?
            .interior_vec(z)?;
        self.metric.sharp(&one_form)
    }

    /// λ²(v) = e^0 ∧ v♭ + ι_v φ.
    pub fn lambda2(&self, v: &[Scalar]) -> Result<Form> {
        check_w7(v)?;
        let flat = self.metric.flat(v)?;
        Form::basis_elem(8, &[0])
            .wedge(&flat)?
            .add(&self.g2_phi.interior_vec(v)?)
    }

    /// λ⁴(v) = e^0 ∧ (ι_v ∗₇φ) − v♭ ∧ φ.
    pub fn lambda4(&self, v: &[Scalar]) -> Result<Form> {
        check_w7(v)?;
        let flat = self.metric.flat(v)?;
        Form::basis_elem(8, &[0])
            .wedge(&self.g2_star7.interior_vec(v)?)?
            .sub(&flat.wedge(&self.g2_phi)?)
    }

    /// λ⁶(v) = Φ ∧ λ²(v).
    pub fn lambda6(&self, v: &[Scalar]) -> Result<Form> {
        self.phi4.wedge(&self.lambda2(v)?)
    }

    /// Dispatch on k ∈ {2, 4, 6}.
    pub fn lambda_k(&self, v: &[Scalar], k: u8) -> Result<Form> {
        match k {
            2 => self.lambda2(v),
            4 => self.lambda4(v),
            6 => self.lambda6(v),
            _ => Err(Error::InvalidInput(format!("lambda_k with k = {k}"))),
        }
    }

    /// Splits a 2-form into its 7- and 21-dimensional parts using the
    /// eigenvalues 3 and −1 of α ↦ ∗(Φ ∧ α).
    pub fn project_lambda2(&self, a: &Form) -> Result<(Form, Form)> {
        expect_shape(a, 8, 2)?;
        let star = self.phi4.wedge(a)?.hodge(&self.metric)?;
        let quarter = Scalar::ratio(1, 4);
        let p7 = a.add(&star)?.scale(&quarter);
        let p21 = a.scale(&Scalar::from_int(3)).sub(&star)?.scale(&quarter);
        Ok((p7, p21))
    }

    /// Splits a 4-form into the line along Φ, the λ⁴ image, the trace-free
    /// self-dual remainder, and the anti-self-dual part.
    pub fn project_lambda4(&self, a: &Form) -> Result<Lambda4Split> {
        expect_shape(a, 8, 4)?;
        let c1 = &a.inner_id(&self.phi4) / &self.phi_norm_sq;
        let mut v7 = vec![Scalar::zero(); 8];
        for i in 1..8u8 {
            let l = self.lambda4(&w7_basis(i))?;
            v7[i as usize] = &a.inner_id(&l) / &self.gram_lambda4;
        }
        let w35 = a.sub(&a.hodge(&self.metric)?)?.scale(&Scalar::ratio(1, 2));
        let w27 = a
            .sub(&self.phi4.scale(&c1))?
            .sub(&self.lambda4(&v7)?)?
            .sub(&w35)?;
        Ok(Lambda4Split { c1, v7, w27, w35 })
    }

    /// σ(a, u, b, v) = ½ ∗(a♭ ∧ b♭ ∧ λ⁴(u) ∧ λ²(v)).
    pub fn sigma(&self, a: &[Scalar], u: &[Scalar], b: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        let fa = self.metric.flat(a)?;
        let fb = self.metric.flat(b)?;
        let top = fa
            .wedge(&fb)?
            .wedge(&self.lambda4(u)?)?
            .wedge(&self.lambda2(v)?)?
            .top_coeff()?;
        Ok(&top * &Scalar::ratio(1, 2))
    }

    /// The 56×56 matrix of A ↦ σ(e_ν, A(e_μ), e_μ, e_i) e_i acting on maps
    /// ℝ⁸ → W₇ flattened row-major as (μ, i) ↦ 7μ + i. Built once, exactly.
    pub fn phi_sigma_matrix(&self) -> &Matrix {
        self.sigma_matrix.get_or_init(|| {
            Matrix::from_fn(56, 56, |row, col| {
                let (nu, i) = (row / 7, row % 7);
                let (mu, j) = (col / 7, col % 7);
                self.sigma(
                    &basis_vec8(nu),
                    &w7_basis(j as u8 + 1),
                    &basis_vec8(mu),
                    &w7_basis(i as u8 + 1),
                )
                .expect("basis tuples are valid")
            })
        })
    }

    /// Applies the σ operator to an 8×7 map.
    pub fn phi_sigma_apply(&self, a: &Matrix) -> Result<Matrix> {
        expect_torsion_shape(a)?;
        let m = self.phi_sigma_matrix();
        let flat: Vec<Scalar> = (0..8)
            .flat_map(|mu| (0..7).map(move |i| (mu, i)))
            .map(|(mu, i)| a.get(mu, i).clone())
            .collect();
        let out = m.matvec(&flat)?;
        Ok(Matrix::from_fn(8, 7, |mu, i| out[mu * 7 + i].clone()))
    }

    /// Eigenprojectors of the σ operator: the rank-8 summand carries
    /// eigenvalue 6, the rank-48 summand eigenvalue −1.
    pub fn pr8_pr48(&self, a: &Matrix) -> Result<(Matrix, Matrix)> {
        let fs = self.phi_sigma_apply(a)?;
        let seventh = Scalar::ratio(1, 7);
        let a8 = fs.add(a)?.scale(&seventh);
        let a48 = a.scale(&Scalar::from_int(6)).sub(&fs)?.scale(&seventh);
        Ok((a8, a48))
    }

    /// The rank-8 family A_a(b) = ⟨(ι_a λ²(e_i))♯, b⟩ e_i as an 8×7 matrix.
    pub fn a_map(&self, a: &[Scalar]) -> Result<Matrix> {
        if a.len() != 8 {
            return Err(Error::DimensionMismatch("expected an ℝ⁸ vector".into()));
        }
        let mut m = Matrix::zeros(8, 7);
        for i in 1..8u8 {
            let one_form = self.lambda2(&w7_basis(i))?.interior_vec(a)?;
            for mu in 0..8u8 {
                m.set(mu as usize, i as usize - 1, one_form.coeff(&[mu]).clone());
            }
        }
        Ok(m)
    }

    /// ∇_{e_μ} Φ = λ⁴(T(e_μ)) for each frame direction.
    pub fn nabla_from_torsion(&self, t: &Spin7Torsion) -> Result<Vec<Form>> {
        (0..8).map(|mu| self.lambda4(&t.image_of_basis(mu))).collect()
    }

    /// Recovers the torsion from ∇Φ; every direction must lie in the λ⁴
    /// image.
    pub fn torsion_from_nabla(&self, nabla: &[Form]) -> Result<Spin7Torsion> {
        if nabla.len() != 8 {
            return Err(Error::DimensionMismatch("expected 8 directions".into()));
        }
        let mut t = Matrix::zeros(8, 7);
        for (mu, np) in nabla.iter().enumerate() {
            let split = self.project_lambda4(np)?;
            let residual = np.sub(&self.lambda4(&split.v7)?)?;
            if !residual.is_zero() {
                return Err(Error::NablaNotInW7Component {
                    direction: mu,
                    residual: residual.norm_sq_id().repr(),
                });
            }
            for i in 1..8 {
                t.set(mu, i - 1, split.v7[i].clone());
            }
        }
        Spin7Torsion::new(t)
    }

    /// Randomized identity suite with exact fitting of the four structure
    /// constants.
    pub fn verify_identities(&self, samples: u64, seed: u64, tol: Option<f64>) -> IdentityReport {
        let mut report = IdentityReport::new("spin7", samples);
        let mut rng = SmallRng::new(seed);
        let ids = spin7_identity_ids();
        let mut pass = vec![0u64; ids.len()];
        let mut fit_rows: Vec<(Scalar, Scalar, Scalar, Scalar)> = Vec::new();
        for _ in 0..samples {
            let mut a = rng.vector(8);
            let mut b = rng.vector(8);
            let mut u = w7_random(&mut rng);
            let mut v = w7_random(&mut rng);
            if tol.is_some() {
                for vecs in [&mut a, &mut b, &mut u, &mut v] {
                    for c in vecs.iter_mut() {
                        *c = c.to_float();
                    }
                }
            }
            let vecs = [a, b, u, v];
            for (which, id) in ids.iter().enumerate() {
                let (lhs, rhs) = self
                    .identity_sides(id, &vecs)
                    .expect("identity evaluation is total");
                if forms_equal(&lhs, &rhs, tol) {
                    pass[which] += 1;
                } else {
                    let mut witness = BTreeMap::new();
                    for (name, w) in ["a", "b", "u", "v"].iter().zip(&vecs) {
                        witness.insert(
                            name.to_string(),
                            format!(
                                "[{}]",
                                w.iter().map(Scalar::repr).collect::<Vec<_>>().join(",")
                            ),
                        );
                    }
                    report.fail(id, witness);
                }
            }
            if tol.is_none() {
                fit_rows.push(self.fit_row(&vecs[0], &vecs[1], &vecs[2], &vecs[3]));
            }
        }
        for (which, id) in ids.iter().enumerate() {
            report.record(id, pass[which]);
        }
        if tol.is_none() {
            match self.fit_constants(&fit_rows) {
                Ok((c1, c2, c3, c4)) => {
                    report.constants.insert("c1".into(), c1.repr());
                    report.constants.insert("c2".into(), c2.repr());
                    report.constants.insert("c3".into(), c3.repr());
                    report.constants.insert("c4".into(), c4.repr());
                }
                Err(_) => {
                    report.fail("constant-fit", BTreeMap::new());
                }
            }
        }
        report
    }

    /// Left and right side of one identity on vectors (a, b ∈ ℝ⁸, u, v ∈ W₇).
    pub fn identity_sides(&self, id: &str, vecs: &[Vec<Scalar>]) -> Result<(Form, Form)> {
        let (a, b, u, v) = (&vecs[0], &vecs[1], &vecs[2], &vecs[3]);
        match id {
            "l4l2" => {
                let lhs = self.lambda4(u)?.wedge(&self.lambda2(v)?)?;
                let rhs = self.l4l2_closed_form(u, v)?;
                Ok((lhs, rhs))
            }
            "spinformula1" => {
                let lhs = self
                    .phi4
                    .interior_vec(a)?
                    .wedge(&self.lambda4(u)?.interior_vec(b)?)?
                    .wedge(&self.lambda2(v)?)?;
                let rhs = self.invariant_combination(a, b, u, v, -4, 1)?;
                Ok((lhs, rhs))
            }
            "spinformula2" => {
                let lhs = self.spinformula2_lhs(a, b, u, v)?;
                let rhs = self.invariant_combination(a, b, u, v, -12, 1)?;
                Ok((lhs, rhs))
            }
            _ => Err(Error::InvalidInput(format!("unknown identity {id}"))),
        }
    }

    /// λ⁴(u) ∧ λ²(v) = 2 u♭∧v♭∧(e^0∧φ − ∗₇φ) − 2 e^0 ∧ ∗₇(u♭ ∧ v♭).
    fn l4l2_closed_form(&self, u: &[Scalar], v: &[Scalar]) -> Result<Form> {
        let fu = self.metric.flat(u)?;
        let fv = self.metric.flat(v)?;
        let e0 = Form::basis_elem(8, &[0]);
        let mix = e0.wedge(&self.g2_phi)?.sub(&self.g2_star7)?;
        let first = fu
            .wedge(&fv)?
            .wedge(&mix)?
            .scale(&Scalar::from_int(2));
        let second = e0
            .wedge(&star7(&fu.wedge(&fv)?)?)?
            .scale(&Scalar::from_int(2));
        first.sub(&second)
    }

    fn spinformula2_lhs(
        &self,
        a: &[Scalar],
        b: &[Scalar],
        u: &[Scalar],
        v: &[Scalar],
    ) -> Result<Form> {
        let fa = self.metric.flat(a)?;
        let l4u = self.lambda4(u)?;
        let l2v = self.lambda2(v)?;
        let mut acc = Form::zero(8, 8);
        for mu in 0..8u8 {
            let term = fa
                .wedge(&self.phi4.interior_basis(mu).interior_vec(b)?)?
                .wedge(&l4u.interior_basis(mu))?
                .wedge(&l2v)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// c · ⟨a,b⟩⟨u,v⟩ vol + c' · a♭∧b♭∧λ⁴(u)∧λ²(v).
    fn invariant_combination(
        &self,
        a: &[Scalar],
        b: &[Scalar],
        u: &[Scalar],
        v: &[Scalar],
        c: i64,
        c_wedge: i64,
    ) -> Result<Form> {
        let dot = |x: &[Scalar], y: &[Scalar]| {
            let mut acc = Scalar::zero();
            for (p, q) in x.iter().zip(y) {
                acc += &(p * q);
            }
            acc
        };
        let scalar = &(&Scalar::from_int(c) * &dot(a, b)) * &dot(u, v);
        let wedge = self
            .metric
            .flat(a)?
            .wedge(&self.metric.flat(b)?)?
            .wedge(&self.lambda4(u)?)?
            .wedge(&self.lambda2(v)?)?
            .scale(&Scalar::from_int(c_wedge));
        self.vol.scale(&scalar).add(&wedge)
    }

    /// One fitting row: the invariant coefficients and the two left sides.
    fn fit_row(
        &self,
        a: &[Scalar],
        b: &[Scalar],
        u: &[Scalar],
        v: &[Scalar],
    ) -> (Scalar, Scalar, Scalar, Scalar) {
        let dot = |x: &[Scalar], y: &[Scalar]| {
            let mut acc = Scalar::zero();
            for (p, q) in x.iter().zip(y) {
                acc += &(p * q);
            }
            acc
        };
        let x = &dot(a, b) * &dot(u, v);
        let y = self
            .metric
            .flat(a)
            .and_then(|fa| fa.wedge(&self.metric.flat(b).unwrap()))
            .and_then(|f| f.wedge(&self.lambda4(u).unwrap()))
            .and_then(|f| f.wedge(&self.lambda2(v).unwrap()))
            .and_then(|f| f.top_coeff())
            .expect("wedge chain");
        let l1 = self
            .phi4
            .interior_vec(a)
            .and_then(|f| f.wedge(&self.lambda4(u).unwrap().interior_vec(b).unwrap()))
            .and_then(|f| f.wedge(&self.lambda2(v).unwrap()))
            .and_then(|f| f.top_coeff())
            .expect("wedge chain");
        let l2 = self
            .spinformula2_lhs(a, b, u, v)
            .and_then(|f| f.top_coeff())
            .expect("wedge chain");
        (x, y, l1, l2)
    }

    /// Solves ℓ = c·x + c'·y exactly for both identities over the collected
    /// rows, augmented with the two canonical tuples that make the system
    /// invertible. Every remaining row must be consistent.
    fn fit_constants(
        &self,
        rows: &[(Scalar, Scalar, Scalar, Scalar)],
    ) -> Result<(Scalar, Scalar, Scalar, Scalar)> {
        let mut all = vec![
            self.fit_row(&basis_vec8(0), &basis_vec8(0), &w7_basis(1), &w7_basis(1)),
            self.fit_row(&basis_vec8(0), &basis_vec8(1), &w7_basis(2), &w7_basis(3)),
        ];
        all.extend_from_slice(rows);
        let solve = |pick: fn(&(Scalar, Scalar, Scalar, Scalar)) -> Scalar| -> Result<(Scalar, Scalar)> {
            let mut pair: Option<(Scalar, Scalar)> = None;
            for i in 0..all.len() {
                for j in (i + 1)..all.len() {
                    let (xi, yi) = (all[i].0.clone(), all[i].1.clone());
                    let (xj, yj) = (all[j].0.clone(), all[j].1.clone());
                    let det = &(&xi * &yj) - &(&xj * &yi);
                    if det.is_zero() {
                        continue;
                    }
                    let li = pick(&all[i]);
                    let lj = pick(&all[j]);
                    let c = &(&(&li * &yj) - &(&lj * &yi)) / &det;
                    let cw = &(&(&xi * &lj) - &(&xj * &li)) / &det;
                    pair = Some((c, cw));
                    break;
                }
                if pair.is_some() {
                    break;
                }
            }
            let (c, cw) = pair.ok_or(Error::SingularMatrix)?;
            for row in &all {
                let expect = &(&c * &row.0) + &(&cw * &row.1);
                if pick(row) != expect {
                    return Err(Error::InvalidInput("inconsistent fit".into()));
                }
            }
            Ok((c, cw))
        };
        let (c1, c2) = solve(|r| r.2.clone())?;
        let (c3, c4) = solve(|r| r.3.clone())?;
        Ok((c1, c2, c3, c4))
    }
}

impl Default for Spin7Model {
    fn default() -> Self {
        Self::new()
    }
}

pub fn spin7_identity_ids() -> Vec<&'static str> {
    vec!["l4l2", "spinformula1", "spinformula2"]
}

/// Components of a 4-form under the 1 + 7 + 27 + 35 splitting.
#[derive(Clone, Debug)]
pub struct Lambda4Split {
    pub c1: Scalar,
    /// W7 vector (e0-component zero).
    pub v7: Vec<Scalar>,
    pub w27: Form,
    pub w35: Form,
}

/// Torsion on the Spin(7) side: an 8×7 matrix, rows indexed by the frame of
/// ℝ⁸, columns by the W₇ frame e1..e7.
#[derive(Clone, Debug, PartialEq)]
pub struct Spin7Torsion {
    t: Matrix,
}

impl Spin7Torsion {
    pub fn new(t: Matrix) -> Result<Self> {
        expect_torsion_shape(&t)?;
        Ok(Spin7Torsion { t })
    }

    pub fn zero() -> Self {
        Spin7Torsion {
            t: Matrix::zeros(8, 7),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    /// T(e_μ) ∈ W₇ as an ℝ⁸ vector.
    pub fn image_of_basis(&self, mu: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 8];
        for i in 0..7 {
            v[i + 1] = self.t.get(mu, i).clone();
        }
        v
    }
}

fn expect_torsion_shape(t: &Matrix) -> Result<()> {
    if t.rows() != 8 || t.cols() != 7 {
        return Err(Error::DimensionMismatch(
            "torsion on the 8-dimensional side must be 8x7".into(),
        ));
    }
    Ok(())
}

/// Standard basis vector of ℝ⁸.
pub fn basis_vec8(mu: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 8];
    v[mu] = Scalar::one();
    v
}

/// Basis vector e_i of W₇ (1 ≤ i ≤ 7) as an ℝ⁸ vector.
pub fn w7_basis(i: u8) -> Vec<Scalar> {
    assert!((1..8).contains(&i));
    basis_vec8(i as usize)
}

fn w7_random(rng: &mut SmallRng) -> Vec<Scalar> {
    let mut v = rng.vector(8);
    v[0] = Scalar::zero();
    v
}

/// The 7-dimensional Hodge star applied to a form supported on span(e1..e7).
pub fn star7(f: &Form) -> Result<Form> {
    if f.dim() != 8 {
        return Err(Error::DimensionMismatch("star7 expects an ℝ⁸ form".into()));
    }
    let mut seven = Form::zero(7, f.degree());
    for (tuple, c) in f.iter_nonzero() {
        if tuple.contains(&0) {
            return Err(Error::InvalidInput(
                "star7 needs a form with no e0-component".into(),
            ));
        }
        let shifted: Vec<u8> = tuple.iter().map(|i| i - 1).collect();
        seven.set_coeff(&shifted, c.clone());
    }
    Ok(embed7(&seven.hodge(&Metric::identity(7))?))
}
