//! Differential forms and tangent-valued forms with polynomial coefficients:
//! exterior derivative, Nijenhuis–Lie derivative, the Frölicher–Nijenhuis
//! bracket, and the classical Nijenhuis tensor.

use crate::basis::{basis, binomial, merge_sign};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::scalar::Scalar;
use crate::poly::Poly;
use crate::vform::VectorForm;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyForm {
    n: u8,
    k: u8,
    coeffs: Vec<Poly>,
}

impl PolyForm {
    pub fn zero(n: u8, k: u8) -> Self {
        PolyForm {
            n,
            k,
            coeffs: vec![Poly::zero(n); binomial(n as usize, k as usize)],
        }
    }

    /// A constant-coefficient form promoted to polynomial coefficients.
    pub fn from_form(f: &Form) -> Self {
        let n = f.dim();
        let mut out = PolyForm::zero(n, f.degree());
        for (tuple, c) in f.iter_nonzero() {
            out.set_coeff(tuple, Poly::constant(n, c.clone()));
        }
        out
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn coeff(&self, indices: &[u8]) -> &Poly {
        let r = basis(self.n, self.k).rank(indices).expect("basis tuple");
        &self.coeffs[r]
    }

    pub fn set_coeff(&mut self, indices: &[u8], p: Poly) {
        let r = basis(self.n, self.k).rank(indices).expect("basis tuple");
        self.coeffs[r] = p;
    }

    pub fn add_coeff(&mut self, indices: &[u8], p: &Poly) {
        let r = basis(self.n, self.k).rank(indices).expect("basis tuple");
        self.coeffs[r] = self.coeffs[r].add(p);
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (&'static [u8], &Poly)> {
        let table = basis(self.n, self.k);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(r, c)| (table.tuple(r), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn shape_check(&self, other: &PolyForm) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch(format!(
                "poly form ({},{}) vs ({},{})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm> {
        self.shape_check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(PolyForm {
            n: self.n,
            k: self.k,
            coeffs,
        })
    }

    pub fn sub(&self, other: &PolyForm) -> Result<PolyForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyForm {
        PolyForm {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(Poly::neg).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> PolyForm {
        PolyForm {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolyForm {
        PolyForm {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("poly wedge".into()));
        }
        let k = self.k as usize + other.k as usize;
        let mut out = PolyForm::zero(self.n, k.min(255) as u8);
        if k > self.n as usize {
            return Ok(out);
        }
        let table = basis(self.n, k as u8);
        for (ia, ca) in self.iter_nonzero() {
            for (ib, cb) in other.iter_nonzero() {
                if let Some((merged, sign)) = merge_sign(ia, ib) {
                    let r = table.rank(&merged).expect("merged tuple");
                    let prod = ca.mul(cb);
                    out.coeffs[r] = out.coeffs[r].add(&if sign < 0 { prod.neg() } else { prod });
                }
            }
        }
        Ok(out)
    }

    pub fn interior_basis(&self, i: u8) -> PolyForm {
        if self.k == 0 {
            return PolyForm::zero(self.n, 0);
        }
        let mut out = PolyForm::zero(self.n, self.k - 1);
        for (tuple, c) in self.iter_nonzero() {
            if let Some(pos) = tuple.iter().position(|&v| v == i) {
                let mut rest = tuple.to_vec();
                rest.remove(pos);
                let signed = if pos % 2 == 1 { c.neg() } else { c.clone() };
                out.add_coeff(&rest, &signed);
            }
        }
        out
    }

    /// Coefficient-wise partial derivative ∂_i (the Lie derivative along the
    /// coordinate field ∂_i).
    pub fn partial(&self, i: u8) -> PolyForm {
        PolyForm {
            n: self.n,
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.partial(i)).collect(),
        }
    }

    /// Exterior derivative d = Σ_i e^i ∧ ∂_i.
    pub fn d(&self) -> PolyForm {
        let mut out = PolyForm::zero(self.n, self.k + 1);
        if self.k as usize + 1 > self.n as usize {
            return out;
        }
        for i in 0..self.n {
            let di = self.partial(i);
            if di.is_zero() {
                continue;
            }
            for (tuple, c) in di.iter_nonzero() {
                if let Some((merged, sign)) = merge_sign(&[i], tuple) {
                    out.add_coeff(&merged, &if sign < 0 { c.neg() } else { c.clone() });
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Form {
        let mut out = Form::zero(self.n, self.k);
        for (tuple, c) in self.iter_nonzero() {
            out.add_coeff(tuple, c.eval(point));
        }
        out
    }
}

/// A tangent-valued form K = Σ_j β_j ⊗ ∂_j with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVectorForm {
    n: u8,
    k: u8,
    components: Vec<PolyForm>,
}

impl PolyVectorForm {
    pub fn zero(n: u8, k: u8) -> Self {
        PolyVectorForm {
            n,
            k,
            components: (0..n).map(|_| PolyForm::zero(n, k)).collect(),
        }
    }

    pub fn from_components(components: Vec<PolyForm>) -> Result<Self> {
        let n = components.len() as u8;
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidInput("empty poly vector form".into()))?;
        let (dim, k) = (first.dim(), first.degree());
        if dim != n || components.iter().any(|f| f.dim() != dim || f.degree() != k) {
            return Err(Error::DimensionMismatch(
                "poly vector form components disagree".into(),
            ));
        }
        Ok(PolyVectorForm {
            n,
            k,
            components,
        })
    }

    /// The identity endomorphism field Σ_i e^i ⊗ ∂_i.
    pub fn identity_endo(n: u8) -> Self {
        let components = (0..n)
            .map(|i| PolyForm::from_form(&Form::basis_elem(n, &[i])))
            .collect();
        PolyVectorForm {
            n,
            k: 1,
            components,
        }
    }

    /// A vector field X = Σ_j X^j ∂_j as a degree-0 tangent-valued form.
    pub fn vector_field(n: u8, components: Vec<Poly>) -> Result<Self> {
        let comps = components
            .into_iter()
            .map(|p| {
                let mut f = PolyForm::zero(n, 0);
                f.set_coeff(&[], p);
                f
            })
            .collect();
        PolyVectorForm::from_components(comps)
    }

    /// δ applied to a polynomial form with the flat identity metric:
    /// (ι_{∂_i} α) ⊗ ∂_i.
    pub fn delta(a: &PolyForm) -> Result<Self> {
        if a.degree() == 0 {
            return Err(Error::DimensionMismatch(
                "delta needs a form of degree ≥ 1".into(),
            ));
        }
        let n = a.dim();
        let components = (0..n).map(|i| a.interior_basis(i)).collect();
        PolyVectorForm::from_components(components)
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn component(&self, j: usize) -> &PolyForm {
        &self.components[j]
    }

    pub fn components(&self) -> &[PolyForm] {
        &self.components
    }

    pub fn add(&self, other: &PolyVectorForm) -> Result<PolyVectorForm> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch("poly vector form add".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(PolyVectorForm {
            n: self.n,
            k: self.k,
            components,
        })
    }

    pub fn sub(&self, other: &PolyVectorForm) -> Result<PolyVectorForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyVectorForm {
        PolyVectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(PolyForm::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolyVectorForm {
        PolyVectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(|f| f.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(PolyForm::is_zero)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<VectorForm> {
        VectorForm::from_components(self.components.iter().map(|f| f.eval(point)).collect())
    }

    /// ι_K ω = Σ_j β_j ∧ (ι_{∂_j} ω); zero when ω is a 0-form.
    pub fn contract(&self, omega: &PolyForm) -> Result<PolyForm> {
        if omega.dim() != self.n {
            return Err(Error::DimensionMismatch("poly contract".into()));
        }
        if omega.degree() == 0 {
            return Ok(PolyForm::zero(self.n, self.k.saturating_sub(1)));
        }
        let out_k = self.k as usize + omega.degree() as usize - 1;
        let mut out = PolyForm::zero(self.n, out_k.min(255) as u8);
        for (j, beta) in self.components.iter().enumerate() {
            if beta.is_zero() {
                continue;
            }
            out = out.add(&beta.wedge(&omega.interior_basis(j as u8))?)?;
        }
        Ok(out)
    }

    /// Nijenhuis–Lie derivative 𝓛_K ω = ι_K dω + (−1)^k d(ι_K ω), a
    /// derivation of degree k.
    pub fn lie_derivative(&self, omega: &PolyForm) -> Result<PolyForm> {
        let first = self.contract(&omega.d())?;
        if omega.degree() == 0 {
            return Ok(first);
        }
        let second = self.contract(omega)?.d();
        if self.k.is_multiple_of(2) {
            first.add(&second)
        } else {
            first.sub(&second)
        }
    }

    /// Frölicher–Nijenhuis bracket in the coordinate frame, where the frame
    /// fields commute and the bracket of decomposables reduces to four terms:
    ///
    /// [α ⊗ ∂_i, β ⊗ ∂_j] = α ∧ ∂_i β ⊗ ∂_j − ∂_j α ∧ β ⊗ ∂_i
    ///   + (−1)^{|α|} ( dα ∧ ι_{∂_i} β ⊗ ∂_j + ι_{∂_j} α ∧ dβ ⊗ ∂_i ).
    pub fn fn_bracket(&self, other: &PolyVectorForm) -> Result<PolyVectorForm> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("fn_bracket".into()));
        }
        let n = self.n;
        let k_out = self.k as usize + other.k as usize;
        let mut out = PolyVectorForm::zero(n, k_out.min(255) as u8);
        let negate = self.k % 2 == 1;

        let d_self: Vec<PolyForm> = self.components.iter().map(PolyForm::d).collect();
        let d_other: Vec<PolyForm> = other.components.iter().map(PolyForm::d).collect();

        for i in 0..n as usize {
            let alpha = &self.components[i];
            if alpha.is_zero() && d_self[i].is_zero() {
                continue;
            }
            for j in 0..n as usize {
                let beta = &other.components[j];
                if beta.is_zero() && d_other[j].is_zero() {
                    continue;
                }
                // α ∧ (∂_i β) ⊗ ∂_j
                let t1 = alpha.wedge(&beta.partial(i as u8))?;
                // −(∂_j α) ∧ β ⊗ ∂_i
                let t2 = alpha.partial(j as u8).wedge(beta)?;
                out.components[j] = out.components[j].add(&t1)?;
                out.components[i] = out.components[i].sub(&t2)?;
                // (−1)^{|α|} dα ∧ (ι_{∂_i} β) ⊗ ∂_j; ι kills 0-forms
                if other.k >= 1 {
                    let mut t3 = d_self[i].wedge(&beta.interior_basis(i as u8))?;
                    if negate {
                        t3 = t3.neg();
                    }
                    out.components[j] = out.components[j].add(&t3)?;
                }
                // (−1)^{|α|} (ι_{∂_j} α) ∧ dβ ⊗ ∂_i
                if self.k >= 1 {
                    let mut t4 = alpha.interior_basis(j as u8).wedge(&d_other[j])?;
                    if negate {
                        t4 = t4.neg();
                    }
                    out.components[i] = out.components[i].add(&t4)?;
                }
            }
        }
        Ok(out)
    }
}

/// An endomorphism field: a tangent-valued 1-form A = Σ_j β_j ⊗ ∂_j.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyEndo(PolyVectorForm);

impl PolyEndo {
    pub fn new(vform: PolyVectorForm) -> Result<Self> {
        if vform.degree() != 1 {
            return Err(Error::InvalidInput(
                "endomorphism field must have degree 1".into(),
            ));
        }
        Ok(PolyEndo(vform))
    }

    pub fn identity(n: u8) -> Self {
        PolyEndo(PolyVectorForm::identity_endo(n))
    }

    /// f · Id for a scalar polynomial f.
    pub fn conformal(n: u8, f: &Poly) -> Self {
        let components = (0..n)
            .map(|i| PolyForm::from_form(&Form::basis_elem(n, &[i])).scale_poly(f))
            .collect::<Vec<_>>();
        PolyEndo(PolyVectorForm::from_components(components).expect("shape"))
    }

    pub fn as_vform(&self) -> &PolyVectorForm {
        &self.0
    }

    pub fn into_vform(self) -> PolyVectorForm {
        self.0
    }

    fn dim(&self) -> u8 {
        self.0.dim()
    }

    /// A(X) for a polynomial vector field X (entries of the result indexed by
    /// the output frame).
    fn apply(&self, x: &[Poly]) -> Vec<Poly> {
        let n = self.dim() as usize;
        (0..n)
            .map(|m| {
                let beta = &self.0.components[m];
                let mut acc = Poly::zero(self.dim());
                for (a, xa) in x.iter().enumerate() {
                    if xa.is_zero() {
                        continue;
                    }
                    acc = acc.add(&beta.coeff(&[a as u8]).mul(xa));
                }
                acc
            })
            .collect()
    }
}

/// Lie bracket of polynomial vector fields.
fn vf_bracket(n: u8, u: &[Poly], v: &[Poly]) -> Vec<Poly> {
    (0..n as usize)
        .map(|m| {
            let mut acc = Poly::zero(n);
            for c in 0..n as usize {
                acc = acc.add(&u[c].mul(&v[m].partial(c as u8)));
                acc = acc.sub(&v[c].mul(&u[m].partial(c as u8)));
            }
            acc
        })
        .collect()
}

/// The classical Nijenhuis tensor
/// N_A(X,Y) = [AX, AY] − A[AX, Y] − A[X, AY] + A²[X, Y],
/// assembled as a tangent-valued 2-form. Used as an oracle independent of
/// the bracket formula.
pub fn nijenhuis(a: &PolyEndo) -> PolyVectorForm {
    let n = a.dim();
    let mut out = PolyVectorForm::zero(n, 2);
    let basis_fields: Vec<Vec<Poly>> = (0..n as usize)
        .map(|i| {
            (0..n as usize)
                .map(|m| {
                    if m == i {
                        Poly::one(n)
                    } else {
                        Poly::zero(n)
                    }
                })
                .collect()
        })
        .collect();
    let a_of_basis: Vec<Vec<Poly>> = basis_fields.iter().map(|x| a.apply(x)).collect();
    for p in 0..n as usize {
        for q in p + 1..n as usize {
            let ax = &a_of_basis[p];
            let ay = &a_of_basis[q];
            // [∂_p, ∂_q] = 0, so the A² term drops out
            let term1 = vf_bracket(n, ax, ay);
            let term2 = a.apply(&vf_bracket(n, ax, &basis_fields[q]));
            let term3 = a.apply(&vf_bracket(n, &basis_fields[p], ay));
            for m in 0..n as usize {
                let val = term1[m].sub(&term2[m]).sub(&term3[m]);
                if !val.is_zero() {
                    let mut c = out.components[m].coeff(&[p as u8, q as u8]).clone();
                    c = c.add(&val);
                    out.components[m].set_coeff(&[p as u8, q as u8], c);
                }
            }
        }
    }
    out
}

/// Identity tags of the bracket-calculus suite, in report order.
pub fn fn_identity_ids() -> Vec<&'static str> {
    vec![
        "action-property",
        "graded-skew",
        "lie-id-d",
        "bracket-self-nijenhuis",
        "lie-squared",
    ]
}

/// Randomized oracle suite for the bracket calculus. Everything is exact;
/// each sample draws fresh polynomial data with degree ≤ 2 coefficients.
pub fn verify_fn_identities(samples: u64, seed: u64) -> crate::report::IdentityReport {
    use crate::report::IdentityReport;
    use crate::rng::SmallRng;
    use std::collections::BTreeMap;

    let mut report = IdentityReport::new("fn", samples);
    let mut rng = SmallRng::new(seed);
    let ids = fn_identity_ids();
    let mut pass = vec![0u64; ids.len()];
    let fail = |report: &mut IdentityReport, id: &str, detail: String| {
        let mut witness = BTreeMap::new();
        witness.insert("detail".to_string(), detail);
        report.fail(id, witness);
    };
    for sample in 0..samples {
        // action property and graded skew-symmetry on ℝ⁴
        let k1_deg = if rng.int_in(0, 1) == 0 { 1 } else { 3 };
        let k2_deg = rng.int_in(1, 2) as u8;
        let k1 = rng.poly_vector_form(4, k1_deg, 2);
        let k2 = rng.poly_vector_form(4, k2_deg, 2);
        let bracket = k1.fn_bracket(&k2).expect("same dimension");

        let mut action_ok = true;
        for _ in 0..10 {
            let alpha_deg = rng.int_in(0, 2) as u8;
            let alpha = rng.polyform(4, alpha_deg, 2);
            let lhs = bracket.lie_derivative(&alpha).expect("shapes");
            let first = k1
                .lie_derivative(&k2.lie_derivative(&alpha).expect("shapes"))
                .expect("shapes");
            let second = k2
                .lie_derivative(&k1.lie_derivative(&alpha).expect("shapes"))
                .expect("shapes");
            let rhs = if (k1_deg as u32 * k2_deg as u32).is_multiple_of(2) {
                first.sub(&second)
            } else {
                first.add(&second)
            }
            .expect("shapes");
            if lhs != rhs {
                action_ok = false;
                break;
            }
        }
        if action_ok {
            pass[0] += 1;
        } else {
            fail(&mut report, "action-property", format!("sample {sample}"));
        }

        let reversed = k2.fn_bracket(&k1).expect("same dimension");
        let skew_ok = if (k1_deg as u32 * k2_deg as u32).is_multiple_of(2) {
            bracket == reversed.neg()
        } else {
            bracket == reversed
        };
        if skew_ok {
            pass[1] += 1;
        } else {
            fail(&mut report, "graded-skew", format!("sample {sample}"));
        }

        // the identity endomorphism acts as the exterior derivative
        let idt = PolyVectorForm::identity_endo(4);
        let omega_deg = rng.int_in(0, 3) as u8;
        let omega = rng.polyform(4, omega_deg, 2);
        if idt.lie_derivative(&omega).expect("shapes") == omega.d() {
            pass[2] += 1;
        } else {
            fail(&mut report, "lie-id-d", format!("sample {sample}"));
        }

        // bracket of an endomorphism field with itself against the classical
        // tensor, on ℝ³
        let endo = PolyEndo::new(rng.poly_vector_form(3, 1, 2)).expect("degree 1");
        let self_bracket = endo.as_vform().fn_bracket(endo.as_vform()).expect("shapes");
        let doubled = nijenhuis(&endo).scale(&Scalar::from_int(2));
        if self_bracket == doubled {
            pass[3] += 1;
        } else {
            fail(
                &mut report,
                "bracket-self-nijenhuis",
                format!("sample {sample}"),
            );
        }

        // (𝓛_A)² = ½ 𝓛_{[A,A]} on a test form
        let test_deg = rng.int_in(0, 1) as u8;
        let test = rng.polyform(3, test_deg, 2);
        let twice = endo
            .as_vform()
            .lie_derivative(&endo.as_vform().lie_derivative(&test).expect("shapes"))
            .expect("shapes");
        let via_bracket = self_bracket
            .lie_derivative(&test)
            .expect("shapes")
            .scale(&Scalar::ratio(1, 2));
        if twice == via_bracket {
            pass[4] += 1;
        } else {
            fail(&mut report, "lie-squared", format!("sample {sample}"));
        }
    }
    for (which, id) in ids.iter().enumerate() {
        report.record(id, pass[which]);
    }
    report
}
