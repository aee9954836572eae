//! JSON encodings shared by the library and the command line. Keys serialize
//! in sorted order (maps are tree-backed), rationals are decimal strings, so
//! equal values always produce identical bytes.
//!
//! Index labels: forms on ℝ⁸ use 0..7; every other dimension is labeled
//! 1..n.

use serde_json::{json, Map, Value};

use crate::classify::ClassLabel;
use crate::error::{Error, Result};
use crate::form::Form;
use crate::g2::G2Torsion;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::polyform::{PolyForm, PolyVectorForm};
use crate::report::{G2TheoremReport, IdentityReport, Spin7TheoremReport};
use crate::scalar::{Scalar, ScalarMode};
use crate::spin7::Spin7Torsion;
use crate::vform::VectorForm;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn label_of(n: u8, internal: u8) -> u64 {
    if n == 8 {
        internal as u64
    } else {
        internal as u64 + 1
    }
}

fn internal_of(n: u8, label: u64) -> Result<u8> {
    let (lo, hi) = if n == 8 { (0, 7) } else { (1, n as u64) };
    if label < lo || label > hi {
        return Err(bad(format!("index {label} out of range {lo}..{hi}")));
    }
    Ok(if n == 8 { label as u8 } else { (label - 1) as u8 })
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(format!("{what} must be a string")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn field<'a>(obj: &'a Value, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| bad(format!("missing field {name:?}")))
}

fn mode_str(mode: ScalarMode) -> &'static str {
    match mode {
        ScalarMode::Rational => "rational",
        ScalarMode::Float => "float",
    }
}

fn parse_mode(v: &Value) -> Result<ScalarMode> {
    match as_str(v, "scalar")? {
        "rational" => Ok(ScalarMode::Rational),
        "float" => Ok(ScalarMode::Float),
        other => Err(bad(format!("unknown scalar mode {other:?}"))),
    }
}

fn indices_from(v: &Value, n: u8) -> Result<Vec<u8>> {
    let arr = as_array(v, "i")?;
    let mut tuple = Vec::with_capacity(arr.len());
    for x in arr {
        tuple.push(internal_of(n, as_u64(x, "index")?)?);
    }
    if tuple.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("index tuple must be strictly increasing"));
    }
    Ok(tuple)
}

fn indices_value(n: u8, tuple: &[u8]) -> Value {
    Value::Array(tuple.iter().map(|&i| json!(label_of(n, i))).collect())
}

pub fn form_to_value(f: &Form, mode: ScalarMode) -> Value {
    let terms: Vec<Value> = f
        .iter_nonzero()
        .map(|(tuple, c)| {
            json!({
                "i": indices_value(f.dim(), tuple),
                "c": c.repr(),
            })
        })
        .collect();
    json!({
        "n": f.dim(),
        "k": f.degree(),
        "scalar": mode_str(mode),
        "terms": terms,
    })
}

pub fn form_from_value(v: &Value) -> Result<Form> {
    let n = as_u64(field(v, "n")?, "n")? as u8;
    let k = as_u64(field(v, "k")?, "k")? as u8;
    if n == 0 || n > 12 || k > n {
        return Err(bad(format!("unsupported form shape ({n},{k})")));
    }
    let mode = parse_mode(field(v, "scalar")?)?;
    let mut f = Form::zero(n, k);
    for term in as_array(field(v, "terms")?, "terms")? {
        let tuple = indices_from(field(term, "i")?, n)?;
        if tuple.len() != k as usize {
            return Err(bad(format!("tuple {tuple:?} has wrong length for degree {k}")));
        }
        let c = Scalar::parse(as_str(field(term, "c")?, "c")?, mode)?;
        f.add_coeff(&tuple, c);
    }
    Ok(f)
}

pub fn vector_form_to_value(vf: &VectorForm, mode: ScalarMode) -> Value {
    json!({
        "n": vf.dim(),
        "k": vf.degree(),
        "components": vf
            .components()
            .iter()
            .map(|f| form_to_value(f, mode))
            .collect::<Vec<_>>(),
    })
}

pub fn vector_form_from_value(v: &Value) -> Result<VectorForm> {
    let comps = as_array(field(v, "components")?, "components")?
        .iter()
        .map(form_from_value)
        .collect::<Result<Vec<_>>>()?;
    VectorForm::from_components(comps)
}

fn poly_to_value(p: &Poly, _mode: ScalarMode) -> Value {
    let monomials: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            json!({
                "e": e.iter().map(|&x| json!(x)).collect::<Vec<_>>(),
                "c": c.repr(),
            })
        })
        .collect();
    json!({ "monomials": monomials })
}

fn poly_from_value(v: &Value, n: u8, mode: ScalarMode) -> Result<Poly> {
    let mut p = Poly::zero(n);
    for m in as_array(field(v, "monomials")?, "monomials")? {
        let exps = as_array(field(m, "e")?, "e")?
            .iter()
            .map(|x| as_u64(x, "exponent").map(|e| e as u8))
            .collect::<Result<Vec<u8>>>()?;
        if exps.len() != n as usize {
            return Err(bad(format!("exponent vector must have length {n}")));
        }
        let c = Scalar::parse(as_str(field(m, "c")?, "c")?, mode)?;
        p.add_term(&exps, c);
    }
    Ok(p)
}

pub fn poly_form_to_value(f: &PolyForm, mode: ScalarMode) -> Value {
    let terms: Vec<Value> = f
        .iter_nonzero()
        .map(|(tuple, p)| {
            json!({
                "i": indices_value(f.dim(), tuple),
                "c": poly_to_value(p, mode),
            })
        })
        .collect();
    json!({
        "n": f.dim(),
        "k": f.degree(),
        "scalar": mode_str(mode),
        "terms": terms,
    })
}

pub fn poly_form_from_value(v: &Value) -> Result<PolyForm> {
    let n = as_u64(field(v, "n")?, "n")? as u8;
    let k = as_u64(field(v, "k")?, "k")? as u8;
    if n == 0 || n > 12 || k > n {
        return Err(bad(format!("unsupported form shape ({n},{k})")));
    }
    let mode = parse_mode(field(v, "scalar")?)?;
    let mut f = PolyForm::zero(n, k);
    for term in as_array(field(v, "terms")?, "terms")? {
        let tuple = indices_from(field(term, "i")?, n)?;
        if tuple.len() != k as usize {
            return Err(bad(format!("tuple {tuple:?} has wrong length for degree {k}")));
        }
        let p = poly_from_value(field(term, "c")?, n, mode)?;
        f.add_coeff(&tuple, &p);
    }
    Ok(f)
}

pub fn poly_vector_form_to_value(vf: &PolyVectorForm, mode: ScalarMode) -> Value {
    json!({
        "n": vf.dim(),
        "k": vf.degree(),
        "components": vf
            .components()
            .iter()
            .map(|f| poly_form_to_value(f, mode))
            .collect::<Vec<_>>(),
    })
}

pub fn poly_vector_form_from_value(v: &Value) -> Result<PolyVectorForm> {
    let comps = as_array(field(v, "components")?, "components")?
        .iter()
        .map(poly_form_from_value)
        .collect::<Result<Vec<_>>>()?;
    PolyVectorForm::from_components(comps)
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(m.get(r, c).repr()))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn matrix_from_value(v: &Value, rows: usize, cols: usize, mode: ScalarMode) -> Result<Matrix> {
    let arr = as_array(v, "matrix")?;
    if arr.len() != rows {
        return Err(bad(format!("expected {rows} rows, got {}", arr.len())));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = as_array(row, "matrix row")?;
        if row.len() != cols {
            return Err(bad(format!("expected {cols} columns, got {}", row.len())));
        }
        for (c, entry) in row.iter().enumerate() {
            m.set(r, c, Scalar::parse(as_str(entry, "matrix entry")?, mode)?);
        }
    }
    Ok(m)
}

/// Torsion input, dispatched on the `type` tag.
pub enum TorsionInput {
    G2(G2Torsion),
    Spin7(Spin7Torsion),
}

pub fn torsion_g2_to_value(t: &G2Torsion) -> Value {
    json!({ "type": "g2", "t": matrix_to_value(t.matrix()) })
}

pub fn torsion_spin7_to_value(t: &Spin7Torsion) -> Value {
    json!({ "type": "spin7", "t": matrix_to_value(t.matrix()) })
}

pub fn torsion_from_value(v: &Value, mode: ScalarMode) -> Result<TorsionInput> {
    match as_str(field(v, "type")?, "type")? {
        "g2" => Ok(TorsionInput::G2(G2Torsion::new(matrix_from_value(
            field(v, "t")?,
            7,
            7,
            mode,
        )?)?)),
        "spin7" => Ok(TorsionInput::Spin7(Spin7Torsion::new(matrix_from_value(
            field(v, "t")?,
            8,
            7,
            mode,
        )?)?)),
        other => Err(bad(format!("unknown torsion type {other:?}"))),
    }
}

pub fn class_label_to_value(label: &ClassLabel) -> Value {
    let norms: Map<String, Value> = label
        .norms
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.repr())))
        .collect();
    json!({
        "family": label.family,
        "components": label.components,
        "norms": norms,
    })
}

pub fn identity_report_to_value(r: &IdentityReport) -> Value {
    let mut obj = Map::new();
    obj.insert("family".into(), json!(r.family));
    obj.insert("checked".into(), json!(r.checked));
    obj.insert(
        "identities".into(),
        Value::Array(
            r.identities
                .iter()
                .map(|c| json!({"id": c.id, "pass": c.pass}))
                .collect(),
        ),
    );
    obj.insert(
        "failures".into(),
        Value::Array(
            r.failures
                .iter()
                .map(|f| json!({"id": f.id, "witness": f.witness}))
                .collect(),
        ),
    );
    if !r.constants.is_empty() {
        obj.insert("constants".into(), json!(r.constants));
    }
    Value::Object(obj)
}

pub fn g2_theorem_to_value(r: &G2TheoremReport) -> Value {
    json!({
        "family": "g2",
        "conditions": {
            "torsion_zero": r.torsion_zero,
            "nabla_phi_zero": r.nabla_zero,
            "pi7_cr_chi_zero": r.pi7_cr_chi_zero,
            "cr_chi_zero": r.cr_chi_zero,
            "chi_chi_zero": r.chi_chi_zero,
        },
        "equivalent": r.all_equivalent(),
        "classes": {
            "torsion": r.class_torsion,
            "k_endo": r.class_k_endo,
            "l_endo": r.class_l_endo,
            "consistent": r.classes_consistent,
        },
    })
}

pub fn spin7_theorem_to_value(r: &Spin7TheoremReport) -> Value {
    json!({
        "family": "spin7",
        "conditions": {
            "torsion_zero": r.torsion_zero,
            "nabla_phi_zero": r.nabla_zero,
            "pi7_pp_zero": r.pi7_pp_zero,
            "pp_zero": r.pp_zero,
        },
        "equivalent": r.all_equivalent(),
        "classes": {
            "torsion": r.class_torsion,
            "h_endo": r.class_h_endo,
            "consistent": r.classes_consistent,
        },
    })
}

/// Canonical text rendering: pretty JSON plus a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SmallRng;

    #[test]
    fn form_round_trip_and_labels() {
        let mut rng = SmallRng::new(77);
        for n in [7u8, 8u8] {
            for k in [0u8, 2, 3] {
                let f = rng.form(n, k);
                let v = form_to_value(&f, ScalarMode::Rational);
                assert_eq!(form_from_value(&v).unwrap(), f);
            }
        }
        // 7-dimensional labels are 1-based
        let f = Form::basis_elem(7, &[0, 1, 2]);
        let v = form_to_value(&f, ScalarMode::Rational);
        assert_eq!(v["terms"][0]["i"], json!([1, 2, 3]));
        // 8-dimensional labels are 0-based
        let f = Form::basis_elem(8, &[0, 1, 2]);
        let v = form_to_value(&f, ScalarMode::Rational);
        assert_eq!(v["terms"][0]["i"], json!([0, 1, 2]));
    }

    #[test]
    fn form_rejects_bad_input() {
        let v = json!({"n": 7, "k": 2, "scalar": "rational",
                       "terms": [{"i": [0, 1], "c": "1"}]});
        assert!(form_from_value(&v).is_err()); // 0 is not a valid 7-dim label
        let v = json!({"n": 7, "k": 2, "scalar": "rational",
                       "terms": [{"i": [2, 1], "c": "1"}]});
        assert!(form_from_value(&v).is_err()); // not increasing
        let v = json!({"n": 7, "k": 2, "scalar": "rational",
                       "terms": [{"i": [1], "c": "1"}]});
        assert!(form_from_value(&v).is_err()); // wrong arity
    }

    #[test]
    fn poly_form_round_trip() {
        let mut rng = SmallRng::new(5);
        let f = rng.polyform(4, 2, 2);
        let v = poly_form_to_value(&f, ScalarMode::Rational);
        assert_eq!(poly_form_from_value(&v).unwrap(), f);
        let vf = rng.poly_vector_form(3, 1, 2);
        let v = poly_vector_form_to_value(&vf, ScalarMode::Rational);
        assert_eq!(poly_vector_form_from_value(&v).unwrap(), vf);
    }

    #[test]
    fn torsion_round_trip() {
        let mut rng = SmallRng::new(3);
        let t = G2Torsion::new(rng.matrix(7, 7)).unwrap();
        match torsion_from_value(&torsion_g2_to_value(&t), ScalarMode::Rational).unwrap() {
            TorsionInput::G2(back) => assert_eq!(back, t),
            _ => panic!("wrong family"),
        }
        let t = Spin7Torsion::new(rng.matrix(8, 7)).unwrap();
        match torsion_from_value(&torsion_spin7_to_value(&t), ScalarMode::Rational).unwrap() {
            TorsionInput::Spin7(back) => assert_eq!(back, t),
            _ => panic!("wrong family"),
        }
    }

    #[test]
    fn canonical_output_is_sorted_and_stable() {
        let v = json!({"zeta": 1, "alpha": {"c": 2, "b": 3}});
        let s = to_canonical_string(&v);
        let a = s.find("alpha").unwrap();
        let z = s.find("zeta").unwrap();
        let b = s.find("\"b\"").unwrap();
        let c = s.find("\"c\"").unwrap();
        assert!(a < z && b < c);
        assert!(s.ends_with('\n'));
    }
}
