//! Report types for the randomized identity suites and theorem checks.

use std::collections::BTreeMap;

/// Pass count for one identity.
#[derive(Clone, Debug)]
pub struct IdentityCount {
    pub id: String,
    pub pass: u64,
}

/// A failed sample: the identity tag and the witness data that broke it.
#[derive(Clone, Debug)]
pub struct Failure {
    pub id: String,
    pub witness: BTreeMap<String, String>,
}

/// Outcome of a randomized identity suite.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub family: String,
    pub checked: u64,
    pub identities: Vec<IdentityCount>,
    pub failures: Vec<Failure>,
    /// Fitted structure constants, when the suite derives any.
    pub constants: BTreeMap<String, String>,
}

impl IdentityReport {
    pub fn new(family: &str, checked: u64) -> Self {
        IdentityReport {
            family: family.to_string(),
            checked,
            identities: Vec::new(),
            failures: Vec::new(),
            constants: BTreeMap::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, id: &str, pass: u64) {
        self.identities.push(IdentityCount {
            id: id.to_string(),
            pass,
        });
    }

    pub fn fail(&mut self, id: &str, witness: BTreeMap<String, String>) {
        self.failures.push(Failure {
            id: id.to_string(),
            witness,
        });
    }
}

/// The equivalent vanishing conditions for a structure on the 7-dimensional
/// side, evaluated independently of one another.
#[derive(Clone, Debug)]
pub struct G2TheoremReport {
    pub torsion_zero: bool,
    pub nabla_zero: bool,
    pub pi7_cr_chi_zero: bool,
    pub cr_chi_zero: bool,
    pub chi_chi_zero: bool,
    /// Component-vanishing sets agree across the torsion and both bracket
    /// endomorphisms.
    pub classes_consistent: bool,
    pub class_torsion: Vec<String>,
    pub class_k_endo: Vec<String>,
    pub class_l_endo: Vec<String>,
}

impl G2TheoremReport {
    pub fn all_equivalent(&self) -> bool {
        let v = [
            self.torsion_zero,
            self.nabla_zero,
            self.pi7_cr_chi_zero,
            self.cr_chi_zero,
            self.chi_chi_zero,
        ];
        v.iter().all(|&b| b) || v.iter().all(|&b| !b)
    }
}

/// The equivalent vanishing conditions on the 8-dimensional side.
#[derive(Clone, Debug)]
pub struct Spin7TheoremReport {
    pub torsion_zero: bool,
    pub nabla_zero: bool,
    pub pi7_pp_zero: bool,
    pub pp_zero: bool,
    pub classes_consistent: bool,
    pub class_torsion: Vec<String>,
    pub class_h_endo: Vec<String>,
}

impl Spin7TheoremReport {
    pub fn all_equivalent(&self) -> bool {
        let v = [
            self.torsion_zero,
            self.nabla_zero,
            self.pi7_pp_zero,
            self.pp_zero,
        ];
        v.iter().all(|&b| b) || v.iter().all(|&b| !b)
    }
}
