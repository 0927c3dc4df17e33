//! Serde mirrors of the core types, with a stable field order.

use ratrep_core::cyclotomic::euler_phi;
use ratrep_core::{Decomposition, Division, FieldDescriptor, Method, WedderburnComponent};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub group: String,
    pub order: u64,
    pub method: String,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub mult: u64,
    pub n: u64,
    pub center: CenterJson,
    pub division: DivisionJson,
}

/// `stabilizer` is present only when conductor and degree leave the field ambiguous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterJson {
    pub conductor: u64,
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DivisionJson {
    Named(DivisionName),
    Algebra { degree: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DivisionName {
    #[serde(rename = "field")]
    Field,
    #[serde(rename = "quaternion_Q")]
    QuaternionQ,
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    r
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The stabilizer `{k : k^(phi(n)/deg) = 1}`, which is the only subgroup of
/// index `deg` whenever `(Z/n)^x` is cyclic.
fn implied_stabilizer(n: u64, degree: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let e = euler_phi(n) / degree.max(1);
    (1..n).filter(|&k| gcd(k, n) == 1 && pow_mod(k, e, n) == 1).collect()
}

impl From<&FieldDescriptor> for CenterJson {
    fn from(f: &FieldDescriptor) -> Self {
        let implied = implied_stabilizer(f.conductor, f.degree());
        let stabilizer = (implied != f.stabilizer).then(|| f.stabilizer.clone());
        CenterJson { conductor: f.conductor, degree: f.degree(), stabilizer }
    }
}

impl CenterJson {
    pub fn to_field(&self) -> Result<FieldDescriptor, String> {
        let n = self.conductor.max(1);
        if self.degree == 0 || !euler_phi(n).is_multiple_of(self.degree) {
            return Err(format!("no subfield of degree {} in Q(z{n})", self.degree));
        }
        let stab = match &self.stabilizer {
            Some(s) => s.clone(),
            None => {
                let s = implied_stabilizer(n, self.degree);
                if n > 1 && s.len() as u64 * self.degree != euler_phi(n) {
                    return Err(format!("degree {} subfield of Q(z{n}) needs a stabilizer", self.degree));
                }
                s
            }
        };
        let f = if n == 1 { FieldDescriptor::rationals() } else { FieldDescriptor::from_stabilizer(n, &stab) };
        if f.degree() != self.degree {
            return Err(format!("stabilizer does not give degree {}", self.degree));
        }
        Ok(f)
    }
}

impl From<&Division> for DivisionJson {
    fn from(d: &Division) -> Self {
        match d {
            Division::Field => DivisionJson::Named(DivisionName::Field),
            Division::RationalQuaternion => DivisionJson::Named(DivisionName::QuaternionQ),
            Division::DivisionAlgebra { degree } => DivisionJson::Algebra { degree: *degree },
        }
    }
}

impl From<&DivisionJson> for Division {
    fn from(d: &DivisionJson) -> Self {
        match d {
            DivisionJson::Named(DivisionName::Field) => Division::Field,
            DivisionJson::Named(DivisionName::QuaternionQ) => Division::RationalQuaternion,
            DivisionJson::Algebra { degree } => Division::DivisionAlgebra { degree: *degree },
        }
    }
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            group: d.group.clone(),
            order: d.order,
            method: d.method.name().to_string(),
            components: d
                .components
                .iter()
                .map(|c| ComponentJson {
                    mult: c.multiplicity,
                    n: c.matrix_size,
                    center: (&c.center).into(),
                    division: (&c.division).into(),
                })
                .collect(),
        }
    }
}

impl DecompositionJson {
    pub fn to_decomposition(&self) -> Result<Decomposition, String> {
        let method: Method = self.method.parse().map_err(|e: ratrep_core::Error| e.to_string())?;
        let parts = self
            .components
            .iter()
            .map(|c| Ok(WedderburnComponent::new(c.mult, c.n, c.center.to_field()?, (&c.division).into())))
            .collect::<Result<Vec<_>, String>>()?;
        Ok(Decomposition::new(&self.group, self.order, method, parts))
    }
}

/// Serialize a decomposition in the documented schema.
pub fn decomposition_to_json(d: &Decomposition) -> String {
    serde_json::to_string_pretty(&DecompositionJson::from(d)).expect("plain data serializes")
}

/// Parse the documented schema back into a decomposition.
pub fn decomposition_from_json(text: &str) -> Result<Decomposition, String> {
    let j: DecompositionJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    j.to_decomposition()
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixJson {
    pub generator: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepJson {
    pub class: usize,
    pub degree: usize,
    pub field: String,
    pub schur_index: u64,
    pub subgroup: Option<Vec<String>>,
    pub transversal: Vec<String>,
    pub generators: Vec<MatrixJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepsJson {
    pub group: String,
    pub order: u64,
    pub representations: Vec<RepJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentJson {
    pub index: usize,
    pub component: String,
    pub dimension: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentsJson {
    pub group: String,
    pub order: u64,
    pub idempotents: Vec<IdempotentJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountJson {
    pub degree: u64,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountingJson {
    pub group: String,
    pub order: u64,
    pub table: Vec<CountJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyJson {
    pub group: String,
    pub order: u64,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}
