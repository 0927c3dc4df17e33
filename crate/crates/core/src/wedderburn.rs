//! Wedderburn decompositions of `QG` by the cyclic-subgroup formulas for
//! abelian, VZ and maximal-class groups, and by a generic per-Galois-class
//! method driven by the character table.

use std::collections::BTreeMap;
use std::fmt;

use crate::chars::{galois_classes, linear_characters, nonlinear_characters, schur_index};
use crate::cyclotomic::{divisors, euler_phi, FieldDescriptor};
use crate::error::{Error, Result};
use crate::group::{PcGroup, Subgroup};

/// The division ring of a simple component `M_n(D)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Division {
    /// `D` is the center itself.
    Field,
    /// The rational quaternions `H(Q)`.
    RationalQuaternion,
    /// A noncommutative division algebra of the given degree over the center.
    DivisionAlgebra { degree: u64 },
}

impl Division {
    /// The degree `m` of `D` over its center.
    pub fn degree(&self) -> u64 {
        match self {
            Division::Field => 1,
            Division::RationalQuaternion => 2,
            Division::DivisionAlgebra { degree } => *degree,
        }
    }

    fn for_schur_index(m: u64, center: &FieldDescriptor) -> Division {
        match m {
            1 => Division::Field,
            2 if center.is_rational() => Division::RationalQuaternion,
            _ => Division::DivisionAlgebra { degree: m },
        }
    }
}

/// `multiplicity` copies of `M_n(D)` with `Z(D) = center`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedderburnComponent {
    pub multiplicity: u64,
    pub matrix_size: u64,
    pub center: FieldDescriptor,
    pub division: Division,
}

impl WedderburnComponent {
    pub fn new(multiplicity: u64, matrix_size: u64, center: FieldDescriptor, division: Division) -> Self {
        WedderburnComponent { multiplicity, matrix_size, center, division }
    }

    /// `Q`-dimension of one copy: `n^2 m^2 [center : Q]`.
    pub fn dimension(&self) -> u64 {
        let m = self.division.degree();
        self.matrix_size * self.matrix_size * m * m * self.center.degree()
    }

    fn key(&self) -> (u64, u64, u64, Division, Vec<u64>) {
        (
            self.matrix_size,
            self.center.conductor,
            self.center.degree(),
            self.division.clone(),
            self.center.stabilizer.clone(),
        )
    }

    /// The algebra without its multiplicity, e.g. `M3(Q(z3))` or `H(Q)`.
    pub fn body(&self) -> String {
        let d = match &self.division {
            Division::Field => self.center.name(),
            Division::RationalQuaternion => "H(Q)".to_string(),
            Division::DivisionAlgebra { degree } => format!("D{degree}[{}]", self.center.name()),
        };
        if self.matrix_size == 1 {
            d
        } else {
            format!("M{}({d})", self.matrix_size)
        }
    }
}

impl fmt::Display for WedderburnComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity == 1 {
            write!(f, "{}", self.body())
        } else {
            write!(f, "{} {}", self.multiplicity, self.body())
        }
    }
}

/// How a decomposition was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Generic,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Generic => "generic",
            Method::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "generic" => Ok(Method::Generic),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown method `{s}`") }),
        }
    }
}

/// A Wedderburn decomposition with identical components merged and sorted
/// by matrix size, then center conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub group: String,
    pub order: u64,
    pub method: Method,
    pub components: Vec<WedderburnComponent>,
}

impl Decomposition {
    pub fn new(group: &str, order: u64, method: Method, parts: Vec<WedderburnComponent>) -> Self {
        let mut merged: BTreeMap<_, WedderburnComponent> = BTreeMap::new();
        for c in parts.into_iter().filter(|c| c.multiplicity > 0) {
            merged
                .entry(c.key())
                .and_modify(|e| e.multiplicity += c.multiplicity)
                .or_insert(c);
        }
        Decomposition { group: group.to_string(), order, method, components: merged.into_values().collect() }
    }

    /// `sum of multiplicity * dimension`, which must equal `|G|`.
    pub fn dimension(&self) -> u64 {
        self.components.iter().map(|c| c.multiplicity * c.dimension()).sum()
    }

    /// Number of simple components counted with multiplicity.
    pub fn component_count(&self) -> u64 {
        self.components.iter().map(|c| c.multiplicity).sum()
    }

    /// Equality of the algebras, ignoring the method and group label.
    pub fn same_algebra(&self, other: &Decomposition) -> bool {
        self.components == other.components
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "QG = {}", parts.join(" + "))
    }
}

/// Number of cyclic subgroups of each order in the abelian section `A/N`.
///
/// `N` must be normal in `A` with `A/N` abelian.
pub fn section_cyclic_counts(g: &PcGroup, a: &Subgroup, n: &Subgroup) -> BTreeMap<u64, u64> {
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for &x in a.members() {
        let mut k = 1u64;
        let mut y = x;
        while !n.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        *by_order.entry(k).or_default() += 1;
    }
    by_order.into_iter().map(|(d, c)| (d, c / n.order() as u64 / euler_phi(d))).collect()
}

fn count(c: &BTreeMap<u64, u64>, d: u64) -> u64 {
    c.get(&d).copied().unwrap_or(0)
}

fn exponent_of(c: &BTreeMap<u64, u64>) -> u64 {
    c.keys().copied().max().unwrap_or(1)
}

/// `sum over d | m of a_d Q(z_d)` for the cyclic-subgroup counts `a_d`.
fn abelian_part(c: &BTreeMap<u64, u64>) -> Vec<WedderburnComponent> {
    divisors(exponent_of(c))
        .into_iter()
        .map(|d| WedderburnComponent::new(count(c, d), 1, FieldDescriptor::cyclotomic(d), Division::Field))
        .collect()
}

/// `QA = sum over d | exp(A) of a_d Q(z_d)` for an abelian group `A`.
pub fn perlis_walker(a: &PcGroup) -> Result<Decomposition> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let c = section_cyclic_counts(a, &a.whole(), &a.trivial());
    Ok(Decomposition::new(a.label(), a.order() as u64, Method::Formula, abelian_part(&c)))
}

/// The linear part `Q(G/G')` from the cyclic-subgroup counts of `G/G'`.
pub fn abelianization_part(g: &PcGroup) -> Vec<WedderburnComponent> {
    abelian_part(&section_cyclic_counts(g, &g.whole(), g.derived_subgroup()))
}

fn sqrt_exact(n: usize) -> u64 {
    let r = (n as f64).sqrt().round() as u64;
    assert_eq!((r * r) as usize, n, "|G/Z(G)| of a VZ-group is a square");
    r
}

/// Components `(a_d - a_d') M_f(Q(z_d))` for `d | exp Z(G)`, `d >= from`,
/// with `a_d` counted in `Z(G)` and `a_d'` in `Z(G)/G'` (zero if `d` does
/// not divide the exponent of `Z(G)/G'`).
fn vz_center_part(g: &PcGroup, f: u64, from: u64) -> Vec<WedderburnComponent> {
    let z = g.center();
    let cz = section_cyclic_counts(g, z, &g.trivial());
    let czd = section_cyclic_counts(g, z, g.derived_subgroup());
    let m3 = exponent_of(&czd);
    divisors(exponent_of(&cz))
        .into_iter()
        .filter(|&d| d >= from)
        .map(|d| {
            let a = count(&cz, d);
            let mult = if m3.is_multiple_of(d) { a - count(&czd, d) } else { a };
            WedderburnComponent::new(mult, f, FieldDescriptor::cyclotomic(d), Division::Field)
        })
        .collect()
}

/// The VZ formula for odd `p`.
pub fn wedderburn_vz_odd(g: &PcGroup) -> Result<Decomposition> {
    if g.prime() == 2 {
        return Err(Error::EvenPrime);
    }
    if !g.is_vz() {
        return Err(Error::NotVz);
    }
    let f = sqrt_exact(g.order() / g.center().order());
    let mut parts = abelianization_part(g);
    parts.extend(vz_center_part(g, f, 1));
    Ok(Decomposition::new(g.label(), g.order() as u64, Method::Formula, parts))
}

/// Number of nonlinear irreducible characters with Schur index 2.
pub fn quaternionic_count(g: &PcGroup) -> Result<u64> {
    Ok(nonlinear_characters(g)?.iter().filter(|c| schur_index(g, c) == 2).count() as u64)
}

/// The VZ formula for 2-groups with `k` quaternion components.
pub fn wedderburn_vz_2(g: &PcGroup) -> Result<Decomposition> {
    if g.prime() != 2 {
        return Err(Error::NotApplicable("the 2-group formula needs p = 2".into()));
    }
    if !g.is_vz() {
        return Err(Error::NotVz);
    }
    let f = sqrt_exact(g.order() / g.center().order());
    let k = quaternionic_count(g)?;
    let z = g.center();
    let a2 = count(&section_cyclic_counts(g, z, &g.trivial()), 2);
    let a2d = count(&section_cyclic_counts(g, z, g.derived_subgroup()), 2);
    let rational = (a2 - a2d).checked_sub(k).ok_or_else(|| {
        Error::UnsupportedStructure("more quaternionic characters than rational parameters".into())
    })?;
    let mut parts = abelianization_part(g);
    parts.push(WedderburnComponent::new(k, f / 2, FieldDescriptor::rationals(), Division::RationalQuaternion));
    parts.push(WedderburnComponent::new(rational, f, FieldDescriptor::rationals(), Division::Field));
    parts.extend(vz_center_part(g, f, 4));
    Ok(Decomposition::new(g.label(), g.order() as u64, Method::Formula, parts))
}

/// The formula for odd groups of order `p^4` and nilpotency class 3, from the
/// cyclic-subgroup counts of the abelian maximal subgroup `H` and of `H/G'`.
pub fn wedderburn_phi3(g: &PcGroup) -> Result<Decomposition> {
    if g.prime() == 2 {
        return Err(Error::EvenPrime);
    }
    let h = g.unique_abelian_maximal()?;
    let p = g.prime() as u64;
    let ch = section_cyclic_counts(g, &h, &g.trivial());
    let chd = section_cyclic_counts(g, &h, g.derived_subgroup());
    let m1 = exponent_of(&chd);
    let mut parts = abelianization_part(g);
    for d in divisors(exponent_of(&ch)) {
        let a = count(&ch, d);
        let num = if m1.is_multiple_of(d) { a - count(&chd, d) } else { a };
        if num % p != 0 {
            return Err(Error::UnsupportedStructure(format!("count {num} for d={d} is not divisible by p")));
        }
        parts.push(WedderburnComponent::new(num / p, p, FieldDescriptor::cyclotomic(d), Division::Field));
    }
    Ok(Decomposition::new(g.label(), g.order() as u64, Method::Formula, parts))
}

/// Which structural formula applies to `g`, if any.
pub fn formula_kind(g: &PcGroup) -> Option<&'static str> {
    let p = g.prime() as usize;
    if g.is_abelian() {
        Some("perlis-walker")
    } else if g.is_vz() {
        Some(if p == 2 { "vz-2" } else { "vz-odd" })
    } else if p != 2 && g.order() == p.pow(4) && g.nilpotency_class() == 3 {
        Some("class-3")
    } else {
        None
    }
}

/// The structural formula for `g`, or `None` when no formula applies.
pub fn wedderburn_formula(g: &PcGroup) -> Option<Result<Decomposition>> {
    Some(match formula_kind(g)? {
        "perlis-walker" => perlis_walker(g),
        "vz-2" => wedderburn_vz_2(g),
        "vz-odd" => wedderburn_vz_odd(g),
        _ => wedderburn_phi3(g),
    })
}

/// Orders of the linear characters of `G`, counted.
fn linear_order_counts(g: &PcGroup) -> BTreeMap<u64, u64> {
    let mut c: BTreeMap<u64, u64> = BTreeMap::new();
    for l in linear_characters(g) {
        *c.entry(l.order()).or_default() += 1;
    }
    c
}

/// One component per Galois class of `Irr(G)`: `M_{chi(1)/m}(D)` with
/// `Z(D) = Q(chi)` and `m` the Schur index.
pub fn wedderburn_generic(g: &PcGroup) -> Result<Decomposition> {
    let mut parts: Vec<WedderburnComponent> = linear_order_counts(g)
        .into_iter()
        .map(|(d, n)| WedderburnComponent::new(n / euler_phi(d), 1, FieldDescriptor::cyclotomic(d), Division::Field))
        .collect();
    if !g.is_abelian() {
        let nl = nonlinear_characters(g)?;
        for gc in galois_classes(&nl)? {
            let chi = &gc.representative;
            let m = schur_index(g, chi);
            let center = chi.field().clone();
            let division = Division::for_schur_index(m, &center);
            parts.push(WedderburnComponent::new(1, chi.degree() / m, center, division));
        }
    }
    Ok(Decomposition::new(g.label(), g.order() as u64, Method::Generic, parts))
}

/// The formula where one applies, otherwise the generic method.
pub fn wedderburn(g: &PcGroup) -> Result<Decomposition> {
    wedderburn_formula(g).unwrap_or_else(|| wedderburn_generic(g))
}

/// Irreducible rational representations per degree `m [Q(chi):Q] chi(1)`.
pub fn counting_table(g: &PcGroup) -> Result<BTreeMap<u64, u64>> {
    let mut t: BTreeMap<u64, u64> = BTreeMap::new();
    for (d, n) in linear_order_counts(g) {
        *t.entry(euler_phi(d)).or_default() += n / euler_phi(d);
    }
    if !g.is_abelian() {
        for gc in galois_classes(&nonlinear_characters(g)?)? {
            let chi = &gc.representative;
            let deg = schur_index(g, chi) * chi.field().degree() * chi.degree();
            *t.entry(deg).or_default() += 1;
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group_id;

    fn group(id: &str) -> PcGroup {
        parse_group_id(id).unwrap().build().unwrap()
    }

    fn text(id: &str) -> String {
        wedderburn(&group(id)).unwrap().to_string()
    }

    #[test]
    fn perlis_walker_small() {
        assert_eq!(text("abelian@p=3,type=[1]"), "QG = Q + Q(z3)");
        assert_eq!(text("abelian@p=2,type=[1,1]"), "QG = 4 Q");
        assert_eq!(text("abelian@p=3,type=[2,1]"), "QG = Q + 4 Q(z3) + 3 Q(z9)");
        assert!(perlis_walker(&group("q8")).is_err());
    }

    #[test]
    fn extraspecial_and_quaternion() {
        assert_eq!(text("phi2_21@p=3"), "QG = Q + 4 Q(z3) + M3(Q(z3))");
        assert_eq!(text("q8"), "QG = 4 Q + H(Q)");
        assert_eq!(text("d8"), "QG = 4 Q + M2(Q)");
        assert_eq!(text("g6@16"), "QG = 8 Q + 2 H(Q)");
    }

    #[test]
    fn class_three() {
        assert_eq!(text("phi3_211b@p=3,r=1"), "QG = Q + 4 Q(z3) + M3(Q(z3)) + M3(Q(z9))");
        assert_eq!(text("phi3_1111@p=3"), "QG = Q + 4 Q(z3) + 4 M3(Q(z3))");
    }

    #[test]
    fn generic_fallback_for_q16() {
        let g = group("q16");
        assert!(wedderburn_formula(&g).is_none());
        let d = wedderburn(&g).unwrap();
        assert_eq!(d.method, Method::Generic);
        assert_eq!(d.to_string(), "QG = 4 Q + D2[Q(z8+z8^-1)] + M2(Q)");
        assert_eq!(d.dimension(), 16);
    }

    #[test]
    fn counting_tables() {
        let t = counting_table(&group("phi2_21@p=3")).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 1), (2, 4), (6, 1)]));
        let t = counting_table(&group("phi2_211b@p=3")).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 1), (2, 13), (18, 1)]));
    }
}
