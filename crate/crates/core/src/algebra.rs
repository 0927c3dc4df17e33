//! Exact arithmetic in `QG`, central idempotents, and a brute-force
//! Wedderburn oracle from the ranks of the simple components.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::chars::{galois_sum, irr_galois_classes, schur_index, Character};
use crate::cyclotomic::{CycNum, Rational};
use crate::error::{Error, Result};
use crate::group::{PcGroup, Subgroup};
use crate::wedderburn::{Decomposition, Division, Method, WedderburnComponent};

/// Largest group order the oracle accepts unless raised explicitly.
pub const DEFAULT_ORACLE_CAP: usize = 256;

/// An element of `Q(z_n)G`, one coefficient per element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<CycNum>,
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl AlgebraElement {
    pub fn zero(g: &PcGroup) -> Self {
        AlgebraElement { coeffs: vec![CycNum::zero(1); g.order()] }
    }

    pub fn one(g: &PcGroup) -> Self {
        Self::basis(g, 0)
    }

    /// The group element `x` as an algebra element.
    pub fn basis(g: &PcGroup, x: u32) -> Self {
        let mut e = Self::zero(g);
        e.coeffs[x as usize] = CycNum::one(1);
        e
    }

    pub fn from_coeffs(coeffs: Vec<CycNum>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        AlgebraElement { coeffs: coeffs.iter().map(|r| CycNum::from_rational(1, r)).collect() }
    }

    pub fn coeff(&self, x: u32) -> &CycNum {
        &self.coeffs[x as usize]
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    /// The coefficients as rationals, if they all lie in `Q`.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.to_rational()).collect()
    }

    /// Element indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<u32> {
        (0..self.coeffs.len() as u32).filter(|&x| !self.coeffs[x as usize].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect();
        AlgebraElement { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect();
        AlgebraElement { coeffs }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    /// Integer numerators over a common denominator, if every coefficient
    /// is rational and the numerators fit in `i128`.
    fn scaled_ints(&self) -> Option<(Vec<i128>, BigInt)> {
        let rs = self.rational_coeffs()?;
        let den = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints = rs.iter().map(|r| (r.numer() * (&den / r.denom())).to_i128()).collect::<Option<Vec<_>>>()?;
        Some((ints, den))
    }

    fn mul_scaled(g: &PcGroup, a: &(Vec<i128>, BigInt), b: &(Vec<i128>, BigInt)) -> Option<Self> {
        let sa: Vec<usize> = (0..a.0.len()).filter(|&i| a.0[i] != 0).collect();
        let sb: Vec<usize> = (0..b.0.len()).filter(|&i| b.0[i] != 0).collect();
        let mut acc = vec![0i128; a.0.len()];
        for &x in &sa {
            for &y in &sb {
                let z = g.mul(x as u32, y as u32) as usize;
                acc[z] = acc[z].checked_add(a.0[x].checked_mul(b.0[y])?)?;
            }
        }
        let den = &a.1 * &b.1;
        let coeffs = acc
            .into_iter()
            .map(|v| CycNum::from_rational(1, &Rational::new(BigInt::from(v), den.clone())))
            .collect();
        Some(AlgebraElement { coeffs })
    }

    /// The convolution product.
    pub fn mul(&self, g: &PcGroup, other: &Self) -> Self {
        if let (Some(a), Some(b)) = (self.scaled_ints(), other.scaled_ints()) {
            if let Some(c) = Self::mul_scaled(g, &a, &b) {
                return c;
            }
        }
        let a = self.support();
        let b = other.support();
        let mut out = Self::zero(g);
        for &x in &a {
            let cx = &self.coeffs[x as usize];
            for &y in &b {
                let z = g.mul(x, y) as usize;
                out.coeffs[z] = out.coeffs[z].add_ref(&cx.mul_ref(&other.coeffs[y as usize]));
            }
        }
        out
    }

    /// Central exactly when the coefficients are constant on conjugacy classes.
    pub fn is_central(&self, g: &PcGroup) -> bool {
        let cl = g.classes();
        g.elements().all(|x| self.coeffs[x as usize] == self.coeffs[cl.rep(g.class_of(x)) as usize])
    }

    pub fn is_idempotent(&self, g: &PcGroup) -> bool {
        self.mul(g, self) == *self
    }
}

/// `X^ = (1/|X|) sum of x over X` for a nonempty subset.
pub fn hat(g: &PcGroup, xs: &[u32]) -> AlgebraElement {
    assert!(!xs.is_empty(), "hat of an empty set");
    let mut e = AlgebraElement::zero(g);
    let w = CycNum::from_rational(1, &rat(1, xs.len() as i64));
    for &x in xs {
        e.coeffs[x as usize] = e.coeffs[x as usize].add_ref(&w);
    }
    e
}

/// Subgroups `D >= N` of `A` with `D/N` minimal normal in `A/N`, i.e. of
/// order `p` and central in `A/N`.
pub fn minimal_normal_over(g: &PcGroup, a: &Subgroup, n: &Subgroup) -> Vec<Subgroup> {
    let p = g.prime() as i64;
    let mut out: Vec<Subgroup> = Vec::new();
    for &x in a.members() {
        if n.contains(x) || !n.contains(g.pow(x, p)) {
            continue;
        }
        if !a.gens().iter().all(|&y| n.contains(g.comm(x, y))) {
            continue;
        }
        if out.iter().any(|d| d.contains(x)) {
            continue;
        }
        out.push(n.join(g, x));
    }
    out.sort();
    out
}

/// `eps(A, N)`: `A^` if `N = A`, otherwise the product of `N^ - D^` over the
/// minimal normal subgroups `D/N` of `A/N`. Computed inside `QG`.
pub fn epsilon_within(g: &PcGroup, a: &Subgroup, n: &Subgroup) -> Result<AlgebraElement> {
    if !n.is_subgroup_of(a) || !a.gens().iter().all(|&x| n.gens().iter().all(|&y| n.contains(g.conj(y, x)))) {
        return Err(Error::NotNormal);
    }
    if n.order() == a.order() {
        return Ok(hat(g, a.members()));
    }
    let nh = hat(g, n.members());
    let mut acc = AlgebraElement::one(g);
    for d in minimal_normal_over(g, a, n) {
        acc = acc.mul(g, &nh.sub(&hat(g, d.members())));
    }
    Ok(acc)
}

/// `eps(G, N)` for a normal subgroup `N`.
pub fn epsilon(g: &PcGroup, n: &Subgroup) -> Result<AlgebraElement> {
    epsilon_within(g, &g.whole(), n)
}

/// `e(chi) = (chi(1)/|G|) sum chi(x) x^-1`.
pub fn idempotent_from_character(g: &PcGroup, chi: &Character) -> AlgebraElement {
    let f = rat(chi.degree() as i64, g.order() as i64);
    let coeffs = g.elements().map(|h| chi.value(g.class_of(g.inv(h))).scale(&f)).collect();
    AlgebraElement { coeffs }
}

/// `e_Q(chi)`: the sum of `e(chi^sigma)` over the Galois conjugates of `chi`.
pub fn rational_idempotent(g: &PcGroup, chi: &Character) -> AlgebraElement {
    let f = rat(chi.degree() as i64, g.order() as i64);
    let sum = galois_sum(chi);
    let coeffs = g.elements().map(|h| CycNum::from_rational(1, &(&sum[g.class_of(g.inv(h))] * &f))).collect();
    AlgebraElement { coeffs }
}

/// Rank over `Q` of a list of sparse rational rows, by exact elimination.
pub fn sparse_rank(rows: impl IntoIterator<Item = BTreeMap<usize, Rational>>) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, Rational>> = HashMap::new();
    for mut row in rows {
        while let Some((&col, lead)) = row.iter().next() {
            let Some(prow) = pivots.get(&col) else {
                let inv = lead.recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                pivots.insert(col, row);
                break;
            };
            let f = lead.clone();
            for (c, v) in prow {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
    pivots.len()
}

fn rational_rows_of(e: &AlgebraElement) -> Result<Vec<(u32, Rational)>> {
    let c = e.rational_coeffs().ok_or_else(|| Error::NotApplicable("coefficients must be rational".into()))?;
    Ok(c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(x, v)| (x as u32, v)).collect())
}

/// `dim_Q QGe`, the rank of `x -> x e` on `QG`, for a rational central idempotent.
pub fn component_dimension(g: &PcGroup, e: &AlgebraElement) -> Result<usize> {
    if !e.is_central(g) {
        return Err(Error::NotCentral);
    }
    if !e.is_idempotent(g) {
        return Err(Error::NotIdempotent);
    }
    let supp = rational_rows_of(e)?;
    let rows = g.elements().map(|x| supp.iter().map(|(y, v)| (g.mul(x, *y) as usize, v.clone())).collect());
    Ok(sparse_rank(rows))
}

/// `dim_Q Z(QGe)`, the rank of the class sums multiplied by `e`.
pub fn center_dimension(g: &PcGroup, e: &AlgebraElement) -> Result<usize> {
    let supp = rational_rows_of(e)?;
    let cl = g.classes();
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); cl.len()];
    for x in g.elements() {
        members[g.class_of(x)].push(x);
    }
    let rows = members.iter().map(|cls| {
        let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
        for &x in cls {
            for (y, v) in &supp {
                let k = g.mul(x, *y) as usize;
                let ent = row.entry(k).or_insert_with(Rational::zero);
                *ent += v;
                if ent.is_zero() {
                    row.remove(&k);
                }
            }
        }
        row
    });
    Ok(sparse_rank(rows))
}

/// Rational primitive central idempotents, one per Galois class of `Irr(G)`.
pub fn primitive_central_idempotents(g: &PcGroup) -> Result<Vec<(Character, AlgebraElement)>> {
    Ok(irr_galois_classes(g)?
        .into_iter()
        .map(|gc| {
            let e = rational_idempotent(g, &gc.representative);
            (gc.representative, e)
        })
        .collect())
}

/// Wedderburn decomposition from the ranks of `QG e_Q(chi)` and of their
/// centers, checking `sum e = 1`, orthogonality and the dimension identity.
pub fn oracle_decomposition(g: &PcGroup) -> Result<Decomposition> {
    oracle_decomposition_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn oracle_decomposition_capped(g: &PcGroup, cap: usize) -> Result<Decomposition> {
    if g.order() > cap {
        return Err(Error::UnsupportedOrder { order: g.order() as u64, cap: cap as u64 });
    }
    let ids = primitive_central_idempotents(g)?;
    let mut total = AlgebraElement::zero(g);
    let mut parts = Vec::with_capacity(ids.len());
    for (i, (chi, e)) in ids.iter().enumerate() {
        total = total.add(e);
        for (_, f) in &ids[i + 1..] {
            if !e.mul(g, f).is_zero() {
                return Err(Error::UnsupportedStructure("idempotents are not orthogonal".into()));
            }
        }
        let dim = component_dimension(g, e)? as u64;
        let cdeg = center_dimension(g, e)? as u64;
        let m = schur_index(g, chi);
        let center = chi.field().clone();
        let n = chi.degree() / m;
        if cdeg != center.degree() || dim != n * n * m * m * cdeg {
            return Err(Error::UnsupportedStructure(format!(
                "component of dimension {dim} with center degree {cdeg} does not match chi(1) = {}",
                chi.degree()
            )));
        }
        let division = match m {
            1 => Division::Field,
            2 if center.is_rational() => Division::RationalQuaternion,
            _ => Division::DivisionAlgebra { degree: m },
        };
        parts.push(WedderburnComponent::new(1, n, center, division));
    }
    if total != AlgebraElement::one(g) {
        return Err(Error::UnsupportedStructure("idempotents do not sum to 1".into()));
    }
    Ok(Decomposition::new(g.label(), g.order() as u64, Method::Oracle, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group_id;
    use crate::chars::{irr_characters, linear_characters, vz_character, vz_parameters};
    use crate::wedderburn::wedderburn;

    fn group(id: &str) -> PcGroup {
        parse_group_id(id).unwrap().build().unwrap()
    }

    fn r(v: &AlgebraElement) -> Vec<Rational> {
        v.rational_coeffs().unwrap()
    }

    #[test]
    fn hats() {
        let g = group("abelian@p=2,type=[2]");
        assert_eq!(hat(&g, &[0]), AlgebraElement::one(&g));
        let a2 = g.gen(1);
        let h = hat(&g, &[0, a2]);
        assert!(h.is_idempotent(&g));
        assert_eq!(r(&h)[0], rat(1, 2));
        assert!(hat(&g, &g.elements().collect::<Vec<_>>()).is_idempotent(&g));
    }

    #[test]
    fn epsilons() {
        let c4 = group("abelian@p=2,type=[2]");
        let e = epsilon(&c4, &c4.trivial()).unwrap();
        let a2 = c4.gen(1);
        let mut want = vec![Rational::zero(); 4];
        want[0] = rat(1, 2);
        want[a2 as usize] = rat(-1, 2);
        assert_eq!(r(&e), want);
        assert_eq!(component_dimension(&c4, &e).unwrap(), 2);
        let v4 = group("abelian@p=2,type=[1,1]");
        assert!(epsilon(&v4, &v4.trivial()).unwrap().is_zero());
        let whole = epsilon(&v4, &v4.whole()).unwrap();
        assert_eq!(component_dimension(&v4, &whole).unwrap(), 1);
        let d8 = group("d8");
        let b = Subgroup::closure(&d8, &[d8.gen(1)]);
        assert_eq!(epsilon(&d8, &b), Err(Error::NotNormal));
    }

    #[test]
    fn character_idempotents() {
        let c3 = group("abelian@p=3,type=[1]");
        let chi = irr_characters(&c3).unwrap()[1].clone();
        let e = idempotent_from_character(&c3, &chi);
        assert!(e.is_idempotent(&c3) && e.is_central(&c3));
        let q8 = group("q8");
        let chi = irr_characters(&q8).unwrap().iter().find(|c| !c.is_linear()).unwrap().clone();
        let e = idempotent_from_character(&q8, &chi);
        assert!(e.is_idempotent(&q8));
        let z = q8.center().members()[1];
        let mut want = vec![Rational::zero(); 8];
        want[0] = rat(1, 2);
        want[z as usize] = rat(-1, 2);
        assert_eq!(r(&e), want);
    }

    #[test]
    fn linear_rational_idempotents_are_epsilons() {
        let g = group("phi2_211c@p=3");
        for l in linear_characters(&g) {
            let chi = l.to_character(&g);
            let e = rational_idempotent(&g, &chi);
            assert_eq!(e, epsilon(&g, &l.kernel(&g)).unwrap());
        }
    }

    #[test]
    fn vz_rational_idempotents() {
        let g = group("phi2_21@p=3");
        for mu in vz_parameters(&g) {
            let chi = vz_character(&g, &mu);
            let e = rational_idempotent(&g, &chi);
            assert_eq!(e, epsilon_within(&g, g.center(), &mu.kernel(&g)).unwrap());
            assert_eq!(component_dimension(&g, &e).unwrap(), 18);
            assert_eq!(center_dimension(&g, &e).unwrap(), 2);
        }
    }

    #[test]
    fn oracle_matches_formula() {
        for id in ["q8", "d8", "phi2_21@p=3", "phi3_211a@p=3", "g5@16", "q16", "abelian@p=3,type=[2,1]"] {
            let g = group(id);
            let o = oracle_decomposition(&g).unwrap();
            assert!(o.same_algebra(&wedderburn(&g).unwrap()), "{id}: {o}");
            assert_eq!(o.dimension(), g.order() as u64);
        }
        let big = group("extraspecial@p=3,n=3,exp=p");
        assert!(matches!(oracle_decomposition(&big), Err(Error::UnsupportedOrder { .. })));
    }

    #[test]
    fn rank_of_sparse_rows() {
        let rows = vec![
            BTreeMap::from([(0, rat(1, 1)), (1, rat(2, 1))]),
            BTreeMap::from([(0, rat(2, 1)), (1, rat(4, 1))]),
            BTreeMap::from([(1, rat(1, 3))]),
        ];
        assert_eq!(sparse_rank(rows), 2);
    }
}
