//! Complex irreducible characters, Galois classes, Schur indices and the
//! rational characters `Omega(chi)`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::{euler_phi, field_of_values, units, CycNum, FieldDescriptor, Rational};
use crate::error::{Error, Result};
use crate::group::{quotient, subgroup_as_group, maximal_subgroups, PcGroup, Subgroup};

const OUTSIDE: u32 = u32::MAX;

/// A linear character of a subgroup `H <= G`, stored as exponents of a
/// primitive root of unity of the character's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearChar {
    order: u64,
    /// `vals[x]` is `k` with `psi(x) = z_order^k`, or `u32::MAX` off `H`.
    vals: Vec<u32>,
}

impl LinearChar {
    fn normalized(e: u64, mut vals: Vec<u32>) -> Self {
        let g = vals
            .iter()
            .filter(|&&v| v != OUTSIDE)
            .fold(e, |acc, &v| acc.gcd(&(v as u64)));
        if g > 1 {
            for v in vals.iter_mut().filter(|v| **v != OUTSIDE) {
                *v /= g as u32;
            }
        }
        LinearChar { order: e / g, vals }
    }

    /// The homomorphism on `<gens>` sending `gens[i]` to `z_e^exps[i]`.
    pub fn from_generators(g: &PcGroup, gens: &[u32], e: u64, exps: &[u64]) -> Result<Self> {
        let mut vals = vec![OUTSIDE; g.order()];
        vals[0] = 0;
        let mut q = VecDeque::from([0u32]);
        while let Some(x) = q.pop_front() {
            for (&s, &a) in gens.iter().zip(exps) {
                let y = g.mul(x, s);
                let v = ((vals[x as usize] as u64 + a) % e) as u32;
                match vals[y as usize] {
                    OUTSIDE => {
                        vals[y as usize] = v;
                        q.push_back(y);
                    }
                    w if w != v => {
                        return Err(Error::InconsistentCharacter(format!(
                            "element {y} receives both z{e}^{w} and z{e}^{v}"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(Self::normalized(e, vals))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent `k` with `psi(x) = z_order^k`, if `x` lies in the domain.
    pub fn exp_at(&self, x: u32) -> Option<u32> {
        match self.vals[x as usize] {
            OUTSIDE => None,
            v => Some(v),
        }
    }

    pub fn value(&self, x: u32) -> Option<CycNum> {
        self.exp_at(x).map(|k| CycNum::zeta(self.order, k as i64))
    }

    pub fn contains(&self, x: u32) -> bool {
        self.vals[x as usize] != OUTSIDE
    }

    pub fn domain(&self, g: &PcGroup) -> Subgroup {
        let m: Vec<u32> = g.elements().filter(|&x| self.contains(x)).collect();
        Subgroup::closure(g, &m)
    }

    pub fn kernel(&self, g: &PcGroup) -> Subgroup {
        let m: Vec<u32> = g.elements().filter(|&x| self.vals[x as usize] == 0).collect();
        Subgroup::closure(g, &m)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Whether the character is trivial on every element of `s`.
    pub fn is_trivial_on(&self, s: &Subgroup) -> bool {
        s.members().iter().all(|&x| self.vals[x as usize] == 0)
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, s: &Subgroup) -> LinearChar {
        let mut vals = vec![OUTSIDE; self.vals.len()];
        for &x in s.members() {
            vals[x as usize] = self.vals[x as usize];
        }
        Self::normalized(self.order, vals)
    }

    /// `psi^x(h) = psi(x h x^-1)`, a character of `x^-1 H x`.
    pub fn conjugate(&self, g: &PcGroup, x: u32) -> LinearChar {
        let mut vals = vec![OUTSIDE; self.vals.len()];
        let xi = g.inv(x);
        for h in g.elements() {
            if let Some(v) = self.exp_at(g.conj(h, xi)) {
                vals[h as usize] = v;
            }
        }
        LinearChar { order: self.order, vals }
    }

    /// `psi^k`.
    pub fn pow(&self, k: u64) -> LinearChar {
        let vals = self
            .vals
            .iter()
            .map(|&v| if v == OUTSIDE { v } else { ((v as u64 * k) % self.order) as u32 })
            .collect();
        Self::normalized(self.order, vals)
    }

    /// The character of `G` this linear character defines; its domain must be `G`.
    pub fn to_character(&self, g: &PcGroup) -> Character {
        let cl = g.classes();
        let vals = (0..cl.len()).map(|c| self.value(cl.rep(c)).expect("domain is G")).collect();
        Character::with_field(vals, FieldDescriptor::cyclotomic(self.order))
    }
}

/// Generator exponents of every linear character of an abelian pc group.
///
/// Characters are listed with the free parameter of `g1` most significant,
/// so the trivial character comes first.
fn abelian_dual(q: &PcGroup) -> (u64, Vec<Vec<u64>>) {
    let p = q.prime() as u64;
    let e = q.exponent();
    let m = q.ngens();
    let pres = q.presentation();
    let mut out = Vec::with_capacity(q.order());
    let mut a = vec![0u64; m];
    // t[i] selects one of the p solutions of p*a_i = psi(g_i^p)
    let mut t = vec![0u64; m];
    loop {
        for i in (0..m).rev() {
            let s: u64 = pres.power[i].iter().zip(&a).map(|(&w, &aj)| w as u64 * aj).sum::<u64>() % e;
            debug_assert!(s.is_multiple_of(p), "abelian presentations admit p-th roots");
            a[i] = (s / p + t[i] * (e / p)) % e;
        }
        out.push(a.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return (e, out);
            }
            i -= 1;
            t[i] += 1;
            if t[i] < p {
                break;
            }
            t[i] = 0;
        }
    }
}

/// All linear characters of a subgroup `h`, trivial character first.
pub fn linear_characters_of(g: &PcGroup, h: &Subgroup) -> Vec<LinearChar> {
    let (hg, embed) = subgroup_as_group(g, h);
    let (q, proj) = quotient(&hg, hg.derived_subgroup()).expect("derived subgroup is normal");
    let (e, dual) = abelian_dual(&q);
    let qexps: Vec<Vec<u32>> = q.elements().map(|x| q.exps(x)).collect();
    dual.iter()
        .map(|a| {
            let mut vals = vec![OUTSIDE; g.order()];
            for x in hg.elements() {
                let qe = &qexps[proj[x as usize] as usize];
                let v: u64 = qe.iter().zip(a).map(|(&k, &ai)| k as u64 * ai).sum::<u64>() % e;
                vals[embed[x as usize] as usize] = v as u32;
            }
            LinearChar::normalized(e, vals)
        })
        .collect()
}

/// All linear characters of `G`, as lifts of `Irr(G/G')`.
pub fn linear_characters(g: &PcGroup) -> Vec<LinearChar> {
    linear_characters_of(g, &g.whole())
}

/// A class function on a `PcGroup` with one value per conjugacy class.
///
/// Values are stored in `Q(z_c)` with `c` the conductor of the character field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    degree: u64,
    field: FieldDescriptor,
    values: Vec<CycNum>,
}

impl Character {
    /// Character with the given class values; the field is computed.
    pub fn new(values: Vec<CycNum>) -> Self {
        let field = field_of_values(&values);
        Self::with_field(values, field)
    }

    /// Character whose values are known to generate `field`.
    pub fn with_field(values: Vec<CycNum>, field: FieldDescriptor) -> Self {
        let c = field.conductor;
        let values: Vec<CycNum> = values
            .into_iter()
            .map(|v| {
                let m = v.order().lcm(&c);
                v.lift(m).lower(c).expect("values lie in the character field")
            })
            .collect();
        let degree = values[0]
            .to_rational()
            .filter(|r| r.is_integer() && r.is_positive())
            .and_then(|r| r.to_integer().to_u64())
            .expect("degree is a positive integer");
        Character { degree, field, values }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    /// `chi^sigma_k` for a unit `k` modulo the group exponent.
    pub fn galois(&self, k: u64) -> Character {
        let c = self.field.conductor;
        if c == 1 {
            return self.clone();
        }
        let values = self.values.iter().map(|v| v.galois((k % c) as i64).expect("unit")).collect();
        Character { degree: self.degree, field: self.field.clone(), values }
    }

    /// Unit residues modulo the conductor giving the distinct Galois conjugates.
    pub fn conjugates(&self) -> Vec<u64> {
        let c = self.field.conductor;
        let stab = &self.field.stabilizer;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for k in units(c) {
            if seen.contains(&k) {
                continue;
            }
            out.push(k);
            for &s in stab {
                seen.insert((k * s) % c.max(1));
            }
        }
        out
    }

    pub fn kernel(&self, g: &PcGroup) -> Subgroup {
        let d = CycNum::from_int(self.values[0].order(), self.degree as i64);
        let m: Vec<u32> = g.elements().filter(|&x| self.values[g.class_of(x)] == d).collect();
        Subgroup::closure(g, &m)
    }
}

/// Pull a character of `G/N` back along the projection `G -> G/N`.
pub fn lift_through_quotient(g: &PcGroup, q: &PcGroup, proj: &[u32], chi: &Character) -> Character {
    let cl = g.classes();
    let values = (0..cl.len()).map(|c| chi.value(q.class_of(proj[cl.rep(c) as usize])).clone()).collect();
    Character { degree: chi.degree, field: chi.field.clone(), values }
}

/// The dual group of an abelian group.
pub fn irr_abelian(a: &PcGroup) -> Result<Vec<Character>> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    Ok(linear_characters(a).iter().map(|l| l.to_character(a)).collect())
}

/// Minimal left coset representatives of `h` in `G`, ascending.
pub fn left_transversal(g: &PcGroup, h: &Subgroup) -> Vec<u32> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order());
    for t in g.elements() {
        if covered[t as usize] {
            continue;
        }
        reps.push(t);
        for &x in h.members() {
            covered[g.mul(t, x) as usize] = true;
        }
    }
    reps
}

/// `psi^G(x) = sum over t of psi°(t^-1 x t)` with `t` running over a left transversal.
pub fn induce_linear(g: &PcGroup, psi: &LinearChar) -> Character {
    let h = psi.domain(g);
    let ts = left_transversal(g, &h);
    let e = psi.order();
    let cl = g.classes();
    let values = (0..cl.len())
        .map(|c| {
            let x = cl.rep(c);
            let mut counts = vec![0i64; e as usize];
            for &t in &ts {
                if let Some(k) = psi.exp_at(g.conj(x, t)) {
                    counts[k as usize] += 1;
                }
            }
            CycNum::from_root_counts(e, &counts)
        })
        .collect();
    Character::new(values)
}

/// Characters in `Irr(Z(G) | G')`, the parameters of the nonlinear characters of a VZ-group.
pub fn vz_parameters(g: &PcGroup) -> Vec<LinearChar> {
    let d = g.derived_subgroup();
    linear_characters_of(g, g.center())
        .into_iter()
        .filter(|mu| !mu.is_trivial_on(d))
        .collect()
}

/// `chi_mu`: `|G/Z|^(1/2) mu` on the center and zero elsewhere.
pub fn vz_character(g: &PcGroup, mu: &LinearChar) -> Character {
    let zord = g.center().order();
    let f = ((g.order() / zord) as f64).sqrt().round() as i64;
    let cl = g.classes();
    let values = (0..cl.len())
        .map(|c| match mu.value(cl.rep(c)) {
            Some(v) => v.scale(&Rational::from_integer(BigInt::from(f))),
            None => CycNum::zero(1),
        })
        .collect();
    Character::with_field(values, FieldDescriptor::cyclotomic(mu.order()))
}

/// Nonlinear irreducible characters of a VZ-group.
pub fn vz_nonlinear(g: &PcGroup) -> Result<Vec<Character>> {
    if !g.is_vz() {
        return Err(Error::NotVz);
    }
    Ok(vz_parameters(g).iter().map(|mu| vz_character(g, mu)).collect())
}

/// An abelian normal subgroup of index `p`, preferring `C_G(G')`.
pub fn abelian_maximal(g: &PcGroup) -> Option<Subgroup> {
    let p = g.prime() as usize;
    let c = g.centralizer_of(g.derived_subgroup());
    if c.order() * p == g.order() && c.is_abelian(g) {
        return Some(c);
    }
    maximal_subgroups(g, &g.whole()).into_iter().find(|h| h.is_abelian(g))
}

/// Linear characters of an abelian maximal subgroup `h` that are not
/// `G`-invariant, one per `G`-orbit.
pub fn noninvariant_orbit_reps(g: &PcGroup, h: &Subgroup) -> Vec<LinearChar> {
    let x = g.elements().find(|&x| !h.contains(x)).expect("h is proper");
    let p = g.prime() as usize;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for psi in linear_characters_of(g, h) {
        if seen.contains(&psi.vals) {
            continue;
        }
        let mut orbit = vec![psi.clone()];
        for _ in 1..p {
            let next = orbit.last().unwrap().conjugate(g, x);
            orbit.push(next);
        }
        if orbit[1] == psi {
            continue;
        }
        for o in orbit {
            seen.insert(o.vals);
        }
        out.push(psi);
    }
    out
}

fn compute_nonlinear(g: &PcGroup) -> Result<Vec<Character>> {
    if g.is_abelian() {
        return Ok(Vec::new());
    }
    if g.is_vz() {
        return vz_nonlinear(g);
    }
    let h = abelian_maximal(g).ok_or_else(|| {
        Error::UnsupportedStructure(format!(
            "{} is neither abelian, VZ, nor has an abelian maximal subgroup",
            g.label()
        ))
    })?;
    Ok(noninvariant_orbit_reps(g, &h).iter().map(|psi| induce_linear(g, psi)).collect())
}

fn compute_irr(g: &PcGroup) -> Result<Vec<Character>> {
    let mut out: Vec<Character> = linear_characters(g).iter().map(|l| l.to_character(g)).collect();
    out.extend(compute_nonlinear(g)?);
    Ok(out)
}

/// The complex irreducible characters of `G`: linear characters first, in a
/// fixed deterministic order. Computed once per group.
pub fn irr_characters(g: &PcGroup) -> Result<&[Character]> {
    g.irr_cache().get_or_init(|| compute_irr(g)).as_ref().map(|v| v.as_slice()).map_err(|e| e.clone())
}

/// The nonlinear members of `Irr(G)`, in the order of [`irr_characters`].
///
/// The linear characters are not materialized unless the full table is
/// already cached.
pub fn nonlinear_characters(g: &PcGroup) -> Result<Vec<Character>> {
    match g.irr_cache().get() {
        Some(r) => Ok(r.as_ref().map_err(|e| e.clone())?.iter().filter(|c| !c.is_linear()).cloned().collect()),
        None => compute_nonlinear(g),
    }
}

/// Galois classes of the linear characters as `(representative, conjugate
/// residues)`, ordered by first member in [`linear_characters`].
pub fn linear_galois_classes(g: &PcGroup) -> Vec<(LinearChar, Vec<u64>)> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for l in linear_characters(g) {
        if seen.contains(&l.vals) {
            continue;
        }
        for k in units(l.order) {
            seen.insert(l.pow(k.max(1)).vals);
        }
        let conjugates = units(FieldDescriptor::cyclotomic(l.order).conductor);
        out.push((l, conjugates));
    }
    out
}

fn class_sum(g: &PcGroup, f: impl Fn(usize) -> CycNum) -> CycNum {
    let cl = g.classes();
    let mut acc = CycNum::zero(1);
    for c in 0..cl.len() {
        let v = f(c);
        if !v.is_zero() {
            acc = acc.add_ref(&v.scale(&Rational::from_integer(BigInt::from(cl.size(c)))));
        }
    }
    acc.scale(&Rational::new(BigInt::one(), BigInt::from(g.order())))
}

/// `(1/|G|) sum chi(x) conj(phi(x))`.
pub fn inner_product(g: &PcGroup, chi: &Character, phi: &Character) -> Rational {
    class_sum(g, |c| {
        let (a, b) = (chi.value(c), phi.value(c));
        if a.is_zero() || b.is_zero() {
            CycNum::zero(1)
        } else {
            a.mul_ref(&b.conj())
        }
    })
    .to_rational()
    .expect("inner products of characters are rational")
}

/// Inner product of two rational class functions.
pub fn rational_inner_product(g: &PcGroup, a: &[Rational], b: &[Rational]) -> Rational {
    let cl = g.classes();
    let s: Rational = (0..cl.len())
        .map(|c| &a[c] * &b[c] * Rational::from_integer(BigInt::from(cl.size(c))))
        .fold(Rational::zero(), |x, y| x + y);
    s / Rational::from_integer(BigInt::from(g.order()))
}

/// Frobenius-Schur indicator `(1/|G|) sum chi(x^2)`.
pub fn fs_indicator(g: &PcGroup, chi: &Character) -> i32 {
    let cl = g.classes();
    let v = class_sum(g, |c| chi.value(g.class_of(g.mul(cl.rep(c), cl.rep(c)))).clone());
    v.to_rational()
        .and_then(|r| r.to_integer().to_i32().filter(|_| r.is_integer()))
        .expect("the indicator of an irreducible character is -1, 0 or 1")
}

/// Schur index over `Q`: 1 for odd `p`; for `p = 2`, 2 exactly when the
/// Frobenius-Schur indicator is -1.
pub fn schur_index(g: &PcGroup, chi: &Character) -> u64 {
    if g.prime() != 2 {
        return 1;
    }
    if fs_indicator(g, chi) == -1 {
        2
    } else {
        1
    }
}

/// One Galois conjugacy class of irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisClass {
    pub representative: Character,
    /// Unit residues `k` giving the distinct conjugates `chi^sigma_k`.
    pub conjugates: Vec<u64>,
    /// Positions of the conjugates in the input list, in the order of `conjugates`.
    pub members: Vec<usize>,
    pub field: FieldDescriptor,
}

impl GaloisClass {
    pub fn size(&self) -> usize {
        self.conjugates.len()
    }
}

/// Partition a Galois-closed list of characters into Galois classes,
/// ordered by first member.
pub fn galois_classes(chars: &[Character]) -> Result<Vec<GaloisClass>> {
    let index: HashMap<&Character, usize> = chars.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut done = vec![false; chars.len()];
    let mut out = Vec::new();
    for (i, chi) in chars.iter().enumerate() {
        if done[i] {
            continue;
        }
        let conjugates = chi.conjugates();
        let mut members = Vec::with_capacity(conjugates.len());
        for &k in &conjugates {
            let j = *index.get(&chi.galois(k)).ok_or(Error::NotClosed)?;
            done[j] = true;
            members.push(j);
        }
        out.push(GaloisClass {
            representative: chi.clone(),
            conjugates,
            members,
            field: chi.field.clone(),
        });
    }
    Ok(out)
}

/// Galois classes of `Irr(G)`.
pub fn irr_galois_classes(g: &PcGroup) -> Result<Vec<GaloisClass>> {
    galois_classes(irr_characters(g)?)
}

/// Number of Galois classes of nonlinear `chi_mu` of a VZ-group whose
/// parameter `mu` has order `d`.
pub fn vz_galois_class_count(g: &PcGroup, d: u64) -> Result<u64> {
    if !g.is_vz() {
        return Err(Error::NotVz);
    }
    let n = vz_parameters(g).iter().filter(|mu| mu.order() == d).count() as u64;
    Ok(n / euler_phi(d))
}

/// `Omega(chi) = m sum over sigma of chi^sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCharacter {
    pub field: FieldDescriptor,
    /// Unit residues giving the Galois conjugates that are summed.
    pub conjugates: Vec<u64>,
    pub schur_index: u64,
    pub values: Vec<Rational>,
}

impl RationalCharacter {
    pub fn degree(&self) -> u64 {
        self.values[0].to_integer().to_u64().expect("positive degree")
    }
}

/// Trace of a value from the character field down to `Q`.
fn field_trace(v: &CycNum, conjugates: &[u64]) -> Rational {
    let c = v.order();
    let mut acc = CycNum::zero(c);
    for &k in conjugates {
        acc = acc.add_ref(&v.galois((k % c.max(1)) as i64).expect("unit"));
    }
    acc.to_rational().expect("traces are rational")
}

pub fn omega(g: &PcGroup, chi: &Character) -> RationalCharacter {
    let m = schur_index(g, chi);
    let conjugates = chi.conjugates();
    let mr = Rational::from_integer(BigInt::from(m));
    let values = chi.values.iter().map(|v| field_trace(v, &conjugates) * &mr).collect();
    RationalCharacter { field: chi.field.clone(), conjugates, schur_index: m, values }
}

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// `Omega` of a linear character of `G`, from Ramanujan sums: the trace of
/// a primitive `t`-th root of unity from `Q(z_d)` is `phi(d)/phi(t) mu(t)`.
pub fn omega_linear(g: &PcGroup, l: &LinearChar) -> RationalCharacter {
    let d = l.order;
    let cl = g.classes();
    let values = (0..cl.len())
        .map(|c| {
            let v = l.exp_at(cl.rep(c)).expect("domain is G") as u64;
            let t = d / v.gcd(&d);
            Rational::from_integer(BigInt::from(euler_phi(d) / euler_phi(t)) * BigInt::from(mobius(t)))
        })
        .collect();
    let field = FieldDescriptor::cyclotomic(d);
    RationalCharacter { conjugates: units(field.conductor), field, schur_index: 1, values }
}

/// Rational class functions `sum over sigma of chi^sigma` without the Schur factor.
pub fn galois_sum(chi: &Character) -> Vec<Rational> {
    let conjugates = chi.conjugates();
    chi.values.iter().map(|v| field_trace(v, &conjugates)).collect()
}
