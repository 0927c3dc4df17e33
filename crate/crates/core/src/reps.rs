//! Irreducible rational matrix representations built from required pairs.
//!
//! A linear character `psi` of order `n` on `H` is realized over `Q` by
//! sending `h` to `C^k` when `psi(h) = z_n^k`, with `C` the companion matrix
//! of the `n`-th cyclotomic polynomial. Inducing that block representation
//! to `G` gives a representation affording `Omega(chi)` whenever `(H, psi)`
//! is a required pair for `chi`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chars::{
    galois_classes, galois_sum, left_transversal, linear_characters_of, linear_galois_classes, nonlinear_characters,
    omega, omega_linear, rational_inner_product, schur_index, vz_character, Character, LinearChar,
    RationalCharacter,
};
use crate::cyclotomic::{cyclotomic_poly, euler_phi, CycNum, Rational};
use crate::error::{Error, Result};
use crate::group::{quotient, subgroups_of_index, subgroups_of_index_containing, PcGroup, Subgroup};

/// An exact rational matrix, stored as sorted sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        RationalMatrix { rows: n, cols: n, data }
    }

    /// Build from dense rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        RationalMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let r: Vec<Vec<Rational>> =
            rows.iter().map(|row| row.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect()).collect();
        Self::from_rows(&r)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => row.insert(k, (j, v)),
        }
    }

    /// Nonzero entries of row `i` as `(column, value)`.
    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| {
                let mut r = vec![Rational::zero(); self.cols];
                for (j, v) in &self.data[i] {
                    r[*j] = v.clone();
                }
                r
            })
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        RationalMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> RationalMatrix {
        let mut base = self.clone();
        let mut acc = RationalMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn is_identity(&self) -> bool {
        *self == RationalMatrix::identity(self.rows)
    }

    /// Copy `block` into the position whose top-left corner is `(r, c)`.
    fn place(&mut self, r: usize, c: usize, block: &RationalMatrix) {
        for i in 0..block.rows {
            for (j, v) in &block.data[i] {
                self.data[r + i].push((c + j, v.clone()));
            }
        }
    }

    fn sort_rows(&mut self) {
        for row in &mut self.data {
            row.sort_by_key(|e| e.0);
        }
    }
}

/// Companion matrix of the `n`-th cyclotomic polynomial: ones on the
/// superdiagonal and the negated coefficients in the last row.
pub fn companion_matrix(n: u64) -> RationalMatrix {
    let c = cyclotomic_poly(n);
    let d = c.len() - 1;
    let mut m = RationalMatrix::zeros(d, d);
    for i in 0..d - 1 {
        m.set(i, i + 1, Rational::one());
    }
    for (j, cj) in c.iter().take(d).enumerate() {
        m.set(d - 1, j, Rational::from_integer(-cj));
    }
    m
}

/// The rational representation of a subgroup realizing a linear character.
#[derive(Clone, Debug)]
pub struct SubgroupRep {
    pub subgroup: Subgroup,
    pub psi: LinearChar,
    /// Smallest element with `psi(y) = z_n`; it maps to the companion matrix.
    pub coset_generator: u32,
    /// `powers[k] = C^k` for `k < n`.
    powers: Vec<RationalMatrix>,
}

impl SubgroupRep {
    pub fn degree(&self) -> usize {
        self.powers[0].nrows()
    }

    /// The image of `h`, or `None` off the subgroup.
    pub fn image(&self, h: u32) -> Option<&RationalMatrix> {
        self.psi.exp_at(h).map(|k| &self.powers[k as usize])
    }
}

/// Realize a linear character over `Q` by powers of a cyclotomic companion matrix.
pub fn companion_rep(g: &PcGroup, psi: &LinearChar) -> SubgroupRep {
    let n = psi.order();
    let c = companion_matrix(n);
    let mut powers = vec![RationalMatrix::identity(c.nrows())];
    for k in 1..n as usize {
        let next = powers[k - 1].mul(&c);
        powers.push(next);
    }
    let target = if n == 1 { 0 } else { 1 };
    let y = g.elements().find(|&x| psi.exp_at(x) == Some(target)).expect("psi attains z_n");
    SubgroupRep { subgroup: psi.domain(g), psi: psi.clone(), coset_generator: y, powers }
}

/// Minimal left coset representatives and the coset index of every element.
fn cosets(g: &PcGroup, h: &Subgroup) -> (Vec<u32>, Vec<usize>) {
    let ts = left_transversal(g, h);
    let mut idx = vec![0usize; g.order()];
    for (i, &t) in ts.iter().enumerate() {
        for &x in h.members() {
            idx[g.mul(t, x) as usize] = i;
        }
    }
    (ts, idx)
}

/// Images of the pc generators of `G` under the induced representation.
///
/// Block `(i, j)` of the image of `x` is `Psi°(t_i^-1 x t_j)` for the
/// minimal left coset representatives `t_i`. Returns the transversal too.
pub fn induce_rep(g: &PcGroup, rep: &SubgroupRep) -> (Vec<u32>, Vec<RationalMatrix>) {
    let (ts, idx) = cosets(g, &rep.subgroup);
    let b = rep.degree();
    let dim = ts.len() * b;
    let images = g
        .gens()
        .into_iter()
        .map(|x| {
            let mut m = RationalMatrix::zeros(dim, dim);
            for (j, &tj) in ts.iter().enumerate() {
                let y = g.mul(x, tj);
                let i = idx[y as usize];
                let h = g.mul(g.inv(ts[i]), y);
                m.place(i * b, j * b, rep.image(h).expect("t_i^-1 x t_j lies in H"));
            }
            m.sort_rows();
            m
        })
        .collect();
    (ts, images)
}

/// How `Q(psi)` relates to `Q(chi)` in a required pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldRelation {
    FieldEqual,
    FieldIndex2,
}

/// The shape of the faithful quotient attached to a pair of a 2-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientType {
    Cyclic,
    Quaternion,
    Dihedral,
    Semidihedral,
}

/// The character of a required pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairCharacter {
    Linear(LinearChar),
    /// A nonlinear character of `H = G` with a dihedral or semidihedral quotient.
    Nonlinear(Character),
}

/// A pair `(H, psi)` with `psi^G = chi` and the field relation the Schur
/// index demands. `realization` is the linear pair actually induced.
#[derive(Clone, Debug)]
pub struct RequiredPair {
    pub subgroup: Subgroup,
    pub psi: PairCharacter,
    pub relation: FieldRelation,
    pub quotient_type: QuotientType,
    pub realization: LinearChar,
}

impl RequiredPair {
    fn linear(g: &PcGroup, psi: LinearChar, relation: FieldRelation, quotient_type: QuotientType) -> Self {
        RequiredPair {
            subgroup: psi.domain(g),
            psi: PairCharacter::Linear(psi.clone()),
            relation,
            quotient_type,
            realization: psi,
        }
    }
}

/// Whether `psi^G = chi`, comparing class by class.
fn induces_to(g: &PcGroup, psi: &LinearChar, ts: &[u32], chi: &Character) -> bool {
    let e = psi.order();
    let cl = g.classes();
    (0..cl.len()).all(|c| {
        let x = cl.rep(c);
        let mut counts = vec![0i64; e as usize];
        for &t in ts {
            if let Some(k) = psi.exp_at(g.conj(x, t)) {
                counts[k as usize] += 1;
            }
        }
        CycNum::from_root_counts(e, &counts).sub_ref(chi.value(c)).is_zero()
    })
}

/// The first linear character of `h` inducing `chi` whose field has degree `want`.
fn pair_on(g: &PcGroup, h: &Subgroup, chi: &Character, want: u64) -> Option<LinearChar> {
    let ts = left_transversal(g, h);
    linear_characters_of(g, h)
        .into_iter()
        .find(|psi| euler_phi(psi.order()) == want && induces_to(g, psi, &ts, chi))
}

const DFS_BUDGET: usize = 20_000;

/// Depth-first search over abelian overgroups of the center, adding the
/// smallest centralizing element first.
fn vz_abelian_search(g: &PcGroup, chi: &Character, want: u64) -> Option<LinearChar> {
    let target = g.order() / chi.degree() as usize;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![g.center().clone()];
    while let Some(h) = stack.pop() {
        if seen.len() > DFS_BUDGET {
            return None;
        }
        if h.order() == target {
            if let Some(psi) = pair_on(g, &h, chi, want) {
                return Some(psi);
            }
            continue;
        }
        let mut children = Vec::new();
        for x in g.elements() {
            if h.contains(x) || !h.gens().iter().all(|&a| g.mul(a, x) == g.mul(x, a)) {
                continue;
            }
            let k = h.join(g, x);
            if k.order() <= target && target.is_multiple_of(k.order()) && seen.insert(k.members().to_vec()) {
                children.push(k);
            }
        }
        stack.extend(children.into_iter().rev());
    }
    None
}

fn check_nonlinear(chi: &Character) -> Result<()> {
    if chi.is_linear() {
        return Err(Error::NotApplicable("required pairs are for nonlinear characters".into()));
    }
    Ok(())
}

/// Search for a linear required pair: subgroups of index `chi(1)` (containing
/// the center for VZ-groups), then their linear characters in order.
fn linear_pair(g: &PcGroup, chi: &Character, m: u64) -> Option<LinearChar> {
    let want = chi.field().degree() * m;
    let d = chi.degree() as usize;
    if g.is_vz() {
        if let Some(psi) = vz_abelian_search(g, chi, want) {
            return Some(psi);
        }
        return subgroups_of_index_containing(g, d, g.center()).iter().find_map(|h| pair_on(g, h, chi, want));
    }
    subgroups_of_index(g, d).iter().find_map(|h| pair_on(g, h, chi, want))
}

fn relation_for(m: u64) -> FieldRelation {
    if m == 1 {
        FieldRelation::FieldEqual
    } else {
        FieldRelation::FieldIndex2
    }
}

/// A required pair for a nonlinear irreducible character of an odd p-group.
pub fn required_pair_search(g: &PcGroup, chi: &Character) -> Result<RequiredPair> {
    check_nonlinear(chi)?;
    if g.prime() == 2 {
        return required_pair_2group(g, chi);
    }
    let m = schur_index(g, chi);
    let psi = linear_pair(g, chi, m)
        .ok_or_else(|| Error::NoPairFound(format!("{} character of degree {}", g.label(), chi.degree())))?;
    Ok(RequiredPair::linear(g, psi, relation_for(m), QuotientType::Cyclic))
}

fn is_real(chi: &Character) -> bool {
    chi.values().iter().all(|v| v.conj().sub_ref(v).is_zero())
}

/// A required pair for a nonlinear irreducible character of a 2-group.
///
/// When no linear pair exists the character has a dihedral or semidihedral
/// faithful quotient `<a, b>`, realized by inducing `lambda` from
/// `<a^(2^(n-1)), b, ker chi>` with `lambda(a^(2^(n-1))) = -1`, `lambda(b) = 1`.
pub fn required_pair_2group(g: &PcGroup, chi: &Character) -> Result<RequiredPair> {
    check_nonlinear(chi)?;
    if g.prime() != 2 {
        return Err(Error::NotApplicable("required_pair_2group needs a 2-group".into()));
    }
    let m = schur_index(g, chi);
    let ker = chi.kernel(g);
    let qorder = g.order() / ker.order();
    if let Some(psi) = linear_pair(g, chi, m) {
        let qt = if m == 2 {
            QuotientType::Quaternion
        } else if qorder == 8 {
            QuotientType::Dihedral
        } else {
            QuotientType::Cyclic
        };
        return Ok(RequiredPair::linear(g, psi, relation_for(m), qt));
    }
    let fail = || Error::NoPairFound(format!("{} character of degree {}", g.label(), chi.degree()));
    if m != 1 {
        return Err(fail());
    }
    let (q, proj) = quotient(g, &ker)?;
    let half = (q.order() / 2) as u32;
    let a_bar = q.elements().find(|&x| q.element_order(x) == half).ok_or_else(fail)?;
    let cyc = Subgroup::closure(&q, &[a_bar]);
    let b_bar = q.elements().find(|&x| !cyc.contains(x) && q.element_order(x) == 2).ok_or_else(fail)?;
    let lift = |t: u32| g.elements().find(|&x| proj[x as usize] == t).expect("projection is onto");
    let (a, b) = (lift(a_bar), lift(b_bar));
    let mut gens = vec![g.pow(a, (half / 2) as i64), b];
    gens.extend_from_slice(ker.gens());
    let mut exps = vec![1u64, 0];
    exps.resize(gens.len(), 0);
    let lambda = LinearChar::from_generators(g, &gens, 2, &exps)?;
    let sum = galois_sum(chi);
    let induced = crate::chars::induce_linear(g, &lambda);
    let agrees = induced
        .values()
        .iter()
        .zip(&sum)
        .all(|(v, s)| v.sub_ref(&CycNum::from_rational(1, s)).is_zero());
    if !agrees {
        return Err(fail());
    }
    let qt = if is_real(chi) { QuotientType::Dihedral } else { QuotientType::Semidihedral };
    Ok(RequiredPair {
        subgroup: g.whole(),
        psi: PairCharacter::Nonlinear(chi.clone()),
        relation: FieldRelation::FieldEqual,
        quotient_type: qt,
        realization: lambda,
    })
}

/// The tabulated pair `(H, psi_mu)` for the class-2 groups of order `p^3`,
/// `p^4` and 16, where `mu` is a character of the center nontrivial on `G'`.
pub fn table_pair(g: &PcGroup, mu: &LinearChar) -> Result<RequiredPair> {
    let family = g.family().unwrap_or("").to_string();
    let e = 4 * g.exponent();
    let z = |x: u32| -> u64 {
        let k = mu.exp_at(x).expect("mu is defined on the center") as u64;
        k * (e / mu.order())
    };
    let sqrt = |x: u32| -> u64 { z(x) / 2 };
    let gen = |i: usize| g.gen(i - 1);
    let (gens, exps): (Vec<u32>, Vec<u64>) = match family.as_str() {
        "phi2_21" | "phi2_111" => (vec![gen(2), gen(3)], vec![0, z(gen(3))]),
        "phi2_211a" | "phi2_211c" => (vec![gen(3), gen(2), gen(4)], vec![z(gen(3)), 0, z(gen(4))]),
        "phi2_1111" => (vec![gen(1), gen(3), gen(4)], vec![0, z(gen(3)), z(gen(4))]),
        "phi2_31" | "g2" => (vec![gen(3), gen(2)], vec![z(gen(3)), 0]),
        "phi2_211b" => (vec![gen(2), gen(3)], vec![0, z(gen(3))]),
        "phi2_22" => {
            let p = g.prime() as u64;
            let unit = e / p;
            let (j, l) = (z(gen(3)) / unit % p, z(gen(4)) / unit % p);
            let jinv = (1..p).find(|&t| t * j % p == 1).ok_or_else(|| {
                Error::NotApplicable("mu must be nontrivial on the derived subgroup".into())
            })?;
            let i = l * jinv % p;
            let x = g.mul(g.pow(gen(1), -(i as i64)), gen(2));
            (vec![x, gen(3)], vec![0, z(gen(3))])
        }
        "g1" => (vec![gen(1), gen(2)], vec![z(gen(1)), 0]),
        "g3" => (vec![gen(4), gen(2), gen(3)], vec![z(gen(4)), 0, z(gen(3))]),
        "g4" => (vec![gen(3), gen(2), gen(4)], vec![z(gen(3)), 0, z(gen(4))]),
        "g5" => (vec![gen(3), gen(2)], vec![z(gen(3)), sqrt(gen(4))]),
        "g6" => (vec![gen(1), gen(3)], vec![sqrt(gen(4)), z(gen(3))]),
        _ => return Err(Error::UnknownFamily(format!("no tabulated pair for `{family}`"))),
    };
    let psi = LinearChar::from_generators(g, &gens, e, &exps)?;
    let chi = vz_character(g, mu);
    let m = schur_index(g, &chi);
    let rel = if euler_phi(psi.order()) == chi.field().degree() {
        FieldRelation::FieldEqual
    } else {
        FieldRelation::FieldIndex2
    };
    let qt = match (g.prime(), m) {
        (2, 2) => QuotientType::Quaternion,
        (2, _) if g.order() / chi.kernel(g).order() == 8 => QuotientType::Dihedral,
        _ => QuotientType::Cyclic,
    };
    Ok(RequiredPair::linear(g, psi, rel, qt))
}

/// The pair's linear character induces `chi` (checked classwise).
pub fn pair_induces(g: &PcGroup, pair: &RequiredPair, chi: &Character) -> bool {
    match &pair.psi {
        PairCharacter::Linear(psi) => induces_to(g, psi, &left_transversal(g, &pair.subgroup), chi),
        PairCharacter::Nonlinear(c) => c == chi,
    }
}

/// An irreducible rational representation given by generator images.
#[derive(Clone, Debug)]
pub struct RationalRep {
    pub degree: usize,
    /// One image per pc generator of `G`.
    pub images: Vec<RationalMatrix>,
    pub afforded: RationalCharacter,
    /// The linear character whose companion realization was induced.
    pub source: LinearChar,
    pub coset_generator: u32,
    pub transversal: Vec<u32>,
    /// The required pair, for nonlinear characters.
    pub pair: Option<RequiredPair>,
}

impl RationalRep {
    /// The image of an arbitrary element, collected from its normal form.
    pub fn image_of(&self, g: &PcGroup, x: u32) -> RationalMatrix {
        let mut acc = RationalMatrix::identity(self.degree);
        for (i, e) in g.exps(x).into_iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.images[i].pow(e as u64));
            }
        }
        acc
    }

    /// Traces on the class representatives.
    pub fn trace_character(&self, g: &PcGroup) -> Vec<Rational> {
        let p = g.prime() as u64;
        let powers: Vec<Vec<RationalMatrix>> = self
            .images
            .iter()
            .map(|m| {
                let mut v = vec![RationalMatrix::identity(self.degree)];
                for _ in 1..p {
                    let next = v.last().unwrap().mul(m);
                    v.push(next);
                }
                v
            })
            .collect();
        let cl = g.classes();
        (0..cl.len())
            .map(|c| {
                let mut acc: Option<RationalMatrix> = None;
                for (i, e) in g.exps(cl.rep(c)).into_iter().enumerate() {
                    if e > 0 {
                        let m = &powers[i][e as usize];
                        acc = Some(match acc {
                            None => m.clone(),
                            Some(a) => a.mul(m),
                        });
                    }
                }
                acc.map_or_else(|| Rational::from_integer(BigInt::from(self.degree)), |m| m.trace())
            })
            .collect()
    }
}

/// Build the representation induced from a linear character of a subgroup.
pub fn rep_from_linear(g: &PcGroup, psi: &LinearChar, afforded: RationalCharacter, pair: Option<RequiredPair>) -> RationalRep {
    let sub = companion_rep(g, psi);
    let (transversal, images) = induce_rep(g, &sub);
    RationalRep {
        degree: images.first().map_or(sub.degree() * transversal.len(), |m| m.nrows()),
        images,
        afforded,
        source: psi.clone(),
        coset_generator: sub.coset_generator,
        transversal,
        pair,
    }
}

/// The irreducible rational representation attached to an irreducible character.
///
/// `linear` must be the compact form of `chi` when `chi` is linear.
pub fn rational_rep_for(g: &PcGroup, chi: &Character, linear: Option<&LinearChar>) -> Result<RationalRep> {
    let afforded = omega(g, chi);
    if let Some(l) = linear {
        return Ok(rep_from_linear(g, l, afforded, None));
    }
    let pair = if g.prime() == 2 { required_pair_2group(g, chi)? } else { required_pair_search(g, chi)? };
    let psi = pair.realization.clone();
    Ok(rep_from_linear(g, &psi, afforded, Some(pair)))
}

/// What one irreducible rational representation is built from.
#[derive(Clone, Debug)]
pub enum ClassSource {
    Linear(LinearChar),
    Nonlinear(Character),
}

/// One source per Galois class of `Irr(G)`, in the order of the Galois
/// classes. Linear classes stay in compact form.
pub fn rational_class_sources(g: &PcGroup) -> Result<Vec<ClassSource>> {
    let mut out: Vec<ClassSource> =
        linear_galois_classes(g).into_iter().map(|(l, _)| ClassSource::Linear(l)).collect();
    for gc in galois_classes(&nonlinear_characters(g)?)? {
        out.push(ClassSource::Nonlinear(gc.representative));
    }
    Ok(out)
}

/// The irreducible rational representation of one Galois class.
pub fn rational_rep_of(g: &PcGroup, source: &ClassSource) -> Result<RationalRep> {
    match source {
        ClassSource::Linear(l) => Ok(rep_from_linear(g, l, omega_linear(g, l), None)),
        ClassSource::Nonlinear(chi) => rational_rep_for(g, chi, None),
    }
}

/// One irreducible rational representation per Galois class of `Irr(G)`,
/// in the order of the Galois classes.
pub fn rational_irreducibles(g: &PcGroup) -> Result<Vec<RationalRep>> {
    rational_class_sources(g)?.iter().map(|s| rational_rep_of(g, s)).collect()
}

/// Outcome of [`verify_rep`]; each field pinpoints the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// The first violated defining relation, if any.
    pub relation_failure: Option<String>,
    /// The first class whose trace differs from the afforded character.
    pub trace_failure: Option<usize>,
    pub norm: Rational,
    pub expected_norm: Rational,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.relation_failure.is_none() && self.trace_failure.is_none() && self.norm == self.expected_norm
    }
}

fn word_image(images: &[RationalMatrix], word: &[u32], dim: usize) -> RationalMatrix {
    let mut acc = RationalMatrix::identity(dim);
    for (k, &e) in word.iter().enumerate() {
        if e > 0 {
            acc = acc.mul(&images[k].pow(e as u64));
        }
    }
    acc
}

/// First violated power or commutator relation of the presentation.
pub fn check_relations(g: &PcGroup, images: &[RationalMatrix]) -> Option<String> {
    let pres = g.presentation();
    let p = g.prime() as u64;
    let n = images.len();
    if n != pres.ngens {
        return Some(format!("expected {} generator images, found {n}", pres.ngens));
    }
    let dim = images.first().map_or(0, |m| m.nrows());
    if images.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
        return Some("images are not square of a common size".into());
    }
    for i in 0..n {
        if images[i].pow(p) != word_image(images, &pres.power[i], dim) {
            return Some(format!("power relation of g{}", i + 1));
        }
    }
    for j in 0..n {
        for i in 0..j {
            let lhs = images[j].mul(&images[i]);
            let rhs = images[i].mul(&images[j]).mul(&word_image(images, &pres.comm[j][i], dim));
            if lhs != rhs {
                return Some(format!("commutator relation [g{}, g{}]", j + 1, i + 1));
            }
        }
    }
    None
}

/// Check relations, traces against `Omega(chi)`, and the norm `m^2 [Q(chi):Q]`.
pub fn verify_rep(g: &PcGroup, rep: &RationalRep) -> VerifyReport {
    let relation_failure = check_relations(g, &rep.images);
    let (trace_failure, norm) = if relation_failure.is_none() {
        let tr = rep.trace_character(g);
        let bad = tr.iter().zip(&rep.afforded.values).position(|(a, b)| a != b);
        (bad, rational_inner_product(g, &tr, &tr))
    } else {
        (None, Rational::zero())
    };
    let m = rep.afforded.schur_index;
    let expected = Rational::from_integer(BigInt::from(m * m * rep.afforded.field.degree()));
    VerifyReport { relation_failure, trace_failure, norm, expected_norm: expected }
}
