//! Finite p-groups given by consistent power-commutator presentations.
//!
//! Elements are normal forms `g1^e1 ... gn^en` with `0 <= ei < p`, indexed by
//! `sum ei * p^(n-i)` so that `g1` is the most significant digit. The commutator
//! convention is `[a, b] = a^-1 b^-1 a b`.

mod parse;
mod series;
mod subgroup;

use std::collections::VecDeque;
use std::sync::OnceLock;

pub use parse::{format_presentation, parse_presentation};
pub use series::{quotient, subgroup_as_group, PcSeq};
pub use subgroup::{
    maximal_subgroups, subgroups_of_index, subgroups_of_index_containing, Subgroup,
};

use crate::error::{Error, Result};

/// Default cap on the group order.
pub const DEFAULT_ORDER_CAP: u64 = 4096;

/// Exponent vector of a word in normal form.
pub type Word = Vec<u32>;

/// A power-commutator presentation on generators `g1..gn` (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    pub prime: u32,
    pub ngens: usize,
    /// `power[i]` is the normal-form word equal to `g_i^p`.
    pub power: Vec<Word>,
    /// `comm[j][i]` for `i < j` is the normal-form word equal to `[g_j, g_i]`.
    pub comm: Vec<Vec<Word>>,
}

impl PcPresentation {
    /// Presentation of the elementary abelian group of rank `ngens`.
    pub fn new(prime: u32, ngens: usize) -> Self {
        PcPresentation {
            prime,
            ngens,
            power: vec![vec![0; ngens]; ngens],
            comm: (0..ngens).map(|j| vec![vec![0; ngens]; j]).collect(),
        }
    }

    /// Normal-form word from 1-based `(generator, exponent)` factors.
    pub fn word(&self, factors: &[(usize, u32)]) -> Word {
        let mut w = vec![0; self.ngens];
        for &(g, e) in factors {
            w[g - 1] = e;
        }
        w
    }

    /// Set `g_i^p` (1-based index).
    pub fn set_power(&mut self, i: usize, factors: &[(usize, u32)]) -> &mut Self {
        self.power[i - 1] = self.word(factors);
        self
    }

    /// Set `[g_j, g_i]` for `j > i` (1-based indices).
    pub fn set_comm(&mut self, j: usize, i: usize, factors: &[(usize, u32)]) -> &mut Self {
        assert!(j > i, "commutator relations are stated for j > i");
        self.comm[j - 1][i - 1] = self.word(factors);
        self
    }

    fn validate(&self) -> Result<()> {
        let p = self.prime;
        if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::InconsistentPresentation(format!("{p} is not prime")));
        }
        let bad = |msg: String| Err(Error::InconsistentPresentation(msg));
        if self.power.len() != self.ngens || self.comm.len() != self.ngens {
            return bad("relation tables do not match ngens".into());
        }
        for (i, w) in self.power.iter().enumerate() {
            if w.len() != self.ngens || w.iter().any(|&e| e >= p) {
                return bad(format!("power word of g{} is not a normal form", i + 1));
            }
            if w[..=i].iter().any(|&e| e != 0) {
                return bad(format!("power word of g{} mentions g1..g{}", i + 1, i + 1));
            }
        }
        for (j, row) in self.comm.iter().enumerate() {
            if row.len() != j {
                return bad("commutator table has the wrong shape".into());
            }
            for (i, w) in row.iter().enumerate() {
                if w.len() != self.ngens || w.iter().any(|&e| e >= p) {
                    return bad(format!("[g{}, g{}] is not a normal form", j + 1, i + 1));
                }
                if w[..=j].iter().any(|&e| e != 0) {
                    return bad(format!("[g{}, g{}] mentions g1..g{}", j + 1, i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

/// Conjugacy class data, fixed at first use.
#[derive(Clone, Debug)]
pub struct Classes {
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Members of each class in increasing index order; classes are ordered
    /// by their first (representative) element.
    pub members: Vec<Vec<u32>>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rep(&self, c: usize) -> u32 {
        self.members[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }
}

/// A finite p-group with materialized multiplication.
pub struct PcGroup {
    pres: PcPresentation,
    order: usize,
    /// `mul[x * order + y]` is the index of `x * y`.
    mul: Vec<u16>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    family: Option<String>,
    label: String,
    classes: OnceLock<Classes>,
    center: OnceLock<Subgroup>,
    derived: OnceLock<Subgroup>,
    irr: OnceLock<Result<Vec<crate::chars::Character>>>,
}

impl std::fmt::Debug for PcGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PcGroup({}, order {})", self.label, self.order)
    }
}

/// Build a group with the default order cap.
pub fn build_group(pres: PcPresentation) -> Result<PcGroup> {
    build_group_capped(pres, DEFAULT_ORDER_CAP)
}

/// Build a group, rejecting orders above `cap`.
pub fn build_group_capped(pres: PcPresentation, cap: u64) -> Result<PcGroup> {
    pres.validate()?;
    let p = pres.prime as u64;
    let n = pres.ngens;
    let order = p.checked_pow(n as u32).unwrap_or(u64::MAX);
    let hard_cap = cap.min(65536);
    if order > hard_cap {
        return Err(Error::UnsupportedOrder { order, cap: hard_cap });
    }
    let order = order as usize;
    let p = p as usize;
    let place: Vec<usize> = (0..n).map(|i| p.pow((n - 1 - i) as u32)).collect();
    let digit = |x: usize, i: usize| (x / place[i]) % p;

    // right[k][u] = u * g_k, filled from the last generator up; computing row k
    // only needs the rows of later generators
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); n];
    for k in (0..n).rev() {
        let mut row = vec![0u32; order];
        for (u, slot) in row.iter_mut().enumerate() {
            let ek = digit(u, k);
            let prefix = u - u % place[k];
            let mut v = if ek + 1 == p { prefix - ek * place[k] } else { prefix + place[k] };
            if ek + 1 == p {
                v = apply_word(&right, v, &pres.power[k]);
            }
            for j in k + 1..n {
                for _ in 0..digit(u, j) {
                    v = right[j][v] as usize;
                    v = apply_word(&right, v, &pres.comm[j][k]);
                }
            }
            *slot = v as u32;
        }
        right[k] = row;
    }

    let mut mul = vec![0u16; order * order];
    for x in 0..order {
        mul[x * order] = x as u16;
    }
    for y in 1..order {
        let k = (0..n).rev().find(|&i| digit(y, i) != 0).unwrap();
        let y0 = y - place[k];
        for x in 0..order {
            let xy0 = mul[x * order + y0] as usize;
            mul[x * order + y] = right[k][xy0] as u16;
        }
    }

    let mut g = PcGroup {
        pres,
        order,
        mul,
        inv: Vec::new(),
        elt_order: Vec::new(),
        family: None,
        label: String::new(),
        classes: OnceLock::new(),
        center: OnceLock::new(),
        derived: OnceLock::new(),
        irr: OnceLock::new(),
    };
    g.check_consistency()?;
    let mut inv = vec![0u32; order];
    let mut elt_order = vec![1u32; order];
    for x in 0..order as u32 {
        let mut prev = 0u32;
        let mut cur = x;
        let mut k = 1;
        while cur != 0 {
            prev = cur;
            cur = g.mul(cur, x);
            k += 1;
        }
        elt_order[x as usize] = if x == 0 { 1 } else { k };
        inv[x as usize] = if x == 0 { 0 } else { prev };
    }
    g.inv = inv;
    g.elt_order = elt_order;
    Ok(g)
}

fn apply_word(right: &[Vec<u32>], mut v: usize, w: &[u32]) -> usize {
    for (j, &e) in w.iter().enumerate() {
        for _ in 0..e {
            v = right[j][v] as usize;
        }
    }
    v
}

impl PcGroup {
    /// Collection-consistency test words: overlaps `g_k g_j g_i`,
    /// `g_j^p g_i`, `g_j g_i^p` and `g_i^p g_i`.
    fn check_consistency(&self) -> Result<()> {
        let n = self.pres.ngens;
        let p = self.pres.prime;
        let gen: Vec<u32> = (0..n).map(|i| self.gen(i)).collect();
        let fail = |what: String| Err(Error::InconsistentPresentation(what));
        let powm = |x: u32, e: u32| (0..e).fold(0u32, |acc, _| self.mul(acc, x));
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let (a, b, c) = (gen[k], gen[j], gen[i]);
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("overlap g{} g{} g{}", k + 1, j + 1, i + 1));
                    }
                }
            }
        }
        for j in 0..n {
            let gj = gen[j];
            let pj = powm(gj, p);
            if self.mul(pj, gj) != self.mul(gj, pj) {
                return fail(format!("overlap g{}^{} g{}", j + 1, p + 1, j + 1));
            }
            for i in 0..j {
                let gi = gen[i];
                let lhs = self.mul(pj, gi);
                let rhs = self.mul(powm(gj, p - 1), self.mul(gj, gi));
                if lhs != rhs {
                    return fail(format!("overlap g{}^{} g{}", j + 1, p, i + 1));
                }
                let pi = powm(gi, p);
                let lhs = self.mul(gj, pi);
                let rhs = self.mul(self.mul(gj, gi), powm(gi, p - 1));
                if lhs != rhs {
                    return fail(format!("overlap g{} g{}^{}", j + 1, i + 1, p));
                }
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn prime(&self) -> u32 {
        self.pres.prime
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Catalog family tag, if the group came from the built-in catalog.
    pub fn family(&self) -> Option<&str> {
        self.family.as_deref()
    }

    pub fn set_family(&mut self, tag: &str) {
        self.family = Some(tag.to_string());
    }

    /// Human-readable identifier used in reports.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: &str) {
        self.label = label.to_string();
    }

    /// Index of the generator `g_{i+1}`.
    pub fn gen(&self, i: usize) -> u32 {
        (self.pres.prime as usize).pow((self.pres.ngens - 1 - i) as u32) as u32
    }

    pub fn gens(&self) -> Vec<u32> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize] as u32
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn pow(&self, x: u32, e: i64) -> u32 {
        let o = self.elt_order[x as usize] as i64;
        let e = e.rem_euclid(o);
        (0..e).fold(0u32, |acc, _| self.mul(acc, x))
    }

    /// `x^-1 y^-1 x y`.
    pub fn comm(&self, x: u32, y: u32) -> u32 {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, x: u32) -> u32 {
        self.elt_order[x as usize]
    }

    /// Normal-form exponents of an element.
    pub fn exps(&self, x: u32) -> Vec<u32> {
        let p = self.pres.prime;
        let n = self.ngens();
        let mut e = vec![0u32; n];
        let mut v = x;
        for i in (0..n).rev() {
            e[i] = v % p;
            v /= p;
        }
        e
    }

    /// Element index of a normal form.
    pub fn from_exps(&self, e: &[u32]) -> u32 {
        e.iter().fold(0u32, |acc, &d| acc * self.pres.prime + d)
    }

    /// Product of a word given as 1-based `(generator, exponent)` factors,
    /// exponents taken modulo the generator order.
    pub fn eval(&self, factors: &[(usize, i64)]) -> u32 {
        factors.iter().fold(0u32, |acc, &(g, e)| self.mul(acc, self.pow(self.gen(g - 1), e)))
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order as u32
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.gens();
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elt_order.iter().copied().max().unwrap_or(1) as u64
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let gens = self.gens();
            let mut class_of = vec![u32::MAX; self.order];
            let mut members = Vec::new();
            for x in 0..self.order as u32 {
                if class_of[x as usize] != u32::MAX {
                    continue;
                }
                let c = members.len() as u32;
                let mut cls = vec![x];
                class_of[x as usize] = c;
                let mut q = VecDeque::from([x]);
                while let Some(y) = q.pop_front() {
                    for &g in &gens {
                        let z = self.conj(y, g);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = c;
                            cls.push(z);
                            q.push_back(z);
                        }
                    }
                }
                cls.sort_unstable();
                members.push(cls);
            }
            Classes { class_of, members }
        })
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.classes().class_of[x as usize] as usize
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self, (0..self.order as u32).collect(), self.gens())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_members(self, vec![0], Vec::new())
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| {
            let g = self.gens();
            let m: Vec<u32> = self
                .elements()
                .filter(|&x| g.iter().all(|&a| self.mul(x, a) == self.mul(a, x)))
                .collect();
            Subgroup::closure(self, &m)
        })
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived.get_or_init(|| {
            let g = self.gens();
            let mut comms = Vec::new();
            for (j, &a) in g.iter().enumerate() {
                for &b in &g[..j] {
                    comms.push(self.comm(a, b));
                }
            }
            Subgroup::normal_closure(self, &comms)
        })
    }

    pub fn centralizer(&self, x: u32) -> Subgroup {
        let m: Vec<u32> = self.elements().filter(|&y| self.mul(x, y) == self.mul(y, x)).collect();
        Subgroup::closure(self, &m)
    }

    /// Centralizer of a subgroup.
    pub fn centralizer_of(&self, h: &Subgroup) -> Subgroup {
        let m: Vec<u32> = self
            .elements()
            .filter(|&y| h.gens().iter().all(|&x| self.mul(x, y) == self.mul(y, x)))
            .collect();
        Subgroup::closure(self, &m)
    }

    /// Commutator subgroup `[A, B]` of two normal subgroups.
    pub fn commutator_of(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut c = Vec::new();
        for &x in a.gens() {
            for &y in b.gens() {
                c.push(self.comm(x, y));
            }
        }
        Subgroup::normal_closure(self, &c)
    }

    /// Terms `G = L1 > L2 > ... > {1}` of the lower central series.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut out = vec![whole.clone()];
        loop {
            let next = self.commutator_of(out.last().unwrap(), &whole);
            let done = next.order() == out.last().unwrap().order();
            out.push(next);
            if done || out.last().unwrap().order() == 1 {
                break;
            }
        }
        out
    }

    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    /// VZ test: nonabelian, `G' <= Z(G)`, and `|C_G(g)| = |G/G'|` for every
    /// noncentral `g`.
    pub fn is_vz(&self) -> bool {
        if self.is_abelian() {
            return false;
        }
        let z = self.center();
        let d = self.derived_subgroup();
        if !d.is_subgroup_of(z) {
            return false;
        }
        let ab = self.order / d.order();
        let cl = self.classes();
        (0..cl.len()).all(|c| {
            let x = cl.rep(c);
            z.contains(x) || self.order / cl.size(c) == ab
        })
    }

    /// Number of cyclic subgroups of order `d` in an abelian group.
    pub fn cyclic_subgroup_count(&self, d: u64) -> Result<u64> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        Ok(cyclic_subgroup_count_in(self, &self.whole(), d))
    }

    /// The unique abelian subgroup of index `p` of a class-3 group of order `p^4`.
    pub fn unique_abelian_maximal(&self) -> Result<Subgroup> {
        let p = self.prime() as usize;
        if self.order != p.pow(4) || self.nilpotency_class() != 3 {
            return Err(Error::NotApplicable(
                "needs a group of order p^4 and nilpotency class 3".into(),
            ));
        }
        Ok(self.centralizer_of(self.derived_subgroup()))
    }

    /// Largest normal subgroup contained in `h`.
    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        let gens = self.gens();
        let mut cur: Vec<u32> = h.members().to_vec();
        loop {
            let set = Subgroup::mask_of(self.order, &cur);
            let next: Vec<u32> = cur
                .iter()
                .copied()
                .filter(|&x| gens.iter().all(|&g| set[self.conj(x, g) as usize]))
                .collect();
            if next.len() == cur.len() {
                return Subgroup::closure(self, &cur);
            }
            cur = next;
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.gens();
        h.gens().iter().all(|&x| gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    pub(crate) fn irr_cache(&self) -> &OnceLock<Result<Vec<crate::chars::Character>>> {
        &self.irr
    }
}

/// Number of cyclic subgroups of order `d` inside an abelian subgroup.
pub fn cyclic_subgroup_count_in(g: &PcGroup, a: &Subgroup, d: u64) -> u64 {
    let count = a.members().iter().filter(|&&x| g.element_order(x) as u64 == d).count() as u64;
    count / crate::cyclotomic::euler_phi(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi2_21(p: u32) -> PcGroup {
        let mut pr = PcPresentation::new(p, 3);
        pr.set_power(1, &[(3, 1)]).set_comm(2, 1, &[(3, 1)]);
        build_group(pr).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = build_group(PcPresentation::new(3, 0)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn extraspecial_27_basics() {
        let g = phi2_21(3);
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.derived_subgroup().order(), 3);
        assert_eq!(g.classes().len(), 11);
        assert!(g.is_vz());
        assert_eq!(g.centralizer(g.gen(0)).order(), 9);
        assert_eq!(g.nilpotency_class(), 2);
    }

    #[test]
    fn associativity_exhaustive() {
        let g = phi2_21(3);
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn inconsistent_rejected() {
        // g1^2 = g2 with [g2, g1] = g3 is not a consistent pc presentation
        let mut pr = PcPresentation::new(2, 3);
        pr.set_power(1, &[(2, 1)]).set_comm(2, 1, &[(3, 1)]);
        assert!(matches!(build_group(pr), Err(Error::InconsistentPresentation(_))));
    }

    #[test]
    fn order_cap() {
        let pr = PcPresentation::new(2, 13);
        assert!(matches!(build_group(pr), Err(Error::UnsupportedOrder { .. })));
    }
}
