//! Induced pc sequences for subgroups and quotients.

use super::{build_group_capped, PcGroup, PcPresentation, Subgroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// A pc sequence `q1..qm` for `H` relative to a normal subgroup `N <= H`.
///
/// The layers `S_i = <q_i, ..., q_m, N>` form a central series of `H`
/// through `N`, so each `h` in `H` is `q1^e1 ... qm^em n` uniquely.
#[derive(Clone, Debug)]
pub struct PcSeq {
    pub gens: Vec<u32>,
    /// `layers[i]` is the membership mask of `S_{i+1}`; `layers[m]` is `N`.
    layers: Vec<Vec<bool>>,
}

impl PcSeq {
    /// Build the sequence for `h` over `n`; `n` must be normal in `h`.
    pub fn new(g: &PcGroup, h: &Subgroup, n: &Subgroup) -> Self {
        let p = g.prime() as i64;
        let mut picks = Vec::new();
        let mut cur = n.clone();
        let mut layers_rev = vec![cur.mask().to_vec()];
        while cur.order() < h.order() {
            let x = h
                .members()
                .iter()
                .copied()
                .find(|&x| {
                    !cur.contains(x)
                        && cur.contains(g.pow(x, p))
                        && h.gens().iter().all(|&a| cur.contains(g.comm(x, a)))
                })
                .expect("a p-group quotient has a central element of order p");
            picks.push(x);
            cur = cur.join(g, x);
            layers_rev.push(cur.mask().to_vec());
        }
        picks.reverse();
        layers_rev.reverse();
        PcSeq { gens: picks, layers: layers_rev }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Exponents of `x` relative to the sequence.
    pub fn exps(&self, g: &PcGroup, x: u32) -> Vec<u32> {
        let mut e = vec![0u32; self.len()];
        let mut cur = x;
        for i in 0..self.len() {
            let qinv = g.inv(self.gens[i]);
            while !self.layers[i + 1][cur as usize] {
                cur = g.mul(qinv, cur);
                e[i] += 1;
            }
        }
        e
    }

    /// The induced presentation on `q1..qm`.
    pub fn presentation(&self, g: &PcGroup) -> PcPresentation {
        let p = g.prime();
        let m = self.len();
        let mut pr = PcPresentation::new(p, m);
        for i in 0..m {
            pr.power[i] = self.exps(g, g.pow(self.gens[i], p as i64));
            for j in i + 1..m {
                pr.comm[j][i] = self.exps(g, g.comm(self.gens[j], self.gens[i]));
            }
        }
        pr
    }
}

/// The quotient `G/N` with the projection `G -> G/N` as an index table.
pub fn quotient(g: &PcGroup, n: &Subgroup) -> Result<(PcGroup, Vec<u32>)> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let seq = PcSeq::new(g, &g.whole(), n);
    let q = build_group_capped(seq.presentation(g), DEFAULT_ORDER_CAP)?;
    let proj = g.elements().map(|x| q.from_exps(&seq.exps(g, x))).collect();
    Ok((q, proj))
}

/// The subgroup `H` as a group of its own, with the embedding `H -> G`.
pub fn subgroup_as_group(g: &PcGroup, h: &Subgroup) -> (PcGroup, Vec<u32>) {
    let seq = PcSeq::new(g, h, &g.trivial());
    let hg = build_group_capped(seq.presentation(g), DEFAULT_ORDER_CAP)
        .expect("an induced presentation is consistent");
    let mut embed = vec![0u32; h.order()];
    for &x in h.members() {
        embed[hg.from_exps(&seq.exps(g, x)) as usize] = x;
    }
    (hg, embed)
}

#[cfg(test)]
mod tests {
    use super::super::build_group;
    use super::*;

    #[test]
    fn quotient_by_derived() {
        let mut pr = PcPresentation::new(3, 3);
        pr.set_power(1, &[(3, 1)]).set_comm(2, 1, &[(3, 1)]);
        let g = build_group(pr).unwrap();
        let (q, proj) = quotient(&g, g.derived_subgroup()).unwrap();
        assert_eq!(q.order(), 9);
        assert!(q.is_abelian());
        assert_eq!(q.exponent(), 3);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(proj[g.mul(x, y) as usize], q.mul(proj[x as usize], proj[y as usize]));
            }
        }
        let (t, _) = quotient(&g, &g.whole()).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn subgroup_embedding_is_homomorphism() {
        let mut pr = PcPresentation::new(2, 3);
        pr.set_power(1, &[(3, 1)]).set_power(2, &[(3, 1)]).set_comm(2, 1, &[(3, 1)]);
        let g = build_group(pr).unwrap();
        let h = g.centralizer(g.gen(0));
        let (hg, emb) = subgroup_as_group(&g, &h);
        assert_eq!(hg.order(), 4);
        for a in hg.elements() {
            for b in hg.elements() {
                assert_eq!(emb[hg.mul(a, b) as usize], g.mul(emb[a as usize], emb[b as usize]));
            }
        }
    }
}
