//! Structural checks against brute-force oracles.

use ratrep_core::catalog::{odd_catalog, parse_group_id, two_group_catalog};
use ratrep_core::chars::{induce_linear, linear_characters_of, omega, vz_character, vz_parameters};
use ratrep_core::group::{maximal_subgroups, parse_presentation};
use ratrep_core::reps::{pair_induces, rep_from_linear, required_pair_search, table_pair, PairCharacter};
use ratrep_core::wedderburn::{counting_table, wedderburn_generic};
use ratrep_core::{build_group, CycNum, Error, LinearChar, PcGroup, Rational, Subgroup};

fn group(id: &str) -> PcGroup {
    parse_group_id(id).unwrap().build().unwrap()
}

/// `(1/|h|) * sum over y in g of f°(y^-1 x y)`, for `x` in `g`.
fn induce_at(g: &PcGroup, over: &[u32], h: &Subgroup, f: &dyn Fn(u32) -> CycNum, x: u32) -> CycNum {
    let mut acc = CycNum::zero(1);
    for &y in over {
        let c = g.mul(g.mul(g.inv(y), x), y);
        if h.contains(c) {
            acc = acc.add_ref(&f(c));
        }
    }
    acc.scale(&Rational::new(1.into(), (h.order() as i64).into()))
}

fn same(a: &CycNum, b: &CycNum) -> bool {
    a.sub_ref(b).is_zero()
}

#[test]
fn induction_is_transitive() {
    for id in ["phi2_21@p=3", "phi2_211b@p=3", "phi3_211a@p=3", "g2@16", "q16"] {
        let g = group(id);
        let all: Vec<u32> = g.elements().collect();
        let whole = g.whole();
        for k in maximal_subgroups(&g, &whole) {
            for h in maximal_subgroups(&g, &k).into_iter().take(2) {
                for psi in linear_characters_of(&g, &h).into_iter().step_by(5).take(3) {
                    let base = |x: u32| psi.value(x).expect("on the domain");
                    let mid = |x: u32| induce_at(&g, k.members(), &h, &base, x);
                    let direct = induce_linear(&g, &psi);
                    let cl = g.classes();
                    for c in 0..cl.len() {
                        let x = cl.rep(c);
                        let two_step = induce_at(&g, &all, &k, &mid, x);
                        let one_step = induce_at(&g, &all, &h, &base, x);
                        assert!(same(&two_step, &one_step), "{id}: class {c}");
                        assert!(same(direct.value(c), &one_step), "{id}: class {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn tabulated_pairs_agree_with_search() {
    let ids = odd_catalog(3).into_iter().chain(odd_catalog(5)).chain(two_group_catalog());
    let mut checked = 0;
    for id in ids {
        let g = id.build().unwrap();
        if !g.is_vz() {
            continue;
        }
        for mu in vz_parameters(&g) {
            let tab = match table_pair(&g, &mu) {
                Ok(t) => t,
                Err(Error::UnknownFamily(_)) => break,
                Err(e) => panic!("{id}: {e}"),
            };
            let chi = vz_character(&g, &mu);
            assert!(pair_induces(&g, &tab, &chi), "{id}");
            let found = required_pair_search(&g, &chi).unwrap();
            assert_eq!(tab.relation, found.relation, "{id}");
            let om = omega(&g, &chi);
            for pair in [tab, found] {
                let psi = match &pair.psi {
                    PairCharacter::Linear(psi) => psi.clone(),
                    PairCharacter::Nonlinear(_) => pair.realization.clone(),
                };
                let rep = rep_from_linear(&g, &psi, om.clone(), Some(pair));
                assert_eq!(rep.trace_character(&g), om.values, "{id}");
            }
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} pairs compared");
}

/// An isomorphism `a -> b` fixed by the images of the generators outside the Frattini subgroup.
fn find_isomorphism(a: &PcGroup, b: &PcGroup) -> Option<Vec<u32>> {
    if a.order() != b.order() {
        return None;
    }
    let fa = a.whole().frattini(a);
    let fb = b.whole().frattini(b);
    let gens: Vec<u32> = a.gens().into_iter().filter(|&x| !fa.contains(x)).collect();
    let cands: Vec<u32> = b.elements().filter(|&y| !fb.contains(y)).collect();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        let chosen: Vec<u32> = imgs.iter().map(|&i| cands[i]).collect();
        if let Some(map) = extend(a, b, &gens, &chosen) {
            return Some(map);
        }
        let mut k = 0;
        loop {
            if k == imgs.len() {
                return None;
            }
            imgs[k] += 1;
            if imgs[k] < cands.len() {
                break;
            }
            imgs[k] = 0;
            k += 1;
        }
    }
}

/// Extend generator images to a map by breadth-first search, checking it is a bijective homomorphism.
fn extend(a: &PcGroup, b: &PcGroup, gens: &[u32], imgs: &[u32]) -> Option<Vec<u32>> {
    const UNSET: u32 = u32::MAX;
    let mut map = vec![UNSET; a.order()];
    map[0] = 0;
    let mut queue = vec![0u32];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let (y, w) = (a.mul(x, s), b.mul(map[x as usize], t));
            match map[y as usize] {
                UNSET => {
                    map[y as usize] = w;
                    queue.push(y);
                }
                v if v != w => return None,
                _ => {}
            }
        }
    }
    let mut seen = vec![false; b.order()];
    for &v in &map {
        if v == UNSET || std::mem::replace(&mut seen[v as usize], true) {
            return None;
        }
    }
    Some(map)
}

#[test]
fn class_three_families_coincide_at_three() {
    let a = group("phi3_1111@p=3");
    let b = group("phi3_211a@p=3");
    let map = find_isomorphism(&a, &b).expect("isomorphic at p = 3");
    for x in a.elements() {
        for y in a.elements() {
            assert_eq!(map[a.mul(x, y) as usize], b.mul(map[x as usize], map[y as usize]));
        }
    }
    let da = wedderburn_generic(&a).unwrap();
    let db = wedderburn_generic(&b).unwrap();
    assert!(da.same_algebra(&db));
    assert_eq!(counting_table(&a).unwrap(), counting_table(&b).unwrap());
}

#[test]
fn class_three_families_differ_at_five() {
    let a = group("phi3_1111@p=5");
    let b = group("phi3_211a@p=5");
    let orders = |g: &PcGroup| {
        let mut v: Vec<u32> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    assert_ne!(orders(&a), orders(&b));
}

#[test]
fn isomorphic_presentations_of_q8() {
    let q8 = group("q8");
    let other = build_group(parse_presentation("p=2\nngens=3\npow 1 = g3\npow 2 = g3\ncomm 2 1 = g3\n").unwrap()).unwrap();
    assert!(find_isomorphism(&q8, &other).is_some());
    assert!(find_isomorphism(&group("d8"), &other).is_none());
}

#[test]
fn malformed_input_is_rejected() {
    assert!(matches!(parse_group_id("phi2_21@p=9"), Err(Error::Parse { .. })));
    assert!(matches!(parse_group_id("nope@p=3"), Err(Error::UnknownFamily(_))));
    assert!(matches!(parse_presentation("p=3\nngens=2\npow 3 = 1\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_presentation("p=3\nngens=2\ncomm 2 1 = g1\n"), Err(Error::Parse { .. })));
    let twisted = parse_presentation("p=3\nngens=3\npow 1 = g2\ncomm 2 1 = g3\n").unwrap();
    assert!(matches!(build_group(twisted), Err(Error::InconsistentPresentation(_))));
}

#[test]
fn linear_characters_from_generators() {
    let g = group("abelian@p=3,type=[2,1]");
    let psi = LinearChar::from_generators(&g, &[g.gen(0), g.gen(2)], 9, &[1, 3]).unwrap();
    assert_eq!(psi.order(), 9);
    assert_eq!(linear_characters_of(&g, &g.whole()).len(), 27);
    assert!(LinearChar::from_generators(&g, &[g.gen(0), g.gen(1)], 3, &[0, 1]).is_err());
}
