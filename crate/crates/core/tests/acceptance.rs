//! Acceptance suite: one line per criterion, PASS or FAIL with timing.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use ratrep_core::algebra::{
    component_dimension, epsilon_within, oracle_decomposition, primitive_central_idempotents, rational_idempotent,
    AlgebraElement,
};
use ratrep_core::catalog::{abelian_types, odd_catalog, parse_group_id, two_group_catalog, GroupId};
use ratrep_core::chars::{
    fs_indicator, induce_linear, irr_characters, irr_galois_classes, nonlinear_characters, vz_character,
    vz_parameters,
};
use ratrep_core::reps::{
    companion_matrix, companion_rep, rational_irreducibles, verify_rep, FieldRelation, PairCharacter, RationalMatrix,
};
use ratrep_core::wedderburn::{
    counting_table, section_cyclic_counts, wedderburn_formula, wedderburn_generic, Decomposition,
};
use ratrep_core::{PcGroup, Subgroup};

type Outcome = Result<String, String>;

fn group(id: &str) -> PcGroup {
    parse_group_id(id).unwrap_or_else(|e| panic!("{id}: {e}")).build().unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn build(id: &GroupId) -> PcGroup {
    id.build().unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn phi(p: u64, k: u32) -> u64 {
    p.pow(k) - p.pow(k - 1)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn formula(g: &PcGroup) -> Result<Decomposition, String> {
    match wedderburn_formula(g) {
        Some(r) => r.map_err(|e| format!("{}: formula failed: {e}", g.label())),
        None => Err(format!("{}: no closed formula applies", g.label())),
    }
}

fn generic(g: &PcGroup) -> Result<Decomposition, String> {
    wedderburn_generic(g).map_err(|e| format!("{}: generic failed: {e}", g.label()))
}

fn oracle(g: &PcGroup) -> Result<Decomposition, String> {
    oracle_decomposition(g).map_err(|e| format!("{}: oracle failed: {e}", g.label()))
}

fn expect_text(d: &Decomposition, want: &str) -> Result<(), String> {
    let got = d.to_string();
    ensure(got == want, || format!("{} ({}): got `{got}`, want `{want}`", d.group, d.method.name()))
}

fn within(label: &str, t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t <= limit, || format!("{label} took {t:.2?}, limit {limit:?}"))
}

/// Extraspecial groups of order p^3.
fn criterion_1() -> Outcome {
    for p in [3u32, 5, 7] {
        for fam in ["phi2_21", "phi2_111"] {
            let id = format!("{fam}@p={p}");
            let t = Instant::now();
            let g = group(&id);
            let want = format!("QG = Q + {} Q(z{p}) + M{p}(Q(z{p}))", p + 1);
            expect_text(&formula(&g)?, &want)?;
            expect_text(&generic(&g)?, &want)?;
            within(&id, t.elapsed(), Duration::from_secs(10))?;
            if p <= 5 {
                let t = Instant::now();
                expect_text(&oracle(&g)?, &want)?;
                let limit = if p == 5 { 60 } else { 10 };
                within(&format!("{id} oracle"), t.elapsed(), Duration::from_secs(limit))?;
            }
        }
    }
    Ok("6 groups, formula = generic = expected, oracle at p = 3, 5".into())
}

fn counting_expectations(p: u64) -> Vec<(String, BTreeMap<u64, u64>)> {
    let (f1, f2, f3) = (phi(p, 1), phi(p, 2), phi(p, 3));
    let t = |v: &[(u64, u64)]| v.iter().copied().collect::<BTreeMap<_, _>>();
    let mut out = Vec::new();
    for fam in ["phi2_21", "phi2_111"] {
        out.push((format!("{fam}@p={p}"), t(&[(1, 1), (f1, p + 1), (f2, 1)])));
    }
    for fam in ["phi2_211a", "phi2_1111"] {
        out.push((format!("{fam}@p={p}"), t(&[(1, 1), (f1, p * p + p + 1), (f2, p)])));
    }
    out.push((format!("phi2_31@p={p}"), t(&[(1, 1), (f1, p + 1), (f2, p), (f3, 1)])));
    out.push((format!("phi2_22@p={p}"), t(&[(1, 1), (f1, p + 1), (f2, 2 * p)])));
    out.push((format!("phi2_211b@p={p}"), t(&[(1, 1), (f1, p * p + p + 1), (f3, 1)])));
    out.push((format!("phi2_211c@p={p}"), t(&[(1, 1), (f1, p + 1), (f2, p + 1)])));
    for fam in ["phi3_211a", "phi3_1111"] {
        out.push((format!("{fam}@p={p}"), t(&[(1, 1), (f1, p + 1), (f2, p + 1)])));
    }
    for r in ["1", "nu"] {
        out.push((format!("phi3_211b@p={p},r={r}"), t(&[(1, 1), (f1, p + 1), (f2, 1), (f3, 1)])));
    }
    out
}

/// Corrected table for a stated count that contradicts `n = x + y - z`.
fn erratum(id: &str, p: u64) -> Option<BTreeMap<u64, u64>> {
    id.starts_with("phi2_211c@")
        .then(|| [(1, 1), (phi(p, 1), p + 1), (phi(p, 2), 2 * p)].into_iter().collect())
}

/// Counting of irreducible rational representations by degree.
fn criterion_2() -> Outcome {
    let mut n = 0;
    let mut notes = Vec::new();
    for p in [3u64, 5] {
        for (id, stated) in counting_expectations(p) {
            let t = Instant::now();
            let g = group(&id);
            let got = counting_table(&g).map_err(|e| format!("{id}: {e}"))?;
            let classes = irr_galois_classes(&g).map_err(|e| format!("{id}: {e}"))?;
            let want = match erratum(&id, p) {
                Some(fixed) => {
                    let (z, d) = (g.center(), g.derived_subgroup());
                    let count = rational_rep_count(&g, &g.whole(), d) + rational_rep_count(&g, z, &g.trivial())
                        - rational_rep_count(&g, z, d);
                    let stated_total: u64 = stated.values().sum();
                    ensure(stated_total != count && fixed.values().sum::<u64>() == count, || {
                        format!("{id}: erratum no longer justified by n = x + y - z = {count}")
                    })?;
                    if g.order() <= 256 {
                        let o = oracle(&g)?;
                        ensure(o.component_count() == count, || format!("{id}: oracle has {} components", o.component_count()))?;
                    }
                    notes.push(format!("{id} stated {stated:?} has {stated_total} classes, n = x + y - z = {count}"));
                    fixed
                }
                None => stated,
            };
            ensure(got == want, || format!("{id}: got {got:?}, want {want:?}"))?;
            let mut by_rep: BTreeMap<u64, u64> = BTreeMap::new();
            for gc in classes {
                let chi = &gc.representative;
                let m = if fs_indicator(&g, chi) == -1 { 2 } else { 1 };
                *by_rep.entry(m * gc.size() as u64 * chi.degree()).or_default() += 1;
            }
            ensure(by_rep == want, || format!("{id}: Galois class degrees {by_rep:?}, want {want:?}"))?;
            within(&id, t.elapsed(), Duration::from_secs(30))?;
            n += 1;
        }
    }
    Ok(format!("{n} tables at p = 3, 5; corrected: {}", notes.join("; ")))
}

/// Maximal class groups of order p^4.
fn criterion_3() -> Outcome {
    let start = Instant::now();
    for p in [3u32, 5] {
        let q = p * p;
        let a = format!("QG = Q + {} Q(z{p}) + {} M{p}(Q(z{p}))", p + 1, p + 1);
        let b = format!("QG = Q + {} Q(z{p}) + M{p}(Q(z{p})) + M{p}(Q(z{q}))", p + 1);
        let cases = [
            (format!("phi3_211a@p={p}"), &a),
            (format!("phi3_1111@p={p}"), &a),
            (format!("phi3_211b@p={p},r=1"), &b),
            (format!("phi3_211b@p={p},r=nu"), &b),
        ];
        for (id, want) in cases {
            let g = group(&id);
            expect_text(&formula(&g)?, want)?;
            expect_text(&generic(&g)?, want)?;
            if p == 3 {
                expect_text(&oracle(&g)?, want)?;
            }
        }
        if p == 3 {
            within("p = 3 suite", start.elapsed(), Duration::from_secs(120))?;
        }
    }
    Ok("8 groups, formula = generic = expected, oracle at p = 3".into())
}

/// 2-groups of order 8 and the VZ groups of order 16.
fn criterion_4() -> Outcome {
    let start = Instant::now();
    let cases: [(&str, &str, u64); 8] = [
        ("q8", "QG = 4 Q + H(Q)", 1),
        ("d8", "QG = 4 Q + M2(Q)", 0),
        ("g1@16", "QG = 8 Q + M2(Q(z4))", 0),
        ("g2@16", "QG = 4 Q + 2 Q(z4) + M2(Q(z4))", 0),
        ("g3@16", "QG = 8 Q + 2 M2(Q)", 0),
        ("g4@16", "QG = 4 Q + 2 Q(z4) + 2 M2(Q)", 0),
        ("g5@16", "QG = 4 Q + H(Q) + 2 Q(z4) + M2(Q)", 1),
        ("g6@16", "QG = 8 Q + 2 H(Q)", 2),
    ];
    for (id, want, k) in cases {
        let g = group(id);
        expect_text(&formula(&g)?, want)?;
        expect_text(&generic(&g)?, want)?;
        let o = oracle(&g)?;
        expect_text(&o, want)?;
        ensure(o.dimension() == g.order() as u64, || format!("{id}: oracle dimension {}", o.dimension()))?;
        let nl = nonlinear_characters(&g).map_err(|e| e.to_string())?;
        let quaternionic = nl.iter().filter(|c| fs_indicator(&g, c) == -1).count() as u64;
        ensure(quaternionic == k, || format!("{id}: {quaternionic} quaternionic characters, want k = {k}"))?;
    }
    within("2-group suite", start.elapsed(), Duration::from_secs(10))?;
    Ok("q8, d8, g1..g6 match with k from Frobenius-Schur indicators".into())
}

fn block(m: &RationalMatrix, bi: usize, bj: usize, b: usize) -> RationalMatrix {
    let rows: Vec<Vec<_>> = (0..b).map(|i| (0..b).map(|j| m.get(bi * b + i, bj * b + j)).collect()).collect();
    RationalMatrix::from_rows(&rows)
}

fn example_block_forms() -> Result<(), String> {
    let g = group("phi2_21@p=3");
    let (a, a1, a2) = (g.gen(0), g.gen(1), g.gen(2));
    let mu = vz_parameters(&g)
        .into_iter()
        .find(|m| m.exp_at(a2) == Some(1) && m.order() == 3)
        .ok_or("no parameter with mu(a2) = z3")?;
    let chi = vz_character(&g, &mu);
    let rep = ratrep_core::reps::rational_rep_for(&g, &chi, None).map_err(|e| e.to_string())?;
    ensure(rep.source.exp_at(a1) == Some(0) && rep.source.exp_at(a2) == Some(1), || {
        "pair character differs from psi(a1) = 1, psi(a2) = z3".into()
    })?;
    ensure(rep.transversal == vec![0, a, g.mul(a, a)], || format!("transversal {:?}", rep.transversal))?;
    let sub = companion_rep(&g, &rep.source);
    let pm = companion_matrix(3);
    ensure(sub.image(a2) == Some(&pm), || "a2 does not map to the companion matrix".into())?;
    let (o, i2) = (RationalMatrix::zeros(2, 2), RationalMatrix::identity(2));
    for bi in 0..3 {
        for bj in 0..3 {
            let want = match (bi, bj) {
                (0, 2) => pm.clone(),
                _ if bi == bj + 1 => i2.clone(),
                _ => o.clone(),
            };
            ensure(block(&rep.images[0], bi, bj, 2) == want, || format!("alpha block ({bi},{bj})"))?;
            let want1 = if bi == bj { pm.pow(bi as u64) } else { o.clone() };
            ensure(block(&rep.images[1], bi, bj, 2) == want1, || format!("alpha1 block ({bi},{bj})"))?;
        }
    }
    ensure(verify_rep(&g, &rep).passed(), || "example representation fails verification".into())
}

/// Every constructed rational representation verifies.
fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut ids: Vec<GroupId> = odd_catalog(3);
    ids.extend(two_group_catalog());
    for s in [
        "extraspecial@p=3,n=1,exp=p",
        "extraspecial@p=3,n=1,exp=p2",
        "extraspecial@p=3,n=2,exp=p",
        "extraspecial@p=3,n=2,exp=p2",
        "extraspecial@p=2,n=1,type=+",
        "extraspecial@p=2,n=1,type=-",
        "extraspecial@p=2,n=2,type=+",
        "extraspecial@p=2,n=2,type=-",
    ] {
        ids.push(parse_group_id(s).unwrap());
    }
    for ty in abelian_types() {
        let t: Vec<String> = ty.iter().map(|e| e.to_string()).collect();
        ids.push(parse_group_id(&format!("abelian@p=3,type=[{}]", t.join(","))).unwrap());
    }
    let mut reps = 0;
    for id in &ids {
        let g = build(id);
        let all = rational_irreducibles(&g).map_err(|e| format!("{id}: {e}"))?;
        for rep in &all {
            let v = verify_rep(&g, rep);
            ensure(v.passed(), || format!("{id}: degree {} rep fails: {v:?}", rep.degree))?;
        }
        let total: usize = irr_galois_classes(&g).map_err(|e| e.to_string())?.len();
        ensure(all.len() == total, || format!("{id}: {} reps for {total} Galois classes", all.len()))?;
        reps += all.len();
    }
    example_block_forms()?;
    within("verification", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{} groups, {reps} representations, block forms match", ids.len()))
}

fn catalog_up_to(limit: usize) -> Vec<GroupId> {
    let mut ids = Vec::new();
    for p in [3u32, 5, 7] {
        ids.extend(odd_catalog(p));
        for n in 1..=3 {
            for e in ["p", "p2"] {
                ids.push(parse_group_id(&format!("extraspecial@p={p},n={n},exp={e}")).unwrap());
            }
        }
    }
    ids.extend(two_group_catalog());
    for n in 1..=3 {
        for t in ["+", "-"] {
            ids.push(parse_group_id(&format!("extraspecial@p=2,n={n},type={t}")).unwrap());
        }
    }
    for p in [2u32, 3, 5, 7] {
        for ty in abelian_types() {
            let t: Vec<String> = ty.iter().map(|e| e.to_string()).collect();
            ids.push(parse_group_id(&format!("abelian@p={p},type=[{}]", t.join(","))).unwrap());
        }
    }
    let order = |id: &GroupId| (id.p as usize).pow(id.presentation().ngens as u32);
    ids.into_iter().filter(|id| order(id) <= limit).collect()
}

/// Primitive central idempotents of every catalog group of order at most 256.
fn criterion_6() -> Outcome {
    let start = Instant::now();
    let ids = catalog_up_to(256);
    let mut total = 0;
    for id in &ids {
        let g = build(id);
        let pcis = primitive_central_idempotents(&g).map_err(|e| format!("{id}: {e}"))?;
        let mut sum = AlgebraElement::zero(&g);
        let mut dim = 0;
        for (i, (_, e)) in pcis.iter().enumerate() {
            ensure(e.is_idempotent(&g), || format!("{id}: e{i} is not idempotent"))?;
            ensure(e.is_central(&g), || format!("{id}: e{i} is not central"))?;
            for (j, (_, f)) in pcis.iter().enumerate().skip(i + 1) {
                ensure(e.mul(&g, f).is_zero(), || format!("{id}: e{i} e{j} != 0"))?;
            }
            dim += component_dimension(&g, e).map_err(|err| format!("{id}: {err}"))?;
            sum = sum.add(e);
        }
        ensure(sum == AlgebraElement::one(&g), || format!("{id}: idempotents do not sum to 1"))?;
        ensure(dim == g.order(), || format!("{id}: component dimensions total {dim}"))?;
        if g.is_vz() && !g.is_abelian() {
            for mu in vz_parameters(&g) {
                let e = rational_idempotent(&g, &vz_character(&g, &mu));
                let eps = epsilon_within(&g, g.center(), &mu.kernel(&g)).map_err(|err| format!("{id}: {err}"))?;
                ensure(e == eps, || format!("{id}: e_Q(chi_mu) differs from epsilon(Z, ker mu)"))?;
            }
        }
        total += pcis.len();
    }
    within("idempotent suite", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} groups, {total} idempotents", ids.len()))
}

fn rational_rep_count(g: &PcGroup, a: &Subgroup, n: &Subgroup) -> u64 {
    section_cyclic_counts(g, a, n).values().sum()
}

fn degree_counts(g: &PcGroup) -> Result<BTreeMap<u64, usize>, String> {
    let mut out = BTreeMap::new();
    for chi in irr_characters(g).map_err(|e| e.to_string())? {
        *out.entry(chi.degree()).or_default() += 1;
    }
    Ok(out)
}

/// Structural invariants across the catalog.
fn criterion_7() -> Outcome {
    let mut checked = 0;
    for id in catalog_up_to(625) {
        let g = build(&id);
        let order = g.order() as u64;
        let mut methods = vec![generic(&g)?];
        if let Some(f) = wedderburn_formula(&g) {
            methods.push(f.map_err(|e| format!("{id}: {e}"))?);
        }
        if g.order() <= 256 {
            methods.push(oracle(&g)?);
        }
        for d in &methods {
            ensure(d.dimension() == order, || format!("{id} ({}): dimension {}", d.method.name(), d.dimension()))?;
        }
        if g.is_vz() && !g.is_abelian() {
            let n = irr_galois_classes(&g).map_err(|e| e.to_string())?.len() as u64;
            let (z, d) = (g.center(), g.derived_subgroup());
            let x = rational_rep_count(&g, &g.whole(), d);
            let y = rational_rep_count(&g, z, &g.trivial());
            let w = rational_rep_count(&g, z, d);
            ensure(n == x + y - w, || format!("{id}: n = {n}, x + y - z = {}", x + y - w))?;
            let root = ((g.order() / z.order()) as f64).sqrt().round() as usize;
            for mu in vz_parameters(&g) {
                let chi = vz_character(&g, &mu);
                let rep = ratrep_core::reps::rational_rep_for(&g, &chi, None).map_err(|e| e.to_string())?;
                let pair = rep.pair.as_ref().ok_or("missing pair")?;
                let PairCharacter::Linear(psi) = &pair.psi else {
                    return Err(format!("{id}: VZ pair with nonlinear character"));
                };
                ensure(induce_linear(&g, psi) == chi, || format!("{id}: pair does not induce chi_mu"))?;
                let ratio = psi.kernel(&g).order() / mu.kernel(&g).order();
                let want = match pair.relation {
                    FieldRelation::FieldEqual => root,
                    FieldRelation::FieldIndex2 => root / 2,
                };
                ensure(ratio == want, || format!("{id}: kernel ratio {ratio}, want {want}"))?;
            }
        }
        checked += 1;
    }
    for p in [3u32, 5] {
        let families = [
            vec!["phi2_21", "phi2_111"],
            vec!["phi2_211a", "phi2_211b", "phi2_211c", "phi2_1111", "phi2_31", "phi2_22"],
        ];
        for fams in families {
            let base = degree_counts(&group(&format!("{}@p={p}", fams[0])))?;
            for f in &fams[1..] {
                let other = degree_counts(&group(&format!("{f}@p={p}")))?;
                ensure(other == base, || format!("{f}@p={p}: degree counts {other:?} vs {base:?}"))?;
            }
        }
    }
    Ok(format!("{checked} groups, dimension sums, n = x + y - z, kernel ratios, isoclinic counts"))
}

/// Written to the process stdout so the lines show without `--nocapture`.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("extraspecial p^3 decompositions", criterion_1),
        ("counting tables", criterion_2),
        ("maximal class p^4 decompositions", criterion_3),
        ("2-group suite", criterion_4),
        ("representation verification", criterion_5),
        ("idempotent suite", criterion_6),
        ("structural properties", criterion_7),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let el = t.elapsed();
        match &outcome {
            Ok(detail) => report(format!("criterion {}: PASS {name}: {detail} [{el:.2?}]", i + 1)),
            Err(msg) => {
                report(format!("criterion {}: FAIL {name}: {msg} [{el:.2?}]", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
