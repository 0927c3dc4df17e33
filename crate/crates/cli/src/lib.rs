//! Command implementations and serializers for the `ratrep` binary.

pub mod json;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ratrep_core::algebra::{
    component_dimension, epsilon_within, oracle_decomposition_capped, primitive_central_idempotents,
    rational_idempotent, AlgebraElement, DEFAULT_ORACLE_CAP,
};
use ratrep_core::catalog::{abelian_types, catalog_list, odd_catalog, parse_group_id, two_group_catalog, GroupId};
use ratrep_core::chars::{
    fs_indicator, induce_linear, nonlinear_characters, vz_character, vz_parameters,
};
use ratrep_core::group::{build_group_capped, parse_presentation, DEFAULT_ORDER_CAP};
use ratrep_core::reps::{
    rational_class_sources, rational_irreducibles, rational_rep_for, rational_rep_of, verify_rep, FieldRelation,
    PairCharacter,
};
use ratrep_core::wedderburn::{counting_table, section_cyclic_counts, wedderburn, wedderburn_formula, wedderburn_generic};
use ratrep_core::{Decomposition, Division, Error, PcGroup, WedderburnComponent};

use json::*;

#[derive(Debug, Parser)]
#[command(name = "ratrep", version, about = "Rational representations and Wedderburn decompositions of small p-groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wedderburn decomposition of QG.
    Wedderburn {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// Irreducible rational representations, one per Galois class.
    Reps {
        #[command(flatten)]
        group: GroupArgs,
        /// Index of the Galois class of Irr(G), starting at 0.
        #[arg(long)]
        class: Option<usize>,
    },
    /// Primitive central idempotents of QG.
    Idempotents {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Number of irreducible rational representations of each degree.
    Counting {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Run the invariant checks for one group or the whole catalog.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Include the oracle, idempotent and Schur index checks.
        #[arg(long)]
        deep: bool,
        /// Verify every catalog group for the prime given by --p.
        #[arg(long)]
        all: bool,
    },
    /// List the catalog families, or the concrete ids for one prime.
    Catalog {
        #[arg(long)]
        p: Option<u32>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Catalog id such as phi2_21@p=3, g6@16 or abelian@p=3,type=[2,1].
    pub id: Option<String>,
    /// Read a pc presentation from a file instead of the catalog.
    #[arg(long, conflicts_with = "id")]
    pub presentation: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Order cap for building groups and for the oracle.
    #[arg(long)]
    pub max_order: Option<u64>,
    /// Prime for `verify --all`.
    #[arg(long)]
    pub p: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Generic,
    Oracle,
}

/// A failure rendered as `error[code]: message` with a process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn input(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into(), exit: 2 }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, exit) = match &e {
            Error::Parse { .. } => ("parse", 2),
            Error::UnknownFamily(_) => ("unknown-family", 2),
            Error::InconsistentPresentation(_) => ("inconsistent-presentation", 2),
            Error::UnsupportedOrder { .. } => ("order-cap", 3),
            Error::UnsupportedStructure(_) => ("unsupported-structure", 3),
            Error::NotApplicable(_) => ("not-applicable", 3),
            Error::NoPairFound(_) => ("no-pair", 3),
            _ => ("internal", 4),
        };
        CliError { code, message: e.to_string(), exit }
    }
}

/// Standard output and exit code of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, exit: 0 }
    }
}

pub type CliResult = std::result::Result<Output, CliError>;

fn build_capped(id: &GroupId, cap: u64) -> Result<PcGroup, CliError> {
    let pres = id.presentation();
    let order = (id.p as u64).checked_pow(pres.ngens as u32).unwrap_or(u64::MAX);
    if order > cap {
        return Err(Error::UnsupportedOrder { order, cap }.into());
    }
    let mut g = build_group_capped(pres, cap)?;
    g.set_family(&id.family);
    g.set_label(&id.to_string());
    Ok(g)
}

/// Resolve the group named by a catalog id or a presentation file.
pub fn load_group(args: &GroupArgs) -> Result<PcGroup, CliError> {
    let cap = args.max_order.unwrap_or(DEFAULT_ORDER_CAP);
    match (&args.id, &args.presentation) {
        (Some(id), None) => build_capped(&parse_group_id(id)?, cap),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input("io", format!("{}: {e}", path.display())))?;
            let mut g = build_group_capped(parse_presentation(&text)?, cap)?;
            g.set_label(&path.display().to_string());
            Ok(g)
        }
        _ => Err(CliError::input("usage", "give a catalog id or --presentation <path>")),
    }
}

fn oracle_cap(args: &GroupArgs) -> usize {
    args.max_order.map_or(DEFAULT_ORACLE_CAP, |m| m as usize)
}

/// Decomposition by the requested method. `formula` falls back to the
/// generic method where no closed formula applies.
pub fn decompose(g: &PcGroup, method: MethodArg, oracle_max: usize) -> Result<Decomposition, CliError> {
    Ok(match method {
        MethodArg::Formula => wedderburn(g)?,
        MethodArg::Generic => wedderburn_generic(g)?,
        MethodArg::Oracle => oracle_decomposition_capped(g, oracle_max)?,
    })
}

pub fn cmd_wedderburn(args: &GroupArgs, method: MethodArg) -> CliResult {
    let g = load_group(args)?;
    let d = decompose(&g, method, oracle_cap(args))?;
    Ok(Output::ok(match args.format {
        Format::Text => format!("{d}\n"),
        Format::Json => format!("{}\n", decomposition_to_json(&d)),
        Format::Latex => format!("{}\n", render::decomposition_latex(&d)),
    }))
}

pub fn cmd_reps(args: &GroupArgs, class: Option<usize>) -> CliResult {
    let g = load_group(args)?;
    let sources = rational_class_sources(&g)?;
    let indices: Vec<usize> = match class {
        Some(c) if c >= sources.len() => {
            return Err(CliError::input(
                "class-index",
                format!("class {c} out of range: {} Galois classes", sources.len()),
            ))
        }
        Some(c) => vec![c],
        None => (0..sources.len()).collect(),
    };
    let mut reps = Vec::new();
    for i in indices {
        reps.push((i, rational_rep_of(&g, &sources[i])?));
    }
    Ok(Output::ok(match args.format {
        Format::Text => render::reps_text(&g, &reps),
        Format::Json => {
            let j = RepsJson {
                group: g.label().to_string(),
                order: g.order() as u64,
                representations: reps.iter().map(|(i, r)| render::rep_json(&g, *i, r)).collect(),
            };
            format!("{}\n", serde_json::to_string_pretty(&j).expect("plain data serializes"))
        }
        Format::Latex => render::reps_latex(&g, &reps),
    }))
}

fn component_of(g: &PcGroup, chi: &ratrep_core::Character) -> WedderburnComponent {
    let m = ratrep_core::chars::schur_index(g, chi);
    let field = chi.field().clone();
    let division = match m {
        1 => Division::Field,
        2 if field.is_rational() => Division::RationalQuaternion,
        _ => Division::DivisionAlgebra { degree: m },
    };
    WedderburnComponent::new(1, chi.degree() / m, field, division)
}

pub fn cmd_idempotents(args: &GroupArgs) -> CliResult {
    let g = load_group(args)?;
    let cap = oracle_cap(args);
    if g.order() > cap {
        return Err(Error::UnsupportedOrder { order: g.order() as u64, cap: cap as u64 }.into());
    }
    let mut items = Vec::new();
    for (i, (chi, e)) in primitive_central_idempotents(&g)?.into_iter().enumerate() {
        let dim = component_dimension(&g, &e)?;
        items.push((i, component_of(&g, &chi), dim, e));
    }
    Ok(Output::ok(match args.format {
        Format::Text => render::idempotents_text(&g, &items),
        Format::Json => {
            let j = IdempotentsJson {
                group: g.label().to_string(),
                order: g.order() as u64,
                idempotents: items
                    .iter()
                    .map(|(i, c, dim, e)| IdempotentJson {
                        index: *i,
                        component: c.body(),
                        dimension: *dim,
                        terms: render::terms(&g, e)
                            .into_iter()
                            .map(|(coeff, elements)| TermJson { coeff, elements })
                            .collect(),
                    })
                    .collect(),
            };
            format!("{}\n", serde_json::to_string_pretty(&j).expect("plain data serializes"))
        }
        Format::Latex => render::idempotents_latex(&g, &items),
    }))
}

pub fn cmd_counting(args: &GroupArgs) -> CliResult {
    let g = load_group(args)?;
    let t = counting_table(&g)?;
    Ok(Output::ok(match args.format {
        Format::Text => t.iter().map(|(d, c)| format!("degree {d}: {c}\n")).collect(),
        Format::Json => {
            let j = CountingJson {
                group: g.label().to_string(),
                order: g.order() as u64,
                table: t.iter().map(|(&degree, &count)| CountJson { degree, count }).collect(),
            };
            format!("{}\n", serde_json::to_string_pretty(&j).expect("plain data serializes"))
        }
        Format::Latex => render::counting_latex(&t),
    }))
}

/// One named invariant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, r: Result<String, String>) -> Check {
    match r {
        Ok(detail) => Check { name, passed: true, detail },
        Err(detail) => Check { name, passed: false, detail },
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_reps(g: &PcGroup) -> Result<String, String> {
    let reps = rational_irreducibles(g).map_err(|e| e.to_string())?;
    for (i, rep) in reps.iter().enumerate() {
        let v = verify_rep(g, rep);
        if let Some(r) = &v.relation_failure {
            return Err(format!("class {i}: {r} fails"));
        }
        if let Some(c) = v.trace_failure {
            return Err(format!("class {i}: trace differs on conjugacy class {c}"));
        }
        ensure(v.norm == v.expected_norm, || format!("class {i}: norm {} != {}", v.norm, v.expected_norm))?;
    }
    let n = wedderburn_generic(g).map_err(|e| e.to_string())?.component_count() as usize;
    ensure(reps.len() == n, || format!("{} representations for {n} simple components", reps.len()))?;
    Ok(format!("{} representations verified", reps.len()))
}

fn check_dimensions(g: &PcGroup) -> Result<String, String> {
    let generic = wedderburn_generic(g).map_err(|e| e.to_string())?;
    let order = g.order() as u64;
    ensure(generic.dimension() == order, || format!("generic dimension {}", generic.dimension()))?;
    match wedderburn_formula(g) {
        Some(f) => {
            let f = f.map_err(|e| e.to_string())?;
            ensure(f.dimension() == order, || format!("formula dimension {}", f.dimension()))?;
            ensure(f.same_algebra(&generic), || format!("formula `{f}` differs from generic `{generic}`"))?;
            Ok(format!("formula = generic, dimension {order}"))
        }
        None => Ok(format!("generic dimension {order}, no formula applies")),
    }
}

fn rational_count(g: &PcGroup, a: &ratrep_core::Subgroup, n: &ratrep_core::Subgroup) -> u64 {
    section_cyclic_counts(g, a, n).values().sum()
}

fn check_vz(g: &PcGroup) -> Result<String, String> {
    let n = rational_class_sources(g).map_err(|e| e.to_string())?.len() as u64;
    let (z, d) = (g.center(), g.derived_subgroup());
    let (x, y, w) = (rational_count(g, &g.whole(), d), rational_count(g, z, &g.trivial()), rational_count(g, z, d));
    ensure(n == x + y - w, || format!("n = {n} but x + y - z = {}", x + y - w))?;
    let root = ((g.order() / z.order()) as f64).sqrt().round() as usize;
    let params = vz_parameters(g);
    for mu in &params {
        let chi = vz_character(g, mu);
        let rep = rational_rep_for(g, &chi, None).map_err(|e| e.to_string())?;
        let pair = rep.pair.as_ref().ok_or("missing required pair")?;
        let PairCharacter::Linear(psi) = &pair.psi else {
            return Err("nonlinear pair on a VZ group".into());
        };
        ensure(induce_linear(g, psi) == chi, || "pair does not induce chi_mu".into())?;
        ensure(z.is_subgroup_of(&pair.subgroup), || "pair subgroup misses the center".into())?;
        let ratio = psi.kernel(g).order() / mu.kernel(g).order();
        let want = match pair.relation {
            FieldRelation::FieldEqual => root,
            FieldRelation::FieldIndex2 => root / 2,
        };
        ensure(ratio == want, || format!("kernel ratio {ratio}, expected {want}"))?;
    }
    Ok(format!("n = x + y - z = {n}; {} pairs with correct kernel ratio", params.len()))
}

fn check_oracle(g: &PcGroup, cap: usize) -> Result<String, String> {
    let o = oracle_decomposition_capped(g, cap).map_err(|e| e.to_string())?;
    let w = wedderburn(g).map_err(|e| e.to_string())?;
    ensure(o.same_algebra(&w), || format!("oracle `{o}` differs from `{w}`"))?;
    Ok(format!("{o}"))
}

fn check_idempotents(g: &PcGroup) -> Result<String, String> {
    let pcis = primitive_central_idempotents(g).map_err(|e| e.to_string())?;
    let mut sum = AlgebraElement::zero(g);
    let mut dim = 0;
    for (i, (_, e)) in pcis.iter().enumerate() {
        ensure(e.is_idempotent(g), || format!("e{i} is not idempotent"))?;
        ensure(e.is_central(g), || format!("e{i} is not central"))?;
        for (j, (_, f)) in pcis.iter().enumerate().skip(i + 1) {
            ensure(e.mul(g, f).is_zero(), || format!("e{i} e{j} is not zero"))?;
        }
        dim += component_dimension(g, e).map_err(|err| err.to_string())?;
        sum = sum.add(e);
    }
    ensure(sum == AlgebraElement::one(g), || "idempotents do not sum to 1".into())?;
    ensure(dim == g.order(), || format!("component dimensions total {dim}"))?;
    if g.is_vz() {
        for mu in vz_parameters(g) {
            let e = rational_idempotent(g, &vz_character(g, &mu));
            let eps = epsilon_within(g, g.center(), &mu.kernel(g)).map_err(|err| err.to_string())?;
            ensure(e == eps, || "e_Q(chi_mu) differs from epsilon(Z(G), ker mu)".into())?;
        }
    }
    Ok(format!("{} idempotents", pcis.len()))
}

fn check_schur(g: &PcGroup) -> Result<String, String> {
    let nl = if g.is_abelian() { Vec::new() } else { nonlinear_characters(g).map_err(|e| e.to_string())? };
    let k = nl.iter().filter(|c| fs_indicator(g, c) == -1).count() as u64;
    let d = wedderburn(g).map_err(|e| e.to_string())?;
    let from_algebra: u64 = d
        .components
        .iter()
        .filter(|c| c.division.degree() == 2)
        .map(|c| c.multiplicity * c.center.degree())
        .sum();
    ensure(k == from_algebra, || format!("{k} characters with indicator -1, {from_algebra} from the decomposition"))?;
    Ok(format!("k = {k}"))
}

/// Run the invariant suite on one group.
pub fn verify_group(g: &PcGroup, deep: bool, oracle_max: usize) -> Vec<Check> {
    let mut out = vec![check("representations", check_reps(g)), check("dimensions", check_dimensions(g))];
    if g.is_vz() {
        out.push(check("vz-structure", check_vz(g)));
    }
    if deep {
        out.push(check("schur-indices", check_schur(g)));
        if g.order() <= oracle_max {
            out.push(check("oracle", check_oracle(g, oracle_max)));
            out.push(check("idempotents", check_idempotents(g)));
        }
    }
    out
}

fn verify_report(g: &PcGroup, checks: &[Check], format: Format) -> String {
    let passed = checks.iter().all(|c| c.passed);
    match format {
        Format::Json => {
            let j = VerifyJson {
                group: g.label().to_string(),
                order: g.order() as u64,
                passed,
                checks: checks
                    .iter()
                    .map(|c| CheckJson { name: c.name.to_string(), passed: c.passed, detail: c.detail.clone() })
                    .collect(),
            };
            format!("{}\n", serde_json::to_string_pretty(&j).expect("plain data serializes"))
        }
        _ => {
            let mut s = String::new();
            for c in checks {
                let tag = if c.passed { "pass" } else { "FAIL" };
                s.push_str(&format!("{tag} {} {}: {}\n", g.label(), c.name, c.detail));
            }
            s
        }
    }
}

/// Concrete catalog ids for a prime.
pub fn catalog_ids(p: u32) -> Result<Vec<GroupId>, CliError> {
    let mut ids: Vec<String> = Vec::new();
    if p == 2 {
        ids.extend(two_group_catalog().iter().map(|i| i.to_string()));
        for n in 1..=3 {
            for t in ["+", "-"] {
                ids.push(format!("extraspecial@p=2,n={n},type={t}"));
            }
        }
    } else {
        ids.extend(odd_catalog(p).iter().map(|i| i.to_string()));
        for n in 1..=3 {
            for e in ["p", "p2"] {
                ids.push(format!("extraspecial@p={p},n={n},exp={e}"));
            }
        }
    }
    for ty in abelian_types() {
        let t: Vec<String> = ty.iter().map(|e| e.to_string()).collect();
        ids.push(format!("abelian@p={p},type=[{}]", t.join(",")));
    }
    ids.iter().map(|s| parse_group_id(s).map_err(CliError::from)).collect()
}

pub fn cmd_verify(args: &GroupArgs, deep: bool, all: bool) -> CliResult {
    let oracle_max = oracle_cap(args);
    if !all {
        let g = load_group(args)?;
        let checks = verify_group(&g, deep, oracle_max);
        let exit = if checks.iter().all(|c| c.passed) { 0 } else { 1 };
        return Ok(Output { stdout: verify_report(&g, &checks, args.format), exit });
    }
    if args.id.is_some() || args.presentation.is_some() {
        return Err(CliError::input("usage", "--all takes no group"));
    }
    let p = args.p.ok_or_else(|| CliError::input("usage", "--all needs --p <prime>"))?;
    let cap = args.max_order.unwrap_or(DEFAULT_ORDER_CAP);
    let ids = catalog_ids(p)?;
    let reports: Vec<(String, bool)> = ids
        .par_iter()
        .map(|id| {
            let order = (id.p as u64).checked_pow(id.presentation().ngens as u32).unwrap_or(u64::MAX);
            if order > cap {
                return (format!("skip {id}: order {order} above {cap}\n"), true);
            }
            match build_capped(id, cap) {
                Ok(g) => {
                    let checks = verify_group(&g, deep, oracle_max);
                    (verify_report(&g, &checks, Format::Text), checks.iter().all(|c| c.passed))
                }
                Err(e) => (format!("FAIL {id}: {e}\n"), false),
            }
        })
        .collect();
    let failed = reports.iter().filter(|r| !r.1).count();
    let mut s: String = reports.iter().map(|r| r.0.as_str()).collect();
    s.push_str(&format!("{} groups, {failed} failing\n", ids.len()));
    Ok(Output { stdout: s, exit: if failed == 0 { 0 } else { 1 } })
}

pub fn cmd_catalog(p: Option<u32>) -> CliResult {
    match p {
        None => {
            let mut s = String::new();
            for f in catalog_list() {
                let params = if f.params.is_empty() { "-" } else { f.params };
                s.push_str(&format!("{:<13} {:<14} {}\n", f.name, params, f.description));
            }
            Ok(Output::ok(s))
        }
        Some(p) => {
            let mut s = String::new();
            for id in catalog_ids(p)? {
                let order = (id.p as u64).pow(id.presentation().ngens as u32);
                s.push_str(&format!("{id}\t{order}\n"));
            }
            Ok(Output::ok(s))
        }
    }
}

/// Dispatch a parsed command line.
pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Wedderburn { group, method } => cmd_wedderburn(group, *method),
        Command::Reps { group, class } => cmd_reps(group, *class),
        Command::Idempotents { group } => cmd_idempotents(group),
        Command::Counting { group } => cmd_counting(group),
        Command::Verify { group, deep, all } => cmd_verify(group, *deep, *all),
        Command::Catalog { p } => cmd_catalog(*p),
    }
}
