//! Text and LaTeX renderings.

use std::collections::BTreeMap;

use ratrep_core::reps::{PairCharacter, RationalRep};
use ratrep_core::{AlgebraElement, Decomposition, Division, FieldDescriptor, PcGroup, Rational, RationalMatrix, WedderburnComponent};

use crate::json::{MatrixJson, RepJson};

/// Normal-form word of an element, e.g. `g1^2 g3`, or `1` for the identity.
pub fn element_word(g: &PcGroup, x: u32) -> String {
    let parts: Vec<String> = g
        .exps(x)
        .into_iter()
        .enumerate()
        .filter(|(_, e)| *e > 0)
        .map(|(i, e)| if e == 1 { format!("g{}", i + 1) } else { format!("g{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn latex_word(g: &PcGroup, x: u32) -> String {
    let parts: Vec<String> = g
        .exps(x)
        .into_iter()
        .enumerate()
        .filter(|(_, e)| *e > 0)
        .map(|(i, e)| if e == 1 { format!("g_{{{}}}", i + 1) } else { format!("g_{{{}}}^{{{e}}}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn field_latex(f: &FieldDescriptor) -> String {
    let n = f.conductor;
    if f.is_rational() {
        "\\mathbb{Q}".into()
    } else if f.stabilizer == [1] {
        format!("\\mathbb{{Q}}(\\zeta_{{{n}}})")
    } else if f.stabilizer == [1, n - 1] {
        format!("\\mathbb{{Q}}(\\zeta_{{{n}}}+\\zeta_{{{n}}}^{{-1}})")
    } else if n.is_multiple_of(8) && f.stabilizer == [1, n / 2 - 1] {
        format!("\\mathbb{{Q}}(\\zeta_{{{n}}}-\\zeta_{{{n}}}^{{-1}})")
    } else {
        let s: Vec<String> = f.stabilizer.iter().map(|k| k.to_string()).collect();
        format!("\\mathbb{{Q}}(\\zeta_{{{n}}})^{{\\langle {} \\rangle}}", s.join(","))
    }
}

fn component_latex(c: &WedderburnComponent) -> String {
    let d = match &c.division {
        Division::Field => field_latex(&c.center),
        Division::RationalQuaternion => "\\mathbb{H}(\\mathbb{Q})".into(),
        Division::DivisionAlgebra { degree } => format!("D_{{{degree}}}[{}]", field_latex(&c.center)),
    };
    let body = if c.matrix_size == 1 { d } else { format!("M_{{{}}}({d})", c.matrix_size) };
    if c.multiplicity == 1 {
        body
    } else {
        format!("{}\\,{body}", c.multiplicity)
    }
}

/// `\mathbb{Q}G \cong ... \oplus ...`.
pub fn decomposition_latex(d: &Decomposition) -> String {
    let parts: Vec<String> = d.components.iter().map(component_latex).collect();
    format!("\\mathbb{{Q}}G \\cong {}", parts.join(" \\oplus "))
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if *r.numer() < 0.into() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    }
}

fn matrix_text(m: &RationalMatrix, indent: &str) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>w$}")).collect();
            format!("{indent}[{}]\n", cells.join(" "))
        })
        .collect()
}

fn matrix_latex(m: &RationalMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(rational_latex).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

fn subgroup_words(g: &PcGroup, rep: &RationalRep) -> Option<Vec<String>> {
    rep.pair.as_ref().map(|p| p.subgroup.gens().iter().map(|&x| element_word(g, x)).collect())
}

fn rep_header(g: &PcGroup, i: usize, rep: &RationalRep) -> String {
    let field = rep.afforded.field.name();
    let mut s = format!(
        "class {i}: degree {}, Q(chi) = {field}, Schur index {}\n",
        rep.degree, rep.afforded.schur_index
    );
    if let Some(pair) = &rep.pair {
        let gens: Vec<String> = pair.subgroup.gens().iter().map(|&x| element_word(g, x)).collect();
        let kind = match pair.psi {
            PairCharacter::Linear(_) => "linear",
            PairCharacter::Nonlinear(_) => "nonlinear",
        };
        s.push_str(&format!(
            "  pair: H = <{}> of order {}, {kind} psi of order {}, {:?}, {:?}\n",
            gens.join(", "),
            pair.subgroup.order(),
            pair.realization.order(),
            pair.relation,
            pair.quotient_type
        ));
    }
    let ts: Vec<String> = rep.transversal.iter().map(|&t| element_word(g, t)).collect();
    s.push_str(&format!("  transversal: {}\n", ts.join(", ")));
    s
}

pub fn reps_text(g: &PcGroup, reps: &[(usize, RationalRep)]) -> String {
    let mut s = String::new();
    for (i, rep) in reps {
        s.push_str(&rep_header(g, *i, rep));
        for (k, m) in rep.images.iter().enumerate() {
            s.push_str(&format!("  g{} =\n", k + 1));
            s.push_str(&matrix_text(m, "    "));
        }
    }
    s
}

pub fn rep_json(g: &PcGroup, i: usize, rep: &RationalRep) -> RepJson {
    RepJson {
        class: i,
        degree: rep.degree,
        field: rep.afforded.field.name(),
        schur_index: rep.afforded.schur_index,
        subgroup: subgroup_words(g, rep),
        transversal: rep.transversal.iter().map(|&t| element_word(g, t)).collect(),
        generators: rep
            .images
            .iter()
            .enumerate()
            .map(|(k, m)| MatrixJson {
                generator: format!("g{}", k + 1),
                rows: m.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
            })
            .collect(),
    }
}

pub fn reps_latex(_g: &PcGroup, reps: &[(usize, RationalRep)]) -> String {
    let mut s = String::new();
    for (i, rep) in reps {
        s.push_str(&format!("% class {i}, degree {}\n", rep.degree));
        for (k, m) in rep.images.iter().enumerate() {
            s.push_str(&format!("\\rho_{{{i}}}(g_{{{}}}) = {}\n", k + 1, matrix_latex(m)));
        }
    }
    s
}

/// Coefficients of a rational element grouped by value, in element order.
fn grouped(e: &AlgebraElement) -> Vec<(Rational, Vec<u32>)> {
    let coeffs = e.rational_coeffs().expect("rational idempotents");
    let mut by: BTreeMap<Rational, Vec<u32>> = BTreeMap::new();
    for (x, c) in coeffs.into_iter().enumerate() {
        if c != Rational::from_integer(0.into()) {
            by.entry(c).or_default().push(x as u32);
        }
    }
    let mut v: Vec<_> = by.into_iter().collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    v
}

/// Coefficient strings with the elements carrying them.
pub fn terms(g: &PcGroup, e: &AlgebraElement) -> Vec<(String, Vec<String>)> {
    grouped(e)
        .into_iter()
        .map(|(c, xs)| (c.to_string(), xs.into_iter().map(|x| element_word(g, x)).collect()))
        .collect()
}

pub type IdempotentItem = (usize, WedderburnComponent, usize, AlgebraElement);

pub fn idempotents_text(g: &PcGroup, items: &[IdempotentItem]) -> String {
    let mut s = String::new();
    for (i, c, dim, e) in items {
        s.push_str(&format!("e{i}: {} (dimension {dim})\n", c.body()));
        for (coeff, xs) in terms(g, e) {
            s.push_str(&format!("  {coeff:>6} * [{}]\n", xs.join(", ")));
        }
    }
    s
}

pub fn idempotents_latex(g: &PcGroup, items: &[IdempotentItem]) -> String {
    let mut s = String::new();
    for (i, c, _, e) in items {
        let parts: Vec<String> = grouped(e)
            .into_iter()
            .map(|(coeff, xs)| {
                let ws: Vec<String> = xs.into_iter().map(|x| latex_word(g, x)).collect();
                format!("{}({})", rational_latex(&coeff), ws.join(" + "))
            })
            .collect();
        s.push_str(&format!("e_{{{i}}} = {} \\quad % {}\n", parts.join(" + "), component_latex(c)));
    }
    s
}

pub fn counting_latex(t: &BTreeMap<u64, u64>) -> String {
    t.iter()
        .map(|(d, c)| format!("|\\mathrm{{Irr}}_{{\\mathbb{{Q}}}}^{{({d})}}(G)| = {c}\n"))
        .collect()
}
