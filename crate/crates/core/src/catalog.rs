//! Built-in catalog of groups and the group-id grammar.
//!
//! ```text
//! id     := family [ '@' param { ',' param } ]
//! param  := key '=' value | value
//! value  := integer | 'nu' | 'p' | 'p2' | '+' | '-' | '[' integer { ',' integer } ']'
//! ```
//!
//! A bare value is the group order for the order-16 groups (`g1@16`) and the
//! prime otherwise (`phi2_21@3`).

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{build_group, PcGroup, PcPresentation};

/// One catalog family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub description: &'static str,
}

const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { name: "phi2_21", params: "p", description: "order p^3, exponent p^2: [a1,a]=a^p=a2" },
    FamilyInfo { name: "phi2_111", params: "p", description: "order p^3, exponent p: [a1,a]=a2" },
    FamilyInfo { name: "phi2_211a", params: "p", description: "order p^4: [a1,a]=a^p=a2, a3 central" },
    FamilyInfo { name: "phi2_211b", params: "p", description: "order p^4: [a1,a]=c^p=a2" },
    FamilyInfo { name: "phi2_211c", params: "p", description: "order p^4: [a1,a]=a2, a^(p^2)=1" },
    FamilyInfo { name: "phi2_1111", params: "p", description: "order p^4: [a1,a]=a2, exponent p" },
    FamilyInfo { name: "phi2_31", params: "p", description: "order p^4: [a1,a]=a^(p^2)=a2" },
    FamilyInfo { name: "phi2_22", params: "p", description: "order p^4: [a1,a]=a^p=a2, a1^(p^2)=1" },
    FamilyInfo { name: "phi3_211a", params: "p", description: "order p^4: [a1,a]=a2, [a2,a]=a^p=a3" },
    FamilyInfo {
        name: "phi3_211b",
        params: "p,r",
        description: "order p^4: [a1,a]=a2, [a2,a]^r=a1^p=a3; r=1 or r=nu",
    },
    FamilyInfo { name: "phi3_1111", params: "p", description: "order p^4: [a1,a]=a2, [a2,a]=a3" },
    FamilyInfo { name: "q8", params: "", description: "quaternion group of order 8" },
    FamilyInfo { name: "d8", params: "", description: "dihedral group of order 8" },
    FamilyInfo { name: "g1", params: "16", description: "<x,y,z : x^4=y^2=z^2=1, [y,z]=x^2>" },
    FamilyInfo { name: "g2", params: "16", description: "<x,y : x^8=y^2=1, [x,y]=x^4>" },
    FamilyInfo { name: "g3", params: "16", description: "<x,y,z : x^4=y^2=z^2=1, [x,y]=x^2>" },
    FamilyInfo { name: "g4", params: "16", description: "<x,y,z : x^4=y^2=z^2=1, [x,y]=z>" },
    FamilyInfo { name: "g5", params: "16", description: "<x,y : x^4=y^4=1, [x,y]=x^2>" },
    FamilyInfo { name: "g6", params: "16", description: "<x,y,z : x^4=y^4=z^2=1, [x,y]=x^2=y^2>" },
    FamilyInfo { name: "d16", params: "", description: "dihedral group of order 16" },
    FamilyInfo { name: "sd16", params: "", description: "semidihedral group of order 16" },
    FamilyInfo { name: "q16", params: "", description: "generalized quaternion group of order 16" },
    FamilyInfo {
        name: "extraspecial",
        params: "p,n,exp|type",
        description: "extraspecial p^(1+2n), n<=3; exp=p or p2 for odd p, type=+ or - for p=2",
    },
    FamilyInfo { name: "abelian", params: "p,type", description: "abelian group of type [e1,...], order <= p^4" },
];

/// The catalog families.
pub fn catalog_list() -> &'static [FamilyInfo] {
    FAMILIES
}

/// A parsed and validated catalog group id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupId {
    pub family: String,
    pub p: u32,
    /// `r` for `phi3_211b`, `n` for `extraspecial`.
    pub k: u32,
    /// `exp` (1 or 2) for odd extraspecial groups; sign (1 plus, 2 minus) for `p = 2`.
    pub variant: u32,
    /// Cyclic factor exponents for `abelian`.
    pub abelian_type: Vec<u32>,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Smallest positive quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(p: u32) -> u32 {
    let p = p as u64;
    (2..p)
        .find(|&a| {
            let mut r = 1u64;
            let mut b = a % p;
            let mut e = (p - 1) / 2;
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            r == p - 1
        })
        .expect("odd primes have non-residues") as u32
}

fn is_square_mod(a: u32, p: u32) -> bool {
    (1..p).any(|x| (x as u64 * x as u64) % p as u64 == a as u64 % p as u64)
}

struct Param {
    pos: usize,
    key: Option<String>,
    value: String,
}

fn split_params(text: &str, base: usize) -> Result<Vec<Param>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<char> = text.chars().collect();
    let push = |s: usize, e: usize, out: &mut Vec<Param>| -> Result<()> {
        let piece: String = bytes[s..e].iter().collect();
        if piece.is_empty() {
            return err(base + s, "empty parameter");
        }
        match piece.split_once('=') {
            Some((k, v)) => {
                if k.is_empty() || !k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return err(base + s, format!("bad parameter name `{k}`"));
                }
                out.push(Param { pos: base + s, key: Some(k.to_string()), value: v.to_string() })
            }
            None => out.push(Param { pos: base + s, key: None, value: piece }),
        }
        Ok(())
    };
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return err(base + i, "unbalanced `]`");
                }
            }
            ',' if depth == 0 => {
                push(start, i, &mut out)?;
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(base + text.len(), "unbalanced `[`");
    }
    push(start, bytes.len(), &mut out)?;
    Ok(out)
}

fn int(pos: usize, v: &str) -> Result<u32> {
    v.parse::<u32>().or_else(|_| err(pos, format!("expected an integer, found `{v}`")))
}

/// Parse a group id such as `phi3_211b@p=5,r=nu` or `g6@16`.
pub fn parse_group_id(text: &str) -> Result<GroupId> {
    let text = text.trim();
    let (fam, rest, rest_pos) = match text.find('@') {
        Some(i) => (&text[..i], Some(&text[i + 1..]), i + 1),
        None => (text, None, text.len()),
    };
    if fam.is_empty() {
        return err(0, "missing family name");
    }
    if let Some(i) = fam.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
        return err(i, format!("unexpected character `{}`", fam[i..].chars().next().unwrap()));
    }
    let fam = fam.to_ascii_lowercase();
    let info = FAMILIES
        .iter()
        .find(|f| f.name == fam)
        .ok_or_else(|| Error::UnknownFamily(fam.clone()))?;
    let params = match rest {
        Some(r) => split_params(r, rest_pos)?,
        None => Vec::new(),
    };
    let mut id = GroupId { family: fam.clone(), p: 2, k: 0, variant: 0, abelian_type: Vec::new() };
    let order16 = fam.len() == 2 && fam.starts_with('g');
    let mut p: Option<(usize, u32)> = None;
    let mut r: Option<(usize, String)> = None;
    let mut n: Option<(usize, u32)> = None;
    let mut exp: Option<(usize, String)> = None;
    let mut ty: Option<(usize, String)> = None;
    for prm in &params {
        let key = match (&prm.key, order16) {
            (Some(k), _) => k.as_str(),
            (None, true) => "order",
            (None, false) => "p",
        };
        match key {
            "p" => p = Some((prm.pos, int(prm.pos, &prm.value)?)),
            "order" if order16 => {
                if prm.value != "16" {
                    return err(prm.pos, "the groups g1..g6 have order 16");
                }
            }
            "r" if fam == "phi3_211b" => r = Some((prm.pos, prm.value.clone())),
            "n" if fam == "extraspecial" => n = Some((prm.pos, int(prm.pos, &prm.value)?)),
            "exp" if fam == "extraspecial" => exp = Some((prm.pos, prm.value.clone())),
            "type" if fam == "extraspecial" || fam == "abelian" => ty = Some((prm.pos, prm.value.clone())),
            _ => return err(prm.pos, format!("unexpected parameter `{key}` for {fam}")),
        }
    }
    let needs_p = info.params.starts_with('p');
    match (needs_p, p) {
        (true, None) => return err(text.len(), format!("{fam} needs a prime `p`")),
        (true, Some((pos, v))) => {
            if !is_prime(v as u64) {
                return err(pos, format!("{v} is not prime"));
            }
            id.p = v;
        }
        (false, Some((pos, _))) => return err(pos, format!("{fam} takes no prime")),
        (false, None) => {}
    }
    if fam.starts_with("phi") && id.p == 2 {
        return err(p.unwrap().0, format!("{fam} is defined for odd primes only"));
    }
    match fam.as_str() {
        "phi3_211b" => {
            let (pos, v) = r.unwrap_or((text.len(), "1".into()));
            let nu = smallest_nonresidue(id.p);
            id.k = if v == "nu" { nu } else { int(pos, &v)? };
            if id.k.is_multiple_of(id.p) {
                return err(pos, "r must be a unit modulo p");
            }
            // only the square class of r matters; keep the canonical representative
            id.k = if is_square_mod(id.k, id.p) { 1 } else { nu };
        }
        "extraspecial" => {
            let (pos, nv) = n.unwrap_or((text.len(), 1));
            if !(1..=3).contains(&nv) {
                return err(pos, "n must be 1, 2 or 3");
            }
            id.k = nv;
            if id.p == 2 {
                if let Some((pos, _)) = exp {
                    return err(pos, "use type=+ or type=- for p=2");
                }
                id.variant = match &ty {
                    None => 1,
                    Some((_, t)) if t == "+" || t == "plus" => 1,
                    Some((_, t)) if t == "-" || t == "minus" => 2,
                    Some((pos, t)) => return err(*pos, format!("unknown type `{t}`")),
                };
            } else {
                if let Some((pos, _)) = ty {
                    return err(pos, "type applies to p=2 only; use exp=p or exp=p2");
                }
                id.variant = match &exp {
                    None => 1,
                    Some((_, e)) if e == "p" => 1,
                    Some((_, e)) if e == "p2" || e == "p^2" => 2,
                    Some((pos, e)) => return err(*pos, format!("unknown exponent `{e}`")),
                };
            }
        }
        "abelian" => {
            let Some((pos, t)) = ty else {
                return err(text.len(), "abelian needs `type=[e1,...]`");
            };
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse { pos, msg: "type must look like [2,1]".into() })?;
            let mut v = Vec::new();
            if !inner.is_empty() {
                for part in inner.split(',') {
                    let e = int(pos, part.trim())?;
                    if e == 0 {
                        return err(pos, "type entries must be positive");
                    }
                    v.push(e);
                }
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
            if v.iter().sum::<u32>() > 4 {
                return err(pos, "abelian types are limited to order p^4");
            }
            id.abelian_type = v;
        }
        _ => {}
    }
    Ok(id)
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family.as_str();
        match fam {
            "q8" | "d8" | "d16" | "sd16" | "q16" => write!(f, "{fam}"),
            _ if fam.len() == 2 && fam.starts_with('g') => write!(f, "{fam}@16"),
            "phi3_211b" => {
                let r = if self.k == 1 { "1".to_string() } else { "nu".to_string() };
                write!(f, "{fam}@p={},r={r}", self.p)
            }
            "extraspecial" => {
                if self.p == 2 {
                    let t = if self.variant == 1 { "+" } else { "-" };
                    write!(f, "{fam}@p=2,n={},type={t}", self.k)
                } else {
                    let e = if self.variant == 1 { "p" } else { "p2" };
                    write!(f, "{fam}@p={},n={},exp={e}", self.p, self.k)
                }
            }
            "abelian" => {
                let t: Vec<String> = self.abelian_type.iter().map(|e| e.to_string()).collect();
                write!(f, "{fam}@p={},type=[{}]", self.p, t.join(","))
            }
            _ => write!(f, "{fam}@p={}", self.p),
        }
    }
}

type Rel = (usize, usize, &'static [(usize, u32)]);

fn pres(p: u32, n: usize, powers: &[(usize, &[(usize, u32)])], comms: &[Rel]) -> PcPresentation {
    let mut pr = PcPresentation::new(p, n);
    for &(i, w) in powers {
        pr.set_power(i, w);
    }
    for &(j, i, w) in comms {
        pr.set_comm(j, i, w);
    }
    pr
}

impl GroupId {
    /// The pc presentation of this catalog group.
    ///
    /// Generators follow the order `a, a1, a2, a3` where possible,
    /// with extra generators for powers inserted as needed.
    pub fn presentation(&self) -> PcPresentation {
        let p = self.p;
        match self.family.as_str() {
            // a, a1, a2 = a^p
            "phi2_21" => pres(p, 3, &[(1, &[(3, 1)])], &[(2, 1, &[(3, 1)])]),
            "phi2_111" => pres(p, 3, &[], &[(2, 1, &[(3, 1)])]),
            // a, a1, a2 = a^p, a3
            "phi2_211a" => pres(p, 4, &[(1, &[(3, 1)])], &[(2, 1, &[(3, 1)])]),
            // a, a1, c, a2 = c^p
            "phi2_211b" => pres(p, 4, &[(3, &[(4, 1)])], &[(2, 1, &[(4, 1)])]),
            // a, a1, a^p, a2
            "phi2_211c" => pres(p, 4, &[(1, &[(3, 1)])], &[(2, 1, &[(4, 1)])]),
            // a, a1, a2, a3
            "phi2_1111" => pres(p, 4, &[], &[(2, 1, &[(3, 1)])]),
            // a, a1, a^p, a2 = a^(p^2)
            "phi2_31" => pres(p, 4, &[(1, &[(3, 1)]), (3, &[(4, 1)])], &[(2, 1, &[(4, 1)])]),
            // a, a1, a2 = a^p, a1^p
            "phi2_22" => pres(p, 4, &[(1, &[(3, 1)]), (2, &[(4, 1)])], &[(2, 1, &[(3, 1)])]),
            // a, a1, a2, a3 = a^p
            "phi3_211a" => pres(p, 4, &[(1, &[(4, 1)])], &[(2, 1, &[(3, 1)]), (3, 1, &[(4, 1)])]),
            // a, a1, a2, a3 = [a2,a]; a1^p = a3^r
            "phi3_211b" => {
                let mut pr = pres(p, 4, &[], &[(2, 1, &[(3, 1)]), (3, 1, &[(4, 1)])]);
                pr.set_power(2, &[(4, self.k % p)]);
                pr
            }
            "phi3_1111" => phi3_1111(p),
            // x, y, x^2 = y^2
            "q8" => pres(2, 3, &[(1, &[(3, 1)]), (2, &[(3, 1)])], &[(2, 1, &[(3, 1)])]),
            // a, b, a^2
            "d8" => pres(2, 3, &[(1, &[(3, 1)])], &[(2, 1, &[(3, 1)])]),
            // x, y, z, x^2
            "g1" => pres(2, 4, &[(1, &[(4, 1)])], &[(3, 2, &[(4, 1)])]),
            // x, y, x^2, x^4
            "g2" => pres(2, 4, &[(1, &[(3, 1)]), (3, &[(4, 1)])], &[(2, 1, &[(4, 1)])]),
            // x, y, z, x^2
            "g3" => pres(2, 4, &[(1, &[(4, 1)])], &[(2, 1, &[(4, 1)])]),
            // x, y, x^2, z
            "g4" => pres(2, 4, &[(1, &[(3, 1)])], &[(2, 1, &[(4, 1)])]),
            // x, y, x^2, y^2
            "g5" => pres(2, 4, &[(1, &[(3, 1)]), (2, &[(4, 1)])], &[(2, 1, &[(3, 1)])]),
            // x, y, z, x^2 = y^2
            "g6" => pres(2, 4, &[(1, &[(4, 1)]), (2, &[(4, 1)])], &[(2, 1, &[(4, 1)])]),
            // a, b, a^2, a^4
            "d16" => pres(2, 4, &[(1, &[(3, 1)]), (3, &[(4, 1)])], &[(2, 1, &[(3, 1)]), (3, 2, &[(4, 1)])]),
            "sd16" => pres(
                2,
                4,
                &[(1, &[(3, 1)]), (3, &[(4, 1)])],
                &[(2, 1, &[(3, 1), (4, 1)]), (3, 2, &[(4, 1)])],
            ),
            "q16" => pres(
                2,
                4,
                &[(1, &[(3, 1)]), (2, &[(4, 1)]), (3, &[(4, 1)])],
                &[(2, 1, &[(3, 1)]), (3, 2, &[(4, 1)])],
            ),
            "extraspecial" => extraspecial(p, self.k as usize, self.variant),
            "abelian" => abelian(p, &self.abelian_type),
            other => unreachable!("family {other} is validated at parse time"),
        }
    }

    /// Build the group, tagging it with its family and label.
    pub fn build(&self) -> Result<PcGroup> {
        let mut g = build_group(self.presentation())?;
        g.set_family(&self.family);
        g.set_label(&self.to_string());
        Ok(g)
    }
}

/// `[a1,a]=a2, [a2,a]=a3` with all generators of order `p`.
///
/// At `p = 3` this group is isomorphic to `phi3_211a`; the variant with
/// `a1^3 = a3^-1` is isomorphic to `phi3_211b` with `r = nu` instead.
fn phi3_1111(p: u32) -> PcPresentation {
    pres(p, 4, &[], &[(2, 1, &[(3, 1)]), (3, 1, &[(4, 1)])])
}

/// Generators `x1, y1, ..., xn, yn, z` with `[yi, xi] = z`.
fn extraspecial(p: u32, n: usize, variant: u32) -> PcPresentation {
    let m = 2 * n + 1;
    let mut pr = PcPresentation::new(p, m);
    for i in 0..n {
        pr.set_comm(2 * i + 2, 2 * i + 1, &[(m, 1)]);
    }
    if p == 2 {
        if variant == 2 {
            pr.set_power(1, &[(m, 1)]).set_power(2, &[(m, 1)]);
        }
    } else if variant == 2 {
        pr.set_power(1, &[(m, 1)]);
    }
    pr
}

/// Direct product of cyclic groups of orders `p^e`, one generator chain per factor.
fn abelian(p: u32, ty: &[u32]) -> PcPresentation {
    let n: usize = ty.iter().map(|&e| e as usize).sum();
    let mut pr = PcPresentation::new(p, n);
    let mut k = 1;
    for &e in ty {
        for j in 0..e as usize - 1 {
            pr.set_power(k + j, &[(k + j + 1, 1)]);
        }
        k += e as usize;
    }
    pr
}

/// Every catalog group for a given odd prime, in catalog order.
pub fn odd_catalog(p: u32) -> Vec<GroupId> {
    let mut ids: Vec<String> = [
        "phi2_21", "phi2_111", "phi2_211a", "phi2_211b", "phi2_211c", "phi2_1111", "phi2_31", "phi2_22",
        "phi3_211a", "phi3_1111",
    ]
    .iter()
    .map(|f| format!("{f}@p={p}"))
    .collect();
    ids.insert(9, format!("phi3_211b@p={p},r=1"));
    ids.insert(10, format!("phi3_211b@p={p},r=nu"));
    ids.iter().map(|s| parse_group_id(s).expect("catalog ids parse")).collect()
}

/// The 2-groups of the catalog.
pub fn two_group_catalog() -> Vec<GroupId> {
    ["q8", "d8", "g1@16", "g2@16", "g3@16", "g4@16", "g5@16", "g6@16", "d16", "sd16", "q16"]
        .iter()
        .map(|s| parse_group_id(s).expect("catalog ids parse"))
        .collect()
}

/// Abelian types of order `p^1 .. p^4`.
pub fn abelian_types() -> Vec<Vec<u32>> {
    vec![
        vec![1],
        vec![2],
        vec![1, 1],
        vec![3],
        vec![2, 1],
        vec![1, 1, 1],
        vec![4],
        vec![3, 1],
        vec![2, 2],
        vec![2, 1, 1],
        vec![1, 1, 1, 1],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_and_display() {
        let id = parse_group_id("phi3_211b@p=5,r=nu").unwrap();
        assert_eq!(id.k, 2);
        assert_eq!(id.to_string(), "phi3_211b@p=5,r=nu");
        assert_eq!(parse_group_id("phi3_211b@p=5,r=4").unwrap().k, 1);
        assert_eq!(parse_group_id("g6@16").unwrap().to_string(), "g6@16");
        assert_eq!(parse_group_id("phi2_21@3").unwrap().to_string(), "phi2_21@p=3");
        let a = parse_group_id("abelian@p=3,type=[1,2,1]").unwrap();
        assert_eq!(a.abelian_type, vec![2, 1, 1]);
        assert_eq!(a.to_string(), "abelian@p=3,type=[2,1,1]");
        for id in odd_catalog(3).into_iter().chain(two_group_catalog()) {
            assert_eq!(parse_group_id(&id.to_string()).unwrap(), id);
        }
    }

    #[test]
    fn id_errors() {
        assert!(matches!(parse_group_id("phi9@p=3"), Err(Error::UnknownFamily(_))));
        assert!(matches!(parse_group_id("phi2_21@p=2"), Err(Error::Parse { pos: 8, .. })));
        assert!(matches!(parse_group_id("phi2_21@p=4"), Err(Error::Parse { pos: 8, .. })));
        assert!(matches!(parse_group_id("phi2_21"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_id("abelian@p=3,type=[2,2,1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_id("q8@p=3"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_group_id("phi2_2$"), Err(Error::Parse { pos: 6, .. })));
    }

    #[test]
    fn nonresidues() {
        assert_eq!(smallest_nonresidue(3), 2);
        assert_eq!(smallest_nonresidue(5), 2);
        assert_eq!(smallest_nonresidue(7), 3);
    }

    #[test]
    fn every_catalog_group_builds() {
        for p in [3, 5] {
            for id in odd_catalog(p) {
                let g = id.build().unwrap();
                assert_eq!(g.order(), (p as usize).pow(4).min(g.order()), "{id}");
            }
        }
        for id in two_group_catalog() {
            id.build().unwrap();
        }
        for ty in abelian_types() {
            let id = GroupId { family: "abelian".into(), p: 3, k: 0, variant: 0, abelian_type: ty };
            assert!(id.build().unwrap().is_abelian());
        }
        for n in 1..=2 {
            for v in 1..=2 {
                for p in [2, 3] {
                    let id = GroupId { family: "extraspecial".into(), p, k: n, variant: v, abelian_type: vec![] };
                    let g = id.build().unwrap();
                    assert_eq!(g.center().order(), p as usize);
                    assert!(g.is_vz());
                }
            }
        }
    }
}
