//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(z_n)` is stored in the power basis `1, z, ..., z^(phi(n)-1)`
//! modulo the cyclotomic polynomial `Phi_n`, as integer numerators over one
//! common positive denominator.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut r = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            r -= r / d;
        }
        d += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r
}

/// Residues `k` in `[0, n)` with `gcd(k, n) = 1`; for `n = 1` this is `[0]`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|k| k.gcd(&n) == 1).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let dq = r.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

/// The cyclotomic polynomial `Phi_n`, coefficients from the constant term up.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in divisors(n) {
        if d < n {
            den = poly_mul_int(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_monic(&num, &den)
}

/// Reduction data for one order: `z^k` in the power basis for `0 <= k < n`.
struct CycTable {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

fn table(n: u64) -> Arc<CycTable> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let phi_poly = cyclotomic_poly(n);
    let phi = phi_poly.len() - 1;
    let low: Vec<i64> = phi_poly[..phi]
        .iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient fits in i64"))
        .collect();
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by z and reduce z^phi = -sum low[i] z^i
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1] - top * low[i];
        }
        cur[0] = -top * low[0];
    }
    let t = Arc::new(CycTable { phi, powers });
    cache.write().unwrap().insert(n, t.clone());
    t
}

/// An exact element of `Q(z_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn from_parts(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -&*x;
            }
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if num.iter().all(|x| x.is_zero()) {
            den = BigInt::one();
        } else if !g.is_one() {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den /= g;
        }
        CycNum { n, num, den }
    }

    /// Reduce a vector of integer coefficients of `z^k`, `k < n`, over `den`.
    fn from_power_sums(n: u64, t: &[BigInt], den: BigInt) -> Self {
        let tab = table(n);
        let mut num: Vec<BigInt> = t[..tab.phi.min(t.len())].to_vec();
        num.resize(tab.phi, BigInt::zero());
        for (k, c) in t.iter().enumerate().skip(tab.phi) {
            if c.is_zero() {
                continue;
            }
            for (i, &w) in tab.powers[k].iter().enumerate() {
                if w != 0 {
                    num[i] += c * w;
                }
            }
        }
        Self::from_parts(n, num, den)
    }

    pub fn zero(n: u64) -> Self {
        let phi = table(n).phi;
        CycNum { n, num: vec![BigInt::zero(); phi], den: BigInt::one() }
    }

    pub fn one(n: u64) -> Self {
        Self::from_rational(n, &Rational::one())
    }

    pub fn from_int(n: u64, v: i64) -> Self {
        Self::from_rational(n, &Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(n: u64, r: &Rational) -> Self {
        let mut c = Self::zero(n);
        c.num[0] = r.numer().clone();
        c.den = r.denom().clone();
        Self::from_parts(n, c.num, c.den)
    }

    /// `z_n^k`.
    pub fn zeta(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let tab = table(n);
        let num = tab.powers[e].iter().map(|&x| BigInt::from(x)).collect();
        CycNum { n, num, den: BigInt::one() }
    }

    /// `sum_k counts[k] z_n^k` for `counts` of length `n`.
    pub fn from_root_counts(n: u64, counts: &[i64]) -> Self {
        let t: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_power_sums(n, &t, BigInt::one())
    }

    /// Build from rational coordinates in the power basis.
    pub fn from_coeffs(n: u64, coeffs: &[Rational]) -> Self {
        let phi = table(n).phi;
        assert_eq!(coeffs.len(), phi, "coefficient vector must have length phi(n)");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(n, num, den)
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Coordinates in the power basis.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|x| Rational::new(x.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|x| x.is_zero())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|x| x.is_zero()) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-express in `Q(z_m)` for a multiple `m` of the current order.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.n), "lift target must be a multiple of the order");
        if m == self.n {
            return self.clone();
        }
        let s = (m / self.n) as usize;
        let mut t = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            t[i * s] = c.clone();
        }
        Self::from_power_sums(m, &t, self.den.clone())
    }

    /// Re-express in `Q(z_m)` for a divisor `m` of the order, if the value lies there.
    pub fn lower(&self, m: u64) -> Option<Self> {
        if !self.n.is_multiple_of(m) {
            return None;
        }
        if m == self.n {
            return Some(self.clone());
        }
        if m == 1 {
            return self.to_rational().map(|r| CycNum::from_rational(1, &r));
        }
        let s = (self.n / m) as usize;
        let phi_m = table(m).phi;
        if radical(self.n) == radical(m) {
            // Phi_n(X) = Phi_m(X^s): the subfield sits on every s-th coordinate
            let mut num = vec![BigInt::zero(); phi_m];
            for (i, c) in self.num.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if i % s != 0 {
                    return None;
                }
                num[i / s] = c.clone();
            }
            return Some(Self::from_parts(m, num, self.den.clone()));
        }
        // general case: solve for coordinates against the lifted basis of Q(z_m)
        let basis: Vec<Vec<Rational>> =
            (0..phi_m as i64).map(|k| CycNum::zeta(m, k).lift(self.n).coeffs()).collect();
        let target = self.coeffs();
        let x = solve_in_span(&basis, &target)?;
        Some(CycNum::from_coeffs(m, &x))
    }

    fn common(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    pub fn add_ref(&self, other: &CycNum) -> CycNum {
        if self.n != other.n {
            let (a, b) = Self::common(self, other);
            return a.add_ref(&b);
        }
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self.num.iter().zip(&other.num).map(|(x, y)| x * &fa + y * &fb).collect();
        Self::from_parts(self.n, num, den)
    }

    pub fn neg_ref(&self) -> CycNum {
        CycNum { n: self.n, num: self.num.iter().map(|x| -x).collect(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, other: &CycNum) -> CycNum {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &CycNum) -> CycNum {
        if self.n != other.n {
            let (a, b) = Self::common(self, other);
            return a.mul_ref(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let n = self.n as usize;
        let mut t = vec![BigInt::zero(); n];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    t[(i + j) % n] += x * y;
                }
            }
        }
        Self::from_power_sums(self.n, &t, &self.den * &other.den)
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        let num = self.num.iter().map(|x| x * r.numer()).collect();
        Self::from_parts(self.n, num, &self.den * r.denom())
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Phi_n`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a: Vec<Rational> = trim(self.coeffs());
        let m: Vec<Rational> =
            cyclotomic_poly(self.n).into_iter().map(Rational::from_integer).collect();
        // invariant: r_i = s_i * a (mod m)
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Phi_n is irreducible
        let c = r1[0].clone();
        let phi = table(self.n).phi;
        let mut coeffs = vec![Rational::zero(); phi];
        let s_red = poly_rem(&s1, &cyclotomic_poly(self.n).into_iter().map(Rational::from_integer).collect::<Vec<_>>());
        for (i, v) in s_red.into_iter().enumerate() {
            coeffs[i] = v / &c;
        }
        Ok(CycNum::from_coeffs(self.n, &coeffs))
    }

    pub fn div_ref(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// The automorphism `z_n -> z_n^k`.
    pub fn galois(&self, k: i64) -> Result<CycNum> {
        let n = self.n as i64;
        let kk = k.rem_euclid(n);
        if (kk as u64).gcd(&self.n) != 1 {
            return Err(Error::NotAUnit { k: k.unsigned_abs(), n: self.n });
        }
        let mut t = vec![BigInt::zero(); self.n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                t[((i as i64 * kk) % n) as usize] = c.clone();
            }
        }
        Ok(Self::from_power_sums(self.n, &t, self.den.clone()))
    }

    /// Complex conjugate, `z -> z^-1`.
    pub fn conj(&self) -> CycNum {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn pow(&self, e: u64) -> CycNum {
        let mut acc = CycNum::one(self.n);
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

/// `galois_apply(n, k, x)`: apply `z_n -> z_n^k` to `x` after lifting it to order `n`.
pub fn galois_apply(n: u64, k: i64, x: &CycNum) -> Result<CycNum> {
    let m = n.lcm(&x.order());
    if m != n {
        return Err(Error::NotApplicable(format!(
            "element of order {} does not lie in Q(z{})",
            x.order(),
            n
        )));
    }
    x.lift(n).galois(k)
}

fn radical(mut n: u64) -> u64 {
    let mut r = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            r *= d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let t = &c * bj;
                r[k + j] -= t;
            }
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    if db == 0 {
        r = vec![Rational::zero()];
    }
    (trim(q), trim(r))
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    poly_divrem(a, b).1
}

/// Solve `sum x_i basis_i = target` exactly; `None` if the target is outside the span.
fn solve_in_span(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let rows = target.len();
    // augmented matrix, one row per coordinate
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, pr);
        let inv = m[row][col].recip();
        for c in col..=k {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let t = &f * &m[row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mon = match i {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, i),
            };
            if mon.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mon)?;
            } else {
                write!(f, "{}*{}", a, mon)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$imp(rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$imp(&rhs)
            }
        }
    };
}
forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

/// A subfield of a cyclotomic field, described as the fixed field of a
/// subgroup of `(Z/n)^x` inside `Q(z_n)` with `n` the minimal conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    pub conductor: u64,
    /// Sorted residues modulo `conductor`.
    pub stabilizer: Vec<u64>,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor { conductor: 1, stabilizer: vec![0] }
    }

    /// The full cyclotomic field `Q(z_n)` in canonical form.
    pub fn cyclotomic(n: u64) -> Self {
        let m = if n % 4 == 2 { n / 2 } else { n };
        if m == 1 {
            return Self::rationals();
        }
        FieldDescriptor { conductor: m, stabilizer: vec![1] }
    }

    /// Canonical descriptor for the fixed field of `stab` inside `Q(z_n)`.
    pub fn from_stabilizer(n: u64, stab: &[u64]) -> Self {
        for m in divisors(n) {
            let kernel_inside =
                units(n).into_iter().filter(|k| k % m == 1 % m).all(|k| stab.contains(&k));
            if kernel_inside {
                let mut s: Vec<u64> = stab.iter().map(|k| k % m).collect();
                s.sort_unstable();
                s.dedup();
                return FieldDescriptor { conductor: m, stabilizer: s };
            }
        }
        unreachable!("m = n always satisfies the kernel condition")
    }

    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor) / self.stabilizer.len() as u64
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// Short display name such as `Q`, `Q(z3)` or `Q(z8+z8^-1)`.
    pub fn name(&self) -> String {
        let n = self.conductor;
        if self.is_rational() {
            return "Q".into();
        }
        if self.stabilizer == [1] {
            return format!("Q(z{})", n);
        }
        if self.stabilizer == [1, n - 1] {
            return format!("Q(z{n}+z{n}^-1)");
        }
        if n.is_multiple_of(8) && self.stabilizer == [1, n / 2 - 1] {
            return format!("Q(z{n}-z{n}^-1)");
        }
        let s: Vec<String> = self.stabilizer.iter().map(|k| k.to_string()).collect();
        format!("Q(z{})^<{}>", n, s.join(","))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Elementwise stabilizer of `vals` in `(Z/n)^x`, for `n` the common order.
pub fn stabilizer_of(vals: &[CycNum]) -> (u64, Vec<u64>) {
    let n = vals.iter().fold(1u64, |acc, v| acc.lcm(&v.order()));
    let lifted: Vec<CycNum> =
        vals.iter().filter(|v| v.to_rational().is_none()).map(|v| v.lift(n)).collect();
    let stab = units(n)
        .into_iter()
        .filter(|&k| lifted.iter().all(|v| &v.galois(k as i64).unwrap() == v))
        .collect();
    (n, stab)
}

/// The field generated over `Q` by `vals`.
pub fn field_of_values(vals: &[CycNum]) -> FieldDescriptor {
    let (n, stab) = stabilizer_of(vals);
    FieldDescriptor::from_stabilizer(n, &stab)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_polys() {
        let to_i = |v: Vec<BigInt>| v.iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(to_i(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_poly(9)), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn zeta_identities() {
        assert!(CycNum::zeta(1, 0).is_one());
        let i = CycNum::zeta(4, 1);
        assert_eq!(&i * &i, CycNum::from_int(4, -1));
        let s = &CycNum::zeta(3, 1) + &CycNum::zeta(3, 2);
        assert_eq!(s, CycNum::from_int(3, -1));
        assert!((&CycNum::zeta(8, 1) * &CycNum::zeta(8, 7)).is_one());
    }

    #[test]
    fn galois_on_zeta3() {
        let z = CycNum::zeta(3, 1);
        let g = z.galois(2).unwrap();
        assert_eq!(g, &CycNum::from_int(3, -1) - &z);
        let r = CycNum::from_rational(3, &q(5, 3));
        assert_eq!(r.galois(2).unwrap(), r);
        assert!(z.galois(3).is_err());
    }

    #[test]
    fn inverse_of_one_plus_zeta5() {
        let x = &CycNum::one(5) + &CycNum::zeta(5, 1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(CycNum::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn lift_and_lower() {
        let z = CycNum::zeta(3, 1);
        let l = z.lift(9);
        assert_eq!(l, CycNum::zeta(9, 3));
        assert_eq!(l.lower(3).unwrap(), z);
        assert!(CycNum::zeta(9, 1).lower(3).is_none());
        let w = CycNum::zeta(3, 1).lift(12);
        assert_eq!(w.lower(3).unwrap(), z);
    }

    #[test]
    fn fields() {
        assert_eq!(field_of_values(&[CycNum::from_int(5, 7)]), FieldDescriptor::rationals());
        let f = field_of_values(&[CycNum::zeta(5, 1)]);
        assert_eq!(f.degree(), 4);
        assert_eq!(f.name(), "Q(z5)");
        let r2 = &CycNum::zeta(8, 1) + &CycNum::zeta(8, 7);
        let f = field_of_values(&[r2]);
        assert_eq!((f.conductor, f.degree()), (8, 2));
        assert_eq!(f.name(), "Q(z8+z8^-1)");
        let m2 = &CycNum::zeta(8, 1) - &CycNum::zeta(8, 7);
        assert_eq!(field_of_values(&[m2]).name(), "Q(z8-z8^-1)");
        assert_eq!(field_of_values(&[CycNum::zeta(6, 1)]).name(), "Q(z3)");
    }

    #[test]
    fn display() {
        let x = &CycNum::from_rational(3, &q(1, 2)) - &CycNum::zeta(3, 1).scale(&q(2, 1));
        assert_eq!(x.to_string(), "1/2 - 2*z3");
        assert_eq!(CycNum::zero(4).to_string(), "0");
    }
}
