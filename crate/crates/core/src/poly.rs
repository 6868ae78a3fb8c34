//! Exact polynomial values: subset expansions, multilinear polynomials,
//! bivariate polynomials and quasi-polynomials.
//!
//! Rationals serialize as `"num/den"` strings.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::Subset;

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"a"` or `"a/b"` with integers `a`, `b != 0`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub(crate) mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn pow(x: &BigRational, k: i64) -> BigRational {
    num_traits::pow(if k >= 0 { x.clone() } else { x.recip() }, k.unsigned_abs() as usize)
}

/// `Π_{e ∈ A} v_e` for every `A`, indexed by bitmask.
fn subset_products(v: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::one(); 1 << v.len()];
    for mask in 1..out.len() {
        let low = mask.trailing_zeros() as usize;
        out[mask] = &out[mask & (mask - 1)] * &v[low];
    }
    out
}

/// `Σ_A c_A q^{-rk(A)} Π_{e ∈ A} v_e`, stored densely by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetExpansion {
    n: usize,
    coeffs: Vec<BigRational>,
    ranks: Vec<u32>,
}

impl SubsetExpansion {
    pub fn new(n: usize, coeffs: Vec<BigRational>, ranks: Vec<u32>) -> Result<SubsetExpansion> {
        if coeffs.len() != 1 << n || ranks.len() != 1 << n {
            return Err(Error::Invalid(format!("subset expansion on {n} elements needs {} terms", 1usize << n)));
        }
        Ok(SubsetExpansion { n, coeffs, ranks })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, a: Subset) -> &BigRational {
        &self.coeffs[a.index()]
    }

    pub fn rank(&self, a: Subset) -> u32 {
        self.ranks[a.index()]
    }

    /// The rank and coefficient (multiplicity) tables, term by term.
    pub fn to_tables(&self) -> (Vec<u32>, Vec<BigRational>) {
        (self.ranks.clone(), self.coeffs.clone())
    }

    pub fn evaluate(&self, q: &BigRational, v: &[BigRational]) -> Result<BigRational> {
        self.specialize(q)?.evaluate(v)
    }

    /// The multilinear polynomial in `v` obtained by fixing `q`.
    pub fn specialize(&self, q: &BigRational) -> Result<Multilinear> {
        if q.is_zero() {
            return Err(Error::DivisionByZero("q = 0"));
        }
        let max_rank = self.ranks.iter().copied().max().unwrap_or(0) as usize;
        let inv: Vec<BigRational> = (0..=max_rank).map(|k| pow(q, -(k as i64))).collect();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&self.ranks)
            .map(|(c, &r)| c * &inv[r as usize])
            .collect();
        Ok(Multilinear { n: self.n, coeffs })
    }

    /// `Σ_A c_A (x-1)^{rank_e - rk(A)} (y-1)^{|A| - rk(A)}`.
    pub fn to_bivariate(&self, rank_e: u32) -> Result<BivarPoly> {
        let mut grouped: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for a in Subset::all(self.n) {
            let r = self.rank(a);
            let len = a.len() as u32;
            if r > rank_e || r > len {
                return Err(Error::Invalid(format!("rank {r} of {a} gives a negative exponent")));
            }
            *grouped.entry((rank_e - r, len - r)).or_insert_with(BigRational::zero) += self.coefficient(a);
        }
        let mut out = BivarPoly::zero();
        for ((i, j), c) in grouped {
            out = out + BivarPoly::shifted_power(i, j).scale(&c);
        }
        Ok(out)
    }
}

/// A multilinear polynomial `Σ_A c_A Π_{e ∈ A} v_e`, dense by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multilinear {
    n: usize,
    coeffs: Vec<BigRational>,
}

impl Multilinear {
    pub fn new(n: usize, coeffs: Vec<BigRational>) -> Result<Multilinear> {
        if coeffs.len() != 1 << n {
            return Err(Error::Invalid(format!("multilinear polynomial in {n} variables needs {} terms", 1usize << n)));
        }
        Ok(Multilinear { n, coeffs })
    }

    pub fn zero(n: usize) -> Multilinear {
        Multilinear { n, coeffs: vec![BigRational::zero(); 1 << n] }
    }

    /// `c_A = Σ_{B ⊇ A} counts[B]`: the expansion of `Σ_B counts[B] Π_{e ∈ B} (1 + v_e)`.
    pub fn from_superset_sums(n: usize, counts: &[u64]) -> Multilinear {
        let mut acc: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        for i in 0..n {
            for mask in 0..acc.len() {
                if mask >> i & 1 == 0 {
                    let hi = acc[mask | 1 << i].clone();
                    acc[mask] += hi;
                }
            }
        }
        Multilinear { n, coeffs: acc.into_iter().map(BigRational::from_integer).collect() }
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, a: Subset) -> &BigRational {
        &self.coeffs[a.index()]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn evaluate(&self, v: &[BigRational]) -> Result<BigRational> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
        }
        let prods = subset_products(v);
        Ok(self.coeffs.iter().zip(&prods).map(|(c, p)| c * p).sum())
    }

    pub fn scale(&self, k: &BigRational) -> Multilinear {
        Multilinear { n: self.n, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Nonzero terms as `(subset, coefficient)`, by bitmask.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Subset(i as u32), c))
    }
}

impl fmt::Display for Multilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Subset, &BigRational)> = self.terms().collect();
        terms.sort_by_key(|(a, _)| (a.len(), a.iter().collect::<Vec<_>>()));
        let parts = terms.into_iter().map(|(a, c)| {
            let mono: Vec<String> = a.iter().map(|e| format!("v{}", e + 1)).collect();
            (c.clone(), mono.join("*"))
        });
        write_signed_sum(f, parts)
    }
}

fn write_signed_sum(f: &mut fmt::Formatter<'_>, parts: impl Iterator<Item = (BigRational, String)>) -> fmt::Result {
    let mut first = true;
    for (c, mono) in parts {
        let sign = if c.is_negative() { "-" } else { "+" };
        let abs = c.abs();
        let body = match (abs.is_one(), mono.is_empty()) {
            (_, true) => abs.to_string(),
            (true, false) => mono,
            (false, false) => format!("{abs}*{mono}"),
        };
        match (first, sign) {
            (true, "-") => write!(f, "-{body}")?,
            (true, _) => write!(f, "{body}")?,
            (false, s) => write!(f, " {s} {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A polynomial in `x`, `y` with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivarPoly {
    pub fn zero() -> BivarPoly {
        BivarPoly::default()
    }

    pub fn constant(c: BigRational) -> BivarPoly {
        BivarPoly::monomial(c, 0, 0)
    }

    pub fn one() -> BivarPoly {
        BivarPoly::constant(BigRational::one())
    }

    pub fn monomial(c: BigRational, i: u32, j: u32) -> BivarPoly {
        let mut p = BivarPoly::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn x() -> BivarPoly {
        BivarPoly::monomial(BigRational::one(), 1, 0)
    }

    pub fn y() -> BivarPoly {
        BivarPoly::monomial(BigRational::one(), 0, 1)
    }

    /// `(x-1)^i (y-1)^j`.
    pub fn shifted_power(i: u32, j: u32) -> BivarPoly {
        let mut p = BivarPoly::zero();
        let bx = binomials(i);
        let by = binomials(j);
        for (a, ca) in bx.iter().enumerate() {
            for (b, cb) in by.iter().enumerate() {
                let sign = if (i as usize - a + j as usize - b).is_multiple_of(2) { 1 } else { -1 };
                p.add_term(rat(ca * cb * sign), a as u32, b as u32);
            }
        }
        p
    }

    pub fn add_term(&mut self, c: BigRational, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing `(x-exponent, y-exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigRational) -> BivarPoly {
        if k.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * pow(x, i as i64) * pow(y, j as i64))
            .sum()
    }

    /// `p(y, x)`.
    pub fn swap(&self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(BigRational::is_integer)
    }
}

fn binomials(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n as usize {
        let next = &row[k] * BigInt::from(n as usize - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        for ((i, j), c) in rhs.terms {
            self.add_term(c, i, j);
        }
        self
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(mut self, rhs: BivarPoly) -> BivarPoly {
        for ((i, j), c) in rhs.terms {
            self.add_term(-c, i, j);
        }
        self
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &rhs.terms {
                out.add_term(c * d, i + k, j + l);
            }
        }
        out
    }
}

impl std::iter::Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> BivarPoly {
        iter.fold(BivarPoly::zero(), |a, b| a + b)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        let var = |name: &str, k: u32| match k {
            0 => String::new(),
            1 => name.to_string(),
            k => format!("{name}^{k}"),
        };
        let parts = keys.into_iter().map(|(i, j)| {
            let mono: Vec<String> = [var("x", i), var("y", j)].into_iter().filter(|s| !s.is_empty()).collect();
            (self.terms[&(i, j)].clone(), mono.join("*"))
        });
        write_signed_sum(f, parts)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    #[serde(with = "rational_string")]
    coeff: BigRational,
    exponents: [u32; 2],
}

#[derive(Serialize, Deserialize)]
struct BivarJson {
    terms: Vec<TermJson>,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| TermJson { coeff: c.clone(), exponents: [i, j] })
            .collect();
        BivarJson { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<BivarPoly, D::Error> {
        let json = BivarJson::deserialize(d)?;
        let mut p = BivarPoly::zero();
        for t in json.terms {
            p.add_term(t.coeff, t.exponents[0], t.exponents[1]);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct MultiTermJson {
    #[serde(with = "rational_string")]
    coeff: BigRational,
    subset: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MultilinearJson {
    variables: usize,
    terms: Vec<MultiTermJson>,
}

fn subset_from_labels(labels: &[usize], n: usize) -> std::result::Result<Subset, String> {
    let mut s = Subset::EMPTY;
    for &l in labels {
        if l == 0 || l > n {
            return Err(format!("element {l} out of range 1..={n}"));
        }
        s = s.with(l - 1);
    }
    Ok(s)
}

impl Serialize for Multilinear {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(a, c)| MultiTermJson { coeff: c.clone(), subset: a.to_labels() })
            .collect();
        MultilinearJson { variables: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multilinear {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Multilinear, D::Error> {
        let json = MultilinearJson::deserialize(d)?;
        if json.variables > crate::matroid::TABLE_LIMIT {
            return Err(serde::de::Error::custom("too many variables"));
        }
        let mut p = Multilinear::zero(json.variables);
        for t in json.terms {
            let a = subset_from_labels(&t.subset, json.variables).map_err(serde::de::Error::custom)?;
            p.coeffs[a.index()] += t.coeff;
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionTermJson {
    subset: Vec<usize>,
    #[serde(with = "rational_string")]
    coeff: BigRational,
    rank: u32,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    ground_size: usize,
    terms: Vec<ExpansionTermJson>,
}

impl Serialize for SubsetExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = Subset::all(self.n)
            .map(|a| ExpansionTermJson { subset: a.to_labels(), coeff: self.coefficient(a).clone(), rank: self.rank(a) })
            .collect();
        ExpansionJson { ground_size: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<SubsetExpansion, D::Error> {
        use serde::de::Error as _;
        let json = ExpansionJson::deserialize(d)?;
        let n = json.ground_size;
        if n > crate::matroid::TABLE_LIMIT {
            return Err(D::Error::custom("ground set too large"));
        }
        let mut coeffs = vec![None; 1 << n];
        let mut ranks = vec![0; 1 << n];
        for t in json.terms {
            let a = subset_from_labels(&t.subset, n).map_err(D::Error::custom)?;
            if coeffs[a.index()].replace(t.coeff).is_some() {
                return Err(D::Error::custom(format!("subset {a} listed twice")));
            }
            ranks[a.index()] = t.rank;
        }
        let coeffs = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| D::Error::custom(format!("subset {} missing", Subset(i as u32)))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SubsetExpansion { n, coeffs, ranks })
    }
}

/// A quasi-polynomial in `q = (x-1)(y-1)`: one bivariate constituent per
/// residue class modulo `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBivar {
    period: u64,
    constituents: Vec<BivarPoly>,
}

impl QuasiBivar {
    pub fn new(constituents: Vec<BivarPoly>) -> Result<QuasiBivar> {
        if constituents.is_empty() {
            return Err(Error::Invalid("a quasi-polynomial needs at least one constituent".into()));
        }
        Ok(QuasiBivar { period: constituents.len() as u64, constituents })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn constituents(&self) -> &[BivarPoly] {
        &self.constituents
    }

    /// The constituent used when `(x-1)(y-1) = q`.
    pub fn constituent(&self, q: &BigInt) -> &BivarPoly {
        let r = q.mod_floor(&BigInt::from(self.period)).to_usize().unwrap();
        &self.constituents[r]
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigRational {
        let q = (x - 1) * (y - 1);
        self.constituent(&q).evaluate(&rat(x.clone()), &rat(y.clone()))
    }
}

#[derive(Serialize, Deserialize)]
struct ConstituentJson {
    residue: u64,
    polynomial: BivarPoly,
}

#[derive(Serialize, Deserialize)]
struct QuasiJson {
    period: u64,
    constituents: Vec<ConstituentJson>,
}

impl Serialize for QuasiBivar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let constituents = self
            .constituents
            .iter()
            .enumerate()
            .map(|(r, p)| ConstituentJson { residue: r as u64, polynomial: p.clone() })
            .collect();
        QuasiJson { period: self.period, constituents }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiBivar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<QuasiBivar, D::Error> {
        use serde::de::Error as _;
        let json = QuasiJson::deserialize(d)?;
        let mut slots = vec![None; json.period as usize];
        for c in json.constituents {
            let slot = slots
                .get_mut(c.residue as usize)
                .ok_or_else(|| D::Error::custom(format!("residue {} outside the period", c.residue)))?;
            *slot = Some(c.polynomial);
        }
        let constituents = slots
            .into_iter()
            .enumerate()
            .map(|(r, p)| p.ok_or_else(|| D::Error::custom(format!("residue {r} missing"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        QuasiBivar::new(constituents).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tutte_triangle() -> BivarPoly {
        BivarPoly::monomial(rat(1), 2, 0) + BivarPoly::x() + BivarPoly::y()
    }

    #[test]
    fn rationals_parse_and_print() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), q(-2, 3));
        assert_eq!(format_rational(&q(-2, 3)), "-2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn shifted_powers_expand() {
        // (x-1)^2 (y-1) = x^2 y - x^2 - 2xy + 2x + y - 1
        let p = BivarPoly::shifted_power(2, 1);
        assert_eq!(p.coeff(2, 1), rat(1));
        assert_eq!(p.coeff(1, 1), rat(-2));
        assert_eq!(p.coeff(0, 0), rat(-1));
        assert_eq!(p.terms().count(), 6);
    }

    #[test]
    fn bivariate_from_expansion() {
        // L = ((2)) in Z: m = (1, 2), rk = (0, 1).
        let z = SubsetExpansion::new(1, vec![rat(1), rat(2)], vec![0, 1]).unwrap();
        let m = z.to_bivariate(1).unwrap();
        assert_eq!(m, BivarPoly::x() + BivarPoly::one());
        let empty = SubsetExpansion::new(0, vec![rat(1)], vec![0]).unwrap();
        assert_eq!(empty.to_bivariate(0).unwrap(), BivarPoly::one());
        assert!(z.to_bivariate(0).is_err());
    }

    #[test]
    fn evaluations() {
        assert_eq!(tutte_triangle().evaluate(&rat(2), &rat(1)), rat(7));
        let z = SubsetExpansion::new(1, vec![rat(1), rat(2)], vec![0, 1]).unwrap();
        assert_eq!(z.evaluate(&rat(3), &[rat(-1)]).unwrap(), q(1, 3));
        assert!(matches!(z.evaluate(&rat(0), &[rat(1)]), Err(Error::DivisionByZero(_))));
        let empty = SubsetExpansion::new(0, vec![rat(4)], vec![0]).unwrap();
        assert_eq!(empty.evaluate(&q(5, 7), &[]).unwrap(), rat(4));
    }

    #[test]
    fn superset_sums() {
        // counts on masks {}, {1}, {2}, {1,2}
        let p = Multilinear::from_superset_sums(2, &[1, 2, 3, 4]);
        let c: Vec<BigRational> = p.coefficients().to_vec();
        assert_eq!(c, vec![rat(10), rat(6), rat(7), rat(4)]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(tutte_triangle().to_string(), "x^2 + x + y");
        assert_eq!((BivarPoly::x() - BivarPoly::constant(q(1, 2))).to_string(), "x - 1/2");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        let e = Multilinear::new(2, vec![rat(1), rat(3), rat(2), rat(6)]).unwrap();
        assert_eq!(e.to_string(), "1 + 3*v1 + 2*v2 + 6*v1*v2");
    }

    #[test]
    fn json_roundtrips() {
        let p = tutte_triangle() - BivarPoly::constant(q(3, 4));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"-3/4\""));
        assert_eq!(serde_json::from_str::<BivarPoly>(&s).unwrap(), p);

        let qb = QuasiBivar::new(vec![BivarPoly::x() + BivarPoly::one(), BivarPoly::x()]).unwrap();
        let s = serde_json::to_string(&qb).unwrap();
        assert_eq!(serde_json::from_str::<QuasiBivar>(&s).unwrap(), qb);

        let z = SubsetExpansion::new(2, vec![rat(1), rat(2), q(1, 2), rat(6)], vec![0, 1, 1, 2]).unwrap();
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(serde_json::from_str::<SubsetExpansion>(&s).unwrap(), z);

        let m = Multilinear::new(2, vec![rat(1), rat(0), q(-1, 3), rat(6)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<Multilinear>(&s).unwrap(), m);
    }

    #[test]
    fn quasi_constituent_selection() {
        let qb = QuasiBivar::new(vec![BivarPoly::x() + BivarPoly::one(), BivarPoly::x()]).unwrap();
        // (3-1)(2-1) = 2 selects x + 1; (4-1)(2-1) = 3 selects x
        assert_eq!(qb.evaluate(&BigInt::from(3), &BigInt::from(2)), rat(4));
        assert_eq!(qb.evaluate(&BigInt::from(4), &BigInt::from(2)), rat(4));
        // negative q uses the Euclidean residue
        assert_eq!(qb.constituent(&BigInt::from(-3)), &BivarPoly::x());
    }
}
