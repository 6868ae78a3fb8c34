//! Potts partition functions over homomorphisms, their subset expansions,
//! flows, colorings, and the Tutte quasi-polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::{hom_zero_histogram, image_order, FgGroup, Odometer, VectorList};
use crate::arithmetic::{ArithmeticMatroid, Represented};
use crate::error::{Error, Result};
use crate::poly::{rat, BivarPoly, Multilinear, QuasiBivar, SubsetExpansion};
use crate::report::Report;
use crate::sample::Sampler;
use crate::subset::Subset;
use crate::tutte::{arithmetic_tutte, multivariate_z, tutte};

/// Random `v` points per literal (non coefficient-wise) identity.
pub const LITERAL_POINTS: usize = 5;

fn positive(q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::NonPositiveModulus(0));
    }
    Ok(())
}

fn sign(k: usize) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn qpow(q: u64, k: i64) -> BigRational {
    let base = rat(q);
    num_traits::pow(if k >= 0 { base } else { base.recip() }, k.unsigned_abs() as usize)
}

/// `Σ_{φ ∈ Hom(G,H)} Π_e (1 + v_e δ(φ(g_e), 0))` as a multilinear polynomial in `v`.
pub fn potts_polynomial(list: &VectorList, h: &FgGroup, cap: u64) -> Result<Multilinear> {
    let hist = hom_zero_histogram(list, h, cap)?;
    Ok(Multilinear::from_superset_sums(list.len(), &hist))
}

/// `Z_L(G, H, v)` by enumerating `Hom(G, H)`.
pub fn potts_sum(list: &VectorList, h: &FgGroup, v: &[BigRational], cap: u64) -> Result<BigRational> {
    potts_polynomial(list, h, cap)?.evaluate(v)
}

/// The closed form `|H|^{rk G} Σ_A |H|^{-rk A} Π_i m(A)/|q_i G_A| Π_{e ∈ A} v_e`
/// over the invariant factors `q_i` of `H`.
pub fn fk_closed_form(rep: &Represented, h: &FgGroup) -> Result<Multilinear> {
    let order = h.order().ok_or(Error::InfiniteTarget)?;
    let q = BigRational::from_integer(order);
    let rk_g = rep.group_rank() as i64;
    let coeffs = Subset::all(rep.ground_size())
        .map(|a| {
            let quotient = rep.quotient(a);
            let m = quotient.torsion_order();
            let factor: BigRational = h
                .torsion()
                .iter()
                .map(|qi| BigRational::new(m.clone(), image_order(&quotient.torsion, qi)))
                .product();
            let k = rk_g - rep.arithmetic().rank(a) as i64;
            factor * num_traits::pow(q.clone(), k as usize)
        })
        .collect();
    Multilinear::new(rep.ground_size(), coeffs)
}

/// `Z^P_L(q, v)` as a quasi-polynomial in `q`: constituent `r` is the subset
/// expansion with coefficients `m(A)/|rG_A|` and exponents `rk(A)`, so that
/// `Z^P(q, v) = q^{rk G} Z_r(q, v)` for `q ≡ r` modulo the period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PottsQuasi {
    pub group_rank: usize,
    pub constituents: Vec<SubsetExpansion>,
}

impl PottsQuasi {
    pub fn period(&self) -> u64 {
        self.constituents.len() as u64
    }

    pub fn constituent(&self, q: u64) -> &SubsetExpansion {
        &self.constituents[(q % self.period()) as usize]
    }

    /// `Z^P(q, ·)` as a multilinear polynomial.
    pub fn specialize(&self, q: u64) -> Result<Multilinear> {
        positive(q)?;
        let z = self.constituent(q).specialize(&rat(q))?;
        Ok(z.scale(&qpow(q, self.group_rank as i64)))
    }

    pub fn evaluate(&self, q: u64, v: &[BigRational]) -> Result<BigRational> {
        self.specialize(q)?.evaluate(v)
    }
}

fn period_u64(rep: &Represented) -> Result<u64> {
    rep.period().to_u64().ok_or_else(|| Error::Invalid(format!("period {} too large", rep.period())))
}

/// `m(A)/|rG_A|` for every `A`.
fn reduced_multiplicities(rep: &Represented, r: u64) -> Vec<BigRational> {
    let r = BigInt::from(r);
    Subset::all(rep.ground_size())
        .map(|a| {
            let quotient = rep.quotient(a);
            BigRational::new(quotient.torsion_order(), image_order(&quotient.torsion, &r))
        })
        .collect()
}

/// The constituent used for `q`; it depends on `q` only through `gcd(q, d)`
/// for the torsion invariants `d` of the quotients, hence only on `q` modulo
/// the period.
pub fn potts_constituent(rep: &Represented, q: u64) -> Result<SubsetExpansion> {
    SubsetExpansion::new(rep.ground_size(), reduced_multiplicities(rep, q), rep.matroid().ranks().to_vec())
}

/// `Q_L(x, y) = Σ_A m(A)/|qG_A| (x-1)^{rk E - rk A} (y-1)^{|A| - rk A}` on the
/// residue class of `q = (x-1)(y-1)`.
pub fn tutte_constituent(rep: &Represented, q: u64) -> Result<BivarPoly> {
    potts_constituent(rep, q)?.to_bivariate(rep.matroid().full_rank() as u32)
}

/// Every constituent, one per residue modulo the period; `period · 2^n`
/// coefficients are materialized, checked against `cap`.
pub fn potts_quasi(rep: &Represented, cap: u64) -> Result<PottsQuasi> {
    let period = period_u64(rep)?;
    let size = (period as u128) << rep.ground_size();
    if size > cap as u128 {
        return Err(Error::CapExceeded { required: size, cap });
    }
    let constituents = (0..period).map(|r| potts_constituent(rep, r)).collect::<Result<Vec<_>>>()?;
    Ok(PottsQuasi { group_rank: rep.group_rank(), constituents })
}

pub fn tutte_quasi(rep: &Represented, cap: u64) -> Result<QuasiBivar> {
    let rank_e = rep.matroid().full_rank() as u32;
    let constituents = potts_quasi(rep, cap)?
        .constituents
        .iter()
        .map(|z| z.to_bivariate(rank_e))
        .collect::<Result<Vec<_>>>()?;
    QuasiBivar::new(constituents)
}

/// The least common multiple of `m(B)` over all bases.
pub fn lcm_of_bases(a: &ArithmeticMatroid) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for b in a.matroid().bases() {
        acc = acc.lcm(&a.int_mult(b, "the lcm of basis multiplicities")?);
    }
    Ok(acc)
}

/// `gcd(q, lcm of m(B)) = 1`.
pub fn in_zm(a: &ArithmeticMatroid, q: u64) -> Result<bool> {
    positive(q)?;
    Ok(lcm_of_bases(a)?.gcd(&BigInt::from(q)).is_one())
}

/// `qG_B = 0` for every basis `B`.
pub fn in_za(rep: &Represented, q: u64) -> Result<bool> {
    positive(q)?;
    let q = BigInt::from(q);
    Ok(rep.matroid().bases().into_iter().all(|b| image_order(&rep.quotient(b).torsion, &q).is_one()))
}

/// `Z^P(q, ·) = q^{rk G} Z_M(q, ·)` iff `q ∈ Z_M`, and `= q^{rk G} Z_A(q, ·)`
/// iff `q ∈ Z_A`, as polynomials in `v` (enumerated side against
/// coefficient tables).
pub fn fk_specializations(rep: &Represented, q: u64, cap: u64) -> Result<Report> {
    positive(q)?;
    let potts = potts_polynomial(rep.list(), &FgGroup::cyclic(q), cap)?;
    let scale = qpow(q, rep.group_rank() as i64);
    let qr = rat(q);
    let z_m = multivariate_z(&rep.arithmetic().underlying()).specialize(&qr)?.scale(&scale);
    let z_a = multivariate_z(rep.arithmetic()).specialize(&qr)?.scale(&scale);
    let (zm, za) = (in_zm(rep.arithmetic(), q)?, in_za(rep, q)?);
    let mut report = Report::new();
    let eq_m = potts == z_m;
    let eq_a = potts == z_a;
    report.record(format!("q = {q}: matroid specialization iff gcd(q, lcm) = 1"), eq_m == zm, format!("equal: {eq_m}, in set: {zm}"));
    report.record(format!("q = {q}: arithmetic specialization iff qG_B = 0"), eq_a == za, format!("equal: {eq_a}, in set: {za}"));
    Ok(report)
}

/// Enumeration against the closed form for a finite `H`.
pub fn fk_report(rep: &Represented, h: &FgGroup, cap: u64) -> Result<Report> {
    let mut report = Report::new();
    report.compare(format!("Potts sum over Hom(G, {h})"), &potts_polynomial(rep.list(), h, cap)?, &fk_closed_form(rep, h)?);
    Ok(report)
}

/// Coordinates of each `g_e` reduced modulo the moduli of `G/qG`:
/// `q` on free coordinates, `gcd(q, d_i)` on torsion ones.
fn flow_residues(list: &VectorList, q: u64) -> (Vec<u64>, Vec<Vec<u64>>) {
    let g = list.group();
    let qb = BigInt::from(q);
    let moduli: Vec<u64> = (0..g.dim())
        .map(|i| {
            let d = g.modulus(i);
            if d.is_zero() { q } else { d.gcd(&qb).to_u64().expect("gcd bounded by q") }
        })
        .collect();
    let residues = list
        .elements()
        .iter()
        .map(|e| {
            e.coords()
                .iter()
                .zip(&moduli)
                .map(|(x, &m)| x.mod_floor(&BigInt::from(m)).to_u64().unwrap())
                .collect()
        })
        .collect();
    (moduli, residues)
}

fn check_flow_cap(q: u64, k: usize, cap: u64) -> Result<()> {
    let count = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::CapExceeded { required: count, cap });
    }
    Ok(())
}

/// Walks `Z_q^A` keeping `Σ φ(e) g_e` in `G/qG`; calls `visit(φ, is_flow)`.
fn walk_assignments(list: &VectorList, q: u64, a: Subset, cap: u64, mut visit: impl FnMut(&[usize], bool)) -> Result<()> {
    positive(q)?;
    if a.span() > list.len() {
        return Err(Error::SubsetOutOfRange { subset: a, size: list.len() });
    }
    check_flow_cap(q, a.len(), cap)?;
    let (moduli, residues) = flow_residues(list, q);
    let elems: Vec<usize> = a.iter().collect();
    let mut sum = vec![0u64; moduli.len()];
    let mut odo = Odometer::new(vec![q as usize; elems.len()]);
    loop {
        visit(&odo.digits, sum.iter().all(|&x| x == 0));
        let Some(k) = odo.step() else { break };
        // Incrementing a digit, or wrapping it from q-1 to 0, adds g_e (q g_e ∈ qG).
        for &e in &elems[k..] {
            for ((s, r), m) in sum.iter_mut().zip(&residues[e]).zip(&moduli) {
                *s = (*s + r) % m;
            }
        }
    }
    Ok(())
}

/// All `φ ∈ Z_q^A` with `Σ_{e ∈ A} φ(e) g_e ∈ qG`, as value lists in the order of `A`.
pub fn flow_kernel(list: &VectorList, q: u64, a: Subset, cap: u64) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    walk_assignments(list, q, a, cap, |phi, ok| {
        if ok {
            out.push(phi.iter().map(|&x| x as u64).collect());
        }
    })?;
    Ok(out)
}

/// For every flow on `E`, its zero set; counts indexed by bitmask.
pub fn flow_zero_histogram(list: &VectorList, q: u64, cap: u64) -> Result<Vec<u64>> {
    let n = list.len();
    let mut hist = vec![0u64; 1 << n];
    walk_assignments(list, q, list.ground_set(), cap, |phi, ok| {
        if ok {
            let mask = phi.iter().enumerate().filter(|(_, &x)| x == 0).fold(0usize, |m, (e, _)| m | 1 << e);
            hist[mask] += 1;
        }
    })?;
    Ok(hist)
}

/// `F_L(q, v) = Σ_{φ flow} Π_e (1 + v_e δ(φ(e), 0))` as a multilinear polynomial.
pub fn flow_multilinear(list: &VectorList, q: u64, cap: u64) -> Result<Multilinear> {
    Ok(Multilinear::from_superset_sums(list.len(), &flow_zero_histogram(list, q, cap)?))
}

pub fn flow_polynomial(list: &VectorList, q: u64, v: &[BigRational], cap: u64) -> Result<BigRational> {
    flow_multilinear(list, q, cap)?.evaluate(v)
}

/// `|qG_t| / m(∅)`.
fn torsion_ratio(rep: &Represented, q: u64) -> BigRational {
    let t = rep.quotient(Subset::EMPTY);
    BigRational::new(image_order(&t.torsion, &BigInt::from(q)), t.torsion_order())
}

/// The closed form of `F_L(q, ·)`: the coefficient of `Π_{E - A} v` is
/// `|qG_t|/m(∅) · m(A)/|qG_A| · q^{|A| - rk A}`.
pub fn flow_closed_form(rep: &Represented, q: u64) -> Result<Multilinear> {
    positive(q)?;
    let n = rep.ground_size();
    let ratio = torsion_ratio(rep, q);
    let reduced = reduced_multiplicities(rep, q);
    let full = Subset::full(n);
    let mut coeffs = vec![BigRational::zero(); 1 << n];
    for a in Subset::all(n) {
        let k = a.len() as i64 - rep.arithmetic().rank(a) as i64;
        coeffs[(full - a).index()] = &ratio * &reduced[a.index()] * qpow(q, k);
    }
    Multilinear::new(n, coeffs)
}

/// `Π v_e · Z(q, q/v)` for a subset expansion.
fn reciprocal_value(z: &SubsetExpansion, q: u64, v: &[BigRational]) -> Result<BigRational> {
    let qr = rat(q);
    let w: Vec<BigRational> = v.iter().map(|x| &qr / x).collect();
    let prod: BigRational = v.iter().cloned().product();
    Ok(prod * z.evaluate(&qr, &w)?)
}

/// The flow identity coefficient-wise and literally at random points, and
/// its matroid / arithmetic specializations where `q` admits them.
pub fn flow_formula_check(rep: &Represented, q: u64, cap: u64, sampler: &mut Sampler) -> Result<Report> {
    let n = rep.ground_size();
    let flows = flow_multilinear(rep.list(), q, cap)?;
    let mut report = Report::new();
    report.compare(format!("q = {q}: flow polynomial coefficients"), &flows, &flow_closed_form(rep, q)?);

    let z_p = &potts_constituent(rep, q)?;
    let ratio = torsion_ratio(rep, q);
    let z_m = multivariate_z(&rep.arithmetic().underlying());
    let z_a = multivariate_z(rep.arithmetic());
    let (zm, za) = (in_zm(rep.arithmetic(), q)?, in_za(rep, q)?);
    let m_empty = rep.arithmetic().mult(Subset::EMPTY).clone();
    let (mut literal, mut spec_m, mut spec_a) = (true, true, true);
    for _ in 0..LITERAL_POINTS {
        let v = sampler.vector(n);
        let f = flows.evaluate(&v)?;
        // Z^P(q, q/v) = q^{rk G} Z_r(q, q/v), so the q^{-rk G} cancels.
        literal &= f == &ratio * reciprocal_value(z_p, q, &v)?;
        if zm {
            spec_m &= f == reciprocal_value(&z_m, q, &v)?;
        }
        if za {
            spec_a &= f == reciprocal_value(&z_a, q, &v)? / &m_empty;
        }
    }
    report.record(format!("q = {q}: flow identity through Z^P(q, q/v)"), literal, format!("{LITERAL_POINTS} points"));
    if zm {
        report.record(format!("q = {q}: flow identity, matroid form"), spec_m, "gcd(q, lcm) = 1");
    }
    if za {
        report.record(format!("q = {q}: flow identity, arithmetic form"), spec_a, "qG_B = 0");
    }
    Ok(report)
}

/// Homomorphisms `G -> Z_q` nonzero on every `g_e`.
pub fn chromatic_count(list: &VectorList, q: u64, cap: u64) -> Result<u64> {
    positive(q)?;
    Ok(hom_zero_histogram(list, &FgGroup::cyclic(q), cap)?[0])
}

/// Nowhere-zero `(L, q)`-flows.
pub fn flow_count(list: &VectorList, q: u64, cap: u64) -> Result<u64> {
    Ok(flow_zero_histogram(list, q, cap)?[0])
}

/// The coloring and flow counts against the Tutte quasi-polynomial, `T` and `M`.
///
/// The nowhere-zero flow count carries the factor `|qG_t|/m(∅)` in general
/// and `1/m(∅)` when `q ∈ Z_A`; the unadjusted forms are checked only where
/// they coincide with these.
pub fn color_flow_identities(rep: &Represented, q: u64, cap: u64) -> Result<Report> {
    positive(q)?;
    let list = rep.list();
    let n = rep.ground_size();
    let rk_e = rep.matroid().full_rank();
    let rk_g = rep.group_rank();
    let chi = rat(chromatic_count(list, q, cap)?);
    let chi_star = rat(flow_count(list, q, cap)?);
    let qc = tutte_constituent(rep, q)?;
    let one = BigRational::one();
    let x_col = &one - rat(q);
    let y_flow = &one - rat(q);
    let zero = BigRational::zero();
    let color_factor = sign(rk_e) * qpow(q, rk_g as i64 - rk_e as i64);
    let flow_sign = sign(n - rk_e);
    let m_empty = rep.arithmetic().mult(Subset::EMPTY).clone();
    let ratio = torsion_ratio(rep, q);

    let mut report = Report::new();
    let tag = |s: &str| format!("q = {q}: {s}");
    report.compare(tag("colorings from Q"), &chi, &(&color_factor * qc.evaluate(&x_col, &zero)));
    let from_q = &ratio * &flow_sign * qc.evaluate(&zero, &y_flow);
    report.compare(tag("nowhere-zero flows from Q"), &chi_star, &from_q);
    if ratio == m_empty.recip() {
        report.compare(tag("nowhere-zero flows from Q, 1/m(∅) form"), &chi_star, &(&flow_sign / &m_empty * qc.evaluate(&zero, &y_flow)));
    }
    report.record(tag("nowhere-zero flow count integral"), from_q.is_integer(), from_q.to_string());
    if in_zm(rep.arithmetic(), q)? {
        let t = tutte(rep.matroid());
        report.compare(tag("colorings from T"), &chi, &(&color_factor * t.evaluate(&x_col, &zero)));
        report.compare(tag("nowhere-zero flows from T"), &chi_star, &(&flow_sign * t.evaluate(&zero, &y_flow)));
    }
    if in_za(rep, q)? {
        let m = arithmetic_tutte(rep.arithmetic());
        report.compare(tag("colorings from M"), &chi, &(&color_factor * m.evaluate(&x_col, &zero)));
        let m_flow = &flow_sign * m.evaluate(&zero, &y_flow);
        report.compare(tag("nowhere-zero flows from M / m(∅)"), &chi_star, &(&m_flow / &m_empty));
        if m_empty.is_one() {
            report.compare(tag("nowhere-zero flows from M"), &chi_star, &m_flow);
        }
    }
    Ok(report)
}

/// `Z^P((x-1)(y-1), y-1) = q^{rk G} (x-1)^{-rk E} Q(x, y)` at points with
/// `q = (x-1)(y-1)` a positive integer, and the constituents of `Q`
/// against `T` and `M` where `q` admits them.
pub fn quasi_report(rep: &Represented, q_max: u64, cap: u64, sampler: &mut Sampler) -> Result<Report> {
    let n = rep.ground_size();
    let rk_e = rep.matroid().full_rank() as i64;
    let rk_g = rep.group_rank() as i64;
    let t = tutte(rep.matroid());
    let m = arithmetic_tutte(rep.arithmetic());
    let one = BigRational::one();
    let mut report = Report::new();
    let (mut ok, mut t_ok, mut m_ok) = (true, true, true);
    let mut detail = String::new();
    for q in 1..=q_max {
        let potts = potts_polynomial(rep.list(), &FgGroup::cyclic(q), cap)?;
        let c = &tutte_constituent(rep, q)?;
        let y = sampler.rational_avoiding(std::slice::from_ref(&one));
        let x = &one + rat(q) / (&y - &one);
        let lhs = potts.evaluate(&vec![&y - &one; n])?;
        let xm1 = &x - &one;
        let rhs = qpow(q, rk_g) * num_traits::pow(xm1.recip(), rk_e as usize) * c.evaluate(&x, &y);
        if lhs != rhs {
            ok = false;
            detail = format!("q = {q}: {lhs} vs {rhs}");
        }
        if in_zm(rep.arithmetic(), q)? {
            t_ok &= *c == t;
        }
        if in_za(rep, q)? {
            m_ok &= *c == m;
        }
    }
    if ok {
        detail = format!("q = 1..={q_max}");
    }
    report.record("Potts sum from Q", ok, detail);
    report.record("Q constituent is T for q in Z_M", t_ok, format!("period {}", rep.period()));
    report.record("Q constituent is M for q in Z_A", m_ok, format!("period {}", rep.period()));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub weight: u64,
}

/// A loopless directed graph with positive edge weights; vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub vertices: usize,
    pub edges: Vec<Edge>,
}

impl WeightedDigraph {
    pub fn new(vertices: usize, edges: Vec<Edge>) -> Result<WeightedDigraph> {
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= vertices || e.head >= vertices {
                return Err(Error::IndexOutOfRange { index: e.tail.max(e.head), size: vertices });
            }
            if e.tail == e.head {
                return Err(Error::LoopEdge(i));
            }
            if e.weight == 0 {
                return Err(Error::Invalid(format!("edge {} has weight 0", i + 1)));
            }
        }
        Ok(WeightedDigraph { vertices, edges })
    }

    /// The same graph with edge `i` reversed.
    pub fn reversed(&self, i: usize) -> WeightedDigraph {
        let mut out = self.clone();
        let e = &mut out.edges[i];
        std::mem::swap(&mut e.tail, &mut e.head);
        out
    }
}

/// `g_e ∈ Z^V` with `+w_e` at the head and `-w_e` at the tail.
pub fn graph_encode(d: &WeightedDigraph) -> Result<VectorList> {
    let d = WeightedDigraph::new(d.vertices, d.edges.clone())?;
    let coords: Vec<Vec<i64>> = d
        .edges
        .iter()
        .map(|e| {
            let w = i64::try_from(e.weight).map_err(|_| Error::Invalid(format!("weight {} too large", e.weight)))?;
            let mut g = vec![0i64; d.vertices];
            g[e.head] = w;
            g[e.tail] = -w;
            Ok(g)
        })
        .collect::<Result<_>>()?;
    VectorList::integer(d.vertices, &coords)
}

/// Coloring and flow counts do not depend on edge orientations.
pub fn orientation_report(d: &WeightedDigraph, q_max: u64, cap: u64) -> Result<Report> {
    let base = graph_encode(d)?;
    let mut ok = true;
    let mut detail = format!("{} edges, q = 1..={q_max}", d.edges.len());
    for i in 0..d.edges.len() {
        let flipped = graph_encode(&d.reversed(i))?;
        for q in 1..=q_max {
            let a = (chromatic_count(&base, q, cap)?, flow_count(&base, q, cap)?);
            let b = (chromatic_count(&flipped, q, cap)?, flow_count(&flipped, q, cap)?);
            if a != b {
                ok = false;
                detail = format!("edge {} reversed, q = {q}: {a:?} vs {b:?}", i + 1);
            }
        }
    }
    let mut report = Report::new();
    report.record("orientation invariance", ok, detail);
    Ok(report)
}

/// The constituents for `q` and `q + period` agree.
pub fn periodicity_report(rep: &Represented, q_max: u64) -> Result<Report> {
    let p = period_u64(rep)?;
    let ok = (1..=q_max).all(|q| reduced_multiplicities(rep, q) == reduced_multiplicities(rep, q + p));
    let mut report = Report::new();
    report.record("quasi-periodicity", ok, format!("period {p}"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 10_000_000;

    fn list(d: usize, coords: &[Vec<i64>]) -> VectorList {
        VectorList::integer(d, coords).unwrap()
    }

    fn triangle() -> WeightedDigraph {
        let e = |tail, head| Edge { tail, head, weight: 1 };
        WeightedDigraph::new(3, vec![e(0, 1), e(1, 2), e(0, 2)]).unwrap()
    }

    fn non_fano() -> VectorList {
        let cols = [[1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 1, 1], [0, 0, 1], [1, 0, 1], [1, 1, 1]];
        list(3, &cols.iter().map(|c| c.to_vec()).collect::<Vec<_>>())
    }

    /// Independent oracle: colorings of a graph counted vertex by vertex.
    fn proper_colorings(d: &WeightedDigraph, q: u64) -> u64 {
        let mut count = 0;
        let total = q.pow(d.vertices as u32);
        for idx in 0..total {
            let colors: Vec<u64> = (0..d.vertices).map(|i| idx / q.pow(i as u32) % q).collect();
            let proper = d.edges.iter().all(|e| (e.weight * colors[e.tail]) % q != (e.weight * colors[e.head]) % q);
            count += u64::from(proper);
        }
        count
    }

    #[test]
    fn direct_constituents_match_residues() {
        let g = FgGroup::new(1, vec![2, 4]).unwrap();
        let rep = Represented::new(VectorList::from_coords(g, &[vec![2, 1, 2], vec![3, 0, 1]]).unwrap()).unwrap();
        let quasi = potts_quasi(&rep, CAP).unwrap();
        assert_eq!(BigInt::from(quasi.period()), rep.period());
        for q in 0..40 {
            assert_eq!(&potts_constituent(&rep, q).unwrap(), quasi.constituent(q));
        }
        assert!(matches!(potts_quasi(&rep, 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn potts_of_interval() {
        let l = list(1, &[vec![2]]);
        for q in 1..10u64 {
            let p = potts_polynomial(&l, &FgGroup::cyclic(q), CAP).unwrap();
            assert_eq!(p.coefficient(Subset::EMPTY), &rat(q));
            assert_eq!(p.coefficient(Subset(1)), &rat(q.gcd(&2)));
        }
        let quasi = potts_quasi(&Represented::new(l).unwrap(), CAP).unwrap();
        assert_eq!(quasi.period(), 2);
        let v = [rat(5)];
        assert_eq!(quasi.evaluate(3, &v).unwrap(), rat(3 + 5));
        assert_eq!(quasi.evaluate(4, &v).unwrap(), rat(4 + 10));
    }

    #[test]
    fn empty_lists_in_torsion_groups() {
        let z4 = VectorList::from_coords(FgGroup::cyclic(4), &Vec::<Vec<i64>>::new()).unwrap();
        let v4 = VectorList::from_coords(FgGroup::new(0, vec![2, 2]).unwrap(), &Vec::<Vec<i64>>::new()).unwrap();
        assert_eq!(potts_sum(&z4, &FgGroup::cyclic(2), &[], CAP).unwrap(), rat(2));
        assert_eq!(potts_sum(&v4, &FgGroup::cyclic(2), &[], CAP).unwrap(), rat(4));
        let (a, b) = (Represented::new(z4).unwrap(), Represented::new(v4).unwrap());
        assert_eq!(a.arithmetic().multiplicities(), b.arithmetic().multiplicities());
    }

    #[test]
    fn triangle_colorings_and_flows() {
        let d = triangle();
        let l = graph_encode(&d).unwrap();
        let rep = Represented::new(l.clone()).unwrap();
        assert!(rep.arithmetic().multiplicities().iter().all(One::is_one));
        for q in 1..7 {
            assert_eq!(chromatic_count(&l, q, CAP).unwrap(), proper_colorings(&d, q));
            assert_eq!(chromatic_count(&l, q, CAP).unwrap(), q * (q.max(1) - 1) * q.saturating_sub(2));
            assert_eq!(flow_count(&l, q, CAP).unwrap(), q.saturating_sub(1));
            assert!(color_flow_identities(&rep, q, CAP).unwrap().passed());
        }
        assert_eq!(chromatic_count(&l, 3, CAP).unwrap(), 6);
        assert_eq!(flow_kernel(&l, 2, l.ground_set(), CAP).unwrap(), vec![vec![0, 0, 0], vec![1, 1, 1]]);
        assert!(orientation_report(&d, 5, CAP).unwrap().passed());
    }

    #[test]
    fn weighted_edge() {
        let d = WeightedDigraph::new(2, vec![Edge { tail: 0, head: 1, weight: 3 }]).unwrap();
        assert_eq!(graph_encode(&d).unwrap().elements()[0].coords(), &[BigInt::from(-3), BigInt::from(3)]);
        let d2 = WeightedDigraph::new(2, vec![Edge { tail: 0, head: 1, weight: 2 }]).unwrap();
        assert_eq!(chromatic_count(&graph_encode(&d2).unwrap(), 4, CAP).unwrap(), 8);
        assert_eq!(proper_colorings(&d2, 4), 8);
        assert!(matches!(
            WeightedDigraph::new(2, vec![Edge { tail: 1, head: 1, weight: 1 }]),
            Err(Error::LoopEdge(0))
        ));
    }

    #[test]
    fn flows_of_interval() {
        let l = list(1, &[vec![2]]);
        assert_eq!(flow_kernel(&l, 4, Subset(1), CAP).unwrap(), vec![vec![0], vec![2]]);
        assert_eq!(flow_kernel(&l, 4, Subset::EMPTY, CAP).unwrap(), vec![Vec::<u64>::new()]);
        let rep = Represented::new(l.clone()).unwrap();
        let mut sampler = Sampler::new(3);
        for q in 1..9u64 {
            let f = flow_multilinear(&l, q, CAP).unwrap();
            assert_eq!(f.coefficient(Subset::EMPTY), &rat(q.gcd(&2)));
            assert_eq!(f.coefficient(Subset(1)), &rat(1));
            assert!(flow_formula_check(&rep, q, CAP, &mut sampler).unwrap().passed());
        }
        let empty = list(0, &[]);
        assert_eq!(flow_polynomial(&empty, 5, &[], CAP).unwrap(), rat(1));
    }

    #[test]
    fn interval_colorings() {
        let rep = Represented::new(list(1, &[vec![2]])).unwrap();
        assert_eq!(chromatic_count(rep.list(), 2, CAP).unwrap(), 0);
        let q = tutte_quasi(&rep, CAP).unwrap();
        assert_eq!(q.period(), 2);
        assert_eq!(q.constituent(&BigInt::from(2)).to_string(), "x + 1");
        assert_eq!(q.constituent(&BigInt::from(3)).to_string(), "x");
        for q in 1..9 {
            assert!(color_flow_identities(&rep, q, CAP).unwrap().passed());
        }
    }

    #[test]
    fn flow_counts_need_the_torsion_factor() {
        // Empty list in Z_4: one nowhere-zero flow (the empty one) for every q.
        let rep = Represented::new(VectorList::from_coords(FgGroup::cyclic(4), &Vec::<Vec<i64>>::new()).unwrap()).unwrap();
        for q in 1..9 {
            assert_eq!(flow_count(rep.list(), q, CAP).unwrap(), 1);
            let report = color_flow_identities(&rep, q, CAP).unwrap();
            assert!(report.passed(), "{report}");
        }
        let ratio = torsion_ratio(&rep, 2);
        assert_eq!(ratio, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn non_fano_sets() {
        let rep = Represented::new(non_fano()).unwrap();
        assert_eq!(lcm_of_bases(rep.arithmetic()).unwrap(), BigInt::from(2));
        for q in 1..=12 {
            assert_eq!(in_zm(rep.arithmetic(), q).unwrap(), q % 2 == 1);
            assert_eq!(in_za(&rep, q).unwrap(), q % 2 == 0);
        }
        for q in [2, 3] {
            assert!(fk_specializations(&rep, q, CAP).unwrap().passed());
        }
    }

    #[test]
    fn closed_forms_match_enumeration() {
        let lists = [
            list(2, &[vec![2, 0], vec![1, 3], vec![0, 2]]),
            VectorList::from_coords(FgGroup::new(1, vec![2]).unwrap(), &[vec![2, 1], vec![1, 0], vec![0, 1]]).unwrap(),
        ];
        let mut sampler = Sampler::new(5);
        for l in lists {
            let rep = Represented::new(l).unwrap();
            for h in [FgGroup::cyclic(6), FgGroup::new(0, vec![2, 4]).unwrap()] {
                assert!(fk_report(&rep, &h, CAP).unwrap().passed());
            }
            for q in 1..=8 {
                assert!(fk_specializations(&rep, q, CAP).unwrap().passed());
                let r = flow_formula_check(&rep, q, CAP, &mut sampler).unwrap();
                assert!(r.passed(), "{r}");
                let r = color_flow_identities(&rep, q, CAP).unwrap();
                assert!(r.passed(), "{r}");
            }
            assert!(quasi_report(&rep, 8, CAP, &mut sampler).unwrap().passed());
            assert!(periodicity_report(&rep, 8).unwrap().passed());
        }
    }
}
