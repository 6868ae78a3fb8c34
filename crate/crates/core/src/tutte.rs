//! Tutte-type polynomials of (arithmetic) matroids and their expansions over
//! bases: activities, molecule weights, activity polynomials and the
//! lattice-point expansion of representable instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::abelian::{quotient_map, FgGroup, IntMatrix, VectorList};
use crate::arithmetic::{ArithmeticMatroid, Kind, Represented};
use crate::error::{Error, Result};
use crate::matroid::{Molecule, RankTable};
use crate::poly::{rat, BivarPoly, SubsetExpansion};
use crate::report::Report;
use crate::sample::Sampler;
use crate::subset::Subset;
use crate::zonotope::{iota_counts, Closure, Zonotope};

/// Random points used by every evaluation-based identity check.
pub const SAMPLE_POINTS: usize = 20;

fn ipow(x: &BigRational, k: i64) -> BigRational {
    num_traits::pow(if k >= 0 { x.clone() } else { x.recip() }, k.unsigned_abs() as usize)
}

fn product<'a>(it: impl Iterator<Item = BigRational> + 'a) -> BigRational {
    it.fold(BigRational::one(), |acc, x| acc * x)
}

/// `Z(q, v) = Σ_A m(A) q^{-rk(A)} Π_{e ∈ A} v_e`.
pub fn multivariate_z(a: &ArithmeticMatroid) -> SubsetExpansion {
    let n = a.ground_size();
    let ranks = a.matroid().ranks().to_vec();
    SubsetExpansion::new(n, a.multiplicities().to_vec(), ranks).expect("tables have 2^n entries")
}

/// `M(x, y) = Σ_A m(A) (x-1)^{rk(E)-rk(A)} (y-1)^{|A|-rk(A)}`.
pub fn arithmetic_tutte(a: &ArithmeticMatroid) -> BivarPoly {
    multivariate_z(a)
        .to_bivariate(a.matroid().full_rank() as u32)
        .expect("rank functions satisfy rk(A) <= min(|A|, rk(E))")
}

/// The Tutte polynomial of the underlying matroid.
pub fn tutte(m: &RankTable) -> BivarPoly {
    arithmetic_tutte(&ArithmeticMatroid::trivial(m.clone()))
}

/// `Σ_B x^{i(B)} y^{e(B)}`.
pub fn activity_tutte(m: &RankTable) -> Result<BivarPoly> {
    let mut out = BivarPoly::zero();
    for b in m.bases() {
        let act = m.activities(b)?;
        out.add_term(BigRational::one(), act.internal.len() as u32, act.external.len() as u32);
    }
    Ok(out)
}

/// `q^{-rk(E)} Σ_B Π_{b ∈ B} v_b Π_{e ∈ E(B)} (v_e + 1) Π_{i ∈ I(B)} (q/v_i + 1)`.
pub fn basis_expansion_value(m: &RankTable, q: &BigRational, v: &[BigRational]) -> Result<BigRational> {
    check_point(m.ground_size(), q, v)?;
    let mut sum = BigRational::zero();
    for b in m.bases() {
        let act = m.activities(b)?;
        sum += product(b.iter().map(|e| v[e].clone()))
            * product(act.external.iter().map(|e| &v[e] + BigRational::one()))
            * product(act.internal.iter().map(|e| q / &v[e] + BigRational::one()));
    }
    Ok(sum * ipow(q, -(m.full_rank() as i64)))
}

fn check_point(n: usize, q: &BigRational, v: &[BigRational]) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    if q.is_zero() {
        return Err(Error::DivisionByZero("q = 0"));
    }
    if v.iter().any(Zero::is_zero) {
        return Err(Error::DivisionByZero("v_e = 0 in q/v_e"));
    }
    Ok(())
}

/// One pair `(B, C)` of the weighted basis expansion: `C ⊆ I(B) ∪ E(B)`
/// appears with weight `ρ((B ∪ C) - I(B), (B - C) ∪ E(B))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrapoTerm {
    pub basis: Subset,
    pub c: Subset,
    #[serde(serialize_with = "serialize_int")]
    pub weight: BigInt,
    pub internal: Subset,
    pub external: Subset,
}

fn serialize_int<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl CrapoTerm {
    /// `i(B, C) = |I(B) ∩ C|`.
    pub fn i(&self) -> usize {
        (self.internal & self.c).len()
    }

    /// `e(B, C) = |E(B) ∩ C|`.
    pub fn e(&self) -> usize {
        (self.external & self.c).len()
    }
}

/// All pairs `(B, C)` with nonzero weight.
pub fn crapo_expansion(a: &ArithmeticMatroid) -> Result<Vec<CrapoTerm>> {
    if !a.is_integral() {
        return Err(Error::NonIntegral("the weighted basis expansion"));
    }
    let m = a.matroid();
    let mut out = Vec::new();
    for (b, mol) in m.molecule_partition()? {
        for c in (mol.free | mol.loops).subsets() {
            let weight = a.rho_unchecked((b | c) - mol.free, (b - c) | mol.loops);
            if !weight.is_zero() {
                out.push(CrapoTerm {
                    basis: b,
                    c,
                    weight: weight.to_integer(),
                    internal: mol.free,
                    external: mol.loops,
                });
            }
        }
    }
    Ok(out)
}

/// `Σ w x^{i(B,C)} y^{e(B,C)}`.
pub fn crapo_bivariate(terms: &[CrapoTerm]) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for t in terms {
        out.add_term(BigRational::from_integer(t.weight.clone()), t.i() as u32, t.e() as u32);
    }
    out
}

/// `q^{-rk(E)} Σ w Π_B v_b Π_{E(B,C)} (v_e + 1) Π_{I(B,C)} (q/v_i + 1)`.
pub fn crapo_value(rank_e: usize, terms: &[CrapoTerm], q: &BigRational, v: &[BigRational]) -> Result<BigRational> {
    let n = v.len();
    if let Some(t) = terms.iter().find(|t| (t.basis | t.c).span() > n) {
        return Err(Error::SubsetOutOfRange { subset: t.basis | t.c, size: n });
    }
    check_point(n, q, v)?;
    let mut sum = BigRational::zero();
    for t in terms {
        sum += BigRational::from_integer(t.weight.clone())
            * product(t.basis.iter().map(|e| v[e].clone()))
            * product((t.external & t.c).iter().map(|e| &v[e] + BigRational::one()))
            * product((t.internal & t.c).iter().map(|e| q / &v[e] + BigRational::one()));
    }
    Ok(sum * ipow(q, -(rank_e as i64)))
}

/// `f(x) = Σ_{K ⊆ F} ρ(R, R ∪ (F - K))/m(R) x^{|K|}`.
pub fn f_polynomial(a: &ArithmeticMatroid, mol: &Molecule) -> BivarPoly {
    let r = mol.lower;
    let mut out = BivarPoly::zero();
    for k in mol.free.subsets() {
        let c = a.rho_unchecked(r, r | (mol.free - k)) / a.mult(r);
        out.add_term(c, k.len() as u32, 0);
    }
    out
}

/// `g(y) = Σ_{L ⊆ T} ρ(R ∪ L, R ∪ T) y^{|L|}`.
pub fn g_polynomial(a: &ArithmeticMatroid, mol: &Molecule) -> BivarPoly {
    let r = mol.lower;
    let mut out = BivarPoly::zero();
    for l in mol.loops.subsets() {
        out.add_term(a.rho_unchecked(r | l, r | mol.loops), 0, l.len() as u32);
    }
    out
}

/// `Σ_{A ∈ [R,S]} m(A) q^{-rk(A)} Π_{e ∈ A} v_e`.
fn interval_value(a: &ArithmeticMatroid, mol: &Molecule, q: &BigRational, v: &[BigRational]) -> BigRational {
    (mol.free | mol.loops)
        .subsets()
        .map(|x| {
            let s = mol.lower | x;
            a.mult(s) * ipow(q, -(a.rank(s) as i64)) * product(s.iter().map(|e| v[e].clone()))
        })
        .sum()
}

/// Both molecule expansions of the interval sum: the general one through
/// `ρ(R ∪ L, S - K)` and, for quasi-arithmetic instances, the factorized
/// one. Checked at random points in `(q, v)` and coefficient-wise in the
/// bivariate specialization.
pub fn molecule_sum_identity(a: &ArithmeticMatroid, mol: &Molecule, sampler: &mut Sampler) -> Result<Report> {
    let n = a.ground_size();
    let (r, s) = (mol.lower, mol.upper());
    if a.matroid().molecule(r, s).as_ref() != Some(mol) {
        return Err(Error::NotAMolecule(format!("[{r}, {s}]")));
    }
    let quasi = matches!(a.kind(), Kind::Quasi | Kind::Arithmetic);
    let f = f_polynomial(a, mol);
    let g = g_polynomial(a, mol);
    let mut report = Report::new();
    let name = format!("[{r}, {s}]");

    let (mut general_ok, mut factored_ok) = (true, true);
    for _ in 0..SAMPLE_POINTS {
        let q = sampler.rational();
        let v = sampler.vector(n);
        let lhs = interval_value(a, mol, &q, &v);
        let prefix = ipow(&q, -(a.rank(s) as i64)) * product((r | mol.free).iter().map(|e| v[e].clone()));
        let k_factor = |k: Subset| product(k.iter().map(|e| &q / &v[e] + BigRational::one()));
        let l_factor = |l: Subset| product(l.iter().map(|e| &v[e] + BigRational::one()));
        let mut general = BigRational::zero();
        for k in mol.free.subsets() {
            for l in mol.loops.subsets() {
                general += a.rho_unchecked(r | l, s - k) * k_factor(k) * l_factor(l);
            }
        }
        general_ok &= lhs == &prefix * general;
        if quasi {
            let fk: BigRational = mol
                .free
                .subsets()
                .map(|k| a.rho_unchecked(r, r | (mol.free - k)) / a.mult(r) * k_factor(k))
                .sum();
            let gl: BigRational =
                mol.loops.subsets().map(|l| a.rho_unchecked(r | l, r | mol.loops) * l_factor(l)).sum();
            factored_ok &= lhs == prefix * fk * gl;
        }
    }
    report.record(format!("{name} interval sum, general form"), general_ok, format!("{SAMPLE_POINTS} points"));
    if quasi {
        report.record(format!("{name} interval sum, factorized form"), factored_ok, format!("{SAMPLE_POINTS} points"));
    }

    // Bivariate forms; the nullity is taken relative to R.
    let base_nullity = r.len() - a.rank(r);
    let mut lhs = BivarPoly::zero();
    for x in (mol.free | mol.loops).subsets() {
        let t = r | x;
        let i = (a.rank(s) - a.rank(t)) as u32;
        let j = (t.len() - a.rank(t) - base_nullity) as u32;
        lhs = lhs + BivarPoly::shifted_power(i, j).scale(a.mult(t));
    }
    let mut rho_form = BivarPoly::zero();
    for k in mol.free.subsets() {
        for l in mol.loops.subsets() {
            rho_form.add_term(a.rho_unchecked(r | l, s - k), k.len() as u32, l.len() as u32);
        }
    }
    report.compare(format!("{name} bivariate, general form"), &lhs, &rho_form);
    if quasi {
        report.compare(format!("{name} bivariate, factorized form"), &lhs, &(&f * &g));
        let integral = mol.free.subsets().all(|k| (a.rho_unchecked(r, r | (mol.free - k)) / a.mult(r)).is_integer());
        report.record(format!("{name} f-coefficients integral"), integral, f.to_string());
    }
    Ok(report)
}

/// `E_B(y) = Σ_{T ⊇ B} ρ(T, E) y^{|T ∩ E(B)|}` for a basis `B`.
pub fn external_activity_polynomial(a: &ArithmeticMatroid, b: Subset) -> Result<BivarPoly> {
    let act = a.matroid().activities(b)?;
    let full = a.matroid().ground_set();
    let mut out = BivarPoly::zero();
    for x in (full - b).subsets() {
        let t = b | x;
        out.add_term(a.rho_unchecked(t, full), 0, (t & act.external).len() as u32);
    }
    Ok(out)
}

/// `(E_B(y), E*_{B^c}(x))`, the second computed in the dual.
pub fn external_activity_polys(a: &ArithmeticMatroid, b: Subset) -> Result<(BivarPoly, BivarPoly)> {
    let e = external_activity_polynomial(a, b)?;
    let n = a.ground_size();
    let dual = external_activity_polynomial(&a.dual(), b.complement(n))?.swap();
    Ok((e, dual))
}

/// `M(x, y) = Σ_B E*_{B^c}(x) E_B(y) / m(B)`, with the per-basis bridges
/// `m(R)/m(B) E_B = g` and `E*_{B^c} = m(R) f` on `[B - I(B), B ∪ E(B)]`.
pub fn activity_decomposition_report(a: &ArithmeticMatroid) -> Result<Report> {
    if !a.is_integral() {
        return Err(Error::NonIntegral("the activity decomposition"));
    }
    let mut report = Report::new();
    let mut total = BivarPoly::zero();
    let (mut bridge_e, mut bridge_dual) = (true, true);
    let mut detail = String::new();
    for (b, mol) in a.matroid().molecule_partition()? {
        let (e, dual) = external_activity_polys(a, b)?;
        let r = mol.lower;
        if e.scale(&(a.mult(r) / a.mult(b))) != g_polynomial(a, &mol) {
            bridge_e = false;
            detail = format!("basis {b}: E_B = {e}");
        }
        if dual != f_polynomial(a, &mol).scale(a.mult(r)) {
            bridge_dual = false;
            detail = format!("basis {b}: E* = {dual}");
        }
        total = total + (&dual * &e).scale(&a.mult(b).recip());
    }
    report.compare("activity decomposition of M", &total, &arithmetic_tutte(a));
    report.record("bridge m(R)/m(B) E_B = g", bridge_e, detail.clone());
    report.record("bridge E* = m(R) f", bridge_dual, detail);
    Ok(report)
}

/// A list `L' ⊂ Z^{|F|}` with `G/<L_{R ∪ K}>` and `Z^{|F|}/<L'_K> ⊕ G_R`
/// of equal rank and torsion order for every `K ⊆ F`.
///
/// `F` is pushed into `G/<L_R>`; the free coordinates of the images are
/// brought to row echelon form and only the `|F|` nonzero rows are kept.
pub fn project_molecule(list: &VectorList, r: Subset, f: Subset) -> Result<VectorList> {
    let n = list.len();
    if (r | f).span() > n {
        return Err(Error::SubsetOutOfRange { subset: r | f, size: n });
    }
    if !(r & f).is_empty() || list.subset_rank(r | f)? != list.subset_rank(r)? + f.len() {
        return Err(Error::NotAMolecule(format!("[{r}, {}] does not raise the rank by |F|", r | f)));
    }
    let map = quotient_map(list.group(), &list.select(r))?;
    let free_rank = map.target().free_rank();
    let columns: Vec<Vec<BigInt>> = f
        .iter()
        .map(|e| map.map(list.elements()[e].coords()).coords()[..free_rank].to_vec())
        .collect();
    let k = f.len();
    let coords: Vec<Vec<BigInt>> = if k == 0 {
        Vec::new()
    } else {
        let (_, h) = IntMatrix::from_columns(free_rank, &columns).hermite_rows();
        (0..k).map(|j| h.column(j)[..k].to_vec()).collect()
    };
    VectorList::from_coords(FgGroup::free(k), &coords)
}

/// Rank and multiplicity agreement of `project_molecule` for every `K ⊆ F`.
pub fn projection_report(list: &VectorList, r: Subset, f: Subset) -> Result<Report> {
    let projected = project_molecule(list, r, f)?;
    let (mr, rr) = (list.multiplicity(r)?, list.subset_rank(r)?);
    let mut ok = true;
    let mut detail = format!("R = {r}, F = {f}");
    for k in Subset::all(f.len()) {
        let full = r | k.decompress(f);
        let lhs = (list.multiplicity(full)?, list.subset_rank(full)?);
        let rhs = (&mr * projected.multiplicity(k)?, rr + projected.subset_rank(k)?);
        if lhs != rhs {
            ok = false;
            detail = format!("R = {r}, K = {}: {lhs:?} vs {rhs:?}", k.decompress(f));
            break;
        }
    }
    let mut report = Report::new();
    report.record("projected molecule", ok, detail);
    Ok(report)
}

/// Per-basis factors of the lattice-point expansion of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFactors {
    pub basis: Subset,
    /// `Σ_p x^{ι(p)}` over the semi-open zonotope of the projected `I(B)`.
    pub points: BivarPoly,
    /// `Σ_{L ⊆ E(B)} ρ(R ∪ L, R ∪ E(B)) y^{|L|}`.
    pub layers: BivarPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricExpansion {
    pub factors: Vec<BasisFactors>,
    pub total: BivarPoly,
}

/// `Σ_B (Σ_{p ∈ P_B} x^{ι(p)}) g_B(y)`.
pub fn geometric_expansion(rep: &Represented, cap: u64) -> Result<GeometricExpansion> {
    let a = rep.arithmetic();
    let mut factors = Vec::new();
    let mut total = BivarPoly::zero();
    for (b, mol) in a.matroid().molecule_partition()? {
        let projected = project_molecule(rep.list(), mol.lower, mol.free)?;
        let z = Zonotope::from_list(&projected, Closure::SemiOpen)?;
        let mut points = BivarPoly::zero();
        for (i, &c) in iota_counts(&z, cap)?.iter().enumerate() {
            if c > 0 {
                points.add_term(rat(c), i as u32, 0);
            }
        }
        let layers = g_polynomial(a, &mol);
        total = total + &points * &layers;
        factors.push(BasisFactors { basis: b, points, layers });
    }
    Ok(GeometricExpansion { factors, total })
}

/// The lattice-point expansion against `M`, and each point factor against
/// the `ρ`-formula for `f`.
pub fn geometric_report(rep: &Represented, cap: u64) -> Result<Report> {
    let a = rep.arithmetic();
    let geo = geometric_expansion(rep, cap)?;
    let mut report = Report::new();
    report.compare("lattice-point expansion of M", &geo.total, &arithmetic_tutte(a));
    let partition = a.matroid().molecule_partition()?;
    let mut ok = true;
    let mut detail = format!("{} bases", partition.len());
    for ((b, mol), factor) in partition.iter().zip(&geo.factors) {
        let f = f_polynomial(a, mol);
        if factor.points != f {
            ok = false;
            detail = format!("basis {b}: points {} vs f {f}", factor.points);
        }
        report.extend(projection_report(rep.list(), mol.lower, mol.free)?);
    }
    report.record("semi-open points give f", ok, detail);
    Ok(report)
}

/// Deletion-contraction for `Z` at every element, at random points.
pub fn deletion_contraction_report(a: &ArithmeticMatroid, sampler: &mut Sampler) -> Result<Report> {
    let n = a.ground_size();
    let z = multivariate_z(a);
    let mut report = Report::new();
    for e in 0..n {
        let z1 = multivariate_z(&a.delete(e)?);
        let z2 = multivariate_z(&a.contract(e)?);
        let is_loop = a.rank(Subset::singleton(e)) == 0;
        let mut ok = true;
        for _ in 0..SAMPLE_POINTS {
            let q = sampler.rational();
            let v = sampler.vector(n);
            let rest: Vec<BigRational> = (0..n).filter(|&i| i != e).map(|i| v[i].clone()).collect();
            let factor = if is_loop { v[e].clone() } else { &v[e] / &q };
            ok &= z.evaluate(&q, &v)? == z1.evaluate(&q, &rest)? + factor * z2.evaluate(&q, &rest)?;
        }
        report.record(format!("deletion-contraction at {}", e + 1), ok, format!("loop: {is_loop}"));
    }
    Ok(report)
}

/// Nonnegative coefficients of `M`, and for every molecule `[R, S]` the
/// constant term of `M` of the minor `R` contracted, `E - S` deleted, is `ρ(R, S)`.
pub fn nonnegativity_report(a: &ArithmeticMatroid) -> Result<Report> {
    let mut report = Report::new();
    let m = arithmetic_tutte(a);
    let pseudo = a.axiom_check().p.passed();
    if pseudo {
        report.record("nonnegative coefficients", m.is_nonnegative(), m.to_string());
    }
    let full = a.matroid().ground_set();
    let mut ok = true;
    let mut count = 0;
    let mut detail = String::new();
    for mol in a.matroid().molecules() {
        let s = mol.upper();
        let minor = a.minor(mol.lower, full - s)?;
        let constant = arithmetic_tutte(&minor).coeff(0, 0);
        let rho = a.rho_unchecked(mol.lower, s);
        count += 1;
        if constant != rho {
            ok = false;
            detail = format!("[{}, {s}]: constant {constant}, rho {rho}", mol.lower);
        }
    }
    if ok {
        detail = format!("{count} molecules");
    }
    report.record("minor constant term equals rho", ok, detail);
    Ok(report)
}

/// The basis expansions of `T` and `M`, coefficient-wise and, for `Z`, at
/// random points.
pub fn basis_expansion_report(a: &ArithmeticMatroid, sampler: &mut Sampler) -> Result<Report> {
    let n = a.ground_size();
    let m = a.matroid();
    let mut report = Report::new();
    report.compare("activity expansion of T", &activity_tutte(m)?, &tutte(m));
    let z_matroid = multivariate_z(&a.underlying());
    let mut ok = true;
    for _ in 0..SAMPLE_POINTS {
        let q = sampler.rational();
        let v = sampler.vector(n);
        ok &= z_matroid.evaluate(&q, &v)? == basis_expansion_value(m, &q, &v)?;
    }
    report.record("basis expansion of Z for m = 1", ok, format!("{SAMPLE_POINTS} points"));
    if a.is_integral() {
        let terms = crapo_expansion(a)?;
        report.compare("weighted basis expansion of M", &crapo_bivariate(&terms), &arithmetic_tutte(a));
        let z = multivariate_z(a);
        let mut ok = true;
        for _ in 0..SAMPLE_POINTS {
            let q = sampler.rational();
            let v = sampler.vector(n);
            ok &= z.evaluate(&q, &v)? == crapo_value(m.full_rank(), &terms, &q, &v)?;
        }
        report.record("weighted basis expansion of Z", ok, format!("{} terms, {SAMPLE_POINTS} points", terms.len()));
    }
    Ok(report)
}
