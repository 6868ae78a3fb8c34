//! Arithmetic, quasi-arithmetic and pseudo-arithmetic matroids.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::abelian::{quotient_map, QuotientStructure, VectorList};
use crate::error::{Error, Result};
use crate::matroid::{Molecule, RankTable, TABLE_LIMIT};
use crate::subset::Subset;

/// Which axioms a multiplicity function is claimed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// (P) only; multiplicities may be rational.
    Pseudo,
    /// (A1) and (A2); integral multiplicities.
    Quasi,
    /// (A1), (A2) and (P); integral multiplicities.
    Arithmetic,
    /// No claim; nothing is checked beyond positivity.
    Unchecked,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Pseudo => "pseudo",
            Kind::Quasi => "quasi",
            Kind::Arithmetic => "arithmetic",
            Kind::Unchecked => "unchecked",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Result of an exhaustive axiom check; each failure carries the first witness found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub a1: Verdict,
    pub a2: Verdict,
    pub p: Verdict,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.a1.passed() && self.a2.passed() && self.p.passed()
    }

    /// Whether the axioms required by `kind` hold.
    pub fn supports(&self, kind: Kind) -> bool {
        match kind {
            Kind::Pseudo => self.p.passed(),
            Kind::Quasi => self.a1.passed() && self.a2.passed(),
            Kind::Arithmetic => self.all_pass(),
            Kind::Unchecked => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticMatroid {
    matroid: RankTable,
    mult: Vec<BigRational>,
    kind: Kind,
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

impl ArithmeticMatroid {
    /// Validates positivity, integrality for quasi and arithmetic kinds, and
    /// the axioms the declared kind claims.
    pub fn new(matroid: RankTable, mult: Vec<BigRational>, kind: Kind) -> Result<ArithmeticMatroid> {
        let a = ArithmeticMatroid::new_unchecked(matroid, mult, kind)?;
        let report = a.axiom_check();
        if !report.supports(kind) {
            let failed = [("A1", &report.a1), ("A2", &report.a2), ("P", &report.p)]
                .into_iter()
                .find_map(|(name, v)| match v {
                    Verdict::Fail(w) => Some(format!("{name}: {w}")),
                    Verdict::Pass => None,
                })
                .unwrap_or_default();
            return Err(Error::Multiplicity(format!("declared {kind} but {failed}")));
        }
        Ok(a)
    }

    /// Checks shape, positivity and integrality only.
    pub fn new_unchecked(matroid: RankTable, mult: Vec<BigRational>, kind: Kind) -> Result<ArithmeticMatroid> {
        if mult.len() != matroid.ranks().len() {
            return Err(Error::Multiplicity(format!(
                "expected {} multiplicities, got {}",
                matroid.ranks().len(),
                mult.len()
            )));
        }
        if let Some(i) = mult.iter().position(|m| !m.is_positive()) {
            return Err(Error::Multiplicity(format!("m({}) = {} is not positive", Subset(i as u32), mult[i])));
        }
        if matches!(kind, Kind::Quasi | Kind::Arithmetic) {
            if let Some(i) = mult.iter().position(|m| !m.is_integer()) {
                return Err(Error::Multiplicity(format!(
                    "m({}) = {} is not an integer",
                    Subset(i as u32),
                    mult[i]
                )));
            }
        }
        Ok(ArithmeticMatroid { matroid, mult, kind })
    }

    /// The matroid with `m ≡ 1`.
    pub fn trivial(matroid: RankTable) -> ArithmeticMatroid {
        let mult = vec![BigRational::one(); matroid.ranks().len()];
        ArithmeticMatroid { matroid, mult, kind: Kind::Arithmetic }
    }

    /// Rank and multiplicity tables of a list; `kind` is arithmetic.
    pub fn from_representation(list: &VectorList) -> Result<ArithmeticMatroid> {
        Ok(Represented::new(list.clone())?.arithmetic().clone())
    }

    pub fn matroid(&self) -> &RankTable {
        &self.matroid
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn ground_size(&self) -> usize {
        self.matroid.ground_size()
    }

    pub fn rank(&self, a: Subset) -> usize {
        self.matroid.rank(a)
    }

    pub fn mult(&self, a: Subset) -> &BigRational {
        &self.mult[a.index()]
    }

    pub fn multiplicities(&self) -> &[BigRational] {
        &self.mult
    }

    pub fn is_integral(&self) -> bool {
        self.mult.iter().all(BigRational::is_integer)
    }

    /// The same matroid with `m ≡ 1`.
    pub fn underlying(&self) -> ArithmeticMatroid {
        ArithmeticMatroid::trivial(self.matroid.clone())
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        if a.span() > self.ground_size() {
            return Err(Error::SubsetOutOfRange { subset: a, size: self.ground_size() });
        }
        Ok(())
    }

    /// `(-1)^{|T|} Σ_{A ∈ [R,S]} (-1)^{|S|-|A|} m(A)`, where `T` is the set of
    /// elements of `S - R` that do not raise the rank of `R`.
    pub fn rho(&self, lower: Subset, upper: Subset) -> Result<BigRational> {
        self.check_subset(upper)?;
        if !lower.is_subset_of(upper) {
            return Err(Error::NotAnInterval { lower, upper });
        }
        Ok(self.rho_unchecked(lower, upper))
    }

    pub(crate) fn rho_unchecked(&self, lower: Subset, upper: Subset) -> BigRational {
        let r = self.rank(lower);
        let gap = upper - lower;
        let t = gap.iter().filter(|&e| self.rank(lower.with(e)) == r).count();
        let mut sum = BigRational::zero();
        for x in gap.subsets() {
            let m = self.mult(lower | x);
            if (gap.len() - x.len()).is_multiple_of(2) {
                sum += m;
            } else {
                sum -= m;
            }
        }
        if t % 2 == 1 {
            -sum
        } else {
            sum
        }
    }

    /// Exhaustive check: (A1) over every pair `(A, e)`, (A2) and (P) over
    /// every molecule.
    pub fn axiom_check(&self) -> AxiomReport {
        let n = self.ground_size();
        let mut a1 = Verdict::Pass;
        'outer: for a in Subset::all(n) {
            for e in a.complement(n).iter() {
                let b = a.with(e);
                let (small, big) = if self.rank(b) > self.rank(a) { (a, b) } else { (b, a) };
                let q = self.mult(big) / self.mult(small);
                if !q.is_integer() {
                    a1 = Verdict::Fail(format!(
                        "A = {a}, e = {}: m({small}) = {} does not divide m({big}) = {}",
                        e + 1,
                        self.mult(small),
                        self.mult(big)
                    ));
                    break 'outer;
                }
            }
        }
        let mut a2 = Verdict::Pass;
        let mut p = Verdict::Pass;
        for mol in self.matroid.molecules() {
            let (r, s) = (mol.lower, mol.upper());
            if a2.passed() {
                let lhs = self.mult(r) * self.mult(s);
                let rhs = self.mult(r | mol.free) * self.mult(r | mol.loops);
                if lhs != rhs {
                    a2 = Verdict::Fail(format!(
                        "molecule [{r}, {s}] with F = {}, T = {}: m(R)m(S) = {lhs} but m(R∪F)m(R∪T) = {rhs}",
                        mol.free, mol.loops
                    ));
                }
            }
            if p.passed() {
                let rho = self.rho_unchecked(r, s);
                if rho.is_negative() {
                    p = Verdict::Fail(format!("molecule [{r}, {s}]: rho = {rho} < 0"));
                }
            }
            if !a2.passed() && !p.passed() {
                break;
            }
        }
        AxiomReport { a1, a2, p }
    }

    /// `rk*` with `m*(A) = m(E - A)`.
    pub fn dual(&self) -> ArithmeticMatroid {
        let full = self.matroid.ground_set();
        let mult = Subset::all(self.ground_size()).map(|a| self.mult(full - a).clone()).collect();
        ArithmeticMatroid { matroid: self.matroid.dual(), mult, kind: self.kind }
    }

    /// Contracts `contract` and deletes `delete`: `m'(A) = m(A ∪ contract)`.
    pub fn minor(&self, contract: Subset, delete: Subset) -> Result<ArithmeticMatroid> {
        let matroid = self.matroid.minor(contract, delete)?;
        let keep = self.matroid.ground_set() - contract - delete;
        let mult = Subset::all(matroid.ground_size())
            .map(|a| self.mult(a.decompress(keep) | contract).clone())
            .collect();
        Ok(ArithmeticMatroid { matroid, mult, kind: self.kind })
    }

    pub fn delete(&self, e: usize) -> Result<ArithmeticMatroid> {
        self.check_element(e)?;
        self.minor(Subset::EMPTY, Subset::singleton(e))
    }

    pub fn contract(&self, e: usize) -> Result<ArithmeticMatroid> {
        self.check_element(e)?;
        self.minor(Subset::singleton(e), Subset::EMPTY)
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.ground_size() {
            return Err(Error::IndexOutOfRange { index: e, size: self.ground_size() });
        }
        Ok(())
    }

    /// Integer multiplicity, or an error naming `what` needs integrality.
    pub(crate) fn int_mult(&self, a: Subset, what: &'static str) -> Result<BigInt> {
        let m = self.mult(a);
        if !m.is_integer() {
            return Err(Error::NonIntegral(what));
        }
        Ok(m.to_integer())
    }

    /// `ρ(R,S)·m(R) = ρ(R,R∪T)·ρ(R,R∪F)` on a molecule.
    pub fn rho_factorizes(&self, mol: &Molecule) -> bool {
        let r = mol.lower;
        self.rho_unchecked(r, mol.upper()) * self.mult(r)
            == self.rho_unchecked(r, r | mol.loops) * self.rho_unchecked(r, r | mol.free)
    }
}

/// A list together with its cached quotient structures `G/<L_A>` for all `A`.
#[derive(Clone, Debug)]
pub struct Represented {
    list: VectorList,
    quotients: Vec<QuotientStructure>,
    arith: ArithmeticMatroid,
}

impl Represented {
    pub fn new(list: VectorList) -> Result<Represented> {
        let n = list.len();
        if n > TABLE_LIMIT {
            return Err(Error::TooLarge { size: n, limit: TABLE_LIMIT, what: "rank tables" });
        }
        let quotients = Subset::all(n).map(|a| list.quotient(a)).collect::<Result<Vec<_>>>()?;
        let rk_g = list.group().free_rank();
        let ranks = quotients.iter().map(|q| (rk_g - q.free_rank) as u32).collect();
        let mult = quotients.iter().map(|q| int(q.torsion_order())).collect();
        let matroid = RankTable::new_unchecked(n, ranks);
        let arith = ArithmeticMatroid { matroid, mult, kind: Kind::Arithmetic };
        Ok(Represented { list, quotients, arith })
    }

    pub fn list(&self) -> &VectorList {
        &self.list
    }

    pub fn arithmetic(&self) -> &ArithmeticMatroid {
        &self.arith
    }

    pub fn matroid(&self) -> &RankTable {
        self.arith.matroid()
    }

    pub fn ground_size(&self) -> usize {
        self.list.len()
    }

    /// `G / <L_A>`.
    pub fn quotient(&self, a: Subset) -> &QuotientStructure {
        &self.quotients[a.index()]
    }

    /// `rk(G)`.
    pub fn group_rank(&self) -> usize {
        self.list.group().free_rank()
    }

    /// lcm over all `A` of the exponent of `G_A`; `|qG_A|` depends on `q` only modulo it.
    pub fn period(&self) -> BigInt {
        self.quotients.iter().fold(BigInt::one(), |acc, q| acc.lcm(&q.exponent()))
    }
}

/// The images of the remaining elements in `G / <g_e>`, in normal form.
pub fn contraction_representation(list: &VectorList, e: usize) -> Result<VectorList> {
    minor_representation(list, Subset::singleton(e), Subset::EMPTY)
}

pub fn deletion_representation(list: &VectorList, e: usize) -> Result<VectorList> {
    minor_representation(list, Subset::EMPTY, Subset::singleton(e))
}

/// Contracts `contract` (passing to `G / <L_contract>`) and deletes `delete`.
pub fn minor_representation(list: &VectorList, contract: Subset, delete: Subset) -> Result<VectorList> {
    let n = list.len();
    for s in [contract, delete] {
        if s.span() > n {
            return Err(Error::SubsetOutOfRange { subset: s, size: n });
        }
    }
    if !(contract & delete).is_empty() {
        return Err(Error::Invalid(format!("{contract} and {delete} overlap")));
    }
    let keep = list.ground_set() - contract - delete;
    if contract.is_empty() {
        return Ok(list.restrict(keep));
    }
    let map = quotient_map(list.group(), &list.select(contract))?;
    Ok(list.mapped(&map, keep))
}
