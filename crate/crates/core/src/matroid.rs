//! Matroids given by explicit rank tables.
//!
//! The ground set `{0, .., n-1}` carries its index order; internal and
//! external activities (and everything built on them) depend on that order.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Full rank tables are only built for ground sets up to this size.
pub const TABLE_LIMIT: usize = 20;
/// Activities and molecule partitions are only computed up to this size.
pub const ACTIVITY_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementClass {
    Coloop,
    Loop,
    Proper,
}

/// Internally and externally active elements of a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Activities {
    pub internal: Subset,
    pub external: Subset,
}

/// An interval `[R, R ∪ F ∪ T]` on which `rk(A) = rk(R) + |A ∩ F|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Molecule {
    pub lower: Subset,
    pub free: Subset,
    pub loops: Subset,
}

impl Molecule {
    pub fn upper(&self) -> Subset {
        self.lower | self.free | self.loops
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.lower.is_subset_of(a) && a.is_subset_of(self.upper())
    }
}

impl RankTable {
    /// Validates R0 (`rk(∅) = 0`), R1 (monotone), R2 (submodular) and
    /// `rk(A) <= |A|`; the first violation is reported with a witness.
    pub fn new(n: usize, ranks: Vec<u32>) -> Result<RankTable> {
        if n > TABLE_LIMIT {
            return Err(Error::TooLarge { size: n, limit: TABLE_LIMIT, what: "rank tables" });
        }
        if ranks.len() != 1 << n {
            return Err(Error::RankAxiom {
                axiom: "table",
                detail: format!("expected {} entries, got {}", 1usize << n, ranks.len()),
            });
        }
        let t = RankTable { n, ranks };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(n: usize, ranks: Vec<u32>) -> RankTable {
        debug_assert_eq!(ranks.len(), 1 << n);
        RankTable { n, ranks }
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> usize) -> Result<RankTable> {
        if n > TABLE_LIMIT {
            return Err(Error::TooLarge { size: n, limit: TABLE_LIMIT, what: "rank tables" });
        }
        RankTable::new(n, Subset::all(n).map(|a| f(a) as u32).collect())
    }

    /// The uniform matroid `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> RankTable {
        RankTable::new_unchecked(n, Subset::all(n).map(|a| a.len().min(k) as u32).collect())
    }

    fn validate(&self) -> Result<()> {
        if self.ranks[0] != 0 {
            return Err(Error::RankAxiom { axiom: "R0", detail: format!("rk(∅) = {}", self.ranks[0]) });
        }
        for a in Subset::all(self.n) {
            let ra = self.rank(a);
            if ra > a.len() {
                return Err(Error::RankAxiom {
                    axiom: "cardinality",
                    detail: format!("rk({a}) = {ra} exceeds |{a}|"),
                });
            }
            for e in a.complement(self.n).iter() {
                let rae = self.rank(a.with(e));
                if rae < ra {
                    return Err(Error::RankAxiom {
                        axiom: "R1",
                        detail: format!("A = {a}, B = {}: rk(A) = {ra} > rk(B) = {rae}", a.with(e)),
                    });
                }
                for f in a.complement(self.n).iter().filter(|&f| f > e) {
                    let (x, y) = (a.with(e), a.with(f));
                    if self.rank(x | y) + self.rank(a) > self.rank(x) + self.rank(y) {
                        return Err(Error::RankAxiom {
                            axiom: "R2",
                            detail: format!("A = {x}, B = {y}: rk(A∪B) + rk(A∩B) > rk(A) + rk(B)"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn rank(&self, a: Subset) -> usize {
        self.ranks[a.index()] as usize
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground_set())
    }

    pub fn nullity(&self, a: Subset) -> usize {
        a.len() - self.rank(a)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == a.len()
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        b.span() <= self.n && b.len() == self.full_rank() && self.rank(b) == b.len()
    }

    /// All bases in bitmask order.
    pub fn bases(&self) -> Vec<Subset> {
        Subset::all(self.n).filter(|&b| self.is_basis(b)).collect()
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            return Err(Error::IndexOutOfRange { index: e, size: self.n });
        }
        Ok(())
    }

    fn check_activity_size(&self) -> Result<()> {
        if self.n > ACTIVITY_LIMIT {
            return Err(Error::TooLarge { size: self.n, limit: ACTIVITY_LIMIT, what: "activities" });
        }
        Ok(())
    }

    /// External activity: `e ∉ B` is active when it depends on the elements
    /// of `B` after it. Internal activity: `e ∈ B` is active when no earlier
    /// `f` makes `B - e + f` a basis.
    pub fn activities(&self, b: Subset) -> Result<Activities> {
        self.check_activity_size()?;
        if !self.is_basis(b) {
            return Err(Error::NotABasis { subset: b });
        }
        let mut internal = Subset::EMPTY;
        let mut external = Subset::EMPTY;
        for e in 0..self.n {
            if b.contains(e) {
                let exchangeable = (0..e).any(|f| !b.contains(f) && self.is_basis(b.without(e).with(f)));
                if !exchangeable {
                    internal = internal.with(e);
                }
            } else {
                let after = Subset(b.bits() & !((2u32 << e) - 1));
                if self.rank(after.with(e)) == self.rank(after) {
                    external = external.with(e);
                }
            }
        }
        Ok(Activities { internal, external })
    }

    /// The decomposition of `[R, S]` as a molecule, if it is one.
    ///
    /// With `F` the elements raising `rk(R)` and `T` the rest, `[R, S]` is a
    /// molecule iff `rk(R ∪ T) = rk(R)` and `rk(S) = rk(R) + |F|`.
    pub fn molecule(&self, lower: Subset, upper: Subset) -> Option<Molecule> {
        if !lower.is_subset_of(upper) || upper.span() > self.n {
            return None;
        }
        let r = self.rank(lower);
        let free = Subset::from_indices((upper - lower).iter().filter(|&e| self.rank(lower.with(e)) > r));
        let loops = upper - lower - free;
        let ok = self.rank(lower | loops) == r && self.rank(upper) == r + free.len();
        ok.then_some(Molecule { lower, free, loops })
    }

    /// Every molecule `[R, S]`, enumerated over all pairs `R ⊆ S`.
    pub fn molecules(&self) -> impl Iterator<Item = Molecule> + '_ {
        Subset::all(self.n).flat_map(move |s| s.subsets().filter_map(move |r| self.molecule(r, s)))
    }

    /// `2^E = ⊔_B [B - I(B), B ∪ E(B)]`; each interval is returned as a
    /// molecule with `F = I(B)`, `T = E(B)`. Coverage and disjointness are
    /// asserted.
    pub fn molecule_partition(&self) -> Result<Vec<(Subset, Molecule)>> {
        self.check_activity_size()?;
        let mut seen = vec![false; 1 << self.n];
        let mut out = Vec::new();
        for b in self.bases() {
            let act = self.activities(b)?;
            let m = Molecule { lower: b - act.internal, free: act.internal, loops: act.external };
            if self.molecule(m.lower, m.upper()) != Some(m) {
                return Err(Error::Invalid(format!("interval for basis {b} is not a molecule")));
            }
            for x in (m.free | m.loops).subsets() {
                let a = m.lower | x;
                if std::mem::replace(&mut seen[a.index()], true) {
                    return Err(Error::Invalid(format!("subset {a} covered twice")));
                }
            }
            out.push((b, m));
        }
        if let Some(a) = seen.iter().position(|s| !s) {
            return Err(Error::Invalid(format!("subset {} not covered", Subset(a as u32))));
        }
        Ok(out)
    }

    /// Contracts `contract`, deletes `delete`; remaining elements keep their order.
    pub fn minor(&self, contract: Subset, delete: Subset) -> Result<RankTable> {
        for s in [contract, delete] {
            if s.span() > self.n {
                return Err(Error::SubsetOutOfRange { subset: s, size: self.n });
            }
        }
        if !(contract & delete).is_empty() {
            return Err(Error::Invalid(format!("{contract} and {delete} overlap")));
        }
        let keep = self.ground_set() - contract - delete;
        let n = keep.len();
        let base = self.rank(contract);
        let ranks = Subset::all(n)
            .map(|a| (self.rank(a.decompress(keep) | contract) - base) as u32)
            .collect();
        Ok(RankTable::new_unchecked(n, ranks))
    }

    pub fn delete(&self, e: usize) -> Result<RankTable> {
        self.check_element(e)?;
        self.minor(Subset::EMPTY, Subset::singleton(e))
    }

    /// `rk_2(A) = rk(A ∪ e) - rk(e)`.
    pub fn contract(&self, e: usize) -> Result<RankTable> {
        self.check_element(e)?;
        self.minor(Subset::singleton(e), Subset::EMPTY)
    }

    /// `rk*(A) = |A| - rk(E) + rk(E - A)`.
    pub fn dual(&self) -> RankTable {
        let full = self.full_rank();
        let e = self.ground_set();
        let ranks = Subset::all(self.n)
            .map(|a| (a.len() + self.rank(e - a) - full) as u32)
            .collect();
        RankTable::new_unchecked(self.n, ranks)
    }

    pub fn element_class(&self, e: usize) -> Result<ElementClass> {
        self.check_element(e)?;
        let full = self.full_rank();
        let deleted = self.rank(self.ground_set().without(e));
        let contracted = full - self.rank(Subset::singleton(e));
        Ok(if deleted + 1 == full && contracted + 1 == full {
            ElementClass::Coloop
        } else if deleted == full && contracted == full {
            ElementClass::Loop
        } else {
            ElementClass::Proper
        })
    }
}
