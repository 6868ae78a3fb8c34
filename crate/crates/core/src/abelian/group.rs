use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// `Z^free_rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}` with `d_1 | d_2 | ... | d_k`, all `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgGroup {
    pub fn new<T: Into<BigInt>>(free_rank: usize, torsion: Vec<T>) -> Result<FgGroup> {
        let torsion: Vec<BigInt> = torsion.into_iter().map(Into::into).collect();
        let chain_ok = torsion.iter().all(|d| *d >= BigInt::from(2))
            && torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if !chain_ok {
            return Err(Error::InvalidTorsion(torsion.iter().map(|d| d.to_u64().unwrap_or(0)).collect()));
        }
        Ok(FgGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> FgGroup {
        FgGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> FgGroup {
        if order <= 1 {
            FgGroup::free(0)
        } else {
            FgGroup { free_rank: 0, torsion: vec![BigInt::from(order)] }
        }
    }

    /// Normalizes an arbitrary product `Z^free_rank ⊕ Z_{a_1} ⊕ ...` (factors
    /// `0` are free, `1` trivial) and returns the canonical group together with
    /// the coordinate change taking old coordinates to new ones.
    pub fn normalize(free_rank: usize, factors: &[BigInt]) -> (FgGroup, CoordinateMap) {
        let dim = free_rank + factors.len();
        let relations: Vec<Vec<BigInt>> = factors
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut col = vec![BigInt::zero(); dim];
                col[free_rank + i] = a.abs();
                col
            })
            .collect();
        let map = CoordinateMap::from_relations(dim, &relations);
        (map.target.clone(), map)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of coordinates of an element.
    pub fn dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// `|G_t|`.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The order of the group when it is finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Modulus of coordinate `i`: zero for free coordinates.
    pub fn modulus(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn element<T: Into<BigInt>>(&self, coords: Vec<T>) -> Result<GroupElement> {
        let coords: Vec<BigInt> = coords.into_iter().map(Into::into).collect();
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        Ok(self.reduce(coords))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![BigInt::zero(); self.dim()] }
    }

    fn reduce(&self, mut coords: Vec<BigInt>) -> GroupElement {
        for (i, d) in self.torsion.iter().enumerate() {
            let c = &mut coords[self.free_rank + i];
            *c = c.mod_floor(d);
        }
        GroupElement { coords }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.coords.len() == self.dim()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(i, d)| {
                    let c = &g.coords[self.free_rank + i];
                    !c.is_negative() && c < d
                })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.reduce(coords)
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().map(|x| x * k).collect())
    }
}

impl fmt::Debug for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Coordinates with respect to the canonical generators of an [`FgGroup`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", c.join(","))
    }
}

/// Free rank and invariant factors of a quotient `G / <S>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl QuotientStructure {
    /// `|G_A|`, the order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Exponent of the torsion subgroup (the largest invariant factor).
    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn as_group(&self) -> FgGroup {
        FgGroup { free_rank: self.free_rank, torsion: self.torsion.clone() }
    }
}

/// `|q G_t| = prod_i d_i / gcd(d_i, q)` for the torsion invariants of `quotient`.
pub fn q_image_order(quotient: &QuotientStructure, q: i64) -> Result<BigInt> {
    if q <= 0 {
        return Err(Error::NonPositiveModulus(q));
    }
    Ok(image_order(&quotient.torsion, &BigInt::from(q)))
}

/// `|q H|` for a finite group with the given invariant factors; any integer `q`.
pub(crate) fn image_order(torsion: &[BigInt], q: &BigInt) -> BigInt {
    torsion.iter().map(|d| d / d.gcd(q)).product()
}

/// A linear identification `Z^dim / <relations>  ≅  target`, as produced by
/// a Smith normal form of the relation matrix.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    target: FgGroup,
    u: IntMatrix,
    diag: Vec<BigInt>,
    rank: usize,
}

impl CoordinateMap {
    pub(crate) fn from_relations(dim: usize, relations: &[Vec<BigInt>]) -> CoordinateMap {
        let p = IntMatrix::from_columns(dim, relations);
        let s = smith_normal_form(&p);
        let rank = s.rank();
        let diag: Vec<BigInt> = s.diagonal().into_iter().take(rank).collect();
        let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        let target = FgGroup { free_rank: dim - rank, torsion };
        CoordinateMap { target, u: s.u, diag, rank }
    }

    pub fn target(&self) -> &FgGroup {
        &self.target
    }

    /// Image of a coordinate vector of the source presentation.
    pub fn map(&self, x: &[BigInt]) -> GroupElement {
        let y = self.u.apply(x);
        let mut coords: Vec<BigInt> = y[self.rank..].to_vec();
        for (i, d) in self.diag.iter().enumerate() {
            if !d.is_one() {
                coords.push(y[i].mod_floor(d));
            }
        }
        GroupElement { coords }
    }

    pub fn structure(&self) -> QuotientStructure {
        QuotientStructure {
            free_rank: self.target.free_rank,
            torsion: self.target.torsion.clone(),
        }
    }
}

fn relations_for(group: &FgGroup, elements: &[&GroupElement]) -> Vec<Vec<BigInt>> {
    let dim = group.dim();
    let mut cols: Vec<Vec<BigInt>> = elements.iter().map(|g| g.coords.clone()).collect();
    for (i, d) in group.torsion.iter().enumerate() {
        let mut col = vec![BigInt::zero(); dim];
        col[group.free_rank + i] = d.clone();
        cols.push(col);
    }
    cols
}

/// `G / <S>` as a coordinate map from `G`'s coordinates.
pub fn quotient_map(group: &FgGroup, elements: &[&GroupElement]) -> Result<CoordinateMap> {
    for g in elements {
        if g.coords.len() != group.dim() {
            return Err(Error::DimensionMismatch { expected: group.dim(), found: g.coords.len() });
        }
    }
    Ok(CoordinateMap::from_relations(group.dim(), &relations_for(group, elements)))
}

/// Invariant factors and free rank of `G / <S>`.
pub fn quotient_structure(group: &FgGroup, elements: &[&GroupElement]) -> Result<QuotientStructure> {
    Ok(quotient_map(group, elements)?.structure())
}

/// An ordered list `(g_1, ..., g_n)` of elements of one group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorList {
    group: FgGroup,
    elements: Vec<GroupElement>,
    labels: Option<Vec<String>>,
}

impl VectorList {
    pub fn new(group: FgGroup, elements: Vec<GroupElement>) -> Result<VectorList> {
        for g in &elements {
            if !group.contains(g) {
                return Err(Error::DimensionMismatch { expected: group.dim(), found: g.coords.len() });
            }
        }
        Ok(VectorList { group, elements, labels: None })
    }

    /// Convenience constructor from raw integer coordinates.
    pub fn from_coords<T: Into<BigInt> + Clone>(group: FgGroup, coords: &[Vec<T>]) -> Result<VectorList> {
        let elements = coords
            .iter()
            .map(|c| group.element(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        VectorList::new(group, elements)
    }

    /// A list in `Z^d` given by integer vectors.
    pub fn integer(d: usize, coords: &[Vec<i64>]) -> Result<VectorList> {
        VectorList::from_coords(FgGroup::free(d), coords)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<VectorList> {
        if labels.len() != self.elements.len() {
            return Err(Error::Invalid(format!(
                "{} labels for {} elements",
                labels.len(),
                self.elements.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn group(&self) -> &FgGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.len())
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        if a.span() > self.len() {
            return Err(Error::SubsetOutOfRange { subset: a, size: self.len() });
        }
        Ok(())
    }

    pub fn select(&self, a: Subset) -> Vec<&GroupElement> {
        a.iter().map(|i| &self.elements[i]).collect()
    }

    /// `G / <L_A>`.
    pub fn quotient(&self, a: Subset) -> Result<QuotientStructure> {
        self.check_subset(a)?;
        quotient_structure(&self.group, &self.select(a))
    }

    /// `rk(A) = rk(G) - rk(G / <L_A>)`.
    pub fn subset_rank(&self, a: Subset) -> Result<usize> {
        Ok(self.group.free_rank - self.quotient(a)?.free_rank)
    }

    /// `m(A) = |G_A|`.
    pub fn multiplicity(&self, a: Subset) -> Result<BigInt> {
        Ok(self.quotient(a)?.torsion_order())
    }

    /// The sub-list indexed by `keep`, in order.
    pub fn restrict(&self, keep: Subset) -> VectorList {
        VectorList {
            group: self.group.clone(),
            elements: keep.iter().map(|i| self.elements[i].clone()).collect(),
            labels: self.labels.as_ref().map(|l| keep.iter().map(|i| l[i].clone()).collect()),
        }
    }

    /// Applies a coordinate map to every element.
    pub(crate) fn mapped(&self, map: &CoordinateMap, keep: Subset) -> VectorList {
        VectorList {
            group: map.target().clone(),
            elements: keep.iter().map(|i| map.map(self.elements[i].coords())).collect(),
            labels: self.labels.as_ref().map(|l| keep.iter().map(|i| l[i].clone()).collect()),
        }
    }
}
