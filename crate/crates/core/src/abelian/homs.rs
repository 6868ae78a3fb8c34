//! Homomorphisms from a finitely generated abelian group into a finite one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::group::{FgGroup, GroupElement, VectorList};
use crate::error::{Error, Result};

/// A homomorphism `G -> H`, stored as the images of the canonical generators of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    pub images: Vec<GroupElement>,
}

impl Homomorphism {
    pub fn apply(&self, target: &FgGroup, g: &GroupElement) -> GroupElement {
        let mut acc = target.zero();
        for (c, img) in g.coords().iter().zip(&self.images) {
            acc = target.add(&acc, &target.scale(c, img));
        }
        acc
    }
}

/// `|Hom(G, H)| = |H|^{rk G} * prod_i |H[d_i]|`, where `H[d]` is the `d`-torsion of `H`.
pub fn hom_count(source: &FgGroup, target: &FgGroup) -> Result<BigInt> {
    let order = target.order().ok_or(Error::InfiniteTarget)?;
    let mut count = num_traits::pow(order, source.free_rank());
    for d in source.torsion() {
        for h in target.torsion() {
            count *= d.gcd(h);
        }
    }
    Ok(count)
}

fn check_cap(count: &BigInt, cap: u64) -> Result<()> {
    match count.to_u64() {
        Some(c) if c <= cap => Ok(()),
        _ => Err(Error::CapExceeded { required: count.to_u128().unwrap_or(u128::MAX), cap }),
    }
}

/// Elements of `target` that may serve as images of each generator of
/// `source`, as residue vectors. The zero element is always first.
fn generator_choices(source: &FgGroup, target: &[u64]) -> Vec<Vec<Vec<u64>>> {
    (0..source.dim())
        .map(|i| {
            let d = source.modulus(i);
            // Per target coordinate: (step, count). A free generator may go anywhere.
            let axes: Vec<(u64, u64)> = target
                .iter()
                .map(|&h| {
                    if d.is_zero() {
                        (1, h)
                    } else {
                        let g = d.gcd(&BigInt::from(h)).to_u64().unwrap();
                        (h / g, g)
                    }
                })
                .collect();
            let total: u64 = axes.iter().map(|a| a.1).product();
            (0..total)
                .map(|mut idx| {
                    let mut v = vec![0; axes.len()];
                    for j in (0..axes.len()).rev() {
                        v[j] = (idx % axes[j].1) * axes[j].0;
                        idx /= axes[j].1;
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn target_moduli(target: &FgGroup) -> Result<Vec<u64>> {
    if !target.is_finite() {
        return Err(Error::InfiniteTarget);
    }
    target
        .torsion()
        .iter()
        .map(|h| h.to_u64().ok_or_else(|| Error::Invalid(format!("target invariant {h} too large"))))
        .collect()
}

/// Mixed-radix counter; the last digit moves fastest.
pub(crate) struct Odometer {
    radices: Vec<usize>,
    pub(crate) digits: Vec<usize>,
}

impl Odometer {
    pub(crate) fn new(radices: Vec<usize>) -> Odometer {
        let digits = vec![0; radices.len()];
        Odometer { radices, digits }
    }

    /// Advances and returns the most significant changed position `k`;
    /// positions after `k` wrapped to zero. `None` once exhausted.
    pub(crate) fn step(&mut self) -> Option<usize> {
        let mut i = self.radices.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return Some(i);
            }
            self.digits[i] = 0;
        }
    }

    pub(crate) fn radix(&self, i: usize) -> usize {
        self.radices[i]
    }
}

/// Every homomorphism `G -> H` exactly once, in lexicographic order of
/// generator images.
pub fn enumerate_homs(source: &FgGroup, target: &FgGroup, cap: u64) -> Result<Vec<Homomorphism>> {
    let moduli = target_moduli(target)?;
    check_cap(&hom_count(source, target)?, cap)?;
    let choices = generator_choices(source, &moduli);
    let mut odo = Odometer::new(choices.iter().map(Vec::len).collect());
    let mut out = Vec::new();
    loop {
        let images = odo
            .digits
            .iter()
            .enumerate()
            .map(|(i, &c)| target.element(choices[i][c].clone()))
            .collect::<Result<Vec<_>>>()?;
        out.push(Homomorphism { images });
        if odo.step().is_none() {
            break;
        }
    }
    Ok(out)
}

/// For every homomorphism `phi: G -> H`, the set `{e : phi(g_e) = 0}`;
/// returns how many homomorphisms produce each such set (indexed by bitmask).
pub fn hom_zero_histogram(list: &VectorList, target: &FgGroup, cap: u64) -> Result<Vec<u64>> {
    let source = list.group();
    let moduli = target_moduli(target)?;
    check_cap(&hom_count(source, target)?, cap)?;
    let n = list.len();
    let l = moduli.len();
    let choices = generator_choices(source, &moduli);

    // contrib[i][(c * n + e) * l + j] = g_e[i] * choice_c[j] mod h_j
    let residues: Vec<Vec<Vec<u64>>> = list
        .elements()
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .map(|x| moduli.iter().map(|&h| x.mod_floor(&BigInt::from(h)).to_u64().unwrap()).collect())
                .collect()
        })
        .collect();
    let contrib: Vec<Vec<u64>> = choices
        .iter()
        .enumerate()
        .map(|(i, ch)| {
            let mut v = vec![0u64; ch.len() * n * l];
            for (c, img) in ch.iter().enumerate() {
                for e in 0..n {
                    for j in 0..l {
                        let h = moduli[j] as u128;
                        v[(c * n + e) * l + j] =
                            ((residues[e][i][j] as u128 * img[j] as u128) % h) as u64;
                    }
                }
            }
            v
        })
        .collect();

    let mut hist = vec![0u64; 1 << n];
    let mut vals = vec![0u64; n * l];
    let mut odo = Odometer::new(choices.iter().map(Vec::len).collect());
    loop {
        let mut mask = 0usize;
        for e in 0..n {
            if vals[e * l..(e + 1) * l].iter().all(|&x| x == 0) {
                mask |= 1 << e;
            }
        }
        hist[mask] += 1;
        let Some(k) = odo.step() else { break };
        for i in k..odo.digits.len() {
            let new = odo.digits[i];
            let old = if i == k { new - 1 } else { odo.radix(i) - 1 };
            if old == new {
                continue;
            }
            let c = &contrib[i];
            for e in 0..n {
                for j in 0..l {
                    let h = moduli[j];
                    let idx_new = (new * n + e) * l + j;
                    let idx_old = (old * n + e) * l + j;
                    let v = &mut vals[e * l + j];
                    *v = (*v + c[idx_new] + h - c[idx_old]) % h;
                }
            }
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    #[test]
    fn counts_match_small_cases() {
        let z4 = FgGroup::cyclic(4);
        let z2 = FgGroup::cyclic(2);
        let v4 = FgGroup::new(0, vec![2, 2]).unwrap();
        assert_eq!(enumerate_homs(&z4, &z2, 100).unwrap().len(), 2);
        assert_eq!(enumerate_homs(&v4, &z2, 100).unwrap().len(), 4);
        for q in 1..8 {
            let zq = FgGroup::cyclic(q);
            assert_eq!(enumerate_homs(&FgGroup::free(1), &zq, 100).unwrap().len() as u64, q);
        }
    }

    #[test]
    fn homs_respect_torsion_relations() {
        let g = FgGroup::new(1, vec![2, 4]).unwrap();
        let h = FgGroup::new(0, vec![2, 4]).unwrap();
        let homs = enumerate_homs(&g, &h, 10_000).unwrap();
        assert_eq!(BigInt::from(homs.len()), hom_count(&g, &h).unwrap());
        let distinct: std::collections::HashSet<_> = homs.iter().collect();
        assert_eq!(distinct.len(), homs.len());
        for phi in &homs {
            for (i, d) in g.torsion().iter().enumerate() {
                let img = &phi.images[g.free_rank() + i];
                assert!(h.scale(d, img).is_zero());
            }
        }
    }

    #[test]
    fn cap_and_infinite_target_errors() {
        let g = FgGroup::free(3);
        let err = enumerate_homs(&g, &FgGroup::cyclic(10), 999).unwrap_err();
        assert_eq!(err, Error::CapExceeded { required: 1000, cap: 999 });
        assert_eq!(enumerate_homs(&g, &FgGroup::free(1), 10).unwrap_err(), Error::InfiniteTarget);
    }

    #[test]
    fn histogram_agrees_with_explicit_homs() {
        let g = FgGroup::new(2, vec![4]).unwrap();
        let list = VectorList::from_coords(g.clone(), &[vec![2, 0, 1], vec![0, 3, 2], vec![1, 1, 0]]).unwrap();
        for h in [FgGroup::cyclic(6), FgGroup::new(0, vec![2, 4]).unwrap()] {
            let hist = hom_zero_histogram(&list, &h, 1 << 20).unwrap();
            let mut expect = vec![0u64; 8];
            for phi in enumerate_homs(&g, &h, 1 << 20).unwrap() {
                let mask = Subset::from_indices(
                    (0..3).filter(|&e| phi.apply(&h, &list.elements()[e]).is_zero()),
                );
                expect[mask.index()] += 1;
            }
            assert_eq!(hist, expect);
        }
    }
}
