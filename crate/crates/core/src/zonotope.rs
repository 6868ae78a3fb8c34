//! Lattice points of zonotopes and the multivariate Ehrhart polynomial.
//!
//! Membership is decided exactly from a half-space description inside the
//! linear span `W` of the generators: every facet normal of a zonotope is
//! orthogonal (within `W`) to `dim W - 1` independent generators, and the
//! zonotope spans `[Σ min(0, c·g), Σ max(0, c·g)]` in direction `c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::abelian::{kernel_basis, IntMatrix, VectorList};
use crate::arithmetic::Represented;
use crate::error::{Error, Result};
use crate::poly::Multilinear;
use crate::report::Report;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// `Σ t_e g_e` with `0 <= t_e <= 1`.
    Closed,
    /// `Σ t_e g_e` with `0 <= t_e < 1`; generators must be independent.
    SemiOpen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zonotope {
    dim: usize,
    generators: Vec<Vec<i64>>,
    closure: Closure,
}

/// A lattice point; `iota` counts the zero coefficients `t_e = 0` of a
/// semi-open representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePoint {
    pub point: Vec<i64>,
    pub iota: Option<usize>,
}

/// Linear functionals on `Z^d`: `ortho` cuts out the span `W`, and each slab
/// `lo <= c·p <= hi` bounds the zonotope inside `W`.
struct HalfSpaces {
    ortho: Vec<Vec<i64>>,
    slabs: Vec<(Vec<i64>, i128, i128)>,
}

fn dot(c: &[i64], p: &[i64]) -> i128 {
    c.iter().zip(p).map(|(&a, &b)| a as i128 * b as i128).sum()
}

fn small(v: Vec<BigInt>) -> Result<Vec<i64>> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    v.into_iter()
        .map(|x| {
            let y = if g.is_zero() { x } else { &x / &g * &sign };
            y.to_i64().ok_or_else(|| Error::Invalid("normal vector entries too large".into()))
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Zonotope {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>, closure: Closure) -> Result<Zonotope> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
        }
        Ok(Zonotope { dim, generators, closure })
    }

    /// The zonotope of a list in a free group.
    pub fn from_list(list: &VectorList, closure: Closure) -> Result<Zonotope> {
        if !list.group().is_torsion_free() {
            return Err(Error::TorsionAmbient("zonotopes"));
        }
        let generators = list
            .elements()
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|x| x.to_i64().ok_or_else(|| Error::Invalid("generator entries too large".into())))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Zonotope::new(list.group().free_rank(), generators, closure)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// The zonotope of `(k_e g_e)`.
    pub fn scaled(&self, k: &[i64]) -> Zonotope {
        let generators = self
            .generators
            .iter()
            .zip(k)
            .map(|(g, &s)| g.iter().map(|x| x * s).collect())
            .collect();
        Zonotope { dim: self.dim, generators, closure: self.closure }
    }

    fn matrix(&self, rows: &[usize], extra: &[Vec<i64>]) -> IntMatrix {
        let mut m: Vec<Vec<i64>> = rows.iter().map(|&i| self.generators[i].clone()).collect();
        m.extend(extra.iter().cloned());
        if m.is_empty() {
            return IntMatrix::zeros(0, self.dim);
        }
        IntMatrix::from_rows(&m)
    }

    fn span_rank(&self) -> usize {
        let all: Vec<usize> = (0..self.generators.len()).collect();
        self.matrix(&all, &[]).rank()
    }

    /// Normal inside the span that is orthogonal to the listed generators,
    /// if they are independent with corank one in the span.
    fn normal(&self, rows: &[usize], ortho: &[Vec<i64>]) -> Result<Option<Vec<i64>>> {
        let kernel = kernel_basis(&self.matrix(rows, ortho));
        if kernel.len() != 1 {
            return Ok(None);
        }
        small(kernel.into_iter().next().unwrap()).map(Some)
    }

    fn half_spaces(&self) -> Result<HalfSpaces> {
        let all: Vec<usize> = (0..self.generators.len()).collect();
        let ortho = kernel_basis(&self.matrix(&all, &[]))
            .into_iter()
            .map(small)
            .collect::<Result<Vec<_>>>()?;
        let rank = self.dim - ortho.len();
        let mut slabs: Vec<(Vec<i64>, i128, i128)> = Vec::new();
        if rank > 0 {
            for rows in combinations(self.generators.len(), rank - 1) {
                let Some(c) = self.normal(&rows, &ortho)? else { continue };
                if slabs.iter().any(|(d, _, _)| *d == c) {
                    continue;
                }
                let (mut lo, mut hi) = (0i128, 0i128);
                for g in &self.generators {
                    let t = dot(&c, g);
                    lo += t.min(0);
                    hi += t.max(0);
                }
                slabs.push((c, lo, hi));
            }
        }
        Ok(HalfSpaces { ortho, slabs })
    }

    /// Integer points of the bounding box, after checking its size against `cap`.
    fn candidates(&self, cap: u64) -> Result<impl Iterator<Item = Vec<i64>>> {
        let mut lo = vec![0i64; self.dim];
        let mut hi = vec![0i64; self.dim];
        for g in &self.generators {
            for (i, &x) in g.iter().enumerate() {
                lo[i] += x.min(0);
                hi[i] += x.max(0);
            }
        }
        let count = lo.iter().zip(&hi).fold(1u128, |acc, (l, h)| acc.saturating_mul((h - l + 1) as u128));
        if count > cap as u128 {
            return Err(Error::CapExceeded { required: count, cap });
        }
        let total = count as u64;
        Ok((0..total).map(move |mut idx| {
            let mut p = vec![0i64; lo.len()];
            for i in (0..lo.len()).rev() {
                let w = (hi[i] - lo[i] + 1) as u64;
                p[i] = lo[i] + (idx % w) as i64;
                idx /= w;
            }
            p
        }))
    }

    /// All integer points, in lexicographic order. Semi-open points carry `ι`.
    pub fn lattice_points(&self, cap: u64) -> Result<Vec<LatticePoint>> {
        match self.closure {
            Closure::Closed => {
                let hs = self.half_spaces()?;
                Ok(self
                    .candidates(cap)?
                    .filter(|p| in_span(&hs, p) && hs.slabs.iter().all(|(c, lo, hi)| (*lo..=*hi).contains(&dot(c, p))))
                    .map(|point| LatticePoint { point, iota: None })
                    .collect())
            }
            Closure::SemiOpen => self.semi_open_points(cap),
        }
    }

    fn semi_open_points(&self, cap: u64) -> Result<Vec<LatticePoint>> {
        let n = self.generators.len();
        if self.span_rank() != n {
            return Err(Error::DependentGenerators);
        }
        let hs = self.half_spaces()?;
        // Dual functionals: c_j vanishes on every generator but g_j.
        let mut duals = Vec::with_capacity(n);
        for j in 0..n {
            let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
            let mut c = self.normal(&others, &hs.ortho)?.expect("independent generators have dual functionals");
            if dot(&c, &self.generators[j]) < 0 {
                c.iter_mut().for_each(|x| *x = -*x);
            }
            let width = dot(&c, &self.generators[j]);
            duals.push((c, width));
        }
        let mut out = Vec::new();
        for p in self.candidates(cap)? {
            if !in_span(&hs, &p) {
                continue;
            }
            let mut zeros = 0;
            let inside = duals.iter().all(|(c, w)| {
                let t = dot(c, &p);
                zeros += usize::from(t == 0);
                (0..*w).contains(&t)
            });
            if inside {
                out.push(LatticePoint { point: p, iota: Some(zeros) });
            }
        }
        Ok(out)
    }

    /// Integer points of the relative interior of the closed zonotope.
    pub fn interior_points(&self, cap: u64) -> Result<Vec<Vec<i64>>> {
        let hs = self.half_spaces()?;
        Ok(self
            .candidates(cap)?
            .filter(|p| in_span(&hs, p) && hs.slabs.iter().all(|(c, lo, hi)| *lo < dot(c, p) && dot(c, p) < *hi))
            .collect())
    }
}

fn in_span(hs: &HalfSpaces, p: &[i64]) -> bool {
    hs.ortho.iter().all(|y| dot(y, p) == 0)
}

/// `Σ_{p} x^{ι(p)}` over the semi-open points, as coefficients by power of `x`.
pub fn iota_counts(z: &Zonotope, cap: u64) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; z.generators().len() + 1];
    let semi = Zonotope { closure: Closure::SemiOpen, ..z.clone() };
    for p in semi.lattice_points(cap)? {
        counts[p.iota.unwrap_or(0)] += 1;
    }
    Ok(counts)
}

/// `E_L(v) = Σ_{A independent} m(A) Π_{e ∈ A} v_e`.
pub fn ehrhart_multivariate(rep: &Represented) -> Result<Multilinear> {
    if !rep.list().group().is_torsion_free() {
        return Err(Error::TorsionAmbient("the multivariate Ehrhart polynomial"));
    }
    let a = rep.arithmetic();
    let n = rep.ground_size();
    let coeffs = Subset::all(n)
        .map(|s| if a.matroid().is_independent(s) { a.mult(s).clone() } else { BigRational::zero() })
        .collect();
    Multilinear::new(n, coeffs)
}

/// The list `(k_e g_e)`.
pub fn scale_list(list: &VectorList, k: &[i64]) -> Result<VectorList> {
    if k.len() != list.len() {
        return Err(Error::DimensionMismatch { expected: list.len(), found: k.len() });
    }
    let coords: Vec<Vec<BigInt>> = list
        .elements()
        .iter()
        .zip(k)
        .map(|(g, &s)| g.coords().iter().map(|x| x * s).collect())
        .collect();
    VectorList::from_coords(list.group().clone(), &coords)
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// All vectors in `{1..=max}^n`.
fn scalings(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (1..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Lattice-point count, reciprocity, diagonal Ehrhart and top-degree checks
/// for every `k ∈ {1..=max_k}^n`. Scalings whose bounding box exceeds `cap`
/// are counted as skipped.
pub fn ehrhart_report(rep: &Represented, max_k: i64, cap: u64) -> Result<Report> {
    let e = ehrhart_multivariate(rep)?;
    let list = rep.list();
    let n = list.len();
    let rk = rep.matroid().full_rank();
    let sign = if rk.is_multiple_of(2) { 1 } else { -1 };
    let z = Zonotope::from_list(list, Closure::Closed)?;
    let mut report = Report::new();
    let (mut closed_ok, mut interior_ok, mut checked, mut skipped) = (true, true, 0usize, 0usize);
    let mut first_failure = String::new();
    for k in scalings(n, max_k) {
        let zk = z.scaled(&k);
        let (points, interior) = match (zk.lattice_points(cap), zk.interior_points(cap)) {
            (Ok(p), Ok(i)) => (p.len() as i64, i.len() as i64),
            (Err(Error::CapExceeded { .. }), _) | (_, Err(Error::CapExceeded { .. })) => {
                skipped += 1;
                continue;
            }
            (Err(err), _) | (_, Err(err)) => return Err(err),
        };
        checked += 1;
        let kv: Vec<BigRational> = k.iter().map(|&x| rat(x)).collect();
        let neg: Vec<BigRational> = k.iter().map(|&x| rat(-x)).collect();
        let at_k = e.evaluate(&kv)?;
        let at_neg = e.evaluate(&neg)?;
        if at_k != rat(points) {
            closed_ok = false;
            first_failure = format!("k = {k:?}: E = {at_k}, points = {points}");
        }
        if at_neg != rat(sign * interior) {
            interior_ok = false;
            first_failure = format!("k = {k:?}: E(-k) = {at_neg}, interior = {interior}");
        }
    }
    let detail = |ok: bool| {
        if ok {
            format!("{checked} scalings, {skipped} skipped")
        } else {
            first_failure.clone()
        }
    };
    report.record("ehrhart/lattice-count", closed_ok, detail(closed_ok));
    report.record("ehrhart/reciprocity", interior_ok, detail(interior_ok));

    let mut diag_ok = true;
    let mut diag_detail = Vec::new();
    for t in 0..=max_k {
        let zt = z.scaled(&vec![t; n]);
        match zt.lattice_points(cap) {
            Ok(p) => {
                let val = e.evaluate(&vec![rat(t); n])?;
                diag_ok &= val == rat(p.len() as i64);
                diag_detail.push(format!("t={t}: {val}/{}", p.len()));
            }
            Err(Error::CapExceeded { .. }) => diag_detail.push(format!("t={t}: skipped")),
            Err(err) => return Err(err),
        }
    }
    report.record("ehrhart/diagonal", diag_ok, diag_detail.join(", "));

    // Top-degree part: for |A| = rk(G) independent, the coefficient is |det L_A|.
    let d = list.group().free_rank();
    let mut top_ok = true;
    for a in Subset::all(n).filter(|a| a.len() == d && rk == d) {
        let rows: Vec<Vec<BigInt>> = list.select(a).iter().map(|g| g.coords().to_vec()).collect();
        let det = if d == 0 { BigInt::one() } else { IntMatrix::from_rows(&rows).determinant().abs() };
        top_ok &= *e.coefficient(a) == BigRational::from_integer(det);
    }
    report.record("ehrhart/top-degree", top_ok, format!("rank {rk}, ambient rank {d}"));

    // Multiplicity of an independent A in k·L is m(A) Π k_e.
    let mut scale_ok = true;
    let k: Vec<i64> = (0..n).map(|i| (i % 3 + 1) as i64).collect();
    let scaled = Represented::new(scale_list(list, &k)?)?;
    for a in Subset::all(n).filter(|&a| rep.matroid().is_independent(a)) {
        let factor: i64 = a.iter().map(|i| k[i]).product();
        scale_ok &= *scaled.arithmetic().mult(a) == rep.arithmetic().mult(a) * rat(factor);
    }
    report.record("ehrhart/scaling", scale_ok, format!("k = {k:?}"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(gens: &[Vec<i64>], closure: Closure) -> Zonotope {
        let dim = gens.first().map_or(0, Vec::len);
        Zonotope::new(dim, gens.to_vec(), closure).unwrap()
    }

    /// Independent oracle: `p` is in the closed zonotope iff some basic
    /// solution of `G t = p` lies in `[0,1]^n`; basic solutions are found by
    /// fixing every non-basic coordinate to 0 or 1.
    fn closed_oracle(gens: &[Vec<i64>], p: &[i64]) -> bool {
        let n = gens.len();
        let dim = p.len();
        for fixed_mask in 0u32..(1 << n) {
            for ones in Subset(fixed_mask).subsets() {
                let free: Vec<usize> = (0..n).filter(|&i| fixed_mask >> i & 1 == 0).collect();
                let rhs: Vec<BigRational> = (0..dim)
                    .map(|r| {
                        let s: i64 = ones.iter().map(|i| gens[i][r]).sum();
                        rat(p[r] - s)
                    })
                    .collect();
                if let Some(t) = solve(gens, &free, &rhs) {
                    if t.iter().all(|x| !x.is_negative() && *x <= BigRational::one()) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Solves `Σ_{i in free} t_i g_i = rhs` when the free columns are independent.
    fn solve(gens: &[Vec<i64>], free: &[usize], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        let dim = rhs.len();
        let k = free.len();
        let mut m: Vec<Vec<BigRational>> = (0..dim)
            .map(|r| {
                let mut row: Vec<BigRational> = free.iter().map(|&i| rat(gens[i][r])).collect();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let mut row = 0;
        for col in 0..k {
            let piv = (row..dim).find(|&r| !m[r][col].is_zero())?;
            m.swap(row, piv);
            let inv = m[row][col].recip();
            for c in 0..=k {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..dim {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=k {
                        let v = &m[row][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
            row += 1;
        }
        if m[row..].iter().any(|r| !r[k].is_zero()) {
            return None;
        }
        Some((0..k).map(|i| m[i][k].clone()).collect())
    }

    #[test]
    fn unit_square() {
        let sq = z(&[vec![1, 0], vec![0, 1]], Closure::Closed);
        assert_eq!(sq.lattice_points(100).unwrap().len(), 4);
        assert_eq!(sq.interior_points(100).unwrap().len(), 0);
        let semi = z(&[vec![1, 0], vec![0, 1]], Closure::SemiOpen);
        assert_eq!(
            semi.lattice_points(100).unwrap(),
            vec![LatticePoint { point: vec![0, 0], iota: Some(2) }]
        );
    }

    #[test]
    fn intervals() {
        let semi = z(&[vec![2]], Closure::SemiOpen);
        let pts = semi.lattice_points(100).unwrap();
        assert_eq!(
            pts,
            vec![LatticePoint { point: vec![0], iota: Some(1) }, LatticePoint { point: vec![1], iota: Some(0) }]
        );
        assert_eq!(z(&[vec![2]], Closure::Closed).interior_points(100).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn degenerate_zonotopes() {
        let point = z(&[vec![0, 0]], Closure::Closed);
        assert_eq!(point.lattice_points(10).unwrap().len(), 1);
        assert_eq!(point.interior_points(10).unwrap().len(), 1);
        // a segment in the plane: relative interior
        let seg = z(&[vec![2, 2]], Closure::Closed);
        assert_eq!(seg.lattice_points(100).unwrap().len(), 3);
        assert_eq!(seg.interior_points(100).unwrap(), vec![vec![1, 1]]);
        assert_eq!(
            z(&[vec![1, 0], vec![2, 0]], Closure::SemiOpen).lattice_points(100).unwrap_err(),
            Error::DependentGenerators
        );
    }

    #[test]
    fn cap_is_enforced() {
        let big = z(&[vec![1000, 0], vec![0, 1000]], Closure::Closed);
        assert!(matches!(big.lattice_points(1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn half_spaces_agree_with_basic_solutions() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![3, 0], vec![0, 2], vec![1, 1]],
            vec![vec![1, 2, 0], vec![2, -1, 1], vec![0, 1, 1]],
            vec![vec![2, 1, 0], vec![-1, 1, 0]],
            vec![vec![1, -2], vec![2, -4], vec![0, 0]],
        ];
        for gens in cases {
            let zc = z(&gens, Closure::Closed);
            let pts: Vec<Vec<i64>> = zc.lattice_points(10_000).unwrap().into_iter().map(|p| p.point).collect();
            for p in zc.candidates(10_000).unwrap() {
                assert_eq!(pts.contains(&p), closed_oracle(&gens, &p), "{gens:?} at {p:?}");
            }
        }
    }

    #[test]
    fn ehrhart_of_planar_example() {
        let list = VectorList::integer(2, &[vec![3, 0], vec![0, 2], vec![1, 1]]).unwrap();
        let e = ehrhart_multivariate(&Represented::new(list.clone()).unwrap()).unwrap();
        assert_eq!(e.to_string(), "1 + 3*v1 + 2*v2 + v3 + 6*v1*v2 + 3*v1*v3 + 2*v2*v3");
        let zc = Zonotope::from_list(&list, Closure::Closed).unwrap();
        let interior = zc.interior_points(10_000).unwrap().len() as i64;
        assert_eq!(e.evaluate(&[rat(-1), rat(-1), rat(-1)]).unwrap(), rat(interior));
        assert_eq!(e.evaluate(&[rat(1), rat(1), rat(1)]).unwrap(), rat(zc.lattice_points(10_000).unwrap().len() as i64));
    }

    #[test]
    fn torsion_ambient_is_rejected() {
        let list = VectorList::from_coords(crate::abelian::FgGroup::cyclic(2), &[vec![1]]).unwrap();
        assert!(matches!(
            ehrhart_multivariate(&Represented::new(list).unwrap()),
            Err(Error::TorsionAmbient(_))
        ));
    }
}
