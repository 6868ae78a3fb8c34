//! Lattice points of a planar zonotope and its multivariate Ehrhart polynomial.

use arith_tutte::abelian::VectorList;
use arith_tutte::arithmetic::Represented;
use arith_tutte::tutte::geometric_expansion;
use arith_tutte::zonotope::{ehrhart_multivariate, iota_counts, Closure, Zonotope};
use num_rational::BigRational;

fn main() -> arith_tutte::Result<()> {
    let list = VectorList::integer(2, &[vec![3, 0], vec![0, 2], vec![1, 1]])?;
    let rep = Represented::new(list.clone())?;
    let cap = 1_000_000;

    let e = ehrhart_multivariate(&rep)?;
    println!("Ehrhart polynomial: {e}");
    for k in [[1, 1, 1], [2, 1, 3], [0, 2, 1]] {
        let z = Zonotope::from_list(&list, Closure::Closed)?.scaled(&k);
        let points = z.lattice_points(cap)?.len();
        let value = e.evaluate(&k.map(|x| BigRational::from_integer(x.into())))?;
        println!("dilation {k:?}: {points} lattice points, polynomial gives {value}");
    }

    // The semi-open parallelogram spanned by the first two generators tiles the plane.
    let z = Zonotope::new(2, vec![vec![3, 0], vec![0, 2]], Closure::SemiOpen)?;
    println!("semi-open parallelogram, points by interior dimension: {:?}", iota_counts(&z, cap)?);

    let g = geometric_expansion(&rep, cap)?;
    for f in &g.factors {
        println!("B = {}: points {}, layers {}", f.basis, f.points, f.layers);
    }
    println!("sum over bases: {}", g.total);
    Ok(())
}
