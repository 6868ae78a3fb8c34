//! The weighted basis expansion of `M` and the external activity polynomials.

use arith_tutte::abelian::VectorList;
use arith_tutte::arithmetic::Represented;
use arith_tutte::tutte::{arithmetic_tutte, crapo_bivariate, crapo_expansion, external_activity_polys};

fn main() -> arith_tutte::Result<()> {
    let rep = Represented::new(VectorList::integer(2, &[vec![3, 0], vec![0, 2], vec![1, 1]])?)?;
    let a = rep.arithmetic();

    let terms = crapo_expansion(a)?;
    for t in &terms {
        println!("B = {}, C = {}: weight {} x^{} y^{}", t.basis, t.c, t.weight, t.i(), t.e());
    }
    let m = crapo_bivariate(&terms);
    assert_eq!(m, arithmetic_tutte(a));
    println!("M(x, y) = {m}");

    for b in a.matroid().bases() {
        let act = a.matroid().activities(b)?;
        let (e, e_dual) = external_activity_polys(a, b)?;
        println!("B = {b}: I = {}, E = {}, E_B(y) = {e}, dual E_B(x) = {e_dual}", act.internal, act.external);
    }
    Ok(())
}
