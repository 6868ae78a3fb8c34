//! The list `(2)` in `Z`: multiplicities, the three Tutte-type polynomials and the dual.

use arith_tutte::abelian::VectorList;
use arith_tutte::arithmetic::Represented;
use arith_tutte::tutte::{arithmetic_tutte, multivariate_z, tutte};
use arith_tutte::Subset;

fn main() -> arith_tutte::Result<()> {
    let rep = Represented::new(VectorList::integer(1, &[vec![2]])?)?;
    let a = rep.arithmetic();
    println!("m(∅) = {}, m({{1}}) = {}", a.mult(Subset::EMPTY), a.mult(Subset(1)));
    println!("T(x, y) = {}", tutte(a.matroid()));
    println!("M(x, y) = {}", arithmetic_tutte(a));

    let z = multivariate_z(a);
    for mask in 0..2u32 {
        let s = Subset(mask);
        println!("Z coefficient of v^{s}: {} q^-{}", z.coefficient(s), z.rank(s));
    }

    let dual = a.dual();
    println!("dual multiplicities: {:?}", dual.multiplicities().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("M of the dual = {}", arithmetic_tutte(&dual));
    Ok(())
}
