//! Two lists with the same arithmetic matroid but different Potts sums: the
//! empty list in `Z_4` and in `Z_2 ⊕ Z_2`.

use arith_tutte::abelian::{FgGroup, VectorList};
use arith_tutte::arithmetic::Represented;
use arith_tutte::potts::{potts_polynomial, tutte_quasi};

fn main() -> arith_tutte::Result<()> {
    let empty: &[Vec<i64>] = &[];
    let z4 = Represented::new(VectorList::from_coords(FgGroup::cyclic(4), empty)?)?;
    let z22 = Represented::new(VectorList::from_coords(FgGroup::new(0, vec![2, 2])?, empty)?)?;
    assert_eq!(z4.arithmetic(), z22.arithmetic());
    println!("both have m(∅) = {}", z4.arithmetic().mult(arith_tutte::Subset::EMPTY));

    let h = FgGroup::cyclic(2);
    println!("Potts sum over Z_2: {} vs {}", potts_polynomial(z4.list(), &h, 100)?, potts_polynomial(z22.list(), &h, 100)?);
    for rep in [&z4, &z22] {
        let q = tutte_quasi(rep, 1_000)?;
        let cs: Vec<String> = q.constituents().iter().map(ToString::to_string).collect();
        println!("{}: period {}, constituents {cs:?}", rep.list().group(), q.period());
    }
    Ok(())
}
