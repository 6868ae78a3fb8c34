//! The non-Fano list: which Potts specializations recover the ordinary or the
//! arithmetic multivariate polynomial, and the Tutte quasi-polynomial.

use arith_tutte::abelian::{FgGroup, VectorList};
use arith_tutte::arithmetic::Represented;
use arith_tutte::potts::{fk_closed_form, in_za, in_zm, lcm_of_bases, potts_polynomial, tutte_quasi};

fn main() -> arith_tutte::Result<()> {
    let cols = [[1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 1, 1], [0, 0, 1], [1, 0, 1], [1, 1, 1]];
    let list = VectorList::integer(3, &cols.iter().map(|c| c.to_vec()).collect::<Vec<_>>())?;
    let rep = Represented::new(list)?;
    let a = rep.arithmetic();

    println!("lcm of basis multiplicities: {}", lcm_of_bases(a)?);
    for q in 1..=6 {
        println!("q = {q}: in Z_M {}, in Z_A {}", in_zm(a, q)?, in_za(&rep, q)?);
    }

    let h = FgGroup::cyclic(3);
    let brute = potts_polynomial(rep.list(), &h, 1_000_000)?;
    assert_eq!(brute, fk_closed_form(&rep, &h)?);
    println!(
        "Potts sum over Z_3: enumeration and closed form agree; constant term {}, homomorphisms vanishing on no element: {}",
        brute.coefficient(arith_tutte::Subset::EMPTY),
        brute.evaluate(&vec![num_rational::BigRational::from_integer((-1).into()); 7])?
    );

    let q = tutte_quasi(&rep, 1_000_000)?;
    for (r, p) in q.constituents().iter().enumerate() {
        println!("Q for q = {r} mod {}: {p}", q.period());
    }
    Ok(())
}
