//! Molecules of an arithmetic matroid, their `rho` values and projected lists.

use arith_tutte::abelian::{FgGroup, VectorList};
use arith_tutte::arithmetic::Represented;
use arith_tutte::sample::Sampler;
use arith_tutte::tutte::{f_polynomial, g_polynomial, molecule_sum_identity, project_molecule};

fn main() -> arith_tutte::Result<()> {
    let group = FgGroup::new(1, vec![2])?;
    let list = VectorList::from_coords(group, &[vec![2, 1], vec![1, 0], vec![0, 1], vec![3, 1]])?;
    let rep = Represented::new(list)?;
    let a = rep.arithmetic();
    let mut sampler = Sampler::new(1);

    for (basis, mol) in a.matroid().molecule_partition()? {
        let rho = a.rho(mol.lower, mol.upper())?;
        let check = molecule_sum_identity(a, &mol, &mut sampler)?;
        println!(
            "B = {basis}: [{}, {}] F = {} rho = {rho} f = {} g = {} identities pass: {}",
            mol.lower,
            mol.upper(),
            mol.free,
            f_polynomial(a, &mol),
            g_polynomial(a, &mol),
            check.passed()
        );
        let projected = project_molecule(rep.list(), mol.lower, mol.free)?;
        let coords: Vec<_> = projected.elements().iter().map(|e| format!("{:?}", e.coords())).collect();
        if !coords.is_empty() {
            println!("  projected free part: {}", coords.join(" "));
        }
    }
    Ok(())
}
