//! Invariants checked on generated instances.

use arith_tutte::abelian::{enumerate_homs, hom_count, smith_normal_form, FgGroup, IntMatrix, VectorList};
use arith_tutte::arithmetic::Represented;
use arith_tutte::sample::{Sampler, TORSION_CHOICES};
use arith_tutte::suite::commutation_report;
use arith_tutte::tutte::{
    activity_decomposition_report, arithmetic_tutte, deletion_contraction_report, multivariate_z, projection_report,
};
use arith_tutte::Subset;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

fn list() -> impl Strategy<Value = VectorList> {
    (0usize..=3, 0..TORSION_CHOICES.len(), 0usize..=5).prop_flat_map(|(rank, t, n)| {
        let torsion = TORSION_CHOICES[t];
        let coords: Vec<BoxedStrategy<i64>> = (0..rank)
            .map(|_| (-4i64..=4).boxed())
            .chain(torsion.iter().map(|&d| (0..d as i64).boxed()))
            .collect();
        vec(coords, n).prop_map(move |cs| {
            VectorList::from_coords(FgGroup::new(rank, torsion.to_vec()).unwrap(), &cs).unwrap()
        })
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| vec(vec(-6i64..=6, c), r))
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert!(s.d.is_diagonal());
        prop_assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(s.rank(), m.rank());
        if m.rows() == m.cols() {
            let product: BigInt = diag.iter().product();
            prop_assert_eq!(product, m.determinant().abs());
        }
    }

    /// Rank from the quotient equals the rational rank of the free coordinates.
    #[test]
    fn rank_from_quotient_matches_free_coordinates(l in list()) {
        let r = l.group().free_rank();
        for a in Subset::all(l.len()) {
            let rows: Vec<Vec<BigInt>> = l.select(a).iter().map(|g| g.coords()[..r].to_vec()).collect();
            let direct = if rows.is_empty() || r == 0 { 0 } else { IntMatrix::from_rows(&rows).rank() };
            prop_assert_eq!(l.subset_rank(a).unwrap(), direct);
            let q = l.quotient(a).unwrap();
            prop_assert_eq!(l.multiplicity(a).unwrap(), q.torsion_order());
        }
    }

    #[test]
    fn homomorphisms_into_cyclic_groups(t in 0..TORSION_CHOICES.len(), rank in 0usize..=2, q in 1u64..=6) {
        let g = FgGroup::new(rank, TORSION_CHOICES[t].to_vec()).unwrap();
        let h = FgGroup::cyclic(q);
        let expected: u64 = q.pow(rank as u32) * TORSION_CHOICES[t].iter().map(|&d| d.gcd(&q)).product::<u64>();
        prop_assert_eq!(enumerate_homs(&g, &h, 1_000_000).unwrap().len() as u64, expected);
        prop_assert_eq!(hom_count(&g, &h).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn projections_of_molecules_preserve_tables(l in list()) {
        let rep = Represented::new(l).unwrap();
        for (_, mol) in rep.matroid().molecule_partition().unwrap() {
            let r = projection_report(rep.list(), mol.lower, mol.free).unwrap();
            prop_assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn duality_is_an_involution_and_swaps_variables(l in list()) {
        let a = Represented::new(l).unwrap().arithmetic().clone();
        let d = a.dual();
        prop_assert_eq!(&d.dual(), &a);
        prop_assert_eq!(arithmetic_tutte(&d), arithmetic_tutte(&a).swap());
    }

    #[test]
    fn reversing_the_list_permutes_the_expansion(l in list()) {
        let n = l.len();
        let reversed: Vec<Vec<BigInt>> = l.elements().iter().rev().map(|g| g.coords().to_vec()).collect();
        let r = VectorList::from_coords(l.group().clone(), &reversed).unwrap();
        let (a, b) = (Represented::new(l).unwrap(), Represented::new(r).unwrap());
        prop_assert_eq!(arithmetic_tutte(a.arithmetic()), arithmetic_tutte(b.arithmetic()));
        let (za, zb) = (multivariate_z(a.arithmetic()), multivariate_z(b.arithmetic()));
        for s in Subset::all(n) {
            let mirrored = Subset::from_indices(s.iter().map(|i| n - 1 - i));
            prop_assert_eq!(za.coefficient(s), zb.coefficient(mirrored));
            prop_assert_eq!(za.rank(s), zb.rank(mirrored));
        }
    }

    #[test]
    fn activity_polynomials_decompose_m(l in list()) {
        let a = Represented::new(l).unwrap().arithmetic().clone();
        let r = activity_decomposition_report(&a).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn deletion_contraction_holds(l in list(), seed in any::<u64>()) {
        let a = Represented::new(l).unwrap().arithmetic().clone();
        let r = deletion_contraction_report(&a, &mut Sampler::new(seed)).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn minors_commute_with_representations(l in list()) {
        let r = commutation_report(&Represented::new(l).unwrap()).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }
}
