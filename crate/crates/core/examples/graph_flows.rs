//! A weighted directed graph: colorings, nowhere-zero flows and their closed forms.

use arith_tutte::arithmetic::Represented;
use arith_tutte::potts::{chromatic_count, flow_closed_form, flow_count, flow_multilinear, graph_encode, Edge, WeightedDigraph};

fn main() -> arith_tutte::Result<()> {
    let d = WeightedDigraph::new(
        3,
        vec![
            Edge { tail: 0, head: 1, weight: 2 },
            Edge { tail: 1, head: 2, weight: 1 },
            Edge { tail: 2, head: 0, weight: 1 },
        ],
    )?;
    let list = graph_encode(&d)?;
    let rep = Represented::new(list.clone())?;
    let cap = 1_000_000;
    for q in 1..=6 {
        let enumerated = flow_multilinear(&list, q, cap)?;
        assert_eq!(enumerated, flow_closed_form(&rep, q)?);
        println!(
            "q = {q}: colorings {}, nowhere-zero flows {}, flow polynomial {enumerated}",
            chromatic_count(&list, q, cap)?,
            flow_count(&list, q, cap)?
        );
    }
    Ok(())
}
