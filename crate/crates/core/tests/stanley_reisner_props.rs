use hilbert_core::{
    hf, minimal_nonfaces, stanley_reisner_ideal, validate_complex, MethodKind, Monomial,
    SimplicialComplex,
};
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// A valid complex on `n` vertices from arbitrary subsets: keep the maximal
/// ones, then add every uncovered vertex as its own facet.
fn complex(max_vertices: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_vertices).prop_flat_map(|n| {
        prop::collection::vec(1u32..(1 << n), 1..6).prop_map(move |masks| {
            let mut facets: Vec<u32> = Vec::new();
            for &m in &masks {
                if masks.iter().any(|&o| o != m && o & m == m) || facets.contains(&m) {
                    continue;
                }
                facets.push(m);
            }
            let covered = facets.iter().fold(0, |acc, m| acc | m);
            for v in 0..n {
                if covered & (1 << v) == 0 {
                    facets.push(1 << v);
                }
            }
            let vs = names(n);
            let facets = facets
                .iter()
                .map(|m| {
                    (0..n)
                        .filter(|v| m & (1 << v) != 0)
                        .map(|v| vs[v].clone())
                        .collect()
                })
                .collect();
            SimplicialComplex::new(vs, facets)
        })
    })
}

proptest! {
    #[test]
    fn generated_complexes_are_valid(c in complex(10)) {
        prop_assert_eq!(validate_complex(&c), Ok(()));
    }

    #[test]
    fn generators_are_square_free(c in complex(12)) {
        let i = stanley_reisner_ideal(&c).unwrap();
        prop_assert!(i.generators().iter().all(Monomial::is_square_free));
        prop_assert_eq!(i.len(), minimal_nonfaces(&c).unwrap().len());
    }

    #[test]
    fn membership_duality(c in complex(12)) {
        let i = stanley_reisner_ideal(&c).unwrap();
        let n = c.vertices().len();
        for mask in 0u32..(1 << n) {
            let exps: Vec<u32> = (0..n).map(|v| (mask >> v) & 1).collect();
            let face: Vec<&str> = (0..n)
                .filter(|v| mask & (1 << v) != 0)
                .map(|v| c.vertices()[v].as_str())
                .collect();
            let m = Monomial::new(exps).unwrap();
            prop_assert_eq!(!i.contains(&m).unwrap(), c.is_face(&face));
        }
    }

    #[test]
    fn face_ring_degree_one_counts_vertices(c in complex(8)) {
        let i = stanley_reisner_ideal(&c).unwrap();
        let values = hf(&i, 2, MethodKind::Auto).unwrap();
        prop_assert_eq!(values[1].clone(), (c.vertices().len() as u32).into());
    }
}
