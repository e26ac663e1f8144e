use hilbert_core::pascal::{hf_principal, hf_two_generators, pascal_f_ascending, AscendingForm};
use hilbert_core::{hf_oracle, pascal_f, pascal_table, MonomialIdeal};
use proptest::prelude::*;

#[test]
fn table_and_closed_forms_agree_on_the_grid() {
    let table = pascal_table(10, 30);
    for a in 1..=10 {
        for b in 0..=30usize {
            let f = pascal_f(a, b as i64);
            assert_eq!(table.get(a, b), Some(&f));
            assert_eq!(pascal_f_ascending(a, b, AscendingForm::ByB), f);
            assert_eq!(pascal_f_ascending(a, b, AscendingForm::ByA), f);
        }
    }
}

proptest! {
    #[test]
    fn binomial_symmetry(a in 1usize..40, b in 0i64..40) {
        prop_assert_eq!(pascal_f(a, b), pascal_f(b as usize + 1, a as i64 - 1));
    }

    #[test]
    fn pascal_recurrence(a in 2usize..40, b in 1i64..40) {
        prop_assert_eq!(pascal_f(a, b), pascal_f(a - 1, b) + pascal_f(a, b - 1));
    }

    #[test]
    fn negative_degrees_vanish(a in 0usize..20, b in -50i64..0) {
        prop_assert_eq!(pascal_f(a, b), 0u32.into());
    }

    #[test]
    fn principal_agrees_below_generator_degree(a in 1usize..8, d in 1u64..12, b in 0i64..12) {
        prop_assume!(b < d as i64);
        prop_assert_eq!(hf_principal(a, d, b), pascal_f(a, b));
    }

    #[test]
    fn coprime_two_generators_match_the_oracle(
        eu in prop::collection::vec(0u32..4, 2),
        ev in prop::collection::vec(0u32..4, 2),
        b in 0usize..14,
    ) {
        prop_assume!(eu.iter().any(|&e| e > 0) && ev.iter().any(|&e| e > 0));
        // u lives in x0, x1 and v in x2, x3
        let u = vec![eu[0], eu[1], 0, 0];
        let v = vec![0, 0, ev[0], ev[1]];
        let du: u64 = u.iter().map(|&e| u64::from(e)).sum();
        let dv: u64 = v.iter().map(|&e| u64::from(e)).sum();
        let i = MonomialIdeal::from_exponents(4, [u, v]).unwrap();
        prop_assert_eq!(
            hf_two_generators(4, du, dv, du + dv, b as i64).unwrap(),
            hf_oracle(&i, b, 1_000_000).unwrap()
        );
    }
}
