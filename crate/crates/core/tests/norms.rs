mod oracle;

use hodgesig_core::arith::{int, val_p, Prime, Rational};
use hodgesig_core::norms::{classify_extension, decide_p_isomorphic, is_norm, ExtensionKind, LocalQuadExtension};
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(n: u64) -> Prime {
    Prime::from_u64(n).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..200)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonsplit_extension() -> impl Strategy<Value = LocalQuadExtension> {
    (prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), 0usize..4).prop_filter_map("kind exists", |(q, k)| {
        let kind = [
            ExtensionKind::Unramified,
            ExtensionKind::TameRamified,
            ExtensionKind::WildQ2SqrtMinus1,
            ExtensionKind::WildQ2Sqrt3,
        ][k];
        LocalQuadExtension::of_kind(kind, &p(q)).ok()
    })
}

/// Every square class of `Q_2` other than 1, as the field `Q_2(√d)`.
#[test]
fn two_adic_norms_match_brute_force() {
    for d in [-1i64, 3, 5, 2, -2, 10, -10, 6, 7, -5] {
        let ext = classify_extension(&int(d), &p(2)).unwrap();
        assert!(!ext.is_split());
        for x in -100i64..=100 {
            if x == 0 || x.trailing_zeros() > 4 {
                continue;
            }
            assert_eq!(is_norm(&int(x), &ext).unwrap(), oracle::norm_brute_2(x, d, 8), "x = {x} from Q_2(sqrt {d})");
        }
    }
}

#[test]
fn parity_theorem() {
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
        for kind in [
            ExtensionKind::Unramified,
            ExtensionKind::TameRamified,
            ExtensionKind::WildQ2SqrtMinus1,
            ExtensionKind::WildQ2Sqrt3,
        ] {
            let Ok(ext) = LocalQuadExtension::of_kind(kind, &p(q)) else { continue };
            for i in 1..=20 {
                assert_eq!(decide_p_isomorphic(i, Some(&ext)).unwrap(), i % 2 == 0);
            }
        }
    }
}

/// The other representatives of each class give the same verdicts.
#[test]
fn parity_does_not_depend_on_the_representative() {
    for (d, q) in [(13i64, 2u64), (15, 2), (11, 2), (18, 2), (-6, 2), (5, 3), (-3, 3), (12, 3), (3, 5), (10, 5)] {
        let ext = classify_extension(&int(d), &p(q)).unwrap();
        for i in 1..=6 {
            assert_eq!(decide_p_isomorphic(i, Some(&ext)).unwrap(), i % 2 == 0, "d = {d}, p = {q}");
        }
    }
}

proptest! {
    #[test]
    fn unramified_norms_have_even_valuation(x in nonzero_rational(), q in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let ext = LocalQuadExtension::of_kind(ExtensionKind::Unramified, &p(q)).unwrap();
        if is_norm(&x, &ext).unwrap() {
            prop_assert_eq!(val_p(&x, &p(q)).unwrap() % 2, 0);
        }
    }

    #[test]
    fn norm_group_has_index_two(x in nonzero_rational(), y in nonzero_rational(), ext in nonsplit_extension()) {
        let (nx, ny) = (is_norm(&x, &ext).unwrap(), is_norm(&y, &ext).unwrap());
        prop_assert_eq!(is_norm(&(&x * &y), &ext).unwrap(), nx == ny);
    }
}
