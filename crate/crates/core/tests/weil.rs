mod oracle;

use hodgesig_core::poly::IntPoly;
use hodgesig_core::weil::{
    base_extension, enumerate, exotic_subsets, newton_slopes, tate_class_count, Precision, RootSystem, ValueMultiset,
    WeilPolynomial,
};
use num_bigint::BigInt;

fn collect(q: u64, g: usize) -> Vec<WeilPolynomial> {
    let mut out = Vec::new();
    enumerate(&BigInt::from(q), g, |p| out.push(p));
    out
}

#[test]
fn enumeration_matches_the_coefficient_box() {
    for (q, g) in [(2u64, 1usize), (3, 1), (4, 1), (7, 1), (9, 1), (2, 2), (3, 2), (5, 2), (2, 3)] {
        let ours: Vec<Vec<BigInt>> = collect(q, g).iter().map(|p| p.coeffs().to_vec()).collect();
        assert_eq!(ours, oracle::weil_box(q, g), "q = {q}, g = {g}");
    }
}

#[test]
fn elliptic_counts_match_root_check() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        assert_eq!(collect(q, 1).len(), oracle::elliptic_count(q as i64), "q = {q}");
    }
}

#[test]
fn base_extension_matches_twisted_products() {
    let mut corpus = collect(2, 2);
    corpus.extend(collect(3, 2));
    corpus.extend(collect(2, 4).into_iter().step_by(13));
    for p in &corpus {
        for s in [2u32, 3] {
            let ext = base_extension(p, s).unwrap();
            assert_eq!(ext.poly(), &oracle::power_root_poly(p.poly(), s as usize), "{p}, s = {s}");
            assert!(WeilPolynomial::new(ext.coeffs().to_vec(), ext.q().clone()).is_ok());
            assert_eq!(newton_slopes(&ext), newton_slopes(p), "{p}, s = {s}");
        }
    }
}

#[test]
fn pairing_gives_at_least_g_divisor_classes() {
    let pr = Precision::default();
    for (q, g) in [(2u64, 2usize), (3, 2), (2, 3)] {
        for p in collect(q, g) {
            assert!(tate_class_count(&p, 1, pr).unwrap() >= BigInt::from(g), "{p}");
        }
    }
}

#[test]
fn supersingular_counts_match_naive_products() {
    let pr = Precision::default();
    for p in [2u64, 3, 5, 7, 11] {
        let wp =
            WeilPolynomial::new(IntPoly::from_i64(&[p as i64, 0, 1]).pow(4).into_coeffs(), BigInt::from(p)).unwrap();
        let (rho1, rho2, exotic) = oracle::supersingular_counts(p as i64);
        assert_eq!(tate_class_count(&wp, 1, pr).unwrap(), BigInt::from(rho1));
        assert_eq!(tate_class_count(&wp, 2, pr).unwrap(), BigInt::from(rho2));
        assert_eq!(exotic_subsets(&RootSystem::new(&wp), 1, pr).unwrap().len(), exotic);
    }
}

#[test]
fn exotic_lists_are_closed_under_conjugation() {
    let pr = Precision::default();
    let mut nonempty = 0;
    for p in collect(2, 4).into_iter().step_by(3) {
        let rs = RootSystem::new(&p);
        let ex: Vec<ValueMultiset> = exotic_subsets(&rs, 1, pr).unwrap().into_iter().map(|e| e.values).collect();
        for m in &ex {
            assert!(ex.contains(&m.conj(&rs)), "{p}");
            assert!(m.conjugate_free(&rs));
        }
        nonempty += !ex.is_empty() as usize;
    }
    assert!(nonempty > 0);
}
