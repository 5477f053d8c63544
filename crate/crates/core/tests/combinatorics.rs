use qsum::combinatorics::{durfee_decompose, durfee_size, durfee_stratified_poly, enumerate, gen_poly, recompose};
use qsum::identities::{alladi_term, overpartition_term};
use qsum::{IdentityName, IdentitySpec, Monomial, PartitionKind, QSeries, Symbol};

fn stratum_matches(kind: PartitionKind, term: fn(usize, usize, usize) -> QSeries, max_n: u32) {
    let order = max_n as usize + 1;
    for durfee in 1..=3u32 {
        let t = term(2, durfee as usize, order);
        for n in 1..=max_n {
            let enumerated = durfee_stratified_poly(kind, 2, n, durfee);
            assert_eq!(&enumerated, t.coeff(n as usize), "{kind} N={durfee} n={n}");
            if durfee * durfee > n {
                assert!(enumerated.is_zero());
            }
        }
    }
}

#[test]
fn strict_strata_match_outer_terms() {
    stratum_matches(PartitionKind::Strict, alladi_term, 10);
}

#[test]
fn over_strata_match_outer_terms() {
    stratum_matches(PartitionKind::Over, overpartition_term, 10);
}

fn round_trip(kind: PartitionKind, max_n: u32) -> usize {
    let mut seen = 0;
    for n in 1..=max_n {
        for p in enumerate(kind, 2, n) {
            let d = durfee_decompose(&p).unwrap();
            assert_eq!(d.durfee, durfee_size(&p));
            assert_eq!(d.weight(), n, "{p}");
            assert_eq!(recompose(&d).unwrap(), p);
            seen += 1;
        }
    }
    seen
}

#[test]
fn strict_decomposition_round_trip() {
    assert!(round_trip(PartitionKind::Strict, 10) > 0);
}

#[test]
fn over_decomposition_round_trip() {
    assert!(round_trip(PartitionKind::Over, 8) > 0);
}

#[test]
fn overline_legality() {
    for n in 0..=8 {
        for p in enumerate(PartitionKind::Over, 2, n) {
            let parts = p.parts();
            for (i, x) in parts.iter().enumerate() {
                if x.overlined {
                    assert!(parts[i + 1..].iter().all(|y| y.key() != x.key()), "{p}");
                }
            }
        }
    }
}

#[test]
fn part_count_refinement() {
    let order = 11;
    let lhs = IdentitySpec::new(IdentityName::AlladiY, 2, order).unwrap().build().lhs;
    for n in 0..order as u32 {
        let g = gen_poly(PartitionKind::Strict, 2, n);
        // a_j -> a_j y: every part contributes exactly one a, so y counts parts
        let tagged = g.map_monomials(|m| m.mul(&Monomial::pow_of(Symbol::Y, m.degree())));
        assert_eq!(lhs.coeff(n as usize), &tagged, "n={n}");
        for (m, _) in lhs.coeff(n as usize).terms() {
            assert_eq!(m.degree() - m.exponent(Symbol::Y), m.exponent(Symbol::Y));
        }
    }
}
