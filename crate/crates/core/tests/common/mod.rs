//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qsum::identities::CATALOG;
use qsum::{Monomial, MultiPoly, QSeries, Symbol};

pub const CASES: u32 = 256;

pub fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        Just(Symbol::A(1)),
        Just(Symbol::Z(1)),
        Just(Symbol::A(2)),
        Just(Symbol::Z(2)),
        Just(Symbol::A(3)),
        Just(Symbol::Y),
    ]
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((symbol(), 1..=4u32), 0..4).prop_map(Monomial::from_pairs)
}

/// At most 6 terms, exponents at most 4, coefficients in [-9, 9].
pub fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, monomial()), 0..=6)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(c, m)| (c.into(), m))))
}

/// Terms with `deg z_i <= deg a_i` for every color, the strict-limit domain.
pub fn limit_poly() -> impl Strategy<Value = MultiPoly> {
    let mono = prop::collection::vec((0..=3u32, 0..=3u32), 2).prop_flat_map(|ae| {
        let z = ae.iter().map(|&(a, _)| 0..=a).collect::<Vec<_>>();
        (Just(ae), z, 0..=2u32)
    });
    prop::collection::vec((-9i64..=9, mono), 0..=6).prop_map(|ts| {
        MultiPoly::from_terms(ts.into_iter().map(|(c, (ae, ze, y))| {
            let mut pairs = vec![(Symbol::Y, y)];
            for (i, ((a, _), z)) in ae.iter().zip(&ze).enumerate() {
                pairs.push((Symbol::A(i as u32 + 1), *a));
                pairs.push((Symbol::Z(i as u32 + 1), *z));
            }
            (c.into(), Monomial::from_pairs(pairs))
        }))
    })
}

pub fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-3i64..=3, monomial()), 0..=3)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(c, m)| (c.into(), m))))
}

pub fn series_of(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_poly(), order).prop_map(QSeries::from_coeffs)
}

/// Three series of one common order in `1..=8`.
pub fn series_triple() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (1..=8usize).prop_flat_map(|t| (series_of(t), series_of(t), series_of(t)))
}

/// A series with constant term 1.
pub fn unit_series() -> impl Strategy<Value = QSeries> {
    (1..=10usize).prop_flat_map(|t| {
        series_of(t).prop_map(|f| {
            let mut c = f.into_coeffs();
            c[0] = MultiPoly::one();
            QSeries::from_coeffs(c)
        })
    })
}

pub fn bindings() -> impl Strategy<Value = std::collections::BTreeMap<Symbol, num_bigint::BigInt>> {
    prop::collection::btree_map(symbol(), (-3i64..=3).prop_map(Into::into), 0..4)
}

pub fn ring_laws(p: &MultiPoly, q: &MultiPoly, s: &MultiPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(p + q, q + p);
    prop_assert_eq!(p * q, q * p);
    prop_assert_eq!(&(p + q) + s, p + &(q + s));
    prop_assert_eq!(&(p * q) * s, p * &(q * s));
    prop_assert_eq!(p * &(q + s), &(p * q) + &(p * s));
    prop_assert_eq!(p + &MultiPoly::zero(), p.clone());
    prop_assert_eq!(p * &MultiPoly::one(), p.clone());
    prop_assert!((p + &-p).is_zero());
    Ok(())
}

pub fn text_round_trip(p: &MultiPoly) -> Result<(), TestCaseError> {
    let text = p.to_string();
    let back: MultiPoly = text.parse().map_err(|e| TestCaseError::fail(format!("{text:?}: {e}")))?;
    prop_assert_eq!(&back, p);
    prop_assert_eq!(back.to_string(), text);
    Ok(())
}

pub fn substitute_is_a_homomorphism(
    p: &MultiPoly,
    q: &MultiPoly,
    b: &std::collections::BTreeMap<Symbol, num_bigint::BigInt>,
) -> Result<(), TestCaseError> {
    prop_assert_eq!((p * q).substitute(b), &p.substitute(b) * &q.substitute(b));
    prop_assert_eq!((p + q).substitute(b), &p.substitute(b) + &q.substitute(b));
    Ok(())
}

/// `a_i^k -> a_i^k z_i^k`, which maps a limit value back into the domain.
fn lift(p: &MultiPoly) -> MultiPoly {
    p.map_monomials(|m| {
        let extra = m.iter().filter_map(|(s, e)| match s {
            Symbol::A(i) => Some((Symbol::Z(i), e)),
            _ => None,
        });
        Monomial::from_pairs(m.iter().chain(extra))
    })
}

pub fn strict_limit_laws(p: &MultiPoly, q: &MultiPoly) -> Result<(), TestCaseError> {
    let lp = p.strict_limit().unwrap();
    let lq = q.strict_limit().unwrap();
    prop_assert_eq!((p + q).strict_limit().unwrap(), &lp + &lq);
    prop_assert!(lp.symbols().iter().all(|s| !matches!(s, Symbol::Z(_))));
    prop_assert_eq!(lift(&lp).strict_limit().unwrap(), lp);
    Ok(())
}

pub fn series_laws(f: &QSeries, g: &QSeries, h: &QSeries) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.add(g), g.add(f));
    prop_assert_eq!(f.mul(g), g.mul(f));
    prop_assert_eq!(f.add(g).add(h), f.add(&g.add(h)));
    prop_assert_eq!(f.mul(g).mul(h), f.mul(&g.mul(h)));
    prop_assert_eq!(f.mul(&g.add(h)), f.mul(g).add(&f.mul(h)));
    prop_assert_eq!(f.mul(&QSeries::one(f.order())), f.clone());
    prop_assert!(f.sub(f).is_zero());
    Ok(())
}

pub fn geometric_division(f: &QSeries, c: &MultiPoly, e: usize) -> Result<(), TestCaseError> {
    let g = f.div_geometric(c, e).unwrap();
    prop_assert_eq!(g.mul_binomial(&-c, e), f.clone());
    prop_assert_eq!(g, f.mul(&QSeries::geom_inv(c, e, f.order()).unwrap()));
    Ok(())
}

pub fn poch_recurrence(c: &MultiPoly, e0: usize, step: usize, n: usize, order: usize) -> Result<(), TestCaseError> {
    let next = QSeries::poch_finite(c, e0, step, n + 1, order);
    let grown = QSeries::poch_finite(c, e0, step, n, order).mul_binomial(c, e0 + n * step);
    prop_assert_eq!(next, grown);
    Ok(())
}

pub fn unit_inverse(f: &QSeries) -> Result<(), TestCaseError> {
    let g = f.unit_inv().unwrap();
    prop_assert_eq!(f.mul(&g), QSeries::one(f.order()));
    prop_assert_eq!(g.unit_inv().unwrap(), f.clone());
    Ok(())
}

/// For a multi-color builder: every outer term starts at `q^{weight(N)}`, and
/// the term just past the last one built vanishes below `order`.
pub fn extra_term_is_zero(entry: usize, r: usize, order: usize) -> Result<(), TestCaseError> {
    let e = &CATALOG[entry];
    let term = e.term.expect("multi-color entry");
    let last = e.last_term(order);
    prop_assert!(term(r, last + 1, order).is_zero(), "{} r={r} T={order}", e.name);
    for n in 1..=last {
        let t = term(r, n, order);
        prop_assert!(t.valuation().is_none_or(|v| v >= (e.term_weight)(n)), "{} N={n}", e.name);
    }
    Ok(())
}

pub fn multi_entries() -> Vec<usize> {
    (0..CATALOG.len()).filter(|&i| CATALOG[i].term.is_some()).collect()
}

pub fn builder_case() -> impl Strategy<Value = (usize, usize, usize)> {
    (prop::sample::select(multi_entries()), 1..=3usize)
        .prop_flat_map(|(e, r)| (Just(e), Just(r), 2..=if r == 3 { 10usize } else { 16 }))
}

/// Runs `test` over `cases` inputs from `strategy`, returning the failure text if any.
pub fn run_property<S, F>(cases: u32, strategy: S, test: F) -> Result<(), String>
where
    S: Strategy,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}
