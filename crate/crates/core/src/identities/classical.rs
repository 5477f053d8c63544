//! Single-variable identities: Sylvester, Euler's pentagonal theorem, the two
//! theta quotients, Cauchy, and the Dousse–Kim overpartition sum.

use crate::polyring::{MultiPoly, Symbol};
use crate::qseries::QSeries;

use super::{pentagonal_weight, shifted_into, sum_outer_terms, IdentitySides};

fn a() -> MultiPoly {
    MultiPoly::var(Symbol::A(1))
}

fn one() -> MultiPoly {
    MultiPoly::one()
}

fn minus_one() -> MultiPoly {
    MultiPoly::constant(-1)
}

fn poch_inf(c: &MultiPoly, e0: usize, step: usize, order: usize) -> QSeries {
    QSeries::poch_infinite(c, e0, step, order).expect("offset is positive")
}

fn inverse(f: &QSeries) -> QSeries {
    f.unit_inv().expect("q-Pochhammer products have constant term 1")
}

/// `(-a q; q)_inf`.
fn strict_product(order: usize) -> QSeries {
    poch_inf(&a(), 1, 1, order)
}

fn last_k(order: usize, weight: fn(usize) -> usize) -> usize {
    let mut k = 0;
    while weight(k + 1) < order {
        k += 1;
    }
    k
}

/// `a^k q^{(3k^2-k)/2} (-aq;q)_{k-1} (1 + a q^{2k}) / (q;q)_k`.
pub fn sylvester_term(k: usize, order: usize) -> QSeries {
    let w = pentagonal_weight(k);
    if w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let body = QSeries::poch_finite(&a(), 1, 1, k - 1, local)
        .mul_binomial(&a(), 2 * k)
        .mul(&inverse(&QSeries::poch_finite(&minus_one(), 1, 1, k, local)))
        .mul_poly(&a().pow(k as u32));
    shifted_into(&body, w, order)
}

pub(crate) fn build_sylvester(order: usize) -> IdentitySides {
    let last = last_k(order, pentagonal_weight);
    IdentitySides {
        lhs: strict_product(order),
        rhs: sum_outer_terms(last, order, |k| sylvester_term(k, order)),
        terms_built: last,
    }
}

pub(crate) fn build_pentagonal(order: usize) -> IdentitySides {
    let last = last_k(order, pentagonal_weight);
    let mut rhs = QSeries::one(order);
    for k in 1..=last {
        let sign = if k % 2 == 0 { one() } else { minus_one() };
        // (-1)^k q^{(3k^2-k)/2} (1 + q^k)
        let term = QSeries::binomial(one(), k, order).mul_poly(&sign).shift(pentagonal_weight(k));
        rhs.add_assign(&term);
    }
    IdentitySides { lhs: poch_inf(&minus_one(), 1, 1, order), rhs, terms_built: last }
}

/// `sum_{k in Z} (-1)^k q^{(3k^2-k)/2}`, summed directly over both signs of `k`.
pub fn pentagonal_bilateral(order: usize) -> QSeries {
    bilateral(order, |k| (3 * k * k - k) / 2)
}

fn bilateral(order: usize, exponent: impl Fn(i64) -> i64) -> QSeries {
    let mut coeffs = vec![0i64; order];
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        let ks = if k == 0 { vec![0] } else { vec![k, -k] };
        for kk in ks {
            let e = exponent(kk);
            if e >= 0 && (e as usize) < order {
                coeffs[e as usize] += if kk % 2 == 0 { 1 } else { -1 };
                any = true;
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    QSeries::from_ints(&coeffs)
}

/// `sum_{k in Z} (-1)^k q^{k^2}`.
pub fn theta_gauss_sum(order: usize) -> QSeries {
    bilateral(order, |k| k * k)
}

/// `sum_{k in Z} (-1)^k q^{2k^2-k}`.
pub fn theta_jacobi_sum(order: usize) -> QSeries {
    bilateral(order, |k| 2 * k * k - k)
}

pub(crate) fn build_theta_gauss(order: usize) -> IdentitySides {
    let lhs = poch_inf(&minus_one(), 1, 1, order).mul(&inverse(&poch_inf(&one(), 1, 1, order)));
    let terms = last_k(order, super::square_weight);
    IdentitySides { lhs, rhs: theta_gauss_sum(order), terms_built: terms }
}

pub(crate) fn build_theta_jacobi(order: usize) -> IdentitySides {
    let lhs = poch_inf(&minus_one(), 2, 2, order).mul(&inverse(&poch_inf(&one(), 1, 2, order)));
    let terms = last_k(order, super::ped_weight);
    IdentitySides { lhs, rhs: theta_jacobi_sum(order), terms_built: terms }
}

/// `(-q;q)_m (-aq;q)_m / ((q;q)_m (aq;q)_m)`.
fn dousse_kim_ratio(m: usize, order: usize) -> QSeries {
    let num = QSeries::poch_finite(&one(), 1, 1, m, order).mul(&QSeries::poch_finite(&a(), 1, 1, m, order));
    let den = QSeries::poch_finite(&minus_one(), 1, 1, m, order).mul(&QSeries::poch_finite(&-a(), 1, 1, m, order));
    num.mul(&inverse(&den))
}

/// `[ratio(N-1) + ratio(N)] a^N q^{N^2}`.
pub fn dousse_kim_term(n: usize, order: usize) -> QSeries {
    let w = n * n;
    if w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let body = dousse_kim_ratio(n - 1, local).add(&dousse_kim_ratio(n, local)).mul_poly(&a().pow(n as u32));
    shifted_into(&body, w, order)
}

pub(crate) fn build_dousse_kim(order: usize) -> IdentitySides {
    let lhs = strict_product(order).mul(&inverse(&poch_inf(&-a(), 1, 1, order)));
    let last = last_k(order, super::square_weight);
    IdentitySides { lhs, rhs: sum_outer_terms(last, order, |n| dousse_kim_term(n, order)), terms_built: last }
}

/// `1/(aq;q)_inf = 1 + sum_N a^N q^{N^2} / ((q;q)_N (aq;q)_N)`.
pub fn cauchy_classical(order: usize) -> IdentitySides {
    let lhs = inverse(&poch_inf(&-a(), 1, 1, order));
    let last = last_k(order, super::square_weight);
    let rhs = sum_outer_terms(last, order, |n| {
        let w = n * n;
        let local = order - w;
        let den = QSeries::poch_finite(&minus_one(), 1, 1, n, local).mul(&QSeries::poch_finite(&-a(), 1, 1, n, local));
        shifted_into(&inverse(&den).mul_poly(&a().pow(n as u32)), w, order)
    });
    IdentitySides { lhs, rhs, terms_built: last }
}
