//! Multi-color summation identities indexed by the Durfee square size `N`.
//!
//! Every `*_term(r, n, order)` returns the `N = n` outer term of the
//! summation side, truncated at `order`. The body of a term is computed at
//! `order - weight(n)` and then shifted by `q^{weight(n)}`, which is exact.

use crate::polyring::{Monomial, MultiPoly, Symbol};
use crate::qseries::QSeries;

use super::{compositions, ped_weight, shifted_into, sum_outer_terms, IdentitySides};

fn a(j: usize) -> MultiPoly {
    MultiPoly::var(Symbol::A(j as u32))
}

fn z(j: usize) -> MultiPoly {
    MultiPoly::var(Symbol::Z(j as u32))
}

fn y() -> MultiPoly {
    MultiPoly::var(Symbol::Y)
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

fn div_geom(f: &QSeries, c: &MultiPoly, e: usize) -> QSeries {
    f.div_geometric(c, e).expect("exponent is positive")
}

/// `1/(q^b;q^b)_i` for `i = 0..=max`.
fn inverse_qfactorials(base: usize, max: usize, order: usize) -> Vec<QSeries> {
    (0..=max).map(|i| inverse(&QSeries::poch_finite(&minus_one(), base, base, i, order))).collect()
}

/// `a_1^{i_1} ... a_r^{i_r}`.
fn color_monomial(comp: &[usize]) -> Monomial {
    Monomial::from_pairs(comp.iter().enumerate().map(|(j, &i)| (Symbol::A(j as u32 + 1), i as u32)))
}

fn binom2(i: usize) -> usize {
    i * i.saturating_sub(1) / 2
}

fn build_from_terms(
    r: usize,
    order: usize,
    lhs: QSeries,
    name: super::IdentityName,
    term: fn(usize, usize, usize) -> QSeries,
) -> IdentitySides {
    let last = name.entry().last_term(order);
    let rhs = sum_outer_terms(last, order, |n| term(r, n, order));
    IdentitySides { lhs, rhs, terms_built: last }
}

// ---------------------------------------------------------------------------
// Colored strict partitions
// ---------------------------------------------------------------------------

/// `q^{N^2} prod_j (-a_j q;q)_{N-1} sum_{|i|=N} a^i q^{sum C(i_j,2)} / prod_j (q;q)_{i_j}
///  * (1 + sum_s q^{i_1+...+i_s} a_s q^N prod_{k<s} (1 + a_k q^N))`.
pub fn alladi_term(r: usize, n: usize, order: usize) -> QSeries {
    let w = n * n;
    if n == 0 || w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let inv_qq = inverse_qfactorials(1, n, local);

    let mut boundary = QSeries::one(local);
    for j in 1..=r {
        boundary = boundary.mul(&QSeries::poch_finite(&a(j), 1, 1, n - 1, local));
    }

    let mut inner = QSeries::zero(local);
    for comp in compositions(n, r) {
        let mut base = QSeries::one(local);
        for &i in &comp {
            base = base.mul(&inv_qq[i]);
        }
        let base =
            base.shift(comp.iter().copied().map(binom2).sum()).mul_poly(&MultiPoly::term(1, color_monomial(&comp)));

        let mut bracket = QSeries::one(local);
        let mut prefix = 0;
        for s in 1..=r {
            prefix += comp[s - 1];
            let mut block3 = QSeries::monomial(a(s), prefix + n, local);
            for k in 1..s {
                block3 = block3.mul_binomial(&a(k), n);
            }
            bracket.add_assign(&block3);
        }
        inner.add_assign(&base.mul(&bracket));
    }
    shifted_into(&boundary.mul(&inner), w, order)
}

/// `prod_j (-a_j q;q)_inf`, the generating function of `r`-colored strict partitions.
pub fn strict_product(r: usize, order: usize) -> QSeries {
    let mut lhs = QSeries::one(order);
    for j in 1..=r {
        lhs = lhs.mul(&poch_inf(&a(j), 1, 1, order));
    }
    lhs
}

pub(crate) fn build_alladi(r: usize, order: usize) -> IdentitySides {
    build_from_terms(r, order, strict_product(r, order), super::IdentityName::Alladi, alladi_term)
}

/// The `y`-refined term: `a_j` is accompanied by `y` everywhere except in the
/// inner `a^i`, whose total degree `N` is carried by the outer `(y q^N)^N`.
pub fn alladi_y_term(r: usize, n: usize, order: usize) -> QSeries {
    let w = n * n;
    if n == 0 || w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let inv_qq = inverse_qfactorials(1, n, local);
    let ay = |j: usize| &a(j) * &y();

    let mut boundary = QSeries::one(local).mul_poly(&y().pow(n as u32));
    for j in 1..=r {
        boundary = boundary.mul(&QSeries::poch_finite(&ay(j), 1, 1, n - 1, local));
    }

    let mut inner = QSeries::zero(local);
    for comp in compositions(n, r) {
        let mut base = QSeries::one(local);
        for &i in &comp {
            base = base.mul(&inv_qq[i]);
        }
        let base =
            base.shift(comp.iter().copied().map(binom2).sum()).mul_poly(&MultiPoly::term(1, color_monomial(&comp)));

        let mut bracket = QSeries::one(local);
        let mut prefix = 0;
        for s in 1..=r {
            prefix += comp[s - 1];
            let mut block3 = QSeries::monomial(ay(s), prefix + n, local);
            for k in 1..s {
                block3 = block3.mul_binomial(&ay(k), n);
            }
            bracket.add_assign(&block3);
        }
        inner.add_assign(&base.mul(&bracket));
    }
    shifted_into(&boundary.mul(&inner), w, order)
}

pub(crate) fn build_alladi_y(r: usize, order: usize) -> IdentitySides {
    let mut lhs = QSeries::one(order);
    for j in 1..=r {
        lhs = lhs.mul(&poch_inf(&(&a(j) * &y()), 1, 1, order));
    }
    build_from_terms(r, order, lhs, super::IdentityName::AlladiY, alladi_y_term)
}

// ---------------------------------------------------------------------------
// Colored overpartitions and their specializations
// ---------------------------------------------------------------------------

/// Outer term of the overpartition identity:
///
/// ```text
/// q^{N^2} prod_j (-a_j z_j q;q)_{N-1}/(a_j q;q)_{N-1}
///   sum_{|i|=N} prod_j a_j^{i_j} (-z_j;q)_{i_j}/(q;q)_{i_j}
///   * (1 + sum_s q^{i_1+...+i_{s-1}} (1 + z_s q^{i_s}) a_s q^N/(1 - a_s q^N)
///          prod_{k<s} (1 + a_k z_k q^N)/(1 - a_k q^N))
/// ```
pub fn overpartition_term(r: usize, n: usize, order: usize) -> QSeries {
    let w = n * n;
    if n == 0 || w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let inv_qq = inverse_qfactorials(1, n, local);
    let az = |j: usize| &a(j) * &z(j);

    let mut boundary = QSeries::one(local);
    for j in 1..=r {
        let num = QSeries::poch_finite(&az(j), 1, 1, n - 1, local);
        let den = QSeries::poch_finite(&-a(j), 1, 1, n - 1, local);
        boundary = boundary.mul(&num).mul(&inverse(&den));
    }

    let mut inner = QSeries::zero(local);
    for comp in compositions(n, r) {
        let mut base = QSeries::one(local);
        for (j, &i) in comp.iter().enumerate() {
            base = base.mul(&QSeries::poch_finite(&z(j + 1), 0, 1, i, local)).mul(&inv_qq[i]);
        }
        let base = base.mul_poly(&MultiPoly::term(1, color_monomial(&comp)));

        let mut bracket = QSeries::one(local);
        let mut prefix = 0;
        for s in 1..=r {
            let mut block3 = QSeries::monomial(a(s), prefix + n, local).mul_binomial(&z(s), comp[s - 1]);
            block3 = div_geom(&block3, &a(s), n);
            for k in 1..s {
                block3 = div_geom(&block3.mul_binomial(&az(k), n), &a(k), n);
            }
            bracket.add_assign(&block3);
            prefix += comp[s - 1];
        }
        inner.add_assign(&base.mul(&bracket));
    }
    shifted_into(&boundary.mul(&inner), w, order)
}

/// `prod_j (-a_j z_j q;q)_inf / (a_j q;q)_inf`, the generating function of
/// `r`-colored overpartitions.
pub fn overpartition_product(r: usize, order: usize) -> QSeries {
    let mut lhs = QSeries::one(order);
    for j in 1..=r {
        let num = poch_inf(&(&a(j) * &z(j)), 1, 1, order);
        let den = poch_inf(&-a(j), 1, 1, order);
        lhs = lhs.mul(&num).mul(&inverse(&den));
    }
    lhs
}

pub(crate) fn build_overpartition_cft(r: usize, order: usize) -> IdentitySides {
    build_from_terms(
        r,
        order,
        overpartition_product(r, order),
        super::IdentityName::OverpartitionCft,
        overpartition_term,
    )
}

/// Outer term of the multi-color Cauchy identity (colored ordinary partitions):
///
/// `q^{N^2} prod_j 1/(a_j q;q)_{N-1} sum_{|i|=N} a^i / prod_j (q;q)_{i_j}
///  * (1 + sum_s q^{i_1+...+i_{s-1}} a_s q^N/(1 - a_s q^N) prod_{k<s} 1/(1 - a_k q^N))`.
pub fn cauchy_multi_term(r: usize, n: usize, order: usize) -> QSeries {
    let w = n * n;
    if n == 0 || w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let inv_qq = inverse_qfactorials(1, n, local);

    let mut boundary = QSeries::one(local);
    for j in 1..=r {
        boundary = boundary.mul(&inverse(&QSeries::poch_finite(&-a(j), 1, 1, n - 1, local)));
    }

    let mut inner = QSeries::zero(local);
    for comp in compositions(n, r) {
        let mut base = QSeries::one(local);
        for &i in &comp {
            base = base.mul(&inv_qq[i]);
        }
        let base = base.mul_poly(&MultiPoly::term(1, color_monomial(&comp)));

        let mut bracket = QSeries::one(local);
        let mut prefix = 0;
        for s in 1..=r {
            let mut block3 = div_geom(&QSeries::monomial(a(s), prefix + n, local), &a(s), n);
            for k in 1..s {
                block3 = div_geom(&block3, &a(k), n);
            }
            bracket.add_assign(&block3);
            prefix += comp[s - 1];
        }
        inner.add_assign(&base.mul(&bracket));
    }
    shifted_into(&boundary.mul(&inner), w, order)
}

pub(crate) fn build_cauchy_multi(r: usize, order: usize) -> IdentitySides {
    let mut lhs = QSeries::one(order);
    for j in 1..=r {
        lhs = lhs.mul(&inverse(&poch_inf(&-a(j), 1, 1, order)));
    }
    build_from_terms(r, order, lhs, super::IdentityName::CauchyMulti, cauchy_multi_term)
}

/// Outer term of the ped identity (the overpartition identity under
/// `a -> a/q`, `z -> z q`, `q -> q^2`):
///
/// ```text
/// q^{2N^2-N} prod_j (-a_j z_j q^2;q^2)_{N-1}/(a_j q;q^2)_{N-1}
///   sum_{|i|=N} prod_j a_j^{i_j} (-z_j q;q^2)_{i_j}/(q^2;q^2)_{i_j}
///   * (1 + sum_s q^{2(i_1+...+i_{s-1})} (1 + z_s q^{2 i_s + 1}) a_s q^{2N-1}/(1 - a_s q^{2N-1})
///          prod_{k<s} (1 + a_k z_k q^{2N})/(1 - a_k q^{2N-1}))
/// ```
pub fn ped_term(r: usize, n: usize, order: usize) -> QSeries {
    let w = ped_weight(n);
    if n == 0 || w >= order {
        return QSeries::zero(order);
    }
    let local = order - w;
    let inv_qq = inverse_qfactorials(2, n, local);
    let az = |j: usize| &a(j) * &z(j);

    let mut boundary = QSeries::one(local);
    for j in 1..=r {
        let num = QSeries::poch_finite(&az(j), 2, 2, n - 1, local);
        let den = QSeries::poch_finite(&-a(j), 1, 2, n - 1, local);
        boundary = boundary.mul(&num).mul(&inverse(&den));
    }

    let odd = 2 * n - 1;
    let mut inner = QSeries::zero(local);
    for comp in compositions(n, r) {
        let mut base = QSeries::one(local);
        for (j, &i) in comp.iter().enumerate() {
            base = base.mul(&QSeries::poch_finite(&z(j + 1), 1, 2, i, local)).mul(&inv_qq[i]);
        }
        let base = base.mul_poly(&MultiPoly::term(1, color_monomial(&comp)));

        let mut bracket = QSeries::one(local);
        let mut prefix = 0;
        for s in 1..=r {
            let mut block3 = QSeries::monomial(a(s), 2 * prefix + odd, local).mul_binomial(&z(s), 2 * comp[s - 1] + 1);
            block3 = div_geom(&block3, &a(s), odd);
            for k in 1..s {
                block3 = div_geom(&block3.mul_binomial(&az(k), 2 * n), &a(k), odd);
            }
            bracket.add_assign(&block3);
            prefix += comp[s - 1];
        }
        inner.add_assign(&base.mul(&bracket));
    }
    shifted_into(&boundary.mul(&inner), w, order)
}

pub(crate) fn build_ped(r: usize, order: usize) -> IdentitySides {
    let mut lhs = QSeries::one(order);
    for j in 1..=r {
        let num = poch_inf(&(&a(j) * &z(j)), 2, 2, order);
        let den = poch_inf(&-a(j), 1, 2, order);
        lhs = lhs.mul(&num).mul(&inverse(&den));
    }
    build_from_terms(r, order, lhs, super::IdentityName::Ped, ped_term)
}
