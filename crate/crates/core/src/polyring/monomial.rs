use std::cmp::Ordering;
use std::fmt;

/// A generator of the coefficient ring.
///
/// `A(i)` and `Z(i)` are the color weight and the overline tracker of color
/// `i` (1-based); `Y` counts parts. The total order used everywhere is
/// `A(1) < Z(1) < A(2) < Z(2) < ... < Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    A(u32),
    Z(u32),
    Y,
}

impl Symbol {
    fn sort_key(self) -> (u8, u32, u8) {
        match self {
            Symbol::A(i) => (0, i, 0),
            Symbol::Z(i) => (0, i, 1),
            Symbol::Y => (1, 0, 0),
        }
    }

    /// Color index for `A`/`Z`, `None` for `Y`.
    pub fn color(self) -> Option<u32> {
        match self {
            Symbol::A(i) | Symbol::Z(i) => Some(i),
            Symbol::Y => None,
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::A(i) => write!(f, "a{i}"),
            Symbol::Z(i) => write!(f, "z{i}"),
            Symbol::Y => f.write_str("y"),
        }
    }
}

/// A power product of [`Symbol`]s with positive exponents.
///
/// Stored as a list of `(symbol, exponent)` pairs sorted by symbol, with no
/// zero exponents, so structural equality is mathematical equality.
///
/// Monomials are ordered by total degree first; within a degree, the monomial
/// with the larger exponent on the earliest differing symbol comes first. This
/// is the order terms are printed in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Symbol, u32)>,
}

impl Monomial {
    /// The monomial `1`.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(s: Symbol) -> Self {
        Monomial { exps: vec![(s, 1)] }
    }

    pub fn pow_of(s: Symbol, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { exps: vec![(s, e)] }
        }
    }

    /// Builds a monomial from arbitrary `(symbol, exponent)` pairs; repeated
    /// symbols are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Symbol, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(Symbol, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|x| x.0);
        let mut merged: Vec<(Symbol, u32)> = Vec::with_capacity(exps.len());
        for (s, e) in exps {
            match merged.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => merged.push((s, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.exps.binary_search_by(|(t, _)| t.cmp(&s)).map(|i| self.exps[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    /// Splits off the given symbols: returns the exponents of the removed
    /// symbols and the remaining monomial.
    pub(crate) fn split<F: Fn(Symbol) -> bool>(&self, remove: F) -> (Vec<(Symbol, u32)>, Monomial) {
        let (removed, kept): (Vec<_>, Vec<_>) = self.exps.iter().partition(|(s, _)| remove(*s));
        (removed, Monomial { exps: kept })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in self.exps.iter().zip(other.exps.iter()) {
            if x.0 != y.0 {
                // the side carrying the earlier symbol has the larger exponent there
                return if x.0 < y.0 { Ordering::Less } else { Ordering::Greater };
            }
            if x.1 != y.1 {
                return y.1.cmp(&x.1);
            }
        }
        // equal degree and equal common prefix forces equal length
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_order_interleaves_colors() {
        let mut v = vec![Symbol::Y, Symbol::Z(2), Symbol::A(2), Symbol::Z(1), Symbol::A(1)];
        v.sort();
        assert_eq!(v, vec![Symbol::A(1), Symbol::Z(1), Symbol::A(2), Symbol::Z(2), Symbol::Y]);
    }

    #[test]
    fn from_pairs_merges_and_drops_zero() {
        let m = Monomial::from_pairs([(Symbol::Z(1), 1), (Symbol::A(1), 2), (Symbol::Z(1), 2), (Symbol::Y, 0)]);
        assert_eq!(m.to_string(), "a1^2*z1^3");
        assert_eq!(m.exponent(Symbol::Y), 0);
        assert_eq!(m.degree(), 5);
    }

    #[test]
    fn graded_order() {
        let a1 = Monomial::var(Symbol::A(1));
        let a2 = Monomial::var(Symbol::A(2));
        let one = Monomial::one();
        let a1a1 = a1.mul(&a1);
        let a1a2 = a1.mul(&a2);
        let a2a2 = a2.mul(&a2);
        assert!(one < a1);
        assert!(a1 < a2);
        assert!(a2 < a1a1);
        assert!(a1a1 < a1a2 && a1a2 < a2a2);
    }
}
