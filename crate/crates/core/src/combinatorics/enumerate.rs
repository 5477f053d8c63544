use crate::polyring::MultiPoly;

use super::{durfee_size, ColoredPart, ColoredPartition, PartitionKind};

/// All `r`-colored partitions of `n` of the given kind, each listed once.
///
/// Recursive descent over part types `(size, color)` in decreasing
/// generalized order, choosing a multiplicity for each (0 or 1 for strict)
/// and, for overpartitions, whether the last copy is overlined.
pub fn enumerate(kind: PartitionKind, r: usize, n: u32) -> Vec<ColoredPartition> {
    let types: Vec<(u32, u32)> = (1..=n).rev().flat_map(|s| (1..=r as u32).rev().map(move |c| (s, c))).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(kind, &types, 0, n, &mut current, &mut out);
    out
}

fn descend(
    kind: PartitionKind,
    types: &[(u32, u32)],
    start: usize,
    remaining: u32,
    current: &mut Vec<ColoredPart>,
    out: &mut Vec<ColoredPartition>,
) {
    if remaining == 0 {
        out.push(ColoredPartition::from_sorted_unchecked(kind, current.clone()));
        return;
    }
    for (idx, &(size, color)) in types.iter().enumerate().skip(start) {
        if size > remaining {
            continue;
        }
        let max_mult = match kind {
            PartitionKind::Strict => 1,
            PartitionKind::Over => remaining / size,
        };
        for mult in 1..=max_mult {
            let overline_choices: &[bool] = match kind {
                PartitionKind::Strict => &[false],
                PartitionKind::Over => &[false, true],
            };
            for &last_overlined in overline_choices {
                let before = current.len();
                for m in 0..mult {
                    current.push(ColoredPart::new(size, color, last_overlined && m + 1 == mult));
                }
                descend(kind, types, idx + 1, remaining - mult * size, current, out);
                current.truncate(before);
            }
        }
    }
}

pub fn enum_strict(r: usize, n: u32) -> Vec<ColoredPartition> {
    enumerate(PartitionKind::Strict, r, n)
}

pub fn enum_over(r: usize, n: u32) -> Vec<ColoredPartition> {
    enumerate(PartitionKind::Over, r, n)
}

fn sum_monomials<'a, I: IntoIterator<Item = &'a ColoredPartition>>(parts: I) -> MultiPoly {
    MultiPoly::from_terms(parts.into_iter().map(|p| (1.into(), p.monomial())))
}

/// Generating polynomial of all partitions of `n`: each contributes
/// `prod_j a_j^{#color j} z_j^{#overlined color j}`.
pub fn gen_poly(kind: PartitionKind, r: usize, n: u32) -> MultiPoly {
    sum_monomials(&enumerate(kind, r, n))
}

/// Like [`gen_poly`], restricted to partitions whose Durfee square has side `durfee`.
pub fn durfee_stratified_poly(kind: PartitionKind, r: usize, n: u32, durfee: u32) -> MultiPoly {
    let all = enumerate(kind, r, n);
    sum_monomials(all.iter().filter(|p| durfee_size(p) == durfee))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn literals(v: &[ColoredPartition]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn strict_listings() {
        assert_eq!(literals(&enum_strict(1, 5)), vec!["5[1]", "4[1],1[1]", "3[1],2[1]"]);
        assert_eq!(literals(&enum_strict(2, 2)), vec!["2[2]", "2[1]", "1[2],1[1]"]);
        for r in 1..=3 {
            let e = enum_strict(r, 0);
            assert_eq!(e.len(), 1);
            assert!(e[0].is_empty());
        }
    }

    #[test]
    fn over_listings() {
        assert_eq!(literals(&enum_over(1, 1)), vec!["1[1]", "1[1]~"]);
        let counts: Vec<usize> = (0..=5).map(|n| enum_over(1, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 14, 24]);
        let seven = literals(&enum_over(2, 7));
        assert!(seven.contains(&"2[2]~,2[1],1[2]~,1[1],1[1]~".to_string()));
    }

    #[test]
    fn enumerations_are_valid_and_distinct() {
        for kind in [PartitionKind::Strict, PartitionKind::Over] {
            for n in 0..=7 {
                let all = enumerate(kind, 2, n);
                let set: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                for q in &all {
                    assert_eq!(q.weight(), n);
                    assert_eq!(ColoredPartition::new(kind, q.parts().to_vec()).as_ref(), Ok(q));
                }
            }
        }
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(gen_poly(PartitionKind::Strict, 1, 5), p("a1 + 2*a1^2"));
        assert_eq!(gen_poly(PartitionKind::Over, 1, 1), p("a1 + a1*z1"));
        assert_eq!(gen_poly(PartitionKind::Over, 1, 2), p("a1 + a1*z1 + a1^2 + a1^2*z1"));
    }

    #[test]
    fn strata() {
        // {5} and {4+1} have a 1x1 Durfee square, {3+2} a 2x2 one
        assert_eq!(durfee_stratified_poly(PartitionKind::Strict, 1, 5, 1), p("a1 + a1^2"));
        assert_eq!(durfee_stratified_poly(PartitionKind::Strict, 1, 5, 2), p("a1^2"));
        for kind in [PartitionKind::Strict, PartitionKind::Over] {
            for n in 1..=8 {
                let mut sum = MultiPoly::zero();
                for d in 1..=3 {
                    sum += &durfee_stratified_poly(kind, 2, n, d);
                }
                assert_eq!(sum, gen_poly(kind, 2, n));
            }
        }
    }
}
