//! Arf and saturated predicates and the chain decomposition of a sub-family
//! inside an ambient family's tree.
//!
//! Both predicates quantify over all elements, but only small elements can
//! witness a failure: in the Arf condition `x + y - z >= x`, so a triple
//! whose maximum sits past `F` lands in the tail, and in the saturated
//! condition `s + d > F` once `s > F`. The scans below are therefore finite
//! and complete.

use crate::covariety::{children_in_family, enumerate, FamilySpec};
use crate::semigroup::NumericalSemigroup;
use crate::{gcd, Error, Result};

/// The Arf condition: `x + y - z` is a member for all members `x >= y >= z`.
pub fn is_arf(s: &NumericalSemigroup) -> bool {
    let smalls = s.small_elements();
    for (i, &x) in smalls.iter().enumerate() {
        for (j, &y) in smalls[..=i].iter().enumerate() {
            for &z in &smalls[..=j] {
                if !s.contains(x + y - z) {
                    return false;
                }
            }
        }
    }
    true
}

/// The saturated condition: `s + gcd{x in S : 0 < x <= s}` is a member for
/// every nonzero element `s`.
pub fn is_saturated(s: &NumericalSemigroup) -> bool {
    let mut d = 0u64;
    for &e in s.small_elements().iter().skip(1) {
        d = gcd(d, e);
        if !s.contains(e + d) {
            return false;
        }
    }
    true
}

/// A sub-family expressed as a union of chains through the ambient tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    /// Members of the sub-family with no child in the ambient tree that stays
    /// in the sub-family, sorted.
    pub gamma: Vec<NumericalSemigroup>,
    /// `chains[i]` is the associated chain of `gamma[i]` down to the minimum.
    pub chains: Vec<Vec<NumericalSemigroup>>,
    /// The union of all chains, sorted and deduplicated. Equals the directly
    /// enumerated sub-family.
    pub union: Vec<NumericalSemigroup>,
}

/// Decomposes the sub-family as the union of the ambient-tree chains hanging
/// from its childless members, then verifies the union against the direct
/// enumeration of the sub-family.
pub fn chain_decomposition(
    ambient: &FamilySpec,
    sub: &FamilySpec,
) -> Result<ChainDecomposition> {
    if ambient.frobenius() != sub.frobenius() {
        return Err(Error::FrobeniusMismatch {
            expected: ambient.frobenius(),
            actual: sub.frobenius(),
        });
    }
    if !sub.family().is_sub_family_of(ambient.family()) {
        return Err(Error::InvalidFamilyPair {
            ambient: ambient.family().label(),
            sub: sub.family().label(),
        });
    }
    let f = sub.frobenius();
    let ambient_tree = enumerate(ambient);

    let mut gamma: Vec<NumericalSemigroup> = ambient_tree
        .semigroups()
        .filter(|s| sub.family().contains(s, f))
        .filter(|s| {
            children_in_family(s, ambient)
                .iter()
                .all(|(_, child)| !sub.family().contains(child, f))
        })
        .cloned()
        .collect();
    gamma.sort();

    let chains: Vec<Vec<NumericalSemigroup>> =
        gamma.iter().map(crate::covariety::chain).collect();

    let mut union: Vec<NumericalSemigroup> = chains.iter().flatten().cloned().collect();
    union.sort();
    union.dedup();

    let mut direct: Vec<NumericalSemigroup> = enumerate(sub).semigroups().cloned().collect();
    direct.sort();
    if union != direct {
        return Err(Error::DecompositionMismatch);
    }

    Ok(ChainDecomposition { gamma, chains, union })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariety::{enumerate, Family, FamilySpec};

    fn sg(f: u64, smalls: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(f, smalls).unwrap()
    }

    #[test]
    fn arf_examples() {
        for f in 2..=15 {
            assert!(is_arf(&NumericalSemigroup::delta(f).unwrap()));
        }
        let s23 = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert!(is_arf(&s23));
        // 9 + 9 - 8 = 10 is a gap here.
        let s2 = sg(11, &[0, 4, 8, 9]);
        assert!(!is_arf(&s2));
        // Multiples of 3 with the tail glued on.
        assert!(is_arf(&sg(11, &[0, 3, 6, 9])));
    }

    #[test]
    fn saturated_examples() {
        for f in 2..=15 {
            assert!(is_saturated(&NumericalSemigroup::delta(f).unwrap()));
        }
        assert!(is_saturated(&sg(11, &[0, 3, 6, 9])));
        // d = 4 at 4, then d = 1 at 9, but 4 + 4 = 8 is fine while 9 + 1 = 10 is out.
        assert!(!is_saturated(&sg(11, &[0, 4, 8, 9])));
    }

    #[test]
    fn saturated_members_are_arf() {
        for f in 2..=12 {
            let tree = enumerate(&FamilySpec::new(f, Family::Saturated).unwrap());
            for s in tree.semigroups() {
                assert!(is_arf(s), "saturated but not Arf: {s}");
            }
        }
    }

    #[test]
    fn parf_is_the_predicate_intersection() {
        for f in 2..=12 {
            let perfect: Vec<_> = enumerate(&FamilySpec::new(f, Family::Perfect).unwrap())
                .semigroups()
                .cloned()
                .collect();
            let mut expected: Vec<_> = perfect.iter().filter(|s| is_arf(s)).cloned().collect();
            expected.sort();
            let mut parf: Vec<_> = enumerate(&FamilySpec::new(f, Family::Parf).unwrap())
                .semigroups()
                .cloned()
                .collect();
            parf.sort();
            assert_eq!(parf, expected);
        }
    }

    #[test]
    fn chain_decomposition_perfect_within_itself() {
        let spec = FamilySpec::new(7, Family::Perfect).unwrap();
        let cd = chain_decomposition(&spec, &spec).unwrap();
        // Every member is on some chain; gamma is the set of leaves.
        assert_eq!(cd.union.len(), 4);
        for leaf in &cd.gamma {
            assert!(children_in_family(leaf, &spec).is_empty());
        }
    }

    #[test]
    fn chain_decomposition_parf_inside_perfect() {
        for f in [7u64, 11] {
            let ambient = FamilySpec::new(f, Family::Perfect).unwrap();
            let sub = FamilySpec::new(f, Family::Parf).unwrap();
            let cd = chain_decomposition(&ambient, &sub).unwrap();
            let mut direct: Vec<_> = enumerate(&sub).semigroups().cloned().collect();
            direct.sort();
            assert_eq!(cd.union, direct);
        }
    }

    #[test]
    fn chain_decomposition_rejects_bad_pairs() {
        let perfect = FamilySpec::new(7, Family::Perfect).unwrap();
        let arf = FamilySpec::new(7, Family::Arf).unwrap();
        assert_eq!(
            chain_decomposition(&arf, &perfect),
            // Perfect is not a sub-family of Arf.
            Err(Error::InvalidFamilyPair { ambient: "arf", sub: "perfect" })
        );
        let arf9 = FamilySpec::new(9, Family::Arf).unwrap();
        assert!(matches!(
            chain_decomposition(&arf9, &FamilySpec::new(7, Family::Parf).unwrap()),
            Err(Error::FrobeniusMismatch { .. })
        ));
    }
}
