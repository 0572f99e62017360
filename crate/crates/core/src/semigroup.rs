//! Canonical numerical semigroups and their classical invariants.
//!
//! A numerical semigroup is an additively closed subset of the naturals that
//! contains 0 and misses only finitely many values. The largest missing value
//! is the Frobenius number `F`; membership is stored as a bitset over
//! `0..=F+1` and every integer above `F+1` is a member. Two semigroups are
//! equal exactly when their canonical bitsets are equal.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::{gcd, Error, Result};

/// Hard cap on the closure window used by [`NumericalSemigroup::from_generators`].
const MAX_WINDOW: u64 = 1 << 24;

/// A numerical semigroup in canonical form.
///
/// The whole of the naturals (Frobenius number < 1) is not representable;
/// constructors report [`Error::Naturals`] where it would arise.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CanonicalJson", try_from = "CanonicalJson")]
pub struct NumericalSemigroup {
    frobenius: u64,
    /// Membership of `0..=frobenius+1`; the top bit is always set.
    bits: BitSet,
}

impl NumericalSemigroup {
    /// The submonoid generated by `gens`, which is a numerical semigroup
    /// exactly when the generators are coprime.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        if gens[0] == 1 {
            return Err(Error::Naturals);
        }

        let m = gens[0];
        let mut window = 2 * (gens[gens.len() - 1] + m);
        loop {
            if window > MAX_WINDOW {
                return Err(Error::WindowExceeded);
            }
            let mut member = BitSet::new(window as usize + 1);
            member.set(0);
            for x in 1..=window {
                for &gen in &gens {
                    if x >= gen && member.get((x - gen) as usize) {
                        member.set(x as usize);
                        break;
                    }
                }
            }
            // A run of m consecutive members means everything beyond it is a member.
            let mut run = 0u64;
            let mut tail_start = None;
            for x in 1..=window {
                if member.get(x as usize) {
                    run += 1;
                    if run == m {
                        tail_start = Some(x - m + 1);
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            if let Some(t) = tail_start {
                let frob = (1..t).rev().find(|&x| !member.get(x as usize));
                let Some(frobenius) = frob else {
                    return Err(Error::Naturals);
                };
                return Self::canonicalize(frobenius + 1, |x| member.get(x as usize));
            }
            window *= 2;
        }
    }

    /// `{0} ∪ {f+1, f+2, ...}`, the minimum of every family handled here.
    pub fn delta(f: u64) -> Result<Self> {
        if f < 2 {
            return Err(Error::FrobeniusTooSmall { got: f, min: 2 });
        }
        let mut bits = BitSet::new(f as usize + 2);
        bits.set(0);
        bits.set(f as usize + 1);
        Ok(NumericalSemigroup { frobenius: f, bits })
    }

    /// Builds the semigroup with Frobenius number `f` whose members below `f`
    /// are exactly `smalls`. Validates additive closure.
    pub fn from_small_elements(f: u64, smalls: &[u64]) -> Result<Self> {
        if f < 1 {
            return Err(Error::FrobeniusTooSmall { got: f, min: 1 });
        }
        let mut smalls = smalls.to_vec();
        smalls.sort_unstable();
        smalls.dedup();
        if smalls.first() != Some(&0) {
            return Err(Error::InvalidSmallElements("0 must be a member".into()));
        }
        if let Some(&bad) = smalls.iter().find(|&&x| x >= f) {
            return Err(Error::InvalidSmallElements(format!(
                "{bad} is not below the Frobenius number {f}"
            )));
        }
        let mut bits = BitSet::new(f as usize + 2);
        for &x in &smalls {
            bits.set(x as usize);
        }
        bits.set(f as usize + 1);
        let s = NumericalSemigroup { frobenius: f, bits };
        for (i, &x) in smalls.iter().enumerate().skip(1) {
            for &y in &smalls[i..] {
                if x + y <= f && !s.contains(x + y) {
                    return Err(Error::NotClosed { x, y });
                }
            }
        }
        Ok(s)
    }

    /// Canonical value from a membership predicate that is valid on
    /// `0..=window` and implicitly true beyond it.
    fn canonicalize(window: u64, member: impl Fn(u64) -> bool) -> Result<Self> {
        let Some(frobenius) = (1..=window).rev().find(|&x| !member(x)) else {
            return Err(Error::Naturals);
        };
        let mut bits = BitSet::new(frobenius as usize + 2);
        for x in 0..=frobenius + 1 {
            if x > window || member(x) {
                bits.set(x as usize);
            }
        }
        let s = NumericalSemigroup { frobenius, bits };
        debug_assert!(s.is_closed());
        Ok(s)
    }

    fn is_closed(&self) -> bool {
        let smalls = self.small_elements();
        smalls.iter().skip(1).enumerate().all(|(i, &x)| {
            smalls[i + 1..]
                .iter()
                .all(|&y| x + y > self.frobenius || self.contains(x + y))
        })
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        x > self.frobenius || self.bits.get(x as usize)
    }

    /// The Frobenius number `F(S)`, the largest integer not in the semigroup.
    #[inline]
    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }

    /// The multiplicity `m(S)`, the smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.bits
            .ones()
            .find(|&x| x > 0)
            .expect("the bound F+1 is always a member") as u64
    }

    /// The genus `g(S)`, the number of gaps.
    pub fn genus(&self) -> u64 {
        self.frobenius + 1 - self.small_count()
    }

    /// `n(S)`, the number of elements strictly below the Frobenius number.
    pub fn small_count(&self) -> u64 {
        self.bits.count() as u64 - 1
    }

    /// The elements of `S` in `[0, F-1]`, ascending.
    pub fn small_elements(&self) -> Vec<u64> {
        self.bits
            .ones()
            .take_while(|&x| (x as u64) < self.frobenius)
            .map(|x| x as u64)
            .collect()
    }

    /// The gaps of `S`, ascending. The last one is the Frobenius number.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    /// The minimal system of generators `msg(S)`: nonzero elements that are
    /// not a sum of two nonzero elements.
    pub fn min_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        // Anything above F + m splits off a copy of m, so it is never minimal.
        let top = self.frobenius + m;
        let elems: Vec<u64> = (1..=top).filter(|&x| self.contains(x)).collect();
        let mut is_sum = vec![false; top as usize + 1];
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i..] {
                match x.checked_add(y) {
                    Some(s) if s <= top => is_sum[s as usize] = true,
                    _ => break,
                }
            }
        }
        elems.into_iter().filter(|&x| !is_sum[x as usize]).collect()
    }

    /// The embedding dimension `e(S)`.
    pub fn embedding_dim(&self) -> usize {
        self.min_generators().len()
    }

    /// The Apéry set of `n` in `S`: the least element of `S` in each residue
    /// class mod `n`. Requires `n` to be a nonzero element.
    pub fn apery(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAnElement(n));
        }
        let out: Vec<u64> = (0..=self.frobenius + n)
            .filter(|&s| self.contains(s) && (s < n || !self.contains(s - n)))
            .collect();
        debug_assert_eq!(out.len() as u64, n);
        Ok(out)
    }

    /// The pseudo-Frobenius numbers: gaps `z` with `z + s ∈ S` for every
    /// nonzero `s ∈ S`. Only nonzero small elements need checking, since
    /// `z + s` lands past `F` otherwise.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        let smalls = self.small_elements();
        self.gaps()
            .into_iter()
            .filter(|&z| smalls.iter().skip(1).all(|&s| self.contains(z + s)))
            .collect()
    }

    /// The special gaps: pseudo-Frobenius numbers `z` with `2z ∈ S`. These
    /// are exactly the gaps whose adjunction keeps the set a semigroup.
    pub fn special_gaps(&self) -> Vec<u64> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&z| self.contains(2 * z))
            .collect()
    }

    /// Intersection, again a numerical semigroup; its Frobenius number is the
    /// larger of the two.
    pub fn intersect(&self, other: &Self) -> Self {
        let window = self.frobenius.max(other.frobenius) + 1;
        let s = Self::canonicalize(window, |x| self.contains(x) && other.contains(x))
            .expect("an intersection always keeps the larger Frobenius number as a gap");
        debug_assert_eq!(s.frobenius, self.frobenius.max(other.frobenius));
        s
    }

    /// `S \ {m(S)}`, always a numerical semigroup since the multiplicity is a
    /// minimal generator. The genus grows by exactly one.
    pub fn remove_multiplicity(&self) -> Self {
        let m = self.multiplicity();
        let window = self.frobenius.max(m) + 1;
        Self::canonicalize(window, |x| x != m && self.contains(x))
            .expect("removing the multiplicity leaves a gap")
    }

    /// `S ∪ {x}` for a special gap `x`. When `x = F(S)` the Frobenius number
    /// shrinks to the next largest gap.
    pub fn adjoin(&self, x: u64) -> Result<Self> {
        if !self.special_gaps().contains(&x) {
            return Err(Error::NotASpecialGap(x));
        }
        self.with_element(x)
    }

    /// Union with one element plus re-canonicalization, without the special
    /// gap check. Callers must know the result is additively closed.
    pub(crate) fn with_element(&self, x: u64) -> Result<Self> {
        Self::canonicalize(self.frobenius + 1, |v| v == x || self.contains(v))
    }

    /// The ratio `r(S)`: the smallest element not divisible by the
    /// multiplicity, equivalently the second smallest minimal generator.
    pub fn ratio(&self) -> u64 {
        let msg = self.min_generators();
        debug_assert!(msg.len() >= 2);
        msg[1]
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        if other.frobenius > self.frobenius {
            return false;
        }
        self.bits
            .ones()
            .all(|x| other.contains(x as u64))
    }

    /// Canonical JSON: `{"frobenius": F, "small_elements": [...], "min_generators": [...]}`.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("canonical JSON serialization cannot fail")
    }

    /// Parses the canonical JSON encoding, re-canonicalizing and validating
    /// additive closure.
    pub fn from_canonical_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for s in self.small_elements() {
            write!(f, "{s},")?;
        }
        write!(f, "{},->}}", self.frobenius + 1)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Ord for NumericalSemigroup {
    /// Orders by Frobenius number, then lexicographically by the list of
    /// small elements.
    fn cmp(&self, other: &Self) -> Ordering {
        self.frobenius.cmp(&other.frobenius).then_with(|| {
            let a = self.bits.ones().take_while(|&x| (x as u64) < self.frobenius);
            let b = other.bits.ones().take_while(|&x| (x as u64) < other.frobenius);
            a.cmp(b)
        })
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The serialized form of a semigroup. `small_elements` lists `S ∩ [0, F-1]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CanonicalJson {
    pub frobenius: u64,
    pub small_elements: Vec<u64>,
    #[serde(default)]
    pub min_generators: Vec<u64>,
}

impl From<NumericalSemigroup> for CanonicalJson {
    fn from(s: NumericalSemigroup) -> Self {
        CanonicalJson {
            frobenius: s.frobenius(),
            small_elements: s.small_elements(),
            min_generators: s.min_generators(),
        }
    }
}

impl TryFrom<CanonicalJson> for NumericalSemigroup {
    type Error = Error;

    fn try_from(j: CanonicalJson) -> Result<Self> {
        let s = NumericalSemigroup::from_small_elements(j.frobenius, &j.small_elements)?;
        if !j.min_generators.is_empty() && j.min_generators != s.min_generators() {
            return Err(Error::Json(format!(
                "min_generators {:?} do not match the recomputed {:?}",
                j.min_generators,
                s.min_generators()
            )));
        }
        Ok(s)
    }
}

/// Derived invariants of a semigroup in one bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    pub gaps: Vec<u64>,
    pub pseudo_frobenius: Vec<u64>,
    pub special_gaps: Vec<u64>,
    pub min_generators: Vec<u64>,
    /// The type `t(S) = #PF(S)`.
    pub type_count: usize,
    /// The embedding dimension `e(S) = #msg(S)`.
    pub embedding_dim: usize,
}

impl GapProfile {
    pub fn of(s: &NumericalSemigroup) -> Self {
        let pseudo_frobenius = s.pseudo_frobenius();
        let min_generators = s.min_generators();
        GapProfile {
            gaps: s.gaps(),
            special_gaps: s.special_gaps(),
            type_count: pseudo_frobenius.len(),
            embedding_dim: min_generators.len(),
            pseudo_frobenius,
            min_generators,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(f: u64, smalls: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(f, smalls).unwrap()
    }

    #[test]
    fn generators_of_one_is_naturals() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[1]),
            Err(Error::Naturals)
        );
    }

    #[test]
    fn generators_rejects_bad_input() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 4]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime(2))
        );
    }

    #[test]
    fn generators_4_5_11() {
        let s = NumericalSemigroup::from_generators(&[4, 5, 11]).unwrap();
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.small_elements(), vec![0, 4, 5]);
    }

    #[test]
    fn generators_8_11_has_frobenius_69() {
        // The raw monoid generated by 8 and 11; its small elements below 27
        // are 0, 8, 11, 16, 19, 22, 24.
        let s = NumericalSemigroup::from_generators(&[8, 11]).unwrap();
        assert_eq!(s.frobenius(), 8 * 11 - 8 - 11);
        let below_27: Vec<u64> = (0..27).filter(|&x| s.contains(x)).collect();
        assert_eq!(below_27, vec![0, 8, 11, 16, 19, 22, 24]);
    }

    #[test]
    fn generators_2_3_is_representable() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.small_elements(), vec![0]);
        assert!(s.contains(2) && s.contains(3) && !s.contains(1));
    }

    #[test]
    fn delta_shape() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.small_elements(), vec![0]);
        assert_eq!(d.frobenius(), 7);
        assert!(d.contains(8) && !d.contains(7));
        assert_eq!(NumericalSemigroup::delta(2).unwrap().frobenius(), 2);
        assert_eq!(NumericalSemigroup::delta(11).unwrap().frobenius(), 11);
        assert!(NumericalSemigroup::delta(1).is_err());
    }

    #[test]
    fn invariants_of_delta_and_note22_members() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(
            (d.multiplicity(), d.frobenius(), d.genus(), d.small_count()),
            (8, 7, 7, 1)
        );
        let s1 = sg(11, &[0, 6, 7, 8, 9]);
        assert_eq!(s1.genus(), 7);
        let s2 = sg(11, &[0, 4, 8, 9]);
        assert_eq!(s2.genus(), 8);
        // g(S) + n(S) = F(S) + 1
        for s in [&s1, &s2] {
            assert_eq!(s.genus() + s.small_count(), s.frobenius() + 1);
        }
    }

    #[test]
    fn min_generators_examples() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.min_generators(), (8..=15).collect::<Vec<u64>>());

        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        assert_eq!(e37.min_generators(), vec![8, 11, 23, 28, 29]);

        let s = NumericalSemigroup::from_generators(&(10..=16).collect::<Vec<_>>()).unwrap();
        assert_eq!(s.frobenius(), 19);
        assert_eq!(s.min_generators(), (10..=16).collect::<Vec<u64>>());
    }

    #[test]
    fn min_generators_regenerate() {
        for s in [
            NumericalSemigroup::delta(9).unwrap(),
            sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]),
            NumericalSemigroup::from_generators(&[4, 5, 11]).unwrap(),
        ] {
            let back = NumericalSemigroup::from_generators(&s.min_generators()).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn apery_examples() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.apery(8).unwrap(), vec![0, 9, 10, 11, 12, 13, 14, 15]);

        let d4 = d.adjoin(4).unwrap();
        assert_eq!(d4.apery(8).unwrap(), vec![0, 4, 9, 10, 11, 13, 14, 15]);

        let s23 = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s23.apery(2).unwrap(), vec![0, 3]);

        assert_eq!(d.apery(7), Err(Error::NotAnElement(7)));
        assert_eq!(d.apery(0), Err(Error::NotAnElement(0)));
    }

    #[test]
    fn pseudo_frobenius_and_special_gaps() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.pseudo_frobenius(), (1..=7).collect::<Vec<u64>>());
        assert_eq!(d.special_gaps(), vec![4, 5, 6, 7]);

        let s1 = sg(11, &[0, 6, 7, 8, 9]);
        assert_eq!(s1.special_gaps(), vec![10, 11]);

        let s = sg(7, &[0, 4, 5]);
        assert!(s.special_gaps().contains(&7));
    }

    #[test]
    fn intersect_examples() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.intersect(&d), d);

        let d4 = d.adjoin(4).unwrap();
        let d5 = d.adjoin(5).unwrap();
        assert_eq!(d4.intersect(&d5), d);

        let a = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        let b = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let both = a.intersect(&b);
        assert_eq!(both, NumericalSemigroup::delta(2).unwrap());
        assert_eq!(both.frobenius(), a.frobenius().max(b.frobenius()));
    }

    #[test]
    fn remove_multiplicity_examples() {
        let d = NumericalSemigroup::delta(7).unwrap();
        let d4 = d.adjoin(4).unwrap();
        assert_eq!(d4.remove_multiplicity(), d);

        let d45 = d4.adjoin(5).unwrap();
        assert_eq!(d45.remove_multiplicity(), d.adjoin(5).unwrap());

        let s = sg(11, &[0, 3, 6, 9]);
        assert_eq!(s.remove_multiplicity(), sg(11, &[0, 6, 9]));
        assert_eq!(s.remove_multiplicity().genus(), s.genus() + 1);

        // Removing the multiplicity of a minimum pushes the Frobenius number up.
        assert_eq!(d.remove_multiplicity(), NumericalSemigroup::delta(8).unwrap());
    }

    #[test]
    fn adjoin_examples() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.adjoin(4).unwrap().small_elements(), vec![0, 4]);
        assert_eq!(d.adjoin(5).unwrap().small_elements(), vec![0, 5]);
        assert_eq!(d.adjoin(3), Err(Error::NotASpecialGap(3)));

        // Adjoining the Frobenius number itself shrinks the bound.
        let up = d.adjoin(7).unwrap();
        assert_eq!(up, NumericalSemigroup::delta(6).unwrap());

        // The one degenerate case: {0,2,3,...} plus its special gap 1 is all of N.
        let s23 = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s23.special_gaps(), vec![1]);
        assert_eq!(s23.adjoin(1), Err(Error::Naturals));
    }

    #[test]
    fn ratio_examples() {
        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        assert_eq!(e37.ratio(), 11);
        let s = NumericalSemigroup::from_generators(&(10..=16).collect::<Vec<_>>()).unwrap();
        assert_eq!(s.ratio(), 11);
        assert_eq!(NumericalSemigroup::delta(7).unwrap().ratio(), 9);
    }

    #[test]
    fn subset_relation() {
        let d = NumericalSemigroup::delta(7).unwrap();
        let d4 = d.adjoin(4).unwrap();
        assert!(d.is_subset_of(&d4));
        assert!(!d4.is_subset_of(&d));
        let d11 = NumericalSemigroup::delta(11).unwrap();
        assert!(d11.is_subset_of(&d));
        assert!(!d.is_subset_of(&d11));
    }

    #[test]
    fn display_form() {
        let d = NumericalSemigroup::delta(7).unwrap();
        assert_eq!(d.to_string(), "{0,8,->}");
        assert_eq!(d.adjoin(4).unwrap().to_string(), "{0,4,8,->}");
    }

    #[test]
    fn ordering_is_by_frobenius_then_small_elements() {
        let d = NumericalSemigroup::delta(7).unwrap();
        let d4 = d.adjoin(4).unwrap();
        let d5 = d.adjoin(5).unwrap();
        let mut v = vec![d5.clone(), d.clone(), d4.clone()];
        v.sort();
        assert_eq!(v, vec![d.clone(), d4, d5]);
        assert!(d < NumericalSemigroup::delta(8).unwrap());
    }

    #[test]
    fn canonical_json_round_trip() {
        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        let text = e37.to_canonical_json();
        assert_eq!(
            text,
            "{\"frobenius\":26,\"small_elements\":[0,8,11,16,19,22,23,24],\"min_generators\":[8,11,23,28,29]}"
        );
        assert_eq!(NumericalSemigroup::from_canonical_json(&text).unwrap(), e37);
    }

    #[test]
    fn canonical_json_validates() {
        // 4 + 4 = 8 is missing below F = 11.
        let bad = r#"{"frobenius":11,"small_elements":[0,4]}"#;
        assert!(NumericalSemigroup::from_canonical_json(bad).is_err());
        // Wrong minimal generators are rejected.
        let wrong = r#"{"frobenius":7,"small_elements":[0],"min_generators":[3]}"#;
        assert!(NumericalSemigroup::from_canonical_json(wrong).is_err());
        // Missing min_generators is fine.
        let ok = r#"{"frobenius":7,"small_elements":[0,4,5]}"#;
        assert_eq!(
            NumericalSemigroup::from_canonical_json(ok).unwrap(),
            sg(7, &[0, 4, 5])
        );
    }

    #[test]
    fn small_elements_must_close() {
        assert_eq!(
            NumericalSemigroup::from_small_elements(11, &[0, 4]),
            Err(Error::NotClosed { x: 4, y: 4 })
        );
        assert!(NumericalSemigroup::from_small_elements(11, &[4, 8]).is_err());
        assert!(NumericalSemigroup::from_small_elements(11, &[0, 4, 12]).is_err());
    }

    #[test]
    fn gap_profile_bundle() {
        let s1 = sg(11, &[0, 6, 7, 8, 9]);
        let p = GapProfile::of(&s1);
        assert_eq!(p.gaps, vec![1, 2, 3, 4, 5, 10, 11]);
        assert_eq!(p.gaps.len() as u64, s1.genus());
        assert_eq!(*p.gaps.last().unwrap(), s1.frobenius());
        assert_eq!(p.pseudo_frobenius, vec![10, 11]);
        assert_eq!(p.special_gaps, vec![10, 11]);
        assert_eq!(p.min_generators, vec![6, 7, 8, 9]);
        assert_eq!(p.type_count, 2);
        assert_eq!(p.embedding_dim, 4);
        assert_eq!(s1.multiplicity(), p.min_generators[0]);
    }
}
