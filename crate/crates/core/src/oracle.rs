//! Brute-force ground truth.
//!
//! Everything here recomputes invariants straight from the definitions over
//! wide windows, sharing nothing with the fast modules beyond the semigroup
//! container itself, and [`crosscheck`] diffs the two worlds on every
//! semigroup with a given Frobenius number.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covariety::{self, children_in_family, Family, FamilySpec};
use crate::perfect::{self, PerfectClosure};
use crate::semigroup::NumericalSemigroup;
use crate::{arf_sat, gcd, Error, Result};

/// Enumeration beyond this Frobenius number is refused; the decision tree is
/// exponential and the point is certification, not scale.
pub const MAX_FROBENIUS: u64 = 14;

/// Every numerical semigroup with Frobenius number exactly `f`, built by
/// deciding membership of `1..f` smallest-first with closure propagation.
pub fn all_semigroups(f: u64) -> Result<Vec<NumericalSemigroup>> {
    if f < 2 {
        return Err(Error::FrobeniusTooSmall { got: f, min: 2 });
    }
    if f > MAX_FROBENIUS {
        return Err(Error::OracleCap { frobenius: f, cap: MAX_FROBENIUS });
    }
    Ok(enumerate_masks(f))
}

/// Enumeration without the public range check; `f = 1` yields the single
/// semigroup `{0,2,->}`. Used for perfect-superset searches.
pub(crate) fn all_semigroups_unchecked(f: u64) -> Vec<NumericalSemigroup> {
    enumerate_masks(f)
}

fn enumerate_masks(f: u64) -> Vec<NumericalSemigroup> {
    debug_assert!((1..=31).contains(&f));
    // Bit i of a mask is membership of i, for i in 0..=f.
    let mut out = Vec::new();
    let full = 1u32 << f;
    let mut stack: Vec<(u64, u32)> = vec![(1, 1)]; // (next value to decide, closed mask)
    while let Some((v, mask)) = stack.pop() {
        if v == f {
            debug_assert_eq!(mask & full, 0);
            let smalls: Vec<u64> = (0..f).filter(|&i| mask & (1 << i) != 0).collect();
            let s = NumericalSemigroup::from_small_elements(f, &smalls)
                .expect("closure propagation only produces closed sets");
            out.push(s);
            continue;
        }
        if mask & (1 << v) != 0 {
            // Forced in by closure.
            stack.push((v + 1, mask));
            continue;
        }
        // Out.
        stack.push((v + 1, mask));
        // In, unless closing would pull in f.
        let mut with_v = mask | (1 << v);
        for x in v..=f {
            if with_v & (1 << (x - v)) != 0 {
                with_v |= 1 << x;
            }
        }
        if with_v & full == 0 {
            stack.push((v + 1, with_v));
        }
    }
    out.sort();
    out
}

fn def_gaps(s: &NumericalSemigroup) -> Vec<u64> {
    (1..=s.frobenius()).filter(|&x| !s.contains(x)).collect()
}

fn def_elements_upto(s: &NumericalSemigroup, top: u64) -> Vec<u64> {
    (0..=top).filter(|&x| s.contains(x)).collect()
}

/// Pseudo-Frobenius numbers by the raw definition, scanning elements across
/// the window `[1, 3F]`.
pub(crate) fn def_pseudo_frobenius(s: &NumericalSemigroup) -> Vec<u64> {
    let f = s.frobenius();
    let elements: Vec<u64> = def_elements_upto(s, 3 * f)
        .into_iter()
        .filter(|&x| x > 0)
        .collect();
    def_gaps(s)
        .into_iter()
        .filter(|&z| elements.iter().all(|&e| s.contains(z + e)))
        .collect()
}

/// Pseudo-Frobenius numbers through the Apéry route: `w - n` over the
/// maximal elements of the Apéry set of `n` under the order `a <= b` iff
/// `b - a` is a member.
pub(crate) fn def_pf_via_apery(s: &NumericalSemigroup) -> Vec<u64> {
    let n = {
        // The least nonzero element, found by scanning.
        let mut v = 1;
        while !s.contains(v) {
            v += 1;
        }
        v
    };
    let ap = def_apery(s, n);
    let mut pf: Vec<u64> = ap
        .iter()
        .filter(|&&w| ap.iter().all(|&w2| w2 <= w || !s.contains(w2 - w)))
        .map(|&w| w - n)
        .collect();
    pf.sort_unstable();
    pf
}

pub(crate) fn def_special_gaps(s: &NumericalSemigroup) -> Vec<u64> {
    def_pseudo_frobenius(s)
        .into_iter()
        .filter(|&z| s.contains(2 * z))
        .collect()
}

/// Gaps whose adjunction leaves an additively closed set, checked pairwise
/// over a wide window.
pub(crate) fn def_unitary_extensions(s: &NumericalSemigroup) -> Vec<u64> {
    let f = s.frobenius();
    def_gaps(s)
        .into_iter()
        .filter(|&x| {
            let in_t = |v: u64| v == x || s.contains(v);
            let elems: Vec<u64> = (1..=2 * f + 2).filter(|&v| in_t(v)).collect();
            elems
                .iter()
                .all(|&a| elems.iter().all(|&b| a + b > 2 * f + 2 || in_t(a + b)))
        })
        .collect()
}

pub(crate) fn def_min_generators(s: &NumericalSemigroup) -> Vec<u64> {
    let f = s.frobenius();
    let elements: Vec<u64> = def_elements_upto(s, 2 * f + 2)
        .into_iter()
        .filter(|&x| x > 0)
        .collect();
    elements
        .iter()
        .filter(|&&x| {
            !elements
                .iter()
                .any(|&a| a < x && elements.contains(&(x - a)))
        })
        .copied()
        .collect()
}

pub(crate) fn def_apery(s: &NumericalSemigroup, n: u64) -> Vec<u64> {
    (0..=s.frobenius() + n)
        .filter(|&v| s.contains(v) && (v < n || !s.contains(v - n)))
        .collect()
}

pub(crate) fn def_is_perfect(s: &NumericalSemigroup) -> bool {
    def_gaps(s)
        .iter()
        .all(|&h| !(s.contains(h - 1) && s.contains(h + 1)))
}

/// The least perfect semigroup containing `s`, found by searching every
/// semigroup with a smaller or equal Frobenius number. `None` means the only
/// perfect superset is all of the naturals.
pub(crate) fn def_least_perfect_superset(s: &NumericalSemigroup) -> Option<NumericalSemigroup> {
    let mut candidates: Vec<NumericalSemigroup> = Vec::new();
    for f in 1..=s.frobenius() {
        candidates.extend(
            all_semigroups_unchecked(f)
                .into_iter()
                .filter(|t| def_is_perfect(t) && s.is_subset_of(t)),
        );
    }
    let least = candidates
        .iter()
        .find(|c| candidates.iter().all(|t| c.is_subset_of(t)))?;
    Some(least.clone())
}

pub(crate) fn def_is_arf(s: &NumericalSemigroup) -> bool {
    let elems = def_elements_upto(s, 3 * s.frobenius());
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems[..=i].iter().enumerate() {
            for &z in &elems[..=j] {
                if !s.contains(x + y - z) {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn def_is_saturated(s: &NumericalSemigroup) -> bool {
    let elems = def_elements_upto(s, 3 * s.frobenius());
    for &e in elems.iter().filter(|&&e| e > 0) {
        let d = elems
            .iter()
            .filter(|&&x| x > 0 && x <= e)
            .fold(0, |acc, &x| gcd(acc, x));
        if !s.contains(e + d) {
            return false;
        }
    }
    true
}

fn def_family_member(s: &NumericalSemigroup, family: Family) -> bool {
    match family {
        Family::Perfect => def_is_perfect(s),
        Family::Arf => def_is_arf(s),
        Family::Saturated => def_is_saturated(s),
        Family::Parf => def_is_perfect(s) && def_is_arf(s),
        Family::Psat => def_is_perfect(s) && def_is_saturated(s),
    }
}

/// Parent in the covariety tree, recomputed from the raw member list.
fn def_parent(t: &NumericalSemigroup) -> NumericalSemigroup {
    let m = {
        let mut v = 1;
        while !t.contains(v) {
            v += 1;
        }
        v
    };
    let smalls: Vec<u64> = t
        .small_elements()
        .into_iter()
        .filter(|&x| x != m)
        .collect();
    NumericalSemigroup::from_small_elements(t.frobenius(), &smalls)
        .expect("dropping the least nonzero element keeps the set closed")
}

/// One disagreement between a fast path and its definitional recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub operation: String,
    pub input: String,
    pub fast_value: String,
    pub oracle_value: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCounts {
    pub perfect: usize,
    pub arf: usize,
    pub saturated: usize,
    pub parf: usize,
    pub psat: usize,
}

/// The result of a full certification run at one Frobenius number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub frobenius: u64,
    pub total_semigroups: usize,
    pub family_counts: FamilyCounts,
    pub beta: u64,
    pub mismatches: Vec<Mismatch>,
}

fn diff<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<Mismatch>,
    operation: &str,
    input: String,
    fast: &T,
    oracle: &T,
) {
    if fast != oracle {
        out.push(Mismatch {
            operation: operation.to_string(),
            input,
            fast_value: format!("{fast:?}"),
            oracle_value: format!("{oracle:?}"),
        });
    }
}

fn check_one(s: &NumericalSemigroup) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let f = s.frobenius();
    let name = s.to_string();

    diff(&mut out, "pseudo_frobenius", name.clone(), &s.pseudo_frobenius(), &def_pseudo_frobenius(s));
    diff(&mut out, "pseudo_frobenius_apery", name.clone(), &s.pseudo_frobenius(), &def_pf_via_apery(s));
    diff(&mut out, "special_gaps", name.clone(), &s.special_gaps(), &def_special_gaps(s));
    diff(&mut out, "special_gaps_extension", name.clone(), &s.special_gaps(), &def_unitary_extensions(s));
    diff(&mut out, "min_generators", name.clone(), &s.min_generators(), &def_min_generators(s));
    for n in (1..=2 * f).filter(|&n| s.contains(n)) {
        diff(
            &mut out,
            "apery",
            format!("{name}, n={n}"),
            &s.apery(n).expect("n is a nonzero element"),
            &def_apery(s, n),
        );
    }
    diff(&mut out, "is_perfect", name.clone(), &perfect::is_perfect(s), &def_is_perfect(s));
    diff(&mut out, "is_arf", name.clone(), &arf_sat::is_arf(s), &def_is_arf(s));
    diff(&mut out, "is_saturated", name.clone(), &arf_sat::is_saturated(s), &def_is_saturated(s));

    let fast_rp = match perfect::perfect_closure(s) {
        PerfectClosure::Semigroup(t) => Some(t),
        PerfectClosure::Naturals => None,
    };
    diff(&mut out, "perfect_closure", name, &fast_rp, &def_least_perfect_superset(s));
    out
}

/// Recomputes every derived quantity from the definitions for every
/// semigroup with Frobenius number `f` and diffs the fast modules against
/// them. A passing run returns a report with no mismatches.
pub fn crosscheck(f: u64) -> Result<OracleReport> {
    let all = all_semigroups(f)?;
    let mut mismatches: Vec<Mismatch> = all.par_iter().map(check_one).flatten().collect();

    let family_counts = FamilyCounts {
        perfect: all.iter().filter(|s| def_family_member(s, Family::Perfect)).count(),
        arf: all.iter().filter(|s| def_family_member(s, Family::Arf)).count(),
        saturated: all.iter().filter(|s| def_family_member(s, Family::Saturated)).count(),
        parf: all.iter().filter(|s| def_family_member(s, Family::Parf)).count(),
        psat: all.iter().filter(|s| def_family_member(s, Family::Psat)).count(),
    };

    for family in Family::ALL {
        let spec = FamilySpec::new(f, family).expect("cap implies F >= 2");
        let mut members: Vec<NumericalSemigroup> = all
            .iter()
            .filter(|s| def_family_member(s, family))
            .cloned()
            .collect();
        members.sort();
        let mut fast: Vec<NumericalSemigroup> =
            covariety::enumerate(&spec).semigroups().cloned().collect();
        fast.sort();
        diff(
            &mut mismatches,
            "enumerate",
            format!("F={f}, family={family}"),
            &fast,
            &members,
        );

        // The tree's child relation must invert the parent map on the members.
        for s in &members {
            let mut oracle_children: Vec<NumericalSemigroup> = members
                .iter()
                .filter(|t| t.small_count() > 1 && def_parent(t) == *s)
                .cloned()
                .collect();
            oracle_children.sort();
            let mut fast_children: Vec<NumericalSemigroup> = if family == Family::Perfect {
                match covariety::children_perfect(s, f) {
                    Ok(v) => v,
                    Err(e) => {
                        mismatches.push(Mismatch {
                            operation: "children".into(),
                            input: format!("F={f}, family={family}, S={s}"),
                            fast_value: format!("error: {e}"),
                            oracle_value: "a child list".into(),
                        });
                        continue;
                    }
                }
            } else {
                children_in_family(s, &spec).into_iter().map(|(_, c)| c).collect()
            };
            fast_children.sort();
            diff(
                &mut mismatches,
                "children",
                format!("F={f}, family={family}, S={s}"),
                &fast_children,
                &oracle_children,
            );
        }
    }

    // Maximal elements and beta, against inclusion-maximal filtering.
    let perfect_members: Vec<NumericalSemigroup> = all
        .iter()
        .filter(|s| def_is_perfect(s))
        .cloned()
        .collect();
    let mut oracle_max = covariety::inclusion_maximal(&perfect_members);
    oracle_max.sort();
    let mut fast_max = covariety::maximal_elements(f)?;
    fast_max.sort();
    diff(&mut mismatches, "maximal_elements", format!("F={f}"), &fast_max, &oracle_max);

    let beta = oracle_max
        .iter()
        .map(|s| s.genus())
        .min()
        .expect("the perfect family is never empty");
    diff(&mut mismatches, "beta", format!("F={f}"), &covariety::beta(f)?, &beta);

    mismatches.sort_by(|a, b| (&a.operation, &a.input).cmp(&(&b.operation, &b.input)));

    Ok(OracleReport {
        frobenius: f,
        total_semigroups: all.len(),
        family_counts,
        beta,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_out_of_range() {
        assert!(matches!(all_semigroups(1), Err(Error::FrobeniusTooSmall { .. })));
        assert_eq!(
            all_semigroups(15),
            Err(Error::OracleCap { frobenius: 15, cap: 14 })
        );
    }

    #[test]
    fn f2_is_a_single_semigroup() {
        let all = all_semigroups(2).unwrap();
        assert_eq!(all, vec![NumericalSemigroup::delta(2).unwrap()]);
    }

    #[test]
    fn agrees_with_full_subset_scan() {
        // Independent second route: try every subset of [1, f-1] directly.
        for f in 2..=10u64 {
            let mut dumb = Vec::new();
            for mask in 0u32..(1 << (f - 1)) {
                let mut smalls = vec![0u64];
                smalls.extend((1..f).filter(|&v| mask & (1 << (v - 1)) != 0));
                if let Ok(s) = NumericalSemigroup::from_small_elements(f, &smalls) {
                    dumb.push(s);
                }
            }
            dumb.sort();
            assert_eq!(all_semigroups(f).unwrap(), dumb, "F = {f}");
        }
    }

    #[test]
    fn perfect_filter_matches_the_worked_tree() {
        let perfect: Vec<NumericalSemigroup> = all_semigroups(7)
            .unwrap()
            .into_iter()
            .filter(def_is_perfect)
            .collect();
        assert_eq!(perfect.len(), 4);
        let d = NumericalSemigroup::delta(7).unwrap();
        assert!(perfect.contains(&d));
        assert!(perfect.contains(&d.adjoin(4).unwrap()));
        assert!(perfect.contains(&d.adjoin(5).unwrap()));
    }

    #[test]
    fn maximal_perfect_at_11_matches_the_three_known_members() {
        let perfect: Vec<NumericalSemigroup> = all_semigroups(11)
            .unwrap()
            .into_iter()
            .filter(def_is_perfect)
            .collect();
        let mut max = covariety::inclusion_maximal(&perfect);
        max.sort();
        let mut want = vec![
            NumericalSemigroup::from_small_elements(11, &[0, 6, 7, 8, 9]).unwrap(),
            NumericalSemigroup::from_small_elements(11, &[0, 4, 8, 9]).unwrap(),
            NumericalSemigroup::from_small_elements(11, &[0, 3, 6, 9]).unwrap(),
        ];
        want.sort();
        assert_eq!(max, want);
    }

    #[test]
    fn crosscheck_small_values_is_clean() {
        for f in [2, 3, 7] {
            let report = crosscheck(f).unwrap();
            assert!(report.mismatches.is_empty(), "{:#?}", report.mismatches);
        }
    }

    #[test]
    fn crosscheck_f11_confirms_beta() {
        let report = crosscheck(11).unwrap();
        assert!(report.mismatches.is_empty(), "{:#?}", report.mismatches);
        assert_eq!(report.beta, 7);
    }

    #[test]
    fn report_serializes() {
        let report = crosscheck(3).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: OracleReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
