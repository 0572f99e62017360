//! Generating sets inside the perfect family at fixed `F`: the closure
//! operator, minimal systems and the rank.
//!
//! A set `X` of positive integers is admissible when it avoids `delta(F)`
//! (so every member lies in `[1, F]`) and some perfect member with Frobenius
//! number `F` contains it; the latter holds exactly when the monoid generated
//! by `X` avoids both `F-1` and `F`. The least perfect member containing `X`
//! is the perfect closure of `<X> ∪ {F+1, ->}`.

use crate::perfect::{is_perfect, perfect_closure, s_r_set, PerfectClosure};
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// Membership of `[0, f]` in the monoid generated by `xs`.
fn monoid_window(f: u64, xs: &[u64]) -> Vec<bool> {
    let mut reach = vec![false; f as usize + 1];
    reach[0] = true;
    for v in 1..=f as usize {
        reach[v] = xs
            .iter()
            .any(|&x| x > 0 && v as u64 >= x && reach[v - x as usize]);
    }
    reach
}

/// Whether `xs` is contained in some perfect member with Frobenius number
/// `f` while avoiding `delta(f)`.
pub fn is_pf_set(f: u64, xs: &[u64]) -> bool {
    if f < 2 {
        return false;
    }
    if xs.iter().any(|&x| x == 0 || x > f) {
        return false;
    }
    let reach = monoid_window(f, xs);
    !reach[f as usize - 1] && !reach[f as usize]
}

/// The least perfect member with Frobenius number `f` containing `xs`.
pub fn closure(f: u64, xs: &[u64]) -> Result<NumericalSemigroup> {
    if f < 2 {
        return Err(Error::FrobeniusTooSmall { got: f, min: 2 });
    }
    if !is_pf_set(f, xs) {
        return Err(Error::NotPfSet { frobenius: f });
    }
    let reach = monoid_window(f, xs);
    let smalls: Vec<u64> = (0..f).filter(|&v| reach[v as usize]).collect();
    let base = NumericalSemigroup::from_small_elements(f, &smalls)
        .expect("a monoid window with the tail glued on is additively closed");
    match perfect_closure(&base) {
        PerfectClosure::Semigroup(s) => {
            // F-1 and F are never isolated here, so the Frobenius number survives.
            debug_assert_eq!(s.frobenius(), f);
            Ok(s)
        }
        PerfectClosure::Naturals => {
            unreachable!("the closure keeps F as a gap for every admissible set")
        }
    }
}

/// Whether `xs` generates its closure minimally: removing any element
/// strictly shrinks the closure. Sets that are not admissible are not
/// minimal systems of anything.
pub fn is_minimal_system(f: u64, xs: &[u64]) -> bool {
    if !is_pf_set(f, xs) {
        return false;
    }
    let mut xs = xs.to_vec();
    xs.sort_unstable();
    xs.dedup();
    xs.iter().all(|&x| {
        let rest: Vec<u64> = xs.iter().copied().filter(|&y| y != x).collect();
        let sub = closure(f, &rest).expect("subsets of admissible sets are admissible");
        !sub.contains(x)
    })
}

/// The elements every generating set of `s` must contain: the multiplicity,
/// plus each minimal generator below `F` with a missing neighbour (removing
/// such a generator keeps the semigroup perfect, so no smaller set reaches it).
pub fn mandatory_elements(f: u64, s: &NumericalSemigroup) -> Result<Vec<u64>> {
    validate_perfect_member(f, s)?;
    let delta = NumericalSemigroup::delta(f).expect("validated");
    if *s == delta {
        return Ok(Vec::new());
    }
    let mut out = vec![s.multiplicity()];
    for a in s.min_generators() {
        if a < f && !(s.contains(a - 1) && s.contains(a + 1)) {
            out.push(a);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn validate_perfect_member(f: u64, s: &NumericalSemigroup) -> Result<()> {
    if f < 2 {
        return Err(Error::FrobeniusTooSmall { got: f, min: 2 });
    }
    if s.frobenius() != f {
        return Err(Error::FrobeniusMismatch { expected: f, actual: s.frobenius() });
    }
    if !is_perfect(s) {
        return Err(Error::NotPerfect);
    }
    Ok(())
}

/// Runs `visit` on every `k`-combination of `pool` in lexicographic order;
/// stops early when `visit` returns `true`.
fn for_each_combination(
    pool: &[u64],
    k: usize,
    cur: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]) -> bool,
) -> bool {
    if cur.len() == k {
        return visit(cur);
    }
    let needed = k - cur.len();
    if needed > pool.len() {
        return false;
    }
    for i in 0..=pool.len() - needed {
        cur.push(pool[i]);
        if for_each_combination(&pool[i + 1..], k, cur, visit) {
            cur.pop();
            return true;
        }
        cur.pop();
    }
    false
}

/// The rank of `s` in the perfect family at `f`: the least cardinality of a
/// generating set.
pub fn rank(f: u64, s: &NumericalSemigroup) -> Result<usize> {
    rank_with_witness(f, s).map(|(r, _)| r)
}

/// The rank together with the lexicographically first witness of that size.
///
/// Searches supersets of the mandatory elements by increasing cardinality;
/// the sR set is a generating set containing them, so the search is bounded
/// by its size.
pub fn rank_with_witness(f: u64, s: &NumericalSemigroup) -> Result<(usize, Vec<u64>)> {
    let mandatory = mandatory_elements(f, s)?;
    if *s == NumericalSemigroup::delta(f).expect("validated") {
        return Ok((0, Vec::new()));
    }
    let smalls = s.small_elements();
    let optional: Vec<u64> = smalls[1..]
        .iter()
        .copied()
        .filter(|x| !mandatory.contains(x))
        .collect();
    let bound = s_r_set(s).expect("validated perfect").len();

    for k in mandatory.len()..=bound {
        let mut cur = Vec::new();
        let mut hit: Option<Vec<u64>> = None;
        for_each_combination(&optional, k - mandatory.len(), &mut cur, &mut |extra| {
            let mut xs = mandatory.clone();
            xs.extend_from_slice(extra);
            xs.sort_unstable();
            let c = closure(f, &xs).expect("subsets of a perfect member are admissible");
            if c == *s {
                hit = Some(xs);
                true
            } else {
                false
            }
        });
        if let Some(xs) = hit {
            return Ok((k, xs));
        }
    }
    unreachable!("the sR set itself generates s, so the search cannot fall through")
}

/// Inclusion-minimal generating sets of `s`, in (cardinality, lexicographic)
/// order, at most `limit` of them when given.
pub fn minimal_systems(
    f: u64,
    s: &NumericalSemigroup,
    limit: Option<usize>,
) -> Result<Vec<Vec<u64>>> {
    let mandatory = mandatory_elements(f, s)?;
    let smalls = s.small_elements();
    let optional: Vec<u64> = smalls[1..]
        .iter()
        .copied()
        .filter(|x| !mandatory.contains(x))
        .collect();

    let mut found: Vec<Vec<u64>> = Vec::new();
    let cap = limit.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(found);
    }

    'outer: for k in mandatory.len()..=mandatory.len() + optional.len() {
        let mut cur = Vec::new();
        let mut done = false;
        for_each_combination(&optional, k - mandatory.len(), &mut cur, &mut |extra| {
            let mut xs = mandatory.clone();
            xs.extend_from_slice(extra);
            xs.sort_unstable();
            // A proper superset of an already-found system closes to s but
            // is not minimal, by monotonicity of the closure.
            if found.iter().any(|g| g.iter().all(|x| xs.contains(x))) {
                return false;
            }
            let c = closure(f, &xs).expect("subsets of a perfect member are admissible");
            if c == *s {
                debug_assert!(is_minimal_system(f, &xs));
                found.push(xs);
            }
            found.len() >= cap
        });
        if found.len() >= cap {
            done = true;
        }
        if done {
            break 'outer;
        }
    }
    Ok(found)
}

/// An admissible set together with everything computed for it.
#[derive(Clone, Debug)]
pub struct GeneratorQuery {
    pub frobenius: u64,
    pub x_set: Vec<u64>,
    pub closure: Option<NumericalSemigroup>,
    pub is_minimal: Option<bool>,
    /// Rank of the closure; never exceeds the size of `x_set`.
    pub rank_bound: Option<usize>,
}

impl GeneratorQuery {
    /// Validates `xs` and fills in closure, minimality and rank.
    pub fn evaluate(f: u64, xs: &[u64]) -> Result<Self> {
        let mut x_set = xs.to_vec();
        x_set.sort_unstable();
        x_set.dedup();
        if !is_pf_set(f, &x_set) {
            return Err(Error::NotPfSet { frobenius: f });
        }
        let c = closure(f, &x_set)?;
        let minimal = is_minimal_system(f, &x_set);
        let rank_bound = rank(f, &c)?;
        debug_assert!(rank_bound <= x_set.len());
        Ok(GeneratorQuery {
            frobenius: f,
            x_set,
            closure: Some(c),
            is_minimal: Some(minimal),
            rank_bound: Some(rank_bound),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(f: u64, smalls: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(f, smalls).unwrap()
    }

    #[test]
    fn pf_set_examples() {
        assert!(is_pf_set(19, &[10, 12, 14, 16]));
        assert!(!is_pf_set(7, &[7]));
        assert!(is_pf_set(26, &[8, 11]));
        assert!(is_pf_set(19, &[]));
        assert!(!is_pf_set(19, &[10, 12, 14, 16, 20]));
        assert!(!is_pf_set(19, &[0, 10]));
        // 9 generates 18 = F - 1.
        assert!(!is_pf_set(19, &[9]));
    }

    #[test]
    fn closure_example30_values() {
        assert_eq!(
            closure(19, &[10, 12, 14]).unwrap(),
            sg(19, &[0, 10, 11, 12, 13, 14])
        );
        assert_eq!(
            closure(19, &[10, 12, 16]).unwrap(),
            sg(19, &[0, 10, 11, 12, 16])
        );
        assert_eq!(
            closure(19, &[10, 14, 16]).unwrap(),
            sg(19, &[0, 10, 14, 15, 16])
        );
        assert_eq!(
            closure(19, &[12, 14, 16]).unwrap(),
            sg(19, &[0, 12, 13, 14, 15, 16])
        );
    }

    #[test]
    fn closure_of_empty_set_is_the_minimum() {
        for f in 2..=12 {
            assert_eq!(
                closure(f, &[]).unwrap(),
                NumericalSemigroup::delta(f).unwrap()
            );
        }
    }

    #[test]
    fn closure_rejects_inadmissible_sets() {
        assert_eq!(closure(7, &[7]), Err(Error::NotPfSet { frobenius: 7 }));
        assert_eq!(closure(19, &[9]), Err(Error::NotPfSet { frobenius: 19 }));
        assert!(matches!(closure(1, &[]), Err(Error::FrobeniusTooSmall { .. })));
    }

    #[test]
    fn minimal_system_examples() {
        assert!(is_minimal_system(19, &[10, 12, 14, 16]));
        assert!(is_minimal_system(19, &[10, 11, 13, 15, 16]));
        assert!(!is_minimal_system(19, &[10, 12, 14, 16, 20]));
        // 13 lies in the closure of the other four.
        assert!(!is_minimal_system(19, &[10, 12, 13, 14, 16]));
    }

    #[test]
    fn mandatory_examples() {
        // <m> with the tail: only the multiplicity is mandatory.
        let s = closure(7, &[4]).unwrap();
        assert_eq!(mandatory_elements(7, &s).unwrap(), vec![4]);

        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        assert_eq!(mandatory_elements(26, &e37).unwrap(), vec![8, 11]);

        let d = NumericalSemigroup::delta(9).unwrap();
        assert_eq!(mandatory_elements(9, &d).unwrap(), Vec::<u64>::new());

        let imperfect = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert!(mandatory_elements(1, &imperfect).is_err());
    }

    #[test]
    fn rank_examples() {
        for f in 2..=12 {
            let d = NumericalSemigroup::delta(f).unwrap();
            assert_eq!(rank(f, &d).unwrap(), 0);
        }

        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        assert_eq!(rank_with_witness(26, &e37).unwrap(), (2, vec![8, 11]));

        // <4> ∪ {8,->} has rank 1: 4 divides neither 7 nor 6.
        let s = closure(7, &[4]).unwrap();
        assert_eq!(rank_with_witness(7, &s).unwrap(), (1, vec![4]));
    }

    #[test]
    fn rank_two_witness_need_not_be_the_ratio() {
        // The closure of {5,7} at F = 9 picks up 6 as an isolated gap, so its
        // ratio is 6 even though no pair containing 6 generates it.
        let s = closure(9, &[5, 7]).unwrap();
        assert_eq!(s, sg(9, &[0, 5, 6, 7]));
        assert_eq!((s.multiplicity(), s.ratio()), (5, 6));
        assert_ne!(closure(9, &[5, 6]).unwrap(), s);
        assert_eq!(rank_with_witness(9, &s).unwrap(), (2, vec![5, 7]));
    }

    #[test]
    fn minimal_systems_examples() {
        let s = NumericalSemigroup::from_generators(&(10..=16).collect::<Vec<_>>()).unwrap();
        let systems = minimal_systems(19, &s, None).unwrap();
        assert!(systems.contains(&vec![10, 12, 14, 16]));
        assert!(systems.contains(&vec![10, 11, 13, 15, 16]));
        for xs in &systems {
            assert!(is_minimal_system(19, xs));
            assert_eq!(closure(19, xs).unwrap(), s);
        }

        let d = NumericalSemigroup::delta(9).unwrap();
        assert_eq!(minimal_systems(9, &d, None).unwrap(), vec![Vec::<u64>::new()]);

        let e37 = sg(26, &[0, 8, 11, 16, 19, 22, 23, 24]);
        let systems = minimal_systems(26, &e37, Some(3)).unwrap();
        assert!(systems.contains(&vec![8, 11]));
    }

    #[test]
    fn minimal_systems_respect_the_limit() {
        let s = NumericalSemigroup::from_generators(&(10..=16).collect::<Vec<_>>()).unwrap();
        let one = minimal_systems(19, &s, Some(1)).unwrap();
        assert_eq!(one.len(), 1);
        let all = minimal_systems(19, &s, None).unwrap();
        assert_eq!(one[0], all[0]);
        assert_eq!(minimal_systems(19, &s, Some(0)).unwrap().len(), 0);
    }

    #[test]
    fn query_bundle() {
        let q = GeneratorQuery::evaluate(19, &[10, 12, 14, 16]).unwrap();
        assert_eq!(q.is_minimal, Some(true));
        assert_eq!(q.rank_bound, Some(4));
        let c = q.closure.unwrap();
        assert_eq!(c, NumericalSemigroup::from_generators(&(10..=16).collect::<Vec<_>>()).unwrap());
        assert!(GeneratorQuery::evaluate(7, &[7]).is_err());
    }
}
