//! Isolated gaps, the perfect predicate, the perfect closure operator and the
//! sR generator set.
//!
//! A gap `h` is isolated when both `h-1` and `h+1` are members; a semigroup
//! is perfect when it has no isolated gap, equivalently when `s` and `s+2`
//! being members always forces `s+1` in.

use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// The isolated gaps of a semigroup: `i(S)` many, the largest being `h(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedGapReport {
    pub isolated_gaps: Vec<u64>,
    pub count: usize,
    pub max_gap: Option<u64>,
}

pub fn isolated_gaps(s: &NumericalSemigroup) -> IsolatedGapReport {
    let isolated_gaps: Vec<u64> = (1..=s.frobenius())
        .filter(|&h| !s.contains(h) && s.contains(h - 1) && s.contains(h + 1))
        .collect();
    IsolatedGapReport {
        count: isolated_gaps.len(),
        max_gap: isolated_gaps.last().copied(),
        isolated_gaps,
    }
}

/// Whether `S` is perfect. Uses the neighbour condition: no `s` with both
/// `s` and `s+2` in but `s+1` out. Agrees with `isolated_gaps` being empty.
pub fn is_perfect(s: &NumericalSemigroup) -> bool {
    (0..s.frobenius()).all(|v| !(s.contains(v) && s.contains(v + 2)) || s.contains(v + 1))
}

/// Result of [`perfect_closure`]: adding isolated gaps can collapse to all of
/// the naturals, which is not representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerfectClosure {
    Semigroup(NumericalSemigroup),
    /// The closure is the whole of N; family-level callers refuse this.
    Naturals,
}

impl PerfectClosure {
    pub fn semigroup(self) -> Option<NumericalSemigroup> {
        match self {
            PerfectClosure::Semigroup(s) => Some(s),
            PerfectClosure::Naturals => None,
        }
    }
}

/// The least perfect semigroup containing `S`, obtained by repeatedly
/// adjoining the largest isolated gap. Each step adds exactly one element,
/// and the number of steps equals the initial isolated gap count.
pub fn perfect_closure(s: &NumericalSemigroup) -> PerfectClosure {
    let mut cur = s.clone();
    loop {
        let Some(h) = isolated_gaps(&cur).max_gap else {
            return PerfectClosure::Semigroup(cur);
        };
        match cur.with_element(h) {
            Ok(next) => cur = next,
            Err(Error::Naturals) => return PerfectClosure::Naturals,
            Err(e) => unreachable!("adjoining an isolated gap cannot fail otherwise: {e}"),
        }
    }
}

/// The set sR(S) for a perfect semigroup: minimal generators below `F` with a
/// missing neighbour, plus those whose both neighbours are in provided the
/// right neighbour is itself a minimal generator below `F`.
///
/// Its closure inside the perfect family regenerates `S`.
pub fn s_r_set(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    if !is_perfect(s) {
        return Err(Error::NotPerfect);
    }
    let f = s.frobenius();
    let msg = s.min_generators();
    let out: Vec<u64> = msg
        .iter()
        .copied()
        .filter(|&x| {
            let surrounded = s.contains(x - 1) && s.contains(x + 1);
            if x < f && !surrounded {
                return true;
            }
            surrounded && msg.contains(&(x + 1)) && x + 1 < f
        })
        .collect();
    Ok(out)
}
