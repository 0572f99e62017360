//! The covariety tree at fixed Frobenius number and its enumerations.
//!
//! Every family handled here (perfect, Arf, saturated and the two perfect
//! intersections) contains `delta(F)` as its minimum, is closed under
//! intersection, and removing the multiplicity of a non-minimal member stays
//! inside. Its members therefore form a tree rooted at `delta(F)` with the
//! parent edge `S -> S \ {m(S)}`, and the children of `S` are the unions
//! `S ∪ {x}` over special gaps `x < m(S)` that land back in the family. For
//! the perfect family the landing test has a closed form: `x` must avoid
//! `2`, `m(S)-2` and `F`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arf_sat::{is_arf, is_saturated};
use crate::perfect::is_perfect;
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// Frontier size beyond which a level is expanded in parallel.
const PARALLEL_THRESHOLD: usize = 64;

/// The enumerable families at a fixed Frobenius number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Perfect,
    Arf,
    Saturated,
    /// Perfect and Arf.
    Parf,
    /// Perfect and saturated.
    Psat,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Perfect,
        Family::Arf,
        Family::Saturated,
        Family::Parf,
        Family::Psat,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::Perfect => "perfect",
            Family::Arf => "arf",
            Family::Saturated => "saturated",
            Family::Parf => "parf",
            Family::Psat => "psat",
        }
    }

    /// Membership of `s` in the family at Frobenius number `f`.
    pub fn contains(self, s: &NumericalSemigroup, f: u64) -> bool {
        s.frobenius() == f
            && match self {
                Family::Perfect => is_perfect(s),
                Family::Arf => is_arf(s),
                Family::Saturated => is_saturated(s),
                Family::Parf => is_perfect(s) && is_arf(s),
                Family::Psat => is_perfect(s) && is_saturated(s),
            }
    }

    fn needs_perfect(self) -> bool {
        matches!(self, Family::Perfect | Family::Parf | Family::Psat)
    }

    /// 0 = no closure condition, 1 = Arf, 2 = saturated (saturated implies Arf).
    fn chain_level(self) -> u8 {
        match self {
            Family::Perfect => 0,
            Family::Arf | Family::Parf => 1,
            Family::Saturated | Family::Psat => 2,
        }
    }

    /// Whether every member of `self` belongs to `ambient`, at any fixed `F`.
    pub fn is_sub_family_of(self, ambient: Family) -> bool {
        (!ambient.needs_perfect() || self.needs_perfect())
            && self.chain_level() >= ambient.chain_level()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perfect" => Ok(Family::Perfect),
            "arf" => Ok(Family::Arf),
            "sat" | "saturated" => Ok(Family::Saturated),
            "parf" => Ok(Family::Parf),
            "psat" => Ok(Family::Psat),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// A family together with the Frobenius number, selecting one enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    frobenius: u64,
    family: Family,
}

impl FamilySpec {
    pub fn new(frobenius: u64, family: Family) -> Result<Self> {
        if frobenius < 2 {
            return Err(Error::FrobeniusTooSmall { got: frobenius, min: 2 });
        }
        Ok(FamilySpec { frobenius, family })
    }

    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }

    pub fn family(&self) -> Family {
        self.family
    }
}

/// One enumerated semigroup with its position in the tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    /// Index of the parent in the tree's node list; `None` for the root.
    pub parent: Option<usize>,
    /// The element adjoined to the parent to reach this node.
    pub adjoined: Option<u64>,
    pub depth: u32,
    pub genus: u64,
}

/// The rooted tree of a family, nodes stored level by level.
#[derive(Clone, Debug)]
pub struct CovarietyTree {
    spec: FamilySpec,
    nodes: Vec<TreeNode>,
}

impl CovarietyTree {
    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn semigroups(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.nodes.iter().map(|n| &n.semigroup)
    }

    /// Node references sorted by (genus, small elements), the export order.
    pub fn sorted_nodes(&self) -> Vec<&TreeNode> {
        let mut v: Vec<&TreeNode> = self.nodes.iter().collect();
        v.sort_by(|a, b| {
            a.genus
                .cmp(&b.genus)
                .then_with(|| a.semigroup.cmp(&b.semigroup))
        });
        v
    }
}

/// The admitted child labels of `s` within a family: special gaps below the
/// multiplicity whose adjunction stays in the family.
fn child_labels(s: &NumericalSemigroup, spec: &FamilySpec) -> Vec<(u64, NumericalSemigroup)> {
    let f = spec.frobenius;
    let m = s.multiplicity();
    let mut out = Vec::new();
    for x in s.special_gaps() {
        if x >= m {
            continue;
        }
        if spec.family == Family::Perfect {
            // Closed form: adjoining x breaks perfection exactly when x is 2
            // or m-2 (an isolated gap appears next to it) or F (the Frobenius
            // number changes).
            if x == 2 || x + 2 == m || x == f {
                continue;
            }
            let child = s
                .with_element(x)
                .expect("adjoining a special gap below the multiplicity is safe");
            debug_assert!(Family::Perfect.contains(&child, f));
            out.push((x, child));
        } else {
            let child = s
                .with_element(x)
                .expect("adjoining a special gap below the multiplicity is safe");
            if spec.family.contains(&child, f) {
                out.push((x, child));
            }
        }
    }
    out
}

/// The values admitted by the perfect child rule at `s`, ascending.
pub fn theta(s: &NumericalSemigroup, f: u64) -> Result<Vec<u64>> {
    let spec = FamilySpec::new(f, Family::Perfect)?;
    if s.frobenius() != f {
        return Err(Error::FrobeniusMismatch { expected: f, actual: s.frobenius() });
    }
    if !is_perfect(s) {
        return Err(Error::NotPerfect);
    }
    Ok(child_labels(s, &spec).into_iter().map(|(x, _)| x).collect())
}

/// The children of a perfect member in the tree of the perfect family.
pub fn children_perfect(s: &NumericalSemigroup, f: u64) -> Result<Vec<NumericalSemigroup>> {
    let spec = FamilySpec::new(f, Family::Perfect)?;
    if s.frobenius() != f {
        return Err(Error::FrobeniusMismatch { expected: f, actual: s.frobenius() });
    }
    if !is_perfect(s) {
        return Err(Error::NotPerfect);
    }
    Ok(child_labels(s, &spec).into_iter().map(|(_, c)| c).collect())
}

/// The children of a family member, labelled by the adjoined element. The
/// caller is responsible for `s` belonging to the family.
pub fn children_in_family(
    s: &NumericalSemigroup,
    spec: &FamilySpec,
) -> Vec<(u64, NumericalSemigroup)> {
    child_labels(s, spec)
}

/// Enumerates the whole family by breadth-first frontier expansion from
/// `delta(F)`. Every member appears exactly once; levels are sorted, so the
/// output is deterministic regardless of thread count.
pub fn enumerate(spec: &FamilySpec) -> CovarietyTree {
    let f = spec.frobenius;
    let root = NumericalSemigroup::delta(f).expect("spec validated F >= 2");
    let mut nodes = vec![TreeNode {
        genus: root.genus(),
        semigroup: root,
        parent: None,
        adjoined: None,
        depth: 0,
    }];
    let mut frontier: Vec<usize> = vec![0];
    let mut depth = 0u32;

    while !frontier.is_empty() {
        depth += 1;
        let expand = |&i: &usize| child_labels(&nodes[i].semigroup, spec);
        let batches: Vec<Vec<(u64, NumericalSemigroup)>> = if frontier.len() >= PARALLEL_THRESHOLD
        {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };

        let mut level: Vec<TreeNode> = Vec::new();
        for (&parent, kids) in frontier.iter().zip(batches) {
            for (x, child) in kids {
                level.push(TreeNode {
                    genus: child.genus(),
                    semigroup: child,
                    parent: Some(parent),
                    adjoined: Some(x),
                    depth,
                });
            }
        }
        level.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
        // Each child has a unique parent, so a level never repeats a node.
        debug_assert!(level.windows(2).all(|w| w[0].semigroup != w[1].semigroup));

        frontier = (nodes.len()..nodes.len() + level.len()).collect();
        nodes.extend(level);
    }
    CovarietyTree { spec: *spec, nodes }
}

/// The members of the perfect family at `f` with genus exactly `g`: empty
/// outside `[beta(f), f]`, otherwise the tree level at depth `f - g`.
pub fn genus_slice(f: u64, g: u64) -> Result<Vec<NumericalSemigroup>> {
    let spec = FamilySpec::new(f, Family::Perfect)?;
    if g > f {
        return Ok(Vec::new());
    }
    if g < beta(f)? {
        return Ok(Vec::new());
    }
    let mut level = vec![NumericalSemigroup::delta(f).expect("validated")];
    let mut i = f;
    while i > g {
        level = level
            .iter()
            .flat_map(|s| child_labels(s, &spec).into_iter().map(|(_, c)| c))
            .collect();
        i -= 1;
    }
    level.sort();
    Ok(level)
}

/// The inclusion-maximal members of a finite set of semigroups.
pub fn inclusion_maximal(sets: &[NumericalSemigroup]) -> Vec<NumericalSemigroup> {
    sets.iter()
        .filter(|s| {
            !sets
                .iter()
                .any(|t| t != *s && s.is_subset_of(t))
        })
        .cloned()
        .collect()
}

/// The maximal elements of the perfect family at `f`, sorted by
/// (genus, small elements).
///
/// A member is maximal exactly when every special gap lies in `{F-1, F}`, so
/// that no unitary extension stays clear of those two values. For `F >= 3`
/// both of `F-1` and `F` are special gaps of every perfect member, so the
/// criterion reads `SG(S) = {F-1, F}` there; at `F = 2` the minimum is the
/// single member and `F-1 = 1` is never special.
pub fn maximal_elements(f: u64) -> Result<Vec<NumericalSemigroup>> {
    let spec = FamilySpec::new(f, Family::Perfect)?;
    let tree = enumerate(&spec);
    let mut out: Vec<NumericalSemigroup> = tree
        .semigroups()
        .filter(|s| s.special_gaps().iter().all(|&x| x == f || x + 1 == f))
        .cloned()
        .collect();
    out.sort_by(|a, b| a.genus().cmp(&b.genus()).then_with(|| a.cmp(b)));
    debug_assert_eq!(
        {
            let mut v = out.clone();
            v.sort();
            v
        },
        {
            let all: Vec<NumericalSemigroup> = tree.semigroups().cloned().collect();
            let mut v = inclusion_maximal(&all);
            v.sort();
            v
        }
    );
    Ok(out)
}

/// The least genus among the maximal elements of the perfect family at `f`.
pub fn beta(f: u64) -> Result<u64> {
    Ok(maximal_elements(f)?
        .iter()
        .map(|s| s.genus())
        .min()
        .expect("the maximal set of a nonempty finite family is nonempty"))
}

/// The associated chain of `s`: repeatedly remove the multiplicity until the
/// minimum `delta(F(s))` is reached. The last entry is that minimum and the
/// chain has `F - g(s)` edges.
pub fn chain(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let f = s.frobenius();
    let mut out = vec![s.clone()];
    while out.last().unwrap().multiplicity() <= f {
        let next = out.last().unwrap().remove_multiplicity();
        out.push(next);
    }
    out
}

/// Output formats for [`export_tree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// One canonical semigroup per line with depth and genus.
    Jsonl,
    /// A DOT digraph; edges point from child to parent and are labelled with
    /// the adjoined element.
    Dot,
    /// The node count followed by a newline.
    Count,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(ExportFormat::Jsonl),
            "dot" => Ok(ExportFormat::Dot),
            "count" => Ok(ExportFormat::Count),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct NodeRecord {
    frobenius: u64,
    genus: u64,
    depth: u32,
    small_elements: Vec<u64>,
    min_generators: Vec<u64>,
}

/// Serializes a tree. Nodes appear sorted by (genus, small elements) in every
/// format, so the output is byte-stable.
pub fn export_tree(tree: &CovarietyTree, format: ExportFormat) -> String {
    match format {
        ExportFormat::Count => format!("{}\n", tree.len()),
        ExportFormat::Jsonl => {
            let mut out = String::new();
            for node in tree.sorted_nodes() {
                let rec = NodeRecord {
                    frobenius: node.semigroup.frobenius(),
                    genus: node.genus,
                    depth: node.depth,
                    small_elements: node.semigroup.small_elements(),
                    min_generators: node.semigroup.min_generators(),
                };
                out.push_str(&serde_json::to_string(&rec).expect("plain data serializes"));
                out.push('\n');
            }
            out
        }
        ExportFormat::Dot => {
            let nodes = tree.nodes();
            let mut order: Vec<usize> = (0..nodes.len()).collect();
            order.sort_by(|&a, &b| {
                nodes[a]
                    .genus
                    .cmp(&nodes[b].genus)
                    .then_with(|| nodes[a].semigroup.cmp(&nodes[b].semigroup))
            });
            let mut rank = vec![0usize; nodes.len()];
            for (r, &orig) in order.iter().enumerate() {
                rank[orig] = r;
            }
            let mut out = String::from("digraph covariety {\n");
            for (r, &orig) in order.iter().enumerate() {
                out.push_str(&format!("  n{r} [label=\"{}\"];\n", nodes[orig].semigroup));
            }
            for &orig in &order {
                if let (Some(p), Some(x)) = (nodes[orig].parent, nodes[orig].adjoined) {
                    out.push_str(&format!(
                        "  n{} -> n{} [label=\"{x}\"];\n",
                        rank[orig], rank[p]
                    ));
                }
            }
            out.push_str("}\n");
            out
        }
    }
}
