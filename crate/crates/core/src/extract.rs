//! Extraction of subsets that are almost uniformly distributed modulo every
//! power of a fixed prime.
//!
//! The points are arranged in a residue tree: the children of a node at
//! depth `k` are its classes modulo `p^(k+1)`. A quota is pushed down the
//! tree by splitting it almost equally among all `norm(p)` children, empty
//! ones included. Almost-equal quotas at one depth split almost equally
//! stay almost equal at the next, whichever children receive the larger
//! share, so the chosen subset is balanced at every depth.

use num_traits::ToPrimitive;

use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::primes::GaussPrime;
use crate::residue::Modulus;

struct Node {
    /// Indices into the sorted point list; the first is the smallest point.
    points: Vec<usize>,
    children: Vec<Node>,
    /// Largest quota this subtree can satisfy.
    cap: usize,
}

struct Tree<'a> {
    points: &'a [GaussInt],
    prime: &'a GaussPrime,
    branching: u64,
    moduli: Vec<Modulus>,
}

impl Tree<'_> {
    fn modulus(&mut self, level: usize) -> &Modulus {
        while self.moduli.len() < level {
            let k = self.moduli.len() as u32 + 1;
            self.moduli.push(Modulus::new(&self.prime.value().pow(k)).expect("nonzero"));
        }
        &self.moduli[level - 1]
    }

    fn build(&mut self, points: Vec<usize>, depth: usize) -> Node {
        if points.len() <= 1 {
            let cap = points.len();
            return Node { points, children: Vec::new(), cap };
        }
        let modulus = self.modulus(depth + 1).clone();
        let mut classes: Vec<(num_bigint::BigInt, Vec<usize>)> = Vec::new();
        for &i in &points {
            let idx = modulus.index(&self.points[i]);
            match classes.iter_mut().find(|(c, _)| *c == idx) {
                Some((_, members)) => members.push(i),
                None => classes.push((idx, vec![i])),
            }
        }
        // classes inherit the point order, so each class's first index is its minimum
        classes.sort_by_key(|(_, members)| members[0]);
        let children: Vec<Node> = classes.into_iter().map(|(_, members)| self.build(members, depth + 1)).collect();
        let cap = capacity(&children, self.branching);
        Node { points, children, cap }
    }
}

/// Max `Q` such that `Q` splits almost equally over `branching` children
/// within their capacities: every child needs `⌊Q/N⌋`, and `Q mod N` of
/// them one more.
fn capacity(children: &[Node], branching: u64) -> usize {
    let min_cap =
        if (children.len() as u64) < branching { 0 } else { children.iter().map(|c| c.cap).min().unwrap_or(0) };
    let above = children.iter().filter(|c| c.cap > min_cap).count();
    (min_cap as u64 * branching) as usize + above
}

fn allocate(node: &Node, quota: usize, branching: u64, out: &mut Vec<usize>) {
    debug_assert!(quota <= node.cap);
    if quota == 0 {
        return;
    }
    if node.children.is_empty() {
        out.extend(node.points.iter().take(quota).copied());
        return;
    }
    let base = (quota as u64 / branching) as usize;
    let mut extra = (quota as u64 % branching) as usize;
    for child in &node.children {
        let share = if extra > 0 && child.cap > base {
            extra -= 1;
            base + 1
        } else {
            base
        };
        allocate(child, share, branching, out);
    }
    debug_assert_eq!(extra, 0);
}

/// A subset of `size` points almost uniformly distributed modulo `p^k` for
/// every `k >= 1`, or `None` when no such subset exists.
///
/// Among the admissible allocations, classes with smaller points receive
/// the larger shares first.
pub fn extract_balanced_subset(set: &PointSet, size: usize, p: &GaussPrime) -> Option<PointSet> {
    if size > set.len() {
        return None;
    }
    let branching = p.norm().to_u64().expect("prime norms fit in u64");
    let mut tree = Tree { points: set.points(), prime: p, branching, moduli: Vec::new() };
    let root = tree.build((0..set.len()).collect(), 0);
    if size > root.cap {
        return None;
    }
    let mut chosen = Vec::with_capacity(size);
    allocate(&root, size, branching, &mut chosen);
    Some(PointSet::from_iter_dedup(chosen.into_iter().map(|i| set.points()[i].clone())))
}

/// Largest size for which [`extract_balanced_subset`] succeeds.
pub fn balanced_capacity(set: &PointSet, p: &GaussPrime) -> usize {
    let branching = p.norm().to_u64().expect("prime norms fit in u64");
    let mut tree = Tree { points: set.points(), prime: p, branching, moduli: Vec::new() };
    tree.build((0..set.len()).collect(), 0).cap
}
