use crate::graph::Vertex;
use std::collections::HashMap;

/// A partition of a ground set of vertices into labelled classes.
/// Classes are canonicalised by relabelling in order of their smallest
/// member, so equal partitions compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    ground: Vec<Vertex>,
    /// Class id per ground position (parallel to `ground`).
    class_ids: Vec<usize>,
    class_count: usize,
}

impl Partition {
    /// Groups `ground` by equality of the associated keys.
    pub fn from_keys<K: std::hash::Hash + Eq>(ground: Vec<Vertex>, keys: &[K]) -> Partition {
        assert_eq!(ground.len(), keys.len());
        let mut first_seen: HashMap<&K, usize> = HashMap::new();
        let mut class_ids = Vec::with_capacity(ground.len());
        for key in keys {
            let next = first_seen.len();
            let id = *first_seen.entry(key).or_insert(next);
            class_ids.push(id);
        }
        let class_count = first_seen.len();
        let mut p = Partition { ground, class_ids, class_count };
        p.canonicalise();
        p
    }

    /// Smallest-member order: the class containing the least ground
    /// vertex gets id 0, and so on. Ground is assumed listed ascending
    /// when canonical reports matter; we sort to make sure.
    fn canonicalise(&mut self) {
        let mut order: Vec<usize> = (0..self.ground.len()).collect();
        order.sort_by_key(|&i| self.ground[i]);
        let mut relabel = vec![usize::MAX; self.class_count];
        let mut next = 0;
        for &i in &order {
            let old = self.class_ids[i];
            if relabel[old] == usize::MAX {
                relabel[old] = next;
                next += 1;
            }
        }
        for id in &mut self.class_ids {
            *id = relabel[*id];
        }
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.ground.iter().position(|&u| u == v).map(|i| self.class_ids[i])
    }

    /// Classes as sorted vertex lists, in canonical class order.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.class_count];
        let mut order: Vec<usize> = (0..self.ground.len()).collect();
        order.sort_by_key(|&i| self.ground[i]);
        for i in order {
            out[self.class_ids[i]].push(self.ground[i]);
        }
        out
    }

    /// Checks that `self` refines `other` (same ground set): whenever
    /// two vertices share a class in `self` they share one in `other`.
    /// On failure, returns the first offending pair.
    pub fn refines(&self, other: &Partition) -> Result<(), (Vertex, Vertex)> {
        for class in self.classes() {
            let mut it = class.iter();
            if let Some(&first) = it.next() {
                let target = other.class_of(first);
                for &v in it {
                    if other.class_of(v) != target {
                        return Err((first, v));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_class_order() {
        // Keys: vertices 0 and 2 share a class, 1 alone.
        let p = Partition::from_keys(vec![0, 1, 2], &["x", "y", "x"]);
        assert_eq!(p.class_of(0), Some(0));
        assert_eq!(p.class_of(1), Some(1));
        assert_eq!(p.class_of(2), Some(0));
        assert_eq!(p.classes(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn refinement_detection() {
        let fine = Partition::from_keys(vec![0, 1, 2, 3], &[0, 1, 2, 2]);
        let coarse = Partition::from_keys(vec![0, 1, 2, 3], &[0, 0, 1, 1]);
        assert!(fine.refines(&coarse).is_ok());
        assert_eq!(coarse.refines(&fine), Err((0, 1)));
    }

    #[test]
    fn equality_is_canonical() {
        let a = Partition::from_keys(vec![0, 1, 2], &["p", "q", "p"]);
        let b = Partition::from_keys(vec![0, 1, 2], &[7, 3, 7]);
        assert_eq!(a, b);
    }
}
