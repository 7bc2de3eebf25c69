//! Small shared helpers: a deterministic union-find used by the cellular
//! closure, the triangulation and the numeric realization.

/// Union-find over `0..len` with path compression. The canonical
/// representative of a class is its least member, so results do not depend
/// on union order.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        // keep the smaller index as root so representatives are canonical
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Map every element to a dense class index, classes numbered in order
    /// of their least member. Returns (class index per element, class count).
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let len = self.len();
        let mut class_of_root = vec![usize::MAX; len];
        let mut class = vec![0usize; len];
        let mut next = 0usize;
        for x in 0..len {
            let r = self.find(x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = next;
                next += 1;
            }
            class[x] = class_of_root[r];
        }
        (class, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_numbered_by_least_member() {
        let mut uf = UnionFind::new(6);
        uf.union(4, 1);
        uf.union(2, 5);
        let (class, n) = uf.classes();
        assert_eq!(n, 4);
        assert_eq!(class[0], 0);
        assert_eq!(class[1], 1);
        assert_eq!(class[4], 1);
        assert_eq!(class[2], 2);
        assert_eq!(class[5], 2);
        assert_eq!(class[3], 3);
    }
}
