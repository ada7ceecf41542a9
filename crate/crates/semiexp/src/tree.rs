//! Finite rooted trees stored by parent pointers, uniformly branching
//! trees with their tuple coordinates, rays and elliptic contractions.

use std::collections::HashMap;

use crate::error::TreeError;

/// A finite rooted tree. Children lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Builds a tree from parent pointers; exactly one vertex has none.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self, TreeError> {
        let n = parent.len();
        let mut roots = (0..n).filter(|&v| parent[v].is_none());
        let root = roots.next().ok_or(TreeError::Malformed { vertex: 0 })?;
        if let Some(extra) = roots.next() {
            return Err(TreeError::Malformed { vertex: extra });
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(TreeError::Malformed { vertex: v });
                }
                children[p].push(v);
            }
        }
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut stack = vec![root];
        let mut seen = 1;
        while let Some(v) = stack.pop() {
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                seen += 1;
                stack.push(c);
            }
        }
        if seen != n {
            let v = depth.iter().position(|&d| d == usize::MAX).unwrap_or(0);
            return Err(TreeError::Malformed { vertex: v });
        }
        Ok(RootedTree {
            root,
            parent,
            depth,
            children,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Depth of the deepest vertex.
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.children[v].is_empty())
            .collect()
    }

    pub fn vertices_at(&self, depth: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.depth[v] == depth).collect()
    }

    /// Every leaf sits at the same depth.
    pub fn check_uniform(&self) -> Result<(), TreeError> {
        let expected = self.height();
        for v in self.leaves() {
            if self.depth[v] != expected {
                return Err(TreeError::NotUniform {
                    vertex: v,
                    depth: self.depth[v],
                    expected,
                });
            }
        }
        Ok(())
    }

    /// The ancestor of `v` at depth `i` (itself when `i` is its depth).
    pub fn ancestor(&self, mut v: usize, i: usize) -> usize {
        while self.depth[v] > i {
            v = self.parent[v].expect("non-root vertex has a parent");
        }
        v
    }

    /// The ray from `v` to the root, listed root first.
    pub fn ray(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }

    /// Endpoint of the meet of two rays: their deepest common ancestor.
    pub fn ray_wedge(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        a
    }

    /// Geodesic distance.
    pub fn distance(&self, a: usize, b: usize) -> usize {
        let w = self.depth[self.ray_wedge(a, b)];
        self.depth[a] + self.depth[b] - 2 * w
    }

    /// A copy with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, TreeError> {
        let mut parent = vec![None; self.len()];
        for v in 0..self.len() {
            parent[perm[v]] = self.parent[v].map(|p| perm[p]);
        }
        Self::from_parents(parent)
    }
}

/// Checks that `map` fixes the root and sends fathers to fathers, reporting
/// the first offending vertex.
pub fn is_elliptic_contraction(
    source: &RootedTree,
    target: &RootedTree,
    map: &[usize],
) -> Result<(), usize> {
    if map.len() != source.len() {
        return Err(map.len().min(source.len()));
    }
    if map[source.root()] != target.root() {
        return Err(source.root());
    }
    for v in 0..source.len() {
        if map[v] >= target.len() {
            return Err(v);
        }
        if let Some(p) = source.parent(v) {
            if target.parent(map[v]) != Some(map[p]) {
                return Err(v);
            }
        }
    }
    debug_assert!((0..source.len()).all(|v| target.depth(map[v]) == source.depth(v)));
    Ok(())
}

pub type Tuple = Vec<u16>;

/// The tree `T(n_l, ..., n_1)` with vertex `v` at depth `i` identified with a
/// tuple `(x_i, ..., x_1)`, stored bottom-up as `[x_1, ..., x_i]`.
#[derive(Debug, Clone)]
pub struct UniformTree {
    tree: RootedTree,
    sizes: Vec<usize>,
    tuples: Vec<Tuple>,
    index: HashMap<Tuple, usize>,
}

/// Builds `T(n_l, ..., n_1)`; `branching` lists `n_l` first, so the root has
/// `n_1` sons.
pub fn build_uniform_tree(branching: &[usize]) -> Result<UniformTree, TreeError> {
    let sizes: Vec<usize> = branching.iter().rev().copied().collect();
    UniformTree::from_sizes(&sizes)
}

impl UniformTree {
    /// `sizes[i]` is `|X_{i+1}|`, bottom-up.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, TreeError> {
        if let Some(level) = sizes.iter().position(|&n| n == 0) {
            return Err(TreeError::ZeroBranching { level: level + 1 });
        }
        let mut tuples: Vec<Tuple> = vec![Vec::new()];
        let mut parent = vec![None];
        let mut layer = vec![0usize];
        for &n in sizes {
            let mut next = Vec::with_capacity(layer.len() * n);
            for &p in &layer {
                for x in 0..n {
                    let mut t = tuples[p].clone();
                    t.push(x as u16);
                    tuples.push(t);
                    parent.push(Some(p));
                    next.push(tuples.len() - 1);
                }
            }
            layer = next;
        }
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(UniformTree {
            tree: RootedTree::from_parents(parent)?,
            sizes: sizes.to_vec(),
            tuples,
            index,
        })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn tuple(&self, v: usize) -> &[u16] {
        &self.tuples[v]
    }

    pub fn vertex(&self, t: &[u16]) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Leaves in tuple order.
    pub fn leaves(&self) -> Vec<usize> {
        self.tree.vertices_at(self.sizes.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_trees() {
        let t = build_uniform_tree(&[3, 2]).unwrap();
        assert_eq!(t.tree().len(), 9);
        assert_eq!(t.tree().children(0).len(), 2);
        assert_eq!(t.leaves().len(), 6);
        let t1 = build_uniform_tree(&[1]).unwrap();
        assert_eq!(t1.tree().len(), 2);
        let t22 = build_uniform_tree(&[2, 2]).unwrap();
        assert_eq!(t22.tree().len(), 7);
        assert_eq!(t22.leaves(), vec![3, 4, 5, 6]);
        assert_eq!(t22.tuple(4), &[0, 1]);
        assert!(build_uniform_tree(&[2, 0]).is_err());
        t22.tree().check_uniform().unwrap();
    }

    #[test]
    fn wedges() {
        let t = build_uniform_tree(&[2, 2]).unwrap();
        let tr = t.tree();
        assert_eq!(tr.ray_wedge(3, 3), 3);
        assert_eq!(tr.ray_wedge(3, 4), 1);
        assert_eq!(tr.ray_wedge(3, 6), 0);
        assert_eq!(tr.distance(3, 6), 4);
        assert_eq!(tr.ray(6), vec![0, 2, 6]);
        for a in 0..7 {
            for b in 0..7 {
                for c in 0..7 {
                    let d = |x, y| tr.depth(tr.ray_wedge(x, y));
                    assert!(d(a, c) >= d(a, b).min(d(b, c)));
                }
            }
        }
    }

    #[test]
    fn contractions() {
        let t = build_uniform_tree(&[2, 2]).unwrap();
        let tr = t.tree();
        let id: Vec<usize> = (0..7).collect();
        assert!(is_elliptic_contraction(tr, tr, &id).is_ok());
        // both depth-1 vertices onto vertex 1, leaves onto its sons
        let collapse = vec![0, 1, 1, 3, 4, 3, 4];
        assert!(is_elliptic_contraction(tr, tr, &collapse).is_ok());
        let bad = vec![0, 1, 2, 1, 4, 5, 6];
        assert_eq!(is_elliptic_contraction(tr, tr, &bad), Err(3));
    }

    #[test]
    fn relabeling_keeps_shape() {
        let t = build_uniform_tree(&[2, 2]).unwrap();
        let perm = vec![0, 2, 1, 6, 5, 4, 3];
        let r = t.tree().relabeled(&perm).unwrap();
        assert_eq!(r.children(2), &[5, 6]);
        assert!(is_elliptic_contraction(t.tree(), &r, &perm).is_ok());
    }
}
