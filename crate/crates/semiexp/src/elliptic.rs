//! Elliptic M-trees, the Chiswell construction and isomorphism testing.

use crate::error::TreeError;
use crate::length::{check_length_axioms, ExtNat, LengthTable};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::rhodes::{LChain, RhodesMonoid};
use crate::tree::{is_elliptic_contraction, RootedTree};

/// A uniform rooted tree with a maximal ray and an action by elliptic
/// contractions, `action[m][v] = v·m`.
#[derive(Debug, Clone)]
pub struct EllipticTree {
    tree: RootedTree,
    leaf: usize,
    action: Vec<Vec<usize>>,
}

impl EllipticTree {
    /// Validates uniformity, ellipticity, the action laws and
    /// transitivity from the ray ending at `leaf`.
    pub fn new(
        tree: RootedTree,
        leaf: usize,
        action: Vec<Vec<usize>>,
        m: &FiniteMonoid,
    ) -> Result<Self, TreeError> {
        let chi = EllipticTree { tree, leaf, action };
        chi.validate(m)?;
        Ok(chi)
    }

    pub fn validate(&self, m: &FiniteMonoid) -> Result<(), TreeError> {
        let t = &self.tree;
        t.check_uniform()?;
        if t.depth(self.leaf) != t.height() {
            return Err(TreeError::NotUniform {
                vertex: self.leaf,
                depth: t.depth(self.leaf),
                expected: t.height(),
            });
        }
        if self.action.len() != m.size() {
            return Err(TreeError::NotHomomorphism { a: 0, b: 0 });
        }
        for (e, map) in self.action.iter().enumerate() {
            is_elliptic_contraction(t, t, map)
                .map_err(|vertex| TreeError::NotElliptic { element: e, vertex })?;
        }
        let id = m.identity();
        if let Some(v) = (0..t.len()).find(|&v| self.action[id][v] != v) {
            return Err(TreeError::NotElliptic { element: id, vertex: v });
        }
        for a in m.elements() {
            for b in m.elements() {
                let ab = &self.action[m.mul(a, b)];
                let (fa, fb) = (&self.action[a], &self.action[b]);
                if (0..t.len()).any(|v| ab[v] != fb[fa[v]]) {
                    return Err(TreeError::NotHomomorphism { a, b });
                }
            }
        }
        let mut reached = vec![false; t.len()];
        for map in &self.action {
            reached[map[self.leaf]] = true;
        }
        if let Some(v) = t.leaves().into_iter().find(|&v| !reached[v]) {
            return Err(TreeError::NotTransitive { vertex: v });
        }
        Ok(())
    }

    /// Extends an action given on the leaves (in `leaves` order) to every
    /// vertex by sending each vertex where its leaf descendants go.
    pub fn from_leaf_action(
        tree: RootedTree,
        leaves: &[usize],
        base_leaf: usize,
        leaf_maps: &[Vec<usize>],
        m: &FiniteMonoid,
    ) -> Result<Self, TreeError> {
        let mut action = Vec::with_capacity(leaf_maps.len());
        for (e, lm) in leaf_maps.iter().enumerate() {
            let mut map = vec![usize::MAX; tree.len()];
            for (i, &u) in leaves.iter().enumerate() {
                let image = leaves[lm[i]];
                for d in 0..=tree.depth(u) {
                    let (v, w) = (tree.ancestor(u, d), tree.ancestor(image, d));
                    if map[v] == usize::MAX {
                        map[v] = w;
                    } else if map[v] != w {
                        return Err(TreeError::LeafActionIncoherent { element: e });
                    }
                }
            }
            action.push(map);
        }
        Self::new(tree, leaves[base_leaf], action, m)
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn depth(&self) -> usize {
        self.tree.height()
    }

    /// The deepest vertex `α_l` of the base ray.
    pub fn base_leaf(&self) -> usize {
        self.leaf
    }

    /// `α_0, ..., α_l`.
    pub fn base_ray(&self) -> Vec<usize> {
        self.tree.ray(self.leaf)
    }

    pub fn act(&self, v: usize, m: ElementId) -> usize {
        self.action[m][v]
    }

    pub fn element_count(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, m: ElementId) -> &[usize] {
        &self.action[m]
    }

    /// `D_χ(m, m') = |αm ∧ αm'|`.
    pub fn d_chi(&self) -> LengthTable {
        let n = self.action.len();
        LengthTable::from_fn(n, |a, b| {
            let w = self.tree.ray_wedge(self.act(self.leaf, a), self.act(self.leaf, b));
            ExtNat::Finite(self.tree.depth(w) as u64)
        })
    }

    pub fn is_faithful(&self) -> bool {
        let mut rows: Vec<&Vec<usize>> = self.action.iter().collect();
        rows.sort();
        rows.dedup();
        rows.len() == self.action.len()
    }

    /// `αm = αm'` only when `m = m'`.
    pub fn is_strongly_faithful(&self) -> bool {
        let mut images: Vec<usize> = self.action.iter().map(|a| a[self.leaf]).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == self.action.len()
    }

    /// The same M-tree with vertex `v` renamed `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, TreeError> {
        let tree = self.tree.relabeled(perm)?;
        let mut action = vec![vec![0; perm.len()]; self.action.len()];
        for (e, map) in self.action.iter().enumerate() {
            for v in 0..perm.len() {
                action[e][perm[v]] = perm[map[v]];
            }
        }
        Ok(EllipticTree {
            tree,
            leaf: perm[self.leaf],
            action,
        })
    }
}

/// Compares `D_χ` with `D_χ'` and, when they agree, builds and validates the
/// isomorphism `α_i m ↦ α'_i m`.
pub fn iso_check(
    chi: &EllipticTree,
    other: &EllipticTree,
) -> Result<Option<Vec<usize>>, TreeError> {
    if chi.action.len() != other.action.len() || chi.d_chi() != other.d_chi() {
        return Ok(None);
    }
    let (t, u) = (&chi.tree, &other.tree);
    let (ray, ray2) = (chi.base_ray(), other.base_ray());
    let mut map = vec![usize::MAX; t.len()];
    let mut hit = vec![false; u.len()];
    for (&a, &b) in ray.iter().zip(&ray2) {
        for e in 0..chi.action.len() {
            let (v, w) = (chi.act(a, e), other.act(b, e));
            if map[v] == usize::MAX {
                if hit[w] {
                    return Err(TreeError::IllDefined { vertex: v });
                }
                map[v] = w;
                hit[w] = true;
            } else if map[v] != w {
                return Err(TreeError::IllDefined { vertex: v });
            }
        }
    }
    if let Some(v) = map.iter().position(|&w| w == usize::MAX) {
        return Err(TreeError::NotTransitive { vertex: v });
    }
    if t.len() != u.len() {
        return Err(TreeError::IllDefined { vertex: 0 });
    }
    is_elliptic_contraction(t, u, &map).map_err(|vertex| TreeError::NotElliptic { element: 0, vertex })?;
    for e in 0..chi.action.len() {
        for v in 0..t.len() {
            if map[chi.act(v, e)] != other.act(map[v], e) {
                return Err(TreeError::NotElliptic { element: e, vertex: v });
            }
        }
    }
    Ok(Some(map))
}

/// The tree of the Chiswell construction together with the class of every
/// pair `(k, m)`.
#[derive(Debug, Clone)]
pub struct ChiswellTree {
    chi: EllipticTree,
    class_of: Vec<Vec<usize>>,
    rep: Vec<ElementId>,
}

/// Vertices are the classes `[k, m]` of `(k, m) ~ (k, m')` iff `D(m, m') >= k`,
/// numbered level by level in the order of their least members.
pub fn chiswell_build(m: &FiniteMonoid, d: &LengthTable) -> Result<ChiswellTree, TreeError> {
    let report = check_length_axioms(d, m, false);
    if let Some(&(axiom, _)) = report.failures.first() {
        return Err(TreeError::Axiom { axiom: axiom.name() });
    }
    let rows = d.finite_rows().map_err(|_| TreeError::Unbounded)?;
    let n = m.size();
    let l = rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut class_of = vec![vec![usize::MAX; n]; l + 1];
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut rep = Vec::new();
    for k in 0..=l {
        for x in 0..n {
            if class_of[k][x] != usize::MAX {
                continue;
            }
            let v = rep.len();
            rep.push(x);
            parent.push(if k == 0 { None } else { Some(class_of[k - 1][x]) });
            for y in x..n {
                if rows[x][y] as usize >= k {
                    if class_of[k][y] != usize::MAX {
                        return Err(TreeError::IllDefined { vertex: v });
                    }
                    class_of[k][y] = v;
                }
            }
        }
        for x in 0..n {
            let v = class_of[k][x];
            let r = rep[v];
            if rows[x][r] < k as u64 || (k > 0 && class_of[k - 1][x] != class_of[k - 1][r]) {
                return Err(TreeError::IllDefined { vertex: v });
            }
        }
    }
    let tree = RootedTree::from_parents(parent)?;
    let mut action = vec![vec![usize::MAX; rep.len()]; n];
    for e in 0..n {
        for k in 0..=l {
            for x in 0..n {
                let v = class_of[k][x];
                let w = class_of[k][m.mul(x, e)];
                if action[e][v] != usize::MAX && action[e][v] != w {
                    return Err(TreeError::IllDefined { vertex: v });
                }
                action[e][v] = w;
            }
        }
    }
    let leaf = class_of[l][m.identity()];
    let chi = EllipticTree::new(tree, leaf, action, m)?;
    Ok(ChiswellTree { chi, class_of, rep })
}

impl ChiswellTree {
    pub fn chi(&self) -> &EllipticTree {
        &self.chi
    }

    pub fn tree(&self) -> &RootedTree {
        &self.chi.tree
    }

    pub fn depth(&self) -> usize {
        self.class_of.len() - 1
    }

    /// The vertex `[k, m]`.
    pub fn vertex(&self, k: usize, m: ElementId) -> usize {
        self.class_of[k][m]
    }

    /// Least element in the class of vertex `v`.
    pub fn rep(&self, v: usize) -> ElementId {
        self.rep[v]
    }

    pub fn members(&self, v: usize) -> Vec<ElementId> {
        let k = self.chi.tree.depth(v);
        (0..self.class_of[k].len())
            .filter(|&x| self.class_of[k][x] == v)
            .collect()
    }
}

/// The shortest truncation `τ` of the chain `s` with `[n, τ] = [n, s]`.
pub fn minimal_representation(
    ch: &ChiswellTree,
    rh: &RhodesMonoid,
    n: usize,
    s: usize,
) -> Result<LChain, TreeError> {
    if n > ch.depth() {
        return Err(TreeError::DepthOutOfRange {
            depth: n,
            max: ch.depth(),
        });
    }
    let target = ch.vertex(n, s);
    let chain = rh.chain(s);
    for i in 0..=chain.len() {
        let t = chain.truncate(i);
        if let Some(id) = rh.id_of(&t) {
            if ch.vertex(n, id) == target {
                return Ok(t);
            }
        }
    }
    Ok(chain.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::{h_table, holonomy_table};
    use crate::length::j_height_function;
    use crate::structure::AdjoinedMonoid;
    use crate::tree::build_uniform_tree;

    fn flip_flop() -> AdjoinedMonoid {
        let m = FiniteMonoid::from_generators(
            2,
            &[("r1".into(), vec![0, 0]), ("r2".into(), vec![1, 1])],
        )
        .unwrap();
        AdjoinedMonoid::new(&m).unwrap()
    }

    fn ella() -> (FiniteMonoid, EllipticTree) {
        let m = FiniteMonoid::from_generators(
            4,
            &[
                ("b".into(), vec![1, 1, 3, 3]),
                ("c".into(), vec![2, 3, 2, 3]),
                ("d".into(), vec![2, 3, 3, 3]),
                ("e".into(), vec![3, 3, 3, 3]),
            ],
        )
        .unwrap();
        let t = build_uniform_tree(&[2, 2]).unwrap();
        let leaves = t.leaves();
        let maps: Vec<Vec<usize>> = m
            .elements()
            .map(|x| m.name(x).bytes().map(|c| (c - b'1') as usize).collect())
            .collect();
        let chi = EllipticTree::from_leaf_action(t.tree().clone(), &leaves, 0, &maps, &m).unwrap();
        (m, chi)
    }

    #[test]
    fn ella_acts_faithfully() {
        let (m, chi) = ella();
        assert_eq!(m.size(), 5);
        assert!(chi.is_faithful());
        assert_eq!(chi.depth(), 2);
        let back = chiswell_build(&m, &chi.d_chi()).unwrap();
        assert!(iso_check(&chi, back.chi()).unwrap().is_some());
    }

    #[test]
    fn star_tree_from_zero_function() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        let zero = vec![0; b.monoid().size()];
        let d = holonomy_table(&rh, &b, &zero).unwrap();
        let ch = chiswell_build(rh.monoid(), &d).unwrap();
        assert_eq!(ch.tree().len(), 1 + rh.len());
        assert_eq!(ch.tree().children(0).len(), rh.len());
    }

    #[test]
    fn round_trip_on_flip_flop() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        for d in [
            h_table(&rh, &b),
            holonomy_table(&rh, &b, &j_height_function(b.green())).unwrap(),
        ] {
            let ch = chiswell_build(rh.monoid(), &d).unwrap();
            assert_eq!(ch.chi().d_chi(), d);
            assert!(ch.chi().is_strongly_faithful());
        }
        let ch = chiswell_build(rh.monoid(), &h_table(&rh, &b)).unwrap();
        assert_eq!(ch.depth(), 6);
        assert_eq!(ch.tree().vertices_at(6).len(), rh.len());
    }

    #[test]
    fn iso_with_relabeled_copy() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        let ch = chiswell_build(rh.monoid(), &h_table(&rh, &b)).unwrap();
        let n = ch.tree().len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm[1..].reverse();
        let copy = ch.chi().relabeled(&perm).unwrap();
        copy.validate(rh.monoid()).unwrap();
        let iso = iso_check(ch.chi(), &copy).unwrap().unwrap();
        assert_eq!(iso, perm);
        let shallow = chiswell_build(
            rh.monoid(),
            &holonomy_table(&rh, &b, &j_height_function(b.green())).unwrap(),
        )
        .unwrap();
        assert!(iso_check(ch.chi(), shallow.chi()).unwrap().is_none());
    }

    #[test]
    fn rejects_non_length_functions() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        let mut d = h_table(&rh, &b);
        d.set(0, 1, ExtNat::Finite(5));
        assert!(matches!(
            chiswell_build(rh.monoid(), &d),
            Err(TreeError::Axiom { axiom: "L1" })
        ));
    }

    #[test]
    fn minimal_representations_match_classes() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        let ch = chiswell_build(rh.monoid(), &h_table(&rh, &b)).unwrap();
        for s in 0..rh.len() {
            assert_eq!(minimal_representation(&ch, &rh, 0, s).unwrap(), rh.chain(0).clone());
            for n in 0..=ch.depth() {
                let t = minimal_representation(&ch, &rh, n, s).unwrap();
                let id = rh.id_of(&t).unwrap();
                assert_eq!(ch.vertex(n, id), ch.vertex(n, s));
                for i in 0..t.len() {
                    let shorter = rh.id_of(&t.truncate(i)).unwrap();
                    assert_ne!(ch.vertex(n, shorter), ch.vertex(n, s));
                }
            }
        }
        assert!(minimal_representation(&ch, &rh, 7, 0).is_err());
    }
}
