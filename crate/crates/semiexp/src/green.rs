//! Green's relations, the J-poset and J-heights.

use std::collections::VecDeque;

use crate::monoid::{ElementId, FiniteMonoid};

/// A dense boolean relation on `0..n`, one bit row per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Relation {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.stride + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.stride + b / 64] |= 1 << (b % 64);
    }
}

/// Which side(s) multiplication happens on while exploring ideals.
#[derive(Debug, Clone, Copy)]
enum Side {
    Left,
    Right,
    Both,
}

/// Rows of the result are the *lower* sets: `rel.get(a, b)` iff `a <= b`.
fn ideal_relation(m: &FiniteMonoid, span: &[ElementId], side: Side) -> Relation {
    let n = m.size();
    let mut rel = Relation::new(n);
    let mut seen = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for b in 0..n {
        seen[b] = b;
        rel.set(b, b);
        queue.push_back(b);
        while let Some(x) = queue.pop_front() {
            let mut visit = |y: ElementId, queue: &mut VecDeque<ElementId>| {
                if seen[y] != b {
                    seen[y] = b;
                    rel.set(y, b);
                    queue.push_back(y);
                }
            };
            for &g in span {
                match side {
                    Side::Left => visit(m.mul(g, x), &mut queue),
                    Side::Right => visit(m.mul(x, g), &mut queue),
                    Side::Both => {
                        visit(m.mul(g, x), &mut queue);
                        visit(m.mul(x, g), &mut queue);
                    }
                }
            }
        }
    }
    rel
}

/// Class ids ordered by least member.
fn classes_of(rel: &Relation) -> (Vec<usize>, Vec<Vec<ElementId>>) {
    let n = rel.len();
    let mut class = vec![usize::MAX; n];
    let mut members = Vec::new();
    for a in 0..n {
        if class[a] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut list = Vec::new();
        for b in a..n {
            if rel.get(a, b) && rel.get(b, a) {
                class[b] = id;
                list.push(b);
            }
        }
        members.push(list);
    }
    (class, members)
}

/// Green's relations of a finite monoid together with the J-poset.
#[derive(Debug, Clone)]
pub struct GreenData {
    leq_l: Relation,
    leq_r: Relation,
    leq_j: Relation,
    l_class: Vec<usize>,
    r_class: Vec<usize>,
    j_class: Vec<usize>,
    h_class: Vec<usize>,
    l_members: Vec<Vec<ElementId>>,
    r_members: Vec<Vec<ElementId>>,
    j_members: Vec<Vec<ElementId>>,
    h_members: Vec<Vec<ElementId>>,
    upper_covers: Vec<Vec<usize>>,
    top: usize,
    heights: Vec<usize>,
}

impl GreenData {
    pub fn compute(m: &FiniteMonoid) -> Self {
        let span = m.spanning_set();
        let leq_l = ideal_relation(m, &span, Side::Left);
        let leq_r = ideal_relation(m, &span, Side::Right);
        let leq_j = ideal_relation(m, &span, Side::Both);
        let (l_class, l_members) = classes_of(&leq_l);
        let (r_class, r_members) = classes_of(&leq_r);
        let (j_class, j_members) = classes_of(&leq_j);

        let n = m.size();
        let mut h_class = vec![usize::MAX; n];
        let mut h_members: Vec<Vec<ElementId>> = Vec::new();
        for a in 0..n {
            if h_class[a] != usize::MAX {
                continue;
            }
            let id = h_members.len();
            let list: Vec<ElementId> = l_members[l_class[a]]
                .iter()
                .copied()
                .filter(|&b| r_class[b] == r_class[a])
                .collect();
            for &b in &list {
                h_class[b] = id;
            }
            h_members.push(list);
        }

        let nj = j_members.len();
        let below = |c: usize, d: usize| {
            c != d && leq_j.get(j_members[c][0], j_members[d][0])
        };
        let mut upper_covers = vec![Vec::new(); nj];
        for c in 0..nj {
            for d in 0..nj {
                if below(c, d) && !(0..nj).any(|e| below(c, e) && below(e, d)) {
                    upper_covers[c].push(d);
                }
            }
        }
        let top = j_class[m.identity()];

        // longest path down from the top; classes sorted by size of their
        // upper set give a topological order
        let mut order: Vec<usize> = (0..nj).collect();
        let up_count: Vec<usize> = (0..nj)
            .map(|c| (0..nj).filter(|&d| below(c, d)).count())
            .collect();
        order.sort_by_key(|&c| up_count[c]);
        let mut heights = vec![0usize; nj];
        for &c in &order {
            heights[c] = upper_covers[c]
                .iter()
                .map(|&d| heights[d] + 1)
                .max()
                .unwrap_or(0);
        }

        GreenData {
            leq_l,
            leq_r,
            leq_j,
            l_class,
            r_class,
            j_class,
            h_class,
            l_members,
            r_members,
            j_members,
            h_members,
            upper_covers,
            top,
            heights,
        }
    }

    pub fn size(&self) -> usize {
        self.l_class.len()
    }

    /// `a <=_L b`, i.e. `a ∈ Mb`.
    pub fn leq_l(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_l.get(a, b)
    }
    /// `a <=_R b`, i.e. `a ∈ bM`.
    pub fn leq_r(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_r.get(a, b)
    }
    /// `a <=_J b`, i.e. `a ∈ MbM`.
    pub fn leq_j(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_j.get(a, b)
    }
    pub fn lt_l(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_l(a, b) && self.l_class[a] != self.l_class[b]
    }
    pub fn lt_r(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_r(a, b) && self.r_class[a] != self.r_class[b]
    }
    pub fn lt_j(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_j(a, b) && self.j_class[a] != self.j_class[b]
    }
    pub fn l_eq(&self, a: ElementId, b: ElementId) -> bool {
        self.l_class[a] == self.l_class[b]
    }
    pub fn r_eq(&self, a: ElementId, b: ElementId) -> bool {
        self.r_class[a] == self.r_class[b]
    }
    pub fn j_eq(&self, a: ElementId, b: ElementId) -> bool {
        self.j_class[a] == self.j_class[b]
    }
    pub fn h_eq(&self, a: ElementId, b: ElementId) -> bool {
        self.h_class[a] == self.h_class[b]
    }

    pub fn l_class(&self, a: ElementId) -> usize {
        self.l_class[a]
    }
    pub fn r_class(&self, a: ElementId) -> usize {
        self.r_class[a]
    }
    pub fn j_class(&self, a: ElementId) -> usize {
        self.j_class[a]
    }
    pub fn h_class(&self, a: ElementId) -> usize {
        self.h_class[a]
    }

    pub fn l_members(&self, class: usize) -> &[ElementId] {
        &self.l_members[class]
    }
    pub fn r_members(&self, class: usize) -> &[ElementId] {
        &self.r_members[class]
    }
    pub fn j_members(&self, class: usize) -> &[ElementId] {
        &self.j_members[class]
    }
    pub fn h_members(&self, class: usize) -> &[ElementId] {
        &self.h_members[class]
    }

    pub fn l_count(&self) -> usize {
        self.l_members.len()
    }
    pub fn r_count(&self) -> usize {
        self.r_members.len()
    }
    pub fn j_count(&self) -> usize {
        self.j_members.len()
    }
    pub fn h_count(&self) -> usize {
        self.h_members.len()
    }

    /// Strict order on J-class ids.
    pub fn j_class_below(&self, lower: usize, upper: usize) -> bool {
        lower != upper && self.leq_j(self.j_members[lower][0], self.j_members[upper][0])
    }

    /// J-classes covering `class` from above.
    pub fn upper_covers(&self, class: usize) -> &[usize] {
        &self.upper_covers[class]
    }

    /// J-class of the identity.
    pub fn top_class(&self) -> usize {
        self.top
    }

    /// Length of the longest strict J-chain from the class up to the top.
    pub fn class_height(&self, class: usize) -> usize {
        self.heights[class]
    }

    pub fn j_height(&self, a: ElementId) -> usize {
        self.heights[self.j_class[a]]
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Elements whose L-class coincides with their H-class.
    pub fn w_set(&self) -> Vec<bool> {
        (0..self.size())
            .map(|a| self.l_members[self.l_class[a]].len() == self.h_members[self.h_class[a]].len())
            .collect()
    }
}

/// Checks `ax J a ⇒ ax R a` and `xa J a ⇒ xa L a`, returning a failing pair.
pub fn stability_witness(m: &FiniteMonoid, green: &GreenData) -> Option<(ElementId, ElementId)> {
    for a in m.elements() {
        for x in m.elements() {
            let ax = m.mul(a, x);
            if green.j_eq(ax, a) && !green.r_eq(ax, a) {
                return Some((a, x));
            }
            let xa = m.mul(x, a);
            if green.j_eq(xa, a) && !green.l_eq(xa, a) {
                return Some((a, x));
            }
        }
    }
    None
}

pub fn is_stable(m: &FiniteMonoid, green: &GreenData) -> bool {
    stability_witness(m, green).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip_flop_i() -> FiniteMonoid {
        FiniteMonoid::from_generators(
            2,
            &[("r1".into(), vec![0, 0]), ("r2".into(), vec![1, 1])],
        )
        .unwrap()
        .adjoin_identity()
    }

    /// Oracle: `a ∈ Mb` by scanning the table.
    fn brute_leq_l(m: &FiniteMonoid, a: usize, b: usize) -> bool {
        m.elements().any(|x| m.mul(x, b) == a)
    }
    fn brute_leq_j(m: &FiniteMonoid, a: usize, b: usize) -> bool {
        m.elements().any(|x| m.elements().any(|y| m.mul(m.mul(x, b), y) == a))
    }

    #[test]
    fn flip_flop_classes() {
        let m = flip_flop_i();
        let g = GreenData::compute(&m);
        // elements: 0 = 1, 1 = r1, 2 = r2, 3 = I
        assert_eq!(g.l_count(), 4);
        assert!(g.r_eq(1, 2));
        assert_eq!(g.j_count(), 3);
        assert_eq!(g.j_height(3), 0);
        assert_eq!(g.j_height(0), 1);
        assert_eq!((g.j_height(1), g.j_height(2)), (2, 2));
        assert!(g.w_set().iter().all(|&w| w));
        assert!(g.lt_l(0, 3));
        assert!(!g.leq_l(3, 0));
        assert!(is_stable(&m, &g));
    }

    #[test]
    fn relations_match_brute_force() {
        let m = FiniteMonoid::from_generators(
            3,
            &[("a".into(), vec![1, 2, 0]), ("b".into(), vec![0, 0, 2])],
        )
        .unwrap();
        let g = GreenData::compute(&m);
        for a in m.elements() {
            for b in m.elements() {
                assert_eq!(g.leq_l(a, b), brute_leq_l(&m, a, b));
                assert_eq!(g.leq_j(a, b), brute_leq_j(&m, a, b));
            }
        }
        assert!(is_stable(&m, &g));
    }

    #[test]
    fn heights_are_order_reversing() {
        let m = FiniteMonoid::from_generators(
            3,
            &[("a".into(), vec![1, 0, 2]), ("b".into(), vec![0, 0, 2])],
        )
        .unwrap()
        .adjoin_identity();
        let g = GreenData::compute(&m);
        for a in m.elements() {
            for b in m.elements() {
                if g.lt_j(a, b) {
                    assert!(g.j_height(a) > g.j_height(b));
                }
            }
        }
        assert_eq!(g.j_height(m.identity()), 0);
    }
}
