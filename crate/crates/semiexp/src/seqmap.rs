//! Sequential partial maps on `X_l × ... × X_1`.
//!
//! Tuples are stored bottom-up: `[x_1, ..., x_i]` is the vertex reached from
//! the root by reading `x_1` first.

use std::collections::BTreeMap;

use crate::error::WreathError;
use crate::tree::Tuple;

/// A partial self-map of `⋃ X_i × ... × X_1`; `Identity` is the identity on
/// everything, whatever the alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequentialMap {
    Identity,
    Partial(BTreeMap<Tuple, Tuple>),
}

/// A partial self-map of one alphabet, `None` where undefined.
pub type LocalMap = Vec<Option<u16>>;

impl SequentialMap {
    pub fn empty() -> Self {
        SequentialMap::Partial(BTreeMap::new())
    }

    pub fn from_pairs<I: IntoIterator<Item = (Tuple, Tuple)>>(pairs: I) -> Self {
        SequentialMap::Partial(pairs.into_iter().collect())
    }

    pub fn apply(&self, x: &[u16]) -> Option<Tuple> {
        match self {
            SequentialMap::Identity => Some(x.to_vec()),
            SequentialMap::Partial(m) => m.get(x).cloned(),
        }
    }

    pub fn contains(&self, x: &[u16]) -> bool {
        match self {
            SequentialMap::Identity => true,
            SequentialMap::Partial(m) => m.contains_key(x),
        }
    }

    /// `x(φφ') = (xφ)φ'`.
    pub fn compose(&self, other: &SequentialMap) -> SequentialMap {
        match (self, other) {
            (SequentialMap::Identity, _) => other.clone(),
            (_, SequentialMap::Identity) => self.clone(),
            (SequentialMap::Partial(a), SequentialMap::Partial(b)) => SequentialMap::Partial(
                a.iter()
                    .filter_map(|(x, y)| b.get(y).map(|z| (x.clone(), z.clone())))
                    .collect(),
            ),
        }
    }

    /// The explicit graph, with `Identity` expanded over the given alphabets.
    pub fn expand(&self, sizes: &[usize]) -> BTreeMap<Tuple, Tuple> {
        match self {
            SequentialMap::Identity => all_tuples(sizes).into_iter().map(|t| (t.clone(), t)).collect(),
            SequentialMap::Partial(m) => m.clone(),
        }
    }

    /// Equality as partial maps over the given alphabets.
    pub fn same_as(&self, other: &SequentialMap, sizes: &[usize]) -> bool {
        match (self, other) {
            (SequentialMap::Identity, SequentialMap::Identity) => true,
            (SequentialMap::Partial(a), SequentialMap::Partial(b)) => a == b,
            _ => self.expand(sizes) == other.expand(sizes),
        }
    }

    /// Checks SQ1 (closed under truncation), SQ2 (levels and alphabets) and
    /// SQ3 (images of truncations are truncations of images).
    pub fn check_sequential(&self, sizes: &[usize]) -> Result<(), WreathError> {
        let SequentialMap::Partial(m) = self else {
            return Ok(());
        };
        let fail = |axiom, x: &[u16]| WreathError::NotSequential {
            axiom,
            tuple: x.iter().map(|&s| u32::from(s)).collect(),
        };
        for (x, y) in m {
            if x.len() > sizes.len()
                || y.len() != x.len()
                || x.iter().zip(y).zip(sizes).any(|((&a, &b), &n)| a.max(b) as usize >= n)
            {
                return Err(fail("SQ2", x));
            }
            if let Some((_, head)) = x.split_last() {
                match m.get(head) {
                    None => return Err(fail("SQ1", x)),
                    Some(h) if h[..] != y[..head.len()] => return Err(fail("SQ3", x)),
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    /// `(·, a_{i-1}, ..., a_1)φπ_i` as a partial map of `X_i`, where
    /// `prefix = [a_1, ..., a_{i-1}]`.
    pub fn local_component(&self, sizes: &[usize], prefix: &[u16]) -> LocalMap {
        let n = sizes[prefix.len()];
        let mut x = prefix.to_vec();
        x.push(0);
        (0..n)
            .map(|s| {
                *x.last_mut().unwrap() = s as u16;
                self.apply(&x).map(|y| y[prefix.len()])
            })
            .collect()
    }

    /// The tuples in the domain, shortest first.
    pub fn domain(&self, sizes: &[usize]) -> Vec<Tuple> {
        let mut d: Vec<Tuple> = self.expand(sizes).into_keys().collect();
        d.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        d
    }

    /// The largest `j` such that both maps have the same restriction to
    /// tuples of length at most `j`.
    pub fn agreement_depth(&self, other: &SequentialMap, sizes: &[usize]) -> usize {
        let (a, b) = (self.expand(sizes), other.expand(sizes));
        let mut bad = sizes.len() + 1;
        for (x, y) in &a {
            if b.get(x) != Some(y) {
                bad = bad.min(x.len());
            }
        }
        for x in b.keys() {
            if !a.contains_key(x) {
                bad = bad.min(x.len());
            }
        }
        bad.saturating_sub(1).min(sizes.len())
    }
}

/// All tuples of length `0..=sizes.len()`, shortest first.
pub fn all_tuples(sizes: &[usize]) -> Vec<Tuple> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for &n in sizes {
        let mut next = Vec::new();
        for t in &layer {
            for s in 0..n {
                let mut u: Tuple = t.clone();
                u.push(s as u16);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn is_identity(f: &LocalMap) -> bool {
    f.iter().enumerate().all(|(i, &y)| y == Some(i as u16))
}

/// At most one value in the image, the empty map included.
pub fn is_constant(f: &LocalMap) -> bool {
    let mut vals = f.iter().flatten();
    match vals.next() {
        None => true,
        Some(&v) => vals.all(|&w| w == v),
    }
}

pub fn is_permutation(f: &LocalMap) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|y| match *y {
        Some(v) if !seen[v as usize] => {
            seen[v as usize] = true;
            true
        }
        _ => false,
    })
}

/// `f` then `g`.
pub fn compose_local(f: &LocalMap, g: &LocalMap) -> LocalMap {
    f.iter().map(|y| y.and_then(|v| g[v as usize])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn full(sizes: &[usize], f: impl Fn(&[u16]) -> Tuple) -> SequentialMap {
        SequentialMap::from_pairs(all_tuples(sizes).into_iter().map(|t| {
            let y = f(&t);
            (t, y)
        }))
    }

    #[test]
    fn identity_and_empty() {
        let sizes = [2, 3];
        let swap = full(&sizes, |t| t.iter().map(|&s| if s < 2 { 1 - s } else { s }).collect());
        swap.check_sequential(&sizes).unwrap();
        assert_eq!(swap.compose(&SequentialMap::Identity), swap);
        assert!(swap.compose(&swap).same_as(&SequentialMap::Identity, &sizes));
        assert_eq!(swap.compose(&SequentialMap::empty()), SequentialMap::empty());
        assert_eq!(SequentialMap::Identity.local_component(&sizes, &[1]), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(swap.agreement_depth(&SequentialMap::Identity, &sizes), 0);
        assert_eq!(swap.agreement_depth(&swap, &sizes), 2);
    }

    #[test]
    fn axioms_detected() {
        let sizes = [2, 2];
        let no_root = SequentialMap::from_pairs([(vec![0], vec![1])]);
        assert!(matches!(
            no_root.check_sequential(&sizes),
            Err(WreathError::NotSequential { axiom: "SQ1", .. })
        ));
        let jumbled = SequentialMap::from_pairs([
            (vec![], vec![]),
            (vec![0], vec![0]),
            (vec![0, 1], vec![1, 1]),
        ]);
        assert!(matches!(
            jumbled.check_sequential(&sizes),
            Err(WreathError::NotSequential { axiom: "SQ3", .. })
        ));
        let out_of_range = SequentialMap::from_pairs([(vec![], vec![]), (vec![0], vec![2])]);
        assert!(matches!(
            out_of_range.check_sequential(&sizes),
            Err(WreathError::NotSequential { axiom: "SQ2", .. })
        ));
    }

    #[test]
    fn local_kinds() {
        assert!(is_constant(&vec![None, None]));
        assert!(is_constant(&vec![Some(1), None, Some(1)]));
        assert!(!is_constant(&vec![Some(1), Some(0)]));
        assert!(is_permutation(&vec![Some(1), Some(0)]));
        assert!(!is_permutation(&vec![Some(1), None]));
        assert!(is_identity(&compose_local(&vec![Some(1), Some(0)], &vec![Some(1), Some(0)])));
    }

    fn random_map(sizes: &[usize], picks: &[u16], keep: &[bool]) -> SequentialMap {
        // a total sequential map from per-prefix local choices, then pruned
        let mut out = BTreeMap::new();
        out.insert(Vec::new(), Vec::new());
        for (k, t) in all_tuples(sizes).into_iter().enumerate().skip(1) {
            let (last, head) = t.split_last().unwrap();
            let Some(h) = out.get(head).cloned() else { continue };
            if !keep[k % keep.len()] {
                continue;
            }
            let n = sizes[head.len()] as u16;
            let mut y: Tuple = h;
            y.push((picks[(k + *last as usize) % picks.len()] + *last) % n);
            out.insert(t, y);
        }
        SequentialMap::Partial(out)
    }

    proptest! {
        #[test]
        fn composition_stays_sequential_and_obeys_local_law(
            p1 in proptest::collection::vec(0u16..4, 1..12),
            p2 in proptest::collection::vec(0u16..4, 1..12),
            k1 in proptest::collection::vec(any::<bool>(), 1..8),
            k2 in proptest::collection::vec(any::<bool>(), 1..8),
        ) {
            let sizes = [2, 3, 2];
            let a = random_map(&sizes, &p1, &k1);
            let b = random_map(&sizes, &p2, &k2);
            a.check_sequential(&sizes).unwrap();
            b.check_sequential(&sizes).unwrap();
            let ab = a.compose(&b);
            ab.check_sequential(&sizes).unwrap();
            for t in all_tuples(&sizes[..2]) {
                let Some(image) = a.apply(&t) else { continue };
                if !b.contains(&image) {
                    continue;
                }
                let lhs = ab.local_component(&sizes, &t);
                let rhs = compose_local(&a.local_component(&sizes, &t), &b.local_component(&sizes, &image));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
