//! Iterated wreath products of transformation monoids, their tree actions
//! and the generic embedding of a faithful elliptic tree.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::elliptic::EllipticTree;
use crate::error::WreathError;
use crate::length::{ExtNat, LengthTable};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::seqmap::{all_tuples, SequentialMap};
use crate::tree::{RootedTree, Tuple, UniformTree};

/// `D(φ, ψ)`: the deepest level up to which both maps restrict to the same
/// partial map; the number of levels on the diagonal.
pub fn wreath_length_table(maps: &[SequentialMap], sizes: &[usize]) -> LengthTable {
    let expanded: Vec<BTreeMap<Tuple, Tuple>> = maps.iter().map(|m| m.expand(sizes)).collect();
    let l = sizes.len();
    LengthTable::from_fn(maps.len(), |a, b| {
        if a == b {
            return ExtNat::Finite(l as u64);
        }
        let (x, y) = (&expanded[a], &expanded[b]);
        let mut bad = l + 1;
        for (t, img) in x {
            if y.get(t) != Some(img) {
                bad = bad.min(t.len());
            }
        }
        for t in y.keys() {
            if !x.contains_key(t) {
                bad = bad.min(t.len());
            }
        }
        ExtNat::Finite((bad.saturating_sub(1).min(l)) as u64)
    })
}

/// The two-level element `(β_1, ..., β_m)α` of `M_2 ∘ M_1`, acting by
/// `(x_2, a_i) ↦ (x_2 β_i, a_i α)`.
pub fn two_level(betas: &[Vec<usize>], alpha: &[usize]) -> SequentialMap {
    let n2 = betas.first().map_or(0, Vec::len);
    let sizes = [alpha.len(), n2];
    SequentialMap::from_pairs(all_tuples(&sizes).into_iter().map(|t| {
        let image = match t[..] {
            [] => vec![],
            [a] => vec![alpha[a as usize] as u16],
            [a, x] => vec![alpha[a as usize] as u16, betas[a as usize][x as usize] as u16],
            _ => unreachable!(),
        };
        (t, image)
    }))
}

/// The sequential map of an elliptic contraction of a uniform tree.
pub fn ell_to_sequential(ut: &UniformTree, map: &[usize]) -> SequentialMap {
    SequentialMap::from_pairs(
        (0..ut.tree().len()).map(|v| (ut.tuple(v).to_vec(), ut.tuple(map[v]).to_vec())),
    )
}

/// Rebuilds the vertex map from the leaf restriction of `phi`.
pub fn sequential_to_ell(ut: &UniformTree, phi: &SequentialMap) -> Result<Vec<usize>, WreathError> {
    let t = ut.tree();
    let mut map = vec![usize::MAX; t.len()];
    for leaf in ut.leaves() {
        let x = ut.tuple(leaf);
        let y = phi.apply(x).ok_or_else(|| WreathError::NotSequential {
            axiom: "SQ1",
            tuple: x.iter().map(|&s| u32::from(s)).collect(),
        })?;
        let target = ut.vertex(&y).ok_or(WreathError::AlphabetMismatch)?;
        for d in 0..=x.len() {
            let (v, w) = (t.ancestor(leaf, d), t.ancestor(target, d));
            if map[v] != usize::MAX && map[v] != w {
                return Err(WreathError::NotSequential {
                    axiom: "SQ3",
                    tuple: x.iter().map(|&s| u32::from(s)).collect(),
                });
            }
            map[v] = w;
        }
    }
    Ok(map)
}

/// Every elliptic contraction of `tree`, assuming parents precede children.
pub fn enumerate_ell(tree: &RootedTree) -> Vec<Vec<usize>> {
    let n = tree.len();
    let order: Vec<usize> = (0..=tree.height()).flat_map(|d| tree.vertices_at(d)).collect();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    map[tree.root()] = tree.root();
    fn go(tree: &RootedTree, order: &[usize], i: usize, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == order.len() {
            out.push(map.clone());
            return;
        }
        let v = order[i];
        let p = tree.parent(v).unwrap();
        for &c in tree.children(map[p]) {
            map[v] = c;
            go(tree, order, i + 1, map, out);
        }
    }
    go(tree, &order, 1, &mut map, &mut out);
    out
}

/// Every element of `M_l ∘ ... ∘ M_1`, where `components[i]` lists the
/// transformations of `X_{i+1}` making up `M_{i+1}`.
pub fn wreath_elements(sizes: &[usize], components: &[Vec<Vec<usize>>]) -> Vec<SequentialMap> {
    let slots: Vec<Tuple> = all_tuples(&sizes[..sizes.len().saturating_sub(1)]);
    let slot_of: HashMap<&Tuple, usize> = slots.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let radix: Vec<usize> = slots.iter().map(|t| components[t.len()].len()).collect();
    if radix.contains(&0) {
        return Vec::new();
    }
    let tuples = all_tuples(sizes);
    let mut choice = vec![0usize; slots.len()];
    let mut out = Vec::new();
    loop {
        let mut map: BTreeMap<Tuple, Tuple> = BTreeMap::new();
        for t in &tuples {
            let image = match t.split_last() {
                None => Vec::new(),
                Some((&last, head)) => {
                    let f = &components[head.len()][choice[slot_of[&head.to_vec()]]];
                    let mut y = map[head].clone();
                    y.push(f[last as usize] as u16);
                    y
                }
            };
            map.insert(t.clone(), image);
        }
        out.push(SequentialMap::Partial(map));
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < radix[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Closure of a set of transformations of `0..n` under composition, with the
/// identity.
pub fn transformation_closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![(0..n).collect::<Vec<_>>()];
    while let Some(f) = stack.pop() {
        if !seen.insert(f.clone()) {
            continue;
        }
        for g in gens {
            stack.push(f.iter().map(|&x| g[x]).collect());
        }
    }
    seen.into_iter().collect()
}

/// One level `(X_i, x_i, M_i)` of a pointed wreath product.
#[derive(Debug, Clone)]
pub struct PointedComponent {
    pub size: usize,
    pub point: usize,
    /// Generators of `M_i` as transformations of `0..size`.
    pub generators: Vec<Vec<usize>>,
}

/// `M_l ∘ ... ∘ M_1` acting on its tree, with the ray through the base points.
#[derive(Debug, Clone)]
pub struct PointedWreath {
    pub sizes: Vec<usize>,
    pub base: Tuple,
    pub maps: Vec<SequentialMap>,
    pub monoid: FiniteMonoid,
    pub tree: UniformTree,
    pub chi: EllipticTree,
}

/// Builds the faithful elliptic tree of a pointed wreath product; components
/// are listed bottom-up.
pub fn pointed_wreath_tree(components: &[PointedComponent]) -> Result<PointedWreath, WreathError> {
    let sizes: Vec<usize> = components.iter().map(|c| c.size).collect();
    let mut monoids = Vec::new();
    for (i, c) in components.iter().enumerate() {
        let m = transformation_closure(c.size, &c.generators);
        let orbit: BTreeSet<usize> = m.iter().map(|f| f[c.point]).collect();
        if let Some(missing) = (0..c.size).find(|x| !orbit.contains(x)) {
            return Err(WreathError::NotTransitive { level: i + 1, missing });
        }
        monoids.push(m);
    }
    let maps = wreath_elements(&sizes, &monoids);
    let index: HashMap<&SequentialMap, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table: Vec<Vec<usize>> = maps
        .iter()
        .map(|a| maps.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let identity = maps
        .iter()
        .position(|m| m.same_as(&SequentialMap::Identity, &sizes))
        .expect("identity lies in every wreath product");
    let monoid = FiniteMonoid::from_table(table, identity, Vec::new())?;
    let tree = UniformTree::from_sizes(&sizes)?;
    let base: Tuple = components.iter().map(|c| c.point as u16).collect();
    let action = maps
        .iter()
        .map(|m| {
            (0..tree.tree().len())
                .map(|v| tree.vertex(&m.apply(tree.tuple(v)).unwrap()).unwrap())
                .collect()
        })
        .collect();
    let leaf = tree.vertex(&base).ok_or(WreathError::AlphabetMismatch)?;
    let chi = EllipticTree::new(tree.tree().clone(), leaf, action, &monoid)?;
    Ok(PointedWreath {
        sizes,
        base,
        maps,
        monoid,
        tree,
        chi,
    })
}

impl PointedWreath {
    /// `D(φ, φ')`: the length of the common initial segment of the images of
    /// the base tuple.
    pub fn shared_suffix_table(&self) -> LengthTable {
        let images: Vec<Tuple> = self.maps.iter().map(|m| m.apply(&self.base).unwrap()).collect();
        LengthTable::from_fn(self.maps.len(), |a, b| {
            let k = images[a].iter().zip(&images[b]).take_while(|(x, y)| x == y).count();
            ExtNat::Finite(k as u64)
        })
    }
}

/// `Ψ_m = ψ⁻¹θ_mψ`, where `ψ` reads the labels along the ray of a vertex;
/// the monoid identity goes to the identity of the whole product.
pub fn generic_embed(
    chi: &EllipticTree,
    identity: ElementId,
    labels: &[u16],
    sizes: &[usize],
) -> Result<Vec<SequentialMap>, WreathError> {
    let t = chi.tree();
    if sizes.len() != t.height() {
        return Err(WreathError::AlphabetMismatch);
    }
    for v in 0..t.len() {
        let mut seen = BTreeSet::new();
        for &c in t.children(v) {
            if labels[c] as usize >= sizes[t.depth(v)] || !seen.insert(labels[c]) {
                return Err(WreathError::NotLocallyInjective { vertex: v });
            }
        }
    }
    let psi: Vec<Tuple> = (0..t.len())
        .map(|v| t.ray(v)[1..].iter().map(|&u| labels[u]).collect())
        .collect();
    Ok((0..chi.element_count())
        .map(|e| {
            if e == identity {
                SequentialMap::Identity
            } else {
                SequentialMap::from_pairs((0..t.len()).map(|v| (psi[v].clone(), psi[chi.act(v, e)].clone())))
            }
        })
        .collect())
}
