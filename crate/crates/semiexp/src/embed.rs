//! The embedding of `Rh_Y(M^I)` into an iterated wreath product of partial
//! transformation monoids with the Zeiger property, and its verification.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::elliptic::{chiswell_build, minimal_representation, ChiswellTree};
use crate::error::WreathError;
use crate::holonomy::h_table;
use crate::length::LengthTable;
use crate::monoid::ElementId;
use crate::rees::Coord;
use crate::rhodes::{zeiger_encode, LChain, RhodesMonoid};
use crate::seqmap::{compose_local, is_constant, is_identity, is_permutation, LocalMap, SequentialMap};
use crate::structure::AdjoinedMonoid;
use crate::tree::Tuple;
use crate::wreath::wreath_length_table;

/// Alphabet letters. Every letter except `Down` carries a `tag` keeping the
/// copies built from different elements apart: the J-class for rows, the
/// R-class for group letters. Sons of one vertex at even depth may come from
/// several R-classes of a J-class, so rows cannot be told apart any finer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Down,
    /// A row `a'`, given as a global R-class id.
    Row { tag: usize, row: usize },
    /// `(a', ∗)`.
    RowStar { tag: usize, row: usize },
    /// `(g, ∗)`.
    Group { tag: usize, g: usize },
    /// `(g, b)`, with `b` a global L-class id.
    GroupQ { tag: usize, g: usize, lclass: usize },
}

impl Symbol {
    pub fn tag(&self) -> Option<usize> {
        match *self {
            Symbol::Down => None,
            Symbol::Row { tag, .. }
            | Symbol::RowStar { tag, .. }
            | Symbol::Group { tag, .. }
            | Symbol::GroupQ { tag, .. } => Some(tag),
        }
    }
}

/// Which of the sets `U_0(k), ..., U_4(k)` an element lies in, `k` being its
/// J-height.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct USets {
    pub u: [bool; 5],
}

pub fn u_sets(b: &AdjoinedMonoid, x: ElementId) -> USets {
    let green = b.green();
    let view = b.rees().view(green.j_class(x));
    let ls = b.local_sets(x);
    let (rows, g, q, ap) = (view.rows.len(), view.group_order(), ls.q_classes.len(), ls.a_prime.len());
    let w = b.in_w(x);
    USets {
        u: [
            w && rows > 1,
            !w && rows + ap > 1,
            w && g * (1 + q) > 1,
            !w && g > 1,
            !w && g * q > 1,
        ],
    }
}

/// `X_1, ..., X_δ`, each listed with `Down` first.
#[derive(Debug, Clone)]
pub struct Alphabets {
    levels: Vec<Vec<Symbol>>,
    index: Vec<HashMap<Symbol, u16>>,
}

impl Alphabets {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// `X_i` for `i >= 1`.
    pub fn level(&self, i: usize) -> &[Symbol] {
        &self.levels[i - 1]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn position(&self, i: usize, s: Symbol) -> Option<u16> {
        self.index[i - 1].get(&s).copied()
    }
}

fn q_of_rstar(b: &AdjoinedMonoid, x: ElementId) -> Vec<usize> {
    let xs = b.monoid().mul(x, b.rees().star(x));
    b.local_sets(xs).q_classes
}

pub fn build_alphabets(b: &AdjoinedMonoid) -> Alphabets {
    let (m, green) = (b.monoid(), b.green());
    let delta = 2 * b.max_height() + 2;
    let mut sets: Vec<BTreeSet<Symbol>> = vec![BTreeSet::from([Symbol::Down]); delta];
    for x in m.elements() {
        let k = b.height(x);
        let u = u_sets(b, x).u;
        let (jtag, tag) = (green.j_class(x), green.r_class(x));
        let view = b.rees().view(jtag);
        let odd = &mut sets[2 * k];
        if u[0] || u[1] {
            odd.extend(view.rows.iter().map(|&row| Symbol::Row { tag: jtag, row }));
        }
        if u[1] {
            odd.extend(b.local_sets(x).a_prime.iter().map(|&row| Symbol::RowStar { tag: jtag, row }));
        }
        let even = &mut sets[2 * k + 1];
        let q = q_of_rstar(b, x);
        for g in 0..view.group_order() {
            if u[2] || u[3] {
                even.insert(Symbol::Group { tag, g });
            }
            if u[2] || u[4] {
                even.extend(q.iter().map(|&lclass| Symbol::GroupQ { tag, g, lclass }));
            }
        }
    }
    let levels: Vec<Vec<Symbol>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
    let index = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, &s)| (s, i as u16)).collect())
        .collect();
    Alphabets { levels, index }
}

/// The labeling `f` of the tree of `H_Y`, with the element deciding the
/// branching of each vertex.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `labels[v]` for every non-root vertex; the root holds `Down`.
    pub labels: Vec<Symbol>,
    /// For branching vertices, `m_l` or, in the `U_4` case, `m_{l-1}`.
    pub pivot: Vec<Option<ElementId>>,
}

/// The element `(1, 1, b)` of the J-class containing the L-class `b`.
fn corner(b: &AdjoinedMonoid, lclass: usize) -> ElementId {
    let green = b.green();
    let view = b.rees().view(green.j_class(green.l_members(lclass)[0]));
    view.element(Coord {
        row: 0,
        group: 0,
        col: b.rees().col_position(lclass),
    })
}

fn with_leftmost(head: &[ElementId], tail: &[ElementId]) -> Vec<ElementId> {
    head.iter().chain(tail).copied().collect()
}

/// How a branching vertex gets its sons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branching {
    /// Even depth, the leftmost term in `U_0 ∪ U_1`.
    Rows,
    /// Odd depth, the leftmost term in `U_2 ∪ U_3`.
    Group,
    /// Odd depth, the term below the leftmost in `U_4`.
    Below,
}

/// Sons of the vertex with minimal representation `terms` (bottom-up) at
/// depth `n`, as candidate chains with their labels; `None` when no
/// branching case applies.
fn son_candidates(
    b: &AdjoinedMonoid,
    terms: &[ElementId],
    n: usize,
) -> Option<(ElementId, Branching, Vec<(Vec<ElementId>, Symbol)>)> {
    let (m, green, rees) = (b.monoid(), b.green(), b.rees());
    let l = terms.len() - 1;
    let k = n / 2;
    let ml = terms[l];
    let encode_at = |chain: &[ElementId], i: usize| {
        if i == 0 {
            chain[0]
        } else {
            m.mul(chain[i], rees.star(chain[i - 1]))
        }
    };
    let mut out = Vec::new();
    if n % 2 == 0 {
        let u = u_sets(b, ml).u;
        if b.height(ml) != k || !(u[0] || u[1]) {
            return None;
        }
        let tag = green.j_class(ml);
        let view = rees.view(tag);
        let c = rees.coord(ml);
        for row in 0..view.rows.len() {
            let r = view.element(Coord { row, ..c });
            out.push((with_leftmost(&terms[..l], &[r]), Symbol::Row { tag, row: view.rows[row] }));
            if u[1] {
                if let Some(gamma) = b.local_sets(r).gamma {
                    let label = Symbol::RowStar { tag, row: view.rows[row] };
                    out.push((with_leftmost(&terms[..l], &[r, gamma]), label));
                }
            }
        }
        return Some((ml, Branching::Rows, out));
    }
    let u = u_sets(b, ml).u;
    if b.height(ml) == k && (u[2] || u[3]) {
        let tag = green.r_class(ml);
        for &r in green.h_members(green.h_class(ml)) {
            let chain = with_leftmost(&terms[..l], &[r]);
            let g1 = rees.coord(encode_at(&chain, l)).group;
            out.push((chain.clone(), Symbol::Group { tag, g: g1 }));
            if u[2] {
                for lclass in b.local_sets(r).q_classes {
                    let longer = with_leftmost(&chain, &[corner(b, lclass)]);
                    let b2 = green.l_class(encode_at(&longer, l + 1));
                    out.push((longer, Symbol::GroupQ { tag, g: g1, lclass: b2 }));
                }
            }
        }
        return Some((ml, Branching::Group, out));
    }
    if l >= 2 {
        let prev = terms[l - 1];
        if b.height(prev) == k && u_sets(b, prev).u[4] {
            let tag = green.r_class(prev);
            for &r in green.h_members(green.h_class(prev)) {
                for lclass in b.local_sets(r).q_classes {
                    let chain = with_leftmost(&terms[..l - 1], &[r, corner(b, lclass)]);
                    let g1 = rees.coord(encode_at(&chain, l - 1)).group;
                    let b2 = green.l_class(encode_at(&chain, l));
                    out.push((chain, Symbol::GroupQ { tag, g: g1, lclass: b2 }));
                }
            }
            return Some((prev, Branching::Below, out));
        }
    }
    None
}

/// The label set a branching vertex must carry, from the pivot alone.
fn expected_labels(b: &AdjoinedMonoid, pivot: ElementId, case: Branching) -> BTreeSet<Symbol> {
    let (green, rees) = (b.green(), b.rees());
    let u = u_sets(b, pivot).u;
    let view = rees.view(green.j_class(pivot));
    let mut out = BTreeSet::new();
    if case == Branching::Rows {
        let tag = green.j_class(pivot);
        out.extend(view.rows.iter().map(|&row| Symbol::Row { tag, row }));
        if u[1] {
            out.extend(b.local_sets(pivot).a_prime.iter().map(|&row| Symbol::RowStar { tag, row }));
        }
        return out;
    }
    let tag = green.r_class(pivot);
    let q = q_of_rstar(b, pivot);
    let own = case == Branching::Group;
    for g in 0..view.group_order() {
        if own {
            out.insert(Symbol::Group { tag, g });
        }
        if (own && u[2]) || !own {
            out.extend(q.iter().map(|&lclass| Symbol::GroupQ { tag, g, lclass }));
        }
    }
    out
}

pub fn label_tree(
    b: &AdjoinedMonoid,
    rh: &RhodesMonoid,
    ch: &ChiswellTree,
) -> Result<Labeling, WreathError> {
    let t = ch.tree();
    let green = b.green();
    let mut labels = vec![Symbol::Down; t.len()];
    let mut pivot = vec![None; t.len()];
    for v in 0..t.len() {
        let kids = t.children(v);
        if kids.is_empty() {
            continue;
        }
        let n = t.depth(v);
        let rep = minimal_representation(ch, rh, n, ch.rep(v))?;
        let Some((piv, case, cands)) = son_candidates(b, rep.terms(), n) else {
            if kids.len() != 1 {
                return Err(WreathError::NoLabelCase { vertex: v });
            }
            labels[kids[0]] = Symbol::Down;
            continue;
        };
        let mut assigned: BTreeMap<usize, Symbol> = BTreeMap::new();
        for (terms, label) in &cands {
            let chain = LChain::from_terms(b.monoid(), green, terms.clone())
                .map_err(|_| WreathError::NoLabelCase { vertex: v })?;
            let id = rh.id_of(&chain).ok_or(WreathError::NoLabelCase { vertex: v })?;
            let son = ch.vertex(n + 1, id);
            if let Some(&old) = assigned.get(&son) {
                if old != *label {
                    return Err(WreathError::InconsistentLabel { vertex: son });
                }
            }
            assigned.insert(son, *label);
        }
        let found: Vec<usize> = assigned.keys().copied().collect();
        if found != kids || found.len() != cands.len() {
            return Err(WreathError::SonCount {
                vertex: v,
                expected: cands.len(),
                found: kids.len(),
            });
        }
        let got: BTreeSet<Symbol> = assigned.values().copied().collect();
        if got.len() != kids.len() || got != expected_labels(b, piv, case) {
            return Err(WreathError::UnexpectedLabels { vertex: v });
        }
        for (son, label) in assigned {
            labels[son] = label;
        }
        pivot[v] = Some(piv);
    }
    Ok(Labeling { labels, pivot })
}

/// Everything produced by the embedding, kept for verification.
#[derive(Debug, Clone)]
pub struct ZeigerEmbedding {
    pub base: AdjoinedMonoid,
    pub rh: RhodesMonoid,
    pub h: LengthTable,
    pub tree: ChiswellTree,
    pub alphabets: Alphabets,
    pub labeling: Labeling,
    /// `ψ(v)` for every vertex.
    pub psi: Vec<Tuple>,
    /// `φ_σ` indexed by the element ids of `rh`.
    pub maps: Vec<SequentialMap>,
}

pub fn zeiger_embed(b: &AdjoinedMonoid) -> Result<ZeigerEmbedding, WreathError> {
    let rh = RhodesMonoid::cut_to_generators(b);
    let h = h_table(&rh, b);
    let tree = chiswell_build(rh.monoid(), &h)?;
    let alphabets = build_alphabets(b);
    let labeling = label_tree(b, &rh, &tree)?;
    let t = tree.tree();
    if t.height() != alphabets.depth() {
        return Err(WreathError::AlphabetMismatch);
    }
    let mut psi: Vec<Tuple> = vec![Vec::new(); t.len()];
    for v in 0..t.len() {
        for &c in t.children(v) {
            let pos = alphabets
                .position(t.depth(c), labeling.labels[c])
                .ok_or(WreathError::AlphabetMismatch)?;
            let mut x = psi[v].clone();
            x.push(pos);
            psi[c] = x;
        }
    }
    let chi = tree.chi();
    let identity = rh.monoid().identity();
    let maps = (0..rh.len())
        .map(|s| {
            if s == identity {
                return SequentialMap::Identity;
            }
            let mut pairs: BTreeMap<Tuple, Tuple> =
                (0..t.len()).map(|v| (psi[v].clone(), psi[chi.act(v, s)].clone())).collect();
            for u in 0..t.len() {
                let images: BTreeSet<usize> = t.children(u).iter().map(|&c| chi.act(c, s)).collect();
                if images.len() <= 1 {
                    continue;
                }
                let used: BTreeSet<u16> = t.children(u).iter().map(|&c| *psi[c].last().unwrap()).collect();
                let level = t.depth(u) + 1;
                for x in 0..alphabets.level(level).len() as u16 {
                    if used.contains(&x) {
                        continue;
                    }
                    let mut from = psi[u].clone();
                    from.push(x);
                    let mut to = psi[chi.act(u, s)].clone();
                    to.push(x);
                    pairs.insert(from, to);
                }
            }
            SequentialMap::Partial(pairs)
        })
        .collect();
    Ok(ZeigerEmbedding {
        base: b.clone(),
        rh,
        h,
        tree,
        alphabets,
        labeling,
        psi,
        maps,
    })
}

/// Outcome of one verification step; `Err` carries a witness.
pub type Check = Result<(), String>;

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub checks: Vec<(&'static str, Check)>,
    /// Size of each generated local monoid `M_i`.
    pub local_monoid_sizes: Vec<usize>,
    /// Non-identity permutations in each `M_i`, levels with none omitted.
    pub permutation_counts: Vec<(usize, usize)>,
    /// Branching vertices whose son maps were checked.
    pub branching_vertices: usize,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.is_ok())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

fn is_partial_identity(f: &LocalMap) -> bool {
    f.iter().enumerate().all(|(i, y)| y.is_none_or(|v| v as usize == i))
}

impl ZeigerEmbedding {
    pub fn sizes(&self) -> Vec<usize> {
        self.alphabets.sizes()
    }

    pub fn depth(&self) -> usize {
        self.alphabets.depth()
    }

    /// Runs every check; `recover` compares the induced length function with
    /// `H_Y`.
    pub fn verify(&self, recover: bool) -> EmbeddingReport {
        let sizes = self.sizes();
        let mut checks = Vec::new();
        checks.push(("sequential", self.check_sequential(&sizes)));
        checks.push(("homomorphism", self.check_homomorphism(&sizes)));
        checks.push(("injective", self.check_injective(&sizes)));
        checks.push(("sons", self.check_sons()));
        let (local, monoid_sizes, perms) = self.check_local_monoids(&sizes);
        checks.push(("local monoids", local));
        checks.push(("Zeiger", self.check_zeiger(&sizes)));
        if recover {
            checks.push(("recover", self.check_recover(&sizes)));
        }
        EmbeddingReport {
            checks,
            local_monoid_sizes: monoid_sizes,
            permutation_counts: perms,
            branching_vertices: self.labeling.pivot.iter().flatten().count(),
        }
    }

    fn name(&self, s: usize) -> String {
        self.rh.chain(s).display(self.base.monoid())
    }

    fn check_sequential(&self, sizes: &[usize]) -> Check {
        for (s, phi) in self.maps.iter().enumerate() {
            phi.check_sequential(sizes)
                .map_err(|e| format!("φ of {}: {e}", self.name(s)))?;
        }
        Ok(())
    }

    fn check_homomorphism(&self, sizes: &[usize]) -> Check {
        for a in 0..self.maps.len() {
            for c in 0..self.maps.len() {
                let lhs = self.maps[a].compose(&self.maps[c]);
                if !lhs.same_as(&self.maps[self.rh.mul(a, c)], sizes) {
                    return Err(format!("φ({})φ({}) differs from φ of the product", self.name(a), self.name(c)));
                }
            }
        }
        Ok(())
    }

    fn check_injective(&self, sizes: &[usize]) -> Check {
        for a in 0..self.maps.len() {
            for c in a + 1..self.maps.len() {
                if self.maps[a].same_as(&self.maps[c], sizes) {
                    return Err(format!("{} and {} have the same image", self.name(a), self.name(c)));
                }
            }
        }
        Ok(())
    }

    /// `|Sons(v)σ| > 1` exactly when the pivot times the leftmost term of
    /// `σ` stays in the R-class of the pivot.
    fn check_sons(&self) -> Check {
        let (m, green) = (self.base.monoid(), self.base.green());
        let t = self.tree.tree();
        let chi = self.tree.chi();
        for v in 0..t.len() {
            let Some(p) = self.labeling.pivot[v] else { continue };
            for s in 0..self.rh.len() {
                let images: BTreeSet<usize> = t.children(v).iter().map(|&c| chi.act(c, s)).collect();
                let stays = green.r_eq(m.mul(p, self.rh.chain(s).leftmost()), p);
                if (images.len() > 1) != stays {
                    return Err(format!("vertex {v} under {}", self.name(s)));
                }
                if stays && images.len() != t.children(v).len() {
                    return Err(format!("sons of vertex {v} collapse under {}", self.name(s)));
                }
            }
        }
        Ok(())
    }

    fn local_maps(&self, sizes: &[usize]) -> Vec<BTreeSet<LocalMap>> {
        let mut out: Vec<BTreeSet<LocalMap>> = vec![BTreeSet::new(); sizes.len()];
        for (i, &n) in sizes.iter().enumerate() {
            out[i].insert((0..n as u16).map(Some).collect());
        }
        for phi in &self.maps {
            let SequentialMap::Partial(graph) = phi else { continue };
            for p in graph.keys().filter(|p| p.len() < sizes.len()) {
                out[p.len()].insert(phi.local_component(sizes, p));
            }
        }
        out
    }

    fn check_local_monoids(&self, sizes: &[usize]) -> (Check, Vec<usize>, Vec<(usize, usize)>) {
        let generated = self.local_maps(sizes);
        let mut monoid_sizes = Vec::new();
        let mut perms = Vec::new();
        let mut result = Ok(());
        for (i, gens) in generated.iter().enumerate() {
            let level = i + 1;
            let mut closure: BTreeSet<LocalMap> = gens.clone();
            closure.insert(vec![None; sizes[i]]);
            let mut frontier: Vec<LocalMap> = closure.iter().cloned().collect();
            while let Some(f) = frontier.pop() {
                for g in gens {
                    let fg = compose_local(&f, g);
                    if closure.insert(fg.clone()) {
                        frontier.push(fg);
                    }
                }
            }
            monoid_sizes.push(closure.len());
            let moving = closure.iter().filter(|f| is_permutation(f) && !is_identity(f)).count();
            if moving > 0 {
                perms.push((level, moving));
            }
            for f in &closure {
                let ok = if level % 2 == 1 {
                    is_identity(f) || is_constant(f)
                } else {
                    is_permutation(f) || is_constant(f)
                };
                if !ok && result.is_ok() {
                    result = Err(format!("level {level}: local map {f:?}"));
                }
                if level % 2 == 0 && is_permutation(f) && !is_constant(f) && result.is_ok() {
                    if let Err(e) = self.check_translation(level, f, true) {
                        result = Err(e);
                    }
                }
            }
            for f in gens {
                if level % 2 == 0 && is_permutation(f) && !is_constant(f) && result.is_ok() {
                    if let Err(e) = self.check_translation(level, f, false) {
                        result = Err(e);
                    }
                }
            }
        }
        (result, monoid_sizes, perms)
    }

    /// A local permutation fixes `Down`, keeps tags and second components,
    /// and multiplies group coordinates on the right by one `g_0` per block.
    /// A block is a tag, split into its `(g, ∗)` and `(g, b)` letters when the
    /// R-class lies outside `W`: those two halves are permuted from different
    /// vertices and move independently. Generated maps move at most one block.
    fn check_translation(&self, level: usize, f: &LocalMap, many_blocks: bool) -> Check {
        let green = self.base.green();
        let letters = self.alphabets.level(level);
        let mut g0: BTreeMap<(usize, u8), usize> = BTreeMap::new();
        let fail = || Err(format!("level {level}: permutation {f:?} is not a block translation"));
        for (j, y) in f.iter().enumerate() {
            let (from, to) = (letters[j], letters[y.unwrap() as usize]);
            let (tag, g, h) = match (from, to) {
                (Symbol::Down, Symbol::Down) => continue,
                (Symbol::Group { tag, g }, Symbol::Group { tag: t2, g: h }) if tag == t2 => (tag, g, h),
                (
                    Symbol::GroupQ { tag, g, lclass },
                    Symbol::GroupQ { tag: t2, g: h, lclass: l2 },
                ) if tag == t2 && lclass == l2 => (tag, g, h),
                _ => return fail(),
            };
            let rep = green.r_members(tag)[0];
            let view = self.base.rees().view(green.j_class(rep));
            let Some(x) = (0..view.group_order()).find(|&x| view.group_mul(g, x) == h) else {
                return fail();
            };
            let half = match from {
                _ if self.base.in_w(rep) => 0,
                Symbol::Group { .. } => 1,
                _ => 2,
            };
            if *g0.entry((tag, half)).or_insert(x) != x {
                return fail();
            }
        }
        if !many_blocks && g0.values().filter(|&&x| x != 0).count() > 1 {
            return fail();
        }
        Ok(())
    }

    /// Whenever the level `2k+2` local map at a prefix is a non-constant
    /// permutation, every local map at an extension of that prefix of
    /// length up to `δ - 1` fixes each point where it is defined.
    fn check_zeiger(&self, sizes: &[usize]) -> Check {
        let delta = sizes.len();
        for (s, phi) in self.maps.iter().enumerate() {
            let SequentialMap::Partial(graph) = phi else { continue };
            for p in graph.keys().filter(|p| p.len() % 2 == 1 && p.len() < delta) {
                let xi = phi.local_component(sizes, p);
                if !is_permutation(&xi) || is_constant(&xi) {
                    continue;
                }
                for q in graph.range(p.clone()..).map(|(q, _)| q).take_while(|q| q.starts_with(p)) {
                    if q.len() <= p.len() || q.len() >= delta {
                        continue;
                    }
                    let deeper = phi.local_component(sizes, q);
                    if !is_partial_identity(&deeper) {
                        return Err(format!("{} at prefix {q:?} below {p:?}", self.name(s)));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_recover(&self, sizes: &[usize]) -> Check {
        let d = wreath_length_table(&self.maps, sizes);
        for a in 0..self.maps.len() {
            for c in 0..self.maps.len() {
                if d.get(a, c) != self.h.get(a, c) {
                    return Err(format!(
                        "D({}, {}) = {} but H = {}",
                        self.name(a),
                        self.name(c),
                        d.get(a, c),
                        self.h.get(a, c)
                    ));
                }
            }
        }
        Ok(())
    }

    /// The Zeiger encoding of each chain of `Rh_Y`, leftmost first.
    pub fn encodings(&self) -> Vec<Vec<ElementId>> {
        self.rh
            .chains()
            .iter()
            .map(|c| {
                let mut e = zeiger_encode(self.base.monoid(), self.base.rees(), c);
                e.reverse();
                e
            })
            .collect()
    }
}
