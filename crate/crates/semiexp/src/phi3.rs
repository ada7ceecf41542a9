//! The three-factor expansion: a word `m_1 ... m_k` is replaced by the set
//! of all its splittings into three consecutive factors.
//!
//! Triples live in `M^I`, where the adjoined identity stands for the empty
//! factor. The empty word gives the identity `{(I, I, I)}`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::MonoidError;
use crate::green::GreenData;
use crate::monoid::{ElementId, FiniteMonoid, Generator};

pub type Triple = [ElementId; 3];

/// A finite submonoid of the three-factor expansion with identity adjoined.
#[derive(Debug, Clone)]
pub struct Phi3Monoid {
    base: FiniteMonoid,
    elements: Vec<Vec<Triple>>,
    table: FiniteMonoid,
    eta: Vec<ElementId>,
}

impl Phi3Monoid {
    /// Generated by `F_3(m)` for every element `m` of `m`.
    pub fn full(m: &FiniteMonoid) -> Self {
        let letters: Vec<(String, ElementId)> = m
            .elements()
            .map(|x| (m.name(x).to_string(), x))
            .collect();
        Self::generated(m, letters)
    }

    /// Generated by `F_3(y)` for the generators `y` of `m`.
    pub fn cut_to_generators(m: &FiniteMonoid) -> Self {
        let letters = m
            .generators()
            .iter()
            .map(|g| (g.label.clone(), g.element))
            .collect();
        Self::generated(m, letters)
    }

    fn generated(m: &FiniteMonoid, letters: Vec<(String, ElementId)>) -> Self {
        let base = m.adjoin_identity();
        let top = base.identity();
        let single = |y: ElementId| -> Vec<Triple> {
            let set: BTreeSet<Triple> = [[y, top, top], [top, y, top], [top, top, y]].into();
            set.into_iter().collect()
        };
        let gens: Vec<Vec<Triple>> = letters.iter().map(|&(_, y)| single(y)).collect();
        let start = vec![[top, top, top]];
        let mut index: HashMap<Vec<Triple>, usize> = HashMap::new();
        let mut elements = vec![start.clone()];
        index.insert(start, 0);
        // right Cayley graph plus, for each element, the BFS edge reaching it
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut reached_by: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (k, g) in gens.iter().enumerate() {
                let next = product(&base, &elements[i], g);
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        index.insert(next.clone(), j);
                        queue.push_back(j);
                        elements.push(next);
                        reached_by.push(Some((i, k)));
                        j
                    }
                };
                row.push(j);
            }
            right.push(row);
        }
        let n = elements.len();
        let mut table = vec![0usize; n * n];
        for u in 0..n {
            let row = &mut table[u * n..(u + 1) * n];
            row[0] = u;
            for v in 1..n {
                let (p, k) = reached_by[v].expect("only the identity has no BFS parent");
                row[v] = right[row[p]][k];
            }
        }
        let generators = letters
            .iter()
            .zip(&gens)
            .map(|((label, _), g)| Generator {
                label: label.clone(),
                element: index[g],
            })
            .collect();
        let names = (0..n)
            .map(|i| if i == 0 { "F()".to_string() } else { format!("F{i}") })
            .collect();
        let eta = elements
            .iter()
            .map(|u| {
                let [p, q, r] = u[0];
                base.mul(base.mul(p, q), r)
            })
            .collect();
        Phi3Monoid {
            base,
            elements,
            table: FiniteMonoid::from_parts(table, 0, generators, names),
            eta,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The triple set of an element, sorted.
    pub fn triples(&self, id: usize) -> &[Triple] {
        &self.elements[id]
    }

    pub fn id_of(&self, triples: &[Triple]) -> Option<usize> {
        self.elements.iter().position(|u| u == triples)
    }

    /// `M^I`, the codomain of the projection.
    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.table
    }

    /// The projection sending `F_3(m_1, ..., m_k)` to `m_1 ... m_k`.
    pub fn eta(&self) -> &[ElementId] {
        &self.eta
    }

    pub fn check_eta(&self) -> Result<(), MonoidError> {
        self.table.check_homomorphism(&self.base, &self.eta)
    }

    /// For every element, the number of elements J-above it.
    pub fn j_above_counts(&self) -> Vec<usize> {
        let green = GreenData::compute(&self.table);
        self.table
            .elements()
            .map(|x| self.table.elements().filter(|&y| green.leq_j(x, y)).count())
            .collect()
    }
}

/// Product of two triple sets, computed from the splittings of the
/// concatenated word.
pub fn product(base: &FiniteMonoid, u: &[Triple], v: &[Triple]) -> Vec<Triple> {
    let top = base.identity();
    let total = |t: &Triple| base.mul(base.mul(t[0], t[1]), t[2]);
    let ubar = total(&u[0]);
    let vbar = total(&v[0]);
    let mut out = BTreeSet::new();
    for &[p, q, r] in u {
        out.insert([p, q, base.mul(r, vbar)]);
    }
    for &[p, q, r] in v {
        out.insert([base.mul(ubar, p), q, r]);
    }
    for &[p, q, r] in u {
        if r != top {
            continue;
        }
        for &[p2, q2, r2] in v {
            if p2 == top {
                out.insert([p, base.mul(q, q2), r2]);
            }
        }
    }
    out.into_iter().collect()
}
