//! The Rhodes expansion of `M^I`, its cut-down to generators, and the
//! Zeiger encoding of L-chains into J-chains.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::error::ExpansionError;
use crate::green::GreenData;
use crate::monoid::{ElementId, FiniteMonoid, Generator};
use crate::rees::Coordinatization;
use crate::structure::AdjoinedMonoid;

/// A strict L-chain `m_k <_L ... <_L m_1 <_L m_0 = I`.
///
/// Terms are stored from the bottom: `term(0)` is `I` and `leftmost()` is
/// `m_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LChain(Vec<ElementId>);

impl Ord for LChain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for LChain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LChain {
    /// The trivial chain `(I)`.
    pub fn trivial(top: ElementId) -> Self {
        LChain(vec![top])
    }

    /// Validates terms given bottom-up, starting with the identity.
    pub fn from_terms(
        m: &FiniteMonoid,
        green: &GreenData,
        terms: Vec<ElementId>,
    ) -> Result<Self, ExpansionError> {
        if terms.first() != Some(&m.identity()) {
            return Err(ExpansionError::MissingIdentity);
        }
        for i in 1..terms.len() {
            if !green.lt_l(terms[i], terms[i - 1]) {
                return Err(ExpansionError::NotDescending { position: i });
            }
        }
        Ok(LChain(terms))
    }

    /// `(x <_L I)`.
    pub fn single(top: ElementId, x: ElementId) -> Self {
        if x == top {
            LChain(vec![top])
        } else {
            LChain(vec![top, x])
        }
    }

    /// Number of terms above `I`, the `k` in `m_k <_L ... <_L m_0`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn term(&self, i: usize) -> ElementId {
        self.0[i]
    }

    pub fn terms(&self) -> &[ElementId] {
        &self.0
    }

    pub fn leftmost(&self) -> ElementId {
        *self.0.last().expect("chains are never empty")
    }

    /// The suffix `m_i <_L ... <_L m_0`.
    pub fn truncate(&self, i: usize) -> LChain {
        LChain(self.0[..=i].to_vec())
    }

    /// Writes the chain leftmost first, e.g. `r1<1<I`.
    pub fn display(&self, m: &FiniteMonoid) -> String {
        let parts: Vec<&str> = self.0.iter().rev().map(|&x| m.name(x)).collect();
        parts.join("<")
    }
}

/// Keeps the leftmost term of each run of L-equivalent terms of a weak
/// chain given bottom-up.
pub fn lm_reduce(
    m: &FiniteMonoid,
    green: &GreenData,
    weak: &[ElementId],
) -> Result<LChain, ExpansionError> {
    if weak.first() != Some(&m.identity()) {
        return Err(ExpansionError::MissingIdentity);
    }
    let mut out: Vec<ElementId> = Vec::with_capacity(weak.len());
    for (i, &x) in weak.iter().enumerate() {
        if let Some(&last) = out.last() {
            if !green.leq_l(x, last) {
                return Err(ExpansionError::NotDescending { position: i });
            }
            if green.l_eq(x, last) {
                *out.last_mut().unwrap() = x;
                continue;
            }
        }
        out.push(x);
    }
    Ok(LChain(out))
}

/// The product `στ`.
pub fn chain_product(m: &FiniteMonoid, green: &GreenData, s: &LChain, t: &LChain) -> LChain {
    let y = t.leftmost();
    let mut out: Vec<ElementId> = t.0.clone();
    for &x in &s.0[1..] {
        let xy = m.mul(x, y);
        let last = *out.last().unwrap();
        if green.l_eq(xy, last) {
            *out.last_mut().unwrap() = xy;
        } else {
            out.push(xy);
        }
    }
    LChain(out)
}

/// Index `r` of the maximum L-point of agreement and the term `m_r` of `s`.
pub fn wedge_position(green: &GreenData, s: &LChain, t: &LChain) -> usize {
    let lim = s.len().min(t.len());
    let mut r = 0;
    for i in 0..=lim {
        if !green.l_eq(s.0[i], t.0[i]) {
            break;
        }
        r = i;
        if s.0[i] != t.0[i] {
            break;
        }
    }
    r
}

/// `σ ∧_L τ`, taken from `σ`.
pub fn wedge(green: &GreenData, s: &LChain, t: &LChain) -> ElementId {
    s.0[wedge_position(green, s, t)]
}

/// The Zeiger encoding `x_0 = I`, `x_i = m_i m*_{i-1}`, bottom-up.
pub fn zeiger_encode(m: &FiniteMonoid, rees: &Coordinatization, s: &LChain) -> Vec<ElementId> {
    let mut out = vec![m.identity()];
    for i in 1..s.0.len() {
        out.push(m.mul(s.0[i], rees.star(s.0[i - 1])));
    }
    out
}

/// Rebuilds the chain from its encoding via `m_i = x_i m#_{i-1}`.
pub fn zeiger_decode(m: &FiniteMonoid, rees: &Coordinatization, xs: &[ElementId]) -> LChain {
    let mut out = vec![m.identity()];
    for i in 1..xs.len() {
        out.push(m.mul(xs[i], rees.sharp(out[i - 1])));
    }
    LChain(out)
}

/// A finite submonoid of `Rh(M^I)` with its multiplication table.
#[derive(Debug, Clone)]
pub struct RhodesMonoid {
    chains: Vec<LChain>,
    index: HashMap<LChain, usize>,
    table: FiniteMonoid,
}

impl RhodesMonoid {
    fn assemble(
        base: &AdjoinedMonoid,
        mut chains: Vec<LChain>,
        gens: Vec<(String, LChain)>,
    ) -> Self {
        let (m, green) = (base.monoid(), base.green());
        chains.sort();
        chains.dedup();
        let index: HashMap<LChain, usize> =
            chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let n = chains.len();
        let mut table = Vec::with_capacity(n * n);
        for s in &chains {
            for t in &chains {
                table.push(index[&chain_product(m, green, s, t)]);
            }
        }
        let generators = gens
            .into_iter()
            .map(|(label, c)| Generator {
                label,
                element: index[&c],
            })
            .collect();
        let names = chains.iter().map(|c| c.display(m)).collect();
        let identity = index[&LChain::trivial(base.top())];
        RhodesMonoid {
            chains,
            index,
            table: FiniteMonoid::from_parts(table, identity, generators, names),
        }
    }

    /// Every strict L-chain ending at `I`, checked against the submonoid
    /// generated by the chains `(m <_L I)`.
    pub fn full(base: &AdjoinedMonoid) -> Result<Self, ExpansionError> {
        let (m, green) = (base.monoid(), base.green());
        let top = base.top();
        let mut chains = Vec::new();
        let mut stack = vec![vec![top]];
        while let Some(c) = stack.pop() {
            let last = *c.last().unwrap();
            for x in m.elements() {
                if green.lt_l(x, last) {
                    let mut next = c.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
            chains.push(LChain(c));
        }
        let gens: Vec<(String, LChain)> = m
            .elements()
            .filter(|&x| x != top)
            .map(|x| (m.name(x).to_string(), LChain::single(top, x)))
            .collect();
        let generated = closure(base, gens.iter().map(|(_, c)| c.clone()).collect());
        if generated.len() != chains.len() {
            return Err(ExpansionError::GenerationMismatch {
                enumerated: chains.len(),
                generated: generated.len(),
            });
        }
        let rh = Self::assemble(base, chains, gens);
        if generated.iter().any(|c| !rh.index.contains_key(c)) {
            return Err(ExpansionError::GenerationMismatch {
                enumerated: rh.len(),
                generated: generated.len(),
            });
        }
        Ok(rh)
    }

    /// The submonoid generated by `(y <_L I)`, `y` ranging over the
    /// generators of the base.
    pub fn cut_to_generators(base: &AdjoinedMonoid) -> Self {
        let m = base.monoid();
        let top = base.top();
        let gens: Vec<(String, LChain)> = m
            .generators()
            .iter()
            .map(|g| (g.label.clone(), LChain::single(top, g.element)))
            .collect();
        let chains = closure(base, gens.iter().map(|(_, c)| c.clone()).collect());
        Self::assemble(base, chains, gens)
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn chains(&self) -> &[LChain] {
        &self.chains
    }

    pub fn chain(&self, id: usize) -> &LChain {
        &self.chains[id]
    }

    pub fn id_of(&self, c: &LChain) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// The multiplication table as a monoid over chain ids.
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    /// `η`, sending a chain to its leftmost term.
    pub fn eta(&self) -> Vec<ElementId> {
        self.chains.iter().map(|c| c.leftmost()).collect()
    }
}

fn closure(base: &AdjoinedMonoid, gens: Vec<LChain>) -> Vec<LChain> {
    let (m, green) = (base.monoid(), base.green());
    let start = LChain::trivial(base.top());
    let mut seen: HashMap<LChain, ()> = HashMap::new();
    seen.insert(start.clone(), ());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(c) = queue.pop_front() {
        for g in &gens {
            let next = chain_product(m, green, &c, g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
        out.push(c);
    }
    out
}

/// Outcome of checking `x^(p+q) = x^p` on a cut-down Rhodes expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideReport {
    /// A chain violating the identity, if any.
    pub witness: Option<usize>,
    /// Whether `η` is injective on the expansion.
    pub eta_injective: bool,
}

impl BurnsideReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks the identity `x^(p+q) = x^p` on the base first, then on `rh`.
pub fn burnside_identity_check(
    base: &AdjoinedMonoid,
    rh: &RhodesMonoid,
    p: usize,
    q: usize,
) -> Result<BurnsideReport, ExpansionError> {
    let m = base.monoid();
    if let Some(witness) = m.elements().find(|&x| m.pow(x, p + q) != m.pow(x, p)) {
        return Err(ExpansionError::BurnsideBase { witness });
    }
    let r = rh.monoid();
    let witness = r.elements().find(|&s| r.pow(s, p + q) != r.pow(s, p));
    let mut eta = rh.eta();
    eta.sort_unstable();
    eta.dedup();
    Ok(BurnsideReport {
        witness,
        eta_injective: eta.len() == rh.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip_flop() -> AdjoinedMonoid {
        let m = FiniteMonoid::from_generators(
            2,
            &[("r1".into(), vec![0, 0]), ("r2".into(), vec![1, 1])],
        )
        .unwrap();
        AdjoinedMonoid::new(&m).unwrap()
    }

    // elements of flip-flop^I: 0 = 1, 1 = r1, 2 = r2, 3 = I
    fn ch(base: &AdjoinedMonoid, leftmost_first: &[usize]) -> LChain {
        let mut t: Vec<usize> = leftmost_first.to_vec();
        t.reverse();
        LChain::from_terms(base.monoid(), base.green(), t).unwrap()
    }

    #[test]
    fn products_in_flip_flop() {
        let b = flip_flop();
        let (m, g) = (b.monoid(), b.green());
        assert_eq!(
            chain_product(m, g, &ch(&b, &[1, 3]), &ch(&b, &[2, 3])),
            ch(&b, &[2, 3])
        );
        assert_eq!(
            chain_product(m, g, &ch(&b, &[1, 3]), &ch(&b, &[0, 3])),
            ch(&b, &[1, 0, 3])
        );
        let weak = [3, 2, 2];
        assert_eq!(lm_reduce(m, g, &weak).unwrap(), ch(&b, &[2, 3]));
        assert!(lm_reduce(m, g, &[3, 1, 0]).is_err());
    }

    #[test]
    fn rhodes_sizes() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        assert_eq!(rh.len(), 6);
        rh.monoid().validate().unwrap();
        let rhy = RhodesMonoid::cut_to_generators(&b);
        assert!(rhy.len() <= 6);
        for c in rhy.chains() {
            assert!(rh.id_of(c).is_some());
        }
        let trivial = FiniteMonoid::from_table(vec![vec![0]], 0, vec![]).unwrap();
        let tb = AdjoinedMonoid::new(&trivial).unwrap();
        assert_eq!(RhodesMonoid::full(&tb).unwrap().len(), 2);
    }

    #[test]
    fn wedges() {
        let b = flip_flop();
        let g = b.green();
        assert_eq!(wedge(g, &ch(&b, &[1, 0, 3]), &ch(&b, &[2, 0, 3])), 0);
        assert_eq!(wedge(g, &ch(&b, &[1, 3]), &ch(&b, &[0, 3])), 3);
        let s = ch(&b, &[1, 0, 3]);
        assert_eq!(wedge(g, &s, &s), 1);
    }

    #[test]
    fn encoding_round_trip() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        for c in rh.chains() {
            let xs = zeiger_encode(b.monoid(), b.rees(), c);
            assert_eq!(zeiger_decode(b.monoid(), b.rees(), &xs), *c);
            for i in 1..xs.len() {
                assert!(b.green().lt_j(xs[i], xs[i - 1]));
            }
        }
    }

    #[test]
    fn burnside_on_flip_flop() {
        let b = flip_flop();
        let rhy = RhodesMonoid::cut_to_generators(&b);
        assert!(burnside_identity_check(&b, &rhy, 1, 1).unwrap().holds());
    }
}
