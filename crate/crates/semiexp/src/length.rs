//! Length functions, the associated quasi-ultrametrics, and weight
//! functions on the J-poset.

use std::fmt;

use crate::error::LengthError;
use crate::green::GreenData;
use crate::monoid::FiniteMonoid;

/// A natural number or `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Omega,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Omega => None,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Finite(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Omega => write!(f, "ω"),
        }
    }
}

/// A square table of values indexed by the elements of a finite monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTable {
    n: usize,
    values: Vec<ExtNat>,
}

impl LengthTable {
    pub fn from_fn<F: FnMut(usize, usize) -> ExtNat>(n: usize, mut f: F) -> Self {
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push(f(a, b));
            }
        }
        LengthTable { n, values }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> ExtNat {
        self.values[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: ExtNat) {
        self.values[a * self.n + b] = v;
    }

    /// The largest entry `l`.
    pub fn max(&self) -> ExtNat {
        self.values.iter().copied().max().unwrap_or(ExtNat::Finite(0))
    }

    /// Entries as plain integers, failing on `ω`.
    pub fn finite_rows(&self) -> Result<Vec<Vec<u64>>, LengthError> {
        (0..self.n)
            .map(|a| {
                (0..self.n)
                    .map(|b| self.get(a, b).finite().ok_or(LengthError::Unbounded))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    L1,
    L2,
    L3,
    L4,
    L5,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::L1 => "L1",
            Axiom::L2 => "L2",
            Axiom::L3 => "L3",
            Axiom::L4 => "L4",
            Axiom::L5 => "L5",
        }
    }
}

/// First failing triple `(m, m', m'')` for each violated axiom.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<(Axiom, [usize; 3])>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: Axiom) -> Option<[usize; 3]> {
        self.failures.iter().find(|f| f.0 == axiom).map(|f| f.1)
    }
}

/// Checks the length axioms exhaustively, quantifying the translating
/// element over the monoid itself.
///
/// * L1: `D(m', m'') = D(m'', m')`
/// * L2: `D(m', m'') <= D(m, m)`
/// * L3: `D(m', m'') <= D(m'm, m''m)`
/// * L4: `D(m, m'') >= min(D(m, m'), D(m', m''))`
/// * L5: `D(m', m'') = D(m, m)` only if `m' = m''`
pub fn check_length_axioms(table: &LengthTable, m: &FiniteMonoid, strict: bool) -> AxiomReport {
    let n = table.size();
    let d = |a, b| table.get(a, b);
    let mut report = AxiomReport::default();
    let record = |axiom: Axiom, w: [usize; 3], report: &mut AxiomReport| {
        if report.failed(axiom).is_none() {
            report.failures.push((axiom, w));
        }
    };
    for a in 0..n {
        for b in 0..n {
            if d(a, b) != d(b, a) {
                record(Axiom::L1, [a, a, b], &mut report);
            }
        }
    }
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                let dab = d(a, b);
                if dab > d(x, x) {
                    record(Axiom::L2, [x, a, b], &mut report);
                }
                if dab > d(m.mul(a, x), m.mul(b, x)) {
                    record(Axiom::L3, [x, a, b], &mut report);
                }
                if d(x, b) < d(x, a).min(dab) {
                    record(Axiom::L4, [x, a, b], &mut report);
                }
                if strict && a != b && dab == d(x, x) {
                    record(Axiom::L5, [x, a, b], &mut report);
                }
            }
        }
    }
    report
}

/// `d(m, m') = 2l - 2D(m, m')`.
pub fn quasi_ultrametric(table: &LengthTable) -> Result<Vec<Vec<u64>>, LengthError> {
    let rows = table.finite_rows()?;
    let l = rows.iter().flatten().copied().max().unwrap_or(0);
    Ok(rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| 2 * l - 2 * v).collect())
        .collect())
}

/// Which quasi-ultrametric properties hold, with witnesses.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MetricReport {
    pub symmetric: Option<(usize, usize)>,
    pub zero_diagonal: Option<usize>,
    pub ultrametric: Option<(usize, usize, usize)>,
    pub contraction: Option<(usize, usize, usize)>,
}

impl MetricReport {
    pub fn is_ok(&self) -> bool {
        *self == MetricReport::default()
    }
}

/// Symmetry, zero diagonal, the ultrametric inequality and right
/// contraction `d(m'm, m''m) <= d(m', m'')`.
pub fn check_quasi_ultrametric(d: &[Vec<u64>], m: &FiniteMonoid) -> MetricReport {
    let n = d.len();
    let mut r = MetricReport::default();
    for a in 0..n {
        if d[a][a] != 0 && r.zero_diagonal.is_none() {
            r.zero_diagonal = Some(a);
        }
        for b in 0..n {
            if d[a][b] != d[b][a] && r.symmetric.is_none() {
                r.symmetric = Some((a, b));
            }
            for c in 0..n {
                if d[a][c] > d[a][b].max(d[b][c]) && r.ultrametric.is_none() {
                    r.ultrametric = Some((a, b, c));
                }
                if d[m.mul(a, c)][m.mul(b, c)] > d[a][b] && r.contraction.is_none() {
                    r.contraction = Some((c, a, b));
                }
            }
        }
    }
    r
}

/// The J-classes of a monoid ordered by `<=_J`, with the identity class on
/// top.
#[derive(Debug, Clone)]
pub struct ClassPoset {
    top: usize,
    above: Vec<Vec<bool>>,
    covers: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl ClassPoset {
    pub fn from_green(green: &GreenData) -> Self {
        let n = green.j_count();
        let above: Vec<Vec<bool>> = (0..n)
            .map(|c| (0..n).map(|d| green.j_class_below(c, d)).collect())
            .collect();
        let covers = (0..n).map(|c| green.upper_covers(c).to_vec()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&c| above[c].iter().filter(|&&b| b).count());
        ClassPoset {
            top: green.top_class(),
            above,
            covers,
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `lower < upper`.
    pub fn below(&self, lower: usize, upper: usize) -> bool {
        self.above[lower][upper]
    }

    pub fn covers(&self, class: usize) -> &[usize] {
        &self.covers[class]
    }

    /// Classes listed so that every class comes after all classes above it.
    pub fn top_down(&self) -> &[usize] {
        &self.order
    }
}

/// `h_w(p)`: the heaviest chain from `p` up to the top.
pub fn dedekind_forward(poset: &ClassPoset, w: &[u64]) -> Result<Vec<u64>, LengthError> {
    if w.len() != poset.len() {
        return Err(LengthError::WrongLength {
            expected: poset.len(),
            found: w.len(),
        });
    }
    if w[poset.top()] != 0 {
        return Err(LengthError::NonZeroAtIdentity);
    }
    let mut h = vec![0u64; w.len()];
    for &c in poset.top_down() {
        let best = poset.covers(c).iter().map(|&d| h[d]).max().unwrap_or(0);
        h[c] = w[c] + best;
    }
    Ok(h)
}

/// Recovers the weight function from an order-reversing `h` with
/// `h(top) = 0`.
pub fn dedekind_inverse(poset: &ClassPoset, h: &[u64]) -> Result<Vec<u64>, LengthError> {
    if h.len() != poset.len() {
        return Err(LengthError::WrongLength {
            expected: poset.len(),
            found: h.len(),
        });
    }
    if h[poset.top()] != 0 {
        return Err(LengthError::NonZeroAtIdentity);
    }
    for lower in 0..h.len() {
        for upper in 0..h.len() {
            if poset.below(lower, upper) && h[lower] < h[upper] {
                return Err(LengthError::NotOrderReversing { lower, upper });
            }
        }
    }
    Ok((0..h.len())
        .map(|c| {
            let best = poset.covers(c).iter().map(|&d| h[d]).max().unwrap_or(0);
            h[c] - best
        })
        .collect())
}

/// Lifts a function on J-classes to elements.
pub fn on_elements(green: &GreenData, per_class: &[u64]) -> Vec<u64> {
    (0..green.size()).map(|x| per_class[green.j_class(x)]).collect()
}

/// Checks `f(1) = 0` and `f(m'mm'') >= f(m)`.
pub fn check_j_preserving(m: &FiniteMonoid, f: &[u64]) -> Result<(), LengthError> {
    if f.len() != m.size() {
        return Err(LengthError::WrongLength {
            expected: m.size(),
            found: f.len(),
        });
    }
    if f[m.identity()] != 0 {
        return Err(LengthError::NonZeroAtIdentity);
    }
    for left in m.elements() {
        for middle in m.elements() {
            let lm = m.mul(left, middle);
            for right in m.elements() {
                if f[m.mul(lm, right)] < f[middle] {
                    return Err(LengthError::NotJPreserving {
                        left,
                        middle,
                        right,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The J-height of each element, as an integer-valued function.
pub fn j_height_function(green: &GreenData) -> Vec<u64> {
    (0..green.size()).map(|x| green.j_height(x) as u64).collect()
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

    /// Oracle: enumerate every strict chain from `c` up to the top.
    fn brute_h(poset: &ClassPoset, w: &[u64], c: usize) -> u64 {
        let ups: Vec<usize> = (0..poset.len()).filter(|&d| poset.below(c, d)).collect();
        w[c] + ups.iter().map(|&d| brute_h(poset, w, d)).max().unwrap_or(0)
    }

    #[test]
    fn degenerate_strict_table() {
        let m = flip_flop_i();
        let t = LengthTable::from_fn(4, |a, b| ExtNat::Finite(u64::from(a == b)));
        assert!(check_length_axioms(&t, &m, true).is_ok());
        let d = quasi_ultrametric(&t).unwrap();
        assert_eq!(d[0][1], 2);
        assert_eq!(d[2][2], 0);
        assert!(check_quasi_ultrametric(&d, &m).is_ok());
    }

    #[test]
    fn symmetry_failure_is_reported() {
        let m = flip_flop_i();
        let mut t = LengthTable::from_fn(4, |a, b| ExtNat::Finite(u64::from(a == b)));
        t.set(0, 1, ExtNat::Finite(1));
        let r = check_length_axioms(&t, &m, false);
        assert!(r.failed(Axiom::L1).is_some());
    }

    #[test]
    fn dedekind_on_flip_flop() {
        let m = flip_flop_i();
        let g = GreenData::compute(&m);
        let p = ClassPoset::from_green(&g);
        // classes: {1}, {r1, r2}, {I}
        let (one, r, top) = (g.j_class(0), g.j_class(1), g.j_class(3));
        let mut w = vec![0; 3];
        w[one] = 2;
        w[r] = 3;
        let h = dedekind_forward(&p, &w).unwrap();
        assert_eq!((h[r], h[one], h[top]), (5, 2, 0));
        assert_eq!(dedekind_inverse(&p, &h).unwrap(), w);
        for c in 0..3 {
            assert_eq!(h[c], brute_h(&p, &w, c));
        }
        let unit: Vec<u64> = (0..3).map(|c| u64::from(c != top)).collect();
        let hj = dedekind_forward(&p, &unit).unwrap();
        assert_eq!(on_elements(&g, &hj), j_height_function(&g));
        check_j_preserving(&m, &j_height_function(&g)).unwrap();
    }

    #[test]
    fn omega_orders_last() {
        assert!(ExtNat::Omega > ExtNat::Finite(u64::MAX));
    }
}
