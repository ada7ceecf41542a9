//! Length functions on the Rhodes expansion: the holonomy length function
//! of a J-preserving map and the refined length function `H`.

use crate::error::LengthError;
use crate::length::{check_j_preserving, ExtNat, LengthTable};
use crate::rhodes::{chain_product, wedge, wedge_position, LChain, RhodesMonoid};
use crate::structure::AdjoinedMonoid;

/// `f(σ ∧_L τ)` off the diagonal and `1 + max f` on it.
pub fn holonomy_table(
    rh: &RhodesMonoid,
    base: &AdjoinedMonoid,
    f: &[u64],
) -> Result<LengthTable, LengthError> {
    check_j_preserving(base.monoid(), f)?;
    let top = f.iter().copied().max().unwrap_or(0) + 1;
    let green = base.green();
    Ok(LengthTable::from_fn(rh.len(), |a, b| {
        if a == b {
            ExtNat::Finite(top)
        } else {
            ExtNat::Finite(f[wedge(green, rh.chain(a), rh.chain(b))])
        }
    }))
}

/// Membership in `V(M^I)`, decided from the wedge position alone.
pub fn v_related(base: &AdjoinedMonoid, s: &LChain, t: &LChain) -> bool {
    let green = base.green();
    let i = wedge_position(green, s, t);
    let (a, b) = (s.term(i), t.term(i));
    if !green.r_eq(a, b) {
        return false;
    }
    let (k, l) = (s.len(), t.len());
    (i == k && i == l)
        || (i < k && i < l)
        || (i == k && k < l && base.in_w(a))
        || (i == l && l < k && base.in_w(b))
}

/// Membership in `V(M^I)` by quantifying over every left translation
/// `ρ ∈ Rh(M^I)`. Meant as a cross-check for [`v_related`].
pub fn v_related_exhaustive(
    base: &AdjoinedMonoid,
    full: &RhodesMonoid,
    s: &LChain,
    t: &LChain,
) -> bool {
    let (m, green) = (base.monoid(), base.green());
    let meet = wedge(green, s, t);
    full.chains().iter().all(|r| {
        let rs = chain_product(m, green, r, s);
        let rt = chain_product(m, green, r, t);
        let a = wedge(green, &rs, &rt);
        !green.l_eq(a, meet) || green.r_eq(a, wedge(green, &rt, &rs))
    })
}

/// `H(σ, τ)`.
pub fn h_value(base: &AdjoinedMonoid, s: &LChain, t: &LChain) -> u64 {
    if s == t {
        return 2 * base.max_height() as u64 + 2;
    }
    let meet = wedge(base.green(), s, t);
    2 * base.height(meet) as u64 + u64::from(v_related(base, s, t))
}

/// `H` restricted to the chains of `rh`.
pub fn h_table(rh: &RhodesMonoid, base: &AdjoinedMonoid) -> LengthTable {
    LengthTable::from_fn(rh.len(), |a, b| {
        ExtNat::Finite(h_value(base, rh.chain(a), rh.chain(b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::length::{check_length_axioms, j_height_function};
    use crate::monoid::FiniteMonoid;

    fn flip_flop() -> AdjoinedMonoid {
        let m = FiniteMonoid::from_generators(
            2,
            &[("r1".into(), vec![0, 0]), ("r2".into(), vec![1, 1])],
        )
        .unwrap();
        AdjoinedMonoid::new(&m).unwrap()
    }

    fn ch(b: &AdjoinedMonoid, leftmost_first: &[usize]) -> LChain {
        let mut t = leftmost_first.to_vec();
        t.reverse();
        LChain::from_terms(b.monoid(), b.green(), t).unwrap()
    }

    #[test]
    fn flip_flop_values() {
        let b = flip_flop();
        assert_eq!(h_value(&b, &ch(&b, &[1, 0, 3]), &ch(&b, &[1, 0, 3])), 6);
        assert!(v_related(&b, &ch(&b, &[1, 0, 3]), &ch(&b, &[2, 0, 3])));
        assert_eq!(h_value(&b, &ch(&b, &[1, 0, 3]), &ch(&b, &[2, 0, 3])), 3);
        // wedge at I below both tops
        assert_eq!(h_value(&b, &ch(&b, &[1, 3]), &ch(&b, &[0, 3])), 1);
    }

    #[test]
    fn char_matches_definition_and_tables_are_length_functions() {
        let b = flip_flop();
        let rh = RhodesMonoid::full(&b).unwrap();
        for s in rh.chains() {
            for t in rh.chains() {
                assert_eq!(v_related(&b, s, t), v_related_exhaustive(&b, &rh, s, t));
            }
        }
        let h = h_table(&rh, &b);
        assert!(check_length_axioms(&h, rh.monoid(), true).is_ok());
        let hol = holonomy_table(&rh, &b, &j_height_function(b.green())).unwrap();
        assert!(check_length_axioms(&hol, rh.monoid(), true).is_ok());
        assert_eq!(hol.max(), ExtNat::Finite(3));
    }
}
