//! Small monoids used throughout the tests and the acceptance suite.

use crate::monoid::FiniteMonoid;

fn transformations(domain: usize, gens: &[(&str, &[usize])]) -> FiniteMonoid {
    let gens: Vec<(String, Vec<usize>)> = gens
        .iter()
        .map(|(label, images)| (label.to_string(), images.to_vec()))
        .collect();
    FiniteMonoid::from_generators(domain, &gens).expect("fixture is well formed")
}

/// The one-element monoid.
pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::from_table(vec![vec![0]], 0, vec![("e".into(), 0)]).expect("fixture is well formed")
}

/// `{1, r1, r2}` with `x r = r`.
pub fn flip_flop() -> FiniteMonoid {
    transformations(2, &[("r1", &[0, 0]), ("r2", &[1, 1])])
}

pub fn c2() -> FiniteMonoid {
    transformations(2, &[("a", &[1, 0])])
}

pub fn c3() -> FiniteMonoid {
    transformations(3, &[("a", &[1, 2, 0])])
}

/// The 2×2 rectangular band `e_ij e_kl = e_il` with an identity, generated
/// by `e11` and `e22`.
pub fn rectangular_band() -> FiniteMonoid {
    let idx = |i: usize, j: usize| 1 + 2 * i + j;
    let mut table = vec![vec![0; 5]; 5];
    for x in 0..5 {
        table[0][x] = x;
        table[x][0] = x;
    }
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    table[idx(i, j)][idx(k, l)] = idx(i, l);
                }
            }
        }
    }
    FiniteMonoid::from_table(table, 0, vec![("e11".into(), idx(0, 0)), ("e22".into(), idx(1, 1))])
        .expect("fixture is well formed")
        .with_names(["1", "e11", "e12", "e21", "e22"].map(String::from).to_vec())
}

/// The five transformations of `{1, 2, 3, 4}` acting on the leaves of
/// `T(2, 2)`.
pub fn ella() -> FiniteMonoid {
    transformations(
        4,
        &[
            ("b", &[1, 1, 3, 3]),
            ("c", &[2, 3, 2, 3]),
            ("d", &[2, 3, 3, 3]),
            ("e", &[3, 3, 3, 3]),
        ],
    )
}

/// The full transformation monoid of a two-element set.
pub fn t2() -> FiniteMonoid {
    transformations(2, &[("swap", &[1, 0]), ("c0", &[0, 0])])
}

pub fn all() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("trivial", trivial()),
        ("flip-flop", flip_flop()),
        ("C2", c2()),
        ("C3", c3()),
        ("rectangular band", rectangular_band()),
        ("ella", ella()),
        ("T2", t2()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<usize> = all().iter().map(|(_, m)| m.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2, 3, 5, 5, 4]);
        for (_, m) in all() {
            m.validate().unwrap();
        }
    }
}
