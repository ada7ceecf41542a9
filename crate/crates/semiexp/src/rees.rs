//! Rees matrix coordinates of the J-classes of a stable monoid.
//!
//! Every J-class `J` gets coordinates `A × G × B`, where `A` lists the
//! R-classes of `J`, `B` the L-classes and `G` is the Schützenberger group
//! of a fixed H-class. Choices are always the least element satisfying the
//! defining equation, so the result is deterministic.

use std::collections::BTreeSet;

use crate::error::ReesError;
use crate::green::{stability_witness, GreenData};
use crate::monoid::{ElementId, FiniteMonoid};

/// Local coordinates `(a, g, b)` inside one J-class. Index 0 is the
/// distinguished row, group identity and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub row: usize,
    pub group: usize,
    pub col: usize,
}

/// Coordinatization of a single J-class.
#[derive(Debug, Clone)]
pub struct ReesView {
    pub jclass: usize,
    /// The fixed element `h0`, the least element of the class.
    pub base: ElementId,
    /// R-class ids, the one containing `base` first.
    pub rows: Vec<usize>,
    /// L-class ids, the one containing `base` first.
    pub cols: Vec<usize>,
    /// The H-class of `base`; group element `g` is represented by `group[g]`.
    pub group: Vec<ElementId>,
    group_table: Vec<usize>,
    /// Entry `[b][a]` of the sandwich matrix, `None` standing for 0.
    pub sandwich: Vec<Vec<Option<usize>>>,
    pub row_rep: Vec<ElementId>,
    pub col_rep: Vec<ElementId>,
    pub row_in: Vec<ElementId>,
    pub row_out: Vec<ElementId>,
    pub col_in: Vec<ElementId>,
    pub col_out: Vec<ElementId>,
    /// `lift[g]` satisfies `base * lift[g] = group[g]`.
    pub lift: Vec<ElementId>,
    elements: Vec<ElementId>,
}

impl ReesView {
    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    pub fn group_mul(&self, g: usize, h: usize) -> usize {
        self.group_table[g * self.group.len() + h]
    }

    pub fn element(&self, c: Coord) -> ElementId {
        let (ng, nb) = (self.group.len(), self.cols.len());
        self.elements[(c.row * ng + c.group) * nb + c.col]
    }

    /// Whether the sandwich matrix has a non-zero entry, i.e. the class is
    /// regular.
    pub fn is_regular(&self) -> bool {
        self.sandwich.iter().flatten().any(|c| c.is_some())
    }
}

/// Data attached to an element for the alphabet construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSets {
    /// Generators `y` with `ym <_L m`.
    pub strict_gens: Vec<ElementId>,
    /// Global L-class ids of the products `ym`, `y` ranging over `strict_gens`.
    pub q_classes: Vec<usize>,
    /// R-class ids `a'` of the J-class of `m` with a non-empty generator set
    /// at `(a', g, b)`.
    pub a_prime: Vec<usize>,
    /// Least element of `strict_gens · m`.
    pub gamma: Option<ElementId>,
}

/// Coordinates of every J-class plus the star and sharp maps.
#[derive(Debug, Clone)]
pub struct Coordinatization {
    views: Vec<ReesView>,
    coord: Vec<Coord>,
    row_pos: Vec<usize>,
    col_pos: Vec<usize>,
    star: Vec<ElementId>,
    sharp: Vec<ElementId>,
}

fn least<F: Fn(ElementId) -> bool>(n: usize, pred: F) -> Option<ElementId> {
    (0..n).find(|&x| pred(x))
}

impl Coordinatization {
    pub fn build(m: &FiniteMonoid, green: &GreenData) -> Result<Self, ReesError> {
        if let Some((a, x)) = stability_witness(m, green) {
            return Err(ReesError::NotStable { a, x });
        }
        let n = m.size();
        let mut row_pos = vec![usize::MAX; green.r_count()];
        let mut col_pos = vec![usize::MAX; green.l_count()];
        let mut h_pos = vec![usize::MAX; n];
        for h in 0..green.h_count() {
            for (i, &x) in green.h_members(h).iter().enumerate() {
                h_pos[x] = i;
            }
        }
        let mut coord = vec![
            Coord {
                row: 0,
                group: 0,
                col: 0
            };
            n
        ];
        let mut views = Vec::with_capacity(green.j_count());

        for j in 0..green.j_count() {
            let members = green.j_members(j);
            let base = members[0];
            let mut rows = vec![green.r_class(base)];
            let mut cols = vec![green.l_class(base)];
            for &x in members {
                if !rows.contains(&green.r_class(x)) {
                    rows.push(green.r_class(x));
                }
                if !cols.contains(&green.l_class(x)) {
                    cols.push(green.l_class(x));
                }
            }
            for (i, &r) in rows.iter().enumerate() {
                row_pos[r] = i;
            }
            for (i, &l) in cols.iter().enumerate() {
                col_pos[l] = i;
            }
            let missing = |anchor| ReesError::MissingAnchor { jclass: j, anchor };

            let row_rep = rows
                .iter()
                .map(|&r| {
                    members
                        .iter()
                        .copied()
                        .find(|&x| green.r_class(x) == r && green.l_eq(x, base))
                        .ok_or_else(|| missing("row representative"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let col_rep = cols
                .iter()
                .map(|&l| {
                    members
                        .iter()
                        .copied()
                        .find(|&x| green.l_class(x) == l && green.r_eq(x, base))
                        .ok_or_else(|| missing("column representative"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let row_in = row_rep
                .iter()
                .map(|&r| least(n, |x| m.mul(x, r) == base).ok_or_else(|| missing("row in")))
                .collect::<Result<Vec<_>, _>>()?;
            let row_out = row_rep
                .iter()
                .map(|&r| least(n, |x| m.mul(x, base) == r).ok_or_else(|| missing("row out")))
                .collect::<Result<Vec<_>, _>>()?;
            let col_in = col_rep
                .iter()
                .map(|&c| least(n, |x| m.mul(c, x) == base).ok_or_else(|| missing("column in")))
                .collect::<Result<Vec<_>, _>>()?;
            let col_out = col_rep
                .iter()
                .map(|&c| least(n, |x| m.mul(base, x) == c).ok_or_else(|| missing("column out")))
                .collect::<Result<Vec<_>, _>>()?;

            let group: Vec<ElementId> = green.h_members(green.h_class(base)).to_vec();
            let lift = group
                .iter()
                .map(|&h| least(n, |x| m.mul(base, x) == h).ok_or_else(|| missing("lift")))
                .collect::<Result<Vec<_>, _>>()?;
            let ng = group.len();
            let mut group_table = vec![0; ng * ng];
            for g in 0..ng {
                for h in 0..ng {
                    let p = m.mul(group[g], lift[h]);
                    if !green.h_eq(p, base) {
                        return Err(ReesError::NotBijective { jclass: j });
                    }
                    group_table[g * ng + h] = h_pos[p];
                }
            }

            let (na, nb) = (rows.len(), cols.len());
            let mut elements = vec![usize::MAX; na * ng * nb];
            for &u in members {
                let a = row_pos[green.r_class(u)];
                let b = col_pos[green.l_class(u)];
                let h = m.mul(m.mul(row_in[a], u), col_in[b]);
                if !green.h_eq(h, base) {
                    return Err(ReesError::NotBijective { jclass: j });
                }
                let c = Coord {
                    row: a,
                    group: h_pos[h],
                    col: b,
                };
                let slot = &mut elements[(a * ng + c.group) * nb + b];
                if *slot != usize::MAX {
                    return Err(ReesError::NotBijective { jclass: j });
                }
                *slot = u;
                coord[u] = c;
            }
            if elements.contains(&usize::MAX) {
                return Err(ReesError::NotBijective { jclass: j });
            }

            let mut view = ReesView {
                jclass: j,
                base,
                rows,
                cols,
                group,
                group_table,
                sandwich: Vec::new(),
                row_rep,
                col_rep,
                row_in,
                row_out,
                col_in,
                col_out,
                lift,
                elements,
            };
            view.sandwich = (0..nb)
                .map(|b| {
                    (0..na)
                        .map(|a| {
                            let p = m.mul(
                                view.element(Coord { row: 0, group: 0, col: b }),
                                view.element(Coord { row: a, group: 0, col: 0 }),
                            );
                            green.j_eq(p, base).then(|| coord[p].group)
                        })
                        .collect()
                })
                .collect();
            for &u in members {
                for &v in members {
                    let (cu, cv) = (coord[u], coord[v]);
                    let uv = m.mul(u, v);
                    match view.sandwich[cu.col][cv.row] {
                        Some(c) => {
                            let g = view.group_mul(view.group_mul(cu.group, c), cv.group);
                            let expected = Coord {
                                row: cu.row,
                                group: g,
                                col: cv.col,
                            };
                            if !green.j_eq(uv, base) || coord[uv] != expected {
                                return Err(ReesError::ProductLaw { u, v });
                            }
                        }
                        None => {
                            if green.j_eq(uv, base) {
                                return Err(ReesError::ProductLaw { u, v });
                            }
                        }
                    }
                }
            }
            views.push(view);
        }

        let mut star = vec![0; n];
        let mut sharp = vec![0; n];
        for x in 0..n {
            let view = &views[green.j_class(x)];
            let target = view.element(Coord {
                row: coord[x].row,
                group: 0,
                col: 0,
            });
            star[x] = least(n, |y| m.mul(x, y) == target).ok_or(ReesError::NoStar(x))?;
            sharp[x] = least(n, |y| m.mul(target, y) == x).ok_or(ReesError::NoStar(x))?;
        }

        Ok(Coordinatization {
            views,
            coord,
            row_pos,
            col_pos,
            star,
            sharp,
        })
    }

    pub fn views(&self) -> &[ReesView] {
        &self.views
    }

    pub fn view(&self, jclass: usize) -> &ReesView {
        &self.views[jclass]
    }

    pub fn coord(&self, x: ElementId) -> Coord {
        self.coord[x]
    }

    /// Position of an R-class inside the row list of its J-class.
    pub fn row_position(&self, rclass: usize) -> usize {
        self.row_pos[rclass]
    }

    pub fn col_position(&self, lclass: usize) -> usize {
        self.col_pos[lclass]
    }

    pub fn star(&self, x: ElementId) -> ElementId {
        self.star[x]
    }

    pub fn sharp(&self, x: ElementId) -> ElementId {
        self.sharp[x]
    }

    /// The element `g0` such that right multiplication by `v` acts on the
    /// group coordinates of the H-class of `u` as `h ↦ h g0`.
    pub fn schutz_translation(
        &self,
        m: &FiniteMonoid,
        green: &GreenData,
        u: ElementId,
        v: ElementId,
    ) -> Result<usize, ReesError> {
        let uv = m.mul(u, v);
        if !green.r_eq(uv, u) {
            return Err(ReesError::NotRightStable { u, v });
        }
        let view = &self.views[green.j_class(u)];
        let cu = self.coord[u];
        let at = |h: usize| {
            let x = view.element(Coord { group: h, ..cu });
            self.coord[m.mul(x, v)].group
        };
        let g0 = at(0);
        for h in 0..view.group_order() {
            if at(h) != view.group_mul(h, g0) {
                return Err(ReesError::NotTranslation { v });
            }
        }
        Ok(g0)
    }

    /// `Y_m`, `Q_m`, `A'_m` and `γ_m` for the generator set `gens`.
    pub fn local_sets(
        &self,
        m: &FiniteMonoid,
        green: &GreenData,
        gens: &[ElementId],
        x: ElementId,
    ) -> LocalSets {
        let strict = |x: ElementId| -> BTreeSet<ElementId> {
            gens.iter()
                .copied()
                .filter(|&y| green.lt_l(m.mul(y, x), x))
                .collect()
        };
        let strict_gens = strict(x);
        let q_classes: BTreeSet<usize> = strict_gens
            .iter()
            .map(|&y| green.l_class(m.mul(y, x)))
            .collect();
        let view = &self.views[green.j_class(x)];
        let c = self.coord[x];
        let a_prime = view
            .rows
            .iter()
            .enumerate()
            .filter(|&(a, _)| !strict(view.element(Coord { row: a, ..c })).is_empty())
            .map(|(_, &r)| r)
            .collect();
        let gamma = strict_gens.iter().map(|&y| m.mul(y, x)).min();
        LocalSets {
            strict_gens: strict_gens.into_iter().collect(),
            q_classes: q_classes.into_iter().collect(),
            a_prime,
            gamma,
        }
    }
}
