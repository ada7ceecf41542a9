//! A monoid with an identity adjoined, bundled with its Green data,
//! J-heights, the W set and its Rees coordinates.

use crate::error::ReesError;
use crate::green::GreenData;
use crate::monoid::{ElementId, FiniteMonoid};
use crate::rees::{Coordinatization, LocalSets};

#[derive(Debug, Clone)]
pub struct AdjoinedMonoid {
    monoid: FiniteMonoid,
    green: GreenData,
    rees: Coordinatization,
    in_w: Vec<bool>,
    gens: Vec<ElementId>,
}

impl AdjoinedMonoid {
    /// Adjoins a fresh identity to `base` and analyzes the result.
    pub fn new(base: &FiniteMonoid) -> Result<Self, ReesError> {
        Self::from_adjoined(base.adjoin_identity())
    }

    /// Analyzes a monoid whose identity already plays the role of `I`.
    pub fn from_adjoined(monoid: FiniteMonoid) -> Result<Self, ReesError> {
        let green = GreenData::compute(&monoid);
        let rees = Coordinatization::build(&monoid, &green)?;
        let in_w = green.w_set();
        let mut gens = monoid.generator_elements();
        gens.sort_unstable();
        gens.dedup();
        Ok(AdjoinedMonoid {
            monoid,
            green,
            rees,
            in_w,
            gens,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn rees(&self) -> &Coordinatization {
        &self.rees
    }

    /// The adjoined identity.
    pub fn top(&self) -> ElementId {
        self.monoid.identity()
    }

    /// Distinct generator elements, sorted.
    pub fn gens(&self) -> &[ElementId] {
        &self.gens
    }

    pub fn height(&self, x: ElementId) -> usize {
        self.green.j_height(x)
    }

    pub fn max_height(&self) -> usize {
        self.green.max_height()
    }

    pub fn in_w(&self, x: ElementId) -> bool {
        self.in_w[x]
    }

    pub fn w_set(&self) -> Vec<ElementId> {
        self.monoid.elements().filter(|&x| self.in_w[x]).collect()
    }

    pub fn local_sets(&self, x: ElementId) -> LocalSets {
        self.rees.local_sets(&self.monoid, &self.green, &self.gens, x)
    }
}
