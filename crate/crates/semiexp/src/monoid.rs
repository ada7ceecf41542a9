//! Finite monoids given by a dense Cayley table.
//!
//! Elements are plain indices. Products are read off the table with the
//! left factor selecting the row. Transformation monoids act on the right,
//! so `x(fg) = (xf)g`.

use std::collections::{HashMap, VecDeque};

use crate::error::MonoidError;

/// Index of an element inside one particular [`FiniteMonoid`].
pub type ElementId = usize;

/// A distinguished generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    pub element: ElementId,
}

/// A finite monoid with a Cayley table and an ordered list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<ElementId>,
    identity: ElementId,
    generators: Vec<Generator>,
    names: Vec<String>,
}

impl FiniteMonoid {
    /// Closes a set of transformations of `0..domain_size` under composition.
    ///
    /// Element 0 is the identity map; the others appear in breadth-first
    /// order, trying generators in the order given.
    pub fn from_generators(
        domain_size: usize,
        gens: &[(String, Vec<usize>)],
    ) -> Result<Self, MonoidError> {
        if domain_size == 0 && gens.is_empty() {
            return Err(MonoidError::EmptyDomain);
        }
        for (label, images) in gens {
            if images.len() != domain_size {
                return Err(MonoidError::ImageLength {
                    label: label.clone(),
                    expected: domain_size,
                    found: images.len(),
                });
            }
            if let Some((position, &value)) =
                images.iter().enumerate().find(|(_, &v)| v >= domain_size)
            {
                return Err(MonoidError::ImageOutOfRange {
                    label: label.clone(),
                    position,
                    value,
                    domain: domain_size,
                });
            }
        }

        let identity: Vec<usize> = (0..domain_size).collect();
        let mut maps = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, ElementId> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (_, g) in gens {
                let image: Vec<usize> = maps[e].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&image) {
                    index.insert(image.clone(), maps.len());
                    queue.push_back(maps.len());
                    maps.push(image);
                }
            }
        }

        let size = maps.len();
        let mut table = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let image: Vec<usize> = maps[a].iter().map(|&x| maps[b][x]).collect();
                table[a * size + b] = index[&image];
            }
        }
        let generators = gens
            .iter()
            .map(|(label, images)| Generator {
                label: label.clone(),
                element: index[images],
            })
            .collect();
        let names = maps.iter().map(|m| transformation_name(m)).collect();
        Ok(FiniteMonoid {
            size,
            table,
            identity: 0,
            generators,
            names,
        })
    }

    /// Builds a monoid from an explicit table, checking the monoid laws and
    /// that a non-empty generator list really generates.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        identity: usize,
        generators: Vec<(String, usize)>,
    ) -> Result<Self, MonoidError> {
        let size = table.len();
        if size == 0 {
            return Err(MonoidError::EmptyTable);
        }
        let mut flat = Vec::with_capacity(size * size);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != size {
                return Err(MonoidError::NotSquare {
                    row,
                    expected: size,
                    found: entries.len(),
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= size {
                    return Err(MonoidError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        size,
                    });
                }
                flat.push(value);
            }
        }
        if identity >= size {
            return Err(MonoidError::IdentityOutOfRange(identity));
        }
        let generators = generators
            .into_iter()
            .map(|(label, element)| {
                if element >= size {
                    Err(MonoidError::GeneratorOutOfRange { label, element })
                } else {
                    Ok(Generator { label, element })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let names = (0..size)
            .map(|e| if e == identity { "1".to_string() } else { format!("e{e}") })
            .collect();
        let monoid = FiniteMonoid {
            size,
            table: flat,
            identity,
            generators,
            names,
        };
        monoid.validate()?;
        Ok(monoid)
    }

    /// Assembles a monoid from a table known to be a monoid, e.g. one
    /// computed from an already verified construction.
    pub(crate) fn from_parts(
        table: Vec<ElementId>,
        identity: ElementId,
        generators: Vec<Generator>,
        names: Vec<String>,
    ) -> Self {
        let size = names.len();
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid {
            size,
            table,
            identity,
            generators,
            names,
        }
    }

    /// Checks associativity, the identity laws and generation.
    pub fn validate(&self) -> Result<(), MonoidError> {
        let n = self.size;
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(MonoidError::IdentityLaw(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(MonoidError::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        if !self.generators.is_empty() {
            let reached = self.generated_from_identity();
            if let Some(missing) = (0..n).find(|&e| !reached[e]) {
                return Err(MonoidError::NotGenerated(missing));
            }
        }
        Ok(())
    }

    /// Returns `M^I`: a copy with a brand new identity `I` appended as the
    /// last element. Generators carry over; `I` is not one of them.
    pub fn adjoin_identity(&self) -> FiniteMonoid {
        let n = self.size;
        let big = n + 1;
        let top = n;
        let mut table = vec![0; big * big];
        for a in 0..big {
            for b in 0..big {
                table[a * big + b] = if a == top {
                    b
                } else if b == top {
                    a
                } else {
                    self.mul(a, b)
                };
            }
        }
        let mut names = self.names.clone();
        names.push("I".to_string());
        FiniteMonoid {
            size: big,
            table,
            identity: top,
            generators: self.generators.clone(),
            names,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<ElementId> {
        self.generators.iter().map(|g| g.element).collect()
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.size + b]
    }

    /// Product of a word, the empty word giving the identity.
    pub fn product<I: IntoIterator<Item = ElementId>>(&self, word: I) -> ElementId {
        word.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size);
        self.names = names;
        self
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, e: ElementId) -> bool {
        self.mul(e, e) == e
    }

    /// `a^{n+1} = a^n` for some `n`.
    pub fn is_aperiodic_element(&self, a: ElementId) -> bool {
        // the powers of a enter a cycle after at most `size` steps
        let mut x = self.pow(a, self.size);
        let y = self.mul(x, a);
        if y == x {
            return true;
        }
        x = y;
        self.mul(x, a) == x
    }

    pub fn is_aperiodic(&self) -> bool {
        self.elements().all(|a| self.is_aperiodic_element(a))
    }

    /// Elements reachable from the identity by right multiplication with
    /// generators.
    pub fn generated_from_identity(&self) -> Vec<bool> {
        let mut seen = vec![false; self.size];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = self.mul(x, g.element);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Generators padded with whatever elements they miss, so that Cayley
    /// graph searches reach every element.
    pub fn spanning_set(&self) -> Vec<ElementId> {
        let mut span = self.generator_elements();
        let mut seen = vec![false; self.size];
        let mut queue = VecDeque::new();
        seen[self.identity] = true;
        queue.push_back(self.identity);
        loop {
            while let Some(x) = queue.pop_front() {
                for &g in &span {
                    let y = self.mul(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            match (0..self.size).find(|&e| !seen[e]) {
                Some(e) => {
                    span.push(e);
                    for x in 0..self.size {
                        if seen[x] {
                            queue.push_back(x);
                        }
                    }
                }
                None => return span,
            }
        }
    }

    /// Checks that `map` (indexed by elements of `self`) is a monoid
    /// homomorphism into `target`.
    pub fn check_homomorphism(
        &self,
        target: &FiniteMonoid,
        map: &[ElementId],
    ) -> Result<(), MonoidError> {
        if map.len() != self.size {
            return Err(MonoidError::MapLength {
                expected: self.size,
                found: map.len(),
            });
        }
        if let Some(&value) = map.iter().find(|&&v| v >= target.size) {
            return Err(MonoidError::MapOutOfRange { value });
        }
        if map[self.identity] != target.identity {
            return Err(MonoidError::IdentityNotPreserved);
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(MonoidError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }
}

/// Whether every preimage of an aperiodic element of `target` is aperiodic.
pub fn is_aperiodic_morphism(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    map: &[ElementId],
) -> Result<bool, MonoidError> {
    source.check_homomorphism(target, map)?;
    Ok(source
        .elements()
        .all(|a| !target.is_aperiodic_element(map[a]) || source.is_aperiodic_element(a)))
}

fn transformation_name(images: &[usize]) -> String {
    if images.len() <= 9 {
        images.iter().map(|x| char::from(b'1' + *x as u8)).collect()
    } else {
        let parts: Vec<String> = images.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}
