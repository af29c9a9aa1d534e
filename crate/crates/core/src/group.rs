//! Finite groups materialized as Cayley tables.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{compose, Perm};

/// Default bound on the closure size in [`GroupTable::from_generators`].
pub const DEFAULT_MAX_GROUP_ORDER: usize = 2048;

/// A finite permutation group with full multiplication and inverse tables.
///
/// Elements are indexed in breadth-first discovery order from the identity,
/// so index 0 is always the identity. `mul(a, b)` is the index of `a ∘ b`
/// (`b` acts first), matching [`compose`].
#[derive(Clone, Debug)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Perm>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    lookup: HashMap<Perm, usize>,
}

impl GroupTable {
    /// Closes `gens` under composition. An empty generator list gives the
    /// trivial group.
    pub fn from_generators(gens: &[Perm], degree: usize, max_order: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        // parent[b] = (a, s) with elements[b] = elements[a] ∘ gens[s]
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);

        while let Some(cur) = queue.pop_front() {
            for (s, gen) in gens.iter().enumerate() {
                let next = compose(&elements[cur], gen)?;
                if lookup.contains_key(&next) {
                    continue;
                }
                if elements.len() >= max_order {
                    return Err(Error::GroupTooLarge { limit: max_order });
                }
                lookup.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
                parent.push(Some((cur, s)));
            }
        }

        let n = elements.len();
        let generators: Vec<usize> = gens.iter().map(|g| lookup[g]).collect();

        // right[e * k + s] = index of elements[e] ∘ gens[s]
        let k = gens.len();
        let mut right = vec![0u32; n * k];
        for e in 0..n {
            for (s, gen) in gens.iter().enumerate() {
                right[e * k + s] = lookup[&compose(&elements[e], gen)?] as u32;
            }
        }

        // Fill column b from its BFS parent: a ∘ (p ∘ s) = (a ∘ p) ∘ s.
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, s) = parent[b].expect("non-identity elements have a parent");
            for a in 0..n {
                let ap = mul[a * n + p] as usize;
                mul[a * n + b] = right[ap * k + s];
            }
        }

        let inv = elements
            .iter()
            .map(|p| lookup[&p.inverse()] as u32)
            .collect();

        Ok(GroupTable {
            degree,
            elements,
            mul,
            inv,
            generators,
            lookup,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(&[], degree, 1).expect("trivial group always fits")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// Element indices of the generators, in input order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ h g`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// The element `gens[w0] ∘ gens[w1] ∘ …`; the empty word is the identity.
    pub fn word(&self, word: &[usize]) -> Result<usize> {
        let mut acc = 0;
        for &s in word {
            let g = *self.generators.get(s).ok_or(Error::ElementOutOfRange {
                element: s,
                order: self.generators.len(),
            })?;
            acc = self.mul(acc, g);
        }
        Ok(acc)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                order: self.order(),
            })
        }
    }
}
