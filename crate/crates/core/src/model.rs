//! Pluggable group models for the oracle.
//!
//! A model supplies an identity, a right-multiplication-by-letter step and a
//! hashable state that serves as its own canonical key.

use core::fmt::{Debug, Display};
use core::hash::Hash;

use crate::element::{Element, KleinElement, Overflow};
use crate::word::{Letter, Word};

pub trait GroupModel {
    type State: Clone + Eq + Ord + Hash + Debug + Display;

    /// Short identifier used in reports (`ck`, `klein`, `z2`).
    fn name(&self) -> &'static str;

    fn identity(&self) -> Self::State;

    fn step(&self, state: &Self::State, letter: Letter) -> Result<Self::State, Overflow>;

    /// `(k, m, n)` coordinates for export; models without a central
    /// coordinate report `k = 0`.
    fn coordinates(&self, state: &Self::State) -> [i64; 3];

    fn evaluate(&self, w: &Word) -> Result<Self::State, Overflow> {
        w.letters()
            .iter()
            .try_fold(self.identity(), |s, &l| self.step(&s, l))
    }
}

/// The central extension `cK`, states in normal form `(k, m, n)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CkModel;

impl GroupModel for CkModel {
    type State = Element;

    fn name(&self) -> &'static str {
        "ck"
    }

    fn identity(&self) -> Element {
        Element::IDENTITY
    }

    fn step(&self, state: &Element, letter: Letter) -> Result<Element, Overflow> {
        state.step(letter)
    }

    fn coordinates(&self, s: &Element) -> [i64; 3] {
        [s.k, s.m, s.n]
    }
}

/// The Klein bottle group as the semidirect product of Z with Z.
#[derive(Debug, Clone, Copy, Default)]
pub struct KleinModel;

impl GroupModel for KleinModel {
    type State = KleinElement;

    fn name(&self) -> &'static str {
        "klein"
    }

    fn identity(&self) -> KleinElement {
        KleinElement::IDENTITY
    }

    fn step(&self, state: &KleinElement, letter: Letter) -> Result<KleinElement, Overflow> {
        state.step(letter)
    }

    fn coordinates(&self, s: &KleinElement) -> [i64; 3] {
        [0, s.m, s.n]
    }
}

/// Free abelian group on `a`, `b`; control model without dead ends.
#[derive(Debug, Clone, Copy, Default)]
pub struct Z2Model;

impl GroupModel for Z2Model {
    type State = KleinElement;

    fn name(&self) -> &'static str {
        "z2"
    }

    fn identity(&self) -> KleinElement {
        KleinElement::IDENTITY
    }

    fn step(&self, s: &KleinElement, letter: Letter) -> Result<KleinElement, Overflow> {
        let g = Element::generator(letter);
        Ok(KleinElement::new(
            s.m.checked_add(g.m).ok_or(Overflow)?,
            s.n.checked_add(g.n).ok_or(Overflow)?,
        ))
    }

    fn coordinates(&self, s: &KleinElement) -> [i64; 3] {
        [0, s.m, s.n]
    }
}
