//! Finite integer combinations of cells and of tensor words.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cell::Cell;

pub type Coeff = BigInt;

/// A finite formal sum `Σ c_b · b` with nonzero integer coefficients, kept in
/// canonical (sorted) order of the basis elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

/// An element of the cellular chains `C∗`.
pub type ChainElement = Combination<Cell>;

/// An element of a tensor power `C∗^{⊗k}`.
pub type TensorElement = Combination<TensorWord>;

impl<B: Ord> Default for Combination<B> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Coeff::one())
    }

    pub fn term(b: B, c: impl Into<Coeff>) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coeff> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &Coeff) {
        if scale.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &Coeff) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, scale);
        out
    }

    /// Relabels basis elements through `f`, merging coefficients of elements
    /// that land on the same image.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> Combination<C> {
        self.terms.iter().map(|(b, c)| (f(b), c.clone())).collect()
    }

    /// The reduction to `Z₂`: odd coefficients become 1, even ones vanish.
    pub fn mod2(&self) -> Self {
        self.terms
            .iter()
            .filter(|(_, c)| c.bit(0))
            .map(|(b, _)| (b.clone(), Coeff::one()))
            .collect()
    }

    pub fn is_zero_mod2(&self) -> bool {
        self.terms.values().all(|c| !c.bit(0))
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&B, &Coeff) -> bool) {
        self.terms.retain(|b, c| keep(b, c));
    }

    /// Largest absolute coefficient, zero for the zero element.
    pub fn max_abs_coeff(&self) -> Coeff {
        self.terms
            .values()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

impl<B: Ord + Clone> FromIterator<(B, Coeff)> for Combination<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a Combination<B> {
    type Item = (&'a B, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, B, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&Combination<B>> for Combination<B> {
    fn add_assign(&mut self, rhs: &Combination<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&Combination<B>> for Combination<B> {
    fn sub_assign(&mut self, rhs: &Combination<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> Add for Combination<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for Combination<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for Combination<B> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl ChainElement {
    /// Common dimension of the cells, `None` for the zero element or a
    /// non-homogeneous sum.
    pub fn dim(&self) -> Option<u8> {
        let mut dims = self.support().map(Cell::dim);
        let first = dims.next()?;
        dims.all(|d| d == first).then_some(first)
    }

    /// Views a chain as a combination of one-letter words.
    pub fn to_tensor(&self) -> TensorElement {
        self.map_basis(|c| TensorWord::single(c.clone()))
    }
}

impl TensorElement {
    /// Inverse of [`ChainElement::to_tensor`]; `None` if some word is longer
    /// than one letter.
    pub fn to_chain(&self) -> Option<ChainElement> {
        let mut out = ChainElement::zero();
        for (w, c) in self {
            if w.len() != 1 {
                return None;
            }
            out.add_term(w.factors[0].clone(), c.clone());
        }
        Some(out)
    }

    /// Common word length, `None` for zero or mixed lengths.
    pub fn arity(&self) -> Option<usize> {
        let mut lens = self.support().map(TensorWord::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.support().map(TensorWord::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Terms whose word mentions `cell` in any position.
    pub fn terms_containing(&self, cell: &Cell) -> TensorElement {
        self.iter()
            .filter(|(w, _)| w.factors.contains(cell))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }
}

/// A tensor word `x₁ ⊗ x₂ ⊗ ⋯ ⊗ x_k` of cells; its degree is the sum of the
/// cell dimensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord {
    factors: Vec<Cell>,
}

impl TensorWord {
    /// Returns `None` for the empty word.
    pub fn new(factors: Vec<Cell>) -> Option<Self> {
        (!factors.is_empty()).then_some(TensorWord { factors })
    }

    pub fn single(cell: Cell) -> Self {
        TensorWord {
            factors: alloc::vec![cell],
        }
    }

    pub fn factors(&self) -> &[Cell] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|c| i64::from(c.dim())).sum()
    }

    /// Degree of the factors strictly before position `j`.
    pub fn prefix_degree(&self, j: usize) -> i64 {
        self.factors[..j].iter().map(|c| i64::from(c.dim())).sum()
    }

    /// Replaces the factor at `j` by the letters of `middle`.
    pub(crate) fn splice(&self, j: usize, middle: &TensorWord) -> TensorWord {
        let mut factors = Vec::with_capacity(self.len() + middle.len() - 1);
        factors.extend_from_slice(&self.factors[..j]);
        factors.extend_from_slice(&middle.factors);
        factors.extend_from_slice(&self.factors[j + 1..]);
        TensorWord { factors }
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Terms print in canonical order with an explicit sign, e.g.
/// `+v1⊗P +P⊗v5 -2·e1⊗e3`; the zero element prints as `0`.
impl<B: Ord + fmt::Display> fmt::Display for Combination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c.is_negative() { "-" } else { "+" })?;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for Combination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a word from cells; panics on an empty list.
pub fn word<I: IntoIterator<Item = Cell>>(cells: I) -> TensorWord {
    TensorWord::new(cells.into_iter().collect()).expect("tensor words are nonempty")
}
