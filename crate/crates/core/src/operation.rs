//! Graded maps given by their values on generators, their signed action on
//! a single tensor factor, and the Hom-differential.

use alloc::collections::BTreeMap;
use alloc::format;

use num_traits::One;

use crate::cell::Cell;
use crate::chain::{ChainElement, Coeff, Combination, TensorElement, TensorWord};
use crate::error::{Error, Result};

/// A linear map `C∗ → C∗^{⊗k}` of fixed degree, determined by its values on
/// cells. Cells without a stored value map to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperation {
    degree: i64,
    arity: usize,
    values: BTreeMap<Cell, TensorElement>,
}

impl GradedOperation {
    pub fn new(degree: i64, arity: usize) -> Self {
        assert!(arity >= 1, "operations have at least one output factor");
        GradedOperation {
            degree,
            arity,
            values: BTreeMap::new(),
        }
    }

    /// The boundary operator: degree −1, one output factor.
    pub fn boundary() -> Self {
        GradedOperation::new(-1, 1)
    }

    /// `Δ_k` has degree `k − 2`.
    pub fn diagonal(k: usize) -> Self {
        GradedOperation::new(k as i64 - 2, k)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Stores `f(cell) = value`, checking that every word has the right
    /// length and degree `dim(cell) + |f|`. A zero value removes the entry.
    pub fn set(&mut self, cell: Cell, value: TensorElement) -> Result<()> {
        let expected = i64::from(cell.dim()) + self.degree;
        let ok = value
            .support()
            .all(|w| w.len() == self.arity && w.degree() == expected);
        if !ok {
            return Err(Error::Inhomogeneous {
                cell,
                expected,
                arity: self.arity,
            });
        }
        if value.is_zero() {
            self.values.remove(&cell);
        } else {
            self.values.insert(cell, value);
        }
        Ok(())
    }

    pub fn set_chain(&mut self, cell: Cell, value: ChainElement) -> Result<()> {
        self.set(cell, value.to_tensor())
    }

    pub fn get(&self, cell: &Cell) -> Option<&TensorElement> {
        self.values.get(cell)
    }

    pub fn value(&self, cell: &Cell) -> TensorElement {
        self.values.get(cell).cloned().unwrap_or_default()
    }

    /// The value on a cell read back as a chain; only meaningful for arity 1.
    pub fn chain_value(&self, cell: &Cell) -> ChainElement {
        self.values
            .get(cell)
            .and_then(TensorElement::to_chain)
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Cell, &TensorElement)> {
        self.values.iter()
    }

    /// The same operation with every coefficient multiplied by `scale`.
    pub fn scaled(&self, scale: &Coeff) -> Self {
        let mut out = GradedOperation::new(self.degree, self.arity);
        for (c, v) in &self.values {
            let v = v.scaled(scale);
            if !v.is_zero() {
                out.values.insert(c.clone(), v);
            }
        }
        out
    }

    /// Coefficients reduced to `Z₂` (kept as 0/1 integers).
    pub fn mod2(&self) -> Self {
        let mut out = GradedOperation::new(self.degree, self.arity);
        for (c, v) in &self.values {
            let v = v.mod2();
            if !v.is_zero() {
                out.values.insert(c.clone(), v);
            }
        }
        out
    }

    /// Linear extension to chains.
    pub fn apply(&self, x: &ChainElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (cell, c) in x {
            if let Some(v) = self.values.get(cell) {
                out.add_scaled(v, c);
            }
        }
        out
    }
}

fn koszul_sign(p: i64, q: i64) -> Coeff {
    if (p * q).rem_euclid(2) == 0 {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

fn apply_at_into(f: &GradedOperation, j: usize, w: &TensorWord, coeff: &Coeff, out: &mut TensorElement) {
    let Some(image) = f.values.get(&w.factors()[j]) else {
        return;
    };
    let scale = coeff * koszul_sign(f.degree, w.prefix_degree(j));
    for (middle, c) in image {
        out.add_term(w.splice(j, middle), c * &scale);
    }
}

/// `(1^{⊗j} ⊗ f ⊗ 1^{⊗…})(w)`: applies `f` to the factor at position `j`
/// (0-based) and multiplies by `(−1)^{|f|·q}`, where `q` is the degree of the
/// factors before `j`.
pub fn apply_at(f: &GradedOperation, j: usize, w: &TensorWord) -> Result<TensorElement> {
    if j >= w.len() {
        return Err(Error::PositionOutOfRange {
            position: j,
            len: w.len(),
        });
    }
    let mut out = TensorElement::zero();
    apply_at_into(f, j, w, &Coeff::one(), &mut out);
    Ok(out)
}

/// Linear extension of [`apply_at`] at a fixed position over every word of `t`.
pub fn apply_at_element(f: &GradedOperation, j: usize, t: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (w, c) in t {
        if j >= w.len() {
            return Err(Error::PositionOutOfRange {
                position: j,
                len: w.len(),
            });
        }
        apply_at_into(f, j, w, c, &mut out);
    }
    Ok(out)
}

/// `Σ_j (1^{⊗j} ⊗ f ⊗ 1^{⊗L−j−1})(t)`, with Koszul signs.
pub fn extend_sum(f: &GradedOperation, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in t {
        for j in 0..w.len() {
            apply_at_into(f, j, w, c, &mut out);
        }
    }
    out
}

/// Evaluator for `δ(f) = f∘∂ − (−1)^{|f|} ∂∘f`, where `∂` acts on tensor
/// powers through [`extend_sum`].
#[derive(Clone, Copy, Debug)]
pub struct HomDifferential<'a> {
    f: &'a GradedOperation,
    boundary: &'a GradedOperation,
}

pub fn hom_differential<'a>(f: &'a GradedOperation, boundary: &'a GradedOperation) -> HomDifferential<'a> {
    HomDifferential { f, boundary }
}

impl HomDifferential<'_> {
    pub fn degree(&self) -> i64 {
        self.f.degree + self.boundary.degree
    }

    pub fn eval(&self, cell: &Cell) -> TensorElement {
        let mut out = self.f.apply(&self.boundary.chain_value(cell));
        let inner = extend_sum(self.boundary, &self.f.value(cell));
        out.add_scaled(&inner, &-koszul_sign(self.f.degree, 1));
        out
    }
}

/// A degree-0 linear map of cells into chains of another complex; acts on
/// tensor words factorwise. Used for quotient and subdivision maps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellMap {
    images: BTreeMap<Cell, ChainElement>,
}

impl CellMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, from: Cell, to: ChainElement) {
        self.images.insert(from, to);
    }

    pub fn image(&self, cell: &Cell) -> Result<&ChainElement> {
        self.images
            .get(cell)
            .ok_or_else(|| Error::UnknownCell(cell.clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Cell, &ChainElement)> {
        self.images.iter()
    }

    pub fn map_chain(&self, x: &ChainElement) -> Result<ChainElement> {
        let mut out = ChainElement::zero();
        for (cell, c) in x {
            out.add_scaled(self.image(cell)?, c);
        }
        Ok(out)
    }

    /// `φ^{⊗k}` applied to every word, expanded multilinearly.
    pub fn map_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (w, c) in t {
            // partial products: (prefix factors, coefficient)
            let mut partial: Combination<alloc::vec::Vec<Cell>> = Combination::zero();
            partial.add_term(alloc::vec::Vec::new(), c.clone());
            for factor in w.factors() {
                let img = self.image(factor)?;
                let mut next = Combination::zero();
                for (prefix, pc) in &partial {
                    for (target, tc) in img {
                        let mut p = prefix.clone();
                        p.push(target.clone());
                        next.add_term(p, pc * tc);
                    }
                }
                partial = next;
            }
            for (cells, pc) in &partial {
                let word = TensorWord::new(cells.clone()).ok_or_else(|| {
                    Error::InvalidWord(format!("empty image of {w}"))
                })?;
                out.add_term(word, pc.clone());
            }
        }
        Ok(out)
    }
}

impl FromIterator<(Cell, ChainElement)> for CellMap {
    fn from_iter<I: IntoIterator<Item = (Cell, ChainElement)>>(iter: I) -> Self {
        CellMap {
            images: iter.into_iter().collect(),
        }
    }
}
