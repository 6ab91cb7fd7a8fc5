//! A finite cellular chain complex together with a family of diagonals
//! `Δ_k`, the input of the structure-relation checker.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cell::Cell;
use crate::chain::{ChainElement, TensorElement};
use crate::error::{Error, Result};
use crate::operation::{extend_sum, GradedOperation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    name: String,
    cells: Vec<Cell>,
    boundary: GradedOperation,
    diagonals: BTreeMap<usize, GradedOperation>,
}

impl CellComplex {
    pub fn new(name: impl Into<String>, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        cells.dedup();
        CellComplex {
            name: name.into(),
            cells,
            boundary: GradedOperation::boundary(),
            diagonals: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cells_of_dim(&self, dim: u8) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim() == dim)
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.binary_search(cell).is_ok()
    }

    fn check(&self, cell: &Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::UnknownCell(cell.clone()))
        }
    }

    fn check_chain(&self, x: &ChainElement) -> Result<()> {
        x.support().try_for_each(|c| self.check(c))
    }

    fn check_tensor(&self, t: &TensorElement) -> Result<()> {
        t.support()
            .flat_map(|w| w.factors())
            .try_for_each(|c| self.check(c))
    }

    pub fn set_boundary(&mut self, cell: Cell, value: ChainElement) -> Result<()> {
        self.check(&cell)?;
        self.check_chain(&value)?;
        self.boundary.set_chain(cell, value)
    }

    /// Sets `Δ_k(cell)`; `k ≥ 2`.
    pub fn set_diagonal(&mut self, k: usize, cell: Cell, value: TensorElement) -> Result<()> {
        if k < 2 {
            return Err(Error::InvalidArity(k));
        }
        self.check(&cell)?;
        self.check_tensor(&value)?;
        self.diagonals
            .entry(k)
            .or_insert_with(|| GradedOperation::diagonal(k))
            .set(cell, value)?;
        if self.diagonals[&k].is_zero() {
            self.diagonals.remove(&k);
        }
        Ok(())
    }

    /// Replaces `Δ_k` wholesale; a zero operation removes it.
    pub fn replace_diagonal(&mut self, k: usize, op: GradedOperation) -> Result<()> {
        if k < 2 || op.arity() != k {
            return Err(Error::InvalidArity(k));
        }
        for (c, v) in op.entries() {
            self.check(c)?;
            self.check_tensor(v)?;
        }
        if op.is_zero() {
            self.diagonals.remove(&k);
        } else {
            self.diagonals.insert(k, op);
        }
        Ok(())
    }

    pub fn boundary_op(&self) -> &GradedOperation {
        &self.boundary
    }

    pub fn boundary(&self, cell: &Cell) -> Result<ChainElement> {
        self.check(cell)?;
        Ok(self.boundary.chain_value(cell))
    }

    /// `Δ_k`, or `None` when it vanishes identically.
    pub fn diagonal_op(&self, k: usize) -> Option<&GradedOperation> {
        self.diagonals.get(&k)
    }

    pub fn diagonal(&self, k: usize, cell: &Cell) -> Result<TensorElement> {
        if k < 2 {
            return Err(Error::InvalidArity(k));
        }
        self.check(cell)?;
        Ok(self
            .diagonals
            .get(&k)
            .map(|op| op.value(cell))
            .unwrap_or_default())
    }

    /// Largest `k` with `Δ_k ≠ 0`, if any.
    pub fn top_diagonal(&self) -> Option<usize> {
        self.diagonals.keys().next_back().copied()
    }

    /// `∂∂(cell)`, which must vanish.
    pub fn boundary_squared(&self, cell: &Cell) -> Result<ChainElement> {
        let once = self.boundary(cell)?;
        let twice = self.boundary.apply(&once);
        Ok(twice.to_chain().unwrap_or_default())
    }

    /// `Σ_j (1^{⊗j} ⊗ ∂ ⊗ 1^{⊗…})(t)`.
    pub fn boundary_on_tensor(&self, t: &TensorElement) -> TensorElement {
        extend_sum(&self.boundary, t)
    }

    /// Copy with every table reduced to `Z₂` coefficients.
    pub fn mod2(&self) -> Self {
        CellComplex {
            name: alloc::format!("{} (mod 2)", self.name),
            cells: self.cells.clone(),
            boundary: self.boundary.mod2(),
            diagonals: self
                .diagonals
                .iter()
                .map(|(k, op)| (*k, op.mod2()))
                .filter(|(_, op)| !op.is_zero())
                .collect(),
        }
    }
}
