//! The A∞-coalgebra structure relation
//!
//! ```text
//! Δn∂ − (−1)^{n−2} Σ_{i=0}^{n−1} (1^{⊗i} ⊗ ∂ ⊗ 1^{⊗n−i−1}) Δn
//!     = Σ_{i=1}^{n−2} Σ_{j=0}^{n−i−1} (−1)^{i(j+n+1)} (1^{⊗j} ⊗ Δ_{i+1} ⊗ 1^{⊗n−i−j−1}) Δ_{n−i}
//! ```
//!
//! evaluated on generators. Every inner `1^{⊗j} ⊗ f ⊗ 1^{⊗…}` goes through
//! [`apply_at`](crate::operation::apply_at), so Koszul signs are applied in
//! one place only.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::cell::Cell;
use crate::chain::{Coeff, TensorElement};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::operation::{apply_at_element, GradedOperation};

fn sign(exponent: usize) -> Coeff {
    if exponent.is_multiple_of(2) {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

/// The separately evaluated pieces of relation `n` at one generator.
#[derive(Clone, Debug)]
pub struct RelationTerms {
    pub n: usize,
    /// `Δn(∂c)`.
    pub diagonal_of_boundary: TensorElement,
    /// `(−1)^{n−2} Σ_i (1^{⊗i} ⊗ ∂ ⊗ 1^{⊗…}) Δn(c)`.
    pub boundary_of_diagonal: TensorElement,
    /// For each `i` in `1..=n−2`: `Σ_j (−1)^{i(j+n+1)} (1^{⊗j} ⊗ Δ_{i+1} ⊗ 1^{⊗…}) Δ_{n−i}(c)`.
    pub compositions: Vec<(usize, TensorElement)>,
    /// Words produced on the left and right before cancellation.
    pub lhs_terms: usize,
    pub rhs_terms: usize,
}

impl RelationTerms {
    /// Left side minus right side.
    pub fn defect(&self) -> TensorElement {
        let mut out = self.diagonal_of_boundary.clone();
        out -= &self.boundary_of_diagonal;
        for (_, t) in &self.compositions {
            out -= t;
        }
        out
    }

    fn composition(&self, i: usize) -> Option<&TensorElement> {
        self.compositions.iter().find(|(j, _)| *j == i).map(|(_, t)| t)
    }

    /// The three-term form `(Δ_{n−1}Δ₂ + Δ₂Δ_{n−1} + ∂Δ_n)(c)`, with the
    /// relation's own signs, for `n > 3`.
    pub fn reduced(&self) -> Option<TensorElement> {
        if self.n <= 3 {
            return None;
        }
        let mut out = -self.boundary_of_diagonal.clone();
        for i in [1, self.n - 2] {
            if let Some(t) = self.composition(i) {
                out -= t;
            }
        }
        Some(out)
    }

    /// Whether every term outside the three-term form vanishes on its own:
    /// `Δn(∂c)` and the compositions `Δ_{i+1}Δ_{n−i}` with both arities ≥ 3.
    pub fn middle_terms_vanish(&self) -> bool {
        self.diagonal_of_boundary.is_zero()
            && self
                .compositions
                .iter()
                .filter(|(i, _)| *i != 1 && *i != self.n - 2)
                .all(|(_, t)| t.is_zero())
    }
}

/// Number of words an operation produces on the given cells, before any
/// cancellation.
fn produced_by<'a>(op: Option<&GradedOperation>, cells: impl Iterator<Item = &'a Cell>) -> usize {
    let Some(op) = op else { return 0 };
    cells
        .map(|c| op.get(c).map_or(0, TensorElement::len))
        .sum()
}

pub fn relation_terms(complex: &CellComplex, n: usize, c: &Cell) -> Result<RelationTerms> {
    if n < 2 {
        return Err(Error::InvalidRelationIndex(n));
    }
    let boundary = complex.boundary(c)?;
    let delta_n = complex.diagonal(n, c)?;

    let diagonal_of_boundary = match complex.diagonal_op(n) {
        Some(op) => op.apply(&boundary),
        None => TensorElement::zero(),
    };
    let mut boundary_of_diagonal = complex.boundary_on_tensor(&delta_n);
    if n % 2 == 1 {
        boundary_of_diagonal = -boundary_of_diagonal;
    }
    let lhs_terms = produced_by(complex.diagonal_op(n), boundary.support())
        + delta_n
            .support()
            .map(|w| produced_by(Some(complex.boundary_op()), w.factors().iter()))
            .sum::<usize>();
    let mut rhs_terms = 0;

    let mut compositions = Vec::with_capacity(n.saturating_sub(2));
    for i in 1..=n.saturating_sub(2) {
        let inner = complex.diagonal(n - i, c)?;
        let mut total = TensorElement::zero();
        if let Some(outer) = complex.diagonal_op(i + 1) {
            rhs_terms += inner
                .support()
                .map(|w| produced_by(Some(outer), w.factors().iter()))
                .sum::<usize>();
            for j in 0..n - i {
                let applied = apply_at_element(outer, j, &inner)?;
                total.add_scaled(&applied, &sign(i * (j + n + 1)));
            }
        }
        compositions.push((i, total));
    }

    Ok(RelationTerms {
        n,
        diagonal_of_boundary,
        boundary_of_diagonal,
        compositions,
        lhs_terms,
        rhs_terms,
    })
}

/// `LHS(c) − RHS(c)` of relation `n`; zero iff the relation holds at `c`.
pub fn relation_defect(complex: &CellComplex, n: usize, c: &Cell) -> Result<TensorElement> {
    Ok(relation_terms(complex, n, c)?.defect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TermCounts {
    pub lhs: usize,
    pub rhs: usize,
}

/// Relation `n` on every generator of a complex.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub n: usize,
    pub defects: BTreeMap<Cell, TensorElement>,
    pub holds: bool,
    pub term_counts: TermCounts,
    /// For `n > 3`: whether the full defect on each 2-cell equals the
    /// three-term reduced form, both vanish, and all other terms vanish on
    /// every generator. `None` for `n ≤ 3`.
    pub reduced_agrees: Option<bool>,
}

impl RelationReport {
    pub fn failing_cells(&self) -> impl Iterator<Item = (&Cell, &TensorElement)> {
        self.defects.iter().filter(|(_, d)| !d.is_zero())
    }
}

pub fn relation_report(complex: &CellComplex, n: usize) -> Result<RelationReport> {
    let mut defects = BTreeMap::new();
    let mut term_counts = TermCounts::default();
    let mut reduced_agrees = (n > 3).then_some(true);
    for c in complex.cells() {
        let terms = relation_terms(complex, n, c)?;
        term_counts.lhs += terms.lhs_terms;
        term_counts.rhs += terms.rhs_terms;
        let defect = terms.defect();
        if let Some(ok) = reduced_agrees.as_mut() {
            let mut this = terms.middle_terms_vanish();
            if c.dim() == 2 {
                let reduced = terms.reduced().unwrap_or_default();
                this &= reduced == defect && reduced.is_zero();
            }
            *ok &= this;
        }
        defects.insert(c.clone(), defect);
    }
    let holds = defects.values().all(TensorElement::is_zero);
    Ok(RelationReport {
        n,
        defects,
        holds,
        term_counts,
        reduced_agrees,
    })
}

/// Reports for every relation index `2 ≤ n ≤ n_max`.
pub fn verify_all(complex: &CellComplex, n_max: usize) -> Result<Vec<RelationReport>> {
    (2..=n_max).map(|n| relation_report(complex, n)).collect()
}

/// Whether every report holds (and every reduced-form cross-check agrees).
pub fn all_hold(reports: &[RelationReport]) -> bool {
    reports
        .iter()
        .all(|r| r.holds && r.reduced_agrees.unwrap_or(true))
}
