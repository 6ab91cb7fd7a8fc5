//! The cellular chain complex of an oriented polygon with initial vertex
//! `v1` and terminal vertex `vt`, and its diagonals `Δ_k`.
//!
//! The vertices `v1..vn` and edges `e1..en` run counterclockwise, `e_i`
//! joining `v_i` and `v_{i+1}` (`e_n` joins `v_n` and `v1`). Edges are
//! directed along the two monotone paths from `v1` to `vt`:
//!
//! * the left path `e1, …, e_{t−1}` runs counterclockwise, `e_i: v_i → v_{i+1}`;
//! * the right path `e_n, e_{n−1}, …, e_t` runs clockwise, `e_n: v1 → vn` and
//!   `e_i: v_{i+1} → v_i` for `t ≤ i < n`.
//!
//! With `t = n` the right path is the single edge `e_n`.

use alloc::vec::Vec;

use num_traits::One;

use crate::cell::{Cell, Label};
use crate::chain::{word, ChainElement, Coeff, TensorElement};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::operation::CellMap;

/// All strictly increasing `k`-tuples of indices into `0..len`, in
/// lexicographic order.
pub(crate) fn increasing_tuples(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > len {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // rightmost position that can still move
        let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct PolygonComplex {
    n: usize,
    t: usize,
    top: Cell,
    complex: CellComplex,
}

/// The `n`-gon with terminal vertex `vt`; `t = n` is the standard polygon.
pub fn build_polygon(n: usize, t: usize) -> Result<PolygonComplex> {
    if n < 3 {
        return Err(Error::InvalidPolygon { n, t });
    }
    build_polygon_with_top(n, t, Cell::new(2, Label::plain("P")))
}

/// Also admits the digon `n = t = 2`, which appears as a piece of a split.
pub(crate) fn build_polygon_with_top(n: usize, t: usize, top: Cell) -> Result<PolygonComplex> {
    if n < 2 || t < 2 || t > n {
        return Err(Error::InvalidPolygon { n, t });
    }
    let v = |i: usize| Cell::vertex(i as u32);
    let e = |i: usize| Cell::edge(i as u32);

    let mut cells: Vec<Cell> = (1..=n).map(v).chain((1..=n).map(e)).collect();
    cells.push(top.clone());
    let mut complex = CellComplex::new(alloc::format!("polygon(n={n}, t={t})"), cells);

    for i in 1..=n {
        complex.set_diagonal(2, v(i), TensorElement::basis(word([v(i), v(i)])))?;
    }
    for i in 1..=n {
        let (start, end) = edge_endpoints(n, t, i);
        let mut d = ChainElement::basis(v(end));
        d.add_term(v(start), -Coeff::one());
        complex.set_boundary(e(i), d)?;
        let mut diag = TensorElement::basis(word([v(start), e(i)]));
        diag.add_term(word([e(i), v(end)]), Coeff::one());
        complex.set_diagonal(2, e(i), diag)?;
    }

    let top_boundary = (1..=n)
        .map(|i| (e(i), if i < t { Coeff::one() } else { -Coeff::one() }))
        .collect();
    complex.set_boundary(top.clone(), top_boundary)?;

    let threshold = t.max(n + 2 - t).max(3);
    for k in 2..threshold {
        let mut value = edge_words(n, t, k);
        if k == 2 {
            value.add_term(word([v(1), top.clone()]), Coeff::one());
            value.add_term(word([top.clone(), v(t)]), Coeff::one());
        }
        complex.set_diagonal(k, top.clone(), value)?;
    }

    Ok(PolygonComplex { n, t, top, complex })
}

/// `(start, end)` vertex indices of `e_i` under the poset direction.
fn edge_endpoints(n: usize, t: usize, i: usize) -> (usize, usize) {
    if i < t {
        (i, i + 1)
    } else if i < n {
        (i + 1, i)
    } else {
        (1, n)
    }
}

/// Ascending words along the left path minus descending words along the
/// right path.
fn edge_words(n: usize, t: usize, k: usize) -> TensorElement {
    let left: Vec<usize> = (1..t).collect();
    let right: Vec<usize> = (t..=n).rev().collect();
    let mut out = TensorElement::zero();
    for (path, sign) in [(&left, Coeff::one()), (&right, -Coeff::one())] {
        for tuple in increasing_tuples(path.len(), k) {
            out.add_term(word(tuple.iter().map(|&p| Cell::edge(path[p] as u32))), sign.clone());
        }
    }
    out
}

impl PolygonComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn is_standard(&self) -> bool {
        self.t == self.n
    }

    pub fn vertex(&self, i: usize) -> Cell {
        Cell::vertex(i as u32)
    }

    pub fn edge(&self, i: usize) -> Cell {
        Cell::edge(i as u32)
    }

    /// The 2-cell.
    pub fn top(&self) -> &Cell {
        &self.top
    }

    pub fn cells(&self) -> &[Cell] {
        self.complex.cells()
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    /// Smallest `k` from which every `Δ_k` vanishes: `max{t, n − t + 2}`.
    pub fn vanishing_threshold(&self) -> usize {
        self.t.max(self.n + 2 - self.t)
    }

    /// Poset direction of `e_i` as `(start, end)` vertices.
    pub fn edge_direction(&self, i: usize) -> (Cell, Cell) {
        let (s, e) = edge_endpoints(self.n, self.t, i);
        (self.vertex(s), self.vertex(e))
    }

    pub fn boundary(&self, cell: &Cell) -> Result<ChainElement> {
        self.complex.boundary(cell)
    }

    pub fn diagonal(&self, k: usize, cell: &Cell) -> Result<TensorElement> {
        self.complex.diagonal(k, cell)
    }
}

/// The cut of a polygon along the extra edge `e0: v1 → vt` into a `t`-gon
/// `P1` and an `(n − t + 2)`-gon `P2`, both standard with initial `v1` and
/// terminal `vt`.
///
/// `first` and `second` are built as standard polygons in their own
/// labelling; `first_map`/`second_map` carry their cells into the subdivided
/// complex `{v_i, e_0, e_i, P1, P2}`. `second` is labelled clockwise from
/// `v1`, so its 2-cell is `−P2`.
#[derive(Clone, Debug)]
pub struct PolygonSplit {
    pub whole: PolygonComplex,
    pub first: PolygonComplex,
    pub second: PolygonComplex,
    pub first_map: CellMap,
    pub second_map: CellMap,
    /// `C∗(P) → C∗(subdivision)`: `P ↦ P1 + P2`, identity elsewhere.
    pub subdivision: CellMap,
}

/// Result of comparing `Δ_k(P1) + Δ_k(P2)` with `Δ′_k(P)`.
#[derive(Clone, Debug)]
pub struct SplitIdentity {
    pub k: usize,
    pub glued: TensorElement,
    /// Terms of `glued` mentioning `e0`; must be zero.
    pub e0_terms: TensorElement,
    pub expected: TensorElement,
    pub holds: bool,
}

pub fn split_polygons(n: usize, t: usize) -> Result<PolygonSplit> {
    let whole = build_polygon(n, t)?;
    if t == n {
        return Err(Error::NoSplit { n, t });
    }
    let p1 = Cell::new(2, Label::indexed("P", 1));
    let p2 = Cell::new(2, Label::indexed("P", 2));
    let e0 = Cell::edge(0);

    let first = build_polygon_with_top(t, t, Cell::new(2, Label::plain("P")))?;
    let mut first_map = CellMap::new();
    for i in 1..=t {
        first_map.insert(first.vertex(i), ChainElement::basis(Cell::vertex(i as u32)));
        let target = if i < t { Cell::edge(i as u32) } else { e0.clone() };
        first_map.insert(first.edge(i), ChainElement::basis(target));
    }
    first_map.insert(first.top().clone(), ChainElement::basis(p1.clone()));

    let m = n - t + 2;
    let second = build_polygon(m, m)?;
    let mut second_map = CellMap::new();
    for a in 1..=m {
        let vertex = if a == 1 { 1 } else { n + 2 - a };
        second_map.insert(second.vertex(a), ChainElement::basis(Cell::vertex(vertex as u32)));
        let target = if a < m {
            Cell::edge((n + 1 - a) as u32)
        } else {
            e0.clone()
        };
        second_map.insert(second.edge(a), ChainElement::basis(target));
    }
    second_map.insert(second.top().clone(), ChainElement::term(p2.clone(), -1));

    let mut subdivision = CellMap::new();
    for c in whole.cells() {
        subdivision.insert(c.clone(), ChainElement::basis(c.clone()));
    }
    let mut both = ChainElement::basis(p1);
    both.add_term(p2, Coeff::one());
    subdivision.insert(whole.top().clone(), both);

    Ok(PolygonSplit {
        whole,
        first,
        second,
        first_map,
        second_map,
        subdivision,
    })
}

impl PolygonSplit {
    pub fn e0(&self) -> Cell {
        Cell::edge(0)
    }

    /// `∂P1 + ∂P2` in the subdivided complex.
    pub fn glued_boundary(&self) -> Result<ChainElement> {
        let a = self.first_map.map_chain(&self.first.boundary(self.first.top())?)?;
        let b = self.second_map.map_chain(&self.second.boundary(self.second.top())?)?;
        Ok(a - b)
    }

    /// `Δ_k(P1) + Δ_k(P2)` in the subdivided complex.
    pub fn glued_diagonal(&self, k: usize) -> Result<TensorElement> {
        let a = self
            .first_map
            .map_tensor(&self.first.diagonal(k, self.first.top())?)?;
        let b = self
            .second_map
            .map_tensor(&self.second.diagonal(k, self.second.top())?)?;
        Ok(a - b)
    }

    pub fn check_identity(&self, k: usize) -> Result<SplitIdentity> {
        let glued = self.glued_diagonal(k)?;
        let e0_terms = glued.terms_containing(&self.e0());
        let expected = self
            .subdivision
            .map_tensor(&self.whole.diagonal(k, self.whole.top())?)?;
        let holds = e0_terms.is_zero() && glued == expected;
        Ok(SplitIdentity {
            k,
            glued,
            e0_terms,
            expected,
            holds,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(i: u32) -> Cell {
        Cell::edge(i)
    }
    fn v(i: u32) -> Cell {
        Cell::vertex(i)
    }

    fn chain(terms: &[(Cell, i64)]) -> ChainElement {
        terms.iter().map(|(c, k)| (c.clone(), Coeff::from(*k))).collect()
    }

    #[test]
    fn tuples_enumerate_in_order() {
        assert_eq!(
            increasing_tuples(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert!(increasing_tuples(2, 3).is_empty());
        assert_eq!(increasing_tuples(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn hexagon_top_boundary() {
        let p = build_polygon(6, 6).unwrap();
        let expected = chain(&[(e(1), 1), (e(2), 1), (e(3), 1), (e(4), 1), (e(5), 1), (e(6), -1)]);
        assert_eq!(p.boundary(p.top()).unwrap(), expected);
    }

    #[test]
    fn heptagon_with_terminal_v5() {
        let p = build_polygon(7, 5).unwrap();
        let expected = chain(&[
            (e(1), 1),
            (e(2), 1),
            (e(3), 1),
            (e(4), 1),
            (e(5), -1),
            (e(6), -1),
            (e(7), -1),
        ]);
        assert_eq!(p.boundary(p.top()).unwrap(), expected);
        assert_eq!(p.boundary(&e(5)).unwrap(), chain(&[(v(5), 1), (v(6), -1)]));
        assert_eq!(p.boundary(&e(7)).unwrap(), chain(&[(v(7), 1), (v(1), -1)]));
        assert_eq!(p.vanishing_threshold(), 5);
    }

    #[test]
    fn triangle_edges() {
        let p = build_polygon(3, 3).unwrap();
        assert_eq!(p.boundary(&e(1)).unwrap(), chain(&[(v(2), 1), (v(1), -1)]));
        assert_eq!(p.boundary(&e(2)).unwrap(), chain(&[(v(3), 1), (v(2), -1)]));
        assert_eq!(p.boundary(&e(3)).unwrap(), chain(&[(v(3), 1), (v(1), -1)]));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_polygon(2, 2).unwrap_err(), Error::InvalidPolygon { n: 2, t: 2 });
        assert!(build_polygon(5, 1).is_err());
        assert!(build_polygon(5, 6).is_err());
        let p = build_polygon(5, 5).unwrap();
        assert_eq!(p.diagonal(1, p.top()).unwrap_err(), Error::InvalidArity(1));
        assert!(p.diagonal(2, &e(9)).is_err());
        assert_eq!(split_polygons(6, 6).unwrap_err(), Error::NoSplit { n: 6, t: 6 });
    }

    #[test]
    fn pentagon_triple_diagonal() {
        let p = build_polygon(5, 5).unwrap();
        let expected: TensorElement = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
            .iter()
            .map(|t| (word(t.iter().map(|&i| e(i))), Coeff::one()))
            .collect();
        assert_eq!(p.diagonal(3, p.top()).unwrap(), expected);
        assert!(p.diagonal(5, p.top()).unwrap().is_zero());
    }

    #[test]
    fn generalized_pair_diagonal_7_5() {
        let p = build_polygon(7, 5).unwrap();
        let mut expected = TensorElement::zero();
        expected.add_term(word([v(1), p.top().clone()]), Coeff::one());
        expected.add_term(word([p.top().clone(), v(5)]), Coeff::one());
        for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            expected.add_term(word([e(a), e(b)]), Coeff::one());
        }
        for (a, b) in [(7, 6), (7, 5), (6, 5)] {
            expected.add_term(word([e(a), e(b)]), -Coeff::one());
        }
        assert_eq!(p.diagonal(2, p.top()).unwrap(), expected);
        assert!(p.diagonal(5, p.top()).unwrap().is_zero());
        assert!(!p.diagonal(4, p.top()).unwrap().is_zero());
    }

    #[test]
    fn vertex_and_edge_diagonals() {
        let p = build_polygon(7, 5).unwrap();
        for i in 1..=7 {
            assert_eq!(
                p.diagonal(2, &v(i)).unwrap(),
                TensorElement::basis(word([v(i), v(i)]))
            );
        }
        // reversed edge: e5 runs v6 → v5
        let mut d = TensorElement::basis(word([v(6), e(5)]));
        d.add_term(word([e(5), v(5)]), Coeff::one());
        assert_eq!(p.diagonal(2, &e(5)).unwrap(), d);
        let mut d = TensorElement::basis(word([v(1), e(7)]));
        d.add_term(word([e(7), v(7)]), Coeff::one());
        assert_eq!(p.diagonal(2, &e(7)).unwrap(), d);
        assert!(p.diagonal(3, &e(2)).unwrap().is_zero());
    }

    #[test]
    fn split_shapes() {
        let s = split_polygons(7, 5).unwrap();
        assert_eq!((s.first.n(), s.second.n()), (5, 4));
        let s = split_polygons(4, 3).unwrap();
        assert_eq!((s.first.n(), s.second.n()), (3, 3));
    }

    #[test]
    fn split_boundaries_add_up() {
        let s = split_polygons(7, 5).unwrap();
        let whole = s.whole.boundary(s.whole.top()).unwrap();
        assert_eq!(s.glued_boundary().unwrap(), whole);
    }

    #[test]
    fn split_identity_7_5() {
        let s = split_polygons(7, 5).unwrap();
        for k in 2..=8 {
            let id = s.check_identity(k).unwrap();
            assert!(id.e0_terms.is_zero(), "k = {k}: {:?}", id.e0_terms);
            assert!(id.holds, "k = {k}: {:?} vs {:?}", id.glued, id.expected);
        }
    }

    #[test]
    fn split_off_a_digon() {
        assert!(build_polygon(2, 2).is_err());
        let s = split_polygons(5, 2).unwrap();
        assert_eq!((s.first.n(), s.second.n()), (2, 5));
        assert_eq!(s.glued_boundary().unwrap(), s.whole.boundary(s.whole.top()).unwrap());
        for k in 2..=7 {
            assert!(s.check_identity(k).unwrap().holds, "k = {k}");
        }
    }
}
