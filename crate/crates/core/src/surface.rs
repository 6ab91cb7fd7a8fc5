//! Closed surfaces as quotients of polygons.
//!
//! A scheme is an edge word read counterclockwise around an `n`-gon together
//! with a terminal vertex `vt`. Gluing the paired edges gives the surface
//! `X`; the quotient map `q` sends the polygon A∞ structure to `C∗(X)` by
//! `Δ_k(q σ) = q^{⊗k} Δ′_k(σ)` on a chosen section `σ`.
//!
//! Canonical schemes put the labels `e1 e1 e3 e3 …` on the left path and
//! `e2 e2 e4 e4 …` on the right path (unorientable, `2g`-gon), or
//! `e1 … e2g` on the left path and the pair-swapped `ê1 … ê2g` on the right
//! path (orientable, `4g`-gon), with every edge glued along its poset
//! direction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::cell::{Cell, Label};
use crate::chain::{word, ChainElement, Coeff, TensorElement};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::operation::{apply_at_element, CellMap};
use crate::polygon::{build_polygon, increasing_tuples, PolygonComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientability {
    Orientable,
    Unorientable,
}

impl Orientability {
    pub fn is_orientable(self) -> bool {
        self == Orientability::Orientable
    }
}

impl fmt::Display for Orientability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientability::Orientable => "orientable",
            Orientability::Unorientable => "unorientable",
        })
    }
}

/// One letter of an edge word: a label with exponent `+1`, or `−1` when
/// `inverse` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub label: Label,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.label.to_text();
        if !self.inverse {
            return f.write_str(&text);
        }
        let mut chars = text.chars();
        if let Some(first) = chars.next() {
            for u in first.to_uppercase() {
                write!(f, "{u}")?;
            }
        }
        f.write_str(chars.as_str())
    }
}

/// A surface word such as `a a b b` or `a b A B`; an uppercase first letter
/// marks exponent `−1`. Every label occurs exactly twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWord {
    letters: Vec<Letter>,
}

impl EdgeWord {
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let mut chars = token.chars();
            let first = chars.next().unwrap_or(' ');
            if !first.is_alphabetic() || !token.chars().all(char::is_alphanumeric) {
                return Err(Error::InvalidWord(format!(
                    "token {token:?} must be a letter followed by letters or digits"
                )));
            }
            let inverse = first.is_uppercase();
            let mut label: String = first.to_lowercase().collect();
            label.push_str(chars.as_str());
            letters.push(Letter {
                label: Label::parse(&label),
                inverse,
            });
        }
        EdgeWord::from_letters(letters)
    }

    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        let mut counts: BTreeMap<&Label, usize> = BTreeMap::new();
        for l in &letters {
            *counts.entry(&l.label).or_default() += 1;
        }
        if let Some((label, count)) = counts.iter().find(|(_, c)| **c != 2) {
            return Err(Error::InvalidWord(format!(
                "label {label} occurs {count} times, expected exactly twice"
            )));
        }
        Ok(EdgeWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct labels in sorted order.
    pub fn labels(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self.letters.iter().map(|l| l.label.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Each label appears once with each exponent.
    pub fn is_orientable(&self) -> bool {
        self.labels().iter().all(|label| {
            let mut it = self.letters.iter().filter(|l| &l.label == label);
            match (it.next(), it.next()) {
                (Some(a), Some(b)) => a.inverse != b.inverse,
                _ => false,
            }
        })
    }
}

impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The canonical word and terminal vertex for a surface of given genus.
fn canonical_word(genus: u32, orientability: Orientability) -> Result<(EdgeWord, usize)> {
    let g = genus as usize;
    let e = |i: usize| Label::indexed("e", i as u32);
    let letters: Vec<Letter>;
    let t;
    match orientability {
        Orientability::Unorientable => {
            if g < 2 {
                return Err(Error::UnsupportedSurface(format!(
                    "unorientable genus {g} has no polygon scheme here; use the projective plane special case"
                )));
            }
            let (left, _) = unorientable_paths(g);
            let n = 2 * g;
            t = left.len() + 1;
            letters = (1..=n)
                .map(|i| {
                    if i < t {
                        Letter {
                            label: e(left[i - 1]),
                            inverse: false,
                        }
                    } else {
                        let q = n + 1 - i;
                        Letter {
                            label: e(2 * q.div_ceil(2)),
                            inverse: true,
                        }
                    }
                })
                .collect();
        }
        Orientability::Orientable => {
            if g < 1 {
                return Err(Error::UnsupportedSurface(
                    "the sphere has no polygon scheme here; use the sphere special case".into(),
                ));
            }
            let n = 4 * g;
            t = 2 * g + 1;
            letters = (1..=n)
                .map(|i| {
                    if i < t {
                        Letter {
                            label: e(i),
                            inverse: false,
                        }
                    } else {
                        Letter {
                            label: e(hat(n + 1 - i)),
                            inverse: true,
                        }
                    }
                })
                .collect();
        }
    }
    Ok((EdgeWord::from_letters(letters)?, t))
}

/// `ê_{2k−1} = e_{2k}`, `ê_{2k} = e_{2k−1}`.
fn hat(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// Label indices along the left (`1,1,3,3,…`) and right (`2,2,4,4,…`)
/// paths of the unorientable `2g`-gon.
fn unorientable_paths(g: usize) -> (Vec<usize>, Vec<usize>) {
    let s_odd = g.div_ceil(2);
    let s_even = g / 2;
    let left = (1..=2 * s_odd).map(|p| 2 * p.div_ceil(2) - 1).collect();
    let right = (1..=2 * s_even).map(|q| 2 * q.div_ceil(2)).collect();
    (left, right)
}

/// A polygon with an edge word and the gluing data it induces.
#[derive(Clone, Debug)]
pub struct SurfaceScheme {
    word: EdgeWord,
    polygon: PolygonComplex,
    orientability: Orientability,
    genus: u32,
    canonical: bool,
    poset_compatible: bool,
    /// Per polygon edge `e_i` (index `i − 1`): its label and the sign of
    /// `q(e_i)`.
    edge_signs: Vec<(Label, i8)>,
    /// Per polygon vertex `v_i` (index `i − 1`): its vertex class.
    vertex_class: Vec<usize>,
    class_count: usize,
    top: Cell,
    quotient: CellMap,
}

/// The canonical scheme of the closed surface of the given genus.
pub fn build_scheme(genus: u32, orientability: Orientability) -> Result<SurfaceScheme> {
    let (word, t) = canonical_word(genus, orientability)?;
    let top = Cell::new(2, Label::indexed("X", genus));
    let mut scheme = assemble(word, t, top)?;
    scheme.canonical = true;
    debug_assert_eq!(scheme.genus, genus);
    debug_assert_eq!(scheme.orientability, orientability);
    Ok(scheme)
}

/// A scheme from an arbitrary word. Without `t`, the largest terminal vertex
/// compatible with the gluing is used (every edge glued along its poset
/// direction after reorienting labels), falling back to `t = n`.
pub fn scheme_from_word(word: &str, t: Option<usize>) -> Result<SurfaceScheme> {
    let word = EdgeWord::parse(word)?;
    let n = word.len();
    if n < 3 {
        return Err(Error::UnsupportedSurface(format!(
            "words of length {n} need a polygon with fewer than 3 sides; use a special surface"
        )));
    }
    let t = match t {
        Some(t) => t,
        None => (2..=n)
            .rev()
            .find(|&t| raw_signs(&word, t).is_some_and(|s| compatible(&word, &s)))
            .unwrap_or(n),
    };
    if t < 2 || t > n {
        return Err(Error::InvalidPolygon { n, t });
    }
    let mut scheme = assemble(word, t, Cell::new(2, Label::plain("X")))?;
    if let Ok((canon, canon_t)) = canonical_word(scheme.genus, scheme.orientability) {
        scheme.canonical = canon == scheme.word && canon_t == t;
    }
    Ok(scheme)
}

/// Sign of each polygon edge's poset direction relative to its letter's
/// arrow, `None` if `t` is out of range.
fn raw_signs(word: &EdgeWord, t: usize) -> Option<Vec<i8>> {
    let n = word.len();
    if t < 2 || t > n {
        return None;
    }
    Some(
        word.letters
            .iter()
            .enumerate()
            .map(|(idx, l)| {
                let along = if idx + 1 < t { 1 } else { -1 };
                if l.inverse {
                    -along
                } else {
                    along
                }
            })
            .collect(),
    )
}

fn compatible(word: &EdgeWord, raw: &[i8]) -> bool {
    word.labels().iter().all(|label| {
        let mut signs = word
            .letters
            .iter()
            .zip(raw)
            .filter(|(l, _)| &l.label == label)
            .map(|(_, s)| *s);
        signs.next() == signs.next()
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn assemble(word: EdgeWord, t: usize, top: Cell) -> Result<SurfaceScheme> {
    let n = word.len();
    let polygon = build_polygon(n, t)?;
    let raw = raw_signs(&word, t).ok_or(Error::InvalidPolygon { n, t })?;

    // orient each surface edge like the first occurrence of its label
    let mut first_sign: BTreeMap<&Label, i8> = BTreeMap::new();
    let mut edge_signs = Vec::with_capacity(n);
    for (l, &r) in word.letters.iter().zip(&raw) {
        let flip = *first_sign.entry(&l.label).or_insert(r);
        edge_signs.push((l.label.clone(), r * flip));
    }
    let poset_compatible = edge_signs.iter().all(|(_, s)| *s == 1);

    // glue tails to tails and heads to heads
    let mut parent: Vec<usize> = (0..n).collect();
    let mut seen: BTreeMap<&Label, (usize, usize)> = BTreeMap::new();
    for (i, (label, s)) in edge_signs.iter().enumerate() {
        let (start, end) = polygon.edge_direction(i + 1);
        let idx = |c: &Cell| c.label().index().unwrap_or(1) as usize - 1;
        let (tail, head) = if *s == 1 {
            (idx(&start), idx(&end))
        } else {
            (idx(&end), idx(&start))
        };
        if let Some(&(t0, h0)) = seen.get(label) {
            let (a, b) = (find(&mut parent, t0), find(&mut parent, tail));
            parent[a] = b;
            let (a, b) = (find(&mut parent, h0), find(&mut parent, head));
            parent[a] = b;
        } else {
            seen.insert(label, (tail, head));
        }
    }
    let mut class_of_root = BTreeMap::new();
    let mut vertex_class = Vec::with_capacity(n);
    for i in 0..n {
        let root = find(&mut parent, i);
        let next = class_of_root.len();
        vertex_class.push(*class_of_root.entry(root).or_insert(next));
    }
    let class_count = class_of_root.len();

    let labels = word.labels();
    let euler = class_count as i64 - labels.len() as i64 + 1;
    let orientability = if word.is_orientable() {
        Orientability::Orientable
    } else {
        Orientability::Unorientable
    };
    let genus = match orientability {
        Orientability::Orientable => (2 - euler) / 2,
        Orientability::Unorientable => 2 - euler,
    };
    let genus = u32::try_from(genus)
        .map_err(|_| Error::InvalidWord(format!("word gives Euler characteristic {euler}")))?;

    let mut scheme = SurfaceScheme {
        word,
        polygon,
        orientability,
        genus,
        canonical: false,
        poset_compatible,
        edge_signs,
        vertex_class,
        class_count,
        top,
        quotient: CellMap::new(),
    };
    let mut quotient = CellMap::new();
    for i in 1..=n {
        let class = scheme.vertex_class[i - 1];
        quotient.insert(scheme.polygon.vertex(i), ChainElement::basis(scheme.vertex_cell(class)));
        let (label, s) = &scheme.edge_signs[i - 1];
        quotient.insert(
            scheme.polygon.edge(i),
            ChainElement::term(Cell::new(1, label.clone()), *s as i64),
        );
    }
    quotient.insert(
        scheme.polygon.top().clone(),
        ChainElement::basis(scheme.top.clone()),
    );
    scheme.quotient = quotient;
    Ok(scheme)
}

impl SurfaceScheme {
    pub fn word(&self) -> &EdgeWord {
        &self.word
    }

    pub fn polygon(&self) -> &PolygonComplex {
        &self.polygon
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orientability(&self) -> Orientability {
        self.orientability
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Every polygon edge is glued along its poset direction.
    pub fn is_poset_compatible(&self) -> bool {
        self.poset_compatible
    }

    pub fn vertex_class_count(&self) -> usize {
        self.class_count
    }

    fn vertex_cell(&self, class: usize) -> Cell {
        if self.class_count == 1 {
            Cell::new(0, Label::plain("v"))
        } else {
            Cell::new(0, Label::indexed("v", class as u32 + 1))
        }
    }

    pub fn top(&self) -> &Cell {
        &self.top
    }

    /// Cells of the surface: vertex classes, edge labels, the 2-cell.
    pub fn surface_cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = (0..self.class_count).map(|c| self.vertex_cell(c)).collect();
        cells.extend(self.word.labels().into_iter().map(|l| Cell::new(1, l)));
        cells.push(self.top.clone());
        cells
    }

    pub fn quotient_map(&self) -> &CellMap {
        &self.quotient
    }

    /// `q(c)` for a polygon cell.
    pub fn quotient(&self, c: &Cell) -> Result<ChainElement> {
        self.quotient.image(c).cloned()
    }

    /// Polygon cells projecting to `±cell`, each with its sign, first the
    /// section representative.
    fn representatives(&self, cell: &Cell) -> Result<Vec<(Cell, Coeff)>> {
        let reps: Vec<(Cell, Coeff)> = self
            .quotient
            .entries()
            .filter_map(|(pc, img)| {
                let c = img.coeff(cell);
                (!c.is_zero()).then(|| (pc.clone(), c))
            })
            .collect();
        if reps.is_empty() {
            return Err(Error::UnknownCell(cell.clone()));
        }
        Ok(reps)
    }

    /// Applies `value_on` to every representative of `cell` and checks that
    /// all of them give the same answer, returned from the section.
    fn project<F>(&self, cell: &Cell, what: &str, mut value_on: F) -> Result<TensorElement>
    where
        F: FnMut(&Cell) -> Result<TensorElement>,
    {
        let mut answer: Option<TensorElement> = None;
        for (rep, sign) in self.representatives(cell)? {
            // q(rep) = sign · cell, and sign is ±1
            let value = self.quotient.map_tensor(&value_on(&rep)?)?.scaled(&sign);
            match &answer {
                None => answer = Some(value),
                Some(first) if *first != value => {
                    return Err(Error::IllDefinedProjection {
                        cell: cell.clone(),
                        detail: format!("{what} is {first} from one representative and {value} from {rep}"),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(answer.unwrap_or_default())
    }

    fn require_compatible(&self) -> Result<()> {
        if self.poset_compatible {
            return Ok(());
        }
        let bad: Vec<String> = self
            .edge_signs
            .iter()
            .enumerate()
            .filter(|(_, (_, s))| *s != 1)
            .map(|(i, (l, _))| format!("e{} ({l})", i + 1))
            .collect();
        Err(Error::NotPosetCompatible(format!(
            "word {} with t = {}: edges {} are glued against their poset direction",
            self.word,
            self.polygon.t(),
            bad.join(", ")
        )))
    }

    /// `∂` on a surface cell, read through the quotient map.
    pub fn projected_boundary(&self, cell: &Cell) -> Result<ChainElement> {
        let t = self.project(cell, "the boundary", |rep| Ok(self.polygon.boundary(rep)?.to_tensor()))?;
        Ok(t.to_chain().unwrap_or_default())
    }

    /// `Δ_k(q σ) = q^{⊗k}(Δ′_k σ)`, checked against every representative.
    pub fn projected_diagonal(&self, k: usize, cell: &Cell) -> Result<TensorElement> {
        self.require_compatible()?;
        if k < 2 {
            return Err(Error::InvalidArity(k));
        }
        self.project(cell, &format!("Δ{k}"), |rep| self.polygon.diagonal(k, rep))
    }

    /// The surface complex with all projected operations.
    pub fn surface_complex(&self) -> Result<SurfaceComplex> {
        self.require_compatible()?;
        let mut complex = CellComplex::new(
            format!("{} surface of genus {} from {}", self.orientability, self.genus, self.word),
            self.surface_cells(),
        );
        for cell in self.surface_cells() {
            complex.set_boundary(cell.clone(), self.projected_boundary(&cell)?)?;
            for k in 2..self.polygon.vanishing_threshold() {
                complex.set_diagonal(k, cell.clone(), self.projected_diagonal(k, &cell)?)?;
            }
        }
        Ok(SurfaceComplex {
            genus: self.genus,
            orientability: self.orientability,
            complex,
            z2_only: false,
        })
    }
}

/// `C∗(X)` with its boundary and diagonals.
#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    pub genus: u32,
    pub orientability: Orientability,
    pub complex: CellComplex,
    /// The operations are only claimed over `Z₂`.
    pub z2_only: bool,
}

impl SurfaceComplex {
    pub fn top(&self) -> Result<&Cell> {
        let mut tops = self.complex.cells_of_dim(2);
        match (tops.next(), tops.next()) {
            (Some(t), None) => Ok(t),
            _ => Err(Error::UnsupportedSurface("expected exactly one 2-cell".into())),
        }
    }

    pub fn edges(&self) -> Vec<Cell> {
        self.complex.cells_of_dim(1).cloned().collect()
    }

    pub fn diagonal(&self, k: usize, cell: &Cell) -> Result<TensorElement> {
        self.complex.diagonal(k, cell)
    }

    /// Whether some `Δ_k`, `k ≥ 3`, is nonzero after reduction mod 2.
    pub fn has_higher_structure_mod2(&self) -> bool {
        let top = self.complex.top_diagonal().unwrap_or(0);
        (3..=top).any(|k| {
            self.complex
                .cells()
                .iter()
                .any(|c| !self.complex.diagonal(k, c).unwrap_or_default().is_zero_mod2())
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialSurface {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
}

impl SpecialSurface {
    pub const ALL: [SpecialSurface; 4] = [
        SpecialSurface::Sphere,
        SpecialSurface::ProjectivePlane,
        SpecialSurface::Torus,
        SpecialSurface::KleinBottle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialSurface::Sphere => "sphere",
            SpecialSurface::ProjectivePlane => "projective_plane",
            SpecialSurface::Torus => "torus",
            SpecialSurface::KleinBottle => "klein_bottle",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

fn primitive_pair(v: &Cell, x: &Cell) -> TensorElement {
    let mut t = TensorElement::basis(word([v.clone(), x.clone()]));
    t.add_term(word([x.clone(), v.clone()]), Coeff::one());
    t
}

pub fn build_special(kind: SpecialSurface) -> Result<SurfaceComplex> {
    let v = Cell::new(0, Label::plain("v"));
    match kind {
        SpecialSurface::Sphere => {
            let x = Cell::new(2, Label::indexed("X", 0));
            let mut complex = CellComplex::new("sphere", vec![v.clone(), x.clone()]);
            complex.set_diagonal(2, v.clone(), TensorElement::basis(word([v.clone(), v.clone()])))?;
            complex.set_diagonal(2, x.clone(), primitive_pair(&v, &x))?;
            Ok(SurfaceComplex {
                genus: 0,
                orientability: Orientability::Orientable,
                complex,
                z2_only: false,
            })
        }
        SpecialSurface::ProjectivePlane => {
            let e = Cell::edge(1);
            let x = Cell::new(2, Label::indexed("X", 1));
            let mut complex = CellComplex::new("projective plane", vec![v.clone(), e.clone(), x.clone()]);
            complex.set_boundary(x.clone(), ChainElement::term(e.clone(), 2))?;
            complex.set_diagonal(2, v.clone(), TensorElement::basis(word([v.clone(), v.clone()])))?;
            complex.set_diagonal(2, e.clone(), primitive_pair(&v, &e))?;
            let mut dx = primitive_pair(&v, &x);
            dx.add_term(word([e.clone(), e.clone()]), Coeff::one());
            complex.set_diagonal(2, x, dx)?;
            Ok(SurfaceComplex {
                genus: 1,
                orientability: Orientability::Unorientable,
                complex,
                z2_only: true,
            })
        }
        SpecialSurface::Torus => build_scheme(1, Orientability::Orientable)?.surface_complex(),
        SpecialSurface::KleinBottle => build_scheme(2, Orientability::Unorientable)?.surface_complex(),
    }
}

/// `Δ_k(X_g)` evaluated from the closed-form sums (`k ≥ 2`).
pub fn closed_form_diagonal(k: usize, genus: u32, orientability: Orientability) -> Result<TensorElement> {
    check_closed_form(genus, orientability)?;
    if k < 2 {
        return Err(Error::InvalidArity(k));
    }
    let g = genus as usize;
    let e = |i: usize| Cell::edge(i as u32);
    let x = Cell::new(2, Label::indexed("X", genus));
    let v = Cell::new(0, Label::plain("v"));
    let mut out = TensorElement::zero();
    if k == 2 {
        out += &primitive_pair(&v, &x);
    }
    match orientability {
        Orientability::Unorientable => {
            // s with g ∈ {2s−1, 2s} for the odd labels, g ∈ {2s, 2s+1} for the even ones
            let s_odd = (1..=g).find(|&s| g == 2 * s - 1 || g == 2 * s).unwrap_or(0);
            let s_even = (0..=g).find(|&s| g == 2 * s || g == 2 * s + 1).unwrap_or(0);
            if k == 2 {
                for i in 1..=s_odd {
                    out.add_term(word([e(2 * i - 1), e(2 * i - 1)]), Coeff::one());
                }
                for j in 1..=s_even {
                    out.add_term(word([e(2 * j), e(2 * j)]), -Coeff::one());
                }
            } else {
                let i_seq = |p: usize| 2 * p.div_ceil(2) - 1;
                let j_seq = |q: usize| 2 * q.div_ceil(2);
                for ps in increasing_tuples(2 * s_odd, k) {
                    out.add_term(word(ps.iter().map(|p| e(i_seq(p + 1)))), Coeff::one());
                }
                for qs in increasing_tuples(2 * s_even, k) {
                    out.add_term(word(qs.iter().map(|q| e(j_seq(q + 1)))), -Coeff::one());
                }
            }
        }
        Orientability::Orientable => {
            if k == 2 {
                for i in 1..=g {
                    out.add_term(word([e(2 * i - 1), e(2 * i)]), Coeff::one());
                    out.add_term(word([e(2 * i), e(2 * i - 1)]), -Coeff::one());
                }
            } else {
                for is in increasing_tuples(2 * g, k) {
                    out.add_term(word(is.iter().map(|i| e(i + 1))), Coeff::one());
                    out.add_term(word(is.iter().map(|i| e(hat(i + 1)))), -Coeff::one());
                }
            }
        }
    }
    Ok(out)
}

fn check_closed_form(genus: u32, orientability: Orientability) -> Result<()> {
    let ok = match orientability {
        Orientability::Unorientable => genus >= 2,
        Orientability::Orientable => genus >= 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedSurface(format!(
            "no closed form for {orientability} genus {genus}"
        )))
    }
}

/// `C∗(X_g)` with the closed-form operations; the boundary comes from the
/// canonical scheme.
pub fn closed_form_complex(genus: u32, orientability: Orientability) -> Result<SurfaceComplex> {
    check_closed_form(genus, orientability)?;
    let scheme = build_scheme(genus, orientability)?;
    let v = Cell::new(0, Label::plain("v"));
    let mut complex = CellComplex::new(
        format!("{orientability} surface of genus {genus} (closed form)"),
        scheme.surface_cells(),
    );
    for cell in scheme.surface_cells() {
        complex.set_boundary(cell.clone(), scheme.projected_boundary(&cell)?)?;
    }
    complex.set_diagonal(2, v.clone(), TensorElement::basis(word([v.clone(), v.clone()])))?;
    for e in complex.cells_of_dim(1).cloned().collect::<Vec<_>>() {
        complex.set_diagonal(2, e.clone(), primitive_pair(&v, &e))?;
    }
    let top = scheme.top().clone();
    for k in 2.. {
        let value = closed_form_diagonal(k, genus, orientability)?;
        if value.is_zero() {
            break;
        }
        complex.set_diagonal(k, top.clone(), value)?;
    }
    Ok(SurfaceComplex {
        genus,
        orientability,
        complex,
        z2_only: false,
    })
}

/// `(Δ₂ ⊗ 1)Δ₂(c) − (1 ⊗ Δ₂)Δ₂(c)`.
pub fn coassociator(complex: &CellComplex, c: &Cell) -> Result<TensorElement> {
    let Some(d2) = complex.diagonal_op(2) else {
        return Ok(TensorElement::zero());
    };
    let once = complex.diagonal(2, c)?;
    Ok(apply_at_element(d2, 0, &once)? - apply_at_element(d2, 1, &once)?)
}

/// `H∗(X; Z₂)` when `∂ ≡ 0 mod 2`: ranks and the cells as basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2Homology {
    pub ranks: [usize; 3],
    pub basis: [Vec<Cell>; 3],
}

pub fn mod2_homology(surface: &SurfaceComplex) -> Result<Mod2Homology> {
    let complex = &surface.complex;
    for c in complex.cells() {
        let b = complex.boundary(c)?;
        if !b.is_zero_mod2() {
            return Err(Error::BoundaryNotZeroMod2 {
                cell: c.clone(),
                boundary: b.to_string(),
            });
        }
    }
    let basis: [Vec<Cell>; 3] = [0u8, 1, 2].map(|d| complex.cells_of_dim(d).cloned().collect());
    Ok(Mod2Homology {
        ranks: [basis[0].len(), basis[1].len(), basis[2].len()],
        basis,
    })
}

/// The mod-2 cup pairing on `H¹`, entry `(i, j)` being the coefficient of
/// `e_i ⊗ e_j` in `Δ₂` of the 2-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupMatrix {
    pub basis: Vec<Cell>,
    pub entries: Vec<Vec<u8>>,
}

impl CupMatrix {
    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == u8::from(i == j)))
    }

    /// Block diagonal with `[[0, 1], [1, 0]]` blocks on consecutive pairs.
    pub fn is_symplectic_blocks(&self) -> bool {
        let m = self.entries.len();
        m.is_multiple_of(2)
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, &x)| x == u8::from(i / 2 == j / 2 && i != j))
            })
    }
}

impl fmt::Display for CupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn cup_matrix(surface: &SurfaceComplex) -> Result<CupMatrix> {
    mod2_homology(surface)?;
    let top = surface.top()?.clone();
    let d2 = surface.complex.diagonal(2, &top)?;
    let basis = surface.edges();
    let entries = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| u8::from(d2.coeff(&word([a.clone(), b.clone()])).bit(0)))
                .collect()
        })
        .collect();
    Ok(CupMatrix { basis, entries })
}
