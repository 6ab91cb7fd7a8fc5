//! Cells: the basis generators of a cellular chain complex.

use alloc::string::String;
use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;

/// The name of a cell, split into an alphabetic stem and an optional numeric
/// index so that `e2` sorts before `e10`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label {
    stem: Arc<str>,
    index: Option<u32>,
}

impl Label {
    pub fn plain(stem: &str) -> Self {
        Label {
            stem: Arc::from(stem),
            index: None,
        }
    }

    pub fn indexed(stem: &str, index: u32) -> Self {
        Label {
            stem: Arc::from(stem),
            index: Some(index),
        }
    }

    /// Splits a trailing run of decimal digits off as the index.
    ///
    /// A label made only of digits keeps them in the stem.
    pub fn parse(s: &str) -> Self {
        let digits = s.bytes().rev().take_while(u8::is_ascii_digit).count();
        if digits == 0 || digits == s.len() {
            return Label::plain(s);
        }
        let (stem, idx) = s.split_at(s.len() - digits);
        match idx.parse::<u32>() {
            Ok(i) => Label::indexed(stem, i),
            Err(_) => Label::plain(s),
        }
    }

    pub fn stem(&self) -> &str {
        &self.stem
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.stem
            .cmp(&other.stem)
            .then_with(|| self.index.cmp(&other.index))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.stem, i),
            None => f.write_str(&self.stem),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cell of dimension 0, 1 or 2. Cells compare by `(dim, label)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    dim: u8,
    label: Label,
}

impl Cell {
    pub fn new(dim: u8, label: Label) -> Self {
        debug_assert!(dim <= 2, "only cells of dimension 0, 1, 2 are modelled");
        Cell { dim, label }
    }

    pub fn vertex(i: u32) -> Self {
        Cell::new(0, Label::indexed("v", i))
    }

    pub fn edge(i: u32) -> Self {
        Cell::new(1, Label::indexed("e", i))
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn label(&self) -> &Label {
        &self.label
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.label, f)
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.label, self.dim)
    }
}
