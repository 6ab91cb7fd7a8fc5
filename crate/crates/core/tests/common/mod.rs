//! Brute-force oracles shared by the integration tests.

use ainf_core::{word, Cell, GradedOperation, TensorElement, TensorWord};

/// `f` applied at `j` with the sign picked up factor by factor as `f` moves
/// past each element in front of it.
pub fn naive_apply_at(f: &GradedOperation, j: usize, w: &TensorWord) -> TensorElement {
    let factors = w.factors();
    let mut sign = 1i64;
    for x in &factors[..j] {
        if (f.degree() * i64::from(x.dim())).rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    let mut out = TensorElement::zero();
    for (img, c) in &f.value(&factors[j]) {
        let cells = factors[..j]
            .iter()
            .chain(img.factors())
            .chain(&factors[j + 1..])
            .cloned();
        out.add_term(word(cells), c * sign);
    }
    out
}

pub fn all_words(cells: &[Cell], max_len: usize) -> Vec<TensorWord> {
    let mut out: Vec<Vec<Cell>> = cells.iter().map(|c| vec![c.clone()]).collect();
    let mut frontier = out.clone();
    for _ in 1..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                cells.iter().map(move |c| {
                    let mut w = w.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out.into_iter().map(word).collect()
}
