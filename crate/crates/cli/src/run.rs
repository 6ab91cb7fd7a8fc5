use ainf_core::polygon::{build_polygon, split_polygons};
use ainf_core::relation::relation_report;
use ainf_core::surface::{
    build_scheme, build_special, closed_form_diagonal, coassociator, cup_matrix, mod2_homology,
    scheme_from_word, Orientability, SurfaceComplex, SurfaceScheme,
};
use ainf_core::{CellComplex, TensorElement};
use rayon::prelude::*;

use crate::config::{Coefficients, Command, ConfigError, Format, RunConfig, SurfaceTarget, VerifyTarget};
use crate::report::{Entry, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

/// Rendered output and exit status of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub output: String,
}

pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(report) => Outcome {
            status: if report.holds { EXIT_OK } else { EXIT_FAILED },
            output: match config.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            },
        },
        Err(e) => Outcome {
            status: EXIT_INVALID,
            output: format!("error: {e}\n"),
        },
    }
}

struct View(Coefficients);

impl View {
    fn apply(&self, t: TensorElement) -> TensorElement {
        match self.0 {
            Coefficients::Integers => t,
            Coefficients::Mod2 => t.mod2(),
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let mut report = Report::new(config.command_name(), config.params());
    let view = View(config.coefficients);
    match &config.command {
        Command::Polygon { n, t, k, boundary } => polygon(&mut report, &view, *n, *t, *k, *boundary)?,
        Command::Surface { target, k } => surface(&mut report, &view, target, *k)?,
        Command::Verify { target, relations } => verify(&mut report, &view, target, *relations)?,
        Command::Sweep { n_max } => sweep(&mut report, *n_max)?,
        Command::Cup { target } => cup(&mut report, target)?,
    }
    Ok(report)
}

fn polygon(
    report: &mut Report,
    view: &View,
    n: usize,
    t: usize,
    k: Option<usize>,
    boundary: bool,
) -> Result<(), ConfigError> {
    let p = build_polygon(n, t)?;
    if boundary {
        for c in p.cells() {
            report.push(Entry::new("boundary", c, &view.apply(p.boundary(c)?.to_tensor())));
        }
    }
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (2..p.vanishing_threshold()).collect(),
    };
    for k in ks {
        let cells: Vec<_> = if k == 2 { p.cells().to_vec() } else { vec![p.top().clone()] };
        for c in cells {
            report.push(Entry::new("diagonal", &c, &view.apply(p.diagonal(k, &c)?)).with_k(k));
        }
    }
    Ok(())
}

enum Surface {
    Scheme(Box<SurfaceScheme>, SurfaceComplex),
    Special(SurfaceComplex),
}

impl Surface {
    fn complex(&self) -> &SurfaceComplex {
        match self {
            Surface::Scheme(_, c) | Surface::Special(c) => c,
        }
    }

    /// One past the largest relation index worth checking.
    fn relation_bound(&self) -> usize {
        match self {
            Surface::Scheme(s, _) => s.polygon().n() + 1,
            Surface::Special(c) => c.complex.top_diagonal().unwrap_or(2) + 1,
        }
    }

    /// The closed-form surface this matches, if any.
    fn closed_form(&self) -> Option<(u32, Orientability)> {
        match self {
            Surface::Scheme(s, _) if s.is_canonical() => Some((s.genus(), s.orientability())),
            _ => None,
        }
    }
}

fn load_surface(target: &SurfaceTarget) -> Result<Surface, ConfigError> {
    let scheme = match target {
        SurfaceTarget::Canonical { genus, orientability } => build_scheme(*genus, *orientability)?,
        SurfaceTarget::Word { word, t } => scheme_from_word(word, *t)?,
        SurfaceTarget::Special(kind) => return Ok(Surface::Special(build_special(*kind)?)),
    };
    let complex = scheme.surface_complex()?;
    Ok(Surface::Scheme(Box::new(scheme), complex))
}

fn describe(surface: &Surface) -> Entry {
    let c = surface.complex();
    let mut note = format!("{} genus {}", c.orientability, c.genus);
    if let Surface::Scheme(s, _) = surface {
        note.push_str(&format!(", word {}, n={}, t={}", s.word(), s.polygon().n(), s.polygon().t()));
    }
    if c.z2_only {
        note.push_str(", operations defined over Z2 only");
    }
    let top = c.top().map(|t| t.to_string()).unwrap_or_default();
    Entry::new("scheme", top, &TensorElement::zero()).with_note(note)
}

fn surface(report: &mut Report, view: &View, target: &SurfaceTarget, k: Option<usize>) -> Result<(), ConfigError> {
    let s = load_surface(target)?;
    report.push(describe(&s));
    let complex = s.complex();
    let top = complex.top()?.clone();
    let ks: Vec<usize> = match (k, &s) {
        (Some(k), _) => vec![k],
        (None, Surface::Scheme(scheme, _)) => (2..scheme.polygon().vanishing_threshold()).collect(),
        (None, Surface::Special(c)) => (2..=c.complex.top_diagonal().unwrap_or(2)).collect(),
    };
    for k in ks {
        let projected = view.apply(match &s {
            Surface::Scheme(scheme, _) => scheme.projected_diagonal(k, &top)?,
            Surface::Special(c) => c.diagonal(k, &top)?,
        });
        report.push(Entry::new("projected", &top, &projected).with_k(k));
        if let Some((genus, orientability)) = s.closed_form() {
            let closed = view.apply(closed_form_diagonal(k, genus, orientability)?);
            report.push(Entry::new("closed form", &top, &closed).with_k(k));
            let difference = projected - closed;
            let holds = difference.is_zero();
            report.push(Entry::new("agreement", &top, &difference).with_k(k).with_holds(holds));
        }
    }
    Ok(())
}

fn push_relations(
    report: &mut Report,
    view: &View,
    complex: &CellComplex,
    (lo, hi): (usize, usize),
) -> Result<(), ConfigError> {
    let reduce = matches!(view.0, Coefficients::Mod2);
    let working = if reduce { complex.mod2() } else { complex.clone() };
    for r in lo..=hi {
        let rep = relation_report(&working, r)?;
        for (cell, defect) in &rep.defects {
            let defect = view.apply(defect.clone());
            let holds = defect.is_zero();
            report.push(Entry::new("relation", cell, &defect).with_relation(r).with_holds(holds));
        }
        if let (Some(agrees), false) = (rep.reduced_agrees, reduce) {
            report.push(
                Entry::new("reduced form", "*", &TensorElement::zero())
                    .with_relation(r)
                    .with_holds(agrees),
            );
        }
    }
    Ok(())
}

fn verify(
    report: &mut Report,
    view: &View,
    target: &VerifyTarget,
    relations: Option<(usize, usize)>,
) -> Result<(), ConfigError> {
    match target {
        VerifyTarget::Polygon { n, t } => {
            let p = build_polygon(*n, *t)?;
            push_relations(report, view, p.complex(), relations.unwrap_or((2, n + 1)))
        }
        VerifyTarget::Surface(target) => {
            let s = load_surface(target)?;
            report.push(describe(&s));
            let complex = &s.complex().complex;
            push_relations(report, view, complex, relations.unwrap_or((2, s.relation_bound())))?;
            for c in complex.cells() {
                let defect = coassociator(complex, c)?;
                let entry = match view.0 {
                    Coefficients::Mod2 => {
                        let defect = defect.mod2();
                        let holds = defect.is_zero();
                        Entry::new("coassociativity", c, &defect).with_holds(holds)
                    }
                    Coefficients::Integers => {
                        let note = if defect.is_zero() { "strict over Z" } else { "not strict over Z" };
                        Entry::new("coassociativity", c, &defect).with_note(note)
                    }
                };
                report.push(entry);
            }
            Ok(())
        }
    }
}

/// Outcome of checking one polygon in the sweep grid.
fn sweep_point(n: usize, t: usize) -> Result<Vec<Entry>, ConfigError> {
    let p = build_polygon(n, t)?;
    let label = format!("n={n} t={t}");
    let mut out = Vec::new();

    let mut failing = None;
    for r in 2..=n + 1 {
        let rep = relation_report(p.complex(), r)?;
        failing = rep
            .failing_cells()
            .next()
            .map(|(cell, defect)| (r, cell.clone(), defect.clone()));
        if failing.is_some() {
            break;
        }
    }
    out.push(match failing {
        None => Entry::new("relations", p.top(), &TensorElement::zero())
            .with_relation(n + 1)
            .with_holds(true)
            .with_note(label.clone()),
        Some((r, cell, defect)) => Entry::new("relations", &cell, &defect)
            .with_relation(r)
            .with_holds(false)
            .with_note(label.clone()),
    });

    let threshold = p.vanishing_threshold();
    let mut vanishing_ok = true;
    for k in 2..=threshold + 1 {
        vanishing_ok &= p.diagonal(k, p.top())?.is_zero() == (k >= threshold);
    }
    out.push(
        Entry::new("threshold", p.top(), &TensorElement::zero())
            .with_k(threshold)
            .with_holds(vanishing_ok)
            .with_note(label.clone()),
    );

    if t < n {
        let split = split_polygons(n, t)?;
        let mut bad = None;
        for k in 2..=threshold + 1 {
            let id = split.check_identity(k)?;
            if !id.holds {
                bad = Some((k, id.glued - id.expected));
                break;
            }
        }
        out.push(match bad {
            None => Entry::new("split", p.top(), &TensorElement::zero())
                .with_k(threshold + 1)
                .with_holds(true)
                .with_note(label),
            Some((k, diff)) => Entry::new("split", p.top(), &diff)
                .with_k(k)
                .with_holds(false)
                .with_note(label),
        });
    }
    Ok(out)
}

fn sweep(report: &mut Report, n_max: usize) -> Result<(), ConfigError> {
    let grid: Vec<(usize, usize)> = (3..=n_max).flat_map(|n| (2..=n).map(move |t| (n, t))).collect();
    // collect keeps grid order whatever the completion order
    let results: Vec<Result<Vec<Entry>, ConfigError>> =
        grid.par_iter().map(|&(n, t)| sweep_point(n, t)).collect();
    for r in results {
        for e in r? {
            report.push(e);
        }
    }
    Ok(())
}

fn cup(report: &mut Report, target: &SurfaceTarget) -> Result<(), ConfigError> {
    let s = load_surface(target)?;
    report.push(describe(&s));
    let complex = s.complex();
    let h = mod2_homology(complex)?;
    report.push(
        Entry::new("homology", "H", &TensorElement::zero())
            .with_note(format!("Z2 ranks {} {} {}", h.ranks[0], h.ranks[1], h.ranks[2])),
    );
    let m = cup_matrix(complex)?;
    let basis: Vec<String> = m.basis.iter().map(|c| c.to_string()).collect();
    let expected = match &s {
        Surface::Scheme(..) if s.closed_form().is_none() => None,
        _ if complex.orientability.is_orientable() => Some(m.is_symplectic_blocks()),
        _ => Some(m.is_identity()),
    };
    let mut entry = Entry::new("cup", complex.top()?, &TensorElement::zero())
        .with_note(format!("basis {}", basis.join(" ")));
    entry.matrix = Some(m.entries.clone());
    entry.holds = expected;
    report.push(entry);
    Ok(())
}
