//! Piecewise peak formulas for the surface families and the named graph
//! families, and sweeps that compare them with the computed distributions.
//!
//! Every bracket is evaluated as a floor. The ceiling reading is carried
//! alongside so a disagreement can be traced to the bracket convention.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::families::{build_table, FamilyId, FamilyTable};
use crate::graphfam::{genus_poly_in, GraphFamily, NamedFamily};
use crate::seqcore::{is_log_concave, is_unimodal, mode_interval, GenusDistribution, ModeInterval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeakError {
    #[error("{subject}: n = {n} is below the minimum {min}")]
    OutOfRange { subject: Subject, n: u32, min: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Family(FamilyId),
    Graph(GraphFamily),
}

impl Subject {
    pub fn all() -> impl Iterator<Item = Subject> {
        FamilyId::all()
            .map(Subject::Family)
            .chain(GraphFamily::ALL.into_iter().map(Subject::Graph))
    }

    fn rule(self) -> &'static PeakRule {
        match self {
            Subject::Family(j) => &FAMILY_RULES[j.get() as usize - 1],
            Subject::Graph(GraphFamily::L) => &L_RULE,
            Subject::Graph(GraphFamily::CL | GraphFamily::ML) => &CL_RULE,
            Subject::Graph(GraphFamily::RL) => &RL_RULE,
            Subject::Graph(GraphFamily::R) => &R_RULE,
        }
    }

    /// Smallest `n` accepted by [`peak_formula`] / [`graph_peak_formula`].
    pub fn min_n(self) -> u32 {
        match self {
            Subject::Family(_) => 1,
            Subject::Graph(_) => self.rule().pieces[0].from,
        }
    }

    /// The `n` range the piecewise formula is stated for, capped at `max_n`.
    pub fn stated_range(self, max_n: u32) -> RangeInclusive<u32> {
        self.rule().pieces[0].from..=max_n
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Family(j) => write!(f, "{j}"),
            Subject::Graph(g) => write!(f, "{g}"),
        }
    }
}

/// `floor((a n + b) / d) + add`, or its ceiling counterpart.
#[derive(Debug, Clone, Copy)]
struct Bracket {
    a: i64,
    b: i64,
    d: i64,
    add: i64,
}

impl Bracket {
    fn floor(&self, n: u32) -> usize {
        ((self.a * n as i64 + self.b).div_euclid(self.d) + self.add) as usize
    }

    fn ceil(&self, n: u32) -> usize {
        let num = self.a * n as i64 + self.b;
        ((num + self.d - 1).div_euclid(self.d) + self.add) as usize
    }
}

#[derive(Debug, Clone, Copy)]
enum Expr {
    Bracket(Bracket),
    Fixed(usize, usize),
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    from: u32,
    to: u32,
    expr: Expr,
}

struct PeakRule {
    pieces: &'static [Piece],
    excluded: &'static [u32],
}

const OPEN: u32 = u32::MAX;

const fn br(from: u32, to: u32, a: i64, b: i64, d: i64, add: i64) -> Piece {
    Piece {
        from,
        to,
        expr: Expr::Bracket(Bracket { a, b, d, add }),
    }
}

const fn fixed(n: u32, lo: usize, hi: usize) -> Piece {
    Piece {
        from: n,
        to: n,
        expr: Expr::Fixed(lo, hi),
    }
}

const fn rule(pieces: &'static [Piece]) -> PeakRule {
    PeakRule {
        pieces,
        excluded: &[],
    }
}

const FAMILY_RULES: [PeakRule; 11] = [
    // S_1
    PeakRule {
        pieces: &[br(1, OPEN, 1, 1, 3, 0)],
        excluded: &[2],
    },
    // S_2
    rule(&[
        br(3, 8, 1, -1, 2, 0),
        fixed(9, 3, 3),
        br(10, OPEN, 1, 0, 3, 1),
    ]),
    // S_3
    rule(&[
        br(1, 6, 1, -1, 2, 0),
        fixed(7, 2, 2),
        br(8, OPEN, 1, 2, 3, 0),
    ]),
    // S_4: the two-mode case at n = 3 takes precedence over "otherwise"
    rule(&[fixed(3, 1, 2), br(1, OPEN, 1, 0, 3, 1)]),
    // S_5
    rule(&[
        br(2, 5, 1, 0, 2, 0),
        br(6, 16, 1, 1, 3, 1),
        br(17, OPEN, 1, 2, 3, 1),
    ]),
    // S_6
    rule(&[br(2, OPEN, 1, 2, 3, 0)]),
    // S_7
    rule(&[
        br(2, 7, 1, 0, 2, 0),
        fixed(8, 3, 3),
        br(9, OPEN, 1, 1, 3, 1),
    ]),
    // S_8
    rule(&[
        br(3, 8, 1, 1, 2, 0),
        fixed(9, 4, 4),
        br(10, OPEN, 1, 0, 3, 2),
    ]),
    // S_9
    rule(&[
        br(2, 8, 1, 1, 2, 0),
        fixed(9, 4, 4),
        br(10, OPEN, 1, 0, 3, 2),
    ]),
    // S_10
    rule(&[
        br(1, 6, 1, 1, 2, 0),
        fixed(7, 3, 3),
        br(8, OPEN, 1, 2, 3, 1),
    ]),
    // S_11
    rule(&[
        br(2, 5, 1, 0, 2, 1),
        br(6, 16, 1, 1, 3, 2),
        br(17, OPEN, 1, 2, 3, 2),
    ]),
];

const L_RULE: PeakRule = rule(&[br(2, OPEN, 1, 2, 3, 0)]);
const CL_RULE: PeakRule = rule(&[
    br(2, 5, 1, 0, 2, 0),
    br(6, 16, 1, 1, 3, 1),
    br(17, OPEN, 1, 2, 3, 1),
]);
const RL_RULE: PeakRule = rule(&[
    br(1, 6, 1, 1, 2, 0),
    fixed(7, 3, 3),
    br(8, OPEN, 1, 1, 3, 1),
]);
const R_RULE: PeakRule = rule(&[
    br(1, 6, 1, 1, 2, 0),
    fixed(7, 3, 3),
    br(8, OPEN, 1, 2, 3, 1),
]);

/// Formula value at `n` under the floor and ceiling readings, or `None`
/// when no piece covers `n`.
fn evaluate(rule: &PeakRule, n: u32) -> Option<(ModeInterval, ModeInterval)> {
    if rule.excluded.contains(&n) {
        return None;
    }
    let piece = rule.pieces.iter().find(|p| p.from <= n && n <= p.to)?;
    Some(match piece.expr {
        Expr::Fixed(lo, hi) => (ModeInterval::new(lo, hi), ModeInterval::new(lo, hi)),
        Expr::Bracket(b) => (
            ModeInterval::peak(b.floor(n)),
            ModeInterval::peak(b.ceil(n)),
        ),
    })
}

/// A formula lookup. When the formula does not cover `n`, `modes` is the
/// computed mode interval and `stated` is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakValue {
    pub modes: ModeInterval,
    pub stated: bool,
    /// The same formula with every bracket read as a ceiling.
    pub ceiling: Option<ModeInterval>,
}

/// Peak (or mode interval) of `S_j^n` by the piecewise formula.
pub fn peak_formula(j: FamilyId, n: u32) -> Result<PeakValue, PeakError> {
    let subject = Subject::Family(j);
    if n < subject.min_n() {
        return Err(PeakError::OutOfRange {
            subject,
            n,
            min: subject.min_n(),
        });
    }
    Ok(match evaluate(subject.rule(), n) {
        Some((floor, ceil)) => PeakValue {
            modes: floor,
            stated: true,
            ceiling: Some(ceil),
        },
        None => PeakValue {
            modes: mode_interval(build_table(n).get(j, n).unwrap()).interval,
            stated: false,
            ceiling: None,
        },
    })
}

/// Peak of a named graph family by its piecewise formula.
pub fn graph_peak_formula(family: GraphFamily, n: u32) -> Result<ModeInterval, PeakError> {
    let subject = Subject::Graph(family);
    evaluate(subject.rule(), n)
        .map(|(floor, _)| floor)
        .ok_or(PeakError::OutOfRange {
            subject,
            n,
            min: subject.min_n(),
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakFormulaResult {
    pub subject: Subject,
    pub n: u32,
    pub formula_modes: ModeInterval,
    /// False when the formula does not cover `n`; `formula_modes` then
    /// repeats the computed interval.
    pub formula_stated: bool,
    pub ceiling_modes: Option<ModeInterval>,
    pub empirical_modes: ModeInterval,
    pub agree: bool,
    pub unimodal: bool,
    pub log_concave: bool,
}

/// Strict local-maximum claims backing the peak theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeakLemma {
    /// `S_3^n`, `n >= 8`, at `floor((n+2)/3)`.
    ThreeAtThird,
    /// `S_5^n`, `6 <= n <= 16`, at `floor((n+1)/3) + 1`.
    FiveLow,
    /// `S_5^n`, `n >= 17`, at `floor((n+2)/3) + 1`.
    FiveHigh,
    /// `S_9^n`, `n >= 10`, at `floor(n/3) + 2`.
    NineAtThird,
}

impl PeakLemma {
    pub const ALL: [PeakLemma; 4] = [
        Self::ThreeAtThird,
        Self::FiveLow,
        Self::FiveHigh,
        Self::NineAtThird,
    ];

    fn family(self) -> u8 {
        match self {
            Self::ThreeAtThird => 3,
            Self::FiveLow | Self::FiveHigh => 5,
            Self::NineAtThird => 9,
        }
    }

    /// The claimed strict maximum at `n`, if the lemma covers `n`.
    fn index(self, n: u32) -> Option<usize> {
        let n = n as usize;
        match self {
            Self::ThreeAtThird if n >= 8 => Some(n.div_ceil(3)),
            Self::FiveLow if (6..=16).contains(&n) => Some((n + 1) / 3 + 1),
            Self::FiveHigh if n >= 17 => Some(n.div_ceil(3) + 1),
            Self::NineAtThird if n >= 10 => Some(n / 3 + 2),
            _ => None,
        }
    }
}

impl fmt::Display for PeakLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ThreeAtThird => "s3 strict max at floor((n+2)/3), n>=8",
            Self::FiveLow => "s5 strict max at floor((n+1)/3)+1, 6<=n<=16",
            Self::FiveHigh => "s5 strict max at floor((n+2)/3)+1, n>=17",
            Self::NineAtThird => "s9 strict max at floor(n/3)+2, n>=10",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub lemma: PeakLemma,
    pub n: u32,
    pub index: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeakSweep {
    pub results: Vec<PeakFormulaResult>,
    pub inequalities: Vec<InequalityCheck>,
}

impl PeakSweep {
    pub fn all_agree(&self) -> bool {
        self.results.iter().all(|r| r.agree) && self.inequalities.iter().all(|c| c.holds)
    }
}

fn distribution(table: &FamilyTable, subject: Subject, n: u32) -> GenusDistribution {
    match subject {
        Subject::Family(j) => table.get(j, n).expect("table covers n").clone(),
        Subject::Graph(g) => {
            let fam = NamedFamily::new(g, n).expect("n >= 1");
            genus_poly_in(table, fam).expect("table covers n")
        }
    }
}

/// Strict inequalities `g_p > g_{p-1}` and `g_p > g_{p+1}` for each lemma
/// covering some `n` in `ns`.
pub fn check_peak_inequalities(
    table: &FamilyTable,
    ns: RangeInclusive<u32>,
) -> Vec<InequalityCheck> {
    let mut out = Vec::new();
    for n in ns {
        for lemma in PeakLemma::ALL {
            if let Some(p) = lemma.index(n) {
                let row = table.row(lemma.family(), n);
                let holds = p >= 1 && row.get(p) > row.get(p - 1) && row.get(p) > row.get(p + 1);
                out.push(InequalityCheck {
                    lemma,
                    n,
                    index: p,
                    holds,
                });
            }
        }
    }
    out
}

/// Compares formula and computed modes for `subject` over `ns`; for
/// surface families the lemma inequalities over `ns` are included.
pub fn verify_peaks(subject: Subject, ns: RangeInclusive<u32>) -> Result<PeakSweep, PeakError> {
    let table = build_table(ns.end() + 1);
    verify_peaks_in(&table, subject, ns)
}

pub fn verify_peaks_in(
    table: &FamilyTable,
    subject: Subject,
    ns: RangeInclusive<u32>,
) -> Result<PeakSweep, PeakError> {
    if *ns.start() < subject.min_n() {
        return Err(PeakError::OutOfRange {
            subject,
            n: *ns.start(),
            min: subject.min_n(),
        });
    }
    let mut sweep = PeakSweep::default();
    for n in ns.clone() {
        let dist = distribution(table, subject, n);
        let empirical = mode_interval(&dist).interval;
        let (formula_modes, ceiling_modes, formula_stated) = match evaluate(subject.rule(), n) {
            Some((floor, ceil)) => (floor, Some(ceil), true),
            None => (empirical, None, false),
        };
        sweep.results.push(PeakFormulaResult {
            subject,
            n,
            formula_modes,
            formula_stated,
            ceiling_modes,
            empirical_modes: empirical,
            agree: formula_modes == empirical,
            unimodal: is_unimodal(&dist),
            log_concave: is_log_concave(&dist),
        });
    }
    if let Subject::Family(j) = subject {
        sweep.inequalities = check_peak_inequalities(table, ns)
            .into_iter()
            .filter(|c| c.lemma.family() == j.get())
            .collect();
    }
    Ok(sweep)
}
