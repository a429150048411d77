//! Finite nonnegative integer sequences indexed by genus, and the machinery
//! for deciding unimodality of positive shifted combinations of them.
//!
//! A [`GenusDistribution`] is stored in trimmed form: an offset (the first
//! genus with a nonzero count) followed by the counts up to the last nonzero
//! one. Reads outside that support are zero, which is what the shifted
//! combinations rely on.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("sequence has no nonzero entry")]
    ZeroSequence,
    #[error("combination needs at least one term")]
    EmptyTermList,
    #[error("term {index} has non-positive weight {weight}")]
    NonPositiveWeight { index: usize, weight: String },
    #[error("term {index} is not unimodal")]
    NonUnimodalTerm { index: usize },
    #[error("combined entry at genus {genus} is {value}, not an integer")]
    NonIntegerResult { genus: usize, value: String },
}

/// Trimmed genus distribution; doubles as the coefficient list of a genus
/// polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenusDistribution {
    offset: usize,
    counts: Vec<BigUint>,
}

impl GenusDistribution {
    /// Builds a distribution from counts starting at genus `offset`, trimming
    /// zero entries at both ends.
    pub fn new(offset: usize, mut counts: Vec<BigUint>) -> Result<Self, SeqError> {
        let first = counts
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(SeqError::ZeroSequence)?;
        let last = counts.iter().rposition(|c| !c.is_zero()).unwrap();
        counts.truncate(last + 1);
        counts.drain(..first);
        Ok(Self {
            offset: offset + first,
            counts,
        })
    }

    /// Dense counts indexed from genus 0. `None` when every entry is zero.
    pub fn from_dense(counts: Vec<BigUint>) -> Option<Self> {
        Self::new(0, counts).ok()
    }

    pub fn from_u64s(offset: usize, counts: &[u64]) -> Result<Self, SeqError> {
        Self::new(offset, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The distribution `{g_0 = 1}`, i.e. the constant polynomial 1.
    pub fn unit() -> Self {
        Self {
            offset: 0,
            counts: vec![BigUint::one()],
        }
    }

    pub fn monomial(degree: usize, coeff: BigUint) -> Result<Self, SeqError> {
        Self::new(degree, vec![coeff])
    }

    /// Minimum genus with a nonzero count.
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Maximum genus with a nonzero count.
    pub fn max_genus(&self) -> usize {
        self.offset + self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Count at absolute genus `genus`; zero outside the support.
    pub fn get(&self, genus: usize) -> BigUint {
        self.get_ref(genus).cloned().unwrap_or_default()
    }

    pub(crate) fn get_ref(&self, genus: usize) -> Option<&BigUint> {
        genus
            .checked_sub(self.offset)
            .and_then(|k| self.counts.get(k))
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Multiplies the polynomial by `x^by`.
    pub fn shifted_up(&self, by: usize) -> Self {
        Self {
            offset: self.offset + by,
            counts: self.counts.clone(),
        }
    }

    /// Divides the polynomial by `x^by`; `None` if that would move a nonzero
    /// count below genus 0.
    pub fn shifted_down(&self, by: usize) -> Option<Self> {
        Some(Self {
            offset: self.offset.checked_sub(by)?,
            counts: self.counts.clone(),
        })
    }

    pub fn scaled(&self, factor: &BigUint) -> Result<Self, SeqError> {
        Self::new(
            self.offset,
            self.counts.iter().map(|c| c * factor).collect(),
        )
    }

    /// `(genus, count)` pairs over the support.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.offset + k, c))
    }

    /// Dense copy indexed from genus 0, padded with zeros to `len` if needed.
    pub fn to_dense(&self, len: usize) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); len.max(self.max_genus() + 1)];
        for (g, c) in self.iter() {
            out[g] = c.clone();
        }
        out
    }

    /// Counts as decimal strings, lowest genus first.
    pub fn decimal_counts(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_str_radix(10)).collect()
    }
}

impl fmt::Debug for GenusDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GenusDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")@{}", self.offset)
    }
}

/// Inclusive interval `[lo, hi]` of mode indices, in absolute genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeInterval {
    pub lo: usize,
    pub hi: usize,
}

impl ModeInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn peak(at: usize) -> Self {
        Self { lo: at, hi: at }
    }

    pub fn span(&self) -> usize {
        self.hi - self.lo
    }

    pub fn is_peak(&self) -> bool {
        self.lo == self.hi
    }

    pub fn shifted(&self, by: usize) -> Self {
        Self {
            lo: self.lo + by,
            hi: self.hi + by,
        }
    }
}

impl fmt::Display for ModeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Result of [`mode_interval`]. `contiguous` is false when the maxima do not
/// form a single run, in which case `interval` is the leftmost maximal run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeReport {
    pub interval: ModeInterval,
    pub contiguous: bool,
}

/// Weakly increasing, then weakly decreasing.
pub fn is_unimodal(seq: &GenusDistribution) -> bool {
    is_unimodal_slice(&seq.counts)
}

fn is_unimodal_slice<T: Ord>(a: &[T]) -> bool {
    let mut k = 0;
    while k + 1 < a.len() && a[k] <= a[k + 1] {
        k += 1;
    }
    while k + 1 < a.len() && a[k] >= a[k + 1] {
        k += 1;
    }
    k + 1 >= a.len()
}

/// `a_k^2 >= a_{k-1} a_{k+1}` at every interior index.
pub fn is_log_concave(seq: &GenusDistribution) -> bool {
    seq.counts
        .windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

pub fn mode_interval(seq: &GenusDistribution) -> ModeReport {
    let max = seq.counts.iter().max().expect("nonempty");
    let first = seq.counts.iter().position(|c| c == max).unwrap();
    let run_end = seq.counts[first..]
        .iter()
        .position(|c| c != max)
        .map_or(seq.counts.len() - 1, |k| first + k - 1);
    let last = seq.counts.iter().rposition(|c| c == max).unwrap();
    ModeReport {
        interval: ModeInterval::new(seq.offset + first, seq.offset + run_end),
        contiguous: run_end == last,
    }
}

/// One summand `weight * x_{i - shift}` of a shifted positive combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedTerm {
    pub weight: BigRational,
    pub shift: usize,
    pub seq: GenusDistribution,
}

impl ShiftedTerm {
    pub fn new(weight: BigRational, shift: usize, seq: GenusDistribution) -> Self {
        Self { weight, shift, seq }
    }

    /// Integer weight shorthand.
    pub fn int(weight: u64, shift: usize, seq: GenusDistribution) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(weight)), shift, seq)
    }

    fn first(&self) -> usize {
        self.seq.offset + self.shift
    }

    fn last(&self) -> usize {
        self.seq.max_genus() + self.shift
    }
}

fn check_weights(terms: &[ShiftedTerm]) -> Result<(), SeqError> {
    if terms.is_empty() {
        return Err(SeqError::EmptyTermList);
    }
    for (index, t) in terms.iter().enumerate() {
        if !t.weight.is_positive() {
            return Err(SeqError::NonPositiveWeight {
                index,
                weight: t.weight.to_string(),
            });
        }
    }
    Ok(())
}

/// `z_i = sum_j weight_j * seq_j[i - shift_j]`, exact, with out-of-support
/// reads taken as zero. Every resulting entry must be an integer.
pub fn combine(terms: &[ShiftedTerm]) -> Result<GenusDistribution, SeqError> {
    check_weights(terms)?;
    let lo = terms.iter().map(ShiftedTerm::first).min().unwrap();
    let hi = terms.iter().map(ShiftedTerm::last).max().unwrap();
    let mut acc = vec![BigRational::zero(); hi - lo + 1];
    for t in terms {
        for (g, c) in t.seq.iter() {
            let idx = g + t.shift - lo;
            acc[idx] += &t.weight * BigInt::from(c.clone());
        }
    }
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            if v.is_integer() {
                Ok(v.to_integer().to_biguint().expect("positive weights"))
            } else {
                Err(SeqError::NonIntegerResult {
                    genus: lo + k,
                    value: v.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    GenusDistribution::new(lo, counts)
}

/// `[min_j(l_j + r_j), max_j(m_j + r_j)]` over the terms' mode intervals.
pub fn criterion_window(terms: &[ShiftedTerm]) -> Result<ModeInterval, SeqError> {
    if terms.is_empty() {
        return Err(SeqError::EmptyTermList);
    }
    let mut window: Option<ModeInterval> = None;
    for (index, t) in terms.iter().enumerate() {
        if !is_unimodal(&t.seq) {
            return Err(SeqError::NonUnimodalTerm { index });
        }
        let modes = mode_interval(&t.seq).interval.shifted(t.shift);
        window = Some(match window {
            None => modes,
            Some(w) => ModeInterval::new(w.lo.min(modes.lo), w.hi.max(modes.hi)),
        });
    }
    Ok(window.unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowVerdict {
    pub combined: GenusDistribution,
    /// Decided from the window `[L, M]` alone.
    pub unimodal: bool,
    pub window: ModeInterval,
    pub window_span: usize,
    /// `window_span <= 3`; reported, never used to decide.
    pub corollary_fires: bool,
    /// Whether the window verdict matches `is_unimodal` on the whole sequence.
    pub full_check_agrees: bool,
}

/// Decides unimodality of the combination by inspecting only the criterion
/// window. Outside the window the combination is monotone on each flank.
pub fn window_unimodality_check(terms: &[ShiftedTerm]) -> Result<WindowVerdict, SeqError> {
    check_weights(terms)?;
    let window = criterion_window(terms)?;
    let combined = combine(terms)?;
    let slice: Vec<&BigUint> = (window.lo..=window.hi)
        .map(|g| {
            combined
                .get_ref(g)
                .expect("mode of a term lies inside the combined support")
        })
        .collect();
    let unimodal = is_unimodal_slice(&slice);
    let full = is_unimodal(&combined);
    Ok(WindowVerdict {
        unimodal,
        window,
        window_span: window.span(),
        corollary_fires: window.span() <= 3,
        full_check_agrees: unimodal == full,
        combined,
    })
}

/// Dense accumulator for sums of `factor * x^shift * row`.
#[derive(Debug, Default)]
pub(crate) struct Acc(Vec<BigUint>);

impl Acc {
    pub(crate) fn new() -> Self {
        Acc(Vec::new())
    }

    pub(crate) fn add(mut self, row: &GenusDistribution, shift: usize, factor: u32) -> Self {
        let top = row.max_genus() + shift;
        if self.0.len() <= top {
            self.0.resize(top + 1, BigUint::zero());
        }
        for (g, c) in row.iter() {
            self.0[g + shift] += c * factor;
        }
        self
    }

    pub(crate) fn add_opt(
        self,
        row: Option<&GenusDistribution>,
        shift: usize,
        factor: u32,
    ) -> Self {
        match row {
            Some(r) => self.add(r, shift, factor),
            None => self,
        }
    }

    /// `None` when nothing nonzero was added.
    pub(crate) fn finish(self) -> Option<GenusDistribution> {
        GenusDistribution::from_dense(self.0)
    }
}
