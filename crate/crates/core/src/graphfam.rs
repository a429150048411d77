//! Genus polynomials of the named ladder-like graph families, the ladder
//! composition over user-supplied partial polynomials, and the coupled
//! two-sequence recurrence left open for unimodality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::families::{build_table, FamilyId, FamilyTable};
use crate::seqcore::{is_log_concave, is_unimodal, Acc, GenusDistribution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphFamError {
    #[error("{family} needs n >= {min}, got {n}")]
    NOutOfRange {
        family: GraphFamily,
        n: u32,
        min: u32,
    },
    #[error("g_0(CL_{n}) = {g0} is below 2; the Mobius adjustment does not apply")]
    InvalidAdjustment { n: u32, g0: String },
    #[error("table holds n <= {have}, need {need}")]
    TableTooSmall { have: u32, need: u32 },
    #[error("every partial polynomial is zero")]
    EmptyPartials,
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
}

/// Closed-end ladder, circular ladder, Mobius ladder, Ringel ladder, cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphFamily {
    L,
    CL,
    ML,
    RL,
    R,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 5] = [Self::L, Self::CL, Self::ML, Self::RL, Self::R];

    pub fn tag(self) -> &'static str {
        match self {
            Self::L => "L",
            Self::CL => "CL",
            Self::ML => "ML",
            Self::RL => "RL",
            Self::R => "R",
        }
    }

    /// Number of cubic vertices is `2n` for L/CL/ML and `2n + 2` for RL/R, so
    /// the total embedding count is `4^(n + extra)`.
    pub fn total_exponent(self, n: u32) -> u32 {
        match self {
            Self::L | Self::CL | Self::ML => n,
            Self::RL | Self::R => n + 1,
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GraphFamily {
    type Err = GraphFamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphFamError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NamedFamily {
    pub family: GraphFamily,
    pub n: u32,
}

impl NamedFamily {
    pub fn new(family: GraphFamily, n: u32) -> Result<Self, GraphFamError> {
        if n == 0 {
            return Err(GraphFamError::NOutOfRange { family, n, min: 1 });
        }
        Ok(Self { family, n })
    }

    /// Largest surface-family index the reduction reads.
    fn table_need(self) -> u32 {
        match self.family {
            GraphFamily::RL => self.n + 1,
            _ => self.n,
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

fn surface(j: u8) -> FamilyId {
    FamilyId::new(j as u32).unwrap()
}

/// Genus polynomial of a named family.
pub fn genus_poly(fam: NamedFamily) -> Result<GenusDistribution, GraphFamError> {
    genus_poly_in(&build_table(fam.table_need()), fam)
}

/// As [`genus_poly`], reading from an existing table.
pub fn genus_poly_in(
    table: &FamilyTable,
    fam: NamedFamily,
) -> Result<GenusDistribution, GraphFamError> {
    let need = fam.table_need();
    if table.max_n() < need {
        return Err(GraphFamError::TableTooSmall {
            have: table.max_n(),
            need,
        });
    }
    let n = fam.n;
    let row = |j: u8, n: u32| table.get(surface(j), n).unwrap();
    Ok(match fam.family {
        GraphFamily::L => row(6, n).clone(),
        GraphFamily::CL => circular(table, n),
        GraphFamily::ML => {
            let cl = circular(table, n);
            let g0 = cl.get(0);
            if g0 < BigUint::from(2u32) {
                return Err(GraphFamError::InvalidAdjustment {
                    n,
                    g0: g0.to_string(),
                });
            }
            let mut dense = cl.to_dense(2);
            dense[0] -= 2u32;
            dense[1] += 2u32;
            GenusDistribution::from_dense(dense).expect("total preserved")
        }
        GraphFamily::RL => row(7, n + 1).clone(),
        GraphFamily::R => Acc::new()
            .add(row(5, n), 0, 2)
            .add(row(2, n), 1, 2)
            .finish()
            .expect("nonzero"),
    })
}

/// `g_i(CL_n) = g_{(i+1)_11}(n)`; `S_11` never has genus-0 surfaces.
fn circular(table: &FamilyTable, n: u32) -> GenusDistribution {
    table
        .get(surface(11), n)
        .unwrap()
        .shifted_down(1)
        .expect("S_11 rows start at genus >= 1")
}

/// Eleven partial genus polynomials `f_1..f_11` of a root graph; `None` is the
/// zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPolySet {
    parts: [Option<GenusDistribution>; 11],
}

impl PartialPolySet {
    pub fn new(parts: [Option<GenusDistribution>; 11]) -> Result<Self, GraphFamError> {
        if parts.iter().all(Option::is_none) {
            return Err(GraphFamError::EmptyPartials);
        }
        Ok(Self { parts })
    }

    /// A set with a single nonzero part `f_j`.
    pub fn single(j: FamilyId, part: GenusDistribution) -> Self {
        let mut parts: [Option<GenusDistribution>; 11] = Default::default();
        parts[j.get() as usize - 1] = Some(part);
        Self { parts }
    }

    pub fn part(&self, j: FamilyId) -> Option<&GenusDistribution> {
        self.parts[j.get() as usize - 1].as_ref()
    }

    /// `f_G = sum_j f_j`.
    pub fn root_poly(&self) -> GenusDistribution {
        poly_sum(self.parts.iter().flatten()).expect("at least one nonzero part")
    }
}

/// `sum_j f_j(x) * f_{S_j^n}(x)`.
pub fn compose_ladder(partials: &PartialPolySet, n: u32) -> GenusDistribution {
    compose_ladder_in(&build_table(n), partials, n)
}

pub fn compose_ladder_in(
    table: &FamilyTable,
    partials: &PartialPolySet,
    n: u32,
) -> GenusDistribution {
    let products: Vec<GenusDistribution> = FamilyId::all()
        .filter_map(|j| {
            partials
                .part(j)
                .map(|f| poly_product(f, table.get(j, n).expect("table covers n")))
        })
        .collect();
    poly_sum(&products).expect("nonzero partials times nonzero rows")
}

/// Product of two genus polynomials.
pub fn poly_product(a: &GenusDistribution, b: &GenusDistribution) -> GenusDistribution {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.counts().iter().enumerate() {
        for (j, y) in b.counts().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    GenusDistribution::new(a.offset() + b.offset(), out).expect("product of nonzero polynomials")
}

/// Entrywise sum; `None` for an empty sum.
pub fn poly_sum<'a>(
    parts: impl IntoIterator<Item = &'a GenusDistribution>,
) -> Option<GenusDistribution> {
    parts
        .into_iter()
        .fold(Acc::new(), |acc, p| acc.add(p, 0, 1))
        .finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceFlags {
    pub unimodal: bool,
    pub log_concave: bool,
}

impl SequenceFlags {
    pub fn of(d: &GenusDistribution) -> Self {
        Self {
            unimodal: is_unimodal(d),
            log_concave: is_log_concave(d),
        }
    }
}

/// One step of the coupled pair `P_1(n)`, `P_2(n)`. `P_2(0)` is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P52Row {
    pub n: u32,
    pub p1: GenusDistribution,
    pub p1_flags: SequenceFlags,
    pub p2: Option<GenusDistribution>,
    pub p2_flags: Option<SequenceFlags>,
}

/// Evaluates, for `2 <= n <= max_n`,
///
/// ```text
/// g_i(n)   = 2 g_i(n-1) + 8 g_{i-1}(n-1) + 48 g_{i-1}(n-2) + 12 h_{i-1}(n-1)
/// h_i(n)   = 8 h_{i-1}(n-1) + 32 g_{i-1}(n-2)
/// ```
///
/// from `P_1(0) = 1`, `P_1(1) = 2 + 14x`, `P_2(1) = 4x`. The flags are
/// findings only.
pub fn p52_sequences(max_n: u32) -> Vec<P52Row> {
    let mut p1 = vec![
        GenusDistribution::unit(),
        GenusDistribution::from_u64s(0, &[2, 14]).unwrap(),
    ];
    let mut p2 = vec![None, Some(GenusDistribution::from_u64s(1, &[4]).unwrap())];
    for n in 2..=max_n as usize {
        let next1 = Acc::new()
            .add(&p1[n - 1], 0, 2)
            .add(&p1[n - 1], 1, 8)
            .add(&p1[n - 2], 1, 48)
            .add_opt(p2[n - 1].as_ref(), 1, 12)
            .finish()
            .expect("nonzero");
        let next2 = Acc::new()
            .add_opt(p2[n - 1].as_ref(), 1, 8)
            .add(&p1[n - 2], 1, 32)
            .finish();
        p1.push(next1);
        p2.push(next2);
    }
    p1.into_iter()
        .zip(p2)
        .take(max_n as usize + 1)
        .enumerate()
        .map(|(n, (p1, p2))| P52Row {
            n: n as u32,
            p1_flags: SequenceFlags::of(&p1),
            p2_flags: p2.as_ref().map(SequenceFlags::of),
            p1,
            p2,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(offset: usize, c: &[u64]) -> GenusDistribution {
        GenusDistribution::from_u64s(offset, c).unwrap()
    }

    fn poly(f: GraphFamily, n: u32) -> GenusDistribution {
        genus_poly(NamedFamily::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn named_family_values() {
        assert_eq!(poly(GraphFamily::L, 1), d(0, &[2, 2]));
        assert_eq!(poly(GraphFamily::CL, 3), d(0, &[2, 38, 24]));
        assert_eq!(poly(GraphFamily::ML, 3), d(1, &[40, 24]));
        assert_eq!(poly(GraphFamily::RL, 1), d(0, &[2, 14]));
        assert_eq!(poly(GraphFamily::R, 1), d(0, &[4, 12]));
    }

    #[test]
    fn totals_are_powers_of_four() {
        let table = build_table(21);
        for f in GraphFamily::ALL {
            for n in 1..=20 {
                let p = genus_poly_in(&table, NamedFamily::new(f, n).unwrap()).unwrap();
                assert_eq!(
                    p.total(),
                    BigUint::from(1u32) << (2 * f.total_exponent(n)),
                    "{f}_{n}"
                );
            }
        }
    }

    #[test]
    fn mobius_differs_from_circular_by_two_embeddings() {
        let table = build_table(20);
        for n in 3..=20 {
            let cl = genus_poly_in(&table, NamedFamily::new(GraphFamily::CL, n).unwrap()).unwrap();
            let ml = genus_poly_in(&table, NamedFamily::new(GraphFamily::ML, n).unwrap()).unwrap();
            assert_eq!(cl.total(), ml.total());
            assert_eq!(cl.get(0), ml.get(0) + 2u32);
            assert_eq!(ml.get(1), cl.get(1) + 2u32);
            for g in 2..=cl.max_genus() {
                assert_eq!(cl.get(g), ml.get(g));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(NamedFamily::new(GraphFamily::L, 0).is_err());
        let small = build_table(2);
        let rl = NamedFamily::new(GraphFamily::RL, 2).unwrap();
        assert_eq!(
            genus_poly_in(&small, rl),
            Err(GraphFamError::TableTooSmall { have: 2, need: 3 })
        );
        assert_eq!(
            PartialPolySet::new(Default::default()),
            Err(GraphFamError::EmptyPartials)
        );
        assert!("XL".parse::<GraphFamily>().is_err());
        assert_eq!("ml".parse::<GraphFamily>().unwrap(), GraphFamily::ML);
    }

    #[test]
    fn composition() {
        let six = PartialPolySet::single(FamilyId::new(6).unwrap(), GenusDistribution::unit());
        for n in 1..=6 {
            assert_eq!(compose_ladder(&six, n), poly(GraphFamily::L, n));
        }
        let one = PartialPolySet::single(FamilyId::new(1).unwrap(), GenusDistribution::unit());
        assert_eq!(compose_ladder(&one, 3), d(0, &[16, 48]));
        let x = PartialPolySet::single(FamilyId::new(1).unwrap(), d(1, &[1]));
        assert_eq!(compose_ladder(&x, 2), d(1, &[8, 8]));
        assert_eq!(x.root_poly(), d(1, &[1]));
    }

    #[test]
    fn products() {
        let p = d(1, &[3, 0, 2]);
        assert_eq!(poly_product(&GenusDistribution::unit(), &p), p);
        assert_eq!(
            poly_product(&d(0, &[1, 1]), &d(0, &[1, 1])),
            d(0, &[1, 2, 1])
        );
        assert_eq!(
            poly_product(&d(0, &[2, 2]), &d(0, &[4, 12])),
            d(0, &[8, 32, 24])
        );
        assert_eq!(
            poly_sum([&d(0, &[1, 1]), &d(2, &[5])]).unwrap(),
            d(0, &[1, 1, 5])
        );
        assert_eq!(poly_sum(std::iter::empty()), None);
    }

    #[test]
    fn p52_bases() {
        let rows = p52_sequences(3);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].p1, GenusDistribution::unit());
        assert_eq!(rows[0].p2, None);
        assert_eq!(rows[1].p1, d(0, &[2, 14]));
        assert_eq!(rows[1].p2, Some(d(1, &[4])));
        // 8 * x * (4x) + 32 * x * 1
        assert_eq!(rows[2].p2, Some(d(1, &[32, 32])));
        // 2(2 + 14x) + 8x(2 + 14x) + 48x + 12x(4x)
        assert_eq!(rows[2].p1, d(0, &[4, 92, 160]));
        assert_eq!(p52_sequences(1).len(), 2);
    }
}
