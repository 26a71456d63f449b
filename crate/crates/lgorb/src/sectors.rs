//! Sector-level data for group elements `g = σλ`: weighted-cycle
//! decompositions, fixed loci and their preferred bases, ages, the maps β and
//! γ, sector Milnor bases, and bidegrees.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groups::{CycleData, Diagonal, GroupElement};
use crate::poly::InvertiblePolynomial;
use crate::rat::{QmodZ, Rational};

/// Which grading to put on a state space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Model {
    A,
    B,
}

/// The decomposition of `σλ` into weighted cycles `τ_k λ^{(k)}`, with the set
/// of special cycles (those whose local determinant is 1).
#[derive(Debug, Clone)]
pub struct WeightedCycleDecomposition {
    /// `(cycle variables, λ restricted to them)`, in canonical cycle order.
    pub cycles: Vec<(Vec<usize>, Vec<QmodZ>)>,
    /// Indices `k` with `Σ_{i ∈ O_k} [λ]_i ≡ 0`.
    pub special: Vec<usize>,
}

pub fn weighted_cycles(g: &GroupElement) -> WeightedCycleDecomposition {
    let cd = CycleData::new(&g.perm);
    let mut cycles = Vec::with_capacity(cd.cycle_count());
    let mut special = Vec::new();
    for (k, cyc) in cd.cycles().iter().enumerate() {
        let local: Vec<QmodZ> = cyc.iter().map(|&i| g.diag.entries[i]).collect();
        let det: QmodZ = local.iter().fold(QmodZ::zero(), |a, b| a + *b);
        if det.is_zero() {
            special.push(k);
        }
        cycles.push((cyc.clone(), local));
    }
    WeightedCycleDecomposition { cycles, special }
}

/// Sorted cycle indices of the special weighted cycles, `F_{σλ}`.
pub fn special_cycles(g: &GroupElement) -> Vec<usize> {
    weighted_cycles(g).special
}

/// `dim Fix(g)`, the number of special weighted cycles.
pub fn fix_dimension(g: &GroupElement) -> usize {
    special_cycles(g).len()
}

pub fn is_narrow(g: &GroupElement) -> bool {
    fix_dimension(g) == 0
}

/// One basis vector `f_{k,σλ}` of the fixed locus: entries
/// `(variable index, root-of-unity exponent)` along the cycle from `s(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedVector {
    pub cycle_index: usize,
    pub entries: Vec<(usize, QmodZ)>,
}

/// The preferred coordinates of `Fix(g)`, one vector per special cycle.
#[derive(Debug, Clone)]
pub struct SectorCoordinates {
    pub owner: GroupElement,
    pub coords: Vec<FixedVector>,
}

/// The basis `{f_{k,σλ}}` of `Fix(σλ)`: the entry at `σ^j(s(k))` is the
/// product `λ_{s(k)} λ_{σ(s(k))} ⋯` of the first `j` diagonal entries along
/// the cycle.
pub fn fixed_locus(g: &GroupElement) -> SectorCoordinates {
    let cd = CycleData::new(&g.perm);
    let wc = weighted_cycles(g);
    let mut coords = Vec::new();
    for &k in &wc.special {
        let cyc = &cd.cycles()[k];
        let mut entries = Vec::with_capacity(cyc.len());
        let mut acc = QmodZ::zero();
        let mut var = cd.s(k);
        for _ in 0..cyc.len() {
            entries.push((var, acc));
            acc = acc + g.diag.entries[var];
            var = g.perm.image(var);
        }
        coords.push(FixedVector {
            cycle_index: k,
            entries,
        });
    }
    SectorCoordinates {
        owner: g.clone(),
        coords,
    }
}

/// Apply `g` to a fixed-locus vector written with root-of-unity coefficients;
/// used to test that the `f_{k,σλ}` really are fixed.
pub fn apply_group_element(g: &GroupElement, v: &[(usize, QmodZ)]) -> Vec<(usize, QmodZ)> {
    // (g·v)_i = λ_{σ^{-1}(i)} v_{σ^{-1}(i)}
    let mut out: Vec<(usize, QmodZ)> = v
        .iter()
        .map(|&(i, c)| (g.perm.image(i), c + g.diag.entries[i]))
        .collect();
    out.sort_by_key(|&(i, _)| i);
    out
}

/// `β_σ(λ)`: per-cycle products of the diagonal entries, `B_σ[λ]`.
pub fn beta(cd: &CycleData, lambda: &Diagonal) -> Diagonal {
    Diagonal {
        entries: cd
            .cycles()
            .iter()
            .map(|cyc| {
                cyc.iter()
                    .fold(QmodZ::zero(), |a, &i| a + lambda.entries[i])
            })
            .collect(),
    }
}

/// `γ_σ(λ)`: the entry at each cycle's smallest variable, `C_σ[λ]`.
pub fn gamma(cd: &CycleData, lambda: &Diagonal) -> Diagonal {
    Diagonal {
        entries: (0..cd.cycle_count())
            .map(|k| lambda.entries[cd.s(k)])
            .collect(),
    }
}

/// `age(σλ) = age(σ) + age(β_σ(λ))`, with `age(σ) = Σ (m_j − 1)/2` over
/// cycles and `age` of a diagonal the sum of canonical representatives.
pub fn age(g: &GroupElement) -> Rational {
    let cd = CycleData::new(&g.perm);
    let mut acc = Rational::zero();
    for cyc in cd.cycles() {
        acc += Rational::new(cyc.len() as i64 - 1, 2);
    }
    acc + beta(&cd, &g.diag).age()
}

// ---------------------------------------------------------------------------
// sector basis elements
// ---------------------------------------------------------------------------

/// `⌊p; g⌉`: a monomial in the fixed-locus coordinates `z_k` (k running over
/// the special cycles of `g`, ascending) together with its sector. The volume
/// form on `Fix(g)` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorBasisElement {
    pub sector: GroupElement,
    /// Exponents aligned with `special_cycles(sector)`.
    pub exponents: Vec<u64>,
}

impl SectorBasisElement {
    pub fn narrow(g: GroupElement) -> Self {
        debug_assert!(is_narrow(&g));
        SectorBasisElement {
            sector: g,
            exponents: Vec::new(),
        }
    }

    /// Renders with the coordinate labels `z_{s(k)}`, one per special cycle.
    pub fn format(&self) -> String {
        let cd = CycleData::new(&self.sector.perm);
        let f = special_cycles(&self.sector);
        let mut parts: Vec<String> = Vec::new();
        for (pos, &k) in f.iter().enumerate() {
            let e = self.exponents[pos];
            match e {
                0 => {}
                1 => parts.push(alloc::format!("z{}", cd.s(k) + 1)),
                _ => parts.push(alloc::format!("z{}^{e}", cd.s(k) + 1)),
            }
        }
        let mono = if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        };
        alloc::format!("[{}; {}]", mono, self.sector.format())
    }
}

impl core::fmt::Display for SectorBasisElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// The monomial basis of the sector of `g`: the Kreuzer basis of
/// `(W^σ)_{β(λ)}` in the coordinates `{z_k : k ∈ F_{σλ}}`. Narrow sectors
/// yield the single element `⌊1; g⌉`.
pub fn sector_basis(w: &InvertiblePolynomial, g: &GroupElement) -> Result<Vec<SectorBasisElement>> {
    if !crate::groups::is_symmetry(w, g) {
        return Err(Error::NotASymmetry);
    }
    let f = special_cycles(g);
    if f.is_empty() {
        return Ok(vec![SectorBasisElement::narrow(g.clone())]);
    }
    let w_sigma = w.reduce_w_sigma(&g.perm)?;
    let restricted = w_sigma.restrict(&f)?;
    let basis = restricted.kreuzer_basis();
    Ok(basis
        .into_iter()
        .map(|m| SectorBasisElement {
            sector: g.clone(),
            exponents: m.exps,
        })
        .collect())
}

/// A pair of rational gradings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub left: Rational,
    pub right: Rational,
}

impl Bidegree {
    pub fn new(left: Rational, right: Rational) -> Self {
        Bidegree { left, right }
    }

    pub fn swap(&self) -> Bidegree {
        Bidegree {
            left: self.right,
            right: self.left,
        }
    }

    pub fn format(&self) -> String {
        alloc::format!(
            "({}, {})",
            crate::rat::format_rational(&self.left),
            crate::rat::format_rational(&self.right)
        )
    }
}

impl core::fmt::Display for Bidegree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// `deg p` including the volume-form contribution:
/// `Σ_{k ∈ F} (p_k + 1) q^{W^σ}_k`, where the weights of `W^σ` at cycle `k`
/// equal the weights of `W` at the cycle's variables. Zero for narrow sectors.
pub fn sector_degree(w: &InvertiblePolynomial, b: &SectorBasisElement) -> Rational {
    let cd = CycleData::new(&b.sector.perm);
    let f = special_cycles(&b.sector);
    let q = w.weights();
    let mut acc = Rational::zero();
    for (pos, &k) in f.iter().enumerate() {
        acc += Rational::from_integer(b.exponents[pos] as i64 + 1) * q[cd.s(k)];
    }
    acc
}

/// The A- or B-model bidegree of `⌊p; g⌉`.
pub fn bidegree(w: &InvertiblePolynomial, b: &SectorBasisElement, model: Model) -> Bidegree {
    let deg = sector_degree(w, b);
    let age_g = age(&b.sector);
    let age_j = crate::groups::j_w(w).age();
    match model {
        Model::A => {
            let ng = Rational::from_integer(b.exponents.len() as i64);
            Bidegree::new(deg + age_g - age_j, ng - deg + age_g - age_j)
        }
        Model::B => {
            let age_ginv = age(&b.sector.inverse());
            Bidegree::new(deg + age_g - age_j, deg + age_ginv - age_j)
        }
    }
}
