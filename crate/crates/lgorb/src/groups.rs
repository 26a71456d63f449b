//! Symmetry groups of invertible polynomials: diagonal symmetries in
//! (Q/Z)^N, permutation symmetries, and semidirect products S ⋉ H.
//!
//! Diagonal groups are backed by lattices (see [`crate::linalg`]), so orders,
//! duals, intersections and membership stay exact even when a group is far too
//! large to enumerate. Element sets are materialized on top of that whenever
//! they fit under the configured cap.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Lattice, QMatrix};
use crate::poly::InvertiblePolynomial;
use crate::rat::{QmodZ, Rational};
use crate::Caps;

// ---------------------------------------------------------------------------
// permutations
// ---------------------------------------------------------------------------

/// A permutation of `{0, …, n-1}` acting on the left, `i ↦ images[i]`.
/// Products compose right-to-left: `(a * b)(i) = a(b(i))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Parse(String::from("not a bijection")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n());
        Permutation {
            images: (0..self.n()).map(|i| self.images[rhs.images[i]]).collect(),
        }
    }

    /// Disjoint cycles, sorted by smallest element, each cycle starting at its
    /// smallest element, fixed points included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.images[cur];
            }
            out.push(cyc);
        }
        out
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &v) in cyc.iter().enumerate() {
                if v >= n {
                    return Err(Error::Parse(alloc::format!("index {} out of range", v + 1)));
                }
                if touched[v] {
                    return Err(Error::Parse(String::from("repeated index in cycles")));
                }
                touched[v] = true;
                images[v] = cyc[(k + 1) % cyc.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation with 1-based, space-separated indices, e.g.
    /// `(1 2 3)(4 5)`. Fixed points may be omitted; `id` and `()` denote the
    /// identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t == "id" || t == "()" || t.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(alloc::format!("expected '(' in {t:?}")))?;
            if rest[..open].trim() != "" {
                return Err(Error::Parse(alloc::format!("stray text in {t:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(alloc::format!("unclosed cycle in {t:?}")))?;
            let inner = &rest[open + 1..close];
            let mut cyc = Vec::new();
            for tok in inner.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad index {tok:?}")))?;
                if v == 0 {
                    return Err(Error::Parse(String::from("cycle indices are 1-based")));
                }
                cyc.push(v - 1);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = &rest[close + 1..];
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Cycle notation with every 1-cycle printed.
    pub fn format(&self) -> String {
        let mut out = String::new();
        for cyc in self.cycles() {
            out.push('(');
            let parts: Vec<String> = cyc.iter().map(|v| alloc::format!("{}", v + 1)).collect();
            out.push_str(&parts.join(" "));
            out.push(')');
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl core::fmt::Display for Permutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// Fixed cycle bookkeeping for one permutation: the canonical cycle list, the
/// cycle index `r(i)` of each variable, the smallest member `s(k)` of each
/// cycle, and the 0/1 matrices `B` and `C`.
#[derive(Debug, Clone)]
pub struct CycleData {
    pub sigma: Permutation,
    cycles: Vec<Vec<usize>>,
    r: Vec<usize>,
    s: Vec<usize>,
}

impl CycleData {
    pub fn new(sigma: &Permutation) -> Self {
        let cycles = sigma.cycles();
        let n = sigma.n();
        let mut r = vec![0usize; n];
        let mut s = Vec::with_capacity(cycles.len());
        for (k, cyc) in cycles.iter().enumerate() {
            for &i in cyc {
                r[i] = k;
            }
            s.push(cyc[0]);
        }
        CycleData {
            sigma: sigma.clone(),
            cycles,
            r,
            s,
        }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Cycle index of variable `i`.
    pub fn r(&self, i: usize) -> usize {
        self.r[i]
    }

    /// Smallest variable in cycle `k`.
    pub fn s(&self, k: usize) -> usize {
        self.s[k]
    }

    /// `B_{kj} = 1` iff variable `j` lies in cycle `k`.
    pub fn b_matrix(&self) -> QMatrix {
        let n = self.sigma.n();
        let mut m = QMatrix::zero(self.cycle_count(), n);
        for (k, cyc) in self.cycles.iter().enumerate() {
            for &j in cyc {
                m[(k, j)] = Rational::one();
            }
        }
        m
    }

    /// `C_{kj} = 1` iff `j` is the smallest variable of cycle `k`.
    pub fn c_matrix(&self) -> QMatrix {
        let n = self.sigma.n();
        let mut m = QMatrix::zero(self.cycle_count(), n);
        for (k, &j) in self.s.iter().enumerate() {
            m[(k, j)] = Rational::one();
        }
        m
    }
}

// ---------------------------------------------------------------------------
// diagonal symmetries
// ---------------------------------------------------------------------------

/// A diagonal symmetry written additively: an element of (Q/Z)^N.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub entries: Vec<QmodZ>,
}

impl Diagonal {
    pub fn zero(n: usize) -> Self {
        Diagonal {
            entries: vec![QmodZ::zero(); n],
        }
    }

    pub fn from_rationals(v: &[Rational]) -> Self {
        Diagonal {
            entries: v.iter().map(|r| QmodZ::new(*r)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Diagonal) -> Diagonal {
        Diagonal {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Diagonal {
        Diagonal {
            entries: self.entries.iter().map(|a| -*a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Diagonal {
        Diagonal {
            entries: self.entries.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// The conjugation action `(λ.σ)_i = λ_{σ(i)}`.
    pub fn act(&self, sigma: &Permutation) -> Diagonal {
        Diagonal {
            entries: (0..self.n())
                .map(|i| self.entries[sigma.image(i)])
                .collect(),
        }
    }

    pub fn rationals(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.rep()).collect()
    }

    /// Sum of the canonical representatives; the age of a diagonal symmetry.
    pub fn age(&self) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, e| acc + e.rep())
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| alloc::format!("{e}")).collect();
        alloc::format!("({})", parts.join(", "))
    }
}

impl core::fmt::Display for Diagonal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// Is λ a diagonal symmetry of W, i.e. `A_W·[λ] ∈ Z^N`?
pub fn is_diagonal_symmetry(w: &InvertiblePolynomial, lambda: &Diagonal) -> bool {
    if lambda.n() != w.n_vars() {
        return false;
    }
    let v = w.exponent_matrix().mul_vec(&lambda.rationals());
    v.iter().all(|r| r.denom().is_one())
}

/// The standard generators ρ_i: columns of `A_W^{-1}` reduced mod Z.
pub fn diag_generators(w: &InvertiblePolynomial) -> Vec<Diagonal> {
    let inv = w.exponent_matrix_inverse();
    (0..w.n_vars())
        .map(|j| Diagonal::from_rationals(&inv.col(j)))
        .collect()
}

/// The exponential grading operator `j_W`, whose entries are the weights.
pub fn j_w(w: &InvertiblePolynomial) -> Diagonal {
    Diagonal::from_rationals(w.weights())
}

// ---------------------------------------------------------------------------
// group elements of S ⋉ H
// ---------------------------------------------------------------------------

/// An element `g = σλ` of the semidirect product, stored in its unique
/// factorization (permutation part, diagonal part).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub perm: Permutation,
    pub diag: Diagonal,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            perm: Permutation::identity(n),
            diag: Diagonal::zero(n),
        }
    }

    pub fn from_perm(p: Permutation) -> Self {
        let n = p.n();
        GroupElement {
            perm: p,
            diag: Diagonal::zero(n),
        }
    }

    pub fn from_diag(d: Diagonal) -> Self {
        let n = d.n();
        GroupElement {
            perm: Permutation::identity(n),
            diag: d,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.diag.is_zero()
    }

    /// `(σ1 λ1)(σ2 λ2) = (σ1σ2)((λ1.σ2) λ2)`.
    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            perm: self.perm.mul(&rhs.perm),
            diag: self.diag.act(&rhs.perm).add(&rhs.diag),
        }
    }

    /// `(σλ)^{-1} = σ^{-1} (λ^{-1}.σ^{-1})`.
    pub fn inverse(&self) -> GroupElement {
        let pinv = self.perm.inverse();
        GroupElement {
            diag: self.diag.neg().act(&pinv),
            perm: pinv,
        }
    }

    /// `h^{-1} · self · h`.
    pub fn conjugate_by(&self, h: &GroupElement) -> GroupElement {
        h.inverse().mul(self).mul(h)
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn format(&self) -> String {
        if self.diag.is_zero() {
            self.perm.format()
        } else if self.perm.is_identity() {
            self.diag.format()
        } else {
            alloc::format!("{}·{}", self.perm.format(), self.diag.format())
        }
    }
}

impl core::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

pub fn is_symmetry(w: &InvertiblePolynomial, g: &GroupElement) -> bool {
    w.is_permutation_symmetry(&g.perm) && is_diagonal_symmetry(w, &g.diag)
}

// ---------------------------------------------------------------------------
// materialized groups
// ---------------------------------------------------------------------------

/// A finite group of `GroupElement`s with a materialized element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub n: usize,
    pub generators: Vec<GroupElement>,
    pub elements: BTreeSet<GroupElement>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn trivial(n: usize) -> Self {
        let mut elements = BTreeSet::new();
        elements.insert(GroupElement::identity(n));
        SymmetryGroup {
            n,
            generators: Vec::new(),
            elements,
        }
    }
}

/// Breadth-first closure of a generating set under the semidirect product.
pub fn enumerate_group(n: usize, generators: &[GroupElement], cap: usize) -> Result<SymmetryGroup> {
    let mut elements = BTreeSet::new();
    elements.insert(GroupElement::identity(n));
    let mut work: Vec<GroupElement> = vec![GroupElement::identity(n)];
    while let Some(g) = work.pop() {
        for h in generators {
            let prod = g.mul(h);
            if elements.insert(prod.clone()) {
                if elements.len() > cap {
                    return Err(Error::SizeLimitExceeded("group closure"));
                }
                work.push(prod);
            }
        }
    }
    Ok(SymmetryGroup {
        n,
        generators: generators.to_vec(),
        elements,
    })
}

/// A finite group of permutations (the `S` of `S ⋉ H`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub n: usize,
    pub generators: Vec<Permutation>,
    pub elements: BTreeSet<Permutation>,
}

impl PermGroup {
    pub fn closure(n: usize, generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        let mut elements = BTreeSet::new();
        elements.insert(Permutation::identity(n));
        let mut work = vec![Permutation::identity(n)];
        while let Some(g) = work.pop() {
            for h in generators {
                let prod = g.mul(h);
                if elements.insert(prod.clone()) {
                    if elements.len() > cap {
                        return Err(Error::SizeLimitExceeded("permutation group closure"));
                    }
                    work.push(prod);
                }
            }
        }
        Ok(PermGroup {
            n,
            generators: generators.to_vec(),
            elements,
        })
    }

    pub fn trivial(n: usize) -> PermGroup {
        Self::closure(n, &[], 1).unwrap()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Is this group cyclic of odd prime order?
    pub fn is_cyclic_odd_prime(&self) -> bool {
        let n = self.order() as u64;
        if n < 3 || n.is_multiple_of(2) {
            return false;
        }
        let prime = (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        prime && self.elements.iter().any(|g| g.order() == n)
    }
}

/// All permutation symmetries of W, by brute force with pruning.
pub fn enumerate_sigma(w: &InvertiblePolynomial, caps: &Caps) -> Result<PermGroup> {
    let n = w.n_vars();
    if n > caps.sigma_cap {
        return Err(Error::SizeLimitExceeded("permutation symmetry search"));
    }
    let a = w.exponent_matrix();
    let mut found: Vec<Permutation> = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &QMatrix,
        n: usize,
        depth: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Permutation>,
    ) {
        if depth == n {
            found.push(Permutation::from_images(images.clone()).unwrap());
            return;
        }
        'cand: for v in 0..n {
            if used[v] {
                continue;
            }
            if a[(v, v)] != a[(depth, depth)] {
                continue;
            }
            for u in 0..depth {
                if a[(v, images[u])] != a[(depth, u)] || a[(images[u], v)] != a[(u, depth)] {
                    continue 'cand;
                }
            }
            images[depth] = v;
            used[v] = true;
            rec(a, n, depth + 1, images, used, found);
            used[v] = false;
            images[depth] = usize::MAX;
        }
    }
    rec(&a, n, 0, &mut images, &mut used, &mut found);
    let elements: BTreeSet<Permutation> = found.into_iter().collect();
    Ok(PermGroup {
        n,
        generators: elements.iter().cloned().collect(),
        elements,
    })
}

// ---------------------------------------------------------------------------
// lattice-backed diagonal groups
// ---------------------------------------------------------------------------

/// A subgroup of (Q/Z)^N, always carried by its lattice; elements are
/// materialized when the order fits under `cap`.
#[derive(Debug, Clone)]
pub struct DiagGroup {
    pub n: usize,
    pub generators: Vec<Diagonal>,
    lattice: Lattice,
    elements: Option<BTreeSet<Diagonal>>,
}

impl PartialEq for DiagGroup {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice
    }
}
impl Eq for DiagGroup {}

const DIAG_MATERIALIZE_CAP: usize = 250_000;

impl DiagGroup {
    pub fn from_generators(n: usize, gens: &[Diagonal]) -> Result<DiagGroup> {
        let cols: Vec<Vec<Rational>> = gens.iter().map(|g| g.rationals()).collect();
        let lattice = Lattice::from_generators(n, &cols, true)?;
        let mut dg = DiagGroup {
            n,
            generators: gens.to_vec(),
            lattice,
            elements: None,
        };
        dg.try_materialize(DIAG_MATERIALIZE_CAP);
        Ok(dg)
    }

    pub fn trivial(n: usize) -> DiagGroup {
        DiagGroup::from_generators(n, &[]).unwrap()
    }

    fn from_lattice(n: usize, lattice: Lattice) -> DiagGroup {
        let generators: Vec<Diagonal> = (0..n)
            .map(|j| Diagonal::from_rationals(&lattice.basis().col(j)))
            .filter(|d| !d.is_zero())
            .collect();
        let mut dg = DiagGroup {
            n,
            generators,
            lattice,
            elements: None,
        };
        dg.try_materialize(DIAG_MATERIALIZE_CAP);
        dg
    }

    fn try_materialize(&mut self, cap: usize) {
        if self.elements.is_none() {
            if let Ok(list) = self.lattice.enumerate_mod_z(cap) {
                self.elements = Some(
                    list.into_iter()
                        .map(|entries| Diagonal { entries })
                        .collect(),
                );
            }
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn order(&self) -> Result<u128> {
        self.lattice.order_over_z()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.lattice.contains(&d.rationals())
    }

    /// Materialized element set; errors when the group is too large.
    pub fn elements(&self) -> Result<&BTreeSet<Diagonal>> {
        self.elements.as_ref().ok_or(Error::SizeLimitExceeded(
            "diagonal group too large to enumerate",
        ))
    }

    pub fn is_subgroup_of(&self, other: &DiagGroup) -> bool {
        self.lattice.is_sublattice_of(&other.lattice)
    }

    pub fn intersect(&self, other: &DiagGroup) -> Result<DiagGroup> {
        Ok(DiagGroup::from_lattice(
            self.n,
            self.lattice.intersect(&other.lattice)?,
        ))
    }

    /// `{λ ∈ self : m·λ ∈ Z^k}` for a rational matrix m.
    pub fn kernel_of(&self, m: &QMatrix) -> Result<DiagGroup> {
        Ok(DiagGroup::from_lattice(
            self.n,
            self.lattice.preimage_integral(m)?,
        ))
    }
}

/// The full diagonal symmetry group of W, generated by the ρ_i.
pub fn maximal_diag_group(w: &InvertiblePolynomial) -> Result<DiagGroup> {
    DiagGroup::from_generators(w.n_vars(), &diag_generators(w))
}

/// `SL_W`: diagonal symmetries with entries summing to 0 in Q/Z.
pub fn sl_w(w: &InvertiblePolynomial) -> Result<DiagGroup> {
    let full = maximal_diag_group(w)?;
    let ones = QMatrix::from_rows(vec![vec![Rational::one(); w.n_vars()]]);
    full.kernel_of(&ones)
}

/// The BHK dual group `H^T = {λ ∈ G_{W^T}^{diag} : λ^T A_W μ ∈ Z for all μ ∈ H}`.
pub fn dual_group(w: &InvertiblePolynomial, h: &DiagGroup) -> Result<DiagGroup> {
    // validate H ⊆ G_W^diag
    for g in &h.generators {
        if !is_diagonal_symmetry(w, g) {
            return Err(Error::NotDiagonalSubgroup);
        }
    }
    // L(H^T) = (A^T)^{-1} · L(H)^*
    let a = w.exponent_matrix();
    let at_inv = a.transpose().inverse().ok_or(Error::DegenerateWeights)?;
    let dual_basis = at_inv.mul(&h.lattice().dual()?.basis());
    let cols: Vec<Vec<Rational>> = (0..dual_basis.cols).map(|j| dual_basis.col(j)).collect();
    let lat = Lattice::from_generators(w.n_vars(), &cols, false)?;
    Ok(DiagGroup::from_lattice(w.n_vars(), lat))
}

/// The pairing `[λ]^T A_W [μ]` reduced into Q/Z.
pub fn duality_pairing(w: &InvertiblePolynomial, lambda: &Diagonal, mu: &Diagonal) -> QmodZ {
    let amu = w.exponent_matrix().mul_vec(&mu.rationals());
    let total = lambda
        .rationals()
        .iter()
        .zip(&amu)
        .fold(Rational::zero(), |acc, (l, x)| acc + *l * *x);
    QmodZ::new(total)
}

/// `[H, σ] = {(μ^{-1}.σ)μ : μ ∈ H}`, the image of `μ ↦ μ − μ.σ`.
/// Requires σ to normalize H.
pub fn commutator_subgroup(h: &DiagGroup, sigma: &Permutation) -> Result<DiagGroup> {
    let mut gens = Vec::new();
    for g in &h.generators {
        let conj = g.act(sigma);
        if !h.contains(&conj) {
            return Err(Error::NotNormalized);
        }
        gens.push(g.add(&conj.neg()));
    }
    DiagGroup::from_generators(h.n, &gens)
}

/// `C_H(σ)`: diagonal elements of H commuting with σ, i.e. constant on the
/// orbits of σ.
pub fn centralizer_h(h: &DiagGroup, sigma: &Permutation) -> Result<DiagGroup> {
    // {μ : μ.σ − μ ∈ Z^n}, cut out by the matrix R_σ − I
    let n = h.n;
    let mut t = QMatrix::zero(n, n);
    for i in 0..n {
        t[(i, sigma.image(i))] = t[(i, sigma.image(i))] + Rational::one();
        t[(i, i)] -= Rational::one();
    }
    h.kernel_of(&t)
}

pub fn centralizer_s(s: &PermGroup, sigma: &Permutation) -> PermGroup {
    let elements: BTreeSet<Permutation> = s
        .elements
        .iter()
        .filter(|p| p.mul(sigma) == sigma.mul(p))
        .cloned()
        .collect();
    PermGroup {
        n: s.n,
        generators: elements.iter().cloned().collect(),
        elements,
    }
}

pub fn centralizer_g(g: &SymmetryGroup, x: &GroupElement) -> SymmetryGroup {
    let elements: BTreeSet<GroupElement> = g
        .elements
        .iter()
        .filter(|h| h.commutes_with(x))
        .cloned()
        .collect();
    SymmetryGroup {
        n: g.n,
        generators: elements.iter().cloned().collect(),
        elements,
    }
}

/// Does every element of S normalize H? Checked on generators.
pub fn normalizes(s: &PermGroup, h: &DiagGroup) -> bool {
    s.generators
        .iter()
        .all(|sigma| h.generators.iter().all(|mu| h.contains(&mu.act(sigma))))
}

// ---------------------------------------------------------------------------
// the model (W, S ⋉ H)
// ---------------------------------------------------------------------------

/// An LG model `(W, G = S ⋉ H)`. `G` is materialized as the product set
/// whenever `H` is enumerable and `|S|·|H|` fits under the cap.
#[derive(Debug, Clone)]
pub struct LgModel {
    pub w: InvertiblePolynomial,
    pub s: PermGroup,
    pub h: DiagGroup,
    g: Option<SymmetryGroup>,
}

impl LgModel {
    pub fn new(
        w: InvertiblePolynomial,
        s_gens: &[Permutation],
        h_gens: &[Diagonal],
        caps: &Caps,
    ) -> Result<LgModel> {
        for p in s_gens {
            if !w.is_permutation_symmetry(p) {
                return Err(Error::NotASymmetry);
            }
        }
        for d in h_gens {
            if !is_diagonal_symmetry(&w, d) {
                return Err(Error::NotASymmetry);
            }
        }
        let s = PermGroup::closure(w.n_vars(), s_gens, caps.group_cap)?;
        let h = DiagGroup::from_generators(w.n_vars(), h_gens)?;
        if !normalizes(&s, &h) {
            return Err(Error::NotNormalized);
        }
        let g = match h.elements() {
            Ok(h_elems) if s.order().saturating_mul(h_elems.len()) <= caps.group_cap => {
                let mut elements = BTreeSet::new();
                for sigma in &s.elements {
                    for lambda in h_elems {
                        elements.insert(GroupElement {
                            perm: sigma.clone(),
                            diag: lambda.clone(),
                        });
                    }
                }
                let mut generators: Vec<GroupElement> = s
                    .generators
                    .iter()
                    .map(|p| GroupElement::from_perm(p.clone()))
                    .collect();
                generators.extend(
                    h.generators
                        .iter()
                        .map(|d| GroupElement::from_diag(d.clone())),
                );
                Some(SymmetryGroup {
                    n: w.n_vars(),
                    generators,
                    elements,
                })
            }
            _ => None,
        };
        Ok(LgModel { w, s, h, g })
    }

    /// The materialized semidirect product; errors when it is over the cap.
    pub fn g(&self) -> Result<&SymmetryGroup> {
        self.g.as_ref().ok_or(Error::SizeLimitExceeded(
            "semidirect product too large to enumerate",
        ))
    }

    /// Generators of G as group elements (permutation and diagonal parts).
    pub fn g_generators(&self) -> Vec<GroupElement> {
        let mut gens: Vec<GroupElement> = self
            .s
            .generators
            .iter()
            .map(|p| GroupElement::from_perm(p.clone()))
            .collect();
        gens.extend(
            self.h
                .generators
                .iter()
                .map(|d| GroupElement::from_diag(d.clone())),
        );
        gens
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.s.contains(&g.perm) && self.h.contains(&g.diag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rat::rat;

    fn chain_4532() -> InvertiblePolynomial {
        parse_polynomial("x1^4*x2 + x2^5*x3 + x3^3*x4 + x4^2").unwrap()
    }

    fn fermat_4446() -> InvertiblePolynomial {
        parse_polynomial("x1^4+x2^4+x3^4+x4^6").unwrap()
    }

    fn loop6() -> InvertiblePolynomial {
        parse_polynomial("x1^3*x2+x2^3*x3+x3^3*x4+x4^3*x5+x5^3*x6+x6^3*x1").unwrap()
    }

    fn diag(parts: &[(i64, i64)]) -> Diagonal {
        Diagonal::from_rationals(&parts.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>())
    }

    /// The order-32 group of the worked nonabelian example.
    pub fn group_32() -> Vec<Diagonal> {
        vec![
            diag(&[(1, 4), (0, 1), (-1, 4), (0, 1)]),
            diag(&[(0, 1), (1, 4), (-1, 4), (0, 1)]),
            diag(&[(0, 1), (0, 1), (1, 2), (1, 2)]),
        ]
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::parse("(1 2 3)", 4).unwrap();
        assert_eq!(p.image(0), 1);
        assert_eq!(p.format(), "(1 2 3)(4)");
        let q = Permutation::parse("(1 2)", 3).unwrap();
        let r = Permutation::parse("(2 3)", 3).unwrap();
        // (12)(23) = (123), multiplying right to left
        assert_eq!(q.mul(&r), Permutation::parse("(1 2 3)", 3).unwrap());
        let c = p.cycles();
        assert_eq!(c, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(Permutation::from_cycles(4, &c).unwrap(), p);
        assert!(Permutation::parse("(1 1)", 2).is_err());
    }

    #[test]
    fn semidirect_closure() {
        let f = fermat_4446();
        let gens = [
            GroupElement::from_perm(Permutation::parse("(1 2 3)", 4).unwrap()),
            GroupElement::from_diag(j_w(&f)),
        ];
        let g = enumerate_group(4, &gens, 1000).unwrap();
        assert_eq!(g.order(), 36);
        assert!(g.contains(&gens[0].mul(&gens[1])));
        assert_eq!(
            enumerate_group(4, &gens, 10).unwrap_err(),
            Error::SizeLimitExceeded("group closure")
        );
        // closure under the product rule (σ1 λ1)(σ2 λ2) = (σ1 σ2)((λ1.σ2) λ2)
        let a = gens[1].mul(&gens[0]); // λσ = σ(λ.σ)
        let b = gens[0].mul(&GroupElement::from_diag(j_w(&f).act(&gens[0].perm)));
        assert_eq!(a, b);
    }

    #[test]
    fn b_and_c_matrices() {
        let sigma = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
        let cd = CycleData::new(&sigma);
        let b = cd.b_matrix();
        let c = cd.c_matrix();
        assert_eq!(
            b,
            QMatrix::from_int_rows(&[vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]])
        );
        assert_eq!(
            c,
            QMatrix::from_int_rows(&[vec![1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0]])
        );
        // BC^T = I = CB^T
        assert_eq!(b.mul(&c.transpose()), QMatrix::identity(2));
        assert_eq!(c.mul(&b.transpose()), QMatrix::identity(2));
        let id = CycleData::new(&Permutation::identity(3));
        assert_eq!(id.b_matrix(), QMatrix::identity(3));
        assert_eq!(id.c_matrix(), QMatrix::identity(3));
        let s2 = CycleData::new(&Permutation::parse("(1 2 3)", 4).unwrap());
        assert_eq!(
            s2.b_matrix(),
            QMatrix::from_int_rows(&[vec![1, 1, 1, 0], vec![0, 0, 0, 1]])
        );
    }

    #[test]
    fn rho_generators() {
        let w = chain_4532();
        let rho = diag_generators(&w);
        assert_eq!(rho[3], diag(&[(119, 120), (1, 30), (5, 6), (1, 2)]));
        let f = fermat_4446();
        let rho_f = diag_generators(&f);
        assert_eq!(rho_f[0], diag(&[(1, 4), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(rho_f[3], diag(&[(0, 1), (0, 1), (0, 1), (1, 6)]));
    }

    #[test]
    fn diag_group_orders() {
        let chain = chain_4532();
        let g_chain = maximal_diag_group(&chain).unwrap();
        assert_eq!(g_chain.order().unwrap(), 120);
        // the fourth column alone already generates
        let g4 = DiagGroup::from_generators(4, &[diag_generators(&chain)[3].clone()]).unwrap();
        assert_eq!(g4.order().unwrap(), 120);

        let l = loop6();
        let gl = maximal_diag_group(&l).unwrap();
        assert_eq!(gl.order().unwrap(), 728);
        for rho in diag_generators(&l) {
            let g = DiagGroup::from_generators(6, &[rho]).unwrap();
            assert_eq!(g.order().unwrap(), 728);
        }

        let f = fermat_4446();
        let jw = DiagGroup::from_generators(4, &[j_w(&f)]).unwrap();
        assert_eq!(jw.order().unwrap(), 12);

        let h32 = DiagGroup::from_generators(4, &group_32()).unwrap();
        assert_eq!(h32.order().unwrap(), 32);
    }

    #[test]
    fn sigma_enumeration() {
        let caps = Caps::default();
        let f = fermat_4446();
        let sig = enumerate_sigma(&f, &caps).unwrap();
        assert_eq!(sig.order(), 6);
        assert!(sig.contains(&Permutation::parse("(1 2 3)", 4).unwrap()));
        assert!(!sig.contains(&Permutation::parse("(1 4)", 4).unwrap()));

        let small = parse_polynomial("x1^2+x2^3").unwrap();
        assert_eq!(enumerate_sigma(&small, &caps).unwrap().order(), 1);

        let l = loop6();
        let sl = enumerate_sigma(&l, &caps).unwrap();
        assert_eq!(sl.order(), 6);
        assert!(sl.contains(&Permutation::parse("(1 4)(2 5)(3 6)", 6).unwrap()));
        assert!(sl.contains(&Permutation::parse("(1 2 3 4 5 6)", 6).unwrap()));
    }

    #[test]
    fn dual_groups() {
        let f = fermat_4446();
        let h = DiagGroup::from_generators(4, &[j_w(&f)]).unwrap();
        let ht = dual_group(&f, &h).unwrap();
        assert_eq!(ht.order().unwrap(), 32);
        // equals SL_W and the order-32 generating set of the worked example
        let sl = sl_w(&f).unwrap();
        assert_eq!(ht, sl);
        let h32 = DiagGroup::from_generators(4, &group_32()).unwrap();
        assert_eq!(ht, h32);
        let alt = DiagGroup::from_generators(
            4,
            &[
                diag(&[(1, 4), (1, 4), (1, 2), (0, 1)]),
                diag(&[(1, 4), (1, 2), (1, 4), (0, 1)]),
                diag(&[(1, 2), (0, 1), (0, 1), (1, 2)]),
            ],
        )
        .unwrap();
        assert_eq!(ht, alt);

        // dual of the full group is trivial
        let full = maximal_diag_group(&f).unwrap();
        assert_eq!(dual_group(&f, &full).unwrap().order().unwrap(), 1);

        // loop6: dual of the order-8 subgroup is cyclic of order 91
        let l = loop6();
        let rho4 = diag_generators(&l)[3].clone();
        let g8 = DiagGroup::from_generators(6, &[rho4.scale(91)]).unwrap();
        assert_eq!(g8.order().unwrap(), 8);
        let g91 = dual_group(&l, &g8).unwrap();
        assert_eq!(g91.order().unwrap(), 91);
        let claimed = diag(&[(10, 91), (27, 91), (82, 91), (3, 91), (90, 91), (61, 91)]);
        assert!(g91.contains(&claimed));
        // (H^T)^T = H
        assert_eq!(dual_group(&l.transpose(), &g91).unwrap(), g8);
    }

    #[test]
    fn dual_group_brute_force_oracle() {
        // cross-check the lattice dual against exhaustive filtering
        let f = fermat_4446();
        let h = DiagGroup::from_generators(4, &[j_w(&f)]).unwrap();
        let ht = dual_group(&f, &h).unwrap();
        let full_t = maximal_diag_group(&f.transpose()).unwrap();
        let brute: BTreeSet<Diagonal> = full_t
            .elements()
            .unwrap()
            .iter()
            .filter(|lam| {
                h.elements()
                    .unwrap()
                    .iter()
                    .all(|mu| duality_pairing(&f, lam, mu).is_zero())
            })
            .cloned()
            .collect();
        assert_eq!(&brute, ht.elements().unwrap());
    }

    #[test]
    fn commutators_and_centralizers() {
        let f = fermat_4446();
        let h32 = DiagGroup::from_generators(4, &group_32()).unwrap();
        let sigma = Permutation::parse("(1 2 3)", 4).unwrap();
        let comm = commutator_subgroup(&h32, &sigma).unwrap();
        assert_eq!(comm.order().unwrap(), 16);
        let ab = DiagGroup::from_generators(4, &group_32()[0..2]).unwrap();
        assert_eq!(comm, ab);

        let ch = centralizer_h(&h32, &sigma).unwrap();
        assert_eq!(ch.order().unwrap(), 2);
        assert!(ch.contains(&diag(&[(1, 2), (1, 2), (1, 2), (1, 2)])));
        // Lemma: C_H(σ) elements are constant on σ-orbits
        for mu in ch.elements().unwrap() {
            assert_eq!(mu.entries[0], mu.entries[1]);
            assert_eq!(mu.entries[1], mu.entries[2]);
        }
        assert_eq!(centralizer_h(&h32, &Permutation::identity(4)).unwrap(), h32);

        // commutator is trivial when H is centralized
        let jw = DiagGroup::from_generators(4, &[j_w(&f)]).unwrap();
        assert_eq!(
            commutator_subgroup(&jw, &sigma).unwrap().order().unwrap(),
            1
        );
    }

    #[test]
    fn normalizer_checks() {
        let f = fermat_4446();
        let s = PermGroup::closure(4, &[Permutation::parse("(1 2 3)", 4).unwrap()], 100).unwrap();
        let h32 = DiagGroup::from_generators(4, &group_32()).unwrap();
        assert!(normalizes(&s, &h32));
        let full = maximal_diag_group(&f).unwrap();
        assert!(normalizes(&s, &full));
        let s12 = PermGroup::closure(4, &[Permutation::parse("(1 2)", 4).unwrap()], 100).unwrap();
        let h_bad =
            DiagGroup::from_generators(4, &[diag(&[(1, 4), (0, 1), (0, 1), (0, 1)])]).unwrap();
        assert!(!normalizes(&s12, &h_bad));
    }

    #[test]
    fn model_construction() {
        let f = fermat_4446();
        let caps = Caps::default();
        let m = LgModel::new(
            f.clone(),
            &[Permutation::parse("(1 2 3)", 4).unwrap()],
            &[j_w(&f)],
            &caps,
        )
        .unwrap();
        assert_eq!(m.g().unwrap().order(), 36);
        // the conjugacy class of (123)γ has 16 elements: |G|/|C_G| = 96/6
        let m2 = LgModel::new(
            f.clone(),
            &[Permutation::parse("(1 2 3)", 4).unwrap()],
            &group_32(),
            &caps,
        )
        .unwrap();
        let g = m2.g().unwrap();
        assert_eq!(g.order(), 96);
        let x = GroupElement {
            perm: Permutation::parse("(1 2 3)", 4).unwrap(),
            diag: diag(&[(0, 1), (0, 1), (1, 2), (1, 2)]),
        };
        let cg = centralizer_g(g, &x);
        assert_eq!(cg.order(), 6);
        let class: BTreeSet<GroupElement> = g.elements.iter().map(|h| x.conjugate_by(h)).collect();
        assert_eq!(class.len(), 16);

        // normalizer failure is rejected at construction
        let bad = LgModel::new(
            f.clone(),
            &[Permutation::parse("(1 2)", 4).unwrap()],
            &[diag(&[(1, 4), (0, 1), (0, 1), (0, 1)])],
            &caps,
        );
        assert_eq!(bad.unwrap_err(), Error::NotNormalized);
    }

    #[test]
    fn group_axioms_and_action_identities() {
        let f = fermat_4446();
        let caps = Caps::default();
        let m = LgModel::new(
            f.clone(),
            &[Permutation::parse("(1 2 3)", 4).unwrap()],
            &group_32(),
            &caps,
        )
        .unwrap();
        let g = m.g().unwrap();
        let elems: Vec<&GroupElement> = g.elements.iter().collect();
        // closure, inverses, associativity spot checks
        for i in (0..elems.len()).step_by(7) {
            for j in (0..elems.len()).step_by(11) {
                let prod = elems[i].mul(elems[j]);
                assert!(g.contains(&prod));
                assert!(g.contains(&elems[i].inverse()));
                let k = (i + j) % elems.len();
                assert_eq!(
                    elems[i].mul(elems[j]).mul(elems[k]),
                    elems[i].mul(&elems[j].mul(elems[k]))
                );
            }
        }
        // [λ.σ] = [σ]^T [λ]
        let sigma = Permutation::parse("(1 2 3)", 4).unwrap();
        let lam = diag(&[(1, 4), (0, 1), (1, 2), (1, 6)]);
        let mut t = QMatrix::zero(4, 4);
        for i in 0..4 {
            t[(sigma.image(i), i)] = Rational::one(); // [σ]
        }
        let lhs = lam.act(&sigma).rationals();
        let rhs = t.transpose().mul_vec(&lam.rationals());
        for (a, b) in lhs.iter().zip(&rhs) {
            assert_eq!(QmodZ::new(*a), QmodZ::new(*b));
        }
        // ρ_i.σ = ρ_{σ^{-1}(i)}
        let rho = diag_generators(&f);
        for i in 0..4 {
            assert_eq!(rho[i].act(&sigma), rho[sigma.inverse().image(i)]);
        }
    }

    #[test]
    fn h_conjugation_orbit_is_commutator_coset() {
        let f = fermat_4446();
        let h32 = DiagGroup::from_generators(4, &group_32()).unwrap();
        let sigma = Permutation::parse("(1 2 3)", 4).unwrap();
        let g0 = GroupElement {
            perm: sigma.clone(),
            diag: j_w(&f).scale(0),
        };
        let orbit: BTreeSet<GroupElement> = h32
            .elements()
            .unwrap()
            .iter()
            .map(|mu| g0.conjugate_by(&GroupElement::from_diag(mu.clone())))
            .collect();
        let comm = commutator_subgroup(&h32, &sigma).unwrap();
        let coset: BTreeSet<GroupElement> = comm
            .elements()
            .unwrap()
            .iter()
            .map(|c| g0.mul(&GroupElement::from_diag(c.clone())))
            .collect();
        assert_eq!(orbit, coset);
    }
}
