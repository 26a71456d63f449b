//! The BHK mirror machinery: the diagonal Krawitz map, the nonabelian dual
//! `(W^T, S ⋉ H^T)`, the Diagonal Scaling Condition, per-fiber orbit-count
//! matching, the equivariant-Φ search, the prime-order shortcut, and the final
//! bidegree-table comparison.
//!
//! Fiber-level analysis runs on lattices, so it works unchanged when `H^T` is
//! far too large to enumerate; whole-model reports additionally require the
//! materialized bases.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groups::{
    centralizer_h, commutator_subgroup, dual_group, CycleData, DiagGroup, Diagonal, GroupElement,
    LgModel, PermGroup, Permutation,
};
use crate::linalg::solve_congruence;
use crate::orbits::{
    build_unprojected_basis, dot_action, projected_dimensions, star_action, FiberKey,
    GradedDimensions,
};
use crate::poly::InvertiblePolynomial;
use crate::rat::{QmodZ, Rational};
use crate::sectors::{special_cycles, Bidegree, Model, SectorBasisElement};
use crate::Caps;

// ---------------------------------------------------------------------------
// the Krawitz map
// ---------------------------------------------------------------------------

/// Fixed coordinate indices of a diagonal symmetry (zero entries, ascending).
fn fixed_indices(d: &Diagonal) -> Vec<usize> {
    d.entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Core of the Krawitz map over an invertible polynomial `p`: maps the basis
/// element with sector `λ` and Kreuzer exponents `m` (over the fixed
/// coordinates of λ) to the partner(s) `(μ, m')` on the `p^T` side, where
/// `μ = Π ρ̄_i^{m_i+1}` and `m'` solves `λ = Π ρ_j^{m'_j+1}` inside the
/// Kreuzer basis of `(p^T)_μ`. Even loops can make the solution a
/// two-element block; all solutions are returned.
pub fn krawitz_partner_keys(
    p: &InvertiblePolynomial,
    lambda: &Diagonal,
    m: &[u64],
) -> Result<Vec<(Diagonal, Vec<u64>)>> {
    let n = p.n_vars();
    let f_lambda = fixed_indices(lambda);
    assert_eq!(f_lambda.len(), m.len(), "exponents must align with Fix(λ)");
    let a_inv = p.exponent_matrix_inverse();
    // μ = Σ (m_i + 1) ρ̄_i over F_λ, where ρ̄_i is row i of A^{-1}
    let mut mu = vec![Rational::zero(); n];
    for (pos, &i) in f_lambda.iter().enumerate() {
        let row = a_inv.row(i);
        for (j, entry) in row.iter().enumerate() {
            mu[j] += *entry * Rational::from_integer(m[pos] as i64 + 1);
        }
    }
    let mu = Diagonal::from_rationals(&mu);
    // candidates on the transpose side: Kreuzer basis of (p^T)_μ
    let pt = p.transpose();
    let f_mu = fixed_indices(&mu);
    let candidates: Vec<Vec<u64>> = if f_mu.is_empty() {
        vec![Vec::new()]
    } else {
        pt.restrict(&f_mu)?
            .kreuzer_basis()
            .into_iter()
            .map(|mm| mm.exps)
            .collect()
    };
    let mut out = Vec::new();
    for cand in candidates {
        // λ' = Σ (cand_j + 1) ρ_j over F_μ, with ρ_j column j of A^{-1}
        let mut lam = vec![Rational::zero(); n];
        for (pos, &j) in f_mu.iter().enumerate() {
            let col = a_inv.col(j);
            for (i, entry) in col.iter().enumerate() {
                lam[i] += *entry * Rational::from_integer(cand[pos] as i64 + 1);
            }
        }
        if &Diagonal::from_rationals(&lam) == lambda {
            out.push((mu.clone(), cand));
        }
    }
    assert!(
        !out.is_empty(),
        "Krawitz congruence has no solution; this is a bug"
    );
    Ok(out)
}

/// The Krawitz partner(s) of a diagonal-sector basis element of `p`, as
/// elements over `p^T`.
pub fn krawitz_partners(
    p: &InvertiblePolynomial,
    c: &SectorBasisElement,
) -> Result<Vec<SectorBasisElement>> {
    if !c.sector.perm.is_identity() {
        return Err(Error::NotDiagonalSubgroup);
    }
    let keys = krawitz_partner_keys(p, &c.sector.diag, &c.exponents)?;
    Ok(keys
        .into_iter()
        .map(|(mu, exps)| SectorBasisElement {
            sector: GroupElement::from_diag(mu),
            exponents: exps,
        })
        .collect())
}

/// The unique Krawitz partner; errors with `LoopEvenAmbiguity` on the
/// two-dimensional even-loop blocks.
pub fn krawitz_pair(
    p: &InvertiblePolynomial,
    c: &SectorBasisElement,
) -> Result<SectorBasisElement> {
    let mut partners = krawitz_partners(p, c)?;
    if partners.len() == 1 {
        Ok(partners.pop().unwrap())
    } else {
        Err(Error::LoopEvenAmbiguity)
    }
}

// ---------------------------------------------------------------------------
// the nonabelian dual
// ---------------------------------------------------------------------------

/// `(W^T, S ⋉ H^T)`: the BHK dual polynomial with the same permutation group
/// and the dual diagonal group.
pub fn nonabelian_dual(model: &LgModel, caps: &Caps) -> Result<LgModel> {
    let wt = model.w.transpose();
    let ht = dual_group(&model.w, &model.h)?;
    LgModel::new(wt, &model.s.generators.clone(), &ht.generators, caps)
}

// ---------------------------------------------------------------------------
// per-fiber analysis on lattices
// ---------------------------------------------------------------------------

/// One side of a mirror comparison, by reference.
#[derive(Clone, Copy)]
pub struct SideCtx<'a> {
    pub w: &'a InvertiblePolynomial,
    pub s: &'a PermGroup,
    pub h: &'a DiagGroup,
}

impl<'a> SideCtx<'a> {
    pub fn of(model: &'a LgModel) -> SideCtx<'a> {
        SideCtx {
            w: &model.w,
            s: &model.s,
            h: &model.h,
        }
    }
}

/// The H-⋆ orbits of one fiber `𝖡_c`, represented by canonical orbit
/// representatives (cosets of `[H, σ]`), with their E/R status and the
/// witnesses for E membership.
pub struct FiberOrbits {
    pub key: FiberKey,
    pub orbit_reps: Vec<SectorBasisElement>,
    pub in_r: Vec<bool>,
    /// For orbits in E: the scaling element and its nonzero scalar.
    pub e_witnesses: Vec<Option<(GroupElement, QmodZ)>>,
    comm: DiagGroup,
}

impl FiberOrbits {
    pub fn r_count(&self) -> usize {
        self.in_r.iter().filter(|x| **x).count()
    }

    pub fn e_count(&self) -> usize {
        self.in_r.len() - self.r_count()
    }

    /// Index of the orbit containing `b` (which must lie in this fiber).
    pub fn orbit_index(&self, b: &SectorBasisElement) -> Option<usize> {
        let target = self
            .comm
            .lattice()
            .canonical_residue(&b.sector.diag.rationals());
        self.orbit_reps.iter().position(|rep| {
            self.comm
                .lattice()
                .canonical_residue(&rep.sector.diag.rationals())
                == target
        })
    }
}

/// Analyzes the fiber `𝖡_c` for `c = ⌊monomial; α⌉` over σ without
/// enumerating H: orbits are cosets of `[H, σ]` inside `{λ ∈ H : β(λ) = α}`.
/// Returns `None` when the fiber is empty.
pub fn analyze_fiber(ctx: SideCtx<'_>, key: &FiberKey, caps: &Caps) -> Result<Option<FiberOrbits>> {
    let cd = CycleData::new(&key.sigma);
    let b_mat = cd.b_matrix();
    // one sector λ0 with β(λ0) = α, if any
    let t = b_mat.mul(&ctx.h.lattice().basis());
    let alpha_r: Vec<Rational> = key.alpha.rationals();
    let y = match solve_congruence(&t, &alpha_r)? {
        Some(y) => y,
        None => return Ok(None),
    };
    let base = ctx.h.lattice().basis().mul_vec(
        &y.iter()
            .map(|&v| Rational::from_integer(v as i64))
            .collect::<Vec<_>>(),
    );
    let lambda0 = Diagonal::from_rationals(&base);
    debug_assert!(ctx.h.contains(&lambda0));

    let kernel = ctx.h.kernel_of(&b_mat)?;
    let comm = commutator_subgroup(ctx.h, &key.sigma)?;
    let reps = kernel
        .lattice()
        .quotient_reps(comm.lattice(), caps.group_cap)?;

    let mut orbit_reps = Vec::with_capacity(reps.len());
    for rep in reps {
        let lam = lambda0.add(&Diagonal::from_rationals(&rep));
        orbit_reps.push(SectorBasisElement {
            sector: GroupElement {
                perm: key.sigma.clone(),
                diag: lam,
            },
            exponents: key.monomial.clone(),
        });
    }
    orbit_reps.sort();

    let mut in_r = Vec::with_capacity(orbit_reps.len());
    let mut e_witnesses = Vec::with_capacity(orbit_reps.len());
    for b in &orbit_reps {
        let witness = self_scaling_witness(ctx, b)?;
        in_r.push(witness.is_none());
        e_witnesses.push(witness);
    }
    Ok(Some(FiberOrbits {
        key: key.clone(),
        orbit_reps,
        in_r,
        e_witnesses,
        comm,
    }))
}

/// Searches for `h = πμ ∈ G` with `b ⋆ h = b` and nonzero dot scalar, without
/// enumerating H: for each π the compatible μ form a coset of `C_H(σ)` in the
/// lattice, over which the scalar is an affine map.
fn self_scaling_witness(
    ctx: SideCtx<'_>,
    b: &SectorBasisElement,
) -> Result<Option<(GroupElement, QmodZ)>> {
    let sigma = &b.sector.perm;
    let nu = &b.sector.diag;
    let n = sigma.n();
    let cd = CycleData::new(sigma);
    let f = special_cycles(&b.sector);
    let cent = centralizer_h(ctx.h, sigma)?;

    // the scalar of a diagonal δ ∈ C_H(σ): Σ (p_k + 1) δ_{s(k)}
    let diag_scalar = |delta: &Diagonal| -> QmodZ {
        let mut acc = QmodZ::zero();
        for (pos, &k) in f.iter().enumerate() {
            acc = acc + delta.entries[cd.s(k)].scale(b.exponents[pos] as i64 + 1);
        }
        acc
    };

    // does the scalar functional vanish identically on C_H(σ)?
    let cent_cols: Vec<Diagonal> = (0..n)
        .map(|j| Diagonal::from_rationals(&cent.lattice().basis().col(j)))
        .collect();
    let functional_trivial = cent_cols.iter().all(|col| diag_scalar(col).is_zero());

    // conjugation matrix μ ↦ μ − μ.σ on representatives
    let mut conj = crate::linalg::QMatrix::zero(n, n);
    for i in 0..n {
        conj[(i, i)] += Rational::from_integer(1);
        conj[(i, sigma.image(i))] = conj[(i, sigma.image(i))] - Rational::from_integer(1);
    }

    for pi in &ctx.s.elements {
        // need π ∈ C_S(σ) for b ⋆ πμ to return to the same sector
        if pi.mul(sigma) != sigma.mul(pi) {
            continue;
        }
        // solve μ − μ.σ = ν − ν.π within the H lattice
        let target: Vec<Rational> = nu
            .rationals()
            .iter()
            .zip(nu.act(pi).rationals())
            .map(|(a, b)| *a - b)
            .collect();
        let t = conj.mul(&ctx.h.lattice().basis());
        let y = match solve_congruence(&t, &target)? {
            Some(y) => y,
            None => continue,
        };
        let mu0 = Diagonal::from_rationals(
            &ctx.h.lattice().basis().mul_vec(
                &y.iter()
                    .map(|&v| Rational::from_integer(v as i64))
                    .collect::<Vec<_>>(),
            ),
        );
        let h0 = GroupElement {
            perm: pi.clone(),
            diag: mu0,
        };
        // the monomial must come back to itself
        if &star_action(b, &h0) != b {
            continue;
        }
        let (base_scalar, _) = dot_action(b, &h0);
        if !base_scalar.is_zero() {
            return Ok(Some((h0, base_scalar)));
        }
        if !functional_trivial {
            // some δ ∈ C_H(σ) shifts the scalar off zero
            for col in &cent_cols {
                let s = diag_scalar(col);
                if !s.is_zero() {
                    let h = h0.mul(&GroupElement::from_diag(Diagonal {
                        entries: col.entries.clone(),
                    }));
                    let (sc, moved) = dot_action(b, &h);
                    debug_assert_eq!(&moved, b);
                    debug_assert_eq!(sc, base_scalar + s);
                    return Ok(Some((h, sc)));
                }
            }
        }
    }
    Ok(None)
}

/// Does some `μ ∈ C_H(σ)` rescale the fiber's monomial nontrivially (the
/// diagonal scaling of Lemma `empty-fibers`)? Constant across the fiber.
pub fn fiber_has_diagonal_scaling(ctx: SideCtx<'_>, key: &FiberKey) -> Result<bool> {
    let cd = CycleData::new(&key.sigma);
    let cent = centralizer_h(ctx.h, &key.sigma)?;
    let fixed: Vec<usize> = key
        .alpha
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_zero())
        .map(|(k, _)| k)
        .collect();
    let n = key.sigma.n();
    for j in 0..n {
        let col = Diagonal::from_rationals(&cent.lattice().basis().col(j));
        let mut acc = QmodZ::zero();
        for (pos, &k) in fixed.iter().enumerate() {
            acc = acc + col.entries[cd.s(k)].scale(key.monomial[pos] as i64 + 1);
        }
        if !acc.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The S-⋆ action on fiber keys: `c ⋆ π` conjugates σ, permutes the sector α
/// by the induced cycle permutation, and carries the monomial along.
pub fn fiber_key_star(key: &FiberKey, pi: &Permutation) -> FiberKey {
    let target_sigma = pi.inverse().mul(&key.sigma).mul(pi);
    let src = CycleData::new(&key.sigma);
    let dst = CycleData::new(&target_sigma);
    let pi_inv = pi.inverse();
    let p: Vec<usize> = (0..src.cycle_count())
        .map(|k| dst.r(pi_inv.image(src.s(k))))
        .collect();
    let mut alpha = vec![QmodZ::zero(); dst.cycle_count()];
    for (k, &pk) in p.iter().enumerate() {
        alpha[pk] = key.alpha.entries[k];
    }
    let fixed_src: Vec<usize> = key
        .alpha
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_zero())
        .map(|(k, _)| k)
        .collect();
    let fixed_dst: Vec<usize> = alpha
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_zero())
        .map(|(k, _)| k)
        .collect();
    let mut monomial = vec![0u64; fixed_dst.len()];
    for (pos, &k) in fixed_src.iter().enumerate() {
        let dst_pos = fixed_dst.iter().position(|&k2| k2 == p[k]).unwrap();
        monomial[dst_pos] = key.monomial[pos];
    }
    FiberKey {
        sigma: target_sigma,
        alpha: Diagonal { entries: alpha },
        monomial,
    }
}

// ---------------------------------------------------------------------------
// pairing fibers across the mirror
// ---------------------------------------------------------------------------

/// A block of Krawitz-paired fibers. Blocks are singletons on each side except
/// for the two-dimensional even-loop ambiguity, where both sides hold two
/// fibers matched only as a block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairBlock {
    pub a_keys: Vec<FiberKey>,
    pub b_keys: Vec<FiberKey>,
    pub ambiguous: bool,
}

/// Krawitz partner keys of a fiber over `W^σ`, as fiber keys on the
/// transposed side (same σ).
pub fn partner_keys(w: &InvertiblePolynomial, key: &FiberKey) -> Result<Vec<FiberKey>> {
    let w_sigma = w.reduce_w_sigma(&key.sigma)?;
    let partners = krawitz_partner_keys(&w_sigma, &key.alpha, &key.monomial)?;
    Ok(partners
        .into_iter()
        .map(|(mu, m)| FiberKey {
            sigma: key.sigma.clone(),
            alpha: mu,
            monomial: m,
        })
        .collect())
}

/// Groups the relevant fibers of both sides into Krawitz pair blocks. Keys
/// appearing only through a partner (an empty fiber on that side) are
/// included so emptiness checks can see them.
pub fn pair_blocks(
    w_a: &InvertiblePolynomial,
    keys_a: &BTreeSet<FiberKey>,
    w_b: &InvertiblePolynomial,
    keys_b: &BTreeSet<FiberKey>,
) -> Result<Vec<PairBlock>> {
    // union-find over tagged keys
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    enum Tag {
        A(FiberKey),
        B(FiberKey),
    }
    let mut edges: Vec<(Tag, Tag)> = Vec::new();
    let mut nodes: BTreeSet<Tag> = BTreeSet::new();
    for k in keys_a {
        nodes.insert(Tag::A(k.clone()));
        for p in partner_keys(w_a, k)? {
            edges.push((Tag::A(k.clone()), Tag::B(p.clone())));
            nodes.insert(Tag::B(p));
        }
    }
    for k in keys_b {
        nodes.insert(Tag::B(k.clone()));
        for p in partner_keys(w_b, k)? {
            edges.push((Tag::B(k.clone()), Tag::A(p.clone())));
            nodes.insert(Tag::A(p));
        }
    }
    let node_list: Vec<Tag> = nodes.iter().cloned().collect();
    let index: BTreeMap<Tag, usize> = node_list
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut parent: Vec<usize> = (0..node_list.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = i;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for (a, b) in &edges {
        let (ia, ib) = (index[a], index[b]);
        let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, (Vec<FiberKey>, Vec<FiberKey>)> = BTreeMap::new();
    for (i, tag) in node_list.iter().enumerate() {
        let root = find(&mut parent, i);
        let entry = groups.entry(root).or_default();
        match tag {
            Tag::A(k) => entry.0.push(k.clone()),
            Tag::B(k) => entry.1.push(k.clone()),
        }
    }
    let mut out: Vec<PairBlock> = groups
        .into_values()
        .map(|(a_keys, b_keys)| {
            let ambiguous = a_keys.len() > 1 || b_keys.len() > 1;
            PairBlock {
                a_keys,
                b_keys,
                ambiguous,
            }
        })
        .collect();
    out.sort_by(|x, y| x.a_keys.cmp(&y.a_keys).then(x.b_keys.cmp(&y.b_keys)));
    Ok(out)
}

// ---------------------------------------------------------------------------
// the DSC check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct DscFailure {
    /// true: the failing fiber is on the A side; false: on the B side.
    pub on_a_side: bool,
    pub fiber: FiberKey,
    /// A self-scaling element with no diagonal counterpart, with its scalar.
    pub scaler: GroupElement,
    pub scalar: QmodZ,
}

#[derive(Debug, Clone, Default)]
pub struct DscReport {
    pub pass: bool,
    pub failures: Vec<DscFailure>,
}

/// Checks the diagonal scaling condition in both directions over all fibers
/// of the two bases.
pub fn dsc_check(model_a: &LgModel, model_b: &LgModel, caps: &Caps) -> Result<DscReport> {
    let mut failures = Vec::new();
    for (ctx, keys, on_a) in [
        (
            SideCtx::of(model_a),
            build_unprojected_basis(model_a)?
                .fibers
                .into_keys()
                .collect::<Vec<_>>(),
            true,
        ),
        (
            SideCtx::of(model_b),
            build_unprojected_basis(model_b)?
                .fibers
                .into_keys()
                .collect::<Vec<_>>(),
            false,
        ),
    ] {
        for key in keys {
            let orbits =
                analyze_fiber(ctx, &key, caps)?.expect("fiber from the built basis is nonempty");
            if orbits.e_count() == 0 {
                continue;
            }
            if !fiber_has_diagonal_scaling(ctx, &key)? {
                let idx = orbits.in_r.iter().position(|r| !r).unwrap();
                let (scaler, scalar) = orbits.e_witnesses[idx].clone().unwrap();
                failures.push(DscFailure {
                    on_a_side: on_a,
                    fiber: key.clone(),
                    scaler,
                    scalar,
                });
            }
        }
    }
    Ok(DscReport {
        pass: failures.is_empty(),
        failures,
    })
}

// ---------------------------------------------------------------------------
// orbit count check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct OrbitCountEntry {
    pub block: PairBlock,
    pub r_orbits_a: usize,
    pub r_orbits_b: usize,
}

#[derive(Debug, Clone, Default)]
pub struct OrbitCountReport {
    pub pass: bool,
    pub entries: Vec<OrbitCountEntry>,
}

fn r_orbit_count(ctx: SideCtx<'_>, keys: &[FiberKey], caps: &Caps) -> Result<usize> {
    let mut total = 0;
    for key in keys {
        if let Some(orbits) = analyze_fiber(ctx, key, caps)? {
            total += orbits.r_count();
        }
    }
    Ok(total)
}

/// For every Krawitz pair block, the number of H-⋆ orbits in `𝖱` must agree
/// across the mirror.
pub fn orbit_count_check(
    model_a: &LgModel,
    model_b: &LgModel,
    caps: &Caps,
) -> Result<OrbitCountReport> {
    let keys_a: BTreeSet<FiberKey> = build_unprojected_basis(model_a)?
        .fibers
        .into_keys()
        .collect();
    let keys_b: BTreeSet<FiberKey> = build_unprojected_basis(model_b)?
        .fibers
        .into_keys()
        .collect();
    let blocks = pair_blocks(&model_a.w, &keys_a, &model_b.w, &keys_b)?;
    let ctx_a = SideCtx::of(model_a);
    let ctx_b = SideCtx::of(model_b);
    let mut entries = Vec::new();
    let mut pass = true;
    for block in blocks {
        let r_a = r_orbit_count(ctx_a, &block.a_keys, caps)?;
        let r_b = r_orbit_count(ctx_b, &block.b_keys, caps)?;
        if r_a != r_b {
            pass = false;
        }
        if r_a != 0 || r_b != 0 {
            entries.push(OrbitCountEntry {
                block,
                r_orbits_a: r_a,
                r_orbits_b: r_b,
            });
        }
    }
    Ok(OrbitCountReport { pass, entries })
}

// ---------------------------------------------------------------------------
// the equivariant Φ search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct PhiWitness {
    pub block: PairBlock,
    pub a_orbit_count: usize,
    pub b_orbit_count: usize,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub enum PhiOutcome {
    /// An S-equivariant bijection exists; the total number of matched H-⋆
    /// orbit pairs over all representative blocks.
    Equivariant {
        matched_orbits: usize,
    },
    Failed(PhiWitness),
    LimitExceeded,
}

impl PhiOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, PhiOutcome::Equivariant { .. })
    }
}

/// One side's orbit data for a block: orbit representatives (restricted to
/// `𝖱`) fiber by fiber, plus the permutation action of each stabilizer
/// element on those orbits.
struct BlockOrbitData {
    reps: Vec<SectorBasisElement>,
    /// action[t][i] = image of orbit i under the t-th stabilizer element
    action: Vec<Vec<usize>>,
}

fn block_orbit_data(
    ctx: SideCtx<'_>,
    keys: &[FiberKey],
    stab: &[Permutation],
    caps: &Caps,
) -> Result<BlockOrbitData> {
    let mut fibers = Vec::new();
    for key in keys {
        if let Some(orbits) = analyze_fiber(ctx, key, caps)? {
            fibers.push(orbits);
        }
    }
    let mut reps = Vec::new();
    let mut locate: Vec<(usize, usize)> = Vec::new(); // (fiber idx, orbit idx) per rep
    for (fi, f) in fibers.iter().enumerate() {
        for (oi, rep) in f.orbit_reps.iter().enumerate() {
            if f.in_r[oi] {
                reps.push(rep.clone());
                locate.push((fi, oi));
            }
        }
    }
    let mut action = Vec::with_capacity(stab.len());
    for pi in stab {
        let h = GroupElement::from_perm(pi.clone());
        let mut row = Vec::with_capacity(reps.len());
        for rep in &reps {
            let moved = star_action(rep, &h);
            // find the fiber the moved element belongs to, then its orbit
            let target_key = fiber_key_of(&moved);
            let mut found = None;
            for (fi, f) in fibers.iter().enumerate() {
                if f.key == target_key {
                    if let Some(oi) = f.orbit_index(&moved) {
                        found = locate.iter().position(|&(a, b)| (a, b) == (fi, oi));
                    }
                }
            }
            row.push(found.expect("stabilizer keeps orbits within the block's fibers"));
        }
        action.push(row);
    }
    Ok(BlockOrbitData { reps, action })
}

/// The fiber key of a basis element (σ, β_σ(λ), monomial).
pub fn fiber_key_of(b: &SectorBasisElement) -> FiberKey {
    let cd = CycleData::new(&b.sector.perm);
    FiberKey {
        sigma: b.sector.perm.clone(),
        alpha: crate::sectors::beta(&cd, &b.sector.diag),
        monomial: b.exponents.clone(),
    }
}

/// Backtracking search for a bijection commuting with the recorded actions.
fn equivariant_bijection(a: &BlockOrbitData, b: &BlockOrbitData) -> Option<Vec<usize>> {
    let n = a.reps.len();
    if n != b.reps.len() {
        return None;
    }
    fn extend(
        a: &BlockOrbitData,
        b: &BlockOrbitData,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = match map.iter().position(|m| m.is_none()) {
            Some(i) => i,
            None => return true,
        };
        'cand: for j in 0..b.reps.len() {
            if used[j] {
                continue;
            }
            // tentatively map i -> j and propagate through the actions
            let mut added: Vec<usize> = Vec::new();
            map[i] = Some(j);
            used[j] = true;
            added.push(i);
            let mut queue = vec![i];
            let mut consistent = true;
            while let Some(x) = queue.pop() {
                let y = map[x].unwrap();
                for t in 0..a.action.len() {
                    let xi = a.action[t][x];
                    let yi = b.action[t][y];
                    match map[xi] {
                        Some(existing) if existing != yi => {
                            consistent = false;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            if used[yi] {
                                consistent = false;
                                break;
                            }
                            map[xi] = Some(yi);
                            used[yi] = true;
                            added.push(xi);
                            queue.push(xi);
                        }
                    }
                }
                if !consistent {
                    break;
                }
            }
            if consistent && extend(a, b, map, used) {
                return true;
            }
            for &x in &added {
                let y = map[x].take().unwrap();
                used[y] = false;
            }
            continue 'cand;
        }
        false
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if extend(a, b, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

/// Searches for an S-equivariant bijection Φ between H-⋆ orbits in `𝖱` and
/// H^T-⋆ orbits in `𝖱^T`, per representative pair block (equivariance on the
/// stabilizer extends along the S-orbit).
pub fn equivariant_phi(model_a: &LgModel, model_b: &LgModel, caps: &Caps) -> Result<PhiOutcome> {
    let keys_a: BTreeSet<FiberKey> = build_unprojected_basis(model_a)?
        .fibers
        .into_keys()
        .collect();
    let keys_b: BTreeSet<FiberKey> = build_unprojected_basis(model_b)?
        .fibers
        .into_keys()
        .collect();
    let blocks = pair_blocks(&model_a.w, &keys_a, &model_b.w, &keys_b)?;
    equivariant_phi_over_blocks(SideCtx::of(model_a), SideCtx::of(model_b), &blocks, caps)
}

/// The Φ search over an explicit list of pair blocks; `ctx` sides may carry
/// lattice-only (non-enumerable) diagonal groups.
pub fn equivariant_phi_over_blocks(
    ctx_a: SideCtx<'_>,
    ctx_b: SideCtx<'_>,
    blocks: &[PairBlock],
    caps: &Caps,
) -> Result<PhiOutcome> {
    // group blocks into S-orbits via the ⋆ action on their A-side key sets
    let mut visited: BTreeSet<Vec<FiberKey>> = BTreeSet::new();
    let mut matched_orbits = 0usize;
    for block in blocks {
        if visited.contains(&block.a_keys) {
            continue;
        }
        // S-orbit of this block
        let mut orbit_keysets: BTreeSet<Vec<FiberKey>> = BTreeSet::new();
        let mut stab: Vec<Permutation> = Vec::new();
        for pi in &ctx_a.s.elements {
            let mut moved: Vec<FiberKey> =
                block.a_keys.iter().map(|k| fiber_key_star(k, pi)).collect();
            moved.sort();
            if moved == block.a_keys {
                stab.push(pi.clone());
            }
            orbit_keysets.insert(moved);
        }
        visited.extend(orbit_keysets.iter().cloned());

        // stabilizers must agree on the mirror side
        let mut stab_b: Vec<Permutation> = Vec::new();
        for pi in &ctx_b.s.elements {
            let mut moved: Vec<FiberKey> =
                block.b_keys.iter().map(|k| fiber_key_star(k, pi)).collect();
            moved.sort();
            if moved == block.b_keys {
                stab_b.push(pi.clone());
            }
        }
        if stab != stab_b {
            return Ok(PhiOutcome::Failed(PhiWitness {
                block: block.clone(),
                a_orbit_count: 0,
                b_orbit_count: 0,
                reason: String::from("fiber stabilizers differ between the two sides"),
            }));
        }

        let data_a = block_orbit_data(ctx_a, &block.a_keys, &stab, caps)?;
        let data_b = block_orbit_data(ctx_b, &block.b_keys, &stab, caps)?;
        if data_a.reps.len() != data_b.reps.len() {
            return Ok(PhiOutcome::Failed(PhiWitness {
                block: block.clone(),
                a_orbit_count: data_a.reps.len(),
                b_orbit_count: data_b.reps.len(),
                reason: String::from("orbit counts differ"),
            }));
        }
        if data_a.reps.len() > caps.phi_cap {
            return Ok(PhiOutcome::LimitExceeded);
        }
        match equivariant_bijection(&data_a, &data_b) {
            Some(_) => matched_orbits += data_a.reps.len(),
            None => {
                return Ok(PhiOutcome::Failed(PhiWitness {
                    block: block.clone(),
                    a_orbit_count: data_a.reps.len(),
                    b_orbit_count: data_b.reps.len(),
                    reason: String::from(
                        "no bijection commutes with the stabilizer action on orbits",
                    ),
                }))
            }
        }
    }
    Ok(PhiOutcome::Equivariant { matched_orbits })
}

// ---------------------------------------------------------------------------
// prime-order shortcut
// ---------------------------------------------------------------------------

/// When S is cyclic of odd prime order, the DSC and Equivariant-Φ conditions
/// hold automatically.
pub fn prime_order_shortcut(s: &PermGroup) -> bool {
    s.is_cyclic_odd_prime()
}

/// The trivial-fiber-action hypothesis: for all commuting pairs σ, τ in S,
/// `[H,τ] ∩ ker β_σ ⊆ [H,σ]`. Returns a witness element on failure.
pub fn trivial_fiber_action_hypothesis(
    s: &PermGroup,
    h: &DiagGroup,
) -> Result<core::result::Result<(), (Permutation, Permutation, Diagonal)>> {
    for sigma in &s.elements {
        let cd = CycleData::new(sigma);
        let comm_sigma = commutator_subgroup(h, sigma)?;
        let kernel = h.kernel_of(&cd.b_matrix())?;
        for tau in &s.elements {
            if tau.mul(sigma) != sigma.mul(tau) {
                continue;
            }
            let comm_tau = commutator_subgroup(h, tau)?;
            let lhs = comm_tau.intersect(&kernel)?;
            if !lhs.is_subgroup_of(&comm_sigma) {
                // some lattice basis column violates the inclusion
                let basis = lhs.lattice().basis();
                for j in 0..basis.cols {
                    let d = Diagonal::from_rationals(&basis.col(j));
                    if !d.is_zero() && !comm_sigma.contains(&d) {
                        return Ok(Err((sigma.clone(), tau.clone(), d)));
                    }
                }
                unreachable!("violating lattice has a violating basis column");
            }
        }
    }
    Ok(Ok(()))
}

// ---------------------------------------------------------------------------
// the full verdict
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    Mismatch {
        at: Bidegree,
        dim_a: usize,
        dim_b: usize,
    },
}

pub struct MirrorReport {
    pub w: InvertiblePolynomial,
    pub w_dual: InvertiblePolynomial,
    pub s_generators: Vec<Permutation>,
    pub h_generators: Vec<Diagonal>,
    pub h_dual_generators: Vec<Diagonal>,
    pub h_order: u128,
    pub h_dual_order: u128,
    pub prime_order_shortcut: bool,
    pub dsc: DscReport,
    pub counts: OrbitCountReport,
    pub phi: PhiOutcome,
    pub table_a: GradedDimensions,
    pub table_b: GradedDimensions,
    pub verdict: Verdict,
}

/// Runs the whole pipeline: builds the dual pair, checks DSC, orbit counts
/// and equivariant Φ, computes both bigraded tables, and compares them.
/// Condition failures never short-circuit the table comparison.
pub fn verify_mirror(model: &LgModel, caps: &Caps) -> Result<MirrorReport> {
    let dual = nonabelian_dual(model, caps)?;
    let dsc = dsc_check(model, &dual, caps)?;
    let counts = orbit_count_check(model, &dual, caps)?;
    let phi = equivariant_phi(model, &dual, caps)?;
    let table_a = projected_dimensions(model, Model::A)?;
    let table_b = projected_dimensions(&dual, Model::B)?;
    let verdict = match table_a.first_difference(&table_b) {
        None => Verdict::Isomorphic,
        Some((at, dim_a, dim_b)) => Verdict::Mismatch { at, dim_a, dim_b },
    };
    Ok(MirrorReport {
        w: model.w.clone(),
        w_dual: dual.w.clone(),
        s_generators: model.s.generators.clone(),
        h_generators: model.h.generators.clone(),
        h_dual_generators: dual.h.generators.clone(),
        h_order: model.h.order()?,
        h_dual_order: dual.h.order()?,
        prime_order_shortcut: prime_order_shortcut(&model.s),
        dsc,
        counts,
        phi,
        table_a,
        table_b,
        verdict,
    })
}
