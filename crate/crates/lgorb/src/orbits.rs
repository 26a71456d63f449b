//! The action of `G` on the preferred basis of the unprojected state space:
//! the exact dot action (with root-of-unity scalars in Q/Z), the scalar-free
//! ⋆ action, the fiber structure `𝖡 = ⋃ 𝖡_c`, the split into killed elements
//! `𝖤` and survivors `𝖱`, orbit enumeration, and projected state-space
//! dimensions (with the independent conjugacy-class/centralizer route).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::groups::{
    centralizer_g, commutator_subgroup, CycleData, Diagonal, GroupElement, LgModel, Permutation,
    SymmetryGroup,
};
use crate::rat::QmodZ;
use crate::sectors::{bidegree, sector_basis, special_cycles, Bidegree, Model, SectorBasisElement};

// ---------------------------------------------------------------------------
// the ⋆ and dot actions
// ---------------------------------------------------------------------------

/// The permutation `P_{σ,π}` of cycle indices induced by conjugation:
/// `π τ_k π^{-1} = τ̄_{P(k)}`.
fn cycle_permutation(src: &CycleData, dst: &CycleData, pi: &Permutation) -> Vec<usize> {
    (0..src.cycle_count())
        .map(|k| dst.r(pi.image(src.s(k))))
        .collect()
}

/// `b ⋆ h`: the sector is conjugated to `h^{-1} g h` and the monomial indices
/// are carried through `P_{σ,π}`; all scalars are ignored.
pub fn star_action(b: &SectorBasisElement, h: &GroupElement) -> SectorBasisElement {
    let g = &b.sector;
    let target = g.conjugate_by(h);
    let pi = h.inverse().perm;
    let src = CycleData::new(&g.perm);
    let dst = CycleData::new(&target.perm);
    let p = cycle_permutation(&src, &dst, &pi);
    let f_src = special_cycles(g);
    let f_dst = special_cycles(&target);
    debug_assert_eq!(f_src.len(), f_dst.len());
    let mut exps = vec![0u64; f_dst.len()];
    for (pos, &k) in f_src.iter().enumerate() {
        let dst_pos = f_dst
            .iter()
            .position(|&k2| k2 == p[k])
            .expect("conjugation preserves special cycles");
        exps[dst_pos] = b.exponents[pos];
    }
    SectorBasisElement {
        sector: target,
        exponents: exps,
    }
}

/// `b.h = e^{2πi·scalar} (b ⋆ h)`: the exact dot action. The scalar collects,
/// per special cycle, the coefficient of the corresponding coordinate under
/// `z_{n,σλ}.(πμ)^{-1}` (with `πμ = h^{-1}`), weighted by exponent + 1 for the
/// volume form, plus 1/2 when the induced permutation of the fixed-locus
/// coordinates is odd.
pub fn dot_action(b: &SectorBasisElement, h: &GroupElement) -> (QmodZ, SectorBasisElement) {
    let g = &b.sector;
    let hinv = h.inverse();
    let pi = &hinv.perm;
    let mu = &hinv.diag;
    let lambda = &g.diag;
    let sigma = &g.perm;
    let sigma_inv = sigma.inverse();
    let target = g.conjugate_by(h);
    let src = CycleData::new(sigma);
    let dst = CycleData::new(&target.perm);
    let p = cycle_permutation(&src, &dst, pi);
    let f_src = special_cycles(g);
    let f_dst = special_cycles(&target);

    let mut scalar = QmodZ::zero();
    for (pos, &k) in f_src.iter().enumerate() {
        let s = src.s(k);
        let target_s = dst.s(p[k]);
        let pi_s = pi.image(s);
        // ℓ with π(s(k)) = σ̄^ℓ(s̄(P(k)))
        let mut ell = 0usize;
        let mut x = target_s;
        while x != pi_s {
            x = target.perm.image(x);
            ell += 1;
        }
        // coefficient of z: -μ_{σ^{-ℓ}(s)} + Σ_{i=1..ℓ} λ_{σ^{-i}(s)}
        let mut coeff = QmodZ::zero();
        let mut y = s;
        for _ in 0..ell {
            y = sigma_inv.image(y);
            coeff = coeff + lambda.entries[y];
        }
        coeff = coeff - mu.entries[y];
        scalar = scalar + coeff.scale(b.exponents[pos] as i64 + 1);
    }

    // sign of the permutation of the ordered fixed-locus coordinates
    let images: Vec<usize> = f_src
        .iter()
        .map(|&k| f_dst.iter().position(|&k2| k2 == p[k]).unwrap())
        .collect();
    let mut inversions = 0usize;
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 1 {
        scalar = scalar + QmodZ::from_parts(1, 2);
    }

    (scalar, star_action(b, h))
}

// ---------------------------------------------------------------------------
// the preferred basis and its fibers
// ---------------------------------------------------------------------------

/// Identifies a fiber `𝖡_c`: the permutation σ, the sector `α = β_σ(λ)` of
/// `c ∈ 𝖢_σ`, and the monomial of `c` (exponents over the fixed coordinates
/// of α, ascending).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiberKey {
    pub sigma: Permutation,
    pub alpha: Diagonal,
    pub monomial: Vec<u64>,
}

impl FiberKey {
    pub fn format(&self) -> String {
        let fixed: Vec<usize> = self
            .alpha
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_zero())
            .map(|(k, _)| k)
            .collect();
        let cd = CycleData::new(&self.sigma);
        let mut parts: Vec<String> = Vec::new();
        for (pos, &k) in fixed.iter().enumerate() {
            match self.monomial[pos] {
                0 => {}
                1 => parts.push(alloc::format!("z{}", cd.s(k) + 1)),
                e => parts.push(alloc::format!("z{}^{e}", cd.s(k) + 1)),
            }
        }
        let mono = if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        };
        alloc::format!(
            "σ={} c=[{}; {}]",
            self.sigma.format(),
            mono,
            self.alpha.format()
        )
    }
}

/// The preferred basis `𝖡` of the unprojected state space, organized by fiber.
#[derive(Debug, Clone)]
pub struct UnprojectedBasis {
    pub fibers: BTreeMap<FiberKey, Vec<SectorBasisElement>>,
}

impl UnprojectedBasis {
    pub fn all_elements(&self) -> impl Iterator<Item = &SectorBasisElement> {
        self.fibers.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.fibers.values().map(|v| v.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.fibers.is_empty()
    }
}

/// Builds `𝖡`: for each σ ∈ S and each α in the image of `β_σ` on H, the
/// Kreuzer basis of `(W^σ)_α` indexes a fiber whose members run over
/// `{σλ : β_σ(λ) = α}`.
pub fn build_unprojected_basis(model: &LgModel) -> Result<UnprojectedBasis> {
    let h_elems = model.h.elements()?;
    let mut fibers = BTreeMap::new();
    for sigma in &model.s.elements {
        let cd = CycleData::new(sigma);
        let w_sigma = model.w.reduce_w_sigma(sigma)?;
        let mut by_alpha: BTreeMap<Diagonal, Vec<Diagonal>> = BTreeMap::new();
        for lambda in h_elems {
            let alpha = crate::sectors::beta(&cd, lambda);
            by_alpha.entry(alpha).or_default().push(lambda.clone());
        }
        for (alpha, lambdas) in by_alpha {
            let fixed: Vec<usize> = alpha
                .entries
                .iter()
                .enumerate()
                .filter(|(_, e)| e.is_zero())
                .map(|(k, _)| k)
                .collect();
            let monomials: Vec<Vec<u64>> = if fixed.is_empty() {
                vec![Vec::new()]
            } else {
                w_sigma
                    .restrict(&fixed)?
                    .kreuzer_basis()
                    .into_iter()
                    .map(|m| m.exps)
                    .collect()
            };
            for mono in monomials {
                let members: Vec<SectorBasisElement> = lambdas
                    .iter()
                    .map(|l| SectorBasisElement {
                        sector: GroupElement {
                            perm: sigma.clone(),
                            diag: l.clone(),
                        },
                        exponents: mono.clone(),
                    })
                    .collect();
                fibers.insert(
                    FiberKey {
                        sigma: sigma.clone(),
                        alpha: alpha.clone(),
                        monomial: mono,
                    },
                    members,
                );
            }
        }
    }
    Ok(UnprojectedBasis { fibers })
}

// ---------------------------------------------------------------------------
// the E/R split
// ---------------------------------------------------------------------------

/// For `b` in the basis, a witness that `b ∈ 𝖤`: an `h ∈ G` with
/// `b ⋆ h = b` and a nonzero dot scalar.
pub type EWitness = (GroupElement, QmodZ);

/// Finds a self-scaling of `b` if one exists, searching the centralizer of
/// the sector (a ⋆-fixing element must centralize the sector).
pub fn e_witness(centralizer: &SymmetryGroup, b: &SectorBasisElement) -> Option<EWitness> {
    for h in &centralizer.elements {
        if h.is_identity() {
            continue;
        }
        let (scalar, moved) = dot_action(b, h);
        if &moved == b && !scalar.is_zero() {
            return Some((h.clone(), scalar));
        }
    }
    None
}

/// Splits the basis into `𝖤` (elements scaled nontrivially by some `h ∈ G`
/// fixing them under ⋆) and `𝖱 = 𝖡 ∖ 𝖤`, with witnesses for every element
/// of `𝖤`.
pub struct ErSplit {
    pub e: BTreeSet<SectorBasisElement>,
    pub r: BTreeSet<SectorBasisElement>,
    pub witnesses: BTreeMap<SectorBasisElement, EWitness>,
}

pub fn split_e_r(model: &LgModel, basis: &UnprojectedBasis) -> Result<ErSplit> {
    let g = model.g()?;
    let mut cent_cache: BTreeMap<GroupElement, SymmetryGroup> = BTreeMap::new();
    let mut e = BTreeSet::new();
    let mut r = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for b in basis.all_elements() {
        let cent = cent_cache
            .entry(b.sector.clone())
            .or_insert_with(|| centralizer_g(g, &b.sector));
        match e_witness(cent, b) {
            Some(w) => {
                witnesses.insert(b.clone(), w);
                e.insert(b.clone());
            }
            None => {
                r.insert(b.clone());
            }
        }
    }
    Ok(ErSplit { e, r, witnesses })
}

// ---------------------------------------------------------------------------
// orbit enumeration
// ---------------------------------------------------------------------------

/// ⋆-orbits over a carrier set, with a log of where each generator sends each
/// orbit.
#[derive(Debug, Clone)]
pub struct OrbitSet {
    pub orbits: Vec<Vec<SectorBasisElement>>,
    /// `action_log[o][g]` is the orbit index of `min(orbit o) ⋆ generator g`.
    pub action_log: Vec<Vec<usize>>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_index_of(&self, b: &SectorBasisElement) -> Option<usize> {
        self.orbits.iter().position(|o| o.binary_search(b).is_ok())
    }
}

/// Enumerates the ⋆-orbits of the given generators on a carrier set. The
/// carrier must be closed under the generated action.
pub fn enumerate_orbits(
    generators: &[GroupElement],
    carrier: &BTreeSet<SectorBasisElement>,
) -> OrbitSet {
    let mut assigned: BTreeMap<&SectorBasisElement, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<SectorBasisElement>> = Vec::new();
    for b in carrier {
        if assigned.contains_key(b) {
            continue;
        }
        let idx = orbits.len();
        let mut orbit = BTreeSet::new();
        orbit.insert(b.clone());
        let mut work = vec![b.clone()];
        while let Some(x) = work.pop() {
            for gen in generators {
                let y = star_action(&x, gen);
                debug_assert!(carrier.contains(&y), "carrier not ⋆-closed");
                if orbit.insert(y.clone()) {
                    work.push(y);
                }
            }
        }
        let orbit: Vec<SectorBasisElement> = orbit.into_iter().collect();
        for member in &orbit {
            if let Some(stored) = carrier.get(member) {
                assigned.insert(stored, idx);
            }
        }
        orbits.push(orbit);
    }
    let action_log: Vec<Vec<usize>> = orbits
        .iter()
        .map(|o| {
            generators
                .iter()
                .map(|gen| {
                    let moved = star_action(&o[0], gen);
                    orbits
                        .iter()
                        .position(|o2| o2.binary_search(&moved).is_ok())
                        .expect("orbit image inside carrier")
                })
                .collect()
        })
        .collect();
    OrbitSet { orbits, action_log }
}

// ---------------------------------------------------------------------------
// graded dimensions
// ---------------------------------------------------------------------------

/// Dimensions of a bigraded vector space: bidegree → dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDimensions(pub BTreeMap<Bidegree, usize>);

impl GradedDimensions {
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn dim_at(&self, b: &Bidegree) -> usize {
        self.0.get(b).copied().unwrap_or(0)
    }

    /// First bidegree where the two tables disagree, scanning in the natural
    /// order of bidegrees.
    pub fn first_difference(&self, other: &GradedDimensions) -> Option<(Bidegree, usize, usize)> {
        let keys: BTreeSet<&Bidegree> = self.0.keys().chain(other.0.keys()).collect();
        for key in keys {
            let a = self.dim_at(key);
            let b = other.dim_at(key);
            if a != b {
                return Some((*key, a, b));
            }
        }
        None
    }

    pub fn format(&self) -> String {
        let mut out = String::new();
        for (bd, dim) in &self.0 {
            out.push_str(&alloc::format!("{} {}\n", bd.format(), dim));
        }
        out
    }
}

/// Dimensions of the projected state space: one per `G`-⋆ orbit in `𝖱`, at
/// the orbit's common bidegree.
pub fn projected_dimensions(model: &LgModel, which: Model) -> Result<GradedDimensions> {
    let basis = build_unprojected_basis(model)?;
    let split = split_e_r(model, &basis)?;
    let orbits = enumerate_orbits(&model.g_generators(), &split.r);
    let mut out = BTreeMap::new();
    for orbit in &orbits.orbits {
        let bd = bidegree(&model.w, &orbit[0], which);
        debug_assert!(orbit.iter().all(|b| bidegree(&model.w, b, which) == bd));
        *out.entry(bd).or_insert(0) += 1;
    }
    Ok(GradedDimensions(out))
}

/// The same dimensions computed along conjugacy classes: for each class
/// representative `g`, count the orbits of `C_G(g)` ⋆-acting on the sector
/// basis of `g` whose stabilizer scalars all vanish.
pub fn projected_dimensions_alt(model: &LgModel, which: Model) -> Result<GradedDimensions> {
    let g = model.g()?;
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut out = BTreeMap::new();
    for rep in &g.elements {
        if seen.contains(rep) {
            continue;
        }
        // conjugacy class closure
        let mut class = BTreeSet::new();
        class.insert(rep.clone());
        let mut work = vec![rep.clone()];
        while let Some(x) = work.pop() {
            for gen in &g.generators {
                let y = x.conjugate_by(gen);
                if class.insert(y.clone()) {
                    work.push(y);
                }
            }
        }
        seen.extend(class.iter().cloned());

        let cent = centralizer_g(g, rep);
        let carrier: BTreeSet<SectorBasisElement> =
            sector_basis(&model.w, rep)?.into_iter().collect();
        let cent_gens: Vec<GroupElement> = cent.elements.iter().cloned().collect();
        let orbits = enumerate_orbits(&cent_gens, &carrier);
        for orbit in &orbits.orbits {
            let b = &orbit[0];
            let clean = cent.elements.iter().all(|h| {
                let (scalar, moved) = dot_action(b, h);
                &moved != b || scalar.is_zero()
            });
            if clean {
                let bd = bidegree(&model.w, b, which);
                *out.entry(bd).or_insert(0) += 1;
            }
        }
    }
    Ok(GradedDimensions(out))
}

/// `|H ∩ ker β_σ| / |[H, σ]|`: the predicted number of H-⋆ orbits in every
/// nonempty fiber over σ, computed on lattices.
pub fn fiber_orbit_count_formula(model: &LgModel, sigma: &Permutation) -> Result<u128> {
    let cd = CycleData::new(sigma);
    let kernel = model.h.kernel_of(&cd.b_matrix())?;
    let comm = commutator_subgroup(&model.h, sigma)?;
    Ok(kernel.order()? / comm.order()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{j_w, Diagonal, LgModel, Permutation};
    use crate::poly::parse_polynomial;
    use crate::sectors::Model;
    use crate::Caps;

    /// W = x1^3 + ... + x6^3 with H = <j_W> and S = <(123),(456)>.
    fn model_72() -> LgModel {
        let w = parse_polynomial("x1^3+x2^3+x3^3+x4^3+x5^3+x6^3").unwrap();
        let jw = j_w(&w);
        LgModel::new(
            w,
            &[
                Permutation::parse("(1 2 3)", 6).unwrap(),
                Permutation::parse("(4 5 6)", 6).unwrap(),
            ],
            &[jw],
            &Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn dot_action_rescales_narrowish_sector() {
        // b_1 = [1; (123)(456) j_W] satisfies b_1.(123) = ζ^{-1} b_1
        let m = model_72();
        let sigma = Permutation::parse("(1 2 3)(4 5 6)", 6).unwrap();
        let b1 = SectorBasisElement {
            sector: GroupElement {
                perm: sigma.clone(),
                diag: j_w(&m.w),
            },
            exponents: vec![0, 0],
        };
        let h = GroupElement::from_perm(Permutation::parse("(1 2 3)", 6).unwrap());
        let (scalar, moved) = dot_action(&b1, &h);
        assert_eq!(moved, b1);
        assert_eq!(scalar, QmodZ::from_parts(2, 3));
        // identity acts trivially
        let (s0, m0) = dot_action(&b1, &GroupElement::identity(6));
        assert!(s0.is_zero());
        assert_eq!(m0, b1);
        // b_2 picks up ζ^{-2}
        let b2 = SectorBasisElement {
            sector: GroupElement {
                perm: sigma.clone(),
                diag: j_w(&m.w).scale(2),
            },
            exponents: vec![0, 0],
        };
        let (s2, _) = dot_action(&b2, &h);
        assert_eq!(s2, QmodZ::from_parts(1, 3));
    }

    #[test]
    fn volume_form_sign() {
        // W = x^3 + y^3: [dz1 dz2; id].(12) = -[dz1 dz2; id]
        let w = parse_polynomial("x1^3+x2^3").unwrap();
        let b = SectorBasisElement {
            sector: GroupElement::identity(2),
            exponents: vec![0, 0],
        };
        let h = GroupElement::from_perm(Permutation::parse("(1 2)", 2).unwrap());
        let (scalar, moved) = dot_action(&b, &h);
        assert_eq!(moved, b);
        assert_eq!(scalar, QmodZ::from_parts(1, 2));
        let _ = w;
    }

    #[test]
    fn star_is_a_right_action() {
        let m = model_72();
        let g = m.g().unwrap();
        let basis = build_unprojected_basis(&m).unwrap();
        let some: Vec<&SectorBasisElement> = basis.all_elements().step_by(17).collect();
        let elems: Vec<&GroupElement> = g.elements.iter().step_by(5).collect();
        for b in &some {
            for h1 in &elems {
                for h2 in &elems {
                    let lhs = star_action(&star_action(b, h1), h2);
                    let rhs = star_action(b, &h1.mul(h2));
                    assert_eq!(lhs, rhs);
                    // scalar cocycle: scalar(b, h1 h2) = scalar(b, h1) + scalar(b ⋆ h1, h2)
                    let (s1, b1) = dot_action(b, h1);
                    let (s2, _) = dot_action(&b1, h2);
                    let (s12, _) = dot_action(b, &h1.mul(h2));
                    assert_eq!(s12, s1 + s2);
                }
            }
            assert_eq!(&&star_action(b, &GroupElement::identity(6)), b);
        }
    }

    #[test]
    fn seventy_two_basis_and_split() {
        let m = model_72();
        let basis = build_unprojected_basis(&m).unwrap();
        // the fiber of c = [1; (0,0)] over (123)(456) has exactly the three
        // sectors σ j_W^k and they form three singleton H-⋆ orbits
        let sigma = Permutation::parse("(1 2 3)(4 5 6)", 6).unwrap();
        let key = FiberKey {
            sigma: sigma.clone(),
            alpha: Diagonal::zero(2),
            monomial: vec![0, 0],
        };
        let members = basis.fibers.get(&key).expect("fiber exists");
        assert_eq!(members.len(), 3);
        assert_eq!(fiber_orbit_count_formula(&m, &sigma).unwrap(), 3);

        let split = split_e_r(&m, &basis).unwrap();
        let b = |k: i64, exps: Vec<u64>| SectorBasisElement {
            sector: GroupElement {
                perm: sigma.clone(),
                diag: j_w(&m.w).scale(k),
            },
            exponents: exps,
        };
        // b_1 and b_2 are killed by the (123) rescaling
        assert!(split.e.contains(&b(1, vec![0, 0])));
        assert!(split.e.contains(&b(2, vec![0, 0])));
        // b_0 is killed too, but by a diagonal: j_W scales the volume form
        assert!(split.e.contains(&b(0, vec![0, 0])));
        let (wit, sc) = &split.witnesses[&b(0, vec![0, 0])];
        assert!(wit.perm.is_identity());
        assert_eq!(*sc, QmodZ::from_parts(2, 3));
        // the z1 and z2 monomials in the same sector survive
        assert!(split.r.contains(&b(0, vec![1, 0])));
        assert!(split.r.contains(&b(0, vec![0, 1])));
        assert!(split.e.contains(&b(1, vec![1, 0])));
    }

    #[test]
    fn orbit_union_law_and_bidegree_constancy() {
        let m = model_72();
        let basis = build_unprojected_basis(&m).unwrap();
        let split = split_e_r(&m, &basis).unwrap();
        let orbits = enumerate_orbits(&m.g_generators(), &split.r);
        // O_G(x) = union over σ ∈ S of O_H(x ⋆ σ)
        let h_gens: Vec<GroupElement> =
            m.h.generators
                .iter()
                .map(|d| GroupElement::from_diag(d.clone()))
                .collect();
        for orbit in orbits.orbits.iter().step_by(7) {
            let x = &orbit[0];
            let mut union: BTreeSet<SectorBasisElement> = BTreeSet::new();
            for sigma in &m.s.elements {
                let xs = star_action(x, &GroupElement::from_perm(sigma.clone()));
                let mut h_orbit = BTreeSet::new();
                h_orbit.insert(xs.clone());
                let mut work = vec![xs];
                while let Some(y) = work.pop() {
                    for hg in &h_gens {
                        let z = star_action(&y, hg);
                        if h_orbit.insert(z.clone()) {
                            work.push(z);
                        }
                    }
                }
                union.extend(h_orbit);
            }
            let full: BTreeSet<SectorBasisElement> = orbit.iter().cloned().collect();
            assert_eq!(union, full);
            // bidegrees are constant on orbits, in both models
            for which in [Model::A, Model::B] {
                let bd = bidegree(&m.w, x, which);
                for member in orbit {
                    assert_eq!(bidegree(&m.w, member, which), bd);
                }
            }
        }
    }

    #[test]
    fn trivial_group_basis_is_kreuzer_basis() {
        let w = parse_polynomial("x1^4*x2 + x2^5*x3 + x3^3*x4 + x4^2").unwrap();
        let m = LgModel::new(w.clone(), &[], &[], &Caps::default()).unwrap();
        let basis = build_unprojected_basis(&m).unwrap();
        assert_eq!(basis.len() as u128, w.milnor_number());
        let split = split_e_r(&m, &basis).unwrap();
        assert_eq!(split.r.len() as u128, w.milnor_number());
        let dims = projected_dimensions(&m, Model::B).unwrap();
        assert_eq!(dims.total() as u128, w.milnor_number());
    }

    #[test]
    fn alt_route_agrees() {
        let m = model_72();
        for which in [Model::A, Model::B] {
            let direct = projected_dimensions(&m, which).unwrap();
            let alt = projected_dimensions_alt(&m, which).unwrap();
            assert_eq!(direct, alt);
        }
    }
}
