//! Shared generators for randomized suites: invertible polynomials of bounded
//! size, random symmetries, and (W, S ⋉ H) models with controlled group
//! orders. Everything is seeded and deterministic.

use lgorb::groups::{
    diag_generators, enumerate_sigma, maximal_diag_group, DiagGroup, Diagonal, LgModel, Permutation,
};
use lgorb::poly::{InvertiblePolynomial, Monomial};
use lgorb::Caps;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random invertible polynomial with at most `max_vars` variables and
/// small exponents; variable labels are shuffled half the time.
pub fn gen_invertible(r: &mut ChaCha8Rng, max_vars: usize) -> InvertiblePolynomial {
    assert!(max_vars >= 1);
    let target = r.gen_range(1..=max_vars);
    // (lead exponent list, successor shift) per atom
    let mut atoms: Vec<Vec<u64>> = Vec::new();
    let mut kinds: Vec<u8> = Vec::new();
    let mut used = 0usize;
    while used < target {
        let remaining = target - used;
        let kind = r.gen_range(0..3u8);
        match kind {
            0 => {
                atoms.push(vec![r.gen_range(2..=5)]);
                kinds.push(0);
                used += 1;
            }
            1 if remaining >= 2 => {
                let len = r.gen_range(2..=remaining.min(3));
                atoms.push((0..len).map(|_| r.gen_range(2..=4)).collect());
                kinds.push(1);
                used += len;
            }
            2 if remaining >= 2 => {
                let len = r.gen_range(2..=remaining.min(3));
                atoms.push((0..len).map(|_| r.gen_range(2..=3)).collect());
                kinds.push(2);
                used += len;
            }
            _ => {
                atoms.push(vec![r.gen_range(2..=5)]);
                kinds.push(0);
                used += 1;
            }
        }
    }
    let n = used;
    // optional variable relabeling
    let mut labels: Vec<usize> = (0..n).collect();
    if r.gen_bool(0.5) {
        labels.shuffle(r);
    }
    let mut raw: Vec<Monomial> = Vec::with_capacity(n);
    let mut base = 0usize;
    for (exps, kind) in atoms.iter().zip(&kinds) {
        let len = exps.len();
        for (k, &a) in exps.iter().enumerate() {
            let mut e = vec![0u64; n];
            e[labels[base + k]] = a;
            match kind {
                0 => {}
                1 => {
                    // chain: x_k^a x_{k+1} except the last
                    if k + 1 < len {
                        e[labels[base + k + 1]] += 1;
                    }
                }
                _ => {
                    // loop: wraps around
                    e[labels[base + (k + 1) % len]] += 1;
                }
            }
            raw.push(Monomial::new(e));
        }
        base += len;
    }
    InvertiblePolynomial::from_monomials(n, raw).expect("generated polynomial is invertible")
}

/// A random permutation symmetry of W.
pub fn random_sigma(r: &mut ChaCha8Rng, w: &InvertiblePolynomial) -> Permutation {
    let caps = Caps::default();
    let sigma = enumerate_sigma(w, &caps).unwrap();
    let all: Vec<Permutation> = sigma.elements.iter().cloned().collect();
    all[r.gen_range(0..all.len())].clone()
}

/// A random diagonal symmetry of W (an integer combination of the ρ_i).
pub fn random_diag(r: &mut ChaCha8Rng, w: &InvertiblePolynomial) -> Diagonal {
    let rho = diag_generators(w);
    let mut acc = Diagonal::zero(w.n_vars());
    for g in rho {
        acc = acc.add(&g.scale(r.gen_range(0..12i64)));
    }
    acc
}

/// A random subgroup of the diagonal symmetries, capped in order.
pub fn random_diag_subgroup(
    r: &mut ChaCha8Rng,
    w: &InvertiblePolynomial,
    max_order: u128,
) -> DiagGroup {
    for _ in 0..32 {
        let mut gens = vec![random_diag(r, w)];
        if r.gen_bool(0.4) {
            gens.push(random_diag(r, w));
        }
        let h = DiagGroup::from_generators(w.n_vars(), &gens).unwrap();
        if h.order().unwrap() <= max_order {
            return h;
        }
    }
    DiagGroup::trivial(w.n_vars())
}

/// A random model (W, ⟨σ⟩ ⋉ H) with H normalized by σ via symmetrization,
/// bounded so the unprojected basis stays small.
pub fn random_model(r: &mut ChaCha8Rng, max_vars: usize, max_h: u128) -> LgModel {
    let caps = Caps::default();
    loop {
        let w = gen_invertible(r, max_vars);
        if w.milnor_number() > 90 {
            continue;
        }
        let sigma = random_sigma(r, &w);
        // symmetrized generator keeps σ in the normalizer
        let lam = random_diag(r, &w);
        let mut gens = Vec::new();
        let mut cur = lam.clone();
        for _ in 0..sigma.order() {
            gens.push(cur.clone());
            cur = cur.act(&sigma);
        }
        let h = DiagGroup::from_generators(w.n_vars(), &gens).unwrap();
        if h.order().unwrap() > max_h {
            continue;
        }
        let s_gens = if sigma.is_identity() {
            vec![]
        } else {
            vec![sigma]
        };
        if let Ok(model) = LgModel::new(w, &s_gens, &h.generators, &caps) {
            return model;
        }
    }
}

/// A (W, S ⋉ H) with S cyclic of the given odd prime order: p equal atoms
/// cycled by σ, plus optionally a couple of extra fixed Fermat variables;
/// H is a symmetrized random subgroup.
pub fn prime_family_model(r: &mut ChaCha8Rng, p: usize) -> LgModel {
    let caps = Caps::default();
    loop {
        // atom: Fermat x^a (one variable) or a 2-loop; keep orders small
        let use_loop = p <= 5 && r.gen_bool(0.3);
        let a: u64 = if p == 7 { 2 } else { r.gen_range(2..=3) };
        let atom_len = if use_loop { 2 } else { 1 };
        let extra = if p <= 5 && r.gen_bool(0.4) { 1 } else { 0 };
        let n = p * atom_len + extra;
        let mut raw = Vec::with_capacity(n);
        for b in 0..p {
            for k in 0..atom_len {
                let mut e = vec![0u64; n];
                e[b * atom_len + k] = a;
                if use_loop {
                    e[b * atom_len + (k + 1) % atom_len] += 1;
                }
                raw.push(Monomial::new(e));
            }
        }
        for j in 0..extra {
            let mut e = vec![0u64; n];
            e[p * atom_len + j] = r.gen_range(2..=4);
            raw.push(Monomial::new(e));
        }
        let w = InvertiblePolynomial::from_monomials(n, raw).unwrap();
        if w.milnor_number() > 300 {
            continue;
        }
        // σ cycles the p blocks
        let images: Vec<usize> = (0..n)
            .map(|i| {
                if i < p * atom_len {
                    let (b, k) = (i / atom_len, i % atom_len);
                    ((b + 1) % p) * atom_len + k
                } else {
                    i
                }
            })
            .collect();
        let sigma = Permutation::from_images(images).unwrap();
        assert!(w.is_permutation_symmetry(&sigma));
        // symmetrized H
        let lam = random_diag(r, &w);
        let mut gens = Vec::new();
        let mut cur = lam;
        for _ in 0..p {
            gens.push(cur.clone());
            cur = cur.act(&sigma);
        }
        let h = DiagGroup::from_generators(w.n_vars(), &gens).unwrap();
        let full = maximal_diag_group(&w).unwrap();
        let ht_order = full.order().unwrap() / h.order().unwrap();
        if h.order().unwrap() > 64 || ht_order > 800 {
            continue;
        }
        if let Ok(model) = LgModel::new(w, &[sigma], &h.generators, &caps) {
            return model;
        }
    }
}
