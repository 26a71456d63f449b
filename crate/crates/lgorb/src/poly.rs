//! Invertible polynomials: parsing, classification into Fermat/chain/loop
//! atoms, exponent matrices, weights, Milnor numbers, Kreuzer monomial bases,
//! BHK transposes, and the cycle-collapsed polynomial `W^σ`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{CycleData, Permutation};
use crate::linalg::QMatrix;
use crate::rat::Rational;

/// A monomial as an exponent vector over the ambient variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Degree under a weight vector, Σ e_i q_i.
    pub fn weighted_degree(&self, q: &[Rational]) -> Rational {
        self.exps
            .iter()
            .zip(q)
            .fold(Rational::zero(), |acc, (&e, w)| {
                acc + Rational::from_integer(e as i64) * *w
            })
    }

    /// Renders in the input grammar with 1-based variables, e.g. `x1^4*x2`.
    pub fn format(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(alloc::format!("{var}{}", i + 1)),
                _ => parts.push(alloc::format!("{var}{}^{e}", i + 1)),
            }
        }
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AtomKind {
    Fermat,
    Chain,
    Loop,
}

/// One atomic summand of an invertible polynomial. `vars` lists the variable
/// indices in atom order (chain head first; loops rotated to start at their
/// smallest variable) and `exps[k]` is the exponent of `vars[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub kind: AtomKind,
    pub vars: Vec<usize>,
    pub exps: Vec<u64>,
}

/// An invertible polynomial in Kreuzer-Skarke normal form: monomial `i` is
/// `x_i^a` or `x_i^a x_j`. Weights and the inverse exponent matrix are
/// computed at construction.
#[derive(Debug, Clone)]
pub struct InvertiblePolynomial {
    n: usize,
    monomials: Vec<Monomial>,
    atoms: Vec<Atom>,
    weights: Vec<Rational>,
    a_inv: QMatrix,
}

impl PartialEq for InvertiblePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.monomials == other.monomials
    }
}

impl Eq for InvertiblePolynomial {}

impl InvertiblePolynomial {
    /// Validates a raw monomial list, reorders it to the normal form, and
    /// classifies the atomic decomposition.
    pub fn from_monomials(n: usize, raw: Vec<Monomial>) -> Result<Self> {
        if n == 0 || raw.is_empty() {
            return Err(Error::NotInvertible(String::from("empty polynomial")));
        }
        if raw.len() != n {
            return Err(Error::NotInvertible(alloc::format!(
                "{} monomials in {} variables",
                raw.len(),
                n
            )));
        }
        // determine the lead variable of each monomial
        let mut by_lead: Vec<Option<(Monomial, Option<usize>)>> = vec![None; n];
        for m in raw {
            if m.exps.len() != n {
                return Err(Error::NotInvertible(String::from(
                    "monomial arity mismatch",
                )));
            }
            let sup = m.support();
            let (lead, succ) = match sup.len() {
                1 => {
                    let i = sup[0];
                    if m.exps[i] < 2 {
                        return Err(Error::NotInvertible(alloc::format!(
                            "monomial {} has exponent < 2",
                            m.format("x")
                        )));
                    }
                    (i, None)
                }
                2 => {
                    let (i, j) = (sup[0], sup[1]);
                    match (m.exps[i], m.exps[j]) {
                        (a, 1) if a >= 2 => (i, Some(j)),
                        (1, b) if b >= 2 => (j, Some(i)),
                        _ => {
                            return Err(Error::NotInvertible(alloc::format!(
                                "monomial {} is not of the form x_i^a*x_j",
                                m.format("x")
                            )))
                        }
                    }
                }
                _ => {
                    return Err(Error::NotInvertible(alloc::format!(
                        "monomial {} has more than two variables",
                        m.format("x")
                    )))
                }
            };
            if by_lead[lead].is_some() {
                return Err(Error::NotInvertible(alloc::format!(
                    "two monomials lead with x{}",
                    lead + 1
                )));
            }
            by_lead[lead] = Some((m, succ));
        }
        let mut monomials = Vec::with_capacity(n);
        let mut succ: Vec<Option<usize>> = Vec::with_capacity(n);
        for slot in by_lead {
            match slot {
                Some((m, s)) => {
                    monomials.push(m);
                    succ.push(s);
                }
                None => {
                    return Err(Error::NotInvertible(String::from(
                        "no ordering puts one monomial on each lead variable",
                    )))
                }
            }
        }
        let atoms = classify_atoms(n, &monomials, &succ)?;
        let a = exponent_matrix_of(n, &monomials);
        let a_inv = a.inverse().ok_or(Error::DegenerateWeights)?;
        let ones = vec![Rational::one(); n];
        let weights = a_inv.mul_vec(&ones);
        // quasihomogeneity: every monomial has weighted degree 1
        for m in &monomials {
            debug_assert_eq!(m.weighted_degree(&weights), Rational::one());
        }
        Ok(InvertiblePolynomial {
            n,
            monomials,
            atoms,
            weights,
            a_inv,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The square matrix whose row `i` is the exponent vector of monomial `i`.
    pub fn exponent_matrix(&self) -> QMatrix {
        exponent_matrix_of(self.n, &self.monomials)
    }

    pub fn exponent_matrix_inverse(&self) -> &QMatrix {
        &self.a_inv
    }

    /// Weights `q = A_W^{-1}·(1,…,1)`.
    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `μ = Π(1/q_i − 1)`, the dimension of the Milnor ring.
    pub fn milnor_number(&self) -> u128 {
        let mut acc = Rational::one();
        for q in &self.weights {
            acc *= q.recip() - Rational::one();
        }
        debug_assert!(acc.denom().is_one() && acc.numer().is_positive());
        *acc.numer() as u128
    }

    /// The Kreuzer monomial basis of the Milnor ring, in lexicographic order.
    pub fn kreuzer_basis(&self) -> Vec<Monomial> {
        let mut parts: Vec<Vec<Vec<u64>>> = Vec::new();
        for atom in &self.atoms {
            parts.push(atom_basis(self.n, atom));
        }
        let mut acc: Vec<Vec<u64>> = vec![vec![0; self.n]];
        for part in parts {
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for base in &acc {
                for p in &part {
                    let mut v = base.clone();
                    for (i, &e) in p.iter().enumerate() {
                        v[i] += e;
                    }
                    next.push(v);
                }
            }
            acc = next;
        }
        let mut out: Vec<Monomial> = acc.into_iter().map(Monomial::new).collect();
        out.sort();
        debug_assert_eq!(out.len() as u128, self.milnor_number());
        out
    }

    /// BHK transpose: the invertible polynomial with exponent matrix `A_W^T`.
    pub fn transpose(&self) -> InvertiblePolynomial {
        let a = self.exponent_matrix();
        let raw: Vec<Monomial> = (0..self.n)
            .map(|i| {
                Monomial::new(
                    (0..self.n)
                        .map(|j| {
                            let r = a[(j, i)];
                            debug_assert!(r.denom().is_one());
                            *r.numer() as u64
                        })
                        .collect(),
                )
            })
            .collect();
        InvertiblePolynomial::from_monomials(self.n, raw)
            .expect("transpose of an invertible polynomial is invertible")
    }

    /// `W^σ`: for each cycle of σ, the monomial of the cycle's smallest
    /// variable with every variable x_i collapsed to the cycle coordinate
    /// z_{r(i)}. Requires σ to be a symmetry of W.
    pub fn reduce_w_sigma(&self, sigma: &Permutation) -> Result<InvertiblePolynomial> {
        if !self.is_permutation_symmetry(sigma) {
            return Err(Error::NotASymmetry);
        }
        let cd = CycleData::new(sigma);
        let k = cd.cycle_count();
        let raw: Vec<Monomial> = (0..k)
            .map(|c| {
                let mut exps = vec![0u64; k];
                for (i, &e) in self.monomials[cd.s(c)].exps.iter().enumerate() {
                    exps[cd.r(i)] += e;
                }
                Monomial::new(exps)
            })
            .collect();
        InvertiblePolynomial::from_monomials(k, raw)
    }

    /// Is σ a symmetry of W? Checked via `A_{σ(i),σ(j)} = A_{ij}`, which is
    /// the matrix identity `[σ]A_W = A_W[σ]`.
    pub fn is_permutation_symmetry(&self, sigma: &Permutation) -> bool {
        if sigma.n() != self.n {
            return false;
        }
        let a = self.exponent_matrix();
        for i in 0..self.n {
            for j in 0..self.n {
                if a[(i, j)] != a[(sigma.image(i), sigma.image(j))] {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction of W to the coordinate subspace spanned by `keep`
    /// (sorted ambient indices). Returns the restricted polynomial over
    /// re-indexed variables z_1..z_m matching the order of `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<InvertiblePolynomial> {
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let mut raw = Vec::new();
        for m in &self.monomials {
            let sup = m.support();
            if sup.iter().all(|i| keep_set.contains(i)) {
                let exps: Vec<u64> = keep.iter().map(|&i| m.exps[i]).collect();
                raw.push(Monomial::new(exps));
            }
        }
        InvertiblePolynomial::from_monomials(keep.len(), raw)
    }

    /// Renders lead variable first, `x_i^a*x_j`, matching the normal form.
    pub fn format(&self) -> String {
        let parts: Vec<String> = self
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut factors: Vec<String> = Vec::new();
                let lead = m.exps[i];
                factors.push(if lead == 1 {
                    alloc::format!("x{}", i + 1)
                } else {
                    alloc::format!("x{}^{}", i + 1, lead)
                });
                for (j, &e) in m.exps.iter().enumerate() {
                    if j != i && e > 0 {
                        factors.push(if e == 1 {
                            alloc::format!("x{}", j + 1)
                        } else {
                            alloc::format!("x{}^{e}", j + 1)
                        });
                    }
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

impl core::fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.format())
    }
}

fn exponent_matrix_of(n: usize, monomials: &[Monomial]) -> QMatrix {
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| {
            m.exps
                .iter()
                .map(|&e| Rational::from_integer(e as i64))
                .collect()
        })
        .collect();
    let _ = n;
    QMatrix::from_rows(rows)
}

fn classify_atoms(n: usize, monomials: &[Monomial], succ: &[Option<usize>]) -> Result<Vec<Atom>> {
    let mut in_deg = vec![0usize; n];
    for s in succ.iter().flatten() {
        in_deg[*s] += 1;
        if in_deg[*s] > 1 {
            return Err(Error::NotInvertible(alloc::format!(
                "variable x{} appears as tail of two monomials",
                *s + 1
            )));
        }
    }
    let mut visited = vec![false; n];
    let mut atoms = Vec::new();
    // paths: start at in-degree-zero nodes
    for start in 0..n {
        if in_deg[start] != 0 || visited[start] {
            continue;
        }
        let mut vars = vec![start];
        visited[start] = true;
        let mut cur = start;
        while let Some(nxt) = succ[cur] {
            if visited[nxt] {
                return Err(Error::NotInvertible(String::from("chain runs into a loop")));
            }
            visited[nxt] = true;
            vars.push(nxt);
            cur = nxt;
        }
        let exps: Vec<u64> = vars.iter().map(|&v| monomials[v].exps[v]).collect();
        let kind = if vars.len() == 1 {
            AtomKind::Fermat
        } else {
            AtomKind::Chain
        };
        atoms.push(Atom { kind, vars, exps });
    }
    // remaining nodes form loops
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut vars = vec![start];
        visited[start] = true;
        let mut cur = succ[start].expect("unvisited node in a loop has a successor");
        while cur != start {
            visited[cur] = true;
            vars.push(cur);
            cur = succ[cur].expect("loop node has a successor");
        }
        if vars.len() < 2 {
            return Err(Error::NotInvertible(String::from("degenerate loop")));
        }
        let exps: Vec<u64> = vars.iter().map(|&v| monomials[v].exps[v]).collect();
        atoms.push(Atom {
            kind: AtomKind::Loop,
            vars,
            exps,
        });
    }
    atoms.sort_by_key(|a| a.vars[0]);
    Ok(atoms)
}

/// The monomial basis of a single atom's Milnor ring, as exponent vectors over
/// the ambient `n` variables.
fn atom_basis(n: usize, atom: &Atom) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    match atom.kind {
        AtomKind::Fermat => {
            let v = atom.vars[0];
            for r in 0..=(atom.exps[0] - 2) {
                let mut e = vec![0u64; n];
                e[v] = r;
                out.push(e);
            }
        }
        AtomKind::Loop => {
            let mut stack = vec![(0usize, vec![0u64; n])];
            while let Some((k, e)) = stack.pop() {
                if k == atom.vars.len() {
                    out.push(e);
                    continue;
                }
                for r in 0..=(atom.exps[k] - 1) {
                    let mut e2 = e.clone();
                    e2[atom.vars[k]] = r;
                    stack.push((k + 1, e2));
                }
            }
        }
        AtomKind::Chain => {
            let m = atom.vars.len();
            let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
            for k in 0..=(m / 2) {
                // pattern: (a_1-1, 0, a_3-1, 0, ..., a_{2k-1}-1, 0, b_{2k+1}, ..., b_m)
                // with b_{2k+1} ≤ a_{2k+1}-2 and b_i ≤ a_i-1 beyond that
                let mut base = vec![0u64; n];
                for t in 0..k {
                    base[atom.vars[2 * t]] = atom.exps[2 * t] - 1;
                }
                let free: Vec<(usize, u64)> = (2 * k..m)
                    .map(|idx| {
                        let hi = if idx == 2 * k {
                            atom.exps[idx].saturating_sub(2)
                        } else {
                            atom.exps[idx] - 1
                        };
                        (atom.vars[idx], hi)
                    })
                    .collect();
                let mut stack = vec![(0usize, base)];
                while let Some((pos, e)) = stack.pop() {
                    if pos == free.len() {
                        seen.insert(e);
                        continue;
                    }
                    let (v, hi) = free[pos];
                    for r in 0..=hi {
                        let mut e2 = e.clone();
                        e2[v] = r;
                        stack.push((pos + 1, e2));
                    }
                }
            }
            out.extend(seen);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

/// Parses the polynomial grammar
/// `term := VAR('^'INT)?('*'VAR('^'INT)?)? ; poly := term ('+' term)*` with
/// variables `x<k>` (1-based) and optional unit coefficients.
pub fn parse_polynomial(text: &str) -> Result<InvertiblePolynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse(String::from("empty polynomial")));
    }
    let mut terms: Vec<Vec<(usize, u64)>> = Vec::new();
    for term in compact.split('+') {
        if term.is_empty() {
            return Err(Error::Parse(String::from("empty term")));
        }
        let mut factors: Vec<(usize, u64)> = Vec::new();
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(alloc::format!("empty factor in {term:?}")));
            }
            if let Ok(c) = factor.parse::<u64>() {
                // a bare integer coefficient; only 1 is meaningful here
                if c != 1 {
                    return Err(Error::Parse(alloc::format!(
                        "coefficient {c} is not allowed (scale to 1)"
                    )));
                }
                continue;
            }
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(alloc::format!("expected variable, got {factor:?}")))?;
            let (idx_s, exp_s) = match rest.split_once('^') {
                Some((a, b)) => (a, Some(b)),
                None => (rest, None),
            };
            let idx: usize = idx_s
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad variable index in {factor:?}")))?;
            if idx == 0 {
                return Err(Error::Parse(String::from("variable indices are 1-based")));
            }
            let exp: u64 = match exp_s {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad exponent in {factor:?}")))?,
                None => 1,
            };
            if exp == 0 {
                return Err(Error::Parse(String::from("zero exponents are not allowed")));
            }
            factors.push((idx - 1, exp));
        }
        if factors.is_empty() {
            return Err(Error::Parse(String::from("term with no variables")));
        }
        terms.push(factors);
    }
    let n = 1 + terms
        .iter()
        .flat_map(|t| t.iter().map(|&(i, _)| i))
        .max()
        .unwrap();
    let mut used = vec![false; n];
    let mut raw = Vec::with_capacity(terms.len());
    for t in terms {
        let mut exps = vec![0u64; n];
        for (i, e) in t {
            exps[i] += e;
            used[i] = true;
        }
        raw.push(Monomial::new(exps));
    }
    if let Some(gap) = used.iter().position(|u| !u) {
        return Err(Error::NotInvertible(alloc::format!(
            "variable x{} never appears",
            gap + 1
        )));
    }
    InvertiblePolynomial::from_monomials(n, raw)
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn parse_and_classify() {
        let w = fermat_4446();
        assert_eq!(w.atoms().len(), 4);
        assert!(w.atoms().iter().all(|a| a.kind == AtomKind::Fermat));
        assert_eq!(
            w.atoms().iter().map(|a| a.exps[0]).collect::<Vec<_>>(),
            vec![4, 4, 4, 6]
        );

        let l = loop6();
        assert_eq!(l.atoms().len(), 1);
        assert_eq!(l.atoms()[0].kind, AtomKind::Loop);
        assert_eq!(l.atoms()[0].vars.len(), 6);

        assert!(matches!(
            parse_polynomial("x1^2+x1*x2"),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(parse_polynomial(""), Err(Error::Parse(_))));
        assert!(matches!(
            parse_polynomial("x1^2+x3^2"),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn exponent_matrices() {
        let w = chain_4532();
        let a = w.exponent_matrix();
        let expect = QMatrix::from_int_rows(&[
            vec![4, 1, 0, 0],
            vec![0, 5, 1, 0],
            vec![0, 0, 3, 1],
            vec![0, 0, 0, 2],
        ]);
        assert_eq!(a, expect);
        let f = fermat_4446();
        let af = f.exponent_matrix();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { [4, 4, 4, 6][i] } else { 0 };
                assert_eq!(af[(i, j)], rat(want, 1));
            }
        }
    }

    #[test]
    fn weights_examples() {
        assert_eq!(
            chain_4532().weights(),
            &[rat(5, 24), rat(1, 6), rat(1, 6), rat(1, 2)]
        );
        assert_eq!(
            fermat_4446().weights(),
            &[rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 6)]
        );
        assert!(loop6().weights().iter().all(|q| *q == rat(1, 4)));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(chain_4532().milnor_number(), 95);
        assert_eq!(parse_polynomial("x1^2").unwrap().milnor_number(), 1);
        assert_eq!(fermat_4446().milnor_number(), 135);
    }

    #[test]
    fn kreuzer_basis_chain() {
        let w = chain_4532();
        let basis = w.kreuzer_basis();
        assert_eq!(basis.len(), 95);
        assert!(basis.contains(&Monomial::new(vec![3, 0, 2, 0])));
        assert!(!basis.contains(&Monomial::new(vec![3, 0, 2, 1])));
        // the k = 1 family requires b3 ≤ 1 when b4 varies
        assert!(basis.contains(&Monomial::new(vec![3, 0, 1, 1])));
        assert!(!basis.contains(&Monomial::new(vec![3, 0, 2, 1])));
    }

    #[test]
    fn kreuzer_basis_small() {
        let w = parse_polynomial("x1^4").unwrap();
        let b = w.kreuzer_basis();
        assert_eq!(b.len(), 3);
        let l = parse_polynomial("x1^2*x2+x2^2*x1").unwrap();
        let lb = l.kreuzer_basis();
        assert_eq!(lb.len(), 4);
        assert_eq!(l.milnor_number(), 4);
        // odd chain: x^2y + y^2z + z^2 has Milnor number 5, and the
        // (a1-1, 0, a3-1) pattern is not a basis member
        let c = parse_polynomial("x1^2*x2+x2^2*x3+x3^2").unwrap();
        assert_eq!(c.milnor_number(), 5);
        let cb = c.kreuzer_basis();
        assert_eq!(cb.len(), 5);
        assert!(!cb.contains(&Monomial::new(vec![1, 0, 1])));
    }

    #[test]
    fn transpose_examples() {
        let f = fermat_4446();
        assert_eq!(f.transpose(), f);
        let l = loop6();
        let lt = l.transpose();
        assert_eq!(
            lt.format(),
            "x1^3*x6 + x2^3*x1 + x3^3*x2 + x4^3*x3 + x5^3*x4 + x6^3*x5"
        );
        assert_eq!(lt.transpose(), l);
        let c = parse_polynomial("x1^2*x2+x2^3").unwrap();
        // x1^2 + x1*x2^3, printed lead-first
        assert_eq!(c.transpose().format(), "x1^2 + x2^3*x1");
        assert_eq!(c.transpose(), parse_polynomial("x1^2 + x1*x2^3").unwrap());
        assert_eq!(c.transpose().transpose(), c);
    }

    #[test]
    fn w_sigma_examples() {
        let f = fermat_4446();
        let sigma = Permutation::parse("(1 2 3)", 4).unwrap();
        let ws = f.reduce_w_sigma(&sigma).unwrap();
        assert_eq!(ws.format(), "x1^4 + x2^6");

        let id = Permutation::identity(4);
        let wid = f.reduce_w_sigma(&id).unwrap();
        assert_eq!(wid, f);

        let l = loop6();
        let s = Permutation::parse("(1 4)(2 5)(3 6)", 6).unwrap();
        let ls = l.reduce_w_sigma(&s).unwrap();
        assert_eq!(ls.format(), "x1^3*x2 + x2^3*x3 + x3^3*x1");

        let bad = Permutation::parse("(1 4)", 4).unwrap();
        assert_eq!(f.reduce_w_sigma(&bad), Err(Error::NotASymmetry));
    }

    #[test]
    fn permutation_symmetries() {
        let f = fermat_4446();
        assert!(f.is_permutation_symmetry(&Permutation::parse("(1 2 3)", 4).unwrap()));
        assert!(!f.is_permutation_symmetry(&Permutation::parse("(1 4)", 4).unwrap()));
        let l = loop6();
        assert!(l.is_permutation_symmetry(&Permutation::parse("(1 4)(2 5)(3 6)", 6).unwrap()));
    }

    #[test]
    fn restriction() {
        let f = fermat_4446();
        let r = f.restrict(&[0, 3]).unwrap();
        assert_eq!(r.format(), "x1^4 + x2^6");
        // chains restrict to their tails
        let c = chain_4532();
        let tail = c.restrict(&[2, 3]).unwrap();
        assert_eq!(tail.format(), "x1^3*x2 + x2^2");
    }
}
