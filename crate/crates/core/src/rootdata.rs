//! Root systems of types A, B, C, F4 and G2.
//!
//! Cartan matrix convention: `cartan[i][j] = <alpha_j, alpha_i^vee>`. Roots are
//! stored as integer vectors in the simple-root basis; weights as rational
//! vectors in the fundamental-weight basis. Conversion between the two goes
//! through the Cartan matrix only. Simple roots also carry an explicit
//! realization in an orthogonal coordinate space (the classical `e_i`
//! coordinates), from which all inner products are computed exactly.

use crate::exactlinalg::{frac, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    A,
    B,
    C,
    F4,
    G2,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("inadmissible family/rank: {0}{1}")]
    Inadmissible(Family, usize),
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("weight is not dominant integral")]
    NotDominant,
    #[error("simple root index {0} out of range 1..={1}")]
    BadIndex(usize, usize),
}

/// Weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    /// The i-th fundamental weight (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![Rational::zero(); rank];
        w[i - 1] = Rational::one();
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0
            .iter()
            .all(|c| !c.is_negative() && c.denom().is_one())
    }
}

/// Characteristic element `E_{alpha_i}`: the Cartan element pairing to 1 with
/// the i-th simple root and to 0 with the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacteristicElement {
    /// 1-based simple root index.
    pub simple_root_index: usize,
}

impl CharacteristicElement {
    pub fn new(i: usize) -> Self {
        CharacteristicElement {
            simple_root_index: i,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, by height then lex.
    pub positive_roots: Vec<Vec<i64>>,
    /// Simple roots in the orthogonal coordinate realization.
    simple_orth: Vec<Vec<Rational>>,
    /// Inverse Cartan matrix; column i holds the simple-root coordinates of
    /// the i-th fundamental weight.
    inv_cartan: Vec<Vec<Rational>>,
}

fn orth_simple_roots(family: Family, rank: usize) -> Result<Vec<Vec<Rational>>, RootError> {
    let chain = |dim: usize, m: usize| -> Vec<Vec<Rational>> {
        (0..m)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = rat(1);
                v[i + 1] = rat(-1);
                v
            })
            .collect()
    };
    match (family, rank) {
        (Family::A, k) if k >= 1 => Ok(chain(k + 1, k)),
        (Family::B, m) if m >= 2 => {
            let mut roots = chain(m, m - 1);
            let mut last = vec![Rational::zero(); m];
            last[m - 1] = rat(1);
            roots.push(last);
            Ok(roots)
        }
        (Family::C, m) if m >= 2 => {
            let mut roots = chain(m, m - 1);
            let mut last = vec![Rational::zero(); m];
            last[m - 1] = rat(2);
            roots.push(last);
            Ok(roots)
        }
        (Family::F4, 4) => Ok(vec![
            vec![rat(0), rat(1), rat(-1), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(-1)],
            vec![rat(0), rat(0), rat(0), rat(1)],
            vec![frac(1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2)],
        ]),
        (Family::G2, 2) => Ok(vec![
            vec![rat(1), rat(-1), rat(0)],
            vec![rat(-2), rat(1), rat(1)],
        ]),
        _ => Err(RootError::Inadmissible(family, rank)),
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact inverse of a small rational matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("matrix is invertible");
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &f * &a[col][j];
                    a[r][j] -= x;
                    let y = &f * &inv[col][j];
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

/// Builds the root system with Cartan matrix and the full set of positive
/// roots, enumerated by closure under addition of simple roots with
/// root-string validity checks.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, RootError> {
    let simple_orth = orth_simple_roots(family, rank)?;
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        let norm = dot(&simple_orth[i], &simple_orth[i]);
        for j in 0..rank {
            let entry = rat(2) * dot(&simple_orth[j], &simple_orth[i]) / &norm;
            assert!(entry.denom().is_one(), "Cartan entries are integers");
            let e: BigInt = entry.to_integer();
            cartan[i][j] = i64::try_from(&e).expect("small Cartan entry");
        }
    }

    // Closure under simple-root addition, height by height. A candidate
    // r + alpha_i is a root iff its alpha_i-string satisfies
    // q = p - <r, alpha_i^vee> >= 1, where p counts the consecutive roots
    // r - k alpha_i below r.
    let mut positive: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::BTreeSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut frontier = positive.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..rank {
                let mut cand = r.clone();
                cand[i] += 1;
                if known.contains(&cand) {
                    continue;
                }
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * r[j]).sum();
                let mut p = 0i64;
                let mut below = r.clone();
                loop {
                    below[i] -= 1;
                    if below.iter().all(|&c| c == 0) || !known.contains(&below) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    known.insert(cand.clone());
                    next.push(cand);
                }
            }
        }
        positive.extend(next.iter().cloned());
        frontier = next;
    }
    positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));

    let cartan_rat: Vec<Vec<Rational>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let inv_cartan = invert(&cartan_rat);

    Ok(RootSystem {
        family,
        rank,
        cartan,
        positive_roots: positive,
        simple_orth,
        inv_cartan,
    })
}

impl RootSystem {
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_positive_root(&self, root: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == root)
    }

    pub fn is_root(&self, root: &[i64]) -> bool {
        let neg: Vec<i64> = root.iter().map(|c| -c).collect();
        self.is_positive_root(root) || self.is_positive_root(&neg)
    }

    /// Simple-root coordinates -> orthogonal coordinates.
    pub fn root_orth(&self, root: &[i64]) -> Vec<Rational> {
        let dim = self.simple_orth[0].len();
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in root.iter().enumerate() {
            for (k, x) in self.simple_orth[i].iter().enumerate() {
                v[k] += rat(*c) * x;
            }
        }
        v
    }

    /// Inner product of two roots given in simple-root coordinates.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> Rational {
        dot(&self.root_orth(a), &self.root_orth(b))
    }

    /// Fundamental-weight coordinates of a root: `w_i = <root, alpha_i^vee>`.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| rat((0..self.rank).map(|j| self.cartan[i][j] * root[j]).sum()))
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_simple_coords(&self, w: &Weight) -> Vec<Rational> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| &self.inv_cartan[i][j] * &w.0[j])
                    .sum()
            })
            .collect()
    }

    /// Value of the weight on a characteristic element: the coefficient of
    /// the chosen simple root in the weight's simple-root expansion.
    pub fn weight_eigenvalue(&self, w: &Weight, e: CharacteristicElement) -> Rational {
        self.weight_to_simple_coords(w)[e.simple_root_index - 1].clone()
    }

    /// Inner product of weights in fundamental coordinates.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Rational {
        let xa = self.weight_to_simple_coords(a);
        let xb = self.weight_to_simple_coords(b);
        let mut acc = Rational::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if !xa[i].is_zero() && !xb[j].is_zero() {
                    acc += &xa[i] * &xb[j] * dot(&self.simple_orth[i], &self.simple_orth[j]);
                }
            }
        }
        acc
    }

    /// Coordinates of the coroot `gamma^vee` in the simple-coroot basis.
    pub fn coroot_coords(&self, root: &[i64]) -> Vec<Rational> {
        let norm = self.root_inner(root, root);
        (0..self.rank)
            .map(|i| {
                rat(root[i]) * dot(&self.simple_orth[i], &self.simple_orth[i]) / &norm
            })
            .collect()
    }

    /// Half the sum of positive roots, in fundamental coordinates: all ones.
    pub fn rho(&self) -> Weight {
        Weight(vec![Rational::one(); self.rank])
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }
}

/// Degree of a root under the gradation induced by a characteristic element:
/// the integer coefficient of the chosen simple root.
pub fn root_degree(
    r: &RootSystem,
    root: &[i64],
    e: CharacteristicElement,
) -> Result<i64, RootError> {
    if e.simple_root_index == 0 || e.simple_root_index > r.rank {
        return Err(RootError::BadIndex(e.simple_root_index, r.rank));
    }
    if !r.is_root(root) {
        return Err(RootError::NotARoot);
    }
    Ok(root[e.simple_root_index - 1])
}

/// Simple reflection on fundamental-weight coordinates:
/// `sigma_i(w) = w - <w, alpha_i^vee> alpha_i`.
pub fn simple_reflection(r: &RootSystem, i: usize, w: &Weight) -> Weight {
    let c = w.0[i - 1].clone();
    Weight(
        (0..r.rank)
            .map(|k| &w.0[k] - &c * rat(r.cartan[k][i - 1]))
            .collect(),
    )
}

/// Dimension of the irreducible module `V(lambda)` by the Weyl product
/// formula over positive roots.
pub fn weyl_dimension(r: &RootSystem, lambda: &Weight) -> Result<u64, RootError> {
    if !lambda.is_dominant_integral() {
        return Err(RootError::NotDominant);
    }
    let rho = r.rho();
    let lr = lambda.add(&rho);
    let mut num = Rational::one();
    let mut den = Rational::one();
    for root in &r.positive_roots {
        let wr = r.root_to_weight(root);
        num *= r.weight_inner(&lr, &wr);
        den *= r.weight_inner(&rho, &wr);
    }
    let d = num / den;
    assert!(d.denom().is_one(), "Weyl dimension is an integer");
    Ok(u64::try_from(&d.to_integer()).expect("dimension fits in u64"))
}

/// Full weight multiplicity table of `V(lambda)` by the Freudenthal
/// recursion. Keys are weights in fundamental coordinates.
pub fn freudenthal_multiplicities(
    r: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, u64>, RootError> {
    if !lambda.is_dominant_integral() {
        return Err(RootError::NotDominant);
    }
    let rho = r.rho();
    let lam_rho = lambda.add(&rho);
    let lam_norm = r.weight_inner(&lam_rho, &lam_rho);

    // Weights indexed by the drop lambda - mu in simple-root coordinates,
    // processed by increasing height so every mu + k alpha is already known.
    let mut mults: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mults.insert(vec![0; r.rank], 1);
    let mut by_height: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    by_height.insert(0, vec![vec![0; r.rank]]);
    let simple_weights: Vec<Weight> = (0..r.rank)
        .map(|i| {
            let mut root = vec![0i64; r.rank];
            root[i] = 1;
            r.root_to_weight(&root)
        })
        .collect();

    let weight_of_drop = |drop: &[i64]| -> Weight {
        let mut w = lambda.clone();
        for (i, c) in drop.iter().enumerate() {
            for _ in 0..*c {
                w = w.sub(&simple_weights[i]);
            }
        }
        w
    };

    let mut height = 0i64;
    loop {
        let Some(previous) = by_height.get(&height).cloned() else {
            break;
        };
        let mut next: Vec<Vec<i64>> = Vec::new();
        for drop in previous {
            if mults.get(&drop).copied().unwrap_or(0) == 0 {
                continue;
            }
            for i in 0..r.rank {
                let mut cand = drop.clone();
                cand[i] += 1;
                if mults.contains_key(&cand) {
                    continue;
                }
                let mu = weight_of_drop(&cand);
                let mu_rho = mu.add(&rho);
                let denom = &lam_norm - r.weight_inner(&mu_rho, &mu_rho);
                let mult = if denom.is_zero() {
                    0
                } else {
                    let mut rhs = Rational::zero();
                    for root in &r.positive_roots {
                        let alpha_w = r.root_to_weight(root);
                        let mut up = cand.clone();
                        loop {
                            let mut ok = true;
                            for (j, c) in root.iter().enumerate() {
                                up[j] -= c;
                                if up[j] < 0 {
                                    ok = false;
                                }
                            }
                            if !ok {
                                break;
                            }
                            let m_up = mults.get(&up).copied().unwrap_or(0);
                            if m_up > 0 {
                                let mu_up = weight_of_drop(&up);
                                rhs += rat(m_up as i64) * r.weight_inner(&mu_up, &alpha_w);
                            }
                        }
                    }
                    let m = rat(2) * rhs / denom;
                    assert!(m.denom().is_one(), "Freudenthal multiplicity is integral");
                    u64::try_from(&m.to_integer()).expect("multiplicity fits")
                };
                mults.insert(cand.clone(), mult);
                if mult > 0 {
                    next.push(cand);
                }
            }
        }
        if !next.is_empty() {
            by_height.insert(height + 1, next);
        }
        height += 1;
        if !by_height.contains_key(&height) {
            break;
        }
    }

    let mut out = BTreeMap::new();
    for (drop, m) in mults {
        if m > 0 {
            out.insert(weight_of_drop(&drop), m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_has_one_positive_root() {
        let r = build_root_system(Family::A, 1).unwrap();
        assert_eq!(r.cartan, vec![vec![2]]);
        assert_eq!(r.positive_roots, vec![vec![1]]);
    }

    #[test]
    fn inadmissible_inputs_rejected() {
        assert!(build_root_system(Family::F4, 3).is_err());
        assert!(build_root_system(Family::G2, 3).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(build_root_system(Family::C, 1).is_err());
        assert!(build_root_system(Family::A, 0).is_err());
    }

    /// Independent enumeration from the classical coordinate descriptions.
    fn classical_positive_roots(family: Family, rank: usize) -> Vec<Vec<Rational>> {
        let unit = |dim: usize, i: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = rat(1);
            v
        };
        let sub = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            a.iter().zip(b).map(|(x, y)| x - y).collect()
        };
        let add = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            a.iter().zip(b).map(|(x, y)| x + y).collect()
        };
        let mut out = Vec::new();
        match family {
            Family::A => {
                for i in 0..rank + 1 {
                    for j in i + 1..rank + 1 {
                        out.push(sub(&unit(rank + 1, i), &unit(rank + 1, j)));
                    }
                }
            }
            Family::B => {
                for i in 0..rank {
                    for j in i + 1..rank {
                        out.push(sub(&unit(rank, i), &unit(rank, j)));
                        out.push(add(&unit(rank, i), &unit(rank, j)));
                    }
                    out.push(unit(rank, i));
                }
            }
            Family::C => {
                for i in 0..rank {
                    for j in i + 1..rank {
                        out.push(sub(&unit(rank, i), &unit(rank, j)));
                        out.push(add(&unit(rank, i), &unit(rank, j)));
                    }
                    out.push(unit(rank, i).iter().map(|x| x * rat(2)).collect());
                }
            }
            Family::F4 => {
                for i in 0..4 {
                    for j in i + 1..4 {
                        out.push(sub(&unit(4, i), &unit(4, j)));
                        out.push(add(&unit(4, i), &unit(4, j)));
                    }
                    out.push(unit(4, i));
                }
                for s2 in [1i64, -1] {
                    for s3 in [1i64, -1] {
                        for s4 in [1i64, -1] {
                            out.push(vec![frac(1, 2), frac(s2, 2), frac(s3, 2), frac(s4, 2)]);
                        }
                    }
                }
            }
            Family::G2 => {
                // Long and short roots in the standard 3-coordinate model.
                let a1 = vec![rat(1), rat(-1), rat(0)];
                let a2 = vec![rat(-2), rat(1), rat(1)];
                let combos: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
                for (x, y) in combos {
                    out.push(
                        a1.iter()
                            .zip(&a2)
                            .map(|(a, b)| rat(x) * a + rat(y) * b)
                            .collect(),
                    );
                }
            }
        }
        out
    }

    fn assert_matches_classical(family: Family, rank: usize) {
        let r = build_root_system(family, rank).unwrap();
        let mut ours: Vec<Vec<Rational>> = r
            .positive_roots
            .iter()
            .map(|root| r.root_orth(root))
            .collect();
        let mut classical = classical_positive_roots(family, rank);
        ours.sort();
        classical.sort();
        assert_eq!(ours, classical);
    }

    #[test]
    fn g2_enumeration_matches_classical() {
        let r = build_root_system(Family::G2, 2).unwrap();
        assert_eq!(r.num_positive_roots(), 6);
        assert_matches_classical(Family::G2, 2);
    }

    #[test]
    fn b3_enumeration_matches_classical() {
        let r = build_root_system(Family::B, 3).unwrap();
        assert_eq!(r.num_positive_roots(), 9);
        assert_matches_classical(Family::B, 3);
    }

    #[test]
    fn more_enumerations_match_classical() {
        assert_matches_classical(Family::A, 3);
        assert_matches_classical(Family::B, 4);
        assert_matches_classical(Family::C, 2);
        assert_matches_classical(Family::C, 4);
        assert_matches_classical(Family::F4, 4);
    }

    #[test]
    fn root_degree_reads_simple_coefficient() {
        let r = build_root_system(Family::G2, 2).unwrap();
        let e2 = CharacteristicElement::new(2);
        assert_eq!(root_degree(&r, &[0, 1], e2).unwrap(), 1);
        assert_eq!(root_degree(&r, &[3, 2], e2).unwrap(), 2);
        assert_eq!(root_degree(&r, &[3, 1], e2).unwrap(), 1);
        assert_eq!(root_degree(&r, &[1, 0], CharacteristicElement::new(1)).unwrap(), 1);
        assert!(root_degree(&r, &[1, 1000], e2).is_err());
    }

    #[test]
    fn root_degree_is_additive() {
        let r = build_root_system(Family::F4, 4).unwrap();
        let e = CharacteristicElement::new(2);
        for a in &r.positive_roots {
            for b in &r.positive_roots {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if r.is_root(&sum) {
                    assert_eq!(
                        root_degree(&r, &sum, e).unwrap(),
                        root_degree(&r, a, e).unwrap() + root_degree(&r, b, e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn reflection_fixes_other_fundamental_weights() {
        let r = build_root_system(Family::B, 3).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let pj = Weight::fundamental(3, j);
                let s = simple_reflection(&r, i, &pj);
                if i != j {
                    assert_eq!(s, pj);
                } else {
                    assert_ne!(s, pj);
                }
            }
        }
    }

    #[test]
    fn reflection_is_an_involution() {
        let r = build_root_system(Family::G2, 2).unwrap();
        let w = Weight(vec![frac(3, 2), frac(-5, 7)]);
        for i in 1..=2 {
            assert_eq!(simple_reflection(&r, i, &simple_reflection(&r, i, &w)), w);
        }
    }

    #[test]
    fn a1_reflection_negates_the_fundamental_weight() {
        let r = build_root_system(Family::A, 1).unwrap();
        let p1 = Weight::fundamental(1, 1);
        assert_eq!(simple_reflection(&r, 1, &p1), p1.neg());
    }

    #[test]
    fn reflection_permutes_positive_roots() {
        for (fam, rank) in [(Family::B, 3), (Family::C, 3), (Family::G2, 2), (Family::F4, 4)] {
            let r = build_root_system(fam, rank).unwrap();
            for i in 0..rank {
                let mut images: Vec<Vec<i64>> = Vec::new();
                for root in &r.positive_roots {
                    let mut img = root.clone();
                    let pairing: i64 = (0..rank).map(|j| r.cartan[i][j] * root[j]).sum();
                    img[i] -= pairing;
                    images.push(img);
                }
                let alpha_i: Vec<i64> = (0..rank).map(|j| i64::from(j == i)).collect();
                for (root, img) in r.positive_roots.iter().zip(&images) {
                    if root == &alpha_i {
                        let neg: Vec<i64> = img.iter().map(|c| -c).collect();
                        assert_eq!(&neg, root);
                    } else {
                        assert!(r.is_positive_root(img));
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let g2 = build_root_system(Family::G2, 2).unwrap();
        assert_eq!(weyl_dimension(&g2, &Weight::zero(2)).unwrap(), 1);
        assert_eq!(weyl_dimension(&g2, &Weight::fundamental(2, 1)).unwrap(), 7);
        assert_eq!(weyl_dimension(&g2, &Weight::fundamental(2, 2)).unwrap(), 14);
        let b3 = build_root_system(Family::B, 3).unwrap();
        assert_eq!(weyl_dimension(&b3, &Weight::fundamental(3, 3)).unwrap(), 8);
        assert_eq!(weyl_dimension(&b3, &Weight::fundamental(3, 1)).unwrap(), 7);
        let c2 = build_root_system(Family::C, 2).unwrap();
        assert_eq!(weyl_dimension(&c2, &Weight::fundamental(2, 1)).unwrap(), 4);
        assert_eq!(weyl_dimension(&c2, &Weight::fundamental(2, 2)).unwrap(), 5);
        let f4 = build_root_system(Family::F4, 4).unwrap();
        assert_eq!(weyl_dimension(&f4, &Weight::fundamental(4, 4)).unwrap(), 26);
        assert_eq!(weyl_dimension(&f4, &Weight::fundamental(4, 1)).unwrap(), 52);
        assert!(weyl_dimension(&f4, &Weight(vec![rat(-1), rat(0), rat(0), rat(0)])).is_err());
    }

    #[test]
    fn freudenthal_trivial_module() {
        let r = build_root_system(Family::C, 2).unwrap();
        let t = freudenthal_multiplicities(&r, &Weight::zero(2)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[&Weight::zero(2)], 1);
    }

    #[test]
    fn freudenthal_c2_standard() {
        let r = build_root_system(Family::C, 2).unwrap();
        let t = freudenthal_multiplicities(&r, &Weight::fundamental(2, 1)).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.values().all(|&m| m == 1));
        assert_eq!(t.values().sum::<u64>(), 4);
    }

    #[test]
    fn freudenthal_g2_seven_dimensional() {
        let r = build_root_system(Family::G2, 2).unwrap();
        let t = freudenthal_multiplicities(&r, &Weight::fundamental(2, 1)).unwrap();
        assert_eq!(t[&Weight::zero(2)], 1);
        assert_eq!(t.values().sum::<u64>(), 7);
    }

    #[test]
    fn freudenthal_totals_match_weyl_dimension() {
        for (fam, rank, lam) in [
            (Family::B, 3, Weight::fundamental(3, 3)),
            (Family::C, 3, Weight::fundamental(3, 1)),
            (Family::G2, 2, Weight::fundamental(2, 2)),
            (Family::F4, 4, Weight::fundamental(4, 4)),
            (Family::B, 4, Weight::fundamental(4, 4)),
        ] {
            let r = build_root_system(fam, rank).unwrap();
            let t = freudenthal_multiplicities(&r, &lam).unwrap();
            assert_eq!(t.values().sum::<u64>(), weyl_dimension(&r, &lam).unwrap());
        }
    }

    #[test]
    fn positive_root_count_matches_algebra_dimension() {
        // 2 * |Phi+| + rank is the dimension used downstream.
        let g2 = build_root_system(Family::G2, 2).unwrap();
        assert_eq!(2 * g2.num_positive_roots() + 2, 14);
        let f4 = build_root_system(Family::F4, 4).unwrap();
        assert_eq!(2 * f4.num_positive_roots() + 4, 52);
    }
}
