//! Cyclic construction of irreducible highest-weight modules.
//!
//! Starting from a highest-weight vector, basis vectors are generated as
//! monomials `f_{i1} ... f_{ik} v` in the lowering operators. Linear
//! dependence among candidates is detected through the contravariant
//! (Shapovalov) pairing `<f_i x, y> = <x, e_i y>`, computed recursively from
//! `[e_i, f_j] = delta_ij h_i` and the diagonal `h`-action; dependence is
//! decided by exact rank of the candidate Gram matrix over Q. Only the Cartan
//! matrix enters, so the construction is independent of any choice of
//! structure-constant signs.

use crate::exactlinalg::{svec_add_scaled, SVec, SparseMatrix};
use crate::rootdata::{RootSystem, Weight};
use num_rational::BigRational as Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Result of the cyclic construction: exact matrices for the Chevalley
/// generators on the irreducible module.
pub(crate) struct CyclicModule {
    pub dim: usize,
    /// Weight (fundamental coordinates) of each basis vector.
    pub weights: Vec<Weight>,
    /// Basis vector i is `f_gen` applied to `parent`; `None` for the
    /// highest-weight vector.
    pub words: Vec<Option<(usize, usize)>>,
    /// Action of `e_i` / `f_i`, one matrix per simple index.
    pub e: Vec<SparseMatrix>,
    pub f: Vec<SparseMatrix>,
}

struct Builder {
    weights: Vec<Weight>,
    words: Vec<Option<(usize, usize)>>,
    /// Columns of the generator actions, filled level by level.
    e_cols: Vec<Vec<SVec>>,
    f_cols: Vec<Vec<SVec>>,
    /// Kept basis indices per weight, plus the Gram matrix of the
    /// contravariant form restricted to that weight space.
    space: BTreeMap<Weight, (Vec<usize>, Vec<Vec<Rational>>)>,
}

impl Builder {
    /// `<f_i u, f_j w>` for kept vectors `u`, `w`.
    fn pair(&self, i: usize, u: usize, j: usize, w: usize) -> Rational {
        // <f_i u, f_j w> = <u, f_j (e_i w)> + delta_ij <mu_w, alpha_i^vee> <u, w>
        let mut acc = Rational::zero();
        let e_i_w = &self.e_cols[i][w];
        let mut f_j_e_i_w: SVec = Vec::new();
        for (k, c) in e_i_w {
            svec_add_scaled(&mut f_j_e_i_w, &self.f_cols[j][*k], c);
        }
        let wu = &self.weights[u];
        let (indices, gram) = &self.space[wu];
        let pos_u = indices.iter().position(|&x| x == u).expect("u is kept");
        for (k, c) in &f_j_e_i_w {
            if let Some(pos_k) = indices.iter().position(|x| x == k) {
                acc += c * &gram[pos_u][pos_k];
            }
        }
        if i == j {
            let h_eig = self.weights[w].0[i].clone();
            if !h_eig.is_zero() && self.weights[u] == self.weights[w] {
                let pos_w = indices.iter().position(|&x| x == w).expect("w is kept");
                acc += h_eig * &gram[pos_u][pos_w];
            }
        }
        acc
    }

    /// `e_j` applied to the new basis vector `f_i(parent)`.
    fn e_on_new(&self, j: usize, i: usize, parent: usize) -> SVec {
        // e_j f_i parent = f_i (e_j parent) + delta_ij h_j parent
        let mut out: SVec = Vec::new();
        for (k, c) in &self.e_cols[j][parent] {
            svec_add_scaled(&mut out, &self.f_cols[i][*k], c);
        }
        if i == j {
            let h_eig = self.weights[parent].0[j].clone();
            if !h_eig.is_zero() {
                svec_add_scaled(&mut out, &vec![(parent, Rational::one())], &h_eig);
            }
        }
        out
    }
}

/// Builds the irreducible module `V(lambda)`. The caller guarantees `lambda`
/// is dominant integral.
pub(crate) fn cyclic_module(roots: &RootSystem, lambda: &Weight) -> CyclicModule {
    let rank = roots.rank;
    let simple_weights: Vec<Weight> = (0..rank)
        .map(|i| {
            let mut root = vec![0i64; rank];
            root[i] = 1;
            roots.root_to_weight(&root)
        })
        .collect();

    let mut b = Builder {
        weights: vec![lambda.clone()],
        words: vec![None],
        e_cols: vec![vec![Vec::new()]; rank],
        f_cols: vec![vec![Vec::new()]; rank],
        space: BTreeMap::new(),
    };
    b.space
        .insert(lambda.clone(), (vec![0], vec![vec![Rational::one()]]));

    let mut level: Vec<usize> = vec![0];
    while !level.is_empty() {
        // Group this level's candidates f_i(parent) by target weight.
        let mut by_weight: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
        for &parent in &level {
            for i in 0..rank {
                let mu = b.weights[parent].sub(&simple_weights[i]);
                by_weight.entry(mu).or_default().push((i, parent));
            }
        }

        let mut next_level = Vec::new();
        for (mu, cands) in by_weight {
            let n = cands.len();
            let mut gram = vec![vec![Rational::zero(); n]; n];
            for a in 0..n {
                for bb in a..n {
                    let (i, u) = cands[a];
                    let (j, w) = cands[bb];
                    let v = b.pair(i, u, j, w);
                    gram[a][bb] = v.clone();
                    gram[bb][a] = v;
                }
            }
            // Keep a maximal subset with nonsingular Gram.
            let mut kept: Vec<usize> = Vec::new();
            for c in 0..n {
                let mut trial = kept.clone();
                trial.push(c);
                let sub: Vec<Vec<Rational>> = trial
                    .iter()
                    .map(|&r| trial.iter().map(|&s| gram[r][s].clone()).collect())
                    .collect();
                if SparseMatrix::from_dense(&sub).rank() == trial.len() {
                    kept.push(c);
                }
            }
            if kept.is_empty() {
                // Every candidate is zero in the irreducible quotient.
                for &(i, u) in &cands {
                    b.f_cols[i][u] = Vec::new();
                }
                continue;
            }

            // Register the kept candidates as new basis vectors.
            let mut new_indices = Vec::with_capacity(kept.len());
            for &c in &kept {
                let (i, parent) = cands[c];
                let idx = b.weights.len();
                b.weights.push(mu.clone());
                b.words.push(Some((i, parent)));
                for g in 0..rank {
                    b.e_cols[g].push(Vec::new());
                    b.f_cols[g].push(Vec::new());
                }
                b.f_cols[i][parent] = vec![(idx, Rational::one())];
                new_indices.push(idx);
                next_level.push(idx);
            }
            let kept_gram: Vec<Vec<Rational>> = kept
                .iter()
                .map(|&r| kept.iter().map(|&s| gram[r][s].clone()).collect())
                .collect();

            // Expand the dependent candidates over the kept ones by solving
            // against the (nonsingular) kept Gram.
            let inv = invert_dense(&kept_gram);
            for c in 0..n {
                if kept.contains(&c) {
                    continue;
                }
                let (i, u) = cands[c];
                let rhs: Vec<Rational> = kept.iter().map(|&r| gram[c][r].clone()).collect();
                let mut col: SVec = Vec::new();
                for (r, &idx) in new_indices.iter().enumerate() {
                    let mut coeff = Rational::zero();
                    for (s, rv) in rhs.iter().enumerate() {
                        coeff += &inv[r][s] * rv;
                    }
                    if !coeff.is_zero() {
                        col.push((idx, coeff));
                    }
                }
                col.sort_by_key(|(k, _)| *k);
                b.f_cols[i][u] = col;
            }
            b.space.insert(mu.clone(), (new_indices.clone(), kept_gram));

            // Raising action on the new vectors.
            for &idx in &new_indices {
                let (i, parent) = b.words[idx].unwrap();
                for j in 0..rank {
                    let col = b.e_on_new(j, i, parent);
                    b.e_cols[j][idx] = col;
                }
            }
        }
        level = next_level;
    }

    let dim = b.weights.len();
    let to_matrix = |cols: &Vec<SVec>| -> SparseMatrix {
        let mut m = SparseMatrix::zero(dim, dim);
        for (col, entries) in cols.iter().enumerate() {
            for (row, v) in entries {
                m.set(*row, col, v.clone());
            }
        }
        m
    };
    CyclicModule {
        dim,
        weights: b.weights,
        words: b.words,
        e: b.e_cols.iter().map(to_matrix).collect(),
        f: b.f_cols.iter().map(to_matrix).collect(),
    }
}

/// Gauss-Jordan inverse of a small dense nonsingular matrix.
fn invert_dense(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pr = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("nonsingular");
        a.swap(col, pr);
        inv.swap(col, pr);
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
