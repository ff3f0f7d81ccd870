//! Chevalley bases with exact integer structure constants.
//!
//! The semisimple algebra is realized inside a small faithful module built by
//! the cyclic construction; root vectors for non-simple roots are defined
//! recursively through extraspecial pairs, keyed to the positive-root
//! enumeration order, which fixes all structure-constant signs
//! deterministically. The Cartan part uses an orthogonalized coroot basis so
//! that the invariant forms in use are diagonal on it.

use crate::exactlinalg::{rat, DiagonalGram, Rational, SVec, SparseMatrix};
use crate::lowering::{cyclic_module, CyclicModule};
use crate::rootdata::{CharacteristicElement, Family, RootSystem, Weight};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// How a positive root's vectors are produced from the simple generators.
#[derive(Debug, Clone)]
pub enum RootRecipe {
    /// Simple root: the generator of this index (0-based).
    Simple(usize),
    /// `e_gamma = [e_alpha, e_beta] / divisor` for the extraspecial pair
    /// `(alpha, beta)` (indices into the positive-root list), and
    /// `f_gamma = f_scale * [f_beta, f_alpha] / divisor`.
    Pair {
        alpha: usize,
        beta: usize,
        divisor: i64,
        f_scale: Rational,
    },
}

/// Construction data carried by Chevalley-built algebras so that
/// representations can replay the same normalization.
#[derive(Debug, Clone)]
pub struct ChevalleyMeta {
    pub roots: RootSystem,
    pub recipes: Vec<RootRecipe>,
    /// `t_i = sum_k t_over_coroots[i][k] h_k` (orthogonalized Cartan basis).
    pub t_over_coroots: Vec<Vec<Rational>>,
    /// Basis index of `e_gamma` / `f_gamma` per positive root, and of `t_i`.
    pub e_index: Vec<usize>,
    pub f_index: Vec<usize>,
    pub t_index: Vec<usize>,
}

/// Finite-dimensional Lie algebra with exact structure constants, a
/// weight-labeled basis, an integer degree per basis element, and diagonal
/// positive Gram data.
#[derive(Debug, Clone)]
pub struct GradedLieAlgebra {
    pub basis_labels: Vec<String>,
    /// `bracket[i][j]` is the coefficient vector of `[b_i, b_j]`.
    pub bracket: Vec<Vec<SVec>>,
    pub degree: Vec<i64>,
    pub gram: DiagonalGram,
    /// Ad-weight of each basis element in fundamental coordinates.
    pub weights: Vec<Weight>,
    pub meta: Option<ChevalleyMeta>,
}

impl GradedLieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SVec {
        &self.bracket[i][j]
    }

    /// Bracket of arbitrary coefficient vectors.
    pub fn bracket_vec(&self, x: &SVec, y: &SVec) -> SVec {
        let mut out: SVec = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let c = a * b;
                if !c.is_zero() {
                    crate::exactlinalg::svec_add_scaled(&mut out, &self.bracket[*i][*j], &c);
                }
            }
        }
        out
    }

    pub fn indices_of_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree[i] == d).collect()
    }

    pub fn degrees_present(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.degree.clone();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn min_degree(&self) -> i64 {
        *self.degree.iter().min().unwrap()
    }

    pub fn max_degree(&self) -> i64 {
        *self.degree.iter().max().unwrap()
    }

    /// Checks `[x,y] = -[y,x]` on all basis pairs.
    pub fn verify_antisymmetry(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let mut s = self.bracket[i][j].clone();
                crate::exactlinalg::svec_add_scaled(&mut s, &self.bracket[j][i], &Rational::one());
                if !s.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive Jacobi check over all basis triples; returns the first
    /// violating triple if any.
    pub fn verify_jacobi(&self) -> Result<(), (usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let bij = &self.bracket[i][j];
                for k in (j + 1)..n {
                    let mut acc = self.bracket_vec(bij, &crate::exactlinalg::svec_unit(k));
                    let t1 = self.bracket_vec(&self.bracket[j][k], &crate::exactlinalg::svec_unit(i));
                    let t2 = self.bracket_vec(&self.bracket[k][i], &crate::exactlinalg::svec_unit(j));
                    crate::exactlinalg::svec_add_scaled(&mut acc, &t1, &Rational::one());
                    crate::exactlinalg::svec_add_scaled(&mut acc, &t2, &Rational::one());
                    if !acc.is_empty() {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `[g_p, g_q] ⊆ g_{p+q}` on all graded basis pairs.
    pub fn verify_degree_additivity(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let d = self.degree[i] + self.degree[j];
                if self.bracket[i][j].iter().any(|(k, _)| self.degree[*k] != d) {
                    return false;
                }
            }
        }
        true
    }

    /// Span of `[A, B]` for basis index sets `A`, `B`, as a subspace of the
    /// full algebra coordinate space.
    pub fn bracket_span(&self, a: &[usize], b: &[usize]) -> crate::exactlinalg::Subspace {
        let mut vecs = Vec::new();
        for &i in a {
            for &j in b {
                if !self.bracket[i][j].is_empty() {
                    vecs.push(self.bracket[i][j].clone());
                }
            }
        }
        crate::exactlinalg::Subspace::from_span(self.dim(), vecs)
    }

    pub fn coordinate_subspace(&self, indices: &[usize]) -> crate::exactlinalg::Subspace {
        crate::exactlinalg::Subspace::new(
            self.dim(),
            indices.iter().map(|&i| crate::exactlinalg::svec_unit(i)).collect(),
        )
    }
}

/// Faithful fundamental weight used to bootstrap each family's matrices.
fn faithful_weight(family: Family, rank: usize) -> Weight {
    match family {
        Family::A | Family::B | Family::C | Family::G2 => Weight::fundamental(rank, 1),
        Family::F4 => Weight::fundamental(4, 4),
    }
}

/// Killing form on the coroot basis: `K(h_i, h_j) = sum_{beta in Phi}
/// <beta, h_i><beta, h_j>`.
fn coroot_killing(r: &RootSystem) -> Vec<Vec<Rational>> {
    let rank = r.rank;
    let mut k = vec![vec![Rational::zero(); rank]; rank];
    for root in &r.positive_roots {
        let pair: Vec<i64> = (0..rank)
            .map(|i| (0..rank).map(|j| r.cartan[i][j] * root[j]).sum())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                k[i][j] += rat(2 * pair[i] * pair[j]);
            }
        }
    }
    k
}

fn matrix_of_combo(mats: &[SparseMatrix], coeffs: &[Rational]) -> SparseMatrix {
    let n = mats[0].nrows();
    let mut acc = SparseMatrix::zero(n, n);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

/// Expresses `z` in the span of `cands`, or `None` if not in the span.
fn express_in_matrix_span(cands: &[&SparseMatrix], z: &SparseMatrix) -> Option<Vec<Rational>> {
    if z.is_zero() {
        return Some(vec![Rational::zero(); cands.len()]);
    }
    let (nr, nc) = (z.nrows(), z.ncols());
    let flat = |m: &SparseMatrix| -> SVec {
        let mut v: SVec = Vec::new();
        for i in 0..nr {
            for (j, x) in m.row(i) {
                v.push((i * nc + j, x.clone()));
            }
        }
        v
    };
    // Columns: candidate coefficients plus one column for z.
    let mut sys = SparseMatrix::zero(nr * nc, cands.len() + 1);
    for (c, m) in cands.iter().enumerate() {
        for (pos, x) in flat(m) {
            sys.set(pos, c, x);
        }
    }
    for (pos, x) in flat(z) {
        sys.set(pos, cands.len(), x);
    }
    let ker = crate::exactlinalg::kernel_basis(&sys);
    for v in &ker.basis {
        if let Some((_, last)) = v.iter().find(|(i, _)| *i == cands.len()) {
            let scale = -Rational::one() / last;
            let mut out = vec![Rational::zero(); cands.len()];
            for (i, c) in v {
                if *i < cands.len() {
                    out[*i] = c * &scale;
                }
            }
            return Some(out);
        }
    }
    None
}

/// Matrices of every basis element of a Chevalley algebra on a module given
/// by its generator matrices, replaying the recipes.
pub(crate) fn replay_recipes(
    meta: &ChevalleyMeta,
    e_gen: &[SparseMatrix],
    f_gen: &[SparseMatrix],
    module_weights: &[Weight],
) -> Vec<SparseMatrix> {
    let rank = meta.roots.rank;
    let npos = meta.roots.positive_roots.len();
    let dim_v = module_weights.len();
    let h_gen: Vec<SparseMatrix> = (0..rank)
        .map(|i| {
            let mut m = SparseMatrix::zero(dim_v, dim_v);
            for (k, w) in module_weights.iter().enumerate() {
                m.set(k, k, w.0[i].clone());
            }
            m
        })
        .collect();
    let mut e_mats: Vec<SparseMatrix> = Vec::with_capacity(npos);
    let mut f_mats: Vec<SparseMatrix> = Vec::with_capacity(npos);
    for recipe in &meta.recipes {
        match recipe {
            RootRecipe::Simple(i) => {
                e_mats.push(e_gen[*i].clone());
                f_mats.push(f_gen[*i].clone());
            }
            RootRecipe::Pair {
                alpha,
                beta,
                divisor,
                f_scale,
            } => {
                let inv = Rational::one() / rat(*divisor);
                e_mats.push(e_mats[*alpha].commutator(&e_mats[*beta]).scale(&inv));
                f_mats.push(
                    f_mats[*beta]
                        .commutator(&f_mats[*alpha])
                        .scale(&(inv * f_scale)),
                );
            }
        }
    }
    let t_mats: Vec<SparseMatrix> = meta
        .t_over_coroots
        .iter()
        .map(|row| matrix_of_combo(&h_gen, row))
        .collect();
    let mut out = e_mats;
    out.extend(f_mats);
    out.extend(t_mats);
    out
}

/// Builds the Chevalley-basis algebra for a root system: basis
/// `{e_gamma} ∪ {f_gamma} ∪ {t_i}` with integer structure constants,
/// `[e_gamma, f_gamma]` equal to the coroot, and sign conventions fixed by
/// extraspecial pairs. The degree map is zero until [`grade_by`] is applied.
pub fn build_chevalley(r: &RootSystem) -> GradedLieAlgebra {
    let rank = r.rank;
    let npos = r.positive_roots.len();
    let lam = faithful_weight(r.family, rank);
    let module: CyclicModule = cyclic_module(r, &lam);

    // Recipes and matrices for all root vectors, in enumeration order.
    let root_pos: BTreeMap<Vec<i64>, usize> = r
        .positive_roots
        .iter()
        .enumerate()
        .map(|(i, root)| (root.clone(), i))
        .collect();
    let h_gen: Vec<SparseMatrix> = (0..rank)
        .map(|i| {
            let mut m = SparseMatrix::zero(module.dim, module.dim);
            for (k, w) in module.weights.iter().enumerate() {
                m.set(k, k, w.0[i].clone());
            }
            m
        })
        .collect();

    let mut recipes: Vec<RootRecipe> = Vec::with_capacity(npos);
    let mut e_mats: Vec<SparseMatrix> = Vec::with_capacity(npos);
    let mut f_mats: Vec<SparseMatrix> = Vec::with_capacity(npos);
    for (gi, gamma) in r.positive_roots.iter().enumerate() {
        let height: i64 = gamma.iter().sum();
        if height == 1 {
            let i = gamma.iter().position(|&c| c == 1).unwrap();
            recipes.push(RootRecipe::Simple(i));
            e_mats.push(module.e[i].clone());
            f_mats.push(module.f[i].clone());
            continue;
        }
        // Extraspecial pair: the special pair (alpha, beta) for gamma with
        // alpha minimal in the enumeration order.
        let (ai, bi) = (0..gi)
            .find_map(|ai| {
                let alpha = &r.positive_roots[ai];
                let beta: Vec<i64> = gamma.iter().zip(alpha).map(|(g, a)| g - a).collect();
                if beta.iter().any(|&c| c < 0) {
                    return None;
                }
                root_pos.get(&beta).and_then(|&bi| (ai < bi).then_some((ai, bi)))
            })
            .expect("every non-simple positive root has an extraspecial pair");
        let alpha = &r.positive_roots[ai];
        let beta = &r.positive_roots[bi];
        // p = max k with beta - k alpha still a root.
        let mut p = 0i64;
        let mut down: Vec<i64> = beta.clone();
        loop {
            for (d, a) in down.iter_mut().zip(alpha) {
                *d -= a;
            }
            if !r.is_root(&down) {
                break;
            }
            p += 1;
        }
        let divisor = p + 1;
        let inv = Rational::one() / rat(divisor);
        let e_gamma = e_mats[ai].commutator(&e_mats[bi]).scale(&inv);
        let x = f_mats[bi].commutator(&f_mats[ai]).scale(&inv);
        // Normalize f so that [e_gamma, f_gamma] is exactly the coroot.
        let coroot = r.coroot_coords(gamma);
        let h_gamma = matrix_of_combo(&h_gen, &coroot);
        let comm = e_gamma.commutator(&x);
        let coeffs = express_in_matrix_span(&[&h_gamma], &comm)
            .expect("[e_gamma, [f_beta, f_alpha]/(p+1)] is proportional to the coroot");
        let s = coeffs[0].clone();
        assert!(!s.is_zero(), "nondegenerate pairing of e_gamma and f_gamma");
        let f_scale = Rational::one() / s;
        f_mats.push(x.scale(&f_scale));
        e_mats.push(e_gamma);
        recipes.push(RootRecipe::Pair {
            alpha: ai,
            beta: bi,
            divisor,
            f_scale,
        });
    }

    // Orthogonalized Cartan basis: Gram-Schmidt on the coroots with respect
    // to the Killing form (no normalization, so everything stays rational).
    let killing = coroot_killing(r);
    let mut t_rows: Vec<Vec<Rational>> = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut row = vec![Rational::zero(); rank];
        row[i] = Rational::one();
        for prev in t_rows.iter() {
            let kform = |a: &[Rational], b: &[Rational]| -> Rational {
                let mut acc = Rational::zero();
                for x in 0..rank {
                    for y in 0..rank {
                        if !a[x].is_zero() && !b[y].is_zero() {
                            acc += &a[x] * &b[y] * &killing[x][y];
                        }
                    }
                }
                acc
            };
            let proj = kform(&row, prev) / kform(prev, prev);
            for (rr, pp) in row.iter_mut().zip(prev) {
                *rr -= &proj * pp;
            }
        }
        t_rows.push(row);
    }
    let t_mats: Vec<SparseMatrix> = t_rows
        .iter()
        .map(|row| matrix_of_combo(&h_gen, row))
        .collect();

    // Assemble basis: e's, f's, t's.
    let dim = 2 * npos + rank;
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut mats: Vec<SparseMatrix> = Vec::with_capacity(dim);
    let fmt_root = |root: &[i64]| {
        root.iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    for (gi, gamma) in r.positive_roots.iter().enumerate() {
        labels.push(format!("e[{}]", fmt_root(gamma)));
        weights.push(r.root_to_weight(gamma));
        mats.push(e_mats[gi].clone());
    }
    for (gi, gamma) in r.positive_roots.iter().enumerate() {
        labels.push(format!("f[{}]", fmt_root(gamma)));
        weights.push(r.root_to_weight(gamma).neg());
        mats.push(f_mats[gi].clone());
    }
    for (i, t) in t_mats.iter().enumerate() {
        labels.push(format!("t{}", i + 1));
        weights.push(Weight::zero(rank));
        mats.push(t.clone());
    }

    // Structure constants by exact expansion of matrix commutators.
    let e_index: Vec<usize> = (0..npos).collect();
    let f_index: Vec<usize> = (npos..2 * npos).collect();
    let t_index: Vec<usize> = (2 * npos..dim).collect();
    let mut bracket: Vec<Vec<SVec>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in (i + 1)..dim {
            let z = mats[i].commutator(&mats[j]);
            let target = expand_bracket(
                r,
                &root_pos,
                &weights[i].add(&weights[j]),
                &z,
                &mats,
                &e_index,
                &f_index,
                &t_index,
            );
            bracket[i][j] = target.clone();
            bracket[j][i] = target
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect();
        }
    }

    let mut gram_norms = vec![Rational::one(); dim];
    for (i, row) in t_rows.iter().enumerate() {
        let mut norm = Rational::zero();
        for x in 0..rank {
            for y in 0..rank {
                if !row[x].is_zero() && !row[y].is_zero() {
                    norm += &row[x] * &row[y] * &killing[x][y];
                }
            }
        }
        gram_norms[t_index[i]] = norm;
    }

    GradedLieAlgebra {
        basis_labels: labels,
        bracket,
        degree: vec![0; dim],
        gram: DiagonalGram::new(gram_norms).expect("positive norms"),
        weights,
        meta: Some(ChevalleyMeta {
            roots: r.clone(),
            recipes,
            t_over_coroots: t_rows,
            e_index,
            f_index,
            t_index,
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn expand_bracket(
    r: &RootSystem,
    root_pos: &BTreeMap<Vec<i64>, usize>,
    target_weight: &Weight,
    z: &SparseMatrix,
    mats: &[SparseMatrix],
    e_index: &[usize],
    f_index: &[usize],
    t_index: &[usize],
) -> SVec {
    if z.is_zero() {
        return Vec::new();
    }
    if target_weight.is_zero() {
        // Cartan-valued bracket: diagonal matrix, expanded over the t basis.
        let cands: Vec<&SparseMatrix> = t_index.iter().map(|&k| &mats[k]).collect();
        let coeffs = express_in_matrix_span(&cands, z)
            .expect("zero-weight bracket lies in the Cartan subalgebra");
        return t_index
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&k, c)| (k, c))
            .collect();
    }
    // Root-valued bracket: at most one candidate root vector.
    let simple = r.weight_to_simple_coords(target_weight);
    let as_root: Option<Vec<i64>> = simple
        .iter()
        .map(|c| {
            if c.denom().is_one() {
                Some(i64::try_from(&c.to_integer()).unwrap())
            } else {
                None
            }
        })
        .collect();
    let root = as_root.expect("bracket weight lies in the root lattice");
    let neg: Vec<i64> = root.iter().map(|c| -c).collect();
    let idx = if let Some(&gi) = root_pos.get(&root) {
        e_index[gi]
    } else if let Some(&gi) = root_pos.get(&neg) {
        f_index[gi]
    } else {
        panic!("nonzero bracket with non-root weight");
    };
    let coeffs =
        express_in_matrix_span(&[&mats[idx]], z).expect("bracket proportional to root vector");
    vec![(idx, coeffs[0].clone())]
}

/// Regrades a Chevalley algebra by a characteristic element: root vectors get
/// the corresponding simple-root coefficient as degree, Cartan elements
/// degree zero. Structure constants are untouched.
pub fn grade_by(l: &GradedLieAlgebra, e: CharacteristicElement) -> GradedLieAlgebra {
    let meta = l.meta.as_ref().expect("grade_by needs Chevalley data");
    let idx = e.simple_root_index - 1;
    let mut out = l.clone();
    for (gi, gamma) in meta.roots.positive_roots.iter().enumerate() {
        out.degree[meta.e_index[gi]] = gamma[idx];
        out.degree[meta.f_index[gi]] = -gamma[idx];
    }
    for &ti in &meta.t_index {
        out.degree[ti] = 0;
    }
    out
}

/// Diagonal Gram induced by the Cartan involution: root vectors have norm 1,
/// the orthogonalized Cartan elements their Killing norms. Distinct degrees
/// are orthogonal because the data is diagonal on a degree-homogeneous basis.
pub fn cartan_involution_gram(l: &GradedLieAlgebra) -> DiagonalGram {
    let _ = l.meta.as_ref().expect("needs Chevalley data");
    l.gram.clone()
}
