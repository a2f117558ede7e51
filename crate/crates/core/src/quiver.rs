//! Finite-dimensional representations of the 4-vertex quiver with doubled
//! arrows and its relation-free 3-vertex subquiver.
//!
//! The full quiver carries two relations obtained by substituting the
//! arrow maps into the transposed relation matrix of the algebra; the
//! subquiver on vertices `-3, -2, -1` is hereditary. Induction `Ind`
//! (left adjoint to restriction `Res`) rebuilds vertex 0 as the cokernel
//! of the substituted relation matrix, and `Res . Ind = Id` always while
//! `Ind . Res = Id` exactly on representations perpendicular to the
//! vertex-0 simple.

use crate::field::{Field, PrimeField};
use crate::matrix::{Mat, MatError};
use crate::ncalgebra::{ma_substituted, AlgebraError, AlgebraKind, AlgebraSpec};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum QuiverError {
    #[error("arrow matrix shape does not match the dimension vector at level {level}")]
    ArrowShape { level: usize },
    #[error("representations live over different quivers or dimensions are incompatible")]
    Incompatible,
    #[error("stability enumeration budget exceeded (total dim {dim} > 7 or p {p} > 5)")]
    StabilityBudget { dim: usize, p: u64 },
    #[error("operation requires a type-A algebra")]
    NotTypeA,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// Representation of the full quiver: spaces at vertices `-3..0` and arrow
/// pairs `X_i, Y_i` for `i = -3, -2, -1` (index 0 is the level `-3`
/// arrow pair).
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep<F: Field> {
    dims: [usize; 4],
    x: [Mat<F>; 3],
    y: [Mat<F>; 3],
}

/// Representation of the hereditary subquiver on vertices `-3, -2, -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep0<F: Field> {
    dims: [usize; 3],
    x: [Mat<F>; 2],
    y: [Mat<F>; 2],
}

impl<F: Field> QuiverRep<F> {
    pub fn new(
        f: &F,
        dims: [usize; 4],
        x: [Mat<F>; 3],
        y: [Mat<F>; 3],
    ) -> Result<Self, QuiverError> {
        let _ = f;
        for lvl in 0..3 {
            if x[lvl].rows() != dims[lvl + 1]
                || x[lvl].cols() != dims[lvl]
                || y[lvl].rows() != dims[lvl + 1]
                || y[lvl].cols() != dims[lvl]
            {
                return Err(QuiverError::ArrowShape { level: lvl });
            }
        }
        Ok(QuiverRep { dims, x, y })
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }
    pub fn x(&self, level: usize) -> &Mat<F> {
        &self.x[level]
    }
    pub fn y(&self, level: usize) -> &Mat<F> {
        &self.y[level]
    }

    /// The simple representation concentrated at one vertex.
    pub fn simple(f: &F, vertex: usize) -> Self {
        let mut dims = [0usize; 4];
        dims[vertex] = 1;
        let x = [
            Mat::zero(f, dims[1], dims[0]),
            Mat::zero(f, dims[2], dims[1]),
            Mat::zero(f, dims[3], dims[2]),
        ];
        let y = x.clone();
        QuiverRep { dims, x, y }
    }
}

impl<F: Field> QuiverRep0<F> {
    pub fn new(
        f: &F,
        dims: [usize; 3],
        x: [Mat<F>; 2],
        y: [Mat<F>; 2],
    ) -> Result<Self, QuiverError> {
        let _ = f;
        for lvl in 0..2 {
            if x[lvl].rows() != dims[lvl + 1]
                || x[lvl].cols() != dims[lvl]
                || y[lvl].rows() != dims[lvl + 1]
                || y[lvl].cols() != dims[lvl]
            {
                return Err(QuiverError::ArrowShape { level: lvl });
            }
        }
        Ok(QuiverRep0 { dims, x, y })
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }
    pub fn x(&self, level: usize) -> &Mat<F> {
        &self.x[level]
    }
    pub fn y(&self, level: usize) -> &Mat<F> {
        &self.y[level]
    }

    pub fn simple(f: &F, vertex: usize) -> Self {
        let mut dims = [0usize; 3];
        dims[vertex] = 1;
        let x = [
            Mat::zero(f, dims[1], dims[0]),
            Mat::zero(f, dims[2], dims[1]),
        ];
        let y = x.clone();
        QuiverRep0 { dims, x, y }
    }
}

/// Both relation blocks vanish: `[X_-1 Y_-1] . B = 0` for the substituted
/// relation matrix `B`. Vacuously true when vertex 0 is zero, since the
/// relations are paths ending there.
pub fn check_relations<F: Field>(
    rep: &QuiverRep<F>,
    spec: &AlgebraSpec,
    f: &F,
) -> Result<bool, QuiverError> {
    let b = ma_substituted(spec, f, &rep.x[0], &rep.y[0], &rep.x[1], &rep.y[1])?;
    let top = Mat::block2x2(
        f,
        [
            [&rep.x[2], &rep.y[2]],
            [&Mat::zero(f, 0, rep.dims[2]), &Mat::zero(f, 0, rep.dims[2])],
        ],
    )?;
    Ok(top.mul(f, &b)?.is_zero(f))
}

/// Dimension of the space of morphisms commuting with every arrow.
pub fn hom_dim<F: Field>(f: &F, rep1: &QuiverRep<F>, rep2: &QuiverRep<F>) -> usize {
    let arrows: Vec<(usize, usize, &Mat<F>, &Mat<F>)> = (0..3)
        .flat_map(|lvl| {
            [
                (lvl, lvl + 1, &rep1.x[lvl], &rep2.x[lvl]),
                (lvl, lvl + 1, &rep1.y[lvl], &rep2.y[lvl]),
            ]
        })
        .collect();
    intertwiner_kernel_dim(f, &rep1.dims, &rep2.dims, &arrows)
}

/// Dimension of the morphism space between subquiver representations.
pub fn hom_dim0<F: Field>(f: &F, rep1: &QuiverRep0<F>, rep2: &QuiverRep0<F>) -> usize {
    let arrows: Vec<(usize, usize, &Mat<F>, &Mat<F>)> = (0..2)
        .flat_map(|lvl| {
            [
                (lvl, lvl + 1, &rep1.x[lvl], &rep2.x[lvl]),
                (lvl, lvl + 1, &rep1.y[lvl], &rep2.y[lvl]),
            ]
        })
        .collect();
    intertwiner_kernel_dim(f, &rep1.dims, &rep2.dims, &arrows)
}

/// Solve the intertwiner system: unknown blocks `phi_v: V1_v -> V2_v`, one
/// equation block `M2 . phi_src - phi_tgt . M1 = 0` per arrow.
fn intertwiner_kernel_dim<F: Field>(
    f: &F,
    dims1: &[usize],
    dims2: &[usize],
    arrows: &[(usize, usize, &Mat<F>, &Mat<F>)],
) -> usize {
    let nv = dims1.len();
    let block_sizes: Vec<usize> = (0..nv).map(|v| dims1[v] * dims2[v]).collect();
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let unknowns: usize = block_sizes.iter().sum();
    let eqn_count: usize = arrows
        .iter()
        .map(|&(src, tgt, _, _)| dims1[src] * dims2[tgt])
        .collect::<Vec<_>>()
        .iter()
        .sum();
    let mut sys = Mat::zero(f, eqn_count, unknowns);
    let mut row = 0;
    // phi_v entry (i, j): i over V2_v coords, j over V1_v coords, stored
    // row-major at offsets[v] + i*dims1[v] + j.
    for &(src, tgt, m1, m2) in arrows {
        for i in 0..dims2[tgt] {
            for j in 0..dims1[src] {
                // (M2 phi_src)_{ij} = sum_k M2[i,k] phi_src[k,j]
                for k in 0..dims2[src] {
                    let col = offsets[src] + k * dims1[src] + j;
                    let v = f.add(sys.get(row, col), m2.get(i, k));
                    sys.set(row, col, v);
                }
                // -(phi_tgt M1)_{ij} = -sum_k phi_tgt[i,k] M1[k,j]
                for k in 0..dims1[tgt] {
                    let col = offsets[tgt] + i * dims1[tgt] + k;
                    let v = f.sub(sys.get(row, col), m1.get(k, j));
                    sys.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    unknowns - sys.rank(f)
}

/// Euler-form matrix of the full quiver in the basis of vertex simples.
pub const CHI_GAMMA: [[i64; 4]; 4] = [[1, -2, 0, 2], [0, 1, -2, 0], [0, 0, 1, -2], [0, 0, 0, 1]];

/// Euler-form matrix of the hereditary subquiver.
pub const CHI_GAMMA0: [[i64; 3]; 3] = [[1, -2, 0], [0, 1, -2], [0, 0, 1]];

pub fn chi_gamma(d1: [i64; 4], d2: [i64; 4]) -> i64 {
    let mut acc = 0;
    for i in 0..4 {
        for j in 0..4 {
            acc += d1[i] * CHI_GAMMA[i][j] * d2[j];
        }
    }
    acc
}

pub fn chi_gamma0(d1: [i64; 3], d2: [i64; 3]) -> i64 {
    let mut acc = 0;
    for i in 0..3 {
        for j in 0..3 {
            acc += d1[i] * CHI_GAMMA0[i][j] * d2[j];
        }
    }
    acc
}

/// `dim Ext^1` over the hereditary subquiver: `hom - chi`.
pub fn ext1_dim_gamma0<F: Field>(f: &F, rep1: &QuiverRep0<F>, rep2: &QuiverRep0<F>) -> i64 {
    let d1 = rep1.dims.map(|d| d as i64);
    let d2 = rep2.dims.map(|d| d as i64);
    hom_dim0(f, rep1, rep2) as i64 - chi_gamma0(d1, d2)
}

/// Drop vertex 0.
pub fn res<F: Field>(rep: &QuiverRep<F>) -> QuiverRep0<F> {
    QuiverRep0 {
        dims: [rep.dims[0], rep.dims[1], rep.dims[2]],
        x: [rep.x[0].clone(), rep.x[1].clone()],
        y: [rep.y[0].clone(), rep.y[1].clone()],
    }
}

/// Left adjoint of [`res`]: vertex 0 is the cokernel of the substituted
/// relation matrix `B: V_-3^2 -> V_-1^2`, with the two components of the
/// quotient projection as the new arrow pair. The cokernel basis is the
/// echelon-canonical complement of the column space.
pub fn ind<F: Field>(
    f: &F,
    rep0: &QuiverRep0<F>,
    spec: &AlgebraSpec,
) -> Result<QuiverRep<F>, QuiverError> {
    let b = ma_substituted(spec, f, &rep0.x[0], &rep0.y[0], &rep0.x[1], &rep0.y[1])?;
    let n1 = rep0.dims[2];
    // Row space of B^t = column space of B.
    let (rref, pivots) = b.transpose().rref(f);
    let free: Vec<usize> = (0..2 * n1).filter(|c| !pivots.contains(c)).collect();
    let v0 = free.len();
    // Projection matrix: e_j maps to its class in the quotient basis
    // indexed by the free coordinates.
    let mut proj = Mat::zero(f, v0, 2 * n1);
    for j in 0..2 * n1 {
        let mut vec: Vec<F::Elem> = (0..2 * n1)
            .map(|i| if i == j { f.one() } else { f.zero() })
            .collect();
        for (row, &pc) in pivots.iter().enumerate() {
            let coef = vec[pc].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (i, entry) in vec.iter_mut().enumerate() {
                *entry = f.sub(entry, &f.mul(&coef, rref.get(row, i)));
            }
        }
        for (out_row, &fc) in free.iter().enumerate() {
            proj.set(out_row, j, vec[fc].clone());
        }
    }
    let x1 = Mat::from_fn(v0, n1, |i, j| proj.get(i, j).clone());
    let y1 = Mat::from_fn(v0, n1, |i, j| proj.get(i, n1 + j).clone());
    QuiverRep::new(
        f,
        [rep0.dims[0], rep0.dims[1], rep0.dims[2], v0],
        [rep0.x[0].clone(), rep0.x[1].clone(), x1],
        [rep0.y[0].clone(), rep0.y[1].clone(), y1],
    )
}

/// Decide whether a dimension vector has the shape
/// `(n_o, n_e, n_o, n_e - 1)` with `(n_e, n_o)` in `N` minus the origin.
fn c_shape(dims: [usize; 4]) -> Option<(u64, u64)> {
    let [d3, d2, d1, d0] = dims;
    if d3 != d1 || d0 + 1 != d2 {
        return None;
    }
    let (n_e, n_o) = (d2 as u64, d3 as u64);
    if (n_e, n_o) == (0, 0) {
        return None;
    }
    let pair = crate::castelnuovo::InvariantPair::new(n_e, n_o);
    pair.in_n().then_some((n_e, n_o))
}

/// Membership in the enveloping-algebra description of the moduli of
/// normalized line bundles on the full quiver: dimension vector
/// `(n_o, n_e, n_o, n_e-1)`, the relations hold, `Z_-3 = Y_-2 X_-3 -
/// X_-2 Y_-3` is invertible and `Z_-2 = Y_-1 X_-2 - X_-1 Y_-2` is
/// surjective.
pub fn membership_c_hc<F: Field>(f: &F, rep: &QuiverRep<F>) -> Result<bool, QuiverError> {
    if c_shape(rep.dims).is_none() {
        return Ok(false);
    }
    let spec = AlgebraSpec::enveloping_hc();
    if !check_relations(rep, &spec, f)? {
        return Ok(false);
    }
    let z3 = rep.y[1]
        .mul(f, &rep.x[0])?
        .sub(f, &rep.x[1].mul(f, &rep.y[0])?)?;
    if z3.inverse(f).is_none() {
        return Ok(false);
    }
    let z2 = rep.y[2]
        .mul(f, &rep.x[1])?
        .sub(f, &rep.x[2].mul(f, &rep.y[1])?)?;
    Ok(z2.rank(f) == rep.dims[3])
}

/// Membership in the subquiver description: dimensions `(n_o, n_e, n_o)`,
/// `Z = Y'X - X'Y` invertible, and
/// `rank(Y Z^-1 X' - X Z^-1 Y' - I) <= 1` (the normalized form of the
/// rank-one condition; `X, Y` are the level `-3` arrows).
pub fn membership_d_hc<F: Field>(f: &F, rep0: &QuiverRep0<F>) -> Result<bool, QuiverError> {
    let [d3, _d2, d1] = rep0.dims;
    if d3 != d1 {
        return Ok(false);
    }
    let x = &rep0.x[0];
    let y = &rep0.y[0];
    let xp = &rep0.x[1];
    let yp = &rep0.y[1];
    let z = yp.mul(f, x)?.sub(f, &xp.mul(f, y)?)?;
    let Some(z_inv) = z.inverse(f) else {
        return Ok(false);
    };
    let n_e = rep0.dims[1];
    let w = y
        .mul(f, &z_inv)?
        .mul(f, xp)?
        .sub(f, &x.mul(f, &z_inv)?.mul(f, yp)?)?
        .sub(f, &Mat::identity(f, n_e))?;
    Ok(w.rank(f) <= 1)
}

/// The generic type-A rank condition:
/// `rank(substituted relation matrix) <= 2 n_o - (n_e - 1)`.
pub fn rank_condition_type_a<F: Field>(
    f: &F,
    rep0: &QuiverRep0<F>,
    spec: &AlgebraSpec,
) -> Result<bool, QuiverError> {
    if !matches!(spec.kind(), AlgebraKind::TypeA { .. }) {
        return Err(QuiverError::NotTypeA);
    }
    let b = ma_substituted(spec, f, &rep0.x[0], &rep0.y[0], &rep0.x[1], &rep0.y[1])?;
    let n_o = rep0.dims[0] as i64;
    let n_e = rep0.dims[1] as i64;
    Ok((b.rank(f) as i64) <= 2 * n_o - (n_e - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Semistable,
    Unstable,
}

/// Classify against `theta = (-1, 0, 1)` by exhaustive enumeration of
/// subrepresentations over a small prime field. A subrepresentation is a
/// triple of subspaces closed under all four arrows; the classification
/// scans the sign of `theta . dim` over the proper nontrivial ones.
pub fn theta_stable_bruteforce(
    f: &PrimeField,
    rep0: &QuiverRep0<PrimeField>,
) -> Result<Stability, QuiverError> {
    let total: usize = rep0.dims.iter().sum();
    if total > 7 || f.modulus() > 5 {
        return Err(QuiverError::StabilityBudget {
            dim: total,
            p: f.modulus(),
        });
    }
    let theta = [-1i64, 0, 1];
    let dim_f: i64 = rep0
        .dims
        .iter()
        .zip(theta)
        .map(|(&d, t)| d as i64 * t)
        .sum();
    if dim_f != 0 {
        return Ok(Stability::Unstable);
    }
    let subs: [Vec<Mat<PrimeField>>; 3] = [
        all_subspaces(f, rep0.dims[0]),
        all_subspaces(f, rep0.dims[1]),
        all_subspaces(f, rep0.dims[2]),
    ];
    let mut saw_zero = false;
    for u3 in &subs[0] {
        for u2 in &subs[1] {
            // Closure under the level -3 arrows.
            if !image_contained(f, &rep0.x[0], u3, u2) || !image_contained(f, &rep0.y[0], u3, u2) {
                continue;
            }
            for u1 in &subs[2] {
                if !image_contained(f, &rep0.x[1], u2, u1)
                    || !image_contained(f, &rep0.y[1], u2, u1)
                {
                    continue;
                }
                let d = [u3.rows(), u2.rows(), u1.rows()];
                if d == [0, 0, 0] || d == rep0.dims {
                    continue;
                }
                let v: i64 = d.iter().zip(theta).map(|(&x, t)| x as i64 * t).sum();
                if v < 0 {
                    return Ok(Stability::Unstable);
                }
                if v == 0 {
                    saw_zero = true;
                }
            }
        }
    }
    Ok(if saw_zero {
        Stability::Semistable
    } else {
        Stability::Stable
    })
}

/// Every subspace of `F_p^n` as a matrix of echelon basis rows.
fn all_subspaces(f: &PrimeField, n: usize) -> Vec<Mat<PrimeField>> {
    let p = f.modulus();
    let mut out = vec![Mat::zero(f, 0, n)];
    for d in 1..=n {
        // Choose pivot columns, then fill the free entries: in reduced
        // echelon form row i has a 1 at pivot[i], zeros at other pivots,
        // and arbitrary values at non-pivot columns right of pivot[i].
        let mut pivots = Vec::new();
        choose_pivots(n, d, 0, &mut pivots, &mut |pv: &[usize]| {
            let mut free_cells = Vec::new();
            for (i, &pi) in pv.iter().enumerate() {
                for j in pi + 1..n {
                    if !pv.contains(&j) {
                        free_cells.push((i, j));
                    }
                }
            }
            let mut values = vec![0u64; free_cells.len()];
            loop {
                let mut m = Mat::zero(f, d, n);
                for (i, &pi) in pv.iter().enumerate() {
                    m.set(i, pi, 1);
                }
                for (&(i, j), &v) in free_cells.iter().zip(&values) {
                    m.set(i, j, v);
                }
                out.push(m);
                let mut k = 0;
                loop {
                    if k == values.len() {
                        return;
                    }
                    if values[k] + 1 < p {
                        values[k] += 1;
                        break;
                    }
                    values[k] = 0;
                    k += 1;
                }
            }
        });
    }
    out
}

fn choose_pivots(
    n: usize,
    d: usize,
    start: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if acc.len() == d {
        emit(acc);
        return;
    }
    for c in start..n {
        acc.push(c);
        choose_pivots(n, d, c + 1, acc, emit);
        acc.pop();
    }
}

/// `map(U_src) <= U_tgt`, for subspaces given by basis-row matrices.
fn image_contained(
    f: &PrimeField,
    map: &Mat<PrimeField>,
    src: &Mat<PrimeField>,
    tgt: &Mat<PrimeField>,
) -> bool {
    // Basis vectors of src are rows; their images must lie in the row
    // space of tgt.
    let images = map.mul(f, &src.transpose()).expect("shapes line up");
    let tgt_rank = tgt.rank(f);
    let mut stacked_rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..tgt.rows() {
        stacked_rows.push((0..tgt.cols()).map(|j| *tgt.get(i, j)).collect());
    }
    for c in 0..images.cols() {
        stacked_rows.push((0..images.rows()).map(|r| *images.get(r, c)).collect());
    }
    let stacked = Mat::from_rows(f, stacked_rows).expect("uniform width");
    stacked.rank(f) == tgt_rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::ncalgebra::{conic_rep, line_rep, point_rep_constant, z_form};
    use rand_chacha::ChaCha8Rng;
    use rand_core::{RngCore, SeedableRng};

    fn hc() -> AlgebraSpec {
        AlgebraSpec::enveloping_hc()
    }

    #[test]
    fn pinned_euler_matrices_match_the_quiver_shape() {
        // For the hereditary subquiver, chi(d1, d2) is the vertex sum
        // minus one arrow term per arrow; the full quiver adds one term
        // per relation (two relations from the far vertex to vertex 0).
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..50 {
            let d = |rng: &mut ChaCha8Rng| (rng.next_u64() % 5) as i64;
            let d1 = [d(&mut rng), d(&mut rng), d(&mut rng), d(&mut rng)];
            let d2 = [d(&mut rng), d(&mut rng), d(&mut rng), d(&mut rng)];
            let vertex: i64 = (0..4).map(|v| d1[v] * d2[v]).sum();
            let arrows: i64 = (0..3).map(|l| 2 * d1[l] * d2[l + 1]).sum();
            let relations = 2 * d1[0] * d2[3];
            assert_eq!(chi_gamma(d1, d2), vertex - arrows + relations);

            let e1 = [d1[0], d1[1], d1[2]];
            let e2 = [d2[0], d2[1], d2[2]];
            let vertex0: i64 = (0..3).map(|v| e1[v] * e2[v]).sum();
            let arrows0: i64 = (0..2).map(|l| 2 * e1[l] * e2[l + 1]).sum();
            assert_eq!(chi_gamma0(e1, e2), vertex0 - arrows0);
        }
    }

    #[test]
    fn builders_are_fixed_by_ind_res_for_both_algebras() {
        // Point, line and conic representations are perpendicular to the
        // vertex-0 simple, so induction undoes restriction on all of them.
        let q = Rationals;
        let rat = |n: i64| num::BigRational::from_integer(num::BigInt::from(n));
        let specs = [
            hc(),
            AlgebraSpec::type_a(rat(1), rat(2), rat(3)).unwrap(),
            AlgebraSpec::type_a(rat(2), rat(-1), rat(5)).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for spec in &specs {
            for _ in 0..10 {
                let u = [q.sample(&mut rng), q.sample(&mut rng)];
                if !(q.is_zero(&u[0]) && q.is_zero(&u[1])) {
                    let rep = line_rep(&q, spec, &u).unwrap();
                    assert_eq!(
                        ind(&q, &res(&rep), spec).unwrap(),
                        rep,
                        "line over {spec:?}"
                    );
                }
                let w = [
                    q.sample(&mut rng),
                    q.sample(&mut rng),
                    q.sample(&mut rng),
                    q.sample(&mut rng),
                ];
                if w.iter().any(|c| !q.is_zero(c)) {
                    let rep = conic_rep(&q, spec, &w).unwrap();
                    assert_eq!(
                        ind(&q, &res(&rep), spec).unwrap(),
                        rep,
                        "conic over {spec:?}"
                    );
                }
            }
        }
        // Point representations over the enveloping algebra (constant
        // orbits satisfy its relations). Induction recovers them up to
        // the basis of the one-dimensional vertex-0 space, i.e. up to a
        // nonzero rescaling of the last arrow pair.
        for (a, b) in [(1, 0), (0, 1), (1, 1), (2, -3), (7, 5)] {
            let p = point_rep_constant(&q, &q.from_i64(a), &q.from_i64(b)).unwrap();
            let back = ind(&q, &res(&p), &hc()).unwrap();
            assert_eq!(back.dims(), p.dims(), "point ({a}:{b})");
            assert_eq!(res(&back), res(&p));
            let cross = q.sub(
                &q.mul(p.x(2).get(0, 0), back.y(2).get(0, 0)),
                &q.mul(p.y(2).get(0, 0), back.x(2).get(0, 0)),
            );
            assert!(q.is_zero(&cross), "proportional vertex-0 maps ({a}:{b})");
            assert!(
                !q.is_zero(back.x(2).get(0, 0)) || !q.is_zero(back.y(2).get(0, 0)),
                "nonzero vertex-0 maps ({a}:{b})"
            );
            assert_eq!(hom_dim(&q, &p, &back), 1);
            assert_eq!(hom_dim(&q, &back, &p), 1);
        }
    }

    fn scalar_rep0<F: Field>(f: &F, vals: [i64; 4]) -> QuiverRep0<F> {
        let m = |v: i64| Mat::from_fn(1, 1, |_, _| f.from_i64(v));
        QuiverRep0::new(
            f,
            [1, 1, 1],
            [m(vals[0]), m(vals[2])],
            [m(vals[1]), m(vals[3])],
        )
        .unwrap()
    }

    fn random_rep0<F: Field>(f: &F, dims: [usize; 3], rng: &mut ChaCha8Rng) -> QuiverRep0<F> {
        let mk =
            |r: usize, c: usize, rng: &mut ChaCha8Rng| Mat::from_fn(r, c, |_, _| f.sample(rng));
        QuiverRep0::new(
            f,
            dims,
            [mk(dims[1], dims[0], rng), mk(dims[2], dims[1], rng)],
            [mk(dims[1], dims[0], rng), mk(dims[2], dims[1], rng)],
        )
        .unwrap()
    }

    #[test]
    fn relations_hold_for_point_reps_and_fail_generically() {
        let q = Rationals;
        let p = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(1)).unwrap();
        assert!(check_relations(&p, &hc(), &q).unwrap());

        // The (1,1) family with vanishing last maps.
        let m = |v: i64| Mat::from_fn(1, 1, |_, _| q.from_i64(v));
        let z01 = Mat::zero(&q, 0, 1);
        let family = QuiverRep::new(
            &q,
            [1, 1, 1, 0],
            [m(2), m(3), z01.clone()],
            [m(1), m(5), z01],
        )
        .unwrap();
        assert!(check_relations(&family, &hc(), &q).unwrap());

        // Generic entries at a nonzero vertex 0 violate the relations.
        let generic =
            QuiverRep::new(&q, [1, 1, 1, 1], [m(1), m(2), m(3)], [m(4), m(5), m(6)]).unwrap();
        assert!(!check_relations(&generic, &hc(), &q).unwrap());
    }

    #[test]
    fn check_relations_matches_the_displayed_pair_for_hc() {
        // For the enveloping algebra the relation blocks are exactly
        // Y''Y'X - 2Y''X'Y + X''Y'Y = 0 and X''X'Y - 2X''Y'X + Y''X'X = 0.
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for trial in 0..30 {
            let dims: [usize; 4] = [
                1 + trial % 2,
                1 + (trial / 2) % 2,
                1 + (trial / 4) % 2,
                (trial / 8) % 3,
            ];
            let mk =
                |r: usize, c: usize, rng: &mut ChaCha8Rng| Mat::from_fn(r, c, |_, _| q.sample(rng));
            let rep = QuiverRep::new(
                &q,
                dims,
                [
                    mk(dims[1], dims[0], &mut rng),
                    mk(dims[2], dims[1], &mut rng),
                    mk(dims[3], dims[2], &mut rng),
                ],
                [
                    mk(dims[1], dims[0], &mut rng),
                    mk(dims[2], dims[1], &mut rng),
                    mk(dims[3], dims[2], &mut rng),
                ],
            )
            .unwrap();
            let (x, y) = (rep.x(0), rep.y(0));
            let (xp, yp) = (rep.x(1), rep.y(1));
            let (xpp, ypp) = (rep.x(2), rep.y(2));
            let two = q.from_i64(2);
            let block1 = ypp
                .mul(&q, &yp.mul(&q, x).unwrap())
                .unwrap()
                .sub(
                    &q,
                    &ypp.mul(&q, &xp.mul(&q, y).unwrap())
                        .unwrap()
                        .scale(&q, &two),
                )
                .unwrap()
                .add(&q, &xpp.mul(&q, &yp.mul(&q, y).unwrap()).unwrap())
                .unwrap();
            let block2 = xpp
                .mul(&q, &xp.mul(&q, y).unwrap())
                .unwrap()
                .sub(
                    &q,
                    &xpp.mul(&q, &yp.mul(&q, x).unwrap())
                        .unwrap()
                        .scale(&q, &two),
                )
                .unwrap()
                .add(&q, &ypp.mul(&q, &xp.mul(&q, x).unwrap()).unwrap())
                .unwrap();
            let displayed = block1.is_zero(&q) && block2.is_zero(&q);
            assert_eq!(
                check_relations(&rep, &hc(), &q).unwrap(),
                displayed,
                "trial {trial}"
            );
        }
    }

    #[test]
    fn hom_dim_examples() {
        let q = Rationals;
        let p = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(2)).unwrap();
        assert_eq!(hom_dim(&q, &p, &p), 1);

        let s2 = QuiverRep::simple(&q, 1);
        let s3 = QuiverRep::simple(&q, 0);
        assert_eq!(hom_dim(&q, &s2, &s2), 1);
        assert_eq!(hom_dim(&q, &s2, &s3), 0);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_gamma([1, 1, 1, 1], [1, 1, 1, 1]), 0);
        assert_eq!(chi_gamma([0, 0, 0, 1], [0, 0, 0, 1]), 1);
        for n_o in 0..4i64 {
            for n_e in 0..4i64 {
                assert_eq!(
                    chi_gamma0([n_o, n_e, n_o], [n_o, n_e, n_o]),
                    2 * n_o * n_o + n_e * n_e - 4 * n_e * n_o
                );
            }
        }
    }

    #[test]
    fn ext1_dim_examples() {
        let q = Rationals;
        let p = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(1)).unwrap();
        let rp = res(&p);
        assert_eq!(hom_dim0(&q, &rp, &rp), 1);
        assert_eq!(ext1_dim_gamma0(&q, &rp, &rp), 2);

        let s3 = QuiverRep0::simple(&q, 0);
        assert_eq!(ext1_dim_gamma0(&q, &s3, &s3), 0);

        // Distinct points: no homs, one extension.
        let p2 = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(3)).unwrap();
        let rp2 = res(&p2);
        assert_eq!(hom_dim0(&q, &rp, &rp2), 0);
        assert_eq!(ext1_dim_gamma0(&q, &rp, &rp2), 1);
    }

    #[test]
    fn ind_recovers_conic_and_fills_cokernel() {
        let q = Rationals;
        let conic = conic_rep(&q, &hc(), &z_form(&q)).unwrap();
        let back = ind(&q, &res(&conic), &hc()).unwrap();
        assert_eq!(back, conic);

        // The (1,1) family off the diagonal has vertex 0 of dimension 0.
        let family = scalar_rep0(&q, [1, 0, 0, 1]);
        let indf = ind(&q, &family, &hc()).unwrap();
        assert_eq!(indf.dims(), [1, 1, 1, 0]);

        // Zero maps leave the full two-dimensional cokernel.
        let zero = scalar_rep0(&q, [0, 0, 0, 0]);
        let indz = ind(&q, &zero, &hc()).unwrap();
        assert_eq!(indz.dims(), [1, 1, 1, 2]);
    }

    #[test]
    fn res_ind_round_trip_on_random_representations() {
        let q = Rationals;
        let f5 = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let spec = hc();
        for i in 0..40 {
            let dims = [1 + i % 3, 1 + (i / 3) % 3, 1 + (i / 9) % 3];
            let fq = random_rep0(&q, dims, &mut rng);
            assert_eq!(res(&ind(&q, &fq, &spec).unwrap()), fq);
            let fp = random_rep0(&f5, dims, &mut rng);
            assert_eq!(res(&ind(&f5, &fp, &spec).unwrap()), fp);
        }
    }

    #[test]
    fn ind_output_satisfies_relations() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let f = random_rep0(&q, [2, 2, 2], &mut rng);
            let m = ind(&q, &f, &hc()).unwrap();
            assert!(check_relations(&m, &hc(), &q).unwrap());
        }
    }

    #[test]
    fn membership_c_examples() {
        let q = Rationals;
        // Induction of a (1,1) moduli member.
        let member = scalar_rep0(&q, [1, 0, 0, 1]);
        let m = ind(&q, &member, &hc()).unwrap();
        assert!(membership_c_hc(&q, &m).unwrap());

        // A point representation has Z_-3 = 0.
        let p = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(1)).unwrap();
        assert!(!membership_c_hc(&q, &p).unwrap());

        // Wrong dimension vector (1,1,1,1).
        let mm = |v: i64| Mat::from_fn(1, 1, |_, _| q.from_i64(v));
        let bad = QuiverRep::new(
            &q,
            [1, 1, 1, 1],
            [mm(1), mm(2), mm(3)],
            [mm(4), mm(5), mm(6)],
        )
        .unwrap();
        assert!(!membership_c_hc(&q, &bad).unwrap());
    }

    #[test]
    fn membership_d_examples() {
        let q = Rationals;
        assert!(membership_d_hc(&q, &scalar_rep0(&q, [1, 0, 0, 1])).unwrap());
        assert!(!membership_d_hc(&q, &scalar_rep0(&q, [1, 0, 1, 0])).unwrap());

        // A (2,1) member: X = (1,0)^t, Y = (0,1)^t, X' = (2,0), Y' = (1,-1).
        let x = Mat::from_rows(&q, vec![vec![q.from_i64(1)], vec![q.from_i64(0)]]).unwrap();
        let y = Mat::from_rows(&q, vec![vec![q.from_i64(0)], vec![q.from_i64(1)]]).unwrap();
        let xp = Mat::from_rows(&q, vec![vec![q.from_i64(2), q.from_i64(0)]]).unwrap();
        let yp = Mat::from_rows(&q, vec![vec![q.from_i64(1), q.from_i64(-1)]]).unwrap();
        let f = QuiverRep0::new(&q, [1, 2, 1], [x, xp], [y, yp]).unwrap();
        assert!(membership_d_hc(&q, &f).unwrap());
    }

    #[test]
    fn rank_condition_type_a_examples() {
        let q = Rationals;
        let rat = |n: i64| num::BigRational::from_integer(num::BigInt::from(n));
        let spec = AlgebraSpec::type_a(rat(1), rat(2), rat(3)).unwrap();

        // n_e = 1 makes the bound vacuous.
        let f = scalar_rep0(&q, [17, -3, 4, 9]);
        assert!(rank_condition_type_a(&q, &f, &spec).unwrap());

        // All-ones scalars: [[4,3],[3,4]] has rank 2 <= 2.
        let f = scalar_rep0(&q, [1, 1, 1, 1]);
        assert!(rank_condition_type_a(&q, &f, &spec).unwrap());

        // Generic (2,2) representations have full rank 4 > 3.
        let p = PrimeField::new(1009).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let f = random_rep0(&p, [2, 2, 2], &mut rng);
        let specp = AlgebraSpec::type_a(rat(1), rat(2), rat(3)).unwrap();
        assert!(!rank_condition_type_a(&p, &f, &specp).unwrap());

        assert_eq!(
            rank_condition_type_a(&q, &f2_hc_placeholder(&q), &hc()).unwrap_err(),
            QuiverError::NotTypeA
        );
    }

    fn f2_hc_placeholder(q: &Rationals) -> QuiverRep0<Rationals> {
        scalar_rep0(q, [1, 0, 0, 1])
    }

    fn block_diag(f: &PrimeField, a: &Mat<PrimeField>, b: &Mat<PrimeField>) -> Mat<PrimeField> {
        let za = Mat::zero(f, a.rows(), b.cols());
        let zb = Mat::zero(f, b.rows(), a.cols());
        Mat::block2x2(f, [[a, &za], [&zb, b]]).unwrap()
    }

    #[test]
    fn corank_matches_induced_vertex_dimension() {
        // dim(Ind F)_0 >= n_e - 1 iff rank(substituted matrix) <= 2 n_o - (n_e - 1).
        let f5 = PrimeField::new(5).unwrap();
        let spec = hc();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let d = 1 + (rng.next_u64() % 2) as usize;
            let e = 1 + (rng.next_u64() % 2) as usize;
            let f = random_rep0(&f5, [d, e, d], &mut rng);
            let b = ma_substituted(&spec, &f5, f.x(0), f.y(0), f.x(1), f.y(1)).unwrap();
            let m = ind(&f5, &f, &spec).unwrap();
            let n_e = e as i64;
            let n_o = d as i64;
            assert_eq!(
                m.dims()[3] as i64 >= n_e - 1,
                (b.rank(&f5) as i64) <= 2 * n_o - (n_e - 1)
            );
        }
    }

    #[test]
    fn stability_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let p = point_rep_constant(&f3, &1, &1).unwrap();
        assert_eq!(
            theta_stable_bruteforce(&f3, &res(&p)).unwrap(),
            Stability::Stable
        );

        // A vertex -1 simple summand destabilizes.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let base = random_rep0(&f3, [1, 1, 1], &mut rng);
        let padded = QuiverRep0::new(
            &f3,
            [1, 1, 2],
            [
                base.x(0).clone(),
                Mat::from_fn(2, 1, |i, _| if i == 0 { *base.x(1).get(0, 0) } else { 0 }),
            ],
            [
                base.y(0).clone(),
                Mat::from_fn(2, 1, |i, _| if i == 0 { *base.y(1).get(0, 0) } else { 0 }),
            ],
        )
        .unwrap();
        // dims (1,1,2): theta-pairing is 1, not 0, so it cannot be
        // semistable at all.
        assert_eq!(
            theta_stable_bruteforce(&f3, &padded).unwrap(),
            Stability::Unstable
        );

        // A vertex -1 simple summand inside dims (1,1,1): the complement
        // (1,1,0) is a subrepresentation of theta-value -1.
        let split = scalar_rep0(&f3, [1, 1, 0, 0]);
        assert_eq!(
            theta_stable_bruteforce(&f3, &split).unwrap(),
            Stability::Unstable
        );

        // A direct sum of two point restrictions is semistable, not stable.
        let p1 = res(&point_rep_constant(&f3, &1, &0).unwrap());
        let p2 = res(&point_rep_constant(&f3, &0, &1).unwrap());
        let direct_sum = QuiverRep0::new(
            &f3,
            [2, 2, 2],
            [
                block_diag(&f3, p1.x(0), p2.x(0)),
                block_diag(&f3, p1.x(1), p2.x(1)),
            ],
            [
                block_diag(&f3, p1.y(0), p2.y(0)),
                block_diag(&f3, p1.y(1), p2.y(1)),
            ],
        )
        .unwrap();
        assert_eq!(
            theta_stable_bruteforce(&f3, &direct_sum).unwrap(),
            Stability::Semistable
        );

        // Budget errors.
        let f7 = PrimeField::new(7).unwrap();
        let small = scalar_rep0(&f7, [1, 0, 0, 1]);
        assert!(matches!(
            theta_stable_bruteforce(&f7, &small).unwrap_err(),
            QuiverError::StabilityBudget { .. }
        ));
    }

    #[test]
    fn subspace_enumeration_counts() {
        let f3 = PrimeField::new(3).unwrap();
        // Gaussian binomials for F_3^2: 1 + 4 + 1.
        assert_eq!(all_subspaces(&f3, 2).len(), 6);
        // F_3^3: 1 + 13 + 13 + 1.
        assert_eq!(all_subspaces(&f3, 3).len(), 28);
        let f5 = PrimeField::new(5).unwrap();
        // F_5^3: 1 + 31 + 31 + 1.
        assert_eq!(all_subspaces(&f5, 3).len(), 64);
    }

    #[test]
    fn d_members_restrict_from_points_are_orthogonal() {
        // hom(F, Res p) = hom(Res p, F) = 0 for members with invariants
        // away from (1,1) and 20 sampled diagonal points.
        let q = Rationals;
        let x = Mat::from_rows(&q, vec![vec![q.from_i64(1)], vec![q.from_i64(0)]]).unwrap();
        let y = Mat::from_rows(&q, vec![vec![q.from_i64(0)], vec![q.from_i64(1)]]).unwrap();
        let xp = Mat::from_rows(&q, vec![vec![q.from_i64(2), q.from_i64(0)]]).unwrap();
        let yp = Mat::from_rows(&q, vec![vec![q.from_i64(1), q.from_i64(-1)]]).unwrap();
        let member21 = QuiverRep0::new(&q, [1, 2, 1], [x, xp], [y, yp]).unwrap();
        assert!(membership_d_hc(&q, &member21).unwrap());

        // A (1,2) member: Y'X - X'Y = I_2 with the 1x1 rank condition
        // vacuous.
        let x = Mat::from_rows(&q, vec![vec![q.from_i64(1), q.from_i64(0)]]).unwrap();
        let y = Mat::from_rows(&q, vec![vec![q.from_i64(0), q.from_i64(1)]]).unwrap();
        let xp = Mat::from_rows(&q, vec![vec![q.from_i64(0)], vec![q.from_i64(-1)]]).unwrap();
        let yp = Mat::from_rows(&q, vec![vec![q.from_i64(1)], vec![q.from_i64(0)]]).unwrap();
        let member12 = QuiverRep0::new(&q, [2, 1, 2], [x, xp], [y, yp]).unwrap();
        assert!(membership_d_hc(&q, &member12).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut sampled = 0;
        while sampled < 20 {
            let a = q.sample(&mut rng);
            let b = q.sample(&mut rng);
            if q.is_zero(&a) && q.is_zero(&b) {
                continue;
            }
            sampled += 1;
            let p = point_rep_constant(&q, &a, &b).unwrap();
            let rp = res(&p);
            for member in [&member21, &member12] {
                assert_eq!(hom_dim0(&q, member, &rp), 0, "point {sampled}");
                assert_eq!(hom_dim0(&q, &rp, member), 0, "point {sampled}");
            }
        }
    }
}
