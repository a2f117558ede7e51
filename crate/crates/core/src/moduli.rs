//! The matrix varieties cut out by `Y'X - X'Y = I` and
//! `rank(YX' - XY' - I) <= 1`, whose points (modulo the product of general
//! linear groups) classify normalized reflexive rank-one modules over the
//! enveloping algebra.
//!
//! `X, Y` are `n_e x n_o`, `X', Y'` are `n_o x n_e`. Degenerate shapes
//! (`n_e = 0` or `n_o = 0`) follow the convention that empty products are
//! zero matrices and a `0 x 0` identity imposes no condition, so boundary
//! cases stay total.

use crate::castelnuovo::InvariantPair;
use crate::field::{Field, PrimeField};
use crate::matrix::{Mat, MatError};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModuliError {
    #[error("matrix shapes are incoherent: {0}")]
    Shape(String),
    #[error("({0}, {1}) lies outside the invariant range N")]
    OutsideN(u64, u64),
    #[error("enumeration budget exceeded: 4*n_e*n_o*log2(p) = {0} > 24")]
    CountBudget(u64),
    #[error("point fails membership")]
    NotAMember,
    #[error("rank of YX' - XY' - I is {0}, not exactly 1; outside the smooth probe stratum")]
    NotRankOne(usize),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// A quadruple `(X, Y, X', Y')` satisfying both defining conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliPoint<F: Field> {
    pub x: Mat<F>,
    pub y: Mat<F>,
    pub xp: Mat<F>,
    pub yp: Mat<F>,
}

impl<F: Field> ModuliPoint<F> {
    pub fn n_e(&self) -> usize {
        self.x.rows()
    }
    pub fn n_o(&self) -> usize {
        self.x.cols()
    }
}

fn check_shapes<F: Field>(
    x: &Mat<F>,
    y: &Mat<F>,
    xp: &Mat<F>,
    yp: &Mat<F>,
) -> Result<(usize, usize), ModuliError> {
    let (ne, no) = (x.rows(), x.cols());
    if y.rows() != ne
        || y.cols() != no
        || xp.rows() != no
        || xp.cols() != ne
        || yp.rows() != no
        || yp.cols() != ne
    {
        return Err(ModuliError::Shape(format!(
            "X {}x{}, Y {}x{}, X' {}x{}, Y' {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols(),
            xp.rows(),
            xp.cols(),
            yp.rows(),
            yp.cols()
        )));
    }
    Ok((ne, no))
}

/// Both defining conditions, checked exactly: `Y'X - X'Y = I` on the
/// `n_o`-side and `rank(YX' - XY' - I) <= 1` on the `n_e`-side.
pub fn membership<F: Field>(
    f: &F,
    x: &Mat<F>,
    y: &Mat<F>,
    xp: &Mat<F>,
    yp: &Mat<F>,
) -> Result<bool, ModuliError> {
    let (ne, no) = check_shapes(x, y, xp, yp)?;
    let sym = yp.mul(f, x)?.sub(f, &xp.mul(f, y)?)?;
    if sym != Mat::identity(f, no) {
        return Ok(false);
    }
    let r = rank_one_defect(f, x, y, xp, yp, ne)?;
    Ok(r.rank(f) <= 1)
}

/// The matrix `YX' - XY' - I` whose rank-one condition cuts the variety.
fn rank_one_defect<F: Field>(
    f: &F,
    x: &Mat<F>,
    y: &Mat<F>,
    xp: &Mat<F>,
    yp: &Mat<F>,
    ne: usize,
) -> Result<Mat<F>, ModuliError> {
    Ok(y.mul(f, xp)?
        .sub(f, &x.mul(f, yp)?)?
        .sub(f, &Mat::identity(f, ne))?)
}

/// Random search over a prime field. For each sampled `(X, Y)` the
/// equation `Y'X - X'Y = I` is linear in `(X', Y')`; the solver
/// parametrizes the affine solution set. For `n_e <= 1` every solution is
/// a member; for `n_e = 2` the rank condition is `det(YX' - XY' - I) = 0`,
/// a quadratic along any line of the solution set, solved exactly by
/// modular square roots; larger `n_e` falls back to rejection sampling of
/// the minors. `budget` counts candidate evaluations; results are
/// deterministic in the seed and deduplicated.
pub fn search(
    f: &PrimeField,
    n_e: usize,
    n_o: usize,
    seed: u64,
    budget: u64,
    max_points: usize,
) -> Result<Vec<ModuliPoint<PrimeField>>, ModuliError> {
    let pair = InvariantPair::new(n_e as u64, n_o as u64);
    if !pair.in_n() {
        return Err(ModuliError::OutsideN(n_e as u64, n_o as u64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<ModuliPoint<PrimeField>> = Vec::new();
    let mut spent = 0u64;
    let unknowns = 2 * n_e * n_o;
    while spent < budget && found.len() < max_points {
        let x = Mat::from_fn(n_e, n_o, |_, _| f.sample(&mut rng));
        let y = Mat::from_fn(n_e, n_o, |_, _| f.sample(&mut rng));
        spent += 1;
        // Linear system in the entries of (X', Y'): unknowns X'_{rs} at
        // r*n_e + s and Y'_{rs} at n_e*n_o + r*n_e + s; equations indexed
        // by entries (i, j) of Y'X - X'Y = I.
        let mut sys = Mat::zero(f, n_o * n_o, unknowns);
        let mut rhs = Mat::zero(f, n_o * n_o, 1);
        for i in 0..n_o {
            for j in 0..n_o {
                let row = i * n_o + j;
                for s in 0..n_e {
                    // + Y'_{is} X_{sj}
                    sys.set(row, n_e * n_o + i * n_e + s, *x.get(s, j));
                    // - X'_{is} Y_{sj}
                    sys.set(row, i * n_e + s, f.neg(y.get(s, j)));
                }
                rhs.set(row, 0, if i == j { f.one() } else { f.zero() });
            }
        }
        let Some(particular) = sys.solve(f, &rhs)? else {
            continue;
        };
        let kernel = sys.kernel_basis(f);
        let base: Vec<u64> = (0..unknowns).map(|i| *particular.get(i, 0)).collect();
        let offset = |rng: &mut ChaCha8Rng| -> Vec<u64> {
            let mut v = base.clone();
            for k in 0..kernel.cols() {
                let c = f.sample(rng);
                if f.is_zero(&c) {
                    continue;
                }
                for (i, entry) in v.iter_mut().enumerate() {
                    *entry = f.add(entry, &f.mul(&c, kernel.get(i, k)));
                }
            }
            v
        };
        let to_point = |v: &[u64], x: &Mat<PrimeField>, y: &Mat<PrimeField>| ModuliPoint {
            x: x.clone(),
            y: y.clone(),
            xp: Mat::from_fn(n_o, n_e, |r, s| v[r * n_e + s]),
            yp: Mat::from_fn(n_o, n_e, |r, s| v[n_e * n_o + r * n_e + s]),
        };
        let push = |pt: ModuliPoint<PrimeField>, found: &mut Vec<ModuliPoint<PrimeField>>| {
            if !found.contains(&pt) {
                found.push(pt);
            }
        };
        if n_e <= 1 {
            // rank(YX' - XY' - I) <= 1 is automatic on a <=1x<=1 matrix.
            let samples = (budget - spent).clamp(1, 8);
            for _ in 0..samples {
                spent += 1;
                let v = offset(&mut rng);
                let pt = to_point(&v, &x, &y);
                debug_assert!(membership(f, &pt.x, &pt.y, &pt.xp, &pt.yp)?);
                push(pt, &mut found);
                if found.len() >= max_points {
                    break;
                }
            }
        } else if n_e == 2 {
            // det(R) restricted to a line v = o + tau d is a quadratic in
            // tau; solve it exactly.
            let lines = (budget - spent).clamp(1, 8);
            'line: for _ in 0..lines {
                spent += 3;
                if kernel.cols() == 0 {
                    let v = offset(&mut rng);
                    let pt = to_point(&v, &x, &y);
                    if membership(f, &pt.x, &pt.y, &pt.xp, &pt.yp)? {
                        push(pt, &mut found);
                    }
                    break 'line;
                }
                let o = offset(&mut rng);
                let mut d = vec![f.zero(); unknowns];
                for k in 0..kernel.cols() {
                    let c = f.sample(&mut rng);
                    for (i, entry) in d.iter_mut().enumerate() {
                        *entry = f.add(entry, &f.mul(&c, kernel.get(i, k)));
                    }
                }
                if d.iter().all(|e| f.is_zero(e)) {
                    continue;
                }
                let det_at = |tau: u64| -> Result<u64, ModuliError> {
                    let v: Vec<u64> = o
                        .iter()
                        .zip(&d)
                        .map(|(a, b)| f.add(a, &f.mul(&tau, b)))
                        .collect();
                    let pt = to_point(&v, &x, &y);
                    let r = rank_one_defect(f, &pt.x, &pt.y, &pt.xp, &pt.yp, n_e)?;
                    let det = f.sub(
                        &f.mul(r.get(0, 0), r.get(1, 1)),
                        &f.mul(r.get(0, 1), r.get(1, 0)),
                    );
                    Ok(det)
                };
                // Interpolate a tau^2 + b tau + c from three values.
                let f0 = det_at(0)?;
                let f1 = det_at(1)?;
                let f2 = det_at(2)?;
                // a = (f2 - 2 f1 + f0) / 2, b = f1 - f0 - a, c = f0.
                let two = f.from_i64(2);
                let a = if f.modulus() == 2 {
                    // In characteristic two sample both points directly.
                    for tau in [0u64, 1] {
                        if f.is_zero(&det_at(tau)?) {
                            let v: Vec<u64> = o
                                .iter()
                                .zip(&d)
                                .map(|(p0, p1)| f.add(p0, &f.mul(&tau, p1)))
                                .collect();
                            let pt = to_point(&v, &x, &y);
                            if membership(f, &pt.x, &pt.y, &pt.xp, &pt.yp)? {
                                push(pt, &mut found);
                            }
                        }
                    }
                    if found.len() >= max_points {
                        break 'line;
                    }
                    continue 'line;
                } else {
                    f.div(&f.add(&f.sub(&f2, &f.mul(&two, &f1)), &f0), &two)
                        .expect("2 is a unit for odd p")
                };
                let b = f.sub(&f.sub(&f1, &f0), &a);
                let c = f0;
                let roots: Vec<u64> = if f.is_zero(&a) {
                    if f.is_zero(&b) {
                        if f.is_zero(&c) {
                            vec![0]
                        } else {
                            vec![]
                        }
                    } else {
                        vec![f.div(&f.neg(&c), &b).expect("b nonzero")]
                    }
                } else {
                    // tau = (-b +- sqrt(b^2 - 4ac)) / 2a
                    let disc = f.sub(&f.mul(&b, &b), &f.mul(&f.from_i64(4), &f.mul(&a, &c)));
                    match f.sqrt(disc) {
                        None => vec![],
                        Some(s) => {
                            let inv2a = f.inv(&f.mul(&two, &a)).expect("a nonzero");
                            let r1 = f.mul(&f.add(&f.neg(&b), &s), &inv2a);
                            let r2 = f.mul(&f.sub(&f.neg(&b), &s), &inv2a);
                            if r1 == r2 {
                                vec![r1]
                            } else {
                                vec![r1, r2]
                            }
                        }
                    }
                };
                for tau in roots {
                    let v: Vec<u64> = o
                        .iter()
                        .zip(&d)
                        .map(|(p0, p1)| f.add(p0, &f.mul(&tau, p1)))
                        .collect();
                    let pt = to_point(&v, &x, &y);
                    if membership(f, &pt.x, &pt.y, &pt.xp, &pt.yp)? {
                        push(pt, &mut found);
                    }
                }
                if found.len() >= max_points {
                    break 'line;
                }
            }
        } else {
            // General fallback: rejection-sample the minors.
            let tries = (budget - spent).clamp(1, 64);
            for _ in 0..tries {
                spent += 1;
                let v = offset(&mut rng);
                let pt = to_point(&v, &x, &y);
                if membership(f, &pt.x, &pt.y, &pt.xp, &pt.yp)? {
                    push(pt, &mut found);
                    if found.len() >= max_points {
                        break;
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Exact number of quadruples over `F_p` satisfying both conditions, by
/// full enumeration. The budget gate keeps the loop below `2^24` tuples.
pub fn count_exhaustive(n_e: usize, n_o: usize, p: u64) -> Result<u64, ModuliError> {
    let f = PrimeField::new(p).map_err(|e| ModuliError::Shape(e.to_string()))?;
    let vars = 4 * n_e * n_o;
    let bits = (vars as u64) * 64u64.saturating_sub(p.leading_zeros() as u64);
    if bits > 24 {
        return Err(ModuliError::CountBudget(bits));
    }
    let mut count = 0u64;
    let mut vals = vec![0u64; vars];
    loop {
        let x = Mat::from_fn(n_e, n_o, |i, j| vals[i * n_o + j]);
        let y = Mat::from_fn(n_e, n_o, |i, j| vals[n_e * n_o + i * n_o + j]);
        let xp = Mat::from_fn(n_o, n_e, |i, j| vals[2 * n_e * n_o + i * n_e + j]);
        let yp = Mat::from_fn(n_o, n_e, |i, j| vals[3 * n_e * n_o + i * n_e + j]);
        if membership(&f, &x, &y, &xp, &yp)? {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(count);
            }
            if vals[k] + 1 < p {
                vals[k] += 1;
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

/// Expected tangent dimension upstairs:
/// `2(n_e - (n_e - n_o)^2) + n_e^2 + n_o^2 - 1` (variety dimension plus
/// group dimension minus the scalar stabilizer).
pub fn expected_tangent_dim(n_e: i64, n_o: i64) -> i64 {
    let d = n_e - n_o;
    2 * (n_e - d * d) + n_e * n_e + n_o * n_o - 1
}

/// Tangent-space dimension at a member: ambient dimension minus the rank
/// of the Jacobian of the defining equations (entries of `Y'X - X'Y - I`
/// and all `2x2` minors of `YX' - XY' - I`). For `n_e >= 2` the point must
/// sit on the rank-exactly-one stratum.
pub fn tangent_dim<F: Field>(f: &F, pt: &ModuliPoint<F>) -> Result<usize, ModuliError> {
    let ModuliPoint { x, y, xp, yp } = pt;
    let (ne, no) = check_shapes(x, y, xp, yp)?;
    if !membership(f, x, y, xp, yp)? {
        return Err(ModuliError::NotAMember);
    }
    let defect = rank_one_defect(f, x, y, xp, yp, ne)?;
    if ne >= 2 {
        let r = defect.rank(f);
        if r != 1 {
            return Err(ModuliError::NotRankOne(r));
        }
    }
    // Variables: X (ne*no), Y (ne*no), X' (no*ne), Y' (no*ne).
    let nvar = 4 * ne * no;
    let xvar = |i: usize, j: usize| i * no + j;
    let yvar = |i: usize, j: usize| ne * no + i * no + j;
    let xpvar = |i: usize, j: usize| 2 * ne * no + i * ne + j;
    let ypvar = |i: usize, j: usize| 3 * ne * no + i * ne + j;

    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    // d(Y'X - X'Y - I)_{ij} = sum_s [X_{sj} dY'_{is} - Y_{sj} dX'_{is}
    //                                + Y'_{is} dX_{sj} - X'_{is} dY_{sj}]
    for i in 0..no {
        for j in 0..no {
            let mut row = vec![f.zero(); nvar];
            for s in 0..ne {
                row[ypvar(i, s)] = f.add(&row[ypvar(i, s)], x.get(s, j));
                row[xpvar(i, s)] = f.sub(&row[xpvar(i, s)], y.get(s, j));
                row[xvar(s, j)] = f.add(&row[xvar(s, j)], yp.get(i, s));
                row[yvar(s, j)] = f.sub(&row[yvar(s, j)], xp.get(i, s));
            }
            rows.push(row);
        }
    }
    // Gradient of R_{ab} where R = YX' - XY' - I:
    // dR_{ab} = sum_s [X'_{sb} dY_{as} - Y'_{sb} dX_{as}
    //                  + Y_{as} dX'_{sb} - X_{as} dY'_{sb}]
    let grad_r = |a: usize, b: usize| -> Vec<F::Elem> {
        let mut g = vec![f.zero(); nvar];
        for s in 0..no {
            g[yvar(a, s)] = f.add(&g[yvar(a, s)], xp.get(s, b));
            g[xvar(a, s)] = f.sub(&g[xvar(a, s)], yp.get(s, b));
            g[xpvar(s, b)] = f.add(&g[xpvar(s, b)], y.get(a, s));
            g[ypvar(s, b)] = f.sub(&g[ypvar(s, b)], x.get(a, s));
        }
        g
    };
    // 2x2 minors of R: m = R_{ik} R_{jl} - R_{il} R_{jk}.
    for i in 0..ne {
        for j in i + 1..ne {
            for k in 0..ne {
                for l in k + 1..ne {
                    let mut row = vec![f.zero(); nvar];
                    let terms = [
                        (defect.get(j, l).clone(), grad_r(i, k)),
                        (defect.get(i, k).clone(), grad_r(j, l)),
                        (f.neg(defect.get(j, k)), grad_r(i, l)),
                        (f.neg(defect.get(i, l)), grad_r(j, k)),
                    ];
                    for (coef, grad) in terms {
                        if f.is_zero(&coef) {
                            continue;
                        }
                        for v in 0..nvar {
                            row[v] = f.add(&row[v], &f.mul(&coef, &grad[v]));
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let jac = Mat::from_rows(f, rows)?;
    Ok(nvar - jac.rank(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q_mat(q: &Rationals, rows: Vec<Vec<i64>>) -> Mat<Rationals> {
        Mat::from_rows(
            q,
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| q.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn membership_examples() {
        let q = Rationals;
        // (1,1) scalars.
        let m = |v: i64| q_mat(&q, vec![vec![v]]);
        assert!(membership(&q, &m(1), &m(0), &m(0), &m(1)).unwrap());
        assert!(!membership(&q, &m(1), &m(0), &m(1), &m(0)).unwrap());

        // The (2,1) fixture; YX' - XY' - I = [[-2, 1], [2, -1]] has
        // determinant zero.
        let x = q_mat(&q, vec![vec![1], vec![0]]);
        let y = q_mat(&q, vec![vec![0], vec![1]]);
        let xp = q_mat(&q, vec![vec![2, 0]]);
        let yp = q_mat(&q, vec![vec![1, -1]]);
        assert!(membership(&q, &x, &y, &xp, &yp).unwrap());

        // Shape mismatch.
        let bad = q_mat(&q, vec![vec![1, 2]]);
        assert!(matches!(
            membership(&q, &bad, &bad, &bad, &bad),
            Err(ModuliError::Shape(_))
        ));
    }

    #[test]
    fn degenerate_shapes() {
        // (1,0): the n_o-side condition is empty and YX' - XY' - I = -I_1
        // has rank 1, so the single empty tuple is a member.
        assert_eq!(count_exhaustive(1, 0, 3).unwrap(), 1);
        // (0,0): both sides empty.
        assert_eq!(count_exhaustive(0, 0, 3).unwrap(), 1);
    }

    #[test]
    fn count_exhaustive_closed_form() {
        for p in [2u64, 3, 5] {
            assert_eq!(count_exhaustive(1, 1, p).unwrap(), p * (p * p - 1), "p={p}");
        }
    }

    #[test]
    fn count_budget_guard() {
        assert!(matches!(
            count_exhaustive(2, 2, 101),
            Err(ModuliError::CountBudget(_))
        ));
    }

    #[test]
    fn search_finds_members_and_respects_n() {
        let f = PrimeField::new(5).unwrap();
        let pts = search(&f, 1, 1, 42, 500, 8).unwrap();
        assert!(!pts.is_empty());
        for pt in &pts {
            assert!(membership(&f, &pt.x, &pt.y, &pt.xp, &pt.yp).unwrap());
        }
        assert!(matches!(
            search(&f, 0, 1, 1, 10, 1),
            Err(ModuliError::OutsideN(0, 1))
        ));
    }

    #[test]
    fn search_is_deterministic_in_the_seed() {
        let f = PrimeField::new(7).unwrap();
        let a = search(&f, 2, 2, 9, 3000, 4).unwrap();
        let b = search(&f, 2, 2, 9, 3000, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tangent_dim_examples() {
        let q = Rationals;
        let m = |v: i64| q_mat(&q, vec![vec![v]]);
        let pt = ModuliPoint {
            x: m(1),
            y: m(0),
            xp: m(0),
            yp: m(1),
        };
        assert_eq!(tangent_dim(&q, &pt).unwrap(), 3);
        assert_eq!(expected_tangent_dim(1, 1), 3);

        let pt21 = ModuliPoint {
            x: q_mat(&q, vec![vec![1], vec![0]]),
            y: q_mat(&q, vec![vec![0], vec![1]]),
            xp: q_mat(&q, vec![vec![2, 0]]),
            yp: q_mat(&q, vec![vec![1, -1]]),
        };
        assert_eq!(tangent_dim(&q, &pt21).unwrap(), 6);
        assert_eq!(expected_tangent_dim(2, 1), 6);

        // Non-members are rejected.
        let bad = ModuliPoint {
            x: m(1),
            y: m(0),
            xp: m(1),
            yp: m(0),
        };
        assert_eq!(tangent_dim(&q, &bad).unwrap_err(), ModuliError::NotAMember);
    }

    #[test]
    fn expected_dimension_on_the_boundary_is_group_dimension() {
        // Boundary points n_e = (n_e - n_o)^2 carry a single orbit: the
        // upstairs dimension is n_e^2 + n_o^2 - 1.
        for (ne, no) in [(0i64, 0i64), (1, 0), (1, 2), (4, 2), (4, 6), (9, 6)] {
            assert_eq!(ne, (ne - no) * (ne - no));
            assert_eq!(expected_tangent_dim(ne, no), ne * ne + no * no - 1);
        }
    }

    #[test]
    fn rank_defect_never_vanishes_at_members() {
        // The trace identity forces rank(YX' - XY' - I) >= 1 whenever
        // n_e + n_o is nonzero in the field; conjecture probe at (1,1).
        let f = PrimeField::new(5).unwrap();
        let pts = search(&f, 1, 1, 3, 400, 10).unwrap();
        for pt in pts {
            let defect = rank_one_defect(&f, &pt.x, &pt.y, &pt.xp, &pt.yp, 1).unwrap();
            assert!(!defect.is_zero(&f));
        }
    }

    #[test]
    fn search_fallback_covers_larger_generator_counts() {
        // n_e >= 3 takes the rejection-sampling branch; (3,2) sits in N.
        let f3 = PrimeField::new(3).unwrap();
        let pts = search(&f3, 3, 2, 1, 60_000, 3).unwrap();
        assert!(!pts.is_empty());
        for pt in &pts {
            assert_eq!((pt.n_e(), pt.n_o()), (3, 2));
            assert!(membership(&f3, &pt.x, &pt.y, &pt.xp, &pt.yp).unwrap());
        }
    }

    #[test]
    fn membership_is_invariant_under_the_group_action() {
        // (X, Y, X', Y') -> (gXh^-1, gYh^-1, hX'g^-1, hY'g^-1) preserves
        // both defining conditions.
        use rand_chacha::ChaCha8Rng;
        use rand_core::SeedableRng;
        let f = PrimeField::new(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (ne, no) in [(2usize, 1usize), (2, 2), (1, 2)] {
            let pts = search(&f, ne, no, 21, 30_000, 3).unwrap();
            assert!(!pts.is_empty());
            for pt in &pts {
                // Sample invertible g (ne) and h (no).
                let (g, g_inv) = loop {
                    let g = Mat::from_fn(ne, ne, |_, _| f.sample(&mut rng));
                    if let Some(gi) = g.inverse(&f) {
                        break (g, gi);
                    }
                };
                let (h, h_inv) = loop {
                    let h = Mat::from_fn(no, no, |_, _| f.sample(&mut rng));
                    if let Some(hi) = h.inverse(&f) {
                        break (h, hi);
                    }
                };
                let x = g.mul(&f, &pt.x).unwrap().mul(&f, &h_inv).unwrap();
                let y = g.mul(&f, &pt.y).unwrap().mul(&f, &h_inv).unwrap();
                let xp = h.mul(&f, &pt.xp).unwrap().mul(&f, &g_inv).unwrap();
                let yp = h.mul(&f, &pt.yp).unwrap().mul(&f, &g_inv).unwrap();
                assert!(membership(&f, &x, &y, &xp, &yp).unwrap(), "({ne},{no})");
            }
        }
    }
}
