//! Exact arithmetic in the Grothendieck group of the quantum quadric.
//!
//! Two bases are in play: `B = {[O], [O(-1)], [O(-2)], [O(-3)]}` coming from
//! the standard generators, and `B' = {[O], [S], [Q], [P]}` built from the
//! structure sheaf and the classes of a line, a conic and a point module.
//! Classes are stored in `B'`; `B` is a view used for cross-checks. The
//! shift and Euler-form matrices in both bases are pinned here together
//! with the base-change identities relating them.

use crate::series::LaurentPoly;
use num::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KTheoryError {
    #[error("class is not normalized (need r = 1 and a = -2b)")]
    NotNormalized,
    #[error("normalization requires rank 1, got {0}")]
    RankNotOne(i64),
    #[error("invariants ({0}, {1}) are rejected: {2}")]
    BadInvariants(i64, i64, &'static str),
    #[error("coefficient overflows the class representation")]
    Overflow,
}

/// A class `r[O] + a[S] + b[Q] + c[P]` in the basis `B'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct K0Class {
    pub r: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl K0Class {
    pub fn new(r: i64, a: i64, b: i64, c: i64) -> Self {
        K0Class { r, a, b, c }
    }

    /// `[O]`.
    pub fn structure() -> Self {
        K0Class::new(1, 0, 0, 0)
    }
    /// `[S]`, the class of a line module.
    pub fn line() -> Self {
        K0Class::new(0, 1, 0, 0)
    }
    /// `[Q]`, the class of a conic module.
    pub fn conic() -> Self {
        K0Class::new(0, 0, 1, 0)
    }
    /// `[P]`, the class of a point module.
    pub fn point() -> Self {
        K0Class::new(0, 0, 0, 1)
    }

    pub fn coords(&self) -> [i64; 4] {
        [self.r, self.a, self.b, self.c]
    }

    /// Coordinates in the basis `B` of shifted structure classes.
    pub fn coords_in_b(&self) -> [i64; 4] {
        mat_vec(&base_change_b_from_bp(), &self.coords())
    }

    pub fn is_normalized(&self) -> bool {
        self.r == 1 && self.a == -2 * self.b
    }
}

pub type Mat4 = [[i64; 4]; 4];

/// Shift matrix in the basis `B`; first column comes from the minimal free
/// resolution of the trivial module.
pub fn m_sh_b() -> Mat4 {
    [[2, 1, 0, 0], [0, 0, 1, 0], [-2, 0, 0, 1], [1, 0, 0, 0]]
}

/// Euler form in the basis `B`, rows indexing the first argument.
pub fn m_chi_b() -> Mat4 {
    [[1, 0, 0, 0], [2, 1, 0, 0], [4, 2, 1, 0], [6, 4, 2, 1]]
}

/// Shift matrix in the basis `B'`.
pub fn m_sh_bp() -> Mat4 {
    [[1, 0, 0, 0], [-1, -1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]]
}

/// Euler form in the basis `B'`.
pub fn m_chi_bp() -> Mat4 {
    [[1, 1, 1, 1], [-1, 0, -1, 0], [-3, -1, -2, 0], [1, 0, 0, 0]]
}

/// Columns are the `B`-coordinates of `[O], [S], [Q], [P]`, read off the
/// minimal resolutions of line, conic and point modules.
pub fn base_change_b_from_bp() -> Mat4 {
    [[1, 1, 1, 1], [0, -1, 0, -1], [0, 0, -1, -1], [0, 0, 0, 1]]
}

/// All four printed matrices; construction validates the base-change
/// identities `m_sh_bp = P^-1 m_sh_b P` and `m_chi_bp = P^t m_chi_b P`.
pub fn matrices() -> (Mat4, Mat4, Mat4, Mat4) {
    assert!(base_change_identities_hold());
    (m_sh_b(), m_chi_b(), m_sh_bp(), m_chi_bp())
}

/// The base-change identities between the two matrix pairs.
pub fn base_change_identities_hold() -> bool {
    let p = base_change_b_from_bp();
    let p_inv = [[1, 1, 1, 1], [0, -1, 0, -1], [0, 0, -1, -1], [0, 0, 0, 1]];
    // P happens to be an involution; verify rather than assume.
    if mat_mul(&p, &p_inv) != identity4() {
        return false;
    }
    let sh_ok = mat_mul(&mat_mul(&p_inv, &m_sh_b()), &p) == m_sh_bp();
    let chi_ok = mat_mul(&mat_mul(&transpose4(&p), &m_chi_b()), &p) == m_chi_bp();
    sh_ok && chi_ok
}

fn identity4() -> Mat4 {
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
}

fn transpose4(m: &Mat4) -> Mat4 {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[j][i];
        }
    }
    out
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_vec(m: &Mat4, v: &[i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for i in 0..4 {
        out[i] = (0..4).map(|k| m[i][k] * v[k]).sum();
    }
    out
}

/// Shift a class by `d`, using the closed forms for `[M(2l)]` and
/// `[M(2l-1)]` (which agree with powers of the shift matrix).
pub fn shift(cls: &K0Class, d: i64) -> K0Class {
    let K0Class { r, a, b, c } = *cls;
    if d % 2 == 0 {
        let l = d / 2;
        K0Class::new(r, a, l * r + b, l * ((l + 1) * r + a + 2 * b) + c)
    } else {
        // d = 2l - 1
        let l = (d + 1) / 2;
        K0Class::new(r, -(r + a), l * r + a + b, l * (l * r + a + 2 * b) - b + c)
    }
}

/// The Euler form `chi(x, y)` in the basis `B'`; the first argument
/// indexes rows.
pub fn euler_chi(x: &K0Class, y: &K0Class) -> i64 {
    let m = m_chi_bp();
    let xv = x.coords();
    let yv = y.coords();
    let mut acc = 0;
    for i in 0..4 {
        for j in 0..4 {
            acc += xv[i] * m[i][j] * yv[j];
        }
    }
    acc
}

/// Euler form computed in the basis `B` from `B`-coordinates; used for
/// base-change cross-checks.
pub fn euler_chi_in_b(x: &K0Class, y: &K0Class) -> i64 {
    let m = m_chi_b();
    let xv = x.coords_in_b();
    let yv = y.coords_in_b();
    let mut acc = 0;
    for i in 0..4 {
        for j in 0..4 {
            acc += xv[i] * m[i][j] * yv[j];
        }
    }
    acc
}

/// Class of a characteristic polynomial via the expansion
/// `q = r + a(1-t) + b(1-t^2) + c(1-t^2)(1-t)  mod  (1-t^2)(1-t)^2`.
pub fn from_char_poly(q: &LaurentPoly) -> Result<K0Class, KTheoryError> {
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let to_i64 = |n: &BigInt| i64::try_from(n).map_err(|_| KTheoryError::Overflow);

    let r_big = q.eval(&one);
    let a_big: BigInt = (q.eval(&minus_one) - &r_big) / 2;

    let omt = LaurentPoly::one_minus_t();
    let omt2 = LaurentPoly::one_minus_t2();
    let r_poly = LaurentPoly::monomial(0, r_big.clone());
    let a_poly = LaurentPoly::monomial(0, a_big.clone()).mul(&omt);
    let g = q.sub(&r_poly).sub(&a_poly);
    let h2 = g
        .div_exact(&omt2)
        .expect("g vanishes at t = 1 and t = -1, so (1-t^2) divides it");
    let b_big = h2.eval(&one);
    let h3 = h2.sub(&LaurentPoly::monomial(0, b_big.clone()));
    let c_big = h3
        .div_exact(&omt)
        .expect("h3 vanishes at t = 1, so (1-t) divides it")
        .eval(&one);

    Ok(K0Class::new(
        to_i64(&r_big)?,
        to_i64(&a_big)?,
        to_i64(&b_big)?,
        to_i64(&c_big)?,
    ))
}

/// Invariants `(n_e, n_o) = (b - c, -c)` of a normalized class.
pub fn invariants(cls: &K0Class) -> Result<(i64, i64), KTheoryError> {
    if !cls.is_normalized() {
        return Err(KTheoryError::NotNormalized);
    }
    Ok((cls.b - cls.c, -cls.c))
}

/// The unique shift `d` making a rank-one class normalized, together with
/// the shifted class.
pub fn normalize(cls: &K0Class) -> Result<(i64, K0Class), KTheoryError> {
    if cls.r != 1 {
        return Err(KTheoryError::RankNotOne(cls.r));
    }
    let d = -(cls.a + 2 * cls.b);
    let shifted = shift(cls, d);
    debug_assert!(shifted.is_normalized());
    Ok((d, shifted))
}

/// `dim H^1` of a normalized rank-one object at shifts `0, -1, -2, -3`:
/// `(n_e - 1, n_o, n_e, n_o)`. Rejects `(0, 0)` and pairs outside `N`.
pub fn cohomology_dims(n_e: u64, n_o: u64) -> Result<(u64, u64, u64, u64), KTheoryError> {
    if (n_e, n_o) == (0, 0) {
        return Err(KTheoryError::BadInvariants(
            0,
            0,
            "the trivial class has no quiver data",
        ));
    }
    let d = n_e as i64 - n_o as i64;
    if (n_e as i64) < d * d {
        return Err(KTheoryError::BadInvariants(
            n_e as i64,
            n_o as i64,
            "outside the invariant range N",
        ));
    }
    Ok((n_e - 1, n_o, n_e, n_o))
}

/// `chi(O, I(l))` for a normalized class with the given invariants:
/// `(l+2)^2/4 - n_e` for even `l`, `(l+1)(l+3)/4 - n_o` for odd `l`.
pub fn chi_o_shift(n_e: i64, n_o: i64, l: i64) -> i64 {
    if l % 2 == 0 {
        (l + 2) * (l + 2) / 4 - n_e
    } else {
        (l + 1) * (l + 3) / 4 - n_o
    }
}

/// `dim Ext^1` of a normalized rank-one object with itself:
/// `2(n_e - (n_e - n_o)^2)`.
pub fn ext1_selfdim(n_e: i64, n_o: i64) -> i64 {
    2 * (n_e - (n_e - n_o) * (n_e - n_o))
}

/// Rank and degree `(r, 2a + 4b)` of the restriction to the divisor.
pub fn restriction_data(cls: &K0Class) -> (i64, i64) {
    (cls.r, 2 * cls.a + 4 * cls.b)
}

/// A line bundle `O(m, n)` on the linear-case quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleMN {
    pub m: i64,
    pub n: i64,
}

/// Normalize `O(m, n)`: the shift `d = -m-n` lands on `O(u, -u)` with
/// `u = (m-n)/2` for even `m-n` and `u = (n-m-1)/2` otherwise, and the
/// invariants are `(u^2, u(u+1))`.
pub fn linear_normalize(mn: LineBundleMN) -> (i64, i64, (i64, i64)) {
    let LineBundleMN { m, n } = mn;
    let d = -m - n;
    let u = if (m - n).rem_euclid(2) == 0 {
        (m - n) / 2
    } else {
        // (n - m - 1) is even here.
        (n - m - 1) / 2
    };
    (d, u, (u * u, u * (u + 1)))
}
