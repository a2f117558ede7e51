//! Low-degree normal forms in cubic algebras of type A (including the
//! enveloping algebra `H_c`), the relation matrix, divisor equations on
//! the point scheme, and builders for point/line/conic representations of
//! the 4-vertex quiver.
//!
//! The two cubic relations rewrite the leading words `yyx` and `xxy`, so
//! normal forms exist in closed form through degree three; that is all the
//! representation builders need. Rewriting requires the type-A parameter
//! `a` to be nonzero.

use crate::field::{Field, FieldError};
use crate::matrix::{Mat, MatError};
use crate::quiver::QuiverRep;
use num::{BigInt, BigRational, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("type-A parameter a must be nonzero for the rewriting system")]
    ZeroLeadingParameter,
    #[error("normal forms are only available through degree 3, got degree {0}")]
    DegreeTooLarge(usize),
    #[error("monomial {0:?} must be a word in x and y")]
    BadWord(String),
    #[error("projective point coordinates (0:0) are not allowed")]
    DegeneratePoint,
    #[error("the zero form does not cut out a module")]
    ZeroForm,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// Which cubic algebra is in play. `H_c` is the type-A point
/// `(a, b, c) = (1, -2, 0)` but keeps its own tag because several
/// membership criteria are special to it.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraKind {
    EnvelopingHc,
    TypeA {
        a: BigRational,
        b: BigRational,
        c: BigRational,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    kind: AlgebraKind,
}

/// A degree-two form as coefficients over the basis `(x^2, xy, yx, y^2)`.
pub type Degree2Form = [BigRational; 4];

impl AlgebraSpec {
    pub fn enveloping_hc() -> Self {
        AlgebraSpec {
            kind: AlgebraKind::EnvelopingHc,
        }
    }

    pub fn type_a(a: BigRational, b: BigRational, c: BigRational) -> Result<Self, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroLeadingParameter);
        }
        Ok(AlgebraSpec {
            kind: AlgebraKind::TypeA { a, b, c },
        })
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn is_enveloping(&self) -> bool {
        matches!(self.kind, AlgebraKind::EnvelopingHc)
    }

    /// The `(a, b, c)` parameters; `H_c` reads as `(1, -2, 0)`.
    pub fn abc(&self) -> (BigRational, BigRational, BigRational) {
        match &self.kind {
            AlgebraKind::EnvelopingHc => (
                BigRational::from_integer(BigInt::from(1)),
                BigRational::from_integer(BigInt::from(-2)),
                BigRational::from_integer(BigInt::from(0)),
            ),
            AlgebraKind::TypeA { a, b, c } => (a.clone(), b.clone(), c.clone()),
        }
    }

    /// Entries of the relation matrix `M_A` (with `f = M_A (x, y)^t`) as
    /// coefficient vectors over the degree-2 basis `(x^2, xy, yx, y^2)`.
    pub fn ma_matrix(&self) -> [[Degree2Form; 2]; 2] {
        let (a, b, c) = self.abc();
        let z = || BigRational::zero();
        [
            [
                // a y^2 + c x^2
                [c.clone(), z(), z(), a.clone()],
                // a xy + b yx
                [z(), a.clone(), b.clone(), z()],
            ],
            [
                // b xy + a yx
                [z(), b.clone(), a.clone(), z()],
                // a x^2 + c y^2
                [a.clone(), z(), z(), c],
            ],
        ]
    }
}

/// Ordered monomial basis of the degree-`m` piece, `m <= 3`. Degree three
/// excludes the two leading words `xxy` and `yyx` that the relations
/// rewrite; the dimensions are 1, 2, 4, 6.
pub fn basis(degree: usize) -> Result<Vec<String>, AlgebraError> {
    let words: Vec<&str> = match degree {
        0 => vec![""],
        1 => vec!["x", "y"],
        2 => vec!["xx", "xy", "yx", "yy"],
        3 => vec!["xxx", "xyx", "xyy", "yxx", "yxy", "yyy"],
        d => return Err(AlgebraError::DegreeTooLarge(d)),
    };
    Ok(words.into_iter().map(String::from).collect())
}

/// Normal form of a word of degree `<= 3` as a coefficient vector over
/// `basis(degree)`. Idempotent on basis words.
pub fn normal_form(word: &str, spec: &AlgebraSpec) -> Result<Vec<BigRational>, AlgebraError> {
    if word.chars().any(|ch| ch != 'x' && ch != 'y') {
        return Err(AlgebraError::BadWord(word.to_string()));
    }
    let degree = word.len();
    let b = basis(degree)?;
    let mut out = vec![BigRational::zero(); b.len()];
    let (pa, pb, pc) = spec.abc();
    match word {
        // y^2 x = -(b/a) yxy - xy^2 - (c/a) x^3
        "yyx" => {
            let ba = &pb / &pa;
            let ca = &pc / &pa;
            add_to(&mut out, &b, "yxy", -ba);
            add_to(
                &mut out,
                &b,
                "xyy",
                -BigRational::from_integer(BigInt::from(1)),
            );
            add_to(&mut out, &b, "xxx", -ca);
        }
        // x^2 y = -(b/a) xyx - yx^2 - (c/a) y^3
        "xxy" => {
            let ba = &pb / &pa;
            let ca = &pc / &pa;
            add_to(&mut out, &b, "xyx", -ba);
            add_to(
                &mut out,
                &b,
                "yxx",
                -BigRational::from_integer(BigInt::from(1)),
            );
            add_to(&mut out, &b, "yyy", -ca);
        }
        w => add_to(&mut out, &b, w, BigRational::from_integer(BigInt::from(1))),
    }
    Ok(out)
}

fn add_to(out: &mut [BigRational], basis: &[String], word: &str, coeff: BigRational) {
    let idx = basis
        .iter()
        .position(|w| w == word)
        .expect("rewriting lands in the basis");
    out[idx] += coeff;
}

/// The transposed relation matrix substituted with linear maps:
/// `x^2, xy, yx, y^2` become `X'X, Y'X, X'Y, Y'Y` where `X, Y: V_-3 -> V_-2`
/// and `X', Y': V_-2 -> V_-1`. The result is the `2 dim(V_-1) x 2 dim(V_-3)`
/// block matrix whose cokernel presents vertex 0 under induction.
pub fn ma_substituted<F: Field>(
    spec: &AlgebraSpec,
    f: &F,
    x: &Mat<F>,
    y: &Mat<F>,
    xp: &Mat<F>,
    yp: &Mat<F>,
) -> Result<Mat<F>, AlgebraError> {
    if x.rows() != y.rows()
        || x.cols() != y.cols()
        || xp.rows() != yp.rows()
        || xp.cols() != yp.cols()
        || xp.cols() != x.rows()
    {
        return Err(AlgebraError::Mat(MatError::Shape(
            "need X, Y: V-3 -> V-2 and X', Y': V-2 -> V-1".into(),
        )));
    }
    let products = [
        xp.mul(f, x)?, // x^2
        yp.mul(f, x)?, // xy
        xp.mul(f, y)?, // yx
        yp.mul(f, y)?, // y^2
    ];
    let ma = spec.ma_matrix();
    let rows = xp.rows();
    let cols = x.cols();
    let substitute = |entry: &Degree2Form| -> Result<Mat<F>, AlgebraError> {
        let mut acc = Mat::zero(f, rows, cols);
        for (coeff, prod) in entry.iter().zip(&products) {
            if coeff.is_zero() {
                continue;
            }
            let c = f.from_ratio(coeff.numer(), coeff.denom())?;
            acc = acc.add(f, &prod.scale(f, &c))?;
        }
        Ok(acc)
    };
    // Block (i, j) carries the transposed entry M_A[j][i].
    let b00 = substitute(&ma[0][0])?;
    let b01 = substitute(&ma[1][0])?;
    let b10 = substitute(&ma[0][1])?;
    let b11 = substitute(&ma[1][1])?;
    Ok(Mat::block2x2(f, [[&b00, &b01], [&b10, &b11]])?)
}

/// Value of the point-scheme equation at
/// `p = ((x0 : y0), (x1 : y1))`; zero exactly when `p` lies on the divisor.
/// For `H_c` the equation is `(x0 y1 - x1 y0)^2`; for type A it is
/// `(c^2 - b^2) x0 y0 x1 y1 + a x0^2 (c x1^2 - b y1^2) + a y0^2 (c y1^2 - b x1^2)`.
pub fn e_equation<F: Field>(
    spec: &AlgebraSpec,
    f: &F,
    p0: (&F::Elem, &F::Elem),
    p1: (&F::Elem, &F::Elem),
) -> Result<F::Elem, AlgebraError> {
    let (x0, y0) = p0;
    let (x1, y1) = p1;
    if (f.is_zero(x0) && f.is_zero(y0)) || (f.is_zero(x1) && f.is_zero(y1)) {
        return Err(AlgebraError::DegeneratePoint);
    }
    match &spec.kind {
        AlgebraKind::EnvelopingHc => {
            let d = f.sub(&f.mul(x0, y1), &f.mul(x1, y0));
            Ok(f.mul(&d, &d))
        }
        AlgebraKind::TypeA { a, b, c } => {
            let conv = |r: &BigRational| f.from_ratio(r.numer(), r.denom());
            let (a, b, c) = (conv(a)?, conv(b)?, conv(c)?);
            let c2_b2 = f.sub(&f.mul(&c, &c), &f.mul(&b, &b));
            let term1 = f.mul(&c2_b2, &f.mul(&f.mul(x0, y0), &f.mul(x1, y1)));
            let x0sq = f.mul(x0, x0);
            let y0sq = f.mul(y0, y0);
            let x1sq = f.mul(x1, x1);
            let y1sq = f.mul(y1, y1);
            let term2 = f.mul(
                &f.mul(&a, &x0sq),
                &f.sub(&f.mul(&c, &x1sq), &f.mul(&b, &y1sq)),
            );
            let term3 = f.mul(
                &f.mul(&a, &y0sq),
                &f.sub(&f.mul(&c, &y1sq), &f.mul(&b, &x1sq)),
            );
            Ok(f.add(&f.add(&term1, &term2), &term3))
        }
    }
}

/// Quotient of a coordinate space by a subspace, with the canonical
/// (echelon) complement as basis. `reduce` maps an ambient vector to its
/// quotient coordinates.
struct Quotient<F: Field> {
    rref_rows: Mat<F>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    fn by_span(f: &F, ambient_dim: usize, spanning: &[Vec<F::Elem>]) -> Self {
        let rows = Mat::from_rows(f, spanning.to_vec()).expect("span rows share the ambient dim");
        let (rref_rows, pivots) = rows.rref(f);
        let free = (0..ambient_dim).filter(|j| !pivots.contains(j)).collect();
        Quotient {
            rref_rows,
            pivots,
            free,
        }
    }

    fn dim(&self) -> usize {
        self.free.len()
    }

    fn reduce(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let coef = w[pc].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (j, entry) in w.iter_mut().enumerate() {
                *entry = f.sub(entry, &f.mul(&coef, self.rref_rows.get(row, j)));
            }
        }
        self.free.iter().map(|&j| w[j].clone()).collect()
    }
}

/// Left multiplication by a generator on `A_1 -> A_2` in the monomial
/// bases (degree-2 words need no rewriting).
fn left_mul_deg1_to_deg2(gen: char, v1: usize) -> usize {
    // index of gen * basis1[v1] in basis2 = ["xx","xy","yx","yy"]
    match (gen, v1) {
        ('x', 0) => 0, // x*x
        ('x', 1) => 1, // x*y
        ('y', 0) => 2, // y*x
        ('y', 1) => 3, // y*y
        _ => unreachable!(),
    }
}

/// Representation of the quiver attached to the cyclic module `A/wA` for a
/// form `w` of degree one (line) or two (conic): spaces
/// `(A/Aw)_2', (A/Aw)_1', (A/Aw)_0', 0` with the duals of left
/// multiplication as arrows. Dimensions are `(2,1,1,0)` for lines and
/// `(3,2,1,0)` for conics.
fn shape_rep<F: Field>(
    f: &F,
    spec: &AlgebraSpec,
    w_deg: usize,
    w: &[F::Elem],
) -> Result<QuiverRep<F>, AlgebraError> {
    let _ = spec; // degree <= 2 quotients never trigger rewriting
    if w.iter().all(|c| f.is_zero(c)) {
        return Err(AlgebraError::ZeroForm);
    }
    // Degree components of the left ideal Aw.
    type Spans<E> = (Vec<Vec<E>>, Vec<Vec<E>>);
    let (span1, span2): Spans<F::Elem> = match w_deg {
        1 => {
            // (Aw)_1 = span{w}; (Aw)_2 = span{x w, y w}.
            let xw = vec![w[0].clone(), w[1].clone(), f.zero(), f.zero()];
            let yw = vec![f.zero(), f.zero(), w[0].clone(), w[1].clone()];
            (vec![w.to_vec()], vec![xw, yw])
        }
        2 => (Vec::new(), vec![w.to_vec()]),
        d => return Err(AlgebraError::DegreeTooLarge(d)),
    };
    let q1 = Quotient::by_span(f, 2, &span1);
    let q2 = Quotient::by_span(f, 4, &span2);

    // Matrices of left multiplication on the quotients.
    let mul_0_to_1 = |gen: char| -> Mat<F> {
        // 1 maps to the generator itself.
        let v = match gen {
            'x' => vec![f.one(), f.zero()],
            _ => vec![f.zero(), f.one()],
        };
        let col = q1.reduce(f, &v);
        Mat::from_fn(q1.dim(), 1, |i, _| col[i].clone())
    };
    let mul_1_to_2 = |gen: char| -> Mat<F> {
        // Columns run over the quotient basis of (A/Aw)_1, i.e. the free
        // coordinates of q1.
        let cols: Vec<Vec<F::Elem>> = q1
            .free
            .iter()
            .map(|&j| {
                let mut v = vec![f.zero(); 4];
                v[left_mul_deg1_to_deg2(gen, j)] = f.one();
                q2.reduce(f, &v)
            })
            .collect();
        Mat::from_fn(q2.dim(), cols.len(), |i, j| cols[j][i].clone())
    };

    // Dualizing reverses the arrows: the rep map at level -3 is the
    // transpose of multiplication (A/Aw)_1 -> (A/Aw)_2.
    let x3 = mul_1_to_2('x').transpose();
    let y3 = mul_1_to_2('y').transpose();
    let x2 = mul_0_to_1('x').transpose();
    let y2 = mul_0_to_1('y').transpose();
    let dims = [q2.dim(), q1.dim(), 1, 0];
    let x1 = Mat::zero(f, 0, 1);
    let y1 = Mat::zero(f, 0, 1);
    Ok(QuiverRep::new(f, dims, [x3, x2, x1], [y3, y2, y1])
        .expect("quotient dimensions and map shapes agree by construction"))
}

/// Representation of a line module `A/uA`, `u = u0 x + u1 y` nonzero;
/// dimension vector `(2, 1, 1, 0)`.
pub fn line_rep<F: Field>(
    f: &F,
    spec: &AlgebraSpec,
    u: &[F::Elem; 2],
) -> Result<QuiverRep<F>, AlgebraError> {
    shape_rep(f, spec, 1, u)
}

/// Representation of a conic module `A/wA` for a degree-two form `w` over
/// the basis `(x^2, xy, yx, y^2)`; dimension vector `(3, 2, 1, 0)`.
pub fn conic_rep<F: Field>(
    f: &F,
    spec: &AlgebraSpec,
    w: &[F::Elem; 4],
) -> Result<QuiverRep<F>, AlgebraError> {
    shape_rep(f, spec, 2, w)
}

/// The canonical central-conic form `z = xy - yx` of the enveloping
/// algebra, over any field.
pub fn z_form<F: Field>(f: &F) -> [F::Elem; 4] {
    [f.zero(), f.one(), f.from_i64(-1), f.zero()]
}

/// Point representation with scalar maps `(alpha_i, beta_i)`,
/// `(alpha_i : beta_i) = pr_1(sigma^i p)` for `i = -3..0`; dimension
/// vector `(1, 1, 1, 1)`. For `H_c` the orbit is constant; for type A the
/// orbit is caller-supplied data.
pub fn point_rep<F: Field>(
    f: &F,
    orbit: &[(F::Elem, F::Elem); 4],
) -> Result<QuiverRep<F>, AlgebraError> {
    if orbit.iter().any(|(a, b)| f.is_zero(a) && f.is_zero(b)) {
        return Err(AlgebraError::DegeneratePoint);
    }
    let scalar = |e: &F::Elem| Mat::from_fn(1, 1, |_, _| e.clone());
    let x = [
        scalar(&orbit[0].0),
        scalar(&orbit[1].0),
        scalar(&orbit[2].0),
    ];
    let y = [
        scalar(&orbit[0].1),
        scalar(&orbit[1].1),
        scalar(&orbit[2].1),
    ];
    Ok(QuiverRep::new(f, [1, 1, 1, 1], x, y).expect("scalar shapes are coherent"))
}

/// Constant-orbit point representation, the `H_c` case where the
/// restriction of `sigma` to the point scheme is the identity.
pub fn point_rep_constant<F: Field>(
    f: &F,
    alpha: &F::Elem,
    beta: &F::Elem,
) -> Result<QuiverRep<F>, AlgebraError> {
    let orbit = [
        (alpha.clone(), beta.clone()),
        (alpha.clone(), beta.clone()),
        (alpha.clone(), beta.clone()),
        (alpha.clone(), beta.clone()),
    ];
    point_rep(f, &orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::quiver;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn type_a(a: i64, b: i64, c: i64) -> AlgebraSpec {
        AlgebraSpec::type_a(rat(a), rat(b), rat(c)).unwrap()
    }

    #[test]
    fn type_a_requires_nonzero_a() {
        assert_eq!(
            AlgebraSpec::type_a(rat(0), rat(1), rat(1)).unwrap_err(),
            AlgebraError::ZeroLeadingParameter
        );
    }

    #[test]
    fn normal_form_hc() {
        let hc = AlgebraSpec::enveloping_hc();
        let nf = normal_form("yyx", &hc).unwrap();
        // 2 yxy - xy^2 over basis ["xxx","xyx","xyy","yxx","yxy","yyy"].
        assert_eq!(nf, vec![rat(0), rat(0), rat(-1), rat(0), rat(2), rat(0)]);
        let nf = normal_form("xxy", &hc).unwrap();
        assert_eq!(nf, vec![rat(0), rat(2), rat(0), rat(-1), rat(0), rat(0)]);
    }

    #[test]
    fn normal_form_fixes_basis_words() {
        let hc = AlgebraSpec::enveloping_hc();
        let nf = normal_form("xy", &hc).unwrap();
        assert_eq!(nf, vec![rat(0), rat(1), rat(0), rat(0)]);
        for w in basis(3).unwrap() {
            let nf = normal_form(&w, &hc).unwrap();
            let expected: Vec<BigRational> = basis(3)
                .unwrap()
                .iter()
                .map(|b| if b == &w { rat(1) } else { rat(0) })
                .collect();
            assert_eq!(nf, expected);
        }
        assert!(normal_form("xyzw", &hc).is_err());
        assert!(normal_form("xxxx", &hc).is_err());
    }

    #[test]
    fn normal_form_type_a_example() {
        let spec = type_a(1, 1, 1);
        let nf = normal_form("yyx", &spec).unwrap();
        // -yxy - xy^2 - x^3
        assert_eq!(nf, vec![rat(-1), rat(0), rat(-1), rat(0), rat(-1), rat(0)]);
    }

    #[test]
    fn graded_dims_match_ha() {
        for m in 0..=3 {
            let expected = crate::series::ha_coefficient(m as i64);
            assert_eq!(BigInt::from(basis(m).unwrap().len()), expected);
        }
    }

    #[test]
    fn ma_substituted_scalars() {
        let q = Rationals;
        let hc = AlgebraSpec::enveloping_hc();
        let m = |v: i64| Mat::from_fn(1, 1, |_, _| q.from_i64(v));
        // (X, Y, X', Y') = (1, 0, 0, 1): the transposed relation matrix is
        // [[Y'Y, X'Y - 2 Y'X], [Y'X - 2 X'Y, X'X]] = [[0, -2], [1, 0]].
        let block = ma_substituted(&hc, &q, &m(1), &m(0), &m(0), &m(1)).unwrap();
        let expected = Mat::from_rows(
            &q,
            vec![
                vec![q.from_i64(0), q.from_i64(-2)],
                vec![q.from_i64(1), q.from_i64(0)],
            ],
        )
        .unwrap();
        assert_eq!(block, expected);

        // Type A with all scalars 1: [[a+c, a+b], [a+b, a+c]].
        let spec = type_a(1, 2, 3);
        let block = ma_substituted(&spec, &q, &m(1), &m(1), &m(1), &m(1)).unwrap();
        let expected = Mat::from_rows(
            &q,
            vec![
                vec![q.from_i64(4), q.from_i64(3)],
                vec![q.from_i64(3), q.from_i64(4)],
            ],
        )
        .unwrap();
        assert_eq!(block, expected);

        // Zero maps give the zero block.
        let block = ma_substituted(&hc, &q, &m(0), &m(0), &m(0), &m(0)).unwrap();
        assert!(block.is_zero(&q));
    }

    #[test]
    fn e_equation_examples() {
        let q = Rationals;
        let hc = AlgebraSpec::enveloping_hc();
        let one = q.from_i64(1);
        let zero = q.from_i64(0);
        assert_eq!(
            e_equation(&hc, &q, (&one, &one), (&one, &one)).unwrap(),
            zero
        );
        assert_eq!(
            e_equation(&hc, &q, (&one, &zero), (&zero, &one)).unwrap(),
            one
        );
        let spec = type_a(1, 2, 3);
        assert_eq!(
            e_equation(&spec, &q, (&one, &zero), (&one, &zero)).unwrap(),
            q.from_i64(3)
        );
        assert!(e_equation(&hc, &q, (&zero, &zero), (&one, &one)).is_err());
    }

    #[test]
    fn e_equation_vanishes_on_the_diagonal_for_hc() {
        let hc = AlgebraSpec::enveloping_hc();
        let q = Rationals;
        let f5 = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = q.sample(&mut rng);
            let b = q.sample(&mut rng);
            if q.is_zero(&a) && q.is_zero(&b) {
                continue;
            }
            let v = e_equation(&hc, &q, (&a, &b), (&a, &b)).unwrap();
            assert!(q.is_zero(&v));
        }
        for _ in 0..50 {
            let a = f5.sample(&mut rng);
            let b = f5.sample(&mut rng);
            if f5.is_zero(&a) && f5.is_zero(&b) {
                continue;
            }
            let v = e_equation(&hc, &f5, (&a, &b), (&a, &b)).unwrap();
            assert!(f5.is_zero(&v));
        }
    }

    #[test]
    fn conic_rep_dimensions_and_relations() {
        let q = Rationals;
        let hc = AlgebraSpec::enveloping_hc();
        let rep = conic_rep(&q, &hc, &z_form(&q)).unwrap();
        assert_eq!(rep.dims(), [3, 2, 1, 0]);
        assert!(quiver::check_relations(&rep, &hc, &q).unwrap());

        // x^2 is not a leading-term pathology: the quotient basis of
        // (A/A x^2)_2 is {xy, yx, y^2}.
        let w = [q.from_i64(1), q.from_i64(0), q.from_i64(0), q.from_i64(0)];
        let rep = conic_rep(&q, &hc, &w).unwrap();
        assert_eq!(rep.dims(), [3, 2, 1, 0]);
        assert!(quiver::check_relations(&rep, &hc, &q).unwrap());

        let zero = [q.from_i64(0), q.from_i64(0), q.from_i64(0), q.from_i64(0)];
        assert_eq!(
            conic_rep(&q, &hc, &zero).unwrap_err(),
            AlgebraError::ZeroForm
        );
    }

    #[test]
    fn line_rep_dimensions_and_relations() {
        let q = Rationals;
        let hc = AlgebraSpec::enveloping_hc();
        let rep = line_rep(&q, &hc, &[q.from_i64(1), q.from_i64(0)]).unwrap();
        assert_eq!(rep.dims(), [2, 1, 1, 0]);
        assert!(quiver::check_relations(&rep, &hc, &q).unwrap());

        let spec = type_a(1, 1, 1);
        let rep = line_rep(&q, &spec, &[q.from_i64(2), q.from_i64(-3)]).unwrap();
        assert_eq!(rep.dims(), [2, 1, 1, 0]);
        assert!(quiver::check_relations(&rep, &spec, &q).unwrap());
    }

    #[test]
    fn point_rep_relations() {
        let q = Rationals;
        let hc = AlgebraSpec::enveloping_hc();
        let rep = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(1)).unwrap();
        assert_eq!(rep.dims(), [1, 1, 1, 1]);
        assert!(quiver::check_relations(&rep, &hc, &q).unwrap());

        let rep = point_rep_constant(&q, &q.from_i64(1), &q.from_i64(0)).unwrap();
        assert!(quiver::check_relations(&rep, &hc, &q).unwrap());

        assert!(point_rep_constant(&q, &q.from_i64(0), &q.from_i64(0)).is_err());
    }
}
