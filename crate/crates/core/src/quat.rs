//! Quaternion arithmetic, orthonormal bases, the Cayley-Dickson split and the
//! complex-modulus / complex-argument polar form.
//!
//! A quaternion `q = a + b i + c j + d k` can be written as a pair of complex
//! numbers, `q = z1 + z2 j` with `z1 = a + b i`, `z2 = c + d i` (the
//! Cayley-Dickson form), and further as `q = A exp(B j)` with *complex*
//! modulus `A` and *complex* argument `B` satisfying `z1 = A cos B`,
//! `z2 = A sin B`. The polar form is degenerate exactly where
//! `z1^2 + z2^2 = 0` with `q != 0`; [`cdpolar`] reports that case as an error
//! instead of returning meaningless values.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Construction tolerance for unit norm and axis orthogonality.
pub const AXIS_TOL: f64 = 1e-12;

/// Relative threshold on `|z1^2 + z2^2|` below which the polar form is
/// treated as degenerate.
pub const POLAR_DEGENERACY_EPS: f64 = 1e-12;

/// Errors from quaternion construction and decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuatError {
    /// Inverse of the zero quaternion requested.
    ZeroInverse,
    /// `z1^2 + z2^2` vanishes relative to `|q|^2`: the complex modulus does
    /// not exist for this quaternion.
    DegeneratePolar,
    /// An axis was not a unit pure quaternion within [`AXIS_TOL`].
    NotUnitPure { scalar: f64, norm: f64 },
    /// Two axes were not orthogonal: `S(xi*mu)` exceeded [`AXIS_TOL`].
    NonOrthogonalAxes { dot: f64 },
}

impl fmt::Display for QuatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuatError::ZeroInverse => write!(f, "zero quaternion has no inverse"),
            QuatError::DegeneratePolar => {
                write!(f, "degenerate input: z1^2 + z2^2 vanishes, no complex modulus exists")
            }
            QuatError::NotUnitPure { scalar, norm } => write!(
                f,
                "axis is not a unit pure quaternion (scalar part {scalar}, norm {norm})"
            ),
            QuatError::NonOrthogonalAxes { dot } => {
                write!(f, "axes are not orthogonal (S(xi*mu) = {dot})")
            }
        }
    }
}

impl core::error::Error for QuatError {}

/// A quaternion `a + b i + c j + d k` over `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    /// Real scalar embedded as a quaternion.
    #[inline]
    pub const fn scalar(a: f64) -> Self {
        Self::new(a, 0.0, 0.0, 0.0)
    }

    /// Scalar part `S(q) = a`.
    #[inline]
    pub fn scalar_part(self) -> f64 {
        self.a
    }

    /// Vector part `V(q) = q - S(q)`.
    #[inline]
    pub fn vector_part(self) -> Self {
        Self::new(0.0, self.b, self.c, self.d)
    }

    /// Conjugate `a - b i - c j - d k`.
    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    /// Squared modulus `a^2 + b^2 + c^2 + d^2 = q * conj(q)`.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Modulus `|q|`.
    #[inline]
    pub fn abs(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Inverse `conj(q) / |q|^2`; errors on the zero quaternion.
    pub fn inverse(self) -> Result<Self, QuatError> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(QuatError::ZeroInverse);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Euclidean inner product of `R^4` component vectors.
    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    /// Largest absolute component, used for scale-relative comparisons.
    pub fn max_abs_component(self) -> f64 {
        let mut m = if self.a < 0.0 { -self.a } else { self.a };
        for v in [self.b, self.c, self.d] {
            let av = if v < 0.0 { -v } else { v };
            if av > m {
                m = av;
            }
        }
        m
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Hamilton product. Non-commutative: `i j = k` but `j i = -k`.
impl Mul for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

/// A pure quaternion (zero scalar part) of unit modulus, used as a transform
/// axis or an embedding axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPureQuaternion {
    q: Quaternion,
}

impl UnitPureQuaternion {
    pub const I: Self = Self { q: Quaternion::I };
    pub const J: Self = Self { q: Quaternion::J };
    pub const K: Self = Self { q: Quaternion::K };

    /// Build from vector components `(b, c, d)`; the scalar part is exactly
    /// zero. Fails unless `| |q| - 1 | <= AXIS_TOL`.
    pub fn new(b: f64, c: f64, d: f64) -> Result<Self, QuatError> {
        Self::from_quaternion(Quaternion::new(0.0, b, c, d))
    }

    /// Build from a quaternion whose scalar part must be exactly zero.
    pub fn from_quaternion(q: Quaternion) -> Result<Self, QuatError> {
        let norm = q.abs();
        if q.a != 0.0 || libm::fabs(norm - 1.0) > AXIS_TOL {
            return Err(QuatError::NotUnitPure { scalar: q.a, norm });
        }
        Ok(Self { q })
    }

    #[inline]
    pub fn as_quaternion(self) -> Quaternion {
        self.q
    }
}

impl From<UnitPureQuaternion> for Quaternion {
    fn from(u: UnitPureQuaternion) -> Self {
        u.q
    }
}

/// An orthonormal quaternion basis `(1, xi, mu, xi*mu)` built from two
/// orthogonal unit pure axes.
///
/// For unit pure `xi`, `mu` the product `xi*mu` is again unit pure exactly
/// when `S(xi*mu) = 0`, which is the orthogonality condition enforced here;
/// the four elements are then mutually orthogonal under the Euclidean inner
/// product on `R^4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionBasis {
    xi: UnitPureQuaternion,
    mu: UnitPureQuaternion,
    ximu: Quaternion,
}

impl QuaternionBasis {
    pub fn new(xi: UnitPureQuaternion, mu: UnitPureQuaternion) -> Result<Self, QuatError> {
        let ximu = xi.as_quaternion() * mu.as_quaternion();
        let dot = ximu.scalar_part();
        if libm::fabs(dot) > AXIS_TOL {
            return Err(QuatError::NonOrthogonalAxes { dot });
        }
        Ok(Self { xi, mu, ximu })
    }

    /// The standard basis `(1, i, j, k)` with `xi = i`, `mu = j`.
    pub fn standard() -> Self {
        Self {
            xi: UnitPureQuaternion::I,
            mu: UnitPureQuaternion::J,
            ximu: Quaternion::K,
        }
    }

    #[inline]
    pub fn xi(&self) -> UnitPureQuaternion {
        self.xi
    }

    #[inline]
    pub fn mu(&self) -> UnitPureQuaternion {
        self.mu
    }

    /// The product element `xi * mu`.
    #[inline]
    pub fn ximu(&self) -> Quaternion {
        self.ximu
    }

    /// Coefficients of `q` on `(1, xi, mu, xi*mu)`.
    pub fn resolve(&self, q: Quaternion) -> [f64; 4] {
        [
            q.scalar_part(),
            q.dot(self.xi.as_quaternion()),
            q.dot(self.mu.as_quaternion()),
            q.dot(self.ximu),
        ]
    }

    /// Rebuild a quaternion from coefficients on `(1, xi, mu, xi*mu)`.
    pub fn assemble(&self, w: [f64; 4]) -> Quaternion {
        Quaternion::scalar(w[0])
            + self.xi.as_quaternion().scale(w[1])
            + self.mu.as_quaternion().scale(w[2])
            + self.ximu.scale(w[3])
    }
}

/// The two complex coefficients of the Cayley-Dickson form `q = z1 + z2*mu`,
/// where `z1`, `z2` live in the `(1, xi)`-plane read as ordinary complex
/// numbers. In the standard basis `z1 = a + b i`, `z2 = c + d i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub z1: Complex64,
    pub z2: Complex64,
}

/// Split `q` into its Cayley-Dickson pair with respect to `basis`.
pub fn cd_split(q: Quaternion, basis: &QuaternionBasis) -> ComplexPair {
    let [w0, wxi, wmu, wximu] = basis.resolve(q);
    ComplexPair {
        z1: Complex64::new(w0, wxi),
        z2: Complex64::new(wmu, wximu),
    }
}

/// Reassemble `q = z1 + z2*mu` from a Cayley-Dickson pair.
pub fn cd_assemble(pair: ComplexPair, basis: &QuaternionBasis) -> Quaternion {
    basis.assemble([pair.z1.re, pair.z1.im, pair.z2.re, pair.z2.im])
}

/// Polar decomposition of a Cayley-Dickson pair: complex `(A, B)` with
/// `z1 = A cos B` and `z2 = A sin B` under complex trigonometric functions.
///
/// `B` is the principal complex arctangent of `z2/z1`; `A` is recovered from
/// whichever of `cos B`, `sin B` is larger in modulus, which avoids
/// cancellation near zeros of either factor. The inherent `(A, B)` vs
/// `(-A, B +- pi)` sign ambiguity is canonicalized to `Re(A) >= 0`, with
/// `Im(A) >= 0` breaking the `Re(A) = 0` tie; the compensating pi-shift keeps
/// `Re(B)` in `(-pi, pi]`.
///
/// The zero pair returns `(0, 0)`. Pairs with `|z1^2 + z2^2|` below
/// [`POLAR_DEGENERACY_EPS`] relative to `|z1|^2 + |z2|^2` have no complex
/// modulus and yield [`QuatError::DegeneratePolar`].
pub fn polar_from_pair(pair: ComplexPair) -> Result<(Complex64, Complex64), QuatError> {
    let ComplexPair { z1, z2 } = pair;
    let scale = z1.norm_sqr() + z2.norm_sqr();
    if scale == 0.0 {
        return Ok((Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }
    let modulus_sq = z1 * z1 + z2 * z2;
    if modulus_sq.norm() <= POLAR_DEGENERACY_EPS * scale {
        return Err(QuatError::DegeneratePolar);
    }

    let mut b = if z1 == Complex64::new(0.0, 0.0) {
        Complex64::new(core::f64::consts::FRAC_PI_2, 0.0)
    } else {
        (z2 / z1).atan()
    };
    let cb = b.cos();
    let sb = b.sin();
    let mut a = if cb.norm_sqr() >= sb.norm_sqr() { z1 / cb } else { z2 / sb };

    if a.re < 0.0 || (a.re == 0.0 && a.im < 0.0) {
        a = -a;
        b = if b.re > 0.0 {
            Complex64::new(b.re - core::f64::consts::PI, b.im)
        } else {
            Complex64::new(b.re + core::f64::consts::PI, b.im)
        };
    }
    Ok((a, b))
}

/// Rebuild the Cayley-Dickson pair `(A cos B, A sin B)`.
pub fn pair_from_polar(a: Complex64, b: Complex64) -> ComplexPair {
    ComplexPair {
        z1: a * b.cos(),
        z2: a * b.sin(),
    }
}

/// Polar form `q = A exp(B j)` in the standard basis: complex modulus `A` and
/// complex argument `B`. See [`polar_from_pair`] for conventions and errors.
pub fn cdpolar(q: Quaternion) -> Result<(Complex64, Complex64), QuatError> {
    polar_from_pair(cd_split(q, &QuaternionBasis::standard()))
}

/// Inverse of [`cdpolar`]: the quaternion with `z1 = A cos B`, `z2 = A sin B`
/// in the standard basis.
pub fn cdpolar_inverse(a: Complex64, b: Complex64) -> Quaternion {
    cd_assemble(pair_from_polar(a, b), &QuaternionBasis::standard())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent multiplication oracle: left-multiplication by `p` is the
    /// 4x4 real matrix below acting on the component vector of `q`.
    fn mul_matrix_oracle(p: Quaternion, q: Quaternion) -> Quaternion {
        let m = [
            [p.a, -p.b, -p.c, -p.d],
            [p.b, p.a, -p.d, p.c],
            [p.c, p.d, p.a, -p.b],
            [p.d, -p.c, p.b, p.a],
        ];
        let v = [q.a, q.b, q.c, q.d];
        let mut out = [0.0; 4];
        for (row, o) in m.iter().zip(out.iter_mut()) {
            *o = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
        }
        Quaternion::new(out[0], out[1], out[2], out[3])
    }

    fn assert_quat_close(p: Quaternion, q: Quaternion, tol: f64) {
        assert!(
            (p - q).max_abs_component() <= tol,
            "quaternions differ: {p:?} vs {q:?} (tol {tol})"
        );
    }

    #[test]
    fn multiplication_table() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::I, -Q::ONE);
        assert_eq!(Q::J * Q::J, -Q::ONE);
        assert_eq!(Q::K * Q::K, -Q::ONE);
        assert_eq!(Q::I * Q::J * Q::K, -Q::ONE);
    }

    #[test]
    fn distributivity_example() {
        // (1+i)(1+j) = 1 + i + j + k, and the matrix oracle agrees.
        let p = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        let expect = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(p * q, expect);
        assert_eq!(mul_matrix_oracle(p, q), expect);
    }

    #[test]
    fn conj_norm_inverse_examples() {
        let i = Quaternion::I;
        assert_eq!(i.conj(), -i);
        assert_eq!(i.norm_sqr(), 1.0);
        assert_eq!(i.inverse().unwrap(), -i);

        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(q.norm_sqr(), 4.0);
        assert_eq!(q.inverse().unwrap(), Quaternion::new(0.25, -0.25, -0.25, -0.25));

        assert_eq!(Quaternion::ZERO.inverse(), Err(QuatError::ZeroInverse));
    }

    #[test]
    fn inverse_recovers_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let q = Quaternion::new(rng.gen(), rng.gen(), rng.gen(), rng.gen());
            let qi = q.inverse().unwrap();
            assert_quat_close(q * qi, Quaternion::ONE, 1e-12);
            assert_quat_close(qi * q, Quaternion::ONE, 1e-12);
        }
    }

    #[test]
    fn unit_pure_construction() {
        assert!(UnitPureQuaternion::new(0.0, 1.0, 0.0).is_ok());
        let s = 1.0 / libm::sqrt(2.0);
        assert!(UnitPureQuaternion::new(s, s, 0.0).is_ok());
        assert!(matches!(
            UnitPureQuaternion::new(0.5, 0.0, 0.0),
            Err(QuatError::NotUnitPure { .. })
        ));
        assert!(matches!(
            UnitPureQuaternion::from_quaternion(Quaternion::new(1e-14, 1.0, 0.0, 0.0)),
            Err(QuatError::NotUnitPure { .. })
        ));
    }

    #[test]
    fn basis_rejects_non_orthogonal_axes() {
        let xi = UnitPureQuaternion::I;
        let s = 1.0 / libm::sqrt(2.0);
        let slanted = UnitPureQuaternion::new(s, s, 0.0).unwrap();
        assert!(matches!(
            QuaternionBasis::new(xi, slanted),
            Err(QuatError::NonOrthogonalAxes { .. })
        ));
        assert!(QuaternionBasis::new(xi, UnitPureQuaternion::J).is_ok());
    }

    #[test]
    fn standard_basis_elements_are_orthonormal() {
        let b = QuaternionBasis::standard();
        assert_eq!(b.ximu(), Quaternion::K);
        let elems = [
            Quaternion::ONE,
            b.xi().as_quaternion(),
            b.mu().as_quaternion(),
            b.ximu(),
        ];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(p.dot(*q), expect, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn cd_split_standard_examples() {
        let b = QuaternionBasis::standard();
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        let pair = cd_split(q, &b);
        assert_eq!(pair.z1, Complex64::new(1.0, 2.0));
        assert_eq!(pair.z2, Complex64::new(3.0, 4.0));

        let pair = cd_split(Quaternion::J, &b);
        assert_eq!(pair.z1, Complex64::new(0.0, 0.0));
        assert_eq!(pair.z2, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn cd_round_trip_in_rotated_basis() {
        let s = 1.0 / libm::sqrt(2.0);
        let xi = UnitPureQuaternion::new(s, s, 0.0).unwrap();
        let mu = UnitPureQuaternion::new(s, -s, 0.0).unwrap();
        let basis = QuaternionBasis::new(xi, mu).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let q = Quaternion::new(
                rng.gen::<f64>() * 4.0 - 2.0,
                rng.gen::<f64>() * 4.0 - 2.0,
                rng.gen::<f64>() * 4.0 - 2.0,
                rng.gen::<f64>() * 4.0 - 2.0,
            );
            let back = cd_assemble(cd_split(q, &basis), &basis);
            assert_quat_close(back, q, 1e-15 * q.max_abs_component().max(1.0));
        }
    }

    #[test]
    fn cdpolar_trivial_examples() {
        let (a, b) = cdpolar(Quaternion::scalar(2.0)).unwrap();
        assert_eq!(a, Complex64::new(2.0, 0.0));
        assert_eq!(b, Complex64::new(0.0, 0.0));

        let q = Quaternion::new(libm::cos(0.5), 0.0, libm::sin(0.5), 0.0);
        let (a, b) = cdpolar(q).unwrap();
        assert_relative_eq!(a.re, 1.0, epsilon = 1e-14);
        assert_relative_eq!(a.im, 0.0, epsilon = 1e-14);
        assert_relative_eq!(b.re, 0.5, epsilon = 1e-14);
        assert_relative_eq!(b.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn cdpolar_degenerate_input_rejected() {
        // q = 1 + k has z1 = 1, z2 = i, so z1^2 + z2^2 = 0 exactly.
        let q = Quaternion::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!(cdpolar(q), Err(QuatError::DegeneratePolar));
    }

    #[test]
    fn cdpolar_zero_maps_to_zero() {
        assert_eq!(
            cdpolar(Quaternion::ZERO).unwrap(),
            (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
        );
    }

    #[test]
    fn cdpolar_inverse_examples() {
        let q = cdpolar_inverse(
            Complex64::new(1.0, 0.0),
            Complex64::new(core::f64::consts::FRAC_PI_2, 0.0),
        );
        assert_quat_close(q, Quaternion::J, 1e-15);

        let q = cdpolar_inverse(Complex64::new(0.0, 0.0), Complex64::new(3.0, -2.0));
        assert_eq!(q, Quaternion::ZERO);
    }

    #[test]
    fn cdpolar_inverse_matches_complex_trig_oracle() {
        let a = Complex64::new(1.0, 1.0);
        let b = Complex64::new(0.3, -0.2);
        let q = cdpolar_inverse(a, b);
        // Independent route: complex cos/sin evaluated explicitly.
        let z1 = a * b.cos();
        let z2 = a * b.sin();
        let expect = Quaternion::new(z1.re, z1.im, z2.re, z2.im);
        assert_quat_close(q, expect, 1e-15);
    }

    #[test]
    fn cdpolar_round_trip_bulk() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut accepted = 0usize;
        while accepted < 10_000 {
            let q = Quaternion::new(
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            );
            let pair = cd_split(q, &QuaternionBasis::standard());
            let s = pair.z1 * pair.z1 + pair.z2 * pair.z2;
            if s.norm() <= 0.01 * q.norm_sqr() {
                continue;
            }
            accepted += 1;
            let (a, b) = cdpolar(q).unwrap();
            assert!(a.re > 0.0 || (a.re == 0.0 && a.im >= 0.0), "canonical sign violated");
            let back = cdpolar_inverse(a, b);
            let rel = (back - q).max_abs_component() / q.abs();
            assert!(rel <= 1e-10, "round trip error {rel} for {q:?}");
        }
    }

    proptest! {
        #[test]
        fn modulus_is_multiplicative(
            pa in -10.0..10.0f64, pb in -10.0..10.0f64, pc in -10.0..10.0f64, pd in -10.0..10.0f64,
            qa in -10.0..10.0f64, qb in -10.0..10.0f64, qc in -10.0..10.0f64, qd in -10.0..10.0f64,
        ) {
            let p = Quaternion::new(pa, pb, pc, pd);
            let q = Quaternion::new(qa, qb, qc, qd);
            let lhs = (p * q).abs();
            let rhs = p.abs() * q.abs();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
        }

        #[test]
        fn multiply_matches_matrix_oracle(
            pa in -10.0..10.0f64, pb in -10.0..10.0f64, pc in -10.0..10.0f64, pd in -10.0..10.0f64,
            qa in -10.0..10.0f64, qb in -10.0..10.0f64, qc in -10.0..10.0f64, qd in -10.0..10.0f64,
        ) {
            let p = Quaternion::new(pa, pb, pc, pd);
            let q = Quaternion::new(qa, qb, qc, qd);
            let direct = p * q;
            let oracle = mul_matrix_oracle(p, q);
            prop_assert!((direct - oracle).max_abs_component() <= 1e-12);
        }

        #[test]
        fn multiply_is_associative(
            pa in -3.0..3.0f64, pb in -3.0..3.0f64, pc in -3.0..3.0f64, pd in -3.0..3.0f64,
            qa in -3.0..3.0f64, qb in -3.0..3.0f64, qc in -3.0..3.0f64, qd in -3.0..3.0f64,
            ra in -3.0..3.0f64, rb in -3.0..3.0f64, rc in -3.0..3.0f64, rd in -3.0..3.0f64,
        ) {
            let p = Quaternion::new(pa, pb, pc, pd);
            let q = Quaternion::new(qa, qb, qc, qd);
            let r = Quaternion::new(ra, rb, rc, rd);
            let lhs = (p * q) * r;
            let rhs = p * (q * r);
            let scale = lhs.max_abs_component().max(1.0);
            prop_assert!((lhs - rhs).max_abs_component() <= 1e-12 * scale);
        }

        #[test]
        fn norm_equals_q_times_conj(
            a in -10.0..10.0f64, b in -10.0..10.0f64, c in -10.0..10.0f64, d in -10.0..10.0f64,
        ) {
            let q = Quaternion::new(a, b, c, d);
            let qc = q * q.conj();
            prop_assert!((qc.scalar_part() - q.norm_sqr()).abs() <= 1e-12 * q.norm_sqr().max(1.0));
            prop_assert!(qc.vector_part().max_abs_component() <= 1e-12 * q.norm_sqr().max(1.0));
        }
    }
}
