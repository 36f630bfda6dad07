//! Small fixed-size linear algebra: real 3- and 5-dimensional helpers, a
//! Taylor scaling-and-squaring matrix exponential, a cyclic Jacobi
//! eigensolver, a Cholesky solve, and complex 4×4 matrices.
//!
//! Everything is stack-allocated and branch-predictable; the dimensions are
//! fixed by the problem (3-vectors, the 5×5 ambient representation, ℂ⁴
//! spinors), so no general-purpose matrix library is warranted.

use crate::tol;
use num_complex::Complex64;
use num_traits::Float;

/// Real 3-vector, the component type of `B⃗`, `C⃗`, `D⃗`, `p⃗`, `c⃗`, `j⃗`.
pub type V3 = [f64; 3];

/// Euclidean dot product.
#[inline]
pub fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Cross product `a × b`.
#[inline]
pub fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Euclidean norm.
#[inline]
pub fn norm(a: V3) -> f64 {
    dot(a, a).sqrt()
}

/// Component-wise sum.
#[inline]
pub fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Component-wise difference `a − b`.
#[inline]
pub fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Scalar multiple `s·a`.
#[inline]
pub fn scale(s: f64, a: V3) -> V3 {
    [s * a[0], s * a[1], s * a[2]]
}

/// Levi-Civita symbol ε_{pqr} on indices in `{0,1,2}`.
#[inline]
pub fn eps3(p: usize, q: usize, r: usize) -> f64 {
    match (p, q, r) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The standard basis vector of ℝ³ least aligned with `v` (used to start
/// Gram–Schmidt frames).
pub fn least_aligned_axis(v: V3) -> V3 {
    let mut idx = 0;
    for k in 1..3 {
        if v[k].abs() < v[idx].abs() {
            idx = k;
        }
    }
    let mut e = [0.0; 3];
    e[idx] = 1.0;
    e
}

// ---------------------------------------------------------------------------
// 5×5 real matrices (the ambient so(3,2)/O(3,2) representation)
// ---------------------------------------------------------------------------

/// Real 5×5 matrix in the ambient index order `(y⁰, y¹, y², y³, y⁴)`.
pub type Mat5 = [[f64; 5]; 5];

/// The ambient metric η = diag(−1, 1, 1, 1, −1).
pub const ETA5: [f64; 5] = [-1.0, 1.0, 1.0, 1.0, -1.0];

/// 5×5 identity.
pub fn mat5_identity() -> Mat5 {
    let mut m = [[0.0; 5]; 5];
    for i in 0..5 {
        m[i][i] = 1.0;
    }
    m
}

/// Matrix product `a·b`.
pub fn mat5_mul(a: &Mat5, b: &Mat5) -> Mat5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for k in 0..5 {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..5 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Matrix–vector product `m·y`.
pub fn mat5_vec(m: &Mat5, y: &[f64; 5]) -> [f64; 5] {
    let mut out = [0.0; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i] += m[i][j] * y[j];
        }
    }
    out
}

/// Transpose.
pub fn mat5_transpose(m: &Mat5) -> Mat5 {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = m[j][i];
        }
    }
    out
}

/// Largest absolute entry.
pub fn mat5_max_abs(m: &Mat5) -> f64 {
    let mut mx = 0.0f64;
    for row in m {
        for &x in row {
            mx = mx.max(x.abs());
        }
    }
    mx
}

/// Minkowski pairing `η(x, y) = −x⁰y⁰ + Σᵢ xⁱyⁱ − x⁴y⁴`.
#[inline]
pub fn eta_dot(x: &[f64; 5], y: &[f64; 5]) -> f64 {
    let mut s = 0.0;
    for k in 0..5 {
        s += ETA5[k] * x[k] * y[k];
    }
    s
}

/// Matrix exponential of a 5×5 real matrix by Taylor series with
/// scaling and squaring.
///
/// The argument is halved until its ∞-norm is below
/// [`tol::EXPM_SCALE_THRESHOLD`], summed to [`tol::EXPM_TERM_TOL`], then
/// squared back; on so(3,2) elements of O(1)–O(10) size this agrees with
/// reference implementations to ~1e-13 relative.
pub fn expm5(m: &Mat5) -> Mat5 {
    let mut inf_norm = 0.0f64;
    for row in m {
        let mut r = 0.0;
        for &x in row {
            r += x.abs();
        }
        inf_norm = inf_norm.max(r);
    }
    let mut squarings = 0u32;
    let mut n = inf_norm;
    while n > tol::EXPM_SCALE_THRESHOLD {
        n /= 2.0;
        squarings += 1;
    }
    let factor = 0.5f64.powi(squarings as i32);
    let mut a = *m;
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x *= factor;
        }
    }
    let mut x = mat5_identity();
    let mut term = mat5_identity();
    for k in 1..=tol::EXPM_MAX_TERMS {
        term = mat5_mul(&term, &a);
        let inv_k = 1.0 / k as f64;
        for row in term.iter_mut() {
            for t in row.iter_mut() {
                *t *= inv_k;
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                x[i][j] += term[i][j];
            }
        }
        if mat5_max_abs(&term) <= tol::EXPM_TERM_TOL {
            break;
        }
    }
    for _ in 0..squarings {
        x = mat5_mul(&x, &x);
    }
    x
}

// ---------------------------------------------------------------------------
// Symmetric eigenproblems (cyclic Jacobi)
// ---------------------------------------------------------------------------

/// Eigenvalues (ascending) and matching orthonormal eigenvectors of a real
/// symmetric matrix, by cyclic Jacobi sweeps.
///
/// `vectors[k]` is the eigenvector for `values[k]`. Jacobi is unconditionally
/// stable and, at these sizes (3×3 and 8×8 here), faster than anything
/// fancier.
pub fn jacobi_eigen<const N: usize>(mut a: [[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut amax = 0.0f64;
    for row in &a {
        for &x in row {
            amax = amax.max(x.abs());
        }
    }
    let stop = tol::JACOBI_OFF_TOL * (amax * amax).max(f64::MIN_POSITIVE);
    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..N {
            for q in (p + 1)..N {
                off += a[p][q] * a[p][q];
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..N {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    // Sort ascending, carrying the eigenvector columns along.
    let mut order = [0usize; N];
    for (i, o) in order.iter_mut().enumerate() {
        *o = i;
    }
    for i in 0..N {
        let mut best = i;
        for j in (i + 1)..N {
            if a[order[j]][order[j]] < a[order[best]][order[best]] {
                best = j;
            }
        }
        order.swap(i, best);
    }
    let mut values = [0.0; N];
    let mut vectors = [[0.0; N]; N];
    for k in 0..N {
        values[k] = a[order[k]][order[k]];
        for i in 0..N {
            vectors[k][i] = v[i][order[k]];
        }
    }
    (values, vectors)
}

/// Solve `a·x = b` for symmetric positive-definite `a` via Cholesky.
///
/// Returns `None` if a pivot is non-positive (the matrix was not SPD).
pub fn solve_spd<const N: usize>(mut a: [[f64; N]; N], mut b: [f64; N]) -> Option<[f64; N]> {
    for i in 0..N {
        for j in 0..=i {
            let mut sum = a[i][j];
            for k in 0..j {
                sum -= a[i][k] * a[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return None;
                }
                a[i][j] = sum.sqrt();
            } else {
                a[i][j] = sum / a[j][j];
            }
        }
    }
    for i in 0..N {
        let mut sum = b[i];
        for k in 0..i {
            sum -= a[i][k] * b[k];
        }
        b[i] = sum / a[i][i];
    }
    for i in (0..N).rev() {
        let mut sum = b[i];
        for k in (i + 1)..N {
            sum -= a[k][i] * b[k];
        }
        b[i] = sum / a[i][i];
    }
    Some(b)
}

// ---------------------------------------------------------------------------
// Complex 4×4 matrices (the Clifford representation on ℂ⁴)
// ---------------------------------------------------------------------------

/// Complex 4×4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat4(pub [[Complex64; 4]; 4]);

/// Complex 4-vector (spinor component storage).
pub type CVec4 = [Complex64; 4];

/// `Complex64` zero.
#[inline]
pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

impl CMat4 {
    /// All-zero matrix.
    pub fn zero() -> Self {
        CMat4([[czero(); 4]; 4])
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &CMat4) -> CMat4 {
        let mut out = CMat4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let aik = self.0[i][k];
                if aik == czero() {
                    continue;
                }
                for j in 0..4 {
                    out.0[i][j] += aik * rhs.0[k][j];
                }
            }
        }
        out
    }

    /// Matrix–vector product `self · v`.
    pub fn matvec(&self, v: &CVec4) -> CVec4 {
        let mut out = [czero(); 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.0[i][j] * v[j];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat4 {
        let mut out = CMat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    /// Trace.
    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2] + self.0[3][3]
    }

    /// Entry-wise sum.
    pub fn addm(&self, rhs: &CMat4) -> CMat4 {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }

    /// Scalar multiple.
    pub fn scalem(&self, s: Complex64) -> CMat4 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        out
    }

    /// Largest entry magnitude (max norm).
    pub fn max_abs(&self) -> f64 {
        let mut mx = 0.0f64;
        for row in &self.0 {
            for x in row {
                mx = mx.max(x.norm());
            }
        }
        mx
    }

    /// `max |self − self†|`: zero for Hermitian matrices.
    pub fn hermiticity_residual(&self) -> f64 {
        let d = self.dagger();
        let mut mx = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                mx = mx.max((self.0[i][j] - d.0[i][j]).norm());
            }
        }
        mx
    }
}

/// Hermitian inner product `⟨x, y⟩ = Σ xᵢ ȳᵢ` (linear in the first slot).
#[inline]
pub fn herm_dot(x: &CVec4, y: &CVec4) -> Complex64 {
    let mut s = czero();
    for k in 0..4 {
        s += x[k] * y[k].conj();
    }
    s
}

/// Quadratic form `ψ†·h·ψ` (complex; real for Hermitian `h`).
#[inline]
pub fn quad_form(h: &CMat4, psi: &CVec4) -> Complex64 {
    herm_dot(&h.matvec(psi), psi)
}

/// Eigenvalues (ascending) of a Hermitian 4×4 matrix.
///
/// Uses the real embedding `[[Re, −Im], [Im, Re]]`, which is symmetric 8×8
/// with every eigenvalue of the Hermitian matrix doubled; adjacent pairs of
/// the sorted real spectrum are averaged back down.
pub fn hermitian_eigenvalues(h: &CMat4) -> [f64; 4] {
    let mut s = [[0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            let z = h.0[i][j];
            s[i][j] = z.re;
            s[i][j + 4] = -z.im;
            s[i + 4][j] = z.im;
            s[i + 4][j + 4] = z.re;
        }
    }
    let (vals, _) = jacobi_eigen(s);
    let mut out = [0.0; 4];
    for k in 0..4 {
        out[k] = 0.5 * (vals[2 * k] + vals[2 * k + 1]);
    }
    out
}
