//! Numerical kernels: matrix exponential, its time integral, column-stacking
//! vectorization and Hermitian eigen-decomposition.
//!
//! The exponential uses the diagonal Padé scaling-and-squaring scheme with the
//! degree/threshold table of Higham (2005). No diagonalization is involved, so
//! defective generators are handled like any other matrix.

use ndarray::{s, Array1, Array2, ArrayView2, ShapeBuilder, Zip};
use ndarray_linalg::{Eigh, Inverse, UPLO};

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64, ZERO};

/// Padé degrees tried before falling back to degree 13 with scaling, and the
/// largest 1-norm each one handles to double precision.
const PADE_THRESHOLDS: [(usize, f64); 4] = [
    (3, 1.495585217958292e-2),
    (5, 2.539_398_330_063_23e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
];
const THETA_13: f64 = 5.371920351148152;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Matrix exponential plus diagnostics about how it was evaluated.
#[derive(Debug, Clone)]
pub struct ExpmResult {
    pub value: ComplexMatrix,
    pub scaling_squarings: u32,
    pub pade_degree: usize,
}

/// `e^{M t}`.
pub fn expm(m: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    expm_with_info(m, t).map(|r| r.value)
}

pub fn expm_with_info(m: &ComplexMatrix, t: f64) -> Result<ExpmResult> {
    m.square_dim()?;
    if !t.is_finite() {
        return Err(Error::InvalidParameter {
            what: "time",
            value: t,
        });
    }
    let scaled = m.as_array().mapv(|z| z * t);
    let (value, pade_degree, scaling_squarings) = expm_array(scaled)?;
    Ok(ExpmResult {
        value: ComplexMatrix::new(value)?,
        scaling_squarings,
        pade_degree,
    })
}

fn norm1(a: &Array2<C64>) -> f64 {
    a.columns()
        .into_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `e^{A}` for an already time-scaled square array. Returns the value, the
/// Padé degree and the number of squarings.
pub(crate) fn expm_array(a: Array2<C64>) -> Result<(Array2<C64>, usize, u32)> {
    let n = a.nrows();
    if norm1(&a) == 0.0 {
        return Ok((Array2::eye(n), 0, 0));
    }
    // e^A = e^μ e^{A − μ1} with μ = tr(A)/n, kept only if it lowers the norm.
    let mu = a.diag().sum() / n as f64;
    let mut shifted = a.clone();
    add_scaled_identity_c(&mut shifted, -mu);
    let (mut a, shift) = if norm1(&shifted) < norm1(&a) {
        (shifted, mu)
    } else {
        (a, ZERO)
    };
    let (mut value, degree, squarings) = expm_unshifted(&mut a)?;
    if shift != ZERO {
        value.mapv_inplace(|z| z * shift.exp());
    }
    Ok((value, degree, squarings))
}

fn expm_unshifted(a: &mut Array2<C64>) -> Result<(Array2<C64>, usize, u32)> {
    let norm = norm1(a);
    for &(degree, theta) in &PADE_THRESHOLDS {
        if norm <= theta {
            let coeffs: &[f64] = match degree {
                3 => &B3,
                5 => &B5,
                7 => &B7,
                _ => &B9,
            };
            let (u, v) = pade_low(a, coeffs);
            return Ok((pade_solve(u, v)?, degree, 0));
        }
    }

    let squarings = (norm / THETA_13).log2().ceil().max(0.0) as u32;
    if squarings > 0 {
        let factor = 0.5f64.powi(squarings as i32);
        a.mapv_inplace(|z| z * factor);
    }
    log::debug!(
        "expm: dim {}, 1-norm {norm:.3e}, degree 13, {squarings} squarings",
        a.nrows()
    );
    let (u, v) = pade13(a);
    let mut r = pade_solve(u, v)?;
    for _ in 0..squarings {
        r = r.dot(&r);
    }
    Ok((r, 13, squarings))
}

fn add_scaled_identity_c(a: &mut Array2<C64>, c: C64) {
    for d in a.diag_mut() {
        *d += c;
    }
}

fn add_scaled_identity(a: &mut Array2<C64>, c: f64) {
    for d in a.diag_mut() {
        *d += c;
    }
}

/// Odd and even parts of the low-degree Padé numerator.
fn pade_low(a: &Array2<C64>, b: &[f64]) -> (Array2<C64>, Array2<C64>) {
    let n = a.nrows();
    let a2 = a.dot(a);
    let mut powers = vec![a2.clone()];
    while 2 * (powers.len() + 1) < b.len() {
        let next = powers.last().unwrap().dot(&a2);
        powers.push(next);
    }
    let mut odd = Array2::<C64>::zeros((n, n));
    let mut even = Array2::<C64>::zeros((n, n));
    add_scaled_identity(&mut odd, b[1]);
    add_scaled_identity(&mut even, b[0]);
    for (k, p) in powers.iter().enumerate() {
        let j = 2 * (k + 1);
        even.scaled_add(C64::new(b[j], 0.0), p);
        odd.scaled_add(C64::new(b[j + 1], 0.0), p);
    }
    (a.dot(&odd), even)
}

fn pade13(a: &Array2<C64>) -> (Array2<C64>, Array2<C64>) {
    let b = |k: usize| C64::new(B13[k], 0.0);
    let a2 = a.dot(a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);

    let mut inner = &a6 * b(13);
    inner.scaled_add(b(11), &a4);
    inner.scaled_add(b(9), &a2);
    let mut odd = a6.dot(&inner);
    odd.scaled_add(b(7), &a6);
    odd.scaled_add(b(5), &a4);
    odd.scaled_add(b(3), &a2);
    add_scaled_identity(&mut odd, B13[1]);
    let u = a.dot(&odd);
    drop(odd);

    inner.fill(ZERO);
    inner.scaled_add(b(12), &a6);
    inner.scaled_add(b(10), &a4);
    inner.scaled_add(b(8), &a2);
    let mut v = a6.dot(&inner);
    v.scaled_add(b(6), &a6);
    v.scaled_add(b(4), &a4);
    v.scaled_add(b(2), &a2);
    add_scaled_identity(&mut v, B13[0]);
    (u, v)
}

/// `(V − U)⁻¹ (V + U)`.
fn pade_solve(u: Array2<C64>, mut v: Array2<C64>) -> Result<Array2<C64>> {
    let denominator = &v - &u;
    v += &u;
    drop(u);
    let inverse = denominator.inv()?;
    Ok(inverse.dot(&v))
}

/// `∫₀ᵗ e^{M s} ds`, read off the upper-right block of the exponential of the
/// augmented matrix `[[M, 1], [0, 0]]`. Valid for singular and defective `M`.
pub fn expm_integral(m: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let d = m.square_dim()?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter {
            what: "time",
            value: t,
        });
    }
    let mut aug = Array2::<C64>::zeros((2 * d, 2 * d));
    aug.slice_mut(s![..d, ..d])
        .assign(&m.as_array().mapv(|z| z * t));
    for i in 0..d {
        aug[[i, d + i]] = C64::new(t, 0.0);
    }
    let (e, _, _) = expm_array(aug)?;
    ComplexMatrix::new(e.slice(s![..d, d..]).to_owned())
}

/// Column-stacking vectorization: entry `(i, j)` lands at `j * N + i`.
pub fn vec(m: &ComplexMatrix) -> Result<Array1<C64>> {
    let n = m.square_dim()?;
    let mut v = Array1::zeros(n * n);
    for ((i, j), z) in m.as_array().indexed_iter() {
        v[j * n + i] = *z;
    }
    Ok(v)
}

/// Inverse of [`vec`].
pub fn unvec(v: &Array1<C64>, n: usize) -> Result<ComplexMatrix> {
    if v.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            actual: v.len(),
        });
    }
    ComplexMatrix::from_fn(n, n, |(i, j)| v[j * n + i])
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = Array2::zeros((a.rows() * b.rows(), a.cols() * b.cols()));
    add_kron(&mut out, C64::new(1.0, 0.0), a.view(), b.view());
    ComplexMatrix::from_array_unchecked(out)
}

/// `out += coeff · (a ⊗ b)`, skipping zero entries of `a`.
pub(crate) fn add_kron(
    out: &mut Array2<C64>,
    coeff: C64,
    a: ArrayView2<'_, C64>,
    b: ArrayView2<'_, C64>,
) {
    let (p, q) = b.dim();
    for ((i, j), &aij) in a.indexed_iter() {
        if aij == ZERO {
            continue;
        }
        let w = coeff * aij;
        let mut block = out.slice_mut(s![i * p..(i + 1) * p, j * q..(j + 1) * q]);
        Zip::from(&mut block).and(&b).for_each(|o, &x| *o += w * x);
    }
}

/// Tolerance on `‖M − M†‖_max` accepted by [`hermitian_eigs`].
pub const HERMITIAN_INPUT_TOLERANCE: f64 = 1e-10;

/// Eigenvalues (ascending) and orthonormal eigenvectors (as columns) of a
/// Hermitian matrix.
pub fn hermitian_eigs(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    m.square_dim()?;
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_INPUT_TOLERANCE {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: HERMITIAN_INPUT_TOLERANCE,
        });
    }
    // LAPACK reads a row-major array as its transpose, i.e. the conjugate of a
    // Hermitian matrix, which would conjugate the eigenvectors.
    let mut symmetric = Array2::zeros(m.as_array().raw_dim().f());
    symmetric.assign(&hermitian_part(m.as_array()));
    let (values, vectors) = symmetric.eigh(UPLO::Lower)?;
    Ok((values.to_vec(), ComplexMatrix::new(vectors)?))
}

/// Smallest eigenvalue of the Hermitian part of `m`.
pub(crate) fn min_eigenvalue(m: &Array2<C64>) -> Result<f64> {
    use ndarray_linalg::EigValsh;
    let values = hermitian_part(m).eigvalsh(UPLO::Lower)?;
    Ok(values.iter().copied().fold(f64::INFINITY, f64::min))
}

fn hermitian_part(m: &Array2<C64>) -> Array2<C64> {
    let mut h = m.clone();
    Zip::from(&mut h)
        .and(&m.t())
        .for_each(|x, &y| *x = (*x + y.conj()) * 0.5);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        let data: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        ComplexMatrix::from_rows(&data).unwrap()
    }

    #[test]
    fn zero_generator_gives_identity() {
        let z = ComplexMatrix::zeros(3, 3);
        for t in [0.0, 1.0, -7.5] {
            assert_eq!(expm(&z, t).unwrap(), ComplexMatrix::identity(3));
        }
    }

    #[test]
    fn scalar_exponential() {
        let m = real(&[&[2.0]]);
        for t in [0.001, 0.3, 1.0, 4.0, 20.0] {
            let e = expm(&m, t).unwrap()[(0, 0)].re;
            assert!((e / (2.0 * t).exp() - 1.0).abs() < 1e-13, "t={t}");
        }
    }

    #[test]
    fn nilpotent_jordan_block() {
        // exp of a 3x3 Jordan block with eigenvalue 0 is 1 + N t + N² t²/2.
        let m = real(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 0.0, 0.0]]);
        let t = 3.0;
        let e = expm(&m, t).unwrap();
        let expected = real(&[&[1.0, t, t * t / 2.0], &[0.0, 1.0, t], &[0.0, 0.0, 1.0]]);
        assert!(e.max_abs_diff(&expected) < 1e-13);
    }

    #[test]
    fn rotation_generator() {
        let m = real(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let t = 2.5f64;
        let e = expm(&m, t).unwrap();
        let expected = real(&[&[t.cos(), -t.sin()], &[t.sin(), t.cos()]]);
        assert!(e.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn every_pade_degree_is_reached() {
        // Traceless, so the shift leaves the norm (1 at t = 1) alone.
        let m = real(&[&[0.5, 0.5], &[0.25, -0.5]]);
        let mut degrees = Vec::new();
        for t in [0.005, 0.1, 0.5, 1.0, 3.0, 40.0] {
            degrees.push(expm_with_info(&m, t).unwrap().pade_degree);
        }
        assert_eq!(degrees, vec![3, 5, 7, 9, 13, 13]);
        assert!(expm_with_info(&m, 40.0).unwrap().scaling_squarings > 0);
    }

    #[test]
    fn expm_rejects_bad_input() {
        assert!(matches!(
            expm(&ComplexMatrix::zeros(2, 3), 1.0),
            Err(Error::NotSquare { .. })
        ));
        assert!(expm(&ComplexMatrix::identity(2), f64::NAN).is_err());
        assert!(expm_integral(&ComplexMatrix::identity(2), -1.0).is_err());
        assert!(expm_integral(&ComplexMatrix::zeros(1, 2), 1.0).is_err());
    }

    #[test]
    fn integral_of_zero_is_time() {
        let t = 0.75;
        let w = expm_integral(&ComplexMatrix::zeros(4, 4), t).unwrap();
        let expected = ComplexMatrix::identity(4).scale(C64::new(t, 0.0)).unwrap();
        assert!(w.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn vec_is_column_stacking() {
        let (a, b, c, d) = (
            C64::new(1.0, 0.0),
            C64::new(2.0, 0.5),
            C64::new(3.0, 0.0),
            C64::new(4.0, -1.0),
        );
        let m = ComplexMatrix::from_rows(&[vec![a, b], vec![c, d]]).unwrap();
        assert_eq!(vec(&m).unwrap().to_vec(), vec![a, c, b, d]);
        assert!(unvec(&Array1::zeros(5), 2).is_err());
    }

    #[test]
    fn simple_eigenvalues() {
        let (vals, _) = hermitian_eigs(&ComplexMatrix::identity(3)).unwrap();
        assert_eq!(vals, vec![1.0, 1.0, 1.0]);
        let d = ComplexMatrix::from_diag(&[C64::new(0.8, 0.0), C64::new(0.2, 0.0)]).unwrap();
        let (vals, _) = hermitian_eigs(&d).unwrap();
        assert_abs_diff_eq!(vals[0], 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(vals[1], 0.8, epsilon = 1e-15);
    }

    #[test]
    fn eigs_reject_non_hermitian() {
        let x = ComplexMatrix::matrix_unit(2, 0, 1);
        assert!(matches!(
            hermitian_eigs(&x),
            Err(Error::NotHermitian { .. })
        ));
    }
}
