//! QCQP problem representations and canonicalization.
//!
//! Problems enter in one of two homogeneous forms: complex-valued
//! (`x† A x` with Hermitian `A`) or real-valued (`yᵀ B y` with symmetric
//! `B`). Every instance is canonicalized into a pure-inequality family
//! `F_i(v) = quadratic(v) + offset ≤ 0`, which is what the interior-point
//! engine consumes. Equalities are relaxed to a `±δ` band so that a strict
//! interior exists.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Entrywise tolerance for the Hermitian / symmetric input checks.
pub const SYMMETRY_TOL: f64 = 1e-12;

pub type CMat = DMatrix<Complex64>;
pub type RMat = DMatrix<f64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("matrix for {which} is not Hermitian within 1e-12")]
    NotHermitian { which: MatrixRef },
    #[error("matrix for {which} is not symmetric within 1e-12")]
    NotSymmetric { which: MatrixRef },
    #[error("matrix for {which} has shape {rows}x{cols}, expected {dim}x{dim}")]
    BadShape {
        which: MatrixRef,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("constraint {index} has a non-finite or inverted bound")]
    BadBound { index: usize },
    #[error("objective offset is not finite")]
    BadOffset,
    #[error("problem dimension must be at least 1")]
    EmptyProblem,
    #[error("equality band delta must be positive and finite, got {delta}")]
    BadBand { delta: f64 },
    #[error("dimension mismatch: matrix is {matrix}x{matrix}, vector has length {vector}")]
    DimensionMismatch { matrix: usize, vector: usize },
    #[error("problem is already in non-negative split form")]
    AlreadySplit,
}

/// Which matrix of a problem an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixRef {
    Objective,
    Constraint(usize),
}

impl core::fmt::Display for MatrixRef {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatrixRef::Objective => write!(f, "objective"),
            MatrixRef::Constraint(i) => write!(f, "constraint {i}"),
        }
    }
}

/// Constraint sense together with its bound(s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sense {
    /// quadratic ≤ c
    Le(f64),
    /// quadratic ≥ c
    Ge(f64),
    /// quadratic = c, relaxed to a ±δ band during canonicalization
    Eq(f64),
    /// quadratic ∈ [lo, hi]
    Range { lo: f64, hi: f64 },
}

impl Sense {
    fn bounds_ok(&self) -> bool {
        match *self {
            Sense::Le(c) | Sense::Ge(c) | Sense::Eq(c) => c.is_finite(),
            Sense::Range { lo, hi } => lo.is_finite() && hi.is_finite() && lo <= hi,
        }
    }

    /// True when `value` satisfies the sense, with equalities checked
    /// against the ±band used at canonicalization time.
    pub fn satisfied(&self, value: f64, band: f64, tol: f64) -> bool {
        match *self {
            Sense::Le(c) => value <= c + tol,
            Sense::Ge(c) => value >= c - tol,
            Sense::Eq(c) => (value - c).abs() <= band + tol,
            Sense::Range { lo, hi } => value >= lo - tol && value <= hi + tol,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComplexConstraint {
    pub matrix: CMat,
    pub sense: Sense,
}

/// Homogeneous complex-valued QCQP: minimize `x† A0 x + offset` subject to
/// quadratic constraints on `x ∈ C^N`.
#[derive(Debug, Clone)]
pub struct ComplexQcqp {
    pub dim: usize,
    pub objective: CMat,
    pub objective_offset: f64,
    pub constraints: Vec<ComplexConstraint>,
}

#[derive(Debug, Clone)]
pub struct RealConstraint {
    pub matrix: RMat,
    pub sense: Sense,
}

/// Homogeneous real-valued QCQP: minimize `yᵀ B0 y + offset` over `y ∈ R^N`.
///
/// `nonneg_domain` marks that the variables are restricted to `y ≥ 0`,
/// which the probability encoding requires.
#[derive(Debug, Clone)]
pub struct RealQcqp {
    pub dim: usize,
    pub objective: RMat,
    pub objective_offset: f64,
    pub constraints: Vec<RealConstraint>,
    pub nonneg_domain: bool,
}

/// Either input form, as read from an instance file.
#[derive(Debug, Clone)]
pub enum Qcqp {
    Complex(ComplexQcqp),
    Real(RealQcqp),
}

fn is_hermitian(m: &CMat) -> bool {
    let n = m.nrows();
    for i in 0..n {
        for j in i..n {
            if (m[(i, j)] - m[(j, i)].conj()).norm() > SYMMETRY_TOL {
                return false;
            }
        }
    }
    true
}

fn is_symmetric(m: &RMat) -> bool {
    let n = m.nrows();
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL {
                return false;
            }
        }
    }
    true
}

impl ComplexQcqp {
    pub fn new(
        objective: CMat,
        objective_offset: f64,
        constraints: Vec<ComplexConstraint>,
    ) -> Result<Self, ModelError> {
        let p = Self {
            dim: objective.nrows(),
            objective,
            objective_offset,
            constraints,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.dim == 0 {
            return Err(ModelError::EmptyProblem);
        }
        if !self.objective_offset.is_finite() {
            return Err(ModelError::BadOffset);
        }
        check_shape_c(&self.objective, self.dim, MatrixRef::Objective)?;
        if !is_hermitian(&self.objective) {
            return Err(ModelError::NotHermitian {
                which: MatrixRef::Objective,
            });
        }
        for (i, c) in self.constraints.iter().enumerate() {
            check_shape_c(&c.matrix, self.dim, MatrixRef::Constraint(i))?;
            if !is_hermitian(&c.matrix) {
                return Err(ModelError::NotHermitian {
                    which: MatrixRef::Constraint(i),
                });
            }
            if !c.sense.bounds_ok() {
                return Err(ModelError::BadBound { index: i });
            }
        }
        Ok(())
    }
}

impl RealQcqp {
    pub fn new(
        objective: RMat,
        objective_offset: f64,
        constraints: Vec<RealConstraint>,
        nonneg_domain: bool,
    ) -> Result<Self, ModelError> {
        let p = Self {
            dim: objective.nrows(),
            objective,
            objective_offset,
            constraints,
            nonneg_domain,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.dim == 0 {
            return Err(ModelError::EmptyProblem);
        }
        if !self.objective_offset.is_finite() {
            return Err(ModelError::BadOffset);
        }
        check_shape_r(&self.objective, self.dim, MatrixRef::Objective)?;
        if !is_symmetric(&self.objective) {
            return Err(ModelError::NotSymmetric {
                which: MatrixRef::Objective,
            });
        }
        for (i, c) in self.constraints.iter().enumerate() {
            check_shape_r(&c.matrix, self.dim, MatrixRef::Constraint(i))?;
            if !is_symmetric(&c.matrix) {
                return Err(ModelError::NotSymmetric {
                    which: MatrixRef::Constraint(i),
                });
            }
            if !c.sense.bounds_ok() {
                return Err(ModelError::BadBound { index: i });
            }
        }
        Ok(())
    }
}

fn check_shape_c(m: &CMat, dim: usize, which: MatrixRef) -> Result<(), ModelError> {
    if m.nrows() != dim || m.ncols() != dim {
        return Err(ModelError::BadShape {
            which,
            rows: m.nrows(),
            cols: m.ncols(),
            dim,
        });
    }
    Ok(())
}

fn check_shape_r(m: &RMat, dim: usize, which: MatrixRef) -> Result<(), ModelError> {
    if m.nrows() != dim || m.ncols() != dim {
        return Err(ModelError::BadShape {
            which,
            rows: m.nrows(),
            cols: m.ncols(),
            dim,
        });
    }
    Ok(())
}

/// One canonical form `quadratic(v) + offset ≤ 0` (or the objective when it
/// sits in the `objective` slot).
#[derive(Debug, Clone)]
pub struct QuadForm<M> {
    pub matrix: M,
    pub offset: f64,
}

/// A problem reduced to the unified inequality-only family.
#[derive(Debug, Clone)]
pub struct Canonical<M> {
    pub dim: usize,
    pub objective: QuadForm<M>,
    pub constraints: Vec<QuadForm<M>>,
    /// original constraint index → canonical row indices
    pub provenance: Vec<Vec<usize>>,
    pub equality_band: f64,
}

impl<M> Canonical<M> {
    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }
}

/// Canonicalized QCQP, tagged by the encoding family it is destined for.
#[derive(Debug, Clone)]
pub enum CanonicalQcqp {
    /// Complex-encoded (amplitude encoding); Hermitian matrices.
    Complex(Canonical<CMat>),
    /// Real-encoded (probability encoding); symmetric matrices.
    Real(Canonical<RMat>),
}

impl CanonicalQcqp {
    pub fn dim(&self) -> usize {
        match self {
            CanonicalQcqp::Complex(c) => c.dim,
            CanonicalQcqp::Real(c) => c.dim,
        }
    }

    pub fn num_constraints(&self) -> usize {
        match self {
            CanonicalQcqp::Complex(c) => c.num_constraints(),
            CanonicalQcqp::Real(c) => c.num_constraints(),
        }
    }

    pub fn provenance(&self) -> &[Vec<usize>] {
        match self {
            CanonicalQcqp::Complex(c) => &c.provenance,
            CanonicalQcqp::Real(c) => &c.provenance,
        }
    }

    pub fn equality_band(&self) -> f64 {
        match self {
            CanonicalQcqp::Complex(c) => c.equality_band,
            CanonicalQcqp::Real(c) => c.equality_band,
        }
    }
}

fn canonical_rows<M>(matrix: &M, sense: Sense, delta: f64) -> Vec<QuadForm<M>>
where
    M: Clone + Neg<Output = M>,
{
    match sense {
        Sense::Le(c) => vec![QuadForm {
            matrix: matrix.clone(),
            offset: -c,
        }],
        Sense::Ge(c) => vec![QuadForm {
            matrix: -matrix.clone(),
            offset: c,
        }],
        Sense::Eq(c) => vec![
            QuadForm {
                matrix: matrix.clone(),
                offset: -c - delta,
            },
            QuadForm {
                matrix: -matrix.clone(),
                offset: c - delta,
            },
        ],
        Sense::Range { lo, hi } => vec![
            QuadForm {
                matrix: matrix.clone(),
                offset: -hi,
            },
            QuadForm {
                matrix: -matrix.clone(),
                offset: lo,
            },
        ],
    }
}

fn canonicalize_constraints<M>(
    pairs: &[(&M, Sense)],
    delta: f64,
) -> (Vec<QuadForm<M>>, Vec<Vec<usize>>)
where
    M: Clone + Neg<Output = M>,
{
    let mut rows = Vec::new();
    let mut provenance = Vec::with_capacity(pairs.len());
    for (matrix, sense) in pairs {
        let new_rows = canonical_rows(*matrix, *sense, delta);
        let start = rows.len();
        provenance.push((start..start + new_rows.len()).collect());
        rows.extend(new_rows);
    }
    (rows, provenance)
}

/// Reduce a validated problem to the inequality-only canonical family.
///
/// `delta` is the half-width of the band that replaces each equality.
pub fn canonicalize(problem: &Qcqp, delta: f64) -> Result<CanonicalQcqp, ModelError> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(ModelError::BadBand { delta });
    }
    match problem {
        Qcqp::Complex(p) => {
            p.validate()?;
            let pairs: Vec<_> = p.constraints.iter().map(|c| (&c.matrix, c.sense)).collect();
            let (constraints, provenance) = canonicalize_constraints(&pairs, delta);
            Ok(CanonicalQcqp::Complex(Canonical {
                dim: p.dim,
                objective: QuadForm {
                    matrix: p.objective.clone(),
                    offset: p.objective_offset,
                },
                constraints,
                provenance,
                equality_band: delta,
            }))
        }
        Qcqp::Real(p) => {
            p.validate()?;
            let pairs: Vec<_> = p.constraints.iter().map(|c| (&c.matrix, c.sense)).collect();
            let (constraints, provenance) = canonicalize_constraints(&pairs, delta);
            Ok(CanonicalQcqp::Real(Canonical {
                dim: p.dim,
                objective: QuadForm {
                    matrix: p.objective.clone(),
                    offset: p.objective_offset,
                },
                constraints,
                provenance,
                equality_band: delta,
            }))
        }
    }
}

/// Real 2N×2N image of a Hermitian matrix: with `x = a + ib`,
/// `[a;b]ᵀ M [a;b] = x† A x` for `M = [[Re A, −Im A], [Im A, Re A]]`.
pub fn realify_matrix(a: &CMat) -> RMat {
    let n = a.nrows();
    let mut m = RMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let re = a[(i, j)].re;
            let im = a[(i, j)].im;
            m[(i, j)] = re;
            m[(n + i, n + j)] = re;
            m[(i, n + j)] = -im;
            m[(n + i, j)] = im;
        }
    }
    m
}

/// Recast a complex problem over `x ∈ C^N` as a real one over the stacked
/// vector `[Re x; Im x] ∈ R^{2N}`.
pub fn complex_to_real(problem: &ComplexQcqp) -> Result<RealQcqp, ModelError> {
    problem.validate()?;
    let constraints = problem
        .constraints
        .iter()
        .map(|c| RealConstraint {
            matrix: realify_matrix(&c.matrix),
            sense: c.sense,
        })
        .collect();
    Ok(RealQcqp {
        dim: 2 * problem.dim,
        objective: realify_matrix(&problem.objective),
        objective_offset: problem.objective_offset,
        constraints,
        nonneg_domain: false,
    })
}

/// Outcome of [`split_nonnegative`]; `was_noop` reports that the input was
/// already flagged non-negative and returned unchanged.
#[derive(Debug, Clone)]
pub struct SplitOutcome {
    pub problem: RealQcqp,
    pub was_noop: bool,
}

fn split_matrix(b: &RMat) -> RMat {
    let n = b.nrows();
    let mut m = RMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let v = b[(i, j)];
            m[(i, j)] = v;
            m[(n + i, n + j)] = v;
            m[(i, n + j)] = -v;
            m[(n + i, j)] = -v;
        }
    }
    m
}

/// Rewrite `y = y1 − y2` with `y1, y2 ≥ 0`, doubling the dimension. Every
/// quadratic `yᵀBy` becomes `zᵀ [[B,−B],[−B,B]] z` over `z = [y1; y2]`.
pub fn split_nonnegative(problem: &RealQcqp) -> Result<SplitOutcome, ModelError> {
    problem.validate()?;
    if problem.nonneg_domain {
        return Ok(SplitOutcome {
            problem: problem.clone(),
            was_noop: true,
        });
    }
    let constraints = problem
        .constraints
        .iter()
        .map(|c| RealConstraint {
            matrix: split_matrix(&c.matrix),
            sense: c.sense,
        })
        .collect();
    Ok(SplitOutcome {
        problem: RealQcqp {
            dim: 2 * problem.dim,
            objective: split_matrix(&problem.objective),
            objective_offset: problem.objective_offset,
            constraints,
            nonneg_domain: true,
        },
        was_noop: false,
    })
}

/// Dense evaluation of `v† M v` for Hermitian `M`; the value is real up to
/// rounding, and the real part is returned.
///
/// This is the oracle that the circuit-backed estimators are tested against.
pub fn eval_quadratic_complex(m: &CMat, v: &DVector<Complex64>) -> Result<f64, ModelError> {
    if m.nrows() != v.len() || m.ncols() != v.len() {
        return Err(ModelError::DimensionMismatch {
            matrix: m.nrows(),
            vector: v.len(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..v.len() {
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..v.len() {
            row += m[(i, j)] * v[j];
        }
        acc += v[i].conj() * row;
    }
    Ok(acc.re)
}

/// Dense evaluation of `vᵀ M v`.
pub fn eval_quadratic_real(m: &RMat, v: &DVector<f64>) -> Result<f64, ModelError> {
    if m.nrows() != v.len() || m.ncols() != v.len() {
        return Err(ModelError::DimensionMismatch {
            matrix: m.nrows(),
            vector: v.len(),
        });
    }
    let mut acc = 0.0;
    for i in 0..v.len() {
        let mut row = 0.0;
        for j in 0..v.len() {
            row += m[(i, j)] * v[j];
        }
        acc += v[i] * row;
    }
    Ok(acc)
}

/// Imaginary residue of `v† M v`, for the Hermitian-form property checks.
pub fn quadratic_imag_residue(m: &CMat, v: &DVector<Complex64>) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..v.len() {
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..v.len() {
            row += m[(i, j)] * v[j];
        }
        acc += v[i].conj() * row;
    }
    acc.im.abs()
}
