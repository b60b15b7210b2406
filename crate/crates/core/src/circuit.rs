//! Hardware-efficient ansatz and exact statevector simulation.
//!
//! The circuit is `l` repetitions of [Ry column, Rz column, CZ ladder on
//! nearest-neighbour pairs] followed by one final [Ry column, Rz column].
//! Rotations follow the convention `R(α) = exp(−iαG/2)` so the standard
//! ±π/2 parameter-shift rule is exact. Qubit `q` is bit `q` of the basis
//! index (little-endian).

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DVector;
use num_complex::Complex64;
#[cfg_attr(test, allow(unused_imports))]
use num_traits::Float;
use rand_chacha::ChaCha8Rng;

use crate::model::CMat;

/// Hard cap on simulated qubits; desk-scale problems need at most 6.
pub const MAX_QUBITS: usize = 20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircuitError {
    #[error("qubit count must be between 1 and {MAX_QUBITS}, got {0}")]
    BadQubitCount(usize),
    #[error("layer count must be at least 1, got {0}")]
    BadLayerCount(usize),
    #[error("expected {expected} parameters, got {got}")]
    ThetaLength { expected: usize, got: usize },
    #[error("parameter {index} is not finite")]
    NonFiniteAngle { index: usize },
    #[error("matrix is {rows}x{cols} but the state has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },
    #[error("expectation has imaginary residue {residue:e} above 1e-10")]
    ImaginaryResidue { residue: f64 },
}

/// One gate of the ansatz. Rotation gates carry the index of the parameter
/// that drives them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Ry { qubit: usize, param: usize },
    Rz { qubit: usize, param: usize },
    Cz { a: usize, b: usize },
}

/// Layered parameterized circuit description.
#[derive(Debug, Clone)]
pub struct Ansatz {
    pub n_qubits: usize,
    pub layers: usize,
    pub gates: Vec<Gate>,
    pub num_params: usize,
}

/// Complex amplitude vector of length `2^{n_qubits}`, unit norm.
#[derive(Debug, Clone)]
pub struct StateVector {
    pub amplitudes: DVector<Complex64>,
}

impl StateVector {
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Build the Fig.-1-style ansatz: `l` entangling layers plus a final
/// rotation pair, `2·n_q·(l+1)` parameters in emission order.
pub fn build_ansatz(n_qubits: usize, layers: usize) -> Result<Ansatz, CircuitError> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(CircuitError::BadQubitCount(n_qubits));
    }
    if layers == 0 {
        return Err(CircuitError::BadLayerCount(layers));
    }
    let mut gates = Vec::new();
    let mut param = 0;
    let mut rotation_pair = |gates: &mut Vec<Gate>| {
        for q in 0..n_qubits {
            gates.push(Gate::Ry { qubit: q, param });
            param += 1;
        }
        for q in 0..n_qubits {
            gates.push(Gate::Rz { qubit: q, param });
            param += 1;
        }
    };
    for _ in 0..layers {
        rotation_pair(&mut gates);
        // CZ ladder, even pairs then odd pairs, so the scheduled ladder
        // depth is 2 for any chain length ≥ 3.
        let mut q = 0;
        while q + 1 < n_qubits {
            gates.push(Gate::Cz { a: q, b: q + 1 });
            q += 2;
        }
        let mut q = 1;
        while q + 1 < n_qubits {
            gates.push(Gate::Cz { a: q, b: q + 1 });
            q += 2;
        }
    }
    rotation_pair(&mut gates);
    Ok(Ansatz {
        n_qubits,
        layers,
        gates,
        num_params: param,
    })
}

/// Scheduled circuit depth: greedy ASAP layering of the gate list, each
/// rotation column contributing 1 and the even/odd CZ ladder 2.
pub fn circuit_depth(ansatz: &Ansatz) -> usize {
    let mut frontier = vec![0usize; ansatz.n_qubits];
    for gate in &ansatz.gates {
        match *gate {
            Gate::Ry { qubit, .. } | Gate::Rz { qubit, .. } => {
                frontier[qubit] += 1;
            }
            Gate::Cz { a, b } => {
                let d = frontier[a].max(frontier[b]) + 1;
                frontier[a] = d;
                frontier[b] = d;
            }
        }
    }
    frontier.into_iter().max().unwrap_or(0)
}

/// Angles that prepare the exactly uniform superposition: the first Ry
/// column at π/2, everything else 0 (CZ phases do not change magnitudes).
pub fn uniform_start_angles(ansatz: &Ansatz) -> Vec<f64> {
    let mut theta = vec![0.0; ansatz.num_params];
    for t in theta.iter_mut().take(ansatz.n_qubits) {
        *t = core::f64::consts::FRAC_PI_2;
    }
    theta
}

/// Evolve `|0…0⟩` through the ansatz with the given angles.
pub fn apply(ansatz: &Ansatz, theta: &[f64]) -> Result<StateVector, CircuitError> {
    if theta.len() != ansatz.num_params {
        return Err(CircuitError::ThetaLength {
            expected: ansatz.num_params,
            got: theta.len(),
        });
    }
    if let Some(index) = theta.iter().position(|t| !t.is_finite()) {
        return Err(CircuitError::NonFiniteAngle { index });
    }
    let dim = 1usize << ansatz.n_qubits;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    amps[0] = Complex64::new(1.0, 0.0);
    for gate in &ansatz.gates {
        match *gate {
            Gate::Ry { qubit, param } => {
                let half = theta[param] * 0.5;
                let (s, c) = (half.sin(), half.cos());
                let bit = 1usize << qubit;
                for i in 0..dim {
                    if i & bit == 0 {
                        let a0 = amps[i];
                        let a1 = amps[i | bit];
                        amps[i] = a0 * c - a1 * s;
                        amps[i | bit] = a0 * s + a1 * c;
                    }
                }
            }
            Gate::Rz { qubit, param } => {
                let half = theta[param] * 0.5;
                let phase0 = Complex64::new(half.cos(), -half.sin());
                let phase1 = phase0.conj();
                let bit = 1usize << qubit;
                for (i, amp) in amps.iter_mut().enumerate() {
                    *amp *= if i & bit == 0 { phase0 } else { phase1 };
                }
            }
            Gate::Cz { a, b } => {
                let mask = (1usize << a) | (1usize << b);
                for (i, amp) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *amp = -*amp;
                    }
                }
            }
        }
    }
    Ok(StateVector {
        amplitudes: DVector::from_vec(amps),
    })
}

/// `⟨ψ|H|ψ⟩` for Hermitian `H`; errors if the imaginary residue exceeds
/// 1e−10 (internal-consistency guard).
pub fn expectation(state: &StateVector, h: &CMat) -> Result<f64, CircuitError> {
    let dim = state.dim();
    if h.nrows() != dim || h.ncols() != dim {
        return Err(CircuitError::DimensionMismatch {
            rows: h.nrows(),
            cols: h.ncols(),
            dim,
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..dim {
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..dim {
            row += h[(i, j)] * state.amplitudes[j];
        }
        acc += state.amplitudes[i].conj() * row;
    }
    if acc.im.abs() > 1e-10 {
        return Err(CircuitError::ImaginaryResidue {
            residue: acc.im.abs(),
        });
    }
    Ok(acc.re)
}

/// Measurement-outcome probabilities `|⟨φ_j|ψ⟩|²`.
pub fn probabilities(state: &StateVector) -> Vec<f64> {
    state.amplitudes.iter().map(|a| a.norm_sqr()).collect()
}

/// Draw `shots` i.i.d. basis indices from the outcome distribution.
pub fn sample(state: &StateVector, shots: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let probs = probabilities(state);
    sample_from_probabilities(&probs, shots, rng)
}

/// Inverse-CDF sampling from an explicit probability vector.
pub fn sample_from_probabilities(
    probs: &[f64],
    shots: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    use rand::Rng;
    let mut out = Vec::with_capacity(shots);
    for _ in 0..shots {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        let mut drawn = probs.len() - 1;
        for (j, p) in probs.iter().enumerate() {
            acc += p;
            if u < acc {
                drawn = j;
                break;
            }
        }
        out.push(drawn);
    }
    out
}
