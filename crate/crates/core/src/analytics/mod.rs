//! Closed-form cat-state quantities, detector-pattern classification and
//! per-parity Bell-measurement error rates for the HA and SDR schemes.
//!
//! Conventions used throughout:
//!
//! - An even (odd) cat state along axis `g ∈ {alpha, i*alpha}` is
//!   `N (|g> + |-g>)` (`N (|g> - |-g>)`).
//! - The two CV-qubit basis axes are the real axis (`alpha`, logical 0) and
//!   the imaginary axis (`i*alpha`, logical 1). Bell letters: `Phi` for
//!   same-axis product support, `Psi` for cross-axis.
//! - Error rates are averaged over the four axis products with equal weight,
//!   with the mode parities fixed by the loss sector (`EE`, `EO`, `OO`).

mod classify;
mod enumeration;
mod rates;

pub use classify::{classify_dv, classify_ha, classify_hybrid, classify_sdr};
pub use enumeration::{enumerate_cv_rates, PatternEnumeration};
pub use rates::cv_rates;

use crate::error::{Error, Result};
use serde::Serialize;

/// Coherent-state amplitude of the cat encoding, `alpha > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Amplitude(f64);

impl Amplitude {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "cat amplitude must be finite and positive, got {alpha}"
            )));
        }
        Ok(Amplitude(alpha))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Cat-code Bell measurement circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Scheme {
    /// One balanced beamsplitter, two PNR detectors.
    Ha,
    /// Four beamsplitters, one pi/2 phase shifter, two vacuum ancillas,
    /// four PNR detectors.
    Sdr,
}

impl Scheme {
    pub fn modes(self) -> usize {
        match self {
            Scheme::Ha => 2,
            Scheme::Sdr => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Scheme::Ha => "ha",
            Scheme::Sdr => "sdr",
        }
    }
}

/// Photon-number parity of the two CV input modes. `EO` covers both mixed
/// orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InputParity {
    EvenEven,
    EvenOdd,
    OddOdd,
}

impl InputParity {
    pub fn label(self) -> &'static str {
        match self {
            InputParity::EvenEven => "ee",
            InputParity::EvenOdd => "eo",
            InputParity::OddOdd => "oo",
        }
    }
}

/// Bell letter of a CV or hybrid outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Psi,
    Phi,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::Psi => Letter::Phi,
            Letter::Phi => Letter::Psi,
        }
    }
}

/// Bell sign of a CV or hybrid outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Letter reading of a CV detector pattern. Ambiguous patterns carry the
/// majority lean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CVLetter {
    Definite(Letter),
    Ambiguous { lean: Letter },
}

/// What the detected photon-number pattern proves about the input parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFlag {
    /// Pattern proves an even-even input.
    EvenEven,
    /// Odd total count: a single lost photon is heralded.
    SingleLoss,
    /// Pattern proves an odd-odd input; the phase flip is corrected.
    OddOddDetected,
    /// Even total count, parity not provable; an odd-odd phase flip would
    /// pass undetected.
    OddOddUndetected,
}

/// Outcome of the cat-code Bell measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVOutcome {
    pub letter: CVLetter,
    pub sign: Sign,
    pub parity_flag: ParityFlag,
    /// Probability that the leaned letter is wrong, conditioned on the
    /// pattern. Zero unless `letter` is ambiguous; at most 1/2.
    pub ambiguity_x_rate: f64,
}

/// Outcome of the polarization type-II fusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DVOutcome {
    SuccessPsiPlus,
    SuccessPsiMinus,
    /// Both photons on one side: the measurement fails but reveals letter Phi.
    FailLetterPhi,
    /// Fewer than two photons detected.
    LossDetected,
}

/// Joint outcome of the hybrid fusion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridOutcome {
    pub letter: Letter,
    pub sign: Sign,
    /// Conditional letter-error rate of this outcome (the 1/2 from the DV
    /// failure odds enters the loss model, not here).
    pub x_error_rate: f64,
    /// Parity bookkeeping for downstream loss accounting.
    pub z_flags: ZFlags,
}

/// Loss bookkeeping attached to a hybrid outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZFlags {
    pub cv_parity: ParityFlag,
    /// A DV photon was lost: the outcome sign is dephased (locatable Z).
    pub dv_loss: bool,
}

/// Per-parity rate table of the cat-code Bell measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVRateTable {
    /// Total letter-misassignment rate of the pattern decision rule.
    pub p_x: f64,
    /// Probability of an ambiguous (letter-locatable) pattern.
    pub p_loc: f64,
    /// Probability that an odd-odd phase flip passes undetected. Only
    /// defined for odd-odd input parity.
    pub p_z_oo: Option<f64>,
}

/// The four cat normalization constants at amplitude `alpha`:
/// even cat, odd cat, and the two Bell normalizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatNormalizations {
    pub n_plus: f64,
    pub n_minus: f64,
    pub n_bell_plus: f64,
    pub n_bell_minus: f64,
}

/// Normalization constants `1/sqrt(2(1 ± e^{-2a²}))` of the even/odd cat
/// states and `cosh a² / sqrt(2(cosh² a² ± cos² a²))` of the CV Bell states.
pub fn cat_normalizations(alpha: Amplitude) -> CatNormalizations {
    let a2 = alpha.get() * alpha.get();
    let ov = (-2.0 * a2).exp();
    let ch = a2.cosh();
    let cs = a2.cos();
    CatNormalizations {
        n_plus: 1.0 / (2.0 * (1.0 + ov)).sqrt(),
        n_minus: 1.0 / (2.0 * (1.0 - ov)).sqrt(),
        n_bell_plus: ch / (2.0 * (ch * ch + cs * cs)).sqrt(),
        n_bell_minus: ch / (2.0 * (ch * ch - cs * cs)).sqrt(),
    }
}
