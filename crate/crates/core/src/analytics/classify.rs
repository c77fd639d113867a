//! Detector-pattern decision tables for the two cat-code Bell measurement
//! schemes, the polarization type-II fusion, and their hybrid combination.

use super::{CVLetter, CVOutcome, DVOutcome, HybridOutcome, Letter, ParityFlag, Sign, ZFlags};
use crate::error::{Error, Result};

/// Sign read off the total detected photon number: `+` for `N = 4k`,
/// `-` for `N = 4k+2`; after a heralded single loss (odd `N`), `+` for
/// `N = 4k+3` and `-` for `N = 4k+1`.
fn sign_from_total(n: u64) -> Sign {
    match n % 4 {
        0 | 3 => Sign::Plus,
        _ => Sign::Minus,
    }
}

/// Letter-posterior of a zero-containing pattern with total count `n`,
/// conditioned on the no-loss (even-even) sector for even `n` and on the
/// single-loss sector for odd `n`. Count-only, so it cannot depend on the
/// encoding amplitude; aggregate rates come from `cv_rates`.
fn ha_ambiguity_rate(n: u64) -> f64 {
    if n == 0 {
        return 0.5;
    }
    let pow = if n < 1000 { 2f64.powi(n as i32) } else { f64::INFINITY };
    match n % 4 {
        0 => 4.0 / (pow + 4.0),
        2 => 0.0,
        _ => 2.0 / (pow + 2.0),
    }
}

/// Classify an HA detector pattern `(n_a, n_c)`.
///
/// A dark detector leans the letter to `Phi` (same-axis inputs always darken
/// one output); both detectors clicking proves `Psi`. For even totals with
/// both detectors clicking, `n_c - n_a = 2 (mod 4)` proves an odd-odd input.
pub fn classify_ha(n_a: u64, n_c: u64) -> CVOutcome {
    let n = n_a + n_c;
    let (letter, ambiguity_x_rate) = if n_a == 0 || n_c == 0 {
        (CVLetter::Ambiguous { lean: Letter::Phi }, ha_ambiguity_rate(n))
    } else {
        (CVLetter::Definite(Letter::Psi), 0.0)
    };
    let parity_flag = if n % 2 == 1 {
        ParityFlag::SingleLoss
    } else if n_a > 0 && n_c > 0 {
        if (n_c as i64 - n_a as i64).rem_euclid(4) == 2 {
            ParityFlag::OddOddDetected
        } else {
            ParityFlag::EvenEven
        }
    } else {
        ParityFlag::OddOddUndetected
    };
    CVOutcome {
        letter,
        sign: sign_from_total(n),
        parity_flag,
        ambiguity_x_rate,
    }
}

/// Classify an SDR detector pattern `(n_a, n_c, n_ap, n_cp)`.
///
/// Zeros only among `{A, C}` prove `Phi`; zeros only among `{A', C'}` prove
/// `Psi`. Zeros on both sides leave an ambiguity resolved by the projected
/// weights `2^{-clicks}`: the letter with higher weight is taken, and equal
/// weights give rate 1/2 (callers that want the random lean re-draw it from
/// their own RNG stream; this function stays pure and leans `Psi`).
pub fn classify_sdr(n_a: u64, n_c: u64, n_ap: u64, n_cp: u64) -> CVOutcome {
    let n = n_a + n_c + n_ap + n_cp;
    let unprimed_zero = n_a == 0 || n_c == 0;
    let primed_zero = n_ap == 0 || n_cp == 0;

    let (letter, ambiguity_x_rate) = match (unprimed_zero, primed_zero) {
        (true, false) => (CVLetter::Definite(Letter::Phi), 0.0),
        (false, true) => (CVLetter::Definite(Letter::Psi), 0.0),
        _ => {
            // Weight of each letter's consistent dark assignment. A branch
            // leaves its half-amplitude modes at intensity alpha^2/2, so each
            // clicked photon on such a mode halves the weight.
            let zeros_unprimed = (n_a == 0) as u32 + (n_c == 0) as u32;
            let zeros_primed = (n_ap == 0) as u32 + (n_cp == 0) as u32;
            let w_phi = zeros_unprimed as f64 * pow_half(n_ap + n_cp);
            let w_psi = zeros_primed as f64 * pow_half(n_a + n_c);
            if w_psi > w_phi {
                (
                    CVLetter::Ambiguous { lean: Letter::Psi },
                    w_phi / (w_phi + w_psi),
                )
            } else if w_phi > w_psi {
                (
                    CVLetter::Ambiguous { lean: Letter::Phi },
                    w_psi / (w_phi + w_psi),
                )
            } else {
                (CVLetter::Ambiguous { lean: Letter::Psi }, 0.5)
            }
        }
    };

    let parity_flag = if n % 2 == 1 {
        ParityFlag::SingleLoss
    } else if n_a > 0 && n_c > 0 && n_ap == 0 && n_cp == 0 {
        parity_from_residue(n_a as i64 - n_c as i64)
    } else if n_a == 0 && n_c == 0 && n_ap > 0 && n_cp > 0 {
        parity_from_residue(n_ap as i64 - n_cp as i64)
    } else {
        ParityFlag::OddOddUndetected
    };

    CVOutcome {
        letter,
        sign: sign_from_total(n),
        parity_flag,
        ambiguity_x_rate,
    }
}

fn parity_from_residue(diff: i64) -> ParityFlag {
    if diff.rem_euclid(4) == 2 {
        ParityFlag::OddOddDetected
    } else {
        ParityFlag::EvenEven
    }
}

fn pow_half(n: u64) -> f64 {
    if n < 1000 {
        0.5f64.powi(n as i32)
    } else {
        0.0
    }
}

/// Click counts of the four type-II fusion detectors: `(H, V)` on the upper
/// output port and `(H, V)` on the lower one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DvPattern {
    pub upper_h: u8,
    pub upper_v: u8,
    pub lower_h: u8,
    pub lower_v: u8,
}

/// Classify a type-II fusion click pattern.
///
/// One click on each side succeeds: equal polarizations give `Psi-`,
/// different give `Psi+`. Two photons on one side fail onto the letter `Phi`.
/// Fewer than two detected photons herald a DV loss.
pub fn classify_dv(pattern: DvPattern) -> Result<DVOutcome> {
    let upper = pattern.upper_h + pattern.upper_v;
    let lower = pattern.lower_h + pattern.lower_v;
    let total = upper + lower;
    if total > 2 {
        return Err(Error::InvalidPattern(format!(
            "type-II fusion saw {total} photons, at most 2 possible"
        )));
    }
    if total < 2 {
        return Ok(DVOutcome::LossDetected);
    }
    if upper == 1 && lower == 1 {
        let same_pol = (pattern.upper_h == 1) == (pattern.lower_h == 1);
        if same_pol {
            Ok(DVOutcome::SuccessPsiMinus)
        } else {
            Ok(DVOutcome::SuccessPsiPlus)
        }
    } else {
        Ok(DVOutcome::FailLetterPhi)
    }
}

/// Combine the CV and DV measurement results into the hybrid fusion outcome.
///
/// The hybrid letter equals the CV letter; a successful type-II measurement
/// also encodes the letter in its sign (`Psi+` maps to hybrid `Phi`, `Psi-`
/// to hybrid `Psi`) and so removes any CV ambiguity. The hybrid sign equals
/// the CV sign when the DV letter is `Phi` (the failure outcome) and flips
/// when it is `Psi` (the success outcomes). A DV loss keeps the CV reading
/// and marks the outcome as dephased.
pub fn classify_hybrid(cv: CVOutcome, dv: DVOutcome) -> HybridOutcome {
    let lean = match cv.letter {
        CVLetter::Definite(l) => l,
        CVLetter::Ambiguous { lean } => lean,
    };
    match dv {
        DVOutcome::SuccessPsiPlus | DVOutcome::SuccessPsiMinus => {
            let letter = match cv.letter {
                CVLetter::Definite(l) => l,
                CVLetter::Ambiguous { .. } => {
                    if dv == DVOutcome::SuccessPsiPlus {
                        Letter::Phi
                    } else {
                        Letter::Psi
                    }
                }
            };
            HybridOutcome {
                letter,
                sign: cv.sign.flipped(),
                x_error_rate: 0.0,
                z_flags: ZFlags {
                    cv_parity: cv.parity_flag,
                    dv_loss: false,
                },
            }
        }
        DVOutcome::FailLetterPhi => HybridOutcome {
            letter: lean,
            sign: cv.sign,
            x_error_rate: cv.ambiguity_x_rate,
            z_flags: ZFlags {
                cv_parity: cv.parity_flag,
                dv_loss: false,
            },
        },
        DVOutcome::LossDetected => HybridOutcome {
            letter: lean,
            sign: cv.sign,
            x_error_rate: cv.ambiguity_x_rate,
            z_flags: ZFlags {
                cv_parity: cv.parity_flag,
                dv_loss: true,
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ha_table_rows() {
        // N = 4k row with both detectors clicking
        let out = classify_ha(2, 2);
        assert_eq!(out.letter, CVLetter::Definite(Letter::Psi));
        assert_eq!(out.sign, Sign::Plus);
        assert_eq!(out.parity_flag, ParityFlag::EvenEven);
        assert_eq!(out.ambiguity_x_rate, 0.0);

        // vacuum pattern: N = 0 is a true tie
        let out = classify_ha(0, 0);
        assert_eq!(out.letter, CVLetter::Ambiguous { lean: Letter::Phi });
        assert_eq!(out.sign, Sign::Plus);
        assert_eq!(out.ambiguity_x_rate, 0.5);

        // N = 6 = 4k+2 with n_c = n_a (mod 4): even-even, sign -
        let out = classify_ha(3, 3);
        assert_eq!(out.letter, CVLetter::Definite(Letter::Psi));
        assert_eq!(out.sign, Sign::Minus);
        assert_eq!(out.parity_flag, ParityFlag::EvenEven);

        // odd-odd reveal: n_c = n_a + 2 (mod 4)
        let out = classify_ha(1, 3);
        assert_eq!(out.parity_flag, ParityFlag::OddOddDetected);

        // odd totals herald a single loss; sign + at N = 4k+3
        let out = classify_ha(0, 3);
        assert_eq!(out.parity_flag, ParityFlag::SingleLoss);
        assert_eq!(out.sign, Sign::Plus);
        let out = classify_ha(0, 1);
        assert_eq!(out.sign, Sign::Minus);
    }

    #[test]
    fn ha_zero_pattern_posteriors() {
        assert!((classify_ha(4, 0).ambiguity_x_rate - 0.2).abs() < 1e-15);
        assert_eq!(classify_ha(2, 0).ambiguity_x_rate, 0.0);
        assert!((classify_ha(0, 3).ambiguity_x_rate - 0.2).abs() < 1e-15);
        assert!((classify_ha(0, 1).ambiguity_x_rate - 0.5).abs() < 1e-15);
    }

    #[test]
    fn sdr_table_rows() {
        // zeros on both sides, unequal clicks: lean Psi with 2^-5/(2^-3+2^-5)
        let out = classify_sdr(0, 3, 0, 5);
        assert_eq!(out.letter, CVLetter::Ambiguous { lean: Letter::Psi });
        assert!((out.ambiguity_x_rate - 0.2).abs() < 1e-15);

        // equal clicks: rate 1/2
        let out = classify_sdr(0, 2, 0, 2);
        assert!((out.ambiguity_x_rate - 0.5).abs() < 1e-15);

        // zeros only among {A', C'}: definite Psi
        let out = classify_sdr(2, 1, 0, 3);
        assert_eq!(out.letter, CVLetter::Definite(Letter::Psi));

        // n_a = 4, rest dark: leans Phi, N = 4 gives sign +
        let out = classify_sdr(4, 0, 0, 0);
        assert_eq!(out.letter, CVLetter::Ambiguous { lean: Letter::Phi });
        assert_eq!(out.sign, Sign::Plus);

        // odd-odd reveal in the unprimed pair
        let out = classify_sdr(3, 1, 0, 0);
        assert_eq!(out.parity_flag, ParityFlag::OddOddDetected);
        let out = classify_sdr(0, 0, 3, 1);
        assert_eq!(out.parity_flag, ParityFlag::OddOddDetected);
        let out = classify_sdr(0, 0, 2, 2);
        assert_eq!(out.parity_flag, ParityFlag::EvenEven);
    }

    #[test]
    fn classify_is_pure() {
        for _ in 0..3 {
            assert_eq!(classify_ha(5, 0), classify_ha(5, 0));
            assert_eq!(classify_sdr(0, 2, 0, 2), classify_sdr(0, 2, 0, 2));
        }
    }

    #[test]
    fn dv_patterns() {
        let p = |uh, uv, lh, lv| DvPattern {
            upper_h: uh,
            upper_v: uv,
            lower_h: lh,
            lower_v: lv,
        };
        assert_eq!(classify_dv(p(1, 0, 0, 1)).unwrap(), DVOutcome::SuccessPsiPlus);
        assert_eq!(classify_dv(p(0, 1, 1, 0)).unwrap(), DVOutcome::SuccessPsiPlus);
        assert_eq!(classify_dv(p(1, 0, 1, 0)).unwrap(), DVOutcome::SuccessPsiMinus);
        assert_eq!(classify_dv(p(0, 1, 0, 1)).unwrap(), DVOutcome::SuccessPsiMinus);
        assert_eq!(classify_dv(p(1, 1, 0, 0)).unwrap(), DVOutcome::FailLetterPhi);
        assert_eq!(classify_dv(p(0, 0, 2, 0)).unwrap(), DVOutcome::FailLetterPhi);
        assert_eq!(classify_dv(p(1, 0, 0, 0)).unwrap(), DVOutcome::LossDetected);
        assert_eq!(classify_dv(p(0, 0, 0, 0)).unwrap(), DVOutcome::LossDetected);
        assert!(classify_dv(p(2, 1, 0, 0)).is_err());
    }

    #[test]
    fn hybrid_combination() {
        let cv_psi_minus = CVOutcome {
            letter: CVLetter::Definite(Letter::Psi),
            sign: Sign::Minus,
            parity_flag: ParityFlag::EvenEven,
            ambiguity_x_rate: 0.0,
        };
        // DV failure reveals letter Phi: hybrid keeps the CV letter and sign.
        let out = classify_hybrid(cv_psi_minus, DVOutcome::FailLetterPhi);
        assert_eq!(out.letter, Letter::Psi);
        assert_eq!(out.sign, Sign::Minus);
        assert_eq!(out.x_error_rate, 0.0);

        // DV success resolves an ambiguous CV letter with no residual error.
        let cv_amb = CVOutcome {
            letter: CVLetter::Ambiguous { lean: Letter::Psi },
            sign: Sign::Plus,
            parity_flag: ParityFlag::OddOddUndetected,
            ambiguity_x_rate: 0.2,
        };
        let out = classify_hybrid(cv_amb, DVOutcome::SuccessPsiPlus);
        assert_eq!(out.letter, Letter::Phi);
        assert_eq!(out.x_error_rate, 0.0);
        assert_eq!(out.sign, Sign::Minus);

        // both measurements unambiguous: deterministic outcome
        let cv_psi_plus = CVOutcome {
            sign: Sign::Plus,
            ..cv_psi_minus
        };
        let out = classify_hybrid(cv_psi_plus, DVOutcome::SuccessPsiMinus);
        assert_eq!(out.letter, Letter::Psi);
        assert_eq!(out.sign, Sign::Minus);
        assert_eq!(out.x_error_rate, 0.0);

        // ambiguous CV with failed DV keeps the conditional rate
        let out = classify_hybrid(cv_amb, DVOutcome::FailLetterPhi);
        assert_eq!(out.letter, Letter::Psi);
        assert!((out.x_error_rate - 0.2).abs() < 1e-15);
        assert!(!out.z_flags.dv_loss);

        // DV loss sets the dephasing flag
        let out = classify_hybrid(cv_amb, DVOutcome::LossDetected);
        assert!(out.z_flags.dv_loss);
    }
}
