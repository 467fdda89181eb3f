//! Point evaluation of the measures through either route.

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::fisher::{qfi_closed, qfi_gibbs, qfi_xstate};
use crate::model::{gibbs_closed, gibbs_spectral, GibbsState, SpinParams};
use crate::steering::{scn_closed, scre_corrected, scre_paper, sqc_oracle, CoherenceKind};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    /// l1-norm steered coherence.
    Scn,
    /// Relative entropy of steered coherence.
    Scre,
    /// The published SCRE closed form.
    ScrePaper,
    /// Quantum Fisher information, collective X generator.
    Qfi,
    /// The published QFI closed form `m/n`.
    QfiClosed,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Scn,
        Measure::Scre,
        Measure::ScrePaper,
        Measure::Qfi,
        Measure::QfiClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Scn => "SCn",
            Measure::Scre => "SCRE",
            Measure::ScrePaper => "SCREpaper",
            Measure::Qfi => "QFI",
            Measure::QfiClosed => "QFIclosed",
        }
    }

    /// Published formulas that are reported next to the definition rather
    /// than trusted as a fast path.
    pub fn is_formula_only(self) -> bool {
        matches!(self, Measure::ScrePaper | Measure::QfiClosed)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownMeasure;

impl fmt::Display for UnknownMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of SCn, SCRE, SCREpaper, QFI, QFIclosed")
    }
}

impl FromStr for Measure {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownMeasure> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(UnknownMeasure)
    }
}

/// Which evaluation route a sweep uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Spectral Gibbs state and definition-level measures.
    Oracle,
    /// Closed-form Gibbs entries and closed-form measures.
    Closed,
    /// Both, with their absolute difference.
    Both,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Closed => "closed",
            Engine::Both => "both",
        }
    }
}

/// One measure at one parameter point. `oracle` is set for
/// [`Engine::Oracle`] and [`Engine::Both`], `closed` for [`Engine::Closed`]
/// and [`Engine::Both`].
///
/// Formula-only measures always carry the published formula; under
/// [`Engine::Oracle`] it sits in `oracle`, and under [`Engine::Both`] the
/// `oracle` slot holds the definition so the discrepancy is visible.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureValue {
    pub measure: Measure,
    pub oracle: Option<f64>,
    pub closed: Option<f64>,
}

impl MeasureValue {
    /// The single value for one-route engines, the definition for `both`.
    pub fn value(&self) -> f64 {
        self.oracle.or(self.closed).expect("at least one route")
    }

    pub fn abs_diff(&self) -> Option<f64> {
        Some((self.oracle? - self.closed?).abs())
    }

    /// Values in column order: `[value]` for one route, `[oracle, closed,
    /// |oracle - closed|]` for both.
    pub fn columns(&self) -> Vec<f64> {
        match (self.oracle, self.closed) {
            (Some(o), Some(c)) => alloc::vec![o, c, (o - c).abs()],
            (Some(x), None) | (None, Some(x)) => alloc::vec![x],
            (None, None) => Vec::new(),
        }
    }
}

fn oracle_value(m: Measure, g: &GibbsState) -> Result<f64> {
    match m {
        Measure::Scn => sqc_oracle(g.rho(), CoherenceKind::L1),
        Measure::Scre | Measure::ScrePaper => sqc_oracle(g.rho(), CoherenceKind::RelativeEntropy),
        Measure::Qfi | Measure::QfiClosed => qfi_gibbs(g),
    }
}

fn closed_value(m: Measure, g: &GibbsState) -> Result<f64> {
    let e = g.elements();
    Ok(match m {
        Measure::Scn => scn_closed(&e),
        Measure::Scre => scre_corrected(&e),
        Measure::ScrePaper => scre_paper(&e),
        Measure::Qfi => qfi_xstate(&e),
        Measure::QfiClosed => qfi_closed(g.params())?,
    })
}

/// Evaluates `measures` at `p` with the requested engine.
pub fn evaluate_point(
    p: &SpinParams,
    measures: &[Measure],
    engine: Engine,
) -> Result<Vec<MeasureValue>> {
    let spectral = match engine {
        Engine::Oracle | Engine::Both => Some(gibbs_spectral(p)?),
        Engine::Closed => None,
    };
    let closed = match engine {
        Engine::Closed | Engine::Both => Some(gibbs_closed(p)?),
        Engine::Oracle => None,
    };
    measures
        .iter()
        .map(|&measure| {
            let value = match (engine, &spectral, &closed) {
                (Engine::Oracle, Some(g), _) if measure.is_formula_only() => MeasureValue {
                    measure,
                    oracle: Some(closed_value(measure, g)?),
                    closed: None,
                },
                (_, s, c) => MeasureValue {
                    measure,
                    oracle: s.as_ref().map(|g| oracle_value(measure, g)).transpose()?,
                    closed: c.as_ref().map(|g| closed_value(measure, g)).transpose()?,
                },
            };
            Ok(value)
        })
        .collect()
}
