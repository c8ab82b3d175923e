//! Hilbert functions, GK-dimension estimates and pertinency.

use serde::Serialize;

use crate::action::FiniteGroup;
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::radical::{radical_constructive, ConstructiveOptions};
use crate::skew::oracle_radical;
use crate::table::GradedIdealTable;

pub const DEFAULT_WINDOW: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub dims: Vec<usize>,
    pub source: String,
}

/// `h(d) = dim R_d − dim J_d`.
pub fn hilbert(alg: &GradedAlgebra, ideal: Option<&GradedIdealTable>) -> HilbertData {
    match ideal {
        None => HilbertData {
            dims: alg.dims(),
            source: "algebra".into(),
        },
        Some(t) => HilbertData {
            dims: t.quotient_dims(),
            source: format!("quotient by {:?} table", t.provenance()).to_lowercase(),
        },
    }
}

/// Which finite difference vanished, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowEvidence {
    pub order: usize,
    pub from_degree: usize,
    pub to_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkEstimate {
    pub value: u32,
    pub exact: bool,
    pub window: Option<WindowEvidence>,
}

fn differences(h: &[i64]) -> Vec<i64> {
    h.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Smallest `k` whose `k`-th difference vanishes on the last `window`
/// entries. A known value wins; `certify_width` trailing zeros certify a
/// finite-dimensional quotient (GK 0) exactly.
pub fn gk_estimate(
    h: &HilbertData,
    known: Option<u32>,
    window: usize,
    certify_width: usize,
) -> Result<GkEstimate> {
    if let Some(k) = known {
        return Ok(GkEstimate {
            value: k,
            exact: true,
            window: None,
        });
    }
    let n = h.dims.len();
    if window == 0 || n < window {
        return Err(Error::InsufficientDegrees {
            window,
            available: n,
        });
    }
    let trailing_zeros = h.dims.iter().rev().take_while(|&&x| x == 0).count();
    if certify_width > 0 && trailing_zeros >= certify_width {
        return Ok(GkEstimate {
            value: 0,
            exact: true,
            window: Some(WindowEvidence {
                order: 0,
                from_degree: n - trailing_zeros,
                to_degree: n - 1,
            }),
        });
    }
    let mut seq: Vec<i64> = h.dims.iter().map(|&x| x as i64).collect();
    let mut k = 0;
    while seq.len() >= window {
        if seq[seq.len() - window..].iter().all(|&x| x == 0) {
            return Ok(GkEstimate {
                value: k as u32,
                exact: false,
                window: Some(WindowEvidence {
                    order: k,
                    from_degree: n - window,
                    to_degree: n - 1,
                }),
            });
        }
        seq = differences(&seq);
        k += 1;
    }
    Err(Error::InsufficientDegrees {
        window: window + k,
        available: n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PertinencyKind {
    Exact,
    Estimate,
    LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct PertinencyReport {
    pub value: i64,
    pub kind: PertinencyKind,
    pub gk_quotient: GkEstimate,
    pub hilbert_r: HilbertData,
    pub hilbert_quotient: HilbertData,
}

/// Which ideal stands in for the radical.
#[derive(Clone, Debug)]
pub enum RadicalSource {
    Oracle,
    Constructive(ConstructiveOptions),
}

/// `GKdim(R) − GKdim(R/𝔯)`.
pub fn pertinency(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
    source: &RadicalSource,
    window: usize,
) -> Result<PertinencyReport> {
    let known = alg.known_gkdim().ok_or(Error::NeedsGKdim)?;
    let (table, constructive) = match source {
        RadicalSource::Oracle => (oracle_radical(alg, group, max_degree)?, false),
        RadicalSource::Constructive(opts) => {
            (radical_constructive(alg, group, max_degree, opts)?, true)
        }
    };
    pertinency_from_table(alg, &table, known, constructive, window)
}

pub fn pertinency_from_table(
    alg: &GradedAlgebra,
    table: &GradedIdealTable,
    known: u32,
    constructive: bool,
    window: usize,
) -> Result<PertinencyReport> {
    let hq = hilbert(alg, Some(table));
    let certify = alg.alphabet().max_degree() as usize;
    let gk = gk_estimate(&hq, None, window, certify)?;
    let kind = if constructive {
        PertinencyKind::LowerBound
    } else if gk.exact {
        PertinencyKind::Exact
    } else {
        PertinencyKind::Estimate
    };
    let mut hr = hilbert(alg, None);
    hr.dims.truncate(hq.dims.len());
    Ok(PertinencyReport {
        value: known as i64 - gk.value as i64,
        kind,
        gk_quotient: gk,
        hilbert_r: hr,
        hilbert_quotient: hq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: &[usize]) -> HilbertData {
        HilbertData {
            dims: d.to_vec(),
            source: "test".into(),
        }
    }

    #[test]
    fn estimates() {
        let lin: Vec<usize> = (1..=10).collect();
        assert_eq!(gk_estimate(&h(&lin), None, 4, 1).unwrap().value, 2);
        assert_eq!(gk_estimate(&h(&[1; 10]), None, 4, 1).unwrap().value, 1);
        let g = gk_estimate(&h(&[1, 3, 3, 3, 3, 3, 3, 3]), None, 4, 1).unwrap();
        assert_eq!((g.value, g.exact), (1, false));
        let z = gk_estimate(&h(&[1, 1, 0, 0, 0]), None, 4, 1).unwrap();
        assert_eq!((z.value, z.exact), (0, true));
        let k = gk_estimate(&h(&[1, 2]), Some(3), 4, 1).unwrap();
        assert_eq!((k.value, k.exact), (3, true));
        assert_eq!(
            gk_estimate(&h(&[1, 2]), None, 4, 1).unwrap_err(),
            Error::InsufficientDegrees {
                window: 4,
                available: 2
            }
        );
    }
}
