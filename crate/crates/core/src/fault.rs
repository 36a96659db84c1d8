//! Single-fault localization from path-probe outcomes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::separation::{Element, Host, PathSystem, Signature, TargetSet};

/// One outcome per path; `true` means the probe got through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub outcomes: Vec<bool>,
}

impl ProbeReport {
    pub fn all_pass(len: usize) -> Self {
        ProbeReport {
            outcomes: vec![true; len],
        }
    }

    /// Indices of the failed probes.
    pub fn failed(&self) -> Vec<usize> {
        self.outcomes
            .iter()
            .enumerate()
            .filter(|(_, &ok)| !ok)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &ok in &self.outcomes {
            f.write_str(if ok { "P" } else { "F" })?;
        }
        Ok(())
    }
}

/// Reads a string of `P` and `F` characters.
impl FromStr for ProbeReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let outcomes = s
            .trim()
            .chars()
            .map(|c| match c {
                'P' | 'p' => Ok(true),
                'F' | 'f' => Ok(false),
                other => Err(Error::BadToken {
                    line: 1,
                    detail: format!("probe outcome must be P or F, got {:?}", other),
                }),
            })
            .collect::<Result<_>>()?;
        Ok(ProbeReport { outcomes })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnosis {
    NoFault,
    Identified(Element),
    /// No single element explains the failures.
    Inconsistent { failed: Vec<usize> },
}

impl Diagnosis {
    pub fn labeled<H: Host + ?Sized>(&self, host: &H) -> Diagnosis {
        match self {
            Diagnosis::Identified(e) => Diagnosis::Identified(e.labeled(host)),
            other => other.clone(),
        }
    }
}

/// Element signatures of a separating and covering system.
#[derive(Debug, Clone)]
pub struct SignatureTable {
    path_count: usize,
    entries: Vec<(Element, Signature)>,
    by_signature: HashMap<Signature, Element>,
}

impl SignatureTable {
    pub fn path_count(&self) -> usize {
        self.path_count
    }

    pub fn entries(&self) -> &[(Element, Signature)] {
        &self.entries
    }

    pub fn get(&self, e: &Element) -> Option<&Signature> {
        self.entries.iter().find(|(x, _)| x == e).map(|(_, s)| s)
    }
}

pub fn signature_table<H: Host + ?Sized>(fs: &PathSystem<'_, H>, ts: &TargetSet) -> Result<SignatureTable> {
    fs.check(ts, true)?;
    let sigs = fs.signatures(ts);
    let entries: Vec<(Element, Signature)> = ts.elements().iter().copied().zip(sigs).collect();
    let by_signature = entries.iter().map(|(e, s)| (s.clone(), *e)).collect();
    Ok(SignatureTable {
        path_count: fs.len(),
        entries,
        by_signature,
    })
}

/// Probe `i` fails iff the fault lies on path `i`.
pub fn simulate_probes<H: Host + ?Sized>(fs: &PathSystem<'_, H>, fault: Option<Element>) -> Result<ProbeReport> {
    let Some(s) = fault else {
        return Ok(ProbeReport::all_pass(fs.len()));
    };
    let hit = fs.incidence(s)?;
    let mut outcomes = vec![true; fs.len()];
    for &i in hit.indices() {
        outcomes[i] = false;
    }
    Ok(ProbeReport { outcomes })
}

pub fn decode(table: &SignatureTable, report: &ProbeReport) -> Result<Diagnosis> {
    if report.outcomes.len() != table.path_count {
        return Err(Error::ReportLengthMismatch {
            expected: table.path_count,
            got: report.outcomes.len(),
        });
    }
    let failed = report.failed();
    if failed.is_empty() {
        return Ok(Diagnosis::NoFault);
    }
    Ok(match table.by_signature.get(&Signature::new(failed.clone())) {
        Some(&e) => Diagnosis::Identified(e),
        None => Diagnosis::Inconsistent { failed },
    })
}
