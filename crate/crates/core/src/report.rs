use std::fmt;

use serde::Serialize;

use crate::linalg::{format_rational, Rational};

/// Where an identity failed: the lexicographically smallest failing basis
/// tuple, the first differing output coordinate, and the two values found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub coordinate: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: String,
    pub witness: Option<Witness>,
    pub skipped: bool,
    /// Set for informational rows, which never affect [`Report::passed`].
    pub property: Option<bool>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: Option<Witness>) {
        self.verdicts.push(Verdict {
            axiom: axiom.into(),
            witness,
            skipped: false,
            property: None,
        });
    }

    pub fn skip(&mut self, axiom: impl Into<String>) {
        self.verdicts.push(Verdict {
            axiom: axiom.into(),
            witness: None,
            skipped: true,
            property: None,
        });
    }

    /// Records whether a property holds without making it a requirement.
    pub fn note(&mut self, property: impl Into<String>, holds: bool) {
        self.verdicts.push(Verdict {
            axiom: property.into(),
            witness: None,
            skipped: false,
            property: Some(holds),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.passed())
    }
}

/// Runs `eval` over `tuples` in order and returns the first mismatch.
///
/// Callers must supply tuples in lexicographic order so the witness is the
/// smallest failing one.
pub(crate) fn first_failure<I, T, F>(tuples: I, mut eval: F) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
    T: PartialEq + Coords,
    F: FnMut(&[usize]) -> (T, T),
{
    for tuple in tuples {
        let (lhs, rhs) = eval(&tuple);
        if lhs != rhs {
            let (coordinate, l, r) = lhs
                .coords()
                .iter()
                .zip(rhs.coords())
                .enumerate()
                .find(|(_, (a, b))| a != b)
                .map(|(p, (a, b))| (p, a.clone(), b.clone()))
                .expect("unequal tensors differ somewhere");
            return Some(Witness {
                tuple,
                coordinate,
                lhs: l,
                rhs: r,
            });
        }
    }
    None
}

pub(crate) trait Coords {
    fn coords(&self) -> &[Rational];
}

impl<const R: usize> Coords for crate::linalg::Tensor<R> {
    fn coords(&self) -> &[Rational] {
        crate::linalg::Tensor::coords(self)
    }
}

/// All tuples in `{0..n}^arity`, lexicographically.
pub(crate) fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(arity as u32);
    (0..total).map(move |mut p| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = p % n;
            p /= n;
        }
        t
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            if v.skipped {
                writeln!(f, "{:<28} skipped", v.axiom)?;
                continue;
            }
            if let Some(holds) = v.property {
                let word = if holds { "holds" } else { "does not hold" };
                writeln!(f, "{:<28} {word}", v.axiom)?;
                continue;
            }
            match &v.witness {
                None => writeln!(f, "{:<28} pass", v.axiom)?,
                Some(w) => writeln!(
                    f,
                    "{:<28} FAIL at basis tuple {:?}, coordinate {}: {} != {}",
                    v.axiom,
                    w.tuple,
                    w.coordinate,
                    format_rational(&w.lhs),
                    format_rational(&w.rhs)
                )?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    tuple: &'a [usize],
    coordinate: usize,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    axiom: &'a str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson<'a>>,
}

impl Report {
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<VerdictJson<'_>> = self
            .verdicts
            .iter()
            .map(|v| VerdictJson {
                axiom: &v.axiom,
                verdict: if v.skipped {
                    "skipped"
                } else if let Some(holds) = v.property {
                    if holds {
                        "holds"
                    } else {
                        "does_not_hold"
                    }
                } else if v.passed() {
                    "pass"
                } else {
                    "fail"
                },
                witness: v.witness.as_ref().map(|w| WitnessJson {
                    tuple: &w.tuple,
                    coordinate: w.coordinate,
                    lhs: format_rational(&w.lhs),
                    rhs: format_rational(&w.rhs),
                }),
            })
            .collect();
        serde_json::to_value(items).expect("report serializes")
    }
}
