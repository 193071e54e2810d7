//! End-to-end checks: sums of induced centralizer characters against the
//! regular character and the (graded, per-shape) Orlik–Solomon character,
//! with machine-readable reports.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::character::{alpha_like, chi_for_class, phi_for_class, LinearCharacterSpec};
use crate::class_function::{CentralizerFusion, ClassFunction};
use crate::classes::{ClassLabel, ClassTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Budget, Group};
use crate::lattice::{total, Lattice, OsData};
use crate::polynomial::Polynomial;
use crate::shape::{cuspidal_labels, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Regular,
    Os,
    Graded,
    Shape,
    Poincare,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Regular,
        Check::Os,
        Check::Graded,
        Check::Shape,
        Check::Poincare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Regular => "regular",
            Check::Os => "os",
            Check::Graded => "graded",
            Check::Shape => "shape",
            Check::Poincare => "poincare",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "check",
                input: s.to_string(),
            })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub expected: Cyclotomic,
    pub got: Cyclotomic,
}

/// Inner products of `got - expected` with the trivial and sign characters.
#[derive(Clone, Debug, Serialize)]
pub struct Triage {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub trivial: Cyclotomic,
    pub sign: Cyclotomic,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    pub threads: usize,
    pub budget: Budget,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub check: String,
    pub status: Status,
    pub discrepancies: Vec<Discrepancy>,
    pub timing_ms: u64,
    pub config: ReportConfig,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub triage: Vec<Triage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<String>>,
}

impl VerificationReport {
    pub fn skipped(group: &str, check: &str, note: &str, config: ReportConfig) -> Self {
        Self {
            group: group.to_string(),
            check: check.to_string(),
            status: Status::Skipped,
            discrepancies: Vec::new(),
            timing_ms: 0,
            config,
            triage: Vec::new(),
            note: Some(note.to_string()),
            table: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        write!(f, "{} {}", self.group, self.check)?;
        if let Some(s) = &self.config.shape {
            write!(f, " [{s}]")?;
        }
        write!(f, ": {status} ({} ms)", self.timing_ms)?;
        if let Some(n) = &self.note {
            write!(f, ": {n}")?;
        }
        for d in &self.discrepancies {
            write!(f, "\n  class {}", d.class)?;
            if let Some(p) = d.degree {
                write!(f, " degree {p}")?;
            }
            write!(f, ": expected {}, got {}", d.expected, d.got)?;
        }
        for t in &self.triage {
            write!(f, "\n  triage")?;
            if let Some(p) = t.degree {
                write!(f, " degree {p}")?;
            }
            write!(f, ": <diff, 1> = {}, <diff, sgn> = {}", t.trivial, t.sign)?;
        }
        Ok(())
    }
}

/// Runs checks on one group, caching the class table, the centralizer
/// fusion data per class and the lattice.
pub struct Verifier {
    group: Group,
    budget: Budget,
    table: Arc<ClassTable>,
    fusions: Mutex<HashMap<ClassLabel, Arc<CentralizerFusion>>>,
    os: OnceLock<std::result::Result<Arc<(Lattice, OsData)>, Error>>,
}

impl Verifier {
    pub fn new(group: Group, budget: Budget) -> Result<Self> {
        let table = Arc::new(ClassTable::new(group, &budget)?);
        Ok(Self {
            group,
            budget,
            table,
            fusions: Mutex::new(HashMap::new()),
            os: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn table(&self) -> &Arc<ClassTable> {
        &self.table
    }

    fn config(&self, shape: Option<&Shape>) -> ReportConfig {
        ReportConfig {
            threads: rayon::current_num_threads(),
            budget: self.budget,
            shape: shape.map(Shape::to_string),
        }
    }

    fn fusion(
        &self,
        label: &ClassLabel,
        spec: &LinearCharacterSpec,
    ) -> Result<Arc<CentralizerFusion>> {
        if let Some(f) = self.fusions.lock().expect("fusion cache").get(label) {
            return Ok(f.clone());
        }
        spec.check_homomorphism(64)?;
        let f = Arc::new(CentralizerFusion::compute(&self.table, spec, &self.budget)?);
        // concurrent computations of the same entry agree; keep the first
        Ok(self
            .fusions
            .lock()
            .expect("fusion cache")
            .entry(label.clone())
            .or_insert(f)
            .clone())
    }

    /// `Ind_{C_W(w)}^W φ_w`.
    pub fn induced_phi(&self, label: &ClassLabel) -> Result<ClassFunction> {
        let phi = phi_for_class(&self.group, label)?;
        self.fusion(label, &phi)?.induce(&self.table, &phi)
    }

    /// `Ind_{C_W(w)}^W (α_w φ_w)`.
    pub fn induced_alpha_phi(&self, label: &ClassLabel) -> Result<ClassFunction> {
        let phi = phi_for_class(&self.group, label)?;
        let alpha_phi = phi.product(&alpha_like(&phi))?;
        self.fusion(label, &phi)?.induce(&self.table, &alpha_phi)
    }

    /// `Ind_{C_W(w)}^W χ_w` with `χ_w = α_w ε φ_w`.
    pub fn induced_chi(&self, label: &ClassLabel) -> Result<ClassFunction> {
        let chi = chi_for_class(&self.group, label)?;
        let phi = phi_for_class(&self.group, label)?;
        self.fusion(label, &phi)?.induce(&self.table, &chi)
    }

    fn sum_over(
        &self,
        labels: &[ClassLabel],
        f: impl Fn(&ClassLabel) -> Result<ClassFunction> + Sync + Send,
    ) -> Result<ClassFunction> {
        let parts: Vec<ClassFunction> = labels.par_iter().map(f).collect::<Result<_>>()?;
        parts
            .iter()
            .try_fold(ClassFunction::zero(self.table.clone()), |acc, x| acc.add(x))
    }

    fn lattice_data(&self) -> Result<Arc<(Lattice, OsData)>> {
        self.os
            .get_or_init(|| {
                let lattice = Lattice::build(&self.group, &self.budget)?;
                let data = lattice.os_data(&self.table)?;
                Ok(Arc::new((lattice, data)))
            })
            .clone()
    }

    pub fn lattice(&self) -> Result<Arc<(Lattice, OsData)>> {
        self.lattice_data()
    }

    /// Degree-`p` Orlik–Solomon characters.
    pub fn graded_os_character(&self) -> Result<Vec<ClassFunction>> {
        Ok(self.lattice_data()?.1.graded(&self.table))
    }

    pub fn shape_os_character(&self, shape: &Shape) -> Result<Vec<ClassFunction>> {
        self.lattice_data()?.1.shape_graded(&self.table, shape)
    }

    fn report(
        &self,
        check: Check,
        shape: Option<&Shape>,
        start: Instant,
        comparisons: Vec<(Option<usize>, ClassFunction, ClassFunction)>,
    ) -> Result<VerificationReport> {
        let mut discrepancies = Vec::new();
        let mut triage = Vec::new();
        let triv = ClassFunction::trivial(self.table.clone());
        let sign = ClassFunction::sign(self.table.clone());
        for (degree, expected, got) in comparisons {
            if expected == got {
                continue;
            }
            for (c, class) in self.table.classes().iter().enumerate() {
                if expected.value(c) != got.value(c) {
                    discrepancies.push(Discrepancy {
                        class: class.label.to_string(),
                        degree,
                        expected: expected.value(c).clone(),
                        got: got.value(c).clone(),
                    });
                }
            }
            let diff = got.sub(&expected)?;
            triage.push(Triage {
                degree,
                trivial: diff.inner_product(&triv)?,
                sign: diff.inner_product(&sign)?,
            });
        }
        Ok(VerificationReport {
            group: self.group.to_string(),
            check: check.name().to_string(),
            status: if discrepancies.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            discrepancies,
            timing_ms: start.elapsed().as_millis() as u64,
            config: self.config(shape),
            triage,
            note: None,
            table: None,
        })
    }

    /// `ρ = Σ_w Ind φ_w`.
    pub fn verify_regular(&self) -> Result<VerificationReport> {
        let start = Instant::now();
        let labels: Vec<ClassLabel> = self
            .table
            .classes()
            .iter()
            .map(|c| c.label.clone())
            .collect();
        let got = self.sum_over(&labels, |l| self.induced_phi(l))?;
        let expected = ClassFunction::regular(self.table.clone());
        self.report(Check::Regular, None, start, vec![(None, expected, got)])
    }

    /// `ω = ε Σ_w Ind(α_w φ_w)`.
    pub fn verify_os(&self) -> Result<VerificationReport> {
        let start = Instant::now();
        let labels: Vec<ClassLabel> = self
            .table
            .classes()
            .iter()
            .map(|c| c.label.clone())
            .collect();
        let got = self
            .sum_over(&labels, |l| self.induced_alpha_phi(l))?
            .scale_by_sign();
        let expected = total(&self.graded_os_character()?)?;
        self.report(Check::Os, None, start, vec![(None, expected, got)])
    }

    /// `H^p = Σ_{ℓ(w) = p} Ind χ_w` for each `p`.
    pub fn verify_graded(&self) -> Result<VerificationReport> {
        let start = Instant::now();
        let graded = self.graded_os_character()?;
        let mut by_length: Vec<Vec<ClassLabel>> = vec![Vec::new(); self.group.rank() + 1];
        for c in self.table.classes() {
            by_length[self.group.reflection_length(&c.representative)?].push(c.label.clone());
        }
        let mut comparisons = Vec::new();
        for (p, labels) in by_length.iter().enumerate() {
            let got = self.sum_over(labels, |l| self.induced_chi(l))?;
            comparisons.push((Some(p), graded[p].clone(), got));
        }
        self.report(Check::Graded, None, start, comparisons)
    }

    /// `ω_λ = Σ_{w cuspidal in W_λ} Ind χ_w`, in total and per degree.
    pub fn verify_shape(&self, shape: &Shape) -> Result<VerificationReport> {
        let start = Instant::now();
        let labels = cuspidal_labels(&self.group, shape)?;
        let got = self.sum_over(&labels, |l| self.induced_chi(l))?;
        let graded = self.shape_os_character(shape)?;
        let rank = shape.rank(&self.group);
        let mut comparisons = vec![(None, total(&graded)?, got.clone())];
        let zero = ClassFunction::zero(self.table.clone());
        for (p, f) in graded.into_iter().enumerate() {
            let expected = if p == rank { got.clone() } else { zero.clone() };
            comparisons.push((Some(p), expected, f));
        }
        self.report(Check::Shape, Some(shape), start, comparisons)
    }

    pub fn verify_all_shapes(&self) -> Result<Vec<VerificationReport>> {
        crate::shape::shapes(&self.group)
            .iter()
            .map(|s| self.verify_shape(s))
            .collect()
    }

    /// `P_w(t)` for every class, in class order.
    pub fn poincare_table(&self) -> Result<Vec<(ClassLabel, Polynomial)>> {
        let data = self.lattice_data()?;
        Ok(self
            .table
            .classes()
            .iter()
            .enumerate()
            .map(|(c, class)| (class.label.clone(), data.1.poincare(c)))
            .collect())
    }

    /// Poincaré table lines `label: c0 c1 … cn`.
    pub fn poincare_lines(&self) -> Result<Vec<String>> {
        let n = self.group.rank() + 1;
        Ok(self
            .poincare_table()?
            .into_iter()
            .map(|(label, p)| {
                let cs: Vec<String> = p.padded(n).iter().map(i64::to_string).collect();
                format!("{label}: {}", cs.join(" "))
            })
            .collect())
    }

    /// Every `P_w` has constant term 1, and `P_1(t) = ∏ (1 + m_i t)`.
    pub fn verify_poincare(&self) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = self.poincare_table()?;
        let id = self.table.identity_class();
        let mut discrepancies = Vec::new();
        let expected_id = Polynomial::from_exponents(&self.group.exponents());
        for (c, (label, p)) in table.iter().enumerate() {
            if p.coeff(0) != 1 {
                discrepancies.push(Discrepancy {
                    class: label.to_string(),
                    degree: Some(0),
                    expected: Cyclotomic::one(),
                    got: Cyclotomic::from_integer(p.coeff(0)),
                });
            }
            if c == id {
                for d in 0..=self.group.rank() {
                    if p.coeff(d) != expected_id.coeff(d) {
                        discrepancies.push(Discrepancy {
                            class: label.to_string(),
                            degree: Some(d),
                            expected: Cyclotomic::from_integer(expected_id.coeff(d)),
                            got: Cyclotomic::from_integer(p.coeff(d)),
                        });
                    }
                }
            }
        }
        Ok(VerificationReport {
            group: self.group.to_string(),
            check: Check::Poincare.name().to_string(),
            status: if discrepancies.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            discrepancies,
            timing_ms: start.elapsed().as_millis() as u64,
            config: self.config(None),
            triage: Vec::new(),
            note: None,
            table: Some(self.poincare_lines()?),
        })
    }

    /// Runs `check`; `shape` restricts [`Check::Shape`] to one shape.
    pub fn run(&self, check: Check, shape: Option<&Shape>) -> Result<Vec<VerificationReport>> {
        Ok(match check {
            Check::Regular => vec![self.verify_regular()?],
            Check::Os => vec![self.verify_os()?],
            Check::Graded => vec![self.verify_graded()?],
            Check::Shape => match shape {
                Some(s) => vec![self.verify_shape(s)?],
                None => self.verify_all_shapes()?,
            },
            Check::Poincare => vec![self.verify_poincare()?],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verifier(g: Result<Group>) -> Verifier {
        Verifier::new(g.unwrap(), Budget::default()).unwrap()
    }

    #[test]
    fn b2_regular_and_graded() {
        let v = verifier(Group::b(2));
        assert!(v.verify_regular().unwrap().passed());
        let r = v.verify_graded().unwrap();
        assert!(r.passed(), "{r}");
        assert!(v.verify_os().unwrap().passed());
    }

    #[test]
    fn b2_poincare_table() {
        let v = verifier(Group::b(2));
        let lines = v.poincare_lines().unwrap();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "+1+1: 1 4 3");
        assert!(v.verify_poincare().unwrap().passed());
    }

    #[test]
    fn small_groups_pass_every_check() {
        for g in [Group::a(2), Group::b(3), Group::d(4)] {
            let v = verifier(g);
            for check in Check::ALL {
                for r in v.run(check, None).unwrap() {
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }

    #[test]
    fn failures_are_reported_with_triage() {
        let v = verifier(Group::b(2));
        let start = Instant::now();
        let rho = ClassFunction::regular(v.table().clone());
        let triv = ClassFunction::trivial(v.table().clone());
        let r = v
            .report(
                Check::Regular,
                None,
                start,
                vec![(None, rho.clone(), rho.add(&triv).unwrap())],
            )
            .unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.discrepancies.len(), 5);
        assert_eq!(r.triage[0].trivial, Cyclotomic::one());
        assert_eq!(r.triage[0].sign, Cyclotomic::zero());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["discrepancies"][0]["class"], "+1+1");
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("everything".parse::<Check>().is_err());
    }
}
