//! Finite-order identity checks, sign-pattern scans and the asymptotic
//! cross-check for c(n).
//!
//! Identity checks compare exact integers coefficient by coefficient; there
//! is no tolerance. Sign scans use strict inequalities, so a zero at an index
//! that is not listed as an exception counts as a violation.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::qproducts::euler_f;
use crate::rr::{NamedSeries, SeriesCache};
use crate::series::Series;

/// Violations kept in a report unless configured otherwise.
pub const DEFAULT_VIOLATION_CAP: usize = 20;

/// Residue classes whose cosine factor is at most this in absolute value are
/// skipped by the asymptotic comparison.
pub const COS_CUTOFF: f64 = 0.1;

/// Required share of sign agreements in the asymptotic comparison.
pub const ASYMPTOTIC_MIN_AGREEMENT: f64 = 0.99;

/// Expected sign for a residue class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Pos,
    Neg,
    Zero,
    Unconstrained,
}

/// Recorded value at an exceptional index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionValue {
    Zero,
    Exact(BigInt),
}

/// What a failed check expected to see.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Pos,
    Neg,
    Zero,
    Exact(BigInt),
}

impl Expected {
    /// The sign class: `"pos"`, `"neg"` or `"zero"`.
    pub fn sign_label(&self) -> &'static str {
        match self {
            Expected::Pos => "pos",
            Expected::Neg => "neg",
            Expected::Zero => "zero",
            Expected::Exact(v) => match v.sign() {
                Sign::Plus => "pos",
                Sign::Minus => "neg",
                Sign::NoSign => "zero",
            },
        }
    }
}

/// Whether a pattern is an established result or a claim under test.
/// Violations of a conjecture are reported as falsifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Theorem,
    Conjecture,
}

/// Periodic sign expectations with an explicit exception list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    modulus: usize,
    expected: Vec<Expectation>,
    exceptions: BTreeMap<usize, ExceptionValue>,
    claim: Claim,
}

impl SignPattern {
    /// One expectation per residue `0..modulus`.
    ///
    /// # Panics
    /// If `expected` is empty.
    pub fn new(expected: &[Expectation]) -> Self {
        assert!(
            !expected.is_empty(),
            "a sign pattern needs a positive modulus"
        );
        SignPattern {
            modulus: expected.len(),
            expected: expected.to_vec(),
            exceptions: BTreeMap::new(),
            claim: Claim::Theorem,
        }
    }

    /// Only the listed residues are constrained.
    pub fn sparse(modulus: usize, constrained: &[(usize, Expectation)]) -> Self {
        let mut expected = vec![Expectation::Unconstrained; modulus];
        for &(r, e) in constrained {
            assert!(
                r < modulus,
                "residue {r} out of range for modulus {modulus}"
            );
            expected[r] = e;
        }
        SignPattern::new(&expected)
    }

    /// Adds an exception. A later call for the same index replaces the earlier one.
    pub fn except(mut self, index: usize, value: ExceptionValue) -> Self {
        self.exceptions.insert(index, value);
        self
    }

    pub fn conjecture(mut self) -> Self {
        self.claim = Claim::Conjecture;
        self
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn expectation(&self, residue: usize) -> Expectation {
        self.expected[residue]
    }

    pub fn exceptions(&self) -> &BTreeMap<usize, ExceptionValue> {
        &self.exceptions
    }

    pub fn claim(&self) -> Claim {
        self.claim
    }

    /// `None` if `value` is acceptable at `index`.
    pub fn check(&self, index: usize, value: &BigInt) -> Option<Expected> {
        if let Some(exception) = self.exceptions.get(&index) {
            return match exception {
                ExceptionValue::Zero if !value.is_zero() => Some(Expected::Zero),
                ExceptionValue::Exact(v) if v != value => Some(Expected::Exact(v.clone())),
                _ => None,
            };
        }
        let ok = match self.expected[index % self.modulus] {
            Expectation::Pos => value.sign() == Sign::Plus,
            Expectation::Neg => value.sign() == Sign::Minus,
            Expectation::Zero => value.is_zero(),
            Expectation::Unconstrained => true,
        };
        if ok {
            return None;
        }
        Some(match self.expected[index % self.modulus] {
            Expectation::Pos => Expected::Pos,
            Expectation::Neg => Expected::Neg,
            _ => Expected::Zero,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Verified,
    Violated,
    /// Coefficient indices at which a conjectured sign fails.
    ConjectureFalsifiedAt(Vec<usize>),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Violated => "violated",
            Status::ConjectureFalsifiedAt(_) => "falsified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub index: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub value: BigInt,
    pub expected: Expected,
}

/// Outcome of one identity check or sign scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub order_checked: usize,
    pub status: Status,
    pub first_divergence: Option<Divergence>,
    /// Sorted by index, capped.
    pub violations: Vec<Violation>,
    /// Number of violations found, before capping.
    pub violation_count: usize,
}

impl Report {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (order {})",
            self.subject,
            self.status.label(),
            self.order_checked
        )?;
        if let Status::ConjectureFalsifiedAt(at) = &self.status {
            write!(f, " at {at:?}")?;
        }
        if let Some(d) = &self.first_divergence {
            write!(
                f,
                "; first divergence at q^{}: {} vs {}",
                d.index, d.lhs, d.rhs
            )?;
        }
        if self.violation_count > 0 {
            write!(f, "; {} violation(s)", self.violation_count)?;
        }
        Ok(())
    }
}

/// Exact comparison of two series to `order` coefficients.
pub fn compare(subject: &str, lhs: &Series, rhs: &Series, order: usize) -> Report {
    assert!(
        lhs.prec() >= order && rhs.prec() >= order,
        "{subject}: sides built to {} and {}, need {order}",
        lhs.prec(),
        rhs.prec()
    );
    let first_divergence = (0..order)
        .find(|&i| lhs.coeffs()[i] != rhs.coeffs()[i])
        .map(|index| Divergence {
            index,
            lhs: lhs.coeffs()[index].clone(),
            rhs: rhs.coeffs()[index].clone(),
        });
    Report {
        subject: subject.to_string(),
        order_checked: order,
        status: if first_divergence.is_some() {
            Status::Violated
        } else {
            Status::Verified
        },
        first_divergence,
        violations: Vec::new(),
        violation_count: 0,
    }
}

/// The identities that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// 1/R^5(q) - q^2 R^5(q) = 11q + f_1^6/f_5^6
    B20,
    /// R^5(q) as a rational function of q and R(q^5)
    R5,
    AFull,
    BFull,
    DFull,
    DissectA0,
    DissectB0,
    DissectD1,
    DissectC0,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::B20,
        Identity::R5,
        Identity::AFull,
        Identity::BFull,
        Identity::DFull,
        Identity::DissectA0,
        Identity::DissectB0,
        Identity::DissectD1,
        Identity::DissectC0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Identity::B20 => "B20",
            Identity::R5 => "R5",
            Identity::AFull => "A_full",
            Identity::BFull => "B_full",
            Identity::DFull => "D_full",
            Identity::DissectA0 => "dissect-A0",
            Identity::DissectB0 => "dissect-B0",
            Identity::DissectD1 => "dissect-D1",
            Identity::DissectC0 => "dissect-C0",
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.as_str() == s)
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

/// Full generating functions expressed through R(q^5).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFun {
    A,
    B,
    D,
}

/// 5-dissection components with closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dissection {
    /// sum A(5n) q^n
    A0,
    /// sum B(5n) q^n
    B0,
    /// sum D(5n+1) q^n
    D1,
    /// sum C(5n) q^n
    C0,
}

impl Dissection {
    fn source(self) -> (NamedSeries, usize) {
        match self {
            Dissection::A0 => (NamedSeries::A, 0),
            Dissection::B0 => (NamedSeries::B, 0),
            Dissection::D1 => (NamedSeries::D, 1),
            Dissection::C0 => (NamedSeries::C, 0),
        }
    }
}

/// Named sign scans with a recorded expected outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanTarget {
    RichmondC,
    RichmondD,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Conjecture13,
    AsymptoticC,
}

impl ScanTarget {
    pub const ALL: [ScanTarget; 8] = [
        ScanTarget::RichmondC,
        ScanTarget::RichmondD,
        ScanTarget::Thm2,
        ScanTarget::Thm3,
        ScanTarget::Thm4,
        ScanTarget::Thm5,
        ScanTarget::Conjecture13,
        ScanTarget::AsymptoticC,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScanTarget::RichmondC => "richmond-c",
            ScanTarget::RichmondD => "richmond-d",
            ScanTarget::Thm2 => "thm2",
            ScanTarget::Thm3 => "thm3",
            ScanTarget::Thm4 => "thm4",
            ScanTarget::Thm5 => "thm5",
            ScanTarget::Conjecture13 => "conjecture13",
            ScanTarget::AsymptoticC => "asymptotic-c",
        }
    }

    /// The series and pattern for the plain sign scans.
    pub fn sign_scan(self) -> Option<(NamedSeries, SignPattern)> {
        use Expectation::*;
        let exact_one = || ExceptionValue::Exact(BigInt::from(1));
        let scan = match self {
            ScanTarget::RichmondC => (
                NamedSeries::LowerC,
                SignPattern::new(&[Pos, Pos, Neg, Neg, Neg])
                    .except(2, ExceptionValue::Zero)
                    .except(4, ExceptionValue::Zero)
                    .except(9, ExceptionValue::Zero),
            ),
            ScanTarget::RichmondD => (
                NamedSeries::LowerD,
                SignPattern::new(&[Pos, Neg, Pos, Neg, Neg])
                    .except(3, ExceptionValue::Zero)
                    .except(8, ExceptionValue::Zero)
                    .except(13, ExceptionValue::Zero)
                    .except(23, ExceptionValue::Zero),
            ),
            ScanTarget::Thm2 => (
                NamedSeries::A,
                SignPattern::new(&[Unconstrained, Pos, Pos, Pos, Neg]),
            ),
            ScanTarget::Thm3 => (
                NamedSeries::B,
                SignPattern::new(&[Unconstrained, Neg, Pos, Neg, Pos]),
            ),
            ScanTarget::Thm4 => (
                NamedSeries::C,
                SignPattern::new(&[Neg, Neg, Pos, Neg, Pos]).except(0, exact_one()),
            ),
            // Residue 1 carries no sign in the theorem; it is only conjectured.
            ScanTarget::Thm5 => (
                NamedSeries::D,
                SignPattern::new(&[Neg, Unconstrained, Pos, Pos, Neg]).except(0, exact_one()),
            ),
            ScanTarget::Conjecture13 | ScanTarget::AsymptoticC => return None,
        };
        Some(scan)
    }
}

impl FromStr for ScanTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ScanTarget::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

/// The three parts of the conjecture: A(5n) < 0, B(5n) < 0, D(5n+1) > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub a_part: Report,
    pub b_part: Report,
    pub d_part: Report,
}

/// Values of n (not coefficient indices) at which each part fails.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FalsifiedSets {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub d: Vec<usize>,
}

impl ConjectureReport {
    pub fn falsified(&self) -> FalsifiedSets {
        let at = |r: &Report, j: usize| match &r.status {
            Status::ConjectureFalsifiedAt(idx) => idx.iter().map(|i| (i - j) / 5).collect(),
            _ => Vec::new(),
        };
        FalsifiedSets {
            a: at(&self.a_part, 0),
            b: at(&self.b_part, 0),
            d: at(&self.d_part, 1),
        }
    }

    /// The recorded outcome: A and B fail exactly at n = 0, D never fails.
    pub fn matches_expected(&self) -> bool {
        self.falsified()
            == FalsifiedSets {
                a: vec![0],
                b: vec![0],
                d: vec![],
            }
    }

    pub fn parts(&self) -> [&Report; 3] {
        [&self.a_part, &self.b_part, &self.d_part]
    }
}

/// Main term of the asymptotic for c(n):
/// `sqrt(2) (5n)^(-3/4) exp((4 pi / 25) sqrt(5n)) cos((2 pi / 5)(n - 2/5))`.
pub fn asymptotic_c(n: u64) -> f64 {
    assert!(n >= 1, "the asymptotic is defined for n >= 1");
    let five_n = 5.0 * n as f64;
    2f64.sqrt() * five_n.powf(-0.75) * (4.0 * PI / 25.0 * five_n.sqrt()).exp() * cos_factor(n)
}

/// `cos((2 pi / 5)(n - 2/5))`, which fixes the sign of the main term.
pub fn cos_factor(n: u64) -> f64 {
    (2.0 * PI / 5.0 * (n as f64 - 0.4)).cos()
}

/// Comparison of the asymptotic main term against exact c(n).
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticCheck {
    pub lo: usize,
    pub hi: usize,
    /// Indices whose cosine factor cleared the cutoff.
    pub compared: usize,
    pub agreements: usize,
    /// (n, exact c(n), main term) where the signs differ.
    pub mismatches: Vec<(usize, BigInt, f64)>,
    /// Mean relative error over consecutive windows of 100 indices.
    pub window_means: Vec<f64>,
}

impl AsymptoticCheck {
    pub fn agreement_rate(&self) -> f64 {
        if self.compared == 0 {
            1.0
        } else {
            self.agreements as f64 / self.compared as f64
        }
    }

    pub fn passes(&self) -> bool {
        self.agreement_rate() >= ASYMPTOTIC_MIN_AGREEMENT
    }

    /// Each window mean is at most twice the previous one, and the last is
    /// below the first.
    pub fn error_trend_decreasing(&self) -> bool {
        let w = &self.window_means;
        w.windows(2).all(|p| p[1] <= 2.0 * p[0])
            && match (w.first(), w.last()) {
                (Some(first), Some(last)) if w.len() > 1 => last < first,
                _ => true,
            }
    }
}

fn sign_of_f64(x: f64) -> Sign {
    if x > 0.0 {
        Sign::Plus
    } else if x < 0.0 {
        Sign::Minus
    } else {
        Sign::NoSign
    }
}

/// Runs identity checks and scans against a shared series cache.
#[derive(Debug)]
pub struct Verifier {
    cache: SeriesCache,
    violation_cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier {
            cache: SeriesCache::new(),
            violation_cap: DEFAULT_VIOLATION_CAP,
        }
    }

    pub fn with_violation_cap(mut self, cap: usize) -> Self {
        self.violation_cap = cap;
        self
    }

    pub fn cache(&self) -> &SeriesCache {
        &self.cache
    }

    fn get(&self, name: NamedSeries, prec: usize) -> Series {
        self.cache.build(name, prec)
    }

    fn q(prec: usize) -> Series {
        Series::monomial(1, 1, prec)
    }

    /// `1 - 25 q f_5^6 / f_1^6`
    fn one_minus_25q_f51(&self, prec: usize) -> Series {
        let f51 = self.get(NamedSeries::Fratio51, prec);
        let term = f51.shift(1).expect("positive shift").scale(-25);
        Series::one(prec).add(&term)
    }

    /// `sum_i coeffs[i] q^i R(q^5)^i`
    fn rq5_polynomial(&self, coeffs: [i64; 5], prec: usize) -> Series {
        let rq5 = self.get(NamedSeries::Rq5, prec);
        let mut total = Series::zero(prec);
        let mut power = Series::one(prec);
        for (i, &c) in coeffs.iter().enumerate() {
            if i > 0 {
                power = power.mul(&rq5);
            }
            let term = power.shift(i as i64).expect("positive shift").scale(c);
            total = total.add(&term);
        }
        total
    }

    pub fn verify_identity_b20(&self, prec: usize) -> Report {
        let a = self.get(NamedSeries::A, prec);
        let b = self.get(NamedSeries::B, prec);
        let lhs = a.sub(&b.shift(2).expect("positive shift"));
        let rhs = Series::monomial(11, 1, prec).add(&self.get(NamedSeries::Fratio15, prec));
        compare(Identity::B20.as_str(), &lhs, &rhs, prec)
    }

    pub fn verify_identity_r5(&self, prec: usize) -> Report {
        let lhs = self.get(NamedSeries::R5, prec);
        let rq5 = self.get(NamedSeries::Rq5, prec);
        let num = self.rq5_polynomial([1, -2, 4, -3, 1], prec);
        let den = self.rq5_polynomial([1, 3, 4, 2, 1], prec);
        let rhs = rq5
            .mul(&num)
            .div(&den)
            .expect("denominator has constant term 1");
        compare(Identity::R5.as_str(), &lhs, &rhs, prec)
    }

    /// Compares A, B or D against
    /// `f_25^6 / (f_5^6 R^k(q^5)) * P(q)^2 * (1/R(q^5) - q - q^2 R(q^5))`
    /// with `k = 5, 3, 4` and `P` the plus-sign quartic for A and D, the
    /// minus-sign quartic for B.
    pub fn verify_genfun(&self, which: GenFun, prec: usize) -> Report {
        let (name, identity, power, quartic) = match which {
            GenFun::A => (NamedSeries::A, Identity::AFull, 5, [1, 3, 4, 2, 1]),
            GenFun::B => (NamedSeries::B, Identity::BFull, 3, [1, -2, 4, -3, 1]),
            GenFun::D => (NamedSeries::D, Identity::DFull, 4, [1, 3, 4, 2, 1]),
        };
        let lhs = self.get(name, prec);
        let rq5 = self.get(NamedSeries::Rq5, prec);
        let prefactor = euler_f(25, prec)
            .pow(6)
            .div(&euler_f(5, prec).pow(6).mul(&rq5.pow(power)))
            .expect("unit constant terms");
        let tail = rq5
            .inverse()
            .expect("R(0) = 1")
            .sub(&Self::q(prec))
            .sub(&rq5.shift(2).expect("positive shift"));
        let rhs = prefactor
            .mul(&self.rq5_polynomial(quartic, prec).pow(2))
            .mul(&tail);
        compare(identity.as_str(), &lhs, &rhs, prec)
    }

    /// Compares a 5-dissection component, extracted from the full series built
    /// to `5 prec + 4`, against its closed form.
    pub fn verify_dissection(&self, which: Dissection, prec: usize) -> Report {
        let (name, residue) = which.source();
        let lhs = self
            .get(name, 5 * prec + 4)
            .dissect(5, residue)
            .truncate(prec);
        let c5 = self.one_minus_25q_f51(prec);
        let (identity, rhs) = match which {
            Dissection::A0 => (
                Identity::DissectA0,
                self.get(NamedSeries::Rinv, prec).mul(&c5),
            ),
            Dissection::B0 => (Identity::DissectB0, self.get(NamedSeries::R, prec).mul(&c5)),
            Dissection::C0 => (Identity::DissectC0, c5),
            Dissection::D1 => {
                let inner = self
                    .get(NamedSeries::R5inv, prec)
                    .scale(5)
                    .sub(&Series::monomial(40, 1, prec));
                let rhs = self
                    .get(NamedSeries::Fratio51, prec)
                    .mul(&self.get(NamedSeries::R, prec))
                    .mul(&inner);
                (Identity::DissectD1, rhs)
            }
        };
        compare(identity.as_str(), &lhs, &rhs, prec)
    }

    pub fn verify(&self, identity: Identity, prec: usize) -> Report {
        match identity {
            Identity::B20 => self.verify_identity_b20(prec),
            Identity::R5 => self.verify_identity_r5(prec),
            Identity::AFull => self.verify_genfun(GenFun::A, prec),
            Identity::BFull => self.verify_genfun(GenFun::B, prec),
            Identity::DFull => self.verify_genfun(GenFun::D, prec),
            Identity::DissectA0 => self.verify_dissection(Dissection::A0, prec),
            Identity::DissectB0 => self.verify_dissection(Dissection::B0, prec),
            Identity::DissectD1 => self.verify_dissection(Dissection::D1, prec),
            Identity::DissectC0 => self.verify_dissection(Dissection::C0, prec),
        }
    }

    pub fn verify_all(&self, prec: usize) -> Vec<Report> {
        Identity::ALL
            .iter()
            .map(|&i| self.verify(i, prec))
            .collect()
    }

    /// Checks every coefficient `0..=n_max` of `name` against `pattern`.
    pub fn scan_signs(&self, name: NamedSeries, pattern: &SignPattern, n_max: usize) -> Report {
        let series = self.get(name, n_max + 1);
        self.scan_series(&name.to_string(), &series, pattern, n_max)
    }

    /// Like [`scan_signs`](Self::scan_signs) on an already built series.
    pub fn scan_series(
        &self,
        subject: &str,
        series: &Series,
        pattern: &SignPattern,
        n_max: usize,
    ) -> Report {
        assert!(
            series.prec() > n_max,
            "series too short for scan to {n_max}"
        );
        let mut failing = Vec::new();
        let mut violations = Vec::new();
        for (index, value) in series.coeffs().iter().enumerate().take(n_max + 1) {
            if let Some(expected) = pattern.check(index, value) {
                failing.push(index);
                if violations.len() < self.violation_cap {
                    violations.push(Violation {
                        index,
                        value: value.clone(),
                        expected,
                    });
                }
            }
        }
        let status = match (failing.is_empty(), pattern.claim()) {
            (true, _) => Status::Verified,
            (false, Claim::Theorem) => Status::Violated,
            (false, Claim::Conjecture) => Status::ConjectureFalsifiedAt(failing.clone()),
        };
        Report {
            subject: subject.to_string(),
            order_checked: n_max,
            status,
            first_divergence: None,
            violations,
            violation_count: failing.len(),
        }
    }

    /// Scans A(5n) < 0, B(5n) < 0 and D(5n+1) > 0 for `0 <= n <= n_max`.
    pub fn check_conjecture13(&self, n_max: usize) -> ConjectureReport {
        let part = |name: NamedSeries, residue: usize, e: Expectation| {
            let pattern = SignPattern::sparse(5, &[(residue, e)]).conjecture();
            let last = 5 * n_max + residue;
            let mut report = self.scan_signs(name, &pattern, last);
            report.subject = format!("conjecture13-{name}");
            report
        };
        ConjectureReport {
            n_max,
            a_part: part(NamedSeries::A, 0, Expectation::Neg),
            b_part: part(NamedSeries::B, 0, Expectation::Neg),
            d_part: part(NamedSeries::D, 1, Expectation::Pos),
        }
    }

    /// Sign agreement between [`asymptotic_c`] and exact c(n) on `lo..=hi`,
    /// skipping indices with `|cos factor| <= COS_CUTOFF`.
    pub fn asymptotic_check(&self, lo: usize, hi: usize) -> AsymptoticCheck {
        let lo = lo.max(1);
        let c = self.get(NamedSeries::LowerC, hi + 1);
        let mut check = AsymptoticCheck {
            lo,
            hi,
            compared: 0,
            agreements: 0,
            mismatches: Vec::new(),
            window_means: Vec::new(),
        };
        let mut window: Option<(usize, f64, usize)> = None;
        for n in lo..=hi {
            if cos_factor(n as u64).abs() <= COS_CUTOFF {
                continue;
            }
            check.compared += 1;
            let exact = &c.coeffs()[n];
            let approx = asymptotic_c(n as u64);
            if exact.sign() == sign_of_f64(approx) {
                check.agreements += 1;
            } else {
                check.mismatches.push((n, exact.clone(), approx));
            }
            let exact_f = exact.to_f64().unwrap_or(f64::NAN);
            if exact_f != 0.0 {
                let rel = ((approx - exact_f) / exact_f).abs();
                let id = (n - lo) / 100;
                match &mut window {
                    Some((w, sum, count)) if *w == id => {
                        *sum += rel;
                        *count += 1;
                    }
                    _ => {
                        if let Some((_, sum, count)) = window.take() {
                            check.window_means.push(sum / count as f64);
                        }
                        window = Some((id, rel, 1));
                    }
                }
            }
        }
        if let Some((_, sum, count)) = window {
            check.window_means.push(sum / count as f64);
        }
        check
    }

    /// Runs a named scan. The boolean says whether the recorded expectation
    /// was met; for the conjecture that means reproducing its failure at n = 0.
    pub fn scan(&self, target: ScanTarget, n_max: usize) -> ScanOutcome {
        match target {
            ScanTarget::Conjecture13 => {
                ScanOutcome::Conjecture(Box::new(self.check_conjecture13(n_max)))
            }
            ScanTarget::AsymptoticC => ScanOutcome::Asymptotic(self.asymptotic_check(100, n_max)),
            _ => {
                let (name, pattern) = target.sign_scan().expect("plain sign scan");
                let mut report = self.scan_signs(name, &pattern, n_max);
                report.subject = target.as_str().to_string();
                ScanOutcome::Signs(report)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScanOutcome {
    Signs(Report),
    Conjecture(Box<ConjectureReport>),
    Asymptotic(AsymptoticCheck),
}

impl ScanOutcome {
    pub fn meets_expectation(&self) -> bool {
        match self {
            ScanOutcome::Signs(r) => r.is_verified(),
            ScanOutcome::Conjecture(c) => c.matches_expected(),
            ScanOutcome::Asymptotic(a) => a.passes(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn pattern_strict_signs_and_exceptions() {
        use Expectation::*;
        let p = SignPattern::new(&[Pos, Neg]).except(2, ExceptionValue::Zero);
        assert_eq!(p.check(0, &big(3)), None);
        assert_eq!(p.check(0, &big(0)), Some(Expected::Pos));
        assert_eq!(p.check(1, &big(0)), Some(Expected::Neg));
        assert_eq!(p.check(2, &big(0)), None);
        assert_eq!(p.check(2, &big(1)), Some(Expected::Zero));
        let q = SignPattern::new(&[Neg]).except(0, ExceptionValue::Exact(big(1)));
        assert_eq!(q.check(0, &big(1)), None);
        assert_eq!(q.check(0, &big(2)), Some(Expected::Exact(big(1))));
        assert_eq!(Expected::Exact(big(-4)).sign_label(), "neg");
    }

    #[test]
    fn compare_reports_first_divergence() {
        let a = Series::from_i64s(&[1, 2, 3, 4]);
        let b = Series::from_i64s(&[1, 2, 5, 0]);
        let r = compare("t", &a, &b, 4);
        assert_eq!(r.status, Status::Violated);
        assert_eq!(
            r.first_divergence,
            Some(Divergence {
                index: 2,
                lhs: big(3),
                rhs: big(5)
            })
        );
        assert!(compare("t", &a, &b, 2).is_verified());
    }

    #[test]
    fn low_order_identity_terms() {
        let v = Verifier::new();
        for id in Identity::ALL {
            assert!(v.verify(id, 2).is_verified(), "{}", id.as_str());
        }
    }

    #[test]
    fn identities_at_moderate_order() {
        let v = Verifier::new();
        for id in Identity::ALL {
            let r = v.verify(id, 120);
            assert!(r.is_verified(), "{r}");
            assert!(v.verify(id, 37).is_verified());
        }
    }

    #[test]
    fn dissection_a0_q2_is_a10() {
        let v = Verifier::new();
        let lhs = v.get(NamedSeries::A, 20).dissect(5, 0);
        assert_eq!(lhs.coeffs()[2], big(-175));
    }

    #[test]
    fn perturbed_identity_is_caught() {
        let v = Verifier::new();
        let a = v.get(NamedSeries::A, 50);
        let mut coeffs = a.clone().into_coeffs();
        coeffs[17] += 1;
        let r = compare("perturbed", &Series::new(coeffs), &a, 50);
        assert_eq!(r.first_divergence.unwrap().index, 17);
    }

    #[test]
    fn conjecture_pattern_on_a() {
        let v = Verifier::new();
        let p = SignPattern::sparse(5, &[(0, Expectation::Neg)]).conjecture();
        let r = v.scan_signs(NamedSeries::A, &p, 100);
        assert_eq!(r.status, Status::ConjectureFalsifiedAt(vec![0]));
        assert_eq!(r.violations[0].value, big(1));
    }

    #[test]
    fn conjecture13_small() {
        let v = Verifier::new();
        let r = v.check_conjecture13(0);
        assert!(r.d_part.is_verified());
        assert!(r.matches_expected());
        assert_eq!(v.cache().coefficient(NamedSeries::D, 1), big(5));
    }

    #[test]
    fn violation_cap_applies() {
        let v = Verifier::new().with_violation_cap(3);
        let p = SignPattern::new(&[Expectation::Zero]);
        let r = v.scan_signs(NamedSeries::A, &p, 40);
        assert_eq!(r.violations.len(), 3);
        assert!(r.violation_count > 3);
        assert!(r.violations.windows(2).all(|w| w[0].index < w[1].index));
        assert_eq!(r.status, Status::Violated);
    }

    #[test]
    fn scans_pass_at_small_range() {
        let v = Verifier::new();
        for t in ScanTarget::ALL {
            assert!(v.scan(t, 150).meets_expectation(), "{}", t.as_str());
        }
        assert!(v.scan(ScanTarget::RichmondC, 0).meets_expectation());
    }

    #[test]
    fn cos_factor_signs() {
        assert!(cos_factor(2) < 0.0);
        assert!((cos_factor(2) - (16.0 * PI / 25.0).cos()).abs() < 1e-12);
        assert!(cos_factor(0) > 0.0 && cos_factor(1) > 0.0);
        assert!(cos_factor(3) < 0.0 && cos_factor(4) < 0.0);
    }

    #[test]
    fn names_parse() {
        for t in ScanTarget::ALL {
            assert_eq!(t.as_str().parse::<ScanTarget>().unwrap(), t);
        }
        for i in Identity::ALL {
            assert_eq!(i.as_str().parse::<Identity>().unwrap(), i);
        }
        assert!("thm9".parse::<ScanTarget>().is_err());
    }
}
