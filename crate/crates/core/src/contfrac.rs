//! Continued fractions, companion matrices, PLLS sequences and recurrence systems.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Finite continued fraction `(a_1 + b_2/(a_2 + b_3/(... + b_n/a_n))) / b_1`.
///
/// Regular fractions have every `b_i = 1` and print as `[a1; a2 : a3 : ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<(BigInt, BigInt)>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<(BigInt, BigInt)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("empty continued fraction".into()));
        }
        Ok(Self { terms })
    }

    pub fn regular<T: Into<BigInt> + Clone>(a: &[T]) -> Result<Self> {
        Self::new(
            a.iter()
                .cloned()
                .map(|x| (x.into(), BigInt::one()))
                .collect(),
        )
    }

    /// Regular expansion of a rational; the last term is at least 2 unless it is the only one
    /// or the value is an integer.
    pub fn from_rational(x: &BigRational) -> Self {
        let mut n = x.numer().clone();
        let mut d = x.denom().clone();
        let mut a = Vec::new();
        loop {
            let (q, r) = n.div_mod_floor(&d);
            a.push(q);
            if r.is_zero() {
                break;
            }
            n = d;
            d = r;
        }
        Self::regular(&a).unwrap()
    }

    pub fn terms(&self) -> &[(BigInt, BigInt)] {
        &self.terms
    }

    pub fn partial_quotients(&self) -> Vec<BigInt> {
        self.terms.iter().map(|(a, _)| a.clone()).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.terms.iter().all(|(_, b)| b.is_one())
            && self.terms.iter().skip(1).all(|(a, _)| a.is_positive())
            && !self.terms[0].0.is_negative()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    // the fraction in the product form starts with a zero term
    fn product_terms(&self) -> Vec<(BigInt, BigInt)> {
        let mut t = vec![(BigInt::zero(), BigInt::one())];
        t.extend(self.terms.iter().cloned());
        t
    }

    /// `(p, q)` from the product of `[[0, b_i], [1, a_i]]` applied to `(0, 1)`.
    pub fn matrix_pq(&self) -> (BigInt, BigInt) {
        let mut v = (BigInt::zero(), BigInt::one());
        for (a, b) in self.product_terms().iter().rev() {
            v = (b * &v.1, &v.0 + a * &v.1);
        }
        v
    }

    /// Value `p/q` of the fraction.
    pub fn eval(&self) -> Result<BigRational> {
        let (p, q) = self.matrix_pq();
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BigRational::new(p, q))
    }

    /// Continuant display whose determinant is the numerator.
    pub fn continuant_matrix(&self) -> IntMatrix {
        let t = self.product_terms();
        let n = t.len() + 1;
        let mut m = IntMatrix::zeros(n);
        for (k, (a, b)) in t.iter().enumerate() {
            m.set(k, k + 1, b.clone());
            m.set(k + 1, k + 1, a.clone());
            m.set(k + 1, k, -BigInt::one());
        }
        m
    }

    /// Numerator and denominator as continuant determinants.
    pub fn continuant_pq(&self) -> (BigInt, BigInt) {
        let m = self.continuant_matrix();
        let q = m
            .minor(0, 0)
            .map(|x| x.det())
            .unwrap_or_else(|_| BigInt::one());
        (m.det(), q)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |f: &mut fmt::Formatter<'_>, (a, b): &(BigInt, BigInt)| {
            if b.is_one() {
                write!(f, "{a}")
            } else {
                write!(f, "{b}/{a}")
            }
        };
        write!(f, "[")?;
        term(f, &self.terms[0])?;
        for (k, t) in self.terms.iter().enumerate().skip(1) {
            write!(f, "{}", if k == 1 { "; " } else { " : " })?;
            term(f, t)?;
        }
        write!(f, "]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a continued fraction: {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (head, tail) = match inner.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (inner, None),
        };
        let parse_term = |t: &str| -> Result<(BigInt, BigInt)> {
            let t = t.trim();
            let (b, a) = match t.split_once('/') {
                Some((b, a)) => (b.trim(), a.trim()),
                None => ("1", t),
            };
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        let mut terms = vec![parse_term(head)?];
        if let Some(tail) = tail {
            for t in tail.split(':') {
                terms.push(parse_term(t)?);
            }
        }
        Self::new(terms)
    }
}

/// Coefficients `(a_1, ..., a_n)` of `x_{k+1} = sum a_i x_{k-i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompanionSpec {
    coeffs: Vec<BigInt>,
}

impl CompanionSpec {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput(
                "companion spec needs a coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(c: &[T]) -> Result<Self> {
        Self::new(c.iter().cloned().map(Into::into).collect())
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients, most recent term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl fmt::Display for CompanionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "M_{{{}}}", parts.join(","))
    }
}

/// Transposed Frobenius companion matrix: shifts the window and appends the new term.
pub fn companion(spec: &CompanionSpec) -> IntMatrix {
    let n = spec.arity();
    let mut m = IntMatrix::zeros(n);
    for i in 0..n - 1 {
        m.set(i, i + 1, BigInt::one());
    }
    for (i, a) in spec.coeffs.iter().enumerate() {
        m.set(n - 1, n - 1 - i, a.clone());
    }
    m
}

/// `M_{a,1} = [[0,1],[1,a]]`.
pub fn m_a1(a: &BigInt) -> IntMatrix {
    companion(&CompanionSpec::new(vec![a.clone(), BigInt::one()]).unwrap())
}

fn require_2x2(m: &IntMatrix) -> Result<()> {
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected 2x2, got {0}x{0}",
            m.dim()
        )));
    }
    Ok(())
}

/// Sufficient criterion `d > c >= a > 0`.
pub fn is_reduced_2(m: &IntMatrix) -> Result<bool> {
    require_2x2(m)?;
    let (a, c, d) = (m.get(0, 0), m.get(1, 0), m.get(1, 1));
    Ok(d > c && c >= a && a.is_positive())
}

/// Period of a reduced 2x2 matrix in LLS order (reversed product order).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plls {
    period: Vec<BigInt>,
}

impl Plls {
    pub fn new(period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if period.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidInput("PLLS entries must be positive".into()));
        }
        Ok(Self { period })
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(p: &[T]) -> Result<Self> {
        Self::new(p.iter().cloned().map(Into::into).collect())
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// `(a_1, ..., a_n)` with `M = M_{a_1,1} ... M_{a_n,1}`.
    pub fn forward(&self) -> Vec<BigInt> {
        self.period.iter().rev().cloned().collect()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let ms: Vec<IntMatrix> = self.forward().iter().map(m_a1).collect();
        IntMatrix::product(2, &ms).unwrap()
    }
}

impl fmt::Display for Plls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.period.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Writes `M` as a product of `M_{a,1}` factors, checked by multiplying back.
pub fn plls_decompose(m: &IntMatrix) -> Result<Plls> {
    require_2x2(m)?;
    let not_reduced = || Error::NotReduced(m.to_string());
    if !m.get(0, 1).is_positive() || m.get(1, 1).is_negative() {
        return Err(not_reduced());
    }
    let det = m.det();
    let want_even = if det.is_one() {
        true
    } else if (-&det).is_one() {
        false
    } else {
        return Err(not_reduced());
    };
    let mut a = ContinuedFraction::from_rational(&BigRational::new(
        m.get(1, 1).clone(),
        m.get(0, 1).clone(),
    ))
    .partial_quotients();
    if a.len().is_multiple_of(2) != want_even {
        let last = a.pop().unwrap();
        if last.is_one() {
            match a.last_mut() {
                Some(x) => *x += 1,
                None => return Err(not_reduced()),
            }
        } else {
            a.push(last - 1);
            a.push(BigInt::one());
        }
    }
    if a.iter().any(|x| !x.is_positive()) {
        return Err(not_reduced());
    }
    a.reverse();
    let plls = Plls::new(a).map_err(|_| not_reduced())?;
    if &plls.to_matrix() != m {
        return Err(not_reduced());
    }
    Ok(plls)
}

/// Linear recurrence steps derived from a list of companion matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSystem {
    arity: usize,
    // in application order
    steps: Vec<CompanionSpec>,
}

impl RecurrenceSystem {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Steps in application order: the rightmost matrix acts first.
    pub fn steps(&self) -> &[CompanionSpec] {
        &self.steps
    }

    pub fn matrix(&self) -> IntMatrix {
        let ms: Vec<IntMatrix> = self.steps.iter().rev().map(companion).collect();
        IntMatrix::product(self.arity, &ms).unwrap()
    }

    /// Extends the window and returns every appended term.
    pub fn run(&self, window: &[BigInt]) -> Result<Vec<BigInt>> {
        if window.len() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "window of length {} for arity {}",
                window.len(),
                self.arity
            )));
        }
        let mut seq = window.to_vec();
        for s in &self.steps {
            let k = seq.len();
            let next = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, a)| a * &seq[k - 1 - i])
                .sum();
            seq.push(next);
        }
        Ok(seq.split_off(self.arity))
    }

    /// Window after all steps.
    pub fn apply(&self, window: &[BigInt]) -> Result<Vec<BigInt>> {
        let mut seq = window.to_vec();
        seq.extend(self.run(window)?);
        Ok(seq.split_off(seq.len() - self.arity))
    }
}

/// Recurrence system of the product `ms[0] * ms[1] * ...`.
pub fn recurrence_system(ms: &[CompanionSpec]) -> Result<RecurrenceSystem> {
    let arity = ms
        .first()
        .ok_or_else(|| Error::InvalidInput("no companion matrices".into()))?
        .arity();
    if let Some(bad) = ms.iter().find(|s| s.arity() != arity) {
        return Err(Error::ArityMismatch(format!(
            "{} has arity {}, expected {arity}",
            bad,
            bad.arity()
        )));
    }
    Ok(RecurrenceSystem {
        arity,
        steps: ms.iter().rev().cloned().collect(),
    })
}
