//! Cyclic subtractive Euclidean algorithms on triples of non-negative integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::contfrac::{companion, CompanionSpec};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple(pub [u64; 3]);

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 && b == 0 && c == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self([a, b, c]))
    }

    pub fn get(&self) -> [u64; 3] {
        self.0
    }

    pub fn sum(&self) -> u128 {
        self.0.iter().map(|&x| x as u128).sum()
    }

    pub fn gcd(&self) -> u64 {
        self.0[0].gcd(&self.0[1]).gcd(&self.0[2])
    }

    /// `(v[k], v[k+1], v[k+2])` with indices mod 3.
    pub fn rotated(&self, k: usize) -> Self {
        let v = self.0;
        Self([v[k % 3], v[(k + 1) % 3], v[(k + 2) % 3]])
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<u64> = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad triple {s:?}")))?;
        match v[..] {
            [a, b, c] => Triple::new(a, b, c),
            _ => Err(Error::Parse(format!("bad triple {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    MaxB,
    MaxC,
    BThenC,
    MinRemainder,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::MaxB,
        Strategy::MaxC,
        Strategy::BThenC,
        Strategy::MinRemainder,
    ];

    /// `(alpha, beta)` for `a >= b, c` with `b + c > 0`.
    fn choose(&self, a: u64, b: u64, c: u64) -> (u64, u64) {
        let q = |x: u64, y: u64| x.checked_div(y).unwrap_or(0);
        match self {
            Strategy::MaxB if b > 0 => (a / b, 0),
            Strategy::MaxB => (0, a / c),
            Strategy::MaxC if c > 0 => (0, a / c),
            Strategy::MaxC => (a / b, 0),
            Strategy::BThenC => {
                let al = q(a, b);
                (al, q(a - al * b, c))
            }
            Strategy::MinRemainder => {
                if b == 0 {
                    return (0, a / c);
                }
                if c == 0 {
                    return (a / b, 0);
                }
                // remainders repeat once alpha runs through c consecutive values
                let top = a / b;
                let mut best = (top, (a - top * b) / c, (a - top * b) % c);
                for al in (top.saturating_sub(c - 1)..top).rev() {
                    let r = a - al * b;
                    if r % c < best.2 {
                        best = (al, r / c, r % c);
                        if best.2 == 0 {
                            break;
                        }
                    }
                }
                (best.0, best.1)
            }
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "max-b" | "maxb" => Ok(Strategy::MaxB),
            "max-c" | "maxc" => Ok(Strategy::MaxC),
            "b-then-c" | "bthenc" => Ok(Strategy::BThenC),
            "min-remainder" | "minremainder" => Ok(Strategy::MinRemainder),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::MaxB => "max-b",
            Strategy::MaxC => "max-c",
            Strategy::BThenC => "b-then-c",
            Strategy::MinRemainder => "min-remainder",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceEntry {
    /// Cyclic shift `v -> (v[k], v[k+1], v[k+2])`, `k` in 1..=2.
    Shift(usize),
    /// `(a, b, c) -> (b, c, a - alpha*b - beta*c)`.
    Step { alpha: u64, beta: u64 },
    /// `(x, y, 0) -> (y, x - q*y, 0)`.
    Euclid(u64),
}

impl TraceEntry {
    fn inverse_matrix(&self) -> Result<IntMatrix> {
        Ok(match *self {
            TraceEntry::Shift(k) => {
                if !(1..=2).contains(&k) {
                    return Err(Error::InvalidTrace(format!("shift by {k}")));
                }
                rot().pow(k as u32)
            }
            TraceEntry::Step { alpha, beta } => {
                let c = companion(&CompanionSpec::new(vec![
                    BigInt::from(beta),
                    BigInt::from(alpha),
                    BigInt::from(1),
                ])?);
                &(&rot() * &c) * &rot()
            }
            TraceEntry::Euclid(q) => IntMatrix::from_rows(&[
                vec![BigInt::from(q), 1.into(), 0.into()],
                vec![1.into(), 0.into(), 0.into()],
                vec![0.into(), 0.into(), 1.into()],
            ])?,
        })
    }
}

/// `(x, y, z) -> (z, x, y)`.
fn rot() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
}

/// Output of a subtractive run: the steps taken and the terminal `(g, 0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCFTrace {
    pub entries: Vec<TraceEntry>,
    pub terminal: Triple,
}

impl MCFTrace {
    pub fn empty(t: Triple) -> Self {
        Self {
            entries: Vec::new(),
            terminal: t,
        }
    }

    /// The `(alpha, beta)` vectors of the three-dimensional phase.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.entries
            .iter()
            .filter_map(|e| match *e {
                TraceEntry::Step { alpha, beta } => Some((alpha, beta)),
                _ => None,
            })
            .collect()
    }

    /// Partial quotients of the two-dimensional phase.
    pub fn quotients(&self) -> Vec<u64> {
        self.entries
            .iter()
            .filter_map(|e| match *e {
                TraceEntry::Euclid(q) => Some(q),
                _ => None,
            })
            .collect()
    }

    pub fn gcd(&self) -> u64 {
        self.terminal.0[0]
    }

    pub fn validate(&self) -> Result<()> {
        let mut prev_zero = false;
        let mut in_2d = false;
        for e in &self.entries {
            match *e {
                TraceEntry::Step { alpha, beta } => {
                    if in_2d {
                        return Err(Error::InvalidTrace("step after the 2D phase".into()));
                    }
                    let zero = alpha == 0 && beta == 0;
                    if zero && prev_zero {
                        return Err(Error::InvalidTrace("two consecutive zero vectors".into()));
                    }
                    prev_zero = zero;
                }
                TraceEntry::Euclid(_) => in_2d = true,
                TraceEntry::Shift(k) if !(1..=2).contains(&k) => {
                    return Err(Error::InvalidTrace(format!("shift by {k}")));
                }
                TraceEntry::Shift(_) => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for MCFTrace {
    /// `[(1,0); (0,2) : (1,1)] [3; 2 : 1]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |parts: Vec<String>| -> String {
            match parts.split_first() {
                None => "[]".into(),
                Some((h, [])) => format!("[{h}]"),
                Some((h, t)) => format!("[{h}; {}]", t.join(" : ")),
            }
        };
        let p = self
            .pairs()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        let q = self.quotients().iter().map(|q| q.to_string()).collect();
        write!(f, "{} {}", list(p), list(q))
    }
}

/// Largest-first normalization, then one subtraction.
///
/// Returns the shift applied (0 when none), the new triple and `(alpha, beta)`.
pub fn subtract_step(t: Triple, strategy: Strategy) -> Result<(usize, Triple, (u64, u64))> {
    let v = t.0;
    let m = *v.iter().max().unwrap();
    let k = v.iter().position(|&x| x == m).unwrap();
    let [a, b, c] = t.rotated(k).0;
    if b == 0 && c == 0 {
        return Err(Error::Stuck(t.to_string()));
    }
    let (alpha, beta) = strategy.choose(a, b, c);
    let r = a - alpha * b - beta * c;
    Ok((k, Triple([b, c, r]), (alpha, beta)))
}

/// Runs the 3D phase until a coordinate vanishes, then Euclid on the rest.
///
/// The Euclid tail is written with an even number of quotients when possible.
pub fn run_mcf(t: Triple, strategy: Strategy) -> MCFTrace {
    let mut entries = Vec::new();
    let mut cur = t;
    while cur.0.iter().all(|&x| x > 0) {
        let (k, next, (alpha, beta)) = subtract_step(cur, strategy).expect("positive triple");
        if k > 0 {
            entries.push(TraceEntry::Shift(k));
        }
        entries.push(TraceEntry::Step { alpha, beta });
        cur = next;
    }
    // put a zero last and a nonzero first
    let k = (0..3)
        .find(|&k| {
            let r = cur.rotated(k).0;
            r[2] == 0 && r[0] != 0
        })
        .unwrap();
    if k > 0 {
        entries.push(TraceEntry::Shift(k));
        cur = cur.rotated(k);
    }
    let [mut x, mut y, _] = cur.0;
    let mut qs = Vec::new();
    while y > 0 {
        qs.push(x / y);
        (x, y) = (y, x % y);
    }
    if qs.len() % 2 == 1 && qs.len() > 1 {
        let last = qs.pop().unwrap();
        qs.extend([last - 1, 1]);
    }
    entries.extend(qs.into_iter().map(TraceEntry::Euclid));
    MCFTrace {
        entries,
        terminal: Triple([x, 0, 0]),
    }
}

/// Matrix `M` with `M * terminal = start`.
pub fn reconstruct(trace: &MCFTrace) -> Result<IntMatrix> {
    trace.validate()?;
    let mut m = IntMatrix::identity(3);
    for e in &trace.entries {
        m = &m * &e.inverse_matrix()?;
    }
    Ok(m)
}

/// The start triple recovered from a trace.
pub fn reconstruct_start(trace: &MCFTrace) -> Result<Vec<BigInt>> {
    reconstruct(trace)?.apply(&trace.terminal.to_bigints())
}
