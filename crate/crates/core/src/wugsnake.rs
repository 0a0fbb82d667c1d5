//! Weighted universal generalized snake graphs.
//!
//! A wug-snake of size `n` has vertex classes `u_1..u_n` and `v_1..v_n`,
//! an edge `u_i - v_j` of multiplicity `w_{i,j}` for every `i <= j` and a
//! single edge `u_{j+1} - v_j` below the diagonal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::contfrac::{companion, recurrence_system, CompanionSpec, RecurrenceSystem};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::json::{int_from_json, int_to_json};

/// Largest size accepted by the brute-force matching count.
pub const BRUTEFORCE_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WugSnake {
    // cols[j][i] = w_{i+1, j+1}
    cols: Vec<Vec<BigInt>>,
}

impl WugSnake {
    /// Size `n` with all weights zero.
    pub fn new(n: usize) -> Self {
        Self {
            cols: (1..=n).map(|j| vec![BigInt::zero(); j]).collect(),
        }
    }

    /// Builds from 1-based `(i, j, w)` triples; unlisted weights are zero.
    pub fn from_triples(n: usize, triples: &[(usize, usize, BigInt)]) -> Result<Self> {
        let mut w = Self::new(n);
        for (i, j, x) in triples {
            w.set_weight(*i, *j, x.clone())?;
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::InvalidInput(format!(
                "weight index ({i},{j}) outside 1 <= i <= j <= {}",
                self.len()
            )));
        }
        Ok(())
    }

    pub fn weight(&self, i: usize, j: usize) -> Result<&BigInt> {
        self.check(i, j)?;
        Ok(&self.cols[j - 1][i - 1])
    }

    pub fn set_weight(&mut self, i: usize, j: usize, w: BigInt) -> Result<()> {
        self.check(i, j)?;
        self.cols[j - 1][i - 1] = w;
        Ok(())
    }

    /// Nonzero weights as 1-based triples, column by column.
    pub fn triples(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, w) in col.iter().enumerate() {
                if !w.is_zero() {
                    out.push((i + 1, j + 1, w.clone()));
                }
            }
        }
        out
    }

    pub fn has_nonnegative_weights(&self) -> bool {
        self.cols.iter().flatten().all(|w| !w.is_negative())
    }

    fn square(&self, sub: i64) -> Result<IntMatrix> {
        let n = self.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty wug-snake".into()));
        }
        let mut m = IntMatrix::zeros(n);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, w) in col.iter().enumerate() {
                m.set(i, j, w.clone());
            }
            if j + 1 < n {
                m.set(j + 1, j, BigInt::from(sub));
            }
        }
        Ok(m)
    }

    /// Weights with `-1` on the subdiagonal.
    pub fn continuant_matrix(&self) -> Result<IntMatrix> {
        self.square(-1)
    }

    /// Rows `u_i`, columns `v_j`, edge multiplicities as entries.
    pub fn biadjacency(&self) -> Result<IntMatrix> {
        self.square(1)
    }

    pub fn matching_count_det(&self) -> Result<BigInt> {
        Ok(self.continuant_matrix()?.det())
    }

    pub fn matching_count_permanent(&self) -> Result<BigInt> {
        self.biadjacency()?.permanent()
    }

    /// Enumerates perfect matchings of the graph edge by edge.
    pub fn matching_count_bruteforce(&self) -> Result<BigInt> {
        let n = self.len();
        if n > BRUTEFORCE_LIMIT {
            return Err(Error::TooLarge {
                what: "brute-force matching count",
                size: n,
                limit: BRUTEFORCE_LIMIT,
            });
        }
        if !self.has_nonnegative_weights() {
            return Err(Error::InvalidInput(
                "brute-force counting needs nonnegative weights".into(),
            ));
        }
        // edges at v_j: (u index, multiplicity)
        let mut adj: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); n];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, w) in col.iter().enumerate() {
                if !w.is_zero() {
                    adj[j].push((i, w.clone()));
                }
            }
            if j + 1 < n {
                adj[j].push((j + 1, BigInt::one()));
            }
        }
        fn go(adj: &[Vec<(usize, BigInt)>], j: usize, used: u32, acc: &BigInt, total: &mut BigInt) {
            if j == adj.len() {
                *total += acc;
                return;
            }
            for (u, w) in &adj[j] {
                if used & (1 << u) == 0 {
                    go(adj, j + 1, used | (1 << u), &(acc * w), total);
                }
            }
        }
        let mut total = BigInt::zero();
        go(&adj, 0, 0, &BigInt::one(), &mut total);
        Ok(total)
    }

    /// `(mu_1, ..., mu_n)` from `mu_k = sum_i w_{i,k} mu_{i-1}` with `mu_0 = 1`.
    pub fn matching_sequence(&self) -> Vec<BigInt> {
        let mut mu = vec![BigInt::one()];
        for col in &self.cols {
            let next = col.iter().zip(&mu).map(|(w, m)| w * m).sum();
            mu.push(next);
        }
        mu.split_off(1)
    }

    /// The sub-snake `K_i` on the first `i` vertex pairs.
    pub fn filtration(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.len() {
            return Err(Error::InvalidInput(format!(
                "filtration index {i} outside 1..={}",
                self.len()
            )));
        }
        Ok(Self {
            cols: self.cols[..i].to_vec(),
        })
    }

    /// Appends the body's columns as new vertices.
    pub fn attach(&self, body: &Body) -> Result<Self> {
        let mut out = self.clone();
        for (t, c) in body.columns.iter().enumerate() {
            let len = out.len();
            if c.len() > len {
                return Err(Error::IncompatibleArity(format!(
                    "column {t} has depth {} but the graph has length {len}",
                    c.len()
                )));
            }
            let mut col = vec![BigInt::zero(); len + 1];
            for (r, x) in c.iter().enumerate() {
                col[len - r] = x.clone();
            }
            out.cols.push(col);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let weights: Vec<Value> = self
            .triples()
            .iter()
            .map(|(i, j, w)| json!([i, j, int_to_json(w)]))
            .collect();
        json!({ "n": self.len(), "weights": weights })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("wug-snake needs an integer field \"n\"".into()))?
            as usize;
        let ws = v
            .get("weights")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("wug-snake needs an array field \"weights\"".into()))?;
        let mut triples = Vec::with_capacity(ws.len());
        for t in ws {
            let parts = t
                .as_array()
                .filter(|p| p.len() == 3)
                .ok_or_else(|| Error::Parse(format!("weight entry {t} is not [i, j, w]")))?;
            let idx = |k: usize| {
                parts[k]
                    .as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("bad index in {t}")))
            };
            triples.push((idx(0)?, idx(1)?, int_from_json(&parts[2])?));
        }
        Self::from_triples(n, &triples)
    }
}

impl fmt::Display for WugSnake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// A head of length `k`: the last `k` terms it provides to a body.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Head {
    target: Vec<BigInt>,
}

impl Head {
    pub fn new(target: Vec<BigInt>) -> Result<Self> {
        if target.is_empty() {
            return Err(Error::InvalidInput("head needs at least one term".into()));
        }
        Ok(Self { target })
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(t: &[T]) -> Result<Self> {
        Self::new(t.iter().cloned().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.target.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn target(&self) -> &[BigInt] {
        &self.target
    }

    pub fn graph(&self) -> WugSnake {
        simple_head(&self.target)
    }
}

/// Size `s+1` snake with matching sequence `(1, x_1, ..., x_s)`.
pub fn simple_head(xs: &[BigInt]) -> WugSnake {
    let mut w = WugSnake::new(xs.len() + 1);
    w.cols[0][0] = BigInt::one();
    for (j, x) in xs.iter().enumerate() {
        w.cols[j + 1][0] = x.clone();
    }
    w
}

/// Recurrence columns; column entries are coefficients of the most recent terms first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Body {
    columns: Vec<Vec<BigInt>>,
}

impl Body {
    pub fn new(columns: Vec<Vec<BigInt>>) -> Self {
        Self { columns }
    }

    pub fn columns(&self) -> &[Vec<BigInt>] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn from_recurrence(sys: &RecurrenceSystem) -> Self {
        Self {
            columns: sys.steps().iter().map(|s| s.coeffs().to_vec()).collect(),
        }
    }

    /// A body realising an arbitrary `k x k` matrix: column `t` writes row `t` in terms of the head.
    pub fn representing(a: &IntMatrix) -> Self {
        let k = a.dim();
        let columns = (0..k)
            .map(|t| {
                let mut c = vec![BigInt::zero(); t];
                c.extend((0..k).rev().map(|i| a.get(t, i).clone()));
                c
            })
            .collect();
        Self { columns }
    }

    /// `self` applied first, then `next`.
    pub fn then(&self, next: &Body) -> Body {
        let mut columns = self.columns.clone();
        columns.extend(next.columns.iter().cloned());
        Body { columns }
    }

    pub fn repeat(&self, times: usize) -> Body {
        Body {
            columns: (0..times)
                .flat_map(|_| self.columns.iter().cloned())
                .collect(),
        }
    }

    /// Checks that every column only reaches back into a window of length `k`.
    pub fn check_arity(&self, k: usize) -> Result<()> {
        for (t, c) in self.columns.iter().enumerate() {
            if c.len() > k + t {
                return Err(Error::IncompatibleArity(format!(
                    "column {t} has depth {} but only {} terms precede it",
                    c.len(),
                    k + t
                )));
            }
        }
        Ok(())
    }

    /// Runs the columns on a window and returns the new last-`k` window.
    pub fn apply(&self, window: &[BigInt]) -> Result<Vec<BigInt>> {
        let k = window.len();
        self.check_arity(k)?;
        let mut seq = window.to_vec();
        for c in &self.columns {
            let len = seq.len();
            let next = c
                .iter()
                .enumerate()
                .map(|(r, x)| x * &seq[len - 1 - r])
                .sum();
            seq.push(next);
        }
        Ok(seq.split_off(seq.len() - k))
    }
}

/// Body of the recurrence system of `decomposition`, checked against `a`.
pub fn body_for_matrix(a: &IntMatrix, decomposition: &[CompanionSpec]) -> Result<Body> {
    let sys = recurrence_system(decomposition)?;
    let mats: Vec<IntMatrix> = decomposition.iter().map(companion).collect();
    if sys.arity() != a.dim() || &IntMatrix::product(a.dim(), &mats)? != a {
        return Err(Error::DecompositionMismatch(a.to_string()));
    }
    Ok(Body::from_recurrence(&sys))
}

/// `det(v_0, ..., v_{h-1})` where `v_i` is the last-`h` window of `H B^i`.
pub fn wug_determinant(head: &Head, body: &Body) -> Result<BigInt> {
    let h = head.len();
    body.check_arity(h)?;
    let mut g = head.graph();
    let mut cols = vec![head.target.clone()];
    for _ in 1..h {
        g = g.attach(body)?;
        let seq = g.matching_sequence();
        cols.push(seq[seq.len() - h..].to_vec());
    }
    Ok(IntMatrix::from_columns(&cols)?.det())
}
