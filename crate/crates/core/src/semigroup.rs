//! Farey sets of matrix semigroups, Markov-Davenport forms and Markov numbers of reduced matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classic::FareyFraction;
use crate::contfrac::{m_a1, plls_decompose, Plls};
use crate::error::{Error, Result};
use crate::exact::{IntMatrix, QuadraticSurd};

/// Generator indices (0-based) in written product order.
///
/// The first letter is applied last, as for composed operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupWord(Vec<usize>);

impl SemigroupWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn generator(i: usize) -> Self {
        Self(vec![i])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Letters in the order they act on a vector.
    pub fn application_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().rev().copied()
    }

    /// Letter counts, one entry per generator.
    pub fn abelianization(&self, gens: usize) -> Vec<u64> {
        let mut c = vec![0; gens];
        for &l in &self.0 {
            if l < gens {
                c[l] += 1;
            }
        }
        c
    }

    pub fn evaluate(&self, gens: &[IntMatrix]) -> Result<IntMatrix> {
        let n = gens
            .first()
            .ok_or_else(|| Error::InvalidInput("no generators".into()))?
            .dim();
        let ms = self
            .0
            .iter()
            .map(|&l| {
                gens.get(l).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "letter {} but only {} generators",
                        l + 1,
                        gens.len()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::product(n, ms)
    }

    /// Run-length form `[(letter, power), ...]`.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &l in &self.0 {
            match out.last_mut() {
                Some((x, k)) if *x == l => *k += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl fmt::Display for SemigroupWord {
    /// `A2^5 A1 A3^4`, with 1-based generator names; `1` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .runs()
            .iter()
            .map(|&(l, k)| {
                if k == 1 {
                    format!("A{}", l + 1)
                } else {
                    format!("A{}^{}", l + 1, k)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SemigroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::Parse(format!("bad word token {t:?}"));
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let body = tok.strip_prefix('A').ok_or_else(|| bad(tok))?;
            let (g, k) = match body.split_once('^') {
                Some((g, k)) => (g, k.parse::<usize>().map_err(|_| bad(tok))?),
                None => (body, 1),
            };
            let g: usize = g.parse().map_err(|_| bad(tok))?;
            if g == 0 {
                return Err(bad(tok));
            }
            letters.extend(std::iter::repeat_n(g - 1, k));
        }
        if letters.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        Ok(Self(letters))
    }
}

/// How a Farey sum `x + y` turns into a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ProductOrder {
    /// `F(x + y) = F(y) F(x)`.
    #[default]
    Operator,
    /// `F(x + y) = F(x) F(y)`.
    Juxtaposition,
}

impl ProductOrder {
    fn combine(&self, parts: &[&SemigroupWord]) -> SemigroupWord {
        let mut v = Vec::new();
        let mut push = |w: &SemigroupWord| v.extend_from_slice(&w.0);
        match self {
            ProductOrder::Operator => parts.iter().rev().for_each(|w| push(w)),
            ProductOrder::Juxtaposition => parts.iter().for_each(|w| push(w)),
        }
        SemigroupWord(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyNode2 {
    pub depth: usize,
    pub coordinate: FareyFraction,
    pub word: SemigroupWord,
    pub element: IntMatrix,
}

/// Farey set of the semigroup `<A, B>`: `F(0/1) = A`, `F(1/1) = B`, mediants below.
///
/// Depth 0 gives the generators; depth `k` adds the `2^(k-1)` fractions of the next tree level.
pub fn farey_set_2(
    a: &IntMatrix,
    b: &IntMatrix,
    depth: usize,
    order: ProductOrder,
) -> Result<Vec<FareyNode2>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "generators are {0}x{0} and {1}x{1}",
            a.dim(),
            b.dim()
        )));
    }
    let gens = [a.clone(), b.clone()];
    let node = |depth, coordinate, word: SemigroupWord| -> Result<FareyNode2> {
        Ok(FareyNode2 {
            depth,
            coordinate,
            element: word.evaluate(&gens)?,
            word,
        })
    };
    let w0 = SemigroupWord::generator(0);
    let w1 = SemigroupWord::generator(1);
    let mut out = vec![
        node(0, FareyFraction::zero(), w0.clone())?,
        node(0, FareyFraction::one(), w1.clone())?,
    ];
    // (left fraction, left word, right fraction, right word)
    let mut level = vec![(FareyFraction::zero(), w0, FareyFraction::one(), w1)];
    for d in 1..=depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (lf, lw, rf, rw) in level {
            let mf = lf.mediant(&rf);
            let mw = order.combine(&[&lw, &rw]);
            out.push(node(d, mf, mw.clone())?);
            next.push((lf, lw, mf, mw.clone()));
            next.push((mf, mw, rf, rw));
        }
        level = next;
    }
    Ok(out)
}

/// Subdivision rule for triangles of the 3-generator Farey set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Pairwise,
    Simultaneous,
    Barycentric,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pairwise" => Ok(Scheme::Pairwise),
            "simultaneous" => Ok(Scheme::Simultaneous),
            "barycentric" => Ok(Scheme::Barycentric),
            _ => Err(Error::Parse(format!("unknown scheme {s:?}"))),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scheme::Pairwise => "pairwise",
            Scheme::Simultaneous => "simultaneous",
            Scheme::Barycentric => "barycentric",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyNode3 {
    pub depth: usize,
    /// Letter counts divided by their gcd.
    pub coordinate: [u64; 3],
    pub word: SemigroupWord,
    pub element: IntMatrix,
    pub scheme: Scheme,
}

fn projectivize(v: [u64; 3]) -> [u64; 3] {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g == 0 {
        v
    } else {
        v.map(|x| x / g)
    }
}

/// Triangle-subdivision enumeration of the semigroup `<A, B, C>`.
pub fn farey_set_3(
    gens: &[IntMatrix; 3],
    scheme: Scheme,
    depth: usize,
    order: ProductOrder,
) -> Result<Vec<FareyNode3>> {
    let n = gens[0].dim();
    if gens.iter().any(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch("generators differ in size".into()));
    }
    let mut nodes: Vec<FareyNode3> = Vec::new();
    let mut raw: Vec<[u64; 3]> = Vec::new();
    let mut seen: HashMap<[u64; 3], usize> = HashMap::new();
    let mut add = |nodes: &mut Vec<FareyNode3>,
                   raw: &mut Vec<[u64; 3]>,
                   d: usize,
                   counts: [u64; 3],
                   word: SemigroupWord|
     -> Result<usize> {
        let c = projectivize(counts);
        if let Some(&k) = seen.get(&c) {
            return Ok(k);
        }
        nodes.push(FareyNode3 {
            depth: d,
            coordinate: c,
            element: word.evaluate(gens)?,
            word,
            scheme,
        });
        raw.push(counts);
        seen.insert(c, nodes.len() - 1);
        Ok(nodes.len() - 1)
    };
    for (i, e) in [[1, 0, 0], [0, 1, 0], [0, 0, 1]].into_iter().enumerate() {
        add(&mut nodes, &mut raw, 0, e, SemigroupWord::generator(i))?;
    }
    let mut triangles = vec![[0usize, 1, 2]];
    for d in 1..=depth {
        let mut next = Vec::new();
        for [u, v, w] in triangles {
            let mut sum = |xs: &[usize], nodes: &mut Vec<FareyNode3>, raw: &mut Vec<[u64; 3]>| {
                let mut c = [0u64; 3];
                for &x in xs {
                    for k in 0..3 {
                        c[k] += raw[x][k];
                    }
                }
                let words: Vec<SemigroupWord> = xs.iter().map(|&x| nodes[x].word.clone()).collect();
                let refs: Vec<&SemigroupWord> = words.iter().collect();
                add(nodes, raw, d, c, order.combine(&refs))
            };
            match scheme {
                Scheme::Pairwise => {
                    let uv = sum(&[u, v], &mut nodes, &mut raw)?;
                    let vw = sum(&[v, w], &mut nodes, &mut raw)?;
                    let uw = sum(&[u, w], &mut nodes, &mut raw)?;
                    next.extend([[u, uv, uw], [uv, v, vw], [uw, vw, w], [uv, vw, uw]]);
                }
                Scheme::Simultaneous => {
                    let c = sum(&[u, v, w], &mut nodes, &mut raw)?;
                    next.extend([[u, v, c], [v, w, c], [u, w, c]]);
                }
                Scheme::Barycentric => {
                    let uv = sum(&[u, v], &mut nodes, &mut raw)?;
                    let vw = sum(&[v, w], &mut nodes, &mut raw)?;
                    let uw = sum(&[u, w], &mut nodes, &mut raw)?;
                    let c = sum(&[u, v, w], &mut nodes, &mut raw)?;
                    next.extend([
                        [u, uv, c],
                        [uv, v, c],
                        [v, vw, c],
                        [vw, w, c],
                        [u, uw, c],
                        [uw, w, c],
                    ]);
                }
            }
        }
        triangles = next;
    }
    Ok(nodes)
}

/// Homogeneous form `det(v, Av, ..., A^(n-1) v)`; keys are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDForm {
    n: usize,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

/// Largest size for the symbolic expansion.
pub const MD_FORM_LIMIT: usize = 6;

impl MDForm {
    pub fn arity(&self) -> usize {
        self.n
    }

    /// Nonzero coefficients.
    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.coeffs.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, v: &[BigInt]) -> Result<BigInt> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for a form in {} variables",
                v.len(),
                self.n
            )));
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(v)
                    .fold(c.clone(), |acc, (&k, x)| acc * x.pow(k))
            })
            .sum())
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    fn var(&self, i: usize) -> String {
        if self.n <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for MDForm {
    /// Terms in lexicographically descending monomial order, e.g. `8x^3 + 18x^2y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let constant = e.iter().all(|&x| x == 0);
            if !abs.is_one() || constant {
                write!(f, "{abs}")?;
            }
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "{}", self.var(i))?,
                    _ => write!(f, "{}^{p}", self.var(i))?,
                }
            }
        }
        Ok(())
    }
}

/// Symbolic expansion of the Markov-Davenport form by multilinearity in the columns.
pub fn md_form(a: &IntMatrix) -> Result<MDForm> {
    let n = a.dim();
    if n > MD_FORM_LIMIT {
        return Err(Error::TooLarge {
            what: "symbolic form",
            size: n,
            limit: MD_FORM_LIMIT,
        });
    }
    let powers: Vec<IntMatrix> = (0..n as u32).map(|k| a.pow(k)).collect();
    let mut coeffs: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let total = n.pow(n as u32);
    for code in 0..total {
        // column k uses basis vector e_{choice[k]}
        let mut c = code;
        let mut choice = vec![0usize; n];
        for slot in choice.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        let cols: Vec<Vec<BigInt>> = (0..n).map(|k| powers[k].column(choice[k])).collect();
        let d = IntMatrix::from_columns(&cols)?.det();
        if d.is_zero() {
            continue;
        }
        let mut e = vec![0u32; n];
        for &j in &choice {
            e[j] += 1;
        }
        *coeffs.entry(e).or_default() += d;
    }
    coeffs.retain(|_, v| !v.is_zero());
    Ok(MDForm { n, coeffs })
}

/// `det(v, Av, ..., A^(n-1) v)` evaluated directly.
pub fn md_form_eval(a: &IntMatrix, v: &[BigInt]) -> Result<BigInt> {
    let n = a.dim();
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "point of length {} for a {n}x{n} matrix",
            v.len()
        )));
    }
    let mut cols = vec![v.to_vec()];
    for _ in 1..n {
        let next = a.apply(cols.last().unwrap())?;
        cols.push(next);
    }
    Ok(IntMatrix::from_columns(&cols)?.det())
}

/// `|f_A(0, ..., 0, 1)|`.
pub fn algebraic_markov(a: &IntMatrix) -> BigInt {
    let n = a.dim();
    let mut e = vec![BigInt::zero(); n];
    e[n - 1] = BigInt::one();
    md_form_eval(a, &e).unwrap().abs()
}

/// Minimum of `|f_A|` over a box; an upper bound for the true infimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxSearch {
    pub radius: u64,
    pub minimum: BigInt,
    pub argmin: Vec<i64>,
}

/// Searches nonzero integer points with sup-norm at most `radius`.
pub fn geometric_markov_search(a: &IntMatrix, radius: u64) -> Result<BoxSearch> {
    if radius == 0 {
        return Err(Error::InvalidInput(
            "search radius must be at least 1".into(),
        ));
    }
    let form = md_form(a)?;
    let n = a.dim();
    let r = radius as i64;
    let side = (2 * r + 1) as u128;
    let count = side.pow(n as u32);
    if count > 50_000_000 {
        return Err(Error::TooLarge {
            what: "search box",
            size: count.min(usize::MAX as u128) as usize,
            limit: 50_000_000,
        });
    }
    let mut best: Option<(BigInt, Vec<i64>)> = None;
    let mut p = vec![-r; n];
    loop {
        if p.iter().any(|&x| x != 0) {
            let v: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
            let val = form.eval(&v)?.abs();
            if best.as_ref().is_none_or(|(b, _)| &val < b) {
                best = Some((val, p.clone()));
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                let (minimum, argmin) = best.unwrap();
                return Ok(BoxSearch {
                    radius,
                    minimum,
                    argmin,
                });
            }
            p[k] += 1;
            if p[k] > r {
                p[k] = -r;
                k += 1;
            } else {
                break;
            }
        }
    }
}

/// Purely periodic tail `[0; (b_1 : ... : b_n)]` as an exact surd.
pub fn periodic_tail(b: &[BigInt]) -> Result<QuadraticSurd> {
    if b.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    // [[p_n, p_{n-1}], [q_n, q_{n-1}]] = prod [[b_i, 1], [1, 0]]
    let (mut p, mut pp, mut q, mut qq) =
        (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for x in b {
        let np = x * &p + &pp;
        let nq = x * &q + &qq;
        pp = std::mem::replace(&mut p, np);
        qq = std::mem::replace(&mut q, nq);
    }
    // y = [b_1; ..., b_n, y]: q y^2 + (qq - p) y - pp = 0
    let bb = &qq - &p;
    let disc = &bb * &bb + BigInt::from(4) * &q * &pp;
    let two_q = BigInt::from(2) * &q;
    let y = QuadraticSurd::new(
        BigRational::new(-bb, two_q.clone()),
        BigRational::new(BigInt::one(), two_q),
        disc,
    )?;
    y.inverse()
}

/// `max_i a_i + [0; a_{i+1} : a_{i+2} : ...] + [0; a_{i-1} : a_{i-2} : ...]` over the period.
pub fn perron_minimum(plls: &Plls) -> Result<QuadraticSurd> {
    let a = plls.period();
    let n = a.len();
    if n == 0 {
        return Err(Error::EmptyPeriod);
    }
    let mut best: Option<QuadraticSurd> = None;
    for i in 0..n {
        let fwd: Vec<BigInt> = (1..=n).map(|k| a[(i + k) % n].clone()).collect();
        let bwd: Vec<BigInt> = (1..=n).map(|k| a[(i + n * n - k) % n].clone()).collect();
        let v = QuadraticSurd::from_integer(a[i].clone())
            .checked_add(&periodic_tail(&fwd)?)?
            .checked_add(&periodic_tail(&bwd)?)?;
        best = Some(match best {
            None => v,
            Some(b) => {
                if v.try_cmp(&b)? == std::cmp::Ordering::Greater {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best.unwrap())
}

/// Minimum of `|f|` is attained at `(0, 1)`: `(perron_minimum * m)^2 = (a - d)^2 + 4bc`.
pub fn is_markov_reduced(m: &IntMatrix) -> Result<bool> {
    let plls = plls_decompose(m)?;
    let pm = perron_minimum(&plls)?;
    let mk = QuadraticSurd::from_integer(algebraic_markov(m));
    let x = pm.checked_mul(&mk)?;
    let sq = x.checked_mul(&x)?;
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let delta = (a - d) * (a - d) + BigInt::from(4) * b * c;
    Ok(sq == QuadraticSurd::from_integer(delta))
}

/// Generators `M_{1,a}^2` and `(M_{1,a} M_{1,b} M_{1,a}^-1)^2`.
pub fn aa_bb_generators(a: &BigInt, b: &BigInt) -> Result<(IntMatrix, IntMatrix)> {
    let ma = m_a1(a);
    let mb = m_a1(b);
    let m1 = &ma * &ma;
    let conj = &(&ma * &mb) * &ma.inverse_unimodular()?;
    Ok((m1, &conj * &conj))
}

/// Algebraic Markov numbers over the Farey set of the `(a, b)` family, in generation order.
pub fn aa_bb_family(a: &BigInt, b: &BigInt, depth: usize) -> Result<Vec<(FareyFraction, BigInt)>> {
    let (m1, m2) = aa_bb_generators(a, b)?;
    Ok(farey_set_2(&m1, &m2, depth, ProductOrder::Juxtaposition)?
        .into_iter()
        .map(|n| (n.coordinate, algebraic_markov(&n.element)))
        .collect())
}

/// Several Farey coordinates sharing one Markov number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub fareys: Vec<FareyFraction>,
    pub value: BigInt,
}

/// Repeated values in `aa_bb_family`, ordered by first occurrence.
pub fn collide(a: &BigInt, b: &BigInt, depth: usize) -> Result<Vec<Collision>> {
    let fam = aa_bb_family(a, b, depth)?;
    let mut order: Vec<BigInt> = Vec::new();
    let mut groups: HashMap<BigInt, Vec<FareyFraction>> = HashMap::new();
    for (f, v) in fam {
        let g = groups.entry(v.clone()).or_default();
        if g.is_empty() {
            order.push(v);
        }
        g.push(f);
    }
    Ok(order
        .into_iter()
        .filter_map(|v| {
            let g = groups.remove(&v).unwrap();
            (g.len() > 1).then_some(Collision {
                fareys: g,
                value: v,
            })
        })
        .collect())
}

/// Upper-right entry of the reduced matrix with this PLLS.
pub fn markov_from_plls(plls: &Plls) -> BigInt {
    plls.to_matrix().get(0, 1).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{companion, CompanionSpec};
    use crate::exact::{int, ratio};
    use crate::wugsnake::{body_for_matrix, wug_determinant, Body, Head};
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn sq(x: &IntMatrix) -> IntMatrix {
        x * x
    }

    fn a3() -> IntMatrix {
        mat(&[&[2, 1, 3], &[3, 2, 4], &[6, 4, 9]])
    }

    #[test]
    fn words_display_and_parse() {
        let w: SemigroupWord = "A2^5 A1 A3^4 A2 A1".parse().unwrap();
        assert_eq!(w.len(), 12);
        assert_eq!(w.to_string(), "A2^5 A1 A3^4 A2 A1");
        assert_eq!(w.abelianization(3), vec![2, 6, 4]);
        assert!("B1".parse::<SemigroupWord>().is_err());
        assert!("".parse::<SemigroupWord>().is_err());
    }

    #[test]
    fn farey_2_classical() {
        let a = sq(&m_a1(&int(1)));
        let b = sq(&m_a1(&int(2)));
        let nodes = farey_set_2(&a, &b, 1, ProductOrder::Operator).unwrap();
        let ur: Vec<BigInt> = nodes.iter().map(|n| n.element.get(0, 1).clone()).collect();
        assert_eq!(ur, vec![int(1), int(2), int(5)]);
        assert_eq!(nodes[2].element, mat(&[&[3, 5], &[7, 12]]));
        assert_eq!(
            farey_set_2(&a, &b, 0, ProductOrder::Operator)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            farey_set_2(&a, &b, 4, ProductOrder::Operator)
                .unwrap()
                .len(),
            2 + 15
        );
        assert!(farey_set_2(&a, &IntMatrix::identity(3), 1, ProductOrder::Operator).is_err());
    }

    #[test]
    fn farey_2_elements_match_words() {
        let a = sq(&m_a1(&int(1)));
        let b = sq(&m_a1(&int(3)));
        for order in [ProductOrder::Operator, ProductOrder::Juxtaposition] {
            for n in farey_set_2(&a, &b, 4, order).unwrap() {
                assert_eq!(n.word.evaluate(&[a.clone(), b.clone()]).unwrap(), n.element);
                let c = n.word.abelianization(2);
                let f = FareyFraction::new(c[1], c[0] + c[1]).unwrap();
                assert_eq!(f, n.coordinate);
            }
        }
    }

    #[test]
    fn farey_3_schemes() {
        let gens = [
            sq(&m_a1(&int(1))),
            sq(&m_a1(&int(2))),
            IntMatrix::from_rows(&[vec![14, 5], vec![25, 9]]).unwrap(),
        ];
        let p = farey_set_3(&gens, Scheme::Pairwise, 1, ProductOrder::Operator).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.iter().any(|n| n.coordinate == [1, 1, 0]));
        let s = farey_set_3(&gens, Scheme::Simultaneous, 1, ProductOrder::Operator).unwrap();
        assert_eq!(s.len(), 4);
        let mut letters = s[3].word.letters().to_vec();
        letters.sort();
        assert_eq!(letters, vec![0, 1, 2]);
        assert_eq!(s[3].word.letters(), &[2, 1, 0]);
        let b = farey_set_3(&gens, Scheme::Barycentric, 1, ProductOrder::Operator).unwrap();
        assert_eq!(b.len(), 7);
        // counts per level: pairwise triangles quadruple
        let p2 = farey_set_3(&gens, Scheme::Pairwise, 2, ProductOrder::Operator).unwrap();
        assert_eq!(p2.len(), 15);
        for n in p2.iter().chain(&b) {
            assert_eq!(n.word.evaluate(&gens).unwrap(), n.element);
            assert_eq!(
                projectivize(n.word.abelianization(3).try_into().unwrap()),
                n.coordinate
            );
        }
    }

    #[test]
    fn forms_2x2() {
        let f = md_form(&mat(&[&[3, 5], &[7, 12]])).unwrap();
        assert_eq!(f.to_string(), "7x^2 + 9xy - 5y^2");
        assert!(md_form(&IntMatrix::identity(3)).unwrap().is_zero());
        assert_eq!(algebraic_markov(&mat(&[&[3, 5], &[7, 12]])), int(5));
        assert_eq!(algebraic_markov(&IntMatrix::identity(2)), int(0));
    }

    #[test]
    fn form_3x3_anchor() {
        let a = a3();
        assert_eq!(
            md_form_eval(&a, &[int(0), int(0), int(1)]).unwrap(),
            int(11)
        );
        assert_eq!(algebraic_markov(&a), int(11));
        let f = md_form(&a).unwrap();
        assert_eq!(f.coeff(&[0, 0, 3]), int(11));
        assert_eq!(f.coeff(&[0, 3, 0]), int(14));
        assert_eq!(f.coeffs().len(), 10);
    }

    #[test]
    fn box_search() {
        let s = geometric_markov_search(&mat(&[&[3, 5], &[7, 12]]), 50).unwrap();
        assert_eq!(s.minimum, int(5));
        assert_eq!(
            geometric_markov_search(&IntMatrix::identity(2), 3)
                .unwrap()
                .minimum,
            int(0)
        );
        assert!(geometric_markov_search(&IntMatrix::identity(2), 0).is_err());
    }

    #[test]
    fn perron_values() {
        let p = |v: &[i64]| perron_minimum(&Plls::from_ints(v).unwrap()).unwrap();
        assert_eq!(p(&[1, 1]), QuadraticSurd::sqrt_of(&ratio(5, 1)).unwrap());
        assert_eq!(p(&[2, 2]), QuadraticSurd::sqrt_of(&ratio(8, 1)).unwrap());
        assert_eq!(
            p(&[1, 1, 2, 2]),
            QuadraticSurd::sqrt_of(&ratio(221, 25)).unwrap()
        );
        assert_eq!(p(&[1]), QuadraticSurd::sqrt_of(&ratio(5, 1)).unwrap());
        assert_eq!(periodic_tail(&[]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn tail_golden() {
        let t = periodic_tail(&[int(1)]).unwrap();
        assert_eq!(t.to_string(), "-1/2 + sqrt(5)/2");
    }

    #[test]
    fn markov_reduced() {
        assert!(is_markov_reduced(&mat(&[&[3, 5], &[7, 12]])).unwrap());
        // [[1,3],[2,5]] has f(1,0) = -2 below |b| = 3
        let m = Plls::from_ints(&[2, 1, 1]).unwrap().to_matrix();
        assert!(!is_markov_reduced(&m).unwrap());
        assert_eq!(md_form_eval(&m, &[int(1), int(0)]).unwrap().abs(), int(2));
        assert!(is_markov_reduced(&mat(&[&[2, 1], &[1, 1]])).is_err());
    }

    #[test]
    fn family_values() {
        let f = aa_bb_family(&int(1), &int(2), 3).unwrap();
        let v: Vec<BigInt> = f.iter().take(5).map(|x| x.1.clone()).collect();
        assert_eq!(v, [1, 2, 5, 13, 29].map(int).to_vec());
        let f = aa_bb_family(&int(2), &int(3), 3).unwrap();
        let v: Vec<BigInt> = f.iter().take(5).map(|x| x.1.clone()).collect();
        assert_eq!(v, [2, 3, 17, 99, 185].map(int).to_vec());
    }

    #[test]
    fn family_generators() {
        let (m1, m2) = aa_bb_generators(&int(4), &int(11)).unwrap();
        assert_eq!(m1, mat(&[&[1, 4], &[4, 17]]));
        assert_eq!(m2, mat(&[&[78, 11], &[319, 45]]));
    }

    #[test]
    fn counterexample() {
        let c = collide(&int(4), &int(11), 6).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].value, int(355318099));
        assert_eq!(
            c[0].fareys,
            vec!["4/5".parse().unwrap(), "1/7".parse().unwrap()]
        );
        let p1 = Plls::from_ints(&[4, 4, 11, 11, 11, 11, 11, 11, 11, 11]).unwrap();
        let p2 = Plls::from_ints(&[4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 11, 11]).unwrap();
        assert_eq!(markov_from_plls(&p1), int(355318099));
        assert_eq!(markov_from_plls(&p2), int(355318099));
        assert_eq!(markov_from_plls(&Plls::from_ints(&[1, 1]).unwrap()), int(1));
    }

    #[test]
    fn markov_semigroups_certified() {
        for (a, b) in [(1, 2), (2, 3), (1, 3)] {
            let ga = sq(&m_a1(&int(a)));
            let gb = sq(&m_a1(&int(b)));
            for n in farey_set_2(&ga, &gb, 3, ProductOrder::Operator).unwrap() {
                assert!(is_markov_reduced(&n.element).unwrap(), "{}", n.element);
                let s = geometric_markov_search(&n.element, 20).unwrap();
                assert_eq!(s.minimum, algebraic_markov(&n.element));
            }
        }
    }

    #[test]
    fn symmetric_transpose() {
        let s = mat(&[&[2, 3], &[3, 5]]);
        assert_eq!(algebraic_markov(&s.transpose()), algebraic_markov(&s));
        let a = mat(&[&[3, 5], &[7, 12]]);
        assert_ne!(algebraic_markov(&a.transpose()), algebraic_markov(&a));
    }

    #[test]
    fn basis_change_invariance() {
        let a = mat(&[&[3, 5], &[7, 12]]);
        let u = mat(&[&[1, 1], &[0, 1]]);
        let b = &(&u * &a) * &u.inverse_unimodular().unwrap();
        let r = geometric_markov_search(&a, 10).unwrap().minimum;
        let r2 = geometric_markov_search(&b, 25).unwrap().minimum;
        assert_eq!(r, r2);
    }

    fn reduced_2x2() -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(1i64..5, 1..6)
            .prop_map(|a| Plls::from_ints(&a).unwrap().to_matrix())
    }

    fn reduced_3x3() -> impl Strategy<Value = Vec<CompanionSpec>> {
        proptest::collection::vec(proptest::collection::vec(0i64..3, 3), 1..5).prop_map(|specs| {
            specs
                .into_iter()
                .map(|mut c| {
                    c[2] = c[2].max(1);
                    CompanionSpec::from_ints(&c).unwrap()
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn form_eval_agrees(a in proptest::collection::vec(proptest::collection::vec(-4i64..5, 3), 3), v in proptest::collection::vec(-5i64..6, 3)) {
            let a = IntMatrix::from_rows(&a).unwrap();
            let v: Vec<BigInt> = v.into_iter().map(int).collect();
            prop_assert_eq!(md_form(&a).unwrap().eval(&v).unwrap(), md_form_eval(&a, &v).unwrap());
        }

        #[test]
        fn wug_determinant_is_form_2(a in reduced_2x2(), h in proptest::collection::vec(-6i64..7, 2)) {
            let plls = plls_decompose(&a).unwrap();
            let dec: Vec<CompanionSpec> = plls.forward().iter().map(|x| CompanionSpec::new(vec![x.clone(), int(1)]).unwrap()).collect();
            let head = Head::from_ints(&h).unwrap();
            let via_body = wug_determinant(&head, &body_for_matrix(&a, &dec).unwrap()).unwrap();
            prop_assert_eq!(&via_body, &md_form_eval(&a, head.target()).unwrap());
            prop_assert_eq!(via_body, wug_determinant(&head, &Body::representing(&a)).unwrap());
        }

        #[test]
        fn wug_determinant_is_form_3(dec in reduced_3x3(), h in proptest::collection::vec(-6i64..7, 3)) {
            let a = IntMatrix::product(3, &dec.iter().map(companion).collect::<Vec<_>>()).unwrap();
            let head = Head::from_ints(&h).unwrap();
            let via_body = wug_determinant(&head, &body_for_matrix(&a, &dec).unwrap()).unwrap();
            prop_assert_eq!(&via_body, &md_form_eval(&a, head.target()).unwrap());
            // inserting a cube of the cyclic shift changes the decomposition, not the matrix
            let shift = CompanionSpec::from_ints(&[0, 0, 1]).unwrap();
            let mut alt = dec.clone();
            alt.extend([shift.clone(), shift.clone(), shift]);
            prop_assert_eq!(via_body, wug_determinant(&head, &body_for_matrix(&a, &alt).unwrap()).unwrap());
        }

        #[test]
        fn box_bounded_by_algebraic(a in reduced_2x2()) {
            let s = geometric_markov_search(&a, 6).unwrap();
            prop_assert!(s.minimum <= algebraic_markov(&a));
        }
    }
}
