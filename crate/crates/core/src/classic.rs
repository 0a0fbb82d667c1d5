//! Markov, Farey and Cohn trees, Christoffel words and domino graphs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Markov triple `(l, m, r)` with the largest entry in the middle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkovTriple {
    pub left: BigInt,
    pub mid: BigInt,
    pub right: BigInt,
}

impl MarkovTriple {
    pub fn new<T: Into<BigInt>>(l: T, m: T, r: T) -> Self {
        Self {
            left: l.into(),
            mid: m.into(),
            right: r.into(),
        }
    }

    pub fn root() -> Self {
        Self::new(1, 5, 2)
    }

    pub fn is_solution(&self) -> bool {
        let (x, y, z) = (&self.left, &self.mid, &self.right);
        x * x + y * y + z * z == BigInt::from(3) * x * y * z
    }

    pub fn left_child(&self) -> Self {
        let m = BigInt::from(3) * &self.left * &self.mid - &self.right;
        Self {
            left: self.left.clone(),
            mid: m,
            right: self.mid.clone(),
        }
    }

    pub fn right_child(&self) -> Self {
        let m = BigInt::from(3) * &self.mid * &self.right - &self.left;
        Self {
            left: self.mid.clone(),
            mid: m,
            right: self.right.clone(),
        }
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        vec![self.left.clone(), self.mid.clone(), self.right.clone()]
    }

    /// Entries in ascending order.
    pub fn sorted(&self) -> [BigInt; 3] {
        let mut v = [self.left.clone(), self.mid.clone(), self.right.clone()];
        v.sort();
        v
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.left, self.mid, self.right)
    }
}

/// Reduced fraction `p/q` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    p: u64,
    q: u64,
}

impl FareyFraction {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 || p > q {
            return Err(Error::InvalidInput(format!("{p}/{q} is not in [0, 1]")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime(p.to_string(), q.to_string()));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn zero() -> Self {
        Self { p: 0, q: 1 }
    }

    pub fn one() -> Self {
        Self { p: 1, q: 1 }
    }

    pub fn half() -> Self {
        Self { p: 1, q: 2 }
    }

    pub fn mediant(&self, other: &Self) -> Self {
        Self {
            p: self.p + other.p,
            q: self.q + other.q,
        }
    }

    /// All fractions in `[0, 1]` with denominator at most `q`.
    pub fn all_up_to(q: u64) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=q)
            .flat_map(|d| (0..=d).filter_map(move |n| Self::new(n, d).ok()))
            .collect();
        out.sort();
        out
    }
}

impl PartialOrd for FareyFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FareyFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for FareyFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a fraction p/q: {s:?}"));
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        Self::new(
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// Position in the Farey tree: neighbours and centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyTriple {
    pub left: FareyFraction,
    pub mid: FareyFraction,
    pub right: FareyFraction,
}

impl FareyTriple {
    pub fn root() -> Self {
        Self {
            left: FareyFraction::zero(),
            mid: FareyFraction::half(),
            right: FareyFraction::one(),
        }
    }

    pub fn left_child(&self) -> Self {
        Self {
            left: self.left,
            mid: self.left.mediant(&self.mid),
            right: self.mid,
        }
    }

    pub fn right_child(&self) -> Self {
        Self {
            left: self.mid,
            mid: self.mid.mediant(&self.right),
            right: self.right,
        }
    }
}

/// The two neighbours whose mediant is `t`; `None` for `0/1` and `1/1`.
pub fn farey_parents(t: &FareyFraction) -> Option<(FareyFraction, FareyFraction)> {
    if t.q <= 1 {
        return None;
    }
    let mut f = FareyTriple::root();
    loop {
        match t.cmp(&f.mid) {
            Ordering::Equal => return Some((f.left, f.right)),
            Ordering::Less => f = f.left_child(),
            Ordering::Greater => f = f.right_child(),
        }
    }
}

/// A node of the joint Farey/Markov tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovNode {
    pub depth: usize,
    pub farey: FareyTriple,
    pub triple: MarkovTriple,
}

/// Breadth-first nodes of the Markov tree down to `depth` (root at depth 0).
pub fn markov_tree(depth: usize) -> Vec<MarkovNode> {
    let mut out = vec![MarkovNode {
        depth: 0,
        farey: FareyTriple::root(),
        triple: MarkovTriple::root(),
    }];
    let mut level = 0;
    let mut start = 0;
    while level < depth {
        let end = out.len();
        for k in start..end {
            let n = out[k].clone();
            out.push(MarkovNode {
                depth: level + 1,
                farey: n.farey.left_child(),
                triple: n.triple.left_child(),
            });
            out.push(MarkovNode {
                depth: level + 1,
                farey: n.farey.right_child(),
                triple: n.triple.right_child(),
            });
        }
        start = end;
        level += 1;
    }
    out
}

/// Distinct Markov numbers occurring in the tree to `depth`, ascending.
pub fn markov_numbers(depth: usize) -> Vec<BigInt> {
    let set: BTreeSet<BigInt> = markov_tree(depth)
        .into_iter()
        .flat_map(|n| n.triple.to_vec())
        .collect();
    set.into_iter().collect()
}

/// Farey tree triples to `depth`, breadth first.
pub fn farey_tree(depth: usize) -> Vec<(usize, FareyTriple)> {
    markov_tree(depth)
        .into_iter()
        .map(|n| (n.depth, n.farey))
        .collect()
}

/// `m_t`, found by walking the Farey and Markov trees together.
pub fn frobenius_index(t: &FareyFraction) -> BigInt {
    if *t == FareyFraction::zero() {
        return BigInt::one();
    }
    if *t == FareyFraction::one() {
        return BigInt::from(2);
    }
    let mut f = FareyTriple::root();
    let mut m = MarkovTriple::root();
    loop {
        match t.cmp(&f.mid) {
            Ordering::Equal => return m.mid,
            Ordering::Less => {
                f = f.left_child();
                m = m.left_child();
            }
            Ordering::Greater => {
                f = f.right_child();
                m = m.right_child();
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

/// Word over `{A, B}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbWord(pub Vec<Letter>);

impl AbWord {
    pub fn letters(&self) -> &[Letter] {
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

    /// Splits `A w B`; `None` unless the word starts with A and ends with B.
    pub fn palindrome_factor(&self) -> Option<AbWord> {
        match self.0.as_slice() {
            [Letter::A, mid @ .., Letter::B] => Some(AbWord(mid.to_vec())),
            _ => None,
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Product with `A = [[1,1],[1,2]]`, `B = [[3,2],[4,3]]`.
    pub fn matrix(&self) -> IntMatrix {
        let a = cohn_a();
        let b = cohn_b();
        let ms: Vec<&IntMatrix> = self
            .0
            .iter()
            .map(|l| if *l == Letter::A { &a } else { &b })
            .collect();
        IntMatrix::product(2, ms).unwrap()
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::A { 'A' } else { 'B' })?;
        }
        Ok(())
    }
}

impl FromStr for AbWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'A' => Ok(Letter::A),
                'B' => Ok(Letter::B),
                _ => Err(Error::Parse(format!("letter {c:?} not in {{A, B}}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(AbWord)
    }
}

pub fn cohn_a() -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, 1], vec![1, 2]]).unwrap()
}

pub fn cohn_b() -> IntMatrix {
    IntMatrix::from_rows(&[vec![3, 2], vec![4, 3]]).unwrap()
}

/// Lower Christoffel word of slope `p/q`.
pub fn christoffel(t: &FareyFraction) -> AbWord {
    let (p, q) = (t.p, t.q);
    AbWord(
        (1..=q)
            .map(|i| {
                if (p * i) / q == (p * (i - 1)) / q {
                    Letter::A
                } else {
                    Letter::B
                }
            })
            .collect(),
    )
}

/// Cohn word from `W_t = W_r W_s` over the Farey parents of `t`.
pub fn cohn_word(t: &FareyFraction) -> AbWord {
    let a = AbWord(vec![Letter::A]);
    let b = AbWord(vec![Letter::B]);
    if *t == FareyFraction::zero() {
        return a;
    }
    if *t == FareyFraction::one() {
        return b;
    }
    let mut f = FareyTriple::root();
    let (mut wl, mut wr) = (a, b);
    loop {
        let wm = wl.concat(&wr);
        match t.cmp(&f.mid) {
            Ordering::Equal => return wm,
            Ordering::Less => {
                f = f.left_child();
                wr = wm;
            }
            Ordering::Greater => {
                f = f.right_child();
                wl = wm;
            }
        }
    }
}

/// Upper-right entry of the Cohn product along the Christoffel word.
pub fn mu_domino(t: &FareyFraction) -> BigInt {
    christoffel(t).matrix().get(0, 1).clone()
}

/// Continued fraction read off the word: `A -> 1,1`, `B -> 2,2`, last term dropped.
pub fn domino_continued_fraction(t: &FareyFraction) -> Vec<u64> {
    let mut a: Vec<u64> = christoffel(t)
        .0
        .iter()
        .flat_map(|l| if *l == Letter::A { [1, 1] } else { [2, 2] })
        .collect();
    a.pop();
    a
}

/// Unit squares, by lower-left corner.
pub type Cell = (i64, i64);

/// Snake graph of a regular continued fraction: `sum(a) - 1` tiles.
pub fn snake_from_continued_fraction(a: &[u64]) -> Vec<Cell> {
    let total: u64 = a.iter().sum();
    if total < 2 {
        return Vec::new();
    }
    let mut signs = Vec::with_capacity(total as usize);
    let mut s = true;
    for &k in a {
        signs.extend(std::iter::repeat_n(s, k as usize));
        s = !s;
    }
    let tiles = total as usize - 1;
    let mut cells = vec![(0, 0)];
    let mut right = true;
    for k in 0..tiles - 1 {
        if k > 0 && signs[k] == signs[k + 1] {
            right = !right;
        }
        let (x, y) = cells[cells.len() - 1];
        cells.push(if right { (x + 1, y) } else { (x, y + 1) });
    }
    cells
}

/// The domino graph `D(t)`.
pub fn domino_geometry(t: &FareyFraction) -> Vec<Cell> {
    snake_from_continued_fraction(&domino_continued_fraction(t))
}

/// Squares whose interior meets the segment from `(0,0)` to `(q,p)`.
pub fn snake_geometry(t: &FareyFraction) -> Vec<Cell> {
    let (p, q) = (t.p as i64, t.q as i64);
    let mut cells = Vec::new();
    for x in 0..q {
        let lo = Integer::div_floor(&(p * x), &q);
        let hi = Integer::div_ceil(&(p * (x + 1)), &q);
        for y in lo..hi {
            cells.push((x, y));
        }
    }
    cells
}

/// Perfect matchings of the union of unit squares, by exhaustive search.
///
/// An empty cell set is read as a single edge.
pub fn matching_count_cells(cells: &[Cell]) -> BigInt {
    if cells.is_empty() {
        return BigInt::one();
    }
    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut adj: Vec<BTreeSet<usize>> = Vec::new();
    let mut id = |p: (i64, i64), adj: &mut Vec<BTreeSet<usize>>| {
        *index.entry(p).or_insert_with(|| {
            adj.push(BTreeSet::new());
            adj.len() - 1
        })
    };
    for &(x, y) in cells {
        let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        for k in 0..4 {
            let u = id(corners[k], &mut adj);
            let v = id(corners[(k + 1) % 4], &mut adj);
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    fn go(adj: &[BTreeSet<usize>], used: &mut Vec<bool>) -> BigInt {
        let Some(v) = used.iter().position(|u| !u) else {
            return BigInt::one();
        };
        used[v] = true;
        let mut total = BigInt::zero();
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                total += go(adj, used);
                used[w] = false;
            }
        }
        used[v] = false;
        total
    }
    let mut used = vec![false; adj.len()];
    go(&adj, &mut used)
}

/// 2x2 Cohn matrix: determinant 1 and trace three times the upper-right entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohnMatrix {
    matrix: IntMatrix,
}

impl CohnMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if matrix.dim() != 2 {
            return Err(Error::DimensionMismatch("Cohn matrices are 2x2".into()));
        }
        if !matrix.det().is_one() {
            return Err(Error::NotUnimodular(matrix.to_string()));
        }
        if matrix.trace() != BigInt::from(3) * matrix.get(0, 1) {
            return Err(Error::InvalidInput(format!(
                "{matrix} has trace other than 3 times its upper-right entry"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn markov_number(&self) -> &BigInt {
        self.matrix.get(0, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohnNode {
    pub depth: usize,
    pub farey: FareyTriple,
    pub left: CohnMatrix,
    pub mid: CohnMatrix,
    pub right: CohnMatrix,
}

/// Root matrices `C_{0/1}, C_{1/2}, C_{1/1}` for parameter `a`.
pub fn cohn_roots(a: &BigInt) -> (IntMatrix, IntMatrix, IntMatrix) {
    let i = |x: i64| BigInt::from(x);
    let a2 = a * a;
    let m = |r: [[BigInt; 2]; 2]| IntMatrix::from_rows(&[r[0].to_vec(), r[1].to_vec()]).unwrap();
    let c0 = m([[a.clone(), i(1)], [i(3) * a - &a2 - 1, i(3) - a]]);
    let c1 = m([
        [i(2) * a + 1, i(2)],
        [-i(2) * &a2 + i(4) * a + 2, i(5) - i(2) * a],
    ]);
    let ch = m([
        [i(5) * a + 2, i(5)],
        [-i(5) * &a2 + i(11) * a + 5, i(13) - i(5) * a],
    ]);
    (c0, ch, c1)
}

/// Breadth-first Cohn tree; children `(R, R^2 S, RS)` and `(RS, RS^2, S)`.
pub fn cohn_tree(depth: usize, a: &BigInt) -> Result<Vec<CohnNode>> {
    let (l, m, r) = cohn_roots(a);
    let mut out = vec![CohnNode {
        depth: 0,
        farey: FareyTriple::root(),
        left: CohnMatrix::new(l)?,
        mid: CohnMatrix::new(m)?,
        right: CohnMatrix::new(r)?,
    }];
    let mut start = 0;
    for level in 0..depth {
        let end = out.len();
        for k in start..end {
            let n = out[k].clone();
            let lm = CohnMatrix::new(n.left.matrix() * n.mid.matrix())?;
            let mr = CohnMatrix::new(n.mid.matrix() * n.right.matrix())?;
            out.push(CohnNode {
                depth: level + 1,
                farey: n.farey.left_child(),
                left: n.left.clone(),
                mid: lm,
                right: n.mid.clone(),
            });
            out.push(CohnNode {
                depth: level + 1,
                farey: n.farey.right_child(),
                left: n.mid.clone(),
                mid: mr,
                right: n.right.clone(),
            });
        }
        start = end;
    }
    Ok(out)
}

fn require_sl2(m: &IntMatrix) -> Result<()> {
    if m.dim() != 2 || !m.det().is_one() {
        return Err(Error::NotUnimodular(m.to_string()));
    }
    Ok(())
}

/// `tr(A B A^-1 B^-1)`.
pub fn commutator_trace(a: &IntMatrix, b: &IntMatrix) -> Result<BigInt> {
    require_sl2(a)?;
    require_sl2(b)?;
    let c = &(&(a * b) * &a.inverse_unimodular()?) * &b.inverse_unimodular()?;
    Ok(c.trace())
}

/// Checks the Fricke trace identity for a pair in `SL(2, Z)`.
pub fn fricke_check(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    let comm = commutator_trace(a, b)?;
    let (ta, tb, tab) = (a.trace(), b.trace(), (a * b).trace());
    let lhs = &ta * &ta + &tb * &tb + &tab * &tab;
    let rhs = ta * tb * tab + comm + 2;
    Ok(lhs == rhs)
}

/// Binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadraticForm {
    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, "x^2"), (&self.b, "xy"), (&self.c, "y^2")];
        let mut first = true;
        for (c, mono) in terms {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{mono}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Markov's form `m x^2 + (3m - 2u) xy + (v - 3u) y^2` of a triple.
pub fn markov_form(triple: &MarkovTriple) -> Result<QuadraticForm> {
    if !triple.is_solution() {
        return Err(Error::InvalidInput(format!(
            "{triple} is not a Markov triple"
        )));
    }
    let [m2, m1, m] = triple.sorted();
    let (u, v) = if m.is_one() {
        (BigInt::one(), BigInt::from(2))
    } else {
        let no = || Error::NoResidue(triple.to_string());
        let inv = mod_inverse(&m2, &m).ok_or_else(no)?;
        let up = (&m1 * inv).mod_floor(&m);
        let um = (&m - &up).mod_floor(&m);
        let u = [up, um]
            .into_iter()
            .filter(|x| !x.is_zero())
            .min()
            .ok_or_else(no)?;
        let num: BigInt = &u * &u + 1;
        if !(&num % &m).is_zero() {
            return Err(no());
        }
        let v = num / &m;
        (u, v)
    };
    let three = BigInt::from(3);
    Ok(QuadraticForm {
        a: m.clone(),
        b: &three * &m - BigInt::from(2) * &u,
        c: v - three * u,
    })
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn f(p: u64, q: u64) -> FareyFraction {
        FareyFraction::new(p, q).unwrap()
    }

    #[test]
    fn tree_small_triples() {
        let nodes = markov_tree(3);
        let have: BTreeSet<[BigInt; 3]> = nodes.iter().map(|n| n.triple.sorted()).collect();
        for t in [[1, 2, 5], [1, 5, 13], [2, 5, 29], [1, 13, 34]] {
            assert!(have.contains(&t.map(BigInt::from)), "{t:?}");
        }
        assert_eq!(
            MarkovTriple::root().left_child(),
            MarkovTriple::new(1, 13, 5)
        );
    }

    #[test]
    fn markov_number_prefix() {
        let want = [
            1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985, 1325, 1597,
        ];
        let got = markov_numbers(7);
        assert_eq!(got[..want.len()].to_vec(), want.map(BigInt::from).to_vec());
    }

    #[test]
    fn tree_unique_to_depth_eight() {
        let nodes = markov_tree(8);
        assert_eq!(nodes.len(), (1 << 9) - 1);
        let set: BTreeSet<[BigInt; 3]> = nodes.iter().map(|n| n.triple.sorted()).collect();
        assert_eq!(set.len(), nodes.len());
        assert!(nodes.iter().all(|n| n.triple.is_solution()));
        assert!(nodes
            .iter()
            .all(|n| n.triple.mid > n.triple.left && n.triple.mid > n.triple.right));
    }

    #[test]
    fn frobenius_small() {
        assert_eq!(frobenius_index(&f(0, 1)), int(1));
        assert_eq!(frobenius_index(&f(1, 1)), int(2));
        assert_eq!(frobenius_index(&f(1, 2)), int(5));
        assert_eq!(frobenius_index(&f(2, 3)), int(29));
        assert_eq!(f(0, 1).mediant(&f(1, 1)), f(1, 2));
    }

    #[test]
    fn fraction_validation() {
        assert!(matches!(
            FareyFraction::new(2, 4),
            Err(Error::NotCoprime(_, _))
        ));
        assert!(FareyFraction::new(3, 2).is_err());
        assert!(FareyFraction::new(0, 0).is_err());
        assert_eq!("2/3".parse::<FareyFraction>().unwrap(), f(2, 3));
        assert!("2/6".parse::<FareyFraction>().is_err());
    }

    #[test]
    fn words() {
        assert_eq!(christoffel(&f(0, 1)).to_string(), "A");
        assert_eq!(christoffel(&f(1, 1)).to_string(), "B");
        assert_eq!(christoffel(&f(1, 2)).to_string(), "AB");
        assert_eq!(christoffel(&f(2, 3)).to_string(), "ABB");
        assert_eq!(cohn_word(&f(2, 3)).to_string(), "ABB");
        assert_eq!(cohn_word(&f(2, 5)).to_string(), "AABAB");
    }

    #[test]
    fn mu_domino_small() {
        assert_eq!(mu_domino(&f(1, 2)), int(5));
        assert_eq!(mu_domino(&f(0, 1)), int(1));
        assert_eq!(mu_domino(&f(2, 3)), int(29));
        assert_eq!(mu_domino(&f(1, 1)), int(2));
    }

    #[test]
    fn geometry_small() {
        assert_eq!(snake_geometry(&f(2, 3)).len(), 4);
        assert_eq!(snake_geometry(&f(0, 1)).len(), 0);
        assert_eq!(domino_geometry(&f(2, 3)).len(), 7);
        assert_eq!(matching_count_cells(&domino_geometry(&f(1, 2))), int(5));
        assert_eq!(matching_count_cells(&domino_geometry(&f(2, 3))), int(29));
    }

    #[test]
    fn domino_two_thirds_has_sixteen_vertices() {
        let mut pts = BTreeSet::new();
        for (x, y) in domino_geometry(&f(2, 3)) {
            for p in [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)] {
                pts.insert(p);
            }
        }
        assert_eq!(pts.len(), 16);
    }

    #[test]
    fn snake_rows_sum() {
        for t in FareyFraction::all_up_to(9) {
            assert_eq!(
                snake_geometry(&t).len() as u64,
                (t.p + t.q).saturating_sub(1)
            );
        }
    }

    #[test]
    fn cohn_roots_at_one() {
        let (l, m, r) = cohn_roots(&int(1));
        assert_eq!(l, cohn_a());
        assert_eq!(m, IntMatrix::from_rows(&[vec![7, 5], vec![11, 8]]).unwrap());
        assert_eq!(r, cohn_b());
        for a in -3..4 {
            let (l, m, r) = cohn_roots(&int(a));
            assert!(l.det().is_one() && m.det().is_one() && r.det().is_one());
            assert_eq!(&l * &r, m);
        }
    }

    #[test]
    fn cohn_tree_invariants() {
        for a in [-2, 0, 1, 3] {
            let nodes = cohn_tree(5, &int(a)).unwrap();
            for n in &nodes {
                assert_eq!(n.left.matrix() * n.right.matrix(), n.mid.matrix().clone());
            }
        }
        // a = 1 reproduces the Markov numbers
        for n in cohn_tree(5, &int(1)).unwrap() {
            assert_eq!(n.mid.markov_number(), &frobenius_index(&n.farey.mid));
        }
    }

    #[test]
    fn fricke_examples() {
        assert!(fricke_check(&cohn_a(), &cohn_b()).unwrap());
        assert_eq!(commutator_trace(&cohn_a(), &cohn_b()).unwrap(), int(-2));
        let i = IntMatrix::identity(2);
        assert!(fricke_check(&i, &i).unwrap());
        let bad = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(
            fricke_check(&bad, &i),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn forms() {
        let q = markov_form(&MarkovTriple::new(1, 2, 1)).unwrap();
        assert_eq!(
            (q.a.clone(), q.b.clone(), q.c.clone()),
            (int(2), int(4), int(-2))
        );
        assert_eq!(q.discriminant(), int(32));
        let q = markov_form(&MarkovTriple::new(1, 5, 2)).unwrap();
        assert_eq!(q.to_string(), "5x^2 + 11xy - 5y^2");
        assert_eq!(q.discriminant(), int(221));
        let q = markov_form(&MarkovTriple::new(1, 1, 1)).unwrap();
        assert_eq!(q.to_string(), "x^2 + xy - y^2");
        assert!(markov_form(&MarkovTriple::new(1, 2, 3)).is_err());
    }

    #[test]
    fn form_discriminants_in_tree() {
        for n in markov_tree(5) {
            let m = &n.triple.mid;
            let q = markov_form(&n.triple).unwrap();
            assert_eq!(q.discriminant(), int(9) * m * m - 4);
        }
    }

    #[test]
    fn words_and_domino_up_to_twelve() {
        for t in FareyFraction::all_up_to(12) {
            let ch = christoffel(&t);
            assert_eq!(cohn_word(&t), ch);
            if t != FareyFraction::zero() && t != FareyFraction::one() {
                assert!(ch.palindrome_factor().unwrap().is_palindrome(), "{t}");
            }
        }
        for t in FareyFraction::all_up_to(10) {
            assert_eq!(mu_domino(&t), frobenius_index(&t), "{t}");
        }
        for t in FareyFraction::all_up_to(5) {
            assert_eq!(
                matching_count_cells(&domino_geometry(&t)),
                mu_domino(&t),
                "{t}"
            );
        }
    }

    fn sl2_word() -> impl Strategy<Value = IntMatrix> {
        let gens = [
            IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap(),
            IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]).unwrap(),
            IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]).unwrap(),
            IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap(),
        ];
        proptest::collection::vec(0usize..4, 0..8)
            .prop_map(move |w| IntMatrix::product(2, w.iter().map(|&k| &gens[k])).unwrap())
    }

    proptest! {
        #[test]
        fn fricke_universal(a in sl2_word(), b in sl2_word()) {
            prop_assert!(fricke_check(&a, &b).unwrap());
        }
    }
}
