//! Symmetric group combinatorics: permutations in one-line notation, Coxeter
//! length, canonical reduced words, modified cycle types and conjugacy classes.
//!
//! Group law: `(u * v)(i) = u(v(i))`. Right multiplication by `s_i` swaps
//! positions `i, i+1` of the one-line word; left multiplication swaps the
//! values `i, i+1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Word = SmallVec<[u8; 16]>;

/// An element of `S_n` in one-line notation; position `i` (1-based) holds `w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Word,
}

impl Permutation {
    /// Builds a permutation from a 1-based one-line word, checking it is a bijection.
    pub fn new(word: &[usize]) -> Result<Self> {
        let n = word.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("rank {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &x in word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!(
                    "{word:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            word: word.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n as u8).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        check_generator(i, n)?;
        Ok(Self::identity(n).mul_simple_right(i))
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::InvalidInput(format!(
                "({a},{b}) is not a transposition in S_{n}"
            )));
        }
        let mut w = Self::identity(n);
        w.word.swap(a - 1, b - 1);
        Ok(w)
    }

    /// `s_{i_1} s_{i_2} ... s_{i_r}` as a left-to-right product.
    pub fn from_generators(gens: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in gens {
            check_generator(i, n)?;
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::InvalidInput(format!(
                "cannot compose elements of S_{} and S_{}",
                self.n(),
                other.n()
            )));
        }
        Ok(Self {
            word: other
                .word
                .iter()
                .map(|&v| self.word[v as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut word: Word = SmallVec::from_elem(0, self.n());
        for (k, &x) in self.word.iter().enumerate() {
            word[x as usize - 1] = (k + 1) as u8;
        }
        Self { word }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w * s_i`. Panics if `i` is not a generator index of `S_n`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.word.swap(i - 1, i);
        w
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Self {
            word: self
                .word
                .iter()
                .map(|&x| match x {
                    x if x == a => b,
                    x if x == b => a,
                    x => x,
                })
                .collect(),
        }
    }

    /// `s_i * w * s_i`.
    pub fn conjugate_by_simple(&self, i: usize) -> Self {
        self.mul_simple_left(i).mul_simple_right(i)
    }

    /// True iff `length(w * s_i) < length(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    /// True iff `length(s_i * w) < length(w)`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let (a, b) = (i as u8, i as u8 + 1);
        for &x in &self.word {
            if x == a {
                return false;
            }
            if x == b {
                return true;
            }
        }
        unreachable!("value {i} missing from permutation")
    }

    /// Canonical reduced word, smallest right descent first. The returned
    /// indices multiply left to right to `w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut collected = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            w = w.mul_simple_right(i);
            collected.push(i);
        }
        collected.reverse();
        collected
    }

    /// Cycle lengths, including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.word[k] as usize - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn modified_cycle_type(&self) -> Partition {
        Partition::from_sorted(
            self.cycle_type()
                .into_iter()
                .filter(|&l| l > 1)
                .map(|l| l - 1)
                .collect(),
        )
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(d)?;
        Permutation::new(&word).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::InvalidInput(format!(
            "generator index {i} out of range for S_{n}"
        )));
    }
    Ok(())
}

/// A partition: weakly decreasing positive parts. Used as a modified cycle type.
///
/// `Ord` is the canonical total order: size ascending, then reverse
/// lexicographic within a size, so `(2)` precedes `(1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|p| p[0] >= p[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(m)`; `(0)` is the empty partition.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether the class `C_lambda(n)` exists, i.e. `|lambda| + len(lambda) <= n`.
    pub fn fits(&self, n: usize) -> bool {
        self.size() + self.len() <= n
    }

    /// The ordinary cycle type in `S_n`: parts `lambda_i + 1` padded with ones.
    pub fn cycle_type(&self, n: usize) -> Result<Vec<usize>> {
        if !self.fits(n) {
            return Err(Error::EmptyClass {
                lambda: self.clone(),
                n,
            });
        }
        let mut ct: Vec<usize> = self.parts.iter().map(|p| p + 1).collect();
        ct.resize(n - self.size(), 1);
        Ok(ct)
    }

    /// Comma-separated parts as written on the command line; empty for the
    /// empty partition.
    pub fn to_cli_string(&self) -> String {
        self.parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Dominance comparison. `None` if the sizes differ or the partitions are
    /// incomparable.
    pub fn dominance_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let len = self.len().max(other.len());
        let (mut sa, mut sb) = (0, 0);
        let (mut ge, mut le) = (true, true);
        for k in 0..len {
            sa += self.parts.get(k).copied().unwrap_or(0);
            sb += other.parts.get(k).copied().unwrap_or(0);
            ge &= sa >= sb;
            le &= sa <= sb;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_cli_string())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_cli_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(serde::de::Error::custom(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Partitions of exactly `k`, reverse lexicographic.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size `<= k` in the canonical order.
pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(partitions_of).collect()
}

/// The modified cycle types of `S_n`, i.e. all `lambda` with `|lambda| + len(lambda) <= n`.
pub fn classes_of(n: usize) -> Vec<Partition> {
    partitions_up_to(n.saturating_sub(1))
        .into_iter()
        .filter(|p| p.fits(n))
        .collect()
}

/// `n! / prod_k k^{m_k} m_k!` for the cycle type corresponding to `lambda`.
pub fn class_size(lambda: &Partition, n: usize) -> Result<BigUint> {
    let ct = lambda.cycle_type(n)?;
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, k| acc * k);
    let mut denom = BigUint::one();
    let mut k = 0;
    while k < ct.len() {
        let len = ct[k];
        let mult = ct[k..].iter().take_while(|&&c| c == len).count();
        denom *= BigUint::from(len).pow(mult as u32) * fact(mult);
        k += mult;
    }
    Ok(fact(n) / denom)
}

/// A representative of `C_lambda(n)`: cycles `(a, a+1, ..., a+lambda_i)` on
/// consecutive points.
pub fn class_representative(lambda: &Partition, n: usize) -> Result<Permutation> {
    if !lambda.fits(n) {
        return Err(Error::EmptyClass {
            lambda: lambda.clone(),
            n,
        });
    }
    let mut word: Vec<usize> = (1..=n).collect();
    let mut start = 0;
    for &p in lambda.parts() {
        for (k, slot) in word.iter_mut().enumerate().skip(start).take(p) {
            *slot = k + 2;
        }
        word[start + p] = start + 1;
        start += p + 1;
    }
    Permutation::new(&word)
}

/// `C_lambda(n)`, by breadth-first closure of a representative under
/// conjugation by the simple transpositions.
pub fn conjugacy_class(lambda: &Partition, n: usize) -> Result<BTreeSet<Permutation>> {
    let rep = class_representative(lambda, n)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(rep.clone());
    queue.push_back(rep);
    while let Some(w) = queue.pop_front() {
        for i in 1..n {
            let c = w.conjugate_by_simple(i);
            if !seen.contains(&c) {
                seen.insert(c.clone());
                queue.push_back(c);
            }
        }
    }
    Ok(seen)
}

/// The elements of `C_lambda(n)` of minimal length.
pub fn minimal_length_elements(lambda: &Partition, n: usize) -> Result<BTreeSet<Permutation>> {
    let class = conjugacy_class(lambda, n)?;
    let min = class.iter().map(Permutation::length).min().unwrap_or(0);
    Ok(class.into_iter().filter(|w| w.length() == min).collect())
}

/// The lexicographically least minimal-length element of `C_lambda(n)`.
pub fn min_rep(lambda: &Partition, n: usize) -> Result<Permutation> {
    Ok(minimal_length_elements(lambda, n)?
        .into_iter()
        .next()
        .expect("conjugacy classes are nonempty"))
}

/// Per-rank class data: every class of `S_n` with its minimal-length elements.
#[derive(Debug, Clone)]
pub struct ClassTable {
    n: usize,
    classes: Vec<ClassInfo>,
}

#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub lambda: Partition,
    pub min_length: usize,
    /// Sorted lexicographically; the first entry is `min_rep`.
    pub minimal: Vec<Permutation>,
}

impl ClassInfo {
    pub fn min_rep(&self) -> &Permutation {
        &self.minimal[0]
    }
}

impl ClassTable {
    pub fn new(n: usize) -> Result<Self> {
        let classes = classes_of(n)
            .into_iter()
            .map(|lambda| {
                let minimal: Vec<_> = minimal_length_elements(&lambda, n)?.into_iter().collect();
                Ok(ClassInfo {
                    min_length: minimal[0].length(),
                    minimal,
                    lambda,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All classes in canonical order.
    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn get(&self, lambda: &Partition) -> Option<&ClassInfo> {
        self.classes
            .binary_search_by(|c| c.lambda.cmp(lambda))
            .ok()
            .map(|k| &self.classes[k])
    }

    pub fn min_rep(&self, lambda: &Partition) -> Result<&Permutation> {
        self.get(lambda)
            .map(ClassInfo::min_rep)
            .ok_or_else(|| Error::EmptyClass {
                lambda: lambda.clone(),
                n: self.n,
            })
    }
}
