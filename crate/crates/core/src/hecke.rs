//! The Iwahori-Hecke algebra `H_n` over `Z[xi]` in the `T_w` basis.
//!
//! Multiplication only uses the length dichotomy
//! `T_w T_i = T_{w s_i}` if `l(w s_i) > l(w)`, else `T_{w s_i} + xi T_w`
//! (and its mirror image for left multiplication).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::{check_generator, conjugacy_class, Partition, Permutation};
use crate::error::{Error, Result};
use crate::poly::{IntPoly, Parity};

type Terms = BTreeMap<Permutation, IntPoly>;

/// Below this many elementary generator steps a product runs on one thread.
const PARALLEL_THRESHOLD: usize = 20_000;

/// A finitely supported `Z[xi]`-combination of basis elements `T_w`, `w` in `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    n: usize,
    terms: Terms,
}

#[derive(Clone, Copy)]
enum Side {
    Right,
    Left,
}

fn add_into(out: &mut Terms, w: Permutation, c: &IntPoly) {
    if c.is_zero() {
        return;
    }
    match out.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn apply_generator(terms: &Terms, i: usize, side: Side) -> Terms {
    let mut out = Terms::new();
    for (w, c) in terms {
        let (moved, descent) = match side {
            Side::Right => (w.mul_simple_right(i), w.has_right_descent(i)),
            Side::Left => (w.mul_simple_left(i), w.has_left_descent(i)),
        };
        add_into(&mut out, moved, c);
        if descent {
            add_into(&mut out, w.clone(), &c.shift(1));
        }
    }
    out
}

/// Reduced words of a factor's support, sharing common prefixes.
#[derive(Default)]
struct WordTrie {
    coeff: Option<IntPoly>,
    children: BTreeMap<usize, WordTrie>,
}

impl WordTrie {
    fn insert(&mut self, word: impl Iterator<Item = usize>, c: &IntPoly) {
        let mut node = self;
        for g in word {
            node = node.children.entry(g).or_default();
        }
        node.coeff = Some(c.clone());
    }

    fn nodes(&self) -> usize {
        1 + self.children.values().map(WordTrie::nodes).sum::<usize>()
    }

    /// Accumulates `sum over words u of (base acted on by u) * coeff(u)` into `acc`.
    fn fold(&self, base: &Terms, side: Side, acc: &mut Terms) {
        if let Some(c) = &self.coeff {
            for (w, v) in base {
                add_into(acc, w.clone(), &(v * c));
            }
        }
        for (&g, child) in &self.children {
            let next = apply_generator(base, g, side);
            child.fold(&next, side, acc);
        }
    }

    fn fold_parallel(&self, base: &Terms, side: Side) -> Terms {
        let mut acc = Terms::new();
        if let Some(c) = &self.coeff {
            for (w, v) in base {
                add_into(&mut acc, w.clone(), &(v * c));
            }
        }
        let children: Vec<_> = self.children.iter().collect();
        let partials: Vec<Terms> = children
            .par_iter()
            .map(|(&g, child)| {
                let mut part = Terms::new();
                child.fold(&apply_generator(base, g, side), side, &mut part);
                part
            })
            .collect();
        // Merge in generator order so the result never depends on scheduling.
        for part in partials {
            for (w, c) in part {
                add_into(&mut acc, w, &c);
            }
        }
        acc
    }
}

impl HeckeElt {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Terms::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        Self::t_basis(Permutation::identity(n))
    }

    /// The basis element `T_w`.
    pub fn t_basis(w: Permutation) -> Self {
        let n = w.n();
        let mut terms = Terms::new();
        terms.insert(w, IntPoly::one());
        Self { n, terms }
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, IntPoly)>,
    ) -> Result<Self> {
        let mut out = Terms::new();
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::InvalidInput(format!(
                    "term {w} does not belong to S_{n}"
                )));
            }
            add_into(&mut out, w, &c);
        }
        Ok(Self { n, terms: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, IntPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> IntPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidInput(format!(
                "elements of H_{} and H_{} cannot be combined",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &IntPoly::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &IntPoly::constant(-1))?;
        Ok(out)
    }

    /// `self += other * c`.
    pub fn add_scaled(&mut self, other: &Self, c: &IntPoly) -> Result<()> {
        self.check_rank(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (w, v) in &other.terms {
            add_into(&mut self.terms, w.clone(), &(v * c));
        }
        Ok(())
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        let mut out = Self::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        }
        out
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: &IntPoly) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| c.div_exact(d).map(|q| (w.clone(), q)))
            .collect::<Option<Terms>>()?;
        Some(Self { n: self.n, terms })
    }

    /// `self * T_i`.
    pub fn mul_gen_right(&self, i: usize) -> Result<Self> {
        check_generator(i, self.n)?;
        Ok(Self {
            n: self.n,
            terms: apply_generator(&self.terms, i, Side::Right),
        })
    }

    /// `T_i * self`.
    pub fn mul_gen_left(&self, i: usize) -> Result<Self> {
        check_generator(i, self.n)?;
        Ok(Self {
            n: self.n,
            terms: apply_generator(&self.terms, i, Side::Left),
        })
    }

    /// The product `self * other`. Each `T_w` of one factor is expanded along
    /// its canonical reduced word and folded into the other factor one
    /// generator at a time; the cheaper side is chosen automatically.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let mut right = WordTrie::default();
        for (w, c) in &other.terms {
            right.insert(w.reduced_word().into_iter(), c);
        }
        let mut left = WordTrie::default();
        for (w, c) in &self.terms {
            left.insert(w.reduced_word().into_iter().rev(), c);
        }
        let right_cost = self.num_terms() * right.nodes();
        let left_cost = other.num_terms() * left.nodes();
        let (trie, base, side, cost) = if right_cost <= left_cost {
            (right, &self.terms, Side::Right, right_cost)
        } else {
            (left, &other.terms, Side::Left, left_cost)
        };
        let terms = if cost >= PARALLEL_THRESHOLD {
            trie.fold_parallel(base, side)
        } else {
            let mut acc = Terms::new();
            trie.fold(base, side, &mut acc);
            acc
        };
        Ok(Self { n: self.n, terms })
    }

    /// Multiplies by `T_{i_1} ... T_{i_r}` on the right, generator by generator.
    pub fn mul_word_right(&self, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(self.clone(), |h, &i| h.mul_gen_right(i))
    }

    /// Whether `self` commutes with every `T_i`.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| {
            apply_generator(&self.terms, i, Side::Right)
                == apply_generator(&self.terms, i, Side::Left)
        })
    }

    /// Parity of `l(w) + j` over every term `xi^j T_w`. `Even` or `Odd` means
    /// the element is homogeneous in the Z/2-grading where `xi` and each
    /// `T_i` are odd.
    pub fn z2_parity(&self) -> Parity {
        self.terms.iter().fold(Parity::Zero, |p, (w, c)| {
            let l = w.length();
            c.terms()
                .fold(p, |p, (j, _)| p.join(Parity::of_degree(l + j)))
        })
    }

    /// The image in `Z S_n` under `xi -> 0`.
    pub fn specialize_group(&self) -> GroupElt {
        GroupElt {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.specialize_zero()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Terms sorted by `(length(w), w)`, the order used in serialization.
    pub fn canonical_terms(&self) -> Vec<(&Permutation, &IntPoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (w.length(), w, c)).collect();
        v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }
}

impl std::fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .canonical_terms()
            .into_iter()
            .map(|(w, c)| format!("({c})T{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    w: Permutation,
    c: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct EltRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for HeckeElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EltRepr {
            n: self.n,
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(w, c)| TermRepr {
                    w: w.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = EltRepr::deserialize(d)?;
        HeckeElt::from_terms(repr.n, repr.terms.into_iter().map(|t| (t.w, t.c)))
            .map_err(serde::de::Error::custom)
    }
}

/// The Jucys-Murphy element `L_i = sum_{k < i} T_{(k,i)}`; `L_1 = 0`.
pub fn jucys_murphy(i: usize, n: usize) -> Result<HeckeElt> {
    if i == 0 || i > n {
        return Err(Error::InvalidInput(format!(
            "Jucys-Murphy index {i} out of range for H_{n}"
        )));
    }
    HeckeElt::from_terms(
        n,
        (1..i)
            .map(|k| Permutation::transposition(k, i, n).map(|t| (t, IntPoly::one())))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Symmetric polynomials in the Jucys-Murphy elements of `H_n`, with memoized
/// powers `L_i^e`.
pub struct JucysMurphy {
    n: usize,
    elements: Vec<HeckeElt>,
    powers: Mutex<HashMap<(usize, usize), Arc<HeckeElt>>>,
}

impl JucysMurphy {
    pub fn new(n: usize) -> Result<Self> {
        let elements = (1..=n).map(|i| jucys_murphy(i, n)).collect::<Result<_>>()?;
        Ok(Self {
            n,
            elements,
            powers: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn element(&self, i: usize) -> &HeckeElt {
        &self.elements[i - 1]
    }

    /// `L_i^e`.
    pub fn power(&self, i: usize, e: usize) -> Result<Arc<HeckeElt>> {
        if e == 0 {
            return Ok(Arc::new(HeckeElt::unit(self.n)));
        }
        if let Some(p) = self.powers.lock().expect("poisoned").get(&(i, e)) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.power(i, e - 1)?.mul(self.element(i))?);
        self.powers
            .lock()
            .expect("poisoned")
            .insert((i, e), p.clone());
        Ok(p)
    }

    /// The monomial symmetric polynomial `m_lambda(L_1, ..., L_n)`; zero when
    /// `lambda` has more than `n` parts.
    pub fn m_sym(&self, lambda: &Partition) -> Result<HeckeElt> {
        let n = self.n;
        if lambda.len() > n {
            return Ok(HeckeElt::zero(n));
        }
        if lambda.is_empty() {
            return Ok(HeckeElt::unit(n));
        }
        // Multiset of exponents as (value, multiplicity), values distinct.
        let mut remaining: Vec<(usize, usize)> = Vec::new();
        for &p in lambda.parts() {
            match remaining.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => remaining.push((p, 1)),
            }
        }
        let mut total = HeckeElt::zero(n);
        // Position 1 carries L_1 = 0, so every surviving monomial lives on 2..=n.
        self.m_sym_rec(
            2,
            &mut remaining,
            lambda.len(),
            &HeckeElt::unit(n),
            &mut total,
        )?;
        Ok(total)
    }

    fn m_sym_rec(
        &self,
        pos: usize,
        remaining: &mut Vec<(usize, usize)>,
        left: usize,
        prefix: &HeckeElt,
        total: &mut HeckeElt,
    ) -> Result<()> {
        if left == 0 {
            return total.add_scaled(prefix, &IntPoly::one());
        }
        if pos > self.n || self.n + 1 - pos < left {
            return Ok(());
        }
        for k in 0..remaining.len() {
            let (e, m) = remaining[k];
            if m == 0 {
                continue;
            }
            remaining[k].1 -= 1;
            let next = prefix.mul(&*self.power(pos, e)?)?;
            if !next.is_zero() {
                self.m_sym_rec(pos + 1, remaining, left - 1, &next, total)?;
            }
            remaining[k].1 += 1;
        }
        // exponent zero at this position
        self.m_sym_rec(pos + 1, remaining, left, prefix, total)
    }

    /// The elementary symmetric polynomial `e_r(L_1, ..., L_n)`.
    pub fn e_sym(&self, r: usize) -> Result<HeckeElt> {
        if r > self.n {
            return Err(Error::InvalidInput(format!(
                "e_{r} is out of range for H_{}",
                self.n
            )));
        }
        self.m_sym(&Partition::column(r))
    }
}

pub fn m_sym(lambda: &Partition, n: usize) -> Result<HeckeElt> {
    JucysMurphy::new(n)?.m_sym(lambda)
}

pub fn e_sym(r: usize, n: usize) -> Result<HeckeElt> {
    JucysMurphy::new(n)?.e_sym(r)
}

/// An element of the integral group algebra `Z S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElt {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupElt {
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, BigInt)>,
    ) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::InvalidInput(format!(
                    "term {w} does not belong to S_{n}"
                )));
            }
            *out.entry(w).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(Self { n, terms: out })
    }

    pub fn identity(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(n), BigInt::from(1));
        Self { n, terms }
    }

    /// The class sum `c_lambda(n)`.
    pub fn class_sum(lambda: &Partition, n: usize) -> Result<Self> {
        Ok(Self {
            n,
            terms: conjugacy_class(lambda, n)?
                .into_iter()
                .map(|w| (w, BigInt::from(1)))
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Convolution product in `Z S_n`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidInput(format!(
                "elements of Z S_{} and Z S_{} cannot be multiplied",
                self.n, other.n
            )));
        }
        let mut out: BTreeMap<Permutation, BigInt> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                *out.entry(u.compose(v)?).or_insert_with(BigInt::zero) += a * b;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Self {
            n: self.n,
            terms: out,
        })
    }
}

pub fn group_mul(a: &GroupElt, b: &GroupElt) -> Result<GroupElt> {
    a.mul(b)
}
