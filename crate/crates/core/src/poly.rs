//! Exact polynomial arithmetic: `Z[xi]` with big-integer coefficients,
//! `Q[xi]`, polynomials in the rank `n` with `Q[xi]` coefficients, fraction-free
//! linear solving and exact interpolation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result, SolveError};

/// An element of `Z[xi]`. Coefficient `j` multiplies `xi^j`; never has trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Zero,
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// Parity of an exponent, as a pure polynomial would have it.
    pub fn of_degree(d: usize) -> Self {
        if d.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Combines the parities of two summands.
    pub fn join(self, other: Self) -> Self {
        match (self, other) {
            (Parity::Zero, p) | (p, Parity::Zero) => p,
            (a, b) if a == b => a,
            _ => Parity::Mixed,
        }
    }

    /// Parity of a product of parity-pure factors.
    pub fn times(self, other: Self) -> Self {
        match (self, other) {
            (Parity::Zero, _) | (_, Parity::Zero) => Parity::Zero,
            (Parity::Mixed, _) | (_, Parity::Mixed) => Parity::Mixed,
            (a, b) if a == b => Parity::Even,
            _ => Parity::Odd,
        }
    }
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `xi`.
    pub fn xi() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self * xi^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Value at `xi = 0`.
    pub fn specialize_zero(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn parity(&self) -> Parity {
        self.terms()
            .fold(Parity::Zero, |p, (j, _)| p.join(Parity::of_degree(j)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / d` if `d` divides `self` in `Z[xi]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lead = d.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().checked_sub(dd)?;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &quot * c;
            }
            q[k] = quot;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_coeffs(out))
    }

    /// Compact rendering, descending powers, `x` for `xi`: `x^2+3`, `2x`, `-x+1`.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (j, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            match j {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if !a.is_one() {
                        out.push_str(&a.to_string());
                    }
                    out.push('x');
                    if j > 1 {
                        out.push_str(&format!("^{j}"));
                    }
                }
            }
        }
        out
    }

    /// Ascending rendering used in CSV exports: `3 + 2*x + x^2`.
    pub fn to_ascending_string(&self) -> String {
        render_ascending(self.terms().map(|(j, c)| (j, BigRational::from(c.clone()))))
    }
}

fn render_ascending(terms: impl Iterator<Item = (usize, BigRational)>) -> String {
    let mut out = String::new();
    for (j, c) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let coef = if a.is_integer() {
            a.to_integer().to_string()
        } else {
            format!("({}/{})", a.numer(), a.denom())
        };
        match j {
            0 => out.push_str(&coef),
            _ => {
                if !a.is_one() {
                    out.push_str(&coef);
                    out.push('*');
                }
                out.push('x');
                if j > 1 {
                    out.push_str(&format!("^{j}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// An element of `Q[xi]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The polynomial itself if every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }

    /// Ascending rendering: `(1/2) + 3*x^2`.
    pub fn to_ascending_string(&self) -> String {
        render_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone())),
        )
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        Self {
            coeffs: p.coeffs.iter().cloned().map(BigRational::from).collect(),
        }
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascending_string())
    }
}

/// Serialized as `[numerators, denominators]`, both ascending arrays of decimal strings.
impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nums: Vec<String> = self.coeffs.iter().map(|c| c.numer().to_string()).collect();
        let dens: Vec<String> = self.coeffs.iter().map(|c| c.denom().to_string()).collect();
        (nums, dens).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (nums, dens) = <(Vec<String>, Vec<String>)>::deserialize(d)?;
        if nums.len() != dens.len() {
            return Err(serde::de::Error::custom(
                "numerator/denominator length mismatch",
            ));
        }
        let parse = |s: &String| s.parse::<BigInt>().map_err(serde::de::Error::custom);
        let mut coeffs = Vec::with_capacity(nums.len());
        for (a, b) in nums.iter().zip(&dens) {
            let b = parse(b)?;
            if b.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(parse(a)?, b));
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// A polynomial in the rank `n` with `Q[xi]` coefficients; index `d` multiplies `n^d`.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NPoly {
    coeffs: Vec<RatPoly>,
}

impl NPoly {
    pub fn from_coeffs(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(RatPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: i64) -> RatPoly {
        let n = BigRational::from(BigInt::from(n));
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(&n);
            acc += c;
        }
        acc
    }

    /// Human-readable rendering, descending in `n`: `(1/2)*n^2 - (1/2)*n`, `x*n - x`.
    pub fn to_display_string(&self) -> String {
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let nz: Vec<_> = c
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            let single_neg = nz.len() == 1 && nz[0].1.is_negative();
            if out.is_empty() {
                if single_neg {
                    out.push('-');
                }
            } else {
                out.push_str(if single_neg { " - " } else { " + " });
            }
            let body = if nz.len() == 1 {
                let (j, x) = nz[0];
                RatPoly::from_coeffs({
                    let mut v = vec![BigRational::zero(); j + 1];
                    v[j] = x.abs();
                    v
                })
                .to_ascending_string()
            } else {
                format!("({})", c.to_ascending_string())
            };
            let npow = match d {
                0 => String::new(),
                1 => "n".into(),
                _ => format!("n^{d}"),
            };
            match (d, body.as_str()) {
                (0, _) => out.push_str(&body),
                (_, "1") => out.push_str(&npow),
                _ => out.push_str(&format!("{body}*{npow}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

/// The unique polynomial in `n` of degree below the number of points that
/// passes through every `(n, value)`; Lagrange interpolation per `xi`-coefficient.
pub fn interpolate_in_n(points: &[(i64, IntPoly)]) -> Result<NPoly> {
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "interpolation needs at least one point".into(),
        ));
    }
    for (k, (a, _)) in points.iter().enumerate() {
        if points[..k].iter().any(|(b, _)| a == b) {
            return Err(Error::InvalidInput(format!(
                "duplicate interpolation node n = {a}"
            )));
        }
    }
    let m = points.len();
    let mut out = vec![RatPoly::zero(); m];
    for (j, (nj, vj)) in points.iter().enumerate() {
        // Lagrange basis polynomial l_j(n) as rational coefficients in n.
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for (k, (nk, _)) in points.iter().enumerate() {
            if k == j {
                continue;
            }
            let root = BigRational::from(BigInt::from(*nk));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &root;
            }
            basis = next;
            denom *= BigInt::from(nj - nk);
        }
        let value = RatPoly::from(vj);
        let inv = BigRational::new(BigInt::one(), denom);
        for (d, c) in basis.iter().enumerate() {
            out[d] += &value.scale(&(c * &inv));
        }
    }
    Ok(NPoly::from_coeffs(out))
}

/// A rational function `num / den` over `Z[xi]`.
#[derive(Clone, Debug)]
pub struct PolyFraction {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl PolyFraction {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if let Some(q) = num.div_exact(&den) {
            return Self {
                num: q,
                den: IntPoly::one(),
            };
        }
        let g = num.content().gcd(&den.content());
        let (mut num, mut den) = (
            num.div_exact_scalar(&g).expect("content divides"),
            den.div_exact_scalar(&g).expect("content divides"),
        );
        if den.leading().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    pub fn as_poly(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }
}

impl PartialEq for PolyFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Solution of `A x = b` in common-denominator form: `x_j = numerators[j] / denominator`.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub numerators: Vec<IntPoly>,
    pub denominator: IntPoly,
    pub rank: usize,
    /// Columns used as pivots; all other unknowns are set to zero.
    pub pivot_columns: Vec<usize>,
}

impl LinearSolution {
    pub fn fractions(&self) -> Vec<PolyFraction> {
        self.numerators
            .iter()
            .map(|n| PolyFraction::new(n.clone(), self.denominator.clone()))
            .collect()
    }

    /// The solution itself when it lies in `Z[xi]`.
    pub fn exact(&self) -> Option<Vec<IntPoly>> {
        self.numerators
            .iter()
            .map(|n| n.div_exact(&self.denominator))
            .collect()
    }
}

fn shape_of(a: &[Vec<IntPoly>]) -> std::result::Result<(usize, usize), SolveError> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(SolveError::Shape("ragged matrix".into()));
    }
    Ok((a.len(), cols))
}

/// Fraction-free (Bareiss) row reduction of `m` in place, choosing pivots
/// column by column among the first `pivot_limit` columns. Returns the pivot
/// columns and the number of row swaps.
fn bareiss(m: &mut [Vec<IntPoly>], pivot_limit: usize) -> (Vec<usize>, usize) {
    let rows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = IntPoly::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..pivot_limit {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..width {
                let v = &(pivot * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[c] = IntPoly::zero();
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

/// Solves `A x = b` exactly over the fraction field `Q(xi)` by fraction-free
/// elimination. Square and overdetermined systems need full column rank;
/// underdetermined systems need full row rank and get zero for every
/// non-pivot unknown. Inconsistent systems are rejected.
pub fn solve_linear(
    a: &[Vec<IntPoly>],
    b: &[IntPoly],
) -> std::result::Result<LinearSolution, SolveError> {
    let (rows, cols) = shape_of(a)?;
    if b.len() != rows {
        return Err(SolveError::Shape(format!(
            "{rows} equations but {} right-hand sides",
            b.len()
        )));
    }
    let mut m: Vec<Vec<IntPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (pivots, _) = bareiss(&mut m, cols);
    let rank = pivots.len();
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Err(SolveError::Inconsistent { rank });
    }
    let needed = rows.min(cols);
    if rank < needed {
        return Err(SolveError::RankDeficient { rank, needed });
    }
    if rank == 0 {
        return Ok(LinearSolution {
            numerators: vec![IntPoly::zero(); cols],
            denominator: IntPoly::one(),
            rank,
            pivot_columns: pivots,
        });
    }
    let det = m[rank - 1][pivots[rank - 1]].clone();
    let mut y = vec![IntPoly::zero(); cols];
    for i in (0..rank).rev() {
        let c = pivots[i];
        let mut s = &det * &m[i][cols];
        for &pc in &pivots[i + 1..] {
            s -= &(&m[i][pc] * &y[pc]);
        }
        y[c] = s
            .div_exact(&m[i][c])
            .expect("Cramer numerators lie in Z[xi]");
    }
    let (numerators, denominator) = if det.leading().is_some_and(Signed::is_negative) {
        (y.iter().map(|v| -v).collect(), -&det)
    } else {
        (y, det)
    };
    Ok(LinearSolution {
        numerators,
        denominator,
        rank,
        pivot_columns: pivots,
    })
}

/// Determinant of a square matrix over `Z[xi]`.
pub fn determinant(a: &[Vec<IntPoly>]) -> std::result::Result<IntPoly, SolveError> {
    let (rows, cols) = shape_of(a)?;
    if rows != cols {
        return Err(SolveError::Shape(format!(
            "{rows}x{cols} matrix is not square"
        )));
    }
    if rows == 0 {
        return Ok(IntPoly::one());
    }
    let mut m = a.to_vec();
    let (pivots, swaps) = bareiss(&mut m, cols);
    if pivots.len() < rows {
        return Ok(IntPoly::zero());
    }
    let det = m[rows - 1][cols - 1].clone();
    Ok(if swaps % 2 == 1 { -&det } else { det })
}
