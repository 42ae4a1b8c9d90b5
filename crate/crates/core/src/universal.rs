//! Rank-independent data: top-degree structure constants, the graded algebra
//! they define, the transition matrix from iterated one-row products, and
//! polynomial fits of structure constants in `n`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::center::{BasisCache, Center, CentralCoords, Report};
use crate::coxeter::{partitions_of, partitions_up_to, Partition};
use crate::error::{Error, Result};
use crate::poly::{determinant, interpolate_in_n, IntPoly, NPoly, Parity};

/// Top-degree part of a product: `nu -> k` with `|nu| = |lambda| + |mu|`.
pub type Graded = BTreeMap<Partition, IntPoly>;

/// Multi-rank engine. Holds one [`Center`] per rank, created on demand.
pub struct Universal {
    centers: Mutex<BTreeMap<usize, Arc<Center>>>,
    graded: Mutex<BTreeMap<(Partition, Partition), Arc<Graded>>>,
    cache: Option<BasisCache>,
    validate_cache: bool,
}

impl Default for Universal {
    fn default() -> Self {
        Self::new()
    }
}

impl Universal {
    pub fn new() -> Self {
        Self {
            centers: Mutex::new(BTreeMap::new()),
            graded: Mutex::new(BTreeMap::new()),
            cache: None,
            validate_cache: false,
        }
    }

    pub fn with_cache(mut self, cache: BasisCache, validate: bool) -> Self {
        self.cache = Some(cache);
        self.validate_cache = validate;
        self
    }

    pub fn center(&self, n: usize) -> Result<Arc<Center>> {
        if let Some(c) = self.centers.lock().expect("poisoned").get(&n) {
            return Ok(c.clone());
        }
        let mut c = Center::new(n)?;
        if let Some(cache) = &self.cache {
            c = c.with_cache(cache.clone(), self.validate_cache);
        }
        let c = Arc::new(c);
        Ok(self
            .centers
            .lock()
            .expect("poisoned")
            .entry(n)
            .or_insert(c)
            .clone())
    }

    /// Top-degree part of `G[lambda] G[mu]`, read at `n0 = max(2(|lambda|+|mu|), 1)`
    /// and confirmed at `n0 + 1`.
    pub fn graded_product(&self, lambda: &Partition, mu: &Partition) -> Result<Arc<Graded>> {
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(g) = self.graded.lock().expect("poisoned").get(&key) {
            return Ok(g.clone());
        }
        let s = lambda.size() + mu.size();
        let n0 = (2 * s).max(1);
        let top = |n: usize| -> Result<Graded> {
            let coords = self.center(n)?.structure_constants(&key.0, &key.1)?;
            Ok(coords
                .coords
                .into_iter()
                .filter(|(nu, _)| nu.size() == s)
                .collect())
        };
        let (a, b) = rayon::join(|| top(n0), || top(n0 + 1));
        let (a, b) = (a?, b?);
        if a != b {
            return Err(Error::InvariantViolation(format!(
                "top-degree part of G{lambda}G{mu} differs between n = {n0} and n = {}",
                n0 + 1
            )));
        }
        let a = Arc::new(a);
        self.graded.lock().expect("poisoned").insert(key, a.clone());
        Ok(a)
    }

    /// The coefficient of `G[nu]` in the top-degree part of `G[lambda] G[mu]`.
    pub fn universal_constant(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<IntPoly> {
        if nu.size() != lambda.size() + mu.size() {
            return Err(Error::InvalidInput(format!(
                "|nu| = {} must equal |lambda| + |mu| = {}",
                nu.size(),
                lambda.size() + mu.size()
            )));
        }
        Ok(self
            .graded_product(lambda, mu)?
            .get(nu)
            .cloned()
            .unwrap_or_default())
    }

    /// Multiplies a graded element by `G[mu]` in the graded algebra.
    pub fn graded_mul(&self, x: &Graded, mu: &Partition) -> Result<Graded> {
        let mut out = Graded::new();
        for (rho, c) in x {
            for (nu, k) in self.graded_product(rho, mu)?.iter() {
                let entry = out.entry(nu.clone()).or_default();
                *entry += &(c * k);
            }
        }
        out.retain(|_, k| !k.is_zero());
        Ok(out)
    }

    /// Top-degree products for all unordered pairs of nonempty partitions
    /// with `|lambda| + |mu| <= max_grade`.
    pub fn graded_table(&self, max_grade: usize) -> Result<GradedTable> {
        let parts: Vec<_> = partitions_up_to(max_grade)
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        let mut pairs = Vec::new();
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                if a.size() + b.size() <= max_grade {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        let entries = pairs
            .par_iter()
            .map(|(a, b)| {
                Ok((
                    (a.clone(), b.clone()),
                    self.graded_product(a, b)?.as_ref().clone(),
                ))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(GradedTable { max_grade, entries })
    }

    /// Checks `(G_a G_b) G_c = G_a (G_b G_c)` in the graded algebra for all
    /// triples of nonempty partitions with total size at most `max_grade`.
    pub fn check_associativity(&self, max_grade: usize) -> Result<Report> {
        let parts: Vec<_> = partitions_up_to(max_grade)
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        let mut report = Report::new("graded associativity");
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    if a.size() + b.size() + c.size() > max_grade {
                        continue;
                    }
                    report.checked += 1;
                    let ab = self.graded_product(a, b)?;
                    let left = self.graded_mul(&ab, c)?;
                    let bc = self.graded_product(b, c)?;
                    let mut right = Graded::new();
                    for (rho, k) in bc.iter() {
                        for (nu, j) in self.graded_product(a, rho)?.iter() {
                            *right.entry(nu.clone()).or_default() += &(k * j);
                        }
                    }
                    right.retain(|_, k| !k.is_zero());
                    if left != right {
                        report.violations.push(crate::center::Violation::new(
                            "associativity",
                            format!("(G{a}G{b})G{c} != G{a}(G{b}G{c})"),
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// The matrix `d_{lambda mu}` expressing the iterated graded products
    /// `G[(lambda_1)] ... G[(lambda_l)]` in the `G[mu]` with `|mu| = k`.
    pub fn d_matrix(&self, k: usize) -> Result<DMatrixReport> {
        if k == 0 {
            return Err(Error::InvalidInput("d-matrix needs k >= 1".into()));
        }
        let labels = partitions_of(k);
        let rows = labels
            .par_iter()
            .map(|lambda| {
                let mut x = Graded::new();
                x.insert(Partition::row(lambda.parts()[0]), IntPoly::one());
                for &part in &lambda.parts()[1..] {
                    x = self.graded_mul(&x, &Partition::row(part))?;
                }
                Ok(labels
                    .iter()
                    .map(|mu| x.get(mu).cloned().unwrap_or_default())
                    .collect())
            })
            .collect::<Result<Vec<Vec<IntPoly>>>>()?;
        let det = determinant(&rows)?;
        if det.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "d-matrix for k = {k} is singular"
            )));
        }
        let at_zero: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(IntPoly::specialize_zero).collect())
            .collect();
        let zero_triangularity = triangularity(&labels, |i, j| at_zero[i][j] != BigInt::from(0));
        let generic_triangularity = triangularity(&labels, |i, j| !rows[i][j].is_zero());
        Ok(DMatrixReport {
            k,
            labels,
            determinant: det,
            matrix: rows,
            at_zero,
            order: "reverse-lexicographic".into(),
            zero_triangularity,
            generic_triangularity,
        })
    }

    /// Fits `k_{lambda mu}^nu(n)` over the ranks in `lo..=hi` where all three
    /// class elements are nonzero.
    pub fn fit_in_n(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        lo: usize,
        hi: usize,
    ) -> Result<FitResult> {
        check_range(lo, hi)?;
        let ranks: Vec<usize> = (lo..=hi)
            .filter(|&n| lambda.fits(n) && mu.fits(n) && nu.fits(n))
            .collect();
        let samples = ranks
            .par_iter()
            .map(|&n| {
                Ok((
                    n as i64,
                    self.center(n)?.structure_constants(lambda, mu)?.get(nu),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let cap = 2 * (lambda.size() + mu.size()) + 2;
        FitResult::from_samples(FitKind::K, lambda, mu, Some(nu), samples, cap)
    }

    /// Fits `b_{lambda mu}(n)` over the ranks in `lo..=hi` where both
    /// `m_lambda` and `G[mu]` are nonzero.
    pub fn fit_b_in_n(
        &self,
        lambda: &Partition,
        mu: &Partition,
        lo: usize,
        hi: usize,
    ) -> Result<FitResult> {
        check_range(lo, hi)?;
        let ranks: Vec<usize> = (lo..=hi)
            .filter(|&n| lambda.len() <= n && mu.fits(n))
            .collect();
        let samples = ranks
            .par_iter()
            .map(|&n| Ok((n as i64, self.center(n)?.b_coeffs(lambda)?.get(mu))))
            .collect::<Result<Vec<_>>>()?;
        let cap = 2 * lambda.size() + 2;
        FitResult::from_samples(FitKind::B, lambda, mu, None, samples, cap)
    }

    /// Structure constants of one rank, for callers holding a [`Universal`].
    pub fn structure_constants(
        &self,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<CentralCoords> {
        self.center(n)?.structure_constants(lambda, mu)
    }
}

fn check_range(lo: usize, hi: usize) -> Result<()> {
    if lo == 0 || hi < lo + 2 {
        return Err(Error::InvalidInput(format!(
            "rank range {lo}..{hi} must start at 1 or more and span at least three ranks"
        )));
    }
    Ok(())
}

/// Top-degree products of a graded table.
#[derive(Clone, Debug)]
pub struct GradedTable {
    pub max_grade: usize,
    pub entries: BTreeMap<(Partition, Partition), Graded>,
}

impl GradedTable {
    /// Every top-degree constant must lie in `N[xi^2]`.
    pub fn check(&self) -> Report {
        let mut report = Report::new("graded positivity and evenness");
        for ((a, b), g) in &self.entries {
            for (nu, k) in g {
                report.checked += 1;
                if !k.is_nonnegative() || k.parity() != Parity::Even {
                    report.violations.push(crate::center::Violation::new(
                        "graded",
                        format!("top-degree constant of G{a}G{b} on G{nu} is {k}"),
                    ));
                }
            }
        }
        report
    }
}

/// Nonzero off-diagonal entries classified against dominance, for a matrix
/// with rows and columns in the canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct Triangularity {
    /// Every nonzero `d_{lambda mu}` has `mu` dominating or equal to `lambda`,
    /// and the diagonal is nonzero.
    pub dominance_triangular: bool,
    /// Lower-triangular with nonzero diagonal in the canonical order.
    pub lower_triangular: bool,
    pub diagonal_nonzero: bool,
    pub witnesses: Vec<String>,
}

fn triangularity(labels: &[Partition], nonzero: impl Fn(usize, usize) -> bool) -> Triangularity {
    let mut t = Triangularity {
        dominance_triangular: true,
        lower_triangular: true,
        diagonal_nonzero: true,
        witnesses: Vec::new(),
    };
    for (i, lambda) in labels.iter().enumerate() {
        if !nonzero(i, i) {
            t.diagonal_nonzero = false;
            t.dominance_triangular = false;
            t.lower_triangular = false;
            t.witnesses.push(format!("d[{lambda},{lambda}] = 0"));
        }
        for (j, mu) in labels.iter().enumerate() {
            if i == j || !nonzero(i, j) {
                continue;
            }
            if j > i {
                t.lower_triangular = false;
            }
            match mu.dominance_cmp(lambda) {
                Some(std::cmp::Ordering::Greater) => {}
                Some(_) => {
                    t.dominance_triangular = false;
                    t.witnesses.push(format!(
                        "d[{lambda},{mu}] != 0 with {lambda} dominating {mu}"
                    ));
                }
                None => {
                    t.dominance_triangular = false;
                    t.witnesses.push(format!(
                        "d[{lambda},{mu}] != 0 with {lambda}, {mu} incomparable"
                    ));
                }
            }
        }
    }
    t
}

#[derive(Clone, Debug, Serialize)]
pub struct DMatrixReport {
    pub k: usize,
    pub labels: Vec<Partition>,
    pub matrix: Vec<Vec<IntPoly>>,
    pub determinant: IntPoly,
    #[serde(serialize_with = "decimal_matrix")]
    pub at_zero: Vec<Vec<BigInt>>,
    /// The linear extension of dominance used to order rows and columns.
    pub order: String,
    pub zero_triangularity: Triangularity,
    pub generic_triangularity: Triangularity,
}

fn decimal_matrix<S: serde::Serializer>(
    m: &[Vec<BigInt>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FitKind {
    K,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitStatus {
    Validated,
    DegreeCapExceeded,
}

#[derive(Clone, Debug, Serialize)]
pub struct FitSample {
    pub n: i64,
    pub value: IntPoly,
}

/// A polynomial in `n` fitted through the lowest sampled ranks and checked
/// on every remaining one.
#[derive(Clone, Debug, Serialize)]
pub struct FitResult {
    pub kind: FitKind,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Option<Partition>,
    pub fit: NPoly,
    pub fit_string: String,
    pub degree: Option<usize>,
    pub degree_cap: usize,
    pub support: Vec<i64>,
    pub validated_at: Vec<i64>,
    pub status: FitStatus,
    /// The fit takes values in `Z[xi]` at every sampled rank.
    pub integer_valued: bool,
    /// The fit takes values in `N[xi]` at every sampled rank.
    pub nonnegative: bool,
    pub samples: Vec<FitSample>,
}

impl FitResult {
    fn from_samples(
        kind: FitKind,
        lambda: &Partition,
        mu: &Partition,
        nu: Option<&Partition>,
        samples: Vec<(i64, IntPoly)>,
        cap: usize,
    ) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "only {} rank(s) in range where the classes exist; need at least 2",
                samples.len()
            )));
        }
        let mut last = None;
        for d in 0..=cap {
            if d + 2 > samples.len() {
                break;
            }
            let (support, rest) = samples.split_at(d + 1);
            let fit = interpolate_in_n(support)?;
            let ok = rest
                .iter()
                .all(|(n, v)| fit.eval(*n).to_int_poly().as_ref() == Some(v));
            last = Some((fit, d));
            if ok {
                break;
            }
        }
        let (fit, d) = last.expect("at least one degree is tried");
        let support: Vec<i64> = samples[..=d].iter().map(|s| s.0).collect();
        let rest: Vec<i64> = samples[d + 1..].iter().map(|s| s.0).collect();
        let validated = rest
            .iter()
            .zip(&samples[d + 1..])
            .all(|(n, (_, v))| fit.eval(*n).to_int_poly().as_ref() == Some(v));
        let values: Vec<Option<IntPoly>> = samples
            .iter()
            .map(|(n, _)| fit.eval(*n).to_int_poly())
            .collect();
        let integer_valued = values.iter().all(Option::is_some);
        let nonnegative = values
            .iter()
            .all(|v| v.as_ref().is_some_and(IntPoly::is_nonnegative));
        Ok(Self {
            kind,
            lambda: lambda.clone(),
            mu: mu.clone(),
            nu: nu.cloned(),
            fit_string: fit.to_display_string(),
            degree: fit.degree(),
            fit,
            degree_cap: cap,
            support,
            validated_at: if validated { rest } else { Vec::new() },
            status: if validated {
                FitStatus::Validated
            } else {
                FitStatus::DegreeCapExceeded
            },
            integer_valued,
            nonnegative,
            samples: samples
                .into_iter()
                .map(|(n, value)| FitSample { n, value })
                .collect(),
        })
    }
}
