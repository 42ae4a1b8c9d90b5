//! The center `Z(H_n)`: the class elements `G[lambda](n)`, expansion of central
//! elements in that basis, structure constants and their verification.
//!
//! `G[lambda](n)` is pinned down by two properties among central elements:
//! it specializes at `xi = 0` to the class sum of `C_lambda(n)`, and its
//! coefficient on every minimal-length element of every class is `1` on its
//! own class and `0` elsewhere. It is constructed by solving for a
//! combination of the monomial symmetric polynomials `m_mu` in the
//! Jucys-Murphy elements that has the right coefficients on the minimal
//! class representatives, then checked against both properties in full.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coxeter::{partitions_up_to, ClassTable, Partition};
use crate::error::{Error, Result};
use crate::hecke::{GroupElt, HeckeElt, JucysMurphy};
use crate::poly::{solve_linear, IntPoly, Parity};

/// A central element written in the class-element basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CentralCoords {
    pub n: usize,
    pub coords: BTreeMap<Partition, IntPoly>,
}

impl CentralCoords {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            coords: BTreeMap::new(),
        }
    }

    pub fn get(&self, nu: &Partition) -> IntPoly {
        self.coords.get(nu).cloned().unwrap_or_default()
    }

    pub fn specialize_zero(&self) -> BTreeMap<Partition, BigInt> {
        self.coords
            .iter()
            .map(|(nu, k)| (nu.clone(), k.specialize_zero()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Rendering with `x` for `xi` and `G[..]` for class
    /// elements, largest classes first: `(x^2+3)*G[2] + 2x*G[1] + 3*G[]`.
    pub fn to_pretty_string(&self) -> String {
        if self.coords.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.coords.iter().collect();
        terms.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| a.0.cmp(b.0)));
        terms
            .into_iter()
            .map(|(nu, k)| {
                let g = format!("G[{}]", nu.to_cli_string());
                if k.is_one() {
                    g
                } else if k.terms().count() > 1 {
                    format!("({k})*{g}")
                } else {
                    format!("{k}*{g}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    nu: Partition,
    k: IntPoly,
}

impl Serialize for CentralCoords {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|(nu, k)| CoordRepr {
            nu: nu.clone(),
            k: k.clone(),
        }))
    }
}

/// The class elements `G[lambda](n)` for every class with `|lambda| <= up_to`.
#[derive(Clone, Debug)]
pub struct GammaBasis {
    n: usize,
    up_to: usize,
    classes: Arc<ClassTable>,
    gamma: BTreeMap<Partition, Arc<HeckeElt>>,
}

impl GammaBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn up_to(&self) -> usize {
        self.up_to
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn elements(&self) -> impl Iterator<Item = (&Partition, &HeckeElt)> {
        self.gamma.iter().map(|(k, v)| (k, v.as_ref()))
    }

    pub fn get(&self, lambda: &Partition) -> Option<&HeckeElt> {
        self.gamma.get(lambda).map(Arc::as_ref)
    }

    /// Checks every stored element against centrality, the `xi = 0`
    /// specialization, the minimal-length characterization over all minimal
    /// elements of all classes of `S_n`, and Z/2-homogeneity. Returns the
    /// violations found.
    pub fn validate(&self) -> Vec<Violation> {
        self.gamma
            .par_iter()
            .flat_map_iter(|(lambda, g)| validate_gamma(lambda, g, &self.classes))
            .collect::<Vec<_>>()
    }

    fn to_repr(&self) -> BasisRepr {
        BasisRepr {
            format: 1,
            n: self.n,
            up_to: self.up_to,
            gamma: self
                .gamma
                .iter()
                .map(|(lambda, g)| GammaRepr {
                    lambda: lambda.clone(),
                    element: g.as_ref().clone(),
                })
                .collect(),
        }
    }
}

fn validate_gamma(lambda: &Partition, g: &HeckeElt, classes: &ClassTable) -> Vec<Violation> {
    let mut out = Vec::new();
    let label = format!("G{lambda}({})", classes.n());
    if !g.is_central() {
        out.push(Violation::new(
            "centrality",
            format!("{label} is not central"),
        ));
    }
    match GroupElt::class_sum(lambda, classes.n()) {
        Ok(cs) if cs == g.specialize_group() => {}
        Ok(_) => out.push(Violation::new(
            "specialization",
            format!("{label} does not specialize to the class sum at xi=0"),
        )),
        Err(e) => out.push(Violation::new("specialization", format!("{label}: {e}"))),
    }
    for class in classes.classes() {
        let expected = if &class.lambda == lambda {
            IntPoly::one()
        } else {
            IntPoly::zero()
        };
        for w in &class.minimal {
            let c = g.coeff(w);
            if c != expected {
                out.push(Violation::new(
                    "characterization",
                    format!(
                        "{label} has coefficient {c} on minimal element {w} of class {}",
                        class.lambda
                    ),
                ));
            }
        }
    }
    let parity = g.z2_parity();
    if parity != Parity::of_degree(lambda.size()) {
        out.push(Violation::new(
            "z2-grading",
            format!(
                "{label} has Z/2 parity {parity:?}, expected {:?}",
                Parity::of_degree(lambda.size())
            ),
        ));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GammaRepr {
    lambda: Partition,
    element: HeckeElt,
}

#[derive(Serialize, Deserialize)]
struct BasisRepr {
    format: u32,
    n: usize,
    up_to: usize,
    gamma: Vec<GammaRepr>,
}

/// On-disk store of class-element bases keyed by `(n, up_to)`.
#[derive(Clone, Debug)]
pub struct BasisCache {
    dir: PathBuf,
}

impl BasisCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize, up_to: usize) -> PathBuf {
        self.dir.join(format!("gamma-n{n}-k{up_to}.json"))
    }

    /// Loads and fully validates a cached basis, if one exists.
    pub fn load(&self, classes: &Arc<ClassTable>, up_to: usize) -> Result<Option<GammaBasis>> {
        let n = classes.n();
        let path = self.path(n, up_to);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(Error::Io { path, source }),
        };
        let repr: BasisRepr = serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.clone(),
            source,
        })?;
        if repr.format != 1 || repr.n != n || repr.up_to != up_to {
            return Err(Error::Format(format!(
                "{}: expected format 1 basis for n={n}, up_to={up_to}",
                path.display()
            )));
        }
        let basis = GammaBasis {
            n,
            up_to,
            classes: classes.clone(),
            gamma: repr
                .gamma
                .into_iter()
                .map(|g| (g.lambda, Arc::new(g.element)))
                .collect(),
        };
        let expected: Vec<_> = basis_partitions(n, up_to);
        if basis.gamma.keys().cloned().collect::<Vec<_>>() != expected {
            return Err(Error::Format(format!(
                "{}: wrong set of classes",
                path.display()
            )));
        }
        if let Some(v) = basis.validate().first() {
            return Err(Error::InvariantViolation(format!(
                "cached basis {} fails validation: {v}",
                path.display()
            )));
        }
        Ok(Some(basis))
    }

    /// Writes the basis atomically (temporary file, then rename).
    pub fn store(&self, basis: &GammaBasis) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| Error::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let path = self.path(basis.n, basis.up_to);
        let tmp = self.dir.join(format!(
            ".gamma-n{}-k{}.{}.tmp",
            basis.n,
            basis.up_to,
            std::process::id()
        ));
        let mut text = serde_json::to_string(&basis.to_repr()).map_err(|source| Error::Json {
            path: path.clone(),
            source,
        })?;
        text.push('\n');
        let mut f = fs::File::create(&tmp).map_err(io(&tmp))?;
        f.write_all(text.as_bytes()).map_err(io(&tmp))?;
        f.sync_all().map_err(io(&tmp))?;
        fs::rename(&tmp, &path).map_err(io(&path))?;
        Ok(())
    }
}

fn basis_partitions(n: usize, up_to: usize) -> Vec<Partition> {
    partitions_up_to(up_to)
        .into_iter()
        .filter(|p| p.fits(n))
        .collect()
}

/// A violated property with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub witness: String,
}

impl Violation {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.check, self.witness)
    }
}

/// Outcome of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, check: &str, witness: String) {
        self.violations.push(Violation::new(check, witness));
    }
}

/// Per-rank engine: class data, memoized `m_mu(n)` and class elements, and an
/// optional disk cache. Safe to share across threads.
pub struct Center {
    n: usize,
    classes: Arc<ClassTable>,
    jm: JucysMurphy,
    monomials: Mutex<BTreeMap<Partition, Arc<HeckeElt>>>,
    gamma: RwLock<BTreeMap<Partition, Arc<HeckeElt>>>,
    cache: Option<BasisCache>,
    validate_cache: bool,
}

impl Center {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("rank n must be at least 1".into()));
        }
        Ok(Self {
            n,
            classes: Arc::new(ClassTable::new(n)?),
            jm: JucysMurphy::new(n)?,
            monomials: Mutex::new(BTreeMap::new()),
            gamma: RwLock::new(BTreeMap::new()),
            cache: None,
            validate_cache: false,
        })
    }

    /// Uses `cache` for bases. With `validate`, a cached basis is recomputed
    /// and compared instead of trusted.
    pub fn with_cache(mut self, cache: BasisCache, validate: bool) -> Self {
        self.cache = Some(cache);
        self.validate_cache = validate;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn jucys_murphy(&self) -> &JucysMurphy {
        &self.jm
    }

    /// Largest class size present in `S_n`.
    pub fn max_degree(&self) -> usize {
        self.n - 1
    }

    pub fn m_sym(&self, lambda: &Partition) -> Result<Arc<HeckeElt>> {
        if let Some(m) = self.monomials.lock().expect("poisoned").get(lambda) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.jm.m_sym(lambda)?);
        self.monomials
            .lock()
            .expect("poisoned")
            .insert(lambda.clone(), m.clone());
        Ok(m)
    }

    /// `G[lambda](n)`; the zero element when `|lambda| + len(lambda) > n`.
    pub fn gamma(&self, lambda: &Partition) -> Result<Arc<HeckeElt>> {
        if !lambda.fits(self.n) {
            return Ok(Arc::new(HeckeElt::zero(self.n)));
        }
        if let Some(g) = self.gamma.read().expect("poisoned").get(lambda) {
            return Ok(g.clone());
        }
        Ok(self.basis(lambda.size())?.gamma[lambda].clone())
    }

    fn construct(&self, lambda: &Partition) -> Result<HeckeElt> {
        let err = |reason: String| Error::Construction {
            lambda: lambda.clone(),
            n: self.n,
            reason,
        };
        let size = lambda.size();
        let rows: Vec<_> = self
            .classes
            .classes()
            .iter()
            .filter(|c| c.lambda.size() <= size)
            .collect();
        // Candidates: every m_mu with |mu| <= |lambda|, those whose class exists first.
        let mut candidates = partitions_up_to(size);
        candidates.sort_by_key(|mu| !mu.fits(self.n));
        let monomials = candidates
            .iter()
            .map(|mu| self.m_sym(mu))
            .collect::<Result<Vec<_>>>()?;
        let matrix: Vec<Vec<IntPoly>> = rows
            .iter()
            .map(|c| monomials.iter().map(|m| m.coeff(c.min_rep())).collect())
            .collect();
        let rhs: Vec<IntPoly> = rows
            .iter()
            .map(|c| {
                if &c.lambda == lambda {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            })
            .collect();
        let sol = solve_linear(&matrix, &rhs).map_err(|e| err(e.to_string()))?;
        let mut scaled = HeckeElt::zero(self.n);
        for (m, c) in monomials.iter().zip(&sol.numerators) {
            scaled.add_scaled(m, c)?;
        }
        scaled
            .div_exact(&sol.denominator)
            .ok_or_else(|| err(format!("denominator {} does not clear", sol.denominator)))
    }

    /// The basis of class elements with `|lambda| <= up_to` (capped at `n - 1`),
    /// constructed and validated on first use.
    pub fn basis(&self, up_to: usize) -> Result<GammaBasis> {
        let up_to = up_to.min(self.max_degree());
        let wanted = basis_partitions(self.n, up_to);
        {
            let gamma = self.gamma.read().expect("poisoned");
            if wanted.iter().all(|l| gamma.contains_key(l)) {
                return Ok(self.assemble(&gamma, up_to, &wanted));
            }
        }
        if let Some(cache) = &self.cache {
            if let Some(cached) = cache.load(&self.classes, up_to)? {
                if self.validate_cache {
                    let fresh = self.build(up_to, &wanted)?;
                    if let Some(lambda) =
                        wanted.iter().find(|l| fresh.gamma[*l] != cached.gamma[*l])
                    {
                        return Err(Error::InvariantViolation(format!(
                            "cached G{lambda}({}) in {} disagrees with recomputation",
                            self.n,
                            cache.path(self.n, up_to).display()
                        )));
                    }
                }
                self.gamma
                    .write()
                    .expect("poisoned")
                    .extend(cached.gamma.iter().map(|(k, v)| (k.clone(), v.clone())));
                return Ok(cached);
            }
        }
        let basis = self.build(up_to, &wanted)?;
        if let Some(cache) = &self.cache {
            cache.store(&basis)?;
        }
        Ok(basis)
    }

    fn build(&self, up_to: usize, wanted: &[Partition]) -> Result<GammaBasis> {
        let missing: Vec<Partition> = {
            let gamma = self.gamma.read().expect("poisoned");
            wanted
                .iter()
                .filter(|l| !gamma.contains_key(l))
                .cloned()
                .collect()
        };
        partitions_up_to(up_to)
            .par_iter()
            .try_for_each(|mu| self.m_sym(mu).map(drop))?;
        let built = missing
            .par_iter()
            .map(|lambda| {
                self.construct(lambda)
                    .map(|g| (lambda.clone(), Arc::new(g)))
            })
            .collect::<Result<Vec<_>>>()?;
        for (lambda, g) in &built {
            if let Some(v) = validate_gamma(lambda, g, &self.classes).first() {
                return Err(Error::Construction {
                    lambda: lambda.clone(),
                    n: self.n,
                    reason: v.to_string(),
                });
            }
        }
        let mut gamma = self.gamma.write().expect("poisoned");
        gamma.extend(built);
        Ok(self.assemble(&gamma, up_to, wanted))
    }

    fn assemble(
        &self,
        gamma: &BTreeMap<Partition, Arc<HeckeElt>>,
        up_to: usize,
        wanted: &[Partition],
    ) -> GammaBasis {
        GammaBasis {
            n: self.n,
            up_to,
            classes: self.classes.clone(),
            gamma: wanted
                .iter()
                .map(|l| (l.clone(), gamma[l].clone()))
                .collect(),
        }
    }

    /// `G[lambda](n) G[mu](n)` in the class-element basis.
    pub fn structure_constants(&self, lambda: &Partition, mu: &Partition) -> Result<CentralCoords> {
        if !lambda.fits(self.n) || !mu.fits(self.n) {
            return Ok(CentralCoords::empty(self.n));
        }
        let basis = self.basis(lambda.size() + mu.size())?;
        let product = self.gamma(lambda)?.mul(&*self.gamma(mu)?)?;
        expand_in_gamma(&product, &basis)
    }

    /// The coefficients `b_{lambda mu}(n)` of `m_lambda(n)` in the class-element basis.
    pub fn b_coeffs(&self, lambda: &Partition) -> Result<CentralCoords> {
        let m = self.m_sym(lambda)?;
        let basis = self.basis(lambda.size())?;
        let coords = expand_in_gamma(&m, &basis)?;
        if let Some(mu) = coords.coords.keys().find(|mu| mu.size() > lambda.size()) {
            return Err(Error::InvariantViolation(format!(
                "m{lambda}({}) has a component on G{mu}",
                self.n
            )));
        }
        Ok(coords)
    }

    /// The products `c_lambda c_mu` of class sums in `Z S_n`, read off per class.
    pub fn class_sum_oracle(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<BTreeMap<Partition, BigInt>> {
        let a = GroupElt::class_sum(lambda, self.n)?;
        let b = GroupElt::class_sum(mu, self.n)?;
        let prod = a.mul(&b)?;
        Ok(self
            .classes
            .classes()
            .iter()
            .map(|c| (c.lambda.clone(), prod.coeff(c.min_rep())))
            .filter(|(_, k)| !k.is_zero())
            .collect())
    }
}

/// Coordinates of a central element: the coefficient of `G[nu]` is the
/// coefficient of the minimal representative of `C_nu(n)`. The reconstruction
/// is checked exactly against the input.
pub fn expand_in_gamma(h: &HeckeElt, basis: &GammaBasis) -> Result<CentralCoords> {
    if h.n() != basis.n {
        return Err(Error::InvalidInput(format!(
            "element of H_{} expanded in a basis of Z(H_{})",
            h.n(),
            basis.n
        )));
    }
    if !h.is_central() {
        return Err(Error::InvalidInput("element is not central".into()));
    }
    let mut coords = BTreeMap::new();
    let mut residual = h.clone();
    for (nu, g) in &basis.gamma {
        let k = h.coeff(basis.classes.min_rep(nu)?);
        if !k.is_zero() {
            residual.add_scaled(g, &-&k)?;
            coords.insert(nu.clone(), k);
        }
    }
    if !residual.is_zero() {
        return Err(Error::BasisIncomplete {
            n: basis.n,
            up_to: basis.up_to,
        });
    }
    Ok(CentralCoords { n: basis.n, coords })
}

pub fn compute_gamma_basis(n: usize, up_to: usize) -> Result<GammaBasis> {
    Center::new(n)?.basis(up_to)
}

/// Structure constants for a set of factor pairs at one rank.
#[derive(Clone, Debug, Default)]
pub struct StructTable {
    pub n: usize,
    pub entries: BTreeMap<(Partition, Partition), CentralCoords>,
}

/// Unordered pairs `lambda <= mu` of nonempty classes of `S_n` with
/// `|lambda| + |mu| <= max_size`.
pub fn product_pairs(n: usize, max_size: usize) -> Vec<(Partition, Partition)> {
    let parts: Vec<_> = partitions_up_to(max_size)
        .into_iter()
        .filter(|p| !p.is_empty() && p.fits(n))
        .collect();
    let mut out = Vec::new();
    for (k, a) in parts.iter().enumerate() {
        for b in &parts[k..] {
            if a.size() + b.size() <= max_size {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Ordered pairs of classes of `S_n` (including the empty one) with
/// `|lambda| + |mu| <= max_size`.
pub fn ordered_pairs(n: usize, max_size: usize) -> Vec<(Partition, Partition)> {
    let parts: Vec<_> = partitions_up_to(max_size)
        .into_iter()
        .filter(|p| p.fits(n))
        .collect();
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            if a.size() + b.size() <= max_size {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

impl StructTable {
    pub fn compute(center: &Center, pairs: &[(Partition, Partition)]) -> Result<Self> {
        let max = pairs
            .iter()
            .map(|(a, b)| a.size() + b.size())
            .max()
            .unwrap_or(0);
        center.basis(max)?;
        let entries = pairs
            .par_iter()
            .map(|(a, b)| {
                center
                    .structure_constants(a, b)
                    .map(|c| ((a.clone(), b.clone()), c))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self {
            n: center.n(),
            entries,
        })
    }
}

/// Positivity, parity, support bound and commutativity of a computed table.
pub fn check_structure_constants(table: &StructTable) -> Report {
    let mut report = Report::new("structure constants");
    for ((lambda, mu), coords) in &table.entries {
        let bound = lambda.size() + mu.size();
        for (nu, k) in &coords.coords {
            report.checked += 1;
            let w = || format!("k[{lambda},{mu}->{nu}]({}) = {k}", table.n);
            if !k.is_nonnegative() {
                report.fail("positivity", w());
            }
            let expected = Parity::of_degree(bound + nu.size());
            if k.parity() != expected {
                report.fail("parity", format!("{}: expected {expected:?}", w()));
            }
            if nu.size() > bound {
                report.fail("filtration", w());
            }
        }
        if let Some(other) = table.entries.get(&(mu.clone(), lambda.clone())) {
            if other != coords {
                report.fail(
                    "commutativity",
                    format!("k[{lambda},{mu}] != k[{mu},{lambda}] at n = {}", table.n),
                );
            }
        }
    }
    report
}

/// Computes all ordered products with `|lambda| + |mu| <= max_size` and checks
/// them. Expansion failures (support beyond the filtration bound) become
/// violations.
pub fn verify_structure_constants(center: &Center, max_size: usize) -> Result<Report> {
    let pairs = ordered_pairs(center.n(), max_size);
    center.basis(max_size)?;
    let results: Vec<_> = pairs
        .par_iter()
        .map(|(a, b)| (a, b, center.structure_constants(a, b)))
        .collect();
    let mut table = StructTable {
        n: center.n(),
        entries: BTreeMap::new(),
    };
    let mut expansion_failures = Vec::new();
    for (a, b, r) in results {
        match r {
            Ok(c) => {
                table.entries.insert((a.clone(), b.clone()), c);
            }
            Err(Error::BasisIncomplete { .. }) => expansion_failures.push(Violation::new(
                "filtration",
                format!(
                    "G{a}G{b} in Z(H_{}) has components beyond degree {}",
                    center.n(),
                    a.size() + b.size()
                ),
            )),
            Err(e) => return Err(e),
        }
    }
    let mut report = check_structure_constants(&table);
    report.checked += expansion_failures.len();
    report.violations.extend(expansion_failures);
    Ok(report)
}

/// Checks every class element with `|lambda| <= up_to` against its defining properties.
pub fn verify_characterization(center: &Center, up_to: usize) -> Result<Report> {
    let basis = center.basis(up_to)?;
    let mut report = Report::new("characterization");
    report.checked = basis.gamma.len();
    report.violations = basis.validate();
    Ok(report)
}

/// Compares the structure constants at `xi = 0` with products of class sums in `Z S_n`.
pub fn verify_oracle(center: &Center, max_size: usize) -> Result<Report> {
    let pairs = product_pairs(center.n(), max_size);
    center.basis(max_size)?;
    let results = pairs
        .par_iter()
        .map(|(a, b)| {
            let k = center.structure_constants(a, b)?.specialize_zero();
            let o = center.class_sum_oracle(a, b)?;
            Ok((a, b, k, o))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report::new("xi=0 oracle");
    for (a, b, k, o) in results {
        report.checked += 1;
        if k != o {
            report.fail(
                "oracle",
                format!(
                    "G{a}G{b} at n = {}: hecke {k:?} vs class sums {o:?}",
                    center.n()
                ),
            );
        }
    }
    Ok(report)
}

/// `e_r(L_1..L_n) = sum_{|lambda| = r} G[lambda](n)` for `1 <= r <= r_max`.
pub fn verify_er_identity(center: &Center, r_max: usize) -> Result<Report> {
    let n = center.n();
    let mut report = Report::new("elementary symmetric identity");
    for r in 1..=r_max {
        report.checked += 1;
        // L_1 = 0, so e_r vanishes once r >= n, as does every G[lambda] with |lambda| = r.
        let e = if r > n {
            HeckeElt::zero(n)
        } else {
            center.jucys_murphy().e_sym(r)?
        };
        let mut sum = HeckeElt::zero(n);
        for lambda in crate::coxeter::partitions_of(r) {
            if lambda.fits(n) {
                sum.add_scaled(&*center.gamma(&lambda)?, &IntPoly::one())?;
            }
        }
        if e != sum {
            report.fail(
                "e_r",
                format!("e_{r}({n}) differs from the sum of G[lambda] with |lambda| = {r}"),
            );
        }
    }
    Ok(report)
}

/// Support of the `m -> G` transition coefficients for `|lambda| <= max_size`,
/// and dominance-unitriangularity of their top-degree block at `xi = 0`.
pub fn verify_b_coeffs(center: &Center, max_size: usize) -> Result<Report> {
    let n = center.n();
    let mut report = Report::new("monomial transition");
    for lambda in partitions_up_to(max_size.min(center.max_degree())) {
        report.checked += 1;
        let b = match center.b_coeffs(&lambda) {
            Ok(b) => b,
            Err(Error::InvariantViolation(w)) => {
                report.fail("b-support", w);
                continue;
            }
            Err(Error::BasisIncomplete { .. }) => {
                report.fail(
                    "b-support",
                    format!(
                        "m{lambda}({n}) leaves the degree-{} filtration",
                        lambda.size()
                    ),
                );
                continue;
            }
            Err(e) => return Err(e),
        };
        // Only the xi = 0 specialization of the top-degree block is unitriangular:
        // b[(2),(2)](n) = xi^2 + 1.
        if lambda.fits(n) && b.get(&lambda).specialize_zero() != BigInt::from(1) {
            report.fail(
                "b-diagonal",
                format!("b[{lambda},{lambda}]({n}) = {}", b.get(&lambda)),
            );
        }
        for (mu, k) in &b.coords {
            let dominated = matches!(
                mu.dominance_cmp(&lambda),
                Some(std::cmp::Ordering::Greater | std::cmp::Ordering::Equal)
            );
            if mu.size() == lambda.size() && !dominated && !k.specialize_zero().is_zero() {
                report.fail("b-triangular", format!("b[{lambda},{mu}]({n}) = {k}"));
            }
        }
    }
    Ok(report)
}
