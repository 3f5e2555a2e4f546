//! Brute-force law checking.
//!
//! Each catalog entry is a predicate over a short list of typed input slots
//! (scalars, vectors, matrices). A [`DomainSpec`] fixes the field, the shape
//! parameters and the strategy:
//!
//! * exhaustive: every assignment of field elements to the slot entries, in
//!   lexicographic order (slots in declaration order, entries row-major,
//!   residues ascending). The first failing case is the witness.
//! * random: `trials` cases drawn from [`crate::rng::CaseStream`].
//!
//! Laws are classified as proved, conditional (proved under an added
//! hypothesis, which is part of the predicate) or refuted (a claim that is
//! false as stated; the verifier is expected to find a witness).

use std::fmt;

use serde_json::{json, Map, Value as Json};

use crate::crossn::{cross_reversal_sign, generalized_cross, minor_drop_col};
use crate::error::{Error, Result};
use crate::json::{
    matrix_from_json, matrix_to_json, scalar_from_json, scalar_to_json, vector_from_json,
    vector_to_json,
};
use crate::matrices::{family_rank, symmetry_basis, Matrix, SymmetryMode};
use crate::polynomials::{antipalindromic_poly_basis, palindromic_poly_basis, Poly};
use crate::rng::CaseStream;
use crate::scalar::{FieldKind, FieldTag, Scalar};
use crate::transform::{
    eigenspace_basis, eigenspace_dimension, exchange_matrix, permutation_matrix,
    reversing_char_poly, reversing_min_poly, Permutation, Sign,
};
use crate::vectors::{
    antipalindromic_basis, antipalindromic_from_free, palindromic_basis, palindromic_from_free,
    Vector,
};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawClass {
    Proved,
    Conditional,
    Refuted,
}

impl LawClass {
    pub fn name(self) -> &'static str {
        match self {
            LawClass::Proved => "proved",
            LawClass::Conditional => "conditional",
            LawClass::Refuted => "refuted",
        }
    }
}

/// Shape parameters. A law only reads the parameters it declares.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dims {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<usize>,
}

impl Dims {
    pub const fn new(n: Option<usize>, m: Option<usize>, p: Option<usize>) -> Self {
        Dims { n, m, p }
    }

    fn n(&self) -> usize {
        self.n.expect("law declares n")
    }

    fn m(&self) -> usize {
        self.m.expect("law declares m")
    }

    fn p(&self) -> usize {
        self.p.expect("law declares p")
    }

    /// Overrides the declared parameters of `self` with those set in `user`.
    fn resolve(self, user: Dims) -> Dims {
        let pick = |own: Option<usize>, over: Option<usize>| own.map(|d| over.unwrap_or(d));
        Dims {
            n: pick(self.n, user.n),
            m: pick(self.m, user.m),
            p: pick(self.p, user.p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    Scalar,
    Vector(usize),
    Matrix(usize, usize),
}

impl SlotKind {
    fn entries(self) -> usize {
        match self {
            SlotKind::Scalar => 1,
            SlotKind::Vector(n) => n,
            SlotKind::Matrix(r, c) => r * c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub name: &'static str,
    pub kind: SlotKind,
}

fn scalar(name: &'static str) -> Slot {
    Slot {
        name,
        kind: SlotKind::Scalar,
    }
}

fn vector(name: &'static str, n: usize) -> Slot {
    Slot {
        name,
        kind: SlotKind::Vector(n),
    }
}

fn matrix(name: &'static str, r: usize, c: usize) -> Slot {
    Slot {
        name,
        kind: SlotKind::Matrix(r, c),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Vector(Vector),
    Matrix(Matrix),
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::Scalar(s) => scalar_to_json(s),
            Value::Vector(v) => vector_to_json(v),
            Value::Matrix(m) => matrix_to_json(m),
        }
    }
}

struct Case<'a>(&'a [Value]);

impl Case<'_> {
    fn s(&self, i: usize) -> &Scalar {
        match &self.0[i] {
            Value::Scalar(s) => s,
            _ => unreachable!("slot {i} is not a scalar"),
        }
    }

    fn v(&self, i: usize) -> &Vector {
        match &self.0[i] {
            Value::Vector(v) => v,
            _ => unreachable!("slot {i} is not a vector"),
        }
    }

    fn m(&self, i: usize) -> &Matrix {
        match &self.0[i] {
            Value::Matrix(m) => m,
            _ => unreachable!("slot {i} is not a matrix"),
        }
    }

    fn poly(&self, i: usize) -> Result<Poly> {
        let v = self.v(i);
        Poly::new(v.len() - 1, v.clone())
    }
}

struct Ctx {
    tag: FieldTag,
    dims: Dims,
}

impl Ctx {
    fn int(&self, k: i64) -> Scalar {
        Scalar::from_i64(self.tag, k)
    }
}

type SlotsFn = fn(&Dims) -> Result<Vec<Slot>>;
type CheckFn = fn(&Ctx, &Case) -> Result<bool>;

/// One catalog entry.
pub struct Law {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub class: LawClass,
    pub statement: &'static str,
    pub defaults: Dims,
    pub needs_odd_characteristic: bool,
    slots: SlotsFn,
    check: CheckFn,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("class", &self.class)
            .finish_non_exhaustive()
    }
}

impl Law {
    fn new(
        id: &'static str,
        class: LawClass,
        statement: &'static str,
        defaults: Dims,
        slots: SlotsFn,
        check: CheckFn,
    ) -> Self {
        Law {
            id,
            alias: None,
            class,
            statement,
            defaults,
            needs_odd_characteristic: false,
            slots,
            check,
        }
    }

    fn alias(mut self, alias: &'static str) -> Self {
        self.alias = Some(alias);
        self
    }

    fn odd(mut self) -> Self {
        self.needs_odd_characteristic = true;
        self
    }

    pub fn slots(&self, dims: &Dims) -> Result<Vec<Slot>> {
        (self.slots)(dims)
    }

    /// Laws without inputs are parameter checks and have nothing to search.
    pub fn searchable(&self) -> bool {
        self.slots(&self.defaults).map_or(true, |s| !s.is_empty())
    }

    pub fn matches(&self, name: &str) -> bool {
        self.id.eq_ignore_ascii_case(name)
            || self.alias.is_some_and(|a| a.eq_ignore_ascii_case(name))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

/// Field, optional shape overrides, strategy and case budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainSpec {
    pub field: FieldTag,
    pub dims: Dims,
    pub strategy: Strategy,
    pub budget: u64,
}

impl DomainSpec {
    pub fn exhaustive(field: FieldTag) -> Self {
        DomainSpec {
            field,
            dims: Dims::default(),
            strategy: Strategy::Exhaustive,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn random(field: FieldTag, trials: u64, seed: u64) -> Self {
        DomainSpec {
            strategy: Strategy::Random { trials, seed },
            ..Self::exhaustive(field)
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.dims.n = Some(n);
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.dims.m = Some(m);
        self
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.dims.p = Some(p);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.field.kind() == FieldKind::Float {
            return Err(Error::InvalidDomain(
                "law checks need an exact field".into(),
            ));
        }
        if self.strategy == Strategy::Exhaustive && self.field.kind() != FieldKind::PrimeField {
            return Err(Error::InvalidDomain(
                "exhaustive enumeration needs a prime field".into(),
            ));
        }
        Ok(())
    }

    fn to_json(self, dims: &Dims) -> Json {
        let mut obj = Map::new();
        obj.insert("field".into(), json!(self.field.to_string()));
        for (key, d) in [("n", dims.n), ("m", dims.m), ("p", dims.p)] {
            if let Some(d) = d {
                obj.insert(key.into(), json!(d));
            }
        }
        let strategy = match self.strategy {
            Strategy::Exhaustive => json!("exhaustive"),
            Strategy::Random { trials, seed } => {
                json!({"random": {"trials": trials, "seed": seed}})
            }
        };
        obj.insert("strategy".into(), strategy);
        obj.insert("budget".into(), json!(self.budget));
        Json::Object(obj)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: &'static str,
    pub class: LawClass,
    pub domain: DomainSpec,
    /// The shape parameters actually used.
    pub dims: Dims,
    pub cases_checked: u64,
    pub status: Status,
    /// Failing inputs keyed by slot name.
    pub witness: Option<Json>,
    /// Set when the failing case raised an error instead of returning false.
    pub error: Option<String>,
}

impl LawReport {
    /// Proved and conditional laws must not fail; refuted laws must not pass.
    pub fn as_expected(&self) -> bool {
        match (&self.status, self.class) {
            (Status::Skipped(_), _) => true,
            (Status::Pass, LawClass::Refuted) => false,
            (Status::Fail, LawClass::Refuted) => true,
            (Status::Pass, _) => true,
            (Status::Fail, _) => false,
        }
    }

    pub fn to_json(&self) -> Json {
        let mut obj = Map::new();
        obj.insert("law".into(), json!(self.law));
        obj.insert("class".into(), json!(self.class.name()));
        obj.insert("domain".into(), self.domain.to_json(&self.dims));
        obj.insert("cases_checked".into(), json!(self.cases_checked));
        obj.insert("status".into(), json!(self.status.name()));
        if let Status::Skipped(reason) = &self.status {
            obj.insert("reason".into(), json!(reason));
        }
        if let Some(e) = &self.error {
            obj.insert("error".into(), json!(e));
        }
        obj.insert("witness".into(), self.witness.clone().unwrap_or(Json::Null));
        Json::Object(obj)
    }
}

pub fn lookup(name: &str) -> Result<&'static Law> {
    catalog()
        .iter()
        .find(|l| l.matches(name))
        .ok_or_else(|| Error::UnknownLaw(name.to_string()))
}

fn case_count(q: u64, entries: usize) -> u128 {
    u32::try_from(entries)
        .ok()
        .and_then(|e| (q as u128).checked_pow(e))
        .unwrap_or(u128::MAX)
}

fn build_values(
    tag: FieldTag,
    slots: &[Slot],
    flat: &mut impl Iterator<Item = Scalar>,
) -> Result<Vec<Value>> {
    slots
        .iter()
        .map(|slot| {
            let mut take = |k: usize| flat.by_ref().take(k).collect::<Vec<_>>();
            Ok(match slot.kind {
                SlotKind::Scalar => Value::Scalar(take(1).remove(0)),
                SlotKind::Vector(n) => Value::Vector(Vector::new(tag, take(n))?),
                SlotKind::Matrix(r, c) => Value::Matrix(Matrix::new(tag, r, c, take(r * c))?),
            })
        })
        .collect()
}

fn witness_json(slots: &[Slot], values: &[Value]) -> Json {
    let mut obj = Map::new();
    for (slot, v) in slots.iter().zip(values) {
        obj.insert(slot.name.into(), v.to_json());
    }
    Json::Object(obj)
}

/// Outcome of evaluating a law on one case: `Ok(true)` holds, anything else fails.
fn evaluate(law: &Law, cx: &Ctx, values: &[Value]) -> Result<bool> {
    (law.check)(cx, &Case(values))
}

struct Run {
    cases: u64,
    failure: Option<(Vec<Value>, Option<String>)>,
}

fn run_cases(law: &Law, cx: &Ctx, slots: &[Slot], domain: &DomainSpec) -> Result<Run> {
    let entries: usize = slots.iter().map(|s| s.kind.entries()).sum();
    let mut cases = 0u64;
    let mut on_case = |values: Vec<Value>| -> Option<(Vec<Value>, Option<String>)> {
        cases += 1;
        match evaluate(law, cx, &values) {
            Ok(true) => None,
            Ok(false) => Some((values, None)),
            Err(e) => Some((values, Some(e.to_string()))),
        }
    };
    let failure = match domain.strategy {
        Strategy::Exhaustive => {
            let elements = domain.field.elements().expect("prime field");
            let total = case_count(elements.len() as u64, entries);
            if total > domain.budget as u128 {
                return Err(Error::BudgetExceeded {
                    cases: total,
                    budget: domain.budget,
                });
            }
            let mut digits = vec![0usize; entries];
            let mut found = None;
            for _ in 0..total as u64 {
                let mut flat = digits.iter().map(|&d| elements[d].clone());
                let values = build_values(cx.tag, slots, &mut flat)?;
                if let Some(f) = on_case(values) {
                    found = Some(f);
                    break;
                }
                // odometer: the last entry is the least significant digit
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < elements.len() {
                        break;
                    }
                    *d = 0;
                }
            }
            found
        }
        Strategy::Random { trials, seed } => {
            if trials > domain.budget {
                return Err(Error::BudgetExceeded {
                    cases: trials as u128,
                    budget: domain.budget,
                });
            }
            // a law without inputs has a single case
            let trials = if entries == 0 { trials.min(1) } else { trials };
            let mut found = None;
            for c in 0..trials {
                let mut stream = CaseStream::new(seed, c);
                let flat = (0..entries)
                    .map(|_| stream.scalar(cx.tag))
                    .collect::<Result<Vec<_>>>()?;
                let values = build_values(cx.tag, slots, &mut flat.into_iter())?;
                if let Some(f) = on_case(values) {
                    found = Some(f);
                    break;
                }
            }
            found
        }
    };
    Ok(Run { cases, failure })
}

fn check(law: &'static Law, domain: &DomainSpec) -> Result<LawReport> {
    domain.validate()?;
    let dims = law.defaults.resolve(domain.dims);
    let slots = law.slots(&dims)?;
    let report = |cases_checked, status, witness, error| LawReport {
        law: law.id,
        class: law.class,
        domain: *domain,
        dims,
        cases_checked,
        status,
        witness,
        error,
    };
    if law.needs_odd_characteristic && domain.field.characteristic() == 2 {
        let reason = "characteristic 2: decomposition undefined".to_string();
        return Ok(report(0, Status::Skipped(reason), None, None));
    }
    if law.class == LawClass::Refuted && matches!(domain.strategy, Strategy::Random { .. }) {
        let reason = "refuted claims are searched exhaustively only".to_string();
        return Ok(report(0, Status::Skipped(reason), None, None));
    }
    let cx = Ctx {
        tag: domain.field,
        dims,
    };
    let run = run_cases(law, &cx, &slots, domain)?;
    Ok(match run.failure {
        None => report(run.cases, Status::Pass, None, None),
        Some((values, error)) => report(
            run.cases,
            Status::Fail,
            Some(witness_json(&slots, &values)),
            error,
        ),
    })
}

/// Evaluates `law` over `domain`.
pub fn check_law(law: &str, domain: &DomainSpec) -> Result<LawReport> {
    check(lookup(law)?, domain)
}

/// First failing case of `claim` within `bounds`, keyed by slot name.
pub fn find_counterexample(claim: &str, bounds: &DomainSpec) -> Result<Option<Json>> {
    let law = lookup(claim)?;
    if !law.searchable() {
        return Err(Error::NotSearchable(law.id.to_string()));
    }
    let mut bounds = *bounds;
    if let Strategy::Random { .. } = bounds.strategy {
        // search every case regardless of the law's class
        bounds.validate()?;
        let dims = law.defaults.resolve(bounds.dims);
        let slots = law.slots(&dims)?;
        let cx = Ctx {
            tag: bounds.field,
            dims,
        };
        let run = run_cases(law, &cx, &slots, &bounds)?;
        return Ok(run.failure.map(|(v, _)| witness_json(&slots, &v)));
    }
    bounds.strategy = Strategy::Exhaustive;
    Ok(check(law, &bounds)?.witness)
}

/// Re-evaluates `law` on a serialized witness; `Ok(false)` means the failure reproduces.
pub fn recheck(law: &str, field: FieldTag, dims: Dims, witness: &Json) -> Result<bool> {
    let law = lookup(law)?;
    let dims = law.defaults.resolve(dims);
    let slots = law.slots(&dims)?;
    let values = slots
        .iter()
        .map(|slot| {
            let raw = witness
                .get(slot.name)
                .ok_or_else(|| Error::Parse(format!("witness lacks slot `{}`", slot.name)))?;
            let value = match slot.kind {
                SlotKind::Scalar => Value::Scalar(scalar_from_json(field, raw)?),
                SlotKind::Vector(n) => {
                    let v = vector_from_json(field, raw)?;
                    if v.len() != n {
                        return Err(Error::dims(format!(
                            "slot `{}` needs length {n}",
                            slot.name
                        )));
                    }
                    Value::Vector(v)
                }
                SlotKind::Matrix(r, c) => {
                    let m = matrix_from_json(field, raw)?;
                    if m.shape() != (r, c) {
                        return Err(Error::dims(format!(
                            "slot `{}` needs shape {r}x{c}",
                            slot.name
                        )));
                    }
                    Value::Matrix(m)
                }
            };
            Ok(value)
        })
        .collect::<Result<Vec<_>>>()?;
    let cx = Ctx { tag: field, dims };
    Ok(evaluate(law, &cx, &values).unwrap_or(false))
}

/// Runs the listed laws; errors such as an exceeded budget become skipped reports.
pub fn run_laws(ids: &[&str], domain: &DomainSpec) -> Result<Vec<LawReport>> {
    ids.iter()
        .map(|id| {
            let law = lookup(id)?;
            Ok(check(law, domain).unwrap_or_else(|e| LawReport {
                law: law.id,
                class: law.class,
                domain: *domain,
                dims: law.defaults.resolve(domain.dims),
                cases_checked: 0,
                status: Status::Skipped(e.to_string()),
                witness: None,
                error: None,
            }))
        })
        .collect()
}

/// Every catalog law at its default shape (overridden by `domain.dims`).
pub fn run_suite(domain: &DomainSpec) -> Vec<LawReport> {
    let ids: Vec<&str> = catalog().iter().map(|l| l.id).collect();
    run_laws(&ids, domain).expect("catalog ids resolve")
}

pub fn suite_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::as_expected)
}

/// Fixed-width summary table, one line per report.
pub fn summary_table(reports: &[LawReport]) -> String {
    let mut out = format!(
        "{:<6} {:<12} {:<8} {:>10}  {}\n",
        "law", "class", "status", "cases", "outcome"
    );
    for r in reports {
        let outcome = if r.as_expected() { "ok" } else { "UNEXPECTED" };
        out.push_str(&format!(
            "{:<6} {:<12} {:<8} {:>10}  {}\n",
            r.law,
            r.class.name(),
            r.status.name(),
            r.cases_checked,
            outcome
        ));
    }
    let bad = reports.iter().filter(|r| !r.as_expected()).count();
    out.push_str(&format!("{} laws, {} unexpected\n", reports.len(), bad));
    out
}

// ---------------------------------------------------------------------------
// Catalog helpers

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidDomain(msg.to_string()))
    }
}

fn implies(p: bool, q: bool) -> bool {
    !p || q
}

fn floor_sign(cx: &Ctx, n: usize) -> Scalar {
    Scalar::sign(cx.tag, n / 2)
}

fn is_invertible(a: &Matrix) -> Result<bool> {
    Ok(!a.det()?.is_zero())
}

fn mode_dimension(mode: SymmetryMode, n: usize, m: usize) -> usize {
    use SymmetryMode::*;
    let (cn, fl_n, cm, fl_m) = (n.div_ceil(2), n / 2, m.div_ceil(2), m / 2);
    match mode {
        RowPal => n * cm,
        RowAnti => n * fl_m,
        ColPal => m * cn,
        ColAnti => m * fl_n,
        PalPal => cn * cm,
        PalAnti => fl_n * cm,
        AntiPal => cn * fl_m,
        AntiAnti => fl_n * fl_m,
        FullPal => (n * m).div_ceil(2),
        FullAnti => n * m / 2,
    }
}

fn poly_slot(name: &'static str, ambient: usize) -> Slot {
    vector(name, ambient + 1)
}

const fn d1(n: usize) -> Dims {
    Dims::new(Some(n), None, None)
}

const fn d2(n: usize, m: usize) -> Dims {
    Dims::new(Some(n), Some(m), None)
}

const fn d3(n: usize, m: usize, p: usize) -> Dims {
    Dims::new(Some(n), Some(m), Some(p))
}

fn catalog_laws() -> Vec<Law> {
    use LawClass::*;
    vec![
        // vectors
        Law::new("V1", Proved, "R(R(v)) = v", d1(5),
            |d| Ok(vec![vector("v", d.n())]),
            |_, c| Ok(c.v(0).reverse().reverse() == *c.v(0))),
        Law::new("V2", Proved, "R(a v + b w) = a R(v) + b R(w)", d1(3),
            |d| Ok(vec![scalar("a"), scalar("b"), vector("v", d.n()), vector("w", d.n())]),
            |_, c| {
                let (a, b, v, w) = (c.s(0), c.s(1), c.v(2), c.v(3));
                let lhs = v.scale(a)?.try_add(&w.scale(b)?)?.reverse();
                let rhs = v.reverse().scale(a)?.try_add(&w.reverse().scale(b)?)?;
                Ok(lhs == rhs)
            }),
        Law::new("V3", Proved, "v . w = R(v) . R(w)", d1(4),
            |d| Ok(vec![vector("v", d.n()), vector("w", d.n())]),
            |_, c| Ok(c.v(0).dot(c.v(1))? == c.v(0).reverse().dot(&c.v(1).reverse())?)),
        Law::new("V4", Proved, "R(v x w) = R(w) x R(v) in K^3", Dims::default(),
            |_| Ok(vec![vector("v", 3), vector("w", 3)]),
            |_, c| {
                let (v, w) = (c.v(0), c.v(1));
                Ok(v.cross3(w)?.reverse() == w.reverse().cross3(&v.reverse())?)
            }),
        Law::new("V5", Proved, "(u ⋄ v) ⋄ w = u ⋄ (v ⋄ w)", d3(2, 2, 1),
            |d| Ok(vec![vector("u", d.n()), vector("v", d.m()), vector("w", d.p())]),
            |_, c| {
                let (u, v, w) = (c.v(0), c.v(1), c.v(2));
                Ok(u.paste(v)?.paste(w)? == u.paste(&v.paste(w)?)?)
            }),
        Law::new("V6", Proved, "R(v ⋄ w) = R(w) ⋄ R(v)", d2(3, 2),
            |d| Ok(vec![vector("v", d.n()), vector("w", d.m())]),
            |_, c| {
                let (v, w) = (c.v(0), c.v(1));
                Ok(v.paste(w)?.reverse() == w.reverse().paste(&v.reverse())?)
            }),
        Law::new("V7", Proved, "palindromic and antipalindromic vectors are closed under sums and scalar multiples", d1(4),
            |d| Ok(vec![scalar("a"), vector("v", d.n()), vector("w", d.n())]),
            |_, c| {
                let (a, v, w) = (c.s(0), c.v(1), c.v(2));
                let (sum, scaled) = (v.try_add(w)?, v.scale(a)?);
                Ok(implies(v.is_palindromic() && w.is_palindromic(), sum.is_palindromic() && scaled.is_palindromic())
                    && implies(v.is_antipalindromic() && w.is_antipalindromic(), sum.is_antipalindromic() && scaled.is_antipalindromic()))
            }),
        Law::new("V8", Proved, "dim W_p = ceil(k/2) and dim W_a = floor(k/2) for k <= n", d1(8),
            |_| Ok(vec![]),
            |cx, _| {
                for k in 0..=cx.dims.n() {
                    let pal = palindromic_basis(k, cx.tag);
                    let anti = antipalindromic_basis(k, cx.tag)?;
                    let ok = pal.len() == k.div_ceil(2)
                        && family_rank(cx.tag, &pal) == k.div_ceil(2)
                        && anti.len() == k / 2
                        && family_rank(cx.tag, &anti) == k / 2
                        && pal.iter().all(Vector::is_palindromic)
                        && anti.iter().all(Vector::is_antipalindromic);
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(true)
            }).odd(),
        Law::new("V9", Proved, "in K^3: pal x pal is antipalindromic, anti x anti = 0, pal x anti is palindromic", Dims::default(),
            |_| Ok(vec![vector("v", 3), vector("w", 3)]),
            |_, c| {
                let (v, w) = (c.v(0), c.v(1));
                let x = v.cross3(w)?;
                let (vp, va, wp, wa) = (v.is_palindromic(), v.is_antipalindromic(), w.is_palindromic(), w.is_antipalindromic());
                Ok(implies(vp && wp, x.is_antipalindromic())
                    && implies(va && wa, x.is_zero())
                    && implies(vp && wa, x.is_palindromic()))
            }),
        Law::new("V10", Proved, "v = F_p(v) + F_a(v) with parts in W_p, W_a, and W_p ∩ W_a = 0", d1(4),
            |d| Ok(vec![vector("v", d.n())]),
            |_, c| {
                let v = c.v(0);
                let parts = v.decompose()?;
                Ok(parts.pal.try_add(&parts.anti)? == *v
                    && parts.pal.is_palindromic()
                    && parts.anti.is_antipalindromic()
                    && implies(v.is_palindromic() && v.is_antipalindromic(), v.is_zero())
                    && implies(v.is_palindromic(), parts.pal == *v)
                    && implies(v.is_antipalindromic(), parts.anti == *v))
            }).odd(),
        // transform
        Law::new("T1", Proved, "Ĩ_n v = R(v), Ĩ_n² = I_n, and the reversal permutation matrix is Ĩ_n", d1(5),
            |d| Ok(vec![vector("v", d.n())]),
            |cx, c| {
                let (n, v) = (cx.dims.n(), c.v(0));
                let ex = exchange_matrix(n, cx.tag);
                let sigma = Permutation::reversal(n);
                Ok(ex.apply(v)? == v.reverse()
                    && ex.matmul(&ex)? == Matrix::identity(cx.tag, n)
                    && permutation_matrix(&sigma, cx.tag) == ex
                    && sigma.apply(v)? == v.reverse()
                    && Permutation::identity(n).apply(v)? == *v)
            }),
        Law::new("T2", Proved, "det(x I - Ĩ_n) = (x-1)^ceil(n/2) (x+1)^floor(n/2); Q(Ĩ_n) = 0; Q | P", d1(4),
            |d| need(d.n() >= 1, "n >= 1").map(|_| vec![scalar("x")]),
            |cx, c| {
                let (n, x) = (cx.dims.n(), c.s(0));
                let ex = exchange_matrix(n, cx.tag);
                let pchar = reversing_char_poly(n, cx.tag);
                let qmin = reversing_min_poly(n, cx.tag);
                let shifted = Matrix::identity(cx.tag, n).scale(x)?.try_sub(&ex)?;
                Ok(shifted.det()? == pchar.eval(x)?
                    && pchar.coeffs().get(n).is_one()
                    && pchar.eval_matrix(&ex)?.is_zero()
                    && qmin.eval_matrix(&ex)?.is_zero()
                    && pchar.div_rem(&qmin)?.1.is_zero())
            }),
        Law::new("T3", Proved, "dim ker(Ĩ_k - I) = ceil(k/2), dim ker(Ĩ_k + I) = floor(k/2), spanned by the eigen bases", d1(8),
            |_| Ok(vec![]),
            |cx, _| {
                for k in 0..=cx.dims.n() {
                    let ex = exchange_matrix(k, cx.tag);
                    let plus = eigenspace_basis(k, Sign::Plus, cx.tag)?;
                    let minus = eigenspace_basis(k, Sign::Minus, cx.tag)?;
                    let eigen = |b: &Vector, s: i64| -> Result<bool> { Ok(ex.apply(b)? == b.scale(&cx.int(s))?) };
                    let mut ok = eigenspace_dimension(k, Sign::Plus, cx.tag) == k.div_ceil(2)
                        && eigenspace_dimension(k, Sign::Minus, cx.tag) == k / 2
                        && family_rank(cx.tag, &plus) == k.div_ceil(2)
                        && family_rank(cx.tag, &minus) == k / 2;
                    for b in &plus {
                        ok &= eigen(b, 1)?;
                    }
                    for b in &minus {
                        ok &= eigen(b, -1)?;
                    }
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(true)
            }).odd(),
        Law::new("T4", Proved, "F_p + F_a = id, F_p² = F_p, F_a² = F_a, F_p F_a = 0, im F_p = ker(R - id), im F_a = ker(R + id)", d1(5),
            |d| Ok(vec![vector("v", d.n())]),
            |_, c| {
                let v = c.v(0);
                let (fp, fa) = (v.palindromic_part()?, v.antipalindromic_part()?);
                Ok(fp.try_add(&fa)? == *v
                    && fp.palindromic_part()? == fp
                    && fa.antipalindromic_part()? == fa
                    && fa.palindromic_part()?.is_zero()
                    && fp.antipalindromic_part()?.is_zero()
                    && fp.reverse() == fp
                    && fa.reverse() == -&fa
                    && implies(v.reverse() == *v, fp == *v)
                    && implies(v.reverse() == -v, fa == *v))
            }).odd(),
        Law::new("T5", Refuted, "F_p(v) = 0 implies v = 0", d1(2),
            |d| Ok(vec![vector("v", d.n())]),
            |_, c| {
                let v = c.v(0);
                Ok(implies(v.palindromic_part()?.is_zero(), v.is_zero()))
            }).odd(),
        // polynomials (ambient degree n, coefficients ascending)
        Law::new("P1", Proved, "R(R(P)) = P in K_n[x]", d1(4),
            |d| Ok(vec![poly_slot("P", d.n())]),
            |_, c| {
                let p = c.poly(0)?;
                Ok(p.reverse().reverse() == p)
            }),
        Law::new("P2", Proved, "R(P ⋄ Q) = R(Q) ⋄ R(P)", d2(2, 1),
            |d| Ok(vec![poly_slot("P", d.n()), poly_slot("Q", d.m())]),
            |_, c| {
                let (p, q) = (c.poly(0)?, c.poly(1)?);
                Ok(p.paste(&q)?.reverse() == q.reverse().paste(&p.reverse())?)
            }),
        Law::new("P3", Proved, "(P ⋄ Q) ⋄ S = P ⋄ (Q ⋄ S), ambient n+m+p+2", d3(1, 1, 0),
            |d| Ok(vec![poly_slot("P", d.n()), poly_slot("Q", d.m()), poly_slot("S", d.p())]),
            |cx, c| {
                let (p, q, s) = (c.poly(0)?, c.poly(1)?, c.poly(2)?);
                let lhs = p.paste(&q)?.paste(&s)?;
                let (n, m, k) = (cx.dims.n(), cx.dims.m(), cx.dims.p());
                Ok(lhs == p.paste(&q.paste(&s)?)? && lhs.ambient() == n + m + k + 2)
            }),
        Law::new("P4", Proved, "R(a P + b Q) = a R(P) + b R(Q)", d1(2),
            |d| Ok(vec![scalar("a"), scalar("b"), poly_slot("P", d.n()), poly_slot("Q", d.n())]),
            |_, c| {
                let (a, b, p, q) = (c.s(0), c.s(1), c.poly(2)?, c.poly(3)?);
                let lhs = p.scale(a)?.try_add(&q.scale(b)?)?.reverse();
                Ok(lhs == p.reverse().scale(a)?.try_add(&q.reverse().scale(b)?)?)
            }),
        Law::new("P5", Proved, "palindromic and antipalindromic polynomials form subspaces of K_n[x]", d1(3),
            |d| Ok(vec![scalar("a"), poly_slot("P", d.n()), poly_slot("Q", d.n())]),
            |_, c| {
                let (a, p, q) = (c.s(0), c.poly(1)?, c.poly(2)?);
                let (sum, scaled) = (p.try_add(&q)?, p.scale(a)?);
                Ok(implies(p.is_palindromic() && q.is_palindromic(), sum.is_palindromic() && scaled.is_palindromic())
                    && implies(p.is_antipalindromic() && q.is_antipalindromic(), sum.is_antipalindromic() && scaled.is_antipalindromic()))
            }),
        Law::new("P6", Proved, "(P ⋄ Q)(x) = P(x) + x^(n+1) Q(x)", d2(1, 1),
            |d| Ok(vec![poly_slot("P", d.n()), poly_slot("Q", d.m()), scalar("x")]),
            |cx, c| {
                let (p, q, x) = (c.poly(0)?, c.poly(1)?, c.s(2));
                let shift = x.pow(cx.dims.n() as u32 + 1);
                Ok(p.paste(&q)?.eval(x)? == p.eval(x)? + shift * q.eval(x)?)
            }),
        Law::new("P7", Proved, "K_n[x] = W_p ⊕ W_a with dim W_p = ceil((n+1)/2), dim W_a = floor((n+1)/2)", d1(4),
            |d| Ok(vec![poly_slot("P", d.n())]),
            |cx, c| {
                let p = c.poly(0)?;
                let n = cx.dims.n();
                let (pal, anti) = p.decompose()?;
                let coeffs = |ps: Vec<Poly>| ps.iter().map(|q| q.coeffs().clone()).collect::<Vec<_>>();
                let pb = coeffs(palindromic_poly_basis(n, cx.tag));
                let ab = coeffs(antipalindromic_poly_basis(n, cx.tag)?);
                Ok(pal.try_add(&anti)? == p
                    && pal.is_palindromic()
                    && anti.is_antipalindromic()
                    && pal.ambient() == n
                    && anti.ambient() == n
                    && family_rank(cx.tag, &pb) == (n + 1).div_ceil(2)
                    && family_rank(cx.tag, &ab) == n.div_ceil(2))
            }).odd(),
        // matrices
        Law::new("M1", Proved, "R_r² = R_c² = R² = id", d2(2, 3),
            |d| Ok(vec![matrix("A", d.n(), d.m())]),
            |_, c| {
                let a = c.m(0);
                Ok(a.reverse_rows().reverse_rows() == *a
                    && a.reverse_cols().reverse_cols() == *a
                    && a.reverse_full().reverse_full() == *a)
            }),
        Law::new("M2", Proved, "R_r(A ⋄_r C) = R_r(C) ⋄_r R_r(A) and R_c(A ⋄_c B) = R_c(B) ⋄_c R_c(A)", d3(2, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("C", d.n(), d.p())]),
            |_, c| {
                let (a, cm) = (c.m(0), c.m(1));
                let rows = a.paste_rows(cm)?.reverse_rows() == cm.reverse_rows().paste_rows(&a.reverse_rows())?;
                let (at, ct) = (a.transpose(), cm.transpose());
                let cols = at.paste_cols(&ct)?.reverse_cols() == ct.reverse_cols().paste_cols(&at.reverse_cols())?;
                Ok(rows && cols)
            }),
        Law::new("M3", Proved, "⋄_r and ⋄_c are associative", d3(2, 1, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.n(), d.p()), matrix("C", d.n(), d.m())]),
            |_, c| {
                let (a, b, cm) = (c.m(0), c.m(1), c.m(2));
                let rows = a.paste_rows(b)?.paste_rows(cm)? == a.paste_rows(&b.paste_rows(cm)?)?;
                let (at, bt, ct) = (a.transpose(), b.transpose(), cm.transpose());
                let cols = at.paste_cols(&bt)?.paste_cols(&ct)? == at.paste_cols(&bt.paste_cols(&ct)?)?;
                Ok(rows && cols)
            }),
        Law::new("M4", Proved, "R_r, R_c and R are linear", d2(2, 2),
            |d| Ok(vec![scalar("a"), scalar("b"), matrix("A", d.n(), d.m()), matrix("B", d.n(), d.m())]),
            |_, c| {
                let (a, b, x, y) = (c.s(0), c.s(1), c.m(2), c.m(3));
                let combo = x.scale(a)?.try_add(&y.scale(b)?)?;
                let ops: [fn(&Matrix) -> Matrix; 3] = [Matrix::reverse_rows, Matrix::reverse_cols, Matrix::reverse_full];
                for op in ops {
                    if op(&combo) != op(x).scale(a)?.try_add(&op(y).scale(b)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        Law::new("M5", Proved, "(R_r A)ᵀ = R_c(Aᵀ) and (R_c A)ᵀ = R_r(Aᵀ)", d2(2, 3),
            |d| Ok(vec![matrix("A", d.n(), d.m())]),
            |_, c| {
                let a = c.m(0);
                Ok(a.reverse_rows().transpose() == a.transpose().reverse_cols()
                    && a.reverse_cols().transpose() == a.transpose().reverse_rows())
            }),
        Law::new("M6", Proved, "(A ⋄_c B)ᵀ = Aᵀ ⋄_r Bᵀ and (A ⋄_r C)ᵀ = Aᵀ ⋄_c Cᵀ", d3(1, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.p(), d.m())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let (at, bt) = (a.transpose(), b.transpose());
                Ok(a.paste_cols(b)?.transpose() == at.paste_rows(&bt)?
                    && at.paste_rows(&bt)?.transpose() == a.paste_cols(b)?)
            }),
        Law::new("M7", Proved, "R_r(AB) = A R_r(B) and R_c(AB) = R_c(A) B", d3(2, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let ab = a.matmul(b)?;
                Ok(ab.reverse_rows() == a.matmul(&b.reverse_rows())?
                    && ab.reverse_cols() == a.reverse_cols().matmul(b)?)
            }),
        Law::new("M8", Proved, "det(R_r A) = det(R_c A) = (-1)^floor(n/2) det A and det(Ĩ_n) = (-1)^floor(n/2)", d1(2),
            |d| Ok(vec![matrix("A", d.n(), d.n())]),
            |cx, c| {
                let (n, a) = (cx.dims.n(), c.m(0));
                let s = floor_sign(cx, n);
                let d = a.det()?;
                Ok(a.reverse_rows().det()? == &s * &d
                    && a.reverse_cols().det()? == &s * &d
                    && exchange_matrix(n, cx.tag).det()? == s)
            }).alias("M-det-sign"),
        Law::new("M9", Proved, "(R_c A)⁻¹ = R_r(A⁻¹) and (R_r A)⁻¹ = R_c(A⁻¹)", d1(2),
            |d| Ok(vec![matrix("A", d.n(), d.n())]),
            |_, c| {
                let a = c.m(0);
                if !is_invertible(a)? {
                    return Ok(!is_invertible(&a.reverse_cols())? && !is_invertible(&a.reverse_rows())?);
                }
                let inv = a.inverse()?;
                Ok(a.reverse_cols().inverse()? == inv.reverse_rows()
                    && a.reverse_rows().inverse()? == inv.reverse_cols())
            }),
        Law::new("M10", Proved, "B row-palindromic ⇒ AB row-palindromic; A column-palindromic ⇒ AB column-palindromic", d3(2, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let ab = a.matmul(b)?;
                Ok(implies(b.is_row_palindromic(), ab.is_row_palindromic())
                    && implies(a.is_col_palindromic(), ab.is_col_palindromic()))
            }),
        Law::new("M11", Proved, "B row-antipalindromic ⇒ AB row-antipalindromic; A column-antipalindromic ⇒ AB column-antipalindromic", d3(2, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let ab = a.matmul(b)?;
                Ok(implies(b.is_row_antipalindromic(), ab.is_row_antipalindromic())
                    && implies(a.is_col_antipalindromic(), ab.is_col_antipalindromic()))
            }),
        Law::new("M12", Conditional, "rank A = m and AB row-(anti)palindromic ⇒ B row-(anti)palindromic; rank B = m and AB column-(anti)palindromic ⇒ A column-(anti)palindromic", d3(2, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |cx, c| {
                let (a, b) = (c.m(0), c.m(1));
                let m = cx.dims.m();
                let ab = a.matmul(b)?;
                let (a_full, b_full) = (a.rank() == m, b.rank() == m);
                Ok(implies(a_full && ab.is_row_palindromic(), b.is_row_palindromic())
                    && implies(a_full && ab.is_row_antipalindromic(), b.is_row_antipalindromic())
                    && implies(b_full && ab.is_col_palindromic(), a.is_col_palindromic())
                    && implies(b_full && ab.is_col_antipalindromic(), a.is_col_antipalindromic()))
            }),
        Law::new("M13", Refuted, "AB ≠ 0 row-palindromic ⇒ B row-palindromic", d3(1, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let ab = a.matmul(b)?;
                Ok(implies(!ab.is_zero() && ab.is_row_palindromic(), b.is_row_palindromic()))
            }).alias("M-pal-product-converse"),
        Law::new("M14", Proved, "A = A_pp + A_pa + A_ap + A_aa uniquely; A = row-pal + row-anti = col-pal + col-anti", d2(2, 3),
            |d| Ok(vec![matrix("A", d.n(), d.m())]),
            |_, c| {
                use SymmetryMode::*;
                let a = c.m(0);
                let q = a.decompose_rc()?;
                let parts = [(PalPal, &q.pp), (PalAnti, &q.pa), (AntiPal, &q.ap), (AntiAnti, &q.aa)];
                let mut ok = q.sum()? == *a && parts.iter().all(|(mode, x)| x.satisfies(*mode));
                for (mode, x) in parts {
                    if a.satisfies(mode) {
                        // a projector fixes its own image and kills the rest
                        let others_vanish = parts.iter().filter(|(m2, _)| *m2 != mode).all(|(_, y)| y.is_zero());
                        ok &= *x == *a && others_vanish;
                    }
                }
                let (rp, ra) = a.decompose_by_rows()?;
                let (cp, ca) = a.decompose_by_cols()?;
                Ok(ok
                    && rp.try_add(&ra)? == *a
                    && rp.is_row_palindromic()
                    && ra.is_row_antipalindromic()
                    && cp.try_add(&ca)? == *a
                    && cp.is_col_palindromic()
                    && ca.is_col_antipalindromic())
            }).odd(),
        Law::new("M15", Proved, "R = R_r R_c = R_c R_r, R(A) reverses the row-major entry sequence, R(I_n) = I_n", d2(2, 3),
            |d| Ok(vec![matrix("A", d.n(), d.m())]),
            |cx, c| {
                let a = c.m(0);
                let r = a.reverse_full();
                let id = Matrix::identity(cx.tag, cx.dims.n());
                Ok(r == a.reverse_cols().reverse_rows()
                    && r == a.reverse_rows().reverse_cols()
                    && r == Matrix::from_flat(a.rows(), a.cols(), &a.flatten().reverse())?
                    && id.reverse_full() == id)
            }),
        Law::new("M16", Proved, "R(AB) = R(A) R(B) and R(Aᵀ) = R(A)ᵀ", d3(2, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                Ok(a.matmul(b)?.reverse_full() == a.reverse_full().matmul(&b.reverse_full())?
                    && a.transpose().reverse_full() == a.reverse_full().transpose())
            }),
        Law::new("M17", Proved, "det R(A) = det A, Tr R(A) = Tr A, R(A)⁻¹ = R(A⁻¹)", d1(2),
            |d| Ok(vec![matrix("A", d.n(), d.n())]),
            |_, c| {
                let a = c.m(0);
                let r = a.reverse_full();
                let inverse_ok = if is_invertible(a)? {
                    r.inverse()? == a.inverse()?.reverse_full()
                } else {
                    !is_invertible(&r)?
                };
                Ok(r.det()? == a.det()? && r.trace()? == a.trace()? && inverse_ok)
            }),
        Law::new("M18", Proved, "pal·pal and anti·anti are palindromic, pal·anti is antipalindromic (full reversal)", d3(2, 2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let ab = a.matmul(b)?;
                let (ap, aa, bp, ba) = (a.is_palindromic(), a.is_antipalindromic(), b.is_palindromic(), b.is_antipalindromic());
                Ok(implies(ap && bp, ab.is_palindromic())
                    && implies(aa && ba, ab.is_palindromic())
                    && implies(ap && ba, ab.is_antipalindromic()))
            }),
        Law::new("M19", Proved, "A = (A + R A)/2 + (A - R A)/2 uniquely in W_p ⊕ W_a", d2(2, 3),
            |d| Ok(vec![matrix("A", d.n(), d.m())]),
            |_, c| {
                let a = c.m(0);
                let (p, q) = a.decompose_full()?;
                Ok(p.try_add(&q)? == *a
                    && p.is_palindromic()
                    && q.is_antipalindromic()
                    && implies(a.is_palindromic(), p == *a && q.is_zero())
                    && implies(a.is_antipalindromic(), q == *a && p.is_zero()))
            }).odd(),
        Law::new("M20", Proved, "the ten symmetry subspaces of k×l matrices have the stated dimensions for k <= n, l <= m", d2(5, 5),
            |_| Ok(vec![]),
            |cx, _| {
                for k in 0..=cx.dims.n() {
                    for l in 0..=cx.dims.m() {
                        for mode in SymmetryMode::ALL {
                            let basis = symmetry_basis(k, l, mode, cx.tag)?;
                            let flat: Vec<Vector> = basis.iter().map(Matrix::flatten).collect();
                            let want = mode_dimension(mode, k, l);
                            if basis.len() != want
                                || family_rank(cx.tag, &flat) != want
                                || !basis.iter().all(|b| b.satisfies(mode))
                            {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }).odd(),
        // generalized cross product
        Law::new("X1", Proved, "the generalized product of two vectors in K^3 is the classical cross product", Dims::default(),
            |_| Ok(vec![vector("v", 3), vector("w", 3)]),
            |_, c| {
                let (v, w) = (c.v(0), c.v(1));
                Ok(generalized_cross(&[v.clone(), w.clone()])? == v.cross3(w)?)
            }),
        Law::new("X2", Proved, "minor(R_r M, k) = R_r(minor(M, n-k+1))", d1(3),
            |d| need(d.n() >= 2, "n >= 2").map(|_| vec![matrix("M", d.n() - 1, d.n())]),
            |cx, c| {
                let (n, mm) = (cx.dims.n(), c.m(0));
                let rev = mm.reverse_rows();
                for k in 1..=n {
                    if minor_drop_col(&rev, k)? != minor_drop_col(mm, n - k + 1)?.reverse_rows() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        Law::new("X3", Proved, "×(R M_1, …, R M_{n-1}) = (-1)^ceil(3n/2) R(×(M_1, …, M_{n-1}))", d1(3),
            |d| need(d.n() >= 2, "n >= 2").map(|_| vec![matrix("M", d.n() - 1, d.n())]),
            |cx, c| {
                let mm = c.m(0);
                let lhs = generalized_cross(&mm.reverse_rows().row_vectors())?;
                let sign = cx.int(cross_reversal_sign(cx.dims.n()));
                Ok(lhs == generalized_cross(&mm.row_vectors())?.reverse().scale(&sign)?)
            }),
        Law::new("X4", Proved, "n >= 4: the product of n-1 palindromic (or n-1 antipalindromic) vectors vanishes", d1(4),
            |d| {
                need(d.n() >= 4, "n >= 4")?;
                Ok(vec![vector("free", (d.n() - 1) * d.n().div_ceil(2))])
            },
            |cx, c| {
                let n = cx.dims.n();
                let (half, free) = (n.div_ceil(2), c.v(0).entries());
                let block = |i: usize| &free[i * half..(i + 1) * half];
                let pal: Vec<Vector> = (0..n - 1).map(|i| palindromic_from_free(cx.tag, n, block(i))).collect();
                let anti: Vec<Vector> = (0..n - 1).map(|i| antipalindromic_from_free(cx.tag, n, &block(i)[..n / 2])).collect();
                Ok(generalized_cross(&pal)?.is_zero() && generalized_cross(&anti)?.is_zero())
            }),
        // blocks
        Law::new("B1", Proved, "R(A ⋄_b B) = R(B) ⋄_b R(A)", d3(2, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                Ok(a.paste_blocks(b)?.reverse_full() == b.reverse_full().paste_blocks(&a.reverse_full())?)
            }),
        Law::new("B2", Proved, "(A ⋄_b B) ⋄_b C = A ⋄_b (B ⋄_b C)", d3(1, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p()), matrix("C", d.p(), d.n())]),
            |_, c| {
                let (a, b, cm) = (c.m(0), c.m(1), c.m(2));
                Ok(a.paste_blocks(b)?.paste_blocks(cm)? == a.paste_blocks(&b.paste_blocks(cm)?)?)
            }),
        Law::new("B3", Proved, "(A ⋄_b B)ᵀ = Aᵀ ⋄_b Bᵀ", d3(2, 2, 1),
            |d| Ok(vec![matrix("A", d.n(), d.m()), matrix("B", d.m(), d.p())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                Ok(a.paste_blocks(b)?.transpose() == a.transpose().paste_blocks(&b.transpose())?)
            }),
        Law::new("B4", Proved, "det(A ⋄_b B) = det A det B", d2(2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.n()), matrix("B", d.m(), d.m())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                Ok(a.paste_blocks(b)?.det()? == a.det()? * b.det()?)
            }),
        Law::new("B5", Proved, "Tr(A ⋄_b B) = Tr A + Tr B", d2(2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.n()), matrix("B", d.m(), d.m())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                Ok(a.paste_blocks(b)?.trace()? == a.trace()? + b.trace()?)
            }),
        Law::new("B6", Proved, "(A ⋄_b B)⁻¹ = A⁻¹ ⋄_b B⁻¹", d2(2, 2),
            |d| Ok(vec![matrix("A", d.n(), d.n()), matrix("B", d.m(), d.m())]),
            |_, c| {
                let (a, b) = (c.m(0), c.m(1));
                let block = a.paste_blocks(b)?;
                if is_invertible(a)? && is_invertible(b)? {
                    Ok(block.inverse()? == a.inverse()?.paste_blocks(&b.inverse()?)?)
                } else {
                    Ok(!is_invertible(&block)?)
                }
            }),
    ]
}

pub fn catalog() -> &'static [Law] {
    static CATALOG: std::sync::OnceLock<Vec<Law>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(catalog_laws)
}
