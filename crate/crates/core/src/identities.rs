//! Closed-form determinant identities for generalized Pascal triangles and
//! Toeplitz matrices, each checkable against [`det_exact`] over a grid.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::determinant::det_exact;
use crate::error::{Error, Result};
use crate::matrix::{build_kind, ExactMatrix};
use crate::scalar::QuadScalar;
use crate::sequences::{NamedSequence, SequenceSpec, SequenceView, Transform};

/// One grid point: parameter names with their values, in axis order.
pub type Params = Vec<(String, QuadScalar)>;

/// Border sequences of the matrix an identity talks about.
pub struct Borders {
    pub kind: &'static str,
    pub alpha: SequenceSpec,
    pub beta: SequenceSpec,
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub source: &'static str,
    pub param_domain: &'static str,
    pub borders: fn(&Params, usize) -> Result<Borders>,
    pub expected: fn(&Params, usize) -> Result<QuadScalar>,
    /// Recovers parameters from a concrete `(kind, α, β)`, if it is an instance.
    pub recognize: fn(&str, &SequenceSpec, &SequenceSpec) -> Option<Params>,
    pub default_grid: fn() -> ParamGrid,
    pub n_range: RangeInclusive<usize>,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("param_domain", &self.param_domain)
            .field("n_range", &self.n_range)
            .finish()
    }
}

impl IdentityRecord {
    pub fn build(&self, params: &Params, n: usize) -> Result<ExactMatrix> {
        let b = (self.borders)(params, n)?;
        build_kind(b.kind, &SequenceView::new(b.alpha)?, &SequenceView::new(b.beta)?, n)
    }

    pub fn expected_at(&self, params: &Params, n: usize) -> Result<QuadScalar> {
        if !self.n_range.contains(&n) {
            return Err(Error::OutOfDomain(format!(
                "{} holds for n in {}..={}",
                self.id,
                self.n_range.start(),
                self.n_range.end()
            )));
        }
        (self.expected)(params, n)
    }

    /// Runs every grid point for every n in `n_range`.
    pub fn verify(&self, grid: &ParamGrid, n_range: RangeInclusive<usize>) -> Result<VerificationReport> {
        let lo = *n_range.start().max(self.n_range.start());
        let hi = *n_range.end();
        if lo > hi {
            return Err(Error::OutOfDomain(format!(
                "{} needs n >= {}, requested range is empty",
                self.id,
                self.n_range.start()
            )));
        }
        let points = grid.points();
        let cases: Vec<(&Params, usize)> = points
            .iter()
            .flat_map(|p| (lo..=hi).map(move |n| (p, n)))
            .collect();
        let outcomes: Vec<Option<Failure>> = cases.par_iter().map(|&(p, n)| self.check_case(p, n)).collect();
        Ok(VerificationReport {
            id: self.id.to_string(),
            cases_run: cases.len(),
            first_failure: outcomes.into_iter().flatten().next(),
        })
    }

    fn check_case(&self, params: &Params, n: usize) -> Option<Failure> {
        let expected = (self.expected)(params, n);
        let actual = self.build(params, n).and_then(|m| det_exact(&m));
        let failure = |error| Failure {
            params: params.clone(),
            n,
            expected: expected.clone().ok(),
            actual: actual.clone().ok(),
            error,
        };
        match (&expected, &actual) {
            (Ok(e), Ok(a)) if e == a => None,
            (Ok(_), Ok(_)) => Some(failure(None)),
            (Err(e), _) | (_, Err(e)) => Some(failure(Some(e.clone()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub params: Params,
    pub n: usize,
    pub expected: Option<QuadScalar>,
    pub actual: Option<QuadScalar>,
    pub error: Option<Error>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<QuadScalar>| v.as_ref().map_or("-".to_string(), ToString::to_string);
        write!(f, "{} n={}", format_params(&self.params), self.n)?;
        write!(f, " expected={} actual={}", show(&self.expected), show(&self.actual))?;
        if let Some(e) = &self.error {
            write!(f, " error={e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub cases_run: usize,
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn to_json(&self) -> Value {
        let failure = self.first_failure.as_ref().map(|f| {
            let params: serde_json::Map<String, Value> =
                f.params.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect();
            json!({
                "params": params,
                "n": f.n,
                "expected": f.expected.as_ref().map(ToString::to_string),
                "actual": f.actual.as_ref().map(ToString::to_string),
                "error": f.error.as_ref().map(ToString::to_string),
            })
        });
        json!({
            "id": self.id,
            "cases_run": self.cases_run,
            "pass": self.passed(),
            "first_failure": failure,
        })
    }
}

fn format_params(p: &Params) -> String {
    if p.is_empty() {
        return "()".into();
    }
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// Cartesian product of named value lists, iterated with the first axis outermost.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamGrid {
    pub axes: Vec<(String, Vec<QuadScalar>)>,
}

impl ParamGrid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn axis(mut self, name: &str, values: impl IntoIterator<Item = QuadScalar>) -> Self {
        self.axes.push((name.to_string(), values.into_iter().collect()));
        self
    }

    pub fn int_axis(self, name: &str, range: RangeInclusive<i64>) -> Self {
        self.axis(name, range.map(QuadScalar::from_integer))
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|(_, v)| v.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Params> {
        let mut out: Vec<Params> = vec![Vec::new()];
        for (name, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|p| {
                    values.iter().map(move |v| {
                        let mut q = p.clone();
                        q.push((name.clone(), v.clone()));
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Replaces the axes of `self` by same-named axes of `overrides`.
    pub fn overridden_by(&self, overrides: &ParamGrid) -> Result<ParamGrid> {
        let mut grid = self.clone();
        for (name, values) in &overrides.axes {
            let slot = grid
                .axes
                .iter_mut()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::OutOfDomain(format!("unknown parameter `{name}`")))?;
            slot.1 = values.clone();
        }
        Ok(grid)
    }
}

/// `name=v1,v2,…;name=lo..hi` with scalar values and inclusive integer ranges.
impl FromStr for ParamGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut grid = ParamGrid::new();
        let mut offset = 0;
        for part in s.split(';') {
            let here = offset;
            offset += part.len() + 1;
            if part.trim().is_empty() {
                continue;
            }
            let (name, values) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(here, "expected name=values"))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::parse(here, "empty parameter name"));
            }
            let mut axis = Vec::new();
            for item in values.split(',') {
                let item = item.trim();
                if let Some((lo, hi)) = item.split_once("..") {
                    let bound = |t: &str| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::parse(here, format!("bad range bound `{t}`")))
                    };
                    axis.extend((bound(lo)?..=bound(hi)?).map(QuadScalar::from_integer));
                } else {
                    let v = item
                        .parse::<QuadScalar>()
                        .map_err(|e| Error::parse(here, format!("bad value `{item}` for {name}: {e}")))?;
                    axis.push(v);
                }
            }
            grid.axes.push((name.to_string(), axis));
        }
        Ok(grid)
    }
}

fn param<'a>(p: &'a Params, name: &str) -> Result<&'a QuadScalar> {
    p.iter()
        .find(|(k, _)| k == name)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::OutOfDomain(format!("missing parameter `{name}`")))
}

fn small_index(p: &Params, name: &str) -> Result<u64> {
    param(p, name)?
        .to_bigint()
        .and_then(|b| u64::try_from(b).ok())
        .ok_or_else(|| Error::OutOfDomain(format!("`{name}` must be a non-negative integer")))
}

fn params(items: &[(&str, &QuadScalar)]) -> Params {
    items.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

fn exp(n: usize) -> u32 {
    u32::try_from(n).expect("matrix order fits in u32")
}

fn pascal(alpha: SequenceSpec, beta: SequenceSpec) -> Result<Borders> {
    Ok(Borders { kind: "pascal", alpha, beta })
}

fn geometric_axis() -> Vec<QuadScalar> {
    let mut v: Vec<QuadScalar> = (-2..=3).map(QuadScalar::from_integer).collect();
    v.push(QuadScalar::from_ratio(1, 2));
    v
}

fn geometric_grid() -> ParamGrid {
    ParamGrid::new().axis("rho", geometric_axis()).axis("sigma", geometric_axis())
}

fn geometric_borders(p: &Params) -> Result<(SequenceSpec, SequenceSpec)> {
    Ok((
        SequenceSpec::geometric(param(p, "rho")?.clone()),
        SequenceSpec::geometric(param(p, "sigma")?.clone()),
    ))
}

fn recognize_geometric(kind: &str, want: &str, a: &SequenceSpec, b: &SequenceSpec) -> Option<Params> {
    match (a, b) {
        (SequenceSpec::Geometric { ratio: r }, SequenceSpec::Geometric { ratio: s }) if kind == want => {
            Some(params(&[("rho", r), ("sigma", s)]))
        }
        _ => None,
    }
}

/// Printed three-case form for `α_i = (2^i − 1)a + c`, `β_j = (2^j − 1)b + c`,
/// as it appears in the source, including its `a ≠ b` branch.
pub fn pow2_affine_printed(a: &QuadScalar, b: &QuadScalar, c: &QuadScalar, n: usize) -> Result<QuadScalar> {
    if a == b && b == c {
        return Ok(if n == 1 { c.clone() } else { QuadScalar::zero() });
    }
    if a == b {
        let lead = c + &(a * &QuadScalar::from_integer(n as i64 - 1));
        return Ok(&lead * &(c - a).pow(exp(n) - 1));
    }
    let denom = b - a;
    let left = b.checked_div(&denom)?.checked_mul(&(c - a).pow(exp(n)))?;
    let right = a.checked_div(&denom)?.checked_mul(&(c - b).pow(exp(n)))?;
    left.checked_add(&right)
}

/// Three-case form with the `a ≠ b` branch as
/// `(b(c − a)^n − a(c − b)^n) / (b − a)`, which reduces to `c` at n = 1.
pub fn pow2_affine_closed_form(a: &QuadScalar, b: &QuadScalar, c: &QuadScalar, n: usize) -> Result<QuadScalar> {
    if a == b {
        return pow2_affine_printed(a, b, c, n);
    }
    let num = (b * &(c - a).pow(exp(n))).checked_sub(&(a * &(c - b).pow(exp(n))))?;
    num.checked_div(&(b - a))
}

/// `(−1)^{n+1}(a + b)^{n−2}[c(a + b) + (n − 1)ab]` for n ≥ 2.
pub fn pow2_weighted_closed_form(a: &QuadScalar, b: &QuadScalar, c: &QuadScalar, n: usize) -> Result<QuadScalar> {
    if n < 2 {
        return Err(Error::OutOfDomain("the weighted power-of-two form needs n >= 2".into()));
    }
    let s = a.checked_add(b)?;
    let inner = (c * &s).checked_add(&(&QuadScalar::from_integer(n as i64 - 1) * &(a * b)))?;
    let sign = if n.is_multiple_of(2) { -QuadScalar::one() } else { QuadScalar::one() };
    Ok(&(&sign * &s.pow(exp(n) - 2)) * &inner)
}

/// `D(n) = Σ_{k<n} (−d)^k β̂_k D(n − k − 1)` with `D(0) = 1`, the determinant
/// of `P(α, β)` for arithmetical `α_i = a + i·d` and `β₀ = a`.
pub fn corollary2_recurrence(a: &QuadScalar, d: &QuadScalar, beta_hat: &[QuadScalar], n: usize) -> Result<QuadScalar> {
    if beta_hat.len() < n {
        return Err(Error::InsufficientPrefix { needed: n, got: beta_hat.len() });
    }
    if n > 0 && &beta_hat[0] != a {
        return Err(Error::CornerMismatch {
            alpha0: a.to_string(),
            beta0: beta_hat[0].to_string(),
        });
    }
    let neg_d = -d;
    let powers: Vec<QuadScalar> = (0..n).map(|k| neg_d.pow(exp(k))).collect();
    let mut dets = vec![QuadScalar::one()];
    for m in 1..=n {
        let mut acc = QuadScalar::zero();
        for k in 0..m {
            let term = powers[k].checked_mul(&beta_hat[k])?.checked_mul(&dets[m - k - 1])?;
            acc = acc.checked_add(&term)?;
        }
        dets.push(acc);
    }
    Ok(dets.swap_remove(n))
}

const PARTNER_LEN_MIN: usize = 12;

/// Seeded integer partner sequence starting at `gamma`.
pub fn partner_sequence(gamma: &QuadScalar, index: u64, len: usize) -> Vec<QuadScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + index);
    let mut v = vec![gamma.clone()];
    v.extend((1..len.max(PARTNER_LEN_MIN)).map(|_| QuadScalar::from_integer(rng.gen_range(-9..=9))));
    v
}

fn named(n: NamedSequence) -> SequenceSpec {
    SequenceSpec::Named(n)
}

fn recognize_named(kind: &str, a: &SequenceSpec, b: &SequenceSpec, want: (&SequenceSpec, &SequenceSpec)) -> Option<Params> {
    (kind == "pascal" && a == want.0 && b == want.1).then(Vec::new)
}

fn power_of_two(n: usize, negative: bool) -> QuadScalar {
    let v = QuadScalar::from_integer(2).pow(exp(n) - 2);
    if negative {
        -v
    } else {
        v
    }
}

/// The registry, in a fixed order.
pub fn register_identities() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord {
            id: "geometric-pascal",
            source: "Pascal triangle with geometric borders rho^i and sigma^j",
            param_domain: "rho, sigma in Q(i, sqrt D)",
            borders: |p, _| {
                let (a, b) = geometric_borders(p)?;
                pascal(a, b)
            },
            expected: |p, n| {
                let (r, s) = (param(p, "rho")?, param(p, "sigma")?);
                Ok((&(r + s) - &(r * s)).pow(exp(n) - 1))
            },
            recognize: |k, a, b| recognize_geometric(k, "pascal", a, b),
            default_grid: geometric_grid,
            n_range: 1..=8,
        },
        IdentityRecord {
            id: "arith-alt",
            source: "Pascal triangle with arithmetical column a + i*d and alternating row (-1)^j a",
            param_domain: "a, d in Q(i, sqrt D)",
            borders: |p, _| {
                let (a, d) = (param(p, "a")?, param(p, "d")?);
                pascal(
                    SequenceSpec::arithmetical(a.clone(), d.clone()),
                    SequenceSpec::Alternating { a: a.clone() },
                )
            },
            expected: |p, n| {
                let (a, d) = (param(p, "a")?, param(p, "d")?);
                Ok(a * &(&(d + d) + a).pow(exp(n) - 1))
            },
            recognize: |k, a, b| match (a, b) {
                (SequenceSpec::Arithmetical { a, d }, SequenceSpec::Alternating { a: a2 }) if k == "pascal" && a == a2 => {
                    Some(params(&[("a", a), ("d", d)]))
                }
                _ => None,
            },
            default_grid: || ParamGrid::new().int_axis("a", -3..=3).int_axis("d", -3..=3),
            n_range: 1..=8,
        },
        IdentityRecord {
            id: "arith-square",
            source: "Pascal triangle with column i*d and row j^2; D(n) = -d D(n-2) + 2d^2 D(n-3)",
            param_domain: "d in Q(i, sqrt D); bases D(0)=1, D(1)=0, D(2)=-d",
            borders: |p, _| {
                pascal(
                    SequenceSpec::arithmetical(0, param(p, "d")?.clone()),
                    SequenceSpec::Square,
                )
            },
            expected: |p, n| {
                let d = param(p, "d")?;
                match n {
                    0 => Ok(QuadScalar::one()),
                    1 => Ok(QuadScalar::zero()),
                    2 => Ok(-d),
                    _ => {
                        // recurrence over oracle values of the two smaller orders
                        let rec = register_identities()
                            .into_iter()
                            .find(|r| r.id == "arith-square")
                            .expect("registered");
                        let oracle = |m: usize| -> Result<QuadScalar> {
                            if m == 0 {
                                Ok(QuadScalar::one())
                            } else {
                                det_exact(&rec.build(p, m)?)
                            }
                        };
                        let two_d2 = &QuadScalar::from_integer(2) * &(d * d);
                        Ok(&(&-d * &oracle(n - 2)?) + &(&two_d2 * &oracle(n - 3)?))
                    }
                }
            },
            recognize: |k, a, b| match (a, b) {
                (SequenceSpec::Arithmetical { a, d }, SequenceSpec::Square) if k == "pascal" && a.is_zero() => {
                    Some(params(&[("d", d)]))
                }
                _ => None,
            },
            default_grid: || ParamGrid::new().int_axis("d", -3..=3),
            n_range: 1..=10,
        },
        IdentityRecord {
            id: "geometric-toeplitz",
            source: "Toeplitz matrix with geometric borders rho^i and sigma^j",
            param_domain: "rho, sigma in Q(i, sqrt D)",
            borders: |p, _| {
                let (alpha, beta) = geometric_borders(p)?;
                Ok(Borders { kind: "toeplitz", alpha, beta })
            },
            expected: |p, n| {
                let (r, s) = (param(p, "rho")?, param(p, "sigma")?);
                Ok((&QuadScalar::one() - &(r * s)).pow(exp(n) - 1))
            },
            recognize: |k, a, b| recognize_geometric(k, "toeplitz", a, b),
            default_grid: geometric_grid,
            n_range: 1..=8,
        },
        IdentityRecord {
            id: "const-seq",
            source: "Pascal triangle with one constant border gamma",
            param_domain: "gamma in Q(i, sqrt D); partner = seeded random border index; side 0 = constant column, 1 = constant row",
            borders: |p, n| {
                let gamma = param(p, "gamma")?;
                let partner = SequenceSpec::Literal(partner_sequence(gamma, small_index(p, "partner")?, n));
                let constant = SequenceSpec::constant(gamma.clone());
                match small_index(p, "side")? {
                    0 => pascal(constant, partner),
                    1 => pascal(partner, constant),
                    _ => Err(Error::OutOfDomain("side must be 0 or 1".into())),
                }
            },
            expected: |p, n| Ok(param(p, "gamma")?.pow(exp(n))),
            recognize: |k, a, b| match (a, b) {
                (SequenceSpec::Constant { c }, _) | (_, SequenceSpec::Constant { c }) if k == "pascal" => {
                    Some(params(&[("gamma", c)]))
                }
                _ => None,
            },
            default_grid: || {
                ParamGrid::new()
                    .int_axis("gamma", -3..=3)
                    .int_axis("partner", 0..=4)
                    .int_axis("side", 0..=1)
            },
            n_range: 1..=8,
        },
        IdentityRecord {
            id: "pow2-affine",
            source: "Pascal triangle with borders (2^i - 1)a + c and (2^j - 1)b + c",
            param_domain: "a, b, c in Q(i, sqrt D); cases a=b=c, a=b!=c, a!=b",
            borders: |p, _| {
                let (a, b, c) = (param(p, "a")?, param(p, "b")?, param(p, "c")?);
                pascal(
                    SequenceSpec::Power2Affine { a: a.clone(), c: c.clone() },
                    SequenceSpec::Power2Affine { a: b.clone(), c: c.clone() },
                )
            },
            expected: |p, n| pow2_affine_closed_form(param(p, "a")?, param(p, "b")?, param(p, "c")?, n),
            recognize: |k, a, b| match (a, b) {
                (SequenceSpec::Power2Affine { a, c }, SequenceSpec::Power2Affine { a: b, c: c2 })
                    if k == "pascal" && c == c2 =>
                {
                    Some(params(&[("a", a), ("b", b), ("c", c)]))
                }
                _ => None,
            },
            default_grid: || {
                ParamGrid::new()
                    .int_axis("a", -2..=2)
                    .int_axis("b", -2..=2)
                    .int_axis("c", -2..=2)
            },
            n_range: 1..=7,
        },
        IdentityRecord {
            id: "pow2-weighted",
            source: "Pascal triangle with borders 2^(i-1)(i a + 2c) and 2^(j-1)(j b + 2c)",
            param_domain: "a, b, c in Q(i, sqrt D); n >= 2",
            borders: |p, _| {
                let (a, b, c) = (param(p, "a")?, param(p, "b")?, param(p, "c")?);
                pascal(
                    SequenceSpec::Power2Weighted { a: a.clone(), c: c.clone() },
                    SequenceSpec::Power2Weighted { a: b.clone(), c: c.clone() },
                )
            },
            expected: |p, n| pow2_weighted_closed_form(param(p, "a")?, param(p, "b")?, param(p, "c")?, n),
            recognize: |k, a, b| match (a, b) {
                (SequenceSpec::Power2Weighted { a, c }, SequenceSpec::Power2Weighted { a: b, c: c2 })
                    if k == "pascal" && c == c2 =>
                {
                    Some(params(&[("a", a), ("b", b), ("c", c)]))
                }
                _ => None,
            },
            default_grid: || {
                ParamGrid::new()
                    .int_axis("a", -2..=2)
                    .int_axis("b", -2..=2)
                    .int_axis("c", -2..=2)
            },
            n_range: 2..=7,
        },
        IdentityRecord {
            id: "fib-symmetric",
            source: "symmetric Fibonacci Pascal triangle P(F, F)",
            param_domain: "none; n >= 2",
            borders: |_, _| pascal(SequenceSpec::fibonacci(), SequenceSpec::fibonacci()),
            expected: |_, n| Ok(power_of_two(n, true)),
            recognize: |k, a, b| recognize_named(k, a, b, (&SequenceSpec::fibonacci(), &SequenceSpec::fibonacci())),
            default_grid: ParamGrid::new,
            n_range: 2..=12,
        },
        IdentityRecord {
            id: "fib-skymmetric",
            source: "skymmetric Fibonacci Pascal triangle P(F, tilde F)",
            param_domain: "none; n >= 2",
            borders: |_, _| pascal(SequenceSpec::fibonacci(), SequenceSpec::fibonacci().tilde()),
            expected: |_, n| Ok(power_of_two(n, false)),
            recognize: |k, a, b| {
                recognize_named(k, a, b, (&SequenceSpec::fibonacci(), &SequenceSpec::fibonacci().transformed(Transform::Tilde)))
            },
            default_grid: ParamGrid::new,
            n_range: 2..=12,
        },
        IdentityRecord {
            id: "fibstar-factstar",
            source: "Pascal triangle P(F*, I*) with F* = (1, 1, 2, 3, ...) and I* = (1!, 2!, 3!, ...)",
            param_domain: "none; n >= 2",
            borders: |_, _| pascal(named(NamedSequence::FibonacciStar), named(NamedSequence::FactorialStar)),
            expected: |_, n| Ok(if n % 2 == 0 { QuadScalar::one() } else { -QuadScalar::one() }),
            recognize: |k, a, b| {
                recognize_named(k, a, b, (&named(NamedSequence::FibonacciStar), &named(NamedSequence::FactorialStar)))
            },
            default_grid: ParamGrid::new,
            n_range: 2..=10,
        },
    ]
}

pub fn find_identity<'a>(registry: &'a [IdentityRecord], id: &str) -> Result<&'a IdentityRecord> {
    registry
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Verifies a registered identity. `grid` overrides individual axes of the
/// record's default grid; `n_range` defaults to the record's own range.
pub fn verify_identity(
    id: &str,
    grid: Option<&ParamGrid>,
    n_range: Option<RangeInclusive<usize>>,
) -> Result<VerificationReport> {
    let registry = register_identities();
    let record = find_identity(&registry, id)?;
    let base = (record.default_grid)();
    let grid = match grid {
        Some(g) => base.overridden_by(g)?,
        None => base,
    };
    record.verify(&grid, n_range.unwrap_or_else(|| record.n_range.clone()))
}
