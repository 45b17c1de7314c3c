//! Sequence catalog, parametric builders and the binomial transforms.
//!
//! `hat` is the inverse binomial transform and `check` the binomial
//! transform; they are mutually inverse on every prefix. `tilde` flips the
//! sign of odd-indexed terms.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{shared_radicand, QuadScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSequence {
    /// F = (0, 1, 1, 2, 3, 5, …)
    Fibonacci,
    /// F* = (1, 1, 2, 3, 5, …)
    FibonacciStar,
    /// L = (2, 1, 3, 4, 7, …)
    Lucas,
    /// C = (1, 1, 2, 5, 14, …)
    Catalan,
    /// I = (0!, 1!, 2!, …)
    Factorial,
    /// I* = (1!, 2!, 3!, …)
    FactorialStar,
}

impl NamedSequence {
    pub const ALL: [NamedSequence; 6] = [
        NamedSequence::Fibonacci,
        NamedSequence::FibonacciStar,
        NamedSequence::Lucas,
        NamedSequence::Catalan,
        NamedSequence::Factorial,
        NamedSequence::FactorialStar,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "fib",
            NamedSequence::FibonacciStar => "fib1",
            NamedSequence::Lucas => "lucas",
            NamedSequence::Catalan => "catalan",
            NamedSequence::Factorial => "fact",
            NamedSequence::FactorialStar => "fact1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transform {
    Hat,
    Check,
    Tilde,
}

impl Transform {
    pub fn keyword(self) -> &'static str {
        match self {
            Transform::Hat => "hat",
            Transform::Check => "check",
            Transform::Tilde => "tilde",
        }
    }

    pub fn apply(self, prefix: &[QuadScalar]) -> Vec<QuadScalar> {
        match self {
            Transform::Hat => hat_transform(prefix),
            Transform::Check => check_transform(prefix),
            Transform::Tilde => tilde_transform(prefix),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceSpec {
    Named(NamedSequence),
    /// a + i·d
    Arithmetical { a: QuadScalar, d: QuadScalar },
    /// ρ^i
    Geometric { ratio: QuadScalar },
    /// (−1)^i·a
    Alternating { a: QuadScalar },
    /// i²
    Square,
    Constant { c: QuadScalar },
    /// (2^i − 1)·a + c
    Power2Affine { a: QuadScalar, c: QuadScalar },
    /// 2^(i−1)·(i·a + 2c)
    Power2Weighted { a: QuadScalar, c: QuadScalar },
    Literal(Vec<QuadScalar>),
    Transformed { inner: Box<SequenceSpec>, transform: Transform },
}

impl SequenceSpec {
    pub fn fibonacci() -> Self {
        SequenceSpec::Named(NamedSequence::Fibonacci)
    }

    pub fn lucas() -> Self {
        SequenceSpec::Named(NamedSequence::Lucas)
    }

    pub fn constant(c: impl Into<QuadScalar>) -> Self {
        SequenceSpec::Constant { c: c.into() }
    }

    pub fn arithmetical(a: impl Into<QuadScalar>, d: impl Into<QuadScalar>) -> Self {
        SequenceSpec::Arithmetical {
            a: a.into(),
            d: d.into(),
        }
    }

    pub fn geometric(ratio: impl Into<QuadScalar>) -> Self {
        SequenceSpec::Geometric { ratio: ratio.into() }
    }

    pub fn literal<T: Into<QuadScalar>>(values: impl IntoIterator<Item = T>) -> Result<Self> {
        let values: Vec<QuadScalar> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::OutOfDomain("literal sequences must be non-empty".into()));
        }
        Ok(SequenceSpec::Literal(values))
    }

    pub fn hat(self) -> Self {
        self.transformed(Transform::Hat)
    }

    pub fn check(self) -> Self {
        self.transformed(Transform::Check)
    }

    pub fn tilde(self) -> Self {
        self.transformed(Transform::Tilde)
    }

    pub fn transformed(self, transform: Transform) -> Self {
        SequenceSpec::Transformed {
            inner: Box::new(self),
            transform,
        }
    }

    fn parameters(&self) -> Vec<&QuadScalar> {
        match self {
            SequenceSpec::Named(_) | SequenceSpec::Square => vec![],
            SequenceSpec::Arithmetical { a, d } => vec![a, d],
            SequenceSpec::Geometric { ratio } => vec![ratio],
            SequenceSpec::Alternating { a } | SequenceSpec::Constant { c: a } => vec![a],
            SequenceSpec::Power2Affine { a, c } | SequenceSpec::Power2Weighted { a, c } => vec![a, c],
            SequenceSpec::Literal(v) => v.iter().collect(),
            SequenceSpec::Transformed { inner, .. } => inner.parameters(),
        }
    }

    /// The radicand shared by every parameter of the spec.
    pub fn radicand(&self) -> Result<u64> {
        shared_radicand(self.parameters())
    }

    /// Number of available terms; `None` for infinite sequences.
    pub fn len(&self) -> Option<usize> {
        match self {
            SequenceSpec::Literal(v) => Some(v.len()),
            SequenceSpec::Transformed { inner, .. } => inner.len(),
            _ => None,
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Named(n) => write!(f, "{}", n.keyword()),
            SequenceSpec::Arithmetical { a, d } => write!(f, "arith:{a},{d}"),
            SequenceSpec::Geometric { ratio } => write!(f, "geom:{ratio}"),
            SequenceSpec::Alternating { a } => write!(f, "alt:{a}"),
            SequenceSpec::Square => write!(f, "square"),
            SequenceSpec::Constant { c } => write!(f, "const:{c}"),
            SequenceSpec::Power2Affine { a, c } => write!(f, "p2aff:{a},{c}"),
            SequenceSpec::Power2Weighted { a, c } => write!(f, "p2wt:{a},{c}"),
            SequenceSpec::Literal(v) => {
                write!(f, "lit:")?;
                for (k, x) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            SequenceSpec::Transformed { inner, transform } => {
                write!(f, "{}({inner})", transform.keyword())
            }
        }
    }
}

fn split_top_level(s: &str, offset: usize) -> Result<Vec<(usize, &str)>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(offset + k, "unbalanced `)`"));
                }
            }
            ',' if depth == 0 => {
                parts.push((offset + start, &s[start..k]));
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push((offset + start, &s[start..]));
    Ok(parts)
}

fn parse_scalar_at(s: &str, offset: usize) -> Result<QuadScalar> {
    s.parse::<QuadScalar>().map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: offset + pos,
            msg,
        },
        other => other,
    })
}

fn parse_spec(text: &str, offset: usize) -> Result<SequenceSpec> {
    let lead = text.len() - text.trim_start().len();
    let s = text.trim();
    let offset = offset + lead;
    for t in [Transform::Hat, Transform::Check, Transform::Tilde] {
        let head = format!("{}(", t.keyword());
        if let Some(body) = s.strip_prefix(head.as_str()) {
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(offset + s.len(), "expected closing `)`"))?;
            let inner = parse_spec(body, offset + head.len())?;
            return Ok(inner.transformed(t));
        }
    }
    let (name, args) = match s.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (s, None),
    };
    let arg_offset = offset + name.len() + 1;
    let args = match args {
        Some(a) => split_top_level(a, arg_offset)?
            .into_iter()
            .map(|(pos, part)| parse_scalar_at(part, pos))
            .collect::<Result<Vec<_>>>()?,
        None => vec![],
    };
    let want = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::parse(
                arg_offset,
                format!("`{name}` takes {n} argument(s), got {}", args.len()),
            ))
        }
    };
    let spec = match name {
        "fib" | "fib1" | "lucas" | "catalan" | "fact" | "fact1" => {
            want(0)?;
            let named = NamedSequence::ALL
                .into_iter()
                .find(|n| n.keyword() == name)
                .expect("keyword listed");
            SequenceSpec::Named(named)
        }
        "square" => {
            want(0)?;
            SequenceSpec::Square
        }
        "arith" => {
            want(2)?;
            SequenceSpec::Arithmetical {
                a: args[0].clone(),
                d: args[1].clone(),
            }
        }
        "geom" => {
            want(1)?;
            SequenceSpec::Geometric {
                ratio: args[0].clone(),
            }
        }
        "alt" => {
            want(1)?;
            SequenceSpec::Alternating { a: args[0].clone() }
        }
        "const" => {
            want(1)?;
            SequenceSpec::Constant { c: args[0].clone() }
        }
        "p2aff" => {
            want(2)?;
            SequenceSpec::Power2Affine {
                a: args[0].clone(),
                c: args[1].clone(),
            }
        }
        "p2wt" => {
            want(2)?;
            SequenceSpec::Power2Weighted {
                a: args[0].clone(),
                c: args[1].clone(),
            }
        }
        "lit" => {
            if args.is_empty() {
                return Err(Error::parse(arg_offset, "literal needs at least one value"));
            }
            SequenceSpec::Literal(args)
        }
        other => return Err(Error::parse(offset, format!("unknown sequence `{other}`"))),
    };
    spec.radicand()?;
    Ok(spec)
}

impl FromStr for SequenceSpec {
    type Err = Error;

    /// Parses the sequence mini-language, e.g. `hat(lit:0,1,3,8,21)`.
    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s, 0)
    }
}

/// Lazily evaluated sequence with a shared prefix cache.
#[derive(Debug)]
pub struct SequenceView {
    spec: SequenceSpec,
    inner: Option<Arc<SequenceView>>,
    memo: Mutex<Vec<QuadScalar>>,
}

impl SequenceView {
    pub fn new(spec: SequenceSpec) -> Result<Self> {
        spec.radicand()?;
        if let SequenceSpec::Literal(v) = &spec {
            if v.is_empty() {
                return Err(Error::OutOfDomain("literal sequences must be non-empty".into()));
            }
        }
        let inner = match &spec {
            SequenceSpec::Transformed { inner, .. } => {
                Some(Arc::new(SequenceView::new((**inner).clone())?))
            }
            _ => None,
        };
        Ok(SequenceView {
            spec,
            inner,
            memo: Mutex::new(Vec::new()),
        })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn eval(&self, i: usize) -> Result<QuadScalar> {
        let mut memo = self.memo.lock().expect("sequence memo poisoned");
        while memo.len() <= i {
            let k = memo.len();
            let next = self.term(k, &memo)?;
            memo.push(next);
        }
        Ok(memo[i].clone())
    }

    /// The first `n` terms.
    pub fn prefix(&self, n: usize) -> Result<Vec<QuadScalar>> {
        if n == 0 {
            return Ok(vec![]);
        }
        self.eval(n - 1)?;
        let memo = self.memo.lock().expect("sequence memo poisoned");
        Ok(memo[..n].to_vec())
    }

    fn term(&self, k: usize, prev: &[QuadScalar]) -> Result<QuadScalar> {
        let int = |n: i64| QuadScalar::from_integer(n);
        let kk = int(k as i64);
        Ok(match &self.spec {
            SequenceSpec::Named(named) => match named {
                NamedSequence::Fibonacci if k < 2 => kk,
                NamedSequence::FibonacciStar if k < 2 => int(1),
                NamedSequence::Lucas if k == 0 => int(2),
                NamedSequence::Lucas if k == 1 => int(1),
                NamedSequence::Fibonacci | NamedSequence::FibonacciStar | NamedSequence::Lucas => {
                    &prev[k - 1] + &prev[k - 2]
                }
                NamedSequence::Catalan if k == 0 => int(1),
                NamedSequence::Catalan => {
                    &prev[k - 1] * &QuadScalar::from_ratio(2 * (2 * k as i64 - 1), k as i64 + 1)
                }
                NamedSequence::Factorial if k == 0 => int(1),
                NamedSequence::Factorial => &prev[k - 1] * &kk,
                NamedSequence::FactorialStar if k == 0 => int(1),
                NamedSequence::FactorialStar => &prev[k - 1] * &int(k as i64 + 1),
            },
            SequenceSpec::Arithmetical { a, d } => a + &(d * &kk),
            SequenceSpec::Geometric { ratio } => match prev.last() {
                None => int(1),
                Some(p) => p * ratio,
            },
            SequenceSpec::Alternating { a } => {
                if k.is_multiple_of(2) {
                    a.clone()
                } else {
                    -a
                }
            }
            SequenceSpec::Square => int((k * k) as i64),
            SequenceSpec::Constant { c } => c.clone(),
            SequenceSpec::Power2Affine { a, c } => {
                let p = QuadScalar::from_bigint((BigInt::one() << k) - 1);
                &(&p * a) + c
            }
            SequenceSpec::Power2Weighted { a, c } => {
                let p = QuadScalar::from_bigint(BigInt::one() << k) * QuadScalar::from_ratio(1, 2);
                &p * &(&(&kk * a) + &(c + c))
            }
            SequenceSpec::Literal(v) => v
                .get(k)
                .cloned()
                .ok_or(Error::IndexOutOfRange { index: k, len: v.len() })?,
            SequenceSpec::Transformed { transform, .. } => {
                let inner = self.inner.as_ref().expect("transformed view has inner");
                let prefix = inner.prefix(k + 1)?;
                transform_term(*transform, &prefix, k)
            }
        })
    }
}

impl Clone for SequenceView {
    fn clone(&self) -> Self {
        let memo = self.memo.lock().expect("sequence memo poisoned").clone();
        SequenceView {
            spec: self.spec.clone(),
            inner: self.inner.clone(),
            memo: Mutex::new(memo),
        }
    }
}

impl TryFrom<SequenceSpec> for SequenceView {
    type Error = Error;

    fn try_from(spec: SequenceSpec) -> Result<Self> {
        SequenceView::new(spec)
    }
}

/// C(n, k), zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

fn transform_term(transform: Transform, prefix: &[QuadScalar], i: usize) -> QuadScalar {
    match transform {
        Transform::Tilde => {
            if i.is_multiple_of(2) {
                prefix[i].clone()
            } else {
                -&prefix[i]
            }
        }
        Transform::Hat | Transform::Check => {
            let row = binomial_row(i);
            let mut acc = QuadScalar::zero();
            for (k, c) in row.into_iter().enumerate() {
                let negative = transform == Transform::Hat && (i + k) % 2 == 1;
                let c = QuadScalar::from_bigint(if negative { -c } else { c });
                acc = &acc + &(&c * &prefix[k]);
            }
            acc
        }
    }
}

/// α̂ᵢ = Σₖ (−1)^(i+k)·C(i,k)·αₖ
pub fn hat_transform(prefix: &[QuadScalar]) -> Vec<QuadScalar> {
    (0..prefix.len())
        .map(|i| transform_term(Transform::Hat, prefix, i))
        .collect()
}

/// α̌ᵢ = Σₖ C(i,k)·αₖ
pub fn check_transform(prefix: &[QuadScalar]) -> Vec<QuadScalar> {
    (0..prefix.len())
        .map(|i| transform_term(Transform::Check, prefix, i))
        .collect()
}

/// α̃ᵢ = (−1)^i·αᵢ
pub fn tilde_transform(prefix: &[QuadScalar]) -> Vec<QuadScalar> {
    (0..prefix.len())
        .map(|i| transform_term(Transform::Tilde, prefix, i))
        .collect()
}

/// Companion sequences of the six named sequences: for each base `S`, the
/// sequence whose binomial transform is `S` and the one whose inverse
/// binomial transform is `S`, labelled with their OEIS ids.
pub fn companion_table() -> Vec<(&'static str, SequenceSpec, Transform, NamedSequence)> {
    use NamedSequence::*;
    let check_of = [
        ("A039834", Fibonacci),
        ("A039834", FibonacciStar),
        ("A061084", Lucas),
        ("A005043", Catalan),
        ("A000166", Factorial),
        ("A000255", FactorialStar),
    ];
    let hat_of = [
        ("A001906", Fibonacci),
        ("A001519", FibonacciStar),
        ("A005248", Lucas),
        ("A007317", Catalan),
        ("A000522", Factorial),
        ("A001339", FactorialStar),
    ];
    // check(α) = S means α = hat(S), and vice versa
    check_of
        .into_iter()
        .map(|(id, s)| (id, SequenceSpec::Named(s).hat(), Transform::Check, s))
        .chain(
            hat_of
                .into_iter()
                .map(|(id, s)| (id, SequenceSpec::Named(s).check(), Transform::Hat, s)),
        )
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<QuadScalar> {
        v.iter().map(|&x| QuadScalar::from_integer(x)).collect()
    }

    fn view(s: &str) -> SequenceView {
        SequenceView::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn named_prefixes() {
        assert_eq!(view("fib").prefix(7).unwrap(), ints(&[0, 1, 1, 2, 3, 5, 8]));
        assert_eq!(view("fib1").prefix(6).unwrap(), ints(&[1, 1, 2, 3, 5, 8]));
        assert_eq!(view("lucas").prefix(7).unwrap(), ints(&[2, 1, 3, 4, 7, 11, 18]));
        assert_eq!(view("catalan").prefix(7).unwrap(), ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(view("fact").prefix(7).unwrap(), ints(&[1, 1, 2, 6, 24, 120, 720]));
        assert_eq!(view("fact1").prefix(6).unwrap(), ints(&[1, 2, 6, 24, 120, 720]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(view("fib").eval(6).unwrap(), QuadScalar::from_integer(8));
        assert_eq!(view("lucas").eval(0).unwrap(), QuadScalar::from_integer(2));
        let a = view("arith:3,0");
        for i in [0, 5, 17] {
            assert_eq!(a.eval(i).unwrap(), QuadScalar::from_integer(3));
        }
    }

    #[test]
    fn parametric_terms() {
        assert_eq!(view("geom:1/2").prefix(4).unwrap()[3], QuadScalar::from_ratio(1, 8));
        assert_eq!(view("geom:0").prefix(3).unwrap(), ints(&[1, 0, 0]));
        assert_eq!(view("alt:3").prefix(4).unwrap(), ints(&[3, -3, 3, -3]));
        assert_eq!(view("square").prefix(5).unwrap(), ints(&[0, 1, 4, 9, 16]));
        assert_eq!(view("p2aff:1,2").prefix(5).unwrap(), ints(&[2, 3, 5, 9, 17]));
        // 2^(i-1)(i + 2)
        assert_eq!(view("p2wt:1,1").prefix(4).unwrap(), ints(&[1, 3, 8, 20]));
    }

    #[test]
    fn literal_out_of_range() {
        let v = view("lit:1,2");
        assert_eq!(v.eval(1).unwrap(), QuadScalar::from_integer(2));
        assert_eq!(v.eval(2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
        assert!(view("hat(lit:1,2)").eval(2).is_err());
    }

    #[test]
    fn hat_examples() {
        assert_eq!(hat_transform(&ints(&[0, 1, 3, 8, 21])), ints(&[0, 1, 1, 2, 3]));
        assert_eq!(hat_transform(&ints(&[2, 3, 7, 18, 47])), ints(&[2, 1, 3, 4, 7]));
        let c = QuadScalar::golden_ratio();
        let hc = hat_transform(&vec![c.clone(); 6]);
        assert_eq!(hc[0], c);
        assert!(hc[1..].iter().all(QuadScalar::is_zero));
    }

    #[test]
    fn check_examples() {
        assert_eq!(
            check_transform(&ints(&[0, 1, -1, 2, -3, 5, -8])),
            ints(&[0, 1, 1, 2, 3, 5, 8])
        );
        assert_eq!(check_transform(&ints(&[1, 0, 1, 1, 3, 6])), ints(&[1, 1, 2, 5, 14, 42]));
        let g = QuadScalar::from_ratio(-7, 3);
        let mut v = vec![QuadScalar::zero(); 5];
        v[0] = g.clone();
        assert_eq!(check_transform(&v), vec![g; 5]);
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_transform(&ints(&[0, 1, 1, 2, 3])), ints(&[0, -1, 1, -2, 3]));
        let a = ints(&[4, -2, 9, 1]);
        assert_eq!(tilde_transform(&tilde_transform(&a)), a);
        assert_eq!(tilde_transform(&ints(&[0, 0, 0])), ints(&[0, 0, 0]));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(9, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            "arith:1,2".parse::<SequenceSpec>().unwrap(),
            SequenceSpec::arithmetical(1, 2)
        );
        assert_eq!(view("hat(lit:0,1,3,8,21)").prefix(5).unwrap(), ints(&[0, 1, 1, 2, 3]));
        assert_eq!(
            "geom:1/2".parse::<SequenceSpec>().unwrap(),
            SequenceSpec::geometric(QuadScalar::from_ratio(1, 2))
        );
        let nested: SequenceSpec = "hat(check(fib))".parse().unwrap();
        assert_eq!(nested, SequenceSpec::fibonacci().check().hat());
        let surd: SequenceSpec = "lit:1/2 + 1/2*sqrt(5),sqrt(20)".parse().unwrap();
        assert_eq!(surd.to_string(), "lit:1/2 + 1/2*sqrt(5),2*sqrt(5)");
    }

    #[test]
    fn parse_errors_carry_position() {
        match "hat(arith:1,x)".parse::<SequenceSpec>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 12),
            other => panic!("unexpected {other:?}"),
        }
        assert!("wibble".parse::<SequenceSpec>().is_err());
        assert!("arith:1".parse::<SequenceSpec>().is_err());
        assert!("hat(fib".parse::<SequenceSpec>().is_err());
        assert!("lit:".parse::<SequenceSpec>().is_err());
        assert!(matches!(
            "lit:sqrt(2),sqrt(3)".parse::<SequenceSpec>(),
            Err(Error::RadicandMismatch { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "fib", "fact1", "arith:1,-2", "geom:1/2", "alt:3", "square", "const:-1",
            "p2aff:1/2 - 1/2*sqrt(5),1", "p2wt:1,2", "lit:0,i,2", "tilde(hat(check(lucas)))",
        ] {
            let spec: SequenceSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<SequenceSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn delta_identity() {
        for i in 0..=30u64 {
            for j in 0..=i {
                let mut acc = BigInt::zero();
                for k in 0..=(i - j) {
                    let term = binomial(i, (k + j) as i64) * binomial(k + j, j as i64);
                    if k % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                let expected = if i == j { BigInt::one() } else { BigInt::zero() };
                assert_eq!(acc, expected, "i = {i}, j = {j}");
            }
        }
    }

    #[test]
    fn corollary_hat_claims() {
        // arithmetical: (a, d, 0, 0, …)
        let h = view("hat(arith:5,-3)").prefix(8).unwrap();
        assert_eq!(h[..2], ints(&[5, -3])[..]);
        assert!(h[2..].iter().all(QuadScalar::is_zero));
        // alternating: a(−2)^k
        let h = view("hat(alt:3)").prefix(8).unwrap();
        let want: Vec<_> = (0..8).map(|k| QuadScalar::from_integer(3 * (-2i64).pow(k))).collect();
        assert_eq!(h, want);
        // square: (0, 1, 2, 0, …)
        let h = view("hat(square)").prefix(9).unwrap();
        assert_eq!(h[..3], ints(&[0, 1, 2])[..]);
        assert!(h[3..].iter().all(QuadScalar::is_zero));
        // geometric: check(ρ^i) = (1+ρ)^i
        let rho = QuadScalar::from_ratio(-2, 3);
        let h = view("check(geom:-2/3)").prefix(8).unwrap();
        let one_plus = &QuadScalar::one() + &rho;
        let want: Vec<_> = (0..8).map(|k| one_plus.pow(k)).collect();
        assert_eq!(h, want);
        // (2^i − 1)a + c ↦ (c, a, a, …)
        let h = view("hat(p2aff:1/2 - 1/2*sqrt(5),7)").prefix(6).unwrap();
        assert_eq!(h[0], QuadScalar::from_integer(7));
        assert!(h[1..].iter().all(|x| *x == QuadScalar::golden_conjugate()));
        // 2^(i−1)(ia + 2c) ↦ (c, c+a, c+2a, …)
        let h = view("hat(p2wt:3,-2)").prefix(6).unwrap();
        let want: Vec<_> = (0..6).map(|k| QuadScalar::from_integer(-2 + 3 * k)).collect();
        assert_eq!(h, want);
    }

    #[test]
    fn companion_prefixes() {
        let printed: &[(&str, &[i64])] = &[
            ("A039834", &[0, 1, -1, 2, -3, 5, -8]),
            ("A039834", &[1, 0, 1, -1, 2, -3, 5, -8]),
            ("A061084", &[2, -1, 3, -4, 7, -11, 18]),
            ("A005043", &[1, 0, 1, 1, 3, 6, 15]),
            ("A000166", &[1, 0, 1, 2, 9, 44, 265]),
            ("A000255", &[1, 1, 3, 11, 53, 309, 2119]),
            ("A001906", &[0, 1, 3, 8, 21, 55, 144]),
            ("A001519", &[1, 2, 5, 13, 34, 89, 233]),
            ("A005248", &[2, 3, 7, 18, 47, 123, 322]),
            ("A007317", &[1, 2, 5, 15, 51, 188, 731]),
            ("A000522", &[1, 2, 5, 16, 65, 326, 1957]),
            ("A001339", &[1, 3, 11, 49, 261, 1631]),
        ];
        let table = companion_table();
        assert_eq!(table.len(), printed.len());
        for ((id, spec, transform, base), (pid, terms)) in table.into_iter().zip(printed) {
            assert_eq!(id, *pid);
            let n = terms.len();
            let companion = SequenceView::new(spec).unwrap().prefix(n).unwrap();
            assert_eq!(companion, ints(terms), "{id}");
            let base_prefix = SequenceView::new(SequenceSpec::Named(base)).unwrap().prefix(n).unwrap();
            assert_eq!(transform.apply(&companion), base_prefix, "{id}");
            let back = match transform {
                Transform::Check => hat_transform(&base_prefix),
                _ => check_transform(&base_prefix),
            };
            assert_eq!(back, companion);
        }
    }

    #[test]
    fn view_is_shareable_across_threads() {
        let v = Arc::new(view("hat(lucas)"));
        let expected = view("hat(lucas)").prefix(25).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let v = Arc::clone(&v);
                std::thread::spawn(move || (0..25).rev().map(|i| v.eval((i + t) % 25).unwrap()).count())
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(v.prefix(25).unwrap(), expected);
    }
}
