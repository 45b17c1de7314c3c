//! Matrix families whose leading principal minors run through Fibonacci
//! and Lucas numbers, including the quasi-Pascal family `P^[r,s]` whose
//! minors are `F^ε(nr + s)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::determinant::det_exact;
use crate::error::{Error, Result};
use crate::matrix::{
    direct_sum, leading_principal, matmul, pascal_l, pascal_matrix, quasi_block, toeplitz_matrix,
    transpose, unit_lower_inverse, ExactMatrix, Provenance,
};
use crate::scalar::{sqrt_bigint, QuadScalar};
use crate::sequences::{SequenceSpec, SequenceView};

/// Selects Fibonacci (`+`) or Lucas (`−`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn symbol(self) -> char {
        match self {
            Epsilon::Plus => '+',
            Epsilon::Minus => '-',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "fib" => Ok(Epsilon::Plus),
            "-" | "minus" | "lucas" => Ok(Epsilon::Minus),
            other => Err(Error::parse(0, format!("epsilon must be + or -, got `{other}`"))),
        }
    }
}

pub fn fib(n: u64) -> BigInt {
    fib_pair(n).0
}

// (F(n), F(n+1)) by fast doubling
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

pub fn lucas(n: u64) -> BigInt {
    // L(n) = F(n−1) + F(n+1) = 2F(n+1) − F(n)
    let (f, f1) = fib_pair(n);
    f1 * 2 - f
}

/// F^ε(n).
pub fn fib_eps(eps: Epsilon, n: u64) -> BigInt {
    match eps {
        Epsilon::Plus => fib(n),
        Epsilon::Minus => lucas(n),
    }
}

/// φ_{r,s} = ⌈F^ε(2r+s) / F^ε(r+s)⌉.
pub fn phi_rs(r: u64, s: u64, eps: Epsilon) -> Result<BigInt> {
    check_rs(r, s)?;
    Ok(fib_eps(eps, 2 * r + s).div_ceil(&fib_eps(eps, r + s)))
}

/// ψ_{r,s} = √(φ_{r,s}·F^ε(r+s) − F^ε(2r+s)).
pub fn psi_rs(r: u64, s: u64, eps: Epsilon) -> Result<QuadScalar> {
    let slack = phi_rs(r, s, eps)? * fib_eps(eps, r + s) - fib_eps(eps, 2 * r + s);
    sqrt_bigint(&slack)
}

fn check_rs(_r: u64, s: u64) -> Result<()> {
    if s == 0 {
        return Err(Error::OutOfDomain("s must be a positive integer".into()));
    }
    Ok(())
}

/// √((−1)^r), fixed as 1 for even r and +i for odd r.
pub fn sqrt_sign(r: u64) -> QuadScalar {
    if r.is_multiple_of(2) {
        QuadScalar::one()
    } else {
        QuadScalar::i()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MinorFamily {
    /// Tridiagonal with unit diagonal, λᵢ above and −λᵢ⁻¹ below.
    TridiagonalLambda(SequenceSpec),
    /// T((3, t, 0, …), (3, t, 0, …)).
    StrangP { t: i8 },
    /// T((2, t, 1, 1, …), (2, t, 0, 0, …)).
    CahillQ { t: i8 },
    /// Toeplitz items 1–5; `t` only matters for item 2.
    Prop3 { item: u8, t: i8 },
    /// T((1, Φ, Φ, …), (1, φ, φ, …)).
    GriffinP,
    /// T((0, −Φ, −Φ, …), (0, −φ, −φ, …)).
    GriffinQ,
    /// Pascal items 1–8.
    Corollary6 { item: u8 },
    /// The quasi-Pascal matrix P^[r,s].
    Theorem4 { r: u64, s: u64, eps: Epsilon },
    /// The quasi-Toeplitz matrix T^[r,s] conjugate to P^[r,s].
    Theorem4Toeplitz { r: u64, s: u64, eps: Epsilon },
}

impl fmt::Display for MinorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorFamily::TridiagonalLambda(l) => write!(f, "tridiagonal[lambda={l}]"),
            MinorFamily::StrangP { t } => write!(f, "strang[t={t}]"),
            MinorFamily::CahillQ { t } => write!(f, "cahill[t={t}]"),
            MinorFamily::Prop3 { item: 2, t } => write!(f, "prop3[k=2,t={t}]"),
            MinorFamily::Prop3 { item, .. } => write!(f, "prop3[k={item}]"),
            MinorFamily::GriffinP => write!(f, "griffin-p"),
            MinorFamily::GriffinQ => write!(f, "griffin-q"),
            MinorFamily::Corollary6 { item } => write!(f, "cor6[k={item}]"),
            MinorFamily::Theorem4 { r, s, eps } => write!(f, "theorem4[r={r},s={s},eps={}]", eps.symbol()),
            MinorFamily::Theorem4Toeplitz { r, s, eps } => {
                write!(f, "theorem4-toeplitz[r={r},s={s},eps={}]", eps.symbol())
            }
        }
    }
}

fn spec(s: &str) -> SequenceSpec {
    s.parse().expect("built-in sequence spec")
}

fn check_t(t: i8) -> Result<()> {
    if t == 1 || t == -1 {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("t must be 1 or -1, got {t}")))
    }
}

impl MinorFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            MinorFamily::StrangP { t } | MinorFamily::CahillQ { t } => check_t(*t),
            MinorFamily::Prop3 { item, t } => {
                if !(1..=5).contains(item) {
                    return Err(Error::UnknownFamily(format!("prop3 item {item}")));
                }
                if *item == 2 {
                    check_t(*t)?;
                }
                Ok(())
            }
            MinorFamily::Corollary6 { item } if !(1..=8).contains(item) => {
                Err(Error::UnknownFamily(format!("cor6 item {item}")))
            }
            MinorFamily::Theorem4 { r, s, .. } | MinorFamily::Theorem4Toeplitz { r, s, .. } => check_rs(*r, *s),
            MinorFamily::TridiagonalLambda(l) => l.radicand().map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Border sequences `(kind, α, β)` for families built directly by the
    /// generic Pascal / Toeplitz constructors.
    pub fn border_sequences(&self) -> Option<(&'static str, SequenceSpec, SequenceSpec)> {
        let phi = "1/2 + 1/2*sqrt(5)";
        let phi_c = "1/2 - 1/2*sqrt(5)";
        let neg_phi = "-1/2 - 1/2*sqrt(5)";
        let neg_phi_c = "-1/2 + 1/2*sqrt(5)";
        let toeplitz = |a: String, b: String| Some(("toeplitz", spec(&a), spec(&b)));
        let pascal = |a: String, b: String| Some(("pascal", spec(&a), spec(&b)));
        match self {
            MinorFamily::StrangP { t } | MinorFamily::Prop3 { item: 2, t } => {
                toeplitz(format!("hat(arith:3,{t})"), format!("hat(arith:3,{t})"))
            }
            MinorFamily::Prop3 { item: 1, .. } => toeplitz("hat(arith:1,i)".into(), "hat(arith:1,i)".into()),
            MinorFamily::Prop3 { item: 3, .. } => toeplitz("hat(arith:1,-1)".into(), "hat(arith:1,1)".into()),
            MinorFamily::Prop3 { item: 4, .. } => toeplitz("hat(p2aff:1,2)".into(), "hat(arith:2,-1)".into()),
            MinorFamily::Prop3 { item: 5, .. } => toeplitz("hat(p2aff:1,2)".into(), "hat(arith:2,1)".into()),
            MinorFamily::GriffinP => toeplitz(format!("hat(p2aff:{phi_c},1)"), format!("hat(p2aff:{phi},1)")),
            MinorFamily::GriffinQ => {
                toeplitz(format!("hat(p2aff:{neg_phi_c},0)"), format!("hat(p2aff:{neg_phi},0)"))
            }
            MinorFamily::Corollary6 { item } => match item {
                1 => pascal("arith:1,i".into(), "arith:1,i".into()),
                2 => pascal("arith:3,-1".into(), "arith:3,-1".into()),
                3 => pascal("arith:3,1".into(), "arith:3,1".into()),
                4 => pascal("arith:1,-1".into(), "arith:1,1".into()),
                5 => pascal("p2aff:1,2".into(), "arith:2,-1".into()),
                6 => pascal("p2aff:1,2".into(), "arith:2,1".into()),
                7 => pascal(format!("p2aff:{phi_c},1"), format!("p2aff:{phi},1")),
                8 => pascal(format!("p2aff:{neg_phi_c},0"), format!("p2aff:{neg_phi},0")),
                _ => None,
            },
            _ => None,
        }
    }

    /// The value the family's n-th leading principal minor is claimed to take.
    pub fn expected_minor(&self, n: u64) -> Option<BigInt> {
        let f = |k: u64| Some(fib(k));
        match self {
            MinorFamily::TridiagonalLambda(_) => f(n + 1),
            MinorFamily::StrangP { .. } => f(2 * n + 2),
            MinorFamily::CahillQ { t: 1 } => f(n + 2),
            MinorFamily::CahillQ { .. } => f(2 * n + 1),
            MinorFamily::Prop3 { item, .. } => match item {
                1 | 3 => f(n + 1),
                2 => f(2 * n + 2),
                4 => f(2 * n + 1),
                5 => f(n + 2),
                _ => None,
            },
            MinorFamily::GriffinP => f(n + 1),
            MinorFamily::GriffinQ => f(n - 1),
            MinorFamily::Corollary6 { item } => match item {
                1 | 4 | 7 => f(n + 1),
                2 | 3 => f(2 * n + 2),
                5 => f(2 * n + 1),
                6 => f(n + 2),
                8 => f(n - 1),
                _ => None,
            },
            MinorFamily::Theorem4 { r, s, eps } | MinorFamily::Theorem4Toeplitz { r, s, eps } => {
                Some(fib_eps(*eps, n * r + s))
            }
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::parse(0, format!("family `{family}` needs {flag}")))
}

/// Resolves a family by name plus its optional parameters.
pub fn parse_family(
    name: &str,
    r: Option<u64>,
    s: Option<u64>,
    eps: Option<&str>,
    t: Option<i8>,
    k: Option<u8>,
    lambda: Option<&str>,
) -> Result<MinorFamily> {
    let t_or_one = t.unwrap_or(1);
    let theorem4 = || -> Result<(u64, u64, Epsilon)> {
        let eps = Epsilon::parse(eps.unwrap_or("+"))?;
        Ok((need(r, "--r", name)?, need(s, "--s", name)?, eps))
    };
    let family = match name {
        "tridiagonal" | "tridiagonal_lambda" => {
            MinorFamily::TridiagonalLambda(lambda.unwrap_or("const:1").parse()?)
        }
        "strang" | "strang_P" => MinorFamily::StrangP { t: t_or_one },
        "cahill" | "cahill_Q" => MinorFamily::CahillQ { t: t_or_one },
        "prop3" | "prop3_item" => MinorFamily::Prop3 { item: need(k, "--k", name)?, t: t_or_one },
        "griffin-p" | "griffin_P" => MinorFamily::GriffinP,
        "griffin-q" | "griffin_Q" => MinorFamily::GriffinQ,
        "cor6" | "corollary6_item" => MinorFamily::Corollary6 { item: need(k, "--k", name)? },
        "theorem4" => {
            let (r, s, eps) = theorem4()?;
            MinorFamily::Theorem4 { r, s, eps }
        }
        "theorem4-toeplitz" => {
            let (r, s, eps) = theorem4()?;
            MinorFamily::Theorem4Toeplitz { r, s, eps }
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    family.validate()?;
    Ok(family)
}

fn tridiagonal(lambda: &SequenceSpec, n: usize) -> Result<ExactMatrix> {
    let view = SequenceView::new(lambda.clone())?;
    let lam = view.prefix(n.saturating_sub(1))?;
    if let Some(index) = lam.iter().position(QuadScalar::is_zero) {
        return Err(Error::ZeroLambda { index });
    }
    let inv: Vec<QuadScalar> = lam.iter().map(|l| l.recip()).collect::<Result<_>>()?;
    ExactMatrix::from_fn(n, n, Provenance::Explicit, |i, j| {
        if i == j {
            QuadScalar::one()
        } else if j == i + 1 {
            lam[i].clone()
        } else if i == j + 1 {
            -&inv[j]
        } else {
            QuadScalar::zero()
        }
    })
}

fn cahill_q(t: i8, n: usize) -> Result<ExactMatrix> {
    // literal borders long enough for the requested order
    let len = n.max(2);
    let tail = |fill: i64| {
        let mut v = vec![QuadScalar::from_integer(2), QuadScalar::from_integer(t as i64)];
        v.extend((2..len).map(|_| QuadScalar::from_integer(fill)));
        v
    };
    let a = SequenceView::new(SequenceSpec::Literal(tail(1)))?;
    let b = SequenceView::new(SequenceSpec::Literal(tail(0)))?;
    toeplitz_matrix(&a, &b, n)
}

/// 2×2 corner `[[F^ε(r+s), ψ], [ψ, φ]]` shared by both Theorem-4 forms.
fn theorem4_corner(r: u64, s: u64, eps: Epsilon) -> Result<ExactMatrix> {
    let top = QuadScalar::from_bigint(fib_eps(eps, r + s));
    let phi = QuadScalar::from_bigint(phi_rs(r, s, eps)?);
    let psi = psi_rs(r, s, eps)?;
    ExactMatrix::from_rows(vec![vec![top, psi.clone()], vec![psi, phi]], Provenance::Explicit)
}

fn theorem4_matrix(r: u64, s: u64, eps: Epsilon, n: usize, toeplitz_form: bool) -> Result<ExactMatrix> {
    check_rs(r, s)?;
    let corner = theorem4_corner(r, s, eps)?;
    if n <= 2 {
        return leading_principal(&corner, n);
    }
    let m = n - 2;
    let w = sqrt_sign(r);
    let base = QuadScalar::from_bigint(lucas(r));
    let alpha = SequenceSpec::Arithmetical { a: base, d: w.clone() };
    let border = ExactMatrix::from_fn(2, m, Provenance::Explicit, |i, j| {
        if i == 1 && (j == 0 || !toeplitz_form) {
            w.clone()
        } else {
            QuadScalar::zero()
        }
    })?;
    let se = if toeplitz_form {
        let beta = SequenceView::new(alpha.hat())?;
        toeplitz_matrix(&beta, &beta, m)?
    } else {
        let alpha = SequenceView::new(alpha)?;
        pascal_matrix(&alpha, &alpha, m)?
    };
    quasi_block(&corner, &border, &transpose(&border), &se)
}

/// The n×n leading truncation of the family's infinite matrix.
pub fn build_family(family: &MinorFamily, n: usize) -> Result<ExactMatrix> {
    family.validate()?;
    if n == 0 {
        return Err(Error::OutOfDomain("matrix order must be at least 1".into()));
    }
    match family {
        MinorFamily::TridiagonalLambda(lambda) => tridiagonal(lambda, n),
        MinorFamily::CahillQ { t } => cahill_q(*t, n),
        MinorFamily::Theorem4 { r, s, eps } => theorem4_matrix(*r, *s, *eps, n, false),
        MinorFamily::Theorem4Toeplitz { r, s, eps } => theorem4_matrix(*r, *s, *eps, n, true),
        other => {
            let (kind, a, b) = other
                .border_sequences()
                .ok_or_else(|| Error::UnknownFamily(other.to_string()))?;
            let (a, b) = (SequenceView::new(a)?, SequenceView::new(b)?);
            match kind {
                "pascal" => pascal_matrix(&a, &b, n),
                _ => toeplitz_matrix(&a, &b, n),
            }
        }
    }
}

/// `[det of the leading n×n block for n = 1..=max_n]`.
pub fn principal_minor_sequence(family: &MinorFamily, max_n: usize) -> Result<Vec<QuadScalar>> {
    let m = build_family(family, max_n)?;
    (1..=max_n)
        .map(|n| det_exact(&leading_principal(&m, n)?))
        .collect()
}

/// Checks `T^[r,s](n) = L̃ · P^[r,s](n) · L̃ᵗ` with `L̃ = I₂ ⊕ L(n−2)⁻¹`.
pub fn theorem4_conjugation_check(r: u64, s: u64, eps: Epsilon, n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::OutOfDomain("conjugation check needs n >= 3".into()));
    }
    let p = theorem4_matrix(r, s, eps, n, false)?;
    let t = theorem4_matrix(r, s, eps, n, true)?;
    let l_tilde = direct_sum(&ExactMatrix::identity(2), &unit_lower_inverse(&pascal_l(n - 2))?)?;
    let conj = matmul(&matmul(&l_tilde, &p)?, &transpose(&l_tilde))?;
    Ok(conj.entries() == t.entries())
}
