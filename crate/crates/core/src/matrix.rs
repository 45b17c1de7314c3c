//! Dense exact matrices and the Pascal / Toeplitz constructors.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{common_radicand, shared_radicand, QuadScalar};
use crate::sequences::{binomial, SequenceView};

/// How a matrix was built. Pascal and Toeplitz tags are checked against the
/// entries whenever a matrix is constructed from outside data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Pascal,
    Toeplitz,
    PascalL,
    PascalU,
    QuasiBlock,
    Explicit,
    Product,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Pascal => "pascal",
            Provenance::Toeplitz => "toeplitz",
            Provenance::PascalL => "pascal_L",
            Provenance::PascalU => "pascal_U",
            Provenance::QuasiBlock => "quasi_block",
            Provenance::Explicit => "explicit",
            Provenance::Product => "product",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "pascal" => Provenance::Pascal,
            "toeplitz" => Provenance::Toeplitz,
            "pascal_L" => Provenance::PascalL,
            "pascal_U" => Provenance::PascalU,
            "quasi_block" => Provenance::QuasiBlock,
            "explicit" => Provenance::Explicit,
            "product" => Provenance::Product,
            other => return Err(Error::parse(0, format!("unknown provenance `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QuadScalar>,
    radicand: u64,
    provenance: Provenance,
}

impl ExactMatrix {
    /// Builds a matrix from row vectors, checking shape, radicands and the
    /// structural property implied by `provenance`.
    pub fn from_rows(rows: Vec<Vec<QuadScalar>>, provenance: Provenance) -> Result<Self> {
        let m = Self::from_rows_unchecked(rows, provenance)?;
        m.check_provenance()?;
        Ok(m)
    }

    fn from_rows_unchecked(rows: Vec<Vec<QuadScalar>>, provenance: Provenance) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries: Vec<QuadScalar> = rows.into_iter().flatten().collect();
        let radicand = shared_radicand(&entries)?;
        Ok(ExactMatrix {
            rows: n_rows,
            cols: n_cols,
            entries,
            radicand,
            provenance,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        provenance: Provenance,
        mut f: impl FnMut(usize, usize) -> QuadScalar,
    ) -> Result<Self> {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        Self::from_rows_unchecked(data, provenance)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, Provenance::Toeplitz, |i, j| {
            QuadScalar::from_integer((i == j) as i64)
        })
        .expect("rational entries")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, Provenance::Explicit, |_, _| QuadScalar::zero())
            .expect("rational entries")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Result<Self> {
        self.provenance = provenance;
        self.check_provenance()?;
        Ok(self)
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadScalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[QuadScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<QuadScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[QuadScalar] {
        &self.entries
    }

    fn check_provenance(&self) -> Result<()> {
        let fail = |detail: String| Error::InvalidProvenance {
            what: self.provenance.as_str().into(),
            detail,
        };
        match self.provenance {
            Provenance::Pascal => {
                for i in 1..self.rows {
                    for j in 1..self.cols {
                        if *self.get(i, j) != self.get(i - 1, j) + self.get(i, j - 1) {
                            return Err(fail(format!("recurrence fails at ({i}, {j})")));
                        }
                    }
                }
            }
            Provenance::Toeplitz => {
                for i in 1..self.rows {
                    for j in 1..self.cols {
                        if self.get(i, j) != self.get(i - 1, j - 1) {
                            return Err(fail(format!("diagonal not constant at ({i}, {j})")));
                        }
                    }
                }
            }
            Provenance::PascalL | Provenance::PascalU => {
                let lower = self.provenance == Provenance::PascalL;
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let (r, c) = if lower { (i, j) } else { (j, i) };
                        let want = QuadScalar::from_bigint(binomial(r as u64, c as i64));
                        if *self.get(i, j) != want {
                            return Err(fail(format!("entry ({i}, {j}) is not a binomial")));
                        }
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// True when every entry strictly above (or below, for `lower = false`)
    /// the diagonal is zero.
    pub fn is_triangular(&self, lower: bool) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let outside = if lower { j > i } else { i > j };
                !outside || self.get(i, j).is_zero()
            })
        })
    }

    pub fn is_unipotent_lower(&self) -> bool {
        self.is_square()
            && self.is_triangular(true)
            && (0..self.rows).all(|i| self.get(i, i).is_one())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": entries,
            "provenance": self.provenance.as_str(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::parse(0, m.to_string());
        let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| bad("missing `rows`"))?;
        let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| bad("missing `cols`"))?;
        let prov = v
            .get("provenance")
            .and_then(Value::as_str)
            .map(Provenance::parse)
            .transpose()?
            .unwrap_or(Provenance::Explicit);
        let data = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `entries`"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("entry rows must be arrays"))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .ok_or_else(|| bad("entries must be strings"))?
                            .parse::<QuadScalar>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Self::from_rows(data, prov)?;
        if m.rows as u64 != rows || (m.rows > 0 && m.cols as u64 != cols) {
            return Err(Error::DimensionMismatch(format!(
                "header says {rows}x{cols}, entries are {}x{}",
                m.rows, m.cols
            )));
        }
        Ok(m)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| cells[i * self.cols + j].len()).max().unwrap_or(0))
            .collect();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>w$}", cells[i * self.cols + j], w = widths[j]))
                .collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}

fn corner(alpha: &SequenceView, beta: &SequenceView) -> Result<QuadScalar> {
    let a0 = alpha.eval(0)?;
    let b0 = beta.eval(0)?;
    if a0 != b0 {
        return Err(Error::CornerMismatch {
            alpha0: a0.to_string(),
            beta0: b0.to_string(),
        });
    }
    Ok(a0)
}

fn borders(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<(Vec<QuadScalar>, Vec<QuadScalar>)> {
    if n == 0 {
        return Err(Error::OutOfDomain("matrix order must be at least 1".into()));
    }
    corner(alpha, beta)?;
    let a = alpha.prefix(n)?;
    let b = beta.prefix(n)?;
    shared_radicand(a.iter().chain(&b))?;
    Ok((a, b))
}

/// Generalized Pascal triangle: first column α, first row β, each interior
/// entry the sum of its northern and western neighbours.
pub fn pascal_matrix(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<ExactMatrix> {
    let (a, b) = borders(alpha, beta, n)?;
    let mut grid = vec![vec![QuadScalar::zero(); n]; n];
    for i in 0..n {
        grid[i][0] = a[i].clone();
        grid[0][i] = b[i].clone();
    }
    for i in 1..n {
        for j in 1..n {
            grid[i][j] = &grid[i - 1][j] + &grid[i][j - 1];
        }
    }
    ExactMatrix::from_rows_unchecked(grid, Provenance::Pascal)
}

/// Closed form for a single Pascal entry:
/// γ·C(i+j, j) + Σₛ (αₛ − αₛ₋₁)·C(i+j−s, j) + Σₜ (βₜ − βₜ₋₁)·C(i+j−t, i).
pub fn pascal_entry_explicit(
    alpha: &SequenceView,
    beta: &SequenceView,
    i: usize,
    j: usize,
) -> Result<QuadScalar> {
    let gamma = corner(alpha, beta)?;
    let a = alpha.prefix(i + 1)?;
    let b = beta.prefix(j + 1)?;
    shared_radicand(a.iter().chain(&b))?;
    let c = |n: usize, k: usize| QuadScalar::from_bigint(binomial(n as u64, k as i64));
    let mut acc = &gamma * &c(i + j, j);
    for s in 1..=i {
        acc = &acc + &(&(&a[s] - &a[s - 1]) * &c(i + j - s, j));
    }
    for t in 1..=j {
        acc = &acc + &(&(&b[t] - &b[t - 1]) * &c(i + j - t, i));
    }
    Ok(acc)
}

/// Toeplitz matrix with first column α and first row β.
pub fn toeplitz_matrix(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<ExactMatrix> {
    let (a, b) = borders(alpha, beta, n)?;
    ExactMatrix::from_fn(n, n, Provenance::Toeplitz, |i, j| {
        if i >= j {
            a[i - j].clone()
        } else {
            b[j - i].clone()
        }
    })
}

/// Lower triangular binomial matrix, L[i][j] = C(i, j).
pub fn pascal_l(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, Provenance::PascalL, |i, j| {
        QuadScalar::from_bigint(binomial(i as u64, j as i64))
    })
    .expect("rational entries")
}

/// Upper triangular binomial matrix, the transpose of [`pascal_l`].
pub fn pascal_u(n: usize) -> ExactMatrix {
    transpose(&pascal_l(n))
}

pub fn matmul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    common_radicand(a.radicand, b.radicand)?;
    ExactMatrix::from_fn(a.rows, b.cols, Provenance::Product, |i, j| {
        let mut acc = QuadScalar::zero();
        for k in 0..a.cols {
            let (x, y) = (a.get(i, k), b.get(k, j));
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
        acc
    })
}

pub fn transpose(a: &ExactMatrix) -> ExactMatrix {
    let provenance = match a.provenance {
        Provenance::PascalL => Provenance::PascalU,
        Provenance::PascalU => Provenance::PascalL,
        p @ (Provenance::Pascal | Provenance::Toeplitz) => p,
        _ => Provenance::Explicit,
    };
    ExactMatrix::from_fn(a.cols, a.rows, provenance, |i, j| a.get(j, i).clone())
        .expect("entries already share a radicand")
}

/// Top-left `k×k` block.
pub fn leading_principal(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    if k == 0 || k > a.rows || k > a.cols {
        return Err(Error::DimensionMismatch(format!(
            "leading principal block of order {k} from a {}x{} matrix",
            a.rows, a.cols
        )));
    }
    let provenance = match a.provenance {
        p @ (Provenance::Pascal | Provenance::Toeplitz | Provenance::PascalL | Provenance::PascalU) => p,
        _ => Provenance::Explicit,
    };
    ExactMatrix::from_fn(k, k, provenance, |i, j| a.get(i, j).clone())
}

/// Inverse of a unipotent lower triangular matrix by forward substitution.
pub fn unit_lower_inverse(l: &ExactMatrix) -> Result<ExactMatrix> {
    if !l.is_unipotent_lower() {
        return Err(Error::NotUnipotentTriangular);
    }
    let n = l.rows;
    let mut inv = vec![vec![QuadScalar::zero(); n]; n];
    // column j of the inverse solves L x = e_j
    for j in 0..n {
        inv[j][j] = QuadScalar::one();
        for i in j + 1..n {
            let mut acc = QuadScalar::zero();
            for k in j..i {
                if !l.get(i, k).is_zero() {
                    acc = &acc + &(l.get(i, k) * &inv[k][j]);
                }
            }
            inv[i][j] = -acc;
        }
    }
    ExactMatrix::from_rows_unchecked(inv, Provenance::Explicit)
}

/// Block matrix `[[A, B], [C, SE]]`.
pub fn quasi_block(
    a: &ExactMatrix,
    b: &ExactMatrix,
    c: &ExactMatrix,
    se: &ExactMatrix,
) -> Result<ExactMatrix> {
    let k = a.rows;
    let m = se.rows;
    let k_of = |x: &ExactMatrix| if x.rows == 0 { 0 } else { x.cols };
    if k == 0 {
        return Ok(se.clone());
    }
    if a.cols != k
        || !se.is_square()
        || (m > 0 && (b.rows != k || b.cols != m || c.rows != m || k_of(c) != k))
    {
        return Err(Error::DimensionMismatch(format!(
            "blocks A {}x{}, B {}x{}, C {}x{}, SE {}x{} do not conform",
            a.rows, a.cols, b.rows, b.cols, c.rows, c.cols, se.rows, se.cols
        )));
    }
    let n = k + m;
    let mut grid = vec![vec![QuadScalar::zero(); n]; n];
    for (i, row) in grid.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = match (i < k, j < k) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - k).clone(),
                (false, true) => c.get(i - k, j).clone(),
                (false, false) => se.get(i - k, j - k).clone(),
            };
        }
    }
    ExactMatrix::from_rows_unchecked(grid, Provenance::QuasiBlock)
}

/// Block diagonal `A ⊕ B`.
pub fn direct_sum(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    let b_block = ExactMatrix::zeros(a.rows, b.cols);
    let c_block = ExactMatrix::zeros(b.rows, a.cols);
    let m = quasi_block(a, &b_block, &c_block, b)?;
    m.with_provenance(Provenance::Explicit)
}

/// Pascal or Toeplitz constructor selected by kind name.
pub fn build_kind(kind: &str, alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<ExactMatrix> {
    match kind {
        "pascal" => pascal_matrix(alpha, beta, n),
        "toeplitz" => toeplitz_matrix(alpha, beta, n),
        other => Err(Error::parse(0, format!("unknown matrix kind `{other}`"))),
    }
}

#[cfg(test)]
pub(crate) fn integer_matrix(rows: &[&[i64]]) -> ExactMatrix {
    let data = rows
        .iter()
        .map(|r| r.iter().map(|&x| QuadScalar::from_integer(x)).collect())
        .collect();
    ExactMatrix::from_rows(data, Provenance::Explicit).expect("integer rows")
}
