//! Young shapes inside a `k × (n−k)` box, Le-fillings and their rank
//! generating functions.
//!
//! `F_λ(q)` counts the Le-fillings of the shape `λ` by number of 1s. It is
//! computed three independent ways: exhaustive search, a four-term recurrence
//! on shapes, and an alternating closed form over chains `1 = t₁ < … < t_i ≤ k`.
//! Summing `F_λ` over the shapes in the box gives `A_{k,n}(q)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{qint, LaurentPoly};
use crate::{Error, Result};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_k > 0`. Trailing zeros are stripped, so two
/// shapes are equal iff they have the same nonzero parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    /// Validates that `parts` is weakly decreasing and strips trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(alloc::format!(
                "shape parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self::canonical(parts))
    }

    fn canonical(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row.
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.rows() <= rows && self.cols() <= cols
    }

    /// The transposed shape `λ'`.
    pub fn conjugate(&self) -> Self {
        let parts = (0..self.cols())
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Self { parts }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All shapes fitting in a `k × (n−k)` box, each exactly once, in
/// colexicographic order of the zero-padded tuple `(λ₁, …, λ_k)`: tuples are
/// compared on `λ_k` first, then `λ_{k−1}`, and so on. There are `C(n, k)`.
pub fn enumerate_shapes(k: usize, n: usize) -> Result<Vec<Shape>> {
    if k > n {
        return Err(Error::domain(alloc::format!(
            "shape box needs k <= n, got k = {k}, n = {n}"
        )));
    }
    let width = n - k;
    let mut out = Vec::new();
    let mut padded = alloc::vec![0usize; k];
    fill_colex(&mut padded, k, 0, width, &mut out);
    Ok(out)
}

/// Chooses `padded[pos-1]`, then the parts above it, each at least `floor`.
fn fill_colex(padded: &mut [usize], pos: usize, floor: usize, width: usize, out: &mut Vec<Shape>) {
    if pos == 0 {
        out.push(Shape::canonical(padded.to_vec()));
        return;
    }
    for v in floor..=width {
        padded[pos - 1] = v;
        fill_colex(padded, pos - 1, v, width, out);
    }
}

/// Row-major cell coordinates of a shape.
fn cells(shape: &Shape) -> impl Iterator<Item = (usize, usize)> + '_ {
    shape
        .parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
}

/// Checks the Le-property: no 0 has a 1 above it in its column and a 1 to its
/// left in its row. `filling` lists the cells row by row.
pub fn is_le_filling(shape: &Shape, filling: &[bool]) -> Result<bool> {
    if filling.len() != shape.size() {
        return Err(Error::domain(alloc::format!(
            "filling has {} cells but shape {shape} has {}",
            filling.len(),
            shape.size()
        )));
    }
    let mut one_above = alloc::vec![false; shape.cols()];
    let mut one_left = false;
    let mut row = usize::MAX;
    for ((r, c), &v) in cells(shape).zip(filling) {
        if r != row {
            row = r;
            one_left = false;
        }
        if v {
            one_above[c] = true;
            one_left = true;
        } else if one_above[c] && one_left {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Le-diagram: a shape together with a 0/1 filling having the Le-property.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeDiagram {
    shape: Shape,
    filling: Vec<bool>,
}

impl LeDiagram {
    pub fn new(shape: Shape, filling: Vec<bool>) -> Result<Self> {
        if !is_le_filling(&shape, &filling)? {
            return Err(Error::domain("filling violates the Le-property"));
        }
        Ok(Self { shape, filling })
    }

    /// The all-zero filling.
    pub fn zeros(shape: Shape) -> Self {
        let filling = alloc::vec![false; shape.size()];
        Self { shape, filling }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn filling(&self) -> &[bool] {
        &self.filling
    }

    /// Value of cell `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<bool> {
        let len = *self.shape.parts.get(row)?;
        if col >= len {
            return None;
        }
        let offset: usize = self.shape.parts[..row].iter().sum();
        Some(self.filling[offset + col])
    }

    /// Number of 1s.
    pub fn rank(&self) -> usize {
        self.filling.iter().filter(|&&b| b).count()
    }

    /// Reflection in the main diagonal. A diagram in a `k × (n−k)` box maps
    /// to one in an `(n−k) × k` box with the same rank.
    pub fn transpose(&self) -> Self {
        let shape = self.shape.conjugate();
        let filling = cells(&shape)
            .map(|(r, c)| self.get(c, r).unwrap_or(false))
            .collect();
        let out = Self { shape, filling };
        debug_assert!(is_le_filling(&out.shape, &out.filling).unwrap_or(false));
        out
    }
}

/// One row per line, `0`/`1` characters, rows left-justified.
impl fmt::Display for LeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cursor = self.filling.iter();
        for (r, &len) in self.shape.parts.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            for v in cursor.by_ref().take(len) {
                f.write_str(if *v { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for LeDiagram {
    type Err = Error;

    /// Rejects row lengths that increase downwards, characters other than
    /// `0`/`1`, and fillings violating the Le-property. Blank lines are only
    /// allowed at the end.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut filling = Vec::new();
        let mut seen_blank = false;
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                seen_blank = true;
                continue;
            }
            if seen_blank {
                return Err(Error::parse(alloc::format!(
                    "line {}: row after a blank line",
                    lineno + 1
                )));
            }
            for ch in line.chars() {
                match ch {
                    '0' => filling.push(false),
                    '1' => filling.push(true),
                    _ => {
                        return Err(Error::parse(alloc::format!(
                            "line {}: unexpected character {ch:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            if parts.last().is_some_and(|&prev| prev < line.len()) {
                return Err(Error::parse(alloc::format!(
                    "line {}: row lengths must be weakly decreasing",
                    lineno + 1
                )));
            }
            parts.push(line.len());
        }
        let shape = Shape::new(parts).map_err(|e| Error::parse(alloc::format!("{e}")))?;
        LeDiagram::new(shape, filling).map_err(|e| Error::parse(alloc::format!("{e}")))
    }
}

/// Every Le-diagram whose shape fits in the `k × (n−k)` box.
pub fn le_diagrams(k: usize, n: usize) -> Result<Vec<LeDiagram>> {
    let mut out = Vec::new();
    for shape in enumerate_shapes(k, n)? {
        let mut filling = Vec::with_capacity(shape.size());
        let cells: Vec<_> = cells(&shape).collect();
        let mut one_above = alloc::vec![false; shape.cols()];
        search_fillings(&cells, 0, &mut one_above, false, &mut filling, &mut |f| {
            out.push(LeDiagram {
                shape: shape.clone(),
                filling: f.to_vec(),
            });
        });
    }
    Ok(out)
}

/// Depth-first search over fillings, pruning as soon as a 0 would complete
/// the forbidden pattern. Calls `visit` once per complete Le-filling.
fn search_fillings(
    cells: &[(usize, usize)],
    idx: usize,
    one_above: &mut [bool],
    one_left: bool,
    filling: &mut Vec<bool>,
    visit: &mut impl FnMut(&[bool]),
) {
    let Some(&(r, c)) = cells.get(idx) else {
        visit(filling);
        return;
    };
    let one_left = one_left && c > 0 && cells[idx - 1].0 == r;

    if !(one_above[c] && one_left) {
        filling.push(false);
        search_fillings(cells, idx + 1, one_above, one_left, filling, visit);
        filling.pop();
    }

    let was = one_above[c];
    one_above[c] = true;
    filling.push(true);
    search_fillings(cells, idx + 1, one_above, true, filling, visit);
    filling.pop();
    one_above[c] = was;
}

/// Counts Le-fillings of `shape` by number of 1s, by exhaustive search.
pub fn f_lambda_bruteforce(shape: &Shape) -> LaurentPoly {
    let cells: Vec<_> = cells(shape).collect();
    let mut counts = alloc::vec![0u64; cells.len() + 1];
    let mut one_above = alloc::vec![false; shape.cols()];
    let mut filling = Vec::with_capacity(cells.len());
    search_fillings(&cells, 0, &mut one_above, false, &mut filling, &mut |f| {
        counts[f.iter().filter(|&&b| b).count()] += 1;
    });
    LaurentPoly::from_coeffs(counts)
}

/// Memoized evaluation of the recurrence
///
/// `F_λ = q·F_{(λ₁,…,λ_k−1)} + F_{(λ₁,…,λ_{k−1})} + F_{(λ₁−1,…,λ_k−1)} − F_{(λ₁−1,…,λ_{k−1}−1)}`
///
/// with `F_∅ = 1`. Shapes are canonicalized before lookup, which relies on
/// `F_{(…,0)} = F_{(…)}`.
#[derive(Default)]
pub struct FLambdaRecurrence {
    memo: BTreeMap<Shape, LaurentPoly>,
}

impl FLambdaRecurrence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, shape: &Shape) -> LaurentPoly {
        if shape.is_empty() {
            return LaurentPoly::one();
        }
        if let Some(v) = self.memo.get(shape) {
            return v.clone();
        }
        let p = &shape.parts;
        let k = p.len();

        let mut last_shrunk = p.clone();
        last_shrunk[k - 1] -= 1;
        let without_last = p[..k - 1].to_vec();
        let all_shrunk: Vec<usize> = p.iter().map(|x| x - 1).collect();
        let head_shrunk: Vec<usize> = p[..k - 1].iter().map(|x| x - 1).collect();

        let value = self.get(&Shape::canonical(last_shrunk)).shift(1)
            + self.get(&Shape::canonical(without_last))
            + self.get(&Shape::canonical(all_shrunk))
            - self.get(&Shape::canonical(head_shrunk));
        self.memo.insert(shape.clone(), value.clone());
        value
    }
}

pub fn f_lambda_recurrence(shape: &Shape) -> LaurentPoly {
    FLambdaRecurrence::new().get(shape)
}

/// Closed form for `F_λ` as an alternating sum over chains
/// `1 = t₁ < … < t_i ≤ k`, with `k` the number of nonzero parts:
///
/// `F_λ = Σ_i Σ_t M(t : k)·[i+1]^{λ_{t_i}}·Π_{j=2}^{i} [j]^{λ_{t_{j−1}} − λ_{t_j} + 1}`,
/// `M(t : k) = (−1)^{k+i} q^{−ik + Σt_j} [i]^{k−t_i} Π_{j<i} [j]^{t_{j+1} − t_j − 1}`.
///
/// The individual terms carry negative powers of `q`; the sum does not.
/// The empty shape gives 1.
pub fn f_lambda_closed(shape: &Shape) -> LaurentPoly {
    let lam = &shape.parts;
    let k = lam.len();
    if k == 0 {
        return LaurentPoly::one();
    }
    let mut total = LaurentPoly::zero();
    // Bit b of `mask` selects t = b + 2.
    for mask in 0u64..(1u64 << (k - 1)) {
        let mut t = alloc::vec![1usize];
        t.extend((0..k - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2));
        let i = t.len();

        let sign = if (k + i) % 2 == 0 { 1 } else { -1 };
        let q_exp = t.iter().sum::<usize>() as i64 - (i * k) as i64;
        let mut term = LaurentPoly::monomial(sign, q_exp) * qint(i).pow((k - t[i - 1]) as u32);
        for j in 1..i {
            term = term * qint(j).pow((t[j] - t[j - 1] - 1) as u32);
        }
        term = term * qint(i + 1).pow(lam[t[i - 1] - 1] as u32);
        for j in 2..=i {
            let e = lam[t[j - 2] - 1] - lam[t[j - 1] - 1] + 1;
            term = term * qint(j).pow(e as u32);
        }
        total += &term;
    }
    total
}

/// `A_{k,n}(q)`: Le-diagrams in the `k × (n−k)` box counted by rank, by
/// exhaustive search. `A_{0,n} = 1` (the empty diagram).
pub fn a_kn_bruteforce(k: usize, n: usize) -> Result<LaurentPoly> {
    Ok(enumerate_shapes(k, n)?
        .iter()
        .map(f_lambda_bruteforce)
        .sum())
}

/// `A_{k,n}(q)` summed from the recurrence.
pub fn a_kn_recurrence(k: usize, n: usize) -> Result<LaurentPoly> {
    let mut rec = FLambdaRecurrence::new();
    Ok(enumerate_shapes(k, n)?.iter().map(|s| rec.get(s)).sum())
}

/// `A_{k,n}(q)` summed from the chain closed form.
pub fn a_kn_from_closed_f(k: usize, n: usize) -> Result<LaurentPoly> {
    Ok(enumerate_shapes(k, n)?.iter().map(f_lambda_closed).sum())
}

/// Renders a list of shapes, e.g. for diagnostics.
pub fn shapes_to_string(shapes: &[Shape]) -> String {
    let mut s = String::new();
    for (i, sh) in shapes.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&alloc::format!("{sh}"));
    }
    s
}
