//! Exact checks of the q-series identities behind the partial-fraction form
//! of `A(q,x,y)`.
//!
//! Series identities are compared as truncated power series in `y` (or in
//! `x` and `y`) with Laurent-polynomial coefficients, so agreement is exact
//! through the truncation order. The partial-fraction coefficients `β_i(j)`
//! are rational functions of `(q, y)` and are checked at rational sample
//! points instead.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{qbinomial, BiSeries, LaurentPoly, UniSeries};
use crate::formulas::{master_series, MasterForm};
use crate::{Error, Result};

fn signed(i: usize) -> i64 {
    i64::try_from(i).expect("index fits in i64")
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

fn tri(i: usize) -> i64 {
    signed(i * (i + 1) / 2)
}

fn qbin(i: usize, j: usize) -> LaurentPoly {
    qbinomial(signed(i), signed(j)).expect("0 <= j <= i")
}

/// `1/(1 − q^e y) = Σ_m q^{em} y^m` through `y^order`.
fn inv_one_minus(e: i64, order: usize) -> UniSeries {
    (0..=order).fold(UniSeries::zero(order), |acc, m| {
        acc + UniSeries::monomial(LaurentPoly::monomial(1, e * signed(m)), m, order)
    })
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// `(x-degree, y-degree)`; the x-degree is 0 for series in `y` alone.
    pub at: (usize, usize),
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of x^{} y^{}: {} vs {}",
            self.at.0, self.at.1, self.lhs, self.rhs
        )
    }
}

fn compare_uni(lhs: &UniSeries, rhs: &UniSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|d| Mismatch {
        at: (0, d),
        lhs: lhs.coeff(d).clone(),
        rhs: rhs.coeff(d).clone(),
    })
}

fn compare_bi(lhs: &BiSeries, rhs: &BiSeries) -> Option<Mismatch> {
    let (xo, yo) = (
        lhs.x_order().min(rhs.x_order()),
        lhs.y_order().min(rhs.y_order()),
    );
    (0..=xo)
        .flat_map(|a| (0..=yo).map(move |b| (a, b)))
        .find(|&(a, b)| lhs.coeff(a, b) != rhs.coeff(a, b))
        .map(|(a, b)| Mismatch {
            at: (a, b),
            lhs: lhs.coeff(a, b).clone(),
            rhs: rhs.coeff(a, b).clone(),
        })
}

// ---------------------------------------------------------------------------
// Partial fractions

/// `β_i(j) = (−1)^{i+j} q^{e} / ([j]! [i−j]! Π_{r≠j, 0≤r≤i} (1 − q^{−r−j−1} y))`
/// with `e = (j² + 3j − i² − 3i − 2ij)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Beta {
    pub i: usize,
    pub j: usize,
    pub sign: i64,
    pub q_exponent: i64,
}

pub fn beta(i: usize, j: usize) -> Result<Beta> {
    if j > i {
        return Err(Error::domain(alloc::format!(
            "beta_i(j) needs j <= i, got i = {i}, j = {j}"
        )));
    }
    let (si, sj) = (signed(i), signed(j));
    let twice = sj * sj + 3 * sj - si * si - 3 * si - 2 * si * sj;
    Ok(Beta {
        i,
        j,
        sign: sign(i + j),
        q_exponent: twice / 2,
    })
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        write!(
            f,
            "{s}q^{} / ([{}]! [{}]!",
            self.q_exponent,
            self.j,
            self.i - self.j
        )?;
        for r in (0..=self.i).filter(|&r| r != self.j) {
            write!(f, " (1 - q^{} y)", -signed(r + self.j + 1))?;
        }
        f.write_str(")")
    }
}

fn qpow(q: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(q.clone(), e as usize)
    } else {
        num_traits::pow(q.recip(), e.unsigned_abs() as usize)
    }
}

fn qint_at(m: usize, q: &BigRational) -> BigRational {
    (0..m)
        .map(|t| qpow(q, signed(t)))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn qfactorial_at(m: usize, q: &BigRational) -> BigRational {
    (1..=m)
        .map(|t| qint_at(t, q))
        .fold(BigRational::one(), |a, b| a * b)
}

impl Beta {
    /// Exact value at `(q, y)`. Fails at `q ∈ {0, 1, −1}`, where the
    /// expansion degenerates, and wherever the denominator vanishes.
    pub fn eval(&self, q: &BigRational, y: &BigRational) -> Result<BigRational> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::domain(alloc::format!(
                "sample q = {q} is excluded by the pole guard"
            )));
        }
        let mut denom = qfactorial_at(self.j, q) * qfactorial_at(self.i - self.j, q);
        for r in (0..=self.i).filter(|&r| r != self.j) {
            denom *= BigRational::one() - qpow(q, -signed(r + self.j + 1)) * y;
        }
        if denom.is_zero() {
            return Err(Error::domain(alloc::format!(
                "beta_{}({}) has a pole at (q, y) = ({q}, {y})",
                self.i,
                self.j
            )));
        }
        Ok(qpow(q, self.q_exponent) * BigRational::from_integer(BigInt::from(self.sign)) / denom)
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = alloc::vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        for (j, v) in b.iter().enumerate() {
            out[i + j] += u * v;
        }
    }
    out
}

/// The right-hand side `Σ_j β_i(j) Π_{r≠j} (q^r − q^r[r+1]x + [r]xy)` as
/// coefficients of `x⁰..xⁱ` at the sample point.
pub fn partial_fraction_rhs(
    i: usize,
    q: &BigRational,
    y: &BigRational,
) -> Result<Vec<BigRational>> {
    let factor = |r: usize| {
        let qr = qpow(q, signed(r));
        alloc::vec![qr.clone(), qint_at(r, q) * y - qr * qint_at(r + 1, q)]
    };
    let mut total = alloc::vec![BigRational::zero(); i + 1];
    for j in 0..=i {
        let b = beta(i, j)?.eval(q, y)?;
        let prod = (0..=i)
            .filter(|&r| r != j)
            .fold(alloc::vec![BigRational::one()], |acc, r| {
                poly_mul(&acc, &factor(r))
            });
        for (t, c) in prod.into_iter().enumerate() {
            total[t] += &b * c;
        }
    }
    Ok(total)
}

/// Checks `xⁱ = Σ_j β_i(j) Π_{r≠j}(q^r − q^r[r+1]x + [r]xy)` coefficientwise
/// in `x` at every sample. A sample at a pole is an error, not a skip.
pub fn verify_partial_fraction(i: usize, samples: &[(BigRational, BigRational)]) -> Result<bool> {
    if i == 0 {
        return Err(Error::domain("partial fraction check needs i >= 1"));
    }
    for (q, y) in samples {
        let rhs = partial_fraction_rhs(i, q, y)?;
        let holds = rhs
            .iter()
            .enumerate()
            .all(|(t, c)| if t == i { c.is_one() } else { c.is_zero() });
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Master series

/// Compares the product and partial-fraction forms of `A(q,x,y)`.
pub fn theorem_identity_mismatch(x_order: usize, y_order: usize) -> Option<Mismatch> {
    compare_bi(
        &master_series(x_order, y_order, MasterForm::Product),
        &master_series(x_order, y_order, MasterForm::PartialFractions),
    )
}

pub fn verify_theorem_identity(x_order: usize, y_order: usize) -> bool {
    theorem_identity_mismatch(x_order, y_order).is_none()
}

// ---------------------------------------------------------------------------
// The y-series identities

/// `(−1)^i q^{C(i+1,2)} [i choose j] y^{i−j} Π_{r=1}^{i+1} 1/(1 − q^{r+j} y)`,
/// the `i`-th summand of the partition lemma with `y^{−j}` absorbed.
pub fn lemma_summand(i: usize, j: usize, order: usize) -> UniSeries {
    let prod = (1..=i + 1).fold(UniSeries::one(order), |acc, r| {
        acc * inv_one_minus(signed(r + j), order)
    });
    prod.shift(i - j)
        .scale(&qbin(i, j).shift(tri(i)).scale(&BigInt::from(sign(i))))
}

/// `(−1)^j q^{−C(j+1,2)}`, the lemma's prefactor without `y^{−j}`.
fn lemma_prefactor(j: usize) -> LaurentPoly {
    LaurentPoly::monomial(sign(j), -tri(j))
}

/// Left side of the partition lemma through `y^order`:
/// `(−1)^j q^{−C(j+1,2)} y^{−j} Σ_{i≥j} (−1)^i q^{C(i+1,2)} [i choose j] yⁱ Π_{r=1}^{i+1} 1/(1 − q^{r+j} y)`.
/// Summands with `i > j + order` start beyond the truncation.
pub fn partition_lemma_lhs(j: usize, order: usize) -> UniSeries {
    let mut total = UniSeries::zero(order);
    let mut prod = (1..=j).fold(UniSeries::one(order), |acc, r| {
        acc * inv_one_minus(signed(r + j), order)
    });
    for i in j..=j + order {
        prod = prod * inv_one_minus(signed(i + 1 + j), order);
        let c = qbin(i, j).shift(tri(i)).scale(&BigInt::from(sign(i)));
        total = total + prod.shift(i - j).scale(&c);
    }
    total.scale(&lemma_prefactor(j))
}

pub fn partition_lemma_mismatch(j: usize, order: usize) -> Option<Mismatch> {
    compare_uni(&partition_lemma_lhs(j, order), &UniSeries::one(order))
}

pub fn verify_partition_lemma(j: usize, order: usize) -> bool {
    partition_lemma_mismatch(j, order).is_none()
}

/// `Σ_{i≥0} (−1)^i yⁱ q^{C(i+1,2)} Π_{r=1}^{i+1} 1/(1 − q^r y)`, which should be 1.
pub fn identity3_lhs(order: usize) -> UniSeries {
    partition_lemma_lhs(0, order)
}

/// The `i`-th summand of the `j = 0` identity before substitution:
/// `(−1)^i q^{−C(i+1,2)} yⁱ Π_{r=0}^{i} 1/(1 − q^{−r−1} y)`.
pub fn identity1_summand(i: usize, order: usize) -> UniSeries {
    let prod = (0..=i).fold(UniSeries::one(order), |acc, r| {
        acc * inv_one_minus(-signed(r + 1), order)
    });
    prod.shift(i)
        .scale(&LaurentPoly::monomial(sign(i), -tri(i)))
}

/// Checks `(1 − y/q) Σ_{i≥1} identity1_summand(i) = −y/q` through `y^order`.
pub fn identity1_mismatch(order: usize) -> Option<Mismatch> {
    let sum = (1..=order).fold(UniSeries::zero(order), |acc, i| {
        acc + identity1_summand(i, order)
    });
    let factor =
        UniSeries::one(order) - UniSeries::monomial(LaurentPoly::monomial(1, -1), 1, order);
    let rhs = UniSeries::monomial(LaurentPoly::monomial(-1, -1), 1, order);
    compare_uni(&(factor * sum), &rhs)
}

/// The `i`-th summand of the `j > 0` identity before substitution, with its
/// prefactor and `y^{−j}` folded in:
/// `(−1)^j q^{(3j²+j)/2} [i choose j] q^{−C(i+1,2)−ij} (−1)^i y^{i−j} Π_{r=0}^{i} 1/(1 − q^{−r−j−1} y)`.
pub fn identity2_summand(i: usize, j: usize, order: usize) -> UniSeries {
    let prod = (0..=i).fold(UniSeries::one(order), |acc, r| {
        acc * inv_one_minus(-signed(r + j + 1), order)
    });
    let (si, sj) = (signed(i), signed(j));
    let q_exp = (3 * sj * sj + sj) / 2 - tri(i) - si * sj;
    prod.shift(i - j)
        .scale(&qbin(i, j).shift(q_exp).scale(&BigInt::from(sign(i + j))))
}

/// Checks that the `j > 0` identity sums to 1 through `y^order`.
pub fn identity2_mismatch(j: usize, order: usize) -> Option<Mismatch> {
    let sum = (j..=j + order).fold(UniSeries::zero(order), |acc, i| {
        acc + identity2_summand(i, j, order)
    });
    compare_uni(&sum, &UniSeries::one(order))
}

/// Checks termwise that `q → q⁻¹` carries the pre-substitution identities
/// to the post-substitution ones: each `identity1` summand (`i ≥ 1`) to the
/// matching summand of the `j = 0` lemma, and each `identity2` summand to
/// the lemma summand times its prefactor. Returns the first `(j, i)` that
/// fails.
pub fn substitution_mismatch(max_j: usize, order: usize) -> Option<(usize, usize)> {
    for i in 1..=order {
        if identity1_summand(i, order).substitute_inverse_q() != lemma_summand(i, 0, order) {
            return Some((0, i));
        }
    }
    for j in 1..=max_j {
        for i in j..=j + order {
            let mapped = identity2_summand(i, j, order).substitute_inverse_q();
            if mapped != lemma_summand(i, j, order).scale(&lemma_prefactor(j)) {
                return Some((j, i));
            }
        }
    }
    None
}

/// Compares the partial sum `Σ_{i=j}^{m−1}` of the partition lemma with
/// `1 + (−1)^{m−1} q^{jm+C(m+1,2)} yᵐ Σ_{p=0}^{j} (−1)^p [m choose p] q^{C(p,2)−pj−pm} y^{−p} / Π_{r=1}^{m}(1 − q^{r+j} y)`.
pub fn telescoping_mismatch(j: usize, m: usize, order: usize) -> Result<Option<Mismatch>> {
    if m <= j {
        return Err(Error::domain(alloc::format!(
            "telescoping needs m > j, got j = {j}, m = {m}"
        )));
    }
    let partial = (j..m)
        .fold(UniSeries::zero(order), |acc, i| {
            acc + lemma_summand(i, j, order)
        })
        .scale(&lemma_prefactor(j));

    let (sj, sm) = (signed(j), signed(m));
    let prod = (1..=m).fold(UniSeries::one(order), |acc, r| {
        acc * inv_one_minus(signed(r + j), order)
    });
    let mut inner = UniSeries::zero(order);
    for p in 0..=j {
        let sp = signed(p);
        let c = qbin(m, p)
            .shift(sp * (sp - 1) / 2 - sp * sj - sp * sm)
            .scale(&BigInt::from(sign(p)));
        inner = inner + UniSeries::monomial(c, m - p, order);
    }
    let lead = LaurentPoly::monomial(sign(m - 1), sj * sm + tri(m));
    let closed = UniSeries::one(order) + (inner * prod).scale(&lead);
    Ok(compare_uni(&partial, &closed))
}

pub fn verify_telescoping(j: usize, m: usize, order: usize) -> Result<bool> {
    Ok(telescoping_mismatch(j, m, order)?.is_none())
}

// ---------------------------------------------------------------------------
// Sign-reversing involution on partition pairs

/// A pair `(λ, λ̂)` indexing one monomial of the `i`-th lemma summand.
///
/// `λ̂` has `i + 1` strictly decreasing parts, the last possibly 0. `λ` is a
/// weakly decreasing list of exactly `λ̂₁ − j` entries in `0..=j`, zeros
/// included, with at least `λ̂₁ − i` entries equal to `j`. The pair has sign
/// `(−1)^i` and weight `q^{|λ|+|λ̂|} y^{λ̂₁−j}`; for fixed `i` these pairs
/// are generated exactly by `q^{C(i+1,2)} [i choose j] y^{i−j} Π_{r=1}^{i+1} 1/(1 − q^{r+j}y)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionPair {
    pub lambda: Vec<usize>,
    pub lambda_hat: Vec<usize>,
}

impl PartitionPair {
    /// `i`, one less than the number of parts of `λ̂`.
    pub fn i(&self) -> usize {
        self.lambda_hat.len() - 1
    }

    pub fn sign(&self) -> i64 {
        sign(self.i())
    }

    pub fn q_weight(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.lambda_hat.iter().sum::<usize>()
    }

    pub fn y_weight(&self) -> usize {
        self.lambda.len()
    }

    /// `r_j(λ)`, the number of entries equal to `j`.
    pub fn rows_of_length(&self, j: usize) -> usize {
        self.lambda.iter().filter(|&&p| p == j).count()
    }

    pub fn is_valid(&self, j: usize) -> bool {
        let Some(&top) = self.lambda_hat.first() else {
            return false;
        };
        self.i() >= j
            && self.lambda_hat.windows(2).all(|w| w[0] > w[1])
            && self.lambda.windows(2).all(|w| w[0] >= w[1])
            && self.lambda.iter().all(|&p| p <= j)
            && top >= j
            && self.lambda.len() == top - j
            && self.rows_of_length(j) + self.i() >= top
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lambda, self.lambda_hat)
    }
}

/// The involution: keeps `λ` and removes or appends a trailing zero of `λ̂`.
/// `None` when the toggled pair would not be valid, i.e. `p` is unpaired.
pub fn phi(j: usize, p: &PartitionPair) -> Option<PartitionPair> {
    let mut hat = p.lambda_hat.clone();
    if hat.last() == Some(&0) {
        hat.pop();
    } else {
        hat.push(0);
    }
    if hat.is_empty() {
        return None;
    }
    let q = PartitionPair {
        lambda: p.lambda.clone(),
        lambda_hat: hat,
    };
    q.is_valid(j).then_some(q)
}

/// Strictly decreasing sequences of `len` nonnegative parts, sum ≤ `budget`.
fn strict_parts(len: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
    fn go(
        len: usize,
        below: usize,
        budget: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = len - cur.len() - 1;
        // The parts after this one are at least remaining-1, …, 0.
        let floor = remaining * remaining.saturating_sub(1) / 2;
        for v in remaining..below {
            if v + floor > budget {
                break;
            }
            cur.push(v);
            go(len, v, budget - v, cur, out);
            cur.pop();
        }
    }
    go(len, budget + 1, budget, &mut Vec::new(), out);
}

/// Weakly decreasing sequences of exactly `len` entries in `0..=max` with at
/// least `min_top` entries equal to `max` and sum ≤ `budget`.
fn bounded_parts(len: usize, max: usize, min_top: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
    fn go(
        len: usize,
        max: usize,
        above: usize,
        budget: usize,
        need: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            if need == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=above).rev() {
            if v > budget {
                continue;
            }
            let need_next = if v == max {
                need.saturating_sub(1)
            } else {
                need
            };
            if need_next > 0 && v != max {
                continue;
            }
            cur.push(v);
            go(len, max, v, budget - v, need_next, cur, out);
            cur.pop();
        }
    }
    if min_top <= len {
        go(len, max, max, budget, min_top, &mut Vec::new(), out);
    }
}

/// All valid pairs with `j ≤ i ≤ i_max` and `|λ| + |λ̂| ≤ weight_bound`.
pub fn enumerate_pairs(j: usize, i_max: usize, weight_bound: usize) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for i in j..=i_max {
        let mut hats = Vec::new();
        strict_parts(i + 1, weight_bound, &mut hats);
        for hat in hats {
            let top = hat[0];
            if top < j {
                continue;
            }
            let used: usize = hat.iter().sum();
            let mut lams = Vec::new();
            bounded_parts(
                top - j,
                j,
                top.saturating_sub(i),
                weight_bound - used,
                &mut lams,
            );
            for lambda in lams {
                out.push(PartitionPair {
                    lambda,
                    lambda_hat: hat.clone(),
                });
            }
        }
    }
    out
}

/// Signed weights keyed by `(y-degree, q-degree)`.
pub type Census = BTreeMap<(usize, usize), BigInt>;

fn add_to(census: &mut Census, key: (usize, usize), v: i64) {
    let slot = census.entry(key).or_default();
    *slot += v;
    if slot.is_zero() {
        census.remove(&key);
    }
}

/// Coefficients of a y-series, restricted to q-degrees `0..=q_bound`.
fn series_census(s: &UniSeries, q_bound: usize) -> Census {
    let mut out = Census::new();
    for d in 0..=s.order() {
        for (e, c) in s.coeff(d).terms() {
            if (0..=signed(q_bound)).contains(&e) && !c.is_zero() {
                out.insert((d, e as usize), c.clone());
            }
        }
    }
    out
}

/// How `numparts(λ)` treats zero-length rows in the alternative reading
/// where `r_j(λ) + i − j = λ̂₁` holds exactly and `y` counts parts of `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroRows {
    Counted,
    Ignored,
}

/// Census of the alternative reading for one `i`, `y`-degree ≤ `y_bound`.
fn literal_census(
    j: usize,
    i: usize,
    weight_bound: usize,
    y_bound: usize,
    zeros: ZeroRows,
) -> Census {
    let mut census = Census::new();
    let mut hats = Vec::new();
    strict_parts(i + 1, weight_bound, &mut hats);
    for hat in hats {
        let top = hat[0];
        // r_j(λ) = λ̂₁ − i + j exactly.
        let Some(rj) = (top + j).checked_sub(i) else {
            continue;
        };
        let used: usize = hat.iter().sum();
        let smallest = if zeros == ZeroRows::Counted { 0 } else { 1 };
        // With j = 0 every zero row has length j.
        let short_max = if j == 0 { None } else { Some(j - 1) };
        for len in rj..=y_bound {
            let rest = len - rj;
            if rj * j + used > weight_bound {
                break;
            }
            let others: Vec<Vec<usize>> = match short_max {
                None if rest > 0 => continue,
                None => alloc::vec![Vec::new()],
                Some(max) => {
                    let mut v = Vec::new();
                    if smallest <= max || rest == 0 {
                        bounded_parts(rest, max, 0, weight_bound - used - rj * j, &mut v);
                    }
                    v.retain(|p| p.iter().all(|&x| x >= smallest));
                    v
                }
            };
            if j == 0 && zeros == ZeroRows::Ignored && rj > 0 {
                continue;
            }
            for o in others {
                let w = used + rj * j + o.iter().sum::<usize>();
                add_to(&mut census, (len, w), 1);
            }
        }
    }
    census
}

/// Outcome of [`involution_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub j: usize,
    pub i_max: usize,
    pub weight_bound: usize,
    pub pairs: usize,
    /// `φ(φ(p)) = p` wherever `φ(p)` is defined.
    pub involution: bool,
    pub sign_reversing: bool,
    pub weight_preserving: bool,
    /// Pairs whose partner has `i > i_max` and so lies outside the range.
    pub boundary: usize,
    pub unpaired: Vec<PartitionPair>,
    /// Signed census of the unpaired pairs.
    pub unpaired_sum: Census,
    /// Whether the unpaired census is `(−1)^j q^{C(j+1,2)}`, the value the
    /// whole signed sum must take.
    pub unpaired_sum_matches: bool,
    /// Signed census of all pairs equals the series coefficients.
    pub census_matches: bool,
    /// Per-`i` agreement of the alternative reading with the summands.
    pub literal_counted_matches: bool,
    pub literal_ignored_matches: bool,
}

impl InvolutionReport {
    /// The properties the cancellation argument relies on.
    pub fn holds(&self) -> bool {
        self.involution
            && self.sign_reversing
            && self.weight_preserving
            && self.unpaired_sum_matches
            && self.census_matches
    }
}

/// Enumerates partition pairs for `j ≤ i ≤ i_max` with weight at most
/// `weight_bound`, applies `φ`, and compares the signed census with the
/// coefficients of `Σ_i (−1)^i q^{C(i+1,2)} [i choose j] y^{i−j} Π 1/(1 − q^{r+j}y)`.
pub fn involution_check(j: usize, i_max: usize, weight_bound: usize) -> Result<InvolutionReport> {
    if i_max < j {
        return Err(Error::domain(alloc::format!(
            "involution check needs i_max >= j, got j = {j}, i_max = {i_max}"
        )));
    }
    let pairs = enumerate_pairs(j, i_max, weight_bound);
    let mut report = InvolutionReport {
        j,
        i_max,
        weight_bound,
        pairs: pairs.len(),
        involution: true,
        sign_reversing: true,
        weight_preserving: true,
        boundary: 0,
        unpaired: Vec::new(),
        unpaired_sum: Census::new(),
        unpaired_sum_matches: false,
        census_matches: false,
        literal_counted_matches: true,
        literal_ignored_matches: true,
    };

    let mut census = Census::new();
    for p in &pairs {
        add_to(&mut census, (p.y_weight(), p.q_weight()), p.sign());
        match phi(j, p) {
            Some(partner) => {
                report.involution &= phi(j, &partner).as_ref() == Some(p);
                report.sign_reversing &= partner.sign() == -p.sign();
                report.weight_preserving &=
                    partner.q_weight() == p.q_weight() && partner.y_weight() == p.y_weight();
                if partner.i() > i_max {
                    report.boundary += 1;
                }
            }
            None => {
                add_to(
                    &mut report.unpaired_sum,
                    (p.y_weight(), p.q_weight()),
                    p.sign(),
                );
                report.unpaired.push(p.clone());
            }
        }
    }

    let mut expected_total = Census::new();
    let top = tri(j) as usize;
    if top <= weight_bound {
        add_to(&mut expected_total, (0, top), sign(j));
    }
    report.unpaired_sum_matches = report.boundary == 0 && report.unpaired_sum == expected_total;

    let order = weight_bound;
    let mut series = UniSeries::zero(order);
    for i in j..=i_max {
        let g = lemma_summand(i, j, order);
        series = series + g.clone();
        let per_i = series_census(&g.scale(&LaurentPoly::constant(sign(i))), weight_bound);
        report.literal_counted_matches &=
            literal_census(j, i, weight_bound, order, ZeroRows::Counted) == per_i;
        report.literal_ignored_matches &=
            literal_census(j, i, weight_bound, order, ZeroRows::Ignored) == per_i;
    }
    report.census_matches = series_census(&series, weight_bound) == census;
    Ok(report)
}

/// One-line summary of a census, for diagnostics.
pub fn census_to_string(c: &Census) -> String {
    if c.is_empty() {
        return String::from("0");
    }
    let mut s = String::new();
    for (idx, ((d, e), v)) in c.iter().enumerate() {
        if idx > 0 {
            s.push_str(" + ");
        }
        s.push_str(&alloc::format!("{v}*q^{e}*y^{d}"));
    }
    s
}
