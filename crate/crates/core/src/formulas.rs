//! Closed forms for `A_{k,n}(q)`, its generating functions `A_k(q,x)` and
//! `A(q,x,y)`, the q-Eulerian family `E`, `Ê`, `Ẽ`, and the classical
//! number sequences they specialize to.
//!
//! Conventions: `A_{0,n} = 1`, `E_{0,n} = 0`, and `k > n` is a domain error
//! rather than zero. Every `A_{k,n}` result is checked to be a genuine
//! polynomial of degree `k(n−k)` with nonnegative coefficients even though
//! the sums pass through negative powers of `q`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::algebra::{binomial, qfactorial, qint, qint_signed, BiSeries, LaurentPoly};
use crate::decperm::{DecoratedPermutation, Permutations};
use crate::{Error, Result};

/// Largest `n` accepted by [`e_kn_bruteforce`].
pub const E_BRUTEFORCE_BOUND: usize = 9;

/// Names the formula a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    AknFirstSum,
    AknSecondSum,
    AkAlternating,
    AkChains,
    MasterProduct,
    MasterPartialFractions,
    EFirstSum,
    ESecondSum,
    EFromA,
    EHat,
    ETildeFirstSum,
    ETildeSecondSum,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::AknFirstSum => "A_kn first sum",
            Formula::AknSecondSum => "A_kn second sum",
            Formula::AkAlternating => "A_k(q,x) alternating sums",
            Formula::AkChains => "A_k(q,x) chain sum",
            Formula::MasterProduct => "A(q,x,y) product form",
            Formula::MasterPartialFractions => "A(q,x,y) partial fractions",
            Formula::EFirstSum => "E_kn first sum",
            Formula::ESecondSum => "E_kn second sum",
            Formula::EFromA => "E_kn binomial transform of A",
            Formula::EHat => "renormalized E_kn",
            Formula::ETildeFirstSum => "E~_kn first sum",
            Formula::ETildeSecondSum => "E~_kn second sum",
        }
    }
}

/// A computed value tagged with its indices and the formula behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult<V> {
    pub formula: Formula,
    pub k: usize,
    pub n: usize,
    pub value: V,
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::domain(alloc::format!(
            "needs 0 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

fn signed(i: usize) -> i64 {
    i64::try_from(i).expect("index fits in i64")
}

fn binom(n: usize, k: i64) -> BigInt {
    binomial(signed(n), k)
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `q^{−k²} Σ_{i<k} (−1)^i C(n,i) (q^{ki}[k−i]^i[k−i+1]^{n−i} − q^{(k+1)i}[k−i−1]^i[k−i]^{n−i})`.
pub fn a_kn_first_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let (ie, ni) = (i as u32, (n - i) as u32);
        let left = qint(k - i).pow(ie) * qint(k - i + 1).pow(ni);
        let right = qint(k - i - 1).pow(ie) * qint(k - i).pow(ni);
        let bracket = left.shift(signed(k * i)) - right.shift(signed((k + 1) * i));
        total += &bracket.scale(&(binom(n, signed(i)) * sign(i)));
    }
    Ok(total.shift(-signed(k * k)))
}

/// `Σ_{i<k} C(n,i) q^{−(k−i)²} ([i−k]^i[k−i+1]^{n−i} − [i−k+1]^i[k−i]^{n−i})`,
/// with `[−m] = −q^{−m}[m]`.
pub fn a_kn_second_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let (si, sk) = (signed(i), signed(k));
        let (ie, ni) = (i as u32, (n - i) as u32);
        let left = qint_signed(si - sk).pow(ie) * qint(k - i + 1).pow(ni);
        let right = qint_signed(si - sk + 1).pow(ie) * qint(k - i).pow(ni);
        let d = signed(k - i);
        total += &(left - right).shift(-d * d).scale(&binom(n, si));
    }
    Ok(total)
}

/// `A_{k,n}(q)` from the first closed sum, cross-checked against the second.
///
/// # Panics
/// If the two sums disagree or the result is not a nonnegative polynomial
/// of degree `k(n−k)`; either would be a bug.
pub fn a_kn_closed(k: usize, n: usize) -> Result<LaurentPoly> {
    let first = a_kn_first_sum(k, n)?;
    let second = a_kn_second_sum(k, n)?;
    assert_eq!(first, second, "closed sums for A_({k},{n}) disagree");
    assert!(
        first.is_polynomial() && first.has_nonnegative_coefficients(),
        "A_({k},{n}) = {first} is not a nonnegative polynomial"
    );
    assert_eq!(
        first.max_exponent(),
        Some(signed(k * (n - k))),
        "A_({k},{n}) has the wrong degree"
    );
    Ok(first)
}

pub fn a_kn_result(k: usize, n: usize) -> Result<FormulaResult<LaurentPoly>> {
    Ok(FormulaResult {
        formula: Formula::AknFirstSum,
        k,
        n,
        value: a_kn_closed(k, n)?,
    })
}

/// `A_{k,n}(−1)`, the Euler characteristic of the nonnegative part.
pub fn euler_characteristic(k: usize, n: usize) -> Result<BigInt> {
    Ok(a_kn_closed(k, n)?.value_at_minus_one())
}

/// `(1 − [m]x)^{−1}` as a series in `x` alone.
fn geometric(m: usize, x_order: usize) -> BiSeries {
    let base = BiSeries::one(x_order, 0) - BiSeries::monomial(qint(m), 1, 0, x_order, 0);
    base.invert().expect("constant term is 1")
}

/// `A_k(q,x) = Σ_n A_{k,n}(q) xⁿ` through `x^{x_order}`, from the pair of
/// alternating sums
///
/// `Σ_{i<k} (−1)^{i+k} x^{k−i−1}[i]^{k−i−1} / (q^{ki+i+1}(1−[i+1]x)^{k−i})
///  + Σ_{i≤k} (−1)^{i+k} x^{k−i}[i]^{k−i} / (q^{ki}(1−[i+1]x)^{k−i+1})`.
pub fn a_k_series_alternating(k: usize, x_order: usize) -> Result<BiSeries> {
    if k == 0 {
        return Err(Error::domain("A_k(q,x) needs k >= 1"));
    }
    let mut total = BiSeries::zero(x_order, 0);
    for i in 0..=k {
        let g = geometric(i + 1, x_order);
        let s = sign(i + k);
        if i < k {
            let e = k - i - 1;
            let coeff = qint(i)
                .pow(e as u32)
                .shift(-signed(k * i + i + 1))
                .scale(&BigInt::from(s));
            total = total + g.pow((k - i) as u32).shift(e, 0).scale(&coeff);
        }
        let e = k - i;
        let coeff = qint(i)
            .pow(e as u32)
            .shift(-signed(k * i))
            .scale(&BigInt::from(s));
        total = total + g.pow((k - i + 1) as u32).shift(e, 0).scale(&coeff);
    }
    Ok(total)
}

/// `A_k(q,x)` from the sum over chains `1 = t₁ < … < t_{i+1} = k+1`:
///
/// `Σ_i Σ_t (−1)^{k+i} q^{−ik+Σ_{j≤i} t_j} xᵏ/(1−x) Π_{j≤i} ([j]/(1−[j+1]x))^{t_{j+1}−t_j}`.
pub fn a_k_series_chains(k: usize, x_order: usize) -> Result<BiSeries> {
    if k == 0 {
        return Err(Error::domain("A_k(q,x) needs k >= 1"));
    }
    let geos: Vec<BiSeries> = (0..=k + 1).map(|m| geometric(m, x_order)).collect();
    let head = geos[1].shift(k, 0);
    let mut total = BiSeries::zero(x_order, 0);
    // Bit b of `mask` puts t = b + 2 into the chain.
    for mask in 0u64..(1u64 << (k - 1)) {
        let mut t = alloc::vec![1usize];
        t.extend((0..k - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2));
        let i = t.len();
        let q_exp = t.iter().sum::<usize>() as i64 - signed(i * k);
        t.push(k + 1);
        let mut term = head.scale(&LaurentPoly::monomial(sign(k + i), q_exp));
        for j in 1..=i {
            let gap = (t[j] - t[j - 1]) as u32;
            term = term * geos[j + 1].pow(gap).scale(&qint(j).pow(gap));
        }
        total = total + term;
    }
    Ok(total)
}

/// `A_k(q,x)` tagged by the formula used.
pub fn a_k_series(k: usize, x_order: usize, formula: Formula) -> Result<FormulaResult<BiSeries>> {
    let value = match formula {
        Formula::AkAlternating => a_k_series_alternating(k, x_order)?,
        Formula::AkChains => a_k_series_chains(k, x_order)?,
        other => {
            return Err(Error::domain(alloc::format!(
                "{} is not a form of A_k(q,x)",
                other.name()
            )))
        }
    };
    Ok(FormulaResult {
        formula,
        k,
        n: x_order,
        value,
    })
}

/// `q^j − q^j[j+1]x + [j]xy`.
pub fn master_factor(j: usize, x_order: usize, y_order: usize) -> BiSeries {
    let qj = LaurentPoly::monomial(1, signed(j));
    BiSeries::constant(qj.clone(), x_order, y_order)
        - BiSeries::monomial(&qj * qint(j + 1), 1, 0, x_order, y_order)
        + BiSeries::monomial(qint(j), 1, 1, x_order, y_order)
}

fn master_factor_inverse(j: usize, x_order: usize, y_order: usize) -> BiSeries {
    master_factor(j, x_order, y_order)
        .invert()
        .expect("constant term q^j is a unit")
}

/// The two expressions for `A(q,x,y) = Σ_{k≥1} A_k(q,x) yᵏ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MasterForm {
    /// `Σ_{i≥1} qⁱ[i]! xⁱyⁱ Π_{j=0}^{i} 1/(q^j − q^j[j+1]x + [j]xy)`.
    Product,
    /// `−y/(q(1−x)) + Σ_{i≥1} yⁱ(q^{2i+1} − y) q^{−i²−i−1} / (qⁱ − qⁱ[i+1]x + [i]xy)`.
    PartialFractions,
}

/// `A(q,x,y)` through `x^{x_order} y^{y_order}`. Each `1/(q^j − …)` is the
/// inverse in the truncated power series ring, which exists because its
/// constant term `q^j` is a unit.
pub fn master_series(x_order: usize, y_order: usize, form: MasterForm) -> BiSeries {
    match form {
        MasterForm::Product => {
            let mut total = BiSeries::zero(x_order, y_order);
            let mut running = master_factor_inverse(0, x_order, y_order);
            for i in 1..=x_order.min(y_order) {
                running = running * master_factor_inverse(i, x_order, y_order);
                let c = (qfactorial(i)).shift(signed(i));
                total = total + running.shift(i, i).scale(&c);
            }
            total
        }
        MasterForm::PartialFractions => {
            let q_minus_qx = BiSeries::constant(LaurentPoly::q(), x_order, y_order)
                - BiSeries::monomial(LaurentPoly::q(), 1, 0, x_order, y_order);
            let mut total = -q_minus_qx
                .invert()
                .expect("constant term q is a unit")
                .shift(0, 1);
            for i in 1..=y_order {
                let si = signed(i);
                let numer = BiSeries::monomial(
                    LaurentPoly::monomial(1, 2 * si + 1),
                    0,
                    i,
                    x_order,
                    y_order,
                ) - BiSeries::monomial(LaurentPoly::one(), 0, i + 1, x_order, y_order);
                let scaled = numer.scale(&LaurentPoly::monomial(1, -si * si - si - 1));
                total = total + scaled * master_factor_inverse(i, x_order, y_order);
            }
            total
        }
    }
}

/// `E_{k,n}` for `k = 0` or a range error.
fn e_trivial(k: usize, n: usize) -> Result<Option<LaurentPoly>> {
    check_kn(k, n)?;
    Ok((k == 0).then(LaurentPoly::zero))
}

/// `q^{n−k²} Σ_{i<k} C(n,i)(−1)^i (q^{ki−i}[k−i]ⁿ − q^{ki}[k−i−1]ⁿ)`.
pub fn e_kn_first_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    if let Some(z) = e_trivial(k, n)? {
        return Ok(z);
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let bracket = qint(k - i).pow(n as u32).shift(signed(k * i - i))
            - qint(k - i - 1).pow(n as u32).shift(signed(k * i));
        total += &bracket.scale(&(binom(n, signed(i)) * sign(i)));
    }
    Ok(total.shift(signed(n) - signed(k * k)))
}

/// `q^{n−k²} Σ_{i<k} (−1)^i [k−i]ⁿ q^{ki−k} (C(n,i) q^{k−i} + C(n,i−1))`.
pub fn e_kn_second_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    if let Some(z) = e_trivial(k, n)? {
        return Ok(z);
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let si = signed(i);
        let inner = LaurentPoly::monomial(binom(n, si), signed(k - i))
            + LaurentPoly::constant(binom(n, si - 1));
        let term = (qint(k - i).pow(n as u32) * inner).shift(signed(k * i) - signed(k));
        total += &term.scale(&BigInt::from(sign(i)));
    }
    Ok(total.shift(signed(n) - signed(k * k)))
}

/// `E_{k,n}(q)`: coefficient of `q^{k(n−k)−ℓ}` counts permutations of `[n]`
/// with `k` weak excedences and `ℓ` alignments.
///
/// # Panics
/// If the two closed sums disagree.
pub fn e_kn_closed(k: usize, n: usize) -> Result<LaurentPoly> {
    let first = e_kn_first_sum(k, n)?;
    assert_eq!(
        first,
        e_kn_second_sum(k, n)?,
        "closed sums for E_({k},{n}) disagree"
    );
    Ok(first)
}

/// `Σ_{i=0}^{n} (−1)^i C(n,i) A_{k,n−i}(q)` with `A_{k,m} = 0` for `m < k`.
pub fn e_kn_from_a(k: usize, n: usize) -> Result<LaurentPoly> {
    if let Some(z) = e_trivial(k, n)? {
        return Ok(z);
    }
    let mut total = LaurentPoly::zero();
    for i in 0..=n - k {
        total += &a_kn_closed(k, n - i)?.scale(&(binom(n, signed(i)) * sign(i)));
    }
    Ok(total)
}

/// `Ê_{k,n} = q^{k−n} E_{k,n}`, a polynomial of degree `(k−1)(n−k)`.
pub fn e_hat(k: usize, n: usize) -> Result<LaurentPoly> {
    Ok(e_kn_closed(k, n)?.shift(signed(k) - signed(n)))
}

/// `Σ_{i<k} C(n,i)(−1)^i q^{i(n−k)} (qⁱ[k−i]ⁿ − qⁿ[k−i−1]ⁿ)`.
pub fn e_tilde_first_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    if let Some(z) = e_trivial(k, n)? {
        return Ok(z);
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let bracket = qint(k - i).pow(n as u32).shift(signed(i))
            - qint(k - i - 1).pow(n as u32).shift(signed(n));
        total += &bracket
            .shift(signed(i * (n - k)))
            .scale(&(binom(n, signed(i)) * sign(i)));
    }
    Ok(total)
}

/// `Σ_{i<k} (−1)^i [k−i]ⁿ q^{i(n−k)} (C(n,i) qⁱ + C(n,i−1) qᵏ)`.
pub fn e_tilde_second_sum(k: usize, n: usize) -> Result<LaurentPoly> {
    if let Some(z) = e_trivial(k, n)? {
        return Ok(z);
    }
    let mut total = LaurentPoly::zero();
    for i in 0..k {
        let si = signed(i);
        let inner = LaurentPoly::monomial(binom(n, si), si)
            + LaurentPoly::monomial(binom(n, si - 1), signed(k));
        let term = (qint(k - i).pow(n as u32) * inner).shift(signed(i * (n - k)));
        total += &term.scale(&BigInt::from(sign(i)));
    }
    Ok(total)
}

/// `Ẽ_{k,n}(q)`: coefficient of `q^ℓ` counts permutations with `k` weak
/// excedences and `ℓ` alignments.
///
/// # Panics
/// If the two closed sums disagree or differ from `q^{k(n−k)} E_{k,n}(q⁻¹)`.
pub fn e_tilde(k: usize, n: usize) -> Result<LaurentPoly> {
    let first = e_tilde_first_sum(k, n)?;
    assert_eq!(
        first,
        e_tilde_second_sum(k, n)?,
        "closed sums for E~_({k},{n}) disagree"
    );
    let reversed = e_kn_closed(k, n)?
        .substitute_inverse()
        .shift(signed(k * (n - k)));
    assert_eq!(
        first, reversed,
        "E~_({k},{n}) is not the reversal of E_({k},{n})"
    );
    Ok(first)
}

/// `Σ_{i=0}^{n−2} C(n, i+2) qⁱ`.
pub fn e_hat_two_row(n: usize) -> LaurentPoly {
    LaurentPoly::from_coeffs((0..n.saturating_sub(1)).map(|i| binom(n, signed(i + 2))))
}

/// `q^{k(n−k)−A(π)}` summed over regular permutations of `[n]` with `k`
/// weak excedences.
pub fn e_kn_bruteforce(k: usize, n: usize) -> Result<LaurentPoly> {
    check_kn(k, n)?;
    Error::check_bound("permutation size n", n, E_BRUTEFORCE_BOUND)?;
    let mut counts = alloc::vec![0u64; k * (n - k) + 1];
    for t in Permutations::new(n) {
        let p = DecoratedPermutation::regular(t)?;
        if p.k_stat() == k {
            counts[p.rank()] += 1;
        }
    }
    Ok(LaurentPoly::from_coeffs(counts))
}

/// `N_{k,n} = C(n,k) C(n,k−1) / n`; zero outside `1 ≤ k ≤ n`.
pub fn narayana(k: usize, n: usize) -> BigInt {
    if k == 0 || k > n {
        return BigInt::zero();
    }
    binom(n, signed(k)) * binom(n, signed(k) - 1) / BigInt::from(n)
}

/// `C(2n, n) / (n+1)`.
pub fn catalan(n: usize) -> BigInt {
    binom(2 * n, signed(n)) / BigInt::from(n + 1)
}

/// Permutations of `[n]` with `k` weak excedences:
/// `Σ_{i=0}^{k} (−1)^i C(n+1,i) (k−i)ⁿ`. For `n ≥ 1`, `k = 0` gives 0.
pub fn eulerian(k: usize, n: usize) -> BigInt {
    (0..=k)
        .map(|i| binom(n + 1, signed(i)) * sign(i) * Pow::pow(BigInt::from(k - i), n as u32))
        .sum()
}

/// The alignment-preserving bijection `b_i = n − a_{n+1−i} (mod n)` on
/// permutations in one-line notation, with representatives in `1..=n`.
/// It sends `k` weak excedences to `n+1−k`. Input and output are 0-based.
pub fn excedence_flip(a: &[usize]) -> Vec<usize> {
    let n = a.len();
    (1..=n)
        .map(|i| {
            let b = (n - (a[n - i] + 1)) % n;
            if b == 0 {
                n - 1
            } else {
                b - 1
            }
        })
        .collect()
}

/// Coefficients of a polynomial from `q⁰` up to its degree.
fn dense(p: &LaurentPoly) -> Vec<BigInt> {
    let top = p.max_exponent().unwrap_or(-1);
    (0..=top).map(|e| p.coeff(e)).collect()
}

/// True when the coefficients rise weakly and then fall weakly.
pub fn is_unimodal(p: &LaurentPoly) -> bool {
    let mut falling = false;
    for w in dense(p).windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// A case where an observed pattern fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub k: usize,
    pub n: usize,
    pub observed: BigInt,
    pub predicted: BigInt,
}

/// Findings from checking the two unproven observations about `Ê`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmpiricalFindings {
    pub max_n: usize,
    pub cases: usize,
    /// Failures of `[q¹] Ê_{k,n} = C(n,k+1) C(n,k−2)`.
    pub linear_coefficient_failures: Vec<Counterexample>,
    /// `(k, n)` whose `Ê` coefficients are not unimodal.
    pub non_unimodal: Vec<(usize, usize)>,
}

impl EmpiricalFindings {
    pub fn all_hold(&self) -> bool {
        self.linear_coefficient_failures.is_empty() && self.non_unimodal.is_empty()
    }
}

/// Tests both observations for `1 ≤ k ≤ n ≤ max_n` and records every
/// failure instead of stopping.
pub fn empirical_findings(max_n: usize) -> Result<EmpiricalFindings> {
    let mut out = EmpiricalFindings {
        max_n,
        ..Default::default()
    };
    for n in 1..=max_n {
        for k in 1..=n {
            out.cases += 1;
            let e = e_hat(k, n)?;
            let observed = e.coeff(1);
            let predicted = binom(n, signed(k) + 1) * binom(n, signed(k) - 2);
            if observed != predicted {
                out.linear_coefficient_failures.push(Counterexample {
                    k,
                    n,
                    observed,
                    predicted,
                });
            }
            if !is_unimodal(&e) {
                out.non_unimodal.push((k, n));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn a_kn_examples() {
        assert_eq!(
            a_kn_closed(2, 5).unwrap(),
            lp("q^6+5q^5+15q^4+30q^3+40q^2+30q+10")
        );
        assert_eq!(a_kn_closed(1, 1).unwrap(), LaurentPoly::one());
        assert_eq!(a_kn_closed(0, 4).unwrap(), LaurentPoly::one());
        assert!(a_kn_closed(5, 3).is_err());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(2, 4).unwrap(), BigInt::one());
        assert_eq!(euler_characteristic(3, 6).unwrap(), BigInt::one());
    }

    #[test]
    fn a_k_series_examples() {
        let s = a_k_series_alternating(1, 4).unwrap();
        let c = a_k_series_chains(1, 4).unwrap();
        for (n, want) in [
            (0, "0"),
            (1, "1"),
            (2, "q+2"),
            (3, "q^2+3q+3"),
            (4, "q^3+4q^2+6q+4"),
        ] {
            assert_eq!(s.coeff(n, 0), &lp(want), "x^{n}");
            assert_eq!(c.coeff(n, 0), &lp(want), "x^{n}");
        }
        let s = a_k_series_chains(2, 4).unwrap();
        assert_eq!(s.coeff(4, 0), &lp("q^4+4q^3+10q^2+12q+6"));
        assert!(s.coeff(1, 0).is_zero());
    }

    #[test]
    fn master_series_small() {
        for form in [MasterForm::Product, MasterForm::PartialFractions] {
            let m = master_series(4, 2, form);
            assert_eq!(m.coeff(4, 2), &lp("q^4+4q^3+10q^2+12q+6"));
            for n in 0..=4 {
                assert!(m.coeff(n, 0).is_zero());
            }
        }
    }

    #[test]
    fn eulerian_family_examples() {
        assert_eq!(e_hat(3, 5).unwrap(), lp("20+25q+15q^2+5q^3+q^4"));
        assert_eq!(e_hat(1, 6).unwrap(), LaurentPoly::one());
        assert_eq!(e_kn_from_a(2, 4).unwrap(), lp("6q^2+4q^3+q^4"));
        assert_eq!(e_kn_from_a(1, 2).unwrap(), lp("q"));
        assert_eq!(e_kn_bruteforce(2, 4).unwrap(), lp("6q^2+4q^3+q^4"));
        assert_eq!(e_tilde(2, 4).unwrap(), lp("1+4q+6q^2"));
        assert!(e_kn_closed(0, 3).unwrap().is_zero());
        assert!(e_kn_bruteforce(2, 10).is_err());
    }

    #[test]
    fn reference_numbers() {
        assert_eq!(narayana(2, 4), BigInt::from(6));
        assert_eq!(catalan(4), BigInt::from(14));
        assert_eq!(eulerian(2, 4), BigInt::from(11));
        assert_eq!(catalan(0), BigInt::one());
    }

    #[test]
    fn flip_sends_k_to_n_plus_one_minus_k() {
        for n in 1..=6 {
            let mut images = alloc::collections::BTreeSet::new();
            for a in Permutations::new(n) {
                let b = excedence_flip(&a);
                let (pa, pb) = (
                    DecoratedPermutation::regular(a.clone()).unwrap(),
                    DecoratedPermutation::regular(b.clone()).unwrap(),
                );
                assert_eq!(pb.k_stat(), n + 1 - pa.k_stat(), "{pa}");
                assert_eq!(pb.alignments(), pa.alignments(), "{pa}");
                images.insert(b);
            }
            assert_eq!(images.len(), Permutations::new(n).count());
        }
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&lp("1+3q+3q^2+q^3")));
        assert!(is_unimodal(&lp("2+2q+q^2")));
        assert!(!is_unimodal(&lp("2+q+2q^2")));
        assert!(is_unimodal(&LaurentPoly::one()));
    }
}
