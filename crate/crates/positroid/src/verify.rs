//! Verification suites. Each suite returns one [`CheckReport`] per check;
//! a suite passes when no report has status `fail`. Findings about
//! unproven statements are reported with status `finding` and never fail.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use positroid_core::algebra::binomial;
use positroid_core::bijections::{self, enumerate_noncrossing, from_noncrossing, to_noncrossing};
use positroid_core::decperm::{DecoratedPermutation, Permutations};
use positroid_core::formulas::{self, MasterForm};
use positroid_core::identities;
use positroid_core::lediagram;
use positroid_core::{Error, LaurentPoly, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::json::CheckReport;
use crate::parallel;
use crate::tables::{A_TABLE, EHAT_TABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Oracles,
    Identities,
    Poset,
    Bijections,
    Permanent,
    Empirical,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Tables,
        Suite::Oracles,
        Suite::Identities,
        Suite::Poset,
        Suite::Bijections,
        Suite::Permanent,
        Suite::Empirical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Oracles => "oracles",
            Suite::Identities => "identities",
            Suite::Poset => "poset",
            Suite::Bijections => "bijections",
            Suite::Permanent => "permanent",
            Suite::Empirical => "empirical",
            Suite::All => "all",
        }
    }

    /// `(default, limit)` for `--max-n`, where the suite has one.
    pub fn max_n_range(self) -> Option<(usize, usize)> {
        match self {
            Suite::Oracles => Some((8, 9)),
            Suite::Poset => Some((6, 7)),
            Suite::Bijections => Some((9, 10)),
            Suite::Permanent => Some((10, bijections::PERMANENT_BOUND)),
            Suite::Empirical => Some((9, 16)),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides each suite's default size bound.
    pub max_n: Option<usize>,
    /// Seed for the sampled checks.
    pub seed: u64,
    /// Rational sample points per partial-fraction check.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            seed: 0,
            samples: 5,
        }
    }
}

impl VerifyConfig {
    fn max_n(&self, suite: Suite) -> usize {
        let (default, _) = suite.max_n_range().expect("suite has a size bound");
        self.max_n.unwrap_or(default)
    }
}

fn members(suite: Suite) -> Vec<Suite> {
    match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    }
}

/// Rejects configurations beyond the resource limits before any work.
pub fn check_config(suite: Suite, cfg: &VerifyConfig) -> Result<()> {
    if let Some(n) = cfg.max_n {
        for s in members(suite) {
            if let Some((_, limit)) = s.max_n_range() {
                Error::check_bound(s.name(), n, limit)?;
            }
        }
    }
    if cfg.samples == 0 {
        return Err(Error::Domain("at least one sample point is needed".into()));
    }
    Ok(())
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    check_config(suite, cfg)?;
    let mut out = Vec::new();
    for s in members(suite) {
        out.extend(match s {
            Suite::Tables => tables()?,
            Suite::Oracles => oracles(cfg.max_n(s))?,
            Suite::Identities => identities(cfg)?,
            Suite::Poset => poset(cfg.max_n(s))?,
            Suite::Bijections => bijection_checks(cfg.max_n(s))?,
            Suite::Permanent => permanent(cfg.max_n(s))?,
            Suite::Empirical => empirical(cfg.max_n(s))?,
            Suite::All => unreachable!(),
        });
    }
    Ok(out)
}

fn mismatch(label: impl fmt::Display, got: impl fmt::Display, want: impl fmt::Display) -> String {
    format!("{label}: computed {got}, expected {want}")
}

// ---------------------------------------------------------------------------

pub fn tables() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (k, n, text) in A_TABLE {
        let want: LaurentPoly = text.parse()?;
        let got = formulas::a_kn_closed(k, n)?;
        let rendered = got.descending().to_string();
        let bad = (got != want || rendered != text)
            .then(|| mismatch(format!("A_({k},{n})"), &rendered, text));
        out.push(CheckReport::new("table A_kn", json!({"k": k, "n": n}), bad));
    }
    for (k, n, text) in EHAT_TABLE {
        let want: LaurentPoly = text.parse()?;
        let got = formulas::e_hat(k, n)?;
        let rendered = got.to_string();
        let bad = (got != want || rendered != text)
            .then(|| mismatch(format!("Ehat_({k},{n})"), &rendered, text));
        out.push(CheckReport::new(
            "table Ehat_kn",
            json!({"k": k, "n": n}),
            bad,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

/// Largest `n` for the brute-force `E_{k,n}` comparison at a given A bound.
pub fn e_bruteforce_max(max_n: usize) -> usize {
    (max_n + 1).min(formulas::E_BRUTEFORCE_BOUND)
}

pub fn oracles(max_n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let le = parallel::a_kn_lediagram_all(n)?;
        let dp = parallel::a_kn_decperm_all(n);
        let mut bad = None;
        for k in 0..=n {
            let closed = formulas::a_kn_closed(k, n)?;
            let routes = [
                ("Le-diagram enumeration", le[k].clone()),
                ("decorated permutation enumeration", dp[k].clone()),
                ("F_lambda recurrence", lediagram::a_kn_recurrence(k, n)?),
                ("F_lambda closed form", lediagram::a_kn_from_closed_f(k, n)?),
            ];
            if let Some((name, got)) = routes.into_iter().find(|(_, p)| *p != closed) {
                bad = Some(mismatch(format!("A_({k},{n}) by {name}"), got, &closed));
                break;
            }
        }
        out.push(CheckReport::new(
            "A_kn oracles agree with closed form",
            json!({"n": n}),
            bad,
        ));
    }

    let mut bad = None;
    'euler: for n in 1..=12 {
        for k in 1..=n {
            let chi = formulas::euler_characteristic(k, n)?;
            let sym = formulas::a_kn_closed(n - k, n)?;
            if !chi.is_one() {
                bad = Some(mismatch(format!("A_({k},{n})(-1)"), chi, 1));
                break 'euler;
            }
            if sym != formulas::a_kn_closed(k, n)? {
                bad = Some(format!("A_({k},{n}) differs from A_({},{n})", n - k));
                break 'euler;
            }
        }
    }
    out.push(CheckReport::new(
        "A_kn(-1) = 1 and A_kn = A_(n-k)n",
        json!({"max_n": 12}),
        bad,
    ));

    let e_max = e_bruteforce_max(max_n);
    for n in 1..=e_max {
        let census = parallel::regular_census(n);
        let mut bad = None;
        for k in 1..=n {
            let closed = formulas::e_kn_closed(k, n)?;
            let from_a = formulas::e_kn_from_a(k, n)?;
            if census.e_by_k[k] != closed {
                bad = Some(mismatch(
                    format!("E_({k},{n}) by enumeration"),
                    &census.e_by_k[k],
                    &closed,
                ));
                break;
            }
            if from_a != closed {
                bad = Some(mismatch(
                    format!("E_({k},{n}) by binomial transform"),
                    from_a,
                    &closed,
                ));
                break;
            }
        }
        out.push(CheckReport::new(
            "E_kn enumeration = closed sums = transform of A",
            json!({"n": n}),
            bad,
        ));
    }

    out.push(CheckReport::new(
        "q-Eulerian properties",
        json!({"max_n": 12}),
        q_eulerian_properties(12)?,
    ));
    out.push(CheckReport::new(
        "excedence flip is an alignment-preserving bijection",
        json!({"max_n": 7}),
        flip_check(7),
    ));
    Ok(out)
}

/// First failure among the stated properties of `Ê_{k,n}` and `Ẽ_{k,n}`.
pub fn q_eulerian_properties(max_n: usize) -> Result<Option<String>> {
    let zero = BigRational::zero();
    let minus_one = -BigRational::one();
    for n in 1..=max_n {
        for k in 1..=n {
            let e = formulas::e_hat(k, n)?;
            let label = format!("Ehat_({k},{n})");
            if e != formulas::e_hat(n + 1 - k, n)? {
                return Ok(Some(format!(
                    "{label} differs from Ehat_({},{n})",
                    n + 1 - k
                )));
            }
            let at0 = e.eval(&zero)?;
            let nar = BigRational::from_integer(formulas::narayana(k, n));
            if at0 != nar {
                return Ok(Some(mismatch(format!("{label}(0)"), at0, nar)));
            }
            let at_m1 = e.eval(&minus_one)?.abs();
            let b = BigRational::from_integer(binomial(n as i64 - 1, k as i64 - 1));
            if at_m1 != b {
                return Ok(Some(mismatch(format!("|{label}(-1)|"), at_m1, b)));
            }
            if e.value_at_one() != formulas::eulerian(k, n) {
                return Ok(Some(mismatch(
                    format!("{label}(1)"),
                    e.value_at_one(),
                    formulas::eulerian(k, n),
                )));
            }
            let deg = ((k - 1) * (n - k)) as i64;
            if !e.is_polynomial() || e.max_exponent() != Some(deg) || !e.coeff(deg).is_one() {
                return Ok(Some(format!(
                    "{label} = {e} does not have degree {deg} with leading coefficient 1"
                )));
            }
            if k == 2 && e != formulas::e_hat_two_row(n) {
                return Ok(Some(mismatch(&label, e, formulas::e_hat_two_row(n))));
            }
            let first = formulas::e_tilde_first_sum(k, n)?;
            let second = formulas::e_tilde_second_sum(k, n)?;
            let reversed = formulas::e_kn_closed(k, n)?
                .substitute_inverse()
                .shift((k * (n - k)) as i64);
            if first != second || first != reversed {
                return Ok(Some(format!(
                    "Etilde_({k},{n}): sums {first} and {second}, reversal {reversed}"
                )));
            }
        }
    }
    Ok(None)
}

fn flip_check(max_n: usize) -> Option<String> {
    for n in 1..=max_n {
        let mut seen = std::collections::BTreeSet::new();
        for a in Permutations::new(n) {
            let b = formulas::excedence_flip(&a);
            let (pa, pb) = (
                DecoratedPermutation::regular(a.clone()).expect("bijection"),
                DecoratedPermutation::regular(b.clone()).ok()?,
            );
            if formulas::excedence_flip(&b) != a
                || pb.k_stat() != n + 1 - pa.k_stat()
                || pb.alignments() != pa.alignments()
            {
                return Some(format!("{pa} maps to {pb}"));
            }
            seen.insert(b);
        }
        let total: usize = (1..=n).product();
        if seen.len() != total {
            return Some(format!("flip is not onto for n = {n}"));
        }
    }
    None
}

// ---------------------------------------------------------------------------

fn sample_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(num.into(), den.into())
}

/// `count` points `(q, y)` at which every `β_i(j)`, `j ≤ i`, is finite.
/// Points at a pole are redrawn.
pub fn beta_samples(i: usize, count: usize, seed: u64) -> Result<Vec<(BigRational, BigRational)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (q, y) = (sample_rational(&mut rng), sample_rational(&mut rng));
        let finite = (0..=i).all(|j| identities::beta(i, j).and_then(|b| b.eval(&q, &y)).is_ok());
        if finite {
            out.push((q, y));
        }
    }
    Ok(out)
}

pub fn identities(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let fmt_mismatch = |m: Option<identities::Mismatch>| m.map(|m| m.to_string());

    out.push(CheckReport::new(
        "A(q,x,y) product form = partial fraction form",
        json!({"x_order": 10, "y_order": 6}),
        fmt_mismatch(identities::theorem_identity_mismatch(10, 6)),
    ));
    for j in 0..=6 {
        out.push(CheckReport::new(
            "partition lemma",
            json!({"j": j, "y_order": 14}),
            fmt_mismatch(identities::partition_lemma_mismatch(j, 14)),
        ));
    }
    out.push(CheckReport::new(
        "q^-1 form, j = 0",
        json!({"y_order": 14}),
        fmt_mismatch(identities::identity1_mismatch(14)),
    ));
    for j in 1..=6 {
        out.push(CheckReport::new(
            "q^-1 form, j > 0",
            json!({"j": j, "y_order": 10}),
            fmt_mismatch(identities::identity2_mismatch(j, 10)),
        ));
    }
    out.push(CheckReport::new(
        "q -> 1/q maps summands termwise",
        json!({"max_j": 6, "y_order": 8}),
        identities::substitution_mismatch(6, 8)
            .map(|(j, i)| format!("summand i = {i} for j = {j}")),
    ));
    let mut bad = None;
    'tele: for j in 0..=4 {
        for m in j + 1..=j + 6 {
            if let Some(mm) = identities::telescoping_mismatch(j, m, 14)? {
                bad = Some(format!("j = {j}, m = {m}: {mm}"));
                break 'tele;
            }
        }
    }
    out.push(CheckReport::new(
        "telescoping partial sums",
        json!({"max_j": 4, "max_m": "j+6", "y_order": 14}),
        bad,
    ));
    for i in 1..=5 {
        let samples = beta_samples(i, cfg.samples, cfg.seed)?;
        let ok = identities::verify_partial_fraction(i, &samples)?;
        let pts: Vec<String> = samples.iter().map(|(q, y)| format!("({q}, {y})")).collect();
        out.push(CheckReport::new(
            "beta_i(j) partial fractions",
            json!({"i": i, "seed": cfg.seed, "samples": pts}),
            (!ok).then(|| format!("x^{i} differs from the expansion at one of the samples")),
        ));
    }
    for (j, i_max, w) in [(0, 6, 12), (1, 5, 12), (2, 6, 14), (3, 7, 16)] {
        let r = identities::involution_check(j, i_max, w)?;
        let params = json!({"j": j, "i_max": i_max, "weight_bound": w, "pairs": r.pairs, "unpaired": r.unpaired.len()});
        let bad = (!r.holds()).then(|| {
            format!(
                "involution {} sign-reversing {} weight-preserving {} census {} unpaired sum {} ({})",
                r.involution,
                r.sign_reversing,
                r.weight_preserving,
                r.census_matches,
                r.unpaired_sum_matches,
                identities::census_to_string(&r.unpaired_sum)
            )
        });
        out.push(CheckReport::new(
            "partition-pair involution",
            params.clone(),
            bad,
        ));
        let literal = (!r.literal_counted_matches || !r.literal_ignored_matches).then(|| {
            format!(
                "exact-equality reading reproduces the summands: zero rows counted {}, ignored {}",
                r.literal_counted_matches, r.literal_ignored_matches
            )
        });
        out.push(CheckReport::finding(
            "partition-pair exact-equality reading",
            params,
            literal,
        ));
    }
    out.extend(master_series_checks()?);
    Ok(out)
}

/// Coefficients of the series forms against `A_{k,n}(q)`.
pub fn master_series_checks() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for form in [MasterForm::Product, MasterForm::PartialFractions] {
        let s = formulas::master_series(8, 8, form);
        let mut bad = None;
        // The sum starts at k = 1, so the y⁰ column vanishes, as does k > n.
        'coef: for n in 0..=8 {
            for k in 0..=8 {
                let want = if k >= 1 && k <= n {
                    formulas::a_kn_closed(k, n)?
                } else {
                    LaurentPoly::zero()
                };
                if *s.coeff(n, k) != want {
                    bad = Some(mismatch(format!("[x^{n} y^{k}]"), s.coeff(n, k), want));
                    break 'coef;
                }
            }
        }
        out.push(CheckReport::new(
            "A(q,x,y) coefficients",
            json!({"form": format!("{form:?}"), "max_n": 8}),
            bad,
        ));
    }
    for formula in [
        formulas::Formula::AkAlternating,
        formulas::Formula::AkChains,
    ] {
        let mut bad = None;
        'k: for k in 1..=5 {
            let s = formulas::a_k_series(k, 10, formula)?.value;
            for n in 0..=10 {
                let want = if k <= n {
                    formulas::a_kn_closed(k, n)?
                } else {
                    LaurentPoly::zero()
                };
                if *s.coeff(n, 0) != want {
                    bad = Some(mismatch(format!("[x^{n}] A_{k}(q,x)"), s.coeff(n, 0), want));
                    break 'k;
                }
            }
        }
        out.push(CheckReport::new(
            "A_k(q,x) coefficients",
            json!({"form": formula.name(), "max_k": 5, "max_n": 10}),
            bad,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

/// First failure among the structural properties of `CB_{k,n}`.
pub fn poset_properties(k: usize, n: usize, bound: usize) -> Result<(Option<String>, bool)> {
    let p = parallel::build_cb(k, n, bound)?;
    let a = formulas::a_kn_closed(k, n)?;
    let top = k * (n - k);
    let want: Vec<usize> = (0..=top)
        .map(|l| a.coeff((top - l) as i64).try_into().expect("small count"))
        .collect();
    let jumps = p.has_crossing_jump();
    let hist = p.corank_histogram();
    if hist != want {
        return Ok((
            Some(mismatch(
                "corank histogram",
                format!("{hist:?}"),
                format!("{want:?}"),
            )),
            jumps,
        ));
    }
    if let Some((u, v)) = p.find_bad_grading() {
        let (eu, ev) = (&p.elements()[u], &p.elements()[v]);
        return Ok((
            Some(format!(
                "edge {eu} -> {ev}: A {} -> {}",
                eu.alignments(),
                ev.alignments()
            )),
            jumps,
        ));
    }
    let tops = p.top_elements();
    let pi = DecoratedPermutation::pi_k(k, n)?;
    if tops.len() != 1 || p.elements()[tops[0]] != pi {
        let found: Vec<String> = tops.iter().map(|&i| p.elements()[i].to_string()).collect();
        return Ok((
            Some(format!("corank-0 elements {found:?}, expected [{pi}]")),
            jumps,
        ));
    }
    if !p.is_cyclic_automorphism() {
        return Ok((
            Some("long-cycle relabeling is not an automorphism".into()),
            jumps,
        ));
    }
    if let Some((u, v)) = p.find_crossing_increase() {
        return Ok((
            Some(format!(
                "crossings do not drop along {} -> {}",
                p.elements()[u],
                p.elements()[v]
            )),
            jumps,
        ));
    }
    Ok((None, jumps))
}

pub fn poset(max_n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            let (bad, jumps) =
                poset_properties(k, n, max_n.max(positroid_core::poset::DEFAULT_BOUND))?;
            out.push(CheckReport::new(
                "CB_kn structure",
                json!({"k": k, "n": n, "crossing_drop_above_one": jumps}),
                bad,
            ));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

pub fn bijection_checks(max_n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let census = parallel::regular_census(n);
        let mut bad = census.above_bound.clone();
        for k in 1..=n {
            if bad.is_none() && BigInt::from(census.max_alignment[k]) != formulas::narayana(k, n) {
                bad = Some(mismatch(
                    format!("max-alignment count, k = {k}"),
                    census.max_alignment[k],
                    formulas::narayana(k, n),
                ));
            }
        }
        let total: u64 = census.max_alignment.iter().sum();
        if bad.is_none() && BigInt::from(total) != formulas::catalan(n) {
            bad = Some(mismatch("max-alignment total", total, formulas::catalan(n)));
        }
        out.push(CheckReport::new(
            "max-alignment counts are Narayana and Catalan",
            json!({"n": n}),
            bad,
        ));
    }
    for n in 1..=max_n.min(8) {
        out.push(CheckReport::new(
            "noncrossing bijection round trips",
            json!({"n": n}),
            roundtrip(n)?,
        ));
    }
    Ok(out)
}

fn roundtrip(n: usize) -> Result<Option<String>> {
    let mut by_k = vec![0u64; n + 1];
    for part in enumerate_noncrossing(n, None)? {
        by_k[part.block_count()] += 1;
        let p = from_noncrossing(&part)?;
        if p.k_stat() != part.block_count() || to_noncrossing(&p)? != part {
            return Ok(Some(format!("{part} -> {p} does not return")));
        }
    }
    for (k, &count) in by_k.iter().enumerate().skip(1) {
        if BigInt::from(count) != formulas::narayana(k, n) {
            return Ok(Some(mismatch(
                format!("noncrossing partitions with {k} blocks"),
                count,
                formulas::narayana(k, n),
            )));
        }
    }
    for p in parallel::max_alignment_perms(n) {
        let back = from_noncrossing(&to_noncrossing(&p)?)?;
        if back != p {
            return Ok(Some(format!("{p} -> {back}")));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------

pub fn permanent(max_n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let m = parallel::permanent_mn(n)?;
        let mut bad = None;
        for k in 0..=n {
            let want = formulas::a_kn_closed(k, n)?.value_at_one();
            let got = m.get(k).cloned().unwrap_or_default();
            if got != want {
                bad = Some(mismatch(format!("[x^{k}] M_{n}"), got, want));
                break;
            }
        }
        let sum: BigInt = m.iter().sum();
        if bad.is_none() && sum != bijections::fixed_point_weighted_count(n) {
            bad = Some(mismatch(
                format!("M_{n}(1)"),
                sum,
                bijections::fixed_point_weighted_count(n),
            ));
        }
        out.push(CheckReport::new(
            "M_n(x) coefficients are A_kn(1)",
            json!({"n": n}),
            bad,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

pub fn empirical(max_n: usize) -> Result<Vec<CheckReport>> {
    let f = formulas::empirical_findings(max_n)?;
    let lin = (!f.linear_coefficient_failures.is_empty()).then(|| {
        let c = &f.linear_coefficient_failures[0];
        format!(
            "{} counterexamples; first Ehat_({},{}): [q] = {}, C(n,k+1)C(n,k-2) = {}",
            f.linear_coefficient_failures.len(),
            c.k,
            c.n,
            c.observed,
            c.predicted
        )
    });
    let uni = (!f.non_unimodal.is_empty()).then(|| format!("not unimodal: {:?}", f.non_unimodal));
    Ok(vec![
        CheckReport::finding(
            "[q] Ehat_kn = C(n,k+1)C(n,k-2)",
            json!({"max_n": max_n, "cases": f.cases}),
            lin,
        ),
        CheckReport::finding(
            "Ehat_kn coefficients unimodal",
            json!({"max_n": max_n, "cases": f.cases}),
            uni,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn over_bound_is_rejected_up_front() {
        let cfg = VerifyConfig {
            max_n: Some(20),
            ..Default::default()
        };
        assert!(matches!(
            check_config(Suite::Oracles, &cfg),
            Err(Error::Resource { .. })
        ));
        assert!(check_config(Suite::Tables, &cfg).is_ok());
        assert!(matches!(
            check_config(Suite::All, &cfg),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn beta_samples_are_seeded() {
        let a = beta_samples(3, 5, 7).unwrap();
        assert_eq!(a, beta_samples(3, 5, 7).unwrap());
        assert_ne!(a, beta_samples(3, 5, 8).unwrap());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig {
            max_n: Some(4),
            ..Default::default()
        };
        for s in [
            Suite::Tables,
            Suite::Oracles,
            Suite::Poset,
            Suite::Bijections,
            Suite::Permanent,
        ] {
            let reports = run(s, &cfg).unwrap();
            assert!(reports.iter().all(|r| !r.failed()), "{s}: {reports:?}");
        }
    }
}
