//! JSON encodings: polynomials, series, permutation statistics, posets and
//! verification reports. Every encoder has a matching decoder where the
//! value can be read back.

use num_bigint::BigInt;
use positroid_core::decperm::DecoratedPermutation;
use positroid_core::poset::CbPoset;
use positroid_core::{BiSeries, Error, LaurentPoly, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `[[exponent, "coefficient"], …]`, ascending.
pub type QTerms = Vec<(i64, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub q_terms: QTerms,
}

pub fn q_terms(p: &LaurentPoly) -> QTerms {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

pub fn poly_from_terms(terms: &QTerms) -> Result<LaurentPoly> {
    let mut parsed = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("coefficient {c:?} is not a decimal integer")))?;
        parsed.push((*e, c));
    }
    if !parsed.windows(2).all(|w| w[0].0 < w[1].0) {
        return Err(Error::Parse(
            "q_terms must be strictly ascending by exponent".into(),
        ));
    }
    Ok(LaurentPoly::from_terms(parsed))
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(PolyJson {
        q_terms: q_terms(p),
    })
    .expect("plain data serializes")
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let parsed: PolyJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    poly_from_terms(&parsed.q_terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub x_order: usize,
    pub y_order: usize,
    /// `[a, b, q_terms]` for each nonzero coefficient of `x^a y^b`.
    pub coeffs: Vec<(usize, usize, QTerms)>,
}

pub fn series_to_json(s: &BiSeries) -> Value {
    let coeffs = s
        .nonzero_terms()
        .map(|(a, b, c)| (a, b, q_terms(c)))
        .collect();
    serde_json::to_value(SeriesJson {
        x_order: s.x_order(),
        y_order: s.y_order(),
        coeffs,
    })
    .expect("plain data serializes")
}

pub fn series_from_json(v: &Value) -> Result<BiSeries> {
    let parsed: SeriesJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut s = BiSeries::zero(parsed.x_order, parsed.y_order);
    for (a, b, terms) in &parsed.coeffs {
        if *a > parsed.x_order || *b > parsed.y_order {
            return Err(Error::Parse(format!(
                "coefficient x^{a} y^{b} lies beyond the truncation"
            )));
        }
        s.set_coeff(*a, *b, poly_from_terms(terms)?);
    }
    Ok(s)
}

/// A chord as `[start, end]`, 1-based.
pub type Chord = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermStats {
    pub permutation: String,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "A")]
    pub a: usize,
    pub rank: usize,
    pub alignments: Vec<(Chord, Chord)>,
    pub crossings: Vec<(Chord, Chord)>,
}

fn chords(p: &DecoratedPermutation, pairs: &[(usize, usize)]) -> Vec<(Chord, Chord)> {
    pairs
        .iter()
        .map(|&(i, j)| ((i + 1, p.target(i) + 1), (j + 1, p.target(j) + 1)))
        .collect()
}

/// Statistics of `p`. Fails when `A` exceeds `k(n−k)`, which would make the
/// rank negative.
pub fn perm_stats(p: &DecoratedPermutation) -> Result<PermStats> {
    let (k, n, a) = (p.k_stat(), p.n(), p.alignments());
    let rank = (k * (n - k))
        .checked_sub(a)
        .ok_or_else(|| Error::Domain(format!("{p}: A = {a} exceeds k(n-k)")))?;
    Ok(PermStats {
        permutation: p.to_string(),
        k,
        a,
        rank,
        alignments: chords(p, &p.alignment_pairs()),
        crossings: chords(p, &p.crossing_pairs()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub k: usize,
    pub n: usize,
    pub elements: Vec<String>,
    /// `[upper, lower]` indices into `elements`.
    pub edges: Vec<(usize, usize)>,
    /// Number of distinct simple crossings realizing each edge.
    pub multiplicity: Vec<usize>,
    pub corank: Vec<usize>,
}

pub fn poset_to_json(p: &CbPoset) -> PosetJson {
    PosetJson {
        k: p.k(),
        n: p.n(),
        elements: p.elements().iter().map(ToString::to_string).collect(),
        edges: p.edges().to_vec(),
        multiplicity: p.edge_multiplicity().to_vec(),
        corank: p.corank().to_vec(),
    }
}

impl PosetJson {
    /// Parses the element encodings and checks the stored coranks.
    pub fn elements(&self) -> Result<Vec<DecoratedPermutation>> {
        let elements: Vec<DecoratedPermutation> = self
            .elements
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        if elements.len() != self.corank.len()
            || elements
                .iter()
                .zip(&self.corank)
                .any(|(e, &c)| e.alignments() != c)
        {
            return Err(Error::Parse(
                "corank list does not match the elements".into(),
            ));
        }
        Ok(elements)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A reported observation about an unproven statement; never a failure.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub parameters: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_discrepancy: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, parameters: Value, discrepancy: Option<String>) -> Self {
        let status = if discrepancy.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        Self {
            check: check.into(),
            parameters,
            status,
            first_discrepancy: discrepancy,
        }
    }

    pub fn finding(
        check: impl Into<String>,
        parameters: Value,
        observation: Option<String>,
    ) -> Self {
        let status = if observation.is_some() {
            Status::Finding
        } else {
            Status::Pass
        };
        Self {
            check: check.into(),
            parameters,
            status,
            first_discrepancy: observation,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let p: LaurentPoly = "-3q^-2+1+12345678901234567890q^7".parse().unwrap();
        let v = poly_to_json(&p);
        assert_eq!(v["q_terms"][0], serde_json::json!([-2, "-3"]));
        assert_eq!(poly_from_json(&v).unwrap(), p);
        assert!(poly_from_json(&serde_json::json!({"q_terms": [[1, "2"], [0, "1"]]})).is_err());
        assert!(poly_from_json(&serde_json::json!({"q_terms": [[0, "x"]]})).is_err());
    }

    #[test]
    fn series_round_trip() {
        let s = positroid_core::formulas::master_series(
            3,
            2,
            positroid_core::formulas::MasterForm::Product,
        );
        let v = series_to_json(&s);
        assert_eq!(series_from_json(&v).unwrap(), s);
        let bad = serde_json::json!({"x_order": 1, "y_order": 1, "coeffs": [[2, 0, [[0, "1"]]]]});
        assert!(series_from_json(&bad).is_err());
    }

    #[test]
    fn worked_example_stats() {
        let p: DecoratedPermutation = "3,1,5,4,8,6,7,2 ccw=4,7 cw=6".parse().unwrap();
        let s = perm_stats(&p).unwrap();
        assert_eq!((s.k, s.a, s.rank, s.alignments.len()), (5, 11, 4, 11));
        let back: PermStats = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
