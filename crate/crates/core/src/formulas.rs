//! Published closed forms for the chromatic curling numbers of each family,
//! kept as data so they can be checked rather than trusted.
//!
//! [`claimed_values`] gives the stated `(cn_chi, cnc_chi)` pair.
//! [`stated_class_sizes`] gives the class sizes that the accompanying
//! arguments and drawings assign to each colour; these are what explicit
//! witness colourings are checked against, and they do not always agree
//! with the claimed pair (blossoms of odd order, for one).

use serde::Serialize;
use thiserror::Error;

use crate::families::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("no closed form for {family} at n = {n} (needs n >= {min})")]
    UnsupportedParameter { family: Family, n: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimRecord {
    pub family: Family,
    pub n: usize,
    pub claimed_cn: Option<u64>,
    pub claimed_cnc: Option<u128>,
    /// Which result the claim comes from, and the parity case used.
    pub source: String,
}

/// Smallest order a closed form is stated for. Path formulas assume two
/// colour classes, so they start at 2.
pub fn claim_min_order(family: Family) -> usize {
    match family {
        Family::Path => 2,
        _ => 3,
    }
}

fn claim_label(family: Family) -> &'static str {
    match family {
        Family::Path => "paths",
        Family::Cycle => "cycles",
        Family::Wheel => "wheels (equal to rim)",
        Family::DoubleWheel => "double wheels",
        Family::Helm => "helms",
        Family::ClosedHelm => "closed helms",
        Family::Flower => "flowers",
        Family::Djembe => "djembes",
        Family::Sunflower => "sunflowers",
        Family::ClosedSunflower => "closed sunflowers",
        Family::Antiprism => "antiprisms",
        Family::Blossom => "blossoms",
    }
}

/// Exact division; every closed form here is integral for its parity.
fn exact(num: u128, den: u128) -> u128 {
    debug_assert_eq!(num % den, 0, "{num} / {den} is not integral");
    num / den
}

pub fn claimed_values(family: Family, n: usize) -> Result<ClaimRecord, FormulaError> {
    let min = claim_min_order(family);
    if n < min {
        return Err(FormulaError::UnsupportedParameter { family, n, min });
    }
    let even = n.is_multiple_of(2);
    let m = n as u128;
    let (cn, cnc): (u128, u128) = match (family, even) {
        (Family::Path, true) => (m / 2, exact(m * m, 4)),
        (Family::Path, false) => (m.div_ceil(2), exact(m * m - 1, 4)),
        (Family::Cycle | Family::Wheel, true) => (m / 2, exact(m * m, 4)),
        (Family::Cycle | Family::Wheel, false) => ((m - 1) / 2, exact((m - 1) * (m - 1), 4)),
        (Family::DoubleWheel | Family::ClosedHelm | Family::Djembe, true) => (m, m * m),
        (Family::DoubleWheel | Family::ClosedHelm | Family::Djembe, false) => {
            (m - 1, 2 * (m - 1) * (m - 1))
        }
        (Family::Helm, true) => (m + 1, exact(m * m * m + m * m, 4)),
        (Family::Helm, false) => (m + 1, exact((m - 1) * (m - 1) * (m + 1), 4)),
        (Family::Flower, true) => (m, exact(m * m * m, 4)),
        (Family::Flower, false) => (m, exact(m * (m - 1) * (m - 1), 4)),
        (Family::Sunflower, true) => (m + 1, exact((m + 1) * m * m, 4)),
        (Family::Sunflower, false) => (m + 1, exact((m + 1) * (m - 1) * (m - 1), 4)),
        (Family::ClosedSunflower, true) => (exact(m + 2, 2), exact(m * m * m * (m + 2), 16)),
        (Family::ClosedSunflower, false) => {
            (exact(m + 1, 2), exact((m + 1) * (m + 1) * (m + 1) * (m - 1), 16))
        }
        (Family::Antiprism, true) => (m / 2, exact(m * m * m * m, 16)),
        (Family::Antiprism, false) => (m.div_ceil(2), exact((m * m - 1) * (m * m - 1), 16)),
        (Family::Blossom, true) => (m / 2, exact(m * m * m * m, 16)),
        (Family::Blossom, false) => ((m - 1) / 2, exact((m * m - 1) * (m * m - 1), 16)),
    };
    Ok(ClaimRecord {
        family,
        n,
        claimed_cn: Some(cn as u64),
        claimed_cnc: Some(cnc),
        source: format!(
            "{}, {} n",
            claim_label(family),
            if even { "even" } else { "odd" }
        ),
    })
}

/// Class sizes the published argument assigns to colours `c_1, c_2, ...`
/// for the member of order `n`, or `None` below the stated range.
pub fn stated_class_sizes(family: Family, n: usize) -> Option<Vec<usize>> {
    if n < claim_min_order(family) {
        return None;
    }
    let even = n.is_multiple_of(2);
    let half = n / 2;
    let cycle = if even {
        vec![half, half]
    } else {
        vec![half, half, 1]
    };
    let doubled: Vec<usize> = cycle.iter().map(|t| 2 * t).chain([1]).collect();
    let sizes = match family {
        Family::Path => vec![n.div_ceil(2), n / 2],
        Family::Cycle => cycle,
        Family::Wheel => cycle.into_iter().chain([1]).collect(),
        Family::DoubleWheel | Family::ClosedHelm | Family::Djembe => doubled,
        Family::Helm | Family::Sunflower => [n + 1].into_iter().chain(cycle).collect(),
        Family::Flower if even => vec![n, half, half, 1],
        Family::Flower => vec![n, half, half, 1, 1],
        Family::ClosedSunflower if even => vec![half + 1, half, half, half],
        Family::ClosedSunflower => vec![half + 1, half + 1, half + 1, half],
        Family::Antiprism if even => vec![half; 4],
        Family::Antiprism => vec![half + 1, half + 1, half, half],
        Family::Blossom if even => vec![half, half, half, half, 1],
        Family::Blossom => vec![half + 1, half + 1, half, half, 1],
    };
    Some(sizes)
}
