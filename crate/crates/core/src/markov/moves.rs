use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toric::SigmaIndex;

/// A homogeneous binomial `∏ plus - ∏ minus` over covariance coordinates.
///
/// Common factors are cancelled, both sides are sorted, and the sign is fixed
/// so that the least index overall sits in `plus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MarkovMove {
    plus: Vec<SigmaIndex>,
    minus: Vec<SigmaIndex>,
}

impl MarkovMove {
    pub fn new(mut plus: Vec<SigmaIndex>, mut minus: Vec<SigmaIndex>) -> Result<MarkovMove> {
        plus.sort();
        minus.sort();
        let (mut p, mut m) = (Vec::new(), Vec::new());
        let (mut a, mut b) = (plus.into_iter().peekable(), minus.into_iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Less => p.push(a.next().expect("peeked")),
                    Ordering::Greater => m.push(b.next().expect("peeked")),
                    Ordering::Equal => {
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => p.push(a.next().expect("peeked")),
                (None, Some(_)) => m.push(b.next().expect("peeked")),
                (None, None) => break,
            }
        }
        if p.len() != m.len() {
            return Err(Error::Precondition(format!(
                "move is not homogeneous: {} factors against {}",
                p.len(),
                m.len()
            )));
        }
        if m.first() < p.first() {
            std::mem::swap(&mut p, &mut m);
        }
        Ok(MarkovMove { plus: p, minus: m })
    }

    /// The move with no factors.
    pub fn zero() -> MarkovMove {
        MarkovMove {
            plus: Vec::new(),
            minus: Vec::new(),
        }
    }

    pub fn plus(&self) -> &[SigmaIndex] {
        &self.plus
    }

    pub fn minus(&self) -> &[SigmaIndex] {
        &self.minus
    }

    pub fn degree(&self) -> usize {
        self.plus.len()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_empty()
    }

    /// Signed integer vector over `cols`, which must be sorted.
    pub fn to_vector(&self, cols: &[SigmaIndex]) -> Result<Vec<i64>> {
        let mut x = vec![0i64; cols.len()];
        for (side, sign) in [(&self.plus, 1), (&self.minus, -1)] {
            for s in side {
                let c = cols
                    .binary_search(s)
                    .map_err(|_| Error::IndexMismatch(format!("{s} is not a column")))?;
                x[c] += sign;
            }
        }
        Ok(x)
    }
}

impl Ord for MarkovMove {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), &self.plus, &self.minus).cmp(&(other.degree(), &other.plus, &other.minus))
    }
}

impl PartialOrd for MarkovMove {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for s in &self.plus {
            write!(f, "{s}")?;
        }
        f.write_str("-")?;
        for s in &self.minus {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn parse_side(text: &str) -> Result<Vec<SigmaIndex>> {
    let bad = || Error::Syntax(format!("expected factors like (1,2)(3,4), got {text:?}"));
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(bad)?;
    body.split(")(")
        .map(|pair| {
            let (i, j) = pair.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            SigmaIndex::new(i, j).ok_or_else(bad)
        })
        .collect()
}

/// Parses the [`Display`](fmt::Display) form, e.g. `(1,3)(3,4)-(1,4)(3,3)`.
impl std::str::FromStr for MarkovMove {
    type Err = Error;

    fn from_str(text: &str) -> Result<MarkovMove> {
        if text.trim() == "0" {
            return Ok(MarkovMove::zero());
        }
        let (plus, minus) = text
            .split_once('-')
            .ok_or_else(|| Error::Syntax(format!("missing '-' in {text:?}")))?;
        MarkovMove::new(parse_side(plus)?, parse_side(minus)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMove {
    plus: Vec<SigmaIndex>,
    minus: Vec<SigmaIndex>,
}

impl<'de> Deserialize<'de> for MarkovMove {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMove::deserialize(d)?;
        MarkovMove::new(raw.plus, raw.minus).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize, j: usize) -> SigmaIndex {
        SigmaIndex::new(i, j).unwrap()
    }

    #[test]
    fn parses_printed_form() {
        let m: MarkovMove = "(1,4)(2,3)-(1,3)(2,4)".parse().unwrap();
        assert_eq!(m.to_string(), "(1,3)(2,4)-(1,4)(2,3)");
        assert_eq!(
            "(2, 1)-(1,1)".parse::<MarkovMove>().unwrap().to_string(),
            "(1,1)-(1,2)"
        );
        assert!("0".parse::<MarkovMove>().unwrap().is_zero());
        for bad in [
            "(1,2)",
            "(1,2)-(3)",
            "1,2-3,4",
            "(0,1)-(1,1)",
            "(1,1)(2,2)-(3,3)",
        ] {
            assert!(bad.parse::<MarkovMove>().is_err(), "{bad}");
        }
    }

    #[test]
    fn normalization() {
        let m = MarkovMove::new(vec![s(4, 1), s(3, 3)], vec![s(3, 1), s(4, 3)]).unwrap();
        assert_eq!(m.plus(), &[s(1, 3), s(3, 4)]);
        assert_eq!(m.minus(), &[s(1, 4), s(3, 3)]);
        assert_eq!(m.to_string(), "(1,3)(3,4)-(1,4)(3,3)");
        let cancelled = MarkovMove::new(vec![s(1, 2), s(3, 3)], vec![s(1, 2), s(4, 4)]).unwrap();
        assert_eq!(cancelled.to_string(), "(3,3)-(4,4)");
        assert!(MarkovMove::new(vec![s(1, 2)], vec![s(1, 2)])
            .unwrap()
            .is_zero());
        assert!(MarkovMove::new(vec![s(1, 2)], vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = MarkovMove::new(vec![s(2, 2)], vec![s(1, 1)]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"plus":[[1,1]],"minus":[[2,2]]}"#);
        let back: MarkovMove = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn vector_form() {
        let cols = SigmaIndex::all(2);
        let m = MarkovMove::new(vec![s(1, 1)], vec![s(2, 2)]).unwrap();
        assert_eq!(m.to_vector(&cols).unwrap(), vec![1, 0, -1]);
        assert!(m.to_vector(&SigmaIndex::all(1)).is_err());
    }

    #[test]
    fn ordering_is_by_degree_first() {
        let lin = MarkovMove::new(vec![s(3, 3)], vec![s(4, 4)]).unwrap();
        let quad = MarkovMove::new(vec![s(1, 1), s(1, 1)], vec![s(1, 2), s(2, 2)]).unwrap();
        assert!(lin < quad);
    }
}
