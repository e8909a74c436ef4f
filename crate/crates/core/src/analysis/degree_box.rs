use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::DegreeVector;

/// An axis-aligned box of integer degrees with an inner margin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeBox {
    lower: Vec<i64>,
    upper: Vec<i64>,
    margin: i64,
}

impl DegreeBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>, margin: i64) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::BadBox(format!(
                "{} lower bounds but {} upper bounds",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(Error::BadBox("no coordinates".into()));
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i]) {
            return Err(Error::BadBox(format!(
                "coordinate {}: {} > {}",
                i + 1,
                lower[i],
                upper[i]
            )));
        }
        if margin < 0 {
            return Err(Error::BadBox(format!("negative margin {margin}")));
        }
        Ok(Self { lower, upper, margin })
    }

    /// The same interval `[lo, hi]` in every one of `d` coordinates.
    pub fn cube(d: usize, lo: i64, hi: i64, margin: i64) -> Result<Self> {
        Self::new(vec![lo; d], vec![hi; d], margin)
    }

    /// Parses `lo:hi,lo:hi,...`.
    pub fn parse(spec: &str, margin: i64) -> Result<Self> {
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for part in spec.split(',') {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| Error::BadBox(format!("expected lo:hi, got {part:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::BadBox(format!("{s:?}: {e}")))
            };
            lower.push(parse(lo)?);
            upper.push(parse(hi)?);
        }
        Self::new(lower, upper, margin)
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn margin(&self) -> i64 {
        self.margin
    }

    pub fn with_margin(&self, margin: i64) -> Result<Self> {
        Self::new(self.lower.clone(), self.upper.clone(), margin)
    }

    /// The box shrunk by the margin on every side, with margin zero.
    pub fn inner(&self) -> Result<Self> {
        let lower: Vec<i64> = self.lower.iter().map(|x| x + self.margin).collect();
        let upper: Vec<i64> = self.upper.iter().map(|x| x - self.margin).collect();
        if lower.iter().zip(&upper).any(|(l, u)| l > u) {
            return Err(Error::BoxTooSmall { margin: self.margin });
        }
        Self::new(lower, upper, 0)
    }

    pub fn contains(&self, beta: &[i64]) -> bool {
        beta.len() == self.dim()
            && beta
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(b, (l, u))| l <= b && b <= u)
    }

    pub fn len(&self) -> usize {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| (u - l + 1) as usize)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All points, lexicographically increasing.
    pub fn points(&self) -> Vec<DegreeVector> {
        let mut out = Vec::with_capacity(self.len());
        let mut p = self.lower.clone();
        loop {
            out.push(p.clone());
            let mut j = self.dim();
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if p[j] < self.upper[j] {
                    p[j] += 1;
                    break;
                }
                p[j] = self.lower[j];
            }
        }
    }
}

impl std::fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| format!("{l}:{u}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
