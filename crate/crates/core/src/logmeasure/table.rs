use std::fmt::Write as _;

use super::profile::PrefixSums;
use crate::format::sig12;
use crate::{Error, Result};

/// What an [`IntervalMeasureTable`] was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Right,
    Left,
    Submeasure,
    UserSupplied,
}

/// Values `ℓ(r_i, r_j)` of an interval function for all grid pairs `i < j`.
///
/// Values are finite and nonnegative; radii are strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMeasureTable {
    radii: Vec<f64>,
    values: Vec<f64>,
    provenance: Provenance,
}

impl IntervalMeasureTable {
    pub fn from_fn<F>(radii: &[f64], provenance: Provenance, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> f64,
    {
        check_radii(radii)?;
        let n = radii.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                values[i * n + j] = f(radii[i], radii[j]);
            }
        }
        Self::checked(radii.to_vec(), values, provenance)
    }

    /// Additive table `P_j − P_i` from cumulative sums.
    pub(crate) fn from_prefix(radii: &[f64], prefix: &[f64], provenance: Provenance) -> Self {
        let n = radii.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                values[i * n + j] = (prefix[j] - prefix[i]).max(0.0);
            }
        }
        IntervalMeasureTable {
            radii: radii.to_vec(),
            values,
            provenance,
        }
    }

    /// Submeasure table `max(right, left)` from both cumulative sums.
    pub(crate) fn submeasure_from_prefix(radii: &[f64], sums: &PrefixSums) -> Self {
        let n = radii.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let r = sums.right[j] - sums.right[i];
                let l = sums.left[j] - sums.left[i];
                values[i * n + j] = r.max(l).max(0.0);
            }
        }
        IntervalMeasureTable {
            radii: radii.to_vec(),
            values,
            provenance: Provenance::Submeasure,
        }
    }

    fn checked(radii: Vec<f64>, values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        let n = radii.len();
        for i in 0..n {
            for j in i + 1..n {
                let v = values[i * n + j];
                if !(v.is_finite() && v >= 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "table value l({}, {}) = {v} must be finite and nonnegative",
                        radii[i], radii[j]
                    )));
                }
            }
        }
        Ok(IntervalMeasureTable {
            radii,
            values,
            provenance,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `ℓ(r_i, r_j)` for `i < j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < j);
        self.values[i * self.radii.len() + j]
    }

    /// Common ratio of the grid, if the radii are geometric (relative
    /// tolerance `1e-9`).
    pub fn geometric_ratio(&self) -> Result<f64> {
        if self.radii.len() < 2 {
            return Err(Error::EmptyGrid);
        }
        let n = self.radii.len() - 1;
        let ln_q = (self.radii[n] / self.radii[0]).ln() / n as f64;
        for (i, &r) in self.radii.iter().enumerate() {
            let expect = self.radii[0] * (i as f64 * ln_q).exp();
            if ((r - expect) / expect).abs() > 1e-9 {
                return Err(Error::InvalidGrid(format!("radius {r} breaks the geometric progression")));
            }
        }
        Ok(ln_q.exp())
    }

    /// Pointwise combination with a table on the same grid.
    pub fn combine<F: Fn(f64, f64) -> f64>(&self, other: &Self, f: F) -> Result<Self> {
        if self.radii != other.radii {
            return Err(Error::InvalidGrid("tables live on different grids".into()));
        }
        let n = self.radii.len();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                values[i * n + j] = f(self.get(i, j), other.get(i, j));
            }
        }
        Self::checked(self.radii.clone(), values, Provenance::UserSupplied)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        let values = self.values.iter().map(|v| v * c).collect();
        Self::checked(self.radii.clone(), values, Provenance::UserSupplied)
    }

    /// CSV with header `r,R,value`, one row per pair `i < j`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,R,value\n");
        let n = self.radii.len();
        for i in 0..n {
            for j in i + 1..n {
                let _ = writeln!(
                    s,
                    "{},{},{}",
                    sig12(self.radii[i]),
                    sig12(self.radii[j]),
                    sig12(self.get(i, j))
                );
            }
        }
        s
    }

    /// Reads a complete table (every pair of listed radii) from CSV.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        match lines.next() {
            Some((_, h)) if h.replace(' ', "") == "r,R,value" => {}
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: "expected header `r,R,value`".into(),
                })
            }
        }
        let mut rows = Vec::new();
        for (i, line) in lines {
            let f: Vec<&str> = line.split(',').map(str::trim).collect();
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("bad number `{s}`"),
                })
            };
            if f.len() != 3 {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "expected three columns".into(),
                });
            }
            rows.push((i + 1, parse(f[0])?, parse(f[1])?, parse(f[2])?));
        }
        let mut radii: Vec<f64> = rows.iter().flat_map(|&(_, r, big_r, _)| [r, big_r]).collect();
        radii.sort_by(f64::total_cmp);
        radii.dedup();
        check_radii(&radii)?;
        let n = radii.len();
        let pos = |x: f64| radii.binary_search_by(|r| r.total_cmp(&x)).expect("radius indexed");
        let mut values = vec![f64::NAN; n * n];
        for &(line, r, big_r, v) in &rows {
            let (i, j) = (pos(r), pos(big_r));
            if i >= j {
                return Err(Error::Parse {
                    line,
                    message: format!("need r < R, got {r} >= {big_r}"),
                });
            }
            if !values[i * n + j].is_nan() {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate pair ({r}, {big_r})"),
                });
            }
            values[i * n + j] = v;
        }
        for i in 0..n {
            for j in i + 1..n {
                if values[i * n + j].is_nan() {
                    return Err(Error::InvalidParameter(format!(
                        "table is missing the pair ({}, {})",
                        radii[i], radii[j]
                    )));
                }
            }
        }
        for v in values.iter_mut().filter(|v| v.is_nan()) {
            *v = 0.0;
        }
        Self::checked(radii, values, Provenance::UserSupplied)
    }
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.len() < 2 {
        return Err(Error::InvalidGrid("a table needs at least two radii".into()));
    }
    if !(radii[0] > 0.0) || radii.iter().any(|r| !r.is_finite()) {
        return Err(Error::InvalidGrid("radii must be positive and finite".into()));
    }
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("radii must be strictly increasing".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<f64> {
        (0..30).map(|i| (i as f64 * 0.25).exp()).collect()
    }

    #[test]
    fn csv_round_trip_preserves_values_to_twelve_digits() {
        let t = IntervalMeasureTable::from_fn(&grid(), Provenance::UserSupplied, |r, big_r| (big_r / r).ln()).unwrap();
        let back = IntervalMeasureTable::from_csv(&t.to_csv()).unwrap();
        assert_eq!(back.len(), t.len());
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                assert!((back.get(i, j) - t.get(i, j)).abs() <= 1e-11 * t.get(i, j).max(1.0));
            }
        }
        assert!((back.geometric_ratio().unwrap() - 0.25f64.exp()).abs() < 1e-10);
    }

    #[test]
    fn csv_rejects_incomplete_or_bad_tables() {
        assert!(IntervalMeasureTable::from_csv("a,b,c\n").is_err());
        assert!(IntervalMeasureTable::from_csv("r,R,value\n1,2,0.5\n1,4,1\n").is_err());
        assert!(IntervalMeasureTable::from_csv("r,R,value\n2,1,0.5\n").is_err());
        assert!(IntervalMeasureTable::from_csv("r,R,value\n1,2,-1\n").is_err());
        let ok = IntervalMeasureTable::from_csv("r,R,value\n1,2,1\n2,4,1\n1,4,3\n").unwrap();
        assert_eq!(ok.get(0, 2), 3.0);
    }

    #[test]
    fn rejects_negative_values() {
        assert!(IntervalMeasureTable::from_fn(&grid(), Provenance::UserSupplied, |_, _| -1.0).is_err());
        assert!(IntervalMeasureTable::from_fn(&[1.0, 1.0], Provenance::UserSupplied, |_, _| 0.0).is_err());
    }
}
