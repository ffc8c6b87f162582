use super::table::IntervalMeasureTable;

/// Relative slack allowed before a subadditivity violation is reported.
pub const SUBADDITIVITY_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    /// `max_r ℓ(r, 2r)`, with `2r` rounded up to the next grid radius (an
    /// upper bound for interval functions monotone in `R`). Zero when the
    /// grid spans less than a factor of two.
    pub l1_bound: f64,
    /// Triples `(r₁, r₂, r₃)` with `ℓ(r₁,r₃) > ℓ(r₁,r₂) + ℓ(r₂,r₃)` beyond the slack.
    pub l2_violations: Vec<[f64; 3]>,
    /// Largest relative defect `|ℓ(r₁,r₃) − ℓ(r₁,r₂) − ℓ(r₂,r₃)|` over all
    /// triples; zero (up to rounding) for additive measures.
    pub additivity_defect: f64,
}

impl AxiomReport {
    pub fn is_submeasure(&self) -> bool {
        self.l1_bound.is_finite() && self.l2_violations.is_empty()
    }

    pub fn is_additive(&self, eps: f64) -> bool {
        self.is_submeasure() && self.additivity_defect <= eps
    }
}

/// Checks logarithmic growth and subadditivity on every grid triple.
pub fn check_submeasure_axioms(table: &IntervalMeasureTable, eps: f64) -> AxiomReport {
    let radii = table.radii();
    let n = radii.len();
    let mut l1_bound: f64 = 0.0;
    for i in 0..n {
        let target = 2.0 * radii[i] * (1.0 - 1e-12);
        let j = radii.partition_point(|&r| r < target);
        if j < n && j > i {
            l1_bound = l1_bound.max(table.get(i, j));
        }
    }
    let mut l2_violations = Vec::new();
    let mut additivity_defect: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let left = table.get(i, j);
            for k in j + 1..n {
                let whole = table.get(i, k);
                let parts = left + table.get(j, k);
                let scale = whole.max(parts);
                if whole > parts + eps * scale {
                    l2_violations.push([radii[i], radii[j], radii[k]]);
                }
                if scale > 0.0 {
                    additivity_defect = additivity_defect.max((whole - parts).abs() / scale);
                }
            }
        }
    }
    AxiomReport {
        l1_bound,
        l2_violations,
        additivity_defect,
    }
}
