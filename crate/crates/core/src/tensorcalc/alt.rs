//! Shared storage and combinatorics for antisymmetric tensors.
//!
//! Coefficients are indexed by strictly increasing multi-indices; an absent
//! index means a zero coefficient. The degree may formally exceed the chart
//! dimension, in which case no valid index exists and the tensor is the
//! canonical zero (this keeps top-degree identities free of special cases).

use std::collections::BTreeMap;

use crate::coeffring::{Chart, RatFunc};

pub(crate) type IndexSet = Vec<usize>;

/// Sign of merging two disjoint increasing index sets by counting the
/// transpositions needed to sort `I ++ J`; `None` when they intersect.
pub(crate) fn merge_sign(left: &[usize], right: &[usize]) -> Option<(IndexSet, i32)> {
    let mut merged: IndexSet = Vec::with_capacity(left.len() + right.len());
    merged.extend_from_slice(left);
    merged.extend_from_slice(right);
    let mut inversions = 0usize;
    for (a, x) in merged.iter().enumerate() {
        for y in merged.iter().skip(a + 1) {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    merged.sort_unstable();
    Some((merged, if inversions % 2 == 0 { 1 } else { -1 }))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Alt {
    pub chart: Chart,
    pub degree: usize,
    pub coeffs: BTreeMap<IndexSet, RatFunc>,
}

impl Alt {
    pub fn zero(chart: &Chart, degree: usize) -> Alt {
        Alt { chart: chart.clone(), degree, coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn insert(&mut self, index: IndexSet, coeff: RatFunc) {
        debug_assert_eq!(index.len(), self.degree);
        debug_assert!(index.windows(2).all(|w| w[0] < w[1]), "index not strictly increasing");
        debug_assert!(index.iter().all(|&i| i < self.chart.dim()), "index out of range");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(index) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Insert with an arbitrary (possibly unsorted, possibly repeating)
    /// index, folding in the permutation sign. Repeated indices vanish.
    pub fn insert_unsorted(&mut self, index: &[usize], coeff: RatFunc) {
        if let Some((sorted, sign)) = merge_sign(index, &[]) {
            let c = if sign < 0 { -&coeff } else { coeff };
            self.insert(sorted, c);
        }
    }

    pub fn coeff(&self, index: &[usize]) -> RatFunc {
        self.coeffs.get(index).cloned().unwrap_or_else(|| RatFunc::zero(&self.chart))
    }

    pub fn add(&self, other: &Alt) -> Alt {
        self.chart.assert_same(&other.chart);
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.insert(i.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Alt {
        Alt {
            chart: self.chart.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Alt) -> Alt {
        self.add(&other.neg())
    }

    pub fn scale(&self, f: &RatFunc) -> Alt {
        if f.is_zero() {
            return Alt::zero(&self.chart, self.degree);
        }
        let mut out = Alt::zero(&self.chart, self.degree);
        for (i, c) in &self.coeffs {
            out.insert(i.clone(), c * f);
        }
        out
    }

    /// Graded wedge product with Koszul signs.
    pub fn wedge(&self, other: &Alt) -> Alt {
        self.chart.assert_same(&other.chart);
        let mut out = Alt::zero(&self.chart, self.degree + other.degree);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                if let Some((merged, sign)) = merge_sign(i, j) {
                    let mut c = a * b;
                    if sign < 0 {
                        c = -&c;
                    }
                    out.insert(merged, c);
                }
            }
        }
        out
    }

    /// Contraction in the first slot against a component vector:
    /// the degree drops by one.
    pub fn contract(&self, components: &[RatFunc]) -> Alt {
        assert_eq!(components.len(), self.chart.dim(), "component count mismatch");
        let mut out = Alt::zero(&self.chart, self.degree.saturating_sub(1));
        for (index, c) in &self.coeffs {
            for (slot, &i) in index.iter().enumerate() {
                if components[i].is_zero() {
                    continue;
                }
                let mut rest: IndexSet = index.clone();
                rest.remove(slot);
                let mut term = c * &components[i];
                if slot % 2 == 1 {
                    term = -&term;
                }
                out.insert(rest, term);
            }
        }
        out
    }

    /// Apply a function to every coefficient (e.g. substitution).
    pub fn map_coeffs<E>(
        &self,
        chart: &Chart,
        mut f: impl FnMut(&RatFunc) -> Result<RatFunc, E>,
    ) -> Result<Alt, E> {
        let mut out = Alt::zero(chart, self.degree);
        for (i, c) in &self.coeffs {
            out.insert(i.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn format(&self, basis: &str, joiner: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.degree == 0 {
            return self.coeff(&[]).to_string();
        }
        let mut parts = Vec::new();
        for (index, c) in &self.coeffs {
            let blades: Vec<String> =
                index.iter().map(|&i| format!("{basis}{}", self.chart.name(i))).collect();
            let blade = blades.join(joiner);
            let cs = c.to_string();
            if cs == "1" {
                parts.push(blade);
            } else if cs == "-1" {
                parts.push(format!("-{blade}"));
            } else if cs.contains(' ') || cs.contains('/') {
                parts.push(format!("({cs}) {blade}"));
            } else {
                parts.push(format!("{cs} {blade}"));
            }
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_sign_counts_inversions() {
        assert_eq!(merge_sign(&[0], &[1]), Some((vec![0, 1], 1)));
        assert_eq!(merge_sign(&[1], &[0]), Some((vec![0, 1], -1)));
        assert_eq!(merge_sign(&[0, 2], &[1]), Some((vec![0, 1, 2], -1)));
        assert_eq!(merge_sign(&[0], &[0]), None);
    }
}
