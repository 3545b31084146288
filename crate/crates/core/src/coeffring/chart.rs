//! Coordinate charts: an ordered list of distinct variable names.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A polynomial coordinate chart. All scalars and tensor fields carry the
/// chart they live on; operations combining values from different charts are
/// rejected.
///
/// Cloning is cheap (shared storage) and charts are immutable.
#[derive(Clone)]
pub struct Chart {
    names: Arc<Vec<String>>,
}

impl Chart {
    /// Build a chart from variable names. Names must be nonempty and distinct.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Chart> {
        if names.is_empty() {
            return Err(Error::InvalidChart("a chart needs at least one variable".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidChart("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidChart(format!("duplicate variable name '{n}'")));
            }
        }
        Ok(Chart { names: Arc::new(names) })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(Error::BadIndex { index, dim: self.dim() })
        }
    }

    /// Error unless `self` and `other` are the same chart.
    pub fn ensure_same(&self, other: &Chart) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ChartMismatch { left: self.to_string(), right: other.to_string() })
        }
    }

    /// Panicking variant used by internal arithmetic, where a mismatch is a
    /// caller bug rather than user input.
    #[track_caller]
    pub(crate) fn assert_same(&self, other: &Chart) {
        assert!(self == other, "chart mismatch: [{self}] vs [{other}]");
    }
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Chart {}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chart({})", self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Chart::new(&["x", "y"]).is_ok());
        assert!(Chart::new(&["x", "x"]).is_err());
        assert!(Chart::new::<&str>(&[]).is_err());
        assert!(Chart::new(&[""]).is_err());
    }

    #[test]
    fn equality_by_names() {
        let a = Chart::new(&["x", "y"]).unwrap();
        let b = Chart::new(&["x", "y"]).unwrap();
        let c = Chart::new(&["y", "x"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.ensure_same(&c).is_err());
    }
}
