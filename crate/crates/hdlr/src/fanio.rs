//! Fans read from JSON.
//!
//! ```json
//! { "dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
//!   "max_cones": [[1,2],[2,3],[1,3]], "order": [1,2,3],
//!   "cell_names": ["a","b","c"] }
//! ```
//! Ray indices in `max_cones` and positions in `order` are 1-based. `order`
//! lists positions in `max_cones` and defaults to the listed order.

use hdlr_core::fan::{shell, validate_fan, Fan, ShelledFan};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDoc {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell_names: Option<Vec<String>>,
}

fn zero_based(v: &[usize], len: usize, what: &str) -> Result<Vec<usize>> {
    v.iter()
        .map(|&i| {
            if i == 0 || i > len {
                Err(Error::Format(format!("{what} index {i} out of range 1..={len}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

impl FanDoc {
    /// Validates the fan and shells it. Validation failures are reported as
    /// [`Error::InvalidFan`] carrying the full report.
    pub fn load(&self) -> Result<ShelledFan> {
        for r in &self.rays {
            if r.len() != self.dim {
                return Err(Error::Format(format!("ray {r:?} does not have dimension {}", self.dim)));
            }
        }
        let cones = self
            .max_cones
            .iter()
            .map(|c| {
                let mut c = zero_based(c, self.rays.len(), "ray")?;
                c.sort_unstable();
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        let fan = Fan::new(self.dim, self.rays.clone(), cones.clone())?;
        let report = validate_fan(&fan);
        if !report.passes() {
            return Err(Error::InvalidFan(report));
        }
        let listed = match &self.order {
            Some(o) => zero_based(o, cones.len(), "cone")?,
            None => (0..cones.len()).collect(),
        };
        let maximal = fan.maximal_cones();
        let order = listed
            .iter()
            .map(|&i| {
                maximal
                    .iter()
                    .position(|d| *d == cones[i])
                    .ok_or_else(|| Error::Format(format!("cone {} is not maximal", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let shelled = shell(&fan, &order)?;
        match &self.cell_names {
            Some(names) => Ok(shelled.with_cell_names(names.clone())?),
            None => Ok(shelled),
        }
    }
}

pub fn load_fan(json: &str) -> Result<ShelledFan> {
    serde_json::from_str::<FanDoc>(json)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_from_json() {
        let s = load_fan(r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[2,3],[1,3],[1,2]]}"#).unwrap();
        assert_eq!(s.num_cells(), 3);
        assert_eq!(s.cell_dim(0), 0);
        assert_eq!(s.cell_dim(2), 2);
    }

    #[test]
    fn non_smooth_rejected() {
        let e = load_fan(r#"{"dim":2,"rays":[[1,0],[1,2],[-1,-1]],"max_cones":[[1,2],[2,3],[1,3]]}"#).unwrap_err();
        match e {
            Error::InvalidFan(rep) => assert!(!rep.smooth, "{rep:?}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn bad_index() {
        assert!(matches!(load_fan(r#"{"dim":2,"rays":[[1,0]],"max_cones":[[0,1]]}"#), Err(Error::Format(_))));
    }
}
