use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The triple `(n, m, p)`: vertex count, object count and attachment
/// probability of the bipartite model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct ModelParams {
    n: usize,
    m: usize,
    p: f64,
}

#[derive(Deserialize)]
struct RawParams {
    n: usize,
    m: usize,
    p: f64,
}

impl TryFrom<RawParams> for ModelParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        ModelParams::new(raw.n, raw.m, raw.p)
    }
}

impl ModelParams {
    pub fn new(n: usize, m: usize, p: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("n must be at least 1"));
        }
        if m == 0 {
            return Err(Error::argument("m must be at least 1"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::argument(format!("p must lie in [0, 1], got {p}")));
        }
        Ok(ModelParams { n, m, p })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of objects.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Vertex-object attachment probability.
    pub fn p(&self) -> f64 {
        self.p
    }
}
