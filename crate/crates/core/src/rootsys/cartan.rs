//! Cartan types and their Bourbaki data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Cartan type such as `A3` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    /// Validates the pair. `C2` is accepted alongside `B2` because gradings
    /// are naturally written in either numbering.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series:?}{rank}")))
        }
    }

    /// Every valid type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }

    /// Gram matrix of the simple roots with long roots of squared length 2.
    pub fn bourbaki_gram(&self) -> Vec<Vec<Q>> {
        let n = self.rank;
        let mut g = vec![vec![qi(0); n]; n];
        let mut link = |i: usize, j: usize, v: Q| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A | Series::B | Series::D => {
                let chain = if self.series == Series::D { n - 1 } else { n };
                for i in 0..chain.saturating_sub(1) {
                    link(i, i + 1, qi(-1));
                }
                if self.series == Series::D {
                    link(n - 3, n - 1, qi(-1));
                }
            }
            Series::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, q(-1, 2));
                }
                link(n - 2, n - 1, qi(-1));
            }
            Series::E => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (1, 3)] {
                    link(i, j, qi(-1));
                }
                for i in 4..n - 1 {
                    link(i, i + 1, qi(-1));
                }
            }
            Series::F => {
                link(0, 1, qi(-1));
                link(1, 2, qi(-1));
                link(2, 3, q(-1, 2));
            }
            Series::G => link(0, 1, qi(-1)),
        }
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = match self.series {
                Series::B if i == n - 1 => qi(1),
                Series::C if i < n - 1 => qi(1),
                Series::F if i >= 2 => qi(1),
                Series::G if i == 0 => q(2, 3),
                _ => qi(2),
            };
        }
        g
    }

    /// Cartan matrix `A[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.bourbaki_gram();
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = g[i][j] * qi(2) / g[j][j];
                        assert!(v.is_integer());
                        *v.numer() as i64
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidType(s.to_string()))?;
        CartanType::new(series, rank).map_err(|_| Error::InvalidType(s.to_string()))
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
        for bad in ["D3", "E9", "F3", "G3", "B1", "A0", "X2", "A", ""] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn cartan_matrices_are_generalized_cartan() {
        for t in CartanType::all_up_to(8) {
            let a = t.cartan_matrix();
            for i in 0..t.rank {
                assert_eq!(a[i][i], 2);
                for j in 0..t.rank {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0, "{t}");
                    }
                }
            }
        }
        let g2 = CartanType::new(Series::G, 2).unwrap().cartan_matrix();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
    }
}
