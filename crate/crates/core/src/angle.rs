//! Angles written as rational multiples of π.
//!
//! Accepted spellings: `pi`, `-pi`, `pi/3`, `2pi/3`, `2*pi/3`, `-3*pi/4`,
//! `0`, or any plain decimal number (radians).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Angle in radians that remembers an exact `p·π/q` spelling when it had one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
    ratio: Option<(i64, u64)>,
}

impl Angle {
    pub fn from_radians(radians: f64) -> Self {
        Self { radians, ratio: None }
    }

    /// `numerator·π/denominator`.
    pub fn pi_ratio(numerator: i64, denominator: u64) -> Self {
        assert!(denominator > 0, "zero denominator");
        Self { radians: numerator as f64 * PI / denominator as f64, ratio: Some((numerator, denominator)) }
    }

    pub fn radians(self) -> f64 {
        self.radians
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Self::from_radians(radians)
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let invalid = || Error::InvalidAngle(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = text.to_ascii_lowercase();

        let Some(pi_at) = lower.find("pi") else {
            return lower.parse::<f64>().map(Angle::from_radians).map_err(|_| invalid());
        };

        let head = lower[..pi_at].trim_end_matches('*');
        let numerator: i64 = match head {
            "" | "+" => 1,
            "-" => -1,
            digits => digits.parse().map_err(|_| invalid())?,
        };
        let tail = &lower[pi_at + 2..];
        let denominator: u64 = match tail.strip_prefix('/') {
            None if tail.is_empty() => 1,
            None => return Err(invalid()),
            Some(d) => d.parse().map_err(|_| invalid())?,
        };
        if denominator == 0 {
            return Err(invalid());
        }
        Ok(Angle::pi_ratio(numerator, denominator))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio {
            Some((0, _)) => write!(f, "0"),
            Some((n, d)) => {
                let head = match n {
                    1 => String::new(),
                    -1 => "-".to_string(),
                    n => format!("{n}*"),
                };
                if d == 1 {
                    write!(f, "{head}pi")
                } else {
                    write!(f, "{head}pi/{d}")
                }
            }
            None => write!(f, "{}", self.radians),
        }
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.ratio {
            Some(_) => serializer.serialize_str(&self.to_string()),
            None => serializer.serialize_f64(self.radians),
        }
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(x) => Ok(Angle::from_radians(x)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
