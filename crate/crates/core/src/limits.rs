use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Objects whose size is capped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Nc,
    Ncl,
    Ncs,
    Ncls,
    Trees,
    Bicolor,
    Theorem,
    Word,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Nc,
        Kind::Ncl,
        Kind::Ncs,
        Kind::Ncls,
        Kind::Trees,
        Kind::Bicolor,
        Kind::Theorem,
        Kind::Word,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Nc => "nc",
            Kind::Ncl => "ncl",
            Kind::Ncs => "ncs",
            Kind::Ncls => "ncls",
            Kind::Trees => "trees",
            Kind::Bicolor => "bicolor",
            Kind::Theorem => "theorem",
            Kind::Word => "word",
        }
    }

    pub fn default_cap(self) -> usize {
        match self {
            Kind::Nc => 12,
            Kind::Ncl => 9,
            Kind::Ncs => 10,
            Kind::Ncls => 5,
            Kind::Trees => 10,
            Kind::Bicolor => 7,
            Kind::Theorem => 6,
            Kind::Word => 12,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown limit kind {s:?}")))
    }
}

/// Per-kind size caps for enumerations and verifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    caps: [usize; Kind::ALL.len()],
}

impl Default for Limits {
    fn default() -> Self {
        let mut caps = [0; Kind::ALL.len()];
        for k in Kind::ALL {
            caps[k as usize] = k.default_cap();
        }
        Limits { caps }
    }
}

impl Limits {
    /// No caps at all.
    pub fn unlimited() -> Self {
        Limits {
            caps: [usize::MAX; Kind::ALL.len()],
        }
    }

    pub fn cap(&self, kind: Kind) -> usize {
        self.caps[kind as usize]
    }

    pub fn set(&mut self, kind: Kind, cap: usize) {
        self.caps[kind as usize] = cap;
    }

    pub fn check(&self, kind: Kind, n: usize) -> Result<()> {
        let cap = self.cap(kind);
        if n > cap {
            Err(Error::LimitExceeded { kind, n, cap })
        } else {
            Ok(())
        }
    }

    /// Parses `KIND=N` assignments separated by commas, e.g. `nc=10,ncl=7`.
    pub fn parse_assignments(spec: &str) -> Result<Vec<(Kind, usize)>> {
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|item| {
                let (k, v) = item
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected KIND=N, got {item:?}")))?;
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cap in {item:?}")))?;
                Ok((k.trim().parse()?, n))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_check() {
        let l = Limits::default();
        assert_eq!(l.cap(Kind::Nc), 12);
        assert_eq!(l.cap(Kind::Ncl), 9);
        assert!(l.check(Kind::Ncls, 5).is_ok());
        assert_eq!(
            l.check(Kind::Ncls, 6),
            Err(Error::LimitExceeded {
                kind: Kind::Ncls,
                n: 6,
                cap: 5
            })
        );
    }

    #[test]
    fn assignments() {
        let a = Limits::parse_assignments("nc=3, ncl=4").unwrap();
        assert_eq!(a, vec![(Kind::Nc, 3), (Kind::Ncl, 4)]);
        assert!(Limits::parse_assignments("foo=3").is_err());
        assert!(Limits::parse_assignments("nc").is_err());
    }
}
