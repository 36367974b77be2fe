//! The finite rational chain `{0, 1/D, ..., 1}` standing in for `[0, 1]`.

use alloc::string::String;
use core::fmt;

use crate::error::Error;

/// A membership degree, stored as the numerator `k` of `k/D` on its chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(pub u16);

impl Level {
    pub const ZERO: Level = Level(0);

    pub fn numerator(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chain {
    denominator: u16,
}

impl Chain {
    pub fn new(denominator: u16) -> Result<Self, Error> {
        if denominator == 0 {
            return Err(Error::EmptyChain);
        }
        Ok(Chain { denominator })
    }

    pub fn denominator(&self) -> u16 {
        self.denominator
    }

    pub fn top(&self) -> Level {
        Level(self.denominator)
    }

    /// Number of values on the chain, `D + 1`.
    pub fn len(&self) -> usize {
        self.denominator as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn levels(&self) -> impl Iterator<Item = Level> {
        (0..=self.denominator).map(Level)
    }

    /// Levels in `(0, 1]`: the values a fuzzy point may take.
    pub fn positive_levels(&self) -> impl Iterator<Item = Level> {
        (1..=self.denominator).map(Level)
    }

    pub fn contains(&self, level: Level) -> bool {
        level.0 <= self.denominator
    }

    pub fn complement(&self, level: Level) -> Level {
        Level(self.denominator - level.0)
    }

    pub fn ratio(&self, level: Level) -> Ratio {
        Ratio::new(level.0 as u32, self.denominator as u32)
    }

    /// Maps an exact fraction onto the chain; fails unless it equals some `k/D`.
    pub fn level_of(&self, ratio: Ratio) -> Option<Level> {
        let scaled = ratio.num as u64 * self.denominator as u64;
        if scaled % ratio.den as u64 != 0 {
            return None;
        }
        let k = scaled / ratio.den as u64;
        (k <= self.denominator as u64).then_some(Level(k as u16))
    }

    /// Parses `"3/4"`, `"1"` or `"0"` into a level of this chain.
    pub fn parse_level(&self, text: &str) -> Result<Level, Error> {
        let ratio: Ratio = text.parse()?;
        self.level_of(ratio)
            .ok_or_else(|| Error::InvalidLevel(String::from(text)))
    }
}

/// A non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u32,
    den: u32,
}

impl Ratio {
    /// Panics if `den == 0`.
    pub fn new(num: u32, den: u32) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u32 {
        self.num
    }

    pub fn denom(&self) -> u32 {
        self.den
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    if a == 0 {
        1
    } else {
        a
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl core::str::FromStr for Ratio {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidLevel(String::from(text));
        let parse = |s: &str| -> Result<u32, Error> {
            let s = s.trim();
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse().map_err(|_| bad())
        };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (parse(n)?, parse(d)?),
            None => (parse(text)?, 1),
        };
        if den == 0 || num > den {
            return Err(bad());
        }
        Ok(Ratio::new(num, den))
    }
}
