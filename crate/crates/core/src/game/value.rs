use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use serde::{Deserialize, Serialize};

/// Sprague–Grundy value (nimber) of a position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GrundyValue(pub u32);

impl GrundyValue {
    pub const ZERO: GrundyValue = GrundyValue(0);

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn outcome(self) -> Outcome {
        if self.0 == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl From<u32> for GrundyValue {
    fn from(v: u32) -> Self {
        GrundyValue(v)
    }
}

/// Nim-sum.
impl BitXor for GrundyValue {
    type Output = GrundyValue;
    #[inline]
    fn bitxor(self, rhs: GrundyValue) -> GrundyValue {
        GrundyValue(self.0 ^ rhs.0)
    }
}

impl BitXorAssign for GrundyValue {
    #[inline]
    fn bitxor_assign(&mut self, rhs: GrundyValue) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for GrundyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}", self.0)
    }
}

/// `N`: the player to move wins. `P`: the previous player wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    N,
    P,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::N => "N",
            Outcome::P => "P",
        })
    }
}

/// Bitwise XOR of all values; `0` for an empty list.
pub fn nim_sum<I: IntoIterator<Item = GrundyValue>>(values: I) -> GrundyValue {
    values.into_iter().fold(GrundyValue::ZERO, BitXor::bitxor)
}

/// Minimum excluded value.
pub fn mex<I: IntoIterator<Item = GrundyValue>>(values: I) -> GrundyValue {
    let mut seen = MexSet::default();
    for v in values {
        seen.insert(v.0);
    }
    GrundyValue(seen.mex())
}

/// Small bitset used for mex computations; values past its capacity are
/// tracked in a spill vector.
#[derive(Default)]
pub(crate) struct MexSet {
    words: [u64; 4],
    spill: Vec<u32>,
}

impl MexSet {
    #[inline]
    pub(crate) fn insert(&mut self, v: u32) {
        match self.words.get_mut(v as usize / 64) {
            Some(w) => *w |= 1 << (v % 64),
            None => self.spill.push(v),
        }
    }

    pub(crate) fn mex(&self) -> u32 {
        for (i, w) in self.words.iter().enumerate() {
            if *w != u64::MAX {
                return i as u32 * 64 + w.trailing_ones();
            }
        }
        let mut v = 64 * self.words.len() as u32;
        while self.spill.contains(&v) {
            v += 1;
        }
        v
    }
}
