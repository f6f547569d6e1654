use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parse::{parse_call, parse_partition_args};
use super::CorrError;
use crate::partitions::Partition;

/// The spaces correspondences run between.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectId {
    Point,
    /// `Y^{[n]}`.
    Hilb(u32),
    /// The evaluation stack `𝓨^μ`.
    StackY(Partition),
    /// The product `Y^μ`.
    YPower(Partition),
    /// `⨿_{μ⊢n} 𝓨^μ`; elements on it are block-diagonal, one block per μ.
    StackCoproduct(u32),
}

impl ObjectId {
    /// Whether a generator living on `part` is a block of this object.
    pub fn contains(&self, part: &ObjectId) -> bool {
        match (self, part) {
            (ObjectId::StackCoproduct(n), ObjectId::StackY(mu)) => mu.n() == *n,
            _ => self == part,
        }
    }

    pub fn is_stack(&self) -> bool {
        matches!(self, ObjectId::StackY(_) | ObjectId::StackCoproduct(_))
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectId::Point => write!(f, "Point"),
            ObjectId::Hilb(n) => write!(f, "Hilb({n})"),
            ObjectId::StackY(mu) => write!(f, "StackY{mu}"),
            ObjectId::YPower(mu) => write!(f, "YPower{mu}"),
            ObjectId::StackCoproduct(n) => write!(f, "StackCoproduct({n})"),
        }
    }
}

impl fmt::Debug for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ObjectId {
    type Err = CorrError;

    fn from_str(s: &str) -> Result<Self, CorrError> {
        let (name, args) = parse_call(s)?;
        let count = || -> Result<u32, CorrError> {
            args.trim().parse().map_err(|_| CorrError::Parse(s.to_string()))
        };
        Ok(match name {
            "Point" if args.is_empty() => ObjectId::Point,
            "Hilb" => ObjectId::Hilb(count()?),
            "StackCoproduct" => ObjectId::StackCoproduct(count()?),
            "StackY" => ObjectId::StackY(parse_partition_args(args, s)?),
            "YPower" => ObjectId::YPower(parse_partition_args(args, s)?),
            _ => return Err(CorrError::Parse(s.to_string())),
        })
    }
}

impl Serialize for ObjectId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ObjectId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
