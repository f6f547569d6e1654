use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::object::ObjectId;
use super::parse::{parse_call, parse_partition_args};
use super::CorrError;
use crate::partitions::Partition;

/// A named correspondence between two objects.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `Δ^μ : 𝓨^μ → Y^{[n]}`.
    Delta(Partition),
    /// `(Δ^μ)† : Y^{[n]} → 𝓨^μ`.
    DeltaDagger(Partition),
    IdHilb(u32),
    IdStack(Partition),
    IdPoint,
    IdYPower(Partition),
    /// `ℓ^μ`, the closure of the inverse image of the diagonal over the
    /// stratum of type μ.
    Ell(Partition),
    /// The composite `(Δ^μ)†⋆Δ^μ`, kept opaque.
    E(Partition),
    /// `Σ^μ = ∏_k μ_k [Σ]` for a fixed compact lagrangian Σ.
    SigmaMu(Partition),
    /// `L^μΣ ⊂ Y^{[n]}`.
    LSigma(Partition),
}

impl Generator {
    pub fn domain(&self) -> ObjectId {
        use Generator::*;
        match self {
            Delta(mu) | IdStack(mu) => ObjectId::StackY(mu.clone()),
            DeltaDagger(mu) | Ell(mu) | E(mu) => ObjectId::Hilb(mu.n()),
            IdHilb(n) => ObjectId::Hilb(*n),
            IdPoint | SigmaMu(_) | LSigma(_) => ObjectId::Point,
            IdYPower(mu) => ObjectId::YPower(mu.clone()),
        }
    }

    pub fn codomain(&self) -> ObjectId {
        use Generator::*;
        match self {
            Delta(mu) | Ell(mu) | E(mu) | LSigma(mu) => ObjectId::Hilb(mu.n()),
            IdHilb(n) => ObjectId::Hilb(*n),
            DeltaDagger(mu) | IdStack(mu) | SigmaMu(mu) => ObjectId::StackY(mu.clone()),
            IdPoint => ObjectId::Point,
            IdYPower(mu) => ObjectId::YPower(mu.clone()),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(
            self,
            Generator::IdHilb(_) | Generator::IdStack(_) | Generator::IdPoint | Generator::IdYPower(_)
        )
    }

    /// The identity on an object that is not a coproduct.
    pub fn identity_on(obj: &ObjectId) -> Option<Generator> {
        match obj {
            ObjectId::Point => Some(Generator::IdPoint),
            ObjectId::Hilb(n) => Some(Generator::IdHilb(*n)),
            ObjectId::StackY(mu) => Some(Generator::IdStack(mu.clone())),
            ObjectId::YPower(mu) => Some(Generator::IdYPower(mu.clone())),
            ObjectId::StackCoproduct(_) => None,
        }
    }

    pub fn adjoint(&self) -> Result<Generator, CorrError> {
        use Generator::*;
        match self {
            Delta(mu) => Ok(DeltaDagger(mu.clone())),
            DeltaDagger(mu) => Ok(Delta(mu.clone())),
            IdHilb(_) | IdStack(_) | IdPoint | IdYPower(_) | Ell(_) | E(_) => Ok(self.clone()),
            SigmaMu(_) | LSigma(_) => Err(CorrError::NoAdjoint(self.clone())),
        }
    }

    /// The integer factor by which the lift of this generator to `Y^μ`
    /// exceeds the generator itself, for generators into a stack.
    pub(super) fn lift_factor(&self) -> BigUint {
        match self {
            Generator::IdStack(mu) | Generator::SigmaMu(mu) => mu.part_product(),
            _ => BigUint::one(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match self {
            Delta(mu) => write!(f, "Delta{mu}"),
            DeltaDagger(mu) => write!(f, "DeltaDagger{mu}"),
            IdHilb(n) => write!(f, "IdHilb({n})"),
            IdStack(mu) => write!(f, "IdStack{mu}"),
            IdPoint => write!(f, "IdPoint"),
            IdYPower(mu) => write!(f, "IdYPower{mu}"),
            Ell(mu) => write!(f, "Ell{mu}"),
            E(mu) => write!(f, "E{mu}"),
            SigmaMu(mu) => write!(f, "SigmaMu{mu}"),
            LSigma(mu) => write!(f, "LSigma{mu}"),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Generator {
    type Err = CorrError;

    /// Parses the display form, e.g. `Delta(2,1)`, `IdHilb(3)`, `IdPoint`.
    fn from_str(s: &str) -> Result<Self, CorrError> {
        let (name, args) = parse_call(s)?;
        let mu = || parse_partition_args(args, s);
        Ok(match name {
            "Delta" => Generator::Delta(mu()?),
            "DeltaDagger" => Generator::DeltaDagger(mu()?),
            "IdHilb" => Generator::IdHilb(args.trim().parse().map_err(|_| CorrError::Parse(s.to_string()))?),
            "IdStack" => Generator::IdStack(mu()?),
            "IdPoint" if args.is_empty() => Generator::IdPoint,
            "IdYPower" => Generator::IdYPower(mu()?),
            "Ell" => Generator::Ell(mu()?),
            "E" => Generator::E(mu()?),
            "SigmaMu" => Generator::SigmaMu(mu()?),
            "LSigma" => Generator::LSigma(mu()?),
            _ => return Err(CorrError::Parse(s.to_string())),
        })
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Every generator whose partitions have weight at most `n_max`.
pub fn all_generators(n_max: u32) -> Vec<Generator> {
    use Generator::*;
    let mut out = vec![IdPoint];
    for n in 0..=n_max {
        out.push(IdHilb(n));
        for mu in crate::partitions::enumerate_partitions(n) {
            for g in [Delta, DeltaDagger, IdStack, IdYPower, Ell, E, SigmaMu, LSigma] {
                out.push(g(mu.clone()));
            }
        }
    }
    out
}
