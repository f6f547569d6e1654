//! The sine algebra of wall operators `W_{v,ℓ}`:
//! `[W_{v₁,ℓ}, W_{v₂,ℓ}] = [v₁∧v₂]_q W_{v₁+v₂,ℓ} + (n_ℓ∧v₁)·δ_{v₁+v₂,0}·C_ℓ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::qint::q_integer_laurent;
use super::GwdtError;
use crate::scalars::{GaussianRational, QLaurent};
use crate::tropical::IntVector;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SineGenerator {
    W { v: IntVector, level: IntVector },
    Central { level: IntVector },
}

impl SineGenerator {
    pub fn w(v: [i64; 2], level: [i64; 2]) -> Self {
        SineGenerator::W { v: v.into(), level: level.into() }
    }

    pub fn central(level: [i64; 2]) -> Self {
        SineGenerator::Central { level: level.into() }
    }

    pub fn level(&self) -> &IntVector {
        match self {
            SineGenerator::W { level, .. } | SineGenerator::Central { level } => level,
        }
    }
}

impl fmt::Display for SineGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SineGenerator::W { v, level } => write!(f, "W[{v};{level}]"),
            SineGenerator::Central { level } => write!(f, "C[{level}]"),
        }
    }
}

impl fmt::Debug for SineGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `a₀b₁ − a₁b₀`.
pub fn wedge(a: &IntVector, b: &IntVector) -> i64 {
    a.0[0] * b.0[1] - a.0[1] * b.0[0]
}

fn planar(v: &IntVector) -> Result<(), GwdtError> {
    if v.dim() == 2 {
        Ok(())
    } else {
        Err(GwdtError::NotPlanar(v.dim()))
    }
}

/// A finite combination of generators with Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SineCombination {
    terms: BTreeMap<SineGenerator, QLaurent<GaussianRational>>,
}

impl SineCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: SineGenerator) -> Self {
        let mut out = Self::zero();
        out.add_term(g, QLaurent::constant(GaussianRational::from(1)));
        out
    }

    pub fn add_term(&mut self, g: SineGenerator, c: QLaurent<GaussianRational>) {
        let slot = self.terms.entry(g.clone()).or_insert_with(QLaurent::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &SineGenerator) -> QLaurent<GaussianRational> {
        self.terms.get(g).cloned().unwrap_or_else(QLaurent::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SineGenerator, &QLaurent<GaussianRational>)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QLaurent<GaussianRational>) -> Self {
        let mut out = Self::zero();
        for (g, d) in &self.terms {
            out.add_term(g.clone(), d * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&QLaurent::constant(GaussianRational::from(-1)))
    }

    /// The bilinear extension of [`sine_bracket`].
    pub fn bracket(&self, other: &Self) -> Result<Self, GwdtError> {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out = out.add(&sine_bracket(a, b)?.scale(&(ca * cb)));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SineCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub fn sine_bracket(a: &SineGenerator, b: &SineGenerator) -> Result<SineCombination, GwdtError> {
    if a.level() != b.level() {
        return Err(GwdtError::LevelMismatch(a.level().to_string(), b.level().to_string()));
    }
    let level = a.level();
    planar(level)?;
    let mut out = SineCombination::zero();
    let (SineGenerator::W { v: v1, .. }, SineGenerator::W { v: v2, .. }) = (a, b) else {
        return Ok(out);
    };
    planar(v1)?;
    planar(v2)?;
    let k = wedge(v1, v2);
    let sum = v1.add(v2);
    if k != 0 {
        out.add_term(SineGenerator::W { v: sum.clone(), level: level.clone() }, q_integer_laurent(k));
    }
    if sum.is_zero() {
        let c = wedge(level, v1);
        if c != 0 {
            out.add_term(
                SineGenerator::Central { level: level.clone() },
                QLaurent::constant(GaussianRational::from(c)),
            );
        }
    }
    Ok(out)
}
