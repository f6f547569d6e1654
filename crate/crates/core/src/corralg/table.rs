use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::CorrElement;
use super::generator::Generator;
use super::CorrError;
use crate::partitions::{cycle_sign, enumerate_partitions, Partition};
use crate::scalars::{RationalText, Ring};

/// Weight bound of the table behind [`star`].
pub const DEFAULT_N_MAX: u32 = 10;

type Combination = Vec<(Generator, BigRational)>;

/// `pivot` appearing with coefficient `c` and every other `lhs` term with
/// the matching multiple lets `c·lhs` be replaced by `c·rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rewrite {
    pub pivot: Generator,
    pub lhs: Combination,
    pub rhs: Combination,
}

/// Generator compositions, "left then right", with exact coefficients.
/// Pairs absent from the table are unknown, never zero.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationTable {
    unit_laws: bool,
    compositions: HashMap<(Generator, Generator), Combination>,
    rewrites: Vec<Rewrite>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RelationTable {
    pub fn empty(unit_laws: bool) -> Self {
        Self { unit_laws, compositions: HashMap::new(), rewrites: Vec::new() }
    }

    /// The relations among `Δ^μ`, `(Δ^μ)†`, `E(μ)`, `Σ^μ` and `L^μΣ` for
    /// every partition of weight at most `n_max`, closed under the
    /// consequences forced by associativity.
    pub fn standard(n_max: u32) -> Self {
        use Generator::*;
        let mut t = Self::empty(true);
        for n in 0..=n_max {
            let ps = enumerate_partitions(n);
            for mu in &ps {
                let s = int(cycle_sign(mu) as i64);
                for nu in &ps {
                    let same = mu == nu;
                    let hit = |g: Generator| if same { vec![(g, s.clone())] } else { Vec::new() };
                    t.insert(Delta(mu.clone()), DeltaDagger(nu.clone()), hit(IdStack(mu.clone())));
                    t.insert(Delta(nu.clone()), E(mu.clone()), hit(Delta(mu.clone())));
                    t.insert(E(mu.clone()), DeltaDagger(nu.clone()), hit(DeltaDagger(mu.clone())));
                    t.insert(E(mu.clone()), E(nu.clone()), hit(E(mu.clone())));
                    t.insert(LSigma(mu.clone()), DeltaDagger(nu.clone()), hit(SigmaMu(mu.clone())));
                    t.insert(LSigma(mu.clone()), E(nu.clone()), hit(LSigma(mu.clone())));
                }
                t.insert(DeltaDagger(mu.clone()), Delta(mu.clone()), vec![(E(mu.clone()), BigRational::one())]);
                t.insert(SigmaMu(mu.clone()), Delta(mu.clone()), vec![(LSigma(mu.clone()), BigRational::one())]);
            }
            t.rewrites.push(Rewrite {
                pivot: E(Partition::ones(n)),
                lhs: ps.iter().map(|mu| (E(mu.clone()), int(cycle_sign(mu) as i64))).collect(),
                rhs: vec![(IdHilb(n), BigRational::one())],
            });
        }
        t
    }

    pub fn insert(&mut self, left: Generator, right: Generator, result: Combination) {
        self.compositions.insert((left, right), result);
    }

    pub fn add_rewrite(&mut self, rule: Rewrite) {
        self.rewrites.push(rule);
    }

    pub fn unit_laws(&self) -> bool {
        self.unit_laws
    }

    pub fn len(&self) -> usize {
        self.compositions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.compositions.is_empty()
    }

    /// The composite of two generators with matching middle object.
    pub fn lookup(&self, a: &Generator, b: &Generator) -> Result<Combination, CorrError> {
        if a.codomain() != b.domain() {
            return Err(CorrError::ObjectMismatch {
                expected: a.codomain().to_string(),
                found: b.domain().to_string(),
            });
        }
        if self.unit_laws && a.is_identity() {
            return Ok(vec![(b.clone(), BigRational::one())]);
        }
        if self.unit_laws && b.is_identity() {
            return Ok(vec![(a.clone(), BigRational::one())]);
        }
        if let Some(c) = self.compositions.get(&(a.clone(), b.clone())) {
            return Ok(c.clone());
        }
        // a generator pinned down by a one-term rewrite composes through its image
        if let Some(rep) = self.solved(a) {
            return self.compose_through(&rep, |h| self.lookup(h, b));
        }
        if let Some(rep) = self.solved(b) {
            return self.compose_through(&rep, |h| self.lookup(a, h));
        }
        Err(CorrError::UnknownComposition(a.clone(), b.clone()))
    }

    /// `g = rhs/c` when some rule reads `c·g = rhs`.
    fn solved(&self, g: &Generator) -> Option<Combination> {
        let rule = self.rewrites.iter().find(|r| r.pivot == *g && r.lhs.len() == 1)?;
        let c = &rule.lhs[0].1;
        Some(rule.rhs.iter().map(|(h, r)| (h.clone(), r / c)).collect())
    }

    fn compose_through(
        &self,
        rep: &Combination,
        mut f: impl FnMut(&Generator) -> Result<Combination, CorrError>,
    ) -> Result<Combination, CorrError> {
        let mut acc: Vec<(Generator, BigRational)> = Vec::new();
        for (h, r) in rep {
            for (k, c) in f(h)? {
                let c = c * r;
                match acc.iter_mut().find(|(g, _)| *g == k) {
                    Some(slot) => slot.1 += c,
                    None => acc.push((k, c)),
                }
            }
        }
        acc.retain(|(_, c)| !c.is_zero());
        Ok(acc)
    }

    /// `f ⋆ g`: first `f`, then `g`.
    pub fn star<R: Ring>(&self, f: &CorrElement<R>, g: &CorrElement<R>) -> Result<CorrElement<R>, CorrError> {
        if f.codomain() != g.domain() {
            return Err(CorrError::ObjectMismatch {
                expected: f.codomain().to_string(),
                found: g.domain().to_string(),
            });
        }
        let mut out = CorrElement::zero(f.domain().clone(), g.codomain().clone());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                // distinct blocks of a coproduct do not meet
                if a.codomain() != b.domain() {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                for (h, r) in self.lookup(a, b)? {
                    out.push(h, c.clone() * R::from_rational(&r));
                }
            }
        }
        self.normalize(&mut out);
        if f.is_strict() || g.is_strict() {
            match out.first_indivisible() {
                None => out.set_strict(true),
                Some(bad) => log::warn!("{bad} in a star product is not divisible on its stack lift"),
            }
        }
        Ok(out)
    }

    /// Applies the rewrite rules until none fires.
    pub fn normalize<R: Ring>(&self, e: &mut CorrElement<R>) {
        loop {
            let mut fired = false;
            for rule in &self.rewrites {
                fired |= apply_rewrite(rule, e);
            }
            if !fired {
                return;
            }
        }
    }

    pub fn to_doc(&self) -> TableDoc {
        let combo = |c: &Combination| c.iter().map(|(g, r)| (g.clone(), RationalText(r.clone()))).collect();
        let mut compositions: Vec<CompositionDoc> = self
            .compositions
            .iter()
            .map(|((l, r), res)| CompositionDoc { left: l.clone(), right: r.clone(), result: combo(res) })
            .collect();
        compositions.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
        TableDoc {
            unit_laws: self.unit_laws,
            compositions,
            rewrites: self
                .rewrites
                .iter()
                .map(|r| RewriteDoc { pivot: r.pivot.clone(), lhs: combo(&r.lhs), rhs: combo(&r.rhs) })
                .collect(),
        }
    }

    pub fn from_doc(doc: &TableDoc) -> Result<Self, CorrError> {
        let combo = |c: &[(Generator, RationalText)]| -> Combination {
            c.iter().map(|(g, r)| (g.clone(), r.0.clone())).collect()
        };
        let mut t = Self::empty(doc.unit_laws);
        for c in &doc.compositions {
            if c.left.codomain() != c.right.domain() {
                return Err(CorrError::ObjectMismatch {
                    expected: c.left.codomain().to_string(),
                    found: c.right.domain().to_string(),
                });
            }
            for (h, _) in &c.result {
                if h.domain() != c.left.domain() || h.codomain() != c.right.codomain() {
                    return Err(CorrError::ObjectMismatch {
                        expected: format!("{} -> {}", c.left.domain(), c.right.codomain()),
                        found: format!("{h}"),
                    });
                }
            }
            t.insert(c.left.clone(), c.right.clone(), combo(&c.result));
        }
        for r in &doc.rewrites {
            if !r.lhs.iter().any(|(g, c)| *g == r.pivot && !c.0.is_zero()) {
                return Err(CorrError::Parse(format!("rewrite pivot {} missing from its left side", r.pivot)));
            }
            t.rewrites.push(Rewrite { pivot: r.pivot.clone(), lhs: combo(&r.lhs), rhs: combo(&r.rhs) });
        }
        Ok(t)
    }
}

fn apply_rewrite<R: Ring>(rule: &Rewrite, e: &mut CorrElement<R>) -> bool {
    let pivot_coeff = e.coeff(&rule.pivot);
    if pivot_coeff.is_zero() {
        return false;
    }
    let l = rule.lhs.iter().find(|(g, _)| *g == rule.pivot).map(|(_, c)| c).expect("pivot in lhs");
    let c = pivot_coeff * R::from_rational(&l.recip());
    let matches = rule.lhs.iter().all(|(g, r)| e.coeff(g) == c.clone() * R::from_rational(r));
    if !matches {
        return false;
    }
    for (g, r) in &rule.lhs {
        e.push(g.clone(), -(c.clone() * R::from_rational(r)));
    }
    for (g, r) in &rule.rhs {
        e.push(g.clone(), c.clone() * R::from_rational(r));
    }
    true
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompositionDoc {
    pub left: Generator,
    pub right: Generator,
    pub result: Vec<(Generator, RationalText)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RewriteDoc {
    pub pivot: Generator,
    pub lhs: Vec<(Generator, RationalText)>,
    pub rhs: Vec<(Generator, RationalText)>,
}

/// JSON form of a [`RelationTable`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    #[serde(default = "yes")]
    pub unit_laws: bool,
    #[serde(default)]
    pub compositions: Vec<CompositionDoc>,
    #[serde(default)]
    pub rewrites: Vec<RewriteDoc>,
}

fn yes() -> bool {
    true
}

/// The shared standard table for weights up to [`DEFAULT_N_MAX`].
pub fn standard_table() -> &'static RelationTable {
    static TABLE: OnceLock<RelationTable> = OnceLock::new();
    TABLE.get_or_init(|| RelationTable::standard(DEFAULT_N_MAX))
}

/// [`RelationTable::star`] with the standard table.
pub fn star<R: Ring>(f: &CorrElement<R>, g: &CorrElement<R>) -> Result<CorrElement<R>, CorrError> {
    standard_table().star(f, g)
}
