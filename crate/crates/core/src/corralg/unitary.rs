use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use super::element::CorrElement;
use super::generator::Generator;
use super::object::ObjectId;
use super::table::{standard_table, RelationTable};
use super::CorrError;
use crate::partitions::{aut_order, enumerate_partitions, join_leq, z_mu, Partition};
use crate::scalars::{GaussianRational, GaussianScalar, Ring};

/// `∏_k i^{μ_k−1}`.
pub fn l_phase(mu: &Partition) -> GaussianRational {
    GaussianRational::i_pow(mu.n() as i64 - mu.len() as i64)
}

/// `𝓛 = Σ_μ (∏_k i^{μ_k−1}) Δ^μ : ⨿_μ 𝓨^μ → Y^{[n]}`.
pub fn build_l<R: GaussianScalar>(n: u32) -> CorrElement<R> {
    let terms = enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let c = R::from_gaussian(&l_phase(&mu));
            (Generator::Delta(mu), c)
        });
    CorrElement::new(ObjectId::StackCoproduct(n), ObjectId::Hilb(n), terms).expect("blocks of the coproduct")
}

/// `𝓛† = Σ_μ (∏_k i^{μ_k−1}) (Δ^μ)†`, coefficients unconjugated.
pub fn build_l_dagger<R: GaussianScalar>(n: u32) -> CorrElement<R> {
    build_l::<R>(n).dagger().expect("Delta has an adjoint")
}

/// Both composites of `𝓛` with its adjoint.
#[derive(Clone, Debug, Serialize)]
pub struct UnitarityReport {
    pub n: u32,
    /// `𝓛⋆𝓛† = Σ_μ Δ_{𝓨^μ}`.
    pub forward_holds: bool,
    /// `𝓛†⋆𝓛 = Δ_{Y^{[n]}}`.
    pub backward_holds: bool,
    /// Blocks μ where the forward composite differs from `Δ_{𝓨^μ}`.
    pub failing_blocks: Vec<Partition>,
    pub forward: CorrElement<GaussianRational>,
    pub backward: CorrElement<GaussianRational>,
}

impl UnitarityReport {
    pub fn holds(&self) -> bool {
        self.forward_holds && self.backward_holds
    }
}

pub fn verify_unitarity(n: u32) -> Result<UnitarityReport, CorrError> {
    verify_unitarity_with(standard_table(), n)
}

pub fn verify_unitarity_with(table: &RelationTable, n: u32) -> Result<UnitarityReport, CorrError> {
    let l = build_l::<GaussianRational>(n);
    let ld = build_l_dagger::<GaussianRational>(n);
    let forward = table.star(&l, &ld)?;
    let backward = table.star(&ld, &l)?;
    let block_id = CorrElement::<GaussianRational>::identity(&ObjectId::StackCoproduct(n));
    let failing_blocks: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|mu| {
            let block = ObjectId::StackY(mu.clone());
            forward
                .terms()
                .filter(|(g, _)| g.domain() == block || g.codomain() == block)
                .map(|(g, c)| (g.clone(), c.clone()))
                .ne(block_id.terms().filter(|(g, _)| g.domain() == block).map(|(g, c)| (g.clone(), c.clone())))
        })
        .collect();
    Ok(UnitarityReport {
        n,
        forward_holds: forward == block_id,
        backward_holds: backward == CorrElement::identity(&ObjectId::Hilb(n)),
        failing_blocks,
        forward,
        backward,
    })
}

/// A coefficient the relations leave undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnknownCoefficient {
    pub symbol: String,
    pub coarse: Partition,
    pub generator: Generator,
}

/// `E(μ) = |Aut μ|·ℓ^μ + Σ_{μ'<μ} c_{μ',μ} ℓ^{μ'}` with the `c` symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EDecomposition {
    pub mu: Partition,
    pub leading: Generator,
    #[serde(serialize_with = "as_text")]
    pub leading_coefficient: BigUint,
    pub unknowns: Vec<UnknownCoefficient>,
}

fn as_text<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

pub fn decompose_e(mu: &Partition) -> EDecomposition {
    let unknowns = enumerate_partitions(mu.n())
        .into_iter()
        .filter(|c| c != mu && join_leq(c, mu).expect("same weight"))
        .map(|c| UnknownCoefficient {
            symbol: format!("c[{c},{mu}]"),
            generator: Generator::Ell(c.clone()),
            coarse: c,
        })
        .collect();
    EDecomposition {
        mu: mu.clone(),
        leading: Generator::Ell(mu.clone()),
        leading_coefficient: aut_order(mu),
        unknowns,
    }
}

/// Converts a composite computed on the cover `Y^μ` to the stack `𝓨^μ`,
/// dividing by `z_μ`.
pub fn stack_normalize<R: Ring>(mu: &Partition, cover: &R) -> R {
    cover.clone() * R::from_rational(&BigRational::new(BigInt::from(1), BigInt::from(z_mu(mu))))
}
