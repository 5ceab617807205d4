//! Checks the classification of groups whose commuting graphs are line
//! graphs, or complements of line graphs, against a corpus of groups.
//!
//! For every group the three commuting graphs are built and recognized,
//! the group-side predicates are evaluated, and each disagreement is
//! recorded as a named mismatch. Mismatches are data: a run always covers
//! the whole corpus.

mod corpus;
mod report;

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::commuting::{self, Variant};
use crate::graph::SimpleGraph;
use crate::group::{FiniteGroup, NamedGroup};
use crate::recognition::{
    is_complement_of_line_graph, is_line_graph, krausz_oracle, EmbeddingSummary, KrauszPartition,
    RecognitionResult, MAX_KRAUSZ_VERTICES,
};

pub use corpus::{default_corpus, extended_corpus, large_corpus, CorpusEntry, DEFAULT_MAX_ORDER};
pub use report::{report_header, report_line};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("eq1_check needs n >= 2, got {0}")]
    TooSmall(u64),
}

/// Γ(G) is a line graph exactly when G is abelian.
pub fn predicate_gamma_line(g: &FiniteGroup) -> bool {
    g.is_abelian()
}

/// Γ*(G) is a line graph exactly when G is abelian, or G has trivial
/// center and every non-central element has an abelian centralizer.
pub fn predicate_gamma_star_line(g: &FiniteGroup) -> bool {
    g.is_abelian() || (g.center().len() == 1 && g.noncentral_centralizers_abelian())
}

/// Group-side prediction for Γ**(G).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleStarPrediction {
    pub holds: bool,
    /// Set for abelian groups, whose Γ** has no vertices; `holds` is then
    /// true by convention.
    pub vacuous: bool,
}

/// For non-abelian G, Γ**(G) is a line graph exactly when every
/// non-central centralizer is abelian.
pub fn predicate_gamma_dstar_line(g: &FiniteGroup) -> DoubleStarPrediction {
    if g.is_abelian() {
        DoubleStarPrediction {
            holds: true,
            vacuous: true,
        }
    } else {
        DoubleStarPrediction {
            holds: g.noncentral_centralizers_abelian(),
            vacuous: false,
        }
    }
}

/// Γ, Γ* and Γ** are complements of line graphs exactly when G is abelian
/// or isomorphic to D4 or Q8.
pub fn predicate_complement_line(g: &FiniteGroup) -> bool {
    g.is_abelian() || g.isomorphic_to_named(NamedGroup::D4) || g.isomorphic_to_named(NamedGroup::Q8)
}

/// Whether n(n−1)/4 > ⌊(n−1)²/4⌋, in exact integer arithmetic.
pub fn eq1_check(n: u64) -> Result<bool, HarnessError> {
    if n < 2 {
        return Err(HarnessError::TooSmall(n));
    }
    let n = u128::from(n);
    Ok(n * (n - 1) > 4 * ((n - 1) * (n - 1) / 4))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Line,
    ComplementOfLine,
}

/// One recognition run on one commuting graph, with certificates.
#[derive(Debug, Clone)]
pub struct Check {
    pub variant: Variant,
    pub property: Property,
    /// The commuting graph itself (not its complement).
    pub graph: SimpleGraph,
    pub beineke: RecognitionResult,
    /// Krausz run on the graph (for `Line`) or its complement, when small
    /// enough.
    pub krausz: Option<RecognitionResult>,
}

impl Check {
    /// The graph the Krausz oracle was run on.
    pub fn krausz_host(&self) -> SimpleGraph {
        match self.property {
            Property::Line => self.graph.clone(),
            Property::ComplementOfLine => self.graph.complement(),
        }
    }

    fn record(&self) -> CheckRecord {
        CheckRecord {
            variant: self.variant,
            property: self.property,
            vertices: self.graph.vertex_count(),
            edges: self.graph.edge_count(),
            verdict: self.beineke.verdict,
            forbidden_member: self.beineke.family_index,
            embedding: self
                .beineke
                .embedding
                .as_ref()
                .map(|e| e.summary(&self.graph)),
            krausz_partition: self.krausz.as_ref().and_then(|k| k.partition.clone()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub variant: Variant,
    pub property: Property,
    pub vertices: usize,
    pub edges: usize,
    pub verdict: bool,
    pub forbidden_member: Option<usize>,
    pub embedding: Option<EmbeddingSummary>,
    pub krausz_partition: Option<KrauszPartition>,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// Per-group record pairing graph-side verdicts with group-side predictions.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub order: usize,
    pub center_size: usize,
    pub abelian: bool,
    #[serde(serialize_with = "ratio_string")]
    pub p2: Ratio<u64>,
    pub all_noncentral_centralizers_abelian: bool,
    pub verdict_gamma_line: bool,
    pub verdict_gamma_star_line: bool,
    pub verdict_gamma_dstar_line: bool,
    pub verdict_gamma_complement_line: bool,
    pub verdict_gamma_star_complement_line: bool,
    pub verdict_gamma_dstar_complement_line: bool,
    pub predicted_gamma_line: bool,
    pub predicted_gamma_star_line: bool,
    pub predicted_gamma_dstar_line: bool,
    pub predicted_complement_line: bool,
    pub dstar_vacuous: bool,
    pub mismatches: Vec<String>,
    pub checks: Vec<CheckRecord>,
    #[serde(skip)]
    pub details: Vec<Check>,
}

impl TheoremReport {
    pub fn check(&self, variant: Variant, property: Property) -> Option<&Check> {
        self.details
            .iter()
            .find(|c| c.variant == variant && c.property == property)
    }

    pub fn line_verdict(&self, variant: Variant) -> bool {
        match variant {
            Variant::Full => self.verdict_gamma_line,
            Variant::Star => self.verdict_gamma_star_line,
            Variant::DoubleStar => self.verdict_gamma_dstar_line,
        }
    }

    pub fn complement_verdict(&self, variant: Variant) -> bool {
        match variant {
            Variant::Full => self.verdict_gamma_complement_line,
            Variant::Star => self.verdict_gamma_star_complement_line,
            Variant::DoubleStar => self.verdict_gamma_dstar_complement_line,
        }
    }

    pub fn line_prediction(&self, variant: Variant) -> bool {
        match variant {
            Variant::Full => self.predicted_gamma_line,
            Variant::Star => self.predicted_gamma_star_line,
            Variant::DoubleStar => self.predicted_gamma_dstar_line,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Random induced subgraphs sampled from each graph recognized as a
    /// line graph; each must again be a line graph. Zero disables.
    pub hereditary_samples: usize,
    pub seed: u64,
}

fn recognize(graph: SimpleGraph, variant: Variant, property: Property) -> Check {
    let beineke = match property {
        Property::Line => is_line_graph(&graph),
        Property::ComplementOfLine => is_complement_of_line_graph(&graph),
    };
    let krausz = (graph.vertex_count() <= MAX_KRAUSZ_VERTICES).then(|| {
        let host = match property {
            Property::Line => graph.clone(),
            Property::ComplementOfLine => graph.complement(),
        };
        krausz_oracle(&host).expect("within the oracle limit")
    });
    Check {
        variant,
        property,
        graph,
        beineke,
        krausz,
    }
}

fn hereditary_violation(
    g: &SimpleGraph,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut vertices: Vec<usize> = (0..n).collect();
    for _ in 0..samples {
        vertices.shuffle(rng);
        let size = rng.gen_range(0..=n);
        let mut subset = vertices[..size].to_vec();
        subset.sort_unstable();
        let sub = g.induced_subgraph(&subset).expect("in range");
        if !is_line_graph(&sub).verdict {
            return Some(subset);
        }
    }
    None
}

/// Runs every recognition and predicate for one group.
pub fn verify_group(entry: &CorpusEntry) -> TheoremReport {
    verify_group_with(entry, VerifyOptions::default())
}

pub fn verify_group_with(entry: &CorpusEntry, options: VerifyOptions) -> TheoremReport {
    let g = &entry.group;
    let n = g.order();
    let abelian = g.is_abelian();
    let center = g.center();
    let center_size = center.len();
    let p2 = g.commuting_probability();
    let centralizers_abelian = g.noncentral_centralizers_abelian();
    let mut mismatches = Vec::new();

    let full = commuting::commuting_graph(g);
    let star = commuting::star_graph(g);
    let dstar = match commuting::double_star_graph(g) {
        Ok(d) => d.into_graph(),
        Err(e) => {
            mismatches.push(format!("dominating-set: {e}"));
            full.graph()
                .without_vertices(center.members())
                .expect("center in range")
        }
    };

    // Lemma-level facts.
    if full.graph().is_complete() != abelian {
        mismatches.push("completeness: Γ complete disagrees with abelian".into());
    }
    let pair_count = g.commuting_pair_count();
    if Ratio::new(pair_count, (n * n) as u64) != p2 {
        mismatches.push(format!(
            "commuting-probability: {pair_count} commuting pairs vs {}/{}",
            p2.numer(),
            p2.denom()
        ));
    }
    let centralizer_sum: usize = g
        .elements()
        .map(|x| g.centralizer(x).expect("in range").len())
        .sum();
    if (centralizer_sum - n) / 2 != full.graph().edge_count() {
        mismatches.push("edge-count: Γ edges differ from (Σ|C(x)| − n)/2".into());
    }
    if !abelian && center_size == 1 && p2 > Ratio::new(1, 2) {
        mismatches.push("p2-bound: trivial center with P2 > 1/2".into());
    }
    if !abelian && center_size == 2 {
        let order_eight =
            g.isomorphic_to_named(NamedGroup::D4) || g.isomorphic_to_named(NamedGroup::Q8);
        if (p2 > Ratio::new(1, 2)) != order_eight {
            mismatches.push("p2-center-2: P2 > 1/2 disagrees with G ≅ D4 or Q8".into());
        }
    }

    let graphs = [
        (Variant::Full, full.into_graph()),
        (Variant::Star, star.into_graph()),
        (Variant::DoubleStar, dstar),
    ];
    let mut details = Vec::with_capacity(6);
    for (variant, graph) in &graphs {
        for property in [Property::Line, Property::ComplementOfLine] {
            details.push(recognize(graph.clone(), *variant, property));
        }
    }

    // Certificates and oracle agreement.
    for check in &details {
        let tag = format!("{}/{:?}", check.variant, check.property);
        if check.beineke.verdict == check.beineke.embedding.is_some() {
            mismatches.push(format!("certificate-missing: {tag}"));
        }
        if let Err(e) = check.beineke.validate(&check.graph) {
            mismatches.push(format!("certificate-replay: {tag}: {e}"));
        }
        if let Some(k) = &check.krausz {
            if k.verdict != check.beineke.verdict {
                mismatches.push(format!("oracle-disagreement: {tag}"));
            }
            if k.verdict && k.partition.is_none() {
                mismatches.push(format!("certificate-missing: {tag} (krausz)"));
            }
            if let Err(e) = k.validate(&check.krausz_host()) {
                mismatches.push(format!("certificate-replay: {tag} (krausz): {e}"));
            }
        }
    }

    if options.hereditary_samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for check in details.iter().filter(|c| c.property == Property::Line) {
            if check.beineke.verdict {
                if let Some(subset) =
                    hereditary_violation(&check.graph, options.hereditary_samples, &mut rng)
                {
                    mismatches.push(format!(
                        "hereditary: {} induced subgraph on {subset:?} is not a line graph",
                        check.variant
                    ));
                }
            }
        }
    }

    let verdict = |variant: Variant, property: Property| {
        details
            .iter()
            .find(|c| c.variant == variant && c.property == property)
            .expect("all six checks run")
            .beineke
            .verdict
    };
    let predicted_gamma_line = predicate_gamma_line(g);
    let predicted_gamma_star_line = predicate_gamma_star_line(g);
    let dstar_prediction = predicate_gamma_dstar_line(g);
    let predicted_complement_line = predicate_complement_line(g);

    let mut compare = |label: &str, got: bool, want: bool| {
        if got != want {
            mismatches.push(format!("{label}: verdict={got} predicted={want}"));
        }
    };
    compare(
        "gamma-line",
        verdict(Variant::Full, Property::Line),
        predicted_gamma_line,
    );
    compare(
        "gamma-star-line",
        verdict(Variant::Star, Property::Line),
        predicted_gamma_star_line,
    );
    compare(
        "gamma-complement-line",
        verdict(Variant::Full, Property::ComplementOfLine),
        predicted_complement_line,
    );
    compare(
        "gamma-star-complement-line",
        verdict(Variant::Star, Property::ComplementOfLine),
        predicted_complement_line,
    );
    // Γ** of an abelian group has no vertices; the theorems say nothing.
    if !dstar_prediction.vacuous {
        compare(
            "gamma-dstar-line",
            verdict(Variant::DoubleStar, Property::Line),
            dstar_prediction.holds,
        );
        compare(
            "gamma-dstar-complement-line",
            verdict(Variant::DoubleStar, Property::ComplementOfLine),
            predicted_complement_line,
        );
    }

    TheoremReport {
        name: entry.name.clone(),
        order: n,
        center_size,
        abelian,
        p2,
        all_noncentral_centralizers_abelian: centralizers_abelian,
        verdict_gamma_line: verdict(Variant::Full, Property::Line),
        verdict_gamma_star_line: verdict(Variant::Star, Property::Line),
        verdict_gamma_dstar_line: verdict(Variant::DoubleStar, Property::Line),
        verdict_gamma_complement_line: verdict(Variant::Full, Property::ComplementOfLine),
        verdict_gamma_star_complement_line: verdict(Variant::Star, Property::ComplementOfLine),
        verdict_gamma_dstar_complement_line: verdict(
            Variant::DoubleStar,
            Property::ComplementOfLine,
        ),
        predicted_gamma_line,
        predicted_gamma_star_line,
        predicted_gamma_dstar_line: dstar_prediction.holds,
        predicted_complement_line,
        dstar_vacuous: dstar_prediction.vacuous,
        mismatches,
        checks: details.iter().map(Check::record).collect(),
        details,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub groups: usize,
    pub mismatches: usize,
    pub groups_with_mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub reports: Vec<TheoremReport>,
    pub summary: CorpusSummary,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Verifies every entry in parallel; reports keep corpus order.
pub fn verify_corpus(corpus: &[CorpusEntry], options: VerifyOptions) -> CorpusReport {
    let start = Instant::now();
    let reports: Vec<TheoremReport> = corpus
        .par_iter()
        .map(|entry| verify_group_with(entry, options))
        .collect();
    let summary = CorpusSummary {
        groups: reports.len(),
        mismatches: reports.iter().map(|r| r.mismatches.len()).sum(),
        groups_with_mismatches: reports
            .iter()
            .filter(|r| !r.mismatches.is_empty())
            .map(|r| r.name.clone())
            .collect(),
    };
    CorpusReport {
        reports,
        summary,
        elapsed: start.elapsed(),
    }
}
