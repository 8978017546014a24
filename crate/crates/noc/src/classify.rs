//! The decision procedure: given two forbidden induced subgraphs H1 and H2,
//! decide whether the family of (H1, H2)-free graphs is near optimal
//! colourable, and say why.
//!
//! The case analysis, in order:
//!
//! 1. one of the patterns embeds in P4 — the family consists of perfect
//!    graphs, so the constant 1 works;
//! 2. the knowledge base has an entry (H1', H2') with H1 inside H1' and H2
//!    inside H2' (either orientation) — the family is a subclass of a family
//!    with a known constant;
//! 3. neither pattern is a forest — high-girth high-chromatic graphs avoid
//!    both, so no constant exists (non-materializable witness);
//! 4. neither pattern is the complement of a linear forest — large odd
//!    antiholes avoid both and have chi = omega + 1;
//! 5. otherwise exactly one pattern is a forest and the other the complement
//!    of a linear forest. If the co-linear pattern is not one of
//!    `P4 v Kn`, `(K2+K1) v Kn`, `K_n - e`, `K_n`, it contains a C4 and the
//!    family contains every `C5 v Kn`; not near optimal colourable.
//!    A paw reduces to K3 (paw-free components are triangle-free or complete
//!    multipartite, and those cases carry the same constant).
//!    For `P4 v Kn` / `(K2+K1) v K_{n+1}` with n >= 1 the answer is positive
//!    exactly when the forest is 2K2, with the inductive constant from
//!    [`noc_constant`]; any other forest admits the blown-up-C5 witnesses.
//!    For `K_n` a linear forest embeds in a path and the path bound
//!    chi <= (t-1)^(omega-1) applies; other forests are open (deciding them
//!    all is equivalent to a long-standing conjecture), as is `K_n - e`.

use crate::catalog::{self, CatalogError};
use crate::graph::Graph;
use crate::iso;
use crate::names;
use crate::recognize;
use crate::solver;
use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("witness family is existential only and cannot be materialized")]
    NotMaterializable,
    #[error(transparent)]
    Construction(#[from] CatalogError),
}

/// Which decision branch produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleTag {
    /// One pattern embeds in P4; the family is perfect.
    SubP4,
    /// Subsumed by a knowledge-base entry.
    KnowledgeBase,
    /// Neither pattern is a forest.
    HighGirth,
    /// Neither pattern is a complement of a linear forest.
    OddAntihole,
    /// The co-linear pattern is none of the four join shapes.
    XFamily,
    /// Join shape with a forest other than 2K2.
    YFamily,
    /// Join shape with 2K2: the inductive constant applies.
    TwoK2Induction,
    /// Complete pattern with a linear forest: the path bound applies.
    GyarfasPath,
    /// Not decided by the case analysis or the knowledge base.
    Open,
}

impl std::fmt::Display for RuleTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RuleTag::SubP4 => "sub-p4",
            RuleTag::KnowledgeBase => "knowledge-base",
            RuleTag::HighGirth => "high-girth",
            RuleTag::OddAntihole => "odd-antihole",
            RuleTag::XFamily => "x-family",
            RuleTag::YFamily => "y-family",
            RuleTag::TwoK2Induction => "2k2-induction",
            RuleTag::GyarfasPath => "gyarfas-path",
            RuleTag::Open => "open",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// Complements of odd cycles.
    OddAntiholes,
    /// `X_k = C5 v K_k`.
    XFamily,
    /// `Y_k`: C5 with two nonadjacent vertices blown up to `K_k`.
    YFamily,
    /// High-girth, high-chromatic graphs; existential only.
    ErdosHighGirth,
}

/// A symbolic family of graphs certifying "not near optimal colourable":
/// members avoid both forbidden patterns, have chi = omega + 1, and omega
/// grows without bound along the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDescriptor {
    pub family: WitnessFamily,
    /// Smallest family index the verdict's argument needs.
    pub min_index: usize,
    pub materializable: bool,
    pub note: String,
}

impl WitnessDescriptor {
    pub fn odd_antiholes(min_index: usize, note: impl Into<String>) -> Self {
        WitnessDescriptor {
            family: WitnessFamily::OddAntiholes,
            min_index,
            materializable: true,
            note: note.into(),
        }
    }

    pub fn x_family() -> Self {
        WitnessDescriptor {
            family: WitnessFamily::XFamily,
            min_index: 1,
            materializable: true,
            note: "the co-linear pattern contains a C4 and the forest contains 2K2 or 3K1".into(),
        }
    }

    pub fn y_family() -> Self {
        WitnessDescriptor {
            family: WitnessFamily::YFamily,
            min_index: 1,
            materializable: true,
            note: "the forest contains 3K1 and the join shape contains a gem or an HVN".into(),
        }
    }

    pub fn erdos() -> Self {
        WitnessDescriptor {
            family: WitnessFamily::ErdosHighGirth,
            min_index: 1,
            materializable: false,
            note: "graphs of arbitrarily high girth and chromatic number avoid both patterns"
                .into(),
        }
    }
}

/// Materializes the `k`-th member of a witness family (k >= 1), counted from
/// the descriptor's minimum index.
///
/// Produced graphs satisfy chi = omega + 1 with omega strictly increasing
/// in `k`; the high-girth family is existential and produces an error.
pub fn materialize_witness(w: &WitnessDescriptor, k: usize) -> Result<Graph, ClassifyError> {
    if k < 1 {
        return Err(ClassifyError::InvalidParameter(format!(
            "witness index must be at least 1, got {k}"
        )));
    }
    let idx = w.min_index + k - 1;
    match w.family {
        WitnessFamily::ErdosHighGirth => Err(ClassifyError::NotMaterializable),
        WitnessFamily::OddAntiholes => Ok(catalog::odd_antihole(2 * idx + 1)?),
        WitnessFamily::XFamily => Ok(catalog::x_family(idx)?),
        WitnessFamily::YFamily => Ok(catalog::y_family(idx)?),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpenCase {
    /// Forest vs complete graph: the general chi-boundedness conjecture.
    Gyarfas,
    /// Forest vs complete graph minus an edge.
    KnMinusE,
}

/// Which input ended up in the forest slot after normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForestRole {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NearOptimal {
        /// The constant c with chi <= max(c, omega) across the family.
        constant: Option<BigUint>,
    },
    NotNearOptimal {
        witness: WitnessDescriptor,
    },
    Open {
        case: OpenCase,
        note: String,
    },
}

/// The classifier's answer for one pair of forbidden patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: RuleTag,
    /// Present once the case analysis has normalized the pair.
    pub forest_role: Option<ForestRole>,
    /// True when the co-linear pattern was a paw and was replaced by K3.
    pub paw_reduced: bool,
    pub citation: String,
}

impl Verdict {
    pub fn constant(&self) -> Option<&BigUint> {
        match &self.outcome {
            Outcome::NearOptimal { constant } => constant.as_ref(),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&WitnessDescriptor> {
        match &self.outcome {
            Outcome::NotNearOptimal { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.outcome {
            Outcome::NearOptimal { .. } => "near-optimal-colourable",
            Outcome::NotNearOptimal { .. } => "not-near-optimal-colourable",
            Outcome::Open { .. } => "open",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 8)?;
        st.serialize_field("verdict", self.kind())?;
        st.serialize_field("rule", &self.rule)?;
        st.serialize_field(
            "constant",
            &self.constant().map(|c| c.to_string()),
        )?;
        st.serialize_field("witness", &self.witness())?;
        let open: Option<(&OpenCase, &str)> = match &self.outcome {
            Outcome::Open { case, note } => Some((case, note)),
            _ => None,
        };
        st.serialize_field("open_case", &open.map(|(c, _)| c))?;
        st.serialize_field("open_note", &open.map(|(_, n)| n))?;
        st.serialize_field("forest_role", &self.forest_role)?;
        st.serialize_field("paw_reduced", &self.paw_reduced)?;
        st.serialize_field("citation", &self.citation)?;
        st.end()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.outcome {
            Outcome::NearOptimal { constant } => {
                write!(f, "NOC")?;
                if let Some(c) = constant {
                    write!(f, ", c={c}")?;
                }
                write!(f, " ({}: {})", self.rule, self.citation)
            }
            Outcome::NotNearOptimal { witness } => {
                write!(
                    f,
                    "NOT NOC ({}: witness family {:?}, min index {})",
                    self.rule, witness.family, witness.min_index
                )
            }
            Outcome::Open { case, note } => {
                write!(f, "OPEN ({case:?}: {note})")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Knowledge base
// ---------------------------------------------------------------------------

/// A literature result: (H1', H2')-free graphs satisfy chi <= max(c, omega).
#[derive(Debug, Clone)]
pub struct KbEntry {
    pub h1: Graph,
    pub h2: Graph,
    pub constant: BigUint,
    pub citation: String,
}

/// Known near-optimal-colourable pairs, consulted by subsumption: a pair
/// whose patterns embed into an entry's patterns defines a subfamily, so the
/// entry's constant carries over.
#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    pub entries: Vec<KbEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("knowledge base line {line}: {message}")]
pub struct KbError {
    pub line: usize,
    pub message: String,
}

impl KnowledgeBase {
    pub fn empty() -> Self {
        KnowledgeBase::default()
    }

    /// The two bounds the tool ships with.
    pub fn builtin() -> Self {
        let mut kb = KnowledgeBase::default();
        kb.entries.push(KbEntry {
            h1: catalog::path(6).expect("static graph"),
            h2: catalog::diamond(),
            constant: BigUint::from(6u32),
            citation: "chi <= max(6, omega) for (P6, diamond)-free graphs".into(),
        });
        kb.entries.push(KbEntry {
            h1: catalog::two_k2(),
            h2: catalog::gem(),
            constant: BigUint::from(3u32),
            citation: "chi <= max(3, omega) for (2K2, gem)-free graphs".into(),
        });
        kb
    }

    /// Parses `h1-expr <TAB> h2-expr <TAB> constant <TAB> citation` lines.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, KbError> {
        let mut kb = KnowledgeBase::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            if fields.len() != 4 {
                return Err(KbError {
                    line,
                    message: format!("expected 4 tab-separated fields, got {}", fields.len()),
                });
            }
            let h1 = names::parse(fields[0]).map_err(|e| KbError {
                line,
                message: e.to_string(),
            })?;
            let h2 = names::parse(fields[1]).map_err(|e| KbError {
                line,
                message: e.to_string(),
            })?;
            let constant: BigUint = fields[2].trim().parse().map_err(|_| KbError {
                line,
                message: format!("bad constant {:?}", fields[2]),
            })?;
            kb.entries.push(KbEntry {
                h1,
                h2,
                constant,
                citation: fields[3].trim().to_string(),
            });
        }
        Ok(kb)
    }

    pub fn extend(&mut self, other: KnowledgeBase) {
        self.entries.extend(other.entries);
    }

    /// Best (smallest-constant) entry subsuming the pair, trying both
    /// orientations; ties keep the earliest entry.
    pub fn best_subsuming(&self, h1: &Graph, h2: &Graph) -> Option<&KbEntry> {
        self.entries
            .iter()
            .filter(|e| {
                (iso::contains_induced(&e.h1, h1) && iso::contains_induced(&e.h2, h2))
                    || (iso::contains_induced(&e.h1, h2) && iso::contains_induced(&e.h2, h1))
            })
            .min_by_key(|e| e.constant.clone())
    }
}

// ---------------------------------------------------------------------------
// The inductive constant
// ---------------------------------------------------------------------------

/// The derived constant for (2K2, P4 v Kn)-free families, with its
/// intermediate values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NocConstant {
    pub n: usize,
    /// `thresholds[i]` is t(i+1): the clique size above which chi = omega
    /// is forced for parameter i+1, assuming no big antihole.
    pub thresholds: Vec<u64>,
    /// Clique bound for members containing an antihole on 6+ vertices.
    pub antihole_bound: BigUint,
    /// f(max(t(n)-1, B(n))) with f(x) = x(x+1)/2, the 2K2-free binding
    /// function applied at the threshold.
    pub constant: BigUint,
}

impl NocConstant {
    pub fn derivation(&self) -> String {
        format!(
            "t(1)=3, t(k)=max(t(k-1), 4k+2)+10k up to t({n})={t}; antihole clique bound \
             B({n})=2^(2*{n}+4)*{n}+{n}+2={b}; members with omega above max(t({n}), B({n})+1) \
             have chi = omega, and the rest obey the 2K2-free bound chi <= omega(omega+1)/2, \
             giving c={c}",
            n = self.n,
            t = self.thresholds.last().expect("nonempty"),
            b = self.antihole_bound,
            c = self.constant,
        )
    }
}

/// Computes the constant witnessing that (2K2, P4 v Kn)-free graphs are near
/// optimal colourable. Deliberately the loose constant the structural proof
/// yields, not a conjectured tight one.
pub fn noc_constant(n: usize) -> Result<NocConstant, ClassifyError> {
    if n < 1 {
        return Err(ClassifyError::InvalidParameter(
            "the join parameter must be at least 1".into(),
        ));
    }
    let mut thresholds = Vec::with_capacity(n);
    thresholds.push(3u64);
    for k in 2..=n as u64 {
        let prev = *thresholds.last().expect("nonempty");
        thresholds.push(prev.max(4 * k + 2) + 10 * k);
    }
    let t_n = *thresholds.last().expect("nonempty");
    let antihole_bound =
        (BigUint::from(1u32) << (2 * n + 4)) * BigUint::from(n) + BigUint::from(n + 2);
    let x = antihole_bound.clone().max(BigUint::from(t_n - 1));
    let constant = (x.clone() * (x + BigUint::from(1u32))) / BigUint::from(2u32);
    Ok(NocConstant {
        n,
        thresholds,
        antihole_bound,
        constant,
    })
}

// ---------------------------------------------------------------------------
// The classifier
// ---------------------------------------------------------------------------

fn noc(rule: RuleTag, constant: BigUint, citation: impl Into<String>) -> Verdict {
    Verdict {
        outcome: Outcome::NearOptimal {
            constant: Some(constant),
        },
        rule,
        forest_role: None,
        paw_reduced: false,
        citation: citation.into(),
    }
}

fn not_noc(rule: RuleTag, witness: WitnessDescriptor, citation: impl Into<String>) -> Verdict {
    Verdict {
        outcome: Outcome::NotNearOptimal { witness },
        rule,
        forest_role: None,
        paw_reduced: false,
        citation: citation.into(),
    }
}

/// The longest induced cycle among the complements of the two patterns, used
/// to pick a safe minimum antihole index. Exact at desk scale; for oversized
/// patterns the order itself is a sound upper bound.
fn complement_cycle_bound(h1: &Graph, h2: &Graph) -> usize {
    let mut m = 0;
    for h in [h1, h2] {
        let co = h.complement();
        let len = if co.n() <= 20 {
            solver::longest_induced_cycle(&co).map_or(0, |c| c.len())
        } else {
            co.n()
        };
        m = m.max(len);
    }
    m
}

fn pattern_label(g: &Graph) -> String {
    match names::display_name(g) {
        Some(name) => name.to_string(),
        None => crate::graph6::encode(g),
    }
}

/// Decides near-optimal colourability for the family of (h1, h2)-free
/// graphs. Total on all graphs up to the supported order.
pub fn classify(h1: &Graph, h2: &Graph, kb: &KnowledgeBase) -> Verdict {
    // (1) a pattern inside P4 forces perfection of the whole family
    if recognize::is_sub_p4(h1) || recognize::is_sub_p4(h2) {
        return noc(
            RuleTag::SubP4,
            BigUint::from(1u32),
            "one forbidden pattern embeds in P4, so every member is perfect and chi = omega",
        );
    }

    // (2) knowledge base subsumption
    if let Some(entry) = kb.best_subsuming(h1, h2) {
        return noc(
            RuleTag::KnowledgeBase,
            entry.constant.clone(),
            format!(
                "subclass of ({}, {})-free graphs: {}",
                pattern_label(&entry.h1),
                pattern_label(&entry.h2),
                entry.citation
            ),
        );
    }

    // (3) two non-forests: high-girth graphs of unbounded chromatic number
    // avoid both, and their cliques stay at size 2
    if !recognize::is_forest(h1) && !recognize::is_forest(h2) {
        return not_noc(
            RuleTag::HighGirth,
            WitnessDescriptor::erdos(),
            "both patterns contain cycles, so high-girth graphs of unbounded chromatic \
             number avoid them",
        );
    }

    // (4) two non-co-linear-forests: big odd antiholes avoid both
    if !recognize::is_co_linear_forest(h1) && !recognize::is_co_linear_forest(h2) {
        let m = complement_cycle_bound(h1, h2);
        let min_index = 2usize.max(m.div_ceil(2));
        return not_noc(
            RuleTag::OddAntihole,
            WitnessDescriptor::odd_antiholes(
                min_index,
                format!(
                    "complements of odd cycles longer than {m} avoid both patterns; the \
                     argument also needs the index above the family's (symbolic) threshold g"
                ),
            ),
            "odd antiholes have chi = omega + 1 and unbounded omega",
        );
    }

    // normalize: exactly one assignment of roles remains
    let (forest, colinear, role) =
        if recognize::is_forest(h1) && recognize::is_co_linear_forest(h2) {
            (h1, h2, ForestRole::First)
        } else {
            debug_assert!(recognize::is_forest(h2) && recognize::is_co_linear_forest(h1));
            (h2, h1, ForestRole::Second)
        };
    let with_role = |mut v: Verdict| {
        v.forest_role = Some(role);
        v
    };

    // (5) the co-linear pattern is C4-free iff it is one of the four shapes
    let p4k = recognize::match_p4_join_kn(colinear);
    let k2k = recognize::match_k2k1_join_kn(colinear);
    let kn = recognize::match_complete(colinear);
    let kne = recognize::match_complete_minus_edge(colinear);
    if p4k.is_none() && k2k.is_none() && kn.is_none() && kne.is_none() {
        return with_role(not_noc(
            RuleTag::XFamily,
            WitnessDescriptor::x_family(),
            "the co-linear pattern contains a C4, so the joins of C5 with cliques avoid \
             the pair with chi = omega + 1",
        ));
    }

    // paw reduction: a paw-free graph has components that are triangle-free
    // or complete multipartite, so the K3 verdict carries over verbatim
    let paw_reduced = k2k == Some(1);
    let (kn, p4k, k2k, kne) = if paw_reduced {
        let k3 = catalog::complete(3).expect("static graph");
        if let Some(entry) = kb.best_subsuming(forest, &k3) {
            let mut v = noc(
                RuleTag::KnowledgeBase,
                entry.constant.clone(),
                format!(
                    "paw reduces to K3; subclass of ({}, {})-free graphs: {}",
                    pattern_label(&entry.h1),
                    pattern_label(&entry.h2),
                    entry.citation
                ),
            );
            v.paw_reduced = true;
            return with_role(v);
        }
        (Some(3), None, None, None)
    } else {
        (kn, p4k, k2k, kne)
    };
    let with_paw = |mut v: Verdict| {
        v.paw_reduced = paw_reduced;
        with_role(v)
    };

    // (6) join shapes P4 v Kn (n >= 1) and (K2+K1) v K_m (m >= 2):
    // near optimal colourable exactly for the forest 2K2
    let join_param = match (p4k, k2k) {
        // patterns with parameter 0 embed in P4 and were handled by rule (1)
        (Some(n), _) if n >= 1 => Some(n),
        // (K2+K1) v K_m embeds in P4 v K_m, so the same constant applies
        (_, Some(m)) if m >= 2 => Some(m),
        _ => None,
    };
    if let Some(n) = join_param {
        let is_2k2 = iso::are_isomorphic(forest, &catalog::two_k2());
        if is_2k2 {
            let c = noc_constant(n).expect("n >= 1");
            return with_paw(noc(
                RuleTag::TwoK2Induction,
                c.constant.clone(),
                c.derivation(),
            ));
        }
        return with_paw(not_noc(
            RuleTag::YFamily,
            WitnessDescriptor::y_family(),
            "a forest other than 2K2 (and outside P4) contains 3K1, so the blown-up \
             C5 family avoids the pair with chi = omega + 1",
        ));
    }

    // (7) remaining shapes: K_n (n >= 3) or K_n - e (n >= 4)
    if let Some(n) = kn {
        debug_assert!(n >= 3);
        if recognize::is_linear_forest(forest) {
            // a linear forest embeds in the path on (vertices + gaps) vertices
            let t = forest.n() + forest.component_count() - 1;
            let constant = BigUint::from(t - 1).pow((n - 2) as u32);
            return with_paw(noc(
                RuleTag::GyarfasPath,
                constant,
                format!(
                    "the forest embeds in P{t}, every P{t}-free graph has chi <= \
                     ({tm1})^(omega-1), and omega <= {nm1}; loose by construction",
                    tm1 = t - 1,
                    nm1 = n - 1
                ),
            ));
        }
        return with_paw(Verdict {
            outcome: Outcome::Open {
                case: OpenCase::Gyarfas,
                note: "not decided by the case analysis or the knowledge base; deciding \
                       every forest against complete graphs is the chi-boundedness \
                       conjecture for forests"
                    .into(),
            },
            rule: RuleTag::Open,
            forest_role: None,
            paw_reduced: false,
            citation: String::new(),
        });
    }
    let n = kne.expect("one of the four shapes matched");
    debug_assert!(n >= 4);
    with_paw(Verdict {
        outcome: Outcome::Open {
            case: OpenCase::KnMinusE,
            note: "not decided by the case analysis or the knowledge base; complete \
                   graphs minus an edge against forests subsume the complete-graph case"
                .into(),
        },
        rule: RuleTag::Open,
        forest_role: None,
        paw_reduced: false,
        citation: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn kb() -> KnowledgeBase {
        KnowledgeBase::builtin()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn threshold_recursion_values() {
        let c1 = noc_constant(1).unwrap();
        assert_eq!(c1.thresholds, vec![3]);
        assert_eq!(c1.antihole_bound, big(67));
        assert_eq!(c1.constant, big(67 * 68 / 2));

        let c3 = noc_constant(3).unwrap();
        assert_eq!(c3.thresholds, vec![3, 30, 60]);

        assert!(noc_constant(0).is_err());
    }

    #[test]
    fn antihole_bound_growth() {
        let c2 = noc_constant(2).unwrap();
        assert_eq!(c2.antihole_bound, big(2u64.pow(8) * 2 + 2 + 2));
        assert_eq!(c2.constant, big(516 * 517 / 2));
    }

    #[test]
    fn perfect_pair_rule() {
        let v = classify(&catalog::path(4).unwrap(), &catalog::cycle(5).unwrap(), &kb());
        assert_eq!(v.rule, RuleTag::SubP4);
        assert_eq!(v.constant(), Some(&big(1)));
    }

    #[test]
    fn two_triangles_are_hopeless() {
        let k3 = catalog::complete(3).unwrap();
        let v = classify(&k3, &k3, &kb());
        assert_eq!(v.rule, RuleTag::HighGirth);
        let w = v.witness().unwrap();
        assert_eq!(w.family, WitnessFamily::ErdosHighGirth);
        assert!(!w.materializable);
    }

    #[test]
    fn claw_pair_gets_antihole_witness() {
        let v = classify(&catalog::claw(), &catalog::claw(), &kb());
        assert_eq!(v.rule, RuleTag::OddAntihole);
        let w = v.witness().unwrap();
        assert_eq!(w.family, WitnessFamily::OddAntiholes);
        assert_eq!(w.min_index, 2); // complement of the claw has a triangle
    }

    #[test]
    fn kb_subsumption_beats_induction() {
        let v = classify(&catalog::two_k2(), &catalog::gem(), &kb());
        assert_eq!(v.rule, RuleTag::KnowledgeBase);
        assert_eq!(v.constant(), Some(&big(3)));
    }

    #[test]
    fn p5_diamond_subsumed_by_p6_diamond() {
        let v = classify(&catalog::path(5).unwrap(), &catalog::diamond(), &kb());
        assert_eq!(v.rule, RuleTag::KnowledgeBase);
        assert_eq!(v.constant(), Some(&big(6)));
    }

    #[test]
    fn order_insensitivity() {
        let pairs = [
            (catalog::path(4).unwrap(), catalog::cycle(5).unwrap()),
            (catalog::two_k2(), catalog::gem()),
            (catalog::three_k1(), catalog::complete(4).unwrap()),
            (catalog::claw(), catalog::paw()),
        ];
        for (a, b) in pairs {
            let v1 = classify(&a, &b, &kb());
            let v2 = classify(&b, &a, &kb());
            assert_eq!(v1.kind(), v2.kind());
            assert_eq!(v1.rule, v2.rule);
            assert_eq!(v1.constant(), v2.constant());
        }
    }

    #[test]
    fn paw_reduction_reaches_kb() {
        // (P5, paw) reduces to (P5, K3), which the (P6, diamond) entry covers
        let v = classify(&catalog::path(5).unwrap(), &catalog::paw(), &kb());
        assert_eq!(v.rule, RuleTag::KnowledgeBase);
        assert_eq!(v.constant(), Some(&big(6)));
        assert!(v.paw_reduced);
    }

    #[test]
    fn paw_reduction_subsumed_for_3k1() {
        // (3K1, paw) reduces to (3K1, K3), and K3 embeds in the diamond
        let v = classify(&catalog::three_k1(), &catalog::paw(), &kb());
        assert_eq!(v.rule, RuleTag::KnowledgeBase);
        assert!(v.paw_reduced);
        assert_eq!(v.constant(), Some(&big(6)));
        // without the knowledge base the reduction lands on the path bound:
        // 3K1 embeds in P5, constant (5-1)^(3-2)
        let bare = classify(&catalog::three_k1(), &catalog::paw(), &KnowledgeBase::empty());
        assert_eq!(bare.rule, RuleTag::GyarfasPath);
        assert_eq!(bare.constant(), Some(&big(4)));
    }

    #[test]
    fn paw_reduction_can_stay_open() {
        let v = classify(&catalog::claw(), &catalog::paw(), &kb());
        assert_eq!(v.rule, RuleTag::Open);
        assert!(v.paw_reduced);
        assert!(matches!(
            v.outcome,
            Outcome::Open { case: OpenCase::Gyarfas, .. }
        ));
    }

    #[test]
    fn materialization_contract() {
        let w = WitnessDescriptor::odd_antiholes(1, "");
        let g = materialize_witness(&w, 3).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(solver::clique_number(&g).0, 3);
        assert_eq!(solver::chromatic_number(&g).unwrap().0, 4);

        let x = materialize_witness(&WitnessDescriptor::x_family(), 1).unwrap();
        assert_eq!(solver::clique_number(&x).0, 3);
        assert_eq!(solver::chromatic_number(&x).unwrap().0, 4);

        assert!(matches!(
            materialize_witness(&WitnessDescriptor::erdos(), 1),
            Err(ClassifyError::NotMaterializable)
        ));
        assert!(matches!(
            materialize_witness(&WitnessDescriptor::x_family(), 0),
            Err(ClassifyError::InvalidParameter(_))
        ));
    }

    #[test]
    fn kb_file_round_trip() {
        let text = "# comment\nP6\tdiamond\t6\tpolynomial bound\n\n2K2\tgem\t3\tsmall bound\n";
        let kb = KnowledgeBase::parse(text).unwrap();
        assert_eq!(kb.entries.len(), 2);
        assert_eq!(kb.entries[1].constant, big(3));
        assert!(KnowledgeBase::parse("P6\tdiamond\t6\n").is_err());
        assert!(KnowledgeBase::parse("P6\tdiamond\tsix\tcite\n").is_err());
        assert!(KnowledgeBase::parse("Q9\tdiamond\t6\tcite\n").is_err());
    }

    #[test]
    fn verdict_serializes_to_stable_json() {
        let v = classify(&catalog::two_k2(), &catalog::gem(), &kb());
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "near-optimal-colourable");
        assert_eq!(json["rule"], "knowledge-base");
        assert_eq!(json["constant"], "3");
    }
}
