use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::combinat::TermOrder;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::generic::gin;
use crate::monomial::{compare_functions, MonomialIdeal};
use crate::polyalg::{Ideal, Polynomial};

/// A Gröbner deformation from one ideal to a monomial ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    InitRlex,
    InitHlex,
    GinRlex,
    /// `(init_hlex I)^sat`.
    SatInitHlex,
}

impl Relation {
    /// The Hilbert annotation that holds for every ideal.
    pub fn default_annotation(self) -> Annotation {
        match self {
            Relation::SatInitHlex => Annotation::AtMost,
            _ => Annotation::Equal,
        }
    }

    pub fn apply(self, ideal: &Ideal, cfg: &Config) -> Result<MonomialIdeal> {
        match self {
            Relation::InitRlex => ideal.initial_ideal(TermOrder::Rlex, cfg),
            Relation::InitHlex => ideal.initial_ideal(TermOrder::Hlex, cfg),
            Relation::GinRlex => gin(ideal, TermOrder::Rlex, cfg),
            Relation::SatInitHlex => Ok(ideal.initial_ideal(TermOrder::Hlex, cfg)?.saturate()),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::InitRlex => "init_rlex",
            Relation::InitHlex => "init_hlex",
            Relation::GinRlex => "gin_rlex",
            Relation::SatInitHlex => "sat_init_hlex",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Relation> {
        match s {
            "init_rlex" => Ok(Relation::InitRlex),
            "init_hlex" => Ok(Relation::InitHlex),
            "gin_rlex" => Ok(Relation::GinRlex),
            "sat_init_hlex" | "sat∘init_hlex" | "sat.init_hlex" => Ok(Relation::SatInitHlex),
            other => Err(Error::UnknownRelation(other.to_string())),
        }
    }
}

/// Expected relation between the Hilbert functions of source and target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Annotation {
    Equal,
    /// `h_source <= h_target` pointwise.
    AtMost,
    /// `h_source < h_target`: `<=` everywhere and `<` somewhere.
    Less,
}

impl Annotation {
    pub fn holds(self, cmp: Option<Ordering>) -> bool {
        match self {
            Annotation::Equal => cmp == Some(Ordering::Equal),
            Annotation::AtMost => matches!(cmp, Some(Ordering::Equal | Ordering::Less)),
            Annotation::Less => cmp == Some(Ordering::Less),
        }
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Annotation::Equal => "=",
            Annotation::AtMost => "≤",
            Annotation::Less => "<",
        })
    }
}

impl FromStr for Annotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Annotation> {
        match s {
            "=" => Ok(Annotation::Equal),
            "≤" | "<=" => Ok(Annotation::AtMost),
            "<" => Ok(Annotation::Less),
            other => Err(Error::Parse { line: 0, column: 1, message: format!("unknown annotation '{other}'") }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChainEdge {
    pub label: String,
    pub relation: Relation,
    pub source: Ideal,
    pub target: Ideal,
    /// Defaults to [`Relation::default_annotation`].
    pub annotation: Option<Annotation>,
}

#[derive(Clone, Debug)]
pub struct EdgeReport {
    pub label: String,
    pub relation: Relation,
    pub ideal_matches: bool,
    /// Reduced rlex basis of the recomputed ideal.
    pub computed: Vec<Polynomial>,
    /// Reduced rlex basis of the expected ideal.
    pub expected: Vec<Polynomial>,
    /// `h_source` against `h_target`; `None` when incomparable.
    pub hilbert: Option<Ordering>,
    pub annotation: Annotation,
    pub annotation_holds: bool,
}

impl EdgeReport {
    pub fn passed(&self) -> bool {
        self.ideal_matches && self.annotation_holds
    }

    /// `=`, `<`, `>` or `incomparable`.
    pub fn observed(&self) -> &'static str {
        match self.hilbert {
            Some(Ordering::Equal) => "=",
            Some(Ordering::Less) => "<",
            Some(Ordering::Greater) => ">",
            None => "incomparable",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ChainReport {
    pub edges: Vec<EdgeReport>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.edges.iter().all(EdgeReport::passed)
    }
}

/// Recomputes every edge and compares Hilbert functions up to the configured bound.
pub fn verify_chain(edges: &[ChainEdge], cfg: &Config) -> Result<ChainReport> {
    let mut out = ChainReport::default();
    for edge in edges {
        let n = edge.source.width();
        let computed = Ideal::from_monomial(&edge.relation.apply(&edge.source, cfg)?);
        let computed_gb = computed.canonical_generators(cfg)?;
        let expected_gb = edge.target.canonical_generators(cfg)?;
        let bound = cfg.bound_for(n, edge.source.max_degree().max(edge.target.max_degree()));
        let hs = edge.source.hilbert_function(bound, cfg)?;
        let ht = edge.target.hilbert_function(bound, cfg)?;
        let hilbert = compare_functions(hs.values(), ht.values());
        let annotation = edge.annotation.unwrap_or(edge.relation.default_annotation());
        out.edges.push(EdgeReport {
            label: edge.label.clone(),
            relation: edge.relation,
            ideal_matches: computed_gb == expected_gb,
            computed: computed_gb,
            expected: expected_gb,
            hilbert,
            annotation,
            annotation_holds: annotation.holds(hilbert),
        });
    }
    Ok(out)
}
