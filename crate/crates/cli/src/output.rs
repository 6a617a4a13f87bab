//! Report documents and their text/JSON renderings.

use std::fmt::Write as _;

use lefschetz_core::constructions::CatalogEntry;
use lefschetz_core::document::{to_canonical_json, ParsedDocument, SCHEMA_VERSION};
use lefschetz_core::homology::{monodromy_shadow_check, HomologyError};
use lefschetz_core::invariants::InvariantError;
use lefschetz_core::{B1State, CertificateReport, InvariantReport, ShadowVerdict, TopologyAssertion};
use serde::Serialize;

use crate::Format;

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    to_canonical_json(value)
}

/// Report for `invariants` and `certify`.
#[derive(Debug, Clone, Serialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub name: Option<String>,
    pub invariants: InvariantReport,
    pub monodromy_shadow: ShadowVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    pub warnings: Vec<String>,
}

impl OutputDocument {
    pub fn invariants(doc: &ParsedDocument) -> Result<Self, InvariantError> {
        Self::build(doc, "invariants", None)
    }

    pub fn certificate(doc: &ParsedDocument, certificate: CertificateReport) -> Result<Self, InvariantError> {
        Self::build(doc, "certify", Some(certificate))
    }

    fn build(
        doc: &ParsedDocument,
        command: &'static str,
        certificate: Option<CertificateReport>,
    ) -> Result<Self, InvariantError> {
        let invariants = doc.fibration.invariant_report()?;
        let mut warnings = doc.warnings.clone();
        let monodromy_shadow = match monodromy_shadow_check(&doc.fibration) {
            Ok(v) => v,
            Err(HomologyError::MissingHomologyData { fiber, curve }) => {
                warnings.push(format!(
                    "monodromy shadow check indeterminate: fibers[{fiber}] curve {curve} has no homology class"
                ));
                ShadowVerdict::Indeterminate
            }
            Err(e) => return Err(e.into()),
        };
        match monodromy_shadow {
            ShadowVerdict::Indeterminate if doc.fibration.handle_matrices().is_none() && doc.fibration.base_genus() >= 1 => {
                warnings.push("monodromy shadow check indeterminate: no handle matrices supplied".to_string())
            }
            ShadowVerdict::NonIdentity => warnings.push(
                "monodromy shadow is not the identity: no fibration has these vanishing classes and handle matrices"
                    .to_string(),
            ),
            _ => {}
        }
        if let B1State::Interval { lo, hi } = invariants.b1 {
            warnings.push(format!("b1 known only as the interval [{lo}, {hi}]"));
        }
        Ok(OutputDocument {
            schema_version: SCHEMA_VERSION,
            command,
            name: doc.name.clone(),
            invariants,
            monodromy_shadow,
            certificate,
            warnings,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let r = &self.invariants;
        let c = &r.counts;
        let mut s = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(s, "name: {name}");
        }
        let _ = writeln!(s, "fiber genus h={} base genus g={}", r.h, r.g);
        let _ = writeln!(s, "k={} n={} s={} D={} N={}", c.k, c.n, c.s, c.d, c.components);
        let _ = writeln!(s, "chi={}", r.chi);
        match r.b1 {
            B1State::Exact(b) => {
                let torsion = r.torsion.as_deref().unwrap_or_default();
                let t: Vec<String> = torsion.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "b1={b} torsion=[{}]", t.join(", "));
            }
            B1State::Interval { lo, hi } => {
                let _ = writeln!(s, "b1 in [{lo}, {hi}]");
            }
        }
        let _ = writeln!(s, "b2- >= {}", r.b2_minus_lower);
        if let (Some(p), Some(m)) = (r.b2_plus, r.b2_minus) {
            let _ = writeln!(s, "b2+={p} b2-={m}");
        }
        if let Some(sigma) = r.signature {
            let _ = writeln!(s, "signature={sigma}");
        }
        if let Some(k2) = r.k_squared {
            let _ = writeln!(s, "K^2={k2}");
        }
        if let Some(ub) = r.k_squared_upper_bound {
            let _ = writeln!(s, "K^2 <= {ub}");
        }
        let _ = writeln!(s, "all fibers stable: {}", r.all_stable);
        match r.assertion {
            TopologyAssertion::Unspecified => {}
            TopologyAssertion::NotRationalOrRuled => {
                let _ = writeln!(s, "asserted: not rational or ruled");
            }
            TopologyAssertion::Ruled { a, b } => {
                let _ = writeln!(s, "asserted: ruled over genus {a}, blown up at {b} points");
            }
        }
        let _ = writeln!(s, "monodromy shadow: {}", self.monodromy_shadow);
        if let Some(cert) = &self.certificate {
            let _ = writeln!(s, "certificate: {}", cert.overall);
            for v in &cert.verdicts {
                let _ = writeln!(s, "{}", v.render_line());
            }
            for b in &cert.k2_lower_bounds {
                let _ = writeln!(s, "K^2 >= {} ({}: {})", b.bound, b.id, b.source);
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberSummary {
    pub index: usize,
    pub components: usize,
    pub curves: usize,
    pub separating: usize,
    pub semistable: bool,
    pub stable: bool,
}

/// Report for `validate`.
#[derive(Debug, Clone, Serialize)]
pub struct ValidateOutput {
    pub schema_version: u32,
    pub command: &'static str,
    pub name: Option<String>,
    pub valid: bool,
    pub fiber_genus: u32,
    pub base_genus: u32,
    pub fibers: Vec<FiberSummary>,
    pub warnings: Vec<String>,
}

impl ValidateOutput {
    pub fn new(doc: &ParsedDocument) -> Self {
        let fd = &doc.fibration;
        let fibers = fd
            .fibers()
            .iter()
            .enumerate()
            .map(|(index, f)| FiberSummary {
                index,
                components: f.component_count(),
                curves: f.curve_count(),
                separating: f.separating_count(),
                semistable: f.is_semistable(),
                stable: f.is_stable(),
            })
            .collect();
        ValidateOutput {
            schema_version: SCHEMA_VERSION,
            command: "validate",
            name: doc.name.clone(),
            valid: true,
            fiber_genus: fd.fiber_genus(),
            base_genus: fd.base_genus(),
            fibers,
            warnings: doc.warnings.clone(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return to_json(self);
        }
        let mut s = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(s, "name: {name}");
        }
        let _ = writeln!(
            s,
            "valid: fiber genus h={} base genus g={}, {} singular fibers",
            self.fiber_genus,
            self.base_genus,
            self.fibers.len()
        );
        for f in &self.fibers {
            let kind = if f.stable {
                "stable"
            } else if f.semistable {
                "semistable"
            } else {
                "not semistable"
            };
            let _ = writeln!(
                s,
                "fibers[{}]: {} components, {} curves ({} separating), {kind}",
                f.index, f.components, f.curves, f.separating
            );
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClbOutput {
    pub h: u32,
    pub k: u64,
    pub minimal_commutator_genus: u64,
}

impl ClbOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => format!("{}\n", self.minimal_commutator_genus),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogItem {
    pub name: String,
    pub description: String,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogListing {
    pub entries: Vec<CatalogItem>,
}

impl CatalogListing {
    pub fn new(entries: &[CatalogEntry]) -> Self {
        CatalogListing {
            entries: entries
                .iter()
                .map(|e| CatalogItem {
                    name: e.name.clone(),
                    description: e.description.clone(),
                    provenance: e.provenance.clone(),
                })
                .collect(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => self.entries.iter().map(|e| format!("{}  {}\n", e.name, e.description)).collect(),
        }
    }
}

/// JSON error document, written to stdout in JSON mode.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorOutput {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub message: String,
    pub path: Option<String>,
}

impl ErrorOutput {
    pub fn new(message: &str, path: Option<&str>) -> Self {
        ErrorOutput {
            error: ErrorBody {
                message: message.to_string(),
                path: path.map(str::to_string),
            },
        }
    }
}
