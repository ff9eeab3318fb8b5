//! Domain network files.
//!
//! ```json
//! {"domains": [{"label": "amine", "N": 8, "q": 1}]}
//! ```
//!
//! Unknown fields are rejected rather than ignored so a typo like
//! "capcity" fails loudly instead of silently dropping a setting.

use nensemble::{DomainSpec, Error};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkFile {
    domains: Vec<RawDomain>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDomain {
    label: String,
    #[serde(rename = "N")]
    baseline: u32,
    q: u32,
}

/// Parses the document and validates every domain.
///
/// Both syntax errors (reported with line and column by the JSON
/// parser) and semantically invalid entries (q = 0, N < q) are
/// configuration errors to the caller.
pub fn parse_domains(text: &str) -> Result<Vec<DomainSpec>, String> {
    let file: NetworkFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.domains.is_empty() {
        return Err("\"domains\" must contain at least one entry".to_string());
    }
    file.domains
        .into_iter()
        .map(|d| {
            DomainSpec::new(d.label.clone(), d.baseline, d.q).map_err(|e| match e {
                // already names the offending domain
                e @ Error::CapacityExceedsBaseline { .. } => e.to_string(),
                e => format!("domain `{}`: {e}", d.label),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::parse_domains;

    #[test]
    fn well_formed_file_loads_in_order() {
        let doc = r#"{"domains": [
            {"label": "benzoid", "N": 6, "q": 1},
            {"label": "nitro", "N": 8, "q": 2}
        ]}"#;
        let domains = parse_domains(doc).unwrap();
        assert_eq!(domains.len(), 2);
        assert_eq!(domains[0].label(), "benzoid");
        assert_eq!(domains[0].electrons(), 6);
        assert_eq!(domains[1].capacity(), 2);
    }

    #[test]
    fn unknown_field_is_rejected_by_name() {
        let doc = r#"{"domains": [{"label": "x", "N": 6, "q": 1, "capcity": 2}]}"#;
        let err = parse_domains(doc).unwrap_err();
        assert!(err.contains("capcity"), "{err}");
    }

    #[test]
    fn missing_field_names_the_field_and_location() {
        let doc = r#"{"domains": [{"label": "x", "N": 6}]}"#;
        let err = parse_domains(doc).unwrap_err();
        assert!(err.contains('q'), "{err}");
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn syntax_error_reports_line_and_column() {
        let err = parse_domains("{\"domains\": [\n  {\"label\": }\n]}").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn semantic_violations_name_the_domain() {
        let zero_q = r#"{"domains": [{"label": "hole", "N": 4, "q": 0}]}"#;
        assert!(parse_domains(zero_q).unwrap_err().contains("hole"));

        let shallow = r#"{"domains": [{"label": "thin", "N": 1, "q": 3}]}"#;
        let err = parse_domains(shallow).unwrap_err();
        assert!(err.contains("thin"), "{err}");
    }

    #[test]
    fn empty_domain_list_is_rejected() {
        assert!(parse_domains(r#"{"domains": []}"#).is_err());
    }
}
