//! Plain-text extraction reports: parameters, stage log, outcome and, on
//! success, the certificate.

use halin_core::extract::{Built, ExtractionReport};

use crate::certificate::write_certificate;

pub fn write_report(report: &ExtractionReport, family: &str) -> String {
    let p = &report.params;
    let mut out = format!(
        "family {family}\nroot {}\nparams k={} r={} R={} t={} cols={} depth={}\n",
        p.root, p.k, p.r, p.radius, p.t, p.spec.cols, p.spec.depth
    );
    match report.case_taken {
        Some(case) => out.push_str(&format!("case {case}\n")),
        None => out.push_str("case none\n"),
    }
    for line in &report.log {
        out.push_str(&format!("log {line}\n"));
    }
    match &report.outcome {
        Built::Success(emb) => {
            out.push_str("outcome success\ncertificate\n");
            out.push_str(&write_certificate(emb));
        }
        Built::Insufficient { stage, diagnostic } => {
            out.push_str(&format!("outcome insufficient at {stage}: {diagnostic}\n"));
        }
    }
    out
}
