//! Campaign outcome records and the JSONL / CSV report streams.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::hypergraph::Hypergraph;

fn fnv1a(data: &[u64]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &x in data {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

/// One campaign outcome. `margin` is the slack of the instance's check:
/// nonnegative iff the instance passes. Wall time is kept out of the
/// serialized body so reports are byte-reproducible; it travels in the
/// trailer record instead.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub campaign: String,
    pub instance: String,
    pub r: usize,
    pub n: usize,
    pub m: usize,
    pub lambda: f64,
    pub reference: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_order: Option<usize>,
    pub pass: bool,
    pub tol: f64,
    pub margin: f64,
    #[serde(skip)]
    pub wall_ms: f64,
}

impl VerificationRecord {
    /// Compact instance descriptor from the graph's colex signature.
    pub fn describe(g: &Hypergraph) -> String {
        format!(
            "r={} n={} m={} sig={:016x}",
            g.r(),
            g.n(),
            g.edge_count(),
            fnv1a(&g.colex_signature())
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub campaign: String,
    pub instances: usize,
    pub passes: usize,
    pub fails: usize,
    pub worst_margin: f64,
    pub seed: u64,
}

/// A finished campaign: optional header note, the record stream, and a
/// summary. Total wall time is emitted only in the trailer.
#[derive(Debug, Clone)]
pub struct Campaign {
    pub note: Option<String>,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
    pub wall_ms: f64,
}

impl Campaign {
    pub fn assemble(
        name: &str,
        note: Option<String>,
        records: Vec<VerificationRecord>,
        seed: u64,
        wall_ms: f64,
    ) -> Campaign {
        let passes = records.iter().filter(|r| r.pass).count();
        let worst_margin = records
            .iter()
            .map(|r| r.margin)
            .fold(f64::INFINITY, f64::min);
        let summary = Summary {
            campaign: name.to_string(),
            instances: records.len(),
            passes,
            fails: records.len() - passes,
            worst_margin: if records.is_empty() { 0.0 } else { worst_margin },
            seed,
        };
        Campaign {
            note,
            records,
            summary,
            wall_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fails == 0
    }

    /// JSONL body: header note (when present), one record per line, the
    /// summary record, then a timing trailer.
    pub fn write_jsonl<W: Write + ?Sized>(&self, w: &mut W) -> Result<()> {
        if let Some(note) = &self.note {
            let header = serde_json::json!({
                "campaign": self.summary.campaign,
                "note": note,
            });
            writeln!(w, "{header}")?;
        }
        for rec in &self.records {
            writeln!(w, "{}", serde_json::to_string(rec)?)?;
        }
        writeln!(w, "{}", serde_json::to_string(&self.summary)?)?;
        let trailer = serde_json::json!({
            "trailer": "timing",
            "campaign": self.summary.campaign,
            "total_wall_ms": self.wall_ms,
        });
        writeln!(w, "{trailer}")?;
        Ok(())
    }

    /// CSV body with the same fields as the JSONL records.
    pub fn write_csv<W: Write + ?Sized>(&self, w: &mut W) -> Result<()> {
        writeln!(
            w,
            "campaign,instance,r,n,m,lambda,reference,clique_order,pass,tol,margin"
        )?;
        for rec in &self.records {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{},{}",
                rec.campaign,
                rec.instance,
                rec.r,
                rec.n,
                rec.m,
                rec.lambda,
                rec.reference,
                rec.clique_order.map_or(String::new(), |c| c.to_string()),
                rec.pass,
                rec.tol,
                rec.margin
            )?;
        }
        writeln!(
            w,
            "# summary,{},{},{},{},{},{}",
            self.summary.campaign,
            self.summary.instances,
            self.summary.passes,
            self.summary.fails,
            self.summary.worst_margin,
            self.summary.seed
        )?;
        Ok(())
    }
}
