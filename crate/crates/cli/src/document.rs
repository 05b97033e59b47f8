//! The on-disk sequence document: a self-describing JSON record of a built
//! pulse sequence, carrying the builder name and parameters it came from.
//!
//! Angles are serialized in radians as JSON numbers; the shortest
//! round-trip decimal representation is used, so parsing a document back
//! reproduces every angle bit for bit.

use serde::{Deserialize, Serialize};

use cpulse_core::{PulseSequence, Result, RotationParams};

/// One `(θ, φ)` record, radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleRecord {
    pub theta_rad: f64,
    pub phi_rad: f64,
}

impl From<RotationParams> for AngleRecord {
    fn from(p: RotationParams) -> Self {
        Self {
            theta_rad: p.theta(),
            phi_rad: p.phi(),
        }
    }
}

/// Builder provenance: which command produced the document and with which
/// parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub builder: String,
    pub theta_rad: f64,
    pub phi_rad: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_prime_rad: Option<f64>,
}

/// A pulse sequence as written to disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceDocument {
    pub label: String,
    pub target: AngleRecord,
    pub pulses: Vec<AngleRecord>,
    pub provenance: Provenance,
}

impl SequenceDocument {
    pub fn from_sequence(seq: &PulseSequence, provenance: Provenance) -> Self {
        Self {
            label: seq.label().to_string(),
            target: seq.target().into(),
            pulses: seq.pulses().iter().map(|p| AngleRecord::from(*p)).collect(),
            provenance,
        }
    }

    /// Rebuild the in-memory sequence this document describes.
    pub fn to_sequence(&self) -> Result<PulseSequence> {
        let target = RotationParams::new(self.target.theta_rad, self.target.phi_rad)?;
        let pulses = self
            .pulses
            .iter()
            .map(|p| RotationParams::new(p.theta_rad, p.phi_rad))
            .collect::<Result<Vec<_>>>()?;
        Ok(PulseSequence::new(self.label.clone(), target, pulses))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cpulse_core::corpse;
    use cpulse_core::CorpseWindings;
    use std::f64::consts::PI;

    #[test]
    fn round_trip_is_lossless() {
        let seq = corpse(
            RotationParams::new(PI, 0.12345678901234567).unwrap(),
            CorpseWindings::standard(),
        )
        .unwrap();
        let doc = SequenceDocument::from_sequence(
            &seq,
            Provenance {
                builder: "corpse".to_string(),
                theta_rad: PI,
                phi_rad: 0.12345678901234567,
                phi_prime_rad: None,
            },
        );
        let parsed = SequenceDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        // Bit-exact: every reparsed angle equals the original f64.
        for (a, b) in parsed.pulses.iter().zip(doc.pulses.iter()) {
            assert_eq!(a.theta_rad.to_bits(), b.theta_rad.to_bits());
            assert_eq!(a.phi_rad.to_bits(), b.phi_rad.to_bits());
        }
        let rebuilt = parsed.to_sequence().unwrap();
        assert_eq!(rebuilt.pulses(), seq.pulses());
    }
}
