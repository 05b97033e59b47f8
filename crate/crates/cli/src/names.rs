//! Pulse names accepted on the command line and dispatch to the builders.

use std::fmt;
use std::str::FromStr;

use cpulse_core::{
    bb1, corpse, elementary, full_rotation, named_cccp, reduced_cinbb, reduced_cinsk,
    reduced_skinsc, scrofulous, short_corpse, sk1, trivial_pair, trivial_triple, CccpName,
    CorpseWindings, Error, PulseSequence, Result, RotationParams,
};

/// Every sequence the CLI can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PulseName {
    Elementary,
    Bb1,
    Scrofulous,
    Sk1,
    Corpse,
    ShortCorpse,
    CinS,
    CinSk,
    SkInSc,
    CinBb,
    BbInSc,
    ReducedCinSk,
    ReducedCinBb,
    ReducedSkInSc,
    TrivialPair,
    FullRotation,
    TrivialTriple,
}

impl PulseName {
    /// The rows of the time-cost table, in its conventional order.
    pub const TABLE_ORDER: [PulseName; 14] = [
        PulseName::Elementary,
        PulseName::Scrofulous,
        PulseName::Sk1,
        PulseName::Bb1,
        PulseName::ShortCorpse,
        PulseName::Corpse,
        PulseName::CinS,
        PulseName::CinSk,
        PulseName::CinBb,
        PulseName::SkInSc,
        PulseName::BbInSc,
        PulseName::ReducedCinSk,
        PulseName::ReducedCinBb,
        PulseName::ReducedSkInSc,
    ];

    /// The name as accepted on the command line.
    pub fn cli_name(&self) -> &'static str {
        match self {
            PulseName::Elementary => "elementary",
            PulseName::Bb1 => "bb1",
            PulseName::Scrofulous => "scrofulous",
            PulseName::Sk1 => "sk1",
            PulseName::Corpse => "corpse",
            PulseName::ShortCorpse => "short-corpse",
            PulseName::CinS => "cins",
            PulseName::CinSk => "cinsk",
            PulseName::SkInSc => "skinsc",
            PulseName::CinBb => "cinbb",
            PulseName::BbInSc => "bbinsc",
            PulseName::ReducedCinSk => "reduced-cinsk",
            PulseName::ReducedCinBb => "reduced-cinbb",
            PulseName::ReducedSkInSc => "reduced-skinsc",
            PulseName::TrivialPair => "trivial-pair",
            PulseName::FullRotation => "full-rotation",
            PulseName::TrivialTriple => "trivial-triple",
        }
    }

    /// Human-facing name used in tables and reports.
    pub fn display_name(&self) -> &'static str {
        match self {
            PulseName::Elementary => "elementary",
            PulseName::Bb1 => "BB1",
            PulseName::Scrofulous => "SCROFULOUS",
            PulseName::Sk1 => "SK1",
            PulseName::Corpse => "CORPSE",
            PulseName::ShortCorpse => "short CORPSE",
            PulseName::CinS => "CinS",
            PulseName::CinSk => "CinSK",
            PulseName::SkInSc => "SKinsC",
            PulseName::CinBb => "CinBB",
            PulseName::BbInSc => "BBinsC",
            PulseName::ReducedCinSk => "reduced CinSK",
            PulseName::ReducedCinBb => "reduced CinBB",
            PulseName::ReducedSkInSc => "reduced SKinsC",
            PulseName::TrivialPair => "trivial pair",
            PulseName::FullRotation => "full rotation",
            PulseName::TrivialTriple => "trivial triple",
        }
    }
}

impl fmt::Display for PulseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_name())
    }
}

impl FromStr for PulseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "elementary" => Ok(PulseName::Elementary),
            "bb1" => Ok(PulseName::Bb1),
            "scrofulous" => Ok(PulseName::Scrofulous),
            "sk1" => Ok(PulseName::Sk1),
            "corpse" => Ok(PulseName::Corpse),
            "short-corpse" => Ok(PulseName::ShortCorpse),
            "cins" => Ok(PulseName::CinS),
            "cinsk" => Ok(PulseName::CinSk),
            "skinsc" => Ok(PulseName::SkInSc),
            "cinbb" => Ok(PulseName::CinBb),
            "bbinsc" => Ok(PulseName::BbInSc),
            "reduced-cinsk" => Ok(PulseName::ReducedCinSk),
            "reduced-cinbb" => Ok(PulseName::ReducedCinBb),
            "reduced-skinsc" => Ok(PulseName::ReducedSkInSc),
            "trivial-pair" => Ok(PulseName::TrivialPair),
            "full-rotation" => Ok(PulseName::FullRotation),
            "trivial-triple" => Ok(PulseName::TrivialTriple),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Build the named sequence for a target `(θ, φ)`.
///
/// `phi_prime` only matters for the trivial triple and defaults to `phi`;
/// the full rotation ignores `theta` (its only parameter is the axis).
pub fn build(
    name: PulseName,
    theta: f64,
    phi: f64,
    phi_prime: Option<f64>,
) -> Result<PulseSequence> {
    let target = RotationParams::new(theta, phi)?;
    match name {
        PulseName::Elementary => Ok(elementary(target)),
        PulseName::Bb1 => bb1(target),
        PulseName::Scrofulous => scrofulous(target),
        PulseName::Sk1 => sk1(target),
        PulseName::Corpse => corpse(target, CorpseWindings::standard()),
        PulseName::ShortCorpse => short_corpse(target),
        PulseName::CinS => named_cccp(CccpName::CinS, target),
        PulseName::CinSk => named_cccp(CccpName::CinSk, target),
        PulseName::SkInSc => named_cccp(CccpName::SkInSc, target),
        PulseName::CinBb => named_cccp(CccpName::CinBb, target),
        PulseName::BbInSc => named_cccp(CccpName::BbInSc, target),
        PulseName::ReducedCinSk => reduced_cinsk(target),
        PulseName::ReducedCinBb => reduced_cinbb(target),
        PulseName::ReducedSkInSc => reduced_skinsc(target),
        PulseName::TrivialPair => trivial_pair(theta, phi),
        PulseName::FullRotation => full_rotation(phi),
        PulseName::TrivialTriple => trivial_triple(phi_prime.unwrap_or(phi), phi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cli_names_round_trip() {
        let all = [
            PulseName::Elementary,
            PulseName::Bb1,
            PulseName::Scrofulous,
            PulseName::Sk1,
            PulseName::Corpse,
            PulseName::ShortCorpse,
            PulseName::CinS,
            PulseName::CinSk,
            PulseName::SkInSc,
            PulseName::CinBb,
            PulseName::BbInSc,
            PulseName::ReducedCinSk,
            PulseName::ReducedCinBb,
            PulseName::ReducedSkInSc,
            PulseName::TrivialPair,
            PulseName::FullRotation,
            PulseName::TrivialTriple,
        ];
        for name in all {
            assert_eq!(name.cli_name().parse::<PulseName>().unwrap(), name);
        }
        assert!("knill".parse::<PulseName>().is_err());
    }

    #[test]
    fn build_dispatch_reaches_every_builder() {
        for name in PulseName::TABLE_ORDER {
            let seq = build(name, PI, 0.0, None).unwrap();
            assert!(!seq.is_empty(), "{name}");
        }
        assert_eq!(
            build(PulseName::TrivialPair, 1.0, 0.0, None).unwrap().len(),
            2
        );
        assert_eq!(
            build(PulseName::FullRotation, 0.0, 0.3, None)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            build(PulseName::TrivialTriple, 0.0, 0.3, Some(0.8))
                .unwrap()
                .len(),
            3
        );
    }
}
