//! The bundled transcription of the A_3 appendix polynomials.

use anyhow::{Context, Result};
use gegenlab::{KappaRational, Weight, ZPolynomial};

use crate::json::{from_doc, PolyDoc};

const APPENDIX_A3: &str = include_str!("../data/appendix_a3.json");

#[derive(Clone, Debug)]
pub struct GoldenSet {
    pub rank: usize,
    pub entries: Vec<(Weight, ZPolynomial<KappaRational>)>,
}

impl GoldenSet {
    pub fn appendix_a3() -> Result<Self> {
        Self::parse(APPENDIX_A3)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let docs: Vec<PolyDoc> = serde_json::from_str(text).context("golden data is not valid JSON")?;
        let entries = docs.iter().map(from_doc).collect::<Result<Vec<_>>>()?;
        let rank = entries.first().map(|(w, _)| w.rank()).unwrap_or(0);
        for (i, (w, _)) in entries.iter().enumerate() {
            anyhow::ensure!(w.rank() == rank, "entry {w} has a different rank");
            anyhow::ensure!(entries[..i].iter().all(|(v, _)| v != w), "duplicate entry {w}");
        }
        Ok(GoldenSet { rank, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nineteen_entries() {
        let g = GoldenSet::appendix_a3().unwrap();
        assert_eq!(g.rank, 3);
        assert_eq!(g.entries.len(), 19);
    }
}
