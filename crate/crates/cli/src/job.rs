use std::ops::RangeInclusive;

use serde::Serialize;
use sl21::diagram::{components, parse_braid, BraidWord, ColoredLink};
use sl21::superalg::TypicalColor;

use crate::CliError;

/// Color of one component: a fixed `a1` or a sweep range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ColorSpec {
    Fixed(u32),
    Range { lo: u32, hi: u32 },
}

impl ColorSpec {
    pub fn range(&self) -> RangeInclusive<u32> {
        match *self {
            ColorSpec::Fixed(a) => a..=a,
            ColorSpec::Range { lo, hi } => lo..=hi,
        }
    }

    pub fn is_range(&self) -> bool {
        matches!(self, ColorSpec::Range { .. })
    }
}

/// Parses `a1=<int>` or `a1=<lo>..<hi>`.
pub fn parse_color(text: &str) -> Result<ColorSpec, CliError> {
    let bad = || CliError::Usage(format!("bad color `{text}`; expected a1=<int> or a1=<lo>..<hi>"));
    let v = text.trim().strip_prefix("a1=").ok_or_else(bad)?;
    match v.split_once("..") {
        Some((lo, hi)) => {
            let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(CliError::Usage(format!("empty range `{text}`")));
            }
            Ok(ColorSpec::Range { lo, hi })
        }
        None => Ok(ColorSpec::Fixed(v.trim().parse().map_err(|_| bad())?)),
    }
}

/// A parsed braid with one color spec per component. Component `c` uses
/// the variable `x_{c+1}`.
#[derive(Clone, Debug, Serialize)]
pub struct JobSpec {
    pub braid: String,
    pub colors: Vec<ColorSpec>,
    pub cut: usize,
    pub strand: usize,
    pub seed: u64,
    #[serde(skip)]
    pub word: BraidWord,
}

impl JobSpec {
    /// A single color spec applies to every component; otherwise one per
    /// component is required. Components sharing a range sweep together.
    pub fn new(braid: &str, colors: &[String], cut: usize, strand: usize, seed: u64) -> Result<Self, CliError> {
        let word = parse_braid(braid).map_err(|e| CliError::Usage(format!("braid: {e}")))?;
        let ncomp = components(&word).len();
        let mut specs = colors.iter().map(|c| parse_color(c)).collect::<Result<Vec<_>, _>>()?;
        if specs.is_empty() {
            return Err(CliError::Usage("missing --colors".into()));
        }
        if specs.len() == 1 {
            specs = vec![specs[0].clone(); ncomp];
        }
        if specs.len() != ncomp {
            return Err(CliError::Usage(format!(
                "braid closes to {ncomp} components but {} colors were given",
                specs.len()
            )));
        }
        let ranges: Vec<&ColorSpec> = specs.iter().filter(|s| s.is_range()).collect();
        if ranges.windows(2).any(|w| w[0] != w[1]) {
            return Err(CliError::Usage("all swept components must share one range".into()));
        }
        if cut >= ncomp {
            return Err(CliError::Usage(format!("cut component {cut} out of range (0..{ncomp})")));
        }
        Ok(JobSpec {
            braid: braid.to_string(),
            colors: specs,
            cut,
            strand,
            seed,
            word,
        })
    }

    pub fn components(&self) -> usize {
        self.colors.len()
    }

    /// The swept range, if any component carries one.
    pub fn sweep_range(&self) -> Option<RangeInclusive<u32>> {
        self.colors.iter().find(|c| c.is_range()).map(|c| c.range())
    }

    /// The link with swept components set to `a1`.
    pub fn link_at(&self, a1: Option<u32>) -> ColoredLink {
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(c, s)| {
                let v = match (s, a1) {
                    (ColorSpec::Fixed(v), _) => *v,
                    (ColorSpec::Range { lo, .. }, None) => *lo,
                    (ColorSpec::Range { .. }, Some(a)) => a,
                };
                TypicalColor::new(v, c as u16 + 1)
            })
            .collect();
        ColoredLink::new(self.word.clone(), colors).expect("validated color count")
    }

    /// Register width of the cut tangle: `2n - 1` factors for `n` strands.
    pub fn register_width(&self) -> usize {
        2 * self.word.strands - 1
    }
}
