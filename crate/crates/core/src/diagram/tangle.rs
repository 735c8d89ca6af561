use super::braid::{components, BraidWord};
use crate::exec::Execution;
use crate::ribbon::RibbonData;
use crate::superalg::TypicalColor;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error("link has {expected} components but {got} colors were given")]
    ColorCount { expected: usize, got: usize },
    #[error("components {0} and {1} share the formal variable x{2}")]
    SharedVariable(usize, usize, u16),
    #[error("no component {0}")]
    NoComponent(usize),
    #[error("component {0} has no strand {1}")]
    NoStrand(usize, usize),
}

/// Braid closure with one typical color per closure component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLink {
    pub braid: BraidWord,
    pub colors: Vec<TypicalColor>,
}

impl ColoredLink {
    /// Ribbon data for this link's colors; braidings are built only when the
    /// word has crossings.
    pub fn ribbon_data(&self, exec: Execution) -> RibbonData {
        if self.braid.letters.is_empty() {
            RibbonData::without_crossings(&self.colors, exec)
        } else {
            RibbonData::new(&self.colors, exec)
        }
    }

    pub fn new(braid: BraidWord, colors: Vec<TypicalColor>) -> Result<Self, LinkError> {
        let n = components(&braid).len();
        if colors.len() != n {
            return Err(LinkError::ColorCount {
                expected: n,
                got: colors.len(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if colors[i].var == colors[j].var {
                    return Err(LinkError::SharedVariable(i, j, colors[i].var));
                }
            }
        }
        Ok(ColoredLink { braid, colors })
    }

    /// Colors with component `i` on variable `x_{i+1}`, all with the same `a1`.
    pub fn uniform(braid: BraidWord, a1: u32) -> Self {
        let n = components(&braid).len();
        let colors = (0..n).map(|i| TypicalColor::new(a1, i as u16 + 1)).collect();
        ColoredLink { braid, colors }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.braid)
    }

    /// Component index of each bottom position.
    pub fn component_of_position(&self) -> Vec<usize> {
        let mut out = vec![0; self.braid.strands];
        for (c, strands) in self.components().iter().enumerate() {
            for &s in strands {
                out[s] = c;
            }
        }
        out
    }
}

/// One Morse event acting on the register.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slice {
    Id,
    /// `coev_r : 1 -> V (x) V*` inserted at `pos`.
    Cup { pos: usize, color: TypicalColor },
    /// Braiding of the up strands at `pos`, `pos + 1`.
    Crossing { pos: usize, positive: bool },
    /// `ev_l : V (x) V* -> 1` removing `pos`, `pos + 1`.
    Cap { pos: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub color: TypicalColor,
    pub dual: bool,
}

/// A (1,1)-tangle as a bottom-to-top list of slices with one open strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedTangle {
    pub input: TypicalColor,
    pub slices: Vec<Slice>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("slice {index} does not type-check against the register")]
pub struct SliceTypeError {
    pub index: usize,
}

impl SlicedTangle {
    /// Registers before the first slice and after each slice.
    pub fn registers(&self) -> Result<Vec<Vec<Factor>>, SliceTypeError> {
        let mut reg = vec![Factor {
            color: self.input,
            dual: false,
        }];
        let mut out = vec![reg.clone()];
        for (index, s) in self.slices.iter().enumerate() {
            match *s {
                Slice::Id => {}
                Slice::Cup { pos, color } => {
                    if pos > reg.len() {
                        return Err(SliceTypeError { index });
                    }
                    reg.insert(pos, Factor { color, dual: true });
                    reg.insert(pos, Factor { color, dual: false });
                }
                Slice::Crossing { pos, .. } => {
                    if pos + 1 >= reg.len() || reg[pos].dual || reg[pos + 1].dual {
                        return Err(SliceTypeError { index });
                    }
                    reg.swap(pos, pos + 1);
                }
                Slice::Cap { pos } => {
                    if pos + 1 >= reg.len()
                        || reg[pos].dual
                        || !reg[pos + 1].dual
                        || reg[pos].color != reg[pos + 1].color
                    {
                        return Err(SliceTypeError { index });
                    }
                    reg.drain(pos..pos + 2);
                }
            }
            out.push(reg.clone());
        }
        if reg.len() != 1 || reg[0].dual || reg[0].color != self.input {
            return Err(SliceTypeError {
                index: self.slices.len(),
            });
        }
        Ok(out)
    }

    pub fn max_width(&self) -> usize {
        self.registers()
            .map(|r| r.iter().map(Vec::len).max().unwrap_or(1))
            .unwrap_or(0)
    }
}

/// Closes the braid with return arcs on the right and opens the chosen
/// strand of component `cut` at the top.
///
/// The braid is first conjugated by `s_1 s_2 ... s_p` so the opened strand
/// starts at the leftmost position; conjugation preserves the closure.
pub fn close_and_cut(
    link: &ColoredLink,
    cut: usize,
    strand: usize,
) -> Result<SlicedTangle, LinkError> {
    let comps = link.components();
    let comp = comps.get(cut).ok_or(LinkError::NoComponent(cut))?;
    let p = *comp.get(strand).ok_or(LinkError::NoStrand(cut, strand))?;
    let n = link.braid.strands;

    let mut letters: Vec<i32> = (1..=p as i32).collect();
    letters.extend_from_slice(&link.braid.letters);
    letters.extend((1..=p as i32).rev().map(|l| -l));

    let delta = BraidWord {
        strands: n,
        letters: (1..=p as i32).collect(),
    };
    let pi_delta = delta.permutation();
    let comp_of = link.component_of_position();
    let bottom_color = |j: usize| link.colors[comp_of[pi_delta[j]]];

    let mut slices = Vec::new();
    for k in 1..n {
        slices.push(Slice::Cup {
            pos: k,
            color: bottom_color(k),
        });
    }
    for l in letters {
        slices.push(Slice::Crossing {
            pos: l.unsigned_abs() as usize - 1,
            positive: l > 0,
        });
    }
    for k in (1..n).rev() {
        slices.push(Slice::Cap { pos: k });
    }
    if slices.is_empty() {
        slices.push(Slice::Id);
    }
    Ok(SlicedTangle {
        input: bottom_color(0),
        slices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    fn link(s: &str, a1: u32) -> ColoredLink {
        ColoredLink::uniform(parse_braid(s).unwrap(), a1)
    }

    #[test]
    fn unknot_is_identity() {
        let t = close_and_cut(&link("1:", 0), 0, 0).unwrap();
        assert_eq!(t.slices, vec![Slice::Id]);
    }

    #[test]
    fn kink_has_one_of_each() {
        let t = close_and_cut(&link("2: s1", 0), 0, 0).unwrap();
        assert_eq!(t.slices.len(), 3);
        assert!(t.registers().is_ok());
    }

    #[test]
    fn trefoil_width() {
        let t = close_and_cut(&link("2: s1 s1 s1", 1), 0, 1).unwrap();
        assert!(t.registers().is_ok());
        assert_eq!(t.max_width(), 3);
    }

    #[test]
    fn colors_follow_components() {
        let l = ColoredLink::new(
            parse_braid("2: s1 s1").unwrap(),
            vec![TypicalColor::new(0, 1), TypicalColor::new(1, 2)],
        )
        .unwrap();
        for cut in 0..2 {
            let t = close_and_cut(&l, cut, 0).unwrap();
            assert_eq!(t.input, l.colors[cut]);
            assert!(t.registers().is_ok());
        }
        assert!(ColoredLink::new(
            parse_braid("2: s1 s1").unwrap(),
            vec![TypicalColor::new(0, 1), TypicalColor::new(1, 1)]
        )
        .is_err());
    }
}
