use std::fmt;

/// Braid word on `strands` strands; letter `+i` is `s_i`, `-i` is `s_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("braid parse error at byte {pos}: {msg}")]
pub struct BraidParseError {
    pub pos: usize,
    pub msg: String,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidParseError> {
        if strands == 0 {
            return Err(BraidParseError {
                pos: 0,
                msg: "strand count must be positive".into(),
            });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidParseError {
                    pos: 0,
                    msg: format!("generator index {} out of range for {strands} strands", l.abs()),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Permutation `pi` with the strand starting at bottom position `b`
    /// ending at top position `pi[b]` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        // at_pos[p] = bottom index of the strand currently at position p
        let mut at_pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at_pos.swap(i, i + 1);
        }
        let mut pi = vec![0; self.strands];
        for (p, &b) in at_pos.iter().enumerate() {
            pi[b] = p;
        }
        pi
    }

    /// Signed crossings as `(sign, strand_left, strand_right)` with strands
    /// named by their bottom position.
    pub fn crossings(&self) -> Vec<(i32, usize, usize)> {
        let mut at_pos: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            out.push((l.signum(), at_pos[i], at_pos[i + 1]));
            at_pos.swap(i, i + 1);
        }
        out
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for &l in &self.letters {
            if l > 0 {
                write!(f, " s{l}")?;
            } else {
                write!(f, " S{}", -l)?;
            }
        }
        Ok(())
    }
}

/// Parses `n: s1 S2 ...` (`S` is the inverse generator).
pub fn parse_braid(text: &str) -> Result<BraidWord, BraidParseError> {
    let colon = text.find(':').ok_or_else(|| BraidParseError {
        pos: text.len(),
        msg: "expected `<strands>:`".into(),
    })?;
    let head = text[..colon].trim();
    let strands: usize = head.parse().map_err(|_| BraidParseError {
        pos: 0,
        msg: format!("bad strand count `{head}`"),
    })?;
    if strands == 0 {
        return Err(BraidParseError {
            pos: 0,
            msg: "strand count must be positive".into(),
        });
    }
    let mut letters = Vec::new();
    let body = &text[colon + 1..];
    let mut offset = colon + 1;
    for tok in body.split_inclusive(char::is_whitespace) {
        let pos = offset;
        offset += tok.len();
        let t = tok.trim();
        if t.is_empty() {
            continue;
        }
        let sign = match t.as_bytes()[0] {
            b's' => 1,
            b'S' => -1,
            _ => {
                return Err(BraidParseError {
                    pos,
                    msg: format!("unknown token `{t}`"),
                })
            }
        };
        let idx: usize = t[1..].parse().map_err(|_| BraidParseError {
            pos,
            msg: format!("unknown token `{t}`"),
        })?;
        if idx == 0 || idx >= strands {
            return Err(BraidParseError {
                pos,
                msg: format!("generator index {idx} out of range for {strands} strands"),
            });
        }
        letters.push(sign * idx as i32);
    }
    Ok(BraidWord { strands, letters })
}

/// Closure components as lists of bottom positions, ordered by their
/// smallest position.
pub fn components(braid: &BraidWord) -> Vec<Vec<usize>> {
    let pi = braid.permutation();
    let mut seen = vec![false; braid.strands];
    let mut out = Vec::new();
    for s in 0..braid.strands {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut b = s;
        while !seen[b] {
            seen[b] = true;
            cyc.push(b);
            b = pi[b];
        }
        out.push(cyc);
    }
    out
}
