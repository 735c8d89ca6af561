use serde::{Deserialize, Serialize};

/// Names the typical module `V(a1, a2)`; `a2` is the formal variable `x_var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypicalColor {
    pub a1: u32,
    pub var: u16,
}

impl TypicalColor {
    pub fn new(a1: u32, var: u16) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        TypicalColor { a1, var }
    }

    pub fn dim(&self) -> usize {
        4 * self.a1 as usize + 4
    }
}

/// The four sl(2) blocks of a typical module, in basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// `v_{0,0}`
    B00,
    /// `v_{-1,1}`
    Bm11,
    /// `v_{1,0}`
    B10,
    /// `v_{0,1}`
    B01,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::B00, Block::Bm11, Block::B10, Block::B01];

    pub fn epsilon(self) -> (i32, i32) {
        match self {
            Block::B00 => (0, 0),
            Block::Bm11 => (-1, 1),
            Block::B10 => (1, 0),
            Block::B01 => (0, 1),
        }
    }

    pub fn parity(self) -> u8 {
        match self {
            Block::B00 | Block::B01 => 0,
            Block::Bm11 | Block::B10 => 1,
        }
    }

    pub fn len(self, a1: u32) -> usize {
        let a = a1 as usize;
        match self {
            Block::B00 | Block::B01 => a + 1,
            Block::Bm11 => a,
            Block::B10 => a + 2,
        }
    }

    pub fn offset(self, a1: u32) -> usize {
        let a = a1 as usize;
        match self {
            Block::B00 => 0,
            Block::Bm11 => a + 1,
            Block::B10 => 2 * a + 1,
            Block::B01 => 3 * a + 3,
        }
    }
}

/// Basis vector `F1^k v_block`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub block: Block,
    pub k: usize,
}

impl BasisIndex {
    pub fn flat(self, a1: u32) -> usize {
        debug_assert!(self.k < self.block.len(a1));
        self.block.offset(a1) + self.k
    }

    pub fn from_flat(a1: u32, l: usize) -> Option<BasisIndex> {
        Block::ALL.into_iter().find_map(|b| {
            let off = b.offset(a1);
            (l >= off && l < off + b.len(a1)).then_some(BasisIndex { block: b, k: l - off })
        })
    }

    pub fn parity(self) -> u8 {
        self.block.parity()
    }

    /// `(h1, h2 - a2)` weight.
    pub fn weight(self, a1: u32) -> (i32, i32) {
        let (a, k) = (a1 as i32, self.k as i32);
        let (e1, e2) = self.block.epsilon();
        (a + e1 - 2 * k, e2 + k)
    }
}

/// Per-basis-vector weights: `h1` exactly and `h2` as its offset from `a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub h1: Vec<i32>,
    pub h2_offset: Vec<i32>,
}

impl WeightTable {
    pub fn new(a1: u32) -> Self {
        let dim = 4 * a1 as usize + 4;
        let (h1, h2_offset) = (0..dim)
            .map(|l| BasisIndex::from_flat(a1, l).unwrap().weight(a1))
            .unzip();
        WeightTable { h1, h2_offset }
    }
}

pub fn parity_vector(a1: u32) -> Vec<u8> {
    Block::ALL
        .into_iter()
        .flat_map(|b| std::iter::repeat(b.parity()).take(b.len(a1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_and_parities() {
        for a1 in 0..4 {
            let par = parity_vector(a1);
            assert_eq!(par.len(), 4 * a1 as usize + 4);
            for l in 0..par.len() {
                let b = BasisIndex::from_flat(a1, l).unwrap();
                assert_eq!(b.flat(a1), l);
                assert_eq!(b.parity(), par[l]);
            }
        }
        assert_eq!(Block::B01.offset(2), 9);
    }

    #[test]
    fn weights_for_a1_zero() {
        let w = WeightTable::new(0);
        assert_eq!(w.h1, vec![0, 1, -1, 0]);
        assert_eq!(w.h2_offset, vec![0, 0, 1, 1]);
    }

    #[test]
    fn documented_weights() {
        let a1 = 3;
        let m = BasisIndex { block: Block::Bm11, k: 1 };
        assert_eq!(m.weight(a1).0, a1 as i32 - 2 - 1);
        let v = BasisIndex { block: Block::B01, k: 2 };
        assert_eq!(v.weight(a1).1, 2 + 1);
    }
}
