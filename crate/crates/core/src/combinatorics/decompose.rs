//! Durfee-square block decomposition of a colored partition.
//!
//! With `N` the Durfee side: Block I is the `N x N` square, Block II is what
//! lies to the right of it in the first `N` rows (rows may be empty, and an
//! empty row keeps the color and overline of its part), Block III is the run
//! of parts of size exactly `N` below the square, and Block IV is the rest.

use serde::Serialize;

use super::{ColoredPart, ColoredPartition, PartitionError};

/// A row of Block II: `length = part size - N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Block2Row {
    pub length: u32,
    pub color: u32,
    pub overlined: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    pub durfee: u32,
    pub block2: Vec<Block2Row>,
    pub block3: Vec<ColoredPart>,
    pub block4: ColoredPartition,
}

impl BlockDecomposition {
    pub fn block1_weight(&self) -> u32 {
        self.durfee * self.durfee
    }

    pub fn block2_weight(&self) -> u32 {
        self.block2.iter().map(|r| r.length).sum()
    }

    pub fn block3_weight(&self) -> u32 {
        self.durfee * self.block3.len() as u32
    }

    pub fn block4_weight(&self) -> u32 {
        self.block4.weight()
    }

    pub fn weight(&self) -> u32 {
        self.block1_weight() + self.block2_weight() + self.block3_weight() + self.block4_weight()
    }
}

/// `max { k : at least k parts have size >= k }`.
pub fn durfee_size(p: &ColoredPartition) -> u32 {
    p.parts().iter().enumerate().take_while(|(i, part)| part.size as usize > *i).count() as u32
}

pub fn durfee_decompose(p: &ColoredPartition) -> Result<BlockDecomposition, PartitionError> {
    if p.is_empty() {
        return Err(PartitionError::Empty);
    }
    let n = durfee_size(p);
    let parts = p.parts();
    let (top, below) = parts.split_at(n as usize);
    let block2 = top.iter().map(|q| Block2Row { length: q.size - n, color: q.color, overlined: q.overlined }).collect();
    let split = below.iter().take_while(|q| q.size == n).count();
    let (b3, b4) = below.split_at(split);
    Ok(BlockDecomposition {
        durfee: n,
        block2,
        block3: b3.to_vec(),
        block4: ColoredPartition::from_sorted_unchecked(p.kind(), b4.to_vec()),
    })
}

/// Reassembles the partition; rejects blocks that no partition decomposes into.
pub fn recompose(d: &BlockDecomposition) -> Result<ColoredPartition, PartitionError> {
    let bad = |msg: String| Err(PartitionError::InconsistentBlocks(msg));
    let n = d.durfee;
    if n == 0 {
        return bad("Durfee square side must be positive".into());
    }
    if d.block2.len() != n as usize {
        return bad(format!("Block II has {} rows, expected {n}", d.block2.len()));
    }
    if let Some(q) = d.block3.iter().find(|q| q.size != n) {
        return bad(format!("Block III part {q} does not have size {n}"));
    }
    if d.block4.largest() >= n {
        return bad(format!("Block IV largest part {} is not below {n}", d.block4.largest()));
    }
    let mut parts: Vec<ColoredPart> =
        d.block2.iter().map(|r| ColoredPart::new(r.length + n, r.color, r.overlined)).collect();
    parts.extend_from_slice(&d.block3);
    parts.extend_from_slice(d.block4.parts());
    ColoredPartition::new(d.block4.kind(), parts)
        .or_else(|e| bad(format!("blocks do not assemble into a partition: {e}")))
}
