use core::fmt;

use alloc::collections::BTreeSet;

use super::TwistMatrix;

/// Twist shapes already covered by single- and few-twist constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnownShape {
    /// No twist at all: a GRS code.
    Grs,
    /// All nonzero entries in one row (a single entry included).
    SingleRow,
    /// Support inside rows `k-2, k-1` and columns `1, 2`.
    BottomLeftBlock,
    /// Entries in pairwise distinct rows and columns, e.g. a diagonal band.
    Isolated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Novelty {
    KnownPattern(KnownShape),
    ConditionI,
    ConditionII,
    Neither,
}

impl Novelty {
    pub fn as_str(self) -> &'static str {
        match self {
            Novelty::KnownPattern(_) => "known-pattern",
            Novelty::ConditionI => "condition-i",
            Novelty::ConditionII => "condition-ii",
            Novelty::Neither => "neither",
        }
    }

    pub fn is_novel(self) -> bool {
        matches!(self, Novelty::ConditionI | Novelty::ConditionII)
    }
}

impl fmt::Display for Novelty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies the support `A` of a twist matrix. Known shapes win; after
/// that, with `RW`/`CW` the number of nonzero rows/columns:
/// condition (i) is `RW = 2` with `A` not inside the bottom-left 2x2 block,
/// condition (ii) is `RW > 2` and `RW + CW < 2|A|`.
pub fn classify_novelty(twist: &TwistMatrix) -> Novelty {
    let support = twist.support();
    if support.is_empty() {
        return Novelty::KnownPattern(KnownShape::Grs);
    }
    let k = twist.rows();
    let rows: BTreeSet<usize> = support.iter().map(|&(m, _)| m).collect();
    let cols: BTreeSet<usize> = support.iter().map(|&(_, j)| j).collect();
    let (rw, cw, size) = (rows.len(), cols.len(), support.len());
    let in_block = support.iter().all(|&(m, j)| m + 2 >= k && j <= 2);

    if rw == 1 {
        return Novelty::KnownPattern(KnownShape::SingleRow);
    }
    if in_block {
        return Novelty::KnownPattern(KnownShape::BottomLeftBlock);
    }
    if rw == size && cw == size {
        return Novelty::KnownPattern(KnownShape::Isolated);
    }
    if rw == 2 {
        Novelty::ConditionI
    } else if rw + cw < 2 * size {
        Novelty::ConditionII
    } else {
        Novelty::Neither
    }
}
