use std::fmt;

use crate::error::SystemError;

/// Largest supported rank. Generator subsets are stored as `u64` masks.
pub const MAX_RANK: usize = 64;

/// Entry m_{i,j} of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1 && m >= 3)
    }

    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 0)
    }

    pub fn is(self, m: u32) -> bool {
        self == Label::Finite(m)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

/// A Coxeter system (W, S, M) given by its symmetric label matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    rank: usize,
    names: Option<Vec<String>>,
    matrix: Vec<Label>,
}

impl CoxeterSystem {
    pub fn new(matrix: Vec<Vec<Label>>, names: Option<Vec<String>>) -> Result<Self, SystemError> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(SystemError::EmptyRank);
        }
        if rank > MAX_RANK {
            return Err(SystemError::RankTooLarge(rank));
        }
        if let Some(n) = &names {
            if n.len() != rank {
                return Err(SystemError::RankMismatch { expected: rank, found: n.len() });
            }
        }
        let mut flat = Vec::with_capacity(rank * rank);
        for row in &matrix {
            if row.len() != rank {
                return Err(SystemError::RankMismatch { expected: rank, found: row.len() });
            }
            flat.extend_from_slice(row);
        }
        for i in 0..rank {
            if flat[i * rank + i] != Label::Finite(1) {
                return Err(SystemError::Diagonal { i });
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if flat[i * rank + j] != flat[j * rank + i] {
                    return Err(SystemError::Asymmetric { i, j });
                }
                if let Label::Finite(m) = flat[i * rank + j] {
                    if m < 2 {
                        return Err(SystemError::OffDiagonal { i, j, label: m });
                    }
                }
            }
        }
        Ok(CoxeterSystem { rank, names, matrix: flat })
    }

    /// Builds a system where every pair gets `default` except the listed
    /// 0-based pairs.
    pub fn from_edges(
        rank: usize,
        default: Label,
        edges: &[(usize, usize, Label)],
    ) -> Result<Self, SystemError> {
        let mut m = vec![vec![default; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(i, j, l) in edges {
            if i >= rank || j >= rank {
                return Err(SystemError::RankMismatch { expected: rank, found: i.max(j) + 1 });
            }
            m[i][j] = l;
            m[j][i] = l;
        }
        CoxeterSystem::new(m, None)
    }

    /// Dihedral system with a single label.
    pub fn dihedral(m: Label) -> Self {
        CoxeterSystem::from_edges(2, m, &[]).expect("dihedral labels are valid")
    }

    /// Right-angled system in which exactly the listed pairs commute.
    pub fn right_angled(rank: usize, commuting: &[(usize, usize)]) -> Result<Self, SystemError> {
        let edges: Vec<_> = commuting.iter().map(|&(i, j)| (i, j, Label::Finite(2))).collect();
        CoxeterSystem::from_edges(rank, Label::Infinite, &edges)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.matrix[i * self.rank + j]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of generator `i` (0-based).
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None => format!("s{}", i + 1),
        }
    }

    pub fn is_right_angled(&self) -> bool {
        self.pairs().all(|(i, j)| matches!(self.label(i, j), Label::Finite(2) | Label::Infinite))
    }

    /// Unordered pairs i < j.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rank;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    /// Standard parabolic subsystem on `gens`, re-indexed in the given order.
    pub fn subsystem(&self, gens: &[usize]) -> Result<Self, SystemError> {
        let m = gens
            .iter()
            .map(|&i| gens.iter().map(|&j| self.label(i, j)).collect())
            .collect();
        let names = self.names.as_ref().map(|n| gens.iter().map(|&i| n[i].clone()).collect());
        CoxeterSystem::new(m, names)
    }

    pub fn with_label(&self, i: usize, j: usize, label: Label) -> Result<Self, SystemError> {
        let mut m: Vec<Vec<Label>> =
            (0..self.rank).map(|a| (0..self.rank).map(|b| self.label(a, b)).collect()).collect();
        m[i][j] = label;
        m[j][i] = label;
        CoxeterSystem::new(m, self.names.clone())
    }
}
