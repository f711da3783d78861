use super::{check_indices, ThresholdGraph};
use crate::{Error, Result};

/// A witness that `guest` is isomorphic to the subgraph of `host` induced by
/// `indices` (1-based, strictly increasing, one per guest vertex in order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    host: ThresholdGraph,
    guest: ThresholdGraph,
    indices: Vec<usize>,
}

impl Embedding {
    /// Checks the witness entrywise against both adjacency matrices.
    pub fn new(host: ThresholdGraph, guest: ThresholdGraph, indices: Vec<usize>) -> Result<Self> {
        let e = Self { host, guest, indices };
        e.validate()?;
        Ok(e)
    }

    /// Leftmost embedding of `guest`'s creation string as a substring of
    /// `host`'s, or `None` when the guest string is not a substring.
    ///
    /// Greedy matching gives the lexicographically smallest index set. The
    /// first guest vertex always lands on host vertex 1, which is a `0` like
    /// every guest's first character, so no embedding is missed by requiring
    /// an exact character match.
    pub fn find(host: &ThresholdGraph, guest: &ThresholdGraph) -> Option<Self> {
        let host_bits = host.bits();
        let mut indices = Vec::with_capacity(guest.order());
        let mut pos = 0;
        for b in guest.bits() {
            while pos < host_bits.len() && host_bits[pos] != b {
                pos += 1;
            }
            if pos == host_bits.len() {
                return None;
            }
            indices.push(pos + 1);
            pos += 1;
        }
        Some(Self { host: host.clone(), guest: guest.clone(), indices })
    }

    pub fn host(&self) -> &ThresholdGraph {
        &self.host
    }

    pub fn guest(&self) -> &ThresholdGraph {
        &self.guest
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_identity(&self) -> bool {
        self.host == self.guest && self.indices.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Compares the host submatrix on `indices` with the guest adjacency.
    pub fn validate(&self) -> Result<()> {
        if self.indices.len() != self.guest.order() {
            return Err(Error::InvalidEmbedding(format!(
                "{} indices for a guest of order {}",
                self.indices.len(),
                self.guest.order()
            )));
        }
        check_indices(&self.indices, self.host.order())?;
        let sub = self.host.adjacency().submatrix(&self.indices);
        let guest = self.guest.adjacency();
        if sub != guest {
            let (i, j) = (1..=guest.order())
                .flat_map(|i| (1..=guest.order()).map(move |j| (i, j)))
                .find(|&(i, j)| sub.get(i, j) != guest.get(i, j))
                .expect("matrices differ somewhere");
            return Err(Error::InvalidEmbedding(format!(
                "guest pair ({i}, {j}) maps to host pair ({}, {}) with a different adjacency",
                self.indices[i - 1],
                self.indices[j - 1]
            )));
        }
        Ok(())
    }
}
