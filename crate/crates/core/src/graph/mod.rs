//! Connected threshold graphs in creation-string form.
//!
//! Vertices are labelled `1..=n` in construction order. Vertex `j` is added
//! as an isolated vertex when the `j`th character of the creation string is
//! `0` and as a dominating vertex when it is `1`, so for `i < j` the pair
//! `{i, j}` is an edge exactly when character `j` is `1`.
//!
//! Two text forms are accepted wherever a graph is read:
//!
//! - expanded binary, e.g. `00011000011111100000111`;
//! - run-length notation, e.g. `0^3 1^2 0^4 1^6 0^5 1^3`. Runs are written
//!   `d^count` (or `d^{count}`), bare digits are single characters, and
//!   whitespace is ignored. A run count must be followed by whitespace or a
//!   `{}` group so that `0^21` is read as twenty-one zeros.

mod embedding;
mod matrix;
mod partition;

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, MAX_ORDER};

pub use embedding::Embedding;
pub use matrix::SymmetricMatrix;
pub use partition::{Cell, CellKind, DegreePartition};

/// One `0^s 1^t` block of a creation string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    /// `s_i`: consecutive isolated additions.
    pub zeros: usize,
    /// `t_i`: consecutive dominating additions.
    pub ones: usize,
}

/// A connected threshold graph stored as its run-length block form.
///
/// Invariants: at least one block, every run positive, the expanded string
/// starts with `0` and ends with `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThresholdGraph {
    blocks: Vec<Block>,
    order: usize,
}

impl ThresholdGraph {
    /// Builds a graph from `(s_i, t_i)` pairs.
    pub fn from_blocks<I>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Vec::new();
        let mut order = 0usize;
        for (zeros, ones) in blocks {
            if zeros == 0 || ones == 0 {
                return Err(Error::MalformedRun(format!("0^{zeros} 1^{ones}")));
            }
            order = order.saturating_add(zeros).saturating_add(ones);
            if order > MAX_ORDER {
                return Err(Error::TooLarge { order, max: MAX_ORDER });
            }
            out.push(Block { zeros, ones });
        }
        if out.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { blocks: out, order })
    }

    /// Builds a graph from an expanded creation string given as 0/1 values.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        match bits.first() {
            None => return Err(Error::Empty),
            Some(&b) if b != 0 => return Err(Error::LeadingOne),
            _ => {}
        }
        if bits.len() < 2 {
            return Err(Error::TooShort(bits.len()));
        }
        if bits.len() > MAX_ORDER {
            return Err(Error::TooLarge { order: bits.len(), max: MAX_ORDER });
        }
        if bits[bits.len() - 1] == 0 {
            return Err(Error::Disconnected);
        }
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < bits.len() {
            let start = i;
            while i < bits.len() && bits[i] == 0 {
                i += 1;
            }
            let zeros = i - start;
            let start = i;
            while i < bits.len() && bits[i] != 0 {
                i += 1;
            }
            blocks.push(Block { zeros, ones: i - start });
        }
        Ok(Self { blocks, order: bits.len() })
    }

    /// The connected anti-regular graph `A_n`: `0101...01` for even `n`,
    /// `00101...01` for odd `n`.
    pub fn antiregular(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort(n));
        }
        let k = n / 2;
        let first = if n % 2 == 1 { 2 } else { 1 };
        Self::from_blocks(std::iter::once((first, 1)).chain(std::iter::repeat_n((1, 1), k - 1)))
    }

    /// Uniform block graph `(0^s 1^t)^k`.
    pub fn uniform(zeros: usize, ones: usize, k: usize) -> Result<Self> {
        Self::from_blocks(std::iter::repeat_n((zeros, ones), k))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of vertices `n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of blocks `k`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `s = Σ s_i`, the number of isolated additions.
    pub fn zeros(&self) -> usize {
        self.blocks.iter().map(|b| b.zeros).sum()
    }

    /// `t = Σ t_i`, the number of dominating additions.
    pub fn ones(&self) -> usize {
        self.blocks.iter().map(|b| b.ones).sum()
    }

    /// `s_1`, the length of the leading run of zeros.
    pub fn leading_zeros(&self) -> usize {
        self.blocks[0].zeros
    }

    /// Number of edges: vertex `j` contributes `j - 1` edges when it is dominating.
    pub fn edge_count(&self) -> usize {
        self.bits()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(j, _)| j)
            .sum()
    }

    /// Expanded creation string as 0/1 values, vertex `j` at position `j - 1`.
    pub fn bits(&self) -> Vec<u8> {
        let mut bits = Vec::with_capacity(self.order);
        for b in &self.blocks {
            bits.extend(std::iter::repeat_n(0, b.zeros));
            bits.extend(std::iter::repeat_n(1, b.ones));
        }
        bits
    }

    pub fn is_antiregular(&self) -> bool {
        let first = if self.order % 2 == 1 { 2 } else { 1 };
        self.blocks[0] == Block { zeros: first, ones: 1 }
            && self.blocks[1..].iter().all(|b| *b == Block { zeros: 1, ones: 1 })
    }

    /// Run-length notation with bare digits for runs of length one,
    /// e.g. `0^2 1^2 0 1 0 1`.
    pub fn to_compact(&self) -> String {
        let mut parts = Vec::with_capacity(2 * self.blocks.len());
        for b in &self.blocks {
            for (digit, count) in [('0', b.zeros), ('1', b.ones)] {
                if count == 1 {
                    parts.push(digit.to_string());
                } else {
                    parts.push(format!("{digit}^{count}"));
                }
            }
        }
        parts.join(" ")
    }

    /// The (0,1) adjacency matrix in canonical labelling.
    pub fn adjacency(&self) -> SymmetricMatrix {
        let bits = self.bits();
        let n = self.order;
        let mut data = vec![0.0; n * n];
        for (j, &b) in bits.iter().enumerate() {
            if b == 1 {
                for i in 0..j {
                    data[i * n + j] = 1.0;
                    data[j * n + i] = 1.0;
                }
            }
        }
        SymmetricMatrix::from_row_major_unchecked(n, data)
    }

    /// The degree partition `U_1, V_1, ..., U_k, V_k`, with `U_1` and `V_1`
    /// merged when `s_1 = 1`.
    pub fn degree_partition(&self) -> DegreePartition {
        DegreePartition::of(self)
    }

    /// Classes of mutually duplicate vertices (equal open neighbourhoods).
    pub fn duplicate_classes(&self) -> Vec<Vec<usize>> {
        self.degree_partition()
            .cells()
            .iter()
            .filter(|c| matches!(c.kind, CellKind::Independent(_)))
            .map(|c| c.vertices.clone())
            .collect()
    }

    /// Classes of mutually co-duplicate vertices (equal closed neighbourhoods).
    pub fn coduplicate_classes(&self) -> Vec<Vec<usize>> {
        self.degree_partition()
            .cells()
            .iter()
            .filter(|c| !matches!(c.kind, CellKind::Independent(_)))
            .map(|c| c.vertices.clone())
            .collect()
    }

    /// Lower bound on the multiplicity of `0` from duplicate classes.
    pub fn duplicate_bound(&self) -> usize {
        self.duplicate_classes().iter().map(|c| c.len() - 1).sum()
    }

    /// Lower bound on the multiplicity of `-1` from co-duplicate classes.
    pub fn coduplicate_bound(&self) -> usize {
        self.coduplicate_classes().iter().map(|c| c.len() - 1).sum()
    }

    /// Order of the largest anti-regular induced subgraph:
    /// `2k` when `s_1 = 1`, `2k + 1` otherwise.
    pub fn antiregular_subgraph_order(&self) -> usize {
        let k = self.block_count();
        if self.leading_zeros() == 1 {
            2 * k
        } else {
            2 * k + 1
        }
    }

    /// Order of the smallest anti-regular graph containing this one:
    /// `2(n - k)` when `s_1 = 1`, `2(n - k) - 1` otherwise.
    pub fn antiregular_supergraph_order(&self) -> usize {
        let base = 2 * (self.order - self.block_count());
        if self.leading_zeros() == 1 {
            base
        } else {
            base - 1
        }
    }

    /// The largest anti-regular induced subgraph `A_m` with the leftmost
    /// embedding of its creation string into this one.
    pub fn largest_antiregular_subgraph(&self) -> Embedding {
        let m = self.antiregular_subgraph_order();
        let guest = Self::antiregular(m).expect("subgraph order is at least 2");
        Embedding::find(self, &guest).expect("A_m is a substring of every graph with this block form")
    }

    /// The smallest anti-regular graph `A_N` containing this graph, with the
    /// leftmost embedding of this creation string into `A_N`.
    pub fn smallest_antiregular_supergraph(&self) -> Embedding {
        let big_n = self.antiregular_supergraph_order();
        let host = Self::antiregular(big_n).expect("supergraph order is at least 2");
        Embedding::find(&host, self).expect("every creation string embeds in A_N")
    }

    /// Subgraph induced by the 1-based, strictly increasing `indices`.
    ///
    /// The first selected character is normalized to `0`: a vertex added as
    /// dominating over the empty graph is isolated.
    pub fn induced_subgraph(&self, indices: &[usize]) -> Result<Self> {
        check_indices(indices, self.order)?;
        let bits = self.bits();
        let mut sub: Vec<u8> = indices.iter().map(|&i| bits[i - 1]).collect();
        sub[0] = 0;
        if sub.len() == 1 || sub[sub.len() - 1] == 0 {
            return Err(Error::Disconnected);
        }
        Self::from_bits(&sub)
    }
}

pub(crate) fn check_indices(indices: &[usize], order: usize) -> Result<()> {
    if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedIndices);
    }
    for &index in indices {
        if index == 0 || index > order {
            return Err(Error::IndexOutOfRange { index, order });
        }
    }
    Ok(())
}

impl fmt::Display for ThresholdGraph {
    /// Expanded binary creation string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            for _ in 0..b.zeros {
                f.write_str("0")?;
            }
            for _ in 0..b.ones {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ThresholdGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_creation(text)
    }
}

/// Parses expanded or run-length creation-string notation.
pub fn parse_creation(text: &str) -> Result<ThresholdGraph> {
    let chars: Vec<char> = text.chars().collect();
    let mut bits: Vec<u8> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let digit = match c {
            '0' => 0u8,
            '1' => 1u8,
            _ => return Err(Error::InvalidCharacter { found: c, position: i }),
        };
        i += 1;
        let mut count = 1usize;
        if chars.get(i) == Some(&'^') {
            let start = i - 1;
            i += 1;
            let braced = chars.get(i) == Some(&'{');
            if braced {
                i += 1;
            }
            let digits_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let token: String = chars[start..i].iter().collect();
            if braced {
                if chars.get(i) != Some(&'}') {
                    return Err(Error::MalformedRun(token));
                }
                i += 1;
            }
            let digits: String = chars[digits_start..i - usize::from(braced)].iter().collect();
            count = match digits.parse::<usize>() {
                Ok(v) if v > 0 => v,
                _ => return Err(Error::MalformedRun(token)),
            };
        }
        if bits.len().saturating_add(count) > MAX_ORDER {
            return Err(Error::TooLarge { order: bits.len().saturating_add(count), max: MAX_ORDER });
        }
        bits.extend(std::iter::repeat_n(digit, count));
    }
    ThresholdGraph::from_bits(&bits)
}
