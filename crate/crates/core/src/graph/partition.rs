use super::{SymmetricMatrix, ThresholdGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    /// `U_i`: the `i`th run of isolated additions (1-based `i`).
    Independent(usize),
    /// `V_i`: the `i`th run of dominating additions.
    Clique(usize),
    /// `U_1 ∪ V_1`, used when `s_1 = 1`.
    Merged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    /// 1-based vertices in construction order.
    pub vertices: Vec<usize>,
}

impl Cell {
    pub fn label(&self) -> String {
        match self.kind {
            CellKind::Independent(i) => format!("U{i}"),
            CellKind::Clique(i) => format!("V{i}"),
            CellKind::Merged => "U1+V1".to_string(),
        }
    }

    fn block(&self) -> usize {
        match self.kind {
            CellKind::Independent(i) | CellKind::Clique(i) => i,
            CellKind::Merged => 1,
        }
    }

    fn is_clique(&self) -> bool {
        !matches!(self.kind, CellKind::Independent(_))
    }
}

/// Degree partition of a connected threshold graph in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    cells: Vec<Cell>,
}

impl DegreePartition {
    pub(super) fn of(graph: &ThresholdGraph) -> Self {
        let mut cells = Vec::with_capacity(2 * graph.block_count());
        let mut next = 1;
        for (i, b) in graph.blocks().iter().enumerate() {
            let u: Vec<usize> = (next..next + b.zeros).collect();
            next += b.zeros;
            let v: Vec<usize> = (next..next + b.ones).collect();
            next += b.ones;
            if i == 0 && b.zeros == 1 {
                cells.push(Cell { kind: CellKind::Merged, vertices: [u, v].concat() });
            } else {
                cells.push(Cell { kind: CellKind::Independent(i + 1), vertices: u });
                cells.push(Cell { kind: CellKind::Clique(i + 1), vertices: v });
            }
        }
        Self { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Checks the partition against an adjacency matrix: the cells cover
    /// `1..=n` exactly once, every `U_i` is independent, the `V` cells form
    /// one clique, and a vertex of `U_i` is adjacent to another cell's vertex
    /// exactly when that vertex lies in some `V_j` with `j >= i`.
    pub fn is_consistent_with(&self, adjacency: &SymmetricMatrix) -> bool {
        let n = adjacency.order();
        let mut owner = vec![usize::MAX; n + 1];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in &cell.vertices {
                if v == 0 || v > n || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = c;
            }
        }
        if owner[1..].contains(&usize::MAX) {
            return false;
        }
        for x in 1..=n {
            for y in x + 1..=n {
                let (cx, cy) = (&self.cells[owner[x]], &self.cells[owner[y]]);
                let expected = match (cx.is_clique(), cy.is_clique()) {
                    (true, true) => true,
                    (false, false) => false,
                    (false, true) => cy.block() >= cx.block(),
                    (true, false) => cx.block() >= cy.block(),
                };
                if (adjacency.get(x, y) != 0.0) != expected {
                    return false;
                }
            }
        }
        true
    }
}
