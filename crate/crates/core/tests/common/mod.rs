//! Reference computations shared by the integration tests. Nothing here calls
//! the crate's eigensolver or adjacency builder.
#![allow(dead_code, clippy::needless_range_loop)]

/// Expanded creation strings of every connected threshold graph on `n`
/// vertices, in lexicographic order.
pub fn connected_strings(n: usize) -> Vec<String> {
    (0..1u32 << (n - 2))
        .map(|mask| {
            let middle: String = (0..n - 2).rev().map(|b| if mask >> b & 1 == 1 { '1' } else { '0' }).collect();
            format!("0{middle}1")
        })
        .collect()
}

/// Adjacency straight from the creation rule: `i ~ j` for `i < j` iff
/// character `j` is `1`.
pub fn adjacency_from_string(s: &str) -> Vec<Vec<f64>> {
    let b: Vec<bool> = s.bytes().map(|c| c == b'1').collect();
    let n = b.len();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if b[j] {
                a[i][j] = 1.0;
                a[j][i] = 1.0;
            }
        }
    }
    a
}

/// Number of eigenvalues of `a` below `x`: negative pivots of an LDLᵀ
/// factorization of `a - xI` (Sylvester's law of inertia).
pub fn count_below(a: &[Vec<f64>], x: f64) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= x;
    }
    let scale = a.iter().flatten().fold(1.0f64, |acc, v| acc.max(v.abs()));
    let mut negatives = 0;
    for k in 0..n {
        let mut pivot = m[k][k];
        if pivot == 0.0 {
            pivot = -f64::EPSILON * scale;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let l = m[i][k] / pivot;
            if l != 0.0 {
                for j in k + 1..n {
                    m[i][j] -= l * m[k][j];
                }
            }
        }
    }
    negatives
}

/// Eigenvalues in ascending order by bisection on [`count_below`].
pub fn bisection_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let radius = a.iter().map(|r| r.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    // Offsets keep bisection midpoints away from the integers.
    let (lo0, hi0) = (-radius - 0.123_456_7, radius + 0.087_654_3);
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if count_below(a, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Degree sequence (sorted) of the subgraph of `a` induced by `vertices`.
pub fn induced_degrees(a: &[Vec<f64>], vertices: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = vertices
        .iter()
        .map(|&i| vertices.iter().filter(|&&j| a[i][j] != 0.0).count())
        .collect();
    d.sort_unstable();
    d
}

/// Expanded anti-regular string: `0101…01` or `00101…01`.
pub fn antiregular_string(n: usize) -> String {
    let pairs = "01".repeat(n / 2);
    if n.is_multiple_of(2) {
        pairs
    } else {
        format!("0{pairs}")
    }
}

/// Calls `f` on every `k`-subset of `0..n` (0-based, increasing) until it
/// returns true.
pub fn any_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}
