//! Brute-force oracles shared by the integration tests. None of them use the
//! truncated-matrix, minor-enumeration or distance code under test.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use skewmdp::conv::PolyMatrix;
use skewmdp::linalg::rank;
use skewmdp::{ExtensionField, FieldElement, Matrix};

pub fn random_matrix(f: &ExtensionField, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| f.element(rng.gen_range(0..f.order()))).collect())
        .collect();
    Matrix::from_rows(data).unwrap()
}

/// `G_0 + G_1 D` with both blocks of full row rank, so the matrix is minimal
/// and the column distances are defined.
pub fn random_unit_memory(f: &ExtensionField, n: usize, k: usize, rng: &mut ChaCha8Rng) -> PolyMatrix {
    loop {
        let g0 = random_matrix(f, k, n, rng);
        let g1 = random_matrix(f, k, n, rng);
        if rank(f, &g0) == k && rank(f, &g1) == k {
            return PolyMatrix::unit_memory(g0, g1).unwrap();
        }
    }
}

/// All vectors of `F^len`, as index lists into `f.element`.
fn for_each_vector(f: &ExtensionField, len: usize, mut visit: impl FnMut(&[FieldElement])) {
    let q = f.order();
    let mut digits = vec![0u64; len];
    let mut v = vec![f.zero(); len];
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            digits[i] += 1;
            if digits[i] < q {
                v[i] = f.element(digits[i]);
                break;
            }
            digits[i] = 0;
            v[i] = f.zero();
            i += 1;
        }
    }
}

/// `v_s = sum_i u_{s-i} G_i` for `s = 0..=j`, flattened.
pub fn encode_stream(f: &ExtensionField, g: &PolyMatrix, u: &[Vec<FieldElement>], j: usize) -> Vec<FieldElement> {
    let (k, n) = (g.rows(), g.cols());
    let mut out = vec![f.zero(); n * (j + 1)];
    for s in 0..=j {
        for (i, block) in g.blocks().iter().enumerate() {
            if i > s {
                break;
            }
            for r in 0..k {
                for c in 0..n {
                    let term = f.mul(u[s - i][r], block.get(r, c));
                    out[s * n + c] = f.add(out[s * n + c], term);
                }
            }
        }
    }
    out
}

/// Minimum weight of `(v_0..v_j)` over all messages with `u_0 != 0`.
pub fn brute_column_distance(f: &ExtensionField, g: &PolyMatrix, j: usize) -> usize {
    let k = g.rows();
    let mut best = usize::MAX;
    for_each_vector(f, k * (j + 1), |flat| {
        if flat[..k].iter().all(|e| e.is_zero()) {
            return;
        }
        let u: Vec<Vec<FieldElement>> = flat.chunks(k).map(<[_]>::to_vec).collect();
        let w = encode_stream(f, g, &u, j).iter().filter(|e| !e.is_zero()).count();
        best = best.min(w);
    });
    best
}

/// Every truncated codeword `(v_0, .., v_j)` of a code, for small cases.
pub fn all_truncated_codewords(f: &ExtensionField, g: &PolyMatrix, j: usize) -> Vec<Vec<FieldElement>> {
    let k = g.rows();
    let mut out = Vec::new();
    for_each_vector(f, k * (j + 1), |flat| {
        let u: Vec<Vec<FieldElement>> = flat.chunks(k).map(<[_]>::to_vec).collect();
        out.push(encode_stream(f, g, &u, j));
    });
    out
}

/// `sum_i H_i v_{s-i}^T` for `s = 0..=j`; zero iff `v` passes the truncated parity check.
fn syndrome_is_zero(f: &ExtensionField, h: &PolyMatrix, v: &[FieldElement], j: usize) -> bool {
    let (r, n) = (h.rows(), h.cols());
    for s in 0..=j {
        for row in 0..r {
            let mut acc = f.zero();
            for (i, block) in h.blocks().iter().enumerate().take(s + 1) {
                for c in 0..n {
                    acc = f.add(acc, f.mul(block.get(row, c), v[(s - i) * n + c]));
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Smallest weight of a `v` with `v_0 != 0` and zero truncated syndrome,
/// searching weights up to `limit`; `None` if no such word is that light.
pub fn brute_dual_column_distance(f: &ExtensionField, h: &PolyMatrix, j: usize, limit: usize) -> Option<usize> {
    let n = h.cols();
    let width = n * (j + 1);
    let nonzero: Vec<FieldElement> = f.elements().filter(|e| !e.is_zero()).collect();
    for w in 1..=limit {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            if support[0] < n {
                let mut digits = vec![0usize; w];
                loop {
                    let mut v = vec![f.zero(); width];
                    for (slot, &c) in support.iter().enumerate() {
                        v[c] = nonzero[digits[slot]];
                    }
                    if syndrome_is_zero(f, h, &v, j) {
                        return Some(w);
                    }
                    let mut i = 0;
                    while i < w {
                        digits[i] += 1;
                        if digits[i] < nonzero.len() {
                            break;
                        }
                        digits[i] = 0;
                        i += 1;
                    }
                    if i == w {
                        break;
                    }
                }
            }
            if !next_subset(&mut support, width) {
                break;
            }
        }
    }
    None
}

fn next_subset(s: &mut [usize], n: usize) -> bool {
    let r = s.len();
    for i in (0..r).rev() {
        if s[i] < n - r + i {
            s[i] += 1;
            for j in i + 1..r {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r > n {
        return Vec::new();
    }
    let mut s: Vec<usize> = (0..r).collect();
    let mut out = vec![s.clone()];
    while r > 0 && next_subset(&mut s, n) {
        out.push(s.clone());
    }
    out
}

/// A `k(j+1)`-set of columns of `G_j^c` is admissible when, for every
/// `s = 1..j`, at most `k s` of its columns lie in the first `s` blocks.
pub fn generator_rule(cols: &[usize], n: usize, k: usize, j: usize) -> bool {
    (1..=j).all(|s| cols.iter().filter(|&&c| c < n * s).count() <= k * s)
}

/// Leibniz expansion over the field.
pub fn leibniz(f: &ExtensionField, m: &Matrix) -> FieldElement {
    fn rec(f: &ExtensionField, m: &Matrix, row: usize, used: &mut [bool]) -> FieldElement {
        if row == m.rows() {
            return f.one();
        }
        let mut acc = f.zero();
        let mut position = 0;
        for c in 0..m.cols() {
            if used[c] {
                continue;
            }
            used[c] = true;
            let term = f.mul(m.get(row, c), rec(f, m, row + 1, used));
            used[c] = false;
            acc = if position % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
            position += 1;
        }
        acc
    }
    rec(f, m, 0, &mut vec![false; m.cols()])
}

/// `G_j^c` assembled entry by entry from the definition.
pub fn sliding_generator(f: &ExtensionField, g: &PolyMatrix, j: usize) -> Matrix {
    let (k, n) = (g.rows(), g.cols());
    let mut rows = Vec::new();
    for br in 0..=j {
        for r in 0..k {
            let mut row = Vec::new();
            for bc in 0..=j {
                for c in 0..n {
                    let e = if bc >= br {
                        g.blocks().get(bc - br).map_or(f.zero(), |b| b.get(r, c))
                    } else {
                        f.zero()
                    };
                    row.push(e);
                }
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(rows).unwrap()
}

/// Some admissible set inside `available` has a nonzero minor of `G_j^c`.
pub fn has_nonzero_admissible_minor(
    f: &ExtensionField,
    g: &PolyMatrix,
    j: usize,
    available: &[usize],
) -> bool {
    let (k, n) = (g.rows(), g.cols());
    let m = sliding_generator(f, g, j);
    let size = k * (j + 1);
    subsets(available.len(), size).into_iter().any(|pick| {
        let cols: Vec<usize> = pick.iter().map(|&i| available[i]).collect();
        generator_rule(&cols, n, k, j) && !leibniz(f, &m.select_columns(&cols)).is_zero()
    })
}
