//! Convolutional codes given by polynomial generator matrices
//! `G(D) = G_0 + G_1 D + .. + G_m D^m`, and the exact machinery used to
//! certify their distance properties.
//!
//! Column indices in reports (minor witnesses) are 1-based; everything else
//! is 0-based.

use std::fmt::Write as _;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::combin::{advance, binomial, unrank};
use crate::error::{Error, Precondition, Result};
use crate::gf::{ExtensionField, FieldElement};
use crate::linalg::{determinant, rank, vec_mat, Matrix};
use crate::par::{self, Execution};

/// Upper limit on enumerated states for the exhaustive engines.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// A `k x n` polynomial matrix stored by coefficient blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    /// `blocks[i]` is the coefficient of `D^i`; at least one block, no trailing zero blocks
    /// beyond the first.
    blocks: Vec<Matrix>,
}

impl PolyMatrix {
    pub fn from_blocks(blocks: Vec<Matrix>) -> Result<Self> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::Dimension("no coefficient blocks".into()))?;
        let (rows, cols) = (first.rows(), first.cols());
        if blocks.iter().any(|b| b.rows() != rows || b.cols() != cols) {
            return Err(Error::Dimension("coefficient blocks differ in shape".into()));
        }
        let mut blocks = blocks;
        while blocks.len() > 1 && blocks.last().is_some_and(Matrix::is_zero) {
            blocks.pop();
        }
        Ok(PolyMatrix { rows, cols, blocks })
    }

    /// `G_0 + G_1 D`.
    pub fn unit_memory(g0: Matrix, g1: Matrix) -> Result<Self> {
        Self::from_blocks(vec![g0, g1])
    }

    /// Builds a matrix from its entries, each a coefficient list in `D` (constant first).
    pub fn from_entries(field: &ExtensionField, entries: &[Vec<Vec<FieldElement>>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged polynomial matrix".into()));
        }
        let depth = entries.iter().flatten().map(Vec::len).max().unwrap_or(0).max(1);
        let mut blocks = vec![Matrix::zeros(field, rows, cols); depth];
        for (i, row) in entries.iter().enumerate() {
            for (j, poly) in row.iter().enumerate() {
                for (d, &c) in poly.iter().enumerate() {
                    blocks[d].set(i, j, c);
                }
            }
        }
        Self::from_blocks(blocks)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Coefficient block `G_i`, or `None` past the stored degree.
    pub fn block(&self, i: usize) -> Option<&Matrix> {
        self.blocks.get(i)
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// Entry `(i, j)` as a coefficient list without trailing zeros.
    pub fn entry(&self, i: usize, j: usize) -> Vec<FieldElement> {
        let mut p: Vec<FieldElement> = self.blocks.iter().map(|b| b.get(i, j)).collect();
        while p.last().is_some_and(FieldElement::is_zero) {
            p.pop();
        }
        p
    }

    fn entry_degree(&self, i: usize, j: usize) -> Option<usize> {
        (0..self.blocks.len()).rev().find(|&d| !self.blocks[d].get(i, j).is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub row_degrees: Vec<usize>,
    pub memory: usize,
    pub overall_constraint_length: usize,
    pub generic_row_degrees: bool,
}

pub fn degree_stats(g: &PolyMatrix) -> Result<DegreeStats> {
    let row_degrees = (0..g.rows)
        .map(|i| {
            (0..g.cols)
                .filter_map(|j| g.entry_degree(i, j))
                .max()
                .ok_or(Error::ZeroRow(i))
        })
        .collect::<Result<Vec<_>>>()?;
    let memory = row_degrees.iter().copied().max().unwrap_or(0);
    let generic_row_degrees = row_degrees.iter().all(|&d| d + 1 >= memory);
    Ok(DegreeStats {
        overall_constraint_length: row_degrees.iter().sum(),
        memory,
        row_degrees,
        generic_row_degrees,
    })
}

/// Row `i` holds the coefficients of `D^{nu_i}`; a zero row stays zero.
pub fn highest_order_matrix(field: &ExtensionField, g: &PolyMatrix) -> Matrix {
    let mut out = Matrix::zeros(field, g.rows, g.cols);
    for i in 0..g.rows {
        let Some(nu) = (0..g.cols).filter_map(|j| g.entry_degree(i, j)).max() else {
            continue;
        };
        for j in 0..g.cols {
            out.set(i, j, g.blocks[nu].get(i, j));
        }
    }
    out
}

pub fn is_minimal(field: &ExtensionField, g: &PolyMatrix) -> bool {
    rank(field, &highest_order_matrix(field, g)) == g.rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// Block upper-triangular Toeplitz `G_j^c`.
    Generator,
    /// Block lower-triangular Toeplitz `H_j^c`.
    Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedMatrix {
    pub kind: MatrixKind,
    pub j: usize,
    /// Rows per block (`k` for a generator, `n - k` for a parity check).
    pub block_rows: usize,
    /// Columns per block, `n`.
    pub block_cols: usize,
    pub matrix: Matrix,
}

impl TruncatedMatrix {
    pub fn rule(&self) -> IndexRule {
        IndexRule {
            kind: self.kind,
            n: self.block_cols,
            block_rows: self.block_rows,
            j: self.j,
        }
    }
}

/// Assembles `G_j^c` (generator kind) or `H_j^c` (parity kind) from the blocks of `g`.
pub fn truncate(field: &ExtensionField, g: &PolyMatrix, j: usize, kind: MatrixKind) -> TruncatedMatrix {
    let (r, n) = (g.rows, g.cols);
    let mut m = Matrix::zeros(field, r * (j + 1), n * (j + 1));
    for br in 0..=j {
        for bc in 0..=j {
            let lag = match kind {
                MatrixKind::Generator if bc >= br => bc - br,
                MatrixKind::Parity if br >= bc => br - bc,
                _ => continue,
            };
            if let Some(block) = g.block(lag) {
                m.place(br * r, bc * n, block);
            }
        }
    }
    TruncatedMatrix {
        kind,
        j,
        block_rows: r,
        block_cols: n,
        matrix: m,
    }
}

/// Singleton-type bounds for an `(n, k, delta)` code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonData {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    /// Generalized Singleton bound on the free distance.
    pub free_bound: usize,
    /// `floor(delta/k) + floor(delta/(n-k))`.
    pub l: usize,
    /// `floor(delta/k) + ceil(delta/(n-k))`.
    pub m: usize,
}

impl SingletonData {
    /// Upper bound `(n-k)(j+1) + 1` on the `j`-th column distance.
    pub fn column_bound(&self, j: usize) -> usize {
        (self.n - self.k) * (j + 1) + 1
    }
}

pub fn singleton_data(n: usize, k: usize, delta: usize) -> Result<SingletonData> {
    if k == 0 || k >= n {
        return Err(Error::Parameters(format!("need 0 < k < n, got n = {n}, k = {k}")));
    }
    let r = n - k;
    Ok(SingletonData {
        n,
        k,
        delta,
        free_bound: r * (delta / k + 1) + delta + 1,
        l: delta / k + delta / r,
        m: delta / k + delta.div_ceil(r),
    })
}

/// Which full-size minors of a truncated matrix are not forced to vanish by
/// its block-triangular shape.
///
/// For a generator matrix a sorted 0-based column set `c` qualifies when
/// `c[k s] >= n s` for `s = 1..=j` (at most `k s` columns among the first
/// `n s`). For a parity-check matrix with `r` rows per block it qualifies when
/// `c[r s - 1] <= n s - 1` (at least `r s` columns among the first `n s`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRule {
    pub kind: MatrixKind,
    pub n: usize,
    pub block_rows: usize,
    pub j: usize,
}

impl IndexRule {
    /// Number of columns in a full-size minor.
    pub fn size(&self) -> usize {
        self.block_rows * (self.j + 1)
    }

    pub fn width(&self) -> usize {
        self.n * (self.j + 1)
    }

    /// Checks a sorted 0-based column set against the rule.
    pub fn admits(&self, cols: &[usize]) -> bool {
        if cols.len() != self.size() || cols.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if cols.last().is_some_and(|&c| c >= self.width()) {
            return false;
        }
        (1..=self.j).all(|s| {
            let early = cols.iter().filter(|&&c| c < self.n * s).count();
            match self.kind {
                MatrixKind::Generator => early <= self.block_rows * s,
                MatrixKind::Parity => early >= self.block_rows * s,
            }
        })
    }

    /// Per-position inclusive bounds on the chosen column, tightened so that
    /// every value in range extends to at least one admissible set.
    fn bounds(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (size, width) = (self.size(), self.width());
        if size > width {
            return None;
        }
        let mut lo: Vec<usize> = (0..size).collect();
        let mut hi: Vec<usize> = (0..size).map(|p| width - size + p).collect();
        for s in 1..=self.j {
            match self.kind {
                MatrixKind::Generator => {
                    let p = self.block_rows * s;
                    lo[p] = lo[p].max(self.n * s);
                }
                MatrixKind::Parity => {
                    let p = self.block_rows * s - 1;
                    hi[p] = hi[p].min(self.n * s - 1);
                }
            }
        }
        for p in 1..size {
            lo[p] = lo[p].max(lo[p - 1] + 1);
        }
        for p in (0..size.saturating_sub(1)).rev() {
            hi[p] = hi[p].min(hi[p + 1].saturating_sub(1));
        }
        if (0..size).any(|p| lo[p] > hi[p]) {
            return None;
        }
        Some((lo, hi))
    }

    fn walk<F>(&self, bounds: &(Vec<usize>, Vec<usize>), prefix: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let p = prefix.len();
        if p == self.size() {
            return visit(prefix);
        }
        let (lo, hi) = bounds;
        let start = prefix.last().map_or(lo[p], |&c| lo[p].max(c + 1));
        for c in start..=hi[p] {
            prefix.push(c);
            let flow = self.walk(bounds, prefix, visit);
            prefix.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Visits admissible sets in lexicographic order until `visit` breaks.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if let Some(b) = self.bounds() {
            let _ = self.walk(&b, &mut Vec::with_capacity(self.size()), &mut visit);
        }
    }

    /// All admissible sets, lexicographically ordered.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each(|s| {
            out.push(s.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> u64 {
        let mut n = 0u64;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    /// Valid prefixes of the given length, used to split work across threads.
    fn prefixes(&self, len: usize) -> Vec<Vec<usize>> {
        fn extend(b: &(Vec<usize>, Vec<usize>), len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let p = prefix.len();
            if p == len {
                out.push(prefix.clone());
                return;
            }
            let start = prefix.last().map_or(b.0[p], |&c| b.0[p].max(c + 1));
            for c in start..=b.1[p] {
                prefix.push(c);
                extend(b, len, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if let Some(b) = self.bounds() {
            extend(&b, len, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Outcome of a full-size minor census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorCheck {
    pub passed: bool,
    /// Number of admissible column sets.
    pub qualifying: u64,
    /// First vanishing minor's columns (1-based), lexicographically smallest.
    pub witness: Option<Vec<usize>>,
}

pub fn mdp_minor_check(field: &ExtensionField, t: &TruncatedMatrix) -> MinorCheck {
    mdp_minor_check_with(field, t, Execution::default())
}

/// Checks that every admissible full-size minor of `t` is nonzero.
pub fn mdp_minor_check_with(field: &ExtensionField, t: &TruncatedMatrix, exec: Execution) -> MinorCheck {
    let rule = t.rule();
    let qualifying = rule.count();
    let Some(bounds) = rule.bounds() else {
        return MinorCheck {
            passed: true,
            qualifying,
            witness: None,
        };
    };
    let prefixes = rule.prefixes(rule.size().min(2));
    let witness = par::find_first(exec, prefixes.len() as u64, 1, |range| {
        let mut found = None;
        for idx in range {
            let mut prefix = prefixes[idx as usize].clone();
            let _ = rule.walk(&bounds, &mut prefix, &mut |cols: &[usize]| {
                let det = determinant(field, &t.matrix.select_columns(cols)).expect("square");
                if det.is_zero() {
                    found = Some(cols.iter().map(|c| c + 1).collect::<Vec<_>>());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if found.is_some() {
                break;
            }
        }
        found
    });
    MinorCheck {
        passed: witness.is_none(),
        qualifying,
        witness,
    }
}

/// Verdict of the MDP test on `G_L^c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdpVerdict {
    pub is_mdp: bool,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub check: MinorCheck,
}

/// Decides whether `g` generates an `(n, k, delta = nu)` MDP code.
///
/// Requires a minimal matrix with generic row degrees; under those
/// hypotheses the MDP property of `G_L^c` also makes `g` basic.
pub fn is_mdp(field: &ExtensionField, g: &PolyMatrix) -> Result<MdpVerdict> {
    is_mdp_with(field, g, Execution::default())
}

pub fn is_mdp_with(field: &ExtensionField, g: &PolyMatrix, exec: Execution) -> Result<MdpVerdict> {
    let stats = check_mdp_hypotheses(field, g)?;
    let delta = stats.overall_constraint_length;
    let data = singleton_data(g.cols, g.rows, delta)?;
    let t = truncate(field, g, data.l, MatrixKind::Generator);
    let check = mdp_minor_check_with(field, &t, exec);
    Ok(MdpVerdict {
        is_mdp: check.passed,
        n: g.cols,
        k: g.rows,
        delta,
        l: data.l,
        check,
    })
}

/// Decides whether the code with parity-check matrix `h` is MDP.
///
/// `h` is `r x n`; the checked code is `(n, n - r, delta = nu(h))` and the
/// test runs on `H_{L'}^c` with the parity index rule.
pub fn is_dual_mdp(field: &ExtensionField, h: &PolyMatrix) -> Result<MdpVerdict> {
    is_dual_mdp_with(field, h, Execution::default())
}

pub fn is_dual_mdp_with(field: &ExtensionField, h: &PolyMatrix, exec: Execution) -> Result<MdpVerdict> {
    let stats = check_mdp_hypotheses(field, h)?;
    let delta = stats.overall_constraint_length;
    let (n, k) = (h.cols, h.cols - h.rows);
    let data = singleton_data(n, k, delta)?;
    let t = truncate(field, h, data.l, MatrixKind::Parity);
    let check = mdp_minor_check_with(field, &t, exec);
    Ok(MdpVerdict {
        is_mdp: check.passed,
        n,
        k,
        delta,
        l: data.l,
        check,
    })
}

fn check_mdp_hypotheses(field: &ExtensionField, g: &PolyMatrix) -> Result<DegreeStats> {
    let stats = degree_stats(g)?;
    if !is_minimal(field, g) {
        return Err(Error::Precondition(Precondition::NotMinimal));
    }
    if !stats.generic_row_degrees {
        return Err(Error::Precondition(Precondition::NonGenericRowDegrees(
            stats.row_degrees.clone(),
        )));
    }
    Ok(stats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceEngine {
    /// Message enumeration if feasible, otherwise support enumeration.
    Auto,
    /// Minimum weight over all `(u_0, .., u_j)` with `u_0 != 0`.
    MessageEnumeration,
    /// Smallest support admitting a truncated codeword with `u_0 != 0`,
    /// decided by rank comparisons.
    SupportEnumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnDistance {
    pub j: usize,
    pub distance: usize,
    pub engine: DistanceEngine,
}

pub fn column_distance_exact(
    field: &ExtensionField,
    g: &PolyMatrix,
    j: usize,
    engine: DistanceEngine,
) -> Result<ColumnDistance> {
    column_distance_with(field, g, j, engine, Execution::default())
}

pub fn column_distance_with(
    field: &ExtensionField,
    g: &PolyMatrix,
    j: usize,
    engine: DistanceEngine,
    exec: Execution,
) -> Result<ColumnDistance> {
    if rank(field, &g.blocks[0]) != g.rows {
        return Err(Error::Precondition(Precondition::SingularLeadingBlock));
    }
    let t = truncate(field, g, j, MatrixKind::Generator);
    let messages = message_space(field, t.matrix.rows());
    let engine = match engine {
        DistanceEngine::Auto if messages <= ENUMERATION_LIMIT => DistanceEngine::MessageEnumeration,
        DistanceEngine::Auto => DistanceEngine::SupportEnumeration,
        e => e,
    };
    let distance = match engine {
        DistanceEngine::MessageEnumeration => {
            if messages > ENUMERATION_LIMIT {
                return Err(Error::Infeasible {
                    what: "column distance by message enumeration",
                    size: messages,
                    limit: ENUMERATION_LIMIT,
                });
            }
            distance_by_messages(field, &t.matrix, g.rows, exec)
        }
        _ => {
            let n = g.cols;
            let width = t.matrix.cols();
            let cap = ((n - g.rows.min(n)) * (j + 1) + 1).min(width);
            let subsets: u128 = (1..=cap).map(|w| binomial(width, w)).sum();
            if subsets > ENUMERATION_LIMIT {
                return Err(Error::Infeasible {
                    what: "column distance by support enumeration",
                    size: subsets,
                    limit: ENUMERATION_LIMIT,
                });
            }
            distance_by_supports(field, &t.matrix, g.rows, exec)
        }
    };
    Ok(ColumnDistance { j, distance, engine })
}

fn message_space(field: &ExtensionField, rows: usize) -> u128 {
    (field.order() as u128).checked_pow(rows as u32).unwrap_or(u128::MAX)
}

fn decode_message(field: &ExtensionField, mut idx: u64, len: usize) -> Vec<FieldElement> {
    (0..len)
        .map(|_| {
            let e = field.element(idx % field.order());
            idx /= field.order();
            e
        })
        .collect()
}

fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

fn distance_by_messages(field: &ExtensionField, m: &Matrix, k: usize, exec: Execution) -> usize {
    let total = message_space(field, m.rows()) as u64;
    let lead = field.order().pow(k as u32);
    par::map_reduce(
        exec,
        total,
        4096,
        usize::MAX,
        |range| {
            range
                .filter(|idx| idx % lead != 0)
                .map(|idx| weight(&vec_mat(field, &decode_message(field, idx, m.rows()), m)))
                .min()
                .unwrap_or(usize::MAX)
        },
        usize::min,
    )
}

/// Whether some `u` with `u_0 != 0` makes `u m` vanish outside `support`.
fn support_admits_codeword(field: &ExtensionField, m: &Matrix, k: usize, support: &[usize]) -> bool {
    let outside: Vec<usize> = (0..m.cols()).filter(|c| support.binary_search(c).is_err()).collect();
    let rest = m.select_columns(&outside);
    let lower: Vec<usize> = (k..m.rows()).collect();
    // dim{u : u rest = 0} exceeds dim{u : u rest = 0, u_0 = 0} iff the ranks differ by < k
    rank(field, &rest) - rank(field, &rest.select_rows(&lower)) < k
}

fn distance_by_supports(field: &ExtensionField, m: &Matrix, k: usize, exec: Execution) -> usize {
    let width = m.cols();
    for w in 1..=width {
        let total = binomial(width, w) as u64;
        let hit = par::find_first(exec, total, 256, |range| {
            let mut comb = unrank(range.start as u128, width, w);
            for _ in range {
                if support_admits_codeword(field, m, k, &comb) {
                    return Some(());
                }
                advance(&mut comb, width);
            }
            None
        });
        if hit.is_some() {
            return w;
        }
    }
    width
}

/// Minimum weight over nonzero messages of degree at most `max_deg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreeDistanceBound {
    pub weight: usize,
    pub max_deg: usize,
    /// Smallest message degree achieving `weight`.
    pub message_degree: usize,
    /// `message_degree < max_deg`.
    pub converged: bool,
}

pub fn free_distance_upper(field: &ExtensionField, g: &PolyMatrix, max_deg: usize) -> Result<FreeDistanceBound> {
    free_distance_upper_with(field, g, max_deg, Execution::default())
}

pub fn free_distance_upper_with(
    field: &ExtensionField,
    g: &PolyMatrix,
    max_deg: usize,
    exec: Execution,
) -> Result<FreeDistanceBound> {
    let k = g.rows;
    let len = k * (max_deg + 1);
    let total = message_space(field, len);
    if total > ENUMERATION_LIMIT {
        return Err(Error::Infeasible {
            what: "free distance enumeration",
            size: total,
            limit: ENUMERATION_LIMIT,
        });
    }
    let memory = g.blocks.len() - 1;
    // rows of G^c_{max_deg + m} for the message blocks u_0..u_{max_deg}
    let full = truncate(field, g, max_deg + memory, MatrixKind::Generator);
    let m = full.matrix.select_rows(&(0..len).collect::<Vec<_>>());
    let (weight, degree) = par::map_reduce(
        exec,
        total as u64,
        4096,
        (usize::MAX, usize::MAX),
        |range| {
            range
                .filter(|&idx| idx != 0)
                .map(|idx| {
                    let u = decode_message(field, idx, len);
                    let deg = (0..=max_deg)
                        .rev()
                        .find(|&d| u[d * k..(d + 1) * k].iter().any(|e| !e.is_zero()))
                        .unwrap_or(0);
                    (weight(&vec_mat(field, &u, &m)), deg)
                })
                .min()
                .unwrap_or((usize::MAX, usize::MAX))
        },
        std::cmp::min,
    );
    Ok(FreeDistanceBound {
        weight,
        max_deg,
        message_degree: degree,
        converged: degree < max_deg,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub j: usize,
    pub distance: usize,
    pub bound: usize,
    pub met: bool,
    pub engine: DistanceEngine,
}

/// Column distances `d_0^c .. d_jmax^c` with their bounds and derived flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub n: usize,
    pub k: usize,
    /// Known only for minimal generator matrices.
    pub delta: Option<usize>,
    pub rows: Vec<ProfileRow>,
    pub singleton: Option<SingletonData>,
    /// `None` when `jmax < L` or `delta` is unknown.
    pub is_mdp: Option<bool>,
    /// `None` when `jmax < M` or `delta` is unknown.
    pub is_strongly_mds: Option<bool>,
}

impl DistanceProfile {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("j,d_j_c,bound,met\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{}", r.j, r.distance, r.bound, if r.met { "yes" } else { "no" });
        }
        s
    }
}

pub fn distance_profile(field: &ExtensionField, g: &PolyMatrix, jmax: usize) -> Result<DistanceProfile> {
    distance_profile_with(field, g, jmax, DistanceEngine::Auto, Execution::default())
}

pub fn distance_profile_with(
    field: &ExtensionField,
    g: &PolyMatrix,
    jmax: usize,
    engine: DistanceEngine,
    exec: Execution,
) -> Result<DistanceProfile> {
    let (n, k) = (g.cols, g.rows);
    let delta = is_minimal(field, g)
        .then(|| degree_stats(g).map(|s| s.overall_constraint_length))
        .transpose()?;
    let singleton = delta.map(|d| singleton_data(n, k, d)).transpose()?;
    let bound = |j: usize| (n - k) * (j + 1) + 1;
    let rows = (0..=jmax)
        .map(|j| {
            let cd = column_distance_with(field, g, j, engine, exec)?;
            Ok(ProfileRow {
                j,
                distance: cd.distance,
                bound: bound(j),
                met: cd.distance == bound(j),
                engine: cd.engine,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let is_mdp = singleton.and_then(|s| rows.get(s.l).map(|r| r.met));
    let is_strongly_mds = singleton.and_then(|s| rows.get(s.m).map(|r| r.distance == s.free_bound));
    Ok(DistanceProfile {
        n,
        k,
        delta,
        rows,
        singleton,
        is_mdp,
        is_strongly_mds,
    })
}
