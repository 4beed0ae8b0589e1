//! Unit-memory `(n, k, delta = k)` codes `G(D) = G_0 + G_1 D` over `F_{q^{2k}}`
//! whose coefficient matrices are column-scaled skew Vandermonde matrices.
//!
//! For distinct `lambda_1..lambda_n` in `F_q` define, in the polynomial basis,
//!
//! * `alpha_i = (1, lambda_i, .., lambda_i^{k-1}, 0, .., 0)`
//! * `beta_i  = (1, lambda_i, .., lambda_i^{2k-1})`
//!
//! and set `G_0[j][i] = N_j(^{alpha_i} 1) alpha_i`, `G_1[j][i] = N_j(^{beta_i} gamma) beta_i`.
//! The `alpha`s and the `beta`s live in different conjugacy classes (those of
//! `1` and of `gamma`), which is what makes the sliding matrix `G_1^c` MDP
//! whenever `n > 2k`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combin::{advance, binomial};
use crate::conv::{is_dual_mdp_with, is_mdp_with, is_minimal, PolyMatrix};
use crate::error::{Error, Precondition, Result};
use crate::gf::{next_prime, ExtensionField, FieldDescriptor, FieldElement};
use crate::linalg::{determinant, rank, Matrix};
use crate::par::Execution;
use crate::skew::{conjugate, norm_iterate};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoints {
    pub lambdas: Vec<u64>,
    pub alphas: Vec<FieldElement>,
    pub betas: Vec<FieldElement>,
}

/// `0, 1, .., n-1`.
pub fn canonical_lambdas(n: usize) -> Vec<u64> {
    (0..n as u64).collect()
}

/// The first `n` entries of a seeded shuffle of `F_q`.
pub fn permuted_lambdas(q: u64, n: usize, seed: u64) -> Vec<u64> {
    let mut all: Vec<u64> = (0..q).collect();
    all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    all.truncate(n);
    all
}

/// Smallest prime `>= max(3, n)`.
pub fn default_q(n: usize) -> u64 {
    next_prime((n as u64).max(3))
}

pub fn build_points(field: &ExtensionField, k: usize, lambdas: &[u64]) -> Result<EvaluationPoints> {
    let (q, t, n) = (field.q(), field.t(), lambdas.len());
    if k == 0 || t != 2 * k {
        return Err(Error::Parameters(format!("need k >= 1 and t = 2k, got k = {k}, t = {t}")));
    }
    if (n as u64) > q {
        return Err(Error::NotEnoughLambdas { n, q });
    }
    let mut seen = lambdas.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n {
        return Err(Error::Parameters("evaluation points lambda_i must be distinct".into()));
    }
    if let Some(&bad) = lambdas.iter().find(|&&l| l >= q) {
        return Err(Error::CoordinateRange { value: bad, q });
    }
    let base = field.base();
    let powers = |lambda: u64, len: usize| -> Vec<u64> {
        (0..t)
            .map(|e| if e < len { base.pow(lambda as u32, e as u64) as u64 } else { 0 })
            .collect()
    };
    let alphas = lambdas
        .iter()
        .map(|&l| field.from_coords(&powers(l, k)))
        .collect::<Result<Vec<_>>>()?;
    let betas = lambdas
        .iter()
        .map(|&l| field.from_coords(&powers(l, t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(EvaluationPoints {
        lambdas: lambdas.to_vec(),
        alphas,
        betas,
    })
}

/// Assembles `(G_0, G_1)` from the evaluation points.
pub fn build_generator(field: &ExtensionField, k: usize, points: &EvaluationPoints) -> Result<(Matrix, Matrix)> {
    let n = points.alphas.len();
    let mut g0 = Matrix::zeros(field, k, n);
    let mut g1 = Matrix::zeros(field, k, n);
    for i in 0..n {
        let (alpha, beta) = (points.alphas[i], points.betas[i]);
        let a = conjugate(field, field.one(), alpha)?;
        let b = conjugate(field, field.gamma(), beta)?;
        for j in 0..k {
            g0.set(j, i, field.mul(norm_iterate(field, j, a), alpha));
            g1.set(j, i, field.mul(norm_iterate(field, j, b), beta));
        }
    }
    Ok((g0, g1))
}

/// A unit-memory convolutional code `G(D) = G_0 + G_1 D`.
#[derive(Clone, Debug)]
pub struct ConvCode {
    pub n: usize,
    pub k: usize,
    pub field: ExtensionField,
    pub lambdas: Vec<u64>,
    pub g0: Matrix,
    pub g1: Matrix,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ConstructOptions {
    /// Base field size; defaults to the smallest prime `>= max(3, n)`.
    pub q: Option<u64>,
    /// Shuffle the `lambda`s instead of taking `0..n`.
    pub lambda_seed: Option<u64>,
}

impl ConvCode {
    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn t(&self) -> usize {
        self.field.t()
    }

    pub fn generator(&self) -> PolyMatrix {
        PolyMatrix::unit_memory(self.g0.clone(), self.g1.clone()).expect("blocks share a shape")
    }

    /// `true` when `n > 2k`, the regime where the MDP property is guaranteed.
    pub fn mdp_hypothesis_met(&self) -> bool {
        self.n > 2 * self.k
    }

    pub fn hypothesis_warning(&self) -> Option<String> {
        (!self.mdp_hypothesis_met()).then(|| {
            let rel = if self.n == 2 * self.k { "=" } else { "<" };
            format!(
                "n {rel} 2k ({} {rel} {}): MDP guarantee requires n > 2k; the code is built but not certified MDP",
                self.n,
                2 * self.k
            )
        })
    }

    pub fn points(&self) -> Result<EvaluationPoints> {
        build_points(&self.field, self.k, &self.lambdas)
    }
}

/// Builds the code without running any verification.
pub fn assemble_code(n: usize, k: usize, opts: ConstructOptions) -> Result<ConvCode> {
    if k == 0 || k >= n {
        return Err(Error::Parameters(format!("need 0 < k < n, got n = {n}, k = {k}")));
    }
    let q = opts.q.unwrap_or_else(|| default_q(n));
    if q < 3 {
        return Err(Error::BaseTooSmall(q));
    }
    if (n as u64) > q {
        return Err(Error::NotEnoughLambdas { n, q });
    }
    let field = ExtensionField::new(q, 2 * k)?;
    let lambdas = match opts.lambda_seed {
        Some(seed) => permuted_lambdas(q, n, seed),
        None => canonical_lambdas(n),
    };
    let points = build_points(&field, k, &lambdas)?;
    let (g0, g1) = build_generator(&field, k, &points)?;
    Ok(ConvCode {
        n,
        k,
        field,
        lambdas,
        g0,
        g1,
    })
}

/// Builds the code and checks the submatrix and minimality properties.
pub fn construct_code(n: usize, k: usize, opts: ConstructOptions) -> Result<ConvCode> {
    let code = assemble_code(n, k, opts)?;
    let report = verify_construction(&code);
    if !report.passed {
        return Err(Error::Verification(format!(
            "constructed matrices failed their structural checks: {report:?}"
        )));
    }
    Ok(code)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmatrixCheck {
    pub checked: u64,
    /// 1-based columns of the first singular `k x k` submatrix.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub passed: bool,
    pub g0_submatrices: SubmatrixCheck,
    pub g1_submatrices: SubmatrixCheck,
    /// Rank of the highest-order coefficient matrix.
    pub highest_order_rank: usize,
    pub minimal: bool,
}

fn square_submatrices(field: &ExtensionField, m: &Matrix) -> SubmatrixCheck {
    let (k, n) = (m.rows(), m.cols());
    let mut comb: Vec<usize> = (0..k).collect();
    let mut checked = 0;
    if k > n {
        return SubmatrixCheck { checked, witness: None };
    }
    loop {
        checked += 1;
        if determinant(field, &m.select_columns(&comb)).expect("square").is_zero() {
            return SubmatrixCheck {
                checked,
                witness: Some(comb.iter().map(|c| c + 1).collect()),
            };
        }
        if !advance(&mut comb, n) {
            return SubmatrixCheck { checked, witness: None };
        }
    }
}

/// Every `k x k` submatrix of `G_0` and `G_1` is nonsingular and `G(D)` is minimal.
pub fn verify_construction(code: &ConvCode) -> ConstructionReport {
    let f = &code.field;
    let g = code.generator();
    let g0_submatrices = square_submatrices(f, &code.g0);
    let g1_submatrices = square_submatrices(f, &code.g1);
    let highest_order_rank = rank(f, &crate::conv::highest_order_matrix(f, &g));
    let minimal = is_minimal(f, &g);
    ConstructionReport {
        passed: g0_submatrices.witness.is_none() && g1_submatrices.witness.is_none() && minimal,
        g0_submatrices,
        g1_submatrices,
        highest_order_rank,
        minimal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdpReport {
    pub is_mdp: bool,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub minors_checked: u64,
    /// 1-based columns of the first vanishing admissible minor.
    pub witness: Option<Vec<usize>>,
    /// `(n-k)(L+1)+1`, the column distance certified at `j = L`.
    pub column_distance_at_l: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub dual_mdp: bool,
    /// Parameters of the dual code `(n, n-k, delta = k)`.
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub minors_checked: u64,
    pub witness: Option<Vec<usize>>,
}

/// Certifies the code as `(n, k, delta = k)` MDP via the minors of `G_L^c`.
///
/// Refuses codes with `n <= 2k`.
pub fn verify_mdp(code: &ConvCode) -> Result<MdpReport> {
    verify_mdp_with(code, Execution::default())
}

pub fn verify_mdp_with(code: &ConvCode, exec: Execution) -> Result<MdpReport> {
    if !code.mdp_hypothesis_met() {
        return Err(Error::Precondition(Precondition::RateAtLeastHalf { n: code.n, k: code.k }));
    }
    let v = is_mdp_with(&code.field, &code.generator(), exec)?;
    Ok(MdpReport {
        is_mdp: v.is_mdp,
        n: v.n,
        k: v.k,
        delta: v.delta,
        l: v.l,
        minors_checked: v.check.qualifying,
        column_distance_at_l: v.is_mdp.then(|| (v.n - v.k) * (v.l + 1) + 1),
        witness: v.check.witness,
    })
}

/// Treats `G(D)` as a parity-check matrix and certifies the dual `(n, n-k, k)` code as MDP.
pub fn verify_dual_mdp(code: &ConvCode) -> Result<DualReport> {
    verify_dual_mdp_with(code, Execution::default())
}

pub fn verify_dual_mdp_with(code: &ConvCode, exec: Execution) -> Result<DualReport> {
    let v = is_dual_mdp_with(&code.field, &code.generator(), exec)?;
    Ok(DualReport {
        dual_mdp: v.is_mdp,
        n: v.n,
        k: v.k,
        delta: v.delta,
        l: v.l,
        minors_checked: v.check.qualifying,
        witness: v.check.witness,
    })
}

/// `|F| = q^{2k}` against the `q <= 2 max(3, n)` prime-gap budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSizeReport {
    pub q: u64,
    pub t: usize,
    pub field_size: u64,
    pub q_limit: u64,
    pub within_limit: bool,
    /// `(2n)^{2k}`, the size budget the construction stays under.
    pub size_budget: u128,
}

pub fn field_size_report(code: &ConvCode) -> FieldSizeReport {
    let q_limit = 2 * (code.n as u64).max(3);
    FieldSizeReport {
        q: code.q(),
        t: code.t(),
        field_size: code.field.order(),
        q_limit,
        within_limit: code.q() <= q_limit,
        size_budget: (q_limit as u128).pow(code.t() as u32),
    }
}

/// Every check a code file records about itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub passed: bool,
    pub construction: ConstructionReport,
    /// Absent when `n <= 2k`.
    pub mdp: Option<MdpReport>,
    pub dual: Option<DualReport>,
    pub field_size: FieldSizeReport,
}

pub fn verify_all(code: &ConvCode) -> VerificationSummary {
    let construction = verify_construction(code);
    let (mdp, dual) = if code.mdp_hypothesis_met() && construction.passed {
        (verify_mdp(code).ok(), verify_dual_mdp(code).ok())
    } else {
        (None, None)
    };
    let passed = construction.passed
        && mdp.as_ref().is_none_or(|m| m.is_mdp)
        && dual.as_ref().is_none_or(|d| d.dual_mdp)
        && (code.mdp_hypothesis_met() == mdp.is_some());
    VerificationSummary {
        passed,
        construction,
        mdp,
        dual,
        field_size: field_size_report(code),
    }
}

/// On-disk form of a code, `schema = 1`. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub t: usize,
    pub field: FieldDescriptor,
    pub lambdas: Vec<u64>,
    #[serde(rename = "G0")]
    pub g0: Vec<Vec<Vec<u64>>>,
    #[serde(rename = "G1")]
    pub g1: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<VerificationSummary>,
}

fn matrix_coords(field: &ExtensionField, m: &Matrix) -> Vec<Vec<Vec<u64>>> {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|e| field.to_coords(e)).collect())
        .collect()
}

fn matrix_from_coords(field: &ExtensionField, rows: &[Vec<Vec<u64>>], k: usize, n: usize, name: &str) -> Result<Matrix> {
    if rows.len() != k || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Schema(format!("{name} must be a {k} x {n} matrix")));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|c| field.from_coords(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Schema(format!("{name}: {e}")))?;
    Matrix::from_rows(rows)
}

impl CodeFile {
    pub fn from_code(code: &ConvCode, verified: Option<VerificationSummary>) -> Self {
        CodeFile {
            schema: SCHEMA_VERSION,
            n: code.n,
            k: code.k,
            q: code.q(),
            t: code.t(),
            field: code.field.descriptor(),
            lambdas: code.lambdas.clone(),
            g0: matrix_coords(&code.field, &code.g0),
            g1: matrix_coords(&code.field, &code.g1),
            verified,
        }
    }

    /// Validates the file and rebuilds the code exactly as stored.
    pub fn to_code(&self) -> Result<ConvCode> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Schema(format!("unsupported schema {}", self.schema)));
        }
        if self.field.q != self.q || self.field.t != self.t {
            return Err(Error::Schema("field descriptor disagrees with q, t".into()));
        }
        if self.k == 0 || self.k >= self.n {
            return Err(Error::Schema(format!("need 0 < k < n, got n = {}, k = {}", self.n, self.k)));
        }
        if self.lambdas.len() != self.n {
            return Err(Error::Schema(format!("expected {} lambdas", self.n)));
        }
        let field = ExtensionField::from_descriptor(&self.field).map_err(|e| Error::Schema(e.to_string()))?;
        let g0 = matrix_from_coords(&field, &self.g0, self.k, self.n, "G0")?;
        let g1 = matrix_from_coords(&field, &self.g1, self.k, self.n, "G1")?;
        Ok(ConvCode {
            n: self.n,
            k: self.k,
            field,
            lambdas: self.lambdas.clone(),
            g0,
            g1,
        })
    }
}

/// Number of admissible `G_1^c` minors for a unit-memory `(n, k)` code: `sum_{a<=k} C(n,a) C(n,2k-a)`.
pub fn unit_memory_minor_count(n: usize, k: usize) -> u128 {
    (0..=k).map(|a| binomial(n, a) * binomial(n, 2 * k - a)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &ExtensionField, c: &[u64]) -> FieldElement {
        f.from_coords(c).unwrap()
    }

    #[test]
    fn points_31() {
        let f = ExtensionField::new(3, 2).unwrap();
        let p = build_points(&f, 1, &canonical_lambdas(3)).unwrap();
        assert_eq!(p.lambdas, vec![0, 1, 2]);
        assert_eq!(p.alphas, vec![f.one(); 3]);
        assert_eq!(p.betas, vec![f.one(), el(&f, &[1, 1]), el(&f, &[1, 2])]);
    }

    #[test]
    fn points_errors() {
        let f = ExtensionField::new(3, 2).unwrap();
        assert!(matches!(
            build_points(&f, 1, &canonical_lambdas(4)),
            Err(Error::NotEnoughLambdas { n: 4, q: 3 })
        ));
        assert!(build_points(&f, 1, &[0, 0, 1]).is_err());
        assert!(build_points(&f, 2, &[0, 1]).is_err());
        assert!(matches!(
            assemble_code(4, 1, ConstructOptions { q: Some(3), lambda_seed: None }),
            Err(Error::NotEnoughLambdas { .. })
        ));
    }

    #[test]
    fn alphas_independent_52() {
        let f = ExtensionField::new(5, 4).unwrap();
        let p = build_points(&f, 2, &canonical_lambdas(5)).unwrap();
        let base = ExtensionField::prime(5).unwrap();
        for a in 0..5 {
            for b in a + 1..5 {
                let (x, y) = (f.to_coords(p.alphas[a]), f.to_coords(p.alphas[b]));
                let m = Matrix::from_rows(vec![
                    vec![base.from_base(x[0]), base.from_base(x[1])],
                    vec![base.from_base(y[0]), base.from_base(y[1])],
                ])
                .unwrap();
                assert!(!determinant(&base, &m).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn generator_31() {
        let code = construct_code(3, 1, ConstructOptions { q: Some(3), lambda_seed: None }).unwrap();
        let f = &code.field;
        assert_eq!(code.g0.row(0), &[f.one(); 3]);
        assert_eq!(code.g1.row(0), &[f.one(), el(f, &[1, 1]), el(f, &[1, 2])]);
    }

    #[test]
    fn generator_52_second_row() {
        let code = construct_code(5, 2, ConstructOptions::default()).unwrap();
        let f = &code.field;
        let p = code.points().unwrap();
        assert_eq!(code.q(), 5);
        assert_eq!(code.t(), 4);
        for i in 0..5 {
            assert_eq!(code.g0.get(0, i), p.alphas[i]);
            assert_eq!(code.g0.get(1, i), f.pow(p.alphas[i], 5));
            // conjugation collapses to a (q-1)-th power over a commutative field
            let a = p.alphas[i];
            assert_eq!(conjugate(f, f.one(), a).unwrap(), f.pow(a, 4));
            let b = p.betas[i];
            assert_eq!(conjugate(f, f.gamma(), b).unwrap(), f.mul(f.pow(b, 4), f.gamma()));
        }
        let r = verify_construction(&code);
        assert!(r.passed);
        assert_eq!((r.g0_submatrices.checked, r.g1_submatrices.checked), (10, 10));
    }

    #[test]
    fn tampered_g1_fails() {
        let mut code = construct_code(5, 2, ConstructOptions::default()).unwrap();
        for r in 0..2 {
            let v = code.g1.get(r, 0);
            code.g1.set(r, 1, v);
        }
        let r = verify_construction(&code);
        assert!(!r.passed);
        assert_eq!(r.g1_submatrices.witness, Some(vec![1, 2]));
        assert!(r.g0_submatrices.witness.is_none());
    }

    #[test]
    fn mdp_31_and_dual() {
        let code = construct_code(3, 1, ConstructOptions::default()).unwrap();
        let m = verify_mdp(&code).unwrap();
        assert!(m.is_mdp);
        assert_eq!((m.delta, m.l, m.minors_checked, m.column_distance_at_l), (1, 1, 12, Some(5)));
        let d = verify_dual_mdp(&code).unwrap();
        assert!(d.dual_mdp);
        assert_eq!((d.n, d.k, d.delta, d.l), (3, 2, 1, 1));
    }

    #[test]
    fn rate_half_is_built_with_warning() {
        let code = construct_code(4, 2, ConstructOptions { q: Some(5), lambda_seed: None }).unwrap();
        assert!(code.hypothesis_warning().unwrap().starts_with("n = 2k"));
        assert!(matches!(
            verify_mdp(&code),
            Err(Error::Precondition(Precondition::RateAtLeastHalf { n: 4, k: 2 }))
        ));
        let s = verify_all(&code);
        assert!(s.passed);
        assert!(s.mdp.is_none());
    }

    #[test]
    fn lambda_seed_permutes() {
        let a = permuted_lambdas(7, 5, 42);
        assert_eq!(a, permuted_lambdas(7, 5, 42));
        let mut s = a.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 5);
        let code = construct_code(5, 2, ConstructOptions { q: Some(7), lambda_seed: Some(42) }).unwrap();
        assert_eq!(code.lambdas, a);
        assert!(verify_mdp(&code).unwrap().is_mdp);
    }

    #[test]
    fn file_round_trip() {
        let code = construct_code(5, 2, ConstructOptions::default()).unwrap();
        let file = CodeFile::from_code(&code, Some(verify_all(&code)));
        let text = serde_json::to_string(&file).unwrap();
        let back: CodeFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let code2 = back.to_code().unwrap();
        assert_eq!(code2.g0, code.g0);
        assert_eq!(code2.g1, code.g1);

        let mut bad = file.clone();
        bad.g0.pop();
        assert!(matches!(bad.to_code(), Err(Error::Schema(_))));
        let mut bad = file;
        bad.schema = 2;
        assert!(matches!(bad.to_code(), Err(Error::Schema(_))));
    }

    #[test]
    fn minor_count_formula() {
        assert_eq!(unit_memory_minor_count(3, 1), 12);
        assert_eq!(unit_memory_minor_count(5, 2), 155);
    }
}
