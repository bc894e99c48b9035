//! Certified unimodular rows, coordinate powers, skew completions and the
//! completion `K(V)` of `(v_1², v_2, …, v_n)` with its elementary
//! certificate `V = (1 ⊥ K)·ε`.
//!
//! Every construction here re-checks its postconditions exactly and fails
//! with [`Error::Construction`] rather than return an unverified object.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::alternating::{congruence, pfaffian, psi, AlternatingMatrix};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};
use crate::word::{apply_word, ElementaryWord, Side};

/// A row `v` with a witness `w`, `⟨v, w⟩ = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedRow {
    v: Vec<Elem>,
    w: Vec<Elem>,
}

pub fn inner(v: &[Elem], w: &[Elem]) -> Elem {
    let ring = v[0].ring();
    v.iter()
        .zip(w)
        .fold(ring.zero(), |acc, (a, b)| &acc + &(a * b))
}

/// Accepts `(v, w)` iff `⟨v, w⟩` normalizes to 1.
pub fn certify_row(v: Vec<Elem>, w: Vec<Elem>) -> Result<CertifiedRow> {
    if v.len() != w.len() {
        return Err(Error::Dimension(format!(
            "row has length {}, witness has length {}",
            v.len(),
            w.len()
        )));
    }
    if v.len() < 2 {
        return Err(Error::Dimension("rows need length at least 2".into()));
    }
    let ring = v[0].ring().clone();
    if let Some(bad) = v.iter().chain(&w).find(|e| e.ring() != &ring) {
        return Err(Error::RingMismatch(bad.ring().spec(), ring.spec()));
    }
    let value = inner(&v, &w);
    if !value.is_one() {
        return Err(Error::NotUnimodular(value.to_string()));
    }
    Ok(CertifiedRow { v, w })
}

impl CertifiedRow {
    pub fn parse<S: AsRef<str>>(ring: &Ring, v: &[S], w: &[S]) -> Result<Self> {
        let p = |xs: &[S]| {
            xs.iter()
                .map(|s| ring.parse(s.as_ref()))
                .collect::<Result<Vec<_>>>()
        };
        certify_row(p(v)?, p(w)?)
    }

    pub fn v(&self) -> &[Elem] {
        &self.v
    }

    pub fn w(&self) -> &[Elem] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn ring(&self) -> &Ring {
        self.v[0].ring()
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// `(v_0ⁿ, v_1, …)`; the witness comes from expanding `1 = (s + t)ⁿ` with
/// `s = v_0 w_0` and regrouping every term containing `t` by coordinate.
pub fn power_first(row: &CertifiedRow, n: u32) -> Result<CertifiedRow> {
    if n == 0 {
        return Err(Error::Invalid("power must be at least 1".into()));
    }
    let ring = row.ring();
    let s = &row.v[0] * &row.w[0];
    let t = inner(&row.v[1..], &row.w[1..]);
    // Σ_{k<n} C(n,k) s^k t^{n-1-k}
    let tail = (0..n).fold(ring.zero(), |acc, k| {
        let c = ring.from_i64(binomial(n, k));
        &acc + &(&(&c * &s.pow(k)) * &t.pow(n - 1 - k))
    });
    let mut v = row.v.clone();
    let mut w: Vec<Elem> = row.w.iter().map(|x| x * &tail).collect();
    v[0] = row.v[0].pow(n);
    w[0] = row.w[0].pow(n);
    certify_row(v, w).map_err(|e| Error::Construction(format!("power witness: {e}")))
}

/// `(…, v_{n-1}, v_nᵏ)`, mirror of [`power_first`].
pub fn power_last(row: &CertifiedRow, n: u32) -> Result<CertifiedRow> {
    let flip = |xs: &[Elem]| xs.iter().rev().cloned().collect::<Vec<_>>();
    let reversed = CertifiedRow {
        v: flip(&row.v),
        w: flip(&row.w),
    };
    let out = power_first(&reversed, n)?;
    Ok(CertifiedRow {
        v: flip(&out.v),
        w: flip(&out.w),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Explicit4x4,
    FromCompletion,
    Search,
    Supplied,
}

/// An invertible alternating `V` with `e_1 V = (0, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCompletion {
    row: CertifiedRow,
    matrix: AlternatingMatrix,
    provenance: Provenance,
}

impl SkewCompletion {
    /// Reads `v` off the first row of `V` and derives a witness from the
    /// first column of `adj(V)`, scaled by `det(V)⁻¹ = pf(V)⁻²`.
    pub fn from_alternating(v: AlternatingMatrix, provenance: Provenance) -> Result<Self> {
        let n = v.size();
        if n < 4 || n % 2 == 1 {
            return Err(Error::Dimension(format!(
                "skew completions need even size at least 4, got {n}"
            )));
        }
        let first = v.first_row();
        if !first[0].is_zero() {
            return Err(Error::NonzeroDiagonal(1));
        }
        let pf = pfaffian(&v)?;
        let ring = v.ring().clone();
        let pf_inv = ring
            .is_unit(&pf)
            .inverse()
            .ok_or_else(|| Error::PfaffianNotUnit(pf.to_string()))?;
        let det_inv = &pf_inv * &pf_inv;
        let adj = v.matrix().adjugate()?;
        let w: Vec<Elem> = (1..n).map(|k| adj.at(k, 0) * &det_inv).collect();
        let row = certify_row(first[1..].to_vec(), w)?;
        Ok(SkewCompletion {
            row,
            matrix: v,
            provenance,
        })
    }

    pub fn row(&self) -> &CertifiedRow {
        &self.row
    }

    pub fn matrix(&self) -> &AlternatingMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn pfaffian(&self) -> Elem {
        pfaffian(&self.matrix).expect("even size")
    }
}

/// The 4×4 completion of a length-3 row whose Pfaffian is `⟨v, w⟩`.
pub fn skew4(row: &CertifiedRow) -> Result<SkewCompletion> {
    let (v, w) = (&row.v, &row.w);
    let matrix = skew4_matrix(v, w)?;
    let pf = pfaffian(&matrix)?;
    if pf != inner(v, w) {
        return Err(Error::Construction(format!(
            "pfaffian {pf} differs from <v,w>"
        )));
    }
    Ok(SkewCompletion {
        row: row.clone(),
        matrix,
        provenance: Provenance::Explicit4x4,
    })
}

/// The matrix of [`skew4`] for arbitrary `v, w` of length 3, without
/// requiring `⟨v, w⟩ = 1`.
pub fn skew4_matrix(v: &[Elem], w: &[Elem]) -> Result<AlternatingMatrix> {
    if v.len() != 3 || w.len() != 3 {
        return Err(Error::Dimension(format!(
            "skew4 needs length 3 rows, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    let ring = v[0].ring();
    let z = ring.zero();
    let rows = vec![
        vec![z.clone(), v[0].clone(), v[1].clone(), v[2].clone()],
        vec![-&v[0], z.clone(), w[2].clone(), -&w[1]],
        vec![-&v[1], -&w[2], z.clone(), w[0].clone()],
        vec![-&v[2], w[1].clone(), -&w[0], z],
    ];
    AlternatingMatrix::new(Matrix::from_rows(ring, rows)?)
}

/// `V = (1 ⊥ σ)ᵗ ψ_r (1 ⊥ σ)` for `σ` of odd size `2r - 1`, `det σ = 1`.
pub fn skew_from_completion(sigma: &Matrix) -> Result<SkewCompletion> {
    if !sigma.is_square() {
        return Err(Error::NotSquare {
            rows: sigma.rows(),
            cols: sigma.cols(),
        });
    }
    let n = sigma.rows();
    if n % 2 == 0 || n < 3 {
        return Err(Error::Dimension(format!(
            "skew completion from a completion needs odd size at least 3, got {n}"
        )));
    }
    let d = sigma.det()?;
    if !d.is_one() {
        return Err(Error::DeterminantNotOne(d.to_string()));
    }
    let ring = sigma.ring();
    let alpha = sigma.one_perp();
    let v = congruence(&psi(ring, (n + 1) / 2), &alpha)?;
    let inv = sigma.adjugate()?;
    let w: Vec<Elem> = (0..n).map(|k| inv.at(k, 0).clone()).collect();
    let row = certify_row(sigma.row(1), w)?;
    if v.first_row()[1..] != *row.v() || !v.first_row()[0].is_zero() {
        return Err(Error::Construction("first row is not (0, e1 sigma)".into()));
    }
    Ok(SkewCompletion {
        row,
        matrix: v,
        provenance: Provenance::FromCompletion,
    })
}

/// `K` with first row `(v_1², v_2, …, v_n)` and `det K = 1`, plus an
/// elementary word `ε` with `(1 ⊥ K)·E(ε) = V` when one was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub k: Matrix,
    pub target: Vec<Elem>,
    pub certificate: Option<ElementaryWord>,
}

/// Builds `K(V)` and its certificate for any skew completion with
/// `det V = 1`.
///
/// Outline, with `N = 2r = n + 1` and `B` the lower right `n×n` block of `V`:
///
/// 1. Column operations `F1, F2` turn `V` into `[[1, 0], [-vᵗ, K']]` with
///    `K' = B + vᵗv`, so `det K' = 1` and `e_1K' = t` with `t_1 = v_1²`.
/// 2. The Laplace expansion of `det V` along its first two rows reads
///    `1 = v_1·A + S`, which yields `x` with `u·x = 1` and `(t - u)·x = 0`
///    for the target `u`.
/// 3. `β = I + x(u - t)` is a transvection carrying `t` to `u`; it is
///    factored into elementary letters and `K = K'β`.
/// 4. `ε = (1 ⊥ β)⁻¹ · L · F2⁻¹ · F1⁻¹` where `L` clears the first column.
pub fn krusemeyer_complete(s: &SkewCompletion) -> Result<CompletionResult> {
    let vmat = s.matrix.matrix();
    let ring = vmat.ring().clone();
    let big_n = vmat.rows();
    let n = big_n - 1;
    let det = vmat.det()?;
    if !det.is_one() {
        return Err(Error::DeterminantNotOne(det.to_string()));
    }
    let v: Vec<Elem> = s.row.v.clone();
    let zero = ring.zero();

    // (1) column reduction
    let adj = vmat.adjugate()?;
    let y: Vec<Elem> = (1..big_n).map(|k| adj.at(k, 0).clone()).collect();
    let mut f1 = ElementaryWord::empty(&ring, big_n);
    for (j, yj) in y.iter().enumerate() {
        f1.push_nonzero(j + 2, 1, yj.clone());
    }
    let mut f2 = ElementaryWord::empty(&ring, big_n);
    for (j, vj) in v.iter().enumerate() {
        f2.push_nonzero(1, j + 2, -vj);
    }
    let reduced = apply_word(
        &apply_word(vmat, &f1, Side::Right, false)?,
        &f2,
        Side::Right,
        false,
    )?;
    if !reduced.at(0, 0).is_one() || (1..big_n).any(|c| !reduced.at(0, c).is_zero()) {
        return Err(Error::Construction(
            "column reduction did not clear the first row".into(),
        ));
    }
    let tail: Vec<usize> = (1..big_n).collect();
    let k_prime = reduced.select(&tail, &tail);
    let m_col: Vec<Elem> = (1..big_n).map(|r| reduced.at(r, 0).clone()).collect();
    let t = k_prime.row(1);

    // (2) common witness for u and t
    let mut u = v.clone();
    u[0] = v[0].pow(2);
    let d: Vec<Elem> = t.iter().zip(&u).map(|(a, b)| a - b).collect();
    let x = laplace_witness(vmat, &d)?;
    if !inner(&u, &x).is_one() || !inner(&d, &x).is_zero() {
        return Err(Error::Construction(
            "witness x fails u.x = 1 or (t-u).x = 0".into(),
        ));
    }

    // (3) the transvection β = I + x(u - t) as a word
    let yrow: Vec<Elem> = d.iter().map(|e| -e).collect();
    let beta_word = transvection_word(&ring, &x, &yrow, &u)?;
    let mut beta = Matrix::identity(&ring, n);
    for r in 0..n {
        for c in 0..n {
            let e = beta.at(r, c) + &(&x[r] * &yrow[c]);
            beta.set(r, c, e);
        }
    }
    // a wrong factorization of β surfaces in the certificate check below
    let k = k_prime.mul(&beta)?;
    if k.row(1) != u {
        return Err(Error::Construction(
            "first row of K is not the target".into(),
        ));
    }
    let kdet = k.det()?;
    if !kdet.is_one() {
        return Err(Error::Construction(format!("det K = {kdet}")));
    }

    // (4) certificate
    let l_vec: Vec<Elem> = {
        let adj_k = k_prime.adjugate()?;
        (0..n)
            .map(|r| (0..n).fold(zero.clone(), |acc, c| &acc + &(adj_k.at(r, c) * &m_col[c])))
            .collect()
    };
    let mut l_word = ElementaryWord::empty(&ring, big_n);
    for (j, lj) in l_vec.iter().enumerate() {
        l_word.push_nonzero(j + 2, 1, lj.clone());
    }
    let eps = beta_word
        .shifted(1, big_n)?
        .inverse()
        .concat(&l_word)?
        .concat(&f2.inverse())?
        .concat(&f1.inverse())?;
    let check = apply_word(&k.one_perp(), &eps, Side::Right, false)?;
    if check != *vmat {
        return Err(Error::Construction("(1 ⊥ K)·ε differs from V".into()));
    }
    Ok(CompletionResult {
        k,
        target: u,
        certificate: Some(eps),
    })
}

/// `x` with `x_1 = A²` and `x' = Σ β_kl (d_l e_k - d_k e_l)`, from
/// `det V = v_1·A + S` expanded along rows 1 and 2 of `V`.
///
/// Minors of rows 1, 2 touching column 1 or 2 are multiples of `v_1`;
/// for the others `d_l u_k - d_k u_l` equals the minor itself, so
/// `u·x = v_1²A² + (2v_1A + S)·S = (v_1A + S)² = 1` while `d·x = 0`.
fn laplace_witness(vmat: &Matrix, d: &[Elem]) -> Result<Vec<Elem>> {
    let ring = vmat.ring();
    let big_n = vmat.rows();
    let n = big_n - 1;
    let rest: Vec<usize> = (2..big_n).collect();
    let cofactor = |k: usize, l: usize| -> Result<Elem> {
        let cols: Vec<usize> = (0..big_n).filter(|&c| c != k && c != l).collect();
        let minor = vmat.select(&rest, &cols).det()?;
        // (-1)^{1+2+(k+1)+(l+1)} with 0-based k, l
        Ok(if (k + l) % 2 == 0 { -minor } else { minor })
    };
    let v1 = vmat.at(0, 1);
    // minors on columns (0, l) and (1, l) are v_1·V[0][l] and v_1·V[1][l]
    let mut a = ring.zero();
    for l in 1..big_n {
        a = &a + &(vmat.at(0, l) * &cofactor(0, l)?);
    }
    for l in 2..big_n {
        a = &a + &(vmat.at(1, l) * &cofactor(1, l)?);
    }
    let mut pairs = Vec::new();
    let mut s = ring.zero();
    for k in 2..big_n {
        for l in k + 1..big_n {
            let c = cofactor(k, l)?;
            let minor = &(vmat.at(0, k) * vmat.at(1, l)) - &(vmat.at(0, l) * vmat.at(1, k));
            s = &s + &(&minor * &c);
            pairs.push((k, l, c));
        }
    }
    if !(&(v1 * &a) + &s).is_one() {
        return Err(Error::Construction(
            "Laplace expansion does not give det V = 1".into(),
        ));
    }
    let scale = &(&ring.from_i64(2) * &(v1 * &a)) + &s;
    let mut x = vec![ring.zero(); n];
    x[0] = &a * &a;
    for (k, l, c) in pairs {
        // V column k is K index k - 1
        let (kk, ll) = (k - 1, l - 1);
        let b = &c * &scale;
        x[kk] = &x[kk] + &(&b * &d[ll]);
        x[ll] = &x[ll] - &(&b * &d[kk]);
    }
    Ok(x)
}

/// Elementary factorization of `I + x·y` (column `x`, row `y`) given
/// `y·x = 0` and a row `z` with `z·x = 1`.
///
/// `y = Σ_{i<j} c_ij (x_j e_i - x_i e_j)` with `c_ij = y_i z_j - y_j z_i`;
/// each summand contributes one commutator `[E_ik(x_i)E_jk(x_j),
/// E_ki(c x_j)E_kj(-c x_i)]` and the letters `E_ki(c x_k x_j)
/// E_kj(-c x_k x_i)` for the remaining `k`. Needs size 1 or at least 3.
pub fn transvection_word(
    ring: &Ring,
    x: &[Elem],
    y: &[Elem],
    z: &[Elem],
) -> Result<ElementaryWord> {
    let n = x.len();
    let mut word = ElementaryWord::empty(ring, n);
    if n == 2 {
        return Err(Error::Dimension(
            "transvection factorization needs size 1 or at least 3".into(),
        ));
    }
    for i in 0..n {
        for j in i + 1..n {
            let c = &(&y[i] * &z[j]) - &(&y[j] * &z[i]);
            if c.is_zero() {
                continue;
            }
            let k0 = (0..n).find(|&k| k != i && k != j).expect("n >= 3");
            let (i1, j1, k1) = (i + 1, j + 1, k0 + 1);
            let cxi = &c * &x[i];
            let cxj = &c * &x[j];
            word.push_nonzero(i1, k1, x[i].clone());
            word.push_nonzero(j1, k1, x[j].clone());
            word.push_nonzero(k1, i1, cxj.clone());
            word.push_nonzero(k1, j1, -&cxi);
            word.push_nonzero(j1, k1, -&x[j]);
            word.push_nonzero(i1, k1, -&x[i]);
            word.push_nonzero(k1, j1, cxi.clone());
            word.push_nonzero(k1, i1, -&cxj);
            for k in (0..n).filter(|&k| k != i && k != j) {
                word.push_nonzero(k + 1, i1, &x[k] * &cxj);
                word.push_nonzero(k + 1, j1, -(&x[k] * &cxi));
            }
        }
    }
    Ok(word)
}

/// Whether `(1 ⊥ K)·E(ε) = V`.
pub fn verify_certificate(v: &Matrix, k: &Matrix, eps: &ElementaryWord) -> Result<bool> {
    if eps.size() != v.rows() || k.rows() + 1 != v.rows() {
        return Err(Error::Dimension(format!(
            "certificate of size {} for a {}x{} matrix and K of size {}",
            eps.size(),
            v.rows(),
            v.cols(),
            k.rows()
        )));
    }
    Ok(apply_word(&k.one_perp(), eps, Side::Right, false)? == *v)
}

/// `W = (1 ⊥ K)ᵗ ψ_r (1 ⊥ K)`, a Pfaffian-one completion of `e_1 K`.
pub fn square_witt_rep(result: &CompletionResult, r: usize) -> Result<AlternatingMatrix> {
    let n = result.k.rows();
    if n + 1 != 2 * r {
        return Err(Error::Dimension(format!(
            "1 + size(K) = {} but 2r = {}",
            n + 1,
            2 * r
        )));
    }
    let w = congruence(&psi(result.k.ring(), r), &result.k.one_perp())?;
    let pf = pfaffian(&w)?;
    if !pf.is_one() {
        return Err(Error::PfaffianNotOne(pf.to_string()));
    }
    Ok(w)
}

/// Whether `σ` completes `row`: first row equal and `det σ = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionReport {
    pub first_row_matches: bool,
    pub det: String,
    pub det_is_one: bool,
}

impl CompletionReport {
    pub fn passed(&self) -> bool {
        self.first_row_matches && self.det_is_one
    }
}

pub fn verify_completion(row: &[Elem], sigma: &Matrix) -> Result<CompletionReport> {
    if !sigma.is_square() || sigma.rows() != row.len() {
        return Err(Error::Dimension(format!(
            "row of length {} against a {}x{} matrix",
            row.len(),
            sigma.rows(),
            sigma.cols()
        )));
    }
    let det = sigma.det()?;
    Ok(CompletionReport {
        first_row_matches: sigma.row(1) == row,
        det: det.to_string(),
        det_is_one: det.is_one(),
    })
}

/// One sampled point of the candidate tangent field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentSample {
    pub point: Vec<String>,
    pub field: Vec<String>,
    pub inner_product: String,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub first_row_is_position: bool,
    pub det_is_one: bool,
    pub samples: Vec<TangentSample>,
}

impl TangentReport {
    /// What every sample would show if `σ` were a genuine completion.
    pub fn consistent_with_completion(&self) -> bool {
        self.first_row_is_position
            && self.det_is_one
            && self
                .samples
                .iter()
                .all(|s| s.inner_product == "0" && !s.vanishes)
    }

    pub fn vanishing_points(&self) -> Vec<&TangentSample> {
        self.samples.iter().filter(|s| s.vanishes).collect()
    }
}

/// Evaluates the second row of `(σ⁻¹)ᵗ`, taken as `adj(σ)ᵗ`, at rational
/// points of the zero set of the ring's relation.
///
/// Diagnostic only. The precondition on `σ` is reported, not enforced, so
/// that arbitrary candidates can be probed.
pub fn tangent_check(sigma: &Matrix, points: &[Vec<BigRational>]) -> Result<TangentReport> {
    let ring = sigma.ring();
    if !sigma.is_square() || sigma.rows() != 3 || ring.vars().len() != 3 {
        return Err(Error::Dimension(
            "tangent check needs a 3x3 matrix over a ring in three variables".into(),
        ));
    }
    let relation = ring
        .relation_elem()
        .ok_or_else(|| Error::Invalid(format!("{} is not a quotient ring", ring.spec())))?;
    let position: Vec<Elem> = (0..3).map(|k| ring.var_at(k)).collect();
    let det = sigma.det()?;
    let adj = sigma.adjugate()?;
    let field: Vec<Elem> = (0..3).map(|k| adj.at(k, 1).clone()).collect();
    let mut samples = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != 3 {
            return Err(Error::Dimension(
                "sample points need three coordinates".into(),
            ));
        }
        if !relation.evaluate(p)?.is_zero() {
            return Err(Error::Invalid(format!(
                "point ({}) is not on the zero set of the relation",
                p.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        let values = field
            .iter()
            .map(|f| f.evaluate(p))
            .collect::<Result<Vec<BigRational>>>()?;
        let ip = values
            .iter()
            .zip(p)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
        samples.push(TangentSample {
            point: p.iter().map(ToString::to_string).collect(),
            field: values.iter().map(ToString::to_string).collect(),
            inner_product: ip.to_string(),
            vanishes: values.iter().all(Zero::is_zero),
        });
    }
    Ok(TangentReport {
        first_row_is_position: sigma.row(1) == position,
        det_is_one: det.is_one(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_ring, ratio};

    fn sphere() -> Ring {
        parse_ring("Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)").unwrap()
    }

    fn sphere_row() -> CertifiedRow {
        let r = sphere();
        CertifiedRow::parse(&r, &["x0", "x1", "x2"], &["x0", "x1", "x2"]).unwrap()
    }

    #[test]
    fn certify() {
        let q = Ring::rationals();
        assert!(CertifiedRow::parse(&q, &["1", "0", "0"], &["1", "0", "0"]).is_ok());
        assert_eq!(
            CertifiedRow::parse(&q, &["2", "0"], &["1", "0"]).unwrap_err(),
            Error::NotUnimodular("2".into())
        );
        sphere_row();
    }

    #[test]
    fn powers() {
        let r = parse_ring("Q[a,b,c,p,q,s]/(a*p+b*q+c*s-1)").unwrap();
        let row = CertifiedRow::parse(&r, &["a", "b", "c"], &["p", "q", "s"]).unwrap();
        let sq = power_first(&row, 2).unwrap();
        assert_eq!(sq.v()[0], r.parse("a^2").unwrap());
        assert_eq!(power_first(&row, 1).unwrap(), row);
        let cube = power_last(&row, 3).unwrap();
        assert_eq!(cube.v()[2], r.parse("c^3").unwrap());
        let z6 = Ring::modular(6).unwrap();
        let row = CertifiedRow::parse(&z6, &["5", "2", "3"], &["5", "0", "0"]).unwrap();
        let sq = power_first(&row, 2).unwrap();
        assert_eq!(sq.v(), &[z6.one(), z6.from_i64(2), z6.from_i64(3)]);
        let q = Ring::rationals();
        let e = CertifiedRow::parse(&q, &["1", "0"], &["1", "0"]).unwrap();
        assert_eq!(power_last(&e, 5).unwrap().v(), e.v());
    }

    #[test]
    fn skew4_on_sphere() {
        let s = skew4(&sphere_row()).unwrap();
        assert!(s.pfaffian().is_one());
        assert_eq!(s.provenance(), Provenance::Explicit4x4);
    }

    #[test]
    fn from_identity() {
        let q = Ring::rationals();
        let s = skew_from_completion(&Matrix::identity(&q, 3)).unwrap();
        assert_eq!(*s.matrix(), psi(&q, 2));
        let res = krusemeyer_complete(&s).unwrap();
        assert_eq!(res.k.row(1), vec![q.one(), q.zero(), q.zero()]);
    }

    #[test]
    fn transvection_words_expand_correctly() {
        let r = parse_ring("Q[a,b,c,p,q,s]/(a*p+b*q+c*s-1)").unwrap();
        let x: Vec<Elem> = ["a", "b", "c"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let z: Vec<Elem> = ["p", "q", "s"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        // y·x = 0 for y = (b, -a, 0) + (0, c, -b)
        let y: Vec<Elem> = ["b", "c - a", "-b"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let w = transvection_word(&r, &x, &y, &z).unwrap();
        let mut expected = Matrix::identity(&r, 3);
        for i in 0..3 {
            for j in 0..3 {
                let e = expected.at(i, j) + &(&x[i] * &y[j]);
                expected.set(i, j, e);
            }
        }
        assert_eq!(w.expand(), expected);
    }

    #[test]
    fn sphere_completion() {
        let s = skew4(&sphere_row()).unwrap();
        let res = krusemeyer_complete(&s).unwrap();
        let r = sphere();
        assert_eq!(
            res.k.row(1),
            ["x0^2", "x1", "x2"].map(|e| r.parse(e).unwrap()).to_vec()
        );
        assert!(res.k.det().unwrap().is_one());
        let w = square_witt_rep(&res, 2).unwrap();
        assert_eq!(w.first_row()[1], r.parse("x0^2").unwrap());
    }

    #[test]
    fn verify_reports() {
        let q = Ring::rationals();
        let row = vec![q.one(), q.zero()];
        let bad = Matrix::from_rows(&q, vec![row.clone(), vec![q.zero(), q.from_i64(2)]]).unwrap();
        let rep = verify_completion(&row, &bad).unwrap();
        assert!(rep.first_row_matches && !rep.det_is_one && rep.det == "2");
        assert!(verify_completion(&row, &Matrix::identity(&q, 2))
            .unwrap()
            .passed());
    }

    #[test]
    fn tangent_vanishing_detected() {
        let r = sphere();
        // first row is the position vector but the matrix is not invertible
        let sigma = Matrix::parse(
            &r,
            &[
                vec!["x0", "x1", "x2"],
                vec!["0", "x2", "-x1"],
                vec!["0", "0", "0"],
            ],
        )
        .unwrap();
        let points = vec![
            vec![ratio(1, 1), ratio(0, 1), ratio(0, 1)],
            vec![ratio(3, 5), ratio(4, 5), ratio(0, 1)],
            vec![ratio(0, 1), ratio(3, 5), ratio(4, 5)],
        ];
        let rep = tangent_check(&sigma, &points).unwrap();
        assert!(rep.first_row_is_position && !rep.det_is_one);
        assert!(rep.samples[0].vanishes);
        assert!(!rep.consistent_with_completion());
        assert!(matches!(
            tangent_check(&sigma, &[vec![ratio(1, 1), ratio(1, 1), ratio(0, 1)]]),
            Err(Error::Invalid(_))
        ));
    }
}
