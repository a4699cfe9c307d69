//! JSON documents. Rationals are strings (`"3"`, `"-1/2"`); matrices and tensors are row-major
//! and carry the names of the spaces they connect.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use sdgla_core::dgla::{Dgla, SignEntry, VerificationReport};
use sdgla_core::hypercrossed::{CrossedModuleSpec, TwoCrossedModuleSpec};
use sdgla_core::lie::Tensor3;
use sdgla_core::simplicial::{MooreComplex, SimplicialLieAlgebra};
use sdgla_core::{AlgebraError, LieAlgebra, Matrix, Report, Q};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: malformed rational {value:?}")]
    Rational { context: String, value: String },
    #[error("{context}: expected {expected}, found {found}")]
    Shape { context: String, expected: String, found: String },
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Usage(String),
}

fn shape_err(context: &str, expected: impl ToString, found: impl ToString) -> InputError {
    InputError::Shape { context: context.to_string(), expected: expected.to_string(), found: found.to_string() }
}

fn parse_q(context: &str, s: &str) -> Result<Q, InputError> {
    s.parse().map_err(|_| InputError::Rational { context: context.to_string(), value: s.to_string() })
}

fn parse_all(context: &str, v: &[String]) -> Result<Vec<Q>, InputError> {
    v.iter().map(|s| parse_q(context, s)).collect()
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(Q::to_string).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Simplicial,
    CrossedModule,
    TwoCrossedModule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub commands: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_level: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: Kind,
    pub payload: serde_json::Value,
    #[serde(default)]
    pub options: Options,
}

/// Nonzero structure constants `[i, j, k, c]` meaning `c[i][j][k] = c`; both orders of `(i, j)` are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDoc {
    pub dim: usize,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub domain: String,
    pub codomain: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

/// `entries[(i * b + j) * c + k]` is the `k`-th coordinate of `T(e_i, e_j)` in `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub left: String,
    pub right: String,
    pub target: String,
    pub shape: [usize; 3],
    pub entries: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleDoc {
    pub d: LieDoc,
    pub h: LieDoc,
    pub delta1: MatrixDoc,
    pub action: TensorDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCrossedModuleDoc {
    pub k: LieDoc,
    pub d: LieDoc,
    pub h: LieDoc,
    pub delta1: MatrixDoc,
    pub delta2: MatrixDoc,
    pub action_d: TensorDoc,
    pub action_h: TensorDoc,
    pub pairing: TensorDoc,
}

/// `faces[n-1][i] : g{n} → g{n-1}` and `degeneracies[n][i] : g{n} → g{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialDoc {
    pub levels: Vec<LieDoc>,
    pub faces: Vec<Vec<MatrixDoc>>,
    pub degeneracies: Vec<Vec<MatrixDoc>>,
}

pub fn lie_to_doc(g: &LieAlgebra) -> LieDoc {
    let t = g.structure_constants();
    let n = g.dim();
    let mut sc = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in t.entry(i, j).iter().enumerate() {
                if !c.is_zero() {
                    sc.push((i, j, k, c.to_string()));
                }
            }
        }
    }
    LieDoc { dim: n, structure_constants: sc }
}

/// Builds the algebra without checking antisymmetry or Jacobi, so validators can report them.
pub fn lie_from_doc(context: &str, d: &LieDoc) -> Result<LieAlgebra, InputError> {
    let mut t = Tensor3::zeros(d.dim, d.dim, d.dim);
    for (i, j, k, c) in &d.structure_constants {
        if *i >= d.dim || *j >= d.dim || *k >= d.dim {
            return Err(shape_err(context, format!("indices below {}", d.dim), format!("({i}, {j}, {k})")));
        }
        t.entry_mut(*i, *j)[*k] = parse_q(context, c)?;
    }
    Ok(LieAlgebra::from_constants_unchecked(t))
}

pub fn matrix_to_doc(m: &Matrix, domain: &str, codomain: &str) -> MatrixDoc {
    MatrixDoc {
        domain: domain.to_string(),
        codomain: codomain.to_string(),
        rows: m.rows(),
        cols: m.cols(),
        entries: strings(m.entries()),
    }
}

pub fn matrix_from_doc(context: &str, d: &MatrixDoc, domain: &str, codomain: &str, rows: usize, cols: usize) -> Result<Matrix, InputError> {
    if d.domain != domain || d.codomain != codomain {
        return Err(shape_err(context, format!("map {domain} -> {codomain}"), format!("map {} -> {}", d.domain, d.codomain)));
    }
    if (d.rows, d.cols) != (rows, cols) || d.entries.len() != rows * cols {
        return Err(shape_err(context, format!("{rows}x{cols} matrix"), format!("{}x{} with {} entries", d.rows, d.cols, d.entries.len())));
    }
    Ok(Matrix::from_row_major(rows, cols, parse_all(context, &d.entries)?))
}

pub fn tensor_to_doc(t: &Tensor3, left: &str, right: &str, target: &str) -> TensorDoc {
    let (a, b, c) = t.shape();
    TensorDoc {
        left: left.to_string(),
        right: right.to_string(),
        target: target.to_string(),
        shape: [a, b, c],
        entries: strings(t.flat()),
    }
}

pub fn tensor_from_doc(context: &str, d: &TensorDoc, tags: [&str; 3], shape: [usize; 3]) -> Result<Tensor3, InputError> {
    if [d.left.as_str(), d.right.as_str(), d.target.as_str()] != tags {
        return Err(shape_err(context, format!("{tags:?}"), format!("{:?}", [&d.left, &d.right, &d.target])));
    }
    let [a, b, c] = shape;
    if d.shape != shape || d.entries.len() != a * b * c {
        return Err(shape_err(context, format!("shape {shape:?}"), format!("shape {:?} with {} entries", d.shape, d.entries.len())));
    }
    Ok(Tensor3::from_flat(a, b, c, parse_all(context, &d.entries)?))
}

pub fn crossed_module_to_doc(s: &CrossedModuleSpec) -> CrossedModuleDoc {
    CrossedModuleDoc {
        d: lie_to_doc(&s.d),
        h: lie_to_doc(&s.h),
        delta1: matrix_to_doc(&s.delta1, "h", "d"),
        action: tensor_to_doc(&s.action, "d", "h", "h"),
    }
}

pub fn crossed_module_from_doc(doc: &CrossedModuleDoc) -> Result<CrossedModuleSpec, InputError> {
    let d = lie_from_doc("d", &doc.d)?;
    let h = lie_from_doc("h", &doc.h)?;
    let (nd, nh) = (d.dim(), h.dim());
    Ok(CrossedModuleSpec {
        delta1: matrix_from_doc("delta1", &doc.delta1, "h", "d", nd, nh)?,
        action: tensor_from_doc("action", &doc.action, ["d", "h", "h"], [nd, nh, nh])?,
        d,
        h,
    })
}

pub fn two_crossed_module_to_doc(s: &TwoCrossedModuleSpec) -> TwoCrossedModuleDoc {
    TwoCrossedModuleDoc {
        k: lie_to_doc(&s.k),
        d: lie_to_doc(&s.d),
        h: lie_to_doc(&s.h),
        delta1: matrix_to_doc(&s.delta1, "d", "k"),
        delta2: matrix_to_doc(&s.delta2, "h", "d"),
        action_d: tensor_to_doc(&s.action_d, "k", "d", "d"),
        action_h: tensor_to_doc(&s.action_h, "k", "h", "h"),
        pairing: tensor_to_doc(&s.pairing, "d", "d", "h"),
    }
}

pub fn two_crossed_module_from_doc(doc: &TwoCrossedModuleDoc) -> Result<TwoCrossedModuleSpec, InputError> {
    let k = lie_from_doc("k", &doc.k)?;
    let d = lie_from_doc("d", &doc.d)?;
    let h = lie_from_doc("h", &doc.h)?;
    let (nk, nd, nh) = (k.dim(), d.dim(), h.dim());
    Ok(TwoCrossedModuleSpec {
        delta1: matrix_from_doc("delta1", &doc.delta1, "d", "k", nk, nd)?,
        delta2: matrix_from_doc("delta2", &doc.delta2, "h", "d", nd, nh)?,
        action_d: tensor_from_doc("action_d", &doc.action_d, ["k", "d", "d"], [nk, nd, nd])?,
        action_h: tensor_from_doc("action_h", &doc.action_h, ["k", "h", "h"], [nk, nh, nh])?,
        pairing: tensor_from_doc("pairing", &doc.pairing, ["d", "d", "h"], [nd, nd, nh])?,
        k,
        d,
        h,
    })
}

fn level_tag(n: usize) -> String {
    format!("g{n}")
}

pub fn simplicial_to_doc(g: &SimplicialLieAlgebra) -> SimplicialDoc {
    let k = g.truncation();
    SimplicialDoc {
        levels: (0..=k).map(|n| lie_to_doc(g.level(n))).collect(),
        faces: (1..=k)
            .map(|n| (0..=n).map(|i| matrix_to_doc(g.face(n, i), &level_tag(n), &level_tag(n - 1))).collect())
            .collect(),
        degeneracies: (0..k)
            .map(|n| (0..=n).map(|i| matrix_to_doc(g.degeneracy(n, i), &level_tag(n), &level_tag(n + 1))).collect())
            .collect(),
    }
}

/// Shapes are checked here; Jacobi and the simplicial identities are left to the validators.
pub fn simplicial_from_doc(doc: &SimplicialDoc) -> Result<(Vec<LieAlgebra>, SimplicialLieAlgebra), InputError> {
    if doc.levels.is_empty() {
        return Err(shape_err("levels", "at least one level", 0));
    }
    let levels: Vec<LieAlgebra> =
        doc.levels.iter().enumerate().map(|(n, l)| lie_from_doc(&level_tag(n), l)).collect::<Result<_, _>>()?;
    let k = levels.len() - 1;
    if doc.faces.len() != k || doc.degeneracies.len() != k {
        return Err(shape_err("faces/degeneracies", format!("{k} levels of maps"), format!("{} and {}", doc.faces.len(), doc.degeneracies.len())));
    }
    let mut faces = Vec::new();
    for (idx, row) in doc.faces.iter().enumerate() {
        let n = idx + 1;
        if row.len() != n + 1 {
            return Err(shape_err(&format!("faces at level {n}"), n + 1, row.len()));
        }
        let ctx = format!("face at level {n}");
        faces.push(
            row.iter()
                .map(|m| matrix_from_doc(&ctx, m, &level_tag(n), &level_tag(n - 1), levels[n - 1].dim(), levels[n].dim()))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let mut degeneracies = Vec::new();
    for (n, row) in doc.degeneracies.iter().enumerate() {
        if row.len() != n + 1 {
            return Err(shape_err(&format!("degeneracies at level {n}"), n + 1, row.len()));
        }
        let ctx = format!("degeneracy at level {n}");
        degeneracies.push(
            row.iter()
                .map(|m| matrix_from_doc(&ctx, m, &level_tag(n), &level_tag(n + 1), levels[n + 1].dim(), levels[n].dim()))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let g = SimplicialLieAlgebra::new(levels.clone(), faces, degeneracies)?;
    Ok((levels, g))
}

/// A parsed input, before any mathematical validation.
#[derive(Clone, Debug)]
pub enum Input {
    Simplicial { levels: Vec<LieAlgebra>, g: SimplicialLieAlgebra },
    CrossedModule(CrossedModuleSpec),
    TwoCrossedModule(TwoCrossedModuleSpec),
}

pub fn parse_input(bytes: &[u8]) -> Result<(Input, Options), InputError> {
    let doc: InputDocument = serde_json::from_slice(bytes)?;
    let input = match doc.kind {
        Kind::Simplicial => {
            let (levels, g) = simplicial_from_doc(&serde_json::from_value(doc.payload)?)?;
            Input::Simplicial { levels, g }
        }
        Kind::CrossedModule => Input::CrossedModule(crossed_module_from_doc(&serde_json::from_value(doc.payload)?)?),
        Kind::TwoCrossedModule => {
            Input::TwoCrossedModule(two_crossed_module_from_doc(&serde_json::from_value(doc.payload)?)?)
        }
    };
    Ok((input, doc.options))
}

pub fn input_document(kind: Kind, payload: impl Serialize, options: Options) -> InputDocument {
    InputDocument { kind, payload: serde_json::to_value(payload).expect("documents serialize"), options }
}

// Output.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub law: String,
    pub levels: Vec<usize>,
    pub witness: Vec<usize>,
    pub detail: String,
}

pub fn report_to_doc(r: &Report) -> Vec<ViolationDoc> {
    r.violations
        .iter()
        .map(|v| ViolationDoc { law: v.law.clone(), levels: v.levels.clone(), witness: v.witness.clone(), detail: v.detail.clone() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input_sha256: String,
    pub tool: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MooreDoc {
    pub length: usize,
    pub level_dims: Vec<usize>,
    pub dims: Vec<usize>,
    /// `deltas[n-1] : N{n} → N{n-1}` in the bases below.
    pub deltas: Vec<MatrixDoc>,
    /// `bases[n]` lists the basis of `N{n}` as vectors of `g{n}`.
    pub bases: Vec<Vec<Vec<String>>>,
}

pub fn moore_to_doc(g: &SimplicialLieAlgebra, m: &MooreComplex) -> MooreDoc {
    let k = m.truncation();
    MooreDoc {
        length: m.length(),
        level_dims: (0..=k).map(|n| g.dim(n)).collect(),
        dims: m.dims(),
        deltas: (1..=k).map(|n| matrix_to_doc(m.delta(n), &format!("N{n}"), &format!("N{}", n - 1))).collect(),
        bases: (0..=k).map(|n| m.space(n).basis().iter().map(|b| strings(b)).collect()).collect(),
    }
}

fn degree_tag(n: usize) -> String {
    if n == 0 {
        "L0".to_string()
    } else {
        format!("L-{n}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTableDoc {
    pub degrees: [usize; 2],
    pub table: TensorDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DglaDoc {
    pub top: usize,
    pub dims: Vec<usize>,
    /// `d_n : L-n → L-(n-1)` for `n = 1..top`.
    pub differential: Vec<MatrixDoc>,
    pub brackets: Vec<BracketTableDoc>,
}

pub fn dgla_to_doc(l: &Dgla) -> DglaDoc {
    DglaDoc {
        top: l.top(),
        dims: l.dims().to_vec(),
        differential: (1..=l.top()).map(|n| matrix_to_doc(l.differential(n), &degree_tag(n), &degree_tag(n - 1))).collect(),
        brackets: l
            .bracket_tables()
            .iter()
            .map(|(&(a, b), t)| BracketTableDoc {
                degrees: [a, b],
                table: tensor_to_doc(t, &degree_tag(a), &degree_tag(b), &degree_tag(a + b)),
            })
            .collect(),
    }
}

pub fn dgla_from_doc(doc: &DglaDoc) -> Result<Dgla, InputError> {
    if doc.dims.len() != doc.top + 1 || doc.differential.len() != doc.top {
        return Err(shape_err("dgla", format!("{} degrees", doc.top + 1), doc.dims.len()));
    }
    let mut differential = vec![Matrix::zeros(0, doc.dims[0])];
    for (idx, m) in doc.differential.iter().enumerate() {
        let n = idx + 1;
        differential.push(matrix_from_doc("differential", m, &degree_tag(n), &degree_tag(n - 1), doc.dims[n - 1], doc.dims[n])?);
    }
    let mut brackets = BTreeMap::new();
    for b in &doc.brackets {
        let [n1, n2] = b.degrees;
        if n1 + n2 > doc.top {
            return Err(shape_err("bracket degrees", format!("sum at most {}", doc.top), n1 + n2));
        }
        let tags = [degree_tag(n1), degree_tag(n2), degree_tag(n1 + n2)];
        let t = tensor_from_doc(
            "bracket",
            &b.table,
            [tags[0].as_str(), tags[1].as_str(), tags[2].as_str()],
            [doc.dims[n1], doc.dims[n2], doc.dims[n1 + n2]],
        )?;
        brackets.insert((n1, n2), t);
    }
    Ok(Dgla::new(doc.dims.clone(), differential, brackets)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignEntryDoc {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub degrees: [usize; 2],
    pub prose: i32,
    pub forward: i32,
    pub reverse: i32,
}

fn sign_entry_doc(e: &SignEntry) -> SignEntryDoc {
    SignEntryDoc {
        n: e.pair.n,
        alpha: e.pair.alpha.descending(),
        beta: e.pair.beta.descending(),
        degrees: [e.pair.alpha_degree(), e.pair.beta_degree()],
        prose: e.prose,
        forward: e.forward,
        reverse: e.reverse,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportsDoc {
    pub axioms: Vec<ViolationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<ViolationDoc>>,
    pub checked: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sign_table: Vec<SignEntryDoc>,
}

pub fn verification_to_doc(r: &VerificationReport, with_oracle: bool) -> ReportsDoc {
    ReportsDoc {
        axioms: report_to_doc(&r.axioms),
        oracle: with_oracle.then(|| report_to_doc(&r.oracle)),
        checked: r.checked.clone(),
        sign_table: r.sign_table.iter().map(sign_entry_doc).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub level: usize,
    /// Linear coefficients `N{m} → N{level}`, keyed by `m`.
    pub linear: Vec<(usize, MatrixDoc)>,
    pub brackets: Vec<BracketTableDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub provenance: Provenance,
    pub command: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_stage: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default)]
    pub validation: Vec<ViolationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moore: Option<MooreDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dgla: Option<DglaDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reports: Option<ReportsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
}
