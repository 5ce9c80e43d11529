//! Modular data and the mapping class group representations it defines.
//!
//! Ising and SU(2)₂ share the S-matrix `[[1,√2,1],[√2,0,−√2],[1,−√2,1]]`
//! and differ in their twists. Both live exactly in `Q(ζ₁₆)` with
//! `A = e^{2πi/16}`: `√2 = A² − A⁶`, `e^{πi/8} = A`, `e^{3πi/8} = A³`.
//!
//! On the torus, `s ↦ S/D` and `t ↦ T = diag(θ)`. Words evaluated through
//! [`eval_word`] are exact; the large sweep in [`sweep_words`] is numeric.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{parse_fraction, CyclotomicField, LaurentPoly, Residue, DEFAULT_TOLERANCE};
use crate::error::Error;
use crate::surface::SpineGraph;

pub type Matrix = Vec<Vec<Residue>>;
type CMatrix = Vec<Vec<Complex64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    Ising,
    #[serde(rename = "SU2level2")]
    Su2Level2,
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s
            .to_ascii_lowercase()
            .replace(['_', '(', ')', ' ', '-'], "")
            .as_str()
        {
            "ising" => Ok(Theory::Ising),
            "su2level2" | "su22" | "su2k2" => Ok(Theory::Su2Level2),
            _ => Err(Error::InvalidInput(format!(
                "unknown theory {s:?}; expected Ising or SU2level2"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularDatum {
    pub name: String,
    pub labels: Vec<String>,
    field: Arc<CyclotomicField>,
    /// Unnormalised S; row 0 holds the quantum dimensions.
    s: Matrix,
    total_dimension: Residue,
    twists: Vec<Residue>,
    /// `fusion[a][b][c] = N_{ab}^c`.
    fusion: Vec<Vec<Vec<u32>>>,
    dual: Vec<usize>,
    /// `(numerator, denominator)`.
    pub central_charge: (i64, i64),
}

fn monomial(field: &Arc<CyclotomicField>, e: i64, c: i64) -> Residue {
    Residue::from_laurent(field, &LaurentPoly::monomial(e, c))
}

fn one(field: &Arc<CyclotomicField>) -> Residue {
    monomial(field, 0, 1)
}

/// Complex conjugate: `A ↦ A⁻¹` with rational coefficients.
pub fn conj(x: &Residue) -> Residue {
    let (num, den) = x.parts();
    let flipped = LaurentPoly::from_terms(num.terms().iter().map(|(e, c)| (-e, c.clone())));
    let field = x.field();
    Residue::from_laurent(field, &flipped)
        .div(&Residue::from_laurent(
            field,
            &LaurentPoly::constant(den.clone()),
        ))
        .expect("denominator is a non-zero integer")
}

pub fn pow(x: &Residue, e: u64) -> Residue {
    let mut acc = one(x.field());
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let field = a[0][0].field().clone();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(Residue::zero(&field), |acc, l| {
                        acc.add(&a[i][l].mul(&b[l][j]))
                    })
                })
                .collect()
        })
        .collect()
}

fn identity(field: &Arc<CyclotomicField>, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        one(field)
                    } else {
                        Residue::zero(field)
                    }
                })
                .collect()
        })
        .collect()
}

fn conj_transpose(a: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| conj(&a[j][i])).collect())
        .collect()
}

fn mat_pow(m: &Matrix, inverse: &Matrix, e: i64) -> Matrix {
    let base = if e < 0 { inverse } else { m };
    let mut acc = identity(m[0][0].field(), m.len());
    for _ in 0..e.unsigned_abs() {
        acc = mat_mul(&acc, base);
    }
    acc
}

pub fn trace(m: &Matrix) -> Residue {
    let field = m[0][0].field().clone();
    (0..m.len()).fold(Residue::zero(&field), |acc, i| acc.add(&m[i][i]))
}

pub fn to_complex(m: &Matrix) -> CMatrix {
    m.iter()
        .map(|r| r.iter().map(Residue::eval).collect())
        .collect()
}

impl ModularDatum {
    pub fn builtin(theory: Theory) -> Self {
        let f = CyclotomicField::new(16);
        let a = |e| monomial(&f, e, 1);
        let sqrt2 = a(2).add(&a(6).neg());
        let o = one(&f);
        let z = Residue::zero(&f);
        let s = vec![
            vec![o.clone(), sqrt2.clone(), o.clone()],
            vec![sqrt2.clone(), z.clone(), sqrt2.neg()],
            vec![o.clone(), sqrt2.neg(), o.clone()],
        ];
        let (name, theta1, c) = match theory {
            Theory::Ising => ("Ising", a(1), (1, 2)),
            Theory::Su2Level2 => ("SU2level2", a(3), (3, 2)),
        };
        let mut fusion = vec![vec![vec![0u32; 3]; 3]; 3];
        for (x, y, zz) in [
            (0, 0, 0),
            (0, 1, 1),
            (0, 2, 2),
            (1, 1, 0),
            (1, 1, 2),
            (1, 2, 1),
            (2, 2, 0),
        ] {
            fusion[x][y][zz] = 1;
            fusion[y][x][zz] = 1;
        }
        Self {
            name: name.into(),
            labels: vec!["0".into(), "1".into(), "2".into()],
            field: f.clone(),
            s,
            total_dimension: monomial(&f, 0, 2),
            twists: vec![o, theta1, monomial(&f, 0, -1)],
            fusion,
            dual: vec![0, 1, 2],
            central_charge: c,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn s_matrix(&self) -> &Matrix {
        &self.s
    }

    pub fn twists(&self) -> &[Residue] {
        &self.twists
    }

    pub fn total_dimension(&self) -> &Residue {
        &self.total_dimension
    }

    pub fn fusion(&self, a: usize, b: usize, c: usize) -> u32 {
        self.fusion[a][b][c]
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    /// Row 0 of S divided by `S₀₀`.
    pub fn quantum_dimensions(&self) -> Vec<Residue> {
        self.s[0]
            .iter()
            .map(|x| x.div(&self.s[0][0]).expect("S00 is non-zero"))
            .collect()
    }

    /// `S / D`.
    pub fn s_normalized(&self) -> Matrix {
        let inv = self.total_dimension.inverse().expect("D is non-zero");
        self.s
            .iter()
            .map(|r| r.iter().map(|x| x.mul(&inv)).collect())
            .collect()
    }

    pub fn t_matrix(&self) -> Matrix {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            self.twists[i].clone()
                        } else {
                            Residue::zero(&self.field)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.rank();
        let bad = |m: String| {
            Err(Error::InvalidInput(format!(
                "modular datum {}: {m}",
                self.name
            )))
        };
        if n == 0 {
            return bad("no labels".into());
        }
        if self.s.len() != n || self.s.iter().any(|r| r.len() != n) {
            return bad("S is not square of the label count".into());
        }
        if self.twists.len() != n || self.dual.len() != n {
            return bad("twists or duals have the wrong length".into());
        }
        if self.dual.iter().any(|&d| d >= n) || (0..n).any(|a| self.dual[self.dual[a]] != a) {
            return bad("duality is not an involution on the labels".into());
        }
        if (0..n).any(|i| (0..n).any(|j| self.s[i][j] != self.s[j][i])) {
            return bad("S is not symmetric".into());
        }
        for x in &self.s[0] {
            let v = x.eval();
            if v.re <= DEFAULT_TOLERANCE || v.im.abs() > DEFAULT_TOLERANCE {
                return bad(format!("quantum dimension {x} is not a positive real"));
            }
        }
        if !self.twists[0].is_one() {
            return bad("θ₀ ≠ 1".into());
        }
        if self
            .twists
            .iter()
            .any(|t| (t.eval().norm() - 1.0).abs() > DEFAULT_TOLERANCE)
        {
            return bad("a twist is not a unit complex number".into());
        }
        if self.total_dimension.is_zero() {
            return bad("total dimension is zero".into());
        }
        if self.fusion.len() != n
            || self
                .fusion
                .iter()
                .any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return bad("fusion tensor has the wrong shape".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.fusion[a][b][c] != self.fusion[b][a][c]
                        || self.fusion[a][b][c] != self.fusion[a][self.dual[c]][self.dual[b]]
                    {
                        return bad(format!("fusion rule N_{a}{b}^{c} breaks the symmetries"));
                    }
                }
            }
            if self.fusion[0][a][a] != 1 {
                return bad("label 0 is not a unit for fusion".into());
            }
        }
        if self.central_charge.1 == 0 {
            return bad("central charge has zero denominator".into());
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let j: ModularDatumJson = serde_json::from_str(text)?;
        let field = CyclotomicField::new(j.field_order);
        let scalar = |t: &str| -> Result<Residue, Error> {
            let (num, den) = parse_fraction(t)?;
            Residue::from_laurent(&field, &num)
                .div(&Residue::from_laurent(&field, &den))
                .ok_or_else(|| Error::Parse(format!("{t:?} has a vanishing denominator")))
        };
        let n = j.labels.len();
        let mut fusion = vec![vec![vec![0u32; n]; n]; n];
        for r in &j.fusion {
            let [a, b, c, mult] = *r;
            if a.max(b).max(c) as usize >= n {
                return Err(Error::InvalidInput(format!(
                    "fusion rule {r:?} uses an unknown label"
                )));
            }
            fusion[a as usize][b as usize][c as usize] = mult;
        }
        let md = Self {
            name: j.name,
            labels: j.labels,
            s: j.s
                .iter()
                .map(|r| r.iter().map(|x| scalar(x)).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?,
            total_dimension: scalar(&j.total_dimension)?,
            twists: j
                .twists
                .iter()
                .map(|x| scalar(x))
                .collect::<Result<_, _>>()?,
            fusion,
            dual: j.dual.unwrap_or_else(|| (0..n).collect()),
            central_charge: (j.central_charge[0], j.central_charge[1]),
            field,
        };
        md.validate()?;
        Ok(md)
    }

    pub fn to_json(&self) -> String {
        let n = self.rank();
        let mut fusion = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.fusion[a][b][c] > 0 {
                        fusion.push([a as u32, b as u32, c as u32, self.fusion[a][b][c]]);
                    }
                }
            }
        }
        let j = ModularDatumJson {
            name: self.name.clone(),
            labels: self.labels.clone(),
            field_order: self.field.order(),
            s: self
                .s
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            total_dimension: self.total_dimension.to_string(),
            twists: self.twists.iter().map(ToString::to_string).collect(),
            fusion,
            dual: Some(self.dual.clone()),
            central_charge: [self.central_charge.0, self.central_charge.1],
        };
        serde_json::to_string_pretty(&j).expect("datum serializes")
    }
}

/// On-disk form: scalars are written in `A = e^{2πi/fieldOrder}`; fusion
/// rules are `[a, b, c, N_ab^c]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ModularDatumJson {
    name: String,
    labels: Vec<String>,
    field_order: u64,
    s: Vec<Vec<String>>,
    total_dimension: String,
    twists: Vec<String>,
    fusion: Vec<[u32; 4]>,
    #[serde(default)]
    dual: Option<Vec<usize>>,
    central_charge: [i64; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
}

/// A product of powers of `s` and `t`, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MCGWord {
    pub factors: Vec<(Generator, i64)>,
}

impl MCGWord {
    /// `s^{a₁} t^{b₁} … s^{aₙ} t^{bₙ}`.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Self {
        let mut factors = Vec::new();
        for &(a, b) in blocks {
            factors.push((Generator::S, a));
            factors.push((Generator::T, b));
        }
        Self { factors }
    }

    pub fn t_power(m: i64) -> Self {
        Self {
            factors: vec![(Generator::T, m)],
        }
    }

    pub fn s_total(&self) -> i64 {
        self.exponent_sum(Generator::S)
    }

    pub fn t_total(&self) -> i64 {
        self.exponent_sum(Generator::T)
    }

    fn exponent_sum(&self, g: Generator) -> i64 {
        self.factors.iter().filter(|f| f.0 == g).map(|f| f.1).sum()
    }

    /// `Σa` even and `Σb ≡ 2 (mod 4)`.
    pub fn hypotheses_met(&self) -> bool {
        self.s_total().rem_euclid(2) == 0 && self.t_total().rem_euclid(4) == 2
    }
}

impl FromStr for MCGWord {
    type Err = Error;

    /// Accepts `s^2 t^6`, `s t s^-1`, `t^2*s`; an empty string is the empty
    /// word.
    fn from_str(text: &str) -> Result<Self, Error> {
        let b = text.as_bytes();
        let mut i = 0;
        let mut factors = Vec::new();
        let err =
            |i: usize, what: &str| Error::Parse(format!("{what} at byte {i} of word {text:?}"));
        while i < b.len() {
            let c = b[i];
            if c.is_ascii_whitespace() || c == b'*' || c == b'.' {
                i += 1;
                continue;
            }
            let g = match c {
                b's' | b'S' => Generator::S,
                b't' | b'T' => Generator::T,
                _ => return Err(err(i, "expected s or t")),
            };
            i += 1;
            let mut e = 1i64;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let start = i;
                if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                    i += 1;
                }
                if i < b.len() && b[i] == b'{' {
                    return Err(err(i, "braces are not supported"));
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                e = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "expected an integer exponent"))?;
            }
            factors.push((g, e));
        }
        Ok(Self { factors })
    }
}

impl fmt::Display for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(g, e)| {
                let name = match g {
                    Generator::S => "s",
                    Generator::T => "t",
                };
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for MCGWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MCGWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The product matrix with `s ↦ S/D`, `t ↦ T`.
pub fn eval_word(md: &ModularDatum, w: &MCGWord) -> Matrix {
    let s = md.s_normalized();
    let s_inv = conj_transpose(&s);
    let t = md.t_matrix();
    let t_inv = conj_transpose(&t);
    let mut acc = identity(&md.field, md.rank());
    for &(g, e) in &w.factors {
        let m = match g {
            Generator::S => mat_pow(&s, &s_inv, e),
            Generator::T => mat_pow(&t, &t_inv, e),
        };
        acc = mat_mul(&acc, &m);
    }
    acc
}

/// `|Tr|²` as an exact real element of the field.
pub fn trace_norm_squared(md: &ModularDatum, w: &MCGWord) -> Residue {
    let tr = trace(&eval_word(md, w));
    tr.mul(&conj(&tr))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub word: MCGWord,
    #[serde(rename = "trIsing")]
    pub tr_ising: f64,
    #[serde(rename = "trSU2")]
    pub tr_su2: f64,
    pub gap: f64,
    pub distinct: bool,
    #[serde(rename = "hypothesesMet")]
    pub hypotheses_met: bool,
}

/// Compares `|Tr|` of the word in the Ising and SU(2)₂ representations.
/// `distinct` is decided exactly, from `|Tr_I|² − |Tr_S|² ≠ 0`.
pub fn trace_distinguish(w: &MCGWord) -> TraceReport {
    let a = trace_norm_squared(&ModularDatum::builtin(Theory::Ising), w);
    let b = trace_norm_squared(&ModularDatum::builtin(Theory::Su2Level2), w);
    let (x, y) = (a.eval().re.max(0.0).sqrt(), b.eval().re.max(0.0).sqrt());
    TraceReport {
        word: w.clone(),
        tr_ising: x,
        tr_su2: y,
        gap: (x - y).abs(),
        distinct: !a.add(&b.neg()).is_zero(),
        hypotheses_met: w.hypotheses_met(),
    }
}

/// `λ` with `((S/D)·T)³ = λ·(S/D)²`, or `None` if no such scalar exists.
pub fn projective_phase(md: &ModularDatum) -> Option<Residue> {
    let s = md.s_normalized();
    let st = mat_mul(&s, &md.t_matrix());
    let lhs = mat_mul(&mat_mul(&st, &st), &st);
    let rhs = mat_mul(&s, &s);
    let n = md.rank();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !rhs[i][j].is_zero())?;
    let lambda = lhs[i][j].div(&rhs[i][j])?;
    for i in 0..n {
        for j in 0..n {
            if lhs[i][j] != rhs[i][j].mul(&lambda) {
                return None;
            }
        }
    }
    Some(lambda)
}

/// `e^{2πi c}`.
pub fn central_phase(md: &ModularDatum) -> Complex64 {
    let (p, q) = md.central_charge;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * p as f64 / q as f64)
}

/// Edge labellings of `spine` with non-zero fusion multiplicity at every
/// vertex. Non-loop edges vary slowest in index order, then loops in
/// reverse index order; on the dumbbell `(loop1, bridge, loop2) = (a, b, c)`
/// this lists `(0,0,0), (1,0,0), (2,0,0), (0,0,1), …, (1,2,1)`.
pub fn enumerate_labellings(spine: &SpineGraph, md: &ModularDatum) -> Vec<Vec<usize>> {
    let e = spine.edges().len();
    let mut order: Vec<usize> = (0..e).filter(|&i| !spine.is_loop(i)).collect();
    order.extend((0..e).filter(|&i| spine.is_loop(i)).rev());
    let n = md.rank();
    let total = n.pow(e as u32);
    let mut out = Vec::new();
    for code in 0..total {
        // the last entry of `order` varies fastest
        let mut labels = vec![0; e];
        let mut c = code;
        for &edge in order.iter().rev() {
            labels[edge] = c % n;
            c /= n;
        }
        let ok = spine
            .vertex_triples(&labels, |a| md.dual(a), 0)
            .iter()
            .all(|t| md.fusion(t[0], t[1], md.dual(t[2])) > 0);
        if ok {
            out.push(labels);
        }
    }
    out
}

/// Diagonal of the Dehn twist along the disk of `edge`, in the basis of
/// [`enumerate_labellings`].
pub fn twist_diagonal(
    spine: &SpineGraph,
    md: &ModularDatum,
    edge: &str,
) -> Result<Vec<Residue>, Error> {
    let e = spine
        .edge_index(edge)
        .ok_or_else(|| Error::InvalidInput(format!("unknown edge {edge:?}")))?;
    Ok(enumerate_labellings(spine, md)
        .iter()
        .map(|l| md.twists[l[e]].clone())
        .collect())
}

/// The twist about the first loop of the genus-2 dumbbell, as a diagonal.
pub fn genus2_twist_matrix(md: &ModularDatum) -> Vec<Residue> {
    twist_diagonal(&SpineGraph::dumbbell(), md, "loop1").expect("dumbbell has loop1")
}

/// `Tr(M^m)` for a diagonal `M`; negative powers use the conjugate.
pub fn diagonal_power_trace(diag: &[Residue], m: i64) -> Residue {
    let field = diag[0].field().clone();
    diag.iter().fold(Residue::zero(&field), |acc, x| {
        let base = if m < 0 { conj(x) } else { x.clone() };
        acc.add(&pow(&base, m.unsigned_abs()))
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub max_blocks: usize,
    pub exponent_bound: i64,
    pub words_checked: u64,
    pub failures: u64,
    pub min_gap: f64,
    /// Up to ten words whose gap is at most the threshold.
    pub examples: Vec<MCGWord>,
}

fn cmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn ctrace_product(a: &CMatrix, b: &CMatrix) -> Complex64 {
    let n = a.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a[i][j] * b[j][i])
        .sum()
}

/// Block matrices `S^a T^b` for `a, b ∈ [−bound, bound]`.
fn block_table(md: &ModularDatum, bound: i64) -> Vec<((i64, i64), CMatrix)> {
    let range = -bound..=bound;
    range
        .clone()
        .flat_map(|a| range.clone().map(move |b| (a, b)))
        .map(|(a, b)| {
            (
                (a, b),
                to_complex(&eval_word(md, &MCGWord::from_blocks(&[(a, b)]))),
            )
        })
        .collect()
}

/// Checks every word with at most `max_blocks` blocks `s^a t^b`,
/// `|a|, |b| ≤ bound`, `Σa` even and `Σb ≡ 2 (mod 4)`, for a gap between the
/// two `|Tr|` values above `threshold`.
pub fn sweep_words(max_blocks: usize, bound: i64, threshold: f64) -> SweepReport {
    let ti = block_table(&ModularDatum::builtin(Theory::Ising), bound);
    let ts = block_table(&ModularDatum::builtin(Theory::Su2Level2), bound);
    let n = ti.len();
    let rank = ti[0].1.len();
    let id: CMatrix = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    if i == j {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
                .collect()
        })
        .collect();

    #[derive(Default)]
    struct Acc {
        checked: u64,
        failures: u64,
        min_gap: f64,
        examples: Vec<Vec<usize>>,
    }
    let merge = |mut x: Acc, y: Acc| {
        x.checked += y.checked;
        x.failures += y.failures;
        x.min_gap = x.min_gap.min(y.min_gap);
        x.examples.extend(y.examples);
        x.examples.sort();
        x.examples.truncate(10);
        x
    };
    let empty = || Acc {
        min_gap: f64::INFINITY,
        ..Acc::default()
    };

    let mut total = empty();
    for blocks in 1..=max_blocks {
        // the prefix is all blocks but the last, indexed by a mixed-radix code
        let prefixes = n.pow(blocks as u32 - 1);
        let acc = (0..prefixes)
            .into_par_iter()
            .map(|code| {
                let mut idx = Vec::with_capacity(blocks);
                let mut c = code;
                for _ in 0..blocks - 1 {
                    idx.push(c % n);
                    c /= n;
                }
                idx.reverse();
                let (mut pi, mut ps) = (id.clone(), id.clone());
                let (mut sa, mut sb) = (0i64, 0i64);
                for &j in &idx {
                    pi = cmul(&pi, &ti[j].1);
                    ps = cmul(&ps, &ts[j].1);
                    sa += ti[j].0 .0;
                    sb += ti[j].0 .1;
                }
                let mut acc = empty();
                for last in 0..n {
                    let (a, b) = ti[last].0;
                    if (sa + a).rem_euclid(2) != 0 || (sb + b).rem_euclid(4) != 2 {
                        continue;
                    }
                    let x = ctrace_product(&pi, &ti[last].1).norm();
                    let y = ctrace_product(&ps, &ts[last].1).norm();
                    let gap = (x - y).abs();
                    acc.checked += 1;
                    acc.min_gap = acc.min_gap.min(gap);
                    if gap <= threshold {
                        acc.failures += 1;
                        if acc.examples.len() < 10 {
                            let mut w = idx.clone();
                            w.push(last);
                            acc.examples.push(w);
                        }
                    }
                }
                acc
            })
            .reduce(empty, merge);
        total = merge(total, acc);
    }
    SweepReport {
        max_blocks,
        exponent_bound: bound,
        words_checked: total.checked,
        failures: total.failures,
        min_gap: total.min_gap,
        examples: total
            .examples
            .iter()
            .map(|w| MCGWord::from_blocks(&w.iter().map(|&j| ti[j].0).collect::<Vec<_>>()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    fn theories() -> [ModularDatum; 2] {
        [
            ModularDatum::builtin(Theory::Ising),
            ModularDatum::builtin(Theory::Su2Level2),
        ]
    }

    #[test]
    fn builtin_data() {
        let [ising, su2] = theories();
        ising.validate().unwrap();
        su2.validate().unwrap();
        let e = |x: f64| Complex64::from_polar(1.0, x);
        let ti: Vec<_> = ising.twists().iter().map(Residue::eval).collect();
        assert!(close(ti[1], e(2.0 * PI / 16.0)) && close(ti[2], e(PI)));
        let ts: Vec<_> = su2.twists().iter().map(Residue::eval).collect();
        assert!(close(ts[1], e(6.0 * PI / 16.0)));
        let d: Vec<_> = ising
            .quantum_dimensions()
            .iter()
            .map(Residue::eval)
            .collect();
        assert!(close(d[1], SQRT_2.into()) && close(d[0], 1.0.into()) && close(d[2], 1.0.into()));
        assert_eq!(ising.s_matrix(), su2.s_matrix());
        assert!("nope".parse::<Theory>().is_err());
        assert_eq!("SU(2)_2".parse::<Theory>().unwrap(), Theory::Su2Level2);
    }

    #[test]
    fn unitarity() {
        for md in theories() {
            let s = md.s_normalized();
            let u = mat_mul(&s, &conj_transpose(&s));
            assert_eq!(u, identity(md.field(), 3));
        }
    }

    #[test]
    fn word_parsing() {
        let w: MCGWord = "s^2 t^6".parse().unwrap();
        assert_eq!(w.factors, vec![(Generator::S, 2), (Generator::T, 6)]);
        let w: MCGWord = "s t^-3*s".parse().unwrap();
        assert_eq!(w.to_string(), "s t^-3 s");
        assert!("x^2".parse::<MCGWord>().is_err());
        assert!("s^".parse::<MCGWord>().is_err());
        assert!("".parse::<MCGWord>().unwrap().factors.is_empty());
    }

    #[test]
    fn empty_word_is_identity() {
        let md = ModularDatum::builtin(Theory::Ising);
        assert_eq!(eval_word(&md, &MCGWord::default()), identity(md.field(), 3));
    }

    #[test]
    fn t_squared_traces() {
        let r = trace_distinguish(&MCGWord::t_power(2));
        assert!((r.tr_ising - (5.0 + 2.0 * SQRT_2).sqrt()).abs() < 1e-12);
        assert!((r.tr_su2 - (5.0 - 2.0 * SQRT_2).sqrt()).abs() < 1e-12);
        assert!(r.distinct && r.hypotheses_met);
        assert!(!trace_distinguish(&MCGWord::t_power(4)).hypotheses_met);
        let r = trace_distinguish(&"s^2 t^6".parse().unwrap());
        assert!(r.hypotheses_met && r.distinct);
    }

    #[test]
    fn negative_powers_invert() {
        for md in theories() {
            let w: MCGWord = "s^3 t^-5 s^-3 t^5".parse().unwrap();
            let v: MCGWord = "t^-5 s^3 t^5 s^-3".parse().unwrap();
            let p = mat_mul(&eval_word(&md, &w), &eval_word(&md, &v));
            // w·v = s^3 t^-5 s^-3 t^5 t^-5 s^3 t^5 s^-3 = identity
            assert_eq!(p, identity(md.field(), 3));
        }
    }

    #[test]
    fn projective_phases() {
        for md in theories() {
            let lambda = projective_phase(&md).expect("(ST)^3 is a multiple of S^2");
            assert!((lambda.eval().norm() - 1.0).abs() < 1e-12);
            assert!(close(pow(&lambda, 8).eval(), central_phase(&md)));
        }
    }

    #[test]
    fn genus_two_basis() {
        let [ising, su2] = theories();
        let labs = enumerate_labellings(&SpineGraph::dumbbell(), &ising);
        let expect: Vec<Vec<usize>> = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![2, 0, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![2, 0, 1],
            vec![0, 0, 2],
            vec![1, 0, 2],
            vec![2, 0, 2],
            vec![1, 2, 1],
        ];
        assert_eq!(labs, expect);
        assert_eq!(enumerate_labellings(&SpineGraph::torus(), &ising).len(), 3);
        let m = genus2_twist_matrix(&ising);
        let m2 = genus2_twist_matrix(&su2);
        let t2i = diagonal_power_trace(&m, 2).eval().norm();
        let t2s = diagonal_power_trace(&m2, 2).eval().norm();
        assert!((t2i - (52.0 + 24.0 * SQRT_2).sqrt()).abs() < 1e-9);
        assert!((t2s - (52.0 - 24.0 * SQRT_2).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn json_roundtrip() {
        for md in theories() {
            let back = ModularDatum::from_json(&md.to_json()).unwrap();
            assert_eq!(back, md);
        }
        let mut v: serde_json::Value =
            serde_json::from_str(&ModularDatum::builtin(Theory::Ising).to_json()).unwrap();
        v["twists"][0] = "A".into();
        assert!(ModularDatum::from_json(&v.to_string()).is_err());
        v["twists"][0] = "1".into();
        v["s"][0][1] = "A".into();
        assert!(ModularDatum::from_json(&v.to_string()).is_err());
    }

    #[test]
    fn small_sweep_agrees_with_exact() {
        let rep = sweep_words(1, 8, 1e-6);
        // every single block word s^a t^b with a even, b ≡ 2 mod 4
        assert_eq!(rep.words_checked, 9 * 4);
        for a in (-8..=8).step_by(2) {
            for b in [-6, -2, 2, 6] {
                let w = MCGWord::from_blocks(&[(a, b)]);
                let r = trace_distinguish(&w);
                assert_eq!(r.distinct, r.gap > 1e-6, "{w}");
            }
        }
    }
}
