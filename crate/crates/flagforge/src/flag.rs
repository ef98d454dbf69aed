//! Flags, flag types, and the flag-code construction from square MRD
//! codes.
//!
//! A flag of type (t_1, ..., t_r) in GF(q)^n is a strictly nested chain of
//! subspaces with those dimensions. Every flag here is cut from an
//! invertible n x n generator: the component of dimension t is the row
//! space of the top t rows, so nesting holds by construction.
//!
//! The construction takes n = (a+1)k + r with 0 <= r < k and a >= 1 and
//! produces one generator matrix per codeword of a tower of square MRD
//! codes, plus two fixed block permutations. Cutting those generators at
//! the ticks {1..k} and {n-k..n-1} yields a flag code whose minimum
//! distance meets the general upper bound; restricting to a subset of the
//! ticks is done by deleting projections after the fact, which preserves
//! both the code size and optimality. The template layout per family is
//! spelled out in [`build_matrix_set`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::matrix::{block_assemble, MatGF};
use crate::rankmetric::MrdCode;
use crate::subspace::Subspace;

/// A type of flags: the ambient dimension n together with the strictly
/// increasing dimension ticks 0 < t_1 < ... < t_r < n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagType {
    n: usize,
    ticks: Vec<usize>,
}

impl FlagType {
    /// Build a flag type; ticks are sorted and deduplicated, and must fall
    /// strictly between 0 and n.
    pub fn new(n: usize, ticks: Vec<usize>) -> Result<FlagType> {
        if n < 2 {
            return Err(Error::BadParams(format!(
                "ambient dimension {n} admits no proper subspace chain"
            )));
        }
        let mut ticks = ticks;
        ticks.sort_unstable();
        ticks.dedup();
        if ticks.is_empty() {
            return Err(Error::BadParams("a flag type needs at least one tick".into()));
        }
        if ticks[0] == 0 || *ticks.last().unwrap() >= n {
            return Err(Error::BadParams(format!(
                "ticks must lie strictly between 0 and {n}"
            )));
        }
        Ok(FlagType { n, ticks })
    }

    /// The full flag type on GF(q)^n: every dimension 1..n-1.
    pub fn full(n: usize) -> Result<FlagType> {
        FlagType::new(n, (1..n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ticks(&self) -> &[usize] {
        &self.ticks
    }

    pub fn len(&self) -> usize {
        self.ticks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ticks.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.ticks.binary_search(&t).is_ok()
    }
}

/// The tick set the construction populates for parameters (n, k):
/// {1, ..., k} together with {n-k, ..., n-1}.
pub fn type_set(n: usize, k: usize) -> Result<FlagType> {
    CodeParams::derive(2, n, k)?; // reuse the n/k validation; q irrelevant here
    let ticks: Vec<usize> = (1..=k).chain(n - k..n).collect();
    FlagType::new(n, ticks)
}

/// Derived construction parameters: n = (a+1)k + r with 0 <= r < k, a >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub a: usize,
}

impl CodeParams {
    pub fn derive(q: u64, n: usize, k: usize) -> Result<CodeParams> {
        if k == 0 {
            return Err(Error::BadParams("k must be at least 1".into()));
        }
        if n < 2 * k {
            return Err(Error::BadParams(format!(
                "need n >= 2k, got n = {n}, k = {k}"
            )));
        }
        let r = n % k;
        let a = (n - r) / k - 1;
        Ok(CodeParams { q, n, k, r, a })
    }
}

/// Which template family produced a generator matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Lifted codewords of the widest MRD code (side n - k).
    Mrd,
    /// Lifted codewords of the level-i intermediate MRD code
    /// (side n - (i+2)k); index 0 is the fixed permutation template that
    /// stands in for the zero codeword.
    Layer(usize),
    /// The anti-diagonal block permutation.
    AntiDiag,
    /// The block permutation swapping the leading coordinate blocks
    /// (the identity when n = 2k).
    BlockSwap,
}

impl Family {
    /// Stable string form used in serialized documents.
    pub fn label(&self) -> String {
        match self {
            Family::Mrd => "mrd".into(),
            Family::Layer(i) => format!("layer{i}"),
            Family::AntiDiag => "antidiag".into(),
            Family::BlockSwap => "blockswap".into(),
        }
    }

    /// Inverse of [`Family::label`].
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "mrd" => Ok(Family::Mrd),
            "antidiag" => Ok(Family::AntiDiag),
            "blockswap" => Ok(Family::BlockSwap),
            _ => {
                if let Some(rest) = s.strip_prefix("layer") {
                    if let Ok(i) = rest.parse::<usize>() {
                        return Ok(Family::Layer(i));
                    }
                }
                Err(Error::Format(format!("unknown provenance family {s:?}")))
            }
        }
    }
}

/// Which template produced a flag: the family plus the codeword
/// enumeration index within it (always 0 for the fixed permutations).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub family: Family,
    pub index: u64,
}

/// A flag: a nested chain of subspaces matching a [`FlagType`], along with
/// the generator matrix it was cut from (when one is known).
#[derive(Clone, Debug)]
pub struct Flag {
    ty: FlagType,
    subspaces: Vec<Subspace>,
    generator: Option<MatGF>,
}

impl Flag {
    /// Cut a flag from an invertible n x n matrix: the component of
    /// dimension t is the row space of the top t rows.
    pub fn from_matrix(m: &MatGF, ty: &FlagType) -> Result<Flag> {
        if m.rows() != ty.n() || m.cols() != ty.n() {
            return Err(Error::DimensionMismatch(format!(
                "generator is {}x{}, flag type lives in dimension {}",
                m.rows(),
                m.cols(),
                ty.n()
            )));
        }
        if !m.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let subspaces = ty
            .ticks()
            .iter()
            .map(|&t| Subspace::from_matrix(&m.top_rows(t)?))
            .collect::<Result<Vec<_>>>()?;
        let flag = Flag {
            ty: ty.clone(),
            subspaces,
            generator: Some(m.clone()),
        };
        flag.check_nesting()?;
        Ok(flag)
    }

    /// Assemble a flag from explicit components; dimensions must match the
    /// ticks and the chain must nest.
    pub fn from_subspaces(ty: &FlagType, subspaces: Vec<Subspace>) -> Result<Flag> {
        if subspaces.len() != ty.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} subspaces for {} ticks",
                subspaces.len(),
                ty.len()
            )));
        }
        for (s, &t) in subspaces.iter().zip(ty.ticks()) {
            if s.ambient() != ty.n() {
                return Err(Error::AmbientMismatch(s.ambient(), ty.n()));
            }
            if s.dim() != t {
                return Err(Error::DimensionMismatch(format!(
                    "component of dimension {} at tick {t}",
                    s.dim()
                )));
            }
        }
        for w in subspaces.windows(2) {
            if !w[1].contains(&w[0])? {
                return Err(Error::BadParams("subspace chain does not nest".into()));
            }
        }
        Ok(Flag {
            ty: ty.clone(),
            subspaces,
            generator: None,
        })
    }

    fn check_nesting(&self) -> Result<()> {
        for w in self.subspaces.windows(2) {
            if !w[1].contains(&w[0])? {
                return Err(Error::Internal(
                    "flag cut from a matrix failed to nest".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.ty
    }

    /// Components in tick order.
    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// The component at a given tick.
    pub fn component(&self, t: usize) -> Result<&Subspace> {
        let pos = self
            .ty
            .ticks()
            .iter()
            .position(|&x| x == t)
            .ok_or(Error::BadTick(t))?;
        Ok(&self.subspaces[pos])
    }

    pub fn generator(&self) -> Option<&MatGF> {
        self.generator.as_ref()
    }

    /// Flag distance: the sum of the component subspace distances.
    pub fn distance(&self, other: &Flag) -> Result<usize> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch);
        }
        let mut total = 0;
        for (a, b) in self.subspaces.iter().zip(&other.subspaces) {
            total += a.distance(b)?;
        }
        Ok(total)
    }

    /// Keep only the components at the given ticks (projection deletion).
    pub fn restrict(&self, ticks: &[usize]) -> Result<Flag> {
        let mut wanted = ticks.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        let mut subspaces = Vec::with_capacity(wanted.len());
        for &t in &wanted {
            subspaces.push(self.component(t)?.clone());
        }
        Ok(Flag {
            ty: FlagType::new(self.ty.n(), wanted)?,
            subspaces,
            generator: self.generator.clone(),
        })
    }
}

impl PartialEq for Flag {
    fn eq(&self, other: &Self) -> bool {
        // The generator is provenance, not identity: two flags are equal
        // when they are the same chain of subspaces.
        self.ty == other.ty && self.subspaces == other.subspaces
    }
}

impl Eq for Flag {}

impl std::hash::Hash for Flag {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ty.hash(state);
        self.subspaces.hash(state);
    }
}

/// All generator matrices of the construction for (n, k) over the given
/// field, with their provenance, in a deterministic order.
///
/// With A denoting the top k rows of a codeword and B the rest, the widest
/// family (side n - k) lifts each nonzero codeword D to
///
/// ```text
/// [ A  I ]
/// [ B  O ]      column widths (n-k, k)
/// [ A  O ]
/// ```
///
/// Level i (side s = n - (i+2)k, d = s - k) lifts each nonzero codeword to
///
/// ```text
/// [ O  I  C  O ]
/// [ O  O  D' O ]
/// [ I  O  O  O ]      column widths (ik, k, s, k)
/// [ O  O  O  I ]
/// [ O  O  C  O ]
/// ```
///
/// with C the top k rows and D' the remaining d rows, while the zero
/// codeword contributes the fixed permutation
///
/// ```text
/// [ O  I  O  O  O ]
/// [ O  O  O  I  O ]
/// [ I  O  O  O  O ]   column widths (ik, k, k, d, k)
/// [ O  O  O  O  I ]
/// [ O  O  I  O  O ]
/// ```
///
/// Two fixed permutations close the set: the anti-diagonal block matrix
/// (column widths (k, n-2k, k)) and the block swap (column widths
/// (n-2k, k, k)), which degenerates to the identity when n = 2k.
pub fn build_matrix_set(n: usize, k: usize, field: &Field) -> Result<Vec<(MatGF, Provenance)>> {
    let params = CodeParams::derive(field.order(), n, k)?;
    let f = field.clone();
    let ik = MatGF::identity(f.clone(), k);
    let mut out = Vec::new();

    // Widest family: one generator per nonzero codeword of the
    // (n-k)-sided code.
    let side = n - k;
    let code = MrdCode::gabidulin(side, side, &f)?;
    let o_mid = MatGF::zeros(f.clone(), n - 2 * k, k);
    let o_k = MatGF::zeros(f.clone(), k, k);
    for idx in 1..code.codeword_count() {
        let d = code.codeword(idx)?;
        let a_blk = d.top_rows(k)?;
        let b_blk = d.rows_range(k, side)?;
        let m = block_assemble(&[
            vec![&a_blk, &ik],
            vec![&b_blk, &o_mid],
            vec![&a_blk, &o_k],
        ])?;
        out.push((
            m,
            Provenance {
                family: Family::Mrd,
                index: idx,
            },
        ));
    }

    // Intermediate levels, shallowest first.
    for i in 0..params.a.saturating_sub(1) {
        let s = n - (i + 2) * k;
        let d = s - k;
        let level = MrdCode::gabidulin(s, s, &f)?;
        let i_ik = MatGF::identity(f.clone(), i * k);
        let i_d = MatGF::identity(f.clone(), d);
        for idx in 0..level.codeword_count() {
            let m = if idx == 0 {
                block_assemble(&[
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &ik,
                        &MatGF::zeros(f.clone(), k, k),
                        &MatGF::zeros(f.clone(), k, d),
                        &MatGF::zeros(f.clone(), k, k),
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), d, i * k),
                        &MatGF::zeros(f.clone(), d, k),
                        &MatGF::zeros(f.clone(), d, k),
                        &i_d,
                        &MatGF::zeros(f.clone(), d, k),
                    ],
                    vec![
                        &i_ik,
                        &MatGF::zeros(f.clone(), i * k, k),
                        &MatGF::zeros(f.clone(), i * k, k),
                        &MatGF::zeros(f.clone(), i * k, d),
                        &MatGF::zeros(f.clone(), i * k, k),
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &MatGF::zeros(f.clone(), k, k),
                        &MatGF::zeros(f.clone(), k, k),
                        &MatGF::zeros(f.clone(), k, d),
                        &ik,
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &MatGF::zeros(f.clone(), k, k),
                        &ik,
                        &MatGF::zeros(f.clone(), k, d),
                        &MatGF::zeros(f.clone(), k, k),
                    ],
                ])?
            } else {
                let g = level.codeword(idx)?;
                let c_blk = g.top_rows(k)?;
                let dp_blk = g.rows_range(k, s)?;
                block_assemble(&[
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &ik,
                        &c_blk,
                        &MatGF::zeros(f.clone(), k, k),
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), d, i * k),
                        &MatGF::zeros(f.clone(), d, k),
                        &dp_blk,
                        &MatGF::zeros(f.clone(), d, k),
                    ],
                    vec![
                        &i_ik,
                        &MatGF::zeros(f.clone(), i * k, k),
                        &MatGF::zeros(f.clone(), i * k, s),
                        &MatGF::zeros(f.clone(), i * k, k),
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &MatGF::zeros(f.clone(), k, k),
                        &MatGF::zeros(f.clone(), k, s),
                        &ik,
                    ],
                    vec![
                        &MatGF::zeros(f.clone(), k, i * k),
                        &MatGF::zeros(f.clone(), k, k),
                        &c_blk,
                        &MatGF::zeros(f.clone(), k, k),
                    ],
                ])?
            };
            out.push((
                m,
                Provenance {
                    family: Family::Layer(i),
                    index: idx,
                },
            ));
        }
    }

    // The two fixed permutations.
    let mid = n - 2 * k;
    let i_mid = MatGF::identity(f.clone(), mid);
    let anti = block_assemble(&[
        vec![
            &MatGF::zeros(f.clone(), k, k),
            &MatGF::zeros(f.clone(), k, mid),
            &ik,
        ],
        vec![
            &MatGF::zeros(f.clone(), mid, k),
            &i_mid,
            &MatGF::zeros(f.clone(), mid, k),
        ],
        vec![
            &ik,
            &MatGF::zeros(f.clone(), k, mid),
            &MatGF::zeros(f.clone(), k, k),
        ],
    ])?;
    out.push((
        anti,
        Provenance {
            family: Family::AntiDiag,
            index: 0,
        },
    ));
    let swap = block_assemble(&[
        vec![
            &MatGF::zeros(f.clone(), k, mid),
            &ik,
            &MatGF::zeros(f.clone(), k, k),
        ],
        vec![
            &i_mid,
            &MatGF::zeros(f.clone(), mid, k),
            &MatGF::zeros(f.clone(), mid, k),
        ],
        vec![
            &MatGF::zeros(f.clone(), k, mid),
            &MatGF::zeros(f.clone(), k, k),
            &ik,
        ],
    ])?;
    out.push((
        swap,
        Provenance {
            family: Family::BlockSwap,
            index: 0,
        },
    ));

    for (m, prov) in &out {
        if !m.is_invertible() {
            return Err(Error::Internal(format!(
                "template {}[{}] is singular",
                prov.family.label(),
                prov.index
            )));
        }
    }
    Ok(out)
}

/// A flag code: flags of one common type plus the construction metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCode {
    field: Field,
    params: CodeParams,
    ty: FlagType,
    flags: Vec<Flag>,
    provenance: Vec<Provenance>,
}

impl FlagCode {
    /// Assemble a flag code from parts, validating type consistency and
    /// flag distinctness.
    pub fn from_parts(
        field: Field,
        params: CodeParams,
        ty: FlagType,
        flags: Vec<Flag>,
        provenance: Vec<Provenance>,
    ) -> Result<FlagCode> {
        if params.q != field.order() {
            return Err(Error::BadParams(format!(
                "params say q = {}, field is {field}",
                params.q
            )));
        }
        if ty.n() != params.n {
            return Err(Error::BadParams(format!(
                "flag type lives in dimension {}, params say {}",
                ty.n(),
                params.n
            )));
        }
        let allowed = type_set(params.n, params.k)?;
        for &t in ty.ticks() {
            if !allowed.contains(t) {
                return Err(Error::BadTypeSet(format!(
                    "tick {t} falls outside {{1..{}}} u {{{}..{}}}",
                    params.k,
                    params.n - params.k,
                    params.n - 1
                )));
            }
        }
        if flags.len() != provenance.len() {
            return Err(Error::BadParams(format!(
                "{} flags but {} provenance records",
                flags.len(),
                provenance.len()
            )));
        }
        for flag in &flags {
            if flag.flag_type() != &ty {
                return Err(Error::TypeMismatch);
            }
            for s in flag.subspaces() {
                if s.field() != &field {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        // Flag hashes on its type and canonical component bases; the
        // interior OnceLock clippy flags is only a derived-form cache.
        #[allow(clippy::mutable_key_type)]
        let mut seen = HashSet::with_capacity(flags.len());
        for flag in &flags {
            if !seen.insert(flag) {
                return Err(Error::BadParams("duplicate flag in code".into()));
            }
        }
        Ok(FlagCode {
            field,
            params,
            ty,
            flags,
            provenance,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.ty
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Flags paired with their provenance, in construction order.
    pub fn entries(&self) -> impl Iterator<Item = (&Flag, &Provenance)> {
        self.flags.iter().zip(self.provenance.iter())
    }
}

/// Expected code size for the construction: 1 + the sum of q^(ik + r) for
/// i = 1..=a. Exact in u128; desk-scale caps keep this far below overflow.
fn expected_size(params: &CodeParams) -> u128 {
    let q = params.q as u128;
    let mut total = 1u128;
    for i in 1..=params.a {
        total += q.pow((i * params.k + params.r) as u32);
    }
    total
}

/// Run the whole construction for (n, k) over the given field and keep the
/// components at the given ticks. The ticks must be drawn from
/// [`type_set`]; passing all of them yields the unrestricted code.
pub fn construct_odfc(n: usize, k: usize, ticks: &[usize], field: &Field) -> Result<FlagCode> {
    let params = CodeParams::derive(field.order(), n, k)?;
    let allowed = type_set(n, k)?;
    if ticks.is_empty() {
        return Err(Error::BadTypeSet("no ticks requested".into()));
    }
    let mut wanted = ticks.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    for &t in &wanted {
        if !allowed.contains(t) {
            return Err(Error::BadTypeSet(format!(
                "tick {t} falls outside {{1..{k}}} u {{{}..{}}}",
                n - k,
                n - 1
            )));
        }
    }
    let full = allowed;
    let mut flags = Vec::new();
    let mut provenance = Vec::new();
    for (m, prov) in build_matrix_set(n, k, field)? {
        let flag = Flag::from_matrix(&m, &full)?.restrict(&wanted)?;
        flags.push(flag);
        provenance.push(prov);
    }
    let expected = expected_size(&params);
    if flags.len() as u128 != expected {
        return Err(Error::Internal(format!(
            "construction produced {} flags, expected {expected}",
            flags.len()
        )));
    }
    let ty = FlagType::new(n, wanted)?;
    FlagCode::from_parts(field.clone(), params, ty, flags, provenance)
}
