//! Distance verification and optimality bounds for flag codes.
//!
//! Verification is exhaustive: the minimum flag distance scans every pair
//! of flags, and the projection analysis scans every pair inside every
//! projected code. The pair loops are the designated parallelism point;
//! with the default `parallel` feature they fan out through rayon, and the
//! results are identical either way.
//!
//! The bounds are computed in exact unbounded integers. For constant
//! dimension codes of k-spaces in GF(q)^n (n >= 2k, r = n mod k) the
//! maximum size is (q^n - 1)/(q^k - 1) when r = 0, and
//! (q^n - q^(k+r))/(q^k - 1) + 1 when k exceeds the Gaussian binomial
//! [r; 1]_q; otherwise only the classical partial-spread upper bound
//! (q^n - q^r)/(q^k - 1) - floor((s - c)/2) - 1 is known, with
//! s = isqrt(4 q^k (q^k - q^r) + 1) and c = 2 q^k - 2 q^r + 1. A flag
//! code whose type contains k or n - k inherits the same cap on its size,
//! so attaining it proves optimality.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::flag::{CodeParams, Flag, FlagCode, FlagType};
use crate::subspace::Subspace;

/// Minimum over all unordered pairs of a distance function, or None for
/// fewer than two items. Exhaustive; parallel when the feature is on.
fn pairwise_min<T, F>(items: &[T], dist: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T, &T) -> usize + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..items.len())
            .into_par_iter()
            .filter_map(|i| {
                (i + 1..items.len())
                    .map(|j| dist(&items[i], &items[j]))
                    .min()
            })
            .min()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut best: Option<usize> = None;
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let d = dist(&items[i], &items[j]);
                if best.is_none_or(|b| d < b) {
                    best = Some(d);
                }
            }
        }
        best
    }
}

fn check_uniform_type(flags: &[Flag]) -> Result<&FlagType> {
    let first = flags
        .first()
        .ok_or(Error::TooSmall(0))?
        .flag_type();
    for f in flags {
        if f.flag_type() != first {
            return Err(Error::TypeMismatch);
        }
    }
    Ok(first)
}

/// Smallest pairwise flag distance; needs at least two flags of one type.
pub fn min_flag_distance(flags: &[Flag]) -> Result<usize> {
    if flags.len() < 2 {
        return Err(Error::TooSmall(flags.len()));
    }
    check_uniform_type(flags)?;
    Ok(pairwise_min(flags, |a, b| {
        a.distance(b).expect("uniform type checked")
    })
    .expect("at least one pair"))
}

/// The general upper bound on flag distances of this type:
/// 2 * sum over ticks of min(t, n - t). Every pair of flags satisfies it,
/// and a flag code is distance-optimal exactly when its minimum distance
/// reaches it.
pub fn max_flag_distance_bound(ty: &FlagType) -> usize {
    let n = ty.n();
    2 * ty.ticks().iter().map(|&t| t.min(n - t)).sum::<usize>()
}

/// The projected code at tick t: the distinct dimension-t components, in
/// first-appearance order.
pub fn projected_code(flags: &[Flag], t: usize) -> Result<Vec<Subspace>> {
    let ty = check_uniform_type(flags)?;
    if !ty.contains(t) {
        return Err(Error::BadTick(t));
    }
    // Subspace hashes on its immutable canonical basis; the interior
    // OnceLock clippy flags is only a derived-form cache.
    #[allow(clippy::mutable_key_type)]
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for f in flags {
        let s = f.component(t)?;
        if seen.insert(s.clone()) {
            out.push(s.clone());
        }
    }
    Ok(out)
}

/// Is the code disjoint, i.e. does every projected code keep all |C|
/// subspaces distinct?
pub fn is_disjoint(flags: &[Flag]) -> Result<bool> {
    if flags.is_empty() {
        return Ok(true);
    }
    let ty = check_uniform_type(flags)?;
    for &t in ty.ticks() {
        if projected_code(flags, t)?.len() != flags.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Are the subspaces pairwise trivially intersecting (a partial spread)?
/// All subspaces must share a dimension and ambient space. Exhaustive.
pub fn partial_spread_check(spaces: &[Subspace]) -> Result<bool> {
    let Some(first) = spaces.first() else {
        return Ok(true);
    };
    for s in spaces {
        if s.field() != first.field() {
            return Err(Error::FieldMismatch);
        }
        if s.ambient() != first.ambient() {
            return Err(Error::AmbientMismatch(s.ambient(), first.ambient()));
        }
        if s.dim() != first.dim() {
            return Err(Error::DimMismatch);
        }
    }
    for (i, a) in spaces.iter().enumerate() {
        for b in &spaces[i + 1..] {
            if a.intersection_dim(b)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two sides of the optimality characterization, evaluated
/// independently on at least two flags of one type:
/// the distance side (minimum flag distance reaches the bound) and the
/// projection side (disjoint, and every projected code attains
/// min(2t, 2(n-t))). The two always agree; [`verify_odfc`] fails loudly if
/// they ever did not.
pub fn odfc_predicates(flags: &[Flag]) -> Result<(bool, bool)> {
    if flags.len() < 2 {
        return Err(Error::TooSmall(flags.len()));
    }
    let ty = check_uniform_type(flags)?.clone();
    let n = ty.n();
    let by_distance = min_flag_distance(flags)? == max_flag_distance_bound(&ty);
    let mut by_projection = true;
    for &t in ty.ticks() {
        let proj = projected_code(flags, t)?;
        if proj.len() != flags.len() {
            by_projection = false;
            break;
        }
        let target = 2 * t.min(n - t);
        let pmin = pairwise_min(&proj, |a, b| a.distance(b).expect("same ambient"))
            .expect("at least one pair");
        if pmin != target {
            by_projection = false;
            break;
        }
    }
    Ok((by_distance, by_projection))
}

/// How a code relates to the applicable size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Optimality {
    /// The code is an ODFC and its size attains the applicable bound.
    Optimal,
    /// A bound applies but is not attained (or the code is not an ODFC).
    NotProvenOptimal,
    /// The type avoids both spread dimensions, so no size bound applies.
    BoundInapplicable,
}

/// Size and distance findings for one tick of the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TickReport {
    pub tick: usize,
    /// Number of distinct projected subspaces.
    pub size: usize,
    /// Minimum pairwise distance inside the projected code (0 when fewer
    /// than two subspaces remain).
    pub min_distance: usize,
    /// The distance the projection must attain: min(2t, 2(n-t)).
    pub target: usize,
    pub attains: bool,
}

/// Full verification record for a flag code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub ticks: Vec<usize>,
    /// Number of flags actually present.
    pub size: usize,
    pub min_flag_distance: usize,
    pub max_distance_bound: usize,
    pub disjoint: bool,
    pub per_tick: Vec<TickReport>,
    pub is_odfc: bool,
    /// What the construction would produce for these parameters.
    pub size_formula: BigUint,
    /// Largest possible ODFC size for this type, when one is known.
    pub upper_bound: Option<BigUint>,
    /// Whether the upper bound is known to be attainable in general.
    pub bound_exact: bool,
    pub optimality: Optimality,
}

/// Exhaustively verify a flag code: distances, disjointness, projection
/// quality, and the optimality verdict. Errors with
/// [`Error::CharacterizationMismatch`] if the two independent optimality
/// checks ever disagree (a bug, not bad input).
pub fn verify_odfc(code: &FlagCode) -> Result<VerificationReport> {
    let flags = code.flags();
    if flags.len() < 2 {
        return Err(Error::TooSmall(flags.len()));
    }
    let ty = code.flag_type();
    let n = ty.n();
    let params = code.params();
    let min_fd = min_flag_distance(flags)?;
    let bound = max_flag_distance_bound(ty);
    let mut per_tick = Vec::with_capacity(ty.len());
    let mut disjoint = true;
    let mut all_attain = true;
    for &t in ty.ticks() {
        let proj = projected_code(flags, t)?;
        let target = 2 * t.min(n - t);
        let pmin = if proj.len() >= 2 {
            pairwise_min(&proj, |a, b| a.distance(b).expect("same ambient"))
                .expect("at least one pair")
        } else {
            0
        };
        let attains = proj.len() >= 2 && pmin == target;
        if proj.len() != flags.len() {
            disjoint = false;
        }
        if !attains {
            all_attain = false;
        }
        per_tick.push(TickReport {
            tick: t,
            size: proj.len(),
            min_distance: pmin,
            target,
            attains,
        });
    }
    let by_distance = min_fd == bound;
    let by_projection = disjoint && all_attain;
    if by_distance != by_projection {
        return Err(Error::CharacterizationMismatch);
    }
    let is_odfc = by_distance;
    let bounds = odfc_bounds(params.n, params.k, params.q, ty.ticks())?;
    let optimality = match &bounds.upper_bound {
        None => Optimality::BoundInapplicable,
        Some(ub) => {
            if is_odfc && BigUint::from(flags.len()) == *ub {
                Optimality::Optimal
            } else {
                Optimality::NotProvenOptimal
            }
        }
    };
    Ok(VerificationReport {
        q: params.q,
        n: params.n,
        k: params.k,
        ticks: ty.ticks().to_vec(),
        size: flags.len(),
        min_flag_distance: min_fd,
        max_distance_bound: bound,
        disjoint,
        per_tick,
        is_odfc,
        size_formula: bounds.size_formula,
        upper_bound: bounds.upper_bound,
        bound_exact: bounds.exact,
        optimality,
    })
}

/// The Gaussian binomial coefficient counting lines of GF(q)^r:
/// [r; 1]_q = (q^r - 1)/(q - 1) = 1 + q + ... + q^(r-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianBinomial {
    pub value: BigUint,
}

impl GaussianBinomial {
    pub fn lines(q: u64, r: usize) -> GaussianBinomial {
        let q = BigUint::from(q);
        let mut value = BigUint::from(0u32);
        let mut power = BigUint::from(1u32);
        for _ in 0..r {
            value += &power;
            power *= &q;
        }
        GaussianBinomial { value }
    }
}

/// An upper bound on constant dimension codes of k-spaces, with a flag for
/// whether the bound is known to be attained in general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdcBound {
    pub bound: BigUint,
    pub exact: bool,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return true; // q itself is prime
    }
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    rest == 1
}

fn check_bound_params(n: usize, k: usize, q: u64) -> Result<()> {
    if !is_prime_power(q) {
        return Err(Error::BadParams(format!("{q} is not a prime power")));
    }
    CodeParams::derive(q, n, k).map(|_| ())
}

fn qpow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn exact_div(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    let (quot, rem) = num.div_rem(den);
    if rem != BigUint::from(0u32) {
        return Err(Error::Internal(format!("{what} is not an exact division")));
    }
    Ok(quot)
}

/// Size of the constructed code: (q^n - q^(k+r))/(q^k - 1) + 1 with
/// r = n mod k; equivalently 1 + the sum of q^(ik+r) over i = 1..=a.
pub fn size_formula(n: usize, k: usize, q: u64) -> Result<BigUint> {
    check_bound_params(n, k, q)?;
    let r = n % k;
    let den = qpow(q, k) - 1u32;
    let quot = exact_div(qpow(q, n) - qpow(q, k + r), &den, "size formula")?;
    Ok(quot + 1u32)
}

/// Largest possible size of a set of k-spaces of GF(q)^n pairwise
/// intersecting trivially (equivalently, of a constant dimension code of
/// minimum distance 2k). Exact when r = 0 or k > [r; 1]_q; otherwise the
/// classical partial-spread bound, which may overshoot.
pub fn cdc_upper_bound(n: usize, k: usize, q: u64) -> Result<CdcBound> {
    check_bound_params(n, k, q)?;
    let r = n % k;
    let one = BigUint::from(1u32);
    let den = qpow(q, k) - &one;
    if r == 0 {
        let bound = exact_div(qpow(q, n) - &one, &den, "spread count")?;
        return Ok(CdcBound { bound, exact: true });
    }
    let exact = BigUint::from(k as u64) > GaussianBinomial::lines(q, r).value;
    if exact {
        let bound = exact_div(qpow(q, n) - qpow(q, k + r), &den, "exact branch")?;
        return Ok(CdcBound {
            bound: bound + one,
            exact: true,
        });
    }
    // Partial-spread bound via exact integer square root.
    let qk = qpow(q, k);
    let qr = qpow(q, r);
    let x = 4u32 * &qk * (&qk - &qr) + &one;
    let s = x.sqrt();
    let c = 2u32 * &qk - 2u32 * &qr + &one;
    if s < c {
        return Err(Error::Internal("bound square root fell below offset".into()));
    }
    let term = (s - c) / 2u32;
    let lead = exact_div(qpow(q, n) - &qr, &den, "bound leading term")?;
    Ok(CdcBound {
        bound: lead - term - one,
        exact: false,
    })
}

/// The bound package for construction parameters (n, k, q) and a tick set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdfcBounds {
    /// Size the construction produces.
    pub size_formula: BigUint,
    /// Cap on any flag code of this type, when the type meets a spread
    /// dimension (k or n - k; both give the same cap by duality).
    pub upper_bound: Option<BigUint>,
    /// Whether the cap is known to be attainable.
    pub exact: bool,
    /// Verdict for the constructed code of these parameters.
    pub verdict: Optimality,
}

/// Compute the size formula, the applicable upper bound, and the verdict
/// for the construction at (n, k, q) with the given ticks.
pub fn odfc_bounds(n: usize, k: usize, q: u64, ticks: &[usize]) -> Result<OdfcBounds> {
    check_bound_params(n, k, q)?;
    let allowed = crate::flag::type_set(n, k)?;
    for &t in ticks {
        if !allowed.contains(t) {
            return Err(Error::BadTypeSet(format!(
                "tick {t} falls outside {{1..{k}}} u {{{}..{}}}",
                n - k,
                n - 1
            )));
        }
    }
    let formula = size_formula(n, k, q)?;
    let spread_tick = ticks.iter().any(|&t| t == k || t == n - k);
    if !spread_tick {
        return Ok(OdfcBounds {
            size_formula: formula,
            upper_bound: None,
            exact: false,
            verdict: Optimality::BoundInapplicable,
        });
    }
    let cdc = cdc_upper_bound(n, k, q)?;
    if formula > cdc.bound {
        return Err(Error::Internal(
            "size formula exceeds the upper bound".into(),
        ));
    }
    let verdict = if formula == cdc.bound {
        Optimality::Optimal
    } else {
        Optimality::NotProvenOptimal
    };
    Ok(OdfcBounds {
        size_formula: formula,
        upper_bound: Some(cdc.bound),
        exact: cdc.exact,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::{construct_odfc, Flag, FlagCode, FlagType};
    use crate::galois::Field;
    use crate::matrix::MatGF;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn flag_of(rows: &[Vec<u64>], ticks: &[usize]) -> Flag {
        let m = MatGF::from_rows(gf(2), rows).unwrap();
        let ty = FlagType::new(m.rows(), ticks.to_vec()).unwrap();
        Flag::from_matrix(&m, &ty).unwrap()
    }

    #[test]
    fn distance_bounds_by_type() {
        let cases = [
            (4, vec![1, 2, 3], 8),
            (5, vec![1, 2, 3, 4], 12),
            (6, vec![1, 2, 4, 5], 12),
            (7, vec![1, 2, 5, 6], 12),
            (7, vec![1, 2, 3, 4, 5, 6], 24),
            (8, vec![3, 5], 12),
        ];
        for (n, ticks, want) in cases {
            let ty = FlagType::new(n, ticks).unwrap();
            assert_eq!(max_flag_distance_bound(&ty), want, "bound for n={n}");
        }
    }

    #[test]
    fn min_distance_of_constructed_code() {
        let code = construct_odfc(4, 2, &[1, 2, 3], &gf(2)).unwrap();
        assert_eq!(min_flag_distance(code.flags()).unwrap(), 8);
        assert_eq!(
            min_flag_distance(&code.flags()[..1]).unwrap_err(),
            Error::TooSmall(1)
        );
    }

    #[test]
    fn projections_and_disjointness() {
        let code = construct_odfc(4, 2, &[1, 2, 3], &gf(2)).unwrap();
        for t in [1, 2, 3] {
            let proj = projected_code(code.flags(), t).unwrap();
            assert_eq!(proj.len(), 5, "projection at {t}");
        }
        assert!(is_disjoint(code.flags()).unwrap());
        assert_eq!(
            projected_code(code.flags(), 0).unwrap_err(),
            Error::BadTick(0)
        );
        // Two flags sharing their lower components are not disjoint.
        let a = flag_of(
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ],
            &[1, 2, 3],
        );
        let b = flag_of(
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0],
            ],
            &[1, 2, 3],
        );
        assert_ne!(a, b);
        assert!(!is_disjoint(&[a, b]).unwrap());
    }

    #[test]
    fn spread_checks() {
        let code = construct_odfc(5, 2, &[2, 3], &gf(2)).unwrap();
        let planes = projected_code(code.flags(), 2).unwrap();
        assert_eq!(planes.len(), 9);
        assert!(partial_spread_check(&planes).unwrap());
        let overlapping = [
            Subspace::from_matrix(
                &MatGF::from_rows(gf(2), &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap(),
            )
            .unwrap(),
            Subspace::from_matrix(
                &MatGF::from_rows(gf(2), &[vec![1, 0, 0], vec![0, 0, 1]]).unwrap(),
            )
            .unwrap(),
        ];
        assert!(!partial_spread_check(&overlapping).unwrap());
        let mixed = [
            overlapping[0].clone(),
            Subspace::from_matrix(&MatGF::from_rows(gf(2), &[vec![1, 0, 0]]).unwrap()).unwrap(),
        ];
        assert_eq!(
            partial_spread_check(&mixed).unwrap_err(),
            Error::DimMismatch
        );
    }

    #[test]
    fn verify_optimal_code() {
        let code = construct_odfc(5, 2, &[1, 2, 3, 4], &gf(2)).unwrap();
        let report = verify_odfc(&code).unwrap();
        assert_eq!(report.size, 9);
        assert_eq!(report.min_flag_distance, 12);
        assert_eq!(report.max_distance_bound, 12);
        assert!(report.disjoint);
        assert!(report.is_odfc);
        assert_eq!(report.size_formula, big(9));
        assert_eq!(report.upper_bound, Some(big(9)));
        assert_eq!(report.optimality, Optimality::Optimal);
        let targets: Vec<usize> = report.per_tick.iter().map(|t| t.target).collect();
        assert_eq!(targets, vec![2, 4, 4, 2]);
        assert!(report.per_tick.iter().all(|t| t.attains));
    }

    #[test]
    fn verify_unsettled_code() {
        // (8, 3) with r = 2 and k = [2;1]_2: the construction yields 33
        // flags but the best known cap is 34, so optimality stays open.
        let code = construct_odfc(8, 3, &[3, 5], &gf(2)).unwrap();
        let report = verify_odfc(&code).unwrap();
        assert_eq!(report.size, 33);
        assert!(report.is_odfc);
        assert_eq!(report.min_flag_distance, 12);
        assert_eq!(report.upper_bound, Some(big(34)));
        assert!(!report.bound_exact);
        assert_eq!(report.optimality, Optimality::NotProvenOptimal);
    }

    #[test]
    fn verify_corrupted_code() {
        let code = construct_odfc(4, 2, &[1, 2, 3], &gf(2)).unwrap();
        // Replace one flag with a nearby flag sharing lower components
        // with another: disjointness breaks and the verdict flips.
        let donor = code.flags()[1].generator().unwrap().clone();
        let mut rows = donor.row_codes();
        rows.swap(2, 3);
        let twisted = Flag::from_matrix(
            &MatGF::from_rows(gf(2), &rows).unwrap(),
            code.flag_type(),
        )
        .unwrap();
        let mut flags = code.flags().to_vec();
        flags[0] = twisted;
        let corrupted = FlagCode::from_parts(
            code.field().clone(),
            *code.params(),
            code.flag_type().clone(),
            flags,
            code.provenance().to_vec(),
        )
        .unwrap();
        let report = verify_odfc(&corrupted).unwrap();
        assert!(!report.is_odfc);
        assert!(!report.disjoint);
        assert_eq!(report.optimality, Optimality::NotProvenOptimal);
        assert!(report.min_flag_distance < report.max_distance_bound);
    }

    #[test]
    fn predicates_agree_on_examples() {
        let code = construct_odfc(6, 2, &[1, 2, 4, 5], &gf(2)).unwrap();
        assert_eq!(odfc_predicates(code.flags()).unwrap(), (true, true));
        let a = flag_of(
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ],
            &[1, 2],
        );
        let b = flag_of(
            &[
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1],
            ],
            &[1, 2],
        );
        assert_eq!(odfc_predicates(&[a, b]).unwrap(), (false, false));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(GaussianBinomial::lines(2, 0).value, big(0));
        assert_eq!(GaussianBinomial::lines(2, 1).value, big(1));
        assert_eq!(GaussianBinomial::lines(2, 2).value, big(3));
        assert_eq!(GaussianBinomial::lines(2, 3).value, big(7));
        assert_eq!(GaussianBinomial::lines(3, 2).value, big(4));
    }

    #[test]
    fn size_formula_values() {
        assert_eq!(size_formula(4, 2, 2).unwrap(), big(5));
        assert_eq!(size_formula(5, 2, 2).unwrap(), big(9));
        assert_eq!(size_formula(6, 2, 2).unwrap(), big(21));
        assert_eq!(size_formula(7, 2, 2).unwrap(), big(41));
        assert_eq!(size_formula(7, 3, 2).unwrap(), big(17));
        assert_eq!(size_formula(8, 3, 2).unwrap(), big(33));
        assert_eq!(size_formula(5, 2, 3).unwrap(), big(28));
    }

    #[test]
    fn cdc_bounds() {
        let b = cdc_upper_bound(6, 2, 2).unwrap();
        assert_eq!((b.bound, b.exact), (big(21), true));
        let b = cdc_upper_bound(7, 3, 2).unwrap();
        assert_eq!((b.bound, b.exact), (big(17), true));
        let b = cdc_upper_bound(7, 2, 2).unwrap();
        assert_eq!((b.bound, b.exact), (big(41), true));
        let b = cdc_upper_bound(5, 2, 3).unwrap();
        assert_eq!((b.bound, b.exact), (big(28), true));
        // k = [r;1]_q: only the partial-spread bound is available.
        let b = cdc_upper_bound(8, 3, 2).unwrap();
        assert_eq!((b.bound, b.exact), (big(34), false));
        assert!(cdc_upper_bound(8, 3, 6).is_err());
        assert!(cdc_upper_bound(3, 2, 2).is_err());
    }

    #[test]
    fn bounds_package() {
        let b = odfc_bounds(5, 2, 2, &[2, 3]).unwrap();
        assert_eq!(b.size_formula, big(9));
        assert_eq!(b.upper_bound, Some(big(9)));
        assert_eq!(b.verdict, Optimality::Optimal);
        let b = odfc_bounds(8, 3, 2, &[3, 5]).unwrap();
        assert_eq!(b.upper_bound, Some(big(34)));
        assert_eq!(b.verdict, Optimality::NotProvenOptimal);
        // A type avoiding both spread dimensions gets no bound.
        let b = odfc_bounds(7, 2, 2, &[1, 6]).unwrap();
        assert_eq!(b.upper_bound, None);
        assert_eq!(b.verdict, Optimality::BoundInapplicable);
        assert!(matches!(
            odfc_bounds(7, 2, 2, &[3]),
            Err(Error::BadTypeSet(_))
        ));
    }
}
