//! Seeded randomized self-test suites.
//!
//! Each suite re-derives a mathematical identity the library relies on and
//! checks it on exhaustive small cases or on reproducible random samples
//! (ChaCha8, seeded). A suite returns the number of cases it checked, or a
//! message describing the first violated property with enough parameters
//! to reproduce it. The suites back the `selftest` CLI subcommand and the
//! acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    cdc_upper_bound, min_flag_distance, odfc_predicates, size_formula, verify_odfc,
    GaussianBinomial,
};
use crate::flag::{construct_odfc, type_set, Flag, FlagType};
use crate::galois::Field;
use crate::matrix::{EchelonForm, MatGF};
use crate::rankmetric::{min_rank_distance, truncate_code, verify_mrd, MrdCode};
use crate::subspace::Subspace;
use num_bigint::BigUint;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Number of cases checked, or a description of the first failure.
pub type SuiteResult = std::result::Result<usize, String>;

/// A named self-test suite.
pub struct Suite {
    pub name: &'static str,
    pub run: fn(u64) -> SuiteResult,
}

/// All suites, in execution order.
pub fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "field-axioms",
            run: field_axioms,
        },
        Suite {
            name: "power-laws",
            run: power_laws,
        },
        Suite {
            name: "echelon-forms",
            run: echelon_forms,
        },
        Suite {
            name: "rank-metric",
            run: rank_metric,
        },
        Suite {
            name: "subspace-lemmas",
            run: |seed| subspace_lemma_suite(seed, 1000),
        },
        Suite {
            name: "flag-construction",
            run: flag_construction,
        },
        Suite {
            name: "characterization",
            run: |seed| characterization_suite(seed, 200),
        },
        Suite {
            name: "bound-identities",
            run: bound_identities,
        },
    ]
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn gf(q: u64) -> Field {
    Field::from_order(q).expect("small prime power")
}

/// Uniformly random matrix with the given shape.
pub fn random_matrix<R: Rng>(rng: &mut R, field: &Field, rows: usize, cols: usize) -> MatGF {
    let q = field.order();
    let data: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..q)).collect())
        .collect();
    MatGF::from_rows(field.clone(), &data).expect("entries drawn in range")
}

/// Random invertible n x n matrix (rejection sampling).
pub fn random_invertible<R: Rng>(rng: &mut R, field: &Field, n: usize) -> MatGF {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random subspace of the given dimension inside GF(q)^ambient.
pub fn random_subspace<R: Rng>(
    rng: &mut R,
    field: &Field,
    ambient: usize,
    dim: usize,
) -> Subspace {
    loop {
        let m = random_matrix(rng, field, dim, ambient);
        if let Ok(s) = Subspace::from_matrix(&m) {
            if s.dim() == dim {
                return s;
            }
        }
    }
}

/// Random full flag of the given type (cut from a random invertible
/// generator).
pub fn random_flag<R: Rng>(rng: &mut R, field: &Field, ty: &FlagType) -> Flag {
    let g = random_invertible(rng, field, ty.n());
    Flag::from_matrix(&g, ty).expect("generator is invertible")
}

/// A matrix already in reduced echelon form with exactly the given pivot
/// columns; non-pivot entries to the right of each pivot are random.
fn random_rref_with_pivots<R: Rng>(
    rng: &mut R,
    field: &Field,
    ambient: usize,
    pivots: &[usize],
) -> MatGF {
    let q = field.order();
    let data: Vec<Vec<u64>> = pivots
        .iter()
        .map(|&p| {
            (0..ambient)
                .map(|c| {
                    if c == p {
                        1
                    } else if c < p || pivots.contains(&c) {
                        0
                    } else {
                        rng.gen_range(0..q)
                    }
                })
                .collect()
        })
        .collect();
    MatGF::from_rows(field.clone(), &data).expect("entries drawn in range")
}

fn field_axioms(_seed: u64) -> SuiteResult {
    let mut cases = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let f = gf(q);
        let els: Vec<_> = f.elements().collect();
        for &a in &els {
            for &b in &els {
                if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                    return Err(format!("commutativity fails in GF({q})"));
                }
                for &c in &els {
                    if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                        return Err(format!("distributivity fails in GF({q})"));
                    }
                    if f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)
                        || f.add(a, f.add(b, c)) != f.add(f.add(a, b), c)
                    {
                        return Err(format!("associativity fails in GF({q})"));
                    }
                    cases += 1;
                }
            }
        }
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 128, 243, 256] {
        let f = gf(q);
        for a in f.elements() {
            if a.is_zero() {
                continue;
            }
            let inv = f
                .inv(a)
                .map_err(|e| format!("inverse failed in GF({q}): {e}"))?;
            if f.mul(a, inv) != f.one() {
                return Err(format!("a * a^-1 != 1 in GF({q})"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn power_laws(seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 2);
    let mut cases = 0;
    const ORDERS: [u64; 9] = [2, 3, 4, 5, 8, 9, 16, 25, 27];
    for _ in 0..500 {
        let q = ORDERS[rng.gen_range(0..ORDERS.len())];
        let f = gf(q);
        let a = f.el(rng.gen_range(0..q)).unwrap();
        let i = rng.gen_range(0..40u64);
        let j = rng.gen_range(0..40u64);
        if f.mul(f.pow(a, i), f.pow(a, j)) != f.pow(a, i + j) {
            return Err(format!("a^i a^j != a^(i+j) for q={q} a={} i={i} j={j}", a.code()));
        }
        if f.pow(f.pow(a, i), j) != f.pow(a, i * j) {
            return Err(format!("(a^i)^j != a^(ij) for q={q} a={} i={i} j={j}", a.code()));
        }
        cases += 1;
    }
    Ok(cases)
}

fn echelon_forms(seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 3);
    let mut cases = 0;
    const ORDERS: [u64; 4] = [2, 3, 4, 5];
    for _ in 0..400 {
        let q = ORDERS[rng.gen_range(0..ORDERS.len())];
        let f = gf(q);
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=8);
        let m = random_matrix(&mut rng, &f, rows, cols);
        let ech = m.rref();
        let again = ech.matrix.rref();
        if again.matrix != ech.matrix || again.pivots != ech.pivots {
            return Err(format!("rref not idempotent for q={q} {rows}x{cols}"));
        }
        if ech.rank > rows.min(cols) {
            return Err(format!("rank exceeds min dimension for q={q}"));
        }
        // Row spaces are invariant under invertible recombination.
        if ech.rank > 0 {
            let t = random_invertible(&mut rng, &f, rows);
            let tm = t.mul(&m).map_err(|e| e.to_string())?;
            if tm.rref().matrix != ech.matrix {
                return Err(format!("rref not canonical under recombination q={q}"));
            }
        }
        // The inverse form is the column-reversed echelon of the
        // column-reversed matrix, with pivots mirrored.
        let inv = m.inv_rref();
        let mirror = m.reverse_cols().rref();
        let mirrored_pivots: Vec<usize> =
            mirror.pivots.iter().map(|&p| cols - 1 - p).collect();
        if inv.matrix != mirror.matrix.reverse_cols() || inv.pivots != mirrored_pivots {
            return Err(format!("inverse echelon mismatch for q={q} {rows}x{cols}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn rank_metric(_seed: u64) -> SuiteResult {
    let mut cases = 0;
    for (m, q, delta) in [
        (2usize, 2u64, 2usize),
        (2, 3, 2),
        (2, 4, 2),
        (3, 2, 2),
        (3, 2, 3),
        (4, 2, 4),
    ] {
        let code = MrdCode::gabidulin(m, delta, &gf(q)).map_err(|e| e.to_string())?;
        let words = code.codewords();
        let expected = (q as u128).pow(code.dimension() as u32);
        if words.len() as u128 != expected {
            return Err(format!("codeword count off for m={m} q={q} delta={delta}"));
        }
        if !verify_mrd(&words, delta).map_err(|e| e.to_string())? {
            return Err(format!("designed distance missed for m={m} q={q} delta={delta}"));
        }
        let d = min_rank_distance(&words).map_err(|e| e.to_string())?;
        if d != Some(delta) && words.len() > 1 {
            return Err(format!(
                "minimum distance {d:?} != {delta} for m={m} q={q} delta={delta}"
            ));
        }
        // Row truncations of full-distance codes stay maximum-distance:
        // keeping t rows leaves minimum rank distance exactly t.
        if delta == m {
            for t in 1..m {
                let trunc = truncate_code(&words, t).map_err(|e| e.to_string())?;
                let td = min_rank_distance(&trunc).map_err(|e| e.to_string())?;
                if td != Some(t) {
                    return Err(format!(
                        "truncation to {t} rows has distance {td:?}, want {t} (m={m} q={q})"
                    ));
                }
            }
        }
        cases += words.len();
    }
    Ok(cases)
}

/// Distance lemmas tying subspace distance to identifying vectors: the
/// distance never falls below the Hamming distance of the identifying
/// vectors (standard or inverse), and when two subspaces share an
/// identifying vector it equals twice the rank of the difference of their
/// echelon-complement blocks. Checks `pairs` random pairs.
pub fn subspace_lemma_suite(seed: u64, pairs: usize) -> SuiteResult {
    let mut rng = rng_for(seed, 5);
    let mut cases = 0;
    while cases < pairs {
        let q = if rng.gen_bool(0.5) { 2u64 } else { 3 };
        let f = gf(q);
        let n = rng.gen_range(4..=8);
        // Half the pairs share a pivot set by construction so the equality
        // branch is exercised often.
        let share = rng.gen_bool(0.5);
        let (u, v) = if share {
            let dim = rng.gen_range(1..n);
            let mut cols: Vec<usize> = (0..n).collect();
            for i in (1..cols.len()).rev() {
                cols.swap(i, rng.gen_range(0..=i));
            }
            let mut pivots = cols[..dim].to_vec();
            pivots.sort_unstable();
            let a = random_rref_with_pivots(&mut rng, &f, n, &pivots);
            let b = random_rref_with_pivots(&mut rng, &f, n, &pivots);
            (
                Subspace::from_matrix(&a).map_err(|e| e.to_string())?,
                Subspace::from_matrix(&b).map_err(|e| e.to_string())?,
            )
        } else {
            let du = rng.gen_range(1..n);
            let dv = rng.gen_range(1..n);
            (
                random_subspace(&mut rng, &f, n, du),
                random_subspace(&mut rng, &f, n, dv),
            )
        };
        let d = u.distance(&v).map_err(|e| e.to_string())?;
        let xu = u.identifying_vector();
        let xv = v.identifying_vector();
        let hx = xu.hamming(&xv).map_err(|e| e.to_string())?;
        if d < hx {
            return Err(format!(
                "distance {d} below identifying bound {hx} (q={q} n={n} case {cases})"
            ));
        }
        let yu = u.inverse_identifying_vector();
        let yv = v.inverse_identifying_vector();
        let hy = yu.hamming(&yv).map_err(|e| e.to_string())?;
        if d < hy {
            return Err(format!(
                "distance {d} below inverse identifying bound {hy} (q={q} n={n} case {cases})"
            ));
        }
        if xu.bits() == xv.bits() {
            let cu = u.pivot_complement(EchelonForm::Standard);
            let cv = v.pivot_complement(EchelonForm::Standard);
            let diff = cu.sub(&cv).map_err(|e| e.to_string())?;
            if d != 2 * diff.rank() {
                return Err(format!(
                    "coincident identifying vectors but distance {d} != 2*rank {} (q={q} n={n} case {cases})",
                    diff.rank()
                ));
            }
        }
        if yu.bits() == yv.bits() {
            let cu = u.pivot_complement(EchelonForm::Inverse);
            let cv = v.pivot_complement(EchelonForm::Inverse);
            let diff = cu.sub(&cv).map_err(|e| e.to_string())?;
            if d != 2 * diff.rank() {
                return Err(format!(
                    "coincident inverse vectors but distance {d} != 2*rank {} (q={q} n={n} case {cases})",
                    diff.rank()
                ));
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn flag_construction(_seed: u64) -> SuiteResult {
    let mut cases = 0;
    for (n, k, q) in [
        (4usize, 2usize, 2u64),
        (5, 2, 2),
        (6, 2, 2),
        (4, 2, 3),
        (5, 2, 3),
        (6, 3, 2),
        (7, 3, 2),
    ] {
        let f = gf(q);
        let ty = type_set(n, k).map_err(|e| e.to_string())?;
        let code = construct_odfc(n, k, ty.ticks(), &f).map_err(|e| e.to_string())?;
        let formula = size_formula(n, k, q).map_err(|e| e.to_string())?;
        if BigUint::from(code.len()) != formula {
            return Err(format!("size {} != formula {formula} for n={n} k={k} q={q}", code.len()));
        }
        for flag in code.flags() {
            let gen = flag
                .generator()
                .ok_or_else(|| format!("constructed flag lacks generator (n={n} k={k} q={q})"))?;
            if !gen.is_invertible() {
                return Err(format!("singular generator for n={n} k={k} q={q}"));
            }
        }
        let report = verify_odfc(&code).map_err(|e| e.to_string())?;
        if !report.is_odfc {
            return Err(format!(
                "construction misses the distance bound for n={n} k={k} q={q}"
            ));
        }
        if report.min_flag_distance != report.max_distance_bound {
            return Err(format!("distance report inconsistent for n={n} k={k} q={q}"));
        }
        cases += code.len();
    }
    Ok(cases)
}

/// The two optimality characterizations — minimum distance attaining the
/// bound, versus disjointness plus optimum projections — must agree on
/// every code. Checks `codes` random flag lists plus constructed codes and
/// their corruptions.
pub fn characterization_suite(seed: u64, codes: usize) -> SuiteResult {
    let mut rng = rng_for(seed, 7);
    let mut cases = 0;
    while cases < codes {
        let q = if rng.gen_bool(0.5) { 2u64 } else { 3 };
        let f = gf(q);
        let n = rng.gen_range(3..=5);
        let mut ticks: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.6)).collect();
        if ticks.is_empty() {
            ticks.push(rng.gen_range(1..n));
        }
        let ty = FlagType::new(n, ticks).map_err(|e| e.to_string())?;
        let flags: Vec<Flag> = match cases % 3 {
            // Purely random lists (usually far from optimal).
            0 => (0..rng.gen_range(2..=6))
                .map(|_| random_flag(&mut rng, &f, &ty))
                .collect(),
            // A constructed code restricted to a random admissible type.
            1 => {
                let k = if n >= 5 && rng.gen_bool(0.3) { 2 } else { n / 2 };
                let allowed = type_set(n, k).map_err(|e| e.to_string())?;
                let mut sub: Vec<usize> = allowed
                    .ticks()
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.7))
                    .collect();
                if sub.is_empty() {
                    sub.push(allowed.ticks()[0]);
                }
                let code = construct_odfc(n, k, &sub, &f).map_err(|e| e.to_string())?;
                code.flags().to_vec()
            }
            // A constructed code with one flag replaced at random.
            _ => {
                let k = n / 2;
                let allowed = type_set(n, k).map_err(|e| e.to_string())?;
                let code =
                    construct_odfc(n, k, allowed.ticks(), &f).map_err(|e| e.to_string())?;
                let mut flags = code.flags().to_vec();
                let at = rng.gen_range(0..flags.len());
                flags[at] = random_flag(&mut rng, &f, code.flag_type());
                flags
            }
        };
        let (by_distance, by_projection) = odfc_predicates(&flags).map_err(|e| e.to_string())?;
        if by_distance != by_projection {
            return Err(format!(
                "characterizations disagree ({by_distance} vs {by_projection}) for q={q} n={n} |C|={} case {cases}",
                flags.len()
            ));
        }
        // Cross-check the distance side against a direct recomputation.
        let actual_ty = flags[0].flag_type();
        let bound = 2 * actual_ty
            .ticks()
            .iter()
            .map(|&t| t.min(actual_ty.n() - t))
            .sum::<usize>();
        let direct = min_flag_distance(&flags).map_err(|e| e.to_string())?;
        if by_distance != (direct == bound) {
            return Err(format!("distance predicate inconsistent for case {cases}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn bound_identities(_seed: u64) -> SuiteResult {
    let mut cases = 0;
    for q in [2u64, 3, 4, 5] {
        for k in 1..=4usize {
            for a in 1..=3usize {
                for r in 0..k {
                    let n = (a + 1) * k + r;
                    if n > 12 {
                        continue;
                    }
                    // The closed form equals the layer sum.
                    let formula = size_formula(n, k, q).map_err(|e| e.to_string())?;
                    let mut sum = BigUint::from(1u32);
                    for i in 1..=a {
                        sum += BigUint::from(q).pow((i * k + r) as u32);
                    }
                    if formula != sum {
                        return Err(format!(
                            "size formula {formula} != layer sum {sum} for n={n} k={k} q={q}"
                        ));
                    }
                    let bound = cdc_upper_bound(n, k, q).map_err(|e| e.to_string())?;
                    if formula > bound.bound {
                        return Err(format!(
                            "size formula exceeds bound for n={n} k={k} q={q}"
                        ));
                    }
                    if r == 0 {
                        // Spreads: the bound is (q^n - 1)/(q^k - 1) and the
                        // construction fills it.
                        let want =
                            (BigUint::from(q).pow(n as u32) - 1u32) / (BigUint::from(q).pow(k as u32) - 1u32);
                        if bound.bound != want || !bound.exact || formula != want {
                            return Err(format!("spread identity fails for n={n} k={k} q={q}"));
                        }
                    }
                    if n == 2 * k + 1 && k >= 2 {
                        // One extra dimension: the bound is q^(k+1) + 1.
                        let want = BigUint::from(q).pow((k + 1) as u32) + 1u32;
                        if bound.bound != want || !bound.exact {
                            return Err(format!(
                                "q^(k+1)+1 identity fails for n={n} k={k} q={q}"
                            ));
                        }
                    }
                    let lines = GaussianBinomial::lines(q, r).value;
                    if BigUint::from(k as u64) > lines && !bound.exact {
                        return Err(format!(
                            "bound should be exact for n={n} k={k} q={q}"
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_default_seed() {
        for suite in suites() {
            let run = suite.run;
            match run(DEFAULT_SEED) {
                Ok(cases) => assert!(cases > 0, "{} checked no cases", suite.name),
                Err(msg) => panic!("{} failed: {msg}", suite.name),
            }
        }
    }

    #[test]
    fn suites_are_deterministic() {
        assert_eq!(
            subspace_lemma_suite(7, 120),
            subspace_lemma_suite(7, 120)
        );
        assert_eq!(characterization_suite(11, 30), characterization_suite(11, 30));
    }

    #[test]
    fn random_helpers_produce_valid_objects() {
        let mut rng = rng_for(DEFAULT_SEED, 99);
        let f = gf(3);
        let m = random_invertible(&mut rng, &f, 4);
        assert!(m.is_invertible());
        let s = random_subspace(&mut rng, &f, 5, 2);
        assert_eq!((s.dim(), s.ambient()), (2, 5));
        let ty = FlagType::new(4, vec![1, 3]).unwrap();
        let flag = random_flag(&mut rng, &f, &ty);
        assert_eq!(flag.flag_type(), &ty);
        let r = random_rref_with_pivots(&mut rng, &f, 6, &[1, 4]);
        let s = Subspace::from_matrix(&r).unwrap();
        assert_eq!(s.pivots(), &[1, 4]);
        assert_eq!(s.basis(), &r);
    }

    #[test]
    fn lemma_counts_match_request() {
        assert_eq!(subspace_lemma_suite(DEFAULT_SEED, 50), Ok(50));
        assert_eq!(characterization_suite(DEFAULT_SEED, 12), Ok(12));
    }
}
