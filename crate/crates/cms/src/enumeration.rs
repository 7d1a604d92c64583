//! Exhaustive enumeration of couple assignments per level, clan
//! classification by singular-value multiset, the counting formulae
//! and their integer-sequence cross-checks, and the derived measure
//! tables.

use crate::construction::{Couple, FriersonSpec};
use crate::error::{Error, Result};
use crate::measures::entropy_compression;
use crate::spectra::closed_form_svs;
use num_bigint::BigUint;

/// Practical cap: level 6 means order 729 and 7,484,400 assignments.
pub const MAX_LEVEL: usize = 6;

/// The isentropy class label: a canonical multiset of unordered
/// couples over the powers 3^0..3^(2l-1). Each couple is stored
/// ascending and the list is sorted by smaller member; two specs share
/// a key iff their closed-form singular-value multisets coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClanKey(pub Vec<Couple>);

impl ClanKey {
    pub fn of(spec: &FriersonSpec) -> Self {
        let mut couples: Vec<Couple> = spec.couples.iter().map(|c| c.sorted()).collect();
        couples.sort();
        Self(couples)
    }
}

impl std::fmt::Display for ClanKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| format!("({},{})", c.a, c.b)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One row of the counting table.
#[derive(Debug, Clone)]
pub struct CountRow {
    pub level: usize,
    pub order: usize,
    /// l(2l-1) first couples (hexagonal numbers, A000384).
    pub first_couples: u64,
    /// (2l)!/2^l squares (A000680).
    pub num_squares: u64,
    /// (2l-1)!! clans (A001147).
    pub num_clans: u64,
    /// (9^l - 9)/8, the total count of tiled subsquares of all orders.
    pub variant_exponent: u64,
    /// 8^variant_exponent, materialized through level 4; beyond that
    /// the (8, exponent) pair stands in for the unwieldy integer.
    pub variant_count: Option<BigUint>,
}

fn check_level(l: usize) -> Result<()> {
    if !(1..=MAX_LEVEL).contains(&l) {
        Err(Error::InvalidLevel(l, 1, MAX_LEVEL))
    } else {
        Ok(())
    }
}

/// All perfect matchings of the 2l powers of three into l couples, in
/// canonical clan order. Count: (2l-1)!!.
pub fn enumerate_clans(l: usize) -> Result<Vec<ClanKey>> {
    check_level(l)?;
    let powers: Vec<i128> = (0..2 * l as u32).map(|e| 3i128.pow(e)).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(l);
    matchings(&powers, &mut current, &mut out);
    Ok(out)
}

fn matchings(remaining: &[i128], current: &mut Vec<Couple>, out: &mut Vec<ClanKey>) {
    if remaining.is_empty() {
        out.push(ClanKey(current.clone()));
        return;
    }
    let first = remaining[0];
    for i in 1..remaining.len() {
        current.push(Couple::new(first, remaining[i]));
        let rest: Vec<i128> = remaining[1..]
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i - 1)
            .map(|(_, &v)| v)
            .collect();
        matchings(&rest, current, out);
        current.pop();
    }
}

/// All canonical-natural specs with k = 1: every clan times every
/// ordering of its couples over the levels. Count: (2l)!/2^l.
/// Couples are emitted smaller member first; index 0 is innermost.
pub fn enumerate_assignments(l: usize) -> Result<Vec<FriersonSpec>> {
    let clans = enumerate_clans(l)?;
    let mut out = Vec::new();
    for clan in &clans {
        let mut couples = clan.0.clone();
        permutations(&mut couples, 0, &mut |perm| {
            out.push(FriersonSpec::new(1, perm.to_vec()));
        });
    }
    Ok(out)
}

fn permutations(items: &mut [Couple], start: usize, visit: &mut impl FnMut(&[Couple])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}

fn pow_u64(base: u64, exp: u32) -> u64 {
    base.pow(exp)
}

/// The counting table for levels 1..=l_max, all entries exact.
pub fn counting_table(l_max: usize) -> Vec<CountRow> {
    (1..=l_max)
        .map(|l| {
            let lu = l as u64;
            let first_couples = lu * (2 * lu - 1);
            // (2l)!/2^l and (2l-1)!!
            let mut num_squares = 1u64;
            for i in 1..=2 * lu {
                num_squares *= i;
            }
            num_squares >>= lu;
            let num_clans = (1..=2 * lu).step_by(2).product::<u64>();
            let variant_exponent = (pow_u64(9, l as u32) - 9) / 8;
            let variant_count = if l <= 4 {
                Some(BigUint::from(8u32).pow(variant_exponent as u32))
            } else {
                None
            };
            CountRow {
                level: l,
                order: 3usize.pow(l as u32),
                first_couples,
                num_squares,
                num_clans,
                variant_exponent,
                variant_count,
            }
        })
        .collect()
}

/// Per-clan entropy and compression at one level, sorted ascending by
/// entropy with ties broken by the clan key.
pub fn clan_table(l: usize) -> Result<Vec<(ClanKey, f64, f64)>> {
    let clans = enumerate_clans(l)?;
    let n = 3usize.pow(l as u32);
    let mut rows = Vec::with_capacity(clans.len());
    for clan in clans {
        let spec = FriersonSpec::new(1, clan.0.clone());
        let profile = closed_form_svs(&spec)?;
        let m = entropy_compression(&profile.sigmas, n)?;
        rows.push((clan, m.h, m.c));
    }
    rows.sort_by(|a, b| {
        a.1.partial_cmp(&b.1)
            .unwrap()
            .then_with(|| a.0.cmp(&b.0))
    });
    Ok(rows)
}

/// One row of the lowest-entropy series.
#[derive(Debug, Clone)]
pub struct SeriesRow {
    pub level: usize,
    pub order: usize,
    pub sigma_1: i128,
    pub h: f64,
    pub c: f64,
    pub rank: usize,
}

/// The clan pairing consecutive powers, {(1,3),(9,27),(81,243),..},
/// evaluated purely from the closed form for l = 1..=l_max (no
/// matrices are materialized, so l_max up to 8 is cheap).
pub fn lowest_entropy_series(l_max: usize) -> Result<Vec<SeriesRow>> {
    if !(1..=8).contains(&l_max) {
        return Err(Error::InvalidLevel(l_max, 1, 8));
    }
    let mut out = Vec::with_capacity(l_max);
    for l in 1..=l_max {
        let couples: Vec<Couple> = (0..l)
            .map(|j| Couple::new(3i128.pow(2 * j as u32), 3i128.pow(2 * j as u32 + 1)))
            .collect();
        let spec = FriersonSpec::new(1, couples);
        let profile = closed_form_svs(&spec)?;
        let n = 3usize.pow(l as u32);
        let m = entropy_compression(&profile.sigmas, n)?;
        let sigma_1 = {
            let ni = n as i128;
            ni * (ni * ni + 1) / 2
        };
        out.push(SeriesRow {
            level: l,
            order: n,
            sigma_1,
            h: m.h,
            c: m.c,
            rank: 2 * l + 1,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::construct_frierson;
    use crate::properties::analyze_properties;
    use crate::spectra::singular_values_numeric;
    use std::collections::HashMap;

    #[test]
    fn assignment_counts() {
        assert_eq!(enumerate_assignments(1).unwrap().len(), 1);
        assert_eq!(enumerate_assignments(2).unwrap().len(), 6);
        assert_eq!(enumerate_assignments(3).unwrap().len(), 90);
        assert_eq!(enumerate_assignments(4).unwrap().len(), 2520);
        assert_eq!(enumerate_assignments(5).unwrap().len(), 113_400);
    }

    #[test]
    fn clan_counts() {
        assert_eq!(enumerate_clans(1).unwrap().len(), 1);
        assert_eq!(enumerate_clans(2).unwrap().len(), 3);
        assert_eq!(enumerate_clans(3).unwrap().len(), 15);
        assert_eq!(enumerate_clans(4).unwrap().len(), 105);
        assert_eq!(enumerate_clans(5).unwrap().len(), 945);
        assert!(enumerate_clans(0).is_err());
    }

    #[test]
    fn level_2_clans_explicit() {
        let clans = enumerate_clans(2).unwrap();
        let keys: Vec<String> = clans.iter().map(|c| c.to_string()).collect();
        assert!(keys.contains(&"{(1,3),(9,27)}".to_string()));
        assert!(keys.contains(&"{(1,27),(3,9)}".to_string()));
        assert!(keys.contains(&"{(1,9),(3,27)}".to_string()));
    }

    #[test]
    fn level_1_assignment() {
        let specs = enumerate_assignments(1).unwrap();
        assert_eq!(specs[0], FriersonSpec::new(1, vec![Couple::new(1, 3)]));
    }

    #[test]
    fn clans_partition_assignments_into_factorial_classes() {
        for l in 1..=4 {
            let mut groups: HashMap<ClanKey, usize> = HashMap::new();
            for spec in enumerate_assignments(l).unwrap() {
                *groups.entry(ClanKey::of(&spec)).or_default() += 1;
            }
            let fact: usize = (1..=l).product();
            assert_eq!(groups.len(), enumerate_clans(l).unwrap().len());
            assert!(groups.values().all(|&v| v == fact));
        }
    }

    #[test]
    fn all_enumerated_specs_are_canonical_natural() {
        for spec in enumerate_assignments(3).unwrap() {
            assert!(spec.is_canonical_natural());
        }
    }

    #[test]
    fn counting_table_matches_published_values() {
        let rows = counting_table(5);
        let squares: Vec<u64> = rows.iter().map(|r| r.num_squares).collect();
        assert_eq!(squares, vec![1, 6, 90, 2520, 113_400]);
        let clans: Vec<u64> = rows.iter().map(|r| r.num_clans).collect();
        assert_eq!(clans, vec![1, 3, 15, 105, 945]);
        let firsts: Vec<u64> = rows.iter().map(|r| r.first_couples).collect();
        assert_eq!(firsts, vec![1, 6, 15, 28, 45]);
        let exps: Vec<u64> = rows.iter().map(|r| r.variant_exponent).collect();
        assert_eq!(exps, vec![0, 9, 90, 819, 7380]);
        // 8^90 has 82 digits
        let v27 = rows[2].variant_count.as_ref().unwrap();
        assert_eq!(v27.to_string().len(), 82);
        assert_eq!(rows[0].variant_count.as_ref().unwrap(), &BigUint::from(1u32));
        assert!(rows[4].variant_count.is_none());
    }

    #[test]
    fn clan_table_level_2() {
        let rows = clan_table(2).unwrap();
        let hs: Vec<f64> = rows.iter().map(|r| r.1).collect();
        assert!((hs[0] - 1.12999).abs() < 1e-4);
        assert!((hs[1] - 1.31781).abs() < 1e-4);
        assert!((hs[2] - 1.32208).abs() < 1e-4);
    }

    #[test]
    fn clan_table_level_3_extremes() {
        let rows = clan_table(3).unwrap();
        assert_eq!(rows.len(), 15);
        assert_eq!(rows[0].0.to_string(), "{(1,3),(9,27),(81,243)}");
        assert!((rows[0].1 - 1.16247).abs() < 1e-4);
        assert!((rows[0].2 - 64.7291).abs() < 1e-2);
        assert!((rows[14].1 - 1.47193).abs() < 1e-4);
        assert!((rows[14].2 - 55.3398).abs() < 1e-2);
    }

    #[test]
    fn series_values() {
        let rows = lowest_entropy_series(6).unwrap();
        let sigma: Vec<i128> = rows.iter().map(|r| r.sigma_1).collect();
        assert_eq!(&sigma[..5], &[15, 369, 9855, 265_761, 7_174_575]);
        assert!((rows[0].h - 0.93709).abs() < 1e-4);
        // exact arithmetic on the published spectrum; the published
        // compression at l = 5 (78.7368) back-solves to exactly this H
        assert!((rows[4].h - 1.168001).abs() < 1e-4);
        assert!((rows[4].c - 78.7368).abs() < 1e-2);
        assert!((rows[5].h - 1.1680916).abs() < 1e-4);
        assert!((rows[5].c - 82.2793).abs() < 1e-2);
    }

    #[test]
    fn series_is_monotone_and_bounded() {
        let rows = lowest_entropy_series(8).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].h > w[0].h);
        }
        // converging to about 1.168 from below the asymptote
        assert!(rows.iter().all(|r| r.h < 1.16811));
        assert!((rows[7].h - 1.168).abs() < 2e-4);
    }

    #[test]
    fn isentropy_within_a_clan() {
        // every level-2 spec in a clan yields the same numeric SV multiset
        let mut by_clan: HashMap<ClanKey, Vec<Vec<f64>>> = HashMap::new();
        for spec in enumerate_assignments(2).unwrap() {
            let m = construct_frierson(&spec).unwrap();
            assert!(analyze_properties(&m).is_magic);
            let p = singular_values_numeric(&m);
            by_clan.entry(ClanKey::of(&spec)).or_default().push(p.sigmas);
        }
        for (_, lists) in by_clan {
            let base = &lists[0];
            for other in &lists[1..] {
                for (a, b) in base.iter().zip(other) {
                    assert!((a - b).abs() <= 1e-9 * base[0]);
                }
            }
        }
    }
}
