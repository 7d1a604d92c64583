//! Golden reproduction checks for the published tables. Each check
//! returns the list of mismatched cells; the CLI `verify` command and
//! the acceptance suite both run these.

use crate::construction::{catalog, catalog_spec, compound};
use crate::enumeration::{clan_table, counting_table, lowest_entropy_series, ClanKey};
use crate::matrix::IntSquareMatrix;
use crate::measures::entropy_compression;
use crate::properties::analyze_properties;
use crate::spectra::{closed_form_svs, closed_form_svs_mppd, singular_values_numeric};
use num_bigint::BigInt;

pub const TABLE_NAMES: &[&str] = &[
    "table2", "table3", "table4", "table5", "table6", "table7", "table8",
];

/// Outcome of one table check.
pub struct TableCheck {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type TableFn = fn() -> Vec<String>;

/// Runs every table check, or just the named one.
pub fn run(only: Option<&str>) -> Vec<TableCheck> {
    let all: Vec<(&'static str, TableFn)> = vec![
        ("table2", table2),
        ("table3", table3),
        ("table4", table4),
        ("table5", table5),
        ("table6", table6),
        ("table7", table7),
        ("table8", table8),
    ];
    all.into_iter()
        .filter(|(name, _)| only.is_none_or(|o| o == *name))
        .map(|(name, f)| TableCheck { name, failures: f() })
        .collect()
}

struct Cells(Vec<String>);

impl Cells {
    fn new() -> Self {
        Cells(Vec::new())
    }

    fn check(&mut self, label: &str, ok: bool, detail: String) {
        if !ok {
            self.0.push(format!("{label}: {detail}"));
        }
    }

    fn close(&mut self, label: &str, got: f64, want: f64, abs_tol: f64) {
        self.check(label, (got - want).abs() <= abs_tol, format!("got {got}, want {want}"));
    }

    fn rel_close(&mut self, label: &str, got: f64, want: f64, rel_tol: f64) {
        let scale = want.abs().max(1.0);
        self.check(label, (got - want).abs() <= rel_tol * scale, format!("got {got}, want {want}"));
    }

    fn exact(&mut self, label: &str, got: Option<&BigInt>, want: i128) {
        let want = BigInt::from(want);
        self.check(
            label,
            got == Some(&want),
            format!("got {:?}, want {want}", got.map(|b| b.to_string())),
        );
    }
}

/// Matrix properties of 5E_3, M_3 and AT_3.
pub fn table2() -> Vec<String> {
    let mut c = Cells::new();

    let five_e3 = IntSquareMatrix::ones(3).unwrap().scale(5);
    let p = singular_values_numeric(&five_e3);
    let m = entropy_compression(&p.sigmas, 3).unwrap();
    c.rel_close("5E3 sigma1", p.sigmas[0], 15.0, 1e-4);
    c.close("5E3 H", m.h, 0.0, 1e-4);
    c.close("5E3 C", m.c, 100.0, 0.01);
    c.check("5E3 rank", p.rank == 1, format!("rank {}", p.rank));
    c.exact("5E3 R", p.r_index.exact(), 0);
    c.exact("5E3 L", p.l_index.exact(), 50_625);

    let p = singular_values_numeric(&catalog("m3").unwrap());
    let m = entropy_compression(&p.sigmas, 3).unwrap();
    for (i, want) in [15.0, 6.9282, 3.4641].iter().enumerate() {
        c.rel_close(&format!("M3 sigma{}", i + 1), p.sigmas[i], *want, 1e-4);
    }
    c.close("M3 H", m.h, 0.937098, 1e-4);
    c.close("M3 C", m.c, 14.7017, 0.01);
    c.check("M3 rank", p.rank == 3, format!("rank {}", p.rank));
    c.exact("M3 R", p.r_index.exact(), 2448);
    c.exact("M3 L", p.l_index.exact(), 53_073);

    let p = singular_values_numeric(&catalog("at3").unwrap());
    let m = entropy_compression(&p.sigmas, 3).unwrap();
    for (i, want) in [16.8481, 1.06837, 0.0].iter().enumerate() {
        c.rel_close(&format!("AT3 sigma{}", i + 1), p.sigmas[i], *want, 1e-4);
    }
    c.close("AT3 H", m.h, 0.22595, 1e-4);
    c.close("AT3 C", m.c, 79.4332, 0.01);
    c.check("AT3 rank", p.rank == 2, format!("rank {}", p.rank));
    c.exact("AT3 L", p.l_index.exact(), 80_577);
    c.rel_close("AT3 R", p.r_index.as_f64(), 1.30282, 1e-4);

    c.0
}

/// The order-9 sextet: three clans with their H, C and R values.
pub fn table3() -> Vec<String> {
    let mut c = Cells::new();
    let rows = clan_table(2).unwrap();
    let want: [(&str, f64, f64, i128); 3] = [
        ("{(1,3),(9,27)}", 1.12999, 48.572, 1_301_165_856),
        ("{(1,27),(3,9)}", 1.31781, 40.0241, 797_281_056),
        ("{(1,9),(3,27)}", 1.32208, 39.8296, 842_630_688),
    ];
    for (i, (key, h, cc, r)) in want.iter().enumerate() {
        let (clan, got_h, got_c) = &rows[i];
        c.check(&format!("clan {i} key"), clan.to_string() == *key, clan.to_string());
        c.close(&format!("clan {i} H"), *got_h, *h, 1e-4);
        c.close(&format!("clan {i} C"), *got_c, *cc, 0.01);
        let spec = crate::construction::FriersonSpec::new(1, clan.0.clone());
        let profile = closed_form_svs(&spec).unwrap();
        c.exact(&format!("clan {i} R"), profile.r_index.exact(), *r);
        c.check(
            &format!("clan {i} sigma1"),
            profile.sigma_sq_exact.as_ref().unwrap()[0] == 369 * 369,
            format!("{:?}", profile.sigma_sq_exact.as_ref().unwrap()[0]),
        );
    }
    c.0
}

/// The closed-form singular-value algebra at n = 3, 9, 27 against the
/// numeric eigensolve.
pub fn table4() -> Vec<String> {
    let mut c = Cells::new();
    for name in ["m3", "t9a", "t9b", "t9c", "f27a"] {
        let spec = catalog_spec(name).unwrap();
        let closed = closed_form_svs(&spec).unwrap();
        let numeric = singular_values_numeric(&catalog(name).unwrap());
        let sigma_1 = closed.sigmas[0];
        for (i, (a, b)) in numeric.sigmas.iter().zip(&closed.sigmas).enumerate() {
            c.check(
                &format!("{name} sigma{}", i + 1),
                (a - b).abs() <= 1e-9 * sigma_1,
                format!("numeric {a}, closed {b}"),
            );
        }
        let l = spec.level();
        c.check(
            &format!("{name} rank"),
            closed.rank == 2 * l + 1 && numeric.rank == 2 * l + 1,
            format!("closed {}, numeric {}", closed.rank, numeric.rank),
        );
    }
    c.0
}

/// All 15 order-27 clans, sorted ascending by entropy.
pub fn table5() -> Vec<String> {
    let mut c = Cells::new();
    let want: [(f64, f64); 15] = [
        (1.16247, 64.7291),
        (1.20646, 63.3944),
        (1.20697, 63.3788),
        (1.34763, 59.1110),
        (1.35191, 58.9813),
        (1.38498, 57.9778),
        (1.38566, 57.9573),
        (1.38973, 57.8338),
        (1.39035, 57.8149),
        (1.46991, 55.4010),
        (1.46996, 55.3995),
        (1.47129, 55.3593),
        (1.47148, 55.3533),
        (1.47178, 55.3443),
        (1.47193, 55.3398),
    ];
    let rows = clan_table(3).unwrap();
    c.check("row count", rows.len() == 15, format!("{}", rows.len()));
    for (i, ((_, h, cc), (want_h, want_c))) in rows.iter().zip(&want).enumerate() {
        c.close(&format!("row {i} H"), *h, *want_h, 1e-4);
        c.close(&format!("row {i} C"), *cc, *want_c, 0.01);
    }

    let r_of = |key: &ClanKey| {
        let spec = crate::construction::FriersonSpec::new(1, key.0.clone());
        closed_form_svs(&spec).unwrap()
    };
    c.exact("clan A R", r_of(&rows[0].0).r_index.exact(), 691_492_899_739_824);
    // the value published for clan O is actually clan N's R; both are
    // pinned here so the swap stays visible
    c.exact("clan N R", r_of(&rows[13].0).r_index.exact(), 420_327_995_019_696);
    c.exact("clan O R", r_of(&rows[14].0).r_index.exact(), 420_361_054_901_424);
    c.0
}

/// The lowest-entropy series through level 5, plus the level-6
/// asymptote values. The published sigma_total for n = 81 disagrees
/// with its own column and is excluded; our recomputed total is
/// checked for internal consistency instead.
pub fn table6() -> Vec<String> {
    let mut c = Cells::new();
    let rows = lowest_entropy_series(6).unwrap();
    let want_sigma1: [i128; 5] = [15, 369, 9855, 265_761, 7_174_575];
    let want_tails: [&[i128]; 5] = [
        &[4, 2],
        &[108, 54, 12, 6],
        &[2916, 1458, 324, 162, 36, 18],
        &[78_732, 39_366, 8748, 4374, 972, 486, 108, 54],
        &[
            2_125_764, 1_062_882, 236_196, 118_098, 26_244, 13_122, 2916, 1458, 324, 162,
        ],
    ];
    let want_hc: [(f64, f64); 5] = [
        (0.93709, 14.7017),
        (1.1299, 48.572),
        (1.16247, 64.7291),
        (1.16732, 73.4364),
        // the published H here disagrees with the column's own
        // spectrum; the published C back-solves to exactly this H
        (1.168001, 78.7368),
    ];
    // printed sigma totals, skipping the suspect n = 81 cell; the
    // n = 3 cell reads 26.3923 but the column's own sigmas (15,
    // 6.9282, 3.4641) sum to 25.3923
    let want_totals: [(usize, f64); 4] = [
        (0, 25.3923),
        (1, 680.76),
        (2, 18_366.3),
        (4, 1.3387e7),
    ];

    for (i, row) in rows.iter().take(5).enumerate() {
        let l = i + 1;
        c.check(
            &format!("l={l} sigma1"),
            row.sigma_1 == want_sigma1[i],
            format!("{}", row.sigma_1),
        );
        let spec_couples: Vec<_> = (0..l)
            .map(|j| crate::construction::Couple::new(3i128.pow(2 * j as u32), 3i128.pow(2 * j as u32 + 1)))
            .collect();
        let spec = crate::construction::FriersonSpec::new(1, spec_couples);
        let profile = closed_form_svs(&spec).unwrap();
        let sq = profile.sigma_sq_exact.as_ref().unwrap();
        for (t, &tail) in want_tails[i].iter().enumerate() {
            c.check(
                &format!("l={l} sigma{}/sqrt3", t + 2),
                sq[t + 1] == 3 * tail * tail,
                format!("sigma_sq {}", sq[t + 1]),
            );
        }
        c.close(&format!("l={l} H"), row.h, want_hc[i].0, 1e-4);
        c.close(&format!("l={l} C"), row.c, want_hc[i].1, 0.01);
        c.check(&format!("l={l} rank"), row.rank == 2 * l + 1, format!("{}", row.rank));
    }

    for &(i, total) in &want_totals {
        let l = i + 1;
        let spec_couples: Vec<_> = (0..l)
            .map(|j| crate::construction::Couple::new(3i128.pow(2 * j as u32), 3i128.pow(2 * j as u32 + 1)))
            .collect();
        let spec = crate::construction::FriersonSpec::new(1, spec_couples);
        let profile = closed_form_svs(&spec).unwrap();
        let got: f64 = profile.sigmas.iter().sum();
        c.rel_close(&format!("l={l} sigma_total"), got, total, 1e-3);
    }

    // exact arithmetic; the published l=6 pair (1.167856, 82.2829)
    // carries the same transcription slip as the l=5 H, and C still
    // agrees to a hundredth of a point
    c.close("l=6 H", rows[5].h, 1.1680916, 1e-4);
    c.close("l=6 C", rows[5].c, 82.2829, 0.01);
    c.0
}

/// The counting table through level 5, with the 8^90 big-integer
/// cross-check.
pub fn table7() -> Vec<String> {
    let mut c = Cells::new();
    let rows = counting_table(5);
    let squares: Vec<u64> = rows.iter().map(|r| r.num_squares).collect();
    c.check("num squares", squares == [1, 6, 90, 2520, 113_400], format!("{squares:?}"));
    let clans: Vec<u64> = rows.iter().map(|r| r.num_clans).collect();
    c.check("num clans", clans == [1, 3, 15, 105, 945], format!("{clans:?}"));
    let firsts: Vec<u64> = rows.iter().map(|r| r.first_couples).collect();
    c.check("first couples", firsts == [1, 6, 15, 28, 45], format!("{firsts:?}"));
    let exps: Vec<u64> = rows.iter().map(|r| r.variant_exponent).collect();
    c.check("variant exponents", exps == [0, 9, 90, 819, 7380], format!("{exps:?}"));
    match rows[2].variant_count.as_ref() {
        Some(v) => {
            let digits = v.to_string().len();
            c.check("8^90 digits", digits == 82, format!("{digits} digits"));
        }
        None => c.check("8^90 digits", false, "variant count missing at l=3".into()),
    }
    c.0
}

/// Compounded most-perfect order-4 squares at levels 1..4, with a
/// numeric cross-check for the materialized levels.
pub fn table8() -> Vec<String> {
    let mut c = Cells::new();
    let want_sigma1: [i128; 4] = [34, 2056, 131_104, 8_388_736];
    let want_hc: [(f64, f64); 4] = [
        (0.8702, 37.2284),
        (0.98975, 64.3023),
        (1.00156, 75.9175),
        (1.00257, 81.9199),
    ];
    for level in 1..=4usize {
        let profile = closed_form_svs_mppd(level).unwrap();
        let sq = profile.sigma_sq_exact.as_ref().unwrap();
        c.check(
            &format!("l={level} sigma1"),
            sq[0] == want_sigma1[level - 1] * want_sigma1[level - 1],
            format!("{}", sq[0]),
        );
        // tail i carries sigma/sqrt(5) = 2^(6l-3-2i)
        for i in 0..2 * level {
            let e = (6 * level - 3 - 2 * i) as u32;
            c.check(
                &format!("l={level} tail {i}"),
                sq[i + 1] == 5 * (1i128 << (2 * e)),
                format!("{}", sq[i + 1]),
            );
        }
        let n = 4usize.pow(level as u32);
        let m = entropy_compression(&profile.sigmas, n).unwrap();
        c.close(&format!("l={level} H"), m.h, want_hc[level - 1].0, 1e-4);
        c.close(&format!("l={level} C"), m.c, want_hc[level - 1].1, 0.01);
        c.check(
            &format!("l={level} rank"),
            profile.rank == 2 * level + 1,
            format!("{}", profile.rank),
        );
    }

    // numeric SVD cross-check for the levels small enough to build
    let alpha = catalog("mppd4alpha").unwrap();
    let mut square = alpha.clone();
    for level in 1..=3usize {
        if level > 1 {
            let prev = square.order() as i128;
            square = compound(&alpha, &square, prev * prev).unwrap();
        }
        let closed = closed_form_svs_mppd(level).unwrap();
        let numeric = singular_values_numeric(&square);
        let report = analyze_properties(&square);
        c.check(
            &format!("l={level} magic"),
            report.is_magic && report.is_natural,
            "compound is not a natural magic square".into(),
        );
        for (i, (a, b)) in numeric.sigmas.iter().zip(&closed.sigmas).enumerate() {
            c.check(
                &format!("l={level} numeric sigma{}", i + 1),
                (a - b).abs() <= 1e-9 * closed.sigmas[0],
                format!("numeric {a}, closed {b}"),
            );
        }
    }
    c.0
}
