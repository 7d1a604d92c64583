//! Construction of every square family used here: the parameterized
//! order-3 block, its compounds at all levels 3^l, the generic
//! pattern-plus-offset compounding operator, Lucas's order-3
//! parameterization, and a catalog of named squares.

use crate::error::{Error, Result};
use crate::matrix::{BlockGrid, IntSquareMatrix};
use serde::{Deserialize, Serialize};

/// A pair of parameters feeding the order-3 parameterized block.
/// Unordered for clan purposes; ordered as given for construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Couple {
    pub a: i128,
    pub b: i128,
}

impl Couple {
    pub fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    /// The same couple with its smaller member first.
    pub fn sorted(self) -> Self {
        if self.a <= self.b {
            self
        } else {
            Self { a: self.b, b: self.a }
        }
    }
}

/// A constant k plus an ordered list of couples; fully determines one
/// compound square of order 3^l. Couple index 0 is the innermost
/// (finest) scale.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FriersonSpec {
    pub k: i128,
    pub couples: Vec<Couple>,
}

impl FriersonSpec {
    pub fn new(k: i128, couples: Vec<Couple>) -> Self {
        Self { k, couples }
    }

    /// Nesting depth; the square has order 3^level.
    pub fn level(&self) -> usize {
        self.couples.len()
    }

    pub fn order(&self) -> usize {
        3usize.pow(self.level() as u32)
    }

    /// True iff k = 1 and the couple members are exactly the powers
    /// 3^0, 3^1, .., 3^(2l-1), which forces a natural square.
    pub fn is_canonical_natural(&self) -> bool {
        let l = self.level();
        if l == 0 || self.k != 1 {
            return false;
        }
        let mut members: Vec<i128> = self
            .couples
            .iter()
            .flat_map(|c| [c.a, c.b])
            .collect();
        members.sort_unstable();
        let expected: Vec<i128> = (0..2 * l as u32).map(|e| 3i128.pow(e)).collect();
        members == expected
    }

    pub fn require_natural(&self) -> Result<()> {
        if self.is_canonical_natural() {
            Ok(())
        } else {
            Err(Error::NotNatural(format!("{:?}", self.couples)))
        }
    }
}

/// Parameters of Lucas's 1894 order-3 square; `c` is the center entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LucasParams {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

/// The parameterized order-3 associative block
///
/// ```text
/// 2a+b    0    a+2b
///  2b    a+b    2a
///   a   2a+2b    b
/// ```
///
/// All rows, columns and diagonals sum to 3(a+b); the center is a+b.
pub fn frierson_block(c: Couple) -> IntSquareMatrix {
    let (a, b) = (c.a, c.b);
    IntSquareMatrix::from_rows(&[
        &[2 * a + b, 0, a + 2 * b],
        &[2 * b, a + b, 2 * a],
        &[a, 2 * a + 2 * b, b],
    ])
    .expect("3x3 literal")
}

/// Builds the compound square of order 3^l from a spec:
/// k*E_n plus, for each couple at depth j (innermost first),
/// E_{3^(l-1-j)} (x) block(couple_j) (x) E_{3^j}.
///
/// For canonical-natural specs the result is a natural associative
/// magic square with line sum n(n^2+1)/2.
pub fn construct_frierson(spec: &FriersonSpec) -> Result<IntSquareMatrix> {
    let l = spec.level();
    if l == 0 {
        return Err(Error::EmptySpec);
    }
    let n = spec.order();
    let mut acc = IntSquareMatrix::ones(n)?.scale(spec.k);
    for (j, &couple) in spec.couples.iter().enumerate() {
        let outer = IntSquareMatrix::ones(3usize.pow((l - 1 - j) as u32))?;
        let inner = IntSquareMatrix::ones(3usize.pow(j as u32))?;
        let term = outer.kronecker(&frierson_block(couple)).kronecker(&inner);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Generic compounding: block (i, j) of the result is
/// base + (pattern(i, j) - 1) * step * E.
pub fn compound(
    pattern: &IntSquareMatrix,
    base: &IntSquareMatrix,
    step: i128,
) -> Result<IntSquareMatrix> {
    if step == 0 {
        return Err(Error::InvalidStep);
    }
    let m = pattern.order();
    let mut blocks = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let offset = (pattern.get(i, j) - 1) * step;
            blocks.push(base.map(|e| e + offset));
        }
    }
    Ok(BlockGrid::new(m, blocks)?.compose())
}

/// Lucas's order-3 square with center c; all lines sum to 3c.
pub fn lucas_square(p: LucasParams) -> IntSquareMatrix {
    let LucasParams { a, b, c } = p;
    IntSquareMatrix::from_rows(&[
        &[c + a, c - a - b, c + b],
        &[c - a + b, c, c + a - b],
        &[c - b, c + a + b, c - a],
    ])
    .expect("3x3 literal")
}

/// The catalog of named squares.
pub const CATALOG_NAMES: &[&str] = &[
    "luoshu",
    "m3",
    "at3",
    "t9a",
    "t9b",
    "t9c",
    "t9d",
    "t9e",
    "t9f",
    "d3",
    "b3",
    "c3",
    "f27a",
    "browne_b27",
    "mppd4alpha",
];

fn spec_of(k: i128, couples: &[(i128, i128)]) -> FriersonSpec {
    FriersonSpec::new(k, couples.iter().map(|&(a, b)| Couple::new(a, b)).collect())
}

/// The Frierson spec behind a catalog square, where one exists.
pub fn catalog_spec(name: &str) -> Option<FriersonSpec> {
    let spec = match name {
        "m3" => spec_of(1, &[(3, 1)]),
        "luoshu" => spec_of(1, &[(1, 3)]),
        "d3" => spec_of(1, &[(27, 9)]),
        "b3" => spec_of(1, &[(27, 1)]),
        "c3" => spec_of(1, &[(9, 1)]),
        "t9a" => spec_of(1, &[(3, 1), (27, 9)]),
        "t9d" => spec_of(1, &[(27, 9), (3, 1)]),
        "t9b" => spec_of(1, &[(27, 1), (9, 3)]),
        "t9e" => spec_of(1, &[(9, 3), (27, 1)]),
        "t9c" => spec_of(1, &[(9, 1), (27, 3)]),
        "t9f" => spec_of(1, &[(27, 3), (9, 1)]),
        "f27a" => spec_of(1, &[(3, 1), (27, 9), (243, 81)]),
        _ => return None,
    };
    Some(spec)
}

/// Returns a named square exactly as published.
pub fn catalog(name: &str) -> Result<IntSquareMatrix> {
    match name {
        "at3" => IntSquareMatrix::addition_table(3),
        "mppd4alpha" => IntSquareMatrix::from_rows(&[
            &[1, 15, 4, 14],
            &[8, 10, 5, 11],
            &[13, 3, 16, 2],
            &[12, 6, 9, 7],
        ]),
        "browne_b27" => Ok(browne_b27()),
        _ => match catalog_spec(name) {
            Some(spec) => construct_frierson(&spec),
            None => Err(Error::UnknownCatalog(name.to_string())),
        },
    }
}

/// Browne's order-27 compound square, built by its three-stage block
/// recipe: B3, then B9 from multiples of 3*E_3, then B27 from
/// multiples of 9*E_9.
pub fn browne_b27() -> IntSquareMatrix {
    let b3 = IntSquareMatrix::from_rows(&[&[28, 57, 2], &[3, 29, 55], &[56, 1, 30]])
        .expect("3x3 literal");
    let b9_offsets: [[i128; 3]; 3] = [[81, 168, 3], [6, 84, 162], [165, 0, 87]];
    let b9 = grid_plus_offsets(&b3, &b9_offsets);
    let b27_offsets: [[i128; 3]; 3] = [[243, 504, 9], [18, 252, 486], [495, 0, 261]];
    grid_plus_offsets(&b9, &b27_offsets)
}

fn grid_plus_offsets(base: &IntSquareMatrix, offsets: &[[i128; 3]; 3]) -> IntSquareMatrix {
    let blocks = offsets
        .iter()
        .flatten()
        .map(|&off| base.map(|e| e + off))
        .collect();
    BlockGrid::new(3, blocks).expect("3x3 grid").compose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> IntSquareMatrix {
        IntSquareMatrix::from_rows(&[&[8, 1, 6], &[3, 5, 7], &[4, 9, 2]]).unwrap()
    }

    #[test]
    fn block_examples() {
        let b = frierson_block(Couple::new(3, 1));
        assert_eq!(b, m3().map(|e| e - 1));
        // swapping the couple flips left-right
        let f = frierson_block(Couple::new(1, 3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(f.get(i, j), b.get(i, 2 - j));
            }
        }
        let eq = frierson_block(Couple::new(1, 1));
        assert_eq!(
            eq,
            IntSquareMatrix::from_rows(&[&[3, 0, 3], &[2, 2, 2], &[1, 4, 1]]).unwrap()
        );
        for i in 0..3 {
            assert_eq!((0..3).map(|j| eq.get(i, j)).sum::<i128>(), 6);
        }
    }

    #[test]
    fn frierson_level_one_is_m3() {
        let spec = FriersonSpec::new(1, vec![Couple::new(3, 1)]);
        assert_eq!(construct_frierson(&spec).unwrap(), m3());
    }

    #[test]
    fn t9a_block_structure() {
        let spec = FriersonSpec::new(1, vec![Couple::new(3, 1), Couple::new(27, 9)]);
        let t9a = construct_frierson(&spec).unwrap();
        let grid = BlockGrid::decompose(&t9a, 3).unwrap();
        let m3 = m3();
        let e3 = IntSquareMatrix::ones(3).unwrap();
        assert_eq!(*grid.block(0, 0), &m3 + &e3.scale(63));
        assert_eq!(*grid.block(0, 1), m3);
        assert_eq!(*grid.block(1, 1), &m3 + &e3.scale(36));
        // line sum 369
        assert_eq!((0..9).map(|j| t9a.get(0, j)).sum::<i128>(), 369);
        // explicit first row from the published form
        let row0: Vec<i128> = (0..9).map(|j| t9a.get(0, j)).collect();
        assert_eq!(row0, vec![71, 64, 69, 8, 1, 6, 53, 46, 51]);
    }

    #[test]
    fn f27a_contains_t9a() {
        let t9a = catalog("t9a").unwrap();
        let f27a = catalog("f27a").unwrap();
        let grid = BlockGrid::decompose(&f27a, 3).unwrap();
        assert_eq!(*grid.block(0, 1), t9a);
        assert_eq!(
            *grid.block(0, 0),
            &t9a + &IntSquareMatrix::ones(9).unwrap().scale(7 * 81)
        );
        assert_eq!((0..27).map(|j| f27a.get(0, j)).sum::<i128>(), 9855);
    }

    #[test]
    fn frierson_matches_compound() {
        let t9a = catalog("t9a").unwrap();
        assert_eq!(compound(&m3(), &m3(), 9).unwrap(), t9a);
        let f27a = catalog("f27a").unwrap();
        assert_eq!(compound(&m3(), &t9a, 81).unwrap(), f27a);
    }

    #[test]
    fn compound_rejects_zero_step() {
        assert!(matches!(compound(&m3(), &m3(), 0), Err(Error::InvalidStep)));
    }

    #[test]
    fn mppd_compound_line_sum() {
        let alpha = catalog("mppd4alpha").unwrap();
        let m16 = compound(&alpha, &alpha, 16).unwrap();
        assert_eq!(m16.order(), 16);
        assert_eq!((0..16).map(|j| m16.get(0, j)).sum::<i128>(), 2056);
        assert!(m16.is_natural());
    }

    #[test]
    fn lucas_examples() {
        // Lucas(3,1,5) reproduces M_3 itself
        assert_eq!(lucas_square(LucasParams { a: 3, b: 1, c: 5 }), m3());
        assert_eq!(
            lucas_square(LucasParams { a: 0, b: 0, c: 7 }),
            IntSquareMatrix::ones(3).unwrap().scale(7)
        );
    }

    #[test]
    fn catalog_partner_squares() {
        let d3 = catalog("d3").unwrap();
        assert_eq!(
            d3,
            IntSquareMatrix::from_rows(&[&[64, 1, 46], &[19, 37, 55], &[28, 73, 10]]).unwrap()
        );
        let b3 = catalog("b3").unwrap();
        assert_eq!(
            b3,
            IntSquareMatrix::from_rows(&[&[56, 1, 30], &[3, 29, 55], &[28, 57, 2]]).unwrap()
        );
        let c3 = catalog("c3").unwrap();
        assert_eq!(
            c3,
            IntSquareMatrix::from_rows(&[&[20, 1, 12], &[3, 11, 19], &[10, 21, 2]]).unwrap()
        );
        // T_9D is D_3 compounded on the M_3 pattern with unit step
        assert_eq!(catalog("t9d").unwrap(), compound(&m3(), &d3, 1).unwrap());
        // T_9B uses steps of 3 on the same pattern
        assert_eq!(catalog("t9b").unwrap(), compound(&m3(), &b3, 3).unwrap());
        // T_9C steps by 3 in its own C_3 pattern
        assert_eq!(catalog("t9c").unwrap(), compound(&c3, &c3, 3).unwrap());
    }

    #[test]
    fn catalog_naturality() {
        for name in ["t9a", "t9b", "t9c", "t9d", "t9e", "t9f"] {
            assert!(catalog(name).unwrap().is_natural(), "{name} not natural");
        }
        assert!(catalog("f27a").unwrap().is_natural());
        assert!(catalog("browne_b27").unwrap().is_natural());
        assert!(catalog("mppd4alpha").unwrap().is_natural());
    }

    #[test]
    fn unknown_catalog_name() {
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalog(_))));
    }

    #[test]
    fn canonical_natural_detection() {
        assert!(spec_of(1, &[(3, 1), (27, 9)]).is_canonical_natural());
        assert!(!spec_of(0, &[(3, 1), (27, 9)]).is_canonical_natural());
        assert!(!spec_of(1, &[(1, 1)]).is_canonical_natural());
        assert!(!spec_of(1, &[(3, 1), (27, 27)]).is_canonical_natural());
    }

    #[test]
    fn empty_spec_rejected() {
        let spec = FriersonSpec::new(1, vec![]);
        assert!(matches!(construct_frierson(&spec), Err(Error::EmptySpec)));
    }
}
