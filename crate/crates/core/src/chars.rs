//! Character tables of `PSL(2,19)` and its subgroup `H`, inner products,
//! symmetric-cube and tensor characters, decomposition into irreducibles,
//! branching to `H`, and isotypic projectors.
//!
//! The table values are transcribed symbolically — `nu` the quadratic Gauss
//! sum, `a_k = 2 cos(2 k pi/9)`, `b_k = -2 cos(k pi/5)` — and then verified
//! by the orthogonality relations, so every inner product certifies
//! integrality exactly.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cyclo::{a_value, b_value, gauss_nu, rat, Cyclotomic, Rational};
use crate::linalg::Matrix;
use crate::psl2::{ConjugacyData, GroupTag, ProjectiveRep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    TableMismatch,
    /// Decomposition produced a negative or non-integral multiplicity: the
    /// input is not the character of an actual representation.
    NotACharacter(String),
    Uncertified,
    DimensionTooLarge(usize),
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::TableMismatch => write!(f, "characters belong to different tables"),
            CharError::NotACharacter(m) => write!(f, "not a character: {m}"),
            CharError::Uncertified => write!(f, "projector needs a certified representation"),
            CharError::DimensionTooLarge(d) => {
                write!(f, "projector accumulation restricted to dim <= 81, got {d}")
            }
        }
    }
}

impl std::error::Error for CharError {}

/// A class function with cyclotomic values, ordered like the reference
/// class list of its group.
#[derive(Clone, PartialEq, Debug)]
pub struct Character {
    pub group: GroupTag,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn conj(&self) -> Character {
        Character {
            group: self.group,
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    pub fn add(&self, o: &Character) -> Character {
        assert_eq!(self.group, o.group);
        Character {
            group: self.group,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Character) -> Character {
        assert_eq!(self.group, o.group);
        Character {
            group: self.group,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.sub(b)).collect(),
        }
    }
}

/// An irreducible-character table over the frozen class ordering.
pub struct CharacterTable {
    pub group: GroupTag,
    pub conj: Arc<ConjugacyData>,
    pub names: Vec<&'static str>,
    pub rows: Vec<Character>,
}

pub const G_NAMES: [&str; 12] = [
    "T1", "W9", "W9bar", "W18_1", "W18_2", "W18_3", "W18_4", "W20_1", "W20_2", "W20_3",
    "W20_4", "W19",
];

pub const H_NAMES: [&str; 11] =
    ["V0", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V9bar"];

impl CharacterTable {
    /// The table of `PSL(2,19)` over classes
    /// `1, w1, w2, x, x^2, x^3, x^4, y, y^2, y^3, y^4, y^5`.
    pub fn table_g(conj: Arc<ConjugacyData>) -> CharacterTable {
        assert_eq!(conj.group, GroupTag::G);
        let nu = gauss_nu();
        let nub = nu.conj();
        let int = Cyclotomic::from_int;
        let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
        rows.push(vec![int(1); 12]);
        rows.push(vec![
            int(9),
            nu.clone(),
            nub.clone(),
            int(0),
            int(0),
            int(0),
            int(0),
            int(1),
            int(-1),
            int(1),
            int(-1),
            int(1),
        ]);
        rows.push(vec![
            int(9),
            nub,
            nu,
            int(0),
            int(0),
            int(0),
            int(0),
            int(1),
            int(-1),
            int(1),
            int(-1),
            int(1),
        ]);
        for i in 1..=4i64 {
            let mut row = vec![int(18), int(-1), int(-1), int(0), int(0), int(0), int(0)];
            for k in 1..=5i64 {
                row.push(b_value(k * i));
            }
            rows.push(row);
        }
        for i in 1..=4i64 {
            let mut row = vec![int(20), int(1), int(1)];
            for k in 1..=4i64 {
                row.push(a_value(k * i));
            }
            row.extend([int(0), int(0), int(0), int(0), int(0)]);
            rows.push(row);
        }
        rows.push(vec![
            int(19),
            int(0),
            int(0),
            int(1),
            int(1),
            int(1),
            int(1),
            int(-1),
            int(-1),
            int(-1),
            int(-1),
            int(-1),
        ]);
        CharacterTable {
            group: GroupTag::G,
            conj,
            names: G_NAMES.to_vec(),
            rows: rows
                .into_iter()
                .map(|values| Character { group: GroupTag::G, values })
                .collect(),
        }
    }

    /// The table of `H` over classes `1, a, a^2, ..., a^8, b, b^2`, with
    /// `V_k(a^j) = zeta_9^{kj}` and `V9` the restriction of `W9`.
    pub fn table_h(conj: Arc<ConjugacyData>) -> CharacterTable {
        assert_eq!(conj.group, GroupTag::H);
        let nu = gauss_nu();
        let nub = nu.conj();
        let int = Cyclotomic::from_int;
        let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
        for k in 0..=8i64 {
            let mut row = vec![int(1)];
            for j in 1..=8i64 {
                row.push(Cyclotomic::root_of_unity(9, k * j));
            }
            row.push(int(1));
            row.push(int(1));
            rows.push(row);
        }
        let mut v9 = vec![int(9)];
        v9.extend(std::iter::repeat_with(|| int(0)).take(8));
        v9.push(nu.clone());
        v9.push(nub.clone());
        rows.push(v9);
        let mut v9b = vec![int(9)];
        v9b.extend(std::iter::repeat_with(|| int(0)).take(8));
        v9b.push(nub);
        v9b.push(nu);
        rows.push(v9b);
        CharacterTable {
            group: GroupTag::H,
            conj,
            names: H_NAMES.to_vec(),
            rows: rows
                .into_iter()
                .map(|values| Character { group: GroupTag::H, values })
                .collect(),
        }
    }

    pub fn row(&self, name: &str) -> &Character {
        let i = self.names.iter().position(|&n| n == name).expect("unknown irreducible name");
        &self.rows[i]
    }

    pub fn group_order(&self) -> usize {
        self.conj.len()
    }

    /// `<a, b> = (1/|G|) sum_C |C| a(C) conj(b(C))`.
    pub fn inner_product(&self, a: &Character, b: &Character) -> Result<Cyclotomic, CharError> {
        if a.group != self.group || b.group != self.group {
            return Err(CharError::TableMismatch);
        }
        let mut acc = Cyclotomic::zero(1);
        for (ci, info) in self.conj.classes.iter().enumerate() {
            let term = a.values[ci]
                .mul(&b.values[ci].conj())
                .scale(&Rational::from_integer(BigInt::from(info.size)));
            acc = acc.add(&term);
        }
        Ok(acc.scale(&rat(1, self.group_order() as i64)))
    }

    /// Character of the third symmetric power:
    /// `(x(g)^3 + 3 x(g^2) x(g) + 2 x(g^3)) / 6` pointwise over classes.
    pub fn sym3(&self, x: &Character) -> Result<Character, CharError> {
        if x.group != self.group {
            return Err(CharError::TableMismatch);
        }
        let values = (0..self.conj.num_classes())
            .map(|ci| {
                let v1 = &x.values[ci];
                let v2 = &x.values[self.conj.power_class(ci as u32, 2) as usize];
                let v3 = &x.values[self.conj.power_class(ci as u32, 3) as usize];
                let cube = v1.mul(v1).mul(v1);
                let term2 = v2.mul(v1).scale(&rat(3, 1));
                let term3 = v3.scale(&rat(2, 1));
                cube.add(&term2).add(&term3).scale(&rat(1, 6))
            })
            .collect();
        Ok(Character { group: self.group, values })
    }

    /// Pointwise product: the character of the tensor product.
    pub fn tensor(&self, a: &Character, b: &Character) -> Result<Character, CharError> {
        if a.group != self.group || b.group != self.group {
            return Err(CharError::TableMismatch);
        }
        Ok(Character {
            group: self.group,
            values: a.values.iter().zip(&b.values).map(|(x, y)| x.mul(y)).collect(),
        })
    }

    /// Decompose into irreducibles. Errors unless every multiplicity is a
    /// nonnegative integer and the combination reconstructs the input
    /// exactly — a consistency alarm for inputs that are not characters of
    /// actual representations.
    pub fn decompose(&self, x: &Character) -> Result<Vec<(usize, u64)>, CharError> {
        if x.group != self.group {
            return Err(CharError::TableMismatch);
        }
        let mut mults = Vec::new();
        let mut recon = Character {
            group: self.group,
            values: vec![Cyclotomic::zero(1); self.conj.num_classes()],
        };
        for (i, row) in self.rows.iter().enumerate() {
            let m = self.inner_product(x, row)?;
            let Some(mi) = m.try_integer() else {
                return Err(CharError::NotACharacter(format!(
                    "multiplicity of {} is {}",
                    self.names[i], m
                )));
            };
            if mi.is_negative() {
                return Err(CharError::NotACharacter(format!(
                    "multiplicity of {} is {}",
                    self.names[i], mi
                )));
            }
            if !mi.is_zero() {
                let mu = u64::try_from(mi.clone()).expect("small multiplicity");
                recon = recon.add(&Character {
                    group: self.group,
                    values: row
                        .values
                        .iter()
                        .map(|v| v.scale(&Rational::from_integer(mi.clone())))
                        .collect(),
                });
                mults.push((i, mu));
            }
        }
        if recon != *x {
            return Err(CharError::NotACharacter(
                "irreducible combination does not reconstruct the input".into(),
            ));
        }
        Ok(mults)
    }

    /// Human-readable decomposition like `T1 + 2*W20_3 + W19`.
    pub fn format_decomposition(&self, mults: &[(usize, u64)]) -> String {
        let parts: Vec<String> = mults
            .iter()
            .map(|&(i, m)| {
                if m == 1 {
                    self.names[i].to_string()
                } else {
                    format!("{}*{}", m, self.names[i])
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Per-class coefficients `(dim W / |G|) conj(chi_W(C))` of the isotypic
    /// projector onto the `W`-part.
    pub fn projector_coefficients(&self, w: usize) -> Vec<Cyclotomic> {
        let row = &self.rows[w];
        let dim = row.degree().try_rational().expect("integral degree");
        let scale = dim / Rational::from_integer(BigInt::from(self.group_order()));
        row.values.iter().map(|v| v.conj().scale(&scale)).collect()
    }
}

/// Restriction of a character of `G` to `H` along the class-fusion map.
pub fn restrict_to_h(
    g_table: &CharacterTable,
    h_table: &CharacterTable,
    x: &Character,
) -> Result<Character, CharError> {
    if x.group != GroupTag::G || g_table.group != GroupTag::G || h_table.group != GroupTag::H {
        return Err(CharError::TableMismatch);
    }
    let fusion = crate::psl2::fusion_map(&h_table.conj, &g_table.conj);
    Ok(Character {
        group: GroupTag::H,
        values: fusion.iter().map(|&gc| x.values[gc as usize].clone()).collect(),
    })
}

/// Which representation the projector accumulates over.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ProjectorTarget {
    /// The 9-dimensional generator representation itself.
    Natural9,
    /// `W9 (x) conj(W9)`, dimension 81.
    Tensor81,
}

/// Apply the isotypic projector `psi_W` to the chosen representation by
/// accumulating the group sum (3420 matrix terms, grouped by class). Heavy;
/// restricted to dimension <= 81. The result is idempotent with rank
/// `dim(W) x multiplicity`.
pub fn apply_projector(
    rep: &ProjectiveRep,
    table: &CharacterTable,
    w: usize,
    target: ProjectorTarget,
) -> Result<Matrix<Cyclotomic>, CharError> {
    if !rep.is_certified() {
        return Err(CharError::Uncertified);
    }
    if table.group != GroupTag::G {
        return Err(CharError::TableMismatch);
    }
    let dim = match target {
        ProjectorTarget::Natural9 => 9,
        ProjectorTarget::Tensor81 => 81,
    };
    if dim > 81 {
        return Err(CharError::DimensionTooLarge(dim));
    }
    let sums = match target {
        ProjectorTarget::Natural9 => crate::psl2::natural_class_sums(rep),
        ProjectorTarget::Tensor81 => crate::psl2::tensor_class_sums(rep),
    };
    let coeffs = table.projector_coefficients(w);
    let mut acc = Matrix::<Cyclotomic>::zero(dim, dim);
    for (ci, sum) in sums.iter().enumerate() {
        acc = acc.add(&sum.map(|v| v.mul(&coeffs[ci])));
    }
    Ok(acc)
}

/// The integrality bookkeeping behind the five isogeny factors: the grouped
/// characters `chi_0 .. chi_4`, whether each is integer-valued on every
/// class, their degrees, and the subtorus dimensions they cut out of
/// `1 + H^{4,3}*`.
pub struct IsogenyFactors {
    pub chi: [Character; 5],
    pub all_integral: [bool; 5],
    pub degrees: [u64; 5],
    pub subtorus_dims: [u64; 5],
}

pub fn isogeny_factor_check(table: &CharacterTable) -> Result<IsogenyFactors, CharError> {
    assert_eq!(table.group, GroupTag::G);
    let groups: [&[&str]; 5] = [
        &["T1"],
        &["W9", "W9bar"],
        &["W18_1", "W18_2", "W18_3", "W18_4"],
        &["W19"],
        &["W20_1", "W20_2", "W20_3", "W20_4"],
    ];
    let chi: Vec<Character> = groups
        .iter()
        .map(|names| {
            names
                .iter()
                .map(|n| table.row(n).clone())
                .reduce(|a, b| a.add(&b))
                .expect("nonempty group")
        })
        .collect();
    let all_integral: Vec<bool> = chi
        .iter()
        .map(|c| c.values.iter().all(|v| v.try_integer().is_some()))
        .collect();
    let degrees: Vec<u64> = chi
        .iter()
        .map(|c| u64::try_from(c.degree().try_integer().expect("integral degree")).unwrap())
        .collect();
    // multiplicities of each grouped family inside 1 + H^{4,3}*, weighted by
    // the irreducible dimensions
    let w9 = table.row("W9").clone();
    let sym3 = table.sym3(&w9)?;
    let i3 = table.tensor(&w9, table.row("W9bar"))?;
    let h43 = sym3.sub(&i3);
    let ambient = table.rows[0].add(&h43); // 1 + H^{4,3}*
    let mults = table.decompose(&ambient)?;
    let mut dims = [0u64; 5];
    for (idx, m) in mults {
        let name = table.names[idx];
        let gi = groups.iter().position(|g| g.contains(&name)).expect("grouped");
        let d = u64::try_from(table.rows[idx].degree().try_integer().unwrap()).unwrap();
        dims[gi] += m * d;
    }
    Ok(IsogenyFactors {
        chi: chi.try_into().map_err(|_| CharError::TableMismatch).unwrap(),
        all_integral: all_integral.try_into().unwrap(),
        degrees: degrees.try_into().unwrap(),
        subtorus_dims: dims,
    })
}

/// First orthogonality: `<chi_i, chi_j> = delta_ij` exactly.
pub fn rows_orthonormal(table: &CharacterTable) -> bool {
    for i in 0..table.rows.len() {
        for j in 0..table.rows.len() {
            let ip = table
                .inner_product(&table.rows[i], &table.rows[j])
                .expect("same table");
            let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero(1) };
            if ip != expect {
                return false;
            }
        }
    }
    true
}

/// Second orthogonality: `sum_chi chi(C) conj(chi(C')) = delta |G|/|C|`.
pub fn columns_orthogonal(table: &CharacterTable) -> bool {
    let ncl = table.conj.num_classes();
    for c1 in 0..ncl {
        for c2 in 0..ncl {
            let mut acc = Cyclotomic::zero(1);
            for row in &table.rows {
                acc = acc.add(&row.values[c1].mul(&row.values[c2].conj()));
            }
            let expect = if c1 == c2 {
                Cyclotomic::from_rational(rat(
                    table.group_order() as i64,
                    table.conj.classes[c1].size as i64,
                ))
            } else {
                Cyclotomic::zero(1)
            };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

pub fn degree_square_sum(table: &CharacterTable) -> BigInt {
    table
        .rows
        .iter()
        .map(|r| {
            let d = r.degree().try_integer().expect("integral degree");
            &d * &d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat_int;

    fn g_table() -> CharacterTable {
        CharacterTable::table_g(ConjugacyData::enumerate_g())
    }

    fn h_table() -> CharacterTable {
        CharacterTable::table_h(ConjugacyData::enumerate_h())
    }

    #[test]
    fn tables_satisfy_orthogonality() {
        let g = g_table();
        assert!(rows_orthonormal(&g));
        assert!(columns_orthogonal(&g));
        assert_eq!(degree_square_sum(&g), BigInt::from(3420));
        let h = h_table();
        assert!(rows_orthonormal(&h));
        assert!(columns_orthogonal(&h));
        assert_eq!(degree_square_sum(&h), BigInt::from(171));
    }

    #[test]
    fn w9_inner_products() {
        let g = g_table();
        let w9 = g.row("W9");
        let w9b = g.row("W9bar");
        assert_eq!(g.inner_product(w9, w9).unwrap(), Cyclotomic::one());
        assert!(g.inner_product(w9, w9b).unwrap().is_zero());
    }

    #[test]
    fn sym3_of_w9_trace_vector() {
        let g = g_table();
        let s = g.sym3(g.row("W9")).unwrap();
        let nu = gauss_nu();
        let int = Cyclotomic::from_int;
        let expect = vec![
            int(165),
            int(3).sub(&nu),
            int(3).sub(&nu.conj()),
            int(0),
            int(0),
            int(3),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(5),
        ];
        assert_eq!(s.values, expect);
        // degree = C(9+2, 3) = 165
        assert_eq!(s.degree().try_integer(), Some(165.into()));
    }

    #[test]
    fn sym3_of_trivial_is_trivial() {
        let g = g_table();
        let t1 = g.row("T1").clone();
        assert_eq!(g.sym3(&t1).unwrap(), t1);
    }

    #[test]
    fn sym3_w9_decomposition() {
        let g = g_table();
        let s = g.sym3(g.row("W9")).unwrap();
        let d = g.decompose(&s).unwrap();
        let pretty = g.format_decomposition(&d);
        assert_eq!(
            pretty,
            "T1 + W9bar + W18_1 + W18_3 + W20_1 + W20_2 + 2*W20_3 + W20_4 + W19"
        );
        // <sym3 W9, W20_3> = 2
        let ip = g.inner_product(&s, g.row("W20_3")).unwrap();
        assert_eq!(ip.try_integer(), Some(2.into()));
    }

    #[test]
    fn tensor_w9_w9bar_decomposition() {
        let g = g_table();
        let t = g.tensor(g.row("W9"), g.row("W9bar")).unwrap();
        assert_eq!(t.degree().try_integer(), Some(81.into()));
        let d = g.decompose(&t).unwrap();
        assert_eq!(g.format_decomposition(&d), "T1 + W20_1 + W20_2 + W20_3 + W20_4");
        // tensoring with the trivial character is the identity
        let w19 = g.row("W19").clone();
        assert_eq!(g.tensor(&w19, g.row("T1")).unwrap(), w19);
    }

    #[test]
    fn h43_dual_decomposition() {
        let g = g_table();
        let s = g.sym3(g.row("W9")).unwrap();
        let i3 = g.tensor(g.row("W9"), g.row("W9bar")).unwrap();
        let h43 = s.sub(&i3);
        let d = g.decompose(&h43).unwrap();
        assert_eq!(g.format_decomposition(&d), "W9bar + W18_1 + W18_3 + W20_3 + W19");
        assert_eq!(h43.degree().try_integer(), Some(84.into()));
    }

    #[test]
    fn decompose_trivial() {
        let g = g_table();
        let d = g.decompose(g.row("T1")).unwrap();
        assert_eq!(d, vec![(0, 1)]);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let g = g_table();
        // W9 - W9bar is a virtual character with a negative multiplicity
        let v = g.row("W9").sub(g.row("W9bar"));
        assert!(matches!(g.decompose(&v), Err(CharError::NotACharacter(_))));
        // and a non-integral scalar multiple fails outright
        let half = Character {
            group: GroupTag::G,
            values: g.row("W9").values.iter().map(|v| v.scale(&rat(1, 2))).collect(),
        };
        assert!(matches!(g.decompose(&half), Err(CharError::NotACharacter(_))));
    }

    #[test]
    fn restriction_branching() {
        let g = g_table();
        let h = h_table();
        let cases = [
            ("W18_3", "V9 + V9bar"),
            ("W19", "V0 + V9 + V9bar"),
            ("W20_3", "V3 + V6 + V9 + V9bar"),
            ("W20_1", "V1 + V8 + V9 + V9bar"),
        ];
        for (name, expect) in cases {
            let r = restrict_to_h(&g, &h, g.row(name)).unwrap();
            assert_eq!(r.degree(), g.row(name).degree(), "restriction preserves degree");
            let d = h.decompose(&r).unwrap();
            assert_eq!(h.format_decomposition(&d), expect, "restriction of {name}");
        }
        // every restriction decomposes with nonnegative integer multiplicities
        for name in G_NAMES {
            let r = restrict_to_h(&g, &h, g.row(name)).unwrap();
            assert!(h.decompose(&r).is_ok(), "restriction of {name} decomposes");
        }
    }

    #[test]
    fn isogeny_factor_bookkeeping() {
        let g = g_table();
        let rep = isogeny_factor_check(&g).unwrap();
        assert_eq!(rep.all_integral, [true; 5]);
        assert_eq!(rep.degrees, [1, 18, 72, 19, 80]);
        assert_eq!(rep.subtorus_dims, [1, 9, 36, 19, 20]);
        // chi_1 at {w1} is nu + conj(nu) = -1
        assert_eq!(rep.chi[1].values[1].try_integer(), Some((-1).into()));
        // chi_2 at {y} is b1 + b2 + b3 + b4 = 0
        assert_eq!(rep.chi[2].values[7].try_integer(), Some(0.into()));
    }

    #[test]
    fn decompose_inverts_reconstruction() {
        // random nonnegative-integer combinations decompose back exactly
        let g = g_table();
        let h = h_table();
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for table in [&g, &h] {
            for _ in 0..10 {
                let mults: Vec<u64> = (0..table.rows.len()).map(|_| next() % 4).collect();
                let mut combo = Character {
                    group: table.group,
                    values: vec![Cyclotomic::zero(1); table.conj.num_classes()],
                };
                for (i, &m) in mults.iter().enumerate() {
                    if m > 0 {
                        let scaled = Character {
                            group: table.group,
                            values: table.rows[i]
                                .values
                                .iter()
                                .map(|v| v.scale(&rat_int(m as i64)))
                                .collect(),
                        };
                        combo = combo.add(&scaled);
                    }
                }
                let decomposed = table.decompose(&combo).unwrap();
                let expect: Vec<(usize, u64)> = mults
                    .iter()
                    .enumerate()
                    .filter(|&(_, &m)| m > 0)
                    .map(|(i, &m)| (i, m))
                    .collect();
                assert_eq!(decomposed, expect);
            }
        }
    }

    #[test]
    fn rep_trace_decomposes_as_w9() {
        let conj = ConjugacyData::enumerate_g();
        let mut rep = ProjectiveRep::build(conj.clone()).unwrap();
        rep.certify().unwrap();
        let g = CharacterTable::table_g(conj);
        let tr = Character { group: GroupTag::G, values: rep.trace_character().unwrap() };
        let d = g.decompose(&tr).unwrap();
        assert_eq!(g.format_decomposition(&d), "W9");
    }

    #[test]
    fn projectors_on_the_natural_representation() {
        let conj = ConjugacyData::enumerate_g();
        let mut rep = ProjectiveRep::build(conj.clone()).unwrap();
        rep.certify().unwrap();
        let g = CharacterTable::table_g(conj);
        let w9 = g.names.iter().position(|&n| n == "W9").unwrap();
        let p = apply_projector(&rep, &g, w9, ProjectorTarget::Natural9).unwrap();
        assert!(p == Matrix::<Cyclotomic>::identity(9), "W9-isotypic projector is 1");
        let w9b = g.names.iter().position(|&n| n == "W9bar").unwrap();
        let q = apply_projector(&rep, &g, w9b, ProjectorTarget::Natural9).unwrap();
        assert!(q == Matrix::<Cyclotomic>::zero(9, 9), "W9bar does not occur");
        // trace of psi_{W20_3} on W9 (x) conj(W9) equals dim x multiplicity = 20,
        // through the character identity
        let t = g.tensor(g.row("W9"), g.row("W9bar")).unwrap();
        let ip = g.inner_product(&t, g.row("W20_3")).unwrap();
        let dim = g.row("W20_3").degree();
        assert_eq!(dim.mul(&ip).try_integer(), Some(20.into()));
    }
}
