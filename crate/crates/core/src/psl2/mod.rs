//! The group `PSL(2,19)`, its subgroup `H = Z/9 x| Z/19` of order 171, their
//! conjugacy structure, and the certified 9-dimensional projective matrix
//! representation generated by `tau`, `sigma`, `mu`.

mod rep;

pub(crate) use rep::{natural_class_sums, tensor_class_sums};
pub use rep::{abs_mod19, CertifyError, Gen, MuVariant, ProjectiveRep, RepError};

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

pub const P: u16 = 19;

/// An element of `PSL(2,19)`: a 2x2 matrix over `F_19` of determinant 1,
/// normalized modulo sign so that the first nonzero entry in row-major scan
/// order lies in `{1, ..., 9}`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    m: [u8; 4],
}

impl GroupElement {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        let p = i64::from(P);
        let m = [
            a.rem_euclid(p) as u8,
            b.rem_euclid(p) as u8,
            c.rem_euclid(p) as u8,
            d.rem_euclid(p) as u8,
        ];
        let det = (i64::from(m[0]) * i64::from(m[3]) - i64::from(m[1]) * i64::from(m[2]))
            .rem_euclid(p);
        assert_eq!(det, 1, "matrix is not in SL(2,19)");
        Self { m }.normalized()
    }

    fn normalized(self) -> Self {
        let first = self.m.iter().copied().find(|&v| v != 0).expect("nonzero matrix");
        if first > 9 {
            let m = self.m.map(|v| if v == 0 { 0 } else { P as u8 - v });
            Self { m }
        } else {
            self
        }
    }

    pub fn identity() -> Self {
        Self { m: [1, 0, 0, 1] }
    }

    pub fn entries(&self) -> [u8; 4] {
        self.m
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        let p = u32::from(P);
        let a = &self.m;
        let b = &o.m;
        let m = [
            (u32::from(a[0]) * u32::from(b[0]) + u32::from(a[1]) * u32::from(b[2])) % p,
            (u32::from(a[0]) * u32::from(b[1]) + u32::from(a[1]) * u32::from(b[3])) % p,
            (u32::from(a[2]) * u32::from(b[0]) + u32::from(a[3]) * u32::from(b[2])) % p,
            (u32::from(a[2]) * u32::from(b[1]) + u32::from(a[3]) * u32::from(b[3])) % p,
        ];
        (GroupElement { m: [m[0] as u8, m[1] as u8, m[2] as u8, m[3] as u8] }).normalized()
    }

    pub fn inv(&self) -> GroupElement {
        let p = P as u8;
        let m = &self.m;
        let neg = |v: u8| if v == 0 { 0 } else { p - v };
        (GroupElement { m: [m[3], neg(m[1]), neg(m[2]), m[0]] }).normalized()
    }

    pub fn pow(&self, k: u64) -> GroupElement {
        let mut acc = GroupElement::identity();
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        for k in 1..=20 {
            if g == GroupElement::identity() {
                return k;
            }
            g = g.mul(self);
        }
        unreachable!("element orders in PSL(2,19) divide 19 or 20")
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.m[2] == 0
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.m[0], self.m[1], self.m[2], self.m[3])
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Fixed abstract images of the three 9x9 generators. `tau` goes to the
/// standard translation, `sigma` to the diagonal torus element with
/// `u^2 = 9` (forced by `S T S^{-1} = T^9`), and `mu` to the antidiagonal
/// involution `[[0, c], [-c^{-1}, 0]]` with `c^2 = 5`: conjugating `T` by
/// the Gauss-sum matrix and completing the square gives
/// `M T M = T^{-5} N T^{-5}` with `N` the same matrix pattern at twisted
/// frequency, which pins the antidiagonal parameter, and the exhaustive
/// edge certificate then confirms the assignment.
pub fn tau_element() -> GroupElement {
    GroupElement::new(1, 1, 0, 1)
}

pub fn sigma_element() -> GroupElement {
    GroupElement::new(3, 0, 0, 13)
}

pub fn mu_element() -> GroupElement {
    GroupElement::new(0, 9, 2, 0)
}

/// Generator `a` of the `Z/9` factor of `H`, chosen so that the semidirect
/// law reads `(a,b)(c,d) = (a+c, 4^c b + d)` with `b = [[1,1],[0,1]]`:
/// conjugation by this element raises the translation by `4^{-1} = 5 = 9^2`.
pub fn h_a_element() -> GroupElement {
    GroupElement::new(9, 0, 0, 17)
}

pub fn h_b_element() -> GroupElement {
    GroupElement::new(1, 1, 0, 1)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GroupTag {
    G,
    H,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::G => write!(f, "PSL(2,19)"),
            GroupTag::H => write!(f, "H"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: GroupElement,
    pub size: usize,
    pub order: u32,
    pub label: String,
}

/// Full enumeration of a group with its conjugacy classes in the frozen
/// reference order (the character-table column order).
pub struct ConjugacyData {
    pub group: GroupTag,
    /// All elements, sorted; index positions are the element ids.
    pub elements: Vec<GroupElement>,
    index_of: HashMap<GroupElement, u32>,
    /// Class id of each element, aligned with `elements`.
    pub class_of: Vec<u32>,
    pub classes: Vec<ClassInfo>,
}

impl ConjugacyData {
    /// |G| = 3420 elements, 12 classes ordered
    /// `1, w1, w2, x, x^2, x^3, x^4, y, y^2, y^3, y^4, y^5`
    /// with `w1 = [[1,1],[0,1]]`, `x = [[9,0],[0,17]]` of order 9, and `y`
    /// the first element of order 10 in the element sort order.
    pub fn enumerate_g() -> Arc<ConjugacyData> {
        let elements = all_psl2_elements();
        let mut data = Self::with_classes(GroupTag::G, elements, None);
        // reference ordering of the raw classes
        let w1 = h_b_element();
        let x = h_a_element();
        let y = *data
            .elements
            .iter()
            .find(|g| g.order() == 10)
            .expect("PSL(2,19) has elements of order 10");
        let mut order: Vec<(u32, String)> = vec![(data.class_index(&GroupElement::identity()), "1".into())];
        order.push((data.class_index(&w1), "w1".into()));
        order.push((data.class_index(&w1.pow(2)), "w2".into()));
        for k in 1..=4u64 {
            order.push((
                data.class_index(&x.pow(k)),
                if k == 1 { "x".into() } else { format!("x^{k}") },
            ));
        }
        for k in 1..=5u64 {
            order.push((
                data.class_index(&y.pow(k)),
                if k == 1 { "y".into() } else { format!("y^{k}") },
            ));
        }
        data.reorder_classes(order);
        Arc::new(data)
    }

    /// |H| = 171 elements (upper-triangular subgroup), 11 classes ordered
    /// `1, a, a^2, ..., a^8, b, b^2`.
    pub fn enumerate_h() -> Arc<ConjugacyData> {
        let elements: Vec<GroupElement> = all_psl2_elements()
            .into_iter()
            .filter(GroupElement::is_upper_triangular)
            .collect();
        let mut data = Self::with_classes(GroupTag::H, elements, None);
        let a = h_a_element();
        let b = h_b_element();
        let mut order: Vec<(u32, String)> = vec![(data.class_index(&GroupElement::identity()), "1".into())];
        for k in 1..=8u64 {
            order.push((
                data.class_index(&a.pow(k)),
                if k == 1 { "a".into() } else { format!("a^{k}") },
            ));
        }
        order.push((data.class_index(&b), "b".into()));
        order.push((data.class_index(&b.pow(2)), "b^2".into()));
        data.reorder_classes(order);
        Arc::new(data)
    }

    fn with_classes(
        group: GroupTag,
        mut elements: Vec<GroupElement>,
        _unused: Option<()>,
    ) -> ConjugacyData {
        elements.sort_unstable();
        elements.dedup();
        let index_of: HashMap<GroupElement, u32> =
            elements.iter().enumerate().map(|(i, &g)| (g, i as u32)).collect();
        let n = elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let g = elements[i];
            let mut size = 0;
            for x in &elements {
                let conj = x.mul(&g).mul(&x.inv());
                let j = index_of[&conj] as usize;
                if class_of[j] == u32::MAX {
                    class_of[j] = cid;
                    size += 1;
                }
            }
            classes.push(ClassInfo { rep: g, size, order: g.order(), label: String::new() });
        }
        ConjugacyData { group, elements, index_of, class_of, classes }
    }

    fn reorder_classes(&mut self, order: Vec<(u32, String)>) {
        assert_eq!(order.len(), self.classes.len(), "class ordering must be complete");
        let mut seen = BTreeSet::new();
        for &(c, _) in &order {
            assert!(seen.insert(c), "duplicate class in reference ordering");
        }
        let mut remap = vec![0u32; self.classes.len()];
        let mut new_classes = Vec::with_capacity(order.len());
        for (new_id, (old_id, label)) in order.into_iter().enumerate() {
            remap[old_id as usize] = new_id as u32;
            let mut info = self.classes[old_id as usize].clone();
            info.label = label;
            new_classes.push(info);
        }
        for c in self.class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        self.classes = new_classes;
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn element_index(&self, g: &GroupElement) -> u32 {
        *self.index_of.get(g).expect("element not in group")
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index_of.contains_key(g)
    }

    /// Class id of an element.
    pub fn class_index(&self, g: &GroupElement) -> u32 {
        self.class_of[self.element_index(g) as usize]
    }

    /// Class of `g^k` for any representative `g` of the class.
    pub fn power_class(&self, class: u32, k: u64) -> u32 {
        self.class_index(&self.classes[class as usize].rep.pow(k))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

fn all_psl2_elements() -> Vec<GroupElement> {
    let p = i64::from(P);
    let mut set = BTreeSet::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if a != 0 {
                    // d = (1 + b c) / a
                    let inv_a = crate::linalg::mod_inverse_u64(a as u64, p as u64) as i64;
                    let d = (1 + b * c) % p * inv_a % p;
                    set.insert(GroupElement::new(a, b, c, d));
                } else if b != 0 {
                    // -bc = 1
                    let c_need =
                        (p - crate::linalg::mod_inverse_u64(b as u64, p as u64) as i64) % p;
                    if c == c_need {
                        for d in 0..p {
                            set.insert(GroupElement::new(a, b, c, d));
                        }
                    }
                }
            }
        }
    }
    set.into_iter().collect()
}

/// For each class of `h`, the class of `g` it fuses into.
pub fn fusion_map(h: &ConjugacyData, g: &ConjugacyData) -> Vec<u32> {
    h.classes.iter().map(|c| g.class_index(&c.rep)).collect()
}

/// The stabilizer of the point at infinity `[1:0]` of the projective line:
/// the upper-triangular elements.
pub fn stabilizer_of_infinity(g: &ConjugacyData) -> Vec<GroupElement> {
    g.elements.iter().copied().filter(GroupElement::is_upper_triangular).collect()
}

/// Number of distinct conjugates `x S x^{-1}` of a subgroup given by its
/// element set.
pub fn conjugate_subgroup_count(g: &ConjugacyData, subgroup: &[GroupElement]) -> usize {
    let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
    for x in &g.elements {
        let xinv = x.inv();
        let mut conj: Vec<GroupElement> =
            subgroup.iter().map(|s| x.mul(s).mul(&xinv)).collect();
        conj.sort_unstable();
        seen.insert(conj);
    }
    seen.len()
}
