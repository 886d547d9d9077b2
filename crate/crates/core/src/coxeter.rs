//! The triangle Coxeter group `W = ⟨r, s, t⟩` with `(rs)⁴ = (st)⁵ = (tr)² = 1`.
//!
//! Elements are 3×3 matrices of the Tits reflection representation over
//! `Q(√2, √5)`. The representation is faithful, so matrix equality is group
//! equality and no rewriting system is needed. Descents are read off from the
//! signs of the images of simple roots: `g·α_s < 0` iff `ℓ(gs) < ℓ(g)`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use hashbrown::HashSet;
use once_cell::race::OnceBox;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::FieldElement;

/// One of the three Coxeter generators, ordered `r < s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    R,
    S,
    T,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::R, Generator::S, Generator::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Generator::R => 'r',
            Generator::S => 's',
            Generator::T => 't',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'r' => Some(Generator::R),
            's' => Some(Generator::S),
            't' => Some(Generator::T),
            _ => None,
        }
    }
}

/// A small set of generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GeneratorSet(u8);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn from_slice(gens: &[Generator]) -> Self {
        gens.iter().fold(Self::EMPTY, |acc, &g| acc.with(g))
    }

    pub fn with(self, g: Generator) -> Self {
        GeneratorSet(self.0 | 1 << g.index())
    }

    pub fn contains(self, g: Generator) -> bool {
        self.0 & (1 << g.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Generator> {
        Generator::ALL.into_iter().filter(move |&g| self.contains(g))
    }
}

/// A word over `{r, s, t}`; not necessarily reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// ShortLex comparison: shorter words first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            fmt::Write::write_char(f, g.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A word contained a character outside `{r, s, t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWordError {
    pub input: String,
    pub position: usize,
}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid letter at position {} in word `{}`", self.position, self.input)
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Generator::from_letter(c).ok_or_else(|| ParseWordError { input: s.into(), position: i })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Square matrices over the coefficient field.
pub type Matrix = [[FieldElement; 3]; 3];

fn identity_matrix() -> Matrix {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| if i == j { FieldElement::one() } else { FieldElement::zero() })
    })
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            let mut acc = FieldElement::zero();
            for k in 0..3 {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc += &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

fn determinant(m: &Matrix) -> FieldElement {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// The Coxeter matrix and the Tits generator matrices of a rank-3 Coxeter
/// system whose exponents lie in `{2, 3, 4, 5}`.
#[derive(Debug)]
pub struct CoxeterSystem {
    exponents: [[u32; 3]; 3],
    /// `2cos(π/m_ij)`, the off-diagonal entries of row `i` of generator `i`.
    couplings: [[FieldElement; 3]; 3],
    generators: [Matrix; 3],
}

/// Exponent outside the set this kernel has field constants for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnsupportedExponent(pub u32);

impl CoxeterSystem {
    /// Builds the system with `(rs)^m_rs = (st)^m_st = (tr)^m_tr = 1`.
    pub fn new(m_rs: u32, m_st: u32, m_tr: u32) -> Result<Self, UnsupportedExponent> {
        let mut exponents = [[1u32; 3]; 3];
        for (i, j, m) in [(0, 1, m_rs), (1, 2, m_st), (2, 0, m_tr)] {
            exponents[i][j] = m;
            exponents[j][i] = m;
        }
        let two_cos = |m: u32| -> Result<FieldElement, UnsupportedExponent> {
            Ok(match m {
                2 => FieldElement::zero(),
                3 => FieldElement::one(),
                4 => FieldElement::sqrt2(),
                5 => FieldElement::golden_ratio(),
                other => return Err(UnsupportedExponent(other)),
            })
        };
        let mut couplings: [[FieldElement; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    couplings[i][j] = two_cos(exponents[i][j])?;
                }
            }
        }
        // σ_i(α_j) = α_j + 2cos(π/m_ij) α_i, σ_i(α_i) = −α_i; columns are images.
        let generators = core::array::from_fn(|i| {
            let mut m = identity_matrix();
            for j in 0..3 {
                m[i][j] = if i == j { -FieldElement::one() } else { couplings[i][j].clone() };
            }
            m
        });
        Ok(CoxeterSystem { exponents, couplings, generators })
    }

    pub fn exponent(&self, a: Generator, b: Generator) -> u32 {
        self.exponents[a.index()][b.index()]
    }

    pub fn generator_matrix(&self, g: Generator) -> &Matrix {
        &self.generators[g.index()]
    }

    /// `m · σ_g`, touching only the affected entries.
    fn right_mul_gen(&self, m: &mut Matrix, g: Generator) {
        let s = g.index();
        for row in m.iter_mut() {
            let pivot = row[s].clone();
            if pivot.is_zero() {
                continue;
            }
            for j in 0..3 {
                if j == s {
                    row[j] = -&pivot;
                } else if !self.couplings[s][j].is_zero() {
                    row[j] += &(&pivot * &self.couplings[s][j]);
                }
            }
        }
    }

    /// `σ_g · m`; only row `g` changes.
    fn left_mul_gen(&self, m: &mut Matrix, g: Generator) {
        let s = g.index();
        let new_row: [FieldElement; 3] = core::array::from_fn(|j| {
            let mut acc = -&m[s][j];
            for l in 0..3 {
                if l != s && !self.couplings[s][l].is_zero() && !m[l][j].is_zero() {
                    acc += &(&self.couplings[s][l] * &m[l][j]);
                }
            }
            acc
        });
        m[s] = new_row;
    }
}

/// The (2,4,5) triangle group: `m_rs = 4`, `m_st = 5`, `m_tr = 2`.
pub fn system() -> &'static CoxeterSystem {
    static SYSTEM: OnceBox<CoxeterSystem> = OnceBox::new();
    SYSTEM.get_or_init(|| Box::new(CoxeterSystem::new(4, 5, 2).expect("exponents are supported")))
}

/// An element of `W`, stored as its Tits matrix with a lazily computed
/// canonical (ShortLex-least reduced) word.
pub struct GroupElement {
    matrix: Matrix,
    word: OnceBox<Word>,
}

impl Clone for GroupElement {
    fn clone(&self) -> Self {
        let word = OnceBox::new();
        if let Some(w) = self.word.get() {
            let _ = word.set(Box::new(w.clone()));
        }
        GroupElement { matrix: self.matrix.clone(), word }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(\"{}\")", self.canonical_word())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self.canonical_word(), f)
    }
}

impl GroupElement {
    fn from_matrix(matrix: Matrix) -> Self {
        GroupElement { matrix, word: OnceBox::new() }
    }

    fn with_word(matrix: Matrix, word: Word) -> Self {
        let cell = OnceBox::new();
        let _ = cell.set(Box::new(word));
        GroupElement { matrix, word: cell }
    }

    pub fn identity() -> Self {
        Self::with_word(identity_matrix(), Word::empty())
    }

    pub fn generator(g: Generator) -> Self {
        Self::with_word(system().generator_matrix(g).clone(), Word::new(alloc::vec![g]))
    }

    /// Product of the generator matrices of `w`, left to right.
    pub fn from_word(w: &Word) -> Self {
        let sys = system();
        let mut m = identity_matrix();
        for &g in w.letters() {
            sys.right_mul_gen(&mut m, g);
        }
        Self::from_matrix(m)
    }

    /// Parses a word and evaluates it.
    pub fn parse(s: &str) -> Result<Self, ParseWordError> {
        Ok(Self::from_word(&s.parse()?))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix()
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        Self::from_matrix(mat_mul(&self.matrix, &other.matrix))
    }

    /// `self · g`.
    pub fn mul_gen(&self, g: Generator) -> GroupElement {
        let mut m = self.matrix.clone();
        system().right_mul_gen(&mut m, g);
        Self::from_matrix(m)
    }

    /// `g · self`.
    pub fn gen_mul(&self, g: Generator) -> GroupElement {
        let mut m = self.matrix.clone();
        system().left_mul_gen(&mut m, g);
        Self::from_matrix(m)
    }

    pub fn determinant(&self) -> FieldElement {
        determinant(&self.matrix)
    }

    /// Inverse via the adjugate; the determinant is `±1`.
    pub fn inverse(&self) -> GroupElement {
        let m = &self.matrix;
        let det = determinant(m);
        let negate = det.signum() < 0;
        debug_assert!(det.is_one() || (-&det).is_one());
        let cof = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
        // adj[i][j] = (−1)^(i+j) · minor(j, i)
        let others = |k: usize| match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let inv: Matrix = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let (r1, r2) = others(j);
                let (c1, c2) = others(i);
                let minor = cof(r1, r2, c1, c2);
                let signed = if (i + j) % 2 == 1 { -minor } else { minor };
                if negate { -signed } else { signed }
            })
        });
        Self::from_matrix(inv)
    }

    /// `self · α_g` is negative, i.e. `ℓ(self · g) < ℓ(self)`.
    pub fn is_right_descent(&self, g: Generator) -> bool {
        let col = g.index();
        for row in &self.matrix {
            match row[col].sign() {
                Ordering::Equal => continue,
                Ordering::Less => return true,
                Ordering::Greater => return false,
            }
        }
        unreachable!("image of a root is nonzero")
    }

    pub fn right_descents(&self) -> GeneratorSet {
        Generator::ALL
            .into_iter()
            .filter(|&g| self.is_right_descent(g))
            .fold(GeneratorSet::EMPTY, GeneratorSet::with)
    }

    pub fn left_descents(&self) -> GeneratorSet {
        self.inverse().right_descents()
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        if let Some(w) = self.word.get() {
            return w.len();
        }
        let mut m = self.clone();
        let mut n = 0;
        while let Some(g) = Generator::ALL.into_iter().find(|&g| m.is_right_descent(g)) {
            m = m.mul_gen(g);
            n += 1;
        }
        n
    }

    /// The ShortLex-least reduced word, computed once and cached.
    pub fn canonical_word(&self) -> &Word {
        self.word.get_or_init(|| {
            // Greedy: the least left descent of g is the least right descent of g⁻¹.
            let mut h = self.inverse();
            let mut word = Word::empty();
            while let Some(g) = Generator::ALL.into_iter().find(|&g| h.is_right_descent(g)) {
                word.push(g);
                h = h.mul_gen(g);
            }
            Box::new(word)
        })
    }
}

/// The three maximal standard parabolic subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParabolicId {
    /// `⟨r, s⟩`, dihedral of order 8.
    #[serde(rename = "D8")]
    Rs,
    /// `⟨s, t⟩`, dihedral of order 10.
    #[serde(rename = "D10")]
    St,
    /// `⟨t, r⟩`, dihedral of order 4.
    #[serde(rename = "D4")]
    Tr,
}

impl ParabolicId {
    pub const ALL: [ParabolicId; 3] = [ParabolicId::Rs, ParabolicId::St, ParabolicId::Tr];

    pub fn generators(self) -> [Generator; 2] {
        match self {
            ParabolicId::Rs => [Generator::R, Generator::S],
            ParabolicId::St => [Generator::S, Generator::T],
            ParabolicId::Tr => [Generator::R, Generator::T],
        }
    }

    pub fn generator_set(self) -> GeneratorSet {
        GeneratorSet::from_slice(&self.generators())
    }

    pub fn order(self) -> usize {
        let [a, b] = self.generators();
        2 * system().exponent(a, b) as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ParabolicId::Rs => "D8",
            ParabolicId::St => "D10",
            ParabolicId::Tr => "D4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ParabolicId::ALL.into_iter().find(|p| p.name() == name)
    }

    /// All elements of the subgroup, in BFS order from the identity.
    pub fn elements(self) -> &'static [GroupElement] {
        static CACHE: [OnceBox<Vec<GroupElement>>; 3] = [OnceBox::new(), OnceBox::new(), OnceBox::new()];
        CACHE[self as usize].get_or_init(|| Box::new(subgroup_closure(&self.generators())))
    }

    /// The generator of `W` outside this parabolic.
    pub fn complement(self) -> Generator {
        match self {
            ParabolicId::Rs => Generator::T,
            ParabolicId::St => Generator::R,
            ParabolicId::Tr => Generator::S,
        }
    }
}

impl fmt::Display for ParabolicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closure of `{e}` under right multiplication by `gens`, BFS order.
pub fn subgroup_closure(gens: &[Generator]) -> Vec<GroupElement> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut order = alloc::vec![GroupElement::identity()];
    seen.insert(GroupElement::identity());
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for &g in gens {
            let next = current.mul_gen(g);
            if seen.insert(next.clone()) {
                order.push(next);
            }
        }
    }
    order
}

/// The unique minimal-length element of `g·P`.
pub fn min_coset_rep(g: &GroupElement, p: ParabolicId) -> GroupElement {
    let gens = p.generators();
    let mut h = g.clone();
    while let Some(&s) = gens.iter().find(|&&s| h.is_right_descent(s)) {
        h = h.mul_gen(s);
    }
    h
}

/// The unique minimal-length element of `P·g·Q`.
pub fn min_double_coset_rep(g: &GroupElement, p: ParabolicId, q: ParabolicId) -> GroupElement {
    let mut h = g.clone();
    let mut h_inv = g.inverse();
    loop {
        let mut changed = false;
        for s in q.generators() {
            if h.is_right_descent(s) {
                h = h.mul_gen(s);
                h_inv = h_inv.gen_mul(s);
                changed = true;
            }
        }
        for s in p.generators() {
            if h_inv.is_right_descent(s) {
                h = h.gen_mul(s);
                h_inv = h_inv.mul_gen(s);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    #[cfg(feature = "paranoid")]
    {
        let brute = brute_force_double_coset_rep(g, p, q);
        assert!(brute == h, "descent stripping disagrees with enumeration for {g:?}");
    }
    h
}

/// Enumerates `P·g·Q` and returns its unique shortest element.
///
/// # Panics
/// Panics if the minimum length is attained twice, which would contradict
/// the uniqueness of minimal double-coset representatives.
pub fn brute_force_double_coset_rep(g: &GroupElement, p: ParabolicId, q: ParabolicId) -> GroupElement {
    let mut best: Option<(usize, GroupElement)> = None;
    let mut ties = 0;
    let mut seen = HashSet::new();
    for x in p.elements() {
        let xg = x.mul(g);
        for y in q.elements() {
            let e = xg.mul(y);
            if !seen.insert(e.clone()) {
                continue;
            }
            let len = e.length();
            match &best {
                Some((l, _)) if *l < len => {}
                Some((l, _)) if *l == len => ties += 1,
                _ => {
                    best = Some((len, e));
                    ties = 0;
                }
            }
        }
    }
    assert_eq!(ties, 0, "minimal double-coset representative is not unique");
    best.expect("double coset is nonempty").1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> GroupElement {
        GroupElement::parse(s).unwrap()
    }

    #[test]
    fn relations_hold() {
        assert!(el("").is_identity());
        assert!(el("rr").is_identity());
        assert!(el("rsrsrsrs").is_identity());
        assert!(el("ststststst").is_identity());
        assert!(el("trtr").is_identity());
        assert!(!el("rsrs").is_identity());
        assert!(!el("stst").is_identity());
    }

    #[test]
    fn descents() {
        assert!(el("").right_descents().is_empty());
        assert_eq!(el("r").right_descents(), GeneratorSet::from_slice(&[Generator::R]));
        assert_eq!(el("rt").right_descents(), GeneratorSet::from_slice(&[Generator::R, Generator::T]));
        assert_eq!(el("rs").left_descents(), GeneratorSet::from_slice(&[Generator::R]));
    }

    #[test]
    fn canonical_words() {
        assert_eq!(el("").canonical_word().to_string(), "");
        assert_eq!(el("tr").canonical_word().to_string(), "rt");
        assert_eq!(el("tsrst").canonical_word().to_string(), "tsrst");
        assert_eq!(el("rsrsrsr").canonical_word().to_string(), "s");
        assert_eq!(el("ststs").canonical_word().to_string(), "ststs");
        assert_eq!(el("tstst").canonical_word().to_string(), "ststs");
    }

    #[test]
    fn parabolic_orders() {
        assert_eq!(ParabolicId::Rs.elements().len(), 8);
        assert_eq!(ParabolicId::St.elements().len(), 10);
        assert_eq!(ParabolicId::Tr.elements().len(), 4);
        for p in ParabolicId::ALL {
            assert_eq!(p.order(), p.elements().len());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let g = el("rstsrtst");
        assert!(g.mul(&g.inverse()).is_identity());
        assert_eq!(g.inverse(), el("tstrstsr"));
    }

    #[test]
    fn inverse_word_is_normal_form() {
        let g = el("rt");
        assert_eq!(g.canonical_word().to_string(), "rt");
        assert_eq!(g.inverse().canonical_word().to_string(), "rt");
    }

    #[test]
    fn coset_representatives() {
        assert!(min_coset_rep(&el("r"), ParabolicId::Rs).is_identity());
        assert_eq!(min_coset_rep(&el("t"), ParabolicId::Rs), el("t"));
        assert_eq!(min_coset_rep(&el("tsr"), ParabolicId::Rs), el("t"));
    }

    #[test]
    fn double_coset_representatives() {
        for p in ParabolicId::ALL {
            for q in ParabolicId::ALL {
                assert!(min_double_coset_rep(&el(""), p, q).is_identity());
            }
        }
        assert_eq!(min_double_coset_rep(&el("t"), ParabolicId::Rs, ParabolicId::Rs), el("t"));
        assert_eq!(min_double_coset_rep(&el("rts"), ParabolicId::Rs, ParabolicId::Rs), el("t"));
        let g = el("srtstrs");
        assert_eq!(
            min_double_coset_rep(&g, ParabolicId::Rs, ParabolicId::St),
            brute_force_double_coset_rep(&g, ParabolicId::Rs, ParabolicId::St)
        );
    }

    #[test]
    fn unsupported_exponent() {
        assert_eq!(CoxeterSystem::new(4, 6, 2).unwrap_err(), UnsupportedExponent(6));
        let a3 = CoxeterSystem::new(3, 3, 2).unwrap();
        assert_eq!(a3.exponent(Generator::R, Generator::T), 2);
    }
}
