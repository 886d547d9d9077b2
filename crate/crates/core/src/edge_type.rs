//! Edge types: canonical invariants of `W`-orbits of unordered pairs.
//!
//! For cosets `(gP, hQ)` the orbit of the ordered pair is determined by the
//! double coset `P g⁻¹h Q`, recorded through its minimal representative. The
//! unordered pair takes whichever of the two orientations serialises smaller.
//! In the Cayley graph the orbit of `(g, h)` is determined by `g⁻¹h`, and the
//! unordered pair by the smaller of the canonical words of `g⁻¹h` and `h⁻¹g`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::{min_double_coset_rep, GroupElement, ParabolicId, Word};
use crate::graph::{GraphSlab, SlabNode, Vertex};

/// Canonical orbit invariant of an unordered pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTypeKey {
    Complex { first: ParabolicId, second: ParabolicId, word: Word },
    Cayley { word: Word },
}

impl EdgeTypeKey {
    /// The type of `(e, g)` in the Cayley graph.
    pub fn of_element(g: &GroupElement) -> Self {
        type_key_cayley(&GroupElement::identity(), g)
    }

    /// The type of `(e, g)` for a word.
    pub fn of_word(w: &str) -> Result<Self, crate::coxeter::ParseWordError> {
        Ok(Self::of_element(&GroupElement::parse(w)?))
    }

    /// The key of a degenerate pair `(v, v)`.
    pub fn is_degenerate(&self) -> bool {
        match self {
            EdgeTypeKey::Complex { first, second, word } => first == second && word.is_empty(),
            EdgeTypeKey::Cayley { word } => word.is_empty(),
        }
    }

    pub fn is_cayley(&self) -> bool {
        matches!(self, EdgeTypeKey::Cayley { .. })
    }

    /// Recomputes the key from its parts, so a key written with any word
    /// of the right double coset (or element) becomes canonical.
    pub fn canonical(&self) -> EdgeTypeKey {
        match self {
            EdgeTypeKey::Complex { first, second, word } => {
                type_key_complex(&Vertex::fixed_by(*first), &Vertex::new(*second, &GroupElement::from_word(word)))
            }
            EdgeTypeKey::Cayley { word } => EdgeTypeKey::of_element(&GroupElement::from_word(word)),
        }
    }

    pub fn word(&self) -> &Word {
        match self {
            EdgeTypeKey::Complex { word, .. } | EdgeTypeKey::Cayley { word } => word,
        }
    }
}

impl fmt::Display for EdgeTypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeTypeKey::Complex { first, second, word } => write!(f, "CPLX:{first}:{second}:{word}"),
            EdgeTypeKey::Cayley { word } => write!(f, "CAY:{word}"),
        }
    }
}

impl fmt::Debug for EdgeTypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Malformed key text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseKeyError(pub String);

impl fmt::Display for ParseKeyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed edge-type key `{}`", self.0)
    }
}

impl FromStr for EdgeTypeKey {
    type Err = ParseKeyError;

    /// Parses the serialised form. The word is taken as given; it is not
    /// re-canonicalised.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseKeyError(s.to_string());
        if let Some(w) = s.strip_prefix("CAY:") {
            return Ok(EdgeTypeKey::Cayley { word: w.parse().map_err(|_| err())? });
        }
        let rest = s.strip_prefix("CPLX:").ok_or_else(err)?;
        let mut parts = rest.splitn(3, ':');
        let first = parts.next().and_then(ParabolicId::from_name).ok_or_else(err)?;
        let second = parts.next().and_then(ParabolicId::from_name).ok_or_else(err)?;
        let word = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        Ok(EdgeTypeKey::Complex { first, second, word })
    }
}

impl Serialize for EdgeTypeKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EdgeTypeKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn smaller_serialisation(a: EdgeTypeKey, b: EdgeTypeKey) -> EdgeTypeKey {
    if b.to_string() < a.to_string() {
        b
    } else {
        a
    }
}

/// Edge type of a pair of Coxeter-complex vertices.
pub fn type_key_complex(u: &Vertex, v: &Vertex) -> EdgeTypeKey {
    let g = u.rep().inverse().mul(v.rep());
    let rep = min_double_coset_rep(&g, u.parabolic(), v.parabolic());
    let forward = EdgeTypeKey::Complex { first: u.parabolic(), second: v.parabolic(), word: rep.canonical_word().clone() };
    let backward = EdgeTypeKey::Complex {
        first: v.parabolic(),
        second: u.parabolic(),
        word: rep.inverse().canonical_word().clone(),
    };
    smaller_serialisation(forward, backward)
}

/// Edge type of a pair of Cayley-graph vertices.
pub fn type_key_cayley(g: &GroupElement, h: &GroupElement) -> EdgeTypeKey {
    let x = g.inverse().mul(h);
    let a = x.canonical_word().clone();
    let b = x.inverse().canonical_word().clone();
    EdgeTypeKey::Cayley { word: if b < a { b } else { a } }
}

/// Objects that can be endpoints of typed edges.
pub trait Endpoint: SlabNode {
    /// Edge type of `(self, other)`.
    fn type_key(&self, other: &Self) -> EdgeTypeKey;

    /// Every `y` with `type_key(self, y) == key`, deduplicated.
    fn type_neighbors(&self, key: &EdgeTypeKey) -> Vec<Self>;

    /// Left action of `W`.
    fn act(&self, w: &GroupElement) -> Self;

    /// Some `w` with `w · self = other`, if the two lie in one orbit.
    fn carrier_to(&self, other: &Self) -> Option<GroupElement>;
}

impl Endpoint for Vertex {
    fn type_key(&self, other: &Self) -> EdgeTypeKey {
        type_key_complex(self, other)
    }

    fn type_neighbors(&self, key: &EdgeTypeKey) -> Vec<Self> {
        let EdgeTypeKey::Complex { first, second, word } = key else {
            return Vec::new();
        };
        let w = GroupElement::from_word(word);
        let mut out: Vec<Vertex> = Vec::new();
        let mut push = |v: Vertex| {
            if !out.contains(&v) {
                out.push(v);
            }
        };
        // (self, y) oriented as (first, second): y = g p w · second.
        if *first == self.parabolic() {
            for p in self.parabolic().elements() {
                push(Vertex::new(*second, &self.rep().mul(p).mul(&w)));
            }
        }
        if *second == self.parabolic() {
            let w_inv = w.inverse();
            for p in self.parabolic().elements() {
                push(Vertex::new(*first, &self.rep().mul(p).mul(&w_inv)));
            }
        }
        out
    }

    fn act(&self, w: &GroupElement) -> Self {
        Vertex::act(self, w)
    }

    fn carrier_to(&self, other: &Self) -> Option<GroupElement> {
        (self.parabolic() == other.parabolic()).then(|| other.rep().mul(&self.rep().inverse()))
    }
}

impl Endpoint for GroupElement {
    fn type_key(&self, other: &Self) -> EdgeTypeKey {
        type_key_cayley(self, other)
    }

    fn type_neighbors(&self, key: &EdgeTypeKey) -> Vec<Self> {
        let EdgeTypeKey::Cayley { word } = key else {
            return Vec::new();
        };
        let w = GroupElement::from_word(word);
        let a = self.mul(&w);
        let b = self.mul(&w.inverse());
        if a == b {
            alloc::vec![a]
        } else {
            alloc::vec![a, b]
        }
    }

    fn act(&self, w: &GroupElement) -> Self {
        w.mul(self)
    }

    fn carrier_to(&self, other: &Self) -> Option<GroupElement> {
        Some(other.mul(&self.inverse()))
    }
}

/// Up to `count` distinct unordered pairs `(i, j)`, `i ≤ j`, of slab nodes
/// whose type equals `key`, in slab index order.
pub fn orbit_sample<N: Endpoint>(key: &EdgeTypeKey, slab: &GraphSlab<N>, count: usize) -> Vec<(N, N)> {
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    for i in 0..slab.len() {
        for j in i..slab.len() {
            if slab.node(i).type_key(slab.node(j)) == *key {
                out.push((slab.node(i).clone(), slab.node(j).clone()));
                if out.len() == count {
                    return out;
                }
            }
        }
    }
    out
}
