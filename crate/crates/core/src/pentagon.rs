//! Turn-string notation for edge types of the pentagonal tiling.
//!
//! A string over `{L, S, R}` describes a path starting with the edge
//! `(FixD8, tFixD8)`; each letter turns by a quarter, half or three quarters
//! of the degree-4 rotation at the current vertex. The string names the edge
//! type of `(FixD8, last vertex)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{GroupElement, Generator, ParabolicId};
use crate::edge_type::{type_key_complex, EdgeTypeKey};
use crate::graph::{pentagon_neighbors, GraphSlab, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TurnLetter {
    /// Quarter turn.
    L,
    /// Straight on.
    S,
    /// Three-quarter turn.
    R,
}

impl TurnLetter {
    /// Steps around the rotation from the incoming edge to the outgoing one.
    fn steps(self) -> usize {
        match self {
            TurnLetter::L => 1,
            TurnLetter::S => 2,
            TurnLetter::R => 3,
        }
    }

    pub fn mirrored(self) -> TurnLetter {
        match self {
            TurnLetter::L => TurnLetter::R,
            TurnLetter::S => TurnLetter::S,
            TurnLetter::R => TurnLetter::L,
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'L' => Some(TurnLetter::L),
            'S' => Some(TurnLetter::S),
            'R' => Some(TurnLetter::R),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            TurnLetter::L => 'L',
            TurnLetter::S => 'S',
            TurnLetter::R => 'R',
        }
    }
}

/// A turn string; the empty string is the base edge.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringSpec(pub Vec<TurnLetter>);

impl StringSpec {
    pub fn letters(&self) -> &[TurnLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> StringSpec {
        StringSpec(self.0.iter().rev().copied().collect())
    }

    pub fn mirrored(&self) -> StringSpec {
        StringSpec(self.0.iter().map(|l| l.mirrored()).collect())
    }

    fn push_repeat(&mut self, letter: TurnLetter, n: usize) {
        self.0.extend(core::iter::repeat(letter).take(n));
    }
}

impl fmt::Display for StringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.0 {
            fmt::Write::write_char(f, l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for StringSpec {
    type Err = String;

    /// Accepts `L`, `S`, `R` in either case; `ε` or the empty string is the empty spec.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" {
            return Ok(StringSpec::default());
        }
        s.chars()
            .map(|c| TurnLetter::from_char(c).ok_or_else(|| alloc::format!("invalid turn letter `{c}` in `{s}`")))
            .collect::<Result<Vec<_>, _>>()
            .map(StringSpec)
    }
}

/// The six string sequences `a_n … f_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Series {
    pub const ALL: [Series; 6] = [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F];

    pub fn name(self) -> char {
        match self {
            Series::A => 'a',
            Series::B => 'b',
            Series::C => 'c',
            Series::D => 'd',
            Series::E => 'e',
            Series::F => 'f',
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Write::write_char(f, self.name())
    }
}

/// The `n`-th term of a series (0-based, as in the sequence displays).
///
/// `a_0 = ε`, `a_n = S^n R S^(n-1)`; `b_0 = R`, `b_n = S^n R L S^(n-1)`;
/// `c_n = S^n R S^n`; `d_n = S^(2n+1)`; `e_0 = ε`, `e_1 = R`,
/// `e_n = S^(n-2) R L R S^(n-2)`; `f_0 = ε`, `f_n = S^(n-1) R L S^(n-1)`.
pub fn family_string(series: Series, n: usize) -> StringSpec {
    use TurnLetter::{L, R, S};
    let mut out = StringSpec::default();
    match (series, n) {
        (Series::A, 0) | (Series::E, 0) | (Series::F, 0) => {}
        (Series::B, 0) | (Series::E, 1) => out.0.push(R),
        (Series::A, n) => {
            out.push_repeat(S, n);
            out.0.push(R);
            out.push_repeat(S, n - 1);
        }
        (Series::B, n) => {
            out.push_repeat(S, n);
            out.0.extend([R, L]);
            out.push_repeat(S, n - 1);
        }
        (Series::C, n) => {
            out.push_repeat(S, n);
            out.0.push(R);
            out.push_repeat(S, n);
        }
        (Series::D, n) => out.push_repeat(S, 2 * n + 1),
        (Series::E, n) => {
            out.push_repeat(S, n - 2);
            out.0.extend([R, L, R]);
            out.push_repeat(S, n - 2);
        }
        (Series::F, n) => {
            out.push_repeat(S, n - 1);
            out.0.extend([R, L]);
            out.push_repeat(S, n - 1);
        }
    }
    out
}

/// Errors tracing a string through a slab.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    /// The path leaves the slab at this step.
    SlabTooSmall { step: usize },
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::SlabTooSmall { step } => write!(f, "path leaves the slab at step {step}"),
        }
    }
}

/// A traced path `v_0 = FixD8, v_1 = tFixD8, …` and the edge type it names.
#[derive(Debug, Clone)]
pub struct PathTrace {
    pub vertices: Vec<Vertex>,
    pub key: EdgeTypeKey,
}

impl PathTrace {
    pub fn last(&self) -> &Vertex {
        self.vertices.last().expect("paths have at least two vertices")
    }
}

/// Traces the path without any slab bound.
pub fn trace_unbounded(spec: &StringSpec) -> PathTrace {
    let start = Vertex::fixed_by(ParabolicId::Rs);
    let mut vertices = alloc::vec![start.clone(), Vertex::new(ParabolicId::Rs, &GroupElement::generator(Generator::T))];
    for &letter in spec.letters() {
        let n = vertices.len();
        let (prev, cur) = (&vertices[n - 2], &vertices[n - 1]);
        let around = pentagon_neighbors(cur);
        let incoming = around.iter().position(|v| v == prev).expect("consecutive path vertices are tiling neighbours");
        // Representatives that reverse orientation list the neighbours the other way round.
        let steps = if cur.rep().determinant().is_one() { letter.steps() } else { 4 - letter.steps() };
        let next = around[(incoming + steps) % 4].clone();
        vertices.push(next);
    }
    let key = type_key_complex(&start, vertices.last().expect("nonempty"));
    PathTrace { vertices, key }
}

/// Traces the path, requiring every vertex to lie in `slab`.
pub fn trace_path(spec: &StringSpec, slab: &GraphSlab<Vertex>) -> Result<PathTrace, TraceError> {
    let trace = trace_unbounded(spec);
    if let Some(step) = trace.vertices.iter().position(|v| !slab.contains(v)) {
        return Err(TraceError::SlabTooSmall { step });
    }
    Ok(trace)
}

/// Edge-type key named by a string.
pub fn string_key(spec: &StringSpec) -> EdgeTypeKey {
    trace_unbounded(spec).key
}
