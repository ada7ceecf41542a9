//! Error types for every stage of the pipeline.

use thiserror::Error;

use crate::monoid::ElementId;

/// Failures while building or validating a [`FiniteMonoid`](crate::FiniteMonoid).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("empty generator list with domain size 0")]
    EmptyDomain,
    #[error("generator `{label}`: expected {expected} images, found {found}")]
    ImageLength {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("generator `{label}`: image {value} at position {position} is outside 0..{domain}")]
    ImageOutOfRange {
        label: String,
        position: usize,
        value: usize,
        domain: usize,
    },
    #[error("table is empty")]
    EmptyTable,
    #[error("table row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry {value} at ({row}, {col}) is outside 0..{size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("identity {0} is not an element of the table")]
    IdentityOutOfRange(usize),
    #[error("identity law fails for element {0}")]
    IdentityLaw(ElementId),
    #[error("not associative: ({a}{b}){c} = {left} but {a}({b}{c}) = {right}")]
    NotAssociative {
        a: ElementId,
        b: ElementId,
        c: ElementId,
        left: ElementId,
        right: ElementId,
    },
    #[error("generator `{label}` refers to element {element}, outside the table")]
    GeneratorOutOfRange { label: String, element: usize },
    #[error("generators do not generate element {0}")]
    NotGenerated(ElementId),
    #[error("no unique maximal J-class")]
    NoTopJClass,
    #[error("map has {found} entries but the source monoid has {expected} elements")]
    MapLength { expected: usize, found: usize },
    #[error("map sends {value} outside the target monoid")]
    MapOutOfRange { value: usize },
    #[error("map is not a homomorphism: f({a}{b}) != f({a})f({b})")]
    NotHomomorphism { a: ElementId, b: ElementId },
    #[error("map does not send the identity to the identity")]
    IdentityNotPreserved,
}

/// Failures of the Rees coordinatization of a J-class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReesError {
    #[error("monoid is not stable: witness a = {a}, x = {x}")]
    NotStable { a: ElementId, x: ElementId },
    #[error("J-class {jclass}: no element satisfies the defining equation of anchor `{anchor}`")]
    MissingAnchor { jclass: usize, anchor: &'static str },
    #[error("J-class {jclass}: coordinates are not a bijection onto A x G x B")]
    NotBijective { jclass: usize },
    #[error("Rees product law fails for {u} * {v}")]
    ProductLaw { u: ElementId, v: ElementId },
    #[error("{u}{v} is not R-related to {u}")]
    NotRightStable { u: ElementId, v: ElementId },
    #[error("translation by {v} is not a right multiplication in the group")]
    NotTranslation { v: ElementId },
    #[error("element {0} has no star/sharp solution")]
    NoStar(ElementId),
}

/// Failures in the Rhodes and Phi3 expansions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("sequence is not a <=_L descending chain at position {position}")]
    NotDescending { position: usize },
    #[error("chain does not end at the identity")]
    MissingIdentity,
    #[error("enumerated chains ({enumerated}) differ from the generated monoid ({generated})")]
    GenerationMismatch { enumerated: usize, generated: usize },
    #[error("base monoid fails x^(p+q) = x^p at x = {witness}")]
    BurnsideBase { witness: ElementId },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// Failures in length-function and weight-function machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthError {
    #[error("length function is unbounded")]
    Unbounded,
    #[error("function is not <=_J-preserving at ({left}, {middle}, {right})")]
    NotJPreserving {
        left: ElementId,
        middle: ElementId,
        right: ElementId,
    },
    #[error("function does not vanish at the identity")]
    NonZeroAtIdentity,
    #[error("height is not order-reversing: class {lower} < class {upper} but h({lower}) < h({upper})")]
    NotOrderReversing { lower: usize, upper: usize },
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
}

/// Failures in tree construction and the Chiswell construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("branching number at level {level} is zero")]
    ZeroBranching { level: usize },
    #[error("length function fails axiom {axiom}")]
    Axiom { axiom: &'static str },
    #[error("length function takes the value ω")]
    Unbounded,
    #[error("parent pointers do not form a rooted tree (vertex {vertex})")]
    Malformed { vertex: usize },
    #[error("tree is not uniform: leaf {vertex} at depth {depth}, expected {expected}")]
    NotUniform {
        vertex: usize,
        depth: usize,
        expected: usize,
    },
    #[error("vertex {vertex} has depth {depth}, beyond the tree depth {max}")]
    TooDeep {
        vertex: usize,
        depth: usize,
        max: usize,
    },
    #[error("action of element {element} is not an elliptic contraction (vertex {vertex})")]
    NotElliptic { element: usize, vertex: usize },
    #[error("action is not well defined on vertex {vertex}")]
    IllDefined { vertex: usize },
    #[error("action is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("vertex {vertex} is not reached from the base ray")]
    NotTransitive { vertex: usize },
    #[error("leaf action of element {element} does not extend to a contraction")]
    LeafActionIncoherent { element: usize },
    #[error("depth {depth} exceeds the tree depth {max}")]
    DepthOutOfRange { depth: usize, max: usize },
}

/// Failures in sequential maps, wreath products and the embeddings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("alphabets differ between the composed maps")]
    AlphabetMismatch,
    #[error("tree is not uniformly branching at vertex {vertex}")]
    NotUniform { vertex: usize },
    #[error("component {level} does not act transitively on its base point (missing {missing})")]
    NotTransitive { level: usize, missing: usize },
    #[error("labeling is not injective on the sons of vertex {vertex}")]
    NotLocallyInjective { vertex: usize },
    #[error("vertex {vertex} matches no labeling case")]
    NoLabelCase { vertex: usize },
    #[error("members of vertex {vertex} disagree on its label")]
    InconsistentLabel { vertex: usize },
    #[error("sons of vertex {vertex} carry labels outside the expected set")]
    UnexpectedLabels { vertex: usize },
    #[error("vertex {vertex} has {found} sons, expected {expected}")]
    SonCount {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("sequential map axiom {axiom} fails at tuple {tuple:?}")]
    NotSequential { axiom: &'static str, tuple: Vec<u32> },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}
