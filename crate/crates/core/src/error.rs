use thiserror::Error;

use crate::edge::Edge;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable [`Error::code`], which the HTTP
/// service forwards verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0},{1}): left endpoint must be smaller than right endpoint")]
    BadEdge(i64, i64),

    #[error("vertex index {0} is outside the supported range ±{max}", max = crate::edge::MAX_VERTEX)]
    VertexOutOfRange(i64),

    #[error("cover {cover} of {inner} shares neither or both endpoints")]
    NotAdjacentCover { cover: Edge, inner: Edge },

    #[error("window [{a},{b}] is empty or reversed")]
    EmptyWindow { a: i64, b: i64 },

    #[error("window [{a},{b}] exceeds the materialization budget of {budget}")]
    WindowTooLarge { a: i64, b: i64, budget: i64 },

    #[error("no arc passes over {0}")]
    NoCover(Edge),

    #[error("{0} is not in the triangulation")]
    NotInTriangulation(Edge),

    #[error("{0} is frozen and cannot be mutated")]
    FrozenArc(Edge),

    #[error("side {0} is not flippable")]
    SideNotFlippable(Edge),

    #[error("triangulation has no fountain")]
    NotAFountain,

    #[error("triangulation is not locally finite")]
    NotLocallyFinite,

    #[error("triangulations are not mutation equivalent")]
    NotEquivalent,

    #[error("invalid triangulation descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("vertex {0} of the quiver is frozen")]
    FrozenVertex(usize),

    #[error("vertex index {0} is out of range for the quiver")]
    NoSuchVertex(usize),

    #[error("indices {0:?} are not strictly increasing in the required pattern")]
    BadIndexOrder(Vec<i64>),

    #[error("{0} and {1} cross, so their coordinates do not quasi-commute")]
    NotQuasiCommuting(Edge, Edge),

    #[error("exchange relation failed to verify for {0}")]
    RelationCheckFailed(Edge),

    #[error("quantum mutation certificate failed to verify for {0}")]
    CertificateFailed(Edge),

    #[error("search budget of {0} states exceeded")]
    BudgetExceeded(usize),

    #[error("{0} or its quadrilateral leaves the window [{1},{2}]")]
    OutsideWindow(Edge, i64, i64),
}

impl Error {
    /// Stable identifier, identical to the variant name.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadEdge(..) => "BadEdge",
            Error::VertexOutOfRange(_) => "VertexOutOfRange",
            Error::NotAdjacentCover { .. } => "NotAdjacentCover",
            Error::EmptyWindow { .. } => "EmptyWindow",
            Error::WindowTooLarge { .. } => "WindowTooLarge",
            Error::NoCover(_) => "NoCover",
            Error::NotInTriangulation(_) => "NotInTriangulation",
            Error::FrozenArc(_) => "FrozenArc",
            Error::SideNotFlippable(_) => "SideNotFlippable",
            Error::NotAFountain => "NotAFountain",
            Error::NotLocallyFinite => "NotLocallyFinite",
            Error::NotEquivalent => "NotEquivalent",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::FrozenVertex(_) => "FrozenVertex",
            Error::NoSuchVertex(_) => "NoSuchVertex",
            Error::BadIndexOrder(_) => "BadIndexOrder",
            Error::NotQuasiCommuting(..) => "NotQuasiCommuting",
            Error::RelationCheckFailed(_) => "RelationCheckFailed",
            Error::CertificateFailed(_) => "CertificateFailed",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::OutsideWindow(..) => "OutsideWindow",
        }
    }

    /// The arc the error is about, when there is one.
    pub fn arc(&self) -> Option<Edge> {
        match self {
            Error::NotAdjacentCover { inner, .. } => Some(*inner),
            Error::NoCover(e)
            | Error::NotInTriangulation(e)
            | Error::FrozenArc(e)
            | Error::SideNotFlippable(e)
            | Error::RelationCheckFailed(e)
            | Error::CertificateFailed(e)
            | Error::OutsideWindow(e, ..) => Some(*e),
            Error::NotQuasiCommuting(e, _) => Some(*e),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
