use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vertex identifiers must be nonempty")]
    EmptyVertexId,
    #[error("edge `{0}` -> `{1}` has multiplicity 0")]
    ZeroMultiplicity(String, String),
    #[error("edges leaving `{0}` overflow a 64-bit count")]
    MultiplicityOverflow(String),
    #[error("vertex index {0} does not belong to this graph")]
    ForeignVertex(usize),
    #[error("the quotient vertex `{0}` collides with an existing vertex")]
    NameCollision(String),
    #[error("omega is only defined for a nonempty vertex set")]
    EmptyOmega,
    #[error("vertex set {0} is not hereditary")]
    NotHereditary(String),
    #[error("vertex set {0} is not saturated")]
    NotSaturated(String),
    #[error("B = {b} is not contained in H^fin_inf = {fin_inf}")]
    NotInFinInf { b: String, fin_inf: String },
    #[error("meet of an empty family of ideals")]
    EmptyMeet,
    #[error("no ideal dominates both arguments")]
    NoJoin,
    #[error("graph has {vertices} vertices, above the enumeration limit of {limit}")]
    LimitExceeded { vertices: usize, limit: usize },
    #[error("{0} is not a maximal tail")]
    NotMaximalTail(String),
    #[error("maximal tail {0} contains a loop without an exit")]
    LoopWithoutExit(String),
    #[error("vertex `{0}` is not a breaking vertex")]
    NotBreaking(String),
    #[error("the zero ideal has no graph")]
    ZeroIdeal,
    #[error("the quotient by the whole algebra is zero")]
    WholeAlgebra,
    #[error("primitive ideal list contains a duplicate")]
    DuplicatePrimitive,
}
