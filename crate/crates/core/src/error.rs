use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("missing field `{0}`")]
    MissingField(String),

    #[error("length `{field}` must be positive, got {value}")]
    NonPositiveLength { field: String, value: i64 },

    #[error("length `{field}` must be an integer number of nm, got `{value}`")]
    NonIntegerLength { field: String, value: String },

    #[error("length `{field}` is out of range: `{value}`")]
    LengthOutOfRange { field: String, value: String },

    #[error("node name must not be empty")]
    EmptyNodeName,

    #[error("unknown technology node `{0}`")]
    UnknownNode(String),

    #[error("duplicate technology node `{0}`")]
    DuplicateNode(String),

    #[error("degenerate geometry: {dimension} = {value} nm")]
    DegenerateGeometry { dimension: &'static str, value: i64 },

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("parameter `{name}` = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("surface code distance must be at least 3, got {0}")]
    DistanceTooSmall(u32),

    #[error("physical error rate {p} is not below threshold {p_th}")]
    AboveThreshold { p: f64, p_th: f64 },

    #[error("gate pitch {delta_g} nm is below the 3 nm manufacturability limit")]
    BelowManufacturability { delta_g: u32 },

    #[error("no physical-qubit model for {0}-bit factoring; supply distance and physical qubit count")]
    NoPhysicalQubitModel(u32),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
