//! Library half of the `entangler-forge` command-line tool: gate specs, the
//! circuit file format, and one function per subcommand.

pub mod circuit;
pub mod commands;
pub mod error;
pub mod gate;
pub mod json;

pub use circuit::CircuitFile;
pub use error::CliError;
pub use gate::GateSpec;
