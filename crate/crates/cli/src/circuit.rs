//! The circuit file written by `synthesize` and read by `verify`.

use entangler_core::magic::concurrence;
use entangler_core::numeric::{LocalPair, Mat2, TwoQubitState};
use entangler_core::synthesis::SynthesizedCircuit;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::gate::GateSpec;
use crate::json::Cx;

pub const FORMAT_VERSION: &str = "1";

/// One local layer `a ⊗ b`, each a row-major 2×2 complex matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerJson {
    pub a: [[Cx; 2]; 2],
    pub b: [[Cx; 2]; 2],
}

fn mat2_json(m: &Mat2) -> [[Cx; 2]; 2] {
    std::array::from_fn(|r| std::array::from_fn(|c| Cx::from(m[(r, c)])))
}

fn mat2_from(m: &[[Cx; 2]; 2]) -> Mat2 {
    Mat2::from_fn(|r, c| m[r][c].into())
}

/// `locals[0]` acts first on `product_input`; each later layer is preceded
/// by one use of `gate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitFile {
    pub version: String,
    pub gate: GateSpec,
    pub uses: u32,
    pub locals: Vec<LayerJson>,
    pub product_input: [Cx; 4],
}

impl CircuitFile {
    pub fn from_synthesized(gate: GateSpec, c: &SynthesizedCircuit) -> Self {
        CircuitFile {
            version: FORMAT_VERSION.to_string(),
            gate,
            uses: c.uses,
            locals: c
                .locals
                .iter()
                .map(|l| LayerJson {
                    a: mat2_json(&l.a),
                    b: mat2_json(&l.b),
                })
                .collect(),
            product_input: c.product_input.amplitudes().map(Cx::from),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("malformed circuit file: {e}")))
    }

    /// Rebuilds the circuit. Layers are taken as written, unitary or not;
    /// judging them is the verifier's job.
    pub fn to_circuit(&self) -> Result<SynthesizedCircuit, CliError> {
        let gate = self.gate.resolve()?;
        let amps: [Complex64; 4] = self.product_input.map(Complex64::from);
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CliError::Parse(
                "product_input has non-finite entries".into(),
            ));
        }
        // hand-edited files rarely normalize to 1e-12; 1e-8 is still a state
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > 1e-8 {
            return Err(CliError::Parse(format!(
                "product_input is not normalized (norm^2 = {norm_sqr})"
            )));
        }
        let product_input = TwoQubitState::normalized(amps)?;
        let locals: Vec<LocalPair> = self
            .locals
            .iter()
            .map(|l| LocalPair::new(mat2_from(&l.a), mat2_from(&l.b)))
            .collect();
        let mut circuit = SynthesizedCircuit {
            locals,
            gate,
            uses: self.uses,
            product_input,
            certified_output_concurrence: 0.0,
        };
        circuit.certified_output_concurrence = concurrence(&circuit.output()).value();
        Ok(circuit)
    }
}
