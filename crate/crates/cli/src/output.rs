use std::process::ExitCode;

use serde::Serialize;
use tenrec::{ComplexF, Rational};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_FORBIDDEN: u8 = 3;

pub fn exit(code: u8) -> ExitCode {
    ExitCode::from(code)
}

/// Convenience decimal column: 12 significant digits.
pub fn decimal(x: &Rational) -> String {
    x.to_decimal_string(12)
}

#[derive(Debug, Serialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

impl From<&ComplexF> for RootJson {
    fn from(z: &ComplexF) -> Self {
        RootJson {
            re: z.re,
            im: z.im,
            modulus: z.norm(),
        }
    }
}

pub fn roots_json(roots: &[ComplexF]) -> Vec<RootJson> {
    roots.iter().map(RootJson::from).collect()
}
