#![allow(dead_code, clippy::excessive_precision)]

include!("oracle_values.rs");

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
