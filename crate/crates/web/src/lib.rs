//! Browser bindings. Every export takes plain strings or integers and returns
//! a JSON string; errors come back as `{"error": "..."}`.

use gausscheck::modp::{EnumerationBudget, UnitFunction};
use gausscheck::verify::{GridCell, Statement};
use gausscheck::{classify, fourier_sum, gauss_sum, CyclotomicElement, Error, Result};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Browser verifications are capped well below the native default.
pub const WEB_BUDGET: u64 = 200_000;

#[derive(Serialize)]
struct SpectrumBar {
    xi: u64,
    /// `|S_ξ|²` when rational, which is always the case when `f` is a character.
    norm_squared: Option<i64>,
    /// Coefficients of `|S_ξ|²` in the power basis of its cyclotomic field.
    norm_coeffs: Vec<String>,
    equals_p: bool,
}

#[derive(Serialize)]
struct Spectrum {
    function: String,
    p: u64,
    n: u64,
    bars: Vec<SpectrumBar>,
}

#[derive(Serialize)]
struct GaussSummary {
    function: String,
    order: u64,
    coeffs: Vec<String>,
    integer: Option<String>,
    norm_squared: Option<String>,
    equals_p: bool,
}

fn coeff_strings(z: &CyclotomicElement) -> Vec<String> {
    z.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse(text: &str) -> Result<UnitFunction> {
    text.parse()
}

pub fn classify_json(text: &str) -> Result<String> {
    let c = classify(&parse(text)?)?;
    Ok(serde_json::to_string(&c).expect("serializable"))
}

/// `|S_ξ|²` for every ξ in F_p.
pub fn spectrum_json(text: &str) -> Result<String> {
    let f = parse(text)?;
    let p = f.p().get();
    let bars = (0..p)
        .map(|xi| {
            let s = fourier_sum(&f, xi as i64)?;
            let norm = s.norm_squared();
            Ok(SpectrumBar {
                xi,
                norm_squared: norm.as_integer().and_then(|v| v.to_i64()),
                norm_coeffs: coeff_strings(&norm),
                equals_p: s.has_magnitude_sqrt_p(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let spectrum = Spectrum { function: f.to_string(), p, n: f.n().get(), bars };
    Ok(serde_json::to_string(&spectrum).expect("serializable"))
}

pub fn gauss_sum_json(text: &str) -> Result<String> {
    let f = parse(text)?;
    let tau = gauss_sum(&f)?;
    let summary = GaussSummary {
        function: f.to_string(),
        order: tau.value().order().get(),
        coeffs: coeff_strings(tau.value()),
        integer: tau.value().as_integer().map(|v| v.to_string()),
        norm_squared: tau.norm_squared_integer().map(|v| v.to_string()),
        equals_p: tau.has_magnitude_sqrt_p(),
    };
    Ok(serde_json::to_string(&summary).expect("serializable"))
}

pub fn verify_json(statement: &str, p: u64, n: u64) -> Result<String> {
    let statement: Statement = statement.parse()?;
    let report = GridCell::new(statement, p, n).run(EnumerationBudget(WEB_BUDGET))?;
    Ok(report.to_json_line())
}

fn respond(result: Result<String>) -> String {
    result.unwrap_or_else(|e: Error| serde_json::json!({ "error": e.to_string() }).to_string())
}

#[wasm_bindgen]
pub fn classify_function(text: &str) -> String {
    respond(classify_json(text))
}

#[wasm_bindgen]
pub fn fourier_spectrum(text: &str) -> String {
    respond(spectrum_json(text))
}

#[wasm_bindgen]
pub fn gauss_sum_summary(text: &str) -> String {
    respond(gauss_sum_json(text))
}

#[wasm_bindgen]
pub fn verify_cell(statement: &str, p: u32, n: u32) -> String {
    respond(verify_json(statement, p as u64, n as u64))
}
