use gausscheck::modp::UnitFunction;
use gausscheck::verify::VerificationReport;
use gausscheck::{Classification, CyclotomicElement, SpectralValue, SpectralVerdict};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::Output;

pub struct Renderer {
    pub output: Output,
    pub witnesses: bool,
}

/// Integers that fit in i64 become JSON numbers; larger ones become strings.
fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn coeffs_json(z: &CyclotomicElement) -> Value {
    Value::Array(z.coeffs().iter().map(int_json).collect())
}

fn coeffs_text(z: &CyclotomicElement) -> String {
    let parts: Vec<String> = z.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn element_json(z: &CyclotomicElement) -> Value {
    json!({
        "order": z.order().get(),
        "coeffs": coeffs_json(z),
        "integer": z.as_integer().as_ref().map(int_json),
    })
}

fn element_text(z: &CyclotomicElement) -> String {
    match z.as_integer() {
        Some(v) => v.to_string(),
        None => format!("order={} coeffs={}", z.order(), coeffs_text(z)),
    }
}

impl Renderer {
    pub fn reports(&self, reports: &[VerificationReport]) {
        match self.output {
            Output::Json => {
                for r in reports {
                    println!("{}", r.to_json_line());
                }
            }
            Output::Table => {
                println!(
                    "{:<20} {:>3} {:>3} {:>10} {:>8} {:>8} {:>9}  result",
                    "statement", "p", "n", "total", "spectral", "oracle", "mismatch"
                );
                for r in reports {
                    let result = match (&r.error, r.success) {
                        (Some(e), _) => format!("ERROR {e}"),
                        (None, true) => "ok".into(),
                        (None, false) => "MISMATCH".into(),
                    };
                    println!(
                        "{:<20} {:>3} {:>3} {:>10} {:>8} {:>8} {:>9}  {}",
                        r.statement.id(),
                        r.p,
                        r.n,
                        r.total_functions,
                        r.passing_spectral,
                        r.passing_oracle,
                        r.mismatch_count,
                        result
                    );
                    for m in &r.mismatches {
                        println!("    mismatch exps={}", join(m));
                    }
                    if self.witnesses {
                        for w in &r.witnesses {
                            match w.a {
                                Some(a) => println!("    witness exps={} a={a}", join(&w.exps)),
                                None => println!("    witness exps={}", join(&w.exps)),
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn classification(&self, c: &Classification) {
        match self.output {
            Output::Json => println!("{}", serde_json::to_string(c).expect("serializable")),
            Output::Table => {
                println!("function   {}", c.function);
                println!("oracle     {}", if c.oracle { "character" } else { "not a character" });
                println!("trivial    {}", c.trivial);
                match &c.spectral {
                    SpectralVerdict::Decided { character, witness } => {
                        let w = witness.map_or("none".to_string(), |a| format!("a={a}"));
                        println!("spectral   {} (witness {w})", if *character { "character" } else { "not a character" });
                    }
                    SpectralVerdict::NotApplicable { reason } => println!("spectral   not applicable: {reason}"),
                }
                println!("character  {}", c.character);
                println!("agreement  {}", c.agreement);
            }
        }
    }

    pub fn spectral_value(&self, kind: &str, f: &UnitFunction, param: Option<(&str, i64)>, v: &SpectralValue) {
        let norm = v.norm_squared();
        let norm_is_p = v.has_magnitude_sqrt_p();
        match self.output {
            Output::Json => {
                let mut obj = Map::new();
                obj.insert("kind".into(), json!(kind));
                obj.insert("function".into(), json!(f.to_string()));
                if let Some((name, x)) = param {
                    obj.insert(name.into(), json!(x));
                }
                obj.insert("value".into(), element_json(v.value()));
                obj.insert("norm_squared".into(), element_json(&norm));
                obj.insert("norm_squared_equals_p".into(), json!(norm_is_p));
                println!("{}", Value::Object(obj));
            }
            Output::Table => {
                println!("function      {f}");
                if let Some((name, x)) = param {
                    println!("{name:<13} {x}");
                }
                let z = v.value();
                println!("order         {}", z.order());
                println!("coeffs        {}", coeffs_text(z));
                if let Some(i) = z.as_integer() {
                    println!("integer       {i}");
                }
                println!("norm_squared  {}", element_text(&norm));
                println!("equals p      {norm_is_p}");
            }
        }
    }

    pub fn autocorrelation(&self, f: &UnitFunction, h: i64, z: &CyclotomicElement) {
        match self.output {
            Output::Json => {
                let line = json!({
                    "kind": "autocorr",
                    "function": f.to_string(),
                    "h": h,
                    "value": element_json(z),
                });
                println!("{line}");
            }
            Output::Table => {
                println!("function      {f}");
                println!("h             {h}");
                println!("order         {}", z.order());
                println!("coeffs        {}", coeffs_text(z));
                if let Some(i) = z.as_integer() {
                    println!("integer       {i}");
                }
            }
        }
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
