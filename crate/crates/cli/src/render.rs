//! Check results and their three report renderings.

use serde::Serialize;

/// One verified claim: a computed quantity against its expected value.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub tolerance: f64,
    pub pass: bool,
    pub runtime_ms: u64,
}

/// Renders a float at 12 significant digits in plain decimal notation,
/// trailing zeros trimmed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{:.11e}", x);
    let (mant, exp) = s.split_once('e').expect("float in scientific notation");
    let exp: i32 = exp.parse().expect("numeric exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else if (exp as usize) < digits.len() - 1 {
        let point = exp as usize + 1;
        out.push_str(&digits[..point]);
        out.push('.');
        out.push_str(&digits[point..]);
    } else {
        out.push_str(&digits);
        for _ in 0..(exp as usize + 1 - digits.len()) {
            out.push('0');
        }
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes the full report for a list of checks to stdout.
pub fn emit(results: &[CheckResult], format: Format) {
    match format {
        Format::Json => {
            for r in results {
                println!("{}", serde_json::to_string(r).expect("serializable check"));
            }
        }
        Format::Csv => {
            println!("check_id,claim,computed,expected,tolerance,pass,runtime_ms");
            for r in results {
                println!(
                    "{},{},{},{},{:e},{},{}",
                    csv_field(&r.check_id),
                    csv_field(&r.claim),
                    csv_field(&r.computed),
                    csv_field(&r.expected),
                    r.tolerance,
                    r.pass,
                    r.runtime_ms
                );
            }
        }
        Format::Md => {
            println!("| check | claim | computed | expected | tolerance | pass | ms |");
            println!("|---|---|---|---|---|---|---|");
            for r in results {
                println!(
                    "| {} | {} | {} | {} | {:e} | {} | {} |",
                    r.check_id,
                    r.claim,
                    r.computed,
                    r.expected,
                    r.tolerance,
                    if r.pass { "pass" } else { "FAIL" },
                    r.runtime_ms
                );
            }
        }
    }
}
