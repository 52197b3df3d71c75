//! Materials from JSON documents, and the validation messages for
//! inadmissible constants.
//!
//! ```bash
//! cargo run --example material_document
//! ```

use elastic_riemann::Material;

fn main() {
    let docs = [
        r#"{"alpha": 2.0, "beta": -1.0, "gamma": 2.0, "n": 1.0, "rho": 1.0}"#,
        r#"{"alpha": 1.0, "beta": -0.5, "gamma": 0.0, "n": 1.0, "rho": 1.0, "linear_mode": true}"#,
        r#"{"alpha": 1.0, "beta": -1.5, "gamma": 1.0, "n": 1.0, "rho": 1.0}"#,
        r#"{"alpha": 1.0, "beta": 0.5, "gamma": 1.0, "n": 1.0, "rho": 1.0}"#,
    ];
    for doc in docs {
        match serde_json::from_str::<Material>(doc) {
            Ok(m) => println!("ok: {m:?}, max characteristic speed {:.6}", m.max_char_speed()),
            Err(e) => println!("rejected: {e}"),
        }
    }
}
