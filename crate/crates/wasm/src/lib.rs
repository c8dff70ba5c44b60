//! Browser bindings: string-in/string-out wrappers over the engine for
//! the demo page in `www/`. Every function returns displayable text (or a
//! line starting with `error:`) so the page needs no error plumbing.

use wasm_bindgen::prelude::*;

use ckhopf::catalog::{catalog_entry, catalog_names};
use ckhopf::coeff::{DualSemantics, JAssignment};
use ckhopf::hopf::{check_hopf_axioms, contract_hopf, QuantumAlgebraData};
use ckhopf::json::quantum_to_dto;

const MAX_ORDER: u32 = 8;

fn load(name: &str, order: u32) -> Result<QuantumAlgebraData, String> {
    if !(2..=MAX_ORDER).contains(&order) {
        return Err(format!("order must be between 2 and {MAX_ORDER}, got {order}"));
    }
    catalog_entry(name, order).ok_or_else(|| {
        format!("unknown catalog entry {name:?}; available: {}", catalog_names().join(", "))
    })
}

fn render(result: Result<String, String>) -> String {
    match result {
        Ok(text) => text,
        Err(message) => format!("error: {message}"),
    }
}

/// Newline-separated list of the built-in catalog names.
#[wasm_bindgen]
pub fn catalog_list() -> String {
    catalog_names().join("\n")
}

/// Generators, relations, and structure maps of a catalog entry, as text
/// or as the documented JSON schema.
#[wasm_bindgen]
pub fn catalog_show(name: &str, order: u32, as_json: bool) -> String {
    render(load(name, order).map(|q| {
        if as_json {
            serde_json::to_string_pretty(&quantum_to_dto(&q)).expect("serializable")
        } else {
            q.render_structure()
        }
    }))
}

/// The full axiom report for a catalog entry.
#[wasm_bindgen]
pub fn catalog_verify(name: &str, order: u32) -> String {
    render(load(name, order).map(|q| check_hopf_axioms(&q).render_text()))
}

/// The contraction of a catalog entry under a comma-separated assignment
/// such as `dual,unit`, or the singularity that prevents it.
#[wasm_bindgen]
pub fn catalog_contract(name: &str, order: u32, assignment: &str) -> String {
    render(load(name, order).and_then(|q| {
        let assignment = JAssignment::parse(assignment)?;
        match contract_hopf(&q, &assignment, DualSemantics::Strict) {
            Ok(done) => {
                let mut out = String::new();
                for w in &done.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                out.push_str(&done.value.render_structure());
                Ok(out)
            }
            Err(e) => Ok(format!("singular contraction: {e}")),
        }
    }))
}
