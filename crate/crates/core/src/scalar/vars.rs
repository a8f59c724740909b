//! Process-wide parameter interner.
//!
//! Variable ids are assigned in first-seen order, so declaring parameters in
//! a fixed order fixes the monomial order used for canonical forms.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

/// Interned parameter id. Lower ids rank higher in lexicographic tie-breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u32);

struct Table {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn table() -> &'static RwLock<Table> {
    static T: OnceLock<RwLock<Table>> = OnceLock::new();
    T.get_or_init(|| {
        RwLock::new(Table {
            names: Vec::new(),
            ids: HashMap::new(),
        })
    })
}

/// Returns the id for `name`, allocating one if needed.
pub fn intern(name: &str) -> Var {
    if let Some(&id) = table().read().unwrap().ids.get(name) {
        return Var(id);
    }
    let mut t = table().write().unwrap();
    if let Some(&id) = t.ids.get(name) {
        return Var(id);
    }
    let id = t.names.len() as u32;
    t.names.push(name.to_string());
    t.ids.insert(name.to_string(), id);
    Var(id)
}

pub fn name(v: Var) -> String {
    table().read().unwrap().names[v.0 as usize].clone()
}
