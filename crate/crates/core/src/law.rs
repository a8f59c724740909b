//! Law reports shared by every checker.

use crate::scalar::{Scalar, Var};
use rayon::prelude::*;

/// Witnesses kept per report; `failures` always carries the full count.
pub const WITNESS_CAP: usize = 32;

/// One nonzero residual component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the input tuple.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// Output coordinate, possibly prefixed with the sub-identity it belongs to.
    pub component: String,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub failures: usize,
    pub checked: usize,
    /// Tuples left out because an intermediate product leaves the window or cap.
    pub skipped: usize,
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            holds: true,
            witnesses: Vec::new(),
            failures: 0,
            checked: 0,
            skipped: 0,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, w: Witness) {
        self.failures += 1;
        self.holds = false;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        }
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Folds another report's outcome in, tagging its components.
    pub fn absorb(&mut self, tag: &str, other: LawReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures += other.failures.saturating_sub(other.witnesses.len());
        for mut w in other.witnesses {
            w.component = format!("{tag}:{}", w.component);
            self.push(w);
        }
        if !other.holds {
            self.holds = false;
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{tag}: {n}")));
    }

    /// Fails the report without a tuple witness.
    pub fn fail(&mut self, note: impl Into<String>) {
        self.holds = false;
        self.note(note);
    }
}

/// How residual components are compared with zero.
#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    /// Compare modulo `var^order` instead of exactly.
    pub modulo: Option<(Var, usize)>,
}

impl CheckOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    /// Reduced residual; `None` when it vanishes.
    pub fn reduce(&self, v: &Scalar) -> Option<Scalar> {
        if v.is_zero() {
            return None;
        }
        let r = match self.modulo {
            Some((t, k)) => v.truncate_in(t, k).unwrap_or_else(|_| v.clone()),
            None => v.clone(),
        };
        (!r.is_zero()).then_some(r)
    }
}

/// Outcome of one tuple: `None` when skipped, else `(component, value)` pairs.
pub type TupleResidual = Option<Vec<(String, Scalar)>>;

/// Evaluates `f` on every `arity`-tuple of `0..n`, in lexicographic order.
/// Work is split over the first index; results merge deterministically.
pub fn scan<F>(law: &str, n: usize, arity: usize, labels: &[String], opts: &CheckOptions, f: F) -> LawReport
where
    F: Fn(&[usize]) -> TupleResidual + Sync,
{
    let per_first: Vec<(usize, usize, Vec<Witness>, usize)> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut checked = 0;
            let mut skipped = 0;
            let mut out = Vec::new();
            let mut failures = 0;
            let rest = arity.saturating_sub(1);
            let total = n.pow(rest as u32);
            let mut idx = vec![0usize; arity];
            idx[0] = first;
            for t in 0..total {
                let mut r = t;
                for p in (1..arity).rev() {
                    idx[p] = r % n;
                    r /= n;
                }
                match f(&idx) {
                    None => skipped += 1,
                    Some(comps) => {
                        checked += 1;
                        for (component, value) in comps {
                            if let Some(value) = opts.reduce(&value) {
                                failures += 1;
                                if out.len() < WITNESS_CAP {
                                    out.push(Witness {
                                        indices: idx.clone(),
                                        labels: idx.iter().map(|&i| labels[i].clone()).collect(),
                                        component,
                                        value,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            (checked, skipped, out, failures)
        })
        .collect();
    let mut rep = LawReport::new(law);
    if arity == 0 {
        return rep;
    }
    for (checked, skipped, ws, failures) in per_first {
        rep.checked += checked;
        rep.skipped += skipped;
        let extra = failures - ws.len();
        for w in ws {
            rep.push(w);
        }
        rep.failures += extra;
        if failures > 0 {
            rep.holds = false;
        }
    }
    rep
}

/// Labels each coordinate of a vector residual.
pub fn vector_components(v: &[Scalar], labels: &[String]) -> Vec<(String, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (labels[k].clone(), c.clone()))
        .collect()
}
