//! The `.homdef` definition format.
//!
//! ```text
//! # comment
//! algebra <name>                      | coalgebra <name>
//! bialgebra <name> [generalized | unital-counital]
//! map <name>
//! param <id> [invertible]
//! algebraic <id> minpoly <expr>
//! basis <label> ...
//! codomain <label> ...                # maps only; defaults to basis
//! grades <label>=<int> ...
//! window <int> | cap <int> | deformation <param> <order>
//! mu | bracket          i j : k = expr ... end
//! delta                 i : j k = expr ... end
//! alpha | beta | f      i : k = expr ... end     (or `alpha identity`)
//! unit | counit         i = expr ... end
//! ```
//! Unlisted structure constants are zero.

use crate::algebra::{Grading, HomAlgebra};
use crate::bialgebra::{BialgebraKind, HomBialgebra};
use crate::coalgebra::{Comultiplication, HomCoalgebra};
use crate::error::{Error, Result};
use crate::linear::{zero_vec, BilinearMap, LinearMap, Space, Vector};
use crate::scalar::poly::Poly;
use crate::scalar::{parse_scalar, ParamSet, Scalar};
use std::collections::{BTreeMap, BTreeSet};

/// A linear map between two bases, e.g. an endomorphism for twisting.
#[derive(Clone, Debug, PartialEq)]
pub struct MapDef {
    pub name: String,
    pub params: ParamSet,
    pub domain: Space,
    pub codomain: Space,
    pub f: LinearMap,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Definition {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
    Map(MapDef),
}

impl Definition {
    pub fn kind(&self) -> &'static str {
        match self {
            Definition::Algebra(_) => "algebra",
            Definition::Coalgebra(_) => "coalgebra",
            Definition::Bialgebra(_) => "bialgebra",
            Definition::Map(_) => "map",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Definition::Algebra(a) => &a.name,
            Definition::Coalgebra(c) => &c.name,
            Definition::Bialgebra(b) => &b.name,
            Definition::Map(m) => &m.name,
        }
    }
}

fn perr<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, msg: msg.into() })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum BlockKind {
    Mu,
    Bracket,
    Delta,
    Alpha,
    Beta,
    F,
    Unit,
    Counit,
}

impl BlockKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "mu" => Self::Mu,
            "bracket" => Self::Bracket,
            "delta" => Self::Delta,
            "alpha" => Self::Alpha,
            "beta" => Self::Beta,
            "f" => Self::F,
            "unit" => Self::Unit,
            "counit" => Self::Counit,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Self::Mu => "mu",
            Self::Bracket => "bracket",
            Self::Delta => "delta",
            Self::Alpha => "alpha",
            Self::Beta => "beta",
            Self::F => "f",
            Self::Unit => "unit",
            Self::Counit => "counit",
        }
    }

    /// Labels before `:` and after it; `None` arity means no colon.
    fn shape(self) -> (usize, Option<usize>) {
        match self {
            Self::Mu | Self::Bracket => (2, Some(1)),
            Self::Delta => (1, Some(2)),
            Self::Alpha | Self::Beta | Self::F => (1, Some(1)),
            Self::Unit | Self::Counit => (1, None),
        }
    }
}

/// One block's entries: label indices and coefficient, with source line.
struct Block {
    line: usize,
    identity: bool,
    entries: Vec<(usize, Vec<usize>, Scalar)>,
}

#[derive(Default)]
struct Raw {
    kind: String,
    name: String,
    option: Option<String>,
    params: ParamSet,
    basis: Option<Space>,
    codomain: Option<Space>,
    grades: Option<Vec<i64>>,
    window: Option<i64>,
    cap: Option<i64>,
    deformation: Option<(String, usize)>,
    blocks: BTreeMap<BlockKind, Block>,
}

fn col_of(line: &str, tok: &str) -> usize {
    let base = line.as_ptr() as usize;
    let p = tok.as_ptr() as usize;
    if p >= base && p <= base + line.len() {
        p - base + 1
    } else {
        1
    }
}

fn strip_comment(l: &str) -> &str {
    match l.find('#') {
        Some(i) => &l[..i],
        None => l,
    }
}

pub fn parse_definition(text: &str) -> Result<Definition> {
    let mut raw = Raw::default();
    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0;
    let mut header_seen = false;
    while i < lines.len() {
        let ln = i + 1;
        let line = strip_comment(lines[i]);
        i += 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let head = toks[0];
        let c0 = col_of(line, head);
        if !header_seen {
            match head {
                "algebra" | "coalgebra" | "bialgebra" | "map" => {}
                _ => return perr(ln, c0, "expected header 'algebra', 'coalgebra', 'bialgebra' or 'map'"),
            }
            if toks.len() < 2 {
                return perr(ln, c0, "header needs a name");
            }
            raw.kind = head.to_string();
            raw.name = toks[1].to_string();
            if toks.len() > 2 {
                if head != "bialgebra" || toks.len() > 3 || !matches!(toks[2], "generalized" | "unital-counital") {
                    return perr(ln, col_of(line, toks[2]), format!("unexpected '{}' in header", toks[2]));
                }
                raw.option = Some(toks[2].to_string());
            }
            header_seen = true;
            continue;
        }
        match head {
            "param" => {
                if toks.len() < 2 || toks.len() > 3 || (toks.len() == 3 && toks[2] != "invertible") {
                    return perr(ln, c0, "expected 'param <id> [invertible]'");
                }
                raw.params
                    .declare(toks[1], toks.len() == 3)
                    .or_else(|e| perr(ln, col_of(line, toks[1]), e.msg))?;
            }
            "algebraic" => {
                if toks.len() < 4 || toks[2] != "minpoly" {
                    return perr(ln, c0, "expected 'algebraic <id> minpoly <expr>'");
                }
                let start = col_of(line, toks[3]) - 1;
                let expr = &line[start..];
                raw.params
                    .set_algebraic_expr(toks[1], expr)
                    .or_else(|e| perr(ln, start + 1 + e.pos, e.msg))?;
            }
            "basis" | "codomain" => {
                if raw.basis.is_some() && head == "basis" || raw.codomain.is_some() && head == "codomain" {
                    return perr(ln, c0, format!("'{head}' declared twice"));
                }
                let sp = Space::new(&toks[1..]).or_else(|e| perr(ln, c0, e.to_string()))?;
                if head == "basis" {
                    raw.basis = Some(sp);
                } else {
                    raw.codomain = Some(sp);
                }
            }
            "grades" => {
                let sp = raw.basis.as_ref().ok_or(()).or_else(|_| perr(ln, c0, "'grades' before 'basis'"))?;
                let mut g: Vec<Option<i64>> = vec![None; sp.dim()];
                for t in &toks[1..] {
                    let col = col_of(line, t);
                    let (l, v) = t.split_once('=').ok_or(()).or_else(|_| perr(ln, col, "expected '<label>=<int>'"))?;
                    let k = sp.index(l).ok_or(()).or_else(|_| perr(ln, col, format!("undeclared basis label '{l}'")))?;
                    let v: i64 = v.parse().or_else(|_| perr(ln, col, format!("invalid grade '{v}'")))?;
                    g[k] = Some(v);
                }
                if g.iter().any(|x| x.is_none()) {
                    return perr(ln, c0, "every basis label needs a grade");
                }
                raw.grades = Some(g.into_iter().map(|x| x.unwrap()).collect());
            }
            "window" | "cap" => {
                let v: i64 = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .filter(|&v: &i64| v >= 0 && toks.len() == 2)
                    .ok_or(())
                    .or_else(|_| perr(ln, c0, format!("expected '{head} <nonnegative int>'")))?;
                if head == "window" {
                    raw.window = Some(v);
                } else {
                    raw.cap = Some(v);
                }
            }
            "deformation" => {
                if toks.len() != 3 {
                    return perr(ln, c0, "expected 'deformation <param> <order>'");
                }
                if raw.params.lookup(toks[1]).is_none() {
                    return perr(ln, col_of(line, toks[1]), format!("undeclared parameter '{}'", toks[1]));
                }
                let o: usize = toks[2].parse().or_else(|_| perr(ln, col_of(line, toks[2]), "invalid order"))?;
                raw.deformation = Some((toks[1].to_string(), o));
            }
            _ => {
                let Some(bk) = BlockKind::parse(head) else {
                    return perr(ln, c0, format!("unknown directive '{head}'"));
                };
                if raw.blocks.contains_key(&bk) {
                    return perr(ln, c0, format!("block '{head}' given twice"));
                }
                if toks.len() == 2 && toks[1] == "identity" && matches!(bk, BlockKind::Alpha | BlockKind::Beta | BlockKind::F) {
                    raw.blocks.insert(bk, Block { line: ln, identity: true, entries: vec![] });
                    continue;
                }
                if toks.len() != 1 {
                    return perr(ln, col_of(line, toks[1]), format!("unexpected text after '{head}'"));
                }
                let dom = raw.basis.clone().ok_or(()).or_else(|_| perr(ln, c0, "block before 'basis'"))?;
                let cod = if bk == BlockKind::F { raw.codomain.clone().unwrap_or_else(|| dom.clone()) } else { dom.clone() };
                let mut entries = Vec::new();
                let mut seen = BTreeSet::new();
                loop {
                    if i >= lines.len() {
                        return perr(ln, c0, format!("block '{head}' is missing 'end'"));
                    }
                    let eln = i + 1;
                    let el = strip_comment(lines[i]);
                    i += 1;
                    let t = el.trim();
                    if t.is_empty() {
                        continue;
                    }
                    if t == "end" {
                        break;
                    }
                    let (lhs, rhs) = el.split_once('=').ok_or(()).or_else(|_| perr(eln, col_of(el, t), "expected '='"))?;
                    let (before, after) = bk.shape();
                    let (pre, post): (&str, Option<&str>) = match after {
                        Some(_) => {
                            let (a, b) = lhs.split_once(':').ok_or(()).or_else(|_| perr(eln, col_of(el, t), "expected ':'"))?;
                            (a, Some(b))
                        }
                        None => (lhs, None),
                    };
                    let mut idx = Vec::new();
                    let pre_t: Vec<&str> = pre.split_whitespace().collect();
                    if pre_t.len() != before {
                        return perr(eln, col_of(el, t), format!("'{head}' entries need {before} label(s) before {}", if after.is_some() { "':'" } else { "'='" }));
                    }
                    for l in &pre_t {
                        idx.push(dom.index(l).ok_or(()).or_else(|_| perr(eln, col_of(el, l), format!("undeclared basis label '{l}'")))?);
                    }
                    if let (Some(p), Some(k)) = (post, after) {
                        let post_t: Vec<&str> = p.split_whitespace().collect();
                        if post_t.len() != k {
                            return perr(eln, col_of(el, p.trim_start()), format!("'{head}' entries need {k} label(s) after ':'"));
                        }
                        for l in &post_t {
                            idx.push(cod.index(l).ok_or(()).or_else(|_| perr(eln, col_of(el, l), format!("undeclared basis label '{l}'")))?);
                        }
                    }
                    if !seen.insert(idx.clone()) {
                        return perr(eln, col_of(el, t), "duplicate entry");
                    }
                    let rc = col_of(el, rhs.trim_start());
                    let v = parse_scalar(rhs.trim(), &raw.params).or_else(|e| perr(eln, rc + e.pos, e.msg))?;
                    entries.push((eln, idx, v));
                }
                raw.blocks.insert(bk, Block { line: ln, identity: false, entries });
            }
        }
    }
    if !header_seen {
        return perr(1, 1, "empty definition");
    }
    build(raw)
}

fn build(mut raw: Raw) -> Result<Definition> {
    let sp = raw.basis.clone().ok_or(Error::Missing("basis"))?;
    let n = sp.dim();
    let allowed: &[BlockKind] = match raw.kind.as_str() {
        "algebra" => &[BlockKind::Mu, BlockKind::Alpha, BlockKind::Unit, BlockKind::Bracket, BlockKind::Beta],
        "coalgebra" => &[BlockKind::Delta, BlockKind::Beta, BlockKind::Counit],
        "bialgebra" => &[BlockKind::Mu, BlockKind::Alpha, BlockKind::Delta, BlockKind::Beta, BlockKind::Unit, BlockKind::Counit],
        _ => &[BlockKind::F],
    };
    let required: &[BlockKind] = match raw.kind.as_str() {
        "algebra" => &[BlockKind::Mu, BlockKind::Alpha],
        "coalgebra" => &[BlockKind::Delta, BlockKind::Beta],
        "bialgebra" => &[BlockKind::Mu, BlockKind::Alpha, BlockKind::Delta, BlockKind::Beta],
        _ => &[BlockKind::F],
    };
    for (k, b) in &raw.blocks {
        if !allowed.contains(k) {
            return perr(b.line, 1, format!("block '{}' is not allowed in a {}", k.name(), raw.kind));
        }
    }
    for k in required {
        if !raw.blocks.contains_key(k) {
            return Err(Error::Structure(format!("a {} needs a '{}' block", raw.kind, k.name())));
        }
    }
    if raw.codomain.is_some() && raw.kind != "map" {
        return Err(Error::Structure("'codomain' is only allowed in maps".into()));
    }
    let bilinear = |b: Option<Block>| {
        b.map(|b| {
            let mut m = BilinearMap::zero(n);
            for (_, ix, v) in b.entries {
                m.set(ix[0], ix[1], ix[2], v);
            }
            m
        })
    };
    let linear = |b: Option<Block>, rows: usize| {
        b.map(|b| {
            if b.identity {
                return LinearMap::identity(n);
            }
            let mut m = LinearMap::zero(rows, n);
            for (_, ix, v) in b.entries {
                m.set(ix[1], ix[0], v);
            }
            m
        })
    };
    let vector = |b: Option<Block>| {
        b.map(|b| {
            let mut v: Vector = zero_vec(n);
            for (_, ix, x) in b.entries {
                v[ix[0]] = x;
            }
            v
        })
    };
    let grading = if raw.grades.is_some() || raw.window.is_some() || raw.cap.is_some() {
        let grades = raw.grades.clone().ok_or(Error::Structure("'window' and 'cap' need 'grades'".into()))?;
        Some(Grading { grades, window: raw.window, cap: raw.cap })
    } else {
        None
    };
    let deformation = match &raw.deformation {
        Some((p, o)) => Some((raw.params.var(p).unwrap(), *o)),
        None => None,
    };
    let mut take = |k| raw.blocks.remove(&k);
    let out = match raw.kind.as_str() {
        "algebra" => {
            let mut a = HomAlgebra::new(&raw.name, raw.params.clone(), sp, bilinear(take(BlockKind::Mu)).unwrap(), linear(take(BlockKind::Alpha), n).unwrap())?;
            a.unit = vector(take(BlockKind::Unit));
            a.bracket = bilinear(take(BlockKind::Bracket));
            a.beta = linear(take(BlockKind::Beta), n);
            a.grading = grading;
            a.deformation = deformation;
            Definition::Algebra(a)
        }
        "coalgebra" => {
            let mut d = Comultiplication::zero(n);
            for (_, ix, v) in take(BlockKind::Delta).unwrap().entries {
                d.set(ix[0], ix[1], ix[2], v);
            }
            let mut c = HomCoalgebra::new(&raw.name, raw.params.clone(), sp, d, linear(take(BlockKind::Beta), n).unwrap())?;
            c.counit = vector(take(BlockKind::Counit));
            c.grading = grading;
            Definition::Coalgebra(c)
        }
        "bialgebra" => {
            let mut d = Comultiplication::zero(n);
            for (_, ix, v) in take(BlockKind::Delta).unwrap().entries {
                d.set(ix[0], ix[1], ix[2], v);
            }
            let kind = match raw.option.as_deref() {
                Some("unital-counital") => BialgebraKind::UnitalCounital,
                _ => BialgebraKind::Generalized,
            };
            let h = HomBialgebra {
                name: raw.name.clone(),
                params: raw.params.clone(),
                space: sp,
                mu: bilinear(take(BlockKind::Mu)).unwrap(),
                alpha: linear(take(BlockKind::Alpha), n).unwrap(),
                delta: d,
                beta: linear(take(BlockKind::Beta), n).unwrap(),
                unit: vector(take(BlockKind::Unit)),
                counit: vector(take(BlockKind::Counit)),
                kind,
                grading,
            };
            h.validate()?;
            Definition::Bialgebra(h)
        }
        _ => {
            let cod = raw.codomain.clone().unwrap_or_else(|| sp.clone());
            let b = take(BlockKind::F).unwrap();
            if b.identity && cod.dim() != n {
                return Err(Error::Structure("'f identity' needs equal domain and codomain".into()));
            }
            let f = linear(Some(b), cod.dim()).unwrap();
            Definition::Map(MapDef { name: raw.name.clone(), params: raw.params.clone(), domain: sp, codomain: cod, f })
        }
    };
    Ok(out)
}

pub fn read_definition(path: &std::path::Path) -> Result<Definition> {
    let text = std::fs::read_to_string(path)?;
    parse_definition(&text)
}

fn print_header_params(out: &mut String, ps: &ParamSet) {
    for p in &ps.params {
        out.push_str(&format!("param {}{}\n", p.name, if p.invertible { " invertible" } else { "" }));
    }
    if let Some(e) = &ps.ext {
        let coeffs: Vec<Poly> = e.minpoly.iter().map(|c| Poly::constant(c.clone())).collect();
        out.push_str(&format!("algebraic {} minpoly {}\n", e.name, Poly::from_coeffs_in(e.var, &coeffs)));
    }
}

fn print_space(out: &mut String, key: &str, sp: &Space) {
    out.push_str(key);
    for l in sp.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
}

fn print_grading(out: &mut String, sp: &Space, g: &Option<Grading>) {
    if let Some(g) = g {
        out.push_str("grades");
        for (l, v) in sp.labels().iter().zip(&g.grades) {
            out.push_str(&format!(" {l}={v}"));
        }
        out.push('\n');
        if let Some(w) = g.window {
            out.push_str(&format!("window {w}\n"));
        }
        if let Some(c) = g.cap {
            out.push_str(&format!("cap {c}\n"));
        }
    }
}

fn print_bilinear(out: &mut String, key: &str, sp: &Space, m: &BilinearMap) {
    out.push_str(key);
    out.push('\n');
    for (i, j, k, c) in m.entries() {
        out.push_str(&format!("  {} {} : {} = {}\n", sp.label(i), sp.label(j), sp.label(k), c));
    }
    out.push_str("end\n");
}

fn print_linear(out: &mut String, key: &str, dom: &Space, cod: &Space, m: &LinearMap) {
    if m.rows() == m.cols() && m.is_identity() {
        out.push_str(&format!("{key} identity\n"));
        return;
    }
    out.push_str(key);
    out.push('\n');
    for i in 0..m.cols() {
        for k in 0..m.rows() {
            let c = m.get(k, i);
            if !c.is_zero() {
                out.push_str(&format!("  {} : {} = {}\n", dom.label(i), cod.label(k), c));
            }
        }
    }
    out.push_str("end\n");
}

fn print_vector(out: &mut String, key: &str, sp: &Space, v: &Option<Vector>) {
    if let Some(v) = v {
        out.push_str(key);
        out.push('\n');
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.push_str(&format!("  {} = {}\n", sp.label(i), c));
            }
        }
        out.push_str("end\n");
    }
}

fn print_delta(out: &mut String, sp: &Space, d: &Comultiplication) {
    out.push_str("delta\n");
    for (i, j, k, c) in d.entries() {
        out.push_str(&format!("  {} : {} {} = {}\n", sp.label(i), sp.label(j), sp.label(k), c));
    }
    out.push_str("end\n");
}

/// Canonical text; `parse_definition` inverts it.
pub fn print_definition(d: &Definition) -> String {
    let mut out = String::new();
    match d {
        Definition::Algebra(a) => {
            out.push_str(&format!("algebra {}\n", a.name));
            print_header_params(&mut out, &a.params);
            print_space(&mut out, "basis", &a.space);
            print_grading(&mut out, &a.space, &a.grading);
            if let Some((v, o)) = a.deformation {
                out.push_str(&format!("deformation {} {}\n", crate::scalar::vars::name(v), o));
            }
            print_bilinear(&mut out, "mu", &a.space, &a.mu);
            print_linear(&mut out, "alpha", &a.space, &a.space, &a.alpha);
            print_vector(&mut out, "unit", &a.space, &a.unit);
            if let Some(b) = &a.bracket {
                print_bilinear(&mut out, "bracket", &a.space, b);
            }
            if let Some(b) = &a.beta {
                print_linear(&mut out, "beta", &a.space, &a.space, b);
            }
        }
        Definition::Coalgebra(c) => {
            out.push_str(&format!("coalgebra {}\n", c.name));
            print_header_params(&mut out, &c.params);
            print_space(&mut out, "basis", &c.space);
            print_grading(&mut out, &c.space, &c.grading);
            print_delta(&mut out, &c.space, &c.delta);
            print_linear(&mut out, "beta", &c.space, &c.space, &c.beta);
            print_vector(&mut out, "counit", &c.space, &c.counit);
        }
        Definition::Bialgebra(h) => {
            let kind = match h.kind {
                BialgebraKind::Generalized => "generalized",
                BialgebraKind::UnitalCounital => "unital-counital",
            };
            out.push_str(&format!("bialgebra {} {}\n", h.name, kind));
            print_header_params(&mut out, &h.params);
            print_space(&mut out, "basis", &h.space);
            print_grading(&mut out, &h.space, &h.grading);
            print_bilinear(&mut out, "mu", &h.space, &h.mu);
            print_linear(&mut out, "alpha", &h.space, &h.space, &h.alpha);
            print_delta(&mut out, &h.space, &h.delta);
            print_linear(&mut out, "beta", &h.space, &h.space, &h.beta);
            print_vector(&mut out, "unit", &h.space, &h.unit);
            print_vector(&mut out, "counit", &h.space, &h.counit);
        }
        Definition::Map(m) => {
            out.push_str(&format!("map {}\n", m.name));
            print_header_params(&mut out, &m.params);
            print_space(&mut out, "basis", &m.domain);
            if m.codomain != m.domain {
                print_space(&mut out, "codomain", &m.codomain);
            }
            print_linear(&mut out, "f", &m.domain, &m.codomain, &m.f);
        }
    }
    out
}
