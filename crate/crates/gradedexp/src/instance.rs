//! The plain-text instance format.
//!
//! An instance is a sequence of records `kind { key: value, ... }`. Values
//! are integers, double-quoted strings, bracketed lists and nested
//! `{ ... }` maps. `#` starts a comment running to the end of the line.
//! The grammar is documented in `docs/instance-format.md`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use gradedexp_core::cocycle::TwoCocycle;
use gradedexp_core::glued::{Edge, GluedAlgebra};
use gradedexp_core::group::{GroupTable, Subgroup};
use gradedexp_core::simple::GradedSimple;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{path}: {msg}")]
    Semantic { path: String, msg: String },
}

fn semantic(path: impl Into<String>, msg: impl Into<String>) -> InstanceError {
    InstanceError::Semantic {
        path: path.into(),
        msg: msg.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Str(String),
    List(Vec<Value>),
    Map(Vec<(String, Value)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, Value)>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    Open(char),
    Close(char),
    Colon,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, InstanceError> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let pos = Pos { line: ln + 1, col: i + 1 };
            let err = |msg: String| InstanceError::Syntax {
                line: pos.line,
                col: pos.col,
                msg,
            };
            let c = chars[i];
            match c {
                '#' => break,
                c if c.is_whitespace() => i += 1,
                '{' | '[' => {
                    out.push((Tok::Open(c), pos));
                    i += 1;
                }
                '}' | ']' => {
                    out.push((Tok::Close(c), pos));
                    i += 1;
                }
                ':' => {
                    out.push((Tok::Colon, pos));
                    i += 1;
                }
                ',' => {
                    out.push((Tok::Comma, pos));
                    i += 1;
                }
                '"' => {
                    let start = i + 1;
                    let end = chars[start..]
                        .iter()
                        .position(|&x| x == '"')
                        .ok_or_else(|| err("unterminated string".into()))?;
                    out.push((Tok::Str(chars[start..start + end].iter().collect()), pos));
                    i = start + end + 1;
                }
                c if c.is_ascii_digit() || c == '-' => {
                    let start = i;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    let v = s.parse().map_err(|_| err(format!("invalid integer '{s}'")))?;
                    out.push((Tok::Int(v), pos));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
                }
                other => return Err(err(format!("unexpected character '{other}'"))),
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, InstanceError> {
        let p = self.pos();
        Err(InstanceError::Syntax {
            line: p.line,
            col: p.col,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), InstanceError> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn fields(&mut self) -> Result<Vec<(String, Value)>, InstanceError> {
        self.expect(Tok::Open('{'), "'{'")?;
        let mut fields: Vec<(String, Value)> = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Close('}')) => {
                    self.at += 1;
                    return Ok(fields);
                }
                Some(Tok::Ident(_)) => {}
                _ => return self.fail("expected a key or '}'"),
            }
            let Some(Tok::Ident(key)) = self.next() else { unreachable!() };
            if fields.iter().any(|(k, _)| *k == key) {
                self.at -= 1;
                return self.fail(format!("duplicate key '{key}'"));
            }
            self.expect(Tok::Colon, "':'")?;
            let v = self.value()?;
            fields.push((key, v));
            match self.peek() {
                Some(Tok::Comma) => self.at += 1,
                Some(Tok::Close('}')) => {}
                _ => return self.fail("expected ',' or '}'"),
            }
        }
    }

    fn value(&mut self) -> Result<Value, InstanceError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(Value::Int(v))
            }
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(Value::Str(s))
            }
            Some(Tok::Open('{')) => Ok(Value::Map(self.fields()?)),
            Some(Tok::Open('[')) => {
                self.at += 1;
                let mut items = Vec::new();
                loop {
                    if self.peek() == Some(&Tok::Close(']')) {
                        self.at += 1;
                        return Ok(Value::List(items));
                    }
                    items.push(self.value()?);
                    match self.peek() {
                        Some(Tok::Comma) => self.at += 1,
                        Some(Tok::Close(']')) => {}
                        _ => return self.fail("expected ',' or ']'"),
                    }
                }
            }
            _ => self.fail("expected a value"),
        }
    }
}

/// Parses the record structure without interpreting it.
pub fn parse_records(text: &str) -> Result<Vec<Record>, InstanceError> {
    let toks = lex(text)?;
    let end = Pos {
        line: text.lines().count().max(1),
        col: text.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    let mut p = Parser { toks, at: 0, end };
    let mut records = Vec::new();
    while p.peek().is_some() {
        let pos = p.pos();
        let Some(Tok::Ident(kind)) = p.next() else {
            p.at -= 1;
            return p.fail("expected a record name");
        };
        let fields = p.fields()?;
        records.push(Record { kind, fields, pos });
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Catalog(String),
    Table { order: usize, table: Vec<usize> },
    /// Direct product of catalog groups; index `(a, b)` is `a * |B| + b`.
    Product(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub name: String,
    pub elements: Vec<usize>,
    pub normal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleSpec {
    Trivial { modulus: u32 },
    Coboundary { modulus: u32, values: Vec<u32> },
    Table { modulus: u32, table: Vec<u32> },
    /// The non-trivial class on a Klein four-group.
    Klein,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSpec {
    pub h: Vec<usize>,
    pub tuple: Vec<usize>,
    pub cocycle: CocycleSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub group: GroupSpec,
    pub subgroups: Vec<SubgroupSpec>,
    pub simples: Vec<SimpleSpec>,
    pub edges: Vec<Edge>,
    pub truncation: usize,
    pub seed: Option<u64>,
}

struct Fields<'a> {
    path: String,
    fields: &'a [(String, Value)],
    used: BTreeSet<&'a str>,
}

impl<'a> Fields<'a> {
    fn new(path: String, fields: &'a [(String, Value)]) -> Self {
        Fields {
            path,
            fields,
            used: BTreeSet::new(),
        }
    }

    fn get(&mut self, key: &'a str) -> Option<&'a Value> {
        let v = self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v);
        if v.is_some() {
            self.used.insert(key);
        }
        v
    }

    fn sub(&self, key: &str) -> String {
        format!("{}.{key}", self.path)
    }

    fn required(&mut self, key: &'a str) -> Result<&'a Value, InstanceError> {
        self.get(key).ok_or_else(|| semantic(self.path.clone(), format!("missing key '{key}'")))
    }

    fn int(&mut self, key: &'a str) -> Result<usize, InstanceError> {
        let v = self.required(key)?;
        as_usize(v, &self.sub(key))
    }

    fn finish(self) -> Result<(), InstanceError> {
        for (k, _) in self.fields {
            if !self.used.contains(k.as_str()) {
                return Err(semantic(self.path.clone(), format!("unknown key '{k}'")));
            }
        }
        Ok(())
    }
}

fn as_usize(v: &Value, path: &str) -> Result<usize, InstanceError> {
    match v {
        Value::Int(x) if *x >= 0 => Ok(*x as usize),
        _ => Err(semantic(path, "expected a non-negative integer")),
    }
}

fn as_str<'v>(v: &'v Value, path: &str) -> Result<&'v str, InstanceError> {
    match v {
        Value::Str(s) => Ok(s),
        _ => Err(semantic(path, "expected a string")),
    }
}

fn as_list<'v>(v: &'v Value, path: &str) -> Result<&'v [Value], InstanceError> {
    match v {
        Value::List(items) => Ok(items),
        _ => Err(semantic(path, "expected a list")),
    }
}

fn usize_list(v: &Value, path: &str) -> Result<Vec<usize>, InstanceError> {
    as_list(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_usize(x, &format!("{path}[{i}]")))
        .collect()
}

fn u32_list(v: &Value, path: &str) -> Result<Vec<u32>, InstanceError> {
    usize_list(v, path)?
        .into_iter()
        .enumerate()
        .map(|(i, x)| u32::try_from(x).map_err(|_| semantic(format!("{path}[{i}]"), "value too large")))
        .collect()
}

fn modulus(f: &mut Fields, default: Option<u32>) -> Result<u32, InstanceError> {
    let m = match f.get("modulus") {
        Some(v) => as_usize(v, &f.sub("modulus"))?,
        None => match default {
            Some(d) => return Ok(d),
            None => return Err(semantic(f.path.clone(), "missing key 'modulus'")),
        },
    };
    if m == 0 || m > 64 {
        return Err(semantic(f.sub("modulus"), "modulus must be in 1..=64"));
    }
    Ok(m as u32)
}

fn cocycle_spec(v: &Value, path: String) -> Result<CocycleSpec, InstanceError> {
    let Value::Map(fields) = v else {
        return Err(semantic(path, "expected a map"));
    };
    let mut f = Fields::new(path, fields);
    let kind = as_str(f.required("kind")?, &f.sub("kind"))?.to_string();
    let spec = match kind.as_str() {
        "trivial" => CocycleSpec::Trivial {
            modulus: modulus(&mut f, Some(2))?,
        },
        "coboundary" => {
            let modulus = modulus(&mut f, None)?;
            let values = u32_list(f.required("data")?, &f.sub("data"))?;
            CocycleSpec::Coboundary { modulus, values }
        }
        "table" => {
            let modulus = modulus(&mut f, None)?;
            let table = u32_list(f.required("data")?, &f.sub("data"))?;
            CocycleSpec::Table { modulus, table }
        }
        "klein" => CocycleSpec::Klein,
        other => return Err(semantic(f.sub("kind"), format!("unknown cocycle kind '{other}'"))),
    };
    f.finish()?;
    Ok(spec)
}

impl InstanceSpec {
    /// Parses and interprets an instance, without building any algebra.
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let records = parse_records(text)?;
        let mut group = None;
        let mut subgroups = Vec::new();
        let mut simples = Vec::new();
        let mut edges = Vec::new();
        let mut truncation = None;
        let mut seed = None;
        let mut count = std::collections::BTreeMap::<&str, usize>::new();
        for r in &records {
            let n = count.entry(r.kind.as_str()).or_default();
            let path = format!("{}[{}]", r.kind, *n);
            *n += 1;
            let mut f = Fields::new(path.clone(), &r.fields);
            match r.kind.as_str() {
                "group" => {
                    if group.is_some() {
                        return Err(semantic(path, "only one group record is allowed"));
                    }
                    group = Some(if let Some(v) = f.get("catalog") {
                        GroupSpec::Catalog(as_str(v, &f.sub("catalog"))?.to_string())
                    } else if let Some(v) = f.get("product") {
                        let parts = as_list(v, &f.sub("product"))?
                            .iter()
                            .enumerate()
                            .map(|(i, x)| as_str(x, &format!("{}[{i}]", f.sub("product"))).map(str::to_string))
                            .collect::<Result<Vec<_>, _>>()?;
                        if parts.is_empty() {
                            return Err(semantic(f.sub("product"), "empty product"));
                        }
                        GroupSpec::Product(parts)
                    } else {
                        let order = f.int("order")?;
                        let table = usize_list(f.required("table")?, &f.sub("table"))?;
                        GroupSpec::Table { order, table }
                    });
                }
                "subgroup" | "normal" => {
                    let name = as_str(f.required("name")?, &f.sub("name"))?.to_string();
                    let elements = usize_list(f.required("elements")?, &f.sub("elements"))?;
                    subgroups.push(SubgroupSpec {
                        name,
                        elements,
                        normal: r.kind == "normal",
                    });
                }
                "simple" => {
                    let h = usize_list(f.required("H")?, &f.sub("H"))?;
                    let tuple = usize_list(f.required("tuple")?, &f.sub("tuple"))?;
                    let cocycle = match f.get("cocycle") {
                        Some(v) => cocycle_spec(v, f.sub("cocycle"))?,
                        None => CocycleSpec::Trivial { modulus: 2 },
                    };
                    simples.push(SimpleSpec { h, tuple, cocycle });
                }
                "edge" => {
                    edges.push(Edge {
                        from: f.int("from")?,
                        to: f.int("to")?,
                        degree: f.int("degree")?,
                    });
                }
                "truncation" => {
                    if truncation.is_some() {
                        return Err(semantic(path, "only one truncation record is allowed"));
                    }
                    truncation = Some(f.int("N")?);
                }
                "seed" => {
                    seed = Some(f.int("value")? as u64);
                }
                other => {
                    return Err(InstanceError::Syntax {
                        line: r.pos.line,
                        col: r.pos.col,
                        msg: format!("unknown record kind '{other}'"),
                    })
                }
            }
            f.finish()?;
        }
        let group = group.ok_or_else(|| semantic("group", "missing group record"))?;
        if simples.is_empty() {
            return Err(semantic("simple", "at least one simple record is required"));
        }
        Ok(InstanceSpec {
            group,
            subgroups,
            simples,
            edges,
            truncation: truncation.unwrap_or(1),
            seed,
        })
    }

    /// Canonical text form; `parse(emit(s)) == s`.
    pub fn emit(&self) -> String {
        fn list<T: fmt::Display>(xs: &[T]) -> String {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            format!("[{}]", items.join(", "))
        }
        fn strings(xs: &[String]) -> String {
            let items: Vec<String> = xs.iter().map(|x| format!("\"{x}\"")).collect();
            format!("[{}]", items.join(", "))
        }
        let mut s = String::new();
        if let Some(seed) = self.seed {
            writeln!(s, "seed {{ value: {seed} }}").unwrap();
        }
        match &self.group {
            GroupSpec::Catalog(name) => writeln!(s, "group {{ catalog: \"{name}\" }}"),
            GroupSpec::Table { order, table } => writeln!(s, "group {{ order: {order}, table: {} }}", list(table)),
            GroupSpec::Product(parts) => writeln!(s, "group {{ product: {} }}", strings(parts)),
        }
        .unwrap();
        for sg in &self.subgroups {
            let kind = if sg.normal { "normal" } else { "subgroup" };
            writeln!(s, "{kind} {{ name: \"{}\", elements: {} }}", sg.name, list(&sg.elements)).unwrap();
        }
        for b in &self.simples {
            let c = match &b.cocycle {
                CocycleSpec::Trivial { modulus } => format!("{{ kind: \"trivial\", modulus: {modulus} }}"),
                CocycleSpec::Coboundary { modulus, values } => {
                    format!("{{ kind: \"coboundary\", modulus: {modulus}, data: {} }}", list(values))
                }
                CocycleSpec::Table { modulus, table } => {
                    format!("{{ kind: \"table\", modulus: {modulus}, data: {} }}", list(table))
                }
                CocycleSpec::Klein => "{ kind: \"klein\" }".to_string(),
            };
            writeln!(s, "simple {{ H: {}, tuple: {}, cocycle: {c} }}", list(&b.h), list(&b.tuple)).unwrap();
        }
        for e in &self.edges {
            writeln!(s, "edge {{ from: {}, to: {}, degree: {} }}", e.from, e.to, e.degree).unwrap();
        }
        writeln!(s, "truncation {{ N: {} }}", self.truncation).unwrap();
        s
    }

    /// 64-bit FNV-1a hash of the canonical form.
    pub fn hash(&self) -> u64 {
        fnv1a(self.emit().as_bytes())
    }

    pub fn build_group(&self) -> Result<GroupTable, InstanceError> {
        let core = |e: gradedexp_core::Error| semantic("group[0]", e.to_string());
        match &self.group {
            GroupSpec::Catalog(name) => GroupTable::catalog(name).map_err(core),
            GroupSpec::Table { order, table } => {
                if table.len() != order * order {
                    return Err(semantic(
                        "group[0].table",
                        format!("expected {} entries, found {}", order * order, table.len()),
                    ));
                }
                GroupTable::from_table(*order, table.clone()).map_err(core)
            }
            GroupSpec::Product(parts) => {
                let mut acc = GroupTable::catalog(&parts[0]).map_err(core)?;
                for p in &parts[1..] {
                    acc = GroupTable::direct_product(&acc, &GroupTable::catalog(p).map_err(core)?).map_err(core)?;
                }
                Ok(acc)
            }
        }
    }

    /// The factor `G` of a group declared as `product: ["Z2", ...]`.
    pub fn envelope_factor(&self) -> Result<GroupTable, InstanceError> {
        match &self.group {
            GroupSpec::Product(parts) if parts[0] == "Z2" => {
                let core = |e: gradedexp_core::Error| semantic("group[0].product", e.to_string());
                let Some(first) = parts.get(1) else {
                    return GroupTable::cyclic(1).map_err(core);
                };
                let mut acc = GroupTable::catalog(first).map_err(core)?;
                for p in &parts[2..] {
                    acc = GroupTable::direct_product(&acc, &GroupTable::catalog(p).map_err(core)?).map_err(core)?;
                }
                Ok(acc)
            }
            _ => Err(semantic(
                "group[0]",
                "envelope needs a group declared as product: [\"Z2\", ...]",
            )),
        }
    }

    /// The graded-simple components, validated against `group`.
    pub fn build_components(&self, group: &GroupTable) -> Result<Vec<GradedSimple>, InstanceError> {
        let check_elements = |xs: &[usize], path: &str| check_elements(group, xs, path);
        let mut components = Vec::new();
        for (t, b) in self.simples.iter().enumerate() {
            let path = format!("simple[{t}]");
            check_elements(&b.h, &format!("{path}.H"))?;
            check_elements(&b.tuple, &format!("{path}.tuple"))?;
            let h = Subgroup::new(group, &b.h).map_err(|e| semantic(format!("{path}.H"), e.to_string()))?;
            let cpath = format!("{path}.cocycle");
            let core = |e: gradedexp_core::Error| semantic(cpath.clone(), e.to_string());
            let f = match &b.cocycle {
                CocycleSpec::Trivial { modulus } => TwoCocycle::trivial(&h, *modulus),
                CocycleSpec::Coboundary { modulus, values } => TwoCocycle::coboundary(group, &h, *modulus, values),
                CocycleSpec::Table { modulus, table } => TwoCocycle::from_table(group, &h, *modulus, table.clone()),
                CocycleSpec::Klein => TwoCocycle::klein_nontrivial(group, &h),
            }
            .map_err(core)?;
            let simple = GradedSimple::new(group, &h, &f, &b.tuple).map_err(|e| semantic(path, e.to_string()))?;
            components.push(simple);
        }
        Ok(components)
    }

    /// Builds every object and runs the construction invariants.
    pub fn build(&self, cap: usize) -> Result<Instance, InstanceError> {
        let group = self.build_group()?;
        let n = group.order();
        let check_elements = |xs: &[usize], path: &str| check_elements(&group, xs, path);
        let mut subgroups = Vec::new();
        let (mut ns, mut nn) = (0, 0);
        for sg in &self.subgroups {
            let path = if sg.normal {
                nn += 1;
                format!("normal[{}]", nn - 1)
            } else {
                ns += 1;
                format!("subgroup[{}]", ns - 1)
            };
            check_elements(&sg.elements, &format!("{path}.elements"))?;
            if subgroups.iter().any(|(name, _): &(String, Subgroup)| *name == sg.name) {
                return Err(semantic(format!("{path}.name"), format!("duplicate name '{}'", sg.name)));
            }
            let k = Subgroup::new(&group, &sg.elements).map_err(|e| semantic(format!("{path}.elements"), e.to_string()))?;
            if sg.normal && !group.is_normal(&k) {
                return Err(semantic(format!("{path}.elements"), "subgroup is not normal"));
            }
            subgroups.push((sg.name.clone(), k));
        }
        let components = self.build_components(&group)?;
        for (i, e) in self.edges.iter().enumerate() {
            let path = format!("edge[{i}]");
            if e.from >= components.len() {
                return Err(semantic(format!("{path}.from"), "no such simple component"));
            }
            if e.to >= components.len() {
                return Err(semantic(format!("{path}.to"), "no such simple component"));
            }
            if e.degree >= n {
                return Err(semantic(format!("{path}.degree"), format!("{} is not a group element", e.degree)));
            }
        }
        let algebra = GluedAlgebra::new(&group, &components, &self.edges, self.truncation, cap)
            .map_err(|e| semantic("instance", e.to_string()))?;
        Ok(Instance {
            spec: self.clone(),
            group,
            subgroups,
            algebra,
        })
    }
}

fn check_elements(group: &GroupTable, xs: &[usize], path: &str) -> Result<(), InstanceError> {
    for (i, &x) in xs.iter().enumerate() {
        if x >= group.order() {
            return Err(semantic(format!("{path}[{i}]"), format!("{x} is not a group element")));
        }
    }
    Ok(())
}

pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub struct Instance {
    pub spec: InstanceSpec,
    pub group: GroupTable,
    /// Named subgroups, in file order.
    pub subgroups: Vec<(String, Subgroup)>,
    pub algebra: GluedAlgebra,
}

impl Instance {
    /// Resolves a subgroup argument: a record name, `G`, `e`, or a
    /// comma-separated element list.
    pub fn subgroup(&self, arg: &str) -> Result<Subgroup, InstanceError> {
        if let Some((_, k)) = self.subgroups.iter().find(|(n, _)| n == arg) {
            return Ok(k.clone());
        }
        match arg {
            "G" => return Ok(Subgroup::whole(&self.group)),
            "e" => return Ok(Subgroup::trivial(&self.group)),
            _ => {}
        }
        let elements = arg
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| semantic("--subgroup", format!("'{arg}' is neither a subgroup name nor an element list")))?;
        if let Some(&x) = elements.iter().find(|&&x| x >= self.group.order()) {
            return Err(semantic("--subgroup", format!("{x} is not a group element")));
        }
        Subgroup::new(&self.group, &elements).map_err(|e| semantic("--subgroup", e.to_string()))
    }
}
