//! Model differential graded algebras of graphic arrangements.
//!
//! Every generator has cohomological degree one. Relations are kept as
//! produced (degree two or three and higher before any Gröbner reduction);
//! the differential is stored on generators and extended by the Leibniz
//! rule.
//!
//! Variable orders are chosen so that the degree-lexicographic order of
//! [`crate::extalg::Monomial`] puts, for every edge `e`, the vertex classes of
//! `h(e)` below `g_e`: vertex by vertex, first the classes of `v`, then the
//! `g_e` with `h(e) = v` in edge order.

use std::fmt;

use crate::error::{Error, Result};
use crate::extalg::{buchberger, parse_poly, to_text, ExtPoly, GroebnerBasis, Monomial, VarTable};
use crate::graph::{EdgeSet, OrderedGraph};
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveType {
    /// The affine line `ℂ`.
    Rational,
    /// The punctured line `ℂ×`.
    Toric,
    /// A projective curve of the given positive genus; genus one is the
    /// elliptic case.
    Projective(u32),
}

impl CurveType {
    pub fn genus(self) -> u32 {
        match self {
            CurveType::Projective(g) => g,
            _ => 0,
        }
    }

    /// Graded dimensions of the cohomology of the curve itself.
    pub fn curve_poincare(self) -> Vec<u64> {
        match self {
            CurveType::Rational => vec![1],
            CurveType::Toric => vec![1, 1],
            CurveType::Projective(g) => vec![1, 2 * g as u64, 1],
        }
    }
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveType::Rational => write!(f, "rational"),
            CurveType::Toric => write!(f, "toric"),
            CurveType::Projective(g) => write!(f, "genus:{g}"),
        }
    }
}

impl std::str::FromStr for CurveType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, msg: format!("unknown curve `{s}` (rational, toric, genus:G)") };
        match s {
            "rational" => Ok(CurveType::Rational),
            "toric" => Ok(CurveType::Toric),
            _ => {
                let g: u32 = s.strip_prefix("genus:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if g == 0 {
                    return Err(Error::GenusZeroUnsupported);
                }
                Ok(CurveType::Projective(g))
            }
        }
    }
}

/// What a generator stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// `x^i_v` (`i` counted from one).
    X { index: u32, vertex: usize },
    /// `y^i_v`.
    Y { index: u32, vertex: usize },
    /// `g_e`.
    G { edge: usize },
}

/// Where a presentation came from and how its generators are laid out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementSource {
    pub graph: OrderedGraph,
    pub curve: CurveType,
    pub kinds: Vec<VarKind>,
}

impl ArrangementSource {
    pub fn find(&self, kind: VarKind) -> Option<usize> {
        self.kinds.iter().position(|k| *k == kind)
    }

    pub fn x(&self, index: u32, vertex: usize) -> usize {
        self.find(VarKind::X { index, vertex }).expect("x generator")
    }

    pub fn y(&self, index: u32, vertex: usize) -> usize {
        self.find(VarKind::Y { index, vertex }).expect("y generator")
    }

    pub fn g(&self, edge: usize) -> usize {
        self.find(VarKind::G { edge }).expect("g generator")
    }
}

/// Graded-commutative DGA generated in degree one: `Λ(V) / (relations)`
/// with a differential given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgaPresentation<T> {
    vars: VarTable,
    weights: Vec<u32>,
    relations: Vec<ExtPoly<T>>,
    differential: Vec<ExtPoly<T>>,
    source: Option<ArrangementSource>,
}

impl<T: Scalar> DgaPresentation<T> {
    /// Presentation from raw data; `differential[i]` is `d` of generator `i`
    /// and must be homogeneous of degree two (or zero).
    pub fn new(vars: VarTable, weights: Vec<u32>, relations: Vec<ExtPoly<T>>, differential: Vec<ExtPoly<T>>) -> Result<Self> {
        let n = vars.len();
        if weights.len() != n || differential.len() != n {
            return Err(Error::VarTableMismatch);
        }
        for p in relations.iter().chain(&differential) {
            p.check_vars(n)?;
        }
        if let Some(i) = differential.iter().position(|d| !d.is_zero() && !(d.is_homogeneous() && d.degree() == Some(2))) {
            return Err(Error::invariant("differential degree", format!("d({}) is not of degree two", vars.name(i))));
        }
        Ok(DgaPresentation { vars, weights, relations, differential, source: None })
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Weight of a monomial: sum of generator weights.
    pub fn monomial_weight(&self, m: Monomial) -> u32 {
        m.vars().map(|v| self.weights[v]).sum()
    }

    pub fn relations(&self) -> &[ExtPoly<T>] {
        &self.relations
    }

    pub fn differential(&self) -> &[ExtPoly<T>] {
        &self.differential
    }

    pub fn source(&self) -> Option<&ArrangementSource> {
        self.source.as_ref()
    }

    pub fn has_zero_differential(&self) -> bool {
        self.differential.iter().all(ExtPoly::is_zero)
    }

    /// Reduced Gröbner basis of the relation ideal.
    pub fn groebner_basis(&self, pair_cap: usize) -> Result<GroebnerBasis<T>> {
        buchberger(&self.relations, self.vars.len(), pair_cap)
    }

    /// Leibniz extension of the differential, without reduction.
    pub fn differential_raw(&self, f: &ExtPoly<T>) -> ExtPoly<T> {
        let mut out = ExtPoly::zero();
        for (m, c) in f.terms() {
            let vars: Vec<usize> = m.vars().collect();
            for (j, &v) in vars.iter().enumerate() {
                let dv = &self.differential[v];
                if dv.is_zero() {
                    continue;
                }
                let before = ExtPoly::product_of_vars(&vars[..j]);
                let after = ExtPoly::product_of_vars(&vars[j + 1..]);
                let term = &(&before * dv) * &after;
                let sign = if j % 2 == 1 { -c.clone() } else { c.clone() };
                out = &out + &term.scale(&sign);
            }
        }
        out
    }

    /// `d f` reduced to normal form modulo the relations.
    pub fn apply_differential(&self, f: &ExtPoly<T>, gb: &GroebnerBasis<T>) -> ExtPoly<T> {
        gb.normal_form(&self.differential_raw(f))
    }

    /// `d² = 0` on every generator and `d` preserves the relation ideal.
    pub fn check_differential(&self, gb: &GroebnerBasis<T>) -> Result<()> {
        for v in 0..self.vars.len() {
            let dd = self.apply_differential(&self.differential_raw(&ExtPoly::var(v)), gb);
            if !dd.is_zero() {
                return Err(Error::invariant("d^2 = 0", format!("d(d({})) = {}", self.vars.name(v), self.show(&dd))));
            }
        }
        for r in &self.relations {
            let dr = self.apply_differential(r, gb);
            if !dr.is_zero() {
                return Err(Error::invariant("d(relation) in ideal", format!("d({}) = {}", self.show(r), self.show(&dr))));
            }
        }
        Ok(())
    }

    pub fn show(&self, p: &ExtPoly<T>) -> String {
        to_text(p, &self.vars)
    }

    /// Line-oriented text form:
    ///
    /// ```text
    /// arrangelab-v1 presentation
    /// curve genus:1
    /// generators 3
    /// gen x.1 weight 1
    /// ...
    /// relations 1
    /// rel x.1^g.1.2 - x.2^g.1.2
    /// differential
    /// d g.1.2 = x.1^y.1 - ...
    /// end
    /// ```
    ///
    /// Only nonzero differentials are listed.
    pub fn to_text(&self) -> String {
        let mut s = String::from("arrangelab-v1 presentation\n");
        if let Some(src) = &self.source {
            s.push_str(&format!("curve {}\n", src.curve));
            s.push_str(&format!("vertices {}\n", src.graph.labels().join(" ")));
        }
        s.push_str(&format!("generators {}\n", self.vars.len()));
        for (i, name) in self.vars.names().iter().enumerate() {
            s.push_str(&format!("gen {name} weight {}\n", self.weights[i]));
        }
        s.push_str(&format!("relations {}\n", self.relations.len()));
        for r in &self.relations {
            s.push_str(&format!("rel {}\n", self.show(r)));
        }
        s.push_str("differential\n");
        for (i, d) in self.differential.iter().enumerate() {
            if !d.is_zero() {
                s.push_str(&format!("d {} = {}\n", self.vars.name(i), self.show(d)));
            }
        }
        s.push_str("end\n");
        s
    }

    /// Read the format of [`DgaPresentation::to_text`]. The arrangement
    /// source is not reconstructed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut rel_lines = Vec::new();
        let mut d_lines = Vec::new();
        let mut header = false;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let perr = |msg: &str| Error::Parse { line: no + 1, msg: msg.to_string() };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !header {
                if line != "arrangelab-v1 presentation" {
                    return Err(perr("missing `arrangelab-v1 presentation` header"));
                }
                header = true;
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "curve" | "vertices" | "generators" | "relations" | "differential" | "end" => {}
                "gen" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    match parts.as_slice() {
                        [name, "weight", w] => {
                            names.push(name.to_string());
                            weights.push(w.parse().map_err(|_| perr("bad weight"))?);
                        }
                        _ => return Err(perr("expected `gen NAME weight W`")),
                    }
                }
                "rel" => rel_lines.push((no + 1, rest.to_string())),
                "d" => {
                    let (name, poly) = rest.split_once('=').ok_or_else(|| perr("expected `d NAME = POLY`"))?;
                    d_lines.push((no + 1, name.trim().to_string(), poly.to_string()));
                }
                _ => return Err(perr("unknown line")),
            }
        }
        let vars = VarTable::new(names)?;
        let at = |line: usize, e: Error| match e {
            Error::Parse { msg, .. } => Error::Parse { line, msg },
            other => other,
        };
        let relations = rel_lines
            .iter()
            .map(|(l, s)| parse_poly(s, &vars).map_err(|e| at(*l, e)))
            .collect::<Result<Vec<_>>>()?;
        let mut differential = vec![ExtPoly::zero(); vars.len()];
        for (l, name, s) in &d_lines {
            let v = vars.rank(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            differential[v] = parse_poly(s, &vars).map_err(|e| at(*l, e))?;
        }
        Self::new(vars, weights, relations, differential)
    }
}

// ---- builders ----

struct Layout {
    names: Vec<String>,
    kinds: Vec<VarKind>,
}

fn layout(g: &OrderedGraph, curve: CurveType) -> Layout {
    let genus = curve.genus();
    let mut names = Vec::new();
    let mut kinds = Vec::new();
    for v in 0..g.num_vertices() {
        let label = g.label(v);
        match curve {
            CurveType::Rational => {}
            CurveType::Toric => {
                names.push(format!("x.{label}"));
                kinds.push(VarKind::X { index: 1, vertex: v });
            }
            CurveType::Projective(_) => {
                for i in 1..=genus {
                    let sfx = if genus == 1 { String::new() } else { i.to_string() };
                    names.push(format!("x{sfx}.{label}"));
                    kinds.push(VarKind::X { index: i, vertex: v });
                    names.push(format!("y{sfx}.{label}"));
                    kinds.push(VarKind::Y { index: i, vertex: v });
                }
            }
        }
        for (e, edge) in g.edges().iter().enumerate() {
            if edge.head == v {
                names.push(format!("g.{}", g.edge_name(e)));
                kinds.push(VarKind::G { edge: e });
            }
        }
    }
    Layout { names, kinds }
}

fn assemble<T: Scalar>(
    g: &OrderedGraph,
    curve: CurveType,
    build: impl FnOnce(&ArrangementSource) -> Result<(Vec<ExtPoly<T>>, Vec<ExtPoly<T>>)>,
) -> Result<DgaPresentation<T>> {
    let Layout { names, kinds } = layout(g, curve);
    let vars = VarTable::new(names)?;
    let weights = kinds
        .iter()
        .map(|k| match (k, curve) {
            (VarKind::G { .. }, CurveType::Projective(_)) => 2,
            _ => 1,
        })
        .collect();
    let source = ArrangementSource { graph: g.clone(), curve, kinds };
    let (relations, differential) = build(&source)?;
    let mut p = DgaPresentation::new(vars, weights, relations, differential)?;
    p.source = Some(source);
    Ok(p)
}

fn var<T: Scalar>(i: usize) -> ExtPoly<T> {
    ExtPoly::var(i)
}

/// `∂g_C = Σ_j (−1)^{j−1} g_{e_1}⋯ĝ_{e_j}⋯g_{e_k}` for `C` in increasing edge order.
pub fn boundary<T: Scalar>(src: &ArrangementSource, c: EdgeSet) -> ExtPoly<T> {
    let gs: Vec<usize> = c.iter().map(|e| src.g(e)).collect();
    let mut out = ExtPoly::zero();
    for j in 0..gs.len() {
        let rest: Vec<usize> = gs.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &v)| v).collect();
        let term = ExtPoly::product_of_vars(&rest);
        out = if j % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

fn circuits(g: &OrderedGraph, cap: usize) -> Result<Vec<EdgeSet>> {
    g.circuits(cap)
}

/// Orlik–Solomon algebra: generators `g_e`, relations `∂g_C` over circuits.
pub fn build_orlik_solomon<T: Scalar>(g: &OrderedGraph, cap: usize) -> Result<DgaPresentation<T>> {
    assemble(g, CurveType::Rational, |src| {
        let rels = circuits(g, cap)?.into_iter().map(|c| boundary(src, c)).collect();
        Ok((rels, vec![ExtPoly::zero(); src.kinds.len()]))
    })
}

/// `ψ_e = x_{h(e)} − x_{t(e)}` (first class when `index` is one).
fn psi<T: Scalar>(src: &ArrangementSource, e: usize, index: u32) -> ExtPoly<T> {
    let edge = src.graph.edge(e);
    &var(src.x(index, edge.head)) - &var(src.x(index, edge.tail))
}

fn psi_y<T: Scalar>(src: &ArrangementSource, e: usize, index: u32) -> ExtPoly<T> {
    let edge = src.graph.edge(e);
    &var(src.y(index, edge.head)) - &var(src.y(index, edge.tail))
}

/// A circuit cut open at `e0`: the remaining edges in traversal order from
/// `t(e0)` to `h(e0)`, each flagged `true` when it points along the walk.
pub fn open_circuit(g: &OrderedGraph, c: EdgeSet, e0: usize) -> Vec<(usize, bool)> {
    let target = g.edge(e0).head;
    let mut at = g.edge(e0).tail;
    let mut left = c.without(e0);
    let mut path = Vec::new();
    while at != target {
        let e = left
            .iter()
            .find(|&e| g.edge(e).tail == at || g.edge(e).head == at)
            .expect("circuit is a cycle");
        let edge = g.edge(e);
        let forward = edge.tail == at;
        path.push((e, forward));
        at = if forward { edge.head } else { edge.tail };
        left = left.without(e);
    }
    path
}

/// The edge `e0` of a circuit for which the rest of the cycle is a directed
/// path from `t(e0)` to `h(e0)`, if there is one.
pub fn directed_chord(g: &OrderedGraph, c: EdgeSet) -> Option<usize> {
    c.iter().find(|&e0| open_circuit(g, c, e0).iter().all(|&(_, fwd)| fwd))
}

/// Sign of the correction sum in [`toric_cycle_relation`].
const TORIC_CORRECTION_SIGN: i64 = 1;

/// Cycle relation of the toric presentation for a circuit.
///
/// Cut the circuit at `e0` (the directed chord when it exists, otherwise the
/// largest edge) and walk `e_1, …, e_m` from `t(e0)` to `h(e0)`. With
/// `G_i = g_{e_i}`, `Ψ_i = ψ_{e_i}` for edges along the walk and
/// `G_i = g_{e_i} − ψ_{e_i}`, `Ψ_i = −ψ_{e_i}` for edges against it, the
/// relation is
///
/// `G_1⋯G_m + Σ_{I ⊊ [m]} (−1)^{|I|+m+s_I} G_{i_1}⋯G_{i_k} Ψ_{j_1}⋯Ψ_{j_{m−k−1}} g_{e0}`
///
/// with `J = [m] ∖ I`, the last index of `J` omitted from the `Ψ` product and
/// `s_I` the parity of the shuffle `(I, J)`.
///
/// Both signs are fixed by the logarithmic forms `g_e = dlog(1 − z_h/z_t)`,
/// `ψ_e = dlog(z_h/z_t)`: for a triangle the relation is the Arnold identity
/// for `1 − χ₁χ₂ = (1 − χ₁) + χ₁(1 − χ₂)`, whose pure `g` part is `±∂g_C`,
/// and reversing an edge inverts `χ`, turning `g` into `g − ψ`.
pub fn toric_cycle_relation<T: Scalar>(src: &ArrangementSource, c: EdgeSet) -> ExtPoly<T> {
    toric_cycle_relation_signed(src, c, TORIC_CORRECTION_SIGN)
}

fn toric_cycle_relation_signed<T: Scalar>(src: &ArrangementSource, c: EdgeSet, correction: i64) -> ExtPoly<T> {
    let g = &src.graph;
    let e0 = directed_chord(g, c).unwrap_or_else(|| c.iter().last().expect("nonempty"));
    let path = open_circuit(g, c, e0);
    let m = path.len();
    let big_g: Vec<ExtPoly<T>> = path
        .iter()
        .map(|&(e, fwd)| {
            let ge = var(src.g(e));
            if fwd {
                ge
            } else {
                &ge - &psi(src, e, 1)
            }
        })
        .collect();
    let big_psi: Vec<ExtPoly<T>> =
        path.iter().map(|&(e, fwd)| if fwd { psi(src, e, 1) } else { -&psi(src, e, 1) }).collect();
    let g0: ExtPoly<T> = var(src.g(e0));

    let mut rel = big_g.iter().fold(ExtPoly::one(), |acc, x| &acc * x);
    for mask in 0u64..(1u64 << m) - 1 {
        let i_set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let j_set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 0).collect();
        let inversions: usize = i_set.iter().map(|&i| j_set.iter().filter(|&&j| j < i).count()).sum();
        let exponent = i_set.len() + m + inversions;
        let sign = if exponent.is_multiple_of(2) { 1 } else { -1 } * correction;
        let mut term = ExtPoly::one();
        for &i in &i_set {
            term = &term * &big_g[i];
        }
        for &j in &j_set[..j_set.len() - 1] {
            term = &term * &big_psi[j];
        }
        term = &term * &g0;
        rel = &rel + &term.scale(&T::from_int(sign));
    }
    rel
}

/// Toric presentation: generators `x_v, g_e`; cycle relations per circuit
/// and `(x_{h(e)} − x_{t(e)}) g_e`; zero differential.
pub fn build_toric<T: Scalar>(g: &OrderedGraph, cap: usize) -> Result<DgaPresentation<T>> {
    assemble(g, CurveType::Toric, |src| {
        let mut rels: Vec<ExtPoly<T>> = circuits(g, cap)?.into_iter().map(|c| toric_cycle_relation(src, c)).collect();
        for e in 0..g.num_edges() {
            rels.push(&psi(src, e, 1) * &var(src.g(e)));
        }
        Ok((rels, vec![ExtPoly::zero(); src.kinds.len()]))
    })
}

/// Elliptic model: generators `x_v, y_v, g_e`; relations `∂g_C`,
/// `(x_{h(e)} − x_{t(e)}) g_e`, `(y_{h(e)} − y_{t(e)}) g_e`;
/// `dg_e = (x_{h(e)} − x_{t(e)})(y_{h(e)} − y_{t(e)})`.
pub fn build_elliptic<T: Scalar>(g: &OrderedGraph, cap: usize) -> Result<DgaPresentation<T>> {
    build_projective(g, 1, cap)
}

/// Model for a curve of genus `genus ≥ 1`: generators `x^i_v, y^i_v, g_e`,
/// relations `∂g_C`, `(x^i_{h(e)} − x^i_{t(e)}) g_e`,
/// `(y^i_{h(e)} − y^i_{t(e)}) g_e`, the point relations
/// `x^i_v y^j_v, x^i_v x^j_v, y^i_v y^j_v` (`i ≠ j`) and
/// `x^1_v y^1_v − x^j_v y^j_v`, and
/// `dg_e = x¹_h y¹_h + x¹_t y¹_t − Σ_i (x^i_h y^i_t + x^i_t y^i_h)`.
/// For genus one this is the elliptic model.
pub fn build_projective<T: Scalar>(g: &OrderedGraph, genus: u32, cap: usize) -> Result<DgaPresentation<T>> {
    if genus == 0 {
        return Err(Error::GenusZeroUnsupported);
    }
    assemble(g, CurveType::Projective(genus), |src| {
        let mut rels: Vec<ExtPoly<T>> = circuits(g, cap)?.into_iter().map(|c| boundary(src, c)).collect();
        for e in 0..g.num_edges() {
            let ge = var(src.g(e));
            for i in 1..=genus {
                rels.push(&psi(src, e, i) * &ge);
                rels.push(&psi_y(src, e, i) * &ge);
            }
        }
        for v in 0..g.num_vertices() {
            let x = |i| var::<T>(src.x(i, v));
            let y = |i| var::<T>(src.y(i, v));
            for i in 1..=genus {
                for j in 1..=genus {
                    if i != j {
                        rels.push(&x(i) * &y(j));
                    }
                    if i < j {
                        rels.push(&x(i) * &x(j));
                        rels.push(&y(i) * &y(j));
                    }
                }
            }
            for j in 2..=genus {
                rels.push(&(&x(1) * &y(1)) - &(&x(j) * &y(j)));
            }
        }
        let mut diff = vec![ExtPoly::zero(); src.kinds.len()];
        for e in 0..g.num_edges() {
            let edge = g.edge(e);
            let (h, t) = (edge.head, edge.tail);
            let xy = |i, a, b| &var::<T>(src.x(i, a)) * &var::<T>(src.y(i, b));
            let mut d = &xy(1, h, h) + &xy(1, t, t);
            for i in 1..=genus {
                d = &d - &(&xy(i, h, t) + &xy(i, t, h));
            }
            diff[src.g(e)] = d;
        }
        Ok((rels, diff))
    })
}

/// Dispatch on the curve type.
pub fn build<T: Scalar>(g: &OrderedGraph, curve: CurveType, cap: usize) -> Result<DgaPresentation<T>> {
    match curve {
        CurveType::Rational => build_orlik_solomon(g, cap),
        CurveType::Toric => build_toric(g, cap),
        CurveType::Projective(genus) => build_projective(g, genus, cap),
    }
}
