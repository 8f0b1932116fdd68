//! Acceptance criteria 1–9, one PASS/FAIL line each.
//!
//! Runs without the test harness so the report is always printed. The
//! process fails if a criterion fails for any reason other than the
//! documented unattainable clauses (criterion 2 on C5, criterion 8 on the
//! stated `d k_C`), whose observed values are checked exactly instead.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use arrangelab::duality::{dual_hilbert, dualize, verify_against_reference, QuadraticData};
use arrangelab::extalg::{ExtPoly, VarTable, DEFAULT_PAIR_CAP};
use arrangelab::graph::{corpus, OrderedGraph, DEFAULT_ENUMERATION_CAP as CAP};
use arrangelab::koszul::{certify_koszul, flat_decomposition, DEFAULT_TRUNCATION};
use arrangelab::liealg::{ce_stage, check_stage_quasi_iso, lcs_dims, lcs_quotient, CeStage, DEFAULT_DIM_CAP};
use arrangelab::models::{build, build_elliptic, build_projective, CurveType, DgaPresentation};
use arrangelab::series::TruncatedSeries;
use arrangelab::{Error, QLiePresentation, QPresentation, Rational};
use num_bigint::BigInt;

struct Outcome {
    pass: bool,
    /// Failure already recorded as unattainable; the process still succeeds
    /// when the observed value is the recorded one.
    documented: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { pass: true, documented: false, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Outcome { pass: false, documented: false, detail: detail.into() }
    }
}

fn chordal() -> Vec<(&'static str, OrderedGraph)> {
    vec![
        ("K3", corpus::complete(3)),
        ("K4", corpus::complete(4)),
        ("K5", corpus::complete(5)),
        ("P3", corpus::path(3)),
        ("P4", corpus::path(4)),
        ("P5", corpus::path(5)),
        ("F4", corpus::fan(4)),
    ]
}

fn all_graphs() -> Vec<(&'static str, OrderedGraph)> {
    let mut v = chordal();
    v.push(("C4", corpus::cycle(4)));
    v.push(("C5", corpus::cycle(5)));
    v
}

const CURVES: [CurveType; 4] = [CurveType::Rational, CurveType::Toric, CurveType::Projective(1), CurveType::Projective(2)];

fn lie(p: &QPresentation) -> arrangelab::Result<QLiePresentation> {
    let gb = p.groebner_basis(DEFAULT_PAIR_CAP)?.reduce_to_quadratic()?;
    dualize(&QuadraticData::from_groebner(p, &gb)?)?.to_lie_presentation()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// Edge sets that are cycles: every vertex has degree 0 or 2 and the edges
/// are connected.
fn is_circuit(g: &OrderedGraph, s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let edges: Vec<usize> = (0..g.num_edges()).filter(|&e| s >> e & 1 == 1).collect();
    let mut deg = vec![0; g.num_vertices()];
    for &e in &edges {
        deg[g.edge(e).head] += 1;
        deg[g.edge(e).tail] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let mut reached = 1u64 << edges[0];
    loop {
        let before = reached;
        for &e in &edges {
            for &f in &edges {
                let (a, b) = (g.edge(e), g.edge(f));
                let touch = a.head == b.head || a.head == b.tail || a.tail == b.head || a.tail == b.tail;
                if reached >> e & 1 == 1 && touch {
                    reached |= 1 << f;
                }
            }
        }
        if reached == before {
            return reached == s;
        }
    }
}

/// NBC set counts by size, by exhaustive search over edge subsets.
fn brute_force_nbc(g: &OrderedGraph) -> Vec<usize> {
    let m = g.num_edges();
    let circuits: Vec<u64> = (1u64..1 << m).filter(|&s| is_circuit(g, s)).collect();
    let broken: Vec<u64> = circuits.iter().map(|&c| c & !(1 << c.trailing_zeros())).collect();
    let mut counts = vec![0; m + 1];
    for s in 0u64..1 << m {
        let dependent = circuits.iter().any(|&c| c & s == c);
        let has_broken = broken.iter().any(|&b| b & s == b);
        if !dependent && !has_broken {
            counts[s.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, g, expected) in [("K3", corpus::complete(3), vec![1, 3, 2]), ("K4", corpus::complete(4), vec![1, 6, 11, 6])] {
        let p: QPresentation = build(&g, CurveType::Rational, CAP).expect("model");
        let gb = p.groebner_basis(DEFAULT_PAIR_CAP).expect("gb");
        let mut dims: Vec<usize> = gb.standard_monomials(p.num_vars()).iter().map(Vec::len).collect();
        while dims.len() > 1 && dims.last() == Some(&0) {
            dims.pop();
        }
        let nbc = brute_force_nbc(&g);
        ok &= dims == nbc && nbc == expected;
        notes.push(format!("{name} {dims:?} (NBC {nbc:?})"));
    }
    let t = start.elapsed();
    ok &= t < Duration::from_secs(1);
    let detail = format!("{} in {}", notes.join(", "), secs(t));
    if ok {
        Outcome::pass(detail)
    } else {
        Outcome::fail(detail)
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, g) in chordal() {
        for curve in CURVES {
            let p: QPresentation = build(&g, curve, CAP).expect("model");
            match p.groebner_basis(DEFAULT_PAIR_CAP).and_then(|gb| gb.reduce_to_quadratic()) {
                Ok(_) => count += 1,
                Err(e) => failures.push(format!("{name} {curve}: {e}")),
            }
        }
    }
    let mut cycles = Vec::new();
    let mut documented = Vec::new();
    for (name, g) in [("C4", corpus::cycle(4)), ("C5", corpus::cycle(5))] {
        let p: QPresentation = build(&g, CurveType::Rational, CAP).expect("model");
        let got = p.groebner_basis(DEFAULT_PAIR_CAP).and_then(|gb| gb.reduce_to_quadratic()).err();
        cycles.push(format!("{name} {got:?}"));
        match (name, got) {
            (_, Some(Error::NotQuadratic(3))) => {}
            // ∂g_C of a chordless 5-cycle has degree 4
            ("C5", Some(Error::NotQuadratic(4))) => documented.push("C5 gives NotQuadratic(4), not NotQuadratic(3)".to_string()),
            (_, other) => failures.push(format!("{name}: expected NotQuadratic(3), got {other:?}")),
        }
    }
    let t = start.elapsed();
    if t >= Duration::from_secs(30) {
        failures.push(format!("took {}", secs(t)));
    }
    let detail = format!("{count}/28 chordal models quadratic; {}; {}", cycles.join(", "), secs(t));
    match (failures.is_empty(), documented.is_empty()) {
        (true, true) => Outcome::pass(detail),
        (true, false) => Outcome { pass: false, documented: true, detail: format!("{detail}; unattainable clause: {}", documented.join("; ")) },
        _ => Outcome::fail(format!("{detail}; {}", failures.join("; "))),
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, g) in all_graphs() {
        let mut models: Vec<(String, QPresentation)> = vec![(format!("{name} elliptic"), build_elliptic(&g, CAP).expect("model"))];
        for genus in 1..=3 {
            models.push((format!("{name} genus {genus}"), build_projective(&g, genus, CAP).expect("model")));
        }
        for (label, p) in models {
            let r = p.groebner_basis(DEFAULT_PAIR_CAP).and_then(|gb| p.check_differential(&gb));
            checked += 1;
            if let Err(e) = r {
                failures.push(format!("{label}: {e}"));
            }
        }
    }
    let t = start.elapsed();
    if t >= Duration::from_secs(10) {
        failures.push(format!("took {}", secs(t)));
    }
    let detail = format!("{checked} models, d² = 0 and d(relations) ⊂ ideal; {}", secs(t));
    if failures.is_empty() {
        Outcome::pass(detail)
    } else {
        Outcome::fail(format!("{detail}; {}", failures.join("; ")))
    }
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in all_graphs() {
        for curve in [CurveType::Projective(1), CurveType::Toric] {
            let p: QPresentation = build(&g, curve, CAP).expect("model");
            let r = flat_decomposition(&g, curve, CAP, DEFAULT_PAIR_CAP).and_then(|dec| {
                let h = p.groebner_basis(DEFAULT_PAIR_CAP)?.hilbert_series(dec.total.truncation());
                Ok((h, dec.total))
            });
            checked += 1;
            match r {
                Ok((h, total)) if h == total => {}
                Ok((h, total)) => failures.push(format!("{name} {curve}: {h} vs {total}")),
                Err(e) => failures.push(format!("{name} {curve}: {e}")),
            }
        }
    }
    let detail = format!("{checked} graph/curve pairs, series equal through top degree");
    if failures.is_empty() {
        Outcome::pass(detail)
    } else {
        Outcome::fail(format!("{detail}; {}", failures.join("; ")))
    }
}

/// `Λ(x, y, g)/(xg, yg)`, `dg = xy`.
fn punctured_elliptic() -> QPresentation {
    let vars = VarTable::new(["x", "y", "g"]).expect("names");
    let v = |i| ExtPoly::<Rational>::var(i);
    DgaPresentation::new(vars, vec![1, 1, 2], vec![&v(0) * &v(2), &v(1) * &v(2)], vec![ExtPoly::zero(), ExtPoly::zero(), &v(0) * &v(1)])
        .expect("presentation")
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let p = punctured_elliptic();
    let qla = QuadraticData::from_presentation(&p).and_then(|q| dualize(&q));
    match qla {
        Ok(qla) => {
            let gens = qla.ideal_generators_text();
            // ab − ba − c, up to a nonzero scalar
            let good = gens.len() == 1 && (gens[0] == "b*a - a*b + c" || gens[0] == "a*b - b*a - c");
            ok &= good;
            notes.push(format!("punctured elliptic: T(a,b,c)/({})", gens.join(", ")));
        }
        Err(e) => {
            ok = false;
            notes.push(format!("punctured elliptic: {e}"));
        }
    }
    for (name, g) in [("K3", corpus::complete(3)), ("K4", corpus::complete(4))] {
        for genus in [1, 2] {
            let r = build_projective(&g, genus, CAP).and_then(|p| lie(&p)).and_then(|lp| verify_against_reference(&lp, &g, genus));
            match r {
                Ok(r) if r.equal() => notes.push(format!("{name} g{genus} span {}", r.joint_dim)),
                Ok(r) => {
                    ok = false;
                    notes.push(format!("{name} g{genus} {r:?}"));
                }
                Err(e) => {
                    ok = false;
                    notes.push(format!("{name} g{genus}: {e}"));
                }
            }
        }
    }
    if ok {
        Outcome::pass(notes.join("; "))
    } else {
        Outcome::fail(notes.join("; "))
    }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, g) in chordal() {
        for curve in CURVES {
            let p: QPresentation = build(&g, curve, CAP).expect("model");
            match certify_koszul(&p, DEFAULT_TRUNCATION, DEFAULT_PAIR_CAP) {
                Ok(c) => {
                    let product = &c.hilbert * &c.dual_hilbert.alternate();
                    if product.is_one() && c.truncation >= 10 {
                        count += 1;
                    } else {
                        failures.push(format!("{name} {curve}: product {product}"));
                    }
                }
                Err(e) => failures.push(format!("{name} {curve}: {e}")),
            }
        }
    }
    let detail = format!("{count} certified algebras, h_A(t)·h_A!(−t) = 1 through t^{DEFAULT_TRUNCATION}");
    if failures.is_empty() {
        Outcome::pass(detail)
    } else {
        Outcome::fail(format!("{detail}; {}", failures.join("; ")))
    }
}

/// `dim L_w` recovered from `h(t) = Π (1−t^w)^{−dim L_w}` one weight at a time.
fn dims_from_series(h: &TruncatedSeries, top: usize) -> Vec<i64> {
    let mut dims: Vec<i64> = Vec::new();
    for w in 1..=top {
        let known: Vec<usize> = dims.iter().map(|&d| d.max(0) as usize).collect();
        let partial = TruncatedSeries::pbw_product(&known, top);
        let diff: BigInt = h.coeff(w) - partial.coeff(w);
        dims.push(i64::try_from(diff).expect("small"));
    }
    dims
}

fn criterion_7() -> Outcome {
    let run = || -> arrangelab::Result<(Vec<usize>, Vec<i64>, bool)> {
        let g = corpus::complete(3);
        let p: QPresentation = build_projective(&g, 1, CAP)?;
        let gb = p.groebner_basis(DEFAULT_PAIR_CAP)?.reduce_to_quadratic()?;
        let qla = dualize(&QuadraticData::from_groebner(&p, &gb)?)?;
        let series = dual_hilbert(&qla, 6)?.weight_series(6);
        let dims = lcs_dims(&qla.to_lie_presentation()?, 6, DEFAULT_DIM_CAP)?;
        let inverted = dims_from_series(&series, 6);
        let equal = TruncatedSeries::pbw_product(&dims, 6) == series;
        Ok((dims, inverted, equal))
    };
    match run() {
        Ok((dims, inverted, equal)) => {
            let same = dims.iter().map(|&d| d as i64).collect::<Vec<_>>() == inverted;
            let detail = format!("K3 genus 1: dim L_w = {dims:?} (brackets), {inverted:?} (series inversion)");
            if equal && same {
                Outcome::pass(format!("{detail}, product matches h_A! through t^6"))
            } else {
                Outcome::fail(detail)
            }
        }
        Err(e) => Outcome::fail(e.to_string()),
    }
}

fn poly(ce: &CeStage<Rational>, terms: &[(i64, &[&str])]) -> ExtPoly<Rational> {
    let mut p = ExtPoly::zero();
    for (c, names) in terms {
        let vars: Vec<usize> = names.iter().map(|n| ce.vars().rank(n).unwrap_or_else(|| panic!("missing generator {n}"))).collect();
        p = &p + &ExtPoly::product_of_vars(&vars).scale(&Rational::from_integer((*c).into()));
    }
    p
}

/// `(u_h − u_t)·z` for vertex letter `u`.
fn diff_times(u: &str, h: &str, t: &str, z: &str) -> Vec<(i64, Vec<String>)> {
    vec![(1, vec![format!("{u}.{h}"), z.to_string()]), (-1, vec![format!("{u}.{t}"), z.to_string()])]
}

fn expect_d(ce: &CeStage<Rational>, name: &str, terms: Vec<(i64, Vec<String>)>, mismatches: &mut Vec<String>) {
    let borrowed: Vec<(i64, Vec<&str>)> = terms.iter().map(|(c, v)| (*c, v.iter().map(String::as_str).collect())).collect();
    let refs: Vec<(i64, &[&str])> = borrowed.iter().map(|(c, v)| (*c, v.as_slice())).collect();
    let expected = poly(ce, &refs);
    match ce.d(name) {
        Some(d) if *d == expected => {}
        Some(d) => mismatches.push(format!(
            "d {name} = {} (stated {})",
            arrangelab::extalg::to_text(d, ce.vars()),
            arrangelab::extalg::to_text(&expected, ce.vars())
        )),
        None => mismatches.push(format!("no generator {name}")),
    }
}

fn criterion_8() -> Outcome {
    let g = corpus::complete(3);
    let p: QPresentation = build_projective(&g, 1, CAP).expect("model");
    let lp = match lie(&p) {
        Ok(lp) => lp,
        Err(e) => return Outcome::fail(e.to_string()),
    };
    let edges = [("1", "2"), ("1", "3"), ("2", "3")];
    let mut hard = Vec::new();
    let mut kc = Vec::new();
    let mut counts = Vec::new();
    let mut previous: Option<CeStage<Rational>> = None;
    for i in 3..=5u32 {
        let ce = match lcs_quotient(&lp, i).and_then(|st| {
            st.check_jacobi()?;
            ce_stage(&st)
        }) {
            Ok(ce) => ce,
            Err(e) => return Outcome::fail(format!("stage {i}: {e}")),
        };
        counts.push(ce.vars().len());
        if let Err(e) = ce.check_d_squared() {
            hard.push(format!("stage {i}: {e}"));
        }
        match check_stage_quasi_iso(&p, &ce, i, 3) {
            Ok(r) if r.equal() => {}
            Ok(r) => hard.push(format!("stage {i} quasi-iso mismatch at {:?}", r.first_mismatch())),
            Err(e) => hard.push(format!("stage {i}: {e}")),
        }
        // d_i restricts to d_{i−1}
        if let Some(prev) = &previous {
            for (k, name) in prev.vars().names().iter().enumerate() {
                let same = ce.d(name).map(|d| arrangelab::extalg::to_text(d, ce.vars())) == Some(arrangelab::extalg::to_text(&prev.differential()[k], prev.vars()));
                if !same {
                    hard.push(format!("stage {i} changes d {name}"));
                }
            }
        }
        for (t, h) in edges {
            let ge = format!("g.{t}.{h}");
            if i == 3 {
                // (x_t − x_h)(y_t − y_h)
                let terms = vec![
                    (1, vec![format!("x.{t}"), format!("y.{t}")]),
                    (-1, vec![format!("x.{t}"), format!("y.{h}")]),
                    (-1, vec![format!("x.{h}"), format!("y.{t}")]),
                    (1, vec![format!("x.{h}"), format!("y.{h}")]),
                ];
                expect_d(&ce, &ge, terms, &mut hard);
            }
            if i == 4 {
                expect_d(&ce, &format!("k.{t}.{h}.a"), diff_times("x", h, t, &ge), &mut hard);
                expect_d(&ce, &format!("k.{t}.{h}.b"), diff_times("y", h, t, &ge), &mut hard);
            }
            if i == 5 {
                let (ka, kb) = (format!("k.{t}.{h}.a"), format!("k.{t}.{h}.b"));
                expect_d(&ce, &format!("k.{t}.{h}.aa"), diff_times("x", h, t, &ka), &mut hard);
                expect_d(&ce, &format!("k.{t}.{h}.bb"), diff_times("y", h, t, &kb), &mut hard);
                let mut ab = diff_times("x", h, t, &kb);
                ab.extend(diff_times("y", h, t, &ka));
                expect_d(&ce, &format!("k.{t}.{h}.ab"), ab, &mut hard);
            }
        }
        if i == 5 {
            let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            let terms = vec![(1, s(&["g.1.2", "g.1.3"])), (-1, s(&["g.1.2", "g.2.3"])), (1, s(&["g.1.3", "g.2.3"]))];
            expect_d(&ce, "k.1.2.3", terms, &mut kc);
        }
        previous = Some(ce);
    }
    if counts != [9, 15, 25] {
        hard.push(format!("generator counts {counts:?}, expected [9, 15, 25]"));
    }
    // The stated d k_C is g_{e1}g_{e2} − g_{e1}g_{e3} + g_{e2}g_{e3}; the
    // computed one has that quadratic-in-g part plus terms (x|y)·k_{e,a|b}.
    let kc_documented = kc.len() == 1 && {
        let ce = previous.as_ref().expect("stage 5");
        let d = ce.d("k.1.2.3").expect("k_C");
        let g_part: Vec<_> = d.terms().filter(|(m, _)| m.vars().all(|v| ce.vars().name(v).starts_with("g."))).collect();
        g_part.len() == 3 && d.len() == 15
    };
    let detail = format!("generators {counts:?}, names x.v y.v g.e k.e.a k.e.b k.e.aa k.e.ab k.e.bb k.1.2.3");
    if !hard.is_empty() {
        return Outcome::fail(format!("{detail}; {}", hard.join("; ")));
    }
    if kc.is_empty() {
        return Outcome::pass(format!("{detail}; d3, d4, d5 as stated; d² = 0; quasi-iso below weight i through degree 3"));
    }
    Outcome {
        pass: false,
        documented: kc_documented,
        detail: format!(
            "{detail}; d3, d4, d5 on k_e,* as stated, d² = 0, quasi-iso ok; unattainable clause: {} — extra terms are forced by d² = 0",
            kc.join("; ")
        ),
    }
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let cases: Vec<(&str, OrderedGraph, CurveType, u32)> = vec![
        ("K3", corpus::complete(3), CurveType::Projective(1), 5),
        ("K3", corpus::complete(3), CurveType::Rational, 5),
        ("P3", corpus::path(3), CurveType::Toric, 4),
        ("K4", corpus::complete(4), CurveType::Projective(1), 4),
        ("P3", corpus::path(3), CurveType::Projective(2), 3),
    ];
    for (name, g, curve, top) in cases {
        let lp = match build(&g, curve, CAP).and_then(|p: QPresentation| lie(&p)) {
            Ok(lp) => lp,
            Err(e) => {
                failures.push(format!("{name} {curve}: {e}"));
                continue;
            }
        };
        for i in 1..=top {
            match lcs_quotient(&lp, i).and_then(|st| ce_stage(&st)) {
                Ok(ce) => {
                    checked += 1;
                    if !ce.generated_in_degree_one() || !ce.is_minimal() {
                        failures.push(format!("{name} {curve} stage {i}"));
                    }
                }
                Err(e) => failures.push(format!("{name} {curve} stage {i}: {e}")),
            }
        }
    }
    let detail = format!("{checked} stages, all generators in degree 1, all differentials decomposable");
    if failures.is_empty() {
        Outcome::pass(detail)
    } else {
        Outcome::fail(format!("{detail}; {}", failures.join("; ")))
    }
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut ok = true;
    for (n, f) in criteria {
        let o = f();
        println!("criterion {n}: {} — {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        ok &= o.pass || o.documented;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failure");
        ExitCode::FAILURE
    }
}
