//! Text and JSON renderings of each subcommand's result. Both renderings walk
//! the same lists in the same order, so they always agree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use neural_polar::{
    betti_table, canonical_form, cm_report_neural, code_of_cover, is_cm_polar, krull_dimensions,
    minimal_polar_resolution, neural_ideal_gens, polarize_ideal, primary_decomposition_neural,
    primes_over_polar, rf_relations, selfcheck as checks, Code, Cover, FreeComplex, NeuronSet, PsmIdeal, Side,
    VariableSubset,
};
use serde_json::{json, Map, Value};

/// A rendered result. `ok` is false when the command ran but found a failure.
pub struct Report {
    pub text: String,
    schema: &'static str,
    body: Map<String, Value>,
    pub ok: bool,
}

impl Report {
    fn new(schema: &'static str, text: String, body: Value) -> Self {
        let Value::Object(body) = body else { unreachable!("report bodies are objects") };
        Report { text, schema, body, ok: true }
    }

    pub fn json(&self) -> String {
        let mut doc = self.body.clone();
        doc.insert("schema".into(), Value::String(format!("neural-polar/{}/v1", self.schema)));
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("values serialize");
        s.push('\n');
        s
    }
}

fn indices(s: NeuronSet) -> Vec<usize> {
    s.to_vec()
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| i.to_string() + "\n").collect()
}

fn psm_ideal(schema: &'static str, ideal: &PsmIdeal) -> Report {
    let gens = ideal.generators();
    let body = json!({
        "n": ideal.ring().neurons(),
        "generators": gens.iter().map(|g| json!({
            "text": g.to_string(),
            "sigma": indices(g.sigma()),
            "tau": indices(g.tau()),
        })).collect::<Vec<_>>(),
    });
    Report::new(schema, lines(gens), body)
}

pub fn canon(c: &Code) -> Report {
    psm_ideal("canon", &canonical_form(c))
}

pub fn gens(c: &Code) -> Report {
    psm_ideal("gens", &neural_ideal_gens(c))
}

pub fn decompose(c: &Code) -> Report {
    let primes = primary_decomposition_neural(c);
    let text = lines(primes.iter().map(|p| format!("{p}  interval {}", p.alpha())));
    let body = json!({
        "primes": primes.iter().map(|p| json!({
            "interval": p.alpha().to_string(),
            "generators": p.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Report::new("decompose", text, body)
}

pub fn polarize(c: &Code) -> Report {
    let ideal = polarize_ideal(c);
    let body = json!({
        "ring": ideal.ring().to_string(),
        "generators": ideal.generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    });
    Report::new("polarize", lines(ideal.generators()), body)
}

/// The first word of the interval `V_W` missing from the code projected away
/// from `b(W)`, written over `[n]` with `-` at the dropped coordinates.
fn missing_word(w: &VariableSubset, c: &Code) -> Option<String> {
    let n = c.n();
    let kept = NeuronSet::full(n).difference(&w.b_w());
    let projected: BTreeSet<u32> = c.words().map(|cw| cw.support().intersection(&kept).bits()).collect();
    let free = w.n_w().to_vec();
    (0u32..1 << free.len())
        .map(|choice| {
            free.iter()
                .enumerate()
                .filter(|&(k, _)| choice & (1 << k) != 0)
                .fold(w.y_w(), |s, (_, &i)| s.with(i))
        })
        .find(|s| !projected.contains(&s.bits()))
        .map(|s| {
            (1..=n)
                .map(|i| if w.b_w().contains(i) { '-' } else if s.contains(i) { '1' } else { '0' })
                .collect()
        })
}

pub fn polar_primes(c: &Code, witness: bool) -> Report {
    let primes = primes_over_polar(c, true);
    let mut text = String::new();
    let mut entries = Vec::new();
    for w in &primes {
        let names = w.var_names();
        writeln!(text, "{w}").unwrap();
        let mut entry = json!({
            "vars": names,
            "xW": indices(w.x_w()),
            "yW": indices(w.y_w()),
            "bW": indices(w.b_w()),
            "nW": indices(w.n_w()),
            "interval": w.interval_string(),
        });
        if witness {
            writeln!(
                text,
                "  x(W) = {}  y(W) = {}  b(W) = {}  n(W) = {}",
                w.x_w(),
                w.y_w(),
                w.b_w(),
                w.n_w()
            )
            .unwrap();
            let deleted = if w.b_w().is_empty() { String::new() } else { format!(" with coordinates {} deleted", w.b_w()) };
            writeln!(text, "  interval {} lies in the code{deleted}", w.interval_string()).unwrap();
            let mut drops = Vec::new();
            for (name, var) in names.iter().zip(var_indices(w.vars())) {
                let smaller = VariableSubset::new(w.n(), w.vars() & !(1u64 << var)).expect("same size");
                let missing = missing_word(&smaller, c).expect("a minimal prime has no smaller interval");
                writeln!(
                    text,
                    "  without {name}: interval {} misses {missing}",
                    smaller.interval_string()
                )
                .unwrap();
                drops.push(json!({
                    "var": name,
                    "interval": smaller.interval_string(),
                    "missing": missing,
                }));
            }
            entry["witness"] = Value::Array(drops);
        }
        entries.push(entry);
    }
    Report::new("polar-primes", text, json!({ "primes": entries }))
}

fn var_indices(vars: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |v| vars & (1u64 << v) != 0)
}

/// Largest matrix, in entries, that is rendered densely.
pub const DENSE_ENTRY_LIMIT: usize = 1 << 20;

pub fn resolution(schema: &'static str, p: &FreeComplex) -> Result<Report, String> {
    for (k, d) in p.differentials().iter().enumerate() {
        let entries = d.rows() * d.cols();
        if entries > DENSE_ENTRY_LIMIT {
            return Err(format!(
                "d{} is {} x {} ({entries} entries), above the dense output limit of {DENSE_ENTRY_LIMIT}",
                k + 1,
                d.rows(),
                d.cols()
            ));
        }
    }
    let ranks: Vec<String> = p.ranks().iter().map(|r| r.to_string()).collect();
    let mut text = format!("ring {}\nranks {}\n", p.ring(), ranks.join(" "));
    let mut differentials = Vec::new();
    for (k, d) in p.differentials().iter().enumerate() {
        let dense: Vec<Vec<String>> =
            d.to_dense().iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
        writeln!(text, "d{}: {} x {}", k + 1, d.rows(), d.cols()).unwrap();
        for row in &dense {
            writeln!(text, "  [ {} ]", row.join(", ")).unwrap();
        }
        differentials.push(dense);
    }
    let mut body = json!({
        "ring": p.ring().to_string(),
        "ranks": p.ranks(),
        "differentials": differentials,
    });
    if let Some(labels) = p.labels() {
        let basis: Vec<Vec<String>> = labels.iter().map(|l| l.iter().map(|b| b.to_string()).collect()).collect();
        for (k, level) in basis.iter().enumerate() {
            writeln!(text, "F{k}: {}", level.join("; ")).unwrap();
        }
        body["basis"] = json!(basis);
    }
    Ok(Report::new(schema, text, body))
}

pub fn betti(c: &Code) -> neural_polar::Result<Report> {
    let table = betti_table(&minimal_polar_resolution(c)?);
    let mut text = format!("ranks {table}\n");
    for (k, level) in table.multigraded.iter().flatten().enumerate() {
        let degrees: Vec<String> = level
            .iter()
            .map(|(m, count)| if *count == 1 { m.to_string() } else { format!("{m} ({count})") })
            .collect();
        writeln!(text, "F{k}: {}", degrees.join(", ")).unwrap();
    }
    Ok(Report::new("betti", text, json!({ "ranks": table.ranks })))
}

pub fn polar_complex_report(c: &Code) -> Report {
    let complex = neural_polar::polar_complex(c);
    let facets = complex.facet_names();
    let mut text = format!("vertices {}\n", complex.vertices().join(" "));
    for f in &facets {
        writeln!(text, "{{{}}}", f.join(", ")).unwrap();
    }
    Report::new("polar-complex", text, json!({ "vertices": complex.vertices(), "facets": facets }))
}

pub fn cm(c: &Code) -> Report {
    let neural = krull_dimensions(c, Side::Neural);
    let polar = krull_dimensions(c, Side::Polar);
    let polar_cm = is_cm_polar(c);
    let verdict = cm_report_neural(c);
    let show = |s: &BTreeSet<usize>| format!("{s:?}");
    let text = format!(
        "neural dimensions {}\npolar dimensions {}\npolar cohen-macaulay {polar_cm}\nneural verdict {verdict}\n",
        show(&neural),
        show(&polar)
    );
    let body = json!({
        "neural_dimensions": neural,
        "polar_dimensions": polar,
        "polar_cm": polar_cm,
        "neural_verdict": verdict.to_string(),
    });
    Report::new("cm", text, body)
}

pub fn from_cover(cov: &Cover) -> Report {
    let code = code_of_cover(cov);
    let words: Vec<String> = code.words().map(|w| w.format(code.n())).collect();
    Report::new("from-cover", code.to_text(), json!({ "n": code.n(), "words": words }))
}

pub fn rf(cov: &Cover) -> Report {
    let relations = rf_relations(cov);
    let text = lines(relations.iter().map(|r| {
        let status = if r.is_consistent() { "" } else { "  (inconsistent)" };
        format!("{r}{status}")
    }));
    let body = json!({
        "relations": relations.iter().map(|r| json!({
            "text": r.to_string(),
            "sigma": indices(r.sigma),
            "tau": indices(r.tau),
            "holds": r.holds,
            "minimal": r.minimal,
        })).collect::<Vec<_>>(),
    });
    let mut report = Report::new("rf", text, body);
    report.ok = relations.iter().all(|r| r.is_consistent());
    report
}

pub fn selfcheck(c: &Code) -> neural_polar::Result<Report> {
    let results = checks::run(c)?;
    let passed = results.iter().all(|r| r.passed);
    let mut text = lines(&results);
    writeln!(text, "{}", if passed { "all checks passed" } else { "some checks failed" }).unwrap();
    let body = json!({
        "passed": passed,
        "checks": results.iter().map(|r| json!({
            "name": r.name,
            "passed": r.passed,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
    });
    let mut report = Report::new("selfcheck", text, body);
    report.ok = passed;
    Ok(report)
}
