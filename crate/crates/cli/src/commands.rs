use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use linturan::certify::{
    find_berge_cycle, find_linear_cycle_with_budget, find_linear_path_with_budget, find_sunflower_with,
    independence_number_with_budget, linear_girth, Certificate, IndependenceMode,
};
use linturan::construct::{
    ap3_free_max_with_budget, exponent_fit, random_packing_deletion, rs_construction, ApMode, ConstructionReport,
    PackingOptions,
};
use linturan::extremal::{table_csv, turan_table, ExtremalReport};
use linturan::hypercore::{default_coloring, io};
use linturan::lemma::{
    cross_cut, expand_level_even, expand_level_odd, find_spider, joining_path, matching_from_cover, rainbow_path,
    vertex_cover, EvenParams, ExpansionOutcome, LeveledQuasiTree, OddParams,
};
use linturan::ramsey::{independent_set_pipeline, ramsey_csv, ramsey_exact_small, RamseyReport};
use linturan::{rng, EdgeId, Hypergraph, LinearHypergraph, Vertex, DEFAULT_BUDGET};

use crate::config::Format;
use crate::{CliError, Ctx};

fn three() -> usize {
    3
}

fn read_graph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let g = if path.extension().is_some_and(|e| e == "json") { io::from_json(&text) } else { io::from_text(&text) };
    g.map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn linear(g: Hypergraph) -> Result<LinearHypergraph, CliError> {
    LinearHypergraph::new(g).map_err(|e| CliError::Config(format!("input: {e}")))
}

fn need_seed(seed: Option<u64>, what: &str) -> Result<u64, CliError> {
    seed.ok_or_else(|| CliError::Config(format!("{what} is randomized and needs --seed")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CertKind {
    Cycle,
    Path,
    Berge,
    Sunflower,
    Girth,
    Independence,
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyArgs {
    /// Edge-list file (`n r` header, one edge per line) or JSON graph.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "cycle")]
    #[serde(default = "default_cert")]
    pub kind: CertKind,
    /// Cycle or path length; the largest length tried for `girth`.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub ell: usize,
    /// Sunflower petal count.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub p: usize,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn default_cert() -> CertKind {
    CertKind::Cycle
}

pub fn certify(ctx: &Ctx, a: CertifyArgs) -> Result<String, CliError> {
    let g = read_graph(&a.input)?;
    let budget = a.budget.unwrap_or(DEFAULT_BUDGET);
    let kind = format!("{:?}", a.kind).to_lowercase();
    let (found, summary): (Value, String) = match a.kind {
        CertKind::Independence => {
            let s = independence_number_with_budget(&g, IndependenceMode::Exact, budget)?;
            if !g.is_independent(&s.witness) {
                return Err(linturan::Error::Invariant("witness is not independent".into()).into());
            }
            (json!({"size": s.size, "witness": s.witness, "exact": s.exact}), format!("alpha = {}", s.size))
        }
        CertKind::Girth => {
            let l = linear_girth(&g, a.ell)?;
            (json!({"girth": l}), l.map_or("NONE".to_string(), |l| format!("linear girth {l}")))
        }
        _ => {
            let cert = match a.kind {
                CertKind::Cycle => find_linear_cycle_with_budget(&g, a.ell, budget)?.map(Certificate::Cycle),
                CertKind::Path => find_linear_path_with_budget(&g, a.ell, None, None, &[], budget)?.map(Certificate::Path),
                CertKind::Berge => find_berge_cycle(&g, a.ell, budget)?.map(Certificate::Berge),
                CertKind::Sunflower => find_sunflower_with(&g, a.p, 0, budget)?.map(Certificate::Sunflower),
                _ => unreachable!(),
            };
            match cert {
                Some(c) => {
                    c.validate(&g).map_err(linturan::Error::Invariant)?;
                    let j = serde_json::to_value(c.to_json()).expect("certificate json");
                    let line = serde_json::to_string(&j).expect("certificate json");
                    (j, line)
                }
                None => (Value::Null, "NONE".to_string()),
            }
        }
    };
    let report = json!({"schema": 1, "kind": kind, "ell": a.ell, "certificate": found});
    ctx.write(&format!("certify_{kind}.json"), &pretty(&report))?;
    Ok(summary)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum LemmaName {
    MatchingFromCover,
    VertexCover,
    CrossCut,
    RainbowPath,
    JoiningPath,
    FindSpider,
    ExpandEven,
    ExpandOdd,
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LemmaArgs {
    #[arg(value_enum)]
    pub name: LemmaName,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Root of the quasi-tree, or start of the rainbow path.
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    pub root: Vertex,
    /// Height of the greedy quasi-tree grown from the root.
    #[arg(long)]
    pub height: Option<usize>,
    /// Half the cycle length for the expansion steps.
    #[arg(long, default_value_t = 2)]
    #[serde(default = "two")]
    pub m: usize,
    /// Rainbow path length.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub ell: usize,
    /// Spider legs.
    #[arg(long, default_value_t = 1)]
    #[serde(default = "one")]
    pub p: usize,
    /// Endpoints for the joining path (default: first two vertices of the last level).
    #[arg(long, num_args = 2)]
    pub pair: Option<Vec<Vertex>>,
    /// Vertex set for the cross-cut (default: all vertices).
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<Vertex>>,
    #[arg(long, default_value_t = 200)]
    #[serde(default = "tries")]
    pub max_tries: u32,
    #[arg(long)]
    pub budget: Option<u64>,
}

fn one() -> usize {
    1
}

fn two() -> usize {
    2
}

fn tries() -> u32 {
    200
}

/// Edges with exactly one vertex in the structure, that vertex being on the last level.
fn supply(g: &Hypergraph, q: &LeveledQuasiTree) -> Vec<EdgeId> {
    let inside = q.vertices(g);
    let last: BTreeSet<Vertex> = q.last_level().iter().copied().collect();
    (0..g.num_edges())
        .filter(|&id| {
            let hit: Vec<Vertex> = g.edge(id).iter().copied().filter(|v| inside.contains(v)).collect();
            hit.len() == 1 && last.contains(&hit[0])
        })
        .collect()
}

fn outcome_json(g: &Hypergraph, level: &[Vertex], p: usize, out: &ExpansionOutcome, len: usize) -> (String, Value, bool) {
    match out {
        ExpansionOutcome::Step(s) => (
            "step".into(),
            json!({"edges": s.edges, "cut": s.cut, "gamma": s.gamma, "regime": s.regime, "trace": s.trace}),
            s.validate(g, level, p).is_ok(),
        ),
        ExpansionOutcome::Cycle(c) => (
            "cycle".into(),
            serde_json::to_value(Certificate::Cycle(c.clone()).to_json()).expect("json"),
            c.validate(g).is_ok() && c.len() == len,
        ),
    }
}

pub fn lemma(ctx: &Ctx, a: LemmaArgs) -> Result<String, CliError> {
    let g = read_graph(&a.input)?;
    let name = serde_json::to_value(a.name).expect("name").as_str().expect("string").to_string();
    let tree = |default_h: usize| LeveledQuasiTree::greedy(&g, a.root, a.height.unwrap_or(default_h));
    let (result, body, ok): (String, Value, bool) = match a.name {
        LemmaName::MatchingFromCover => {
            let mc = matching_from_cover(&g)?;
            let k = g.uniformity().unwrap_or(2);
            let ok = g.is_matching(&mc.matching) && k * mc.matching.len() >= mc.cover;
            ("matching".into(), json!({"matching": mc.matching, "cover": mc.cover, "coverExact": mc.cover_exact}), ok)
        }
        LemmaName::VertexCover => {
            let c = vertex_cover(&g);
            let set: BTreeSet<Vertex> = c.vertices.iter().copied().collect();
            let ok = g.edges().iter().all(|e| e.iter().any(|v| set.contains(v)));
            ("cover".into(), json!({"vertices": c.vertices, "exact": c.exact}), ok)
        }
        LemmaName::CrossCut => {
            let seed = need_seed(a.seed, "cross_cut")?;
            let s: Vec<Vertex> = a.set.clone().unwrap_or_else(|| (0..g.n() as Vertex).collect());
            let cc = cross_cut(&g, &s, seed, a.max_tries)?;
            let cut: BTreeSet<Vertex> = cc.cut.iter().copied().collect();
            let k = g.uniformity().unwrap_or(2);
            let ok = cc.edges.iter().all(|&id| g.edge(id).iter().filter(|v| cut.contains(v)).count() == 1)
                && (cc.edges.len() << k) >= k * g.num_edges();
            ("crossCut".into(), json!({"edges": cc.edges, "cut": cc.cut, "tries": cc.tries}), ok)
        }
        LemmaName::RainbowPath => {
            let lin = linear(g.clone())?;
            let b = g.shadow2();
            let pairs: Vec<(Vertex, Vertex)> = b.edges().iter().map(|e| (e[0], e[1])).collect();
            let phi = default_coloring(&lin, &pairs)?;
            let p = rainbow_path(&b, &phi, a.root, a.ell, &BTreeSet::new())?;
            let ok = p.validate(&b).is_ok() && p.len() == a.ell;
            let j = serde_json::to_value(Certificate::Path(p).to_json()).expect("json");
            ("path".into(), j, ok)
        }
        LemmaName::JoiningPath => {
            let q = tree(2)?;
            let i = q.height();
            let (x, y) = match &a.pair {
                Some(v) => (v[0], v[1]),
                None if q.last_level().len() >= 2 => (q.last_level()[0], q.last_level()[1]),
                None => return Err(CliError::Config("last level has fewer than two vertices".into())),
            };
            let p = joining_path(&q, &g, x, y)?;
            let ok = p.validate(&g).is_ok() && p.len() % 2 == 0 && p.len() <= 2 * i;
            let j = serde_json::to_value(Certificate::Path(p).to_json()).expect("json");
            ("path".into(), j, ok)
        }
        LemmaName::FindSpider => {
            let q = tree(1)?;
            let res = find_spider(&q, &g, q.last_level(), a.p)?;
            let ok = res.spider.validate(&g, &q).is_ok() && res.spider.legs.len() >= a.p;
            let legs: Vec<Value> =
                res.spider.legs.iter().map(|l| serde_json::to_value(Certificate::Path(l.clone()).to_json()).expect("json")).collect();
            ("spider".into(), json!({"center": res.spider.center, "legs": legs, "share": res.share}), ok)
        }
        LemmaName::ExpandEven => {
            let seed = need_seed(a.seed, "expand_even")?;
            let lin = linear(g.clone())?;
            let q = tree(0)?;
            let e = supply(&g, &q);
            let params = EvenParams { max_tries: a.max_tries, ..EvenParams::new(a.m, seed) };
            let out = expand_level_even(&lin, &q, &e, &params)?;
            outcome_json(&g, q.last_level(), 1, &out, 2 * a.m)
        }
        LemmaName::ExpandOdd => {
            let seed = need_seed(a.seed, "expand_odd")?;
            let lin = linear(g.clone())?;
            let q = tree(0)?;
            let e = supply(&g, &q);
            let r = g.uniformity().unwrap_or(0);
            let mut params = OddParams::new(r, a.m, seed);
            params.max_tries = a.max_tries;
            let p = params.p;
            let out = expand_level_odd(&lin, &q, &e, &params)?;
            outcome_json(&g, q.last_level(), p, &out, 2 * a.m + 1)
        }
    };
    let report = json!({"schema": 1, "lemma": name, "seed": a.seed, "result": result, "certificateOrStep": body, "checksPassed": ok});
    ctx.write(&format!("lemma_{name}.json"), &pretty(&report))?;
    if !ok {
        return Err(linturan::Error::Invariant(format!("{name} output failed its checks")).into());
    }
    Ok(format!("{name}: {result}, checks passed"))
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    /// Tabulate `n..=n_max`.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub r: usize,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub ell: usize,
    #[arg(long)]
    pub budget: Option<u64>,
    /// Accepted for uniformity; the search is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

fn extremal_json(rows: &[ExtremalReport], timing: bool) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({"n": r.n, "r": r.r, "ell": r.ell, "lo": r.lo, "hi": r.hi, "exact": r.exact, "nodes": r.nodes,
                   "seconds": if timing { r.seconds } else { 0.0 }})
        })
        .collect();
    json!({"schema": 1, "rows": rows})
}

pub fn extremal(ctx: &Ctx, a: ExtremalArgs) -> Result<String, CliError> {
    let hi = a.n_max.unwrap_or(a.n);
    if hi < a.n {
        return Err(CliError::Config("n_max is below n".into()));
    }
    let rows = turan_table(a.n..=hi, a.r, a.ell, a.budget.unwrap_or(DEFAULT_BUDGET))?;
    for row in &rows {
        ctx.write(&format!("extremal/witness_n{}_r{}_l{}.txt", row.n, a.r, a.ell), &io::to_text(&row.witness))?;
    }
    let stem = format!("extremal_r{}_l{}", a.r, a.ell);
    match ctx.format {
        Format::Csv => ctx.write(&format!("{stem}.csv"), &table_csv(&rows, ctx.timing))?,
        Format::Json => ctx.write(&format!("{stem}.json"), &pretty(&extremal_json(&rows, ctx.timing)))?,
    };
    let last = rows.last().expect("nonempty range");
    let exact = rows.iter().all(|r| r.exact);
    if !exact {
        let budget = a.budget.unwrap_or(DEFAULT_BUDGET);
        return Err(linturan::Error::BudgetExceeded { budget }.into());
    }
    Ok(format!(
        "ex_L(n, C^{}_{}) for n = {}..={}: last {}, {} rows",
        a.r,
        a.ell,
        a.n,
        hi,
        last.lo,
        rows.len()
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ConstructKind {
    Rs,
    Packing,
    Ap,
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub kind: ConstructKind,
    /// Vertex count for `packing`; interval length `N` for `rs` and `ap`.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub r: usize,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub ell: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// For `ap`: exact (N <= 40) or the base-3 greedy set.
    #[arg(long)]
    pub exact: Option<bool>,
    #[arg(long)]
    pub budget: Option<u64>,
}

fn write_construction(ctx: &Ctx, stem: &str, rep: &ConstructionReport) -> Result<(), CliError> {
    ctx.write(&format!("{stem}.txt"), &io::to_text(&rep.graph))?;
    ctx.write(&format!("{stem}.json"), &pretty(&rep.to_json()))?;
    Ok(())
}

pub fn construct(ctx: &Ctx, a: ConstructArgs) -> Result<String, CliError> {
    match a.kind {
        ConstructKind::Rs => {
            let rep = rs_construction(a.n)?;
            write_construction(ctx, &format!("rs_N{}", a.n), &rep)?;
            Ok(format!("rs construction N = {}: {} edges on {} vertices, linear triangle-free", a.n, rep.edges, rep.graph.n()))
        }
        ConstructKind::Packing => {
            let seed = need_seed(a.seed, "packing")?;
            let rep = random_packing_deletion(a.n, a.r, a.ell, seed, &PackingOptions::default())?;
            write_construction(ctx, &format!("packing_n{}_r{}_l{}_s{}", a.n, a.r, a.ell, seed), &rep)?;
            Ok(format!("packing n = {}, r = {}, l = {}: {} edges, C_{} free", a.n, a.r, a.ell, rep.edges, a.ell))
        }
        ConstructKind::Ap => {
            let exact = a.exact.unwrap_or(a.n <= 40);
            let mode = if exact { ApMode::Exact } else { ApMode::Greedy };
            let set = ap3_free_max_with_budget(a.n, mode, a.budget.unwrap_or(DEFAULT_BUDGET))?;
            set.validate().map_err(linturan::Error::Invariant)?;
            let j = json!({"schema": 1, "n": a.n, "size": set.len(), "exact": exact, "elements": set.elements});
            ctx.write(&format!("ap_n{}.json", a.n), &pretty(&j))?;
            Ok(format!("3-AP-free subset of [1, {}] of size {}{}", a.n, set.len(), if exact { " (maximum)" } else { "" }))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum RamseyMode {
    Pipeline,
    Exact,
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamseyArgs {
    #[arg(long, value_enum)]
    pub mode: RamseyMode,
    /// Host for the pipeline.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub r: usize,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub ell: usize,
    /// Clique size for the exact search.
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub t: usize,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn ramsey_json(rep: &RamseyReport) -> Value {
    json!({"schema": 1, "r": rep.r, "ell": rep.ell, "t": rep.t, "lo": rep.lo, "hi": rep.hi, "exact": rep.exact, "nodes": rep.nodes})
}

pub fn ramsey(ctx: &Ctx, a: RamseyArgs) -> Result<String, CliError> {
    match a.mode {
        RamseyMode::Pipeline => {
            let path = a.input.as_ref().ok_or_else(|| CliError::Config("pipeline needs --input".into()))?;
            let g = read_graph(path)?;
            let trace = independent_set_pipeline(&g, a.ell)?;
            let mut v = serde_json::to_value(&trace).expect("trace json");
            v["schema"] = json!(1);
            ctx.write(&format!("pipeline_l{}.json", a.ell), &pretty(&v))?;
            Ok(format!(
                "independent set of size {} in a host on {} vertices with {} edges",
                trace.independent_set.len(),
                g.n(),
                g.num_edges()
            ))
        }
        RamseyMode::Exact => {
            let rep = ramsey_exact_small(a.r, a.ell, a.t, a.budget.unwrap_or(DEFAULT_BUDGET))?;
            let stem = format!("ramsey_r{}_l{}_t{}", a.r, a.ell, a.t);
            match ctx.format {
                Format::Csv => ctx.write(&format!("{stem}.csv"), &ramsey_csv(std::slice::from_ref(&rep)))?,
                Format::Json => ctx.write(&format!("{stem}.json"), &pretty(&ramsey_json(&rep)))?,
            };
            ctx.write(&format!("{stem}_witness.txt"), &io::to_text(&rep.witness))?;
            match rep.value() {
                Some(v) => Ok(format!("R(C^{}_{}, K^{}_{}) = {v}", a.r, a.ell, a.r, a.t)),
                None => {
                    eprintln!("R(C^{}_{}, K^{}_{}) >= {}", a.r, a.ell, a.r, a.t, rep.lo);
                    Err(linturan::Error::BudgetExceeded { budget: a.budget.unwrap_or(DEFAULT_BUDGET) }.into())
                }
            }
        }
    }
}

#[derive(Args, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentArgs {
    #[arg(long, value_delimiter = ',', default_value = "40,60,90,135")]
    #[serde(default = "default_ns")]
    pub ns: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    #[serde(default = "three")]
    pub r: usize,
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    #[serde(default = "default_ells")]
    pub ells: Vec<usize>,
    /// Seeds per grid cell.
    #[arg(long, default_value_t = 5)]
    #[serde(default = "five")]
    pub seeds: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub budget: Option<u64>,
}

fn default_ns() -> Vec<usize> {
    vec![40, 60, 90, 135]
}

fn default_ells() -> Vec<usize> {
    vec![3, 4]
}

fn five() -> usize {
    5
}

struct Cell {
    ell: usize,
    n: usize,
    index: usize,
    seed: u64,
    report: ConstructionReport,
}

pub fn experiment(ctx: &Ctx, a: ExperimentArgs) -> Result<String, CliError> {
    let master = need_seed(a.seed, "experiment")?;
    let distinct: BTreeSet<usize> = a.ns.iter().copied().collect();
    if distinct.len() < 3 || a.ells.is_empty() || a.seeds == 0 {
        return Err(CliError::Config("the grid needs at least three distinct n, one l and one seed".into()));
    }
    let budget = a.budget.unwrap_or(u64::MAX);
    let grid: Vec<(usize, usize, usize)> = a
        .ells
        .iter()
        .flat_map(|&l| distinct.iter().flat_map(move |&n| (0..a.seeds).map(move |i| (l, n, i))))
        .collect();
    let cells: Vec<Cell> = grid
        .par_iter()
        .map(|&(ell, n, index)| -> Result<Cell, CliError> {
            let seed = rng::derive_seed(master, &format!("experiment.l{ell}.n{n}.s{index}"));
            let report = random_packing_deletion(n, a.r, ell, seed, &PackingOptions::default())?;
            if !report.graph.is_linear() || find_linear_cycle_with_budget(&report.graph, ell, budget)?.is_some() {
                return Err(linturan::Error::Invariant(format!("cell n = {n}, l = {ell}, seed {index}: output has a {ell}-cycle")).into());
            }
            Ok(Cell { ell, n, index, seed, report })
        })
        .collect::<Result<_, _>>()?;
    let mut rows = String::from("r,ell,n,cell,seed,packing_edges,kept_edges,edges\n");
    let mut fits = String::from("r,ell,points,slope,target\n");
    let mut fit_json = Vec::new();
    for c in &cells {
        ctx.write(&format!("experiment/cells/packing_n{}_r{}_l{}_s{}.txt", c.n, a.r, c.ell, c.index), &io::to_text(&c.report.graph))?;
        let s = c.report.sampling.as_ref();
        rows.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            a.r,
            c.ell,
            c.n,
            c.index,
            c.seed,
            s.map_or(0, |s| s.packing_edges),
            s.map_or(0, |s| s.kept_edges),
            c.report.edges
        ));
    }
    let mut summary = Vec::new();
    for &ell in &a.ells {
        let points: Vec<(f64, f64)> = distinct
            .iter()
            .map(|&n| {
                let e: Vec<f64> = cells.iter().filter(|c| c.ell == ell && c.n == n).map(|c| c.report.edges as f64).collect();
                (n as f64, e.iter().sum::<f64>() / e.len() as f64)
            })
            .collect();
        let slope = exponent_fit(&points)?;
        let target = 1.0 + 1.0 / (ell as f64 - 1.0);
        fits.push_str(&format!("{},{},{},{:.6},{:.6}\n", a.r, ell, points.len(), slope, target));
        fit_json.push(json!({"r": a.r, "ell": ell, "points": points, "slope": slope, "target": target}));
        summary.push(format!("l = {ell}: slope {slope:.3} (target {target:.3})"));
    }
    let stem = format!("experiment/experiment_r{}", a.r);
    match ctx.format {
        Format::Csv => {
            ctx.write(&format!("{stem}.csv"), &rows)?;
            ctx.write(&format!("{stem}_fit.csv"), &fits)?;
        }
        Format::Json => {
            ctx.write(&format!("{stem}_fit.json"), &pretty(&json!({"schema": 1, "fits": fit_json})))?;
            ctx.write(&format!("{stem}.csv"), &rows)?;
        }
    }
    Ok(format!("{} cells re-verified; {}", cells.len(), summary.join("; ")))
}

