//! Acceptance run: one PASS/FAIL line per criterion, indented lines per
//! check. Exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use convexdim::closure::fixtures::nonatomic_bridgeless_geometry;
use convexdim::closure::{
    is_anti_exchange, random_geometry, validate_alignment, ClosureOperator, ConvexGeometry,
    Copoint, ElemSet, GroundSet,
};
use convexdim::dimension::{
    analyze, analyze_points, brute_force_dimension, critical_pairs_definitional,
    critical_pairs_from_copoints, order_dimension, same_pairs, Analysis, AnalysisOptions,
    LawOutcome, LawStatus, Poset, LAW_ATOMIC, LAW_BLOCKS, LAW_COMPOSITION, LAW_GRAPH,
    LAW_LEAF_CONTAINMENT, LAW_LEAF_HYPEREDGES, LAW_SINGLETONS, LAW_SPLIT_CONTAINMENT,
};
use convexdim::geometry::fixtures::three_trees;
use convexdim::geometry::{
    compose, es, format_rational, random_general_position, xes, PlanarClosure, PointSet,
};
use convexdim::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

type Run = fn() -> Criterion;

struct Criterion {
    checks: Vec<(bool, String)>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { checks: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, format!("{what}: got {got:?}, want {want:?}"));
    }

    fn within(&mut self, started: Instant, limit: Duration) {
        let spent = started.elapsed();
        self.check(spent < limit, format!("runtime {spent:.2?} < {limit:?}"));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }
}

fn laws_ok(laws: &[LawOutcome]) -> Result<(), String> {
    let failed: Vec<String> = laws
        .iter()
        .filter(|l| l.failed())
        .map(|l| l.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join("; "))
    }
}

/// Connected components of the cover graph of the copoint poset, each given
/// as its set of attach labels.
fn copoint_trees(g: &ConvexGeometry, cps: &[Copoint]) -> BTreeSet<BTreeSet<String>> {
    let n = cps.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in 0..n {
            if cps[i].set.is_proper_subset(cps[j].set) {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<String>> = Default::default();
    for (i, cp) in cps.iter().enumerate() {
        let r = root(&mut parent, i);
        groups
            .entry(r)
            .or_default()
            .insert(g.ground().label(cp.attach).to_string());
    }
    groups.into_values().collect()
}

fn labels(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn criterion_one() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let a =
        analyze_points(&three_trees(), &AnalysisOptions::default()).expect("three-trees analyzes");
    c.eq("copoint count", a.copoints.len(), 9);
    let trees = copoint_trees(&a.geometry, &a.copoints);
    let want: BTreeSet<BTreeSet<String>> = [
        labels(&["w", "z", "v", "y"]),
        labels(&["u", "v", "z", "y"]),
        labels(&["x", "y", "v", "z"]),
    ]
    .into_iter()
    .collect();
    c.eq("copoint trees by attach labels", trees, want);
    let triples: BTreeSet<BTreeSet<String>> = a
        .large_hyperedges()
        .into_iter()
        .map(|e| e.iter().map(|&i| a.pairs[i].render(&a.geometry)).collect())
        .collect();
    for cycle in [
        ["(z, {w,v,u})", "(v, {x,y,u})", "(y, {x,z,w})"],
        ["(z, {x,y,w})", "(y, {x,v,u})", "(v, {z,w,u})"],
    ] {
        c.check(
            triples.contains(&labels(&cycle)),
            format!("3-cycle {} enumerated", cycle.join(" ")),
        );
    }
    c.eq("chiG", a.chi_g(), 4);
    c.eq("chiH", a.chi_h(), Some(4));
    c.eq("dim", a.dim(), Some(4));
    c.eq("b", a.b(), 4);
    c.eq("cdim", a.cdim(), 6);
    c.within(started, Duration::from_secs(5));
    c
}

fn criterion_two() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let g = nonatomic_bridgeless_geometry();
    let fam = g.family();
    c.check(
        validate_alignment(fam.ground().clone(), fam.sets().to_vec()).is_ok(),
        "alignment valid",
    );
    c.check(is_anti_exchange(fam).is_ok(), "anti-exchange");
    let a = analyze(g, None, &AnalysisOptions::default()).expect("non-atomic bridgeless analyzes");
    c.eq("atomic", a.atomic, false);
    c.eq("2-edge-connected (bridges)", a.two_edge.by_bridges(), true);
    c.eq(
        "2-edge-connected (copoints)",
        a.two_edge.by_copoints(),
        true,
    );
    let from_copoints = critical_pairs_from_copoints(&a.geometry, &a.copoints);
    let definitional = critical_pairs_definitional(a.geometry.lattice());
    c.eq("critical pairs via copoints", from_copoints.len(), 6);
    c.eq("critical pairs by definition", definitional.len(), 6);
    c.check(
        same_pairs(&from_copoints, &definitional),
        "both routes give the same pairs",
    );
    c.within(started, Duration::from_secs(1));
    c
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_three() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let mut wrong = Vec::new();
    for total in 0..=6 {
        for i in 0..=total {
            let j = total - i;
            let got = es(i, j).map(|p| p.len()).unwrap_or(0);
            if got != binomial(i + j, i) {
                wrong.push(format!("es({i},{j}) has {got}"));
            }
        }
    }
    c.check(
        wrong.is_empty(),
        format!("|es(i,j)| = C(i+j,i) for i+j <= 6 {wrong:?}"),
    );
    c.within(started, Duration::from_secs(5));
    c
}

fn xes_row(c: &mut Criterion, k: usize) -> Analysis {
    let set = xes(k).expect("xes builds");
    c.eq(&format!("k={k} |XES|"), set.len(), 1 << k);
    let a = analyze_points(&set, &AnalysisOptions::default()).expect("xes analyzes");
    c.eq(&format!("k={k} b"), a.b(), k + 1);
    let d = a.dimension.as_ref().expect("hypergraph complete");
    c.eq(
        &format!("k={k} dim by reversible partition"),
        d.by_partition,
        k + 1,
    );
    c.eq(
        &format!("k={k} dim by hypergraph colouring"),
        d.by_hypergraph,
        k + 1,
    );
    c.eq(
        &format!("k={k} hyperedges of size > 2"),
        a.large_hyperedges().len(),
        0,
    );
    a
}

fn criterion_four() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    for k in 1..=3 {
        let a = xes_row(&mut c, k);
        if k >= 2 {
            c.eq(&format!("k={k} cdim = 2k-2"), a.cdim(), 2 * k - 2);
        } else {
            c.check(true, format!("k=1 cdim recorded: {}", a.cdim()));
        }
    }
    c.within(started, Duration::from_secs(60));
    let stretch = Instant::now();
    let a = xes_row(&mut c, 4);
    c.eq("k=4 cdim", a.cdim(), 6);
    c.within(stretch, Duration::from_secs(30 * 60));
    c
}

fn closure_axioms(set: &PointSet) -> Result<(), String> {
    let closure = PlanarClosure::new(set).map_err(|e| e.to_string())?;
    let n = set.len();
    let closed: Vec<ElemSet> = (0u32..1 << n).map(|m| closure.close(ElemSet(m))).collect();
    for a in 0u32..1 << n {
        let ca = closed[a as usize];
        if !ElemSet(a).is_subset(ca) {
            return Err(format!("not extensive on {a:#b}"));
        }
        if closed[ca.0 as usize] != ca {
            return Err(format!("not idempotent on {a:#b}"));
        }
        // monotone on every one-element extension implies monotone
        for e in 0..n {
            if !ca.is_subset(closed[ElemSet(a).with(e).0 as usize]) {
                return Err(format!("not monotone on {a:#b} + {e}"));
            }
        }
    }
    Ok(())
}

/// Laws that do not apply to a plain random point set.
const MAY_SKIP: [&str; 8] = [
    LAW_ATOMIC,
    LAW_GRAPH,
    LAW_COMPOSITION,
    LAW_BLOCKS,
    LAW_SPLIT_CONTAINMENT,
    LAW_LEAF_CONTAINMENT,
    LAW_LEAF_HYPEREDGES,
    LAW_SINGLETONS,
];

fn criterion_five() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for index in 0..100 {
        let n = rng.gen_range(5..=9);
        let set = random_general_position(n, &mut rng);
        let mut fail = |what: String| failures.push(format!("instance {index} (n={n}): {what}"));
        if let Err(e) = closure_axioms(&set) {
            fail(e);
        }
        let a = match analyze_points(&set, &AnalysisOptions::default()) {
            Ok(a) => a,
            Err(e) => {
                fail(e.to_string());
                continue;
            }
        };
        if is_anti_exchange(a.geometry.family()).is_err() {
            fail("anti-exchange".into());
        }
        if a.planar_copoints.as_ref() != Some(&a.copoints) {
            fail("planar copoints differ from the definitional ones".into());
        }
        if a.two_edge.by_bridges() != a.two_edge.by_copoints() {
            fail("2-edge-connectivity computations disagree".into());
        }
        match (&a.dimension, a.chi_h()) {
            (Some(d), Some(h)) if d.agree() && d.value() == h && h >= a.chi_g() => {}
            _ => fail("dimension routes, chiH and chiG inconsistent".into()),
        }
        if a.omega_g() != a.b() {
            fail(format!("omegaG {} != b {}", a.omega_g(), a.b()));
        }
        let laws = a.report().laws;
        let skipped: Vec<&str> = laws
            .iter()
            .filter(|l| l.status == LawStatus::Skipped && !MAY_SKIP.contains(&l.law.as_str()))
            .map(|l| l.law.as_str())
            .collect();
        if !skipped.is_empty() {
            fail(format!("skipped: {skipped:?}"));
        }
        if let Err(e) = laws_ok(&laws) {
            fail(e);
        }
    }
    c.check(
        failures.is_empty(),
        format!("100 random sets, zero failures {failures:?}"),
    );
    c.within(started, Duration::from_secs(600));
    c
}

fn boolean(atoms: usize) -> ConvexGeometry {
    let labels: Vec<String> = (0..atoms).map(|i| format!("a{i}")).collect();
    let ground = GroundSet::new(labels.clone()).expect("labels");
    let sets: Vec<Vec<String>> = (0u32..1 << atoms)
        .map(|m| ElemSet(m).iter().map(|e| labels[e].clone()).collect())
        .collect();
    ConvexGeometry::from_labelled_sets(ground, &sets).expect("boolean lattice")
}

fn chain(n: usize) -> ConvexGeometry {
    let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let ground = GroundSet::new(labels.clone()).expect("labels");
    let sets: Vec<Vec<String>> = (0..=n).map(|k| labels[..k].to_vec()).collect();
    ConvexGeometry::from_labelled_sets(ground, &sets).expect("chain")
}

fn lattice_dimension(g: &ConvexGeometry) -> Result<usize, String> {
    let a = analyze(g.clone(), None, &AnalysisOptions::default()).map_err(|e| e.to_string())?;
    let d = order_dimension(g.lattice(), &a.pairs, &a.hypergraph, a.chi_g())
        .map_err(|e| e.to_string())?;
    Ok(d.value())
}

fn criterion_six() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let mut cases: Vec<(String, ConvexGeometry)> = vec![
        ("boolean 2".into(), boolean(2)),
        ("boolean 3".into(), boolean(3)),
        ("chain 3".into(), chain(3)),
        (
            "non-atomic bridgeless".into(),
            nonatomic_bridgeless_geometry(),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..60 {
        let n = rng.gen_range(2..=5);
        let orders = rng.gen_range(1..=3);
        cases.push((
            format!("random #{i}"),
            random_geometry(n, orders, &mut rng).expect("random geometry"),
        ));
    }
    let mut compared = 0;
    let mut disagreements = Vec::new();
    for (name, g) in &cases {
        let brute = match brute_force_dimension(&Poset::from_lattice(g.lattice())) {
            Ok(d) => d,
            Err(Error::OracleCap(_)) => continue,
            Err(e) => {
                disagreements.push(format!("{name}: {e}"));
                continue;
            }
        };
        compared += 1;
        match lattice_dimension(g) {
            Ok(d) if d == brute => {}
            other => disagreements.push(format!("{name}: oracle {brute}, computed {other:?}")),
        }
        if name == "boolean 2" {
            c.eq("boolean 2 dimension", brute, 2);
        }
        if name == "boolean 3" {
            c.eq("boolean 3 dimension", brute, 3);
        }
    }
    c.check(
        compared >= 20,
        format!("{compared} lattices within the oracle caps (need 20)"),
    );
    c.check(
        disagreements.is_empty(),
        format!("zero disagreements {disagreements:?}"),
    );
    c.within(started, Duration::from_secs(600));
    c
}

/// Random general-position points with distinct abscissae.
fn composable(n: usize, rng: &mut ChaCha8Rng) -> PointSet {
    loop {
        let p = random_general_position(n, rng);
        let xs: BTreeSet<String> = p.points().iter().map(|q| format_rational(&q.x)).collect();
        if xs.len() == n {
            return p;
        }
    }
}

fn criterion_seven() -> Criterion {
    let mut c = Criterion::new();
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let required = [
        LAW_COMPOSITION,
        LAW_BLOCKS,
        LAW_SPLIT_CONTAINMENT,
        LAW_LEAF_CONTAINMENT,
        LAW_LEAF_HYPEREDGES,
    ];
    let mut failures = Vec::new();
    let mut large = 0;
    // the last four runs use the three-trees set as a leaf so the hyperedge law
    // sees large hyperedges
    for index in 0..24 {
        let mut parts: Vec<PointSet> = (0..3)
            .map(|_| {
                let n = rng.gen_range(1..=if index < 20 { 4 } else { 2 });
                composable(n, &mut rng)
            })
            .collect();
        if index >= 20 {
            parts[index % 3] = three_trees();
        }
        let composed = if rng.gen_bool(0.5) {
            compose(&compose(&parts[0], &parts[1]).expect("compose"), &parts[2])
        } else {
            compose(&parts[0], &compose(&parts[1], &parts[2]).expect("compose"))
        }
        .expect("compose");
        let a = match analyze_points(&composed, &AnalysisOptions::default()) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("#{index}: {e}"));
                continue;
            }
        };
        large += a.large_hyperedges().len();
        let laws = a.report().laws;
        for law in required {
            match laws.iter().find(|l| l.law == law) {
                Some(l) if l.status == LawStatus::Pass => {}
                Some(l) => failures.push(format!("#{index}: {l}")),
                None => failures.push(format!("#{index}: {law} missing")),
            }
        }
        if let Err(e) = laws_ok(&laws) {
            failures.push(format!("#{index}: {e}"));
        }
    }
    c.check(
        failures.is_empty(),
        format!("20 random and 4 three-trees nested compositions, zero failures {failures:?}"),
    );
    c.check(
        true,
        format!("{large} hyperedges of size > 2 checked against leaves"),
    );
    c.within(started, Duration::from_secs(300));
    c
}

fn search_stdout(workers: &str) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = convexdim_cli::run(
        [
            "convexdim",
            "search",
            "--seed",
            "17",
            "--count",
            "40",
            "--max-n",
            "8",
            "--workers",
            workers,
        ],
        &mut out,
        &mut err,
    );
    (code, out)
}

fn criterion_eight() -> Criterion {
    let mut c = Criterion::new();
    let (code_one, one) = search_stdout("1");
    let (code_four, four) = search_stdout("4");
    c.eq("exit codes", (code_one, code_four), (0, 0));
    c.check(!one.is_empty(), format!("summary is {} bytes", one.len()));
    c.check(one == four, "1 and 4 workers give byte-identical summaries");
    c
}

fn main() -> ExitCode {
    let criteria: [(&str, Run); 8] = [
        ("1 three-trees fixture", criterion_one),
        ("2 non-atomic bridgeless fixture", criterion_two),
        ("3 es sizes", criterion_three),
        ("4 xes table", criterion_four),
        ("5 randomized property suite", criterion_five),
        ("6 oracle agreement", criterion_six),
        ("7 composition laws", criterion_seven),
        ("8 search determinism", criterion_eight),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let c = run();
        let status = if c.passed() { "PASS" } else { "FAIL" };
        println!("{status} criterion {name} ({:.2?})", started.elapsed());
        for (ok, what) in &c.checks {
            println!("    {} {what}", if *ok { "ok  " } else { "FAIL" });
        }
        if !c.passed() {
            failed += 1;
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
