//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rbl2::algebra::{
    adjoint_representation, derived_bracket, dual_representation, prelie_from_rb,
    semidirect_product, subadjacent_lie, verify_lie, verify_lie_hom, verify_prelie, verify_rb,
    verify_representation, RotaBaxterLieAlgebra,
};
use rbl2::categorify::{
    bracket_morphisms, rbcoh_paths, rbcohm_paths, roundtrip_hom, roundtrip_st, verify_rbcoh,
    verify_rbcohm, Morphism2V, RbLie2View,
};
use rbl2::crossed::{
    crossed_semidirect, crossed_to_strict, derived_crossed, prelie_crossed_to_lie_crossed,
    rb_crossed_to_prelie_crossed, strict_to_crossed, verify_lie_crossed, verify_prelie_crossed,
};
use rbl2::format::{load, write_document};
use rbl2::scalar::{self, int, one};
use rbl2::search::{mutate, operator_line};
use rbl2::structure::{Kind, Structure};
use rbl2::tensor::{self, unit, LinearMap, Vector};
use rbl2::two_term::{
    compose_rb_homs, rb3_residual, rblh3_residual, verify_2term, verify_rb_2term, verify_rb_hom,
    verify_rb_triple, RbLInfinityHom, TwoTermRbLInfinity,
};
use rbl2::{catalog, Condition};

const GOLDEN: &str = include_str!("../../core/tests/golden/aff1-rb-search.txt");
const LIMIT: Duration = Duration::from_secs(60);

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn rbl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbl2"))
        .args(args)
        .output()
        .expect("rbl2 runs")
}

fn golden_operators() -> Vec<LinearMap> {
    GOLDEN
        .lines()
        .map(|line| {
            let entries: Vec<_> = line["RB ".len()..]
                .split([';', ','])
                .map(|s| scalar::parse(s).unwrap())
                .collect();
            LinearMap::new(2, 2, entries).unwrap()
        })
        .collect()
}

fn classical() -> Check {
    let algebras = common::lie_algebras();
    ensure!(algebras.len() >= 5, "only {} Lie algebras", algebras.len());
    for (name, a) in &algebras {
        ensure!(a.dim() <= 4 && verify_lie(a).unwrap().is_empty(), "{name}");
    }
    let a = catalog::aff1_rb();
    ensure!(
        a.r == LinearMap::from_int_rows(&[&[0, 1], &[0, 0]]),
        "aff1 operator"
    );
    ensure!(verify_rb(&a).unwrap().is_empty(), "aff1 operator rejected");

    let aff1 = catalog_dir().join("aff1.json");
    let out = rbl2(&["search-rb", aff1.to_str().unwrap(), "--coeffs", "-1,0,1"]);
    ensure!(
        out.status.success(),
        "search-rb exited {:?}",
        out.status.code()
    );
    ensure!(
        String::from_utf8(out.stdout).unwrap() == GOLDEN,
        "search-rb output differs from golden"
    );

    let golden: Vec<&str> = GOLDEN.lines().collect();
    let mut accepted = 0;
    for t in 0..81i64 {
        let e: Vec<i64> = (0..4).rev().map(|p| (t / 3i64.pow(p)) % 3 - 1).collect();
        let r = LinearMap::from_int_rows(&[&e[..2], &e[2..]]);
        let listed = golden.contains(&operator_line(&r).as_str());
        let ok = verify_rb(&RotaBaxterLieAlgebra {
            base: catalog::aff1(),
            r,
        })
        .unwrap()
        .is_empty();
        ensure!(ok == listed, "candidate {e:?}");
        accepted += usize::from(ok);
    }
    ensure!(accepted == golden.len(), "{accepted} accepted");
    Ok(())
}

fn prelie_chain() -> Check {
    let ops = golden_operators();
    ensure!(ops.len() == 15, "golden list has {} operators", ops.len());
    for r in ops {
        let a = RotaBaxterLieAlgebra {
            base: catalog::aff1(),
            r,
        };
        let name = operator_line(&a.r);
        let p = prelie_from_rb(&a).unwrap();
        ensure!(verify_prelie(&p).unwrap().is_empty(), "{name}: pre-Lie");
        let derived = derived_bracket(&a).unwrap();
        ensure!(
            derived.bracket == subadjacent_lie(&p).unwrap().bracket,
            "{name}: derived bracket"
        );
        ensure!(
            verify_lie_hom(&a.r, &derived, &a.base).unwrap().is_empty(),
            "{name}: hom"
        );
    }
    Ok(())
}

fn representations() -> Check {
    let algebras = common::rb_lie_algebras();
    ensure!(!algebras.is_empty(), "no RB Lie algebras");
    for (name, a) in algebras {
        let adj = adjoint_representation(&a).unwrap();
        let coadj = dual_representation(&adj).unwrap();
        for rep in [&adj, &coadj] {
            ensure!(
                verify_representation(rep).unwrap().is_empty(),
                "{name}: representation"
            );
            ensure!(
                verify_rb(&semidirect_product(rep).unwrap())
                    .unwrap()
                    .is_empty(),
                "{name}: semidirect"
            );
        }
        ensure!(
            dual_representation(&coadj).unwrap() == adj,
            "{name}: dual twice"
        );
    }
    for (name, rep) in common::select(|s| match s {
        Structure::Representation(r) => Some(r.clone()),
        _ => None,
    }) {
        ensure!(
            dual_representation(&dual_representation(&rep).unwrap()).unwrap() == rep,
            "{name}"
        );
    }
    Ok(())
}

fn two_term() -> Check {
    for (name, l) in common::two_terms() {
        ensure!(
            verify_2term(&l).unwrap().is_empty(),
            "{name}: conditions a-d"
        );
    }
    for (name, g) in common::rb_two_terms() {
        ensure!(
            verify_rb_triple(&g).unwrap().is_empty(),
            "{name}: conditions 1-3"
        );
    }
    const FAMILIES: [&str; 10] = [
        "a", "b", "c", "d", "rb1", "rb2", "rb3", "rblh1", "rblh2", "rblh3",
    ];
    let mut isolated = BTreeMap::new();
    for entry in common::entries() {
        let s = &entry.doc.structure;
        if !matches!(
            s.kind(),
            Kind::TwoTerm | Kind::RbTwoTerm | Kind::Hom | Kind::RbHom
        ) {
            continue;
        }
        for site in common::mutation_sites(s) {
            let report = mutate(s, &site, &one()).unwrap().verify().unwrap();
            if let [family] = report.families().into_iter().collect::<Vec<_>>()[..] {
                isolated
                    .entry(family)
                    .or_insert_with(|| format!("{}:{site}", entry.name));
            }
        }
    }
    for family in FAMILIES {
        ensure!(isolated.contains_key(family), "no mutant isolates {family}");
    }
    Ok(())
}

fn flags_hold(g: &TwoTermRbLInfinity) -> bool {
    g.linf.l2_00.skew_defects().is_empty()
        && g.linf.l3.alternation_defects().is_empty()
        && g.rb.r2.skew_defects().is_empty()
}

fn with_mutants<T: Clone>(
    items: Vec<(&'static str, T)>,
    wrap: impl Fn(T) -> Structure,
    unwrap: impl Fn(Structure) -> Option<T>,
) -> Vec<(String, T)> {
    let mut out = Vec::new();
    for (name, item) in items {
        let s = wrap(item.clone());
        for site in common::mutation_sites(&s) {
            if let Some(m) = unwrap(mutate(&s, &site, &one()).unwrap()) {
                out.push((format!("{name}:{site}"), m));
            }
        }
        out.push((name.to_string(), item));
    }
    out
}

fn equivalence() -> Check {
    for (name, g) in common::rb_two_terms() {
        ensure!(roundtrip_st(&g).unwrap().is_empty(), "{name}: roundtrip");
    }
    for (name, h) in common::rb_homs() {
        ensure!(
            roundtrip_hom(&h).unwrap().is_empty(),
            "{name}: hom roundtrip"
        );
    }
    let instances = with_mutants(common::rb_two_terms(), Structure::RbTwoTerm, |s| match s {
        Structure::RbTwoTerm(g) => Some(g),
        _ => None,
    });
    let flags = [Condition::L2Skew, Condition::L3Alt, Condition::R2Skew];
    for (name, g) in instances {
        let view = RbLie2View::new(&g);
        let coh = verify_rbcoh(&view).unwrap();
        if !flags_hold(&g) {
            let report = verify_rb_2term(&g).unwrap();
            ensure!(
                flags.iter().any(|c| report.conditions().contains(c)),
                "{name}: type break unreported"
            );
            continue;
        }
        ensure!(
            coh.sites(Condition::RbCoh) == verify_rb_triple(&g).unwrap().sites(Condition::Rb3),
            "{name}"
        );
        let n = g.dim0();
        for (i, j, k) in rbl2::par::triples(n) {
            let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
            let paths = rbcoh_paths(&view, &x, &y, &z);
            let diff = tensor::sub(&paths.left.arrow, &paths.right.arrow);
            ensure!(diff == rb3_residual(&g, &x, &y, &z), "{name} ({i},{j},{k})");
        }
    }
    let homs = with_mutants(common::rb_homs(), Structure::RbHom, |s| match s {
        Structure::RbHom(h) => Some(h),
        _ => None,
    });
    for (name, h) in homs {
        let cohm = verify_rbcohm(&h).unwrap();
        ensure!(
            cohm.sites(Condition::RbCohm) == verify_rb_hom(&h).unwrap().sites(Condition::RbLh3),
            "{name}"
        );
        let n = h.source.dim0();
        for (i, j) in rbl2::par::pairs(n) {
            let (x, y) = (unit(n, i), unit(n, j));
            let paths = rbcohm_paths(&h, &x, &y);
            let diff = tensor::sub(&paths.right.arrow, &paths.left.arrow);
            ensure!(diff == rblh3_residual(&h, &x, &y), "{name} ({i},{j})");
        }
    }
    Ok(())
}

fn crossed() -> Check {
    let modules = common::crossed_rb();
    ensure!(!modules.is_empty(), "no crossed modules");
    for (name, c) in &modules {
        let g = crossed_to_strict(c).unwrap();
        ensure!(
            &strict_to_crossed(&g).unwrap() == c,
            "{name}: crossed -> strict -> crossed"
        );
        ensure!(
            crossed_to_strict(&strict_to_crossed(&g).unwrap()).unwrap() == g,
            "{name}: strict -> crossed -> strict"
        );
        let pm = rb_crossed_to_prelie_crossed(c).unwrap();
        ensure!(
            verify_prelie_crossed(&pm).unwrap().is_empty(),
            "{name}: pre-Lie crossed"
        );
        let chain = prelie_crossed_to_lie_crossed(&pm).unwrap();
        ensure!(
            verify_lie_crossed(&chain).unwrap().is_empty(),
            "{name}: Lie crossed"
        );
        let (derived, hom_report) = derived_crossed(c).unwrap();
        ensure!(derived == chain, "{name}: derived differs from chain");
        ensure!(hom_report.is_empty(), "{name}: homomorphism report");
        ensure!(
            verify_rb(&crossed_semidirect(c).unwrap())
                .unwrap()
                .is_empty(),
            "{name}: semidirect"
        );
    }
    for (name, g) in common::rb_two_terms()
        .into_iter()
        .filter(|(_, g)| g.is_strict())
    {
        ensure!(
            crossed_to_strict(&strict_to_crossed(&g).unwrap()).unwrap() == g,
            "{name}"
        );
    }
    Ok(())
}

fn hom_algebra() -> Check {
    let mut homs: Vec<(String, RbLInfinityHom)> = common::rb_homs()
        .into_iter()
        .map(|(n, h)| (n.to_string(), h))
        .collect();
    for (name, g) in common::rb_two_terms() {
        homs.push((format!("id:{name}"), RbLInfinityHom::identity(&g)));
    }
    let mut triples = 0;
    for (nf, f) in &homs {
        ensure!(verify_rb_hom(f).unwrap().is_empty(), "{nf}");
        ensure!(
            compose_rb_homs(&RbLInfinityHom::identity(&f.target), f).unwrap() == *f,
            "{nf}: left unit"
        );
        ensure!(
            compose_rb_homs(f, &RbLInfinityHom::identity(&f.source)).unwrap() == *f,
            "{nf}: right unit"
        );
        for (ng, g) in homs.iter().filter(|(_, g)| g.source == f.target) {
            let gf = compose_rb_homs(g, f).unwrap();
            ensure!(
                verify_rb_hom(&gf).unwrap().is_empty(),
                "{ng} . {nf}: closure"
            );
            for (nh, h) in homs.iter().filter(|(_, h)| h.source == g.target) {
                let right = compose_rb_homs(&compose_rb_homs(h, g).unwrap(), f).unwrap();
                ensure!(
                    compose_rb_homs(h, &gf).unwrap() == right,
                    "{nh} . {ng} . {nf}"
                );
                triples += 1;
            }
        }
    }
    ensure!(triples > 0, "no composable triples");
    Ok(())
}

fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()
}

fn chain(view: &RbLie2View<'_>, rng: &mut ChaCha8Rng) -> [Morphism2V; 3] {
    let (n, m) = (view.dim0(), view.dim1());
    let f = Morphism2V::new(vector(rng, n), vector(rng, m));
    let g = Morphism2V::new(view.t(&f), vector(rng, m));
    let h = Morphism2V::new(view.t(&g), vector(rng, m));
    [f, g, h]
}

fn morphism_calculus() -> Check {
    for (k, (name, g)) in common::rb_two_terms().into_iter().enumerate() {
        let view = RbLie2View::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + k as u64);
        for sample in 0..100 {
            let [f, f2, f3] = chain(&view, &mut rng);
            let [h, h2, _] = chain(&view, &mut rng);
            let c = |b: &Morphism2V, a: &Morphism2V| view.compose(b, a).unwrap();
            ensure!(
                c(&f3, &c(&f2, &f)) == c(&c(&f3, &f2), &f),
                "{name} #{sample}: associativity"
            );
            ensure!(
                c(&view.i(&view.t(&f)), &f) == f && c(&f, &view.i(&view.s(&f))) == f,
                "{name} #{sample}: units"
            );
            ensure!(
                view.bracket(&f, &h) == view.bracket_alt(&f, &h),
                "{name} #{sample}: bracket forms"
            );
            ensure!(
                bracket_morphisms(&view, &f, &h).unwrap() == view.bracket(&f, &h),
                "{name} #{sample}"
            );
            let lhs = view.bracket(&c(&f2, &f), &c(&h2, &h));
            let rhs = c(&view.bracket(&f2, &h2), &view.bracket(&f, &h));
            ensure!(lhs == rhs, "{name} #{sample}: functoriality");
            let (x, y) = (view.s(&f), view.s(&h));
            ensure!(
                view.bracket(&view.i(&x), &view.i(&y)) == view.i(&view.bracket_objects(&x, &y)),
                "{name} #{sample}: identities"
            );
        }
    }
    Ok(())
}

fn cli_contract() -> Check {
    let mut files = 0;
    for entry in std::fs::read_dir(catalog_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        ensure!(
            write_document(&load(&path).unwrap()).unwrap() == text,
            "{}",
            path.display()
        );
        files += 1;
    }
    ensure!(files >= 10, "{files} catalog files");

    let dir = tempfile::tempdir().unwrap();
    let rb = catalog_dir().join("aff1-rb.json");
    let out = rbl2(&["verify", rb.to_str().unwrap()]);
    ensure!(
        out.status.code() == Some(0) && out.stdout.is_empty(),
        "exit 0 case: {:?}",
        out.status
    );

    let mutant = dir.path().join("mutant.json");
    let out = rbl2(&[
        "mutate",
        rb.to_str().unwrap(),
        "--site",
        "r/0,0",
        "--delta",
        "1",
        "-o",
        mutant.to_str().unwrap(),
    ]);
    ensure!(out.status.success(), "mutate failed");
    let out = rbl2(&["verify", mutant.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    ensure!(
        out.status.code() == Some(1),
        "exit 1 case: {:?}",
        out.status
    );
    ensure!(
        !text.is_empty() && text.lines().all(|l| l.starts_with("VIOLATION ")),
        "exit 1 output: {text}"
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": \"rbl2/1\", \"kind\": \"lie\"").unwrap();
    let out = rbl2(&["verify", bad.to_str().unwrap()]);
    ensure!(
        out.status.code() == Some(2) && out.stdout.is_empty(),
        "exit 2 case: {:?}",
        out.status
    );

    let gauge = catalog_dir().join("sl2-gauge.json");
    let big = dir.path().join("big.json");
    rbl2(&[
        "mutate",
        gauge.to_str().unwrap(),
        "--site",
        "source/r0/1,0",
        "--delta",
        "1",
        "-o",
        big.to_str().unwrap(),
    ]);
    let one = rbl2(&["--jobs", "1", "verify", big.to_str().unwrap()]);
    let many = rbl2(&["--jobs", "4", "verify", big.to_str().unwrap()]);
    ensure!(
        one.status.code() == Some(1),
        "worker comparison mutant verified clean"
    );
    ensure!(
        one.stdout == many.stdout,
        "1-worker and 4-worker reports differ"
    );
    ensure!(
        String::from_utf8(one.stdout).unwrap().lines().count() > 1,
        "worker comparison needs several lines"
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("classical layer", classical),
        ("pre-Lie chain", prelie_chain),
        ("representations", representations),
        ("2-term conditions and mutation isolation", two_term),
        ("categorification equivalence", equivalence),
        ("crossed modules", crossed),
        ("hom algebra", hom_algebra),
        ("morphism calculus", morphism_calculus),
        ("CLI contract", cli_contract),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (title, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed < LIMIT {
                Ok(())
            } else {
                Err(format!("took {elapsed:?}"))
            }
        });
        match result {
            Ok(()) => println!("PASS criterion {}: {title} ({:.2?})", k + 1, elapsed),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
