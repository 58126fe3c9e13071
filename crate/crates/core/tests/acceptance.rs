//! Acceptance criteria 1-9, one line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;

use ogz::cli::{ddiff_degree, run_args, Outcome};
use ogz::combinat::Composition;
use ogz::divdiff::{compare_forms, conjugate, nil_coxeter_relations, partial_word};
use ogz::exactalg::Q;
use ogz::gzmod::{
    build_basis_b, component_graph, eval_operator_functional, simplicity_probe, singularity_setup_check, stabilizer,
    Direction, EdgeRule, EvalPoint, Functional,
};
use ogz::invariants::{self, rand_like::SplitMix};
use ogz::latwalk::{find_path, moves_to_steps, parse_walk, validate_walk, LatticeState, StepStatus};
use ogz::skewops::{build_generators, check_invariance, AffineSymmetry, SkewOperator};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const DESK: [&[u32]; 5] = [&[1, 1], &[2, 1], &[1, 2], &[2, 2], &[1, 2, 3]];

const REFERENCE_WALK: &str = "(0,0,0,0) -1-> (1,0,0,0) -1-> (2,0,0,0) -1-> (3,0,0,0) -1-> (4,0,0,0) -1-> (4,0,0,0) \
    -1-> (5,0,0,0) -1-> (6,0,0,0) -1-> (6,1,0,0) -1-> (6,2,0,0) -1-> (6,3,0,0) -1-> (6,4,0,0) -1-> (6,5,0,0) \
    -1-> (6,5,1,0) -1-> (6,5,2,0) -1-> (6,5,3,0) -1-> (6,5,4,0) -1-> (6,5,4,1) -1-> (6,5,4,2) -1-> (6,5,4,3) \
    -1-> (6,5,4,2) -1-> (6,5,4,1) -1-> (6,5,3,1) -1-> (6,5,2,1) -2-> (6,5,1,1) -1-> (6,4,1,1) -1-> (6,3,1,1) \
    -1-> (6,2,1,1) -1-> (5,2,1,1) -1-> (4,2,1,1) -1-> (3,2,1,1) -2-> (2,2,1,1)";

fn lam(p: &[u32]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

fn singular() -> EvalPoint {
    EvalPoint::from_pairs(&lam(&[2, 1]), &[((1, 1), 1, Q::zero()), ((1, 2), 1, Q::zero()), ((2, 1), 2, Q::zero())])
        .unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_nil_coxeter() -> Check {
    let mut detail = Vec::new();
    for n in 1..=4 {
        let r = nil_coxeter_relations(&lam(&[n]), 1).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("n={n}: {:?} rank {}/{}", r.failures, r.rank, r.expected_rank))?;
        detail.push(format!("n={n} rank {}", r.rank));
    }
    Ok(detail.join(", "))
}

fn c2_invariance() -> Check {
    let mut checked = 0;
    for p in DESK {
        let l = lam(p);
        let g = build_generators(&l);
        let mut rng = SplitMix(0xacce97 + p.len() as u64 * 31 + p[0] as u64);
        for s in 0..20 {
            let f = invariants::random_invariant(&l, 4, &mut rng);
            for i in 1..l.k() {
                for (name, op) in [("E", g.e(i).unwrap()), ("F", g.f(i).unwrap())] {
                    let r = check_invariance(op, &f).map_err(|e| e.to_string())?;
                    ensure(r.is_invariant_image, || format!("λ={l}: {name}{i} on sample {s}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} images invariant"))
}

fn c3_ddiff() -> Check {
    let mut compared = 0;
    for p in DESK {
        let l = lam(p);
        let rows: Vec<u32> = (1..=l.k()).collect();
        let family = invariants::family(&l, &rows, ddiff_degree(&l));
        for i in 1..l.k() {
            for mu in Composition::all_of(l.part(i)) {
                let r = compare_forms(&l, i, &mu, &family).map_err(|e| e.to_string())?;
                ensure(r.agrees(), || format!("λ={l} row {i} μ={mu}: {r:?}"))?;
                compared += r.tested;
            }
        }
    }
    Ok(format!("{compared} family members compared"))
}

fn c4_gl() -> Check {
    let l = lam(&[1, 1]);
    let g = build_generators(&l);
    let c = g.e(1).unwrap().commutator(g.f(1).unwrap());
    ensure(c == SkewOperator::identity(&l), || format!("[E1,F1] = {c}"))?;

    let l = lam(&[1, 2, 3]);
    let g = build_generators(&l);
    let (e1, e2, f1, f2) = (g.e(1).unwrap(), g.e(2).unwrap(), g.f(1).unwrap(), g.f(2).unwrap());
    ensure(e1.commutator(f2).is_zero(), || "[E1,F2] != 0".into())?;
    ensure(e2.commutator(f1).is_zero(), || "[E2,F1] != 0".into())?;
    ensure(e1.commutator(&e1.commutator(e2)).is_zero(), || "[E1,[E1,E2]] != 0".into())?;
    for (i, e, f) in [(1, e1, f1), (2, e2, f2)] {
        let m = e.commutator(f).as_multiplication().ok_or_else(|| format!("[E{i},F{i}] is not a multiplication"))?;
        let p = m.as_polynomial().ok_or_else(|| format!("[E{i},F{i}] coefficient not polynomial"))?;
        ensure(invariants::is_g_invariant(&l, p), || format!("[E{i},F{i}] coefficient not invariant"))?;
    }
    Ok("all normal-form identities hold".into())
}

fn c5_singular() -> Check {
    let v = singular();
    ensure(singularity_setup_check(&v, 3).passes(), || "setup check".into())?;
    let w = build_basis_b(&v, 3).map_err(|e| e.to_string())?;
    // (a)
    ensure(w.len() == w.window_size() && w.certificate.rank == w.len(), || {
        format!("basis {} window {} rank {}", w.len(), w.window_size(), w.certificate.rank)
    })?;
    // (b), (c)
    let g = build_generators(&w.lambda);
    let interior: Vec<usize> = (0..w.len()).filter(|&b| w.is_interior(b)).collect();
    let mut acts = 0;
    for (name, op) in g.named() {
        let prep = w.prepare(op).map_err(|e| e.to_string())?;
        let dir = match name.as_str() {
            "E1" => Some(Direction::E(1)),
            "F1" => Some(Direction::F(1)),
            _ => None,
        };
        for &b in &interior {
            let c = w.act_prepared(&prep, b).map_err(|e| format!("{name} on {b}: {e}"))?;
            acts += 1;
            if let Some(d) = dir {
                let s = w.act_structural(d, b).map_err(|e| format!("structural {name} on {b}: {e}"))?;
                ensure(c == s, || format!("{name} on {b}: act {c:?} structural {s:?}"))?;
            }
        }
    }
    // (d), (e)
    let table = w.block_table().map_err(|e| e.to_string())?;
    for row in &table {
        ensure(row.dim == row.coset_reps && (row.dim == 1 || row.dim == 2), || format!("block {row:?}"))?;
        ensure(row.socle_dim == 1, || format!("socle {row:?}"))?;
    }
    // (f)
    let gv = stabilizer(&v);
    let elements = gv.elements().map_err(|e| e.to_string())?;
    let mut vanishing = 0;
    for o in &w.orbits {
        for p in elements.iter().filter(|p| !o.reps.contains(p)) {
            let f = Functional::new(p.reduced_word(), o.shift.clone());
            ensure(w.evaluate(&f).iter().all(|s| s.is_zero()), || format!("{f} does not vanish"))?;
            vanishing += 1;
        }
    }
    let mut conjugations = 0;
    for e in &w.basis {
        let xi = SkewOperator::symmetry(&w.lambda, AffineSymmetry::from_shift(&w.lambda, e.functional.shift.clone()));
        let op = partial_word(&w.lambda, &e.functional.word).map_err(|e| e.to_string())?.compose(&xi);
        for rho in &elements {
            let moved = conjugate(rho, &op);
            for f in &w.family {
                let a = eval_operator_functional(&v, &op, f).map_err(|e| e.to_string())?;
                let b = eval_operator_functional(&v, &moved, f).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("conjugation by {rho} on {}", e.functional))?;
                ensure(a == e.functional.eval(&v, f), || format!("operator form of {}", e.functional))?;
            }
            conjugations += 1;
        }
    }
    Ok(format!(
        "{} basis elements, {acts} actions on {} interior, {} blocks, {vanishing} vanishing and {conjugations} conjugation checks",
        w.len(),
        interior.len(),
        table.len()
    ))
}

fn c6_components() -> Check {
    let generic = EvalPoint::generic(&lam(&[2, 1]));
    let g = component_graph(&generic, 3, EdgeRule::Both).map_err(|e| e.to_string())?;
    ensure(g.components.len() == 1, || format!("generic (2,1): {} components", g.components.len()))?;
    let l = lam(&[1, 1]);
    let wall = EvalPoint::from_pairs(&l, &[((1, 1), 1, Q::zero()), ((2, 1), 1, Q::zero())]).unwrap();
    let h = component_graph(&wall, 3, EdgeRule::Both).map_err(|e| e.to_string())?;
    ensure(h.components.len() == 2, || format!("(1,1) wall: {} components", h.components.len()))?;
    Ok(format!("generic (2,1) r=3: 1 of {} vertices; (1,1) wall: 2", g.vertices.len()))
}

fn c7_probe() -> Check {
    let r = simplicity_probe(&singular(), 3);
    ensure(r.hypotheses_ok, || format!("hypotheses: {:?} {:?}", r.cross_row_violations, r.error))?;
    ensure(r.step1_ok, || "Step-1 projections".into())?;
    ensure(r.cyclicity_ok, || "cyclicity".into())?;
    ensure(r.passes(), || "probe".into())?;
    Ok(format!("{} Step-1 checks, {} cyclicity starts", r.step1.len(), r.cyclicity.len()))
}

fn c8_walk() -> Check {
    let (s, t) = (LatticeState::new(vec![0, 0, 0, 0]), LatticeState::new(vec![2, 2, 1, 1]));
    let moves = find_path(&s, &t).map_err(|e| e.to_string())?;
    let steps = moves_to_steps(&moves);
    ensure(steps.first().map(|m| &m.from) == Some(&s) && steps.last().map(|m| &m.to) == Some(&t), || {
        "endpoints".into()
    })?;
    ensure(validate_walk(&steps).is_valid(), || "find_path result does not validate".into())?;
    let reference = parse_walk(REFERENCE_WALK).map_err(|e| e.to_string())?;
    let r = validate_walk(&reference);
    ensure(r.chained, || "reference walk not chained".into())?;
    ensure(r.flagged == vec![4] && r.steps[4].status == StepStatus::RepeatedState, || {
        format!("reference walk flagged {:?}", r.flagged)
    })?;
    Ok(format!("path of {} moves; reference walk: {} arrows, only the repeated state flagged", moves.len(), reference.len()))
}

fn cli(args: &[&str]) -> Outcome {
    run_args(std::iter::once("ogz").chain(args.iter().copied()))
}

fn c9_determinism() -> Check {
    let dir = std::env::temp_dir().join(format!("ogz-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let singular_spec = dir.join("singular.json");
    let wall_spec = dir.join("wall.json");
    std::fs::write(
        &singular_spec,
        r#"{"lambda":[2,1],"point":{"1,1":{"tag":1},"1,2":{"tag":1},"2,1":{"tag":2}},"radius":2}"#,
    )
    .map_err(|e| e.to_string())?;
    std::fs::write(&wall_spec, r#"{"lambda":[1,1],"point":{"1,1":{"tag":1},"2,1":{"tag":1}},"radius":2}"#)
        .map_err(|e| e.to_string())?;
    let (ss, ws) = (singular_spec.to_str().unwrap(), wall_spec.to_str().unwrap());
    let jobs: Vec<Vec<&str>> = vec![
        vec!["apply", "--lambda", "2,1", "--op", "E1", "--expr", "x[1,1]+x[1,2]"],
        vec!["check-relations", "--lambda", "2,1"],
        vec!["ddiff-compare", "--lambda", "1,2,3"],
        vec!["basis", "--spec", ss],
        vec!["action", "--spec", ss],
        vec!["blocks", "--spec", ss],
        vec!["graph", "--spec", ws],
        vec!["graph", "--spec", ws, "--edge-rule", "either"],
        vec!["walk", "--start", "(0,0,0,0)", "--target", "(2,2,1,1)"],
        vec!["probe", "--spec", ss],
    ];
    for job in &jobs {
        let a = cli(job);
        let b = cli(job);
        ensure(a.code == 0, || format!("{job:?} exited {}: {}", a.code, a.stderr))?;
        ensure(a == b, || format!("{job:?} differs between runs"))?;
    }
    let exe = env!("CARGO_BIN_EXE_ogz");
    for job in [&jobs[0], &jobs[6], &jobs[8]] {
        let outs: Vec<_> = (0..2)
            .map(|_| std::process::Command::new(exe).args(job).output().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        ensure(outs[0].status.success() && outs[0] == outs[1], || format!("binary {job:?} not deterministic"))?;
    }
    let _ = std::fs::remove_dir_all(&dir);

    let cube: Vec<LatticeState> =
        (0..81).map(|n| LatticeState::new((0..4).map(|d| (n / 3i64.pow(d)) % 3).collect())).collect();
    let mut pairs = 0;
    for s in &cube {
        for t in &cube {
            let moves = find_path(s, t).map_err(|e| format!("{s}->{t}: {e}"))?;
            let end = moves.last().map_or(s, |m| &m.to);
            ensure(end == t, || format!("{s}->{t} ends at {end}"))?;
            ensure(validate_walk(&moves_to_steps(&moves)).is_valid(), || format!("{s}->{t} invalid"))?;
            pairs += 1;
        }
    }
    Ok(format!("{} jobs byte-identical, {pairs} cube pairs valid", jobs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("nil-Coxeter relations", c1_nil_coxeter),
        ("invariance of generator images", c2_invariance),
        ("divided-difference realization", c3_ddiff),
        ("gl identities", c4_gl),
        ("singular module (2,1), radius 3", c5_singular),
        ("regular components", c6_components),
        ("simplicity probe", c7_probe),
        ("lattice walk", c8_walk),
        ("determinism and exhaustive walks", c9_determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = check();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(d) => println!("criterion {}: PASS  {name} ({secs:.2}s): {d}", n + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {d}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
