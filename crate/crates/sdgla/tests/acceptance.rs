//! One line per acceptance criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use sdgla::format::dgla_from_doc;
use sdgla::generate::{corpus, length_three_inputs, Spec};
use sdgla::pipeline::{run, Command, EXIT_OK};
use sdgla_core::dgla::{build_dgla, oracle_compare, verify_dgla, DIFFERENTIAL_SIGN};
use sdgla_core::fixtures::{crossed_module_fixture, peiffer_fixture};
use sdgla_core::hypercrossed::*;
use sdgla_core::lie::Tensor3;
use sdgla_core::simplicial::{moore_complex, validate_simplicial, SimplicialLieAlgebra};
use sdgla_core::Q;

const SEED: u64 = 20240611;
const TRUNCATION: usize = 3;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn simplicial(spec: &Spec) -> SimplicialLieAlgebra {
    match spec {
        Spec::Crossed(s) => from_crossed_module(s, TRUNCATION).expect("corpus entries are valid"),
        Spec::TwoCrossed(s) => from_two_crossed_module(s, TRUNCATION).expect("corpus entries are valid"),
    }
}

fn binomial(n: usize, m: usize) -> usize {
    (0..m).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn golden_crossed_module() -> Outcome {
    let bytes = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/crossed_module.json")).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = run(&bytes, Command::Dgla, None);
    let elapsed = start.elapsed();
    ensure(out.exit == EXIT_OK, || format!("exit {} ({:?})", out.exit, out.doc.error))?;
    let l = dgla_from_doc(out.doc.dgla.as_ref().ok_or("no dgla section")?).map_err(|e| e.to_string())?;

    let spec = crossed_module_fixture();
    ensure(l.dims() == [2, 1], || format!("dims {:?}", l.dims()))?;
    ensure(*l.differential(1) == spec.delta1.scaled(&Q::from_int(DIFFERENTIAL_SIGN as i64)), || "differential".into())?;
    ensure(l.bracket_table(0, 0) == Some(spec.d.structure_constants()), || "bracket on L0".into())?;
    ensure(l.bracket_table(0, 1) == Some(&spec.action), || "mixed bracket".into())?;
    let mut reverse = Tensor3::zeros(1, 2, 1);
    for i in 0..2 {
        reverse.set(0, i, &[-spec.action.get(i, 0, 0).clone()]);
    }
    ensure(l.bracket_table(1, 0) == Some(&reverse), || "reversed mixed bracket".into())?;
    ensure(l.bracket_table(1, 1).is_none(), || "unexpected [L-1, L-1]".into())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("2+1 dims, d = {}·delta1, {elapsed:.2?}", DIFFERENTIAL_SIGN))
}

fn axiom_suite() -> Outcome {
    let inputs = corpus(SEED);
    ensure(inputs.len() >= 20, || format!("only {} inputs", inputs.len()))?;
    let start = Instant::now();
    let mut checked = 0;
    for gen in &inputs {
        let g = simplicial(&gen.spec);
        let m = moore_complex(&g).map_err(|e| format!("{}: {e}", gen.name))?;
        let l = build_dgla(&g, &m).map_err(|e| format!("{}: {e}", gen.name))?;
        let r = verify_dgla(&l);
        ensure(r.axioms.is_empty(), || format!("{}: {}", gen.name, r.axioms))?;
        checked += r.checked.values().sum::<usize>();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} inputs, {checked} basis checks, {elapsed:.2?}", inputs.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut objects: Vec<(String, SimplicialLieAlgebra)> = corpus(SEED).into_iter().map(|g| (g.name.clone(), simplicial(&g.spec))).collect();
    let direct = length_three_inputs();
    let mut length_three = 0;
    for (name, g) in direct {
        if moore_complex(&g).map_err(|e| e.to_string())?.length() == 3 {
            length_three += 1;
        }
        objects.push((name, g));
    }
    ensure(length_three >= 3, || format!("only {length_three} inputs of Moore length 3"))?;
    let mut compared = 0;
    for (name, g) in &objects {
        let m = moore_complex(g).map_err(|e| format!("{name}: {e}"))?;
        let l = build_dgla(g, &m).map_err(|e| format!("{name}: {e}"))?;
        let r = oracle_compare(g, &m, &l).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.oracle.is_empty(), || format!("{name}: {}", r.oracle))?;
        compared += r.checked.get("oracle-bracket").copied().unwrap_or(0);
    }
    Ok(format!("{} inputs ({length_three} of Moore length 3), {compared} bracket entries", objects.len()))
}

fn moore_round_trip() -> Outcome {
    let (mut cms, mut twos) = (0, 0);
    for gen in corpus(SEED) {
        let g = simplicial(&gen.spec);
        let m = moore_complex(&g).map_err(|e| format!("{}: {e}", gen.name))?;
        let data = extract(&g, &m).map_err(|e| format!("{}: {e}", gen.name))?;
        let dims = m.dims();
        for n in 0..=TRUNCATION {
            let expected: usize = (0..=n).map(|j| binomial(n, j) * dims[j]).sum();
            ensure(g.dim(n) == expected, || format!("{}: dim g_{n} = {} != {expected}", gen.name, g.dim(n)))?;
        }
        match &gen.spec {
            Spec::Crossed(s) => {
                let back = CrossedModuleSpec::from_hypercrossed(&data).map_err(|e| format!("{}: {e}", gen.name))?;
                ensure(&back == s, || format!("{}: crossed module not recovered", gen.name))?;
                ensure(g.dim(2) == 2 * s.h.dim() + s.d.dim(), || format!("{}: dim g_2", gen.name))?;
                ensure(dims[2..].iter().all(|&d| d == 0), || format!("{}: N_2 != 0", gen.name))?;
                cms += 1;
            }
            Spec::TwoCrossed(s) => {
                let back = TwoCrossedModuleSpec::from_hypercrossed(&data).map_err(|e| format!("{}: {e}", gen.name))?;
                ensure(&back == s, || format!("{}: 2-crossed module not recovered", gen.name))?;
                ensure(dims[..3] == [s.k.dim(), s.d.dim(), s.h.dim()], || format!("{}: Moore dims {dims:?}", gen.name))?;
                ensure(dims[3..].iter().all(|&d| d == 0), || format!("{}: N_3 != 0", gen.name))?;
                twos += 1;
            }
        }
    }
    Ok(format!("{cms} crossed modules, {twos} 2-crossed modules"))
}

fn peiffer_bracket() -> Outcome {
    let g = from_two_crossed_module(&peiffer_fixture(), TRUNCATION).map_err(|e| e.to_string())?;
    let m = moore_complex(&g).map_err(|e| e.to_string())?;
    let l = build_dgla(&g, &m).map_err(|e| e.to_string())?;
    let t = l.bracket_table(1, 1).ok_or("no [L-1, L-1] table")?;
    // Frozen after the first oracle run.
    ensure(t.flat() == [Q::from_int(-2)], || format!("[D, D] = {:?}", t.flat()))?;
    let r = verify_dgla(&l);
    ensure(r.passed(), || r.axioms.to_string())?;
    Ok("[D, D] = -2X".into())
}

fn negative_tests() -> Outcome {
    let spec = crossed_module_fixture();
    let g = from_crossed_module(&spec, TRUNCATION).map_err(|e| e.to_string())?;
    let face = g.face(2, 1).scaled(&Q::from_int(2));
    let r = validate_simplicial(&g.clone().with_face(2, 1, face));
    let first = r.violations.first().ok_or("corrupted face accepted")?;
    ensure(!first.witness.is_empty(), || "simplicial violation without witness".into())?;
    let simp = format!("{} {:?}", first.law, first.witness);

    let mut bad = spec.clone();
    let e_on_x = bad.action.get(0, 0, 0) + &Q::one();
    bad.action.set(0, 0, &[e_on_x]);
    let r = validate_crossed_module(&bad);
    let first = r.violations.iter().find(|v| v.law.starts_with("CM-")).ok_or("corrupted action accepted")?;
    ensure(!first.witness.is_empty(), || "crossed module violation without witness".into())?;
    let cm = format!("{} {:?}", first.law, first.witness);

    let g = from_two_crossed_module(&peiffer_fixture(), TRUNCATION).map_err(|e| e.to_string())?;
    let m = moore_complex(&g).map_err(|e| e.to_string())?;
    let l = build_dgla(&g, &m).map_err(|e| e.to_string())?;
    let mut t = l.bracket_table(0, 1).cloned().unwrap_or_else(|| Tensor3::zeros(1, 1, 1));
    t.set(0, 0, &[t.get(0, 0, 0) + &Q::one()]);
    let r = verify_dgla(&l.with_bracket_table(0, 1, t));
    let first = r.axioms.violations.iter().find(|v| v.law == "jacobi" || v.law == "leibniz").ok_or("perturbed constant accepted")?;
    ensure(!first.witness.is_empty(), || "DGLA violation without witness".into())?;
    let dg = format!("{} {:?}", first.law, first.witness);
    Ok(format!("face: {simp}; action: {cm}; bracket: {dg}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("golden crossed module", golden_crossed_module),
        ("DGLA axiom suite", axiom_suite),
        ("oracle equivalence", oracle_equivalence),
        ("Moore round trip", moore_round_trip),
        ("degree -2 bracket", peiffer_bracket),
        ("negative tests", negative_tests),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({detail})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
