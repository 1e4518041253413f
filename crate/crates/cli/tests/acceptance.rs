//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simac::affine::elements_up_to_length;
use simac::charpoly::{demazure_word, rat};
use simac::macdonald::e_dagger_specialized;
use simac::weylchar::{default_beta, BaseSource, Engine};
use simac::{CharPoly, RootSystem, Specialization, Weight, WeylElement};

type Outcome = Result<String, String>;

fn wt(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn weights(rank: usize, max: i64) -> Vec<Weight> {
    siflag::suite::weights_up_to(rank, max)
}

struct Engines(BTreeMap<&'static str, Arc<Engine>>);

impl Engines {
    fn new() -> Self {
        let mut m = BTreeMap::new();
        for t in ["A1", "A2", "C2", "G2"] {
            let rs = RootSystem::new(t.parse().unwrap());
            m.insert(t, Arc::new(Engine::new(rs, BaseSource::Oracle)));
        }
        Engines(m)
    }

    fn get(&self, t: &str) -> &Engine {
        &self.0[t]
    }
}

fn first_diff(got: &CharPoly, expected: &CharPoly) -> Option<String> {
    got.first_difference(expected)
        .map(|(m, a, b)| format!("q^{} e^{}: got {a}, expected {b}", m.q, m.wt))
}

fn criterion1(en: &Engines) -> Outcome {
    let e = en.get("A1");
    let rs = e.root_system();
    let s1 = rs.simple_reflection(1);
    let l = wt(&[1]);
    let up = CharPoly::exp(wt(&[1]));
    let down = CharPoly::exp(wt(&[-1]));
    let checks = [
        ("genweyl(e)", e.genweyl_char(&rs.identity(), &l).map_err(|x| x.to_string())?.value, &up + &down.shift_q(1)),
        ("genweyl(s1)", e.genweyl_char(&s1, &l).map_err(|x| x.to_string())?.value, &up + &down),
        ("twisted(s1)", e.twisted_euler_char(&s1, &l, 20).map_err(|x| x.to_string())?.certified(), down.clone()),
    ];
    for (name, got, want) in &checks {
        if let Some(d) = first_diff(got, want) {
            return Err(format!("{name}: {d}"));
        }
    }
    let g = e.global_demazure_char(&s1, &l, 20).map_err(|x| x.to_string())?.value;
    let want: CharPoly = (0..=g.watermark()).fold(CharPoly::zero(), |acc, n| &acc + &(&up + &down).shift_q(n));
    if let Some(d) = first_diff(&g.certified(), &want) {
        return Err(format!("global(s1): {d}"));
    }
    Ok(format!("4 anchors, global watermark {}", g.watermark()))
}

fn random_probe(rng: &mut ChaCha8Rng, rank: usize) -> CharPoly {
    let terms = rng.gen_range(1..=4);
    (0..terms).fold(CharPoly::zero(), |acc, _| {
        let w: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        &acc + &CharPoly::term(rng.gen_range(0..=2), Weight(w), rat(c))
    })
}

fn criterion2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d0e5);
    let (mut elements, mut words) = (0, 0);
    for t in ["A1", "A2", "C2"] {
        let rs = RootSystem::new(t.parse().unwrap());
        for (x, _) in elements_up_to_length(&rs, 5) {
            let all = x.all_reduced_words(&rs);
            elements += 1;
            words += all.len();
            if all.len() < 2 {
                continue;
            }
            for _ in 0..20 {
                let f = random_probe(&mut rng, rs.rank());
                let first = demazure_word(&rs, &all[0], &f);
                for word in &all[1..] {
                    if let Some(d) = first_diff(&demazure_word(&rs, word, &f), &first) {
                        return Err(format!("{t} {word:?} vs {:?}: {d}", all[0]));
                    }
                }
            }
        }
    }
    Ok(format!("{elements} affine elements, {words} reduced words"))
}

fn criterion3(en: &Engines) -> Outcome {
    let cases: [(&str, Vec<Weight>); 4] = [
        ("A1", vec![wt(&[1]), wt(&[2]), wt(&[3])]),
        ("A2", vec![wt(&[1, 0]), wt(&[0, 1]), wt(&[1, 1]), wt(&[2, 0])]),
        ("C2", vec![wt(&[1, 0]), wt(&[0, 1])]),
        ("G2", vec![wt(&[1, 0]), wt(&[0, 1])]),
    ];
    let mut n = 0;
    for (t, ls) in &cases {
        let e = en.get(t);
        let beta = default_beta(e.root_system());
        for l in ls {
            let o = e.nmconn_check(l, &beta).map_err(|x| format!("{t} {l}: {x}"))?;
            if let Some(d) = o.first.as_ref().or(o.second.as_ref()) {
                return Err(format!("{t} {l}: {d}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} weights, both identities exact"))
}

fn criterion4(en: &Engines) -> Outcome {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let e = en.get(t);
        let rs = e.root_system();
        for l in weights(rs.rank(), 2) {
            for w in rs.minimal_coset_reps(&l).unwrap() {
                let got = e.cor_family_char(&w, &l).map_err(|x| x.to_string())?;
                let gamma = -&w.act(&l);
                let oracle = e_dagger_specialized(rs, &gamma, &[Specialization::TInfinity, Specialization::QInverse])
                    .map_err(|x| x.to_string())?;
                if let Some(d) = first_diff(&got, &oracle) {
                    return Err(format!("{t} {l} {}: {d}", rs.reduced_word_string(&w)));
                }
                n += 1;
            }
            let top = e.genweyl_char(&rs.longest_element(), &l).map_err(|x| x.to_string())?.value;
            let zero = e_dagger_specialized(rs, &-&l, &[Specialization::TZero]).map_err(|x| x.to_string())?;
            if let Some(d) = first_diff(&top, &zero) {
                return Err(format!("{t} {l} endpoint: {d}"));
            }
        }
    }
    Ok(format!("{n} (lambda, w) pairs plus endpoints"))
}

fn criterion5(en: &Engines) -> Outcome {
    let (mut loops, mut pairs) = (0, 0);
    for t in ["A1", "A2", "C2"] {
        let e = en.get(t);
        let rs = e.root_system();
        for l in weights(rs.rank(), 2) {
            for w in rs.minimal_coset_reps(&l).unwrap() {
                let name = rs.reduced_word_string(&w);
                for word in e.graph().minimal_loops(rs, &w) {
                    let o = e.difference_loop_check(&w, &l, &word, 20).map_err(|x| x.to_string())?;
                    if !o.passed() {
                        return Err(format!(
                            "{t} {l} {name} loop {word:?}: exponent {:?}, telescoped {}, {:?}",
                            o.exponent, o.telescoped, o.discrepancy.map(|d| d.to_string())
                        ));
                    }
                    loops += 1;
                }
                let (a, b) = e
                    .independent_loops(&w)
                    .map_err(|x| x.to_string())?
                    .ok_or_else(|| format!("{t} {name}: no independent loops"))?;
                if let Some(d) = e.loops_commute(&w, &l, &a, &b, 20).map_err(|x| x.to_string())? {
                    return Err(format!("{t} {l} {name}: loops {a:?}, {b:?} do not commute: {d}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{loops} loops, {pairs} commuting pairs"))
}

fn criterion6(en: &Engines) -> Outcome {
    let e = en.get("A2");
    let rs = e.root_system();
    let all: Vec<WeylElement> = rs.enumerate_weyl();
    let mut n = 0;
    for l in [wt(&[1, 0]), wt(&[0, 1]), wt(&[1, 1])] {
        for w in &all {
            for v in &all {
                if rs.length(&(w * v)) != rs.length(w) + rs.length(v) {
                    continue;
                }
                if let Some(d) = e.dmain_check(w, v, &l, 20).map_err(|x| x.to_string())? {
                    return Err(format!("{l} w={} v={}: {d}", rs.reduced_word_string(w), rs.reduced_word_string(v)));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} length-additive pairs"))
}

fn criterion7(en: &Engines) -> Outcome {
    let mut by_type: BTreeMap<&str, Vec<Weight>> = BTreeMap::new();
    by_type.insert("A1", weights(1, 3));
    by_type.insert("A2", weights(2, 2));
    by_type.insert("C2", weights(2, 2));
    by_type.insert("G2", vec![wt(&[1, 0]), wt(&[0, 1])]);
    let mut n = 0;
    for (t, ls) in by_type {
        let e = en.get(t);
        let rs = e.root_system();
        for l in ls {
            let dim = e.genweyl_char(&rs.identity(), &l).map_err(|x| x.to_string())?.dimension();
            for w in rs.enumerate_weyl() {
                let g = e.genweyl_char(&w, &l).map_err(|x| x.to_string())?;
                let name = rs.reduced_word_string(&w);
                if !g.is_graded_character() {
                    return Err(format!("{t} {l} {name}: negative or fractional coefficient"));
                }
                if !g.cyclic_coefficient().is_one() {
                    return Err(format!("{t} {l} {name}: cyclic coefficient {}", g.cyclic_coefficient()));
                }
                if g.dimension() != dim {
                    return Err(format!("{t} {l} {name}: dimension {} vs {dim}", g.dimension()));
                }
                n += 1;
            }
            for (w, f) in e.cor_family(&l).map_err(|x| x.to_string())?.iter() {
                if !f.is_integral() || !f.is_nonnegative() {
                    return Err(format!("{t} {l} {}: recursion output not positive", rs.reduced_word_string(w)));
                }
                let top: BigRational = f.coeff(0, &w.act(&l));
                if !top.is_one() {
                    return Err(format!("{t} {l}: extremal coefficient {top}"));
                }
            }
        }
    }
    Ok(format!("{n} characters"))
}

fn criterion8(en: &Engines) -> Outcome {
    let (mut covers, mut divided) = (0, 0);
    for t in ["A1", "A2"] {
        let e = en.get(t);
        for l in weights(e.root_system().rank(), 2) {
            let o = e.gnsmac_check(&l, 20).map_err(|x| x.to_string())?;
            if let Some((s, msg)) = o.failure {
                return Err(format!("{t} {l} cover s{}: {msg}", s.letter));
            }
            covers += o.covers;
            divided += o.divided;
        }
    }
    Ok(format!("{covers} covers, {divided} exact divisions"))
}

fn criterion9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("report{k}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_siflag"))
            .args(["verify", "--suite", "all", "--type", "A1", "--jobs", "8", "--out"])
            .arg(&path)
            .env_remove("SIMAC_TRUNC")
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("run {k} exited with {status}"));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if reports[0] != reports[1] {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", reports[0].len()))
}

fn main() -> ExitCode {
    let engines = Engines::new();
    let en = &engines;
    let jobs: Vec<(usize, Box<dyn Fn() -> Outcome + Sync + '_>)> = vec![
        (1, Box::new(move || criterion1(en))),
        (2, Box::new(criterion2)),
        (3, Box::new(move || criterion3(en))),
        (4, Box::new(move || criterion4(en))),
        (5, Box::new(move || criterion5(en))),
        (6, Box::new(move || criterion6(en))),
        (7, Box::new(move || criterion7(en))),
        (8, Box::new(move || criterion8(en))),
        (9, Box::new(criterion9)),
    ];
    let results: Vec<(usize, Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(k, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = f();
                    (*k, r, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for (k, r, secs) in results {
        match r {
            Ok(msg) => println!("criterion {k}: PASS ({msg}; {secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k}: FAIL ({msg}; {secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
