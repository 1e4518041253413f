//! Batch verification driver.

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use simac::macdonald::e_dagger_specialized;
use simac::weylchar::{default_beta, Engine, Result as WcResult};
use simac::{RootSystem, Specialization, Weight, WeylElement};

use crate::config::{RunConfig, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub suite: String,
    pub case: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub lambda: Vec<i64>,
    pub w: String,
    pub status: Status,
    pub first_discrepancy: Option<String>,
    pub output_digest: String,
    pub detail: String,
    #[serde(skip)]
    key: (Vec<i64>, usize, Suite, String),
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub max_weight: i64,
    pub trunc: i64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseRecord>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed > 0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone)]
enum Job {
    Nmconn(Weight),
    Cor(Weight, WeylElement),
    Endpoint(Weight),
    Loop(Weight, WeylElement, Vec<usize>),
    Commute(Weight, WeylElement),
    Dmain(Weight, WeylElement, WeylElement),
    Gnsmac(Weight),
}

struct Outcome {
    case: String,
    w: WeylElement,
    discrepancy: Option<String>,
    output: String,
    detail: String,
}

fn digest(s: &str) -> String {
    hex::encode(&Sha256::digest(s.as_bytes())[..8])
}

/// Dominant weights with coordinate sum in `1..=max`, lexicographically.
pub fn weights_up_to(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    loop {
        let s: i64 = cur.iter().sum();
        if s >= 1 && s <= max {
            out.push(Weight(cur.clone()));
        }
        let mut k = rank;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur.iter().sum::<i64>() <= max.max(0) {
                break;
            }
            cur[k] = 0;
        }
    }
}

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

fn coset_reps(rs: &RootSystem, lambda: &Weight) -> Vec<WeylElement> {
    let mut reps = rs.minimal_coset_reps(lambda).unwrap_or_default();
    reps.sort_by_key(|w| (rs.length(w), rs.reduced_word(w)));
    reps
}

fn jobs_for(rs: &RootSystem, engine: &Engine, suite: Suite, lambda: &Weight) -> Vec<Job> {
    let mut out = Vec::new();
    match suite {
        Suite::Nmconn => out.push(Job::Nmconn(lambda.clone())),
        Suite::Cor => {
            for w in coset_reps(rs, lambda) {
                out.push(Job::Cor(lambda.clone(), w));
            }
            if rs.rank() <= 2 {
                out.push(Job::Endpoint(lambda.clone()));
            }
        }
        Suite::Fdif => {
            for w in coset_reps(rs, lambda) {
                for word in engine.graph().minimal_loops(rs, &w) {
                    out.push(Job::Loop(lambda.clone(), w.clone(), word));
                }
                out.push(Job::Commute(lambda.clone(), w));
            }
        }
        Suite::Dmain => {
            let mut all = rs.enumerate_weyl();
            all.sort_by_key(|w| (rs.length(w), rs.reduced_word(w)));
            for w in &all {
                for v in &all {
                    if rs.length(&(w * v)) == rs.length(w) + rs.length(v) {
                        out.push(Job::Dmain(lambda.clone(), w.clone(), v.clone()));
                    }
                }
            }
        }
        Suite::Gnsmac => out.push(Job::Gnsmac(lambda.clone())),
        Suite::All => {}
    }
    out
}

fn run_job(cfg: &RunConfig, engine: &Engine, job: &Job) -> WcResult<Outcome> {
    let rs = engine.root_system();
    let n = cfg.trunc;
    let name = |w: &WeylElement| rs.reduced_word_string(w);
    Ok(match job {
        Job::Nmconn(lambda) => {
            let beta = cfg.beta.clone().unwrap_or_else(|| default_beta(rs));
            let o = engine.nmconn_check(lambda, &beta)?;
            let discrepancy = match (&o.first, &o.second) {
                (Some(d), _) => Some(format!("first identity: {d}")),
                (None, Some(d)) => Some(format!("second identity: {d}")),
                (None, None) => None,
            };
            Outcome {
                case: format!("beta={}", o.beta),
                w: rs.longest_element(),
                discrepancy,
                output: format!("{:?} {}", o.word, o.exponent),
                detail: format!("exponent={} word={}", o.exponent, word_name(&o.word)),
            }
        }
        Job::Cor(lambda, w) => {
            let cor = engine.cor_family_char(w, lambda)?;
            let g = engine.genweyl_char(w, lambda)?;
            let dim = engine.genweyl_char(&rs.identity(), lambda)?.dimension();
            let mut problems = Vec::new();
            if rs.rank() <= 2 {
                let gamma = -&w.act(lambda);
                let oracle = e_dagger_specialized(rs, &gamma, &[Specialization::TInfinity, Specialization::QInverse])?;
                if let Some((m, a, b)) = cor.first_difference(&oracle) {
                    problems.push(format!("oracle: q^{} e^{}: got {a}, expected {b}", m.q, m.wt));
                }
            }
            if !cor.is_integral() || !cor.is_nonnegative() {
                problems.push("recursion output is not a graded character".into());
            }
            if !g.is_graded_character() {
                problems.push("generalized Weyl character is not a graded character".into());
            }
            if !g.cyclic_coefficient().is_one() {
                problems.push(format!("cyclic coefficient {}", g.cyclic_coefficient()));
            }
            if g.dimension() != dim {
                problems.push(format!("dimension {} differs from {dim}", g.dimension()));
            }
            Outcome {
                case: "recursion".into(),
                w: w.clone(),
                discrepancy: problems.first().cloned(),
                output: format!("{cor} | {}", g.value),
                detail: format!("dimension={} terms={}", g.dimension(), cor.len()),
            }
        }
        Job::Endpoint(lambda) => {
            let w0 = rs.longest_element();
            let g = engine.genweyl_char(&w0, lambda)?;
            let zero = e_dagger_specialized(rs, &-lambda, &[Specialization::TZero])?;
            Outcome {
                case: "endpoint q,0".into(),
                w: g.w.clone(),
                discrepancy: g
                    .value
                    .first_difference(&zero)
                    .map(|(m, a, b)| format!("q^{} e^{}: got {a}, expected {b}", m.q, m.wt)),
                output: g.value.to_string(),
                detail: format!("terms={}", g.value.len()),
            }
        }
        Job::Loop(lambda, w, word) => {
            let o = engine.difference_loop_check(w, lambda, word, n)?;
            let discrepancy = match (&o.discrepancy, o.exponent) {
                (Some(d), _) => Some(d.to_string()),
                (None, Some(e)) if e != o.telescoped => Some(format!("exponent {e}, telescoped {}", o.telescoped)),
                (None, None) => Some("no certified terms".into()),
                _ => None,
            };
            let exp = o.exponent.map_or("none".into(), |e| e.to_string());
            Outcome {
                case: format!("loop {}", word_name(word)),
                w: w.clone(),
                discrepancy,
                output: format!("{exp} {} {}", o.telescoped, o.watermark),
                detail: format!(
                    "exponent={exp} telescoped={} translation={} pairing={} watermark={}",
                    o.telescoped, o.translation, o.translation_pairing, o.watermark
                ),
            }
        }
        Job::Commute(lambda, w) => {
            let pair = engine.independent_loops(w)?;
            let (discrepancy, detail) = match &pair {
                Some((a, b)) => (
                    engine.loops_commute(w, lambda, a, b, n)?.map(|d| d.to_string()),
                    format!("loops {} | {}", word_name(a), word_name(b)),
                ),
                None => (Some("no pair of independent loops".into()), String::new()),
            };
            Outcome { case: "commute".into(), w: w.clone(), discrepancy, output: detail.clone(), detail }
        }
        Job::Dmain(lambda, w, v) => {
            let d = engine.dmain_check(w, v, lambda, n)?;
            let wv = w * v;
            Outcome {
                case: format!("D_{{{}}} on {}", name(w), name(v)),
                w: wv,
                discrepancy: d.map(|d| d.to_string()),
                output: format!("{} {}", name(w), name(v)),
                detail: format!("w={} v={}", name(w), name(v)),
            }
        }
        Job::Gnsmac(lambda) => {
            let o = engine.gnsmac_check(lambda, n)?;
            let discrepancy = o.failure.as_ref().map(|(s, msg)| {
                format!("cover s{} {} -> {}: {msg}", s.letter, name(&s.source), name(&s.target))
            });
            Outcome {
                case: "covers".into(),
                w: rs.identity(),
                discrepancy,
                output: format!("{} {}", o.covers, o.divided),
                detail: format!("covers={} divided={}", o.covers, o.divided),
            }
        }
    })
}

fn suite_of(job: &Job) -> Suite {
    match job {
        Job::Nmconn(_) => Suite::Nmconn,
        Job::Cor(..) | Job::Endpoint(_) => Suite::Cor,
        Job::Loop(..) | Job::Commute(..) => Suite::Fdif,
        Job::Dmain(..) => Suite::Dmain,
        Job::Gnsmac(_) => Suite::Gnsmac,
    }
}

fn lambda_of(job: &Job) -> &Weight {
    match job {
        Job::Nmconn(l) | Job::Endpoint(l) | Job::Gnsmac(l) => l,
        Job::Cor(l, _) | Job::Loop(l, ..) | Job::Commute(l, _) | Job::Dmain(l, ..) => l,
    }
}

fn record(cfg: &RunConfig, engine: &Engine, job: &Job) -> CaseRecord {
    let rs = engine.root_system();
    let suite = suite_of(job);
    let lambda = lambda_of(job).clone();
    let (case, w, status, first_discrepancy, output, detail) = match run_job(cfg, engine, job) {
        Ok(o) => {
            let status = if o.discrepancy.is_none() { Status::Pass } else { Status::Fail };
            (o.case, o.w, status, o.discrepancy, o.output, o.detail)
        }
        Err(e) => {
            let w = match job {
                Job::Cor(_, w) | Job::Loop(_, w, _) | Job::Commute(_, w) => w.clone(),
                Job::Dmain(_, w, v) => w * v,
                _ => rs.identity(),
            };
            ("error".into(), w, Status::Fail, Some(e.to_string()), e.to_string(), String::new())
        }
    };
    CaseRecord {
        suite: suite.name().into(),
        case: case.clone(),
        ty: rs.cartan_type().to_string(),
        lambda: lambda.0.clone(),
        w: rs.reduced_word_string(&w),
        status,
        first_discrepancy,
        output_digest: digest(&output),
        detail,
        key: (lambda.0, rs.length(&w), suite, case),
    }
}

/// Runs every case of the selected suites and returns the sorted report.
pub fn run_suite(cfg: &RunConfig) -> Report {
    let rs = &cfg.root_system;
    let engine = Engine::new(rs.clone(), cfg.base);
    let lambdas = match &cfg.lambda {
        Some(l) => vec![l.clone()],
        None => weights_up_to(rs.rank(), cfg.max_weight),
    };
    let jobs: Vec<Job> = cfg
        .suite
        .members()
        .into_iter()
        .flat_map(|s| lambdas.iter().flat_map(|l| jobs_for(rs, &engine, s, l)).collect::<Vec<_>>())
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().expect("thread pool");
    let mut cases: Vec<CaseRecord> = pool.install(|| {
        // one base per weight up front so workers do not race on the oracle
        lambdas.par_iter().for_each(|l| {
            let _ = engine.base(l);
        });
        jobs.par_iter().map(|j| record(cfg, &engine, j)).collect()
    });
    cases.sort_by(|a, b| a.key.cmp(&b.key));
    let failed = cases.iter().filter(|c| c.status == Status::Fail).count();
    Report {
        suite: cfg.suite.name().into(),
        ty: rs.cartan_type().to_string(),
        max_weight: cfg.max_weight,
        trunc: cfg.trunc,
        passed: cases.len() - failed,
        failed,
        cases,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumeration() {
        assert_eq!(weights_up_to(1, 3), vec![Weight(vec![1]), Weight(vec![2]), Weight(vec![3])]);
        let a2 = weights_up_to(2, 2);
        assert_eq!(a2.len(), 5);
        assert_eq!(a2[0], Weight(vec![0, 1]));
        assert!(weights_up_to(2, 0).is_empty());
    }
}
