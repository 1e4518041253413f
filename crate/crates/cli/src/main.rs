use std::process::ExitCode;

use serde_json::json;
use siflag::config::{Command, RunConfig};
use siflag::{emit, parse_args, run_suite, ConfigError, Format};
use simac::macdonald::{gram_schmidt_e, GsOptions};
use simac::weylchar::Engine;

type BoxError = Box<dyn std::error::Error>;

fn roots(cfg: &RunConfig) -> String {
    let rs = &cfg.root_system;
    let v = json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "Cartan": rs.cartan(),
        "pos_roots": rs.positive_roots(),
        "theta": rs.theta_root(),
    });
    serde_json::to_string_pretty(&v).expect("json")
}

fn qbruhat(cfg: &RunConfig) -> Result<String, BoxError> {
    let rs = &cfg.root_system;
    let engine = Engine::new(rs.clone(), cfg.base);
    let g = engine.graph();
    if cfg.from.is_some() || cfg.to.is_some() {
        let from = cfg.from.clone().unwrap_or_else(|| rs.identity());
        let to = cfg.to.clone().unwrap_or_else(|| rs.longest_element());
        let seq = g.adapted_sequence(rs, &from, &to)?;
        let text = seq.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ");
        return Ok(match cfg.format {
            Format::Json => json!({
                "from": rs.reduced_word_string(&from),
                "to": rs.reduced_word_string(&to),
                "sequence": seq,
            })
            .to_string(),
            _ => text,
        });
    }
    let edges = g.edge_list();
    Ok(match cfg.format {
        Format::Json => {
            let list: Vec<_> = edges
                .iter()
                .map(|&(s, i, t)| {
                    json!({
                        "source": rs.reduced_word_string(rs.element(s)),
                        "letter": i,
                        "target": rs.reduced_word_string(rs.element(t)),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&list)?
        }
        _ => edges
            .iter()
            .map(|&(s, i, t)| {
                format!("{} -{i}-> {}", rs.reduced_word_string(rs.element(s)), rs.reduced_word_string(rs.element(t)))
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn emac(cfg: &RunConfig) -> Result<String, BoxError> {
    let gamma = cfg.need_gamma()?;
    let mut e = gram_schmidt_e(&cfg.root_system, gamma, GsOptions::default())?;
    if cfg.dagger {
        e = e.bar();
    }
    if cfg.specs.is_empty() {
        return Ok(emit::epoly(&e, cfg.format));
    }
    Ok(emit::poly(&e.specialize(&cfg.specs)?, cfg.format))
}

fn run(cfg: &RunConfig) -> Result<(String, u8), BoxError> {
    let rs = &cfg.root_system;
    let w = cfg.w.clone().unwrap_or_else(|| rs.identity());
    Ok(match cfg.command {
        Command::Roots => (roots(cfg), 0),
        Command::Qbruhat => (qbruhat(cfg)?, 0),
        Command::Emac => (emac(cfg)?, 0),
        Command::Weylchar => {
            let engine = Engine::new(rs.clone(), cfg.base);
            let lambda = cfg.need_lambda()?;
            let text = if cfg.global {
                emit::series(&engine.global_demazure_char(&w, lambda, cfg.trunc)?.value, cfg.format)
            } else {
                emit::poly(&engine.genweyl_char(&w, lambda)?.value, cfg.format)
            };
            (text, 0)
        }
        Command::Twisted => {
            let engine = Engine::new(rs.clone(), cfg.base);
            let lambda = cfg.need_lambda()?;
            (emit::series(&engine.twisted_euler_char(&w, lambda, cfg.trunc)?, cfg.format), 0)
        }
        Command::Verify => {
            let report = run_suite(cfg);
            let json = report.to_json();
            let code = report.exit_code() as u8;
            match &cfg.out {
                Some(path) => {
                    std::fs::write(path, &json)?;
                    (format!("{} passed, {} failed", report.passed, report.failed), code)
                }
                None => (json.trim_end().to_string(), code),
            }
        }
    })
}

fn main() -> ExitCode {
    let cfg = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(ConfigError::Usage(e)) => e.exit(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cfg) {
        Ok((text, code)) => {
            println!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
