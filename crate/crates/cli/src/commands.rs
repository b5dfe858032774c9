use std::fs;

use qpart_core::exactnum::text::format_rational;
use qpart_core::gausspoly::max_location;
use qpart_core::verify::{self, Level};
use qpart_core::vpf::count_solutions;
use qpart_core::{
    cayley_reduce, chamber_walls, closed_max, eulerian_a, eulerian_b, gauss_chamber, gauss_coeff,
    leading_term, max_coeff, partition_dp, poly_part_gauss, poly_part_max, slack_reduce,
    vpf_cayley, vpf_oracle, ClosedForm, DoubleSystem, GaussEngine, GeneratorSet, Integer, Parity,
    SystemFile,
};
use serde_json::json;

use crate::render::Rendered;
use crate::{Command, EulerianType, ParityArg, Size};

type Outcome = Result<(Rendered, bool), String>;

fn narrow<T>(v: &Integer, flag: &str) -> Result<T, String>
where
    T: for<'a> TryFrom<&'a Integer>,
{
    T::try_from(v).map_err(|_| format!("--{flag} = {v} is outside the supported range"))
}

fn size(size: &Size) -> Result<(u32, u32), String> {
    Ok((narrow(&size.m, "m")?, narrow(&size.n, "n")?))
}

fn domain<T>(r: qpart_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ok(rendered: Rendered) -> Outcome {
    Ok((rendered, true))
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Partition { gens, form, s } => partition(gens, form, &s),
        Command::Vpf {
            matrix,
            rhs,
            terms,
            walls,
        } => {
            let text = fs::read_to_string(&matrix)
                .map_err(|e| format!("cannot read {}: {e}", matrix.display()))?;
            let mut file: SystemFile =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", matrix.display()))?;
            if let Some(rhs) = rhs {
                file.rhs = rhs
                    .iter()
                    .map(|v| narrow(v, "rhs"))
                    .collect::<Result<_, _>>()?;
            }
            vpf(&file, terms, walls)
        }
        Command::Gauss(args) => {
            let (m, n) = size(&args.size)?;
            match args.s {
                Some(s) => {
                    let s: i64 = narrow(&s, "s")?;
                    let v = gauss_coeff(m, n, s).to_string();
                    ok(Rendered::scalar(
                        "coeff",
                        v.clone(),
                        json!({"m": m, "n": n, "s": s, "coeff": v}),
                    ))
                }
                None => {
                    let row = GaussEngine::new(m, n).row();
                    let text: Vec<String> = row.iter().map(ToString::to_string).collect();
                    ok(Rendered {
                        plain: text.join(" "),
                        json: json!(text),
                        csv_header: vec!["s", "coeff"],
                        csv_rows: text
                            .iter()
                            .enumerate()
                            .map(|(s, v)| vec![s.to_string(), v.clone()])
                            .collect(),
                    })
                }
            }
        }
        Command::Chamber { size: sz, r, s } => {
            let (m, n) = size(&sz)?;
            let (r, s): (u32, i64) = (narrow(&r, "r")?, narrow(&s, "s")?);
            let v = domain(gauss_chamber(m, n, r, s))?.to_string();
            ok(Rendered::scalar(
                "value",
                v.clone(),
                json!({"m": m, "n": n, "r": r, "s": s, "value": v}),
            ))
        }
        Command::Maxcoeff { size: sz } => {
            let (m, n) = size(&sz)?;
            let v = domain(max_coeff(m, n))?.to_string();
            let (chamber, s) = max_location(m, n);
            let closed = closed_max(m, i64::from(n)).ok().map(|q| format_rational(&q));
            ok(Rendered {
                plain: v.clone(),
                json: json!({"m": m, "n": n, "chamber": chamber, "s": s, "value": v, "closed": closed}),
                csv_header: vec!["m", "n", "chamber", "s", "value"],
                csv_rows: vec![vec![
                    m.to_string(),
                    n.to_string(),
                    chamber.to_string(),
                    s.to_string(),
                    v,
                ]],
            })
        }
        Command::Polypart { m, r, parity } => {
            let m: u32 = narrow(&m, "m")?;
            match r {
                Some(r) => {
                    let p = domain(poly_part_gauss(m, narrow(&r, "r")?))?;
                    ok(Rendered {
                        plain: p.to_string(),
                        json: serde_json::to_value(&p).map_err(|e| e.to_string())?,
                        csv_header: vec!["deg_n", "deg_s", "coeff"],
                        csv_rows: p
                            .terms()
                            .iter()
                            .map(|((dn, ds), c)| vec![dn.to_string(), ds.to_string(), format_rational(c)])
                            .collect(),
                    })
                }
                None => {
                    let parity = match parity {
                        ParityArg::Even => Parity::Even,
                        ParityArg::Odd => Parity::Odd,
                    };
                    let p = domain(poly_part_max(m, parity))?;
                    ok(Rendered {
                        plain: p.to_string(),
                        json: serde_json::to_value(&p).map_err(|e| e.to_string())?,
                        csv_header: vec!["degree", "coeff"],
                        csv_rows: p
                            .polynomial
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(k, c)| vec![k.to_string(), format_rational(c)])
                            .collect(),
                    })
                }
            }
        }
        Command::Leading { m } => {
            let lead = domain(leading_term(narrow(&m, "m")?))?;
            let c = format_rational(&lead.coefficient);
            ok(Rendered {
                plain: format!("{c}*{}^{}", lead.variable.name(), lead.exponent),
                json: serde_json::to_value(&lead).map_err(|e| e.to_string())?,
                csv_header: vec!["coefficient", "variable", "exponent", "eulerian"],
                csv_rows: vec![vec![
                    c,
                    lead.variable.name().to_string(),
                    lead.exponent.to_string(),
                    lead.eulerian.to_string(),
                ]],
            })
        }
        Command::Eulerian { n, k, kind } => {
            let n: u32 = narrow(&n, "n")?;
            let value = |k: u32| match kind {
                EulerianType::A => eulerian_a(n, k),
                EulerianType::B => eulerian_b(n, k),
            };
            match k {
                Some(k) => {
                    let k: u32 = narrow(&k, "k")?;
                    let v = value(k).to_string();
                    ok(Rendered::scalar("value", v.clone(), json!({"n": n, "k": k, "value": v})))
                }
                None => {
                    let last = match kind {
                        EulerianType::A => n + 1,
                        EulerianType::B => n,
                    };
                    let row: Vec<String> = (0..=last).map(|k| value(k).to_string()).collect();
                    ok(Rendered {
                        plain: row.join(" "),
                        json: json!(row),
                        csv_header: vec!["k", "value"],
                        csv_rows: row
                            .iter()
                            .enumerate()
                            .map(|(k, v)| vec![k.to_string(), v.clone()])
                            .collect(),
                    })
                }
            }
        }
        Command::Verify {
            full, criterion, ..
        } => {
            let level = if full { Level::Full } else { Level::Quick };
            let report = match criterion {
                Some(id) => verify::Report {
                    level,
                    criteria: verify::run_criterion(id, level).into_iter().collect(),
                },
                None => verify::run(level),
            };
            let passed = report.passed();
            Ok((
                Rendered {
                    plain: report.to_string(),
                    json: serde_json::to_value(&report).map_err(|e| e.to_string())?,
                    csv_header: vec!["criterion", "passed", "checks", "failed", "millis"],
                    csv_rows: report
                        .criteria
                        .iter()
                        .map(|c| {
                            vec![
                                c.id.to_string(),
                                c.passed.to_string(),
                                c.checks.to_string(),
                                c.failure_count.to_string(),
                                c.millis.to_string(),
                            ]
                        })
                        .collect(),
                },
                passed,
            ))
        }
    }
}

fn partition(gens: Option<Vec<Integer>>, form: Option<String>, s: &Integer) -> Outcome {
    let s: i64 = narrow(s, "s")?;
    let (label, value) = match form {
        Some(name) => {
            let form: ClosedForm = domain(name.parse())?;
            let v = form.quasipolynomial().evaluate(s);
            (json!({"form": form.name()}), format_rational(&v))
        }
        None => {
            let gens: Vec<i64> = gens
                .unwrap_or_default()
                .iter()
                .map(|g| narrow(g, "gens"))
                .collect::<Result<_, _>>()?;
            let d = domain(GeneratorSet::new(gens.clone()))?;
            let v = if s < 0 {
                Integer::default()
            } else {
                let table = domain(partition_dp(&d, narrow(&Integer::from(s), "s")?))?;
                domain(table.value(s))?
            };
            (json!({"gens": gens}), v.to_string())
        }
    };
    let mut json = label;
    json["s"] = json!(s);
    json["value"] = json!(value);
    ok(Rendered {
        plain: value.clone(),
        json,
        csv_header: vec!["s", "value"],
        csv_rows: vec![vec![s.to_string(), value]],
    })
}

fn vpf(file: &SystemFile, terms: bool, walls: bool) -> Outcome {
    if file.ineq_rhs.is_some() {
        let ineq = domain(file.inequality_system())?;
        let eq = slack_reduce(&ineq);
        let v = domain(count_solutions(&eq))?.to_string();
        let mut json = json!({"equalities": eq, "value": v});
        if let Ok(sys) = DoubleSystem::from_rows(&eq.matrix, &eq.rhs) {
            json["reduction"] = json!(domain(vpf_cayley(&sys))?.to_string());
        }
        return ok(Rendered::scalar("value", v, json));
    }
    let sys = domain(file.double_system())?;
    if walls {
        let walls = domain(chamber_walls(&sys))?;
        return ok(Rendered {
            plain: walls
                .iter()
                .map(|w| {
                    let mut tags = Vec::new();
                    if !w.reduced {
                        tags.push("dropped");
                    }
                    if w.interior {
                        tags.push("interior");
                    }
                    format!("column {} slope {} {}", w.column, w.slope, tags.join(" "))
                        .trim_end()
                        .to_string()
                })
                .collect::<Vec<_>>()
                .join("\n"),
            json: serde_json::to_value(&walls).map_err(|e| e.to_string())?,
            csv_header: vec!["column", "slope", "reduced", "interior"],
            csv_rows: walls
                .iter()
                .map(|w| {
                    vec![
                        w.column.to_string(),
                        w.slope.to_string(),
                        w.reduced.to_string(),
                        w.interior.to_string(),
                    ]
                })
                .collect(),
        });
    }
    let v = domain(vpf_cayley(&sys))?;
    let oracle = vpf_oracle(&sys);
    if v != oracle {
        return Err(format!("reduction gives {v}, direct count gives {oracle}"));
    }
    let v = v.to_string();
    let mut json = json!({"matrix": [sys.top(), sys.bottom()], "rhs": [sys.rhs().0, sys.rhs().1], "value": v});
    let mut plain = v.clone();
    if terms {
        let list = domain(cayley_reduce(&sys))?;
        for t in &list {
            plain.push_str(&format!(
                "\n  term {}: L = {}, d = {}{}{}",
                t.index,
                t.l_value,
                t.generators,
                if t.active { "" } else { " (inactive)" },
                t.congruence
                    .as_ref()
                    .map(|c| format!(", weights {:?} = {} mod {}", c.weights, c.target, c.modulus))
                    .unwrap_or_default()
            ));
        }
        json["terms"] = serde_json::to_value(&list).map_err(|e| e.to_string())?;
    }
    ok(Rendered {
        plain,
        json,
        csv_header: vec!["r", "rho", "value"],
        csv_rows: vec![vec![sys.rhs().0.to_string(), sys.rhs().1.to_string(), v]],
    })
}
