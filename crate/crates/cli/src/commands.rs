use std::path::Path;

use serde_json::{json, Map, Value};

use polymix::arith::{parse_rat, rat_string};
use polymix::geometry::{project, shadow, Subspace};
use polymix::grids::{uniform_grid, verification_directions, DEFAULT_DIRECTION_SEED};
use polymix::homothety::{
    default_test_bodies, detect_homothety, functional_equality_sweep, homothetic_projections_conclude,
    rogers_normalize, scale_free_sweep, AbsenceReason, EqualityCaseTrace, EqualityConclusion, Evidence, Homothety,
    HomothetyWitness, ProjectionConclusion, Refutation,
};
use polymix::inequality::{bm_check_digits, minkowski_check, normalized_check, InequalityReport, Verdict};
use polymix::minkowski::{mixed_volume_base_height, mixed_volume_interp, volume};
use polymix::random::{seeded, Sampler};
use polymix::reconstruct::{corner_normalize, recover_on_grid, translates_decision};
use polymix::steiner::{default_schedule, rounding_iteration, steiner_symmetral, steiner_symmetral_triangulated};
use polymix::{Direction, Exec, Polytope, Rat, Vector};

use crate::args::{Cli, Command, FormArg, Method};
use crate::bodyfile::{body_to_json, load, serialize_body, Load, LoadedBody};
use crate::error::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn rat(r: &Rat) -> Value {
    Value::String(rat_string(r))
}

fn vector(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(rat).collect())
}

fn parse_scalar(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| CliError::Usage(format!("not a rational: {s:?}")))
}

fn parse_vector(s: &str) -> Result<Vector> {
    Ok(Vector::new(s.split(',').map(parse_scalar).collect::<Result<_>>()?))
}

fn parse_direction(s: &str) -> Result<Direction> {
    Ok(Direction::new(parse_vector(s)?)?)
}

fn parse_directions(s: &str) -> Result<Vec<Direction>> {
    s.split(';').map(parse_direction).collect()
}

/// `"k/N"` for `k = 0..=N`, or a comma list of rationals.
pub fn parse_lambda_grid(s: &str) -> Result<Vec<Rat>> {
    if let Some(n) = s.trim().strip_prefix("k/") {
        let n: i64 = n
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("bad grid {s:?}")))?;
        return Ok(uniform_grid(n));
    }
    s.split(',').map(parse_scalar).collect()
}

struct Report(Map<String, Value>);

impl Report {
    fn new(command: &str, inputs: &[(&Path, &LoadedBody)]) -> Report {
        let mut m = Map::new();
        m.insert("command".into(), json!(command));
        let inputs: Vec<Value> = inputs
            .iter()
            .map(|(p, b)| json!({ "path": p.display().to_string(), "sha256": b.sha256 }))
            .collect();
        m.insert("inputs".into(), Value::Array(inputs));
        Report(m)
    }

    fn set(&mut self, key: &str, v: Value) -> &mut Self {
        self.0.insert(key.into(), v);
        self
    }

    fn finish(self) -> String {
        let mut s = serde_json::to_string_pretty(&Value::Object(self.0)).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn execute(cli: &Cli) -> Result<String> {
    let digits = cli.digits;
    match &cli.command {
        Command::Volume { body } => {
            let k = load(body, Load::Strict)?;
            let mut r = Report::new("volume", &[(body, &k)]);
            r.set("volume", rat(&volume(&k.body)))
                .set("dim", json!(k.body.dim()))
                .set("vertex_count", json!(k.body.vertices().len()))
                .set("facet_count", json!(k.body.facets().len()));
            Ok(r.finish())
        }
        Command::Mixedvol { a, b, method } => {
            let (ka, kb) = (load(a, Load::Permissive)?, load(b, Load::Permissive)?);
            let mut r = Report::new("mixedvol", &[(a, &ka), (b, &kb)]);
            let bh = || mixed_volume_base_height(&ka.body, &kb.body).map(|m| m.value);
            let ip = || mixed_volume_interp(&ka.body, &kb.body).map(|m| m.value);
            match method {
                Method::BaseHeight => {
                    r.set("base_height", rat(&bh()?));
                }
                Method::Interp => {
                    r.set("interp", rat(&ip()?));
                }
                Method::Both => {
                    let (x, y) = (bh()?, ip()?);
                    r.set("base_height", rat(&x)).set("interp", rat(&y)).set("agree", json!(x == y));
                }
            }
            Ok(r.finish())
        }
        Command::Check { a, b, form, lambda } => {
            let (ka, kb) = (load(a, Load::Permissive)?, load(b, Load::Permissive)?);
            let report = match form {
                FormArg::Bm => {
                    let l = lambda
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--lambda is required for --form bm".into()))?;
                    bm_check_digits(&ka.body, &kb.body, &parse_scalar(l)?, digits)?
                }
                FormArg::Mmv => minkowski_check(&ka.body, &kb.body)?,
                FormArg::Mmv1 => normalized_check(&ka.body, &kb.body)?,
            };
            let mut r = Report::new("check", &[(a, &ka), (b, &kb)]);
            inequality_fields(&mut r, &report, digits);
            if *form == FormArg::Mmv1 {
                r.set("quotient", json!(report.lhs.to_string()));
            }
            if report.verdict == Verdict::Violation {
                return Err(violation("check", &[&ka.body, &kb.body], r.0, None));
            }
            Ok(r.finish())
        }
        Command::Diagnose { a, b, lambda_grid, seed } => diagnose(a, b, lambda_grid, seed.unwrap_or(DEFAULT_DIRECTION_SEED)),
        Command::RandomBody { dim, vertices, seed } => {
            let dim = *dim as usize;
            if *vertices < dim + 1 {
                return Err(CliError::Usage(format!("--vertices must be at least {}", dim + 1)));
            }
            let body = Sampler::default().polytope(&mut seeded(*seed), dim, *vertices);
            Ok(serialize_body(&body))
        }
        Command::Project { body, direction, basis } => {
            let k = load(body, Load::Permissive)?;
            let p = match (direction, basis) {
                (Some(d), _) => shadow(&k.body, &parse_direction(d)?)?,
                (None, Some(b)) => {
                    let vs = b.split(';').map(parse_vector).collect::<Result<Vec<_>>>()?;
                    project(&k.body, &Subspace::new(vs)?)?
                }
                (None, None) => unreachable!("clap enforces the argument group"),
            };
            let mut r = Report::new("project", &[(body, &k)]);
            r.set("body", body_to_json(&p.body))
                .set("basis", Value::Array(p.subspace.basis().iter().map(vector).collect()))
                .set("squared_volume", rat(&p.squared_volume()))
                .set("affine_dim", json!(p.body.affine_dim()))
                .set("degenerate", json!(p.is_degenerate()));
            Ok(r.finish())
        }
        Command::Steiner {
            body,
            direction,
            steps,
            schedule,
            triangulated,
        } => {
            let k = load(body, Load::Strict)?;
            let mut r = Report::new("steiner", &[(body, &k)]);
            if let Some(d) = direction {
                let w = parse_direction(d)?;
                let s = if *triangulated {
                    steiner_symmetral_triangulated(&k.body, &w)?
                } else {
                    steiner_symmetral(&k.body, &w)?
                };
                r.set("direction", vector(w.vector()))
                    .set("exactness", json!(format!("{:?}", s.exactness)))
                    .set("volume_before", rat(&volume(&k.body)))
                    .set("volume_after", rat(&volume(&s.symmetral)))
                    .set("symmetral", body_to_json(&s.symmetral));
            } else {
                let sched = match schedule {
                    Some(s) => parse_directions(s)?,
                    None => default_schedule(),
                };
                let tr = rounding_iteration(&k.body, &sched, steps.unwrap_or(0))?;
                let rows: Vec<Value> = tr
                    .steps
                    .iter()
                    .map(|s| {
                        json!({
                            "step": s.step,
                            "direction": vector(s.direction.vector()),
                            "volume": rat(&s.volume),
                            "isoperimetric_ratio": format!("{:.12}", s.isoperimetric_ratio),
                        })
                    })
                    .collect();
                r.set("trace", Value::Array(rows)).set("body", body_to_json(&tr.body));
            }
            Ok(r.finish())
        }
        Command::Reconstruct { body, other } => {
            let k = load(body, Load::Strict)?;
            let grid = polymix::grids::farey_direction_grid();
            let c = corner_normalize(&k.body)?;
            let h = recover_on_grid(Exec::default(), &c.body, &grid)?;
            let mut all_agree = true;
            let rows: Vec<Value> = grid
                .iter()
                .zip(&h)
                .map(|(w, rec)| {
                    let direct = c.body.support(w).expect("planar direction");
                    all_agree &= direct == *rec;
                    json!({ "direction": vector(w.vector()), "recovered": rat(rec), "direct": rat(&direct) })
                })
                .collect();
            let mut inputs = vec![(body.as_path(), &k)];
            let l = other.as_ref().map(|p| load(p, Load::Strict)).transpose()?;
            if let (Some(p), Some(l)) = (other, &l) {
                inputs.push((p.as_path(), l));
            }
            let mut r = Report::new("reconstruct", &inputs);
            r.set("translation", vector(&c.applied_translation))
                .set("normalized", body_to_json(&c.body))
                .set("supports", Value::Array(rows))
                .set("all_agree", json!(all_agree));
            if let Some(l) = l {
                let d = translates_decision(&k.body, &l.body, &grid)?;
                r.set("translates", json!(d.translates))
                    .set("translate_by", d.translation.as_ref().map_or(Value::Null, vector))
                    .set("witness", d.witness.as_ref().map_or(Value::Null, |w| vector(w.vector())));
            }
            Ok(r.finish())
        }
        Command::Homothety { a, b, projections, seed } => {
            let (ka, kb) = (load(a, Load::Strict)?, load(b, Load::Strict)?);
            let mut r = Report::new("homothety", &[(a, &ka), (b, &kb)]);
            match detect_homothety(&kb.body, &ka.body)? {
                Homothety::Present(w) => {
                    r.set("homothetic", json!(true)).set("witness", witness(&w));
                }
                Homothety::Absent(reason) => {
                    let reason = match reason {
                        AbsenceReason::VolumeRatioNotRationalPower => "VolumeRatioNotRationalPower",
                        AbsenceReason::CandidateMismatch => "CandidateMismatch",
                    };
                    r.set("homothetic", json!(false)).set("reason", json!(reason));
                }
            }
            if *projections {
                let seed = seed.unwrap_or(DEFAULT_DIRECTION_SEED);
                let n = ka.body.dim();
                let dirs = verification_directions(n, 20, seed);
                let c = homothetic_projections_conclude(&kb.body, &ka.body, &dirs)?;
                let v = match c {
                    ProjectionConclusion::Homothetic(w) => json!({ "conclusion": "Homothetic", "witness": witness(&w) }),
                    ProjectionConclusion::NotHomothetic { direction, evidence } => json!({
                        "conclusion": "NotHomothetic",
                        "direction": vector(direction.vector()),
                        "evidence": match evidence { Evidence::Shadow => "shadow", Evidence::Support => "support" },
                    }),
                };
                r.set("projections", v).set("seed", json!(seed));
                if let Ok(norm) = rogers_normalize(&kb.body, &ka.body) {
                    r.set(
                        "normalization",
                        json!({
                            "b_shift": vector(&norm.k_shift),
                            "a_scale": rat(&norm.l_scale),
                            "a_shift": vector(&norm.l_shift),
                        }),
                    );
                }
            }
            Ok(r.finish())
        }
    }
}

/// Witness for the second body in terms of the first: `B = a A + x`.
fn witness(w: &HomothetyWitness) -> Value {
    json!({ "a": rat(&w.a), "x": vector(&w.x) })
}

fn inequality_fields(r: &mut Report, rep: &InequalityReport, digits: u32) {
    let scale = digits + 10;
    r.set("form", json!(rep.form.name()))
        .set("verdict", json!(rep.verdict.name()))
        .set("lambda", rep.lambda.as_ref().map_or(Value::Null, rat))
        .set("lhs", json!(rep.lhs.to_string()))
        .set("rhs", json!(rep.rhs.to_string()))
        .set("lhs_numeric", json!(rep.lhs.numeric(scale).render(digits)))
        .set("rhs_numeric", json!(rep.rhs.numeric(scale).render(digits)))
        .set("slack", json!(rep.slack.render(digits)))
        .set("digits", json!(digits))
        .set("degenerate", json!(rep.degenerate));
}

fn violation(command: &str, bodies: &[&Polytope], quantities: Map<String, Value>, seed: Option<u64>) -> CliError {
    CliError::Violation(Box::new(json!({
        "kind": "Violation",
        "command": command,
        "bodies": bodies.iter().map(|b| body_to_json(b)).collect::<Vec<_>>(),
        "quantities": Value::Object(quantities),
        "seed": seed,
    })))
}

fn refutation(trace: &EqualityCaseTrace, bodies: &[Polytope], r: &Refutation) -> Value {
    let index = |t: &Rat| trace.lambdas.iter().position(|x| x == t).expect("grid value");
    match r {
        Refutation::Volume { lambda } => json!({
            "kind": "volume",
            "lambda": rat(lambda),
            "volume": rat(&trace.volumes[index(lambda)]),
        }),
        Refutation::MixedVolume { lambda, body } => {
            let (x, y) = &trace.pairs[index(lambda)][*body];
            json!({
                "kind": "mixed_volume",
                "lambda": rat(lambda),
                "test_body": body_to_json(&bodies[*body]),
                "values": [rat(x), rat(y)],
            })
        }
        Refutation::Projection { lambda, direction } => {
            let j = trace.directions.iter().position(|d| d == direction).expect("listed direction");
            let (x, y) = &trace.projections[index(lambda)][j];
            json!({
                "kind": "projection",
                "lambda": rat(lambda),
                "direction": vector(direction.vector()),
                "values": [rat(x), rat(y)],
            })
        }
    }
}

fn diagnose(a: &Path, b: &Path, grid: &str, seed: u64) -> Result<String> {
    let (ka, kb) = (load(a, Load::Strict)?, load(b, Load::Strict)?);
    let lambdas = parse_lambda_grid(grid)?;
    let (k, l) = (&ka.body, &kb.body);
    let check = minkowski_check(k, l)?;
    let mut r = Report::new("diagnose", &[(a, &ka), (b, &kb)]);
    r.set("verdict", json!(check.verdict.name()))
        .set("lhs", json!(check.lhs.to_string()))
        .set("rhs", json!(check.rhs.to_string()))
        .set("seed", json!(seed));
    match check.verdict {
        Verdict::Violation => Err(violation("diagnose", &[k, l], r.0, Some(seed))),
        Verdict::Equality => match detect_homothety(l, k)? {
            Homothety::Present(w) => {
                r.set("conclusion", json!("Homothetic")).set("witness", witness(&w));
                Ok(r.finish())
            }
            Homothety::Absent(_) => {
                r.set("conclusion", json!("EqualityWithoutHomothety"));
                Err(violation("diagnose", &[k, l], r.0, Some(seed)))
            }
        },
        Verdict::Strict => {
            let n = k.dim();
            let bodies = default_test_bodies(n);
            let dirs = verification_directions(n, 20, seed);
            let equal_volumes = volume(k) == volume(l);
            let trace = if equal_volumes {
                functional_equality_sweep(k, l, &lambdas, &bodies, &dirs)?
            } else {
                scale_free_sweep(k, l, &lambdas, &bodies, &dirs)?
            };
            r.set("sweep", json!(if equal_volumes { "raw" } else { "scale_free" }));
            match &trace.conclusion {
                EqualityConclusion::NotEqualityCase(f) => {
                    r.set("conclusion", json!("NotEqualityCase"))
                        .set("refutation", refutation(&trace, &bodies, f));
                    Ok(r.finish())
                }
                EqualityConclusion::Inconclusive => {
                    r.set("conclusion", json!("Inconclusive")).set("refutation", Value::Null);
                    Ok(r.finish())
                }
                EqualityConclusion::Homothetic(_) => {
                    r.set("conclusion", json!("HomotheticWithStrictInequality"));
                    Err(violation("diagnose", &[k, l], r.0, Some(seed)))
                }
            }
        }
    }
}
