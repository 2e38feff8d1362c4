use std::path::Path;
use std::sync::Arc;

use ffharmonic::bent::{self, BentReport, SearchOptions};
use ffharmonic::characters::character_table;
use ffharmonic::classical::{self, Census, ExponentFunction};
use ffharmonic::fourier;
use ffharmonic::json::{
    ContextJson, ExponentFunctionJson, GroupJson, ScalarFunctionJson, SearchJson,
    VectorFunctionJson,
};
use ffharmonic::vectorial;
use ffharmonic::{FieldContext, FieldElement, GroupSpec, ScalarFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::io::{emit, read_json};
use crate::pretty::{context_header, element_label, function_table, table};
use crate::{Cli, Command, ContextArgs};

/// Runs one subcommand; `Ok(false)` is a checked negative verdict.
pub fn run(cli: &Cli) -> CliResult<bool> {
    let out = |value: &dyn ErasedOut| value.write(cli);
    match &cli.command {
        Command::FieldInfo { ctx } => {
            let ctx = resolve_context(ctx)?.ok_or_else(|| {
                CliError::Usage("field-info needs --p and --n, or --context".into())
            })?;
            out(&field_info(&ctx))?;
        }
        Command::CharTable { group, ctx, bound } => {
            let spec = load_group(group, ctx)?;
            let rows = character_table(&spec, *bound)?;
            out(&CharTable::new(&spec, &rows))?;
        }
        Command::Ft { input } => out(&load_function(input)?.map(fourier::ft))?,
        Command::Ift { input } => out(&load_function(input)?.map(fourier::inverse_ft))?,
        Command::Conv { input, with } => {
            let f = load_function(input)?;
            let g = load_function(with)?;
            out(&FunctionOut(fourier::convolve(&f.0, &g.0)?))?;
        }
        Command::BentCheck { input } => {
            let f = load_function(input)?.0;
            let spectral = bent::is_bent_spectral(&f)?;
            let autocorr = bent::is_bent_autocorr(&f)?;
            let verdict = spectral.is_bent;
            out(&BentOut::new(&f, &spectral, autocorr.is_bent))?;
            return Ok(verdict);
        }
        Command::Mm { input } => out(&FunctionOut(bent::mm_construct(&load_function(input)?.0)?))?,
        Command::Dual { input } => out(&FunctionOut(bent::dual_bent(&load_function(input)?.0)?))?,
        Command::Search {
            group,
            ctx,
            d,
            max_candidates,
            jobs,
        } => {
            if *jobs == 0 {
                return Err(CliError::Usage("--jobs must be positive".into()));
            }
            let spec = load_group(group, ctx)?;
            let options = SearchOptions {
                max_candidates: *max_candidates,
                jobs: *jobs,
            };
            let outcome = bent::search_bent(&spec, *d, options)?;
            out(&SearchOut(SearchJson::from(&outcome)))?;
        }
        Command::Compare {
            group,
            ctx,
            m,
            exhaustive,
            input,
            random,
            seed,
            tol,
            max_candidates,
        } => {
            let spec = group.as_deref().map(|g| load_group(g, ctx)).transpose()?;
            let (spec, census, tol) = compare(
                spec,
                *m,
                *exhaustive,
                input.as_deref(),
                *random,
                *seed,
                *tol,
                *max_candidates,
            )?;
            let holds = census.counterexamples.is_empty();
            out(&CompareOut::new(&spec, m.unwrap_or(0), tol, census))?;
            return Ok(holds);
        }
        Command::VectorialCheck { input } => {
            let f = read_json::<VectorFunctionJson>(input)?.build()?;
            let spectral = vectorial::is_md_bent(&f)?;
            let derivative = vectorial::is_md_bent_derivative(&f)?;
            let verdict = spectral.is_bent;
            let ctx = f.context().clone();
            let report = VectorialOut {
                md_bent: spectral.is_bent,
                derivative_test: derivative.is_bent,
                parseval: vectorial::md_parseval_check(&f),
                spectrum_norms: spectral
                    .spectrum_norms
                    .iter()
                    .map(|&v| ctx.coeffs(v))
                    .collect(),
                failing_points: spectral.failing_points.clone(),
                display: spectral
                    .spectrum_norms
                    .iter()
                    .map(|&v| ctx.display(v))
                    .collect(),
            };
            out(&report)?;
            return Ok(verdict);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn compare(
    spec: Option<Arc<GroupSpec>>,
    m: Option<u32>,
    exhaustive: bool,
    input: Option<&Path>,
    random: Option<usize>,
    seed: u64,
    tol: Option<f64>,
    max_candidates: u128,
) -> CliResult<(Arc<GroupSpec>, Census, f64)> {
    if let Some(path) = input {
        let ef = read_json::<ExponentFunctionJson>(path)?.build(spec)?;
        let spec = ef.spec().clone();
        let tol = tol.unwrap_or_else(|| classical::default_tolerance(&spec));
        let mut census = Census::default();
        census.record(&ef, classical::compare(&ef, tol));
        return Ok((spec, census, tol));
    }
    let spec =
        spec.ok_or_else(|| CliError::Usage("compare needs --group unless --in is given".into()))?;
    let m = m.ok_or_else(|| CliError::Usage("compare needs --m unless --in is given".into()))?;
    let tol = tol.unwrap_or_else(|| classical::default_tolerance(&spec));
    let census = match (exhaustive, random) {
        (true, _) => classical::exhaustive_census(&spec, m, tol, max_candidates)?,
        (false, Some(count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut census = Census::default();
            for _ in 0..count {
                let e = (0..spec.order())
                    .map(|_| rng.random_range(0..m.max(1)))
                    .collect();
                let ef = ExponentFunction::new(spec.clone(), m, e)?;
                census.record(&ef, classical::compare(&ef, tol));
            }
            census
        }
        (false, None) => {
            return Err(CliError::Usage(
                "compare needs one of --exhaustive, --in, --random".into(),
            ))
        }
    };
    Ok((spec, census, tol))
}

fn resolve_context(args: &ContextArgs) -> CliResult<Option<Arc<FieldContext>>> {
    if let Some(path) = &args.context {
        return Ok(Some(read_json::<ContextJson>(path)?.build()?));
    }
    match (args.p, args.n) {
        (Some(p), Some(n)) => Ok(Some(
            ContextJson {
                p,
                n,
                modulus: args.modulus.clone(),
            }
            .build()?,
        )),
        (None, None) => Ok(None),
        _ => Err(CliError::Usage("--p and --n must be given together".into())),
    }
}

fn load_group(path: &Path, ctx: &ContextArgs) -> CliResult<Arc<GroupSpec>> {
    let record: GroupJson = read_json(path)?;
    let fallback = resolve_context(ctx)?;
    Ok(record.build(fallback)?)
}

fn load_function(path: &Path) -> CliResult<FunctionOut> {
    Ok(FunctionOut(read_json::<ScalarFunctionJson>(path)?.build()?))
}

/// A record with both a JSON form and a text form.
trait ErasedOut {
    fn write(&self, cli: &Cli) -> CliResult<()>;
}

impl<T: Serialize + Render> ErasedOut for T {
    fn write(&self, cli: &Cli) -> CliResult<()> {
        emit(cli.out.as_ref(), cli.pretty, self, || self.render())
    }
}

trait Render {
    fn render(&self) -> String;
}

#[derive(Serialize)]
struct FieldInfo {
    p: u32,
    n: u32,
    q: u64,
    sqrt_q: u64,
    circle_order: u64,
    modulus: Vec<u32>,
    generator: Vec<u32>,
    circle_generator: Vec<u32>,
    #[serde(skip)]
    text: String,
}

fn field_info(ctx: &FieldContext) -> FieldInfo {
    let rows = vec![
        vec!["q".into(), ctx.q().to_string()],
        vec!["sqrt(q)".into(), ctx.sqrt_q().to_string()],
        vec!["circle order".into(), ctx.circle_order().to_string()],
        vec!["modulus".into(), ctx.display_modulus()],
        vec!["g".into(), ctx.display(ctx.generator())],
        vec!["u".into(), ctx.display(ctx.circle_generator())],
    ];
    FieldInfo {
        p: ctx.p(),
        n: ctx.n(),
        q: ctx.q(),
        sqrt_q: ctx.sqrt_q(),
        circle_order: ctx.circle_order(),
        modulus: ctx.modulus().to_vec(),
        generator: ctx.coeffs(ctx.generator()),
        circle_generator: ctx.coeffs(ctx.circle_generator()),
        text: format!(
            "GF({}^{})\n{}",
            ctx.p(),
            ctx.degree(),
            table(&["field", "value"], &rows)
        ),
    }
}

impl Render for FieldInfo {
    fn render(&self) -> String {
        self.text.clone()
    }
}

#[derive(Serialize)]
struct CharTable {
    context: ContextJson,
    group: GroupJson,
    table: Vec<Vec<Vec<u32>>>,
    #[serde(skip)]
    text: String,
}

impl CharTable {
    fn new(spec: &GroupSpec, rows: &[Vec<FieldElement>]) -> Self {
        let ctx = spec.context();
        let labels: Vec<String> = (0..spec.order()).map(|i| element_label(spec, i)).collect();
        let mut headers = vec!["α \\ x"];
        headers.extend(labels.iter().map(String::as_str));
        let text_rows: Vec<Vec<String>> = rows
            .iter()
            .zip(&labels)
            .map(|(row, l)| {
                std::iter::once(l.clone())
                    .chain(row.iter().map(|&v| ctx.display(v)))
                    .collect()
            })
            .collect();
        CharTable {
            context: ctx.as_ref().into(),
            group: GroupJson::bare(spec),
            table: rows
                .iter()
                .map(|r| r.iter().map(|&v| ctx.coeffs(v)).collect())
                .collect(),
            text: format!("{}\n{}", context_header(ctx), table(&headers, &text_rows)),
        }
    }
}

impl Render for CharTable {
    fn render(&self) -> String {
        self.text.clone()
    }
}

struct FunctionOut(ScalarFunction);

impl FunctionOut {
    fn map(self, f: impl FnOnce(&ScalarFunction) -> ScalarFunction) -> Self {
        FunctionOut(f(&self.0))
    }
}

impl Serialize for FunctionOut {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarFunctionJson::from(&self.0).serialize(s)
    }
}

impl Render for FunctionOut {
    fn render(&self) -> String {
        format!(
            "{}\n{}",
            context_header(self.0.context()),
            function_table(&self.0, "f(x)")
        )
    }
}

#[derive(Serialize)]
struct BentOut {
    bent: bool,
    autocorrelation_test: bool,
    spectrum_norms: Vec<Vec<u32>>,
    failing_points: Vec<usize>,
    #[serde(skip)]
    text: String,
}

impl BentOut {
    fn new(f: &ScalarFunction, r: &BentReport, autocorr: bool) -> Self {
        let ctx = f.context();
        let rows: Vec<Vec<String>> = r
            .spectrum_norms
            .iter()
            .enumerate()
            .map(|(i, &v)| vec![element_label(f.spec(), i), ctx.display(v)])
            .collect();
        let verdict = if r.is_bent { "bent" } else { "not bent" };
        BentOut {
            bent: r.is_bent,
            autocorrelation_test: autocorr,
            spectrum_norms: r.spectrum_norms.iter().map(|&v| ctx.coeffs(v)).collect(),
            failing_points: r.failing_points.clone(),
            text: format!("{verdict}\n{}", table(&["α", "norm(f̂(α))"], &rows)),
        }
    }
}

impl Render for BentOut {
    fn render(&self) -> String {
        self.text.clone()
    }
}

struct SearchOut(SearchJson);

impl Serialize for SearchOut {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl Render for SearchOut {
    fn render(&self) -> String {
        let mut lines = vec![
            format!("candidates  {}", self.0.candidates),
            format!("bent        {}", self.0.count),
        ];
        lines.extend(self.0.bent.iter().map(|e| {
            let cells: Vec<String> = e.iter().map(u32::to_string).collect();
            cells.join(" ")
        }));
        lines.join("\n")
    }
}

#[derive(Serialize)]
struct CompareOut {
    group: GroupJson,
    m: u32,
    tolerance: f64,
    total: u64,
    classical_bent: u64,
    field_bent: u64,
    both: u64,
    counterexamples: Vec<Vec<u32>>,
}

impl CompareOut {
    fn new(spec: &GroupSpec, m: u32, tolerance: f64, c: Census) -> Self {
        CompareOut {
            group: GroupJson::with_context(spec),
            m,
            tolerance,
            total: c.total,
            classical_bent: c.classical_bent,
            field_bent: c.field_bent,
            both: c.both,
            counterexamples: c.counterexamples,
        }
    }
}

impl Render for CompareOut {
    fn render(&self) -> String {
        let rows = vec![
            vec!["functions".into(), self.total.to_string()],
            vec!["classically bent".into(), self.classical_bent.to_string()],
            vec!["bent over GF(q)".into(), self.field_bent.to_string()],
            vec!["both".into(), self.both.to_string()],
            vec![
                "counterexamples".into(),
                self.counterexamples.len().to_string(),
            ],
        ];
        table(&["count", "value"], &rows)
    }
}

#[derive(Serialize)]
struct VectorialOut {
    md_bent: bool,
    derivative_test: bool,
    parseval: bool,
    spectrum_norms: Vec<Vec<u32>>,
    failing_points: Vec<usize>,
    #[serde(skip)]
    display: Vec<String>,
}

impl Render for VectorialOut {
    fn render(&self) -> String {
        let verdict = if self.md_bent {
            "md-bent"
        } else {
            "not md-bent"
        };
        let rows: Vec<Vec<String>> = self
            .display
            .iter()
            .enumerate()
            .map(|(i, v)| vec![i.to_string(), v.clone()])
            .collect();
        format!("{verdict}\n{}", table(&["#α", "norm_l(f̂(α))"], &rows))
    }
}
