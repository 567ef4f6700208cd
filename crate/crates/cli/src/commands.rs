use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use tds_entropy::ingest::read_events_csv;
use tds_entropy::report::moving_average;
use tds_entropy::simulate::parse_simulator_config;
use tds_entropy::{
    complexity_curve, curve_features, entropy_curve, expand_dominance_with, generate_panel,
    parse_curve_csv, parse_manifest, render_svg, tds_curves, write_curve_csv, CurveFeatures,
    CurveSeries, DatasetManifest, DenominatorMode, EntropyCurve, Estimator, IngestError, Series,
    TdsDataset,
};

use crate::args::{
    ComplexityArgs, CurveArgs, EstimatorArgs, InputArgs, PlotArgs, ReportArgs, SimulateArgs,
    TdsArgs,
};
use crate::error::{CliError, CliResult};
use crate::run_report::{OutputDir, RunReport};

struct Loaded {
    manifest: DatasetManifest,
    dataset: TdsDataset,
}

fn data_error(source: &Path, e: IngestError) -> CliError {
    CliError::Data(
        e.lines()
            .iter()
            .map(|l| format!("{}:{}: {}", source.display(), l.line, l.message))
            .collect::<Vec<_>>()
            .join("\n"),
    )
}

fn load(input: &InputArgs, report: &mut RunReport) -> CliResult<Loaded> {
    let manifest_text = report.read_input(&input.manifest)?;
    let events_text = report.read_input(&input.events)?;
    let manifest = parse_manifest(&manifest_text).map_err(|e| data_error(&input.manifest, e))?;
    let (dataset, validation) =
        read_events_csv(&events_text, &manifest).map_err(|e| data_error(&input.events, e))?;
    report
        .warnings
        .extend(validation.warnings.iter().map(ToString::to_string));
    Ok(Loaded { manifest, dataset })
}

struct Settings {
    estimator: Estimator,
    mode: DenominatorMode,
    grid_size: usize,
}

fn settings(manifest: &DatasetManifest, args: &EstimatorArgs) -> Settings {
    Settings {
        estimator: args.estimator.unwrap_or(manifest.options.estimator),
        mode: args.denominator.unwrap_or(manifest.options.denominator),
        grid_size: args
            .grid_size
            .map_or(manifest.options.grid_size, |g| g as usize),
    }
}

fn core_error(e: tds_entropy::Error) -> CliError {
    CliError::Data(e.to_string())
}

fn entropy_curves(loaded: &Loaded, s: &Settings) -> CliResult<Vec<EntropyCurve>> {
    loaded
        .dataset
        .sample_ids()
        .into_iter()
        .map(|sample| {
            let grid =
                expand_dominance_with(&loaded.dataset, sample, s.grid_size).map_err(core_error)?;
            entropy_curve(&grid, s.estimator, s.mode).map_err(core_error)
        })
        .collect()
}

fn csv(series: &[CurveSeries]) -> CliResult<String> {
    write_curve_csv(series).map_err(|e| CliError::Data(e.to_string()))
}

pub fn validate(args: &InputArgs, report: &mut RunReport) -> CliResult<()> {
    let manifest_text = report.read_input(&args.manifest)?;
    let events_text = report.read_input(&args.events)?;
    let fail = |source: &Path, e: IngestError| {
        for l in e.lines() {
            println!("error: {}:{}: {}", source.display(), l.line, l.message);
        }
        CliError::Data(format!(
            "validation failed with {} error(s)",
            e.lines().len()
        ))
    };
    let manifest = parse_manifest(&manifest_text).map_err(|e| fail(&args.manifest, e))?;
    let (dataset, validation) =
        read_events_csv(&events_text, &manifest).map_err(|e| fail(&args.events, e))?;
    println!(
        "{} measurement(s), {} sample(s), {} panelist(s), N_a = {}",
        dataset.measurements.len(),
        dataset.sample_ids().len(),
        dataset.n_p(),
        dataset.attributes.len()
    );
    println!("{validation}");
    Ok(())
}

pub fn simulate(args: &SimulateArgs, report: &mut RunReport) -> CliResult<()> {
    let text = report.read_input(&args.config)?;
    let mut config = parse_simulator_config(&text).map_err(core_error)?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    let mut measurements = Vec::new();
    for sample in &config.samples {
        measurements.extend(
            generate_panel(&config, sample)
                .map_err(core_error)?
                .measurements,
        );
    }
    let dataset = TdsDataset::new(config.attributes.clone(), measurements, config.n_r);
    let mut manifest = DatasetManifest::new(config.attributes.clone(), config.n_r);
    for sample in &config.samples {
        manifest.samples.insert(
            sample.clone(),
            format!("synthetic panel, seed {}", config.seed),
        );
    }
    let mut out = OutputDir::create(&args.out, false, report)?;
    out.write(
        "events.csv",
        &tds_entropy::ingest::write_events_csv(&dataset),
    )?;
    out.write("manifest.toml", &manifest.to_toml())?;
    Ok(())
}

pub fn entropy(args: &CurveArgs, report: &mut RunReport) -> CliResult<()> {
    let loaded = load(&args.input, report)?;
    let s = settings(&loaded.manifest, &args.estimator);
    let curves = entropy_curves(&loaded, &s)?;
    let mut out = OutputDir::create(&args.out, false, report)?;
    for c in &curves {
        out.write(&format!("{}.entropy.csv", c.sample_id), &csv(&[c.into()])?)?;
    }
    Ok(())
}

pub fn complexity(args: &ComplexityArgs, report: &mut RunReport) -> CliResult<()> {
    let curves: Vec<EntropyCurve> = if !args.from.is_empty() {
        let mut curves = Vec::new();
        for path in &args.from {
            let text = report.read_input(path)?;
            for series in parse_curve_csv(&text).map_err(|e| data_error(path, e))? {
                let curve = EntropyCurve::try_from(&series).map_err(|msg| {
                    CliError::Data(format!("{}: not an entropy curve: {msg}", path.display()))
                })?;
                curves.push(curve);
            }
        }
        curves
    } else {
        let (Some(manifest), Some(events)) = (&args.manifest, &args.events) else {
            return Err(CliError::Usage(
                "complexity needs either --from <entropy.csv>... or --manifest and --events".into(),
            ));
        };
        let input = InputArgs {
            manifest: manifest.clone(),
            events: events.clone(),
        };
        let loaded = load(&input, report)?;
        let s = settings(&loaded.manifest, &args.estimator);
        entropy_curves(&loaded, &s)?
    };
    let mut out = OutputDir::create(&args.out, false, report)?;
    for c in &curves {
        let cc = complexity_curve(c);
        out.write(
            &format!("{}.complexity.csv", cc.sample_id),
            &csv(&[(&cc).into()])?,
        )?;
    }
    Ok(())
}

pub fn tds(args: &TdsArgs, report: &mut RunReport) -> CliResult<()> {
    let loaded = load(&args.input, report)?;
    let grid_size = args
        .grid_size
        .map_or(loaded.manifest.options.grid_size, |g| g as usize);
    let mut files = Vec::new();
    for sample in loaded.dataset.sample_ids() {
        let grid = expand_dominance_with(&loaded.dataset, sample, grid_size).map_err(core_error)?;
        let curves = tds_curves(&grid, &loaded.dataset.attributes);
        files.push((format!("{sample}.tds.csv"), csv(&curves.to_series())?));
    }
    let mut out = OutputDir::create(&args.out, false, report)?;
    for (name, text) in files {
        out.write(&name, &text)?;
    }
    Ok(())
}

/// Figure series for curve-table series, with the matching y-axis maximum.
fn figure_series(series: &[CurveSeries], smooth: Option<usize>) -> (Vec<Series>, f64) {
    let complexity = series
        .iter()
        .any(|s| s.estimator.starts_with("complexity:"));
    let samples: std::collections::BTreeSet<&str> =
        series.iter().map(|s| s.sample_id.as_str()).collect();
    let multi = samples.len() > 1;
    let figure = series
        .iter()
        .map(|s| {
            let mut values: Vec<f64> = s.points.iter().map(|p| p.value).collect();
            if let Some(w) = smooth {
                values = moving_average(&values, w);
            }
            let points = s.points.iter().map(|p| p.tau).zip(values).collect();
            let (label, dashed) = match s.estimator.strip_prefix("tds:") {
                Some("chance") => ("chance".to_owned(), true),
                Some(attr) => (attr.to_owned(), false),
                None => {
                    let base = s.estimator.trim_start_matches("complexity:");
                    let label = format!("{base}, {}", s.denominator);
                    (
                        if multi {
                            format!("{}: {label}", s.sample_id)
                        } else {
                            label
                        },
                        false,
                    )
                }
            };
            let line = Series::new(label, points);
            if dashed {
                line.dashed()
            } else {
                line
            }
        })
        .collect();
    (figure, if complexity { 0.25 } else { 1.0 })
}

fn svg(series: &[Series], y_max: f64, title: &str) -> CliResult<String> {
    render_svg(series, y_max, title).map_err(core_error)
}

pub fn plot(args: &PlotArgs, report: &mut RunReport) -> CliResult<()> {
    let text = report.read_input(&args.input)?;
    let series = parse_curve_csv(&text).map_err(|e| data_error(&args.input, e))?;
    let (figure, default_y) = figure_series(&series, args.smooth);
    let title = args.title.clone().unwrap_or_else(|| {
        args.input
            .file_stem()
            .map_or_else(String::new, |s| s.to_string_lossy().into_owned())
    });
    let y_max = args.y_max.unwrap_or(default_y);
    if !(y_max > 0.0) {
        return Err(CliError::Usage(format!(
            "--y-max must be positive, got {y_max}"
        )));
    }
    let doc = svg(&figure, y_max, &title)?;
    if let Some(parent) = args.out.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    fs::write(&args.out, &doc).map_err(|e| CliError::io(&args.out, e))?;
    report.outputs.push(crate::run_report::FileDigest {
        path: args.out.display().to_string(),
        sha256: crate::run_report::sha256_hex(doc.as_bytes()),
    });
    Ok(())
}

const FEATURES_HEADER: &str =
    "sample,first_defined_tau,h_first,h_max,tau_argmax,h_swallow,rise_then_fall";

fn features_row(out: &mut String, sample: &str, f: &CurveFeatures) {
    let _ = writeln!(
        out,
        "{sample},{},{:?},{:?},{},{:?},{}",
        f.first_defined_tau, f.h_first, f.h_max, f.tau_argmax, f.h_swallow, f.rise_then_fall
    );
}

pub fn report(args: &ReportArgs, report: &mut RunReport) -> CliResult<()> {
    let loaded = load(&args.input, report)?;
    let s = settings(&loaded.manifest, &args.estimator);
    let mut out = OutputDir::create(&args.out, true, report)?;
    let mut features = String::from(FEATURES_HEADER);
    features.push('\n');

    for sample in loaded.dataset.sample_ids() {
        let grid =
            expand_dominance_with(&loaded.dataset, sample, s.grid_size).map_err(core_error)?;
        let entropy = entropy_curve(&grid, s.estimator, s.mode).map_err(core_error)?;
        let complexity = complexity_curve(&entropy);
        let tds = tds_curves(&grid, &loaded.dataset.attributes).to_series();
        let entropy_series = [CurveSeries::from(&entropy)];
        let complexity_series = [CurveSeries::from(&complexity)];

        out.write(&format!("{sample}.entropy.csv"), &csv(&entropy_series)?)?;
        out.write(
            &format!("{sample}.complexity.csv"),
            &csv(&complexity_series)?,
        )?;
        out.write(&format!("{sample}.tds.csv"), &csv(&tds)?)?;

        let figures = [
            ("tds", &tds[..], format!("{sample}: temporal dominance")),
            (
                "entropy",
                &entropy_series[..],
                format!("{sample}: temporal entropy"),
            ),
            (
                "complexity",
                &complexity_series[..],
                format!("{sample}: temporal complexity"),
            ),
        ];
        for (kind, series, title) in figures {
            let (figure, y_max) = figure_series(series, args.smooth);
            out.write(
                &format!("{sample}.{kind}.svg"),
                &svg(&figure, y_max, &title)?,
            )?;
        }

        match curve_features(&entropy) {
            Ok(f) => features_row(&mut features, sample, &f),
            Err(e) => out
                .report()
                .warnings
                .push(format!("sample `{sample}`: {e}")),
        }
    }
    out.write("features.csv", &features)?;
    let json = out.report().to_json();
    out.write("run-report.json", &json)?;
    Ok(())
}
