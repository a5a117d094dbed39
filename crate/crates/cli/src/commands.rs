use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use regionstereo::config::{AlgorithmKind, ConfigLayer, RunConfig};
use regionstereo::depth::{depth_from_disparity, export_ply, median_filter, project_xyz};
use regionstereo::eval::{format_table, run_benchmark, write_csv, BenchConfig, BenchOptions, GroundTruth};
use regionstereo::image::{load_color, load_gray, load_stereo_pair, save_gray, GrayMap};
use regionstereo::linegrow::{mean_segment_length, segment_lengths};
use regionstereo::reliability::{filter_unreliable, map_energy};
use regionstereo::{global_match, line_grow_match, DisparityMap, PointStatus};

use crate::args::{BenchArgs, Cli, CloudArgs, Command, DepthArgs, DisparityInput, FilterArgs};
use crate::UsageError;

pub fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => Some(ConfigLayer::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?),
        None => None,
    };
    let config = RunConfig::resolve(file, cli.command.layer()).map_err(|e| usage(e.to_string()))?;
    echo_config(&config);
    match &cli.command {
        Command::Match(_) => run_match(&config),
        Command::Filter(a) => run_filter(&config, a),
        Command::Depth(a) => run_depth(&config, a),
        Command::Cloud(a) => run_cloud(&config, a),
        Command::Bench(a) => run_bench(&config, a),
    }
}

fn usage(message: String) -> anyhow::Error {
    UsageError(message).into()
}

fn echo_config(config: &RunConfig) {
    println!("# resolved config");
    for line in config.to_file_text().lines() {
        println!("#   {line}");
    }
}

fn required<'a>(value: &'a Option<PathBuf>, what: &str) -> Result<&'a Path> {
    value.as_deref().ok_or_else(|| {
        usage(format!(
            "missing {what} (pass it on the command line or in the config file)"
        ))
    })
}

/// `d.pgm` -> `d.mask.pgm`.
fn mask_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    path.with_file_name(format!("{stem}.mask.pgm"))
}

/// Writes the raw map (unestimated as 0) plus its mask sidecar.
fn save_with_mask(map: &GrayMap, mask: &GrayMap, path: &Path, normalize: bool) -> Result<()> {
    save_gray(map, path, normalize)?;
    let sidecar = mask_path(path);
    save_gray(mask, &sidecar, false)?;
    println!("wrote {} and {}", path.display(), sidecar.display());
    Ok(())
}

fn load_disparity(input: &DisparityInput, max_disparity: usize) -> Result<DisparityMap> {
    let raster = load_gray(&input.disparity)?;
    let mask_file = match &input.mask {
        Some(p) => Some(p.clone()),
        None => Some(mask_path(&input.disparity)).filter(|p| p.exists()),
    };
    let mask = mask_file.as_ref().map(load_gray).transpose()?;
    DisparityMap::from_raster(&raster, mask.as_ref(), max_disparity)
        .with_context(|| format!("reading disparity map {}", input.disparity.display()))
}

fn run_match(config: &RunConfig) -> Result<()> {
    let (left, right) = load_stereo_pair(
        required(&config.left, "left image")?,
        required(&config.right, "right image")?,
    )?;
    let output = required(&config.output, "output path (-o)")?;
    let window = config.window()?;
    let start = Instant::now();
    let disparity = match config.algorithm {
        AlgorithmKind::Global => {
            let (disparity, volume) = global_match(&left, &right, window, config.d_max, config.iterations)?;
            let seconds = start.elapsed().as_secs_f64();
            if let Some(dir) = &config.dump_volume {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (d, slice) in volume.slices().iter().enumerate() {
                    save_gray(slice, dir.join(format!("slice_{d:03}.pgm")), true)?;
                }
                println!(
                    "wrote {} energy slices to {}",
                    volume.slices().len(),
                    dir.display()
                );
            }
            println!("match seconds       : {seconds:.4}");
            disparity
        }
        AlgorithmKind::Linegrow => {
            let (disparity, status) = line_grow_match(&left, &right, &config.grow_config()?)?;
            println!("match seconds       : {:.4}", start.elapsed().as_secs_f64());
            for (name, s) in [
                ("root", PointStatus::Root),
                ("region", PointStatus::Region),
                ("idle", PointStatus::Idle),
            ] {
                println!("{name:<20}: {}", status.count(s));
            }
            if let Some(mean) = mean_segment_length(&segment_lengths(&status)) {
                println!("mean line length    : {mean:.3}");
            }
            if let Some(path) = &config.dump_status {
                // statuses 0..=3 spread over the gray range
                let scaled = GrayMap::from_fn(status.width(), status.height(), |r, c| {
                    f64::from(status.get(r, c) as u8) * 85.0
                });
                save_gray(&scaled, path, false)?;
                println!("wrote {}", path.display());
            }
            disparity
        }
    };
    println!(
        "estimated pixels    : {} of {}",
        disparity.estimated_count(),
        disparity.values().len()
    );
    save_with_mask(&disparity.to_gray(), &disparity.mask(), output, false)
}

fn run_filter(config: &RunConfig, args: &FilterArgs) -> Result<()> {
    let (left, right) = load_stereo_pair(
        required(&config.left, "left image")?,
        required(&config.right, "right image")?,
    )?;
    let disparity = load_disparity(&args.input, config.d_max)?;
    let energy = map_energy(&left, &right, &disparity, config.window()?)?;
    let filtered = filter_unreliable(&disparity, &energy, config.alpha)?;
    println!("{}", regionstereo::ReliabilityReport::CSV_HEADER);
    println!("{}", filtered.report.csv_record());
    println!("{}", filtered.report);
    if let Some(output) = &config.output {
        save_with_mask(
            &filtered.disparity.to_gray(),
            &filtered.disparity.mask(),
            output,
            false,
        )?;
    }
    if let Some(path) = &args.energy {
        save_gray(&filtered.energy.to_gray(), path, true)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn smoothed_input(config: &RunConfig, input: &DisparityInput) -> Result<DisparityMap> {
    let disparity = load_disparity(input, regionstereo::config::MAX_SUPPORTED_DISPARITY)?;
    Ok(median_filter(&disparity, config.median)?)
}

fn run_depth(config: &RunConfig, args: &DepthArgs) -> Result<()> {
    let output = required(&config.output, "output path (-o)")?;
    let disparity = smoothed_input(config, &args.input)?;
    let depth = depth_from_disparity(&disparity, &config.rig()?);
    let gray = depth.to_gray();
    if let Some((lo, hi)) = gray.finite_range() {
        println!("depth range         : {lo} .. {hi}");
    }
    let mask = GrayMap::from_fn(gray.width(), gray.height(), |r, c| {
        if gray.get(r, c).is_finite() {
            255.0
        } else {
            0.0
        }
    });
    save_with_mask(&gray, &mask, output, true)
}

fn run_cloud(config: &RunConfig, args: &CloudArgs) -> Result<()> {
    let output = required(&config.output, "output path (-o)")?;
    let colors = load_color(required(&config.right, "right image (--right)")?)?;
    let disparity = smoothed_input(config, &args.input)?;
    let rig = config.rig()?;
    let cloud = project_xyz(&depth_from_disparity(&disparity, &rig), &rig, &colors)?;
    export_ply(&cloud, output)?;
    println!("wrote {} points to {}", cloud.points.len(), output.display());
    Ok(())
}

fn run_bench(config: &RunConfig, args: &BenchArgs) -> Result<()> {
    let (left, right) = load_stereo_pair(
        required(&config.left, "left image")?,
        required(&config.right, "right image")?,
    )?;
    let output = required(&config.output, "report path (-o)")?;
    let truth = args.truth.as_ref().map(load_gray).transpose()?;
    let options = BenchOptions {
        alpha: config.alpha,
        unassigned: args.unassigned,
        truth: truth.as_ref().map(|map| GroundTruth {
            map,
            scale: args.truth_scale,
            threshold: args.bad_threshold,
        }),
    };
    let records = run_benchmark(
        &left,
        &right,
        &BenchConfig::canonical(config.iterations),
        &options,
    )?;
    let file = File::create(output).with_context(|| format!("creating {}", output.display()))?;
    write_csv(&records, BufWriter::new(file))?;
    print!("{}", format_table(&records));
    println!("wrote {}", output.display());
    Ok(())
}
