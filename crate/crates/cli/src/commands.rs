use std::fs;
use std::io::{self, Write};
use std::path::Path;

use julia_limits::classify::{classify_q_with, hyperbolicity_report, rigidity_pad, Regime};
use julia_limits::limitsets::{read_pgm, rasterize_filled_julia_with, rasterize_kinf_with};
use julia_limits::orbits::{detect_cycle_poly, escape_radius, escape_radius_poly, refine_cycle_under_fn, CycleInfo};
use julia_limits::poly::format_complex;
use julia_limits::roots::fixed_points;
use julia_limits::setmetrics::{convergence_sweep_with, hausdorff_masks, write_sweep_csv, SweepOptions};
use julia_limits::{Complex, Error, EscapeParams, Exec, GridSpec, Label, PowerPlusQMap, RasterMask};

use crate::args::{BandArgs, Classify, Command, Cycle, Distance, FixedPoints, GridArgs, RenderJulia, RenderKinf, Sweep};
use crate::error::CliError;

type Result<T> = std::result::Result<T, CliError>;

pub fn execute(cmd: Command) -> Result<()> {
    match cmd {
        Command::RenderJulia(a) => render_julia(a),
        Command::RenderKinf(a) => render_kinf(a),
        Command::Sweep(a) => sweep(a),
        Command::FixedPoints(a) => fixed_points_csv(a),
        Command::Classify(a) => classify(a),
        Command::Cycle(a) => cycle(a),
        Command::Distance(a) => distance(a),
    }
}

fn grid(a: &GridArgs) -> Result<GridSpec> {
    Ok(GridSpec::from_window(a.window, a.grid.0, a.grid.1)?)
}

fn kinf_params(band: &BandArgs, grid: &GridSpec) -> Result<EscapeParams> {
    let p = EscapeParams {
        band_delta: band.band_delta.unwrap_or_else(|| grid.default_band_delta()),
        kq_iter: band.kq_iter,
        ..EscapeParams::default()
    };
    p.validate()?;
    Ok(p)
}

fn write_output(path: &Path, bytes: &[u8]) -> Result<()> {
    if path.as_os_str() == "-" {
        let mut out = io::stdout().lock();
        out.write_all(bytes)?;
        out.flush()?;
    } else {
        fs::write(path, bytes).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// PNG palette: `Inside`/`Kq` black; `Shell(j)` blue `(0, 40+20·min(j,8), 160)`;
/// `Outside(k)` gray `255 − 2·min(k,50)`, darker for slower escape.
fn palette(l: Label) -> [u8; 3] {
    match l {
        Label::Inside | Label::Kq => [0, 0, 0],
        Label::Shell(j) => [0, 40 + 20 * j.min(8) as u8, 160],
        Label::Outside(k) => {
            let v = 255 - 2 * k.min(50) as u8;
            [v, v, v]
        }
    }
}

fn write_png(mask: &RasterMask, path: &Path) -> Result<()> {
    let g = &mask.grid;
    let mut buf = Vec::with_capacity(3 * g.len());
    for j in (0..g.rows).rev() {
        for i in 0..g.cols {
            buf.extend(palette(mask.label(i, j)));
        }
    }
    let img = image::RgbImage::from_raw(g.cols as u32, g.rows as u32, buf).expect("buffer matches the grid");
    img.save_with_format(path, image::ImageFormat::Png)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit_mask(mask: &RasterMask, out: &Path, png: Option<&Path>) -> Result<()> {
    write_output(out, &mask.to_pgm())?;
    if let Some(p) = png {
        write_png(mask, p)?;
    }
    Ok(())
}

fn render_julia(a: RenderJulia) -> Result<()> {
    let f = PowerPlusQMap::new(a.n, a.q)?;
    let g = grid(&a.grid)?;
    let p = EscapeParams {
        max_iter: a.iter.max_iter,
        escape_radius: a.iter.escape_radius.unwrap_or_else(|| escape_radius(&f)),
        ..EscapeParams::default()
    };
    p.validate()?;
    let mask = rasterize_filled_julia_with(&f, &g, &p, a.sampling.into(), Exec::Parallel);
    emit_mask(&mask, &a.out, a.png.as_deref())?;
    eprintln!("inside fraction {:.6} ({} pixels)", mask.member_fraction(), mask.member_count());
    Ok(())
}

fn render_kinf(a: RenderKinf) -> Result<()> {
    let g = grid(&a.grid)?;
    let p = kinf_params(&a.band, &g)?;
    let mask = rasterize_kinf_with(&a.q, &g, &p, a.shells, Exec::Parallel)?;
    emit_mask(&mask, &a.out, a.png.as_deref())?;
    let kq = mask.count(|l| l == Label::Kq);
    let shells = mask.count(|l| matches!(l, Label::Shell(_)));
    eprintln!("K_q {kq} pixels, shells {shells} pixels, band_delta {}", p.band_delta);
    Ok(())
}

fn sweep(a: Sweep) -> Result<()> {
    let g = grid(&a.grid)?;
    let p = EscapeParams {
        max_iter: a.iter.max_iter,
        // each f_n raises this to its own certified radius
        escape_radius: a.iter.escape_radius.unwrap_or(2.0),
        ..kinf_params(&a.band, &g)?
    };
    p.validate()?;
    let opts = SweepOptions {
        shells: a.shells,
        sampling: a.sampling.into(),
        exec: Exec::Parallel,
    };
    let rows = convergence_sweep_with(&a.q, &a.n, &g, a.target, &p, &opts)?;
    let mut csv = Vec::new();
    write_sweep_csv(&rows, a.timing, &mut csv)?;
    write_output(&a.out, &csv)
}

fn fixed_points_csv(a: FixedPoints) -> Result<()> {
    let f = PowerPlusQMap::new(a.n, a.q)?;
    let roots = fixed_points(&f, a.tol)?;
    let stats = match roots.cluster_stats(a.eps) {
        Ok(s) => format!(
            "annulus_fraction={} max_radial_dev={} angular_discrepancy={}",
            s.annulus_fraction, s.max_radial_dev, s.angular_discrepancy
        ),
        Err(Error::EmptyAnnulus) => "annulus_fraction=0 max_radial_dev=NaN angular_discrepancy=NaN".into(),
        Err(e) => return Err(e.into()),
    };
    let mut pts = roots.into_points();
    pts.sort_by(|x, y| x.arg().total_cmp(&y.arg()).then(x.norm().total_cmp(&y.norm())));
    let mut out = String::from("re,im,modulus,arg\n");
    for z in pts {
        out.push_str(&format!("{},{},{},{}\n", z.re, z.im, z.norm(), z.arg()));
    }
    out.push_str(&format!("# stats: {stats}\n"));
    write_output(&a.out, out.as_bytes())
}

fn format_points(points: &[Complex]) -> String {
    points.iter().map(|&z| format_complex(z)).collect::<Vec<_>>().join(";")
}

fn classify(a: Classify) -> Result<()> {
    let p = EscapeParams {
        max_iter: a.max_iter,
        band_delta: a.band_delta,
        ..EscapeParams::default()
    };
    p.validate()?;
    let v = classify_q_with(&a.q, &p, a.samples, a.circle_tol)?;
    println!("{v}");

    let pad = rigidity_pad(&a.q, a.samples.max(64));
    eprintln!("certified: max|q| on the closed disk <= {:.9}", v.max_mod_on_circle + pad);
    if v.min_mod_on_disk == 0.0 {
        eprintln!("certified: q has a zero in the closed disk");
    } else {
        eprintln!("certified: min|q| on the closed disk >= {:.9}", (v.min_mod_on_disk - pad).max(0.0));
    }
    if !v.circle_fixed_points.is_empty() {
        eprintln!("fixed points on the unit circle: {}", format_points(&v.circle_fixed_points));
    }
    if v.regime == Regime::Inconclusive {
        eprintln!("inconclusive: a bound is within its sampling pad of 1, or q fixes a point of the circle");
    }
    let report = hyperbolicity_report(&a.q, &p)?;
    for c in &report.cycles {
        eprintln!(
            "critical orbit cycle: period {} |multiplier| {:.3e} {:?}",
            c.period,
            c.multiplier.norm(),
            c.stability
        );
    }
    if v.near_circle_cycle {
        eprintln!("warning: a critical cycle lies within 2*band_delta of the unit circle");
    }
    eprintln!("hyperbolicity is a heuristic from critical orbits, not a certificate");
    Ok(())
}

fn cycle_line(c: &CycleInfo) -> String {
    format!(
        "period={} multiplier={} abs_multiplier={:e} stability={:?} points={}",
        c.period,
        format_complex(c.multiplier),
        c.multiplier.norm(),
        c.stability,
        format_points(&c.points)
    )
}

fn cycle(a: Cycle) -> Result<()> {
    // affine q: any large radius separates escape from convergence
    let radius = escape_radius_poly(&a.q).unwrap_or(1e8);
    let p = EscapeParams {
        max_iter: a.max_iter,
        escape_radius: radius,
        ..EscapeParams::default()
    };
    p.validate()?;
    let c = detect_cycle_poly(&a.q, a.z0, &p, a.max_period)?;
    println!("{}", cycle_line(&c));
    if let Some(n) = a.n {
        let f = PowerPlusQMap::new(n, a.q)?;
        let r = refine_cycle_under_fn(&c, &f)?;
        println!("n={n} max_deviation={:e} {}", r.max_deviation, cycle_line(&r.cycle));
    }
    Ok(())
}

fn distance(a: Distance) -> Result<()> {
    let read = |path: &Path| -> Result<_> {
        let bytes = fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        read_pgm(&bytes).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    };
    let (ia, ib) = (read(&a.a)?, read(&a.b)?);
    if (ia.cols, ia.rows) != (ib.cols, ib.rows) {
        return Err(CliError::Usage(format!(
            "masks differ in size: {}x{} vs {}x{}",
            ia.cols, ia.rows, ib.cols, ib.rows
        )));
    }
    let g = GridSpec::from_window(a.window, ia.cols, ia.rows)?;
    let d = hausdorff_masks(&ia.member_flags(), &ib.member_flags(), &g)?;
    println!("d_hausdorff={d:.12} grid={}x{}", g.cols, g.rows);
    Ok(())
}
