use crate::config::{build_params, merge, parse_complex, parse_points, parse_range, FileConfig};
use crate::error::CliError;
use crate::output::{emit, Cell, Format, Table};
use crate::CommonArgs;
use kaf_kernels::{lambda_full, Provenance};
use kaf_transform::{b_kernel, BKernelSpec};

fn provenance_label(p: Provenance) -> &'static str {
    match p {
        Provenance::ClosedForm => "closed-form",
        Provenance::Series => "series",
        Provenance::Quadrature => "quadrature",
    }
}

pub fn run(
    common: &CommonArgs,
    z: Option<String>,
    range: Option<String>,
    count: Option<usize>,
    x: Option<String>,
    y: Option<String>,
) -> Result<i32, CliError> {
    let file = FileConfig::load(common.config.as_deref())?;
    let params = build_params(common.dim, common.a, common.k.clone(), &file)?;
    let format = Format::parse(&merge(common.format.clone(), file.format.clone(), "csv".into()))?;
    let z = parse_complex(
        &z.or(file.z.clone())
            .ok_or_else(|| CliError::usage("kernel needs --z (semigroup time)"))?,
    )?;
    let dim = params.dim();

    let (xs, ys) = match (&x, &y) {
        (Some(xs), Some(ys)) => (parse_points(xs, dim)?, parse_points(ys, dim)?),
        (None, None) => {
            if dim != 1 {
                return Err(CliError::usage(
                    "for N > 1 pass explicit --x and --y point lists",
                ));
            }
            let (lo, hi) = parse_range(
                &range
                    .or(file.range.clone())
                    .unwrap_or_else(|| "-2:2".into()),
            )?;
            let n = merge(count, file.count, 9);
            if n < 2 {
                return Err(CliError::usage("grid needs --count >= 2"));
            }
            let grid: Vec<Vec<f64>> = (0..n)
                .map(|i| vec![lo + (hi - lo) * i as f64 / (n - 1) as f64])
                .collect();
            (grid.clone(), grid)
        }
        _ => return Err(CliError::usage("pass both --x and --y, or neither")),
    };

    // On the unitary axis z = i*pi/2 the table is the transform kernel B
    // itself; elsewhere it is the semigroup kernel.
    let boundary = z.re == 0.0 && (z.im - std::f64::consts::FRAC_PI_2).abs() < 1e-6;
    let spec = if boundary { BKernelSpec::new(&params).ok() } else { None };

    let mut cols: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    cols.extend((1..=dim).map(|i| format!("y{i}")));
    cols.extend(["z".into(), "val".into(), "provenance".into()]);
    let col_refs: Vec<&str> = cols.iter().map(|s| s.as_str()).collect();
    let mut table = Table::new(&col_refs);

    for xv in &xs {
        for yv in &ys {
            let (val, label) = match &spec {
                Some(s) => (b_kernel(xv, yv, s)?, "closed-form"),
                None => {
                    let eval = lambda_full(xv, yv, z, &params)?;
                    (eval.value, provenance_label(eval.provenance))
                }
            };
            let mut row: Vec<Cell> = xv.iter().map(|&c| Cell::Num(c)).collect();
            row.extend(yv.iter().map(|&c| Cell::Num(c)));
            row.push(Cell::Complex(z.re, z.im));
            row.push(Cell::Complex(val.re, val.im));
            row.push(Cell::Text(label.to_string()));
            table.rows.push(row);
        }
    }

    let out = common.out.clone().or(file.out.clone());
    emit(&table.render(format), out.as_deref())?;
    Ok(0)
}
