use crate::config::{build_params, merge, FileConfig};
use crate::error::CliError;
use crate::output::{emit, Cell, Format, Table};
use crate::CommonArgs;
use kaf_sl2::{expand, fka_apply_spectral, phi_basis, DefectPolicy, RadialSector, SectorSample,
    Truncation, DEFECT_LIMIT};
use kaf_transform::Cplx;
use serde_json::json;

/// Natural cubic spline through (x_i, y_i); endpoint values are held
/// constant outside the sample range.
struct Spline {
    x: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>,
}

impl Spline {
    fn new(x: Vec<f64>, y: Vec<f64>) -> Spline {
        let n = x.len();
        let mut m = vec![0.0; n];
        if n >= 3 {
            // Tridiagonal system for the second derivatives.
            let mut sub = vec![0.0; n];
            let mut diag = vec![1.0; n];
            let mut sup = vec![0.0; n];
            let mut rhs = vec![0.0; n];
            for i in 1..n - 1 {
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                sub[i] = h0 / 6.0;
                diag[i] = (h0 + h1) / 3.0;
                sup[i] = h1 / 6.0;
                rhs[i] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
            }
            for i in 1..n {
                let w = sub[i] / diag[i - 1];
                diag[i] -= w * sup[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            m[n - 1] = rhs[n - 1] / diag[n - 1];
            for i in (0..n - 1).rev() {
                m[i] = (rhs[i] - sup[i] * m[i + 1]) / diag[i];
            }
        }
        Spline { x, y, m }
    }

    fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t <= self.x[0] {
            return self.y[0];
        }
        if t >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = match self.x.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
            Ok(i) => return self.y[i],
            Err(i) => i - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let u = (self.x[i + 1] - t) / h;
        let v = (t - self.x[i]) / h;
        u * self.y[i]
            + v * self.y[i + 1]
            + ((u * u * u - u) * self.m[i] + (v * v * v - v) * self.m[i + 1]) * h * h / 6.0
    }
}

fn parse_input(path: &str) -> Result<(Vec<f64>, Vec<Cplx>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read input file {path}: {e}")))?;
    let mut rs = Vec::new();
    let mut vals = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(|f| f.trim()).collect();
        if lineno == 0 && fields.first() == Some(&"r") {
            if fields != ["r", "value_re", "value_im"] {
                return Err(CliError::usage(format!(
                    "input header must be r,value_re,value_im, got {line:?}"
                )));
            }
            continue;
        }
        if fields.len() != 3 {
            return Err(CliError::usage(format!(
                "input line {}: expected 3 fields r,value_re,value_im, got {line:?}",
                lineno + 1
            )));
        }
        let nums: Result<Vec<f64>, _> = fields.iter().map(|f| f.parse::<f64>()).collect();
        let nums = nums.map_err(|_| {
            CliError::usage(format!("input line {}: cannot parse {line:?}", lineno + 1))
        })?;
        if !(nums[0] > 0.0) {
            return Err(CliError::usage(format!(
                "input line {}: radius must be positive, got {}",
                lineno + 1,
                nums[0]
            )));
        }
        rs.push(nums[0]);
        vals.push(Cplx::new(nums[1], nums[2]));
    }
    if rs.is_empty() {
        return Err(CliError::usage(format!(
            "input file {path} contains no samples (expected header r,value_re,value_im and data rows)"
        )));
    }
    let mut order: Vec<usize> = (0..rs.len()).collect();
    order.sort_by(|&i, &j| rs[i].partial_cmp(&rs[j]).unwrap());
    Ok((
        order.iter().map(|&i| rs[i]).collect(),
        order.iter().map(|&i| vals[i]).collect(),
    ))
}

pub fn run(
    common: &CommonArgs,
    input: &str,
    m: Option<usize>,
    ell_max: Option<usize>,
    n_nodes: Option<usize>,
) -> Result<i32, CliError> {
    let file = FileConfig::load(common.config.as_deref())?;
    let params = build_params(common.dim, common.a, common.k.clone(), &file)?;
    let format = Format::parse(&merge(common.format.clone(), file.format.clone(), "csv".into()))?;
    let m = merge(m, file.m, 0);
    let ell_max = merge(ell_max, file.ell_max, 40);
    let n_nodes = merge(n_nodes, file.n_radial, 200);

    let (rs, vals) = parse_input(input)?;
    let re_spline = Spline::new(rs.clone(), vals.iter().map(|v| v.re).collect());
    let im_spline = Spline::new(rs.clone(), vals.iter().map(|v| v.im).collect());
    let profile = move |r: f64| Cplx::new(re_spline.eval(r), im_spline.eval(r));

    let truncation = Truncation { ell_max, m_max: m };
    let sample = SectorSample { m, j: 0, profile: &profile };
    let f = expand(&[sample], &params, truncation, n_nodes)?;
    let defect = f.parseval_defect();
    if defect > DEFECT_LIMIT {
        return Err(CliError::Numeric(format!(
            "truncated expansion misses a fraction {defect:.3e} of the input norm \
             (limit {DEFECT_LIMIT:.0e}); raise --ell-max or sample a smoother profile"
        )));
    }
    let g = fka_apply_spectral(&f, DefectPolicy::Allow)?;
    let norm_ratio = g.norm_sq() / f.norm_sq();

    let sector = RadialSector::new(m, &params)?;
    let mut table = Table::new(&["r", "value"]);
    for &r in &rs {
        let mut acc = Cplx::new(0.0, 0.0);
        for ell in 0..=ell_max {
            let c = g.coeff(ell, m, 0);
            if c.norm_sqr() > 0.0 {
                acc += c * phi_basis(ell, &sector, r)?;
            }
        }
        table
            .rows
            .push(vec![Cell::Num(r), Cell::Complex(acc.re, acc.im)]);
    }

    let out = common.out.clone().or(file.out.clone());
    match format {
        Format::Csv => {
            eprintln!("parseval_defect = {defect:.6e}");
            eprintln!("norm_ratio = {norm_ratio:.12}");
            emit(&table.to_csv(), out.as_deref())?;
        }
        Format::Json => {
            let doc = json!({
                "parseval_defect": defect,
                "norm_ratio": norm_ratio,
                "samples": table.to_json(),
            });
            emit(&format!("{doc:#}\n"), out.as_deref())?;
        }
    }
    Ok(0)
}
