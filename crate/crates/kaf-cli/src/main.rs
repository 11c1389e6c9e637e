mod config;
mod error;
mod kernel_cmd;
mod output;
mod spectrum_cmd;
mod transform_cmd;
mod verify;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "kaf",
    about = "Deformed Fourier analysis: kernels, transforms, spectra, and verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Config file (TOML, flat keys); flags override file values.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Ambient dimension N.
    #[arg(short = 'N', long = "dim")]
    dim: Option<usize>,
    /// Deformation exponent a > 0.
    #[arg(long)]
    a: Option<f64>,
    /// Multiplicity values, comma separated; one value is broadcast to all
    /// coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    k: Option<Vec<f64>>,
    /// Output format: csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the semigroup kernel (or the transform kernel on the
    /// unitary axis) on a grid of point pairs.
    Kernel {
        #[command(flatten)]
        common: CommonArgs,
        /// Semigroup time, e.g. 0.5 or 0+1.5707963i; the transform kernel
        /// is the boundary value at i*pi/2.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Coordinate range lo:hi for the automatic N = 1 grid.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Number of grid points per axis for the automatic N = 1 grid.
        #[arg(long)]
        count: Option<usize>,
        /// Explicit first-argument points: "x1,..,xN;x1,..,xN;...".
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Explicit second-argument points, same shape as --x.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Apply the deformed Fourier transform to a sampled radial profile.
    Transform {
        #[command(flatten)]
        common: CommonArgs,
        /// Input CSV with header r,value_re,value_im.
        #[arg(long)]
        input: String,
        /// Angular sector degree of the input profile.
        #[arg(long)]
        m: Option<usize>,
        /// Eigenbasis truncation degree.
        #[arg(long)]
        ell_max: Option<usize>,
        /// Radial quadrature size used for expansion.
        #[arg(long)]
        n_nodes: Option<usize>,
    },
    /// List the lowest oscillator eigenvalues with their (l, m) labels.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of eigenvalues to list.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Run a named verification suite and emit a JSON report.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// One of: specfun, sl2, kernels, weber, transform, master,
        /// heisenberg, all.
        #[arg(long)]
        suite: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Kernel { common, z, range, count, x, y } => {
            kernel_cmd::run(&common, z, range, count, x, y)
        }
        Cmd::Transform { common, input, m, ell_max, n_nodes } => {
            transform_cmd::run(&common, &input, m, ell_max, n_nodes)
        }
        Cmd::Spectrum { common, count } => spectrum_cmd::run(&common, count),
        Cmd::Verify { common, suite } => verify::run(&common, suite),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
