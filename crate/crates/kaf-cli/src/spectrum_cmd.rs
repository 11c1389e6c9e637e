use crate::config::{build_params, merge, FileConfig};
use crate::error::CliError;
use crate::output::{emit, Cell, Format, Table};
use crate::CommonArgs;
use kaf_sl2::spectrum;

pub fn run(common: &CommonArgs, count: Option<usize>) -> Result<i32, CliError> {
    let file = FileConfig::load(common.config.as_deref())?;
    let params = build_params(common.dim, common.a, common.k.clone(), &file)?;
    let format = Format::parse(&merge(common.format.clone(), file.format.clone(), "csv".into()))?;
    let count = merge(count, file.count, 16);

    let mut table = Table::new(&["eigenvalue", "ell", "m"]);
    for entry in spectrum(&params, count) {
        table.rows.push(vec![
            Cell::Num(entry.value),
            Cell::Int(entry.ell as i64),
            Cell::Int(entry.m as i64),
        ]);
    }
    let out = common.out.clone().or(file.out.clone());
    emit(&table.render(format), out.as_deref())?;
    Ok(0)
}
