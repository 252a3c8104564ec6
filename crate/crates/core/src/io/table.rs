use std::io::{Read, Write};

use super::json::format_real;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// Headerless CSV of reals, one matrix row per line.
pub fn read_matrix<R: Read>(reader: R) -> Result<DenseMatrix> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (r, record) in rdr.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, field)| {
                field.parse::<f64>().map_err(|e| Error::Parse {
                    line: r + 1,
                    column: c + 1,
                    msg: format!("{field:?} is not a number: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(DenseMatrix::zeros(0, 0));
    }
    DenseMatrix::from_rows(&rows)
}

pub fn read_matrix_file(path: impl AsRef<std::path::Path>) -> Result<DenseMatrix> {
    read_matrix(std::fs::File::open(path)?)
}

pub fn write_matrix<W: Write>(writer: W, m: &DenseMatrix) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    for r in 0..m.rows() {
        wtr.write_record(m.row(r).iter().map(|&x| format_real(x)))?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn matrix_to_csv(m: &DenseMatrix) -> String {
    let mut out = Vec::new();
    write_matrix(&mut out, m).expect("writing to memory cannot fail");
    String::from_utf8(out).expect("CSV of reals is UTF-8")
}

/// `vertex,part` lines with a header.
pub fn partition_to_csv(names: &[String], assignment: &[usize]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["vertex", "part"]).expect("in-memory write");
    for (name, part) in names.iter().zip(assignment) {
        wtr.write_record([name.as_str(), &part.to_string()]).expect("in-memory write");
    }
    String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}
