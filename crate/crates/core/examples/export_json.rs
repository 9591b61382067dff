//! Writes scan results as CSV and JSON and reads both back.

use pi_formula::cli::output::{
    read_csv_records, read_json_records, write_records, Format, PointRecord,
};
use pi_formula::scanner::verify_theorem3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify_theorem3(1, 4000)?;
    let records: Vec<PointRecord> = report.points.iter().map(PointRecord::from).collect();

    let csv = write_records(Vec::new(), Format::Csv, &records)?;
    let json = write_records(Vec::new(), Format::Json, &records)?;
    print!("{}", String::from_utf8(csv.clone())?);
    println!("{}", serde_json::to_string_pretty(&report)?);

    assert_eq!(read_csv_records(csv.as_slice())?, records);
    assert_eq!(read_json_records(json.as_slice())?, records);
    Ok(())
}
