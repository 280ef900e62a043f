//! Writes the figure tables as TSV files into a directory (default `plotdata`).

use std::path::PathBuf;

use qmf::numeric::{plot_tables, EvalConfig};

fn main() -> qmf::error::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "plotdata".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");
    for t in plot_tables(120, &EvalConfig::default())? {
        let path = dir.join(format!("{}.tsv", t.name));
        std::fs::write(&path, t.to_tsv()).expect("write table");
        println!("{} ({} rows): {}", path.display(), t.rows.len(), t.figure);
    }
    Ok(())
}
