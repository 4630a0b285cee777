//! Aligned text tables and CSV output.

use std::io;

/// Left-aligns the first `text_cols` columns and right-aligns the rest.
pub fn table(headers: &[&str], rows: &[Vec<String>], text_cols: usize) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| {
                if i < text_cols {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        let mut s = parts.join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(&mut headers.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

pub fn csv(headers: &[&str], rows: &[Vec<String>]) -> io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned() {
        let rows = vec![
            vec!["log".to_string(), "-2".to_string()],
            vec!["classical".to_string(), "10".to_string()],
        ];
        assert_eq!(
            table(&["variant", "w"], &rows, 1),
            "variant     w\nlog        -2\nclassical  10\n"
        );
    }

    #[test]
    fn csv_has_header() {
        let rows = vec![vec!["a,b".to_string(), "1".to_string()]];
        assert_eq!(csv(&["x", "y"], &rows).unwrap(), "x,y\n\"a,b\",1\n");
    }
}
