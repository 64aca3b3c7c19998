use cy5_core::exact::format_rational;
use cy5_core::Rational;
use serde_json::{json, Value};

/// A cell of an output table.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(u64),
    Rational(Rational),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Rational(r) => format_rational(r),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => json!(n),
            Cell::Rational(r) => rational_json(r),
            Cell::Bool(b) => json!(b),
            Cell::Text(t) => json!(t),
        }
    }
}

/// `{"num": "...", "den": "..."}`, both as decimal strings.
pub fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| (name.to_string(), cell.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

/// Square matrix in CSV: a `d1\d2` corner, then one row per `d1`.
pub fn matrix_csv(matrix: &[Vec<Rational>]) -> String {
    let mut out = String::from("d1\\d2");
    for d2 in 1..=matrix.len() {
        out.push_str(&format!(",{d2}"));
    }
    out.push('\n');
    for (i, row) in matrix.iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        for value in row {
            out.push(',');
            out.push_str(&format_rational(value));
        }
        out.push('\n');
    }
    out
}

pub fn matrix_json(matrix: &[Vec<Rational>]) -> Value {
    Value::Array(
        matrix
            .iter()
            .map(|row| Value::Array(row.iter().map(rational_json).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use cy5_core::exact::{frac, int};

    #[test]
    fn csv_and_json_carry_the_same_values() {
        let mut t = Table::new(vec!["d", "x"]);
        t.push(vec![Cell::Int(1), Cell::Rational(frac(-1, 8))]);
        t.push(vec![Cell::Int(2), Cell::Rational(int(3))]);
        assert_eq!(t.csv(), "d,x\n1,-1/8\n2,3\n");
        let j = t.json();
        assert_eq!(j[0]["x"]["num"], "-1");
        assert_eq!(j[0]["x"]["den"], "8");
        assert_eq!(j[1]["x"]["den"], "1");
    }

    #[test]
    fn matrix_layout() {
        let m = vec![vec![int(1), int(2)], vec![int(2), frac(1, 3)]];
        assert_eq!(matrix_csv(&m), "d1\\d2,1,2\n1,1,2\n2,2,1/3\n");
        assert_eq!(matrix_json(&m)[1][1]["den"], "3");
    }
}
