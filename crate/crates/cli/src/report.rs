use std::fmt::Display;

use coxsp_length::Q;

/// Line-oriented report: `key: value` as text, `key<TAB>value` as TSV.
pub struct Out {
    tsv: bool,
    buf: String,
}

impl Out {
    pub fn new(tsv: bool) -> Self {
        Out { tsv, buf: String::new() }
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        let sep = if self.tsv { "\t" } else { ": " };
        self.buf.push_str(&format!("{key}{sep}{value}\n"));
    }

    pub fn row(&mut self, cells: &[String]) {
        self.buf.push_str(&cells.join(if self.tsv { "\t" } else { " " }));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

pub fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn fmt_f64(x: f64) -> String {
    if x.is_infinite() {
        return "inf".into();
    }
    format!("{x}")
}
