//! Output buffer with a human layout and a tab-separated layout.

pub struct Out {
    tsv: bool,
    buf: String,
}

impl Out {
    pub fn new(tsv: bool) -> Self {
        Out {
            tsv,
            buf: String::new(),
        }
    }

    pub fn finish(self) -> String {
        self.buf
    }

    pub fn line(&mut self, s: &str) {
        self.buf.push_str(s);
        self.buf.push('\n');
    }

    /// Appends text that already ends in a newline.
    pub fn raw(&mut self, s: &str) {
        self.buf.push_str(s);
    }

    pub fn pair(&mut self, key: &str, value: impl std::fmt::Display) {
        let sep = if self.tsv { "\t" } else { "=" };
        self.line(&format!("{key}{sep}{value}"));
    }

    pub fn verdict(&mut self, name: &str, word: &str) {
        let sep = if self.tsv { "\t" } else { ": " };
        self.line(&format!("{name}{sep}{word}"));
    }

    /// Column names; the human layout omits them because records are
    /// self-describing there.
    pub fn header(&mut self, cols: &[&str]) {
        if self.tsv {
            self.line(&cols.join("\t"));
        }
    }

    /// `key=value` pairs on one line, or bare values in tab-separated mode.
    pub fn record(&mut self, fields: &[(&str, String)]) {
        let text: Vec<String> = if self.tsv {
            fields.iter().map(|(_, v)| v.clone()).collect()
        } else {
            fields.iter().map(|(k, v)| format!("{k}={v}")).collect()
        };
        self.line(&text.join(if self.tsv { "\t" } else { " " }));
    }

    /// Right-aligned cells of the given widths, or tab-separated cells.
    pub fn table_row(&mut self, cells: &[(String, usize)]) {
        let text: Vec<String> = if self.tsv {
            cells.iter().map(|(c, _)| c.clone()).collect()
        } else {
            cells.iter().map(|(c, w)| format!("{c:>w$}")).collect()
        };
        self.line(&text.join(if self.tsv { "\t" } else { " | " }));
    }

    pub fn words(&mut self, words: &[&str]) {
        self.line(&words.join(if self.tsv { "\t" } else { " " }));
    }

    pub fn note(&mut self, s: &str) {
        self.line(&format!("# {s}"));
    }

    pub fn is_tsv(&self) -> bool {
        self.tsv
    }
}

/// Formats `x` with five significant digits, switching to scientific
/// notation outside `1e-4 ..= 99999.5`.
pub fn sig5(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mut e = x.abs().log10().floor() as i32;
    // rounding to five digits can carry into the next decade
    let scaled = (x.abs() / 10f64.powi(e - 4)).round();
    if scaled >= 100_000.0 {
        e += 1;
    }
    if (-4..5).contains(&e) {
        format!("{:.*}", (4 - e) as usize, x)
    } else {
        format!("{x:.4e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_significant_digits() {
        assert_eq!(sig5(4.51321), "4.5132");
        assert_eq!(sig5(0.162364), "0.16236");
        assert_eq!(sig5(39210.2), "39210");
        assert_eq!(sig5(435200.0), "4.3520e5");
        assert_eq!(sig5(99999.9), "1.0000e5");
        assert_eq!(sig5(9.99996), "10.000");
        assert_eq!(sig5(0.0), "0.0");
        assert_eq!(sig5(-1.5), "-1.5000");
    }

    #[test]
    fn layouts() {
        let mut h = Out::new(false);
        h.pair("count", 4);
        h.record(&[("value", "3".into()), ("witness", "{0}".into())]);
        assert_eq!(h.finish(), "count=4\nvalue=3 witness={0}\n");
        let mut t = Out::new(true);
        t.pair("count", 4);
        t.header(&["value", "witness"]);
        t.record(&[("value", "3".into()), ("witness", "{0}".into())]);
        assert_eq!(t.finish(), "count\t4\nvalue\twitness\n3\t{0}\n");
    }
}
