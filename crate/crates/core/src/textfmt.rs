//! Line-based text formats for every input and output type.
//!
//! Blank lines and lines starting with `#` are skipped. Parse errors carry the
//! 1-based line number of the offending line in the original text.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::braidclosure::ArtinBraidWord;
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::laurent::LaurentPoly;
use crate::purebraid::{Letter, PureBraidWord};
use crate::standardform::DiskBandForm;
use crate::stringlink::{index_at, position_of, DoubleIndex, DoubledStringLink};

struct Lines<'a> {
    inner: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { inner, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.inner.last().map_or(1, |l| l.0);
        let item = self.inner.get(self.pos).copied();
        self.pos += 1;
        item.ok_or_else(|| Error::parse(last, format!("unexpected end of input, expected {what}")))
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.inner.get(self.pos).copied()
    }

    fn rest(&mut self) -> impl Iterator<Item = (usize, &'a str)> + '_ {
        let items = &self.inner[self.pos.min(self.inner.len())..];
        self.pos = self.inner.len();
        items.iter().copied()
    }

    fn finish(&self) -> Result<()> {
        match self.inner.get(self.pos) {
            Some(&(line, text)) => Err(Error::parse(line, format!("trailing content `{text}`"))),
            None => Ok(()),
        }
    }
}

fn num<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("invalid number `{tok}`")))
}

fn nums<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace().map(|t| num(line, t)).collect()
}

/// Reads `key value key value ...` and returns the values in order.
fn header(line: usize, text: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let expected = keys.iter().map(|k| format!("{k} <value>")).collect::<Vec<_>>().join(" ");
    if toks.len() != 2 * keys.len() {
        return Err(Error::parse(line, format!("expected header `{expected}`")));
    }
    keys.iter()
        .enumerate()
        .map(|(i, k)| {
            if toks[2 * i] != *k {
                return Err(Error::parse(line, format!("expected header `{expected}`")));
            }
            num(line, toks[2 * i + 1])
        })
        .collect()
}

fn tagged<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    match text.split_once(char::is_whitespace) {
        Some((k, rest)) if k == key => Ok(rest),
        None if text == key => Ok(""),
        _ => Err(Error::parse(line, format!("expected line starting with `{key}`"))),
    }
}

fn with_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Size line, then one line of integers per row. The empty matrix is `0`.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut lines = Lines::new(text);
    let (l0, first) = lines.next("matrix size")?;
    let size: usize = num(l0, first)?;
    let mut rows = Vec::with_capacity(size);
    for r in 0..size {
        let (line, row) = lines.next(&format!("row {}", r + 1))?;
        let vals: Vec<BigInt> = nums(line, row)?;
        if vals.len() != size {
            return Err(Error::parse(line, format!("row has {} entries, expected {size}", vals.len())));
        }
        rows.push(vals);
    }
    lines.finish()?;
    IntMatrix::from_rows(rows)
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{}\n", m.size());
    for row in m.rows() {
        s.push_str(&join(row));
        s.push('\n');
    }
    s
}

/// `n <strands>`, then one `i j e` line per letter.
pub fn parse_pure_braid(text: &str) -> Result<PureBraidWord> {
    let mut lines = Lines::new(text);
    let (l0, head) = lines.next("header")?;
    let n = header(l0, head, &["n"])?[0];
    let mut triples = Vec::new();
    for (line, t) in lines.rest() {
        let v: Vec<i64> = nums(line, t)?;
        if v.len() != 3 || v[0] < 1 || v[1] < 1 {
            return Err(Error::parse(line, "expected `i j e`"));
        }
        triples.push((line, (v[0] as usize, v[1] as usize, v[2])));
    }
    let mut w = PureBraidWord::identity(n);
    for (line, (i, j, e)) in triples {
        let letter = with_line(line, Letter::new(i, j, e, n))?;
        with_line(line, w.push(letter))?;
    }
    Ok(w)
}

pub fn format_pure_braid(w: &PureBraidWord) -> String {
    let mut s = format!("n {}\n", w.strands());
    for l in w.letters() {
        s.push_str(&format!("{} {} {}\n", l.i(), l.j(), l.exp()));
    }
    s
}

fn double_index(line: usize, tok: &str) -> Result<DoubleIndex> {
    let (i, a) = tok
        .split_once('.')
        .ok_or_else(|| Error::parse(line, format!("expected double index `i.a`, got `{tok}`")))?;
    Ok(DoubleIndex::new(num(line, i)?, num(line, a)?))
}

/// `n <n> k <k>`, `framings f1 ... fn`, then `i.a j.b e` lines.
pub fn parse_string_link(text: &str) -> Result<DoubledStringLink> {
    let mut lines = Lines::new(text);
    let (l0, head) = lines.next("header")?;
    let nk = header(l0, head, &["n", "k"])?;
    let (n, k) = (nk[0], nk[1]);
    let (l1, fr) = lines.next("framings line")?;
    let framings: Vec<i64> = nums(l1, tagged(l1, fr, "framings")?)?;
    if framings.len() != n {
        return Err(Error::parse(l1, format!("expected {n} framings, got {}", framings.len())));
    }
    let mut letters = Vec::new();
    for (line, t) in lines.rest() {
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(line, "expected `i.a j.b e`"));
        }
        let x = double_index(line, toks[0])?;
        let y = double_index(line, toks[1])?;
        let e: i64 = num(line, toks[2])?;
        with_line(line, (|| Letter::new(position_of(x, n, k)?, position_of(y, n, k)?, e, n * k))())?;
        letters.push((x, y, e));
    }
    with_line(l0, DoubledStringLink::from_double_letters(n, k, framings, &letters))
}

pub fn format_string_link(l: &DoubledStringLink) -> String {
    let (n, k) = (l.n(), l.k());
    let mut s = format!("n {n} k {k}\nframings {}\n", join(l.framings()));
    for letter in l.braid().letters() {
        let x = index_at(letter.i(), n, k).expect("letter within braid");
        let y = index_at(letter.j(), n, k).expect("letter within braid");
        s.push_str(&format!("{}.{} {}.{} {}\n", x.strand, x.pass, y.strand, y.pass, letter.exp()));
    }
    s
}

/// `g <g>`, `framings f1 ... f2g`, then `i j lk` lines for nonzero band linking.
pub fn parse_disk_band(text: &str) -> Result<DiskBandForm> {
    let mut lines = Lines::new(text);
    let (l0, head) = lines.next("header")?;
    let g = header(l0, head, &["g"])?[0];
    let (l1, fr) = lines.next("framings line")?;
    let framings: Vec<BigInt> = nums(l1, tagged(l1, fr, "framings")?)?;
    let mut form = with_line(l1, DiskBandForm::new(g, framings))?;
    for (line, t) in lines.rest() {
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(line, "expected `i j lk`"));
        }
        let (i, j): (usize, usize) = (num(line, toks[0])?, num(line, toks[1])?);
        let lk: BigInt = num(line, toks[2])?;
        with_line(line, form.set_band_linking(i, j, lk))?;
    }
    Ok(form)
}

pub fn format_disk_band(d: &DiskBandForm) -> String {
    let mut s = format!("g {}\nframings {}\n", d.genus(), join(d.framings()));
    for (i, j, v) in d.nonzero_linking() {
        s.push_str(&format!("{i} {j} {v}\n"));
    }
    s
}

/// `n <strands>`, then one line of signed generator indices (may be absent).
pub fn parse_artin(text: &str) -> Result<ArtinBraidWord> {
    let mut lines = Lines::new(text);
    let (l0, head) = lines.next("header")?;
    let n = header(l0, head, &["n"])?[0];
    let (line, letters) = match lines.peek() {
        Some((line, t)) => {
            lines.pos += 1;
            (line, nums(line, t)?)
        }
        None => (l0, Vec::new()),
    };
    lines.finish()?;
    with_line(line, ArtinBraidWord::new(n, letters))
}

pub fn format_artin(w: &ArtinBraidWord) -> String {
    format!("n {}\n{}\n", w.strands(), join(w.letters()))
}

/// `lo=<lowest exponent>; coeffs=<c0 c1 ...>`.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    let mut lines = Lines::new(text);
    let (line, t) = lines.next("polynomial")?;
    lines.finish()?;
    let bad = || Error::parse(line, "expected `lo=<int>; coeffs=<ints>`");
    let (lo, coeffs) = t.split_once(';').ok_or_else(bad)?;
    let lo = lo.trim().strip_prefix("lo=").ok_or_else(bad)?;
    let coeffs = coeffs.trim().strip_prefix("coeffs=").ok_or_else(bad)?;
    let lo: i64 = num(line, lo.trim())?;
    let coeffs: Vec<BigInt> = nums(line, coeffs)?;
    if coeffs.is_empty() {
        return Err(bad());
    }
    Ok(LaurentPoly::from_coeffs(lo, coeffs))
}

pub fn format_laurent(p: &LaurentPoly) -> String {
    format!("{}\n", p.to_lo_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_text() {
        let m = IntMatrix::from_array([[-1, 1], [0, -1]]);
        let s = format_matrix(&m);
        assert_eq!(s, "2\n-1 1\n0 -1\n");
        assert_eq!(parse_matrix(&s).unwrap(), m);
        assert_eq!(format_matrix(&IntMatrix::zeros(0)), "0\n");
        assert_eq!(parse_matrix("0").unwrap(), IntMatrix::zeros(0));
        assert_eq!(parse_matrix("# trefoil\n2\n\n-1 1\n0 -1\n").unwrap(), m);
    }

    #[test]
    fn matrix_errors_carry_lines() {
        assert_eq!(parse_matrix("2\n1 2\n3").unwrap_err(), Error::parse(3, "row has 1 entries, expected 2"));
        assert!(matches!(parse_matrix("2\n1 x\n3 4"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("2\n1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1\n1\n5"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn pure_braid_text() {
        let w = PureBraidWord::from_triples(3, &[(1, 2, 1), (3, 2, -1)]).unwrap();
        let s = format_pure_braid(&w);
        assert_eq!(s, "n 3\n1 2 1\n2 3 -1\n");
        assert_eq!(parse_pure_braid(&s).unwrap(), w);
        assert!(matches!(parse_pure_braid("n 3\n1 1 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_pure_braid("n 3\n1 2 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_pure_braid("m 3"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn string_link_text() {
        let text = "n 2 k 2\nframings 0 -1\n1.1 2.2 1\n2.1 1.2 -1\n";
        let l = parse_string_link(text).unwrap();
        assert_eq!(l.braid().len(), 2);
        let again = parse_string_link(&format_string_link(&l)).unwrap();
        assert_eq!(again, l);
        assert!(matches!(
            parse_string_link("n 2 k 2\nframings 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_string_link("n 2 k 2\nframings 0 0\n1.1 3.1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn disk_band_text() {
        let text = "g 1\nframings -1 2\n1 2 3\n";
        let d = parse_disk_band(text).unwrap();
        assert_eq!(d.band_linking(1, 2).unwrap(), &BigInt::from(3));
        assert_eq!(format_disk_band(&d), text);
        assert!(matches!(parse_disk_band("g 1\nframings 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_disk_band("g 1\nframings 0 0\n1 1 2\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn artin_text() {
        let w = parse_artin("n 3\n1 -2 1 -2\n").unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(parse_artin(&format_artin(&w)).unwrap(), w);
        let e = parse_artin("n 2\n").unwrap();
        assert!(e.is_empty());
        assert_eq!(parse_artin(&format_artin(&e)).unwrap(), e);
        assert!(matches!(parse_artin("n 2\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_artin("n 2\n1\n1\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn laurent_text() {
        let p = LaurentPoly::from_i64s(-1, &[1, -1, 1]);
        assert_eq!(format_laurent(&p), "lo=-1; coeffs=1 -1 1\n");
        assert_eq!(parse_laurent(&format_laurent(&p)).unwrap(), p);
        assert_eq!(parse_laurent("lo=0; coeffs=0").unwrap(), LaurentPoly::zero());
        assert!(parse_laurent("coeffs=1").is_err());
    }
}
