//! graph6 and sparse6 encodings (the nauty `formats.txt` layouts).
//!
//! Decoding accepts an optional `>>graph6<<` / `>>sparse6<<` header and a
//! trailing `\n` or `\r\n`. Encoding emits neither and is bit-exact with
//! nauty's `ntog6` / `ntos6`.

use std::io::BufRead;

use crate::error::ParseError;
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const G6_HEADER: &[u8] = b">>graph6<<";
const S6_HEADER: &[u8] = b">>sparse6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Sparse6,
}

/// Parse one record, auto-detecting graph6 vs sparse6 by its prefix.
pub fn parse(line: &str) -> Result<Graph, ParseError> {
    parse_bytes(line.as_bytes())
}

pub fn parse_bytes(line: &[u8]) -> Result<Graph, ParseError> {
    let line = trim_eol(line);
    if let Some(rest) = line.strip_prefix(S6_HEADER) {
        return decode_sparse6(rest, S6_HEADER.len());
    }
    if let Some(rest) = line.strip_prefix(G6_HEADER) {
        return decode_graph6(rest, G6_HEADER.len());
    }
    match line.first() {
        Some(b':') => decode_sparse6(line, 0),
        Some(b';') => Err(ParseError::Incremental),
        _ => decode_graph6(line, 0),
    }
}

pub fn detect(line: &[u8]) -> Format {
    let line = trim_eol(line);
    if line.starts_with(S6_HEADER) || line.first() == Some(&b':') {
        Format::Sparse6
    } else {
        Format::Graph6
    }
}

fn trim_eol(mut line: &[u8]) -> &[u8] {
    if let Some(rest) = line.strip_suffix(b"\n") {
        line = rest;
    }
    if let Some(rest) = line.strip_suffix(b"\r") {
        line = rest;
    }
    line
}

fn check_printable(bytes: &[u8], base: usize) -> Result<(), ParseError> {
    match bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        Some(i) => Err(ParseError::InvalidByte { offset: base + i, byte: bytes[i] }),
        None => Ok(()),
    }
}

/// Decode N(n). Returns (n, bytes consumed).
fn decode_size(bytes: &[u8], base: usize) -> Result<(usize, usize), ParseError> {
    let six = |i: usize| -> Result<u64, ParseError> {
        match bytes.get(i) {
            Some(&b) => Ok((b - BIAS) as u64),
            None => Err(ParseError::MalformedHeader { offset: base + i }),
        }
    };
    let (n, used) = match bytes.first() {
        None => return Err(ParseError::Empty),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | six(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = n << 6 | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - BIAS) as u64, 1),
    };
    if n > MAX_VERTICES as u64 {
        return Err(ParseError::TooManyVertices { n: n.min(usize::MAX as u64) as usize });
    }
    Ok((n as usize, used))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

fn decode_graph6(bytes: &[u8], base: usize) -> Result<Graph, ParseError> {
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    check_printable(bytes, base)?;
    let (n, used) = decode_size(bytes, base)?;
    let data = &bytes[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() < expected {
        return Err(ParseError::Truncated { offset: base + used, expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(ParseError::TrailingData { offset: base + used + expected });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows).expect("graph6 decoding yields a simple graph"))
}

/// MSB-first reader over 6-bit groups.
struct BitReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn read(&mut self, width: usize) -> Option<usize> {
        if self.pos + width > self.data.len() * 6 {
            return None;
        }
        let mut x = 0usize;
        for _ in 0..width {
            let byte = self.data[self.pos / 6] - BIAS;
            x = x << 1 | (byte >> (5 - self.pos % 6) & 1) as usize;
            self.pos += 1;
        }
        Some(x)
    }
}

fn bits_for(n: usize) -> usize {
    // bits needed to write n-1
    let mut k = 0;
    while n > 1 && (1usize << k) < n {
        k += 1;
    }
    k
}

fn decode_sparse6(bytes: &[u8], base: usize) -> Result<Graph, ParseError> {
    debug_assert_eq!(bytes.first(), Some(&b':'));
    let body = &bytes[1..];
    check_printable(body, base + 1)?;
    let (n, used) = decode_size(body, base + 1).map_err(|e| match e {
        ParseError::Empty => ParseError::MalformedHeader { offset: base + 1 },
        e => e,
    })?;
    let k = bits_for(n);
    let mut reader = BitReader { data: &body[used..], pos: 0 };
    let mut rows = vec![0u64; n];
    let mut v = 0usize;
    while let Some(b) = reader.read(1) {
        let Some(x) = reader.read(k) else { break };
        if b == 1 {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(ParseError::Loop { vertex: v });
        } else {
            rows[x] |= 1 << v;
            rows[v] |= 1 << x;
        }
    }
    Ok(Graph::from_rows(rows).expect("sparse6 decoding yields a simple graph"))
}

/// MSB-first writer into 6-bit groups.
#[derive(Default)]
struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn push(&mut self, x: usize, width: usize) {
        for s in (0..width).rev() {
            self.bits.push(x >> s & 1 == 1);
        }
    }

    fn pack(&self, out: &mut Vec<u8>) {
        for chunk in self.bits.chunks(6) {
            let mut byte = 0u8;
            for (i, &bit) in chunk.iter().enumerate() {
                byte |= (bit as u8) << (5 - i);
            }
            out.push(byte + BIAS);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12);
    encode_size(n, &mut out);
    let mut w = BitWriter::default();
    for j in 1..n {
        for i in 0..j {
            w.push(g.has_edge(i, j) as usize, 1);
        }
    }
    w.pack(&mut out);
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn encode_sparse6(g: &Graph) -> String {
    let n = g.order();
    let k = bits_for(n);
    let mut out = vec![b':'];
    encode_size(n, &mut out);
    let mut w = BitWriter::default();
    let mut v = 0usize;
    for j in 0..n {
        for i in g.neighbors(j).iter().take_while(|&i| i < j) {
            if j == v {
                w.push(0, 1);
            } else {
                w.push(1, 1);
                if j > v + 1 {
                    w.push(j, k);
                    w.push(0, 1);
                }
                v = j;
            }
            w.push(i, k);
        }
    }
    let rem = w.bits.len() % 6;
    if rem != 0 {
        let pad = 6 - rem;
        if pad > k && n >= 2 && v == n - 2 && n == 1 << k {
            w.push(0, 1);
            w.push((1 << (pad - 1)) - 1, pad - 1);
        } else {
            w.push((1 << pad) - 1, pad);
        }
    }
    w.pack(&mut out);
    String::from_utf8(out).expect("sparse6 is ASCII")
}

pub fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g),
        Format::Sparse6 => encode_sparse6(g),
    }
}

/// One non-blank record of a newline-delimited stream.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line number.
    pub line: usize,
    /// Byte offset of the line start in the stream.
    pub offset: u64,
    pub text: String,
    pub graph: Result<Graph, ParseError>,
}

/// Iterate the records of a graph6/sparse6 stream, skipping blank lines.
/// I/O errors end the iteration with an `Err` item.
pub fn records<R: BufRead>(reader: R) -> Records<R> {
    Records { reader, line: 0, offset: 0, buf: Vec::new() }
}

pub struct Records<R> {
    reader: R,
    line: usize,
    offset: u64,
    buf: Vec<u8>,
}

impl<R: BufRead> Iterator for Records<R> {
    type Item = std::io::Result<Record>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            let start = self.offset;
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(len) => {
                    self.offset += len as u64;
                    self.line += 1;
                }
                Err(e) => return Some(Err(e)),
            }
            let bytes = trim_eol(&self.buf);
            if bytes.iter().all(|b| b.is_ascii_whitespace()) {
                continue;
            }
            return Some(Ok(Record {
                line: self.line,
                offset: start,
                text: String::from_utf8_lossy(bytes).into_owned(),
                graph: parse_bytes(bytes),
            }));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn small_examples() {
        let g = parse("D?{").unwrap();
        assert_eq!(g, families::star(4).permuted(&[4, 0, 1, 2, 3]));
        assert_eq!(encode_graph6(&g), "D?{");

        let k1 = parse("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(parse("?").unwrap().order(), 0);

        assert!(matches!(
            parse("D?{\x00garbage"),
            Err(ParseError::InvalidByte { offset: 3, byte: 0 })
        ));
        assert!(matches!(parse("D?{?"), Err(ParseError::TrailingData { offset: 3 })));
        assert!(matches!(
            parse("D?"),
            Err(ParseError::Truncated { offset: 1, expected: 2, found: 1 })
        ));
        assert!(matches!(parse(""), Err(ParseError::Empty)));
        assert!(matches!(parse("~?@@"), Err(ParseError::TooManyVertices { n: 65 })));
        assert!(matches!(parse("~?@"), Err(ParseError::MalformedHeader { offset: 3 })));
    }

    #[test]
    fn headers_and_line_endings() {
        assert_eq!(parse(">>graph6<<D?{\r\n").unwrap(), parse("D?{").unwrap());
        assert!(matches!(
            parse(">>graph6<<D?\x01"),
            Err(ParseError::InvalidByte { offset: 12, .. })
        ));
        let k4 = families::complete(4);
        let s6 = encode_sparse6(&k4);
        assert_eq!(parse(&format!(">>sparse6<<{s6}\n")).unwrap(), k4);
    }

    #[test]
    fn petgraph_reference_string() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn nauty_reference_strings() {
        // formats.txt example: ":Fa@x^" encodes 0-1 0-2 1-2 5-6 on 7 vertices
        let g = parse(":Fa@x^").unwrap();
        assert_eq!(g, Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (5, 6)]).unwrap());
        assert_eq!(encode_sparse6(&g), ":Fa@x^");
        assert_eq!(encode_graph6(&families::petersen()), "IheA@GUAo");
    }

    #[test]
    fn sparse6_padding_special_case() {
        // n = 2^k with the last edge on vertex n-2: padding must start with a 0
        let g = Graph::from_edges(4, &[(0, 2)]).unwrap();
        let s = encode_sparse6(&g);
        assert_eq!(parse(&s).unwrap(), g);
        let g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(parse(&encode_sparse6(&g)).unwrap(), g);
    }

    #[test]
    fn large_sizes_use_long_header() {
        for n in [62, 63, 64] {
            let g = families::cycle(n);
            let s = encode_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n >= 63);
            assert_eq!(parse(&s).unwrap(), g);
            assert_eq!(parse(&encode_sparse6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn record_stream() {
        let input = b"A_\n\nD?{\r\nbad\x01\n:Fa@x^";
        let recs: Vec<_> = records(&input[..]).map(Result::unwrap).collect();
        assert_eq!(recs.len(), 4);
        assert_eq!(recs[1].line, 3);
        assert_eq!(recs[1].offset, 4);
        assert!(recs[2].graph.is_err());
        assert_eq!(recs[3].graph.as_ref().unwrap().size(), 4);
    }
}
