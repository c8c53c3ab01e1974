//! graph6 codec (short header form, n <= 62).

use std::io::{BufRead, Write};

use super::{bit, Graph};
use crate::error::{Error, Result};

const MAX_G6_ORDER: usize = 62;

fn g6_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { pos, msg: msg.into() }
}

impl Graph {
    /// Encodes the upper-triangle bits column by column
    /// (x01, x02, x12, x03, ...) in 6-bit big-endian groups offset by 63.
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.order();
        if n > MAX_G6_ORDER {
            return Err(g6_err(0, format!("order {n} needs the long header form, which is unsupported")));
        }
        let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        out.push(n as u8 + 63);
        let mut group = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                group = (group << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(group + 63);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((group << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
        let Some(&head) = bytes.first() else {
            return Err(g6_err(0, "empty input"));
        };
        if !(63..=126).contains(&head) {
            return Err(g6_err(0, format!("byte {head} outside [63,126]")));
        }
        if head == 126 {
            return Err(g6_err(0, "long header form (n > 62) is unsupported"));
        }
        let n = (head - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let expected = 1 + nbits.div_ceil(6);
        if bytes.len() != expected {
            return Err(g6_err(
                bytes.len().min(expected),
                format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
            ));
        }
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for (pos, &b) in bytes.iter().enumerate().skip(1) {
            if !(63..=126).contains(&b) {
                return Err(g6_err(pos, format!("byte {b} outside [63,126]")));
            }
            let val = b - 63;
            for shift in (0..6).rev() {
                if k >= nbits {
                    break;
                }
                if val >> shift & 1 == 1 {
                    let (i, j) = upper_index(k);
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(Graph::from_rows(n, adj))
    }
}

/// Maps the k-th bit of the column-wise upper triangle to `(i, j)`, `i < j`.
fn upper_index(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Reads newline-delimited graph6, skipping blank lines and an optional
/// `>>graph6<<` header. Errors carry the 1-based line number in `pos`.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(g6_err(i + 1, e.to_string()))),
        };
        let t = line.trim();
        let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
        if t.is_empty() {
            return None;
        }
        Some(Graph::from_graph6(t).map_err(|e| match e {
            Error::Graph6 { msg, pos } => g6_err(i + 1, format!("byte {pos}: {msg}")),
            other => other,
        }))
    })
}

pub fn write_graph6_stream<'a, W, I>(mut w: W, graphs: I) -> std::io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        let s = g
            .to_graph6()
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e.to_string()))?;
        writeln!(w, "{s}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_encodings() {
        assert_eq!(Graph::empty(1).unwrap().to_graph6().unwrap().as_bytes(), &[64]);
        assert_eq!(Graph::complete(2).unwrap().to_graph6().unwrap(), "A_");
        assert_eq!(Graph::empty(0).unwrap().to_graph6().unwrap(), "?");
        // Path 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1.
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.to_graph6().unwrap().as_bytes(), &[67, 63 + 0b101001]);
        assert_eq!(Graph::complete(5).unwrap().to_graph6().unwrap(), "D~{");
    }

    #[test]
    fn decode_rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("A").is_err());
        assert!(Graph::from_graph6("A__").is_err());
        assert!(Graph::from_graph6("A\x7f").is_err());
        assert!(Graph::from_graph6("C ").is_err());
        assert!(Graph::from_graph6("~?@?").is_err());
        assert!(Graph::empty(63).unwrap().to_graph6().is_err());
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=20);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s = g.to_graph6().unwrap();
            assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn streams() {
        let gs = vec![Graph::complete(3).unwrap(), Graph::empty(2).unwrap()];
        let mut buf = Vec::new();
        write_graph6_stream(&mut buf, &gs).unwrap();
        let text = format!(">>graph6<<{}\n\n", String::from_utf8(buf).unwrap());
        let back: Vec<Graph> = read_graph6_stream(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(back, gs);
        let bad: Vec<_> = read_graph6_stream("Bw\nB\n".as_bytes()).collect();
        assert!(matches!(bad[1], Err(Error::Graph6 { pos: 2, .. })));
    }
}
