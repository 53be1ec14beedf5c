//! graph6 encoding: an order prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use std::io::BufRead;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + data_len(n));
    // n <= 32 always takes the one-byte form
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6BadChar { ch: b as char, pos });
        }
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6Malformed("empty string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6Malformed("incomplete 8-byte order prefix".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6Malformed("incomplete 4-byte order prefix".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(Error::Graph6Malformed("order 0 is not supported".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity { order: n, max: MAX_ORDER });
    }
    let expected = data_len(n);
    if body.len() < expected {
        return Err(Error::Graph6Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Error::Graph6Malformed(format!(
            "{} trailing bytes after the adjacency data",
            body.len() - expected
        )));
    }
    let total_bits = n * (n - 1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total_bits..expected * 6).any(bit) {
        return Err(Error::Graph6Malformed("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Reads one graph per line, skipping blank lines.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Graph6Malformed(format!("line {}: {e}", lineno + 1)))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(from_graph6(line)?);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn c5_hand_encoding() {
        // cycle 0-1-2-3-4-0; column-wise bits x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) | x(0,4) x(1,4) x(2,4) x(3,4)
        // = 101001 | 1001 -> 41+63=104 'h', 100100=36+63=99 'c'
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(from_graph6("Dhc").unwrap(), c5);
    }

    #[test]
    fn small_orders() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6Malformed(_))));
        assert!(matches!(from_graph6("D"), Err(Error::Graph6Truncated { expected: 2, found: 0 })));
        assert!(matches!(from_graph6("C~~"), Err(Error::Graph6Malformed(_))));
        assert!(matches!(from_graph6("C\x20"), Err(Error::Graph6BadChar { pos: 1, .. })));
        // 'A' then 0b100001: padding bit set
        assert!(matches!(from_graph6("A`"), Err(Error::Graph6Malformed(_))));
        assert!(matches!(from_graph6("~??~"), Err(Error::Capacity { order: 63, .. })));
        assert!(matches!(from_graph6("~?"), Err(Error::Graph6Malformed(_))));
        assert!(matches!(from_graph6("?"), Err(Error::Graph6Malformed(_))));
    }

    #[test]
    fn long_prefix_accepted_for_small_orders() {
        // 4-byte prefix for n=4 followed by K4's data
        assert_eq!(from_graph6("~??C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn stream() {
        let text = "C~\n\nDhc\n";
        let gs = read_graph6_stream(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 2);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=MAX_ORDER).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrip(g in arb_graph()) {
            let s = to_graph6(&g);
            let h = from_graph6(&s).unwrap();
            prop_assert_eq!(h, g);
            prop_assert_eq!(to_graph6(&h), s);
        }
    }
}
