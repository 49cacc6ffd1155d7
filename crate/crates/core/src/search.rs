//! The deterministic integer grids scanned by the bounded searches.

/// Largest constant magnitude tried by any search.
pub const GRID_RADIUS: i64 = 64;

/// Integers `0, 1, -1, 2, -2, ...` up to `radius` in magnitude.
pub fn signed_line(radius: i64) -> Vec<i64> {
    let mut out = vec![0];
    for k in 1..=radius {
        out.push(k);
        out.push(-k);
    }
    out
}

/// All pairs `(p, q)` with `|p|, |q| <= radius`, ordered by
/// `(|p| + |q|, |p|, p < 0, |q|, q < 0)`.
pub fn signed_grid(radius: i64) -> Vec<(i64, i64)> {
    let line = signed_line(radius);
    let mut out: Vec<(i64, i64)> =
        line.iter().flat_map(|&p| line.iter().map(move |&q| (p, q))).collect();
    out.sort_by_key(|&(p, q)| (p.abs() + q.abs(), p.abs(), p < 0, q.abs(), q < 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order() {
        let g = signed_grid(1);
        assert_eq!(g.len(), 9);
        assert_eq!(&g[..5], &[(0, 0), (0, 1), (0, -1), (1, 0), (-1, 0)]);
        assert_eq!(signed_line(2), vec![0, 1, -1, 2, -2]);
    }
}
