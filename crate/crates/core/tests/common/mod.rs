#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use binsys::format::gpd;
use binsys::Groupoid;

/// Shared with the acceptance crate, so the path goes through `../core`.
fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn fixture(name: &str) -> Groupoid {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    gpd::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".gpd"))
        .collect();
    names.sort();
    names
}

/// Rows separated by `/`, entries written with the element names of `like`.
pub fn table_like(like: &Groupoid, rows: &str) -> Groupoid {
    let n = like.order();
    let names: Vec<String> = (0..n).map(|x| like.label(x)).collect();
    let rows: Vec<Vec<usize>> = rows
        .split('/')
        .map(|r| {
            r.split_whitespace()
                .map(|t| {
                    names
                        .iter()
                        .position(|s| s == t)
                        .unwrap_or_else(|| panic!("unknown {t}"))
                })
                .collect()
        })
        .collect();
    Groupoid::new(n, &rows, like.labels().map(<[String]>::to_vec), like.zero()).unwrap()
}

/// Unlabelled table from rows separated by `/`.
pub fn table(rows: &str) -> Groupoid {
    let rows: Vec<Vec<usize>> = rows
        .split('/')
        .map(|r| r.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    Groupoid::new(rows.len(), &rows, None, None).unwrap()
}

/// `(g ⋄ h)(x, y) = h(g(x, y), g(y, x))`, written out independently of the
/// library's product.
pub fn naive_product(g: &Groupoid, h: &Groupoid) -> Groupoid {
    let n = g.order();
    let mut rows = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[x][y] = h.get(g.get(x, y), g.get(y, x));
        }
    }
    Groupoid::new(n, &rows, None, None).unwrap()
}

/// All tables of order `n` by nested counting, independent of the library's
/// enumerator.
pub fn naive_all(n: usize) -> Vec<Groupoid> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut k| {
            let mut v = vec![0; cells];
            for c in v.iter_mut().rev() {
                *c = k % n;
                k /= n;
            }
            Groupoid::from_cells(n, v).unwrap()
        })
        .collect()
}
