//! In-memory diagrams: single suspended unknot, A_k chains and the fishtail.

use brieskorn_core::compiler::{parse_diagram_with, CompileError, RelativeSteinDiagram};

/// `a < b`: an unknot square with X on the diagonal cells `(a,a)`, `(b,b)`.
fn squares_grid(n: usize, squares: &[(usize, usize)], labels: &[(&str, bool)]) -> String {
    let mut x = vec![0; n];
    let mut o = vec![0; n];
    for &(a, b) in squares {
        x[a] = a;
        o[a] = b;
        x[b] = b;
        o[b] = a;
    }
    let mut s = format!("grid {n}\n");
    for r in 0..n {
        let row: String = (0..n)
            .map(|c| {
                if x[c] == r {
                    'X'
                } else if o[c] == r {
                    'O'
                } else {
                    '.'
                }
            })
            .collect();
        s.push_str(&row);
        s.push('\n');
    }
    for (i, (role, disk)) in labels.iter().enumerate() {
        s.push_str(&format!("component {i} role={role} disk={disk}\n"));
    }
    s
}

/// Squares of a linear chain of `k` unknots, each overlapping the next.
pub fn chain_squares(k: usize) -> Vec<(usize, usize)> {
    if k == 1 {
        return vec![(0, 1)];
    }
    let mut v = vec![(0, 2)];
    v.extend((1..k - 1).map(|i| (2 * i - 1, 2 * i + 2)));
    v.push((2 * k - 3, 2 * k - 1));
    v
}

pub fn chain_grid(k: usize) -> String {
    squares_grid(2 * k, &chain_squares(k), &vec![("solid", true); k])
}

fn build(text: &str, files: Vec<(&'static str, String)>) -> Result<RelativeSteinDiagram, CompileError> {
    parse_diagram_with(text, |name| {
        files
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.clone())
            .ok_or(CompileError::Io {
                path: name.into(),
                msg: "not found".into(),
            })
    })
}

pub fn chain_diagram(k: usize) -> RelativeSteinDiagram {
    let mut text = String::from("rel-stein-diagram v1\ndots 0\n");
    for i in 0..k {
        text.push_str(&format!("solid chain.grid component {i}\n"));
    }
    build(&text, vec![("chain.grid", chain_grid(k))]).unwrap()
}

pub fn fishtail_grid() -> String {
    squares_grid(4, &[(0, 1), (2, 3)], &[("dashed", false), ("solid", true)])
}

pub fn fishtail_diagram() -> RelativeSteinDiagram {
    build(
        "rel-stein-diagram v1\ndots 2\ndashed f.grid component 0 framing -2\nsolid f.grid component 1\n",
        vec![("f.grid", fishtail_grid())],
    )
    .unwrap()
}

pub fn diagram_from(text: &str, files: Vec<(&'static str, String)>) -> Result<RelativeSteinDiagram, CompileError> {
    build(text, files)
}
