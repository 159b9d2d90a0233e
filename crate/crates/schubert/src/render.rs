//! Plain-text rendering for the CLI.

use std::fmt::Write;

use schubert_core::diagram::{effective_region, essential_set, rothe_diagram};
use schubert_core::{BoxSet, MultiPoly, Permutation};

/// Grid of `w` on `[n] × [n]`.
///
/// `o` marks a dot `(i, w(i))`, `E` an essential box, `#` another diagram
/// box, `+` a box of the effective region outside the diagram, `.` the rest.
pub fn grid(w: &Permutation, n: usize) -> String {
    let d = rothe_diagram(w);
    let e = essential_set(w);
    let lam = effective_region(w);
    let mut out = String::new();
    for i in 1..=n {
        let row: Vec<&str> = (1..=n)
            .map(|j| {
                if w.value(i) == j {
                    "o"
                } else if e.contains(i, j) {
                    "E"
                } else if d.contains(i, j) {
                    "#"
                } else if lam.contains(i, j) {
                    "+"
                } else {
                    "."
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn box_list(b: &BoxSet) -> String {
    if b.is_empty() {
        return "{}".into();
    }
    let items: Vec<String> = b.iter().map(|(i, j)| format!("({i},{j})")).collect();
    items.join(" ")
}

/// `z11` style names, with a comma once an index reaches two digits.
pub fn z_name(row: usize, col: usize) -> String {
    if row < 10 && col < 10 {
        format!("z{row}{col}")
    } else {
        format!("z{row},{col}")
    }
}

/// Polynomial in the `z` variables listed by `variables`.
pub fn z_poly(p: &MultiPoly, variables: &[(usize, usize)]) -> String {
    p.format_with(|idx| {
        let (r, c) = variables[idx - 1];
        z_name(r, c)
    })
}

pub fn index_list(items: &[usize]) -> String {
    let mut s = String::from("[");
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{v}");
    }
    s.push(']');
    s
}
