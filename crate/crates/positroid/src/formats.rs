//! Text renderers: DOT for posets, CSV and LaTeX for polynomial tables.

use std::fmt::Write;

use positroid_core::poset::CbPoset;
use positroid_core::LaurentPoly;

/// A DOT digraph with one node per element, labeled by its text encoding,
/// and one rank per corank value.
pub fn poset_dot(p: &CbPoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph CB_{}_{} {{", p.k(), p.n()).unwrap();
    out.push_str("  rankdir=TB;\n  node [shape=box];\n");
    for (i, e) in p.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{e}\"];").unwrap();
    }
    let max = p.corank().iter().copied().max().unwrap_or(0);
    for level in 0..=max {
        let nodes: Vec<String> = (0..p.elements().len())
            .filter(|&i| p.corank()[i] == level)
            .map(|i| format!("n{i}"))
            .collect();
        if !nodes.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", nodes.join("; ")).unwrap();
        }
    }
    for &(u, v) in p.edges() {
        writeln!(out, "  n{u} -> n{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One row per entry: `k,n,polynomial` with ascending exponents.
pub fn csv_table(rows: &[(usize, usize, LaurentPoly)]) -> String {
    let mut out = String::from("k,n,polynomial\n");
    for (k, n, p) in rows {
        writeln!(out, "{k},{n},{p}").unwrap();
    }
    out
}

/// Exponent order for LaTeX rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

/// `q^{12}+7q^{11}+…` style, braces only where needed.
pub fn latex_poly(p: &LaurentPoly, order: Order) -> String {
    let terms: Vec<_> = match order {
        Order::Ascending => p.terms().collect(),
        Order::Descending => p.terms().rev().collect(),
    };
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        if neg {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let mag = c.magnitude();
        if e == 0 || mag != &num_bigint::BigUint::from(1u8) {
            write!(out, "{mag}").unwrap();
        }
        match e {
            0 => {}
            1 => out.push('q'),
            e if (0..10).contains(&e) => write!(out, "q^{e}").unwrap(),
            e => write!(out, "q^{{{e}}}").unwrap(),
        }
    }
    out
}

/// A two-column tabular with a rule between groups; `group` picks the key
/// (for example `k` or `n`) whose change starts a new group.
pub fn latex_table(
    rows: &[(usize, usize, LaurentPoly)],
    symbol: &str,
    order: Order,
    group: impl Fn(usize, usize) -> usize,
) -> String {
    let mut out =
        String::from("\\begin{table}[h]\n\\begin{tabular}{|p{1.1cm}|p{10.5cm}|}\n\\hline\n");
    let mut last = None;
    for (k, n, p) in rows {
        let g = group(*k, *n);
        if last.is_some_and(|l| l != g) {
            out.push_str("\\hline\n");
        }
        last = Some(g);
        writeln!(
            out,
            "${symbol}_{{{k},{n}}}(q)$ & ${}$ \\\\",
            latex_poly(p, order)
        )
        .unwrap();
    }
    writeln!(
        out,
        "\\hline\n\\end{{tabular}}\n\\caption{{${symbol}_{{k,n}}(q)$}}\n\\end{{table}}"
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use positroid_core::poset::build_cb;

    #[test]
    fn dot_counts() {
        let d = poset_dot(&build_cb(1, 2).unwrap());
        assert_eq!(d.matches("[label=").count(), 3);
        assert_eq!(d.matches(" -> ").count(), 2);
        let d = poset_dot(&build_cb(0, 1).unwrap());
        assert_eq!(
            (d.matches("[label=").count(), d.matches(" -> ").count()),
            (1, 0)
        );
        assert_eq!(
            poset_dot(&build_cb(2, 4).unwrap())
                .matches("[label=")
                .count(),
            33
        );
    }

    #[test]
    fn latex_braces() {
        let p: LaurentPoly = "35+210q+q^12".parse().unwrap();
        assert_eq!(latex_poly(&p, Order::Descending), "q^{12}+210q+35");
        assert_eq!(latex_poly(&p, Order::Ascending), "35+210q+q^{12}");
    }

    #[test]
    fn csv_layout() {
        let rows = vec![(2, 4, "6+4q+q^2".parse().unwrap())];
        assert_eq!(csv_table(&rows), "k,n,polynomial\n2,4,6+4q+q^2\n");
    }
}
