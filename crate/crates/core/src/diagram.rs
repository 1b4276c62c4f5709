//! Edge-labelled permutation diagram of the flag action, with DOT output.

use std::fmt::Write;

use crate::flags::FlagSystem;

/// One node per flag, one edge per generator 2-cycle, one semi-edge per
/// fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagDiagram {
    pub nodes: usize,
    /// `(lower flag, higher flag, generator)` in emission order.
    pub edges: Vec<(usize, usize, usize)>,
    /// `(flag, generator)` for fixed points.
    pub semi_edges: Vec<(usize, usize)>,
}

impl FlagDiagram {
    pub fn new(fs: &FlagSystem) -> Self {
        let mut edges = Vec::new();
        let mut semi_edges = Vec::new();
        for x in 0..fs.flags() {
            for i in 0..3 {
                let y = fs.act(x, i);
                if y == x {
                    semi_edges.push((x, i));
                } else if x < y {
                    edges.push((x, y, i));
                }
            }
        }
        FlagDiagram {
            nodes: fs.flags(),
            edges,
            semi_edges,
        }
    }

    /// Bipartite in the sense of permutation diagrams: a semi-edge counts as
    /// an odd cycle, so this holds iff the map is orientable and closed.
    pub fn is_bipartite(&self) -> bool {
        if !self.semi_edges.is_empty() {
            return false;
        }
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut colour = vec![u8::MAX; self.nodes];
        for s in 0..self.nodes {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flags {\n");
        let mut semi = self.semi_edges.iter().peekable();
        for x in 0..self.nodes {
            let mut fixed = Vec::new();
            while let Some(&&(f, i)) = semi.peek() {
                if f != x {
                    break;
                }
                fixed.push(format!("r{i}"));
                semi.next();
            }
            if fixed.is_empty() {
                writeln!(out, "  f{x};").unwrap();
            } else {
                writeln!(out, "  f{x} [fixed=\"{}\"];", fixed.join(",")).unwrap();
            }
        }
        for &(a, b, i) in &self.edges {
            writeln!(out, "  f{a} -- f{b} [label=\"r{i}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub fn export_diagram(fs: &FlagSystem) -> String {
    FlagDiagram::new(fs).to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::Kind;
    use crate::perm::Permutation;

    #[test]
    fn two_flag_sphere_dot() {
        let s = Permutation::from_images(vec![1, 0]).unwrap();
        let fs = FlagSystem::new(Kind::Map, [s.clone(), s.clone(), s]).unwrap();
        let d = FlagDiagram::new(&fs);
        assert_eq!(d.edges, vec![(0, 1, 0), (0, 1, 1), (0, 1, 2)]);
        assert!(d.is_bipartite());
        assert_eq!(
            d.to_dot(),
            "graph flags {\n  f0;\n  f1;\n  f0 -- f1 [label=\"r0\"];\n  \
             f0 -- f1 [label=\"r1\"];\n  f0 -- f1 [label=\"r2\"];\n}\n"
        );
    }

    #[test]
    fn fixed_points_become_attributes() {
        let id = Permutation::identity(1);
        let fs = FlagSystem::new(Kind::Map, [id.clone(), id.clone(), id]).unwrap();
        let dot = export_diagram(&fs);
        assert!(dot.contains("f0 [fixed=\"r0,r1,r2\"];"));
        assert!(!dot.contains("--"));
        assert!(!FlagDiagram::new(&fs).is_bipartite());
    }
}
