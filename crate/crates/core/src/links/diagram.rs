use std::fmt::Write as _;

use super::pd::{PdCode, Sign};

/// One crossing in terms of semiarc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRoles {
    pub sign: Sign,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

/// A diagram split into semiarcs (one per PD label, plus one per free loop)
/// and arcs (semiarcs joined through the crossings they pass over).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pd: PdCode,
    /// PD label of each labelled semiarc; free loops come after these.
    labels: Vec<u32>,
    crossings: Vec<CrossingRoles>,
    arc_of: Vec<usize>,
    arc_count: usize,
}

impl Diagram {
    pub fn new(pd: &PdCode) -> Diagram {
        let labels = pd.labels();
        let index = |l: u32| labels.binary_search(&l).expect("label present");
        let crossings: Vec<CrossingRoles> = pd
            .crossings()
            .iter()
            .map(|c| CrossingRoles {
                sign: c.sign,
                under_in: index(c.under_in()),
                over_in: index(c.over_in()),
                under_out: index(c.under_out()),
                over_out: index(c.over_out()),
            })
            .collect();
        let semiarcs = labels.len() + pd.free_loops();

        let mut parent: Vec<usize> = (0..semiarcs).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &crossings {
            let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        // arcs numbered by their least semiarc
        let mut arc_of = vec![usize::MAX; semiarcs];
        let mut root_arc = vec![usize::MAX; semiarcs];
        let mut arc_count = 0;
        for s in 0..semiarcs {
            let r = find(&mut parent, s);
            if root_arc[r] == usize::MAX {
                root_arc[r] = arc_count;
                arc_count += 1;
            }
            arc_of[s] = root_arc[r];
        }
        Diagram {
            pd: pd.clone(),
            labels,
            crossings,
            arc_of,
            arc_count,
        }
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn semiarc_count(&self) -> usize {
        self.arc_of.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[CrossingRoles] {
        &self.crossings
    }

    /// Arc containing semiarc `s`.
    pub fn arc_of(&self, s: usize) -> usize {
        self.arc_of[s]
    }

    /// PD label of a semiarc, `None` for a free loop.
    pub fn label(&self, s: usize) -> Option<u32> {
        self.labels.get(s).copied()
    }

    pub fn component_count(&self) -> usize {
        self.pd.component_count()
    }

    /// Knot quandle presentation: one generator per arc, one relation per
    /// crossing, `under_in ▷ over = under_out` (with `▷^-1` at negative
    /// crossings).
    pub fn presentation(&self) -> String {
        let gens: Vec<String> = (1..=self.arc_count).map(|i| format!("x{i}")).collect();
        let rels: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let op = match c.sign {
                    Sign::Positive => "▷",
                    Sign::Negative => "▷^-1",
                };
                format!(
                    "x{}{op}x{}=x{}",
                    self.arc_of[c.under_in] + 1,
                    self.arc_of[c.over_in] + 1,
                    self.arc_of[c.under_out] + 1
                )
            })
            .collect();
        let mut out = String::new();
        write!(out, "⟨{}", gens.join(",")).unwrap();
        if !rels.is_empty() {
            write!(out, " | {}", rels.join(", ")).unwrap();
        }
        out.push('⟩');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::builtin_diagram;

    fn diagram(name: &str) -> Diagram {
        Diagram::new(&builtin_diagram(name).unwrap())
    }

    #[test]
    fn arc_counts() {
        assert_eq!(diagram("unknot").arc_count(), 1);
        assert_eq!(diagram("unknot").semiarc_count(), 1);
        assert_eq!(diagram("hopf").arc_count(), 2);
        assert_eq!(diagram("hopf").semiarc_count(), 4);
        assert_eq!(diagram("trefoil").arc_count(), 3);
        assert_eq!(diagram("knot_5_1").arc_count(), 5);
        assert_eq!(diagram("knot_6_1").arc_count(), 6);
    }

    #[test]
    fn presentations() {
        assert_eq!(diagram("unknot").presentation(), "⟨x1⟩");
        let h = diagram("hopf").presentation();
        assert!(h.starts_with("⟨x1,x2 | "), "{h}");
        assert_eq!(h.matches('=').count(), 2);
        let t = diagram("trefoil").presentation();
        assert!(t.starts_with("⟨x1,x2,x3 | "), "{t}");
        assert_eq!(t.matches('=').count(), 3);
    }
}
