use super::{independence_number, Invariant, Witness, WitnessedValue};
use crate::{Error, Graph, Result, VertexSet};

pub const CHROMATIC_MAX_ORDER: usize = 16;

struct Colorer<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    classes: Vec<VertexSet>,
}

impl Colorer<'_> {
    /// Colors vertices in id order, trying colors in increasing order and
    /// opening at most one new color per step, so the first success is the
    /// lexicographically least canonical coloring.
    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.order() {
            return true;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if !(self.classes[c] & self.g.neighbors(v)).is_empty() {
                continue;
            }
            self.classes[c].insert(v);
            self.color[v] = c;
            if self.extend(v + 1, used.max(c + 1)) {
                return true;
            }
            self.classes[c].remove(v);
        }
        false
    }
}

/// `χ(G)` with the color classes of the lexicographically least canonical
/// coloring (colors numbered by first appearance).
pub fn chromatic_number(g: &Graph) -> Result<WitnessedValue> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(Error::cap(format!(
            "chromatic number handles at most {CHROMATIC_MAX_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(WitnessedValue {
            invariant: Invariant::Chromatic,
            value: 0,
            witness: Witness::Classes(Vec::new()),
        });
    }
    let alpha = independence_number(g)?.value;
    let mut k = n.div_ceil(alpha);
    loop {
        let mut c = Colorer {
            g,
            k,
            color: vec![0; n],
            classes: vec![VertexSet::EMPTY; k],
        };
        if c.extend(0, 0) {
            return Ok(WitnessedValue {
                invariant: Invariant::Chromatic,
                value: k,
                witness: Witness::Classes(c.classes),
            });
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, random_gnp};
    use crate::Seed;

    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (1..=n)
            .find(|&k| {
                (0..k.pow(n as u32)).any(|mut code| {
                    let mut col = vec![0; n];
                    for c in col.iter_mut() {
                        *c = code % k;
                        code /= k;
                    }
                    g.edges().iter().all(|&(u, v)| col[u] != col[v])
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        for n in 1..=7 {
            assert_eq!(chromatic_number(&complete(n)).unwrap().value, n);
        }
        assert_eq!(chromatic_number(&cycle(5)).unwrap().value, 3);
        assert_eq!(chromatic_number(&path(4)).unwrap().value, 2);
        assert_eq!(chromatic_number(&petersen()).unwrap().value, 3);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().value, 0);
        assert!(chromatic_number(&Graph::empty(17)).is_err());
    }

    #[test]
    fn classes_for_c5() {
        let w = chromatic_number(&cycle(5)).unwrap();
        let Witness::Classes(classes) = w.witness else { panic!() };
        let classes: Vec<_> = classes.iter().map(|c| c.to_vec()).collect();
        assert_eq!(classes, vec![vec![0, 2], vec![1, 3], vec![4]]);
    }

    #[test]
    fn matches_brute_force() {
        for s in 0..150 {
            let g = random_gnp(1 + (s % 7) as usize, 0.5, Seed(s));
            assert_eq!(chromatic_number(&g).unwrap().value, brute_force(&g));
        }
    }

    #[test]
    fn sixteen_vertices_finish() {
        for s in 0..5 {
            let g = random_gnp(16, 0.5, Seed(s));
            assert!(chromatic_number(&g).unwrap().validate(&g));
        }
    }
}
