//! Test-side reference implementations. Deliberately naive: every query
//! rescans the full edge list, nothing is cached, no symmetry is used.

use hypercolor::Hypergraph;

/// `blocked[v][c-1]`: some edge through `v` has all its other vertices colored `c`.
pub fn blocked(h: &Hypergraph, colors: &[u16], q: usize) -> Vec<Vec<bool>> {
    let mut out = vec![vec![false; q]; h.n()];
    for e in h.edges() {
        for &v in e {
            let mut others = e.iter().filter(|&&x| x != v).map(|&x| colors[x as usize]);
            let first = others.next().unwrap();
            if first != 0 && others.all(|c| c == first) {
                out[v as usize][first as usize - 1] = true;
            }
        }
    }
    out
}

/// Whether color `c` is blocked at `v`, scanning the edges through `v`.
pub fn blocked_at(h: &Hypergraph, colors: &[u16], v: u32, c: u16) -> bool {
    h.incident(v).iter().any(|&e| h.edge(e as usize).iter().all(|&x| x == v || colors[x as usize] == c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Running,
    AWins,
    BWins,
}

pub fn outcome(h: &Hypergraph, colors: &[u16], q: usize) -> Outcome {
    let b = blocked(h, colors, q);
    let dead = (0..h.n()).any(|v| colors[v] == 0 && b[v].iter().all(|&x| x));
    if dead {
        Outcome::BWins
    } else if colors.iter().all(|&c| c != 0) {
        Outcome::AWins
    } else {
        Outcome::Running
    }
}

/// Plain minimax over every legal move; `true` if Alice wins.
pub fn alice_wins(h: &Hypergraph, q: usize) -> bool {
    fn go(h: &Hypergraph, q: usize, colors: &mut Vec<u16>, alice: bool) -> bool {
        match outcome(h, colors, q) {
            Outcome::AWins => return true,
            Outcome::BWins => return false,
            Outcome::Running => {}
        }
        let b = blocked(h, colors, q);
        for v in 0..h.n() {
            if colors[v] != 0 {
                continue;
            }
            for c in 1..=q {
                if b[v][c - 1] {
                    continue;
                }
                colors[v] = c as u16;
                let a = go(h, q, colors, !alice);
                colors[v] = 0;
                if a == alice {
                    return a;
                }
            }
        }
        !alice
    }
    go(h, q, &mut vec![0; h.n()], true)
}

/// Least `q` with a total coloring that has no monochromatic edge.
pub fn chromatic_number(h: &Hypergraph) -> usize {
    let n = h.n();
    for q in 1..=n.max(1) {
        let total = (q as u64).pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let colors: Vec<u64> = (0..n).map(|_| {
                let c = x % q as u64;
                x /= q as u64;
                c
            }).collect();
            if h.edges().all(|e| e.iter().any(|&v| colors[v as usize] != colors[e[0] as usize])) {
                return q;
            }
        }
    }
    n
}

/// Least `q <= q_max` for which Alice wins.
pub fn game_chromatic_number(h: &Hypergraph, q_max: usize) -> Option<usize> {
    (1..=q_max).find(|&q| alice_wins(h, q))
}
