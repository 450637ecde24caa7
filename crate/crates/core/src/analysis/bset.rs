use super::{domain, AnalysisError};
use crate::Hypergraph;

/// `{v : a(v, C) < threshold}` where `a(v, C)` counts the classes `C_i` with
/// no edge `{v, x, y}`, `x, y ∈ C_i`. Colored vertices are included.
pub fn b_set(h: &Hypergraph, classes: &[Vec<u32>], threshold: f64) -> Result<Vec<u32>, AnalysisError> {
    h.require_three_uniform()?;
    let n = h.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            if v as usize >= n {
                return Err(crate::HypergraphError::BadVertex { vertex: v, n }.into());
            }
            if let Some(j) = class_of[v as usize] {
                return domain(format!("vertex {v} lies in classes {} and {}", j + 1, i + 1));
            }
            class_of[v as usize] = Some(i);
        }
    }
    let q = classes.len();
    let mut blocked = vec![false; q];
    let mut out = Vec::new();
    for v in 0..n as u32 {
        blocked.iter_mut().for_each(|b| *b = false);
        for &e in h.incident(v) {
            let mut others = h.edge(e as usize).iter().filter(|&&x| x != v).map(|&x| class_of[x as usize]);
            if let (Some(Some(a)), Some(Some(b))) = (others.next(), others.next()) {
                if a == b {
                    blocked[a] = true;
                }
            }
        }
        let a = blocked.iter().filter(|&&b| !b).count();
        if (a as f64) < threshold {
            out.push(v);
        }
    }
    Ok(out)
}
