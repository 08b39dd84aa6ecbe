use super::Graph;
use crate::error::{Error, Result};

/// Articulation points by the lowlink method. Iterative DFS so deep paths
/// don't blow the stack.
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    if n < 3 {
        return Ok(Vec::new());
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;

    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;

    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if *next < nbrs[v].len() {
            let w = nbrs[v][*next];
            *next += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    is_cut[0] = root_children > 1;
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}
