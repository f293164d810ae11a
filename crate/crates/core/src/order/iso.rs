use super::Poset;

/// True iff `map` is a bijection `p -> q` that preserves and reflects the order.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    let n = p.len();
    if n != q.len() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

/// Backtracking search for an order isomorphism `p -> q`.
///
/// Candidates are pruned by up-set and down-set sizes and by consistency with
/// every already-assigned element. Returns the first isomorphism in
/// lexicographic order of image tuples.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let degree = |x: &Poset, a: usize| (x.up(a).len(), x.down(a).len());
    let mut pd: Vec<_> = (0..n).map(|a| degree(p, a)).collect();
    let mut qd: Vec<_> = (0..n).map(|a| degree(q, a)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| pd[a] == qd[b]).collect())
        .collect();
    pd.sort_unstable();
    qd.sort_unstable();
    if pd != qd {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(p, q, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(
    p: &Poset,
    q: &Poset,
    candidates: &[Vec<usize>],
    a: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if a == p.len() {
        return true;
    }
    for &b in &candidates[a] {
        if used[b] {
            continue;
        }
        let consistent = (0..a).all(|x| {
            p.leq(x, a) == q.leq(map[x], b) && p.leq(a, x) == q.leq(b, map[x])
        });
        if !consistent {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if assign(p, q, candidates, a + 1, map, used) {
            return true;
        }
        used[b] = false;
    }
    map[a] = usize::MAX;
    false
}
