//! Kauffman bracket by skein recursion, with a 2ⁿ smoothing-enumeration
//! cross-check route.
//!
//! Both routes work in Z[A]/(A^{4(k+2)} − 1) and must agree exactly; the
//! recursion memoizes on a canonical relabeling of the remaining tangle,
//! which changes nothing but the running time.

use super::cyclotomic::RootOfUnityScalar;
use crate::linkmodel::PDCode;
use std::collections::HashMap;

/// Smoothing pair indices into a crossing's slots: the A-smoothing joins
/// slots (0,1) and (2,3), the B-smoothing joins (1,2) and (3,0).
const A_SMOOTHING: [(usize, usize); 2] = [(0, 1), (2, 3)];
const B_SMOOTHING: [(usize, usize); 2] = [(1, 2), (3, 0)];

/// Memoized skein recursion. The empty diagram evaluates to 1 and each
/// closed loop contributes d = −A² − A⁻², so the unknot evaluates to d.
pub(super) fn bracket_recursive(pd: &PDCode, order: usize) -> RootOfUnityScalar {
    let crossings: Vec<[usize; 4]> = pd.crossings().iter().map(|c| c.arcs).collect();
    let mut memo: HashMap<Vec<usize>, RootOfUnityScalar> = HashMap::new();
    let body = bracket_rec(crossings, order, &mut memo);
    let d = RootOfUnityScalar::loop_factor(order);
    body.mul(&d.pow(pd.crossingless_component_count() as u32))
}

fn canonical_key(crossings: &[[usize; 4]]) -> Vec<usize> {
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    let mut key = Vec::with_capacity(crossings.len() * 4);
    for c in crossings {
        for &a in c {
            let next = relabel.len();
            key.push(*relabel.entry(a).or_insert(next));
        }
    }
    key
}

fn bracket_rec(
    crossings: Vec<[usize; 4]>,
    order: usize,
    memo: &mut HashMap<Vec<usize>, RootOfUnityScalar>,
) -> RootOfUnityScalar {
    if crossings.is_empty() {
        return RootOfUnityScalar::one(order);
    }
    let key = canonical_key(&crossings);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }

    let first = crossings[0];
    let rest: Vec<[usize; 4]> = crossings[1..].to_vec();
    let d = RootOfUnityScalar::loop_factor(order);
    let mut total = RootOfUnityScalar::zero(order);

    for (pairs, exp) in [(A_SMOOTHING, 1i64), (B_SMOOTHING, -1i64)] {
        let mut branch = rest.clone();
        let mut loops = 0u32;
        // second pair endpoints may be renamed by the first merge
        let mut second = (first[pairs[1].0], first[pairs[1].1]);
        let (x, y) = (first[pairs[0].0], first[pairs[0].1]);
        if x == y {
            loops += 1;
        } else {
            substitute(&mut branch, y, x);
            if second.0 == y {
                second.0 = x;
            }
            if second.1 == y {
                second.1 = x;
            }
        }
        let (u, v) = second;
        if u == v {
            loops += 1;
        } else {
            substitute(&mut branch, v, u);
        }
        let sub = bracket_rec(branch, order, memo);
        let term = RootOfUnityScalar::monomial(order, exp)
            .mul(&d.pow(loops))
            .mul(&sub);
        total = total.add(&term);
    }

    memo.insert(key, total.clone());
    total
}

fn substitute(crossings: &mut [[usize; 4]], from: usize, to: usize) {
    for c in crossings.iter_mut() {
        for slot in c.iter_mut() {
            if *slot == from {
                *slot = to;
            }
        }
    }
}

/// Brute-force route: sum over all 2ⁿ smoothing states, counting loops with
/// a union-find per state. Independent of the recursion; used as its oracle.
pub fn bracket_by_enumeration(pd: &PDCode, order: usize) -> RootOfUnityScalar {
    let crossings: Vec<[usize; 4]> = pd.crossings().iter().map(|c| c.arcs).collect();
    let n = crossings.len();
    assert!(n <= 24, "enumeration route is for small diagrams");
    let max_arc = crossings
        .iter()
        .flat_map(|c| c.iter())
        .max()
        .map_or(0, |&m| m + 1);

    let d = RootOfUnityScalar::loop_factor(order);
    let max_pow = 2 * n + 1 + pd.crossingless_component_count();
    let mut d_pows = Vec::with_capacity(max_pow + 1);
    d_pows.push(RootOfUnityScalar::one(order));
    for i in 0..max_pow {
        let last = d_pows[i].mul(&d);
        d_pows.push(last);
    }

    let mut total = RootOfUnityScalar::zero(order);
    for state in 0u32..(1 << n) {
        let mut uf = crate::linkmodel::UnionFind::new(max_arc);
        let mut loops = 0usize;
        let mut exponent = 0i64;
        for (i, c) in crossings.iter().enumerate() {
            let pairs = if state >> i & 1 == 0 {
                exponent += 1;
                A_SMOOTHING
            } else {
                exponent -= 1;
                B_SMOOTHING
            };
            for (p, q) in pairs {
                if uf.union(c[p], c[q]) {
                    loops += 1;
                }
            }
        }
        total = total.add(&RootOfUnityScalar::monomial(order, exponent).mul(&d_pows[loops]));
    }
    total.mul(&d_pows[pd.crossingless_component_count()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkmodel::{braid_closure, parse_braid};

    fn order(k: i64) -> usize {
        RootOfUnityScalar::order_for_level(k)
    }

    #[test]
    fn unknot_is_loop_factor() {
        let pd = PDCode::unknot();
        for k in 1..=5 {
            let n = order(k);
            assert_eq!(bracket_recursive(&pd, n), RootOfUnityScalar::loop_factor(n));
        }
    }

    #[test]
    fn split_unknots_multiply() {
        let pd = PDCode::unlink(2);
        let n = order(3);
        let d = RootOfUnityScalar::loop_factor(n);
        assert_eq!(bracket_recursive(&pd, n), d.mul(&d));
        assert_eq!(bracket_by_enumeration(&pd, n), d.mul(&d));
    }

    #[test]
    fn hopf_recursion_matches_enumeration() {
        let pd = braid_closure(&parse_braid("1 1").unwrap());
        let n = order(3);
        assert_eq!(bracket_recursive(&pd, n), bracket_by_enumeration(&pd, n));
    }

    #[test]
    fn trefoil_recursion_matches_enumeration() {
        let pd = braid_closure(&parse_braid("1 1 1").unwrap());
        let n = order(3);
        assert_eq!(bracket_recursive(&pd, n), bracket_by_enumeration(&pd, n));
    }

    #[test]
    fn figure_eight_recursion_matches_enumeration() {
        let pd = braid_closure(&parse_braid("1 -2 1 -2").unwrap());
        for k in [1, 2, 5] {
            let n = order(k);
            assert_eq!(bracket_recursive(&pd, n), bracket_by_enumeration(&pd, n));
        }
    }

    #[test]
    fn float_rendering_tracks_exact_value() {
        // catastrophic-cancellation guard: render after exact reduction
        let pd = braid_closure(&parse_braid("1 1 1 -2 1 -2").unwrap());
        let n = order(4);
        let exact = bracket_recursive(&pd, n).to_complex();
        let brute = bracket_by_enumeration(&pd, n).to_complex();
        assert!((exact - brute).norm() < 1e-10);
    }
}
