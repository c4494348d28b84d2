//! Weyl group orders and degrees of basic invariants.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{diagram_components, CartanType, Series};
use crate::error::Result;

/// Weyl group order and invariant degrees of a simple type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylData {
    pub order: u128,
    /// Polynomial degrees `d_i` of the basic invariants.
    pub degrees: Vec<u32>,
}

impl WeylData {
    /// Cohomological degrees `s_i = 2·d_i`.
    pub fn cohomological_degrees(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| 2 * d).collect()
    }
}

fn degree_table(ty: CartanType) -> Vec<u32> {
    let n = ty.rank as u32;
    match ty.series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
        Series::D => {
            let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort();
            d
        }
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    }
}

/// Degrees from the table together with the order computed from the group.
/// The table is checked against the computed order by the test suite.
pub fn invariant_degrees(ty: CartanType) -> Result<WeylData> {
    let ty = CartanType::new(ty.series, ty.rank)?;
    Ok(WeylData { order: weyl_group_order(ty), degrees: degree_table(ty) })
}

/// `|W|`, computed by orbit-stabilizer recursion and cached per type.
pub fn weyl_group_order(ty: CartanType) -> u128 {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, u128>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&ty) {
        return v;
    }
    let a = ty.cartan_matrix();
    let nodes: Vec<usize> = (0..ty.rank).collect();
    let v = order_of_subdiagram(&a, &nodes);
    cache.lock().unwrap().insert(ty, v);
    v
}

/// Order of the parabolic subgroup generated by the reflections in `nodes`.
///
/// For a connected diagram and a leaf `j`, the stabilizer of the fundamental
/// weight `ω_j` is generated by the other simple reflections, so
/// `|W| = |W·ω_j| · |W_{nodes∖j}|`.
pub fn order_of_subdiagram(a: &[Vec<i64>], nodes: &[usize]) -> u128 {
    let mut total = 1u128;
    for comp in diagram_components(a, nodes) {
        total *= order_connected(a, &comp);
    }
    total
}

fn order_connected(a: &[Vec<i64>], nodes: &[usize]) -> u128 {
    match nodes.len() {
        0 => return 1,
        1 => return 2,
        _ => {}
    }
    let leaves: Vec<usize> = nodes
        .iter()
        .copied()
        .filter(|&i| nodes.iter().filter(|&&j| j != i && a[i][j] != 0).count() == 1)
        .collect();
    let mut best: Option<(u128, usize)> = None;
    for &leaf in &leaves {
        let cap = best.map(|b| b.0).unwrap_or(u128::MAX);
        if let Some(size) = orbit_size(a, nodes, leaf, cap) {
            if best.is_none_or(|b| size < b.0) {
                best = Some((size, leaf));
            }
        }
    }
    let (size, leaf) = best.expect("connected Dynkin diagram has a leaf");
    let rest: Vec<usize> = nodes.iter().copied().filter(|&i| i != leaf).collect();
    size * order_of_subdiagram(a, &rest)
}

/// Orbit of the fundamental weight `ω_leaf` under the simple reflections in
/// `nodes`, in Dynkin-label coordinates. Gives up once it exceeds `cap`.
fn orbit_size(a: &[Vec<i64>], nodes: &[usize], leaf: usize, cap: u128) -> Option<u128> {
    let k = nodes.len();
    let pos: HashMap<usize, usize> = nodes.iter().enumerate().map(|(p, &n)| (n, p)).collect();
    let mut start = vec![0i64; k];
    start[pos[&leaf]] = 1;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(lam) = queue.pop_front() {
        for (pj, &j) in nodes.iter().enumerate() {
            let c = lam[pj];
            if c == 0 {
                continue;
            }
            // s_j λ = λ − ⟨λ, α_j^∨⟩ α_j; label k of α_j is A[j][k].
            let mut mu = lam.clone();
            for (pk, &kk) in nodes.iter().enumerate() {
                mu[pk] -= c * a[j][kk];
            }
            if seen.insert(mu.clone()) {
                if seen.len() as u128 > cap {
                    return None;
                }
                queue.push_back(mu);
            }
        }
    }
    Some(seen.len() as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_orders() {
        let cases = [("A1", 2u128), ("G2", 12), ("F4", 1152), ("E6", 51840), ("E7", 2903040), ("E8", 696729600), ("D4", 192), ("B3", 48), ("A5", 720)];
        for (t, n) in cases {
            assert_eq!(weyl_group_order(t.parse().unwrap()), n, "{t}");
        }
    }

    #[test]
    fn degrees_multiply_to_order() {
        for t in CartanType::all_up_to(8) {
            let w = invariant_degrees(t).unwrap();
            let prod: u128 = w.degrees.iter().map(|&d| d as u128).product();
            assert_eq!(prod, w.order, "{t}");
            assert_eq!(w.degrees.len(), t.rank);
        }
    }
}
