//! Values checked against computations done from scratch here: reflection
//! closure, orbit counting, Weyl-length generating functions and Gaussian
//! binomials. None of these reuse the library's own tables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use perioddomain::chevalley::WeylBasis;
use perioddomain::classify::{classify, lattice_verdict, Catalog, LatticeVerdict};
use perioddomain::cohomology::{flag_poincare, hirsch_polynomial, symmetric_pairs, PoincarePolynomial};
use perioddomain::hodge::{binary_markings, HodgeDatum};
use perioddomain::rootsys::{invariant_degrees, weyl_group_order, CartanType, Root, RootSystem};
use perioddomain::scalar::{q, qi, Q};

/// `2(β, α_j)/(α_j, α_j)` for the type's Bourbaki form.
fn coroot_pairing(gram: &[Vec<Q>], beta: &[i64], j: usize) -> i64 {
    let ip: Q = beta.iter().enumerate().map(|(i, &b)| gram[i][j] * qi(b as i128)).sum();
    let v = ip * qi(2) / gram[j][j];
    assert!(v.is_integer());
    *v.numer() as i64
}

fn closure(t: CartanType) -> BTreeSet<Vec<i64>> {
    let gram = t.bourbaki_gram();
    let n = t.rank;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        if !seen.insert(b.clone()) {
            continue;
        }
        for j in 0..n {
            let c = coroot_pairing(&gram, &b, j);
            let mut r = b.clone();
            r[j] -= c;
            if !seen.contains(&r) {
                queue.push_back(r);
            }
        }
    }
    seen
}

#[test]
fn roots_match_reflection_closure() {
    for t in CartanType::all_up_to(8) {
        let rs = RootSystem::new(t);
        let ours: BTreeSet<Vec<i64>> = rs.roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(ours, closure(t), "{t}");
        let sum = rs.roots().iter().fold(Root(vec![0; t.rank]), |a, r| a.add(r));
        assert!(sum.is_zero(), "{t}");
    }
}

#[test]
fn small_root_systems() {
    let a1 = RootSystem::new("A1".parse().unwrap());
    assert_eq!(a1.num_roots(), 2);
    let a2 = RootSystem::new("A2".parse().unwrap());
    let pos: BTreeSet<Vec<i64>> = a2.positive_roots().iter().map(|r| r.0.clone()).collect();
    assert_eq!(pos, BTreeSet::from([vec![1, 0], vec![0, 1], vec![1, 1]]));
    let g2 = RootSystem::new("G2".parse().unwrap());
    assert_eq!(g2.num_roots(), 12);
    let lengths = g2.root_lengths();
    assert_eq!(lengths.len(), 2);
    assert_eq!(lengths[1] / lengths[0], qi(3));
}

#[test]
fn killing_dual_inner_products() {
    let a1 = RootSystem::new("A1".parse().unwrap());
    assert_eq!(a1.ip(0, 0), q(1, 2));
    let a2 = RootSystem::new("A2".parse().unwrap());
    let (s1, s2) = (Root::simple(2, 0), Root::simple(2, 1));
    assert_eq!(a2.inner_product(&s1, &s1), q(1, 3));
    assert_eq!(a2.inner_product(&s1, &s2), q(-1, 6));
}

#[test]
fn strings_by_enumeration() {
    for t in CartanType::all_up_to(4) {
        let rs = RootSystem::new(t);
        let set: BTreeSet<Vec<i64>> = rs.roots().iter().map(|r| r.0.clone()).collect();
        for a in rs.roots() {
            for b in rs.roots() {
                if a == b || *a == b.neg() {
                    continue;
                }
                let mut p = 0;
                while set.contains(&a.sub(&b.scaled(p + 1)).0) {
                    p += 1;
                }
                let mut q = 0;
                while set.contains(&a.add(&b.scaled(q + 1)).0) {
                    q += 1;
                }
                assert_eq!(rs.root_string(a, b).unwrap(), (p, q), "{t}: {a} through {b}");
            }
        }
    }
    let g2 = RootSystem::new("G2".parse().unwrap());
    assert_eq!(g2.root_string(&Root(vec![0, 1]), &Root(vec![1, 0])).unwrap(), (0, 3));
}

/// Weight coordinates `⟨λ, α_j^∨⟩` of `α_i`.
fn simple_in_weights(t: CartanType) -> Vec<Vec<i64>> {
    let gram = t.bourbaki_gram();
    (0..t.rank)
        .map(|i| {
            let mut e = vec![0; t.rank];
            e[i] = 1;
            (0..t.rank).map(|j| coroot_pairing(&gram, &e, j)).collect()
        })
        .collect()
}

/// Orbit of a weight under the reflections in `gens`, with BFS distances.
fn orbit(alpha: &[Vec<i64>], gens: &[usize], start: Vec<i64>) -> BTreeMap<Vec<i64>, usize> {
    let mut dist = BTreeMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for &i in gens {
            let c = w[i];
            if c == 0 {
                continue;
            }
            let r: Vec<i64> = w.iter().zip(&alpha[i]).map(|(x, a)| x - c * a).collect();
            if !dist.contains_key(&r) {
                dist.insert(r.clone(), d + 1);
                queue.push_back(r);
            }
        }
    }
    dist
}

/// `|W|` by the chain of fundamental-weight stabilizers.
fn order_by_orbits(alpha: &[Vec<i64>], nodes: &[usize]) -> u128 {
    let Some((&k, rest)) = nodes.split_last() else { return 1 };
    let mut w = vec![0; alpha.len()];
    w[k] = 1;
    orbit(alpha, nodes, w).len() as u128 * order_by_orbits(alpha, rest)
}

#[test]
fn weyl_orders_by_orbit_counting() {
    for t in CartanType::all_up_to(8) {
        let alpha = simple_in_weights(t);
        let nodes: Vec<usize> = (0..t.rank).collect();
        let n = order_by_orbits(&alpha, &nodes);
        assert_eq!(weyl_group_order(t), n, "{t}");
        let d = invariant_degrees(t).unwrap();
        assert_eq!(d.degrees.iter().map(|&x| x as u128).product::<u128>(), n, "{t}");
        let rs = RootSystem::new(t);
        assert_eq!(d.degrees.iter().map(|&x| x as usize - 1).sum::<usize>(), rs.num_positive(), "{t}");
    }
    assert_eq!(weyl_group_order("E8".parse().unwrap()), 696_729_600);
    assert_eq!(invariant_degrees("G2".parse().unwrap()).unwrap().degrees, vec![2, 6]);
}

/// `Σ_{w ∈ W^P} t^{2ℓ(w)}` from the orbit of `Σ_{i ∉ Φ} ω_i`.
fn schubert_poincare(t: CartanType, marking: &[i64]) -> PoincarePolynomial {
    let alpha = simple_in_weights(t);
    let start: Vec<i64> = marking.iter().map(|&m| (m != 0) as i64).collect();
    let nodes: Vec<usize> = (0..t.rank).collect();
    let mut coefficients = vec![];
    for d in orbit(&alpha, &nodes, start).into_values() {
        if coefficients.len() <= 2 * d {
            coefficients.resize(2 * d + 1, 0);
        }
        coefficients[2 * d] += 1;
    }
    PoincarePolynomial { coefficients }
}

#[test]
fn flag_poincare_counts_schubert_cells() {
    for t in CartanType::all_up_to(4) {
        if t.rank > 4 {
            continue;
        }
        let rs = Arc::new(RootSystem::new(t));
        for m in binary_markings(t.rank) {
            let hd = HodgeDatum::from_marking(Arc::clone(&rs), &m).unwrap();
            assert_eq!(flag_poincare(&hd).unwrap(), schubert_poincare(t, &m), "{}", hd.label());
        }
    }
}

#[test]
fn hirsch_examples() {
    for n in 1..=8u32 {
        let s: Vec<u32> = (2..=n + 1).map(|d| 2 * d).collect();
        let mut r = vec![2];
        r.extend((2..=n).map(|d| 2 * d));
        let p = hirsch_polynomial(&s, &r).unwrap();
        let cells: Vec<u64> = (0..=2 * n).map(|k| (k % 2 == 0) as u64).collect();
        assert_eq!(p.coefficients, cells, "CP^{n}");
    }
    let full_flag = hirsch_polynomial(&[4, 6], &[2, 2]).unwrap();
    assert_eq!(full_flag.coefficients, vec![1, 0, 2, 0, 2, 0, 1]);
    assert_eq!(hirsch_polynomial(&[4, 6], &[4, 6]).unwrap().coefficients, vec![1]);
}

/// Gaussian binomial `[n choose k]` in `t²`.
fn gaussian_binomial(n: usize, k: usize) -> Vec<u64> {
    // Pascal recurrence [n,k] = [n-1,k-1] + x^k [n-1,k] in x = t².
    let mut table = vec![vec![vec![1u64]; n + 1]; n + 1];
    for m in 1..=n {
        for j in 1..m {
            let a = table[m - 1][j - 1].clone();
            let b = &table[m - 1][j];
            let mut c = vec![0; a.len().max(b.len() + j)];
            for (i, x) in a.iter().enumerate() {
                c[i] += x;
            }
            for (i, x) in b.iter().enumerate() {
                c[i + j] += x;
            }
            table[m][j] = c;
        }
    }
    let x = &table[n][k];
    let mut out = vec![0; 2 * x.len() - 1];
    for (i, c) in x.iter().enumerate() {
        out[2 * i] = *c;
    }
    out
}

#[test]
fn grassmannians_are_gaussian_binomials() {
    let mut seen = 0;
    for pair in symmetric_pairs(6) {
        let Some(args) = pair.name.strip_prefix("SU(").and_then(|s| s.strip_suffix(')')) else { continue };
        let (p, q) = args.split_once(',').unwrap();
        let (p, q): (usize, usize) = (p.parse().unwrap(), q.parse().unwrap());
        assert_eq!(pair.poincare().unwrap().coefficients, gaussian_binomial(p + q, p), "{}", pair.name);
        seen += 1;
    }
    assert!(seen >= 9);
}

#[test]
fn weyl_basis_constants() {
    let a2 = WeylBasis::new(Arc::new(RootSystem::new("A2".parse().unwrap())));
    let rs = a2.root_system();
    let (a, b) = (rs.index_of(&Root::simple(2, 0)).unwrap(), rs.index_of(&Root::simple(2, 1)).unwrap());
    assert_eq!(a2.n_sq(a, b), q(1, 6));
    let a1 = WeylBasis::new(Arc::new(RootSystem::new("A1".parse().unwrap())));
    assert!(a1.n(0, 1).is_zero());
}

#[test]
fn named_real_forms() {
    let cat = Catalog::builtin();
    let sp31 = classify(cat.get("Sp(3,1)").unwrap());
    assert!(sp31.hodge && !sp31.hermitian);
    assert_eq!(sp31.verdict, LatticeVerdict::BelowThreshold);
    assert!(!classify(cat.get("SL(3,R)").unwrap()).hodge);
    assert_eq!(lattice_verdict(cat.get("Sp(25,25)").unwrap()), LatticeVerdict::NotKahlerLattice);
    assert_eq!(lattice_verdict(cat.get("SU(2,2)").unwrap()), LatticeVerdict::KahlerViaHermitian);
    assert!(classify(cat.get("SO(2,5)").unwrap()).hermitian);
    for f in &cat.forms {
        let c = classify(f);
        assert!(!c.hermitian || c.hodge, "{}", f.record.name);
    }
}
