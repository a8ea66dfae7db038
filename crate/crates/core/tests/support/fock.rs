//! Brute-force Lipkin models on the full fermionic Fock space.
//!
//! Modes are `(level, p)` mapped to bit `level * n + p`; creation and
//! annihilation carry Jordan–Wigner signs. Nothing here touches the
//! collective-basis code, so it serves as an independent reference.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;

pub type State = BTreeMap<u64, f64>;

/// Single-particle energies in units of ε, lowest level first.
pub fn level_energies(levels: usize) -> Vec<f64> {
    match levels {
        2 => vec![-0.5, 0.5],
        3 => vec![-1.0, 0.0, 1.0],
        _ => panic!("unsupported level count {levels}"),
    }
}

pub fn mode(level: usize, p: usize, n: usize) -> usize {
    level * n + p
}

fn jw_sign(s: u64, j: usize) -> f64 {
    if (s & ((1u64 << j) - 1)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Applies `ops` (`(true, j)` = c†_j, `(false, j)` = c_j), rightmost first.
pub fn apply_ops(ops: &[(bool, usize)], s: u64) -> Option<(u64, f64)> {
    let mut state = s;
    let mut amp = 1.0;
    for &(dagger, j) in ops.iter().rev() {
        let occupied = state >> j & 1 == 1;
        if dagger == occupied {
            return None;
        }
        amp *= jw_sign(state, j);
        state ^= 1 << j;
    }
    Some((state, amp))
}

/// Terms of H as (coefficient, operator string).
pub fn hamiltonian_terms(
    levels: usize,
    n: usize,
    eps: f64,
    v: f64,
) -> Vec<(f64, Vec<(bool, usize)>)> {
    let e = level_energies(levels);
    let mut terms = Vec::new();
    for (l, el) in e.iter().enumerate() {
        for p in 0..n {
            let m = mode(l, p, n);
            terms.push((eps * el, vec![(true, m), (false, m)]));
        }
    }
    // −V/2 Σ_{upper > lower} (K_{ul}² + K_{lu}²)
    for upper in 0..levels {
        for lower in 0..upper {
            for (to, from) in [(upper, lower), (lower, upper)] {
                for p in 0..n {
                    for q in 0..n {
                        terms.push((
                            -0.5 * v,
                            vec![
                                (true, mode(to, p, n)),
                                (false, mode(from, p, n)),
                                (true, mode(to, q, n)),
                                (false, mode(from, q, n)),
                            ],
                        ));
                    }
                }
            }
        }
    }
    terms
}

pub fn apply_terms(terms: &[(f64, Vec<(bool, usize)>)], psi: &State) -> State {
    let mut out = State::new();
    for (&s, &a) in psi {
        for (c, ops) in terms {
            if let Some((t, sign)) = apply_ops(ops, s) {
                *out.entry(t).or_insert(0.0) += c * sign * a;
            }
        }
    }
    out
}

pub fn inner(a: &State, b: &State) -> f64 {
    a.iter()
        .map(|(s, x)| x * b.get(s).copied().unwrap_or(0.0))
        .sum()
}

pub fn expectation(terms: &[(f64, Vec<(bool, usize)>)], psi: &State) -> f64 {
    inner(psi, &apply_terms(terms, psi)) / inner(psi, psi)
}

/// Lowest eigenvalue of H over the whole `2^(levels·n)` Fock space, found
/// block by block over the connected components of H's sparsity graph.
pub fn fock_ground_energy(levels: usize, n: usize, eps: f64, v: f64) -> f64 {
    let modes = levels * n;
    let dim = 1usize << modes;
    let terms = hamiltonian_terms(levels, n, eps, v);
    let columns: Vec<HashMap<usize, f64>> = (0..dim as u64)
        .map(|s| {
            let mut col = HashMap::new();
            for (c, ops) in &terms {
                if let Some((t, sign)) = apply_ops(ops, s) {
                    *col.entry(t as usize).or_insert(0.0) += c * sign;
                }
            }
            col
        })
        .collect();

    let mut seen = vec![false; dim];
    let mut best = f64::INFINITY;
    for start in 0..dim {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < component.len() {
            for &t in columns[component[k]].keys() {
                if !seen[t] {
                    seen[t] = true;
                    component.push(t);
                }
            }
            k += 1;
        }
        let local: HashMap<usize, usize> =
            component.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let m = component.len();
        let mut h = DMatrix::<f64>::zeros(m, m);
        for (j, &s) in component.iter().enumerate() {
            for (t, &a) in &columns[s] {
                h[(local[t], j)] += a;
            }
        }
        let lowest = h
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        best = best.min(lowest);
    }
    best
}

/// `Π_p (Σ_σ x_σ c†_{σp}) |0⟩`.
pub fn slater_state(levels: usize, n: usize, orbital: &[f64]) -> State {
    let mut psi = State::from([(0u64, 1.0)]);
    for p in 0..n {
        let mut next = State::new();
        for (&s, &a) in &psi {
            for (l, &x) in orbital.iter().enumerate().take(levels) {
                if let Some((t, sign)) = apply_ops(&[(true, mode(l, p, n))], s) {
                    *next.entry(t).or_insert(0.0) += x * sign * a;
                }
            }
        }
        psi = next;
    }
    psi
}

pub fn correlator(psi: &State, ops: &[(bool, usize)]) -> f64 {
    let mut phi = State::new();
    for (&s, &a) in psi {
        if let Some((t, sign)) = apply_ops(ops, s) {
            *phi.entry(t).or_insert(0.0) += sign * a;
        }
    }
    inner(psi, &phi) / inner(psi, psi)
}
