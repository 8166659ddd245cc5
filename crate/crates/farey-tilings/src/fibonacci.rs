//! Fibonacci hypertilings, the cubes `A_n`, hypertilings with `SL_2` cross sections
//! and the orbits of cubes under the groups generated by `J` and `(Q, Q, Q)`.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::cube::{act_triple, j_matrix, q_matrix, BhargavaCube, Triple};
use crate::error::HyperError;
use crate::exact::{Int, Mat2};
use crate::farey::{FareyPath, FareyVertex};
use crate::hypertiling::Hypertiling;

/// `F_n` for any integer `n`, with `F_{-n} = (-1)^{n+1} F_n`.
pub fn fib(n: i64) -> Int {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (Int::zero(), Int::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && m % 2 == 0 {
        -a
    } else {
        a
    }
}

/// `(F_{2n-3} F_{2n-1}; F_{2n-1} F_{2n+1} | F_{2n-1} F_{2n+1}; F_{2n+1} F_{2n+3})`,
/// i.e. `m_{ijk} = F_{2(n+i+j+k)-3}`.
pub fn make_an(n: i64) -> BhargavaCube {
    let mut m: [Int; 8] = Default::default();
    for (idx, slot) in m.iter_mut().enumerate() {
        let s = (idx >> 2) + ((idx >> 1) & 1) + (idx & 1);
        *slot = fib(2 * (n + s as i64) - 3);
    }
    BhargavaCube::new(m)
}

/// `(3 -1; -1 0 | -1 0; 0 1)`.
pub fn fibonacci_cube() -> BhargavaCube {
    BhargavaCube::from_display_i64([3, -1, -1, 0, -1, 0, 0, 1])
}

/// `P = (0 1; -1 3)`, which moves `A_n` to `A_{n+1}` along any axis.
pub fn p_matrix() -> Mat2 {
    Mat2::from_i64(0, 1, -1, 3)
}

/// Vertices `(F_{2n-1}, F_{2n+1})` for `n = base .. base + len`, a path of level 1.
pub fn fibonacci_path(base: i64, len: usize) -> Result<FareyPath, HyperError> {
    let vertices = (base..base + len as i64).map(|n| FareyVertex::new(fib(2 * n - 1), fib(2 * n + 1))).collect();
    Ok(FareyPath::new(Int::one(), base, vertices)?)
}

/// The window of `m_{ijk} = F_{2(e+i+j+k)-1}` over three inclusive index ranges.
pub fn fibonacci_hypertiling(e: i64, ranges: [(i64, i64); 3]) -> Result<Hypertiling, HyperError> {
    if ranges.iter().any(|&(a, b)| b < a) {
        return Err(HyperError::TooSmall);
    }
    let dims = ranges.map(|(a, b)| (b - a + 1) as usize);
    let mut entries = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
    for i in ranges[0].0..=ranges[0].1 {
        for j in ranges[1].0..=ranges[1].1 {
            for k in ranges[2].0..=ranges[2].1 {
                entries.push(fib(2 * (e + i + j + k) - 1));
            }
        }
    }
    Hypertiling::from_flat(ranges.map(|r| r.0), dims, entries)
}

/// Generators `(J,I,I), (I,J,I), (I,I,J)` of `G`.
pub fn g_generators() -> Vec<Triple> {
    (0..3).map(|a| Triple::on_axis(a, j_matrix())).collect()
}

/// Generators of `H`: those of `G` together with `(Q, Q, Q)`.
pub fn h_generators() -> Vec<Triple> {
    let mut g = g_generators();
    g.push(Triple::splat(&q_matrix()));
    g
}

/// The orbit of `c` under the group generated by `gens`, by breadth-first closure.
pub fn orbit(c: &BhargavaCube, gens: &[Triple]) -> BTreeSet<BhargavaCube> {
    let mut seen = BTreeSet::from([c.clone()]);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = act_triple(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn h_orbit(c: &BhargavaCube) -> BTreeSet<BhargavaCube> {
    orbit(c, &h_generators())
}

/// Every cube with entries in `[-bound, bound]` whose six 2x2 faces have determinant 1.
pub fn sl2_cross_section_cubes(bound: i64) -> Vec<BhargavaCube> {
    let within = |x: i64| x.abs() <= bound;
    let quot = |num: i64, den: i64| (den != 0 && num % den == 0).then(|| num / den).filter(|&v| within(v));
    let mut out = Vec::new();
    // Display letters a..h = m000 m010 m100 m110 m001 m011 m101 m111; a = 0 forces bc = -1 and
    // be = -1 and ce = -1 simultaneously, which is impossible.
    for a in -bound..=bound {
        if a == 0 {
            continue;
        }
        for b in -bound..=bound {
            for c in -bound..=bound {
                let Some(d) = quot(1 + b * c, a) else { continue };
                for e in -bound..=bound {
                    let Some(f) = quot(1 + b * e, a) else { continue };
                    let Some(g) = quot(1 + c * e, a) else { continue };
                    let h = if e != 0 {
                        quot(1 + f * g, e)
                    } else if c != 0 {
                        quot(1 + d * g, c)
                    } else {
                        quot(1 + f * d, b)
                    };
                    let Some(h) = h else { continue };
                    let dets =
                        [a * d - b * c, e * h - f * g, a * f - b * e, c * h - d * g, a * g - c * e, b * h - f * d];
                    if dets.iter().all(|&x| x == 1) {
                        out.push(BhargavaCube::from_display_i64([a, b, c, d, e, f, g, h]));
                    }
                }
            }
        }
    }
    out
}

/// `{(a, b) : 1 <= a, b <= bound, ab | a^2 + b^2 + 1}` by direct search.
pub fn fib_pair_oracle(bound: u64) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for a in 1..=bound {
        for b in 1..=bound {
            if (a * a + b * b + 1) % (a * b) == 0 {
                out.insert((a, b));
            }
        }
    }
    out
}

/// `{(F_{2n-1}, F_{2n+1}) : n ∈ Z}` restricted to pairs with both entries at most `bound`.
pub fn fibonacci_pairs(bound: u64) -> BTreeSet<(u64, u64)> {
    use num_traits::ToPrimitive;
    let mut out = BTreeSet::new();
    let mut n = 0i64;
    loop {
        let mut added = false;
        for m in [n, -n] {
            let (x, y) = (fib(2 * m - 1).to_u64(), fib(2 * m + 1).to_u64());
            if let (Some(x), Some(y)) = (x, y) {
                if x <= bound && y <= bound {
                    out.insert((x, y));
                    added = true;
                }
            }
        }
        if !added && n > 0 {
            return out;
        }
        n += 1;
    }
}
