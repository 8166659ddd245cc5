//! Shared fixtures and seeded random generators for the integration tests.
#![allow(dead_code)]

use farey_tilings::exact::extended_gcd;
use farey_tilings::farey::is_clockwise_sequence;
use farey_tilings::{int, BhargavaCube, FareyPath, FareyVertex, Hypertiling, Int, Mat2, Tiling};
use rand::rngs::StdRng;
use rand::Rng;

pub fn nine_tiling() -> Tiling {
    Tiling::from_i64(
        -3,
        -3,
        &[
            &[67, 144, 29, 30, 11, 36, 13],
            &[46, 99, 20, 21, 8, 27, 10],
            &[25, 54, 11, 12, 5, 18, 7],
            &[4, 9, 2, 3, 2, 9, 4],
            &[7, 18, 5, 12, 11, 54, 25],
            &[10, 27, 8, 21, 20, 99, 46],
            &[13, 36, 11, 30, 29, 144, 67],
        ],
    )
    .unwrap()
}

/// Numerators over 3 of the rational SL2-tiling paired with `nine_tiling`.
pub fn nine_tiling_sl2_thirds() -> Vec<Vec<i64>> {
    vec![
        vec![67, 144, 29, 30, 11, 36, 13],
        vec![46, 99, 20, 21, 8, 27, 10],
        vec![25, 54, 11, 12, 5, 18, 7],
        vec![4, 9, 2, 3, 2, 9, 4],
        vec![7, 18, 5, 12, 11, 54, 25],
        vec![10, 27, 8, 21, 20, 99, 46],
        vec![13, 36, 11, 30, 29, 144, 67],
    ]
}

pub fn nine_gamma() -> FareyPath {
    FareyPath::from_i64(1, -3, &[(10, -3), (7, -2), (4, -1), (1, 0), (4, 1), (7, 2), (10, 3)]).unwrap()
}

pub fn nine_delta() -> FareyPath {
    FareyPath::from_i64(3, -3, &[(3, 4), (6, 9), (1, 2), (0, 3), (-1, 2), (-6, 9), (-3, 4)]).unwrap()
}

pub fn width7_path() -> FareyPath {
    FareyPath::from_i64(2, 0, &[(1, 0), (3, 2), (2, 2), (0, 1), (-2, 3), (-2, 2), (-3, 2), (-1, 0)]).unwrap()
}

/// The rows of the printed positive rational frieze, doubled, read left to right from
/// the top zero row. Consecutive rows are staggered by half a step.
pub fn width7_rows_doubled() -> Vec<Vec<i64>> {
    vec![
        vec![0; 12],
        vec![2; 13],
        vec![2, 3, 10, 2, 5, 2, 12, 2, 3, 10, 2, 5],
        vec![10, 1, 13, 8, 3, 3, 10, 10, 1, 13, 8, 3, 3],
        vec![3, 3, 10, 10, 1, 13, 8, 3, 3, 10, 10, 1],
        vec![2, 5, 2, 12, 2, 3, 10, 2, 5, 2, 12, 2, 3],
        vec![2; 12],
        vec![0; 13],
    ]
}

pub fn unit_hyper_paths() -> [FareyPath; 3] {
    [
        FareyPath::from_i64(1, 0, &[(1, 2), (1, 3), (0, 1), (-1, 4), (-1, 3)]).unwrap(),
        FareyPath::from_i64(1, 0, &[(2, 1), (5, 3), (3, 2), (4, 3), (5, 4)]).unwrap(),
        FareyPath::from_i64(1, 0, &[(1, 1), (2, 3), (3, 5), (1, 2), (2, 5)]).unwrap(),
    ]
}

pub fn unit_hyper() -> Hypertiling {
    let layers: Vec<Vec<Vec<i64>>> = vec![
        vec![
            vec![4, 11, 7, 10, 13],
            vec![5, 14, 9, 13, 17],
            vec![1, 3, 2, 3, 4],
            vec![2, 7, 5, 8, 11],
            vec![1, 4, 3, 5, 7],
        ],
        vec![
            vec![10, 28, 18, 26, 34],
            vec![13, 37, 24, 35, 46],
            vec![3, 9, 6, 9, 12],
            vec![8, 26, 18, 28, 38],
            vec![5, 17, 12, 19, 26],
        ],
        vec![
            vec![16, 45, 29, 42, 55],
            vec![21, 60, 39, 57, 75],
            vec![5, 15, 10, 15, 20],
            vec![14, 45, 31, 48, 65],
            vec![9, 30, 21, 33, 45],
        ],
        vec![
            vec![6, 17, 11, 16, 21],
            vec![8, 23, 15, 22, 29],
            vec![2, 6, 4, 6, 8],
            vec![6, 19, 13, 20, 27],
            vec![4, 13, 9, 14, 19],
        ],
        vec![
            vec![14, 40, 26, 38, 50],
            vec![19, 55, 36, 53, 70],
            vec![5, 15, 10, 15, 20],
            vec![16, 50, 34, 52, 70],
            vec![11, 35, 24, 37, 50],
        ],
    ];
    Hypertiling::from_layers_i64([0, 0, 0], &layers).unwrap()
}

/// The 3x3x3 array printed as a 65-hypertiling, layers along `k`.
pub fn sixty_five_array() -> Hypertiling {
    let layers: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![0, -1, 0], vec![8, 0, -8], vec![0, 1, 0]],
        vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]],
        vec![vec![0, -7, 0], vec![4, 0, -4], vec![0, 7, 0]],
    ];
    Hypertiling::from_layers_i64([0, 0, 0], &layers).unwrap()
}

/// Fibonacci window layers `k = 0, 1, 2`, rows `i`, columns `j`.
pub fn fib_layers() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![
            vec![34, 13, 5, 2, 1, 1],
            vec![13, 5, 2, 1, 1, 2],
            vec![5, 2, 1, 1, 2, 5],
            vec![2, 1, 1, 2, 5, 13],
            vec![1, 1, 2, 5, 13, 34],
            vec![1, 2, 5, 13, 34, 89],
        ],
        vec![
            vec![13, 5, 2, 1, 1, 2],
            vec![5, 2, 1, 1, 2, 5],
            vec![2, 1, 1, 2, 5, 13],
            vec![1, 1, 2, 5, 13, 34],
            vec![1, 2, 5, 13, 34, 89],
            vec![2, 5, 13, 34, 89, 233],
        ],
        vec![
            vec![5, 2, 1, 1, 2, 5],
            vec![2, 1, 1, 2, 5, 13],
            vec![1, 1, 2, 5, 13, 34],
            vec![1, 2, 5, 13, 34, 89],
            vec![2, 5, 13, 34, 89, 233],
            vec![5, 13, 34, 89, 233, 610],
        ],
    ]
}

/// A matrix of determinant 1 built from a random primitive first column.
pub fn random_sl2(rng: &mut StdRng, bound: i64) -> Mat2 {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let c = rng.gen_range(-bound..=bound);
        let (g, x, y) = extended_gcd(&int(a), &int(c));
        if g != int(1) {
            continue;
        }
        let k = int(rng.gen_range(-2..=2));
        // a x + c y = 1, so (a, -y; c, x) has determinant 1.
        let m = Mat2::new(int(a), -y + &k * a, int(c), x + &k * c);
        if m.is_sl2() {
            return m;
        }
    }
}

/// `random_sl2` restricted to entries in `[-bound, bound]`.
pub fn random_small_sl2(rng: &mut StdRng, bound: i64) -> Mat2 {
    loop {
        let m = random_sl2(rng, bound);
        let small = [&m.a, &m.b, &m.c, &m.d].iter().all(|v| v.magnitude() <= &num_bigint::BigUint::from(bound as u64));
        if small {
            return m;
        }
    }
}

fn canonical_edge(rng: &mut StdRng, level: i64) -> (FareyVertex, FareyVertex) {
    let divisors: Vec<i64> = (1..=level).filter(|d| level % d == 0).collect();
    let r = divisors[rng.gen_range(0..divisors.len())];
    let t = level / r;
    let s = rng.gen_range(0..t);
    (FareyVertex::from_i64(r, 0), FareyVertex::from_i64(s, t))
}

/// A random minimal path in the level-`level` Farey graph with `len` vertices.
pub fn random_path(rng: &mut StdRng, level: i64, len: usize) -> FareyPath {
    let lv = int(level);
    loop {
        let (u, v) = canonical_edge(rng, level);
        let mut verts = vec![u, v];
        while verts.len() < len {
            let cur = verts[verts.len() - 1].clone();
            let (g, x0, y0) = extended_gcd(&cur.a, &cur.b);
            let q = &lv / &g;
            let m = int(rng.gen_range(-3..=3));
            let w = FareyVertex::new(-&y0 * &q + &m * (&cur.a / &g), &x0 * &q + &m * (&cur.b / &g));
            verts.push(w);
        }
        let base = -(rng.gen_range(0..=len as i64 - 2));
        let Ok(p) = FareyPath::new(lv.clone(), base, verts) else { continue };
        let p = p.apply(&random_sl2(rng, 4)).expect("determinant 1");
        if p.is_minimal() {
            return p;
        }
    }
}

/// A random minimal clockwise path: each step picks a neighbour that keeps the vertex
/// values clockwise, then the path is moved by a random `SL_2(Z)` matrix.
pub fn random_clockwise_path(rng: &mut StdRng, level: i64, len: usize) -> FareyPath {
    let lv = int(level);
    'restart: loop {
        let (u, v) = canonical_edge(rng, level);
        let mut verts = vec![u, v];
        while verts.len() < len {
            let cur = verts[verts.len() - 1].clone();
            let (g, x0, y0) = extended_gcd(&cur.a, &cur.b);
            let q = &lv / &g;
            let mut step = None;
            for _ in 0..40 {
                let m = int(rng.gen_range(-6..=6));
                let w = FareyVertex::new(-&y0 * &q + &m * (&cur.a / &g), &x0 * &q + &m * (&cur.b / &g));
                let mut values: Vec<_> = verts.iter().filter_map(FareyVertex::value).collect();
                values.extend(w.value());
                if is_clockwise_sequence(&values) {
                    step = Some(w);
                    break;
                }
            }
            match step {
                Some(w) => verts.push(w),
                None => continue 'restart,
            }
        }
        let base = -(rng.gen_range(0..=len as i64 - 2));
        let Ok(p) = FareyPath::new(lv.clone(), base, verts) else { continue };
        let p = p.apply(&random_sl2(rng, 6)).expect("determinant 1");
        if p.is_minimal() && p.is_clockwise() {
            return p;
        }
    }
}

pub fn random_unit_cube(rng: &mut StdRng) -> BhargavaCube {
    let t = farey_tilings::Triple::new(random_small_sl2(rng, 9), random_small_sl2(rng, 9), random_small_sl2(rng, 9));
    farey_tilings::act_triple(&t, &BhargavaCube::unit())
}

/// A nonsingular cube with entries in `[-bound, bound]`.
pub fn random_nonsingular_cube(rng: &mut StdRng, bound: i64) -> BhargavaCube {
    loop {
        let m: [Int; 8] = std::array::from_fn(|_| int(rng.gen_range(-bound..=bound)));
        let c = BhargavaCube::new(m);
        if c.hyperdet() != int(0) {
            return c;
        }
    }
}
