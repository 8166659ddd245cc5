use criterion::{black_box, criterion_group, criterion_main, Criterion};
use farey_tilings::{
    act_triple, construct_hypertiling, construct_tiling, decompose_hypertiling, decompose_tiling,
    fibonacci_hypertiling, frieze_from_path, int, normalize_unit_cube, smith_normal_form, verify_hypertiling,
    BhargavaCube, FareyPath, Hypertiling, IntMatrix, Mat2, Tiling, Triple,
};
use farey_tilings_bench::load;

fn tilings(c: &mut Criterion) {
    let gamma: FareyPath = load("nine-gamma.json");
    let delta: FareyPath = load("nine-delta.json");
    let tiling: Tiling = load("nine-tiling.json");
    let (k, l) = (int(1), int(3));
    c.bench_function("construct_tiling", |b| b.iter(|| construct_tiling(&k, &l, black_box(&gamma), &delta).unwrap()));
    c.bench_function("decompose_tiling", |b| b.iter(|| decompose_tiling(black_box(&tiling)).unwrap()));
    let path: FareyPath = load("width7-path.json");
    c.bench_function("frieze_from_path", |b| b.iter(|| frieze_from_path(black_box(&path), &k).unwrap()));
}

fn exact(c: &mut Criterion) {
    let m = IntMatrix::from_i64_rows(&[&[2, 4, 4, 6], &[-6, 6, 12, 10], &[10, -4, -16, 8], &[3, 9, 27, 81]]).unwrap();
    c.bench_function("smith_normal_form_4x4", |b| b.iter(|| smith_normal_form(black_box(&m))));
    let t = Triple::new(Mat2::from_i64(5, 2, 7, 3), Mat2::from_i64(-4, 3, -3, 2), Mat2::from_i64(1, 6, 2, 13));
    let cube = act_triple(&t, &BhargavaCube::unit());
    c.bench_function("normalize_unit_cube", |b| b.iter(|| normalize_unit_cube(black_box(&cube)).unwrap()));
}

fn hypertilings(c: &mut Criterion) {
    let unit: BhargavaCube = load("unit-cube.json");
    let paths: [FareyPath; 3] =
        [load("unit-hyper-path1.json"), load("unit-hyper-path2.json"), load("unit-hyper-path3.json")];
    let hyper: Hypertiling = load("unit-hyper.json");
    c.bench_function("construct_hypertiling", |b| {
        b.iter(|| construct_hypertiling(black_box(&unit), [&paths[0], &paths[1], &paths[2]]).unwrap())
    });
    c.bench_function("verify_hypertiling", |b| b.iter(|| verify_hypertiling(black_box(&hyper))));
    c.bench_function("decompose_hypertiling", |b| b.iter(|| decompose_hypertiling(black_box(&hyper)).unwrap()));
    c.bench_function("fibonacci_window_8", |b| {
        b.iter(|| fibonacci_hypertiling(black_box(-4), [(0, 8), (0, 8), (0, 8)]))
    });
}

criterion_group!(benches, tilings, exact, hypertilings);
criterion_main!(benches);
