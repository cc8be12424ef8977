use bunncalc_core::kottwitz::enumerate_b;
use bunncalc_core::lparam::chi_to_b;
use bunncalc_core::spectral::verify_eigen;
use bunncalc_core::weights::{isotypic_decomposition, levi_branching};
use bunncalc_core::{HighestWeight, LParamShape, NewtonPoint};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn kottwitz(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_b");
    for n in [6usize, 8, 10] {
        let mut mu = vec![0i64; n];
        mu[0] = 2;
        mu[1] = 1;
        group.bench_with_input(BenchmarkId::from_parameter(n), &mu, |b, mu| {
            b.iter(|| enumerate_b(black_box(mu.len()), black_box(mu)).unwrap())
        });
    }
    group.finish();
}

fn branching(c: &mut Criterion) {
    let mut group = c.benchmark_group("levi_branching");
    let cases: [(&str, Vec<i64>, Vec<u64>); 3] = [
        ("(3,1,0,0)|2,2", vec![3, 1, 0, 0], vec![2, 2]),
        ("(2,1,1,0,0)|2,2,1", vec![2, 1, 1, 0, 0], vec![2, 2, 1]),
        ("(2,2,1,0,0,0)|3,3", vec![2, 2, 1, 0, 0, 0], vec![3, 3]),
    ];
    for (name, lam, blocks) in cases {
        let lam = HighestWeight::new(lam).unwrap();
        group.bench_function(name, |b| b.iter(|| levi_branching(black_box(&lam), black_box(&blocks)).unwrap()));
    }
    group.finish();
}

fn eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_eigen");
    for dims in [vec![1u64, 1, 1], vec![2, 1, 1], vec![2, 2, 2]] {
        let phi = LParamShape::from_dims(&dims).unwrap();
        let n = phi.n() as usize;
        let lam = HighestWeight::fundamental(n, 2);
        let mut strata = vec![NewtonPoint::basic(n as u64, 0)];
        for (chi, _) in isotypic_decomposition(&phi, &lam).unwrap() {
            let b = chi_to_b(&phi, &chi).unwrap();
            if !strata.contains(&b) {
                strata.push(b);
            }
        }
        group.bench_function(format!("{dims:?}"), |b| {
            b.iter(|| assert!(verify_eigen(black_box(&phi), black_box(&lam), black_box(&strata)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, kottwitz, branching, eigen);
criterion_main!(benches);
