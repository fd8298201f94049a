use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use levelsplit::abelian::LoopKind;
use levelsplit::linkmodel::{braid_closure, parse_braid, PDCode};
use levelsplit::skein::{bracket_by_enumeration, kauffman_bracket, RootOfUnityScalar};
use levelsplit::splitting::{normal_order, LoopOperatorWord, WordEntry};
use levelsplit::wzwlab::{
    flatness_residual, kn_fields, pw_defect, random_field, wzw_action, FieldClass, LatticeGrid,
};

fn diagrams() -> Vec<(&'static str, PDCode)> {
    let braid = |s: &str| braid_closure(&parse_braid(s).unwrap());
    vec![
        ("trefoil", braid("1 1 1")),
        ("figure-eight", braid("1 -2 1 -2")),
        ("t26", braid("1 1 1 1 1 1")),
        ("eight-crossings", braid("1 -2 1 -2 1 1 -2 1")),
    ]
}

fn bench_bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    for (name, pd) in diagrams() {
        group.bench_with_input(BenchmarkId::new("recursive", name), &pd, |b, pd| {
            b.iter(|| kauffman_bracket(black_box(pd), 3).unwrap())
        });
        let order = RootOfUnityScalar::order_for_level(3);
        group.bench_with_input(BenchmarkId::new("enumeration", name), &pd, |b, pd| {
            b.iter(|| bracket_by_enumeration(black_box(pd), order))
        });
    }
    group.finish();
}

fn bench_normal_order(c: &mut Criterion) {
    let n = 24usize;
    let entries: Vec<WordEntry> = (0..n)
        .map(|i| WordEntry {
            kind: if i % 2 == 0 { LoopKind::T } else { LoopKind::W },
            curve: format!("c{i}"),
            charge: 1 + (i as i64 % 3),
        })
        .collect();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let l = ((i + j) % 3) as i64 - 1;
            m[i][j] = l;
            m[j][i] = -l;
        }
    }
    let word = LoopOperatorWord::new(entries, m).unwrap();
    c.bench_function("normal_order/alternating-24", |b| {
        b.iter(|| normal_order(black_box(&word), 7).unwrap())
    });
}

fn bench_lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("lattice");
    group.sample_size(20);
    for n in [16usize, 32] {
        let grid = LatticeGrid::square(n).unwrap();
        let u = random_field(grid, FieldClass::Sl2c, 0.3, 1).unwrap();
        let v = random_field(grid, FieldClass::Sl2c, 0.3, 2).unwrap();
        group.bench_with_input(BenchmarkId::new("wzw_action", n), &u, |b, u| {
            b.iter(|| wzw_action(black_box(u)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pw_defect", n), &(&u, &v), |b, (u, v)| {
            b.iter(|| pw_defect(black_box(u), black_box(v)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("flatness", n), &u, |b, u| {
            b.iter(|| flatness_residual(&kn_fields(black_box(u)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_bracket, bench_normal_order, bench_lattice);
criterion_main!(benches);
