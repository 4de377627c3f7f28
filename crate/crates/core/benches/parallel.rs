use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ftfa_kit::configs::{realize_ftfa, verify, Configuration, VerifyOptions};
use ftfa_kit::ftfa::{subgroup_basis, Completion, FtfaElement};
use ftfa_kit::oracle::{ball_filtered, Bounds, DEFAULT_CELL_CAP};
use ftfa_kit::stallings::DEFAULT_COSET_CAP;
use ftfa_kit::words::Word;

fn verify_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let configs = [
        (
            "almost_zero_4",
            Configuration::almost_zero(4, &[1, 2, 3, 4]).unwrap(),
        ),
        (
            "mixed_4",
            Configuration::new(4, &[vec![1, 2], vec![2, 3, 4], vec![1, 2, 3, 4], vec![4]]).unwrap(),
        ),
    ];
    for (name, conf) in &configs {
        let r = realize_ftfa(conf).unwrap();
        for parallel in [false, true] {
            let opts = VerifyOptions {
                witness_rank: 3,
                parallel,
                coset_cap: DEFAULT_COSET_CAP,
            };
            let label = if parallel { "parallel" } else { "sequential" };
            group.bench_with_input(BenchmarkId::new(label, name), &r, |b, r| {
                b.iter(|| black_box(verify(conf, r, &opts).unwrap()))
            });
        }
    }
    group.finish();
}

fn ball_bench(c: &mut Criterion) {
    let el = |w: &str, v: i64| FtfaElement::from_i64(Word::parse(w, 2).unwrap(), &[v]);
    let a = subgroup_basis(2, 1, &[el("x", 1), el("y", 1)]).unwrap();
    let b = subgroup_basis(2, 1, &[el("x", 1), el("yxY", -1)]).unwrap();
    let specs: Vec<&(dyn Completion + Sync)> = vec![&a, &b];
    let bounds = Bounds {
        max_word_len: 7,
        max_vec_norm: 4,
    };
    let mut group = c.benchmark_group("ball");
    group.sample_size(10);
    for parallel in [false, true] {
        let label = if parallel { "parallel" } else { "sequential" };
        group.bench_function(label, |bch| {
            bch.iter(|| {
                black_box(ball_filtered(&specs, bounds, DEFAULT_CELL_CAP, parallel).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, verify_bench, ball_bench);
criterion_main!(benches);
