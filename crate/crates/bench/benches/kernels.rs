use criterion::{criterion_group, criterion_main, Criterion};

use gogmagog::algebra::LaurentPolynomial;
use gogmagog::checks::group_for;
use gogmagog::comb::{b_brute, enumerate_asm};
use gogmagog::engine::{ct_fast, res_iterated_factored};
use gogmagog::group::{act_factored, antisymmetrize_poly, GroupKind};
use gogmagog::kernels::{gog_res, magog_total};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_asm_5", |b| b.iter(|| enumerate_asm(5).len()));
    c.bench_function("b_brute_3_5", |b| b.iter(|| b_brute(3, 5)));
}

fn bench_constant_terms(c: &mut Criterion) {
    c.bench_function("ct_fast_magog_total_3_5", |b| {
        let f = magog_total(3, 5).unwrap().to_ratfun();
        b.iter(|| ct_fast(&f).unwrap())
    });
}

fn bench_group_sums(c: &mut Criterion) {
    c.bench_function("antisymmetrize_wb3", |b| {
        let k = 3;
        let base = LaurentPolynomial::var(1, k)
            .mul(&LaurentPolynomial::var(2, k).pow(2))
            .mul(&LaurentPolynomial::bar(0, k));
        b.iter(|| antisymmetrize_poly(&base, GroupKind::WBk, k))
    });
}

fn bench_residues(c: &mut Criterion) {
    c.bench_function("res_gog_image_2_3", |b| {
        let f = gog_res(2, 3).unwrap();
        let g = &group_for(2)[5];
        b.iter(|| {
            let img = act_factored(g, &f);
            res_iterated_factored(&img, &[0, 1]).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_constant_terms,
    bench_group_sums,
    bench_residues
);
criterion_main!(benches);
