use qcentral::cartan::*;
use qcentral::pbw::*;
use qcentral::uqalg::Convention;

#[test]
fn d6_275_block() {
    let rd = build_root_data(CartanType::new(CartanFamily::D, 6).unwrap()).unwrap();
    let mu = Weight(vec![2, 2, 2, 2, 1, 1]);
    let t0 = std::time::Instant::now();
    let count = kostant_count(&rd, &mu);
    println!("kostant count = {} in {:?}", count, t0.elapsed());
    let t1 = std::time::Instant::now();
    let ctx = PbwContext::new(&rd, Convention::default()).unwrap();
    println!("root vectors in {:?}", t1.elapsed());
    for (k, rv) in ctx.root_vectors.iter().enumerate() {
        if rd.positive_roots[k].height() >= 8 {
            println!("root {} height {} words {}", k, rd.positive_roots[k].height(), rv.terms.len());
        }
    }
    let t2 = std::time::Instant::now();
    let wb = build_weight_block(&ctx, &mu, DiagCheck::default()).unwrap();
    println!(
        "block dim={} nnz={} frac={:.4} check={} in {:?}",
        wb.stats.dimension, wb.stats.nnz, wb.stats.nnz_fraction, wb.stats.offdiag_check, t2.elapsed()
    );
}
