// Scratch experiments for convention pinning (will be replaced by the real
// pbw module tests).
use qcentral::cartan::*;
use qcentral::uqalg::*;

fn kostant_partitions(roots: &[Weight], mu: &Weight) -> Vec<Vec<u32>> {
    fn rec(
        roots: &[Weight],
        mu: &Weight,
        idx: usize,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if mu.is_zero() {
            let mut full = acc.clone();
            full.resize(roots.len(), 0);
            out.push(full);
            return;
        }
        if idx >= roots.len() || !mu.is_nonnegative() {
            return;
        }
        let mut max = u32::MAX;
        for (a, b) in mu.0.iter().zip(&roots[idx].0) {
            if *b > 0 {
                max = max.min((*a / *b) as u32);
            }
        }
        if max == u32::MAX {
            max = 0;
        }
        for e in (0..=max).rev() {
            let mut rest = mu.clone();
            for (r, b) in rest.0.iter_mut().zip(&roots[idx].0) {
                *r -= e as i64 * *b;
            }
            acc.push(e);
            rec(roots, &rest, idx + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = vec![];
    rec(roots, mu, 0, &mut vec![], &mut out);
    out
}

fn expand(rv: &[NegElement], expo: &[u32]) -> NegElement {
    let mut acc = NegElement::unit();
    for (k, &e) in expo.iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul(&rv[k]);
        }
    }
    acc
}

#[test]
fn diagonality_experiment() {
    for (fam, rank) in [
        (CartanFamily::A, 2),
        (CartanFamily::A, 3),
        (CartanFamily::D, 4),
    ] {
        let rd = build_root_data(CartanType::new(fam, rank).unwrap()).unwrap();
        for braid in [BraidConvention::Paper, BraidConvention::Alt] {
            let conv = Convention {
                braid,
                coproduct: CoproductConvention::Standard,
            };
            let rv = root_vectors(&rd, conv).unwrap();
            let mut weights = vec![];
            let hr = rd
                .positive_roots
                .iter()
                .max_by_key(|r| r.height())
                .unwrap()
                .clone();
            weights.push(hr.clone());
            weights.push(hr.add(&Weight::simple(rank, 0)));
            if fam == CartanFamily::D {
                weights.push(hr.add(&rd.positive_roots[0]));
            }
            for mu in weights {
                let parts = kostant_partitions(&rd.positive_roots, &mu);
                let dim = parts.len();
                if dim == 0 {
                    continue;
                }
                let expanded: Vec<NegElement> = parts.iter().map(|p| expand(&rv, p)).collect();
                let mut offdiag_nonzero = 0;
                let mut zero_diag = 0;
                for i in 0..dim {
                    for j in i..dim {
                        let v = pairing(&rd, &expanded[i], &expanded[j]);
                        if i == j && v.is_zero() {
                            zero_diag += 1;
                        }
                        if i != j && !v.is_zero() {
                            offdiag_nonzero += 1;
                        }
                    }
                }
                println!(
                    "{:?}{} braid={:?} mu={} dim={} offdiag_nonzero={} zero_diag={}",
                    fam, rank, braid, mu, dim, offdiag_nonzero, zero_diag
                );
            }
        }
    }
}
