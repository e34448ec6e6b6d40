// Temporary convention diagnostics; removed before the crate is finished.
use std::sync::Arc;

use bggx_core::exact::{rat, Rational};
use bggx_core::kostant::KostantComplex;
use bggx_core::lie::GradedLieAlgebra;
use bggx_core::linalg::QMatrix;
use bggx_core::module::GModule;
use num_traits::Zero;

fn main() {
    let n = 3usize;
    let g = Arc::new(GradedLieAlgebra::projective(n).unwrap());
    let v = GModule::standard(g.clone());
    let s = GModule::sym2(&v);
    println!("module {} dim {} slots {:?}", s.name(), s.dim(), s.slot_dims());
    for k in 0..s.dim() {
        println!("  basis {k}: {} slot {}", s.label(k), s.slot(k));
    }

    // Display coordinates on Sym^2 R^{n+1}: rho = S00, mu^a = S0a, sigma^ab = S_ab/2.
    // Our monomial basis: e_i.e_j (i<=j), coords c_ij with S_ij = c_ij (i<j), S_ii = c_ii.
    // So display coords: rho = c_00, mu^a = c_0a, sigma^ab = c_ab/2 (a<b), sigma^aa = c_aa... wait:
    // S^{ab} = c_{ab} for a<b and S^{aa} = c_{aa}; sigma^{ab} = S^{ab}/2.
    // Transform T: columns = display basis vectors in monomial coords:
    //   b_rho = e0.e0 ; b_mu^a = e0.ea ; b_sigma^{ab} (a<b) = 2 e_a.e_b ; b_sigma^{aa} = 2 e_a.e_a
    let d = s.dim();
    let mono_index = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let dd = n + 1;
        (0..dd)
            .flat_map(|a| (a..dd).map(move |b| (a, b)))
            .position(|p| p == (i, j))
            .unwrap()
    };
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    // order: rho, mu^1..mu^n, sigma^{ab} a<=b
    {
        let mut c = vec![Rational::zero(); d];
        c[mono_index(0, 0)] = rat(1);
        cols.push(c);
        labels.push("rho".into());
    }
    for a in 1..=n {
        let mut c = vec![Rational::zero(); d];
        c[mono_index(0, a)] = rat(1);
        cols.push(c);
        labels.push(format!("mu^{a}"));
    }
    for a in 1..=n {
        for b in a..=n {
            let mut c = vec![Rational::zero(); d];
            c[mono_index(a, b)] = rat(2);
            cols.push(c);
            labels.push(format!("sigma^{a}{b}"));
        }
    }
    let t = QMatrix::from_columns(&cols);
    let disp = s.with_basis(&t, labels, "sym2-display".into());
    println!("display slots: {:?}", disp.slot_dims());

    let c = KostantComplex::new_maps_only(disp.clone(), 3);

    // Expected del on 0-chains (display): (rho, mu, sigma) -> (0, rho delta_c^a, delta_c^{(a} mu^{b)})
    // 1-chain index: (tuple c, module k). Module display index mapping:
    let rho_i = 0usize;
    let mu_i = |a: usize| a; // a = 1..n
    let sig_i = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let mut idx = n + 1;
        for x in 1..=n {
            for y in x..=n {
                if (x, y) == (a, b) {
                    return idx;
                }
                idx += 1;
            }
        }
        unreachable!()
    };
    let ch0 = c.chain(0);
    let ch1 = c.chain(1);
    let mut expected = QMatrix::zeros(ch1.dim(), ch0.dim());
    for t in 0..n {
        let cdir = t + 1; // tangent direction index c = t+1 in 1..=n
        // mu-slot of output: rho delta_c^a
        expected[(ch1.index(t, mu_i(cdir)), rho_i)] = rat(1);
        // sigma-slot: delta_c^{(a} mu^{b)} => coefficient on sigma^{ab}:
        // 1/2(delta_c^a mu^b + delta_c^b mu^a)
        for a in 1..=n {
            for b in a..=n {
                for m in 1..=n {
                    let mut coeff = Rational::zero();
                    if a == cdir && b == m {
                        coeff += rat(1) / rat(2);
                    }
                    if b == cdir && a == m {
                        coeff += rat(1) / rat(2);
                    }
                    if !coeff.is_zero() {
                        expected[(ch1.index(t, sig_i(a, b)), mu_i(m))] = coeff;
                    }
                }
            }
        }
    }
    let got = c.del(0).matrix();
    println!("del0 matches display: {}", *got == expected);
    if *got != expected {
        for i in 0..ch1.dim() {
            for j in 0..ch0.dim() {
                if got[(i, j)] != expected[(i, j)] {
                    println!(
                        "  mismatch at out ({}) in ({}): got {} want {}",
                        ch1.label(i),
                        ch0.label(j),
                        got[(i, j)],
                        expected[(i, j)]
                    );
                }
            }
        }
    }

    // Expected del* on 1-chains: (rho_c, mu_c^a, sigma_c^{ab}) -> (-2 mu_p^p, -2 sigma_p^{pa}, 0)
    let mut expected_ds = QMatrix::zeros(ch0.dim(), ch1.dim());
    for t in 0..n {
        let p = t + 1;
        expected_ds[(rho_i, ch1.index(t, mu_i(p)))] = rat(-2);
        for a in 1..=n {
            // -2 sigma_p^{pa}: coefficient of sigma_c^{ab} with c = p... sigma_p^{pa}
            expected_ds[(mu_i(a), ch1.index(t, sig_i(p, a)))] += rat(-2);
        }
    }
    let got_ds = c.del_star(1).matrix();
    println!("del_star1 matches display: {}", *got_ds == expected_ds);
    if *got_ds != expected_ds {
        let mut cnt = 0;
        for i in 0..ch0.dim() {
            for j in 0..ch1.dim() {
                if got_ds[(i, j)] != expected_ds[(i, j)] {
                    cnt += 1;
                    if cnt < 12 {
                        println!(
                            "  mismatch at out ({}) in ({}): got {} want {}",
                            ch0.label(i),
                            ch1.label(j),
                            got_ds[(i, j)],
                            expected_ds[(i, j)]
                        );
                    }
                }
            }
        }
        println!("  total mismatches {cnt}");
    }

    // Laplacian spectra
    //println!("spectrum j=0: {:?}", c.spectrum(0).iter().map(|(l, m)| (l.to_string(), *m)).collect::<Vec<_>>());
    //println!("spectrum j=1: {:?}", c.spectrum(1).iter().map(|(l, m)| (l.to_string(), *m)).collect::<Vec<_>>());

    // Hodge dims at degree 1
    let box1 = c.laplacian(1).matrix();
    let harm = QMatrix::from_columns(&box1.nullspace());
    let im_del: Vec<usize> = c.del(0).matrix().independent_columns();
    let ds2 = c.del_star(2).matrix();
    let im_ds: Vec<usize> = ds2.independent_columns();
    println!(
        "deg1: harmonic {} im_del {} im_del* {} total {} (dim {})",
        harm.ncols(),
        im_del.len(),
        im_ds.len(),
        harm.ncols() + im_del.len() + im_ds.len(),
        ch1.dim()
    );
    // pairwise intersections via rank
    let b_del = QMatrix::from_columns(&im_del.iter().map(|&i| c.del(0).matrix().column(i)).collect::<Vec<_>>());
    let b_ds = QMatrix::from_columns(&im_ds.iter().map(|&i| ds2.column(i)).collect::<Vec<_>>());
    println!("rank[harm|del]  = {}", harm.hstack(&b_del).rank());
    println!("rank[harm|ds]   = {}", harm.hstack(&b_ds).rank());
    println!("rank[del|ds]    = {}", b_del.hstack(&b_ds).rank());
}
