use kn_core::hopf::KnElement;
use kn_core::yd::*;
use kn_core::{CycMatrix, CycNum, KnAlgebra};
use rand::seq::IndexedRandom;
use rand::SeedableRng;

fn alg(n: u32) -> KnAlgebra {
    KnAlgebra::new(n).unwrap()
}

#[test]
fn u_example_instantiates_the_formulas() {
    let a = alg(3);
    let u = build_u_raw(a, 1, 0, 1, 0);
    for x in 0..3 {
        for y in 0..3 {
            let p = u.action_p(x, y);
            assert_eq!(p.get(0, 0).is_one(), (x, y) == (1, 0));
            assert_eq!(p.get(1, 1).is_one(), (x, y) == (0, 1));
        }
    }
    assert_eq!(u.coaction(0), &[(a.character_element(a.character(1, 0)), 0)]);
    assert_eq!(u.coaction(1), &[(a.character_element(a.character(2, 1)), 1)]);
    assert!(check_yd(&u).passed());
}

#[test]
fn w_example_instantiates_the_formulas() {
    let a = alg(3);
    let w = build_simple(a, SimpleLabel::w(3, Sign::Minus, 0, 0)).unwrap();
    for r in 0..3usize {
        let col = w.action_x().col(r);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].0, (3 - r) % 3);
        assert_eq!(col[0].1, a.scalar(-1));
        // p_{2r,-2r} fixes w_r
        assert!(w.action_p(a.z(2 * r as i64), a.z(-2 * r as i64)).get(r, r).is_one());
        let expect: Vec<(KnElement, usize)> = (0..3).map(|k| (a.comatrix_element(r as i64, k), k as usize)).collect();
        assert_eq!(w.coaction(r), expect.as_slice());
    }
}

#[test]
fn every_simple_is_yetter_drinfeld_for_n3() {
    let a = alg(3);
    let labels = list_simples(&a);
    assert_eq!(labels.len(), 18 + 36 + 18);
    for l in labels {
        let m = build_simple(a, l).unwrap();
        let r = check_yd(&m);
        assert!(r.passed(), "{l}: {r:?}");
    }
}

#[test]
fn seeded_sample_of_simples_is_yetter_drinfeld_for_n5() {
    let a = alg(5);
    let labels = list_simples(&a);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let sample: Vec<_> = labels.choose_multiple(&mut rng, 50).copied().collect();
    for l in sample {
        assert!(check_yd(&build_simple(a, l).unwrap()).passed(), "{l}");
    }
}

#[test]
fn untwisted_w_action_fails_off_i_zero() {
    let a = alg(3);
    for eps in [Sign::Plus, Sign::Minus] {
        for i in 0..3 {
            for m in 0..3 {
                let plain = check_yd(&build_w_variant(a, eps, i, m, WVariant::Plain));
                let twisted = check_yd(&build_w_variant(a, eps, i, m, WVariant::Twisted));
                assert!(twisted.passed());
                assert_eq!(plain.passed(), i == 0, "W({eps},{i},{m})");
                if i != 0 {
                    assert!(plain.module_axioms && plain.comodule_axioms && !plain.yd_compatibility);
                }
            }
        }
    }
    let r = check_yd(&build_w_variant(a, Sign::Minus, 1, 1, WVariant::Plain));
    assert!(!r.passed() && r.first_failure.is_some());
}

#[test]
fn corrupted_coaction_is_caught() {
    let a = alg(3);
    let good = build_u_raw(a, 1, 0, 1, 0);
    // δ(u₁) = χ_{t,m} ⊗ u₁ instead of χ_{m,t} ⊗ u₁
    let bad = YDModule::new(
        a,
        good.action_p_all().to_vec(),
        good.action_x().clone(),
        vec![vec![(a.character_element(a.character(0, 1)), 0)], good.coaction(1).to_vec()],
    )
    .unwrap();
    let r = check_yd(&bad);
    assert!(r.module_axioms && r.comodule_axioms && !r.yd_compatibility);
}

#[test]
fn self_braidings_match_closed_forms() {
    for n in [3u32, 5] {
        let a = alg(n);
        let nn = n as i64;
        for l in list_simples(&a) {
            let m = build_simple(a, l).unwrap();
            let c = braiding(&m, &m).unwrap();
            let d = m.dim();
            let mut expect = Vec::new();
            match l {
                SimpleLabel::V { i, m: mm, .. } => {
                    let (i, mm) = (i as i64, mm as i64);
                    expect.push((0, 0, a.xi(2 * i * (mm - i))));
                }
                SimpleLabel::U { i, j, m: mm, t } => {
                    let (i, j, mm, t) = (i as i64, j as i64, mm as i64, t as i64);
                    // c(u_a ⊗ u_b) = q_ab u_b ⊗ u_a
                    expect.push((0, 0, a.xi(mm * i + t * j)));
                    expect.push((2, 1, a.xi(i * t + mm * j)));
                    expect.push((1, 2, a.xi(i * t + mm * j + 2 * (i * i - j * j))));
                    expect.push((3, 3, a.xi(mm * i + t * j)));
                }
                SimpleLabel::W { eps, i, m: mm } => {
                    let (i, mm) = (i as i64, mm as i64);
                    for lft in 0..nn {
                        for r in 0..nn {
                            let coef = &a.scalar(eps.value()) * &a.xi(2 * i * (mm - i) - 4 * i * (r + lft));
                            let row = a.z(-r) as usize * d + a.z(lft + 2 * r) as usize;
                            expect.push((row, lft as usize * d + r as usize, coef));
                        }
                    }
                }
            }
            let want = CycMatrix::from_triplets(n, d * d, d * d, expect).unwrap();
            assert_eq!(c, want, "{l}");
            if n == 3 {
                assert!(braided_space(&m).check_braid_equation(), "{l}");
            }
        }
    }
}

#[test]
fn schur_orthogonality_for_n3() {
    let a = alg(3);
    let mods: Vec<_> = list_simples(&a).into_iter().map(|l| build_simple(a, l).unwrap()).collect();
    for (x, s) in mods.iter().enumerate() {
        for (y, t) in mods.iter().enumerate() {
            assert_eq!(hom_dimension(s, t), usize::from(x == y), "{:?} {:?}", s.label(), t.label());
        }
    }
}

#[test]
fn reducible_u_splits() {
    for n in [3u32, 5] {
        let a = alg(n);
        for i in 0..n as i64 {
            for m in 0..n as i64 {
                let u = build_u_raw(a, i, i, m, m - 2 * i);
                let vp = build_v(a, Sign::Plus, a.z(i), a.z(m));
                let vm = build_v(a, Sign::Minus, a.z(i), a.z(m));
                assert_eq!(hom_dimension(&vp, &u), 1);
                assert_eq!(hom_dimension(&vm, &u), 1);
                // u₁ ↦ v⁺ + v⁻, u₂ ↦ v⁺ - v⁻
                let sum = vp.direct_sum(&vm).unwrap();
                let one = a.scalar(1);
                let phi =
                    CycMatrix::from_dense(n, vec![vec![one.clone(), one.clone()], vec![one.clone(), -&one]]).unwrap();
                assert!(is_morphism(&phi, &u, &sum));
                assert!(phi.inverse().is_some());
                // and the wrong sign pattern is not a morphism
                let bad =
                    CycMatrix::from_dense(n, vec![vec![one.clone(), -&one], vec![one.clone(), one.clone()]]).unwrap();
                assert!(!is_morphism(&bad, &u, &sum));
            }
        }
    }
}

#[test]
fn isomorphism_examples() {
    let a = alg(3);
    let u1 = build_u_raw(a, 1, 0, 1, 0);
    let u2 = build_u_raw(a, 0, 1, 2, 1);
    assert!(is_isomorphic(&u1, &u2));
    assert_eq!(SimpleLabel::u(3, 1, 0, 1, 0).unwrap(), SimpleLabel::u(3, 0, 1, 2, 1).unwrap());
    let wp = build_simple(a, SimpleLabel::w(3, Sign::Plus, 1, 1)).unwrap();
    let wm = build_simple(a, SimpleLabel::w(3, Sign::Minus, 1, 1)).unwrap();
    assert!(!is_isomorphic(&wp, &wm));
    let v1 = build_simple(a, SimpleLabel::v(3, Sign::Plus, 1, 1)).unwrap();
    let v2 = build_simple(a, SimpleLabel::v(3, Sign::Plus, 1, 2)).unwrap();
    assert!(!is_isomorphic(&v1, &v2));
    let triv = build_simple(a, SimpleLabel::v(3, Sign::Plus, 0, 0)).unwrap();
    assert_eq!(hom_dimension(&triv, &build_simple(a, SimpleLabel::w(3, Sign::Minus, 1, 1)).unwrap()), 0);
}

#[test]
fn hom_space_of_a_simple_is_scalars() {
    let a = alg(3);
    let w = build_simple(a, SimpleLabel::w(3, Sign::Minus, 2, 1)).unwrap();
    let hs = hom_space(&w, &w);
    assert_eq!(hs.len(), 1);
    let id = CycMatrix::identity(3, 3).unwrap();
    let c = hs[0].get(0, 0);
    assert_eq!(hs[0], id.scale(&c));
    assert!(!CycNum::is_zero(&c));
}

#[test]
fn trivial_module_is_the_counit() {
    let a = alg(5);
    let t = build_simple(a, SimpleLabel::v(5, Sign::Plus, 0, 0)).unwrap();
    for b in a.basis() {
        let act = t.act_basis(b);
        assert_eq!(act.get(0, 0), a.scalar(a.counit_basis(b) as i64));
    }
    assert_eq!(t.coaction(0)[0].0, a.one());
}
