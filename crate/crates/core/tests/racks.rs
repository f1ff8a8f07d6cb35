use kn_core::nichols::{graded_dims_with, infinite_precheck, NicholsOptions};
use kn_core::racks::*;
use kn_core::yd::{braided_space, build_simple, Sign, SimpleLabel};
use kn_core::{cyc, KnAlgebra};

fn w_space(n: u32, eps: Sign, i: u32, m: u32) -> kn_core::BraidedSpace {
    let a = KnAlgebra::new(n).unwrap();
    braided_space(&build_simple(a, SimpleLabel::W { eps, i, m }).unwrap())
}

fn dims(b: &kn_core::BraidedSpace, cutoff: usize) -> Vec<usize> {
    graded_dims_with(b, &NicholsOptions { cutoff, relations: false, memory_mb: 4096 }).unwrap().dims
}

fn all_w(n: u32) -> impl Iterator<Item = (Sign, i64, i64)> {
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .flat_map(move |e| (0..n as i64).flat_map(move |i| (0..n as i64).map(move |m| (e, i, m))))
}

#[test]
fn dihedral_rack_basics() {
    let r = dihedral_rack(3).unwrap();
    assert_eq!(r.op(1, 0), 2);
    for n in [3u32, 5, 7] {
        let r = dihedral_rack(n).unwrap();
        assert!((0..n as usize).all(|x| r.op(x, x) == x));
    }
    assert!(Rack::new(vec![vec![1, 0], vec![0, 0]]).is_err());
    assert!(Rack::new(vec![vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]]).is_err());
}

#[test]
fn derived_racks() {
    for n in [3u32, 5, 7] {
        let b = BraidedSet::dihedral_solution(n);
        assert!(b.is_non_degenerate());
        assert_eq!(derived_rack(&b).unwrap(), dihedral_rack(n).unwrap());
    }
    assert_eq!(derived_rack(&BraidedSet::flip(4)).unwrap(), trivial_rack(4));
    assert!(BraidedSet::from_fn(2, |_, _| (0, 0)).is_err());
}

#[test]
fn w_cocycles_pass() {
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    let r = dihedral_rack(n).unwrap();
    for (e, i, m) in all_w(n) {
        assert!(check_f_cocycle(&b, &w_cocycle(n, e, i, m)));
        assert!(check_f_cocycle(&b, &w_cocycle_printed(n, e, i, m)));
        assert!(check_rack_cocycle(&r, &w_rack_cocycle(n, e, i, m)));
        assert!(check_rack_cocycle(&r, &w_rack_cocycle_printed(n, e, i, m)));
    }
    let minus = CocycleTable::constant(n, 3, -cyc(n, 0).unwrap()).unwrap();
    assert!(check_rack_cocycle(&r, &minus));
}

#[test]
fn non_cocycle_is_rejected() {
    let n = 3;
    let r = dihedral_rack(n).unwrap();
    let q = w_rack_cocycle(n, Sign::Minus, 0, 0).perturbed(0, 1);
    assert!(!check_rack_cocycle(&r, &q));
    assert!(matches!(cq_braiding(&r, &q), Err(kn_core::Error::CocycleViolated(_))));
    let b = BraidedSet::dihedral_solution(n);
    let f = w_cocycle(n, Sign::Minus, 1, 1).perturbed(1, 2);
    assert!(!check_f_cocycle(&b, &f));
}

#[test]
fn sf_braiding_is_the_w_braiding() {
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    for (e, i, m) in all_w(n) {
        let s = sf_braiding(&b, &w_cocycle(n, e, i, m)).unwrap();
        assert!(s.check_braid_equation());
        assert_eq!(s, w_space(n, e, i as u32, m as u32), "W({e},{i},{m})");
    }
}

#[test]
fn printed_scalars_give_another_w_braiding() {
    // ε ξ^{2i(m-i-ℓ-r)} at (i, m) equals the categorical scalars at (i/2, …); at n = 3, (1, m) ↦ (2, 2m).
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    for m in 0..3i64 {
        for e in [Sign::Plus, Sign::Minus] {
            let s = sf_braiding(&b, &w_cocycle_printed(n, e, 1, m)).unwrap();
            assert_eq!(s, w_space(n, e, 2, (2 * m % 3) as u32));
        }
    }
}

#[test]
fn cq_examples() {
    let r = dihedral_rack(3).unwrap();
    let minus = CocycleTable::constant(3, 3, -cyc(3, 0).unwrap()).unwrap();
    let d0 = cq_braiding(&r, &minus).unwrap();
    assert!(d0.check_braid_equation());
    for l in 0..3usize {
        for rr in 0..3usize {
            let t = (2 * l + 3 - rr) % 3;
            assert_eq!(d0.braid().get(t * 3 + l, l * 3 + rr), -cyc(3, 0).unwrap());
        }
    }
    let flip = cq_braiding(&trivial_rack(2), &CocycleTable::constant(3, 2, cyc(3, 0).unwrap()).unwrap()).unwrap();
    assert_eq!(flip, kn_core::BraidedSpace::flip(3, 2).unwrap());
    assert!(infinite_precheck(&flip).is_some());
}

#[test]
fn t_equivalence_cocycles() {
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    for (e, i, m) in all_w(n) {
        assert_eq!(t_equivalence_cocycle(&b, &w_cocycle(n, e, i, m)).unwrap(), w_rack_cocycle(n, e, i, m));
        assert_eq!(
            t_equivalence_cocycle(&b, &w_cocycle_printed(n, e, i, m)).unwrap(),
            w_rack_cocycle_printed(n, e, i, m)
        );
    }
    let c = CocycleTable::constant(n, 4, cyc(n, 1).unwrap()).unwrap();
    assert_eq!(t_equivalence_cocycle(&BraidedSet::flip(4), &c).unwrap(), c);
    // A cocycle depending on ℓ alone breaks the invariance hypothesis.
    let bad = CocycleTable::from_fn(n, 3, |l, _| cyc(n, l as i64).unwrap()).unwrap();
    assert!(matches!(t_equivalence_cocycle(&b, &bad), Err(kn_core::Error::InvarianceFails(_))));
}

#[test]
fn t_equivalent_spaces_share_graded_dims() {
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    let r = derived_rack(&b).unwrap();
    for i in 0..3i64 {
        let f = w_cocycle(n, Sign::Minus, i, i);
        let q = t_equivalence_cocycle(&b, &f).unwrap();
        let cq = cq_braiding(&r, &q).unwrap();
        assert!(cq.check_braid_equation());
        assert_eq!(dims(&cq, 5), dims(&sf_braiding(&b, &f).unwrap(), 5), "i={i}");
        assert_eq!(dims(&cq, 5), vec![1, 3, 4, 3, 1, 0]);
    }
}

#[test]
fn twist_equivalence_phi() {
    let n = 3;
    let b = BraidedSet::dihedral_solution(n);
    for i in 0..3i64 {
        for k in 0..3i64 {
            let rep = twist_equivalence_check(
                &b,
                &w_cocycle_printed(n, Sign::Minus, k, k),
                &w_cocycle_printed(n, Sign::Minus, i, i),
                &twist_phi(n, i, k, 1),
            )
            .unwrap();
            assert!(rep.passed(), "printed i={i} k={k}: {rep:?}");
            let rep = twist_equivalence_check(
                &b,
                &w_cocycle(n, Sign::Minus, k, k),
                &w_cocycle(n, Sign::Minus, i, i),
                &twist_phi(n, i, k, 2),
            )
            .unwrap();
            assert!(rep.passed(), "categorical i={i} k={k}: {rep:?}");
        }
    }
    let one = CocycleTable::constant(n, 3, cyc(n, 0).unwrap()).unwrap();
    let f = w_cocycle(n, Sign::Minus, 1, 1);
    assert!(twist_equivalence_check(&b, &f, &f, &one).unwrap().passed());
    let rep = twist_equivalence_check(&b, &f, &f.perturbed(2, 0), &one).unwrap();
    assert!(rep.phi_cocycle && !rep.rack_form && !rep.rewritten_form);
}

#[test]
fn twist_witness_for_every_n() {
    for n in [5u32, 7, 9] {
        let b = BraidedSet::dihedral_solution(n);
        for i in 0..n as i64 {
            for k in 0..n as i64 {
                let (fp, gp) = (w_cocycle_printed(n, Sign::Minus, k, k), w_cocycle_printed(n, Sign::Minus, i, i));
                assert!(twist_equivalence_check(&b, &fp, &gp, &twist_phi(n, i, k, -2)).unwrap().passed());
                let (fc, gc) = (w_cocycle(n, Sign::Minus, k, k), w_cocycle(n, Sign::Minus, i, i));
                assert!(twist_equivalence_check(&b, &fc, &gc, &twist_phi(n, i, k, -4)).unwrap().passed());
                // The Z_3 formula survives only when n divides 3(i-k).
                let literal = twist_equivalence_check(&b, &fp, &gp, &twist_phi(n, i, k, 1)).unwrap().passed();
                assert_eq!(literal, (3 * (i - k)).rem_euclid(n as i64) == 0, "n={n} i={i} k={k}");
            }
        }
    }
}
