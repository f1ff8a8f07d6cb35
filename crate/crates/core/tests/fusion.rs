use kn_core::fusion::*;
use kn_core::yd::*;
use kn_core::KnAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alg(n: u32) -> KnAlgebra {
    KnAlgebra::new(n).unwrap()
}

fn simple(a: KnAlgebra, s: &str) -> YDModule {
    build_simple(a, SimpleLabel::parse(a.n(), s).unwrap()).unwrap()
}

fn parse(n: u32, s: &str) -> SimpleLabel {
    SimpleLabel::parse(n, s).unwrap()
}

#[test]
fn tensor_of_simples_is_yd() {
    let a = alg(3);
    for (x, y) in [("U(1,0,1,0)", "W(-1,0,0)"), ("W(+1,1,2)", "W(-1,2,0)"), ("V(-1,2,1)", "U(0,1,2,2)")] {
        let t = tensor_module(&simple(a, x), &simple(a, y)).unwrap();
        assert!(check_yd(&t).passed(), "{x} ⊗ {y}");
    }
}

#[test]
fn unit_constraint() {
    let a = alg(3);
    let one = simple(a, "V(+1,0,0)");
    for l in list_simples(&a) {
        let m = build_simple(a, l).unwrap();
        let t = tensor_module(&one, &m).unwrap();
        assert!(t.same_structure(&m), "{l}");
    }
}

#[test]
fn one_dimensional_products() {
    let a = alg(5);
    let t = tensor_module(&simple(a, "V(-1,2,3)"), &simple(a, "V(-1,4,4)")).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(is_isomorphic(&t, &simple(a, "V(+1,1,2)")));
}

#[test]
fn reducible_u_decomposes_into_two_lines() {
    let a = alg(5);
    for (i, m) in [(0, 0), (2, 3), (4, 1)] {
        let d = decompose(&build_u_raw(a, i, i, m, m - 2 * i)).unwrap();
        let mut want = FusionDecomposition::new();
        want.add(SimpleLabel::v(5, Sign::Plus, i, m), 1);
        want.add(SimpleLabel::v(5, Sign::Minus, i, m), 1);
        assert_eq!(d, want);
    }
}

#[test]
fn w0_squared_n3() {
    let a = alg(3);
    let w0 = simple(a, "W(+1,0,0)");
    let d = decompose(&tensor_module(&w0, &w0).unwrap()).unwrap();
    assert_eq!(d.multiplicity(&parse(3, "V(+1,0,0)")), 1);
    assert_eq!(d.len(), 5);
    assert_eq!(d.total_dim(3), 9);
    assert_eq!(d, closed_form_fuse(3, w0.label().unwrap(), w0.label().unwrap()));
}

#[test]
fn u_times_w0_splits_into_signed_pair() {
    let a = alg(5);
    let w0 = simple(a, "W(+1,0,0)");
    for (i, j, m, t) in [(1, 0, 1, 0), (3, 1, 4, 2), (2, 2, 0, 2)] {
        let u = build_simple(a, SimpleLabel::u(5, i, j, m, t).unwrap()).unwrap();
        let d = decompose(&tensor_module(&u, &w0).unwrap()).unwrap();
        let (wi, wm) = (kn_core::zn::half(i + j, 5) as i64, kn_core::zn::half(2 * i + m + t, 5) as i64);
        let mut want = FusionDecomposition::new();
        want.add(SimpleLabel::w(5, Sign::Plus, wi, wm), 1);
        want.add(SimpleLabel::w(5, Sign::Minus, wi, wm), 1);
        assert_eq!(d, want);
    }
}

#[test]
fn w_is_v_times_w0() {
    let a = alg(3);
    let w0 = simple(a, "W(+1,0,0)");
    for l in list_simples(&a) {
        if let SimpleLabel::W { eps, i, m } = l {
            let v = build_v(a, eps, i, m);
            let t = tensor_module(&v, &w0).unwrap();
            assert!(is_isomorphic(&t, &build_simple(a, l).unwrap()), "{l}");
        }
    }
}

#[test]
fn u_w0_isomorphism_intertwines_n3() {
    let a = alg(3);
    let w0 = simple(a, "W(+1,0,0)");
    for l in list_simples(&a) {
        let SimpleLabel::U { i, j, m, t } = l else { continue };
        let (i, j, m, t) = (i as i64, j as i64, m as i64, t as i64);
        let (phi, (ip, mp)) = u_w0_isomorphism(a, i, j, m, t);
        let src = tensor_module(&build_u_raw(a, ip, ip, mp, mp - 2 * ip), &w0).unwrap();
        let dst = tensor_module(&build_u_raw(a, i, j, m, t), &w0).unwrap();
        assert!(is_morphism(&phi, &src, &dst), "{l}");
        assert_eq!(phi.rank(), 2 * 3);
    }
}

#[test]
fn all_pairs_n3_agree_with_closed_form() {
    let table = fusion_table(alg(3), Scope::All, FusionReading::default()).unwrap();
    assert_eq!(table.rows.len(), 72 * 73 / 2);
    let bad: Vec<_> = table.rows.iter().filter(|r| !r.agree).take(3).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn literal_reading_is_refuted() {
    let t1t1 = FusionReading { uu_doubled_t1: true, ..Default::default() };
    let table = fusion_table(alg(3), Scope::All, t1t1).unwrap();
    assert!(table.mismatches > 0);
    assert!(table
        .rows
        .iter()
        .filter(|r| !r.agree)
        .all(|r| matches!((r.left, r.right), (SimpleLabel::U { .. }, SimpleLabel::U { .. }))));

    let discrete = FusionReading { zn: ZnRelation::Discrete, ..Default::default() };
    let w0 = parse(3, "W(+1,0,0)");
    let d = closed_form_fuse_with(3, w0, w0, discrete);
    assert_ne!(d.total_dim(3), 9);
}

#[test]
fn zn_orbit_count() {
    for n in [3u32, 5, 7] {
        let o = zn_orbits(n, ZnRelation::Antipodal);
        assert_eq!(o.len() as u32, (n * n).div_ceil(2));
        assert!(o.contains(&(0, 0)));
    }
}

#[test]
fn sampled_pairs_n5_agree() {
    let table = fusion_table(alg(5), Scope::Sample { seed: 5, count: 200 }, FusionReading::default()).unwrap();
    assert_eq!(table.rows.len(), 200);
    assert_eq!(table.mismatches, 0);
}

#[test]
fn commutative_on_decompositions() {
    let a = alg(3);
    let labels = list_simples(&a);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let l1 = labels[rng.random_range(0..labels.len())];
        let l2 = labels[rng.random_range(0..labels.len())];
        let (m1, m2) = (build_simple(a, l1).unwrap(), build_simple(a, l2).unwrap());
        let x = decompose(&tensor_module(&m1, &m2).unwrap()).unwrap();
        let y = decompose(&tensor_module(&m2, &m1).unwrap()).unwrap();
        assert_eq!(x, y, "{l1} {l2}");
    }
}

#[test]
fn associative_on_decompositions() {
    let a = alg(3);
    let labels = list_simples(&a);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let ls: Vec<_> = (0..3).map(|_| labels[rng.random_range(0..labels.len())]).collect();
        let ms: Vec<_> = ls.iter().map(|l| build_simple(a, *l).unwrap()).collect();
        let left = tensor_module(&tensor_module(&ms[0], &ms[1]).unwrap(), &ms[2]).unwrap();
        let right = tensor_module(&ms[0], &tensor_module(&ms[1], &ms[2]).unwrap()).unwrap();
        assert_eq!(decompose(&left).unwrap(), decompose(&right).unwrap(), "{ls:?}");
    }
}
