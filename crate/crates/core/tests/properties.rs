use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;

use factorcheck::action::{Action, MatAction, MatElem, PermAction, PermPoint};
use factorcheck::arith::expr::{eval_str, Bindings};
use factorcheck::arith::ppd::{ppd, prime_factors};
use factorcheck::atlas::classical::{o_group, sp_group};
use factorcheck::atlas::{mathieu12, MatrixGroup};
use factorcheck::bsgs::{orbit_size, tiny_intersection_order, BsgsChain, ChainOptions};
use factorcheck::catalog::{self, Catalog, DecorChoice};
use factorcheck::field::{Field, Gf};
use factorcheck::forms::{classify_quadratic, count_singular, dickson_invariant, is_isometry, singular_count_formula, FormType, QuadraticForm};
use factorcheck::matrix::Matrix;
use factorcheck::perm::Perm;
use factorcheck::verify::Budget;

struct Fixture {
    group: MatrixGroup,
    chain: BsgsChain<MatAction>,
}

fn fixture(cell: &'static OnceLock<Fixture>, make: fn() -> MatrixGroup) -> &'static Fixture {
    cell.get_or_init(|| {
        let group = make();
        let chain = group.chain().unwrap();
        Fixture { group, chain }
    })
}

fn sp4_4() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    fixture(&F, || sp_group(2, 4).unwrap())
}

fn go4_minus_4() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    fixture(&F, || o_group(2, 4, FormType::Minus).unwrap().0)
}

fn go8_plus_2() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    fixture(&F, || o_group(4, 2, FormType::Plus).unwrap().0)
}

fn word(f: &Fixture, letters: &[usize]) -> MatElem {
    let act = f.group.action();
    let gens = f.group.elems().unwrap();
    letters.iter().fold(act.identity(), |acc, &i| act.mul(&acc, &gens[i % gens.len()]))
}

fn fixtures() -> [&'static Fixture; 3] {
    [sp4_4(), go4_minus_4(), go8_plus_2()]
}

fn m12() -> &'static BsgsChain<PermAction> {
    static C: OnceLock<BsgsChain<PermAction>> = OnceLock::new();
    C.get_or_init(|| mathieu12().chain().unwrap())
}

fn random_perm(n: usize, seed: &[usize]) -> Perm {
    let mut images: Vec<u16> = (0..n as u16).collect();
    for (i, &s) in seed.iter().enumerate().take(n) {
        images.swap(i, i + s % (n - i));
    }
    Perm::from_images(images).unwrap()
}

fn perm_chain(n: usize, gens: &[Perm]) -> BsgsChain<PermAction> {
    BsgsChain::build(&PermAction::new(n), gens, &[], &ChainOptions::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_is_a_ring_map(f in 1u32..=16, sub in 1u32..=8, a in any::<u16>(), b in any::<u16>()) {
        prop_assume!(f % sub == 0);
        let k = Field::new(2, f).unwrap();
        let q = k.order();
        let (a, b) = (Gf((a as u32 % q) as u16), Gf((b as u32 % q) as u16));
        let q0 = 1 << sub;
        let fr = |x| k.frobenius(x, q0).unwrap();
        prop_assert_eq!(fr(k.add(a, b)), k.add(fr(a), fr(b)));
        prop_assert_eq!(fr(k.mul(a, b)), k.mul(fr(a), fr(b)));
    }

    #[test]
    fn primitive_elements_generate(f in 1u32..=16) {
        let k = Field::new(2, f).unwrap();
        prop_assert_eq!(k.mult_order(k.primitive_element()), Some(k.order() - 1));
    }

    #[test]
    fn trace_through_an_intermediate_field(x in 0u16..16) {
        let k = Field::with_order(16).unwrap();
        let x = Gf(x);
        let direct = k.trace_to_subfield(x, 2).unwrap();
        let y = k.trace_to_subfield(x, 4).unwrap();
        let stepwise = k.add(y, k.mul(y, y));
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn isometries_are_closed(which in 0usize..3, u in prop::collection::vec(0usize..64, 1..24), v in prop::collection::vec(0usize..64, 1..24)) {
        let f = fixtures()[which];
        let (g, h) = (word(f, &u), word(f, &v));
        let k = &f.group.space.field;
        let gh = g.m.mul(k, &h.m).unwrap();
        prop_assert!(is_isometry(&gh, &f.group.space).unwrap());
        prop_assert!(is_isometry(&g.inv, &f.group.space).unwrap());
    }

    #[test]
    fn dickson_invariant_is_a_homomorphism(which in 1usize..3, u in prop::collection::vec(0usize..64, 1..24), v in prop::collection::vec(0usize..64, 1..24)) {
        let f = fixtures()[which];
        let (g, h) = (word(f, &u), word(f, &v));
        let k = &f.group.space.field;
        let d = |m: &Matrix| dickson_invariant(m, &f.group.space).unwrap();
        prop_assert_eq!(d(&g.m.mul(k, &h.m).unwrap()), (d(&g.m) + d(&h.m)) % 2);
    }

    #[test]
    fn membership_is_closed_under_products(which in 0usize..3, u in prop::collection::vec(0usize..64, 1..32), v in prop::collection::vec(0usize..64, 1..32)) {
        let f = fixtures()[which];
        let act = f.group.action();
        let (g, h) = (word(f, &u), word(f, &v));
        prop_assert!(f.chain.contains(&g) && f.chain.contains(&h));
        prop_assert!(f.chain.contains(&act.mul(&g, &h)));
        prop_assert!(f.chain.contains(&act.inv(&g)));
    }

    #[test]
    fn order_is_independent_of_the_base(points in prop::collection::vec(0usize..12, 1..4)) {
        let chain = m12();
        let prefix: Vec<PermPoint> = points.iter().map(|&p| PermPoint::Int(p as u16)).collect();
        let rebased = chain.rebase(&prefix).unwrap();
        prop_assert_eq!(rebased.order(), chain.order());
        prop_assert_eq!(&rebased.base()[..1], &prefix[..1]);
    }

    #[test]
    fn orbit_lengths_divide_the_order(which in 0usize..3, u in prop::collection::vec(0usize..64, 0..12), coord in 0usize..8) {
        let f = fixtures()[which];
        let act = f.group.action();
        let n = f.group.space.dim;
        let mut x = vec![Gf::ZERO; n];
        x[coord % n] = Gf::ONE;
        let g = word(f, &u);
        let start = act.act(&act.vector_point(&x).unwrap(), &g);
        let len = orbit_size(&act, &f.group.elems().unwrap(), &start, 1 << 20).unwrap();
        prop_assert_eq!(f.chain.order() % BigUint::from(len), BigUint::from(0u32));
    }

    #[test]
    fn intersection_order_is_symmetric(n in 5usize..8, a in prop::collection::vec(0usize..100, 8), b in prop::collection::vec(0usize..100, 8), c in prop::collection::vec(0usize..100, 8)) {
        let h = perm_chain(n, &[random_perm(n, &a), random_perm(n, &b)]);
        let k = perm_chain(n, &[random_perm(n, &b), random_perm(n, &c)]);
        let hk = tiny_intersection_order(&h, |g| k.contains(g), 1 << 20).unwrap();
        let kh = tiny_intersection_order(&k, |g| h.contains(g), 1 << 20).unwrap();
        prop_assert_eq!(hk, kh);
        prop_assert_eq!(h.order() % BigUint::from(hk), BigUint::from(0u32));
    }

    #[test]
    fn permutations_compose_left_to_right(n in 2usize..12, a in prop::collection::vec(0usize..100, 12), b in prop::collection::vec(0usize..100, 12), c in prop::collection::vec(0usize..100, 12)) {
        let (p, q, r) = (random_perm(n, &a), random_perm(n, &b), random_perm(n, &c));
        for x in 0..n {
            prop_assert_eq!(p.mul(&q).image(x), q.image(p.image(x)));
        }
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert!(p.mul(&p.inv()).is_identity());
    }

    #[test]
    fn classification_survives_basis_change(m in 1usize..=3, minus in any::<bool>(), q in prop::sample::select(vec![2u32, 4]), entries in prop::collection::vec(any::<u16>(), 36)) {
        let k = Field::with_order(q).unwrap();
        let n = 2 * m;
        prop_assume!(q == 2 || m <= 2);
        let ty = if minus { FormType::Minus } else { FormType::Plus };
        let mut c = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, Gf((entries[i * 6 + j] as u32 % q) as u16));
            }
        }
        prop_assume!(c.inv(&k).is_ok());
        let form = QuadraticForm::standard(&k, m, ty).unwrap().change_basis(&k, &c);
        let cls = classify_quadratic(&form, &k).unwrap();
        prop_assert_eq!(cls.form_type, ty);
        prop_assert_eq!(form.change_basis(&k, &cls.basis), QuadraticForm::standard(&k, m, ty).unwrap());
        prop_assert_eq!(count_singular(&form, &k).unwrap(), singular_count_formula(q as u64, m as u32, ty));
    }

    #[test]
    fn primitive_prime_divisors_are_primitive(a in 2u64..=16, n in 1u32..=20) {
        prop_assume!((a, n) != (2, 6) && !(a == 2 && n == 1));
        let set = ppd(a, n);
        let all = prime_factors((a as u128).pow(n) - 1);
        for r in &set {
            prop_assert!(all.contains(r));
            for i in 1..n {
                prop_assert!(((a as u128).pow(i) - 1) % r != 0);
            }
        }
        let naive: BTreeSet<u128> = all.iter().copied().filter(|r| (1..n).all(|i| ((a as u128).pow(i) - 1) % r != 0)).collect();
        prop_assert_eq!(set, naive);
    }

    #[test]
    fn expressions_match_integer_arithmetic(x in 0u64..1000, y in 1u64..1000, z in 0u64..20) {
        let mut env = Bindings::new();
        env.insert("x".into(), x);
        env.insert("y".into(), y);
        let got = eval_str(&format!("(x + y) * 2^{z} - x % y"), &env).unwrap();
        prop_assert_eq!(got, BigUint::from((x + y) * (1u64 << z) - x % y));
    }

    #[test]
    fn instance_ids_ignore_parameter_order(f in 2u64..6, l in 1u64..4, swap in any::<bool>()) {
        let cat = Catalog::bundled();
        let row = cat.row(catalog::Table::T2, "1").unwrap();
        let text = if swap { format!("l={l},f={f}") } else { format!("f={f},l={l}") };
        let b = Budget::default();
        let a = catalog::instantiate(row, &catalog::parse_params(&text).unwrap(), DecorChoice::Max, &b).unwrap();
        let c = catalog::instantiate(row, &catalog::parse_params(&format!("f={f},l={l}")).unwrap(), DecorChoice::Max, &b).unwrap();
        prop_assert_eq!(&a.id, &c.id);
        prop_assert_eq!(a.screen().to_json(), c.screen().to_json());
    }
}

#[test]
fn divisibility_clauses_hold_on_verified_factorizations() {
    use factorcheck::arith::filters::{divisibility_filter, FilterInput};
    use factorcheck::verify::instances::*;
    let b = Budget::default();
    let reports = [
        symplectic_wreath_minus(2, 1, 1, 1, 1, 2, &b).unwrap().run(None, &b).unwrap(),
        symplectic_suzuki(3, 2, &b).unwrap().run(None, &b).unwrap(),
        omega8_2_restricted(Decor::Both, &b).unwrap().run(None, &b).unwrap(),
        alternating_10(1512, &b).unwrap().run(None, &b).unwrap(),
    ];
    for r in reports {
        assert_eq!(r.verdict, factorcheck::verify::Verdict::Verified, "{}", r.id);
        let n = |s: &str| s.parse::<BigUint>().unwrap();
        let x = FilterInput::with_outer(n(&r.g_order), n(&r.h_order), n(&r.k_order), BigUint::from(1u32));
        assert!(divisibility_filter(&x).all(), "{}", r.id);
    }
}
