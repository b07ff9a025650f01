use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;

use exactcat::category::{classify, inverse, is_pullback_square, is_pushout_square, pullback, pushout, Category};
use exactcat::instances::sampling::{SampleRng, SamplerConfig};
use exactcat::instances::{ambient_injective, ambient_surjective, finvectq, latticez, monopairsq, LatticeMor, PairMor};
use exactcat::linalg::{determinant, rank, IntMatrix};

fn scfg() -> SamplerConfig {
    SamplerConfig { max_dim: 3, max_entry: 4, seed: 0 }
}

fn sample<C: Category>(cat: &C, seed: u64) -> (SampleRng, C::Mor) {
    let mut rng = SampleRng::seed_from_u64(seed);
    let (x, y) = (cat.sample_object(&mut rng, &scfg()), cat.sample_object(&mut rng, &scfg()));
    let f = cat.sample_morphism(&mut rng, &x, &y, &scfg());
    (rng, f)
}

/// Laws every instance must satisfy, checked on one sampled morphism.
fn laws<C: Category>(cat: &C, seed: u64) -> Result<(), TestCaseError> {
    let (mut rng, f) = sample(cat, seed);
    let c = |a: &C::Mor, b: &C::Mor| cat.compose(a, b).unwrap();
    let (x, y) = (cat.dom(&f), cat.cod(&f));

    prop_assert!(classify(cat, &f).inconsistencies().is_empty());
    prop_assert_eq!(c(&cat.identity(&x), &f), f.clone());
    prop_assert_eq!(c(&f, &cat.identity(&y)), f.clone());
    prop_assert!(cat.is_zero_morphism(&cat.add(&f, &cat.neg(&f)).unwrap()));

    let a = cat.sample_automorphism(&mut rng, &x, &scfg());
    let inv = inverse(cat, &a).expect("automorphisms are invertible");
    prop_assert_eq!(c(&a, &inv), cat.identity(&x));

    let obj = cat.sample_object(&mut rng, &scfg());
    let t = cat.sample_morphism(&mut rng, &obj, &y, &scfg());
    let sq = pullback(cat, &f, &t).unwrap();
    prop_assert!(is_pullback_square(cat, &f, &t, &sq.p_y, &sq.p_t).unwrap());
    let t = cat.sample_morphism(&mut rng, &x, &obj, &scfg());
    let sq = pushout(cat, &f, &t).unwrap();
    prop_assert!(is_pushout_square(cat, &f, &t, &sq.s_y, &sq.s_t).unwrap());

    let back = cat.morphism_from_json(&cat.morphism_to_json(&f)).unwrap();
    prop_assert_eq!(back, f);
    Ok(())
}

// gcd of the maximal minors along the short side; 1 iff the map is onto
// a pure sublattice (for tall matrices) or surjective (for wide ones).
fn maximal_minor_gcd(a: &IntMatrix) -> BigInt {
    let (m, n) = a.shape();
    let k = m.min(n);
    let mut g = BigInt::zero();
    let choose = |total: usize| -> Vec<Vec<usize>> {
        (0u32..1 << total)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..total).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    };
    for rows in choose(m) {
        for cols in choose(n) {
            g = g.gcd(&determinant(&a.select_rows(&rows).select_columns(&cols)));
        }
    }
    g
}

fn lattice_oracle(f: &LatticeMor) -> (bool, bool) {
    let r = rank(&f.matrix.to_rational());
    let (cod, dom) = f.matrix.shape();
    let kernel = r == dom && (dom == 0 || maximal_minor_gcd(&f.matrix).is_one());
    let cokernel = r == cod && (cod == 0 || maximal_minor_gcd(&f.matrix).is_one());
    (kernel, cokernel)
}

fn pair_oracle(f: &PairMor) -> (bool, bool) {
    let (u, u2) = (f.dom.basis(), f.cod.basis());
    // f(U) ⊆ U' always; equality iff dimensions agree
    let image_is_sub = rank(&(&f.matrix * u)) == f.cod.sub_dim();
    // dim f⁻¹(U') = dim(U' ∩ im f) when f is injective
    let meet = u2.cols() + rank(&f.matrix) - rank(&u2.hstack(&f.matrix).unwrap());
    let preimage_is_sub = meet == f.dom.sub_dim();
    (ambient_injective(f) && preimage_is_sub, ambient_surjective(f) && image_is_sub)
}

proptest! {
    #[test]
    fn finvect_laws(seed in any::<u64>()) {
        laws(&finvectq(), seed)?;
    }

    #[test]
    fn lattice_laws(seed in any::<u64>()) {
        laws(&latticez(), seed)?;
    }

    #[test]
    fn monopairs_laws(seed in any::<u64>()) {
        laws(&monopairsq(), seed)?;
    }

    #[test]
    fn finvect_is_abelian(seed in any::<u64>()) {
        let cat = finvectq();
        let (_, f) = sample(&cat, seed);
        let p = classify(&cat, &f);
        prop_assert!(p.strict);
        prop_assert_eq!(p.mono, p.is_kernel);
        prop_assert_eq!(p.epi, p.is_cokernel);
        // duality: the cokernel of f has the dimension of the kernel of fᵀ
        let ft = cat.morphism(f.cod.0, f.dom.0, f.matrix.transpose()).unwrap();
        prop_assert_eq!(cat.cokernel(&f).obj, cat.kernel(&ft).obj);
    }

    #[test]
    fn lattice_recognizers_match_minor_oracle(seed in any::<u64>()) {
        let cat = latticez();
        let (_, f) = sample(&cat, seed);
        let p = classify(&cat, &f);
        let (kernel, cokernel) = lattice_oracle(&f);
        prop_assert_eq!(p.is_kernel, kernel);
        prop_assert_eq!(p.is_cokernel, cokernel);
        prop_assert_eq!(p.mono, rank(&f.matrix.to_rational()) == f.dom.0);
        prop_assert_eq!(p.epi, rank(&f.matrix.to_rational()) == f.cod.0);
        if p.mono && f.dom.0 > 0 {
            prop_assert_eq!(cat.has_pure_image(&f), maximal_minor_gcd(&f.matrix).is_one());
        }
    }

    #[test]
    fn monopairs_recognizers_match_subspace_oracle(seed in any::<u64>()) {
        let cat = monopairsq();
        let (_, f) = sample(&cat, seed);
        let p = classify(&cat, &f);
        prop_assert_eq!(p.mono, ambient_injective(&f));
        prop_assert_eq!(p.epi, ambient_surjective(&f));
        let (kernel, cokernel) = pair_oracle(&f);
        prop_assert_eq!(p.is_kernel, kernel);
        prop_assert_eq!(p.is_cokernel, cokernel);
    }
}

#[test]
fn lattice_witness_profile() {
    let cat = latticez();
    let two = cat.mor(1, 1, &[2]);
    assert_eq!(lattice_oracle(&two), (false, false));
    let p = classify(&cat, &two);
    assert!(p.mono && p.epi && !p.iso && !p.strict);
}
