use detres_core::chern::multidegree;
use detres_core::matrix::rank;
use detres_core::poly::monomials_of_degree;
use detres_core::resultant::{
    build_sigma, critical_degree, geometric_vars, resultant_gcd, staircase_specialization,
    subsets, vanish_test, ConcreteMorphism, GenericMorphism, ResultantError, ResultantOptions,
};
use detres_core::{det_fraction_free, Matrix, Monomial, Polynomial, ProblemSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(m: usize, n: usize, r: usize, d: &[i64], k: &[i64]) -> ProblemSpec {
    ProblemSpec::new(m, n, r, d.to_vec(), k.to_vec())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Classical Sylvester matrix of `f` (degree d1) and `g` (degree d2) built
/// directly from the generic coefficient variables.
fn classical_sylvester(g: &GenericMorphism, d1: u32, d2: u32) -> Polynomial {
    let params = g.parameter_vars();
    let coeff = |col: usize, a: u32, b: u32| -> Polynomial {
        let idx = g
            .slots()
            .iter()
            .position(|s| s.row == 0 && s.col == col && s.monomial.exponents() == [a, b])
            .unwrap();
        Polynomial::var(params, idx)
    };
    let size = (d1 + d2) as usize;
    let mut rows = Vec::new();
    // columns indexed by the power of y in x^{size-1-c} y^c
    for shift in 0..d2 {
        let mut row = vec![Polynomial::zero(params); size];
        for t in 0..=d1 {
            row[(shift + t) as usize] = coeff(0, d1 - t, t);
        }
        rows.push(row);
    }
    for shift in 0..d1 {
        let mut row = vec![Polynomial::zero(params); size];
        for t in 0..=d2 {
            row[(shift + t) as usize] = coeff(1, d2 - t, t);
        }
        rows.push(row);
    }
    det_fraction_free(&Matrix::from_rows(rows).unwrap()).unwrap()
}

#[test]
fn sylvester_oracle() {
    for (d1, d2) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)] {
        let s = spec(2, 1, 0, &[d1 as i64, d2 as i64], &[0]);
        let g = GenericMorphism::new(&s).unwrap();
        let out = resultant_gcd(&s, ResultantOptions::default()).unwrap();
        assert!(out.is_confirmed());
        let classical = classical_sylvester(&g, d1, d2).normalized().0;
        assert_eq!(out.polynomial, classical, "d = ({}, {})", d1, d2);
        assert_eq!(out.degree_report, vec![d2, d1]);
    }
}

#[test]
fn sylvester_sigma_shapes() {
    let s = spec(2, 1, 0, &[1, 1], &[0]);
    let g = GenericMorphism::new(&s).unwrap();
    let sig = build_sigma(&s, 1, &g).unwrap();
    assert_eq!((sig.rows(), sig.cols()), (2, 2));
    let s = spec(2, 1, 0, &[1, 2], &[0]);
    let g = GenericMorphism::new(&s).unwrap();
    let sig = build_sigma(&s, 2, &g).unwrap();
    assert_eq!((sig.rows(), sig.cols()), (3, 3));
    let shifts: Vec<(Vec<usize>, u32)> = sig
        .col_basis
        .iter()
        .map(|c| (c.cols.clone(), c.shift.degree()))
        .collect();
    assert_eq!(shifts, vec![(vec![0], 1), (vec![0], 1), (vec![1], 0)]);
}

fn acceptance_like_specs() -> Vec<ProblemSpec> {
    vec![
        spec(2, 1, 0, &[1, 1], &[0]),
        spec(2, 1, 0, &[1, 2], &[0]),
        spec(2, 1, 0, &[2, 2], &[0]),
        spec(3, 2, 1, &[0, 0, 0], &[-1, -2]),
        spec(3, 2, 1, &[1, 1, 1], &[0, 0]),
        spec(3, 1, 0, &[1, 1, 1], &[0]),
        spec(2, 2, 0, &[1, 1], &[0, 0]),
    ]
}

#[test]
fn columns_reexpand_to_shifted_minors() {
    for s in acceptance_like_specs() {
        let g = GenericMorphism::new(&s).unwrap();
        let nu = critical_degree(&s).unwrap() as u32;
        let sig = build_sigma(&s, nu, &g).unwrap();
        let size = s.r + 1;
        assert_eq!(sig.rows(), monomials_of_degree(s.ambient_dim() + 1, nu).len());
        for (c, col) in sig.col_basis.iter().enumerate() {
            let sub = Matrix::from_fn(size, size, |a, b| g.entry(col.rows[a], col.cols[b]).clone());
            let delta = det_fraction_free(&sub).unwrap();
            let np = g.parameter_vars().len();
            let mut shift = vec![0u32; np];
            shift.extend_from_slice(col.shift.exponents());
            let expect = delta.mul_term(&Monomial::new(shift), &q(1));
            let got = sig.reexpand_column(c).unwrap();
            assert_eq!(got, expect, "{:?} column {}", s, c);
            for i in 0..sig.rows() {
                let e = sig.entries.get(i, c);
                if !e.is_zero() {
                    assert_eq!(e.total_degree(), Some(size as u32));
                }
            }
        }
    }
}

#[test]
fn resultants_divide_minors_and_match_multidegree() {
    for s in acceptance_like_specs() {
        let out = resultant_gcd(&s, ResultantOptions::default()).unwrap();
        assert!(out.is_confirmed(), "{:?}", s);
        let md: Vec<u32> = multidegree(&s)
            .unwrap()
            .degrees
            .iter()
            .map(|v| u32::try_from(v).unwrap())
            .collect();
        assert_eq!(out.degree_report, md, "{:?}", s);
        for minor in &out.minors {
            assert!(minor.determinant.div_exact(&out.polynomial).is_some());
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, vars: &detres_core::VarSet) -> Polynomial {
    let mut p = Polynomial::zero(vars);
    for m in monomials_of_degree(nvars, deg) {
        p = &p + &Polynomial::monomial(vars, m, q(rng.gen_range(-5..=5)));
    }
    p
}

fn random_morphism(rng: &mut ChaCha8Rng, s: &ProblemSpec) -> ConcreteMorphism {
    let geo = geometric_vars(s);
    let nx = geo.len();
    let entries = (0..s.n)
        .map(|j| (0..s.m).map(|i| random_form(rng, nx, s.entry_degree(j, i) as u32, &geo)).collect())
        .collect();
    ConcreteMorphism::new(s, entries).unwrap()
}

/// `φ = U·V + ℓ·B` where `U·V` has rank at most `r` everywhere and the
/// linear form `ℓ` vanishes at a chosen point, so `φ` has rank ≤ r there.
fn witness_morphism(rng: &mut ChaCha8Rng, s: &ProblemSpec) -> ConcreteMorphism {
    let geo = geometric_vars(s);
    let nx = geo.len();
    let point: Vec<i64> = (0..nx).map(|_| rng.gen_range(-3..=3)).collect();
    let point = if point.iter().all(|&v| v == 0) { vec![1; nx] } else { point };
    // ℓ = Σ c_v x_v with Σ c_v p_v = 0
    let pivot = point.iter().position(|&v| v != 0).unwrap();
    let mut ell = Polynomial::zero(&geo);
    let mut acc = 0i64;
    for v in 0..nx {
        if v != pivot {
            let c = rng.gen_range(-3..=3);
            acc += c * point[v];
            ell = &ell + &Polynomial::monomial(&geo, Monomial::var(nx, v), q(c));
        }
    }
    let cp = BigRational::new(BigInt::from(-acc), BigInt::from(point[pivot]));
    ell = &ell + &Polynomial::monomial(&geo, Monomial::var(nx, pivot), cp);
    if ell.is_zero() {
        ell = Polynomial::var(&geo, if pivot == 0 { 1 } else { 0 });
        ell = &ell.scale(&q(point[pivot])) - &Polynomial::var(&geo, pivot).scale(&q(point[if pivot == 0 { 1 } else { 0 }]));
    }
    let e = *s.k.iter().max().unwrap();
    let u: Vec<Vec<Polynomial>> = (0..s.n)
        .map(|j| (0..s.r).map(|_| random_form(rng, nx, (e - s.k[j]) as u32, &geo)).collect())
        .collect();
    let v: Vec<Vec<Polynomial>> = (0..s.r)
        .map(|_| (0..s.m).map(|i| random_form(rng, nx, (s.d[i] - e) as u32, &geo)).collect())
        .collect();
    let entries = (0..s.n)
        .map(|j| {
            (0..s.m)
                .map(|i| {
                    let mut low = Polynomial::zero(&geo);
                    for t in 0..s.r {
                        low = &low + &(&u[j][t] * &v[t][i]);
                    }
                    let b = random_form(rng, nx, (s.entry_degree(j, i) - 1) as u32, &geo);
                    &low + &(&ell * &b)
                })
                .collect()
        })
        .collect();
    ConcreteMorphism::new(s, entries).unwrap()
}

#[test]
fn rank_test_agrees_with_resultant_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for s in acceptance_like_specs() {
        let g = GenericMorphism::new(&s).unwrap();
        let res = resultant_gcd(&s, ResultantOptions::default()).unwrap().polynomial;
        for trial in 0..12 {
            let phi = if trial % 3 == 0 {
                witness_morphism(&mut rng, &s)
            } else {
                random_morphism(&mut rng, &s)
            };
            let report = vanish_test(&s, &phi, None).unwrap();
            let value = res.evaluate_dense(&g.parameter_values(&phi).unwrap());
            assert_eq!(report.vanishes, value.is_zero(), "{:?} trial {}", s, trial);
            if trial % 3 == 0 {
                assert!(report.vanishes, "witness must vanish: {:?}", s);
            }
        }
    }
}

#[test]
fn staircase_never_vanishes() {
    let cases = [
        spec(2, 1, 0, &[1, 1], &[0]),
        spec(2, 1, 0, &[3, 2], &[0]),
        spec(3, 2, 1, &[0, 0, 0], &[-1, -2]),
        spec(3, 2, 1, &[2, 3, 4], &[1, 0]),
        spec(4, 2, 1, &[1, 1, 1, 1], &[0, 0]),
        spec(4, 3, 2, &[2, 2, 2, 2], &[1, 0, 0]),
        spec(3, 1, 0, &[1, 2, 1], &[0]),
    ];
    for s in cases {
        let st = staircase_specialization(&s).unwrap();
        let band = s.m - s.n + 1;
        for j in 0..s.n {
            for i in 0..s.m {
                let on_band = i >= j && i - j < band;
                assert_eq!(!st.entry(j, i).is_zero(), on_band);
            }
        }
        let report = vanish_test(&s, &st, None).unwrap();
        assert!(!report.vanishes, "{:?}", s);
        assert_eq!(report.rank, report.rows);
    }
}

#[test]
fn s21_staircase_has_full_rank_five() {
    let s = spec(3, 2, 1, &[0, 0, 0], &[-1, -2]).normalized();
    let st = staircase_specialization(&s).unwrap();
    let sig = build_sigma(&s, 4, &st).unwrap();
    assert_eq!(sig.rows(), 5);
    assert_eq!(rank(&sig.evaluate(&[])), 5);
}

#[test]
fn critical_degree_formulas() {
    for m in 2..=5usize {
        for _ in 0..3 {
            let d: Vec<i64> = (0..m as i64).map(|i| 1 + (i * 7 + m as i64) % 4).collect();
            let s = ProblemSpec::new(m, 1, 0, d.clone(), vec![0]);
            assert_eq!(critical_degree(&s).unwrap(), d.iter().sum::<i64>() - m as i64 + 1);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    while checked < 50 {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(n..=n + 3);
        let r = rng.gen_range(0..n);
        let k: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let top = *k.iter().max().unwrap();
        let d: Vec<i64> = (0..m).map(|_| top + rng.gen_range(1..=4)).collect();
        let s = ProblemSpec::new(m, n, r, d, k);
        if !s.existence_check().exists {
            continue;
        }
        let nu = critical_degree(&s).unwrap();
        for l in -3..=3 {
            assert_eq!(critical_degree(&s.twisted(l)).unwrap(), nu);
        }
        checked += 1;
    }
}

#[test]
fn outputs_are_deterministic() {
    let s = spec(3, 2, 1, &[1, 1, 1], &[0, 0]);
    let a = resultant_gcd(&s, ResultantOptions::default()).unwrap();
    let b = resultant_gcd(&s, ResultantOptions::default()).unwrap();
    assert_eq!(a.polynomial, b.polynomial);
    assert_eq!(a.minors, b.minors);
    let g = GenericMorphism::new(&s).unwrap();
    let x = build_sigma(&s, 2, &g).unwrap();
    let y = build_sigma(&s, 2, &g).unwrap();
    assert_eq!(x.entries, y.entries);
    assert_eq!(x.col_basis, y.col_basis);
}

#[test]
fn larger_degree_still_gives_the_resultant() {
    let s = spec(2, 1, 0, &[1, 2], &[0]);
    let base = resultant_gcd(&s, ResultantOptions::default()).unwrap();
    let more = resultant_gcd(
        &s,
        ResultantOptions {
            degree: Some(4),
            minor_budget: 8,
        },
    )
    .unwrap();
    assert!(more.is_confirmed());
    assert_eq!(more.polynomial, base.polynomial);
}

#[test]
fn budget_of_one_can_leave_the_result_unconfirmed() {
    let s = spec(3, 2, 1, &[0, 0, 0], &[-1, -2]);
    let out = resultant_gcd(
        &s,
        ResultantOptions {
            degree: None,
            minor_budget: 1,
        },
    )
    .unwrap();
    assert_eq!(out.minors.len(), 1);
    assert!(!out.is_confirmed());
    assert_eq!(out.total_degree(), 10);
}

#[test]
fn invalid_inputs() {
    let s = spec(2, 1, 0, &[1, 1], &[0]);
    let geo = geometric_vars(&s);
    let x = Polynomial::var(&geo, 0);
    let bad = ConcreteMorphism::new(&s, vec![vec![x.clone(), &x * &x]]);
    assert!(matches!(bad, Err(ResultantError::BadEntry { row: 0, col: 1, .. })));
    let other = spec(2, 1, 0, &[1, 2], &[0]);
    let phi = ConcreteMorphism::new(&s, vec![vec![x.clone(), x.clone()]]).unwrap();
    assert_eq!(vanish_test(&other, &phi, None).unwrap_err(), ResultantError::SpecMismatch);
    let bad_spec = spec(2, 1, 0, &[1, 1], &[1]);
    assert!(matches!(critical_degree(&bad_spec), Err(ResultantError::Existence(_))));
    assert_eq!(
        resultant_gcd(&s, ResultantOptions { degree: None, minor_budget: 0 }).unwrap_err(),
        ResultantError::ZeroBudget
    );
}

#[test]
fn zero_entries_are_allowed() {
    let s = spec(3, 2, 1, &[1, 1, 1], &[0, 0]);
    let geo = geometric_vars(&s);
    let x = Polynomial::var(&geo, 0);
    let y = Polynomial::var(&geo, 1);
    let z = Polynomial::zero(&geo);
    // rows (x, y, 0) and (0, x, y): rank 2 everywhere on P^1
    let phi = ConcreteMorphism::new(&s, vec![vec![x.clone(), y.clone(), z.clone()], vec![z.clone(), x.clone(), y.clone()]]).unwrap();
    assert!(!vanish_test(&s, &phi, None).unwrap().vanishes);
    // rows (x, y, 0) and (y, 0, 0) drop rank at (1:0)
    let phi = ConcreteMorphism::new(&s, vec![vec![x, y.clone(), z.clone()], vec![y, z.clone(), z]]).unwrap();
    assert!(vanish_test(&s, &phi, None).unwrap().vanishes);
}

#[test]
fn subsets_count() {
    for n in 0..7 {
        for k in 0..=n {
            let expect = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
            assert_eq!(subsets(n, k).len(), expect);
        }
    }
}
