//! Acceptance gate: the ten exit criteria, exercised end to end with exact
//! comparisons (tolerance zero throughout) and one pass/fail line printed
//! per criterion.

use std::time::Instant;

use num_traits::Signed;

use adler19::chars::{self, CharacterTable};
use adler19::cyclo::{self, rat, Cyclotomic, Rational};
use adler19::jacobian::{self, SmoothStatus};
use adler19::linalg::{self, Matrix};
use adler19::periods::{self, PeriodVector};
use adler19::psl2::{self, Gen, GroupTag};
use adler19_cli::RunContext;

struct Gate {
    ctx: RunContext,
    failures: Vec<String>,
}

impl Gate {
    fn criterion(&mut self, number: u32, name: &str, f: impl FnOnce(&RunContext) -> Result<String, String>) {
        let start = Instant::now();
        match f(&self.ctx) {
            Ok(detail) => {
                println!(
                    "criterion {number:2} [{name}]: PASS ({:?}) {detail}",
                    start.elapsed()
                );
            }
            Err(why) => {
                println!("criterion {number:2} [{name}]: FAIL ({:?}) {why}", start.elapsed());
                self.failures.push(format!("criterion {number} [{name}]: {why}"));
            }
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate { ctx: RunContext::default(), failures: Vec::new() };

    gate.criterion(1, "group enumeration", |ctx| {
        expect("|G|", ctx.conj_g().len(), 3420)?;
        expect("G classes", ctx.conj_g().num_classes(), 12)?;
        expect("|H|", ctx.conj_h().len(), 171)?;
        expect("H classes", ctx.conj_h().num_classes(), 11)?;
        Ok("orders 3420/171, classes 12/11".into())
    });

    gate.criterion(2, "certified representation", |ctx| {
        let rep = ctx.rep(); // built and fully edge-certified
        if !rep.is_certified() {
            return Err("representation failed certification".into());
        }
        let m = rep.generator_matrix(Gen::Mu);
        if m.mul(&m) != Matrix::<Cyclotomic>::identity(9) {
            return Err("mu^2 != 1".into());
        }
        let traces = rep.trace_character().map_err(|e| e.to_string())?;
        let table = ctx.table_g();
        expect("trace character", &traces, &table.row("W9").values)?;
        Ok(format!("3*3420 edges consistent, mu variant {:?}", rep.mu_variant()))
    });

    gate.criterion(3, "pencil invariance", |ctx| {
        let rep = ctx.rep();
        let f = jacobian::pencil(&rat(-2, 1));
        for gen in [Gen::Tau, Gen::Sigma, Gen::Mu] {
            let g = rep.generator_matrix(gen);
            if jacobian::invariance_scalar(&g, &f).map_err(|e| e.to_string())?.is_none() {
                return Err(format!("{gen} does not fix the invariant member projectively"));
            }
        }
        let f0 = jacobian::pencil(&rat(0, 1));
        let mu = rep.generator_matrix(Gen::Mu);
        if jacobian::invariance_scalar(&mu, &f0).map_err(|e| e.to_string())?.is_some() {
            return Err("mu unexpectedly fixes the lambda = 0 member".into());
        }
        Ok("tau/sigma/mu fix f(-2); mu breaks f(0)".into())
    });

    gate.criterion(4, "symmetric-cube chain", |ctx| {
        let t = ctx.table_g();
        let nu = cyclo::gauss_nu();
        let int = Cyclotomic::from_int;
        let sym3 = t.sym3(t.row("W9")).map_err(|e| e.to_string())?;
        let want = vec![
            int(165),
            int(3).sub(&nu),
            int(3).sub(&nu.conj()),
            int(0),
            int(0),
            int(3),
            int(0),
            int(0),
            int(0),
            int(0),
            int(0),
            int(5),
        ];
        expect("sym3 trace vector", &sym3.values, &want)?;
        let d = t.decompose(&sym3).map_err(|e| e.to_string())?;
        expect(
            "sym3 decomposition",
            t.format_decomposition(&d),
            "T1 + W9bar + W18_1 + W18_3 + W20_1 + W20_2 + 2*W20_3 + W20_4 + W19".to_string(),
        )?;
        let f = jacobian::pencil(&rat(-2, 1));
        let ch = jacobian::character_on_r3(&f, ctx.conj_g(), ctx.rep())
            .map_err(|e| e.to_string())?;
        let di2 = t.decompose(&ch.i2).map_err(|e| e.to_string())?;
        expect("I_2 representation", t.format_decomposition(&di2), "W9bar".to_string())?;
        let i3 = t.tensor(t.row("W9"), t.row("W9bar")).map_err(|e| e.to_string())?;
        let di3 = t.decompose(&i3).map_err(|e| e.to_string())?;
        expect(
            "I_3 decomposition",
            t.format_decomposition(&di3),
            "T1 + W20_1 + W20_2 + W20_3 + W20_4".to_string(),
        )?;
        let dr3 = t.decompose(&ch.r3).map_err(|e| e.to_string())?;
        expect(
            "middle cohomology dual",
            t.format_decomposition(&dr3),
            "W9bar + W18_1 + W18_3 + W20_3 + W19".to_string(),
        )?;
        Ok("trace vector, multiplicities, and both ideal pieces as claimed".into())
    });

    gate.criterion(5, "Hodge numbers by exact rank", |_| {
        let f = jacobian::pencil(&rat(-2, 1));
        let h: Vec<usize> = (0..=3).map(|q| jacobian::hodge_number(&f, q)).collect();
        expect("(h70, h61, h52, h43)", h, vec![0, 0, 1, 84])?;
        Ok("(0, 0, 1, 84)".into())
    });

    gate.criterion(6, "branching and the pencil representation", |ctx| {
        let tg = ctx.table_g();
        let th = ctx.table_h();
        for (name, want) in [
            ("W18_3", "V9 + V9bar"),
            ("W19", "V0 + V9 + V9bar"),
            ("W20_3", "V3 + V6 + V9 + V9bar"),
        ] {
            let r = chars::restrict_to_h(tg, th, tg.row(name)).map_err(|e| e.to_string())?;
            let d = th.decompose(&r).map_err(|e| e.to_string())?;
            expect(&format!("restriction of {name}"), th.format_decomposition(&d), want.to_string())?;
        }
        for lam in [rat(0, 1), rat(-2, 1), rat(1, 1), rat(7, 1)] {
            let f = jacobian::pencil(&lam);
            let ch = jacobian::character_on_r3(&f, ctx.conj_h(), ctx.rep())
                .map_err(|e| e.to_string())?;
            let d = th.decompose(&ch.r3).map_err(|e| e.to_string())?;
            expect(
                &format!("H-representation on R_3 at {lam}"),
                th.format_decomposition(&d),
                "V0 + V3 + V6 + 4*V9 + 5*V9bar".to_string(),
            )?;
        }
        Ok("three branchings plus four pencil members".into())
    });

    gate.criterion(7, "lattice tower", |ctx| {
        // module identities behind the bottom lattice
        let lhs = periods::v_vector(0).scale(&cyclo::gauss_nu());
        let rhs = cyclo::residue_exponents()
            .iter()
            .fold(PeriodVector::zero(), |acc, &k| acc.add(&periods::v_vector(i64::from(k))));
        expect("nu v_0 as residue translate sum", lhs == rhs, true)?;
        let nu = cyclo::gauss_nu();
        let c = |a: i64, b: i64| Cyclotomic::from_int(a).add(&nu.scale(&rat(b, 1)));
        let coeffs =
            [c(1, 0), c(1, 1), c(-2, 0), c(1, -1), c(3, 1), c(-2, 1), c(-2, -1), c(2, 0), c(0, 1)];
        let mut acc = PeriodVector::zero();
        for (k, cf) in coeffs.iter().enumerate() {
            acc = acc.add(&periods::v_vector(k as i64).scale(cf));
        }
        expect("v_9 module expansion", periods::v_vector(9) == acc, true)?;
        expect("Lambda_0 = R_0", *ctx.lambda0() == periods::lattice_v_span(), true)?;
        let l8 = periods::lattice_lambda8();
        expect("Lambda_8 dual cross-check", l8 == periods::lattice_lambda8_dual(), true)?;
        let idx = l8.index_over(ctx.lambda0()).ok_or("Lambda_0 not inside Lambda_8")?;
        expect("[Lambda_8 : Lambda_0]", idx, adler19::Integer::from(19u64).pow(8))?;
        expect("tau-hat Jordan block", ctx.flag().tau_hat_w == periods::jordan_block_19(), true)?;
        let tau = ctx.rep().generator_matrix(Gen::Tau);
        for j in 0..=8 {
            expect(&format!("tau-stability of level {j}"), ctx.lattice(j).stable_under(&tau), true)?;
        }
        Ok("identities, dual description, index 19^8, Jordan form, stability".into())
    });

    gate.criterion(8, "principal polarization", |ctx| {
        for j in 0..=8i32 {
            let pf = periods::gram_pfaffian(&ctx.lattice(j as usize), &rat(1, 1))
                .map_err(|e| e.to_string())?;
            let want = if j <= 4 {
                rat(19i64.pow((8 - 2 * j) as u32), 1)
            } else {
                rat(1, 19i64.pow((2 * j - 8) as u32))
            };
            expect(&format!("P_{j}^2"), &pf * &pf, want)?;
            let integral = periods::gram_is_integral(&ctx.lattice(j as usize), &rat(1, 1))
                .map_err(|e| e.to_string())?;
            expect(&format!("integrality at level {j}"), integral, j <= 4)?;
        }
        let l4 = ctx.lattice(4);
        expect(
            "Pfaffian at the principal lattice",
            periods::gram_pfaffian(&l4, &rat(1, 1)).map_err(|e| e.to_string())?,
            rat(1, 1),
        )?;
        for a in 2..=3i64 {
            expect(
                &format!("Pfaffian at scale {a}"),
                periods::gram_pfaffian(&l4, &rat(a, 1)).map_err(|e| e.to_string())?,
                rat(a.pow(9), 1),
            )?;
        }
        expect("explicit generator basis", l4 == periods::explicit_principal_lattice(), true)?;
        for gen in [Gen::Tau, Gen::Sigma, Gen::Mu] {
            expect(
                &format!("stability under {gen}"),
                l4.stable_under(&ctx.rep().generator_matrix(gen)),
                true,
            )?;
        }
        Ok("Pfaffian table, unique principal level, explicit basis, full stability".into())
    });

    gate.criterion(9, "smoothness certificates", |_| {
        for lam in [rat(-2, 1), rat(0, 1)] {
            let f = jacobian::pencil(&lam);
            let status = jacobian::smooth_certificate_mod_p(&f, 101).map_err(|e| e.to_string())?;
            expect(&format!("member at {lam} mod 101"), status, SmoothStatus::CertifiedSmooth)?;
        }
        Ok("both distinguished members certified smooth mod 101".into())
    });

    gate.criterion(10, "property suites", |ctx| {
        expect("G table row orthonormality", chars::rows_orthonormal(ctx.table_g()), true)?;
        expect("G table column orthogonality", chars::columns_orthogonal(ctx.table_g()), true)?;
        expect("H table row orthonormality", chars::rows_orthonormal(ctx.table_h()), true)?;
        expect("H table column orthogonality", chars::columns_orthogonal(ctx.table_h()), true)?;

        // deterministic pseudo-random sweeps
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        // Pfaffian^2 = det on random antisymmetric matrices
        for trial in 0..20 {
            let n = 6;
            let mut m = Matrix::<Rational>::zero(n, n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = rat((next() % 13) as i64 - 6, 1);
                    m.set(i, j, v.clone());
                    m.set(j, i, -v);
                }
            }
            let pf = linalg::pfaffian(&m).map_err(|e| e.to_string())?;
            expect(&format!("pf^2 = det, trial {trial}"), &pf * &pf, linalg::det(&m))?;
        }
        // HNF determinant preservation on random square integer matrices
        for trial in 0..20 {
            let m = Matrix::from_fn(5, 5, |_, _| {
                adler19::Integer::from((next() % 15) as i64 - 7)
            });
            let h = linalg::hnf(&m);
            expect(
                &format!("HNF |det|, trial {trial}"),
                linalg::det(&h.h).abs(),
                linalg::det(&m).abs(),
            )?;
            expect(
                &format!("transform unimodular, trial {trial}"),
                linalg::det(&h.u).abs(),
                adler19::Integer::from(1),
            )?;
        }
        // field axioms on random cyclotomics
        let orders = [5u32, 9, 12, 19, 20];
        for trial in 0..30 {
            let n = orders[(next() % orders.len() as u64) as usize];
            let sample = |next: &mut dyn FnMut() -> u64| {
                let terms: Vec<(i64, Rational)> = (0..(next() % 4 + 1))
                    .map(|_| {
                        (
                            (next() % u64::from(n)) as i64,
                            rat((next() % 11) as i64 - 5, (next() % 5 + 1) as i64),
                        )
                    })
                    .collect();
                Cyclotomic::from_terms(n, terms)
            };
            let (a, b, cc) = (sample(&mut next), sample(&mut next), sample(&mut next));
            expect(
                &format!("associativity, trial {trial}"),
                a.mul(&b).mul(&cc) == a.mul(&b.mul(&cc)),
                true,
            )?;
            expect(
                &format!("distributivity, trial {trial}"),
                a.mul(&b.add(&cc)) == a.mul(&b).add(&a.mul(&cc)),
                true,
            )?;
            if !a.is_zero() {
                expect(
                    &format!("inverse, trial {trial}"),
                    a.mul(&a.inverse().unwrap()) == Cyclotomic::one(),
                    true,
                )?;
            }
        }
        Ok("orthogonality, Pfaffian/determinant, normal forms, field axioms: 100%".into())
    });

    // sanity anchors used by the criteria above
    assert_eq!(psl2::tau_element().order(), 19);
    assert_eq!(GroupTag::G.to_string(), "PSL(2,19)");
    assert_eq!(CharacterTable::table_g(gate.ctx.conj_g().clone()).rows.len(), 12);

    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
