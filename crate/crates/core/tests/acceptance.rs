//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Statistics are recomputed here from their definitions rather than
//! through the library, so each criterion compares two independent routes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use motzkin_core::bijection::{involution_shape_path, phi1, phi2, phi3, phi3_inverse};
use motzkin_core::oracle::{distribution, path_distribution, StatSpec};
use motzkin_core::path::{enumerate_paths, MotzkinPath, Step};
use motzkin_core::perm::{enumerate_class, ClassId, HeadTailPairs, Permutation};
use motzkin_core::qpoly::{
    h_recursion_rhs, h_tableau, q_motzkin_sequence, q_motzkin_tilde_sequence, MultiPoly, Preset,
};
use motzkin_core::Exec;

type Outcome = Result<(), String>;

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn check(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, got: T) -> Outcome {
    check(expected == got, || format!("{what}: expected {expected:?}, got {got:?}"))
}

// Definitions, 1-based positions and values.
fn naive(sigma: &[usize]) -> [usize; 5] {
    let n = sigma.len();
    let s = |i: usize| sigma[i - 1];
    let (mut crs, mut nes, mut inv) = (0, 0, 0);
    for i in 1..=n {
        for j in i + 1..=n {
            if (j < s(i) && s(i) < s(j)) || (s(i) < s(j) && s(j) <= i) {
                crs += 1;
            }
            if (j < s(j) && s(j) < s(i)) || (s(j) < s(i) && s(i) <= i) {
                nes += 1;
            }
            if s(i) > s(j) {
                inv += 1;
            }
        }
    }
    let exc = (1..=n).filter(|&i| s(i) > i).count();
    let fp = (1..=n).filter(|&i| s(i) == i).count();
    [exc, fp, crs, nes, inv]
}

// (hor, up, down, sh_u, sh_h, sh_d, area) by walking the path.
fn naive_path(path: &MotzkinPath) -> [usize; 7] {
    let mut r = [0usize; 7];
    let (mut y, mut twice_area) = (0usize, 0usize);
    for &step in path.steps() {
        match step {
            Step::Hor => {
                r[0] += 1;
                r[4] += y;
                twice_area += 2 * y;
            }
            Step::Up => {
                r[1] += 1;
                r[3] += y;
                twice_area += 2 * y + 1;
                y += 1;
            }
            Step::Down => {
                r[2] += 1;
                r[5] += y;
                twice_area += 2 * y - 1;
                y -= 1;
            }
        }
    }
    r[6] = twice_area / 2;
    r
}

fn perm(word: &[usize]) -> Permutation {
    Permutation::new(word.to_vec()).unwrap()
}

fn path(word: &str) -> MotzkinPath {
    word.parse().unwrap()
}

const MOTZKIN: [usize; 10] = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835];
const WORKED: &str = "uuhuudddudduuhdd";

fn motzkin_counts() -> Outcome {
    for n in 0..=9 {
        eq(&format!("|M_{n}|"), MOTZKIN[n], enumerate_paths(n).count())?;
        for class in [ClassId::I4321, ClassId::I3412, ClassId::S321B3142] {
            eq(&format!("|{class}_{n}|"), MOTZKIN[n], enumerate_class(n, class).count())?;
        }
    }
    Ok(())
}

fn worked_examples() -> Outcome {
    let pi = [4, 6, 2, 9, 8, 1, 7, 3, 10, 5];
    let s = perm(&pi).statistics();
    eq("(exc,crs,nes,inv)", [5, 7, 4, 20], [s.exc, s.crs, s.nes, s.inv])?;
    let [exc, _, crs, nes, inv] = naive(&pi);
    eq("(exc,crs,nes,inv) by definition", [5, 7, 4, 20], [exc, crs, nes, inv])?;

    let p = path(WORKED);
    let st = p.statistics();
    eq("path statistics", [2, 7, 7, 8, 4, 15, 27], [st.hor, st.up, st.down, st.sh_u, st.sh_h, st.sh_d, st.area])?;
    eq("path statistics by walking", [2, 7, 7, 8, 4, 15, 27], naive_path(&p))?;
    eq("(h7,h14)", (3, 2), (p.step_height(7).unwrap(), p.step_height(14).unwrap()))?;

    eq("Φ1 cycles", "(1 6)(2 7)(3)(4 8)(5 10)(9 11)(12 15)(13 16)(14)".to_string(), phi1(&p).to_cycle_string())?;
    eq("Φ2 cycles", "(1 11)(2 8)(3)(4 7)(5 6)(9 10)(12 16)(13 15)(14)".to_string(), phi2(&p).to_cycle_string())?;

    let pairs = vec![(5, 1), (6, 3), (7, 6), (9, 8), (10, 10), (14, 12), (15, 14)];
    let sigma = perm(&[6, 1, 7, 2, 3, 8, 4, 10, 5, 11, 9, 15, 12, 16, 13, 14]);
    eq("strip decomposition", pairs.clone(), p.strip_decomposition().pairs().to_vec())?;
    eq("head/tail pairs", pairs.clone(), sigma.head_tail_pairs().pairs().to_vec())?;
    let set = HeadTailPairs::new(16, pairs).unwrap();
    eq("permutation from pairs", sigma.clone(), Permutation::from_head_tail(&set))?;
    eq("path from pairs", p.clone(), MotzkinPath::from_head_tail(&set).unwrap())?;
    eq("Φ3", sigma, phi3(&p))
}

fn involution_distributions() -> Outcome {
    let m = q_motzkin_sequence(10);
    for n in 0..=10 {
        let expect = m[n].to_multi(MultiPoly::Q, "q");
        eq(
            &format!("I4321 crs+nes, n = {n}"),
            &expect,
            &distribution(ClassId::I4321, n, StatSpec::CrsPlusNes).unwrap(),
        )?;
        eq(&format!("I3412 nes, n = {n}"), &expect, &distribution(ClassId::I3412, n, StatSpec::Nes).unwrap())?;
    }
    Ok(())
}

fn s321_crossings() -> Outcome {
    let tilde = q_motzkin_tilde_sequence(9);
    let h = h_tableau(9);
    for n in 0..=9 {
        eq(&format!("M̃_{n} vs H({n},0)"), &tilde[n], &h.get(n, 0))?;
        // Straight scan of S_n with the class test and the definitional crs.
        let mut counts = vec![0u64; n * n + 1];
        for sigma in enumerate_class(n, ClassId::All).filter(|s| ClassId::S321B3142.contains(s)) {
            counts[naive(sigma.word())[2]] += 1;
        }
        let scanned: Vec<u64> =
            counts.into_iter().rev().skip_while(|&c| c == 0).collect::<Vec<_>>().into_iter().rev().collect();
        let from_poly: Vec<u64> = tilde[n].coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect();
        eq(&format!("S321B3142 crs, n = {n}"), from_poly, scanned)?;
    }
    Ok(())
}

fn q_tableau_values() -> Outcome {
    let table: [&[&str]; 5] = [
        &["1"],
        &["1", "1"],
        &["2", "1 + q", "q"],
        &["3 + q", "2 + 2*q + q^2", "q + q^2 + q^3", "q^3"],
        &[
            "5 + 3*q + q^2",
            "3 + 4*q + 3*q^2 + 2*q^3",
            "2*q + 2*q^2 + 3*q^3 + q^4 + q^5",
            "q^3 + q^4 + q^5 + q^6",
            "q^6",
        ],
    ];
    let h = h_tableau(4);
    let mut entries = 0;
    for (n, row) in table.iter().enumerate() {
        for (i, want) in row.iter().enumerate() {
            eq(&format!("H({n},{i})"), want.to_string(), h.get(n, i).to_string())?;
            entries += 1;
        }
    }
    eq("entries compared", 15, entries)
}

fn tableau_recursion() -> Outcome {
    let h = h_tableau(25);
    for n in 1..=25 {
        for i in 1..=n {
            eq(&format!("H({n},{i})"), h.get(n, i), h_recursion_rhs(n, i, &h).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

fn main12_identity() -> Outcome {
    let lhs = Preset::Main12Lhs.series(40);
    let rhs = Preset::Main12Rhs.series(40);
    eq("order", 40, lhs.order())?;
    for n in 0..=40 {
        eq(&format!("coefficient of t^{n}"), rhs.coeff(n), lhs.coeff(n))?;
    }
    Ok(())
}

fn area_identities() -> Outcome {
    let mut seen = 0usize;
    for n in 0..=12 {
        for p in enumerate_paths(n) {
            let [hor, up, down, sh_u, sh_h, sh_d, area] = naive_path(&p);
            let s = p.statistics();
            eq(
                "statistics",
                [hor, up, down, sh_u, sh_h, sh_d, area],
                [s.hor, s.up, s.down, s.sh_u, s.sh_h, s.sh_d, s.area],
            )?;
            check(area + down == 2 * sh_d + sh_h, || format!("{p}: area vs 2·sh_d + sh_h − down"))?;
            check(area == 2 * sh_u + sh_h + up, || format!("{p}: area vs 2·sh_u + sh_h + up"))?;
            check(sh_u + down == sh_d, || format!("{p}: sh_u vs sh_d − down"))?;
            seen += 1;
        }
    }
    eq("paths checked", 24_871, seen)
}

fn statistic_transport() -> Outcome {
    for n in 0..=10 {
        for p in enumerate_paths(n) {
            let [hor, up, _, sh_u, sh_h, _, area] = naive_path(&p);
            let s1 = phi1(&p);
            let [exc, fp, crs, nes, _] = naive(s1.word());
            eq(&format!("Φ1({p})"), [hor, up, 2 * sh_u, sh_h], [fp, exc, crs, nes])?;
            let s2 = phi2(&p);
            let [exc, fp, crs, nes, _] = naive(s2.word());
            eq(&format!("Φ2({p})"), [hor, up, 0, 2 * sh_u + sh_h], [fp, exc, crs, nes])?;
            let s3 = phi3(&p);
            let [exc, _, crs, _, inv] = naive(s3.word());
            eq(&format!("Φ3({p})"), [up, sh_u + sh_h, area - sh_u], [exc, crs, inv])?;

            check(ClassId::I4321.contains(&s1), || format!("Φ1({p}) = {s1} outside I4321"))?;
            check(ClassId::I3412.contains(&s2), || format!("Φ2({p}) = {s2} outside I3412"))?;
            eq("Φ1 round trip", &p, &involution_shape_path(&s1).map_err(|e| e.to_string())?)?;
            eq("Φ2 round trip", &p, &involution_shape_path(&s2).map_err(|e| e.to_string())?)?;
            eq("Φ3 round trip", &p, &phi3_inverse(&s3).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

fn inversion_identity() -> Outcome {
    let mut seen = 0;
    for n in 0..=8 {
        for sigma in enumerate_class(n, ClassId::All) {
            let [exc, _, crs, nes, inv] = naive(sigma.word());
            check(inv == exc + crs + 2 * nes, || {
                format!("{sigma}: inv = {inv}, exc + crs + 2nes = {}", exc + crs + 2 * nes)
            })?;
            let s = sigma.statistics();
            eq(&format!("{sigma}"), [exc, crs, nes, inv], [s.exc, s.crs, s.nes, s.inv])?;
            seen += 1;
        }
    }
    eq("permutations checked", 46_234, seen)
}

fn joint_fractions() -> Outcome {
    let cases = [
        (Preset::I4321Joint, ClassId::I4321, StatSpec::JointFpExcCrsNes),
        (Preset::I3412Joint, ClassId::I3412, StatSpec::JointFpExcCrsNes),
        (Preset::S321ExcCrs, ClassId::S321B3142, StatSpec::JointExcCrs),
    ];
    for (preset, class, spec) in cases {
        let series = preset.series(9);
        for n in 0..=9 {
            let got = distribution(class, n, spec).map_err(|e| e.to_string())?;
            eq(&format!("{preset} vs {class}, n = {n}"), series.coeff(n), &got)?;
        }
    }
    Ok(())
}

fn path_fraction() -> Outcome {
    let series = Preset::IAbcd.series(10);
    for n in 0..=10 {
        let sum = path_distribution(n, MultiPoly::ABCD, Exec::Sequential, |p| {
            let [hor, up, _, sh_u, sh_h, _, _] = naive_path(p);
            vec![hor as u32, up as u32, sh_u as u32, sh_h as u32]
        });
        eq(&format!("I(a,b,c,d), n = {n}"), series.coeff(n), &sum)?;
    }
    Ok(())
}

const CRITERIA: [Criterion; 12] = [
    Criterion { name: "motzkin-counts", limit: Duration::from_secs(60), run: motzkin_counts },
    Criterion { name: "worked-examples", limit: Duration::from_secs(60), run: worked_examples },
    Criterion { name: "involution-distributions", limit: Duration::from_secs(120), run: involution_distributions },
    Criterion { name: "s321-crossings", limit: Duration::from_secs(180), run: s321_crossings },
    Criterion { name: "q-tableau-values", limit: Duration::from_secs(60), run: q_tableau_values },
    Criterion { name: "tableau-recursion", limit: Duration::from_secs(30), run: tableau_recursion },
    Criterion { name: "main12-identity", limit: Duration::from_secs(30), run: main12_identity },
    Criterion { name: "area-identities", limit: Duration::from_secs(60), run: area_identities },
    Criterion { name: "statistic-transport", limit: Duration::from_secs(600), run: statistic_transport },
    Criterion { name: "inversion-identity", limit: Duration::from_secs(600), run: inversion_identity },
    Criterion { name: "joint-fractions", limit: Duration::from_secs(600), run: joint_fractions },
    Criterion { name: "path-fraction", limit: Duration::from_secs(600), run: path_fraction },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (k, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(|()| check(elapsed <= c.limit, || format!("took {elapsed:.1?}, limit {:?}", c.limit)));
        match outcome {
            Ok(()) => println!("PASS [{:>2}] {} ({} ms)", k + 1, c.name, elapsed.as_millis()),
            Err(why) => {
                failures += 1;
                println!("FAIL [{:>2}] {} ({} ms): {why}", k + 1, c.name, elapsed.as_millis());
            }
        }
    }
    println!("{}/{} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
