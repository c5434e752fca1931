//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Lines listed in `KNOWN_FAILURES` are claims that do not hold for the exact
//! objects; they are evaluated faithfully and reported as FAIL.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use s3ca::cocycle::{cocycle, nontriviality_witness};
use s3ca::generate::certify_generation;
use s3ca::spinor::{expand, inner_normint, phi, phi_basis, phi_basis_s3, BasisIndex, Sign, Spinor};
use s3ca::suites::{run_suite, Report, Status, SuiteParams};
use s3ca::{LaurentPoly, Monomial, Scalar};
use s3ca_cli::oracle::{agrees, normint_quadrature};

const KNOWN_FAILURES: [&str; 3] = ["3c", "10c", "12"];

struct Ledger {
    lines: Vec<(String, bool, String)>,
}

impl Ledger {
    fn record(&mut self, id: &str, ok: bool, what: impl Into<String>) {
        let what = what.into();
        println!("{} {id}: {what}", if ok { "PASS" } else { "FAIL" });
        self.lines.push((id.to_string(), ok, what));
    }

    fn failed(&self) -> BTreeSet<String> {
        self.lines.iter().filter(|l| !l.1).map(|l| l.0.clone()).collect()
    }
}

fn all_pass(r: &Report, prefix: &str) -> bool {
    let hits = r.find(prefix);
    !hits.is_empty() && hits.iter().all(|c| c.status == Status::Pass)
}

fn params(n: usize, degree: u32, samples: usize) -> SuiteParams {
    SuiteParams {
        n,
        degree,
        samples,
        seed: 1,
    }
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s < {}s", t.as_secs_f64(), limit.as_secs()))
}

fn criterion_1(l: &mut Ledger) {
    let start = Instant::now();
    let (k, ks) = (Spinor::kappa(), Spinor::kappa_star());
    let c0 = cocycle(0, &k, &ks).unwrap();
    let c1 = cocycle(1, &k, &ks).unwrap();
    let c2 = cocycle(2, &k, &ks).unwrap();
    let r2 = Scalar::sqrt_int(2).inv().unwrap();
    let v = cocycle(1, &phi(Sign::Plus, 1, 1, 2).scale(&r2), &phi(Sign::Plus, 1, 0, 2)).unwrap();
    let values = c0 == Scalar::from_int(-1) && c1.is_zero() && c2.is_zero() && v == -r2;
    let (fast, t) = within(start, Duration::from_secs(1));
    l.record("1", values && fast, format!("cocycle anchors c0={c0} c1={c1} c2={c2} c1(phi1,phi3)={v}; {t}"));
}

fn criterion_2(l: &mut Ledger) {
    let lhs = Spinor::kappa().theta_op(0).mul(&Spinor::kappa_star());
    let want = Spinor::unit().scale(&Scalar::frac(-1, 2));
    l.record("2", lhs.eq_on_s3(&want), format!("(Theta0 kappa) kappa* = {}", lhs.restrict_s3()));
}

fn criterion_3(l: &mut Ledger) {
    let start = Instant::now();
    let r = run_suite("cocycle", &params(2, 3, 200)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(60));
    let line = |name: &str| r.find(name).first().map(|c| format!("{} {}", c.lhs, c.rhs)).unwrap_or_default();
    l.record("3a", all_pass(&r, "antisymmetry") && fast, format!("antisymmetry, {}; {t}", line("antisymmetry")));
    l.record("3b", all_pass(&r, "cyclic identity") && fast, format!("cyclic identity, {}", line("cyclic identity")));
    l.record(
        "3c",
        r.find("n0-compatibility").iter().all(|c| c.status == Status::Pass),
        format!("n0-compatibility, {}", line("n0-compatibility")),
    );
}

fn criterion_4(l: &mut Ledger) {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 0..3 {
        let w = nontriviality_witness(k).unwrap();
        ok &= w.bracket_vanishes && !w.value.is_zero();
        parts.push(format!("k={k}: c={} bracket 0={}", w.value, w.bracket_vanishes));
    }
    l.record("4", ok, format!("non-triviality witnesses {}", parts.join("; ")));
}

fn criterion_5(l: &mut Ledger) {
    let start = Instant::now();
    let mut count = 0;
    let mut ok = true;
    for m in 0..=4u32 {
        for sign in [Sign::Plus, Sign::Minus] {
            let level = BasisIndex::level(sign, m);
            ok &= level.len() == ((m + 1) * (m + 2)) as usize;
            for idx in level {
                count += 1;
                let p = phi_basis(&idx);
                let eig = idx.eigenvalue();
                ok &= p.tangential_dirac().eq_on_s3(&p.scale(&eig));
                ok &= p.dirac().is_zero();
                let half = match sign {
                    Sign::Plus => Scalar::frac(m as i64, 2),
                    Sign::Minus => Scalar::frac(-(m as i64 + 3), 2),
                };
                ok &= eig == half;
                ok &= p.n0() == p.scale(&half);
            }
        }
    }
    let (fast, t) = within(start, Duration::from_secs(120));
    l.record("5", ok && fast, format!("eigenvalue theorem on {count} basis spinors (m <= 4); {t}"));
}

fn criterion_6(l: &mut Ledger) {
    let idx = BasisIndex::up_to(3);
    let mut bad = 0;
    for a in &idx {
        for b in &idx {
            let v = inner_normint(&phi_basis_s3(a), &phi_basis_s3(b));
            if (a == b && !v.is_one()) || (a != b && !v.is_zero()) {
                bad += 1;
            }
        }
    }
    l.record("6", bad == 0, format!("orthonormality on {} pairs (m <= 3), {bad} failures", idx.len() * idx.len()));
}

fn criterion_7(l: &mut Ledger) {
    let idx = BasisIndex::up_to(3);
    let mut pairs = 0;
    let mut bad = 0;
    for a in &idx {
        for b in &idx {
            if a.m + b.m > 3 {
                continue;
            }
            pairs += 1;
            let p = phi_basis_s3(a).mul(&phi_basis_s3(b)).restrict_s3();
            match expand(&p, None) {
                Ok(x) if x.to_spinor_s3().eq_on_s3(&p) => {}
                _ => bad += 1,
            }
        }
    }
    l.record("7a", bad == 0, format!("product expansions with m_i + m_j <= 3: {pairs} pairs, {bad} failures"));
    let g = certify_generation(2, 6);
    l.record(
        "7b",
        g.complete(),
        format!("I, J, kappa, lambda generate levels m <= 2 with products of length <= 6, dims {:?}", g.dims),
    );
}

fn criterion_8(l: &mut Ledger) {
    let start = Instant::now();
    let r = run_suite("jacobi", &params(2, 2, 100)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(600));
    l.record("8a", all_pass(&r, "jacobi") && all_pass(&r, "antisymmetry") && fast, format!("Jacobi on 100 random triples (n=2, degree <= 2); {t}"));
    l.record("8b", all_pass(&r, "sigma-equivariance"), "sigma-equivariance on 100 random pairs");
}

fn criterion_9(l: &mut Ledger) {
    let r = run_suite("grading", &params(3, 2, 100)).unwrap();
    let spaces = r.find("root space").len();
    l.record("9a", all_pass(&r, "weight_of"), format!("weight_of on root-space bases for |m| <= 3 ({spaces} spaces, n=3)"));
    l.record("9b", all_pass(&r, "bracket grading"), "bracket grading on 100 sampled pairs");
}

fn criterion_10(l: &mut Ledger) {
    let r = run_suite("chevalley", &params(3, 2, 1)).unwrap();
    let classical = ["[x1,", "[x2,", "[h1,x1", "[h1,x2", "[h2,", "[h1,y", "[h1,h", "[h1,n", "[h1,a", "[n,a"];
    let ok = classical.iter().all(|p| all_pass(&r, p));
    l.record("10a", ok, "relations among h_i, x_i, y_i, n and a_k (n=3)");
    l.record("10b", all_pass(&r, "[xJ,yJ] = htheta"), "[xJ, yJ] = htheta");
    let mixed: Vec<_> = r
        .checks
        .iter()
        .filter(|c| {
            ["J", "kappa", "lambda"].iter().any(|pi| {
                c.name.starts_with(&format!("[x{pi},y")) && !c.name.starts_with(&format!("[x{pi},y{pi}"))
                    || c.name.starts_with(&format!("[y{pi},x"))
            })
        })
        .collect();
    let bad: Vec<String> = mixed.iter().filter(|c| c.status != Status::Pass).map(|c| c.name.clone()).collect();
    l.record("10c", bad.is_empty(), format!("[x_pi, y_i] = [y_pi, x_i] = 0; failing: {bad:?}"));
    let again = run_suite("chevalley", &params(3, 2, 1)).unwrap();
    let mut stable = true;
    let mut verdicts = Vec::new();
    for pi in ["kappa", "lambda"] {
        let prefix = format!("[x{pi},y{pi}]");
        let a = r.find(&prefix);
        let b = again.find(&prefix);
        stable &= !a.is_empty() && a.len() == b.len();
        for (x, y) in a.iter().zip(&b) {
            stable &= x.status == y.status && x.lhs == y.lhs && x.status != Status::Fail;
        }
        verdicts.extend(a.iter().map(|c| format!("{}: {:?}", c.name, c.status)));
    }
    l.record("10d", stable, format!("dressed brackets reproducible with stable verdicts: {}", verdicts.join("; ")));
}

fn criterion_11(l: &mut Ledger) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = Vec::new();
    for i in 0..20 {
        // every other monomial is balanced so its integral is nonzero
        let m = if i % 2 == 0 {
            let a = rng.gen_range(0..=4u32);
            let c = rng.gen_range(0..=(4 - a));
            Monomial::new(a, a, c, c, 0)
        } else {
            let mut e = [0u32; 4];
            let total = rng.gen_range(0..=8u32);
            for _ in 0..total {
                e[rng.gen_range(0..4)] += 1;
            }
            Monomial::new(e[0], e[1], e[2], e[3], 0)
        };
        let p = LaurentPoly::monomial(m, Scalar::one());
        let exact = p.restrict_s3().normint();
        let num = normint_quadrature(&p);
        if !agrees(num, exact.to_f64_pair()) {
            bad.push(format!("{p}: exact {exact}, numeric {num}"));
        }
    }
    l.record("11", bad.is_empty(), format!("normint vs quadrature on 20 monomials of degree <= 8; mismatches {bad:?}"));
}

fn criterion_12(l: &mut Ledger) {
    let (code, out) = s3ca_cli::run(&["s3ca", "examples"]);
    let fails: Vec<&str> = out.lines().filter(|s| s.starts_with("FAIL")).collect();
    let summary = out.lines().last().unwrap_or_default();
    l.record("12", code == 0 && fails.is_empty(), format!("examples verb: {summary}; failing {fails:?}"));
}

fn main() {
    let mut l = Ledger { lines: Vec::new() };
    criterion_1(&mut l);
    criterion_2(&mut l);
    criterion_3(&mut l);
    criterion_4(&mut l);
    criterion_5(&mut l);
    criterion_6(&mut l);
    criterion_7(&mut l);
    criterion_8(&mut l);
    criterion_9(&mut l);
    criterion_10(&mut l);
    criterion_11(&mut l);
    criterion_12(&mut l);
    let known: BTreeSet<String> = KNOWN_FAILURES.iter().map(|s| s.to_string()).collect();
    let failed = l.failed();
    if failed != known {
        eprintln!("failing criteria {failed:?} differ from the documented set {known:?}");
        std::process::exit(1);
    }
}
