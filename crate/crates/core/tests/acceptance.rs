//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use z3hilb::dyson::{build, is_admissible};
use z3hilb::enumerate::partitions_up_to;
use z3hilb::series::{lhs_sum, product_formula};
use z3hilb::verify::{
    verify_admissible_families, verify_conjecture, verify_prop_leg, verify_structure_part, verify_top_coefficients,
    verify_weight_transport, Conjecture, StructureCheck,
};
use z3hilb::{Partition, ProductFormula, VerificationReport, WeightKind};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn require(report: VerificationReport) -> Result<String, String> {
    if report.passed() {
        Ok(format!("{} n<={} items={}", report.check_name, report.max_n, report.items_checked))
    } else {
        Err(format!("{} failed: {:?}", report.check_name, report.counterexample))
    }
}

fn all(reports: Vec<VerificationReport>) -> Result<String, String> {
    reports.into_iter().map(require).collect::<Result<Vec<_>, _>>().map(|v| v.join("; "))
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).min(8)
}

fn conj3() -> Result<String, String> {
    require(verify_conjecture(Conjecture::Conj3, 30, jobs()))
}

fn conj2() -> Result<String, String> {
    require(verify_conjecture(Conjecture::Conj2, 30, jobs()))
}

fn prop_leg() -> Result<String, String> {
    require(verify_prop_leg(24, jobs()))
}

fn top_tilde() -> Result<String, String> {
    let s = lhs_sum(WeightKind::WtTilde, 29);
    for n in 2..=14u32 {
        let (even, odd) = (s.coefficient(n, 2 * n), s.coefficient(n, 2 * n + 1));
        if even != BigInt::from(1) || odd != BigInt::from(3) {
            return Err(format!("n={n}: b(n,2n)={even}, b(n,2n+1)={odd}"));
        }
    }
    if let Some((k, n, c)) = s.terms().find(|&(k, n, _)| 2 * k > n) {
        return Err(format!("nonzero b({k},{n})={c}"));
    }
    require(verify_top_coefficients(29, jobs()).map_err(|e| e.to_string())?)
}

fn top_plain() -> Result<String, String> {
    let s = lhs_sum(WeightKind::Wt, 29);
    for n in 2..=14u32 {
        let (even, odd) = (s.coefficient(n, 2 * n), s.coefficient(n, 2 * n + 1));
        if even != BigInt::from(1) || odd != BigInt::from(2) {
            return Err(format!("n={n}: coeff(t^n q^2n)={even}, coeff(t^n q^2n+1)={odd}"));
        }
    }
    for (k, n) in [(0, 1), (1, 2), (1, 3)] {
        if s.coefficient(k, n) != BigInt::from(1) {
            return Err(format!("coeff(t^{k} q^{n}) = {}", s.coefficient(k, n)));
        }
    }
    Ok("wt top coefficients 1/2 for 2<=n<=14, unit values at n=1,2,3".into())
}

fn bijections() -> Result<String, String> {
    all(vec![
        verify_structure_part(StructureCheck::FBijection, 18, jobs()),
        verify_structure_part(StructureCheck::Decomposition, 16, jobs()),
        verify_structure_part(StructureCheck::AdmissibleCount, 20, jobs()),
    ])
}

fn transport() -> Result<String, String> {
    require(verify_weight_transport(16, jobs()))
}

fn boundary() -> Result<String, String> {
    let lam: Partition = "6,4".parse().unwrap();
    let labels = lam.boundary_sequence();
    if labels != [3, 4, 5, 6, 5, 6, 7, 6] {
        return Err(format!("boundary(6,4) = {labels:?}"));
    }
    if lam.weight(WeightKind::WtTilde) != 4 {
        return Err(format!("wt-tilde(6,4) = {}", lam.weight(WeightKind::WtTilde)));
    }
    let by_boundary = lam.cells().filter(|&c| lam.contributes_by_boundary(c).unwrap()).count();
    if by_boundary != 4 {
        return Err(format!("{by_boundary} boxes contribute by boundary labels"));
    }
    require(verify_structure_part(StructureCheck::BoundaryLemma, 14, jobs()))
}

fn admissibility_structure() -> Result<String, String> {
    let forbidden = "2,2,1,2".parse().unwrap();
    if is_admissible(&forbidden) {
        return Err("(2,2,1,2) built successfully".into());
    }
    all(vec![
        verify_structure_part(StructureCheck::StairClosure, 16, jobs()),
        verify_admissible_families(30),
        verify_structure_part(StructureCheck::ForbiddenBlock, 20, jobs()),
    ])
}

fn main() -> ExitCode {
    // The two product sides agree through the correction factor
    // at the same range used by criteria 1 and 2.
    let c3 = product_formula(ProductFormula::Conj3Rhs, 30);
    let c2c =
        product_formula(ProductFormula::Conj2Rhs, 30).mul(&product_formula(ProductFormula::Correction, 30)).unwrap();
    assert_eq!(c3, c2c);
    assert_eq!(partitions_up_to(30).filter(|l| l.size() == 30).count(), 5604);
    assert!(build(&"2,2,2".parse().unwrap()).is_ok());

    let criteria = [
        Criterion {
            id: 1,
            title: "wt-tilde series equals its product, n <= 30 (exact)",
            budget: Duration::from_secs(5),
            run: conj3,
        },
        Criterion {
            id: 2,
            title: "wt series equals its product, n <= 30 (exact)",
            budget: Duration::from_secs(5),
            run: conj2,
        },
        Criterion {
            id: 3,
            title: "leg-condition series identity, N = 24 (exact)",
            budget: Duration::from_secs(5),
            run: prop_leg,
        },
        Criterion {
            id: 4,
            title: "wt-tilde top coefficients 1/3 and vanishing, N = 29",
            budget: Duration::from_secs(5),
            run: top_tilde,
        },
        Criterion {
            id: 5,
            title: "wt top coefficients 1/2 and unit values",
            budget: Duration::from_secs(5),
            run: top_plain,
        },
        Criterion {
            id: 6,
            title: "f round trip <= 18, build∘phi <= 16, #admissible = p(n) <= 20",
            budget: Duration::from_secs(30),
            run: bijections,
        },
        Criterion {
            id: 7,
            title: "wt-tilde transport under rho1/psi2 and #2s in phi, <= 16",
            budget: Duration::from_secs(10),
            run: transport,
        },
        Criterion {
            id: 8,
            title: "boundary-label criterion cellwise <= 14, (6,4) instance",
            budget: Duration::from_secs(10),
            run: boundary,
        },
        Criterion {
            id: 9,
            title: "stair closure <= 16, families n <= 30, (2,2,1,2) absent <= 20",
            budget: Duration::from_secs(30),
            run: admissibility_structure,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed > c.budget => Err(format!("took {elapsed:?}, budget {:?}", c.budget)),
            Ok(detail) => Ok(detail.clone()),
            Err(e) => Err(e.clone()),
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {}: {} [{:.2?}] {}", c.id, c.title, elapsed, detail),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {} [{:.2?}] {}", c.id, c.title, elapsed, why);
            }
        }
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failures, failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
