//! Suite runners shared by `verify` and `all`: each returns a [`Report`]
//! whose cases are exact pass/fail verdicts.

use rayon::prelude::*;
use uqsl12::algebra::{
    chain_rep, dist_rep, hopf_axiom_check, verify_presentation, AlgVariant, Basis, HopfVariant,
    RepContext, GENS,
};
use uqsl12::casimir::{
    alpha, cas_class, cas_quant, casimir_rep, centrality_check, classical_limit_check,
    quadratic_relation_check, specialize_ones, xk_coefficients, CasimirFamily, CasimirSpec,
};
use uqsl12::chain::{
    closed_form, commutant_check, fermionic_expansion_check, hecke_check, invariance_check,
    reflection_check, similarity_reduce, spectral_equivalence, two_site_hamiltonian,
    HamiltonianKind, HeckeShift, SpectralConfig,
};
use uqsl12::frt::{
    bosonization_check, char_eq_check, d_identities_check, duality_check, qybe_check,
    rll_appendix_check, superdet_check, x123, RMatrixFamily,
};
use uqsl12::glinalg::PolyMatrix;
use uqsl12::report::{Case, Report};
use uqsl12::ring::{LaurentPoly, Q};

pub const ALL_KINDS: [HamiltonianKind; 4] = [
    HamiltonianKind::Classical,
    HamiltonianKind::FermionicDeformed,
    HamiltonianKind::DistinguishedDeformed,
    HamiltonianKind::FourParam,
];

fn merged(suite: &str, parts: Vec<(String, Report)>) -> Report {
    let mut out = Report::new(suite);
    for (prefix, part) in parts {
        for c in part.cases {
            out.push(Case::new(format!("{prefix}: {}", c.name), c.pass, c.detail));
        }
    }
    out
}

pub fn qybe_report() -> Report {
    merged(
        "qybe",
        vec![
            ("two-param".into(), qybe_check(&RMatrixFamily::two_param())),
            ("four-param".into(), qybe_check(&RMatrixFamily::four_param())),
        ],
    )
}

pub fn chareq_report() -> Report {
    merged(
        "chareq",
        vec![
            ("two-param".into(), char_eq_check(&RMatrixFamily::two_param())),
            (
                "four-param".into(),
                char_eq_check(&RMatrixFamily::four_param()),
            ),
        ],
    )
}

pub fn appendix_report() -> Report {
    merged(
        "rll-appendix",
        vec![
            ("zeta=+1".into(), rll_appendix_check(1)),
            ("zeta=-1".into(), rll_appendix_check(-1)),
        ],
    )
}

pub fn duality_sdet_report() -> Report {
    merged(
        "duality-sdet",
        vec![
            ("duality".into(), duality_check()),
            ("sdet".into(), superdet_check()),
        ],
    )
}

/// All three presentations in the fundamental representation and under both
/// deformed coproducts at L = 2, 3.
pub fn presentation_report() -> Report {
    let fund = RepContext::fundamental();
    let mut parts = vec![
        (
            "fundamental".to_string(),
            verify_presentation(AlgVariant::Quantum, Basis::Fermionic, &fund),
        ),
        (
            "fundamental".to_string(),
            verify_presentation(AlgVariant::Classical, Basis::Fermionic, &fund),
        ),
        (
            "fundamental".to_string(),
            verify_presentation(AlgVariant::Classical, Basis::Distinguished, &dist_rep(&fund)),
        ),
    ];
    for l in [2usize, 3] {
        for variant in [
            HopfVariant::FermionicStandard,
            HopfVariant::DistinguishedNatural,
        ] {
            let ctx = chain_rep(variant, l);
            parts.push((
                format!("{} L={l}", variant.name()),
                verify_presentation(AlgVariant::Quantum, Basis::Fermionic, &ctx),
            ));
            parts.push((
                format!("{} L={l}", variant.name()),
                verify_presentation(AlgVariant::Classical, Basis::Distinguished, &dist_rep(&ctx)),
            ));
        }
        let ctx = chain_rep(HopfVariant::ClassicalPrimitive, l);
        parts.push((
            format!("classical L={l}"),
            verify_presentation(AlgVariant::Classical, Basis::Fermionic, &ctx),
        ));
        parts.push((
            format!("classical L={l}"),
            verify_presentation(AlgVariant::Classical, Basis::Distinguished, &dist_rep(&ctx)),
        ));
    }
    merged("presentation", parts)
}

pub fn hopf_report() -> Report {
    let mut parts = Vec::new();
    for variant in [
        HopfVariant::ClassicalPrimitive,
        HopfVariant::FermionicStandard,
    ] {
        for &gen in &GENS {
            parts.push((
                format!("{} {}", variant.name(), gen.name()),
                hopf_axiom_check(gen, variant),
            ));
        }
    }
    merged("hopf", parts)
}

pub fn centrality_report(ls: &[usize]) -> Report {
    let mut jobs: Vec<(CasimirSpec, usize, HopfVariant)> = Vec::new();
    for p in 2..=5 {
        for &l in ls {
            jobs.push((
                CasimirSpec::classical(p).unwrap(),
                l,
                HopfVariant::ClassicalPrimitive,
            ));
        }
    }
    for p in -3..=5 {
        for &l in ls {
            for variant in [
                HopfVariant::FermionicStandard,
                HopfVariant::DistinguishedNatural,
            ] {
                jobs.push((CasimirSpec::quantum(p), l, variant));
            }
        }
    }
    let cases: Vec<Case> = jobs
        .par_iter()
        .map(|&(spec, l, variant)| {
            let name = format!(
                "{:?} p={} L={l} {}",
                spec.family,
                spec.index,
                variant.name()
            );
            match centrality_check(spec, l, variant) {
                Ok(r) => Case::new(name, r.all_pass(), format!("{} commutators", r.cases.len())),
                Err(e) => Case::new(name, false, e.to_string()),
            }
        })
        .collect();
    let mut report = Report::new("centrality");
    for c in cases {
        report.push(c);
    }
    report
}

fn equal_sum_quadruples(lo: i64, hi: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for p1 in lo..=hi {
        for p2 in p1..=hi {
            for p3 in lo..=hi {
                for p4 in p3..=hi {
                    if p1 + p2 == p3 + p4 && (p1, p2) < (p3, p4) {
                        out.push((p1, p2, p3, p4));
                    }
                }
            }
        }
    }
    out
}

pub fn quadratic_report() -> Report {
    let run = |quads: Vec<(i64, i64, i64, i64)>,
               family: CasimirFamily,
               variant: HopfVariant,
               tag: &str| {
        quads
            .par_iter()
            .map(|&p| {
                let name = format!("{tag} ({},{})~({},{})", p.0, p.1, p.2, p.3);
                match quadratic_relation_check(p, family, 2, variant) {
                    Ok(r) => Case::new(name, r.all_pass(), "exact at L=2"),
                    Err(e) => Case::new(name, false, e.to_string()),
                }
            })
            .collect::<Vec<Case>>()
    };
    let mut report = Report::new("quadratic");
    for c in run(
        equal_sum_quadruples(-2, 4),
        CasimirFamily::QuantumP,
        HopfVariant::FermionicStandard,
        "quantum",
    ) {
        report.push(c);
    }
    for c in run(
        equal_sum_quadruples(2, 5),
        CasimirFamily::ClassicalP,
        HopfVariant::ClassicalPrimitive,
        "classical",
    ) {
        report.push(c);
    }
    report
}

pub fn limits_report() -> Report {
    let mut report = Report::new("limits");
    let ctx = chain_rep(HopfVariant::FermionicStandard, 2);
    let ctx_cl = chain_rep(HopfVariant::ClassicalPrimitive, 2);
    let target = specialize_ones(&cas_class(2, &ctx_cl));
    for p in -2..=4 {
        report.push(Case::new(
            format!("lim C_{p} = C^cl_2"),
            specialize_ones(&cas_quant(p, &ctx)) == target,
            "q = s = 1 specialization",
        ));
    }
    for p in 3..=5 {
        match classical_limit_check(p, 2) {
            Ok(r) => report.push(Case::new(
                format!("lambda-power combination p={p}"),
                r.all_pass(),
                "exact division then specialization",
            )),
            Err(e) => report.push(Case::new(
                format!("lambda-power combination p={p}"),
                false,
                e.to_string(),
            )),
        }
    }
    report
}

pub fn frt_report() -> Report {
    let mut report = Report::new("frt-casimir");
    let fam = RMatrixFamily::two_param();
    let rp1 = fam.rhat.add(&PolyMatrix::identity(9));
    for k in 1..=6i64 {
        let one_site =
            casimir_rep(CasimirSpec::frt(k).unwrap(), 1, HopfVariant::FermionicStandard).unwrap();
        report.push(Case::residual(
            format!("c^({k}) vanishes at L=1"),
            one_site.nonzero_entries(),
        ));
        let two_site =
            casimir_rep(CasimirSpec::frt(k).unwrap(), 2, HopfVariant::FermionicStandard).unwrap();
        report.push(Case::residual(
            format!("c^({k})_23 = alpha_{k} (Rhat + I)"),
            two_site.sub(&rp1.scale(&alpha(k as u32))).nonzero_entries(),
        ));
    }
    let x = x123(&fam);
    let mut xk = PolyMatrix::identity(27);
    for k in 1..=8u32 {
        xk = xk.mul(&x);
        let coeffs = xk_coefficients(k);
        report.push(Case::new(
            format!("recursion constraints k={k}"),
            coeffs.ckrel_holds() && coeffs.fkrel_holds(),
            "ckrel and fkrel",
        ));
        report.push(Case::residual(
            format!("recursion matches X_123^{k}"),
            coeffs.reconstruct(&fam).sub(&xk).nonzero_entries(),
        ));
    }
    report
}

pub fn normalization_report() -> Report {
    let qp = |e: i32| LaurentPoly::var_pow(Q, e);
    let hf = closed_form(HamiltonianKind::FermionicDeformed);
    let hd = closed_form(HamiltonianKind::DistinguishedDeformed);
    let hcl = closed_form(HamiltonianKind::Classical);
    let cases: Vec<Case> = (-2..=4i64)
        .into_par_iter()
        .flat_map_iter(|p| {
            let scale = -qp((3 - 6 * p) as i32);
            let a = two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::FermionicStandard)
                .unwrap();
            let b =
                two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::DistinguishedNatural)
                    .unwrap();
            vec![
                Case::residual(
                    format!("C_{p} = -q^(3-6p) H_ferm"),
                    a.sub(&hf.scale(&scale)).nonzero_entries(),
                ),
                Case::residual(
                    format!("Ct_{p} = -q^(3-6p) H_dist"),
                    b.sub(&hd.scale(&scale)).nonzero_entries(),
                ),
            ]
        })
        .collect();
    let mut report = Report::new("normalization");
    for c in cases {
        report.push(c);
    }
    for p in 2..=5i64 {
        let alpha_p = LaurentPoly::from_int(-(3i64.pow((p - 2) as u32)));
        let h = two_site_hamiltonian(
            CasimirSpec::classical(p).unwrap(),
            HopfVariant::ClassicalPrimitive,
        )
        .unwrap();
        report.push(Case::residual(
            format!("Ccl_{p} = -3^(p-2) H_cl"),
            h.sub(&hcl.scale(&alpha_p)).nonzero_entries(),
        ));
    }
    report
}

pub fn fermionic_report(kinds: &[HamiltonianKind]) -> Report {
    merged(
        "fermionic-expansion",
        kinds
            .iter()
            .map(|&k| (k.name().to_string(), fermionic_expansion_check(k)))
            .collect(),
    )
}

pub fn invariance_report(jobs: &[(HamiltonianKind, usize)]) -> Report {
    let cases: Vec<Case> = jobs
        .par_iter()
        .map(|&(kind, l)| {
            let name = format!("{} L={l}", kind.name());
            let variant = match kind.matched_variant() {
                Some(v) => v,
                None => return Case::new(name, false, "no matched Hopf variant"),
            };
            match invariance_check(kind, variant, l) {
                Ok(r) => Case::new(name, r.all_pass(), format!("{} generators", r.cases.len())),
                Err(e) => Case::new(name, false, e.to_string()),
            }
        })
        .collect();
    let mut report = Report::new("invariance");
    for c in cases {
        report.push(c);
    }
    report
}

pub fn hecke_report(kinds: &[HamiltonianKind], l: usize) -> Report {
    let mut parts = Vec::new();
    for &kind in kinds {
        for shift in [HeckeShift::PlusQ, HeckeShift::PlusQInv] {
            match hecke_check(kind, shift, l) {
                Ok(r) => parts.push((format!("{} shift {}", kind.name(), shift.name()), r)),
                Err(e) => {
                    let mut r = Report::new("hecke");
                    r.push(Case::new("hecke_check", false, e.to_string()));
                    parts.push((format!("{} shift {}", kind.name(), shift.name()), r));
                }
            }
        }
    }
    merged("hecke", parts)
}

pub fn similarity_report(jobs: &[(HamiltonianKind, usize)]) -> Report {
    let mut parts = Vec::new();
    for &(kind, l) in jobs {
        match similarity_reduce(kind, l) {
            Ok(r) => parts.push((format!("{} L={l}", kind.name()), r)),
            Err(e) => {
                let mut r = Report::new("similarity");
                r.push(Case::new("similarity_reduce", false, e.to_string()));
                parts.push((format!("{} L={l}", kind.name()), r));
            }
        }
    }
    merged("similarity", parts)
}

pub fn commutant_report(variants: &[HopfVariant]) -> Report {
    let mut parts = Vec::new();
    for &variant in variants {
        match commutant_check(variant) {
            Ok(r) => parts.push((variant.name().to_string(), r)),
            Err(e) => {
                let mut r = Report::new("commutant");
                r.push(Case::new("commutant_check", false, e.to_string()));
                parts.push((variant.name().to_string(), r));
            }
        }
    }
    merged("commutant", parts)
}

pub fn reflection_report(l: usize, seed: u64) -> Result<Report, String> {
    let cfg = SpectralConfig {
        seed,
        ..SpectralConfig::default()
    };
    reflection_check(l, &cfg)
        .map(|r| r.to_report())
        .map_err(|e| e.to_string())
}

/// Spectral-equivalence verdicts for the two deformed kinds across a chain
/// length range (L = 7 only under `long`).
pub fn spectra_range_report(long: bool, seed: u64) -> Report {
    let cfg = SpectralConfig {
        seed,
        long,
        ..SpectralConfig::default()
    };
    let lmax = if long { 7 } else { 6 };
    let mut report = Report::new("spectra");
    for l in 2..=lmax {
        let name = format!("fermionic vs distinguished L={l}");
        match spectral_equivalence(
            HamiltonianKind::FermionicDeformed,
            HamiltonianKind::DistinguishedDeformed,
            l,
            &cfg,
        ) {
            Ok(r) => report.push(Case::new(
                name,
                r.pass,
                format!("{} point x prime charpoly cases", r.charpoly_cases.len()),
            )),
            Err(e) => report.push(Case::new(name, false, e.to_string())),
        }
    }
    report
}

fn collapse(report: &Report, name: &str) -> Case {
    let failing = report.failing();
    let detail = if failing.is_empty() {
        format!("{} cases", report.cases.len())
    } else {
        format!("failing: {}", failing.join(", "))
    };
    Case::new(name, report.all_pass(), detail)
}

/// Every acceptance suite, one case per criterion; the consolidated report
/// written by the `all` subcommand.
pub fn all_report(long: bool, seed: u64) -> Report {
    let mut report = Report::new("all");
    report.push(collapse(&qybe_report(), "01 quantum Yang-Baxter equation"));
    report.push(collapse(&chareq_report(), "02 characteristic equation"));
    report.push(collapse(&presentation_report(), "03 presentation suites"));
    report.push(collapse(&appendix_report(), "04 appendix L-matrix corpus"));
    report.push(collapse(
        &duality_sdet_report(),
        "05 duality and superdeterminants",
    ));
    report.push(collapse(&d_identities_check(), "06 D-matrix identities"));
    report.push(collapse(&centrality_report(&[1, 2, 3]), "07 Casimir centrality"));
    report.push(collapse(&quadratic_report(), "08 quadratic relations"));
    report.push(collapse(&limits_report(), "09 classical limits"));
    report.push(collapse(&frt_report(), "10 FRT Casimirs"));
    report.push(collapse(
        &normalization_report(),
        "11 Hamiltonian normalizations",
    ));
    report.push(collapse(
        &fermionic_report(&ALL_KINDS),
        "12 fermionic expansions",
    ));
    let inv_jobs: Vec<(HamiltonianKind, usize)> = [
        HamiltonianKind::Classical,
        HamiltonianKind::FermionicDeformed,
        HamiltonianKind::DistinguishedDeformed,
    ]
    .iter()
    .flat_map(|&k| (2..=4).map(move |l| (k, l)))
    .collect();
    report.push(collapse(&invariance_report(&inv_jobs), "13 L-site invariance"));
    report.push(collapse(
        &hecke_report(
            &[
                HamiltonianKind::FermionicDeformed,
                HamiltonianKind::DistinguishedDeformed,
            ],
            3,
        ),
        "14 Hecke relations",
    ));
    let sim_jobs: Vec<(HamiltonianKind, usize)> = (2..=4)
        .map(|l| (HamiltonianKind::FourParam, l))
        .chain((2..=3).map(|l| (HamiltonianKind::DistinguishedDeformed, l)))
        .collect();
    report.push(collapse(&similarity_report(&sim_jobs), "15 similarity reduction"));
    report.push(collapse(
        &commutant_report(&[
            HopfVariant::FermionicStandard,
            HopfVariant::DistinguishedNatural,
        ]),
        "16 commutant uniqueness",
    ));
    report.push(collapse(
        &spectra_range_report(long, seed),
        "17 spectral equivalence",
    ));
    report
}

/// Dispatch for `verify --suite NAME`; `Err` is a usage problem.
pub fn run_suite(
    name: &str,
    kind: Option<HamiltonianKind>,
    sites: Option<usize>,
    hopf: Option<HopfVariant>,
    seed: u64,
) -> Result<Report, String> {
    let report = match name {
        "qybe" => qybe_report(),
        "chareq" => chareq_report(),
        "dident" => d_identities_check(),
        "rll+" => rll_appendix_check(1),
        "rll-" => rll_appendix_check(-1),
        "sdet" => superdet_check(),
        "boson" => bosonization_check(),
        "dual" => duality_check(),
        "presentation" => presentation_report(),
        "hopf" => hopf_report(),
        "invariance" => {
            let kind = kind.unwrap_or(HamiltonianKind::FermionicDeformed);
            invariance_report(&[(kind, sites.unwrap_or(3))])
        }
        "hecke" => {
            let kinds = match kind {
                Some(k) => vec![k],
                None => vec![
                    HamiltonianKind::FermionicDeformed,
                    HamiltonianKind::DistinguishedDeformed,
                ],
            };
            hecke_report(&kinds, sites.unwrap_or(3))
        }
        "fermionic" => match kind {
            Some(k) => fermionic_report(&[k]),
            None => fermionic_report(&ALL_KINDS),
        },
        "similarity" => {
            let kind = kind.unwrap_or(HamiltonianKind::FourParam);
            similarity_report(&[(kind, sites.unwrap_or(2))])
        }
        "commutant" => {
            commutant_report(&[hopf.unwrap_or(HopfVariant::FermionicStandard)])
        }
        "centrality" => centrality_report(&[sites.unwrap_or(2)]),
        "quadratic" => quadratic_report(),
        "limits" => limits_report(),
        "frt" => frt_report(),
        "normalization" => normalization_report(),
        "reflection" => reflection_report(sites.unwrap_or(3), seed)?,
        other => {
            return Err(format!(
                "unknown suite '{other}'; expected one of qybe, chareq, dident, rll+, rll-, \
                 sdet, boson, dual, presentation, hopf, invariance, hecke, fermionic, \
                 similarity, commutant, centrality, quadratic, limits, frt, normalization, \
                 reflection"
            ))
        }
    };
    Ok(report)
}
