"""Prints a one-line pass/fail summary per acceptance criterion after the
test session."""

CRITERIA = {
    "test_criterion_01_an_class_groups": "A_n class groups are Z/(n+1), oracle-checked",
    "test_criterion_02_de_series_class_groups": "D/E series class groups (order and exponent)",
    "test_criterion_03_hj_determinant_identity": "chain class groups cyclic of order k",
    "test_criterion_04_local_homology_vanishing": "integral profiles: only H_2 and H_4 survive",
    "test_criterion_05_rational_coefficients_profile": "rational profiles: only H_4 survives",
    "test_criterion_06_z_ell_dualizing_criterion": "Z_l-dualizing iff l coprime to class numbers",
    "test_criterion_07_theta_vs_intersection_consistency": "rescaled vs plain pairing cokernels agree",
    "test_criterion_08_curve_oracle_equivalence": "curve profile equals cut-and-paste oracle",
    "test_criterion_09_negative_definiteness": "minor criterion vs bounded sign search",
    "test_criterion_10_perversity_and_weights": "perversity checks and weight formula",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call":
                continue
            name = report.nodeid.rsplit("::", 1)[-1]
            if name in CRITERIA:
                results[name] = outcome
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for index, (name, label) in enumerate(CRITERIA.items(), start=1):
        if name not in results:
            continue
        status = "PASS" if results[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {index:02d} [{status}] {label}")
