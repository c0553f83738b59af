#!/usr/bin/env python3
"""Smoke tests for the Python bindings: every exposed operation gets one call."""
import math
import sys

import picklab as pk


def main():
    failures = []

    def check(cond, what):
        if cond:
            print(f"ok: {what}")
        else:
            failures.append(what)
            print(f"FAIL: {what}")

    mu = pk.Measure.from_data([(0.5, 1.0)])
    rep = pk.NevanlinnaRep(0.0, 0.0, mu)

    check(abs(pk.evaluate(rep, 1j).imag - 0.8) < 1e-12, "evaluate")
    check(abs(pk.evaluate_reduced(mu, 1j) - (0.4 + 0.8j)) < 1e-12, "evaluate_reduced")
    check(abs(pk.julia_quotient(rep, 1j) - 0.8) < 1e-12, "julia_quotient")
    check(abs(pk.julia_quotient_measure(mu, 1j) - 0.8) < 1e-12, "julia_quotient_measure")
    check(abs(pk.fractional_laplacian_jq(mu, 1j, 0.0) - 0.8) < 1e-12,
          "fractional_laplacian_jq")

    p2 = pk.RateFunction.power(1.0, 2.0)
    check(abs(p2.value(0.1) - 0.01) < 1e-15 and p2.is_little_o_of_t(),
          "RateFunction.power")
    check(pk.RateFunction.expinv(1.0).log2_value(1e-6) < -1e5, "log-domain rate value")

    aj = pk.amortized_jq(mu, 0.0, p2, 0.1)
    lo, hi = pk.augur_bounds(mu, 0.0, p2, 0.1)
    check(lo <= aj <= hi, "amortized_jq within augur_bounds")
    rows, verdict = pk.aj_scan(mu, 0.0, p2, [0.1 * 0.5**k for k in range(12)])
    check(len(rows) == 12 and verdict == pk.ScanVerdict.Bounded, "aj_scan")

    rr = pk.gamma_regular(mu, 0.0, p2)
    check(rr.verdict.tag == pk.Tag.Integrable and rr.witness_C == 1.0
          and abs(rr.verdict.estimate - 4.0) < 1e-12, "gamma_regular")

    check(pk.is_augury(pk.RateFunction.power(1.0, 1.5), p2).verdict.tag
          == pk.Tag.Integrable, "is_augury")

    dens = pk.Measure.from_data(
        [], [{"form": "power", "c": 1.0, "p": 4.0, "support": (-1.0, 1.0)}])
    lam = pk.constructed_augury(dens, 0.0, [0.2 * 0.5**k for k in range(20)])
    check(abs(lam.value(0.05) - 12.8 * 0.05**4) < 1e-12, "constructed_augury")
    check(pk.order_of_regularity(dens, 0.0, 5) == 2, "order_of_regularity")
    check(pk.analytic_determinacy(mu, 0.0).verdict.tag == pk.Tag.Integrable,
          "analytic_determinacy")

    nv = pk.nontangential_value(rep, 0.0)
    check(nv["finite"] and abs(nv["value"] - 1.6) < 1e-12, "nontangential_value")
    coeffs = pk.nontangential_polynomial(rep, 0.0, 1)
    check(abs(coeffs[0] - 1.6) < 1e-12 and abs(coeffs[1] - 4.0) < 1e-12,
          "nontangential_polynomial")

    two = pk.NevanlinnaRep(0.0, 0.0, pk.Measure.from_data([(-1.0, 1.0), (1.0, 1.0)]))
    out = pk.aronszajn_krein(two, 0.75)
    (t0, w0), (t1, w1) = out.mu.atoms
    check(abs(t0 + 0.5) < 1e-10 and abs(t1 - 2.0) < 1e-10
          and abs(w0 - 0.4) < 1e-10 and abs(w1 - 1.6) < 1e-10, "aronszajn_krein")

    spikes, wit = pk.pitting_measure(p2, p2, 5)
    check(len(wit) == 5 and all(t == 4.0**-n for n, t, _, _ in wit), "pitting_measure")
    _, hwit = pk.horocyclic_failure_measure(p2, pk.RateFunction.power(1.0, 4.0), 5)
    check(len(hwit) == 5, "horocyclic_failure_measure")

    try:
        pk.evaluate(rep, -1j)
        check(False, "PicklabError raised")
    except pk.PicklabError:
        check(True, "PicklabError raised")

    if failures:
        print(f"\n{len(failures)} smoke check(s) failed")
        return 1
    print("\nall python smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
