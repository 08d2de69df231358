"""Cross-check battery: run every independent route on one instance.

The base instance is checked directly; each extra trial remixes it by
unimodular factors on both sides, which provably preserves solvability,
and repeats the battery on the remixed instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gcd_lcm import cofactor, gcd_lcm_pair, mutually_associate
from .matrix import Matrix
from .oracle import column_module, hnf_solve
from .randgen import random_matrix, random_unimodular
from .solver import (
    SolutionParameter,
    annihilator_generators,
    build_solution_set,
    certify,
    check_solvable_augmented,
    general_solution,
)

DEFAULT_SEED = 12345
PARAMETER_SAMPLES = 5


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    name: str
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name} {self.detail}".rstrip()


def _sample_parameter(ss, rng) -> SolutionParameter:
    ring = ss.u.ring
    free = ss.n - ss.t
    return SolutionParameter(
        t3=random_matrix(ring, rng, free, ss.t, bound=2, degree=1),
        t4=random_matrix(ring, rng, free, free, bound=2, degree=1),
    )


def _instance_checks(b, a, rng, label, expect_gcd=None, expect_lcm=None):
    results = []
    ring = b.ring

    def record(ok, name, detail=""):
        results.append(CheckResult(ok, f"{label}.{name}", detail))

    cert = certify(b, a)
    record(True, "snf-A", "factors=(" + ",".join(ring.format(f) for f in cert.snf_a.factors) + ")")
    record(True, "snf-B", "factors=(" + ",".join(ring.format(f) for f in cert.snf_b.factors) + ")")

    augmented = check_solvable_augmented(b, a)
    hnf_x = hnf_solve(b, a)
    agree = cert.solvable == augmented == (hnf_x is not None)
    record(
        agree,
        "solvability-agreement",
        f"pattern={cert.solvable} augmented={augmented} echelon={hnf_x is not None}",
    )
    if not agree or not cert.solvable:
        return results, cert.solvable

    ss = build_solution_set(cert)
    pair = gcd_lcm_pair(ss)
    record(b * pair.gcd == a, "gcd-is-solution")
    record(b * pair.lcm == a, "lcm-is-solution")

    ok_div = True
    ok_proj = True
    for _ in range(PARAMETER_SAMPLES):
        p = _sample_parameter(ss, rng)
        x = general_solution(ss, p)
        if b * x != a or pair.gcd * cofactor(ss, p) != x:
            ok_div = False
        if pair.projector * x != pair.lcm:
            ok_proj = False
    record(ok_div, "gcd-divides-solutions", f"samples={PARAMETER_SAMPLES}")
    record(ok_proj, "lcm-projector", f"samples={PARAMETER_SAMPLES}")

    gens = annihilator_generators(cert.snf_b)
    zero = Matrix.zeros(ring, cert.n, cert.n)
    record(all(b * z == zero for z in gens), "annihilator-products", f"generators={len(gens)}")

    record(ss.contains(hnf_x), "echelon-solution-in-coset")

    record(
        column_module([pair.lcm] + gens) == column_module([pair.gcd]),
        "column-module-gcd",
    )

    if expect_gcd is not None:
        record(mutually_associate(pair.gcd, expect_gcd), "expected-gcd-associate")
    if expect_lcm is not None:
        record(mutually_associate(pair.lcm, expect_lcm), "expected-lcm-associate")
    return results, cert.solvable


def run_battery(
    b: Matrix,
    a: Matrix,
    trials: int = 5,
    seed: int = DEFAULT_SEED,
    expect_gcd: Matrix | None = None,
    expect_lcm: Matrix | None = None,
) -> list:
    rng = random.Random(seed)
    results, base_verdict = _instance_checks(
        b, a, rng, "base", expect_gcd=expect_gcd, expect_lcm=expect_lcm
    )
    ring = b.ring
    n = b.rows
    for idx in range(1, trials + 1):
        w1 = random_unimodular(ring, rng, n)
        w2 = random_unimodular(ring, rng, n)
        label = f"trial-{idx}"
        trial_results, verdict = _instance_checks(w1 * b * w2, w1 * a, rng, label)
        results.extend(trial_results)
        results.append(
            CheckResult(
                verdict == base_verdict,
                f"{label}.verdict-stable",
                f"base={base_verdict} trial={verdict}",
            )
        )
    return results
