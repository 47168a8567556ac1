"""Acceptance criteria 1-11.

Every criterion prints one ``PASS``/``FAIL`` line with its wall time, under
pytest (``pytest -v tests/test_acceptance.py``) or as a script.
"""

import sys
import time

import pytest

from artifact import verify


def criterion_9():
    return verify.combine(verify.t_system_translation(1), verify.t_system_translation(2))


CRITERIA = [
    (1, "reduced word, p <= 210", lambda: verify.reduced_word(210), 1),
    (2, "coordinate bijection and letters", lambda: verify.coordinates(10 ** 5, 450), 1),
    (3, "longest elements, doubled t = 1..10", lambda: verify.longest_elements(10), 1),
    (4, "seed compatibility, ell+m <= 12", lambda: verify.seed_compatibility(12), 5),
    (5, "quiver identities, cap 14", lambda: verify.quiver_identities(14, 2, 4), 10),
    (6, "truncated periodicity, N = 3,4,5", lambda: verify.truncated_periodicity((3, 4, 5), 10, 3), 10),
    (7, "label mutation and shifts", lambda: verify.label_mutation(10, 8, (1, 2)), 30),
    (8, "quantum Laurent and positivity, N = 3", lambda: verify.quantum_laurent(100, 8), 60),
    (9, "T-system translation, N = 5", criterion_9, 5),
    (10, "affine families, window 8", lambda: verify.families(8), 5),
    (11, "T_N combinatorics", lambda: verify.tn_combinatorics(1000), 5),
]


def run_criterion(number, name, check, budget, stream):
    start = time.perf_counter()
    report = check()
    elapsed = time.perf_counter() - start
    ok = report.ok and elapsed < budget
    stream.write(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {name}  "
                 f"[{report.summary}; {elapsed:.2f}s / {budget}s]\n")
    stream.flush()
    return report, elapsed


@pytest.mark.parametrize("number,name,check,budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, name, check, budget, capsys):
    with capsys.disabled():
        sys.stdout.write("\n")
        report, elapsed = run_criterion(number, name, check, budget, sys.stdout)
    assert report.ok, report.details[:3]
    assert elapsed < budget


if __name__ == "__main__":
    failed = 0
    for row in CRITERIA:
        report, elapsed = run_criterion(*row, sys.stdout)
        failed += not (report.ok and elapsed < row[3])
    sys.exit(1 if failed else 0)
