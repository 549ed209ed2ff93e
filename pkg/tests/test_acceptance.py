"""
Acceptance gate: one check per criterion, each printing a PASS/FAIL line with
its wall time against the budget.

    pytest tests/test_acceptance.py -v
    python tests/test_acceptance.py
"""

import contextlib
import io
import os
import random
import sys
import time
from math import factorial

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from test_gkm import A2_GRAPHS, _fixture_edges, _graph_edges  # noqa: E402

from minhess.betti import (  # noqa: E402
    euler_number,
    fixed_points,
    poincare,
    poincare_bruteforce,
    structural_checks,
)
from minhess.cli import main  # noqa: E402
from minhess.cohom import (  # noqa: E402
    equivariant_rank_check,
    ideal_property_check,
    quotient_ring,
    tanisaki_check,
)
from minhess.components import components, components_bruteforce, w_beta  # noqa: E402
from minhess.gkm import hess_gkm_graph  # noqa: E402
from minhess.hess import HessFn, all_hessenberg_functions  # noqa: E402
from minhess.rootsys import all_roots, root_leq  # noqa: E402
from minhess.symgroup import bruhat_leq  # noqa: E402

KNOWN_P = "1 + 4t^2 + 9t^4 + 15t^6 + 20t^8 + 21t^10 + 16t^12 + 8t^14 + 2t^16"
KNOWN_Q = "1 + 2t^2 + 3t^4 + 4t^6 + 4t^8 + 2t^10"
KNOWN_COMPONENTS = [
    "8 1 7 6 5 4 3 2",
    "7 6 5 8 1 4 3 2",
    "7 6 5 4 8 1 3 2",
    "7 6 5 4 3 2 1 8",
]
SEED = 20240101


def _cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def ac1():
    c1, p = _cli("poincare", "--n", "5", "--hess", "2,4,5,5,5")
    c2, q = _cli("poincare", "--n", "5", "--hess", "2,4,5,5,5", "--q")
    ok = c1 == c2 == 0 and p.strip() == KNOWN_P and q.strip() == KNOWN_Q
    return ok, f"P = {p.strip()}; q = {q.strip()}"


def ac2():
    count = 0
    for n in range(2, 7):
        for h in all_hessenberg_functions(n):
            count += 1
            if poincare(h) != poincare_bruteforce(h):
                return False, f"mismatch at h={h}"
    for h in random.Random(SEED).sample(all_hessenberg_functions(7), 50):
        count += 1
        if poincare(h) != poincare_bruteforce(h):
            return False, f"mismatch at h={h}"
    return True, f"{count} Hessenberg functions (n=7: 50 sampled, seed {SEED})"


def ac3():
    count = 0
    for n in range(2, 7):
        for h in all_hessenberg_functions(n):
            count += 1
            e = euler_number(h)
            if not (len(fixed_points(h)) == e == poincare(h)(1)):
                return False, f"mismatch at h={h}"
    for n in range(2, 9):
        h = HessFn(tuple(range(1, n + 1)))
        if not (euler_number(h) == len(fixed_points(h)) == factorial(n) // 2):
            return False, f"Springer mismatch at n={n}"
    return True, f"{count} h checked; Springer n!/2 for n=2..8"


def ac4():
    code, out = _cli("components", "--n", "8", "--hess", "2,2,3,5,6,6,7,8")
    return code == 0 and out.splitlines() == KNOWN_COMPONENTS, " / ".join(out.splitlines())


def ac5():
    count = 0
    for n in range(2, 7):
        for h in all_hessenberg_functions(n):
            count += 1
            if {c.word for c in components(h)} != components_bruteforce(h):
                return False, f"mismatch at h={h}"
    return True, f"{count} Hessenberg functions"


def ac6():
    for h, (verts, edges) in A2_GRAPHS.items():
        g = hess_gkm_graph(HessFn(h))
        if set(g.vertices) != {tuple(int(c) for c in v) for v in verts}:
            return False, f"vertices differ for h={h}"
        if _graph_edges(g) != _fixture_edges(edges):
            return False, f"edges differ for h={h}"
    return True, "5 graphs match the fixtures"


def ac7():
    rows = []
    for h in sorted(A2_GRAPHS):
        rep = equivariant_rank_check(HessFn(h), max_degree=3)
        if not rep.ok:
            return False, f"h={h} mismatch in degree {rep.mismatch_degree}"
        rows.append("".join(str(r[1]) + "," for r in rep.rows).rstrip(","))
    return True, "dims d=0..3: " + "; ".join(rows)


def ac8():
    count = 0
    for n in range(2, 6):
        for h in all_hessenberg_functions(n):
            count += 1
            Q = quotient_ring(h)
            hs = Q.hilbert_series()
            if hs != poincare(h) or hs(1) != euler_number(h):
                return False, f"quotient mismatch at h={h}"
    ideals = 0
    for n in range(2, 5):
        for h in all_hessenberg_functions(n):
            ideals += 1
            rep = ideal_property_check(h)
            if not rep.ok:
                return False, f"ideal check failed at h={h}: {rep.to_json()}"
    return True, f"{count} quotient rings, {ideals} ideal checks"


def ac9():
    rep = tanisaki_check(3)
    return rep.ok, f"Hilbert series {rep.hilbert}"


def ac10():
    count = 0
    for n in range(2, 6):
        for h in all_hessenberg_functions(n):
            count += 1
            rep = structural_checks(h)
            if not rep.ok:
                return False, f"h={h}: {rep.witnesses}"
        roots = all_roots(n)
        for b in roots:
            for c in roots:
                if b.is_positive == c.is_positive:
                    if root_leq(b, c, n) != bruhat_leq(w_beta(n, c), w_beta(n, b)):
                        return False, f"order reversal fails for {b}, {c}"
    return True, f"{count} Hessenberg functions; order reversal n=2..5"


CRITERIA = [
    (1, "Poincare polynomial and q_H for h=(2,4,5,5,5)", ac1, 1),
    (2, "formula equals oracle, n<=6 and 50 at n=7", ac2, 120),
    (3, "Euler numbers and Springer n!/2", ac3, 60),
    (4, "components for h=(2,2,3,5,6,6,7,8)", ac4, 1),
    (5, "corner components equal Bruhat maxima, n<=6", ac5, 300),
    (6, "A2 GKM graphs equal the hand-built fixtures", ac6, 1),
    (7, "GKM cochain ranks, n=3, d<=3", ac7, 30),
    (8, "quotient ring n<=5, ideal n<=4", ac8, 180),
    (9, "Tanisaki presentation n=3", ac9, 1),
    (10, "structural invariants n<=5", ac10, 60),
]


def evaluate(number, name, fn, budget):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:<2} {name}: {detail} ({elapsed:.2f}s / {budget}s)"
    return ok, line


@pytest.mark.parametrize("number,name,fn,budget", CRITERIA, ids=[f"AC{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn, budget, capsys):
    ok, line = evaluate(number, name, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
