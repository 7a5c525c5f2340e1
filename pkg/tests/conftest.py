from __future__ import annotations

from itertools import combinations

import pytest

from hecke_params.hecke import AlgebraCtx
from hecke_params.langlands import Case, ClassifiedBlock, Nature, classify, descriptor_from_dict
from hecke_params.weyl import WeylElem, WeylGroup

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    number, title = marker.args
    status = "PASS" if rep.passed else "FAIL"
    prev = _ACCEPTANCE.get(number)
    if prev is None or status == "FAIL":
        _ACCEPTANCE[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} [{status}] {title}")


def block(case: Case, d: int, t: int = 1, a: int = 3, a_minus: int = 1, index: int = 1, k: int = 1) -> ClassifiedBlock:
    nature = Nature.NONE if case is Case.I else Nature.ORTHOGONAL
    if case is Case.I:
        a = a_minus = None
    return ClassifiedBlock(f"rho{index}", k, d, t, case, nature, a=a, a_minus=a_minus, index=index)


def descriptor_dict(case: Case, d: int, t: int) -> dict:
    """A JSON descriptor whose single block lands in `case`."""
    if case is Case.I:
        return {
            "group": "Sp",
            "blocks": [{"label": "rho", "k": 2, "d": d, "t": t, "self_dual": "none"}],
            "h": {"trivial": False, "jord": [["sigma", 1]], "tau_outer_invariant": True},
        }
    if case is Case.II:
        return {
            "group": "Sp",
            "blocks": [{"label": "rho", "k": 1, "d": d, "t": t, "self_dual": "orthogonal"}],
            "h": {"trivial": False, "jord": [["sigma", 1]], "tau_outer_invariant": True},
        }
    if case is Case.IIb:
        return {
            "group": "SO_even_split",
            "blocks": [{"label": "rho", "k": 1, "d": d, "t": t, "self_dual": "orthogonal"}],
            "h": {"trivial": True, "jord": []},
        }
    return {
        "group": "Sp",
        "blocks": [{"label": "rho", "k": 1, "d": d, "t": t, "self_dual": "orthogonal"}],
        "h": {"trivial": False, "jord": [["rho", 1], ["rho", 3]], "tau_outer_invariant": True},
    }


MIXTURE = {
    "group": "Sp",
    "blocks": [
        {"label": "rho1", "k": 2, "d": 2, "t": 2, "self_dual": "none"},
        {"label": "rho2", "k": 1, "d": 1, "t": 1, "self_dual": "orthogonal"},
    ],
    "h": {"trivial": False, "jord": [["rho2", 1], ["rho2", 3], ["rho2-", 1]], "tau_outer_invariant": True},
}


def ctx_from_dict(data: dict, **kw) -> AlgebraCtx:
    return AlgebraCtx.from_descriptor(descriptor_from_dict(data), **kw)


def grid():
    """The relation-suite grid: every case, t in {1, 2}, d in {1, 2, 3}, plus a two-block mixture."""
    out = []
    for case in Case:
        for t in (1, 2):
            for d in (1, 2, 3):
                data = descriptor_dict(case, d, t)
                assert classify(descriptor_from_dict(data))[0].case is case
                out.append((f"{case.value}-t{t}-d{d}", data))
    out.append(("mixture", MIXTURE))
    return out


def positive_roots(case: Case, d: int) -> set[tuple[int, ...]]:
    """Standard positive roots, written out independently of the engine."""
    def vec(pairs):
        v = [0] * d
        for k, c in pairs:
            v[k] += c
        return tuple(v)

    out = {vec([(i, 1), (j, -1)]) for i, j in combinations(range(d), 2)}
    if case is not Case.I:
        out |= {vec([(i, 1), (j, 1)]) for i, j in combinations(range(d), 2)}
    if case is Case.III:
        out |= {vec([(i, 1)]) for i in range(d)}
    return out


def inversions(W: WeylGroup, w: WeylElem) -> int:
    total = 0
    for p, (case, d) in zip(w.blocks, W.shapes):
        single = WeylElem((p,))
        pos = positive_roots(case, d)
        total += sum(1 for a in pos if single.act(a) not in pos)
    return total
