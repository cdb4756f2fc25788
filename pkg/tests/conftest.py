"""Independent oracles shared by the test modules.

Nothing here goes through the block-doubling generator or the str.find
matcher used by the package.
"""

from __future__ import annotations

import pytest

SIGMA_IMAGES = {"a": "ab", "b": "aa"}
TAU_IMAGES = {"Theta1": {"a": "a", "b": "bb"}, "Theta2": {"a": "ab", "b": "acac"}}


def rewrite(images: dict[str, str], w: str) -> str:
    return "".join(images[x] for x in w)


def naive_d(n: int) -> str:
    """D by repeated full rewriting from 'a'."""
    w = "a"
    while len(w) < n:
        w = rewrite(SIGMA_IMAGES, w)
    return w[:n]


def naive_seq(seq: str, n: int) -> str:
    if seq == "D":
        return naive_d(n)
    return rewrite(TAU_IMAGES[seq], naive_d(n))[:n]


def naive_positions(t: str, w: str) -> list[int]:
    """1-based starts of w in t by comparing every window."""
    return [i + 1 for i in range(len(t) - len(w) + 1) if t[i : i + len(w)] == w]


def naive_square_scan(t: str, k: int = 2) -> set[tuple[str, int]]:
    """Every w^k inside t: for each period L, count matching letters t[i] == t[i+L] backwards."""
    n = len(t)
    out = set()
    for L in range(1, n // k + 1):
        need = (k - 1) * L
        run = 0
        for i in range(n - L - 1, -1, -1):
            run = run + 1 if t[i] == t[i + L] else 0
            if run >= need:
                out.add((t[i : i + L], i + 1))
    return out


@pytest.fixture(scope="session")
def d4096() -> str:
    return naive_d(4096)


_criteria: list[tuple[str, str, float]] = []


def record_criterion(label: str, ok: bool, seconds: float) -> None:
    _criteria.append((label, "PASS" if ok else "FAIL", seconds))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, seconds in _criteria:
        terminalreporter.write_line(f"{status}  {label}  ({seconds:.2f}s)")
