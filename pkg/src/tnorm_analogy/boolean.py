"""Boolean analogical proportion ``a:b::c:d``.

Two equivalent connectives are provided: :func:`pia` compares what ``a, d``
and ``b, c`` share, :func:`analogy_dissim` compares how ``a`` differs from
``b`` with how ``c`` differs from ``d``.  Both are true on exactly six of the
sixteen valuations.
"""

import itertools
from dataclasses import dataclass
from typing import NamedTuple


class BoolQuad(NamedTuple):
    a: bool
    b: bool
    c: bool
    d: bool

    def __str__(self):
        return "".join(str(int(v)) for v in self)


def _quad(q):
    if not isinstance(q, BoolQuad):
        q = BoolQuad(*(bool(v) for v in q))
    return q


def pia(q):
    """``(a and d) == (b and c)`` and ``(a or d) == (b or c)``."""
    a, b, c, d = _quad(q)
    return ((a and d) == (b and c)) and ((a or d) == (b or c))


def analogy_dissim(q):
    """``(a and not b) == (c and not d)`` and ``(not a and b) == (not c and d)``."""
    a, b, c, d = _quad(q)
    return ((a and not b) == (c and not d)) and ((not a and b) == (not c and d))


def ap_truth_table(proportion=pia):
    """All 16 valuations in lexicographic ``(a, b, c, d)`` order with their truth value."""
    rows = []
    for bits in itertools.product((False, True), repeat=4):
        q = BoolQuad(*bits)
        rows.append((q, bool(proportion(q))))
    return rows


@dataclass(frozen=True)
class LawCheck:
    name: str
    cases: int
    counterexamples: tuple

    @property
    def passed(self):
        return not self.counterexamples


@dataclass(frozen=True)
class PostulateReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)


# law name -> (arity, premises as argument index tuples, conclusion)
_LAWS = (
    ("reflexivity", 2, (), (0, 1, 0, 1)),
    ("sameness", 2, (), (0, 0, 1, 1)),
    ("symmetry", 4, ((0, 1, 2, 3),), (2, 3, 0, 1)),
    ("central permutation", 4, ((0, 1, 2, 3),), (0, 2, 1, 3)),
    ("external permutation", 4, ((0, 1, 2, 3),), (3, 1, 2, 0)),
    ("internal reversal", 4, ((0, 1, 2, 3),), (1, 0, 3, 2)),
    ("complete reversal", 4, ((0, 1, 2, 3),), (3, 2, 1, 0)),
    ("transitivity", 6, ((0, 1, 2, 3), (2, 3, 4, 5)), (0, 1, 4, 5)),
)

LAW_NAMES = tuple(law[0] for law in _LAWS)


def verify_boolean_postulates(proportion=pia):
    """Exhaustively check the analogy postulates and their consequences.

    Each law is an implication from premise quadruples to a conclusion
    quadruple over a tuple of Boolean variables; every assignment is tried.
    """
    checks = []
    for name, arity, premises, conclusion in _LAWS:
        bad = []
        cases = 0
        for v in itertools.product((False, True), repeat=arity):
            cases += 1
            if all(proportion(BoolQuad(*(v[i] for i in idx))) for idx in premises):
                if not proportion(BoolQuad(*(v[i] for i in conclusion))):
                    bad.append(tuple(int(x) for x in v))
        checks.append(LawCheck(name, cases, tuple(bad)))
    return PostulateReport(tuple(checks))
