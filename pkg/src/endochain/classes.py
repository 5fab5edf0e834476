"""Root classes: elements sharing their unique idempotent power.

Two endomorphisms are equivalent when some powers of each reach the
same idempotent.  A class is described by its type: the fixed blocks of
the idempotent plus the one jump point per gap.  Members are exactly
the monotone maps that fix the blocks, run strictly above the diagonal
before each block, and strictly below it after; each diagonal-free run
of length p contributes a Catalan factor C_p to the class order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    Endo,
    EndoError,
    compose,
    fixed_points,
    format_endo,
    is_idempotent,
    jump_points,
    omega,
    parse_endo,
)
from .enumeration import all_endos, partition_by_omega
from .report import VerificationReport


def equivalent(a: Endo, b: Endo) -> bool:
    """Whether a and b stabilize to the same idempotent power."""
    if len(a) != len(b):
        raise EndoError(f"size mismatch: {len(a)} vs {len(b)}")
    return omega(a).endo == omega(b).endo


@dataclass(frozen=True)
class TypeDescriptor:
    """Fixed blocks plus per-gap jump points; names one equivalence class.

    ``blocks`` are inclusive [start, end] runs of consecutive fixed
    points of the class idempotent, separated by gaps of length >= 2;
    ``jumps`` holds exactly one point per gap, with
    block[i].end < jumps[i] <= block[i+1].start.
    """

    n: int
    blocks: tuple[tuple[int, int], ...]
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple((int(s), int(e)) for s, e in self.blocks))
        object.__setattr__(self, "jumps", tuple(int(j) for j in self.jumps))
        if not self.blocks:
            raise ValueError("type descriptor needs at least one fixed block")
        if len(self.jumps) != len(self.blocks) - 1:
            raise ValueError(
                f"{len(self.blocks)} blocks need {len(self.blocks) - 1} jumps, got {len(self.jumps)}"
            )
        prev_end = -2
        for s, e in self.blocks:
            if not 0 <= s <= e <= self.n - 1:
                raise ValueError(f"block [{s},{e}] not within 0..{self.n - 1}")
            if s <= prev_end + 1:
                raise ValueError(f"block [{s},{e}] not separated from previous by a gap >= 2")
            prev_end = e
        for i, j in enumerate(self.jumps):
            lo, hi = self.blocks[i][1], self.blocks[i + 1][0]
            if not lo < j <= hi:
                raise ValueError(f"jump {j} outside its gap ({lo},{hi}]")


def _runs(points: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    runs = []
    for p in points:
        if runs and p == runs[-1][1] + 1:
            runs[-1][1] = p
        else:
            runs.append([p, p])
    return tuple((s, e) for s, e in runs)


def type_of(a: Endo) -> TypeDescriptor:
    """Blocks of the stabilized idempotent plus a's own per-gap jump points."""
    eps = omega(a).endo
    return TypeDescriptor(len(a), _runs(fixed_points(eps)), jump_points(a))


def idempotent_of_type(td: TypeDescriptor) -> Endo:
    """The unique idempotent with the descriptor's blocks and jumps.

    Below the first block everything maps to its start; inside a gap the
    map holds the left block's end until the jump point, then the right
    block's start; above the last block everything maps to its end.
    """
    imgs = bytearray(td.n)
    first = td.blocks[0][0]
    for x in range(first):
        imgs[x] = first
    for i, (s, e) in enumerate(td.blocks):
        for x in range(s, e + 1):
            imgs[x] = x
        if i < len(td.blocks) - 1:
            j, ns = td.jumps[i], td.blocks[i + 1][0]
            for x in range(e + 1, j):
                imgs[x] = e
            for x in range(j, ns):
                imgs[x] = ns
    last = td.blocks[-1][1]
    for x in range(last + 1, td.n):
        imgs[x] = last
    return Endo._wrap(bytes(imgs))


def _monotone_tuples(bounds: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    """All nondecreasing tuples with per-position inclusive value bounds."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, floor: int, acc: list[int]) -> None:
        if i == len(bounds):
            out.append(tuple(acc))
            return
        lo, hi = bounds[i]
        for v in range(max(lo, floor), hi + 1):
            acc.append(v)
            rec(i + 1, v, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def _class_regions(td: TypeDescriptor) -> list[tuple[list[int], list[tuple[int, int]]]]:
    """Non-block position groups with their value bounds for class members.

    Members run strictly above the diagonal (bounded by the next block
    start) before the first block and from each jump point on, and
    strictly below it (bounded by the previous block end) after a block
    and up to the jump point.
    """
    regions = []
    first = td.blocks[0][0]
    if first:
        regions.append((list(range(first)), [(x + 1, first) for x in range(first)]))
    for i in range(len(td.blocks) - 1):
        e, j, ns = td.blocks[i][1], td.jumps[i], td.blocks[i + 1][0]
        below = list(range(e + 1, j))
        if below:
            regions.append((below, [(e, x - 1) for x in below]))
        above = list(range(j, ns))
        if above:
            regions.append((above, [(x + 1, ns) for x in above]))
    last = td.blocks[-1][1]
    tail = list(range(last + 1, td.n))
    if tail:
        regions.append((tail, [(last, x - 1) for x in tail]))
    return regions


def class_members_constructive(td: TypeDescriptor) -> list[Endo]:
    """All class members, assembled gap by gap instead of by scanning.

    The per-region choices are independent, so members are the product
    of the diagonal-avoiding monotone tuples over each region.
    """
    base = bytearray(idempotent_of_type(td))
    regions = _class_regions(td)
    choice_lists = [_monotone_tuples(bounds) for _, bounds in regions]
    members = []
    for combo in itertools.product(*choice_lists):
        imgs = bytearray(base)
        for (positions, _), vals in zip(regions, combo):
            for p, v in zip(positions, vals):
                imgs[p] = v
        members.append(Endo._wrap(bytes(imgs)))
    members.sort()
    return members


def catalan(p: int) -> int:
    """Standard Catalan number: 1, 1, 2, 5, 14, 42, ..."""
    if p < 0:
        raise ValueError(f"Catalan index must be >= 0, got {p}")
    return math.comb(2 * p, p) // (p + 1)


def count_below_diagonal_tuples(p: int) -> int:
    """Direct count of nondecreasing p-tuples over 0..p-1 with i_r < r for r >= 1.

    Equals catalan(p-1): the first entry is forced to 0, leaving a
    ballot-style tail.
    """
    if p < 1:
        raise ValueError(f"tuple length must be >= 1, got {p}")
    bounds = [(0, p - 1)] + [(0, r - 1) for r in range(1, p)]
    return len(_monotone_tuples(bounds))


def count_above_diagonal_tuples(p: int) -> int:
    """Direct count of nondecreasing p-tuples over 1..p with i_r > r. Equals catalan(p)."""
    if p < 1:
        raise ValueError(f"tuple length must be >= 1, got {p}")
    bounds = [(r + 1, p) for r in range(p)]
    return len(_monotone_tuples(bounds))


def _segment_lengths(td: TypeDescriptor) -> list[int]:
    """Cardinalities of the maximal diagonal-free runs, in position order."""
    lengths = [td.blocks[0][0]]
    for i in range(len(td.blocks) - 1):
        e, j, ns = td.blocks[i][1], td.jumps[i], td.blocks[i + 1][0]
        lengths.append(j - e - 1)
        lengths.append(ns - j)
    lengths.append(td.n - 1 - td.blocks[-1][1])
    return lengths


def class_order(td: TypeDescriptor) -> int:
    """Verified class size: the product of Catalan numbers of the run lengths.

    Each maximal run of p non-fixed positions between anchors
    contributes catalan(p) independent monotone fillings.
    """
    return math.prod(catalan(p) for p in _segment_lengths(td))


def class_order_printed(td: TypeDescriptor) -> int:
    """The uncorrected variant: the run below each jump counted one too long.

    Kept so reports can show where it overcounts (first at gaps whose
    jump sits >= 2 past the left block).
    """
    order = catalan(td.blocks[0][0])
    for i in range(len(td.blocks) - 1):
        e, j, ns = td.blocks[i][1], td.jumps[i], td.blocks[i + 1][0]
        order *= catalan(j - e) * catalan(ns - j)
    return order * catalan(td.n - 1 - td.blocks[-1][1])


@dataclass
class ClassReport:
    """Everything known about one equivalence class."""

    descriptor: TypeDescriptor
    idempotent: Endo
    members: list[Endo]
    order_formula: int
    order_printed: int
    order_bruteforce: int
    closure_ok: bool
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "n": self.descriptor.n,
            "idempotent": format_endo(self.idempotent),
            "blocks": [list(b) for b in self.descriptor.blocks],
            "jumps": list(self.descriptor.jumps),
            "order_formula": self.order_formula,
            "order_printed": self.order_printed,
            "order_bruteforce": self.order_bruteforce,
            "members": [format_endo(m) for m in self.members],
            "closure_ok": self.closure_ok,
        }


def _closure_failures(members: list[Endo]) -> list[dict]:
    inside = set(members)
    failures = []
    for a in members:
        for b in members:
            s, p = a + b, a * b
            if s not in inside:
                failures.append(
                    {"a": format_endo(a), "b": format_endo(b), "op": "+", "escape": format_endo(s)}
                )
            if p not in inside:
                failures.append(
                    {"a": format_endo(a), "b": format_endo(b), "op": "*", "escape": format_endo(p)}
                )
    return failures


def class_of(eps: Endo, cap: int | None = None) -> ClassReport:
    """Full report on the class of an idempotent, brute force against formula.

    Members are listed by exhaustive scan; the constructive product,
    the Catalan order formula, and closure under both operations are
    cross-checked, with any disagreement recorded as a failure witness.
    """
    if not is_idempotent(eps):
        raise ValueError(f"{format_endo(eps)} is not idempotent; classes are keyed by idempotents")
    n = len(eps)
    members = sorted(a for a in all_endos(n, cap) if omega(a).endo == eps)
    td = type_of(eps)
    formula = class_order(td)
    printed = class_order_printed(td)
    failures = []
    constructive = class_members_constructive(td)
    if constructive != members:
        only_c = [format_endo(x) for x in set(constructive) - set(members)]
        only_b = [format_endo(x) for x in set(members) - set(constructive)]
        failures.append(
            {"what": "constructive members differ from brute force", "extra": only_c, "missing": only_b}
        )
    if formula != len(members):
        failures.append(
            {"what": "order formula mismatch", "expected": len(members), "actual": formula}
        )
    closure = _closure_failures(members)
    failures.extend(closure)
    return ClassReport(
        descriptor=td,
        idempotent=eps,
        members=members,
        order_formula=formula,
        order_printed=printed,
        order_bruteforce=len(members),
        closure_ok=not closure,
        failures=failures,
    )


def class_semiring_check(td: TypeDescriptor) -> VerificationReport:
    """Closure of the constructive member set under both operations."""
    members = class_members_constructive(td)
    failures = _closure_failures(members)
    return VerificationReport("Thm4.8", (td.n, td.n), 2 * len(members) ** 2, failures)


@dataclass(frozen=True)
class ProductWitness:
    """A same-fixed-set pair whose product gains new fixed points."""

    alpha: Endo
    beta: Endo
    product: Endo
    new_fixed: tuple[int, ...]


def mixed_type_product_probe(n: int, cap: int | None = None) -> list[ProductWitness]:
    """Ordered pairs with equal fixed sets but different jump sets whose
    product has a strictly larger fixed set.  May be empty for small n.
    """
    groups: dict[tuple[int, ...], list[Endo]] = {}
    for a in all_endos(n, cap):
        groups.setdefault(fixed_points(a), []).append(a)
    witnesses = []
    for base, group in sorted(groups.items()):
        base_set = set(base)
        jumps = {a: jump_points(a) for a in group}
        for alpha, beta in itertools.permutations(group, 2):
            if jumps[alpha] == jumps[beta]:
                continue
            prod = compose(alpha, beta)
            fp = fixed_points(prod)
            if len(fp) > len(base):
                witnesses.append(
                    ProductWitness(alpha, beta, prod, tuple(sorted(set(fp) - base_set)))
                )
    return witnesses


def congruence_counterexample(n: int, cap: int | None = None) -> tuple[Endo, Endo, Endo] | None:
    """A triple with alpha ~ beta but alpha*gamma !~ beta*gamma, or None.

    The scan is exhaustive over equivalent pairs and all gamma, in
    lexicographic order, so the returned triple is deterministic.
    """
    buckets = partition_by_omega(n, cap)
    omega_of = {a: key for key, mem in buckets.items() for a in mem}
    gammas = sorted(omega_of)
    for key in sorted(buckets):
        for alpha, beta in itertools.combinations(sorted(buckets[key]), 2):
            for gamma in gammas:
                if omega_of[compose(alpha, gamma)] != omega_of[compose(beta, gamma)]:
                    return (alpha, beta, gamma)
    return None


NONCONGRUENCE_TRIPLE_N8 = (
    "2,2,2,2,2,6,7,7",
    "2,2,2,2,3,7,7,7",
    "1,1,1,3,3,4,5,6",
)
NONCONGRUENCE_PRODUCTS_N8 = ("1,1,1,1,1,5,6,6", "1,1,1,1,3,6,6,6")


def validate_noncongruence_triple(
    alpha: Endo, beta: Endo, gamma: Endo
) -> tuple[bool, Endo, Endo]:
    """Re-check a claimed witness; returns (valid, alpha*gamma, beta*gamma)."""
    ag, bg = compose(alpha, gamma), compose(beta, gamma)
    return equivalent(alpha, beta) and not equivalent(ag, bg), ag, bg


def reference_noncongruence_reports() -> tuple[bool, dict]:
    """Validate the canonical n=8 witness triple bit for bit."""
    alpha, beta, gamma = (parse_endo(t) for t in NONCONGRUENCE_TRIPLE_N8)
    valid, ag, bg = validate_noncongruence_triple(alpha, beta, gamma)
    want_ag, want_bg = NONCONGRUENCE_PRODUCTS_N8
    ok = valid and format_endo(ag) == want_ag and format_endo(bg) == want_bg
    detail = {
        "alpha": format_endo(alpha),
        "beta": format_endo(beta),
        "gamma": format_endo(gamma),
        "alpha*gamma": format_endo(ag),
        "beta*gamma": format_endo(bg),
        "equivalent(alpha,beta)": equivalent(alpha, beta),
        "equivalent(alpha*gamma,beta*gamma)": equivalent(ag, bg),
    }
    return ok, detail
