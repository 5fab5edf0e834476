"""Idempotent structure: prescribed fixed points, Cayley tables, jump geometry.

An endomorphism is idempotent exactly when every image value is a fixed
point, so the idempotents with fixed set {k_1 < ... < k_s} are the block
maps: constant k_1 up to some breakpoint, then constant k_2, and so on.
Those families are semirings, ideals inside the maps fixing the same
points, and are in bijection with their jump-point tuples.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Endo, compose, fixed_points, format_endo, is_idempotent, jump_points
from .enumeration import all_endos
from .report import VerificationReport


def idempotent_witness(a: Endo) -> int | None:
    """None when every image value is fixed; else the least point whose image is not.

    The returned point certifies non-idempotency: a(a(k)) != a(k).
    """
    for k, v in enumerate(a):
        if a[v] != v:
            return k
    return None


def check_image_equals_fix(a: Endo) -> bool:
    """Whether the image set coincides with the fixed-point set."""
    return set(a) == set(fixed_points(a))


def _normalize_fixed_set(n: int, points: Iterable[int]) -> tuple[int, ...]:
    fixed = tuple(sorted(set(points)))
    if not fixed:
        raise ValueError("fixed set must be nonempty")
    if fixed[0] < 0 or fixed[-1] > n - 1:
        raise ValueError(f"fixed set {fixed} not within 0..{n - 1}")
    return fixed


@dataclass(frozen=True)
class IdFamily:
    """All idempotents whose fixed set is exactly ``fixed_set``, in pointwise order."""

    n: int
    fixed_set: tuple[int, ...]
    members: tuple[Endo, ...]


def _block_form(n: int, fixed: tuple[int, ...], breaks: Sequence[int]) -> Endo:
    imgs = bytearray(n)
    m = 0
    for x in range(n):
        while m < len(breaks) and x >= breaks[m]:
            m += 1
        imgs[x] = fixed[m]
    return Endo._wrap(bytes(imgs))


def enumerate_id_family(n: int, fixed_set: Iterable[int]) -> IdFamily:
    """The family of idempotents with exactly the given fixed points.

    One breakpoint per adjacent fixed pair (k, k'), ranging over
    (k, k'], gives every member once.  Members come out in lexicographic
    image order, which for a single gap is the pointwise chain order.
    """
    fixed = _normalize_fixed_set(n, fixed_set)
    ranges = [range(hi, lo, -1) for lo, hi in zip(fixed, fixed[1:])]
    members = tuple(_block_form(n, fixed, breaks) for breaks in itertools.product(*ranges))
    return IdFamily(n, fixed, members)


def id_family_order(n: int, fixed_set: Iterable[int]) -> int:
    """Closed form for the family size: the product of the fixed-point gaps."""
    fixed = _normalize_fixed_set(n, fixed_set)
    return math.prod(hi - lo for lo, hi in zip(fixed, fixed[1:]))


@dataclass
class CayleyTables:
    """Addition and multiplication tables over a finite set of endomorphisms.

    Entries that fall outside the member set are kept verbatim and
    surfaced through ``escapes``; non-closure is reported, not an error.
    """

    members: list[Endo]
    add_table: list[list[Endo]]
    mul_table: list[list[Endo]]

    @property
    def escapes(self) -> list[tuple[str, int, int, Endo]]:
        inside = set(self.members)
        out = []
        for op, table in (("+", self.add_table), ("*", self.mul_table)):
            for i, row in enumerate(table):
                for j, e in enumerate(row):
                    if e not in inside:
                        out.append((op, i, j, e))
        return out

    @property
    def closed(self) -> bool:
        return not self.escapes

    def render_text(self, names: list[str] | None = None) -> str:
        k = len(self.members)
        names = names or [f"phi_{i + 1}" for i in range(k)]
        label = {m: nm for m, nm in zip(self.members, names)}

        def cell(e: Endo) -> str:
            return label.get(e, format_endo(e) + "!")

        lines = []
        for nm, m in zip(names, self.members):
            lines.append(f"{nm} = {format_endo(m)}")
        for title, sym, table in (
            ("addition (+)", "+", self.add_table),
            ("multiplication (*)", "*", self.mul_table),
        ):
            grid = [[sym] + names]
            for i, row in enumerate(table):
                grid.append([names[i]] + [cell(e) for e in row])
            width = max(len(c) for r in grid for c in r)
            lines.append("")
            lines.append(title)
            for r in grid:
                lines.append("  ".join(c.ljust(width) for c in r).rstrip())
        return "\n".join(lines)

    def render_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        heads = [format_endo(m) for m in self.members]
        for sym, table in (("+", self.add_table), ("*", self.mul_table)):
            writer.writerow([sym] + heads)
            for i, row in enumerate(table):
                writer.writerow([heads[i]] + [format_endo(e) for e in row])
            if sym == "+":
                writer.writerow([])
        return buf.getvalue()


def cayley_tables(members: Sequence[Endo]) -> CayleyTables:
    """Both operation tables over the given pairwise-distinct endomorphisms."""
    members = list(members)
    if len(set(members)) != len(members):
        raise ValueError("members must be pairwise distinct")
    if len({len(m) for m in members}) > 1:
        raise ValueError("members must share one chain size")
    add_table = [[a + b for b in members] for a in members]
    mul_table = [[a * b for b in members] for a in members]
    return CayleyTables(members, add_table, mul_table)


def ideal_check(n: int, fixed_set: Iterable[int]) -> VerificationReport:
    """Verify the family is an ideal among all maps fixing the same points.

    For every family member alpha and every ambient beta: alpha * beta
    must equal alpha, and beta * alpha must land back in the family.
    """
    fixed = _normalize_fixed_set(n, fixed_set)
    if n < 3 or not 1 <= len(fixed) <= n - 2:
        raise ValueError(f"ideal check needs n >= 3 and 1 <= |fixed| <= n-2, got n={n}, {fixed}")
    family = enumerate_id_family(n, fixed)
    inside = set(family.members)
    ambient = [b for b in all_endos(n) if all(b[k] == k for k in fixed)]
    failures: list[dict] = []
    checked = 0
    for alpha in family.members:
        for beta in ambient:
            checked += 1
            ab = compose(alpha, beta)
            if ab != alpha:
                failures.append(
                    {
                        "alpha": format_endo(alpha),
                        "beta": format_endo(beta),
                        "what": "alpha*beta != alpha",
                        "actual": format_endo(ab),
                    }
                )
            ba = compose(beta, alpha)
            if ba not in inside:
                failures.append(
                    {
                        "alpha": format_endo(alpha),
                        "beta": format_endo(beta),
                        "what": "beta*alpha escapes the family",
                        "actual": format_endo(ba),
                    }
                )
    return VerificationReport("Cor3.11", (n, n), checked, failures)


def gap_jump_point(a: Endo, gap_index: int) -> int:
    """The unique jump point between the adjacent fixed pair at ``gap_index``.

    Fixed pairs are indexed from 0 in increasing order; the pair must be
    non-consecutive so the gap is nonempty.
    """
    fp = fixed_points(a)
    pairs = list(zip(fp, fp[1:]))
    if not 0 <= gap_index < len(pairs):
        raise ValueError(f"gap index {gap_index} out of range for {len(pairs)} fixed pairs")
    lo, hi = pairs[gap_index]
    if hi == lo + 1:
        raise ValueError(f"fixed points {lo},{hi} are consecutive: no gap")
    js = [j for j in jump_points(a) if lo < j <= hi]
    if len(js) != 1:
        raise AssertionError(f"expected one jump point in ({lo},{hi}] of {a!r}, found {js}")
    return js[0]


def stabilization_index(a: Endo) -> int:
    """Least q >= 1 with a^(q+1) = a^q; equals 1 exactly for idempotents."""
    q, acc = 1, a
    while True:
        nxt = compose(acc, a)
        if nxt == acc:
            return q
        acc = nxt
        q += 1


def isolated_nonfixed_predicate(a: Endo) -> bool:
    """Sufficient (not necessary) test for idempotency.

    True when at least ceil((n+1)/2) points are fixed, at most n-1 are,
    and no two non-fixed points are consecutive: every non-fixed point
    then sits between fixed neighbours, forcing its image to be fixed.
    """
    n = len(a)
    nonfixed = [x for x, v in enumerate(a) if v != x]
    s = n - len(nonfixed)
    if not (n + 2) // 2 <= s <= n - 1:
        return False
    return all(y - x >= 2 for x, y in zip(nonfixed, nonfixed[1:]))


SEGMENT_TAGS = (
    "Constant",
    "Identity",
    "IdentityThenConstant",
    "ConstantThenIdentity",
    "ConstantIdentityConstant",
)


@dataclass(frozen=True)
class SegmentClass:
    """Shape of an idempotent between two adjacent jump points.

    [k, ell] is the fixed sub-interval; the restriction is always
    x -> min(max(x, k), ell).  A single-point block (k = ell) makes the
    whole segment constant, so it normalizes to the Constant tag.
    """

    tag: str
    k: int
    ell: int

    def value_at(self, x: int) -> int:
        return min(max(x, self.k), self.ell)


def segment_classify(eps: Endo, j_lo: int, j_hi: int) -> SegmentClass:
    """Classify the restriction of an idempotent to [j_lo, j_hi - 1].

    ``j_lo < j_hi`` must be adjacent jump points of ``eps`` with
    ``j_hi > j_lo + 1`` so the interval has at least two points.
    """
    if not is_idempotent(eps):
        raise ValueError(f"{format_endo(eps)} is not idempotent")
    js = jump_points(eps)
    if j_lo not in js or j_hi not in js or js.index(j_hi) != js.index(j_lo) + 1:
        raise ValueError(f"{j_lo},{j_hi} are not adjacent jump points of {format_endo(eps)}")
    if j_hi <= j_lo + 1:
        raise ValueError(f"jump points {j_lo},{j_hi} are consecutive: empty interior")
    lo, hi = j_lo, j_hi - 1
    block = [x for x in range(lo, hi + 1) if eps[x] == x]
    if not block or block[-1] - block[0] != len(block) - 1:
        raise AssertionError(f"no contiguous fixed block in [{lo},{hi}] of {eps!r}")
    k, ell = block[0], block[-1]
    if k == ell:
        tag = "Constant"
    elif k == lo and ell == hi:
        tag = "Identity"
    elif k == lo:
        tag = "IdentityThenConstant"
    elif ell == hi:
        tag = "ConstantThenIdentity"
    else:
        tag = "ConstantIdentityConstant"
    return SegmentClass(tag, k, ell)


def enumerate_idempotents_by_jumps(n: int, jump_set: Iterable[int]) -> list[Endo]:
    """All idempotents whose jump-point set is exactly ``jump_set``."""
    want = tuple(sorted(set(jump_set)))
    if want and (want[0] < 1 or want[-1] > n - 1):
        raise ValueError(f"jump set {want} not within 1..{n - 1}")
    return [a for a in all_endos(n) if is_idempotent(a) and jump_points(a) == want]


def no_jump_idempotent_count(n: int) -> int:
    """Closed form binom(n+1, 2) for the jump-free idempotents.

    These are exactly the maps that clamp the chain onto one fixed
    interval [k, ell], and there are as many as such intervals.
    """
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    return math.comb(n + 1, 2)
