"""Monotone self-maps of a finite chain and their semiring operations.

The chain is {0, 1, ..., n-1} ordered by magnitude, with join = max.  A
self-map preserves joins exactly when it is monotone, so the elements of
the endomorphism semiring are the monotone image tuples.  Addition is
pointwise max, multiplication is left-to-right composition:
(a * b)(x) = b(a(x)).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

MAX_CHAIN = 64


class EndoError(ValueError):
    """Invalid endomorphism data; ``index`` locates the offending image."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class Endo(bytes):
    """A monotone self-map of {0..n-1}, stored as its image tuple.

    The byte at position x is the image of x.  Instances are immutable,
    hashable, and ordered lexicographically by image tuple; equality is
    image-tuple equality.  ``a[x]`` and ``a(x)`` both evaluate the map,
    ``a + b`` is the pointwise join and ``a * b`` the left-to-right
    composition.
    """

    def __new__(cls, images: Iterable[int]) -> "Endo":
        vals = tuple(images)
        n = len(vals)
        if not 1 <= n <= MAX_CHAIN:
            raise EndoError(f"chain size must be 1..{MAX_CHAIN}, got {n}")
        prev = 0
        for i, v in enumerate(vals):
            if not isinstance(v, int):
                raise EndoError(f"image at index {i} is not an integer: {v!r}", index=i)
            if not 0 <= v <= n - 1:
                raise EndoError(
                    f"image {v} at index {i} outside chain 0..{n - 1}", index=i
                )
            if v < prev:
                raise EndoError(
                    f"monotonicity violation at index {i}: {v} < {prev}", index=i
                )
            prev = v
        return bytes.__new__(cls, vals)

    @classmethod
    def _wrap(cls, raw: bytes) -> "Endo":
        # trusted fast path: raw is already a valid image tuple
        return bytes.__new__(cls, raw)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __add__(self, other: "Endo") -> "Endo":  # type: ignore[override]
        return add(self, other)

    def __radd__(self, other):
        return NotImplemented

    def __mul__(self, other: "Endo") -> "Endo":  # type: ignore[override]
        return compose(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, m: int) -> "Endo":
        return power(self, m)

    def pointwise_le(self, other: "Endo") -> bool:
        """Whether self(x) <= other(x) at every point (the semiring order)."""
        return len(self) == len(other) and all(u <= v for u, v in zip(self, other))

    def __str__(self) -> str:
        return format_endo(self)

    def __repr__(self) -> str:
        return f"Endo({format_endo(self)!r})"


class OmegaPower(NamedTuple):
    """The unique idempotent power of an endomorphism and its least exponent."""

    endo: Endo
    index: int


def make_endo(n: int, images: Iterable[int]) -> Endo:
    """Validate an image sequence of declared length n and wrap it."""
    vals = tuple(images)
    if len(vals) != n:
        raise EndoError(f"expected {n} images, got {len(vals)}", index=min(n, len(vals)))
    return Endo(vals)


def identity(n: int) -> Endo:
    return Endo(range(n))


def constant(n: int, k: int) -> Endo:
    if not 0 <= k <= n - 1:
        raise EndoError(f"constant value {k} outside chain 0..{n - 1}")
    return Endo([k] * n)


def k_plus(n: int, k: int) -> Endo:
    """Identity except position k is lifted to k+1; needs k <= n-2."""
    if not 0 <= k <= n - 2:
        raise EndoError(f"k_plus needs 0 <= k <= {n - 2}, got {k}")
    return Endo([x if x != k else k + 1 for x in range(n)])


def k_minus(n: int, k: int) -> Endo:
    """Identity except position k is dropped to k-1; needs k >= 1."""
    if not 1 <= k <= n - 1:
        raise EndoError(f"k_minus needs 1 <= k <= {n - 1}, got {k}")
    return Endo([x if x != k else k - 1 for x in range(n)])


def _check_same_chain(a: Endo, b: Endo) -> None:
    if len(a) != len(b):
        raise EndoError(f"size mismatch: {len(a)} vs {len(b)}")


def add(a: Endo, b: Endo) -> Endo:
    """Pointwise join: result(x) = max(a(x), b(x)).  Monotone automatically."""
    _check_same_chain(a, b)
    return Endo._wrap(bytes(map(max, a, b)))


def compose(a: Endo, b: Endo) -> Endo:
    """Left-to-right composition: (a * b)(x) = b(a(x))."""
    _check_same_chain(a, b)
    return Endo._wrap(a.translate(bytes(b).ljust(256, b"\x00")))


def power(a: Endo, m: int) -> Endo:
    """m-fold composition of a with itself, m >= 1."""
    if m < 1:
        raise EndoError(f"power exponent must be >= 1, got {m}")
    acc = a
    for _ in range(m - 1):
        acc = compose(acc, a)
    return acc


def is_idempotent(a: Endo) -> bool:
    return compose(a, a) == a


def omega(a: Endo) -> OmegaPower:
    """The unique idempotent power of a and the least exponent reaching it.

    Powers of a monotone chain map stabilize before the n-th step (the
    semigroup is aperiodic), so the loop always terminates with index
    at most n-1 for n >= 2, and 1 for already idempotent maps.
    """
    acc, idx = a, 1
    while not is_idempotent(acc):
        acc = compose(acc, a)
        idx += 1
        if idx > len(a):
            raise AssertionError(f"power stabilization overran chain size for {a!r}")
    return OmegaPower(acc, idx)


def fixed_points(a: Endo) -> tuple[int, ...]:
    """All points x with a(x) = x, increasing."""
    return tuple(x for x, v in enumerate(a) if v == x)


def jump_points(a: Endo) -> tuple[int, ...]:
    """All jump points of a, increasing.

    j >= 1 is a jump point when the graph crosses the diagonal upward
    there: either a(j-1) <= j-1 and a(j) > j, or a(j-1) < j-1 and
    a(j) >= j.
    """
    return tuple(
        j
        for j in range(1, len(a))
        if (a[j - 1] <= j - 1 and a[j] > j) or (a[j - 1] < j - 1 and a[j] >= j)
    )


def parse_endo(text: str) -> Endo:
    """Parse the canonical comma form, or the compact digit form for n <= 10.

    Canonical: comma-separated decimal images, e.g. "2,2,2,5,5,5,5".
    Compact: one digit per image with no separators, e.g. "2225555",
    accepted only when the chain size (= number of digits) is at most 10.
    """
    text = text.strip()
    if not text:
        raise EndoError("empty endomorphism literal")
    if "," in text:
        vals = []
        for i, tok in enumerate(text.split(",")):
            try:
                vals.append(int(tok))
            except ValueError:
                raise EndoError(f"malformed image token {tok!r} at position {i}", index=i)
        return Endo(vals)
    if text.isdigit() and len(text) > 1:
        if len(text) > 10:
            raise EndoError(f"compact digit form limited to n <= 10, got n = {len(text)}")
        return Endo(int(ch) for ch in text)
    try:
        return Endo([int(text)])
    except EndoError:
        raise
    except ValueError:
        raise EndoError(f"malformed endomorphism literal {text!r}")


def format_endo(a: Endo) -> str:
    """Canonical text form: comma-separated decimal images, no whitespace."""
    return ",".join(str(v) for v in a)
