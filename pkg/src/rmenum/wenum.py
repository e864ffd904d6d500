"""Dense weight enumerators with exact integer coefficients.

A distribution over codeword length n is the coefficient vector of
W[z] = sum_i W_i z^i, stored as a tuple of n+1 Python ints so nothing is
ever rounded; coefficients at full scale reach past 2**250.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field


class WeightEnumerator:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != n + 1:
            raise ValueError(f"need {n + 1} coefficients for length {n}")
        if any(c < 0 for c in coeffs):
            raise ValueError("negative coefficient")
        self.n = n
        self.coeffs = coeffs

    @staticmethod
    def zero(n: int) -> "WeightEnumerator":
        return WeightEnumerator(n, (0,) * (n + 1))

    @staticmethod
    def from_pairs(n: int, pairs) -> "WeightEnumerator":
        coeffs = [0] * (n + 1)
        for w, count in pairs:
            if not 0 <= w <= n:
                raise ValueError(f"weight {w} out of range 0..{n}")
            coeffs[w] += count
        return WeightEnumerator(n, coeffs)

    def total(self) -> int:
        return sum(self.coeffs)

    def nonzero_items(self):
        return [(w, c) for w, c in enumerate(self.coeffs) if c]

    def min_weight(self) -> int | None:
        """Smallest nonzero weight with a nonzero count, None if no such entry."""
        for w in range(1, self.n + 1):
            if self.coeffs[w]:
                return w
        return None

    def __eq__(self, other):
        return (
            isinstance(other, WeightEnumerator)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"WeightEnumerator(n={self.n}, {len(self.nonzero_items())} nonzero)"

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if self.n != other.n:
            raise ValueError("length mismatch in addition")
        return WeightEnumerator(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: int) -> "WeightEnumerator":
        if c < 0:
            raise ValueError("negative scale")
        return WeightEnumerator(self.n, tuple(c * a for a in self.coeffs))


def add(a: WeightEnumerator, b: WeightEnumerator) -> WeightEnumerator:
    return a + b


def mul(a: WeightEnumerator, b: WeightEnumerator) -> WeightEnumerator:
    """Product enumerator over length a.n + b.n (convolution of coefficients)."""
    n = a.n + b.n
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj:
                out[i + j] += ai * bj
    return WeightEnumerator(n, out)


def square(a: WeightEnumerator) -> WeightEnumerator:
    return mul(a, a)


def scale(a: WeightEnumerator, c: int) -> WeightEnumerator:
    return a.scale(c)


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self) -> list[str]:
        out = []
        for name, ok, detail in self.checks:
            line = f"{'PASS' if ok else 'FAIL'} {name}"
            if detail:
                line += f": {detail}"
            out.append(line)
        return out


def validate_code_enumerator(a: WeightEnumerator, expect_all_ones: bool = True) -> ValidationReport:
    """Sanity checks every linear-code distribution must satisfy.

    Symmetry W_i = W_{n-i} is only demanded when the all-ones word is
    claimed to be in the code (true for every Reed-Muller code).
    """
    report = ValidationReport()
    report.record("W_0 = 1", a.coeffs[0] == 1, f"W_0 = {a.coeffs[0]}")
    total = a.total()
    report.record(
        "total is a power of two",
        total > 0 and total & (total - 1) == 0,
        f"total = {total}",
    )
    if expect_all_ones:
        report.record("W_n = 1", a.coeffs[a.n] == 1, f"W_n = {a.coeffs[a.n]}")
        sym = all(a.coeffs[i] == a.coeffs[a.n - i] for i in range(a.n + 1))
        report.record("symmetric about n/2", sym)
    return report


def write_distribution(target, a: WeightEnumerator, comments=(), folded: bool = False):
    """Write "weight count" lines in decimal, nonzero entries only.

    The header carries "# n <length>" so the exact coefficient vector
    round-trips even when trailing weights have count zero; extra comment
    lines supplied by the caller follow it. With folded=True only weights
    <= n/2 are written and "# folded" marks the file; the reader restores
    the symmetric half.
    """
    own = not hasattr(target, "write")
    fh = open(target, "w") if own else target
    try:
        fh.write(f"# n {a.n}\n")
        if folded:
            fh.write("# folded\n")
        for line in comments:
            fh.write(f"# {line}\n")
        for w, c in a.nonzero_items():
            if folded and 2 * w > a.n:
                continue
            fh.write(f"{w} {c}\n")
    finally:
        if own:
            fh.close()


def read_distribution(source) -> WeightEnumerator:
    own = not hasattr(source, "read")
    fh = open(source) if own else source
    try:
        n = None
        folded = False
        pairs = []
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                fields = line[1:].split()
                if len(fields) == 2 and fields[0] == "n":
                    n = int(fields[1])
                elif fields == ["folded"]:
                    folded = True
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"bad distribution line {line!r}")
            pairs.append((int(fields[0]), int(fields[1])))
    finally:
        if own:
            fh.close()
    if n is None:
        if not pairs:
            raise ValueError("no data and no '# n' header")
        n = max(w for w, _ in pairs)
    coeffs = [0] * (n + 1)
    for w, c in pairs:
        if not 0 <= w <= n:
            raise ValueError(f"weight {w} outside 0..{n}")
        if coeffs[w]:
            raise ValueError(f"duplicate weight {w}")
        coeffs[w] = c
    if folded:
        for w in range(n // 2 + 1):
            mate = n - w
            if mate == w:
                continue
            if coeffs[mate] and coeffs[mate] != coeffs[w]:
                raise ValueError(f"folded file sets weight {mate} twice")
            coeffs[mate] = coeffs[w]
    return WeightEnumerator(n, coeffs)


def distribution_text(a: WeightEnumerator, comments=(), folded: bool = False) -> str:
    buf = io.StringIO()
    write_distribution(buf, a, comments=comments, folded=folded)
    return buf.getvalue()


def polynomial_text(a: WeightEnumerator) -> str:
    """Render as a polynomial in z, e.g. "1 + 14z^4 + z^8"."""
    terms = []
    for w, c in a.nonzero_items():
        if w == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(f"z^{w}")
        else:
            terms.append(f"{c}z^{w}")
    return " + ".join(terms) if terms else "0"
