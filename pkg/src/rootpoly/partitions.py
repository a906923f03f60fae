"""Partitions, cells, arm/leg statistics, orderings and reverse tableaux.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros trimmed.  Cells are 1-based ``(row, col)`` pairs.  All
functions are pure; tableaux are immutable values built from a chain of
nested partitions whose consecutive differences are horizontal strips.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize ``parts`` into a trimmed partition tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def n_stat(lam: Partition) -> int:
    """The statistic sum_i (i-1)*lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def staircase(n: int) -> Partition:
    """The partition (n-1, n-2, ..., 1, 0), trimmed."""
    return tuple(range(n - 1, 0, -1))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam: Partition) -> Iterator[Cell]:
    """All cells of the diagram, row by row."""
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield (i, j)


def arm_leg_data(lam: Partition, s: Cell) -> tuple[int, int, int, int]:
    """Arm, leg, arm-colength and leg-colength of cell ``s`` in ``lam``."""
    i, j = s
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {s} outside diagram of {lam}")
    arm = lam[i - 1] - j
    leg = sum(1 for k in range(i, len(lam)) if lam[k] >= j)
    return arm, leg, j - 1, i - 1


def contains(mu: Partition, lam: Partition) -> bool:
    """Whether mu is cellwise included in lam."""
    return all(part(mu, i) <= part(lam, i) for i in range(1, len(mu) + 1))


def dominates(mu: Partition, lam: Partition, n: int) -> bool:
    """Whether mu <= lam for partial sums over 1..n (no equal-weight rule)."""
    acc_mu = acc_lam = 0
    for i in range(1, n + 1):
        acc_mu += part(mu, i)
        acc_lam += part(lam, i)
        if acc_mu > acc_lam:
            return False
    return True


def order_relations(mu: Partition, lam: Partition, n: int) -> tuple[bool, bool]:
    """(containment, dominance) of the pair, both padded to length n."""
    return contains(mu, lam), dominates(mu, lam, n)


def enumerate_partitions(max_weight: int, max_length: int) -> list[Partition]:
    """All partitions of weight <= max_weight and length <= max_length.

    Ordered by weight, then by decreasing lexicographic comparison within
    one weight, so the output is deterministic and each shape appears once.
    """
    if max_weight < 0 or max_length < 1:
        raise ValueError("need max_weight >= 0 and max_length >= 1")
    out = []
    for w in range(max_weight + 1):
        grade = sorted(_partitions_of(w, max_length), reverse=True)
        out.extend(grade)
    return out


@lru_cache(maxsize=None)
def _partitions_of(w: int, max_length: int, cap: int | None = None) -> tuple[Partition, ...]:
    if w == 0:
        return ((),)
    if max_length == 0:
        return ()
    first_max = w if cap is None else min(w, cap)
    acc = []
    for first in range(first_max, 0, -1):
        for rest in _partitions_of(w - first, max_length - 1, first):
            acc.append((first,) + rest)
    return tuple(acc)


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """Whether mu is contained in lam with at most one box per column."""
    if not contains(mu, lam):
        return False
    return all(part(lam, i + 1) <= part(mu, i) for i in range(1, len(lam) + 1))


def r_minus_c(lam: Partition, mu: Partition) -> frozenset[Cell]:
    """Cells of lam in a row meeting lam-mu but in no column meeting it."""
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{lam} - {mu} is not a horizontal strip")
    rows = {i for i in range(1, len(lam) + 1) if part(lam, i) > part(mu, i)}
    cols = {
        j
        for i in rows
        for j in range(part(mu, i) + 1, part(lam, i) + 1)
    }
    return frozenset(
        (i, j) for i in rows for j in range(1, part(lam, i) + 1) if j not in cols
    )


@dataclass(frozen=True)
class ReverseTableau:
    """A reverse tableau encoded by its chain of nested partitions.

    ``chain[k]`` is the shape made of all cells holding entries > k, so
    ``chain[0]`` is the full shape and ``chain[n]`` is empty.  Entries are
    weakly decreasing along rows and strictly decreasing down columns
    exactly when every consecutive difference is a horizontal strip.
    """

    shape: Partition
    n: int
    chain: tuple[Partition, ...]

    def entry(self, s: Cell) -> int:
        for k in range(1, self.n + 1):
            if contains_cell(self.chain[k - 1], s) and not contains_cell(self.chain[k], s):
                return k
        raise ValueError(f"cell {s} outside shape {self.shape}")

    def entries(self) -> dict[Cell, int]:
        return {s: self.entry(s) for s in cells(self.shape)}

    def tableau_weight(self) -> tuple[int, ...]:
        return tuple(
            weight(self.chain[k - 1]) - weight(self.chain[k])
            for k in range(1, self.n + 1)
        )

    def row_word(self) -> tuple[int, ...]:
        ent = self.entries()
        return tuple(ent[s] for s in cells(self.shape))

    def strips(self) -> list[tuple[Partition, Partition]]:
        """(outer, inner) per chain step, outer = shape holding entry k."""
        return [(self.chain[k - 1], self.chain[k]) for k in range(1, self.n + 1)]


def contains_cell(lam: Partition, s: Cell) -> bool:
    i, j = s
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def special_tableau(lam: Partition, n: int) -> ReverseTableau:
    """The tableau with entry n+1-i in row i (weight reverses lam)."""
    if len(lam) > n:
        raise ValueError(f"length of {lam} exceeds n={n}")
    chain = tuple(as_partition(lam[: max(0, n - k)]) for k in range(n + 1))
    return ReverseTableau(shape=lam, n=n, chain=chain)


def _horizontal_substrips(lam: Partition) -> Iterator[Partition]:
    """All mu with mu inside lam and lam - mu a horizontal strip."""
    ranges = [
        range(part(lam, i + 1), part(lam, i) + 1) for i in range(1, len(lam) + 1)
    ]
    for choice in product(*ranges):
        yield as_partition(choice)


def enumerate_reverse_tableaux(lam: Partition, n: int) -> list[ReverseTableau]:
    """All reverse tableaux of shape lam with entries in 1..n.

    Returns the empty list when lam is longer than n.  Output order is
    lexicographic in the row-reading word, which is deterministic.
    """
    if len(lam) > n:
        return []

    acc: list[ReverseTableau] = []

    def descend(chain: list[Partition], k: int) -> None:
        if k == n:
            if chain[-1] == ():
                acc.append(ReverseTableau(shape=lam, n=n, chain=tuple(chain)))
            return
        # entries > k must still fit in n - k distinct values
        for mu in _horizontal_substrips(chain[-1]):
            if len(mu) <= n - k - 1:
                descend(chain + [mu], k + 1)

    descend([lam], 0)
    acc.sort(key=lambda t: t.row_word())
    return acc
