"""Succession rules and exact level-by-level counting.

The generating tree is never materialised: counting pushes a distribution of
labels (label -> arbitrary-precision count) through the succession rule one
level at a time, so memory is proportional to the number of distinct labels
per level.

Label conventions (k below is always the *forbidden* nesting size):
  * partitions / enhanced partitions: tuple (s_0, ..., s_{k-2}) with
    s_0 >= s_1 >= ... >= 0; s_0 is the number of semi-arcs.
  * permutations: (h, r, s) with r and s tuples of length k-2 and
    h >= r_1 >= ... >= 0, h >= s_1 >= ... >= 0.
  * unconstrained open diagrams: the plain integer number of (upper)
    semi-arcs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import diagrams
from .diagrams import OpenPartitionDiagram, OpenPermutationDiagram
from .errors import ResourceLimitError

__all__ = [
    "FamilySpec",
    "LevelDistribution",
    "successors_partition",
    "successors_permutation",
    "count_levels",
    "count_sequence",
    "generate_diagrams",
]

PARTITIONS = "partitions"
PARTITIONS_ENHANCED = "partitions-enhanced"
PERMUTATIONS = "permutations"
OPEN_PARTITIONS = "open-partitions"
OPEN_PERMUTATIONS = "open-permutations"

CONSTRAINED_FAMILIES = (PARTITIONS, PARTITIONS_ENHANCED, PERMUTATIONS)
UNCONSTRAINED_FAMILIES = (OPEN_PARTITIONS, OPEN_PERMUTATIONS)
FAMILIES = CONSTRAINED_FAMILIES + UNCONSTRAINED_FAMILIES


@dataclass(frozen=True)
class FamilySpec:
    """Selects a succession rule: a family plus the forbidden nesting size."""

    family: str
    k: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in CONSTRAINED_FAMILIES:
            if self.k is None or self.k < 2:
                raise ValueError("constrained families need k >= 2")
        elif self.k is not None:
            raise ValueError("unconstrained families take no k")

    def root_label(self):
        if self.family == PARTITIONS or self.family == PARTITIONS_ENHANCED:
            return (0,) * (self.k - 1)
        if self.family == PERMUTATIONS:
            zeros = (0,) * (self.k - 2)
            return (0, zeros, zeros)
        return 0

    def is_closed_label(self, label):
        """True for the label of diagrams with no semi-arcs."""
        if self.family == PERMUTATIONS:
            return label[0] == 0
        if self.family in (PARTITIONS, PARTITIONS_ENHANCED):
            return label[0] == 0
        return label == 0

    def successors(self, label):
        if self.family == PARTITIONS:
            return successors_partition(label)
        if self.family == PARTITIONS_ENHANCED:
            return successors_partition(label, enhanced=True)
        if self.family == PERMUTATIONS:
            return successors_permutation(label)
        if self.family == OPEN_PARTITIONS:
            return _successors_open_partition(label)
        return _successors_open_permutation(label)


@dataclass
class LevelDistribution:
    """Exact multiset of labels at one level of a generating tree."""

    level: int
    entries: dict = field(default_factory=dict)

    def total(self):
        return sum(self.entries.values())

    def count_of(self, label):
        return self.entries.get(label, 0)

    def to_json_dict(self):
        return {
            "n": self.level,
            "labels": [
                {"label": _label_to_json(label), "count": str(count)}
                for label, count in sorted(self.entries.items(), key=_label_sort_key)
            ],
        }


def _label_to_json(label):
    if isinstance(label, int):
        return [label]
    if len(label) == 3 and isinstance(label[1], tuple):
        h, r, s = label
        return [h, list(r), list(s)]
    return list(label)


def _label_sort_key(item):
    return _flatten(item[0])


def _flatten(label):
    if isinstance(label, int):
        return (label,)
    if len(label) == 3 and isinstance(label[1], tuple):
        h, r, s = label
        return (h,) + r + s
    return tuple(label)


def successors_partition(label, enhanced=False):
    """Children multiset of a partition label under the succession rule.

    Rules, for a label [s_0, ..., s_{k-1}] of a (k+1)-nonnesting open
    partition diagram:
      (1) fixed point: label unchanged (enhanced: s_1 becomes s_0);
      (2) semi-opener: s_0 + 1;
      (3) semi-transitory closing a semi-arc of index j-1 < k-1:
          [s_0, s_1-1, ..., s_{j-1}-1, i, s_{j+1}, ...] for s_j <= i <= s_{j-1}-1;
      (4) closer, same with s_0 - 1;
      (5) if s_{k-1} > 0, the semi-transitory and closer that close the top
          semi-arc: all of s_1..s_{k-1} decrement.
    """
    k = len(label)
    s0 = label[0]
    children = Counter()
    # (1) fixed point
    if enhanced:
        if k >= 2:
            children[(s0, s0) + label[2:]] += 1
        elif s0 == 0:
            children[label] += 1
    else:
        children[label] += 1
    # (2) semi-opener
    children[(s0 + 1,) + label[1:]] += 1
    # (3) semi-transitory and (4) closer
    for j in range(1, k):
        prefix = tuple(x - 1 for x in label[1:j])
        rest = label[j + 1 :]
        for i in range(label[j], label[j - 1]):
            children[(s0,) + prefix + (i,) + rest] += 1
            children[(s0 - 1,) + prefix + (i,) + rest] += 1
    # (5) closing the top semi-arc of a future k-nesting
    if label[k - 1] > 0:
        dec = tuple(x - 1 for x in label[1:])
        children[(s0,) + dec] += 1
        children[(s0 - 1,) + dec] += 1
    return children


def _closing_options(h, vec):
    """Vectors reachable by closing one (upper or lower) semi-arc.

    vec is (r_1, ..., r_{k-1}) with the convention r_0 = h.  Closing a
    semi-arc of nesting index j-1 bumps the index of the same-index
    semi-arcs outside it, giving the ranged rules (3b)/(4b); closing the
    outermost semi-arc of a future k-nesting (allowed only for the
    outermost) decrements the whole vector, rules (3a)/(4a).
    """
    ext = (h,) + vec
    options = []
    for j in range(1, len(ext)):
        prefix = tuple(x - 1 for x in vec[: j - 1])
        rest = vec[j:]
        for i in range(ext[j], ext[j - 1]):
            options.append(prefix + (i,) + rest)
    if ext[-1] >= 1:
        options.append(tuple(x - 1 for x in vec))
    return options


def successors_permutation(label):
    """Children multiset of a permutation label (h, r, s).

    Closer children are the Cartesian product of the allowed upper and lower
    closings.  A fixed point sets r_1 to h (all upper semi-arcs join a
    future enhanced 2-nesting); for length-1 labels it is only allowed when
    h = 0.
    """
    h, r, s = label
    children = Counter()
    # (1) fixed point
    if r:
        children[(h, (h,) + r[1:], s)] += 1
    elif h == 0:
        children[label] += 1
    # (2) semi-opener
    children[(h + 1, r, s)] += 1
    upper = _closing_options(h, r)
    lower = _closing_options(h, s)
    # (3) upper semi-transitory
    for r2 in upper:
        children[(h, r2, s)] += 1
    # (4) lower semi-transitory
    for s2 in lower:
        children[(h, r, s2)] += 1
    # (5) closer
    for r2 in upper:
        for s2 in lower:
            children[(h - 1, r2, s2)] += 1
    return children


def _successors_open_partition(m):
    # (2m): fixed point, semi-opener, m semi-transitories, m closers
    children = Counter({m: m + 1, m + 1: 1})
    if m > 0:
        children[m - 1] = m
    return children


def _successors_open_permutation(m):
    children = Counter({m: 2 * m + 1, m + 1: 1})
    if m > 0:
        children[m - 1] = m * m
    return children


def count_levels(spec, n_max, max_labels=None):
    """Label distributions for levels 0..n_max.

    Deterministic: labels are merged in lexicographic order.  `max_labels`
    bounds the number of distinct labels per level; exceeding it raises
    ResourceLimitError carrying the level reached.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if spec.family == PERMUTATIONS:
        push = _PermutationPusher().push
    else:
        push = _GenericPusher(spec).push
    levels = [LevelDistribution(0, {spec.root_label(): 1})]
    current = levels[0].entries
    for n in range(1, n_max + 1):
        nxt = push(current)
        if max_labels is not None and len(nxt) > max_labels:
            raise ResourceLimitError(
                f"label budget {max_labels} exceeded at level {n}", reached=n - 1
            )
        levels.append(LevelDistribution(n, nxt))
        current = nxt
    return levels


class _GenericPusher:
    """One-level push for families whose rule is applied label by label."""

    def __init__(self, spec):
        self.spec = spec
        self.cache = {}

    def push(self, current):
        nxt = {}
        for label in sorted(current, key=_flatten):
            count = current[label]
            children = self.cache.get(label)
            if children is None:
                children = list(self.spec.successors(label).items())
                self.cache[label] = children
            for child, mult in children:
                nxt[child] = nxt.get(child, 0) + count * mult
        return nxt


class _PermutationPusher:
    """One-level push for permutation labels.

    Closers are the Cartesian product of upper and lower closings, so a
    direct push costs |upper| * |lower| per label.  Splitting the closer
    into close-the-upper-semi-arc followed by close-the-lower-semi-arc
    makes each level linear in |upper| + |lower| per label, which is what
    makes the deeper permutation tables tractable.
    """

    def __init__(self):
        self.options = {}

    def _closings(self, h, vec):
        key = (h, vec)
        opts = self.options.get(key)
        if opts is None:
            opts = _closing_options(h, vec)
            self.options[key] = opts
        return opts

    def push(self, current):
        nxt = {}
        half_closed = {}
        for label in sorted(current, key=_flatten):
            count = current[label]
            h, r, s = label
            if r:
                fp = (h, (h,) + r[1:], s)
                nxt[fp] = nxt.get(fp, 0) + count
            elif h == 0:
                nxt[label] = nxt.get(label, 0) + count
            op = (h + 1, r, s)
            nxt[op] = nxt.get(op, 0) + count
            for r2 in self._closings(h, r):
                child = (h, r2, s)
                nxt[child] = nxt.get(child, 0) + count
                half_closed[child] = half_closed.get(child, 0) + count
            for s2 in self._closings(h, s):
                child = (h, r, s2)
                nxt[child] = nxt.get(child, 0) + count
        for (h, r2, s), count in half_closed.items():
            for s2 in self._closings(h, s):
                child = (h - 1, r2, s2)
                nxt[child] = nxt.get(child, 0) + count
        return nxt


def count_sequence(spec, n_max, max_labels=None):
    """a(1..n_max): closed objects (all-zero label) per level."""
    levels = count_levels(spec, n_max, max_labels=max_labels)
    root = spec.root_label()
    return [levels[n].count_of(root) for n in range(1, n_max + 1)]


def _walk_family(spec):
    if spec.family in (PARTITIONS, OPEN_PARTITIONS):
        return OpenPartitionDiagram(0), diagrams.PARTITION, spec.k
    if spec.family == PARTITIONS_ENHANCED:
        return OpenPartitionDiagram(0), diagrams.PARTITION_ENHANCED, spec.k
    return OpenPermutationDiagram(0), diagrams.PERMUTATION, spec.k


def generate_diagrams(spec, n, closed_only=False):
    """Depth-first stream of every k-nonnesting open diagram of size n.

    Each diagram is emitted exactly once, in the deterministic step order of
    `legal_steps`.  With closed_only, only diagrams without semi-arcs (true
    set partitions / permutations) are emitted.
    """
    root, family, k = _walk_family(spec)

    def walk(d, depth):
        if depth == n:
            if not closed_only or _is_closed(d):
                yield d
            return
        for step in diagrams.legal_steps(d, k, family):
            yield from walk(diagrams.apply_step(d, step), depth + 1)

    yield from walk(root, 0)


def _is_closed(d):
    if isinstance(d, OpenPermutationDiagram):
        return not d.upper_open and not d.lower_open
    return not d.open_arcs
