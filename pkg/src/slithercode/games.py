"""Chance-game simulators whose stopping values mirror tree parameters.

The dice game throws an n-sided die and stops at the first throw count a
where the number of distinct faces reaches n - a; by the codec bijection
the stop value is distributed exactly like the independence number of a
uniform random rooted tree on n vertices.  Card-deck variants restrict the
multiset of symbols (a deck with d_v copies of v conditions on out-degree
profile d), covering uniform full binary trees, left/right binary trees,
and plane trees.

Reproducibility contract: a trial is a pure function of (master seed,
trial index).  Each index gets its own PCG64 stream derived through a
splitmix64 mix, so histograms are identical for any thread count and can
be merged across runs in any order.
"""

from __future__ import annotations

import secrets
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codec import SlitherCode, prefix_alpha, prufer_decode, slither_decode
from .trees import NORMAL, RootedTree, Variant

_MASK64 = (1 << 64) - 1


def _mix64(seed: int, index: int) -> int:
    # splitmix64 output function; decorrelates consecutive trial indices
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class RandomSource:
    """Master seed from which independent per-trial generators are derived."""

    seed: int

    def trial_rng(self, index: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(_mix64(self.seed, index)))


def fresh_seed() -> int:
    return secrets.randbits(63)


def coupon_read(sequence, n: int) -> int:
    """First a with distinct(sequence[:a]) >= n - a.

    Same rule, same implementation as the read_alpha codec operation; the
    equality of game value and independence read is the point, not an
    accident.
    """
    return prefix_alpha(sequence, n)


def dice_trial(n: int, rng: np.random.Generator) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    throws = rng.integers(1, n + 1, size=n - 1)
    return coupon_read(throws, n)


@dataclass(frozen=True)
class Deck:
    """Card deck with multiplicities[v-1] copies of card v, v in 1..n.

    A valid deck of n-1 cards is the out-degree profile of some rooted tree
    on n vertices; dealing it shuffled and applying the coupon rule samples
    the independence number of a uniform tree with that profile... summed
    over profiles this is again the dice game.
    """

    n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(m) for m in self.multiplicities)
        object.__setattr__(self, "multiplicities", mult)
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if len(mult) != self.n:
            raise ValueError(f"need one multiplicity per card 1..{self.n}, got {len(mult)}")
        if any(m < 0 for m in mult):
            raise ValueError("negative multiplicity")
        if sum(mult) != self.n - 1:
            raise ValueError(f"deck must hold n-1={self.n - 1} cards, got {sum(mult)}")

    def cards(self) -> np.ndarray:
        """Canonical sorted expansion; shuffles start from this order."""
        return np.repeat(np.arange(1, self.n + 1), self.multiplicities)

    @classmethod
    def for_tree(cls, tree: RootedTree) -> "Deck":
        mult = [0] * tree.n
        for p in tree.parent.values():
            mult[p - 1] += 1
        return cls(n=tree.n, multiplicities=tuple(mult))

    @classmethod
    def full_binary(cls, m: int) -> "Deck":
        """Two cards of each of 1..m, none of m+1..2m+1; n = 2m+1."""
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        return cls(n=2 * m + 1, multiplicities=(2,) * m + (0,) * (m + 1))


def card_trial(deck: Deck, rng: np.random.Generator) -> int:
    if deck.n == 1:
        return 1
    return coupon_read(rng.permutation(deck.cards()), deck.n)


def full_binary_trial(m: int, rng: np.random.Generator) -> int:
    return card_trial(Deck.full_binary(m), rng)


def binary_lr_trial(n: int, rng: np.random.Generator) -> int:
    """Deck of 2n cards (v, left/right side), deal n-1, sides ignored.

    Models uniform binary trees with distinguished left/right children; the
    n+1 undealt cards are the free attachment slots.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    perm = rng.permutation(2 * n)
    ids = perm[: n - 1] // 2 + 1
    return coupon_read(ids, n)


def plane_trial(n: int, rng: np.random.Generator) -> int:
    """Shuffle n numbered red cards into n black cards.

    Red card j gets label b_j = number of black cards before it; the
    coupon rule on (b_1, ..., b_{n-1}) samples the independence number of
    a uniform plane tree.  Labels repeat exactly when reds are adjacent,
    which is the only structure the read needs.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    perm = rng.permutation(2 * n)
    is_black = perm >= n
    blacks_before = np.cumsum(is_black) - is_black
    labels = np.empty(n, dtype=np.int64)
    labels[perm[~is_black]] = blacks_before[~is_black]
    return coupon_read(labels[: n - 1], n)


def sample_uniform_rooted_tree(n: int, variant: Variant = NORMAL,
                               rng: np.random.Generator | None = None) -> RootedTree:
    """Exactly uniform over the n^(n-1) rooted labelled trees.

    Uniform symbols -> uniform trees, by bijectivity; the variant changes
    which tree a given symbol draw maps to but not the distribution.
    """
    if rng is None:
        rng = RandomSource(fresh_seed()).trial_rng(0)
    symbols = () if n == 1 else tuple(int(s) for s in rng.integers(1, n + 1, size=n - 1))
    return slither_decode(SlitherCode(n=n, variant=variant, symbols=symbols))


def sample_uniform_labelled_tree(n: int, rng: np.random.Generator | None = None):
    """Uniform unrooted labelled tree as a sorted edge list, via Prufer."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if rng is None:
        rng = RandomSource(fresh_seed()).trial_rng(0)
    if n == 1:
        return []
    return prufer_decode(rng.integers(1, n + 1, size=n - 2))


@dataclass(frozen=True)
class TrialHistogram:
    """Counts of a trial statistic, tagged with its provenance."""

    parameter: str
    n: int
    trials: int
    seed: int
    counts: dict[int, int]

    def probabilities(self) -> dict[int, float]:
        return {v: c / self.trials for v, c in sorted(self.counts.items())}

    def mean(self) -> float:
        return sum(v * c for v, c in self.counts.items()) / self.trials

    def variance(self) -> float:
        mu = self.mean()
        return sum(c * (v - mu) ** 2 for v, c in self.counts.items()) / self.trials

    def merge(self, other: "TrialHistogram") -> "TrialHistogram":
        """Combine disjoint runs.  Associative and order-independent."""
        if (self.parameter, self.n) != (other.parameter, other.n):
            raise ValueError("histograms describe different experiments")
        counts = Counter(self.counts)
        counts.update(other.counts)
        seed = self.seed if self.seed == other.seed else min(self.seed, other.seed)
        return TrialHistogram(parameter=self.parameter, n=self.n,
                              trials=self.trials + other.trials, seed=seed,
                              counts=dict(sorted(counts.items())))

    __add__ = merge

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "parameter": self.parameter,
            "trials": self.trials,
            "seed": self.seed,
            "counts": {str(v): c for v, c in sorted(self.counts.items())},
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TrialHistogram":
        return cls(parameter=str(d["parameter"]), n=int(d["n"]), trials=int(d["trials"]),
                   seed=int(d["seed"]),
                   counts={int(v): int(c) for v, c in d["counts"].items()})


def run_trials(trial, trials: int, seed: int, *, n: int, parameter: str,
               threads: int | None = None) -> TrialHistogram:
    """Tally trial(rng) over independent per-index generators.

    threads splits the index range into contiguous chunks; results do not
    depend on the split.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    source = RandomSource(seed)

    def chunk(lo: int, hi: int) -> Counter:
        c: Counter = Counter()
        for i in range(lo, hi):
            c[trial(source.trial_rng(i))] += 1
        return c

    if not threads or threads <= 1 or trials < 2 * threads:
        counts = chunk(0, trials)
    else:
        bounds = [trials * k // threads for k in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(chunk, bounds[:-1], bounds[1:]))
        counts = Counter()
        for p in parts:
            counts.update(p)
    return TrialHistogram(parameter=parameter, n=n, trials=trials, seed=seed,
                          counts=dict(sorted(counts.items())))


def _counts_and_total(dist):
    counts = getattr(dist, "counts", dist)
    if not counts:
        raise ValueError("empty distribution")
    total = sum(counts.values())
    if total <= 0:
        raise ValueError("distribution has no mass")
    return counts, total


def tv_distance(a, b) -> float:
    """Total variation distance between two count distributions.

    Accepts TrialHistogram, DistributionTable, or any value -> count map;
    each side is normalized by its own total.
    """
    ca, ta = _counts_and_total(a)
    cb, tb = _counts_and_total(b)
    support = set(ca) | set(cb)
    acc = Fraction(0)
    for v in support:
        acc += abs(Fraction(ca.get(v, 0), ta) - Fraction(cb.get(v, 0), tb))
    return float(acc) / 2


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    threshold: float
    significance: float
    ok: bool


def chi_square(hist: TrialHistogram, exact, significance: float = 0.99) -> ChiSquareResult:
    """Goodness of fit of sampled counts against an exact distribution.

    Cells are pooled in value order until each expected count reaches 5,
    the usual validity floor.  The verdict compares the statistic to the
    chi-square quantile at the given significance (Wilson-Hilferty
    approximation, fine at these dof).
    """
    counts, total = _counts_and_total(exact)
    support = sorted(set(hist.counts) | set(counts))
    expected = {v: hist.trials * counts.get(v, 0) / total for v in support}

    buckets = []  # (observed, expected) after pooling
    acc_o, acc_e = 0, 0.0
    for v in support:
        acc_o += hist.counts.get(v, 0)
        acc_e += expected[v]
        if acc_e >= 5.0:
            buckets.append((acc_o, acc_e))
            acc_o, acc_e = 0, 0.0
    if acc_o or acc_e:
        if buckets:
            o, e = buckets.pop()
            buckets.append((o + acc_o, e + acc_e))
        else:
            buckets.append((acc_o, acc_e))

    stat = 0.0
    for o, e in buckets:
        if e == 0:
            stat = float("inf") if o else stat
            continue
        stat += (o - e) ** 2 / e
    # an observed value the law forbids must reject no matter how the cells
    # pooled; merging it into a wide cell would otherwise mask it
    if any(o and counts.get(v, 0) == 0 for v, o in hist.counts.items()):
        stat = float("inf")
    dof = max(len(buckets) - 1, 1)

    # Wilson-Hilferty inverse chi-square
    z = {0.95: 1.6448536269514722, 0.99: 2.3263478740408408,
         0.999: 3.090232306167813}.get(significance)
    if z is None:
        raise ValueError(f"unsupported significance {significance}")
    h = 2.0 / (9.0 * dof)
    threshold = dof * (1.0 - h + z * h ** 0.5) ** 3
    return ChiSquareResult(statistic=stat, dof=dof, threshold=threshold,
                           significance=significance, ok=stat <= threshold)
