"""Random generators and brute-force oracles shared by the tests."""

import itertools
import random

from braidlift.braid import BraidWord, LabelTuple
from braidlift.perm import Transposition, compose, is_transitive


def all_transpositions(d):
    return [Transposition(a, b) for a, b in itertools.combinations(range(1, d + 1), 2)]


def random_labels(rng: random.Random, d: int, n: int) -> LabelTuple:
    if n < d - 1:
        raise ValueError(f"no transitive {n}-tuple of transpositions in S_{d}")
    ts = all_transpositions(d)
    while True:
        labels = [rng.choice(ts) for _ in range(n)]
        if is_transitive(labels, d):
            return LabelTuple(tuple(labels), d)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord.of(*[(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)])


def brute_force_tuples(d: int, n: int, mu):
    """Every transitive n-tuple of transpositions in S_d with product ``mu`` (oracle)."""
    out = set()
    for labels in itertools.product(all_transpositions(d), repeat=n):
        if not is_transitive(labels, d):
            continue
        p = labels[0].as_permutation(d)
        for t in labels[1:]:
            p = compose(p, t.as_permutation(d))
        if p == mu:
            out.add(LabelTuple(labels, d))
    return out


def relation_words(n: int):
    """Braid relators and cancelling pairs, each equal to the identity in B_n."""
    words = []
    for i in range(1, n):
        words.append(BraidWord.of(i, -i))
        words.append(BraidWord.of(-i, i))
    for i in range(1, n - 1):
        words.append(BraidWord.of(i, i + 1, i, -(i + 1), -i, -(i + 1)))
        words.append(BraidWord.of(i + 1, i, i + 1, -i, -(i + 1), -i))
    for i in range(1, n):
        for j in range(i + 2, n):
            words.append(BraidWord.of(i, j, -i, -j))
    return words


DISC = LabelTuple((Transposition(1, 2), Transposition(2, 3)), 3)
ANNULUS = LabelTuple((Transposition(1, 2), Transposition(1, 2), Transposition(2, 3)), 3)
TORUS = LabelTuple((Transposition(1, 2),) + (Transposition(2, 3),) * 3, 3)
SQUARE = LabelTuple(
    (Transposition(1, 2), Transposition(2, 3), Transposition(3, 4), Transposition(1, 4)), 4
)
