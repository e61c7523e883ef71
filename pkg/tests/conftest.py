"""Shared random generators for the test suite.

Random Seifert matrices are built by writing down a matrix whose skew
part is exactly the standard symplectic form (hyperbolic blocks on the
diagonal, symmetric noise everywhere) and then conjugating by a random
unimodular transform, so every sample is a valid Seifert matrix and the
samples are not all congruence-normalized.
"""

from slicebound import SeifertMatrix, UnimodularTransform, apply_congruence


def random_unimodular(rng, n):
    """Random determinant +-1 integer matrix from elementary moves."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(10, 30)):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.7:
            c = rng.choice([-2, -1, 1, 2])
            for r in range(n):
                rows[r][j] += c * rows[r][i]
        else:
            for r in range(n):
                rows[r][i], rows[r][j] = rows[r][j], rows[r][i]
    return UnimodularTransform(tuple(map(tuple, rows)))


def random_seifert(rng, g):
    """Random valid Seifert matrix of size 2g."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i + 1][2 * i] = 1
    for i in range(n):
        for j in range(i + 1):
            v = rng.randint(-2, 2)
            rows[i][j] += v
            if j != i:
                rows[j][i] += v
    m = SeifertMatrix.from_rows(rows)
    return apply_congruence(m, random_unimodular(rng, n))


def random_knot_braids(rng, count, max_strands=4, max_letters=10):
    """Random braid words whose closures are knots, with all generators used."""
    from slicebound import BraidWord, closure_component_count

    words = []
    while len(words) < count:
        n = rng.randint(2, max_strands)
        length = rng.randint(n, max_letters)
        letters = [
            rng.randint(1, n - 1) * rng.choice([1, -1]) for _ in range(length)
        ]
        if set(abs(x) for x in letters) != set(range(1, n)):
            continue
        b = BraidWord(n, tuple(letters))
        if closure_component_count(b) != 1:
            continue
        words.append(b)
    return words
