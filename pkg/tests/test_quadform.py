import random

import pytest

from qinv.diagram import braid_closure, distant_union, parse_braid, unknot
from qinv.quadform import Inertia, inertia, linking_matrix


class TestLinkingMatrix:
    def test_hopf_zero_framed(self):
        hopf = braid_closure(parse_braid("braid 2 : s1 s1"))
        from qinv.diagram import FramedLinkDiagram
        hopf = FramedLinkDiagram(hopf.word, (0, 0))
        assert linking_matrix(hopf) == ((0, 1), (1, 0))

    def test_single_unknot(self):
        assert linking_matrix(unknot(7)) == ((7,),)

    def test_unlink_is_diagonal(self):
        d = distant_union(unknot(3), unknot(-2))
        assert linking_matrix(d) == ((3, 0), (0, -2))


class TestInertia:
    def test_hyperbolic_plane(self):
        assert inertia(((0, 1), (1, 0))) == Inertia(1, 1, 0)

    def test_one_by_one(self):
        assert inertia(((5,),)) == Inertia(1, 0, 0)
        assert inertia(((-3,),)) == Inertia(0, 1, 0)
        assert inertia(((0,),)) == Inertia(0, 0, 1)

    def test_empty(self):
        assert inertia(()) == Inertia(0, 0, 0)

    def test_requires_symmetry(self):
        with pytest.raises(ValueError):
            inertia(((0, 1), (2, 0)))

    def test_known_forms(self):
        # E8-like small pieces and direct sums
        assert inertia(((2, 1), (1, 2))) == Inertia(2, 0, 0)
        assert inertia(((1, 0, 0), (0, -1, 0), (0, 0, 0))) == Inertia(1, 1, 1)
        assert inertia(((0, 2, 0), (2, 0, 0), (0, 0, 3))) == Inertia(2, 1, 0)

    def test_gamma_block_rules(self):
        # appending a hyperbolic block shifts (b+, b-) by (1, 1); appending a
        # zero row/column shifts the nullity by 1.
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(1, 4)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randint(-3, 3)
            base = inertia(tuple(tuple(r) for r in m))

            hyp = [row + [0, 0] for row in m]
            hyp += [[0] * n + [0, 1], [0] * n + [1, 0]]
            got = inertia(tuple(tuple(r) for r in hyp))
            assert got == Inertia(base.b_plus + 1, base.b_minus + 1, base.nullity)

            zr = [row + [0] for row in m] + [[0] * (n + 1)]
            got = inertia(tuple(tuple(r) for r in zr))
            assert got == Inertia(base.b_plus, base.b_minus, base.nullity + 1)

    def test_unimodular_congruence_invariance(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(1, 5)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randint(-4, 4)
            u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            for _ in range(6):  # random elementary integer operations
                i, j = rng.randrange(n), rng.randrange(n)
                if i == j:
                    continue
                c = rng.choice((-2, -1, 1, 2))
                for l in range(n):
                    u[i][l] += c * u[j][l]
            # conj = u^T m u
            mu = [[sum(m[i][l] * u[l][j] for l in range(n)) for j in range(n)]
                  for i in range(n)]
            conj = [[sum(u[l][i] * mu[l][j] for l in range(n)) for j in range(n)]
                    for i in range(n)]
            a = inertia(tuple(tuple(r) for r in m))
            b = inertia(tuple(tuple(r) for r in conj))
            assert a == b
            assert a.dimension == n

    def test_against_float_eigenvalues(self):
        numpy = pytest.importorskip("numpy")
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(1, 5)
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randint(-4, 4)
            eig = numpy.linalg.eigvalsh(numpy.array(m, dtype=float))
            expected = Inertia(int((eig > 1e-8).sum()),
                               int((eig < -1e-8).sum()),
                               int((abs(eig) <= 1e-8).sum()))
            assert inertia(tuple(tuple(r) for r in m)) == expected
