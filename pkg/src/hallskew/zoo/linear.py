"""PSL(d, q) and PSL(d, q):<phi> acting on projective points.

Vectors are row vectors and matrices act on the right, ``v -> vA``, which
matches the left-to-right permutation product.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from hallskew.groups import PermGroup
from hallskew.numth import check_linear_hypothesis, psl_order, singer_order
from hallskew.perm import Permutation
from hallskew.zoo.field import Field, field

Matrix = tuple  # tuple of row tuples


class ProjectiveSpace:
    """Normalized points of PG(d-1, q), sorted lexicographically.

    A point is normalized when its first nonzero coordinate is 1.
    """

    def __init__(self, d: int, F: Field):
        self.d, self.F = d, F
        pts = []
        for lead in range(d):
            for tail in product(range(F.q), repeat=d - lead - 1):
                pts.append((0,) * lead + (1,) + tail)
        pts.sort()
        self.points = pts
        self.index = {v: i for i, v in enumerate(pts)}

    def __len__(self) -> int:
        return len(self.points)

    def normalize(self, v) -> tuple:
        F = self.F
        for c in v:
            if c:
                if c == 1:
                    return tuple(v)
                ci = F.inv(c)
                return tuple(F.mul(ci, x) for x in v)
        raise ValueError("zero vector")

    def vec_mat(self, v, A: Matrix) -> tuple:
        F = self.F
        out = []
        for j in range(self.d):
            acc = 0
            for i in range(self.d):
                if v[i] and A[i][j]:
                    acc = F.add(acc, F.mul(v[i], A[i][j]))
            out.append(acc)
        return tuple(out)

    def perm_of_map(self, fn) -> Permutation:
        idx = self.index
        return Permutation([idx[self.normalize(fn(v))] for v in self.points])

    def perm_of_matrix(self, A: Matrix) -> Permutation:
        return self.perm_of_map(lambda v: self.vec_mat(v, A))


@lru_cache(maxsize=None)
def projective_space(d: int, q: int) -> ProjectiveSpace:
    return ProjectiveSpace(d, field(q))


def _identity_matrix(d: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(d)] for i in range(d)]


def _freeze(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def sl_generators(d: int, F: Field, scalars: list[int], prim: int) -> list[Matrix]:
    """Transvections I + t*E_12 (t over ``scalars``), a signed d-cycle, and diag(w, 1/w).

    With ``scalars`` an additive basis of a subfield and ``prim`` its
    primitive element these generate SL(d, subfield).
    """
    gens = []
    for t in scalars:
        A = _identity_matrix(d)
        A[0][1] = t
        gens.append(_freeze(A))
    M = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        M[i][i + 1] = 1
    # a d-cycle has sign (-1)^(d-1); fix the determinant to 1
    M[d - 1][0] = 1 if d % 2 else F.neg(1)
    gens.append(_freeze(M))
    if prim != 1:
        D = _identity_matrix(d)
        D[0][0] = prim
        D[1][1] = F.inv(prim)
        gens.append(_freeze(D))
    return gens


def _psl_unchecked(d: int, q: int) -> PermGroup:
    """PSL(d, q) on projective points without the hypothesis check.

    Only valid as PSL when scalars act trivially on points, which is
    always the case for the action on PG(d-1, q).
    """
    P = projective_space(d, q)
    F = P.F
    gens = [P.perm_of_matrix(A) for A in sl_generators(d, F, F.subfield_basis(q), F.gen)]
    G = PermGroup(gens, len(P), name=f"PSL({d},{q})")
    if G.order != psl_order(d, q):
        raise AssertionError(f"PSL({d},{q}) generators give order {G.order}, expected {psl_order(d, q)}")
    return G


def psl(d: int, q: int) -> PermGroup:
    check_linear_hypothesis(d, q)
    return _psl_unchecked(d, q)


def _least_primitive_extension(d: int, F: Field) -> tuple[int, ...]:
    """Lower coefficients of the least monic degree-d polynomial over F whose root has order q^d - 1."""
    q = F.q
    target = q**d - 1
    for code in range(q**d):
        low = []
        c = code
        for _ in range(d):
            c, r = divmod(c, q)
            low.append(r)
        if low[0] == 0:
            continue
        one = (1,) + (0,) * (d - 1)
        v = one
        for n in range(1, target + 1):
            v = _times_y(v, low, F)
            if v == one:
                break
        if n == target and v == one:
            return tuple(low)
    raise AssertionError(f"no primitive degree-{d} polynomial over GF({q})")


def _times_y(v, low, F: Field) -> tuple:
    top = v[-1]
    out = [0] + list(v[:-1])
    if top:
        out = [F.sub(a, F.mul(top, c)) for a, c in zip(out, low)]
    return tuple(out)


def singer_cycle(d: int, q: int) -> Permutation:
    """Multiplication by a primitive element of GF(q^d), on points of PG(d-1, q).

    GF(q^d) is GF(q)[y]/(g) with g the least primitive polynomial; the
    coordinates of a point are the coefficients of 1, y, ..., y^(d-1).
    """
    check_linear_hypothesis(d, q)
    P = projective_space(d, q)
    low = _least_primitive_extension(d, P.F)
    s = P.perm_of_map(lambda v: _times_y(v, low, P.F))
    assert s.order() == singer_order(d, q)
    return s


def frobenius_perm(d: int, q: int, q0: int) -> Permutation:
    """Coordinatewise x -> x^q0 on PG(d-1, q)."""
    P = projective_space(d, q)
    F = P.F
    return P.perm_of_map(lambda v: tuple(F.pow(x, q0) for x in v))


def psl_sigma(d: int, q0: int) -> tuple[PermGroup, Permutation]:
    """PSL(d, q0^2):<phi> with phi the Frobenius of order 2."""
    q = q0 * q0
    check_linear_hypothesis(d, q)
    T = psl(d, q)
    phi = frobenius_perm(d, q, q0)
    assert (phi * phi).is_identity() and not phi.is_identity()
    G = PermGroup(list(T.generators) + [phi], T.degree, name=f"PSL({d},{q}):<phi>")
    if G.order != 2 * T.order:
        raise AssertionError(f"PSL({d},{q}):<phi> has order {G.order}")
    return G, phi


def subfield_psl(d: int, q0: int) -> PermGroup:
    """PSL(d, q0) inside PSL(d, q0^2), acting on PG(d-1, q0^2)."""
    q = q0 * q0
    P = projective_space(d, q)
    F = P.F
    basis = F.subfield_basis(q0)
    mu = F.exp[(q - 1) // (q0 - 1)] if q0 > 2 else 1
    gens = [P.perm_of_matrix(A) for A in sl_generators(d, F, basis, mu)]
    S = PermGroup(gens, len(P), name=f"PSL({d},{q0})")
    if S.order != psl_order(d, q0):
        raise AssertionError(f"subfield PSL({d},{q0}) has order {S.order}")
    return S
