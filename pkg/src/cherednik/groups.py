"""Reflection data for S_n and the dihedral groups G(m,m,2), and the representations tau.

Matrices act on h* = span(x_1..x_n); ``matrix[i][j]`` is the coefficient of
``x_i`` in the image of ``x_j`` (columns are images).  Entries are raw
elements of ``group.field``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .fields import GF, InvalidInput, embed, gf, is_prime, primitive_mth_root


class GroupDataError(AssertionError):
    """Reflection data failed one of its defining identities."""


@dataclass(frozen=True)
class Reflection:
    matrix: tuple          # n x n, action on h*
    alpha: tuple           # coefficients of the root alpha_s in x_1..x_n
    alpha_check: tuple     # coroot in h, as coefficients on the dual basis y_1..y_n
    lam: int               # nontrivial eigenvalue (always -1 here)
    class_id: int
    field: GF
    swap: tuple | None = None   # (i, j, mu): s x_i = mu x_j, s x_j = mu^-1 x_i
    label: str = ""

    @property
    def n(self):
        return len(self.matrix)


# -- small raw-matrix helpers ------------------------------------------------

def mat_mul(F, A, B):
    n, m, l = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(l):
            acc = 0
            for k in range(m):
                if A[i][k] and B[k][j]:
                    acc = F.add(acc, F.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_sub(F, A, B):
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_rank(F, A):
    from .linalg import rank
    return rank(F, [list(r) for r in A]) if A else 0


def mat_inverse(F, A):
    from .linalg import rref_gf
    import numpy as np
    n = len(A)
    aug = np.array([list(r) + list(e) for r, e in zip(A, identity(n))], dtype=np.int64)
    R, piv = rref_gf(F, aug)
    if piv != list(range(n)):
        raise InvalidInput("singular matrix")
    return tuple(tuple(int(x) for x in R[i, n:]) for i in range(n))


def validate_reflection(s: Reflection):
    """Check rank(1-s)=1, (1-s)x_j = <alpha_check, x_j> alpha, s^2 = 1 and s alpha = lam alpha."""
    F, n = s.field, s.n
    one_minus = mat_sub(F, identity(n), s.matrix)
    if mat_rank(F, one_minus) != 1:
        raise GroupDataError(f"{s.label}: rank(1 - s) != 1")
    for j in range(n):
        col = [one_minus[i][j] for i in range(n)]
        expect = [F.mul(s.alpha_check[j], a) for a in s.alpha]
        if col != expect:
            raise GroupDataError(f"{s.label}: (1 - s)x_{j + 1} != <alpha_check, x_{j + 1}> alpha")
    if mat_mul(F, s.matrix, s.matrix) != identity(n):
        raise GroupDataError(f"{s.label}: s^2 != 1")
    image = [F.zero] * n
    for j, a in enumerate(s.alpha):
        for i in range(n):
            image[i] = F.add(image[i], F.mul(s.matrix[i][j], a))
    if image != [F.mul(s.lam, a) for a in s.alpha]:
        raise GroupDataError(f"{s.label}: alpha is not a lambda-eigenvector")


# -- groups ------------------------------------------------------------------

@dataclass(frozen=True)
class ReflectionGroup:
    family: str            # "Sn" or "Dm"
    order_param: int       # n for S_n, m for D_m
    n: int                 # rank (dimension of h)
    field: GF
    reflections: tuple
    num_classes: int
    zeta: int | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def p(self):
        return self.field.p

    def descriptor(self) -> dict:
        if self.family == "Sn":
            d = {"family": "Sn", "n": self.order_param, "p": self.p}
            if self.field.k > 1:
                d["q"] = self.field.q
            return d
        return {"family": "Dm", "m": self.order_param, "p": self.p, "q": self.field.q}

    def name(self):
        return f"{'S' if self.family == 'Sn' else 'D'}_{self.order_param}"

    def classes(self):
        out: dict = {}
        for i, s in enumerate(self.reflections):
            out.setdefault(s.class_id, []).append(i)
        return out

    def elements(self) -> list:
        """All group elements as matrices on h*, by closure under reflections."""
        if "elements" not in self._cache:
            F = self.field
            seen = {identity(self.n)}
            frontier = [identity(self.n)]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.reflections:
                        h = mat_mul(F, s.matrix, g)
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._cache["elements"] = sorted(seen)
        return self._cache["elements"]

    def words(self, max_len: int = 3) -> dict:
        """Map each element reachable by at most ``max_len`` reflections to one such word."""
        F = self.field
        words = {identity(self.n): ()}
        frontier = dict(words)
        for _ in range(max_len):
            nxt = {}
            for g, w in frontier.items():
                for i, s in enumerate(self.reflections):
                    h = mat_mul(F, s.matrix, g)
                    if h not in words and h not in nxt:
                        nxt[h] = (i,) + w
            words.update(nxt)
            frontier = nxt
        return words

    def conjugator(self, i: int, j: int, max_len: int = 3):
        """A word ``w`` (reflection indices) with ``g s_i g^-1 = s_j``, or None."""
        F = self.field
        si, sj = self.reflections[i].matrix, self.reflections[j].matrix
        for g, w in self.words(max_len).items():
            if mat_mul(F, mat_mul(F, g, si), mat_inverse(F, g)) == sj:
                return w
        return None


def _as_field(field_or_p) -> GF:
    if isinstance(field_or_p, GF):
        return field_or_p
    p = int(field_or_p)
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    return gf(p)


def symmetric_group(n: int, field_or_p) -> ReflectionGroup:
    """S_n acting on h* = K^n by permuting coordinates; reflections are transpositions."""
    if n < 2:
        raise InvalidInput("S_n needs n >= 2")
    F = _as_field(field_or_p)
    minus_one = F.neg(F.one)
    refl = []
    for i, j in combinations(range(n), 2):
        mat = [list(r) for r in identity(n)]
        mat[i][i] = mat[j][j] = 0
        mat[i][j] = mat[j][i] = 1
        alpha = [0] * n
        alpha[i], alpha[j] = 1, minus_one
        s = Reflection(matrix=tuple(map(tuple, mat)), alpha=tuple(alpha), alpha_check=tuple(alpha),
                       lam=minus_one, class_id=0, field=F, swap=(i, j, 1),
                       label=f"s_{i + 1}{j + 1}")
        validate_reflection(s)
        refl.append(s)
    return ReflectionGroup("Sn", n, n, F, tuple(refl), 1)


def dihedral_group(m: int, field_or_p) -> ReflectionGroup:
    """G(m,m,2): reflections s_k with x_1 -> zeta^k x_2, x_2 -> zeta^-k x_1 and root x_1 - zeta^k x_2.

    ``field_or_p`` is a prime (the smallest field containing a primitive m-th
    root of unity is used) or a field containing such a root.
    """
    if m < 2:
        raise InvalidInput("m must be at least 2")
    p = field_or_p.p if isinstance(field_or_p, GF) else int(field_or_p)
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    small, zeta = primitive_mth_root(p, m)
    F = small
    if isinstance(field_or_p, GF) and field_or_p != small:
        F = field_or_p
        if F.k % small.k:
            raise InvalidInput(f"{F!r} has no primitive {m}-th root of unity")
        zeta = embed(small, F)(zeta)
    minus_one = F.neg(F.one)
    refl = []
    for k in range(m):
        zk = F.pow(zeta, k)
        zmk = F.pow(zeta, -k)
        mat = ((0, zmk), (zk, 0))
        alpha = (1, F.neg(zk))
        alpha_check = (1, F.neg(zmk))
        s = Reflection(matrix=mat, alpha=alpha, alpha_check=alpha_check, lam=minus_one,
                       class_id=(k % 2) if m % 2 == 0 else 0, field=F, swap=(0, 1, zk),
                       label=f"s_{k}")
        validate_reflection(s)
        refl.append(s)
    return ReflectionGroup("Dm", m, 2, F, tuple(refl), 2 if m % 2 == 0 else 1, zeta=zeta)


def from_descriptor(desc: dict) -> ReflectionGroup:
    fam = desc.get("family")
    p = int(desc["p"])
    if fam == "Sn":
        F = gf(p, _log(p, desc["q"])) if "q" in desc else gf(p)
        return symmetric_group(int(desc["n"]), F)
    if fam == "Dm":
        if "q" in desc:
            return dihedral_group(int(desc["m"]), gf(p, _log(p, desc["q"])))
        return dihedral_group(int(desc["m"]), p)
    raise InvalidInput(f"unknown group family {fam!r}")


def _log(p, q):
    k, x = 0, 1
    while x < int(q):
        x *= p
        k += 1
    if x != int(q):
        raise InvalidInput(f"{q} is not a power of {p}")
    return k


def parse_group(text: str, p: int) -> ReflectionGroup:
    """``"Sn:3"`` or ``"Dm:7"`` (also ``"S3"``, ``"D7"``)."""
    t = text.strip()
    fam, _, num = t.partition(":")
    if not num:
        fam, num = t[0], t[1:]
    fam = fam.upper()[0]
    try:
        k = int(num)
    except ValueError:
        raise InvalidInput(f"cannot parse group {text!r}") from None
    if fam == "S":
        return symmetric_group(k, p)
    if fam == "D":
        return dihedral_group(k, p)
    raise InvalidInput(f"cannot parse group {text!r}")


# -- representations tau ------------------------------------------------------

@dataclass(frozen=True)
class TauRep:
    dim: int
    matrices: tuple       # one dim x dim raw matrix per reflection (columns = images)
    label: str

    def matrix_for(self, i):
        return self.matrices[i]


def make_tau(group: ReflectionGroup, label: str = "trivial") -> TauRep:
    """``"trivial"`` or ``"rho:a"`` / ``"rho(a)"`` (dihedral only, 1 <= a < m/2)."""
    lab = label.strip().lower().replace(" ", "")
    if lab in ("trivial", "triv", "1"):
        mats = tuple(((1,),) for _ in group.reflections)
        return TauRep(1, mats, "trivial")
    a = None
    for prefix in ("rho:", "rho(", "rho_", "rho"):
        if lab.startswith(prefix):
            try:
                a = int(lab[len(prefix):].rstrip(")"))
            except ValueError:
                a = None
            break
    if a is None:
        raise InvalidInput(f"unknown representation {label!r}")
    if group.family != "Dm":
        raise InvalidInput("rho(a) is only defined for dihedral groups")
    m = group.order_param
    if not (1 <= a and 2 * a < m):
        raise InvalidInput(f"rho({a}) needs 1 <= a < m/2 = {m / 2}")
    F = group.field
    mats = []
    for k in range(m):
        mats.append(((0, F.pow(group.zeta, -a * k)), (F.pow(group.zeta, a * k), 0)))
    tau = TauRep(2, tuple(mats), f"rho({a})")
    for M in tau.matrices:
        if mat_mul(F, M, M) != identity(2):
            raise GroupDataError("rho(a)(s)^2 != 1")
    return tau


def tau_dual(group: ReflectionGroup, tau: TauRep) -> TauRep:
    """tau*: inverse transposes of the tau matrices."""
    F = group.field
    mats = tuple(tuple(zip(*mat_inverse(F, M))) for M in tau.matrices)
    return TauRep(tau.dim, mats, tau.label + "*")


def tau_of_element(group: ReflectionGroup, tau: TauRep, word: Sequence[int]):
    """tau(g) for ``g = s_{w0} s_{w1} ...`` (word of reflection indices)."""
    F = group.field
    out = identity(tau.dim)
    for i in word:
        out = mat_mul(F, out, tau.matrices[i])
    return out


def element_of_word(group: ReflectionGroup, word: Sequence[int]):
    F = group.field
    out = identity(group.n)
    for i in word:
        out = mat_mul(F, out, group.reflections[i].matrix)
    return out
