"""Integral ternary quadratic forms: values, Gram matrices, discriminants,
integral automorphism groups, and unimodular changes of variables.

A form is a*x^2 + b*y^2 + c*z^2 + r*y*z + s*z*x + t*x*y; the cross-term
letters pair the coordinates they multiply (r: yz, s: zx, t: xy).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import NotPositiveDefiniteError, NotUnimodularError, RangeOverflowError

Triple = tuple[int, int, int]
Matrix = tuple[tuple, tuple, tuple]  # 3x3, rows; entries int or Fraction

_INT64_MAX = (1 << 63) - 1


# ---------------------------------------------------------------------------
# small exact 3x3 helpers (entries may be ints or Fractions)

def mat_transpose(M):
    return tuple(tuple(M[i][j] for i in range(3)) for j in range(3))


def mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_vec(M, v):
    return tuple(sum(M[i][j] * v[j] for j in range(3)) for i in range(3))


def mat_det(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True, order=True)
class TernaryForm:
    a: int
    b: int
    c: int
    r: int = 0
    s: int = 0
    t: int = 0

    def __post_init__(self):
        for name in ("a", "b", "c", "r", "s", "t"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidCoefficient(f"coefficient {name}={v!r} is not an integer")
            if abs(v) > _INT64_MAX:
                raise RangeOverflowError(f"coefficient {name}={v} outside signed 64-bit range")
        a, b, c, r, s, t = self.coefficients
        # leading principal minors of the Gram matrix must all be positive
        m1 = 2 * a
        m2 = 4 * a * b - t * t
        m3 = mat_det(self.gram())
        if m1 <= 0 or m2 <= 0 or m3 <= 0:
            raise NotPositiveDefiniteError(
                f"form {self.literal()} is not positive definite "
                f"(minors {m1}, {m2}, {m3})")

    @property
    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.r, self.s, self.t)

    def gram(self) -> Matrix:
        a, b, c, r, s, t = self.coefficients
        return ((2 * a, t, s), (t, 2 * b, r), (s, r, 2 * c))

    def __call__(self, v) -> int:
        return evaluate(self, v)

    def is_diagonal(self) -> bool:
        return self.r == 0 and self.s == 0 and self.t == 0

    def literal(self) -> str:
        """The CLI/JSON literal "a,b,c[,r,s,t]"."""
        if self.is_diagonal():
            return f"{self.a},{self.b},{self.c}"
        return ",".join(str(v) for v in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for coeff, mono in zip(self.coefficients,
                               ("x^2", "y^2", "z^2", "yz", "zx", "xy")):
            if coeff == 0:
                continue
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            terms.append(("- " if coeff < 0 else "+ ") + mag + mono)
        out = " ".join(terms)
        return out[2:] if out.startswith("+ ") else ("-" + out[2:] if out else "0")


class InvalidCoefficient(TypeError):
    pass


def make_form(a: int, b: int, c: int, r: int = 0, s: int = 0, t: int = 0) -> TernaryForm:
    """Validated constructor; raises NotPositiveDefiniteError when indefinite."""
    return TernaryForm(a, b, c, r, s, t)


def parse_form(literal: str) -> TernaryForm:
    """Parse "a,b,c" or "a,b,c,r,s,t" (missing cross terms default to 0)."""
    parts = [p.strip() for p in literal.split(",")]
    if len(parts) not in (3, 6):
        raise ValueError(f"form literal needs 3 or 6 integers, got {literal!r}")
    vals = [int(p) for p in parts]
    if len(vals) == 3:
        vals += [0, 0, 0]
    return TernaryForm(*vals)


def evaluate(f: TernaryForm, v) -> int:
    """Exact value of f at an integer triple."""
    x, y, z = v
    return (f.a * x * x + f.b * y * y + f.c * z * z
            + f.r * y * z + f.s * z * x + f.t * x * y)


def gram_matrix(f: TernaryForm) -> Matrix:
    return f.gram()


def discriminant(f: TernaryForm) -> int:
    """det(Gram)/2; equals 4abc for diagonal forms."""
    return mat_det(f.gram()) // 2


def coordinate_bounds(f: TernaryForm, n: int) -> Triple:
    """Exact per-coordinate bounds: f(v) <= n implies |v_i| <= bound_i."""
    if n <= 0:
        return (0, 0, 0)
    A = f.gram()
    d = mat_det(A)
    out = []
    for i in range(3):
        j, k = (u for u in range(3) if u != i)
        cof = A[j][j] * A[k][k] - A[j][k] * A[k][j]
        out.append(isqrt((2 * n * cof) // d))
    return tuple(out)


def _vectors_of_norm(f: TernaryForm, n: int) -> list[Triple]:
    if n == 0:
        return [(0, 0, 0)]
    bx, by, bz = coordinate_bounds(f, n)
    out = []
    for x in range(-bx, bx + 1):
        for y in range(-by, by + 1):
            for z in range(-bz, bz + 1):
                if evaluate(f, (x, y, z)) == n:
                    out.append((x, y, z))
    return out


def automorphisms(f: TernaryForm) -> list[Matrix]:
    """The full group of integral isometries U with U^T A U = A.

    Candidate images of the basis vectors are the lattice vectors of norms
    a, b, c; columns are assembled with full Gram cross-checks.  The returned
    list is sorted and (being the whole group) closed under composition and
    inversion.
    """
    A = f.gram()
    cand = {norm: _vectors_of_norm(f, norm) for norm in {f.a, f.b, f.c}}

    def ip(u, v):
        return sum(u[i] * A[i][j] * v[j] for i in range(3) for j in range(3))

    mats = []
    for u1 in cand[f.a]:
        for u2 in cand[f.b]:
            if ip(u1, u2) != A[0][1]:
                continue
            for u3 in cand[f.c]:
                if ip(u1, u3) != A[0][2] or ip(u2, u3) != A[1][2]:
                    continue
                U = tuple(tuple(col[i] for col in (u1, u2, u3)) for i in range(3))
                if mat_det(U) in (1, -1):
                    mats.append(U)
    return sorted(mats)


def transform(f: TernaryForm, U) -> TernaryForm:
    """The form with Gram matrix U^T A U, for unimodular integer U."""
    U = tuple(tuple(int(x) for x in row) for row in U)
    if mat_det(U) not in (1, -1):
        raise NotUnimodularError(f"matrix determinant {mat_det(U)} is not +-1")
    A2 = mat_mul(mat_transpose(U), mat_mul(f.gram(), U))
    return TernaryForm(A2[0][0] // 2, A2[1][1] // 2, A2[2][2] // 2,
                       A2[1][2], A2[0][2], A2[0][1])


def scale_coordinate(f: TernaryForm, index: int, m: int) -> TernaryForm:
    """Form g with g(v) = f(v except v[index] replaced by m*v[index]).

    Representations of n by g correspond exactly to representations of n by
    f whose coordinate `index` is divisible by m.
    """
    if index not in (0, 1, 2) or m < 1:
        raise ValueError("index must be 0..2 and m >= 1")
    U = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    U[index][index] = m
    A2 = mat_mul(mat_transpose(tuple(map(tuple, U))),
                 mat_mul(f.gram(), tuple(map(tuple, U))))
    return TernaryForm(A2[0][0] // 2, A2[1][1] // 2, A2[2][2] // 2,
                       A2[1][2], A2[0][2], A2[0][1])
