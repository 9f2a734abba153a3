"""The twisted polynomial ring L[X; theta] and its evaluation machinery.

Multiplication follows the rule X a = theta(a) X.  The central modulus
H(X) = prod_i (X^r - lambda_i), built from an order-ell subgroup of F_q*,
cuts out a quotient algebra of K-dimension ell * r^2.  Evaluating a
residue at the i-th block sends X to alpha_i * theta, where alpha_i is a
fixed norm preimage of lambda_i; the image is a theta-polynomial, i.e. a
K-linear map on L, and a full residue evaluates to an ell-tuple of such
maps.  The sum-rank weight of that tuple is the sum of the ranks of its
blocks.

Evaluation is multiplicative (composition blockwise) and bijective on
residues of degree below ell*r: X^r acts on block i as multiplication by
lambda_i = N(alpha_i), which kills the factor X^r - lambda_i, so the map
is well defined on the quotient, and on block powers X^(j*r) it acts as
lambda_i^j, the subgroup-power rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParamsError, BlockOutOfRangeError
from .fields import MID, TOP, Elem, FieldTower
from . import linalg


class SkewPoly:
    """Polynomial over L in the twisted indeterminate X (X a = theta(a) X).

    ``coeffs`` holds top-level elements, index i for the X^i coefficient,
    with no trailing zeros; the zero polynomial has an empty tuple.
    """

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs):
        coeffs = [tower.top(c) for c in coeffs]
        d = len(coeffs)
        while d > 0 and not coeffs[d - 1]:
            d -= 1
        self.tower = tower
        self.coeffs = tuple(coeffs[:d])

    @classmethod
    def zero(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, [])

    @classmethod
    def one(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, [tower.top_one()])

    @classmethod
    def monomial(cls, tower: FieldTower, coeff: Elem, degree: int) -> "SkewPoly":
        return cls(tower, [tower.top_zero()] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Elem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.tower.top_zero()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and other.tower is self.tower
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self.tower, [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self.tower, [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.tower, [-c for c in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """Twisted convolution: (fg)_n = sum_{i+j=n} f_i theta^i(g_j)."""
        if not self or not other:
            return SkewPoly.zero(self.tower)
        tower = self.tower
        zero = tower.top_zero()
        out = [zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * tower.frobenius(b, i)
        return SkewPoly(tower, out)

    def scale(self, c: Elem) -> "SkewPoly":
        """Left scalar multiple c * f with c in L."""
        return SkewPoly(self.tower, [c * x for x in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            body = str(c)
            if i == 0:
                parts.append(body)
            elif i == 1:
                parts.append(f"({body})*X")
            else:
                parts.append(f"({body})*X^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkewPoly({self})"


def build_h_lambda(tower: FieldTower, lambdas) -> SkewPoly:
    """prod_i (X^r - lambda_i): central, monic of degree ell*r, with all
    coefficients in F_q.  The factor order does not matter."""
    seen = set()
    for lam in lambdas:
        if lam.level != MID or not lam:
            raise BadParamsError("lambda values must be nonzero elements of F_q")
        if lam.coords in seen:
            raise BadParamsError("lambda values must be distinct")
        seen.add(lam.coords)
    acc = SkewPoly.one(tower)
    for lam in lambdas:
        factor = SkewPoly(
            tower,
            [-tower.top(lam)]
            + [tower.top_zero()] * (tower.r - 1)
            + [tower.top_one()],
        )
        acc = acc * factor
    if not all(tower.in_mid_subfield(c) for c in acc.coeffs):
        raise BadParamsError("modulus coefficients left F_q; lambdas invalid")
    return acc


class ThetaPoly:
    """Element of L[theta]: the K-linear map x -> sum_j c_j theta^j(x).

    Exactly r coefficients, one per power of the Frobenius.  The product
    is composition: (a theta^i)(b theta^j) = a theta^i(b) theta^(i+j),
    exponents reduced mod r since theta^r is the identity on L.
    """

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != tower.r:
            raise BadParamsError(f"theta-polynomial needs exactly r = {tower.r} coefficients")
        self.tower = tower
        self.coeffs = tuple(tower.top(c) for c in coeffs)

    @classmethod
    def zero(cls, tower: FieldTower) -> "ThetaPoly":
        return cls(tower, [tower.top_zero()] * tower.r)

    @classmethod
    def identity(cls, tower: FieldTower) -> "ThetaPoly":
        return cls(
            tower, [tower.top_one()] + [tower.top_zero()] * (tower.r - 1)
        )

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ThetaPoly)
            and other.tower is self.tower
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        return ThetaPoly(self.tower, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ThetaPoly") -> "ThetaPoly":
        return ThetaPoly(self.tower, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def apply(self, x: Elem) -> Elem:
        acc = self.tower.top_zero()
        for j, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * self.tower.frobenius(x, j)
        return acc

    def compose(self, other: "ThetaPoly") -> "ThetaPoly":
        """self after other, folded back into L[theta]."""
        tower = self.tower
        r = tower.r
        out = [tower.top_zero()] * r
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = (i + j) % r
                    out[k] = out[k] + a * tower.frobenius(b, i)
        return ThetaPoly(tower, out)

    def matrix(self) -> linalg.Mat:
        """Matrix over F_q of the map in the power basis {1, u, .., u^(r-1)}."""
        tower = self.tower
        r = tower.r
        cols = []
        for t in range(r):
            basis_vec = tower.top([0] * t + [1] + [0] * (r - 1 - t))
            image = self.apply(basis_vec)
            cols.append([Elem(tower, MID, part) for part in image.coords])
        rows = [[cols[t][s] for t in range(r)] for s in range(r)]
        return linalg.Mat.from_rows(rows, tower=tower, level=MID, cols=r)

    def map_trace(self) -> Elem:
        """Trace of the underlying K-linear map (sum of the matrix diagonal)."""
        mat = self.matrix()
        acc = self.tower.mid_zero()
        for i in range(mat.rows):
            acc = acc + mat[i, i]
        return acc

    def coords_mid(self) -> list[Elem]:
        """K-coordinates: r tuples of r residues, flattened."""
        return [
            Elem(self.tower, MID, part) for c in self.coeffs for part in c.coords
        ]

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"ThetaPoly([{body}])"


def theta_rank(t: ThetaPoly) -> int:
    """Rank of the K-linear map represented by t (0..r)."""
    rank, _ = linalg.rank_kernel(t.matrix())
    return rank


def evaluate_at_point(f: SkewPoly, alpha: Elem) -> ThetaPoly:
    """Operator value of f at alpha: X^j acts as
    alpha theta(alpha) .. theta^(j-1)(alpha) * theta^j, folded mod r."""
    tower = f.tower
    r = tower.r
    alpha_frobs = [tower.frobenius(alpha, s) for s in range(r)]
    out = [tower.top_zero()] * r
    norm_prod = tower.top_one()
    for j, fj in enumerate(f.coeffs):
        if fj:
            k = j % r
            out[k] = out[k] + fj * norm_prod
        norm_prod = norm_prod * alpha_frobs[j % r]
    return ThetaPoly(tower, out)


@dataclass(frozen=True)
class SumRankVector:
    """One theta-polynomial per evaluation block."""

    parts: tuple

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def coords_mid(self) -> list[Elem]:
        return [c for part in self.parts for c in part.coords_mid()]

    def to_rows(self) -> list[list[str]]:
        """One row of r coefficient encodings per block."""
        return [[str(c) for c in part.coeffs] for part in self.parts]


def sum_rank_weight(v: SumRankVector) -> int:
    """Sum of the blockwise ranks; zero exactly on the zero vector."""
    return sum(theta_rank(t) for t in v.parts)


@dataclass(frozen=True)
class QuotientCtx:
    """The quotient of L[X; theta] by the central subgroup modulus.

    Carries the subgroup (lambda_1, .., lambda_ell), the fixed norm
    preimages alpha_i used as evaluation points, and the modulus itself.
    Residue representatives have degree below ell*r; as a K-space the
    quotient has dimension ell * r^2.
    """

    tower: FieldTower
    lambdas: tuple
    alphas: tuple
    h_lambda: SkewPoly

    @classmethod
    def build(cls, tower: FieldTower, ell: int) -> "QuotientCtx":
        lambdas = tower.subgroup_lambda(ell)
        if ell % tower.p == 0:
            # unreachable when ell | q-1; kept as an explicit guard
            raise BadParamsError("subgroup order must be invertible mod p")
        alphas = tuple(tower.norm_preimage(lam) for lam in lambdas)
        return cls(tower, lambdas, alphas, build_h_lambda(tower, lambdas))

    @property
    def ell(self) -> int:
        return len(self.lambdas)

    @property
    def modulus_degree(self) -> int:
        return self.ell * self.tower.r

    @property
    def ambient_dim(self) -> int:
        return self.ell * self.tower.r * self.tower.r

    # -- reduction -----------------------------------------------------------

    def reduce(self, f: SkewPoly) -> SkewPoly:
        """Residue representative of degree < ell*r (left division by the
        monic central modulus; centrality makes left and right agree)."""
        tower = self.tower
        d_mod = self.modulus_degree
        rem = list(f.coeffs)
        h = self.h_lambda.coeffs
        while len(rem) - 1 >= d_mod:
            lead = rem[-1]
            k = len(rem) - 1 - d_mod
            if lead:
                for j, hj in enumerate(h):
                    if hj:
                        rem[k + j] = rem[k + j] - lead * tower.frobenius(hj, k)
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return SkewPoly(tower, rem)

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, f: SkewPoly, i: int) -> ThetaPoly:
        """Value of f at block i (1-based): X^j acts as the partial norm
        product alpha theta(alpha) .. theta^(j-1)(alpha) times theta^j."""
        if not 1 <= i <= self.ell:
            raise BlockOutOfRangeError(f"block {i} outside 1..{self.ell}")
        return evaluate_at_point(f, self.alphas[i - 1])

    def eval_map(self, f: SkewPoly) -> SumRankVector:
        """All ell block values of the residue of f."""
        f = self.reduce(f)
        return SumRankVector(tuple(self.evaluate(f, i) for i in range(1, self.ell + 1)))

    # -- K-coordinates of residues ------------------------------------------------

    def coords_of(self, f: SkewPoly) -> list[Elem]:
        """Residue coordinates over F_q: coefficient i of X^i contributes its
        r residues, little-endian, at slots i*r .. i*r + r - 1."""
        f = self.reduce(f)
        tower = self.tower
        out = []
        for i in range(self.modulus_degree):
            c = f.coeff(i)
            out.extend(Elem(tower, MID, part) for part in c.coords)
        return out

    def from_coords(self, vec) -> SkewPoly:
        tower = self.tower
        r = tower.r
        if len(vec) != self.ambient_dim:
            raise BadParamsError("coordinate vector has the wrong length")
        coeffs = []
        for i in range(self.modulus_degree):
            parts = [vec[i * r + t].coords for t in range(r)]
            coeffs.append(Elem(tower, TOP, tuple(parts)))
        return SkewPoly(tower, coeffs)

    def ambient_basis(self):
        """The monomial K-basis u^t X^i of the residue space, in slot order."""
        tower = self.tower
        r = tower.r
        out = []
        for i in range(self.modulus_degree):
            for t in range(r):
                coeff_coords = [[0] * tower.m for _ in range(r)]
                coeff_coords[t][0] = 1
                out.append(SkewPoly.monomial(tower, tower.top(coeff_coords), i))
        return out
