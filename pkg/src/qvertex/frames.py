"""Integer 2-lattice linear algebra: leg frames and quantum-torus checks."""

from __future__ import annotations

from typing import NamedTuple

from .qfield import QRat, qint


class Vec(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Vec(-self.x, -self.y)

    def scaled(self, k: int) -> "Vec":
        return Vec(k * self.x, k * self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


def vec(x, y) -> Vec:
    return Vec(int(x), int(y))


def wedge(u: Vec, v: Vec) -> int:
    """Oriented area u_x*v_y - u_y*v_x."""
    return u.x * v.y - u.y * v.x


class FrameError(ValueError):
    pass


class Frame(NamedTuple):
    """An oriented lattice basis (w, n) with w wedge n = +1."""

    w: Vec
    n: Vec

    def validate(self):
        if wedge(self.w, self.n) != 1:
            raise FrameError("frame must satisfy w wedge n = 1, got %d" % wedge(self.w, self.n))
        return self

    def reversed(self) -> "Frame":
        return Frame(-self.w, -self.n)


def frame(w, n) -> Frame:
    return Frame(Vec(*w), Vec(*n)).validate()


def express(v: Vec, f: Frame):
    """Unique integers (a, b) with v = a*w + b*n."""
    f.validate()
    return wedge(v, f.n), wedge(f.w, v)


def wdegree(v: Vec, f: Frame) -> int:
    """Grading degree of the operator attached to v: -(v wedge n)."""
    if v.is_zero():
        raise ValueError("zero vector has no operator")
    return -wedge(v, f.n)


class VertexFrames(NamedTuple):
    """Frames of the three legs meeting at the vertex."""

    legs: tuple

    def leg(self, i: int) -> Frame:
        return self.legs[(i - 1) % 3]

    def reversed_leg(self, i: int) -> Frame:
        return self.leg(i).reversed()

    def validate(self):
        violations = []
        for i, f in enumerate(self.legs, start=1):
            if wedge(f.w, f.n) != 1:
                violations.append("leg %d: w wedge n = %d, expected 1" % (i, wedge(f.w, f.n)))
        n1, n2, n3 = (f.n for f in self.legs)
        if n1 + n2 + n3 != Vec(0, 0):
            violations.append("normals do not sum to zero: %s" % str(n1 + n2 + n3))
        for i in range(3):
            a = self.legs[i].n
            b = self.legs[(i + 1) % 3].n
            if wedge(a, b) != 1:
                violations.append(
                    "n_%d wedge n_%d = %d, expected 1" % (i + 1, (i + 1) % 3 + 1, wedge(a, b))
                )
        return violations

    def to_json(self):
        return {
            "legs": [
                {"w": [f.w.x, f.w.y], "n": [f.n.x, f.n.y]} for f in self.legs
            ]
        }

    @staticmethod
    def from_json(obj) -> "VertexFrames":
        legs = tuple(frame(leg["w"], leg["n"]) for leg in obj["legs"])
        if len(legs) != 3:
            raise FrameError("exactly three legs required")
        return VertexFrames(legs)


def default_vertex_frames() -> VertexFrames:
    """The reference vertex: framings (1,0), (-1,1), (0,-1)."""
    return VertexFrames(
        (
            frame((1, 0), (0, 1)),
            frame((-1, 1), (-1, 0)),
            frame((0, -1), (1, -1)),
        )
    )


def validate(vf: VertexFrames):
    """Empty list when valid, else human-readable violation strings."""
    return vf.validate()


# ---------------------------------------------------------------------------
# Abstract structure-constant check for the torus bracket.
# ---------------------------------------------------------------------------

def _bracket(u_item, v_item, central_n):
    """Bracket of c_u*T_u and c_v*T_v as a formal combination.

    Returns (generator_terms, scalar) where generator_terms maps vectors to
    QRat coefficients and scalar collects central contributions.  With no
    frame the central part is tracked as a pair of C_1/C_2 coefficients.
    """
    (u, cu) = u_item
    (v, cv) = v_item
    coeff = cu * cv
    m = wedge(u, v)
    gens: dict = {}
    scalar: dict = {}
    s = u + v
    if not s.is_zero():
        if m != 0:
            gens[s] = qint(m) * coeff
    else:
        if central_n is not None:
            scalar["C"] = coeff * QRat.from_int(wedge(u, central_n.n))
        else:
            scalar["C1"] = coeff * QRat.from_int(u.x)
            scalar["C2"] = coeff * QRat.from_int(u.y)
    return gens, scalar


def _merge(into: dict, frm: dict):
    for k, c in frm.items():
        s = into.get(k)
        into[k] = c if s is None else s + c


def jacobi_check(u: Vec, v: Vec, w: Vec, central: Frame | None = None):
    """Sum of the three cyclic double brackets; identically zero.

    The result is a map from generators (lattice vectors) and central
    symbols ("C" or "C1"/"C2") to QRat coefficients, with zeros dropped.
    """
    for x in (u, v, w):
        if x.is_zero():
            raise ValueError("generators must be nonzero")
    total_gens: dict = {}
    total_scal: dict = {}
    for a, b, c in ((u, v, w), (v, w, u), (w, u, v)):
        inner_gens, _inner_scal = _bracket((b, QRat.from_int(1)), (c, QRat.from_int(1)), central)
        # central parts commute with everything, so only generator terms recurse
        for g, cg in inner_gens.items():
            out_gens, out_scal = _bracket((a, QRat.from_int(1)), (g, cg), central)
            _merge(total_gens, out_gens)
            _merge(total_scal, out_scal)
    combined: dict = {}
    for k, cval in total_gens.items():
        if cval:
            combined[k] = cval
    for k, cval in total_scal.items():
        if cval:
            combined[k] = cval
    return combined
