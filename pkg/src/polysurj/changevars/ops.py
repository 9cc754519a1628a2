"""Elementary planar coordinate changes and their composites.

Convention: a change of variables acts on points.  Its action on a polynomial
F is ``F o op^{-1}``, so that ``op.apply_poly(F)(op.apply_point(P)) == F(P)``.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..exactmath import as_fraction
from ..polyalg import BiPoly, UniPoly


def _nonzero(q):
    q = as_fraction(q)
    if q == 0:
        raise ValueError("scale factor must be nonzero")
    return q


class ElementaryOp:
    def apply_point(self, pt):
        raise NotImplementedError

    def apply_poly(self, F):
        raise NotImplementedError

    def apply_curve(self, f, g):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def is_identity(self):
        return False


@dataclass(frozen=True)
class Swap(ElementaryOp):
    def apply_point(self, pt):
        x, y = pt
        return (y, x)

    def apply_poly(self, F):
        return F.swap()

    def apply_curve(self, f, g):
        return g, f

    def inverse(self):
        return self

    def to_json(self):
        return {"op": "swap"}

    def __str__(self):
        return "(x, y) -> (y, x)"


@dataclass(frozen=True)
class ScaleX(ElementaryOp):
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", _nonzero(self.q))

    def apply_point(self, pt):
        x, y = pt
        return (self.q * x, y)

    def apply_poly(self, F):
        return F.substitute(BiPoly.x() * (1 / self.q), BiPoly.y())

    def apply_curve(self, f, g):
        return f * self.q, g

    def inverse(self):
        return ScaleX(1 / self.q)

    def is_identity(self):
        return self.q == 1

    def to_json(self):
        return {"op": "scaleX", "q": str(self.q)}

    def __str__(self):
        return f"(x, y) -> ({self.q}*x, y)"


@dataclass(frozen=True)
class ScaleY(ElementaryOp):
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", _nonzero(self.q))

    def apply_point(self, pt):
        x, y = pt
        return (x, self.q * y)

    def apply_poly(self, F):
        return F.substitute(BiPoly.x(), BiPoly.y() * (1 / self.q))

    def apply_curve(self, f, g):
        return f, g * self.q

    def inverse(self):
        return ScaleY(1 / self.q)

    def is_identity(self):
        return self.q == 1

    def to_json(self):
        return {"op": "scaleY", "q": str(self.q)}

    def __str__(self):
        return f"(x, y) -> (x, {self.q}*y)"


@dataclass(frozen=True)
class AddXPolyToY(ElementaryOp):
    """(x, y) -> (x, y + p(x))."""

    p: UniPoly

    def apply_point(self, pt):
        x, y = pt
        return (x, y + self.p(x))

    def apply_poly(self, F):
        return F.substitute(BiPoly.x(), BiPoly.y() - BiPoly.from_uni(self.p, "x"))

    def apply_curve(self, f, g):
        return f, g + self.p(f)

    def inverse(self):
        return AddXPolyToY(-self.p)

    def is_identity(self):
        return self.p.is_zero()

    def to_json(self):
        return {"op": "addXtoY", "poly": self.p.to_string("x")}

    def __str__(self):
        return f"(x, y) -> (x, y + ({self.p.to_string('x')}))"


@dataclass(frozen=True)
class AddYPolyToX(ElementaryOp):
    """(x, y) -> (x + p(y), y)."""

    p: UniPoly

    def apply_point(self, pt):
        x, y = pt
        return (x + self.p(y), y)

    def apply_poly(self, F):
        return F.substitute(BiPoly.x() - BiPoly.from_uni(self.p, "y"), BiPoly.y())

    def apply_curve(self, f, g):
        return f + self.p(g), g

    def inverse(self):
        return AddYPolyToX(-self.p)

    def is_identity(self):
        return self.p.is_zero()

    def to_json(self):
        return {"op": "addYtoX", "poly": self.p.to_string("y")}

    def __str__(self):
        return f"(x, y) -> (x + ({self.p.to_string('y')}), y)"


@dataclass(frozen=True)
class ChangeOfVars:
    """An ordered sequence of elementary operations, applied first to last."""

    ops: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __add__(self, other):
        if isinstance(other, ElementaryOp):
            return ChangeOfVars(self.ops + (other,))
        return ChangeOfVars(self.ops + tuple(other.ops))

    def inverse(self):
        return ChangeOfVars(tuple(op.inverse() for op in reversed(self.ops)))

    def apply_point(self, pt):
        for op in self.ops:
            pt = op.apply_point(pt)
        return pt

    def apply_poly(self, F):
        for op in self.ops:
            F = op.apply_poly(F)
        return F

    def apply_curve(self, f, g):
        for op in self.ops:
            f, g = op.apply_curve(f, g)
        return f, g

    def simplified(self):
        """Drop identity ops and cancel adjacent swaps."""
        out = []
        for op in self.ops:
            if op.is_identity():
                continue
            if isinstance(op, Swap) and out and isinstance(out[-1], Swap):
                out.pop()
                continue
            out.append(op)
        return ChangeOfVars(tuple(out))

    def to_json(self):
        return [op.to_json() for op in self.ops]

    @classmethod
    def from_json(cls, data):
        from ..cli.parser import parse_uni

        ops = []
        for item in data:
            kind = item.get("op")
            if kind == "swap":
                ops.append(Swap())
            elif kind == "scaleX":
                ops.append(ScaleX(Fraction(item["q"])))
            elif kind == "scaleY":
                ops.append(ScaleY(Fraction(item["q"])))
            elif kind == "addXtoY":
                ops.append(AddXPolyToY(parse_uni(item["poly"], var="x")))
            elif kind == "addYtoX":
                ops.append(AddYPolyToX(parse_uni(item["poly"], var="y")))
            else:
                raise ValueError(f"unknown op {kind!r}")
        return cls(tuple(ops))

    def __str__(self):
        if not self.ops:
            return "identity"
        return "; ".join(str(op) for op in self.ops)


def apply_point(op, pt):
    return op.apply_point(tuple(as_fraction(c) for c in pt))


def apply_poly(op, F):
    return op.apply_poly(F)
