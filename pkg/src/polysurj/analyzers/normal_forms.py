"""Syntactic recognition of the low-complexity shapes, up to a change of variables.

Every returned form stores a ChangeOfVars ``cov`` with the property
``cov.apply_poly(F) == form.shape()``; the classifier re-checks this before
returning.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..changevars import AddXPolyToY, AddYPolyToX, ChangeOfVars, ScaleY, Swap
from ..polyalg import BiPoly, UniPoly

IDENTITY = ChangeOfVars()


def _poly_json(p, var="x"):
    return p.to_string(var)


@dataclass(frozen=True)
class NormalForm:
    cov: ChangeOfVars = field(default=IDENTITY, kw_only=True)
    kind = "NormalForm"

    def shape(self):
        return None

    def matches(self, F):
        shape = self.shape()
        return shape is not None and self.cov.apply_poly(F) == shape

    def params(self):
        return {}

    def to_json(self):
        return {"kind": self.kind, **self.params(), "cov": self.cov.to_json()}

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind}({args})"


@dataclass(frozen=True)
class AxisLinear(NormalForm):
    kind = "AxisLinear"

    def shape(self):
        return BiPoly.x()


@dataclass(frozen=True)
class TwistedMonomial(NormalForm):
    """scale * x^a * (x^ell * y + p(x))^b + shift."""

    a: int
    ell: int
    b: int
    p: UniPoly
    scale: Fraction
    shift: Fraction
    kind = "TwistedMonomial"

    def inner(self):
        return BiPoly({(self.ell, 1): 1}) + BiPoly.from_uni(self.p, "x")

    def shape(self):
        return BiPoly({(self.a, 0): self.scale}) * self.inner() ** self.b + self.shift

    def params(self):
        return {
            "a": str(self.a),
            "ell": str(self.ell),
            "b": str(self.b),
            "p": _poly_json(self.p),
            "scale": str(self.scale),
            "shift": str(self.shift),
        }


@dataclass(frozen=True)
class TorusMonomial(TwistedMonomial):
    """scale * x^a * y^b + shift: the twisted shape with ell = 0 and p = 0."""

    kind = "TorusMonomial"

    def __init__(self, a, b, scale, shift, cov=IDENTITY):
        TwistedMonomial.__init__(
            self, a, 0, b, UniPoly(), Fraction(scale), Fraction(shift), cov=cov
        )

    def params(self):
        return {"a": str(self.a), "b": str(self.b), "scale": str(self.scale), "shift": str(self.shift)}

    def __repr__(self):
        return f"TorusMonomial(a={self.a}, b={self.b}, scale={self.scale}, shift={self.shift}, cov={self.cov})"


@dataclass(frozen=True)
class LinearInSecond(NormalForm):
    """f1(x) * y + f2(x) with deg f2 < deg f1."""

    f1: UniPoly
    f2: UniPoly
    kind = "LinearInSecond"

    def shape(self):
        return BiPoly.from_uni(self.f1, "x") * BiPoly.y() + BiPoly.from_uni(self.f2, "x")

    def params(self):
        return {"f1": _poly_json(self.f1, "u"), "f2": _poly_json(self.f2, "u")}


@dataclass(frozen=True)
class CuspidalExcluded(NormalForm):
    """alpha * y^n + beta * x^m with coprime n, m >= 2: a cuspidal zero locus."""

    n: int
    m: int
    alpha: Fraction
    beta: Fraction
    kind = "CuspidalExcluded"

    def shape(self):
        return BiPoly({(0, self.n): self.alpha, (self.m, 0): self.beta})

    def params(self):
        return {"n": str(self.n), "m": str(self.m)}


@dataclass(frozen=True)
class AsymptoticSector(NormalForm):
    """Zero locus with two conjugate branches v ~ A u^d, A = alpha + beta*sqrt(D) irrational.

    Not produced by the classifier; build it with :func:`sector_form`.
    """

    A: object
    d: int
    kind = "AsymptoticSector"

    def matches(self, F):
        return True

    def params(self):
        return {"A": str(self.A), "d": str(self.d)}


@dataclass(frozen=True)
class Unclassified(NormalForm):
    kind = "Unclassified"


# --- direct detection -----------------------------------------------------------


def _monomial(p):
    """(c, k) if the UniPoly p is c*t^k, else None."""
    terms = p.terms()
    return terms[0][::-1] if len(terms) == 1 else None


def _with_prefix(form, prefix):
    return _replace_cov(form, ChangeOfVars(prefix) + form.cov)


def _replace_cov(form, cov):
    cov = cov.simplified()
    if isinstance(form, TorusMonomial):
        return TorusMonomial(form.a, form.b, form.scale, form.shift, cov=cov)
    import dataclasses

    return dataclasses.replace(form, cov=cov)


def _detect_linear(G):
    for var, prefix in (("y", ()), ("x", (Swap(),))):
        if (G.deg_y if var == "y" else G.deg_x) != 1:
            continue
        H = G if var == "y" else G.swap()
        rows = H.coeffs_in("y")
        f1, f2 = rows[1], rows.get(0, UniPoly())
        if f1.is_constant():
            c = f1.coeff(0)
            ops = prefix + (AddXPolyToY(f2.scale(1 / c)), ScaleY(c), Swap())
            return AxisLinear(cov=ChangeOfVars(ops).simplified())
        q, r = divmod(f2, f1)
        cov = ChangeOfVars(prefix + (AddXPolyToY(q),)).simplified()
        mono = _monomial(f1)
        if r.is_constant() and mono is not None and mono[1] >= 1:
            return TorusMonomial(mono[1], 1, mono[0], r.coeff(0), cov=cov)
        return LinearInSecond(f1, r, cov=cov)
    return None


def _detect_monomial_oriented(G):
    shift = G.constant_term
    H = G - shift
    if H.is_zero():
        return None
    if len(H) == 1:
        ((a, b), c), = H.terms.items()
        if a >= 1 and b >= 1 and gcd(a, b) == 1:
            return TorusMonomial(a, b, c, shift)
        return None
    b = H.deg_y
    if b < 1:
        return None
    top = _monomial(H.coeffs_in("y")[b])
    if top is None:
        return None
    scale, m = top
    a = min(i for i, _ in H.terms)
    if a < 1 or gcd(a, b) != 1 or (m - a) % b:
        return None
    ell = (m - a) // b
    if ell < 1:
        return None
    W = BiPoly({(i - a, j): c / scale for (i, j), c in H.terms.items()})
    rows = W.coeffs_in("y")
    below = rows.get(b - 1, UniPoly())
    shift_down = ell * (b - 1)
    if any(k < shift_down for k, _ in below.terms()):
        return None
    p = UniPoly(below.coeffs[shift_down:]).scale(Fraction(1, b))
    if p.is_zero() or p.coeff(0) == 0 or p.degree >= ell:
        return None
    form = TwistedMonomial(a, ell, b, p, scale, shift)
    return form if form.shape() == G else None


def _detect_monomial(G):
    form = _detect_monomial_oriented(G)
    if form is not None:
        return form
    form = _detect_monomial_oriented(G.swap())
    if form is not None:
        return _with_prefix(form, (Swap(),))
    return None


def _detect_cusp(G):
    if len(G) != 2 or G.constant_term != 0:
        return None
    pure_x = [(i, c) for (i, j), c in G.terms.items() if j == 0]
    pure_y = [(j, c) for (i, j), c in G.terms.items() if i == 0]
    if len(pure_x) != 1 or len(pure_y) != 1:
        return None
    (m, beta), (n, alpha) = pure_x[0], pure_y[0]
    if n >= 2 and m >= 2 and gcd(n, m) == 1:
        return CuspidalExcluded(n, m, alpha, beta)
    return None


def detect(G):
    """Match G against the normal shapes with no further change of variables."""
    for finder in (_detect_linear, _detect_monomial, _detect_cusp):
        form = finder(G)
        if form is not None:
            return form
    return None


# --- bounded search over changes of variables ----------------------------------


def _complexity(G):
    return (G.degree, len(G))


def _tschirnhaus(G, var):
    """Shift of ``var`` by a polynomial in the other variable killing the
    next-to-top coefficient, when that shift is polynomial."""
    rows = G.coeffs_in(var)
    m = max(rows)
    if m < 1 or (m - 1) not in rows:
        return None
    top, nxt = rows[m], rows[m - 1]
    q, r = divmod(nxt, top.scale(m))
    if not r.is_zero() or q.is_zero():
        return None
    return AddXPolyToY(q) if var == "y" else AddYPolyToX(q)


def candidate_ops(G, shear_degree=2):
    ops = []
    for var in ("y", "x"):
        op = _tschirnhaus(G, var)
        if op is not None:
            ops.append(op)
    for c in (1, -1, 2, -2):
        ops.append(AddYPolyToX(UniPoly([c])))
        ops.append(AddXPolyToY(UniPoly([c])))
    for k in range(1, shear_degree + 1):
        for c in (1, -1):
            ops.append(AddXPolyToY(UniPoly.monomial(c, k)))
            ops.append(AddYPolyToX(UniPoly.monomial(c, k)))
    return ops


def _finish(F, cov, form):
    full = _replace_cov(form, cov + form.cov)
    return full if full.matches(F) else None


def classify_normal_form(F, hints=None, search_depth=3, shear_degree=2):
    """Return the first normal form found for F, or Unclassified.

    Order: direct match, then each hinted ChangeOfVars, then a breadth-first
    search of elementary ops that strictly reduce (total degree, term count).
    """
    if F.is_constant():
        raise ValueError("cannot classify a constant polynomial")
    form = detect(F)
    if form is not None:
        return _finish(F, IDENTITY, form) or Unclassified()
    for cov in hints or ():
        G = cov.apply_poly(F)
        form = detect(G) if not G.is_constant() else None
        if form is not None:
            found = _finish(F, cov, form)
            if found is not None:
                return found
    seen = {F}
    queue = deque([(F, IDENTITY)])
    while queue:
        G, cov = queue.popleft()
        if len(cov) >= search_depth:
            continue
        for op in candidate_ops(G, shear_degree):
            H = op.apply_poly(G)
            if H in seen or H.is_constant() or _complexity(H) >= _complexity(G):
                continue
            seen.add(H)
            nxt = cov + op
            form = detect(H)
            if form is not None:
                found = _finish(F, nxt, form)
                if found is not None:
                    return found
            queue.append((H, nxt))
    return Unclassified()
