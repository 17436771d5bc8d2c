"""Clifford algebras in normal form over the subset basis.

A CliffordContext fixes a quadratic form Q; elements are sparse maps
from strictly increasing index tuples (blades) to scalars.  The zero
form gives the exterior algebra.  Products are normal-ordered with the
rewrite rules

    e_j e_i -> polar(i, j) 1 - e_i e_j   (j > i)
    e_i e_i -> Q(e_i) 1

which use only the stored (diagonal, strict-upper polar) data and are
valid in every characteristic.

The module also provides the quotient map from the tensor algebra, the
descended contractions, the deformation maps between fibers over
different quadratic forms, twisted products, the interior action of the
exterior algebra of the dual, its exponential, and the symbol and
quantization maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CharacteristicError, ContextMismatch, FormError, ParseError
from .forms import (AlgebraContext, BilinearForm, DualTwoForm, Field, LinearForm,
                    QuadraticForm, Vector, quad_of_bilinear, same_context)
from .scalars import Scalar
from .tensor import TensorElt


@dataclass(frozen=True)
class CliffordContext:
    """The algebra over a fixed quadratic form."""

    quadratic: QuadraticForm

    @property
    def ctx(self) -> AlgebraContext:
        return self.quadratic.ctx

    @property
    def dim(self) -> int:
        return self.quadratic.ctx.dim

    @property
    def field(self) -> Field:
        return self.quadratic.ctx.field

    @classmethod
    def exterior(cls, ctx: AlgebraContext) -> "CliffordContext":
        return cls(QuadraticForm.zero(ctx))

    def is_exterior(self) -> bool:
        return self.quadratic.is_zero()

    def shift(self, F: BilinearForm) -> "CliffordContext":
        """The context whose quadratic form is Q + (x -> F(x, x))."""
        same_context(self.ctx, F.ctx)
        return CliffordContext(self.quadratic + quad_of_bilinear(F))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "field": self.field.spec,
            "quadratic": self.quadratic.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CliffordContext":
        ctx = AlgebraContext(int(data["dim"]), Field.from_spec(data["field"]))
        return cls(QuadraticForm.from_json(ctx, data["quadratic"]))


# Bounded: the key includes the context, and callers churn through many
# short-lived contexts.  1 << 16 still covers one full dimension-12 algebra.
@lru_cache(maxsize=1 << 16)
def _blade_times_gen(cctx: CliffordContext, blade: tuple, k: int):
    """Normal form of (basis blade) * e_k, as a tuple of (blade, coeff)."""
    if not blade:
        return (((k,), cctx.field.one),)
    last = blade[-1]
    prefix = blade[:-1]
    if last < k:
        return ((blade + (k,), cctx.field.one),)
    q = cctx.quadratic
    if last == k:
        qk = q.value_at(k)
        return ((prefix, qk),) if qk else ()
    # last > k: commute e_k past e_last
    out = {}
    phi = q.polar(k, last)
    if phi:
        out[prefix] = phi
    for b, c in _blade_times_gen(cctx, prefix, k):
        nb = b + (last,)
        cur = out.get(nb)
        out[nb] = -c if cur is None else cur - c
    return tuple((b, c) for b, c in out.items() if c)


def _apply_gens(cctx: CliffordContext, terms: dict, gens) -> dict:
    """Right-multiply a blade->coeff map by a sequence of generators."""
    cur = terms
    for k in gens:
        nxt = {}
        for blade, coeff in cur.items():
            for b, c in _blade_times_gen(cctx, blade, k):
                t = coeff * c
                prev = nxt.get(b)
                nxt[b] = t if prev is None else prev + t
        cur = {b: v for b, v in nxt.items() if v}
        if not cur:
            break
    return cur


class CliffElt:
    """A normal-form element: finite map from increasing blades to scalars."""

    __slots__ = ("cctx", "terms")

    def __init__(self, cctx: CliffordContext, terms=None):
        self.cctx = cctx
        clean = {}
        if terms:
            for blade, coeff in terms.items():
                if coeff:
                    clean[blade] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, cctx: CliffordContext) -> "CliffElt":
        return cls(cctx)

    @classmethod
    def unit(cls, cctx: CliffordContext) -> "CliffElt":
        return cls(cctx, {(): cctx.field.one})

    @classmethod
    def blade(cls, cctx: CliffordContext, indices, coeff=1) -> "CliffElt":
        blade = tuple(indices)
        if any(not 1 <= i <= cctx.dim for i in blade):
            raise FormError(f"blade index out of range 1..{cctx.dim}: {blade}")
        if any(blade[t] >= blade[t + 1] for t in range(len(blade) - 1)):
            raise FormError(f"blade must be strictly increasing: {blade}")
        return cls(cctx, {blade: cctx.ctx.coerce(coeff)})

    @classmethod
    def from_vector(cls, cctx: CliffordContext, x: Vector) -> "CliffElt":
        same_context(cctx.ctx, x.ctx)
        return cls(cctx, {(i + 1,): c for i, c in enumerate(x.coeffs) if c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CliffElt):
            return NotImplemented
        return self.cctx == other.cctx and self.terms == other.terms

    def __add__(self, other: "CliffElt") -> "CliffElt":
        if self.cctx != other.cctx:
            raise ContextMismatch("elements of different Clifford contexts")
        out = dict(self.terms)
        for blade, coeff in other.terms.items():
            cur = out.get(blade)
            out[blade] = coeff if cur is None else cur + coeff
        return CliffElt(self.cctx, out)

    def __sub__(self, other: "CliffElt") -> "CliffElt":
        return self + (-other)

    def __neg__(self) -> "CliffElt":
        return CliffElt(self.cctx, {b: -c for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffElt):
            if self.cctx != other.cctx:
                raise ContextMismatch("elements of different Clifford contexts")
            out = {}
            for sa, ca in self.terms.items():
                for sb, cb in other.terms.items():
                    for blade, coeff in _apply_gens(self.cctx, {sa: ca * cb}, sb).items():
                        cur = out.get(blade)
                        out[blade] = coeff if cur is None else cur + coeff
            return CliffElt(self.cctx, out)
        if isinstance(other, (Scalar, int)):
            s = self.cctx.ctx.coerce(other)
            return CliffElt(self.cctx, {b: c * s for b, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def coeff(self, blade) -> Scalar:
        return self.terms.get(tuple(blade), self.cctx.field.zero)

    def grade_part(self, p: int) -> "CliffElt":
        return CliffElt(self.cctx, {b: c for b, c in self.terms.items() if len(b) == p})

    def grade_involution(self) -> "CliffElt":
        """Sign (-1)^p per blade cardinality; descends from the tensor
        algebra because the defining ideal is generated by even elements."""
        return CliffElt(self.cctx, {
            b: (c if len(b) % 2 == 0 else -c) for b, c in self.terms.items()})

    def reverse(self) -> "CliffElt":
        """The anti-automorphism reversing generator order, computed by
        re-expanding each reversed blade through the product."""
        out = CliffElt.zero(self.cctx)
        for blade, c in self.terms.items():
            prod = _apply_gens(self.cctx, {(): c}, reversed(blade))
            out = out + CliffElt(self.cctx, prod)
        return out

    def lift(self) -> TensorElt:
        """A canonical tensor-algebra representative (blades as words)."""
        return TensorElt(self.cctx.ctx, dict(self.terms))

    def __repr__(self):
        if not self.terms:
            return "CliffElt(0)"
        bits = []
        for b in sorted(self.terms, key=lambda t: (len(t), t)):
            bits.append(f"{self.terms[b]}*{{{','.join(map(str, b))}}}")
        return "CliffElt(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        blades = sorted(self.terms, key=lambda t: (len(t), t))
        return {"terms": [{"blade": list(b), "coeff": str(self.terms[b])} for b in blades]}

    @classmethod
    def from_json(cls, cctx: CliffordContext, data: dict) -> "CliffElt":
        out = {}
        for term in data["terms"]:
            blade = tuple(term["blade"])
            if any(not isinstance(i, int) or not 1 <= i <= cctx.dim for i in blade):
                raise ParseError(f"blade index out of range: {list(blade)}")
            if any(blade[t] >= blade[t + 1] for t in range(len(blade) - 1)):
                raise ParseError(f"blade must be strictly increasing: {list(blade)}")
            c = cctx.field.parse(term["coeff"])
            cur = out.get(blade)
            out[blade] = c if cur is None else cur + c
        return cls(cctx, out)


class DualElt:
    """An element of the exterior algebra of the dual space."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms=None):
        self.ctx = ctx
        clean = {}
        if terms:
            for subset, coeff in terms.items():
                if coeff:
                    clean[subset] = coeff
        self.terms = clean

    @classmethod
    def unit(cls, ctx: AlgebraContext) -> "DualElt":
        return cls(ctx, {(): ctx.field.one})

    @classmethod
    def from_linear(cls, f: LinearForm) -> "DualElt":
        return cls(f.ctx, {(i + 1,): c for i, c in enumerate(f.coeffs) if c})

    @classmethod
    def from_two_form(cls, astar: DualTwoForm) -> "DualElt":
        terms = {}
        n = astar.ctx.dim
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                c = astar.at(i, j)
                if c:
                    terms[(i, j)] = c
        return cls(astar.ctx, terms)

    def __add__(self, other: "DualElt") -> "DualElt":
        same_context(self.ctx, other.ctx)
        out = dict(self.terms)
        for s, c in other.terms.items():
            cur = out.get(s)
            out[s] = c if cur is None else cur + c
        return DualElt(self.ctx, out)

    def __neg__(self) -> "DualElt":
        return DualElt(self.ctx, {s: -c for s, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            s = self.ctx.coerce(other)
            return DualElt(self.ctx, {b: s * c for b, c in self.terms.items()})
        return NotImplemented

    def __mul__(self, other):
        """Wedge product."""
        if isinstance(other, (Scalar, int)):
            return self.__rmul__(other)
        if not isinstance(other, DualElt):
            return NotImplemented
        same_context(self.ctx, other.ctx)
        out = {}
        for sa, ca in self.terms.items():
            for sb, cb in other.terms.items():
                if set(sa) & set(sb):
                    continue
                # parity of the merge: pairs (a, b) with a in sa, b in sb, a > b
                crossings = sum(1 for x in sa for y in sb if x > y)
                merged = tuple(sorted(sa + sb))
                c = ca * cb
                if crossings % 2:
                    c = -c
                cur = out.get(merged)
                out[merged] = c if cur is None else cur + c
        return DualElt(self.ctx, out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, DualElt):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __repr__(self):
        return f"DualElt({self.terms})"


def quotient_map(cctx: CliffordContext, u: TensorElt) -> CliffElt:
    """The canonical algebra homomorphism from the tensor algebra onto
    the quotient: words become normal-ordered generator products."""
    same_context(cctx.ctx, u.ctx)
    out = CliffElt.zero(cctx)
    for word, c in u.terms.items():
        out = out + CliffElt(cctx, _apply_gens(cctx, {(): c}, word))
    return out


def contract(f: LinearForm, w: CliffElt) -> CliffElt:
    """The descended antiderivation of a linear form on normal forms."""
    same_context(f.ctx, w.cctx.ctx)
    out = {}
    for blade, c in w.terms.items():
        for pos, idx in enumerate(blade):
            fv = f.at(idx)
            if not fv:
                continue
            t = c * fv if pos % 2 == 0 else -(c * fv)
            rest = blade[:pos] + blade[pos + 1:]
            cur = out.get(rest)
            out[rest] = t if cur is None else cur + t
    return CliffElt(w.cctx, out)


def contract_vec(F: BilinearForm, x: Vector, w: CliffElt) -> CliffElt:
    """Contraction by the linear form F(x, .)."""
    return contract(F.partial_left(x), w)


def _check_shift(F: BilinearForm, source_q: QuadraticForm, target_q: QuadraticForm):
    if source_q != target_q + quad_of_bilinear(F):
        raise FormError(
            "quadratic forms do not match: source must equal target plus the "
            "quadratic part of the deforming form")


def deform(F: BilinearForm, w: CliffElt, target: CliffordContext | None = None) -> CliffElt:
    """The fiber-to-fiber deformation attached to F.

    Maps the algebra of Q' = Q + (x -> F(x,x)) linearly onto the algebra
    of Q; fixes the unit and the vectors; composing deformations adds
    their forms, so deform(-F, .) is the inverse.  Computed by the blade
    recursion  deform(x w) = x deform(w) + contraction_x(deform(w)).
    """
    src = w.cctx
    same_context(F.ctx, src.ctx)
    if target is None:
        target = CliffordContext(src.quadratic - quad_of_bilinear(F))
    else:
        same_context(target.ctx, src.ctx)
        _check_shift(F, src.quadratic, target.quadratic)
    cache = {(): CliffElt.unit(target)}

    def bl(blade):
        got = cache.get(blade)
        if got is not None:
            return got
        tail = bl(blade[1:])
        idx = blade[0]
        res = CliffElt.blade(target, (idx,)) * tail + contract(F.row_form(idx), tail)
        cache[blade] = res
        return res

    out = CliffElt.zero(target)
    for blade, c in w.terms.items():
        out = out + c * bl(blade)
    return out


def deform_apply(F: BilinearForm, u: CliffElt, v: CliffElt) -> CliffElt:
    """The operator form of the deformation: u (over Q + Q_F) acts on
    the algebra of Q through products of (left multiplication plus
    contraction); evaluating at the unit recovers deform(F, u)."""
    same_context(F.ctx, v.cctx.ctx)
    _check_shift(F, u.cctx.quadratic, v.cctx.quadratic)
    out = CliffElt.zero(v.cctx)
    for blade, c in u.terms.items():
        acc = v
        for idx in reversed(blade):
            acc = CliffElt.blade(v.cctx, (idx,)) * acc + contract(F.row_form(idx), acc)
        out = out + c * acc
    return out


def twisted_mul(F: BilinearForm, u: CliffElt, v: CliffElt) -> CliffElt:
    """The product of the shifted algebra carried onto this one: deform
    both factors into the algebra of Q + Q_F, multiply there, come back.
    For a vector u = x this is x v + contraction_x(v)."""
    if u.cctx != v.cctx:
        raise ContextMismatch("twisted product needs elements of one context")
    same_context(F.ctx, u.cctx.ctx)
    shifted = u.cctx.shift(F)
    negF = -F
    up = deform(negF, u, target=shifted)
    vp = deform(negF, v, target=shifted)
    return deform(F, up * vp, target=u.cctx)


def interior(ustar: DualElt, w: CliffElt) -> CliffElt:
    """The action of the exterior algebra of the dual: a wedge of linear
    forms acts as the composition of their contractions (leftmost form
    outermost), extended linearly."""
    same_context(ustar.ctx, w.cctx.ctx)
    out = CliffElt.zero(w.cctx)
    for subset, c in ustar.terms.items():
        acc = w
        for idx in reversed(subset):
            acc = contract(LinearForm.dual_basis(w.cctx.ctx, idx), acc)
            if not acc:
                break
        out = out + c * acc
    return out


def exp_contract(astar: DualTwoForm, w: CliffElt) -> CliffElt:
    """Exponential of the interior action of a dual two-form.

    The series terminates because each application lowers blade size by
    two.  Needs characteristic 0 for the 1/k! weights; in characteristic
    p use deform with the corresponding alternating form instead."""
    same_context(astar.ctx, w.cctx.ctx)
    field = w.cctx.field
    if field.char != 0:
        raise CharacteristicError(
            "exponential of a contraction needs characteristic 0; "
            "use deform with the alternating form instead")
    op = DualElt.from_two_form(astar)
    total = w
    cur = w
    k = 1
    fact = field.one
    while True:
        cur = interior(op, cur)
        if not cur:
            break
        fact = fact * k
        total = total + (field.one / fact) * cur
        k += 1
    return total


def _half_polar(cctx: CliffordContext) -> BilinearForm:
    if cctx.field.char == 2:
        raise CharacteristicError(
            "symbol/quantization need 1/2, undefined in characteristic 2")
    half = cctx.field.one / cctx.field(2)
    n = cctx.dim
    q = cctx.quadratic
    rows = tuple(
        tuple(half * q.polar(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    return BilinearForm(cctx.ctx, rows)


def symbol(w: CliffElt) -> CliffElt:
    """The symbol map: the deformation by half the polar form, landing
    in the exterior algebra.  Inverse of quantize."""
    return deform(_half_polar(w.cctx), w, target=CliffordContext.exterior(w.cctx.ctx))


def quantize(cctx: CliffordContext, ext: CliffElt) -> CliffElt:
    """The quantization map: from the exterior algebra back into the
    algebra of Q.  Inverse of symbol."""
    if not ext.cctx.is_exterior():
        raise FormError("quantize expects an exterior-algebra element")
    same_context(cctx.ctx, ext.cctx.ctx)
    return deform(-_half_polar(cctx), ext, target=cctx)
