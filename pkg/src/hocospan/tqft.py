"""Evaluate normal cospans in a commutative Frobenius algebra over the rationals.

An algebra is given by structure constants ``mult[i][j][k]`` (``e_i e_j =
sum_k mult[i][j][k] e_k``), a unit vector and a counit vector.  The
comultiplication is always derived from the pairing ``eps(e_i e_j)``.

An open component with ``m`` inputs, ``n`` outputs and genus ``g``
evaluates to ``comult^(n) . handle^g . mult^(m)``; a closed component of
genus ``g`` is the scalar ``eps(handle^g(1))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Sequence

from hocospan.linear import LinearMap, SingularMatrixError, inverse, multi_indices
from hocospan.normal import NormalCospan, canonicalize
from hocospan.termlang import Comult, Counit, Id, Mult, Par, Seq, Swap, Term, Unit

BUILTIN_ALGEBRAS = ("rationals", "dual", "split", "truncated3")


class AlgebraError(ValueError):
    pass


class AlgebraFormatError(AlgebraError):
    pass


class InvalidAlgebraError(AlgebraError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid Frobenius algebra:\n" + report.to_text())


class DegeneratePairingError(InvalidAlgebraError):
    pass


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        if self.ok:
            return "valid\n"
        return "".join(f"FAIL {f}\n" for f in self.failures)


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebra:
    dim: int
    mult: tuple[tuple[tuple[Fraction, ...], ...], ...]
    unit: tuple[Fraction, ...]
    counit: tuple[Fraction, ...]
    name: str = ""

    def __post_init__(self):
        d = self.dim
        if d < 1:
            raise AlgebraFormatError(f"dim must be at least 1, got {d}")
        mult = tuple(tuple(tuple(Fraction(x) for x in mij) for mij in mi) for mi in self.mult)
        if len(mult) != d or any(len(mi) != d or any(len(mij) != d for mij in mi) for mi in mult):
            raise AlgebraFormatError(f"mult must be a {d}x{d}x{d} array")
        for name in ("unit", "counit"):
            vec = tuple(Fraction(x) for x in getattr(self, name))
            if len(vec) != d:
                raise AlgebraFormatError(f"{name} must have {d} entries, got {len(vec)}")
            object.__setattr__(self, name, vec)
        object.__setattr__(self, "mult", mult)

    def product(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
        d = self.dim
        out = [Fraction(0)] * d
        for i in range(d):
            if a[i]:
                for j in range(d):
                    if b[j]:
                        c = a[i] * b[j]
                        for k in range(d):
                            out[k] += c * self.mult[i][j][k]
        return out

    @cached_property
    def pairing(self) -> list[list[Fraction]]:
        """``pairing[i][j] = eps(e_i e_j)``."""
        d = self.dim
        return [
            [sum((self.mult[i][j][k] * self.counit[k] for k in range(d)), Fraction(0)) for j in range(d)]
            for i in range(d)
        ]

    @cached_property
    def comult(self) -> list[list[list[Fraction]]]:
        return derive_comultiplication(self)

    # matrices of the structure maps
    @cached_property
    def mult_map(self) -> LinearMap:
        d = self.dim
        return LinearMap(d, d * d, [[self.mult[i][j][k] for i in range(d) for j in range(d)] for k in range(d)])

    @cached_property
    def unit_map(self) -> LinearMap:
        return LinearMap(self.dim, 1, [[u] for u in self.unit])

    @cached_property
    def counit_map(self) -> LinearMap:
        return LinearMap(1, self.dim, [list(self.counit)])

    @cached_property
    def comult_map(self) -> LinearMap:
        d = self.dim
        delta = self.comult
        return LinearMap(d * d, d, [[delta[k][i][j] for k in range(d)] for i in range(d) for j in range(d)])

    @cached_property
    def swap_map(self) -> LinearMap:
        d = self.dim
        rows = [[int(col == j * d + i) for col in range(d * d)] for i in range(d) for j in range(d)]
        return LinearMap(d * d, d * d, rows)

    @cached_property
    def handle(self) -> LinearMap:
        return handle_operator(self)

    @cached_property
    def _components(self) -> dict[tuple[int, int, int], LinearMap]:
        return {}


def validate_algebra(A: FrobeniusAlgebra) -> ValidationReport:
    """Check associativity, commutativity, unit laws and nondegeneracy exactly."""
    d, m = A.dim, A.mult
    failures = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                left = A.product(m[i][j], _basis(d, k))
                right = A.product(_basis(d, i), m[j][k])
                for l in range(d):
                    if left[l] != right[l]:
                        failures.append(f"associativity (e{i} e{j}) e{k} != e{i} (e{j} e{k}) at component {l}")
    for i in range(d):
        for j in range(i + 1, d):
            if m[i][j] != m[j][i]:
                failures.append(f"commutativity e{i} e{j} != e{j} e{i}")
    for j in range(d):
        left = A.product(A.unit, _basis(d, j))
        right = A.product(_basis(d, j), A.unit)
        if left != _basis(d, j):
            failures.append(f"left unit law fails on e{j}")
        if right != _basis(d, j):
            failures.append(f"right unit law fails on e{j}")
    try:
        inverse(A.pairing)
    except SingularMatrixError:
        failures.append("degenerate pairing: eps(e_i e_j) is not invertible")
    return ValidationReport(failures)


def require_valid(A: FrobeniusAlgebra) -> FrobeniusAlgebra:
    report = validate_algebra(A)
    if not report.ok:
        raise InvalidAlgebraError(report)
    return A


def _basis(d: int, i: int) -> list[Fraction]:
    return [Fraction(int(k == i)) for k in range(d)]


def derive_comultiplication(A: FrobeniusAlgebra) -> list[list[list[Fraction]]]:
    """Structure constants ``delta[k][p][q]``: coefficient of ``e_p ⊗ e_q`` in ``Δ(e_k)``.

    ``Δ(a) = sum_ij binv[i][j] (a e_i) ⊗ e_j`` with ``binv`` the inverse pairing.
    """
    d = A.dim
    try:
        binv = inverse(A.pairing)
    except SingularMatrixError:
        raise DegeneratePairingError(
            ValidationReport(["degenerate pairing: eps(e_i e_j) is not invertible"])
        ) from None
    return [
        [
            [sum((binv[i][q] * A.mult[k][i][p] for i in range(d)), Fraction(0)) for q in range(d)]
            for p in range(d)
        ]
        for k in range(d)
    ]


def handle_operator(A: FrobeniusAlgebra) -> LinearMap:
    return A.mult_map @ A.comult_map


def iterated_mult(A: FrobeniusAlgebra, m: int) -> LinearMap:
    """``A^{⊗m} -> A``; the unit when ``m == 0``."""
    if m == 0:
        return A.unit_map
    result = LinearMap.identity(A.dim)
    for _ in range(m - 1):
        result = A.mult_map @ result.tensor(LinearMap.identity(A.dim))
    return result


def iterated_comult(A: FrobeniusAlgebra, n: int) -> LinearMap:
    """``A -> A^{⊗n}``; the counit when ``n == 0``."""
    if n == 0:
        return A.counit_map
    result = LinearMap.identity(A.dim)
    for _ in range(n - 1):
        result = result.tensor(LinearMap.identity(A.dim)) @ A.comult_map
    return result


def component_map(A: FrobeniusAlgebra, inputs: int, outputs: int, genus: int) -> LinearMap:
    key = (inputs, outputs, genus)
    if key not in A._components:
        A._components[key] = iterated_comult(A, outputs) @ A.handle.power(genus) @ iterated_mult(A, inputs)
    return A._components[key]


def closed_scalar(A: FrobeniusAlgebra, genus: int) -> Fraction:
    return component_map(A, 0, 0, genus)[0, 0]


def eval_normal_cospan(p: NormalCospan, A: FrobeniusAlgebra) -> LinearMap:
    """The linear map ``A^{⊗dom} -> A^{⊗cod}`` denoted by ``p``.

    Components own disjoint ports, so a matrix entry is the product of
    one entry per component times the closed scalars.  Only nonzero
    component entries are combined.
    """
    p = canonicalize(p)
    d = A.dim
    scalar = Fraction(1)
    for g in p.closed_components:
        scalar *= closed_scalar(A, g)
    cells = {(0, 0): scalar} if scalar else {}
    for c in p.open_components:
        mat = component_map(A, len(c.in_ports), len(c.out_ports), c.betti)
        rows = [_place(out, c.out_ports, p.cod_size, d) for out in multi_indices(len(c.out_ports), d)]
        cols = [_place(inp, c.in_ports, p.dom_size, d) for inp in multi_indices(len(c.in_ports), d)]
        nonzero = [(rows[r], cols[k], x) for r, row in enumerate(mat.entries) for k, x in enumerate(row) if x]
        cells = {(r0 + r, k0 + k): x0 * x for (r0, k0), x0 in cells.items() for r, k, x in nonzero}
    out = [[Fraction(0)] * d ** p.dom_size for _ in range(d ** p.cod_size)]
    for (r, k), x in cells.items():
        out[r][k] = x
    return LinearMap(d ** p.cod_size, d ** p.dom_size, out)


def _place(digits, ports, width: int, d: int) -> int:
    """Flat-index contribution of ``digits`` sitting at ``ports`` of a width-``width`` tensor power."""
    return sum(x * d ** (width - 1 - port) for x, port in zip(digits, ports))


def eval_term(t: Term, A: FrobeniusAlgebra) -> LinearMap:
    """Evaluate a term generator by generator, with no normalization."""
    if isinstance(t, Seq):
        return eval_term(t.second, A) @ eval_term(t.first, A)
    if isinstance(t, Par):
        return eval_term(t.left, A).tensor(eval_term(t.right, A))
    if isinstance(t, Id):
        return LinearMap.identity(A.dim ** t.n)
    if isinstance(t, Mult):
        return A.mult_map
    if isinstance(t, Unit):
        return A.unit_map
    if isinstance(t, Comult):
        return A.comult_map
    if isinstance(t, Counit):
        return A.counit_map
    if isinstance(t, Swap):
        return A.swap_map
    raise TypeError(f"not a term: {t!r}")


# algebra files


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise AlgebraFormatError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            pass
    raise AlgebraFormatError(f"{where}: expected an integer or 'p/q', got {value!r}")


def _vector(data, where: str, d: int) -> list[Fraction]:
    if not isinstance(data, list) or len(data) != d:
        raise AlgebraFormatError(f"{where}: expected a list of {d} rationals")
    return [parse_rational(x, f"{where}[{i}]") for i, x in enumerate(data)]


def algebra_from_dict(data: dict, name: str = "") -> FrobeniusAlgebra:
    if not isinstance(data, dict):
        raise AlgebraFormatError("algebra definition must be an object")
    if "comult" in data:
        raise AlgebraFormatError("comult: the comultiplication is derived from the pairing and may not be given")
    unknown = set(data) - {"dim", "mult", "unit", "counit", "name"}
    if unknown:
        raise AlgebraFormatError(f"unknown field(s): {', '.join(sorted(unknown))}")
    for key in ("dim", "mult", "unit", "counit"):
        if key not in data:
            raise AlgebraFormatError(f"{key}: missing field")
    d = data["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise AlgebraFormatError(f"dim: expected a positive integer, got {d!r}")
    mult = data["mult"]
    if not isinstance(mult, list) or len(mult) != d:
        raise AlgebraFormatError(f"mult: expected a {d}x{d}x{d} array")
    rows = []
    for i, mi in enumerate(mult):
        if not isinstance(mi, list) or len(mi) != d:
            raise AlgebraFormatError(f"mult[{i}]: expected {d} entries")
        rows.append([_vector(mij, f"mult[{i}][{j}]", d) for j, mij in enumerate(mi)])
    return FrobeniusAlgebra(
        d,
        rows,
        _vector(data["unit"], "unit", d),
        _vector(data["counit"], "counit", d),
        name=str(data.get("name", name)),
    )


def loads_algebra(text: str, name: str = "") -> FrobeniusAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFormatError(f"not valid JSON: {e}") from None
    return algebra_from_dict(data, name)


def load_algebra(path: str | Path) -> FrobeniusAlgebra:
    path = Path(path)
    return loads_algebra(path.read_text(encoding="utf-8"), name=path.stem)


def builtin_algebra(name: str) -> FrobeniusAlgebra:
    if name not in BUILTIN_ALGEBRAS:
        raise AlgebraError(f"unknown built-in algebra {name!r}; choose from {', '.join(BUILTIN_ALGEBRAS)}")
    text = resources.files("hocospan.algebras").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return loads_algebra(text, name)


def resolve_algebra(spec: str) -> FrobeniusAlgebra:
    """A built-in algebra name or a path to an algebra file."""
    if spec in BUILTIN_ALGEBRAS:
        return builtin_algebra(spec)
    return load_algebra(spec)
