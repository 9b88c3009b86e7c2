"""Cross sections of strata: positivity domains, parametrized slices,
the projection map with its exact Jacobian, injectivity certificates, and
fixture-scale solving of the Jacobi system on each sign branch.

A cross-section spec fixes a strictly positive rational center point, an
ordered list of integer kernel directions, a sign transversal and a display
exponent.  All solving happens on the affine (exponent 1) slice; a nonunit
exponent only changes how magnitudes are rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, log
from typing import Iterable, Sequence

from .errors import (DimensionMismatchError, ModeError, NotAlignedError,
                     OutsideDomainError, UnsupportedShapeError,
                     WNotQuadrupleDerivedError)
from .jacobi import JacobiSystem
from .linalg import (IntVector, gf2_coset_transversal, gf2_root_matrix,
                     left_null_basis, rank, root_matrix, span_equals,
                     transpose)
from .poly import (Poly, add_univar, eval_univar, mul_univar, rational_roots,
                   trim)
from .quadruples import quadruple_of
from .triples import IndexSet, StructureVector


@dataclass(frozen=True)
class CrossSectionSpec:
    """Center point, kernel directions, sign transversal and exponent."""

    lam: IndexSet
    a0: tuple[Fraction, ...]
    W: tuple[IntVector, ...]
    p: Fraction
    T: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.W)


def cross_section(lam: IndexSet, a0: Sequence | None = None,
                  p=Fraction(1), W: Sequence[IntVector] | None = None,
                  T: Sequence[tuple[int, ...]] | None = None,
                  require_lie_center: bool = False) -> CrossSectionSpec:
    """Build a validated spec; defaults give the canonical cross section."""
    m = len(lam)
    if a0 is None:
        center = tuple(Fraction(1) for _ in range(m))
    else:
        center = tuple(Fraction(x) for x in a0)
    if len(center) != m:
        raise DimensionMismatchError(f"center point needs {m} entries")
    if any(x <= 0 for x in center):
        raise OutsideDomainError("center point must be strictly positive")
    y = root_matrix(lam)
    yt = transpose(y)
    if W is None:
        dirs = left_null_basis(y)
    else:
        dirs = tuple(tuple(int(x) for x in w) for w in W)
        for w in dirs:
            if len(w) != m:
                raise DimensionMismatchError("direction length mismatch")
            if any(sum(row[k] * w[k] for k in range(m)) != 0 for row in yt):
                raise DimensionMismatchError("direction not in Null(Y^T)")
    p = Fraction(p)
    if p == 0:
        raise OutsideDomainError("exponent must be nonzero")
    trans = tuple(tuple(t) for t in T) if T is not None else \
        gf2_coset_transversal(gf2_root_matrix(lam))
    spec = CrossSectionSpec(lam, center, dirs, p, trans)
    if require_lie_center and not center_is_lie(spec):
        raise OutsideDomainError(
            "center point does not satisfy the Jacobi system")
    return spec


# ---------------------------------------------------------------------------
# Positivity domain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearInequality:
    """const + coeffs . params > 0."""

    const: Fraction
    coeffs: tuple[Fraction, ...]
    positions: tuple[int, ...] = ()

    def evaluate(self, params: Sequence) -> Fraction:
        total = Fraction(self.const)
        for c, t in zip(self.coeffs, params):
            total += c * Fraction(t)
        return total

    def render(self) -> str:
        names = "stu" if len(self.coeffs) <= 3 else \
            [f"t{i+1}" for i in range(len(self.coeffs))]
        parts = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c > 0:
                parts.append(f"+ {c}*{name}")
            else:
                parts.append(f"- {-c}*{name}")
        body = f"{self.const} " + " ".join(parts) if parts else str(self.const)
        return body.strip() + " > 0"


@dataclass(frozen=True)
class PolytopeDomain:
    inequalities: tuple[LinearInequality, ...]

    def contains(self, params: Sequence) -> bool:
        return all(q.evaluate(params) > 0 for q in self.inequalities)


def _normalized(const: Fraction, coeffs: tuple[Fraction, ...]):
    """Scale to primitive integers, keeping orientation."""
    vals = [const, *coeffs]
    denom = 1
    for v in vals:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints[0], tuple(ints[1:])


_Constraint = tuple[tuple[Fraction, ...], Fraction, bool]  # coeffs, const, strict


def _fm_feasible(constraints: list[_Constraint], nvars: int) -> bool:
    """Fourier-Motzkin feasibility of {coeffs.t + const (>|>=) 0}."""
    current = constraints
    for v in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, const, strict in current:
            if coeffs[v] > 0:
                pos.append((coeffs, const, strict))
            elif coeffs[v] < 0:
                neg.append((coeffs, const, strict))
            else:
                rest.append((coeffs, const, strict))
        combined = rest
        for pc, pb, ps in pos:
            for nc, nb, ns in neg:
                fp, fn = -nc[v], pc[v]
                coeffs = tuple(fp * a + fn * b for a, b in zip(pc, nc))
                const = fp * pb + fn * nb
                combined.append((coeffs, const, ps or ns))
        current = list(set(combined))
    for _, const, strict in current:
        if strict and const <= 0:
            return False
        if not strict and const < 0:
            return False
    return True


def delta_domain(spec: CrossSectionSpec) -> PolytopeDomain:
    """Irredundant strict inequalities cutting out the positive slice."""
    d = spec.dim
    merged: dict[tuple, tuple[Fraction, tuple[Fraction, ...], list[int]]] = {}
    for k in range(len(spec.lam)):
        const = spec.a0[k]
        coeffs = tuple(Fraction(w[k]) for w in spec.W)
        if all(c == 0 for c in coeffs):
            continue  # a0 > 0 makes the constraint vacuous
        nconst, ncoeffs = _normalized(const, coeffs)
        key = (nconst, ncoeffs)
        if key in merged:
            merged[key][2].append(k + 1)
        else:
            merged[key] = (const, coeffs, [k + 1])
    items = [LinearInequality(c, cf, tuple(pos))
             for c, cf, pos in merged.values()]
    # same direction, different constant: keep only the tightest
    by_dir: dict[tuple, LinearInequality] = {}
    for q in items:
        _, ncoeffs = _normalized(q.const, q.coeffs)
        scale = next((c / n for c, n in zip(q.coeffs, ncoeffs) if n != 0))
        key = ncoeffs
        held = by_dir.get(key)
        if held is None or q.const / scale < held.const / _dir_scale(held):
            by_dir[key] = q
    kept = sorted(by_dir.values(), key=lambda q: (q.positions, q.coeffs))
    # drop anything implied by the rest (exact Fourier-Motzkin test)
    idx = 0
    while idx < len(kept):
        candidate = kept[idx]
        others = [q for q in kept if q is not candidate]
        system: list[_Constraint] = [(q.coeffs, q.const, True) for q in others]
        system.append((tuple(-c for c in candidate.coeffs),
                       -candidate.const, False))  # candidate <= 0
        if others and not _fm_feasible(system, d):
            kept.pop(idx)
        else:
            idx += 1
    return PolytopeDomain(tuple(kept))


def _dir_scale(q: LinearInequality) -> Fraction:
    _, ncoeffs = _normalized(q.const, q.coeffs)
    return next((c / n for c, n in zip(q.coeffs, ncoeffs) if n != 0))


# ---------------------------------------------------------------------------
# Slice points
# ---------------------------------------------------------------------------


def point_at(spec: CrossSectionSpec, params: Sequence) -> tuple[Fraction, ...]:
    """Positive magnitudes a0 + sum t_i W_i; raises outside the domain."""
    vals = _slice_values(spec, params)
    if any(v <= 0 for v in vals):
        raise OutsideDomainError(f"parameters {params} leave the positive slice")
    return vals


def _slice_values(spec: CrossSectionSpec, params: Sequence) -> tuple[Fraction, ...]:
    ts = [Fraction(t) for t in params]
    if len(ts) != spec.dim:
        raise DimensionMismatchError(f"expected {spec.dim} parameters")
    return tuple(a + sum(t * w[k] for t, w in zip(ts, spec.W))
                 for k, a in enumerate(spec.a0))


def sigma_point(spec: CrossSectionSpec, sign: Sequence[int],
                params: Sequence) -> StructureVector:
    """Apply a transversal sign mask to the slice point."""
    mags = point_at(spec, params)
    if len(sign) != len(mags):
        raise DimensionMismatchError("sign mask length mismatch")
    vals = tuple(-v if s else v for v, s in zip(mags, sign))
    return StructureVector(spec.lam, vals)


def display_value(value: Fraction, p: Fraction) -> str:
    """Render a signed slice value at the configured exponent.

    Nonunit exponents show as (base, exponent) pairs like ``-(3/2)^1/2``;
    exact arithmetic always happens on the base.
    """
    if p == 1:
        return str(value)
    mag = f"({abs(value)})^{p}"
    return f"-{mag}" if value < 0 else mag


def center_is_lie(spec: CrossSectionSpec) -> bool:
    """Whether the center point satisfies the Jacobi system exactly."""
    from .jacobi import evaluate_jacobi, jacobi_system

    sys = jacobi_system(spec.lam)
    vec = StructureVector(spec.lam, spec.a0)
    return all(res == 0 for res in evaluate_jacobi(sys, vec))


# ---------------------------------------------------------------------------
# The projection map and its Jacobian
# ---------------------------------------------------------------------------


def f_value(spec: CrossSectionSpec, c, params: Sequence) -> tuple[float, ...]:
    """c * (pi_Y . Ln . a)(params), in floating point."""
    mags = point_at(spec, params)
    cf = float(Fraction(c))
    logs = [log(v) for v in mags]
    return tuple(cf * sum(w[k] * logs[k] for k in range(len(mags)))
                 for w in spec.W)


def f_jacobian(spec: CrossSectionSpec, params: Sequence,
               c=Fraction(1)) -> tuple[tuple[Fraction, ...], ...]:
    """Exact Jacobian: entry (i, j) is c * sum_k W_i[k] W_j[k] / a_k."""
    mags = point_at(spec, params)
    cf = Fraction(c)
    d = spec.dim
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            total = Fraction(0)
            for k in range(len(mags)):
                prod = spec.W[i][k] * spec.W[j][k]
                if prod:
                    total += Fraction(prod) / mags[k]
            row.append(cf * total)
        out.append(tuple(row))
    return tuple(out)


def dominance_certificate(spec: CrossSectionSpec, params: Sequence) -> bool:
    """Strict diagonal dominance of the exact Jacobian at one point."""
    jac = f_jacobian(spec, params)
    for i, row in enumerate(jac):
        off = sum(abs(x) for j, x in enumerate(row) if j != i)
        if not row[i] > off:
            return False
    return True


@dataclass(frozen=True)
class Certificate:
    certified: bool
    reason: str = ""


def lemma58_certificate(spec: CrossSectionSpec) -> Certificate:
    """Combinatorial injectivity certificate on the supports of W.

    Requires every direction to be a w-vector (two aligned pairs sharing a
    quadruple), W a basis of the full left null space, and the support
    conditions: each support owns a private position, and each position of a
    support appears at most once among the other supports.  Per-vector
    negation is immaterial since only supports are inspected.
    """
    if spec.dim == 0:
        return Certificate(True, "zero-dimensional slice")
    supports = []
    for w in spec.W:
        supports.append(_require_w_vector(spec.lam, w))
    y = root_matrix(spec.lam)
    null_dim = len(spec.lam) - rank(y)
    if rank(spec.W) != spec.dim or spec.dim != null_dim or \
            not span_equals(spec.W, left_null_basis(y)):
        return Certificate(False, "directions are not a null-space basis")
    for i, supp in enumerate(supports):
        others = [supports[j] for j in range(len(supports)) if j != i]
        if not any(all(pos not in o for o in others) for pos in supp):
            return Certificate(
                False, f"every position of direction {i + 1} recurs elsewhere")
        for pos in supp:
            if sum(pos in o for o in others) > 1:
                return Certificate(
                    False,
                    f"position {pos + 1} of direction {i + 1} recurs twice")
    return Certificate(True, "supports satisfy the dominance conditions")


def _require_w_vector(lam: IndexSet, w: IntVector) -> frozenset[int]:
    """Check w = e_a + e_b - e_c - e_d with both pairs aligned, same quadruple."""
    plus = [k for k, v in enumerate(w) if v == 1]
    minus = [k for k, v in enumerate(w) if v == -1]
    rest = [v for v in w if v not in (-1, 0, 1)]
    if rest or len(plus) != 2 or len(minus) != 2:
        raise WNotQuadrupleDerivedError(
            f"{w} is not of the form e_a + e_b - e_c - e_d")
    ts = lam.triples
    try:
        q_plus = quadruple_of(ts[plus[0]], ts[plus[1]])
        q_minus = quadruple_of(ts[minus[0]], ts[minus[1]])
    except (NotAlignedError, ModeError) as exc:
        raise WNotQuadrupleDerivedError(
            f"{w} does not join two aligned pairs") from exc
    if q_plus != q_minus:
        raise WNotQuadrupleDerivedError(
            f"{w} joins pairs with different quadruples")
    return frozenset(plus + minus)


# ---------------------------------------------------------------------------
# Branch solving at fixture scale
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveSolution:
    """solve_var = numerator(free)/denominator(free), coefficients ascending."""

    solve_var: int
    free_var: int
    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]

    def value(self, free_value) -> Fraction | None:
        den = eval_univar(self.denominator, free_value)
        if den == 0:
            return None
        return eval_univar(self.numerator, free_value) / den

    def params(self, free_value) -> tuple[Fraction, ...] | None:
        v = self.value(free_value)
        if v is None:
            return None
        out = [Fraction(0), Fraction(0)]
        out[self.free_var] = Fraction(free_value)
        out[self.solve_var] = v
        return tuple(out)

    def render(self) -> str:
        names = "st"
        num = _poly_str(self.numerator, names[self.free_var])
        den = _poly_str(self.denominator, names[self.free_var])
        body = num if den == "1" else f"({num})/({den})"
        return f"{names[self.solve_var]} = {body}"


def _poly_str(coeffs: Sequence[Fraction], name: str) -> str:
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            var = name if e == 1 else f"{name}^{e}"
            if c == 1:
                parts.append(var)
            elif c == -1:
                parts.append(f"-{var}")
            else:
                parts.append(f"{c}*{var}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


INCONSISTENT = "inconsistent"
POINTS = "points"
CURVE = "curve"
FULL_DOMAIN = "full-domain"


@dataclass(frozen=True)
class BranchSolution:
    sign: tuple[int, ...]
    status: str
    points: tuple[tuple[Fraction, ...], ...] = ()
    curve: CurveSolution | None = None
    note: str = ""


def branch_polynomial(spec: CrossSectionSpec, equation,
                      sign: Sequence[int]) -> tuple[Poly, list[int]]:
    """Substitute the masked slice into one equation; also return term signs."""
    d = spec.dim
    affines = {}
    poly = Poly.constant(0, d)
    tsigns = []
    for esign, p, r in equation.terms:
        for pos in (p, r):
            if pos not in affines:
                affines[pos] = Poly.affine(spec.a0[pos],
                                           [w[pos] for w in spec.W], d)
        tau = esign * (-1 if sign[p] else 1) * (-1 if sign[r] else 1)
        tsigns.append(tau)
        poly = poly + (affines[p] * affines[r]).scale(tau)
    return poly, tsigns


def solve_branch_fixtures(spec: CrossSectionSpec,
                          sys: JacobiSystem) -> list[BranchSolution]:
    """Solve the Jacobi system on every sign branch of the transversal.

    Supported shapes: at most two parameters, each equation a product-sum of
    affine slice entries (hence total degree two).  Everything is exact;
    shapes beyond that raise UnsupportedShapeError rather than approximate.
    """
    if sys.lam != spec.lam:
        raise DimensionMismatchError("system indexed by another set")
    if spec.dim > 2:
        raise UnsupportedShapeError(
            f"{spec.dim} parameters exceed the supported branch-solving scale")
    domain = delta_domain(spec)
    out = []
    for sign in spec.T:
        out.append(_solve_one_branch(spec, sys, sign, domain))
    return out


def _solve_one_branch(spec: CrossSectionSpec, sys: JacobiSystem,
                      sign: Sequence[int],
                      domain: PolytopeDomain) -> BranchSolution:
    d = spec.dim
    sign = tuple(sign)
    polys = []
    for eq in sys.equations:
        poly, tsigns = branch_polynomial(spec, eq, sign)
        if tsigns and len(set(tsigns)) == 1:
            return BranchSolution(sign, INCONSISTENT,
                                  note="all terms share one sign")
        if not poly.is_zero():
            polys.append(poly)
    if not polys:
        if d == 0:
            return BranchSolution(sign, POINTS, points=((),))
        return BranchSolution(sign, FULL_DOMAIN,
                              note="identity holds on the whole slice")
    if d == 0:
        return BranchSolution(sign, INCONSISTENT,
                              note="nonzero constant residual")
    if d == 1:
        return _solve_univariate(polys, sign, domain)
    return _solve_bivariate(polys, sign, domain)


def _solve_univariate(polys: list[Poly], sign, domain) -> BranchSolution:
    common: set[Fraction] | None = None
    for poly in polys:
        coeffs = [buck[0] if buck else Fraction(0)
                  for buck in poly.univariate_in(0)]
        roots = set(rational_roots(coeffs))
        common = roots if common is None else common & roots
    points = tuple(sorted((r,) for r in (common or set())
                          if domain.contains((r,))))
    if points:
        return BranchSolution(sign, POINTS, points=points)
    return BranchSolution(sign, INCONSISTENT, note="no admissible roots")


def _linear_solve_var(poly: Poly) -> tuple[int, list[Fraction], list[Fraction]] | None:
    """Find a variable of degree one: poly = den(u)*v + (-num(u))."""
    for v in (0, 1):
        if poly.degree_in(v) == 1:
            buckets = poly.univariate_in(v)
            den = trim(list(buckets[1]))
            num = [-c for c in buckets[0]]
            if den:
                return v, trim(num), den
    return None


def _substitute_curve(poly: Poly, solve_var: int, num: list[Fraction],
                      den: list[Fraction]) -> list[Fraction]:
    """Numerator of poly after v := num/den, cleared by den^deg."""
    buckets = poly.univariate_in(solve_var)
    deg = len(buckets) - 1
    total: list[Fraction] = []
    for e, coeff in enumerate(buckets):
        term = list(coeff) if coeff else []
        for _ in range(e):
            term = mul_univar(term, num)
        for _ in range(deg - e):
            term = mul_univar(term, den)
        total = add_univar(total, term)
    return trim(total)


def _vertical_line_meets_domain(domain: PolytopeDomain, free_var: int,
                                value: Fraction) -> bool:
    """Whether {params[free_var] = value} intersects the open domain."""
    other = 1 - free_var
    system: list[_Constraint] = []
    for q in domain.inequalities:
        const = q.const + q.coeffs[free_var] * value
        system.append(((q.coeffs[other],), const, True))
    return _fm_feasible(system, 1)


def _solve_bivariate(polys: list[Poly], sign, domain) -> BranchSolution:
    pick = None
    for idx, poly in enumerate(polys):
        found = _linear_solve_var(poly)
        if found:
            pick = (idx, *found)
            break
        # a genuinely univariate equation fixes one variable outright
        for v in (0, 1):
            if poly.degree_in(1 - v) == 0 and poly.degree_in(v) >= 1:
                return _solve_with_fixed_var(polys, idx, v, sign, domain)
    if pick is None:
        raise UnsupportedShapeError(
            "no equation is linear in either parameter")
    idx, solve_var, num, den = pick
    free_var = 1 - solve_var
    curve = CurveSolution(solve_var, free_var, tuple(num), tuple(den))
    # denominator root with vanishing numerator would add a vertical component
    if len(den) == 2:
        den_root = -den[0] / den[1]
        if eval_univar(num, den_root) == 0 and \
                _vertical_line_meets_domain(domain, free_var, den_root):
            raise UnsupportedShapeError(
                "solution set degenerates into several components")
    others = [p for i, p in enumerate(polys) if i != idx]
    reduced = [_substitute_curve(p, solve_var, num, den) for p in others]
    if all(not r for r in reduced):
        return BranchSolution(sign, CURVE, curve=curve)
    candidates: set[Fraction] | None = None
    for r in reduced:
        if not r:
            continue
        roots = set(rational_roots(r))
        candidates = roots if candidates is None else candidates & roots
    points = []
    for x in sorted(candidates or set()):
        params = curve.params(x)
        if params is None:
            den_points = _solve_on_vertical_line(polys, free_var, x)
            points.extend(den_points)
            continue
        if domain.contains(params) and \
                all(p.evaluate(params) == 0 for p in polys):
            points.append(params)
    points = tuple(pt for pt in sorted(set(points)) if domain.contains(pt))
    if points:
        return BranchSolution(sign, POINTS, points=points)
    return BranchSolution(sign, INCONSISTENT, note="no admissible roots")


def _solve_with_fixed_var(polys: list[Poly], idx: int, v: int, sign,
                          domain) -> BranchSolution:
    poly = polys[idx]
    coeffs = [buck[0] if buck else Fraction(0) for buck in poly.univariate_in(v)]
    points = []
    for root in rational_roots(coeffs):
        points.extend(_solve_on_vertical_line(polys, v, root))
    points = tuple(pt for pt in sorted(set(points)) if domain.contains(pt))
    if points:
        return BranchSolution(sign, POINTS, points=points)
    return BranchSolution(sign, INCONSISTENT, note="no admissible roots")


def _solve_on_vertical_line(polys: list[Poly], fixed_var: int,
                            value: Fraction) -> list[tuple[Fraction, ...]]:
    """Common rational zeros on {params[fixed_var] = value}."""
    other = 1 - fixed_var
    common: set[Fraction] | None = None
    unconstrained = True
    for poly in polys:
        buckets = poly.univariate_in(other)
        coeffs = trim([eval_univar(b, value) if b else Fraction(0)
                       for b in buckets])
        if not coeffs:
            continue
        unconstrained = False
        if len(coeffs) == 1:
            return []  # nonzero constant, no solutions on this line
        roots = set(rational_roots(coeffs))
        common = roots if common is None else common & roots
    if unconstrained:
        raise UnsupportedShapeError(
            "a full line of solutions beyond fixture scale")
    out = []
    for r in sorted(common or set()):
        params = [Fraction(0), Fraction(0)]
        params[fixed_var] = value
        params[other] = r
        out.append(tuple(params))
    return out


def lie_points(spec: CrossSectionSpec,
               branches: Iterable[BranchSolution]) -> list[StructureVector]:
    """Exact representatives from all finite branches."""
    out = []
    for branch in branches:
        if branch.status == POINTS:
            for params in branch.points:
                out.append(sigma_point(spec, branch.sign, params))
    return out


def curve_samples(spec: CrossSectionSpec, branch: BranchSolution,
                  count: int = 3) -> list[tuple[tuple[Fraction, ...], StructureVector]]:
    """Some exact on-curve points inside the domain, for reports and tests."""
    if branch.curve is None:
        return []
    domain = delta_domain(spec)
    out = []
    den = 2 * count + 5
    k = 1
    while len(out) < count and k < 100 * count:
        for candidate in (Fraction(k, den), Fraction(-k, den)):
            params = branch.curve.params(candidate)
            if params is not None and domain.contains(params):
                out.append((params, sigma_point(spec, branch.sign, params)))
                if len(out) >= count:
                    break
        k += 1
    return out
