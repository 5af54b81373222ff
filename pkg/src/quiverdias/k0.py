"""Integer shadow of the construction: dimension-vector classes, the
composition maps they dualize, and the translation/shift bookkeeping.

Classes live in the basis of simple modules, indexed row-major over the
vertex coordinates of a product of plain lines.  Matrices here are small
integer numpy arrays with explicit source/target basis descriptors, so
every composition is dimension- and basis-checked.

Sign conventions: the Nakayama matrix nu sends each projective class to the
matching injective class; the translation is tau = -nu (the shift
contributes a global -1 at this level, one sign for the whole product
category, not one per factor).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .families import interval_support, s_support
from .reports import Report, Witness, finish_report
from .supports import PLAIN, Support, contract

BasisDesc = tuple[int, ...]


def _basis_size(desc: BasisDesc) -> int:
    return math.prod(desc)


@dataclass
class K0Vector:
    """Integer vector in the simple-class basis described by axis lengths."""

    basis: BasisDesc
    values: np.ndarray

    def __post_init__(self) -> None:
        self.basis = tuple(self.basis)
        self.values = np.asarray(self.values, dtype=np.int64)
        if self.values.shape != (_basis_size(self.basis),):
            raise ValueError(f"vector of shape {self.values.shape} does not fit basis {self.basis}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, K0Vector)
            and self.basis == other.basis
            and np.array_equal(self.values, other.values)
        )


@dataclass
class K0Map:
    """Integer matrix between simple-class bases, with basis descriptors."""

    source: BasisDesc
    target: BasisDesc
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.source = tuple(self.source)
        self.target = tuple(self.target)
        self.matrix = np.asarray(self.matrix, dtype=np.int64)
        expected = (_basis_size(self.target), _basis_size(self.source))
        if self.matrix.shape != expected:
            raise ValueError(f"matrix of shape {self.matrix.shape} does not fit {expected}")

    @classmethod
    def identity(cls, desc: BasisDesc) -> "K0Map":
        return cls(desc, desc, np.eye(_basis_size(tuple(desc)), dtype=np.int64))

    def __matmul__(self, other: "K0Map") -> "K0Map":
        if self.source != other.target:
            raise ValueError(f"cannot compose: source {self.source} != target {other.target}")
        return K0Map(other.source, self.target, self.matrix @ other.matrix)

    def kron(self, other: "K0Map") -> "K0Map":
        """Act on the concatenated bases; row-major order matches np.kron."""
        return K0Map(
            self.source + other.source,
            self.target + other.target,
            np.kron(self.matrix, other.matrix),
        )

    def transposed(self) -> "K0Map":
        return K0Map(self.target, self.source, self.matrix.T)

    def scaled(self, k: int) -> "K0Map":
        return K0Map(self.source, self.target, k * self.matrix)

    def power(self, k: int) -> "K0Map":
        if self.source != self.target:
            raise ValueError("powers need equal source and target")
        return K0Map(self.source, self.target, np.linalg.matrix_power(self.matrix, k))

    def apply(self, vec: K0Vector) -> K0Vector:
        if vec.basis != self.source:
            raise ValueError(f"vector basis {vec.basis} != map source {self.source}")
        return K0Vector(self.target, self.matrix @ vec.values)

    def is_identity(self) -> bool:
        return self.source == self.target and np.array_equal(
            self.matrix, np.eye(self.matrix.shape[0], dtype=np.int64)
        )

    def to_doc(self) -> dict:
        """Report-format serialization: nested integer rows plus the basis
        descriptors the entries are indexed by."""
        return {
            "source": list(self.source),
            "target": list(self.target),
            "matrix": self.matrix.tolist(),
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, K0Map)
            and self.source == other.source
            and self.target == other.target
            and np.array_equal(self.matrix, other.matrix)
        )


@dataclass
class DiasElement:
    """Integer combination of the rank-n basis e_1 .. e_n."""

    arity: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        self.coeffs = np.asarray(self.coeffs, dtype=np.int64)
        if self.coeffs.shape != (self.arity,):
            raise ValueError(f"coefficients {self.coeffs.shape} do not fit arity {self.arity}")

    @classmethod
    def basis(cls, n: int, j: int) -> "DiasElement":
        if not 1 <= j <= n:
            raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
        v = np.zeros(n, dtype=np.int64)
        v[j - 1] = 1
        return cls(n, v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiasElement)
            and self.arity == other.arity
            and np.array_equal(self.coeffs, other.coeffs)
        )


def k0_class(support: Support) -> K0Vector:
    """Indicator vector of a support on a product of plain axes."""
    for k, ax in enumerate(support.shape.axes):
        if ax.polarity != PLAIN:
            raise ValueError(f"op axis present at position {k}; classes live over plain axes")
    lengths = support.shape.lengths
    values = np.zeros(_basis_size(lengths), dtype=np.int64)
    for p in support.points:
        idx = 0
        for c, length in zip(p, lengths):
            idx = idx * length + (c - 1)
        values[idx] = 1
    return K0Vector(lengths, values)


def nabla_k0(m: int, i: int, n: int) -> K0Map:
    """Matrix of the slot-insertion functor on classes.

    Column j is the class of the image of the j-th simple, computed from
    the images of projectives via the two-term resolution
    S_j = P_j - P_{j+1} (with P_{m+n} = 0).
    """
    if not 1 <= i <= m:
        raise ValueError(f"need 1 <= i <= m, got i={i}, m={m}")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    big = m + n - 1
    support = s_support(m, i, n)
    proj = [
        k0_class(contract(interval_support(big, "projective", j), 0, support, 0)).values
        for j in range(1, big + 1)
    ]
    proj.append(np.zeros(m * n, dtype=np.int64))
    cols = [proj[j] - proj[j + 1] for j in range(big)]
    return K0Map((big,), (m, n), np.column_stack(cols))


def dias_compose(m: int, i: int, n: int, j: int, k: int) -> int:
    """Basis index of the composition e_j at slot i with e_k."""
    if not 1 <= i <= m:
        raise ValueError(f"need 1 <= i <= m, got i={i}, m={m}")
    if not 1 <= j <= m:
        raise ValueError(f"need 1 <= j <= m, got j={j}, m={m}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if i > j:
        return j
    if i == j:
        return i + k - 1
    return j + n - 1


def dias_compose_elements(m: int, i: int, n: int, x: DiasElement, y: DiasElement) -> DiasElement:
    """Bilinear extension of dias_compose to integer combinations."""
    if x.arity != m or y.arity != n:
        raise ValueError(f"arities ({x.arity}, {y.arity}) do not match ({m}, {n})")
    out = np.zeros(m + n - 1, dtype=np.int64)
    for j in range(1, m + 1):
        if x.coeffs[j - 1] == 0:
            continue
        for k in range(1, n + 1):
            if y.coeffs[k - 1] == 0:
                continue
            out[dias_compose(m, i, n, j, k) - 1] += x.coeffs[j - 1] * y.coeffs[k - 1]
    return DiasElement(m + n - 1, out)


def dias_compose_matrix(m: int, i: int, n: int) -> K0Map:
    """The 0/1 matrix of composition at slot i, from basis (j, k) row-major."""
    mat = np.zeros((m + n - 1, m * n), dtype=np.int64)
    for j in range(1, m + 1):
        for k in range(1, n + 1):
            mat[dias_compose(m, i, n, j, k) - 1, (j - 1) * n + (k - 1)] = 1
    return K0Map((m, n), (m + n - 1,), mat)


def _matrix_witnesses(check: str, left: K0Map, right: K0Map) -> list[Witness]:
    if left.source != right.source or left.target != right.target:
        return [
            Witness(
                check,
                (),
                f"basis mismatch: {left.source}->{left.target} vs {right.source}->{right.target}",
            )
        ]
    diffs = np.argwhere(left.matrix != right.matrix)
    return [
        Witness(check, (int(r), int(c)), f"{left.matrix[r, c]} vs {right.matrix[r, c]}")
        for r, c in diffs
    ]


def duality_check(m: int, i: int, n: int) -> Report:
    """The transpose of the class-level insertion map is the composition map."""
    start = time.perf_counter()
    nab = nabla_k0(m, i, n)
    comp = dias_compose_matrix(m, i, n)
    witnesses = _matrix_witnesses("transpose_vs_compose", nab.transposed(), comp)
    params = {"m": m, "i": i, "n": n}
    return finish_report(
        "duality",
        params,
        int(np.count_nonzero(nab.matrix)),
        int(np.count_nonzero(comp.matrix)),
        witnesses,
        start,
    )


def nu_k0(n: int) -> K0Map:
    """The unique integer matrix sending each projective class to the
    matching injective class, in the simple basis."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    proj = np.zeros((n, n), dtype=np.int64)
    inj = np.zeros((n, n), dtype=np.int64)
    for j in range(1, n + 1):
        proj[j - 1 :, j - 1] = 1  # class of [j, n]
        inj[: j, j - 1] = 1  # class of [1, j]
    # inverse of the projective-class matrix: e_j = [P_j] - [P_{j+1}]
    proj_inv = np.eye(n, dtype=np.int64)
    for j in range(n - 1):
        proj_inv[j + 1, j] = -1
    return K0Map((n,), (n,), inj @ proj_inv)


def tau_k0(n: int) -> K0Map:
    """Translation on classes: minus the Nakayama matrix (shift sign -1)."""
    return nu_k0(n).scaled(-1)


def flip_k0(m: int, n: int) -> K0Map:
    """Permutation matrix exchanging the two factors: (a, b) to (b, a)."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    mat = np.zeros((n * m, m * n), dtype=np.int64)
    for a in range(m):
        for b in range(n):
            mat[b * m + a, a * n + b] = 1
    return K0Map((m, n), (n, m), mat)


def verify_border_k0(m: int, n: int) -> Report:
    """Class-level border identity, in both the nu form and the tau form.

    nu form:  nabla(m,1,n) . nu = flip . (nu x nu) . nabla(n,n,m).
    tau form: same with tau = -nu on every translation and one extra global
    -1 for the shift on the right side; the two forms are equivalent and
    both are checked, certifying the sign bookkeeping.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    start = time.perf_counter()
    nab_left = nabla_k0(m, 1, n)
    nab_right = nabla_k0(n, n, m)
    flip = flip_k0(n, m)
    lhs_nu = nab_left @ nu_k0(m + n - 1)
    rhs_nu = flip @ nu_k0(n).kron(nu_k0(m)) @ nab_right
    lhs_tau = nab_left @ tau_k0(m + n - 1)
    rhs_tau = (flip @ tau_k0(n).kron(tau_k0(m)) @ nab_right).scaled(-1)
    witnesses = _matrix_witnesses("nu_form", lhs_nu, rhs_nu) + _matrix_witnesses(
        "tau_form", lhs_tau, rhs_tau
    )
    params = {"m": m, "n": n}
    return finish_report(
        "border_k0",
        params,
        int(np.count_nonzero(lhs_nu.matrix)),
        int(np.count_nonzero(rhs_nu.matrix)),
        witnesses,
        start,
    )


def verify_inner_k0(m: int, n: int, i: int) -> Report:
    """Class-level inner identity, nu form and tau form.

    nu form: nabla(m,i,n) . nu = (nu x id) . nabla(m,i-1,n); the tau form
    carries one -1 on each side, so it holds iff the nu form does.
    """
    if not 2 <= i <= m:
        raise ValueError(f"need 2 <= i <= m, got i={i}, m={m}")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    start = time.perf_counter()
    ident = K0Map.identity((n,))
    lhs_nu = nabla_k0(m, i, n) @ nu_k0(m + n - 1)
    rhs_nu = nu_k0(m).kron(ident) @ nabla_k0(m, i - 1, n)
    lhs_tau = nabla_k0(m, i, n) @ tau_k0(m + n - 1)
    rhs_tau = tau_k0(m).kron(ident) @ nabla_k0(m, i - 1, n)
    witnesses = _matrix_witnesses("nu_form", lhs_nu, rhs_nu) + _matrix_witnesses(
        "tau_form", lhs_tau, rhs_tau
    )
    params = {"m": m, "n": n, "i": i}
    return finish_report(
        "inner_k0",
        params,
        int(np.count_nonzero(lhs_nu.matrix)),
        int(np.count_nonzero(rhs_nu.matrix)),
        witnesses,
        start,
    )


def dias_operad_axiom_check(m: int, n: int, p: int, i: int, j: int) -> Report:
    """Brute-force the parallel and nested composition axioms on all basis
    elements, for whichever of the two the slot pair (i, j) legally selects.

    Parallel (needs i < j <= m):
        (e_a o_j e_c) o_i e_b = (e_a o_i e_b) o_{j+n-1} e_c.
    Nested (needs i <= m, j <= n):
        e_a o_i (e_b o_j e_c) = (e_a o_i e_b) o_{i+j-1} e_c.
    """
    if min(m, n, p) < 1:
        raise ValueError(f"need m, n, p >= 1, got {m}, {n}, {p}")
    if i < 1:
        raise ValueError(f"need i >= 1, got i={i}")
    parallel = i < j <= m
    nested = i <= m and 1 <= j <= n
    if not (parallel or nested):
        raise ValueError(
            f"slots i={i}, j={j} select neither the parallel (i<j<=m) nor the "
            f"nested (i<=m, j<=n) axiom for m={m}, n={n}"
        )
    start = time.perf_counter()
    witnesses: list[Witness] = []
    parallel_checks = 0
    nested_checks = 0
    for a in range(1, m + 1):
        for b in range(1, n + 1):
            for c in range(1, p + 1):
                if parallel:
                    parallel_checks += 1
                    lhs = dias_compose(m + p - 1, i, n, dias_compose(m, j, p, a, c), b)
                    rhs = dias_compose(m + n - 1, j + n - 1, p, dias_compose(m, i, n, a, b), c)
                    if lhs != rhs:
                        witnesses.append(Witness("parallel", (a, b, c), f"{lhs} vs {rhs}"))
                if nested:
                    nested_checks += 1
                    lhs = dias_compose(m, i, n + p - 1, a, dias_compose(n, j, p, b, c))
                    rhs = dias_compose(m + n - 1, i + j - 1, p, dias_compose(m, i, n, a, b), c)
                    if lhs != rhs:
                        witnesses.append(Witness("nested", (a, b, c), f"{lhs} vs {rhs}"))
    params = {"m": m, "n": n, "p": p, "i": i, "j": j}
    return finish_report("dias_axioms", params, parallel_checks, nested_checks, witnesses, start)


def dias_tau(n: int) -> K0Map:
    """The order-(n+1) map on the rank-n dual basis: the transpose of tau.

    In coordinates it sends f_k to f_{k-1} - f_n for k >= 2 and f_1 to
    -f_n; only the transpose relation and the order are relied upon.
    """
    return tau_k0(n).transposed()


def matrix_order(mp: K0Map, limit: int) -> int | None:
    """Smallest k in [1, limit] with mp**k = id, or None."""
    if mp.source != mp.target:
        raise ValueError("order needs equal source and target")
    acc = mp
    for k in range(1, limit + 1):
        if acc.is_identity():
            return k
        acc = acc @ mp
    return None


def tau_order_check(n: int) -> Report:
    """Both translation shadows have order exactly n+1 (n >= 2), and power
    n+1 is the identity for every n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    start = time.perf_counter()
    witnesses: list[Witness] = []
    for label, mp in (("tau", tau_k0(n)), ("dias_tau", dias_tau(n))):
        order = matrix_order(mp, n + 1)
        if order is None:
            witnesses.append(Witness(label, (n,), f"power {n + 1} is not the identity"))
        elif n >= 2 and order != n + 1:
            witnesses.append(Witness(label, (n,), f"order {order}, expected {n + 1}"))
    return finish_report("tau_order", {"n": n}, n, n, witnesses, start)
