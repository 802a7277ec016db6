"""Exhaustive search for UJLA structures over small prime fields.

The scan walks every structure tensor of a given dimension over F_p in
lexicographic order, keeps the ones passing the UJLA suite under the
chosen semantics, and groups survivors into isomorphism classes by
brute-force enumeration of GL_d(F_p) basis changes.  Canonical class
representatives are the lexicographically least tensors of their orbits.

The scan partitions cleanly over index ranges; results are merged in
range order, so the outcome is identical for any worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional

from .algebra import Algebra
from .axioms import UJLA_SPECS, ujla_failure
from .fields import PrimeField
from .linalg import Matrix, NotInvertibleError, mat_inverse

SUPPORTED_DIMS = (1, 2)
SUPPORTED_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class SearchSpec:
    dim: int
    p: int
    semantics: str = "polynomial"

    def __post_init__(self):
        if self.dim not in SUPPORTED_DIMS:
            raise ValueError(f"search dimension must be one of {SUPPORTED_DIMS}, got {self.dim}")
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"search prime must be one of {SUPPORTED_PRIMES}, got {self.p}")
        if self.semantics not in ("polynomial", "pointwise"):
            raise ValueError(f"unknown semantics {self.semantics!r}")

    @property
    def total(self) -> int:
        return self.p ** (self.dim ** 3)


@dataclass(frozen=True)
class OrbitClass:
    representative: tuple  # flattened tensor, lexicographically least in its orbit
    orbit_size: int


@dataclass(frozen=True)
class ClassificationResult:
    spec: SearchSpec
    total: int
    survivors: tuple
    failure_counts: tuple  # ((identity name, count), ...) in suite order
    classes: tuple
    failures: Optional[tuple] = None  # ((flat index, identity name), ...) if recorded

    @property
    def ujla_count(self) -> int:
        return len(self.survivors)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def representative_algebras(self) -> list:
        return [
            tensor_algebra(self.spec.dim, self.spec.p, cls.representative,
                           name=f"ujla-d{self.spec.dim}-p{self.spec.p}-class{n}")
            for n, cls in enumerate(self.classes)
        ]


def flat_to_tensor(flat: tuple, dim: int) -> tuple:
    return tuple(
        tuple(tuple(flat[(i * dim + j) * dim + k] for k in range(dim)) for j in range(dim))
        for i in range(dim)
    )


def index_to_flat(n: int, p: int, length: int) -> tuple:
    digits = []
    for _ in range(length):
        digits.append(n % p)
        n //= p
    return tuple(reversed(digits))


def tensor_algebra(dim: int, p: int, flat: tuple, name: str = "") -> Algebra:
    field = PrimeField(p)
    return Algebra(
        name or f"tensor-d{dim}-p{p}",
        field, dim,
        tuple(f"e{i}" for i in range(dim)),
        flat_to_tensor(flat, dim),
    )


def _scan_range(args) -> tuple:
    dim, p, semantics, start, stop, record = args
    length = dim ** 3
    survivors = []
    counts = {spec.name: 0 for spec in UJLA_SPECS}
    failures = []
    for n in range(start, stop):
        flat = index_to_flat(n, p, length)
        alg = tensor_algebra(dim, p, flat)
        failed = ujla_failure(alg, semantics)
        if failed is None:
            survivors.append(flat)
        else:
            counts[failed] += 1
            if record:
                failures.append((n, failed))
    return survivors, counts, failures


def gl_matrices(p: int, dim: int) -> list:
    """All invertible dim x dim matrices over F_p with their inverses,
    in lexicographic order of the flattened matrix."""
    field = PrimeField(p)
    out = []

    def rec(rows, remaining):
        if remaining == 0:
            m = Matrix(field, tuple(tuple(r) for r in rows))
            try:
                inv = mat_inverse(m)
            except NotInvertibleError:
                return
            out.append((m.rows, inv.rows))
            return
        for row in _all_rows(p, dim):
            rec(rows + [row], remaining - 1)

    rec([], dim)
    return out


def _all_rows(p: int, dim: int) -> list:
    rows = [()]
    for _ in range(dim):
        rows = [r + (x,) for r in rows for x in range(p)]
    return rows


def transform_tensor(p: int, dim: int, flat: tuple, g_rows: tuple, ginv_rows: tuple) -> tuple:
    """Structure constants in the basis f_i = sum_r g[r][i] e_r."""
    tensor = flat_to_tensor(flat, dim)
    d = dim
    out = []
    for i in range(d):
        for j in range(d):
            # (f_i f_j)_m = sum_{r,s} g[r][i] g[s][j] c[r][s][m]
            prod = [0] * d
            for r in range(d):
                gri = g_rows[r][i]
                if gri == 0:
                    continue
                for s in range(d):
                    gsj = g_rows[s][j]
                    if gsj == 0:
                        continue
                    coeff = gri * gsj
                    row = tensor[r][s]
                    for m in range(d):
                        prod[m] += coeff * row[m]
            for k in range(d):
                out.append(sum(ginv_rows[k][m] * prod[m] for m in range(d)) % p)
    return tuple(out)


def orbit_partition(spec: SearchSpec, survivors: tuple) -> tuple:
    """Group survivors into GL-orbits; representatives are lex-least.

    The survivor set must be closed under basis change (isomorphism
    preserves every identity); a violation means the filter and the
    transform disagree and is reported as an internal error.
    """
    gl = gl_matrices(spec.p, spec.dim)
    survivor_set = set(survivors)
    seen = set()
    classes = []
    for t in survivors:
        if t in seen:
            continue
        orbit = set()
        for g_rows, ginv_rows in gl:
            t2 = transform_tensor(spec.p, spec.dim, t, g_rows, ginv_rows)
            if t2 not in survivor_set:
                raise RuntimeError(
                    "internal inconsistency: a UJLA tensor left the survivor set "
                    f"under basis change (tensor {t}, image {t2})"
                )
            orbit.add(t2)
        seen |= orbit
        rep = min(orbit)
        assert rep == t, "survivors are scanned in lex order, so the first hit is the least"
        classes.append(OrbitClass(representative=rep, orbit_size=len(orbit)))
    return tuple(classes)


def enumerate_ujla(
    spec: SearchSpec, workers: int = 1, record_failures: bool = False
) -> ClassificationResult:
    """Scan all p^(d^3) tensors, filter by the UJLA suite, reduce to orbits."""
    total = spec.total
    if workers <= 1:
        chunks = [_scan_range((spec.dim, spec.p, spec.semantics, 0, total, record_failures))]
    else:
        bounds = [total * i // (workers * 4) for i in range(workers * 4 + 1)]
        jobs = [
            (spec.dim, spec.p, spec.semantics, lo, hi, record_failures)
            for lo, hi in zip(bounds, bounds[1:]) if lo < hi
        ]
        with Pool(workers) as pool:
            chunks = pool.map(_scan_range, jobs)
    survivors = []
    counts = {s.name: 0 for s in UJLA_SPECS}
    failures = []
    for chunk_survivors, chunk_counts, chunk_failures in chunks:
        survivors.extend(chunk_survivors)
        for name, count in chunk_counts.items():
            counts[name] += count
        failures.extend(chunk_failures)
    classes = orbit_partition(spec, tuple(survivors))
    return ClassificationResult(
        spec=spec,
        total=total,
        survivors=tuple(survivors),
        failure_counts=tuple((s.name, counts[s.name]) for s in UJLA_SPECS),
        classes=classes,
        failures=tuple(failures) if record_failures else None,
    )


def are_isomorphic(a: Algebra, b: Algebra) -> Optional[Matrix]:
    """A basis-change matrix g with g(uv) = g(u)g(v), or None.

    Found by exhausting GL_d(F_p); supported for finite fields and
    dimension at most 2 (beyond that the enumeration is not desk scale).
    """
    if a.field != b.field:
        raise ValueError("isomorphism test requires a common field")
    if not a.field.is_finite:
        raise ValueError("isomorphism test is implemented for finite fields only")
    if a.dim != b.dim:
        return None
    if a.dim > 2:
        raise ValueError("isomorphism test supports dimension at most 2")
    p = a.field.p
    flat_a = tuple(int(x) for x in a.tensor_flat())
    flat_b = tuple(int(x) for x in b.tensor_flat())
    for g_rows, ginv_rows in gl_matrices(p, a.dim):
        if transform_tensor(p, a.dim, flat_b, g_rows, ginv_rows) == flat_a:
            return Matrix(a.field, g_rows)
    return None
