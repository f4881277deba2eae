"""Exact arithmetic of stratified (Carnot) groups in exponential coordinates.

The concrete groups shipped are the abelian ones ``R^n`` (n = 1, 2, 3) and
the first Heisenberg group ``H^1`` with layers (2, 1).  Products use the
step-2 Baker-Campbell-Hausdorff formula, which is exact for every group
accepted here; specs of step >= 3 round-trip through the data type but are
rejected by the kernel backends.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GroupMismatchError

__all__ = [
    "GroupSpec",
    "GroupElement",
    "euclidean",
    "heisenberg",
    "group_product",
    "group_inverse",
    "dilate",
    "homogeneous_norm",
    "horizontal_vector_coeffs",
    "cc_distance_surrogate",
    "sphere_sample",
    "spec_to_json",
    "spec_from_json",
]

# Coefficient of the second-layer penalty in the Koranyi gauge
# (|x| = (|z|^4 + KORANYI_BETA * |c|^2)^(1/4) on a step-2 group).
KORANYI_BETA = 16.0


@dataclass(frozen=True)
class GroupSpec:
    """Immutable description of a stratified group.

    Attributes
    ----------
    name : str
        Identifier ("r1", "r2", "r3", "h1", ...).
    layer_dims : tuple of int
        Dimensions (m_1, ..., m_k) of the layers.
    bracket_table : ndarray of shape (m_1, m_1, m_2)
        Structure constants of [V_1, V_1] -> V_2, antisymmetric in the
        first two slots.  All-zero for abelian groups.
    norm_kind : str
        "euclidean" or "koranyi".
    """

    name: str
    layer_dims: tuple[int, ...]
    bracket_table: np.ndarray = field(repr=False, compare=False)
    norm_kind: str = "euclidean"

    def __post_init__(self):
        dims = tuple(int(m) for m in self.layer_dims)
        if not dims or any(m <= 0 for m in dims):
            raise DomainError(f"layer_dims must be positive, got {dims}")
        object.__setattr__(self, "layer_dims", dims)
        if self.norm_kind not in ("euclidean", "koranyi"):
            raise DomainError(f"unknown norm_kind {self.norm_kind!r}")
        m1 = dims[0]
        m2 = dims[1] if len(dims) > 1 else 0
        table = np.asarray(self.bracket_table, dtype=float)
        if table.shape != (m1, m1, m2):
            raise DomainError(
                f"bracket_table shape {table.shape} != {(m1, m1, m2)}"
            )
        if not np.allclose(table, -np.swapaxes(table, 0, 1)):
            raise DomainError("bracket_table must be antisymmetric")
        table.flags.writeable = False
        object.__setattr__(self, "bracket_table", table)

    @property
    def step(self) -> int:
        return len(self.layer_dims)

    @property
    def n(self) -> int:
        """Topological dimension."""
        return sum(self.layer_dims)

    @property
    def Q(self) -> int:
        """Homogeneous dimension, sum of i * dim(V_i)."""
        return sum((i + 1) * m for i, m in enumerate(self.layer_dims))

    @property
    def dilation_weights(self) -> np.ndarray:
        """Per-coordinate homogeneity degrees (1 for V_1, 2 for V_2, ...)."""
        return np.repeat(
            np.arange(1, self.step + 1), self.layer_dims
        ).astype(float)

    def layer_slices(self) -> list[slice]:
        offs = np.concatenate([[0], np.cumsum(self.layer_dims)])
        return [slice(int(a), int(b)) for a, b in zip(offs[:-1], offs[1:])]

    def __eq__(self, other):
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return (
            self.name == other.name
            and self.layer_dims == other.layer_dims
            and self.norm_kind == other.norm_kind
        )

    def __hash__(self):
        return hash((self.name, self.layer_dims, self.norm_kind))


@dataclass(frozen=True)
class GroupElement:
    """A point of the group in exponential coordinates of the first kind."""

    coords: np.ndarray
    spec: GroupSpec

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float).reshape(-1)
        if c.size != self.spec.n:
            raise DomainError(
                f"coords length {c.size} != group dimension {self.spec.n}"
            )
        object.__setattr__(self, "coords", c)

    def layer(self, i: int) -> np.ndarray:
        """Coordinates of layer i (1-based)."""
        return self.coords[self.spec.layer_slices()[i - 1]]


def _builtin(name: str) -> GroupSpec:
    if name in ("r1", "r2", "r3"):
        n = int(name[1])
        return GroupSpec(name, (n,), np.zeros((n, n, 0)), "euclidean")
    if name == "h1":
        table = np.zeros((2, 2, 1))
        table[0, 1, 0] = 1.0
        table[1, 0, 0] = -1.0
        return GroupSpec("h1", (2, 1), table, "koranyi")
    raise DomainError(f"unknown builtin group {name!r}")


def euclidean(n: int) -> GroupSpec:
    """Abelian group R^n (n in 1..3)."""
    if n not in (1, 2, 3):
        raise DomainError("euclidean backends ship for n in {1, 2, 3}")
    return _builtin(f"r{n}")


def heisenberg() -> GroupSpec:
    """First Heisenberg group: layers (2, 1), Q = 4, Koranyi gauge."""
    return _builtin("h1")


def group_from_name(name: str) -> GroupSpec:
    return _builtin(name)


# ---------------------------------------------------------------------------
# Coordinate-level operations.  These work on arrays of shape (..., n) so the
# same code serves single elements and whole lattices.


def product_coords(spec: GroupSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """BCH product in coordinates, exact for step <= 2."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = x + y
    if spec.step >= 2:
        s1, s2 = spec.layer_slices()[0], spec.layer_slices()[1]
        # half-bracket term: 1/2 * T[i, j, k] x_i y_j
        corr = 0.5 * np.einsum(
            "ijk,...i,...j->...k", spec.bracket_table, x[..., s1], y[..., s1]
        )
        out = out.copy()
        out[..., s2] += corr
    return out


def inverse_coords(spec: GroupSpec, x: np.ndarray) -> np.ndarray:
    return -np.asarray(x, dtype=float)


def dilate_coords(spec: GroupSpec, lam: float, x: np.ndarray) -> np.ndarray:
    if lam <= 0:
        raise DomainError(f"dilation factor must be positive, got {lam}")
    w = spec.dilation_weights
    return np.asarray(x, dtype=float) * lam**w


def norm_coords(spec: GroupSpec, x: np.ndarray) -> np.ndarray:
    """Homogeneous norm of coordinate array(s) of shape (..., n)."""
    x = np.asarray(x, dtype=float)
    if spec.norm_kind == "euclidean":
        if spec.step != 1:
            raise DomainError("euclidean norm is only homogeneous on step-1 groups")
        return np.sqrt(np.sum(x * x, axis=-1))
    s1, s2 = spec.layer_slices()[0], spec.layer_slices()[1]
    h2 = np.sum(x[..., s1] ** 2, axis=-1)
    v2 = np.sum(x[..., s2] ** 2, axis=-1)
    return (h2 * h2 + KORANYI_BETA * v2) ** 0.25


def horizontal_coeff_fields(spec: GroupSpec, i: int, x: np.ndarray) -> np.ndarray:
    """Coefficients of the left-invariant field X_i at points x, shape (..., n).

    With exponential coordinates of the first kind and the step-2 BCH law,
    X_i = d/dx_i + 1/2 sum_k (T[j, i, k] x_j) d/dx_{2,k}, so X_i(0) = e_i.
    """
    m1 = spec.layer_dims[0]
    if not 1 <= i <= m1:
        raise DomainError(f"horizontal index {i} outside 1..{m1}")
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape)
    out[..., i - 1] = 1.0
    if spec.step >= 2:
        s1, s2 = spec.layer_slices()[0], spec.layer_slices()[1]
        out[..., s2] = 0.5 * np.einsum(
            "jk,...j->...k", spec.bracket_table[:, i - 1, :], x[..., s1]
        )
    return out


# ---------------------------------------------------------------------------
# Element-level wrappers.


def _check_same_spec(x: GroupElement, y: GroupElement):
    if x.spec != y.spec:
        raise GroupMismatchError(
            f"elements live on different groups: {x.spec.name} vs {y.spec.name}"
        )


def group_product(x: GroupElement, y: GroupElement) -> GroupElement:
    """x * y.  Associative; the zero vector is the identity."""
    _check_same_spec(x, y)
    return GroupElement(product_coords(x.spec, x.coords, y.coords), x.spec)


def group_inverse(x: GroupElement) -> GroupElement:
    """x^{-1} = -x in exponential coordinates."""
    return GroupElement(inverse_coords(x.spec, x.coords), x.spec)


def dilate(lam: float, x: GroupElement) -> GroupElement:
    """Anisotropic dilation: layer i scaled by lam**i."""
    return GroupElement(dilate_coords(x.spec, lam, x.coords), x.spec)


def homogeneous_norm(x: GroupElement) -> float:
    """Symmetric homogeneous norm: |delta_lam x| = lam |x|, |x^{-1}| = |x|."""
    return float(norm_coords(x.spec, x.coords))


def horizontal_vector_coeffs(i: int, x: GroupElement) -> np.ndarray:
    """Coefficient vector of X_i at x with respect to d/dx_j."""
    return horizontal_coeff_fields(x.spec, i, x.coords)


def cc_distance_surrogate(x: GroupElement) -> float:
    """Cheap gauge comparable to the Carnot-Caratheodory distance from 0.

    sum_i |xi_i|^(1/i); used only to record equivalence constants against
    the homogeneous norm, never asserted against external values.
    """
    total = 0.0
    for i, sl in enumerate(x.spec.layer_slices(), start=1):
        total += float(np.linalg.norm(x.coords[sl])) ** (1.0 / i)
    return total


def sphere_sample(spec: GroupSpec, count: int, seed: int) -> list[GroupElement]:
    """Deterministic points on the unit shell of the homogeneous norm.

    Draws Gaussian directions from a counter-based generator and projects
    radially with the dilation, so every output has |omega| = 1 up to
    floating error.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    coords = sphere_sample_coords(spec, count, seed)
    return [GroupElement(c, spec) for c in coords]


def sphere_sample_coords(spec: GroupSpec, count: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(seed))
    out = np.empty((count, spec.n))
    filled = 0
    while filled < count:
        batch = rng.standard_normal((count - filled, spec.n))
        r = norm_coords(spec, batch)
        good = r > 1e-8
        batch = batch[good]
        r = r[good]
        w = spec.dilation_weights
        batch = batch * (1.0 / r[:, None]) ** w[None, :]
        out[filled : filled + batch.shape[0]] = batch
        filled += batch.shape[0]
    return out


# ---------------------------------------------------------------------------
# JSON serialization.  bracket_table is implied by the name for builtins.


def spec_to_json(spec: GroupSpec) -> str:
    return json.dumps(
        {
            "name": spec.name,
            "layer_dims": list(spec.layer_dims),
            "step": spec.step,
            "norm_kind": spec.norm_kind,
        }
    )


def spec_from_json(text: str) -> GroupSpec:
    data = json.loads(text)
    spec = _builtin(data["name"])
    if list(spec.layer_dims) != list(data["layer_dims"]):
        raise DomainError("layer_dims in JSON do not match builtin group")
    if data.get("step", spec.step) != spec.step:
        raise DomainError("step in JSON does not match builtin group")
    if data.get("norm_kind", spec.norm_kind) != spec.norm_kind:
        raise DomainError("norm_kind in JSON does not match builtin group")
    return spec
