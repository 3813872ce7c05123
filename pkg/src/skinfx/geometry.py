"""Resonator-chain and unit-cell geometry.

A chain is a row of disjoint one-dimensional resonators: resonator i is the
interval (x_i^L, x_i^R) with length ell_i, separated from the next one by a
gap of width s_i. Coordinates are anchored at x_1^L = 0. Each resonator
carries its own gauge parameter gamma_i; uniform chains repeat one value.

A unit cell describes one period of an infinite chain: K resonators and K
spacings, the last spacing linking the cell to its translate. The cell
length L = sum(lengths) + sum(spacings) sets the Brillouin zone
(-pi/L, pi/L].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def _as_positive_list(values, name: str) -> list[float]:
    out = [float(v) for v in values]
    for v in out:
        if not v > 0:
            raise ValueError(f"non-positive {name}")
    return out


@dataclass(frozen=True)
class ChainSpec:
    """Geometry and physical parameters of a finite resonator chain."""

    lengths: list[float]
    spacings: list[float]
    gammas: list[float]
    delta: float = 0.001
    v_b: float = 1.0
    speeds: list[complex] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lengths", _as_positive_list(self.lengths, "length"))
        object.__setattr__(self, "spacings", _as_positive_list(self.spacings, "spacing"))
        object.__setattr__(self, "gammas", [float(g) for g in self.gammas])
        n = len(self.lengths)
        if n < 1:
            raise ValueError("chain needs at least one resonator")
        if len(self.spacings) != n - 1:
            raise ValueError("expected N-1 spacings")
        if len(self.gammas) != n:
            raise ValueError("expected one gamma per resonator")
        if not self.delta > 0:
            raise ValueError("non-positive delta")
        if not self.v_b > 0:
            raise ValueError("non-positive v_b")
        if self.speeds is not None:
            speeds = [complex(v) for v in self.speeds]
            if len(speeds) != n:
                raise ValueError("expected one speed per resonator")
            object.__setattr__(self, "speeds", speeds)

    @property
    def size(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class UnitCellSpec:
    """One period of an infinite chain.

    spacings has K entries; the K-th spacing separates the last resonator of
    one cell from the first resonator of the next.
    """

    lengths: list[float]
    spacings: list[float]
    gamma: float = 0.0
    delta: float = 0.001
    v_b: float = 1.0
    speeds: list[complex] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lengths", _as_positive_list(self.lengths, "length"))
        object.__setattr__(self, "spacings", _as_positive_list(self.spacings, "spacing"))
        k = len(self.lengths)
        if k < 1:
            raise ValueError("cell needs at least one resonator")
        if len(self.spacings) != k:
            raise ValueError("expected K spacings (the last links the cell to its translate)")
        if not self.delta > 0:
            raise ValueError("non-positive delta")
        if not self.v_b > 0:
            raise ValueError("non-positive v_b")
        if self.speeds is not None:
            speeds = [complex(v) for v in self.speeds]
            if len(speeds) != k:
                raise ValueError("expected one speed per resonator")
            object.__setattr__(self, "speeds", speeds)

    @property
    def size(self) -> int:
        return len(self.lengths)

    @property
    def cell_length(self) -> float:
        return sum(self.lengths) + sum(self.spacings)


_CHAIN_KEYS = {"lengths", "spacings", "gammas", "N", "length", "spacing", "gamma",
               "delta", "v_b", "speeds"}
_CELL_KEYS = {"cell", "gamma", "delta", "v_b", "speeds"}


def _load_document(document) -> dict:
    if isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, dict):
        raise ValueError("configuration must be a JSON object")
    return document


def _parse_speeds(raw) -> list[complex]:
    # speeds are serialized as [re, im] pairs
    out = []
    for item in raw:
        re, im = item
        out.append(complex(float(re), float(im)))
    return out


def chain_from_config(document) -> ChainSpec:
    """Parse a chain configuration (dict or JSON text) into a ChainSpec.

    Either explicit arrays "lengths"/"spacings"/"gammas" or the uniform
    shorthand "N" with scalar "length"/"spacing"/"gamma". Unknown keys are
    rejected.
    """
    doc = _load_document(document)
    unknown = set(doc) - _CHAIN_KEYS
    if unknown:
        raise ValueError(f"unknown configuration keys: {sorted(unknown)}")

    if "N" in doc:
        n = int(doc["N"])
        if n < 1:
            raise ValueError("N must be at least 1")
        if "lengths" in doc or "spacings" in doc or "gammas" in doc:
            raise ValueError("shorthand N cannot be mixed with explicit arrays")
        lengths = [float(doc.get("length", 1.0))] * n
        spacings = [float(doc.get("spacing", 1.0))] * (n - 1)
        gammas = [float(doc.get("gamma", 0.0))] * n
    else:
        if "lengths" not in doc:
            raise ValueError("configuration needs lengths or the shorthand N")
        lengths = list(doc["lengths"])
        spacings = list(doc.get("spacings", []))
        if "gammas" in doc:
            gammas = list(doc["gammas"])
        else:
            gammas = [float(doc.get("gamma", 0.0))] * len(lengths)
        for key in ("length", "spacing"):
            if key in doc:
                raise ValueError(f"scalar {key} requires the shorthand N")

    speeds = _parse_speeds(doc["speeds"]) if "speeds" in doc else None
    return ChainSpec(lengths=lengths, spacings=spacings, gammas=gammas,
                     delta=float(doc.get("delta", 0.001)),
                     v_b=float(doc.get("v_b", 1.0)),
                     speeds=speeds)


def chain_to_config(chain: ChainSpec) -> dict:
    """Serialize a ChainSpec into the explicit-array configuration form."""
    doc = {
        "lengths": list(chain.lengths),
        "spacings": list(chain.spacings),
        "gammas": list(chain.gammas),
        "delta": chain.delta,
        "v_b": chain.v_b,
    }
    if chain.speeds is not None:
        doc["speeds"] = [[v.real, v.imag] for v in chain.speeds]
    return doc


def cell_from_config(document) -> UnitCellSpec:
    """Parse a unit-cell configuration: {"cell": {"lengths", "spacings"}, "gamma", ...}."""
    doc = _load_document(document)
    unknown = set(doc) - _CELL_KEYS
    if unknown:
        raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
    if "cell" not in doc or not isinstance(doc["cell"], dict):
        raise ValueError('cell configuration needs a "cell" object')
    cell = doc["cell"]
    unknown = set(cell) - {"lengths", "spacings"}
    if unknown:
        raise ValueError(f"unknown cell keys: {sorted(unknown)}")
    speeds = _parse_speeds(doc["speeds"]) if "speeds" in doc else None
    return UnitCellSpec(lengths=list(cell.get("lengths", [])),
                        spacings=list(cell.get("spacings", [])),
                        gamma=float(doc.get("gamma", 0.0)),
                        delta=float(doc.get("delta", 0.001)),
                        v_b=float(doc.get("v_b", 1.0)),
                        speeds=speeds)


def resonator_positions(chain: ChainSpec) -> list[tuple[float, float]]:
    """Endpoint pairs (x_i^L, x_i^R) with x_1^L = 0."""
    positions = []
    x = 0.0
    for i, ell in enumerate(chain.lengths):
        positions.append((x, x + ell))
        x += ell
        if i < len(chain.spacings):
            x += chain.spacings[i]
    return positions


def uniform_chain(n: int, gamma: float, length: float = 1.0, spacing: float = 1.0,
                  delta: float = 0.001, v_b: float = 1.0) -> ChainSpec:
    """Chain of n identical resonators with one gauge value throughout."""
    return ChainSpec(lengths=[length] * n, spacings=[spacing] * (n - 1),
                     gammas=[gamma] * n, delta=delta, v_b=v_b)


def interface_chain(n: int, gamma: float, length: float = 1.0, spacing: float = 1.0,
                    delta: float = 0.001, v_b: float = 1.0) -> ChainSpec:
    """Chain of N = 2n+1 resonators with the gauge sign switching at site n+1.

    The gauge is -gamma on the first n resonators and +gamma on the remaining
    n+1, so both halves pump their modes toward the sign change and the
    spectrum localizes around the interface index n+1 instead of an outer
    edge.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    gamma = float(gamma)
    if gamma == 0.0:
        raise ValueError("gamma = 0 defines no interface")
    total = 2 * n + 1
    gammas = [-gamma] * n + [gamma] * (n + 1)
    return ChainSpec(lengths=[length] * total, spacings=[spacing] * (total - 1),
                     gammas=gammas, delta=delta, v_b=v_b)


def chain_from_cells(cell: UnitCellSpec, n_cells: int) -> ChainSpec:
    """Finite chain made of n_cells repetitions of a unit cell.

    The linking spacing after the last cell is dropped (open chain of
    n_cells * K resonators).
    """
    if n_cells < 1:
        raise ValueError("need at least one cell")
    lengths = list(cell.lengths) * n_cells
    spacings = (list(cell.spacings) * n_cells)[:-1]
    gammas = [cell.gamma] * (cell.size * n_cells)
    speeds = list(cell.speeds) * n_cells if cell.speeds is not None else None
    return ChainSpec(lengths=lengths, spacings=spacings, gammas=gammas,
                     delta=cell.delta, v_b=cell.v_b, speeds=speeds)
