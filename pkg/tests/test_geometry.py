"""Chain/cell geometry: builders, config parsing, positions, validation."""

from __future__ import annotations

import json

import numpy as np
import pytest

from skinfx import (
    ChainSpec,
    UnitCellSpec,
    build_gauge_capacitance,
    cell_from_config,
    chain_from_cells,
    chain_from_config,
    chain_to_config,
    interface_chain,
    resonator_positions,
    solve_spectrum,
    uniform_chain,
)


def test_positions_uniform_two_resonators() -> None:
    chain = uniform_chain(2, 1.0)
    assert resonator_positions(chain) == [(0.0, 1.0), (2.0, 3.0)]


def test_positions_single_long_resonator() -> None:
    chain = uniform_chain(1, 0.5, length=2.0)
    assert resonator_positions(chain) == [(0.0, 2.0)]


def test_positions_ragged_spacings() -> None:
    chain = ChainSpec(lengths=[1.0, 1.0, 1.0], spacings=[1.0, 2.0],
                      gammas=[0.0, 0.0, 0.0])
    assert resonator_positions(chain) == [(0.0, 1.0), (2.0, 3.0), (5.0, 6.0)]


def test_uniform_chain_fields() -> None:
    chain = uniform_chain(3, 0.5, length=1.2, spacing=0.8, delta=0.002, v_b=2.0)
    assert chain.lengths == [1.2, 1.2, 1.2]
    assert chain.spacings == [0.8, 0.8]
    assert chain.gammas == [0.5, 0.5, 0.5]
    assert chain.delta == 0.002 and chain.v_b == 2.0
    assert chain.size == 3


def test_config_shorthand_expansion() -> None:
    chain = chain_from_config('{"N": 3, "gamma": 1.0, "length": 1.0, "spacing": 1.0}')
    assert chain.lengths == [1.0, 1.0, 1.0]
    assert chain.spacings == [1.0, 1.0]
    assert chain.gammas == [1.0, 1.0, 1.0]


def test_config_shorthand_defaults() -> None:
    chain = chain_from_config({"N": 2})
    assert chain.lengths == [1.0, 1.0]
    assert chain.gammas == [0.0, 0.0]
    assert chain.delta == 0.001 and chain.v_b == 1.0


def test_config_explicit_arrays_passthrough() -> None:
    doc = {"lengths": [1.0, 2.0], "spacings": [0.5], "gammas": [0.3, -0.3],
           "delta": 0.01}
    chain = chain_from_config(json.dumps(doc))
    assert chain.lengths == [1.0, 2.0]
    assert chain.spacings == [0.5]
    assert chain.gammas == [0.3, -0.3]
    assert chain.delta == 0.01


def test_config_scalar_gamma_broadcasts_over_arrays() -> None:
    chain = chain_from_config({"lengths": [1.0, 1.0], "spacings": [2.0], "gamma": 0.7})
    assert chain.gammas == [0.7, 0.7]


def test_config_speeds_are_re_im_pairs() -> None:
    doc = {"N": 2, "gamma": 0.0, "speeds": [[1.0, 1.38], [1.0, -1.42]]}
    chain = chain_from_config(doc)
    assert chain.speeds == [1.0 + 1.38j, 1.0 - 1.42j]


def test_config_round_trip_is_identity() -> None:
    chain = ChainSpec(lengths=[1.0, 1.5, 0.7], spacings=[1.0, 2.0],
                      gammas=[0.4, -0.2, 0.0], delta=0.003, v_b=1.1,
                      speeds=[1 + 1j, 2.0, 0.5 - 0.25j])
    again = chain_from_config(json.dumps(chain_to_config(chain)))
    assert again == chain
    assert chain_to_config(again) == chain_to_config(chain)


@pytest.mark.parametrize("doc,message", [
    ({"N": 0, "gamma": 1.0}, "N must be at least 1"),
    ({"N": 2, "lengths": [1.0, 1.0]}, "shorthand N cannot be mixed with explicit arrays"),
    ({"gamma": 1.0}, "configuration needs lengths or the shorthand N"),
    ({"lengths": [1.0, 1.0], "spacings": [1.0], "length": 2.0},
     "scalar length requires the shorthand N"),
    ({"N": 2, "foo": 3}, r"unknown configuration keys: \['foo'\]"),
    ({"lengths": [1.0, -1.0], "spacings": [1.0]}, "non-positive length"),
    ({"lengths": [1.0, 1.0], "spacings": [0.0]}, "non-positive spacing"),
    ({"lengths": [1.0, 1.0], "spacings": [1.0, 1.0]}, "expected N-1 spacings"),
    ({"lengths": [1.0], "spacings": [], "gammas": [1.0, 2.0]},
     "expected one gamma per resonator"),
    ({"N": 2, "delta": 0.0}, "non-positive delta"),
    ({"N": 2, "v_b": -1.0}, "non-positive v_b"),
    ({"N": 2, "speeds": [[1.0, 0.0]]}, "expected one speed per resonator"),
])
def test_config_rejects_bad_documents(doc, message) -> None:
    with pytest.raises(ValueError, match=message):
        chain_from_config(doc)


def test_config_rejects_non_object_documents() -> None:
    with pytest.raises(ValueError, match="configuration must be a JSON object"):
        chain_from_config("[1, 2, 3]")
    with pytest.raises(json.JSONDecodeError):
        chain_from_config("{not json")


def test_cell_config_parses_nested_cell_object() -> None:
    cell = cell_from_config('{"cell": {"lengths": [1.0], "spacings": [1.0]}, "gamma": 1.0}')
    assert cell.lengths == [1.0]
    assert cell.spacings == [1.0]
    assert cell.gamma == 1.0
    assert cell.size == 1
    assert cell.cell_length == 2.0


def test_cell_config_rejects_bad_documents() -> None:
    with pytest.raises(ValueError, match='cell configuration needs a "cell" object'):
        cell_from_config({"gamma": 1.0})
    with pytest.raises(ValueError, match=r"unknown cell keys: \['gamma'\]"):
        cell_from_config({"cell": {"lengths": [1.0], "spacings": [1.0], "gamma": 1.0}})
    with pytest.raises(ValueError, match=r"unknown configuration keys: \['N'\]"):
        cell_from_config({"cell": {"lengths": [1.0], "spacings": [1.0]}, "N": 4})


def test_cell_requires_k_spacings() -> None:
    # the last spacing links the cell to its translate, so K of them
    with pytest.raises(ValueError, match="expected K spacings"):
        UnitCellSpec(lengths=[1.0, 1.0], spacings=[1.0], gamma=0.0)


def test_chain_from_cells_drops_final_link() -> None:
    cell = UnitCellSpec(lengths=[1.0, 1.0], spacings=[1.0, 2.0], gamma=0.5,
                        speeds=[1 + 1j, 1 - 1j])
    chain = chain_from_cells(cell, 3)
    assert chain.size == 6
    assert chain.lengths == [1.0] * 6
    assert chain.spacings == [1.0, 2.0, 1.0, 2.0, 1.0]
    assert chain.gammas == [0.5] * 6
    assert chain.speeds == [1 + 1j, 1 - 1j] * 3


def test_chain_from_cells_rejects_empty() -> None:
    cell = UnitCellSpec(lengths=[1.0], spacings=[1.0], gamma=1.0)
    with pytest.raises(ValueError, match="need at least one cell"):
        chain_from_cells(cell, 0)


def test_interface_chain_sign_layout() -> None:
    chain = interface_chain(1, 1.0)
    assert chain.gammas == [-1.0, 1.0, 1.0]
    chain = interface_chain(2, 0.5)
    assert chain.gammas == [-0.5, -0.5, 0.5, 0.5, 0.5]
    assert chain.size == 5


def test_interface_chain_rejects_degenerate_input() -> None:
    with pytest.raises(ValueError, match="gamma = 0 defines no interface"):
        interface_chain(3, 0.0)
    with pytest.raises(ValueError, match="n must be at least 1"):
        interface_chain(0, 1.0)


def test_interface_chain_localizes_at_the_interface() -> None:
    n = 5
    chain = interface_chain(n, 1.0)
    result = solve_spectrum(build_gauge_capacitance(chain))
    mags = np.abs(result.vectors)
    nontrivial = [j for j in range(chain.size)
                  if abs(result.lambdas[j]) > 1e-8 * abs(result.lambdas[-1])]
    near = sum(1 for j in nontrivial if abs(int(np.argmax(mags[:, j])) - n) <= 2)
    assert near >= len(nontrivial) - 2
